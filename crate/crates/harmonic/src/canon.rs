//! Canonical form: a labeling-independent string identifying an isomorphism
//! class, used to deduplicate enumerations and to decide claims of the shape
//! "the extremal tree is exactly this family member".
//!
//! The canonical string is the graph6 encoding of the relabeling that
//! lexicographically maximizes the upper-triangle adjacency bitstring.
//! Rather than scanning all n! permutations, a branch-and-bound search
//! places one vertex at a time; at each step only candidates realizing the
//! maximal next bit-chunk can lie on a maximal labeling, and candidates
//! equivalent under a transposition automorphism are explored once.

use crate::graph::{Graph, GraphError};
use crate::graph6::pack_graph6;

pub const MAX_CANON_N: usize = 16;

pub fn canonical_form(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > MAX_CANON_N {
        return Err(GraphError::TooLargeForCanonical { n, max: MAX_CANON_N });
    }
    let mut rows = vec![0u16; n];
    for (u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    Ok(canonical_rows(n, &rows))
}

/// Canonical graph6 string for an adjacency given as bitmask rows.
/// Callers guarantee n <= 16 and symmetric, loop-free rows.
pub(crate) fn canonical_rows(n: usize, rows: &[u16]) -> String {
    debug_assert!(n <= MAX_CANON_N && rows.len() == n);
    if n <= 1 {
        return pack_graph6(n, |_, _| false);
    }
    let mut search = Search {
        rows,
        n,
        placed: Vec::with_capacity(n),
        chunks: Vec::with_capacity(n - 1),
        best: None,
    };
    search.descend(0);
    let best = search.best.expect("at least one labeling explored");
    // chunks[j] holds column j of the canonical adjacency (chunks[0] is the
    // empty chunk of the first placement), placed[0] at the most significant
    // bit of each chunk
    pack_graph6(n, |i, j| best[j] >> (j - 1 - i) & 1 == 1)
}

struct Search<'a> {
    rows: &'a [u16],
    n: usize,
    placed: Vec<usize>,
    chunks: Vec<u16>,
    best: Option<Vec<u16>>,
}

impl Search<'_> {
    fn descend(&mut self, used: u16) {
        let k = self.placed.len();
        if k == self.n {
            if self.best.as_ref().is_none_or(|b| self.chunks > *b) {
                self.best = Some(self.chunks.clone());
            }
            return;
        }

        let mut max_chunk = 0u16;
        let mut candidates: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut chunk = 0u16;
            for (i, &p) in self.placed.iter().enumerate() {
                chunk |= (self.rows[v] >> p & 1) << (k - 1 - i);
            }
            if chunk > max_chunk || candidates.is_empty() {
                max_chunk = chunk;
                candidates.clear();
                candidates.push(v);
            } else if chunk == max_chunk {
                candidates.push(v);
            }
        }

        // only a maximal next chunk can extend a lexicographically maximal
        // bitstring; a smaller prefix cannot be repaired later
        if let Some(best) = &self.best {
            if (self.chunks.as_slice(), max_chunk) < (&best[..k], best[k]) {
                return;
            }
        }

        // candidates swappable by an automorphism fixing everything else
        // explore identical subtrees; keep one representative
        let mut kept: Vec<usize> = Vec::new();
        for &v in &candidates {
            let dup = kept.iter().any(|&u| {
                let pair = (1u16 << u) | (1u16 << v);
                (self.rows[u] & !pair) == (self.rows[v] & !pair)
            });
            if !dup {
                kept.push(v);
            }
        }

        for v in kept {
            self.placed.push(v);
            self.chunks.push(max_chunk);
            self.descend(used | (1 << v));
            self.chunks.pop();
            self.placed.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::to_graph6;

    /// Exhaustive oracle: maximize the graph6 string over all relabelings.
    /// Equal-length graph6 bodies compare bytewise exactly like their
    /// bitstrings, so max over strings = max over bitstrings.
    fn brute_force_canonical(g: &Graph) -> String {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<String> = None;
        permute(&mut perm, 0, &mut |p| {
            // p[v] = new label of v
            let s = to_graph6(&g.relabel(p)).unwrap();
            if best.as_ref().is_none_or(|b| s > *b) {
                best = Some(s);
            }
        });
        best.unwrap()
    }

    fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute(perm, k + 1, f);
            perm.swap(k, i);
        }
    }

    #[test]
    fn matches_brute_force_on_all_graphs_up_to_five_vertices() {
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e);
                let g = Graph::from_edges(n, edges).unwrap();
                assert_eq!(
                    canonical_form(&g).unwrap(),
                    brute_force_canonical(&g),
                    "n={n} mask={mask}"
                );
            }
        }
    }

    #[test]
    fn all_relabelings_of_p3_collapse() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let mut forms = std::collections::BTreeSet::new();
        let mut perm: Vec<usize> = (0..3).collect();
        permute(&mut perm, 0, &mut |p| {
            forms.insert(canonical_form(&p3.relabel(p)).unwrap());
        });
        assert_eq!(forms.len(), 1);
    }

    #[test]
    fn distinguishes_path_from_star() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let s4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&s4).unwrap());
    }

    #[test]
    fn relabeled_p4_collapses() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let shuffled = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(
            canonical_form(&p4).unwrap(),
            canonical_form(&shuffled).unwrap()
        );
    }

    #[test]
    fn rejects_large_graphs() {
        let g = Graph::new(17);
        assert_eq!(
            canonical_form(&g),
            Err(GraphError::TooLargeForCanonical { n: 17, max: 16 })
        );
    }

    #[test]
    fn sixteen_vertex_graph_is_supported() {
        let ring: Vec<(usize, usize)> = (0..16).map(|i| (i, (i + 1) % 16)).collect();
        let c16 = Graph::from_edges(16, ring).unwrap();
        let rotated: Vec<(usize, usize)> = (0..16).map(|i| ((i + 3) % 16, (i + 4) % 16)).collect();
        let c16r = Graph::from_edges(16, rotated).unwrap();
        assert_eq!(
            canonical_form(&c16).unwrap(),
            canonical_form(&c16r).unwrap()
        );
    }
}
