//! Test universes: isomorph-free free trees by canonical level sequences,
//! an independent Prufer-decode oracle, exhaustive connected labeled graphs
//! at small orders, and seeded random connected graphs beyond them.

use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::canonical_rows;
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("{what} supports {min} <= n <= {max}, got n = {n}")]
    OrderOutOfRange {
        what: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },
    #[error("no connected graph on {n} vertices has {m} edges")]
    InfeasibleEdgeCount { n: usize, m: usize },
}

pub const MAX_TREE_N: usize = 16;
pub const MAX_ORACLE_N: usize = 9;
pub const MAX_LABELED_N: usize = 7;

/// Preorder depth list of a rooted tree: levels[0] = 0 and each entry is
/// between 1 and its predecessor + 1. Free trees are represented by the
/// lexicographically maximal sequence over centroid rootings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSequence {
    levels: Vec<usize>,
}

impl LevelSequence {
    fn new(levels: Vec<usize>) -> LevelSequence {
        debug_assert!(levels[0] == 0);
        debug_assert!((1..levels.len()).all(|i| levels[i] >= 1 && levels[i] <= levels[i - 1] + 1));
        LevelSequence { levels }
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    /// Preorder decoding: the parent of vertex i is the most recent earlier
    /// vertex one level up.
    pub fn to_graph(&self) -> Graph {
        let n = self.levels.len();
        let mut g = Graph::new(n);
        let mut last_at_level = vec![0usize; n + 1];
        for i in 1..n {
            let parent = last_at_level[self.levels[i] - 1];
            g.add_edge(parent, i).expect("level sequence edges");
            last_at_level[self.levels[i]] = i;
        }
        g
    }
}

/// Emits every rooted tree on n vertices exactly once, as its canonical
/// level sequence (children ordered by decreasing subtree sequence), in
/// decreasing lexicographic order from the path down to the star. This is
/// the constant-amortized-time successor rule on level sequences.
struct RootedSequences {
    levels: Vec<usize>,
    state: RootedState,
}

enum RootedState {
    Fresh,
    Running,
    Done,
}

impl RootedSequences {
    fn new(n: usize) -> RootedSequences {
        RootedSequences {
            levels: (0..n).collect(),
            state: RootedState::Fresh,
        }
    }
}

impl Iterator for RootedSequences {
    type Item = LevelSequence;

    fn next(&mut self) -> Option<LevelSequence> {
        match self.state {
            RootedState::Fresh => {
                self.state = RootedState::Running;
                Some(LevelSequence::new(self.levels.clone()))
            }
            RootedState::Running => {
                let n = self.levels.len();
                let p = match (0..n).rev().find(|&i| self.levels[i] >= 2) {
                    Some(p) => p,
                    None => {
                        self.state = RootedState::Done;
                        return None;
                    }
                };
                let q = (0..p)
                    .rev()
                    .find(|&i| self.levels[i] == self.levels[p] - 1)
                    .expect("every level >= 2 has an earlier parent level");
                // repeat the segment starting at q cyclically through the tail
                for i in p..n {
                    self.levels[i] = self.levels[i - (p - q)];
                }
                Some(LevelSequence::new(self.levels.clone()))
            }
            RootedState::Done => None,
        }
    }
}

fn adjacency_lists(seq: &LevelSequence) -> Vec<Vec<usize>> {
    let n = seq.levels.len();
    let mut adj = vec![Vec::new(); n];
    let mut last_at_level = vec![0usize; n + 1];
    for i in 1..n {
        let parent = last_at_level[seq.levels[i] - 1];
        adj[parent].push(i);
        adj[i].push(parent);
        last_at_level[seq.levels[i]] = i;
    }
    adj
}

/// The one or two vertices minimizing the largest component left by their
/// removal.
fn centroids(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n == 1 {
        return vec![0];
    }
    // iterative post-order from 0 to get subtree sizes
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    let mut heaviest = vec![0usize; n];
    for &v in order.iter().rev() {
        for &w in &adj[v] {
            if w != parent[v] {
                size[v] += size[w];
                heaviest[v] = heaviest[v].max(size[w]);
            }
        }
        heaviest[v] = heaviest[v].max(n - size[v]);
    }
    let best = *heaviest.iter().min().expect("nonempty tree");
    (0..n).filter(|&v| heaviest[v] == best).collect()
}

/// Canonical level sequence of the tree rooted at `root`: children are
/// arranged in decreasing order of their own canonical sequences, matching
/// the successor rule's output convention.
fn canonical_rooted(adj: &[Vec<usize>], root: usize) -> Vec<usize> {
    fn encode(adj: &[Vec<usize>], v: usize, parent: usize, depth: usize) -> Vec<usize> {
        let mut children: Vec<Vec<usize>> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(adj, w, v, depth + 1))
            .collect();
        children.sort_unstable_by(|x, y| y.cmp(x));
        let mut out = vec![depth];
        for c in children {
            out.extend(c);
        }
        out
    }
    encode(adj, root, usize::MAX, 0)
}

fn is_free_canonical(seq: &LevelSequence) -> bool {
    let adj = adjacency_lists(seq);
    let best = centroids(&adj)
        .into_iter()
        .map(|c| canonical_rooted(&adj, c))
        .max()
        .expect("at least one centroid");
    best == seq.levels
}

/// One canonical level sequence per isomorphism class of free trees on n
/// vertices, in the successor rule's deterministic order.
pub fn all_free_tree_sequences(
    n: usize,
) -> Result<impl Iterator<Item = LevelSequence>, EnumerateError> {
    if !(1..=MAX_TREE_N).contains(&n) {
        return Err(EnumerateError::OrderOutOfRange {
            what: "free-tree enumeration",
            n,
            min: 1,
            max: MAX_TREE_N,
        });
    }
    Ok(RootedSequences::new(n).filter(is_free_canonical))
}

/// One representative Graph per isomorphism class of trees on n vertices.
pub fn all_free_trees(n: usize) -> Result<impl Iterator<Item = Graph>, EnumerateError> {
    Ok(all_free_tree_sequences(n)?.map(|seq| seq.to_graph()))
}

/// Outcome of the independent tree-census oracle: class count plus the
/// canonical form of every class.
#[derive(Debug, PartialEq, Eq)]
pub struct TreeCensus {
    pub count: usize,
    pub canonical_forms: BTreeSet<String>,
}

/// Decodes a Prufer sequence into adjacency bitmask rows.
fn prufer_decode_rows(n: usize, seq: &[usize], rows: &mut [u16]) {
    rows[..n].fill(0);
    let mut degree = [1u8; MAX_ORACLE_N];
    for &s in seq {
        degree[s] += 1;
    }
    let add = |rows: &mut [u16], u: usize, v: usize| {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    };
    let mut ptr = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for &s in seq {
        add(rows, leaf, s);
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    add(rows, leaf, n - 1);
}

/// Independent census of tree isomorphism classes: decodes all n^(n-2)
/// Prufer sequences and deduplicates by canonical form. Quadratic-ish in
/// the number of labeled trees, hence the n <= 9 cost guard; it exists to
/// cross-validate the level-sequence enumerator, not to be fast.
pub fn prufer_tree_oracle(n: usize) -> Result<TreeCensus, EnumerateError> {
    if !(2..=MAX_ORACLE_N).contains(&n) {
        return Err(EnumerateError::OrderOutOfRange {
            what: "tree census oracle",
            n,
            min: 2,
            max: MAX_ORACLE_N,
        });
    }
    if n == 2 {
        let rows = [0b10u16, 0b01u16];
        let mut canonical_forms = BTreeSet::new();
        canonical_forms.insert(canonical_rows(2, &rows));
        return Ok(TreeCensus {
            count: 1,
            canonical_forms,
        });
    }
    let digits = n - 2;
    let total: u64 = (n as u64).pow(digits as u32);
    let canonical_forms = (0..total)
        .into_par_iter()
        .fold(BTreeSet::new, |mut set: BTreeSet<String>, mut idx| {
            let mut seq = [0usize; MAX_ORACLE_N - 2];
            for digit in seq.iter_mut().take(digits) {
                *digit = (idx % n as u64) as usize;
                idx /= n as u64;
            }
            let mut rows = [0u16; MAX_ORACLE_N];
            prufer_decode_rows(n, &seq[..digits], &mut rows);
            set.insert(canonical_rows(n, &rows[..n]));
            set
        })
        .reduce(BTreeSet::new, |mut a, mut b| {
            a.append(&mut b);
            a
        });
    Ok(TreeCensus {
        count: canonical_forms.len(),
        canonical_forms,
    })
}

/// Every connected labeled simple graph on n vertices, streamed in
/// increasing order of the edge-subset bitmask (edge bit i is the i-th pair
/// in lexicographic order). Connectivity is pre-checked on bitmask rows so
/// only connected subsets allocate a Graph.
pub fn all_connected_labeled_graphs(
    n: usize,
) -> Result<impl Iterator<Item = Graph>, EnumerateError> {
    if !(1..=MAX_LABELED_N).contains(&n) {
        return Err(EnumerateError::OrderOutOfRange {
            what: "labeled-graph sweep",
            n,
            min: 1,
            max: MAX_LABELED_N,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u32 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let mut rows = [0u16; MAX_LABELED_N];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
        if !rows_connected(n, &rows) {
            return None;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Some(Graph::from_edges(n, edges).expect("mask edges"))
    }))
}

fn rows_connected(n: usize, rows: &[u16]) -> bool {
    let all = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
    let mut reached: u16 = 1;
    loop {
        let mut next = reached;
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            next |= rows[v];
        }
        if next == reached {
            return reached == all;
        }
        reached = next;
    }
}

/// A 64-bit seed; identical seeds reproduce identical sample sequences on
/// every platform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seed(pub u64);

/// splitmix64: the standard 64-bit add/xor-shift/multiply generator. Chosen
/// for bit-reproducibility: the whole algorithm is pinned here, so sampled
/// universes cannot drift with a dependency upgrade.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: Seed) -> SplitMix64 {
        SplitMix64 { state: seed.0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from 0..bound without modulo bias (widening-multiply
    /// rejection).
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty sampling range");
        let mut wide = u128::from(self.next_u64()) * u128::from(bound);
        let mut low = wide as u64;
        if low < bound {
            let threshold = bound.wrapping_neg() % bound;
            while low < threshold {
                wide = u128::from(self.next_u64()) * u128::from(bound);
                low = wide as u64;
            }
        }
        (wide >> 64) as u64
    }
}

/// A connected graph sampled as a uniform random labeled spanning tree
/// (random Prufer sequence) plus m - (n-1) distinct random non-tree edges.
/// Deterministic for a fixed seed.
pub fn random_connected_graph(n: usize, m: usize, seed: Seed) -> Result<Graph, EnumerateError> {
    let max_m = n * n.saturating_sub(1) / 2;
    if n < 1 || m + 1 < n || m > max_m {
        return Err(EnumerateError::InfeasibleEdgeCount { n, m });
    }
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::new(n);
    if n >= 2 {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
        for (u, v) in prufer_decode_edges(n, &seq) {
            g.add_edge(u, v).expect("tree edges");
        }
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    while g.m() < m {
        let (u, v) = pairs[rng.below(pairs.len() as u64) as usize];
        if !g.has_edge(u, v) {
            g.add_edge(u, v).expect("fresh non-tree edge");
        }
    }
    debug_assert!(g.is_connected());
    Ok(g)
}

/// General-width Prufer decode used by the random sampler (the census
/// oracle keeps its own fixed-width fast path).
fn prufer_decode_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf.min(s), leaf.max(s)));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf.min(n - 1), leaf.max(n - 1)));
    edges
}
