//! Builders for the graph families the extremal claims quantify over, and
//! the two transformations (pendant-path attachment, edge removal) whose
//! effect on the harmonic index is under test.
//!
//! Transformations return new graphs; inputs are never mutated.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("{family} requires {requirement}, got {got}")]
    InvalidSize {
        family: &'static str,
        requirement: &'static str,
        got: String,
    },
    #[error("attachment vertex {w} out of range for base on {n} vertices")]
    AttachVertexOutOfRange { w: usize, n: usize },
    #[error("attachment base must be connected")]
    BaseNotConnected,
    #[error("attachment base must have at least 2 vertices, got {n}")]
    BaseTooSmall { n: usize },
}

/// Path P_n with vertices labeled 0-1-2-...-(n-1).
pub fn path(n: usize) -> Result<Graph, ConstructError> {
    if n < 1 {
        return Err(ConstructError::InvalidSize {
            family: "path",
            requirement: "n >= 1",
            got: n.to_string(),
        });
    }
    Ok(Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).expect("path edges"))
}

/// Star S_n = K_{1,n-1} with center 0.
pub fn star(n: usize) -> Result<Graph, ConstructError> {
    if n < 1 {
        return Err(ConstructError::InvalidSize {
            family: "star",
            requirement: "n >= 1",
            got: n.to_string(),
        });
    }
    Ok(Graph::from_edges(n, (1..n).map(|v| (0, v))).expect("star edges"))
}

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, ConstructError> {
    if a < 1 || b < 1 {
        return Err(ConstructError::InvalidSize {
            family: "complete_bipartite",
            requirement: "a, b >= 1",
            got: format!("({a}, {b})"),
        });
    }
    Ok(
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            .expect("complete bipartite edges"),
    )
}

/// Leg lengths of a three-leg spider tree. Construction normalizes to
/// a >= b >= c so isomorphic specifications build the same labeled graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpiderSpec {
    a: usize,
    b: usize,
    c: usize,
}

impl SpiderSpec {
    pub fn new(a: usize, b: usize, c: usize) -> Result<SpiderSpec, ConstructError> {
        if a < 1 || b < 1 || c < 1 {
            return Err(ConstructError::InvalidSize {
                family: "spider",
                requirement: "leg lengths >= 1",
                got: format!("({a}, {b}, {c})"),
            });
        }
        let mut legs = [a, b, c];
        legs.sort_unstable_by(|x, y| y.cmp(x));
        Ok(SpiderSpec {
            a: legs[0],
            b: legs[1],
            c: legs[2],
        })
    }

    pub fn legs(&self) -> (usize, usize, usize) {
        (self.a, self.b, self.c)
    }

    pub fn order(&self) -> usize {
        self.a + self.b + self.c + 1
    }
}

/// The tree with one branching vertex (labeled 0, degree 3) carrying three
/// pendant paths of the specified lengths.
pub fn spider(spec: SpiderSpec) -> Graph {
    let (a, b, c) = spec.legs();
    let mut g = Graph::new(spec.order());
    let mut next = 1;
    for leg in [a, b, c] {
        let mut prev = 0;
        for _ in 0..leg {
            g.add_edge(prev, next).expect("spider edges");
            prev = next;
            next += 1;
        }
    }
    g
}

/// A connected base graph with two disjoint pendant paths (p and q new
/// vertices) to be attached at vertex w.
#[derive(Debug, Clone)]
pub struct PathAttachment {
    pub base: Graph,
    pub w: usize,
    pub p: usize,
    pub q: usize,
}

impl PathAttachment {
    pub fn new(base: Graph, w: usize, p: usize, q: usize) -> PathAttachment {
        PathAttachment { base, w, p, q }
    }
}

/// Attaches the two pendant paths; the order grows by p + q and
/// deg(w) grows by (p > 0) + (q > 0).
pub fn attach_paths(att: &PathAttachment) -> Result<Graph, ConstructError> {
    let n = att.base.n();
    if n < 2 {
        return Err(ConstructError::BaseTooSmall { n });
    }
    if att.w >= n {
        return Err(ConstructError::AttachVertexOutOfRange { w: att.w, n });
    }
    if !att.base.is_connected() {
        return Err(ConstructError::BaseNotConnected);
    }
    let mut g = Graph::new(n + att.p + att.q);
    for (u, v) in att.base.edges() {
        g.add_edge(u, v).expect("base edges");
    }
    let mut next = n;
    for len in [att.p, att.q] {
        let mut prev = att.w;
        for _ in 0..len {
            g.add_edge(prev, next).expect("pendant path edges");
            prev = next;
            next += 1;
        }
    }
    Ok(g)
}

/// Edge deletion as a pure transformation. The result may be disconnected;
/// connectivity is the caller's precondition where a claim needs it.
pub fn remove_edge(g: &Graph, u: usize, v: usize) -> Result<Graph, GraphError> {
    let mut out = g.clone();
    out.remove_edge(u, v)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::invariants::harmonic_index;
    use crate::rational::Rational;

    fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn families_coincide_at_order_two() {
        let k2 = path(2).unwrap();
        assert_eq!(star(2).unwrap(), k2);
        assert_eq!(complete_bipartite(1, 1).unwrap(), k2);
    }

    #[test]
    fn family_shapes() {
        let p6 = path(6).unwrap();
        assert!(p6.is_tree());
        assert_eq!((0..6).map(|v| p6.degree(v)).max(), Some(2));

        let s7 = star(7).unwrap();
        assert!(s7.is_tree());
        assert_eq!(s7.degree(0), 6);

        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.m(), 6);
        assert_eq!(k23.is_complete_bipartite(), Some((2, 3)));

        assert!(path(0).is_err());
        assert!(star(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn spider_shape_and_normalization() {
        let spec = SpiderSpec::new(1, 2, 3).unwrap();
        assert_eq!(spec.legs(), (3, 2, 1));
        assert_eq!(spider(spec), spider(SpiderSpec::new(3, 2, 1).unwrap()));

        let t = spider(SpiderSpec::new(4, 3, 2).unwrap());
        assert!(t.is_tree());
        assert_eq!(t.n(), 10);
        let branch_vertices = (0..t.n()).filter(|&v| t.degree(v) == 3).count();
        assert_eq!(branch_vertices, 1);
        assert_eq!(t.degree(0), 3);

        assert!(SpiderSpec::new(0, 1, 1).is_err());
    }

    #[test]
    fn smallest_spider_is_the_four_star() {
        let t = spider(SpiderSpec::new(1, 1, 1).unwrap());
        assert_eq!(
            canonical_form(&t).unwrap(),
            canonical_form(&star(4).unwrap()).unwrap()
        );
    }

    #[test]
    fn spider_harmonic_values() {
        assert_eq!(
            harmonic_index(&spider(SpiderSpec::new(2, 2, 2).unwrap())),
            Rational::new(16, 5)
        );
        // with every leg >= 2 the value depends on the order alone
        for (a, b, c) in [(3, 2, 2), (4, 3, 2), (3, 3, 3), (5, 2, 2), (4, 4, 3)] {
            let spec = SpiderSpec::new(a, b, c).unwrap();
            let n = spec.order() as i64;
            assert_eq!(
                harmonic_index(&spider(spec)),
                Rational::new(16, 5) + Rational::new(n - 7, 2),
                "spider({a},{b},{c})"
            );
        }
    }

    #[test]
    fn attach_nothing_is_identity() {
        let g = attach_paths(&PathAttachment::new(k3(), 0, 0, 0)).unwrap();
        assert_eq!(g, k3());
    }

    #[test]
    fn attach_degree_bookkeeping() {
        let g = attach_paths(&PathAttachment::new(k3(), 0, 2, 1)).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.degree(0), 4, "two base neighbors plus two path starts");
        assert!(g.is_connected());
    }

    // values frozen from an independent edge-sum computation
    #[test]
    fn attach_harmonic_values() {
        let g11 = attach_paths(&PathAttachment::new(k3(), 0, 1, 1)).unwrap();
        assert_eq!(harmonic_index(&g11), Rational::new(59, 30));
        let g21 = attach_paths(&PathAttachment::new(k3(), 0, 2, 1)).unwrap();
        assert_eq!(harmonic_index(&g21), Rational::new(77, 30));
        let g20 = attach_paths(&PathAttachment::new(k3(), 0, 2, 0)).unwrap();
        assert_eq!(harmonic_index(&g20), Rational::new(71, 30));
        // consolidating both paths into one increases the index
        assert!(harmonic_index(&g11) < harmonic_index(&g20));
    }

    #[test]
    fn attachment_is_symmetric_in_p_and_q() {
        for (p, q) in [(1, 2), (3, 1), (2, 2)] {
            let a = attach_paths(&PathAttachment::new(k3(), 1, p, q)).unwrap();
            let b = attach_paths(&PathAttachment::new(k3(), 1, q, p)).unwrap();
            assert_eq!(
                canonical_form(&a).unwrap(),
                canonical_form(&b).unwrap(),
                "p={p} q={q}"
            );
        }
    }

    #[test]
    fn attach_rejections() {
        let att = PathAttachment::new(k3(), 5, 1, 1);
        assert_eq!(
            attach_paths(&att),
            Err(ConstructError::AttachVertexOutOfRange { w: 5, n: 3 })
        );
        let disconnected = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            attach_paths(&PathAttachment::new(disconnected, 0, 1, 0)),
            Err(ConstructError::BaseNotConnected)
        );
        assert_eq!(
            attach_paths(&PathAttachment::new(Graph::new(1), 0, 1, 0)),
            Err(ConstructError::BaseTooSmall { n: 1 })
        );
    }

    #[test]
    fn remove_edge_cases() {
        let p3 = remove_edge(&k3(), 0, 1).unwrap();
        assert_eq!(
            canonical_form(&p3).unwrap(),
            canonical_form(&path(3).unwrap()).unwrap()
        );
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        for (u, v) in c4.edges() {
            let removed = remove_edge(&c4, u, v).unwrap();
            assert_eq!(
                canonical_form(&removed).unwrap(),
                canonical_form(&path(4).unwrap()).unwrap()
            );
        }
        assert_eq!(
            remove_edge(&c4, 0, 2),
            Err(GraphError::NotAnEdge { u: 0, v: 2 })
        );
        // the original is untouched
        assert_eq!(c4.m(), 4);
    }
}
