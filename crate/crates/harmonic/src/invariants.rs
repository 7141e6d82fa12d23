//! The degree-based indices: harmonic (exact), Randic (floating), first
//! Zagreb (integer), and per-edge harmonic weights.

use crate::graph::{Graph, GraphError};
use crate::rational::Rational;

/// An edge together with its harmonic weight 2/(deg(u)+deg(v)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeWeight {
    pub edge: (usize, usize),
    pub weight: Rational,
}

/// Exact weight 2/(deg(u)+deg(v)) of an existing edge.
pub fn edge_weight(g: &Graph, u: usize, v: usize) -> Result<Rational, GraphError> {
    if !g.has_edge(u, v) {
        return Err(GraphError::NotAnEdge { u, v });
    }
    Ok(Rational::new(2, (g.degree(u) + g.degree(v)) as i64))
}

/// Harmonic index: the exact rational sum of edge weights; 0 when edgeless.
pub fn harmonic_index(g: &Graph) -> Rational {
    let mut h = Rational::zero();
    for (u, v) in g.edges() {
        h += &Rational::new(2, (g.degree(u) + g.degree(v)) as i64);
    }
    h
}

/// Randic index: sum over edges of 1/sqrt(deg(u)*deg(v)).
///
/// The value is irrational in general, so this is the one floating-point
/// invariant. Kahan-compensated summation keeps the absolute error within
/// 1e-12 * m for the orders in scope.
pub fn randic_index(g: &Graph) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for (u, v) in g.edges() {
        let term = 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt();
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

/// First Zagreb index: the exact integer sum of squared degrees.
pub fn first_zagreb(g: &Graph) -> u64 {
    (0..g.n()).map(|v| (g.degree(v) as u64).pow(2)).sum()
}

/// The edge of minimal weight (equivalently, maximal degree sum), ties
/// broken by lexicographically smallest (u, v) so runs are reproducible.
pub fn min_weight_edge(g: &Graph) -> Result<EdgeWeight, GraphError> {
    let best = g
        .edges()
        .map(|(u, v)| (g.degree(u) + g.degree(v), (u, v)))
        .max_by_key(|&(degree_sum, (u, v))| (degree_sum, std::cmp::Reverse((u, v))))
        .ok_or(GraphError::NoEdges)?;
    Ok(EdgeWeight {
        edge: best.1,
        weight: Rational::new(2, best.0 as i64),
    })
}
