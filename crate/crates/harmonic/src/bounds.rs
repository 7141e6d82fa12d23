//! Bound evaluation: each inequality is scored on a graph together with its
//! hypothesis and its exact equality-condition predicate, so claim runners
//! and the CLI can report not just "holds" but "holds for the right reason".

use thiserror::Error;

use crate::graph::Graph;
use crate::invariants::{first_zagreb, harmonic_index};
use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("bound undefined on the empty graph")]
    EmptyGraph,
    #[error("bound undefined without edges")]
    NoEdges,
    #[error("bound applies to trees only")]
    NotATree,
    #[error("bound requires n >= {min}, got {n}")]
    OrderTooSmall { n: usize, min: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum BoundId {
    #[serde(rename = "TWO_M_OVER_N")]
    TwoMOverN,
    #[serde(rename = "CAUCHY_SCHWARZ_M1")]
    CauchySchwarzM1,
    #[serde(rename = "TREE_STAR_MIN")]
    TreeStarMin,
    #[serde(rename = "TREE_PATH_MAX")]
    TreePathMax,
}

impl BoundId {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::TwoMOverN => "TWO_M_OVER_N",
            BoundId::CauchySchwarzM1 => "CAUCHY_SCHWARZ_M1",
            BoundId::TreeStarMin => "TREE_STAR_MIN",
            BoundId::TreePathMax => "TREE_PATH_MAX",
        }
    }

    /// Lower bounds compare H >= bound, the path bound is an upper bound.
    pub fn is_upper(self) -> bool {
        matches!(self, BoundId::TreePathMax)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub bound_id: BoundId,
    pub hypothesis_holds: bool,
    pub bound_value: Rational,
    pub index_value: Rational,
    pub holds: bool,
    pub equality: bool,
    pub equality_condition_holds: bool,
}

fn report(
    bound_id: BoundId,
    hypothesis_holds: bool,
    bound_value: Rational,
    index_value: Rational,
    equality_condition_holds: bool,
) -> BoundReport {
    let holds = if bound_id.is_upper() {
        index_value <= bound_value
    } else {
        index_value >= bound_value
    };
    let equality = index_value == bound_value;
    BoundReport {
        bound_id,
        hypothesis_holds,
        bound_value,
        index_value,
        holds,
        equality,
        equality_condition_holds,
    }
}

/// H >= 2m/n, valid under the hypothesis that every edge has
/// deg(u) + deg(v) <= n; equality exactly when every edge degree-sum is n.
/// The report records the raw comparison even when the hypothesis fails
/// (K_4 violates the bound, which is why the hypothesis matters).
pub fn bound_2m_over_n(g: &Graph) -> Result<BoundReport, BoundsError> {
    let n = g.n();
    if n == 0 {
        return Err(BoundsError::EmptyGraph);
    }
    let hypothesis = g.edges().all(|(u, v)| g.degree(u) + g.degree(v) <= n);
    let condition = g.edges().all(|(u, v)| g.degree(u) + g.degree(v) == n);
    let rep = report(
        BoundId::TwoMOverN,
        hypothesis,
        Rational::new(2 * g.m() as i64, n as i64),
        harmonic_index(g),
        condition,
    );
    // the equality case of this bound characterizes exactly the complete
    // bipartite graphs among connected triangle-free graphs
    debug_assert!(
        !(g.is_connected() && g.is_triangle_free())
            || (rep.equality == g.is_complete_bipartite().is_some())
    );
    Ok(rep)
}

/// H >= 2m^2/M1 (Cauchy-Schwarz applied to the edge degree-sums);
/// equality exactly when deg(u) + deg(v) is constant over the edges.
pub fn bound_cauchy_schwarz(g: &Graph) -> Result<BoundReport, BoundsError> {
    if g.m() == 0 {
        return Err(BoundsError::NoEdges);
    }
    let m = g.m() as i64;
    let m1 = first_zagreb(g) as i64;
    let mut sums = g.edges().map(|(u, v)| g.degree(u) + g.degree(v));
    let first = sums.next().expect("m >= 1");
    let condition = sums.all(|s| s == first);
    Ok(report(
        BoundId::CauchySchwarzM1,
        true,
        Rational::new(2 * m * m, m1),
        harmonic_index(g),
        condition,
    ))
}

/// (min, max) of the harmonic index over trees of order n >= 3:
/// min 2(n-1)/n attained by the star, max 4/3 + (n-3)/2 attained by the
/// path.
pub fn tree_extremal_values(n: usize) -> Result<(Rational, Rational), BoundsError> {
    if n < 3 {
        return Err(BoundsError::OrderTooSmall { n, min: 3 });
    }
    let n = n as i64;
    Ok((
        Rational::new(2 * (n - 1), n),
        Rational::new(4, 3) + Rational::new(n - 3, 2),
    ))
}

/// The second-largest distinct harmonic index over trees of order n >= 7:
/// 16/5 + (n-7)/2, the common value of every three-leg spider whose legs
/// all have length >= 2.
pub fn spider_second_max_value(n: usize) -> Result<Rational, BoundsError> {
    if n < 7 {
        return Err(BoundsError::OrderTooSmall { n, min: 7 });
    }
    Ok(Rational::new(16, 5) + Rational::new(n as i64 - 7, 2))
}

/// Star lower bound for a tree: H(T) >= 2(n-1)/n, equality iff T is the
/// star. A tree is a star iff it has a vertex of degree n-1, so the
/// equality condition needs no isomorphism search.
pub fn bound_tree_star_min(g: &Graph) -> Result<BoundReport, BoundsError> {
    let (min, _) = tree_bounds_guard(g)?;
    let n = g.n();
    let is_star = (0..n).any(|v| g.degree(v) == n - 1);
    Ok(report(
        BoundId::TreeStarMin,
        true,
        min,
        harmonic_index(g),
        is_star,
    ))
}

/// Path upper bound for a tree: H(T) <= 4/3 + (n-3)/2, equality iff T is
/// the path, i.e. iff no vertex has degree exceeding 2.
pub fn bound_tree_path_max(g: &Graph) -> Result<BoundReport, BoundsError> {
    let (_, max) = tree_bounds_guard(g)?;
    let is_path = (0..g.n()).all(|v| g.degree(v) <= 2);
    Ok(report(
        BoundId::TreePathMax,
        true,
        max,
        harmonic_index(g),
        is_path,
    ))
}

fn tree_bounds_guard(g: &Graph) -> Result<(Rational, Rational), BoundsError> {
    if !g.is_tree() {
        return Err(BoundsError::NotATree);
    }
    tree_extremal_values(g.n())
}

/// Every bound report applicable to this graph, for the per-graph CLI
/// output: the 2m/n and Cauchy-Schwarz bounds where defined, plus the two
/// tree bounds when the graph is a tree of order >= 3.
pub fn all_bound_reports(g: &Graph) -> Vec<BoundReport> {
    let mut out = Vec::new();
    if let Ok(r) = bound_2m_over_n(g) {
        out.push(r);
    }
    if let Ok(r) = bound_cauchy_schwarz(g) {
        out.push(r);
    }
    if let Ok(r) = bound_tree_star_min(g) {
        out.push(r);
    }
    if let Ok(r) = bound_tree_path_max(g) {
        out.push(r);
    }
    out
}
