//! Claim runners. Every registered claim is checked over an explicit,
//! reproducible universe (exhaustive sweeps at small orders, seeded random
//! graphs beyond them) and reports a clean pass or the first counterexample,
//! serialized as the labeled graph it was found on.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bounds::{
    bound_2m_over_n, bound_cauchy_schwarz, spider_second_max_value, tree_extremal_values,
};
use crate::canon::canonical_form;
use crate::constructions::{attach_paths, path, remove_edge, spider, star, PathAttachment, SpiderSpec};
use crate::enumerate::{
    all_connected_labeled_graphs, all_free_trees, random_connected_graph, Seed, SplitMix64,
};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::invariants::{harmonic_index, min_weight_edge};
use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown claim id {text:?}; valid ids are COR1_STAR_MIN, COR2_PATH_MAX, \
             EQ_2M_OVER_N, EQ_CS_M1, LEM_EDGE_REMOVAL, SEC_MAX_SPIDER, THM1_PATH_SHIFT")]
    UnknownClaim { text: String },
    #[error("verification supports 3 <= n_max <= 14, got {n_max}")]
    NMaxOutOfRange { n_max: usize },
}

/// Identifiers of the checkable claims. Variant order is the id strings'
/// lexicographic order, so sorting by the enum sorts by id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    /// Over trees of order n, the star uniquely minimizes the harmonic index.
    Cor1StarMin,
    /// Over trees of order n, the path uniquely maximizes the harmonic index.
    Cor2PathMax,
    /// Connected triangle-free graphs satisfy H >= 2m/n, with equality
    /// exactly for the complete bipartite ones.
    Eq2mOverN,
    /// Every graph with an edge satisfies H >= 2m^2/M1, with equality
    /// exactly when the edge degree-sums are constant.
    EqCsM1,
    /// Removing a minimum-weight edge whose endpoints both have degree >= 2,
    /// when that keeps the graph connected, strictly decreases H. (Refuted;
    /// the runner finds the counterexample.)
    LemEdgeRemoval,
    /// Over trees of order n >= 7, the second-largest harmonic index value
    /// is 16/5 + (n-7)/2, attained exactly by the three-leg spiders with
    /// every leg of length >= 2.
    SecMaxSpider,
    /// Merging two pendant paths at w into one strictly increases H:
    /// H(G(p, q)) < H(G(p+q, 0)) for p >= q >= 1 on any connected base,
    /// provided w keeps degree >= 3 in G(p, q).
    Thm1PathShift,
}

pub const ALL_CLAIMS: [ClaimId; 7] = [
    ClaimId::Cor1StarMin,
    ClaimId::Cor2PathMax,
    ClaimId::Eq2mOverN,
    ClaimId::EqCsM1,
    ClaimId::LemEdgeRemoval,
    ClaimId::SecMaxSpider,
    ClaimId::Thm1PathShift,
];

impl ClaimId {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Cor1StarMin => "COR1_STAR_MIN",
            ClaimId::Cor2PathMax => "COR2_PATH_MAX",
            ClaimId::Eq2mOverN => "EQ_2M_OVER_N",
            ClaimId::EqCsM1 => "EQ_CS_M1",
            ClaimId::LemEdgeRemoval => "LEM_EDGE_REMOVAL",
            ClaimId::SecMaxSpider => "SEC_MAX_SPIDER",
            ClaimId::Thm1PathShift => "THM1_PATH_SHIFT",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<ClaimId, VerifyError> {
        ALL_CLAIMS
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| VerifyError::UnknownClaim { text: s.to_owned() })
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Largest order swept anywhere; per-claim universes cap it further.
    pub n_max: usize,
    /// Seed for the random phases; fixed seed, fixed universe.
    pub seed: Seed,
    /// Sample count for each claim with a random phase.
    pub random_samples: usize,
    /// Claims to run; duplicates are ignored.
    pub claims: Vec<ClaimId>,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            n_max: 12,
            seed: Seed(0),
            random_samples: 10_000,
            claims: ALL_CLAIMS.to_vec(),
        }
    }
}

/// A labeled graph refuting a claim, with the measured values spelled out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub graph6: String,
    pub context: String,
}

#[derive(Debug, Clone)]
pub struct VerificationResult {
    pub claim_id: ClaimId,
    pub universe: String,
    pub instances: u64,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub elapsed: Duration,
}

/// Runs the selected claims and returns their results sorted by claim id.
pub fn run_claims(options: &VerifyOptions) -> Result<Vec<VerificationResult>, VerifyError> {
    if !(3..=14).contains(&options.n_max) {
        return Err(VerifyError::NMaxOutOfRange {
            n_max: options.n_max,
        });
    }
    let mut ids = options.claims.clone();
    ids.sort_unstable();
    ids.dedup();
    Ok(ids.into_iter().map(|id| run_claim(id, options)).collect())
}

/// Runs one claim; `options.n_max` is assumed already validated.
pub fn run_claim(id: ClaimId, options: &VerifyOptions) -> VerificationResult {
    debug_assert!((3..=14).contains(&options.n_max));
    match id {
        ClaimId::Cor1StarMin => check_star_minimum(options),
        ClaimId::Cor2PathMax => check_path_maximum(options),
        ClaimId::Eq2mOverN => check_triangle_free_floor(options),
        ClaimId::EqCsM1 => check_cauchy_schwarz_floor(options),
        ClaimId::LemEdgeRemoval => check_edge_removal(options),
        ClaimId::SecMaxSpider => check_spider_second_max(options),
        ClaimId::Thm1PathShift => check_path_shift(options),
    }
}

fn witness(g: &Graph, context: String) -> Counterexample {
    Counterexample {
        graph6: to_graph6(g).expect("witness order fits graph6"),
        context,
    }
}

fn finish(
    claim_id: ClaimId,
    universe: String,
    instances: u64,
    counterexample: Option<Counterexample>,
    start: Instant,
) -> VerificationResult {
    VerificationResult {
        claim_id,
        universe,
        instances,
        passed: counterexample.is_none(),
        counterexample,
        elapsed: start.elapsed(),
    }
}

fn check_star_minimum(options: &VerifyOptions) -> VerificationResult {
    let start = Instant::now();
    let n_max = options.n_max;
    let mut instances = 0u64;
    let mut cx = None;
    'sweep: for n in 3..=n_max {
        let (minimum, _) = tree_extremal_values(n).expect("n >= 3");
        let star_form = canonical_form(&star(n).expect("n >= 2")).expect("order in range");
        let mut attained = false;
        for t in all_free_trees(n).expect("order in range") {
            instances += 1;
            let h = harmonic_index(&t);
            if h < minimum {
                cx = Some(witness(
                    &t,
                    format!(
                        "tree of order {n} with H = {} below the star value {}",
                        h.exact(),
                        minimum.exact()
                    ),
                ));
                break 'sweep;
            }
            if h == minimum {
                attained = true;
                if canonical_form(&t).expect("order in range") != star_form {
                    cx = Some(witness(
                        &t,
                        format!(
                            "tree of order {n} other than the star attains the minimum {}",
                            minimum.exact()
                        ),
                    ));
                    break 'sweep;
                }
            }
        }
        if !attained {
            cx = Some(witness(
                &star(n).expect("n >= 2"),
                format!("no tree of order {n} attains the claimed minimum {}", minimum.exact()),
            ));
            break 'sweep;
        }
    }
    finish(
        ClaimId::Cor1StarMin,
        format!("all isomorphism classes of trees on 3..={n_max} vertices"),
        instances,
        cx,
        start,
    )
}

fn check_path_maximum(options: &VerifyOptions) -> VerificationResult {
    let start = Instant::now();
    let n_max = options.n_max;
    let mut instances = 0u64;
    let mut cx = None;
    'sweep: for n in 3..=n_max {
        let (_, maximum) = tree_extremal_values(n).expect("n >= 3");
        let path_form = canonical_form(&path(n).expect("n >= 1")).expect("order in range");
        let mut attained = false;
        for t in all_free_trees(n).expect("order in range") {
            instances += 1;
            let h = harmonic_index(&t);
            if h > maximum {
                cx = Some(witness(
                    &t,
                    format!(
                        "tree of order {n} with H = {} above the path value {}",
                        h.exact(),
                        maximum.exact()
                    ),
                ));
                break 'sweep;
            }
            if h == maximum {
                attained = true;
                if canonical_form(&t).expect("order in range") != path_form {
                    cx = Some(witness(
                        &t,
                        format!(
                            "tree of order {n} other than the path attains the maximum {}",
                            maximum.exact()
                        ),
                    ));
                    break 'sweep;
                }
            }
        }
        if !attained {
            cx = Some(witness(
                &path(n).expect("n >= 1"),
                format!("no tree of order {n} attains the claimed maximum {}", maximum.exact()),
            ));
            break 'sweep;
        }
    }
    finish(
        ClaimId::Cor2PathMax,
        format!("all isomorphism classes of trees on 3..={n_max} vertices"),
        instances,
        cx,
        start,
    )
}

fn check_spider_second_max(options: &VerifyOptions) -> VerificationResult {
    let start = Instant::now();
    let n_max = options.n_max;
    let mut instances = 0u64;
    let mut cx = None;
    'sweep: for n in 7..=n_max {
        let expected = spider_second_max_value(n).expect("n >= 7");
        let mut classes: Vec<(Rational, Graph)> = Vec::new();
        for t in all_free_trees(n).expect("order in range") {
            instances += 1;
            classes.push((harmonic_index(&t), t));
        }
        classes.sort_by(|a, b| b.0.cmp(&a.0));
        let top = classes[0].0.clone();
        let second = match classes.iter().map(|(h, _)| h).find(|h| **h < top) {
            Some(v) => v.clone(),
            None => {
                cx = Some(witness(
                    &classes[0].1,
                    format!("all trees of order {n} share one harmonic index value"),
                ));
                break 'sweep;
            }
        };
        if second != expected {
            let (_, t) = classes
                .iter()
                .find(|(h, _)| *h == second)
                .expect("value taken from the list");
            cx = Some(witness(
                t,
                format!(
                    "second-largest tree value at n = {n} is {}, expected {}",
                    second.exact(),
                    expected.exact()
                ),
            ));
            break 'sweep;
        }
        let mut expected_forms: BTreeMap<String, Graph> = BTreeMap::new();
        for a in 2..n {
            for b in 2..=a {
                if a + b + 2 > n - 1 {
                    continue;
                }
                let c = n - 1 - a - b;
                if c < 2 || c > b {
                    continue;
                }
                let s = spider(SpiderSpec::new(a, b, c).expect("legs >= 1"));
                expected_forms.insert(canonical_form(&s).expect("order in range"), s);
            }
        }
        let mut attaining: BTreeMap<String, Graph> = BTreeMap::new();
        for (h, t) in &classes {
            if *h == second {
                attaining.insert(canonical_form(t).expect("order in range"), t.clone());
            }
        }
        if !attaining.keys().eq(expected_forms.keys()) {
            let (g, context) = match attaining
                .iter()
                .find(|(form, _)| !expected_forms.contains_key(*form))
            {
                Some((_, t)) => (
                    t.clone(),
                    format!(
                        "tree of order {n} outside the spider family attains the \
                         second-largest value {}",
                        expected.exact()
                    ),
                ),
                None => {
                    let (_, s) = expected_forms
                        .iter()
                        .find(|(form, _)| !attaining.contains_key(*form))
                        .expect("key sets differ");
                    (
                        s.clone(),
                        format!(
                            "spider of order {n} with all legs >= 2 misses the \
                             second-largest value {}",
                            expected.exact()
                        ),
                    )
                }
            };
            cx = Some(witness(&g, context));
            break 'sweep;
        }
    }
    let universe = if n_max >= 7 {
        format!("all isomorphism classes of trees on 7..={n_max} vertices")
    } else {
        "empty (the second-maximum characterization starts at order 7)".to_owned()
    };
    finish(ClaimId::SecMaxSpider, universe, instances, cx, start)
}

/// Applies the removal rule to the selected minimum-weight edge. `None`
/// when the hypothesis fails (an endpoint of degree < 2, or removal would
/// disconnect); otherwise whether H strictly decreased.
fn edge_removal_check(g: &Graph) -> Option<Result<(), Counterexample>> {
    if g.m() == 0 {
        return None;
    }
    let (u, v) = min_weight_edge(g).expect("m >= 1").edge;
    if g.degree(u) < 2 || g.degree(v) < 2 {
        return None;
    }
    let reduced = remove_edge(g, u, v).expect("edge exists");
    if !reduced.is_connected() {
        return None;
    }
    let before = harmonic_index(g);
    let after = harmonic_index(&reduced);
    if after < before {
        Some(Ok(()))
    } else {
        Some(Err(witness(
            g,
            format!(
                "minimum-weight edge ({u}, {v}) with endpoint degrees {} and {}: \
                 H = {} before removal, {} after; the claim requires a strict decrease",
                g.degree(u),
                g.degree(v),
                before.exact(),
                after.exact()
            ),
        )))
    }
}

fn check_edge_removal(options: &VerifyOptions) -> VerificationResult {
    let start = Instant::now();
    let n_max = options.n_max;
    let cap = n_max.min(6);
    let mut instances = 0u64;
    let mut cx = None;
    'sweep: for n in 3..=cap {
        for g in all_connected_labeled_graphs(n).expect("order in range") {
            match edge_removal_check(&g) {
                None => {}
                Some(Ok(())) => instances += 1,
                Some(Err(c)) => {
                    instances += 1;
                    cx = Some(c);
                    break 'sweep;
                }
            }
        }
    }
    if cx.is_none() && n_max >= 7 {
        let mut rng = SplitMix64::new(options.seed);
        for _ in 0..options.random_samples {
            let g = sample_connected(&mut rng, n_max);
            match edge_removal_check(&g) {
                None => {}
                Some(Ok(())) => instances += 1,
                Some(Err(c)) => {
                    instances += 1;
                    cx = Some(c);
                    break;
                }
            }
        }
    }
    let universe = if n_max >= 7 {
        format!(
            "connected labeled graphs on 3..={cap} vertices (exhaustive, ascending edge-mask \
             order), then {} seeded random connected graphs on 7..={n_max} vertices (seed {}); \
             instances count graphs satisfying the hypothesis",
            options.random_samples, options.seed.0
        )
    } else {
        format!(
            "connected labeled graphs on 3..={cap} vertices (exhaustive, ascending edge-mask \
             order); instances count graphs satisfying the hypothesis"
        )
    };
    finish(ClaimId::LemEdgeRemoval, universe, instances, cx, start)
}

fn check_path_shift(options: &VerifyOptions) -> VerificationResult {
    let start = Instant::now();
    let cap = options.n_max.min(5);
    let mut instances = 0u64;
    let mut cx = None;
    'sweep: for nb in 2..=cap {
        for base in all_connected_labeled_graphs(nb).expect("order in range") {
            for w in 0..nb {
                for p in 1..=4usize {
                    for q in 1..=p {
                        let g = attach_paths(&PathAttachment::new(base.clone(), w, p, q))
                            .expect("valid attachment");
                        if g.degree(w) < 3 {
                            continue;
                        }
                        instances += 1;
                        let merged =
                            attach_paths(&PathAttachment::new(base.clone(), w, p + q, 0))
                                .expect("valid attachment");
                        let h = harmonic_index(&g);
                        let h_merged = harmonic_index(&merged);
                        if h >= h_merged {
                            cx = Some(witness(
                                &base,
                                format!(
                                    "paths attached at vertex {w}: H with (p, q) = ({p}, {q}) \
                                     is {}, not below H with (p, q) = ({}, 0) which is {}",
                                    h.exact(),
                                    p + q,
                                    h_merged.exact()
                                ),
                            ));
                            break 'sweep;
                        }
                    }
                }
            }
        }
    }
    finish(
        ClaimId::Thm1PathShift,
        format!(
            "every connected labeled base on 2..={cap} vertices, every attachment vertex, \
             all pendant path lengths 1 <= q <= p <= 4 keeping deg(w) >= 3"
        ),
        instances,
        cx,
        start,
    )
}

fn check_triangle_free_floor(options: &VerifyOptions) -> VerificationResult {
    let start = Instant::now();
    let cap = options.n_max.min(7);
    let mut instances = 0u64;
    let mut cx = None;
    'sweep: for n in 1..=cap {
        for g in all_connected_labeled_graphs(n).expect("order in range") {
            if !g.is_triangle_free() {
                continue;
            }
            instances += 1;
            let rep = bound_2m_over_n(&g).expect("n >= 1");
            let complete_bipartite = g.is_complete_bipartite().is_some();
            if !rep.hypothesis_holds || !rep.holds || rep.equality != complete_bipartite {
                cx = Some(witness(
                    &g,
                    format!(
                        "H = {}, 2m/n = {}: bound holds = {}, equality = {}, \
                         complete bipartite = {}",
                        rep.index_value.exact(),
                        rep.bound_value.exact(),
                        rep.holds,
                        rep.equality,
                        complete_bipartite
                    ),
                ));
                break 'sweep;
            }
        }
    }
    finish(
        ClaimId::Eq2mOverN,
        format!("all connected triangle-free labeled graphs on 1..={cap} vertices"),
        instances,
        cx,
        start,
    )
}

fn cauchy_schwarz_violation(g: &Graph) -> Option<Counterexample> {
    let rep = bound_cauchy_schwarz(g).expect("m >= 1");
    if rep.holds && rep.equality == rep.equality_condition_holds {
        None
    } else {
        Some(witness(
            g,
            format!(
                "H = {}, 2m^2/M1 = {}: bound holds = {}, equality = {}, \
                 constant edge degree-sum = {}",
                rep.index_value.exact(),
                rep.bound_value.exact(),
                rep.holds,
                rep.equality,
                rep.equality_condition_holds
            ),
        ))
    }
}

fn check_cauchy_schwarz_floor(options: &VerifyOptions) -> VerificationResult {
    let start = Instant::now();
    let n_max = options.n_max;
    let cap = n_max.min(6);
    let mut instances = 0u64;
    let mut cx = None;
    'sweep: for n in 1..=cap {
        for g in all_connected_labeled_graphs(n).expect("order in range") {
            if g.m() == 0 {
                continue;
            }
            instances += 1;
            if let Some(c) = cauchy_schwarz_violation(&g) {
                cx = Some(c);
                break 'sweep;
            }
        }
    }
    if cx.is_none() && n_max >= 7 {
        let mut rng = SplitMix64::new(options.seed);
        for _ in 0..options.random_samples {
            let g = sample_connected(&mut rng, n_max);
            instances += 1;
            if let Some(c) = cauchy_schwarz_violation(&g) {
                cx = Some(c);
                break;
            }
        }
    }
    let universe = if n_max >= 7 {
        format!(
            "connected labeled graphs with an edge on 1..={cap} vertices (exhaustive), \
             then {} seeded random connected graphs on 7..={n_max} vertices (seed {})",
            options.random_samples, options.seed.0
        )
    } else {
        format!("connected labeled graphs with an edge on 1..={cap} vertices (exhaustive)")
    };
    finish(ClaimId::EqCsM1, universe, instances, cx, start)
}

/// Order drawn uniformly from 7..=n_max, size uniformly from the feasible
/// range, then a fresh sub-seed for the graph itself.
fn sample_connected(rng: &mut SplitMix64, n_max: usize) -> Graph {
    let n = 7 + rng.below(n_max as u64 - 6) as usize;
    let m_min = n - 1;
    let m_max = n * (n - 1) / 2;
    let m = m_min + rng.below((m_max - m_min + 1) as u64) as usize;
    random_connected_graph(n, m, Seed(rng.next_u64())).expect("feasible size")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtremalRank {
    Min,
    Max,
    SecondMax,
}

impl ExtremalRank {
    pub fn as_str(self) -> &'static str {
        match self {
            ExtremalRank::Min => "min",
            ExtremalRank::Max => "max",
            ExtremalRank::SecondMax => "second_max",
        }
    }
}

/// One extremal harmonic-index value over the trees of a given order, with
/// the canonical forms of every attaining tree.
#[derive(Debug, Clone)]
pub struct ExtremalRecord {
    pub n: usize,
    pub rank: ExtremalRank,
    pub value: Rational,
    pub attaining: Vec<String>,
}

/// Extremal tree values for every order 3..=n_max: minimum, maximum, and
/// (when at least two distinct values exist) the second-largest value.
pub fn extremal_records(n_max: usize) -> Result<Vec<ExtremalRecord>, VerifyError> {
    if !(3..=14).contains(&n_max) {
        return Err(VerifyError::NMaxOutOfRange { n_max });
    }
    let mut out = Vec::new();
    for n in 3..=n_max {
        let mut by_value: BTreeMap<Rational, BTreeSet<String>> = BTreeMap::new();
        for t in all_free_trees(n).expect("order in range") {
            by_value
                .entry(harmonic_index(&t))
                .or_default()
                .insert(canonical_form(&t).expect("order in range"));
        }
        let record = |rank: ExtremalRank, value: &Rational, forms: &BTreeSet<String>| {
            ExtremalRecord {
                n,
                rank,
                value: value.clone(),
                attaining: forms.iter().cloned().collect(),
            }
        };
        let (min_value, min_forms) = by_value.iter().next().expect("trees exist");
        out.push(record(ExtremalRank::Min, min_value, min_forms));
        let (max_value, max_forms) = by_value.iter().next_back().expect("trees exist");
        out.push(record(ExtremalRank::Max, max_value, max_forms));
        if let Some((second_value, second_forms)) = by_value.iter().rev().nth(1) {
            out.push(record(ExtremalRank::SecondMax, second_value, second_forms));
        }
    }
    Ok(out)
}
