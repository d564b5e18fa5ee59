//! Brute-force checks of the extremal results against exhaustive enumeration.
//!
//! Every comparison here is exact ([`RadicalValue`] ordering); floats appear
//! only inside the serialized reports.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{tree_max_bound, unicyclic_max_bound, unicyclic_top_two, RankedClass};
use crate::canon::{canonical_code, CanonicalCode};
use crate::constructions::{attach_path, extremal_family, Branch, GraphClass, GraphClassSpec};
use crate::enumerate::{enumerate_class, enumerate_trees, ClassMember, DegreeFilter};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::indices::{index_f64, sum_connectivity, IndexKind};
use crate::radical::RadicalValue;
use crate::sample::random_connected;
use crate::transforms::{merge_pendant_paths, reattach_to_pendant};

pub const TREE_VERIFY_MAX: usize = 12;
pub const UNICYCLIC_VERIFY_MAX: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchFlags {
    /// Brute-force maximum equals the closed form exactly.
    pub value: bool,
    /// Argmax set equals the characterized family, up to isomorphism.
    pub set: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub spec: GraphClassSpec,
    pub branch: Branch,
    pub class_size: usize,
    pub formula_value: RadicalValue,
    /// `None` only for an empty class.
    pub brute_max: Option<RadicalValue>,
    /// No member exceeds the closed form.
    pub bound_holds: bool,
    pub argmax_codes: Vec<CanonicalCode>,
    pub argmax_graph6: Vec<String>,
    pub expected_codes: Vec<CanonicalCode>,
    /// Per argmax graph: degree-two neighbors of its max-degree vertex
    /// (the largest count when several vertices reach the maximum degree).
    pub k_profile: Vec<usize>,
    /// The `k` every extremal graph must have.
    pub k_expected: usize,
    pub matches: MatchFlags,
}

impl ExtremalReport {
    pub fn passed(&self) -> bool {
        self.bound_holds
            && self.matches.value
            && self.matches.set
            && self.k_profile.iter().all(|&k| k == self.k_expected)
    }
}

fn degree_two_neighbors_of_hub(g: &Graph) -> usize {
    let delta = g.max_degree();
    (0..g.n())
        .filter(|&v| g.degree(v) == delta)
        .map(|v| g.neighbors(v).iter().filter(|&&w| g.degree(w) == 2).count())
        .max()
        .unwrap_or(0)
}

fn expected_k(spec: &GraphClassSpec) -> usize {
    let GraphClassSpec { n, delta, class } = *spec;
    match (class, spec.branch()) {
        (GraphClass::Tree, Branch::HighDegree) => n - delta - 1,
        // the two cycle neighbors of the hub also have degree two
        (GraphClass::Unicyclic, Branch::HighDegree) => n - delta + 1,
        (_, Branch::LowDegree) => delta,
    }
}

/// Members attaining the exact maximum, with that maximum.
fn argmax<'a>(
    scored: &'a [(RadicalValue, &'a ClassMember)],
) -> Option<(RadicalValue, Vec<&'a ClassMember>)> {
    let best = scored.iter().map(|(v, _)| v).max()?.clone();
    let winners = scored
        .iter()
        .filter(|(v, _)| *v == best)
        .map(|&(_, m)| m)
        .collect();
    Some((best, winners))
}

fn score<'a>(members: &[&'a ClassMember]) -> Vec<(RadicalValue, &'a ClassMember)> {
    members
        .iter()
        .map(|&m| {
            (
                sum_connectivity(&m.graph).expect("class members have edges"),
                m,
            )
        })
        .collect()
}

fn report_for(spec: GraphClassSpec, members: &[&ClassMember]) -> Result<ExtremalReport> {
    let formula_value = match spec.class {
        GraphClass::Tree => tree_max_bound(spec.n, spec.delta)?,
        GraphClass::Unicyclic => unicyclic_max_bound(spec.n, spec.delta)?,
    };
    let expected: BTreeSet<CanonicalCode> = extremal_family(&spec)?
        .iter()
        .map(|g| canonical_code(g).expect("constructions are connected"))
        .collect();

    let scored = score(members);
    let (brute_max, winners) = match argmax(&scored) {
        Some((value, winners)) => (Some(value), winners),
        None => (None, Vec::new()),
    };
    let argmax_codes: Vec<CanonicalCode> = winners.iter().map(|m| m.code.clone()).collect();
    let found: BTreeSet<&CanonicalCode> = argmax_codes.iter().collect();
    let set_match = !found.is_empty() && found == expected.iter().collect();

    Ok(ExtremalReport {
        k_expected: expected_k(&spec),
        branch: spec.branch(),
        class_size: members.len(),
        bound_holds: brute_max.as_ref().is_some_and(|m| *m <= formula_value),
        matches: MatchFlags {
            value: brute_max.as_ref() == Some(&formula_value),
            set: set_match,
        },
        argmax_graph6: winners.iter().map(|m| emit_graph6(&m.graph)).collect(),
        k_profile: winners
            .iter()
            .map(|m| degree_two_neighbors_of_hub(&m.graph))
            .collect(),
        argmax_codes,
        expected_codes: expected.into_iter().collect(),
        formula_value,
        brute_max,
        spec,
    })
}

fn check_n(class: GraphClass, n: usize) -> Result<()> {
    let max = match class {
        GraphClass::Tree => TREE_VERIFY_MAX,
        GraphClass::Unicyclic => UNICYCLIC_VERIFY_MAX,
    };
    if !(3..=max).contains(&n) {
        return Err(Error::Range(format!(
            "{class} verification covers 3 <= n <= {max}, got {n}"
        )));
    }
    Ok(())
}

/// Enumerates one family and compares its maximum and argmax set against
/// the closed form and the characterized extremal graphs.
pub fn verify_maximum(class: GraphClass, n: usize, delta: usize) -> Result<ExtremalReport> {
    check_n(class, n)?;
    let spec = GraphClassSpec::new(class, n, delta)?;
    let members = enumerate_class(class, n, DegreeFilter::exactly(delta))?;
    report_for(spec, &members.iter().collect::<Vec<_>>())
}

pub fn verify_tree_maximum(n: usize, delta: usize) -> Result<ExtremalReport> {
    verify_maximum(GraphClass::Tree, n, delta)
}

pub fn verify_unicyclic_maximum(n: usize, delta: usize) -> Result<ExtremalReport> {
    verify_maximum(GraphClass::Unicyclic, n, delta)
}

/// Every `Δ` in `2..n` for each `n` in `orders`, enumerating each order once.
pub fn verify_sweep(
    class: GraphClass,
    orders: std::ops::RangeInclusive<usize>,
) -> Result<Vec<ExtremalReport>> {
    for n in orders.clone() {
        check_n(class, n)?;
    }
    let per_n: Vec<Result<Vec<ExtremalReport>>> = orders
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let all = enumerate_class(class, n, DegreeFilter::any())?;
            (2..n)
                .into_par_iter()
                .map(|delta| {
                    let spec = GraphClassSpec::new(class, n, delta)?;
                    let members: Vec<&ClassMember> = all
                        .iter()
                        .filter(|m| m.graph.max_degree() == delta)
                        .collect();
                    report_for(spec, &members)
                })
                .collect()
        })
        .collect();
    Ok(per_n
        .into_iter()
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RankEntry {
    pub value: RadicalValue,
    pub codes: Vec<CanonicalCode>,
    pub graph6: Vec<String>,
}

impl RankEntry {
    fn from_members(value: RadicalValue, members: &[&ClassMember]) -> Self {
        RankEntry {
            value,
            codes: members.iter().map(|m| m.code.clone()).collect(),
            graph6: members.iter().map(|m| emit_graph6(&m.graph)).collect(),
        }
    }

    fn from_ranked(ranked: &RankedClass) -> Self {
        let mut members: Vec<ClassMember> = ranked
            .graphs
            .iter()
            .map(|g| ClassMember::new(g).expect("constructions are connected"))
            .collect();
        members.sort_by(|a, b| a.code.cmp(&b.code));
        Self::from_members(ranked.value.clone(), &members.iter().collect::<Vec<_>>())
    }
}

/// The two largest `χ` values over all unicyclic graphs on `n` vertices,
/// next to the predicted ranking.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RankingReport {
    pub n: usize,
    pub class_size: usize,
    pub observed: Vec<RankEntry>,
    pub expected: Vec<RankEntry>,
    pub first_matches: bool,
    pub second_matches: bool,
    /// First value minus second value is strictly positive.
    pub gap_positive: bool,
}

impl RankingReport {
    pub fn passed(&self) -> bool {
        self.first_matches && self.second_matches && self.gap_positive
    }
}

pub fn verify_unicyclic_ranking(n: usize) -> Result<RankingReport> {
    if !(4..=UNICYCLIC_VERIFY_MAX).contains(&n) {
        return Err(Error::Range(format!(
            "ranking verification covers 4 <= n <= {UNICYCLIC_VERIFY_MAX}, got {n}"
        )));
    }
    let all = enumerate_class(GraphClass::Unicyclic, n, DegreeFilter::any())?;
    let members: Vec<&ClassMember> = all.iter().collect();
    let scored = score(&members);

    let mut observed = Vec::new();
    let mut remaining = scored;
    for _ in 0..2 {
        let Some((value, winners)) = argmax(&remaining) else {
            break;
        };
        observed.push(RankEntry::from_members(value.clone(), &winners));
        remaining.retain(|(v, _)| *v != value);
    }

    let top = unicyclic_top_two(n)?;
    let expected = vec![
        RankEntry::from_ranked(&top.first),
        RankEntry::from_ranked(&top.second),
    ];
    let same = |i: usize| {
        observed.get(i).is_some_and(|o: &RankEntry| {
            o.value == expected[i].value
                && o.codes.iter().collect::<BTreeSet<_>>() == expected[i].codes.iter().collect()
        })
    };
    let gap_positive = observed.len() == 2
        && (&observed[0].value - &observed[1].value).signum() == std::cmp::Ordering::Greater;
    Ok(RankingReport {
        n,
        class_size: all.len(),
        first_matches: same(0),
        second_matches: same(1),
        gap_positive,
        observed,
        expected,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub before: String,
    pub after: String,
    pub witnesses: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TrialSummary {
    pub trials: usize,
    /// Draws thrown away because they did not meet the transform's hypotheses.
    pub redraws: usize,
    pub violations: Vec<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonotonicityReport {
    pub seed: u64,
    pub merge: TrialSummary,
    pub reattach: TrialSummary,
    pub warning: Option<String>,
}

impl MonotonicityReport {
    pub fn passed(&self) -> bool {
        self.merge.violations.is_empty() && self.reattach.violations.is_empty()
    }
}

/// Largest graph produced by the random instances.
const TRIAL_MAX_VERTICES: usize = 12;

fn check_increase(
    summary: &mut TrialSummary,
    before: &Graph,
    outcome: Result<Graph>,
    witnesses: Vec<usize>,
) {
    let violation = |detail: String, after: String| Counterexample {
        before: emit_graph6(before),
        after,
        witnesses: witnesses.clone(),
        detail,
    };
    match outcome {
        Err(e) => summary
            .violations
            .push(violation(format!("transform refused: {e}"), String::new())),
        Ok(after) => {
            let (x, y) = (
                sum_connectivity(before).expect("instances have edges"),
                sum_connectivity(&after).expect("instances have edges"),
            );
            let counts_kept = after.n() == before.n() && after.m() == before.m();
            if y <= x || !counts_kept {
                summary
                    .violations
                    .push(violation(format!("chi {x} -> {y}"), emit_graph6(&after)));
            }
        }
    }
}

fn random_base<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let chords = if n >= 4 {
        rng.gen_range(0..=2)
    } else {
        rng.gen_range(0..=1)
    };
    random_connected(rng, n, chords)
}

/// One merge trial: two pendant paths of lengths `a >= b` planted at a random
/// vertex of a random connected base with at least two vertices.
fn merge_trial<R: Rng>(rng: &mut R, summary: &mut TrialSummary) {
    let base_n = rng.gen_range(2..=TRIAL_MAX_VERTICES - 2);
    let base = random_base(rng, base_n);
    let u = rng.gen_range(0..base_n);
    let total = rng.gen_range(2..=TRIAL_MAX_VERTICES - base_n);
    let b = rng.gen_range(1..=total / 2);
    let a = total - b;
    let g = attach_path(&base, u, a).expect("u is a base vertex");
    let g = attach_path(&g, u, b).expect("u is a base vertex");
    let (p1, p2) = (base_n + a - 1, base_n + a + b - 1);
    let outcome = merge_pendant_paths(&g, u, p1, p2);
    check_increase(summary, &g, outcome, vec![u, p1, p2]);
}

/// One reattach trial: a pendant path at a degree-two vertex `u` of a random
/// connected base. Returns false when the draw does not qualify.
fn reattach_trial<R: Rng>(rng: &mut R, summary: &mut TrialSummary) -> bool {
    let base_n = rng.gen_range(3..=TRIAL_MAX_VERTICES - 1);
    let base = random_base(rng, base_n);
    let candidates: Vec<usize> = (0..base_n).filter(|&v| base.degree(v) == 2).collect();
    let Some(&u) = candidates.choose(rng) else {
        return false;
    };
    let a = rng.gen_range(1..=TRIAL_MAX_VERTICES - base_n);
    let h = attach_path(&base, u, a).expect("u is a base vertex");
    let (x, y) = (base.neighbors(u)[0], base.neighbors(u)[1]);
    if h.degree(x).min(h.degree(y)) > 4 {
        return false;
    }
    let u2 = if rng.gen_bool(0.5) { x } else { y };
    let u_prime = base_n + a - 1;
    let outcome = reattach_to_pendant(&h, u, u2, u_prime);
    check_increase(summary, &h, outcome, vec![u, u2, u_prime]);
    true
}

/// Random instances of both transforms, each checked for a strict exact
/// increase of `χ`. Deterministic in `seed`.
pub fn monotonicity_suite(trials: usize, seed: u64) -> MonotonicityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut merge = TrialSummary {
        trials,
        ..Default::default()
    };
    for _ in 0..trials {
        merge_trial(&mut rng, &mut merge);
    }
    let mut reattach = TrialSummary {
        trials,
        ..Default::default()
    };
    let mut done = 0;
    while done < trials {
        if reattach_trial(&mut rng, &mut reattach) {
            done += 1;
        } else {
            reattach.redraws += 1;
        }
    }
    MonotonicityReport {
        seed,
        merge,
        reattach,
        warning: (trials == 0).then(|| "zero trials requested; the check is vacuous".to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub n: usize,
    pub max_delta: usize,
    pub sample_size: usize,
    pub coefficient: f64,
}

/// Pearson correlation of `χ` and `R` over all trees on `n` vertices with
/// maximum degree at most `max_delta`.
pub fn index_correlation(n: usize, max_delta: usize) -> Result<CorrelationReport> {
    if !(4..=14).contains(&n) {
        return Err(Error::Range(format!(
            "correlation covers 4 <= n <= 14, got {n}"
        )));
    }
    let trees = enumerate_trees(n, DegreeFilter::at_most(max_delta))?;
    if trees.len() < 3 {
        return Err(Error::SampleTooSmall(trees.len()));
    }
    let pairs: Vec<(f64, f64)> = trees
        .iter()
        .map(|m| {
            (
                index_f64(&m.graph, IndexKind::SumConnectivity)
                    .expect("trees on n >= 4 have edges"),
                index_f64(&m.graph, IndexKind::ProductConnectivity)
                    .expect("trees on n >= 4 have edges"),
            )
        })
        .collect();
    let coefficient = pearson(&pairs).ok_or(Error::DegenerateSample)?;
    Ok(CorrelationReport {
        n,
        max_delta,
        sample_size: trees.len(),
        coefficient,
    })
}

fn pearson(pairs: &[(f64, f64)]) -> Option<f64> {
    let len = pairs.len() as f64;
    let mean_x = pairs.iter().map(|p| p.0).sum::<f64>() / len;
    let mean_y = pairs.iter().map(|p| p.1).sum::<f64>() / len;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for &(x, y) in pairs {
        let (dx, dy) = (x - mean_x, y - mean_y);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// Everything `verify --all` runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub trees: Vec<ExtremalReport>,
    pub unicyclic: Vec<ExtremalReport>,
    pub rankings: Vec<RankingReport>,
    pub monotonicity: MonotonicityReport,
    pub passed: bool,
}

pub fn verify_all(trials: usize, seed: u64) -> Result<SuiteReport> {
    let trees = verify_sweep(GraphClass::Tree, 4..=TREE_VERIFY_MAX)?;
    let unicyclic = verify_sweep(GraphClass::Unicyclic, 4..=UNICYCLIC_VERIFY_MAX)?;
    let rankings = (4..=UNICYCLIC_VERIFY_MAX)
        .into_par_iter()
        .map(verify_unicyclic_ranking)
        .collect::<Result<Vec<_>>>()?;
    let monotonicity = monotonicity_suite(trials, seed);
    let passed = trees.iter().all(ExtremalReport::passed)
        && unicyclic.iter().all(ExtremalReport::passed)
        && rankings.iter().all(RankingReport::passed)
        && monotonicity.passed();
    Ok(SuiteReport {
        trees,
        unicyclic,
        rankings,
        monotonicity,
        passed,
    })
}
