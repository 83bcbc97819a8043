//! The acceptance matrix. Each criterion draws a fixed, seeded batch of
//! instances, checks one family of inequalities at pinned tolerances and
//! reports how many instances violated it.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    abelian_gap_bound, derived_index_check, nilpotent_exponents, nilpotent_gap_bound, theta_min_set_size, ThetaProfile,
};
use crate::catalog::{abelian_groups_up_to, action_stabilizer, catalog, small_catalog, Action};
use crate::error::{Error, Result};
use crate::montecarlo::{random_symmetric_multiset_of_size, random_symmetric_set, sample_multiset, trial_rng, verify_theorem1};
use crate::permcore::{
    intermediate_subgroups, lower_central_series, normal_core, FiniteGroup, Permutation, Transversal, DEFAULT_SUBGROUP_LIMIT,
};
use crate::schreier::{
    bipartite_criterion, dedup_counterexample_search, rs_induce, rs_induce_multiset, symmetric_subsets, symmetrize,
    Multiset, SchreierGraph, SearchOptions, SymmetricMultiset,
};
use crate::spectral::{rayleigh_quotient, sym_eigenvalues, SpectralSummary, EIGEN_TOL};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_917;
/// Tolerance for eigenvalue containment across graphs.
pub const CONTAINMENT_TOL: f64 = 1e-6;
/// Tolerance for Rayleigh quotients against the extreme eigenvalues.
pub const RAYLEIGH_TOL: f64 = 1e-9;
/// Tolerance for the cycle-graph oracle.
pub const CYCLE_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: String,
    pub instances: usize,
    pub violations: usize,
    pub pass: bool,
    pub detail: String,
    pub elapsed_secs: f64,
    pub time_limit_secs: Option<f64>,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {}: {} ({} instances, {} violations, {:.2}s) {}",
            self.id,
            self.title,
            if self.pass { "PASS" } else { "FAIL" },
            self.instances,
            self.violations,
            self.elapsed_secs,
            self.detail
        )
    }
}

struct Tally {
    instances: usize,
    violations: usize,
    extra_ok: bool,
    detail: String,
}

impl Tally {
    fn new(instances: usize, violations: usize, detail: String) -> Tally {
        Tally { instances, violations, extra_ok: true, detail }
    }
}

fn finish(id: u8, title: &str, limit: Option<f64>, start: Instant, tally: Result<Tally>) -> CriterionOutcome {
    let elapsed = start.elapsed().as_secs_f64();
    let within = limit.map_or(true, |l| elapsed < l);
    match tally {
        Ok(t) => CriterionOutcome {
            id,
            title: title.to_string(),
            instances: t.instances,
            violations: t.violations,
            pass: t.violations == 0 && t.extra_ok && within,
            detail: if within { t.detail } else { format!("{}; time limit exceeded", t.detail) },
            elapsed_secs: elapsed,
            time_limit_secs: limit,
        },
        Err(e) => CriterionOutcome {
            id,
            title: title.to_string(),
            instances: 0,
            violations: 0,
            pass: false,
            detail: format!("error: {e}"),
            elapsed_secs: elapsed,
            time_limit_secs: limit,
        },
    }
}

pub const CRITERIA: [(u8, &str); 12] = [
    (1, "cycle spectrum oracle"),
    (2, "spectrum containment"),
    (3, "abelian gap bound"),
    (4, "induced-graph monotonicity"),
    (5, "deduplicated counterexamples"),
    (6, "random two-sided expansion"),
    (7, "intermediate-subgroup bound and set size"),
    (8, "nilpotent gap bound"),
    (9, "derived index and exponents"),
    (10, "bipartite criterion"),
    (11, "induction size law and inverses"),
    (12, "Rayleigh quotients"),
];

/// Runs one criterion with the given seed.
pub fn run_criterion(id: u8, seed: u64) -> CriterionOutcome {
    let title = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, t)| *t)
        .unwrap_or("unknown criterion");
    let start = Instant::now();
    let (limit, tally) = match id {
        1 => (Some(10.0), cycle_oracle()),
        2 => (None, containment(seed)),
        3 => (Some(300.0), abelian_sweep(seed)),
        4 => (None, monotonicity(seed)),
        5 => (Some(60.0), dedup_search()),
        6 => (Some(300.0), random_expansion(seed)),
        7 => (None, glwi_sweep(seed)),
        8 => (Some(600.0), nilpotent_sweep(seed).map(|(t, _)| t)),
        9 => (None, derived_index_sweep(seed)),
        10 => (None, bipartite_sweep(seed)),
        11 => (None, induction_law(seed)),
        12 => (None, rayleigh(seed)),
        _ => (None, Err(Error::InvalidParameter(format!("no criterion {id}")))),
    };
    finish(id, title, limit, start, tally)
}

/// Runs all twelve criteria in order.
pub fn run_all(seed: u64) -> Vec<CriterionOutcome> {
    CRITERIA.iter().map(|&(id, _)| run_criterion(id, seed)).collect()
}

fn summary(t: &Transversal, s: &SymmetricMultiset) -> Result<SpectralSummary> {
    let graph = SchreierGraph::on_cosets(t, s)?;
    Ok(SpectralSummary::from_eigenvalues(sym_eigenvalues(&graph.walk())?))
}

fn all_subgroups(g: &FiniteGroup) -> Result<Vec<FiniteGroup>> {
    intermediate_subgroups(g, &FiniteGroup::trivial(g.degree()), DEFAULT_SUBGROUP_LIMIT)
}

/// A transversal with one uniformly chosen representative per coset.
pub fn random_transversal<R: Rng + ?Sized>(g: &FiniteGroup, h: &FiniteGroup, rng: &mut R) -> Result<Transversal> {
    let base = Transversal::new(g, h)?;
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); base.index()];
    for x in 0..g.order() {
        blocks[base.coset_of(x)].push(x);
    }
    let reps: Vec<Permutation> = blocks
        .iter()
        .map(|b| g.element(*b.choose(rng).expect("cosets are non-empty")).clone())
        .collect();
    Transversal::with_representatives(g, h, &reps)
}

fn size_in<R: Rng + ?Sized>(rng: &mut R, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo..=hi)
}

/// Groups of the catalog with at most `max_order` elements, each with its
/// full subgroup list.
fn catalog_with_subgroups(max_order: usize, names: Vec<String>) -> Result<Vec<(String, FiniteGroup, Vec<FiniteGroup>)>> {
    names
        .into_par_iter()
        .filter_map(|name| match catalog(&name) {
            Ok(g) if g.order() <= max_order => Some(Ok((name, g))),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        })
        .map(|r| {
            let (name, g) = r?;
            let subs = all_subgroups(&g)?;
            Ok((name, g, subs))
        })
        .collect()
}

fn cycle_oracle() -> Result<Tally> {
    let errors = (3..=64usize)
        .into_par_iter()
        .map(|n| {
            let g = catalog(&format!("cyclic:{n}"))?;
            let s = symmetrize(&g.generators().iter().cloned().collect())?;
            let t = Transversal::new(&g, &FiniteGroup::trivial(n))?;
            let gap = summary(&t, &s)?.gap;
            Ok((gap - (1.0 - (2.0 * std::f64::consts::PI / n as f64).cos())).abs())
        })
        .collect::<Result<Vec<f64>>>()?;
    let worst = errors.iter().cloned().fold(0.0, f64::max);
    Ok(Tally::new(
        errors.len(),
        errors.iter().filter(|&&e| e > CYCLE_TOL).count(),
        format!("max |gap - (1 - cos 2π/n)| = {worst:.2e}"),
    ))
}

fn max_distance_to(spectrum: &[f64], sorted_desc: &[f64]) -> f64 {
    spectrum
        .iter()
        .map(|&x| sorted_desc.iter().map(|&y| (x - y).abs()).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max)
}

fn containment(seed: u64) -> Result<Tally> {
    let pool = catalog_with_subgroups(48, small_catalog(48))?;
    let pool: Vec<_> = pool.into_iter().filter(|(_, g, _)| g.order() >= 2).collect();
    let jobs: Vec<(usize, usize)> = pool
        .iter()
        .enumerate()
        .flat_map(|(gi, (_, _, subs))| (0..subs.len().min(3)).map(move |k| (gi, k)))
        .collect();
    let results = jobs
        .par_iter()
        .enumerate()
        .map(|(i, &(gi, k))| {
            let (_, g, subs) = &pool[gi];
            let mut rng = trial_rng(seed ^ 0x02, i);
            // the first subgroup is the trivial one; spread the others
            let y = if k == 0 { &subs[subs.len() / 2] } else { &subs[rng.gen_range(1..subs.len())] };
            let s = random_symmetric_multiset_of_size(g, size_in(&mut rng, 2, 6), &mut rng)?;
            let cayley = summary(&Transversal::new(g, &FiniteGroup::trivial(g.degree()))?, &s)?;
            let schreier = summary(&Transversal::new(g, y)?, &s)?;
            Ok(max_distance_to(&schreier.eigenvalues, &cayley.eigenvalues))
        })
        .collect::<Result<Vec<f64>>>()?;
    let worst = results.iter().cloned().fold(0.0, f64::max);
    let mut t = Tally::new(
        results.len(),
        results.iter().filter(|&&d| d > CONTAINMENT_TOL).count(),
        format!("max distance {worst:.2e}"),
    );
    t.extra_ok = results.len() >= 50;
    Ok(t)
}

fn abelian_sweep(seed: u64) -> Result<Tally> {
    let names = abelian_groups_up_to(64);
    let groups = names.iter().map(|n| catalog(n)).collect::<Result<Vec<_>>>()?;
    let jobs: Vec<(usize, usize)> = (0..groups.len()).flat_map(|gi| (0..200).map(move |k| (gi, k))).collect();
    let slack = jobs
        .par_iter()
        .enumerate()
        .map(|(i, &(gi, _))| {
            let g = &groups[gi];
            let mut rng = trial_rng(seed ^ 0x03, i);
            let s = random_symmetric_multiset_of_size(g, size_in(&mut rng, 2, 8), &mut rng)?;
            let gap = summary(&Transversal::new(g, &FiniteGroup::trivial(g.degree()))?, &s)?.gap;
            Ok(abelian_gap_bound(g.order(), s.size())? - gap)
        })
        .collect::<Result<Vec<f64>>>()?;
    let tightest = slack.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok(Tally::new(
        slack.len(),
        slack.iter().filter(|&&d| d < -EIGEN_TOL).count(),
        format!("{} groups, smallest slack {tightest:.3e}", groups.len()),
    ))
}

/// One `Y ≤ H ≤ G` instance with its connection multiset and the measured
/// quantities of both graphs.
#[derive(Clone, Debug)]
pub struct ChainRecord {
    pub group: String,
    pub g_order: usize,
    pub h_order: usize,
    pub y_order: usize,
    pub set_size: usize,
    pub induced_size: usize,
    pub gap_g: f64,
    pub lambda_g: f64,
    pub gap_h: f64,
    pub lambda_h: f64,
    /// `|S̄| = |G:H|·|S|` and the inverse identity, for `S` and for a
    /// non-symmetric multiset drawn alongside it.
    pub law_ok: bool,
    pub theta_g: f64,
    pub glwi_g: f64,
    pub theta_h: f64,
    pub glwi_h: f64,
}

fn induction_law_holds(t: &Transversal, s: &Multiset) -> Result<bool> {
    let induced = rs_induce_multiset(t, s)?;
    let size_ok = induced.size() == t.index() * s.size();
    let inverse_ok = rs_induce_multiset(t, &s.inverse())? == induced.inverse();
    let inside = induced.support().all(|p| t.subgroup().contains(p));
    Ok(size_ok && inverse_ok && inside)
}

/// The randomized chain instances shared by criteria 4, 7 and 11.
pub fn chain_instances(seed: u64, count: usize) -> Result<Vec<ChainRecord>> {
    let pool = catalog_with_subgroups(48, small_catalog(48))?;
    let pool: Vec<_> = pool.into_iter().filter(|(_, g, _)| g.order() >= 2).collect();
    (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed ^ 0x04, i);
            let (name, g, subs) = &pool[rng.gen_range(0..pool.len())];
            let y = subs.choose(&mut rng).expect("every group has a subgroup");
            let overgroups: Vec<&FiniteGroup> = subs.iter().filter(|h| y.is_subgroup_of(h)).collect();
            let h = *overgroups.choose(&mut rng).expect("G contains Y");
            let s = random_symmetric_multiset_of_size(g, size_in(&mut rng, 2, 6), &mut rng)?;
            let t = if rng.gen_bool(0.5) { Transversal::new(g, h)? } else { random_transversal(g, h, &mut rng)? };
            let induced = rs_induce(&t, &s)?;
            let loose = sample_multiset(g, size_in(&mut rng, 1, 5), &mut rng);
            let law_ok = induced.size() == t.index() * s.size()
                && induction_law_holds(&t, s.as_multiset())?
                && induction_law_holds(&t, &loose)?;

            let on_g = summary(&Transversal::new(g, y)?, &s)?;
            let on_h = summary(&Transversal::new(h, y)?, &induced)?;
            let profile_g = ThetaProfile::compute(g, y, DEFAULT_SUBGROUP_LIMIT)?;
            let profile_h = ThetaProfile::compute(h, y, DEFAULT_SUBGROUP_LIMIT)?;
            Ok(ChainRecord {
                group: name.clone(),
                g_order: g.order(),
                h_order: h.order(),
                y_order: y.order(),
                set_size: s.size(),
                induced_size: induced.size(),
                gap_g: on_g.gap,
                lambda_g: on_g.two_sided_lambda,
                gap_h: on_h.gap,
                lambda_h: on_h.two_sided_lambda,
                law_ok,
                theta_g: profile_g.theta(),
                glwi_g: profile_g.glwi(s.size())?.value,
                theta_h: profile_h.theta(),
                glwi_h: profile_h.glwi(induced.size())?.value,
            })
        })
        .collect()
}

/// Number of randomized chain instances.
pub const CHAIN_INSTANCES: usize = 600;

fn monotonicity(seed: u64) -> Result<Tally> {
    let records = chain_instances(seed, CHAIN_INSTANCES)?;
    let bad = records
        .iter()
        .filter(|r| r.gap_h < r.gap_g - EIGEN_TOL || r.lambda_h > r.lambda_g + EIGEN_TOL)
        .count();
    let proper = records.iter().filter(|r| r.h_order < r.g_order && r.h_order > r.y_order).count();
    Ok(Tally::new(records.len(), bad, format!("{proper} with Y < H < G")))
}

/// `Y = 1 ≤ ⟨r⟩ ≤ D₈` for the search and the law checks.
fn dihedral_chain() -> Result<(FiniteGroup, FiniteGroup, FiniteGroup)> {
    let g = catalog("dihedral:8")?;
    let h = g.subgroup_generated_by(&g.generators()[..1])?;
    let y = FiniteGroup::trivial(g.degree());
    Ok((g, h, y))
}

fn dedup_search() -> Result<Tally> {
    let (g, h, y) = dihedral_chain()?;
    let out = dedup_counterexample_search(&g, &h, &y, &SearchOptions::default())?;
    let mut t = Tally::new(
        out.instances,
        out.multiset_violations.len(),
        format!(
            "{} set witnesses, {} transversal(s) tried",
            out.witnesses.len(),
            out.transversals_tried
        ),
    );
    t.extra_ok = !out.witnesses.is_empty();
    Ok(t)
}

fn random_expansion(seed: u64) -> Result<Tally> {
    let g = catalog("sym:6")?;
    let y = action_stabilizer(&g, Action::Natural)?;
    let stats = verify_theorem1(&g, &y, 0.25, 0.25, 400, seed)?;
    let violations = usize::from(!stats.tail_ok()) + usize::from(!stats.mean_ok());
    Ok(Tally::new(
        stats.trials,
        violations,
        format!(
            "m = {}, tail {:.4} ≤ {:.4}, mean {:.4} ≤ 0.5",
            stats.sample_size,
            stats.empirical_tail,
            stats.tail_threshold(),
            stats.empirical_mean
        ),
    ))
}

/// `gap ≤ bound` and the set-size consequence for `ε ∈ {0.1, 0.3, 0.5}`.
fn glwi_violations(gap: f64, bound: f64, theta: f64, set_size: usize) -> Result<usize> {
    let mut bad = usize::from(gap > bound + EIGEN_TOL);
    for eps in [0.1, 0.3, 0.5] {
        if gap >= eps && (set_size as f64) < theta_min_set_size(theta, eps)? - 1e-9 {
            bad += 1;
        }
    }
    Ok(bad)
}

fn glwi_sweep(seed: u64) -> Result<Tally> {
    let mut instances = 0;
    let mut bad = 0;
    for r in chain_instances(seed, CHAIN_INSTANCES)? {
        bad += glwi_violations(r.gap_g, r.glwi_g, r.theta_g, r.set_size)?;
        bad += glwi_violations(r.gap_h, r.glwi_h, r.theta_h, r.induced_size)?;
        instances += 2;
    }
    // the regular abelian instances of criterion 3, where Θ = |G|
    let names = abelian_groups_up_to(64);
    let groups = names.iter().map(|n| catalog(n)).collect::<Result<Vec<_>>>()?;
    let jobs: Vec<usize> = (0..groups.len()).flat_map(|gi| std::iter::repeat(gi).take(200)).collect();
    let profiles = groups
        .par_iter()
        .map(|g| ThetaProfile::compute(g, &FiniteGroup::trivial(g.degree()), DEFAULT_SUBGROUP_LIMIT))
        .collect::<Result<Vec<_>>>()?;
    let abelian_bad = jobs
        .par_iter()
        .enumerate()
        .map(|(i, &gi)| {
            let g = &groups[gi];
            let mut rng = trial_rng(seed ^ 0x03, i);
            let s = random_symmetric_multiset_of_size(g, size_in(&mut rng, 2, 8), &mut rng)?;
            let gap = summary(&Transversal::new(g, &FiniteGroup::trivial(g.degree()))?, &s)?.gap;
            let p = &profiles[gi];
            glwi_violations(gap, p.glwi(s.size())?.value, p.theta(), s.size())
        })
        .collect::<Result<Vec<usize>>>()?;
    instances += jobs.len();
    bad += abelian_bad.iter().sum::<usize>();
    Ok(Tally::new(instances, bad, String::new()))
}

/// One nilpotent instance: measured gap against the class bound, plus the
/// derived-index comparison when `⟨Y ∪ S⟩ = G`.
struct NilpotentRecord {
    gap_ok: bool,
    generates: bool,
    derived_ok: bool,
}

fn nilpotent_sweep(seed: u64) -> Result<(Tally, Vec<NilpotentRecord>)> {
    let mut actions: Vec<(FiniteGroup, FiniteGroup, usize)> = Vec::new();
    for name in ["heisenberg:3", "heisenberg:5", "dihedral:8", "dihedral:16"] {
        let g = catalog(name)?;
        let c = lower_central_series(&g).class.ok_or_else(|| Error::InvalidParameter(format!("{name} is not nilpotent")))?;
        for y in all_subgroups(&g)? {
            actions.push((g.clone(), y, c));
        }
    }
    let jobs: Vec<(usize, usize)> = (0..actions.len()).flat_map(|a| (0..100).map(move |k| (a, k))).collect();
    let records = jobs
        .par_iter()
        .enumerate()
        .map(|(i, &(a, _))| {
            let (g, y, c) = &actions[a];
            let mut rng: ChaCha8Rng = trial_rng(seed ^ 0x08, i);
            let s = random_symmetric_multiset_of_size(g, size_in(&mut rng, 2, 8), &mut rng)?;
            let t = Transversal::new(g, y)?;
            let gap = summary(&t, &s)?.gap;
            let bound = nilpotent_gap_bound(t.index(), s.size(), *c)?;
            let check = derived_index_check(g, y, &s)?;
            let disconnected_ok = check.generates || gap <= EIGEN_TOL;
            Ok(NilpotentRecord {
                gap_ok: gap <= bound + EIGEN_TOL && disconnected_ok,
                generates: check.generates,
                derived_ok: !check.hypotheses_hold || check.ok,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let bad = records.iter().filter(|r| !r.gap_ok).count();
    let tally = Tally::new(records.len(), bad, format!("{} actions", actions.len()));
    Ok((tally, records))
}

fn exponent_checks() -> Result<usize> {
    let mut bad = 0;
    let e21 = nilpotent_exponents(2, 1)?;
    let e22 = nilpotent_exponents(2, 2)?;
    bad += usize::from((e21.f - 1.0).abs() > 1e-15);
    bad += usize::from((e22.f - 0.2).abs() > 1e-15);
    bad += usize::from((e22.beta - 0.2).abs() > 1e-15);
    for d in 2..=10usize {
        for c in 1..=8usize {
            let e = nilpotent_exponents(d, c)?;
            let df = d as f64;
            bad += usize::from(e.f < df.powi(-(c as i32) - 1));
            bad += usize::from(e.beta < 1.0 / (2.0 * df.powi(c as i32)));
        }
    }
    Ok(bad)
}

fn derived_index_sweep(seed: u64) -> Result<Tally> {
    let (_, records) = nilpotent_sweep(seed)?;
    let checked: Vec<&NilpotentRecord> = records.iter().filter(|r| r.generates).collect();
    let bad = checked.iter().filter(|r| !r.derived_ok).count() + exponent_checks()?;
    Ok(Tally::new(checked.len(), bad, format!("{} generating instances plus the closed-form exponent checks", checked.len())))
}

/// Per-category counts from the bipartiteness sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteBreakdown {
    pub groups: usize,
    pub short_groups: usize,
    pub instances: usize,
    pub disagreements: usize,
    /// Avoidance held but the graph has an odd cycle.
    pub avoidance_not_bipartite: usize,
    /// Disagreements where `Y` is normal in `G`.
    pub normal_disagreements: usize,
}

/// Compares the avoidance test with breadth-first two-colouring on 100
/// connected random instances per group of order at most 16.
pub fn bipartite_breakdown(seed: u64) -> Result<BipartiteBreakdown> {
    let mut names = small_catalog(16);
    for n in abelian_groups_up_to(16) {
        if !names.contains(&n) {
            names.push(n);
        }
    }
    let pool = catalog_with_subgroups(16, names)?;
    let per_group = pool
        .par_iter()
        .enumerate()
        .map(|(gi, (_, g, subs))| {
            let normal: Vec<bool> = subs
                .iter()
                .map(|y| Ok(normal_core(g, y)?.order() == y.order()))
                .collect::<Result<_>>()?;
            let mut rng = trial_rng(seed ^ 0x0a, gi);
            let mut b = BipartiteBreakdown { groups: 1, ..Default::default() };
            let mut attempts = 0;
            while b.instances < 100 && attempts < 20_000 {
                attempts += 1;
                let yi = rng.gen_range(0..subs.len());
                let y = &subs[yi];
                let size = size_in(&mut rng, 1, g.order().min(6));
                let Ok(s) = random_symmetric_set(g, size, &mut rng) else { continue };
                let graph = SchreierGraph::new(g, y, &s)?;
                let conn = graph.connectivity();
                if !conn.connected {
                    continue;
                }
                b.instances += 1;
                let holds = bipartite_criterion(g, y, &s)?.holds;
                if holds != conn.bipartite {
                    b.disagreements += 1;
                    b.avoidance_not_bipartite += usize::from(holds);
                    b.normal_disagreements += usize::from(normal[yi]);
                }
            }
            b.short_groups = usize::from(b.instances < 100);
            Ok(b)
        })
        .collect::<Result<Vec<BipartiteBreakdown>>>()?;
    Ok(per_group.into_iter().fold(BipartiteBreakdown::default(), |a, b| BipartiteBreakdown {
        groups: a.groups + b.groups,
        short_groups: a.short_groups + b.short_groups,
        instances: a.instances + b.instances,
        disagreements: a.disagreements + b.disagreements,
        avoidance_not_bipartite: a.avoidance_not_bipartite + b.avoidance_not_bipartite,
        normal_disagreements: a.normal_disagreements + b.normal_disagreements,
    }))
}

fn bipartite_sweep(seed: u64) -> Result<Tally> {
    let b = bipartite_breakdown(seed)?;
    let mut t = Tally::new(
        b.instances,
        b.disagreements,
        format!(
            "{} groups, {} short of 100 instances; {} disagreements with normal Y, {} with avoidance but an odd cycle",
            b.groups, b.short_groups, b.normal_disagreements, b.avoidance_not_bipartite
        ),
    );
    t.extra_ok = b.short_groups == 0;
    Ok(t)
}

fn induction_law(seed: u64) -> Result<Tally> {
    let records = chain_instances(seed, CHAIN_INSTANCES)?;
    let mut instances = records.len();
    let mut bad = records.iter().filter(|r| !r.law_ok).count();

    // every call made by the exhaustive search, over every transversal
    let (g, h, _) = dihedral_chain()?;
    let transversals = Transversal::all(&g, &h, 1 << 16)?;
    for s in symmetric_subsets(&g, 1 << 20)? {
        for t in &transversals {
            instances += 1;
            bad += usize::from(!induction_law_holds(t, s.as_multiset())?);
        }
    }
    Ok(Tally::new(instances, bad, String::new()))
}

fn rayleigh(seed: u64) -> Result<Tally> {
    let mut matrices = Vec::new();
    let names = ["cyclic:6", "cyclic:7", "dihedral:8", "sym:4", "alt:4", "heisenberg:3", "elem-abelian:2^3", "sym:3×cyclic:2"];
    let mut rng = trial_rng(seed ^ 0x0c, 0);
    for name in names {
        let g = catalog(name)?;
        let subs = all_subgroups(&g)?;
        for _ in 0..3 {
            let y = subs.choose(&mut rng).expect("non-empty");
            let s = random_symmetric_multiset_of_size(&g, size_in(&mut rng, 1, 6), &mut rng)?;
            matrices.push(SchreierGraph::new(&g, y, &s)?.walk());
        }
    }
    let results = matrices
        .par_iter()
        .enumerate()
        .map(|(i, m)| {
            let eig = sym_eigenvalues(m)?;
            let (hi, lo) = (eig[0], *eig.last().expect("non-empty"));
            let mut rng = trial_rng(seed ^ 0x0c, i + 1);
            let mut bad = 0;
            for _ in 0..1000 {
                let v: Vec<f64> = (0..m.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let q = match rayleigh_quotient(m, &v) {
                    Ok(q) => q,
                    Err(Error::ZeroVector) => continue,
                    Err(e) => return Err(e),
                };
                bad += usize::from(q < lo - RAYLEIGH_TOL || q > hi + RAYLEIGH_TOL);
            }
            Ok(bad)
        })
        .collect::<Result<Vec<usize>>>()?;
    Ok(Tally::new(
        results.len() * 1000,
        results.iter().sum(),
        format!("{} matrices", results.len()),
    ))
}
