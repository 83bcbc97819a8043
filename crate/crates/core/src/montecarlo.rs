//! Random connection multisets, the sample-size and matrix tail formulas,
//! and the seeded trial harness for random two-sided expansion.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::fmt_f64;
use crate::permcore::{FiniteGroup, Transversal};
use crate::schreier::{symmetrize, Multiset, SchreierGraph, SymmetricMultiset};
use crate::spectral::{spectral_summary_capped, DEFAULT_DIM_CAP};

/// Default number of trials per experiment.
pub const DEFAULT_TRIALS: usize = 400;

/// `m` independent uniform draws from `g`, with replacement.
pub fn sample_multiset<R: Rng + ?Sized>(g: &FiniteGroup, m: usize, rng: &mut R) -> Multiset {
    (0..m).map(|_| g.element(rng.gen_range(0..g.order())).clone()).collect()
}

/// `S ⊔ S⁻¹` for `S` of `m` uniform draws; the result has size `2m`.
pub fn random_symmetric_multiset<R: Rng + ?Sized>(g: &FiniteGroup, m: usize, rng: &mut R) -> Result<SymmetricMultiset> {
    if m == 0 {
        return Err(Error::EmptyMultiset);
    }
    symmetrize(&sample_multiset(g, m, rng))
}

/// A random symmetric set (multiplicity one) of exactly `size` elements:
/// first the number of self-inverse elements is drawn among the feasible
/// ones, then that many self-inverse elements and enough inverse pairs.
pub fn random_symmetric_set<R: Rng + ?Sized>(g: &FiniteGroup, size: usize, rng: &mut R) -> Result<SymmetricMultiset> {
    let (mut singles, mut pairs): (Vec<usize>, Vec<usize>) =
        (0..g.order()).filter(|&x| x <= g.inv(x)).partition(|&x| x == g.inv(x));
    let feasible: Vec<usize> = (0..=singles.len().min(size))
        .filter(|&i| (size - i) % 2 == 0 && (size - i) / 2 <= pairs.len())
        .collect();
    if size == 0 || feasible.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "no symmetric set of size {size} in a group of order {}",
            g.order()
        )));
    }
    let i = feasible[rng.gen_range(0..feasible.len())];
    let (chosen_singles, _) = singles.partial_shuffle(rng, i);
    let mut out: Multiset = chosen_singles.iter().map(|&x| g.element(x).clone()).collect();
    let (chosen_pairs, _) = pairs.partial_shuffle(rng, (size - i) / 2);
    for &x in chosen_pairs.iter() {
        out.insert(g.element(x).clone(), 1);
        out.insert(g.element(g.inv(x)).clone(), 1);
    }
    SymmetricMultiset::new(out)
}

/// A random symmetric multiset of exactly `size` elements. Uniform draws are
/// kept with their inverses; a self-inverse draw counts once, so odd sizes
/// are reachable (the identity is always self-inverse).
pub fn random_symmetric_multiset_of_size<R: Rng + ?Sized>(
    g: &FiniteGroup,
    size: usize,
    rng: &mut R,
) -> Result<SymmetricMultiset> {
    if size == 0 {
        return Err(Error::EmptyMultiset);
    }
    let mut out = Multiset::new();
    let mut remaining = size;
    while remaining > 0 {
        let x = rng.gen_range(0..g.order());
        let xi = g.inv(x);
        if xi == x {
            out.insert(g.element(x).clone(), 1);
            remaining -= 1;
        } else if remaining >= 2 {
            out.insert(g.element(x).clone(), 1);
            out.insert(g.element(xi).clone(), 1);
            remaining -= 2;
        }
    }
    SymmetricMultiset::new(out)
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon > 0.0 && epsilon < 0.5 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("epsilon must lie in (0, 1/2), got {epsilon}")))
    }
}

fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("delta must lie in (0, 1), got {delta}")))
    }
}

/// `⌈(ln 4 / ε²)·ln(2|Ω|/δ)⌉`, at least 1.
pub fn required_sample_size(epsilon: f64, delta: f64, omega_size: usize) -> Result<usize> {
    check_epsilon(epsilon)?;
    check_delta(delta)?;
    if omega_size == 0 {
        return Err(Error::InvalidParameter("|Ω| must be positive".into()));
    }
    let raw = 4f64.ln() / (epsilon * epsilon) * (2.0 * omega_size as f64 / delta).ln();
    Ok((raw.ceil() as usize).max(1))
}

/// `2·dim·exp(-n ε² / ln 4)`.
pub fn aw_tail_bound(n: usize, epsilon: f64, dim: usize) -> Result<f64> {
    check_epsilon(epsilon)?;
    Ok(2.0 * dim as f64 * (-(n as f64) * epsilon * epsilon / 4f64.ln()).exp())
}

/// `(ln 4 / ε²)·(ln(2/δ)/ln|Ω| + 1)`: the sample size per `ln|Ω|` for this
/// instance. Undefined on a single point.
pub fn c_epsilon(epsilon: f64, delta: f64, omega_size: usize) -> Option<f64> {
    (omega_size >= 2).then(|| 4f64.ln() / (epsilon * epsilon) * ((2.0 / delta).ln() / (omega_size as f64).ln() + 1.0))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialStats {
    pub trials: usize,
    /// Draws per trial before symmetrizing.
    pub sample_size: usize,
    pub omega_size: usize,
    pub epsilon: f64,
    pub delta: f64,
    pub lambdas: Vec<f64>,
    pub empirical_mean: f64,
    /// Fraction of trials with `λ ≥ ε`.
    pub empirical_tail: f64,
    pub bound_tail: f64,
    pub c_epsilon: Option<f64>,
    pub seed: u64,
}

impl TrialStats {
    /// Three binomial standard deviations above `δ`.
    pub fn tail_threshold(&self) -> f64 {
        self.delta + 3.0 * (self.delta * (1.0 - self.delta) / self.trials as f64).sqrt()
    }

    pub fn tail_ok(&self) -> bool {
        self.empirical_tail <= self.tail_threshold()
    }

    /// The mean is compared with `2ε`.
    pub fn mean_ok(&self) -> bool {
        self.empirical_mean <= 2.0 * self.epsilon
    }

    /// One `trial,lambda` row per trial.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("trial,lambda\n");
        for (i, l) in self.lambdas.iter().enumerate() {
            out.push_str(&format!("{i},{}\n", fmt_f64(*l)));
        }
        out
    }
}

/// Trial `i` draws from its own ChaCha stream `(seed, i)`, so the outcome
/// does not depend on scheduling.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Draws `trials` random multisets of the size prescribed for `(ε, δ, |Ω|)`
/// and records the two-sided λ of each symmetrized Schreier graph.
pub fn verify_theorem1(
    g: &FiniteGroup,
    y: &FiniteGroup,
    epsilon: f64,
    delta: f64,
    trials: usize,
    seed: u64,
) -> Result<TrialStats> {
    if trials == 0 {
        return Err(Error::InvalidParameter("at least one trial is required".into()));
    }
    let cosets = Transversal::new(g, y)?;
    let omega = cosets.index();
    let m = required_sample_size(epsilon, delta, omega)?;
    let lambdas = (0..trials)
        .into_par_iter()
        .map(|i| {
            let s = random_symmetric_multiset(g, m, &mut trial_rng(seed, i))?;
            let graph = SchreierGraph::on_cosets(&cosets, &s)?;
            Ok(spectral_summary_capped(&graph, DEFAULT_DIM_CAP)?.two_sided_lambda)
        })
        .collect::<Result<Vec<f64>>>()?;
    let empirical_mean = lambdas.iter().sum::<f64>() / trials as f64;
    let empirical_tail = lambdas.iter().filter(|&&l| l >= epsilon).count() as f64 / trials as f64;
    Ok(TrialStats {
        trials,
        sample_size: m,
        omega_size: omega,
        epsilon,
        delta,
        lambdas,
        empirical_mean,
        empirical_tail,
        bound_tail: aw_tail_bound(m, epsilon, omega)?,
        c_epsilon: c_epsilon(epsilon, delta, omega),
        seed,
    })
}
