//! Closed-form expansion bounds. Everything is evaluated in log space, since
//! exponents such as `f(|S|, c)` can be tiny.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const LN_5: f64 = 1.6094379124341003;

/// Smallest connection-set size compatible with `gap ≥ epsilon`:
/// `2·ln Θ / ln(5/ε)`.
pub fn theta_min_set_size(theta: f64, epsilon: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon < 5.0) {
        return Err(Error::InvalidParameter(format!("epsilon must lie in (0, 5), got {epsilon}")));
    }
    if !(theta >= 1.0) {
        return Err(Error::InvalidParameter(format!("theta must be at least 1, got {theta}")));
    }
    Ok(2.0 * theta.ln() / (5.0 / epsilon).ln())
}

/// `5·|G|^(-2/|S|)` for an abelian Cayley graph.
pub fn abelian_gap_bound(group_order: usize, set_size: usize) -> Result<f64> {
    if group_order == 0 || set_size == 0 {
        return Err(Error::InvalidParameter("orders must be positive".into()));
    }
    Ok((LN_5 - 2.0 * (group_order as f64).ln() / set_size as f64).exp())
}

/// The exponents `f(d, c)` and `β(d, c)` of the nilpotent bounds.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NilpotentExponents {
    pub f: f64,
    pub beta: f64,
}

pub fn nilpotent_exponents(d: usize, c: usize) -> Result<NilpotentExponents> {
    if d < 2 || c < 1 {
        return Err(Error::InvalidParameter(format!("need d ≥ 2 and c ≥ 1, got d = {d}, c = {c}")));
    }
    let df = d as f64;
    let denom = df.powi(c as i32 + 1) - df * df + df - 1.0;
    let beta = (df - 1.0) / denom;
    let f = 2.0 * beta / df;
    assert!(
        f >= df.powi(-(c as i32) - 1) && beta >= 0.5 * df.powi(-(c as i32)),
        "exponent lower bounds fail for d = {d}, c = {c}"
    );
    Ok(NilpotentExponents { f, beta })
}

/// `5·|Ω|^(-f(|S|, c))` for a nilpotent group of class `c`.
pub fn nilpotent_gap_bound(omega_size: usize, set_size: usize, class_c: usize) -> Result<f64> {
    if omega_size == 0 {
        return Err(Error::InvalidParameter("|Ω| must be positive".into()));
    }
    let f = nilpotent_exponents(set_size, class_c)?.f;
    Ok((LN_5 - f * (omega_size as f64).ln()).exp())
}

/// Largest possible spectral gap of a walk on `n` vertices: the trace of
/// the walk is non-negative, so `λ₂ ≥ -1/(n-1)`.
pub fn gap_ceiling(n: usize) -> f64 {
    if n >= 2 {
        1.0 + 1.0 / (n as f64 - 1.0)
    } else {
        2.0
    }
}
