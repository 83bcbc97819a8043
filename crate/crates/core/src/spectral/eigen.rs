//! Eigenvalues of dense real symmetric matrices: Householder reduction to
//! tridiagonal form followed by implicit QL iteration with Wilkinson shifts.

use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Default largest dimension accepted by [`sym_eigenvalues`].
pub const DEFAULT_DIM_CAP: usize = 3000;

/// Entries may differ from their transpose by at most this much.
pub const SYMMETRY_TOL: f64 = 1e-12;

const MAX_SWEEPS_PER_EIGENVALUE: usize = 60;

/// Full spectrum of a symmetric matrix, sorted in descending order.
pub fn sym_eigenvalues(m: &Matrix) -> Result<Vec<f64>> {
    sym_eigenvalues_capped(m, DEFAULT_DIM_CAP)
}

pub fn sym_eigenvalues_capped(m: &Matrix, cap: usize) -> Result<Vec<f64>> {
    let n = m.dim();
    if n > cap {
        return Err(Error::DimensionCap { dim: n, cap });
    }
    if let Some((row, col, diff)) = m.asymmetry(SYMMETRY_TOL) {
        return Err(Error::AsymmetricMatrix { row, col, diff });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let (mut d, mut e) = tridiagonalize(m);
    tridiagonal_ql(&mut d, &mut e)?;
    d.sort_by(|a, b| b.total_cmp(a));
    Ok(d)
}

// Returns the diagonal and the sub-diagonal (e[0] unused) of a tridiagonal
// matrix orthogonally similar to `m`. Works on the lower triangle.
fn tridiagonalize(m: &Matrix) -> (Vec<f64>, Vec<f64>) {
    let n = m.dim();
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| 0.5 * (m.get(i, j) + m.get(j, i))).collect())
        .collect();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];

    for i in (1..n).rev() {
        let l = i - 1;
        if l == 0 {
            e[i] = a[i][l];
            continue;
        }
        let scale: f64 = a[i][..=l].iter().map(|x| x.abs()).sum();
        if scale == 0.0 {
            e[i] = a[i][l];
            continue;
        }
        let mut h = 0.0;
        for k in 0..=l {
            a[i][k] /= scale;
            h += a[i][k] * a[i][k];
        }
        let f = a[i][l];
        let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
        e[i] = scale * g;
        h -= f * g;
        a[i][l] = f - g;

        let mut f = 0.0;
        for j in 0..=l {
            let mut g = 0.0;
            for k in 0..=j {
                g += a[j][k] * a[i][k];
            }
            for k in j + 1..=l {
                g += a[k][j] * a[i][k];
            }
            e[j] = g / h;
            f += e[j] * a[i][j];
        }
        let hh = f / (h + h);
        for j in 0..=l {
            let f = a[i][j];
            let g = e[j] - hh * f;
            e[j] = g;
            for k in 0..=j {
                a[j][k] -= f * e[k] + g * a[i][k];
            }
        }
    }
    for i in 0..n {
        d[i] = a[i][i];
    }
    (d, e)
}

// Implicit QL on the tridiagonal (d, e); eigenvalues are left in d.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS_PER_EIGENVALUE {
                return Err(Error::NoConvergence);
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                let r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                let r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
