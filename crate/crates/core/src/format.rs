//! Plain-text formats: permutations in disjoint-cycle notation over 1-based
//! points, group-spec files, multiset files and lossless decimals.
//!
//! A group-spec file holds one permutation per line, e.g. `(1 2 3)(4 5)`.
//! Blank lines are skipped and `#` starts a comment. The degree is the
//! largest point mentioned unless a `degree N` line says otherwise.
//!
//! A multiset file holds one entry per line, `cycles * multiplicity`, with
//! the multiplicity defaulting to 1.

use crate::error::{Error, Result};
use crate::permcore::Permutation;
use crate::schreier::Multiset;

/// Parses disjoint-cycle notation into 0-based cycles. `()` or an empty
/// string is the identity.
pub fn parse_cycles(text: &str) -> std::result::Result<Vec<Vec<usize>>, String> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected `(` at `{rest}`"))?;
        let close = body.find(')').ok_or_else(|| "unclosed `(`".to_string())?;
        let points = body[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(0) => Err("points are numbered from 1".to_string()),
                Ok(p) => Ok(p - 1),
                Err(_) => Err(format!("bad point `{t}`")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn max_point(cycles: &[Vec<usize>]) -> Option<usize> {
    cycles.iter().flatten().max().map(|p| p + 1)
}

/// Parses one permutation of the given degree.
pub fn parse_permutation(text: &str, degree: usize) -> Result<Permutation> {
    let cycles = parse_cycles(text).map_err(|msg| Error::Parse { line: 1, msg })?;
    Permutation::from_cycles(degree, &cycles)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

/// A parsed group-spec file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut declared = None;
    let mut parsed = Vec::new();
    for (line, content) in content_lines(text) {
        if let Some(n) = content.strip_prefix("degree") {
            let n = n
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse { line, msg: format!("bad degree `{}`", n.trim()) })?;
            declared = Some(n);
            continue;
        }
        let cycles = parse_cycles(content).map_err(|msg| Error::Parse { line, msg })?;
        parsed.push((line, cycles));
    }
    let mentioned = parsed.iter().filter_map(|(_, c)| max_point(c)).max().unwrap_or(1);
    let degree = match declared {
        Some(d) if d < mentioned => {
            return Err(Error::Parse {
                line: 1,
                msg: format!("point {mentioned} exceeds declared degree {d}"),
            })
        }
        Some(d) => d,
        None => mentioned,
    };
    if parsed.is_empty() {
        return Err(Error::Parse { line: 1, msg: "no permutations".into() });
    }
    let generators = parsed
        .into_iter()
        .map(|(line, c)| {
            Permutation::from_cycles(degree, &c).map_err(|e| Error::Parse { line, msg: e.to_string() })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupSpec { degree, generators })
}

pub fn write_group_spec(degree: usize, gens: &[Permutation]) -> String {
    let mut out = format!("degree {degree}\n");
    for g in gens {
        out.push_str(&g.to_cycle_string());
        out.push('\n');
    }
    out
}

/// Parses a multiset file over permutations of the given degree.
pub fn parse_multiset(text: &str, degree: usize) -> Result<Multiset> {
    let mut out = Multiset::new();
    for (line, content) in content_lines(text) {
        let (perm, mult) = match content.rsplit_once('*') {
            Some((p, m)) => {
                let m = m
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse { line, msg: format!("bad multiplicity `{}`", m.trim()) })?;
                (p, m)
            }
            None => (content, 1),
        };
        if mult == 0 {
            return Err(Error::Parse { line, msg: "multiplicity must be positive".into() });
        }
        let cycles = parse_cycles(perm).map_err(|msg| Error::Parse { line, msg })?;
        let p = Permutation::from_cycles(degree, &cycles)
            .map_err(|e| Error::Parse { line, msg: e.to_string() })?;
        out.insert(p, mult);
    }
    Ok(out)
}

pub fn write_multiset(m: &Multiset) -> String {
    m.iter()
        .map(|(p, k)| if k == 1 { format!("{p}\n") } else { format!("{p} * {k}\n") })
        .collect()
}

/// Decimal rendering with 17 significant digits, which round-trips every
/// finite `f64`.
pub fn fmt_f64(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.0000000000000000".to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    // 17 significant digits in positional notation; tiny and huge values
    // fall back to scientific notation to stay readable.
    if (-6..=20).contains(&exponent) {
        let decimals = (16 - exponent).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.16e}")
    }
}
