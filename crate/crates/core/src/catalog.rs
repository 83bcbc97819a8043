//! Named permutation groups: `cyclic:n`, `dihedral:n` (order n), `elem-abelian:p^k`,
//! `sym:n`, `alt:n`, `heisenberg:p` and direct products joined by `×` or `x`.

use crate::error::{Error, Result};
use crate::permcore::{point_stabilizer, FiniteGroup, Permutation, DEFAULT_ORDER_CAP};

fn cycle(degree: usize, points: Vec<usize>) -> Permutation {
    Permutation::from_cycles(degree, &[points]).expect("catalog cycles are valid")
}

fn parse_count(name: &str, arg: &str) -> Result<usize> {
    arg.trim().parse::<usize>().map_err(|_| Error::UnknownCatalog(name.to_string()))
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Generators of one factor, all of the same degree.
fn factor_generators(name: &str) -> Result<Vec<Permutation>> {
    let unknown = || Error::UnknownCatalog(name.to_string());
    let (family, arg) = name.trim().split_once(':').ok_or_else(unknown)?;
    match family.trim() {
        "cyclic" => {
            let n = parse_count(name, arg)?;
            if n == 0 {
                return Err(unknown());
            }
            Ok(vec![cycle(n, (0..n).collect())])
        }
        "dihedral" => {
            let n = parse_count(name, arg)?;
            match n {
                2 => Ok(vec![cycle(2, vec![0, 1])]),
                4 => Ok(vec![cycle(4, vec![0, 1]), cycle(4, vec![2, 3])]),
                n if n >= 6 && n % 2 == 0 => {
                    let k = n / 2;
                    let flip = Permutation::from_cycles(k, &(1..k / 2 + k % 2).map(|i| vec![i, k - i]).filter(|c| c[0] != c[1]).collect::<Vec<_>>())?;
                    Ok(vec![cycle(k, (0..k).collect()), flip])
                }
                _ => Err(unknown()),
            }
        }
        "elem-abelian" => {
            let (p, k) = arg.split_once('^').ok_or_else(unknown)?;
            let (p, k) = (parse_count(name, p)?, parse_count(name, k)?);
            if !is_prime(p) || k == 0 {
                return Err(unknown());
            }
            let degree = p * k;
            Ok((0..k).map(|b| cycle(degree, (b * p..(b + 1) * p).collect())).collect())
        }
        "sym" => {
            let n = parse_count(name, arg)?;
            match n {
                0 => Err(unknown()),
                1 => Ok(vec![Permutation::identity(1)]),
                2 => Ok(vec![cycle(2, vec![0, 1])]),
                n => Ok(vec![cycle(n, vec![0, 1]), cycle(n, (0..n).collect())]),
            }
        }
        "alt" => {
            let n = parse_count(name, arg)?;
            match n {
                0 => Err(unknown()),
                1 | 2 => Ok(vec![Permutation::identity(n)]),
                n => Ok((2..n).map(|i| cycle(n, vec![0, 1, i])).collect()),
            }
        }
        "heisenberg" => {
            let p = parse_count(name, arg)?;
            if !is_prime(p) {
                return Err(unknown());
            }
            // (x, y) ↦ (x + 1, y) and (x, y) ↦ (x, y + x) on p² points
            let pt = |x: usize, y: usize| (x * p + y) as u32;
            let mut shift = vec![0u32; p * p];
            let mut shear = vec![0u32; p * p];
            for x in 0..p {
                for y in 0..p {
                    shift[pt(x, y) as usize] = pt((x + 1) % p, y);
                    shear[pt(x, y) as usize] = pt(x, (y + x) % p);
                }
            }
            Ok(vec![Permutation::from_images(shift)?, Permutation::from_images(shear)?])
        }
        _ => Err(unknown()),
    }
}

/// Generators of a named group, direct products placed on disjoint blocks.
pub fn catalog_generators(name: &str) -> Result<Vec<Permutation>> {
    let factors = name
        .split(['×', 'x'])
        .map(factor_generators)
        .collect::<Result<Vec<_>>>()?;
    if factors.len() == 1 {
        return Ok(factors.into_iter().next().expect("one factor"));
    }
    let degrees: Vec<usize> = factors.iter().map(|f| f[0].degree()).collect();
    let total: usize = degrees.iter().sum();
    let mut out = Vec::new();
    let mut offset = 0;
    for (gens, d) in factors.iter().zip(&degrees) {
        for g in gens {
            let mut images: Vec<u32> = (0..total as u32).collect();
            for (i, &im) in g.images().iter().enumerate() {
                images[offset + i] = (offset + im as usize) as u32;
            }
            out.push(Permutation::from_images(images)?);
        }
        offset += d;
    }
    Ok(out)
}

pub fn catalog(name: &str) -> Result<FiniteGroup> {
    catalog_capped(name, DEFAULT_ORDER_CAP)
}

pub fn catalog_capped(name: &str, cap: usize) -> Result<FiniteGroup> {
    FiniteGroup::generate(catalog_generators(name)?, cap)
}

/// How a catalog group acts: on itself, or on the orbit of point 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    Regular,
    Natural,
}

/// The stabilizer `Y` realizing the requested action.
pub fn action_stabilizer(g: &FiniteGroup, action: Action) -> Result<FiniteGroup> {
    match action {
        Action::Regular => Ok(FiniteGroup::trivial(g.degree())),
        Action::Natural => point_stabilizer(g, 0),
    }
}

/// Invariant factors `d₁ | d₂ | … | d_k` of every abelian group of order `n`.
pub fn abelian_invariant_factors(n: usize) -> Vec<Vec<usize>> {
    fn extend(rest: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            let mut factors = acc.clone();
            factors.reverse();
            out.push(factors);
            return;
        }
        // factors listed from the largest down; each later one divides the previous
        for d in (2..=rest).rev().filter(|d| rest % d == 0) {
            if acc.last().map_or(true, |&prev| prev % d == 0) {
                acc.push(d);
                extend(rest / d, acc, out);
                acc.pop();
            }
        }
    }
    if n == 1 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out);
    out
}

/// Catalog name for an abelian group given by its invariant factors.
pub fn abelian_name(factors: &[usize]) -> String {
    match factors {
        [] => "cyclic:1".to_string(),
        [first, ..] if factors.len() >= 2 && is_prime(*first) && factors.iter().all(|f| f == first) => {
            format!("elem-abelian:{first}^{}", factors.len())
        }
        _ => factors.iter().map(|d| format!("cyclic:{d}")).collect::<Vec<_>>().join("×"),
    }
}

/// Every abelian group of order at most `max_order`, one name each.
pub fn abelian_groups_up_to(max_order: usize) -> Vec<String> {
    (1..=max_order)
        .flat_map(abelian_invariant_factors)
        .map(|f| abelian_name(&f))
        .collect()
}

/// The standard families at small order, for sweeps.
pub fn small_catalog(max_order: usize) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    names.extend((1..=max_order).map(|n| format!("cyclic:{n}")));
    names.extend((6..=max_order).step_by(2).map(|n| format!("dihedral:{n}")));
    names.push("dihedral:4".into());
    for (p, k) in [(2usize, 2u32), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2)] {
        if p.pow(k) <= max_order {
            names.push(format!("elem-abelian:{p}^{k}"));
        }
    }
    for n in 3..=5 {
        if (1..=n).product::<usize>() <= max_order {
            names.push(format!("sym:{n}"));
        }
        if (1..=n).product::<usize>() / 2 <= max_order {
            names.push(format!("alt:{n}"));
        }
    }
    for p in [2, 3] {
        if p * p * p <= max_order {
            names.push(format!("heisenberg:{p}"));
        }
    }
    for extra in ["sym:3×cyclic:2", "sym:3×cyclic:3", "dihedral:8×cyclic:2", "alt:4×cyclic:2", "sym:3×sym:3"] {
        if catalog(extra).map_or(false, |g| g.order() <= max_order) {
            names.push(extra.to_string());
        }
    }
    names
}
