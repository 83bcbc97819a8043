use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}`; `images[i]` is the image of point `i`.
///
/// Points act on the right: `compose(p, q)` applies `p` first, then `q`,
/// so `ω^(pq) = (ω^p)^q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::NotAPermutation("degree must be at least 1".into()));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(Error::PointOutOfRange { point: x, degree: n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(format!("point {x} is hit twice")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles over
    /// 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::NotAPermutation("degree must be at least 1".into()));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::PointOutOfRange { point: a, degree });
                }
                if std::mem::replace(&mut touched[a], true) {
                    return Err(Error::NotAPermutation(format!(
                        "point {a} appears in more than one cycle position"
                    )));
                }
                images[a] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Image of `point`.
    pub fn image(&self, point: usize) -> Result<usize> {
        self.images
            .get(point)
            .map(|&x| x as usize)
            .ok_or(Error::PointOutOfRange { point, degree: self.degree() })
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked composition for callers that already know the degrees agree.
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start] as usize;
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Disjoint-cycle notation over 1-based points, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<u32>) -> Result<Self> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_cycle() -> Permutation {
        Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap()
    }

    #[test]
    fn cycle_times_inverse_is_identity() {
        let c = three_cycle();
        assert!(c.compose(&c.inverse()).unwrap().is_identity());
        assert!(c.inverse().compose(&c).unwrap().is_identity());
    }

    #[test]
    fn image_of_zero_under_three_cycle() {
        assert_eq!(three_cycle().image(0).unwrap(), 1);
    }

    #[test]
    fn inverse_of_four_cycle_images() {
        let p = Permutation::from_images(vec![1, 2, 3, 0]).unwrap();
        assert_eq!(p.inverse().images(), &[3, 0, 1, 2]);
    }

    #[test]
    fn compose_applies_left_factor_first() {
        // (0 1) then (1 2): 0 -> 1 -> 2.
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        assert_eq!(a.compose(&b).unwrap().image(0).unwrap(), 2);
        assert_eq!(b.compose(&a).unwrap().image(0).unwrap(), 1);
    }

    #[test]
    fn degree_mismatch_and_range_errors() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(a.compose(&b), Err(Error::DegreeMismatch { .. })));
        assert!(matches!(a.image(3), Err(Error::PointOutOfRange { .. })));
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
    }

    #[test]
    fn cycle_string_is_one_based() {
        let p = Permutation::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.to_cycle_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::identity(2).to_cycle_string(), "()");
    }
}
