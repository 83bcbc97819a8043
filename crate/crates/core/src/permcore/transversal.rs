use super::group::FiniteGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// A right transversal of `subgroup` in `parent`: one representative per
/// right coset `Hx`.
///
/// Cosets are numbered in order of their first element in the parent's
/// table, so the coset of the identity (the subgroup itself) is coset 0.
#[derive(Clone, Debug)]
pub struct Transversal {
    parent: FiniteGroup,
    subgroup: FiniteGroup,
    // coset number of every parent element
    coset_of: Vec<usize>,
    // parent index of each coset's representative
    reps: Vec<usize>,
}

impl Transversal {
    /// The transversal whose representatives are the first-discovered member
    /// of each coset.
    pub fn new(parent: &FiniteGroup, subgroup: &FiniteGroup) -> Result<Transversal> {
        let (coset_of, first) = partition(parent, subgroup)?;
        Ok(Transversal {
            parent: parent.clone(),
            subgroup: subgroup.clone(),
            coset_of,
            reps: first,
        })
    }

    /// A transversal with caller-chosen representatives, listed in any order.
    pub fn with_representatives(
        parent: &FiniteGroup,
        subgroup: &FiniteGroup,
        reps: &[Permutation],
    ) -> Result<Transversal> {
        let (coset_of, first) = partition(parent, subgroup)?;
        if reps.len() != first.len() {
            return Err(Error::InvalidTransversal(format!(
                "expected {} representatives, got {}",
                first.len(),
                reps.len()
            )));
        }
        let mut chosen = vec![usize::MAX; first.len()];
        for r in reps {
            let idx = parent.require(r)?;
            let c = coset_of[idx];
            if chosen[c] != usize::MAX {
                return Err(Error::InvalidTransversal(format!(
                    "two representatives for the coset of {r}"
                )));
            }
            chosen[c] = idx;
        }
        Ok(Transversal {
            parent: parent.clone(),
            subgroup: subgroup.clone(),
            coset_of,
            reps: chosen,
        })
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn subgroup(&self) -> &FiniteGroup {
        &self.subgroup
    }

    /// Number of cosets, `|G:H|`.
    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> Vec<Permutation> {
        self.reps.iter().map(|&r| self.parent.element(r).clone()).collect()
    }

    /// Parent indices of the representatives, by coset number.
    pub fn rep_indices(&self) -> &[usize] {
        &self.reps
    }

    /// Coset number of parent element `x`.
    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    /// Parent index of the representative of `Hx` (the bar map).
    pub fn bar(&self, x: usize) -> usize {
        self.reps[self.coset_of[x]]
    }

    /// Enumerates every transversal, as long as there are at most `cap` of them.
    pub fn all(parent: &FiniteGroup, subgroup: &FiniteGroup, cap: u128) -> Result<Vec<Transversal>> {
        let (coset_of, first) = partition(parent, subgroup)?;
        let h = subgroup.order() as u128;
        let count = (0..first.len()).try_fold(1u128, |acc, _| acc.checked_mul(h));
        match count {
            Some(c) if c <= cap => {}
            Some(c) => return Err(Error::SearchSpaceTooLarge { size: c, cap }),
            None => return Err(Error::SearchSpaceTooLarge { size: u128::MAX, cap }),
        }
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); first.len()];
        for (x, &c) in coset_of.iter().enumerate() {
            blocks[c].push(x);
        }
        let mut out = Vec::new();
        let mut choice = vec![0usize; blocks.len()];
        loop {
            out.push(Transversal {
                parent: parent.clone(),
                subgroup: subgroup.clone(),
                coset_of: coset_of.clone(),
                reps: choice.iter().zip(&blocks).map(|(&k, b)| b[k]).collect(),
            });
            // odometer increment, first coset fastest
            let mut pos = 0;
            loop {
                if pos == blocks.len() {
                    return Ok(out);
                }
                choice[pos] += 1;
                if choice[pos] < blocks[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }
}

// Coset number per parent element, plus the first element of each coset.
fn partition(parent: &FiniteGroup, subgroup: &FiniteGroup) -> Result<(Vec<usize>, Vec<usize>)> {
    let sub = subgroup
        .embed_in(parent)
        .map_err(|_| Error::NotASubgroup("H is not contained in G"))?;
    if parent.order() % sub.len() != 0 {
        return Err(Error::NotASubgroup("order does not divide the parent order"));
    }
    let mut coset_of = vec![usize::MAX; parent.order()];
    let mut first = Vec::with_capacity(parent.order() / sub.len());
    for x in 0..parent.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = first.len();
        first.push(x);
        for &h in &sub {
            coset_of[parent.mul(h, x)] = c;
        }
    }
    Ok((coset_of, first))
}
