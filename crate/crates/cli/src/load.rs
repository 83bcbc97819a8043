//! Turning the textual parts of a config into groups and multisets.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use schreier_core::catalog::{action_stabilizer, catalog_generators, Action};
use schreier_core::format::{parse_group_spec, parse_multiset};
use schreier_core::montecarlo::{random_symmetric_multiset, trial_rng};
use schreier_core::permcore::{FiniteGroup, Permutation};
use schreier_core::schreier::{symmetric_subsets, symmetrize, Multiset, SymmetricMultiset};

use crate::config::{ActionSpec, SetSpec};

/// Directory for enumerated catalog groups; caching is off when unset.
pub const CACHE_ENV: &str = "SCHREIER_CACHE_DIR";

/// Cap on the number of subsets `all-symmetric-subsets` may produce.
pub const SUBSET_CAP: u128 = 1 << 20;

#[derive(Serialize, Deserialize)]
struct CachedTable {
    name: String,
    generators: Vec<Vec<u32>>,
    elements: Vec<Vec<u32>>,
}

fn cache_path(dir: &Path, name: &str) -> PathBuf {
    let stem: String = name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    dir.join(format!("{stem}.json"))
}

fn perms(images: Vec<Vec<u32>>) -> Result<Vec<Permutation>> {
    Ok(images.into_iter().map(Permutation::from_images).collect::<Result<_, _>>()?)
}

fn read_cached(path: &Path, name: &str, cap: usize) -> Option<FiniteGroup> {
    let table: CachedTable = serde_json::from_str(&fs::read_to_string(path).ok()?).ok()?;
    if table.name != name || table.elements.len() > cap {
        return None;
    }
    FiniteGroup::from_table(perms(table.generators).ok()?, perms(table.elements).ok()?).ok()
}

fn write_cached(path: &Path, name: &str, g: &FiniteGroup) -> Result<()> {
    let images = |ps: &[Permutation]| ps.iter().map(|p| p.images().to_vec()).collect();
    let table = CachedTable { name: name.to_string(), generators: images(g.generators()), elements: images(g.elements()) };
    fs::write(path, serde_json::to_string(&table)?)?;
    Ok(())
}

/// A catalog group, read from and stored in the cache directory when one is
/// configured.
pub fn catalog_group(name: &str, cap: usize, cache: Option<&Path>) -> Result<FiniteGroup> {
    if let Some(dir) = cache {
        if let Some(g) = read_cached(&cache_path(dir, name), name, cap) {
            return Ok(g);
        }
    }
    let g = FiniteGroup::generate(catalog_generators(name)?, cap)?;
    if let Some(dir) = cache {
        fs::create_dir_all(dir).with_context(|| format!("creating cache directory {}", dir.display()))?;
        write_cached(&cache_path(dir, name), name, &g)?;
    }
    Ok(g)
}

pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

/// Generators from a group-spec file.
pub fn read_generators(path: &Path) -> Result<Vec<Permutation>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_group_spec(&text).with_context(|| format!("parsing {}", path.display()))?.generators)
}

/// A group given as an existing file path or else a catalog name.
pub fn load_group(spec: &str, cap: usize, cache: Option<&Path>) -> Result<FiniteGroup> {
    let path = Path::new(spec);
    if path.is_file() {
        return Ok(FiniteGroup::generate(read_generators(path)?, cap)?);
    }
    catalog_group(spec, cap, cache)
}

/// `H ≤ G` from a catalog name or file; its generators must lie in `G`.
pub fn load_subgroup(g: &FiniteGroup, spec: &str) -> Result<FiniteGroup> {
    let path = Path::new(spec);
    let gens = if path.is_file() { read_generators(path)? } else { catalog_generators(spec)? };
    if gens.iter().any(|p| p.degree() != g.degree()) {
        bail!("degree does not match the group's degree {}", g.degree());
    }
    Ok(g.subgroup_generated_by(&gens)?)
}

pub fn load_stabilizer(g: &FiniteGroup, action: &ActionSpec) -> Result<FiniteGroup> {
    match action {
        ActionSpec::Regular => Ok(action_stabilizer(g, Action::Regular)?),
        ActionSpec::Natural => Ok(action_stabilizer(g, Action::Natural)?),
        ActionSpec::CosetsOf(path) => {
            let gens = read_generators(path)?;
            if gens.iter().any(|p| p.degree() != g.degree()) {
                bail!("degree does not match the group's degree {}", g.degree());
            }
            Ok(g.subgroup_generated_by(&gens)?)
        }
    }
}

fn finish(m: Multiset, symmetrize_it: bool) -> Result<SymmetricMultiset> {
    if symmetrize_it {
        Ok(symmetrize(&m)?)
    } else {
        Ok(SymmetricMultiset::new(m)?)
    }
}

/// The connection multisets named by `spec`, each checked to lie in `g`.
pub fn load_sets(g: &FiniteGroup, spec: &SetSpec, symmetrize_it: bool, seed: u64) -> Result<Vec<SymmetricMultiset>> {
    let sets = match spec {
        SetSpec::Gens => {
            let m: Multiset = g.generators().iter().filter(|p| !p.is_identity()).cloned().collect();
            if m.is_empty() {
                bail!("the group has no non-identity generator");
            }
            // generators are not inverse-closed in general
            vec![finish(m, true)?]
        }
        SetSpec::File(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            vec![finish(parse_multiset(&text, g.degree())?, symmetrize_it)?]
        }
        SetSpec::Inline(body) => vec![finish(parse_multiset(&body.replace(';', "\n"), g.degree())?, symmetrize_it)?],
        SetSpec::Random { draws, samples } => (0..*samples)
            .map(|i| Ok(random_symmetric_multiset(g, *draws, &mut trial_rng(seed, i))?))
            .collect::<Result<_>>()?,
        SetSpec::AllSymmetricSubsets => symmetric_subsets(g, SUBSET_CAP)?,
    };
    for s in &sets {
        s.as_multiset().indices_in(g)?;
    }
    Ok(sets)
}
