//! Reduced simplicial homology over ℚ and GF(2), Reisner's criterion, and
//! Hochster's formula for multigraded Betti numbers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{rank_gf2, rank_rational, SparseRow};

/// Vertex bound for a single homology computation.
pub const MAX_HOMOLOGY_VERTICES: usize = 24;
/// Vertex bound for Reisner's criterion.
pub const MAX_CM_VERTICES: usize = 20;
/// Universe bound for sweeps over all induced subcomplexes.
pub const MAX_HOCHSTER_VERTICES: usize = 14;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    #[default]
    #[serde(rename = "q")]
    Rationals,
    #[serde(rename = "gf2")]
    Gf2,
}

impl FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q" | "qq" | "rationals" => Ok(FieldTag::Rationals),
            "gf2" | "f2" | "z2" => Ok(FieldTag::Gf2),
            other => Err(Error::Parse(format!(
                "unknown field {other:?}, expected q or gf2"
            ))),
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldTag::Rationals => "q",
            FieldTag::Gf2 => "gf2",
        })
    }
}

/// Reduced Betti numbers in degrees `-1 ..= dim`; empty for the void complex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiVector {
    betti: BTreeMap<i32, u64>,
}

impl BettiVector {
    pub fn get(&self, degree: i32) -> u64 {
        self.betti.get(&degree).copied().unwrap_or(0)
    }

    pub fn as_map(&self) -> &BTreeMap<i32, u64> {
        &self.betti
    }

    /// Degrees with nonzero Betti number.
    pub fn nonzero(&self) -> BTreeMap<i32, u64> {
        self.betti
            .iter()
            .filter(|(_, &b)| b > 0)
            .map(|(&d, &b)| (d, b))
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.values().all(|&b| b == 0)
    }

    /// Largest degree with nonzero homology.
    pub fn top_degree(&self) -> Option<i32> {
        self.betti
            .iter()
            .rev()
            .find(|(_, &b)| b > 0)
            .map(|(&d, _)| d)
    }

    /// `Σ_d (-1)^d β̃_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .map(|(&d, &b)| {
                if d.rem_euclid(2) == 0 {
                    b as i64
                } else {
                    -(b as i64)
                }
            })
            .sum()
    }
}

impl Serialize for BettiVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.betti.iter().map(|(d, b)| (d.to_string(), *b)))
    }
}

impl<'de> Deserialize<'de> for BettiVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, u64>::deserialize(deserializer)?;
        let betti = raw
            .into_iter()
            .map(|(d, b)| {
                d.parse::<i32>()
                    .map(|d| (d, b))
                    .map_err(serde::de::Error::custom)
            })
            .collect::<std::result::Result<_, _>>()?;
        Ok(BettiVector { betti })
    }
}

/// Reduced homology via ranks of the augmented boundary maps.
pub fn reduced_betti(delta: &SimplicialComplex, field: FieldTag) -> Result<BettiVector> {
    let nv = delta.num_vertices();
    if nv > MAX_HOMOLOGY_VERTICES {
        return Err(Error::capacity(
            "vertex count for homology",
            MAX_HOMOLOGY_VERTICES,
            nv,
        ));
    }
    let layers = delta.faces_by_dimension();
    if layers.is_empty() {
        return Ok(BettiVector::default());
    }
    // ranks[i] = rank of the map from layer i to layer i - 1 (i ≥ 1)
    let mut ranks = vec![0usize; layers.len() + 1];
    for i in 1..layers.len() {
        ranks[i] = boundary_rank(&layers[i], &layers[i - 1], field);
    }
    let betti = layers
        .iter()
        .enumerate()
        .map(|(i, layer)| {
            let b = layer.len() - ranks[i] - ranks[i + 1];
            (i as i32 - 1, b as u64)
        })
        .collect();
    Ok(BettiVector { betti })
}

fn boundary_rank(top: &[Face], bottom: &[Face], field: FieldTag) -> usize {
    let index: HashMap<u64, u32> = bottom
        .iter()
        .enumerate()
        .map(|(i, f)| (f.mask(), i as u32))
        .collect();
    let rows: Vec<SparseRow> = top
        .iter()
        .map(|sigma| {
            let mut row: SparseRow = sigma
                .vertices()
                .enumerate()
                .map(|(pos, v)| {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    (index[&sigma.without(v).mask()], sign)
                })
                .collect();
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect();
    match field {
        FieldTag::Rationals => rank_rational(&rows, bottom.len()),
        FieldTag::Gf2 => rank_gf2(&rows, bottom.len()),
    }
}

/// Betti numbers that skip the linear algebra for cones, whose reduced
/// homology vanishes.
fn betti_with_cone_shortcut(delta: &SimplicialComplex, field: FieldTag) -> Result<BettiVector> {
    if delta.cone_apex().is_some() {
        let dim = delta.dimension().expect("cones are nonvoid");
        return Ok(BettiVector {
            betti: (-1..=dim).map(|d| (d, 0)).collect(),
        });
    }
    reduced_betti(delta, field)
}

/// Reisner's criterion: every link has vanishing reduced homology below its
/// dimension.
pub fn is_cohen_macaulay(delta: &SimplicialComplex, field: FieldTag) -> Result<bool> {
    if delta.is_void() {
        return Err(Error::Domain("the void complex has no face ring".into()));
    }
    let nv = delta.num_vertices();
    if nv > MAX_CM_VERTICES {
        return Err(Error::capacity(
            "vertex count for Cohen-Macaulay test",
            MAX_CM_VERTICES,
            nv,
        ));
    }
    let faces = delta.faces();
    let failures: Vec<bool> = faces
        .par_iter()
        .map(|&sigma| -> Result<bool> {
            let link = delta.link(sigma)?;
            let dim = link.dimension().unwrap_or(-1);
            let betti = betti_with_cone_shortcut(&link, field)?;
            Ok(betti.nonzero().keys().any(|&d| d < dim))
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(!failures.into_iter().any(|bad| bad))
}

/// One nonzero entry `β_{i,σ}` of a multigraded Betti table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: u32,
    pub sigma: Face,
    pub beta: u64,
}

/// Nonzero multigraded Betti numbers of `K[Δ]`, sorted by `(i, σ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedBettiTable {
    pub entries: Vec<BettiEntry>,
}

impl GradedBettiTable {
    pub fn get(&self, i: u32, sigma: Face) -> u64 {
        self.entries
            .iter()
            .find(|e| e.i == i && e.sigma == sigma)
            .map_or(0, |e| e.beta)
    }

    /// Coarse graded Betti number `β_{i,j} = Σ_{|σ|=j} β_{i,σ}`.
    pub fn graded(&self, i: u32, j: usize) -> u64 {
        self.entries
            .iter()
            .filter(|e| e.i == i && e.sigma.len() == j)
            .map(|e| e.beta)
            .sum()
    }

    pub fn projective_dimension(&self) -> u32 {
        self.entries.iter().map(|e| e.i).max().unwrap_or(0)
    }

    pub fn regularity(&self) -> u32 {
        self.entries
            .iter()
            .map(|e| e.sigma.len() as u32 - e.i)
            .max()
            .unwrap_or(0)
    }
}

fn check_sweep(delta: &SimplicialComplex, universe: Face) -> Result<()> {
    if delta.is_void() {
        return Err(Error::Domain("the void complex has no face ring".into()));
    }
    if universe.len() > MAX_HOCHSTER_VERTICES {
        return Err(Error::capacity(
            "universe size for induced-subcomplex sweep (2^n subsets)",
            MAX_HOCHSTER_VERTICES,
            universe.len(),
        ));
    }
    if !delta.vertex_set().is_subset(universe) {
        return Err(Error::Domain(format!(
            "universe {universe} misses vertices of the complex"
        )));
    }
    Ok(())
}

/// All subsets of `universe`, in canonical order.
fn subsets_of(universe: Face) -> Vec<Face> {
    let mut all: Vec<Face> = universe.subsets().collect();
    all.sort_unstable();
    all
}

/// Hochster's formula `β_{i,σ}(K[Δ]) = dim H̃_{|σ|−i−1}(Δ|_σ)`.
pub fn hochster_table(
    delta: &SimplicialComplex,
    universe: Face,
    field: FieldTag,
) -> Result<GradedBettiTable> {
    check_sweep(delta, universe)?;
    let per_subset: Vec<Vec<BettiEntry>> = subsets_of(universe)
        .into_par_iter()
        .map(|sigma| -> Result<Vec<BettiEntry>> {
            let induced = delta.induced_subcomplex(sigma);
            let betti = betti_with_cone_shortcut(&induced, field)?;
            Ok(betti
                .nonzero()
                .into_iter()
                .map(|(d, beta)| BettiEntry {
                    i: (sigma.len() as i32 - d - 1) as u32,
                    sigma,
                    beta,
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut entries: Vec<BettiEntry> = per_subset.into_iter().flatten().collect();
    entries.sort_unstable();
    Ok(GradedBettiTable { entries })
}

/// Projective dimension of `K[Δ]` over the polynomial ring on `universe`.
pub fn pd_oracle(delta: &SimplicialComplex, universe: Face) -> Result<u32> {
    Ok(hochster_table(delta, universe, FieldTag::Rationals)?.projective_dimension())
}

/// Castelnuovo-Mumford regularity of `K[Δ]`.
pub fn regularity_oracle(delta: &SimplicialComplex, universe: Face) -> Result<u32> {
    Ok(hochster_table(delta, universe, FieldTag::Rationals)?.regularity())
}

/// Leray number: one more than the top nonvanishing reduced homology degree
/// over all induced subcomplexes, over ℚ.
pub fn leray_oracle(delta: &SimplicialComplex, universe: Face) -> Result<u32> {
    leray_oracle_over(delta, universe, FieldTag::Rationals)
}

pub fn leray_oracle_over(
    delta: &SimplicialComplex,
    universe: Face,
    field: FieldTag,
) -> Result<u32> {
    check_sweep(delta, universe)?;
    let tops: Vec<i32> = subsets_of(delta.vertex_set())
        .into_par_iter()
        .map(|w| -> Result<i32> {
            let induced = delta.induced_subcomplex(w);
            Ok(betti_with_cone_shortcut(&induced, field)?
                .top_degree()
                .unwrap_or(-1))
        })
        .collect::<Result<_>>()?;
    Ok((tops.into_iter().max().unwrap_or(-1) + 1) as u32)
}
