//! Squarefree powers of t-path ideals of the path graph `P_n`.

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex, MAX_VERTEX};
use crate::error::{Error, Result};
use crate::hypergraph::{minimal_transversals, minimum_transversal};
use crate::young::{young_complex, Partition};

/// Vertex bound for enumerating all minimal transversals.
pub const MAX_TRANSVERSAL_VERTICES: u32 = 20;

/// `I_{n,t}^{[k]}`: the `k`-th squarefree power of the ideal generated by
/// the `t` consecutive vertices of `P_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathIdealSpec {
    pub n: u32,
    pub t: u32,
    pub k: u32,
}

impl PathIdealSpec {
    pub fn new(n: u32, t: u32, k: u32) -> Result<Self> {
        if n == 0 || t == 0 {
            return Err(Error::Domain(format!(
                "need n ≥ 1 and t ≥ 1, got n={n}, t={t}"
            )));
        }
        if n > MAX_VERTEX {
            return Err(Error::capacity(
                "path length n",
                MAX_VERTEX as usize,
                n as usize,
            ));
        }
        Ok(PathIdealSpec { n, t, k })
    }

    /// `ν = ⌊n/t⌋`, the largest `k` with a nonzero power.
    pub fn nu(&self) -> u32 {
        self.n / self.t
    }

    /// `[n]`.
    pub fn universe(&self) -> Face {
        Face::range(1, self.n).expect("n is within the label bound")
    }

    pub fn is_nonzero(&self) -> bool {
        1 <= self.k && self.k <= self.nu()
    }

    fn require_nonzero(&self) -> Result<()> {
        if self.is_nonzero() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "need 1 ≤ k ≤ ⌊n/t⌋ = {}, got k={}",
                self.nu(),
                self.k
            )))
        }
    }
}

/// `k` pairwise disjoint intervals `[b, b+t−1]`, by increasing left endpoint.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Matching {
    pub t: u32,
    pub starts: Vec<u32>,
}

impl Matching {
    pub fn intervals(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.starts.iter().map(move |&b| (b, b + self.t - 1))
    }

    pub fn support(&self) -> Face {
        self.intervals().fold(Face::EMPTY, |acc, (lo, hi)| {
            acc.union(Face::range(lo, hi).unwrap())
        })
    }
}

/// All `k`-matchings of `t`-intervals inside `[n]`.
pub fn matchings(n: u32, t: u32, k: u32) -> Vec<Matching> {
    fn place(n: u32, t: u32, left: u32, from: u32, starts: &mut Vec<u32>, out: &mut Vec<Matching>) {
        if left == 0 {
            out.push(Matching {
                t,
                starts: starts.clone(),
            });
            return;
        }
        // the remaining `left` intervals need `left * t` cells
        let mut b = from;
        while b + left * t <= n + 1 {
            starts.push(b);
            place(n, t, left - 1, b + t, starts, out);
            starts.pop();
            b += 1;
        }
    }
    let mut out = Vec::new();
    if t >= 1 {
        place(n, t, k, 1, &mut Vec::new(), &mut out);
    }
    out
}

/// The minimal generators of a squarefree monomial ideal, as supports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialSet {
    pub n: u32,
    pub t: u32,
    pub k: u32,
    pub supports: Vec<Face>,
}

impl MonomialSet {
    pub fn len(&self) -> usize {
        self.supports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supports.is_empty()
    }
}

/// One support per `k`-matching; empty exactly when `k > ⌊n/t⌋`.
pub fn squarefree_power_generators(spec: PathIdealSpec) -> Result<MonomialSet> {
    if spec.k == 0 {
        return Err(Error::Precondition(
            "the power index k must be at least 1".into(),
        ));
    }
    let mut supports: Vec<Face> = matchings(spec.n, spec.t, spec.k)
        .iter()
        .map(Matching::support)
        .collect();
    supports.sort_unstable();
    Ok(MonomialSet {
        n: spec.n,
        t: spec.t,
        k: spec.k,
        supports,
    })
}

/// `(ν, ν0) = (⌊n/t⌋, ⌊(n−1)/t⌋)`.
pub fn matching_numbers(n: u32, t: u32) -> Result<(u32, u32)> {
    if t == 0 || n < t {
        return Err(Error::Domain(format!("need n ≥ t ≥ 1, got n={n}, t={t}")));
    }
    Ok((n / t, (n - 1) / t))
}

/// `Σ_{n,t}^{[k]}`: the complex on `[n]` whose minimal nonfaces are the
/// generator supports. The zero ideal gives the full simplex.
pub fn stanley_reisner_complex(spec: PathIdealSpec) -> Result<SimplicialComplex> {
    if spec.n > MAX_TRANSVERSAL_VERTICES {
        return Err(Error::capacity(
            "n for transversal enumeration",
            MAX_TRANSVERSAL_VERTICES as usize,
            spec.n as usize,
        ));
    }
    let gens = squarefree_power_generators(spec)?;
    let universe = spec.universe();
    let edges: Vec<u64> = gens.supports.iter().map(|s| s.mask()).collect();
    let complex = SimplicialComplex::from_facets(
        minimal_transversals(&edges)
            .into_iter()
            .map(|t| universe.difference(Face::from_mask(t))),
    );
    complex.with_universe(universe)
}

/// `Δ_{n,t}^{[k]}`, the Alexander dual of `Σ_{n,t}^{[k]}`, via the Young
/// complex of the rectangle `(n−kt)^{k+1}`.
pub fn dual_complex(spec: PathIdealSpec) -> Result<SimplicialComplex> {
    let base = spec.k as u64 * spec.t as u64;
    let n = spec.n as u64;
    let complex = if n < base {
        SimplicialComplex::void()
    } else if n == base {
        SimplicialComplex::irrelevant()
    } else {
        let lambda = Partition::rectangle(spec.n - spec.k * spec.t, spec.k as usize + 1);
        young_complex(&lambda, spec.t)?
    };
    complex.with_universe(spec.universe())
}

/// `Δ_{n,t}^{[k]}` computed directly as an Alexander dual.
pub fn dual_complex_via_alexander(spec: PathIdealSpec) -> Result<SimplicialComplex> {
    if spec.k == 0 {
        return dual_complex(spec);
    }
    let universe = spec.universe();
    stanley_reisner_complex(spec)?
        .alexander_dual(universe)?
        .with_universe(universe)
}

/// Height of the ideal and Krull dimension of the quotient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KrullHeight {
    pub height: u32,
    pub dim: u32,
}

/// Height as the size of a minimum transversal of the generator supports.
pub fn krull_height_oracle(spec: PathIdealSpec) -> Result<KrullHeight> {
    spec.require_nonzero()?;
    let gens = squarefree_power_generators(spec)?;
    let edges: Vec<u64> = gens.supports.iter().map(|s| s.mask()).collect();
    let cover = minimum_transversal(&edges)
        .ok_or_else(|| Error::Internal("generator with empty support".into()))?;
    let height = cover.count_ones();
    Ok(KrullHeight {
        height,
        dim: spec.n - height,
    })
}
