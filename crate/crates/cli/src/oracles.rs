//! Brute-force counterparts of the closed forms, shared by `--oracle` and `verify`.

use ytc_core::homology::leray_oracle_over;
use ytc_core::{
    dual_complex, krull_height_oracle, pd_oracle, stanley_reisner_complex, young_complex, Error,
    Face, FieldTag, Partition, PathIdealSpec, Result, SimplicialComplex,
};

/// `[(r−1)t + λ1]`, the vertex range of the filling of `λ`.
pub fn young_universe(lambda: &Partition, t: u32) -> Result<Face> {
    if lambda.is_empty_shape() {
        return Err(Error::Precondition(
            "the shape must have at least one row".into(),
        ));
    }
    Face::range(1, (lambda.len() as u32 - 1) * t + lambda.part(1))
}

/// One less than the largest minimal nonface; a void complex has only `∅`.
pub fn helly_number(delta: &SimplicialComplex, universe: Face) -> Result<i64> {
    if delta.is_void() {
        return Ok(-1);
    }
    Ok(delta
        .minimal_nonfaces(universe)?
        .iter()
        .map(|f| f.len() as i64 - 1)
        .max()
        .unwrap_or(-1))
}

/// Helly number of the Alexander dual of `Δ_t^λ` over its filling range.
pub fn helly_oracle(lambda: &Partition, t: u32) -> Result<i64> {
    let universe = young_universe(lambda, t)?;
    let dual = young_complex(lambda, t)?.alexander_dual(universe)?;
    helly_number(&dual, universe)
}

/// Projective dimension of `R/I_{n,t}^{[k]}` read off Hochster's formula.
pub fn pd_via_hochster(spec: PathIdealSpec) -> Result<u32> {
    pd_oracle(&stanley_reisner_complex(spec)?, spec.universe())
}

pub fn krull_via_transversal(spec: PathIdealSpec) -> Result<u32> {
    Ok(krull_height_oracle(spec)?.dim)
}

/// Leray number of `Δ_{n,t}^{[k]}` from the homology of its induced subcomplexes.
pub fn leray_via_homology(spec: PathIdealSpec, field: FieldTag) -> Result<u32> {
    leray_oracle_over(&dual_complex(spec)?, spec.universe(), field)
}
