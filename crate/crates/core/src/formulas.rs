//! Closed-form invariants of squarefree powers of t-path ideals and of
//! Young complexes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::young::Partition;

/// Which piece of the definition of `χ_t(n, k)` applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `n < kt`
    Zero,
    /// `kt ≤ n ≤ k(t+1)`
    Linear,
    /// `n > k(t+1)`, `n ≡ d (mod t+1)` with `0 ≤ d ≤ t−1`
    ResidueD { d: i64 },
    /// `n > k(t+1)`, `n ≡ t (mod t+1)`
    ResidueT,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiRegime {
    pub regime: Regime,
    pub value: i64,
}

/// `χ_t(n, k)`. Total in `n`; negative `n` falls in the zero piece.
pub fn chi(n: i64, k: i64, t: i64) -> ChiRegime {
    assert!(k >= 1 && t >= 1, "chi needs k ≥ 1 and t ≥ 1");
    let (regime, value) = if n < k * t {
        (Regime::Zero, 0)
    } else if n <= k * (t + 1) {
        (Regime::Linear, n - k * t + 1)
    } else {
        let d = n.rem_euclid(t + 1);
        if d == t {
            (Regime::ResidueT, 2 * (n + 1) / (t + 1) - k)
        } else {
            (Regime::ResidueD { d }, 2 * (n - d) / (t + 1) - k + 1)
        }
    };
    ChiRegime { regime, value }
}

fn chi_value(n: i64, k: i64, t: i64) -> i64 {
    chi(n, k, t).value
}

fn require_power_range(n: u32, k: u32, t: u32) -> Result<()> {
    if t == 0 {
        return Err(Error::Domain("t must be at least 1".into()));
    }
    if k == 0 || k > n / t {
        return Err(Error::Domain(format!(
            "need 1 ≤ k ≤ ⌊n/t⌋ = {}, got n={n}, k={k}, t={t}",
            n / t
        )));
    }
    Ok(())
}

/// `pd(R / I_{n,t}^{[k]})`.
pub fn pd_formula(n: u32, k: u32, t: u32) -> Result<u32> {
    require_power_range(n, k, t)?;
    if t == 1 {
        return Ok(n - k + 1);
    }
    Ok(chi_value(n as i64, k as i64, t as i64) as u32)
}

/// `dim(R / I_{n,t}^{[k]}) = n − ⌊n/t⌋ + k − 1`.
pub fn krull_formula(n: u32, k: u32, t: u32) -> Result<u32> {
    require_power_range(n, k, t)?;
    Ok(n - n / t + k - 1)
}

/// Helly number of the Alexander dual of `Δ_t^λ`, `(r−1)t − 1`.
///
/// The value `-1` for a single row means the dual has no nonempty minimal
/// nonface.
pub fn helly_formula(lambda: &Partition, t: u32) -> Result<i64> {
    if lambda.is_empty_shape() {
        return Err(Error::Precondition(
            "Helly number needs at least one row".into(),
        ));
    }
    Ok((lambda.len() as i64 - 1) * t as i64 - 1)
}

/// Leray number of `Δ_{n,t}^{[k]}`, one less than the projective dimension.
pub fn leray_formula(n: u32, k: u32, t: u32) -> Result<u32> {
    if t == 0 || k == 0 {
        return Err(Error::Domain("need k ≥ 1 and t ≥ 1".into()));
    }
    if (n as u64) < k as u64 * t as u64 {
        return Err(Error::Domain(format!(
            "n={n} < kt={}: the dual complex is void",
            k * t
        )));
    }
    Ok(pd_formula(n, k, t)? - 1)
}

/// `Δ_t^λ` is vertex decomposable iff `t = 1`, `r = 1`, or `λ2 ≤ t`.
pub fn vd_characterization(lambda: &Partition, t: u32) -> Result<bool> {
    if t == 0 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    Ok(t == 1 || lambda.len() <= 1 || lambda.part(2) <= t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Linearity {
    pub linear_quotients: bool,
    pub linear_resolution: bool,
}

/// Linear quotients and linear resolution of `I_{n,t}^{[k]}`: both hold
/// exactly when `kt ≤ n ≤ kt + t`, and always when `t = 1`.
pub fn linearity_characterization(n: u32, k: u32, t: u32) -> Result<Linearity> {
    require_power_range(n, k, t)?;
    let linear = t == 1 || n <= k * t + t;
    Ok(Linearity {
        linear_quotients: linear,
        linear_resolution: linear,
    })
}

/// Inclusive bounds for exhaustive lemma checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaRange {
    pub max_n: i64,
    pub max_k: i64,
    pub max_t: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: i64,
    pub k: i64,
    pub t: i64,
    pub i: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub range: LemmaRange,
    pub cases: u64,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

/// Inclusive range of the auxiliary index `i` as a function of `(n, k)`.
type IndexRange = fn(i64, i64) -> (i64, i64);

struct Lemma {
    name: &'static str,
    min_t: i64,
    index: Option<IndexRange>,
    holds: fn(i64, i64, i64, i64) -> bool,
}

const LEMMAS: [Lemma; 5] = [
    // χ(n−it, k+1−i) ≤ χ(n, k+1) for 1 ≤ i ≤ k
    Lemma {
        name: "diagonal",
        min_t: 1,
        index: Some(|_n, k| (1, k)),
        holds: |n, k, t, i| chi_value(n - i * t, k + 1 - i, t) <= chi_value(n, k + 1, t),
    },
    // nondecreasing in n; drops by t and t+1 are strict above kt
    Lemma {
        name: "monotone",
        min_t: 1,
        index: None,
        holds: |n, k, t, _| {
            let c = chi_value(n, k, t);
            chi_value(n + 1, k, t) >= c
                && (n <= k * t
                    || (chi_value(n - t, k, t) < c && chi_value(n - t - 1, k, t) <= c - 2))
        },
    },
    // χ(n−t−1, k) ≤ χ(n, k+1) − 1 for t ≥ 2, n ≥ (k+1)t
    Lemma {
        name: "shift",
        min_t: 2,
        index: None,
        holds: |n, k, t, _| n < (k + 1) * t || chi_value(n - t - 1, k, t) < chi_value(n, k + 1, t),
    },
    // χ(n−i, k) + χ(i−1, 1) ≤ χ(n, k) for t ≥ 2, 0 ≤ i ≤ n
    Lemma {
        name: "subadditive",
        min_t: 2,
        index: Some(|n, _k| (0, n)),
        holds: |n, k, t, i| chi_value(n - i, k, t) + chi_value(i - 1, 1, t) <= chi_value(n, k, t),
    },
    // the same inequality restricted to n − i ≥ kt
    Lemma {
        name: "subadditive_above_kt",
        min_t: 2,
        index: Some(|n, _k| (0, n)),
        holds: |n, k, t, i| {
            n - i < k * t || chi_value(n - i, k, t) + chi_value(i - 1, 1, t) <= chi_value(n, k, t)
        },
    },
];

/// Names of the four inequalities as literally stated, in report order.
pub const STATED_LEMMAS: [&str; 4] = ["diagonal", "monotone", "shift", "subadditive"];

/// Exhaustively evaluates the `χ_t` inequalities over `1 ≤ n ≤ max_n`,
/// `1 ≤ k ≤ max_k`, `1 ≤ t ≤ max_t`, each under its own hypotheses.
///
/// The four stated inequalities come first, followed by sub-additivity
/// restricted to `n − i ≥ kt`.
pub fn chi_lemma_checks(range: LemmaRange) -> Vec<LemmaReport> {
    LEMMAS
        .iter()
        .map(|lemma| {
            let mut cases = 0u64;
            let mut counterexample = None;
            'search: for t in lemma.min_t..=range.max_t {
                for k in 1..=range.max_k {
                    for n in 1..=range.max_n {
                        let (lo, hi) = lemma.index.map_or((0, 0), |f| f(n, k));
                        for i in lo..=hi {
                            cases += 1;
                            if !(lemma.holds)(n, k, t, i) {
                                counterexample = Some(Counterexample {
                                    n,
                                    k,
                                    t,
                                    i: lemma.index.map(|_| i),
                                });
                                break 'search;
                            }
                        }
                    }
                }
            }
            LemmaReport {
                lemma: lemma.name.to_string(),
                range,
                cases,
                pass: counterexample.is_none(),
                counterexample,
            }
        })
        .collect()
}
