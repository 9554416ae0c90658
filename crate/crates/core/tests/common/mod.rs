//! Brute-force reference implementations shared by the integration tests.
//! Nothing here reuses the library's face enumeration or elimination code.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use ytc_core::{Face, SimplicialComplex};

/// Every subset of `mask`.
pub fn subsets(mask: u64) -> Vec<u64> {
    let bits: Vec<u64> = (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| 1 << b)
        .collect();
    (0..1u64 << bits.len())
        .map(|code| {
            bits.iter()
                .enumerate()
                .filter(|(i, _)| code >> i & 1 == 1)
                .fold(0, |m, (_, b)| m | b)
        })
        .collect()
}

/// All faces, by testing every subset of the vertex set against the facets.
pub fn faces(delta: &SimplicialComplex) -> Vec<u64> {
    if delta.is_void() {
        return Vec::new();
    }
    let facets: Vec<u64> = delta.facets().iter().map(|f| f.mask()).collect();
    let all = facets.iter().fold(0, |a, f| a | f);
    subsets(all)
        .into_iter()
        .filter(|s| facets.iter().any(|f| s & !f == 0))
        .collect()
}

fn dense_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in rank + 1..m.len() {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            let pivot_row = m[rank].clone();
            for (x, y) in m[r][c..].iter_mut().zip(&pivot_row[c..]) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers over ℚ of the complex with the given face list
/// (which must be closed under subsets and contain the empty face).
pub fn betti_of_faces(faces: &[u64]) -> BTreeMap<i32, u64> {
    if faces.is_empty() {
        return BTreeMap::new();
    }
    let top = faces.iter().map(|f| f.count_ones()).max().unwrap() as usize;
    let layers: Vec<Vec<u64>> = (0..=top)
        .map(|s| {
            let mut l: Vec<u64> = faces
                .iter()
                .copied()
                .filter(|f| f.count_ones() as usize == s)
                .collect();
            l.sort_unstable();
            l
        })
        .collect();
    let boundary_rank = |s: usize| -> usize {
        if s == 0 || s > top {
            return 0;
        }
        let (hi, lo) = (&layers[s], &layers[s - 1]);
        let m: Vec<Vec<BigRational>> = hi
            .iter()
            .map(|&f| {
                let mut row = vec![BigRational::zero(); lo.len()];
                let verts: Vec<u64> = (0..64).filter(|b| f >> b & 1 == 1).collect();
                for (pos, v) in verts.iter().enumerate() {
                    let col = lo.iter().position(|&g| g == f & !(1 << v)).unwrap();
                    row[col] = if pos % 2 == 0 {
                        BigRational::one()
                    } else {
                        -BigRational::one()
                    };
                }
                row
            })
            .collect();
        dense_rank(m)
    };
    let ranks: Vec<usize> = (0..=top + 1).map(boundary_rank).collect();
    (0..=top)
        .map(|s| {
            (
                s as i32 - 1,
                (layers[s].len() - ranks[s] - ranks[s + 1]) as u64,
            )
        })
        .collect()
}

pub fn betti(delta: &SimplicialComplex) -> BTreeMap<i32, u64> {
    betti_of_faces(&faces(delta))
}

pub fn nonzero(b: &BTreeMap<i32, u64>) -> BTreeMap<i32, u64> {
    b.iter()
        .filter(|(_, &v)| v > 0)
        .map(|(&d, &v)| (d, v))
        .collect()
}

/// Nonzero `(i, |σ|)` pairs of the multigraded Betti table, by restricting
/// the face list to every subset of `universe`.
pub fn hochster_pairs(delta: &SimplicialComplex, universe: Face) -> Vec<(u32, u32)> {
    let all = faces(delta);
    let mut out = Vec::new();
    for sigma in subsets(universe.mask()) {
        let induced: Vec<u64> = all.iter().copied().filter(|f| f & !sigma == 0).collect();
        for (d, b) in betti_of_faces(&induced) {
            if b > 0 {
                let size = sigma.count_ones();
                out.push(((size as i32 - d - 1) as u32, size));
            }
        }
    }
    out
}

pub fn pd(delta: &SimplicialComplex, universe: Face) -> u32 {
    hochster_pairs(delta, universe)
        .iter()
        .map(|p| p.0)
        .max()
        .unwrap()
}

pub fn regularity(delta: &SimplicialComplex, universe: Face) -> u32 {
    hochster_pairs(delta, universe)
        .iter()
        .map(|p| p.1 - p.0)
        .max()
        .unwrap()
}

pub fn leray(delta: &SimplicialComplex) -> u32 {
    let all = faces(delta);
    let vertices = all.iter().fold(0, |a, f| a | f);
    let mut best = -1;
    for w in subsets(vertices) {
        let induced: Vec<u64> = all.iter().copied().filter(|f| f & !w == 0).collect();
        for (d, b) in betti_of_faces(&induced) {
            if b > 0 {
                best = best.max(d);
            }
        }
    }
    (best + 1) as u32
}

/// Minimal nonfaces inside `universe`, by scanning every subset.
pub fn minimal_nonfaces(delta: &SimplicialComplex, universe: Face) -> Vec<u64> {
    let facets: Vec<u64> = delta.facets().iter().map(|f| f.mask()).collect();
    let is_face = |s: u64| facets.iter().any(|f| s & !f == 0);
    subsets(universe.mask())
        .into_iter()
        .filter(|&s| !is_face(s))
        .filter(|&s| {
            (0..64)
                .filter(|b| s >> b & 1 == 1)
                .all(|b| is_face(s & !(1 << b)))
        })
        .collect()
}

/// Supports of the `k`-th squarefree power of the `t`-path ideal of `P_n`:
/// the `kt`-subsets of `[n]` whose maximal runs of consecutive vertices all
/// have length divisible by `t`.
pub fn path_power_supports(n: u32, t: u32, k: u32) -> Vec<u64> {
    let full = (1u64 << n) - 1;
    subsets(full << 1)
        .into_iter()
        .filter(|s| s.count_ones() == k * t)
        .filter(|&s| {
            let mut run = 0;
            for v in 1..=n + 1 {
                if s >> v & 1 == 1 {
                    run += 1;
                } else {
                    if run % t != 0 {
                        return false;
                    }
                    run = 0;
                }
            }
            true
        })
        .collect()
}
