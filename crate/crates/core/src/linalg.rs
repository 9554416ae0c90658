//! Exact ranks of sparse matrices over the rationals and over GF(2).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse row: `(column, coefficient)` pairs with strictly increasing columns
/// and nonzero coefficients.
pub type SparseRow = Vec<(u32, i64)>;

/// Rank over the rationals of the matrix with the given rows.
///
/// Runs fraction-free elimination with machine integers and restarts with
/// big integers if any intermediate coefficient overflows.
pub fn rank_rational(rows: &[SparseRow], ncols: usize) -> usize {
    match Echelon::<i64>::rank(rows.iter().cloned(), ncols) {
        Some(rank) => rank,
        None => Echelon::<BigInt>::rank(
            rows.iter()
                .map(|r| r.iter().map(|&(c, a)| (c, BigInt::from(a))).collect()),
            ncols,
        )
        .expect("big integer elimination cannot overflow"),
    }
}

/// Rank over GF(2); only the parity of each coefficient matters.
pub fn rank_gf2(rows: &[SparseRow], ncols: usize) -> usize {
    let words = ncols.div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; ncols];
    let mut rank = 0;
    for row in rows {
        let mut bits = vec![0u64; words];
        for &(c, a) in row {
            if a & 1 != 0 {
                bits[c as usize / 64] ^= 1 << (c % 64);
            }
        }
        while let Some(lead) = leading_bit(&bits) {
            match &pivots[lead] {
                Some(p) => {
                    for (b, q) in bits.iter_mut().zip(p).skip(lead / 64) {
                        *b ^= q;
                    }
                }
                None => {
                    pivots[lead] = Some(bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn leading_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Integer coefficients with overflow detection.
trait Scalar: Clone + PartialEq + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn abs(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn divides(&self, other: &Self) -> bool;
    /// `a * x - b * y`, or `None` on overflow.
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn abs(&self) -> Self {
        i64::abs(*self)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn divides(&self, other: &Self) -> bool {
        other % self == 0
    }
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        let left = a.checked_mul(*x)?;
        let right = b.checked_mul(*y)?;
        let out = left.checked_sub(right)?;
        // keep negation of every stored value representable
        (out != i64::MIN).then_some(out)
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        Signed::abs(self).is_one()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn divides(&self, other: &Self) -> bool {
        Zero::is_zero(&(other % self))
    }
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
}

/// Incremental row echelon form keyed by leading column.
struct Echelon<T> {
    pivots: Vec<Option<Vec<(u32, T)>>>,
}

impl<T: Scalar> Echelon<T> {
    fn rank(rows: impl Iterator<Item = Vec<(u32, T)>>, ncols: usize) -> Option<usize> {
        let mut ech = Echelon {
            pivots: vec![None; ncols],
        };
        let mut rank = 0;
        for row in rows {
            if ech.insert(row)? {
                rank += 1;
            }
        }
        Some(rank)
    }

    /// Reduces `row` against the stored pivots; stores it if independent.
    fn insert(&mut self, mut row: Vec<(u32, T)>) -> Option<bool> {
        loop {
            let Some((lead, a)) = row.first().cloned() else {
                return Some(false);
            };
            let Some(pivot) = &self.pivots[lead as usize] else {
                normalize(&mut row);
                self.pivots[lead as usize] = Some(row);
                return Some(true);
            };
            let b = &pivot[0].1;
            row = if b.divides(&a) {
                eliminate(&row, &T::one(), pivot, &a.div_exact(b))?
            } else {
                let g = a.gcd(b);
                let mut r = eliminate(&row, &b.div_exact(&g), pivot, &a.div_exact(&g))?;
                normalize(&mut r);
                r
            };
        }
    }
}

/// `x * row - y * pivot`, dropping zero entries.
fn eliminate<T: Scalar>(
    row: &[(u32, T)],
    x: &T,
    pivot: &[(u32, T)],
    y: &T,
) -> Option<Vec<(u32, T)>> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(u32::MAX);
        let cj = pivot.get(j).map(|e| e.0).unwrap_or(u32::MAX);
        let value = if ci < cj {
            i += 1;
            T::combine(x, &row[i - 1].1, y, &T::zero())?
        } else if cj < ci {
            j += 1;
            T::combine(x, &T::zero(), y, &pivot[j - 1].1)?
        } else {
            i += 1;
            j += 1;
            T::combine(x, &row[i - 1].1, y, &pivot[j - 1].1)?
        };
        if !value.is_zero() {
            out.push((ci.min(cj), value));
        }
    }
    Some(out)
}

/// Divides out the content and makes the leading coefficient positive.
fn normalize<T: Scalar>(row: &mut [(u32, T)]) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.clone();
    for (_, v) in row.iter().skip(1) {
        if g.is_unit() {
            break;
        }
        g = g.gcd(v);
    }
    let flip = first.1.is_negative();
    if !g.is_unit() || flip {
        let g = if flip { g.abs().neg() } else { g.abs() };
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}
