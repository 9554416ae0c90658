//! Partitions, their diagram filling, and the t-Young complex.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex, VertexId, MAX_VERTEX};
use crate::error::{Error, Result};

/// A partition `λ1 ≥ λ2 ≥ … ≥ λr ≥ 1`. No parts at all is the empty shape.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates monotonicity and trims trailing zero parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for (i, w) in parts.windows(2).enumerate() {
            if w[1] > w[0] {
                return Err(Error::Parse(format!(
                    "part at index {} ({}) exceeds the preceding part ({})",
                    i + 1,
                    w[1],
                    w[0]
                )));
            }
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty_shape() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle with `rows` rows of length `width` (empty if either is 0).
    pub fn rectangle(width: u32, rows: usize) -> Self {
        if width == 0 {
            return Self::empty_shape();
        }
        Partition {
            parts: vec![width; rows],
        }
    }

    pub fn is_empty_shape(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of rows `r`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_j` for 1-based `j`, zero beyond the last row.
    pub fn part(&self, j: usize) -> u32 {
        j.checked_sub(1)
            .and_then(|i| self.parts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn cells(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Every nonempty partition with at most `max_cells` cells, in
    /// lexicographic order of parts.
    pub fn all_up_to(max_cells: u32) -> Vec<Partition> {
        fn extend(prefix: &mut Vec<u32>, budget: u32, cap: u32, out: &mut Vec<Partition>) {
            if !prefix.is_empty() {
                out.push(Partition {
                    parts: prefix.clone(),
                });
            }
            for p in 1..=cap.min(budget) {
                prefix.push(p);
                extend(prefix, budget - p, p, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        extend(&mut Vec::new(), max_cells, max_cells, &mut out);
        out.sort();
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts such as `"5,4,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .enumerate()
            .map(|(i, p)| {
                p.trim().parse::<u32>().map_err(|e| {
                    Error::Parse(format!(
                        "part at index {i} ({:?}) is not a non-negative integer: {e}",
                        p.trim()
                    ))
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let joined: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", joined.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The filling of the diagram of `λ`: row `j` (counted from the top) holds
/// `(r−j)t + 1, …, (r−j)t + λ_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungFilling {
    t: u32,
    rows: Vec<Vec<VertexId>>,
}

impl YoungFilling {
    pub fn new(lambda: &Partition, t: u32) -> Result<Self> {
        if t == 0 {
            return Err(Error::Precondition("t must be at least 1".into()));
        }
        let r = lambda.len() as u64;
        if let Some(&first) = lambda.parts().first() {
            let largest = (r - 1) * t as u64 + first as u64;
            if largest > MAX_VERTEX as u64 {
                return Err(Error::capacity(
                    "largest diagram entry",
                    MAX_VERTEX as usize,
                    largest as usize,
                ));
            }
        }
        let rows = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                let offset = (r as u32 - 1 - i as u32) * t;
                (1..=len).map(|c| offset + c).collect()
            })
            .collect();
        Ok(YoungFilling { t, rows })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// `S_j` for 0-based row index.
    pub fn rows(&self) -> &[Vec<VertexId>] {
        &self.rows
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Distinct entries of each column, ascending.
    pub fn columns(&self) -> Vec<Vec<VertexId>> {
        (0..self.num_columns())
            .map(|c| {
                let mut col: Vec<VertexId> = self
                    .rows
                    .iter()
                    .filter_map(|row| row.get(c).copied())
                    .collect();
                col.sort_unstable();
                col.dedup();
                col
            })
            .collect()
    }
}

/// `Δ_t^λ`: facets are the strictly increasing sequences `a_1 < … < a_{λ1}`
/// with `a_c` an entry of column `c`.
pub fn young_complex(lambda: &Partition, t: u32) -> Result<SimplicialComplex> {
    let filling = YoungFilling::new(lambda, t)?;
    if lambda.is_empty_shape() {
        return Ok(SimplicialComplex::irrelevant());
    }
    let columns = filling.columns();
    let mut facets = Vec::new();
    transversals(&columns, 0, 0, Face::EMPTY, &mut facets);
    debug_assert!(!facets.is_empty());
    Ok(SimplicialComplex::from_facets(facets))
}

fn transversals(
    columns: &[Vec<VertexId>],
    col: usize,
    floor: VertexId,
    partial: Face,
    out: &mut Vec<Face>,
) {
    let Some(candidates) = columns.get(col) else {
        out.push(partial);
        return;
    };
    for &v in candidates.iter().filter(|&&v| v > floor) {
        transversals(columns, col + 1, v, partial.with(v), out);
    }
}

/// The poset on the entries of the filling whose cover relations are `x ⋖ y`
/// for `x < y` in consecutive columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnPoset {
    /// `(entry, 0-based column)`, sorted by column then entry.
    elements: Vec<(VertexId, usize)>,
    covers: Vec<(VertexId, VertexId)>,
}

impl ColumnPoset {
    /// Requires distinct entries, which holds when `λ2 ≤ t` or `r = 1`.
    pub fn new(lambda: &Partition, t: u32) -> Result<Self> {
        if lambda.len() > 1 && lambda.part(2) > t {
            return Err(Error::Precondition(format!(
                "poset presentation needs λ2 ≤ t, got λ2 = {} and t = {t}",
                lambda.part(2)
            )));
        }
        let filling = YoungFilling::new(lambda, t)?;
        let columns = filling.columns();
        let elements: Vec<(VertexId, usize)> = columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&v| (v, c)))
            .collect();
        let covers = columns
            .windows(2)
            .flat_map(|w| {
                w[0].iter()
                    .flat_map(move |&x| w[1].iter().filter(move |&&y| x < y).map(move |&y| (x, y)))
            })
            .collect();
        Ok(ColumnPoset { elements, covers })
    }

    pub fn elements(&self) -> &[(VertexId, usize)] {
        &self.elements
    }

    pub fn covers(&self) -> &[(VertexId, VertexId)] {
        &self.covers
    }

    /// All maximal chains, each as the set of its elements.
    pub fn maximal_chains(&self) -> Vec<Face> {
        let has_lower = |v: VertexId| self.covers.iter().any(|&(_, y)| y == v);
        let mut out = Vec::new();
        for &(v, _) in self.elements.iter().filter(|(v, _)| !has_lower(*v)) {
            self.extend_chain(v, Face::EMPTY.with(v), &mut out);
        }
        out
    }

    fn extend_chain(&self, top: VertexId, chain: Face, out: &mut Vec<Face>) {
        let mut extended = false;
        for &(_, y) in self.covers.iter().filter(|(x, _)| *x == top) {
            extended = true;
            self.extend_chain(y, chain.with(y), out);
        }
        if !extended {
            out.push(chain);
        }
    }
}

/// `Δ_t^λ` rebuilt as the complex generated by the maximal chains of the
/// column poset.
pub fn order_complex_presentation(lambda: &Partition, t: u32) -> Result<SimplicialComplex> {
    let poset = ColumnPoset::new(lambda, t)?;
    if lambda.is_empty_shape() {
        return Ok(SimplicialComplex::irrelevant());
    }
    Ok(SimplicialComplex::from_facets(poset.maximal_chains()))
}
