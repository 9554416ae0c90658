//! Finite abstract simplicial complexes on small integer vertex labels.
//!
//! A vertex label doubles as a bit position, so every face is a single `u64`
//! and subset tests are one instruction. Labels must therefore lie in
//! `0..=MAX_VERTEX`.
//!
//! The empty collection of faces (`Status::Void`) and the complex whose only
//! face is the empty set (`Status::Irrelevant`) are kept apart everywhere: they
//! have different reduced homology in degree -1.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph;

pub type VertexId = u32;

/// Largest admissible vertex label.
pub const MAX_VERTEX: VertexId = 63;

/// A finite set of vertices, stored as a bitmask.
///
/// Faces order canonically by size first and lexicographically (on the sorted
/// vertex list) second.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn new<I: IntoIterator<Item = VertexId>>(vertices: I) -> Result<Face> {
        let mut mask = 0u64;
        for v in vertices {
            if v > MAX_VERTEX {
                return Err(Error::capacity(
                    "vertex label",
                    MAX_VERTEX as usize,
                    v as usize,
                ));
            }
            mask |= 1 << v;
        }
        Ok(Face(mask))
    }

    /// The interval `lo..=hi` (empty when `lo > hi`).
    pub fn range(lo: VertexId, hi: VertexId) -> Result<Face> {
        Face::new(lo..=hi)
    }

    pub const fn from_mask(mask: u64) -> Face {
        Face(mask)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|σ| - 1`; the empty face has dimension -1.
    pub const fn dim(self) -> i32 {
        self.0.count_ones() as i32 - 1
    }

    pub const fn contains(self, v: VertexId) -> bool {
        v <= MAX_VERTEX && self.0 & (1 << v) != 0
    }

    pub const fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub const fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn with(self, v: VertexId) -> Face {
        debug_assert!(v <= MAX_VERTEX);
        Face(self.0 | (1 << v))
    }

    pub fn without(self, v: VertexId) -> Face {
        debug_assert!(v <= MAX_VERTEX);
        Face(self.0 & !(1 << v))
    }

    pub fn min_vertex(self) -> Option<VertexId> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn max_vertex(self) -> Option<VertexId> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros())
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<VertexId> {
        self.vertices().collect()
    }

    /// All subsets of this face, including the empty face and the face itself.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut sub = full;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = sub;
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & full;
            }
            Some(Face(out))
        })
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // the lowest differing vertex belongs to `self`
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Face {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.vertices())
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<VertexId>::deserialize(deserializer)?;
        if raw.windows(2).any(|w| w[0] >= w[1]) {
            return Err(serde::de::Error::custom(
                "face vertices must be strictly increasing",
            ));
        }
        Face::new(raw).map_err(serde::de::Error::custom)
    }
}

/// Iterator over the vertices of a [`Face`] in increasing order.
#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// No faces at all.
    Void,
    /// Exactly one face, the empty face.
    Irrelevant,
    /// At least one nonempty face.
    Proper,
}

/// A simplicial complex given by its facets.
///
/// Facets are pairwise incomparable and sorted canonically, so two complexes
/// are equal exactly when their facet lists are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    status: Status,
    facets: Vec<Face>,
    universe: Option<Face>,
}

impl SimplicialComplex {
    pub fn void() -> Self {
        SimplicialComplex {
            status: Status::Void,
            facets: Vec::new(),
            universe: None,
        }
    }

    pub fn irrelevant() -> Self {
        SimplicialComplex {
            status: Status::Irrelevant,
            facets: vec![Face::EMPTY],
            universe: None,
        }
    }

    /// The full simplex on `face` (the irrelevant complex when `face` is empty).
    pub fn simplex(face: Face) -> Self {
        Self::from_facets([face])
    }

    /// The complex generated by the inclusion-maximal candidates.
    pub fn from_facets<I: IntoIterator<Item = Face>>(candidates: I) -> Self {
        let mut faces: Vec<Face> = candidates.into_iter().collect();
        if faces.is_empty() {
            return Self::void();
        }
        // Larger faces first, so a face only needs comparing against kept ones.
        faces.sort_unstable_by(|a, b| b.cmp(a));
        faces.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces {
            if !kept.iter().any(|k| f.is_subset(*k)) {
                kept.push(f);
            }
        }
        kept.reverse();
        if kept.len() == 1 && kept[0].is_empty() {
            return Self::irrelevant();
        }
        let complex = SimplicialComplex {
            status: Status::Proper,
            facets: kept,
            universe: None,
        };
        debug_assert!(complex.facets_are_antichain());
        complex
    }

    /// Convenience constructor from explicit vertex lists.
    pub fn from_vertex_lists<I, F>(lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = VertexId>,
    {
        let faces = lists
            .into_iter()
            .map(Face::new)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_facets(faces))
    }

    /// Attach an explicit vertex universe; it must contain every vertex.
    pub fn with_universe(mut self, universe: Face) -> Result<Self> {
        if !self.vertex_set().is_subset(universe) {
            return Err(Error::Domain(format!(
                "universe {universe} does not contain the vertex set {}",
                self.vertex_set()
            )));
        }
        self.universe = Some(universe);
        Ok(self)
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_void(&self) -> bool {
        self.status == Status::Void
    }

    pub fn is_irrelevant(&self) -> bool {
        self.status == Status::Irrelevant
    }

    pub fn is_proper(&self) -> bool {
        self.status == Status::Proper
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn universe(&self) -> Option<Face> {
        self.universe
    }

    /// The explicit universe if one was attached, the vertex set otherwise.
    pub fn ambient(&self) -> Face {
        self.universe.unwrap_or_else(|| self.vertex_set())
    }

    pub fn vertex_set(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_set().len()
    }

    /// `None` for the void complex, `Some(-1)` for the irrelevant one.
    pub fn dimension(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.dim()).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn is_simplex(&self) -> bool {
        self.status == Status::Proper && self.facets.len() == 1
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// A vertex lying in every facet, if the complex is a cone.
    pub fn cone_apex(&self) -> Option<VertexId> {
        if self.status != Status::Proper {
            return None;
        }
        let common = self
            .facets
            .iter()
            .fold(Face::from_mask(u64::MAX), |acc, f| acc.intersection(*f));
        common.min_vertex()
    }

    /// Every face, canonically sorted. The void complex has none; otherwise the
    /// empty face comes first.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen: HashSet<u64> = HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                seen.insert(s.mask());
            }
        }
        let mut out: Vec<Face> = seen.into_iter().map(Face::from_mask).collect();
        out.sort_unstable();
        out
    }

    /// Faces grouped by dimension: entry `d + 1` holds the `d`-faces.
    pub fn faces_by_dimension(&self) -> Vec<Vec<Face>> {
        let Some(dim) = self.dimension() else {
            return Vec::new();
        };
        let mut out = vec![Vec::new(); (dim + 2) as usize];
        for f in self.faces() {
            out[f.len()].push(f);
        }
        out
    }

    /// Face counts indexed by `dimension + 1`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dimension().iter().map(Vec::len).collect()
    }

    /// `Σ_d (-1)^d f_d` including the empty face in degree -1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum()
    }

    fn facets_are_antichain(&self) -> bool {
        self.facets.iter().enumerate().all(|(i, a)| {
            self.facets
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.is_subset(*b))
        }) && self.facets.windows(2).all(|w| w[0] < w[1])
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`.
    pub fn link(&self, sigma: Face) -> Result<Self> {
        if !self.contains(sigma) {
            return Err(Error::Domain(format!(
                "{sigma} is not a face of the complex"
            )));
        }
        Ok(Self::from_facets(
            self.facets
                .iter()
                .filter(|f| sigma.is_subset(**f))
                .map(|f| f.difference(sigma)),
        ))
    }

    pub fn deletion(&self, v: VertexId) -> Result<Self> {
        self.require_vertex(v)?;
        Ok(Self::from_facets(self.facets.iter().map(|f| f.without(v))))
    }

    pub fn star(&self, v: VertexId) -> Result<Self> {
        self.require_vertex(v)?;
        Ok(Self::from_facets(
            self.facets.iter().copied().filter(|f| f.contains(v)),
        ))
    }

    fn require_vertex(&self, v: VertexId) -> Result<()> {
        if self.vertex_set().contains(v) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{v} is not a vertex of the complex")))
        }
    }

    /// Join with a complex on a disjoint vertex set.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if !self.vertex_set().is_disjoint(other.vertex_set()) {
            return Err(Error::Domain(format!(
                "join needs disjoint vertex sets, both contain {}",
                self.vertex_set().intersection(other.vertex_set())
            )));
        }
        let mut out = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                out.push(a.union(*b));
            }
        }
        Ok(Self::from_facets(out))
    }

    pub fn cone(&self, apex: VertexId) -> Result<Self> {
        if self.is_void() {
            return Err(Error::Domain(
                "cone over the void complex is undefined".into(),
            ));
        }
        self.join(&Self::simplex(Face::new([apex])?))
    }

    /// `Δ * ⟨{v}, {w}⟩`. The suspension of the irrelevant complex is `S^0`.
    pub fn suspension(&self, v: VertexId, w: VertexId) -> Result<Self> {
        if self.is_void() {
            return Err(Error::Domain(
                "suspension of the void complex is undefined".into(),
            ));
        }
        if v == w {
            return Err(Error::Domain(format!(
                "suspension needs two distinct fresh vertices, got {v} twice"
            )));
        }
        let poles = Self::from_facets([Face::new([v])?, Face::new([w])?]);
        self.join(&poles)
    }

    /// Inclusion-minimal subsets of `universe` that are not faces.
    pub fn minimal_nonfaces(&self, universe: Face) -> Result<Vec<Face>> {
        if self.is_void() {
            return Err(Error::Domain(
                "minimal nonfaces of the void complex are not defined".into(),
            ));
        }
        self.require_within(universe)?;
        // σ is a nonface iff it meets the complement of every facet.
        let complements: Vec<u64> = self
            .facets
            .iter()
            .map(|f| universe.difference(*f).mask())
            .collect();
        let mut out: Vec<Face> = hypergraph::minimal_transversals(&complements)
            .into_iter()
            .map(Face::from_mask)
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// `Δ^∨ = {U \ F : F ∉ Δ}` over the given universe.
    pub fn alexander_dual(&self, universe: Face) -> Result<Self> {
        self.require_within(universe)?;
        let dual = if self.is_void() {
            Self::simplex(universe)
        } else {
            Self::from_facets(
                self.minimal_nonfaces(universe)?
                    .into_iter()
                    .map(|n| universe.difference(n)),
            )
        };
        Ok(dual)
    }

    fn require_within(&self, universe: Face) -> Result<()> {
        if self.vertex_set().is_subset(universe) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "vertices {} lie outside the universe {universe}",
                self.vertex_set().difference(universe)
            )))
        }
    }

    /// `{σ ∈ Δ : σ ⊆ W}`.
    pub fn induced_subcomplex(&self, w: Face) -> Self {
        if self.is_void() {
            return Self::void();
        }
        Self::from_facets(self.facets.iter().map(|f| f.intersection(w)))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            Status::Void => f.write_str("Void"),
            Status::Irrelevant => f.write_str("Irrelevant"),
            Status::Proper => f.debug_list().entries(&self.facets).finish(),
        }
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            Status::Void => f.write_str("void"),
            Status::Irrelevant => f.write_str("{∅}"),
            Status::Proper => {
                f.write_str("⟨")?;
                for (i, facet) in self.facets.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{facet}")?;
                }
                f.write_str("⟩")
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    status: Status,
    facets: Vec<Face>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    universe: Option<Face>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        ComplexRepr {
            status: self.status,
            facets: self.facets.clone(),
            universe: self.universe,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ComplexRepr::deserialize(deserializer)?;
        let complex = match repr.status {
            Status::Void if repr.facets.is_empty() => Self::void(),
            Status::Irrelevant if repr.facets.iter().all(|f| f.is_empty()) => Self::irrelevant(),
            Status::Proper if !repr.facets.is_empty() => {
                let c = Self::from_facets(repr.facets.iter().copied());
                if c.facets.len() != repr.facets.len() || !c.is_proper() {
                    return Err(D::Error::custom(
                        "facets must be nonempty and pairwise incomparable",
                    ));
                }
                c
            }
            s => {
                return Err(D::Error::custom(format!(
                    "facet list inconsistent with status {s:?}"
                )))
            }
        };
        match repr.universe {
            Some(u) => complex.with_universe(u).map_err(D::Error::custom),
            None => Ok(complex),
        }
    }
}
