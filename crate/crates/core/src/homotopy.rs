//! Symbolic homotopy types: wedges of spheres, the recursive decomposition of
//! Young complexes, and the reduction digraph for path-ideal duals.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::young::Partition;

/// A point or a finite wedge of spheres, as `dimension -> multiplicity`.
///
/// The empty map is contractible. Dimension `-1` stands for the irrelevant
/// complex `{∅}` and only ever appears alone with multiplicity one.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct HomotopyClass {
    spheres: BTreeMap<i32, u64>,
}

impl HomotopyClass {
    pub fn contractible() -> Self {
        Self::default()
    }

    /// `S^{-1}`, the homotopy type of `{∅}`.
    pub fn empty_sphere() -> Self {
        Self::spheres(-1, 1)
    }

    /// A wedge of `count` copies of `S^dim` (contractible if `count` is 0).
    pub fn spheres(dim: i32, count: u64) -> Self {
        let mut spheres = BTreeMap::new();
        if count > 0 {
            spheres.insert(dim, count);
        }
        HomotopyClass { spheres }
    }

    pub fn from_map(spheres: BTreeMap<i32, u64>) -> Result<Self> {
        let spheres: BTreeMap<i32, u64> = spheres.into_iter().filter(|&(_, m)| m > 0).collect();
        if spheres.keys().any(|&d| d < -1) {
            return Err(Error::Domain(
                "sphere dimensions must be at least -1".into(),
            ));
        }
        if spheres.contains_key(&-1) && (spheres.len() > 1 || spheres[&-1] > 1) {
            return Err(Error::Domain(
                "S^-1 cannot be wedged with anything else".into(),
            ));
        }
        Ok(HomotopyClass { spheres })
    }

    pub fn is_contractible(&self) -> bool {
        self.spheres.is_empty()
    }

    pub fn multiplicity(&self, dim: i32) -> u64 {
        self.spheres.get(&dim).copied().unwrap_or(0)
    }

    pub fn as_map(&self) -> &BTreeMap<i32, u64> {
        &self.spheres
    }

    pub fn max_dimension(&self) -> Option<i32> {
        self.spheres.keys().next_back().copied()
    }

    /// `a ∨ b`; the point is the identity.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        let lonely = |x: &Self| x.spheres.contains_key(&-1);
        if (lonely(self) && !other.is_contractible()) || (lonely(other) && !self.is_contractible())
        {
            return Err(Error::Internal(format!(
                "attempted to wedge {self} with {other}"
            )));
        }
        let mut spheres = self.spheres.clone();
        for (&d, &m) in &other.spheres {
            *spheres.entry(d).or_insert(0) += m;
        }
        Ok(HomotopyClass { spheres })
    }

    /// `Σ^times`; shifts every sphere up by `times`.
    pub fn suspend(&self, times: u32) -> Self {
        HomotopyClass {
            spheres: self
                .spheres
                .iter()
                .map(|(&d, &m)| (d + times as i32, m))
                .collect(),
        }
    }
}

impl fmt::Display for HomotopyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_contractible() {
            return f.write_str("point");
        }
        let parts: Vec<String> = self
            .spheres
            .iter()
            .rev()
            .map(|(d, m)| {
                if *m == 1 {
                    format!("S^{d}")
                } else {
                    format!("{m}×S^{d}")
                }
            })
            .collect();
        f.write_str(&parts.join(" ∨ "))
    }
}

impl fmt::Debug for HomotopyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.spheres)
    }
}

impl Serialize for HomotopyClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        if self.is_contractible() {
            map.serialize_entry("type", "contractible")?;
        } else {
            map.serialize_entry("type", "wedge")?;
            let spheres: BTreeMap<String, u64> = self
                .spheres
                .iter()
                .map(|(d, m)| (d.to_string(), *m))
                .collect();
            map.serialize_entry("spheres", &spheres)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for HomotopyClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(tag = "type", rename_all = "lowercase")]
        enum Repr {
            Contractible,
            Wedge { spheres: BTreeMap<String, u64> },
        }
        match Repr::deserialize(deserializer)? {
            Repr::Contractible => Ok(HomotopyClass::contractible()),
            Repr::Wedge { spheres } => {
                let map = spheres
                    .into_iter()
                    .map(|(d, m)| d.parse::<i32>().map(|d| (d, m)).map_err(de::Error::custom))
                    .collect::<std::result::Result<BTreeMap<_, _>, _>>()?;
                HomotopyClass::from_map(map).map_err(de::Error::custom)
            }
        }
    }
}

/// Homotopy type of `Δ_t^λ`, by recursive wedge decomposition.
pub fn young_homotopy(lambda: &Partition, t: u32) -> Result<HomotopyClass> {
    if t == 0 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    let mut memo = HashMap::new();
    young_rec(lambda.parts(), t, &mut memo)
}

fn young_rec(
    parts: &[u32],
    t: u32,
    memo: &mut HashMap<Vec<u32>, HomotopyClass>,
) -> Result<HomotopyClass> {
    let r = parts.len();
    if r == 0 {
        return Ok(HomotopyClass::empty_sphere());
    }
    if r == 1 || parts[0] > parts[1] {
        return Ok(HomotopyClass::contractible());
    }
    if parts[0] == 1 {
        return Ok(HomotopyClass::spheres(0, r as u64 - 1));
    }
    if let Some(hit) = memo.get(parts) {
        return Ok(hit.clone());
    }
    let first = parts[0];
    let trimmed = |cap: u32, from: usize| -> Vec<u32> {
        parts[from..]
            .iter()
            .map(|&p| p.min(cap))
            .filter(|&p| p > 0)
            .collect()
    };
    let rest = young_rec(&parts[1..], t, memo)?;
    let shaved = young_rec(&trimmed(first - 1, 1), t, memo)?;
    let mut out = rest.wedge(&shaved.suspend(1))?;
    if first > t {
        let deep = young_rec(&trimmed(first - t - 1, 0), t, memo)?;
        out = out.wedge(&deep.suspend(2))?;
    }
    memo.insert(parts.to_vec(), out.clone());
    Ok(out)
}

/// `Δ_{n,t}^{[k]} ≃ ⋁_{C(k,l)} S^{l−1}` for `n = kt + l` with `1 ≤ l ≤ t`.
pub fn binomial_wedge(n: u32, k: u32, t: u32) -> Result<HomotopyClass> {
    let base = k as u64 * t as u64;
    let l = (n as u64)
        .checked_sub(base)
        .filter(|&l| l >= 1 && l <= t as u64);
    let Some(l) = l else {
        return Err(Error::Precondition(format!(
            "binomial wedge needs kt < n ≤ kt + t, got n={n}, k={k}, t={t}"
        )));
    };
    let count = binomial(k as u64, l);
    Ok(HomotopyClass::spheres(l as i32 - 1, count))
}

/// `C(n, r)`, zero when `r > n`.
pub fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Vertex `(m, j)` of the reduction digraph.
pub type GraphVertex = (u32, u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    A,
    B,
    C,
}

impl EdgeKind {
    pub fn label(self) -> u32 {
        match self {
            EdgeKind::A => 0,
            EdgeKind::B => 1,
            EdgeKind::C => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub from: GraphVertex,
    pub to: GraphVertex,
    pub kind: EdgeKind,
    pub label: u32,
}

/// The labelled digraph reducing `Δ_{n,t}^{[k]}` to binomial-wedge leaves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionGraph {
    pub n: u32,
    pub k: u32,
    pub t: u32,
    pub root: GraphVertex,
    /// Sorted by decreasing `m`, then decreasing `j`; the root comes first.
    pub vertices: Vec<GraphVertex>,
    pub edges: Vec<Edge>,
}

/// Number of root-to-leaf paths with a given label sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathCount {
    pub leaf: GraphVertex,
    pub label_sum: u32,
    pub count: u64,
}

impl ReductionGraph {
    /// Reachable closure from `(n, k)`; requires `n − kt > t`.
    pub fn build(n: u32, k: u32, t: u32) -> Result<Self> {
        if t == 0 {
            return Err(Error::Precondition("t must be at least 1".into()));
        }
        if !(n as u64 > k as u64 * t as u64 + t as u64) {
            return Err(Error::Precondition(format!(
                "reduction graph needs n − kt > t, got n={n}, k={k}, t={t}"
            )));
        }
        let root = (n, k);
        let mut seen = vec![root];
        let mut stack = vec![root];
        let mut edges = Vec::new();
        while let Some(v) = stack.pop() {
            for e in Self::out_edges(v, t) {
                edges.push(e);
                if !seen.contains(&e.to) {
                    seen.push(e.to);
                    stack.push(e.to);
                }
            }
        }
        seen.sort_unstable_by(|a, b| b.cmp(a));
        edges.sort_unstable_by(|a, b| b.from.cmp(&a.from).then(a.kind.cmp(&b.kind)));
        Ok(ReductionGraph {
            n,
            k,
            t,
            root,
            vertices: seen,
            edges,
        })
    }

    fn out_edges((m, j): GraphVertex, t: u32) -> Vec<Edge> {
        if j == 0 || m <= j * t + t {
            return Vec::new();
        }
        let edge = |to, kind: EdgeKind| Edge {
            from: (m, j),
            to,
            kind,
            label: kind.label(),
        };
        vec![
            edge((m - t, j - 1), EdgeKind::A),
            edge((m - t - 1, j - 1), EdgeKind::B),
            edge((m - t - 1, j), EdgeKind::C),
        ]
    }

    /// `jt ≤ m ≤ jt + t` with `j ≥ 1`.
    pub fn is_leaf(&self, (m, j): GraphVertex) -> bool {
        j >= 1 && j * self.t <= m && m <= j * self.t + self.t
    }

    pub fn is_terminal(&self, (_, j): GraphVertex) -> bool {
        j == 0
    }

    pub fn leaves(&self) -> Vec<GraphVertex> {
        self.vertices
            .iter()
            .copied()
            .filter(|&v| self.is_leaf(v))
            .collect()
    }

    /// GraphViz rendering with nodes named `"m,j"`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  \"{},{}\" -> \"{},{}\" [label={}];",
                e.from.0, e.from.1, e.to.0, e.to.1, e.label
            );
        }
        out.push_str("}\n");
        out
    }

    /// Path counts for every leaf and label sum, by dynamic programming in
    /// decreasing `m` (every edge strictly decreases `m`).
    pub fn path_label_counts(&self) -> Vec<PathCount> {
        let mut ways: HashMap<GraphVertex, BTreeMap<u32, u64>> = HashMap::new();
        ways.entry(self.root).or_default().insert(0, 1);
        for &v in &self.vertices {
            let Some(here) = ways.get(&v).cloned() else {
                continue;
            };
            for e in self.edges.iter().filter(|e| e.from == v) {
                let there = ways.entry(e.to).or_default();
                for (&alpha, &c) in &here {
                    *there.entry(alpha + e.label).or_insert(0) += c;
                }
            }
        }
        let mut out: Vec<PathCount> = self
            .leaves()
            .into_iter()
            .flat_map(|leaf| {
                ways.get(&leaf)
                    .into_iter()
                    .flatten()
                    .map(move |(&label_sum, &count)| PathCount {
                        leaf,
                        label_sum,
                        count,
                    })
            })
            .collect();
        out.sort_unstable();
        out
    }
}

pub fn build_reduction_graph(n: u32, k: u32, t: u32) -> Result<ReductionGraph> {
    ReductionGraph::build(n, k, t)
}

/// Homotopy type of the Alexander dual `Δ_{n,t}^{[k]}` of the `k`-th
/// squarefree power of the `t`-path ideal of the path on `n` vertices.
pub fn dual_homotopy(n: u32, k: u32, t: u32) -> Result<HomotopyClass> {
    if t == 0 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    let base = k as u64 * t as u64;
    let n64 = n as u64;
    if n64 < base {
        return Err(Error::Domain(format!(
            "n={n} < kt={base}: the ideal is zero and its dual is void"
        )));
    }
    if n64 == base {
        return Ok(HomotopyClass::empty_sphere());
    }
    if n64 <= base + t as u64 {
        return binomial_wedge(n, k, t);
    }
    let graph = ReductionGraph::build(n, k, t)?;
    let mut out = HomotopyClass::contractible();
    for pc in graph.path_label_counts() {
        let (m, j) = pc.leaf;
        let leaf = if m == j * t {
            HomotopyClass::empty_sphere()
        } else {
            binomial_wedge(m, j, t)?
        };
        let piece = leaf.suspend(pc.label_sum);
        for _ in 0..pc.count {
            out = out.wedge(&piece)?;
        }
    }
    Ok(out)
}
