//! Shedding vertices, vertex decomposability and shellability, decided by
//! direct search.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// Vertex bound for the vertex-decomposability search.
pub const MAX_VD_VERTICES: usize = 20;
/// Facet bound for the shellability search.
pub const MAX_SHELLING_FACETS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Vd,
    Shelling,
}

/// Recursion tree of a vertex decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VdTree {
    Node {
        vertex: VertexId,
        link: Box<VdTree>,
        del: Box<VdTree>,
    },
    Base {
        base: BaseCase,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseCase {
    Simplex,
    Irrelevant,
}

/// Why a search failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Obstruction {
    /// Shedding vertices of the input; each led to a non-decomposable link
    /// or deletion (none at all when the list is empty).
    NoDecomposition { shedding_vertices: Vec<VertexId> },
    /// Length of the longest facet prefix satisfying the shelling condition.
    NoShelling { longest_prefix: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompCertificate {
    pub verdict: bool,
    pub kind: CertificateKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tree: Option<VdTree>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<Vec<Face>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub obstruction: Option<Obstruction>,
}

impl DecompCertificate {
    /// Re-verifies a positive certificate against `delta` from the
    /// definitions alone. Negative certificates do not replay.
    pub fn replay(&self, delta: &SimplicialComplex) -> bool {
        if !self.verdict {
            return false;
        }
        match (self.kind, &self.tree, &self.order) {
            (CertificateKind::Vd, Some(tree), _) => replay_tree(tree, delta),
            (CertificateKind::Shelling, _, Some(order)) => is_shelling_order(delta, order),
            _ => false,
        }
    }
}

fn replay_tree(tree: &VdTree, delta: &SimplicialComplex) -> bool {
    match tree {
        VdTree::Base {
            base: BaseCase::Irrelevant,
        } => delta.is_irrelevant(),
        VdTree::Base {
            base: BaseCase::Simplex,
        } => delta.is_simplex(),
        VdTree::Node { vertex, link, del } => {
            let (Ok(lk), Ok(dl)) = (
                delta.link(Face::EMPTY.with(*vertex)),
                delta.deletion(*vertex),
            ) else {
                return false;
            };
            dl.facets().iter().all(|f| delta.facets().contains(f))
                && replay_tree(link, &lk)
                && replay_tree(del, &dl)
        }
    }
}

/// Vertices `x` such that every facet of `del(x)` is a facet of `Δ`.
pub fn shedding_vertices(delta: &SimplicialComplex) -> Result<Vec<VertexId>> {
    if !delta.is_proper() {
        return Err(Error::Domain(
            "shedding vertices need a complex with a nonempty face".into(),
        ));
    }
    if delta.is_simplex() {
        return Ok(Vec::new());
    }
    Ok(delta
        .vertex_set()
        .vertices()
        .filter(|&x| {
            delta
                .facets()
                .iter()
                .filter(|f| f.contains(x))
                .all(|f| is_covered(delta, f.without(x), x))
        })
        .collect())
}

/// Whether `face` (not containing `x`) lies in a facet avoiding `x`.
fn is_covered(delta: &SimplicialComplex, face: Face, x: VertexId) -> bool {
    delta
        .facets()
        .iter()
        .any(|g| !g.contains(x) && face.is_subset(*g))
}

/// Facets relabelled by first appearance, so isomorphic copies arising in
/// different branches share a memo entry.
fn canonical_key(delta: &SimplicialComplex) -> Vec<u64> {
    let mut relabel = [u8::MAX; 64];
    let mut next = 0u8;
    for f in delta.facets() {
        for v in f.vertices() {
            if relabel[v as usize] == u8::MAX {
                relabel[v as usize] = next;
                next += 1;
            }
        }
    }
    let mut key: Vec<u64> = delta
        .facets()
        .iter()
        .map(|f| f.vertices().fold(0u64, |m, v| m | 1 << relabel[v as usize]))
        .collect();
    key.sort_unstable();
    key
}

struct VdSearch {
    memo: HashMap<Vec<u64>, bool>,
}

impl VdSearch {
    fn decide(&mut self, delta: &SimplicialComplex) -> Result<bool> {
        if delta.is_irrelevant() || delta.is_simplex() {
            return Ok(true);
        }
        let key = canonical_key(delta);
        if let Some(&known) = self.memo.get(&key) {
            return Ok(known);
        }
        let mut verdict = false;
        for x in shedding_vertices(delta)? {
            if self.split_works(delta, x)? {
                verdict = true;
                break;
            }
        }
        self.memo.insert(key, verdict);
        Ok(verdict)
    }

    fn split_works(&mut self, delta: &SimplicialComplex, x: VertexId) -> Result<bool> {
        Ok(self.decide(&delta.link(Face::EMPTY.with(x))?)? && self.decide(&delta.deletion(x)?)?)
    }

    /// Rebuilds the witness tree, reusing the memoized verdicts.
    fn tree(&mut self, delta: &SimplicialComplex) -> Result<VdTree> {
        if delta.is_irrelevant() {
            return Ok(VdTree::Base {
                base: BaseCase::Irrelevant,
            });
        }
        if delta.is_simplex() {
            return Ok(VdTree::Base {
                base: BaseCase::Simplex,
            });
        }
        for x in shedding_vertices(delta)? {
            if self.split_works(delta, x)? {
                return Ok(VdTree::Node {
                    vertex: x,
                    link: Box::new(self.tree(&delta.link(Face::EMPTY.with(x))?)?),
                    del: Box::new(self.tree(&delta.deletion(x)?)?),
                });
            }
        }
        Err(Error::Internal(
            "tree requested for a non-decomposable complex".into(),
        ))
    }
}

/// Decides vertex decomposability, trying shedding vertices in ascending
/// order.
pub fn is_vertex_decomposable(delta: &SimplicialComplex) -> Result<DecompCertificate> {
    if delta.is_void() {
        return Err(Error::Domain("the void complex is not decomposable".into()));
    }
    let nv = delta.num_vertices();
    if nv > MAX_VD_VERTICES {
        return Err(Error::capacity(
            "vertex count for decomposability",
            MAX_VD_VERTICES,
            nv,
        ));
    }
    let mut search = VdSearch {
        memo: HashMap::new(),
    };
    if search.decide(delta)? {
        Ok(DecompCertificate {
            verdict: true,
            kind: CertificateKind::Vd,
            tree: Some(search.tree(delta)?),
            order: None,
            obstruction: None,
        })
    } else {
        Ok(DecompCertificate {
            verdict: false,
            kind: CertificateKind::Vd,
            tree: None,
            order: None,
            obstruction: Some(Obstruction::NoDecomposition {
                shedding_vertices: shedding_vertices(delta)?,
            }),
        })
    }
}

/// Whether facet `f` may follow the facets in `earlier`: the intersection of
/// `⟨earlier⟩` with `⟨f⟩` is generated by codimension-one faces of `f`.
fn extends_shelling(earlier: &[Face], f: Face) -> bool {
    if earlier.is_empty() {
        return true;
    }
    let ridges: Vec<Face> = earlier
        .iter()
        .map(|g| g.intersection(f))
        .filter(|r| r.len() + 1 == f.len())
        .collect();
    !ridges.is_empty()
        && earlier
            .iter()
            .all(|g| ridges.iter().any(|r| g.intersection(f).is_subset(*r)))
}

fn is_shelling_order(delta: &SimplicialComplex, order: &[Face]) -> bool {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    sorted == delta.facets() && (0..order.len()).all(|i| extends_shelling(&order[..i], order[i]))
}

/// Decides shellability of a pure complex by depth-first search over facet
/// orders. Whether a facet can come next depends only on the set already
/// placed, so failed sets are memoized.
pub fn is_shellable(delta: &SimplicialComplex) -> Result<DecompCertificate> {
    if delta.is_void() {
        return Err(Error::Domain(
            "the void complex has no facets to order".into(),
        ));
    }
    if !delta.is_pure() {
        return Err(Error::Precondition(
            "shellability is only decided for pure complexes".into(),
        ));
    }
    let facets = delta.facets();
    if facets.len() > MAX_SHELLING_FACETS {
        return Err(Error::capacity(
            "facet count for shellability",
            MAX_SHELLING_FACETS,
            facets.len(),
        ));
    }
    let mut dead = vec![false; 1 << facets.len()];
    let mut order = Vec::with_capacity(facets.len());
    let mut longest = 0;
    let found = shell_dfs(facets, 0, &mut order, &mut dead, &mut longest);
    Ok(DecompCertificate {
        verdict: found,
        kind: CertificateKind::Shelling,
        tree: None,
        order: found.then_some(order),
        obstruction: (!found).then_some(Obstruction::NoShelling {
            longest_prefix: longest,
        }),
    })
}

fn shell_dfs(
    facets: &[Face],
    used: usize,
    order: &mut Vec<Face>,
    dead: &mut [bool],
    longest: &mut usize,
) -> bool {
    *longest = (*longest).max(order.len());
    if order.len() == facets.len() {
        return true;
    }
    if dead[used] {
        return false;
    }
    for (i, &f) in facets.iter().enumerate() {
        if used & (1 << i) != 0 || !extends_shelling(order, f) {
            continue;
        }
        order.push(f);
        if shell_dfs(facets, used | (1 << i), order, dead, longest) {
            return true;
        }
        order.pop();
    }
    dead[used] = true;
    false
}
