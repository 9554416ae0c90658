//! Transversals (hitting sets) of hypergraphs whose edges are vertex bitmasks.

/// All inclusion-minimal transversals, by Berge's incremental algorithm.
///
/// Returns no transversal at all when some edge is empty, and the single
/// empty transversal when there are no edges.
pub fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    if edges.contains(&0) {
        return Vec::new();
    }
    let mut edges = minimal_edges(edges);
    edges.sort_unstable_by_key(|e| e.count_ones());

    let mut current = vec![0u64];
    for &edge in &edges {
        let (hit, missed): (Vec<u64>, Vec<u64>) = current.into_iter().partition(|&t| t & edge != 0);
        let mut next = hit.clone();
        for t in missed {
            let mut rest = edge;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let candidate = t | bit;
                // A smaller transversal inside `candidate` can only come from `hit`.
                if !hit.iter().any(|&h| h & !candidate == 0) {
                    next.push(candidate);
                }
            }
        }
        current = next;
    }
    current.sort_unstable();
    current
}

/// Drop edges that contain another edge; transversals are unaffected.
fn minimal_edges(edges: &[u64]) -> Vec<u64> {
    let mut sorted: Vec<u64> = edges.to_vec();
    sorted.sort_unstable_by_key(|e| e.count_ones());
    sorted.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sorted.len());
    for e in sorted {
        if !kept.iter().any(|&k| k & !e == 0) {
            kept.push(e);
        }
    }
    kept
}

/// A transversal of minimum cardinality, by branch and bound.
///
/// `None` when an empty edge makes the hypergraph untransversable.
pub fn minimum_transversal(edges: &[u64]) -> Option<u64> {
    if edges.contains(&0) {
        return None;
    }
    let edges = minimal_edges(edges);
    let mut search = MinSearch {
        edges: &edges,
        best: greedy_transversal(&edges),
    };
    search.branch(0, 0);
    Some(search.best)
}

fn greedy_transversal(edges: &[u64]) -> u64 {
    let mut chosen = 0u64;
    loop {
        let open: Vec<u64> = edges.iter().copied().filter(|&e| e & chosen == 0).collect();
        if open.is_empty() {
            return chosen;
        }
        let mut degree = [0u32; 64];
        for e in &open {
            let mut rest = *e;
            while rest != 0 {
                degree[rest.trailing_zeros() as usize] += 1;
                rest &= rest - 1;
            }
        }
        let v = (0..64)
            .max_by_key(|&v| (degree[v], std::cmp::Reverse(v)))
            .unwrap();
        chosen |= 1 << v;
    }
}

struct MinSearch<'a> {
    edges: &'a [u64],
    best: u64,
}

impl MinSearch<'_> {
    fn branch(&mut self, chosen: u64, forbidden: u64) {
        let open: Vec<u64> = self
            .edges
            .iter()
            .copied()
            .filter(|&e| e & chosen == 0)
            .collect();
        if open.is_empty() {
            if chosen.count_ones() < self.best.count_ones() {
                self.best = chosen;
            }
            return;
        }
        // Pairwise disjoint open edges each need their own vertex.
        let mut packing = 0u32;
        let mut used = 0u64;
        for e in &open {
            let usable = e & !forbidden;
            if usable == 0 {
                return;
            }
            if usable & used == 0 {
                used |= usable;
                packing += 1;
            }
        }
        if chosen.count_ones() + packing >= self.best.count_ones() {
            return;
        }
        let edge = open
            .iter()
            .map(|e| e & !forbidden)
            .min_by_key(|e| e.count_ones())
            .unwrap();
        let mut excluded = forbidden;
        let mut rest = edge;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            self.branch(chosen | bit, excluded);
            excluded |= bit;
        }
    }
}
