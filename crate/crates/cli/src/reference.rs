//! Published worked values replayed by `verify` and the acceptance gate.

/// Facets of `Δ_3^{(5,4,2)}` in canonical order.
pub const YOUNG_542_T3_FACETS: [[u32; 5]; 12] = [
    [1, 2, 6, 7, 11],
    [1, 2, 6, 10, 11],
    [1, 2, 9, 10, 11],
    [1, 5, 6, 7, 11],
    [1, 5, 6, 10, 11],
    [1, 5, 9, 10, 11],
    [1, 8, 9, 10, 11],
    [4, 5, 6, 7, 11],
    [4, 5, 6, 10, 11],
    [4, 5, 9, 10, 11],
    [4, 8, 9, 10, 11],
    [7, 8, 9, 10, 11],
];

/// `Δ_{9,2}^{[3]} ≃ S^2 ∨ S^1 ∨ S^1 ∨ S^1`, as (dimension, multiplicity).
pub const DUAL_9_3_2_SPHERES: [(i32, u64); 2] = [(1, 3), (2, 1)];

/// `(from, to, label)` with vertices written `(m, j)`.
pub type LabelledEdge = ((u32, u32), (u32, u32), u32);

/// Labelled edges of the reduction graph for `(n,k,t) = (9,3,2)`.
pub const GRAPH_9_3_2_EDGES: [LabelledEdge; 9] = [
    ((9, 3), (6, 3), 2),
    ((9, 3), (6, 2), 1),
    ((9, 3), (7, 2), 0),
    ((7, 2), (4, 2), 2),
    ((7, 2), (4, 1), 1),
    ((7, 2), (5, 1), 0),
    ((5, 1), (2, 1), 2),
    ((5, 1), (2, 0), 1),
    ((5, 1), (3, 0), 0),
];

/// Leaf path counts `N(m, j, α)` for the same graph, all equal to one.
pub const GRAPH_9_3_2_PATH_COUNTS: [((u32, u32), u32, u64); 5] = [
    ((6, 3), 2, 1),
    ((6, 2), 1, 1),
    ((4, 2), 2, 1),
    ((4, 1), 1, 1),
    ((2, 1), 2, 1),
];

/// A table of a closed form evaluated along `n` with `k` and `t` fixed.
#[derive(Clone, Copy, Debug)]
pub struct Table {
    pub name: &'static str,
    pub k: u32,
    pub t: u32,
    pub first_n: u32,
    pub values: &'static [u32],
}

impl Table {
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (self.first_n..).zip(self.values.iter().copied())
    }
}

/// `pd(R/I_{n,4}^{[3]})` for `12 ≤ n ≤ 29`.
pub const PD_K3_T4: Table = Table {
    name: "pd k=3 t=4",
    k: 3,
    t: 4,
    first_n: 12,
    values: &[1, 2, 3, 4, 4, 4, 4, 5, 6, 6, 6, 6, 7, 8, 8, 8, 8, 9],
};

/// `pd(R/I_{n,3}^{[4]})` for `12 ≤ n ≤ 27`.
pub const PD_K4_T3: Table = Table {
    name: "pd k=4 t=3",
    k: 4,
    t: 3,
    first_n: 12,
    values: &[1, 2, 3, 4, 5, 5, 5, 6, 7, 7, 7, 8, 9, 9, 9, 10],
};

/// `dim(R/I_{n,2}^{[2]})` for `4 ≤ n ≤ 19`.
pub const DIM_K2_T2: Table = Table {
    name: "dim k=2 t=2",
    k: 2,
    t: 2,
    first_n: 4,
    values: &[3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10, 10, 11],
};

/// `dim(R/I_{n,5}^{[3]})` for `15 ≤ n ≤ 29`.
pub const DIM_K3_T5: Table = Table {
    name: "dim k=3 t=5",
    k: 3,
    t: 5,
    first_n: 15,
    values: &[14, 15, 16, 17, 18, 18, 19, 20, 21, 22, 22, 23, 24, 25, 26],
};

pub const PD_TABLES: [Table; 2] = [PD_K3_T4, PD_K4_T3];
pub const DIM_TABLES: [Table; 2] = [DIM_K2_T2, DIM_K3_T5];
