//! Fixed workloads shared by the criterion benches.

use ytc_core::{young_complex, Partition, PathIdealSpec, Result, SimplicialComplex};

/// Shapes with their `t`, from small to the largest the homology routines accept comfortably.
pub const SHAPES: [(&str, u32); 4] = [
    ("5,4,2", 3),
    ("3,3,3,3", 2),
    ("4,4,3,2,1", 2),
    ("6,5,4,3", 3),
];

/// `(n, t, k)` triples for the path-ideal workloads, all within the Hochster cap.
pub const POWERS: [(u32, u32, u32); 3] = [(9, 2, 3), (12, 3, 2), (14, 4, 3)];

pub fn shape(s: &str) -> Partition {
    s.parse().expect("fixture shapes are valid")
}

pub fn young(s: &str, t: u32) -> Result<SimplicialComplex> {
    young_complex(&shape(s), t)
}

pub fn power((n, t, k): (u32, u32, u32)) -> PathIdealSpec {
    PathIdealSpec::new(n, t, k).expect("fixture powers are valid")
}
