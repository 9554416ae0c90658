mod common;

use proptest::prelude::*;
use ytc_core::homology::FieldTag;
use ytc_core::*;

/// A complex on vertices `1..=n` generated by up to five random faces.
fn arb_complex(n: u32) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(1u64..(1 << n), 1..6).prop_map(|masks| {
        SimplicialComplex::from_facets(masks.into_iter().map(|m| Face::from_mask(m << 1)))
    })
}

/// A pure complex of the given facet size on `1..=n`.
fn arb_pure(n: u32, size: u32) -> impl Strategy<Value = SimplicialComplex> {
    let candidates: Vec<u64> = common::subsets(((1u64 << n) - 1) << 1)
        .into_iter()
        .filter(|s| s.count_ones() == size)
        .collect();
    prop::sample::subsequence(candidates.clone(), 1..=6.min(candidates.len()))
        .prop_map(|masks| SimplicialComplex::from_facets(masks.into_iter().map(Face::from_mask)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn betti_matches_brute_force(delta in arb_complex(7)) {
        let ours = reduced_betti(&delta, FieldTag::Rationals).unwrap();
        prop_assert_eq!(ours.as_map(), &common::betti(&delta));
    }

    #[test]
    fn euler_poincare_both_fields(delta in arb_complex(8)) {
        for field in [FieldTag::Rationals, FieldTag::Gf2] {
            let b = reduced_betti(&delta, field).unwrap();
            prop_assert_eq!(b.euler_characteristic(), delta.reduced_euler_characteristic());
        }
    }

    #[test]
    fn faces_match_brute_force(delta in arb_complex(8)) {
        let mut oracle = common::faces(&delta);
        oracle.sort_unstable();
        let mut ours: Vec<u64> = delta.faces().iter().map(|f| f.mask()).collect();
        ours.sort_unstable();
        prop_assert_eq!(ours, oracle);
    }

    #[test]
    fn alexander_duality_is_an_involution(delta in arb_complex(7)) {
        let u = Face::range(1, 8).unwrap();
        let back = delta.alexander_dual(u).unwrap().alexander_dual(u).unwrap();
        prop_assert_eq!(back, delta);
    }

    #[test]
    fn minimal_nonfaces_match_brute_force(delta in arb_complex(7)) {
        let u = Face::range(1, 8).unwrap();
        let mut oracle = common::minimal_nonfaces(&delta, u);
        oracle.sort_unstable();
        let mut ours: Vec<u64> = delta.minimal_nonfaces(u).unwrap().iter().map(|f| f.mask()).collect();
        ours.sort_unstable();
        prop_assert_eq!(ours, oracle);
    }

    #[test]
    fn hochster_matches_brute_force(delta in arb_complex(6)) {
        let u = Face::range(1, 6).unwrap();
        prop_assert_eq!(pd_oracle(&delta, u).unwrap(), common::pd(&delta, u));
        prop_assert_eq!(regularity_oracle(&delta, u).unwrap(), common::regularity(&delta, u));
        prop_assert_eq!(leray_oracle(&delta, u).unwrap(), common::leray(&delta));
    }

    #[test]
    fn decomposability_chain(delta in arb_pure(6, 3)) {
        let vd = is_vertex_decomposable(&delta).unwrap();
        let shell = is_shellable(&delta).unwrap();
        prop_assert_eq!(vd.replay(&delta), vd.verdict);
        prop_assert_eq!(shell.replay(&delta), shell.verdict);
        if vd.verdict {
            prop_assert!(shell.verdict);
        }
        let cm_q = is_cohen_macaulay(&delta, FieldTag::Rationals).unwrap();
        let cm_2 = is_cohen_macaulay(&delta, FieldTag::Gf2).unwrap();
        if shell.verdict {
            prop_assert!(cm_q && cm_2);
        }
    }

    #[test]
    fn link_and_deletion_by_definition(delta in arb_complex(7), v in 1u32..8) {
        prop_assume!(delta.vertex_set().contains(v));
        let all = common::faces(&delta);
        let bit = 1u64 << v;
        let mut link: Vec<u64> = all.iter().copied()
            .filter(|f| f & bit == 0 && all.contains(&(f | bit))).collect();
        link.sort_unstable();
        let mut ours: Vec<u64> = delta.link(Face::new([v]).unwrap()).unwrap().faces().iter().map(|f| f.mask()).collect();
        ours.sort_unstable();
        prop_assert_eq!(ours, link);
        let mut del: Vec<u64> = all.iter().copied().filter(|f| f & bit == 0).collect();
        del.sort_unstable();
        let mut ours: Vec<u64> = delta.deletion(v).unwrap().faces().iter().map(|f| f.mask()).collect();
        ours.sort_unstable();
        prop_assert_eq!(ours, del);
    }

    #[test]
    fn young_complex_json_round_trip(parts in prop::collection::vec(1u32..5, 1..4), t in 1u32..4) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let delta = young_complex(&Partition::new(parts).unwrap(), t).unwrap();
        let json = serde_json::to_string(&delta).unwrap();
        prop_assert_eq!(serde_json::from_str::<SimplicialComplex>(&json).unwrap(), delta);
    }
}

#[test]
fn young_homotopy_matches_brute_force_homology() {
    for lambda in Partition::all_up_to(9) {
        for t in 1..=3 {
            let delta = young_complex(&lambda, t).unwrap();
            let expected = young_homotopy(&lambda, t).unwrap();
            let oracle = common::nonzero(&common::betti(&delta));
            assert_eq!(&oracle, expected.as_map(), "{lambda:?} t={t}");
        }
    }
}

#[test]
fn field_comparison_on_young_complexes() {
    for lambda in Partition::all_up_to(10) {
        for t in 1..=4 {
            let delta = young_complex(&lambda, t).unwrap();
            assert_eq!(
                reduced_betti(&delta, FieldTag::Rationals).unwrap(),
                reduced_betti(&delta, FieldTag::Gf2).unwrap(),
                "{lambda:?} t={t}"
            );
        }
    }
}

#[test]
fn nonvanishing_homology_degrees() {
    for t in 1..=4u32 {
        for k in 1..=4u32 {
            for n in k * t..=16 {
                let h = dual_homotopy(n, k, t).unwrap();
                let r = if n <= k * (t + 1) {
                    Some(n as i32 - (k * t) as i32 - 1)
                } else if n % (t + 1) == 0 {
                    Some((2 * n / (t + 1)) as i32 - k as i32 - 1)
                } else if n % (t + 1) == t {
                    Some((2 * (n + 1) / (t + 1)) as i32 - k as i32 - 2)
                } else {
                    None
                };
                if let Some(r) = r {
                    assert!(h.multiplicity(r) > 0, "n={n} k={k} t={t} r={r} {h}");
                }
                if t >= 2 && k <= n / t {
                    // in the residue case d ∈ [1, t−1] the witness lives on n − d vertices
                    let d = n % (t + 1);
                    let m = if n > k * (t + 1) && d < t { n - d } else { n };
                    let witness = dual_homotopy(m, k, t).unwrap();
                    let pd = pd_formula(n, k, t).unwrap() as i32;
                    assert!(
                        witness.multiplicity(pd - 2) > 0,
                        "n={n} k={k} t={t} {witness}"
                    );
                }
                let l = n - k * t;
                if l > t && l <= k && k > t {
                    assert!(h.multiplicity(l as i32 - 1) > 0, "n={n} k={k} t={t}");
                }
            }
        }
    }
}

#[test]
fn krull_formula_on_small_instances() {
    for n in 1..=12u32 {
        for t in 1..=4 {
            for k in 1..=n / t {
                let spec = PathIdealSpec::new(n, t, k).unwrap();
                assert_eq!(
                    krull_height_oracle(spec).unwrap().dim,
                    krull_formula(n, k, t).unwrap(),
                    "n={n} t={t} k={k}"
                );
            }
        }
    }
}

#[test]
fn helly_numbers_for_small_shapes() {
    for lambda in Partition::all_up_to(8) {
        for t in 1..=3 {
            let delta = young_complex(&lambda, t).unwrap();
            let u = Face::range(1, (lambda.len() as u32 - 1) * t + lambda.part(1)).unwrap();
            if u.len() > 14 {
                continue;
            }
            let dual = delta.alexander_dual(u).unwrap();
            let oracle = common::minimal_nonfaces(&dual, u)
                .iter()
                .map(|m| m.count_ones() as i64 - 1)
                .max()
                .unwrap();
            assert_eq!(
                oracle,
                helly_formula(&lambda, t).unwrap(),
                "{lambda:?} t={t}"
            );
        }
    }
}
