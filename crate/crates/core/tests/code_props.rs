mod support;

use std::collections::BTreeSet;

use orecodec_core::codes::{
    all_subspaces, dual_context, find_equivalence, is_sequential, left_shift, reversed_modulus, right_shift,
    weight_profile, SequentialVariant, DEFAULT_ENUM_LIMIT,
};
use orecodec_core::plt::{companion, CompanionKind};
use orecodec_core::poly::{all_monic, all_polys_below, conjugacy_class};
use orecodec_core::spectral::in_idealizer_x;
use orecodec_core::wedderburn::{diagonalization_witness, is_wedderburn, is_wedderburn_exhaustive};
use orecodec_core::{Decomposition, Felt, FieldCtx, LinearCode, OrePoly, PolycyclicCode, Side, SkewMatrix, WedderburnData};
use proptest::prelude::*;
use support::*;

fn right_divisors(f: &OrePoly) -> Vec<OrePoly> {
    (0..=f.degree().unwrap())
        .flat_map(|d| all_monic(f.ctx(), d))
        .filter(|g| g.right_divides(f).unwrap())
        .collect()
}

#[test]
fn invariant_subspaces_are_exactly_the_generated_codes() {
    for c in contexts("gf(4)") {
        let subspaces = all_subspaces(&c, 2);
        for f in all_monic(&c, 2) {
            let generated: BTreeSet<_> = right_divisors(&f)
                .iter()
                .map(|g| PolycyclicCode::from_generator(&f, g, Side::Right).unwrap().code().to_indices())
                .collect();
            let cf = companion(&f, CompanionKind::C).unwrap();
            let invariant: BTreeSet<_> = subspaces
                .iter()
                .filter(|s| s.is_invariant(&cf).unwrap())
                .map(LinearCode::to_indices)
                .collect();
            assert_eq!(generated, invariant, "{} f={f:?}", label(&c));
        }
    }
}

#[test]
fn left_codes_mirror_right_codes() {
    // C·P is invariant under E_d when C is a right code of f and d is the
    // reversed modulus
    for c in contexts("gf(4)") {
        for f in all_monic(&c, 3) {
            let d = reversed_modulus(&f).unwrap();
            let ed = companion(&d, CompanionKind::E).unwrap();
            let p = SkewMatrix::anti_identity(&c, 3);
            for g in right_divisors(&f) {
                let right = PolycyclicCode::from_generator(&f, &g, Side::Right).unwrap();
                let mirrored = right.code().map_right(&p).unwrap();
                assert!(mirrored.is_invariant(&ed).unwrap(), "{} f={f:?} g={g:?}", label(&c));
                let left = PolycyclicCode::from_generator(&d, &g, Side::Left).unwrap();
                assert_eq!(left.code(), &mirrored);
            }
        }
    }
}

#[test]
fn shifts_match_matrix_forms() {
    for c in contexts("gf(4)") {
        for f in all_monic(&c, 3) {
            let cf = companion_rows(&f);
            let ef = companion(&f, CompanionKind::E).unwrap().rows().to_vec();
            for v in vectors(&c, 3) {
                assert_eq!(right_shift(&f, &v).unwrap(), t_matrix(&c, &cf, &v));
                assert_eq!(left_shift(&f, &v).unwrap(), t_matrix(&c, &ef, &v));
            }
        }
    }
}

#[test]
fn euclidean_duals_are_sequential_in_the_dual_context() {
    for c in contexts("gf(8)") {
        let dctx = dual_context(&c);
        for f in all_monic(&c, 2) {
            let f_dual = f.map_coeffs(&dctx, |a| c.sigma_inv(a));
            for g in right_divisors(&f) {
                let code = PolycyclicCode::from_generator(&f, &g, Side::Right).unwrap();
                let dual = LinearCode::span(&dctx, 2, code.code().dual().basis()).unwrap();
                assert!(is_sequential(&dual, &f_dual, Side::Right, SequentialVariant::Standard).unwrap());
                assert_eq!(code.code().dual().dual(), *code.code());
            }
        }
    }
}

#[test]
fn idealizer_hypothesis_needs_two_sidedness() {
    // x lies in the idealizer of S(x^2 + x), 1 is a root, but its conjugate w
    // is not
    let c = ctx("gf(4)", 1, 0);
    let f = poly(&c, &[0, 1, 1]);
    assert!(in_idealizer_x(&f).unwrap());
    assert!(f.eval(Felt::ONE).is_zero());
    assert!(!f.eval(Felt::from_index_unchecked(2)).is_zero());

    // with f·a ∈ Sf for every scalar as well, roots are closed under
    // conjugation
    for spec in ["gf(4)", "gf(8)"] {
        for c in contexts(spec) {
            for n in 1..=2 {
                for f in all_monic(&c, n) {
                    let two_sided = in_idealizer_x(&f).unwrap()
                        && c.elements().all(|a| (&f * &OrePoly::constant(&c, a)).rem(&f).unwrap().is_zero());
                    if !two_sided {
                        continue;
                    }
                    for a in f.right_roots() {
                        for b in conjugacy_class(&c, a) {
                            assert!(f.eval(b).is_zero(), "{} f={f:?} a={a} b={b}", label(&c));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn wedderburn_criteria_agree_over_gf8() {
    for c in contexts("gf(8)") {
        for n in 1..=2 {
            for f in all_monic(&c, n) {
                let greedy = is_wedderburn(&f).unwrap();
                assert_eq!(greedy, is_wedderburn_exhaustive(&f).unwrap());
                assert_eq!(greedy.is_some(), diagonalization_witness(&f).unwrap().is_some(), "{f:?}");
            }
        }
    }
}

#[test]
fn decomposition_projections_over_all_gf4_contexts() {
    let mut decomposed = 0;
    for c in contexts("gf(4)") {
        for f in all_monic(&c, 2) {
            let Some(w) = WedderburnData::from_modulus(&f).unwrap() else {
                continue;
            };
            let Ok(d) = Decomposition::new(&w) else {
                continue;
            };
            for v in vectors(&c, 2) {
                let parts: Vec<Vec<Felt>> = (0..2).map(|i| d.project(i, &v).unwrap()).collect();
                for (i, part) in parts.iter().enumerate() {
                    assert!(d.space(i).contains(part));
                    // E_i is idempotent and each space is closed under T
                    assert_eq!(&d.project(i, part).unwrap(), part);
                    assert!(d.space(i).contains(&d.plt().apply(part).unwrap()));
                }
                let sum: Vec<Felt> = (0..2).map(|k| c.add(parts[0][k], parts[1][k])).collect();
                assert_eq!(sum, v);
            }
            for g in right_divisors(&f) {
                let code = PolycyclicCode::from_generator(&f, &g, Side::Right).unwrap();
                let comps = d.decompose_code(&code).unwrap();
                let rebuilt = comps.iter().fold(LinearCode::zero(&c, 2), |acc, x| acc.sum(x).unwrap());
                assert_eq!(rebuilt, *code.code());
            }
            decomposed += 1;
        }
    }
    assert!(decomposed > 0);
}

fn arb_gf4_ctx() -> impl Strategy<Value = FieldCtx> {
    (0usize..5).prop_map(|i| contexts("gf(4)")[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn equivalence_preserves_weights(
        (c, a, b) in arb_gf4_ctx().prop_flat_map(|c| (Just(c), 0u64..16, 0u64..16))
    ) {
        let f1 = all_monic(&c, 2).nth(a as usize).unwrap();
        let f2 = all_monic(&c, 2).nth(b as usize).unwrap();
        if let Some(b) = find_equivalence(&f1, &f2, false).unwrap() {
            let c2 = companion(&f2, CompanionKind::C).unwrap();
            for g in right_divisors(&f1) {
                let code = PolycyclicCode::from_generator(&f1, &g, Side::Right).unwrap();
                let image = code.code().map_right(&b).unwrap();
                prop_assert!(image.is_invariant(&c2).unwrap());
                prop_assert_eq!(
                    weight_profile(code.code(), DEFAULT_ENUM_LIMIT).unwrap(),
                    weight_profile(&image, DEFAULT_ENUM_LIMIT).unwrap()
                );
            }
        }
    }

    #[test]
    fn ms_module_law_over_gf8(
        (c, fi, g, h) in (0usize..17).prop_flat_map(|i| {
            let c = contexts("gf(8)")[i].clone();
            (Just(c.clone()), 0usize..64, 0u64..512, 0u64..64)
        })
    ) {
        let f = all_monic(&c, 2).nth(fi).unwrap();
        if let Some(w) = WedderburnData::from_modulus(&f).unwrap() {
            let g = all_polys_below(&c, 3).nth(g as usize).unwrap();
            let h = all_polys_below(&c, 2).nth(h as usize).unwrap();
            let lhs = w.ms_transform(&(&g * &h)).unwrap();
            prop_assert_eq!(lhs, w.module_action(&g, &w.ms_transform(&h).unwrap()).unwrap());
            prop_assert_eq!(w.ms_inverse(&w.ms_transform(&h).unwrap()).unwrap(), h);
        }
    }

    #[test]
    fn dual_of_sum_is_intersection_of_duals(
        (c, r1, r2) in arb_gf4_ctx().prop_flat_map(|c| {
            let v = prop::collection::vec(prop::collection::vec(0u32..4, 3), 0..3);
            (Just(c), v.clone(), v)
        })
    ) {
        let mk = |rows: &[Vec<u32>]| {
            let rows: Vec<Vec<Felt>> = rows.iter().map(|r| felts(r)).collect();
            LinearCode::span(&c, 3, &rows).unwrap()
        };
        let (a, b) = (mk(&r1), mk(&r2));
        prop_assert_eq!(a.sum(&b).unwrap().dual(), a.dual().intersection(&b.dual()).unwrap());
        prop_assert_eq!(a.dim() + a.dual().dim(), 3);
    }
}
