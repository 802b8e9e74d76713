use std::sync::OnceLock;

use proptest::prelude::*;

use yangian::cyclicity::{
    build_ordered_product, check_cyclicity, is_real_part_ordered, CyclicityMode, CyclicityTables,
    SSet, TensorFactor,
};
use yangian::exact::{
    power_sums_of_monic, power_sums_to_monic, rat, roots_affine_in_param, series_eq, AffineRoot,
    GaussianRational, ParamPoly, ParamSeries, PowerSums, Rational, UniPoly,
};
use yangian::reference::G2_WORD;
use yangian::root_system::{g2, ReducedWord};

fn g2_s_sets() -> &'static [SSet] {
    static TABLES: OnceLock<CyclicityTables> = OnceLock::new();
    &TABLES
        .get_or_init(|| CyclicityTables::compute(&g2(), &ReducedWord(G2_WORD.to_vec()), 8).unwrap())
        .s_sets
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn param_poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec(small_rational(), 0..=3).prop_map(ParamPoly::new)
}

fn affine_root() -> impl Strategy<Value = AffineRoot> {
    (
        prop::sample::select(vec![(1, 1), (1, 3), (1, 2), (2, 1)]),
        small_rational(),
    )
        .prop_map(|((n, d), b)| AffineRoot::new(rat(n, d), b))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-16i64..=16, -2i64..=2, 0u8..4).prop_map(|(re, im, z)| {
        let im = if z == 0 { rat(im, 3) } else { rat(0, 1) };
        GaussianRational::new(rat(re, 2), im)
    })
}

fn factor() -> impl Strategy<Value = TensorFactor> {
    (1usize..=2, gaussian()).prop_map(|(n, p)| TensorFactor::new(n, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exp_inverts_log(tail in prop::collection::vec(param_poly(), 5)) {
        let mut coeffs = vec![ParamPoly::one()];
        coeffs.extend(tail);
        let f = ParamSeries::new(5, coeffs);
        prop_assert!(series_eq(&f.log().unwrap().exp().unwrap(), &f));
    }

    #[test]
    fn log_inverts_exp(tail in prop::collection::vec(param_poly(), 5)) {
        let mut coeffs = vec![ParamPoly::zero()];
        coeffs.extend(tail);
        let g = ParamSeries::new(5, coeffs);
        prop_assert!(series_eq(&g.exp().unwrap().log().unwrap(), &g));
    }

    #[test]
    fn newton_round_trip(roots in prop::collection::vec(affine_root(), 0..=6)) {
        let polys: Vec<ParamPoly> = roots.iter().map(AffineRoot::to_poly).collect();
        let q = UniPoly::from_roots(&polys);
        let sums = PowerSums::of_roots(&polys, polys.len());
        prop_assert_eq!(power_sums_to_monic(&sums), q.clone());
        prop_assert_eq!(power_sums_of_monic(&q, polys.len()), sums);
    }

    #[test]
    fn affine_roots_are_recovered(roots in prop::collection::vec(affine_root(), 1..=6)) {
        let polys: Vec<ParamPoly> = roots.iter().map(AffineRoot::to_poly).collect();
        let q = UniPoly::from_roots(&polys);
        let found = roots_affine_in_param(&q).unwrap();
        let mut expected = roots.clone();
        expected.sort();
        prop_assert_eq!(&found, &expected);
        let back: Vec<ParamPoly> = found.iter().map(AffineRoot::to_poly).collect();
        prop_assert_eq!(UniPoly::from_roots(&back), q);
    }

    #[test]
    fn log_of_shifted_ratio(roots in prop::collection::vec(affine_root(), 1..=4), d in 1i64..=3) {
        let polys: Vec<ParamPoly> = roots.iter().map(AffineRoot::to_poly).collect();
        let q = UniPoly::from_roots(&polys);
        let order = 6;
        let log = ParamSeries::from_poly_ratio(&q.shift(&ParamPoly::from(-d)), &q, order)
            .unwrap()
            .log()
            .unwrap();
        let shift = ParamPoly::from(d);
        for k in 1..=order {
            let mut expected = ParamPoly::zero();
            for r in &polys {
                expected += &(&r.pow(k) - &(r + &shift).pow(k));
            }
            let expected = expected.scale(&rat(1, k as i64));
            prop_assert_eq!(log.coeff(k), &expected);
        }
    }

    #[test]
    fn cyclicity_ignores_common_shift(
        factors in prop::collection::vec(factor(), 0..=5),
        shift in gaussian(),
        irr in any::<bool>(),
    ) {
        let mode = if irr { CyclicityMode::Irreducible } else { CyclicityMode::HighestWeight };
        let shifted: Vec<TensorFactor> = factors
            .iter()
            .map(|f| TensorFactor::new(f.node, &f.param + &shift))
            .collect();
        let a = check_cyclicity(&factors, g2_s_sets(), 2, mode).unwrap();
        let b = check_cyclicity(&shifted, g2_s_sets(), 2, mode).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
        let pairs = |r: &yangian::cyclicity::CyclicityReport| {
            r.violations.iter().map(|v| (v.i, v.j)).collect::<Vec<_>>()
        };
        prop_assert_eq!(pairs(&a), pairs(&b));
    }

    #[test]
    fn ordering_ignores_input_permutation(
        (r1, p1) in prop::collection::vec(gaussian(), 0..=3).prop_flat_map(|v| {
            let n = v.len();
            (Just(v), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        }),
        (r2, p2) in prop::collection::vec(gaussian(), 0..=3).prop_flat_map(|v| {
            let n = v.len();
            (Just(v), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        }),
    ) {
        let permuted = |v: &[GaussianRational], p: &[usize]| -> Vec<GaussianRational> {
            p.iter().map(|&k| v[k].clone()).collect()
        };
        let a = build_ordered_product(&[r1.clone(), r2.clone()], g2_s_sets()).unwrap();
        let b = build_ordered_product(&[permuted(&r1, &p1), permuted(&r2, &p2)], g2_s_sets()).unwrap();
        prop_assert_eq!(a.factors, b.factors);
        prop_assert_eq!(a.report, b.report);
    }

    #[test]
    fn ordered_product_is_highest_weight(
        r1 in prop::collection::vec(gaussian(), 0..=3),
        r2 in prop::collection::vec(gaussian(), 0..=3),
    ) {
        let spec = build_ordered_product(&[r1.clone(), r2.clone()], g2_s_sets()).unwrap();
        prop_assert!(spec.report.passed());
        prop_assert!(is_real_part_ordered(&spec.factors));
        prop_assert_eq!(spec.lambda, vec![r1.len(), r2.len()]);
    }
}
