use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use steinberg::constructions::{
    all_groupoids_up_to, cyclic_groupoid, disjoint_union, pair_groupoid, random_groupoid, random_principal, transitive,
    FiniteGroup,
};
use steinberg::ideal::{involution_image, is_ideal, left_ideal, right_multiplication_is_isomorphism, Side};
use steinberg::oracle::{oracle_is_semiprime, oracle_minimal_ideals, oracle_right_socle, oracle_socle};
use steinberg::socle::{corner_compress, normalize_generator, socle};
use steinberg::{FieldSpec, FiniteGroupoid, SteinbergAlgebra};

fn small_suite() -> Vec<FiniteGroupoid> {
    let mut out = all_groupoids_up_to(4);
    out.push(transitive(2, &FiniteGroup::cyclic(2)));
    out.push(disjoint_union(&[pair_groupoid(2), cyclic_groupoid(3)]));
    out
}

#[test]
fn oracle_ideals_compress_to_unit_corners() {
    for g in small_suite() {
        for p in [2, 3] {
            let field = FieldSpec::Prime(p);
            let alg = SteinbergAlgebra::new(&g, field);
            for m in oracle_minimal_ideals(&g, field).unwrap() {
                let b = &m.generator;
                let a = normalize_generator(&alg, b).unwrap();
                let ia = left_ideal(&alg, std::slice::from_ref(&a)).unwrap();
                assert!(ia.same_space(&m.ideal));
                let x = g
                    .units()
                    .iter()
                    .copied()
                    .find(|&u| !a.coeff(u).is_zero())
                    .expect("normalized generator meets a unit");
                let c = corner_compress(&alg, &a, x).unwrap();
                let ic = left_ideal(&alg, std::slice::from_ref(&c)).unwrap();
                assert_eq!(ic.dimension(), m.ideal.dimension());
                assert!(right_multiplication_is_isomorphism(
                    &alg,
                    m.ideal.basis(),
                    ic.basis(),
                    &alg.basis(x)
                ));
            }
        }
    }
}

#[test]
fn oracle_socle_is_self_adjoint_and_two_sided() {
    for g in small_suite() {
        for p in [2, 3] {
            let field = FieldSpec::Prime(p);
            let alg = SteinbergAlgebra::new(&g, field);
            let soc = oracle_socle(&g, field).unwrap();
            assert!(is_ideal(&alg, &soc.socle, Side::TwoSided));
            assert_eq!(involution_image(&alg, &soc.socle), soc.socle);
            if oracle_is_semiprime(&g, field).unwrap().semiprime {
                let right = oracle_right_socle(&g, field).unwrap();
                assert_eq!(involution_image(&alg, &soc.socle), right.socle);
                assert_eq!(right.socle, soc.socle);
            }
        }
    }
}

#[test]
fn principal_groupoids_are_semiprime_in_every_characteristic() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let g = random_principal(&mut rng, 10);
        for p in [2, 3] {
            assert!(oracle_is_semiprime(&g, FieldSpec::Prime(p)).unwrap().semiprime);
        }
    }
}

#[test]
fn engine_socle_is_independent_of_declaration_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let g = random_principal(&mut rng, 12);
        let mut raw = g.to_raw();
        steinberg::constructions::shuffle_declaration(&mut raw, &mut rng);
        let h = raw.validate().unwrap();
        let field = FieldSpec::Rationals;
        let (sg, sh) = (
            socle(&SteinbergAlgebra::new(&g, field)).unwrap(),
            socle(&SteinbergAlgebra::new(&h, field)).unwrap(),
        );
        let mut a = sg.matrix_sizes();
        let mut b = sh.matrix_sizes();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
        assert_eq!(sg.socle_dimension(), sh.socle_dimension());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_round_trip_is_bit_exact(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_groupoid(&mut rng, 20);
        let text = g.to_json();
        let back = FiniteGroupoid::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back.units().len(), g.units().len());
    }
}
