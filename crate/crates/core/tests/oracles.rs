mod common;

use common::checks::*;
use common::*;
use evcodes::evalcode::{EvaluationCode, DEFAULT_BUDGET};
use evcodes::invariants::v_numbers;
use evcodes::{GaloisField, MonomialOrder, VanishingIdeal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXAMPLES: &[&[&[i64]]] = &[
    &[
        &[1, 1, 1],
        &[1, 1, -1],
        &[0, 0, 0],
        &[0, 0, 1],
        &[0, 0, -1],
        &[0, 1, 0],
        &[0, 1, 1],
        &[0, 1, -1],
    ],
    &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 0, 0], &[2, 2, 2]],
    &[
        &[1, 1, -1],
        &[0, 0, 0],
        &[0, 0, 1],
        &[0, 0, -1],
        &[0, 1, 0],
        &[0, 1, 1],
        &[0, 1, -1],
    ],
    &[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[0, -1]],
];

#[test]
fn buchberger_moller_matches_buchberger() {
    let k = gf(3);
    for pts in EXAMPLES {
        assert_eq!(check_bm_oracle(&ideal(&k, pts)), Ok(()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let v = random_ideal(&mut rng, 8);
        assert_eq!(check_bm_oracle(&v), Ok(()), "{:?}", v.points());
    }
    let lex = VanishingIdeal::new(points(&k, EXAMPLES[1]), MonomialOrder::Lex).unwrap();
    assert_eq!(check_bm_oracle(&lex), Ok(()));
}

#[test]
fn indicator_degrees_by_search() {
    let k = gf(3);
    for pts in &EXAMPLES[1..] {
        let v = ideal(&k, pts);
        if v.len() <= 6 {
            assert_eq!(check_indicator_search(&v), Ok(()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let v = random_ideal(&mut rng, 6);
        assert_eq!(check_indicator_search(&v), Ok(()));
    }
}

#[test]
fn colon_ideal_v_numbers() {
    let k = gf(3);
    for v in [
        ideal(&k, EXAMPLES[1]),
        ideal(&k, EXAMPLES[3]),
        ideal(&k, &[&[0], &[1]]),
    ] {
        let vn = v_numbers(&v).unwrap();
        let colon: Vec<u32> = (0..v.len()).map(|i| colon_alpha(&v, i)).collect();
        assert_eq!(vn.local, colon);
    }
}

#[test]
fn basis_algorithm_against_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let v = random_ideal(&mut rng, 9);
        let mut space = random_space(&mut rng, v.ring());
        if rng.gen_bool(0.3) && !space.is_empty() {
            space.push(space[0].clone());
        }
        assert_eq!(check_basis_rank(v.ring(), &space), Ok(()));
    }
    let ring = evcodes::Ring::new(gf(3), 2, MonomialOrder::Grevlex);
    let basis = evcodes::linalg::basis_algorithm(&ring, &polys(&ring, &["t1", "t1", "t1+t2"]));
    let lms: Vec<String> = basis
        .iter()
        .map(|f| f.leading_monomial().unwrap().to_string())
        .collect();
    assert_eq!(lms, ["t1", "t2"]);
}

#[test]
fn min_distance_against_naive_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..25 {
        let v = random_ideal(&mut rng, 9);
        for d in 0..=v.r0() as i64 {
            let c = EvaluationCode::reed_muller(&v, d).unwrap();
            assert_eq!(
                c.code().min_distance(DEFAULT_BUDGET).unwrap(),
                min_distance_naive(c.code())
            );
            let dual = c.code().dual();
            if dual.dim() > 0 {
                assert_eq!(
                    dual.min_distance(DEFAULT_BUDGET).unwrap(),
                    min_distance_naive(&dual)
                );
            }
        }
    }
}

#[test]
fn interpolated_dual_against_linear_system() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..40 {
        let (v, space) = random_instance(&mut rng);
        let direct = algebraic_dual_direct(&v, &space);
        let dual = evcodes::duality::algebraic_dual(&v, &space).unwrap();
        assert!(same_space(&v, &dual, &direct));
    }
}

#[test]
fn gf4_field_is_representation_independent() {
    let a = GaloisField::new(2, 2, None).unwrap();
    assert_eq!(a.modulus(), &[1, 1, 1]);
    let x = evcodes::families::CartesianSpec::full_space(a, 2).unwrap();
    assert_eq!(
        check_bm_oracle(&x.vanishing_ideal(MonomialOrder::Grevlex).unwrap()),
        Ok(())
    );
}
