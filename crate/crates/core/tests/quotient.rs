use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wgalg::arith::Rational;
use wgalg::coxeter::{build_system, TypeTag};
use wgalg::omega::{compute_quotient, radical, AlgebraElement, QuotientAlgebra, QuotientOptions, RelatorSource};

type El = AlgebraElement<Rational>;

fn quotient(t: TypeTag, relators: RelatorSource) -> QuotientAlgebra {
    let opts = QuotientOptions { relators, ..QuotientOptions::default() };
    compute_quotient(&build_system(t).unwrap(), &opts).unwrap()
}

fn a3() -> &'static QuotientAlgebra {
    static ALG: OnceLock<QuotientAlgebra> = OnceLock::new();
    ALG.get_or_init(|| quotient(TypeTag::A3, RelatorSource::AlphaBeta))
}

fn random_element(alg: &QuotientAlgebra, rng: &mut ChaCha8Rng, terms: usize) -> El {
    let mut u = El::zero();
    for _ in 0..terms {
        let w = rng.gen_range(0..alg.dim() as u32);
        let c = Rational::from_int(rng.gen_range(-3..=3));
        u = u.add(&El::basis(w).scale(&c));
    }
    u
}

#[test]
fn both_presentations_give_the_same_dimension() {
    for t in [TypeTag::I2(3), TypeTag::I2(4), TypeTag::I2(5), TypeTag::I2(6), TypeTag::A3] {
        let ab = quotient(t, RelatorSource::AlphaBeta);
        let def = quotient(t, RelatorSource::Definitional);
        assert_eq!(ab.dim(), def.dim(), "{t}");
        let (r1, r2) = (radical(&ab, None).unwrap(), radical(&def, None).unwrap());
        assert_eq!(r1.dim_semisimple, r2.dim_semisimple, "{t}");
    }
}

#[test]
fn dihedral_dimensions_grow_by_seven() {
    let dims: Vec<usize> = (3..=8).map(|m| quotient(TypeTag::I2(m), RelatorSource::AlphaBeta).dim()).collect();
    assert_eq!(dims, vec![17, 24, 31, 38, 45, 52]);
}

#[test]
fn product_is_associative_on_random_elements() {
    let alg = a3();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let (a, b, c) = (random_element(alg, &mut rng, 4), random_element(alg, &mut rng, 4), random_element(alg, &mut rng, 4));
        assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
    }
}

#[test]
fn unit_is_two_sided() {
    let alg = a3();
    let one = alg.unit::<Rational>();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let a = random_element(alg, &mut rng, 6);
        assert_eq!(alg.mul(&one, &a), a);
        assert_eq!(alg.mul(&a, &one), a);
    }
}

#[test]
fn delta_reverses_products_and_squares_to_the_identity() {
    let alg = a3();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..20 {
        let (a, b) = (random_element(alg, &mut rng, 5), random_element(alg, &mut rng, 5));
        assert_eq!(alg.delta(&alg.delta(&a)), a);
        assert_eq!(alg.delta(&alg.mul(&a, &b)), alg.mul(&alg.delta(&b), &alg.delta(&a)));
    }
}

#[test]
fn diagram_flip_of_a3_is_an_automorphism() {
    let alg = a3();
    let flip = [2, 1, 0];
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..20 {
        let (a, b) = (random_element(alg, &mut rng, 5), random_element(alg, &mut rng, 5));
        let fa = alg.automorphism(&flip, &a).unwrap();
        let fb = alg.automorphism(&flip, &b).unwrap();
        assert_eq!(alg.automorphism(&flip, &alg.mul(&a, &b)).unwrap(), alg.mul(&fa, &fb));
    }
}

#[test]
fn a_tiny_length_bound_is_reported() {
    let opts = QuotientOptions { max_length: 2, ..QuotientOptions::default() };
    assert!(compute_quotient(&build_system(TypeTag::A3).unwrap(), &opts).is_err());
}
