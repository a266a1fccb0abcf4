use coxdescent::groebner::{groebner_basis, is_groebner_basis};
use coxdescent::sample::{random_form, random_nonzero_scalar};
use coxdescent::{CoxAmbient, FieldTower, Ideal, Monomial, Multidegree, Polynomial};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

fn p1p1(p: u64) -> CoxAmbient {
    CoxAmbient::product_projective(&[1, 1], Arc::new(FieldTower::prime(p).unwrap())).unwrap()
}

fn bidegree_monomials(a: u16, b: u16) -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in 0..=a {
        for j in 0..=b {
            out.push(Monomial::from_exponents(&[i, a - i, j, b - j]));
        }
    }
    out
}

#[test]
fn saturation_matches_intersection_of_lines() {
    // (x0y0, x1y1) : G^oo = (x0, y1) ∩ (x1, y0), a monomial ideal
    let amb = p1p1(101);
    let ideal = amb.ideal(&amb.parse_all(&["x0*y0", "x1*y1"]).unwrap()).unwrap();
    let sat = amb.subscheme_ideal(&ideal).unwrap();
    for a in 0..=3 {
        for b in 0..=3 {
            for m in bidegree_monomials(a, b) {
                let e = m.exponents();
                let expected = (e[0] > 0 || e[3] > 0) && (e[1] > 0 || e[2] > 0);
                let f = Polynomial::term(amb.poly_ring(), m.clone(), coxdescent::Fq::ONE);
                assert_eq!(sat.contains(&f).unwrap(), expected, "{f}");
            }
        }
    }
}

#[test]
fn linear_relations_in_the_standard_grading() {
    let tower = Arc::new(FieldTower::prime(101).unwrap());
    let amb = CoxAmbient::product_projective(&[3], tower).unwrap();
    let ideal = amb.ideal(&amb.parse_all(&["x0", "x0+x2"]).unwrap()).unwrap();
    let gb: Vec<String> = ideal.gb().iter().map(|g| g.to_string()).collect();
    assert_eq!(gb, ["x0", "x2"]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduced_basis_ignores_generator_presentation(seed in any::<u64>()) {
        let amb = p1p1(31);
        let ring = amb.poly_ring();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let degrees = [Multidegree(vec![1, 1]), Multidegree(vec![2, 0]), Multidegree(vec![1, 2])];
        let mut gens: Vec<Polynomial> = degrees.iter().map(|d| random_form(&mut rng, ring, d).unwrap()).collect();
        let gb = groebner_basis(&gens);
        prop_assert!(is_groebner_basis(&gb));
        gens.shuffle(&mut rng);
        let scaled: Vec<Polynomial> =
            gens.iter().map(|g| g.scale(random_nonzero_scalar(&mut rng, ring.tower()))).collect();
        prop_assert_eq!(groebner_basis(&scaled), gb.clone());
        // adding a redundant combination changes nothing
        let extra = &(&gens[0] * &random_form(&mut rng, ring, &Multidegree(vec![0, 1])).unwrap())
            + &gens[2];
        let mut more = gens.clone();
        more.push(extra);
        prop_assert_eq!(groebner_basis(&more), gb);
    }

    #[test]
    fn saturation_contains_and_is_idempotent(seed in any::<u64>()) {
        let amb = p1p1(31);
        let ring = amb.poly_ring();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x0 = Polynomial::var(ring, 0);
        let y1 = Polynomial::var(ring, 3);
        // components on the irrelevant locus make the saturation strictly larger
        let f = &(&x0 * &y1) * &random_form(&mut rng, ring, &Multidegree(vec![1, 0])).unwrap();
        let g = &(&x0 * &x0) * &random_form(&mut rng, ring, &Multidegree(vec![0, 2])).unwrap();
        let ideal = amb.ideal(&[f, g]).unwrap();
        let sat = amb.subscheme_ideal(&ideal).unwrap();
        prop_assert!(ideal.is_subset_of(&sat).unwrap());
        let again = amb.subscheme_ideal(&sat).unwrap();
        prop_assert!(again.equals(&sat).unwrap());
    }

    #[test]
    fn height_of_generic_forms(seed in any::<u64>()) {
        let amb = p1p1(101);
        let ring = amb.poly_ring();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&mut rng, ring, &Multidegree(vec![1, 1])).unwrap();
        let g = random_form(&mut rng, ring, &Multidegree(vec![2, 1])).unwrap();
        let ideal = Ideal::new(amb.ring(), vec![f.clone(), g]).unwrap();
        prop_assert_eq!(ideal.height().unwrap(), 2);
        prop_assert_eq!(ideal.dimension().unwrap(), 2);
        let square = Ideal::new(amb.ring(), vec![f.clone(), &f * &f]).unwrap();
        prop_assert_eq!(square.height().unwrap(), 1);
    }
}
