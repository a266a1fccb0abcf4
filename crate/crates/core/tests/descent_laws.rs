use coxdescent::galois::{descend, fixed_space, is_orbit_block};
use coxdescent::linalg::PolySpan;
use coxdescent::sample::{random_form, scrambled_orbits};
use coxdescent::{CoxAmbient, FieldTower, Multidegree, SemilinearAction, StrictCi};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

fn swap_p2p2(p: u64) -> (CoxAmbient, SemilinearAction) {
    let amb = CoxAmbient::product_projective(&[2, 2], Arc::new(FieldTower::new(p, 2).unwrap())).unwrap();
    let a = SemilinearAction::parse(amb.ring(), 1, "x0->y0 x1->y1 x2->y2 y0->x0 y1->x1 y2->x2").unwrap();
    (amb, a)
}

fn deg(a: i64, b: i64) -> Multidegree {
    Multidegree(vec![a, b])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn descent_restores_orbits(seed in any::<u64>(), family in 0usize..4) {
        let (amb, a) = swap_p2p2(5);
        let seeds = [vec![deg(1, 0)], vec![deg(1, 1), deg(1, 1)], vec![deg(0, 1), deg(1, 1)], vec![deg(1, 0), deg(1, 0)]];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = scrambled_orbits(&mut rng, &a, &seeds[family]).unwrap();
        let fs = inst.scrambled;
        prop_assume!(amb.is_strict_ci(&fs).unwrap() == StrictCi::Strict);
        let original = amb.ideal(&fs).unwrap();
        prop_assert!(a.is_invariant_ideal(&original).unwrap());
        let r = descend(&amb, &a, &fs).unwrap();
        prop_assert!(amb.ideal(&r.new_gens).unwrap().equals(&original).unwrap());
        for block in r.orbits() {
            prop_assert!(is_orbit_block(&a, block));
        }
        let mut before: Vec<Multidegree> = fs.iter().map(|f| f.multidegree().unwrap()).collect();
        let mut after: Vec<Multidegree> = r.new_gens.iter().map(|f| f.multidegree().unwrap()).collect();
        before.sort();
        after.sort();
        prop_assert_eq!(before, after);
        for (k, &i) in r.input_order.iter().enumerate() {
            prop_assert_eq!(fs[i].multidegree().unwrap(), r.new_gens[k].multidegree().unwrap());
        }
    }

    #[test]
    fn fixed_spaces_descend_dimension(seed in any::<u64>()) {
        let (amb, a) = swap_p2p2(3);
        let ring = amb.poly_ring();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&mut rng, ring, &deg(1, 1)).unwrap();
        let g = random_form(&mut rng, ring, &deg(1, 1)).unwrap();
        let v = vec![f.clone(), a.apply(&f, 1).unwrap(), g.clone(), a.apply(&g, 1).unwrap()];
        let span = PolySpan::from_polys(ring, &v);
        let fixed = fixed_space(&a, &v, 1).unwrap();
        for w in &fixed {
            prop_assert_eq!(&a.apply(w, 1).unwrap(), w);
            prop_assert!(span.contains(w));
        }
        // an invariant space is spanned by its fixed vectors
        prop_assert_eq!(fixed.len(), span.dim());
        prop_assert_eq!(PolySpan::from_polys(ring, &fixed).dim(), span.dim());
    }
}
