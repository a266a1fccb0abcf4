use coxdescent::field::{ff_arith, ArithOp, FieldElement, FieldTower};
use coxdescent::Fq;
use proptest::prelude::*;
use std::sync::Arc;

fn towers() -> Vec<FieldTower> {
    vec![
        FieldTower::prime(101).unwrap(),
        FieldTower::with_min_poly_str(3, "t^2+1").unwrap(),
        FieldTower::new(2, 4).unwrap(),
        FieldTower::new(5, 3).unwrap(),
        FieldTower::new(7, 2).unwrap(),
    ]
}

fn element(tower: &FieldTower, seed: u64) -> Fq {
    let p = tower.characteristic();
    let digits: Vec<u64> = (0..tower.degree()).map(|i| (seed / p.pow(i as u32)) % p).collect();
    tower.from_coeffs(&digits)
}

proptest! {
    #[test]
    fn frobenius_is_a_field_automorphism(which in 0usize..5, a in any::<u64>(), b in any::<u64>(), i in -4i64..8) {
        let f = &towers()[which];
        let (a, b) = (element(f, a), element(f, b));
        prop_assert_eq!(f.frobenius(f.add(a, b), i), f.add(f.frobenius(a, i), f.frobenius(b, i)));
        prop_assert_eq!(f.frobenius(f.mul(a, b), i), f.mul(f.frobenius(a, i), f.frobenius(b, i)));
        prop_assert_eq!(f.frobenius(f.frobenius(a, i), -i), a);
        prop_assert_eq!(f.frobenius(a, f.degree() as i64), a);
        prop_assert_eq!(f.frobenius(a, 1), f.pow(a, f.characteristic()));
    }

    #[test]
    fn field_axioms(which in 0usize..5, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = &towers()[which];
        let (a, b, c) = (element(f, a), element(f, b), element(f, c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Fq::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fq::ONE);
            prop_assert_eq!(f.pow(a, f.order() - 1), Fq::ONE);
        }
    }

    #[test]
    fn text_round_trip(which in 0usize..5, a in any::<u64>()) {
        let f = &towers()[which];
        let a = element(f, a);
        prop_assert_eq!(f.parse(&f.format(a)).unwrap(), a);
    }
}

#[test]
fn prime_field_is_the_fixed_field() {
    for f in towers() {
        let fixed = f.elements().filter(|&a| f.frobenius(a, 1) == a).count() as u64;
        assert_eq!(fixed, f.characteristic());
        assert!(f.elements().filter(|&a| f.frobenius(a, 1) == a).all(|a| f.is_prime_field_element(a)));
    }
}

#[test]
fn element_wrappers_check_towers() {
    let gf9 = Arc::new(FieldTower::with_min_poly_str(3, "t^2+1").unwrap());
    let gf3 = Arc::new(FieldTower::prime(3).unwrap());
    let t = FieldElement::parse(gf9.clone(), "t").unwrap();
    let sq = ff_arith(&t, &t, ArithOp::Mul).unwrap();
    assert_eq!(sq.to_string(), "2");
    let one = FieldElement::parse(gf3, "1").unwrap();
    assert!(ff_arith(&t, &one, ArithOp::Add).is_err());
    assert_eq!(t.frobenius(1).to_string(), "2*t");
}
