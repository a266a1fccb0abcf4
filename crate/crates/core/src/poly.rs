//! Sparse multivariate polynomials over the extension field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Fq;
use crate::ring::{Monomial, Multidegree, PolyRing};
use crate::text::{parse_error, tokenize, Cursor, Tok};

/// Terms are kept sorted by decreasing monomial order without zero coefficients, so
/// structural equality is equality of polynomials.
#[derive(Clone)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, Fq)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring == other.ring
    }
}

impl Eq for Polynomial {}

/// The operations of [`poly_arith`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring arithmetic.
pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    if f.ring != g.ring {
        return Err(Error::RingMismatch);
    }
    Ok(match op {
        PolyOp::Add => f.merge(g, false),
        PolyOp::Sub => f.merge(g, true),
        PolyOp::Mul => f.mul_unchecked(g),
    })
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &PolyRing) -> Self {
        Self::constant(ring, Fq::ONE)
    }

    pub fn constant(ring: &PolyRing, c: Fq) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn var(ring: &PolyRing, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i), Fq::ONE)
    }

    pub fn term(ring: &PolyRing, m: Monomial, c: Fq) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Sorts, combines like terms and drops zeros.
    pub fn from_terms(ring: &PolyRing, mut terms: Vec<(Monomial, Fq)>) -> Self {
        let tower = ring.tower().clone();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        let mut out: Vec<(Monomial, Fq)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = tower.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Terms already in decreasing order with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &PolyRing, terms: Vec<(Monomial, Fq)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn parse(ring: &PolyRing, text: &str) -> Result<Self> {
        let toks = tokenize(text)?;
        let mut cur = Cursor::new(&toks, text.chars().count());
        let p = parse_sum(ring, &mut cur)?;
        if !cur.at_end() {
            return Err(parse_error(cur.column(), "trailing input"));
        }
        Ok(p)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Fq)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<Fq> {
        self.terms.first().map(|(_, c)| *c)
    }

    pub fn coeff_of(&self, m: &Monomial) -> Fq {
        self.terms.binary_search_by(|(tm, _)| self.ring.cmp_monomials(m, tm)).map_or(Fq::ZERO, |i| self.terms[i].1)
    }

    pub fn scale(&self, c: Fq) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let tower = self.ring.tower();
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), tower.mul(*a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `c * m * self`; multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, c: Fq, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let tower = self.ring.tower();
        let terms = self.terms.iter().map(|(tm, a)| (tm.mul(m), tower.mul(*a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Scaled to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(c) if c != Fq::ONE => self.scale(self.ring.tower().inv(c).unwrap()),
            _ => self.clone(),
        }
    }

    /// `self - c * m * g` in one merge pass.
    pub(crate) fn sub_scaled(&self, c: Fq, m: &Monomial, g: &Polynomial) -> Self {
        let tower = self.ring.tower();
        let neg_c = tower.neg(c);
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &g.terms;
        let mut shifted: Option<Monomial> = None;
        while i < a.len() || j < b.len() {
            if j < b.len() && shifted.is_none() {
                shifted = Some(b[j].0.mul(m));
            }
            let ord = match (i < a.len(), &shifted) {
                (true, Some(bm)) => self.ring.cmp_monomials(&a[i].0, bm),
                (true, None) => Ordering::Greater,
                (false, _) => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((shifted.take().unwrap(), tower.mul(neg_c, b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = tower.add(a[i].1, tower.mul(neg_c, b[j].1));
                    if !s.is_zero() {
                        out.push((shifted.take().unwrap(), s));
                    } else {
                        shifted = None;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    fn merge(&self, g: &Polynomial, negate: bool) -> Self {
        let c = if negate { Fq::ONE } else { self.ring.tower().neg(Fq::ONE) };
        self.sub_scaled(c, &Monomial::one(self.ring.nvars()), g)
    }

    fn mul_unchecked(&self, g: &Polynomial) -> Self {
        let tower = self.ring.tower();
        let mut terms = Vec::with_capacity(self.terms.len() * g.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &g.terms {
                terms.push((m1.mul(m2), tower.mul(*c1, *c2)));
            }
        }
        Self::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// The common multidegree of all terms.
    pub fn multidegree(&self) -> Result<Multidegree> {
        let (first, _) = self.terms.first().ok_or(Error::ZeroPolynomial)?;
        let deg = self.ring.degree_of(first);
        for (m, _) in &self.terms[1..] {
            if self.ring.degree_of(m) != deg {
                return Err(Error::Inhomogeneous {
                    first: self.ring.format_monomial(first),
                    second: self.ring.format_monomial(m),
                });
            }
        }
        Ok(deg)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.multidegree().is_ok()
    }

    /// Maps every coefficient through `f`, keeping the monomials.
    pub fn map_coeffs(&self, f: impl Fn(Fq) -> Fq) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f(*c))).filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Moves the polynomial into `target`, placing variable `i` at position `i + offset`.
    pub(crate) fn embed(&self, target: &PolyRing, offset: usize) -> Self {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = Monomial::one(n);
                e.0[offset..offset + m.nvars()].copy_from_slice(m.exponents());
                (e, *c)
            })
            .collect();
        Self::from_terms(target, terms)
    }

    /// Inverse of [`embed`](Self::embed); `None` if a dropped variable occurs.
    pub(crate) fn contract(&self, target: &PolyRing, offset: usize) -> Option<Self> {
        let n = target.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exponents();
            if e[..offset].iter().chain(&e[offset + n..]).any(|&x| x > 0) {
                return None;
            }
            terms.push((Monomial::from_exponents(&e[offset..offset + n]), *c));
        }
        Some(Self::from_terms(target, terms))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let tower = self.ring.tower();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            let coeff = tower.format(*c);
            let coeff = if coeff.contains('+') { format!("({coeff})") } else { coeff };
            if m.is_one() {
                f.write_str(&coeff)?;
            } else if *c == Fq::ONE {
                f.write_str(&self.ring.format_monomial(m))?;
            } else {
                write!(f, "{}*{}", coeff, self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_sum(ring: &PolyRing, cur: &mut Cursor<'_>) -> Result<Polynomial> {
    let tower = ring.tower();
    let mut terms = Vec::new();
    let mut first = true;
    while !cur.at_end() {
        let negate = if cur.eat(&Tok::Minus) {
            true
        } else {
            if !cur.eat(&Tok::Plus) && !first {
                return Err(parse_error(cur.column(), "expected '+' or '-'"));
            }
            false
        };
        first = false;
        let mut coeff = Fq::ONE;
        let mut mono = Monomial::one(ring.nvars());
        loop {
            let column = cur.column();
            match cur.peek() {
                Some(Tok::Ident(name)) if name != "t" => {
                    cur.next();
                    let i = ring
                        .var_index(name)
                        .ok_or_else(|| parse_error(column, format!("unknown variable '{name}'")))?;
                    let e = if cur.eat(&Tok::Caret) { cur.expect_nat()? } else { 1 };
                    let e = u16::try_from(e).map_err(|_| parse_error(column, "exponent too large"))?;
                    mono.0[i] = mono.0[i].checked_add(e).ok_or_else(|| parse_error(column, "exponent too large"))?;
                }
                _ => {
                    let c = tower.parse_factor(cur)?;
                    coeff = tower.mul(coeff, c);
                }
            }
            if !cur.eat(&Tok::Star) {
                break;
            }
        }
        if negate {
            coeff = tower.neg(coeff);
        }
        terms.push((mono, coeff));
    }
    if first {
        return Err(parse_error(cur.column(), "empty polynomial"));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        poly_arith(self, rhs, PolyOp::Add).expect("ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        poly_arith(self, rhs, PolyOp::Sub).expect("ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        poly_arith(self, rhs, PolyOp::Mul).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let tower = self.ring.tower().clone();
        self.map_coeffs(|c| tower.neg(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldTower;
    use crate::ring::MonomialOrder;
    use std::sync::Arc;

    fn ring(p: u64) -> PolyRing {
        PolyRing::new(
            ["x0", "x1", "y0", "y1"].map(String::from).to_vec(),
            Arc::new(FieldTower::prime(p).unwrap()),
            vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]],
            MonomialOrder::Grevlex,
        )
        .unwrap()
    }

    fn p(r: &PolyRing, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring(101);
        assert_eq!(&p(&r, "x0+x1") * &p(&r, "x0-x1"), p(&r, "x0^2-x1^2"));
        let f = p(&r, "x0*y0+3*x1*y1");
        assert!((&f + &(-&f)).is_zero());
        let r3 = ring(3);
        assert_eq!(p(&r3, "x0+x1").pow(3), p(&r3, "x0^3+x1^3"));
    }

    #[test]
    fn multidegree_examples() {
        let r = ring(101);
        assert_eq!(p(&r, "x0*y0").multidegree().unwrap(), Multidegree(vec![1, 1]));
        assert_eq!(p(&r, "x0").multidegree().unwrap(), Multidegree(vec![1, 0]));
        match p(&r, "x0*y0+x1").multidegree() {
            Err(Error::Inhomogeneous { first, second }) => {
                assert_eq!((first.as_str(), second.as_str()), ("x0*y0", "x1"));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(Polynomial::zero(&r).multidegree(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn canonical_printing() {
        let r = ring(101);
        assert_eq!(p(&r, "y1*x1 + x0*y0").to_string(), "x0*y0+x1*y1");
        assert_eq!(p(&r, "x0^2 - x1^2").to_string(), "x0^2+100*x1^2");
        assert_eq!(p(&r, "0").to_string(), "0");
        assert_eq!(p(&r, "2 - 1").to_string(), "1");
    }

    #[test]
    fn extension_coefficients_print_and_parse() {
        let tower = Arc::new(FieldTower::with_min_poly(3, &[1, 0, 1]).unwrap());
        let r = PolyRing::new(vec!["x".into(), "y".into()], tower, vec![vec![1, 1]], MonomialOrder::Grevlex).unwrap();
        let f = p(&r, "(t+1)*x + t*y + t^2");
        assert_eq!(f.to_string(), "(t+1)*x+t*y+2");
        assert_eq!(p(&r, &f.to_string()), f);
        assert_eq!(p(&r, "x*t*2").to_string(), "2*t*x");
    }

    #[test]
    fn parse_errors_carry_columns() {
        let r = ring(101);
        assert!(matches!(Polynomial::parse(&r, "x0 + z"), Err(Error::Parse { column: 6, .. })));
        assert!(matches!(Polynomial::parse(&r, "x0 +"), Err(Error::Parse { .. })));
        assert!(matches!(Polynomial::parse(&r, "x0 x1"), Err(Error::Parse { column: 4, .. })));
        assert!(matches!(Polynomial::parse(&r, ""), Err(Error::Parse { .. })));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = ring(101);
        let b = ring(103);
        assert_eq!(poly_arith(&p(&a, "x0"), &p(&b, "x0"), PolyOp::Add), Err(Error::RingMismatch));
    }
}
