//! Exact arithmetic in a prime field `GF(p)` and one extension `GF(p^d) = GF(p)[t]/(m(t))`.
//!
//! Elements are stored packed: the power-basis coordinates `c_0 + c_1 t + ... + c_{d-1} t^{d-1}`
//! become the integer `c_0 + c_1 p + ... + c_{d-1} p^{d-1}`. The packing is canonical, so
//! equality of [`Fq`] values is equality of field elements. Raw values carry no reference to
//! their field; [`FieldElement`] pairs a value with its tower for checked arithmetic.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::text::{int_mod, parse_error, tokenize, Cursor, Tok};

/// Packed element of some [`FieldTower`].
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Fq(pub(crate) u64);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The packed integer encoding.
    pub fn packed(self) -> u64 {
        self.0
    }
}

/// `GF(p)` together with the extension `GF(p^d)` and its Frobenius.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldTower {
    p: u64,
    d: usize,
    q: u64,
    /// Monic, coefficients from degree 0 up to degree `d`.
    min_poly: Vec<u64>,
}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) [{}]", self.p, self.d, self.min_poly_string())
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

impl FieldTower {
    /// The prime field `GF(p)`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::with_min_poly(p, &[0, 1])
    }

    /// `GF(p^d)` with the smallest irreducible monic polynomial of degree `d`, where polynomials
    /// are compared by the packed integer of their non-leading coefficients.
    pub fn new(p: u64, d: usize) -> Result<Self> {
        Self::check_params(p, d)?;
        if d == 1 {
            return Self::prime(p);
        }
        let q = p.pow(d as u32);
        for code in 0..q {
            let mut coeffs = unpack(code, p, d);
            coeffs.push(1);
            if upoly::is_irreducible(&coeffs, p) {
                return Self::with_min_poly(p, &coeffs);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// `GF(p)[t]/(m)` for a caller-supplied monic `m`, coefficients listed from degree 0.
    pub fn with_min_poly(p: u64, min_poly: &[u64]) -> Result<Self> {
        let mut m: Vec<u64> = min_poly.iter().map(|c| c % p.max(1)).collect();
        while m.len() > 1 && *m.last().unwrap() == 0 {
            m.pop();
        }
        let d = m.len().saturating_sub(1);
        Self::check_params(p, d.max(1))?;
        let rendered = upoly::render(&m);
        if d == 0 || m[d] != 1 || !upoly::is_irreducible(&m, p) {
            return Err(Error::NotIrreducible(rendered));
        }
        Ok(FieldTower { p, d, q: p.pow(d as u32), min_poly: m })
    }

    /// Parses the defining polynomial from text in `t`, e.g. `t^2+1`.
    pub fn with_min_poly_str(p: u64, text: &str) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let coeffs = upoly::parse(text, p)?;
        Self::with_min_poly(p, &coeffs)
    }

    fn check_params(p: u64, d: usize) -> Result<()> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if d == 0 || d > 63 || p.checked_pow(d as u32).is_none() {
            return Err(Error::FieldTooLarge { p, d });
        }
        Ok(())
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// Number of elements of the extension field.
    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn min_poly(&self) -> &[u64] {
        &self.min_poly
    }

    pub fn min_poly_string(&self) -> String {
        upoly::render(&self.min_poly)
    }

    pub fn zero(&self) -> Fq {
        Fq::ZERO
    }

    pub fn one(&self) -> Fq {
        Fq::ONE
    }

    /// The class of `t`. In the prime field this is the root of the degree-one defining polynomial.
    pub fn generator(&self) -> Fq {
        if self.d == 1 {
            Fq((self.p - self.min_poly[0]) % self.p)
        } else {
            Fq(self.p)
        }
    }

    pub fn from_int(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.p as i64) as u64)
    }

    /// Builds an element from power-basis coordinates (reduced mod `p`; missing ones are zero).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Fq {
        assert!(coeffs.len() <= self.d, "more coordinates than the extension degree");
        Fq(coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c % self.p))
    }

    /// Power-basis coordinates `c_0 .. c_{d-1}`.
    pub fn coeffs(&self, a: Fq) -> Vec<u64> {
        unpack(a.0, self.p, self.d)
    }

    pub fn is_prime_field_element(&self, a: Fq) -> bool {
        a.0 < self.p
    }

    /// All `p^d` elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.q).map(Fq)
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.d == 1 {
            let s = a.0 + b.0;
            return Fq(if s >= self.p { s - self.p } else { s });
        }
        let (mut x, mut y, mut out, mut scale) = (a.0, b.0, 0, 1);
        while x > 0 || y > 0 {
            let digit = (x % self.p + y % self.p) % self.p;
            out += digit * scale;
            scale *= self.p;
            x /= self.p;
            y /= self.p;
        }
        Fq(out)
    }

    pub fn neg(&self, a: Fq) -> Fq {
        if self.d == 1 {
            return Fq(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        let (mut x, mut out, mut scale) = (a.0, 0, 1);
        while x > 0 {
            let digit = x % self.p;
            out += ((self.p - digit) % self.p) * scale;
            scale *= self.p;
            x /= self.p;
        }
        Fq(out)
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if self.d == 1 {
            return Fq(a.0 * b.0 % self.p);
        }
        if a.0 == 0 || b.0 == 0 {
            return Fq::ZERO;
        }
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0u64; 2 * self.d - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % self.p;
            }
        }
        for k in (self.d..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for i in 0..self.d {
                let sub = c * self.min_poly[i] % self.p;
                let slot = &mut prod[k - self.d + i];
                *slot = (*slot + self.p - sub) % self.p;
            }
            prod[k] = 0;
        }
        self.from_coeffs(&prod[..self.d])
    }

    pub fn pow(&self, a: Fq, mut e: u64) -> Fq {
        let mut base = a;
        let mut acc = Fq::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Fq) -> Option<Fq> {
        if a.is_zero() {
            return None;
        }
        if self.d == 1 {
            // extended Euclid on machine integers
            let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
            let (mut s0, mut s1) = (0i64, 1i64);
            while r1 != 0 {
                let quot = r0 / r1;
                (r0, r1) = (r1, r0 - quot * r1);
                (s0, s1) = (s1, s0 - quot * s1);
            }
            return Some(Fq(s0.rem_euclid(self.p as i64) as u64));
        }
        Some(self.pow(a, self.q - 2))
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, inv))
    }

    /// `a^(p^i)`; the exponent is taken modulo `d`, so negative `i` gives the inverse automorphism.
    pub fn frobenius(&self, a: Fq, i: i64) -> Fq {
        let e = i.rem_euclid(self.d as i64) as u32;
        if e == 0 || self.d == 1 {
            return a;
        }
        self.pow(a, self.p.pow(e))
    }

    /// Canonical text: `c_{d-1}*t^(d-1)+...+c_0`, zero coordinates omitted.
    pub fn format(&self, a: Fq) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let coeffs = self.coeffs(a);
        let mut parts = Vec::new();
        for (i, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            parts.push(match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}*t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}*t^{i}"),
            });
        }
        parts.join("+")
    }

    /// Parses an integer-coefficient polynomial in `t`, e.g. `2*t+1` or `-(t+1)^2`.
    pub fn parse(&self, text: &str) -> Result<Fq> {
        let toks = tokenize(text)?;
        let mut cur = Cursor::new(&toks, text.chars().count());
        let value = self.parse_sum(&mut cur)?;
        if !cur.at_end() {
            return Err(parse_error(cur.column(), "trailing input"));
        }
        Ok(value)
    }

    pub(crate) fn parse_sum(&self, cur: &mut Cursor<'_>) -> Result<Fq> {
        let mut acc = Fq::ZERO;
        let mut first = true;
        loop {
            let negate = if cur.eat(&Tok::Minus) {
                true
            } else {
                if !cur.eat(&Tok::Plus) && !first {
                    break;
                }
                false
            };
            first = false;
            let mut term = self.parse_factor(cur)?;
            while cur.eat(&Tok::Star) {
                let rhs = self.parse_factor(cur)?;
                term = self.mul(term, rhs);
            }
            acc = if negate { self.sub(acc, term) } else { self.add(acc, term) };
            if !matches!(cur.peek(), Some(Tok::Plus) | Some(Tok::Minus)) {
                break;
            }
        }
        Ok(acc)
    }

    /// Number, `t`, or a parenthesized sum, each optionally raised to a power.
    pub(crate) fn parse_factor(&self, cur: &mut Cursor<'_>) -> Result<Fq> {
        let column = cur.column();
        let base = match cur.next() {
            Some(Tok::Int(digits)) => Fq(int_mod(digits, self.p)),
            Some(Tok::Ident(name)) if name == "t" => {
                if self.d == 1 {
                    return Err(parse_error(column, "the prime field has no generator t"));
                }
                self.generator()
            }
            Some(Tok::LParen) => {
                let inner = self.parse_sum(cur)?;
                if !cur.eat(&Tok::RParen) {
                    return Err(parse_error(cur.column(), "expected ')'"));
                }
                inner
            }
            _ => return Err(parse_error(column, "expected a number, t or '('")),
        };
        if cur.eat(&Tok::Caret) {
            let e = cur.expect_nat()?;
            return Ok(self.pow(base, e));
        }
        Ok(base)
    }
}

fn unpack(mut x: u64, p: u64, d: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(d);
    for _ in 0..d {
        out.push(x % p);
        x /= p;
    }
    out
}

/// The binary operations of [`ff_arith`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A field value bound to its tower; arithmetic checks that both sides agree.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    tower: Arc<FieldTower>,
    value: Fq,
}

impl FieldElement {
    pub fn new(tower: Arc<FieldTower>, value: Fq) -> Self {
        FieldElement { tower, value }
    }

    pub fn parse(tower: Arc<FieldTower>, text: &str) -> Result<Self> {
        let value = tower.parse(text)?;
        Ok(FieldElement { tower, value })
    }

    pub fn value(&self) -> Fq {
        self.value
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    pub fn coeffs(&self) -> Vec<u64> {
        self.tower.coeffs(self.value)
    }

    pub fn frobenius(&self, i: i64) -> Self {
        FieldElement { tower: self.tower.clone(), value: self.tower.frobenius(self.value, i) }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tower.format(self.value))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self, self.tower)
    }
}

/// Checked binary arithmetic on tower-bound elements.
pub fn ff_arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    if !Arc::ptr_eq(&a.tower, &b.tower) && a.tower != b.tower {
        return Err(Error::TowerMismatch);
    }
    let t = &a.tower;
    let value = match op {
        ArithOp::Add => t.add(a.value, b.value),
        ArithOp::Sub => t.sub(a.value, b.value),
        ArithOp::Mul => t.mul(a.value, b.value),
        ArithOp::Div => t.div(a.value, b.value)?,
    };
    Ok(FieldElement { tower: t.clone(), value })
}

/// Dense univariate polynomials over `GF(p)`, used for the irreducibility test.
mod upoly {
    use super::*;

    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        FieldTower { p, d: 1, q: p, min_poly: vec![0, 1] }.inv(Fq(a)).unwrap().0
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let m = trim(m.to_vec());
        let lead_inv = inv_mod(*m.last().unwrap(), p);
        while r.len() >= m.len() {
            let shift = r.len() - m.len();
            let c = r.last().unwrap() * lead_inv % p;
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
            }
            r = trim(r);
        }
        r
    }

    fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        rem(&prod, m, p)
    }

    fn pow_mod(a: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut base = rem(a, m, p);
        let mut acc = vec![1u64];
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &base, m, p);
            }
            base = mul_mod(&base, &base, m, p);
            e >>= 1;
        }
        acc
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Irreducible iff `gcd(x^(p^i) - x, m) = 1` for `1 <= i <= deg(m)/2`.
    pub fn is_irreducible(m: &[u64], p: u64) -> bool {
        let d = m.len() - 1;
        let mut h = vec![0u64, 1];
        for _ in 1..=d / 2 {
            h = pow_mod(&h, p, m, p);
            let mut diff = h.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            if gcd(&diff, m, p).len() != 1 {
                return false;
            }
        }
        true
    }

    pub fn render(m: &[u64]) -> String {
        let mut parts = Vec::new();
        for (i, &c) in m.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            parts.push(match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}*t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}*t^{i}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    /// Parses `t`-polynomial text into coefficients mod `p`.
    pub fn parse(text: &str, p: u64) -> Result<Vec<u64>> {
        let toks = tokenize(text)?;
        let mut cur = Cursor::new(&toks, text.chars().count());
        let mut coeffs: Vec<u64> = Vec::new();
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
            let (mut c, mut deg) = (1u64, 0usize);
            loop {
                let column = cur.column();
                match cur.next() {
                    Some(Tok::Int(digits)) => c = c * int_mod(digits, p) % p,
                    Some(Tok::Ident(name)) if name == "t" => {
                        deg += if cur.eat(&Tok::Caret) { cur.expect_nat()? as usize } else { 1 };
                    }
                    _ => return Err(parse_error(column, "expected a number or t")),
                }
                if !cur.eat(&Tok::Star) {
                    break;
                }
            }
            if deg > 64 {
                return Err(parse_error(cur.column(), "degree too large"));
            }
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, 0);
            }
            let c = if negate { (p - c) % p } else { c };
            coeffs[deg] = (coeffs[deg] + c) % p;
        }
        Ok(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> FieldTower {
        FieldTower::with_min_poly(3, &[1, 0, 1]).unwrap()
    }

    #[test]
    fn prime_field_inverse_pair() {
        let f = FieldTower::prime(101).unwrap();
        assert_eq!(f.add(f.from_int(50), f.from_int(51)), Fq::ZERO);
    }

    #[test]
    fn gf9_products() {
        let f = gf9();
        let t = f.generator();
        assert_eq!(f.mul(t, t), f.from_int(2));
        let one_plus_t = f.parse("1+t").unwrap();
        let one_minus_t = f.parse("1-t").unwrap();
        // (1+t)(1-t) = 1 - t^2 = 1 + 1
        assert_eq!(f.mul(one_plus_t, one_minus_t), f.from_int(2));
    }

    #[test]
    fn frobenius_examples() {
        let f = gf9();
        let t = f.generator();
        assert_eq!(f.frobenius(t, 1), f.parse("2*t").unwrap());
        assert_eq!(f.frobenius(f.from_int(2), 1), f.from_int(2));
        for a in f.elements() {
            assert_eq!(f.frobenius(a, 2), a);
            assert_eq!(f.frobenius(f.frobenius(a, 1), -1), a);
        }
    }

    #[test]
    fn default_min_poly_is_smallest() {
        assert_eq!(FieldTower::new(3, 2).unwrap().min_poly(), &[1, 0, 1]);
        // t^2 + t + 1 over GF(2)
        assert_eq!(FieldTower::new(2, 2).unwrap().min_poly(), &[1, 1, 1]);
        // t^3 + t + 1 over GF(2)
        assert_eq!(FieldTower::new(2, 3).unwrap().min_poly(), &[1, 1, 0, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldTower::prime(91), Err(Error::NotPrime(91)));
        assert!(matches!(FieldTower::with_min_poly(3, &[2, 0, 1]), Err(Error::NotIrreducible(_))));
        assert!(matches!(FieldTower::with_min_poly(5, &[1, 0, 0, 0, 1]), Err(Error::NotIrreducible(_))));
        assert!(matches!(FieldTower::new(2, 70), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn division_and_mismatch_errors() {
        let a = Arc::new(gf9());
        let b = Arc::new(FieldTower::prime(3).unwrap());
        let x = FieldElement::parse(a.clone(), "t").unwrap();
        let zero = FieldElement::parse(a.clone(), "0").unwrap();
        let y = FieldElement::parse(b, "1").unwrap();
        assert_eq!(ff_arith(&x, &zero, ArithOp::Div), Err(Error::DivisionByZero));
        assert_eq!(ff_arith(&x, &y, ArithOp::Add), Err(Error::TowerMismatch));
        let q = ff_arith(&x, &x, ArithOp::Div).unwrap();
        assert_eq!(q.to_string(), "1");
    }

    #[test]
    fn text_round_trip_exhaustive() {
        for f in [gf9(), FieldTower::new(5, 3).unwrap(), FieldTower::prime(7).unwrap()] {
            for a in f.elements() {
                assert_eq!(f.parse(&f.format(a)).unwrap(), a, "{}", f.format(a));
            }
        }
        let f = gf9();
        assert_eq!(f.format(f.parse("t^3").unwrap()), "2*t");
        assert!(FieldTower::prime(7).unwrap().parse("t").is_err());
    }

    #[test]
    fn min_poly_from_text() {
        let f = FieldTower::with_min_poly_str(3, "t^2+1").unwrap();
        assert_eq!(f, gf9());
        assert_eq!(f.min_poly_string(), "t^2+1");
    }
}
