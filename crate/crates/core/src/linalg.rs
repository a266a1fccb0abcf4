//! Exact linear algebra: dense row reduction and spans of polynomials.

use std::collections::HashMap;

use crate::field::{FieldTower, Fq};
use crate::poly::Polynomial;
use crate::ring::{Monomial, PolyRing};

/// Reduced row echelon form in place; returns the pivot column of each remaining row.
pub fn rref(tower: &FieldTower, rows: &mut Vec<Vec<Fq>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = tower.inv(rows[rank][col]).unwrap();
        for x in rows[rank].iter_mut() {
            *x = tower.mul(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let c = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = tower.sub(*x, tower.mul(c, y));
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

/// Basis of `{x : A x = 0}`, one vector per free column, in increasing free-column order.
pub fn nullspace(tower: &FieldTower, rows: &[Vec<Fq>], ncols: usize) -> Vec<Vec<Fq>> {
    let mut a: Vec<Vec<Fq>> = rows.to_vec();
    let pivots = rref(tower, &mut a);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Fq::ZERO; ncols];
        v[free] = Fq::ONE;
        for (row, &pc) in a.iter().zip(&pivots) {
            v[pc] = tower.neg(row[free]);
        }
        out.push(v);
    }
    out
}

/// Span of polynomials over the coefficient field, kept in reduced echelon form: basis
/// elements are monic, have distinct leading monomials, and no basis element contains the
/// leading monomial of another.
#[derive(Clone, Debug)]
pub struct PolySpan {
    ring: PolyRing,
    basis: Vec<Polynomial>,
    pivot_index: HashMap<Monomial, usize>,
}

impl PolySpan {
    pub fn new(ring: &PolyRing) -> Self {
        PolySpan { ring: ring.clone(), basis: Vec::new(), pivot_index: HashMap::new() }
    }

    pub fn from_polys<'a>(ring: &PolyRing, polys: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        let mut span = Self::new(ring);
        for p in polys {
            span.insert(p);
        }
        span
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis sorted by decreasing leading monomial.
    pub fn basis(&self) -> Vec<Polynomial> {
        let mut b = self.basis.clone();
        b.sort_by(|x, y| self.ring.cmp_monomials(y.leading_monomial().unwrap(), x.leading_monomial().unwrap()));
        b
    }

    /// Remainder of `v` after eliminating every pivot monomial.
    pub fn reduce(&self, v: &Polynomial) -> Polynomial {
        let mut r = v.clone();
        let pivots: Vec<usize> = v.terms().iter().filter_map(|(m, _)| self.pivot_index.get(m).copied()).collect();
        for i in pivots {
            let b = &self.basis[i];
            let c = r.coeff_of(b.leading_monomial().unwrap());
            if !c.is_zero() {
                r = r.sub_scaled(c, &Monomial::one(self.ring.nvars()), b);
            }
        }
        r
    }

    pub fn contains(&self, v: &Polynomial) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &Polynomial) -> bool {
        let r = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        let r = r.monic();
        let lead = r.leading_monomial().unwrap().clone();
        let one = Monomial::one(self.ring.nvars());
        for b in self.basis.iter_mut() {
            let c = b.coeff_of(&lead);
            if !c.is_zero() {
                *b = b.sub_scaled(c, &one, &r);
            }
        }
        self.pivot_index.insert(lead, self.basis.len());
        self.basis.push(r);
        true
    }

    /// Coefficients of a member `v` in the order of [`basis`](Self::basis), or `None` if
    /// `v` is not in the span.
    pub fn coordinates(&self, v: &Polynomial) -> Option<Vec<Fq>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.basis().iter().map(|b| v.coeff_of(b.leading_monomial().unwrap())).collect())
    }
}
