//! Multigraded polynomial rings: variables, monomial orders, and the grading onto the
//! Picard lattice.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, OnceLock};

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::FieldTower;
use crate::poly::Polynomial;

/// Exponent vector. Exponents are `u16`; products that overflow panic.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub(crate) SmallVec<[u16; 12]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.checked_add(*b).expect("exponent overflow")).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with nonzero exponent, as a bit mask.
    pub fn support_mask(&self) -> u64 {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |m, (i, _)| m | 1 << i)
    }
}

/// Term orders. `Elimination(k)` compares the first `k` variables by grevlex and breaks ties
/// with grevlex on the remaining ones.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    Elimination(usize),
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(&a.0, &b.0),
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Elimination(k) => grevlex(&a.0[..k], &b.0[..k]).then_with(|| grevlex(&a.0[k..], &b.0[k..])),
        }
    }
}

/// Point of the grading lattice.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Multidegree(pub Vec<i64>);

impl Multidegree {
    pub fn zero(rank: usize) -> Self {
        Multidegree(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl From<Vec<i64>> for Multidegree {
    fn from(v: Vec<i64>) -> Self {
        Multidegree(v)
    }
}

impl Add for &Multidegree {
    type Output = Multidegree;
    fn add(self, rhs: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Multidegree {
    type Output = Multidegree;
    fn sub(self, rhs: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Multidegree {
    type Output = Multidegree;
    fn neg(self) -> Multidegree {
        Multidegree(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(PartialEq, Eq, Debug)]
struct RingData {
    vars: Vec<String>,
    tower: Arc<FieldTower>,
    /// `rank` rows, one column per variable.
    grading: Vec<Vec<i64>>,
    order: MonomialOrder,
    /// Strictly positive per-variable weights from an integer row combination of the grading.
    /// Empty for the auxiliary rings used by elimination.
    weights: Vec<i64>,
    /// Row combination producing `weights`.
    weight_combination: Vec<i64>,
}

/// Polynomial ring over a [`FieldTower`] with a grading matrix and a monomial order.
/// Cloning is cheap.
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.0.tower, self.0.vars.join(","))
    }
}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && name != "t"
}

/// Finds an integer combination of the rows that is positive on every column.
fn positive_combination(grading: &[Vec<i64>], nvars: usize) -> Option<Vec<i64>> {
    let rank = grading.len();
    let weights =
        |c: &[i64]| -> Vec<i64> { (0..nvars).map(|j| (0..rank).map(|r| c[r] * grading[r][j]).sum()).collect() };
    let all_ones = vec![1; rank];
    if weights(&all_ones).iter().all(|&w| w > 0) {
        return Some(all_ones);
    }
    // small search box, coefficients in [-3, 3]
    let bound = 3i64;
    let span = (2 * bound + 1) as usize;
    let total = span.checked_pow(rank as u32).filter(|&t| t <= 1 << 20)?;
    let mut best: Option<Vec<i64>> = None;
    for code in 0..total {
        let mut c = Vec::with_capacity(rank);
        let mut x = code;
        for _ in 0..rank {
            c.push((x % span) as i64 - bound);
            x /= span;
        }
        if weights(&c).iter().all(|&w| w > 0) {
            let norm = |v: &[i64]| v.iter().map(|a| a.abs()).sum::<i64>();
            if best.as_ref().is_none_or(|b| norm(&c) < norm(b)) {
                best = Some(c);
            }
        }
    }
    best
}

impl PolyRing {
    /// Validates names, grading shape and positivity of the grading.
    pub fn new(
        vars: Vec<String>,
        tower: Arc<FieldTower>,
        grading: Vec<Vec<i64>>,
        order: MonomialOrder,
    ) -> Result<Self> {
        let n = vars.len();
        if n == 0 || n > 64 {
            return Err(Error::InvalidRing(format!("{n} variables; between 1 and 64 are supported")));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_var_name(v) {
                return Err(Error::InvalidRing(format!("invalid variable name '{v}'")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable '{v}'")));
            }
        }
        if grading.is_empty() || grading.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidRing("grading needs at least one row with one entry per variable".into()));
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > n {
                return Err(Error::InvalidRing("elimination block larger than the variable list".into()));
            }
        }
        let weight_combination = positive_combination(&grading, n).ok_or_else(|| {
            Error::InvalidRing("grading is not positive: no row combination is positive on every variable".into())
        })?;
        let weights =
            (0..n).map(|j| grading.iter().zip(&weight_combination).map(|(row, c)| row[j] * c).sum()).collect();
        Ok(PolyRing(Arc::new(RingData { vars, tower, grading, order, weights, weight_combination })))
    }

    /// Ring with extra variables prepended, elimination order on them, and zero grading
    /// columns. Used for the auxiliary-variable tricks; positivity is not required there.
    pub(crate) fn with_leading_auxiliaries(&self, names: &[&str]) -> PolyRing {
        let k = names.len();
        let vars = names.iter().map(|s| s.to_string()).chain(self.0.vars.iter().cloned()).collect();
        let grading =
            self.0.grading.iter().map(|row| std::iter::repeat_n(0, k).chain(row.iter().copied()).collect()).collect();
        PolyRing(Arc::new(RingData {
            vars,
            tower: self.0.tower.clone(),
            grading,
            order: MonomialOrder::Elimination(k),
            weights: Vec::new(),
            weight_combination: Vec::new(),
        }))
    }

    /// Same ring with a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing(Arc::new(RingData {
            vars: self.0.vars.clone(),
            tower: self.0.tower.clone(),
            grading: self.0.grading.clone(),
            order,
            weights: self.0.weights.clone(),
            weight_combination: self.0.weight_combination.clone(),
        }))
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.0.tower
    }

    pub fn grading(&self) -> &[Vec<i64>] {
        &self.0.grading
    }

    pub fn rank(&self) -> usize {
        self.0.grading.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.0.order.cmp(a, b)
    }

    /// `grading * exponents`.
    pub fn degree_of(&self, m: &Monomial) -> Multidegree {
        Multidegree(
            self.0.grading.iter().map(|row| row.iter().zip(m.exponents()).map(|(g, &e)| g * e as i64).sum()).collect(),
        )
    }

    pub fn var_degree(&self, i: usize) -> Multidegree {
        Multidegree(self.0.grading.iter().map(|row| row[i]).collect())
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { self.0.vars[i].clone() } else { format!("{}^{}", self.0.vars[i], e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// All monomials of multidegree `degree`, largest first. Empty iff the class is not
    /// effective (no monomial witnesses it).
    pub fn monomials_of_degree(&self, degree: &Multidegree) -> Vec<Monomial> {
        let mut out = Vec::new();
        self.visit_degree(degree, &mut |m| {
            out.push(m.clone());
            true
        });
        out.sort_by(|a, b| self.cmp_monomials(b, a));
        out
    }

    /// Whether some monomial has multidegree `degree`.
    pub fn is_effective(&self, degree: &Multidegree) -> bool {
        let mut found = false;
        self.visit_degree(degree, &mut |_| {
            found = true;
            false
        });
        found
    }

    /// Some monomial of the given degree, if the class is effective.
    pub fn any_monomial_of_degree(&self, degree: &Multidegree) -> Option<Monomial> {
        let mut found = None;
        self.visit_degree(degree, &mut |m| {
            found = Some(m.clone());
            false
        });
        found
    }

    /// `a <= b` iff `b - a` is effective.
    pub fn degree_leq(&self, a: &Multidegree, b: &Multidegree) -> bool {
        self.is_effective(&(b - a))
    }

    /// Calls `visit` on each monomial of the given degree until it returns `false`.
    fn visit_degree(&self, degree: &Multidegree, visit: &mut dyn FnMut(&Monomial) -> bool) {
        assert!(!self.0.weights.is_empty(), "graded pieces need a positive grading");
        assert_eq!(degree.0.len(), self.rank(), "multidegree has the wrong rank");
        let target: i64 = degree.0.iter().zip(&self.0.weight_combination).map(|(l, c)| l * c).sum();
        if target < 0 {
            return;
        }
        let n = self.nvars();
        let mut exps = Monomial::one(n);
        let mut partial = vec![0i64; self.rank()];
        self.visit_rec(0, target, degree, &mut exps, &mut partial, visit);
    }

    fn visit_rec(
        &self,
        var: usize,
        remaining: i64,
        degree: &Multidegree,
        exps: &mut Monomial,
        partial: &mut Vec<i64>,
        visit: &mut dyn FnMut(&Monomial) -> bool,
    ) -> bool {
        let n = self.nvars();
        if var == n {
            if remaining == 0 && partial == &degree.0 {
                return visit(exps);
            }
            return true;
        }
        let w = self.0.weights[var];
        let max_e = remaining / w;
        // the last variable must absorb all remaining weight
        let range: Box<dyn Iterator<Item = i64>> = if var + 1 == n {
            if remaining % w != 0 {
                return true;
            }
            Box::new(std::iter::once(max_e))
        } else {
            Box::new((0..=max_e).rev())
        };
        for e in range {
            exps.0[var] = e as u16;
            for (r, row) in self.0.grading.iter().enumerate() {
                partial[r] += row[var] * e;
            }
            let keep_going = self.visit_rec(var + 1, remaining - w * e, degree, exps, partial, visit);
            for (r, row) in self.0.grading.iter().enumerate() {
                partial[r] -= row[var] * e;
            }
            exps.0[var] = 0;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// Rank over the rationals of an integer matrix (fraction-free elimination).
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pr);
        for r in rank + 1..a.len() {
            let (p, q) = (a[rank][col], a[r][col]);
            if q == 0 {
                continue;
            }
            let pivot_row = a[rank].clone();
            for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                *x = *x * p - y * q;
            }
            let g = a[r].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
            if g > 1 {
                a[r].iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

struct CoxData {
    base: PolyRing,
    defining: Vec<Polynomial>,
    irrelevant: Vec<Polynomial>,
    defining_gb: OnceLock<Vec<Polynomial>>,
}

/// A graded ring `k[x]/J` together with the generators of its irrelevant ideal.
/// Cloning is cheap.
#[derive(Clone)]
pub struct MultigradedRing(Arc<CoxData>);

impl PartialEq for MultigradedRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.base == other.0.base
                && self.0.defining == other.0.defining
                && self.0.irrelevant == other.0.irrelevant)
    }
}

impl fmt::Debug for MultigradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.base)?;
        if !self.0.defining.is_empty() {
            let j: Vec<String> = self.0.defining.iter().map(|p| p.to_string()).collect();
            write!(f, "/({})", j.join(", "))?;
        }
        Ok(())
    }
}

impl MultigradedRing {
    /// Every element of `defining` and `irrelevant` must be homogeneous and live in `base`.
    pub fn new(base: PolyRing, defining: Vec<Polynomial>, irrelevant: Vec<Polynomial>) -> Result<Self> {
        for f in defining.iter().chain(&irrelevant) {
            if f.ring() != &base {
                return Err(Error::RingMismatch);
            }
            if !f.is_zero() {
                f.multidegree()?;
            }
        }
        let defining = defining.into_iter().filter(|f| !f.is_zero()).collect();
        let irrelevant = irrelevant.into_iter().filter(|f| !f.is_zero()).collect();
        Ok(MultigradedRing(Arc::new(CoxData { base, defining, irrelevant, defining_gb: OnceLock::new() })))
    }

    pub fn poly_ring(&self) -> &PolyRing {
        &self.0.base
    }

    pub fn defining_ideal(&self) -> &[Polynomial] {
        &self.0.defining
    }

    pub fn irrelevant_gens(&self) -> &[Polynomial] {
        &self.0.irrelevant
    }

    pub fn is_quotient(&self) -> bool {
        !self.0.defining.is_empty()
    }

    pub(crate) fn defining_gb_cell(&self) -> &OnceLock<Vec<Polynomial>> {
        &self.0.defining_gb
    }
}
