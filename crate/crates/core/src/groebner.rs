//! Buchberger's algorithm and the ideal toolkit built on it.
//!
//! Reduced Gröbner bases are unique for a fixed monomial order, which makes them the canonical
//! form used for ideal equality, for printing and for the golden tests. Selection follows the
//! normal strategy (smallest lcm first) and useless pairs are discarded with the
//! Gebauer–Möller update, which covers both Buchberger criteria.
//!
//! In a quotient ring `k[x]/J` every ideal is stored through its preimage: the generators of
//! `J` are adjoined before any basis computation.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::Fq;
use crate::poly::Polynomial;
use crate::ring::{Monomial, MultigradedRing, PolyRing};

/// Leading-monomial data used for fast divisibility rejection.
struct Lead {
    mono: Monomial,
    mask: u64,
}

impl Lead {
    fn of(p: &Polynomial) -> Self {
        let mono = p.leading_monomial().expect("nonzero").clone();
        let mask = mono.support_mask();
        Lead { mono, mask }
    }

    fn divides(&self, m: &Monomial, m_mask: u64) -> bool {
        self.mask & !m_mask == 0 && self.mono.divides(m)
    }
}

/// Remainder of `f` under full multivariate division by monic polynomials `basis`.
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let leads: Vec<Lead> = basis.iter().map(Lead::of).collect();
    reduce_with(f, basis, &leads, None)
}

fn reduce_with(f: &Polynomial, basis: &[Polynomial], leads: &[Lead], active: Option<&[bool]>) -> Polynomial {
    let ring = f.ring().clone();
    let mut rest = f.clone();
    let mut remainder: Vec<(Monomial, Fq)> = Vec::new();
    while let Some((m, c)) = rest.terms().first().cloned() {
        let m_mask = m.support_mask();
        let divisor = leads.iter().enumerate().find(|(i, l)| active.is_none_or(|a| a[*i]) && l.divides(&m, m_mask));
        match divisor {
            Some((i, l)) => {
                let q = l.mono.quotient_of(&m).unwrap();
                rest = rest.sub_scaled(c, &q, &basis[i]);
            }
            None => {
                remainder.push((m, c));
                rest = drop_lead(&rest);
            }
        }
    }
    Polynomial::from_sorted_terms(&ring, remainder)
}

fn drop_lead(p: &Polynomial) -> Polynomial {
    Polynomial::from_sorted_terms(p.ring(), p.terms()[1..].to_vec())
}

fn spoly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = lf.lcm(lg);
    let a = f.mul_term(Fq::ONE, &lf.quotient_of(&l).unwrap());
    a.sub_scaled(Fq::ONE, &lg.quotient_of(&l).unwrap(), g)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Buchberger {
    ring: PolyRing,
    polys: Vec<Polynomial>,
    leads: Vec<Lead>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Buchberger {
    /// Gebauer–Möller installation of a new monic basis element.
    fn update(&mut self, h: Polynomial) {
        let hi = self.polys.len();
        let hl = Lead::of(&h);
        let lh = hl.mono.clone();

        let candidates: Vec<(usize, Monomial, bool)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lg = &self.leads[g].mono;
                (g, lh.lcm(lg), lh.is_coprime(lg))
            })
            .collect();
        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, (g, l, coprime)) in candidates.iter().enumerate() {
            let redundant = !coprime
                && (candidates[idx + 1..].iter().any(|(_, l2, _)| l2.divides(l))
                    || kept.iter().any(|(_, l2, _)| l2.divides(l)));
            if !redundant {
                kept.push((*g, l.clone(), *coprime));
            }
        }
        // among pairs with equal lcm keep one; then drop coprime ones (product criterion)
        let mut fresh: Vec<Pair> = Vec::new();
        let mut seen: Vec<Monomial> = Vec::new();
        for (g, l, coprime) in kept {
            if seen.contains(&l) {
                continue;
            }
            seen.push(l.clone());
            if !coprime {
                fresh.push(Pair { i: g, j: hi, lcm: l });
            }
        }
        // old pairs made redundant by h
        let leads = &self.leads;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm) && leads[p.i].mono.lcm(&lh) != p.lcm && leads[p.j].mono.lcm(&lh) != p.lcm)
        });
        self.pairs.extend(fresh);
        for g in 0..hi {
            if self.active[g] && lh.divides(&self.leads[g].mono) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.leads.push(hl);
        self.active.push(true);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let ring = &self.ring;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            ring.cmp_monomials(&pa.lcm, &pb.lcm).then((pa.j, pa.i).cmp(&(pb.j, pb.i)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn reduce(&self, f: &Polynomial) -> Polynomial {
        reduce_with(f, &self.polys, &self.leads, Some(&self.active))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`: monic, interreduced and sorted
/// by decreasing leading monomial. The zero ideal gives an empty basis, the unit ideal `[1]`.
pub fn groebner_basis(gens: &[Polynomial]) -> Vec<Polynomial> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    if let Some(u) = gens.iter().find(|g| g.is_unit()) {
        return vec![u.monic()];
    }
    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    input.sort_by(|a, b| ring.cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    let mut bb =
        Buchberger { ring: ring.clone(), polys: Vec::new(), leads: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for f in input {
        let h = bb.reduce(&f);
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return vec![Polynomial::one(&ring)];
        }
        bb.update(h.monic());
    }
    while let Some(pair) = bb.next_pair() {
        let s = spoly(&bb.polys[pair.i], &bb.polys[pair.j]);
        let h = bb.reduce(&s);
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return vec![Polynomial::one(&ring)];
        }
        bb.update(h.monic());
    }

    let mut basis: Vec<Polynomial> = bb.polys.into_iter().zip(bb.active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
    basis.sort_by(|a, b| ring.cmp_monomials(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    // tail-reduce each element by the others
    for i in 0..basis.len() {
        let others: Vec<Polynomial> =
            basis.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
        let lead = Polynomial::from_sorted_terms(&ring, basis[i].terms()[..1].to_vec());
        let tail = drop_lead(&basis[i]);
        basis[i] = &lead + &reduce(&tail, &others);
    }
    basis
}

/// Whether every S-polynomial of `basis` reduces to zero (Buchberger's criterion).
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    let monic: Vec<Polynomial> = basis.iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    for i in 0..monic.len() {
        for j in i + 1..monic.len() {
            if !reduce(&spoly(&monic[i], &monic[j]), &monic).is_zero() {
                return false;
            }
        }
    }
    true
}

/// A homogeneous ideal of a [`MultigradedRing`], with its reduced Gröbner basis computed on
/// first use. In a quotient ring the basis is that of `gens + J`.
pub struct Ideal {
    ring: MultigradedRing,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), gb }
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Reduced basis of the defining ideal, cached on the ring.
pub(crate) fn defining_gb(ring: &MultigradedRing) -> &[Polynomial] {
    ring.defining_gb_cell().get_or_init(|| groebner_basis(ring.defining_ideal()))
}

impl Ideal {
    /// Generators must be homogeneous elements of the ring's polynomial ring.
    pub fn new(ring: &MultigradedRing, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.ring() != ring.poly_ring() {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                g.multidegree()?;
            }
        }
        Ok(Self::from_homogeneous(ring, gens))
    }

    pub fn parse(ring: &MultigradedRing, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|s| Polynomial::parse(ring.poly_ring(), s)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn zero(ring: &MultigradedRing) -> Self {
        Self::from_homogeneous(ring, Vec::new())
    }

    pub(crate) fn from_homogeneous(ring: &MultigradedRing, gens: Vec<Polynomial>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring: ring.clone(), gens, gb: OnceLock::new() }
    }

    /// An ideal whose reduced basis is already known.
    fn from_basis(ring: &MultigradedRing, basis: Vec<Polynomial>) -> Self {
        debug_assert!(basis.iter().all(|g| g.is_homogeneous()));
        let gb = OnceLock::new();
        let _ = gb.set(basis.clone());
        Ideal { ring: ring.clone(), gens: basis, gb }
    }

    pub fn ring(&self) -> &MultigradedRing {
        &self.ring
    }

    pub fn poly_ring(&self) -> &PolyRing {
        self.ring.poly_ring()
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Gröbner basis of `gens + J`.
    pub fn gb(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| {
            let mut all = self.gens.clone();
            all.extend(self.ring.defining_ideal().iter().cloned());
            groebner_basis(&all)
        })
    }

    fn check_ring(&self, f: &Polynomial) -> Result<()> {
        if f.ring() != self.poly_ring() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    fn check_same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Remainder modulo the reduced basis; zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_ring(f)?;
        Ok(reduce(f, self.gb()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn is_unit(&self) -> bool {
        self.gb().first().is_some_and(|g| g.is_unit())
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self.gens.iter().all(|g| reduce(g, other.gb()).is_zero()))
    }

    /// Equality of ideals, decided by comparing reduced bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self.gb() == other.gb())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::from_homogeneous(&self.ring, gens))
    }

    /// Basis elements that are not redundant modulo `J`: the reduced basis itself for a
    /// polynomial ring, otherwise a greedy minimal subset generating the ideal together
    /// with `J`.
    pub fn gens_mod_defining(&self) -> Vec<Polynomial> {
        let mut kept: Vec<Polynomial> =
            self.gb().iter().filter(|g| !reduce(g, defining_gb(&self.ring)).is_zero()).cloned().collect();
        if !self.ring.is_quotient() {
            return kept;
        }
        let mut i = 0;
        while i < kept.len() {
            let mut rest: Vec<Polynomial> =
                kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
            rest.extend(self.ring.defining_ideal().iter().cloned());
            if reduce(&kept[i], &groebner_basis(&rest)).is_zero() {
                kept.remove(i);
            } else {
                i += 1;
            }
        }
        kept
    }

    /// `(I : g^oo)`, computed as `(I + (1 - z g)) ∩ k[x]` with an auxiliary variable `z`
    /// eliminated by a block order.
    pub fn saturate_by(&self, g: &Polynomial) -> Result<Ideal> {
        self.check_ring(g)?;
        let base = self.poly_ring();
        let ext = base.with_leading_auxiliaries(&["_z"]);
        let z = Polynomial::var(&ext, 0);
        let mut gens: Vec<Polynomial> = self.gb().iter().map(|f| f.embed(&ext, 1)).collect();
        gens.push(&Polynomial::one(&ext) - &(&z * &g.embed(&ext, 1)));
        Ok(self.eliminated(&groebner_basis(&gens)))
    }

    /// `I ∩ K`, computed as `(t I + (1 - t) K) ∩ k[x]`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let ext = self.poly_ring().with_leading_auxiliaries(&["_t"]);
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens: Vec<Polynomial> = self.gb().iter().map(|f| &t * &f.embed(&ext, 1)).collect();
        gens.extend(other.gb().iter().map(|f| &one_minus_t * &f.embed(&ext, 1)));
        Ok(self.eliminated(&groebner_basis(&gens)))
    }

    fn eliminated(&self, ext_basis: &[Polynomial]) -> Ideal {
        let base = self.poly_ring();
        let kept: Vec<Polynomial> = ext_basis.iter().filter_map(|f| f.contract(base, 1)).collect();
        let mut all = kept;
        all.extend(self.ring.defining_ideal().iter().cloned());
        Ideal::from_basis(&self.ring, groebner_basis(&all))
    }

    /// `(I : G^oo) = ⋂_i (I : g_i^oo)` over the generators `g_i` of `direction`.
    pub fn saturate(&self, direction: &Ideal) -> Result<Ideal> {
        self.check_same_ring(direction)?;
        let dgb = defining_gb(&self.ring);
        let dirs: Vec<&Polynomial> = direction.gens.iter().filter(|g| !reduce(g, dgb).is_zero()).collect();
        if dirs.is_empty() {
            return Err(Error::ZeroDirection);
        }
        let mut acc: Option<Ideal> = None;
        for g in dirs {
            let sat = self.saturate_by(g)?;
            acc = Some(match acc {
                None => sat,
                Some(a) if sat.is_unit() || a.is_subset_of(&sat)? => a,
                Some(a) if a.is_unit() || sat.is_subset_of(&a)? => sat,
                Some(a) => a.intersect(&sat)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Krull dimension of `R/I`: the largest set of variables containing the support of no
    /// leading monomial of the basis.
    pub fn dimension(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let masks: Vec<u64> = self.gb().iter().map(|g| g.leading_monomial().unwrap().support_mask()).collect();
        Ok(max_independent_set(self.poly_ring().nvars(), &masks))
    }

    /// `dim R - dim R/I`, where `dim R` accounts for the defining ideal.
    pub fn height(&self) -> Result<usize> {
        let ambient = Ideal::zero(&self.ring).dimension()?;
        Ok(ambient - self.dimension()?)
    }
}

/// Largest `S ⊆ {0..n}` such that no mask is a subset of `S`.
pub(crate) fn max_independent_set(n: usize, masks: &[u64]) -> usize {
    fn rec(var: usize, n: usize, chosen: u64, size: usize, masks: &[u64], best: &mut usize) {
        if size + (n - var) <= *best {
            return;
        }
        if var == n {
            *best = size;
            return;
        }
        let with = chosen | 1 << var;
        if !masks.iter().any(|&m| m & !with == 0) {
            rec(var + 1, n, with, size + 1, masks, best);
        }
        rec(var + 1, n, chosen, size, masks, best);
    }
    let mut best = 0;
    rec(0, n, 0, 0, masks, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldTower;
    use crate::ring::MonomialOrder;
    use std::sync::Arc;

    fn p1p1(p: u64) -> MultigradedRing {
        let base = PolyRing::new(
            ["x0", "x1", "y0", "y1"].map(String::from).to_vec(),
            Arc::new(FieldTower::prime(p).unwrap()),
            vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        let irr = ["x0*y0", "x0*y1", "x1*y0", "x1*y1"].iter().map(|s| Polynomial::parse(&base, s).unwrap()).collect();
        MultigradedRing::new(base, vec![], irr).unwrap()
    }

    fn standard(p: u64) -> MultigradedRing {
        let base = PolyRing::new(
            ["x0", "x1", "y0", "y1"].map(String::from).to_vec(),
            Arc::new(FieldTower::prime(p).unwrap()),
            vec![vec![1, 1, 1, 1]],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        MultigradedRing::new(base, vec![], vec![]).unwrap()
    }

    fn ideal(r: &MultigradedRing, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    fn strs(ps: &[Polynomial]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    fn irrelevant(r: &MultigradedRing) -> Ideal {
        Ideal::new(r, r.irrelevant_gens().to_vec()).unwrap()
    }

    #[test]
    fn basis_examples() {
        let r = p1p1(101);
        assert_eq!(strs(ideal(&r, &["x0*y0", "x1*y1"]).gb()), ["x0*y0", "x1*y1"]);
        assert_eq!(strs(ideal(&standard(101), &["x0", "x0+y0"]).gb()), ["x0", "y0"]);
        assert_eq!(strs(ideal(&r, &["x0*y0^2", "x1^2*y1"]).gb()), ["x0*y0^2", "x1^2*y1"]);
        assert!(ideal(&r, &[]).gb().is_empty());
    }

    #[test]
    fn normal_form_examples() {
        let r = p1p1(101);
        let i = ideal(&r, &["x0*y0", "x1*y1"]);
        let p = |s: &str| Polynomial::parse(r.poly_ring(), s).unwrap();
        assert!(i.normal_form(&p("x0*y0+x1*y1")).unwrap().is_zero());
        assert_eq!(i.normal_form(&p("x0*x1")).unwrap(), p("x0*x1"));
        assert_eq!(ideal(&r, &["x0"]).normal_form(&p("1")).unwrap(), p("1"));
    }

    #[test]
    fn equality_examples() {
        let r = p1p1(101);
        let s = standard(101);
        assert!(ideal(&s, &["x0", "y0"]).equals(&ideal(&s, &["x0+y0", "y0"])).unwrap());
        let i = ideal(&r, &["x0*y0", "x1*y1"]);
        assert!(!i.equals(&i.saturate(&irrelevant(&r)).unwrap()).unwrap());
        assert!(ideal(&r, &[]).equals(&ideal(&r, &["0"])).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let r = p1p1(101);
        let g = irrelevant(&r);
        let p = |s: &str| Polynomial::parse(r.poly_ring(), s).unwrap();
        let sat = ideal(&r, &["x0*y0", "x1*y1"]).saturate(&g).unwrap();
        assert!(sat.contains(&p("x0*x1")).unwrap());
        assert_eq!(strs(sat.gb()), ["x0*x1", "x0*y0", "x1*y1", "y0*y1"]);
        let sat = ideal(&r, &["x0", "x1*y0"]).saturate(&g).unwrap();
        assert_eq!(strs(sat.gb()), ["x0", "y0"]);
        let sat = ideal(&r, &["x0*y0^2", "x1^2*y1"]).saturate(&g).unwrap();
        assert!(sat.contains(&p("x0^2*x1^2")).unwrap());
        assert_eq!(ideal(&r, &["x0"]).saturate(&ideal(&r, &[])).unwrap_err(), Error::ZeroDirection);
    }

    #[test]
    fn dimension_and_height_examples() {
        let r = p1p1(101);
        assert_eq!(ideal(&r, &["x0", "y0"]).dimension().unwrap(), 2);
        assert_eq!(ideal(&r, &["x0*y0", "x1*y1"]).dimension().unwrap(), 2);
        assert_eq!(ideal(&r, &[]).dimension().unwrap(), 4);
        assert_eq!(ideal(&r, &["x0*y0", "x1*y1"]).height().unwrap(), 2);
        assert_eq!(irrelevant(&r).height().unwrap(), 2);
        assert_eq!(ideal(&r, &["x0"]).height().unwrap(), 1);
        let unit = Ideal::new(&r, vec![Polynomial::one(r.poly_ring())]).unwrap();
        assert_eq!(unit.dimension(), Err(Error::UnitIdeal));
    }

    #[test]
    fn inhomogeneous_generators_rejected() {
        let r = p1p1(101);
        assert!(matches!(Ideal::parse(&r, &["x0*y0+x1"]), Err(Error::Inhomogeneous { .. })));
    }

    #[test]
    fn independent_sets_match_brute_force() {
        // supports {x0,y0}, {x1,y1} in 4 variables
        let masks = [0b0101, 0b1010];
        let brute =
            (0u64..16).filter(|s| masks.iter().all(|m| m & !s != 0)).map(|s| s.count_ones() as usize).max().unwrap();
        assert_eq!(max_independent_set(4, &masks), brute);
        assert_eq!(brute, 2);
    }
}
