//! Semilinear actions of a cyclic Galois group on a Cox ring, and the descent of
//! complete-intersection generators into Galois orbits.

use std::fmt;

use crate::cox::{CoxAmbient, StrictCi};
use crate::error::{Error, Result};
use crate::field::{FieldTower, Fq};
use crate::groebner::{defining_gb, reduce, Ideal};
use crate::linalg::{nullspace, rref, PolySpan};
use crate::poly::Polynomial;
use crate::ring::{integer_rank, Monomial, Multidegree, MultigradedRing};

/// A ring automorphism acting on coefficients by `a -> a^(p^e)` and on variables by
/// `x_j -> c_j * x_pi(j)`.
#[derive(Clone)]
pub struct SemilinearAction {
    ring: MultigradedRing,
    frob_power: i64,
    var_map: Vec<(usize, Fq)>,
    order: usize,
}

/// The `n`-th power of an action, flattened.
struct Power {
    frob: i64,
    map: Vec<(usize, Fq)>,
}

impl fmt::Debug for SemilinearAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

impl SemilinearAction {
    /// Validates that the map is a scaled permutation compatible with the grading that
    /// preserves the defining and irrelevant ideals.
    pub fn new(ring: &MultigradedRing, frob_power: i64, var_map: Vec<(usize, Fq)>) -> Result<Self> {
        let base = ring.poly_ring();
        let n = base.nvars();
        let tower = base.tower();
        if var_map.len() != n {
            return Err(Error::InvalidAction(format!("{} variable images given, {n} needed", var_map.len())));
        }
        let mut seen = vec![false; n];
        for (j, &(target, c)) in var_map.iter().enumerate() {
            if target >= n || seen[target] {
                return Err(Error::InvalidAction("variable map is not a permutation".into()));
            }
            seen[target] = true;
            if c.is_zero() || c.0 >= tower.order() {
                return Err(Error::InvalidAction(format!("bad scalar for {}", base.var_names()[j])));
            }
        }
        let frob_power = frob_power.rem_euclid(tower.degree() as i64);

        let grading = base.grading();
        let permuted: Vec<Vec<i64>> =
            grading.iter().map(|row| var_map.iter().map(|&(t, _)| row[t]).collect()).collect();
        let stacked: Vec<Vec<i64>> = grading.iter().chain(&permuted).cloned().collect();
        if integer_rank(&stacked) != integer_rank(grading) {
            return Err(Error::InvalidAction("the permutation does not induce a map on degrees".into()));
        }

        let mut action = SemilinearAction { ring: ring.clone(), frob_power, var_map, order: 0 };
        action.order = action.compute_order()?;

        let dgb = defining_gb(ring);
        if ring.defining_ideal().iter().any(|g| !reduce(&action.act(g, 1), dgb).is_zero()) {
            return Err(Error::InvalidAction("the defining ideal is not preserved".into()));
        }
        let irrelevant = Ideal::from_homogeneous(ring, ring.irrelevant_gens().to_vec());
        for g in ring.irrelevant_gens() {
            if !irrelevant.contains(&action.act(g, 1))? {
                return Err(Error::InvalidAction("the irrelevant ideal is not preserved".into()));
            }
        }
        Ok(action)
    }

    /// Parses images such as `"x1->x2 x2->x1 y1->t*y2"`; unlisted variables are fixed.
    pub fn parse(ring: &MultigradedRing, frob_power: i64, text: &str) -> Result<Self> {
        let base = ring.poly_ring();
        let mut var_map: Vec<(usize, Fq)> = (0..base.nvars()).map(|j| (j, Fq::ONE)).collect();
        let mut assigned = vec![false; base.nvars()];
        for item in text.split_whitespace() {
            let (src, dst) = item
                .split_once("->")
                .ok_or_else(|| Error::InvalidAction(format!("expected `var->image`, found `{item}`")))?;
            let j = base.var_index(src).ok_or_else(|| Error::InvalidAction(format!("unknown variable `{src}`")))?;
            if std::mem::replace(&mut assigned[j], true) {
                return Err(Error::InvalidAction(format!("`{src}` is mapped twice")));
            }
            let image = Polynomial::parse(base, dst)?;
            let [(m, c)] = image.terms() else {
                return Err(Error::InvalidAction(format!("image of `{src}` is not a scaled variable")));
            };
            let Some(target) = m.exponents().iter().position(|&e| e == 1).filter(|_| m.total_degree() == 1) else {
                return Err(Error::InvalidAction(format!("image of `{src}` is not a scaled variable")));
            };
            var_map[j] = (target, *c);
        }
        Self::new(ring, frob_power, var_map)
    }

    pub fn ring(&self) -> &MultigradedRing {
        &self.ring
    }

    /// Exponent `e` of the coefficient automorphism `a -> a^(p^e)`, in `0..d`.
    pub fn frob_power(&self) -> i64 {
        self.frob_power
    }

    pub fn var_map(&self) -> &[(usize, Fq)] {
        &self.var_map
    }

    /// Smallest `n >= 1` with `a^n = id`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Whether the group generated acts faithfully on the coefficient field, so that it is the
    /// Galois group of the coefficient field over the fixed field.
    pub fn is_galois(&self) -> bool {
        let d = self.tower().degree() as i64;
        let coefficient_order = d / gcd(d, self.frob_power);
        self.order as i64 == coefficient_order
    }

    /// Text accepted by [`parse`](Self::parse), listing every non-identity image.
    pub fn describe(&self) -> String {
        let base = self.ring.poly_ring();
        let names = base.var_names();
        let mut parts = Vec::new();
        for (j, &(t, c)) in self.var_map.iter().enumerate() {
            if t == j && c == Fq::ONE {
                continue;
            }
            let image = Polynomial::term(base, Monomial::var(base.nvars(), t), c);
            parts.push(format!("{}->{}", names[j], image));
        }
        parts.join(" ")
    }

    fn tower(&self) -> &FieldTower {
        self.ring.poly_ring().tower()
    }

    fn compose_once(&self, p: &Power) -> Power {
        // a^(n+1)(x_j) = a^n(c_j x_pi(j)) = frob^(n e)(c_j) a^n(x_pi(j))
        let tower = self.tower();
        let map = self
            .var_map
            .iter()
            .map(|&(t, c)| {
                let (t2, c2) = p.map[t];
                (t2, tower.mul(tower.frobenius(c, p.frob), c2))
            })
            .collect();
        Power { frob: (p.frob + self.frob_power).rem_euclid(tower.degree() as i64), map }
    }

    fn power(&self, times: usize) -> Power {
        let n = self.var_map.len();
        let mut p = Power { frob: 0, map: (0..n).map(|j| (j, Fq::ONE)).collect() };
        let times = if self.order > 0 { times % self.order } else { times };
        for _ in 0..times {
            p = self.compose_once(&p);
        }
        p
    }

    fn compute_order(&self) -> Result<usize> {
        let n = self.var_map.len();
        let limit = 1usize << 24;
        let mut p = Power { frob: 0, map: (0..n).map(|j| (j, Fq::ONE)).collect() };
        for k in 1..=limit {
            p = self.compose_once(&p);
            if p.frob == 0 && p.map.iter().enumerate().all(|(j, &(t, c))| t == j && c == Fq::ONE) {
                return Ok(k);
            }
        }
        Err(Error::InvalidAction("action order is too large".into()))
    }

    fn act_with(&self, f: &Polynomial, p: &Power) -> Polynomial {
        let tower = self.tower();
        let n = p.map.len();
        let terms = f
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u16; n];
                let mut coeff = tower.frobenius(*c, p.frob);
                for (j, &e) in m.exponents().iter().enumerate() {
                    if e > 0 {
                        let (t, s) = p.map[j];
                        exps[t] = e;
                        coeff = tower.mul(coeff, tower.pow(s, e as u64));
                    }
                }
                (Monomial::from_exponents(&exps), coeff)
            })
            .collect();
        Polynomial::from_terms(f.ring(), terms)
    }

    fn act(&self, f: &Polynomial, times: usize) -> Polynomial {
        self.act_with(f, &self.power(times))
    }

    /// `a^times(f)`.
    pub fn apply(&self, f: &Polynomial, times: usize) -> Result<Polynomial> {
        if f.ring() != self.ring.poly_ring() {
            return Err(Error::RingMismatch);
        }
        Ok(self.act(f, times))
    }

    /// Image of an effective degree class under `a^times`.
    pub fn map_degree(&self, degree: &Multidegree, times: usize) -> Option<Multidegree> {
        let base = self.ring.poly_ring();
        let m = base.any_monomial_of_degree(degree)?;
        Some(self.map_monomial_degree(&m, times))
    }

    fn map_monomial_degree(&self, m: &Monomial, times: usize) -> Multidegree {
        let p = self.power(times);
        let mut exps = vec![0u16; m.nvars()];
        for (j, &e) in m.exponents().iter().enumerate() {
            exps[p.map[j].0] = e;
        }
        self.ring.poly_ring().degree_of(&Monomial::from_exponents(&exps))
    }

    /// Whether `a` maps every generator of `ideal` back into it.
    pub fn is_invariant_ideal(&self, ideal: &Ideal) -> Result<bool> {
        if ideal.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        for g in ideal.gens() {
            if !ideal.contains(&self.act(g, 1))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// A block of generators whose degree classes form one orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitBlock {
    /// Position of the block's first generator in the reordered list.
    pub start: usize,
    /// Size of the degree orbit.
    pub beta: usize,
    /// Number of generators of each class.
    pub gamma: usize,
    /// `L_1, a(L_1), ..., a^(beta-1)(L_1)`.
    pub classes: Vec<Multidegree>,
}

/// Reordering of generators into orbit blocks, each laid out as `gamma` runs of the
/// classes `L_1..L_beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeOrbitPartition {
    /// `order[k]` is the input index of the generator placed at position `k`.
    pub order: Vec<usize>,
    pub blocks: Vec<OrbitBlock>,
    /// `0 = s_0 < s_1 < ... < s_n = s`: boundaries of the runs.
    pub s_bounds: Vec<usize>,
}

impl DegreeOrbitPartition {
    /// `0 = r_0 < ... < r_m = s`: boundaries of the blocks.
    pub fn r_bounds(&self) -> Vec<usize> {
        let mut out = vec![0];
        out.extend(self.blocks.iter().map(|b| b.start + b.beta * b.gamma));
        out
    }
}

fn generator_degree(f: &Polynomial) -> Result<Multidegree> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    f.multidegree()
}

/// Groups the generators' degree classes into orbits under the action.
pub fn degree_orbits(a: &SemilinearAction, fs: &[Polynomial]) -> Result<DegreeOrbitPartition> {
    let degs = fs.iter().map(generator_degree).collect::<Result<Vec<_>>>()?;
    let mut blocks = Vec::new();
    let mut order = Vec::new();
    let mut s_bounds = vec![0];
    let mut placed = vec![false; fs.len()];
    for i in 0..fs.len() {
        if placed[i] {
            continue;
        }
        let lead = fs[i].leading_monomial().unwrap();
        let mut classes = vec![degs[i].clone()];
        for k in 1..a.order() {
            let c = a.map_monomial_degree(lead, k);
            if c == classes[0] {
                break;
            }
            classes.push(c);
        }
        let members: Vec<Vec<usize>> =
            classes.iter().map(|c| (0..fs.len()).filter(|&j| &degs[j] == c).collect()).collect();
        let gamma = members[0].len();
        if let Some((c, m)) = classes.iter().zip(&members).find(|(_, m)| m.len() != gamma) {
            return Err(Error::DegreeMismatch(format!(
                "class {c} occurs {} times but its conjugate {} occurs {gamma} times",
                m.len(),
                classes[0]
            )));
        }
        let start = order.len();
        for j in 0..gamma {
            for m in &members {
                order.push(m[j]);
                placed[m[j]] = true;
            }
            s_bounds.push(order.len());
        }
        blocks.push(OrbitBlock { start, beta: classes.len(), gamma, classes });
    }
    Ok(DegreeOrbitPartition { order, blocks, s_bounds })
}

/// Span of `m * f` over generators `f` and monomials `m` with `deg(m f) = degree`, reduced
/// modulo the defining ideal. With `strict`, only generators of degree strictly below.
fn piece_span(ring: &MultigradedRing, gens: &[Polynomial], degree: &Multidegree, strict: bool) -> PolySpan {
    let base = ring.poly_ring();
    let dgb = defining_gb(ring);
    let mut span = PolySpan::new(base);
    for f in gens {
        let Ok(df) = f.multidegree() else { continue };
        if strict && &df == degree {
            continue;
        }
        for m in base.monomials_of_degree(&(degree - &df)) {
            span.insert(&reduce(&f.mul_term(Fq::ONE, &m), dgb));
        }
    }
    span
}

/// Echelon basis of the graded piece `I_L`, spanned by multiples of the generators.
pub fn graded_piece_basis(ideal: &Ideal, degree: &Multidegree) -> Vec<Polynomial> {
    piece_span(ideal.ring(), ideal.gens(), degree, false).basis()
}

/// Echelon basis of `(sum_{L' < L} I_L' R)_L`.
pub fn lower_piece_basis(ideal: &Ideal, degree: &Multidegree) -> Vec<Polynomial> {
    piece_span(ideal.ring(), ideal.gens(), degree, true).basis()
}

/// Incrementally echelonized vectors over a prime field.
struct DigitSpan<'a> {
    field: &'a FieldTower,
    rows: Vec<(usize, Vec<Fq>)>,
}

impl DigitSpan<'_> {
    fn reduce(&self, v: &[Fq]) -> Vec<Fq> {
        let f = self.field;
        let mut v = v.to_vec();
        for (pc, row) in &self.rows {
            let c = v[*pc];
            if !c.is_zero() {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        v
    }

    fn insert(&mut self, v: &[Fq]) -> bool {
        let v = self.reduce(v);
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = self.field.inv(v[pc]).unwrap();
        let v: Vec<Fq> = v.iter().map(|&x| self.field.mul(x, inv)).collect();
        self.rows.push((pc, v));
        true
    }
}

/// Generates the subfield of elements fixed by `a -> a^(p^g)`.
fn primitive_element(tower: &FieldTower, g: usize) -> Fq {
    let fixed = |x: Fq, k: usize| tower.frobenius(x, k as i64) == x;
    tower
        .elements()
        .find(|&x| fixed(x, g) && (1..g).filter(|k| g.is_multiple_of(*k)).all(|k| !fixed(x, k)))
        .expect("finite fields have primitive elements")
}

/// Basis, over the fixed field of `a^subgroup_index`, of the vectors of `span(V)` fixed by
/// `a^subgroup_index`.
pub fn fixed_space(a: &SemilinearAction, v: &[Polynomial], subgroup_index: usize) -> Result<Vec<Polynomial>> {
    let base = a.ring.poly_ring();
    if v.iter().any(|f| f.ring() != base) {
        return Err(Error::RingMismatch);
    }
    let tower = base.tower();
    let (p, d) = (tower.characteristic(), tower.degree());
    let sigma = a.power(subgroup_index);
    let span = PolySpan::from_polys(base, v);
    let basis = span.basis();
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    for b in &basis {
        if !span.contains(&a.act_with(b, &sigma)) {
            return Err(Error::NotClosed);
        }
    }
    let digit = |l: usize| {
        let mut c = vec![0; d];
        c[l] = 1;
        tower.from_coeffs(&c)
    };

    // unknowns: the GF(p)-digits of the coordinates; equations: digits of sigma(v) - v
    let dim = basis.len();
    let prime = FieldTower::prime(p).expect("characteristic is prime");
    let mut columns = Vec::with_capacity(dim * d);
    for b in &basis {
        for l in 0..d {
            let w = b.scale(digit(l));
            let diff = &a.act_with(&w, &sigma) - &w;
            let coords = span.coordinates(&diff).ok_or(Error::NotClosed)?;
            columns.push(coords.iter().flat_map(|&c| tower.coeffs(c)).map(Fq).collect::<Vec<_>>());
        }
    }
    let rows: Vec<Vec<Fq>> = (0..dim * d).map(|r| columns.iter().map(|col| col[r]).collect()).collect();
    let solutions = nullspace(&prime, &rows, dim * d);
    let to_poly = |lam: &[Fq]| {
        let mut acc = Polynomial::zero(base);
        for (k, b) in basis.iter().enumerate() {
            let c = tower.from_coeffs(&lam[k * d..(k + 1) * d].iter().map(|x| x.0).collect::<Vec<_>>());
            acc = &acc + &b.scale(c);
        }
        acc
    };
    let fixed: Vec<Polynomial> = solutions.iter().map(|lam| to_poly(lam)).collect();

    // canonical GF(p)-echelon form over (monomial descending, digit ascending)
    let mut monos: Vec<Monomial> = basis.iter().flat_map(|b| b.terms().iter().map(|(m, _)| m.clone())).collect();
    monos.sort_by(|x, y| base.cmp_monomials(y, x));
    monos.dedup();
    let digits =
        |f: &Polynomial| -> Vec<Fq> { monos.iter().flat_map(|m| tower.coeffs(f.coeff_of(m))).map(Fq).collect() };
    let mut echelon: Vec<Vec<Fq>> = fixed.iter().map(digits).collect();
    rref(&prime, &mut echelon);
    let from_digits = |row: &[Fq]| {
        let terms = monos
            .iter()
            .enumerate()
            .map(|(i, m)| {
                (m.clone(), tower.from_coeffs(&row[i * d..(i + 1) * d].iter().map(|x| x.0).collect::<Vec<_>>()))
            })
            .collect();
        Polynomial::from_terms(base, terms)
    };

    // keep vectors independent over the fixed field GF(p^g)
    let g = gcd(d as i64, sigma.frob) as usize;
    let theta = primitive_element(tower, g);
    let mut k_span = DigitSpan { field: &prime, rows: Vec::new() };
    let mut out = Vec::new();
    for row in &echelon {
        let w = from_digits(row);
        if k_span.reduce(row).iter().all(|x| x.is_zero()) {
            continue;
        }
        let mut power = Fq::ONE;
        for _ in 0..g {
            k_span.insert(&digits(&w.scale(power)));
            power = tower.mul(power, theta);
        }
        debug_assert!(a.act_with(&w, &sigma) == w);
        out.push(w);
    }
    Ok(out)
}

/// Generators rearranged into Galois orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentResult {
    pub new_gens: Vec<Polynomial>,
    /// `0 = s_0 < ... < s_n = s`; each run `new_gens[s_i..s_{i+1}]` is one orbit.
    pub orbit_blocks: Vec<usize>,
    /// `([H_i], [H'_i])` per position of the reordered list.
    pub degree_log: Vec<(Multidegree, Multidegree)>,
    /// `input_order[k]` is the input index of the generator that position `k` replaces.
    pub input_order: Vec<usize>,
}

impl DescentResult {
    pub fn orbits(&self) -> Vec<&[Polynomial]> {
        self.orbit_blocks.windows(2).map(|w| &self.new_gens[w[0]..w[1]]).collect()
    }
}

/// Whether every power of the action permutes `block` up to nonzero scalars.
pub fn is_orbit_block(a: &SemilinearAction, block: &[Polynomial]) -> bool {
    let normalized: Vec<Polynomial> = block.iter().map(|f| f.monic()).collect();
    (1..a.order()).all(|k| {
        let images: Vec<Polynomial> = normalized.iter().map(|f| a.act(f, k).monic()).collect();
        images.iter().all(|h| normalized.contains(h)) && normalized.iter().all(|h| images.contains(h))
    })
}

fn ideal_of(ring: &MultigradedRing, gens: &[Polynomial]) -> Ideal {
    Ideal::from_homogeneous(ring, gens.to_vec())
}

/// Replaces the generators of an invariant strict complete intersection by generators that
/// split into Galois orbits, keeping every degree class.
pub fn descend(amb: &CoxAmbient, a: &SemilinearAction, fs: &[Polynomial]) -> Result<DescentResult> {
    let ring = amb.ring();
    if a.ring() != ring {
        return Err(Error::RingMismatch);
    }
    if !a.is_galois() {
        return Err(Error::InvalidAction(format!(
            "the action has order {} but acts on coefficients with a different order",
            a.order()
        )));
    }
    let original = amb.ideal(fs)?;
    if !a.is_invariant_ideal(&original)? {
        return Err(Error::NotInvariant);
    }
    if amb.is_strict_ci(fs)? != StrictCi::Strict {
        return Err(Error::NotStrict);
    }
    let partition = degree_orbits(a, fs)?;
    let mut gens: Vec<Polynomial> = partition.order.iter().map(|&i| fs[i].clone()).collect();
    let input_degrees: Vec<Multidegree> = gens.iter().map(|f| f.multidegree()).collect::<Result<_>>()?;

    // make each generator fixed by the stabilizer of its class
    for block in &partition.blocks {
        let beta = block.beta;
        for t in block.start..block.start + beta * block.gamma {
            let f = gens[t].clone();
            if a.act(&f, beta) == f {
                continue;
            }
            let orbit: Vec<Polynomial> = (0..a.order() / beta).map(|k| a.act(&f, k * beta)).collect();
            let others: Vec<Polynomial> =
                gens.iter().enumerate().filter(|(i, _)| *i != t).map(|(_, g)| g.clone()).collect();
            let rest = ideal_of(ring, &others);
            let candidates = fixed_space(a, &orbit, beta)?;
            let mut replacement = None;
            for c in candidates {
                if !rest.normal_form(&c)?.is_zero() {
                    replacement = Some(c);
                    break;
                }
            }
            let Some(replacement) = replacement else {
                return Err(Error::Inconsistent(format!("every fixed vector near {f} lies in the other generators")));
            };
            gens[t] = replacement;
            if !ideal_of(ring, &gens).equals(&original)? {
                return Err(Error::Inconsistent(format!("replacing {f} changed the ideal")));
            }
        }
    }

    // assemble orbits block by block
    let current = ideal_of(ring, &gens);
    for block in &partition.blocks {
        let (beta, gamma, start) = (block.beta, block.gamma, block.start);
        let at = |i: usize, j: usize| start + j * beta + i;
        let done = (0..gamma).all(|j| {
            let f1 = &gens[at(0, j)];
            a.act(f1, beta) == *f1 && (1..beta).all(|i| a.act(f1, i) == gens[at(i, j)])
        });
        if done {
            continue;
        }
        for (i, class) in block.classes.iter().enumerate() {
            let piece = piece_span(ring, current.gens(), class, false);
            let mut lower = piece_span(ring, current.gens(), class, true);
            let delta = lower.dim();
            for j in 0..gamma {
                lower.insert(&reduce(&gens[at(i, j)], defining_gb(ring)));
            }
            if piece.dim() != gamma + delta || lower.dim() != piece.dim() {
                return Err(Error::Inconsistent(format!(
                    "graded piece {class} has dimension {} but the generators and lower piece span {}",
                    piece.dim(),
                    lower.dim()
                )));
            }
        }
        for j in 0..gamma {
            let f1 = gens[at(0, j)].clone();
            for i in 1..beta {
                gens[at(i, j)] = a.act(&f1, i);
            }
        }
    }

    let result = DescentResult {
        degree_log: input_degrees
            .into_iter()
            .zip(&gens)
            .map(|(h, g)| g.multidegree().map(|d| (h, d)))
            .collect::<Result<_>>()?,
        new_gens: gens,
        orbit_blocks: partition.s_bounds.clone(),
        input_order: partition.order.clone(),
    };
    if !ideal_of(ring, &result.new_gens).equals(&original)? {
        return Err(Error::Inconsistent("the new generators define a different ideal".into()));
    }
    if result.degree_log.iter().any(|(h, g)| h != g) {
        return Err(Error::Inconsistent("a degree class changed".into()));
    }
    if !result.orbits().iter().all(|b| is_orbit_block(a, b)) {
        return Err(Error::Inconsistent("a block is not an orbit".into()));
    }
    Ok(result)
}
