//! Ambient spaces given by their Cox rings, and the complete-intersection tests on them.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldTower;
use crate::groebner::{reduce, Ideal};
use crate::poly::Polynomial;
use crate::ring::{integer_rank, MonomialOrder, MultigradedRing, PolyRing};

/// How an ambient was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AmbientKind {
    ProductProjective(Vec<usize>),
    SegreP1P1,
    Custom,
}

/// A multigraded Cox ring together with its irrelevant ideal.
#[derive(Clone, Debug)]
pub struct CoxAmbient {
    ring: MultigradedRing,
    kind: AmbientKind,
}

/// Outcome of [`CoxAmbient::is_strict_ci`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrictCi {
    Strict,
    /// An element of the saturation outside the ideal.
    NotStrict {
        witness: Polynomial,
    },
    NotCi {
        height: usize,
        expected: usize,
    },
}

const FACTOR_LETTERS: [&str; 6] = ["x", "y", "z", "w", "u", "v"];

fn default_names(dims: &[usize]) -> Vec<String> {
    let mut names = Vec::new();
    for (i, &n) in dims.iter().enumerate() {
        for j in 0..=n {
            names.push(match FACTOR_LETTERS.get(i) {
                Some(l) if dims.len() <= FACTOR_LETTERS.len() => format!("{l}{j}"),
                _ => format!("x{i}_{j}"),
            });
        }
    }
    names
}

impl CoxAmbient {
    /// `P^{n_1} x ... x P^{n_m}` with variables `x0..xn1, y0..yn2, ...`.
    pub fn product_projective(dims: &[usize], tower: Arc<FieldTower>) -> Result<Self> {
        Self::product_projective_named(dims, tower, default_names(dims))
    }

    /// As [`product_projective`](Self::product_projective) with caller-chosen variable names,
    /// listed factor by factor.
    pub fn product_projective_named(dims: &[usize], tower: Arc<FieldTower>, names: Vec<String>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidRing("a product needs at least one factor".into()));
        }
        if let Some(i) = dims.iter().position(|&n| n == 0) {
            return Err(Error::InvalidRing(format!("factor {} has dimension 0", i + 1)));
        }
        let nvars: usize = dims.iter().map(|n| n + 1).sum();
        if names.len() != nvars {
            return Err(Error::InvalidRing(format!("{} variable names given, {nvars} needed", names.len())));
        }
        let mut grading = vec![vec![0; nvars]; dims.len()];
        let mut blocks = Vec::new();
        let mut start = 0;
        for (i, &n) in dims.iter().enumerate() {
            grading[i][start..=start + n].fill(1);
            blocks.push(start..start + n + 1);
            start += n + 1;
        }
        let base = PolyRing::new(names, tower, grading, MonomialOrder::Grevlex)?;
        // one variable from each factor, in lexicographic order of the index tuple
        let mut irrelevant = vec![Polynomial::one(&base)];
        for block in blocks {
            irrelevant = irrelevant
                .iter()
                .flat_map(|g| block.clone().map(move |j| (g.clone(), j)))
                .map(|(g, j)| &g * &Polynomial::var(&base, j))
                .collect();
        }
        let ring = MultigradedRing::new(base, Vec::new(), irrelevant)?;
        Ok(CoxAmbient { ring, kind: AmbientKind::ProductProjective(dims.to_vec()) })
    }

    /// The quadric cone `z00 z11 = z01 z10` with all variables of degree 1.
    pub fn segre_p1p1(tower: Arc<FieldTower>) -> Result<Self> {
        let names = ["z00", "z01", "z10", "z11"].map(String::from).to_vec();
        let base = PolyRing::new(names, tower, vec![vec![1; 4]], MonomialOrder::Grevlex)?;
        let quadric = Polynomial::parse(&base, "z00*z11-z01*z10")?;
        let irrelevant = (0..4).map(|i| Polynomial::var(&base, i)).collect();
        let ring = MultigradedRing::new(base, vec![quadric], irrelevant)?;
        Ok(CoxAmbient { ring, kind: AmbientKind::SegreP1P1 })
    }

    /// Wraps an arbitrary ring. The irrelevant ideal must be proper and nonzero modulo `J`.
    pub fn custom(ring: MultigradedRing) -> Result<Self> {
        let amb = CoxAmbient { ring, kind: AmbientKind::Custom };
        let g = amb.irrelevant_ideal();
        if g.is_unit() {
            return Err(Error::InvalidRing("the irrelevant ideal is the unit ideal".into()));
        }
        if g.height()? == 0 {
            return Err(Error::InvalidRing("the irrelevant ideal has height 0".into()));
        }
        Ok(amb)
    }

    pub fn ring(&self) -> &MultigradedRing {
        &self.ring
    }

    pub fn poly_ring(&self) -> &PolyRing {
        self.ring.poly_ring()
    }

    pub fn kind(&self) -> &AmbientKind {
        &self.kind
    }

    pub fn irrelevant_ideal(&self) -> Ideal {
        Ideal::from_homogeneous(&self.ring, self.ring.irrelevant_gens().to_vec())
    }

    /// Dimension of the variety: `dim R/J` minus the rank of the grading.
    pub fn variety_dimension(&self) -> usize {
        let dim = Ideal::zero(&self.ring).dimension().expect("the zero ideal is proper");
        dim - integer_rank(self.poly_ring().grading())
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        Polynomial::parse(self.poly_ring(), text)
    }

    pub fn parse_all(&self, texts: &[&str]) -> Result<Vec<Polynomial>> {
        texts.iter().map(|t| self.parse(t)).collect()
    }

    pub fn ideal(&self, gens: &[Polynomial]) -> Result<Ideal> {
        Ideal::new(&self.ring, gens.to_vec())
    }

    /// The ideal of the subscheme cut out by `I`: its saturation by the irrelevant ideal.
    pub fn subscheme_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        ideal.saturate(&self.irrelevant_ideal())
    }

    fn check_generators(&self, fs: &[Polynomial]) -> Result<Ideal> {
        let ideal = self.ideal(fs)?;
        let dgb = crate::groebner::defining_gb(&self.ring);
        for f in fs {
            if reduce(f, dgb).is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            if f.multidegree()?.is_zero() {
                return Err(Error::ConstantGenerator(f.to_string()));
            }
        }
        Ok(ideal)
    }

    /// Height of the ideal generated by `fs` (relative to `J`); `fs` must be homogeneous,
    /// nonzero and nonconstant.
    pub fn ci_height(&self, fs: &[Polynomial]) -> Result<usize> {
        let ideal = self.check_generators(fs)?;
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        ideal.height()
    }

    pub fn is_complete_intersection(&self, fs: &[Polynomial]) -> Result<bool> {
        Ok(self.ci_height(fs)? == fs.len())
    }

    /// Decides whether `fs` is a complete intersection whose ideal is already saturated.
    pub fn is_strict_ci(&self, fs: &[Polynomial]) -> Result<StrictCi> {
        let height = self.ci_height(fs)?;
        if height != fs.len() {
            return Ok(StrictCi::NotCi { height, expected: fs.len() });
        }
        let ideal = self.ideal(fs)?;
        let sat = self.subscheme_ideal(&ideal)?;
        for g in sat.gb() {
            if !ideal.normal_form(g)?.is_zero() {
                return Ok(StrictCi::NotStrict { witness: g.clone() });
            }
        }
        Ok(StrictCi::Strict)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tower(p: u64) -> Arc<FieldTower> {
        Arc::new(FieldTower::prime(p).unwrap())
    }

    fn p1p1() -> CoxAmbient {
        CoxAmbient::product_projective(&[1, 1], tower(101)).unwrap()
    }

    fn strings(ps: &[Polynomial]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn product_constructors() {
        let amb = p1p1();
        assert_eq!(amb.poly_ring().var_names(), ["x0", "x1", "y0", "y1"]);
        assert_eq!(strings(amb.ring().irrelevant_gens()), ["x0*y0", "x0*y1", "x1*y0", "x1*y1"]);
        assert_eq!(amb.variety_dimension(), 2);

        let p2 = CoxAmbient::product_projective(&[2], tower(101)).unwrap();
        assert_eq!(strings(p2.ring().irrelevant_gens()), ["x0", "x1", "x2"]);
        assert_eq!(p2.variety_dimension(), 2);

        let p1p2 = CoxAmbient::product_projective(&[1, 2], tower(101)).unwrap();
        assert_eq!(p1p2.poly_ring().nvars(), 5);
        assert_eq!(p1p2.ring().irrelevant_gens().len(), 6);
        assert_eq!(p1p2.variety_dimension(), 3);

        assert!(CoxAmbient::product_projective(&[], tower(101)).is_err());
        assert!(CoxAmbient::product_projective(&[1, 0], tower(101)).is_err());
    }

    #[test]
    fn segre_quadric() {
        let amb = CoxAmbient::segre_p1p1(tower(101)).unwrap();
        let z00 = amb.parse("z00").unwrap();
        assert_eq!(z00.multidegree().unwrap().0, vec![1]);
        assert_eq!(amb.irrelevant_ideal().height().unwrap(), 3);
        assert_eq!(amb.variety_dimension(), 2);
        // the quadric is prime of height 1 in the polynomial ring
        let plain = MultigradedRing::new(amb.poly_ring().clone(), vec![], vec![]).unwrap();
        let j = Ideal::new(&plain, amb.ring().defining_ideal().to_vec()).unwrap();
        assert_eq!(j.height().unwrap(), 1);
    }

    #[test]
    fn subscheme_ideals() {
        let amb = p1p1();
        let i = amb.ideal(&amb.parse_all(&["x0*y0", "x1*y1"]).unwrap()).unwrap();
        assert_eq!(strings(amb.subscheme_ideal(&i).unwrap().gb()), ["x0*x1", "x0*y0", "x1*y1", "y0*y1"]);
        let i = amb.ideal(&amb.parse_all(&["x0", "x1*y0"]).unwrap()).unwrap();
        assert_eq!(strings(amb.subscheme_ideal(&i).unwrap().gb()), ["x0", "y0"]);

        let segre = CoxAmbient::segre_p1p1(tower(101)).unwrap();
        let i = segre.ideal(&segre.parse_all(&["z00", "z11"]).unwrap()).unwrap();
        let sat = segre.subscheme_ideal(&i).unwrap();
        assert!(sat.equals(&i).unwrap());
        assert_eq!(strings(&sat.gens_mod_defining()), ["z00", "z11"]);
    }

    #[test]
    fn complete_intersections() {
        let amb = p1p1();
        let ci = |s: &[&str]| amb.is_complete_intersection(&amb.parse_all(s).unwrap()).unwrap();
        assert!(ci(&["x0*y0", "x1*y1"]));
        assert!(!ci(&["x0*y0", "x0*y1"]));
        assert!(ci(&["x0"]));
        assert!(matches!(
            amb.is_complete_intersection(&amb.parse_all(&["x0+y0"]).unwrap()),
            Err(Error::Inhomogeneous { .. })
        ));
        assert!(matches!(
            amb.is_complete_intersection(&amb.parse_all(&["3"]).unwrap()),
            Err(Error::ConstantGenerator(_))
        ));
    }

    #[test]
    fn strict_complete_intersections() {
        let amb = p1p1();
        let strict = |s: &[&str]| amb.is_strict_ci(&amb.parse_all(s).unwrap()).unwrap();
        match strict(&["x0*y0", "x1*y1"]) {
            StrictCi::NotStrict { witness } => assert_eq!(witness.to_string(), "x0*x1"),
            other => panic!("{other:?}"),
        }
        assert_eq!(strict(&["x0", "y0"]), StrictCi::Strict);
        assert!(matches!(strict(&["x0", "x1*y0"]), StrictCi::NotStrict { .. }));
        assert_eq!(strict(&["x0*y0", "x0*y1"]), StrictCi::NotCi { height: 1, expected: 2 });

        let segre = CoxAmbient::segre_p1p1(tower(101)).unwrap();
        assert_eq!(segre.is_strict_ci(&segre.parse_all(&["z00", "z11"]).unwrap()).unwrap(), StrictCi::Strict);
    }

    #[test]
    fn custom_ambient_checks_irrelevant_ideal() {
        let base =
            PolyRing::new(vec!["a".into(), "b".into()], tower(7), vec![vec![1, 1]], MonomialOrder::Grevlex).unwrap();
        let one = MultigradedRing::new(base.clone(), vec![], vec![Polynomial::one(&base)]).unwrap();
        assert!(CoxAmbient::custom(one).is_err());
        let ok = MultigradedRing::new(base.clone(), vec![], vec![Polynomial::var(&base, 0)]).unwrap();
        assert_eq!(CoxAmbient::custom(ok).unwrap().variety_dimension(), 1);
    }
}
