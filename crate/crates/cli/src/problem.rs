//! The line-oriented problem file: parsing, canonical printing, and construction of the
//! library objects it describes.

use std::fmt;
use std::sync::Arc;

use coxdescent::{
    CoxAmbient, Error as CoreError, FieldTower, MonomialOrder, MultigradedRing, PolyRing, Polynomial, SemilinearAction,
};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProblemError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Semantic { line: usize, source: CoreError },
    #[error("{0}")]
    Missing(String),
}

impl ProblemError {
    /// Parse errors, including malformed polynomials, versus everything else.
    pub fn is_parse_error(&self) -> bool {
        match self {
            ProblemError::Syntax { .. } => true,
            ProblemError::Semantic { source, .. } => matches!(source, CoreError::Parse { .. }),
            ProblemError::Missing(_) => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub degree: Option<usize>,
    pub min_poly: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AmbientSpec {
    Product(Vec<usize>),
    SegreP1P1,
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionSpec {
    pub frob_power: i64,
    pub images: Vec<String>,
}

/// A value together with the line it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Located<T> {
    pub line: usize,
    pub value: T,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub field: Located<FieldSpec>,
    pub ambient: Located<AmbientSpec>,
    pub vars: Option<Located<Vec<String>>>,
    pub grading: Vec<Located<Vec<i64>>>,
    pub defining: Option<Located<Vec<String>>>,
    pub irrelevant: Option<Located<Vec<String>>>,
    pub ideals: Vec<Located<(String, Vec<String>)>>,
    pub action: Option<Located<ActionSpec>>,
}

fn syntax(line: usize, message: impl Into<String>) -> ProblemError {
    ProblemError::Syntax { line, message: message.into() }
}

fn number<T: std::str::FromStr>(line: usize, word: &str, what: &str) -> Result<T, ProblemError> {
    word.parse().map_err(|_| syntax(line, format!("expected {what}, found `{word}`")))
}

fn poly_list(rest: &str) -> Vec<String> {
    rest.split(',').map(|s| s.split_whitespace().collect::<String>()).filter(|s| !s.is_empty()).collect()
}

fn set_once<T>(slot: &mut Option<Located<T>>, line: usize, value: T, key: &str) -> Result<(), ProblemError> {
    if slot.is_some() {
        return Err(syntax(line, format!("`{key}` given twice")));
    }
    *slot = Some(Located { line, value });
    Ok(())
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, ProblemError> {
        let mut field = None;
        let mut ambient = None;
        let mut vars = None;
        let mut grading = Vec::new();
        let mut defining = None;
        let mut irrelevant = None;
        let mut ideals: Vec<Located<(String, Vec<String>)>> = Vec::new();
        let mut action = None;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let (key, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
            let rest = rest.trim();
            let words: Vec<&str> = rest.split_whitespace().collect();
            match key {
                "field" => {
                    let (p, degree, min_poly) = match words.as_slice() {
                        [p] => (number(line, p, "a prime")?, None, None),
                        [p, d] => (number(line, p, "a prime")?, Some(number(line, d, "a degree")?), None),
                        [p, d, m @ ..] => {
                            (number(line, p, "a prime")?, Some(number(line, d, "a degree")?), Some(m.concat()))
                        }
                        [] => return Err(syntax(line, "`field` needs a characteristic")),
                    };
                    set_once(&mut field, line, FieldSpec { p, degree, min_poly }, "field")?;
                }
                "ambient" => {
                    let spec = match words.as_slice() {
                        ["product", dims @ ..] if !dims.is_empty() => AmbientSpec::Product(
                            dims.iter().map(|d| number(line, d, "a dimension")).collect::<Result<_, _>>()?,
                        ),
                        ["segre-p1p1"] => AmbientSpec::SegreP1P1,
                        ["custom"] => AmbientSpec::Custom,
                        _ => return Err(syntax(line, "expected `product <n>...`, `segre-p1p1` or `custom`")),
                    };
                    set_once(&mut ambient, line, spec, "ambient")?;
                }
                "vars" => {
                    let names: Vec<String> = rest
                        .split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|s| !s.is_empty())
                        .map(String::from)
                        .collect();
                    if names.is_empty() {
                        return Err(syntax(line, "`vars` needs at least one name"));
                    }
                    set_once(&mut vars, line, names, "vars")?;
                }
                "grading" => {
                    let row = words.iter().map(|w| number(line, w, "an integer")).collect::<Result<Vec<i64>, _>>()?;
                    if row.is_empty() {
                        return Err(syntax(line, "empty grading row"));
                    }
                    grading.push(Located { line, value: row });
                }
                "defining" => set_once(&mut defining, line, poly_list(rest), "defining")?,
                "irrelevant" => set_once(&mut irrelevant, line, poly_list(rest), "irrelevant")?,
                "ideal" => {
                    let (name, gens) =
                        rest.split_once('=').ok_or_else(|| syntax(line, "expected `ideal NAME = f, g, ...`"))?;
                    let name = name.trim();
                    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                        return Err(syntax(line, format!("bad ideal name `{name}`")));
                    }
                    if ideals.iter().any(|i| i.value.0 == name) {
                        return Err(syntax(line, format!("ideal `{name}` defined twice")));
                    }
                    ideals.push(Located { line, value: (name.to_string(), poly_list(gens)) });
                }
                "action" => {
                    let (e, images) =
                        words.split_first().ok_or_else(|| syntax(line, "`action` needs a Frobenius power"))?;
                    let spec = ActionSpec {
                        frob_power: number(line, e, "a Frobenius power")?,
                        images: images.iter().map(|s| s.to_string()).collect(),
                    };
                    set_once(&mut action, line, spec, "action")?;
                }
                other => return Err(syntax(line, format!("unknown keyword `{other}`"))),
            }
        }

        let field = field.ok_or_else(|| ProblemError::Missing("missing `field` line".into()))?;
        let ambient = ambient.ok_or_else(|| ProblemError::Missing("missing `ambient` line".into()))?;
        let custom = ambient.value == AmbientSpec::Custom;
        let misplaced = |present: bool, line: Option<usize>, key: &str| -> Result<(), ProblemError> {
            match (present, line) {
                (true, Some(l)) => Err(syntax(l, format!("`{key}` is only allowed with `ambient custom`"))),
                _ => Ok(()),
            }
        };
        misplaced(!custom, grading.first().map(|g| g.line), "grading")?;
        misplaced(!custom, defining.as_ref().map(|d| d.line), "defining")?;
        misplaced(!custom, irrelevant.as_ref().map(|d| d.line), "irrelevant")?;
        if ambient.value == AmbientSpec::SegreP1P1 {
            if let Some(v) = &vars {
                return Err(syntax(v.line, "the segre-p1p1 ambient has fixed variable names"));
            }
        }
        if custom {
            if vars.is_none() {
                return Err(syntax(ambient.line, "a custom ambient needs a `vars` line"));
            }
            if grading.is_empty() {
                return Err(syntax(ambient.line, "a custom ambient needs `grading` rows"));
            }
            if irrelevant.is_none() {
                return Err(syntax(ambient.line, "a custom ambient needs an `irrelevant` line"));
            }
        }
        Ok(ProblemFile { field, ambient, vars, grading, defining, irrelevant, ideals, action })
    }

    pub fn build(&self) -> Result<Problem, ProblemError> {
        let at = |line: usize| move |source: CoreError| ProblemError::Semantic { line, source };
        let f = &self.field;
        let tower = match (&f.value.degree, &f.value.min_poly) {
            (None, _) | (Some(1), None) => FieldTower::prime(f.value.p),
            (Some(d), None) => FieldTower::new(f.value.p, *d),
            (Some(d), Some(m)) => FieldTower::with_min_poly_str(f.value.p, m).and_then(|t| {
                if t.degree() == *d {
                    Ok(t)
                } else {
                    Err(CoreError::NotIrreducible(format!("{m} (degree {} instead of {d})", t.degree())))
                }
            }),
        }
        .map_err(at(f.line))?;
        let tower = Arc::new(tower);

        let amb_line = self.ambient.line;
        let amb = match &self.ambient.value {
            AmbientSpec::Product(dims) => match &self.vars {
                Some(v) => CoxAmbient::product_projective_named(dims, tower, v.value.clone()).map_err(at(v.line))?,
                None => CoxAmbient::product_projective(dims, tower).map_err(at(amb_line))?,
            },
            AmbientSpec::SegreP1P1 => CoxAmbient::segre_p1p1(tower).map_err(at(amb_line))?,
            AmbientSpec::Custom => {
                let vars = self.vars.as_ref().unwrap();
                let rows: Vec<Vec<i64>> = self.grading.iter().map(|g| g.value.clone()).collect();
                let base = PolyRing::new(vars.value.clone(), tower, rows, MonomialOrder::Grevlex)
                    .map_err(at(self.grading[0].line))?;
                let polys = |l: &Option<Located<Vec<String>>>| -> Result<Vec<Polynomial>, ProblemError> {
                    match l {
                        None => Ok(Vec::new()),
                        Some(l) => l.value.iter().map(|s| Polynomial::parse(&base, s).map_err(at(l.line))).collect(),
                    }
                };
                let defining = polys(&self.defining)?;
                let irrelevant = polys(&self.irrelevant)?;
                let ring = MultigradedRing::new(base.clone(), defining, irrelevant).map_err(at(amb_line))?;
                CoxAmbient::custom(ring).map_err(at(amb_line))?
            }
        };

        let mut ideals = Vec::new();
        for ideal in &self.ideals {
            let (name, gens) = &ideal.value;
            let polys = gens.iter().map(|s| amb.parse(s)).collect::<Result<Vec<_>, _>>().map_err(at(ideal.line))?;
            for p in &polys {
                if !p.is_zero() {
                    p.multidegree().map_err(at(ideal.line))?;
                }
            }
            ideals.push((name.clone(), polys));
        }

        let action = match &self.action {
            None => None,
            Some(a) => Some(
                SemilinearAction::parse(amb.ring(), a.value.frob_power, &a.value.images.join(" "))
                    .map_err(at(a.line))?,
            ),
        };
        Ok(Problem { amb, ideals, action })
    }
}

fn join_polys(ps: &[String]) -> String {
    ps.join(", ")
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = &self.field.value;
        write!(f, "field {}", field.p)?;
        if let Some(d) = field.degree {
            write!(f, " {d}")?;
        }
        if let Some(m) = &field.min_poly {
            write!(f, " {m}")?;
        }
        writeln!(f)?;
        match &self.ambient.value {
            AmbientSpec::Product(dims) => {
                let dims: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
                writeln!(f, "ambient product {}", dims.join(" "))?;
            }
            AmbientSpec::SegreP1P1 => writeln!(f, "ambient segre-p1p1")?,
            AmbientSpec::Custom => writeln!(f, "ambient custom")?,
        }
        if let Some(v) = &self.vars {
            writeln!(f, "vars {}", v.value.join(" "))?;
        }
        for row in &self.grading {
            let row: Vec<String> = row.value.iter().map(|x| x.to_string()).collect();
            writeln!(f, "grading {}", row.join(" "))?;
        }
        if let Some(d) = &self.defining {
            writeln!(f, "defining {}", join_polys(&d.value))?;
        }
        if let Some(g) = &self.irrelevant {
            writeln!(f, "irrelevant {}", join_polys(&g.value))?;
        }
        for ideal in &self.ideals {
            let (name, gens) = &ideal.value;
            writeln!(f, "ideal {name} = {}", join_polys(gens))?;
        }
        if let Some(a) = &self.action {
            write!(f, "action {}", a.value.frob_power)?;
            for image in &a.value.images {
                write!(f, " {image}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The objects a problem file describes.
#[derive(Debug)]
pub struct Problem {
    pub amb: CoxAmbient,
    pub ideals: Vec<(String, Vec<Polynomial>)>,
    pub action: Option<SemilinearAction>,
}

impl Problem {
    /// The named ideal, or the first one when no name is given.
    pub fn ideal(&self, name: Option<&str>) -> Option<&(String, Vec<Polynomial>)> {
        match name {
            Some(n) => self.ideals.iter().find(|(m, _)| m == n),
            None => self.ideals.first(),
        }
    }
}
