//! Exhaustive sweep over all rectangular tableaux up to a size.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::divisor::{
    alpha, dual_reduce, dual_via_tableau, phi, phi_prime_ev, rank, reflect_divisor, rho, sigma_formula,
};
use crate::error::{invalid, Error, Result};
use crate::graph::ChainOfLoops;
use crate::path::LatticePath;
use crate::rational::Rational;
use crate::tableau::{enumerate, hook_count, RectTableau, DEFAULT_ENUMERATION_CEILING};

pub const MAX_VERIFY_CEILING: usize = DEFAULT_ENUMERATION_CEILING;

/// One loop length: a constant, or a multiple of the genus when written with a
/// trailing `g` (`"2g"`, `"g"`, `"3/2g"`).
#[derive(Clone, Debug, PartialEq, Eq)]
enum Length {
    Fixed(Rational),
    PerGenus(Rational),
}

impl Length {
    fn at(&self, g: usize) -> Rational {
        match self {
            Length::Fixed(v) => v.clone(),
            Length::PerGenus(v) => v * &Rational::from(g as i64),
        }
    }
}

impl FromStr for Length {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.strip_suffix('g') {
            Some("") => Ok(Length::PerGenus(Rational::from(1))),
            Some(coef) => Ok(Length::PerGenus(coef.parse()?)),
            None => Ok(Length::Fixed(s.parse()?)),
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Fixed(v) => write!(f, "{v}"),
            Length::PerGenus(v) => write!(f, "{v}g"),
        }
    }
}

/// Uniform loop lengths `ELL:M` for every genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Template {
    ell: Length,
    m: Length,
}

impl Template {
    pub fn graph(&self, genus: usize) -> Result<ChainOfLoops> {
        ChainOfLoops::uniform(genus, self.ell.at(genus), self.m.at(genus))
    }
}

impl Default for Template {
    fn default() -> Self {
        Template { ell: Length::PerGenus(Rational::from(2)), m: Length::Fixed(Rational::from(1)) }
    }
}

impl FromStr for Template {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (ell, m) = s.split_once(':').ok_or_else(|| invalid!("template {s:?} is not of the form ELL:M"))?;
        Ok(Template { ell: ell.parse()?, m: m.parse()? })
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.ell, self.m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub ceiling: usize,
    pub template: Template,
    pub shape: Option<(usize, usize)>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { ceiling: 12, template: Template::default(), shape: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeReport {
    pub rows: usize,
    pub cols: usize,
    pub tableaux: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub template: Template,
    pub shapes: Vec<ShapeReport>,
}

impl VerifyReport {
    pub fn tableaux(&self) -> usize {
        self.shapes.iter().map(|s| s.tableaux).sum()
    }

    pub fn failures(&self) -> usize {
        self.shapes.iter().map(|s| s.failures.len()).sum()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "template {}", self.template)?;
        for s in &self.shapes {
            writeln!(f, "shape {}x{}: {} tableaux, {} failures", s.rows, s.cols, s.tableaux, s.failures.len())?;
            for failure in &s.failures {
                writeln!(f, "  FAIL {failure}")?;
            }
        }
        writeln!(
            f,
            "total: {} tableaux over {} shapes, {} failures",
            self.tableaux(),
            self.shapes.len(),
            self.failures()
        )
    }
}

/// Shapes `(m, n)` with `m n <= ceiling`, ordered by size and then by row count.
fn shapes_up_to(ceiling: usize) -> Vec<(usize, usize)> {
    (1..=ceiling).flat_map(|g| (1..=g).filter(move |m| g % m == 0).map(move |m| (m, g / m))).collect()
}

/// Runs every check on every tableau in scope. Fails before checking anything if
/// the ceiling is out of range or the template gives a non-generic chain.
pub fn verify(options: &VerifyOptions) -> Result<VerifyReport> {
    if options.ceiling == 0 || options.ceiling > MAX_VERIFY_CEILING {
        return Err(invalid!("ceiling {} outside 1..={MAX_VERIFY_CEILING}", options.ceiling));
    }
    let shapes = match options.shape {
        Some((m, n)) if m == 0 || n == 0 => return Err(invalid!("shape {m}x{n} is empty")),
        Some((m, n)) if m * n > options.ceiling => {
            return Err(invalid!("shape {m}x{n} exceeds the ceiling {}", options.ceiling))
        }
        Some(shape) => vec![shape],
        None => shapes_up_to(options.ceiling),
    };
    let mut graphs = Vec::with_capacity(shapes.len());
    for &(m, n) in &shapes {
        let graph = options.template.graph(m * n)?;
        if let Some(i) = graph.non_generic_loop() {
            return Err(Error::NonGeneric(format!(
                "template {} at genus {} gives a non-generic loop {i}",
                options.template,
                m * n
            )));
        }
        graphs.push(graph);
    }

    let mut reports = Vec::with_capacity(shapes.len());
    for (&(m, n), graph) in shapes.iter().zip(&graphs) {
        let tableaux: Vec<RectTableau> = enumerate(m, n, MAX_VERIFY_CEILING)?.collect();
        if hook_count(m, n) != tableaux.len().into() {
            return Err(Error::Invariant(format!("{m}x{n}: enumerated {} tableaux", tableaux.len())));
        }
        let failures = tableaux
            .par_iter()
            .flat_map_iter(|t| verify_tableau(t, graph).into_iter().map(move |f| format!("{:?}: {f}", t.to_rows())))
            .collect();
        reports.push(ShapeReport { rows: m, cols: n, tableaux: tableaux.len(), failures });
    }
    Ok(VerifyReport { template: options.template.clone(), shapes: reports })
}

/// All checks for one tableau on a generic chain of matching genus; returns one
/// message per failed check.
pub fn verify_tableau(t: &RectTableau, graph: &ChainOfLoops) -> Vec<String> {
    let mut failures = Vec::new();
    let mut check = |name: &str, outcome: Result<bool>| match outcome {
        Ok(true) => {}
        Ok(false) => failures.push(name.to_string()),
        Err(e) => failures.push(format!("{name}: {e}")),
    };
    let (m, n) = (t.num_rows() as i64, t.num_cols() as i64);
    let g = t.size() as i64;
    let r = (n - 1) as usize;
    let path = LatticePath::from_tableau(t);

    check("path round trip", path.to_tableau().map(|back| back == *t));
    let c = match phi(t, graph) {
        Ok(c) => c,
        Err(e) => {
            failures.push(format!("phi: {e}"));
            return failures;
        }
    };
    let raw = c.to_raw();
    check("phi = alpha . beta", alpha(&path, graph).map(|a| a == c));
    if r > 0 {
        check("rho . alpha = id", rho(&raw, r).map(|p| p == path));
    }
    check("rank = n - 1", rank(&raw).map(|k| k == n - 1));

    check(
        "sigma . phi = phi' . ev",
        reflect_divisor(&c).and_then(|refl| {
            let by_tableau = phi_prime_ev(t, graph)?;
            let direct = phi(&t.evacuate(), &graph.reflect())?;
            Ok(refl.divisor == by_tableau && by_tableau == direct)
        }),
    );
    check(
        "sigma formula = chip-firing reflection",
        reflect_divisor(&c).and_then(|refl| Ok(sigma_formula(&c, &path)? == refl.divisor)),
    );
    check(
        "recentering trace = first coordinate",
        reflect_divisor(&c).map(|refl| {
            if r == 0 {
                refl.trace.iter().all(|&k| k == 0)
            } else {
                refl.trace == path.coordinate_trace(1)
            }
        }),
    );

    let dual = dual_reduce(&c);
    check("dual . phi = phi . transpose", dual.clone().and_then(|d| Ok(d == phi(&t.transpose(), graph)?)));
    check("dual by tableau = dual by reduction", dual.clone().and_then(|d| Ok(d == dual_via_tableau(t, graph)?)));
    check("rank of dual = m - 1", dual.clone().and_then(|d| Ok(rank(&d.to_raw())? == m - 1)));
    check("Riemann-Roch", dual.and_then(|d| Ok(rank(&raw)? - rank(&d.to_raw())? == c.degree() + 1 - g)));
    failures
}
