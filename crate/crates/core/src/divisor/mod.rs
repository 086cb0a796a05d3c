//! `v_0`-reduced divisors on a chain of loops.
//!
//! A `v_0`-reduced divisor has `d_0` chips on `v_0` (possibly negative) and at most
//! one chip on each cut loop `γ_i \ {v_{i-1}}`. Two encodings are used:
//!
//! * [`DivisorSeq`] (`d_0; x_1..x_g`): `x_i` is the counter-clockwise distance of the
//!   chip from `v_{i-1}`, reduced into `[0, ell_i + m_i)`, with `x_i = 0` meaning no
//!   chip.
//! * [`UnderlineSeq`] (`r; x̱_1..x̱_g`): integer distances in units of `m_i`, measured
//!   from `v_i`, so `x_i = (x̱_i + 1) m_i`. `x̱_i = 0` means no chip. This is the
//!   form taken by images of tableaux.

mod dual;
mod reflect;

pub use dual::{dual_reduce, dual_via_tableau, z_sequence};
pub use reflect::{recenter_step, reflect_divisor, reflect_raw, sigma_formula, ReductionState, Reflection};

use num_traits::ToPrimitive;

use crate::error::{broken, invalid, shape, Error, Result};
use crate::graph::ChainOfLoops;
use crate::path::{is_in_weyl, LatticePath, StepKind};
use crate::rational::Rational;
use crate::tableau::RectTableau;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorSeq {
    graph: ChainOfLoops,
    d0: i64,
    x: Vec<Rational>,
}

impl DivisorSeq {
    /// Positions are reduced modulo each loop's circumference.
    pub fn new(graph: ChainOfLoops, d0: i64, x: Vec<Rational>) -> Result<Self> {
        if x.len() != graph.genus() {
            return Err(shape!("{} positions for a genus {} graph", x.len(), graph.genus()));
        }
        let x = x.iter().zip(graph.loops()).map(|(xi, lp)| xi.rem_euclid(&lp.circumference())).collect();
        Ok(DivisorSeq { graph, d0, x })
    }

    pub fn graph(&self) -> &ChainOfLoops {
        &self.graph
    }

    pub fn d0(&self) -> i64 {
        self.d0
    }

    pub fn positions(&self) -> &[Rational] {
        &self.x
    }

    pub fn degree(&self) -> i64 {
        self.d0 + self.x.iter().filter(|xi| !xi.is_zero()).count() as i64
    }

    /// Inverse of [`UnderlineSeq::to_raw`]. Each chip position must be a whole
    /// number of `m_i` steps from `v_{i-1}` modulo the circumference; the smallest
    /// such count is used. A chip sitting exactly on `v_i` has no underline form.
    pub fn to_underline(&self) -> Result<UnderlineSeq> {
        let mut xu = Vec::with_capacity(self.x.len());
        for (i, (xi, lp)) in self.x.iter().zip(self.graph.loops()).enumerate() {
            if xi.is_zero() {
                xu.push(0);
                continue;
            }
            let steps = xi
                .smallest_multiple_index(&lp.m, &lp.circumference())
                .ok_or_else(|| invalid!("loop {}: position {xi} is not a multiple of m = {}", i + 1, lp.m))?;
            let steps = steps.to_u64().ok_or_else(|| invalid!("loop {}: position too large", i + 1))?;
            if steps == 1 {
                return Err(invalid!("loop {}: a chip on v_{} has no underline encoding", i + 1, i + 1));
            }
            xu.push(steps - 1);
        }
        Ok(UnderlineSeq { graph: self.graph.clone(), head: self.d0, xu })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnderlineSeq {
    graph: ChainOfLoops,
    head: i64,
    xu: Vec<u64>,
}

impl UnderlineSeq {
    pub fn new(graph: ChainOfLoops, head: i64, xu: Vec<u64>) -> Result<Self> {
        if xu.len() != graph.genus() {
            return Err(shape!("{} distances for a genus {} graph", xu.len(), graph.genus()));
        }
        Ok(UnderlineSeq { graph, head, xu })
    }

    /// The divisor with no chips at all.
    pub fn zero(graph: ChainOfLoops) -> Self {
        let g = graph.genus();
        UnderlineSeq { graph, head: 0, xu: vec![0; g] }
    }

    pub fn graph(&self) -> &ChainOfLoops {
        &self.graph
    }

    pub fn head(&self) -> i64 {
        self.head
    }

    pub fn distances(&self) -> &[u64] {
        &self.xu
    }

    pub fn degree(&self) -> i64 {
        self.head + self.xu.iter().filter(|&&x| x != 0).count() as i64
    }

    /// `x_i = (x̱_i + 1) m_i mod (ell_i + m_i)`, and `0` for no chip.
    pub fn to_raw(&self) -> DivisorSeq {
        let x = self
            .xu
            .iter()
            .zip(self.graph.loops())
            .map(|(&xu, lp)| {
                if xu == 0 {
                    Rational::zero()
                } else {
                    (Rational::from(xu as i64 + 1) * &lp.m).rem_euclid(&lp.circumference())
                }
            })
            .collect();
        DivisorSeq { graph: self.graph.clone(), d0: self.head, x }
    }
}

/// Runs the lattice-path algorithm in dimension `r` on a `v_0`-reduced divisor.
///
/// Starts at `(d_0, d_0 - 1, ..., d_0 - r + 1)`; step `i` is all-`(-1)` when loop `i`
/// is empty, `e_j` when `x_i = (p_{i-1}(j) + 1) m_i` modulo the circumference and both
/// `p_{i-1}` and `p_{i-1} + e_j` lie in the Weyl chamber, and zero otherwise. The full
/// path is returned even when it leaves the chamber.
pub fn rho(c: &DivisorSeq, r: usize) -> Result<LatticePath> {
    if r == 0 {
        return Err(invalid!("the lattice-path algorithm needs r >= 1"));
    }
    let mut p: Vec<i64> = (0..r as i64).map(|k| c.d0 - k).collect();
    let mut points = vec![p.clone()];
    for (i, (xi, lp)) in c.x.iter().zip(c.graph.loops()).enumerate() {
        if xi.is_zero() {
            p.iter_mut().for_each(|v| *v -= 1);
        } else if is_in_weyl(&p) {
            let circ = lp.circumference();
            let mut hits = (0..r).filter(|&j| {
                let target = Rational::from(p[j] + 1) * &lp.m;
                xi.congruent(&target, &circ) && (j == 0 || p[j - 1] > p[j] + 1)
            });
            if let Some(j) = hits.next() {
                if let Some(other) = hits.next() {
                    return Err(Error::NonGeneric(format!(
                        "loop {}: directions {} and {} both match position {xi}",
                        i + 1,
                        j + 1,
                        other + 1
                    )));
                }
                p[j] += 1;
            }
        }
        points.push(p.clone());
    }
    LatticePath::new(r, points)
}

/// Rank of a `v_0`-reduced divisor on a generic chain, with the maximal lingering
/// path that witnesses it (none when the rank is `-1`, `0`, or comes from the
/// degree bound).
pub fn rank_with_witness(c: &DivisorSeq) -> Result<(i64, Option<LatticePath>)> {
    if let Some(i) = c.graph.non_generic_loop() {
        return Err(Error::NonGeneric(format!("loop {i} has a ratio ell/m with small height")));
    }
    let g = c.graph.genus() as i64;
    let d = c.degree();
    if d > 2 * g - 2 {
        return Ok((d - g, None));
    }
    if c.d0 < 0 {
        return Ok((-1, None));
    }
    let mut best = (0, None);
    for r in 1..=c.d0 as usize {
        let path = rho(c, r)?;
        if path.is_lingering() {
            best = (r as i64, Some(path));
        }
    }
    Ok(best)
}

pub fn rank(c: &DivisorSeq) -> Result<i64> {
    rank_with_witness(c).map(|(r, _)| r)
}

/// Divisor of a non-lingering path: `x̱_i = p_{i-1}(j)` for an `e_j` step and `0` for
/// an all-`(-1)` step.
pub fn alpha(path: &LatticePath, graph: &ChainOfLoops) -> Result<UnderlineSeq> {
    if !path.is_non_lingering() {
        return Err(invalid!("alpha needs a non-lingering path"));
    }
    if path.len() != graph.genus() {
        return Err(shape!("path has {} steps, graph has genus {}", path.len(), graph.genus()));
    }
    let xu = path
        .steps()
        .iter()
        .enumerate()
        .map(|(idx, step)| match *step {
            StepKind::Up(j) => path.point(idx)[j - 1] as u64,
            StepKind::DownAll | StepKind::Linger => 0,
        })
        .collect();
    UnderlineSeq::new(graph.clone(), path.dim() as i64, xu)
}

fn check_genus(tableau: &RectTableau, graph: &ChainOfLoops) -> Result<()> {
    if tableau.size() != graph.genus() {
        return Err(shape!("{}x{} tableau on a genus {} graph", tableau.num_rows(), tableau.num_cols(), graph.genus()));
    }
    Ok(())
}

/// `x̱_i = r + row(i) - col(i) - #{entries < i in the last column}`, with `r = n - 1`.
pub fn phi(tableau: &RectTableau, graph: &ChainOfLoops) -> Result<UnderlineSeq> {
    check_genus(tableau, graph)?;
    let r = tableau.num_cols() as i64 - 1;
    let xu = (1..=tableau.size())
        .map(|i| {
            let s = tableau.cell_stats(i)?;
            let value = r + s.row as i64 - s.col as i64 - s.less_in_last as i64;
            u64::try_from(value).map_err(|_| broken!("negative distance {value} for entry {i}"))
        })
        .collect::<Result<_>>()?;
    UnderlineSeq::new(graph.clone(), r, xu)
}

/// The image of the evacuated tableau on the reflected graph, computed from the
/// original tableau: `x̱'_{g+1-i} = j - 1 + l_1 - l_j` where `j` is the column of `i`
/// and `l_s` counts entries `<= i` in column `s`.
pub fn phi_prime_ev(tableau: &RectTableau, graph: &ChainOfLoops) -> Result<UnderlineSeq> {
    check_genus(tableau, graph)?;
    let g = tableau.size();
    let mut xu = vec![0u64; g];
    for i in 1..=g {
        let (_, j) = tableau.position(i)?;
        let counts = tableau.column_counts(i);
        xu[g - i] = (j - 1 + counts[0] - counts[j - 1]) as u64;
    }
    UnderlineSeq::new(graph.reflect(), tableau.num_cols() as i64 - 1, xu)
}

/// The tableau whose image is `c`, or an error if `c` is not such an image.
pub fn phi_preimage(c: &UnderlineSeq) -> Result<RectTableau> {
    let g = c.graph.genus();
    let tableau = match c.head {
        h if h < 0 => return Err(invalid!("head {h} is negative")),
        0 => {
            if c.xu.iter().any(|&x| x != 0) {
                return Err(invalid!("a head-0 image must have no loop chips"));
            }
            RectTableau::single_column(g)
        }
        h => {
            let path = rho(&c.to_raw(), h as usize)?;
            if !path.is_non_lingering() {
                return Err(invalid!("divisor is not the image of a rectangular tableau"));
            }
            if alpha(&path, &c.graph)? != *c {
                return Err(invalid!("divisor does not use the canonical distances of a tableau image"));
            }
            path.to_tableau()?
        }
    };
    Ok(tableau)
}
