//! Moving the basepoint of a reduced divisor along the chain, and reflection.

use crate::error::{broken, invalid, shape, Result};
use crate::graph::ChainOfLoops;
use crate::path::LatticePath;
use crate::rational::Rational;

use super::{alpha, DivisorSeq, UnderlineSeq};

/// One recentering step across a loop with arcs `ell` (clockwise from `v_{i-1}`) and
/// `m` (counter-clockwise from `v_{i-1}`).
///
/// Input: a `v_{i-1}`-reduced divisor with `k` chips on `v_{i-1}` and its loop chip at
/// counter-clockwise distance `x` from `v_{i-1}` (`x = 0` for none). Output: the
/// chips now on `v_i` and, if one remains on the cut loop `γ_i \ {v_i}`, its clockwise
/// distance from `v_{i-1}` reduced into `[0, ell + m)`.
///
/// * `x = 0`, `k != 0`: `k - 1` chips move to `v_i`, one chip stays at clockwise
///   `(k - 1) m`. If that point is `v_i` itself (only when `k m` is a multiple of the
///   circumference, excluded on generic chains) all `k` chips end on `v_i`.
/// * `x = (k + 1) m`: the loop empties and `k + 1` chips sit on `v_i`.
/// * otherwise `k` chips on `v_i` and one at clockwise `k m - x`.
pub fn recenter_step(k: i64, x: &Rational, ell: &Rational, m: &Rational) -> Result<(i64, Option<Rational>)> {
    let circ = ell + m;
    if x < &Rational::zero() || x >= &circ {
        return Err(invalid!("loop position {x} outside [0, {circ})"));
    }
    if x.is_zero() {
        if k == 0 {
            return Ok((0, None));
        }
        let cw = (Rational::from(k - 1) * m).rem_euclid(&circ);
        if &cw == ell {
            return Ok((k, None));
        }
        return Ok((k - 1, Some(cw)));
    }
    if x.congruent(&(Rational::from(k + 1) * m), &circ) {
        return Ok((k + 1, None));
    }
    Ok((k, Some((Rational::from(k) * m - x).rem_euclid(&circ))))
}

/// A `v_i`-reduced divisor met while walking the basepoint from `v_0` to `v_g`.
///
/// Loop chips are stored as counter-clockwise distances from the loop's left vertex.
/// Loops left of the basepoint may carry a chip anywhere except their right vertex;
/// loops to the right anywhere except their left vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionState<'g> {
    graph: &'g ChainOfLoops,
    basepoint: usize,
    chips_at_basepoint: i64,
    loop_chips: Vec<Option<Rational>>,
}

impl<'g> ReductionState<'g> {
    pub fn new(c: &'g DivisorSeq) -> Self {
        ReductionState {
            graph: c.graph(),
            basepoint: 0,
            chips_at_basepoint: c.d0(),
            loop_chips: c.positions().iter().map(|x| (!x.is_zero()).then(|| x.clone())).collect(),
        }
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn chips_at_basepoint(&self) -> i64 {
        self.chips_at_basepoint
    }

    /// Chip on loop `i` (1-based), as a counter-clockwise distance from `v_{i-1}`.
    pub fn loop_chip(&self, i: usize) -> Option<&Rational> {
        self.loop_chips[i - 1].as_ref()
    }

    pub fn degree(&self) -> i64 {
        self.chips_at_basepoint + self.loop_chips.iter().flatten().count() as i64
    }

    /// Moves the basepoint from `v_i` to `v_{i+1}`.
    pub fn advance(&mut self) -> Result<()> {
        let i = self.basepoint + 1;
        if i > self.graph.genus() {
            return Err(invalid!("basepoint is already v_{}", self.graph.genus()));
        }
        let before = self.degree();
        let lp = self.graph.loop_at(i);
        let x = self.loop_chips[i - 1].clone().unwrap_or_else(Rational::zero);
        let (k, cw) = recenter_step(self.chips_at_basepoint, &x, &lp.ell, &lp.m)?;
        let circ = lp.circumference();
        self.loop_chips[i - 1] = cw.map(|d| (-d).rem_euclid(&circ));
        self.chips_at_basepoint = k;
        self.basepoint = i;
        if self.degree() != before {
            return Err(broken!("recentering to v_{i} changed the degree from {before} to {}", self.degree()));
        }
        self.check()
    }

    /// Checks the reduced-divisor shape for the current basepoint.
    pub fn check(&self) -> Result<()> {
        for (idx, (chip, lp)) in self.loop_chips.iter().zip(self.graph.loops()).enumerate() {
            let Some(pos) = chip else { continue };
            let i = idx + 1;
            let circ = lp.circumference();
            if pos < &Rational::zero() || pos >= &circ {
                return Err(broken!("loop {i}: chip position {pos} not normalized"));
            }
            let excluded = if i <= self.basepoint { lp.m.clone() } else { Rational::zero() };
            if *pos == excluded {
                return Err(broken!("loop {i}: chip on the vertex cut off for basepoint v_{}", self.basepoint));
            }
        }
        Ok(())
    }
}

/// Result of reflecting a divisor: the divisor on the reflected graph and the
/// number of chips on `v_i` of the `v_i`-reduced representative, for `i = 0..=g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reflection<D> {
    pub divisor: D,
    pub trace: Vec<i64>,
}

/// The `v_g`-reduced representative of `c`, read as a `v_0`-reduced divisor on the
/// reflected graph. Works for any `v_0`-reduced divisor.
pub fn reflect_raw(c: &DivisorSeq) -> Result<Reflection<DivisorSeq>> {
    let graph = c.graph();
    let g = graph.genus();
    let mut state = ReductionState::new(c);
    let mut trace = Vec::with_capacity(g + 1);
    trace.push(state.chips_at_basepoint());
    for _ in 0..g {
        state.advance()?;
        trace.push(state.chips_at_basepoint());
    }
    // Loop i of the original is loop g + 1 - i of the reflection, entered from v_i
    // and traversed the other way round.
    let positions = (1..=g)
        .rev()
        .map(|i| {
            let lp = graph.loop_at(i);
            match state.loop_chip(i) {
                Some(pos) => (&lp.m - pos).rem_euclid(&lp.circumference()),
                None => Rational::zero(),
            }
        })
        .collect();
    let divisor = DivisorSeq::new(graph.reflect(), state.chips_at_basepoint(), positions)?;
    Ok(Reflection { divisor, trace })
}

/// Reflection of a tableau image, computed by chip-firing simulation.
pub fn reflect_divisor(c: &UnderlineSeq) -> Result<Reflection<UnderlineSeq>> {
    let Reflection { divisor, trace } = reflect_raw(&c.to_raw())?;
    if divisor.d0() != c.head() {
        return Err(broken!("reflection moved the head from {} to {}", c.head(), divisor.d0()));
    }
    let divisor = divisor.to_underline().map_err(|e| broken!("reflected divisor has no underline form: {e}"))?;
    Ok(Reflection { divisor, trace })
}

/// Closed form for the reflection: `x̱'_{g+1-i} = max(p_{i-1}(1) - x̱_i - 1, 0)`, where
/// `path` is the lattice path of `c`.
pub fn sigma_formula(c: &UnderlineSeq, path: &LatticePath) -> Result<UnderlineSeq> {
    let g = c.graph().genus();
    if path.len() != g || path.dim() as i64 != c.head() {
        return Err(shape!(
            "path of dimension {} with {} steps does not belong to a head {} divisor of genus {g}",
            path.dim(),
            path.len(),
            c.head()
        ));
    }
    if alpha(path, c.graph())? != *c {
        return Err(invalid!("path and divisor do not correspond"));
    }
    let mut xu = vec![0u64; g];
    if path.dim() > 0 {
        for (idx, &x) in c.distances().iter().enumerate() {
            let k = path.point(idx)[0];
            xu[g - 1 - idx] = (k - x as i64 - 1).max(0) as u64;
        }
    }
    UnderlineSeq::new(c.graph().reflect(), c.head(), xu)
}
