//! The chain-of-loops metric graphs.
//!
//! Loop `i` (1-based) joins the designated vertices `v_{i-1}` and `v_i` by two arcs
//! of lengths `ell_i` and `m_i`. Travelling counter-clockwise from `v_{i-1}` covers
//! the `m_i` arc first and reaches `v_i` after distance `m_i`; the clockwise route
//! from `v_{i-1}` covers the `ell_i` arc. Vertices are addressed by index `0..=g`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{invalid, Result};
use crate::rational::Rational;

/// One loop of the chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Loop {
    pub ell: Rational,
    pub m: Rational,
}

impl Loop {
    pub fn circumference(&self) -> Rational {
        &self.ell + &self.m
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainOfLoops {
    loops: Vec<Loop>,
}

impl ChainOfLoops {
    /// Builds a chain from `(ell_i, m_i)` pairs; rejects an empty list or any
    /// non-positive length.
    pub fn new<I>(lengths: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut loops = Vec::new();
        for (idx, (ell, m)) in lengths.into_iter().enumerate() {
            if !ell.is_positive() || !m.is_positive() {
                return Err(invalid!("loop {}: lengths must be positive, got ({ell}, {m})", idx + 1));
            }
            loops.push(Loop { ell, m });
        }
        if loops.is_empty() {
            return Err(invalid!("a chain of loops needs at least one loop"));
        }
        Ok(ChainOfLoops { loops })
    }

    /// `g` identical loops.
    pub fn uniform(genus: usize, ell: Rational, m: Rational) -> Result<Self> {
        Self::new(std::iter::repeat_n((ell, m), genus))
    }

    /// The default graph used when none is supplied: `ell_i = 2g`, `m_i = 1`.
    /// Generic for every genus.
    pub fn default_for_genus(genus: usize) -> Result<Self> {
        Self::uniform(genus, Rational::from(2 * genus as i64), Rational::from(1))
    }

    pub fn genus(&self) -> usize {
        self.loops.len()
    }

    pub fn loops(&self) -> &[Loop] {
        &self.loops
    }

    /// Loop `i`, 1-based.
    pub fn loop_at(&self, i: usize) -> &Loop {
        &self.loops[i - 1]
    }

    /// True iff no `ell_i / m_i` is a ratio of two positive integers summing to
    /// at most `2g - 2`. Only the lowest-terms form needs checking, since any other
    /// representation has a larger sum.
    pub fn is_generic(&self) -> bool {
        self.non_generic_loop().is_none()
    }

    /// The first loop (1-based) that breaks genericity.
    pub fn non_generic_loop(&self) -> Option<usize> {
        let bound = BigInt::from(2 * self.genus() as i64 - 2);
        self.loops
            .iter()
            .position(|lp| {
                let ratio = &lp.ell / &lp.m;
                ratio.numer() + ratio.denom() <= bound
            })
            .map(|idx| idx + 1)
    }

    /// The same metric graph read from the other end: loop `i` of the result is
    /// loop `g + 1 - i` of `self`.
    pub fn reflect(&self) -> ChainOfLoops {
        ChainOfLoops { loops: self.loops.iter().rev().cloned().collect() }
    }

    /// Two chips on each interior vertex `v_1..v_{g-1}`. Keys are vertex indices.
    pub fn canonical_divisor(&self) -> BTreeMap<usize, i64> {
        (1..self.genus()).map(|v| (v, 2)).collect()
    }
}
