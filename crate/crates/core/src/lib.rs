//! Rectangular standard Young tableaux and divisor classes on chain-of-loops
//! metric graphs.
//!
//! A tableau of shape `(g - d + r) x (r + 1)` corresponds to a `v_0`-reduced divisor
//! of degree `d` and rank `r` on a generic chain of `g` loops, through the lattice
//! path it traces. Under this correspondence evacuation of the tableau is
//! reflection of the chain, and transposition is the Riemann-Roch dual `K - c`.
//!
//! ```
//! use chipchain::{phi, reflect_divisor, dual_reduce, ChainOfLoops, RectTableau, Rational};
//!
//! let graph = ChainOfLoops::uniform(6, Rational::from(10), Rational::from(1)).unwrap();
//! let t = RectTableau::from_rows(vec![vec![1, 3, 4], vec![2, 5, 6]]).unwrap();
//! let c = phi(&t, &graph).unwrap();
//! assert_eq!(c.distances(), &[2, 3, 1, 0, 1, 0]);
//! assert_eq!(reflect_divisor(&c).unwrap().divisor.distances(), &[2, 1, 3, 2, 0, 0]);
//! assert_eq!(dual_reduce(&c).unwrap().distances(), &[1, 0, 1, 2, 0, 0]);
//! ```

pub mod cli;
pub mod divisor;
pub mod error;
pub mod graph;
pub mod path;
pub mod rational;
pub mod tableau;

pub use divisor::{
    alpha, dual_reduce, dual_via_tableau, phi, phi_preimage, phi_prime_ev, rank, rank_with_witness, recenter_step,
    reflect_divisor, reflect_raw, rho, sigma_formula, z_sequence, DivisorSeq, ReductionState, Reflection, UnderlineSeq,
};
pub use error::{Error, Result};
pub use graph::{ChainOfLoops, Loop};
pub use path::{is_in_weyl, LatticePath, StepKind};
pub use rational::Rational;
pub use tableau::{enumerate, hook_count, CellStats, RectTableau};
