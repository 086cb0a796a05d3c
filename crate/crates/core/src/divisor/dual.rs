//! The Riemann-Roch dual `K - c` of a tableau image.

use crate::error::{broken, Result};
use crate::graph::ChainOfLoops;
use crate::tableau::RectTableau;

use super::{phi, UnderlineSeq};

/// `z_i = #{entries > i in the last row or last column} + 1` for `i = 0..g-1`, the
/// corner cell counted once.
pub fn z_sequence(tableau: &RectTableau) -> Vec<u64> {
    let (m, n) = (tableau.num_rows(), tableau.num_cols());
    let mut border: Vec<usize> = (1..=n).map(|j| tableau.get(m, j)).collect();
    border.extend((1..m).map(|i| tableau.get(i, n)));
    (0..tableau.size()).map(|i| border.iter().filter(|&&a| a > i).count() as u64 + 1).collect()
}

/// Dual computed from the tableau: `y_i = z_{i-1} - x̱_i - 2` with head
/// `g - d + r - 1`. Agrees with the image of the transposed tableau.
pub fn dual_via_tableau(tableau: &RectTableau, graph: &ChainOfLoops) -> Result<UnderlineSeq> {
    let c = phi(tableau, graph)?;
    let z = z_sequence(tableau);
    let y = c
        .distances()
        .iter()
        .zip(&z)
        .enumerate()
        .map(|(idx, (&x, &zi))| {
            let value = zi as i64 - x as i64 - 2;
            u64::try_from(value).map_err(|_| broken!("negative dual distance {value} at loop {}", idx + 1))
        })
        .collect::<Result<Vec<_>>>()?;
    let g = graph.genus() as i64;
    UnderlineSeq::new(graph.clone(), g - c.degree() + c.head() - 1, y)
}

/// `v_0`-reduction of `K - c` by firing the tail of the chain from right to left.
///
/// `z` holds the chips gathered on the current vertex (starting with the two that
/// `K` puts on `v_{g-1}`). Reading loops `g-1, ..., 1`:
/// an empty loop adds a chip and leaves one at `z - 1`; a chip at `z - 1` is absorbed
/// and the loop empties; a chip at `0 < x̱ < z - 2` leaves one at `z - x̱ - 2`.
/// Any other value cannot occur for a tableau image and is reported as an error.
pub fn dual_reduce(c: &UnderlineSeq) -> Result<UnderlineSeq> {
    let xu = c.distances();
    let g = xu.len();
    if xu[g - 1] != 0 {
        return Err(broken!("last loop carries a chip at {}; not a tableau image", xu[g - 1]));
    }
    let mut y = vec![0u64; g];
    let mut z: u64 = 2;
    for k in (1..g).rev() {
        let x = xu[k - 1];
        if x == 0 {
            y[k - 1] = z - 1;
            z += 1;
        } else if x == z - 1 {
            y[k - 1] = 0;
            z += 1;
        } else if x + 2 < z {
            y[k - 1] = z - x - 2;
        } else {
            return Err(broken!("loop {k}: distance {x} against {z} gathered chips; not a tableau image"));
        }
    }
    // v_0 starts at -head in K - c; the recurrence counted it as if it held 2.
    let head = z as i64 - 2 - c.head();
    let (gi, d) = (g as i64, c.degree());
    if head != gi - d + c.head() - 1 {
        return Err(broken!("dual head {head} disagrees with g - d + r - 1 = {}", gi - d + c.head() - 1));
    }
    let dual = UnderlineSeq::new(c.graph().clone(), head, y)?;
    if dual.degree() != 2 * gi - 2 - d {
        return Err(broken!("dual has degree {}, expected {}", dual.degree(), 2 * gi - 2 - d));
    }
    Ok(dual)
}
