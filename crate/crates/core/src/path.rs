//! Lattice paths in `Z^r` and the bijection with rectangular tableaux.
//!
//! A path is stored as its points `p_0..p_g`. Every step is a standard basis
//! vector, the all-`(-1)` vector, or zero. Dimension `r = 0` is allowed: every point
//! is the empty vector and every step is classified as [`StepKind::Linger`].

use crate::error::{invalid, Result};
use crate::tableau::RectTableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// `+e_j`, with `j` 1-based.
    Up(usize),
    DownAll,
    Linger,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    dim: usize,
    points: Vec<Vec<i64>>,
    steps: Vec<StepKind>,
}

/// Classifies `p_i - p_{i-1}` for every `i`; fails if a point has the wrong length
/// or a step is not one of the three kinds.
pub fn classify_points(dim: usize, points: &[Vec<i64>]) -> Result<Vec<StepKind>> {
    if let Some(bad) = points.iter().position(|p| p.len() != dim) {
        return Err(invalid!("point {bad} has {} coordinates, expected {dim}", points[bad].len()));
    }
    points
        .windows(2)
        .enumerate()
        .map(|(idx, w)| {
            classify_step(&w[0], &w[1])
                .ok_or_else(|| invalid!("step {} from {:?} to {:?} is not a lattice step", idx + 1, w[0], w[1]))
        })
        .collect()
}

fn classify_step(from: &[i64], to: &[i64]) -> Option<StepKind> {
    let diff: Vec<i64> = to.iter().zip(from).map(|(b, a)| b - a).collect();
    if diff.iter().all(|&d| d == 0) {
        return Some(StepKind::Linger);
    }
    if diff.iter().all(|&d| d == -1) {
        return Some(StepKind::DownAll);
    }
    let mut ups = diff.iter().enumerate().filter(|(_, &d)| d != 0);
    match (ups.next(), ups.next()) {
        (Some((j, 1)), None) => Some(StepKind::Up(j + 1)),
        _ => None,
    }
}

/// Strictly decreasing with a positive last coordinate. Vacuously true for `r = 0`.
pub fn is_in_weyl(point: &[i64]) -> bool {
    point.windows(2).all(|w| w[0] > w[1]) && point.last().is_none_or(|&last| last > 0)
}

impl LatticePath {
    pub fn new(dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(invalid!("a lattice path needs at least one point"));
        }
        let steps = classify_points(dim, &points)?;
        Ok(LatticePath { dim, points, steps })
    }

    /// The `r = 0` path with `g + 1` empty points.
    pub fn empty(g: usize) -> Self {
        LatticePath { dim: 0, points: vec![Vec::new(); g + 1], steps: vec![StepKind::Linger; g] }
    }

    /// The dimension `r`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of steps `g`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    /// `p_i`.
    pub fn point(&self, i: usize) -> &[i64] {
        &self.points[i]
    }

    pub fn steps(&self) -> &[StepKind] {
        &self.steps
    }

    /// Step `i` (1-based), i.e. `p_i - p_{i-1}`.
    pub fn step(&self, i: usize) -> StepKind {
        self.steps[i - 1]
    }

    /// Coordinate `j` (1-based) along the whole path.
    pub fn coordinate_trace(&self, j: usize) -> Vec<i64> {
        self.points.iter().map(|p| p[j - 1]).collect()
    }

    /// Every point in the Weyl chamber and `p_0 = (d_0, d_0 - 1, ..., d_0 - r + 1)`
    /// for a positive `d_0`.
    pub fn is_lingering(&self) -> bool {
        let p0 = &self.points[0];
        let staircase = p0.iter().enumerate().all(|(k, &c)| c == p0[0] - k as i64);
        staircase && self.points.iter().all(|p| is_in_weyl(p))
    }

    /// Lingering, no zero steps, as many `DownAll` as `Up(1)` steps, and
    /// `p_0 = (r, ..., 1)`. Every `r = 0` path qualifies.
    pub fn is_non_lingering(&self) -> bool {
        if self.dim == 0 {
            return true;
        }
        let start_ok = self.points[0].iter().enumerate().all(|(k, &c)| c == (self.dim - k) as i64);
        let downs = self.steps.iter().filter(|s| **s == StepKind::DownAll).count();
        let firsts = self.steps.iter().filter(|s| **s == StepKind::Up(1)).count();
        start_ok && self.is_lingering() && !self.steps.contains(&StepKind::Linger) && downs == firsts
    }

    /// Fills a `(g / (r + 1)) x (r + 1)` tableau: entry `i` goes to the topmost free
    /// cell of column `j` for `Up(j)` and of column `r + 1` for `DownAll`.
    pub fn to_tableau(&self) -> Result<RectTableau> {
        if !self.is_non_lingering() {
            return Err(invalid!("path is not non-lingering"));
        }
        if self.dim == 0 {
            if self.is_empty() {
                return Err(invalid!("an r = 0 path needs at least one step"));
            }
            return Ok(RectTableau::single_column(self.len()));
        }
        let cols = self.dim + 1;
        let rows = self.steps.iter().filter(|s| **s == StepKind::DownAll).count();
        if rows == 0 {
            return Err(invalid!("path has no steps"));
        }
        let mut grid = vec![vec![0usize; cols]; rows];
        let mut heights = vec![0usize; cols];
        for (idx, step) in self.steps.iter().enumerate() {
            let col = match *step {
                StepKind::Up(j) => j - 1,
                StepKind::DownAll => cols - 1,
                StepKind::Linger => unreachable!("non-lingering path"),
            };
            grid[heights[col]][col] = idx + 1;
            heights[col] += 1;
        }
        RectTableau::from_rows(grid)
    }

    /// `p_i(j) = (r + 1 - j) + l_j - l_{r+1}`, where `l_s` counts entries `<= i` in
    /// column `s`.
    pub fn from_tableau(tableau: &RectTableau) -> LatticePath {
        let r = tableau.num_cols() - 1;
        let g = tableau.size();
        let points = (0..=g)
            .map(|i| {
                let counts = tableau.column_counts(i);
                (1..=r).map(|j| (r + 1 - j + counts[j - 1]) as i64 - counts[r] as i64).collect()
            })
            .collect();
        LatticePath::new(r, points).expect("closed form yields lattice steps")
    }
}
