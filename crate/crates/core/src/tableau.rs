//! Rectangular standard Young tableaux.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{invalid, Result};

/// Default cap on `m * n` for [`enumerate`].
pub const DEFAULT_ENUMERATION_CEILING: usize = 16;

/// An `m x n` standard Young tableau, stored row-major. Always valid.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RectTableau {
    rows: usize,
    cols: usize,
    entries: Vec<usize>,
}

/// Position and counting data for one entry, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStats {
    pub row: usize,
    pub col: usize,
    /// Entries strictly less than `i` in the first column.
    pub less_in_first: usize,
    /// Entries strictly less than `i` in the last column.
    pub less_in_last: usize,
}

/// True iff `rows` is a nonempty rectangle filled with `1..=mn`, increasing along
/// every row and down every column.
pub fn validate(rows: &[Vec<usize>]) -> bool {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    if m == 0 || n == 0 || rows.iter().any(|row| row.len() != n) {
        return false;
    }
    let mut seen = vec![false; m * n + 1];
    for (i, row) in rows.iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            if a == 0 || a > m * n || std::mem::replace(&mut seen[a], true) {
                return false;
            }
            if j > 0 && row[j - 1] >= a {
                return false;
            }
            if i > 0 && rows[i - 1][j] >= a {
                return false;
            }
        }
    }
    true
}

impl RectTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        if !validate(&rows) {
            return Err(invalid!("not a rectangular standard Young tableau: {rows:?}"));
        }
        let (m, n) = (rows.len(), rows[0].len());
        Ok(RectTableau { rows: m, cols: n, entries: rows.into_iter().flatten().collect() })
    }

    /// The single-row tableau `1..=k`.
    pub fn single_row(k: usize) -> Self {
        RectTableau { rows: 1, cols: k, entries: (1..=k).collect() }
    }

    /// The single-column tableau `1..=k`.
    pub fn single_column(k: usize) -> Self {
        RectTableau { rows: k, cols: 1, entries: (1..=k).collect() }
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    /// `m * n`.
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> usize {
        self.entries[(row - 1) * self.cols + (col - 1)]
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.cols).map(<[usize]>::to_vec).collect()
    }

    /// Row-major reading word.
    pub fn reading_word(&self) -> &[usize] {
        &self.entries
    }

    /// 1-based `(row, col)` of entry `i`.
    pub fn position(&self, i: usize) -> Result<(usize, usize)> {
        let idx = self
            .entries
            .iter()
            .position(|&a| a == i)
            .ok_or_else(|| invalid!("entry {i} out of range 1..={}", self.size()))?;
        Ok((idx / self.cols + 1, idx % self.cols + 1))
    }

    /// `b_{i,j} = mn + 1 - a_{m+1-i, n+1-j}`: rotate by a half turn and complement.
    pub fn evacuate(&self) -> RectTableau {
        let total = self.size() + 1;
        RectTableau {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().rev().map(|&a| total - a).collect(),
        }
    }

    pub fn transpose(&self) -> RectTableau {
        let mut entries = Vec::with_capacity(self.size());
        for j in 1..=self.cols {
            for i in 1..=self.rows {
                entries.push(self.get(i, j));
            }
        }
        RectTableau { rows: self.cols, cols: self.rows, entries }
    }

    pub fn cell_stats(&self, i: usize) -> Result<CellStats> {
        let (row, col) = self.position(i)?;
        let below = |c: usize| (1..=self.rows).filter(|&r| self.get(r, c) < i).count();
        Ok(CellStats { row, col, less_in_first: below(1), less_in_last: below(self.cols) })
    }

    /// Number of cells in column `col` (1-based) holding an entry `<= i`.
    /// `i` may be anything in `0..=mn`.
    pub fn count_at_most_in_col(&self, i: usize, col: usize) -> Result<usize> {
        if col == 0 || col > self.cols {
            return Err(invalid!("column {col} out of range 1..={}", self.cols));
        }
        if i > self.size() {
            return Err(invalid!("entry bound {i} exceeds {}", self.size()));
        }
        Ok(self.column_counts(i)[col - 1])
    }

    /// `l_s` for every column `s`: how many entries `<= i` each column holds.
    pub(crate) fn column_counts(&self, i: usize) -> Vec<usize> {
        let mut counts = vec![0; self.cols];
        for (idx, &a) in self.entries.iter().enumerate() {
            if a <= i {
                counts[idx % self.cols] += 1;
            }
        }
        counts
    }
}

impl fmt::Debug for RectTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RectTableau{:?}", self.to_rows())
    }
}

/// Every `m x n` standard Young tableau, each once, in lexicographic order of the
/// row-major reading word. Fails if `m * n` exceeds `ceiling`.
pub fn enumerate(m: usize, n: usize, ceiling: usize) -> Result<std::vec::IntoIter<RectTableau>> {
    if m == 0 || n == 0 {
        return Err(invalid!("shape {m}x{n} has an empty side"));
    }
    if m * n > ceiling {
        return Err(invalid!("shape {m}x{n} has {} cells, above the ceiling {ceiling}", m * n));
    }
    let mut out = Vec::new();
    let mut heights = vec![0usize; n];
    let mut entries = vec![0usize; m * n];
    fill(1, m, n, &mut heights, &mut entries, &mut out);
    out.sort_by(|a, b| a.entries.cmp(&b.entries));
    Ok(out.into_iter())
}

// Places `next` in the topmost free cell of each column that can take it.
fn fill(next: usize, m: usize, n: usize, heights: &mut [usize], entries: &mut [usize], out: &mut Vec<RectTableau>) {
    if next > m * n {
        out.push(RectTableau { rows: m, cols: n, entries: entries.to_vec() });
        return;
    }
    for col in 0..n {
        let h = heights[col];
        if h < m && (col == 0 || heights[col - 1] > h) {
            entries[h * n + col] = next;
            heights[col] += 1;
            fill(next + 1, m, n, heights, entries, out);
            heights[col] -= 1;
        }
    }
}

/// Hook length formula: `(mn)! / prod (m - i + n - j + 1)` over 1-based cells.
pub fn hook_count(m: usize, n: usize) -> BigUint {
    let numerator: BigUint = (1..=m * n).map(BigUint::from).product();
    let hooks: BigUint = (1..=m).flat_map(|i| (1..=n).map(move |j| BigUint::from((m - i) + (n - j) + 1))).product();
    numerator / hooks
}
