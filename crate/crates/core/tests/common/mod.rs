//! Independent reference implementations used by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use chipchain::{ChainOfLoops, DivisorSeq, LatticePath, Rational, RectTableau, UnderlineSeq};

pub fn q(n: i64) -> Rational {
    Rational::from(n)
}

pub fn running_tableau() -> RectTableau {
    RectTableau::from_rows(vec![vec![1, 3, 4], vec![2, 5, 6]]).unwrap()
}

pub fn gamma6() -> ChainOfLoops {
    ChainOfLoops::uniform(6, q(10), q(1)).unwrap()
}

/// Every rectangular shape with `m n <= ceiling`.
pub fn shapes_up_to(ceiling: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m in 1..=ceiling {
        for n in 1..=ceiling / m {
            out.push((m, n));
        }
    }
    out
}

/// Standard tableaux of shape `m x n` by filtering all permutations, sorted by
/// reading word.
pub fn brute_force_tableaux(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn permute(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, n: usize) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for idx in 0..rest.len() {
            let v = rest.remove(idx);
            let pos = prefix.len();
            let (row, col) = (pos / n, pos % n);
            let left_ok = col == 0 || prefix[pos - 1] < v;
            let up_ok = row == 0 || prefix[pos - n] < v;
            if left_ok && up_ok {
                prefix.push(v);
                permute(prefix, rest, out, n);
                prefix.pop();
            }
            rest.insert(idx, v);
        }
    }
    let mut out = Vec::new();
    permute(&mut Vec::new(), &mut (1..=m * n).collect(), &mut out, n);
    out.sort();
    out
}

/// Number of standard tableaux of shape `m x n`, counted by adding one cell at a
/// time over the Young lattice of sub-shapes.
pub fn young_lattice_count(m: usize, n: usize) -> u128 {
    let mut layer: HashMap<Vec<usize>, u128> = HashMap::from([(vec![0; m], 1)]);
    for _ in 0..m * n {
        let mut next = HashMap::new();
        for (rows, count) in layer {
            for i in 0..m {
                let fits = rows[i] < n && (i == 0 || rows[i - 1] > rows[i]);
                if fits {
                    let mut grown = rows.clone();
                    grown[i] += 1;
                    *next.entry(grown).or_insert(0) += count;
                }
            }
        }
        layer = next;
    }
    layer.values().sum()
}

/// Lattice path of a tableau, built one entry at a time: `+e_j` when entry `i` sits
/// in column `j <= r`, all-`(-1)` when it sits in the last column.
pub fn incremental_path(t: &RectTableau) -> Vec<Vec<i64>> {
    let r = t.num_cols() - 1;
    let mut column = vec![0; t.size() + 1];
    for row in 1..=t.num_rows() {
        for col in 1..=t.num_cols() {
            column[t.get(row, col)] = col;
        }
    }
    let mut p: Vec<i64> = (0..r).map(|k| (r - k) as i64).collect();
    let mut points = vec![p.clone()];
    for &col in &column[1..] {
        if col <= r {
            p[col - 1] += 1;
        } else {
            p.iter_mut().for_each(|v| *v -= 1);
        }
        points.push(p.clone());
    }
    points
}

/// Abel-Jacobi image in `prod R / (ell_j + m_j) Z` with basepoint `v_0`. A point on
/// loop `i` at counter-clockwise distance `s` from `v_{i-1}` maps to
/// `(m_1, ..., m_{i-1}, s, 0, ..., 0)`.
pub struct Jacobian {
    m: Vec<Rational>,
    circ: Vec<Rational>,
}

impl Jacobian {
    pub fn new(graph: &ChainOfLoops) -> Self {
        Jacobian {
            m: graph.loops().iter().map(|lp| lp.m.clone()).collect(),
            circ: graph.loops().iter().map(|lp| &lp.ell + &lp.m).collect(),
        }
    }

    pub fn zero(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.m.len()]
    }

    /// Adds `coeff` times the image of the point at `s` on loop `i` (1-based).
    pub fn add_point(&self, acc: &mut [Rational], coeff: i64, i: usize, s: &Rational) {
        let c = q(coeff);
        for ((a, m), circ) in acc.iter_mut().zip(&self.m).zip(&self.circ).take(i - 1) {
            *a = (&*a + &(&c * m)).rem_euclid(circ);
        }
        acc[i - 1] = (&acc[i - 1] + &(&c * s)).rem_euclid(&self.circ[i - 1]);
    }

    /// Adds `coeff` times the image of vertex `v_i`.
    pub fn add_vertex(&self, acc: &mut [Rational], coeff: i64, i: usize) {
        if i > 0 {
            let m = self.m[i - 1].clone();
            self.add_point(acc, coeff, i, &m);
        }
    }

    pub fn of_divisor(&self, c: &DivisorSeq) -> Vec<Rational> {
        let mut acc = self.zero();
        for (idx, x) in c.positions().iter().enumerate() {
            if !x.is_zero() {
                self.add_point(&mut acc, 1, idx + 1, x);
            }
        }
        acc
    }

    pub fn of_canonical(&self) -> Vec<Rational> {
        let mut acc = self.zero();
        for i in 1..self.m.len() {
            self.add_vertex(&mut acc, 2, i);
        }
        acc
    }

    pub fn sub(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        a.iter().zip(b).zip(&self.circ).map(|((x, y), n)| (x - y).rem_euclid(n)).collect()
    }
}

/// Abel-Jacobi image, on the original chain, of a divisor given on the reflected
/// chain: its head sits on `v_g`, and a chip at counter-clockwise `s'` on loop
/// `g + 1 - i` of the reflection is the point at `m_i - s'` on loop `i`.
pub fn jacobian_of_reflected(graph: &ChainOfLoops, reflected: &DivisorSeq) -> Vec<Rational> {
    let jac = Jacobian::new(graph);
    let g = graph.genus();
    let mut acc = jac.zero();
    jac.add_vertex(&mut acc, reflected.d0(), g);
    for (idx, x) in reflected.positions().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let i = g - idx;
        let lp = graph.loop_at(i);
        jac.add_point(&mut acc, 1, i, &(&lp.m - x).rem_euclid(&lp.circumference()));
    }
    acc
}

/// `v`-reduced form of a divisor on the cycle `C_n` (unit edges, vertex `k` next to
/// `k +- 1 mod n`), by Dhar's burning algorithm. Chips off `v` must be nonnegative.
pub fn dhar_reduce_cycle(mut chips: Vec<i64>, v: usize) -> Vec<i64> {
    let n = chips.len();
    assert!(chips.iter().enumerate().all(|(k, &c)| k == v || c >= 0));
    loop {
        let mut burnt = vec![false; n];
        burnt[v] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for k in 0..n {
                if burnt[k] {
                    continue;
                }
                let fire_edges = burnt[(k + 1) % n] as i64 + burnt[(k + n - 1) % n] as i64;
                if fire_edges > chips[k] {
                    burnt[k] = true;
                    changed = true;
                }
            }
        }
        if burnt.iter().all(|&b| b) {
            return chips;
        }
        let unburnt: Vec<usize> = (0..n).filter(|&k| !burnt[k]).collect();
        for &k in &unburnt {
            for nb in [(k + 1) % n, (k + n - 1) % n] {
                if burnt[nb] {
                    chips[k] -= 1;
                    chips[nb] += 1;
                }
            }
        }
    }
}

pub fn underline(graph: &ChainOfLoops, head: i64, xu: &[u64]) -> UnderlineSeq {
    UnderlineSeq::new(graph.clone(), head, xu.to_vec()).unwrap()
}

pub fn path(dim: usize, points: &[&[i64]]) -> LatticePath {
    LatticePath::new(dim, points.iter().map(|p| p.to_vec()).collect()).unwrap()
}
