//! Bimatrix equilibrium search.
//!
//! Support enumeration for games with at most three actions per player,
//! plus a pure-equilibrium scan that works at any size. Biased and
//! restricted biased finite games reduce to bimatrix games over effective
//! matrices, so this is the single equilibrium engine for the finite case.

use crate::util::simplex_grid;

/// Expected payoff of player 1's pure action `i` against `s2` under matrix
/// `a` (row-indexed by player 1's action).
pub fn row_score(a: &[Vec<f64>], i: usize, s2: &[f64]) -> f64 {
    a[i].iter().zip(s2).map(|(v, w)| v * w).sum()
}

/// Expected payoff of player 2's pure action `j` against `s1` under matrix
/// `b` (row-indexed by player 1's action).
pub fn col_score(b: &[Vec<f64>], j: usize, s1: &[f64]) -> f64 {
    s1.iter().enumerate().map(|(i, w)| w * b[i][j]).sum()
}

/// Indices of player 1's best-reply actions to `s2`, ties within `tol`.
pub fn best_rows(a: &[Vec<f64>], s2: &[f64], tol: f64) -> Vec<usize> {
    let scores: Vec<f64> = (0..a.len()).map(|i| row_score(a, i, s2)).collect();
    let best = scores.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    (0..a.len()).filter(|&i| scores[i] >= best - tol).collect()
}

/// Indices of player 2's best-reply actions to `s1`, ties within `tol`.
pub fn best_cols(b: &[Vec<f64>], s1: &[f64], tol: f64) -> Vec<usize> {
    let n2 = b[0].len();
    let scores: Vec<f64> = (0..n2).map(|j| col_score(b, j, s1)).collect();
    let best = scores.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    (0..n2).filter(|&j| scores[j] >= best - tol).collect()
}

/// All pure-strategy equilibria of the bimatrix game `(a, b)`.
pub fn pure_equilibria(a: &[Vec<f64>], b: &[Vec<f64>], tol: f64) -> Vec<(usize, usize)> {
    let (n1, n2) = (a.len(), b[0].len());
    let mut out = Vec::new();
    for i in 0..n1 {
        for j in 0..n2 {
            let best_col = (0..n1).map(|k| a[k][j]).fold(f64::NEG_INFINITY, f64::max);
            let best_row = (0..n2).map(|k| b[i][k]).fold(f64::NEG_INFINITY, f64::max);
            if a[i][j] >= best_col - tol && b[i][j] >= best_row - tol {
                out.push((i, j));
            }
        }
    }
    out
}

/// Solves a small dense linear system in place. Returns `None` when the
/// matrix is singular to working precision.
fn solve(mut m: Vec<Vec<f64>>, mut rhs: Vec<f64>) -> Option<Vec<f64>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&r, &s| m[r][col].abs().partial_cmp(&m[s][col].abs()).unwrap())?;
        if m[pivot][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in 0..n {
            if row != col {
                let f = m[row][col] / m[col][col];
                for k in col..n {
                    m[row][k] -= f * m[col][k];
                }
                rhs[row] -= f * rhs[col];
            }
        }
    }
    Some((0..n).map(|i| rhs[i] / m[i][i]).collect())
}

/// All mixed equilibria found by equal-size support enumeration, supports up
/// to `max_support` actions per player. Degenerate (singular) supports are
/// skipped; pure equilibria are always included.
pub fn support_enumeration(
    a: &[Vec<f64>],
    b: &[Vec<f64>],
    max_support: usize,
    tol: f64,
) -> Vec<(Vec<f64>, Vec<f64>)> {
    let (n1, n2) = (a.len(), b[0].len());
    let mut out: Vec<(Vec<f64>, Vec<f64>)> = Vec::new();

    for (i, j) in pure_equilibria(a, b, tol) {
        let mut s1 = vec![0.0; n1];
        let mut s2 = vec![0.0; n2];
        s1[i] = 1.0;
        s2[j] = 1.0;
        push_dedup(&mut out, (s1, s2));
    }

    let supports_1 = subsets(n1, max_support.min(n1));
    let supports_2 = subsets(n2, max_support.min(n2));
    for sup1 in &supports_1 {
        for sup2 in &supports_2 {
            if sup1.len() < 2 || sup1.len() != sup2.len() {
                continue;
            }
            if let Some(eq) = solve_support(a, b, sup1, sup2, tol) {
                push_dedup(&mut out, eq);
            }
        }
    }
    out.sort_by(|x, y| {
        x.0.iter()
            .chain(&x.1)
            .partial_cmp(y.0.iter().chain(&y.1))
            .unwrap()
    });
    out
}

/// Equalizer solve on a fixed support pair: player 2's mixture makes player
/// 1 indifferent across `sup1` (and vice versa), weights nonnegative, and no
/// action outside the support does better.
fn solve_support(
    a: &[Vec<f64>],
    b: &[Vec<f64>],
    sup1: &[usize],
    sup2: &[usize],
    tol: f64,
) -> Option<(Vec<f64>, Vec<f64>)> {
    let k = sup1.len();
    let (n1, n2) = (a.len(), b[0].len());

    // Rows 0..k-1: indifference of player 1 between sup1[0] and sup1[m];
    // last row: weights sum to one.
    let mut m2 = vec![vec![0.0; k]; k];
    let mut r2 = vec![0.0; k];
    for m in 1..k {
        for (c, &j) in sup2.iter().enumerate() {
            m2[m - 1][c] = a[sup1[0]][j] - a[sup1[m]][j];
        }
    }
    m2[k - 1] = vec![1.0; k];
    r2[k - 1] = 1.0;
    let w2 = solve(m2, r2)?;

    let mut m1 = vec![vec![0.0; k]; k];
    let mut r1 = vec![0.0; k];
    for m in 1..k {
        for (c, &i) in sup1.iter().enumerate() {
            m1[m - 1][c] = b[i][sup2[0]] - b[i][sup2[m]];
        }
    }
    m1[k - 1] = vec![1.0; k];
    r1[k - 1] = 1.0;
    let w1 = solve(m1, r1)?;

    if w1.iter().chain(&w2).any(|&w| w < -1e-9) {
        return None;
    }
    let mut s1 = vec![0.0; n1];
    let mut s2 = vec![0.0; n2];
    for (c, &i) in sup1.iter().enumerate() {
        s1[i] = w1[c].max(0.0);
    }
    for (c, &j) in sup2.iter().enumerate() {
        s2[j] = w2[c].max(0.0);
    }
    normalize(&mut s1);
    normalize(&mut s2);

    // Optimality outside the supports.
    let v1 = row_score(a, sup1[0], &s2);
    if (0..n1).any(|i| row_score(a, i, &s2) > v1 + tol) {
        return None;
    }
    let v2 = col_score(b, sup2[0], &s1);
    if (0..n2).any(|j| col_score(b, j, &s1) > v2 + tol) {
        return None;
    }
    Some((s1, s2))
}

fn normalize(w: &mut [f64]) {
    let sum: f64 = w.iter().sum();
    if sum > 0.0 {
        for v in w.iter_mut() {
            *v /= sum;
        }
    }
}

fn subsets(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if set.len() <= max {
            out.push(set);
        }
    }
    out
}

fn push_dedup(out: &mut Vec<(Vec<f64>, Vec<f64>)>, eq: (Vec<f64>, Vec<f64>)) {
    let close = |x: &[f64], y: &[f64]| {
        x.iter().zip(y).all(|(a, b)| (a - b).abs() < 1e-9)
    };
    if !out.iter().any(|(s1, s2)| close(s1, &eq.0) && close(s2, &eq.1)) {
        out.push(eq);
    }
}

/// Representative points of the face of the simplex spanned by `actions`,
/// capped near `limit` points: vertices, barycenter, and a barycentric grid.
pub fn face_samples(n: usize, actions: &[usize], limit: usize) -> Vec<Vec<f64>> {
    let k = actions.len();
    let mut out: Vec<Vec<f64>> = Vec::new();
    if k == 0 {
        return out;
    }
    let lift = |w: &[f64]| {
        let mut full = vec![0.0; n];
        for (c, &a) in actions.iter().enumerate() {
            full[a] = w[c];
        }
        full
    };
    if k == 1 {
        return vec![lift(&[1.0])];
    }
    // Pick the densest barycentric resolution whose point count fits.
    let mut res = 1usize;
    while count_points(k, res + 1) <= limit && res < 256 {
        res += 1;
    }
    for p in simplex_grid(k, res) {
        out.push(lift(&p));
    }
    out
}

fn count_points(k: usize, n: usize) -> usize {
    // C(n + k - 1, k - 1)
    let mut num = 1usize;
    let mut den = 1usize;
    for i in 0..(k - 1) {
        num *= n + 1 + i;
        den *= i + 1;
    }
    num / den
}
