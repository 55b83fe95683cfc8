//! Small numeric helpers: golden-section search, bisection, simplex grids.

/// Golden-section maximization of a unimodal function on `[a, b]`.
/// Returns `(argmax, max)` with the bracket narrowed to `xtol`.
pub fn golden_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, xtol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    if b - a <= xtol {
        let m = 0.5 * (a + b);
        return (m, f(m));
    }
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > xtol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let m = 0.5 * (a + b);
    let fm = f(m);
    if fm >= fc && fm >= fd {
        (m, fm)
    } else if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Bisection on a boolean predicate: `pred(lo_ok)` must hold, `pred(hi_bad)`
/// must not. Returns the boundary point where the predicate stops holding,
/// narrowed to `xtol`. Works for either ordering of `lo_ok`/`hi_bad`.
pub fn bisect_boundary<P: Fn(f64) -> bool>(pred: P, mut ok: f64, mut bad: f64, xtol: f64) -> f64 {
    debug_assert!(pred(ok) && !pred(bad));
    while (ok - bad).abs() > xtol {
        let mid = 0.5 * (ok + bad);
        if pred(mid) {
            ok = mid;
        } else {
            bad = mid;
        }
    }
    ok
}

/// All points of the barycentric grid of resolution `n` on the `(k-1)`-simplex,
/// i.e. nonnegative integer compositions of `n` into `k` parts, scaled by `1/n`.
pub fn simplex_grid(k: usize, n: usize) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; k];
    fill(&mut out, &mut current, 0, n, k);
    fn fill(out: &mut Vec<Vec<f64>>, cur: &mut Vec<usize>, idx: usize, left: usize, k: usize) {
        if idx == k - 1 {
            cur[idx] = left;
            out.push(cur.iter().map(|&c| c as f64 / cur.iter().sum::<usize>().max(1) as f64).collect());
            return;
        }
        for take in 0..=left {
            cur[idx] = take;
            fill(out, cur, idx + 1, left - take, k);
        }
    }
    out
}

/// Merges a list of closed intervals, joining any that overlap or sit within
/// `gap` of each other. Returns intervals sorted by lower end.
pub fn merge_intervals(mut ivs: Vec<(f64, f64)>, gap: f64) -> Vec<(f64, f64)> {
    ivs.retain(|(a, b)| b >= a);
    ivs.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    let mut out: Vec<(f64, f64)> = Vec::new();
    for (a, b) in ivs {
        match out.last_mut() {
            Some(last) if a <= last.1 + gap => last.1 = last.1.max(b),
            _ => out.push((a, b)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_peak() {
        let (x, v) = golden_max(|x| -(x - 0.3).powi(2), 0.0, 1.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-8);
        assert!(v.abs() < 1e-15);
    }

    #[test]
    fn golden_handles_boundary_max() {
        let (x, _) = golden_max(|x| x, 0.0, 1.0, 1e-10);
        assert!((x - 1.0).abs() < 1e-8);
    }

    #[test]
    fn bisect_recovers_threshold() {
        let b = bisect_boundary(|x| x * x <= 2.0, 0.0, 2.0, 1e-12);
        assert!((b - 2f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn simplex_grid_covers_vertices() {
        let pts = simplex_grid(3, 4);
        assert_eq!(pts.len(), 15); // C(6,2)
        assert!(pts.iter().any(|p| p == &vec![1.0, 0.0, 0.0]));
        assert!(pts.iter().any(|p| p == &vec![0.0, 0.0, 1.0]));
        for p in &pts {
            assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn interval_merge() {
        let m = merge_intervals(vec![(0.5, 0.6), (0.0, 0.2), (0.15, 0.4)], 0.01);
        assert_eq!(m, vec![(0.0, 0.4), (0.5, 0.6)]);
    }
}
