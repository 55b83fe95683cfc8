//! Game and strategy data model.
//!
//! Two universes: interval games (payoff expressions over a rectangle) and
//! finite games (payoff matrices over mixed actions, ≤3 actions per player
//! for mixed-equilibrium search, unbounded for pure-only analysis). All
//! types are immutable after construction.

use crate::error::{BbeError, Result};
use crate::expr::Expr;
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Player {
    One,
    Two,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::One => Player::Two,
            Player::Two => Player::One,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Player::One => 0,
            Player::Two => 1,
        }
    }

    pub const BOTH: [Player; 2] = [Player::One, Player::Two];
}

/// A strategy: a scalar in the player's interval, or a point in the action
/// simplex.
#[derive(Debug, Clone, PartialEq)]
pub enum Strategy {
    Scalar(f64),
    Mixed(Vec<f64>),
}

impl Strategy {
    pub fn scalar(&self) -> f64 {
        match self {
            Strategy::Scalar(x) => *x,
            Strategy::Mixed(_) => panic!("mixed strategy where scalar expected"),
        }
    }

    pub fn weights(&self) -> &[f64] {
        match self {
            Strategy::Mixed(w) => w,
            Strategy::Scalar(_) => panic!("scalar strategy where mixed expected"),
        }
    }

    /// Degenerate mixed action putting mass one on `action`.
    pub fn pure(action: usize, n: usize) -> Strategy {
        let mut w = vec![0.0; n];
        w[action] = 1.0;
        Strategy::Mixed(w)
    }

    /// L-infinity distance between strategies of the same shape.
    pub fn distance(&self, other: &Strategy) -> f64 {
        match (self, other) {
            (Strategy::Scalar(a), Strategy::Scalar(b)) => (a - b).abs(),
            (Strategy::Mixed(a), Strategy::Mixed(b)) => a
                .iter()
                .zip(b.iter())
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max),
            _ => f64::INFINITY,
        }
    }
}

/// Validates a simplex weight vector: nonnegative, sums to 1 within
/// tolerance.
pub fn check_simplex(w: &[f64]) -> Result<()> {
    if w.is_empty() {
        return Err(BbeError::Validation("empty weight vector".into()));
    }
    if w.iter().any(|x| !x.is_finite() || *x < -tol::SIMPLEX_TOL) {
        return Err(BbeError::Validation(format!("negative weight in {w:?}")));
    }
    let sum: f64 = w.iter().sum();
    if (sum - 1.0).abs() > tol::SIMPLEX_TOL {
        return Err(BbeError::Validation(format!(
            "weights sum to {sum}, expected 1"
        )));
    }
    Ok(())
}

/// An interval game: payoff expression trees over `[lo_1,hi_1]x[lo_2,hi_2]`.
///
/// Payoffs are always evaluated in profile order: `payoff_i(s_1, s_2)`.
#[derive(Debug, Clone)]
pub struct IntervalGame {
    pub lo: [f64; 2],
    pub hi: [f64; 2],
    payoff: [Expr; 2],
    /// Per-player outcome of the numerical own-strategy concavity check.
    /// A failing check does not reject the game; downstream equilibrium
    /// scans lose their completeness guarantee and reports flag it.
    pub concave_own: [bool; 2],
}

impl IntervalGame {
    pub fn new(lo: [f64; 2], hi: [f64; 2], payoff_1: Expr, payoff_2: Expr) -> Result<Self> {
        for i in 0..2 {
            if !(lo[i].is_finite() && hi[i].is_finite() && lo[i] < hi[i]) {
                return Err(BbeError::Validation(format!(
                    "player {} interval [{}, {}] is not a proper bounded interval",
                    i + 1,
                    lo[i],
                    hi[i]
                )));
            }
        }
        let mut game = IntervalGame {
            lo,
            hi,
            payoff: [payoff_1, payoff_2],
            concave_own: [true, true],
        };
        game.validate_rectangle()?;
        game.concave_own = [game.check_concavity(Player::One), game.check_concavity(Player::Two)];
        Ok(game)
    }

    /// Every payoff must evaluate without error on a lattice over the full
    /// rectangle.
    fn validate_rectangle(&self) -> Result<()> {
        let n = tol::LATTICE_33;
        for ix in 0..n {
            for iy in 0..n {
                let s1 = self.lo[0] + (self.hi[0] - self.lo[0]) * ix as f64 / (n - 1) as f64;
                let s2 = self.lo[1] + (self.hi[1] - self.lo[1]) * iy as f64 / (n - 1) as f64;
                for p in Player::BOTH {
                    self.payoff[p.index()].eval(s1, s2).map_err(|e| {
                        BbeError::Validation(format!(
                            "payoff {} fails at ({s1}, {s2}): {e}",
                            p.index() + 1
                        ))
                    })?;
                }
            }
        }
        Ok(())
    }

    /// Midpoint test on a grid: concave iff the midpoint value is at least
    /// the chord average minus a small slack everywhere on every opponent
    /// slice.
    fn check_concavity(&self, player: Player) -> bool {
        let n = tol::LATTICE_33;
        let range = self.payoff_range();
        let slack = 1e-9 * range.max(1.0);
        for k in 0..n {
            let opp = self.lerp(player.other(), k as f64 / (n - 1) as f64);
            for a in 0..n {
                for b in (a + 2)..n {
                    let xa = self.lerp(player, a as f64 / (n - 1) as f64);
                    let xb = self.lerp(player, b as f64 / (n - 1) as f64);
                    let xm = 0.5 * (xa + xb);
                    let (pa, pb, pm) = (
                        self.payoff_own(player, xa, opp),
                        self.payoff_own(player, xb, opp),
                        self.payoff_own(player, xm, opp),
                    );
                    if pm < 0.5 * (pa + pb) - slack {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn lerp(&self, player: Player, t: f64) -> f64 {
        let i = player.index();
        self.lo[i] + (self.hi[i] - self.lo[i]) * t
    }

    /// Payoff of `player` with arguments in (own, opponent) order.
    pub fn payoff_own(&self, player: Player, own: f64, opp: f64) -> f64 {
        match player {
            Player::One => self.payoff[0].eval_raw(own, opp),
            Player::Two => self.payoff[1].eval_raw(opp, own),
        }
    }

    /// Payoff of `player` at the profile `(s_1, s_2)`.
    pub fn payoff(&self, player: Player, s1: f64, s2: f64) -> f64 {
        self.payoff[player.index()].eval_raw(s1, s2)
    }

    pub fn payoff_expr(&self, player: Player) -> &Expr {
        &self.payoff[player.index()]
    }

    pub fn width(&self, player: Player) -> f64 {
        self.hi[player.index()] - self.lo[player.index()]
    }

    pub fn clamp(&self, player: Player, x: f64) -> f64 {
        x.clamp(self.lo[player.index()], self.hi[player.index()])
    }

    pub fn contains(&self, player: Player, x: f64) -> bool {
        let i = player.index();
        x >= self.lo[i] - tol::SIMPLEX_TOL && x <= self.hi[i] + tol::SIMPLEX_TOL
    }

    /// Sampled payoff spread over both players, used to scale tolerances.
    pub fn payoff_range(&self) -> f64 {
        let n = tol::LATTICE_33;
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for ix in 0..n {
            for iy in 0..n {
                let s1 = self.lo[0] + (self.hi[0] - self.lo[0]) * ix as f64 / (n - 1) as f64;
                let s2 = self.lo[1] + (self.hi[1] - self.lo[1]) * iy as f64 / (n - 1) as f64;
                for p in Player::BOTH {
                    let v = self.payoff(p, s1, s2);
                    lo = lo.min(v);
                    hi = hi.max(v);
                }
            }
        }
        hi - lo
    }

    /// Uniform grid over a player's interval, `steps + 1` points, endpoints
    /// included.
    pub fn grid(&self, player: Player, steps: usize) -> Vec<f64> {
        let i = player.index();
        (0..=steps)
            .map(|k| self.lo[i] + (self.hi[i] - self.lo[i]) * k as f64 / steps as f64)
            .collect()
    }
}

/// A finite game: ordered action labels and payoff matrices, row-indexed by
/// player 1's action.
#[derive(Debug, Clone)]
pub struct FiniteGame {
    pub actions: [Vec<String>; 2],
    /// `payoff[p][a1][a2]` is player p+1's payoff at the pure profile.
    payoff: [Vec<Vec<f64>>; 2],
}

impl FiniteGame {
    pub fn new(
        actions_1: Vec<String>,
        actions_2: Vec<String>,
        payoff_1: Vec<Vec<f64>>,
        payoff_2: Vec<Vec<f64>>,
    ) -> Result<Self> {
        let (n1, n2) = (actions_1.len(), actions_2.len());
        if n1 == 0 || n2 == 0 {
            return Err(BbeError::Validation("empty action set".into()));
        }
        for (name, m) in [("payoff_1", &payoff_1), ("payoff_2", &payoff_2)] {
            if m.len() != n1 || m.iter().any(|row| row.len() != n2) {
                return Err(BbeError::Validation(format!(
                    "{name} dimensions do not match action counts {n1}x{n2}"
                )));
            }
            if m.iter().flatten().any(|v| !v.is_finite()) {
                return Err(BbeError::Validation(format!("{name} has non-finite entry")));
            }
        }
        Ok(FiniteGame { actions: [actions_1, actions_2], payoff: [payoff_1, payoff_2] })
    }

    pub fn n_actions(&self, player: Player) -> usize {
        self.actions[player.index()].len()
    }

    pub fn matrix(&self, player: Player) -> &Vec<Vec<f64>> {
        &self.payoff[player.index()]
    }

    /// Bilinear extension: expected payoff of `player` at mixed profile
    /// `(s_1, s_2)`.
    pub fn mixed_payoff(&self, player: Player, s1: &[f64], s2: &[f64]) -> f64 {
        let m = &self.payoff[player.index()];
        let mut total = 0.0;
        for (a1, w1) in s1.iter().enumerate() {
            if *w1 == 0.0 {
                continue;
            }
            for (a2, w2) in s2.iter().enumerate() {
                if *w2 != 0.0 {
                    total += w1 * w2 * m[a1][a2];
                }
            }
        }
        total
    }

    pub fn action_index(&self, player: Player, label: &str) -> Option<usize> {
        self.actions[player.index()].iter().position(|a| a == label)
    }

    /// Sampled payoff spread, used to scale tolerances.
    pub fn payoff_range(&self) -> f64 {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for m in &self.payoff {
            for v in m.iter().flatten() {
                lo = lo.min(*v);
                hi = hi.max(*v);
            }
        }
        hi - lo
    }

    /// Two-action finite games are also interval games over the probability
    /// of the first action; this builds that identification as expression
    /// trees.
    pub fn to_interval(&self) -> Result<IntervalGame> {
        if self.n_actions(Player::One) != 2 || self.n_actions(Player::Two) != 2 {
            return Err(BbeError::Precondition(
                "interval identification requires two actions per player".into(),
            ));
        }
        let expr_for = |m: &Vec<Vec<f64>>| bilinear_expr(m);
        IntervalGame::new(
            [0.0, 0.0],
            [1.0, 1.0],
            expr_for(&self.payoff[0]),
            expr_for(&self.payoff[1]),
        )
    }
}

/// Builds the bilinear payoff expression for a 2x2 matrix with `s1`, `s2`
/// the probabilities of each player's first action.
fn bilinear_expr(m: &[Vec<f64>]) -> Expr {
    use crate::expr::{BinOp, Var};
    // s1*s2*m00 + s1*(1-s2)*m01 + (1-s1)*s2*m10 + (1-s1)*(1-s2)*m11
    // expanded to c0 + c1*s1 + c2*s2 + c3*s1*s2 to keep trees small.
    let (m00, m01, m10, m11) = (m[0][0], m[0][1], m[1][0], m[1][1]);
    let c0 = m11;
    let c1 = m01 - m11;
    let c2 = m10 - m11;
    let c3 = m00 - m01 - m10 + m11;
    let term = |c: f64, e: Expr| Expr::Bin(BinOp::Mul, Box::new(Expr::Const(c)), Box::new(e));
    let s1 = Expr::Var(Var::S1);
    let s2 = Expr::Var(Var::S2);
    let s1s2 = Expr::Bin(BinOp::Mul, Box::new(s1.clone()), Box::new(s2.clone()));
    let mut e = Expr::Const(c0);
    for (c, v) in [(c1, s1), (c2, s2), (c3, s1s2)] {
        e = Expr::Bin(BinOp::Add, Box::new(e), Box::new(term(c, v)));
    }
    e
}

/// The universe a computation runs over.
#[derive(Debug, Clone)]
pub enum Game {
    Interval(IntervalGame),
    Finite(FiniteGame),
}

impl Game {
    pub fn as_interval(&self) -> Result<&IntervalGame> {
        match self {
            Game::Interval(g) => Ok(g),
            Game::Finite(_) => Err(BbeError::Precondition("interval game required".into())),
        }
    }

    pub fn as_finite(&self) -> Result<&FiniteGame> {
        match self {
            Game::Finite(g) => Ok(g),
            Game::Interval(_) => Err(BbeError::Precondition("finite game required".into())),
        }
    }

    /// Validates a strategy against the player's strategy space.
    pub fn check_strategy(&self, player: Player, s: &Strategy) -> Result<()> {
        match (self, s) {
            (Game::Interval(g), Strategy::Scalar(x)) => {
                if !x.is_finite() || !g.contains(player, *x) {
                    return Err(BbeError::Domain(format!(
                        "scalar {} outside [{}, {}]",
                        x,
                        g.lo[player.index()],
                        g.hi[player.index()]
                    )));
                }
                Ok(())
            }
            (Game::Finite(g), Strategy::Mixed(w)) => {
                if w.len() != g.n_actions(player) {
                    return Err(BbeError::Validation(format!(
                        "weight vector has {} entries, expected {}",
                        w.len(),
                        g.n_actions(player)
                    )));
                }
                check_simplex(w)
            }
            _ => Err(BbeError::Validation(
                "strategy shape does not match game kind".into(),
            )),
        }
    }

    /// True payoff of `player` at a strategy profile.
    pub fn profile_payoff(&self, player: Player, s1: &Strategy, s2: &Strategy) -> f64 {
        match self {
            Game::Interval(g) => g.payoff(player, s1.scalar(), s2.scalar()),
            Game::Finite(g) => g.mixed_payoff(player, s1.weights(), s2.weights()),
        }
    }

    pub fn payoff_range(&self) -> f64 {
        match self {
            Game::Interval(g) => g.payoff_range(),
            Game::Finite(g) => g.payoff_range(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;

    fn cournot_quantity() -> IntervalGame {
        IntervalGame::new(
            [0.0, 0.0],
            [1.0, 1.0],
            parse_expr("s1*(1-s1-s2)").unwrap(),
            parse_expr("s2*(1-s2-s1)").unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn interval_bounds_must_be_ordered() {
        let e = parse_expr("0").unwrap();
        assert!(IntervalGame::new([1.0, 0.0], [0.5, 1.0], e.clone(), e).is_err());
    }

    #[test]
    fn cournot_is_concave_in_own_strategy() {
        let g = cournot_quantity();
        assert!(g.concave_own[0] && g.concave_own[1]);
    }

    #[test]
    fn rectangle_validation_catches_divide_by_zero() {
        let r = IntervalGame::new(
            [0.0, 0.0],
            [1.0, 1.0],
            parse_expr("1/(s1-0.5)").unwrap(),
            parse_expr("0").unwrap(),
        );
        assert!(r.is_err());
    }

    #[test]
    fn finite_dimensions_checked() {
        let r = FiniteGame::new(
            vec!["a".into(), "b".into()],
            vec!["x".into()],
            vec![vec![1.0], vec![2.0]],
            vec![vec![1.0, 2.0]],
        );
        assert!(r.is_err());
    }

    #[test]
    fn mixed_payoff_matches_direct_summation() {
        // Bilinearity spot check on sampled simplex points.
        let g = FiniteGame::new(
            vec!["h".into(), "t".into()],
            vec!["h".into(), "t".into()],
            vec![vec![4.0, -1.0], vec![2.0, 1.0]],
            vec![vec![2.0, 4.0], vec![1.0, -1.0]],
        )
        .unwrap();
        for &(a, b) in &[(0.3, 0.7), (0.0, 1.0), (0.5, 0.5), (1.0, 0.25)] {
            let s1 = [a, 1.0 - a];
            let s2 = [b, 1.0 - b];
            let direct = a * b * 4.0 + a * (1.0 - b) * -1.0 + (1.0 - a) * b * 2.0
                + (1.0 - a) * (1.0 - b) * 1.0;
            let v = g.mixed_payoff(Player::One, &s1, &s2);
            assert!((v - direct).abs() < 1e-12);
        }
    }

    #[test]
    fn two_action_interval_identification_agrees_with_mixed_payoff() {
        let g = FiniteGame::new(
            vec!["h".into(), "t".into()],
            vec!["h".into(), "t".into()],
            vec![vec![4.0, -1.0], vec![2.0, 1.0]],
            vec![vec![2.0, 4.0], vec![1.0, -1.0]],
        )
        .unwrap();
        let ig = g.to_interval().unwrap();
        for &(a, b) in &[(0.0, 0.0), (1.0, 1.0), (0.25, 0.75), (0.5, 0.5)] {
            for p in Player::BOTH {
                let mv = g.mixed_payoff(p, &[a, 1.0 - a], &[b, 1.0 - b]);
                let iv = ig.payoff(p, a, b);
                assert!((mv - iv).abs() < 1e-12, "mismatch at ({a},{b})");
            }
        }
    }

    #[test]
    fn strategy_validation() {
        let g = Game::Interval(cournot_quantity());
        assert!(g.check_strategy(Player::One, &Strategy::Scalar(0.5)).is_ok());
        assert!(g.check_strategy(Player::One, &Strategy::Scalar(1.5)).is_err());
        assert!(g
            .check_strategy(Player::One, &Strategy::Mixed(vec![1.0]))
            .is_err());
    }

    #[test]
    fn simplex_check() {
        assert!(check_simplex(&[0.5, 0.5]).is_ok());
        assert!(check_simplex(&[0.6, 0.6]).is_err());
        assert!(check_simplex(&[-0.1, 1.1]).is_err());
    }
}
