//! Biased beliefs, biased games, and configurations.
//!
//! A biased belief is a continuous map from opponent strategies to perceived
//! opponent strategies. Four representable kinds cover every belief used by
//! the characterization results and constructions: identity, blind,
//! piecewise-linear (interval games), and stochastic-linear (finite games).

use serde::{Deserialize, Serialize};

use crate::error::{BbeError, Result};
use crate::game::{check_simplex, Game, IntervalGame, Player, Strategy};
use crate::tol;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StrategySpec {
    Scalar(f64),
    Mixed(Vec<f64>),
}

impl From<StrategySpec> for Strategy {
    fn from(s: StrategySpec) -> Strategy {
        match s {
            StrategySpec::Scalar(x) => Strategy::Scalar(x),
            StrategySpec::Mixed(w) => Strategy::Mixed(w),
        }
    }
}

impl From<&Strategy> for StrategySpec {
    fn from(s: &Strategy) -> StrategySpec {
        match s {
            Strategy::Scalar(x) => StrategySpec::Scalar(*x),
            Strategy::Mixed(w) => StrategySpec::Mixed(w.clone()),
        }
    }
}

/// A biased belief of one player about the opponent's play.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BiasedBelief {
    /// The undistorted belief: perceives the opponent's actual strategy.
    Identity,
    /// Constant belief, independent of the opponent's actual play.
    Blind { target: StrategySpec },
    /// Piecewise-linear interpolation through sorted breakpoints spanning
    /// the opponent's interval.
    PiecewiseLinear { points: Vec<(f64, f64)> },
    /// Column-stochastic matrix applied to the opponent's mixed action.
    StochasticLinear { matrix: Vec<Vec<f64>> },
}

impl BiasedBelief {
    pub fn blind_scalar(target: f64) -> BiasedBelief {
        BiasedBelief::Blind { target: StrategySpec::Scalar(target) }
    }

    pub fn blind_mixed(target: Vec<f64>) -> BiasedBelief {
        BiasedBelief::Blind { target: StrategySpec::Mixed(target) }
    }

    /// Structural validation against the opponent's strategy space.
    /// `owner` holds the belief; the belief maps the other player's space.
    pub fn validate(&self, game: &Game, owner: Player) -> Result<()> {
        let opp = owner.other();
        match self {
            BiasedBelief::Identity => Ok(()),
            BiasedBelief::Blind { target } => {
                game.check_strategy(opp, &Strategy::from(target.clone()))
            }
            BiasedBelief::PiecewiseLinear { points } => {
                let g = game.as_interval()?;
                let (lo, hi) = (g.lo[opp.index()], g.hi[opp.index()]);
                if points.len() < 2 {
                    return Err(BbeError::Validation(
                        "piecewise-linear belief needs at least two breakpoints".into(),
                    ));
                }
                for w in points.windows(2) {
                    if w[1].0 <= w[0].0 {
                        return Err(BbeError::Validation(format!(
                            "breakpoint inputs must strictly increase, got {} then {}",
                            w[0].0, w[1].0
                        )));
                    }
                }
                let eps = 1e-9 * (hi - lo);
                if (points[0].0 - lo).abs() > eps || (points.last().unwrap().0 - hi).abs() > eps {
                    return Err(BbeError::Validation(format!(
                        "breakpoints must cover [{lo}, {hi}]"
                    )));
                }
                for (x, y) in points {
                    if !g.contains(opp, *y) {
                        return Err(BbeError::Validation(format!(
                            "breakpoint output {y} at input {x} outside opponent interval"
                        )));
                    }
                }
                Ok(())
            }
            BiasedBelief::StochasticLinear { matrix } => {
                let g = game.as_finite()?;
                let n = g.n_actions(opp);
                if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
                    return Err(BbeError::Validation(format!(
                        "stochastic matrix must be {n}x{n}"
                    )));
                }
                for c in 0..n {
                    let col_sum: f64 = (0..n).map(|r| matrix[r][c]).sum();
                    if (col_sum - 1.0).abs() > tol::SIMPLEX_TOL
                        || (0..n).any(|r| matrix[r][c] < -tol::SIMPLEX_TOL)
                    {
                        return Err(BbeError::Validation(format!(
                            "matrix column {c} is not stochastic"
                        )));
                    }
                }
                Ok(())
            }
        }
    }

    /// Applies the belief to an opponent strategy.
    pub fn evaluate(&self, game: &Game, owner: Player, s: &Strategy) -> Result<Strategy> {
        game.check_strategy(owner.other(), s)?;
        Ok(match self {
            BiasedBelief::Identity => s.clone(),
            BiasedBelief::Blind { target } => Strategy::from(target.clone()),
            BiasedBelief::PiecewiseLinear { .. } => {
                Strategy::Scalar(self.eval_scalar(s.scalar()))
            }
            BiasedBelief::StochasticLinear { matrix } => {
                let w = s.weights();
                let mut out: Vec<f64> = (0..w.len())
                    .map(|r| (0..w.len()).map(|c| matrix[r][c] * w[c]).sum())
                    .collect();
                // Renormalize only if rounding pushed the output off the
                // simplex.
                let sum: f64 = out.iter().sum();
                if (sum - 1.0).abs() > 1e-15 && sum > 0.0 {
                    for v in &mut out {
                        *v /= sum;
                    }
                }
                for v in &mut out {
                    if *v < 0.0 && *v > -tol::SIMPLEX_TOL {
                        *v = 0.0;
                    }
                }
                check_simplex(&out)?;
                Strategy::Mixed(out)
            }
        })
    }

    /// Scalar fast path for interval games; panics on stochastic-linear.
    pub fn eval_scalar(&self, x: f64) -> f64 {
        match self {
            BiasedBelief::Identity => x,
            BiasedBelief::Blind { target } => match target {
                StrategySpec::Scalar(t) => *t,
                StrategySpec::Mixed(_) => panic!("mixed blind target in scalar path"),
            },
            BiasedBelief::PiecewiseLinear { points } => {
                if x <= points[0].0 {
                    return points[0].1;
                }
                if x >= points.last().unwrap().0 {
                    return points.last().unwrap().1;
                }
                // Binary search for the segment containing x.
                let mut lo = 0;
                let mut hi = points.len() - 1;
                while hi - lo > 1 {
                    let mid = (lo + hi) / 2;
                    if points[mid].0 <= x {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                let (x0, y0) = points[lo];
                let (x1, y1) = points[hi];
                y0 + (y1 - y0) * (x - x0) / (x1 - x0)
            }
            BiasedBelief::StochasticLinear { .. } => {
                panic!("stochastic-linear belief in scalar path")
            }
        }
    }

    /// Matrix form of the belief on an `n`-action simplex, where available.
    /// Identity and blind beliefs are special cases of stochastic-linear.
    pub fn as_matrix(&self, n: usize) -> Option<Vec<Vec<f64>>> {
        match self {
            BiasedBelief::Identity => {
                let mut m = vec![vec![0.0; n]; n];
                for (i, row) in m.iter_mut().enumerate() {
                    row[i] = 1.0;
                }
                Some(m)
            }
            BiasedBelief::Blind { target: StrategySpec::Mixed(t) } if t.len() == n => {
                Some((0..n).map(|r| vec![t[r]; n]).collect())
            }
            BiasedBelief::StochasticLinear { matrix } if matrix.len() == n => {
                Some(matrix.clone())
            }
            _ => None,
        }
    }

    /// Monotonicity test.
    ///
    /// Interval games: non-decreasing output over a dense input grid, with
    /// an exact slope check for piecewise-linear. Finite games: exact
    /// column comparison for matrix-representable beliefs (shifting mass
    /// toward any action must not raise the perceived probability of any
    /// other action), sampled directions otherwise.
    pub fn is_monotone(&self, game: &Game, owner: Player) -> bool {
        match game {
            Game::Interval(g) => self.is_monotone_interval(g, owner),
            Game::Finite(g) => {
                let n = g.n_actions(owner.other());
                match self.as_matrix(n) {
                    Some(m) => matrix_is_monotone(&m),
                    None => self.is_monotone_sampled(game, owner),
                }
            }
        }
    }

    fn is_monotone_interval(&self, g: &IntervalGame, owner: Player) -> bool {
        match self {
            BiasedBelief::Identity | BiasedBelief::Blind { .. } => true,
            BiasedBelief::PiecewiseLinear { points } => {
                points.windows(2).all(|w| w[1].1 >= w[0].1 - 1e-12)
            }
            BiasedBelief::StochasticLinear { .. } => false,
            #[allow(unreachable_patterns)]
            _ => {
                let opp = owner.other();
                let grid = g.grid(opp, 1000);
                grid.windows(2)
                    .all(|w| self.eval_scalar(w[1]) >= self.eval_scalar(w[0]) - 1e-12)
            }
        }
    }

    /// Sampled finite-game monotonicity: random base strategies, every
    /// action direction, an alpha grid; the perceived probability of every
    /// other action must weakly decrease as mass shifts toward the action.
    fn is_monotone_sampled(&self, game: &Game, owner: Player) -> bool {
        use rand::{Rng, SeedableRng};
        let g = match game {
            Game::Finite(g) => g,
            Game::Interval(_) => return true,
        };
        let n = g.n_actions(owner.other());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(tol::DEFAULT_SEED);
        for _ in 0..tol::MONOTONE_DIRS {
            // Random simplex point by exponential spacing.
            let raw: Vec<f64> = (0..n).map(|_| -f64::ln(rng.gen_range(1e-12..1.0))).collect();
            let sum: f64 = raw.iter().sum();
            let base: Vec<f64> = raw.iter().map(|x| x / sum).collect();
            let Ok(perceived_base) =
                self.evaluate(game, owner, &Strategy::Mixed(base.clone()))
            else {
                return false;
            };
            for a in 0..n {
                for k in 1..=tol::MONOTONE_ALPHAS {
                    let alpha = k as f64 / tol::MONOTONE_ALPHAS as f64;
                    let shifted: Vec<f64> = (0..n)
                        .map(|i| (1.0 - alpha) * base[i] + if i == a { alpha } else { 0.0 })
                        .collect();
                    let Ok(p) = self.evaluate(game, owner, &Strategy::Mixed(shifted)) else {
                        return false;
                    };
                    for other in 0..n {
                        if other != a
                            && p.weights()[other]
                                > perceived_base.weights()[other] + tol::SIMPLEX_TOL
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Exact monotonicity for a column-stochastic matrix: for every column `j`
/// and row `r != j`, `M[r][j]` must not exceed any other column's entry in
/// row `r`.
fn matrix_is_monotone(m: &[Vec<f64>]) -> bool {
    let n = m.len();
    for j in 0..n {
        for r in 0..n {
            if r == j {
                continue;
            }
            for k in 0..n {
                if m[r][j] > m[r][k] + 1e-12 {
                    return false;
                }
            }
        }
    }
    true
}

/// An underlying game plus a belief pair; payoffs are evaluated at the
/// perceived opponent strategy.
#[derive(Debug, Clone)]
pub struct BiasedGame<'a> {
    pub game: &'a Game,
    pub beliefs: [BiasedBelief; 2],
}

impl<'a> BiasedGame<'a> {
    pub fn new(game: &'a Game, belief_1: BiasedBelief, belief_2: BiasedBelief) -> Self {
        BiasedGame { game, beliefs: [belief_1, belief_2] }
    }

    /// Perceived payoff of `player` at the actual profile `(s_1, s_2)`:
    /// the player's true payoff against the perceived opponent strategy.
    pub fn perceived_payoff(
        &self,
        player: Player,
        s1: &Strategy,
        s2: &Strategy,
    ) -> Result<f64> {
        match player {
            Player::One => {
                let perceived = self.beliefs[0].evaluate(self.game, Player::One, s2)?;
                Ok(self.game.profile_payoff(Player::One, s1, &perceived))
            }
            Player::Two => {
                let perceived = self.beliefs[1].evaluate(self.game, Player::Two, s1)?;
                Ok(self.game.profile_payoff(Player::Two, &perceived, s2))
            }
        }
    }

    /// Scalar fast path: perceived payoff with `own` the player's strategy
    /// and `opp` the opponent's actual scalar strategy.
    pub fn perceived_payoff_scalar(&self, g: &IntervalGame, player: Player, own: f64, opp: f64) -> f64 {
        let perceived = self.beliefs[player.index()].eval_scalar(opp);
        match player {
            Player::One => g.payoff(Player::One, own, perceived),
            Player::Two => g.payoff(Player::Two, perceived, own),
        }
    }
}

/// A candidate equilibrium object: a belief pair plus a strategy profile.
#[derive(Debug, Clone)]
pub struct Configuration {
    pub beliefs: [BiasedBelief; 2],
    pub strategies: [Strategy; 2],
}

impl Configuration {
    pub fn new(
        belief_1: BiasedBelief,
        belief_2: BiasedBelief,
        strategy_1: Strategy,
        strategy_2: Strategy,
    ) -> Self {
        Configuration {
            beliefs: [belief_1, belief_2],
            strategies: [strategy_1, strategy_2],
        }
    }

    pub fn biased_game<'a>(&self, game: &'a Game) -> BiasedGame<'a> {
        BiasedGame::new(game, self.beliefs[0].clone(), self.beliefs[1].clone())
    }

    /// Incumbent true payoff of `player` at the configuration profile.
    pub fn incumbent_payoff(&self, game: &Game, player: Player) -> f64 {
        game.profile_payoff(player, &self.strategies[0], &self.strategies[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;
    use crate::game::{FiniteGame, IntervalGame};

    fn cournot() -> Game {
        Game::Interval(
            IntervalGame::new(
                [0.0, 0.0],
                [1.0, 1.0],
                parse_expr("s1*(1-s1-s2)").unwrap(),
                parse_expr("s2*(1-s2-s1)").unwrap(),
            )
            .unwrap(),
        )
    }

    fn pd_withdrawal() -> Game {
        Game::Finite(
            FiniteGame::new(
                vec!["c".into(), "d".into(), "w".into()],
                vec!["c".into(), "d".into(), "w".into()],
                vec![
                    vec![10.0, 0.0, 0.0],
                    vec![11.0, 1.0, 0.0],
                    vec![0.0, 0.0, 0.0],
                ],
                vec![
                    vec![10.0, 11.0, 0.0],
                    vec![0.0, 1.0, 0.0],
                    vec![0.0, 0.0, 0.0],
                ],
            )
            .unwrap(),
        )
    }

    /// Perceives cooperation as withdrawal: (a_c, a_d, a_w) -> (0, a_d, a_c + a_w).
    fn withdrawal_map() -> BiasedBelief {
        BiasedBelief::StochasticLinear {
            matrix: vec![
                vec![0.0, 0.0, 0.0],
                vec![0.0, 1.0, 0.0],
                vec![1.0, 0.0, 1.0],
            ],
        }
    }

    #[test]
    fn blind_belief_returns_target_for_all_inputs() {
        let g = cournot();
        let b = BiasedBelief::blind_scalar(1.0 / 3.0);
        let out = b.evaluate(&g, Player::One, &Strategy::Scalar(0.9)).unwrap();
        assert_eq!(out, Strategy::Scalar(1.0 / 3.0));
        // Constant and bit-exact across a grid.
        for k in 0..=100 {
            let x = k as f64 / 100.0;
            let o = b.evaluate(&g, Player::One, &Strategy::Scalar(x)).unwrap();
            assert_eq!(o.scalar().to_bits(), (1.0f64 / 3.0).to_bits());
        }
    }

    #[test]
    fn identity_returns_input() {
        let g = cournot();
        let b = BiasedBelief::Identity;
        let out = b.evaluate(&g, Player::Two, &Strategy::Scalar(0.7)).unwrap();
        assert_eq!(out, Strategy::Scalar(0.7));
    }

    #[test]
    fn withdrawal_map_sends_pure_cooperation_to_withdrawal() {
        let g = pd_withdrawal();
        let b = withdrawal_map();
        let out = b
            .evaluate(&g, Player::One, &Strategy::Mixed(vec![1.0, 0.0, 0.0]))
            .unwrap();
        assert_eq!(out, Strategy::Mixed(vec![0.0, 0.0, 1.0]));
    }

    #[test]
    fn scalar_out_of_interval_is_domain_error() {
        let g = cournot();
        let b = BiasedBelief::Identity;
        assert!(b.evaluate(&g, Player::One, &Strategy::Scalar(1.5)).is_err());
    }

    #[test]
    fn malformed_simplex_is_validation_error() {
        let g = pd_withdrawal();
        let b = BiasedBelief::Identity;
        assert!(b
            .evaluate(&g, Player::One, &Strategy::Mixed(vec![0.6, 0.6, 0.0]))
            .is_err());
    }

    #[test]
    fn price_competition_breakpoints_are_monotone() {
        let g = Game::Interval(
            IntervalGame::new(
                [0.0, 0.0],
                [3.0, 3.0],
                parse_expr("s1*min(1, max(0, (s2-s1+1)/2))").unwrap(),
                parse_expr("s2*min(1, max(0, (s1-s2+1)/2))").unwrap(),
            )
            .unwrap(),
        );
        let b = BiasedBelief::PiecewiseLinear {
            points: vec![(0.0, 0.0), (0.5, 0.0), (2.0, 3.0), (3.0, 3.0)],
        };
        b.validate(&g, Player::One).unwrap();
        assert!(b.is_monotone(&g, Player::One));
        // The displayed map: 0 below 0.5, 2s-1 on [0.5,2], 3 above.
        assert!((b.eval_scalar(2.0) - 3.0).abs() < 1e-12);
        assert!((b.eval_scalar(1.0) - 1.0).abs() < 1e-12);
        assert!((b.eval_scalar(0.25) - 0.0).abs() < 1e-12);
    }

    #[test]
    fn identity_is_monotone() {
        assert!(BiasedBelief::Identity.is_monotone(&cournot(), Player::One));
    }

    #[test]
    fn withdrawal_map_is_not_monotone() {
        // Checking the definition directly on matrix columns: shifting mass
        // toward c raises the perceived probability of w.
        let g = pd_withdrawal();
        assert!(!withdrawal_map().is_monotone(&g, Player::One));
        // The sampled check agrees with the exact column test.
        assert!(!withdrawal_map().is_monotone_sampled(&g, Player::One));
    }

    #[test]
    fn monotone_matrix_blend_passes_both_checks() {
        let g = pd_withdrawal();
        // 0.4*identity + 0.6*blind(uniform) is monotone.
        let d = 0.4;
        let t = [1.0 / 3.0; 3];
        let m: Vec<Vec<f64>> = (0..3)
            .map(|r| {
                (0..3)
                    .map(|c| (1.0 - d) * t[r] + if r == c { d } else { 0.0 })
                    .collect()
            })
            .collect();
        let b = BiasedBelief::StochasticLinear { matrix: m };
        b.validate(&g, Player::One).unwrap();
        assert!(b.is_monotone(&g, Player::One));
        assert!(b.is_monotone_sampled(&g, Player::One));
    }

    #[test]
    fn perceived_payoff_cournot_with_blind_zero() {
        // Blind-0 leader at (1/2, 1/4): perceives opponent at 0, so the
        // perceived payoff is (1/2)(1 - 1/2 - 0) = 1/4.
        let g = cournot();
        let bg = BiasedGame::new(&g, BiasedBelief::blind_scalar(0.0), BiasedBelief::Identity);
        let v = bg
            .perceived_payoff(Player::One, &Strategy::Scalar(0.5), &Strategy::Scalar(0.25))
            .unwrap();
        assert!((v - 0.25).abs() < 1e-12);
    }

    #[test]
    fn perceived_equals_true_payoff_under_identity() {
        let g = cournot();
        let bg = BiasedGame::new(&g, BiasedBelief::Identity, BiasedBelief::Identity);
        for &(a, b) in &[(0.2, 0.7), (0.5, 0.5), (0.0, 1.0)] {
            let (s1, s2) = (Strategy::Scalar(a), Strategy::Scalar(b));
            for p in Player::BOTH {
                let perceived = bg.perceived_payoff(p, &s1, &s2).unwrap();
                let truth = g.profile_payoff(p, &s1, &s2);
                assert_eq!(perceived, truth);
            }
        }
    }

    #[test]
    fn pd_withdrawal_perceived_payoff_at_cooperation() {
        // Player 1 at (c, c) perceives the opponent as withdrawing, so the
        // perceived payoff is the (c, w) cell: 0.
        let g = pd_withdrawal();
        let bg = BiasedGame::new(&g, withdrawal_map(), withdrawal_map());
        let c = Strategy::pure(0, 3);
        let v = bg.perceived_payoff(Player::One, &c, &c).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn belief_continuity_under_small_perturbations() {
        // For each kind, nearby inputs map to nearby outputs.
        let g = cournot();
        let beliefs = vec![
            BiasedBelief::Identity,
            BiasedBelief::blind_scalar(0.5),
            BiasedBelief::PiecewiseLinear {
                points: vec![(0.0, 0.0), (0.5, 0.1), (1.0, 0.9)],
            },
        ];
        for b in beliefs {
            for k in 0..1000 {
                let x = k as f64 / 1000.0;
                let delta = 1e-7;
                let y0 = b.eval_scalar(x);
                let y1 = b.eval_scalar((x + delta).min(1.0));
                // Lipschitz bound 2 covers the steepest representable
                // segment in this corpus.
                assert!((y1 - y0).abs() <= 2.0 * delta + 1e-12);
            }
            let _ = &g;
        }
    }

    #[test]
    fn belief_serde_round_trip() {
        let b = BiasedBelief::PiecewiseLinear {
            points: vec![(0.0, 0.0), (1.0, 1.0)],
        };
        let s = serde_json::to_string(&b).unwrap();
        let back: BiasedBelief = serde_json::from_str(&s).unwrap();
        assert_eq!(b, back);
        let blind = BiasedBelief::blind_mixed(vec![0.5, 0.5]);
        let s = serde_json::to_string(&blind).unwrap();
        let back: BiasedBelief = serde_json::from_str(&s).unwrap();
        assert_eq!(blind, back);
    }
}
