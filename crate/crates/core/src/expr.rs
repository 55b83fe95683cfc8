//! Closed-form payoff expression DSL.
//!
//! Interval-game spec files carry payoffs as infix text over the variables
//! `s1`, `s2` and named scalar parameters bound at load time. The grammar is
//! deliberately small: `+ - * / ^`, `min`, `max`, `sqrt`, and explicit
//! `piecewise{cond: expr, ...}` blocks with threshold conditions on a single
//! variable. Parsed trees are immutable and the parser is reentrant.

use std::collections::HashMap;
use std::fmt;

use crate::error::{BbeError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    S1,
    S2,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::S1 => write!(f, "s1"),
            Var::S2 => write!(f, "s2"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

/// Comparison operator in a piecewise branch condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Lt,
    Le,
    Gt,
    Ge,
}

impl CmpOp {
    fn holds(self, x: f64, c: f64) -> bool {
        match self {
            CmpOp::Lt => x < c,
            CmpOp::Le => x <= c,
            CmpOp::Gt => x > c,
            CmpOp::Ge => x >= c,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Gt => ">",
            CmpOp::Ge => ">=",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseBranch {
    pub op: CmpOp,
    pub threshold: f64,
    pub body: Expr,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Var(Var),
    /// Named scalar parameter; must be resolved by [`Expr::bind`] before
    /// evaluation.
    Param(String),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Min(Box<Expr>, Box<Expr>),
    Max(Box<Expr>, Box<Expr>),
    Sqrt(Box<Expr>),
    Piecewise { var: Var, branches: Vec<PiecewiseBranch> },
}

impl Expr {
    /// Replaces every named parameter with its bound value.
    ///
    /// Errors on any parameter missing from `params` (the "unknown
    /// identifier" case of the load path).
    pub fn bind(&self, params: &HashMap<String, f64>) -> Result<Expr> {
        Ok(match self {
            Expr::Const(c) => Expr::Const(*c),
            Expr::Var(v) => Expr::Var(*v),
            Expr::Param(name) => match params.get(name) {
                Some(v) => Expr::Const(*v),
                None => {
                    return Err(BbeError::Validation(format!(
                        "unknown identifier `{name}` (no parameter binding)"
                    )))
                }
            },
            Expr::Bin(op, a, b) => {
                Expr::Bin(*op, Box::new(a.bind(params)?), Box::new(b.bind(params)?))
            }
            Expr::Min(a, b) => Expr::Min(Box::new(a.bind(params)?), Box::new(b.bind(params)?)),
            Expr::Max(a, b) => Expr::Max(Box::new(a.bind(params)?), Box::new(b.bind(params)?)),
            Expr::Sqrt(a) => Expr::Sqrt(Box::new(a.bind(params)?)),
            Expr::Piecewise { var, branches } => Expr::Piecewise {
                var: *var,
                branches: branches
                    .iter()
                    .map(|b| {
                        Ok(PiecewiseBranch {
                            op: b.op,
                            threshold: b.threshold,
                            body: b.body.bind(params)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?,
            },
        })
    }

    /// Checked IEEE-754 evaluation. Division by zero, even roots of negative
    /// numbers, and unbound parameters are reported as errors.
    pub fn eval(&self, s1: f64, s2: f64) -> Result<f64> {
        let v = self.eval_inner(s1, s2)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(BbeError::Eval(format!(
                "non-finite value {v} at (s1={s1}, s2={s2})"
            )))
        }
    }

    fn eval_inner(&self, s1: f64, s2: f64) -> Result<f64> {
        Ok(match self {
            Expr::Const(c) => *c,
            Expr::Var(Var::S1) => s1,
            Expr::Var(Var::S2) => s2,
            Expr::Param(name) => {
                return Err(BbeError::Eval(format!("unbound parameter `{name}`")))
            }
            Expr::Bin(op, a, b) => {
                let (x, y) = (a.eval_inner(s1, s2)?, b.eval_inner(s1, s2)?);
                match op {
                    BinOp::Add => x + y,
                    BinOp::Sub => x - y,
                    BinOp::Mul => x * y,
                    BinOp::Div => {
                        if y == 0.0 {
                            return Err(BbeError::Eval("division by zero".into()));
                        }
                        x / y
                    }
                    BinOp::Pow => {
                        let r = x.powf(y);
                        if r.is_nan() {
                            return Err(BbeError::Eval(format!("undefined power {x}^{y}")));
                        }
                        r
                    }
                }
            }
            Expr::Min(a, b) => a.eval_inner(s1, s2)?.min(b.eval_inner(s1, s2)?),
            Expr::Max(a, b) => a.eval_inner(s1, s2)?.max(b.eval_inner(s1, s2)?),
            Expr::Sqrt(a) => {
                let x = a.eval_inner(s1, s2)?;
                if x < 0.0 {
                    return Err(BbeError::Eval(format!("sqrt of negative value {x}")));
                }
                x.sqrt()
            }
            Expr::Piecewise { var, branches } => {
                let x = match var {
                    Var::S1 => s1,
                    Var::S2 => s2,
                };
                let branch = branches
                    .iter()
                    .find(|b| b.op.holds(x, b.threshold))
                    .expect("piecewise validated exhaustive");
                branch.body.eval_inner(s1, s2)?
            }
        })
    }

    /// Unchecked fast-path evaluation with raw IEEE semantics.
    ///
    /// Only valid on trees that passed [`Expr::bind`] and on games whose
    /// rectangle was validated to evaluate finitely; hot grid loops use this.
    pub fn eval_raw(&self, s1: f64, s2: f64) -> f64 {
        match self {
            Expr::Const(c) => *c,
            Expr::Var(Var::S1) => s1,
            Expr::Var(Var::S2) => s2,
            Expr::Param(_) => f64::NAN,
            Expr::Bin(op, a, b) => {
                let (x, y) = (a.eval_raw(s1, s2), b.eval_raw(s1, s2));
                match op {
                    BinOp::Add => x + y,
                    BinOp::Sub => x - y,
                    BinOp::Mul => x * y,
                    BinOp::Div => x / y,
                    BinOp::Pow => x.powf(y),
                }
            }
            Expr::Min(a, b) => a.eval_raw(s1, s2).min(b.eval_raw(s1, s2)),
            Expr::Max(a, b) => a.eval_raw(s1, s2).max(b.eval_raw(s1, s2)),
            Expr::Sqrt(a) => a.eval_raw(s1, s2).sqrt(),
            Expr::Piecewise { var, branches } => {
                let x = match var {
                    Var::S1 => s1,
                    Var::S2 => s2,
                };
                for b in branches {
                    if b.op.holds(x, b.threshold) {
                        return b.body.eval_raw(s1, s2);
                    }
                }
                f64::NAN
            }
        }
    }

    /// Pretty-prints with minimal parentheses; `parse(print(e)) == e`.
    pub fn print(&self) -> String {
        let mut s = String::new();
        self.print_prec(&mut s, 0);
        s
    }

    // Precedence levels: 1 add/sub, 2 mul/div, 3 unary tail, 4 pow.
    fn print_prec(&self, out: &mut String, parent: u8) {
        let prec = match self {
            Expr::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
            Expr::Bin(BinOp::Mul | BinOp::Div, ..) => 2,
            Expr::Bin(BinOp::Pow, ..) => 4,
            _ => 5,
        };
        let need_parens = prec < parent;
        if need_parens {
            out.push('(');
        }
        match self {
            Expr::Const(c) => {
                if *c < 0.0 {
                    out.push_str(&format!("({c})"));
                } else {
                    out.push_str(&format!("{c}"));
                }
            }
            Expr::Var(v) => out.push_str(&v.to_string()),
            Expr::Param(name) => out.push_str(name),
            Expr::Bin(op, a, b) => {
                let (sym, lp, rp) = match op {
                    BinOp::Add => (" + ", 1, 1),
                    // Right operand of - and / needs one level more binding.
                    BinOp::Sub => (" - ", 1, 2),
                    BinOp::Mul => ("*", 2, 2),
                    BinOp::Div => ("/", 2, 3),
                    // Pow is right-associative.
                    BinOp::Pow => ("^", 5, 4),
                };
                a.print_prec(out, lp);
                out.push_str(sym);
                b.print_prec(out, rp);
            }
            Expr::Min(a, b) => {
                out.push_str("min(");
                a.print_prec(out, 0);
                out.push_str(", ");
                b.print_prec(out, 0);
                out.push(')');
            }
            Expr::Max(a, b) => {
                out.push_str("max(");
                a.print_prec(out, 0);
                out.push_str(", ");
                b.print_prec(out, 0);
                out.push(')');
            }
            Expr::Sqrt(a) => {
                out.push_str("sqrt(");
                a.print_prec(out, 0);
                out.push(')');
            }
            Expr::Piecewise { var, branches } => {
                out.push_str("piecewise{");
                for (i, b) in branches.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    out.push_str(&format!("{var} {} {}: ", b.op.symbol(), b.threshold));
                    b.body.print_prec(out, 0);
                }
                out.push('}');
            }
        }
        if need_parens {
            out.push(')');
        }
    }
}

/// Parses expression source into a tree under standard precedence
/// (`^` over `*`/`/` over `+`/`-`); syntax errors carry line and column.
pub fn parse_expr(src: &str) -> Result<Expr> {
    let mut p = Parser::new(src);
    let e = p.parse_add()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    validate_piecewise(&e)?;
    Ok(e)
}

/// Parses and binds named parameters in one step (the game-load path).
pub fn parse_closed(src: &str, params: &HashMap<String, f64>) -> Result<Expr> {
    parse_expr(src)?.bind(params)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { bytes: src.as_bytes(), pos: 0 }
    }

    fn line_col(&self) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for &b in &self.bytes[..self.pos.min(self.bytes.len())] {
            if b == b'\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn err(&self, msg: &str) -> BbeError {
        let (line, col) = self.line_col();
        BbeError::Syntax { line, col, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while matches!(self.bytes.get(self.pos), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", b as char)))
        }
    }

    fn parse_add(&mut self) -> Result<Expr> {
        let mut node = self.parse_mul()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    node = Expr::Bin(BinOp::Add, Box::new(node), Box::new(self.parse_mul()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    node = Expr::Bin(BinOp::Sub, Box::new(node), Box::new(self.parse_mul()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn parse_mul(&mut self) -> Result<Expr> {
        let mut node = self.parse_unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    node = Expr::Bin(BinOp::Mul, Box::new(node), Box::new(self.parse_unary()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    node = Expr::Bin(BinOp::Div, Box::new(node), Box::new(self.parse_unary()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn parse_unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            // Unary minus on a literal folds into the constant; anything
            // else desugars to (0 - e).
            let inner = self.parse_unary()?;
            return Ok(match inner {
                Expr::Const(c) => Expr::Const(-c),
                other => Expr::Bin(BinOp::Sub, Box::new(Expr::Const(0.0)), Box::new(other)),
            });
        }
        self.parse_pow()
    }

    fn parse_pow(&mut self) -> Result<Expr> {
        let base = self.parse_atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp = self.parse_unary()?; // right-associative
            return Ok(Expr::Bin(BinOp::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.parse_add()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.parse_number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.parse_ident(),
            Some(c) => Err(self.err(&format!("unexpected character `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn parse_number(&mut self) -> Result<Expr> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.bytes.get(self.pos), Some(b'0'..=b'9' | b'.')) {
            self.pos += 1;
        }
        // Scientific notation tail.
        if matches!(self.bytes.get(self.pos), Some(b'e' | b'E')) {
            let mark = self.pos;
            self.pos += 1;
            if matches!(self.bytes.get(self.pos), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if matches!(self.bytes.get(self.pos), Some(b'0'..=b'9')) {
                while matches!(self.bytes.get(self.pos), Some(b'0'..=b'9')) {
                    self.pos += 1;
                }
            } else {
                self.pos = mark;
            }
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<f64>()
            .map(Expr::Const)
            .map_err(|_| self.err(&format!("malformed number `{text}`")))
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while matches!(
            self.bytes.get(self.pos),
            Some(b'a'..=b'z' | b'A'..=b'Z' | b'0'..=b'9' | b'_')
        ) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn parse_ident(&mut self) -> Result<Expr> {
        let name = self.ident();
        match name.as_str() {
            "s1" => Ok(Expr::Var(Var::S1)),
            "s2" => Ok(Expr::Var(Var::S2)),
            "min" | "max" => {
                self.expect(b'(')?;
                let a = self.parse_add()?;
                self.expect(b',')?;
                let b = self.parse_add()?;
                self.expect(b')')?;
                Ok(if name == "min" {
                    Expr::Min(Box::new(a), Box::new(b))
                } else {
                    Expr::Max(Box::new(a), Box::new(b))
                })
            }
            "sqrt" => {
                self.expect(b'(')?;
                let a = self.parse_add()?;
                self.expect(b')')?;
                Ok(Expr::Sqrt(Box::new(a)))
            }
            "piecewise" => self.parse_piecewise(),
            "" => Err(self.err("expected identifier")),
            _ => Ok(Expr::Param(name)),
        }
    }

    fn parse_piecewise(&mut self) -> Result<Expr> {
        self.expect(b'{')?;
        let mut var: Option<Var> = None;
        let mut branches = Vec::new();
        loop {
            let name = self.ident();
            let v = match name.as_str() {
                "s1" => Var::S1,
                "s2" => Var::S2,
                other => {
                    return Err(self.err(&format!(
                        "piecewise condition must test s1 or s2, got `{other}`"
                    )))
                }
            };
            if let Some(prev) = var {
                if prev != v {
                    return Err(self.err("piecewise branches must all test the same variable"));
                }
            }
            var = Some(v);
            let op = match self.peek() {
                Some(b'<') => {
                    self.pos += 1;
                    if self.bytes.get(self.pos) == Some(&b'=') {
                        self.pos += 1;
                        CmpOp::Le
                    } else {
                        CmpOp::Lt
                    }
                }
                Some(b'>') => {
                    self.pos += 1;
                    if self.bytes.get(self.pos) == Some(&b'=') {
                        self.pos += 1;
                        CmpOp::Ge
                    } else {
                        CmpOp::Gt
                    }
                }
                _ => return Err(self.err("expected comparison operator")),
            };
            let threshold = match self.parse_unary()? {
                Expr::Const(c) => c,
                _ => return Err(self.err("piecewise threshold must be a constant")),
            };
            self.expect(b':')?;
            let body = self.parse_add()?;
            branches.push(PiecewiseBranch { op, threshold, body });
            if self.eat(b',') {
                if self.peek() == Some(b'}') {
                    self.pos += 1;
                    break;
                }
                continue;
            }
            self.expect(b'}')?;
            break;
        }
        Ok(Expr::Piecewise { var: var.unwrap(), branches })
    }
}

/// Checks every piecewise block for exhaustive, non-overlapping conditions:
/// sample points around each threshold must match exactly one branch.
fn validate_piecewise(e: &Expr) -> Result<()> {
    match e {
        Expr::Piecewise { branches, .. } => {
            let mut probes: Vec<f64> = Vec::new();
            for b in branches {
                let t = b.threshold;
                let step = (t.abs() * 1e-9).max(1e-9);
                probes.extend_from_slice(&[t - step, t, t + step]);
            }
            probes.push(-1e12);
            probes.push(1e12);
            for &x in &probes {
                let hits = branches.iter().filter(|b| b.op.holds(x, b.threshold)).count();
                if hits == 0 {
                    return Err(BbeError::Validation(format!(
                        "piecewise not exhaustive: no branch matches {x}"
                    )));
                }
                if hits > 1 {
                    return Err(BbeError::Validation(format!(
                        "piecewise branches overlap at {x}"
                    )));
                }
            }
            for b in branches {
                validate_piecewise(&b.body)?;
            }
            Ok(())
        }
        Expr::Bin(_, a, b) | Expr::Min(a, b) | Expr::Max(a, b) => {
            validate_piecewise(a)?;
            validate_piecewise(b)
        }
        Expr::Sqrt(a) => validate_piecewise(a),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_params() -> HashMap<String, f64> {
        HashMap::new()
    }

    #[test]
    fn cournot_quantity_payoff_at_nash() {
        // s1*(1-s1-s2) at (1/3, 1/3) is 1/9.
        let e = parse_closed("s1*(1-s1-s2)", &no_params()).unwrap();
        let v = e.eval(1.0 / 3.0, 1.0 / 3.0).unwrap();
        assert!((v - 1.0 / 9.0).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn constant_zero() {
        assert_eq!(parse_expr("0").unwrap(), Expr::Const(0.0));
    }

    #[test]
    fn cournot_capacity_payoff() {
        // (1-s1)*(s1+s2-1) at (3/4, 3/4) is 1/8.
        let e = parse_closed("(1-s1)*(s1+s2-1)", &no_params()).unwrap();
        let v = e.eval(0.75, 0.75).unwrap();
        assert!((v - 0.125).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn hotelling_profit_at_nash() {
        // Symmetric prices at t yield t/2 with the min/max demand form.
        let mut params = HashMap::new();
        params.insert("t".to_string(), 1.0);
        let e = parse_closed("s1*min(1, max(0, (s2-s1+t)/(2*t)))", &params).unwrap();
        let v = e.eval(1.0, 1.0).unwrap();
        assert!((v - 0.5).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn input_game_effort_payoff() {
        // s1*s2 - s1^2/(2*rho) at (0.9, 0.9) with rho = 0.9: by hand,
        // 0.81 - 0.81/1.8 = 0.405.
        let mut params = HashMap::new();
        params.insert("rho".to_string(), 0.9);
        let e = parse_closed("s1*s2 - s1^2/(2*rho)", &params).unwrap();
        let v = e.eval(0.9, 0.9).unwrap();
        assert!((v - 0.405).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let e = parse_closed("1/(s1-s2)", &no_params()).unwrap();
        assert!(e.eval(0.5, 0.5).is_err());
        assert!(e.eval(0.6, 0.5).is_ok());
    }

    #[test]
    fn sqrt_of_negative_is_an_error() {
        let e = parse_closed("sqrt(s1-1)", &no_params()).unwrap();
        assert!(e.eval(0.5, 0.0).is_err());
    }

    #[test]
    fn unknown_identifier_fails_at_bind() {
        let err = parse_closed("s1*q", &no_params()).unwrap_err();
        assert!(err.to_string().contains("unknown identifier"));
    }

    #[test]
    fn syntax_error_carries_position() {
        match parse_expr("s1 + ) s2") {
            Err(BbeError::Syntax { line, col, .. }) => {
                assert_eq!(line, 1);
                assert!(col >= 6);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn piecewise_parses_and_selects_branch() {
        let e = parse_expr("piecewise{s2 < 0.5: 0, s2 >= 0.5: s1}").unwrap();
        assert_eq!(e.eval(0.7, 0.2).unwrap(), 0.0);
        assert_eq!(e.eval(0.7, 0.9).unwrap(), 0.7);
    }

    #[test]
    fn piecewise_overlap_rejected() {
        assert!(parse_expr("piecewise{s1 < 0.5: 0, s1 <= 0.5: 1, s1 > 0.5: 2}").is_err());
    }

    #[test]
    fn piecewise_gap_rejected() {
        assert!(parse_expr("piecewise{s1 < 0.4: 0, s1 > 0.6: 1}").is_err());
    }

    #[test]
    fn pow_is_right_associative_and_binds_tighter_than_mul() {
        let e = parse_closed("2*3^2", &no_params()).unwrap();
        assert_eq!(e.eval(0.0, 0.0).unwrap(), 18.0);
        let e = parse_closed("2^3^2", &no_params()).unwrap();
        assert_eq!(e.eval(0.0, 0.0).unwrap(), 512.0);
    }

    #[test]
    fn unary_minus() {
        let e = parse_closed("-4*s1*s2 + 5*s1 + 2*s2 - 1", &no_params()).unwrap();
        let v = e.eval(0.5, 0.5).unwrap();
        assert!((v - 1.5).abs() < 1e-12, "got {v}");
    }

    // Round trip on a corpus covering every payoff used in the library.
    #[test]
    fn print_parse_round_trip_corpus() {
        let corpus = [
            "s1*(1-s1-s2)",
            "s2*(1-s2-s1)",
            "(1-s1)*(s1+s2-1)",
            "(1-s2)*(s2+s1-1)",
            "s1*min(1, max(0, (s2-s1+1)/2))",
            "s2*min(1, max(0, (s1-s2+1)/2))",
            "s1*s2 - s1^2/1.8",
            "4*s1*s2 - 2*s1 + s2 + 1",
            "-4*s1*s2 + 5*s1 + 2*s2 - 1",
            "s1*s2 - 0.5*s1*(1-s2) + 0.5*(1-s1)*s2",
            "s1*s2 + 0.5*s1*(1-s2) + 2*(1-s1)*s2",
            "0",
            "1",
            "s1^2",
            "sqrt(s1+1)",
            "piecewise{s2 < 0.5: 0, s2 >= 0.5: s1}",
            "min(s1, s2)",
            "max(s1*s2, s1+s2)",
            "s1/(s2+2)",
            "2^3^2",
            "(s1+s2)^2",
            "1 - s1 - s2 - 1",
            "s1 - (s2 - 1)",
        ];
        for src in corpus {
            let e1 = parse_expr(src).unwrap();
            let printed = e1.print();
            let e2 = parse_expr(&printed)
                .unwrap_or_else(|err| panic!("reparse of `{printed}` failed: {err}"));
            assert_eq!(e1, e2, "round trip mismatch for `{src}` -> `{printed}`");
        }
    }
}
