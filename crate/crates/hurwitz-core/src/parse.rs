//! Text input: polynomials in w and z, rational functions, curve
//! equations `w^m = f(z)`, divisor expressions, and rational scalars.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor (('*' | '/') factor)*      -- implicit '*' before a
//!                                                 variable after a
//!                                                 literal or group
//! factor  := '-' factor | base ('^' uint)?
//! base    := uint | 'z' | 'w' | '(' expr ')'
//!
//! divisor := '0' | ['-'] dterm (('+' | '-') dterm)*
//! dterm   := [uint '*'] place
//! place   := '(' expr ')' | 'inf'
//! ```
//!
//! `p/q` between integer literals is the rational literal; in polynomial
//! contexts a divisor must lower to a nonzero constant. Unary minus
//! binds looser than `^`, so `-z^4` is `-(z^4)`. Implicit multiplication
//! is never allowed between two variables.
//!
//! Errors carry the byte offset and the expected-token set.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bpoly::BPoly;
use crate::divisor::{Divisor, Place};
use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::ratfun::RatFun;
use crate::upoly::UPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Z,
    W,
}

/// Expression tree produced by the parser. Offsets on the leaves and on
/// division nodes feed error messages during lowering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt, usize),
    Var(Var, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
    Group(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Var(Var),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Equals,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("integer '{s}'"),
            Tok::Var(Var::Z) => "'z'".to_string(),
            Tok::Var(Var::W) => "'w'".to_string(),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Plus => "'+'".to_string(),
            Tok::Minus => "'-'".to_string(),
            Tok::Star => "'*'".to_string(),
            Tok::Slash => "'/'".to_string(),
            Tok::Caret => "'^'".to_string(),
            Tok::LParen => "'('".to_string(),
            Tok::RParen => "')'".to_string(),
            Tok::Equals => "'='".to_string(),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '=' => {
                toks.push((Tok::Equals, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((Tok::Int(input[start..i].to_string()), start));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let name = &input[start..i];
                match name {
                    "z" => toks.push((Tok::Var(Var::Z), start)),
                    "w" => toks.push((Tok::Var(Var::W), start)),
                    other => toks.push((Tok::Ident(other.to_string()), start)),
                }
            }
            other => {
                return Err(Error::Parse {
                    offset: i,
                    expected: "a token".to_string(),
                    found: format!("'{other}'"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    end: usize, // byte length of the input, for end-of-input offsets
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, o)| o)
            .unwrap_or(self.end)
    }

    fn found(&self) -> String {
        self.peek()
            .map(Tok::describe)
            .unwrap_or_else(|| "end of input".to_string())
    }

    fn error(&self, expected: &str) -> Error {
        Error::Parse {
            offset: self.offset(),
            expected: expected.to_string(),
            found: self.found(),
        }
    }

    fn bump(&mut self) -> &Tok {
        let t = &self.toks[self.pos].0;
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Expr::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Expr::Add(Box::new(acc), Box::new(Expr::Neg(Box::new(rhs))));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let (mut acc, mut implicit_ok) = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let (rhs, ok) = self.factor()?;
                    implicit_ok = ok;
                    acc = Expr::Mul(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Slash) => {
                    let slash_at = self.offset();
                    self.pos += 1;
                    let (rhs, ok) = self.factor()?;
                    implicit_ok = ok;
                    acc = Expr::Div(Box::new(acc), Box::new(rhs), slash_at);
                }
                // implicit multiplication: only a variable, and only
                // after a literal or parenthesized group
                Some(Tok::Var(_)) if implicit_ok => {
                    let (rhs, ok) = self.factor()?;
                    implicit_ok = ok;
                    acc = Expr::Mul(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    /// Returns the factor and whether it may be followed by an implicit
    /// multiplication (its base was a literal or a group, not a
    /// variable).
    fn factor(&mut self) -> Result<(Expr, bool)> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            let (inner, ok) = self.factor()?;
            return Ok((Expr::Neg(Box::new(inner)), ok));
        }
        let offset = self.offset();
        let (base, implicit_ok) = match self.peek() {
            Some(Tok::Int(_)) => {
                let Tok::Int(digits) = self.bump() else {
                    unreachable!()
                };
                let n: BigInt = digits.parse().expect("digits parse as BigInt");
                (Expr::Int(n, offset), true)
            }
            Some(Tok::Var(v)) => {
                let v = *v;
                self.pos += 1;
                (Expr::Var(v, offset), false)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                (Expr::Group(Box::new(inner)), true)
            }
            Some(Tok::Ident(name)) => {
                return Err(Error::UnknownVariable {
                    name: name.clone(),
                    offset,
                })
            }
            _ => return Err(self.error("an integer, 'z', 'w', '-' or '('")),
        };
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let exp_offset = self.offset();
            match self.peek() {
                Some(Tok::Int(digits)) => {
                    let exp: u32 = digits.parse().map_err(|_| Error::Parse {
                        offset: exp_offset,
                        expected: "an exponent that fits in 32 bits".to_string(),
                        found: format!("integer '{digits}'"),
                    })?;
                    self.pos += 1;
                    Ok((Expr::Pow(Box::new(base), exp), implicit_ok))
                }
                _ => Err(self.error("a nonnegative integer exponent")),
            }
        } else {
            Ok((base, implicit_ok))
        }
    }
}

fn parse_full_expr(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.error("end of input"));
    }
    Ok(e)
}

/// Lower to a bivariate polynomial; division is only allowed by a
/// nonzero constant.
fn lower_bpoly(e: &Expr) -> Result<BPoly> {
    Ok(match e {
        Expr::Int(n, _) => BPoly::constant(Rat::from_integer(n.clone())),
        Expr::Var(Var::W, _) => BPoly::var_w(),
        Expr::Var(Var::Z, _) => BPoly::var_z(),
        Expr::Neg(inner) => -&lower_bpoly(inner)?,
        Expr::Add(a, b) => &lower_bpoly(a)? + &lower_bpoly(b)?,
        Expr::Mul(a, b) => &lower_bpoly(a)? * &lower_bpoly(b)?,
        Expr::Div(a, b, slash_at) => {
            let num = lower_bpoly(a)?;
            let den = lower_bpoly(b)?;
            let c = den.as_upoly_in_z().and_then(|p| {
                if p.is_constant() {
                    Some(p.coeff(0))
                } else {
                    None
                }
            });
            match c {
                Some(c) if !c.is_zero() => {
                    &num * &BPoly::constant(Rat::from_integer(1.into()) / c)
                }
                Some(_) => return Err(Error::DivisionByZeroFunction),
                None => {
                    return Err(Error::Parse {
                        offset: *slash_at,
                        expected: "a constant divisor in a polynomial".to_string(),
                        found: "a non-constant divisor".to_string(),
                    })
                }
            }
        }
        Expr::Pow(a, k) => lower_bpoly(a)?.pow(*k as usize),
        Expr::Group(a) => lower_bpoly(a)?,
    })
}

fn first_w_offset(e: &Expr) -> Option<usize> {
    match e {
        Expr::Int(..) => None,
        Expr::Var(Var::W, off) => Some(*off),
        Expr::Var(Var::Z, _) => None,
        Expr::Neg(a) | Expr::Pow(a, _) | Expr::Group(a) => first_w_offset(a),
        Expr::Add(a, b) | Expr::Mul(a, b) | Expr::Div(a, b, _) => {
            first_w_offset(a).or_else(|| first_w_offset(b))
        }
    }
}

/// Lower to a rational function of z; `w` is rejected, division is
/// unrestricted (a zero denominator is a domain error).
fn lower_ratfun(e: &Expr) -> Result<RatFun> {
    if let Some(off) = first_w_offset(e) {
        return Err(Error::Parse {
            offset: off,
            expected: "an expression in z only".to_string(),
            found: "'w'".to_string(),
        });
    }
    fn go(e: &Expr) -> Result<RatFun> {
        Ok(match e {
            Expr::Int(n, _) => RatFun::constant(Rat::from_integer(n.clone())),
            Expr::Var(_, _) => RatFun::var(),
            Expr::Neg(a) => -&go(a)?,
            Expr::Add(a, b) => &go(a)? + &go(b)?,
            Expr::Mul(a, b) => &go(a)? * &go(b)?,
            Expr::Div(a, b, _) => go(a)?.div(&go(b)?)?,
            Expr::Pow(a, k) => go(a)?.pow(*k as usize),
            Expr::Group(a) => go(a)?,
        })
    }
    go(e)
}

/// Parse a bivariate polynomial in w and z.
pub fn parse_bpoly(text: &str) -> Result<BPoly> {
    lower_bpoly(&parse_full_expr(text)?)
}

/// Parse a univariate polynomial in z (no w, no non-constant division).
pub fn parse_upoly(text: &str) -> Result<UPoly> {
    let e = parse_full_expr(text)?;
    if let Some(off) = first_w_offset(&e) {
        return Err(Error::Parse {
            offset: off,
            expected: "a polynomial in z only".to_string(),
            found: "'w'".to_string(),
        });
    }
    let b = lower_bpoly(&e)?;
    Ok(b.as_upoly_in_z().expect("no w by construction"))
}

/// Parse a rational function of z, e.g. `(z^2+1)/(z-3)^2`.
pub fn parse_ratfun(text: &str) -> Result<RatFun> {
    lower_ratfun(&parse_full_expr(text)?)
}

/// Parse a curve equation `w^m = f(z)` and return `(m, f)`.
pub fn parse_curve_equation(text: &str) -> Result<(u32, UPoly)> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
    };
    let lhs = p.expr()?;
    let m = match lhs {
        Expr::Var(Var::W, _) => 1,
        Expr::Pow(inner, k) if matches!(*inner, Expr::Var(Var::W, _)) => k,
        _ => {
            return Err(Error::Parse {
                offset: 0,
                expected: "a left-hand side of the form w^m".to_string(),
                found: "another expression".to_string(),
            })
        }
    };
    p.expect(Tok::Equals, "'='")?;
    let rhs = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.error("end of input"));
    }
    if let Some(off) = first_w_offset(&rhs) {
        return Err(Error::Parse {
            offset: off,
            expected: "a right-hand side in z only".to_string(),
            found: "'w'".to_string(),
        });
    }
    let f = lower_bpoly(&rhs)?
        .as_upoly_in_z()
        .expect("no w by construction");
    Ok((m, f))
}

/// Parse a divisor expression such as `2*(z) + 1*(z^2+1) - 3*inf`.
pub fn parse_divisor(text: &str) -> Result<Divisor> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
    };
    // the zero divisor is written "0"
    if toks.len() == 1 {
        if let Tok::Int(d) = &toks[0].0 {
            if d == "0" {
                return Ok(Divisor::zero());
            }
        }
    }
    let mut divisor = Divisor::zero();
    let mut sign: i64 = 1;
    if p.peek() == Some(&Tok::Minus) {
        p.pos += 1;
        sign = -1;
    }
    loop {
        let (place, coeff) = parse_divisor_term(&mut p)?;
        divisor.add_place(place, sign * coeff);
        match p.peek() {
            Some(Tok::Plus) => {
                p.pos += 1;
                sign = 1;
            }
            Some(Tok::Minus) => {
                p.pos += 1;
                sign = -1;
            }
            None => return Ok(divisor),
            _ => return Err(p.error("'+', '-' or end of input")),
        }
    }
}

fn parse_divisor_term(p: &mut Parser) -> Result<(Place, i64)> {
    let mut coeff: i64 = 1;
    if let Some(Tok::Int(digits)) = p.peek() {
        let at = p.offset();
        coeff = digits.parse().map_err(|_| Error::Parse {
            offset: at,
            expected: "a coefficient that fits in 64 bits".to_string(),
            found: format!("integer '{digits}'"),
        })?;
        p.pos += 1;
        p.expect(Tok::Star, "'*' between coefficient and place")?;
    }
    match p.peek() {
        Some(Tok::LParen) => {
            p.pos += 1;
            let inner = p.expr()?;
            p.expect(Tok::RParen, "')'")?;
            if let Some(off) = first_w_offset(&inner) {
                return Err(Error::Parse {
                    offset: off,
                    expected: "a place polynomial in z only".to_string(),
                    found: "'w'".to_string(),
                });
            }
            let poly = lower_bpoly(&inner)?
                .as_upoly_in_z()
                .expect("no w by construction");
            Ok((Place::finite(&poly)?, coeff))
        }
        Some(Tok::Ident(name)) if name == "inf" => {
            p.pos += 1;
            Ok((Place::Infinity, coeff))
        }
        _ => Err(p.error("'(poly)' or 'inf'")),
    }
}

/// Parse a rational scalar `p/q` or integer, with optional leading '-'.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let f = parse_ratfun(text)?;
    if !f.is_constant() {
        return Err(Error::Parse {
            offset: 0,
            expected: "a rational constant".to_string(),
            found: "a non-constant expression".to_string(),
        });
    }
    Ok(f.num().coeff(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn lowers_curve_equation_shape() {
        // w^2 - (z^5 - 1) -> {(2,0): 1, (0,5): -1, (0,0): 1}
        let f = parse_bpoly("w^2 - (z^5 - 1)").unwrap();
        let expected = &(&BPoly::term(rat_int(1), 2, 0) - &BPoly::term(rat_int(1), 0, 5))
            + &BPoly::term(rat_int(1), 0, 0);
        assert_eq!(f, expected);
    }

    #[test]
    fn example5_polynomial_matches_symbolic_expansion() {
        // (w^2-1)*((w^2-1)*z^4 - (2*z^2 - 2*z - 1)) + 1, cross-checked
        // against the same polynomial built by direct BPoly arithmetic
        let parsed =
            parse_bpoly("(w^2-1)*((w^2-1)*z^4 - (2*z^2 - 2*z - 1)) + 1").unwrap();
        let w2m1 = &BPoly::term(rat_int(1), 2, 0) - &BPoly::one();
        let p = &(&BPoly::term(rat_int(2), 0, 2) - &BPoly::term(rat_int(2), 0, 1)) - &BPoly::one();
        let built = &(&w2m1 * &(&(&w2m1 * &BPoly::term(rat_int(1), 0, 4)) - &p)) + &BPoly::one();
        assert_eq!(parsed, built);
    }

    #[test]
    fn parse_error_offsets() {
        match parse_bpoly("w^^2") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_bpoly("w^2 + ") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_bpoly("x + 1") {
            Err(Error::UnknownVariable { name, offset }) => {
                assert_eq!(name, "x");
                assert_eq!(offset, 0);
            }
            other => panic!("expected unknown variable, got {other:?}"),
        }
    }

    #[test]
    fn implicit_multiplication_rules() {
        assert_eq!(parse_upoly("2z").unwrap(), UPoly::from_int_coeffs(&[0, 2]));
        assert_eq!(
            parse_bpoly("(z+1)w").unwrap(),
            &(&BPoly::var_z() + &BPoly::one()) * &BPoly::var_w()
        );
        assert_eq!(
            parse_upoly("2z^2").unwrap(),
            UPoly::from_int_coeffs(&[0, 0, 2])
        );
        // never between variables
        assert!(parse_bpoly("z w").is_err());
        assert!(parse_bpoly("zw").is_err());
    }

    #[test]
    fn rational_literals_and_division() {
        assert_eq!(
            parse_upoly("1/2*z + 3").unwrap(),
            UPoly::from_coeffs(vec![rat_int(3), rat(1, 2)])
        );
        assert_eq!(
            parse_upoly("z^2/4").unwrap(),
            UPoly::from_coeffs(vec![rat_int(0), rat_int(0), rat(1, 4)])
        );
        // non-constant division is fine for rational functions
        let f = parse_ratfun("(z^2+1)/(z-3)^2").unwrap();
        assert_eq!(f.num(), &UPoly::from_int_coeffs(&[1, 0, 1]));
        assert_eq!(f.den(), &UPoly::from_int_coeffs(&[9, -6, 1]));
        // ... but not for polynomials
        assert!(matches!(
            parse_upoly("1/(z+1)"),
            Err(Error::Parse { .. })
        ));
        // division by the zero function is a domain error, not a syntax one
        assert!(matches!(
            parse_ratfun("1/(z - z)"),
            Err(Error::DivisionByZeroFunction)
        ));
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        assert_eq!(
            parse_upoly("-z^4").unwrap(),
            UPoly::monomial(rat_int(-1), 4)
        );
        assert_eq!(
            parse_upoly("(-z)^4").unwrap(),
            UPoly::monomial(rat_int(1), 4)
        );
    }

    #[test]
    fn curve_equations() {
        let (m, f) = parse_curve_equation("w^2 = z^5 - 1").unwrap();
        assert_eq!(m, 2);
        assert_eq!(f, UPoly::from_int_coeffs(&[-1, 0, 0, 0, 0, 1]));
        let (m, _) = parse_curve_equation("w^4 = z^4 - 1").unwrap();
        assert_eq!(m, 4);
        assert!(parse_curve_equation("w^2 + 1 = z").is_err());
        assert!(parse_curve_equation("w^2 = w + z").is_err());
        assert!(parse_curve_equation("w^2 = z^2").is_ok());
    }

    #[test]
    fn divisor_expressions() {
        let d = parse_divisor("2*(z) + 1*(z^2+1) - 3*inf").unwrap();
        assert_eq!(d.degree(), 2 + 2 - 3);
        assert_eq!(d.coefficient(&Place::Infinity), -3);
        // round trip through Display
        assert_eq!(parse_divisor(&d.to_string()).unwrap(), d);

        assert_eq!(parse_divisor("0").unwrap(), Divisor::zero());
        assert_eq!(
            parse_divisor("-2*inf").unwrap(),
            Divisor::of(Place::Infinity, -2)
        );
        // bare places have coefficient 1
        assert_eq!(
            parse_divisor("(z) + inf").unwrap().degree(),
            2
        );
        // reducible place polynomials are a domain error
        assert!(matches!(
            parse_divisor("1*(z^2-1)"),
            Err(Error::NotIrreducible { .. })
        ));
        // and garbage is a syntax error
        assert!(matches!(
            parse_divisor("2*"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn rational_scalars() {
        assert_eq!(parse_rat("2/3").unwrap(), rat(2, 3));
        assert_eq!(parse_rat("-5").unwrap(), rat_int(-5));
        assert!(parse_rat("z").is_err());
    }
}
