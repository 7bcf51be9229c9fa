//! Text grammar: integers, rationals `p/q`, `x`, `y`, `+ - * ^` and
//! parentheses. Only `x` takes negative exponents. No implicit products.

use num_traits::{One, Signed, Zero};

use crate::arith::rat::fmt_rat;
use crate::arith::Rat;
use crate::error::{Error, Result};

use super::bipoly::{BiPoly, CurvePoly};

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, expected: expected.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<num_bigint::BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    fn expr(&mut self) -> Result<BiPoly<Rat>> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.plus(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.minus(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly<Rat>> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = acc.times(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BiPoly<Rat>> {
        if self.eat(b'-') {
            return Ok(self.unary()?.negated());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<BiPoly<Rat>> {
        let (base, is_x) = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let Some(e) = self.digits() else { return self.err("integer exponent") };
        let e: u32 = match e.try_into() {
            Ok(e) => e,
            Err(_) => return self.err("exponent below 2^32"),
        };
        if neg {
            if !is_x {
                return self.err("nonnegative exponent (only x takes negative exponents)");
            }
            return Ok(BiPoly::monomial(-(e as i64), 0, Rat::one()));
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<(BiPoly<Rat>, bool)> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok((BiPoly::x(), true))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok((BiPoly::y(), false))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("')'");
                }
                Ok((e, false))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits().unwrap();
                let save = self.pos;
                if self.eat(b'/') {
                    match self.digits() {
                        Some(d) if !d.is_zero() => return Ok((BiPoly::constant(Rat::new(n, d)), false)),
                        Some(_) => return self.err("nonzero denominator"),
                        None => {
                            self.pos = save;
                            return self.err("denominator digits");
                        }
                    }
                }
                Ok((BiPoly::constant(Rat::from_integer(n)), false))
            }
            _ => self.err("number, 'x', 'y' or '('"),
        }
    }
}

/// Parses any polynomial expression (not necessarily monic).
pub fn parse_poly(text: &str) -> Result<BiPoly<Rat>> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("operator or end of input");
    }
    Ok(e)
}

/// Parses a curve; the result must be monic in y.
pub fn parse_curve(text: &str) -> Result<CurvePoly> {
    CurvePoly::new(parse_poly(text)?)
}

/// Splits `(a)*(b)*...` at top-level `*`. Anything with a top-level sum
/// comes back as one piece.
pub fn split_factors(text: &str) -> Vec<&str> {
    let b = text.as_bytes();
    let mut depth = 0i32;
    let mut cuts = vec![];
    for (i, &c) in b.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                let prev = text[..i].trim_end().as_bytes().last().copied();
                if prev != Some(b'^') {
                    return vec![text.trim()];
                }
            }
            b'*' if depth == 0 => cuts.push(i),
            _ => {}
        }
    }
    let mut out = vec![];
    let mut start = 0;
    for c in cuts.into_iter().chain(std::iter::once(text.len())) {
        out.push(strip_parens(text[start..c].trim()));
        start = c + 1;
    }
    out
}

fn strip_parens(s: &str) -> &str {
    if !(s.starts_with('(') && s.ends_with(')')) {
        return s;
    }
    let mut depth = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i + 1 < s.len() {
                    return s;
                }
            }
            _ => {}
        }
    }
    s[1..s.len() - 1].trim()
}

fn monomial(e: i64, j: usize) -> String {
    let mut parts = vec![];
    match e {
        0 => {}
        1 => parts.push("x".to_string()),
        _ => parts.push(format!("x^{e}")),
    }
    match j {
        0 => {}
        1 => parts.push("y".to_string()),
        _ => parts.push(format!("y^{j}")),
    }
    parts.join("*")
}

/// Canonical printer, readable back by [`parse_poly`].
pub fn print_poly(p: &BiPoly<Rat>) -> String {
    let mut out = String::new();
    for (j, c) in p.y_coeffs.iter().enumerate().rev() {
        for (e, a) in c.terms().iter().rev() {
            let m = monomial(*e, j);
            let abs = a.abs();
            let body = if m.is_empty() {
                fmt_rat(&abs)
            } else if abs.is_one() {
                m
            } else {
                format!("{}*{m}", fmt_rat(&abs))
            };
            if out.is_empty() {
                if a.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if a.is_negative() { " - " } else { " + " });
            }
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_split() {
        assert_eq!(split_factors("(y^2-x^3)*(y^2-x^5)"), vec!["y^2-x^3", "y^2-x^5"]);
        assert_eq!(split_factors("(y-x)*(y+x)+x^3"), vec!["(y-x)*(y+x)+x^3"]);
        assert_eq!(split_factors("y^2+x^-1*y"), vec!["y^2+x^-1*y"]);
        assert_eq!(split_factors("y - x^2"), vec!["y - x^2"]);
        assert_eq!(split_factors("(y-x)(y+x)"), vec!["(y-x)(y+x)"]);
    }
    use crate::arith::rat::{rat, rint};

    #[test]
    fn quartic_with_nested_square() {
        let f = parse_curve("(y^2 - x^3)^2 - x^5*y").unwrap();
        assert_eq!(f.degree(), 4);
        assert_eq!(f.poly.coeff(0).terms().iter().collect::<Vec<_>>(), vec![(&6, &rint(1))]);
    }

    #[test]
    fn bare_y_and_laurent_terms() {
        let f = parse_curve("y").unwrap();
        assert_eq!(f.degree(), 1);
        let g = parse_curve("y^4 + x^-1*y^2 + y + 1").unwrap();
        assert_eq!(g.poly.coeff(2).valuation(), Some(-1));
        assert_eq!(print_poly(&g.poly), "y^4 + x^-1*y^2 + y + 1");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_curve("2*y^2 + x"), Err(Error::NotMonic)));
        assert!(matches!(parse_poly("x y"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("y^-1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("(y+1"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn rationals_round_trip() {
        let f = parse_poly("y^2 - 3/2*x^3 + 1/3").unwrap();
        assert_eq!(f.coeff(0).coeff(3), rat(-3, 2));
        assert_eq!(parse_poly(&print_poly(&f)).unwrap(), f);
    }
}
