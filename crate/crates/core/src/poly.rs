//! Exact Laurent polynomials with integer coefficients.
//!
//! Everything is stored in the bracket variable `A`. The display variables
//! are substitutions: `t^(1/2) = A^-2` and `q = -A^-2`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    A,
    T,
    Q,
}

impl std::str::FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        match s {
            "A" | "a" => Ok(Var::A),
            "t" | "T" => Ok(Var::T),
            "q" | "Q" => Ok(Var::Q),
            _ => Err(Error::PolyParse { text: s.to_string(), reason: "unknown variable".into() }),
        }
    }
}

/// Finite map exponent → nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(coef: i64, exp: i32) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(coef, exp);
        p
    }

    pub fn from_pairs<I: IntoIterator<Item = (i32, i64)>>(pairs: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p.add_term(c, e);
        }
        p
    }

    pub fn add_term(&mut self, coef: i64, exp: i32) {
        if coef == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += coef;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn to_pairs(&self) -> Vec<(i32, i64)> {
        self.terms().collect()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes the variable by its inverse.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly::from_pairs(self.terms().map(|(e, c)| (-e, c)))
    }

    /// Rewrites an `A`-polynomial in `q = -A^-2`; `None` when an odd power of `A` occurs.
    pub fn a_to_q(&self) -> Option<Self> {
        let mut out = LaurentPoly::zero();
        for (e, c) in self.terms() {
            if e % 2 != 0 {
                return None;
            }
            let m = -e / 2;
            out.add_term(if m % 2 == 0 { c } else { -c }, m);
        }
        Some(out)
    }

    /// Rewrites a `q`-polynomial in `A`.
    pub fn q_to_a(&self) -> Self {
        LaurentPoly::from_pairs(self.terms().map(|(m, c)| (-2 * m, if m % 2 == 0 { c } else { -c })))
    }

    /// Parses a polynomial written in `A`, `t` or `q` and returns it in `A`
    /// together with the variable that was used.
    pub fn parse(text: &str) -> Result<(LaurentPoly, Var)> {
        parse_poly(text)
    }

    pub fn render(&self, var: Var) -> String {
        match var {
            Var::A => render_terms(self.terms().map(|(e, c)| (c, (e as i64, 1))), "A"),
            Var::T => render_terms(self.terms().map(|(e, c)| (c, (-(e as i64), 4))), "t"),
            Var::Q => match self.a_to_q() {
                Some(p) => render_terms(p.terms().map(|(e, c)| (c, (e as i64, 1))), "q"),
                None => self.render(Var::A),
            },
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Var::A))
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn render_exponent(num: i64, den: i64) -> String {
    let g = gcd(num, den).max(1);
    let (n, d) = (num / g, den / g);
    if d == 1 {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

fn render_terms<I: Iterator<Item = (i64, (i64, i64))>>(terms: I, var: &str) -> String {
    let mut parts: Vec<(i64, (i64, i64))> = terms.collect();
    // ascending by rational exponent
    parts.sort_by(|a, b| (a.1 .0 * b.1 .1).cmp(&(b.1 .0 * a.1 .1)));
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, (num, den))) in parts.into_iter().enumerate() {
        let sign = if c < 0 { "-" } else { "+" };
        if k == 0 {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let mag = c.abs();
        if num == 0 {
            out.push_str(&mag.to_string());
            continue;
        }
        if mag != 1 {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(var);
        let exp = render_exponent(num, den);
        if exp != "1" {
            out.push('^');
            out.push_str(&exp);
        }
    }
    out
}

fn parse_error(text: &str, reason: impl Into<String>) -> Error {
    Error::PolyParse { text: text.to_string(), reason: reason.into() }
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn integer(&mut self) -> Option<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        self.chars[start..self.pos].iter().collect::<String>().parse().ok()
    }

    /// `[-]int[/int]`, optionally wrapped in `(...)` or `{...}`.
    fn exponent(&mut self) -> Result<(i64, i64)> {
        let close = match self.peek() {
            Some('(') => Some(')'),
            Some('{') => Some('}'),
            _ => None,
        };
        if close.is_some() {
            self.bump();
        }
        let mut sign = 1;
        if self.peek() == Some('-') {
            self.bump();
            sign = -1;
        } else if self.peek() == Some('+') {
            self.bump();
        }
        let num = self.integer().ok_or_else(|| parse_error(self.text, "expected exponent"))?;
        let mut den = 1;
        if self.peek() == Some('/') {
            self.bump();
            den = self.integer().ok_or_else(|| parse_error(self.text, "expected denominator"))?;
            if den == 0 {
                return Err(parse_error(self.text, "zero denominator"));
            }
        }
        if let Some(c) = close {
            if self.bump() != Some(c) {
                return Err(parse_error(self.text, format!("expected `{c}`")));
            }
        }
        Ok((sign * num, den))
    }
}

fn parse_poly(text: &str) -> Result<(LaurentPoly, Var)> {
    let normalized: String = text.chars().map(|c| if c == '−' { '-' } else { c }).collect();
    let mut cur = Cursor { chars: normalized.chars().collect(), pos: 0, text };
    let mut var: Option<Var> = None;
    let mut terms: Vec<(i64, (i64, i64))> = Vec::new();
    if cur.peek().is_none() {
        return Err(parse_error(text, "empty polynomial"));
    }
    let mut first = true;
    while cur.peek().is_some() {
        let mut sign = 1i64;
        match cur.peek() {
            Some('+') => {
                cur.bump();
            }
            Some('-') => {
                cur.bump();
                sign = -1;
            }
            _ if !first => return Err(parse_error(text, "expected `+` or `-` between terms")),
            _ => {}
        }
        first = false;
        let coef = cur.integer();
        if coef.is_some() && cur.peek() == Some('*') {
            cur.bump();
        }
        let term_var = match cur.peek() {
            Some('A') => Some(Var::A),
            Some('t') => Some(Var::T),
            Some('q') => Some(Var::Q),
            _ => None,
        };
        let exp = match term_var {
            Some(v) => {
                cur.bump();
                if let Some(prev) = var {
                    if prev != v {
                        return Err(parse_error(text, "mixed variables"));
                    }
                }
                var = Some(v);
                if cur.peek() == Some('^') {
                    cur.bump();
                    cur.exponent()?
                } else {
                    (1, 1)
                }
            }
            None => {
                if coef.is_none() {
                    return Err(parse_error(text, "expected a term"));
                }
                (0, 1)
            }
        };
        terms.push((sign * coef.unwrap_or(1), exp));
    }
    let var = var.unwrap_or(Var::A);
    let mut poly = LaurentPoly::zero();
    for (c, (num, den)) in terms {
        let (c, e) = match var {
            Var::A => {
                if num % den != 0 {
                    return Err(parse_error(text, "fractional power of A"));
                }
                (c, num / den)
            }
            Var::T => {
                // t^(num/den) = A^(-4 num/den)
                if (4 * num) % den != 0 {
                    return Err(parse_error(text, "power of t is not a multiple of 1/4"));
                }
                (c, -4 * num / den)
            }
            Var::Q => {
                if num % den != 0 {
                    return Err(parse_error(text, "fractional power of q"));
                }
                let m = num / den;
                (if m % 2 == 0 { c } else { -c }, -2 * m)
            }
        };
        poly.add_term(c, i32::try_from(e).map_err(|_| parse_error(text, "exponent overflow"))?);
    }
    Ok((poly, var))
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(c, e);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly::from_pairs(self.terms().map(|(e, c)| (e, -c)))
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(pairs: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut x = p(&[(1, 2)]);
        x.add_term(-2, 1);
        assert!(x.is_zero());
        assert_eq!(x, LaurentPoly::zero());
    }

    #[test]
    fn arithmetic() {
        let d = p(&[(2, -1), (-2, -1)]);
        assert_eq!(&d * &d, p(&[(4, 1), (0, 2), (-4, 1)]));
        assert_eq!(d.pow(0), LaurentPoly::one());
        assert_eq!(&d - &d, LaurentPoly::zero());
        assert_eq!(p(&[(3, 1), (-1, 2)]).invert_variable(), p(&[(-3, 1), (1, 2)]));
    }

    #[test]
    fn render_in_each_variable() {
        assert_eq!(LaurentPoly::one().render(Var::A), "1");
        assert_eq!(LaurentPoly::zero().render(Var::T), "0");
        assert_eq!(p(&[(3, -1)]).render(Var::A), "-A^3");
        assert_eq!(p(&[(-7, 1), (-3, -1), (5, -1)]).render(Var::A), "A^-7 - A^-3 - A^5");
        // trefoil: A^-4 + A^-12 - A^-16 = t + t^3 - t^4
        let v = p(&[(-4, 1), (-12, 1), (-16, -1)]);
        assert_eq!(v.render(Var::T), "t + t^3 - t^4");
        assert_eq!(p(&[(6, 1), (-2, 2)]).render(Var::T), "t^-3/2 + 2*t^1/2");
        // q = -A^-2
        assert_eq!(p(&[(-2, 1)]).render(Var::Q), "-q");
        assert_eq!(p(&[(-2, -1), (2, -1)]).render(Var::Q), "q^-1 + q");
    }

    #[test]
    fn parse_t_with_half_powers() {
        let (v, var) = LaurentPoly::parse("t^-2 + t^-3/2 - t^-1 - t^-1/2 + t^1/2").unwrap();
        assert_eq!(var, Var::T);
        assert_eq!(v, p(&[(8, 1), (6, 1), (4, -1), (2, -1), (-2, 1)]));
        let (w, _) = LaurentPoly::parse("t^(-2) + t^{-3/2} − t^-1 − t^(-1/2) + t^(1/2)").unwrap();
        assert_eq!(v, w);
    }

    #[test]
    fn parse_a_and_q() {
        assert_eq!(LaurentPoly::parse("-A^3").unwrap().0, p(&[(3, -1)]));
        assert_eq!(LaurentPoly::parse("2*A^-1 + 3").unwrap().0, p(&[(-1, 2), (0, 3)]));
        assert_eq!(LaurentPoly::parse("1").unwrap().0, LaurentPoly::one());
        assert_eq!(LaurentPoly::parse("q + q^-1").unwrap().0, p(&[(-2, -1), (2, -1)]));
    }

    #[test]
    fn parse_errors() {
        assert!(LaurentPoly::parse("").is_err());
        assert!(LaurentPoly::parse("A + t").is_err());
        assert!(LaurentPoly::parse("A^1/2").is_err());
        assert!(LaurentPoly::parse("t^1/3").is_err());
        assert!(LaurentPoly::parse("3 4").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-12i32..12, -5i64..6), 0..6)
            .prop_map(|v| LaurentPoly::from_pairs(v.into_iter().map(|(e, c)| (2 * e, c))))
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(x in arb_poly()) {
            for var in [Var::A, Var::T, Var::Q] {
                let text = x.render(var);
                let (back, _) = LaurentPoly::parse(&text).unwrap();
                prop_assert_eq!(&back, &x, "{}", text);
            }
        }

        #[test]
        fn q_substitution_round_trip(x in arb_poly()) {
            prop_assert_eq!(x.a_to_q().unwrap().q_to_a(), x);
        }

        #[test]
        fn multiplication_distributes(x in arb_poly(), y in arb_poly(), z in arb_poly()) {
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }
    }
}
