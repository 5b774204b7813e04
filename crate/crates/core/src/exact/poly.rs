//! Sparse multivariate polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::scalar::{self, factorial, Scalar};
use crate::error::{Error, Result};

/// Exponent multi-index, one entry per variable.
pub type Monomial = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Scalar>,
}

/// Variable names `prefix1, …, prefixN`.
pub fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn total_degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

/// Graded-lex comparison: higher total degree first, then lexicographically
/// larger exponent vectors first.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    total_degree(b).cmp(&total_degree(a)).then_with(|| b.cmp(a))
}

/// All exponent vectors of total degree `d` in `n` variables, in
/// graded-lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Monomial, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `k! = Π k_i!` for a multi-index.
pub fn multi_factorial(m: &[u32]) -> BigInt {
    m.iter().fold(BigInt::one(), |acc, &e| acc * factorial(e))
}

/// Renders a monomial by concatenating its factors, e.g. `h1^2h3`; the
/// constant monomial renders as `1`.
pub fn monomial_key(m: &[u32], vars: &[String]) -> String {
    let mut s = String::new();
    for (e, v) in m.iter().zip(vars) {
        match e {
            0 => {}
            1 => s.push_str(v),
            _ => s.push_str(&format!("{v}^{e}")),
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

impl MultiPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vec<String>, c: Scalar) -> Self {
        let n = vars.len();
        let mut p = Self::zero(vars);
        p.add_term(vec![0; n], c);
        p
    }

    pub fn var(vars: Vec<String>, i: usize) -> Self {
        let mut m = vec![0; vars.len()];
        m[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(m, Scalar::one());
        p
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(vars: Vec<String>, coeffs: &[Scalar]) -> Self {
        let n = vars.len();
        let mut p = Self::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            let mut m = vec![0; n];
            m[i] = 1;
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn from_terms(vars: Vec<String>, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn with_vars(mut self, vars: Vec<String>) -> Self {
        assert_eq!(vars.len(), self.vars.len());
        self.vars = vars;
        self
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        assert_eq!(m.len(), self.vars.len(), "monomial arity");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, m: &[u32]) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_cmp(a.0, b.0));
        v
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| total_degree(m)).max()
    }

    /// `Some(d)` when every stored term has total degree `d`. The zero
    /// polynomial is homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| total_degree(m));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| total_degree(m) == d)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn eval(&self, x: &[Scalar]) -> Result<Scalar> {
        if x.len() != self.vars.len() {
            return Err(Error::DimensionMismatch { expected: self.vars.len(), found: x.len() });
        }
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &e) in x.iter().zip(m) {
                if e > 0 {
                    t *= num_traits::pow(xi.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(self.vars.clone(), Scalar::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Partial derivative in variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        self.derivative_multi(&{
            let mut a = vec![0; self.vars.len()];
            a[i] = 1;
            a
        })
    }

    /// `∂^alpha` applied to the polynomial.
    pub fn derivative_multi(&self, alpha: &[u32]) -> Self {
        assert_eq!(alpha.len(), self.vars.len());
        let mut out = Self::zero(self.vars.clone());
        'terms: for (m, c) in &self.terms {
            let mut nm = m.clone();
            let mut coeff = c.clone();
            for (k, &a) in alpha.iter().enumerate() {
                if m[k] < a {
                    continue 'terms;
                }
                for j in 0..a {
                    coeff *= Scalar::from_integer(BigInt::from(m[k] - j));
                }
                nm[k] -= a;
            }
            out.add_term(nm, coeff);
        }
        out
    }

    /// Substitutes `x_i ↦ subs[i]`, each a polynomial over a common variable set.
    pub fn compose(&self, subs: &[MultiPoly]) -> Result<MultiPoly> {
        if subs.len() != self.vars.len() {
            return Err(Error::VariableMismatch { expected: self.vars.len(), found: subs.len() });
        }
        let target = subs.first().map(|p| p.vars.clone()).unwrap_or_default();
        let mut out = MultiPoly::zero(target.clone());
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target.clone(), c.clone());
            for (s, &e) in subs.iter().zip(m) {
                if e > 0 {
                    t = &t * &s.pow(e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Parses expressions such as `"x1^2*x2 + 3/2*x1 - 1"` or
    /// `"(h1 + h2)^2/2"` over the given variable names. Division is only
    /// allowed by constants.
    pub fn parse(src: &str, vars: Vec<String>) -> Result<MultiPoly> {
        let tokens = tokenize(src)?;
        if tokens.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Parser { tokens, pos: 0, vars };
        let out = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Parse(format!("unexpected {:?} in {src:?}", p.tokens[p.pos])));
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            out.push(Token::Num(chars[start..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {src:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    vars: Vec<String>,
}

impl Parser {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            if op == '*' {
                acc = &acc * &rhs;
            } else {
                let c = match rhs.degree() {
                    Some(0) => rhs.coeff(&vec![0; rhs.nvars()]),
                    _ => return Err(Error::Parse("division by a non-constant".into())),
                };
                acc = acc.scale(&(Scalar::one() / c));
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let e = match self.tokens.get(self.pos) {
                Some(Token::Num(s)) => s.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent {s:?}")))?,
                other => return Err(Error::Parse(format!("bad exponent {other:?}"))),
            };
            self.pos += 1;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let tok = self.tokens.get(self.pos).cloned().ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Token::Num(s) => Ok(MultiPoly::constant(self.vars.clone(), scalar::parse(&s)?)),
            Token::Ident(name) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => Ok(MultiPoly::var(self.vars.clone(), i)),
                None => Err(Error::Parse(format!("unknown variable {name:?}"))),
            },
            Token::Op('(') => {
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Token::Op(c) => Err(Error::Parse(format!("unexpected {c:?}"))),
        }
    }
}

/// Symmetric multilinear form attached to a homogeneous polynomial of degree
/// `n`, evaluated at `n` points: `1/n! Σ_{S ⊆ [n]} (-1)^{n-|S|} p(Σ_{i∈S} h_i)`.
pub fn polarize(p: &MultiPoly, args: &[Vec<Scalar>]) -> Result<Scalar> {
    let n = args.len();
    if !p.is_zero() && p.homogeneous_degree() != Some(n as u32) {
        return Err(Error::NonHomogeneous);
    }
    for a in args {
        if a.len() != p.nvars() {
            return Err(Error::DimensionMismatch { expected: p.nvars(), found: a.len() });
        }
    }
    let mut acc = Scalar::zero();
    for mask in 0u64..(1u64 << n) {
        let mut point = vec![Scalar::zero(); p.nvars()];
        for (i, a) in args.iter().enumerate() {
            if mask & (1 << i) != 0 {
                for (x, y) in point.iter_mut().zip(a) {
                    *x += y;
                }
            }
        }
        let v = p.eval(&point)?;
        if (n as u32 - mask.count_ones()).is_multiple_of(2) {
            acc += v;
        } else {
            acc -= v;
        }
    }
    Ok(acc / Scalar::from_integer(factorial(n as u32)))
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars.len(), rhs.vars.len(), "variable count");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars.len(), rhs.vars.len(), "variable count");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars.len(), rhs.vars.len(), "variable count");
        let mut out = MultiPoly::zero(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let factors: Vec<String> = m
                .iter()
                .zip(&self.vars)
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}
