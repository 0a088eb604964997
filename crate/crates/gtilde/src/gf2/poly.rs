//! Sparse polynomials over GF(2): a polynomial is the set of monomials with
//! coefficient 1, stored in strictly decreasing lexicographic order, so the
//! leading monomial is the first term and addition is symmetric difference.

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::Error;
use crate::gf2::monomial::{ExtMonomial, GradedMonomial, Monomial, MAX_EXPONENT};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly<M: GradedMonomial> {
    terms: Vec<M>,
}

/// Polynomials in w2, w3.
pub type Polynomial = SparsePoly<Monomial>;

/// Polynomials in a, w2, w3 over a fixed tower parameter.
pub type ExtPolynomial = SparsePoly<ExtMonomial>;

impl<M: GradedMonomial> SparsePoly<M> {
    pub fn zero() -> Self {
        SparsePoly { terms: Vec::new() }
    }

    pub fn from_monomial(m: M) -> Self {
        SparsePoly { terms: vec![m] }
    }

    /// Build from arbitrary terms: sorts, checks ring agreement, and cancels
    /// monomials appearing an even number of times.
    ///
    /// Panics if the terms mix different towers; silent mixing would corrupt
    /// every grading downstream.
    pub fn from_terms(mut terms: Vec<M>) -> Self {
        if let Some(first) = terms.first().copied() {
            assert!(
                terms.iter().all(|m| first.compatible(m)),
                "terms from different rings in one polynomial"
            );
        }
        terms.sort_unstable_by(|x, y| y.cmp(x));
        let mut out = Vec::with_capacity(terms.len());
        let mut i = 0;
        while i < terms.len() {
            let mut run = 1;
            while i + run < terms.len() && terms[i + run] == terms[i] {
                run += 1;
            }
            if run % 2 == 1 {
                out.push(terms[i]);
            }
            i += run;
        }
        SparsePoly { terms: out }
    }

    /// Terms already in strictly decreasing order.
    pub(crate) fn from_sorted(terms: Vec<M>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0] > w[1]), "terms not sorted");
        SparsePoly { terms }
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

    pub fn terms(&self) -> &[M] {
        &self.terms
    }

    /// Largest monomial, or None for the zero polynomial.
    pub fn leading_monomial(&self) -> Option<&M> {
        self.terms.first()
    }

    /// Weighted degree of the leading monomial.
    pub fn degree(&self) -> Option<u64> {
        self.leading_monomial().map(|m| m.weighted_degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self.terms.iter().all(|m| m.weighted_degree() == d),
        }
    }

    pub fn contains(&self, m: &M) -> bool {
        self.terms.binary_search_by(|x| m.cmp(x)).is_ok()
    }

    /// Symmetric-difference merge; over GF(2) this is both + and -.
    pub fn checked_add(&self, rhs: &Self) -> Self {
        if let (Some(x), Some(y)) = (self.leading_monomial(), rhs.leading_monomial()) {
            assert!(x.compatible(y), "adding polynomials from different rings");
        }
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            match self.terms[i].cmp(&rhs.terms[j]) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i]);
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(rhs.terms[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        SparsePoly { terms: out }
    }

    /// Multiply by a monomial. Order is preserved, so no re-sort is needed.
    pub fn checked_mul_monomial(&self, m: &M) -> Result<Self, Error> {
        let mut out = Vec::with_capacity(self.terms.len());
        for term in &self.terms {
            out.push(term.checked_mul(m)?);
        }
        Ok(SparsePoly { terms: out })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, Error> {
        let mut products = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for x in &self.terms {
            for y in &rhs.terms {
                products.push(x.checked_mul(y)?);
            }
        }
        Ok(SparsePoly::from_terms(products))
    }
}

impl Polynomial {
    pub fn one() -> Self {
        SparsePoly::from_monomial(Monomial::ONE)
    }

    /// View in the extended ring with a-exponent 0.
    pub fn lift(&self, t: u32) -> ExtPolynomial {
        SparsePoly::from_sorted(
            self.terms
                .iter()
                .map(|m| ExtMonomial::new(t, 0, m.b, m.c))
                .collect(),
        )
    }

    /// Parse the canonical grammar: `0`, or terms joined by `+`, each term a
    /// `*`-product of `1`, `w2[^k]`, `w3[^k]`. Whitespace is ignored; term
    /// order is free and duplicate terms cancel in pairs.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let triples = parse_triples(text, None)?;
        Ok(SparsePoly::from_terms(
            triples
                .into_iter()
                .map(|(_, b, c)| Monomial::new(b, c))
                .collect(),
        ))
    }
}

impl ExtPolynomial {
    pub fn one(t: u32) -> Self {
        SparsePoly::from_monomial(ExtMonomial::one(t))
    }

    /// Parse the extended grammar, which adds the factor `a[^k]`, into the
    /// ring with tower parameter `t`.
    pub fn parse(text: &str, t: u32) -> Result<Self, Error> {
        let triples = parse_triples(text, Some(t))?;
        Ok(SparsePoly::from_terms(
            triples
                .into_iter()
                .map(|(r, b, c)| ExtMonomial::new(t, r, b, c))
                .collect(),
        ))
    }

    /// The terms with a-exponent 0, as a plain polynomial.
    pub fn w_part(&self) -> Polynomial {
        SparsePoly::from_sorted(
            self.terms
                .iter()
                .filter(|m| m.r == 0)
                .map(|m| m.w_monomial())
                .collect(),
        )
    }

    /// The w-cofactor of the terms with a-exponent exactly 1.
    pub fn a_part(&self) -> Polynomial {
        SparsePoly::from_sorted(
            self.terms
                .iter()
                .filter(|m| m.r == 1)
                .map(|m| m.w_monomial())
                .collect(),
        )
    }
}

impl<M: GradedMonomial> fmt::Display for SparsePoly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl<M: GradedMonomial> Add for &SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn add(self, rhs: Self) -> SparsePoly<M> {
        self.checked_add(rhs)
    }
}

impl<M: GradedMonomial> Mul for &SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn mul(self, rhs: Self) -> SparsePoly<M> {
        self.checked_mul(rhs).expect("exponent overflow in product")
    }
}

impl<M: GradedMonomial> Mul<M> for &SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn mul(self, rhs: M) -> SparsePoly<M> {
        self.checked_mul_monomial(&rhs)
            .expect("exponent overflow in product")
    }
}

// ---- parsing ----

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn integer(&mut self) -> Result<u64, Error> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.bytes.get(self.pos).copied() {
            if !d.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(d - b'0')))
                .ok_or_else(|| Error::Parse {
                    position: start,
                    message: "exponent out of range".into(),
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        if value > MAX_EXPONENT {
            return Err(Error::Parse {
                position: start,
                message: "exponent out of range".into(),
            });
        }
        Ok(value)
    }
}

/// Parse into (r, b, c) exponent triples, one per term. `allow_a` carries the
/// tower parameter when the factor `a` is admissible.
fn parse_triples(text: &str, allow_a: Option<u32>) -> Result<Vec<(u64, u64, u64)>, Error> {
    let mut lx = Lexer::new(text);
    if lx.peek() == Some(b'0') {
        lx.bump();
        if lx.peek().is_some() {
            return Err(lx.err("unexpected input after the zero polynomial"));
        }
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    loop {
        terms.push(parse_term(&mut lx, allow_a)?);
        match lx.peek() {
            None => break,
            Some(b'+') => {
                lx.bump();
            }
            Some(ch) => return Err(lx.err(format!("unexpected character '{}'", ch as char))),
        }
    }
    Ok(terms)
}

fn parse_term(lx: &mut Lexer<'_>, allow_a: Option<u32>) -> Result<(u64, u64, u64), Error> {
    let (mut r, mut b, mut c) = (0u64, 0u64, 0u64);
    loop {
        let (var, exp) = parse_factor(lx, allow_a)?;
        let slot = match var {
            b'a' => &mut r,
            b'2' => &mut b,
            b'3' => &mut c,
            _ => unreachable!(),
        };
        *slot = slot
            .checked_add(exp)
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| lx.err("exponent out of range"))?;
        match lx.peek() {
            Some(b'*') => {
                lx.bump();
            }
            _ => break,
        }
    }
    Ok((r, b, c))
}

/// One factor: `1`, `a[^k]`, `w2[^k]`, or `w3[^k]`. Returns a variable tag
/// (b'a', b'2', b'3') and the exponent; the factor `1` reports exponent 0.
fn parse_factor(lx: &mut Lexer<'_>, allow_a: Option<u32>) -> Result<(u8, u64), Error> {
    match lx.peek() {
        Some(b'1') => {
            lx.bump();
            Ok((b'2', 0))
        }
        Some(b'a') => {
            if allow_a.is_none() {
                return Err(lx.err("variable 'a' is not valid here"));
            }
            lx.bump();
            Ok((b'a', parse_exponent(lx)?))
        }
        Some(b'w') => {
            lx.bump();
            let var = match lx.bytes.get(lx.pos).copied() {
                Some(b'2') => b'2',
                Some(b'3') => b'3',
                _ => return Err(lx.err("expected 'w2' or 'w3'")),
            };
            lx.pos += 1;
            Ok((var, parse_exponent(lx)?))
        }
        Some(ch) => Err(lx.err(format!("unexpected character '{}'", ch as char))),
        None => Err(lx.err("unexpected end of input")),
    }
}

fn parse_exponent(lx: &mut Lexer<'_>) -> Result<u64, Error> {
    if lx.peek() == Some(b'^') {
        lx.bump();
        lx.integer()
    } else {
        Ok(1)
    }
}
