//! Polynomial generators of the defining ideals: the degree components g_r of
//! the inverse total Stiefel-Whitney class in the 3-plane case, the selected
//! members f_i that form the reduced Groebner basis, and the general-k dual
//! classes for cross-checking.

use std::collections::BTreeSet;
use std::fmt;

use super::TowerConfig;
use crate::error::Error;
use crate::gf2::{binom_mod2, ExtMonomial, ExtPolynomial, Monomial, Polynomial};
use crate::groebner::BasisSet;

/// g_r, the degree-r component of the inverse of 1 + w2 + w3: the sum of
/// w2^b w3^c over 2b + 3c = r with odd binomial(b + c, b).
pub fn g_poly(r: u64) -> Polynomial {
    let mut terms = Vec::new();
    let mut c = 0;
    while 3 * c <= r {
        let rest = r - 3 * c;
        if rest.is_multiple_of(2) {
            let b = rest / 2;
            if binom_mod2(b + c, b) {
                terms.push(Monomial::new(b, c));
            }
        }
        c += 1;
    }
    Polynomial::from_terms(terms)
}

/// g_r computed through the recurrence g_{r+3} = w2 g_{r+1} + w3 g_r instead
/// of the closed formula; the two must agree everywhere.
#[cfg(test)]
pub(crate) fn g_poly_rec(r: u64) -> Polynomial {
    let w2 = Polynomial::parse("w2").unwrap();
    let w3 = Polynomial::parse("w3").unwrap();
    // rolling window (g_k, g_{k+1}, g_{k+2})
    let mut window = [Polynomial::one(), Polynomial::zero(), w2.clone()];
    match r {
        0 => return window[0].clone(),
        1 => return window[1].clone(),
        2 => return window[2].clone(),
        _ => {}
    }
    for _ in 3..=r {
        let next = &(&w2 * &window[1]) + &(&w3 * &window[0]);
        window = [window[1].clone(), window[2].clone(), next];
    }
    window[2].clone()
}

/// The i-th member of the reduced Groebner basis: f_i = g_{2^t - 3 + 2^i},
/// defined for 0 <= i < t.
pub fn f_poly(cfg: TowerConfig, i: u32) -> Result<Polynomial, Error> {
    if i >= cfg.t() {
        return Err(Error::GeneratorIndex {
            index: i,
            bound: cfg.t(),
        });
    }
    Ok(g_poly(cfg.n() - 3 + (1 << i)))
}

/// Leading monomial of f_i in closed form: w2^(2^(t-1) - 2^i) w3^(2^i - 1).
pub fn lm_f_closed_form(cfg: TowerConfig, i: u32) -> Result<Monomial, Error> {
    if i >= cfg.t() {
        return Err(Error::GeneratorIndex {
            index: i,
            bound: cfg.t(),
        });
    }
    let half = cfg.n() / 2;
    Ok(Monomial::new(half - (1 << i), (1 << i) - 1))
}

/// The claimed reduced Groebner basis {f_0, ..., f_{t-1}} of the ideal
/// defining the cohomology of the unoriented ambient space, in decreasing
/// order of leading monomial.
pub fn claimed_gb(cfg: TowerConfig) -> BasisSet<Monomial> {
    let polys = (0..cfg.t())
        .map(|i| f_poly(cfg, i).expect("index in range"))
        .collect();
    BasisSet::new(polys).expect("f_i are nonzero and live in one ring")
}

/// The claimed reduced Groebner basis of the full presentation: a^2 together
/// with every f_i, in the extended lexicographic order.
pub fn extended_gb(cfg: TowerConfig) -> BasisSet<ExtMonomial> {
    extended_gb_with_square_term(cfg, &Polynomial::zero())
}

/// Variant with a^2 replaced by a^2 + p*a. Used to examine how the basis
/// depends on the (ultimately zero) correction polynomial p.
pub(crate) fn extended_gb_with_square_term(
    cfg: TowerConfig,
    p: &Polynomial,
) -> BasisSet<ExtMonomial> {
    let t = cfg.t();
    let a = ExtPolynomial::parse("a", t).expect("valid generator");
    let a_squared = ExtPolynomial::parse("a^2", t).expect("valid generator");
    let square = &a_squared + &(&a * &p.lift(t));
    let mut polys = vec![square];
    polys.extend((0..t).map(|i| f_poly(cfg, i).expect("index in range").lift(t)));
    BasisSet::new(polys).expect("members are nonzero and share one tower")
}

/// A GF(2) polynomial in Stiefel-Whitney classes w1..wk of arbitrary rank k,
/// used only for the general dual classes; exponent vectors are kept in a
/// canonical ordered set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralPoly {
    k: usize,
    terms: BTreeSet<Vec<u64>>,
}

impl GeneralPoly {
    fn one(k: usize) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(vec![0; k]);
        GeneralPoly { k, terms }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &[u64]> {
        self.terms.iter().map(|v| v.as_slice())
    }

    /// Weighted degree sum(i * a_i) of every term; None when zero.
    pub fn degree(&self) -> Option<u64> {
        let degrees: BTreeSet<u64> = self
            .terms
            .iter()
            .map(|m| m.iter().enumerate().map(|(i, a)| (i as u64 + 1) * a).sum())
            .collect();
        debug_assert!(degrees.len() <= 1, "dual classes are homogeneous");
        degrees.into_iter().next()
    }
}

impl fmt::Display for GeneralPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // decreasing order, matching the rest of the crate
        for mono in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if mono.iter().all(|&a| a == 0) {
                write!(f, "1")?;
                continue;
            }
            let mut lead = true;
            for (i, &a) in mono.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if !lead {
                    write!(f, "*")?;
                }
                lead = false;
                write!(f, "w{}", i + 1)?;
                if a > 1 {
                    write!(f, "^{a}")?;
                }
            }
        }
        Ok(())
    }
}

pub const WBAR_MAX_DEGREE: u64 = 512;
pub const WBAR_MAX_RANK: usize = 8;

/// The degree-r component of the inverse of the total class 1 + w1 + .. + wk,
/// computed by the recurrence obar_r = sum_i w_i obar_{r-i}.
pub fn wbar(r: u64, k: usize) -> Result<GeneralPoly, Error> {
    if k == 0 || k > WBAR_MAX_RANK {
        return Err(Error::InvalidArgument(format!(
            "rank must be between 1 and {WBAR_MAX_RANK}, got {k}"
        )));
    }
    if r > WBAR_MAX_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "degree must be at most {WBAR_MAX_DEGREE}, got {r}"
        )));
    }
    // window[j] = obar of degree (current - k + j); seed with degree 0
    let mut window: Vec<BTreeSet<Vec<u64>>> = vec![GeneralPoly::one(k).terms];
    if r == 0 {
        return Ok(GeneralPoly {
            k,
            terms: window.pop().unwrap(),
        });
    }
    for degree in 1..=r {
        let mut acc: BTreeSet<Vec<u64>> = BTreeSet::new();
        for i in 1..=k.min(degree as usize) {
            for mono in &window[window.len() - i] {
                let mut m = mono.clone();
                m[i - 1] += 1;
                // GF(2): insert xor remove
                if !acc.insert(m.clone()) {
                    acc.remove(&m);
                }
            }
        }
        window.push(acc);
        if window.len() > k {
            window.remove(0);
        }
    }
    Ok(GeneralPoly {
        k,
        terms: window.pop().unwrap(),
    })
}
