//! Monomials of the rings Z2[w2, w3] and Z2[w2, w3, a], and the
//! lexicographic orders used on them.
//!
//! Degrees are weighted: w2 has degree 2, w3 has degree 3, and a has degree
//! 2^t - 1 where t is the tower parameter carried by the extended monomials.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use crate::error::Error;

/// Hard bound on any single exponent. Arithmetic that would push an exponent
/// past this fails with [`Error::ExponentOverflow`] instead of wrapping.
pub const MAX_EXPONENT: u64 = 1 << 40;

/// Largest tower parameter the extended monomials accept structurally.
/// The user-facing cap lives on `TowerConfig`; this one only guards shifts.
pub(crate) const MAX_TOWER: u32 = 40;

fn add_exponents(a: u64, b: u64) -> Result<u64, Error> {
    let sum = a.checked_add(b).ok_or(Error::ExponentOverflow)?;
    if sum > MAX_EXPONENT {
        return Err(Error::ExponentOverflow);
    }
    Ok(sum)
}

fn push_power(out: &mut String, var: &str, e: u64) {
    if e == 0 {
        return;
    }
    if !out.is_empty() {
        out.push('*');
    }
    out.push_str(var);
    if e > 1 {
        out.push('^');
        out.push_str(&e.to_string());
    }
}

/// The two monomial orders in play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Lexicographic with w2 > w3: compare the w2 exponent, then the w3 one.
    LexW2W3,
    /// Lexicographic with a > w2 > w3.
    LexAW2W3,
}

/// What a monomial type must offer for the generic Groebner machinery:
/// a total multiplicative well-order (the `Ord` impl), weighted degrees,
/// divisibility, and enumeration of a graded slice.
pub trait GradedMonomial: Copy + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync {
    const ORDER: MonomialOrder;

    /// The constant monomial in the same ring as `self`.
    fn one_like(&self) -> Self;

    fn is_one(&self) -> bool;

    fn weighted_degree(&self) -> u64;

    /// Whether the two monomials live in the same ring. Always true for the
    /// plain monomials; tower agreement for the extended ones.
    fn compatible(&self, other: &Self) -> bool;

    fn checked_mul(&self, rhs: &Self) -> Result<Self, Error>;

    fn divides(&self, other: &Self) -> bool;

    /// `other / self`, or None when `self` does not divide `other`.
    fn div_exact(&self, other: &Self) -> Option<Self>;

    fn lcm(&self, other: &Self) -> Self;

    /// True when the exponent supports are disjoint.
    fn coprime(&self, other: &Self) -> bool;

    /// All monomials of the given weighted degree in the ring of `self`,
    /// in decreasing order.
    fn monomials_in_degree(&self, degree: u64) -> Vec<Self>;
}

/// `w2^b * w3^c`. The derived `Ord` is lexicographic in (b, c), which is
/// exactly the order with w2 > w3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub b: u64,
    pub c: u64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { b: 0, c: 0 };

    pub fn new(b: u64, c: u64) -> Self {
        Monomial { b, c }
    }
}

/// Compare two plain monomials in the w2 > w3 lexicographic order.
pub fn cmp_lex(lhs: &Monomial, rhs: &Monomial) -> Ordering {
    lhs.cmp(rhs)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut s = String::new();
        push_power(&mut s, "w2", self.b);
        push_power(&mut s, "w3", self.c);
        f.write_str(&s)
    }
}

impl GradedMonomial for Monomial {
    const ORDER: MonomialOrder = MonomialOrder::LexW2W3;

    fn one_like(&self) -> Self {
        Monomial::ONE
    }

    fn is_one(&self) -> bool {
        self.b == 0 && self.c == 0
    }

    fn weighted_degree(&self) -> u64 {
        2 * self.b + 3 * self.c
    }

    fn compatible(&self, _other: &Self) -> bool {
        true
    }

    fn checked_mul(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(Monomial {
            b: add_exponents(self.b, rhs.b)?,
            c: add_exponents(self.c, rhs.c)?,
        })
    }

    fn divides(&self, other: &Self) -> bool {
        self.b <= other.b && self.c <= other.c
    }

    fn div_exact(&self, other: &Self) -> Option<Self> {
        if self.divides(other) {
            Some(Monomial {
                b: other.b - self.b,
                c: other.c - self.c,
            })
        } else {
            None
        }
    }

    fn lcm(&self, other: &Self) -> Self {
        Monomial {
            b: self.b.max(other.b),
            c: self.c.max(other.c),
        }
    }

    fn coprime(&self, other: &Self) -> bool {
        self.b.min(other.b) == 0 && self.c.min(other.c) == 0
    }

    fn monomials_in_degree(&self, degree: u64) -> Vec<Self> {
        let mut out = Vec::new();
        let mut b = degree / 2;
        loop {
            let rem = degree - 2 * b;
            if rem.is_multiple_of(3) {
                out.push(Monomial::new(b, rem / 3));
            }
            if b == 0 {
                break;
            }
            b -= 1;
        }
        out
    }
}

/// `a^r * w2^b * w3^c` in the ring attached to tower parameter `t`, where
/// deg(a) = 2^t - 1.
///
/// Normal forms of cohomology classes keep r < 2, but the representation
/// allows any r: the relation polynomial a^2 itself, and transient products,
/// carry r = 2.
///
/// The `Ord` impl compares (r, b, c), the lexicographic order with
/// a > w2 > w3; `t` enters only as a final tiebreak so that equality and
/// ordering stay consistent. Cross-tower comparisons are rejected by
/// [`ExtMonomial::cmp_lex`], and every arithmetic entry point checks tower
/// agreement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtMonomial {
    pub r: u64,
    pub b: u64,
    pub c: u64,
    pub t: u32,
}

impl ExtMonomial {
    pub fn new(t: u32, r: u64, b: u64, c: u64) -> Self {
        assert!(
            (2..=MAX_TOWER).contains(&t),
            "tower parameter {t} outside structural range 2..={MAX_TOWER}"
        );
        ExtMonomial { r, b, c, t }
    }

    pub fn one(t: u32) -> Self {
        ExtMonomial::new(t, 0, 0, 0)
    }

    /// Weighted degree of the variable a in this ring: 2^t - 1.
    pub fn a_degree(&self) -> u64 {
        (1u64 << self.t) - 1
    }

    /// The extended lexicographic comparison, rejecting tower mismatches.
    pub fn cmp_lex(&self, other: &Self) -> Result<Ordering, Error> {
        if self.t != other.t {
            return Err(Error::TowerMismatch {
                left: self.t,
                right: other.t,
            });
        }
        Ok(self.cmp(other))
    }

    /// Drop the a-exponent, keeping the w-part.
    pub fn w_monomial(&self) -> Monomial {
        Monomial::new(self.b, self.c)
    }
}

impl fmt::Display for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut s = String::new();
        push_power(&mut s, "a", self.r);
        push_power(&mut s, "w2", self.b);
        push_power(&mut s, "w3", self.c);
        f.write_str(&s)
    }
}

impl GradedMonomial for ExtMonomial {
    const ORDER: MonomialOrder = MonomialOrder::LexAW2W3;

    fn one_like(&self) -> Self {
        ExtMonomial::one(self.t)
    }

    fn is_one(&self) -> bool {
        self.r == 0 && self.b == 0 && self.c == 0
    }

    fn weighted_degree(&self) -> u64 {
        self.r
            .checked_mul(self.a_degree())
            .and_then(|ra| ra.checked_add(2 * self.b + 3 * self.c))
            .expect("weighted degree overflows u64")
    }

    fn compatible(&self, other: &Self) -> bool {
        self.t == other.t
    }

    fn checked_mul(&self, rhs: &Self) -> Result<Self, Error> {
        if self.t != rhs.t {
            return Err(Error::TowerMismatch {
                left: self.t,
                right: rhs.t,
            });
        }
        Ok(ExtMonomial {
            r: add_exponents(self.r, rhs.r)?,
            b: add_exponents(self.b, rhs.b)?,
            c: add_exponents(self.c, rhs.c)?,
            t: self.t,
        })
    }

    fn divides(&self, other: &Self) -> bool {
        debug_assert!(self.compatible(other), "tower mismatch in divides");
        self.r <= other.r && self.b <= other.b && self.c <= other.c
    }

    fn div_exact(&self, other: &Self) -> Option<Self> {
        if self.divides(other) {
            Some(ExtMonomial {
                r: other.r - self.r,
                b: other.b - self.b,
                c: other.c - self.c,
                t: self.t,
            })
        } else {
            None
        }
    }

    fn lcm(&self, other: &Self) -> Self {
        debug_assert!(self.compatible(other), "tower mismatch in lcm");
        ExtMonomial {
            r: self.r.max(other.r),
            b: self.b.max(other.b),
            c: self.c.max(other.c),
            t: self.t,
        }
    }

    fn coprime(&self, other: &Self) -> bool {
        self.r.min(other.r) == 0 && self.b.min(other.b) == 0 && self.c.min(other.c) == 0
    }

    fn monomials_in_degree(&self, degree: u64) -> Vec<Self> {
        let da = self.a_degree();
        let mut out = Vec::new();
        let mut r = degree / da;
        loop {
            let rem = degree - r * da;
            let mut b = rem / 2;
            loop {
                let left = rem - 2 * b;
                if left.is_multiple_of(3) {
                    out.push(ExtMonomial {
                        r,
                        b,
                        c: left / 3,
                        t: self.t,
                    });
                }
                if b == 0 {
                    break;
                }
                b -= 1;
            }
            if r == 0 {
                break;
            }
            r -= 1;
        }
        out
    }
}
