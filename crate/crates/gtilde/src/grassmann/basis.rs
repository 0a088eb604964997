//! The additive structure of the cohomology: membership test for the
//! monomial basis, per-degree enumeration, Betti numbers, and ring
//! arithmetic in the quotient presentation.

use super::generators::extended_gb;
use super::TowerConfig;
use crate::error::Error;
use crate::gf2::{ExtMonomial, ExtPolynomial};
use crate::groebner::{reduce, BasisSet};

/// Largest total basis size [`additive_basis`] is willing to materialize.
pub const ENUMERATION_LIMIT: u64 = 1 << 24;

/// Membership of a monomial a^r w2^b w3^c in the monomial basis of the
/// cohomology: r < 2, and for every i < t either b < 2^(t-1) - 2^i or
/// c < 2^i - 1. The two conditions say exactly that no leading monomial of
/// the defining Groebner basis divides the candidate.
pub fn in_basis(cfg: TowerConfig, m: &ExtMonomial) -> bool {
    debug_assert_eq!(m.t, cfg.t(), "monomial from another tower");
    if m.r >= 2 {
        return false;
    }
    let half = cfg.n() / 2;
    (0..cfg.t()).all(|i| {
        let pow = 1u64 << i;
        m.b + pow < half || m.c + 1 < pow
    })
}

/// For a fixed w3-exponent c, the largest admissible w2-exponent is
/// 2^(t-1) - 2^kappa - 1 where 2^kappa is the largest power of two
/// at most c + 1.
fn b_max(cfg: TowerConfig, c: u64) -> Option<u64> {
    if c > cfg.n() / 2 - 2 {
        return None;
    }
    let kappa_pow = {
        let mut p = 1u64;
        while p * 2 <= c + 1 {
            p *= 2;
        }
        p
    };
    Some(cfg.n() / 2 - kappa_pow - 1)
}

/// All basis monomials of the given weighted degree, in decreasing order.
pub fn basis_in_degree(cfg: TowerConfig, degree: u64) -> Vec<ExtMonomial> {
    let mut out = Vec::new();
    for r in (0..=1u64).rev() {
        let Some(residual) = degree.checked_sub(r * cfg.a_degree()) else {
            continue;
        };
        // 2b + 3c = residual forces c to share the parity of the residual;
        // walking c upward walks b downward, which is decreasing order.
        let mut c = residual % 2;
        while 3 * c <= residual {
            let b = (residual - 3 * c) / 2;
            let m = ExtMonomial::new(cfg.t(), r, b, c);
            debug_assert_eq!(
                in_basis(cfg, &m),
                b_max(cfg, c).is_some_and(|bm| b <= bm),
                "membership criterion and interval form disagree on {m}"
            );
            if in_basis(cfg, &m) {
                out.push(m);
            }
            c += 2;
        }
    }
    out
}

/// The full monomial basis, grouped by degree 0..=dim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveBasis {
    cfg: TowerConfig,
    degrees: Vec<Vec<ExtMonomial>>,
}

impl AdditiveBasis {
    pub fn cfg(&self) -> TowerConfig {
        self.cfg
    }

    pub fn degrees(&self) -> &[Vec<ExtMonomial>] {
        &self.degrees
    }

    pub fn dim(&self, degree: u64) -> usize {
        self.degrees
            .get(degree as usize)
            .map_or(0, |slice| slice.len())
    }

    pub fn total(&self) -> u64 {
        self.degrees.iter().map(|slice| slice.len() as u64).sum()
    }
}

/// Materializes the whole basis. Refused when the total size exceeds
/// [`ENUMERATION_LIMIT`]; Betti numbers stay available far beyond that.
pub fn additive_basis(cfg: TowerConfig) -> Result<AdditiveBasis, Error> {
    let size = cfg.basis_size();
    if size > ENUMERATION_LIMIT {
        return Err(Error::EnumerationTooLarge {
            size,
            limit: ENUMERATION_LIMIT,
        });
    }
    let degrees = (0..=cfg.manifold_dim())
        .map(|d| basis_in_degree(cfg, d))
        .collect();
    Ok(AdditiveBasis { cfg, degrees })
}

/// Betti numbers indexed by degree 0..=dim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    cfg: TowerConfig,
    dims: Vec<u64>,
}

impl BettiTable {
    pub fn cfg(&self) -> TowerConfig {
        self.cfg
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn dim(&self, degree: u64) -> u64 {
        self.dims.get(degree as usize).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.dims.iter().sum()
    }

    /// Dimensions read the same from both ends, as they must for a closed
    /// orientable manifold.
    pub fn is_symmetric(&self) -> bool {
        let n = self.dims.len();
        (0..n).all(|j| self.dims[j] == self.dims[n - 1 - j])
    }
}

/// Lattice points with fixed parity in [lo, hi].
fn count_with_parity(lo: u64, hi: u64, parity: u64) -> u64 {
    if lo > hi {
        return 0;
    }
    let lo = lo + (lo % 2 != parity % 2) as u64;
    if lo > hi {
        0
    } else {
        (hi - lo) / 2 + 1
    }
}

/// Betti numbers by counting alone. The admissible (b, c) region is a union
/// of rectangles, one per power of two, so each degree slice is counted by
/// interval arithmetic rather than by enumerating monomials; this is the
/// path that keeps large towers cheap, and it cross-checks the enumeration.
pub fn betti_table(cfg: TowerConfig) -> BettiTable {
    let half = cfg.n() / 2;
    let manifold_dim = cfg.manifold_dim();
    let mut dims = vec![0u64; manifold_dim as usize + 1];
    for (degree, slot) in dims.iter_mut().enumerate() {
        let degree = degree as u64;
        let mut count = 0;
        for r in 0..=1u64 {
            let Some(residual) = degree.checked_sub(r * cfg.a_degree()) else {
                continue;
            };
            // rectangle for kappa = k: c in [2^k - 1, 2^(k+1) - 2],
            // b in [0, half - 2^k - 1]
            for k in 0..cfg.t().saturating_sub(1) {
                let pow = 1u64 << k;
                let c_lo = pow - 1;
                let c_hi = 2 * pow - 2;
                let b_hi = half - pow - 1;
                // 2b + 3c = residual with 0 <= b <= b_hi pins c to an interval
                if residual < 3 * c_lo {
                    continue;
                }
                let c_from_b = residual.saturating_sub(2 * b_hi);
                let lo = c_lo.max(c_from_b.div_ceil(3));
                let hi = c_hi.min(residual / 3);
                count += count_with_parity(lo, hi, residual % 2);
            }
        }
        *slot = count;
    }
    BettiTable { cfg, dims }
}

/// A cohomology class, stored as the normal form of a representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohClass {
    t: u32,
    value: ExtPolynomial,
}

impl CohClass {
    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn value(&self) -> &ExtPolynomial {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl std::fmt::Display for CohClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.value.fmt(f)
    }
}

/// Ring arithmetic in the quotient: every result is reduced to its normal
/// form against the defining Groebner basis, so classes compare by equality.
#[derive(Debug, Clone)]
pub struct CohRing {
    cfg: TowerConfig,
    gb: BasisSet<ExtMonomial>,
}

impl CohRing {
    pub fn new(cfg: TowerConfig) -> Self {
        CohRing {
            cfg,
            gb: extended_gb(cfg),
        }
    }

    pub fn cfg(&self) -> TowerConfig {
        self.cfg
    }

    pub fn gb(&self) -> &BasisSet<ExtMonomial> {
        &self.gb
    }

    pub fn class(&self, p: &ExtPolynomial) -> CohClass {
        CohClass {
            t: self.cfg.t(),
            value: reduce(p, &self.gb),
        }
    }

    pub fn parse(&self, text: &str) -> Result<CohClass, Error> {
        Ok(self.class(&ExtPolynomial::parse(text, self.cfg.t())?))
    }

    fn check_tower(&self, x: &CohClass) -> Result<(), Error> {
        if x.t != self.cfg.t() {
            return Err(Error::TowerMismatch {
                left: self.cfg.t(),
                right: x.t,
            });
        }
        Ok(())
    }

    pub fn add(&self, x: &CohClass, y: &CohClass) -> Result<CohClass, Error> {
        self.check_tower(x)?;
        self.check_tower(y)?;
        // normal forms are closed under addition
        Ok(CohClass {
            t: x.t,
            value: &x.value + &y.value,
        })
    }

    pub fn mul(&self, x: &CohClass, y: &CohClass) -> Result<CohClass, Error> {
        self.check_tower(x)?;
        self.check_tower(y)?;
        Ok(self.class(&x.value.checked_mul(&y.value)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::claimed_gb;
    use crate::groebner::standard_monomials;

    fn cfg(t: u32) -> TowerConfig {
        TowerConfig::new(t).unwrap()
    }

    fn names(ms: &[ExtMonomial]) -> Vec<String> {
        ms.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn smallest_tower_has_two_classes() {
        let basis = additive_basis(cfg(2)).unwrap();
        assert_eq!(basis.total(), 2);
        assert_eq!(names(&basis.degrees()[0]), vec!["1"]);
        assert_eq!(names(&basis.degrees()[3]), vec!["a"]);
        assert_eq!(basis.dim(1), 0);
        assert_eq!(basis.dim(2), 0);
    }

    #[test]
    fn t3_basis_in_full() {
        let basis = additive_basis(cfg(3)).unwrap();
        assert_eq!(basis.total(), 14);
        assert_eq!(basis.total(), cfg(3).basis_size());
        let flat: Vec<String> = basis
            .degrees()
            .iter()
            .flatten()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(
            flat,
            vec![
                "1",
                "w2",
                "w3",
                "w2^2",
                "w2*w3",
                "w3^2",
                "a",
                "w2*w3^2",
                "a*w2",
                "a*w3",
                "a*w2^2",
                "a*w2*w3",
                "a*w3^2",
                "a*w2*w3^2",
            ]
        );
        // one degree is empty strictly inside the range
        assert_eq!(basis.dim(14), 0);
        assert_eq!(basis.dim(15), 1);
    }

    #[test]
    fn basis_against_standard_monomials() {
        // the arithmetic criterion against monomial-ideal divisibility
        for t in 2..=6 {
            let cfg = cfg(t);
            let gb = extended_gb(cfg);
            for d in 0..=cfg.manifold_dim() {
                assert_eq!(
                    basis_in_degree(cfg, d),
                    standard_monomials(&gb, d),
                    "t={t} degree={d}"
                );
            }
        }
    }

    #[test]
    fn unoriented_standard_monomials_count_differently() {
        // sanity for the ambient ring: the plain (non-extended) basis counts
        // standard monomials of the w-only ideal
        for t in 2..=6u32 {
            let cfg = cfg(t);
            let gb = claimed_gb(cfg);
            let total: u64 = (0..=3 * (cfg.n() - 3))
                .map(|d| standard_monomials(&gb, d).len() as u64)
                .sum();
            // the oriented total is exactly twice the w-only total
            assert_eq!(2 * total, cfg.basis_size());
        }
    }

    #[test]
    fn betti_agrees_with_enumeration() {
        for t in 2..=8 {
            let cfg = cfg(t);
            let betti = betti_table(cfg);
            let basis = additive_basis(cfg).unwrap();
            assert_eq!(betti.dims().len() as u64, cfg.manifold_dim() + 1);
            for d in 0..=cfg.manifold_dim() {
                assert_eq!(betti.dim(d), basis.dim(d) as u64, "t={t} degree={d}");
            }
        }
    }

    #[test]
    fn betti_invariants() {
        for t in 2..=10 {
            let betti = betti_table(cfg(t));
            assert!(betti.is_symmetric(), "t={t}");
            assert_eq!(betti.total(), cfg(t).basis_size(), "t={t}");
            assert_eq!(betti.dim(0), 1, "t={t}");
            assert_eq!(betti.dim(cfg(t).manifold_dim()), 1, "t={t}");
        }
    }

    #[test]
    fn betti_spot_values() {
        let b3 = betti_table(cfg(3));
        for (d, expected) in [(7, 1), (8, 1), (9, 1), (13, 1), (14, 0), (15, 1)] {
            assert_eq!(b3.dim(d), expected, "t=3 degree={d}");
        }
        let b4 = betti_table(cfg(4));
        for (d, expected) in [
            (15, 3),
            (16, 2),
            (17, 2),
            (30, 2),
            (31, 2),
            (32, 1),
            (37, 1),
            (38, 0),
            (39, 1),
        ] {
            assert_eq!(b4.dim(d), expected, "t=4 degree={d}");
        }
    }

    #[test]
    fn enumeration_limit_is_enforced() {
        assert!(matches!(
            additive_basis(cfg(13)),
            Err(Error::EnumerationTooLarge { .. })
        ));
        assert!(additive_basis(cfg(12)).is_ok());
    }

    #[test]
    fn fundamental_class_is_the_unique_top_monomial() {
        for t in 2..=9 {
            let cfg = cfg(t);
            let top = basis_in_degree(cfg, cfg.manifold_dim());
            assert_eq!(top.len(), 1, "t={t}");
            let m = top[0];
            assert_eq!(m.r, 1);
            assert_eq!(m.b, cfg.n() / 4 - 1);
            assert_eq!(m.c, cfg.n() / 2 - 2);
        }
    }

    #[test]
    fn ring_arithmetic_in_t3() {
        let ring = CohRing::new(cfg(3));
        let w2 = ring.parse("w2").unwrap();
        let w2sq = ring.parse("w2^2").unwrap();
        let cubed = ring.mul(&w2, &w2sq).unwrap();
        // w2^3 rewrites to w3^2
        assert_eq!(cubed.to_string(), "w3^2");
        let a = ring.parse("a").unwrap();
        assert!(ring.mul(&a, &a).unwrap().is_zero());
        // (w2*w3^2) * w3 lands in the ideal
        let x = ring.parse("w2*w3^2").unwrap();
        let w3 = ring.parse("w3").unwrap();
        assert!(ring.mul(&x, &w3).unwrap().is_zero());
        let sum = ring.add(&cubed, &cubed).unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn ring_laws_on_basis_classes() {
        let cfg = cfg(4);
        let ring = CohRing::new(cfg);
        let basis = additive_basis(cfg).unwrap();
        let classes: Vec<CohClass> = basis
            .degrees()
            .iter()
            .flatten()
            .step_by(7)
            .map(|m| ring.class(&ExtPolynomial::from_monomial(*m)))
            .collect();
        for x in &classes {
            for y in &classes {
                let xy = ring.mul(x, y).unwrap();
                assert_eq!(xy, ring.mul(y, x).unwrap());
                // Frobenius: squaring is additive in characteristic 2
                let sum = ring.add(x, y).unwrap();
                let lhs = ring.mul(&sum, &sum).unwrap();
                let rhs = ring
                    .add(&ring.mul(x, x).unwrap(), &ring.mul(y, y).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
                for z in &classes {
                    let left = ring.mul(&xy, z).unwrap();
                    let right = ring.mul(x, &ring.mul(y, z).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn ring_rejects_mixed_towers() {
        let r3 = CohRing::new(cfg(3));
        let r4 = CohRing::new(cfg(4));
        let x = r3.parse("w2").unwrap();
        let y = r4.parse("w2").unwrap();
        assert!(matches!(r3.add(&x, &y), Err(Error::TowerMismatch { .. })));
        assert!(matches!(r3.mul(&x, &y), Err(Error::TowerMismatch { .. })));
    }

    #[test]
    fn products_of_basis_classes_stay_in_the_basis_span() {
        // closure: a product of normal forms is a sum of basis monomials
        let c = cfg(4);
        let ring = CohRing::new(c);
        let basis = additive_basis(c).unwrap();
        let flat: Vec<ExtMonomial> = basis.degrees().iter().flatten().copied().collect();
        for (i, x) in flat.iter().enumerate() {
            for y in flat.iter().skip(i) {
                let product = ring
                    .mul(
                        &ring.class(&ExtPolynomial::from_monomial(*x)),
                        &ring.class(&ExtPolynomial::from_monomial(*y)),
                    )
                    .unwrap();
                for m in product.value().terms() {
                    assert!(in_basis(c, m), "{x} * {y} left stray monomial {m}");
                }
            }
        }
    }
}
