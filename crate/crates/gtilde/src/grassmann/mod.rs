//! The mod-2 cohomology of the oriented Grassmannian of 3-planes in a
//! 2^t-dimensional real vector space: its presentation by a reduced Groebner
//! basis, the additive basis of standard monomials, Betti numbers, ring
//! arithmetic in the quotient, and verification suites that recompute each
//! structural claim from the definitions.

mod basis;
mod generators;
mod verify;

pub use basis::{
    additive_basis, basis_in_degree, betti_table, in_basis, AdditiveBasis, BettiTable, CohClass,
    CohRing, ENUMERATION_LIMIT,
};
pub use generators::{
    claimed_gb, extended_gb, f_poly, g_poly, lm_f_closed_form, wbar, GeneralPoly, WBAR_MAX_DEGREE,
    WBAR_MAX_RANK,
};
pub use verify::{
    check_lower_bound_lemma, verify_bounds, verify_reduced_gb, verify_spoly_identities,
    BoundsReport,
};

use crate::error::Error;

/// Largest tower exponent accepted by default. Degrees grow like 2^t, so
/// this keeps every computation comfortably inside `u64` and inside the
/// global exponent cap.
pub const DEFAULT_TOWER_CAP: u32 = 20;

/// One manifold in the tower: 3-planes in 2^t-space, for t >= 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TowerConfig {
    t: u32,
}

impl TowerConfig {
    pub fn new(t: u32) -> Result<Self, Error> {
        Self::with_cap(t, DEFAULT_TOWER_CAP)
    }

    /// Like [`TowerConfig::new`] with an explicit upper bound on `t`. The
    /// bound may not exceed the structural limit imposed by the exponent cap.
    pub fn with_cap(t: u32, cap: u32) -> Result<Self, Error> {
        let cap = cap.min(crate::gf2::MAX_TOWER);
        if t < 2 || t > cap {
            return Err(Error::InvalidTower { t, cap });
        }
        Ok(TowerConfig { t })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Dimension of the ambient space, 2^t.
    pub fn n(&self) -> u64 {
        1 << self.t
    }

    /// Dimension of the manifold itself: 3(2^t - 3).
    pub fn manifold_dim(&self) -> u64 {
        3 * (self.n() - 3)
    }

    /// Degree of the exotic generator: 2^t - 1.
    pub fn a_degree(&self) -> u64 {
        self.n() - 1
    }

    /// Total dimension of the cohomology: (2^t - 1)(2^t - 2)/3.
    pub fn basis_size(&self) -> u64 {
        (self.n() - 1) * (self.n() - 2) / 3
    }
}
