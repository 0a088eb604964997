//! Recomputation of the structural claims from first principles: the reduced
//! Groebner basis from the raw ideal generators, the S-polynomial identities
//! with their leading-monomial bounds, the degree bounds on both families of
//! basis elements, and the parity lemma behind the leading-term formula.

use super::basis::{basis_in_degree, CohRing};
use super::generators::{claimed_gb, f_poly, g_poly};
use super::TowerConfig;
use crate::error::Error;
use crate::gf2::{binom_mod2, GradedMonomial, Monomial, Polynomial};
use crate::groebner::{buchberger, reduce_gb, s_polynomial, BasisSet, Budget};

/// f_i extended by the convention f_t = 0, which the generator formula
/// delivers on its own: the defining sum for index t has no odd terms.
fn f_ext(cfg: TowerConfig, i: u32) -> Result<Polynomial, Error> {
    if i == cfg.t() {
        let p = g_poly(2 * cfg.n() - 3);
        if !p.is_zero() {
            return Err(Error::verification(
                "spoly-identities",
                format!("expected the index-{i} generator to vanish, got {p}"),
            ));
        }
        Ok(p)
    } else {
        f_poly(cfg, i)
    }
}

/// Recomputes the reduced Groebner basis from the two lowest ideal
/// generators with the generic engine and compares it, member by member,
/// against the closed-form family; also asserts reducedness directly.
pub fn verify_reduced_gb(cfg: TowerConfig, budget: Budget) -> Result<(), Error> {
    let generators = BasisSet::new(vec![g_poly(cfg.n() - 2), g_poly(cfg.n() - 1)])
        .expect("ideal generators are nonzero");
    let computed = reduce_gb(&buchberger(&generators, budget)?)?;
    let claimed = claimed_gb(cfg);
    if computed.polys() != claimed.polys() {
        let diff: Vec<String> = computed
            .polys()
            .iter()
            .filter(|p| !claimed.polys().contains(p))
            .chain(
                claimed
                    .polys()
                    .iter()
                    .filter(|p| !computed.polys().contains(p)),
            )
            .map(|p| p.to_string())
            .collect();
        return Err(Error::verification(
            "reduced-gb",
            format!(
                "t={} engine and closed form disagree: {}",
                cfg.t(),
                diff.join("; ")
            ),
        ));
    }
    // reducedness, checked on the claimed family itself: no monomial of any
    // member lies in the monomial ideal of the other leading terms
    for (i, p) in claimed.polys().iter().enumerate() {
        for (j, lm) in claimed.lms().iter().enumerate() {
            if i == j {
                continue;
            }
            if let Some(m) = p.terms().iter().find(|m| lm.divides(m)) {
                return Err(Error::verification(
                    "reduced-gb",
                    format!(
                        "t={} member {i} has monomial {m} divisible by lead {j}",
                        cfg.t()
                    ),
                ));
            }
        }
    }
    Ok(())
}

/// Checks the closed-form S-polynomial identities for every index pair, and
/// the leading-monomial bound that makes them a certificate: each nonzero
/// summand stays strictly below w2^(2^(t-1) - 2^i - 1), itself strictly
/// below the pair's lcm. Returns the number of identity instances checked.
pub fn verify_spoly_identities(cfg: TowerConfig) -> Result<u64, Error> {
    let t = cfg.t();
    let f: Vec<Polynomial> = (0..=t).map(|i| f_ext(cfg, i)).collect::<Result<_, _>>()?;
    let mut checked = 0u64;

    let fail = |name: &str, detail: String| Err(Error::verification(name, detail));

    // S(f_i, f_i) = 0
    for i in 0..t {
        if !s_polynomial(&f[i as usize], &f[i as usize])?.is_zero() {
            return fail("spoly-identities", format!("t={t} S(f_{i}, f_{i}) != 0"));
        }
        checked += 1;
    }

    // three-term recurrence: w3^(2^i) f_i + w2^(2^i) f_(i+1) = f_(i+2)
    for i in 0..=t.saturating_sub(2) {
        let pow = 1u64 << i;
        let lhs = &(&f[i as usize] * Monomial::new(0, pow))
            + &(&f[i as usize + 1] * Monomial::new(pow, 0));
        if lhs != f[i as usize + 2] {
            return fail(
                "spoly-identities",
                format!("t={t} recurrence fails at i={i}: {lhs}"),
            );
        }
        checked += 1;
    }

    for i in 0..t {
        for j in i + 1..t {
            let s = s_polynomial(&f[i as usize], &f[j as usize])?;

            // expansion over the higher members
            let mut rhs = Polynomial::zero();
            for k in i + 2..=j + 1 {
                let cofactor = Monomial::new(
                    (1u64 << (k - 2)) - (1u64 << i),
                    (1u64 << j) - (1u64 << (k - 1)),
                );
                rhs = &rhs + &(&f[k as usize] * cofactor);
            }
            if s != rhs {
                return fail(
                    "spoly-identities",
                    format!("t={t} expansion fails at (i,j)=({i},{j})"),
                );
            }
            checked += 1;

            // degree certificate: summands < m < lcm of the pair's leads
            let m = Monomial::new((cfg.n() / 2) - (1u64 << i) - 1, 0);
            let lcm = f[i as usize]
                .leading_monomial()
                .unwrap()
                .lcm(f[j as usize].leading_monomial().unwrap());
            if m >= lcm {
                return fail(
                    "spoly-identities",
                    format!("t={t} bound monomial {m} not below lcm {lcm} at ({i},{j})"),
                );
            }
            for k in i + 2..=j + 1 {
                let cofactor = Monomial::new(
                    (1u64 << (k - 2)) - (1u64 << i),
                    (1u64 << j) - (1u64 << (k - 1)),
                );
                let summand = &f[k as usize] * cofactor;
                if let Some(lm) = summand.leading_monomial() {
                    if *lm >= m {
                        return fail(
                            "spoly-identities",
                            format!("t={t} summand k={k} of ({i},{j}) has lead {lm} not below {m}"),
                        );
                    }
                }
                checked += 1;
            }

            // one-step recurrence between adjacent expansions
            if j <= t - 2 {
                let pow = 1u64 << j;
                let lhs = s_polynomial(&f[i as usize], &f[j as usize + 1])?;
                let rhs = &(&s * Monomial::new(0, pow))
                    + &(&f[j as usize + 2] * Monomial::new(pow - (1u64 << i), 0));
                if lhs != rhs {
                    return fail(
                        "spoly-identities",
                        format!("t={t} adjacent-pair recurrence fails at ({i},{j})"),
                    );
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Structural degree bounds read off the enumerated basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub t: u32,
    /// Smallest degree carrying an exotic-generator multiple: 2^t - 1.
    pub min_a_degree: u64,
    /// Largest degree with a basis monomial free of the exotic generator:
    /// 2^(t+1) - 8 (degree 0 for the smallest tower).
    pub max_w_degree: u64,
    /// The unique monomial attaining that degree.
    pub max_w_witness: Monomial,
    /// Largest e with w3^e nonzero in the quotient: 2^(t-1) - 2.
    pub w3_height: u64,
}

/// Scans the whole basis once and pins the degree bounds: where the exotic
/// family starts, where the ordinary family ends (with its witness), and the
/// height of w3 confirmed by normal forms in both directions.
pub fn verify_bounds(cfg: TowerConfig) -> Result<BoundsReport, Error> {
    let t = cfg.t();
    let mut min_a_degree = None;
    let mut max_w: Option<(u64, Monomial)> = None;
    for d in 0..=cfg.manifold_dim() {
        for m in basis_in_degree(cfg, d) {
            if m.r == 1 && min_a_degree.is_none() {
                min_a_degree = Some(d);
            }
            if m.r == 0 {
                max_w = Some((d, m.w_monomial()));
            }
        }
    }
    let min_a_degree = min_a_degree.ok_or_else(|| {
        Error::verification("bounds", format!("t={t} basis carries no exotic part"))
    })?;
    let (max_w_degree, max_w_witness) =
        max_w.ok_or_else(|| Error::verification("bounds", format!("t={t} basis is empty")))?;

    if min_a_degree != cfg.a_degree() {
        return Err(Error::verification(
            "bounds",
            format!(
                "t={t} exotic family starts at degree {min_a_degree}, expected {}",
                cfg.a_degree()
            ),
        ));
    }
    // for the smallest tower these degenerate to degree 0 and the unit
    let expected_max = 2 * cfg.n() - 8;
    if max_w_degree != expected_max {
        return Err(Error::verification(
            "bounds",
            format!("t={t} ordinary family tops out at {max_w_degree}, expected {expected_max}"),
        ));
    }
    let expected_witness = Monomial::new(cfg.n() / 4 - 1, cfg.n() / 2 - 2);
    if max_w_witness != expected_witness {
        return Err(Error::verification(
            "bounds",
            format!("t={t} top ordinary monomial is {max_w_witness}, expected {expected_witness}"),
        ));
    }

    // height of w3, confirmed by reduction both at and just past the top
    let ring = CohRing::new(cfg);
    let height = cfg.n() / 2 - 2;
    let w3_power = |e: u64| {
        ring.class(&crate::gf2::ExtPolynomial::from_monomial(
            crate::gf2::ExtMonomial::new(t, 0, 0, e),
        ))
    };
    if w3_power(height).is_zero() {
        return Err(Error::verification(
            "bounds",
            format!("t={t} w3^{height} vanishes below the claimed height"),
        ));
    }
    if !w3_power(height + 1).is_zero() {
        return Err(Error::verification(
            "bounds",
            format!("t={t} w3^{} survives past the claimed height", height + 1),
        ));
    }

    Ok(BoundsReport {
        t,
        min_a_degree,
        max_w_degree,
        max_w_witness,
        w3_height: height,
    })
}

/// Exhaustive check of the parity lemma behind the leading-term formula:
/// whenever 2b + 3c = 2^i s - 3 with s >= 1 and binomial(b+c, c) odd, the
/// w3-exponent obeys c >= 2^i - 1. Returns the number of triples examined.
pub fn check_lower_bound_lemma(i: u32, s_max: u64) -> Result<u64, Error> {
    if i > 12 {
        return Err(Error::InvalidArgument(format!(
            "exponent {i} out of range, the scan supports i <= 12"
        )));
    }
    if s_max == 0 || s_max > 4096 {
        return Err(Error::InvalidArgument(format!(
            "scan width must be between 1 and 4096, got {s_max}"
        )));
    }
    let bound = (1u64 << i) - 1;
    let mut cases = 0u64;
    for s in 1..=s_max {
        let Some(target) = ((1u64 << i) * s).checked_sub(3) else {
            continue;
        };
        let mut c = target % 2;
        while 3 * c <= target {
            let b = (target - 3 * c) / 2;
            cases += 1;
            if binom_mod2(b + c, c) && c < bound {
                return Err(Error::verification(
                    "lower-bound-lemma",
                    format!("i={i} s={s}: odd coefficient at b={b} c={c} below {bound}"),
                ));
            }
            c += 2;
        }
    }
    Ok(cases)
}
