//! Buchberger's algorithm over GF(2), generic in the monomial type:
//! S-polynomials, normal forms, completion, reduced bases, a Groebner
//! certificate check, and standard monomials of graded quotients.
//!
//! Every polynomial here is monic (the only nonzero coefficient is 1), which
//! removes all coefficient arithmetic from the classical algorithms.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::Error;
use crate::gf2::{GradedMonomial, MonomialOrder, SparsePoly};

/// Resource cap for one Buchberger run, counted in single-monomial
/// reduction steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub reduction_steps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            reduction_steps: 1_000_000,
        }
    }
}

impl Budget {
    /// The default budget, overridden by the `GROEBNER_BUDGET` environment
    /// variable when it is set to a positive integer.
    pub fn from_env() -> Result<Budget, Error> {
        match std::env::var("GROEBNER_BUDGET") {
            Err(_) => Ok(Budget::default()),
            Ok(raw) => match raw.trim().parse::<u64>() {
                Ok(steps) if steps > 0 => Ok(Budget {
                    reduction_steps: steps,
                }),
                _ => Err(Error::InvalidArgument(format!(
                    "GROEBNER_BUDGET must be a positive integer, got '{raw}'"
                ))),
            },
        }
    }
}

struct StepCounter {
    used: u64,
    cap: u64,
}

impl StepCounter {
    fn new(budget: Budget) -> Self {
        StepCounter {
            used: 0,
            cap: budget.reduction_steps,
        }
    }

    fn tick(&mut self) -> Result<(), Error> {
        self.used += 1;
        if self.used > self.cap {
            Err(Error::BudgetExceeded { budget: self.cap })
        } else {
            Ok(())
        }
    }
}

/// An ordered list of nonzero polynomials with cached leading monomials.
///
/// Zero polynomials are stripped at construction; the count is kept so
/// callers can surface a warning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSet<M: GradedMonomial> {
    polys: Vec<SparsePoly<M>>,
    lms: Vec<M>,
    stripped: usize,
}

impl<M: GradedMonomial> BasisSet<M> {
    pub fn new(polys: Vec<SparsePoly<M>>) -> Result<Self, Error> {
        let stripped = polys.iter().filter(|p| p.is_zero()).count();
        let polys: Vec<_> = polys.into_iter().filter(|p| !p.is_zero()).collect();
        let lms: Vec<M> = polys
            .iter()
            .map(|p| *p.leading_monomial().expect("zero already stripped"))
            .collect();
        if let Some(first) = lms.first() {
            for m in &lms[1..] {
                if !first.compatible(m) {
                    return Err(Error::TowerMismatch { left: 0, right: 0 });
                }
            }
        }
        Ok(BasisSet {
            polys,
            lms,
            stripped,
        })
    }

    pub fn polys(&self) -> &[SparsePoly<M>] {
        &self.polys
    }

    pub fn lms(&self) -> &[M] {
        &self.lms
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// How many zero polynomials were dropped at construction.
    pub fn stripped_zeros(&self) -> usize {
        self.stripped
    }

    pub fn order(&self) -> MonomialOrder {
        M::ORDER
    }
}

/// S(p, q) = (u / lm p) p + (u / lm q) q with u = lcm(lm p, lm q).
/// The leading terms cancel by construction.
pub fn s_polynomial<M: GradedMonomial>(
    p: &SparsePoly<M>,
    q: &SparsePoly<M>,
) -> Result<SparsePoly<M>, Error> {
    let lp = p.leading_monomial().ok_or(Error::ZeroPolynomial)?;
    let lq = q.leading_monomial().ok_or(Error::ZeroPolynomial)?;
    if !lp.compatible(lq) {
        return Err(Error::TowerMismatch { left: 0, right: 0 });
    }
    let u = lp.lcm(lq);
    let left = p.checked_mul_monomial(&lp.div_exact(&u).expect("lcm divisible"))?;
    let right = q.checked_mul_monomial(&lq.div_exact(&u).expect("lcm divisible"))?;
    Ok(&left + &right)
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum ReducerChoice {
    /// First basis element in stored order whose lead divides the monomial.
    FirstDivisor,
    /// The divisor with the largest leading monomial; used by tests to show
    /// normal forms do not depend on the selection strategy.
    #[cfg_attr(not(test), allow(dead_code))]
    LargestLead,
}

fn pick_reducer<M: GradedMonomial>(lms: &[M], m: &M, choice: ReducerChoice) -> Option<usize> {
    match choice {
        ReducerChoice::FirstDivisor => lms.iter().position(|lm| lm.divides(m)),
        ReducerChoice::LargestLead => (0..lms.len())
            .filter(|&i| lms[i].divides(m))
            .max_by(|&i, &j| lms[i].cmp(&lms[j]).then(j.cmp(&i))),
    }
}

/// Full normal form: every monomial of the result is divisible by no leading
/// monomial of the basis. `top_only` stops as soon as the *leading* monomial
/// is irreducible, which is all the Buchberger loop needs.
fn reduce_inner<M: GradedMonomial>(
    p: &SparsePoly<M>,
    polys: &[SparsePoly<M>],
    lms: &[M],
    choice: ReducerChoice,
    top_only: bool,
    steps: Option<&mut StepCounter>,
) -> Result<SparsePoly<M>, Error> {
    let mut counter = steps;
    let mut done: Vec<M> = Vec::new();
    let mut work = p.clone();
    while let Some(m) = work.leading_monomial().copied() {
        match pick_reducer(lms, &m, choice) {
            Some(i) => {
                if let Some(counter) = counter.as_deref_mut() {
                    counter.tick()?;
                }
                let q = lms[i].div_exact(&m).expect("picked a divisor");
                // cancels m; everything else that enters is smaller
                work = &work + &polys[i].checked_mul_monomial(&q)?;
            }
            None => {
                if top_only {
                    done.extend_from_slice(work.terms());
                    break;
                }
                done.push(m);
                work = SparsePoly::from_sorted(work.terms()[1..].to_vec());
            }
        }
    }
    Ok(SparsePoly::from_sorted(done))
}

/// The normal form of `p` modulo `basis`: the unique remainder supported on
/// standard monomials when `basis` is a Groebner basis, and a deterministic
/// remainder otherwise (first-divisor selection, largest monomial first).
///
/// Panics on exponent overflow, which graded inputs within the supported
/// ranges cannot trigger.
pub fn reduce<M: GradedMonomial>(p: &SparsePoly<M>, basis: &BasisSet<M>) -> SparsePoly<M> {
    reduce_inner(
        p,
        basis.polys(),
        basis.lms(),
        ReducerChoice::FirstDivisor,
        false,
        None,
    )
    .expect("reduction cannot overflow on graded input")
}

#[cfg(test)]
pub(crate) fn reduce_with_choice<M: GradedMonomial>(
    p: &SparsePoly<M>,
    basis: &BasisSet<M>,
    choice: ReducerChoice,
) -> SparsePoly<M> {
    reduce_inner(p, basis.polys(), basis.lms(), choice, false, None).unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct PairKey<M: GradedMonomial> {
    degree: u64,
    lcm: M,
    i: usize,
    j: usize,
}

impl<M: GradedMonomial> PartialOrd for PairKey<M> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<M: GradedMonomial> Ord for PairKey<M> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.lcm.cmp(&other.lcm))
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
    }
}

fn push_pair<M: GradedMonomial>(
    queue: &mut BinaryHeap<Reverse<PairKey<M>>>,
    lms: &[M],
    i: usize,
    j: usize,
) {
    // Buchberger's first criterion: coprime leads reduce to zero, skip them.
    if lms[i].coprime(&lms[j]) {
        return;
    }
    let lcm = lms[i].lcm(&lms[j]);
    queue.push(Reverse(PairKey {
        degree: lcm.weighted_degree(),
        lcm,
        i,
        j,
    }));
}

/// Buchberger completion: extends `input` to a Groebner basis of the same
/// ideal. Pairs are processed by ascending lcm weighted degree (ties by lex
/// on the lcm, then pair index), S-polynomials are top-reduced, and nonzero
/// remainders join the basis.
///
/// The budget charges one step per S-pair processed plus one per
/// single-monomial division.
pub fn buchberger<M: GradedMonomial>(
    input: &BasisSet<M>,
    budget: Budget,
) -> Result<BasisSet<M>, Error> {
    if input.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let mut polys = input.polys().to_vec();
    let mut lms = input.lms().to_vec();
    let mut counter = StepCounter::new(budget);
    let mut queue = BinaryHeap::new();
    for j in 1..polys.len() {
        for i in 0..j {
            push_pair(&mut queue, &lms, i, j);
        }
    }
    while let Some(Reverse(pair)) = queue.pop() {
        counter.tick()?;
        let s = s_polynomial(&polys[pair.i], &polys[pair.j])?;
        let remainder = reduce_inner(
            &s,
            &polys,
            &lms,
            ReducerChoice::FirstDivisor,
            true,
            Some(&mut counter),
        )?;
        if remainder.is_zero() {
            continue;
        }
        let lm = *remainder.leading_monomial().expect("nonzero");
        polys.push(remainder);
        lms.push(lm);
        let j = polys.len() - 1;
        for i in 0..j {
            push_pair(&mut queue, &lms, i, j);
        }
    }
    BasisSet::new(polys)
}

/// Witness that a basis is not Groebner: an S-pair with a nonzero normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerWitness<M: GradedMonomial> {
    pub i: usize,
    pub j: usize,
    pub normal_form: SparsePoly<M>,
}

/// Checks the Buchberger criterion pair by pair, with no shortcuts, and
/// reports the first failing pair in (i, j) order.
pub fn check_groebner<M: GradedMonomial>(basis: &BasisSet<M>) -> Option<GroebnerWitness<M>> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis.polys()[i], &basis.polys()[j])
                .expect("basis entries are nonzero");
            let nf = reduce(&s, basis);
            if !nf.is_zero() {
                return Some(GroebnerWitness {
                    i,
                    j,
                    normal_form: nf,
                });
            }
        }
    }
    None
}

pub fn is_groebner<M: GradedMonomial>(basis: &BasisSet<M>) -> bool {
    check_groebner(basis).is_none()
}

/// The reduced Groebner basis of the ideal: minimal leads, every member fully
/// reduced against the others, sorted by decreasing leading monomial. This is
/// the unique canonical basis (all polynomials here are already monic).
///
/// The input must itself be a Groebner basis.
pub fn reduce_gb<M: GradedMonomial>(gb: &BasisSet<M>) -> Result<BasisSet<M>, Error> {
    if let Some(w) = check_groebner(gb) {
        return Err(Error::NotGroebner {
            witness: format!(
                "S-pair ({}, {}) leaves normal form {}",
                gb.polys()[w.i],
                gb.polys()[w.j],
                w.normal_form
            ),
        });
    }
    let n = gb.len();
    let lms = gb.lms();
    let mut removed = vec![false; n];
    for i in 0..n {
        let redundant = (0..n).any(|j| {
            j != i && !removed[j] && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i)
        });
        if redundant {
            removed[i] = true;
        }
    }
    let mut kept: Vec<SparsePoly<M>> = (0..n)
        .filter(|&i| !removed[i])
        .map(|i| gb.polys()[i].clone())
        .collect();
    // Tail-reduce each member against the rest. Leads are untouchable here:
    // minimality means no other lead divides them.
    for i in 0..kept.len() {
        let others: Vec<_> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let basis = BasisSet::new(others).expect("nonzero members");
        kept[i] = reduce(&kept[i], &basis);
    }
    kept.sort_by(|p, q| {
        q.leading_monomial()
            .expect("nonzero")
            .cmp(p.leading_monomial().expect("nonzero"))
    });
    BasisSet::new(kept)
}

/// Monomials of the given weighted degree not divisible by any leading
/// monomial of `gb`, in decreasing order. When `gb` is a Groebner basis these
/// project to a vector-space basis of the graded slice of the quotient.
pub fn standard_monomials<M: GradedMonomial>(gb: &BasisSet<M>, degree: u64) -> Vec<M> {
    let context = gb
        .lms()
        .first()
        .expect("standard monomials need a nonempty basis for ring context");
    context
        .monomials_in_degree(degree)
        .into_iter()
        .filter(|m| !gb.lms().iter().any(|lm| lm.divides(m)))
        .collect()
}
