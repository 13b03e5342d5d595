//! The discrete-polymatroid exchange property and exhaustive enumeration of
//! small discrete polymatroids.
//!
//! A pure order ideal `G` is a discrete polymatroid when, for every ordered pair
//! of maximal monomials `(m, m')` and every variable `i` with `m_i > m'_i`, some
//! variable `j` has `m_j < m'_j` and `x_j * m / x_i` in `G`.

use std::collections::HashSet;

use itertools::{Combinations, Itertools};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial, OrderIdeal};
use crate::DEFAULT_CLOSURE_CAP;

/// Largest number of candidate generators the enumerator accepts.
pub const MAX_ENUMERATION_CANDIDATES: usize = 10_000;

/// Why an ideal fails to be a discrete polymatroid.
///
/// Variable indices are 0-based (`index = 2` is `x_3`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PolymatroidFailure {
    /// Two maximal elements of different degree.
    NotPure { lower: Monomial, higher: Monomial },
    /// No admissible `j` exists for the maximal pair `(m, m')` and index `i`.
    Exchange {
        m: Monomial,
        m_prime: Monomial,
        index: usize,
    },
}

impl PolymatroidFailure {
    /// Re-checks the witness against `g` from scratch.
    pub fn is_violated_in(&self, g: &OrderIdeal) -> bool {
        let maximal = g.maximal();
        match self {
            PolymatroidFailure::NotPure { lower, higher } => {
                maximal.contains(lower)
                    && maximal.contains(higher)
                    && lower.degree() != higher.degree()
            }
            PolymatroidFailure::Exchange { m, m_prime, index } => {
                let i = *index;
                maximal.contains(m)
                    && maximal.contains(m_prime)
                    && m != m_prime
                    && i < g.variables()
                    && m.exponent(i) > m_prime.exponent(i)
                    && (0..g.variables()).all(|j| {
                        m.exponent(j) >= m_prime.exponent(j) || !g.contains(&m.exchange(i, j))
                    })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolymatroidReport {
    pub holds: bool,
    pub witness: Option<PolymatroidFailure>,
}

impl PolymatroidReport {
    fn from_failure(failure: Option<PolymatroidFailure>) -> Self {
        PolymatroidReport {
            holds: failure.is_none(),
            witness: failure,
        }
    }
}

impl Serialize for PolymatroidReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            holds: bool,
            witness: &'a Option<PolymatroidFailure>,
        }
        Wire {
            holds: self.holds,
            witness: &self.witness,
        }
        .serialize(s)
    }
}

pub fn is_discrete_polymatroid(g: &OrderIdeal) -> Result<PolymatroidReport> {
    let maximal = g.maximal();
    let first = maximal
        .first()
        .ok_or_else(|| Error::Domain("exchange test on the empty ideal".into()))?;
    if let Some(other) = maximal.iter().find(|m| m.degree() != first.degree()) {
        let (lower, higher) = if first.degree() < other.degree() {
            (first.clone(), other.clone())
        } else {
            (other.clone(), first.clone())
        };
        return Ok(PolymatroidReport::from_failure(Some(
            PolymatroidFailure::NotPure { lower, higher },
        )));
    }
    Ok(PolymatroidReport::from_failure(exchange_failure(
        g.variables(),
        maximal,
        |u| g.contains(u),
    )))
}

/// Scans ordered pairs of `maximal` (assumed sorted and equi-degree) and returns
/// the first failing `(m, m', i)`. `contains` only needs to be right on
/// monomials of the common degree.
pub(crate) fn exchange_failure<F>(
    n: usize,
    maximal: &[Monomial],
    contains: F,
) -> Option<PolymatroidFailure>
where
    F: Fn(&Monomial) -> bool,
{
    for m in maximal {
        for m_prime in maximal {
            if m == m_prime {
                continue;
            }
            for i in 0..n {
                if m.exponent(i) <= m_prime.exponent(i) {
                    continue;
                }
                let rescued = (0..n)
                    .any(|j| m.exponent(j) < m_prime.exponent(j) && contains(&m.exchange(i, j)));
                if !rescued {
                    return Some(PolymatroidFailure::Exchange {
                        m: m.clone(),
                        m_prime: m_prime.clone(),
                        index: i,
                    });
                }
            }
        }
    }
    None
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n.saturating_sub(k));
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Stream of every discrete polymatroid on `n` variables whose generators all
/// have degree `d`, ordered by number of generators and then lexicographically
/// on the sorted generator list.
pub struct DiscretePolymatroids {
    n: usize,
    candidates: Vec<Monomial>,
    size: usize,
    combos: Combinations<std::ops::Range<usize>>,
    remaining: usize,
}

pub fn enumerate_discrete_polymatroids(
    n: usize,
    d: u32,
    max_count: usize,
) -> Result<DiscretePolymatroids> {
    if n == 0 {
        return Err(Error::Domain(
            "an order ideal needs at least one variable".into(),
        ));
    }
    let candidates = binomial(n as u128 + u128::from(d) - 1, u128::from(d));
    if candidates > MAX_ENUMERATION_CANDIDATES as u128 {
        return Err(Error::Size {
            what: "degree-d monomial count",
            cap: MAX_ENUMERATION_CANDIDATES,
            requested: candidates,
        });
    }
    // Worst case closure: every monomial of degree <= d.
    let closure = binomial(n as u128 + u128::from(d), u128::from(d));
    if closure > DEFAULT_CLOSURE_CAP as u128 {
        return Err(Error::Size {
            what: "order ideal closure",
            cap: DEFAULT_CLOSURE_CAP,
            requested: closure,
        });
    }
    let candidates = monomials_of_degree(n, d);
    let combos = (0..candidates.len()).combinations(1);
    Ok(DiscretePolymatroids {
        n,
        candidates,
        size: 1,
        combos,
        remaining: max_count,
    })
}

impl Iterator for DiscretePolymatroids {
    type Item = OrderIdeal;

    fn next(&mut self) -> Option<OrderIdeal> {
        while self.remaining > 0 && self.size <= self.candidates.len() {
            let Some(pick) = self.combos.next() else {
                self.size += 1;
                self.combos = (0..self.candidates.len()).combinations(self.size);
                continue;
            };
            let gens: Vec<Monomial> = pick.iter().map(|&i| self.candidates[i].clone()).collect();
            // Equigenerated: the degree-d members are exactly the generators.
            let top: HashSet<&Monomial> = gens.iter().collect();
            if exchange_failure(self.n, &gens, |u| top.contains(u)).is_some() {
                continue;
            }
            self.remaining -= 1;
            let ideal = OrderIdeal::from_generators(self.n, gens)
                .expect("closure bounded by the upfront size check");
            return Some(ideal);
        }
        None
    }
}
