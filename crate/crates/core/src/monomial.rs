//! Exponent-vector monomials, divisibility, and monomial order ideals.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::DEFAULT_CLOSURE_CAP;

/// A monomial `x_1^{a_1} ... x_n^{a_n}`, stored as its exponent vector.
///
/// Monomials are ordered graded-lexicographically: first by total degree,
/// then lexicographically on the exponent vector. Under this order `x_1` is the
/// largest variable, so on three variables `1 < z < y < x < z^2 < yz < ...`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The monomial `1` on `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_i` (0-based) on `n` variables.
    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    /// `x_i^k` on `n` variables.
    pub fn power(n: usize, i: usize, k: u32) -> Self {
        let mut e = vec![0; n];
        e[i] = k;
        Monomial(e)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn check_arity(&self, other: &Monomial) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(Error::Dimension {
                expected: self.arity(),
                found: other.arity(),
            });
        }
        Ok(())
    }

    /// `self | other`, i.e. every exponent of `self` is at most the matching one of `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_arity(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, defined only when `divisor | self`.
    pub fn quotient(&self, divisor: &Monomial) -> Result<Monomial> {
        self.check_arity(divisor)?;
        if !divisor.divides_unchecked(self) {
            return Err(Error::Domain(format!("{divisor} does not divide {self}")));
        }
        Ok(Monomial(
            self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn product(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
            .ok_or(Error::Overflow("monomial product"))
    }

    /// `x_j * self / x_i`. Requires `self_i >= 1`.
    pub fn exchange(&self, i: usize, j: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] -= 1;
        e[j] += 1;
        Monomial(e)
    }

    /// `self / x_i`, or `None` if `x_i` does not divide `self`.
    pub fn lower_cover(&self, i: usize) -> Option<Monomial> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(Monomial(e))
    }

    /// `x_i * self`.
    pub fn upper_cover(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    /// Number of divisors, i.e. the product of `(a_i + 1)`.
    pub fn divisor_count(&self) -> u128 {
        self.0
            .iter()
            .fold(1u128, |acc, &e| acc.saturating_mul(u128::from(e) + 1))
    }

    /// All divisors of `self`, in odometer order (not sorted).
    pub fn divisors(&self) -> Interval {
        Interval::new(Monomial::one(self.arity()), self.clone())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Iterator over the divisor interval `[bottom, top]`, odometer order.
#[derive(Debug, Clone)]
pub struct Interval {
    bottom: Monomial,
    top: Monomial,
    next: Option<Vec<u32>>,
}

impl Interval {
    /// Assumes `bottom | top`; yields nothing otherwise.
    pub(crate) fn new(bottom: Monomial, top: Monomial) -> Self {
        let next = bottom.divides_unchecked(&top).then(|| bottom.0.clone());
        Interval { bottom, top, next }
    }
}

impl Iterator for Interval {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in 0..succ.len() {
            if succ[i] < self.top.0[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = self.bottom.0[i];
        }
        Some(Monomial(current))
    }
}

/// All monomials of total degree `d` on `n` variables, ascending graded-lex.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn fill(rest: u32, slot: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if slot + 1 == cur.len() {
            cur[slot] = rest;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in 0..=rest {
            cur[slot] = e;
            fill(rest - e, slot + 1, cur, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    fill(d, 0, &mut vec![0; n], &mut out);
    out.sort();
    out
}

/// Integer sequence indexed from 0: degree sequences, f-vectors and h-vectors.
///
/// Entries are signed because the f/h transforms are defined over the
/// integers and may leave the non-negative range for vectors that are not the
/// f-vector of any complex. Degree sequences never have trailing zeros; f- and
/// h-vectors keep their full length `d + 1`, which is part of their meaning.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVector(Vec<i64>);

impl DegreeVector {
    pub fn new(entries: Vec<i64>) -> Self {
        DegreeVector(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry `i`, or 0 past the end.
    pub fn get(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Copy with trailing zeros removed.
    pub fn trimmed(&self) -> DegreeVector {
        let end = self.0.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        DegreeVector(self.0[..end].to_vec())
    }

    /// Equality after dropping trailing zeros.
    pub fn same_sequence(&self, other: &DegreeVector) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl From<Vec<i64>> for DegreeVector {
    fn from(v: Vec<i64>) -> Self {
        DegreeVector(v)
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Wire form of an order ideal: variable count and generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSpec {
    pub variables: usize,
    pub generators: Vec<Monomial>,
}

impl IdealSpec {
    pub fn build(&self, closure_cap: usize) -> Result<OrderIdeal> {
        OrderIdeal::from_generators_capped(self.variables, self.generators.clone(), closure_cap)
    }
}

/// A finite set of monomials closed under taking divisors.
///
/// Members are stored explicitly in graded-lex order; the maximal elements are
/// cached at construction.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "IdealSpec", try_from = "IdealSpec")]
pub struct OrderIdeal {
    n: usize,
    members: BTreeSet<Monomial>,
    maximal: Vec<Monomial>,
}

impl OrderIdeal {
    /// Closure of `gens` under divisors, capped at [`DEFAULT_CLOSURE_CAP`] members.
    pub fn from_generators<I>(n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        Self::from_generators_capped(n, gens, DEFAULT_CLOSURE_CAP)
    }

    pub fn from_generators_capped<I>(n: usize, gens: I, cap: usize) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        if n == 0 {
            return Err(Error::Domain(
                "an order ideal needs at least one variable".into(),
            ));
        }
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            if g.arity() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: g.arity(),
                });
            }
        }
        let mut members = BTreeSet::new();
        for g in &gens {
            let count = g.divisor_count();
            if count > cap as u128 {
                return Err(Error::Size {
                    what: "order ideal closure",
                    cap,
                    requested: count,
                });
            }
            members.extend(g.divisors());
            if members.len() > cap {
                return Err(Error::Size {
                    what: "order ideal closure",
                    cap,
                    requested: members.len() as u128,
                });
            }
        }
        Ok(Self::from_members_unchecked(n, members))
    }

    /// Builds an ideal from an explicit member set, verifying downward closure.
    pub fn from_members(n: usize, members: BTreeSet<Monomial>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain(
                "an order ideal needs at least one variable".into(),
            ));
        }
        if let Some(m) = members.iter().find(|m| m.arity() != n) {
            return Err(Error::Dimension {
                expected: n,
                found: m.arity(),
            });
        }
        if let Some((_, missing)) = first_closure_gap(n, &members) {
            return Err(Error::Membership(missing.to_string()));
        }
        Ok(Self::from_members_unchecked(n, members))
    }

    /// Caller guarantees `members` is downward closed and of arity `n`.
    pub(crate) fn from_members_unchecked(n: usize, members: BTreeSet<Monomial>) -> Self {
        let maximal = members
            .iter()
            .filter(|m| (0..n).all(|i| !members.contains(&m.upper_cover(i))))
            .cloned()
            .collect();
        OrderIdeal {
            n,
            members,
            maximal,
        }
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &BTreeSet<Monomial> {
        &self.members
    }

    /// Maximal elements, ascending graded-lex.
    pub fn maximal(&self) -> &[Monomial] {
        &self.maximal
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.members.contains(m)
    }

    /// True iff every maximal element has the same degree.
    pub fn is_pure(&self) -> Result<bool> {
        let first = self
            .maximal
            .first()
            .ok_or_else(|| Error::Domain("purity of the empty ideal".into()))?;
        Ok(self.maximal.iter().all(|m| m.degree() == first.degree()))
    }

    /// Entry `i` counts the members of degree `i`.
    pub fn degree_sequence(&self) -> DegreeVector {
        let mut counts: Vec<i64> = Vec::new();
        for m in &self.members {
            let d = m.degree() as usize;
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        DegreeVector(counts)
    }

    /// The members `m` with `a | m | b`.
    pub fn interval_members(&self, a: &Monomial, b: &Monomial) -> Result<BTreeSet<Monomial>> {
        for m in [a, b] {
            if m.arity() != self.n {
                return Err(Error::Dimension {
                    expected: self.n,
                    found: m.arity(),
                });
            }
        }
        if !a.divides_unchecked(b) {
            return Err(Error::Domain(format!("{a} does not divide {b}")));
        }
        if !self.contains(b) {
            return Err(Error::Membership(b.to_string()));
        }
        Ok(Interval::new(a.clone(), b.clone()).collect())
    }

    pub fn to_spec(&self) -> IdealSpec {
        IdealSpec {
            variables: self.n,
            generators: self.maximal.clone(),
        }
    }
}

impl fmt::Debug for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrderIdeal")
            .field("variables", &self.n)
            .field("maximal", &self.maximal)
            .field("size", &self.members.len())
            .finish()
    }
}

impl From<OrderIdeal> for IdealSpec {
    fn from(g: OrderIdeal) -> Self {
        g.to_spec()
    }
}

impl TryFrom<IdealSpec> for OrderIdeal {
    type Error = Error;

    fn try_from(spec: IdealSpec) -> Result<Self> {
        OrderIdeal::from_generators(spec.variables, spec.generators)
    }
}

/// First `(member, missing divisor)` pair showing `set` is not downward closed.
pub(crate) fn first_closure_gap(
    n: usize,
    set: &BTreeSet<Monomial>,
) -> Option<(Monomial, Monomial)> {
    set.iter().find_map(|m| {
        (0..n)
            .filter_map(|i| m.lower_cover(i))
            .find(|c| !set.contains(c))
            .map(|c| (m.clone(), c))
    })
}

pub fn is_downward_closed(n: usize, set: &BTreeSet<Monomial>) -> bool {
    first_closure_gap(n, set).is_none()
}
