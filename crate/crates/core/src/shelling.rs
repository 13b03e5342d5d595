//! M-shellings of monomial order ideals.
//!
//! An M-shelling is an ordered list of divisor intervals `[a, b]` with maximal
//! tops that partition the ideal, such that every prefix union is itself an
//! order ideal. Divisor intervals are products of chains, so every interval
//! is an M-interval.
//!
//! [`shell_polymatroid`] builds one for any discrete polymatroid by splitting
//! on the last variable whose exponent varies across the maximal elements.
//! [`verify_m_shelling`] checks arbitrary claims, and
//! [`is_m_shellable_bruteforce`] is an independent backtracking oracle.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hvector::{Budget, SearchOutcome};
use crate::monomial::{DegreeVector, Interval, Monomial, OrderIdeal};
use crate::polymatroid::is_discrete_polymatroid;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShellingInterval {
    pub bottom: Monomial,
    pub top: Monomial,
}

impl ShellingInterval {
    pub fn new(bottom: Monomial, top: Monomial) -> Result<Self> {
        if !bottom.divides(&top)? {
            return Err(Error::Domain(format!("{bottom} does not divide {top}")));
        }
        Ok(ShellingInterval { bottom, top })
    }

    /// Members in odometer order; empty when `bottom` does not divide `top`.
    pub fn members(&self) -> Interval {
        Interval::new(self.bottom.clone(), self.top.clone())
    }

    pub fn size(&self) -> u128 {
        self.top
            .exponents()
            .iter()
            .zip(self.bottom.exponents())
            .fold(1u128, |acc, (&b, &a)| {
                acc.saturating_mul(u128::from(b.saturating_sub(a)) + 1)
            })
    }

    /// Entry `i` counts the members of total degree `i`.
    pub fn degree_vector(&self) -> Result<DegreeVector> {
        if !self.bottom.divides(&self.top)? {
            return Err(Error::Domain(format!(
                "{} does not divide {}",
                self.bottom, self.top
            )));
        }
        // Convolve the chains [a_i, b_i], each contributing 1 + t + ... + t^(b_i - a_i).
        let mut poly: Vec<i64> = vec![1];
        for (&b, &a) in self.top.exponents().iter().zip(self.bottom.exponents()) {
            let len = (b - a) as usize;
            let mut next = vec![0i64; poly.len() + len];
            for (i, &c) in poly.iter().enumerate() {
                for slot in &mut next[i..=i + len] {
                    *slot = slot.checked_add(c).ok_or(Error::Overflow("interval degree vector"))?;
                }
            }
            poly = next;
        }
        let shift = self.bottom.degree() as usize;
        let mut out = vec![0i64; shift];
        out.extend(poly);
        Ok(DegreeVector::new(out))
    }
}

/// Ordered intervals claimed to form an M-shelling.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct MShelling {
    pub intervals: Vec<ShellingInterval>,
}

impl MShelling {
    pub fn new(intervals: Vec<ShellingInterval>) -> Self {
        MShelling { intervals }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn tops(&self) -> impl Iterator<Item = &Monomial> {
        self.intervals.iter().map(|ivl| &ivl.top)
    }
}

/// An ideal together with a shelling of it; the input format of `mshell verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingCertificate {
    pub ideal: OrderIdeal,
    pub shelling: MShelling,
}

/// One split performed by [`shell_polymatroid_traced`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitStep {
    pub depth: usize,
    /// 0-based index of the split variable.
    pub variable: usize,
    /// Largest exponent of the split variable over the ideal.
    pub power: u32,
    pub parent_maximal: usize,
    /// Maximal elements of the part not divisible by `x_variable^power`.
    pub lower_maximal: usize,
    /// Maximal elements of the divided-out upper part.
    pub upper_maximal: usize,
}

/// Builds an M-shelling of a discrete polymatroid.
///
/// With one maximal element `m` the answer is `[1, m]`. Otherwise let `r` be
/// the last variable on which two maximal elements differ and `k` the largest
/// exponent of `x_r`. The members not divisible by `x_r^k` and the quotients
/// of the others by `x_r^k` are again discrete polymatroids with fewer maximal
/// elements; their shellings are concatenated, the second one multiplied back
/// by `x_r^k`. Both properties are re-checked at every split and reported as
/// [`Error::Invariant`] if they ever fail.
pub fn shell_polymatroid(g: &OrderIdeal) -> Result<MShelling> {
    shell_polymatroid_traced(g).map(|(s, _)| s)
}

pub fn shell_polymatroid_traced(g: &OrderIdeal) -> Result<(MShelling, Vec<SplitStep>)> {
    let report = is_discrete_polymatroid(g)?;
    if let Some(failure) = report.witness {
        return Err(Error::Domain(format!(
            "not a discrete polymatroid: {}",
            serde_json::to_string(&failure).unwrap_or_default()
        )));
    }
    let mut trace = Vec::new();
    let intervals = split(g, 0, &mut trace)?;
    Ok((MShelling::new(intervals), trace))
}

fn split(g: &OrderIdeal, depth: usize, trace: &mut Vec<SplitStep>) -> Result<Vec<ShellingInterval>> {
    let n = g.variables();
    let maximal = g.maximal();
    if maximal.len() == 1 {
        return Ok(vec![ShellingInterval {
            bottom: Monomial::one(n),
            top: maximal[0].clone(),
        }]);
    }
    let r = (0..n)
        .rev()
        .find(|&i| maximal.iter().any(|m| m.exponent(i) != maximal[0].exponent(i)))
        .ok_or_else(|| Error::Invariant("distinct maximal elements agree everywhere".into()))?;
    let k = maximal.iter().map(|m| m.exponent(r)).max().unwrap_or(0);
    let shift = Monomial::power(n, r, k);

    let mut lower = BTreeSet::new();
    let mut upper = BTreeSet::new();
    for m in g.members() {
        if m.exponent(r) < k {
            lower.insert(m.clone());
        } else {
            upper.insert(m.quotient(&shift)?);
        }
    }
    let lower = OrderIdeal::from_members_unchecked(n, lower);
    let upper = OrderIdeal::from_members_unchecked(n, upper);
    debug_assert!(crate::monomial::is_downward_closed(n, lower.members()));
    debug_assert!(crate::monomial::is_downward_closed(n, upper.members()));

    for (name, part) in [("lower part", &lower), ("upper quotient", &upper)] {
        let report = is_discrete_polymatroid(part)?;
        if !report.holds {
            return Err(Error::Invariant(format!(
                "{name} of split on x{}^{k} is not a discrete polymatroid",
                r + 1
            )));
        }
        if part.maximal().len() >= maximal.len() {
            return Err(Error::Invariant(format!(
                "{name} of split on x{}^{k} has {} maximal elements, parent has {}",
                r + 1,
                part.maximal().len(),
                maximal.len()
            )));
        }
    }
    trace.push(SplitStep {
        depth,
        variable: r,
        power: k,
        parent_maximal: maximal.len(),
        lower_maximal: lower.maximal().len(),
        upper_maximal: upper.maximal().len(),
    });

    let mut out = split(&lower, depth + 1, trace)?;
    for ivl in split(&upper, depth + 1, trace)? {
        out.push(ShellingInterval {
            bottom: ivl.bottom.product(&shift)?,
            top: ivl.top.product(&shift)?,
        });
    }
    Ok(out)
}

/// The individual conditions checked by [`verify_m_shelling`], in order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShellingCheck {
    /// Every endpoint has the ideal's arity.
    Arity,
    BottomDividesTop,
    TopIsMaximal,
    Disjoint,
    /// The intervals cover the ideal.
    Covers,
    /// Every prefix union is downward closed.
    PrefixClosed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: ShellingCheck,
    pub passed: bool,
    /// 0-based index of the offending interval (the prefix length minus one for `PrefixClosed`).
    pub interval: Option<usize>,
    pub witness: Vec<Monomial>,
}

impl CheckResult {
    fn pass(check: ShellingCheck) -> Self {
        CheckResult {
            check,
            passed: true,
            interval: None,
            witness: Vec::new(),
        }
    }

    fn fail(check: ShellingCheck, interval: Option<usize>, witness: Vec<Monomial>) -> Self {
        CheckResult {
            check,
            passed: false,
            interval,
            witness,
        }
    }
}

/// Outcome of [`verify_m_shelling`]. Checks run in order and stop at the
/// first failure, so `checks` ends with the failing one when `valid` is false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Checks a claimed M-shelling of `g`. Does not require `g` to be a polymatroid.
pub fn verify_m_shelling(g: &OrderIdeal, s: &MShelling) -> VerificationReport {
    let mut checks = Vec::new();
    let failure = run_checks(g, s, &mut checks);
    if let Some(f) = failure {
        checks.push(f);
    }
    VerificationReport {
        valid: checks.iter().all(|c| c.passed),
        checks,
    }
}

fn run_checks(g: &OrderIdeal, s: &MShelling, done: &mut Vec<CheckResult>) -> Option<CheckResult> {
    use ShellingCheck::*;
    let n = g.variables();

    for (idx, ivl) in s.intervals.iter().enumerate() {
        for end in [&ivl.bottom, &ivl.top] {
            if end.arity() != n {
                return Some(CheckResult::fail(Arity, Some(idx), vec![end.clone()]));
            }
        }
    }
    done.push(CheckResult::pass(Arity));

    for (idx, ivl) in s.intervals.iter().enumerate() {
        if !ivl.bottom.divides_unchecked(&ivl.top) {
            return Some(CheckResult::fail(
                BottomDividesTop,
                Some(idx),
                vec![ivl.bottom.clone(), ivl.top.clone()],
            ));
        }
    }
    done.push(CheckResult::pass(BottomDividesTop));

    let maximal: HashSet<&Monomial> = g.maximal().iter().collect();
    for (idx, ivl) in s.intervals.iter().enumerate() {
        if !maximal.contains(&ivl.top) {
            return Some(CheckResult::fail(TopIsMaximal, Some(idx), vec![ivl.top.clone()]));
        }
    }
    done.push(CheckResult::pass(TopIsMaximal));

    // Tops are members, so by downward closure every interval lies inside g.
    let mut owner: HashMap<Monomial, usize> = HashMap::with_capacity(g.len());
    for (idx, ivl) in s.intervals.iter().enumerate() {
        for m in ivl.members() {
            if owner.insert(m.clone(), idx).is_some() {
                return Some(CheckResult::fail(Disjoint, Some(idx), vec![m]));
            }
        }
    }
    done.push(CheckResult::pass(Disjoint));

    if let Some(missing) = g.members().iter().find(|m| !owner.contains_key(*m)) {
        return Some(CheckResult::fail(Covers, None, vec![missing.clone()]));
    }
    done.push(CheckResult::pass(Covers));

    // Every prefix is downward closed iff no member sits in an earlier
    // interval than one of its lower covers.
    for (idx, ivl) in s.intervals.iter().enumerate() {
        let mut members: Vec<Monomial> = ivl.members().collect();
        members.sort_unstable_by(|a, b| b.cmp(a));
        for m in members {
            for i in 0..n {
                let Some(cover) = m.lower_cover(i) else {
                    continue;
                };
                if owner[&cover] > idx {
                    return Some(CheckResult::fail(PrefixClosed, Some(idx), vec![m, cover]));
                }
            }
        }
    }
    done.push(CheckResult::pass(PrefixClosed));
    None
}

/// Degree vector of the union of the intervals: the sum of their per-interval
/// degree vectors. Equals the ideal's degree sequence for a valid shelling.
pub fn shelling_degree_polynomial(s: &MShelling) -> Result<DegreeVector> {
    let mut total: Vec<i64> = Vec::new();
    for ivl in &s.intervals {
        let v = ivl.degree_vector()?;
        if total.len() < v.len() {
            total.resize(v.len(), 0);
        }
        for (t, e) in total.iter_mut().zip(v.entries()) {
            *t = t
                .checked_add(*e)
                .ok_or(Error::Overflow("shelling degree vector"))?;
        }
    }
    Ok(DegreeVector::new(total))
}

/// Backtracking M-shellability oracle for pure ideals of at most `oracle_cap`
/// members. Returns the first shelling in its fixed search order, or `None`
/// when none exists.
pub fn is_m_shellable_bruteforce(g: &OrderIdeal, oracle_cap: usize) -> Result<Option<MShelling>> {
    let mut budget = Budget::unlimited();
    match bruteforce_search(g, oracle_cap, &mut budget)? {
        SearchOutcome::Found(s) => Ok(Some(s)),
        SearchOutcome::Absent => Ok(None),
        SearchOutcome::Inconclusive => {
            Err(Error::Invariant("unlimited oracle budget ran out".into()))
        }
    }
}

type Bits = Vec<u64>;

fn bit_set(bits: &mut Bits, i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn bit_get(bits: &Bits, i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn is_subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn is_zero(a: &Bits) -> bool {
    a.iter().all(|&w| w == 0)
}

struct Candidate {
    interval: ShellingInterval,
    mask: Bits,
    /// Members just above the interval but outside it.
    above: Bits,
}

struct Oracle {
    /// Per maximal element (ascending): its downset mask, then its candidate intervals.
    tops: Vec<(usize, Bits, Vec<Candidate>)>,
    dead: HashSet<Bits>,
}

/// Peels intervals off the end of the order: at each state, try every maximal
/// element `b` still present and every bottom `a | b` (ascending graded-lex),
/// keeping the peel only if what remains is still downward closed. Failed
/// states are memoized.
pub(crate) fn bruteforce_search(
    g: &OrderIdeal,
    oracle_cap: usize,
    budget: &mut Budget,
) -> Result<SearchOutcome<MShelling>> {
    if !g.is_pure()? {
        return Err(Error::Domain("M-shellability oracle needs a pure ideal".into()));
    }
    if g.len() > oracle_cap {
        return Err(Error::Size {
            what: "ideal size for the shelling oracle",
            cap: oracle_cap,
            requested: g.len() as u128,
        });
    }
    let n = g.variables();
    let members: Vec<&Monomial> = g.members().iter().collect();
    let index: HashMap<&Monomial, usize> =
        members.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let words = members.len().div_ceil(64);
    let empty: Bits = vec![0; words];

    let mut tops = Vec::new();
    for top in g.maximal() {
        let mut downset = empty.clone();
        let mut bottoms: Vec<Monomial> = top.divisors().collect();
        bottoms.sort();
        let mut cands = Vec::with_capacity(bottoms.len());
        for m in &bottoms {
            bit_set(&mut downset, index[m]);
        }
        for bottom in bottoms {
            let interval = ShellingInterval {
                bottom,
                top: top.clone(),
            };
            let mut mask = empty.clone();
            let mut above = empty.clone();
            let ivl_members: Vec<Monomial> = interval.members().collect();
            for m in &ivl_members {
                bit_set(&mut mask, index[m]);
            }
            for m in &ivl_members {
                for i in 0..n {
                    if let Some(&j) = index.get(&m.upper_cover(i)) {
                        if !bit_get(&mask, j) {
                            bit_set(&mut above, j);
                        }
                    }
                }
            }
            cands.push(Candidate {
                interval,
                mask,
                above,
            });
        }
        tops.push((index[top], downset, cands));
    }

    let mut full = empty.clone();
    for i in 0..members.len() {
        bit_set(&mut full, i);
    }
    let mut oracle = Oracle {
        tops,
        dead: HashSet::new(),
    };
    let mut peeled = Vec::new();
    Ok(match oracle.search(&full, &mut peeled, budget) {
        Some(true) => {
            peeled.reverse();
            SearchOutcome::Found(MShelling::new(peeled))
        }
        Some(false) => SearchOutcome::Absent,
        None => SearchOutcome::Inconclusive,
    })
}

impl Oracle {
    /// `Some(true)` on success (with `peeled` filled), `Some(false)` when the
    /// state is dead, `None` when the budget ran out.
    fn search(
        &mut self,
        remaining: &Bits,
        peeled: &mut Vec<ShellingInterval>,
        budget: &mut Budget,
    ) -> Option<bool> {
        if is_zero(remaining) {
            return Some(true);
        }
        if self.dead.contains(remaining) {
            return Some(false);
        }
        if !budget.spend() {
            return None;
        }
        // Every remaining member must still lie under some remaining top.
        let mut reachable = vec![0u64; remaining.len()];
        for (top, downset, _) in &self.tops {
            if bit_get(remaining, *top) {
                for (r, d) in reachable.iter_mut().zip(downset) {
                    *r |= d;
                }
            }
        }
        if is_subset(remaining, &reachable) {
            for t in 0..self.tops.len() {
                if !bit_get(remaining, self.tops[t].0) {
                    continue;
                }
                for c in 0..self.tops[t].2.len() {
                    let cand = &self.tops[t].2[c];
                    if !is_subset(&cand.mask, remaining) {
                        continue;
                    }
                    let next: Bits = remaining
                        .iter()
                        .zip(&cand.mask)
                        .map(|(r, m)| r & !m)
                        .collect();
                    if next.iter().zip(&cand.above).any(|(x, a)| x & a != 0) {
                        continue;
                    }
                    let interval = cand.interval.clone();
                    peeled.push(interval);
                    match self.search(&next, peeled, budget) {
                        Some(true) => return Some(true),
                        Some(false) => {
                            peeled.pop();
                        }
                        None => return None,
                    }
                }
            }
        }
        self.dead.insert(remaining.clone());
        Some(false)
    }
}
