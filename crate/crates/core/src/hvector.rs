//! f/h-vector transforms and bounded witness searches.
//!
//! Vectors follow the descending-power convention: for `d = len - 1`,
//! `F(y) = sum f_i y^(d-i)` and `H(y) = sum h_i y^(d-i)`, related by
//! `H(y) = F(y - 1)`.

use std::collections::HashMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, DegreeVector, Monomial, OrderIdeal};
use crate::polymatroid::is_discrete_polymatroid;
use crate::shelling::{bruteforce_search, MShelling};

/// Limits for the witness searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Largest number of variables a witness may use.
    pub max_variables: usize,
    /// Backtracking node budget, shared with any oracle calls made per candidate.
    pub max_nodes: u64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_variables: 8,
            max_nodes: 2_000_000,
        }
    }
}

impl SearchBounds {
    fn validate(&self) -> Result<()> {
        if self.max_variables == 0 || self.max_nodes == 0 {
            return Err(Error::Domain("search bounds must be positive".into()));
        }
        Ok(())
    }
}

/// Result of a bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The search completed without finding anything.
    Absent,
    /// The budget or variable bound stopped the search early.
    Inconclusive,
}

impl<T> SearchOutcome<T> {
    pub fn status(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "found",
            SearchOutcome::Absent => "absent",
            SearchOutcome::Inconclusive => "inconclusive",
        }
    }

    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_found(&self) -> Option<&T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::Absent => SearchOutcome::Absent,
            SearchOutcome::Inconclusive => SearchOutcome::Inconclusive,
        }
    }
}

impl<T: Serialize> Serialize for SearchOutcome<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SearchOutcome", 2)?;
        st.serialize_field("status", self.status())?;
        st.serialize_field("witness", &self.as_found())?;
        st.end()
    }
}

/// Node counter for one search call.
#[derive(Debug, Clone)]
pub(crate) struct Budget {
    left: u64,
}

impl Budget {
    pub(crate) fn new(nodes: u64) -> Self {
        Budget { left: nodes }
    }

    pub(crate) fn unlimited() -> Self {
        Budget { left: u64::MAX }
    }

    /// Consumes one node; false once the budget is gone.
    pub(crate) fn spend(&mut self) -> bool {
        if self.left == 0 {
            return false;
        }
        self.left -= 1;
        true
    }
}

fn binomial(n: usize, k: usize) -> Option<i64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as i64)? / (i as i64 + 1);
    }
    Some(acc)
}

/// `h` with `H(y) = F(y - 1)`: `h_k = sum_{i<=k} (-1)^(k-i) C(d-i, k-i) f_i`.
pub fn f_to_h(f: &DegreeVector) -> Result<DegreeVector> {
    if f.is_empty() {
        return Err(Error::Domain("empty f-vector".into()));
    }
    if f.get(0) != 1 {
        return Err(Error::Domain(format!(
            "f_0 must be 1 (one empty face), got {}",
            f.get(0)
        )));
    }
    transform(f, true)
}

/// `f` with `F(y) = H(y + 1)`: `f_k = sum_{i<=k} C(d-i, k-i) h_i`.
pub fn h_to_f(h: &DegreeVector) -> Result<DegreeVector> {
    if h.is_empty() {
        return Err(Error::Domain("empty h-vector".into()));
    }
    transform(h, false)
}

fn transform(v: &DegreeVector, alternate: bool) -> Result<DegreeVector> {
    const WHAT: &str = "f/h transform";
    let d = v.len() - 1;
    let mut out = Vec::with_capacity(v.len());
    for k in 0..=d {
        let mut acc: i64 = 0;
        for (i, &c) in v.entries()[..=k].iter().enumerate() {
            let mut term = binomial(d - i, k - i)
                .and_then(|b| b.checked_mul(c))
                .ok_or(Error::Overflow(WHAT))?;
            if alternate && (k - i) % 2 == 1 {
                term = -term;
            }
            acc = acc.checked_add(term).ok_or(Error::Overflow(WHAT))?;
        }
        out.push(acc);
    }
    Ok(DegreeVector::new(out))
}

/// Decision for one complete candidate during a witness search.
enum Verdict<T> {
    Accept(T),
    Reject,
    /// Undecided because a nested search ran out of budget.
    Undecided,
}

/// Backtracks over sets of degree-`d` generators on `h_1` variables (ascending
/// graded-lex) and hands every candidate whose degree sequence equals `h` to
/// `accept`. Any ideal with degree sequence `h` has exactly `h_1` variables in
/// play and exactly `h_d` maximal elements, all of degree `d`, so the search
/// is complete.
fn search_equigenerated<T, F>(
    h: &DegreeVector,
    bounds: &SearchBounds,
    mut accept: F,
) -> Result<SearchOutcome<T>>
where
    F: FnMut(OrderIdeal, &mut Budget) -> Result<Verdict<T>>,
{
    bounds.validate()?;
    let target = h.trimmed();
    if target.is_empty() || target.get(0) != 1 || !target.is_nonnegative() {
        return Ok(SearchOutcome::Absent);
    }
    let mut budget = Budget::new(bounds.max_nodes);
    let d = target.len() - 1;
    if d == 0 {
        let ideal = OrderIdeal::from_generators(1, [Monomial::one(1)])?;
        return Ok(match accept(ideal, &mut budget)? {
            Verdict::Accept(t) => SearchOutcome::Found(t),
            Verdict::Reject => SearchOutcome::Absent,
            Verdict::Undecided => SearchOutcome::Inconclusive,
        });
    }
    let n = target.get(1) as usize;
    if n == 0 {
        return Ok(SearchOutcome::Absent);
    }
    if n > bounds.max_variables {
        return Ok(SearchOutcome::Inconclusive);
    }
    let want = target.get(d) as usize;
    let candidates = monomials_of_degree(n, d as u32);
    if want > candidates.len() {
        return Ok(SearchOutcome::Absent);
    }

    let mut state = Backtrack {
        n,
        target: target.entries().to_vec(),
        candidates,
        want,
        counts: vec![0; d + 1],
        refcount: HashMap::new(),
        chosen: Vec::new(),
        undecided: false,
    };
    let found = state.dfs(0, &mut budget, &mut accept)?;
    Ok(match found {
        Some(Some(t)) => SearchOutcome::Found(t),
        None => SearchOutcome::Inconclusive,
        Some(None) if state.undecided => SearchOutcome::Inconclusive,
        Some(None) => SearchOutcome::Absent,
    })
}

struct Backtrack {
    n: usize,
    target: Vec<i64>,
    candidates: Vec<Monomial>,
    want: usize,
    /// Members of the current closure, by degree.
    counts: Vec<i64>,
    /// How many chosen generators each closure member lies under.
    refcount: HashMap<Monomial, u32>,
    chosen: Vec<usize>,
    undecided: bool,
}

impl Backtrack {
    /// Adds generator `idx`; false if some degree count now overshoots.
    fn push(&mut self, idx: usize) -> bool {
        let mut ok = true;
        for m in self.candidates[idx].divisors() {
            let deg = m.degree() as usize;
            let rc = self.refcount.entry(m).or_insert(0);
            *rc += 1;
            if *rc == 1 {
                self.counts[deg] += 1;
                ok &= self.counts[deg] <= self.target[deg];
            }
        }
        self.chosen.push(idx);
        ok
    }

    fn pop(&mut self) {
        let idx = self.chosen.pop().expect("pop after push");
        for m in self.candidates[idx].divisors() {
            let deg = m.degree() as usize;
            let rc = self.refcount.get_mut(&m).expect("member was counted");
            *rc -= 1;
            if *rc == 0 {
                self.refcount.remove(&m);
                self.counts[deg] -= 1;
            }
        }
    }

    /// `None` when out of budget, `Some(None)` when the subtree is exhausted.
    fn dfs<T, F>(&mut self, start: usize, budget: &mut Budget, accept: &mut F) -> Result<Option<Option<T>>>
    where
        F: FnMut(OrderIdeal, &mut Budget) -> Result<Verdict<T>>,
    {
        if self.chosen.len() == self.want {
            if self.counts != self.target {
                return Ok(Some(None));
            }
            let gens = self.chosen.iter().map(|&i| self.candidates[i].clone());
            let ideal = OrderIdeal::from_generators(self.n, gens)?;
            return Ok(Some(match accept(ideal, budget)? {
                Verdict::Accept(t) => Some(t),
                Verdict::Reject => None,
                Verdict::Undecided => {
                    self.undecided = true;
                    None
                }
            }));
        }
        let need = self.want - self.chosen.len();
        for idx in start..=self.candidates.len() - need {
            if !budget.spend() {
                return Ok(None);
            }
            let ok = self.push(idx);
            let sub = if ok {
                self.dfs(idx + 1, budget, accept)?
            } else {
                Some(None)
            };
            self.pop();
            match sub {
                Some(None) => {}
                other => return Ok(other),
            }
        }
        Ok(Some(None))
    }
}

/// First pure order ideal (in search order) whose degree sequence is `h`.
/// Trailing zeros of `h` are ignored.
pub fn find_pure_order_ideal_witness(
    h: &DegreeVector,
    bounds: &SearchBounds,
) -> Result<SearchOutcome<OrderIdeal>> {
    search_equigenerated(h, bounds, |g, _| Ok(Verdict::Accept(g)))
}

/// As [`find_pure_order_ideal_witness`], keeping only discrete polymatroids.
pub fn find_pm_witness(h: &DegreeVector, bounds: &SearchBounds) -> Result<SearchOutcome<OrderIdeal>> {
    search_equigenerated(h, bounds, |g, _| {
        Ok(if is_discrete_polymatroid(&g)?.holds {
            Verdict::Accept(g)
        } else {
            Verdict::Reject
        })
    })
}

/// As [`find_pure_order_ideal_witness`], keeping only ideals the brute-force
/// oracle can shell. Oracle nodes are charged to the same budget.
pub fn find_shellable_witness(
    h: &DegreeVector,
    bounds: &SearchBounds,
    oracle_cap: usize,
) -> Result<SearchOutcome<(OrderIdeal, MShelling)>> {
    let size = h.trimmed().total();
    if size > oracle_cap as i64 {
        return Err(Error::Size {
            what: "ideal size for the shelling oracle",
            cap: oracle_cap,
            requested: size as u128,
        });
    }
    search_equigenerated(h, bounds, |g, budget| {
        Ok(match bruteforce_search(&g, oracle_cap, budget)? {
            SearchOutcome::Found(s) => Verdict::Accept((g, s)),
            SearchOutcome::Absent => Verdict::Reject,
            SearchOutcome::Inconclusive => Verdict::Undecided,
        })
    })
}
