//! Lattice path matroids `M[P, Q]`.
//!
//! A lattice path from `(0,0)` to `(m,r)` is a word of `m` east and `r` north
//! steps. Given `P` never above `Q`, the bases of `M[P, Q]` are the sets of
//! north-step positions (1-based) of the paths lying between them.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hvector::{f_to_h, find_pm_witness, SearchBounds, SearchOutcome};
use crate::monomial::DegreeVector;
use crate::polymatroid::{is_discrete_polymatroid, PolymatroidReport};
use crate::shelling::{shell_polymatroid, verify_m_shelling, ShellingCertificate, VerificationReport};

/// Largest ground set (`m + r`) accepted for matroid constructions.
pub const MAX_GROUND_SIZE: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    E,
    N,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
    east: usize,
    north: usize,
}

impl LatticePath {
    /// Parses a word over `{E, N}` that must contain exactly `m` E's and `r` N's.
    pub fn parse(s: &str, m: usize, r: usize) -> Result<Self> {
        let path: LatticePath = s.parse()?;
        if path.east != m || path.north != r {
            return Err(Error::Parse(format!(
                "path {s:?} ends at ({}, {}), expected ({m}, {r})",
                path.east, path.north
            )));
        }
        Ok(path)
    }

    pub fn from_steps(steps: Vec<Step>) -> Self {
        let north = steps.iter().filter(|&&s| s == Step::N).count();
        LatticePath {
            east: steps.len() - north,
            north,
            steps,
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn east(&self) -> usize {
        self.east
    }

    pub fn north(&self) -> usize {
        self.north
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `heights()[t]` is the number of N steps among the first `t` steps.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(0);
        let mut h = 0;
        for s in &self.steps {
            if *s == Step::N {
                h += 1;
            }
            out.push(h);
        }
        out
    }

    /// 1-based positions of the north steps.
    pub fn north_steps(&self) -> BTreeSet<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Step::N)
            .map(|(i, _)| i + 1)
            .collect()
    }

    fn check_shape(&self, other: &LatticePath) -> Result<()> {
        if (self.east, self.north) != (other.east, other.north) {
            return Err(Error::Domain(format!(
                "paths end at ({}, {}) and ({}, {})",
                self.east, self.north, other.east, other.north
            )));
        }
        Ok(())
    }

    /// True iff no prefix of `self` has more N steps than the same prefix of `other`.
    pub fn never_above(&self, other: &LatticePath) -> Result<bool> {
        self.check_shape(other)?;
        Ok(self
            .heights()
            .iter()
            .zip(other.heights())
            .all(|(a, b)| *a <= b))
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'E' => Ok(Step::E),
                'N' => Ok(Step::N),
                other => Err(Error::Parse(format!("invalid step {other:?} in path {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePath::from_steps(steps))
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::E => "E",
                Step::N => "N",
            })?;
        }
        Ok(())
    }
}

impl Serialize for LatticePath {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LatticePath {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Paths between two bounding paths in lexicographic step order (E < N).
pub struct PathsBetween {
    low: Vec<usize>,
    high: Vec<usize>,
    next: Option<Vec<Step>>,
}

/// All paths `R` with `P` never above `R` and `R` never above `Q`.
pub fn paths_between(lower: &LatticePath, upper: &LatticePath) -> Result<PathsBetween> {
    if !lower.never_above(upper)? {
        return Err(Error::Domain(format!("{lower} goes above {upper}")));
    }
    let mut it = PathsBetween {
        low: lower.heights(),
        high: upper.heights(),
        next: None,
    };
    let mut first = Vec::with_capacity(lower.len());
    it.complete(&mut first, 0);
    it.next = Some(first);
    Ok(it)
}

impl PathsBetween {
    /// Extends `steps` (currently at height `h`) greedily, preferring E.
    fn complete(&self, steps: &mut Vec<Step>, mut h: usize) {
        while steps.len() < self.low.len() - 1 {
            let t = steps.len() + 1;
            if h >= self.low[t] {
                steps.push(Step::E);
            } else {
                steps.push(Step::N);
                h += 1;
            }
        }
    }
}

impl Iterator for PathsBetween {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        let current = self.next.take()?;
        let mut heights = Vec::with_capacity(current.len() + 1);
        heights.push(0);
        for s in &current {
            heights.push(heights.last().unwrap() + usize::from(*s == Step::N));
        }
        // Lexicographic successor: flip the last E that can become N, then
        // refill greedily.
        for t in (0..current.len()).rev() {
            if current[t] == Step::E && heights[t] < self.high[t + 1] {
                let mut succ = current[..t].to_vec();
                succ.push(Step::N);
                self.complete(&mut succ, heights[t] + 1);
                self.next = Some(succ);
                break;
            }
        }
        Some(LatticePath::from_steps(current))
    }
}

/// A family of subsets of `{1, ..., ground_size}` claimed to be matroid bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseFamily {
    ground_size: usize,
    masks: BTreeSet<u32>,
}

/// A failure of the exchange axiom: no `y` in `B' - B` makes `B - x + y` a basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeViolation {
    pub basis: BTreeSet<usize>,
    pub other: BTreeSet<usize>,
    pub element: usize,
}

fn to_mask(set: &BTreeSet<usize>) -> u32 {
    set.iter().fold(0, |acc, &e| acc | 1 << (e - 1))
}

fn from_mask(mask: u32) -> BTreeSet<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

impl BaseFamily {
    pub fn new<I>(ground_size: usize, bases: I) -> Result<Self>
    where
        I: IntoIterator<Item = BTreeSet<usize>>,
    {
        if ground_size > MAX_GROUND_SIZE {
            return Err(Error::Size {
                what: "ground set",
                cap: MAX_GROUND_SIZE,
                requested: ground_size as u128,
            });
        }
        let mut masks = BTreeSet::new();
        for b in bases {
            if let Some(&e) = b.iter().find(|&&e| e == 0 || e > ground_size) {
                return Err(Error::Domain(format!(
                    "element {e} outside the ground set 1..={ground_size}"
                )));
            }
            masks.insert(to_mask(&b));
        }
        Ok(BaseFamily { ground_size, masks })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// Bases as sorted 1-based element sets, in lexicographic order.
    pub fn bases(&self) -> Vec<BTreeSet<usize>> {
        let mut out: Vec<_> = self.masks.iter().map(|&m| from_mask(m)).collect();
        out.sort();
        out
    }

    pub fn rank(&self) -> usize {
        self.masks.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0)
    }

    /// First violation of the exchange axiom, scanning ordered pairs of bases
    /// in lexicographic order. Errors if the family is empty.
    pub fn exchange_violation(&self) -> Result<Option<ExchangeViolation>> {
        if self.masks.is_empty() {
            return Err(Error::Domain("axiom (B1) fails: no bases".into()));
        }
        let bases: Vec<u32> = self.bases().iter().map(to_mask).collect();
        let lookup: HashSet<u32> = bases.iter().copied().collect();
        for &b in &bases {
            for &other in &bases {
                if b == other {
                    continue;
                }
                let gains = other & !b;
                let mut losses = b & !other;
                while losses != 0 {
                    let x = losses.trailing_zeros();
                    losses &= losses - 1;
                    let without = b & !(1 << x);
                    let mut ys = gains;
                    let mut rescued = false;
                    while ys != 0 {
                        let y = ys.trailing_zeros();
                        ys &= ys - 1;
                        if lookup.contains(&(without | 1 << y)) {
                            rescued = true;
                            break;
                        }
                    }
                    if !rescued {
                        return Ok(Some(ExchangeViolation {
                            basis: from_mask(b),
                            other: from_mask(other),
                            element: x as usize + 1,
                        }));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Checks the exchange axiom on every ordered pair of distinct bases.
    pub fn check_base_exchange(&self) -> Result<bool> {
        Ok(self.exchange_violation()?.is_none())
    }

    /// `f_i` = number of `i`-element sets contained in some basis; `f_0 = 1`.
    pub fn f_vector(&self) -> DegreeVector {
        let mut counts = vec![0i64; self.rank() + 1];
        let mut seen: HashSet<u32> = HashSet::new();
        let mut stack: Vec<u32> = self.masks.iter().copied().collect();
        while let Some(s) = stack.pop() {
            if !seen.insert(s) {
                continue;
            }
            counts[s.count_ones() as usize] += 1;
            let mut rest = s;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let sub = s & !bit;
                if !seen.contains(&sub) {
                    stack.push(sub);
                }
            }
        }
        DegreeVector::new(counts)
    }

    /// h-vector of the complex of independent sets.
    pub fn h_vector(&self) -> Result<DegreeVector> {
        if self.masks.is_empty() {
            return Err(Error::Domain("axiom (B1) fails: no bases".into()));
        }
        f_to_h(&self.f_vector())
    }
}

impl Serialize for BaseFamily {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.bases().serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticePathMatroid {
    #[serde(rename = "P")]
    lower: LatticePath,
    #[serde(rename = "Q")]
    upper: LatticePath,
    bases: BaseFamily,
}

impl LatticePathMatroid {
    pub fn lower(&self) -> &LatticePath {
        &self.lower
    }

    pub fn upper(&self) -> &LatticePath {
        &self.upper
    }

    pub fn ground_size(&self) -> usize {
        self.bases.ground_size()
    }

    pub fn base_family(&self) -> &BaseFamily {
        &self.bases
    }

    pub fn check_base_exchange(&self) -> Result<bool> {
        self.bases.check_base_exchange()
    }

    pub fn f_vector(&self) -> DegreeVector {
        self.bases.f_vector()
    }

    pub fn h_vector(&self) -> Result<DegreeVector> {
        self.bases.h_vector()
    }
}

/// Collects `N(R)` over every path `R` between `lower` and `upper`.
pub fn build_matroid(lower: &LatticePath, upper: &LatticePath) -> Result<LatticePathMatroid> {
    let ground = lower.len();
    if ground > MAX_GROUND_SIZE {
        return Err(Error::Size {
            what: "ground set",
            cap: MAX_GROUND_SIZE,
            requested: ground as u128,
        });
    }
    let paths = paths_between(lower, upper)?;
    let bases = BaseFamily::new(ground, paths.map(|r| r.north_steps()))?;
    Ok(LatticePathMatroid {
        lower: lower.clone(),
        upper: upper.clone(),
        bases,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Corollary3Status {
    /// PM witness found and its shelling verified.
    Found,
    /// Search bounds stopped the witness search.
    Inconclusive,
    /// The witness search completed without a discrete polymatroid.
    Absent,
    /// A certificate was produced but failed re-verification.
    Invalid,
}

impl Corollary3Status {
    /// True for outcomes where a lattice path matroid h-vector lacks a certificate.
    pub fn is_anomaly(self) -> bool {
        matches!(self, Corollary3Status::Absent | Corollary3Status::Invalid)
    }
}

/// Certificate chain from a lattice path matroid to a verified M-shelling.
#[derive(Debug, Clone, Serialize)]
pub struct Corollary3Report {
    #[serde(rename = "P")]
    pub lower: LatticePath,
    #[serde(rename = "Q")]
    pub upper: LatticePath,
    pub f_vector: DegreeVector,
    pub h_vector: DegreeVector,
    pub status: Corollary3Status,
    pub anomaly: bool,
    pub certificate: Option<ShellingCertificate>,
    pub polymatroid: Option<PolymatroidReport>,
    pub verification: Option<VerificationReport>,
}

/// Computes the h-vector of `M[lower, upper]`, searches for a discrete
/// polymatroid with that degree sequence, shells it, and verifies the shelling.
pub fn corollary3_check(
    lower: &LatticePath,
    upper: &LatticePath,
    bounds: &SearchBounds,
) -> Result<Corollary3Report> {
    let matroid = build_matroid(lower, upper)?;
    let f_vector = matroid.f_vector();
    let h_vector = f_to_h(&f_vector)?;
    let mut report = Corollary3Report {
        lower: lower.clone(),
        upper: upper.clone(),
        f_vector,
        h_vector,
        status: Corollary3Status::Inconclusive,
        anomaly: false,
        certificate: None,
        polymatroid: None,
        verification: None,
    };
    match find_pm_witness(&report.h_vector, bounds)? {
        SearchOutcome::Inconclusive => {}
        SearchOutcome::Absent => report.status = Corollary3Status::Absent,
        SearchOutcome::Found(ideal) => {
            let pm = is_discrete_polymatroid(&ideal)?;
            let shelling = shell_polymatroid(&ideal)?;
            let verification = verify_m_shelling(&ideal, &shelling);
            let sound = pm.holds
                && verification.valid
                && ideal.degree_sequence().same_sequence(&report.h_vector);
            report.status = if sound {
                Corollary3Status::Found
            } else {
                Corollary3Status::Invalid
            };
            report.polymatroid = Some(pm);
            report.verification = Some(verification);
            report.certificate = Some(ShellingCertificate { ideal, shelling });
        }
    }
    report.anomaly = report.status.is_anomaly();
    Ok(report)
}
