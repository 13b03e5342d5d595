//! Independent reference implementations used as test oracles. Nothing here
//! calls into the code paths it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use mshell::{LatticePath, MShelling, Monomial, OrderIdeal, Step};

pub fn m(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

pub fn ideal(n: usize, gens: &[&[u32]]) -> OrderIdeal {
    OrderIdeal::from_generators(n, gens.iter().map(|g| m(g))).unwrap()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Set of exponent vectors `v` with `a <= v <= b`, by filtering the whole ideal.
fn interval_by_filter(members: &BTreeSet<Vec<u32>>, a: &[u32], b: &[u32]) -> BTreeSet<Vec<u32>> {
    members
        .iter()
        .filter(|v| divides(a, v) && divides(v, b))
        .cloned()
        .collect()
}

fn is_order_ideal(set: &BTreeSet<Vec<u32>>) -> bool {
    // Every divisor (not just lower covers) of every member is present.
    set.iter().all(|v| {
        let mut ok = true;
        let mut d = vec![0u32; v.len()];
        loop {
            ok &= set.contains(&d);
            let mut i = 0;
            while i < d.len() && d[i] == v[i] {
                d[i] = 0;
                i += 1;
            }
            if i == d.len() {
                break;
            }
            d[i] += 1;
        }
        ok
    })
}

/// Definition-level M-shelling check: tops maximal, intervals partition the
/// ideal, every prefix union is an order ideal.
pub fn naive_is_m_shelling(g: &OrderIdeal, s: &MShelling) -> bool {
    let members: BTreeSet<Vec<u32>> = g.members().iter().map(|x| x.exponents().to_vec()).collect();
    let maximal: BTreeSet<Vec<u32>> = members
        .iter()
        .filter(|v| !members.iter().any(|w| w != *v && divides(v, w)))
        .cloned()
        .collect();
    let mut union: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut total = 0usize;
    for ivl in &s.intervals {
        let a = ivl.bottom.exponents();
        let b = ivl.top.exponents();
        if a.len() != g.variables() || b.len() != g.variables() {
            return false;
        }
        if !divides(a, b) || !maximal.contains(b) {
            return false;
        }
        let part = interval_by_filter(&members, a, b);
        total += part.len();
        union.extend(part);
        if !is_order_ideal(&union) {
            return false;
        }
    }
    total == members.len() && union == members
}

/// Every path with `east` E steps and `north` N steps, by filtering all step
/// words of the right length.
pub fn all_paths(east: usize, north: usize) -> Vec<LatticePath> {
    let len = east + north;
    (0u32..1 << len)
        .filter(|w| w.count_ones() as usize == north)
        .map(|w| {
            LatticePath::from_steps(
                (0..len)
                    .map(|i| if w >> i & 1 == 1 { Step::N } else { Step::E })
                    .collect(),
            )
        })
        .collect()
}

/// Prefix heights compared directly.
pub fn weakly_below(a: &LatticePath, b: &LatticePath) -> bool {
    let mut ha = 0;
    let mut hb = 0;
    for (x, y) in a.steps().iter().zip(b.steps()) {
        ha += usize::from(*x == Step::N);
        hb += usize::from(*y == Step::N);
        if ha > hb {
            return false;
        }
    }
    true
}

/// `sum c_i y^(d-i)` with `d = len - 1`.
pub fn eval_descending(coeffs: &[i64], y: i128) -> i128 {
    coeffs.iter().fold(0i128, |acc, &c| acc * y + i128::from(c))
}

/// Counts subsets of `{1..ground}` contained in some basis, by size.
pub fn brute_f_vector(ground: usize, bases: &[BTreeSet<usize>]) -> Vec<i64> {
    let rank = bases.iter().map(|b| b.len()).max().unwrap_or(0);
    let mut f = vec![0i64; rank + 1];
    for mask in 0u32..1 << ground {
        let s: BTreeSet<usize> = (0..ground).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        if bases.iter().any(|b| s.is_subset(b)) {
            f[s.len()] += 1;
        }
    }
    f
}

/// Applies a variable permutation: exponent `i` moves to slot `perm[i]`.
pub fn permute(x: &Monomial, perm: &[usize]) -> Monomial {
    let mut e = vec![0; x.arity()];
    for (i, &v) in x.exponents().iter().enumerate() {
        e[perm[i]] = v;
    }
    Monomial::new(e)
}

pub fn permute_ideal(g: &OrderIdeal, perm: &[usize]) -> OrderIdeal {
    OrderIdeal::from_generators(g.variables(), g.maximal().iter().map(|x| permute(x, perm))).unwrap()
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Discrete-polymatroid test straight from the definition, over member sets.
pub fn naive_is_discrete_polymatroid(g: &OrderIdeal) -> bool {
    let members: BTreeSet<Vec<u32>> = g.members().iter().map(|x| x.exponents().to_vec()).collect();
    let maximal: Vec<&Vec<u32>> = members
        .iter()
        .filter(|v| !members.iter().any(|w| w != *v && divides(v, w)))
        .collect();
    let deg = |v: &Vec<u32>| v.iter().map(|&e| u64::from(e)).sum::<u64>();
    if maximal.iter().any(|v| deg(v) != deg(maximal[0])) {
        return false;
    }
    let n = g.variables();
    for a in &maximal {
        for b in &maximal {
            for i in 0..n {
                if a[i] <= b[i] {
                    continue;
                }
                let ok = (0..n).any(|j| {
                    if a[j] >= b[j] {
                        return false;
                    }
                    let mut c = (*a).clone();
                    c[i] -= 1;
                    c[j] += 1;
                    members.contains(&c)
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Forward exhaustive search for an M-shelling: repeatedly append any
/// interval under an unused maximal top that keeps the union an order ideal.
pub fn naive_is_m_shellable(g: &OrderIdeal) -> bool {
    let members: BTreeSet<Vec<u32>> = g.members().iter().map(|x| x.exponents().to_vec()).collect();
    let maximal: Vec<Vec<u32>> = members
        .iter()
        .filter(|v| !members.iter().any(|w| w != *v && divides(v, w)))
        .cloned()
        .collect();

    fn go(
        members: &BTreeSet<Vec<u32>>,
        maximal: &[Vec<u32>],
        used: &mut Vec<bool>,
        union: &BTreeSet<Vec<u32>>,
    ) -> bool {
        if union.len() == members.len() {
            return true;
        }
        for t in 0..maximal.len() {
            if used[t] {
                continue;
            }
            let top = &maximal[t];
            for bottom in members.iter().filter(|a| divides(a, top)) {
                let part = interval_by_filter(members, bottom, top);
                if part.iter().any(|x| union.contains(x)) {
                    continue;
                }
                let mut next = union.clone();
                next.extend(part);
                if !is_order_ideal(&next) {
                    continue;
                }
                used[t] = true;
                if go(members, maximal, used, &next) {
                    return true;
                }
                used[t] = false;
            }
        }
        false
    }

    let mut used = vec![false; maximal.len()];
    go(&members, &maximal, &mut used, &BTreeSet::new())
}

/// Every monomial of degree `d` on `n` variables, by filtering a box.
pub fn degree_d_monomials(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    loop {
        if e.iter().sum::<u32>() == d {
            out.push(Monomial::new(e.clone()));
        }
        let mut i = 0;
        while i < n && e[i] == d {
            e[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        e[i] += 1;
    }
    out
}

/// Every nonempty generator subset of degree-`d` monomials on `n` variables.
pub fn all_equigenerated_ideals(n: usize, d: u32) -> Vec<OrderIdeal> {
    let cands = degree_d_monomials(n, d);
    (1u64..1 << cands.len())
        .map(|mask| {
            let gens = (0..cands.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| cands[i].clone());
            OrderIdeal::from_generators(n, gens).unwrap()
        })
        .collect()
}
