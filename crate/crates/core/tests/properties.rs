mod common;

use common::*;
use mshell::monomial::is_downward_closed;
use mshell::{
    enumerate_discrete_polymatroids, f_to_h, h_to_f, is_discrete_polymatroid, shell_polymatroid,
    shelling_degree_polynomial, verify_m_shelling, DegreeVector, MShelling, Monomial, OrderIdeal,
    PolymatroidFailure, ShellingInterval,
};
use proptest::prelude::*;

fn monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

fn small_ideal() -> impl Strategy<Value = OrderIdeal> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(monomial(n, 3), 1..5)
            .prop_map(move |gens| OrderIdeal::from_generators(n, gens).unwrap())
    })
}

fn all_small_polymatroids() -> Vec<OrderIdeal> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for d in 0..=3 {
            out.extend(enumerate_discrete_polymatroids(n, d, usize::MAX).unwrap());
        }
    }
    out
}

proptest! {
    #[test]
    fn closure_is_downward_closed(g in small_ideal()) {
        prop_assert!(is_downward_closed(g.variables(), g.members()));
        prop_assert!(g.contains(&Monomial::one(g.variables())));
        for x in g.members() {
            let dominated = g.members().iter().any(|y| y != x && x.divides(y).unwrap());
            prop_assert_eq!(g.maximal().contains(x), !dominated);
        }
    }

    #[test]
    fn rebuilding_from_maximal_is_idempotent(g in small_ideal()) {
        let again = OrderIdeal::from_generators(g.variables(), g.maximal().to_vec()).unwrap();
        prop_assert_eq!(again.members(), g.members());
    }

    #[test]
    fn degree_sequence_counts_members(g in small_ideal()) {
        prop_assert_eq!(g.degree_sequence().total(), g.len() as i64);
    }

    #[test]
    fn interval_size_is_product_of_chain_lengths(
        (a, b) in (1usize..=4).prop_flat_map(|n| (monomial(n, 2), monomial(n, 2)))
    ) {
        let top = a.product(&b).unwrap();
        let g = OrderIdeal::from_generators(top.arity(), [top.clone()]).unwrap();
        let members = g.interval_members(&a, &top).unwrap();
        let expected: usize = a
            .exponents()
            .iter()
            .zip(top.exponents())
            .map(|(x, y)| (y - x + 1) as usize)
            .product();
        prop_assert_eq!(members.len(), expected);
        let ivl = ShellingInterval::new(a, top).unwrap();
        prop_assert_eq!(ivl.degree_vector().unwrap().total(), expected as i64);
    }

    #[test]
    fn exchange_witness_rechecks(g in small_ideal()) {
        let report = is_discrete_polymatroid(&g).unwrap();
        prop_assert_eq!(report.holds, report.witness.is_none());
        prop_assert_eq!(report.holds, naive_is_discrete_polymatroid(&g));
        if let Some(w) = &report.witness {
            prop_assert!(w.is_violated_in(&g));
        }
    }

    #[test]
    fn exchange_is_relabeling_invariant(g in small_ideal(), seed in any::<u64>()) {
        let perms = permutations(g.variables());
        let perm = &perms[(seed % perms.len() as u64) as usize];
        let h = permute_ideal(&g, perm);
        let a = is_discrete_polymatroid(&g).unwrap();
        let b = is_discrete_polymatroid(&h).unwrap();
        prop_assert_eq!(a.holds, b.holds);
        // The witness of g, pushed through the permutation, still violates h.
        if let Some(PolymatroidFailure::Exchange { m, m_prime, index }) = a.witness {
            let moved = PolymatroidFailure::Exchange {
                m: permute(&m, perm),
                m_prime: permute(&m_prime, perm),
                index: perm[index],
            };
            prop_assert!(moved.is_violated_in(&h));
        }
    }

    #[test]
    fn transforms_round_trip(tail in prop::collection::vec(-50i64..50, 0..7)) {
        let mut v = vec![1];
        v.extend(tail);
        let v = DegreeVector::new(v);
        let h = f_to_h(&v).unwrap();
        prop_assert_eq!(&h_to_f(&h).unwrap(), &v);
        prop_assert_eq!(&f_to_h(&h_to_f(&v).unwrap()).unwrap(), &v);
        for y in -3..=3i128 {
            prop_assert_eq!(eval_descending(v.entries(), y - 1), eval_descending(h.entries(), y));
        }
    }

    /// The verifier agrees with the definition on arbitrary interval lists.
    #[test]
    fn verifier_matches_definition(
        g in small_ideal(),
        picks in prop::collection::vec((any::<usize>(), any::<usize>()), 0..5),
    ) {
        let maximal = g.maximal();
        let intervals: Vec<ShellingInterval> = picks
            .iter()
            .map(|&(t, b)| {
                let top = maximal[t % maximal.len()].clone();
                let mut bottoms: Vec<Monomial> = g
                    .members()
                    .iter()
                    .filter(|x| x.divides(&top).unwrap())
                    .cloned()
                    .collect();
                bottoms.sort();
                ShellingInterval::new(bottoms[b % bottoms.len()].clone(), top).unwrap()
            })
            .collect();
        let s = MShelling::new(intervals);
        prop_assert_eq!(verify_m_shelling(&g, &s).valid, naive_is_m_shelling(&g, &s));
    }
}

#[test]
fn shelling_conserves_degree_sequence() {
    for g in all_small_polymatroids() {
        let s = shell_polymatroid(&g).unwrap();
        assert_eq!(shelling_degree_polynomial(&s).unwrap(), g.degree_sequence(), "{g:?}");
    }
}

#[test]
fn permuted_orders_of_a_valid_shelling() {
    // Reordering the intervals of a valid shelling keeps the partition, so the
    // verifier's verdict must match the definition on every order.
    let g = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
    let s = shell_polymatroid(&g).unwrap();
    let mut valid = 0;
    for perm in permutations(s.len()) {
        let reordered = MShelling::new(perm.iter().map(|&i| s.intervals[i].clone()).collect());
        let verdict = verify_m_shelling(&g, &reordered).valid;
        assert_eq!(verdict, naive_is_m_shelling(&g, &reordered));
        valid += usize::from(verdict);
    }
    assert!(valid >= 1);
}
