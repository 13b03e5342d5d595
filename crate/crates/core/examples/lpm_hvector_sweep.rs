// For every pair of bounding paths with m + r <= 6: compute the lattice path
// matroid's h-vector, find a discrete polymatroid with that degree sequence,
// shell it, and verify the shelling.
//
//     cargo run --example lpm_hvector_sweep

use std::collections::BTreeMap;

use mshell::{corollary3_check, LatticePath, SearchBounds, Step};

fn main() -> Result<(), mshell::Error> {
    run_example()
}

fn paths(east: usize, north: usize) -> Vec<LatticePath> {
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

pub fn run_example() -> Result<(), mshell::Error> {
    let bounds = SearchBounds::default();
    let mut by_status: BTreeMap<String, usize> = BTreeMap::new();
    let mut h_vectors: BTreeMap<String, usize> = BTreeMap::new();
    for len in 0..=6 {
        for north in 0..=len {
            let all = paths(len - north, north);
            for p in &all {
                for q in &all {
                    if !p.never_above(q)? {
                        continue;
                    }
                    let report = corollary3_check(p, q, &bounds)?;
                    *by_status.entry(format!("{:?}", report.status)).or_default() += 1;
                    *h_vectors.entry(report.h_vector.to_string()).or_default() += 1;
                    if report.anomaly {
                        eprintln!("ANOMALY at M[{p}, {q}]");
                    }
                }
            }
        }
    }
    println!("status counts: {by_status:?}");
    println!("{} distinct h-vectors, e.g.:", h_vectors.len());
    for (h, count) in h_vectors.iter().take(12) {
        println!("  {h:<16} x{count}");
    }
    Ok(())
}
