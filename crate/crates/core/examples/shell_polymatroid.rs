// Recursive construction of M-shellings for discrete polymatroids, showing
// each split (variable, power, maximal-element counts) and the final order.
//
//     cargo run --example shell_polymatroid

use mshell::{shell_polymatroid_traced, verify_m_shelling, Monomial, OrderIdeal};

fn main() -> Result<(), mshell::Error> {
    run_example()
}

pub fn run_example() -> Result<(), mshell::Error> {
    let m = |e: &[u32]| Monomial::new(e.to_vec());
    let examples = [
        vec![m(&[1, 1, 0]), m(&[0, 1, 1])],
        vec![m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 1, 1])],
        vec![m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1])],
        vec![m(&[2, 1, 0]), m(&[1, 2, 0]), m(&[1, 1, 1]), m(&[2, 0, 1])],
    ];
    for gens in examples {
        let g = OrderIdeal::from_generators(3, gens)?;
        let (shelling, splits) = shell_polymatroid_traced(&g)?;
        println!("ideal with maximal {:?} ({} members)", g.maximal(), g.len());
        for s in &splits {
            println!(
                "  {:indent$}split on x{}^{}: {} maximal -> {} + {}",
                "",
                s.variable + 1,
                s.power,
                s.parent_maximal,
                s.lower_maximal,
                s.upper_maximal,
                indent = 2 * s.depth
            );
        }
        for ivl in &shelling.intervals {
            println!("  [{}, {}]", ivl.bottom, ivl.top);
        }
        let report = verify_m_shelling(&g, &shelling);
        println!("  verified: {}", report.valid);
        assert!(report.valid);
    }
    Ok(())
}
