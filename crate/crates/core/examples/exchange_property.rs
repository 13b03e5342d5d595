// The discrete-polymatroid exchange test, with failure witnesses, and a census
// of all small discrete polymatroids.
//
//     cargo run --example exchange_property

use mshell::{enumerate_discrete_polymatroids, is_discrete_polymatroid, Monomial, OrderIdeal};

fn main() -> Result<(), mshell::Error> {
    run_example()
}

pub fn run_example() -> Result<(), mshell::Error> {
    let m = |e: &[u32]| Monomial::new(e.to_vec());
    let cases = [
        ("xy, z^2", vec![m(&[1, 1, 0]), m(&[0, 0, 2])]),
        ("xy, yz", vec![m(&[1, 1, 0]), m(&[0, 1, 1])]),
        ("x^2, y^2", vec![m(&[2, 0, 0]), m(&[0, 2, 0])]),
        ("x, yz", vec![m(&[1, 0, 0]), m(&[0, 1, 1])]),
    ];
    for (name, gens) in cases {
        let g = OrderIdeal::from_generators(3, gens)?;
        let report = is_discrete_polymatroid(&g)?;
        println!(
            "{name:>10}: {}",
            serde_json::to_string(&report).expect("serializable")
        );
    }

    println!();
    println!("discrete polymatroids generated in degree d on n variables");
    println!("   n  d  count");
    for n in 1..=3 {
        for d in 1..=3 {
            let count = enumerate_discrete_polymatroids(n, d, usize::MAX)?.count();
            println!("  {n:2} {d:2} {count:6}");
        }
    }
    Ok(())
}
