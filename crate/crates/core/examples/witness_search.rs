// Bounded witness searches: is a vector the degree sequence of a pure order
// ideal, of a discrete polymatroid, or of an M-shellable ideal? Also tabulates
// the two classes on short vectors.
//
//     cargo run --example witness_search

use mshell::{
    find_pm_witness, find_pure_order_ideal_witness, find_shellable_witness, DegreeVector,
    SearchBounds, DEFAULT_ORACLE_CAP,
};

fn main() -> Result<(), mshell::Error> {
    run_example()
}

pub fn run_example() -> Result<(), mshell::Error> {
    let bounds = SearchBounds::default();
    for h in [vec![1, 3, 2], vec![1, 2, 3], vec![1, 0, 1], vec![1, 3, 4, 2]] {
        let h = DegreeVector::new(h);
        let pure = find_pure_order_ideal_witness(&h, &bounds)?;
        let pm = find_pm_witness(&h, &bounds)?;
        let shellable = find_shellable_witness(&h, &bounds, DEFAULT_ORACLE_CAP)?;
        println!(
            "{h}: pure {} {:?}, pm {} {:?}, shellable {}",
            pure.status(),
            pure.as_found().map(|g| g.maximal().to_vec()),
            pm.status(),
            pm.as_found().map(|g| g.maximal().to_vec()),
            shellable.status(),
        );
    }

    // Vectors (1, a, b) with a <= 3: which are PM-vectors, which shellable?
    println!();
    println!("  h          pm            shellable");
    for a in 1..=3 {
        for b in 1..=a * (a + 1) / 2 {
            let h = DegreeVector::new(vec![1, a, b]);
            let pm = find_pm_witness(&h, &bounds)?;
            let sh = find_shellable_witness(&h, &bounds, DEFAULT_ORACLE_CAP)?;
            println!("  {:<10} {:<13} {}", h.to_string(), pm.status(), sh.status());
        }
    }
    Ok(())
}
