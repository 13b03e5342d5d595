// An order ideal that is M-shellable without being a discrete polymatroid:
// maximal elements xy and z^2. Its degree sequence (1,3,2) is nonetheless a
// PM-vector, realized by xy and yz.
//
//     cargo run --example converse_counterexample

use mshell::{
    find_pm_witness, is_discrete_polymatroid, is_m_shellable_bruteforce, shell_polymatroid,
    verify_m_shelling, Monomial, OrderIdeal, SearchBounds, DEFAULT_ORACLE_CAP,
};

fn main() -> Result<(), mshell::Error> {
    run_example()
}

pub fn run_example() -> Result<(), mshell::Error> {
    let m = |e: &[u32]| Monomial::new(e.to_vec());
    let sigma = OrderIdeal::from_generators(3, [m(&[1, 1, 0]), m(&[0, 0, 2])])?;

    let report = is_discrete_polymatroid(&sigma)?;
    println!("discrete polymatroid: {} (witness {:?})", report.holds, report.witness);
    println!("constructor refuses it: {}", shell_polymatroid(&sigma).is_err());

    let shelling = is_m_shellable_bruteforce(&sigma, DEFAULT_ORACLE_CAP)?
        .expect("sigma is M-shellable");
    for ivl in &shelling.intervals {
        println!("  [{}, {}]", ivl.bottom, ivl.top);
    }
    println!("oracle shelling verified: {}", verify_m_shelling(&sigma, &shelling).valid);

    let h = sigma.degree_sequence();
    let pm = find_pm_witness(&h, &SearchBounds::default())?;
    println!(
        "degree sequence {h}: PM witness {:?}",
        pm.as_found().map(|g| g.maximal().to_vec())
    );
    Ok(())
}
