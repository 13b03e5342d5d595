// Verifying claimed M-shellings. The verifier stops at the first failing check
// and names the offending interval and monomials.
//
//     cargo run --example verify_shelling

use mshell::{verify_m_shelling, MShelling, Monomial, OrderIdeal, ShellingInterval};

fn main() -> Result<(), mshell::Error> {
    run_example()
}

pub fn run_example() -> Result<(), mshell::Error> {
    let m = |e: &[u32]| Monomial::new(e.to_vec());
    let g = OrderIdeal::from_generators(3, [m(&[1, 1, 0]), m(&[0, 1, 1])])?;
    let first = ShellingInterval::new(m(&[0, 0, 0]), m(&[1, 1, 0]))?;
    let second = ShellingInterval::new(m(&[0, 0, 1]), m(&[0, 1, 1]))?;

    let good = MShelling::new(vec![first.clone(), second.clone()]);
    let swapped = MShelling::new(vec![second, first.clone()]);
    let partial = MShelling::new(vec![first]);

    for (name, s) in [("in order", &good), ("swapped", &swapped), ("partial", &partial)] {
        let report = verify_m_shelling(&g, s);
        match report.first_failure() {
            None => println!("{name}: valid"),
            Some(f) => println!(
                "{name}: invalid at {:?} (interval {:?}, witness {:?})",
                f.check, f.interval, f.witness
            ),
        }
    }
    println!(
        "report json: {}",
        serde_json::to_string(&verify_m_shelling(&g, &swapped)).expect("serializable")
    );
    Ok(())
}
