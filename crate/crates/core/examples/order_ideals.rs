// Monomial order ideals: closure under divisors, maximal elements, purity,
// degree sequences and divisor intervals.
//
//     cargo run --example order_ideals

use mshell::{Monomial, OrderIdeal};

fn main() -> Result<(), mshell::Error> {
    run_example()
}

pub fn run_example() -> Result<(), mshell::Error> {
    let xy = Monomial::new(vec![1, 1, 0]);
    let z2 = Monomial::new(vec![0, 0, 2]);
    let ideal = OrderIdeal::from_generators(3, [xy.clone(), z2.clone()])?;

    println!("generators {xy}, {z2}");
    let members: Vec<String> = ideal.members().iter().map(|m| m.to_string()).collect();
    println!("members (graded-lex): {}", members.join(" "));
    println!("maximal: {:?}", ideal.maximal());
    println!("pure: {}", ideal.is_pure()?);
    println!("degree sequence: {}", ideal.degree_sequence());

    let one = Monomial::one(3);
    let box_ = ideal.interval_members(&one, &xy)?;
    println!("[1, {xy}] has {} members", box_.len());

    let mixed = OrderIdeal::from_generators(3, [Monomial::variable(3, 0), Monomial::new(vec![0, 1, 1])])?;
    println!("x1 with x2*x3 is pure: {}", mixed.is_pure()?);

    println!("json: {}", serde_json::to_string(&ideal).expect("serializable"));
    Ok(())
}
