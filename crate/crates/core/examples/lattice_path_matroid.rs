// Lattice path matroids M[P, Q]: the paths between two bounding paths, the
// bases they induce, the exchange axiom, and the f- and h-vectors.
//
//     cargo run --example lattice_path_matroid

use mshell::{build_matroid, paths_between, BaseFamily, LatticePath};

fn main() -> Result<(), mshell::Error> {
    run_example()
}

pub fn run_example() -> Result<(), mshell::Error> {
    let p = LatticePath::parse("EENN", 2, 2)?;
    let q = LatticePath::parse("NNEE", 2, 2)?;
    for r in paths_between(&p, &q)? {
        println!("  {r}  north steps {:?}", r.north_steps());
    }
    let matroid = build_matroid(&p, &q)?;
    println!("M[{p}, {q}]: {} bases", matroid.base_family().len());
    println!("exchange axiom holds: {}", matroid.check_base_exchange()?);
    println!("f = {}  h = {}", matroid.f_vector(), matroid.h_vector()?);

    let p = LatticePath::parse("EENENN", 3, 3)?;
    let q = LatticePath::parse("NENNEE", 3, 3)?;
    let m2 = build_matroid(&p, &q)?;
    println!(
        "M[{p}, {q}]: {} bases, f = {}, h = {}",
        m2.base_family().len(),
        m2.f_vector(),
        m2.h_vector()?
    );

    let not_a_matroid = BaseFamily::new(4, [[1, 2].into(), [3, 4].into()])?;
    println!(
        "{{12, 34}} violation: {:?}",
        not_a_matroid.exchange_violation()?
    );
    Ok(())
}
