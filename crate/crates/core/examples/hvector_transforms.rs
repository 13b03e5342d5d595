// f-vector <-> h-vector via H(y) = F(y - 1), on a few simplicial complexes.
//
//     cargo run --example hvector_transforms

use mshell::{f_to_h, h_to_f, DegreeVector};

fn main() -> Result<(), mshell::Error> {
    run_example()
}

pub fn run_example() -> Result<(), mshell::Error> {
    let complexes = [
        ("point", vec![1]),
        ("two points", vec![1, 2]),
        ("boundary of a square", vec![1, 4, 4]),
        ("complete graph K4", vec![1, 4, 6]),
        ("triangle (full)", vec![1, 3, 3, 1]),
        ("boundary of a tetrahedron", vec![1, 4, 6, 4]),
    ];
    for (name, f) in complexes {
        let f = DegreeVector::new(f);
        let h = f_to_h(&f)?;
        let back = h_to_f(&h)?;
        println!("{name:>26}: f = {f}  h = {h}  round trip ok: {}", back == f);
    }
    Ok(())
}
