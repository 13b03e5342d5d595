//! M-shellings of discrete polymatroids.
//!
//! Monomial order ideals are stored explicitly (every member, in graded-lex
//! order). On top of them the crate provides:
//!
//! - [`polymatroid`]: the discrete-polymatroid exchange test and an exhaustive
//!   enumerator of small discrete polymatroids;
//! - [`shelling`]: a recursive constructor of M-shellings for discrete
//!   polymatroids, a verifier for arbitrary claimed shellings, and an
//!   independent backtracking oracle;
//! - [`hvector`]: f/h-vector transforms and bounded witness searches for pure
//!   M-vectors, PM-vectors and shellable M-vectors;
//! - [`lpm`]: lattice path matroids, their h-vectors, and the end-to-end
//!   certificate pipeline from a pair of bounding paths to a verified shelling;
//! - [`cli`]: the JSON-in/JSON-out front end used by the `mshell` binary.
//!
//! Everything is deterministic: identical inputs produce identical outputs.

pub mod cli;
pub mod error;
pub mod hvector;
pub mod lpm;
pub mod monomial;
pub mod polymatroid;
pub mod shelling;

pub use error::{Error, Result};
pub use hvector::{
    f_to_h, find_pm_witness, find_pure_order_ideal_witness, find_shellable_witness, h_to_f,
    SearchBounds, SearchOutcome,
};
pub use lpm::{
    build_matroid, corollary3_check, paths_between, BaseFamily, Corollary3Report,
    Corollary3Status, LatticePath, LatticePathMatroid, Step,
};
pub use monomial::{DegreeVector, IdealSpec, Monomial, OrderIdeal};
pub use polymatroid::{
    enumerate_discrete_polymatroids, is_discrete_polymatroid, PolymatroidFailure,
    PolymatroidReport,
};
pub use shelling::{
    is_m_shellable_bruteforce, shell_polymatroid, shell_polymatroid_traced,
    shelling_degree_polynomial, verify_m_shelling, MShelling, ShellingCertificate, ShellingInterval, SplitStep,
    VerificationReport,
};

/// Default cap on the number of monomials an order ideal may hold.
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

/// Default cap on the ideal size accepted by the brute-force shelling oracle.
pub const DEFAULT_ORACLE_CAP: usize = 200;

/// Size limits shared by constructors and searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub closure_cap: usize,
    pub oracle_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            closure_cap: DEFAULT_CLOSURE_CAP,
            oracle_cap: DEFAULT_ORACLE_CAP,
        }
    }
}
