//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each, and
//! exits non-zero if any criterion fails.
//!
//!     cargo test -p mshell --test acceptance

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{all_paths, eval_descending, ideal, naive_is_m_shelling, weakly_below};
use mshell::{
    build_matroid, corollary3_check, enumerate_discrete_polymatroids, f_to_h, h_to_f,
    is_discrete_polymatroid, is_m_shellable_bruteforce, shell_polymatroid,
    shelling_degree_polynomial, verify_m_shelling, Corollary3Status, DegreeVector, Error,
    LatticePath, OrderIdeal, SearchBounds, DEFAULT_ORACLE_CAP,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn sigma() -> OrderIdeal {
    ideal(3, &[&[1, 1, 0], &[0, 0, 2]])
}

/// The discrete polymatroids with n <= 3 variables and generator degree d <= 3.
fn population() -> Vec<OrderIdeal> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for d in 0..=3 {
            out.extend(enumerate_discrete_polymatroids(n, d, usize::MAX).unwrap());
        }
    }
    out
}

fn ac1_sigma_golden() -> Outcome {
    let start = Instant::now();
    let g = sigma();
    let report = is_discrete_polymatroid(&g).map_err(|e| e.to_string())?;
    ensure(!report.holds, || "sigma reported as a discrete polymatroid".into())?;
    let witness = report.witness.ok_or("no exchange-failure witness")?;
    ensure(witness.is_violated_in(&g), || format!("witness {witness:?} does not re-check"))?;
    let s = is_m_shellable_bruteforce(&g, DEFAULT_ORACLE_CAP)
        .map_err(|e| e.to_string())?
        .ok_or("oracle found no shelling of sigma")?;
    ensure(verify_m_shelling(&g, &s).valid, || "oracle shelling rejected".into())?;
    ensure(naive_is_m_shelling(&g, &s), || "oracle shelling fails the definition".into())?;
    let h = g.degree_sequence();
    ensure(h.entries() == [1, 3, 2], || format!("degree sequence {h}"))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("witness {witness:?}, degree sequence {h}"))
}

fn ac2_pm_golden() -> Outcome {
    let start = Instant::now();
    let g = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
    let report = is_discrete_polymatroid(&g).map_err(|e| e.to_string())?;
    ensure(report.holds, || format!("exchange failed: {:?}", report.witness))?;
    let s = shell_polymatroid(&g).map_err(|e| e.to_string())?;
    ensure(verify_m_shelling(&g, &s).valid, || "shelling rejected".into())?;
    ensure(naive_is_m_shelling(&g, &s), || "shelling fails the definition".into())?;
    let poly = shelling_degree_polynomial(&s).map_err(|e| e.to_string())?;
    let h = g.degree_sequence();
    ensure(poly.entries() == [1, 3, 2] && poly == h, || format!("{poly} vs {h}"))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("{} intervals, degree polynomial {poly}", s.len()))
}

fn ac3_polymatroids_exhaustive() -> Outcome {
    let start = Instant::now();
    let pop = population();
    let mut claim_failures = 0;
    let mut failures = Vec::new();
    for g in &pop {
        match shell_polymatroid(g) {
            Ok(s) => {
                if !verify_m_shelling(g, &s).valid || !naive_is_m_shelling(g, &s) {
                    failures.push(format!("{:?}: invalid shelling", g.maximal()));
                }
            }
            Err(Error::Invariant(msg)) => {
                claim_failures += 1;
                failures.push(format!("{:?}: {msg}", g.maximal()));
            }
            Err(e) => failures.push(format!("{:?}: {e}", g.maximal())),
        }
    }
    ensure(failures.is_empty(), || {
        format!("{} failures ({claim_failures} invariant), first: {}", failures.len(), failures[0])
    })?;
    ensure(pop.len() > 100, || format!("population suspiciously small: {}", pop.len()))?;
    within(start, Duration::from_secs(60))?;
    Ok(format!("{} discrete polymatroids shelled and verified", pop.len()))
}

fn ac4_oracle_agreement() -> Outcome {
    let pop = population();
    let mut disagreements = Vec::new();
    for g in &pop {
        let algorithmic = shell_polymatroid(g).map_err(|e| e.to_string())?;
        match is_m_shellable_bruteforce(g, DEFAULT_ORACLE_CAP) {
            Ok(Some(s)) => {
                if !verify_m_shelling(g, &s).valid || !verify_m_shelling(g, &algorithmic).valid {
                    disagreements.push(format!("{:?}: verifier rejected", g.maximal()));
                }
            }
            Ok(None) => disagreements.push(format!("{:?}: oracle found nothing", g.maximal())),
            Err(e) => disagreements.push(format!("{:?}: {e}", g.maximal())),
        }
    }
    ensure(disagreements.is_empty(), || {
        format!("{} disagreements, first: {}", disagreements.len(), disagreements[0])
    })?;
    Ok(format!("{} instances, zero disagreements", pop.len()))
}

/// 100 vectors of length 1..=6 with first entry 1, from a fixed mixed-radix walk.
fn transform_vectors() -> Vec<DegreeVector> {
    (0..100i64)
        .map(|t| {
            let len = 1 + (t % 6) as usize;
            let mut v = vec![1i64];
            for i in 1..len as i64 {
                v.push((t * 7 + i * 13 + t * i) % 25);
            }
            DegreeVector::new(v)
        })
        .collect()
}

fn ac5_transform_identities() -> Outcome {
    let mut checked = 0;
    for v in transform_vectors() {
        let h = f_to_h(&v).map_err(|e| e.to_string())?;
        let back = h_to_f(&h).map_err(|e| e.to_string())?;
        ensure(back == v, || format!("h_to_f(f_to_h({v})) = {back}"))?;
        let f = h_to_f(&v).map_err(|e| e.to_string())?;
        let back = f_to_h(&f).map_err(|e| e.to_string())?;
        ensure(back == v, || format!("f_to_h(h_to_f({v})) = {back}"))?;
        for y in 0..=3i128 {
            let lhs = eval_descending(v.entries(), y - 1);
            let rhs = eval_descending(h.entries(), y);
            ensure(lhs == rhs, || format!("F(y-1) != H(y) at y={y} for f={v}"))?;
        }
        checked += 1;
    }
    Ok(format!("{checked} vectors round-trip; F(y-1)=H(y) at y=0..3, exact"))
}

fn ordered_pairs(max_len: usize) -> Vec<(LatticePath, LatticePath)> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        for north in 0..=len {
            let paths = all_paths(len - north, north);
            for p in &paths {
                for q in &paths {
                    if weakly_below(p, q) {
                        out.push((p.clone(), q.clone()));
                    }
                }
            }
        }
    }
    out
}

fn ac6_lpm_axioms() -> Outcome {
    let start = Instant::now();
    let pairs = ordered_pairs(8);
    let mut failures = Vec::new();
    for (p, q) in &pairs {
        match build_matroid(p, q).and_then(|m| m.check_base_exchange()) {
            Ok(true) => {}
            Ok(false) => failures.push(format!("M[{p},{q}] fails exchange")),
            Err(e) => failures.push(format!("M[{p},{q}]: {e}")),
        }
    }
    ensure(failures.is_empty(), || format!("{} failures, first: {}", failures.len(), failures[0]))?;
    within(start, Duration::from_secs(120))?;
    Ok(format!("{} path pairs with m+r <= 8 satisfy (B1)/(B2)", pairs.len()))
}

fn ac7_corollary3() -> Outcome {
    let bounds = SearchBounds::default();
    let pairs = ordered_pairs(6);
    let mut failures = Vec::new();
    for (p, q) in &pairs {
        let r = match corollary3_check(p, q, &bounds) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("M[{p},{q}]: {e}"));
                continue;
            }
        };
        let sound = r.status == Corollary3Status::Found
            && r.certificate.as_ref().is_some_and(|c| {
                c.ideal.degree_sequence().same_sequence(&r.h_vector)
                    && is_discrete_polymatroid(&c.ideal).is_ok_and(|rep| rep.holds)
                    && verify_m_shelling(&c.ideal, &c.shelling).valid
                    && naive_is_m_shelling(&c.ideal, &c.shelling)
            });
        if !sound {
            failures.push(format!("M[{p},{q}]: status {:?}, h={}", r.status, r.h_vector));
        }
    }
    ensure(failures.is_empty(), || format!("{} failures, first: {}", failures.len(), failures[0]))?;

    let p: LatticePath = "EENN".parse().unwrap();
    let q: LatticePath = "NNEE".parse().unwrap();
    let r = corollary3_check(&p, &q, &bounds).map_err(|e| e.to_string())?;
    ensure(r.f_vector.entries() == [1, 4, 6], || format!("U(2,4) f = {}", r.f_vector))?;
    ensure(r.h_vector.entries() == [1, 2, 3], || format!("U(2,4) h = {}", r.h_vector))?;
    let cert = r.certificate.ok_or("no U(2,4) certificate")?;
    ensure(verify_m_shelling(&cert.ideal, &cert.shelling).valid, || "U(2,4) shelling rejected".into())?;
    Ok(format!("{} path pairs with m+r <= 6 certified; U(2,4) h = (1,2,3)", pairs.len()))
}

fn ac8_non_converse() -> Outcome {
    let g = sigma();
    let pm = is_discrete_polymatroid(&g).map_err(|e| e.to_string())?;
    let s = is_m_shellable_bruteforce(&g, DEFAULT_ORACLE_CAP).map_err(|e| e.to_string())?;
    ensure(!pm.holds, || "sigma passes the exchange test".into())?;
    let s = s.ok_or("sigma not M-shellable per oracle")?;
    ensure(verify_m_shelling(&g, &s).valid, || "sigma shelling rejected".into())?;
    ensure(shell_polymatroid(&g).is_err(), || "constructor accepted a non-polymatroid".into())?;
    Ok("sigma: M-shellable, not a discrete polymatroid".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("AC1 sigma golden", ac1_sigma_golden),
        ("AC2 polymatroid golden", ac2_pm_golden),
        ("AC3 every small discrete polymatroid is M-shellable", ac3_polymatroids_exhaustive),
        ("AC4 oracle agreement", ac4_oracle_agreement),
        ("AC5 f/h transform identities", ac5_transform_identities),
        ("AC6 lattice path matroid axioms", ac6_lpm_axioms),
        ("AC7 lattice path matroid h-vectors are shellable PM-vectors", ac7_corollary3),
        ("AC8 converse fails", ac8_non_converse),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail} ({took:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why} ({took:.2}s)");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
