//! Acceptance criteria, one line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use curvlab::asymptotics::{ratio_window, GrowthClass, Rational};
use curvlab::audit::{
    audit_first, audit_second_ext, audit_second_tor, audit_third, check_length_identity, general_bound,
    invariant_suite, modx_check, AuditConfig, SuiteOptions, Verdict,
};
use curvlab::homology::{bass_sequence, tor_lengths};
use curvlab::io::{load_module, load_ring};
use curvlab::modrep::random::random_graded_module;
use curvlab::{resolve, ModuleRep, QuotientAlgebra};

const TOL: f64 = 0.05;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn ring(name: &str) -> Arc<QuotientAlgebra> {
    load_ring(&fixture(name)).expect("fixture ring")
}

fn module(a: &Arc<QuotientAlgebra>, name: &str) -> ModuleRep {
    load_module(a, &fixture(name)).expect("fixture module")
}

fn k(a: &Arc<QuotientAlgebra>) -> ModuleRep {
    ModuleRep::residue_field(a.clone()).unwrap()
}

fn cfg(depth: usize) -> AuditConfig {
    AuditConfig {
        depth,
        ..AuditConfig::default()
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn r3_invariants() -> Check {
    let t = Instant::now();
    let a = ring("r3.toml");
    let (len, e) = (a.length(), a.multiplicity().map_err(|e| e.to_string())?);
    ensure(len == Some(6) && e == 6, || format!("length {len:?}, e {e}"))?;
    ensure(a.embedding_dim() == 3, || format!("embdim {}", a.embedding_dim()))?;
    ensure(!a.is_complete_intersection(), || "reported CI".into())?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("ℓ = e = 6, embdim 3, not CI in {:?}", t.elapsed()))
}

fn periodic_module() -> Check {
    let t = Instant::now();
    let a = ring("r3.toml");
    let res = resolve(&module(&a, "mod-a.toml"), 12).map_err(|e| e.to_string())?;
    ensure(res.betti() == [1; 13], || format!("betti {:?}", res.betti()))?;
    let iv = res.curvature(4).map_err(|e| e.to_string())?;
    let one = Rational::from_integer(1);
    ensure(iv.lo == one && iv.hi == one, || format!("interval {iv}"))?;
    ensure(iv.classification == GrowthClass::Periodic, || format!("class {}", iv.classification))?;
    within(t, Duration::from_secs(5))?;
    Ok(format!("β_n = 1 for n ≤ 12, interval [1, 1] periodic in {:?}", t.elapsed()))
}

fn residue_field_r3() -> Check {
    let t = Instant::now();
    let a = ring("r3.toml");
    let res = resolve(&k(&a), 10).map_err(|e| e.to_string())?;
    let identity = check_length_identity(&k(&a), &cfg(10)).map_err(|e| e.to_string())?;
    ensure(identity.verdict == Verdict::Pass && identity.instances == 10, || {
        format!("length identity: {:?}", identity.failures)
    })?;
    let (lo, hi) = ratio_window(res.betti(), 4).map_err(|e| e.to_string())?;
    let (lo, hi) = (*lo.numer() as f64 / *lo.denom() as f64, *hi.numer() as f64 / *hi.denom() as f64);
    ensure((1.8..=2.2).contains(&lo) && (1.8..=2.2).contains(&hi), || format!("window [{lo}, {hi}]"))?;
    // Koszul oracle: β_n(k) = 2^{n+1} - 1
    let oracle: Vec<usize> = (0..=10).map(|n| (1 << (n + 1)) - 1).collect();
    ensure(res.betti() == oracle.as_slice(), || format!("betti {:?}", res.betti()))?;
    within(t, Duration::from_secs(300))?;
    Ok(format!("ratio window [{lo:.4}, {hi:.4}], length identity exact at depth 10 in {:?}", t.elapsed()))
}

fn sharpness() -> Check {
    let a = ring("r3.toml");
    let rep = audit_first(&module(&a, "mod-a.toml"), &cfg(12)).map_err(|e| e.to_string())?;
    ensure(rep.verdict() == Verdict::Pass, || format!("verdict {}\n{rep}", rep.verdict()))?;
    let gap = rep.check("curvature_gap").ok_or("no gap record")?;
    let lo = gap.details["curv_k"]["lo"]["value"].as_f64().ok_or("no curv_k")?;
    ensure(lo <= 2.0 + TOL && (lo - 2.0).abs() <= TOL, || format!("curv(k).lo = {lo}"))?;
    Ok(format!("PASS, curv(k).lo = {lo:.4} at e/2 - 1 = 2"))
}

fn lower_bound() -> Check {
    let t = Instant::now();
    let a = ring("r3.toml");
    let rep = audit_third(&module(&a, "mod-bc.toml"), 0, &cfg(12)).map_err(|e| e.to_string())?;
    ensure(rep.verdict() == Verdict::Pass, || format!("bc verdict {}\n{rep}", rep.verdict()))?;
    let rec = rep.check("curvature_lower_bound").ok_or("no record")?;
    ensure(rec.details["reference_reading"] == "2 > 1", || format!("{}", rec.details["reference_reading"]))?;
    let hi = rec.details["curv_M"]["hi"]["value"].as_f64().ok_or("no curv_M")?;
    ensure(hi >= 1.95, || format!("curv(M).hi = {hi}"))?;
    let rep = audit_third(&module(&a, "mod-a.toml"), 0, &cfg(12)).map_err(|e| e.to_string())?;
    ensure(rep.verdict() == Verdict::Vacuous, || format!("(a) verdict {}\n{rep}", rep.verdict()))?;
    within(t, Duration::from_secs(300))?;
    Ok(format!("(b,c): 2 > 1 and PASS with curv(M).hi = {hi:.4}; (a): VACUOUS"))
}

fn unconditional_suite() -> Check {
    let t = Instant::now();
    let names = [
        "first_inequality",
        "length_identity",
        "tensor_length",
        "hom_length",
        "tor_symmetry",
        "matlis_round_trip",
    ];
    let mut total = 0;
    for file in ["r1.toml", "r2.toml", "r3.toml"] {
        let a = ring(file);
        let opts = SuiteOptions { count: 50, graded: false };
        let rep = invariant_suite(&a, opts, &cfg(12)).map_err(|e| e.to_string())?;
        for n in names {
            let rec = rep.check(n).ok_or(format!("{file}: missing {n}"))?;
            ensure(rec.verdict == Verdict::Pass, || format!("{file}: {n} {}: {:?}", rec.verdict, rec.failures))?;
            total += rec.instances;
        }
        ensure(rep.verdict() == Verdict::Pass, || format!("{file}:\n{rep}"))?;
        if file == "r2.toml" {
            let eq = rep.check("first_inequality").unwrap().details["equalities_for_k"].as_u64().unwrap_or(0);
            ensure(eq > 0, || "no equality instance for M = k on R2".into())?;
        }
    }
    within(t, Duration::from_secs(600))?;
    Ok(format!("{total} instances over R1, R2, R3 all PASS in {:?}", t.elapsed()))
}

fn square_zero() -> Check {
    let a = ring("r2.toml");
    let res = resolve(&k(&a), 8).map_err(|e| e.to_string())?;
    let oracle: Vec<usize> = (0..=8).map(|n| 1 << n).collect();
    ensure(res.betti() == oracle.as_slice(), || format!("betti {:?}", res.betti()))?;
    let iv = res.curvature(4).map_err(|e| e.to_string())?;
    let two = Rational::from_integer(2);
    ensure(iv.lo == two && iv.hi == two, || format!("interval {iv}"))?;
    let gb = general_bound(&res, a.multiplicity().unwrap(), &cfg(8)).map_err(|e| e.to_string())?;
    ensure(gb.verdict == Verdict::Pass && gb.details["attained"] == true, || format!("{:?}", gb.details))?;
    Ok("β_n(k) = 2^n for n ≤ 8, interval [2, 2], e - 1 attained".into())
}

fn ci_gate() -> Check {
    let a = ring("r1.toml");
    ensure(a.is_complete_intersection(), || "not reported CI".into())?;
    let kk = k(&a);
    let c = cfg(12);
    for (name, rep) in [
        ("first", audit_first(&kk, &c)),
        ("second-tor", audit_second_tor(&kk, &kk, &c)),
        ("second-ext", audit_second_ext(&kk, &kk, &c)),
        ("third", audit_third(&kk, 0, &c)),
    ] {
        let rep = rep.map_err(|e| format!("{name}: {e}"))?;
        ensure(rep.verdict() == Verdict::SetupViolation, || format!("{name}: {}", rep.verdict()))?;
    }
    let res = resolve(&kk, 50).map_err(|e| e.to_string())?;
    ensure(res.betti().iter().all(|&b| b == 1), || format!("betti {:?}", res.betti()))?;
    let iv = res.curvature(4).map_err(|e| e.to_string())?;
    let one = Rational::from_integer(1);
    ensure(iv.lo == one && iv.hi == one, || format!("interval {iv}"))?;
    Ok("CI detected, four audits SETUP_VIOLATION, β_n(k) = 1 for n ≤ 50".into())
}

fn quotient_recursion() -> Check {
    let a = ring("r4.toml");
    let x = a.ring().parse("x").map_err(|e| e.to_string())?;
    let reference: Vec<usize> = (0..=12).map(|n| if n == 0 { 1 } else { 2 }).collect();
    let rep = modx_check(&a, &x, Some(reference), &cfg(12)).map_err(|e| e.to_string())?;
    ensure(rep.verdict() == Verdict::Pass, || format!("{rep}"))?;
    let rec = rep.check("betti_recursion").ok_or("no recursion record")?;
    ensure(rec.instances == 12 && rec.equalities == 12, || format!("{} instances", rec.instances))?;
    let mono = rep.check("quotient_betti_monotone").ok_or("no monotonicity record")?;
    ensure(mono.verdict == Verdict::Pass, || format!("{:?}", mono.failures))?;
    Ok("β^B_n + β^B_{n-1} = β^A_n exact for 1 ≤ n ≤ 12, β^B monotone".into())
}

fn homology_cross_checks() -> Check {
    const DEPTH: usize = 8;
    let mut pairs: Vec<(ModuleRep, ModuleRep)> = Vec::new();
    let rings = [ring("r1.toml"), ring("r2.toml"), ring("r3.toml")];
    let r3 = &rings[2];
    let fixtures = [k(&rings[0]), module(&rings[1], "mod-k.toml"), k(r3), module(r3, "mod-a.toml"), module(r3, "mod-bc.toml")];
    for m in &fixtures {
        for n in &fixtures {
            if Arc::ptr_eq(m.algebra(), n.algebra()) {
                pairs.push((m.clone(), n.clone()));
            }
        }
    }
    let fixed = pairs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for i in 0..25 {
        let a = &rings[i % 3];
        let m = random_graded_module(a, &mut rng).map_err(|e| e.to_string())?;
        let n = random_graded_module(a, &mut rng).map_err(|e| e.to_string())?;
        pairs.push((m, n));
    }
    for (idx, (m, n)) in pairs.iter().enumerate() {
        let mn = tor_lengths(m, n, DEPTH).map_err(|e| e.to_string())?.lengths;
        let nm = tor_lengths(n, m, DEPTH).map_err(|e| e.to_string())?.lengths;
        ensure(mn == nm, || format!("pair {idx}: Tor {mn:?} vs {nm:?}"))?;
        let bass = bass_sequence(n, DEPTH).map_err(|e| format!("pair {idx}: {e}"))?;
        ensure(bass.values == bass.via_dual, || format!("pair {idx}: Bass mismatch"))?;
    }
    Ok(format!("{fixed} fixture pairs and 25 random pairs agree for i ≤ {DEPTH}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("ring invariants of R3", r3_invariants),
        ("A/(a) is 1-periodic", periodic_module),
        ("curvature of k over R3", residue_field_r3),
        ("sharpness of the e/2 - 1 bound", sharpness),
        ("Betti-ratio lower bound", lower_bound),
        ("unconditional suite", unconditional_suite),
        ("m^2 = 0 oracle", square_zero),
        ("complete intersection gate", ci_gate),
        ("quotient by a regular linear form", quotient_recursion),
        ("homology cross-checks", homology_cross_checks),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
