use std::sync::Arc;

use super::{AuditConfig, AuditReport, CheckRecord, RingSummary};
use crate::algebra::QuotientAlgebra;
use crate::error::{Error, Result};
use crate::modrep::ModuleRep;
use crate::poly::Polynomial;
use crate::resolution::resolve_with;

/// Coefficients of `(1+t)^embdim / (1-t^2)^codim` up to `t^depth`: the Betti
/// numbers of `k` over a complete intersection.
pub fn ci_reference_betti(embdim: usize, codim: usize, depth: usize) -> Vec<usize> {
    let mut series = vec![0usize; depth + 1];
    series[0] = 1;
    for _ in 0..embdim {
        for n in (1..=depth).rev() {
            series[n] += series[n - 1];
        }
    }
    for _ in 0..codim {
        for n in 2..=depth {
            series[n] += series[n - 2];
        }
    }
    series
}

/// Passing to `B = A/(x)` for a regular linear form `x` on a one-dimensional
/// `A`: checks that `β^B(k)` is nondecreasing and, given `β^A(k)` (taken from
/// the complete intersection formula when `reference` is `None` and `A` is
/// CI), that `β^B_n + β^B_{n-1} = β^A_n` for `1 ≤ n ≤ depth`.
pub fn modx_check(
    a: &QuotientAlgebra,
    x: &Polynomial,
    reference: Option<Vec<usize>>,
    cfg: &AuditConfig,
) -> Result<AuditReport> {
    let d = a.krull_dim();
    if d != 1 {
        return Err(Error::UnsupportedDimension(d));
    }
    let bound = a.degree_bound();
    if !a.is_regular_up_to(x, bound)? {
        return Err(Error::NotRegular(a.ring().format(x)));
    }
    let ring = RingSummary::of(a)?;
    let mut report = AuditReport::new("modx", ring, cfg);
    let b = Arc::new(a.quotient_by_linear_form(x)?);
    b.require_artinian()?;
    let k = ModuleRep::residue_field(b.clone())?;
    let betti_b = resolve_with(&k, cfg.depth, cfg.resolve_options())?.betti().to_vec();

    let mut reg = CheckRecord::new("regular_element");
    reg.detail("x", a.ring().format(x));
    reg.detail("quotient", b.summary());
    reg.detail("verified_up_to_degree", bound);
    reg.caveat(format!("regularity verified up to degree {bound}, not proved"));
    report.checks.push(reg);

    let mut mono = CheckRecord::new("quotient_betti_monotone");
    mono.detail("betti_B", &betti_b);
    for n in 1..betti_b.len() {
        let (hi, lo) = (betti_b[n] as i128, betti_b[n - 1] as i128);
        mono.instance(format!("n={n}"), hi, lo, (hi - lo) as f64, false);
    }
    report.checks.push(mono);

    let reference = match reference {
        Some(r) => Some(r),
        None if a.is_complete_intersection() => Some(ci_reference_betti(
            a.embedding_dim(),
            a.minimal_ideal_generators(),
            cfg.depth,
        )),
        None => None,
    };
    let mut rec = CheckRecord::new("betti_recursion");
    match reference {
        Some(r) => {
            rec.detail("reference_A", &r);
            let top = cfg.depth.min(r.len().saturating_sub(1));
            for n in 1..=top {
                let lhs = (betti_b[n] + betti_b[n - 1]) as i128;
                rec.exact(format!("n={n}"), lhs, r[n] as i128);
            }
            if top < cfg.depth {
                rec.caveat(format!("reference covers n ≤ {top} only"));
            }
        }
        None => {
            rec = rec.vacuous("no reference Betti sequence for A (not a complete intersection)");
        }
    }
    report.checks.push(rec);
    Ok(report)
}
