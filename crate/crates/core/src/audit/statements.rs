use num_rational::Ratio;

use super::checks::{first_inequality_from, general_bound, length_identity_from};
use super::{AuditConfig, AuditReport, CheckRecord, RingSummary, Verdict};
use crate::asymptotics::{curvature_estimate, root_window};
use crate::error::{Error, Result};
use crate::homology::{bass_sequence_with, ext_from_resolution, tor_from_resolution, vanishing_scan};
use crate::modrep::ModuleRep;
use crate::resolution::{resolve_with, FreeResolution};

type Q = Ratio<i128>;

fn q_from_f64(x: f64) -> Q {
    Q::new((x * 1e9).round() as i128, 1_000_000_000)
}

fn q_from(r: &crate::asymptotics::Rational) -> Q {
    Q::new(*r.numer() as i128, *r.denom() as i128)
}

fn fmt_q(q: &Q) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// The rational with the smallest denominator in `[lo, hi]`.
pub fn simplest_rational(lo: f64, hi: f64) -> Option<Ratio<i64>> {
    if lo > hi {
        return None;
    }
    (1..=10_000i64).find_map(|d| {
        let n = (lo * d as f64).ceil() as i64;
        (n as f64 / d as f64 <= hi).then(|| Ratio::new(n, d))
    })
}

fn preamble(m: &ModuleRep, cfg: &AuditConfig, command: &str) -> Result<(AuditReport, FreeResolution, FreeResolution)> {
    let alg = m.algebra();
    let ring = RingSummary::of(alg)?;
    let report = AuditReport::new(command, ring, cfg);
    let k = ModuleRep::residue_field(alg.clone())?;
    let res_m = resolve_with(m, cfg.depth, cfg.resolve_options())?;
    let res_k = resolve_with(&k, cfg.depth, cfg.resolve_options())?;
    Ok((report, res_m, res_k))
}

/// The curvature gap statement for `k` and `M`, with its supporting exact
/// checks.
pub fn audit_first(m: &ModuleRep, cfg: &AuditConfig) -> Result<AuditReport> {
    let (mut report, res_m, res_k) = preamble(m, cfg, "first")?;
    let e = report.ring.e;
    report.checks.push(first_inequality_from(&res_m, &res_k));
    report.checks.push(length_identity_from(&res_m));
    let mut lk = length_identity_from(&res_k);
    lk.name = "length_identity_k".into();
    report.checks.push(lk);
    report.checks.push(gap_record(&res_m, &res_k, e, report.ring.ci, cfg)?);
    report.checks.push(general_bound(&res_k, e, cfg)?);
    Ok(report)
}

fn gap_record(
    res_m: &FreeResolution,
    res_k: &FreeResolution,
    e: usize,
    ci: bool,
    cfg: &AuditConfig,
) -> Result<CheckRecord> {
    let name = "curvature_gap";
    if ci {
        return Ok(CheckRecord::setup_violation(name));
    }
    let mut rec = CheckRecord::new(name);
    let ik = res_k.curvature(cfg.window)?;
    let im = res_m.curvature(cfg.window)?;
    let half = e as f64 / 2.0 - 1.0;
    let root = (e as f64).sqrt() - 1.0;
    rec.detail("curv_k", &ik);
    rec.detail("curv_M", &im);
    rec.detail("e_over_2_minus_1", half);
    rec.detail("sqrt_e_minus_1", root);
    rec.caveat("existence of lim β_n(k)^{1/n} is assumed, not verified");
    if ik.lo_f64() > half + cfg.tolerance {
        rec.caveat(format!(
            "curv(k) interval lies above e/2 - 1 = {half}: every module of infinite projective dimension then has curv(M) = curv(k)"
        ));
    }
    if im.is_finite_pd() {
        return Ok(rec.vacuous("projective dimension of M is finite within the computed depth"));
    }
    if im.hi >= ik.lo {
        return Ok(rec.vacuous(format!(
            "no gap: curv(M).hi = {:.4} is not below curv(k).lo = {:.4}",
            im.hi_f64(),
            ik.lo_f64()
        )));
    }
    rec.hypothesis = format!("gap curv(M).hi = {:.4} < curv(k).lo = {:.4} holds", im.hi_f64(), ik.lo_f64());
    rec.bound("curv(k).lo ≤ e/2 - 1", ik.lo_f64(), half + cfg.tolerance, false);
    rec.bound("curv(M).hi < sqrt(e) - 1", im.hi_f64(), root + cfg.tolerance, true);
    rec.detail("sharp", (ik.lo_f64() - half).abs() <= cfg.tolerance);
    Ok(rec)
}

struct SecondInputs<'a> {
    name: &'a str,
    profile: Vec<usize>,
    /// β(M), length at least depth + 2.
    beta_m: Vec<usize>,
    /// β(N) or the Bass numbers of N.
    seq_n: Vec<usize>,
    label_n: &'a str,
}

fn second_record(inp: SecondInputs<'_>, e: usize, cfg: &AuditConfig) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new(inp.name);
    let depth = cfg.depth;
    rec.detail("profile", &inp.profile);
    let Some(w) = vanishing_scan(&inp.profile, cfg.window) else {
        return Ok(rec.vacuous(format!(
            "no vanishing window of length {} up to depth {depth}",
            cfg.window
        )));
    };
    rec.hypothesis = format!("vanishing for {w} ≤ i ≤ {depth} (checked up to depth {depth} only)");
    rec.detail("vanishing_from", w);
    let e = e as i128;
    let (bm, sn) = (&inp.beta_m, &inp.seq_n);
    for n in 0.. {
        if w + n + 2 > depth {
            break;
        }
        for j in 0.. {
            if w + n + j + 2 > depth {
                break;
            }
            let (bn0, bn1) = (bm[w + n] as i128, bm[w + n + 1] as i128);
            let (sj0, sj1) = (sn[j] as i128, sn[j + 1] as i128);
            let lhs = e * sj0 * bn0;
            let rhs = (sj0 + sj1) * (bn0 + bn1);
            let margin = if sj0 > 0 && bn0 > 0 {
                e as f64 - (1.0 + sj1 as f64 / sj0 as f64) * (1.0 + bn1 as f64 / bn0 as f64)
            } else {
                (lhs - rhs) as f64
            };
            rec.instance(format!("n={n}, j={j}"), lhs, rhs, margin, false);
            // both ratios at least 1 force each below e/2 - 1
            if sj0 > 0 && bn0 > 0 && sj1 >= sj0 && bn1 >= bn0 {
                let idx = format!("max-ratio n={n}, j={j}");
                rec.instance(idx.clone(), (e - 2) * bn0, 2 * bn1, 0.0, false);
                rec.instance(idx, (e - 2) * sj0, 2 * sj1, 0.0, false);
            }
        }
    }
    if rec.instances == 0 {
        return Ok(rec.vacuous(format!("vanishing starts at {w}, too late for any instance within depth {depth}")));
    }
    let finite_m = bm[..=depth].contains(&0);
    let finite_n = sn[..=depth].contains(&0);
    if finite_m || finite_n {
        rec.caveat("a finite resolution occurs within depth: the curvature conclusions hold trivially");
        return Ok(rec);
    }
    let (im, inn) = match (
        curvature_estimate(&bm[w..=depth], cfg.window),
        curvature_estimate(&sn[..=depth], cfg.window),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        _ => {
            rec.caveat("tail after the vanishing start is shorter than the window; no curvature conclusion");
            return Ok(rec);
        }
    };
    let ef = e as f64;
    rec.detail("curv_M", &im);
    rec.detail(&format!("curv_{}", inp.label_n), &inn);
    let lo_min = im.lo_f64().min(inn.lo_f64());
    let lo_max = im.lo_f64().max(inn.lo_f64());
    rec.bound("(a) min curvature ≤ sqrt(e) - 1", lo_min, ef.sqrt() - 1.0 + cfg.tolerance, false);
    rec.bound("(b) max curvature ≤ e/2 - 1", lo_max, ef / 2.0 - 1.0 + cfg.tolerance, false);
    Ok(rec)
}

/// Tor-vanishing statement: `e ≥ (1 + β_{j+1}(N)/β_j(N))(1 + β_{n+1}(M')/β_n(M'))`.
pub fn audit_second_tor(m: &ModuleRep, n: &ModuleRep, cfg: &AuditConfig) -> Result<AuditReport> {
    m.same_algebra(n)?;
    let alg = m.algebra();
    let mut report = AuditReport::new("second-tor", RingSummary::of(alg)?, cfg);
    if report.ring.ci {
        report.checks.push(CheckRecord::setup_violation("second_tor"));
        return Ok(report);
    }
    let res_m = resolve_with(m, cfg.depth + 1, cfg.resolve_options())?;
    let res_n = resolve_with(n, cfg.depth + 1, cfg.resolve_options())?;
    let profile = tor_from_resolution(&res_m, n, cfg.depth);
    let inp = SecondInputs {
        name: "second_tor",
        profile,
        beta_m: res_m.betti().to_vec(),
        seq_n: res_n.betti().to_vec(),
        label_n: "N",
    };
    let e = report.ring.e;
    report.checks.push(second_record(inp, e, cfg)?);
    Ok(report)
}

/// Ext-vanishing statement with Bass numbers of `N`.
pub fn audit_second_ext(m: &ModuleRep, n: &ModuleRep, cfg: &AuditConfig) -> Result<AuditReport> {
    m.same_algebra(n)?;
    let alg = m.algebra();
    let mut report = AuditReport::new("second-ext", RingSummary::of(alg)?, cfg);
    if report.ring.ci {
        report.checks.push(CheckRecord::setup_violation("second_ext"));
        return Ok(report);
    }
    let res_m = resolve_with(m, cfg.depth + 1, cfg.resolve_options())?;
    let profile = ext_from_resolution(&res_m, n, cfg.depth);
    let bass = bass_sequence_with(n, cfg.depth + 1, cfg.resolve_options())?;
    let inp = SecondInputs {
        name: "second_ext",
        profile,
        beta_m: res_m.betti().to_vec(),
        seq_n: bass.values,
        label_n: "injective_N",
    };
    let e = report.ring.e;
    report.checks.push(second_record(inp, e, cfg)?);
    Ok(report)
}

/// Lower bound on `curv(M)` from a large Betti ratio at `i0`.
pub fn audit_third(m: &ModuleRep, i0: usize, cfg: &AuditConfig) -> Result<AuditReport> {
    let (mut report, res_m, res_k) = preamble(m, cfg, "third")?;
    let name = "curvature_lower_bound";
    if report.ring.ci {
        report.checks.push(CheckRecord::setup_violation(name));
        return Ok(report);
    }
    if let Some(z) = res_m.first_zero() {
        return Err(Error::FinitePd(z));
    }
    if i0 + 1 > cfg.depth {
        return Err(Error::DepthExceeded {
            index: i0 + 1,
            depth: cfg.depth,
        });
    }
    let e = report.ring.e as i128;
    let ik = res_k.curvature(cfg.window)?;
    let im = res_m.curvature(cfg.window)?;
    let b = res_m.betti();
    let (p, q) = (b[i0 + 1] as i128, b[i0] as i128);
    let tol = q_from_f64(cfg.tolerance);
    let (lo, hi) = (q_from(&ik.lo), q_from(&ik.hi));
    // ratio > e/(1+α) - 1  ⇔  (p + q)(1 + α) > e·q
    let holds = |alpha: Q| Q::from_integer(p + q) * (Q::from_integer(1) + alpha) > Q::from_integer(e * q);
    let pessimistic = holds(lo - tol);
    let optimistic = holds(hi + tol);
    let mut rec = CheckRecord::new(name);
    rec.detail("i0", i0);
    rec.detail("ratio", fmt_q(&Q::new(p, q)));
    rec.detail("curv_k", &ik);
    rec.detail("curv_M", &im);
    rec.detail("hypothesis_pessimistic", pessimistic);
    rec.detail("hypothesis_optimistic", optimistic);
    let lo_tol = ik.lo_f64() - cfg.tolerance;
    let hi_tol = ik.hi_f64() + cfg.tolerance;
    if let Some(a) = simplest_rational(lo_tol, hi_tol) {
        let alpha = Q::new(*a.numer() as i128, *a.denom() as i128);
        let rhs = Q::from_integer(e) / (Q::from_integer(1) + alpha) - Q::from_integer(1);
        let ratio = Q::new(p, q);
        let sign = if ratio > rhs { ">" } else if ratio == rhs { "=" } else { "<" };
        rec.detail("reference_alpha", fmt_q(&alpha));
        rec.detail("reference_rhs", fmt_q(&rhs));
        rec.detail("reference_margin", fmt_q(&(ratio - rhs)));
        rec.detail("reference_reading", format!("{} {sign} {}", fmt_q(&ratio), fmt_q(&rhs)));
    }
    if let Ok((root_lo, _)) = root_window(res_k.betti(), cfg.window) {
        rec.detail("liminf_root_k_estimate", root_lo);
        if root_lo > 1.0 {
            rec.caveat("β_n(k)^{1/n} stays above 1 on the window, so the lower bound is non-trivial");
        }
    }
    rec.caveat("liminf and limsup cannot be separated at finite depth; a single interval is reported");
    if pessimistic {
        rec.hypothesis = "holds under the pessimistic reading α = curv(k).lo - tol".into();
        rec.bound("curv(k).lo - tol ≤ curv(M).hi", ik.lo_f64() - cfg.tolerance, im.hi_f64(), false);
    } else if optimistic {
        rec = rec.vacuous("holds only under the optimistic reading α = curv(k).hi + tol");
    } else {
        rec = rec.vacuous("fails under every reading of curv(k)");
    }
    debug_assert!(rec.verdict != Verdict::SetupViolation);
    report.checks.push(rec);
    Ok(report)
}

