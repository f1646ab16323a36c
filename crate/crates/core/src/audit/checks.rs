use super::{AuditConfig, CheckRecord};
use crate::error::Result;
use crate::modrep::ModuleRep;
use crate::resolution::{resolve_with, FreeResolution};

/// `β_{i+1}(M) + β_0(M)·ℓ(Ω^i k) ≥ β_i(k)·(β_0(M) + β_1(M))` for `i < N`.
pub fn check_first_inequality(m: &ModuleRep, cfg: &AuditConfig) -> Result<CheckRecord> {
    let k = ModuleRep::residue_field(m.algebra().clone())?;
    let res_m = resolve_with(m, cfg.depth, cfg.resolve_options())?;
    let res_k = resolve_with(&k, cfg.depth, cfg.resolve_options())?;
    Ok(first_inequality_from(&res_m, &res_k))
}

pub(crate) fn first_inequality_from(res_m: &FreeResolution, res_k: &FreeResolution) -> CheckRecord {
    let mut rec = CheckRecord::new("first_inequality");
    let bm = res_m.betti();
    if bm[0] == 0 {
        return rec.vacuous("M is the zero module");
    }
    let bk = res_k.betti();
    let lk = res_k.syzygy_lengths();
    let depth = res_m.depth().min(res_k.depth());
    if depth == 0 {
        return rec.vacuous("depth 0 leaves no instance");
    }
    let b0 = bm[0] as i128;
    let b1 = bm[1] as i128;
    for i in 0..depth {
        let lhs = bm[i + 1] as i128 + b0 * lk[i] as i128;
        let rhs = bk[i] as i128 * (b0 + b1);
        rec.instance(format!("i={i}"), lhs, rhs, (lhs - rhs) as f64, false);
    }
    rec.caveat("the displayed index β_{i+} is read as β_{i+1}");
    rec
}

/// `ℓ(Ω^i M) + ℓ(Ω^{i+1} M) = ℓ(A)·β_i(M)` for `i < N`.
pub fn check_length_identity(m: &ModuleRep, cfg: &AuditConfig) -> Result<CheckRecord> {
    let res = resolve_with(m, cfg.depth, cfg.resolve_options())?;
    Ok(length_identity_from(&res))
}

pub(crate) fn length_identity_from(res: &FreeResolution) -> CheckRecord {
    let mut rec = CheckRecord::new("length_identity");
    let len = res.algebra().basis().len() as i128;
    let ranks = res.image_ranks();
    let lengths = res.syzygy_lengths();
    // ℓ(Ω^i) measured as the span of the generators' multiples where available
    let ell = |i: usize| -> i128 {
        if i < ranks.len() {
            ranks[i] as i128
        } else {
            lengths[i] as i128
        }
    };
    for i in 0..res.depth() {
        let lhs = ell(i) + ell(i + 1);
        let rhs = len * res.betti()[i] as i128;
        rec.exact(format!("i={i}"), lhs, rhs);
    }
    rec
}

/// `curv(k) ≤ e(A) - 1`, reporting whether the bound is attained.
pub fn general_bound(res_k: &FreeResolution, e: usize, cfg: &AuditConfig) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("general_bound");
    let ik = res_k.curvature(cfg.window)?;
    let bound = e as f64 - 1.0;
    rec.bound("curv(k).lo ≤ e - 1", ik.lo_f64(), bound + cfg.tolerance, false);
    let attained = (ik.lo_f64() - bound).abs() <= cfg.tolerance && (ik.hi_f64() - bound).abs() <= cfg.tolerance;
    rec.detail("curv_k", &ik);
    rec.detail("e_minus_1", bound);
    rec.detail("attained", attained);
    if attained {
        rec.caveat("bound attained: minimal multiplicity behaviour");
    }
    Ok(rec)
}
