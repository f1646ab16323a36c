use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::checks::{first_inequality_from, length_identity_from};
use super::{AuditConfig, AuditReport, CheckRecord, RingSummary, Verdict};
use crate::algebra::QuotientAlgebra;
use crate::error::{Error, Result};
use crate::homology::{bass_sequence_with, tor_lengths_with};
use crate::modrep::random::{random_graded_module, random_module};
use crate::modrep::ModuleRep;
use crate::resolution::resolve_with;

/// Depth used by the suite when the configuration asks for more.
pub const SUITE_DEPTH: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuiteOptions {
    pub count: usize,
    /// Draw only graded modules.
    pub graded: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            count: 25,
            graded: false,
        }
    }
}

/// Accumulates per-case records under one name.
struct Aggregate {
    rec: CheckRecord,
    vacuous: usize,
    cases: usize,
}

impl Aggregate {
    fn new(name: &str) -> Self {
        Aggregate {
            rec: CheckRecord::new(name),
            vacuous: 0,
            cases: 0,
        }
    }

    fn absorb(&mut self, case: usize, part: CheckRecord) {
        self.cases += 1;
        if part.verdict == Verdict::Vacuous {
            self.vacuous += 1;
            return;
        }
        let r = &mut self.rec;
        r.instances += part.instances;
        r.equalities += part.equalities;
        if let Some(m) = part.margin {
            r.margin = Some(r.margin.map_or(m, |x| x.min(m)));
        }
        if part.verdict == Verdict::Fail {
            r.verdict = Verdict::Fail;
        }
        for mut v in part.failures {
            v.index = format!("case {case}, {}", v.index);
            r.failures.push(v);
        }
        for c in part.caveats {
            if !r.caveats.contains(&c) {
                r.caveats.push(c);
            }
        }
    }

    fn finish(mut self) -> CheckRecord {
        self.rec.detail("cases", self.cases);
        self.rec.detail("vacuous_cases", self.vacuous);
        if self.cases > 0 && self.vacuous == self.cases {
            return self.rec.vacuous("every case was vacuous");
        }
        self.rec
    }
}

/// Runs the unconditional checks on `k` and `count` seeded random module
/// pairs `(M, N)`. Resolutions go to depth `min(cfg.depth, 6)`.
pub fn invariant_suite(a: &Arc<QuotientAlgebra>, opts: SuiteOptions, cfg: &AuditConfig) -> Result<AuditReport> {
    a.require_artinian()?;
    let mut report = AuditReport::new("invariants", RingSummary::of(a)?, cfg);
    let depth = cfg.depth.min(SUITE_DEPTH);
    report.depth = depth;
    let ropts = cfg.resolve_options();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let draw = |rng: &mut ChaCha8Rng| {
        if opts.graded {
            random_graded_module(a, rng)
        } else {
            random_module(a, rng)
        }
    };
    let k = ModuleRep::residue_field(a.clone())?;
    let res_k = resolve_with(&k, depth, ropts)?;

    let names = [
        "first_inequality",
        "length_identity",
        "tensor_length",
        "hom_length",
        "tor_symmetry",
        "matlis_round_trip",
        "bass_duality",
    ];
    let mut aggs: Vec<Aggregate> = names.iter().map(|n| Aggregate::new(n)).collect();
    let mut k_equalities = 0;

    for case in 0..=opts.count {
        let m = if case == 0 { k.clone() } else { draw(&mut rng)? };
        let n = draw(&mut rng)?;
        let res_m = resolve_with(&m, depth, ropts)?;

        let first = first_inequality_from(&res_m, &res_k);
        if case == 0 {
            k_equalities = first.equalities;
        }
        aggs[0].absorb(case, first);
        aggs[1].absorb(case, length_identity_from(&res_m));

        let (mu_m, mu_n, r_n) = (m.min_gens() as i128, n.min_gens() as i128, n.socle_dim() as i128);
        let mut t = CheckRecord::new("tensor_length");
        let lt = m.tensor(&n)?.length() as i128;
        t.instance("ℓ(M⊗N) ≥ μ(M)μ(N)".into(), lt, mu_m * mu_n, (lt - mu_m * mu_n) as f64, false);
        aggs[2].absorb(case, t);

        let mut h = CheckRecord::new("hom_length");
        let lh = m.hom(&n)?.length() as i128;
        h.instance("ℓ(Hom(M,N)) ≥ μ(M)r(N)".into(), lh, mu_m * r_n, (lh - mu_m * r_n) as f64, false);
        aggs[3].absorb(case, h);

        let mut ts = CheckRecord::new("tor_symmetry");
        let mn = tor_lengths_with(&m, &n, depth, ropts)?.lengths;
        let nm = tor_lengths_with(&n, &m, depth, ropts)?.lengths;
        for i in 0..=depth {
            ts.exact(format!("i={i}"), mn[i] as i128, nm[i] as i128);
        }
        aggs[4].absorb(case, ts);

        let mut md = CheckRecord::new("matlis_round_trip");
        let dual = m.matlis_dual();
        let back = dual.matlis_dual();
        md.exact("ℓ(M^∨∨) = ℓ(M)".into(), back.length() as i128, m.length() as i128);
        md.exact("μ(M^∨∨) = μ(M)".into(), back.min_gens() as i128, mu_m);
        md.exact("r(M^∨∨) = r(M)".into(), back.socle_dim() as i128, m.socle_dim() as i128);
        md.exact("μ(M^∨) = r(M)".into(), dual.min_gens() as i128, m.socle_dim() as i128);
        aggs[5].absorb(case, md);

        let mut bd = CheckRecord::new("bass_duality");
        match bass_sequence_with(&n, depth, ropts) {
            Ok(b) => {
                for i in 0..=depth {
                    bd.exact(format!("i={i}"), b.values[i] as i128, b.via_dual[i] as i128);
                }
            }
            Err(Error::Mismatch(msg)) => {
                bd.exact("Ext(k,N) vs β(N^∨)".into(), 0, 1);
                bd.caveat(msg);
            }
            Err(e) => return Err(e),
        }
        aggs[6].absorb(case, bd);
    }

    for agg in aggs {
        report.checks.push(agg.finish());
    }
    if let Some(first) = report.checks.first_mut() {
        first.detail("equalities_for_k", k_equalities);
    }
    Ok(report)
}
