use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use curvlab::asymptotics::curvature_estimate;
use curvlab::audit::{self, AuditConfig, AuditReport, RingSummary, SuiteOptions, Verdict};
use curvlab::homology::{bass_sequence_with, ext_lengths_with, tor_lengths_with};
use curvlab::io::{load_module, load_ring, preset};
use curvlab::resolution::DEFAULT_BUDGET;
use curvlab::{resolve_with, Error, ModuleRep, QuotientAlgebra, ResolveOptions};

/// `println!` that stops quietly when stdout is closed.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(name = "curvlab", version, about = "Betti numbers, curvature and curvature audits over local artinian algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Ring description file.
    ring: PathBuf,
    /// Module description file (defaults to the residue field).
    #[arg(long)]
    module: Option<PathBuf>,
    /// Resolution depth N.
    #[arg(long, default_value_t = 12)]
    steps: usize,
    /// Window for curvature estimates.
    #[arg(long, default_value_t = 4)]
    window: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cap on the k-dimension of any free module in a resolution.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Clone)]
struct Pair {
    #[command(flatten)]
    common: Common,
    /// Second module file (defaults to the residue field).
    #[arg(long)]
    module2: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Length, multiplicity, embedding dimension, dimension, CI flag.
    Ring {
        ring: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Minimal free resolution with boundary maps.
    Resolve(Common),
    /// Betti numbers β_0..β_N.
    Betti(Common),
    /// Curvature interval from the Betti numbers.
    Curv(Common),
    /// Lengths of Tor_i(M, N).
    Tor(Pair),
    /// Lengths of Ext^i(M, N).
    Ext(Pair),
    /// Bass numbers of the module and their curvature interval.
    Injcurv(Common),
    #[command(subcommand)]
    Audit(AuditCommand),
    /// Write bundled fixture files.
    Preset {
        /// ex1, msquare, hypersurface or modx.
        name: String,
        #[arg(long)]
        h: Option<u32>,
        #[arg(long = "char")]
        characteristic: Option<u32>,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum AuditCommand {
    First(Common),
    SecondTor(Pair),
    SecondExt(Pair),
    Third {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        i0: usize,
    },
    Modx {
        #[command(flatten)]
        common: Common,
        /// Linear form; a random regular one is drawn when omitted.
        #[arg(long)]
        x: Option<String>,
    },
    Invariants {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 25)]
        count: usize,
        /// Draw only graded modules.
        #[arg(long)]
        graded: bool,
    },
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<ExitCode, Failure>;

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } | Error::GuardExceeded { .. } => 3,
        Error::Mismatch(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}

struct Job {
    algebra: Arc<QuotientAlgebra>,
    module: ModuleRep,
    cfg: AuditConfig,
    json: bool,
}

impl Job {
    fn new(c: &Common) -> Result<Job, Failure> {
        if c.steps < c.window + 2 {
            return Err(Failure::Usage(format!(
                "--steps {} must be at least --window + 2 = {}",
                c.steps,
                c.window + 2
            )));
        }
        let algebra = load_ring(&c.ring)?;
        let module = module_or_k(&algebra, c.module.as_deref())?;
        let cfg = AuditConfig {
            depth: c.steps,
            window: c.window,
            seed: c.seed,
            budget: c.budget,
            ..AuditConfig::default()
        };
        Ok(Job {
            algebra,
            module,
            cfg,
            json: c.json,
        })
    }

    fn opts(&self) -> ResolveOptions {
        ResolveOptions {
            budget: self.cfg.budget,
            seed: None,
        }
    }

    fn emit(&self, text: String, value: serde_json::Value) -> Outcome {
        if self.json {
            say!("{}", serde_json::to_string_pretty(&value).expect("json"));
        } else {
            say!("{text}");
        }
        Ok(ExitCode::SUCCESS)
    }

    fn report(&self, rep: AuditReport) -> Outcome {
        report(rep, self.json)
    }
}

fn report(rep: AuditReport, json: bool) -> Outcome {
    if json {
        say!("{}", rep.to_json());
    } else {
        say!("{rep}");
    }
    Ok(match rep.verdict() {
        Verdict::Pass | Verdict::Vacuous => ExitCode::SUCCESS,
        Verdict::SetupViolation | Verdict::Fail => ExitCode::from(1),
    })
}

fn module_or_k(a: &Arc<QuotientAlgebra>, path: Option<&Path>) -> Result<ModuleRep, Failure> {
    Ok(match path {
        Some(p) => load_module(a, p)?,
        None => ModuleRep::residue_field(a.clone())?,
    })
}

fn list(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Ring { ring, json } => {
            let a = load_ring(&ring)?;
            let s = RingSummary::of(&a)?;
            if json {
                say!("{}", serde_json::to_string_pretty(&s).expect("json"));
            } else {
                say!("{s}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Resolve(c) => {
            let job = Job::new(&c)?;
            let res = resolve_with(&job.module, job.cfg.depth, job.opts())?;
            res.check_invariants()?;
            let ring = job.algebra.ring();
            let mut text = format!("betti    {}\nlengths  {}\n", list(res.betti()), list(res.syzygy_lengths()));
            let mut maps = Vec::new();
            for i in 0..res.depth() {
                let b = res.boundary(i);
                let rows: Vec<Vec<String>> = (0..b.rows())
                    .map(|r| {
                        (0..b.cols())
                            .map(|col| ring.format(&job.algebra.element_to_polynomial(b.entry(r, col))))
                            .collect()
                    })
                    .collect();
                text += &format!("d{}: {} x {}\n", i + 1, b.rows(), b.cols());
                for r in &rows {
                    text += &format!("  [{}]\n", r.join(", "));
                }
                maps.push(rows);
            }
            let value = json!({
                "betti": res.betti(),
                "lengths": res.syzygy_lengths(),
                "boundaries": maps,
            });
            job.emit(text.trim_end().to_string(), value)
        }
        Command::Betti(c) => {
            let job = Job::new(&c)?;
            let res = resolve_with(&job.module, job.cfg.depth, job.opts())?;
            job.emit(list(res.betti()), json!({ "betti": res.betti() }))
        }
        Command::Curv(c) => {
            let job = Job::new(&c)?;
            let res = resolve_with(&job.module, job.cfg.depth, job.opts())?;
            let iv = res.curvature(job.cfg.window)?;
            let text = format!("betti  {}\ncurv   {iv}", list(res.betti()));
            job.emit(text, json!({ "betti": res.betti(), "curvature": iv }))
        }
        Command::Tor(p) => {
            let job = Job::new(&p.common)?;
            let n = module_or_k(&job.algebra, p.module2.as_deref())?;
            let t = tor_lengths_with(&job.module, &n, job.cfg.depth, job.opts())?;
            let from = t.vanishing_from.map_or("none".into(), |w| w.to_string());
            let text = format!("tor      {}\nvanishes from {from}", list(&t.lengths));
            job.emit(text, serde_json::to_value(&t).expect("json"))
        }
        Command::Ext(p) => {
            let job = Job::new(&p.common)?;
            let n = module_or_k(&job.algebra, p.module2.as_deref())?;
            let e = ext_lengths_with(&job.module, &n, job.cfg.depth, job.opts())?;
            job.emit(format!("ext      {}", list(&e)), json!({ "lengths": e }))
        }
        Command::Injcurv(c) => {
            let job = Job::new(&c)?;
            let b = bass_sequence_with(&job.module, job.cfg.depth, job.opts())?;
            let iv = curvature_estimate(&b.values, job.cfg.window)?;
            let text = format!("bass     {}\ninjcurv  {iv}", list(&b.values));
            job.emit(text, json!({ "bass": b.values, "injcurv": iv }))
        }
        Command::Audit(a) => run_audit(a),
        Command::Preset {
            name,
            h,
            characteristic,
            out,
        } => {
            let files = preset(&name, h, characteristic)?;
            std::fs::create_dir_all(&out).map_err(|e| Failure::Usage(format!("{}: {e}", out.display())))?;
            for f in files {
                let path = out.join(&f.name);
                std::fs::write(&path, &f.contents)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                say!("wrote {}", path.display());
            }
            if name == "modx" {
                say!("linear form: {}", curvlab::io::MODX_LINEAR_FORM);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_audit(cmd: AuditCommand) -> Outcome {
    match cmd {
        AuditCommand::First(c) => {
            let job = Job::new(&c)?;
            job.report(audit::audit_first(&job.module, &job.cfg)?)
        }
        AuditCommand::SecondTor(p) => {
            let job = Job::new(&p.common)?;
            let n = module_or_k(&job.algebra, p.module2.as_deref())?;
            job.report(audit::audit_second_tor(&job.module, &n, &job.cfg)?)
        }
        AuditCommand::SecondExt(p) => {
            let job = Job::new(&p.common)?;
            let n = module_or_k(&job.algebra, p.module2.as_deref())?;
            job.report(audit::audit_second_ext(&job.module, &n, &job.cfg)?)
        }
        AuditCommand::Third { common, i0 } => {
            let job = Job::new(&common)?;
            job.report(audit::audit_third(&job.module, i0, &job.cfg)?)
        }
        AuditCommand::Modx { common, x } => {
            if common.steps < common.window + 2 {
                return Err(Failure::Usage("--steps must be at least --window + 2".into()));
            }
            let a = load_ring(&common.ring)?;
            let cfg = AuditConfig {
                depth: common.steps,
                window: common.window,
                seed: common.seed,
                budget: common.budget,
                ..AuditConfig::default()
            };
            let form = match x {
                Some(s) => a.ring().parse(&s)?,
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(common.seed);
                    a.find_linear_regular_element(a.degree_bound(), 32, &mut rng)?
                        .ok_or(Error::NoRegularElement(32))?
                }
            };
            report(audit::modx_check(&a, &form, None, &cfg)?, common.json)
        }
        AuditCommand::Invariants { common, count, graded } => {
            let job = Job::new(&common)?;
            let opts = SuiteOptions { count, graded };
            job.report(audit::invariant_suite(&job.algebra, opts, &job.cfg)?)
        }
    }
}
