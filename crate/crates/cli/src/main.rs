use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use kmroots::affine::maximal::{maximal_closed, maximal_real_closed, MaximalCase};
use kmroots::affine::tuple::is_maximal_tuple;
use kmroots::cartan::CartanDatum;
use kmroots::fixtures;
use kmroots::io::{self, loop_element_json, IoError};
use kmroots::loopalg::{
    generate_with_cap, split_sym_special, verify_keyprop, verify_root_generated, verify_tuple_subalgebra, ChevalleyBasis,
};
use kmroots::rootslice::{enumerate_with_cap, RootClass, RootError, RootSlice, RootVec, DEFAULT_MAX_ROOTS};
use kmroots::subroot::{b_sigma, minimal_elements, orbit, pi_system_check, verify_bijection, PiVerdict, RootSet, Status};

const EXIT_REFUTED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;

#[derive(Parser)]
#[command(name = "kmroots", version, about = "Exact root-system and subalgebra computations for Kac-Moody algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Global {
    /// Exit with status 3 when an answer is truncated or undecided.
    #[arg(long, global = true)]
    strict: bool,
    /// Emit compact JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Emit indented JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Recorded in the report; all commands are deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct GcmArgs {
    /// Cartan matrix JSON: {"rank": n, "a": [[...]]}
    #[arg(long)]
    gcm: PathBuf,
    #[arg(long, default_value_t = 20)]
    height: i64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Positive roots up to a height bound.
    Roots(GcmArgs),
    /// Classify a vector as real root, imaginary root or non-root.
    Classify {
        #[command(flatten)]
        g: GcmArgs,
        /// Coefficients as a JSON array, e.g. "[1,0,2]".
        #[arg(long)]
        root: String,
    },
    /// The alpha-string through beta.
    String {
        #[command(flatten)]
        g: GcmArgs,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
    /// Canonical generators of a subroot system, with the bijection checks.
    PiOf {
        #[command(flatten)]
        g: GcmArgs,
        /// Root set JSON: {"rank": n, "roots": [...]}
        #[arg(long)]
        roots: PathBuf,
        #[arg(long, default_value_t = kmroots::subroot::DEFAULT_MAX_GENS)]
        max_gens: usize,
    },
    /// Check that no difference of two generators is a root.
    Pisystem {
        #[command(flatten)]
        g: GcmArgs,
        /// Generators JSON: {"gens": [...]}
        #[arg(long)]
        gens: PathBuf,
    },
    /// The matrix of pairings of a pi-system.
    Bsigma {
        #[arg(long)]
        gcm: PathBuf,
        #[arg(long)]
        gens: PathBuf,
    },
    /// Reflection orbit of a pi-system inside the height slice.
    Orbit {
        #[command(flatten)]
        g: GcmArgs,
        #[arg(long)]
        gens: PathBuf,
    },
    /// Validate a periodic root set.
    AffineValidate {
        #[arg(long)]
        datum: PathBuf,
    },
    /// Canonical generators of a periodic root set.
    AffinePi {
        #[arg(long)]
        datum: PathBuf,
    },
    /// Maximal closed subroot systems of a finite type and the maximal real
    /// closed affine ones built from them.
    AffineMaximal {
        #[arg(long = "type")]
        finite_type: String,
        /// Prime periods to list for the full-gradient case.
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        primes: Vec<i64>,
    },
    /// Validate a tuple and list its roots within the band.
    TupleValidate {
        #[arg(long)]
        datum: PathBuf,
        #[arg(long, default_value_t = 6)]
        band: i64,
    },
    /// Whether a tuple gives a maximal symmetric regular subalgebra.
    TupleMaximal {
        #[arg(long)]
        datum: PathBuf,
        /// Compare against subalgebras containing d.
        #[arg(long)]
        with_d: bool,
    },
    /// Subalgebra generated by homogeneous elements within a degree band.
    LoopGenerate {
        /// {"finite_type": "A2", "gens": [{"terms": [...]}, ...]}
        #[arg(long)]
        gens: PathBuf,
        #[arg(long, default_value_t = 6)]
        band: i64,
        /// Print a basis of every weight space.
        #[arg(long)]
        basis: bool,
    },
    /// Bracket-engine checks of an affine datum or of a generated subalgebra.
    LoopVerify {
        #[arg(long, conflicts_with = "gens", required_unless_present = "gens")]
        datum: Option<PathBuf>,
        #[arg(long)]
        gens: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        band: i64,
        #[arg(long)]
        with_d: bool,
    },
    /// Rerun every worked example.
    VerifyPaperExamples,
    /// `verify paper-examples`.
    Verify {
        #[arg(value_parser = ["paper-examples"])]
        what: String,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Undecided(String),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::Input(e.to_string())
    }
}

/// A report and whether it refutes the claim checked.
struct Outcome {
    report: Value,
    refuted: bool,
    undecided: bool,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Outcome { report, refuted: false, undecided: false }
    }
}

fn max_roots() -> usize {
    std::env::var("KMROOTS_MAX_ROOTS").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_MAX_ROOTS)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_gcm(path: &Path) -> Result<CartanDatum, Failure> {
    Ok(io::parse_gcm(&read(path)?)?)
}

fn root_arg(flag: &str, s: &str, rank: usize) -> Result<RootVec, Failure> {
    let v: Vec<i64> = serde_json::from_str(s).map_err(|e| Failure::Input(format!("--{flag}: {e}")))?;
    if v.len() != rank {
        return Err(Failure::Input(format!("--{flag}: expected {rank} coordinates, got {}", v.len())));
    }
    Ok(RootVec(v))
}

fn slice(cd: &CartanDatum, height: i64) -> Result<RootSlice, Failure> {
    enumerate_with_cap(cd, height, max_roots()).map_err(|e| match e {
        RootError::CapExceeded(_) => Failure::Undecided(e.to_string()),
        _ => Failure::Input(e.to_string()),
    })
}

fn sub_err(e: kmroots::subroot::SubrootError) -> Failure {
    match e {
        kmroots::subroot::SubrootError::Truncated { .. } => Failure::Undecided(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn strs<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

fn run(cmd: &Cmd) -> Result<Outcome, Failure> {
    match cmd {
        Cmd::Roots(g) => {
            let s = slice(&load_gcm(&g.gcm)?, g.height)?;
            Ok(Outcome::ok(json!({
                "height": g.height,
                "real": s.pos_real().iter().collect::<Vec<_>>(),
                "imaginary": s.pos_imag().iter().collect::<Vec<_>>(),
                "count": s.len(),
            })))
        }
        Cmd::Classify { g, root } => {
            let cd = load_gcm(&g.gcm)?;
            let r = root_arg("root", root, cd.rank())?;
            let s = slice(&cd, g.height)?;
            let c = s.classify(&r);
            Ok(Outcome { report: json!({"root": r, "class": c}), refuted: false, undecided: c == RootClass::Unknown })
        }
        Cmd::String { g, alpha, beta } => {
            let cd = load_gcm(&g.gcm)?;
            let (a, b) = (root_arg("alpha", alpha, cd.rank())?, root_arg("beta", beta, cd.rank())?);
            let s = slice(&cd, g.height)?;
            match s.root_string(&a, &b) {
                Ok(st) => Ok(Outcome::ok(json!({"string": st, "real_count": st.real_count()}))),
                Err(RootError::Truncated(h)) => Err(Failure::Undecided(format!("string leaves the height bound {h}"))),
                Err(e) => Err(input(e)),
            }
        }
        Cmd::PiOf { g, roots, max_gens } => {
            let cd = load_gcm(&g.gcm)?;
            let s = slice(&cd, g.height)?;
            let psi: RootSet = io::parse_root_set(&read(roots)?, cd.rank())?.into_iter().collect();
            let psi = if psi.is_symmetric() { psi } else { RootSet::symmetric(psi.positive()) };
            let r = verify_bijection(&s, &psi, *max_gens).map_err(sub_err)?;
            let min = minimal_elements(&s, &psi).map_err(sub_err)?;
            Ok(Outcome {
                refuted: r.status == Status::Fail,
                undecided: r.status == Status::Undecided,
                report: json!({"pi": r.pi, "minimality": min, "bijection": r}),
            })
        }
        Cmd::Pisystem { g, gens } => {
            let cd = load_gcm(&g.gcm)?;
            let sigma = io::parse_pi_system(&read(gens)?, cd.rank())?;
            let s = slice(&cd, g.height)?;
            let v = pi_system_check(&s, &sigma).map_err(sub_err)?;
            let verdict = match &v {
                PiVerdict::Certified => "Certified",
                PiVerdict::Refuted(..) => "Refuted",
                PiVerdict::Undecided(_) => "Undecided",
            };
            Ok(Outcome {
                refuted: matches!(v, PiVerdict::Refuted(..)),
                undecided: matches!(v, PiVerdict::Undecided(_)),
                report: json!({"verdict": verdict, "detail": v}),
            })
        }
        Cmd::Bsigma { gcm, gens } => {
            let cd = load_gcm(gcm)?;
            let sigma = io::parse_pi_system(&read(gens)?, cd.rank())?;
            let b = b_sigma(&cd, &sigma).map_err(sub_err)?;
            Ok(Outcome::ok(json!({"labels": b.labels, "b": io::gcm_json(&b.gcm)})))
        }
        Cmd::Orbit { g, gens } => {
            let cd = load_gcm(&g.gcm)?;
            let sigma = io::parse_pi_system(&read(gens)?, cd.rank())?;
            let s = slice(&cd, g.height)?;
            let o = orbit(&s, &sigma).map_err(sub_err)?;
            Ok(Outcome { refuted: false, undecided: o.truncated, report: json!({"positive": o.set.positive(), "size": o.set.len(), "truncated": o.truncated}) })
        }
        Cmd::AffineValidate { datum } => match io::parse_affine(&read(datum)?) {
            Ok(a) => Ok(Outcome::ok(json!({
                "valid": true,
                "period": a.psi.period(),
                "finite_part": a.psi.finite_part(),
                "contains_c": a.psi.contains_c(),
            }))),
            Err(IoError::Affine(e)) => Ok(Outcome { report: json!({"valid": false, "reason": e.to_string()}), refuted: true, undecided: false }),
            Err(e) => Err(e.into()),
        },
        Cmd::AffinePi { datum } => {
            let a = io::parse_affine(&read(datum)?)?;
            Ok(Outcome::ok(json!({"pi": strs(a.psi.pi_exact())})))
        }
        Cmd::AffineMaximal { finite_type, primes } => {
            let fr = io::finite_system(finite_type)?;
            let maxes = maximal_closed(&fr).map_err(input)?;
            let mut case1 = Vec::new();
            for &k in primes {
                let f = vec![0; fr.rank()];
                let (psi, grad) = maximal_real_closed(&fr, &MaximalCase::Case1 { k, f_simple: f }).map_err(input)?;
                case1.push(json!({"k": k, "period": psi.period(), "gradient": grad}));
            }
            let mut case2 = Vec::new();
            for m in &maxes {
                let (_, grad) = maximal_real_closed(&fr, &MaximalCase::Case2 { psi0: m.clone() }).map_err(input)?;
                case2.push(json!({"psi0": m, "gradient": grad}));
            }
            Ok(Outcome::ok(json!({"maximal_closed": maxes, "case1": case1, "case2": case2})))
        }
        Cmd::TupleValidate { datum, band } => {
            let a = io::parse_affine(&read(datum)?)?;
            match a.tuple() {
                Ok(t) => {
                    let r = t.roots(*band);
                    Ok(Outcome::ok(json!({"valid": true, "roots": r, "contains_c": t.has_c()})))
                }
                Err(e) => Ok(Outcome { report: json!({"valid": false, "reason": e.to_string()}), refuted: true, undecided: false }),
            }
        }
        Cmd::TupleMaximal { datum, with_d } => {
            let t = io::parse_affine(&read(datum)?)?.tuple()?;
            let v = is_maximal_tuple(&t, *with_d).map_err(input)?;
            Ok(Outcome { refuted: !v.maximal, undecided: false, report: json!(v) })
        }
        Cmd::LoopGenerate { gens, band, basis } => {
            let (fr, g) = io::parse_loop_gens(&read(gens)?)?;
            let cb = ChevalleyBasis::new(fr).map_err(input)?;
            let s = generate_with_cap(&cb, &g, *band, max_roots()).map_err(|e| match e {
                kmroots::loopalg::LoopError::ResourceCap(_) => Failure::Undecided(e.to_string()),
                _ => Failure::Input(e.to_string()),
            })?;
            let mut report = json!({
                "band": band,
                "dim": s.dim(),
                "support": s.root_support(),
                "sign_convention": kmroots::loopalg::chevalley::SIGN_CONVENTION,
                "form_convention": kmroots::loopalg::chevalley::FORM_CONVENTION,
                "caveat": kmroots::loopalg::generate::BAND_CAVEAT,
            });
            if *basis {
                let spans: Vec<Value> = s
                    .spans()
                    .keys()
                    .map(|w| json!({"weight": w.to_string(), "basis": s.basis_of(w).iter().map(loop_element_json).collect::<Vec<_>>()}))
                    .collect();
                report["spans"] = Value::Array(spans);
            }
            Ok(Outcome::ok(report))
        }
        Cmd::LoopVerify { datum, gens, band, with_d } => {
            if let Some(d) = datum {
                let a = io::parse_affine(&read(d)?)?;
                let cb = ChevalleyBasis::new(a.fr.clone()).map_err(input)?;
                let rg = verify_root_generated(&cb, &a.psi, *band).map_err(input)?;
                let t = a.tuple()?;
                let ts = verify_tuple_subalgebra(&cb, &t, *band, *with_d).map_err(input)?;
                Ok(Outcome {
                    refuted: !rg.pass || !ts.pass,
                    undecided: false,
                    report: json!({"root_generated": rg, "tuple_subalgebra": ts}),
                })
            } else {
                let (fr, g) = io::parse_loop_gens(&read(gens.as_ref().expect("clap enforces one input"))?)?;
                let cb = ChevalleyBasis::new(fr).map_err(input)?;
                let s = generate_with_cap(&cb, &g, *band, max_roots()).map_err(input)?;
                let kp = verify_keyprop(&cb, &s);
                let sp = split_sym_special(&cb, &s).map_err(input)?;
                Ok(Outcome {
                    refuted: !kp.pass || (sp.hypothesis.holds() && !sp.sp_ideal),
                    undecided: false,
                    report: json!({"keyprop": kp, "split": sp}),
                })
            }
        }
        Cmd::VerifyPaperExamples | Cmd::Verify { .. } => {
            let results = fixtures::run_all();
            let pass = results.iter().all(|r| r.pass);
            Ok(Outcome { refuted: !pass, undecided: false, report: json!({"pass": pass, "examples": results}) })
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, x)| match x {
                Value::String(s) => format!("{k}: {s}"),
                Value::Array(items) if items.iter().all(|i| i.is_object()) && !items.is_empty() => {
                    let rows: Vec<String> = items.iter().map(|i| format!("  {}", serde_json::to_string(i).unwrap())).collect();
                    format!("{k}:\n{}", rows.join("\n"))
                }
                _ => format!("{k}: {x}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        _ => v.to_string(),
    }
}

fn emit(g: &Global, v: &Value) {
    if g.pretty {
        println!("{}", serde_json::to_string_pretty(v).unwrap());
    } else if g.json {
        println!("{v}");
    } else {
        println!("{}", plain(v));
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let g = &cli.global;
    match run(&cli.cmd) {
        Ok(mut o) => {
            if let Value::Object(m) = &mut o.report {
                m.insert("seed".into(), json!(g.seed));
            }
            emit(g, &o.report);
            if o.refuted {
                ExitCode::from(EXIT_REFUTED)
            } else if o.undecided && g.strict {
                ExitCode::from(EXIT_UNDECIDED)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Undecided(msg)) => {
            emit(g, &json!({"undecided": msg}));
            if g.strict {
                ExitCode::from(EXIT_UNDECIDED)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}
