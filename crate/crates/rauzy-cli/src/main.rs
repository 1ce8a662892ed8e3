//! Command-line surface over the Rauzy class toolkit.
//!
//! Exit codes: 0 success or all checks passed, 1 verification failure,
//! 2 usage or parse error.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rauzy::blocks::self_inverse_for;
use rauzy::class::{enumerate_class_mode, RauzyGraph};
use rauzy::dynamics::{self, parse_rationals, Suspension};
use rauzy::error::Error;
use rauzy::genconstruct::{self_inverse_gen_for_component, GenComponent};
use rauzy::genperm::{enumerate_gen_class, gen_genus, gen_signature, GenPerm, GenSignature};
use rauzy::invariants::{class_key, spin_parity, ClassKey, ComponentKind, Signature};
use rauzy::lagrangian::{is_isotropic, is_lagrangian, is_transposition_lagrangian, orbits};
use rauzy::perm::Permutation;
use rauzy::verify::{run_suite, Bounds, SUITES};

#[derive(Parser)]
#[command(
    name = "rauzy",
    about = "Rauzy classes of interval exchanges and linear involutions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Jsonl,
}

#[derive(Subcommand)]
enum Command {
    /// Signature, genus, spin, hyperellipticity, and class key of a
    /// permutation (true or generalized)
    Invariants {
        /// `3 2 1`, `a b c / c b a`, or `a b b / c a c d d`
        perm: String,
    },
    /// Enumerate the Rauzy class of a permutation and export its graph
    Class {
        perm: String,
        #[arg(long, default_value_t = 1_000_000)]
        max_size: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<String>,
        /// Worker threads for class expansion (1 = sequential)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Build a standard self-inverse permutation with a given class key
    Construct {
        /// Signature text, e.g. `(4)` or `(1;1,2)` or `(0,1^2)`
        #[arg(long)]
        signature: String,
        /// Component type: hyp, odd, even, nonhyp, none
        #[arg(long, value_name = "TYPE")]
        r#type: Option<String>,
    },
    /// Build a self-inverse generalized permutation with a given signature
    ConstructGen {
        /// Signature text, e.g. `(0,1^8,-1^4)`
        #[arg(long)]
        signature: String,
        /// Component: hyp, nonhyp, reg, irr
        #[arg(long)]
        component: Option<String>,
    },
    /// Run induction on exact length data and print the orbit of shapes
    Induct {
        perm: String,
        /// Comma-separated rationals, one per letter, e.g. `1/2,1/3,1/6`
        #[arg(long)]
        lengths: String,
        /// Optional suspension heights; induction then carries them along
        #[arg(long)]
        tau: Option<String>,
        #[arg(long)]
        steps: usize,
    },
    /// Emit the suspension polygon of (perm, lengths, tau) as SVG
    Polygon {
        perm: String,
        /// Lengths; unit lengths when omitted
        #[arg(long)]
        lengths: Option<String>,
        /// Heights; the unit choice `1,0,..,0,-1` when omitted
        #[arg(long)]
        tau: Option<String>,
        #[arg(long)]
        out: String,
    },
    /// Orbit decomposition, homology spans, ranks, and Lagrangian verdicts
    Lagrangian { perm: String },
    /// Write the full atlas of classes on d letters as JSONL
    Atlas {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: String,
        #[arg(long, default_value_t = 10_000_000)]
        max_size: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run a verification suite; exits 1 if any check fails
    Verify {
        /// Suite name or `all`
        suite: String,
        #[arg(long, default_value_t = 6)]
        d: usize,
        #[arg(long, default_value_t = 4)]
        letters: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// List available suites and exit
        #[arg(long)]
        list: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. }
                | Error::InvalidPermutation(_)
                | Error::InvalidSignature(_)
                | Error::UnknownSuite(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_jobs(jobs: usize) -> bool {
    if jobs > 1 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
        true
    } else {
        false
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_jobs(_jobs: usize) -> bool {
    false
}

fn run(cli: Cli) -> rauzy::Result<ExitCode> {
    match cli.command {
        Command::Invariants { perm } => invariants_cmd(&perm),
        Command::Class {
            perm,
            max_size,
            format,
            out,
            jobs,
        } => class_cmd(&perm, max_size, format, out.as_deref(), jobs),
        Command::Construct { signature, r#type } => construct_cmd(&signature, r#type.as_deref()),
        Command::ConstructGen {
            signature,
            component,
        } => construct_gen_cmd(&signature, component.as_deref()),
        Command::Induct {
            perm,
            lengths,
            tau,
            steps,
        } => induct_cmd(&perm, &lengths, tau.as_deref(), steps),
        Command::Polygon {
            perm,
            lengths,
            tau,
            out,
        } => polygon_cmd(&perm, lengths.as_deref(), tau.as_deref(), &out),
        Command::Lagrangian { perm } => lagrangian_cmd(&perm),
        Command::Atlas {
            d,
            out,
            max_size,
            jobs,
        } => {
            let parallel = configure_jobs(jobs);
            let text = rauzy::atlas::atlas_jsonl(d, max_size, parallel)?;
            fs::write(&out, text).map_err(|e| Error::Parse {
                pos: 0,
                msg: format!("cannot write {out}: {e}"),
            })?;
            println!("wrote atlas for d={d} to {out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            d,
            letters,
            seed,
            samples,
            jobs,
            list,
        } => {
            if list {
                for s in SUITES {
                    println!("{s}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let parallel = configure_jobs(jobs);
            let bounds = Bounds {
                d,
                letters,
                seed,
                samples,
                parallel,
                ..Bounds::default()
            };
            let report = run_suite(&suite, &bounds)?;
            for c in &report.checks {
                if c.passed {
                    println!("PASS {}", c.name);
                } else {
                    println!("FAIL {} :: {}", c.name, c.detail);
                }
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

/// A permutation given on the command line: generalized when some letter
/// repeats within the rows, true otherwise.
enum AnyPerm {
    True(Permutation),
    Gen(GenPerm),
}

fn parse_any(text: &str) -> rauzy::Result<AnyPerm> {
    if text.contains('/') {
        let gp = GenPerm::parse(text)?;
        return Ok(match gp.to_true() {
            Some(p) => AnyPerm::True(p),
            None => AnyPerm::Gen(gp),
        });
    }
    Ok(AnyPerm::True(Permutation::parse(text)?))
}

fn invariants_cmd(perm: &str) -> rauzy::Result<ExitCode> {
    match parse_any(perm)? {
        AnyPerm::True(p) => {
            let key: ClassKey = class_key(&p)?;
            println!("permutation:   {p}");
            println!("signature:     {}", key.signature);
            println!("genus:         {}", key.signature.genus());
            match spin_parity(&p)? {
                Some(v) => println!("spin:          {v}"),
                None => println!("spin:          undefined (odd degrees)"),
            }
            println!(
                "hyperelliptic: {}",
                key.kind == ComponentKind::Hyperelliptic
            );
            println!("self-inverse:  {}", p.is_self_inverse());
            println!("class key:     {key}");
        }
        AnyPerm::Gen(gp) => {
            let sig = gen_signature(&gp)?;
            println!("generalized permutation: {gp}");
            println!("signature:               {sig}");
            println!("genus:                   {}", gen_genus(&gp)?);
            println!("self-inverse:            {}", gp.is_self_inverse());
            println!(
                "self-inverse possible:   {}",
                rauzy::genperm::self_inverse_exists(&sig)
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn class_cmd(
    perm: &str,
    max_size: usize,
    format: GraphFormat,
    out: Option<&str>,
    jobs: usize,
) -> rauzy::Result<ExitCode> {
    let parallel = configure_jobs(jobs);
    let emit = |text: String| -> rauzy::Result<()> {
        match out {
            Some(path) => fs::write(path, text).map_err(|e| Error::Parse {
                pos: 0,
                msg: format!("cannot write {path}: {e}"),
            }),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    };
    match parse_any(perm)? {
        AnyPerm::True(p) => {
            let graph: RauzyGraph = enumerate_class_mode(&p, max_size, parallel)?;
            eprintln!(
                "class of {p}: {} permutations, {} edges",
                graph.len(),
                graph.edges().len()
            );
            match format {
                GraphFormat::Dot => emit(graph.to_dot())?,
                GraphFormat::Jsonl => emit(graph.to_jsonl())?,
            }
        }
        AnyPerm::Gen(gp) => {
            let graph = enumerate_gen_class(&gp, max_size)?;
            eprintln!(
                "class of {gp}: {} permutations, {} undefined moves",
                graph.len(),
                graph.undefined_move_count()
            );
            match format {
                GraphFormat::Dot => emit(graph.to_dot())?,
                GraphFormat::Jsonl => {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: "jsonl export covers true permutations only".into(),
                    })
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn construct_cmd(signature: &str, kind: Option<&str>) -> rauzy::Result<ExitCode> {
    let sig = Signature::parse(signature)?;
    let kinds: Vec<ComponentKind> = match kind {
        Some(k) => vec![ComponentKind::parse(k)?],
        None => vec![
            ComponentKind::Hyperelliptic,
            ComponentKind::Odd,
            ComponentKind::Even,
            ComponentKind::NonHyperelliptic,
            ComponentKind::Plain,
        ],
    };
    for kind in kinds {
        let key = ClassKey {
            signature: sig.clone(),
            kind,
        };
        match self_inverse_for(&key) {
            Ok(p) => {
                println!("{key} -> {p}");
                return Ok(ExitCode::SUCCESS);
            }
            Err(Error::UnsupportedKey(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::UnsupportedKey(format!(
        "{sig} with any component type"
    )))
}

fn construct_gen_cmd(signature: &str, component: Option<&str>) -> rauzy::Result<ExitCode> {
    let sig = GenSignature::parse(signature)?;
    let component = match component {
        Some(c) => Some(GenComponent::parse(c)?),
        None => None,
    };
    match self_inverse_gen_for_component(&sig, component)? {
        Some(p) => {
            println!("{sig} -> {p}");
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("{sig}: no class with this signature contains a self-inverse");
            Ok(ExitCode::from(1))
        }
    }
}

fn induct_cmd(perm: &str, lengths: &str, tau: Option<&str>, steps: usize) -> rauzy::Result<ExitCode> {
    let lambda = parse_rationals(lengths)?;
    match parse_any(perm)? {
        AnyPerm::True(p) => match tau {
            Some(t) => {
                let tau = parse_rationals(t)?;
                let mut s = Suspension::new(p, lambda, tau)?;
                println!("0: {}  lambda [{}]  tau [{}]", s.perm, join(&s.lambda), join(&s.tau));
                for step in 1..=steps {
                    match s.rv_step() {
                        Ok((next, kind)) => {
                            println!(
                                "{step}: {}  lambda [{}]  tau [{}]  (type {kind})",
                                next.perm,
                                join(&next.lambda),
                                join(&next.tau)
                            );
                            s = next;
                        }
                        Err(Error::InductionUndefined) => {
                            println!("{step}: induction undefined (equal final lengths)");
                            break;
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
            None => {
                let mut cur = (p, lambda);
                println!("0: {}  lambda [{}]", cur.0, join(&cur.1));
                for step in 1..=steps {
                    match dynamics::rv_step(&cur.0, &cur.1) {
                        Ok((q, l, kind)) => {
                            println!("{step}: {q}  lambda [{}]  (type {kind})", join(&l));
                            cur = (q, l);
                        }
                        Err(Error::InductionUndefined) => {
                            println!("{step}: induction undefined (equal final lengths)");
                            break;
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
        },
        AnyPerm::Gen(gp) => {
            let mut cur = (gp, lambda);
            println!("0: {}  lambda [{}]", cur.0, join(&cur.1));
            for step in 1..=steps {
                match dynamics::gen_rv_step(&cur.0, &cur.1)? {
                    dynamics::GenStep::Next(q, l) => {
                        println!("{step}: {q}  lambda [{}]", join(&l));
                        cur = (q, l);
                    }
                    dynamics::GenStep::MoveUndefined(kind) => {
                        println!("{step}: move of type {kind} undefined (connection)");
                        break;
                    }
                    dynamics::GenStep::EqualLengths => {
                        println!("{step}: induction undefined (equal final lengths)");
                        break;
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn join(xs: &[dynamics::Rat]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn polygon_cmd(
    perm: &str,
    lengths: Option<&str>,
    tau: Option<&str>,
    out: &str,
) -> rauzy::Result<ExitCode> {
    let p = Permutation::parse(perm)?;
    let s = match (lengths, tau) {
        (None, None) => Suspension::unit(&p)?,
        (l, t) => {
            let unit = Suspension::unit(&p);
            let lambda = match l {
                Some(text) => parse_rationals(text)?,
                None => vec![dynamics::rat(1, 1); p.len()],
            };
            let tau = match t {
                Some(text) => parse_rationals(text)?,
                None => unit?.tau,
            };
            Suspension::new(p, lambda, tau)?
        }
    };
    let svg = s.polygon().to_svg();
    fs::write(out, svg).map_err(|e| Error::Parse {
        pos: 0,
        msg: format!("cannot write {out}: {e}"),
    })?;
    println!("wrote polygon (area {}) to {out}", s.polygon().area());
    Ok(ExitCode::SUCCESS)
}

fn lagrangian_cmd(perm: &str) -> rauzy::Result<ExitCode> {
    let p = Permutation::parse(perm)?;
    let dec = orbits(&p)?;
    println!("permutation: {p}");
    println!("genus:       {}", rauzy::invariants::genus(&p)?);
    for (i, orbit) in dec.orbits().iter().enumerate() {
        let letters: Vec<String> = orbit.iter().map(|x| x.to_string()).collect();
        let image: Vec<String> = dec.image(i).iter().map(|x| x.to_string()).collect();
        println!(
            "orbit {{{}}}: span vector ({})",
            letters.join(","),
            image.join(",")
        );
    }
    let rank = rauzy::lagrangian::rational_rank(dec.images());
    println!("vertical span rank: {rank}");
    println!("isotropic:  {}", is_isotropic(&p)?);
    println!("lagrangian: {}", is_lagrangian(&p)?);
    if p.is_self_inverse() {
        println!(
            "transposition lagrangian: {}",
            is_transposition_lagrangian(&p)?
        );
    } else {
        println!("transposition lagrangian: n/a (not self-inverse)");
    }
    Ok(ExitCode::SUCCESS)
}
