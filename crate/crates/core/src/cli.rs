//! Command-line front end.
//!
//! Exit codes: 0 success, 2 usage error, 3 failed mathematical precondition,
//! 4 internal assertion failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::Value;

use crate::chern::{set_cache_dir, ChernVector};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::pipelines::{self, NormalBundleType};
use crate::report::CountReport;
use crate::ring::{GradedRing, WeightedPolyRing};
use crate::schubert::{ChowClass, GrassmannianRing};

pub const CACHE_ENV: &str = "CURVECOUNT_CACHE_DIR";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Structured,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliConfig {
    pub output_format: OutputFormat,
    pub trace: bool,
    pub cache_dir: Option<PathBuf>,
}

#[derive(Parser, Debug)]
#[command(
    name = "curvecount",
    version,
    about = "Enumerative counts of lines and conics on hypersurfaces by Schubert calculus"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain, global = true)]
    format: OutputFormat,

    /// Include intermediate classes in the output.
    #[arg(long, global = true)]
    trace: bool,

    /// Directory for caching universal symmetric-power polynomials.
    #[arg(long, env = CACHE_ENV, global = true)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lines on a general hypersurface of degree D in P^n.
    Lines {
        #[arg(long)]
        ambient: u32,
        #[arg(long)]
        degree: u32,
    },
    /// Lines on a general complete intersection in P^n.
    LinesCi {
        #[arg(long)]
        ambient: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
    },
    /// Conics on a general quintic threefold.
    ConicsQuintic,
    /// Conics on a general hypersurface, when the bundle rank matches the parameter count.
    Conics {
        #[arg(long)]
        ambient: u32,
        #[arg(long)]
        degree: u32,
    },
    /// Equivalence of the lines on a degree-e factor of a reducible hypersurface.
    Equivalence {
        #[arg(long)]
        total_degree: u32,
        #[arg(long)]
        factor_degree: u32,
        #[arg(long)]
        ambient: u32,
    },
    /// Check that factor equivalences add up to the smooth line count.
    SplitReport {
        #[arg(long)]
        total_degree: u32,
        #[arg(long)]
        ambient: u32,
    },
    /// Naive parameter count for rational curves of a given degree.
    DimCount {
        #[arg(long)]
        ambient: u32,
        #[arg(long)]
        hypersurface: u32,
        #[arg(long)]
        curve_degree: u32,
    },
    /// h^0 and rigidity of a normal bundle O(a) + O(b).
    NormalBundle {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// Verify the published component tallies against computed totals.
    TallyChecks,
    /// Not supported: needs a Hilbert-scheme compactification.
    TwistedCubics,
    /// Not supported: outside the implemented moduli spaces.
    EllipticQuartics,
    /// Schubert calculus on a Grassmannian.
    #[command(subcommand)]
    Schubert(SchubertOp),
    /// Chern-class calculus, formal or on the dual universal bundle.
    #[command(subcommand)]
    Chern(ChernOp),
}

#[derive(Subcommand, Debug)]
enum SchubertOp {
    /// Product σ_a · σ_b.
    Mult {
        #[arg(long, value_parser = parse_grassmannian)]
        grassmannian: GrassmannianRing,
        #[arg(long, allow_hyphen_values = true)]
        a: Partition,
        #[arg(long, allow_hyphen_values = true)]
        b: Partition,
    },
    /// Pieri product σ_class · σ_a.
    Pieri {
        #[arg(long, value_parser = parse_grassmannian)]
        grassmannian: GrassmannianRing,
        #[arg(long)]
        class: Partition,
        #[arg(long)]
        a: u32,
    },
    /// Degree of the product of the given classes.
    Integrate {
        #[arg(long, value_parser = parse_grassmannian)]
        grassmannian: GrassmannianRing,
        #[arg(long = "class", required = true)]
        classes: Vec<Partition>,
    },
    /// Giambelli expansion of σ_class through special classes.
    Giambelli {
        #[arg(long, value_parser = parse_grassmannian)]
        grassmannian: GrassmannianRing,
        #[arg(long)]
        class: Partition,
    },
    /// Poincaré-dual partition.
    Dual {
        #[arg(long, value_parser = parse_grassmannian)]
        grassmannian: GrassmannianRing,
        #[arg(long)]
        class: Partition,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct BundleSource {
    /// Formal rank-r bundle with Chern classes c1..cr.
    #[arg(long)]
    rank: Option<usize>,
    /// Dual universal bundle U* on Gr(r,N).
    #[arg(long, value_parser = parse_grassmannian)]
    grassmannian: Option<GrassmannianRing>,
}

#[derive(Subcommand, Debug)]
enum ChernOp {
    /// Chern classes of Sym^d.
    Sym {
        #[command(flatten)]
        source: BundleSource,
        #[arg(long)]
        degree: u32,
        /// Highest degree to keep (formal bundles only).
        #[arg(long)]
        trunc: Option<u32>,
    },
    /// Chern classes of the dual bundle.
    Dual {
        #[command(flatten)]
        source: BundleSource,
    },
    /// Twist by a line bundle: formal class t, or t = m·σ_1 on a Grassmannian.
    Twist {
        #[command(flatten)]
        source: BundleSource,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        t_multiple: i64,
    },
    /// c(Sym^p U*) / c(Sym^q U*) on a Grassmannian.
    Quotient {
        #[arg(long, value_parser = parse_grassmannian)]
        grassmannian: GrassmannianRing,
        #[arg(long)]
        numerator_sym: u32,
        #[arg(long)]
        denominator_sym: u32,
    },
    /// Segre classes s_0..s_trunc.
    Segre {
        #[command(flatten)]
        source: BundleSource,
        #[arg(long)]
        trunc: usize,
    },
}

fn parse_grassmannian(s: &str) -> std::result::Result<GrassmannianRing, String> {
    let (r, n) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"r,N\", got {s:?}"))?;
    let r: u32 = r.trim().parse().map_err(|_| format!("bad r in {s:?}"))?;
    let n: u32 = n.trim().parse().map_err(|_| format!("bad N in {s:?}"))?;
    GrassmannianRing::new(r, n).map_err(|e| e.to_string())
}

/// Parses `argv` (including the program name), runs the command and writes
/// the result. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    let config = CliConfig {
        output_format: cli.format,
        trace: cli.trace,
        cache_dir: cli.cache_dir.clone(),
    };
    set_cache_dir(config.cache_dir.clone());
    match execute(&cli.command) {
        Ok(output) => {
            let _ = out.write_all(render(&output, &config).as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

enum Output {
    /// A pipeline report; the trace is shown only on request.
    Report(CountReport),
    /// A calculator result: plain text plus a report whose trace is always shown.
    Calc { text: String, report: CountReport },
}

fn render(output: &Output, config: &CliConfig) -> String {
    match (output, config.output_format) {
        (Output::Report(r), OutputFormat::Plain) => r.to_plain(config.trace),
        (Output::Report(r), OutputFormat::Structured) => r.to_json(config.trace) + "\n",
        (Output::Calc { text, .. }, OutputFormat::Plain) => text.clone(),
        (Output::Calc { report, .. }, OutputFormat::Structured) => report.to_json(true) + "\n",
    }
}

fn execute(command: &Command) -> Result<Output> {
    let report = match command {
        Command::Lines { ambient, degree } => {
            pipelines::count_lines_hypersurface(*ambient, *degree)?
        }
        Command::LinesCi { ambient, degrees } => {
            pipelines::count_lines_complete_intersection(*ambient, degrees)?
        }
        Command::ConicsQuintic => pipelines::count_conics_quintic()?,
        Command::Conics { ambient, degree } => {
            pipelines::count_conics_hypersurface(*ambient, *degree)?
        }
        Command::Equivalence {
            total_degree,
            factor_degree,
            ambient,
        } => pipelines::equivalence_lines_on_factor(*total_degree, *factor_degree, *ambient)?,
        Command::SplitReport {
            total_degree,
            ambient,
        } => pipelines::degeneration_split_report(*total_degree, *ambient)?,
        Command::DimCount {
            ambient,
            hypersurface,
            curve_degree,
        } => {
            let q = pipelines::naive_dimension_count(*ambient, *hypersurface, *curve_degree)?;
            let text = format!(
                "parameters={} conditions={} reparametrizations={} expected_dim={}\n",
                q.parameters, q.conditions, q.reparametrizations, q.expected_dim
            );
            let report = q.to_report(*ambient, *hypersurface, *curve_degree);
            return Ok(Output::Calc { text, report });
        }
        Command::NormalBundle { a, b } => {
            let t = NormalBundleType::new(*a, *b)?;
            let h = pipelines::normal_bundle_h0(t);
            let text = format!("h0={} rigid={}\n", h.h0, h.rigid);
            return Ok(Output::Calc {
                text,
                report: h.to_report(t),
            });
        }
        Command::TallyChecks => pipelines::tally_checks()?,
        Command::TwistedCubics => pipelines::count_twisted_cubics_quintic()?,
        Command::EllipticQuartics => pipelines::count_elliptic_quartics_quintic()?,
        Command::Schubert(op) => return schubert(op),
        Command::Chern(op) => return chern(op),
    };
    Ok(Output::Report(report))
}

fn class_json(c: &ChowClass) -> Value {
    serde_json::to_value(c.to_serialized()).expect("serializable")
}

fn class_output(
    name: &str,
    g: GrassmannianRing,
    inputs: &[(&str, Value)],
    c: &ChowClass,
) -> Output {
    let mut b = CountReport::builder(name).input("grassmannian", vec![g.r(), g.n()]);
    for (k, v) in inputs {
        b = b.input(k, v.clone());
    }
    b.trace("result", class_json(c));
    Output::Calc {
        text: format!("{c}\n"),
        report: b.finish(c.integrate()),
    }
}

fn schubert(op: &SchubertOp) -> Result<Output> {
    Ok(match op {
        SchubertOp::Mult {
            grassmannian: g,
            a,
            b,
        } => {
            let x = ChowClass::schubert(*g, a.clone())?;
            let y = ChowClass::schubert(*g, b.clone())?;
            let prod = x.multiply(&y)?;
            class_output(
                "schubert-mult",
                *g,
                &[("a", a.parts().into()), ("b", b.parts().into())],
                &prod,
            )
        }
        SchubertOp::Pieri {
            grassmannian: g,
            class,
            a,
        } => {
            let x = ChowClass::schubert(*g, class.clone())?;
            class_output(
                "schubert-pieri",
                *g,
                &[("class", class.parts().into()), ("a", (*a).into())],
                &x.pieri(*a),
            )
        }
        SchubertOp::Integrate {
            grassmannian: g,
            classes,
        } => {
            let mut prod = ChowClass::one(*g);
            for c in classes {
                prod = prod.multiply(&ChowClass::schubert(*g, c.clone())?)?;
            }
            let parts: Vec<Value> = classes.iter().map(|c| c.parts().into()).collect();
            match class_output(
                "schubert-integrate",
                *g,
                &[("classes", parts.into())],
                &prod,
            ) {
                Output::Calc { report, .. } => Output::Calc {
                    text: format!("{}\n", report.count),
                    report,
                },
                other => other,
            }
        }
        SchubertOp::Giambelli {
            grassmannian: g,
            class,
        } => class_output(
            "schubert-giambelli",
            *g,
            &[("class", class.parts().into())],
            &g.giambelli(class)?,
        ),
        SchubertOp::Dual {
            grassmannian: g,
            class,
        } => {
            let d = g.dual_partition(class)?;
            let mut b = CountReport::builder("schubert-dual")
                .input("grassmannian", vec![g.r(), g.n()])
                .input("class", class.parts());
            b.trace("dual", d.parts());
            Output::Calc {
                text: format!("{d}\n"),
                report: b.finish(BigInt::from(d.weight())),
            }
        }
    })
}

/// Formal Chern classes `c1..cr` of a rank-`r` bundle, truncated at `cutoff`.
fn formal_vector(
    prefix: &str,
    r: usize,
    cutoff: u32,
) -> (WeightedPolyRing, ChernVector<WeightedPolyRing>) {
    let ring = WeightedPolyRing::chern_classes(prefix, r, cutoff);
    formal_in(ring, r, 0)
}

fn formal_in(
    ring: WeightedPolyRing,
    r: usize,
    offset: usize,
) -> (WeightedPolyRing, ChernVector<WeightedPolyRing>) {
    let mut comps = vec![ring.one()];
    comps.extend((0..r).map(|i| ring.var(offset + i)));
    let v = ChernVector::new(ring.clone(), r, comps).expect("formal classes are well formed");
    (ring, v)
}

fn formal_output(
    name: &str,
    inputs: &[(&str, Value)],
    ring: &WeightedPolyRing,
    comps: &[crate::poly::MultiPoly],
    rank: usize,
    prefix: &str,
) -> Output {
    let mut b = CountReport::builder(name);
    for (k, v) in inputs {
        b = b.input(k, v.clone());
    }
    let mut text = String::new();
    for (i, c) in comps.iter().enumerate().skip(1) {
        let shown = ring.display(c);
        text.push_str(&format!("{prefix}{i} = {shown}\n"));
        b.trace(format!("{prefix}{i}"), shown);
    }
    Output::Calc {
        text,
        report: b.finish(BigInt::from(rank)),
    }
}

fn grassmannian_output(
    name: &str,
    g: GrassmannianRing,
    inputs: &[(&str, Value)],
    comps: &[ChowClass],
    rank: usize,
    prefix: &str,
) -> Output {
    let mut b = CountReport::builder(name).input("grassmannian", vec![g.r(), g.n()]);
    for (k, v) in inputs {
        b = b.input(k, v.clone());
    }
    let mut text = String::new();
    for (i, c) in comps.iter().enumerate().skip(1) {
        text.push_str(&format!("{prefix}{i} = {c}\n"));
        b.trace(format!("{prefix}{i}"), class_json(c));
    }
    Output::Calc {
        text,
        report: b.finish(BigInt::from(rank)),
    }
}

fn chern(op: &ChernOp) -> Result<Output> {
    match op {
        ChernOp::Sym {
            source,
            degree,
            trunc,
        } => {
            let inputs = [("degree", Value::from(*degree))];
            match (source.rank, source.grassmannian) {
                (Some(r), _) => {
                    let full = crate::chern::sym_rank(r.max(1), (*degree).max(1)) as u32;
                    let (ring, v) = formal_vector("c", r, trunc.unwrap_or(full).min(full));
                    let s = v.sym_power(*degree)?;
                    Ok(formal_output(
                        "chern-sym",
                        &inputs,
                        &ring,
                        s.components(),
                        s.rank(),
                        "c",
                    ))
                }
                (None, Some(g)) => {
                    let s = ChernVector::universal_dual(g).sym_power(*degree)?;
                    Ok(grassmannian_output(
                        "chern-sym",
                        g,
                        &inputs,
                        s.components(),
                        s.rank(),
                        "c",
                    ))
                }
                (None, None) => Err(Error::Precondition("need --rank or --grassmannian".into())),
            }
        }
        ChernOp::Dual { source } => match (source.rank, source.grassmannian) {
            (Some(r), _) => {
                let (ring, v) = formal_vector("c", r, r as u32);
                let d = v.dual();
                Ok(formal_output(
                    "chern-dual",
                    &[],
                    &ring,
                    d.components(),
                    d.rank(),
                    "c",
                ))
            }
            (None, Some(g)) => {
                let d = ChernVector::universal_dual(g).dual();
                Ok(grassmannian_output(
                    "chern-dual",
                    g,
                    &[],
                    d.components(),
                    d.rank(),
                    "c",
                ))
            }
            (None, None) => Err(Error::Precondition("need --rank or --grassmannian".into())),
        },
        ChernOp::Twist { source, t_multiple } => match (source.rank, source.grassmannian) {
            (Some(r), _) => {
                let mut names: Vec<String> = (1..=r).map(|i| format!("c{i}")).collect();
                names.push("t".into());
                let mut weights: Vec<u32> = (1..=r as u32).collect();
                weights.push(1);
                let ring = WeightedPolyRing::new(names, weights, r as u32);
                let (ring, v) = formal_in(ring, r, 0);
                let t = ring.var(r).scale(&BigInt::from(*t_multiple));
                let tw = v.tensor_line(&t);
                let inputs = [("t_multiple", Value::from(*t_multiple))];
                Ok(formal_output(
                    "chern-twist",
                    &inputs,
                    &ring,
                    tw.components(),
                    tw.rank(),
                    "c",
                ))
            }
            (None, Some(g)) => {
                let t = ChowClass::special(g, 1).scale(&BigInt::from(*t_multiple));
                let tw = ChernVector::universal_dual(g).tensor_line(&t);
                let inputs = [("t_multiple", Value::from(*t_multiple))];
                Ok(grassmannian_output(
                    "chern-twist",
                    g,
                    &inputs,
                    tw.components(),
                    tw.rank(),
                    "c",
                ))
            }
            (None, None) => Err(Error::Precondition("need --rank or --grassmannian".into())),
        },
        ChernOp::Quotient {
            grassmannian: g,
            numerator_sym,
            denominator_sym,
        } => {
            let u = ChernVector::universal_dual(*g);
            let num = u.sym_power(*numerator_sym)?;
            let den = u.sym_power(*denominator_sym)?;
            let q = num.whitney_quotient(&den, g.dim() as usize)?;
            let inputs = [
                ("numerator_sym", Value::from(*numerator_sym)),
                ("denominator_sym", Value::from(*denominator_sym)),
            ];
            Ok(grassmannian_output(
                "chern-quotient",
                *g,
                &inputs,
                q.components(),
                q.rank(),
                "c",
            ))
        }
        ChernOp::Segre { source, trunc } => {
            let inputs = [("trunc", Value::from(*trunc as u64))];
            match (source.rank, source.grassmannian) {
                (Some(r), _) => {
                    let (ring, v) = formal_vector("c", r, *trunc as u32);
                    let s = v.segre(*trunc);
                    Ok(formal_output("chern-segre", &inputs, &ring, &s, r, "s"))
                }
                (None, Some(g)) => {
                    let s = ChernVector::universal_dual(g).segre(*trunc);
                    Ok(grassmannian_output(
                        "chern-segre",
                        g,
                        &inputs,
                        &s,
                        g.r() as usize,
                        "s",
                    ))
                }
                (None, None) => Err(Error::Precondition("need --rank or --grassmannian".into())),
            }
        }
    }
}
