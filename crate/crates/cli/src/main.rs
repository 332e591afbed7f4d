use clap::{Args, Parser, Subcommand, ValueEnum};
use qcrystal::braiding::{braiding_suite, braiding_table};
use qcrystal::crystal::crystal_suite;
use qcrystal::hrgraph::{ColourSet, HigherRankGraph};
use qcrystal::report::VerificationReport;
use qcrystal::soibelman::Soibelman;
use qcrystal::{Atlas, Weight};
use std::fmt::Write as _;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "qcrystal",
    version,
    about = "Crystal bases at q = 0, Cartan braidings and higher-rank graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the crystal B(lambda).
    Crystal {
        #[command(flatten)]
        common: Common,
        /// Highest weight in fundamental-weight coordinates, e.g. 1,1
        #[arg(long)]
        weight: String,
    },
    /// Print the Cartan braiding table of B(lambda) (x) B(mu).
    Braiding {
        #[command(flatten)]
        common: Common,
        /// Two weights separated by ';', e.g. "1,0;0,1"
        #[arg(long)]
        pair: String,
    },
    /// Emit the higher-rank graph of a colour tuple.
    Graph {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Reduced word for w0, 1-based colours, e.g. 2,1,2
        #[arg(long)]
        word: Option<String>,
    },
    /// Weyl group order, reduced word for w0 and vertex count.
    Info {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        colours: Option<String>,
    },
}

#[derive(Args)]
struct Common {
    /// Cartan type, e.g. A2, C2, G2
    #[arg(long = "type")]
    cartan_type: String,
    #[arg(long, value_enum)]
    emit: Option<Emit>,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct GraphArgs {
    /// Colour weights separated by ';'. Defaults to all fundamental weights.
    #[arg(long)]
    colours: Option<String>,
    /// Degree bound, one entry per colour.
    #[arg(long)]
    bound: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Dot,
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Crystal,
    Braiding,
    Graph,
    Kp,
    All,
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<qcrystal::Error> for Failure {
    fn from(e: qcrystal::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_weights(spec: &str) -> Result<Vec<Weight>, Failure> {
    spec.split(';')
        .map(|w| {
            w.parse::<Weight>()
                .map_err(|_| usage(format!("bad weight '{w}'")))
        })
        .collect()
}

fn parse_list(spec: &str, what: &str) -> Result<Vec<u32>, Failure> {
    spec.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| usage(format!("bad {what} '{spec}'")))
        })
        .collect()
}

fn colour_set(atlas: &Atlas, spec: Option<&str>) -> Result<ColourSet, Failure> {
    match spec {
        None => Ok(ColourSet::fundamental(atlas.datum())),
        Some(s) => Ok(ColourSet::new(atlas.datum(), parse_weights(s)?)?),
    }
}

fn bound_for(colours: &ColourSet, spec: Option<&str>, default: u32) -> Result<Vec<u32>, Failure> {
    let bound = match spec {
        None => vec![default; colours.len()],
        Some(s) => parse_list(s, "bound")?,
    };
    if bound.len() != colours.len() {
        return Err(usage(format!(
            "bound has {} entries for {} colours",
            bound.len(),
            colours.len()
        )));
    }
    Ok(bound)
}

fn build_graph(
    atlas: &Arc<Atlas>,
    args: &GraphArgs,
    default: u32,
) -> Result<(HigherRankGraph, Vec<u32>), Failure> {
    let colours = colour_set(atlas, args.colours.as_deref())?;
    let bound = bound_for(&colours, args.bound.as_deref(), default)?;
    Ok((HigherRankGraph::build(atlas.clone(), colours)?, bound))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn one_based(t: &[usize]) -> String {
    let parts: Vec<String> = t.iter().map(|x| (x + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

fn crystal(atlas: &Atlas, emit: Emit, weight: &str) -> Outcome {
    let lambda: Weight = weight
        .parse()
        .map_err(|_| usage(format!("bad weight '{weight}'")))?;
    let c = atlas.crystal(&lambda)?;
    let name = format!("B{lambda}");
    Ok(match emit {
        Emit::Dot => c.to_dot(&name),
        Emit::Json => {
            let c = &*c;
            let edges: Vec<(usize, usize, usize)> = (0..c.len())
                .flat_map(|b| {
                    (0..atlas.rank()).filter_map(move |i| c.f(i, b).map(|x| (b + 1, i + 1, x + 1)))
                })
                .collect();
            let weights: Vec<&[i64]> = c.weights().iter().map(|w| w.coords()).collect();
            json(&serde_json::json!({
                "type": atlas.datum().cartan_type().to_string(),
                "highest_weight": lambda.coords(),
                "weights": weights,
                "edges": edges,
            }))
        }
        Emit::Text => {
            let mut s = String::new();
            for b in 0..c.len() {
                write!(s, "{} {}", b + 1, c.weights()[b]).unwrap();
                for i in 0..atlas.rank() {
                    if let Some(x) = c.f(i, b) {
                        write!(s, " f{}->{}", i + 1, x + 1).unwrap();
                    }
                }
                s.push('\n');
            }
            s
        }
    })
}

fn braiding(atlas: &Atlas, emit: Emit, pair: &str) -> Outcome {
    let ws = parse_weights(pair)?;
    let [l, m] = ws.as_slice() else {
        return Err(usage("--pair needs exactly two weights"));
    };
    let rows = braiding_table(atlas, l, m)?;
    Ok(match emit {
        Emit::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|((b, c), img)| {
                    serde_json::json!({
                        "input": [b + 1, c + 1],
                        "image": img.map(|(x, y)| vec![x + 1, y + 1]),
                    })
                })
                .collect();
            json(&serde_json::json!({ "left": l.coords(), "right": m.coords(), "rows": rows }))
        }
        _ => {
            let mut s = format!("sigma: B{l} (x) B{m} -> B{m} (x) B{l}\n");
            for ((b, c), img) in rows {
                let out = img.map_or("0".to_string(), |(x, y)| one_based(&[x, y]));
                writeln!(s, "{} -> {out}", one_based(&[b, c])).unwrap();
            }
            s
        }
    })
}

fn graph(atlas: &Arc<Atlas>, emit: Emit, args: &GraphArgs) -> Outcome {
    let (g, bound) = build_graph(atlas, args, 1)?;
    Ok(match emit {
        Emit::Dot => g.to_dot(&bound)?,
        Emit::Json => json(&g.to_json(&bound)?),
        Emit::Text => {
            let data = g.to_json(&bound)?;
            let mut s = String::new();
            for v in &data.vertices {
                let t: Vec<String> = v.tuple.iter().map(|x| x.to_string()).collect();
                writeln!(s, "v{} ({})", v.id, t.join(",")).unwrap();
            }
            for (deg, n) in data.degree_counts() {
                writeln!(s, "degree {deg:?}: {n} paths").unwrap();
            }
            s
        }
    })
}

fn verify(
    atlas: &Arc<Atlas>,
    emit: Emit,
    args: &GraphArgs,
    suite: Suite,
    word: Option<&str>,
) -> Outcome {
    let mut report = VerificationReport::default();
    let wants = |s: Suite| suite == s || suite == Suite::All;
    if wants(Suite::Crystal) {
        let ws = qcrystal::crystal::dominant_weights_up_to(atlas.rank(), 1);
        report.extend(crystal_suite(atlas, &ws)?);
    }
    if wants(Suite::Braiding) {
        report.extend(braiding_suite(atlas)?);
    }
    if wants(Suite::Graph) || wants(Suite::Kp) {
        let default = if suite == Suite::Graph { 2 } else { 1 };
        let (g, bound) = build_graph(atlas, args, default)?;
        if wants(Suite::Graph) {
            report.extend(g.graph_suite(&bound)?);
        }
        if wants(Suite::Kp) {
            let s = match word {
                None => Soibelman::new(atlas.clone())?,
                Some(w) => {
                    let w = parse_list(w, "word")?;
                    if w.contains(&0) {
                        return Err(usage("--word uses 1-based colours"));
                    }
                    Soibelman::with_word(
                        atlas.clone(),
                        w.iter().map(|&i| i as usize - 1).collect(),
                    )?
                }
            };
            report.extend(s.verify_suite(&g, &bound)?);
        }
    }
    let out = match emit {
        Emit::Json => json(&report),
        _ => format!("{report}\n"),
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn info(atlas: &Arc<Atlas>, colours: Option<&str>) -> Outcome {
    let datum = atlas.datum();
    let weyl = datum.weyl_group()?;
    let word: Vec<usize> = weyl.longest().word.iter().map(|i| i + 1).collect();
    let cs = colour_set(atlas, colours)?;
    // Large types have no materializable graph; report the cap instead.
    let vertices = match HigherRankGraph::build(atlas.clone(), cs.clone()) {
        Ok(g) => g.vertices().len().to_string(),
        Err(e @ qcrystal::Error::CapExceeded { .. }) => format!("unavailable ({e})"),
        Err(e) => return Err(e.into()),
    };
    let colours: Vec<String> = cs.colours().iter().map(|c| c.to_string()).collect();
    let mut s = String::new();
    writeln!(s, "type {}", datum.cartan_type()).unwrap();
    writeln!(s, "rank {}", datum.rank()).unwrap();
    writeln!(s, "|W| {}", weyl.len()).unwrap();
    writeln!(s, "positive roots {}", datum.num_positive_roots()).unwrap();
    writeln!(s, "w0 {word:?}").unwrap();
    writeln!(s, "colours {}", colours.join(";")).unwrap();
    writeln!(s, "vertices {vertices}").unwrap();
    Ok(s)
}

fn run(cli: Cli) -> Outcome {
    let (common, result) = match &cli.command {
        Command::Crystal { common, weight } => {
            let atlas = Atlas::parse(&common.cartan_type)?;
            (
                common,
                crystal(&atlas, common.emit.unwrap_or(Emit::Dot), weight),
            )
        }
        Command::Braiding { common, pair } => {
            let atlas = Atlas::parse(&common.cartan_type)?;
            (
                common,
                braiding(&atlas, common.emit.unwrap_or(Emit::Text), pair),
            )
        }
        Command::Graph { common, graph: g } => {
            let atlas = Atlas::parse(&common.cartan_type)?;
            (common, graph(&atlas, common.emit.unwrap_or(Emit::Dot), g))
        }
        Command::Verify {
            common,
            graph: g,
            suite,
            word,
        } => {
            let atlas = Atlas::parse(&common.cartan_type)?;
            let emit = common.emit.unwrap_or(Emit::Text);
            (common, verify(&atlas, emit, g, *suite, word.as_deref()))
        }
        Command::Info { common, colours } => {
            let atlas = Atlas::parse(&common.cartan_type)?;
            (common, info(&atlas, colours.as_deref()))
        }
    };
    let write = |text: &str| -> Result<(), Failure> {
        match &common.out {
            Some(path) => {
                std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
            }
            None => {
                print!("{text}");
                Ok(())
            }
        }
    };
    match result {
        Ok(text) => write(&text).map(|_| String::new()),
        Err(Failure::Verification(text)) => {
            write(&text)?;
            Err(Failure::Verification(String::new()))
        }
        Err(e) => Err(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(_) => ExitCode::SUCCESS,
        Err(Failure::Verification(_)) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
