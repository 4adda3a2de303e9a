use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use torus_mosaic::catalog::{audit_catalog, build_catalog, count_by_enumeration, min_toroidal_mosaic_number};
use torus_mosaic::count::count_transfer_matrix;
use torus_mosaic::enumerate::{canonical_key, class_size, enumerate_parallel, DEFAULT_BRUTE_FORCE_BUDGET};
use torus_mosaic::fixtures::{bundled, load_fixtures};
use torus_mosaic::bracket::DEFAULT_CROSSING_BUDGET;
use torus_mosaic::identify::{identify_diagram_with_budget, LinkDictionary};
use torus_mosaic::planarize::planarize;
use torus_mosaic::{Convention, Error, LinkName, Mosaic, Result};

#[derive(Parser)]
#[command(name = "toromosaic", version, about = "Knot mosaics on the torus")]
struct Cli {
    /// Which pair of opposite edges is identified first.
    #[arg(long, global = true, value_enum, default_value_t = ConventionArg::Longitudinal)]
    convention: ConventionArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for enumeration and identification (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Longitudinal,
    Meridianal,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Convention {
        match c {
            ConventionArg::Longitudinal => Convention::Longitudinal,
            ConventionArg::Meridianal => Convention::Meridianal,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Transfer,
    Enumerate,
}

#[derive(Subcommand)]
enum Command {
    /// Test toroidal (and planar) suitable connectedness; exits 1 if not toroidal.
    Check { input: Option<PathBuf> },
    /// Total waste and density.
    Waste { input: Option<PathBuf> },
    /// Cyclic shift: row i of the result is row i + ROWS of the input.
    Shift {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        rows: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        cols: i64,
    },
    /// Counterclockwise quarter turns.
    Rotate {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Inject into an (n+1)-mosaic.
    Embed { input: Option<PathBuf> },
    /// List toroidal knot n-mosaics.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Print a random sample of this size instead of everything.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Refuse when more mosaics than this would be listed.
        #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_BUDGET)]
        budget: u64,
    },
    /// Canonical shift-class representative and class size.
    Canon { input: Option<PathBuf> },
    /// Name the link a mosaic represents.
    Identify {
        input: Option<PathBuf>,
        /// Also print the planar diagram code.
        #[arg(long)]
        pd: bool,
        /// Largest crossing count accepted by the bracket state sum.
        #[arg(long, default_value_t = DEFAULT_CROSSING_BUDGET)]
        budget: usize,
    },
    /// One named entry per shift class of toroidal knot n-mosaics.
    Catalog {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count toroidal knot n-mosaics and their shift classes.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Transfer)]
        method: Method,
    },
    /// Least n with a toroidal n-mosaic of the given link.
    MosaicNumber {
        name: String,
        #[arg(long, default_value_t = 2)]
        max_n: usize,
    },
    /// Check a labelled catalog against enumeration and identification.
    Audit {
        /// Fixture file; defaults to the bundled catalog.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit 1 when anything is flagged.
        #[arg(long)]
        strict: bool,
    },
}

fn read_mosaic(input: &Option<PathBuf>) -> Result<Mosaic> {
    let text = match input.as_deref() {
        None => read_stdin()?,
        Some(p) if p == Path::new("-") => read_stdin()?,
        Some(p) => std::fs::read_to_string(p)?,
    };
    text.parse()
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

fn emit_mosaic(m: &Mosaic, format: Format) -> String {
    match format {
        Format::Text => m.to_string(),
        Format::Json => json!({ "mosaic": m }).to_string(),
    }
}

fn run(cli: Cli) -> Result<(String, ExitCode)> {
    if let Some(j) = cli.jobs {
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    let convention: Convention = cli.convention.into();
    let format = cli.format;
    let ok = |s: String| Ok((s, ExitCode::SUCCESS));
    match cli.command {
        Command::Check { input } => {
            let m = read_mosaic(&input)?;
            let (toroidal, planar) = (m.is_toroidally_suitably_connected(), m.is_planarly_suitably_connected());
            let out = match format {
                Format::Text => format!("toroidally suitably connected: {}\nplanarly suitably connected: {}\n", yes(toroidal), yes(planar)),
                Format::Json => json!({ "n": m.n(), "toroidal": toroidal, "planar": planar }).to_string(),
            };
            Ok((out, if toroidal { ExitCode::SUCCESS } else { ExitCode::from(1) }))
        }
        Command::Waste { input } => {
            let m = read_mosaic(&input)?;
            ok(match format {
                Format::Text => format!("waste: {}\ndense: {}\n", m.waste(), yes(m.is_dense())),
                Format::Json => json!({ "n": m.n(), "waste": m.waste(), "dense": m.is_dense() }).to_string(),
            })
        }
        Command::Shift { input, rows, cols } => ok(emit_mosaic(&read_mosaic(&input)?.shift(rows, cols), format)),
        Command::Rotate { input, times } => {
            let mut m = read_mosaic(&input)?;
            for _ in 0..times % 4 {
                m = m.rotate90();
            }
            ok(emit_mosaic(&m, format))
        }
        Command::Embed { input } => ok(emit_mosaic(&read_mosaic(&input)?.embed(), format)),
        Command::Enumerate { n, sample, seed, budget } => {
            let total = count_transfer_matrix(n)?.total_mosaics;
            if total > budget.into() {
                return Err(Error::BudgetExceeded { what: "mosaic listing", size: total.to_string(), limit: budget.to_string() });
            }
            let mut ms = enumerate_parallel(n);
            if let Some(k) = sample {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                ms = ms.choose_multiple(&mut rng, k.min(ms.len())).cloned().collect();
                ms.sort();
            }
            ok(match format {
                Format::Text => ms.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("\n"),
                Format::Json => serde_json::to_string(&json!({ "n": n, "count": ms.len(), "mosaics": ms })).expect("json"),
            })
        }
        Command::Canon { input } => {
            let m = read_mosaic(&input)?;
            let key = canonical_key(&m).into_mosaic();
            let size = class_size(&m);
            ok(match format {
                Format::Text => format!("{key}class size: {size}\n"),
                Format::Json => json!({ "canonical": key, "class_size": size }).to_string(),
            })
        }
        Command::Identify { input, pd, budget } => {
            let m = read_mosaic(&input)?;
            let d = planarize(&m, convention)?;
            let id = identify_diagram_with_budget(&d, LinkDictionary::global(), budget)?;
            ok(match format {
                Format::Text if pd => format!("{}\n{d}", id.name_string()),
                Format::Text => format!("{}\n", id.name_string()),
                Format::Json => {
                    let mut v = serde_json::to_value(&id).expect("json");
                    v["convention"] = json!(convention);
                    if pd {
                        v["pd"] = json!(d.to_string());
                    }
                    v.to_string()
                }
            })
        }
        Command::Catalog { n, out } => {
            let c = build_catalog(n, convention)?;
            let text = match format {
                Format::Json => c.to_json(),
                Format::Text => {
                    let mut s = format!("n = {}: {} mosaics, {} classes ({convention})\n", n, c.counts.total, c.counts.classes);
                    for e in &c.entries {
                        s += &format!("{}\t{}\t{}\t{}\n", e.index, torus_mosaic::catalog::row_string(&e.representative), e.class_size, e.name_string());
                    }
                    for d in &c.discrepancies {
                        s += &format!("discrepancy: {d}\n");
                    }
                    s
                }
            };
            match out {
                Some(path) => {
                    // the file always gets the JSON catalog
                    std::fs::write(&path, c.to_json() + "\n")?;
                    ok(format!("wrote {} entries to {}\n", c.entries.len(), path.display()))
                }
                None => ok(text),
            }
        }
        Command::Count { n, method } => {
            let r = match method {
                Method::Transfer => count_transfer_matrix(n)?,
                Method::Enumerate => {
                    count_transfer_matrix(n)
                        .ok()
                        .filter(|r| r.total_mosaics <= DEFAULT_BRUTE_FORCE_BUDGET.into())
                        .ok_or(Error::BudgetExceeded {
                            what: "mosaic listing",
                            size: format!("n = {n}"),
                            limit: DEFAULT_BRUTE_FORCE_BUDGET.to_string(),
                        })?;
                    count_by_enumeration(n)
                }
            };
            ok(match format {
                Format::Text => format!("total: {}\nshift classes: {}\n", r.total_mosaics, r.shift_classes),
                Format::Json => serde_json::to_string(&r).expect("json"),
            })
        }
        Command::MosaicNumber { name, max_n } => {
            let link: LinkName = name.parse()?;
            let found = min_toroidal_mosaic_number(&link, max_n, convention)?;
            ok(match (format, found) {
                (Format::Text, Some(n)) => format!("{n}\n"),
                (Format::Text, None) => format!("none up to n = {max_n}\n"),
                (Format::Json, found) => json!({ "link": link.to_string(), "max_n": max_n, "mosaic_number": found }).to_string(),
            })
        }
        Command::Audit { fixtures, out, strict } => {
            let fx = match fixtures {
                Some(p) => load_fixtures(p)?,
                None => bundled(),
            };
            let report = audit_catalog(&fx, convention);
            let code = if strict && !report.is_clean() { ExitCode::from(1) } else { ExitCode::SUCCESS };
            if let Some(path) = out {
                std::fs::write(path, report.to_json() + "\n")?;
            }
            Ok((
                match format {
                    Format::Text => report.summary(),
                    Format::Json => report.to_json(),
                },
                code,
            ))
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, code)) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
