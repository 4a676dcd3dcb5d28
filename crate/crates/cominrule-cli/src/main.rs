//! Command-line front end: coefficients, expansions, shape and tableau
//! listings, rectification of tableau files, verification suites, table
//! export, and poset diagrams.
//!
//! Exit codes: 0 success, 1 mathematical rejection, 2 usage error,
//! 3 verification violations.

use clap::{Args, Parser, Subcommand};
use cominrule::root_data::BoxPoset;
use cominrule::schubert::{product_expand, CoeffTable};
use cominrule::shapes::{all_shapes, parse_shape, print_shape, Shape};
use cominrule::tableaux::{count_syt, enumerate_syt, rectify, Tableau};
use cominrule::verify::run_suite;
use cominrule::SpaceSpec;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "cominrule",
    about = "Schubert intersection numbers for minuscule and cominuscule spaces",
    version
)]
struct Cli {
    /// Worker threads for table construction (default: all cores,
    /// or COMINRULE_THREADS). Results do not depend on this value.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpaceArg {
    /// Space spec: Gr:k,n | QB:n | LG:n | QD:n | OG:n | E6 | E7 | Pmin:n | OGmin:n
    #[arg(long)]
    space: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print one intersection number.
    Coeff {
        #[command(flatten)]
        space: SpaceArg,
        /// First shape, as a bare comma tuple like 3,1
        #[arg(long)]
        lam: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// Treat structural zeros (degree or containment) as errors.
        #[arg(long)]
        strict: bool,
    },
    /// Expand a product of two classes in the Schubert basis.
    Expand {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        lam: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        json: bool,
    },
    /// List the shapes of a space.
    Shapes {
        #[command(flatten)]
        space: SpaceArg,
        /// Only shapes with this many boxes.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List or count the standard tableaux of a skew shape.
    Syt {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        outer: String,
        #[arg(long, default_value = "")]
        inner: String,
        /// Print the count only.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Rectify a tableau read from a JSON file (or standard input).
    Rectify {
        /// Path to the tableau file; omit to read standard input.
        #[arg(long)]
        input: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify {
        #[command(flatten)]
        space: SpaceArg,
        /// confluence | infusion | axioms | duality | chevalley |
        /// associativity | recursion | oracle | isomorphism
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Export the full coefficient table.
    Table {
        #[command(flatten)]
        space: SpaceArg,
        /// json or csv
        #[arg(long, default_value = "json")]
        format: String,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<String>,
        /// Maximum number of shapes the table may have.
        #[arg(long, default_value_t = 70)]
        bound: usize,
    },
    /// Print the box poset: grid, short boxes, covers.
    Poset {
        #[command(flatten)]
        space: SpaceArg,
    },
}

/// On-disk tableau format: shapes in tuple notation, labeled boxes as
/// `[column, row, label]` triples.
#[derive(Debug, Serialize, Deserialize)]
struct TableauFile {
    space: String,
    inner: String,
    outer: String,
    labels: Vec<(u32, u32, u8)>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| {
            std::env::var("COMINRULE_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        });
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();

    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn build(space: &SpaceArg) -> cominrule::Result<Arc<BoxPoset>> {
    BoxPoset::build(space.space.parse::<SpaceSpec>()?)
}

fn dispatch(command: Command) -> cominrule::Result<ExitCode> {
    match command {
        Command::Coeff {
            space,
            lam,
            mu,
            nu,
            strict,
        } => {
            let poset = build(&space)?;
            let lam = parse_shape(&poset, &lam)?;
            let mu = parse_shape(&poset, &mu)?;
            let nu = parse_shape(&poset, &nu)?;
            if strict {
                if lam.size() + mu.size() != nu.size() {
                    return Err(cominrule::Error::StructuralZero(format!(
                        "degrees {} + {} do not reach {}",
                        lam.size(),
                        mu.size(),
                        nu.size()
                    )));
                }
                if !lam.subset_of(nu) {
                    return Err(cominrule::Error::StructuralZero(
                        "the first shape is not contained in the third".into(),
                    ));
                }
            }
            let table = CoeffTable::new(poset);
            println!("{}", table.get(lam, mu, nu)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Expand { space, lam, mu, json } => {
            let poset = build(&space)?;
            let lam = parse_shape(&poset, &lam)?;
            let mu = parse_shape(&poset, &mu)?;
            let table = CoeffTable::new(poset.clone());
            let expansion = product_expand(&table, lam, mu)?;
            if json {
                let map: BTreeMap<String, u64> = expansion
                    .iter()
                    .map(|(s, c)| (print_shape(&poset, *s), *c))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&map).expect("serializes"));
            } else {
                for (s, c) in &expansion {
                    println!("{}: {}", print_shape(&poset, *s), c);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Shapes { space, size, json } => {
            let poset = build(&space)?;
            let shapes: Vec<String> = all_shapes(&poset.core)
                .into_iter()
                .filter(|s| size.is_none_or(|k| s.size() == k))
                .map(|s| print_shape(&poset, s))
                .collect();
            if json {
                println!("{}", serde_json::to_string_pretty(&shapes).expect("serializes"));
            } else {
                for s in shapes {
                    println!("{s}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Syt {
            space,
            outer,
            inner,
            count,
            json,
        } => {
            let poset = build(&space)?;
            let outer = parse_shape(&poset, &outer)?;
            let inner = parse_shape(&poset, &inner)?;
            let skew = cominrule::SkewShape::new(&poset.core, inner, outer)?;
            if count {
                println!("{}", count_syt(&poset.core, skew.region()));
                return Ok(ExitCode::SUCCESS);
            }
            let listed = enumerate_syt(&poset.core, skew.region());
            if json {
                let files: Vec<TableauFile> = listed
                    .iter()
                    .map(|t| tableau_file(&poset, t, inner))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&files).expect("serializes"));
            } else {
                for (i, t) in listed.iter().enumerate() {
                    println!("tableau {}:", i + 1);
                    print!("{}", render_tableau(&poset, t, inner.mask()));
                }
                println!("total: {}", listed.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rectify { input, json } => {
            let text = match input {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| cominrule::Error::Invariant(format!("cannot read input: {e}")))?,
                None => {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| cominrule::Error::Invariant(format!("cannot read stdin: {e}")))?;
                    buf
                }
            };
            let file: TableauFile = serde_json::from_str(&text)
                .map_err(|e| cominrule::Error::Invariant(format!("bad tableau file: {e}")))?;
            let poset = BoxPoset::build(file.space.parse::<SpaceSpec>()?)?;
            let inner = parse_shape(&poset, &file.inner)?;
            let outer = parse_shape(&poset, &file.outer)?;
            let t = Tableau::from_coords(&poset, &file.labels)?;
            if t.region() != outer.mask() & !inner.mask() {
                return Err(cominrule::Error::ShapeMismatch {
                    expected: outer.mask() & !inner.mask(),
                    got: t.region(),
                });
            }
            let r = rectify(&poset.core, &t);
            if json {
                let file = tableau_file(&poset, &r, Shape::EMPTY);
                println!("{}", serde_json::to_string_pretty(&file).expect("serializes"));
            } else {
                print!("{}", render_tableau(&poset, &r, 0));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            space,
            suite,
            seed,
            json,
        } => {
            let spec: SpaceSpec = space.space.parse()?;
            let report = run_suite(spec, &suite, seed)?;
            if json {
                println!("{}", report.to_json());
            } else {
                println!("{}", report.render_text());
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Table {
            space,
            format,
            out,
            bound,
        } => {
            let poset = build(&space)?;
            let table = CoeffTable::new(poset);
            let text = match format.as_str() {
                "json" => table.to_json(bound)?,
                "csv" => table.to_csv(bound)?,
                other => {
                    return Err(cominrule::Error::Invariant(format!(
                        "unknown format `{other}`; use json or csv"
                    )))
                }
            };
            match out {
                Some(path) => std::fs::write(path, text)
                    .map_err(|e| cominrule::Error::Invariant(format!("cannot write output: {e}")))?,
                None => println!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Poset { space } => {
            let poset = build(&space)?;
            let flavor = if poset.core.cominuscule {
                "cominuscule"
            } else {
                "minuscule"
            };
            println!(
                "{} ({}): {} boxes, {} short",
                poset.spec,
                flavor,
                poset.num_boxes(),
                poset.core.short_mask.count_ones()
            );
            print!("{}", render_grid(&poset));
            println!("covers (column,row) < (column,row):");
            for b in 0..poset.num_boxes() {
                for &u in &poset.core.up_covers[b] {
                    println!("  {:?} < {:?}", poset.grid[b], poset.grid[u]);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn tableau_file(poset: &BoxPoset, t: &Tableau, inner: Shape) -> TableauFile {
    let outer = Shape::new(t.region() | inner.mask());
    let mut labels = Vec::new();
    for b in 0..poset.num_boxes() {
        if let Some(l) = t.label(b) {
            labels.push((poset.grid[b].0, poset.grid[b].1, l));
        }
    }
    TableauFile {
        space: poset.spec.to_string(),
        inner: print_shape(poset, inner),
        outer: print_shape(poset, outer),
        labels,
    }
}

/// Rows printed top to bottom; empty inner boxes drawn as dots.
fn render_tableau(poset: &BoxPoset, t: &Tableau, inner: u32) -> String {
    let mut out = String::new();
    let max_row = poset.grid.iter().map(|g| g.1).max().unwrap_or(1);
    let max_col = poset.grid.iter().map(|g| g.0).max().unwrap_or(1);
    for r in (1..=max_row).rev() {
        let mut line = String::new();
        for c in 1..=max_col {
            let cell = match poset.box_at(c, r) {
                Some(b) => match t.label(b) {
                    Some(l) => format!("{l:>3}"),
                    None if inner & (1 << b) != 0 => "  .".to_string(),
                    None => "   ".to_string(),
                },
                None => "   ".to_string(),
            };
            line.push_str(&cell);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_grid(poset: &BoxPoset) -> String {
    let mut out = String::new();
    let max_row = poset.grid.iter().map(|g| g.1).max().unwrap_or(1);
    let max_col = poset.grid.iter().map(|g| g.0).max().unwrap_or(1);
    for r in (1..=max_row).rev() {
        let mut line = String::new();
        for c in 1..=max_col {
            match poset.box_at(c, r) {
                Some(b) if poset.core.short_mask & (1 << b) != 0 => line.push_str("[*]"),
                Some(_) => line.push_str("[ ]"),
                None => line.push_str("   "),
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
