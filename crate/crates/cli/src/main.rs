//! `flopkit`: command-line front end.
//!
//! Exit codes: 0 success, 2 usage error, 3 domain error, 4 internal guard.

mod svg;

use std::fmt::Write as _;
use std::io::{IsTerminal, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use flopkit_core::arrangement::{
    arrangement_2d, chambers_in_fundamental_domain, oracle_walls_1d, Chambers, Window,
};
use flopkit_core::gv::{deformation_equivalents, gv_row, gv_table, Realization};
use flopkit_core::helix::{heart, helix_entry};
use flopkit_core::pi1::{monodromy, normal_form, GroupWord};
use flopkit_core::rootsys::{
    build_diagram, dynkin_involution, extend_affine, highest_root_labels, positive_roots,
    DiagramType, DynkinDiagram, Vertex,
};
use flopkit_core::topology::{ambient_for_label, punctured_sphere};
use flopkit_core::walk::{chamber_graph, label_sequence_1d};
use flopkit_core::{Error, Length};

use crate::svg::{parse_window, render, RenderSpec};

#[derive(Parser)]
#[command(name = "flopkit", version, about = "Affine Dynkin combinatorics of 3-fold flops")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the vertex numbering conventions
    Conventions,
    /// Highest-root label of every vertex
    Labels { diagram_type: String, rank: usize },
    /// Positive-root count and highest root
    Roots {
        #[arg(long)]
        diagram: String,
    },
    /// The Dynkin involution as a vertex permutation
    Involution {
        #[arg(long)]
        diagram: String,
    },
    /// Wall labels met by the 1D walk through a vertex
    Walk {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        vertex: Vertex,
        #[arg(long, default_value_t = 12)]
        count: usize,
    },
    /// Chamber graph of the walk, as JSON
    Graph {
        #[arg(long)]
        diagram: String,
        #[arg(long, value_delimiter = ',')]
        vertices: Vec<Vertex>,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Punctured-sphere quotient, as JSON
    #[command(group(ArgGroup::new("source").required(true).args(["ell", "diagram"])))]
    Equator {
        #[arg(long)]
        ell: Option<i64>,
        #[arg(long, requires = "vertex")]
        diagram: Option<String>,
        #[arg(long, requires = "diagram")]
        vertex: Option<Vertex>,
    },
    /// Wall arrangement in a window, as JSON or SVG
    Arrangement {
        #[arg(long)]
        diagram: String,
        #[arg(long, value_delimiter = ',')]
        vertices: Vec<Vertex>,
        /// `lo,hi` (one vertex) or `x0,y0,x1,y1` (two vertices); rationals allowed
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Pixels per unit (SVG only)
        #[arg(long, default_value_t = 200.0)]
        scale: f64,
        /// Write here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Chambers of the unit cell
    Chambers {
        #[arg(long)]
        diagram: String,
        #[arg(long, value_delimiter = ',')]
        vertices: Vec<Vertex>,
    },
    /// Members of the simples helix
    Helix {
        #[arg(long)]
        ell: i64,
        /// Inclusive index range `from..to`
        #[arg(long, default_value = "0..11", allow_hyphen_values = true)]
        range: String,
        /// Also print the heart at each index
        #[arg(long)]
        hearts: bool,
    },
    /// Word problem and monodromy in the fundamental group
    Pi1 {
        #[arg(long)]
        ell: i64,
        #[arg(long)]
        word: String,
    },
    /// Gopakumar–Vafa lower bounds, as CSV
    Gv {
        #[arg(long)]
        ell: Option<i64>,
        /// Append the realisation status column
        #[arg(long)]
        status: bool,
        /// Report the deformation conditions for the thickening `a` (needs --ell)
        #[arg(long, requires = "ell")]
        deform: Option<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Svg,
}

enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_diagram(name: &str) -> CliResult<DynkinDiagram> {
    name.parse().map_err(usage)
}

fn parse_length(ell: i64) -> CliResult<Length> {
    Ok(Length::new(ell)?)
}

fn colour_enabled() -> bool {
    match std::env::var("FLOPKIT_COLOR").as_deref() {
        Ok("never") => false,
        _ => std::io::stdout().is_terminal(),
    }
}

fn heading(text: &str) -> String {
    if colour_enabled() {
        format!("\x1b[1m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialise");
    s.push('\n');
    s
}

const CONVENTIONS: &str = "\
A_n  vertices 1..n along the chain.
D_n  vertices 1..n-2 along the chain; fork vertices n-1 and n attached to n-2.
E_n  vertices 1..n-1 along the long chain, starting at the end of the shorter
     arm; vertex n attached to chain vertex 3.
     E6 labels 1 2 3 2 1 | 2   E7 labels 2 3 4 3 2 1 | 2   E8 labels 2 4 6 5 4 3 2 | 3
Affine vertex: rank+1, label 1, attached where 2*label(v) exceeds the sum of
     neighbour labels (A_n: both chain ends; D_n: vertex 2; E6: vertex 6;
     E7: vertex 1; E8: vertex 7; affine A_1 is a single flagged edge).
--ell ambient diagrams: 1 A1, 2 D4, 3 E6, 4 E7, 5 E8, 6 E8.
";

fn run(command: Command) -> CliResult<String> {
    let mut out = String::new();
    match command {
        Command::Conventions => {
            let _ = writeln!(out, "{}", heading("Vertex numbering"));
            out.push_str(CONVENTIONS);
        }
        Command::Labels { diagram_type, rank } => {
            let ty: DiagramType = diagram_type.parse().map_err(usage)?;
            let d = build_diagram(ty, rank).map_err(|e| usage(e.to_string()))?;
            let _ = writeln!(out, "{}", heading(&format!("{d} highest-root labels")));
            let _ = writeln!(out, "vertex\tlabel");
            for (v, l) in highest_root_labels(&d) {
                let _ = writeln!(out, "{v}\t{l}");
            }
        }
        Command::Roots { diagram } => {
            let d = parse_diagram(&diagram)?;
            let roots = positive_roots(&d);
            let top = roots.last().expect("nonempty");
            let _ = writeln!(out, "positive roots: {}", roots.len());
            let _ = writeln!(out, "highest root: {:?}", top.coefficients);
            let ext = extend_affine(&d);
            let _ = writeln!(out, "affine edges: {:?}", ext.affine_edges());
        }
        Command::Involution { diagram } => {
            let d = parse_diagram(&diagram)?;
            let iota = dynkin_involution(&d);
            for v in d.vertices() {
                let _ = writeln!(out, "{v} -> {}", iota.apply(v));
            }
        }
        Command::Walk {
            diagram,
            vertex,
            count,
        } => {
            let d = parse_diagram(&diagram)?;
            let seq = label_sequence_1d(&d, vertex, count)?;
            let labels: Vec<String> = seq.iter().map(|r| r.label.to_string()).collect();
            let _ = writeln!(out, "{}", labels.join(" "));
        }
        Command::Graph {
            diagram,
            vertices,
            depth,
        } => {
            let d = parse_diagram(&diagram)?;
            out = to_json(&chamber_graph(&d, &vertices, depth)?);
        }
        Command::Equator {
            ell,
            diagram,
            vertex,
        } => {
            let (d, v) = match (ell, diagram, vertex) {
                (Some(ell), _, _) => ambient_for_label(ell)?,
                (None, Some(d), Some(v)) => (parse_diagram(&d)?, v),
                _ => return Err(usage("give --ell, or --diagram with --vertex")),
            };
            out = to_json(&punctured_sphere(&d, v)?);
        }
        Command::Arrangement {
            diagram,
            vertices,
            window,
            format,
            scale,
            output,
        } => {
            let d = parse_diagram(&diagram)?;
            let window = parse_window(&window).map_err(usage)?;
            let arr = build_arrangement(&d, &vertices, &window)?;
            let text = match format {
                Format::Json => to_json(&arr),
                Format::Svg => render(&arr, &RenderSpec::new(window, scale).map_err(usage)?),
            };
            match output {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| {
                        usage(format!("cannot write {}: {e}", path.display()))
                    })?;
                }
                None => out = text,
            }
        }
        Command::Chambers { diagram, vertices } => {
            let d = parse_diagram(&diagram)?;
            let arr = build_arrangement(&d, &vertices, &Window::unit(vertices.len().max(1)))?;
            let chambers = chambers_in_fundamental_domain(&arr);
            let _ = writeln!(out, "chambers: {}", chambers.count());
            match chambers {
                Chambers::Intervals(v) => {
                    for (a, b) in v {
                        let _ = writeln!(out, "[{a}, {b})");
                    }
                }
                Chambers::Polygons(v) => {
                    for poly in v {
                        let pts: Vec<String> = poly.iter().map(|(x, y)| format!("({x}, {y})")).collect();
                        let _ = writeln!(out, "{}", pts.join(" "));
                    }
                }
            }
        }
        Command::Helix { ell, range, hearts } => {
            let len = parse_length(ell)?;
            let (from, to) = parse_range(&range)?;
            for i in from..=to {
                let _ = write!(out, "S_{i}\t{}", helix_entry(len, i));
                if hearts {
                    let h = heart(len, i);
                    let _ = write!(out, "\tA_{i}: {}, {}", h.simples.0, h.simples.1);
                }
                out.push('\n');
            }
        }
        Command::Pi1 { ell, word } => {
            let len = parse_length(ell)?;
            let w: GroupWord = word.parse()?;
            let n = flopkit_core::helix::helix_period(len);
            let nf = normal_form(&w, n)?;
            if nf.is_empty() {
                let _ = writeln!(out, "trivial");
            } else {
                let _ = writeln!(out, "normal form: {nf}");
            }
            let _ = writeln!(out, "monodromy: {}", monodromy(&w, len)?);
        }
        Command::Gv { ell, status, deform } => {
            let rows = match ell {
                Some(ell) => vec![gv_row(parse_length(ell)?)],
                None => gv_table(),
            };
            out = gv_csv(&rows, status);
            if let (Some(ell), Some(a)) = (ell, deform) {
                let report = deformation_equivalents(parse_length(ell)?, a)?;
                for (name, holds) in report.conditions {
                    let _ = writeln!(out, "{name}: {holds}");
                }
            }
        }
    }
    Ok(out)
}

fn build_arrangement(
    d: &DynkinDiagram,
    vertices: &[Vertex],
    window: &Window,
) -> CliResult<flopkit_core::arrangement::WallArrangement> {
    match vertices.len() {
        1 => Ok(oracle_walls_1d(d, vertices[0], window)?),
        2 => Ok(arrangement_2d(d, vertices, window)?),
        _ => Err(usage("--vertices takes one or two vertex ids")),
    }
}

fn parse_range(s: &str) -> CliResult<(i64, i64)> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| usage(format!("range `{s}` is not of the form from..to")))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| usage(format!("bad range bound `{t}`")))
    };
    let (a, b) = (parse(a)?, parse(b)?);
    if a > b {
        return Err(usage(format!("empty range `{s}`")));
    }
    Ok((a, b))
}

fn gv_csv(rows: &[flopkit_core::gv::GvRow], status: bool) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["ell", "gv_lower_bound", "dim_acon_lower_bound"];
    if status {
        header.push("realized");
    }
    w.write_record(&header).expect("in-memory write");
    for row in rows {
        let bounds: Vec<String> = row.gv_lower_bounds.iter().map(u32::to_string).collect();
        let mut rec = vec![
            row.length.to_string(),
            format!("({})", bounds.join(",")),
            row.dim_bound.to_string(),
        ];
        if status {
            rec.push(match &row.realized {
                Realization::KnownRealized => "known".to_string(),
                Realization::OpenWithExample(ex) => {
                    let ex: Vec<String> = ex.iter().map(u32::to_string).collect();
                    format!("open; example ({})", ex.join(","))
                }
            });
        }
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::PeriodBoundExceeded(_) | Error::InconsistentPeriod(_) => ExitCode::from(4),
                _ => ExitCode::from(3),
            }
        }
    }
}
