//! Command-line front end. Each subcommand has a pure counterpart here that works
//! on parsed [`Document`]s; [`run`] adds argument parsing and file handling.

mod document;
mod svg;
mod verify;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

pub use document::{DivisorPayload, Document, Kind, Payload};
pub use svg::{render_chip_config, render_lattice_path, Style};
pub use verify::{verify, verify_tableau, ShapeReport, Template, VerifyOptions, VerifyReport, MAX_VERIFY_CEILING};

use crate::divisor::{alpha, dual_reduce, phi, phi_preimage, rank_with_witness, reflect_divisor, rho, UnderlineSeq};
use crate::error::{invalid, shape, Error, Result};
use crate::graph::ChainOfLoops;
use crate::path::LatticePath;
use crate::tableau::{enumerate, DEFAULT_ENUMERATION_CEILING};

#[derive(Debug, Parser)]
#[command(name = "chipchain", version, about = "Tableaux, lattice paths and divisors on chains of loops")]
pub struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert between tableau, path and divisor documents.
    Convert {
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        to: Kind,
        /// Graph document for conversions that produce a divisor.
        #[arg(long, value_name = "FILE")]
        graph: Option<PathBuf>,
    },
    /// Rank of a divisor, with its witnessing lattice path.
    Rank { input: Option<PathBuf> },
    /// Evacuate a tableau.
    Evacuate { input: Option<PathBuf> },
    /// Transpose a tableau.
    Transpose { input: Option<PathBuf> },
    /// Reflect a tableau image to the reversed chain.
    Reflect { input: Option<PathBuf> },
    /// Reduced representative of `K - c` for a tableau image `c`.
    Dual { input: Option<PathBuf> },
    /// Check every correspondence on all tableaux up to a size.
    Verify {
        #[arg(long, default_value_t = 12)]
        ceiling: usize,
        /// Loop lengths as `ELL:M`; a trailing `g` multiplies by the genus.
        #[arg(long, default_value = "2g:1")]
        template: Template,
        /// Restrict to one shape.
        #[arg(long, num_args = 2, value_names = ["M", "N"])]
        shape: Option<Vec<usize>>,
    },
    /// All standard tableaux of one shape, one document per line.
    Enumerate {
        #[arg(long, num_args = 2, value_names = ["M", "N"], required = true)]
        shape: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CEILING)]
        ceiling: usize,
    },
    /// SVG picture of a divisor or a path.
    Render {
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        style: Option<Style>,
    },
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("chipchain: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<()> {
    let text = match &cli.command {
        Command::Convert { input, to, graph } => {
            let graph = graph.as_deref().map(load_graph).transpose()?;
            let doc = convert(&load(input)?, *to, graph.as_ref())?;
            line(doc.to_json())
        }
        Command::Rank { input } => line(rank_report(&load(input)?)?.to_string()),
        Command::Evacuate { input } => line(transform(&load(input)?, Transform::Evacuate)?.to_json()),
        Command::Transpose { input } => line(transform(&load(input)?, Transform::Transpose)?.to_json()),
        Command::Reflect { input } => line(transform(&load(input)?, Transform::Reflect)?.to_json()),
        Command::Dual { input } => line(transform(&load(input)?, Transform::Dual)?.to_json()),
        Command::Verify { ceiling, template, shape } => {
            let options = VerifyOptions {
                ceiling: *ceiling,
                template: template.clone(),
                shape: shape.as_ref().map(|s| (s[0], s[1])),
            };
            let report = verify(&options)?;
            let text = report.to_string();
            let failures = report.failures();
            emit(cli, &text)?;
            if failures > 0 {
                return Err(Error::Invariant(format!("{failures} check(s) failed")));
            }
            return Ok(());
        }
        Command::Enumerate { shape, ceiling } => enumerate(shape[0], shape[1], *ceiling)?
            .map(|t| Document::from(Payload::Tableau(t)).to_json() + "\n")
            .collect(),
        Command::Render { input, style } => render(&load(input)?, *style)?,
    };
    emit(cli, &text)
}

fn line(s: String) -> String {
    s + "\n"
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    let written = match &cli.out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    written.map_err(|e| invalid!("cannot write output: {e}"))
}

fn load(input: &Option<PathBuf>) -> Result<Document> {
    let text = match input {
        Some(path) => fs::read_to_string(path).map_err(|e| invalid!("cannot read {}: {e}", path.display()))?,
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).map_err(|e| invalid!("cannot read stdin: {e}"))?;
            buf
        }
    };
    Document::parse(&text)
}

fn load_graph(path: &Path) -> Result<ChainOfLoops> {
    match load(&Some(path.to_path_buf()))?.payload {
        Payload::Graph(g) => Ok(g),
        other => Err(invalid!("--graph expects a graph document, got {}", other.kind())),
    }
}

fn graph_for(genus: usize, graph: Option<&ChainOfLoops>) -> Result<ChainOfLoops> {
    match graph {
        Some(g) if g.genus() != genus => Err(shape!("object of genus {genus} paired with a genus {} graph", g.genus())),
        Some(g) => Ok(g.clone()),
        None => ChainOfLoops::default_for_genus(genus),
    }
}

fn require_generic(graph: &ChainOfLoops) -> Result<()> {
    match graph.non_generic_loop() {
        Some(i) => {
            let lp = graph.loop_at(i);
            Err(Error::NonGeneric(format!("loop {i} has ell/m = {}", &lp.ell / &lp.m)))
        }
        None => Ok(()),
    }
}

/// Converts a document. Supported: tableau to path or divisor, path to tableau or
/// divisor, divisor to path. `graph` defaults to the standard chain of the right genus.
pub fn convert(doc: &Document, target: Kind, graph: Option<&ChainOfLoops>) -> Result<Document> {
    let payload = match (&doc.payload, target) {
        (Payload::Tableau(t), Kind::Path) => Payload::Path(LatticePath::from_tableau(t)),
        (Payload::Tableau(t), Kind::Divisor) => {
            let c = phi(t, &graph_for(t.size(), graph)?)?;
            Payload::Divisor(DivisorPayload::from_underline(c))
        }
        (Payload::Path(p), Kind::Tableau) => Payload::Tableau(p.to_tableau()?),
        (Payload::Path(p), Kind::Divisor) => {
            if p.is_empty() {
                return Err(invalid!("a path without steps has no divisor"));
            }
            let c = alpha(p, &graph_for(p.len(), graph)?)?;
            Payload::Divisor(DivisorPayload::from_underline(c))
        }
        (Payload::Divisor(d), Kind::Path) => {
            if graph.is_some() {
                return Err(invalid!("--graph does not apply to divisor input"));
            }
            let raw = &d.raw;
            require_generic(raw.graph())?;
            match raw.d0() {
                h if h < 0 => return Err(invalid!("head {h} is negative; no path")),
                0 => Payload::Path(LatticePath::empty(raw.graph().genus())),
                h => Payload::Path(rho(raw, h as usize)?),
            }
        }
        (from, to) => return Err(invalid!("no conversion from {} to {to}", from.kind())),
    };
    Ok(Document { payload, meta: doc.meta.clone() })
}

/// `{"kind":"rank","rank":r,"witness":path-or-null}`.
pub fn rank_report(doc: &Document) -> Result<serde_json::Value> {
    let Payload::Divisor(d) = &doc.payload else {
        return Err(invalid!("rank expects a divisor, got {}", doc.kind()));
    };
    require_generic(d.raw.graph())?;
    let (rank, witness) = rank_with_witness(&d.raw)?;
    let witness = match witness {
        Some(p) => serde_json::from_str(&Document::from(Payload::Path(p)).to_json()).expect("valid JSON"),
        None => serde_json::Value::Null,
    };
    Ok(json!({ "kind": "rank", "rank": rank, "witness": witness }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    Evacuate,
    Transpose,
    Reflect,
    Dual,
}

/// The underline form of `d`, provided the chain is generic and `d` is the image of
/// a tableau.
pub fn require_tableau_image(d: &DivisorPayload) -> Result<&UnderlineSeq> {
    let c = d.require_underline()?;
    require_generic(c.graph())?;
    phi_preimage(c).map_err(|e| match e {
        Error::NonGeneric(_) => e,
        other => invalid!("not the image of a tableau: {other}"),
    })?;
    Ok(c)
}

fn tableau_image<'d>(doc: &'d Document, op: &str) -> Result<&'d UnderlineSeq> {
    let Payload::Divisor(d) = &doc.payload else {
        return Err(invalid!("{op} expects a divisor, got {}", doc.kind()));
    };
    require_tableau_image(d)
}

pub fn transform(doc: &Document, op: Transform) -> Result<Document> {
    let payload = match op {
        Transform::Evacuate | Transform::Transpose => {
            let Payload::Tableau(t) = &doc.payload else {
                let name = if op == Transform::Evacuate { "evacuate" } else { "transpose" };
                return Err(invalid!("{name} expects a tableau, got {}", doc.kind()));
            };
            Payload::Tableau(if op == Transform::Evacuate { t.evacuate() } else { t.transpose() })
        }
        Transform::Reflect => {
            let c = tableau_image(doc, "reflect")?;
            Payload::Divisor(DivisorPayload::from_underline(reflect_divisor(c)?.divisor))
        }
        Transform::Dual => {
            let c = tableau_image(doc, "dual")?;
            Payload::Divisor(DivisorPayload::from_underline(dual_reduce(c)?))
        }
    };
    Ok(Document { payload, meta: doc.meta.clone() })
}

/// SVG for a divisor (chip configuration) or a path (overlaid coordinate traces).
pub fn render(doc: &Document, style: Option<Style>) -> Result<String> {
    match (&doc.payload, style) {
        (Payload::Divisor(d), None | Some(Style::ChipConfig)) => Ok(render_chip_config(&d.raw)),
        (Payload::Path(p), None | Some(Style::LatticePath)) => Ok(render_lattice_path(p)),
        (payload, Some(style)) => Err(invalid!("cannot render a {} as {style:?}", payload.kind())),
        (payload, None) => Err(invalid!("cannot render a {}", payload.kind())),
    }
}
