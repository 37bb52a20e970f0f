//! Batch front-end: load documents, run one engine, print traces and scores.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use serde::Serialize;

use crate::centering::{BfpEngine, TieBreak, UtteranceTrace};
use crate::discourse::{load_document, Document};
use crate::eval::{evaluate, render_table, AmbigMode, Evaluation, ScoreTable};
use crate::run::{Algorithm, Engine, Trace};
use crate::slist::{SlistEngine, TraceStep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Text,
    Structured,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(format!("`{s}` is not a positive integer")),
    }
}

/// Resolve the pronouns of annotated documents and score them against gold.
#[derive(Debug, Clone, Parser, Serialize)]
#[command(name = "slist-anaphora", version)]
pub struct RunConfig {
    /// slist, bfp or bfp-kameyama
    #[arg(long, default_value = "slist")]
    pub algo: Algorithm,
    #[arg(long = "max-slist-len", default_value = "5", value_parser = positive)]
    pub max_slist_len: usize,
    /// Print the attentional state after every step.
    #[arg(long)]
    pub trace: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub report: ReportFormat,
    /// cf-rank or recency
    #[arg(long = "tie-break", default_value = "cf-rank")]
    pub tie_break: TieBreak,
    /// wrong-only or strict
    #[arg(long = "ambig-mode", default_value = "wrong-only")]
    pub ambig_mode: AmbigMode,
    /// Document files, or directories of `.json` documents.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
}

impl RunConfig {
    pub fn engine(&self) -> Box<dyn Engine> {
        match self.algo {
            Algorithm::Slist => Box::new(SlistEngine::new(self.max_slist_len)),
            Algorithm::Bfp => Box::new(BfpEngine::new(self.tie_break)),
            Algorithm::BfpKameyama => Box::new(BfpEngine::kameyama(self.tie_break)),
        }
    }
}

/// Expands directories and tries a `.json` suffix on missing paths.
pub fn expand_inputs(inputs: &[PathBuf]) -> Vec<PathBuf> {
    let mut out = Vec::new();
    for p in inputs {
        if p.is_dir() {
            let mut files: Vec<PathBuf> = std::fs::read_dir(p)
                .into_iter()
                .flatten()
                .flatten()
                .map(|e| e.path())
                .filter(|f| f.extension().is_some_and(|x| x == "json"))
                .collect();
            files.sort();
            out.extend(files);
        } else if !p.exists() && p.with_extension("json").exists() {
            out.push(p.with_extension("json"));
        } else {
            out.push(p.clone());
        }
    }
    out
}

pub fn load_path(path: &Path) -> crate::Result<Document> {
    let bytes = std::fs::read(path)?;
    load_document(&bytes)
}

#[derive(Debug, Serialize)]
struct DocumentReport<'a> {
    path: String,
    group: String,
    algorithm: Algorithm,
    records: &'a [crate::eval::Outcome],
    table: ScoreTable,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<&'a Trace>,
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    diagnostics: &'a [String],
}

#[derive(Debug, Serialize)]
struct Aggregate {
    groups: BTreeMap<String, ScoreTable>,
    total: ScoreTable,
}

#[derive(Debug, Serialize)]
struct EngineInfo {
    name: &'static str,
    version: &'static str,
}

#[derive(Debug, Serialize)]
struct Report<'a> {
    engine: EngineInfo,
    config: &'a RunConfig,
    documents: Vec<DocumentReport<'a>>,
    aggregate: Aggregate,
}

fn group_of(doc: &Document) -> String {
    doc.group.clone().unwrap_or_else(|| "ungrouped".to_owned())
}

fn slist_trace_text(doc: &Document, steps: &[TraceStep], out: &mut String) {
    for s in steps {
        let items: Vec<String> = s
            .slist
            .iter()
            .map(|e| format!("{}_{}: {}", e.entity, e.class, e.surface))
            .collect();
        let word = doc.tokens.get(s.token_index).map_or("", |t| t.surface.as_str());
        let action = serde_json::to_value(s.action).unwrap_or_default();
        let _ = writeln!(
            out,
            "  {:>4} {:<12} {:<8} [{}]",
            s.token_index,
            word,
            action.as_str().unwrap_or(""),
            items.join(", ")
        );
    }
}

fn centering_trace_text(utts: &[UtteranceTrace], out: &mut String) {
    for u in utts {
        let _ = writeln!(
            out,
            "  U{} (s{}): Cf=[{}] Cb={} Cp={} {}{}",
            u.utt,
            u.sentence,
            u.cf.join(", "),
            u.cb.as_deref().unwrap_or("-"),
            u.cp.as_deref().unwrap_or("-"),
            u.transition.map_or("-".to_owned(), |t| t.to_string()),
            if u.ambiguous {
                format!(" ambiguous ({} readings tied)", u.readings.len())
            } else {
                String::new()
            }
        );
        for (a, e) in &u.assignments {
            let _ = writeln!(out, "      {a} -> {e}");
        }
    }
}

fn document_text(path: &Path, doc: &Document, ev: &Evaluation, config: &RunConfig) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "== {} [{}] {}", path.display(), group_of(doc), config.algo);
    if config.trace {
        match &ev.run.trace {
            Trace::Slist(steps) => slist_trace_text(doc, steps, &mut out),
            Trace::Centering(utts) => centering_trace_text(utts, &mut out),
        }
    }
    for o in &ev.outcomes {
        let verdict = match o.error {
            None => "correct".to_owned(),
            Some(c) => format!("wrong ({})", serde_json::to_value(c).map(|v| v["category"].as_str().unwrap_or("").to_owned()).unwrap_or_default()),
        };
        let _ = writeln!(
            out,
            "  {} \"{}\" -> {} (gold {}){}{} {}",
            o.anaphor,
            o.surface,
            o.system,
            o.gold.as_ref().map_or("-".to_owned(), |g| g.to_string()),
            if o.ambiguous { " ambiguous" } else { "" },
            if o.fallback_depth > 0 { format!(" fallback {}", o.fallback_depth) } else { String::new() },
            verdict
        );
    }
    for d in &ev.run.diagnostics {
        let _ = writeln!(out, "  note: {d}");
    }
    out
}

/// Runs the configured engine over every input. Returns the exit status:
/// 0 iff every input loaded and ran.
pub fn run_cli(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let engine = config.engine();
    let mut failed = false;
    let mut loaded: Vec<(PathBuf, Document, Evaluation)> = Vec::new();
    for path in expand_inputs(&config.inputs) {
        let result = load_path(&path).and_then(|doc| {
            let ev = evaluate(engine.as_ref(), &doc, config.ambig_mode)?;
            Ok((doc, ev))
        });
        match result {
            Ok((doc, ev)) => loaded.push((path, doc, ev)),
            Err(e) => {
                failed = true;
                let _ = writeln!(err, "{}: {e}", path.display());
            }
        }
    }

    let mut groups: BTreeMap<String, ScoreTable> = BTreeMap::new();
    for (_, doc, ev) in &loaded {
        *groups.entry(group_of(doc)).or_default() += ev.table;
    }
    let mut total = ScoreTable::default();
    for t in groups.values() {
        total += *t;
    }

    match config.report {
        ReportFormat::Text => {
            let mut text = String::new();
            for (path, doc, ev) in &loaded {
                text.push_str(&document_text(path, doc, ev, config));
            }
            if !loaded.is_empty() {
                text.push('\n');
                text.push_str(&render_table(config.algo.name(), &groups));
            }
            let _ = out.write_all(text.as_bytes());
        }
        ReportFormat::Structured => {
            let report = Report {
                engine: EngineInfo {
                    name: env!("CARGO_PKG_NAME"),
                    version: env!("CARGO_PKG_VERSION"),
                },
                config,
                documents: loaded
                    .iter()
                    .map(|(path, doc, ev)| DocumentReport {
                        path: path.display().to_string(),
                        group: group_of(doc),
                        algorithm: ev.run.algorithm,
                        records: &ev.outcomes,
                        table: ev.table,
                        trace: config.trace.then_some(&ev.run.trace),
                        diagnostics: &ev.run.diagnostics,
                    })
                    .collect(),
                aggregate: Aggregate { groups, total },
            };
            let _ = serde_json::to_writer_pretty(&mut *out, &report);
            let _ = writeln!(out);
        }
    }
    i32::from(failed)
}

/// Parses `args` (program name first) and runs. Usage errors exit with 2.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli(&config, &mut stdout.lock(), &mut stderr.lock())
}
