//! Command-line interface.
//!
//! Inputs are either a JSON document file or `catalog:NAME`. Exit codes:
//! 0 on success, 1 on input errors, 2 on internal invariant failures.

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::LieAlgebra;
use crate::catalog::catalog;
use crate::derivations::{complete_hull, derivation_space};
use crate::doc::{parse_algebra, serialize_document, to_document};
use crate::error::{Error, Result};
use crate::gamma::{gamma_triple, levi_subalgebra};
use crate::report::{
    analysis_section, gamma_triple_section, input_section, render_json, render_text, tool_version,
    tower_section, ReportDocument,
};
use crate::tower::{tower_iterate_with, FastPathMode};

#[derive(Parser)]
#[command(
    name = "lietower",
    version,
    about = "Exact structure theory and derivation towers of Lie algebras over the rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FastPathArg {
    Auto,
    On,
    Off,
}

#[derive(Subcommand)]
enum Command {
    /// Flags, center, series, radical, nilradical, Levi part, and the
    /// (s, k, m) triple of an algebra
    Analyze {
        /// Path to a JSON document, or catalog:NAME
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The derivation algebra
    Der {
        input: String,
        /// Emit the derivation algebra's structure constants as a document
        #[arg(long)]
        as_algebra: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The derivation tower with its classification
    Tower {
        input: String,
        #[arg(long, default_value_t = 16)]
        max_steps: usize,
        #[arg(long, value_enum, default_value = "auto")]
        fast_path: FastPathArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The complete hull s + B + m
    Hull {
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn load_input(input: &str) -> Result<(String, LieAlgebra)> {
    if let Some(name) = input.strip_prefix("catalog:") {
        let g = catalog(name)?;
        return Ok((name.to_string(), g));
    }
    let text = std::fs::read_to_string(input)
        .map_err(|e| Error::Parse(format!("cannot read `{input}`: {e}")))?;
    let (doc, g) = parse_algebra(&text)?;
    Ok((doc.name, g))
}

fn render(report: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => render_json(report),
        Format::Text => render_text(report),
    }
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Analyze { input, format } => {
            let (name, g) = load_input(&input)?;
            let levi = levi_subalgebra(&g)?;
            let triple = gamma_triple(&g)?;
            let report = ReportDocument {
                input: input_section(&name, &g, Some(analysis_section(&g, &levi))),
                gamma_triple: Some(gamma_triple_section(&triple)),
                derivations: None,
                tower: None,
                version: tool_version(),
            };
            Ok(render(&report, format))
        }
        Command::Der {
            input,
            as_algebra,
            format,
        } => {
            let (name, g) = load_input(&input)?;
            let der = derivation_space(&g)?;
            if as_algebra {
                // the document itself is the output, pipeable back in
                let doc = to_document(&der.as_algebra, &format!("Der({name})"));
                return Ok(serialize_document(&doc));
            }
            let report = ReportDocument {
                input: input_section(&name, &g, None),
                gamma_triple: None,
                derivations: Some(crate::report::DerivationsSection {
                    dim: der.dim(),
                    ad_dim: der.ad_image().dim(),
                    inner: der.is_inner_only(),
                    as_algebra: None,
                }),
                tower: None,
                version: tool_version(),
            };
            Ok(render(&report, format))
        }
        Command::Tower {
            input,
            max_steps,
            fast_path,
            format,
        } => {
            if max_steps == 0 {
                return Err(Error::Parse("--max-steps must be at least 1".into()));
            }
            let (name, g) = load_input(&input)?;
            let mode = match fast_path {
                FastPathArg::Auto => FastPathMode::Auto,
                FastPathArg::On => FastPathMode::On,
                FastPathArg::Off => FastPathMode::Off,
            };
            let rep = tower_iterate_with(&g, max_steps, mode)?;
            let report = ReportDocument {
                input: input_section(&name, &g, None),
                gamma_triple: None,
                derivations: None,
                tower: Some(tower_section(&rep)),
                version: tool_version(),
            };
            Ok(render(&report, format))
        }
        Command::Hull { input, format } => {
            let (name, g) = load_input(&input)?;
            let triple = gamma_triple(&g)?;
            let hull = complete_hull(&g, &triple)?;
            let doc = to_document(&hull.algebra, &format!("hull({name})"));
            match format {
                Format::Json => Ok(serialize_document(&doc)),
                Format::Text => {
                    let mut out = String::new();
                    out.push_str(&format!(
                        "hull({name}): dim {} basis {}\n",
                        doc.dim,
                        doc.basis.join(", ")
                    ));
                    out.push_str(&format!("  {}\n", hull.completeness.witness()));
                    if hull.empty_m {
                        out.push_str("  note: m = 0, the k-part of the input is discarded\n");
                    }
                    for b in &doc.brackets {
                        let terms: Vec<String> = b
                            .coeffs
                            .iter()
                            .map(|(k, c)| format!("{} {}", c, doc.basis[k - 1]))
                            .collect();
                        out.push_str(&format!(
                            "  [{}, {}] = {}\n",
                            doc.basis[b.i - 1],
                            doc.basis[b.j - 1],
                            terms.join(" + ")
                        ));
                    }
                    Ok(out)
                }
            }
        }
    }
}

/// Runs the CLI on explicit arguments, returning the exit code and the
/// rendered output (the error message, when the code is nonzero).
pub fn cli<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let parsed = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return (code, e.to_string());
        }
    };
    match run(parsed) {
        Ok(out) => (0, out),
        Err(e) => (e.exit_code(), format!("error: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_paper5_json() {
        let (code, out) = cli(["lietower", "analyze", "catalog:paper5", "--format", "json"]);
        assert_eq!(code, 0, "{out}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let k = &v["gamma_triple"]["k"];
        assert_eq!(k["dim"], 3);
        assert_eq!(v["input"]["dim"], 5);
    }

    #[test]
    fn der_sl2_is_inner() {
        let (code, out) = cli(["lietower", "der", "catalog:sl2", "--format", "json"]);
        assert_eq!(code, 0, "{out}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["derivations"]["dim"], 3);
        assert_eq!(v["derivations"]["inner"], true);
    }

    #[test]
    fn tower_abelian2_case2() {
        let (code, out) = cli([
            "lietower",
            "tower",
            "catalog:abelian(2)",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0, "{out}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["tower"]["case"], "case2_K_times_perfect");
        assert_eq!(v["tower"]["terminal"]["dim"], 4);
    }

    #[test]
    fn unknown_catalog_is_input_error() {
        let (code, out) = cli(["lietower", "analyze", "catalog:nope"]);
        assert_eq!(code, 1);
        assert!(out.contains("unknown catalog"));
    }

    #[test]
    fn fast_path_on_rejects_nonzero_center() {
        let (code, _) = cli(["lietower", "tower", "catalog:heis3", "--fast-path", "on"]);
        assert_eq!(code, 1);
    }
}
