//! Machine-readable reports.
//!
//! A report has the fixed top-level keys `input`, `gamma_triple`,
//! `derivations`, `tower`, and `version`. Sections a subcommand did not
//! compute are null. Every subspace is rendered as its canonical
//! reduced-row-echelon rows of exact rational strings, so identical inputs
//! produce identical reports, and the text rendering carries the same
//! numeric content as the JSON.

use serde::Serialize;

use crate::algebra::{AlgebraFlags, LieAlgebra, SeriesKind};
use crate::doc::{document_hash, to_document, AlgebraDocument};
use crate::gamma::GammaTriple;
use crate::scalar::rational_string;
use crate::subspace::Subspace;
use crate::tower::{SchenkmanBound, TowerCase, TowerReport};

#[derive(Serialize, Debug)]
pub struct ReportDocument {
    pub input: InputSection,
    pub gamma_triple: Option<GammaTripleSection>,
    pub derivations: Option<DerivationsSection>,
    pub tower: Option<TowerSection>,
    pub version: String,
}

#[derive(Serialize, Debug)]
pub struct InputSection {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub hash: String,
    pub analysis: Option<AnalysisSection>,
}

#[derive(Serialize, Debug)]
pub struct AnalysisSection {
    pub flags: FlagsSection,
    pub center: SubspaceSection,
    pub radical: SubspaceSection,
    pub nilradical: SubspaceSection,
    pub levi: SubspaceSection,
    pub derived_series_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
}

#[derive(Serialize, Debug)]
pub struct FlagsSection {
    pub solvable: bool,
    pub nilpotent: bool,
    pub semisimple: bool,
    pub perfect: bool,
    pub abelian: bool,
}

#[derive(Serialize, Debug)]
pub struct SubspaceSection {
    pub dim: usize,
    pub rows: Vec<Vec<String>>,
}

#[derive(Serialize, Debug)]
pub struct GammaTripleSection {
    pub s: SubspaceSection,
    pub k: SubspaceSection,
    pub m: SubspaceSection,
    pub h: SubspaceSection,
    pub gamma_dim: usize,
}

#[derive(Serialize, Debug)]
pub struct DerivationsSection {
    pub dim: usize,
    pub ad_dim: usize,
    pub inner: bool,
    pub as_algebra: Option<AlgebraDocument>,
}

#[derive(Serialize, Debug)]
pub struct TowerSection {
    pub steps: Vec<TowerStepSection>,
    pub case: String,
    pub q: Option<usize>,
    pub terminal: Option<AlgebraDocument>,
    pub schenkman: Option<SchenkmanSection>,
    pub trichotomy_violation: Option<usize>,
}

#[derive(Serialize, Debug)]
pub struct TowerStepSection {
    pub dim: usize,
    pub center_dim: usize,
    pub radical_dim: usize,
    pub nilradical_dim: usize,
    pub derived_codim: usize,
    pub complete: bool,
}

#[derive(Serialize, Debug)]
pub struct SchenkmanSection {
    pub bound: usize,
    pub ghat_dim: usize,
    pub sbm_dim: usize,
    pub holds: bool,
}

pub fn subspace_section(w: &Subspace) -> SubspaceSection {
    SubspaceSection {
        dim: w.dim(),
        rows: w
            .basis_rows()
            .iter()
            .map(|r| r.iter().map(rational_string).collect())
            .collect(),
    }
}

pub fn flags_section(f: &AlgebraFlags) -> FlagsSection {
    FlagsSection {
        solvable: f.solvable,
        nilpotent: f.nilpotent,
        semisimple: f.semisimple,
        perfect: f.perfect,
        abelian: f.abelian,
    }
}

pub fn input_section(
    name: &str,
    g: &LieAlgebra,
    analysis: Option<AnalysisSection>,
) -> InputSection {
    let doc = to_document(g, name);
    InputSection {
        name: name.to_string(),
        dim: g.dim(),
        basis: g.basis_names().to_vec(),
        hash: document_hash(&doc),
        analysis,
    }
}

pub fn analysis_section(g: &LieAlgebra, levi: &Subspace) -> AnalysisSection {
    AnalysisSection {
        flags: flags_section(&g.flags()),
        center: subspace_section(&g.center()),
        radical: subspace_section(&g.radical()),
        nilradical: subspace_section(&g.nilradical()),
        levi: subspace_section(levi),
        derived_series_dims: g
            .series(SeriesKind::Derived)
            .iter()
            .map(|s| s.dim())
            .collect(),
        lower_central_dims: g
            .series(SeriesKind::LowerCentral)
            .iter()
            .map(|s| s.dim())
            .collect(),
    }
}

pub fn gamma_triple_section(t: &GammaTriple) -> GammaTripleSection {
    GammaTripleSection {
        s: subspace_section(&t.s),
        k: subspace_section(&t.k),
        m: subspace_section(&t.m),
        h: subspace_section(&t.h),
        gamma_dim: t.gamma.len(),
    }
}

pub fn case_name(case: TowerCase) -> &'static str {
    match case {
        TowerCase::Case1Complete => "case1_complete",
        TowerCase::Case2KTimesPerfect => "case2_K_times_perfect",
        TowerCase::Case3DivergentSuspected => "case3_divergent_suspected",
        TowerCase::Undetermined => "undetermined",
    }
}

pub fn schenkman_section(b: &SchenkmanBound) -> SchenkmanSection {
    SchenkmanSection {
        bound: b.bound,
        ghat_dim: b.ghat_dim,
        sbm_dim: b.sbm_dim,
        holds: b.holds,
    }
}

pub fn tower_section(rep: &TowerReport) -> TowerSection {
    TowerSection {
        steps: rep
            .steps
            .iter()
            .map(|s| TowerStepSection {
                dim: s.dim,
                center_dim: s.center_dim,
                radical_dim: s.radical_dim,
                nilradical_dim: s.nilradical_dim,
                derived_codim: s.derived_codim,
                complete: s.complete,
            })
            .collect(),
        case: case_name(rep.case).to_string(),
        q: rep.q,
        terminal: rep
            .terminal
            .as_ref()
            .map(|t| to_document(t, "tower_terminal")),
        schenkman: rep.schenkman.as_ref().map(schenkman_section),
        trichotomy_violation: rep.trichotomy_violation,
    }
}

pub fn tool_version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

pub fn render_json(report: &ReportDocument) -> String {
    serde_json::to_string_pretty(report).expect("report serialization cannot fail")
}

fn write_subspace(out: &mut String, label: &str, s: &SubspaceSection) {
    out.push_str(&format!("  {label}: dim {}\n", s.dim));
    for row in &s.rows {
        out.push_str(&format!("    [{}]\n", row.join(", ")));
    }
}

/// Plain-text rendering with the same numeric content as the JSON form.
pub fn render_text(report: &ReportDocument) -> String {
    let mut out = String::new();
    let input = &report.input;
    out.push_str(&format!(
        "input: {} (dim {})\n  basis: {}\n  hash: {}\n",
        input.name,
        input.dim,
        input.basis.join(", "),
        input.hash
    ));
    if let Some(a) = &input.analysis {
        let f = &a.flags;
        out.push_str(&format!(
            "  flags: solvable={} nilpotent={} semisimple={} perfect={} abelian={}\n",
            f.solvable, f.nilpotent, f.semisimple, f.perfect, f.abelian
        ));
        write_subspace(&mut out, "center", &a.center);
        write_subspace(&mut out, "radical", &a.radical);
        write_subspace(&mut out, "nilradical", &a.nilradical);
        write_subspace(&mut out, "levi", &a.levi);
        out.push_str(&format!(
            "  derived series dims: {:?}\n  lower central dims: {:?}\n",
            a.derived_series_dims, a.lower_central_dims
        ));
    }
    if let Some(t) = &report.gamma_triple {
        out.push_str(&format!("gamma triple: gamma_dim {}\n", t.gamma_dim));
        write_subspace(&mut out, "s", &t.s);
        write_subspace(&mut out, "k", &t.k);
        write_subspace(&mut out, "m", &t.m);
        write_subspace(&mut out, "h", &t.h);
    }
    if let Some(d) = &report.derivations {
        out.push_str(&format!(
            "derivations: dim {} ad_dim {} inner={}\n",
            d.dim, d.ad_dim, d.inner
        ));
    }
    if let Some(t) = &report.tower {
        out.push_str(&format!("tower: case {}\n", t.case));
        for (i, s) in t.steps.iter().enumerate() {
            out.push_str(&format!(
                "  step {i}: dim {} center {} radical {} nilradical {} codim[g,g] {} complete={}\n",
                s.dim, s.center_dim, s.radical_dim, s.nilradical_dim, s.derived_codim, s.complete
            ));
        }
        if let Some(q) = t.q {
            out.push_str(&format!("  normalizer chain stabilizes at q = {q}\n"));
        }
        if let Some(b) = &t.schenkman {
            out.push_str(&format!(
                "  bound: {} (ghat {}, s+B+m {}) holds={}\n",
                b.bound, b.ghat_dim, b.sbm_dim, b.holds
            ));
        }
        if let Some(term) = &t.terminal {
            out.push_str(&format!(
                "  terminal: dim {} basis {}\n",
                term.dim,
                term.basis.join(", ")
            ));
        }
        if let Some(v) = t.trichotomy_violation {
            out.push_str(&format!("  trichotomy violation at step {v}\n"));
        }
    }
    out.push_str(&format!("version: {}\n", report.version));
    out
}
