//! The structure-constant document format.
//!
//! A document is UTF-8 JSON with fields `name`, `dim`, `basis`, and
//! `brackets`, where each bracket entry holds one-based indices `i < j` and
//! a map from one-based basis index to an exact rational string (`"p"` or
//! `"p/q"`). No floating-point field exists anywhere; serialization is
//! canonical, so documents round-trip bit for bit.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, rational_string, Scalar};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// One-based basis index -> exact rational coefficient.
    pub coeffs: BTreeMap<usize, String>,
}

/// Parses and fully validates a document, returning it together with the
/// Jacobi-checked algebra it denotes.
pub fn parse_algebra(text: &str) -> Result<(AlgebraDocument, LieAlgebra)> {
    let doc: AlgebraDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let algebra = algebra_from_document(&doc)?;
    Ok((doc, algebra))
}

/// Builds the algebra a validated document denotes.
pub fn algebra_from_document(doc: &AlgebraDocument) -> Result<LieAlgebra> {
    if doc.basis.len() != doc.dim {
        return Err(Error::Parse(format!(
            "dim is {} but {} basis labels are given",
            doc.dim,
            doc.basis.len()
        )));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut entries = Vec::new();
    for entry in &doc.brackets {
        if entry.i == 0 || entry.j == 0 || entry.i > doc.dim || entry.j > doc.dim {
            return Err(Error::Parse(format!(
                "bracket indices ({}, {}) out of range 1..={}",
                entry.i, entry.j, doc.dim
            )));
        }
        if entry.i >= entry.j {
            return Err(Error::Parse(format!(
                "bracket entry requires i < j, got ({}, {})",
                entry.i, entry.j
            )));
        }
        if !seen.insert((entry.i, entry.j)) {
            return Err(Error::Parse(format!(
                "duplicate bracket entry ({}, {})",
                entry.i, entry.j
            )));
        }
        let mut coords = vec![Scalar::zero(); doc.dim];
        for (k, value) in &entry.coeffs {
            if *k == 0 || *k > doc.dim {
                return Err(Error::Parse(format!(
                    "coefficient index {k} out of range 1..={}",
                    doc.dim
                )));
            }
            coords[k - 1] = parse_rational(value)?;
        }
        entries.push((entry.i - 1, entry.j - 1, coords));
    }
    LieAlgebra::new(doc.basis.clone(), entries)
}

/// Renders an algebra as a canonical document: entries ordered by (i, j),
/// zero coefficients omitted, rationals in lowest-term string form.
pub fn to_document(g: &LieAlgebra, name: &str) -> AlgebraDocument {
    let mut brackets = Vec::new();
    for i in 0..g.dim() {
        for j in (i + 1)..g.dim() {
            let coords = g.bracket_basis(i, j);
            let coeffs: BTreeMap<usize, String> = coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k + 1, rational_string(c)))
                .collect();
            if !coeffs.is_empty() {
                brackets.push(BracketEntry {
                    i: i + 1,
                    j: j + 1,
                    coeffs,
                });
            }
        }
    }
    AlgebraDocument {
        name: name.to_string(),
        dim: g.dim(),
        basis: g.basis_names().to_vec(),
        brackets,
    }
}

/// Canonical serialization.
pub fn serialize_document(doc: &AlgebraDocument) -> String {
    serde_json::to_string_pretty(doc).expect("document serialization cannot fail")
}

/// Hex SHA-256 of the canonical serialization, used as input provenance.
pub fn document_hash(doc: &AlgebraDocument) -> String {
    let mut hasher = Sha256::new();
    hasher.update(serialize_document(doc).as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}
