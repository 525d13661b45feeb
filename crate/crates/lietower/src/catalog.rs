//! Built-in catalog of fixture algebras. Names are stable API; fixtures are
//! embedded so tests stay hermetic. Direct products are spelled with `*`,
//! e.g. `sl2*aff1`.

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};

/// Base catalog names (products excluded).
pub const BASE_NAMES: &[&str] = &["abelian(n)", "aff1", "heis3", "sl2", "paper5", "diag12"];

/// Looks up a catalog algebra by name.
pub fn catalog(name: &str) -> Result<LieAlgebra> {
    if name.contains('*') {
        let mut parts = name.split('*');
        let first = catalog(parts.next().unwrap().trim())?;
        return parts.try_fold(first, |acc, part| {
            Ok(acc.direct_product(&catalog(part.trim())?))
        });
    }
    match name.trim() {
        "aff1" => aff1(),
        "heis3" => heis3(),
        "sl2" => sl2(),
        "paper5" => paper5(),
        "diag12" => diag12(),
        other => {
            if let Some(n) = parse_abelian(other) {
                return abelian(n);
            }
            Err(Error::UnknownCatalog(other.to_string()))
        }
    }
}

fn parse_abelian(name: &str) -> Option<usize> {
    let inner = name.strip_prefix("abelian(")?.strip_suffix(')')?;
    inner.trim().parse().ok()
}

/// Abelian algebra of the given dimension; all brackets vanish.
pub fn abelian(n: usize) -> Result<LieAlgebra> {
    let names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    LieAlgebra::new(names, Vec::new())
}

/// Two-dimensional non-abelian algebra: [x, y] = y.
pub fn aff1() -> Result<LieAlgebra> {
    LieAlgebra::from_int_brackets(&["x", "y"], &[(0, 1, &[(1, 1)])])
}

/// Heisenberg algebra: [x, y] = z.
pub fn heis3() -> Result<LieAlgebra> {
    LieAlgebra::from_int_brackets(&["x", "y", "z"], &[(0, 1, &[(2, 1)])])
}

/// Split simple three-dimensional algebra on the basis (e, h, f):
/// [h, e] = 2e, [h, f] = -2f, [e, f] = h.
pub fn sl2() -> Result<LieAlgebra> {
    LieAlgebra::from_int_brackets(
        &["e", "h", "f"],
        &[(0, 1, &[(0, -2)]), (0, 2, &[(1, 1)]), (1, 2, &[(2, -2)])],
    )
}

/// Five-dimensional solvable fixture:
/// `[x1,x2] = x5`, `[x1,x3] = x3`, `[x1,x4] = -x4`, `[x3,x4] = x5`.
pub fn paper5() -> Result<LieAlgebra> {
    LieAlgebra::from_int_brackets(
        &["x1", "x2", "x3", "x4", "x5"],
        &[
            (0, 1, &[(4, 1)]),
            (0, 2, &[(2, 1)]),
            (0, 3, &[(3, -1)]),
            (2, 3, &[(4, 1)]),
        ],
    )
}

/// A one-dimensional torus spanned by diag(1, 2) acting on an abelian plane:
/// [a, v1] = v1, [a, v2] = 2 v2. The action is surjective on the plane and
/// the center is trivial.
pub fn diag12() -> Result<LieAlgebra> {
    LieAlgebra::from_int_brackets(&["a", "v1", "v2"], &[(0, 1, &[(1, 1)]), (0, 2, &[(2, 2)])])
}
