//! Lie algebras as structure-constant tables.
//!
//! Antisymmetry is structural: constants are stored for `i < j` only. The
//! Jacobi identity is validated on construction, so every `LieAlgebra` value
//! in the crate (quotients, products, derivation algebras, reassembled
//! algebras) is a genuine Lie algebra.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::exp_nilpotent;
use crate::scalar::Scalar;
use crate::subspace::{kernel, Subspace};

#[derive(Clone)]
pub struct LieAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    // table[pair_index(i, j)] = coordinates of [e_i, e_j] for i < j
    table: Vec<Vec<Scalar>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

/// Booleans derived from the series and the radical.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgebraFlags {
    pub solvable: bool,
    pub nilpotent: bool,
    pub semisimple: bool,
    pub perfect: bool,
    pub abelian: bool,
}

/// A quotient algebra together with the projection (quotient coordinates of
/// an ambient vector) and the lift (standard-basis section of the
/// projection).
pub struct Quotient {
    pub algebra: LieAlgebra,
    pub projection: Matrix,
    pub lift: Matrix,
}

/// A subalgebra realized as its own `LieAlgebra` on the canonical basis of
/// the defining subspace.
pub struct Subalgebra {
    pub algebra: LieAlgebra,
    pub space: Subspace,
}

impl Subalgebra {
    /// Lifts a subspace given in subalgebra coordinates back to the ambient
    /// algebra.
    pub fn to_ambient(&self, inner: &Subspace) -> Subspace {
        assert_eq!(inner.ambient_dim(), self.space.dim());
        Subspace::from_rows(
            self.space.ambient_dim(),
            inner
                .basis_rows()
                .iter()
                .map(|c| self.space.vector_from_coordinates(c))
                .collect(),
        )
    }

    /// Expresses an ambient subspace contained in this subalgebra in
    /// subalgebra coordinates.
    pub fn from_ambient(&self, outer: &Subspace) -> Result<Subspace> {
        let mut rows = Vec::new();
        for r in outer.basis_rows() {
            let c = self.space.coordinates_of(&r).ok_or_else(|| {
                Error::Internal("subspace does not lie inside the subalgebra".into())
            })?;
            rows.push(c);
        }
        Ok(Subspace::from_rows(self.space.dim(), rows))
    }
}

/// Sparse integer bracket data: `(i, j, [(k, c), ...])`.
pub type IntBrackets<'a> = &'a [(usize, usize, &'a [(usize, i64)])];

fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * (2 * dim - i - 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    /// Builds and validates an algebra from sparse bracket data: each entry
    /// is `(i, j, coordinates of [e_i, e_j])` with `i < j`, zero-based.
    pub fn new(
        basis_names: Vec<String>,
        entries: Vec<(usize, usize, Vec<Scalar>)>,
    ) -> Result<LieAlgebra> {
        let dim = basis_names.len();
        let mut table = vec![vec![Scalar::zero(); dim]; dim * dim.saturating_sub(1) / 2];
        for (i, j, coords) in entries {
            if i >= j || j >= dim {
                return Err(Error::Parse(format!(
                    "bracket entry ({i}, {j}) out of range for dimension {dim}"
                )));
            }
            if coords.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: coords.len(),
                });
            }
            table[pair_index(dim, i, j)] = coords;
        }
        let alg = LieAlgebra {
            dim,
            basis_names,
            table,
        };
        alg.validate_jacobi()?;
        Ok(alg)
    }

    /// Integer-coefficient convenience constructor: entries are
    /// `(i, j, [(k, c), ...])` meaning `[e_i, e_j] = sum c * e_k`.
    pub fn from_int_brackets(names: &[&str], entries: IntBrackets<'_>) -> Result<LieAlgebra> {
        let dim = names.len();
        let mut list = Vec::new();
        for &(i, j, terms) in entries {
            let mut coords = vec![Scalar::zero(); dim];
            for &(k, c) in terms {
                coords[k] = crate::scalar::int(c);
            }
            list.push((i, j, coords));
        }
        LieAlgebra::new(names.iter().map(|s| s.to_string()).collect(), list)
    }

    fn validate_jacobi(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let ij = self.bracket_basis(i, j);
                for k in (j + 1)..self.dim {
                    let jk = self.bracket_basis(j, k);
                    let ki = self.bracket_basis(k, i);
                    let mut sum = self.bracket_with_unit(&ij, k);
                    let t2 = self.bracket_with_unit(&jk, i);
                    let t3 = self.bracket_with_unit(&ki, j);
                    for t in 0..self.dim {
                        sum[t] = &sum[t] + &t2[t] + &t3[t];
                    }
                    if sum.iter().any(|x| !x.is_zero()) {
                        return Err(Error::JacobiViolation {
                            a: self.basis_names[i].clone(),
                            b: self.basis_names[j].clone(),
                            c: self.basis_names[k].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Coordinates of `[e_i, e_j]` for any `i`, `j`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        if i == j {
            return vec![Scalar::zero(); self.dim];
        }
        if i < j {
            self.table[pair_index(self.dim, i, j)].clone()
        } else {
            self.table[pair_index(self.dim, j, i)]
                .iter()
                .map(|x| -x)
                .collect()
        }
    }

    /// `[v, e_j]` for a coordinate vector `v`.
    pub fn bracket_with_unit(&self, v: &[Scalar], j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() || i == j {
                continue;
            }
            let row = self.bracket_basis(i, j);
            for t in 0..self.dim {
                if !row[t].is_zero() {
                    out[t] = &out[t] + &(c * &row[t]);
                }
            }
        }
        out
    }

    /// Full bilinear bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Scalar::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() && y[i].is_zero() {
                continue;
            }
            for j in (i + 1)..self.dim {
                let c = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
                if c.is_zero() {
                    continue;
                }
                let row = &self.table[pair_index(self.dim, i, j)];
                for t in 0..self.dim {
                    if !row[t].is_zero() {
                        out[t] = &out[t] + &(&c * &row[t]);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad x : y -> [x, y]` acting on coordinate columns.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.dim);
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket_with_unit(x, j);
            for r in 0..self.dim {
                if !col[r].is_zero() {
                    m.set(r, j, col[r].clone());
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        let mut x = vec![Scalar::zero(); self.dim];
        x[i] = crate::scalar::one();
        self.ad(&x)
    }

    pub fn unit(&self, i: usize) -> Vec<Scalar> {
        let mut x = vec![Scalar::zero(); self.dim];
        x[i] = crate::scalar::one();
        x
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim)
    }

    /// Span of all `[u_i, v_j]` over bases of two subspaces.
    pub fn bracket_subspaces(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for a in u.basis_rows() {
            for b in v.basis_rows() {
                rows.push(self.bracket(&a, &b));
            }
        }
        Subspace::from_rows(self.dim, rows)
    }

    /// Joint kernel of all `ad e_i`.
    pub fn center(&self) -> Subspace {
        let mats: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        stacked_kernel(self.dim, &mats)
    }

    /// `{x : [x, w] = 0}`.
    pub fn centralizer(&self, w: &Subspace) -> Result<Subspace> {
        self.check_ambient(w)?;
        let mats: Vec<Matrix> = w.basis_rows().iter().map(|r| self.ad(r)).collect();
        Ok(stacked_kernel(self.dim, &mats))
    }

    /// `{x : [x, w] <= w}`.
    pub fn normalizer(&self, w: &Subspace) -> Result<Subspace> {
        self.check_ambient(w)?;
        let q = w.reduction_matrix();
        let mats: Vec<Matrix> = w.basis_rows().iter().map(|r| q.mul(&self.ad(r))).collect();
        Ok(stacked_kernel(self.dim, &mats))
    }

    fn check_ambient(&self, w: &Subspace) -> Result<()> {
        if w.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch {
                left: self.dim,
                right: w.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Derived or lower central series, starting at the full algebra and
    /// strictly decreasing until stable; the stable member is the last entry
    /// and is not repeated.
    pub fn series(&self, kind: SeriesKind) -> Vec<Subspace> {
        let mut out = vec![self.full_space()];
        loop {
            let last = out.last().unwrap();
            let next = match kind {
                SeriesKind::Derived => self.bracket_subspaces(last, last),
                SeriesKind::LowerCentral => self.bracket_subspaces(&self.full_space(), last),
            };
            if &next == last {
                break;
            }
            out.push(next);
        }
        out
    }

    /// Stable member of the lower central series.
    pub fn c_infty(&self) -> Subspace {
        self.series(SeriesKind::LowerCentral)
            .into_iter()
            .last()
            .unwrap()
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        self.bracket_subspaces(&self.full_space(), &self.full_space())
    }

    /// Killing matrix and the radical computed as the Killing-orthogonal of
    /// the derived subalgebra (valid in characteristic zero).
    pub fn killing_radical(&self) -> (Matrix, Subspace) {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let killing = Matrix::from_fn(self.dim, self.dim, |i, j| ads[i].mul(&ads[j]).trace());
        let derived = self.derived_subalgebra();
        let rows: Vec<Vec<Scalar>> = derived
            .basis_rows()
            .iter()
            .map(|d| killing.apply(d))
            .collect();
        let radical = if rows.is_empty() {
            self.full_space()
        } else {
            kernel(&Matrix::from_rows(rows))
        };
        (killing, radical)
    }

    pub fn radical(&self) -> Subspace {
        self.killing_radical().1
    }

    /// Largest nilpotent ideal. The radical acts on itself by a solvable
    /// algebra of operators, so membership in the trace-form radical of the
    /// associative algebra they generate is equivalent to ad-nilpotency;
    /// no eigenvalue computation is needed.
    pub fn nilradical(&self) -> Subspace {
        let r = self.radical();
        if r.is_zero() {
            return Subspace::zero(self.dim);
        }
        let sub = self
            .subalgebra(&r)
            .expect("radical is an ideal, hence a subalgebra");
        let d = r.dim();
        let gens: Vec<Matrix> = (0..d).map(|i| sub.algebra.ad_basis(i)).collect();

        // associative span closure of {I} u gens under products
        let mut basis: Vec<Matrix> = Vec::new();
        let mut flat = Subspace::zero(d * d);
        let push = |m: Matrix, basis: &mut Vec<Matrix>, flat: &mut Subspace| -> bool {
            if flat.contains_vector(&m.flatten()) {
                return false;
            }
            *flat = flat
                .sum(&Subspace::from_rows(d * d, vec![m.flatten()]))
                .unwrap();
            basis.push(m);
            true
        };
        push(Matrix::identity(d), &mut basis, &mut flat);
        for g in &gens {
            push(g.clone(), &mut basis, &mut flat);
        }
        let mut frontier = 0;
        while frontier < basis.len() {
            let upto = basis.len();
            for a in frontier..upto {
                for b in 0..upto {
                    let p = basis[a].mul(&basis[b]);
                    push(p, &mut basis, &mut flat);
                    if a != b {
                        let q = basis[b].mul(&basis[a]);
                        push(q, &mut basis, &mut flat);
                    }
                }
            }
            frontier = upto;
        }

        // trace-form radical of the associative algebra
        let gram = Matrix::from_fn(basis.len(), basis.len(), |i, j| {
            basis[i].mul(&basis[j]).trace()
        });
        let rad_coeffs = kernel(&gram);
        let rad_flat = Subspace::from_rows(
            d * d,
            rad_coeffs
                .basis_rows()
                .iter()
                .map(|c| {
                    let mut m = Matrix::zeros(d, d);
                    for (a, coeff) in c.iter().enumerate() {
                        if !coeff.is_zero() {
                            m = m.add(&basis[a].scale(coeff));
                        }
                    }
                    m.flatten()
                })
                .collect(),
        );

        // x in r with ad_r x inside the trace-form radical
        let q = rad_flat.reduction_matrix();
        let cond = Matrix::from_fn(d * d, d, |e, i| gens[i].flatten()[e].clone());
        let inner = kernel(&q.mul(&cond));
        sub.to_ambient(&inner)
    }

    /// Flags computed from the series and the radical.
    pub fn flags(&self) -> AlgebraFlags {
        let derived_last = self.series(SeriesKind::Derived).into_iter().last().unwrap();
        let lower_last = self.c_infty();
        let derived = self.derived_subalgebra();
        let radical = self.radical();
        AlgebraFlags {
            solvable: derived_last.is_zero(),
            nilpotent: lower_last.is_zero(),
            semisimple: radical.is_zero(),
            perfect: derived.is_full(),
            abelian: derived.is_zero(),
        }
    }

    pub fn is_ideal(&self, w: &Subspace) -> bool {
        w.ambient_dim() == self.dim
            && self
                .bracket_subspaces(&self.full_space(), w)
                .basis_rows()
                .iter()
                .all(|r| w.contains_vector(r))
    }

    pub fn is_subalgebra_space(&self, w: &Subspace) -> bool {
        w.ambient_dim() == self.dim
            && self
                .bracket_subspaces(w, w)
                .basis_rows()
                .iter()
                .all(|r| w.contains_vector(r))
    }

    /// Quotient by a verified ideal. The quotient basis is the set of
    /// standard basis vectors at the non-pivot coordinates of the ideal, so
    /// the constants are deterministic.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        self.check_ambient(ideal)?;
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let comp = ideal.complement_coordinates();
        let qdim = comp.len();
        let q = ideal.reduction_matrix();
        let projection = Matrix::from_fn(qdim, self.dim, |a, c| q.get(comp[a], c).clone());
        let mut lift = Matrix::zeros(self.dim, qdim);
        for (a, &c) in comp.iter().enumerate() {
            lift.set(c, a, crate::scalar::one());
        }
        let names: Vec<String> = comp.iter().map(|&c| self.basis_names[c].clone()).collect();
        let mut entries = Vec::new();
        for a in 0..qdim {
            for b in (a + 1)..qdim {
                let w = self.bracket_basis(comp[a], comp[b]);
                entries.push((a, b, projection.apply(&w)));
            }
        }
        let algebra = LieAlgebra::new(names, entries)?;
        Ok(Quotient {
            algebra,
            projection,
            lift,
        })
    }

    /// Block-diagonal direct product. Basis names are made unique when the
    /// factors collide.
    pub fn direct_product(&self, other: &LieAlgebra) -> LieAlgebra {
        let dim = self.dim + other.dim;
        let mut names: Vec<String> = Vec::with_capacity(dim);
        for n in self.basis_names.iter().chain(&other.basis_names) {
            let mut candidate = n.clone();
            let mut suffix = 1;
            while names.contains(&candidate) {
                suffix += 1;
                candidate = format!("{n}_{suffix}");
            }
            names.push(candidate);
        }
        let mut entries = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let mut coords = self.bracket_basis(i, j);
                coords.extend(vec![Scalar::zero(); other.dim]);
                entries.push((i, j, coords));
            }
        }
        for i in 0..other.dim {
            for j in (i + 1)..other.dim {
                let mut coords = vec![Scalar::zero(); self.dim];
                coords.extend(other.bracket_basis(i, j));
                entries.push((self.dim + i, self.dim + j, coords));
            }
        }
        LieAlgebra::new(names, entries).expect("product of valid algebras is valid")
    }

    /// Smallest ideal containing `w`.
    pub fn ideal_generated(&self, w: &Subspace) -> Subspace {
        let mut current = Subspace::from_rows(self.dim, w.basis_rows());
        loop {
            let next = current
                .sum(&self.bracket_subspaces(&self.full_space(), &current))
                .unwrap();
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// True iff every supplied derivation maps the ideal into itself.
    pub fn is_characteristic_ideal(&self, w: &Subspace, ders: &[Matrix]) -> Result<bool> {
        self.check_ambient(w)?;
        if !self.is_ideal(w) {
            return Err(Error::NotAnIdeal);
        }
        Ok(ders.iter().all(|d| {
            w.basis_rows()
                .iter()
                .all(|r| w.contains_vector(&d.apply(r)))
        }))
    }

    /// `exp(ad x)` for an ad-nilpotent `x`; a bracket-preserving bijection.
    pub fn inner_automorphism(&self, x: &[Scalar]) -> Result<Matrix> {
        exp_nilpotent(&self.ad(x))
    }

    pub fn is_ad_nilpotent(&self, x: &[Scalar]) -> bool {
        self.ad(x).nilpotency_index().is_some()
    }

    /// True iff the matrix satisfies the Leibniz identity on all basis pairs.
    pub fn is_derivation(&self, d: &Matrix) -> bool {
        if d.rows() != self.dim || d.cols() != self.dim {
            return false;
        }
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let lhs = d.apply(&self.bracket_basis(i, j));
                let di = d.col_vec(i);
                let dj = d.col_vec(j);
                let mut rhs = self.bracket_with_unit(&di, j);
                let t2 = self.bracket(&self.unit(i), &dj);
                for t in 0..self.dim {
                    rhs[t] = &rhs[t] + &t2[t];
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// True iff the matrix preserves all brackets exactly (an automorphism;
    /// invertibility must be checked separately if not known).
    pub fn is_automorphism(&self, a: &Matrix) -> bool {
        if a.rows() != self.dim || a.cols() != self.dim {
            return false;
        }
        if a.inverse().is_none() {
            return false;
        }
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let lhs = a.apply(&self.bracket_basis(i, j));
                let rhs = self.bracket(&a.col_vec(i), &a.col_vec(j));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Realizes a bracket-closed subspace as its own algebra on the
    /// subspace's canonical basis.
    pub fn subalgebra(&self, w: &Subspace) -> Result<Subalgebra> {
        self.check_ambient(w)?;
        if !self.is_subalgebra_space(w) {
            return Err(Error::NotASubalgebra);
        }
        let d = w.dim();
        let rows = w.basis_rows();
        let names: Vec<String> = (1..=d).map(|i| format!("b{i}")).collect();
        let mut entries = Vec::new();
        for a in 0..d {
            for b in (a + 1)..d {
                let v = self.bracket(&rows[a], &rows[b]);
                let coords = w
                    .coordinates_of(&v)
                    .ok_or_else(|| Error::Internal("bracket left the subalgebra span".into()))?;
                entries.push((a, b, coords));
            }
        }
        Ok(Subalgebra {
            algebra: LieAlgebra::new(names, entries)?,
            space: w.clone(),
        })
    }

    /// Matrix of a map restricted to an invariant subspace, in the
    /// subspace's canonical coordinates.
    pub fn restrict_map(m: &Matrix, w: &Subspace) -> Result<Matrix> {
        let d = w.dim();
        let mut out = Matrix::zeros(d, d);
        for (j, row) in w.basis_rows().iter().enumerate() {
            let image = m.apply(row);
            let coords = w
                .coordinates_of(&image)
                .ok_or_else(|| Error::Internal("subspace is not invariant under the map".into()))?;
            for i in 0..d {
                if !coords[i].is_zero() {
                    out.set(i, j, coords[i].clone());
                }
            }
        }
        Ok(out)
    }

    /// Same constants on the nose (names ignored).
    pub fn same_constants(&self, other: &LieAlgebra) -> bool {
        self.dim == other.dim && self.table == other.table
    }
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "LieAlgebra(dim {}, basis {:?})",
            self.dim, self.basis_names
        )
    }
}

/// Joint kernel of a family of matrices acting on the same space.
pub(crate) fn stacked_kernel(dim: usize, mats: &[Matrix]) -> Subspace {
    if mats.is_empty() {
        return Subspace::full(dim);
    }
    let rows = mats.len() * dim;
    let mut stacked = Matrix::zeros(rows, dim);
    for (k, m) in mats.iter().enumerate() {
        for r in 0..dim {
            for c in 0..dim {
                let v = m.get(r, c);
                if !v.is_zero() {
                    stacked.set(k * dim + r, c, v.clone());
                }
            }
        }
    }
    kernel(&stacked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::scalar::int;

    fn span(ambient: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::from_rows(
            ambient,
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn jacobi_violation_reports_witness() {
        // [x,y]=z, [y,z]=x, [x,z]=x violates Jacobi at (x,y,z)
        let err = LieAlgebra::from_int_brackets(
            &["x", "y", "z"],
            &[(0, 1, &[(2, 1)]), (1, 2, &[(0, 1)]), (0, 2, &[(0, 1)])],
        )
        .unwrap_err();
        match err {
            Error::JacobiViolation { a, b, c } => {
                assert_eq!((a.as_str(), b.as_str(), c.as_str()), ("x", "y", "z"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn ad_examples() {
        let g = catalog("paper5").unwrap();
        let ad1 = g.ad_basis(0);
        // x2 -> x5, x3 -> x3, x4 -> -x4
        assert_eq!(ad1.apply(&g.unit(1)), g.unit(4));
        assert_eq!(ad1.apply(&g.unit(2)), g.unit(2));
        assert_eq!(
            ad1.apply(&g.unit(3)),
            g.unit(3).iter().map(|x| -x).collect::<Vec<_>>()
        );

        let sl2 = catalog("sl2").unwrap();
        let adh = sl2.ad_basis(1);
        let two_e: Vec<_> = sl2.unit(0).iter().map(|x| x * &int(2)).collect();
        assert_eq!(adh.apply(&sl2.unit(0)), two_e);

        let ab = catalog("abelian(3)").unwrap();
        assert!(ab.ad(&[int(1), int(2), int(3)]).is_zero());
    }

    #[test]
    fn center_examples() {
        let g = catalog("paper5").unwrap();
        assert_eq!(g.center(), span(5, &[&[0, 0, 0, 0, 1]]));
        let ab = catalog("abelian(3)").unwrap();
        assert!(ab.center().is_full());
    }

    #[test]
    fn normalizer_example() {
        let aff = catalog("aff1").unwrap();
        let w = span(2, &[&[0, 1]]);
        assert!(aff.normalizer(&w).unwrap().is_full());
    }

    #[test]
    fn series_examples() {
        let g = catalog("paper5").unwrap();
        assert_eq!(
            g.c_infty(),
            span(5, &[&[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]])
        );

        let ab = catalog("abelian(2)").unwrap();
        let ds = ab.series(SeriesKind::Derived);
        assert_eq!(ds.len(), 2);
        assert!(ds[0].is_full() && ds[1].is_zero());

        let h = catalog("heis3").unwrap();
        let lc = h.series(SeriesKind::LowerCentral);
        assert_eq!(lc.len(), 3);
        assert!(lc[2].is_zero());
    }

    #[test]
    fn radical_examples() {
        let sl2 = catalog("sl2").unwrap();
        assert!(sl2.radical().is_zero());
        let g = catalog("paper5").unwrap();
        assert!(g.radical().is_full());
        let prod = sl2.direct_product(&catalog("aff1").unwrap());
        assert_eq!(
            prod.radical(),
            span(5, &[&[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]])
        );
    }

    #[test]
    fn nilradical_examples() {
        let g = catalog("paper5").unwrap();
        assert_eq!(
            g.nilradical(),
            span(
                5,
                &[
                    &[0, 1, 0, 0, 0],
                    &[0, 0, 1, 0, 0],
                    &[0, 0, 0, 1, 0],
                    &[0, 0, 0, 0, 1]
                ]
            )
        );
        let h = catalog("heis3").unwrap();
        assert!(h.nilradical().is_full());
        let aff = catalog("aff1").unwrap();
        assert_eq!(aff.nilradical(), span(2, &[&[0, 1]]));
    }

    #[test]
    fn flags_examples() {
        let sl2 = catalog("sl2").unwrap().flags();
        assert!(sl2.semisimple && sl2.perfect && !sl2.solvable);
        let h = catalog("heis3").unwrap().flags();
        assert!(h.nilpotent && h.solvable && !h.perfect);
        let p5 = catalog("paper5").unwrap().flags();
        assert!(p5.solvable && !p5.nilpotent);
    }

    #[test]
    fn quotient_examples() {
        let h = catalog("heis3").unwrap();
        let q = h.quotient(&h.center()).unwrap();
        assert!(q.algebra.same_constants(&catalog("abelian(2)").unwrap()));

        let g = catalog("paper5").unwrap();
        let w = span(5, &[&[0, 0, 1, 0, 0]]);
        assert_eq!(
            g.ideal_generated(&w),
            span(5, &[&[0, 0, 1, 0, 0], &[0, 0, 0, 0, 1]])
        );

        let prod = g.direct_product(&catalog("abelian(0)").unwrap());
        assert!(prod.same_constants(&g));
    }

    #[test]
    fn characteristic_ideal_examples() {
        let ab2 = catalog("abelian(2)").unwrap();
        let line = span(2, &[&[1, 0]]);
        // the rotation-like derivation e1 -> e2 moves the line
        let rot = Matrix::from_int_rows(&[&[0, 0], &[1, 0]]);
        assert!(ab2.is_derivation(&rot));
        assert!(!ab2.is_characteristic_ideal(&line, &[rot]).unwrap());
        assert!(ab2
            .is_characteristic_ideal(&line, &[Matrix::identity(2)])
            .unwrap());
    }

    #[test]
    fn inner_automorphism_preserves_brackets() {
        let g = catalog("paper5").unwrap();
        let a = g.inner_automorphism(&g.unit(2)).unwrap();
        assert!(g.is_automorphism(&a));
        // ad x1 is not nilpotent
        assert!(g.inner_automorphism(&g.unit(0)).is_err());
    }

    #[test]
    fn center_zero_iff_ad_injective() {
        for name in ["sl2", "aff1", "heis3", "paper5", "diag12"] {
            let g = catalog(name).unwrap();
            let ad_rank = {
                let rows: Vec<Vec<Scalar>> =
                    (0..g.dim()).map(|i| g.ad_basis(i).flatten()).collect();
                Subspace::from_rows(g.dim() * g.dim(), rows).dim()
            };
            assert_eq!(g.center().is_zero(), ad_rank == g.dim(), "algebra {name}");
        }
    }
}
