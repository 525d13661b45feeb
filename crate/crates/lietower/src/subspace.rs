//! Canonical subspaces of a fixed coordinate space.
//!
//! A `Subspace` stores the unique reduced-row-echelon basis of its span, so
//! two subspaces are equal exactly when their basis matrices are identical.
//! All the lattice operations (sum, intersection, containment) return
//! canonical results.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Canonicalizes a spanning set given as rows.
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Scalar>>) -> Subspace {
        for row in &rows {
            assert_eq!(row.len(), ambient, "spanning row has wrong length");
        }
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let r = Matrix::from_rows(rows).rref();
        let basis = Matrix::from_fn(r.rank, ambient, |i, j| r.reduced.get(i, j).clone());
        Subspace {
            ambient,
            basis,
            pivots: r.pivots,
        }
    }

    pub fn from_matrix_rows(m: &Matrix) -> Subspace {
        Subspace::from_rows(m.cols(), (0..m.rows()).map(|r| m.row_vec(r)).collect())
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The canonical RREF basis, rows are basis vectors.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    /// Ambient coordinates not used as pivots; they index a complement basis.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Residual of `v` after reduction against the basis. Zero iff `v` lies
    /// in the subspace.
    pub fn reduce_vector(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for c in 0..self.ambient {
                let b = self.basis.get(i, c);
                if b.is_zero() {
                    continue;
                }
                out[c] = &out[c] - &(&f * b);
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.reduce_vector(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the canonical basis, when `v` lies in the
    /// subspace. Because the basis is in RREF these are just the entries of
    /// `v` at the pivot columns.
    pub fn coordinates_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Reassembles an ambient vector from canonical-basis coordinates.
    pub fn vector_from_coordinates(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Scalar::zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let b = self.basis.get(i, j);
                if !b.is_zero() {
                    out[j] = &out[j] + &(c * b);
                }
            }
        }
        out
    }

    /// Matrix `Q` with `Q v = reduce_vector(v)`; `v` lies in the subspace iff
    /// `Q v = 0`.
    pub fn reduction_matrix(&self) -> Matrix {
        let n = self.ambient;
        let mut q = Matrix::identity(n);
        // Q = I - sum_i (basis row i as column) * e_{p_i}^T
        for (i, &p) in self.pivots.iter().enumerate() {
            for c in 0..n {
                let b = self.basis.get(i, c);
                if b.is_zero() {
                    continue;
                }
                let v = q.get(c, p) - b;
                q.set(c, p, v);
            }
        }
        q
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Ok(Subspace::from_rows(self.ambient, rows))
    }

    /// Zassenhaus intersection: row-reduce [U|U; W|0] and read the right
    /// halves of the rows whose left halves vanished.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut rows = Vec::new();
        for r in self.basis_rows() {
            let mut row = r.clone();
            row.extend(r);
            rows.push(row);
        }
        for r in other.basis_rows() {
            let mut row = r;
            row.extend(vec![Scalar::zero(); n]);
            rows.push(row);
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(n));
        }
        let red = Matrix::from_rows(rows).rref().reduced;
        let mut inter = Vec::new();
        for i in 0..red.rows() {
            let left_zero = (0..n).all(|c| red.get(i, c).is_zero());
            let right = (n..2 * n)
                .map(|c| red.get(i, c).clone())
                .collect::<Vec<_>>();
            if left_zero && right.iter().any(|x| !x.is_zero()) {
                inter.push(right);
            }
        }
        Ok(Subspace::from_rows(n, inter))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis_rows().iter().all(|r| self.contains_vector(r)))
    }

    /// Image of the subspace under a linear map acting on ambient columns.
    pub fn map_through(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        Subspace::from_rows(
            m.rows(),
            self.basis_rows().iter().map(|r| m.apply(r)).collect(),
        )
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}, basis {:?})",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

/// Solves `a x = b` exactly. Returns a particular solution when the system is
/// consistent (free variables set to zero), plus the full kernel of `a`.
pub fn solve(a: &Matrix, b: &[Scalar]) -> (Option<Vec<Scalar>>, Subspace) {
    assert_eq!(a.rows(), b.len(), "solve shape mismatch");
    let cols = a.cols();
    let mut aug = Matrix::zeros(a.rows(), cols + 1);
    for r in 0..a.rows() {
        for c in 0..cols {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, cols, b[r].clone());
    }
    let red = aug.rref();
    let particular = if red.pivots.contains(&cols) {
        None
    } else {
        let mut x = vec![Scalar::zero(); cols];
        for (i, &p) in red.pivots.iter().enumerate() {
            x[p] = red.reduced.get(i, cols).clone();
        }
        Some(x)
    };
    (particular, kernel(a))
}

/// Kernel of `a` as a canonical subspace of the column coordinate space.
pub fn kernel(a: &Matrix) -> Subspace {
    let red = a.rref();
    let cols = a.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !red.pivots.contains(c)).collect();
    let mut rows = Vec::new();
    for &f in &free {
        let mut v = vec![Scalar::zero(); cols];
        v[f] = Scalar::one();
        for (i, &p) in red.pivots.iter().enumerate() {
            v[p] = -red.reduced.get(i, f).clone();
        }
        rows.push(v);
    }
    Subspace::from_rows(cols, rows)
}

/// Kernel and column space (image) of a matrix, both canonical.
pub fn kernel_image(a: &Matrix) -> (Subspace, Subspace) {
    let ker = kernel(a);
    let img = Subspace::from_matrix_rows(&a.transpose());
    (ker, img)
}
