//! The derivation algebra and its reassembly from triple data.
//!
//! `derivation_space` solves the Leibniz system densely and canonicalizes
//! the result, so derivation bases are reproducible and tower iteration is
//! deterministic. The rest of the module computes the Gamma-centralizer of
//! Der g, the algebra B of Gamma-centralizing derivations of nhat restricted
//! to m, and reassembles Der g on the basis s + N_B(mu(k)) + m with the
//! bracket law transported from g.

use num_traits::Zero;

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::gamma::{mu_of, GammaTriple, MuRep};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::{kernel, solve, Subspace};

/// The full derivation algebra of `g` on a canonical basis.
pub struct DerivationSpace {
    /// Canonical basis: flattened matrices in reduced row echelon form.
    pub basis: Vec<Matrix>,
    /// Commutator structure constants on that basis.
    pub as_algebra: LieAlgebra,
    /// Row `i` holds the coordinates of `ad e_i` in the derivation basis.
    pub ad_embedding: Matrix,
    flat: Subspace,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords_of(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        self.flat.coordinates_of(&m.flatten())
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.flat.contains_vector(&m.flatten())
    }

    pub fn matrix_from_coords(&self, c: &[Scalar]) -> Matrix {
        assert_eq!(c.len(), self.basis.len());
        let n = self.ad_embedding.rows();
        let mut out = Matrix::zeros(n, n);
        for (i, x) in c.iter().enumerate() {
            if !x.is_zero() {
                out = out.add(&self.basis[i].scale(x));
            }
        }
        out
    }

    /// Span of the inner derivations inside the derivation coordinates.
    pub fn ad_image(&self) -> Subspace {
        Subspace::from_matrix_rows(&self.ad_embedding)
    }

    /// dim Der g = dim g and only inner derivations.
    pub fn is_inner_only(&self) -> bool {
        self.ad_image().dim() == self.dim()
    }
}

/// Solves the Leibniz system `D[x_i,x_j] = [Dx_i,x_j] + [x_i,Dx_j]` over all
/// basis pairs and returns the canonical derivation basis, the commutator
/// structure constants, and the `ad` embedding.
pub fn derivation_space(g: &LieAlgebra) -> Result<DerivationSpace> {
    let n = g.dim();
    let nn = n * n;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let w = g.bracket_basis(i, j);
            for t in 0..n {
                let mut row = vec![Scalar::zero(); nn];
                // (D w)_t
                for c in 0..n {
                    if !w[c].is_zero() {
                        row[t * n + c] = &row[t * n + c] + &w[c];
                    }
                }
                // -([D e_i, e_j])_t and -([e_i, D e_j])_t
                for a in 0..n {
                    let caj = g.bracket_basis(a, j);
                    if !caj[t].is_zero() {
                        row[a * n + i] = &row[a * n + i] - &caj[t];
                    }
                    let cia = g.bracket_basis(i, a);
                    if !cia[t].is_zero() {
                        row[a * n + j] = &row[a * n + j] - &cia[t];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let flat = if rows.is_empty() {
        Subspace::full(nn)
    } else {
        kernel(&Matrix::from_rows(rows))
    };
    let basis: Vec<Matrix> = flat
        .basis_rows()
        .into_iter()
        .map(|r| Matrix::unflatten(n, n, r))
        .collect();
    let d = basis.len();

    for der in &basis {
        if !g.is_derivation(der) {
            return Err(Error::Internal(
                "Leibniz solver produced a non-derivation".into(),
            ));
        }
    }

    let names: Vec<String> = (1..=d).map(|i| format!("d{i}")).collect();
    let mut entries = Vec::new();
    for a in 0..d {
        for b in (a + 1)..d {
            let c = basis[a].commutator(&basis[b]);
            let coords = flat.coordinates_of(&c.flatten()).ok_or_else(|| {
                Error::Internal("derivation commutator left the solved space".into())
            })?;
            entries.push((a, b, coords));
        }
    }
    let as_algebra = LieAlgebra::new(names, entries)?;

    let mut ad_embedding = Matrix::zeros(n, d);
    for i in 0..n {
        let ad = g.ad_basis(i);
        let coords = flat
            .coordinates_of(&ad.flatten())
            .ok_or_else(|| Error::Internal("ad of a basis vector is not a derivation".into()))?;
        for (j, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                ad_embedding.set(i, j, c.clone());
            }
        }
    }
    // ad g is an ideal of Der g: [D, ad x] = ad(D x) exactly
    for der in &basis {
        for i in 0..n {
            let lhs = der.commutator(&g.ad_basis(i));
            let rhs = g.ad(&der.col_vec(i));
            if lhs != rhs {
                return Err(Error::Internal("[D, ad x] differs from ad(Dx)".into()));
            }
        }
    }

    Ok(DerivationSpace {
        basis,
        as_algebra,
        ad_embedding,
        flat,
    })
}

/// The centralizer of Gamma inside Der g, plus Theta: the restrictions of
/// its basis to m (in m-coordinates).
pub struct GammaCentralizer {
    pub basis: Vec<Matrix>,
    pub theta: Vec<Matrix>,
}

/// Computes `(Der g)^Gamma = {D : [D, Gamma] = 0}`, verifies that each
/// element kills s and stabilizes k and m, and verifies the three-way split
/// `Der g = ad s + ad m + (Der g)^Gamma`.
pub fn der_gamma_centralizer(
    g: &LieAlgebra,
    der: &DerivationSpace,
    t: &GammaTriple,
) -> Result<GammaCentralizer> {
    let n = g.dim();
    let nn = n * n;
    let d = der.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for gam in &t.gamma {
        let comms: Vec<Vec<Scalar>> = der
            .basis
            .iter()
            .map(|b| b.commutator(gam).flatten())
            .collect();
        for e in 0..nn {
            let mut row = vec![Scalar::zero(); d];
            for (a, c) in comms.iter().enumerate() {
                if !c[e].is_zero() {
                    row[a] = c[e].clone();
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let coeff_kernel = if rows.is_empty() {
        Subspace::full(d)
    } else {
        kernel(&Matrix::from_rows(rows))
    };
    let raw: Vec<Matrix> = coeff_kernel
        .basis_rows()
        .iter()
        .map(|c| der.matrix_from_coords(c))
        .collect();
    // canonicalize as flattened vectors
    let flat = Subspace::from_rows(nn, raw.iter().map(|m| m.flatten()).collect());
    let basis: Vec<Matrix> = flat
        .basis_rows()
        .into_iter()
        .map(|r| Matrix::unflatten(n, n, r))
        .collect();

    let mut theta = Vec::new();
    for delta in &basis {
        for row in t.s.basis_rows() {
            if delta.apply(&row).iter().any(|x| !x.is_zero()) {
                return Err(Error::Internal(
                    "Gamma-centralizing derivation moves s".into(),
                ));
            }
        }
        for row in t.k.basis_rows() {
            if !t.k.contains_vector(&delta.apply(&row)) {
                return Err(Error::Internal(
                    "Gamma-centralizing derivation leaves k".into(),
                ));
            }
        }
        let restricted = LieAlgebra::restrict_map(delta, &t.m).map_err(|_| {
            Error::Internal("Gamma-centralizing derivation does not stabilize m".into())
        })?;
        theta.push(restricted);
    }

    // three-way split of Der g
    let ad_s = Subspace::from_rows(
        nn,
        t.s.basis_rows().iter().map(|r| g.ad(r).flatten()).collect(),
    );
    let ad_m = Subspace::from_rows(
        nn,
        t.m.basis_rows().iter().map(|r| g.ad(r).flatten()).collect(),
    );
    let total = ad_s.sum(&ad_m)?.sum(&flat)?;
    if ad_s.dim() != t.s.dim()
        || ad_m.dim() != t.m.dim()
        || ad_s.dim() + ad_m.dim() + basis.len() != d
        || total.dim() != d
    {
        return Err(Error::Internal(
            "Der g does not split as ad s + ad m + (Der g)^Gamma".into(),
        ));
    }

    Ok(GammaCentralizer { basis, theta })
}

/// The algebra `B`: Gamma-centralizing derivations of nhat, restricted to m.
pub struct BAlgebra {
    pub m_dim: usize,
    /// Canonical basis of matrices acting on m-coordinates.
    pub basis: Vec<Matrix>,
    /// Where the basis came from.
    pub source: String,
    /// Whether mu was injective (trivial center); the isomorphism statements
    /// tied to Theta are only certified in that case.
    pub mu_injective: bool,
    flat: Subspace,
}

impl BAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.flat.contains_vector(&m.flatten())
    }

    pub fn flat(&self) -> &Subspace {
        &self.flat
    }

    pub fn coords_of(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        self.flat.coordinates_of(&m.flatten())
    }

    pub fn matrix_from_coords(&self, c: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.m_dim, self.m_dim);
        for (i, x) in c.iter().enumerate() {
            if !x.is_zero() {
                out = out.add(&self.basis[i].scale(x));
            }
        }
        out
    }
}

/// Computes `B = (Der nhat)^Gamma` restricted to m, with the checks the
/// construction promises: the restriction is injective on the centralizer,
/// B is closed under the commutator, mu(k) lies inside B, and the image of
/// Theta lies inside B.
pub fn b_algebra(
    g: &LieAlgebra,
    t: &GammaTriple,
    mu: &MuRep,
    cz: &GammaCentralizer,
) -> Result<BAlgebra> {
    let nsub = g.subalgebra(&mu.nhat)?;
    let der_n = derivation_space(&nsub.algebra)?;
    let ndim = mu.nhat.dim();
    let mdim = t.m.dim();

    let gammas_restricted: Vec<Matrix> = t
        .gamma
        .iter()
        .map(|gam| {
            LieAlgebra::restrict_map(gam, &mu.nhat)
                .map_err(|_| Error::Internal("Gamma does not stabilize nhat".into()))
        })
        .collect::<Result<_>>()?;

    let d = der_n.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for gam in &gammas_restricted {
        let comms: Vec<Vec<Scalar>> = der_n
            .basis
            .iter()
            .map(|b| b.commutator(gam).flatten())
            .collect();
        for e in 0..ndim * ndim {
            let mut row = vec![Scalar::zero(); d];
            for (a, c) in comms.iter().enumerate() {
                if !c[e].is_zero() {
                    row[a] = c[e].clone();
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let coeff_kernel = if rows.is_empty() {
        Subspace::full(d)
    } else {
        kernel(&Matrix::from_rows(rows))
    };
    let centralizer: Vec<Matrix> = coeff_kernel
        .basis_rows()
        .iter()
        .map(|c| der_n.matrix_from_coords(c))
        .collect();

    // restrict each element to m, in the ambient m-coordinates
    let mut restricted: Vec<Matrix> = Vec::new();
    for dmat in &centralizer {
        let mut out = Matrix::zeros(mdim, mdim);
        for (j, m_row) in t.m.basis_rows().iter().enumerate() {
            let v_n = mu
                .nhat
                .coordinates_of(m_row)
                .ok_or_else(|| Error::Internal("m is not inside nhat".into()))?;
            let w_ambient = mu.nhat.vector_from_coordinates(&dmat.apply(&v_n));
            let coords = t
                .m
                .coordinates_of(&w_ambient)
                .ok_or_else(|| Error::Internal("(Der nhat)^Gamma does not stabilize m".into()))?;
            for i in 0..mdim {
                if !coords[i].is_zero() {
                    out.set(i, j, coords[i].clone());
                }
            }
        }
        restricted.push(out);
    }

    // injectivity of the restriction on the centralizer
    let flat_restricted = Subspace::from_rows(
        mdim * mdim,
        restricted.iter().map(|m| m.flatten()).collect(),
    );
    if flat_restricted.dim() != centralizer.len() {
        return Err(Error::Internal(
            "restriction of (Der nhat)^Gamma to m is not injective".into(),
        ));
    }

    let basis: Vec<Matrix> = flat_restricted
        .basis_rows()
        .into_iter()
        .map(|r| Matrix::unflatten(mdim, mdim, r))
        .collect();

    for a in &basis {
        for b in &basis {
            if !flat_restricted.contains_vector(&a.commutator(b).flatten()) {
                return Err(Error::Internal(
                    "B is not closed under the commutator".into(),
                ));
            }
        }
    }
    for m in &mu.mu {
        if !flat_restricted.contains_vector(&m.flatten()) {
            return Err(Error::Internal("mu(k) is not contained in B".into()));
        }
    }
    for th in &cz.theta {
        if !flat_restricted.contains_vector(&th.flatten()) {
            return Err(Error::Internal(
                "the image of Theta is not contained in B".into(),
            ));
        }
    }

    Ok(BAlgebra {
        m_dim: mdim,
        basis,
        source: "(Der nhat)^Gamma restricted to m".to_string(),
        mu_injective: mu.ker_mu.is_zero(),
        flat: flat_restricted,
    })
}

/// One normalizer step inside B: `{b in B : [b, W] <= W}` for a
/// bracket-closed `W` given as a flat subspace of matrices on m.
pub fn normalizer_step(b: &BAlgebra, w: &Subspace) -> Subspace {
    let md = b.m_dim;
    let nb = b.basis.len();
    let q = w.reduction_matrix();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for w_row in w.basis_rows() {
        let wm = Matrix::unflatten(md, md, w_row);
        let reduced: Vec<Vec<Scalar>> = b
            .basis
            .iter()
            .map(|bm| q.apply(&bm.commutator(&wm).flatten()))
            .collect();
        for e in 0..md * md {
            let mut row = vec![Scalar::zero(); nb];
            for (a, c) in reduced.iter().enumerate() {
                if !c[e].is_zero() {
                    row[a] = c[e].clone();
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let coeffs = if rows.is_empty() {
        Subspace::full(nb)
    } else {
        kernel(&Matrix::from_rows(rows))
    };
    Subspace::from_rows(
        md * md,
        coeffs
            .basis_rows()
            .iter()
            .map(|c| b.matrix_from_coords(c).flatten())
            .collect(),
    )
}

/// Assembles the algebra on the basis s + nsub + m with the transported
/// bracket law: s-s and s-m brackets come from g, s acts trivially on nsub,
/// nsub brackets by matrix commutator and acts on m by matrix action, and
/// an m-m bracket maps its k-component through mu into nsub and keeps its
/// m-component.
pub fn assemble_phi(
    g: &LieAlgebra,
    t: &GammaTriple,
    mu: &MuRep,
    nsub: &[Matrix],
) -> Result<LieAlgebra> {
    let ns = t.s.dim();
    let nn = nsub.len();
    let nm = t.m.dim();
    let total = ns + nn + nm;
    let s_rows = t.s.basis_rows();
    let m_rows = t.m.basis_rows();

    // coordinates with respect to the given nsub basis (solved, not
    // canonicalized, so callers may pass any independent basis)
    let nsub_cols = if nn == 0 {
        Matrix::zeros(nm * nm, 0)
    } else {
        let flats: Vec<Vec<Scalar>> = nsub.iter().map(|m| m.flatten()).collect();
        Matrix::from_fn(nm * nm, nn, |e, i| flats[i][e].clone())
    };
    if nsub_cols.rank() != nn {
        return Err(Error::Assembly("nsub basis is linearly dependent".into()));
    }
    let nsub_coords = |m: &Matrix, what: &str| -> Result<Vec<Scalar>> {
        let (sol, _) = solve(&nsub_cols, &m.flatten());
        sol.ok_or_else(|| Error::Assembly(format!("{what} falls outside span(nsub)")))
    };
    // nsub must be bracket-closed
    for a in nsub {
        for b in nsub {
            nsub_coords(&a.commutator(b), "commutator of nsub elements")?;
        }
    }

    let mut names = Vec::with_capacity(total);
    names.extend((1..=ns).map(|i| format!("s{i}")));
    names.extend((1..=nn).map(|i| format!("n{i}")));
    names.extend((1..=nm).map(|i| format!("m{i}")));

    let zero_vec = |_: usize| vec![Scalar::zero(); total];
    let place = |s_part: &[Scalar], n_part: &[Scalar], m_part: &[Scalar]| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); total];
        v[..ns].clone_from_slice(s_part);
        v[ns..ns + nn].clone_from_slice(n_part);
        v[ns + nn..].clone_from_slice(m_part);
        v
    };
    let zn = vec![Scalar::zero(); nn];
    let zs = vec![Scalar::zero(); ns];
    let zm = vec![Scalar::zero(); nm];

    let mut entries: Vec<(usize, usize, Vec<Scalar>)> = Vec::new();
    // s-s: bracket in g stays in s
    for a in 0..ns {
        for b in (a + 1)..ns {
            let w = g.bracket(&s_rows[a], &s_rows[b]);
            let (cs, ck, cm) = t.component_coords(&w);
            if ck.iter().any(|x| !x.is_zero()) || cm.iter().any(|x| !x.is_zero()) {
                return Err(Error::Internal("[s, s] left s during assembly".into()));
            }
            entries.push((a, b, place(&cs, &zn, &zm)));
        }
    }
    // s-nsub: zero (already zero by default; nothing to push)
    let _ = zero_vec;
    // s-m: bracket in g stays in m
    for a in 0..ns {
        for (b, m_row) in m_rows.iter().enumerate() {
            let w = g.bracket(&s_rows[a], m_row);
            let (cs, ck, cm) = t.component_coords(&w);
            if cs.iter().any(|x| !x.is_zero()) || ck.iter().any(|x| !x.is_zero()) {
                return Err(Error::Internal("[s, m] left m during assembly".into()));
            }
            entries.push((a, ns + nn + b, place(&zs, &zn, &cm)));
        }
    }
    // nsub-nsub: matrix commutator
    for a in 0..nn {
        for b in (a + 1)..nn {
            let c = nsub[a].commutator(&nsub[b]);
            let coords = nsub_coords(&c, "commutator of nsub elements")?;
            entries.push((ns + a, ns + b, place(&zs, &coords, &zm)));
        }
    }
    // nsub-m: matrix action on m-coordinates
    for a in 0..nn {
        for b in 0..nm {
            let mut unit = vec![Scalar::zero(); nm];
            unit[b] = crate::scalar::one();
            let image = nsub[a].apply(&unit);
            entries.push((ns + a, ns + nn + b, place(&zs, &zn, &image)));
        }
    }
    // m-m: k-component through mu, m-component kept
    for a in 0..nm {
        for b in (a + 1)..nm {
            let w = g.bracket(&m_rows[a], &m_rows[b]);
            let (cs, ck, cm) = t.component_coords(&w);
            if cs.iter().any(|x| !x.is_zero()) {
                return Err(Error::Internal("[m, m] has an s-component".into()));
            }
            let mapped = mu_of(&mu.mu, nm, &ck);
            let coords = nsub_coords(&mapped, "mu of the k-projection of an m-m bracket")?;
            entries.push((ns + nn + a, ns + nn + b, place(&zs, &coords, &cm)));
        }
    }

    LieAlgebra::new(names, entries)
}

/// Completeness report: trivial center and only inner derivations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completeness {
    pub complete: bool,
    pub dim: usize,
    pub center_dim: usize,
    pub der_dim: usize,
}

impl Completeness {
    /// Names the failing condition, for reports.
    pub fn witness(&self) -> String {
        if self.complete {
            "complete: trivial center and all derivations inner".to_string()
        } else if self.center_dim != 0 {
            format!("not complete: center has dimension {}", self.center_dim)
        } else {
            format!(
                "not complete: dim Der = {} exceeds dim g = {}",
                self.der_dim, self.dim
            )
        }
    }
}

/// `Z(g) = 0` and `dim Der g = dim g`.
pub fn is_complete(g: &LieAlgebra) -> Result<Completeness> {
    let center_dim = g.center().dim();
    let der_dim = derivation_space(g)?.dim();
    Ok(Completeness {
        complete: center_dim == 0 && der_dim == g.dim(),
        dim: g.dim(),
        center_dim,
        der_dim,
    })
}

/// Completeness cross-checked against the normalizer criterion
/// `N_B(mu(k)) = mu(k)` when mu is injective. Disagreement is a bug signal.
pub fn is_complete_with_triple(
    g: &LieAlgebra,
    t: &GammaTriple,
    mu: &MuRep,
    b: &BAlgebra,
) -> Result<Completeness> {
    let result = is_complete(g)?;
    if b.mu_injective {
        let mdim = t.m.dim();
        let mu_flat = Subspace::from_rows(mdim * mdim, mu.mu.iter().map(|m| m.flatten()).collect());
        let normalizer = normalizer_step(b, &mu_flat);
        let criterion = normalizer == mu_flat;
        if criterion != result.complete {
            return Err(Error::Internal(
                "normalizer criterion disagrees with the derivation count".into(),
            ));
        }
    }
    Ok(result)
}

/// The complete algebra s + B + m, with the degenerate empty-m case flagged.
pub struct HullResult {
    pub algebra: LieAlgebra,
    /// m was zero, so the hull degenerates to the Levi part alone and the
    /// k-part of the input is discarded.
    pub empty_m: bool,
    pub completeness: Completeness,
}

/// Assembles the hull s + B + m and verifies it is complete.
pub fn complete_hull(g: &LieAlgebra, t: &GammaTriple) -> Result<HullResult> {
    let mu = crate::gamma::mu_rep(g, t)?;
    let der = derivation_space(g)?;
    let cz = der_gamma_centralizer(g, &der, t)?;
    let b = b_algebra(g, t, &mu, &cz)?;
    let algebra = assemble_phi(g, t, &mu, &b.basis)?;
    let completeness = is_complete(&algebra)?;
    if !completeness.complete {
        return Err(Error::Internal(format!(
            "hull s + B + m failed the completeness check: {}",
            completeness.witness()
        )));
    }
    Ok(HullResult {
        algebra,
        empty_m: t.m.is_zero(),
        completeness,
    })
}

/// The reassembly of Der g on the basis s + N_B(mu(k)) + m, with the
/// coordinate identification between the dense derivation solve and the
/// assembled algebra, verified to transport the structure constants exactly.
pub struct DerReconstruction {
    pub der: DerivationSpace,
    pub centralizer: GammaCentralizer,
    pub b: BAlgebra,
    /// Basis of N_B(mu(k)).
    pub nsub: Vec<Matrix>,
    pub assembled: LieAlgebra,
    /// Columns map derivation-basis coordinates to assembled coordinates.
    pub identification: Matrix,
}

/// Requires a trivial center (mu injective). Decomposes every derivation as
/// `ad s-part + ad m-part + delta` along the three-way split, sends `delta`
/// through Theta into N_B(mu(k)), and verifies the resulting linear map is
/// an isomorphism of structure constants onto the assembled algebra.
pub fn reconstruct_der(g: &LieAlgebra, t: &GammaTriple) -> Result<DerReconstruction> {
    let center_dim = g.center().dim();
    if center_dim != 0 {
        return Err(Error::NonzeroCenter { dim: center_dim });
    }
    let mu = crate::gamma::mu_rep(g, t)?;
    let der = derivation_space(g)?;
    let cz = der_gamma_centralizer(g, &der, t)?;
    let b = b_algebra(g, t, &mu, &cz)?;

    let mdim = t.m.dim();
    let mu_flat = Subspace::from_rows(mdim * mdim, mu.mu.iter().map(|m| m.flatten()).collect());
    let nsub_flat = normalizer_step(&b, &mu_flat);
    let nsub: Vec<Matrix> = nsub_flat
        .basis_rows()
        .into_iter()
        .map(|r| Matrix::unflatten(mdim, mdim, r))
        .collect();

    let assembled = assemble_phi(g, t, &mu, &nsub)?;

    // decompose each derivation along ad s | ad m | centralizer
    let ns = t.s.dim();
    let nm = t.m.dim();
    let ncz = cz.basis.len();
    let d = der.dim();
    if assembled.dim() != d {
        return Err(Error::Internal(
            "assembled algebra dimension differs from dim Der g".into(),
        ));
    }
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for row in t.s.basis_rows() {
        cols.push(g.ad(&row).flatten());
    }
    for row in t.m.basis_rows() {
        cols.push(g.ad(&row).flatten());
    }
    for dm in &cz.basis {
        cols.push(dm.flatten());
    }
    let split_cols = Matrix::from_rows(cols).transpose();

    let nsub_cols = if nsub.is_empty() {
        Matrix::zeros(mdim * mdim, 0)
    } else {
        let flats: Vec<Vec<Scalar>> = nsub.iter().map(|m| m.flatten()).collect();
        Matrix::from_fn(mdim * mdim, nsub.len(), |e, i| flats[i][e].clone())
    };

    let mut ident = Matrix::zeros(d, d);
    for a in 0..d {
        let (sol, _) = solve(&split_cols, &der.basis[a].flatten());
        let x = sol.ok_or_else(|| {
            Error::Internal("derivation does not decompose along the three-way split".into())
        })?;
        // Theta of the centralizer part
        let mut theta_part = Matrix::zeros(mdim, mdim);
        for l in 0..ncz {
            if !x[ns + nm + l].is_zero() {
                theta_part = theta_part.add(&cz.theta[l].scale(&x[ns + nm + l]));
            }
        }
        let (tcoords, _) = solve(&nsub_cols, &theta_part.flatten());
        let tcoords =
            tcoords.ok_or_else(|| Error::Internal("Theta image escapes N_B(mu(k))".into()))?;
        for i in 0..ns {
            ident.set(i, a, x[i].clone());
        }
        for (i, c) in tcoords.iter().enumerate() {
            ident.set(ns + i, a, c.clone());
        }
        for i in 0..nm {
            ident.set(ns + nsub.len() + i, a, x[ns + i].clone());
        }
    }
    if ident.inverse().is_none() {
        return Err(Error::Internal(
            "derivation identification is singular".into(),
        ));
    }
    // the identification must transport the structure constants exactly
    for a in 0..d {
        for bb in (a + 1)..d {
            let lhs = ident.apply(&der.as_algebra.bracket_basis(a, bb));
            let rhs = assembled.bracket(&ident.col_vec(a), &ident.col_vec(bb));
            if lhs != rhs {
                return Err(Error::Internal(
                    "identification does not transport the derivation constants".into(),
                ));
            }
        }
    }

    Ok(DerReconstruction {
        der,
        centralizer: cz,
        b,
        nsub,
        assembled,
        identification: ident,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::gamma::{gamma_triple, mu_rep};

    #[test]
    fn derivation_dims() {
        assert_eq!(derivation_space(&catalog("sl2").unwrap()).unwrap().dim(), 3);
        assert_eq!(
            derivation_space(&catalog("aff1").unwrap()).unwrap().dim(),
            2
        );
        for n in 0..=4 {
            let g = catalog(&format!("abelian({n})")).unwrap();
            assert_eq!(derivation_space(&g).unwrap().dim(), n * n);
        }
    }

    #[test]
    fn derivations_of_simple_and_aff1_are_inner() {
        for name in ["sl2", "aff1"] {
            let g = catalog(name).unwrap();
            let der = derivation_space(&g).unwrap();
            assert!(der.is_inner_only(), "{name}");
            assert_eq!(der.ad_image().dim(), g.dim());
        }
    }

    #[test]
    fn centralizer_examples() {
        let sl2 = catalog("sl2").unwrap();
        let t = gamma_triple(&sl2).unwrap();
        let der = derivation_space(&sl2).unwrap();
        let cz = der_gamma_centralizer(&sl2, &der, &t).unwrap();
        assert!(cz.basis.is_empty());

        let ab = catalog("abelian(2)").unwrap();
        let t = gamma_triple(&ab).unwrap();
        let der = derivation_space(&ab).unwrap();
        let cz = der_gamma_centralizer(&ab, &der, &t).unwrap();
        assert_eq!(cz.basis.len(), 4);

        let p5 = catalog("paper5").unwrap();
        let t = gamma_triple(&p5).unwrap();
        let der = derivation_space(&p5).unwrap();
        let cz = der_gamma_centralizer(&p5, &der, &t).unwrap();
        assert_eq!(der.dim(), t.s.dim() + t.m.dim() + cz.basis.len());
    }

    #[test]
    fn b_algebra_examples() {
        let d12 = catalog("diag12").unwrap();
        let t = gamma_triple(&d12).unwrap();
        let mu = mu_rep(&d12, &t).unwrap();
        let der = derivation_space(&d12).unwrap();
        let cz = der_gamma_centralizer(&d12, &der, &t).unwrap();
        let b = b_algebra(&d12, &t, &mu, &cz).unwrap();
        // centralizer of diag(1,2) among 2x2 matrices: the diagonals
        assert_eq!(b.dim(), 2);
        assert!(b.mu_injective);

        let sl2 = catalog("sl2").unwrap();
        let t = gamma_triple(&sl2).unwrap();
        let mu = mu_rep(&sl2, &t).unwrap();
        let der = derivation_space(&sl2).unwrap();
        let cz = der_gamma_centralizer(&sl2, &der, &t).unwrap();
        let b = b_algebra(&sl2, &t, &mu, &cz).unwrap();
        assert_eq!(b.dim(), 0);

        let p5 = catalog("paper5").unwrap();
        let t = gamma_triple(&p5).unwrap();
        let mu = mu_rep(&p5, &t).unwrap();
        let der = derivation_space(&p5).unwrap();
        let cz = der_gamma_centralizer(&p5, &der, &t).unwrap();
        let b = b_algebra(&p5, &t, &mu, &cz).unwrap();
        assert_eq!(b.dim(), 2);
        assert!(!b.mu_injective);
        // contains mu(x1) = diag(1, -1)
        assert!(b.contains(&Matrix::from_int_rows(&[&[1, 0], &[0, -1]])));
    }

    #[test]
    fn completeness_examples() {
        assert!(is_complete(&catalog("sl2").unwrap()).unwrap().complete);
        assert!(is_complete(&catalog("aff1").unwrap()).unwrap().complete);
        let h = is_complete(&catalog("heis3").unwrap()).unwrap();
        assert!(!h.complete && h.center_dim > 0);
    }

    #[test]
    fn reconstruction_on_trivial_center_catalog() {
        for name in ["sl2", "aff1", "diag12"] {
            let g = catalog(name).unwrap();
            let t = gamma_triple(&g).unwrap();
            let rec = reconstruct_der(&g, &t).unwrap();
            assert_eq!(rec.assembled.dim(), rec.der.dim(), "{name}");
        }
        // nonzero center is rejected
        let p5 = catalog("paper5").unwrap();
        let t = gamma_triple(&p5).unwrap();
        assert!(matches!(
            reconstruct_der(&p5, &t),
            Err(Error::NonzeroCenter { .. })
        ));
    }

    #[test]
    fn hull_examples() {
        let sl2 = catalog("sl2").unwrap();
        let t = gamma_triple(&sl2).unwrap();
        let hull = complete_hull(&sl2, &t).unwrap();
        assert_eq!(hull.algebra.dim(), 3);
        assert!(hull.algebra.same_constants(&sl2));

        let d12 = catalog("diag12").unwrap();
        let t = gamma_triple(&d12).unwrap();
        let hull = complete_hull(&d12, &t).unwrap();
        assert_eq!(hull.algebra.dim(), 4);
        assert!(!hull.empty_m);

        // paper5: hull is 4-dimensional and complete
        let p5 = catalog("paper5").unwrap();
        let t = gamma_triple(&p5).unwrap();
        let hull = complete_hull(&p5, &t).unwrap();
        assert_eq!(hull.algebra.dim(), 4);

        // empty-m degenerate case
        let ab = catalog("abelian(2)").unwrap();
        let t = gamma_triple(&ab).unwrap();
        let hull = complete_hull(&ab, &t).unwrap();
        assert_eq!(hull.algebra.dim(), 0);
        assert!(hull.empty_m);
    }

    #[test]
    fn assemble_with_mu_k_reproduces_trivial_center_algebras() {
        for name in ["sl2", "aff1", "diag12"] {
            let g = catalog(name).unwrap();
            let t = gamma_triple(&g).unwrap();
            let mu = mu_rep(&g, &t).unwrap();
            // mu(k) basis: mu is injective here, so the matrices are independent
            let asm = assemble_phi(&g, &t, &mu, &mu.mu).unwrap();
            assert_eq!(asm.dim(), g.dim(), "{name}");
            // the identification s + k + m -> s + mu(k) + m transports brackets
            let mut cols: Vec<Vec<Scalar>> = Vec::new();
            cols.extend(t.s.basis_rows());
            cols.extend(t.k.basis_rows());
            cols.extend(t.m.basis_rows());
            let p = Matrix::from_rows(cols).transpose();
            let pinv = p.inverse().unwrap();
            for i in 0..g.dim() {
                for j in (i + 1)..g.dim() {
                    let lhs = pinv.apply(&g.bracket_basis(i, j));
                    let rhs = asm.bracket(&pinv.col_vec(i), &pinv.col_vec(j));
                    assert_eq!(lhs, rhs, "{name} bracket ({i},{j})");
                }
            }
        }
    }
}
