//! Derivation towers: direct iteration, the normalizer-chain shortcut for
//! algebras with trivial center, the dimension bound on the limit, and the
//! three-case classification of tower behavior.
//!
//! Direct iteration is always available as the oracle; the normalizer chain
//! is the optimized route when the center vanishes. Both are exposed and the
//! trivial-center path cross-checks its per-step dimensions against direct
//! iterates.

use num_traits::Zero;

use crate::algebra::LieAlgebra;
use crate::derivations::{
    assemble_phi, b_algebra, der_gamma_centralizer, derivation_space, is_complete, normalizer_step,
    reconstruct_der, BAlgebra, Completeness,
};
use crate::error::{Error, Result};
use crate::gamma::{gamma_triple, mu_rep, GammaTriple};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::{kernel, Subspace};

/// Iterated normalizers of a bracket-closed start inside B, up to the first
/// self-normalizing member. Members are flat subspaces of matrices on m.
pub struct NormalizerChain {
    pub members: Vec<Subspace>,
    pub stable_index: usize,
}

impl NormalizerChain {
    pub fn stable(&self) -> &Subspace {
        self.members.last().unwrap()
    }

    pub fn stable_matrices(&self, m_dim: usize) -> Vec<Matrix> {
        self.stable()
            .basis_rows()
            .into_iter()
            .map(|r| Matrix::unflatten(m_dim, m_dim, r))
            .collect()
    }
}

/// Iterates `W -> {b in B : [b, W] <= W}` until stable. The start must lie
/// in B and be bracket-closed; each member then normalizes in turn, the
/// chain is strictly increasing until its stable index, and the final member
/// equals its own normalizer in B.
pub fn normalizer_tower(b: &BAlgebra, start: &[Matrix]) -> Result<NormalizerChain> {
    let md = b.m_dim;
    let flat_dim = md * md;
    for s in start {
        if !b.contains(s) {
            return Err(Error::Internal("normalizer start is not inside B".into()));
        }
    }
    let w0 = Subspace::from_rows(flat_dim, start.iter().map(|m| m.flatten()).collect());
    let closed = |w: &Subspace| -> bool {
        let mats: Vec<Matrix> = w
            .basis_rows()
            .into_iter()
            .map(|r| Matrix::unflatten(md, md, r))
            .collect();
        mats.iter().all(|a| {
            mats.iter()
                .all(|c| w.contains_vector(&a.commutator(c).flatten()))
        })
    };
    if !closed(&w0) {
        return Err(Error::Internal(
            "normalizer start is not bracket-closed".into(),
        ));
    }
    let mut members = vec![w0];
    loop {
        let current = members.last().unwrap();
        let next = normalizer_step(b, current);
        if &next == current {
            break;
        }
        if !next.contains(current)? || !closed(&next) {
            return Err(Error::Internal(
                "normalizer chain failed to grow through bracket-closed members".into(),
            ));
        }
        members.push(next);
        if members.len() > b.dim() + 1 {
            return Err(Error::Internal(
                "normalizer chain exceeded the dimension bound of B".into(),
            ));
        }
    }
    let stable_index = members.len() - 1;
    Ok(NormalizerChain {
        members,
        stable_index,
    })
}

/// Everything the trivial-center shortcut produces: the limit algebra, the
/// chain that built it, and the ingredients for reuse.
pub struct GhatResult {
    pub ghat: LieAlgebra,
    pub chain: NormalizerChain,
    pub triple: GammaTriple,
    pub mu: crate::gamma::MuRep,
    pub b: BAlgebra,
    /// dim (s + N^p + m) for p = 0..=q.
    pub step_dims: Vec<usize>,
    pub completeness: Completeness,
}

fn ghat_inner(g: &LieAlgebra) -> Result<GhatResult> {
    let center_dim = g.center().dim();
    if center_dim != 0 {
        return Err(Error::NonzeroCenter { dim: center_dim });
    }
    let t = gamma_triple(g)?;
    let mu = mu_rep(g, &t)?;
    let der = derivation_space(g)?;
    let cz = der_gamma_centralizer(g, &der, &t)?;
    let b = b_algebra(g, &t, &mu, &cz)?;
    let chain = normalizer_tower(&b, &mu.mu)?;
    let ghat = assemble_phi(g, &t, &mu, &chain.stable_matrices(t.m.dim()))?;
    let completeness = is_complete(&ghat)?;
    if !completeness.complete {
        return Err(Error::Internal(
            "normalizer-chain limit failed the completeness check".into(),
        ));
    }
    let base = t.s.dim() + t.m.dim();
    let step_dims: Vec<usize> = chain.members.iter().map(|w| base + w.dim()).collect();
    Ok(GhatResult {
        ghat,
        chain,
        triple: t,
        mu,
        b,
        step_dims,
        completeness,
    })
}

/// The tower limit for an algebra with trivial center, by the normalizer
/// chain: ghat = s + N-hat_B(mu(k)) + m. Verifies the limit is complete and
/// that every intermediate s + N^p + m has the dimension of the p-th direct
/// derivation iterate.
pub fn ghat_trivial_center(g: &LieAlgebra) -> Result<GhatResult> {
    let result = ghat_inner(g)?;
    let mut current = g.clone();
    for (p, expected) in result.step_dims.iter().enumerate() {
        if p > 0 {
            current = derivation_space(&current)?.as_algebra;
        }
        if current.dim() != *expected {
            return Err(Error::Internal(format!(
                "normalizer chain dimension {expected} at step {p} differs from the direct iterate {}",
                current.dim()
            )));
        }
    }
    Ok(result)
}

/// The dimension bound on the tower limit:
/// dim ghat <= dim Der(C_infty(g)) + dim Z(C_infty(g)).
pub struct SchenkmanBound {
    pub bound: usize,
    pub ghat_dim: usize,
    /// dim (s + B + m), also required to stay under the bound.
    pub sbm_dim: usize,
    pub holds: bool,
}

pub fn schenkman_bound(g: &LieAlgebra) -> Result<SchenkmanBound> {
    let center_dim = g.center().dim();
    if center_dim != 0 {
        return Err(Error::NonzeroCenter { dim: center_dim });
    }
    let cinf = g.c_infty();
    let sub = g
        .subalgebra(&cinf)
        .map_err(|_| Error::Internal("C_infty is not a subalgebra".into()))?;
    let bound = derivation_space(&sub.algebra)?.dim() + sub.algebra.center().dim();
    let res = ghat_inner(g)?;
    let ghat_dim = res.ghat.dim();
    let sbm_dim = res.triple.s.dim() + res.b.dim() + res.triple.m.dim();
    Ok(SchenkmanBound {
        bound,
        ghat_dim,
        sbm_dim,
        holds: ghat_dim <= bound && sbm_dim <= bound,
    })
}

/// Per-step tower diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerStep {
    pub dim: usize,
    pub center_dim: usize,
    pub radical_dim: usize,
    pub nilradical_dim: usize,
    pub derived_codim: usize,
    pub complete: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TowerCase {
    /// Trivial center from some step on; terminates at a complete algebra.
    Case1Complete,
    /// Persistent center; terminates at K x (perfect complete derived ideal).
    Case2KTimesPerfect,
    /// Dimensions kept strictly increasing at the step cap.
    Case3DivergentSuspected,
    Undetermined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FastPathMode {
    Auto,
    On,
    Off,
}

pub struct TowerReport {
    pub steps: Vec<TowerStep>,
    pub terminal: Option<LieAlgebra>,
    pub case: TowerCase,
    /// Normalizer-chain stabilization index, when the fast path ran.
    pub q: Option<usize>,
    pub schenkman: Option<SchenkmanBound>,
    /// First step at which a dimension decrease was not explained by a
    /// perfect predecessor with a centerless derivation algebra.
    pub trichotomy_violation: Option<usize>,
}

fn step_stats(g: &LieAlgebra) -> (usize, usize, usize, usize, usize) {
    let dim = g.dim();
    let derived = g.derived_subalgebra().dim();
    (
        dim,
        g.center().dim(),
        g.radical().dim(),
        g.nilradical().dim(),
        dim - derived,
    )
}

/// Structural detection of the K x (perfect complete) terminal shape.
fn case2_shape(g: &LieAlgebra) -> Result<bool> {
    let z = g.center();
    if z.dim() != 1 {
        return Ok(false);
    }
    let derived = g.derived_subalgebra();
    if !z.intersect(&derived)?.is_zero() || z.dim() + derived.dim() != g.dim() {
        return Ok(false);
    }
    let dsub = match g.subalgebra(&derived) {
        Ok(s) => s,
        Err(_) => return Ok(false),
    };
    if !dsub.algebra.derived_subalgebra().is_full() {
        return Ok(false);
    }
    Ok(is_complete(&dsub.algebra)?.complete)
}

/// Direct tower iteration with early classification.
///
/// Iterates g, Der g, Der(Der g), ... recording per-step diagnostics.
/// Stops at the first complete iterate (case 1) or at the first iterate of
/// stable dimension whose shape is K x (perfect complete) (case 2; the
/// lookahead dimension that witnessed stability is recorded too). At the
/// step cap, three consecutive strict dimension increases classify the run
/// as suspected divergence, anything else as undetermined. With a trivial
/// center the normalizer chain also runs and its per-step dimensions are
/// checked against the direct iterates.
pub fn tower_iterate(g: &LieAlgebra, max_steps: usize) -> Result<TowerReport> {
    tower_iterate_with(g, max_steps, FastPathMode::Auto)
}

pub fn tower_iterate_with(
    g: &LieAlgebra,
    max_steps: usize,
    mode: FastPathMode,
) -> Result<TowerReport> {
    assert!(max_steps >= 1, "max_steps must be at least 1");
    let mut algs: Vec<LieAlgebra> = vec![g.clone()];
    let mut complete_flags: Vec<Option<bool>> = vec![None];
    let mut case = TowerCase::Undetermined;
    let mut terminal: Option<LieAlgebra> = None;
    let mut trichotomy_violation = None;

    let mut n = 0;
    while n < max_steps {
        let der = derivation_space(&algs[n])?;
        let next = der.as_algebra;
        let current_complete = algs[n].center().is_zero() && next.dim() == algs[n].dim();
        complete_flags[n] = Some(current_complete);
        if current_complete {
            case = TowerCase::Case1Complete;
            terminal = Some(algs[n].clone());
            break;
        }
        if next.dim() < algs[n].dim() {
            // a drop is only licensed for a perfect algebra whose derivation
            // algebra has trivial center
            let licensed = algs[n].derived_subalgebra().is_full() && next.center().is_zero();
            if !licensed && trichotomy_violation.is_none() {
                trichotomy_violation = Some(n + 1);
            }
        }
        let dim_stable = next.dim() == algs[n].dim();
        algs.push(next);
        complete_flags.push(None);
        if dim_stable && case2_shape(&algs[n])? {
            case = TowerCase::Case2KTimesPerfect;
            terminal = Some(algs[n].clone());
            complete_flags[n] = Some(false);
            break;
        }
        n += 1;
    }

    if terminal.is_none() {
        // step cap reached
        let dims: Vec<usize> = algs.iter().map(|a| a.dim()).collect();
        let len = dims.len();
        let strictly_rising = len >= 4 && (len - 3..len).all(|i| dims[i] > dims[i - 1]);
        case = if strictly_rising {
            TowerCase::Case3DivergentSuspected
        } else {
            TowerCase::Undetermined
        };
    }

    // finalize completeness flags
    for i in 0..algs.len() {
        if complete_flags[i].is_some() {
            continue;
        }
        let flag = if !algs[i].center().is_zero() {
            false
        } else if i + 1 < algs.len() {
            algs[i + 1].dim() == algs[i].dim()
        } else {
            is_complete(&algs[i])?.complete
        };
        complete_flags[i] = Some(flag);
    }

    let steps: Vec<TowerStep> = algs
        .iter()
        .zip(&complete_flags)
        .map(|(a, f)| {
            let (dim, center_dim, radical_dim, nilradical_dim, derived_codim) = step_stats(a);
            TowerStep {
                dim,
                center_dim,
                radical_dim,
                nilradical_dim,
                derived_codim,
                complete: f.unwrap(),
            }
        })
        .collect();

    let mut q = None;
    let mut schenkman = None;
    let run_fast = match mode {
        FastPathMode::On => {
            let center_dim = g.center().dim();
            if center_dim != 0 {
                return Err(Error::NonzeroCenter { dim: center_dim });
            }
            true
        }
        FastPathMode::Auto => g.center().is_zero(),
        FastPathMode::Off => false,
    };
    if run_fast {
        let fast = ghat_inner(g)?;
        for (p, expected) in fast.step_dims.iter().enumerate() {
            if p < algs.len() && algs[p].dim() != *expected {
                return Err(Error::Internal(format!(
                    "fast-path dimension {expected} at step {p} disagrees with the direct iterate {}",
                    algs[p].dim()
                )));
            }
        }
        if let Some(term) = &terminal {
            if term.dim() != fast.ghat.dim() {
                return Err(Error::Internal(
                    "fast-path terminal dimension disagrees with the direct tower".into(),
                ));
            }
        }
        let cinf = g.c_infty();
        let sub = g.subalgebra(&cinf)?;
        let bound = derivation_space(&sub.algebra)?.dim() + sub.algebra.center().dim();
        let sbm_dim = fast.triple.s.dim() + fast.b.dim() + fast.triple.m.dim();
        q = Some(fast.chain.stable_index);
        schenkman = Some(SchenkmanBound {
            bound,
            ghat_dim: fast.ghat.dim(),
            sbm_dim,
            holds: fast.ghat.dim() <= bound && sbm_dim <= bound,
        });
    }

    Ok(TowerReport {
        steps,
        terminal,
        case,
        q,
        schenkman,
        trichotomy_violation,
    })
}

/// Dimension ledger for the derivation algebra of a direct product:
/// derivations supported on each factor plus the two spaces of maps from an
/// abelianized factor into the center part of the other factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerSplitLedger {
    pub der1: usize,
    pub der2: usize,
    pub i12: usize,
    pub i21: usize,
    pub total: usize,
}

/// Computes the four summands inside Der(g1 x g2) by their defining linear
/// conditions and checks they split the dense solve exactly.
pub fn product_der_split(g1: &LieAlgebra, g2: &LieAlgebra) -> Result<DerSplitLedger> {
    let p = g1.direct_product(g2);
    let n = p.dim();
    let n1 = g1.dim();
    let der = derivation_space(&p)?;
    let d = der.dim();

    let block1: Vec<usize> = (0..n1).collect();
    let block2: Vec<usize> = (n1..n).collect();
    let embed = |coords: &[Scalar], offset: usize| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        for (i, c) in coords.iter().enumerate() {
            v[offset + i] = c.clone();
        }
        v
    };
    let block_space = |cols: &[usize]| -> Subspace {
        Subspace::from_rows(
            n,
            cols.iter()
                .map(|&c| {
                    let mut v = vec![Scalar::zero(); n];
                    v[c] = crate::scalar::one();
                    v
                })
                .collect(),
        )
    };
    let b1_space = block_space(&block1);
    let b2_space = block_space(&block2);
    let center = p.center();
    let z_in_b1 = center.intersect(&b1_space)?;
    let z_in_b2 = center.intersect(&b2_space)?;
    let derived1: Vec<Vec<Scalar>> = g1
        .derived_subalgebra()
        .basis_rows()
        .iter()
        .map(|r| embed(r, 0))
        .collect();
    let derived2: Vec<Vec<Scalar>> = g2
        .derived_subalgebra()
        .basis_rows()
        .iter()
        .map(|r| embed(r, n1))
        .collect();

    // a condition is a linear functional on flattened matrices; rows over
    // derivation coordinates come from pairing with the basis flats
    let flats: Vec<Vec<Scalar>> = der.basis.iter().map(|m| m.flatten()).collect();
    let subspace_from_conditions = |conds: &[Vec<Scalar>]| -> Subspace {
        let mut rows = Vec::new();
        for q in conds {
            let mut row = vec![Scalar::zero(); d];
            for (a, f) in flats.iter().enumerate() {
                let mut acc = Scalar::zero();
                for (e, qe) in q.iter().enumerate() {
                    if !qe.is_zero() && !f[e].is_zero() {
                        acc += qe * &f[e];
                    }
                }
                row[a] = acc;
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
        if rows.is_empty() {
            Subspace::full(d)
        } else {
            kernel(&Matrix::from_rows(rows))
        }
    };
    let entry_functional = |r: usize, c: usize| -> Vec<Scalar> {
        let mut q = vec![Scalar::zero(); n * n];
        q[r * n + c] = crate::scalar::one();
        q
    };
    // kill all columns in `cols`
    let kill_columns = |conds: &mut Vec<Vec<Scalar>>, cols: &[usize]| {
        for &c in cols {
            for r in 0..n {
                conds.push(entry_functional(r, c));
            }
        }
    };
    // require column j to land inside `target`
    let column_into = |conds: &mut Vec<Vec<Scalar>>, j: usize, target: &Subspace| {
        let qr = target.reduction_matrix();
        for e in 0..n {
            let mut q = vec![Scalar::zero(); n * n];
            let mut nonzero = false;
            for r in 0..n {
                let v = qr.get(e, r);
                if !v.is_zero() {
                    q[r * n + j] = v.clone();
                    nonzero = true;
                }
            }
            if nonzero {
                conds.push(q);
            }
        }
    };
    // require M v = 0 for a fixed vector v
    let kill_vector = |conds: &mut Vec<Vec<Scalar>>, v: &[Scalar]| {
        for r in 0..n {
            let mut q = vec![Scalar::zero(); n * n];
            let mut nonzero = false;
            for (c, vc) in v.iter().enumerate() {
                if !vc.is_zero() {
                    q[r * n + c] = vc.clone();
                    nonzero = true;
                }
            }
            if nonzero {
                conds.push(q);
            }
        }
    };

    // derivations supported on one factor
    let mut conds = Vec::new();
    kill_columns(&mut conds, &block2);
    for &j in &block1 {
        column_into(&mut conds, j, &b1_space);
    }
    let d1 = subspace_from_conditions(&conds);

    let mut conds = Vec::new();
    kill_columns(&mut conds, &block1);
    for &j in &block2 {
        column_into(&mut conds, j, &b2_space);
    }
    let d2 = subspace_from_conditions(&conds);

    // maps from factor 1 into the factor-2 part of the center, vanishing on
    // the derived subalgebra of factor 1 (and on factor 2)
    let mut conds = Vec::new();
    kill_columns(&mut conds, &block2);
    for v in &derived1 {
        kill_vector(&mut conds, v);
    }
    for &j in &block1 {
        column_into(&mut conds, j, &z_in_b2);
    }
    let i12 = subspace_from_conditions(&conds);

    let mut conds = Vec::new();
    kill_columns(&mut conds, &block1);
    for v in &derived2 {
        kill_vector(&mut conds, v);
    }
    for &j in &block2 {
        column_into(&mut conds, j, &z_in_b1);
    }
    let i21 = subspace_from_conditions(&conds);

    let ledger = DerSplitLedger {
        der1: d1.dim(),
        der2: d2.dim(),
        i12: i12.dim(),
        i21: i21.dim(),
        total: d,
    };
    let sum = d1.sum(&d2)?.sum(&i12)?.sum(&i21)?;
    if ledger.der1 + ledger.der2 + ledger.i12 + ledger.i21 != d || sum.dim() != d {
        return Err(Error::Internal(format!(
            "product derivation ledger {ledger:?} does not split the dense solve"
        )));
    }
    // the factor summands must match the factors' own derivation algebras
    if ledger.der1 != derivation_space(g1)?.dim() || ledger.der2 != derivation_space(g2)?.dim() {
        return Err(Error::Internal(
            "factor summand differs from the factor's derivation algebra".into(),
        ));
    }
    Ok(ledger)
}

/// Step-by-step identification between the direct tower and the normalizer
/// chain, for a trivial-center algebra: maintains an explicit isomorphism
/// from each direct iterate onto the assembled s + N^p + m and verifies the
/// structure constants transport at every step, ending at the chain limit.
pub struct TowerIdentification {
    pub q: usize,
    /// Maps coordinates of the direct terminal onto the limit algebra.
    pub terminal_map: Matrix,
}

pub fn tower_identification(g: &LieAlgebra) -> Result<TowerIdentification> {
    let fast = ghat_inner(g)?;
    let t0 = &fast.triple;
    let q = fast.chain.stable_index;
    let ns = t0.s.dim();
    let nm = t0.m.dim();
    let mdim = nm;

    // gamma restricted to the s and m blocks, reused at every level
    let gamma_blocks: Vec<(Matrix, Matrix)> = t0
        .gamma
        .iter()
        .map(|gam| {
            Ok((
                LieAlgebra::restrict_map(gam, &t0.s)?,
                LieAlgebra::restrict_map(gam, &t0.m)?,
            ))
        })
        .collect::<Result<_>>()?;

    let assembled_at = |p: usize| -> Result<LieAlgebra> {
        let basis: Vec<Matrix> = fast.chain.members[p]
            .basis_rows()
            .into_iter()
            .map(|r| Matrix::unflatten(mdim, mdim, r))
            .collect();
        assemble_phi(g, t0, &fast.mu, &basis)
    };

    // phi_0: g -> A_0 = s + mu(k) + m
    let a0 = assembled_at(0)?;
    let n0 = fast.chain.members[0].dim();
    let mut phi = Matrix::zeros(g.dim(), g.dim());
    for j in 0..g.dim() {
        let (cs, ck, cm) = t0.component_coords(&g.unit(j));
        let mu_mat = crate::gamma::mu_of(&fast.mu.mu, mdim, &ck);
        let ncoords = fast.chain.members[0]
            .coordinates_of(&mu_mat.flatten())
            .ok_or_else(|| Error::Internal("mu(k) escaped the chain base".into()))?;
        for i in 0..ns {
            phi.set(i, j, cs[i].clone());
        }
        for i in 0..n0 {
            phi.set(ns + i, j, ncoords[i].clone());
        }
        for i in 0..nm {
            phi.set(ns + n0 + i, j, cm[i].clone());
        }
    }
    verify_transport(g, &a0, &phi)?;

    let mut direct = g.clone();
    let mut current_assembled = a0;
    for p in 0..q {
        let np = fast.chain.members[p].dim();
        // canonical triple of the assembled algebra at level p
        let dim_p = ns + np + nm;
        let coord_block = |from: usize, len: usize| -> Subspace {
            Subspace::from_rows(
                dim_p,
                (from..from + len)
                    .map(|i| {
                        let mut v = vec![Scalar::zero(); dim_p];
                        v[i] = crate::scalar::one();
                        v
                    })
                    .collect(),
            )
        };
        let s_p = coord_block(0, ns);
        let k_p = coord_block(ns, np);
        let m_p = coord_block(ns + np, nm);
        let gamma_p: Vec<Matrix> = gamma_blocks
            .iter()
            .map(|(gs, gm)| Matrix::block_diag(&[gs, &Matrix::zeros(np, np), gm]))
            .collect();
        let t_p =
            GammaTriple::from_parts(&current_assembled, s_p, k_p.clone(), m_p, gamma_p, ns, k_p)?;
        let rec = reconstruct_der(&current_assembled, &t_p)?;
        let next_assembled = assembled_at(p + 1)?;
        if !rec.assembled.same_constants(&next_assembled) {
            return Err(Error::Internal(
                "reassembly at a tower level disagrees with the next chain member".into(),
            ));
        }

        // conjugate the direct derivation algebra onto Der(assembled)
        let der_direct = derivation_space(&direct)?;
        let phi_inv = phi
            .inverse()
            .ok_or_else(|| Error::Internal("tower identification became singular".into()))?;
        let next_dim = der_direct.dim();
        let mut psi = Matrix::zeros(next_dim, next_dim);
        for (a, dmat) in der_direct.basis.iter().enumerate() {
            let conj = phi.mul(dmat).mul(&phi_inv);
            let coords = rec.der.coords_of(&conj).ok_or_else(|| {
                Error::Internal("conjugated derivation left the derivation space".into())
            })?;
            for (i, c) in coords.iter().enumerate() {
                psi.set(i, a, c.clone());
            }
        }
        phi = rec.identification.mul(&psi);
        direct = der_direct.as_algebra;
        current_assembled = next_assembled;
        verify_transport(&direct, &current_assembled, &phi)?;
    }

    if !current_assembled.same_constants(&fast.ghat) {
        return Err(Error::Internal(
            "chain limit differs from the assembled terminal".into(),
        ));
    }
    Ok(TowerIdentification {
        q,
        terminal_map: phi,
    })
}

fn verify_transport(src: &LieAlgebra, dst: &LieAlgebra, map: &Matrix) -> Result<()> {
    if src.dim() != dst.dim() || map.inverse().is_none() {
        return Err(Error::Internal("transport map is not invertible".into()));
    }
    for i in 0..src.dim() {
        for j in (i + 1)..src.dim() {
            let lhs = map.apply(&src.bracket_basis(i, j));
            let rhs = dst.bracket(&map.col_vec(i), &map.col_vec(j));
            if lhs != rhs {
                return Err(Error::Internal(
                    "transport map does not preserve the structure constants".into(),
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn normalizer_chain_examples() {
        let d12 = catalog("diag12").unwrap();
        let t = gamma_triple(&d12).unwrap();
        let mu = mu_rep(&d12, &t).unwrap();
        let der = derivation_space(&d12).unwrap();
        let cz = der_gamma_centralizer(&d12, &der, &t).unwrap();
        let b = b_algebra(&d12, &t, &mu, &cz).unwrap();

        // start = mu(k) = span{diag(1,2)}: B is abelian so one step reaches B
        let chain = normalizer_tower(&b, &mu.mu).unwrap();
        assert_eq!(chain.members.len(), 2);
        assert_eq!(chain.stable_index, 1);
        assert_eq!(chain.stable().dim(), 2);

        // start = B: chain of length 1
        let chain = normalizer_tower(&b, &b.basis).unwrap();
        assert_eq!(chain.members.len(), 1);

        // start = {0}: first normalizer is already all of B
        let chain = normalizer_tower(&b, &[]).unwrap();
        assert_eq!(chain.members.len(), 2);
        assert_eq!(chain.stable().dim(), b.dim());
    }

    #[test]
    fn ghat_examples() {
        let sl2 = catalog("sl2").unwrap();
        let res = ghat_trivial_center(&sl2).unwrap();
        assert_eq!(res.ghat.dim(), 3);
        assert_eq!(res.chain.members.len(), 1);

        let aff = catalog("aff1").unwrap();
        let res = ghat_trivial_center(&aff).unwrap();
        assert_eq!(res.ghat.dim(), 2);

        let d12 = catalog("diag12").unwrap();
        let res = ghat_trivial_center(&d12).unwrap();
        assert_eq!(res.ghat.dim(), 4);

        let h3 = catalog("heis3").unwrap();
        assert!(matches!(
            ghat_trivial_center(&h3),
            Err(Error::NonzeroCenter { .. })
        ));
    }

    #[test]
    fn schenkman_examples() {
        let sl2 = catalog("sl2").unwrap();
        let b = schenkman_bound(&sl2).unwrap();
        assert_eq!(b.bound, 3);
        assert_eq!(b.ghat_dim, 3);
        assert!(b.holds);

        let d12 = catalog("diag12").unwrap();
        let b = schenkman_bound(&d12).unwrap();
        assert_eq!(b.bound, 6);
        assert_eq!(b.ghat_dim, 4);
        assert!(b.holds);

        let aff = catalog("aff1").unwrap();
        let b = schenkman_bound(&aff).unwrap();
        assert_eq!(b.bound, 2);
        assert_eq!(b.ghat_dim, 2);
        assert!(b.holds);
    }

    #[test]
    fn tower_abelian2_is_case2() {
        let ab = catalog("abelian(2)").unwrap();
        let rep = tower_iterate(&ab, 16).unwrap();
        let dims: Vec<usize> = rep.steps.iter().map(|s| s.dim).collect();
        assert_eq!(dims, vec![2, 4, 4]);
        assert_eq!(rep.case, TowerCase::Case2KTimesPerfect);
        let term = rep.terminal.unwrap();
        assert_eq!(term.dim(), 4);
        assert_eq!(term.center().dim(), 1);
        assert_eq!(term.derived_subalgebra().dim(), 3);
    }

    #[test]
    fn tower_sl2_single_step() {
        let sl2 = catalog("sl2").unwrap();
        let rep = tower_iterate(&sl2, 16).unwrap();
        assert_eq!(rep.steps.len(), 1);
        assert_eq!(rep.case, TowerCase::Case1Complete);
        assert!(rep.steps[0].complete);
        assert_eq!(rep.terminal.unwrap().dim(), 3);
    }

    #[test]
    fn tower_diag12_case1() {
        let d12 = catalog("diag12").unwrap();
        let rep = tower_iterate(&d12, 16).unwrap();
        let dims: Vec<usize> = rep.steps.iter().map(|s| s.dim).collect();
        assert_eq!(dims, vec![3, 4]);
        assert_eq!(rep.case, TowerCase::Case1Complete);
        assert_eq!(rep.terminal.unwrap().dim(), 4);
        assert_eq!(rep.q, Some(1));
        assert!(rep.schenkman.unwrap().holds);
    }

    #[test]
    fn product_split_examples() {
        let ab1 = catalog("abelian(1)").unwrap();
        let sl2 = catalog("sl2").unwrap();
        let ledger = product_der_split(&ab1, &sl2).unwrap();
        assert_eq!(ledger.der1, 1);
        assert_eq!(ledger.der2, 3);
        assert_eq!(
            ledger.der1 + ledger.der2 + ledger.i12 + ledger.i21,
            ledger.total
        );

        // g x 0
        let zero = catalog("abelian(0)").unwrap();
        let ledger = product_der_split(&sl2, &zero).unwrap();
        assert_eq!(
            (ledger.der1, ledger.der2, ledger.i12, ledger.i21),
            (3, 0, 0, 0)
        );

        let h3 = catalog("heis3").unwrap();
        let ledger = product_der_split(&h3, &h3).unwrap();
        assert_eq!(
            ledger.der1 + ledger.der2 + ledger.i12 + ledger.i21,
            ledger.total
        );
    }

    #[test]
    fn identification_on_trivial_center_catalog() {
        for name in ["sl2", "aff1", "diag12"] {
            let g = catalog(name).unwrap();
            let id = tower_identification(&g).unwrap();
            assert!(id.q <= 1, "{name}");
        }
    }
}
