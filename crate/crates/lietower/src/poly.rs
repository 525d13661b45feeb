//! Matrix polynomial machinery: minimal polynomials by Krylov spans,
//! squarefree parts, the Jordan-Chevalley split by Newton iteration in the
//! quotient ring, and exponentials of nilpotent matrices.
//!
//! Polynomials are coefficient vectors in ascending degree order with no
//! trailing zeros; the zero polynomial is the empty vector.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::solve;

fn trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn degree(p: &[Scalar]) -> usize {
    debug_assert!(!p.is_empty());
    p.len() - 1
}

fn poly_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn poly_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn poly_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            out[i + j] += ca * cb;
        }
    }
    trim(out)
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
fn poly_divrem(a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (Vec::new(), trim(rem));
    }
    let mut quo = vec![Scalar::zero(); rem.len() - b.len() + 1];
    let lead = b.last().unwrap().clone();
    for k in (0..quo.len()).rev() {
        let coeff = &rem[k + b.len() - 1] / &lead;
        if coeff.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            let v = &rem[k + j] - &(&coeff * cb);
            rem[k + j] = v;
        }
        quo[k] = coeff;
    }
    (trim(quo), trim(rem))
}

fn poly_monic(p: &[Scalar]) -> Vec<Scalar> {
    if p.is_empty() {
        return Vec::new();
    }
    let lead = p.last().unwrap().recip();
    p.iter().map(|c| c * &lead).collect()
}

fn poly_gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let (_, r) = poly_divrem(&a, &b);
        a = b;
        b = r;
    }
    poly_monic(&a)
}

fn poly_derivative(p: &[Scalar]) -> Vec<Scalar> {
    if p.len() <= 1 {
        return Vec::new();
    }
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Scalar::from_integer(i.into()))
            .collect(),
    )
}

fn poly_mod(a: &[Scalar], f: &[Scalar]) -> Vec<Scalar> {
    poly_divrem(a, f).1
}

/// Composition `g(p)` reduced mod `f`, by Horner.
fn poly_compose_mod(g: &[Scalar], p: &[Scalar], f: &[Scalar]) -> Vec<Scalar> {
    let mut acc: Vec<Scalar> = Vec::new();
    for c in g.iter().rev() {
        acc = poly_mod(&poly_mul(&acc, p), f);
        if !c.is_zero() {
            acc = poly_add(&acc, std::slice::from_ref(c));
        }
    }
    acc
}

/// Inverse of `a` in K[t]/(f), when gcd(a, f) = 1.
fn poly_inverse_mod(a: &[Scalar], f: &[Scalar]) -> Option<Vec<Scalar>> {
    // extended Euclid: r0 = f, r1 = a, track coefficients of a only
    let mut r0 = f.to_vec();
    let mut r1 = trim(a.to_vec());
    let mut s0: Vec<Scalar> = Vec::new();
    let mut s1: Vec<Scalar> = vec![Scalar::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if degree(&r0) != 0 {
        return None;
    }
    let inv_lead = r0[0].recip();
    Some(poly_mod(
        &s0.iter().map(|c| c * &inv_lead).collect::<Vec<_>>(),
        f,
    ))
}

/// Evaluates `p` at a square matrix by Horner.
pub fn eval_matrix(p: &[Scalar], m: &Matrix) -> Matrix {
    assert!(m.is_square());
    let n = m.rows();
    let mut acc = Matrix::zeros(n, n);
    for c in p.iter().rev() {
        acc = acc.mul(m);
        if !c.is_zero() {
            acc = acc.add(&Matrix::identity(n).scale(c));
        }
    }
    acc
}

/// Monic minimal polynomial via iterated Krylov spans of matrix powers: the
/// first power that is linearly dependent on the earlier ones yields the
/// dependency coefficients.
pub fn minimal_polynomial(m: &Matrix) -> Vec<Scalar> {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return vec![Scalar::one()];
    }
    let mut powers: Vec<Matrix> = vec![Matrix::identity(n)];
    loop {
        let k = powers.len();
        let next = powers.last().unwrap().mul(m);
        // columns of the system are the flattened earlier powers
        let sys = Matrix::from_rows(powers.iter().map(|p| p.flatten()).collect()).transpose();
        let (particular, _) = solve(&sys, &next.flatten());
        if let Some(c) = particular {
            // m^k = sum c_i m^i  ->  t^k - sum c_i t^i
            let mut coeffs: Vec<Scalar> = c.iter().map(|x| -x.clone()).collect();
            coeffs.push(Scalar::one());
            return trim(coeffs);
        }
        powers.push(next);
        assert!(k <= n, "minimal polynomial search exceeded dimension bound");
    }
}

/// Squarefree part `p / gcd(p, p')`, normalized monic.
pub fn squarefree_part(p: &[Scalar]) -> Result<Vec<Scalar>> {
    let p = trim(p.to_vec());
    if p.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    if degree(&p) == 0 {
        return Ok(vec![Scalar::one()]);
    }
    let g = poly_gcd(&p, &poly_derivative(&p));
    let (q, r) = poly_divrem(&p, &g);
    debug_assert!(r.is_empty());
    Ok(poly_monic(&q))
}

pub fn is_squarefree(p: &[Scalar]) -> bool {
    let p = trim(p.to_vec());
    if p.is_empty() {
        return false;
    }
    degree(&poly_gcd(&p, &poly_derivative(&p))) == 0
}

/// Jordan-Chevalley decomposition `m = s + n` with `s` semisimple (squarefree
/// minimal polynomial), `n` nilpotent, both commuting polynomials in `m`.
///
/// Computed by Newton iteration in `K[t]/(f)` on the squarefree part g of the
/// minimal polynomial f: starting from t, iterate p <- p - g(p)/g'(p) until
/// g(p) = 0 mod f; then s = p(m). Works over the rationals without any
/// eigenvalue computation or field extension.
pub fn jordan_chevalley(m: &Matrix) -> Result<(Matrix, Matrix)> {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return Ok((m.clone(), Matrix::zeros(0, 0)));
    }
    let f = minimal_polynomial(m);
    let g = squarefree_part(&f)?;
    if g == f {
        return Ok((m.clone(), Matrix::zeros(n, n)));
    }
    let g_prime = poly_derivative(&g);
    let mut p: Vec<Scalar> = vec![Scalar::zero(), Scalar::one()]; // t
    let max_iter = 64; // quadratic convergence; generous cap
    let mut done = false;
    for _ in 0..max_iter {
        let r = poly_compose_mod(&g, &p, &f);
        if r.is_empty() {
            done = true;
            break;
        }
        let d = poly_compose_mod(&g_prime, &p, &f);
        let u = poly_inverse_mod(&d, &f).ok_or_else(|| {
            Error::Internal("derivative of squarefree part not invertible".into())
        })?;
        p = poly_mod(&poly_sub(&p, &poly_mul(&r, &u)), &f);
    }
    if !done {
        return Err(Error::Internal(
            "Newton iteration for the semisimple part did not converge".into(),
        ));
    }
    let s = eval_matrix(&p, m);
    let nil = m.sub(&s);
    Ok((s, nil))
}

/// Finite exponential series of a nilpotent matrix. Errors when the input is
/// not nilpotent.
pub fn exp_nilpotent(m: &Matrix) -> Result<Matrix> {
    assert!(m.is_square());
    let Some(index) = m.nilpotency_index() else {
        return Err(Error::NotNilpotent);
    };
    let n = m.rows();
    let mut out = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    let mut factorial = Scalar::one();
    for i in 1..index {
        term = term.mul(m);
        factorial *= Scalar::from_integer(i.into());
        out = out.add(&term.scale(&factorial.recip()));
    }
    Ok(out)
}

/// Semisimple part of `m`; shorthand used when the nilpotent part is not
/// needed.
pub fn semisimple_part(m: &Matrix) -> Result<Matrix> {
    Ok(jordan_chevalley(m)?.0)
}
