//! Shared fixtures for the integration suites: seeded random extensions,
//! ad-nilpotent samplers, and small helpers.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lietower::algebra::LieAlgebra;
use lietower::catalog::catalog;
use lietower::derivations::derivation_space;
use lietower::matrix::Matrix;
use lietower::scalar::{int, Scalar};
use lietower::subspace::Subspace;

/// Base catalog fixtures used by the suites.
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "abelian(1)",
        "abelian(2)",
        "abelian(3)",
        "aff1",
        "heis3",
        "sl2",
        "paper5",
        "diag12",
    ]
}

/// Catalog fixtures with trivial center.
pub fn z0_catalog_names() -> Vec<&'static str> {
    vec!["sl2", "aff1", "diag12"]
}

pub fn span(ambient: usize, rows: &[&[i64]]) -> Subspace {
    Subspace::from_rows(
        ambient,
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect(),
    )
}

/// Prints the per-criterion pass/fail line the acceptance suite promises.
pub fn criterion(name: &str, f: impl FnOnce() + std::panic::UnwindSafe) {
    match std::panic::catch_unwind(f) {
        Ok(()) => println!("acceptance {name}: PASS"),
        Err(e) => {
            println!("acceptance {name}: FAIL");
            std::panic::resume_unwind(e);
        }
    }
}

/// Change of basis by a product of integer shears; exact and invertible.
pub fn shear(g: &LieAlgebra, rng: &mut ChaCha8Rng) -> LieAlgebra {
    let n = g.dim();
    if n < 2 {
        return g.clone();
    }
    let mut p = Matrix::identity(n);
    for _ in 0..rng.gen_range(1..=3) {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        if i == j {
            j = (j + 1) % n;
        }
        let c = rng.gen_range(-2..=2i64);
        if c == 0 {
            continue;
        }
        let mut e = Matrix::identity(n);
        e.set(i, j, int(c));
        p = p.mul(&e);
    }
    let pinv = p.inverse().expect("shear products are unimodular");
    let names: Vec<String> = (1..=n).map(|i| format!("y{i}")).collect();
    let mut entries = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let w = g.bracket(&p.col_vec(a), &p.col_vec(b));
            entries.push((a, b, pinv.apply(&w)));
        }
    }
    LieAlgebra::new(names, entries).expect("base change preserves the Jacobi identity")
}

/// One-dimensional extension of `base` by a random derivation.
pub fn one_derivation_extension(base: &LieAlgebra, rng: &mut ChaCha8Rng) -> LieAlgebra {
    let der = derivation_space(base).expect("derivation solve");
    let nb = base.dim();
    let mut d = Matrix::zeros(nb, nb);
    for _ in 0..20 {
        d = Matrix::zeros(nb, nb);
        for b in &der.basis {
            let c = rng.gen_range(-2..=2i64);
            if c != 0 {
                d = d.add(&b.scale(&int(c)));
            }
        }
        if !d.is_zero() {
            break;
        }
    }
    let mut names = vec!["t".to_string()];
    names.extend((1..=nb).map(|i| format!("v{i}")));
    let mut entries = Vec::new();
    for j in 0..nb {
        let col = d.col_vec(j);
        let mut coords = vec![Scalar::zero(); nb + 1];
        for (r, c) in col.iter().enumerate() {
            coords[1 + r] = c.clone();
        }
        entries.push((0, 1 + j, coords));
    }
    for i in 0..nb {
        for j in (i + 1)..nb {
            let mut coords = vec![Scalar::zero(); nb + 1];
            for (r, c) in base.bracket_basis(i, j).iter().enumerate() {
                coords[1 + r] = c.clone();
            }
            entries.push((1 + i, 1 + j, coords));
        }
    }
    LieAlgebra::new(names, entries).expect("derivation extensions satisfy Jacobi")
}

/// Semidirect product of `base` with an abelian space through a
/// representation given by one matrix per base basis vector.
pub fn semidirect(base: &LieAlgebra, rho: &[Matrix], vdim: usize) -> LieAlgebra {
    let nb = base.dim();
    assert_eq!(rho.len(), nb);
    let mut names: Vec<String> = base.basis_names().to_vec();
    names.extend((1..=vdim).map(|i| format!("w{i}")));
    let total = nb + vdim;
    let mut entries = Vec::new();
    for i in 0..nb {
        for j in (i + 1)..nb {
            let mut coords = vec![Scalar::zero(); total];
            for (r, c) in base.bracket_basis(i, j).iter().enumerate() {
                coords[r] = c.clone();
            }
            entries.push((i, j, coords));
        }
    }
    for i in 0..nb {
        for j in 0..vdim {
            let col = rho[i].col_vec(j);
            let mut coords = vec![Scalar::zero(); total];
            for (r, c) in col.iter().enumerate() {
                coords[nb + r] = c.clone();
            }
            entries.push((i, nb + j, coords));
        }
    }
    LieAlgebra::new(names, entries).expect("representations satisfy Jacobi")
}

/// sl2 acting on its standard plane, optionally padded with trivial
/// directions, or on its adjoint representation.
pub fn sl2_semidirect(kind: usize) -> LieAlgebra {
    let sl2 = catalog("sl2").unwrap();
    match kind {
        0 | 1 => {
            let trivial = kind; // extra trivial directions
            let vdim = 2 + trivial;
            let pad = |m: Matrix| -> Matrix {
                let mut out = Matrix::zeros(vdim, vdim);
                for r in 0..2 {
                    for c in 0..2 {
                        out.set(r, c, m.get(r, c).clone());
                    }
                }
                out
            };
            let rho = vec![
                pad(Matrix::from_int_rows(&[&[0, 1], &[0, 0]])),
                pad(Matrix::from_int_rows(&[&[1, 0], &[0, -1]])),
                pad(Matrix::from_int_rows(&[&[0, 0], &[1, 0]])),
            ];
            semidirect(&sl2, &rho, vdim)
        }
        _ => {
            let rho: Vec<Matrix> = (0..3).map(|i| sl2.ad_basis(i)).collect();
            semidirect(&sl2, &rho, 3)
        }
    }
}

/// Two commuting diagonal matrices acting on an abelian space.
pub fn torus_on_abelian(d: usize, rng: &mut ChaCha8Rng) -> LieAlgebra {
    let base = catalog("abelian(2)").unwrap();
    let diag = |rng: &mut ChaCha8Rng| -> Matrix {
        let mut m = Matrix::zeros(d, d);
        for i in 0..d {
            m.set(i, i, int(rng.gen_range(-3..=3)));
        }
        m
    };
    let rho = vec![diag(rng), diag(rng)];
    semidirect(&base, &rho, d)
}

fn filiform4() -> LieAlgebra {
    LieAlgebra::from_int_brackets(
        &["e1", "e2", "e3", "e4"],
        &[(0, 1, &[(2, 1)]), (0, 2, &[(3, 1)])],
    )
    .unwrap()
}

/// Seed-fixed mix of small solvable and semidirect extensions, dim <= 8.
pub fn solvable_semidirect_extensions(count: usize, seed: u64) -> Vec<LieAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let pick = rng.gen_range(0..6u32);
        let g = match pick {
            0 => one_derivation_extension(&catalog("abelian(3)").unwrap(), &mut rng),
            1 => one_derivation_extension(&catalog("heis3").unwrap(), &mut rng),
            2 => one_derivation_extension(&filiform4(), &mut rng),
            3 => torus_on_abelian(rng.gen_range(2..=4), &mut rng),
            4 => sl2_semidirect(rng.gen_range(0..=2)),
            _ => catalog("aff1")
                .unwrap()
                .direct_product(&one_derivation_extension(
                    &catalog("abelian(2)").unwrap(),
                    &mut rng,
                )),
        };
        let g = if rng.gen_bool(0.5) {
            shear(&g, &mut rng)
        } else {
            g
        };
        if g.dim() <= 8 {
            out.push(g);
        }
    }
    out
}

/// Seed-fixed small extensions with trivial center.
pub fn trivial_center_extensions(count: usize, seed: u64) -> Vec<LieAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let base = match rng.gen_range(0..3u32) {
            0 => catalog("abelian(2)").unwrap(),
            1 => catalog("abelian(3)").unwrap(),
            _ => catalog("heis3").unwrap(),
        };
        let g = one_derivation_extension(&base, &mut rng);
        let g = if rng.gen_bool(0.4) {
            shear(&g, &mut rng)
        } else {
            g
        };
        if g.dim() <= 5 && g.center().is_zero() {
            out.push(g);
        }
    }
    out
}

/// Seeded ad-nilpotent elements of `g` (always nonempty; the zero vector is
/// a legal degenerate sample).
pub fn ad_nilpotent_samples(
    g: &LieAlgebra,
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Vec<Scalar>> {
    let nil = g.nilradical();
    let mut nilpotent_units: Vec<usize> = Vec::new();
    for i in 0..g.dim() {
        if g.is_ad_nilpotent(&g.unit(i)) {
            nilpotent_units.push(i);
        }
    }
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count && tries < 50 * count {
        tries += 1;
        let candidate: Vec<Scalar> = if !nil.is_zero() && rng.gen_bool(0.7) {
            let mut v = vec![Scalar::zero(); g.dim()];
            for row in nil.basis_rows() {
                let c = int(rng.gen_range(-2..=2));
                for (i, x) in row.iter().enumerate() {
                    v[i] = &v[i] + &(&c * x);
                }
            }
            v
        } else if !nilpotent_units.is_empty() {
            let i = nilpotent_units[rng.gen_range(0..nilpotent_units.len())];
            let c = int(rng.gen_range(1..=3));
            g.unit(i).iter().map(|x| x * &c).collect()
        } else {
            vec![Scalar::zero(); g.dim()]
        };
        if g.is_ad_nilpotent(&candidate) {
            out.push(candidate);
        }
    }
    while out.len() < count {
        out.push(vec![Scalar::zero(); g.dim()]);
    }
    out
}

/// Dense random 4x4 rational matrix with small entries.
pub fn random_rational_matrix4(rng: &mut ChaCha8Rng) -> Matrix {
    let mut m = Matrix::zeros(4, 4);
    for r in 0..4 {
        for c in 0..4 {
            let n = rng.gen_range(-4..=4i64);
            let d = rng.gen_range(1..=2i64);
            m.set(r, c, lietower::scalar::rat(n, d));
        }
    }
    m
}

/// Conjugate of a small Jordan-type block matrix by integer shears, so the
/// semisimple/nilpotent split is nontrivial but exact.
pub fn random_jordan_conjugate4(rng: &mut ChaCha8Rng) -> Matrix {
    let a = rng.gen_range(-2..=2i64);
    let b = rng.gen_range(-2..=2i64);
    let j = match rng.gen_range(0..3u32) {
        0 => Matrix::from_int_rows(&[&[a, 1, 0, 0], &[0, a, 0, 0], &[0, 0, b, 1], &[0, 0, 0, b]]),
        1 => Matrix::from_int_rows(&[&[a, 1, 0, 0], &[0, a, 1, 0], &[0, 0, a, 0], &[0, 0, 0, b]]),
        _ => Matrix::from_int_rows(&[&[a, 1, 0, 0], &[0, a, 0, 0], &[0, 0, a, 0], &[0, 0, 0, b]]),
    };
    let mut p = Matrix::identity(4);
    for _ in 0..4 {
        let i = rng.gen_range(0..4);
        let mut k = rng.gen_range(0..4);
        if i == k {
            k = (k + 1) % 4;
        }
        let mut e = Matrix::identity(4);
        e.set(i, k, int(rng.gen_range(-2..=2)));
        p = p.mul(&e);
    }
    let pinv = p.inverse().unwrap();
    p.mul(&j).mul(&pinv)
}
