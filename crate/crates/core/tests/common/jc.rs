//! Independent checks for the Jordan–Chevalley splitting.

use ado_core::poly::poly_gcd;
use ado_core::{JcDecomposition, LieAlgebra, Matrix, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{r, random_invertible, random_matrix, unit};

/// Every defining property, checked from scratch; the first failure.
pub fn jc_violation(d: &Matrix, jc: &JcDecomposition) -> Option<&'static str> {
    let (s, n) = (&jc.semisimple, &jc.nilpotent);
    if &(s + n) != d {
        return Some("s + n != d");
    }
    if s * n != n * s {
        return Some("s and n do not commute");
    }
    if !n.pow(d.rows() as u32).is_zero() {
        return Some("n^dim != 0");
    }
    let f = s.minimal_polynomial().unwrap();
    if poly_gcd(&f, &f.derivative()).degree() != Some(0) {
        return Some("minimal polynomial of s is not squarefree");
    }
    if &jc.witness.eval_matrix(d).unwrap() != s {
        return Some("witness(d) != s");
    }
    if d.rows() > 0 {
        let deg_d = d.minimal_polynomial().unwrap().degree().unwrap();
        if !jc.witness.is_zero() && jc.witness.degree().unwrap() >= deg_d {
            return Some("witness degree is not below that of the minimal polynomial");
        }
    }
    None
}

/// A matrix with prescribed Jordan blocks `(eigenvalue, size)`, conjugated
/// by a random change of basis.
pub fn with_jordan_blocks(rng: &mut impl Rng, blocks: &[(i64, usize)]) -> (Matrix, Matrix) {
    let n: usize = blocks.iter().map(|b| b.1).sum();
    let mut j = Matrix::zeros(n, n);
    let mut at = 0;
    for &(lambda, size) in blocks {
        for k in 0..size {
            j[(at + k, at + k)] = r(lambda);
            if k + 1 < size {
                j[(at + k, at + k + 1)] = r(1);
            }
        }
        at += size;
    }
    let p = random_invertible(rng, n);
    let d = &(&p * &j) * &p.inverse().unwrap();
    (d, p)
}

/// `Σ λ · (projection onto ker (d - λ)^a)`, from root-space bases.
pub fn eigenprojection_oracle(d: &Matrix, eigen: &[(i64, usize)]) -> Matrix {
    let n = d.rows();
    let mut cols = Vec::new();
    let mut diag = Vec::new();
    for &(lambda, mult) in eigen {
        let shifted = d - &Matrix::identity(n).scale(&r(lambda));
        let root = shifted.pow(mult as u32).kernel_basis();
        assert_eq!(root.len(), mult, "root space of {lambda}");
        diag.extend(std::iter::repeat_n(r(lambda), mult));
        cols.extend(root);
    }
    let b = Matrix::from_columns(&cols, n);
    let l = Matrix::from_fn(n, n, |i, k| if i == k { diag[i].clone() } else { Rational::zero() });
    &(&b * &l) * &b.inverse().unwrap()
}

pub fn eigen_multiplicities(blocks: &[(i64, usize)]) -> Vec<(i64, usize)> {
    let mut out: Vec<(i64, usize)> = Vec::new();
    for &(l, s) in blocks {
        match out.iter_mut().find(|e| e.0 == l) {
            Some(e) => e.1 += s,
            None => out.push((l, s)),
        }
    }
    out
}

pub fn leibniz_holds(g: &LieAlgebra, d: &Matrix) -> bool {
    let n = g.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let (u, v) = (unit(n, i), unit(n, j));
            let lhs = d.mul_vec(g.structure(i, j));
            let a = g.bracket(&d.mul_vec(&u), &v);
            let b = g.bracket(&u, &d.mul_vec(&v));
            lhs.iter().zip(a.iter().zip(&b)).all(|(l, (x, y))| *l == x + y)
        })
    })
}

/// The fixed suite of 100 random matrices up to 6x6; every other one is
/// sparse upper triangular so that eigenvalues repeat.
pub fn random_suite() -> Vec<Matrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..100)
        .map(|case| {
            let n = rng.gen_range(1..=6);
            if case % 2 == 0 {
                random_matrix(&mut rng, n, 3)
            } else {
                Matrix::from_fn(n, n, |i, j| if j >= i && rng.gen_bool(0.5) { r(rng.gen_range(-2..=2)) } else { r(0) })
            }
        })
        .collect()
}

/// Jordan block shapes `(eigenvalue, size)` with rational eigenvalues.
pub const SHAPES: [&[(i64, usize)]; 8] = [
    &[(2, 2)],
    &[(1, 3), (-1, 1)],
    &[(0, 2), (0, 1), (3, 2)],
    &[(5, 1), (5, 1), (-2, 3)],
    &[(1, 1), (2, 1), (3, 1), (4, 1)],
    &[(0, 4)],
    &[(-1, 2), (-1, 2), (1, 2)],
    &[(2, 6)],
];

/// Matrices with known eigenstructure, each paired with its oracle `s`.
pub fn oracle_suite() -> Vec<(Matrix, Matrix)> {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut out = Vec::new();
    for _ in 0..5 {
        for blocks in SHAPES {
            let (d, _) = with_jordan_blocks(&mut rng, blocks);
            let s = eigenprojection_oracle(&d, &eigen_multiplicities(blocks));
            out.push((d, s));
        }
    }
    out
}
