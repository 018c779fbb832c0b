#![allow(dead_code)]

pub mod jc;
pub mod words;

use ado_core::{LieAlgebra, Matrix, Rational};
use num_traits::{One, Zero};
use rand::Rng;

pub fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// Square matrix with small integer entries.
pub fn random_matrix(rng: &mut impl Rng, n: usize, range: i64) -> Matrix {
    Matrix::from_fn(n, n, |_, _| r(rng.gen_range(-range..=range)))
}

/// Unimodular-ish change of basis: unit lower times unit upper triangular.
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    let l = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Rational::one(),
        std::cmp::Ordering::Greater => r(rng.gen_range(-2..=2)),
        std::cmp::Ordering::Less => Rational::zero(),
    });
    let u = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => r(if rng.gen_bool(0.5) { 1 } else { -1 }),
        std::cmp::Ordering::Less => r(rng.gen_range(-2..=2)),
        std::cmp::Ordering::Greater => Rational::zero(),
    });
    &l * &u
}

/// The same algebra written in the basis given by the columns of `p`.
pub fn rebase(g: &LieAlgebra, p: &Matrix) -> LieAlgebra {
    let n = g.dim();
    let inv = p.inverse().expect("change of basis is invertible");
    let cols: Vec<Vec<Rational>> = (0..n).map(|i| p.column(i)).collect();
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(inv.mul_vec(&g.bracket(&cols[i], &cols[j])));
        }
    }
    let labels = (1..=n).map(|i| format!("b{i}")).collect();
    LieAlgebra::new(format!("{}'", g.name()), labels, table).expect("rebased algebra is valid")
}

/// Entrywise matrix of a linear combination of basis images.
pub fn combine(images: &[Matrix], coords: &[Rational], dim: usize) -> Matrix {
    let mut out = Matrix::zeros(dim, dim);
    for (m, c) in images.iter().zip(coords) {
        if !c.is_zero() {
            out.add_scaled(c, m);
        }
    }
    out
}
