//! Jordan–Chevalley splitting of rational matrices and derivations.
//!
//! The semisimple part is found without factoring or leaving Q: with `f` the
//! minimal polynomial of `d` and `g` its squarefree part, Newton's iteration
//! `a <- a - g(a) / g'(a)` runs in `Q[t]/(f)` starting from `a = t`. The limit
//! `a*` satisfies `g(a*) = 0` and `a* = t mod g`, so `a*(d)` is semisimple and
//! `d - a*(d)` is nilpotent. Convergence is quadratic in the `g`-adic sense, so
//! `ceil(log2(deg f)) + 1` steps always suffice.

use num_traits::Zero;

use crate::error::{Error, Result, Stage};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::poly::{modular_inverse, squarefree_part, Polynomial};
use crate::subspace::unit;

/// `d = s + n` with `s` semisimple, `n` nilpotent, `sn = ns`, and `s = witness(d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JcDecomposition {
    pub semisimple: Matrix,
    pub nilpotent: Matrix,
    pub witness: Polynomial,
}

impl JcDecomposition {
    /// Re-checks every defining property against `d`; returns the first
    /// failure as a message.
    pub fn check(&self, d: &Matrix) -> std::result::Result<(), String> {
        let (s, n) = (&self.semisimple, &self.nilpotent);
        if &(s + n) != d {
            return Err("s + n != d".into());
        }
        if s * n != n * s {
            return Err("s and n do not commute".into());
        }
        if !n.is_nilpotent() {
            return Err("n is not nilpotent".into());
        }
        let ms = s.minimal_polynomial().map_err(|e| e.to_string())?;
        if squarefree_part(&ms) != ms {
            return Err(format!("minimal polynomial of s is not squarefree: {ms}"));
        }
        let w = self.witness.eval_matrix(d).map_err(|e| e.to_string())?;
        if &w != s {
            return Err("witness polynomial does not evaluate to s".into());
        }
        Ok(())
    }
}

/// Unique commuting semisimple + nilpotent splitting of a square matrix.
pub fn jc_decompose(d: &Matrix) -> Result<JcDecomposition> {
    if !d.is_square() {
        return Err(Error::NotSquare { rows: d.rows(), cols: d.cols() });
    }
    let dim = d.rows();
    if dim == 0 {
        return Ok(JcDecomposition { semisimple: d.clone(), nilpotent: d.clone(), witness: Polynomial::zero() });
    }
    let f = d.minimal_polynomial()?;
    let g = squarefree_part(&f);
    let dg = g.derivative();
    let deg = f.degree().unwrap_or(0);
    let cap = ceil_log2(deg) + 1;

    let mut a = Polynomial::t().rem(&f);
    let mut steps = 0;
    loop {
        let ga = g.compose_mod(&a, &f);
        if ga.is_zero() {
            break;
        }
        if steps == cap {
            return Err(Error::tripwire(
                Stage::JordanChevalley,
                format!("Newton iteration did not converge in {cap} steps"),
            ));
        }
        let dga = dg.compose_mod(&a, &f);
        let inv = modular_inverse(&dga, &f)
            .map_err(|e| Error::tripwire(Stage::JordanChevalley, format!("derivative not invertible: {e}")))?;
        a = (&a - &(&ga * &inv)).rem(&f);
        steps += 1;
    }

    let semisimple = a.eval_matrix(d)?;
    let nilpotent = d - &semisimple;
    let out = JcDecomposition { semisimple, nilpotent, witness: a };
    out.check(d).map_err(|m| Error::tripwire(Stage::JordanChevalley, m))?;
    Ok(out)
}

fn ceil_log2(n: usize) -> usize {
    let mut k = 0;
    while (1usize << k) < n {
        k += 1;
    }
    k
}

/// First basis pair `(i, j)` on which `D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j]` fails.
pub fn derivation_defect(g: &LieAlgebra, d: &Matrix) -> Option<(usize, usize)> {
    let n = g.dim();
    let images: Vec<_> = (0..n).map(|i| d.column(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.mul_vec(g.structure(i, j));
            let a = g.bracket(&images[i], &unit(n, j));
            let b = g.bracket(&unit(n, i), &images[j]);
            if lhs.iter().zip(a.iter().zip(&b)).any(|(l, (x, y))| !(l - x - y).is_zero()) {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_derivation(g: &LieAlgebra, d: &Matrix) -> bool {
    d.rows() == g.dim() && d.cols() == g.dim() && derivation_defect(g, d).is_none()
}

/// Splits a derivation and checks that both parts are derivations whose
/// kernels contain `ker d`.
pub fn jc_decompose_derivation(g: &LieAlgebra, d: &Matrix) -> Result<JcDecomposition> {
    if d.rows() != g.dim() || d.cols() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} map on a {}-dimensional algebra",
            d.rows(),
            d.cols(),
            g.dim()
        )));
    }
    if let Some((i, j)) = derivation_defect(g, d) {
        return Err(Error::NotDerivation { i, j });
    }
    let jc = jc_decompose(d)?;
    for (part, name) in [(&jc.semisimple, "semisimple"), (&jc.nilpotent, "nilpotent")] {
        if let Some((i, j)) = derivation_defect(g, part) {
            return Err(Error::tripwire(
                Stage::JordanChevalley,
                format!("Killing-lemma check failed: {name} part is not a derivation at ({i},{j})"),
            ));
        }
    }
    let ker = d.kernel();
    for (part, name) in [(&jc.semisimple, "semisimple"), (&jc.nilpotent, "nilpotent")] {
        if !part.kernel().contains_subspace(&ker)? {
            return Err(Error::tripwire(
                Stage::JordanChevalley,
                format!("Killing-lemma check failed: ker d is not inside ker of the {name} part"),
            ));
        }
    }
    Ok(jc)
}
