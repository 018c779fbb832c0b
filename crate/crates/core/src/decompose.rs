//! Radical, Levi subalgebra, the nilpotent ideal `[g, r]`, and the split of a
//! reductive acting part into a piece that kills the nilpotent ideal and a
//! piece acting faithfully on it.

use num_traits::Zero;

use crate::error::{Error, Result, Stage};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::subspace::{unit, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviData {
    pub radical: Subspace,
    pub levi: Subspace,
}

/// `p = kernel_part ⊕ acting_part`, both ideals of `p`, commuting with each
/// other; `kernel_part` brackets `n` to zero and `acting_part` acts faithfully.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductiveSplit {
    pub kernel_part: Subspace,
    pub acting_part: Subspace,
}

fn tripwire(msg: impl Into<String>) -> Error {
    Error::tripwire(Stage::Decompose, msg)
}

/// `{x : κ(x, y) = 0 for all y in [g, g]}`, valid in characteristic zero.
pub fn radical(g: &LieAlgebra) -> Result<Subspace> {
    let n = g.dim();
    let kappa = g.killing_form();
    let derived = g.derived_algebra();
    let r = (derived.basis() * &kappa).kernel();
    debug_assert_eq!(r.ambient_dim(), n);

    let violated = |what: &str| tripwire(format!("radical postcondition violated: {what}"));
    g.check_ideal(&r).map_err(|_| violated("not an ideal"))?;
    let (ra, _) = g.subalgebra_on_basis(&r).map_err(|_| violated("not a subalgebra"))?;
    if !ra.is_solvable() {
        return Err(violated("not solvable"));
    }
    if !r.is_full() {
        let quo = g.quotient(&r)?;
        let k = quo.algebra.killing_form();
        if k.rank() != k.rows() {
            return Err(violated("quotient has degenerate Killing form"));
        }
    }
    Ok(r)
}

/// Radical together with a Levi subalgebra, built by lifting a Levi
/// complement through the derived series of the radical.
pub fn levi_subalgebra(g: &LieAlgebra) -> Result<LeviData> {
    let radical = radical(g)?;
    let vecs = levi_basis(g, &radical)?;
    let levi = Subspace::from_vectors(g.dim(), &vecs);

    let bad = |what: &str| tripwire(format!("Levi postcondition violated: {what}"));
    g.check_subalgebra(&levi).map_err(|_| bad("not a subalgebra"))?;
    if !levi.intersect(&radical)?.is_zero() || !levi.sum(&radical)?.is_full() {
        return Err(bad("not a complement of the radical"));
    }
    if !levi.is_zero() {
        let kappa = g.killing_form();
        let restricted = &(levi.basis() * &kappa) * &levi.basis().transpose();
        if restricted.rank() != levi.dim() {
            return Err(bad("Killing form degenerate on the Levi part"));
        }
    }
    Ok(LeviData { radical, levi })
}

fn levi_basis(g: &LieAlgebra, r: &Subspace) -> Result<Vec<Vec<Rational>>> {
    let n = g.dim();
    if r.is_zero() {
        return Ok((0..n).map(|i| unit(n, i)).collect());
    }
    if r.is_full() {
        return Ok(Vec::new());
    }
    let r1 = g.bracket_spaces(r, r);
    if r1.is_zero() {
        return levi_abelian_radical(g, r);
    }
    // Levi part of g/[r,r] (whose radical r/[r,r] is abelian), lifted to the
    // subalgebra K = preimage; K has radical [r,r] of smaller derived length.
    let quo = g.quotient(&r1)?;
    let r_bar = r.image(&quo.projection)?;
    let levi_bar = levi_abelian_radical(&quo.algebra, &r_bar)?;
    let mut k_basis: Vec<Vec<Rational>> = levi_bar.iter().map(|v| quo.section.mul_vec(v)).collect();
    let head = k_basis.len();
    k_basis.extend(r1.basis_vectors());
    let (k, inclusion) = g.subalgebra_from_basis(&k_basis, None)?;
    let r1_in_k = Subspace::coordinate(k.dim(), &(head..k.dim()).collect::<Vec<_>>());
    let inner = levi_basis(&k, &r1_in_k)?;
    Ok(inner.iter().map(|v| inclusion.mul_vec(v)).collect())
}

/// Solves for `x_i + r_i` (with `x_i` a fixed complement basis and `r_i ∈ r`)
/// closing under the bracket of `g/r`. Linear because `r` is abelian.
fn levi_abelian_radical(g: &LieAlgebra, r: &Subspace) -> Result<Vec<Vec<Rational>>> {
    let n = g.dim();
    let comp = r.extend_complement(&Subspace::full(n))?;
    let (s, m) = (comp.dim(), r.dim());
    let xs = comp.basis_vectors();
    let rs = r.basis_vectors();
    let mut cols = xs.clone();
    cols.extend(rs.iter().cloned());
    let coords = Matrix::from_columns(&cols, n).inverse()?;

    // Unknown t[i*m + a] is the coefficient of rs[a] in r_i.
    let unknowns = s * m;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for i in 0..s {
        for j in i + 1..s {
            let bij = g.bracket(&xs[i], &xs[j]);
            let c = coords.mul_vec(&bij);
            // r-part of [x_i, x_j]
            let mut rho = vec![Rational::zero(); n];
            for (a, ra) in rs.iter().enumerate() {
                let f = &c[s + a];
                if !f.is_zero() {
                    for (o, v) in rho.iter_mut().zip(ra) {
                        *o += f * v;
                    }
                }
            }
            let mut block = vec![vec![Rational::zero(); unknowns]; n];
            for (a, ra) in rs.iter().enumerate() {
                let left = g.bracket(&xs[i], ra); // coefficient t[j, a]
                let right = g.bracket(ra, &xs[j]); // coefficient t[i, a]
                for row in 0..n {
                    block[row][j * m + a] += &left[row];
                    block[row][i * m + a] += &right[row];
                    for k in 0..s {
                        if !c[k].is_zero() {
                            block[row][k * m + a] -= &c[k] * &ra[row];
                        }
                    }
                }
            }
            rows.extend(block);
            rhs.extend(rho.into_iter().map(|x| -x));
        }
    }
    let t = if rows.is_empty() {
        vec![Rational::zero(); unknowns]
    } else {
        Matrix::from_rows(&rows, unknowns).solve(&rhs).ok_or_else(|| tripwire("no Levi complement found"))?
    };
    Ok((0..s)
        .map(|i| {
            let mut v = xs[i].clone();
            for (a, ra) in rs.iter().enumerate() {
                let f = &t[i * m + a];
                if !f.is_zero() {
                    for (o, x) in v.iter_mut().zip(ra) {
                        *o += f * x;
                    }
                }
            }
            v
        })
        .collect())
}

/// `r` when the radical is nilpotent, otherwise `[g, r]`.
pub fn nilpotent_seed(g: &LieAlgebra, levi: &LeviData) -> Result<Subspace> {
    let r = &levi.radical;
    let full = Subspace::full(g.dim());
    let gr = g.bracket_spaces(&full, r);
    let (ra, _) = g.subalgebra_on_basis(r)?;
    let n = if ra.is_nilpotent() { r.clone() } else { gr.clone() };

    let bad = |what: &str| tripwire(format!("nilpotent seed postcondition violated: {what}"));
    g.check_ideal(&n).map_err(|_| bad("not an ideal"))?;
    let (na, _) = g.subalgebra_on_basis(&n)?;
    if !na.is_nilpotent() {
        return Err(bad("not nilpotent"));
    }
    if !n.contains_subspace(&gr)? {
        return Err(bad("does not contain [g, r]"));
    }
    if !levi.levi.sum(&n)?.contains_subspace(&g.derived_algebra())? {
        return Err(bad("[g, g] not inside levi + n"));
    }
    Ok(n)
}

/// Splits the subalgebra `p` into the part killing `n` and a complementary
/// ideal acting faithfully on `n`.
pub fn reductive_split(g: &LieAlgebra, p: &Subspace, n: &Subspace) -> Result<ReductiveSplit> {
    let dim = g.dim();
    let (pa, inc) = g.subalgebra_on_basis(p)?;
    let dp = pa.dim();

    // Action of p on n, stacked over a basis of n: kernel = p'.
    let action = stacked_action(g, &inc, n);
    let kernel_p = action.kernel();

    let derived = pa.derived_algebra();
    let kappa = pa.killing_form();
    let a = kernel_p.intersect(&derived)?;
    let orth = (a.basis() * &kappa).kernel().intersect(&derived)?;
    let center = pa.center();
    let b = kernel_p.intersect(&center)?;
    let c = b.extend_complement(&center)?;
    let acting_p = orth.sum(&c)?;

    let kernel_part = kernel_p.image(&inc)?;
    let acting_part = acting_p.image(&inc)?;

    let bad = |what: &str| tripwire(format!("split postcondition violated: {what}"));
    if kernel_p.dim() + acting_p.dim() != dp || !kernel_p.sum(&acting_p)?.is_full() {
        return Err(bad("parts do not form a direct sum equal to p"));
    }
    for i in 0..kernel_part.dim() {
        for j in 0..acting_part.dim() {
            if g.bracket(kernel_part.vector(i), acting_part.vector(j)).iter().any(|x| !x.is_zero()) {
                return Err(bad("[p', p''] != 0"));
            }
        }
    }
    if pa.check_ideal(&kernel_p).is_err() || pa.check_ideal(&acting_p).is_err() {
        return Err(bad("parts are not ideals of p"));
    }
    if acting_part.dim() > 0 {
        let (_, inc2) = g.subalgebra_from_basis(&acting_part.basis_vectors(), None)?;
        if stacked_action(g, &inc2, n).rank() != acting_part.dim() {
            return Err(bad("p'' does not act faithfully on n"));
        }
    }
    debug_assert_eq!(kernel_part.ambient_dim(), dim);
    Ok(ReductiveSplit { kernel_part, acting_part })
}

/// Matrix sending coordinates `a` (w.r.t. the columns of `inc`) to the stacked
/// brackets `[inc·a, n_j]` over the basis of `n`.
fn stacked_action(g: &LieAlgebra, inc: &Matrix, n: &Subspace) -> Matrix {
    let dim = g.dim();
    let k = inc.cols();
    let mut m = Matrix::zeros(0, k);
    for j in 0..n.dim() {
        let cols: Vec<Vec<Rational>> = (0..k).map(|i| g.bracket(&inc.column(i), n.vector(j))).collect();
        m = m.vstack(&Matrix::from_columns(&cols, dim));
    }
    m
}
