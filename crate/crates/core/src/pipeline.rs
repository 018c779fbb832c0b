//! End-to-end construction of a faithful representation, and its exact
//! verification.
//!
//! `q` is first embedded in `p ⊕ n` (see [`crate::expansion`]); `p` splits as
//! `p' ⊕ p''` with `p'` killing `n`. Then `p' ⊕ (p'' ⋉ n)` acts on
//! `V = U(n)/I ⊕ W`, where `p'' ⋉ n` acts on the truncated enveloping module
//! and `p'` acts on `W = p' ⊕ Q ⊕ z(p')` by its adjoint action plus the
//! center shift `σ(x)(t, w) = (0, t·π(x))`. Each summand acts by zero on the
//! other one, and the result is pulled back along the embedding of `q`.

use num_traits::Zero;

use crate::decompose::reductive_split;
use crate::echelon::{SparseEchelon, SparseVec};
use crate::envelope::{
    build_module, check_a_intersection, default_truncation, AIntersection, TruncatedModule, DEFAULT_MAX_AMBIENT,
};
use crate::error::{Error, Result, Stage};
use crate::expansion::{saturate, StepSummary};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::subspace::Subspace;

#[derive(Clone, Debug)]
pub struct Options {
    /// Truncation degree `M`; the default is `k + 2`.
    pub truncation: Option<usize>,
    /// Retry once at `M + 1` when the default truncation is not faithful.
    pub retry: bool,
    /// Cap on the number of monomials of degree `≤ M(k-1)`.
    pub max_ambient: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { truncation: None, retry: true, max_ambient: DEFAULT_MAX_AMBIENT }
    }
}

/// How the matrices were obtained.
#[derive(Clone, Debug, Default)]
pub struct Provenance {
    pub steps: Vec<StepSummary>,
    /// `(dim q, dim p, dim n)` after saturation.
    pub saturated: (usize, usize, usize),
    pub kernel_part_dim: usize,
    pub acting_part_dim: usize,
    pub nilpotency_index: Option<usize>,
    pub truncation: Option<usize>,
    pub retried: bool,
    pub env_dim: usize,
    pub reductive_dim: usize,
    pub a_intersection: Option<AIntersection>,
    /// Original algebra into the saturated one.
    pub embedding: Option<Matrix>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Representation {
    pub algebra: LieAlgebra,
    pub dim_v: usize,
    pub matrices: Vec<Matrix>,
    pub provenance: Provenance,
}

/// Nonzero entries of `ρ([e_i, e_j]) - [ρ(e_i), ρ(e_j)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub i: usize,
    pub j: usize,
    pub nonzero_entries: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub algebra_dim: usize,
    pub dim_v: usize,
    pub shape_ok: bool,
    pub residuals: Vec<Residual>,
    pub kernel_dim: usize,
}

impl VerificationReport {
    pub fn homomorphic(&self) -> bool {
        self.shape_ok && self.residuals.iter().all(|r| r.nonzero_entries == 0)
    }

    pub fn faithful(&self) -> bool {
        self.shape_ok && self.kernel_dim == 0
    }

    pub fn verified(&self) -> bool {
        self.homomorphic() && self.faithful()
    }

    pub fn max_residual_entries(&self) -> usize {
        self.residuals.iter().map(|r| r.nonzero_entries).max().unwrap_or(0)
    }
}

fn linear_combination(mats: &[Matrix], coeffs: &[Rational], size: usize) -> Matrix {
    let mut out = Matrix::zeros(size, size);
    for (m, c) in mats.iter().zip(coeffs) {
        if !c.is_zero() {
            out.add_scaled(c, m);
        }
    }
    out
}

/// Dimension of the kernel of `e ↦ ρ(e)`.
pub fn kernel_dim(matrices: &[Matrix]) -> usize {
    let width = matrices.first().map(|m| m.rows() * m.cols()).unwrap_or(0);
    let mut e = SparseEchelon::new(width);
    for m in matrices {
        let v: SparseVec =
            m.data().iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect();
        e.insert(v);
    }
    matrices.len() - e.dim()
}

/// Recomputes every homomorphism residual and the kernel from scratch.
pub fn verify(algebra: &LieAlgebra, dim_v: usize, matrices: &[Matrix]) -> VerificationReport {
    let n = algebra.dim();
    let shape_ok = matrices.len() == n && matrices.iter().all(|m| m.rows() == dim_v && m.cols() == dim_v);
    let mut report = VerificationReport { algebra_dim: n, dim_v, shape_ok, residuals: Vec::new(), kernel_dim: n };
    if !shape_ok {
        return report;
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = linear_combination(matrices, algebra.structure(i, j), dim_v);
            let diff = &lhs - &matrices[i].commutator(&matrices[j]);
            report.residuals.push(Residual { i, j, nonzero_entries: diff.count_nonzero() });
        }
    }
    report.kernel_dim = kernel_dim(matrices);
    report
}

/// `p'' ⋉ n` on its truncated enveloping module.
#[derive(Clone, Debug)]
pub struct SemidirectRep {
    /// Basis: `acting` RREF basis, then `n` RREF basis.
    pub algebra: LieAlgebra,
    pub matrices: Vec<Matrix>,
    pub module: TruncatedModule,
}

/// `acting` must be a subalgebra acting faithfully on the nilpotent ideal `n`.
pub fn semidirect_representation(
    g: &LieAlgebra,
    acting: &Subspace,
    n: &Subspace,
    truncation: usize,
    max_ambient: usize,
) -> Result<SemidirectRep> {
    let (n_alg, _) = g.subalgebra_on_basis(n)?;
    let derivations: Vec<Matrix> = (0..acting.dim())
        .map(|a| {
            let cols: Vec<Vec<Rational>> = (0..n.dim())
                .map(|j| n.coordinates(&g.bracket(acting.vector(a), n.vector(j))).ok_or(Error::NotIdeal { i: a, j }))
                .collect::<Result<_>>()?;
            Ok(Matrix::from_columns(&cols, n.dim()))
        })
        .collect::<Result<_>>()?;
    let module = build_module(&n_alg, &derivations, truncation, max_ambient)?;

    let mut basis = acting.basis_vectors();
    basis.extend(n.basis_vectors());
    let mut labels: Vec<String> = (0..acting.dim()).map(|a| g.describe(acting.vector(a))).collect();
    labels.extend(n_alg.labels().iter().cloned());
    let (algebra, _) = g.subalgebra_from_basis(&basis, Some(labels))?;
    let mut matrices = module.derivations.clone();
    matrices.extend(module.left.iter().cloned());
    let algebra = algebra.with_name(format!("{}:env", g.name()));

    let report = verify(&algebra, module.dim(), &matrices);
    if !report.homomorphic() {
        return Err(Error::tripwire(Stage::EnvModule, "enveloping module action is not a homomorphism"));
    }
    if !report.faithful() {
        return Err(Error::NotFaithful { truncation, kernel_dim: report.kernel_dim });
    }
    Ok(SemidirectRep { algebra, matrices, module })
}

/// Adjoint plus center shift; zero-dimensional for the zero algebra.
pub fn reductive_representation(p: &LieAlgebra) -> Result<Representation> {
    let dim = p.dim();
    let mut prov = Provenance::default();
    prov.notes.push("reductive summand: adjoint plus center shift".into());
    if dim == 0 {
        return Ok(Representation { algebra: p.clone(), dim_v: 0, matrices: Vec::new(), provenance: prov });
    }
    let derived = p.derived_algebra();
    let center = p.center();
    if !derived.intersect(&center)?.is_zero() || derived.dim() + center.dim() != dim {
        return Err(Error::NotReductive("the algebra is not the direct sum of its derived algebra and center".into()));
    }
    if !derived.is_zero() {
        let (s, _) = p.subalgebra_on_basis(&derived)?;
        let k = s.killing_form();
        if k.rank() != s.dim() {
            return Err(Error::NotReductive("the derived algebra has a degenerate Killing form".into()));
        }
    }
    // Coordinates along center ⊕ derived; the first `c` are π(x).
    let c = center.dim();
    let mut cols = center.basis_vectors();
    cols.extend(derived.basis_vectors());
    let coords = Matrix::from_columns(&cols, dim).inverse()?;
    let matrices: Vec<Matrix> = (0..dim)
        .map(|i| {
            let sigma = Matrix::from_fn(c + 1, c + 1, |r, col| {
                if col == 0 && r > 0 {
                    coords[(r - 1, i)].clone()
                } else {
                    Rational::zero()
                }
            });
            Matrix::block_diag(&[&p.ad_basis(i), &sigma])
        })
        .collect();
    let dim_v = dim + c + 1;
    let report = verify(p, dim_v, &matrices);
    if !report.verified() {
        return Err(Error::tripwire(Stage::Pipeline, "reductive summand representation failed verification"));
    }
    prov.reductive_dim = dim_v;
    Ok(Representation { algebra: p.clone(), dim_v, matrices, provenance: prov })
}

/// Runs the whole construction for `q` and verifies the result.
pub fn ado_representation(q: &LieAlgebra, options: &Options) -> Result<(Representation, VerificationReport)> {
    let pres = saturate(q)?;
    let g = &pres.algebra;
    let split = reductive_split(g, &pres.p, &pres.n)?;
    let mut prov = Provenance {
        steps: pres.trace.clone(),
        saturated: pres.dims(),
        kernel_part_dim: split.kernel_part.dim(),
        acting_part_dim: split.acting_part.dim(),
        embedding: Some(pres.embed_original.clone()),
        ..Provenance::default()
    };

    // The enveloping summand is dropped when p'' ⋉ n is zero.
    let env = if split.acting_part.dim() + pres.n.dim() == 0 {
        prov.notes.push("p'' ⋉ n is zero: enveloping summand omitted".into());
        None
    } else {
        let (n_alg, _) = g.subalgebra_on_basis(&pres.n)?;
        let k = n_alg.nilpotency_index()?;
        prov.nilpotency_index = Some(k);
        let m = options.truncation.unwrap_or_else(|| default_truncation(k));
        let built = semidirect_representation(g, &split.acting_part, &pres.n, m, options.max_ambient);
        let rep = match built {
            Err(Error::NotFaithful { .. }) if options.retry && options.truncation.is_none() => {
                prov.retried = true;
                prov.notes.push(format!("truncation {m} was not faithful; retried at {}", m + 1));
                semidirect_representation(g, &split.acting_part, &pres.n, m + 1, options.max_ambient)?
            }
            other => other?,
        };
        prov.truncation = Some(rep.module.truncation());
        prov.a_intersection = Some(check_a_intersection(&rep.module));
        Some(rep)
    };
    let env_dim = env.as_ref().map_or(0, |e| e.module.dim());

    let (p1, _) = g.subalgebra_on_basis(&split.kernel_part)?;
    let red = reductive_representation(&p1)?;
    prov.notes.extend(red.provenance.notes.iter().cloned());
    prov.env_dim = env_dim;
    prov.reductive_dim = red.dim_v;
    let dim_v = env_dim + red.dim_v;

    // Coordinates of g along p' ⊕ p'' ⊕ n.
    let (d1, d2) = (split.kernel_part.dim(), split.acting_part.dim());
    let mut cols = split.kernel_part.basis_vectors();
    cols.extend(split.acting_part.basis_vectors());
    cols.extend(pres.n.basis_vectors());
    let coords = Matrix::from_columns(&cols, g.dim()).inverse()?;

    let matrices: Vec<Matrix> = (0..q.dim())
        .map(|i| {
            let c = coords.mul_vec(&pres.embed_original.column(i));
            let env_block = match &env {
                Some(e) => linear_combination(&e.matrices, &c[d1..], env_dim),
                None => Matrix::zeros(0, 0),
            };
            let red_block = linear_combination(&red.matrices, &c[..d1], red.dim_v);
            Matrix::block_diag(&[&env_block, &red_block])
        })
        .collect();
    debug_assert!(d2 + pres.n.dim() + d1 == g.dim());

    let rep = Representation { algebra: q.clone(), dim_v, matrices, provenance: prov };
    let report = verify(q, dim_v, &rep.matrices);
    Ok((rep, report))
}
