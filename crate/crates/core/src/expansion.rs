//! Elementary expansions and the loop that turns an arbitrary algebra into a
//! subalgebra of `p ⋉ n` with `q = p ⊕ n`.
//!
//! One step: pick `x` commuting with `p` outside `p + n`, let `I` be a
//! codimension-one ideal containing `p + n` but not `x`, split `d = ad x|_I`
//! as `d_s + d_n`, and replace `q = Qx + I` by `q' = Qy + Qz + I` with
//! `[y, u] = d_s u`, `[z, u] = d_n u`, `[y, z] = 0`. The map `x ↦ y + z`
//! (identity on `I`) embeds `q` into `q'`; `y` joins `p`, `z` joins `n`.

use num_traits::{One, Zero};

use crate::decompose::{levi_subalgebra, nilpotent_seed};
use crate::error::{Error, Result, Stage};
use crate::jordan::{jc_decompose_derivation, JcDecomposition};
use crate::lie::{homomorphism_defect, LieAlgebra};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::subspace::{unit, Subspace};

#[derive(Clone, Debug)]
pub struct ExpansionResult {
    /// Basis: `y`, `z`, then the RREF basis of `I`.
    pub expanded: LieAlgebra,
    /// `dim q' x dim q`.
    pub embedding: Matrix,
    pub ideal: Subspace,
    /// Splitting of `ad x|_I` in the RREF basis of `I`.
    pub jc: JcDecomposition,
}

/// Record of one expansion step, in the coordinates of the algebra it acted on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepSummary {
    pub x: Vec<Rational>,
    pub x_label: String,
    pub ideal: Subspace,
    pub d: Matrix,
    pub d_s: Matrix,
    pub d_n: Matrix,
    /// `(dim q, dim p, dim n)` after the step.
    pub dims_after: (usize, usize, usize),
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub original: LieAlgebra,
    pub algebra: LieAlgebra,
    pub p: Subspace,
    pub n: Subspace,
    /// `dim q x dim original`.
    pub embed_original: Matrix,
    pub trace: Vec<StepSummary>,
}

fn tripwire(msg: impl Into<String>) -> Error {
    Error::tripwire(Stage::Expansion, msg)
}

fn fresh_label(base: &str, taken: &[String]) -> String {
    if !taken.iter().any(|l| l == base) {
        return base.to_string();
    }
    (2..).map(|i| format!("{base}{i}")).find(|c| !taken.iter().any(|l| l == c)).unwrap()
}

fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn elementary_expansion(q: &LieAlgebra, ideal: &Subspace, x: &[Rational]) -> Result<ExpansionResult> {
    let dim = q.dim();
    if x.len() != dim || ideal.ambient_dim() != dim {
        return Err(Error::DimensionMismatch("expansion data does not match the algebra".into()));
    }
    q.check_ideal(ideal)?;
    if ideal.dim() + 1 != dim {
        return Err(Error::DimensionMismatch(format!("ideal has codimension {}, expected 1", dim - ideal.dim())));
    }
    if ideal.contains(x) {
        return Err(Error::VectorInIdeal);
    }

    let m = ideal.dim();
    let (sub, _) = q.subalgebra_on_basis(ideal)?;
    let d = Matrix::from_columns(
        &(0..m).map(|j| ideal.coordinates(&q.bracket(x, ideal.vector(j))).expect("I is an ideal")).collect::<Vec<_>>(),
        m,
    );
    let jc = jc_decompose_derivation(&sub, &d)?;

    // q' coordinates: 0 = y, 1 = z, 2.. = basis of I.
    let n2 = m + 2;
    let lift = |c: &[Rational]| {
        let mut v = vec![Rational::zero(); n2];
        v[2..].clone_from_slice(c);
        v
    };
    let mut brackets = Vec::new();
    for j in 0..m {
        brackets.push(((0, j + 2), lift(&jc.semisimple.column(j))));
        brackets.push(((1, j + 2), lift(&jc.nilpotent.column(j))));
        for k in j + 1..m {
            brackets.push(((j + 2, k + 2), lift(sub.structure(j, k))));
        }
    }
    let mut labels: Vec<String> = (0..m)
        .map(|j| {
            let v = ideal.vector(j);
            match v.iter().filter(|c| !c.is_zero()).count() {
                1 if v.iter().any(|c| c.is_one()) => q.describe(v),
                _ => format!("({})", q.describe(v)),
            }
        })
        .collect();
    let y = fresh_label("y", &labels);
    labels.insert(0, y);
    let z = fresh_label("z", &labels);
    labels.insert(1, z);
    let expanded = LieAlgebra::from_upper(q.name(), labels, brackets)
        .map_err(|e| tripwire(format!("expanded algebra is not a Lie algebra: {e}")))?;

    // e_k = a x + sum c_j b_j  ==>  e_k ↦ a (y + z) + sum c_j b_j.
    let mut cols = vec![x.to_vec()];
    cols.extend(ideal.basis_vectors());
    let coords = Matrix::from_columns(&cols, dim).inverse()?;
    let embedding = Matrix::from_fn(n2, dim, |r, k| match r {
        0 | 1 => coords[(0, k)].clone(),
        _ => coords[(r - 1, k)].clone(),
    });

    if let Some((i, j)) = homomorphism_defect(q, &expanded, &embedding) {
        return Err(tripwire(format!("embedding is not a homomorphism at ({i},{j})")));
    }
    if embedding.rank() != dim {
        return Err(tripwire("embedding is not injective"));
    }
    if expanded.derived_algebra() != q.derived_algebra().image(&embedding)? {
        return Err(tripwire("[q', q'] differs from the image of [q, q]"));
    }
    Ok(ExpansionResult { expanded, embedding, ideal: ideal.clone(), jc })
}

impl Presentation {
    pub fn defect(&self) -> usize {
        self.algebra.dim() - self.p.dim() - self.n.dim()
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.algebra.dim(), self.p.dim(), self.n.dim())
    }

    /// Re-verifies every invariant; violations are tripwires.
    pub fn check(&self) -> Result<()> {
        let q = &self.algebra;
        q.check_subalgebra(&self.p).map_err(|e| tripwire(format!("p is not a subalgebra: {e}")))?;
        if !self.p.intersect(&self.n)?.is_zero() {
            return Err(tripwire("p and n intersect"));
        }
        q.check_ideal(&self.n).map_err(|e| tripwire(format!("n is not an ideal: {e}")))?;
        let (na, _) = q.subalgebra_on_basis(&self.n)?;
        if !na.is_nilpotent() {
            return Err(tripwire("n is not nilpotent"));
        }
        if !self.p.sum(&self.n)?.contains_subspace(&q.derived_algebra())? {
            return Err(tripwire("[q, q] is not inside p + n"));
        }
        if let Some((i, j)) = homomorphism_defect(&self.original, q, &self.embed_original) {
            return Err(tripwire(format!("embedding of the original algebra fails at ({i},{j})")));
        }
        if self.embed_original.rank() != self.original.dim() {
            return Err(tripwire("embedding of the original algebra is not injective"));
        }
        Ok(())
    }
}

pub fn initial_presentation(q: &LieAlgebra) -> Result<Presentation> {
    let levi = levi_subalgebra(q)?;
    let n = nilpotent_seed(q, &levi)?;
    let pres = Presentation {
        original: q.clone(),
        algebra: q.clone(),
        p: levi.levi,
        n,
        embed_original: Matrix::identity(q.dim()),
        trace: Vec::new(),
    };
    pres.check()?;
    Ok(pres)
}

pub fn expansion_step(pres: &Presentation) -> Result<Presentation> {
    let defect = pres.defect();
    if defect == 0 {
        return Err(tripwire("expansion step requested with zero defect"));
    }
    let q = &pres.algebra;
    let dim = q.dim();
    let pn = pres.p.sum(&pres.n)?;
    let cent = q.centralizer(&pres.p);
    let x = (0..cent.dim())
        .map(|i| cent.vector(i).to_vec())
        .find(|v| !pn.contains(v))
        .ok_or(Error::NoCommutingComplement)?;
    let with_x = pn.sum(&Subspace::from_vectors(dim, std::slice::from_ref(&x)))?;
    let ideal = pn.sum(&with_x.extend_complement(&Subspace::full(dim))?)?;

    let step = elementary_expansion(q, &ideal, &x)?;
    let emb = &step.embedding;
    let dim2 = dim + 1;
    let p = Subspace::from_vectors(dim2, &[unit(dim2, 0)]).sum(&pres.p.image(emb)?)?;
    let n = Subspace::from_vectors(dim2, &[unit(dim2, 1)]).sum(&pres.n.image(emb)?)?;

    let q2 = &step.expanded;
    let y = unit(dim2, 0);
    for i in 0..pres.p.dim() {
        if !is_zero_vec(&q2.bracket(&y, &emb.mul_vec(pres.p.vector(i)))) {
            return Err(tripwire("y does not commute with p"));
        }
    }

    let mut trace = pres.trace.clone();
    trace.push(StepSummary {
        x_label: q.describe(&x),
        x,
        ideal: ideal.clone(),
        d: &step.jc.semisimple + &step.jc.nilpotent,
        d_s: step.jc.semisimple.clone(),
        d_n: step.jc.nilpotent.clone(),
        dims_after: (dim2, p.dim(), n.dim()),
    });
    let next = Presentation {
        original: pres.original.clone(),
        algebra: step.expanded,
        p,
        n,
        embed_original: emb * &pres.embed_original,
        trace,
    };
    next.check()?;
    if next.defect() + 1 != defect {
        return Err(tripwire(format!("defect went from {defect} to {}", next.defect())));
    }
    Ok(next)
}

/// Expands until `q = p ⊕ n`.
pub fn saturate(q: &LieAlgebra) -> Result<Presentation> {
    let mut pres = initial_presentation(q)?;
    let budget = pres.defect();
    let mut steps = 0;
    while pres.defect() > 0 {
        if steps == budget {
            return Err(tripwire(format!("expansion did not terminate within {budget} steps")));
        }
        pres = expansion_step(&pres)?;
        steps += 1;
    }
    if !pres.p.sum(&pres.n)?.is_full() {
        return Err(tripwire("saturated presentation is not p ⊕ n"));
    }
    Ok(pres)
}
