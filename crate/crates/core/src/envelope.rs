//! The enveloping algebra `U(n)` of a nilpotent Lie algebra, truncated to a
//! finite-dimensional module `U(n)/I` over `p ⋉ n`, where `I` is spanned by all
//! products of more than `M` elements of `n`.
//!
//! Elements are kept in PBW normal form `e_0^{a_0} ... e_{m-1}^{a_{m-1}}`.
//! Everything is computed in `L`, the span of monomials of degree `≤ M`:
//!
//! * Give each basis vector the weight `w` = the largest `j` with `e ∈ γ_j`
//!   (lower central series). When the basis is *adapted* (every `γ_j` is
//!   spanned by basis vectors) brackets never lower weight, so a PBW component
//!   of a product of weight `W` has degree `≥ W/(k-1)`. Anything of weight
//!   above `B = M(k-1)` is therefore invisible in `L` and may be dropped.
//! * `I ∩ L` is the smallest subspace of `L` containing `π_L(e_i · b)` for `b`
//!   in the span `S_M` of words of length `M`, and `π_L(e_i · h)` for ordered
//!   monomials `h` of degree `> M`, and closed under `v ↦ π_L(e_j v)`. (Both
//!   sides are `I ∩ L`: the closure plus all monomials of degree `> M` is a left
//!   ideal containing every word of length `M + 1`, and `π_L` maps `I` into `I`.)
//!
//! A non-adapted basis is replaced by an adapted one internally; the returned
//! matrices always refer to the caller's basis.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::echelon::{axpy, SparseEchelon, SparseVec};
use crate::error::{Error, Result, Stage};
use crate::jordan::derivation_defect;
use crate::lie::{describe_combination, LieAlgebra};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::subspace::Subspace;

pub const DEFAULT_MAX_AMBIENT: usize = 20_000;

/// Exponent vector of an ordered PBW monomial.
///
/// Ordered by degree, then lexicographically with larger leading exponents
/// first (`x^2 < xy < y^2`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PbwMonomial {
    exponents: Vec<u32>,
}

impl PbwMonomial {
    pub fn one(n: usize) -> Self {
        PbwMonomial { exponents: vec![0; n] }
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        PbwMonomial { exponents }
    }

    pub fn generator(n: usize, i: usize) -> Self {
        Self::one(n).raised(i)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&a| a as usize).sum()
    }

    pub fn weight(&self, weights: &[usize]) -> usize {
        self.exponents.iter().zip(weights).map(|(&a, &w)| a as usize * w).sum()
    }

    /// Smallest index with a nonzero exponent.
    pub fn first_letter(&self) -> Option<usize> {
        self.exponents.iter().position(|&a| a > 0)
    }

    fn raised(&self, i: usize) -> Self {
        let mut e = self.exponents.clone();
        e[i] += 1;
        PbwMonomial { exponents: e }
    }

    fn lowered(&self, i: usize) -> Self {
        let mut e = self.exponents.clone();
        e[i] -= 1;
        PbwMonomial { exponents: e }
    }

    pub fn display(&self, labels: &[String]) -> String {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .zip(labels)
            .filter(|(&a, _)| a > 0)
            .map(|(&a, l)| if a == 1 { l.clone() } else { format!("{l}^{a}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.exponents)
    }
}

/// All monomials in `n` letters of degree `≤ max_degree`, in increasing order.
pub fn monomials_up_to(n: usize, max_degree: usize) -> Vec<PbwMonomial> {
    fn fill(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<PbwMonomial>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(PbwMonomial::new(cur.clone()));
            return;
        }
        for a in (0..=left).rev() {
            cur[pos] = a;
            fill(pos + 1, left - a, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(PbwMonomial::one(0));
        return out;
    }
    for d in 0..=max_degree as u32 {
        fill(0, d, &mut vec![0; n], &mut out);
    }
    out
}

/// A linear combination of PBW monomials.
pub type Element = BTreeMap<PbwMonomial, Rational>;

type Terms = Rc<Vec<(PbwMonomial, Rational)>>;

fn add_terms(acc: &mut Element, c: &Rational, terms: &[(PbwMonomial, Rational)]) {
    for (m, x) in terms {
        let e = acc.entry(m.clone()).or_insert_with(Rational::zero);
        *e += c * x;
        if e.is_zero() {
            acc.remove(m);
        }
    }
}

/// PBW rewriting engine with memoised left multiplication by generators.
///
/// Optionally drops every component whose weight exceeds a cap; since left
/// multiplication never lowers weight this commutes with further products.
pub struct Straightener {
    dim: usize,
    brackets: Vec<Vec<(usize, Rational)>>,
    weights: Vec<usize>,
    cap: usize,
    memo: HashMap<(usize, PbwMonomial), Terms>,
}

impl Straightener {
    /// Exact rewriting with no truncation.
    pub fn new(n: &LieAlgebra) -> Self {
        Self::with_weights(n, vec![1; n.dim()], usize::MAX)
    }

    fn with_weights(n: &LieAlgebra, weights: Vec<usize>, cap: usize) -> Self {
        let dim = n.dim();
        let mut brackets = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                brackets.push(
                    n.structure(i, j)
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (k, c.clone()))
                        .collect(),
                );
            }
        }
        Straightener { dim, brackets, weights, cap, memo: HashMap::new() }
    }

    /// Normal form of `e_i · m`.
    pub fn mul_generator(&mut self, i: usize, m: &PbwMonomial) -> Terms {
        let w = m.weight(&self.weights).saturating_add(self.weights[i]);
        if w > self.cap {
            return Rc::new(Vec::new());
        }
        let j = match m.first_letter() {
            Some(j) if j < i => j,
            _ => return Rc::new(vec![(m.raised(i), Rational::one())]),
        };
        let key = (i, m.clone());
        if let Some(t) = self.memo.get(&key) {
            return t.clone();
        }
        // e_i e_j r = e_j (e_i r) + [e_i, e_j] r
        let rest = m.lowered(j);
        let mut acc = Element::new();
        let inner = self.mul_generator(i, &rest);
        for (mono, c) in inner.iter() {
            let t = self.mul_generator(j, mono);
            add_terms(&mut acc, c, &t);
        }
        let br = self.brackets[i * self.dim + j].clone();
        for (k, c) in &br {
            let t = self.mul_generator(*k, &rest);
            add_terms(&mut acc, c, &t);
        }
        let out: Terms = Rc::new(acc.into_iter().collect());
        self.memo.insert(key, out.clone());
        out
    }

    pub fn mul_vector(&mut self, v: &[Rational], x: &Element) -> Element {
        let mut acc = Element::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (m, a) in x {
                let t = self.mul_generator(i, m);
                add_terms(&mut acc, &(c * a), &t);
            }
        }
        acc
    }

    /// Normal form of the product `w_1 w_2 ... w_N` of vectors of `n`.
    pub fn straighten(&mut self, word: &[Vec<Rational>]) -> Element {
        let mut x = Element::new();
        x.insert(PbwMonomial::one(self.dim), Rational::one());
        for v in word.iter().rev() {
            x = self.mul_vector(v, &x);
        }
        x
    }
}

/// Weight of each basis vector, or `None` if the basis is not adapted to the
/// lower central series.
pub fn basis_weights(n: &LieAlgebra) -> Option<Vec<usize>> {
    let series = n.lower_central_series();
    let dim = n.dim();
    let mut weights = vec![0; dim];
    for (j, g) in series.iter().enumerate() {
        let members: Vec<usize> = (0..dim).filter(|&i| g.contains(&crate::subspace::unit(dim, i))).collect();
        if members.len() != g.dim() {
            return None;
        }
        for i in members {
            weights[i] = j + 1;
        }
    }
    Some(weights)
}

pub fn is_adapted(n: &LieAlgebra) -> bool {
    basis_weights(n).is_some()
}

/// A basis adapted to the lower central series, built from the deepest term
/// outwards out of the RREF bases of the `γ_j`, then sorted by pivot column.
/// Returns the given basis when it is already adapted.
pub fn adapted_basis(n: &LieAlgebra) -> Vec<Vec<Rational>> {
    let dim = n.dim();
    if is_adapted(n) {
        return (0..dim).map(|i| crate::subspace::unit(dim, i)).collect();
    }
    let series = n.lower_central_series();
    let mut chosen: Vec<Vec<Rational>> = Vec::new();
    let mut acc = Subspace::zero(dim);
    for g in series.iter().rev() {
        for v in g.basis_vectors() {
            if !acc.contains(&v) {
                acc = acc.sum(&Subspace::from_vectors(dim, std::slice::from_ref(&v))).expect("same ambient");
                chosen.push(v);
            }
        }
    }
    let pivot = |v: &Vec<Rational>| v.iter().position(|x| !x.is_zero()).unwrap_or(dim);
    chosen.sort_by_key(pivot);
    chosen
}

pub fn default_truncation(nilpotency_index: usize) -> usize {
    nilpotency_index + 2
}

pub fn ambient_bound(nilpotency_index: usize, truncation: usize) -> usize {
    if nilpotency_index <= 2 {
        truncation
    } else {
        truncation * (nilpotency_index - 1)
    }
}

/// Number of monomials of degree `≤ d` in `n` letters, saturating.
pub fn monomial_count(n: usize, d: usize) -> usize {
    let mut c: u128 = 1;
    for i in 1..=n as u128 {
        c = c * (d as u128 + i) / i;
        if c > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    c as usize
}

/// `I ∩ L` in the monomial basis of an adapted basis of `n`.
#[derive(Clone, Debug)]
pub struct LowIdeal {
    pub adapted: LieAlgebra,
    /// Columns: the adapted basis in coordinates of the original basis.
    pub basis_change: Matrix,
    pub weights: Vec<usize>,
    pub nilpotency_index: usize,
    pub truncation: usize,
    pub ambient_bound: usize,
    pub monomials: Vec<PbwMonomial>,
    pub ideal: Subspace,
}

struct Work {
    adapted: LieAlgebra,
    basis_change: Matrix,
    weights: Vec<usize>,
    k: usize,
    truncation: usize,
    bound: usize,
    monomials: Vec<PbwMonomial>,
    index: HashMap<PbwMonomial, usize>,
    engine: Straightener,
    cache: Vec<Option<Rc<SparseVec>>>,
    ideal: SparseEchelon,
}

fn tripwire(msg: impl Into<String>) -> Error {
    Error::tripwire(Stage::EnvModule, msg)
}

impl Work {
    fn new(n: &LieAlgebra, truncation: usize, max_ambient: usize) -> Result<Self> {
        if truncation < 2 {
            return Err(Error::TruncationTooSmall(truncation));
        }
        let k = n.nilpotency_index()?;
        let dim = n.dim();
        let bound = ambient_bound(k, truncation);
        let ambient = monomial_count(dim, bound);
        if ambient > max_ambient {
            return Err(Error::AmbientTooLarge { size: ambient, limit: max_ambient });
        }
        let basis = adapted_basis(n);
        let (adapted, basis_change) = n.subalgebra_from_basis(&basis, None)?;
        let adapted = if basis_change == Matrix::identity(dim) { n.clone() } else { adapted };
        let weights = basis_weights(&adapted).ok_or_else(|| tripwire("constructed basis is not adapted"))?;
        let monomials = monomials_up_to(dim, truncation);
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let width = monomials.len();
        let engine = Straightener::with_weights(&adapted, weights.clone(), bound);
        Ok(Work {
            adapted,
            basis_change,
            weights,
            k,
            truncation,
            bound,
            cache: vec![None; dim * width],
            monomials,
            index,
            engine,
            ideal: SparseEchelon::new(width),
        })
    }

    fn dim(&self) -> usize {
        self.adapted.dim()
    }

    fn width(&self) -> usize {
        self.monomials.len()
    }

    fn project(&self, terms: &[(PbwMonomial, Rational)]) -> SparseVec {
        terms.iter().filter(|(m, _)| m.degree() <= self.truncation).map(|(m, c)| (self.index[m], c.clone())).collect()
    }

    /// `π_L(e_i · monomial[idx])`.
    fn left_monomial(&mut self, i: usize, idx: usize) -> Rc<SparseVec> {
        let slot = i * self.width() + idx;
        if let Some(v) = &self.cache[slot] {
            return v.clone();
        }
        let m = self.monomials[idx].clone();
        let terms = self.engine.mul_generator(i, &m);
        let v = Rc::new(self.project(&terms));
        self.cache[slot] = Some(v.clone());
        v
    }

    fn left(&mut self, i: usize, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (&idx, c) in v {
            let t = self.left_monomial(i, idx);
            axpy(&mut acc, c, t.iter().map(|(k, x)| (*k, x.clone())));
        }
        acc
    }

    fn one(&self) -> SparseVec {
        std::iter::once((self.index[&PbwMonomial::one(self.dim())], Rational::one())).collect()
    }

    fn compute_ideal(&mut self) -> Result<()> {
        let m = self.dim();
        let width = self.width();
        let mut queue: VecDeque<SparseVec> = VecDeque::new();

        // Words of length M, then one more letter.
        let mut span = vec![self.one()];
        for _ in 0..self.truncation {
            let mut e = SparseEchelon::new(width);
            let mut next = Vec::new();
            for b in &span {
                for i in 0..m {
                    let v = self.left(i, b);
                    if let Some(r) = e.insert(v) {
                        next.push(r);
                    }
                }
            }
            span = next;
        }
        for b in &span {
            for i in 0..m {
                let v = self.left(i, b);
                if let Some(r) = self.ideal.insert(v) {
                    queue.push_back(r);
                }
            }
        }

        // Ordered monomials beyond degree M whose products can still reach L.
        if self.bound > self.truncation {
            for h in self.high_monomials() {
                let first = h.first_letter().expect("degree > 0");
                let wh = h.weight(&self.weights);
                for i in first + 1..m {
                    if wh + self.weights[i] > self.bound {
                        continue;
                    }
                    let terms = self.engine.mul_generator(i, &h);
                    let v = self.project(&terms);
                    if let Some(r) = self.ideal.insert(v) {
                        queue.push_back(r);
                    }
                }
            }
        }

        while let Some(v) = queue.pop_front() {
            for j in 0..m {
                let w = self.left(j, &v);
                if let Some(r) = self.ideal.insert(w) {
                    queue.push_back(r);
                }
            }
        }
        Ok(())
    }

    /// Monomials of degree `> M` and weight `< B`.
    fn high_monomials(&self) -> Vec<PbwMonomial> {
        fn walk(
            pos: usize,
            budget: usize,
            w: &[usize],
            cur: &mut Vec<u32>,
            min_deg: usize,
            out: &mut Vec<PbwMonomial>,
        ) {
            if pos == cur.len() {
                let deg: usize = cur.iter().map(|&a| a as usize).sum();
                if deg >= min_deg {
                    out.push(PbwMonomial::new(cur.clone()));
                }
                return;
            }
            let mut a = 0;
            while a * w[pos] <= budget {
                cur[pos] = a as u32;
                walk(pos + 1, budget - a * w[pos], w, cur, min_deg, out);
                a += 1;
            }
            cur[pos] = 0;
        }
        let mut out = Vec::new();
        walk(0, self.bound - 1, &self.weights, &mut vec![0; self.dim()], self.truncation + 1, &mut out);
        out.sort();
        out
    }

    /// Leibniz extension of a derivation (given in the adapted basis) to `L`,
    /// one image per monomial.
    fn lift_derivation(&mut self, d: &Matrix) -> Vec<SparseVec> {
        let width = self.width();
        let mut images: Vec<SparseVec> = Vec::with_capacity(width);
        for idx in 0..width {
            let m = self.monomials[idx].clone();
            let Some(a) = m.first_letter() else {
                images.push(SparseVec::new());
                continue;
            };
            // D(e_a r) = (D e_a) r + e_a D(r)
            let rest = self.index[&m.lowered(a)];
            let mut acc = SparseVec::new();
            for k in 0..self.dim() {
                let c = &d[(k, a)];
                if !c.is_zero() {
                    let t = self.left_monomial(k, rest);
                    axpy(&mut acc, c, t.iter().map(|(k, x)| (*k, x.clone())));
                }
            }
            let dr = images[rest].clone();
            let t = self.left(a, &dr);
            axpy(&mut acc, &Rational::one(), t);
            images.push(acc);
        }
        images
    }

    fn low_ideal(&self) -> LowIdeal {
        LowIdeal {
            adapted: self.adapted.clone(),
            basis_change: self.basis_change.clone(),
            weights: self.weights.clone(),
            nilpotency_index: self.k,
            truncation: self.truncation,
            ambient_bound: self.bound,
            monomials: self.monomials.clone(),
            ideal: self.ideal.to_subspace(),
        }
    }
}

fn apply_lift(images: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut acc = SparseVec::new();
    for (&idx, c) in v {
        axpy(&mut acc, c, images[idx].iter().map(|(k, x)| (*k, x.clone())));
    }
    acc
}

pub fn low_ideal(n: &LieAlgebra, truncation: usize, max_ambient: usize) -> Result<LowIdeal> {
    let mut w = Work::new(n, truncation, max_ambient)?;
    w.compute_ideal()?;
    Ok(w.low_ideal())
}

/// `U(n)/I` with the action matrices of `n` and of the given derivations.
#[derive(Clone, Debug)]
pub struct TruncatedModule {
    pub n: LieAlgebra,
    pub low: LowIdeal,
    /// Indices into `low.monomials` of the coset representatives.
    pub module_basis: Vec<usize>,
    /// Left multiplication by each basis vector of `n` (caller's basis).
    pub left: Vec<Matrix>,
    /// Lifted derivations, in the order given.
    pub derivations: Vec<Matrix>,
}

impl TruncatedModule {
    pub fn dim(&self) -> usize {
        self.module_basis.len()
    }

    pub fn nilpotency_index(&self) -> usize {
        self.low.nilpotency_index
    }

    pub fn truncation(&self) -> usize {
        self.low.truncation
    }

    pub fn basis_labels(&self) -> Vec<String> {
        let labels = self.low.adapted.labels();
        self.module_basis.iter().map(|&i| self.low.monomials[i].display(labels)).collect()
    }
}

/// Builds the module and checks the module axioms exactly.
///
/// `derivations` are `dim n x dim n` matrices in the basis of `n`.
pub fn build_module(
    n: &LieAlgebra,
    derivations: &[Matrix],
    truncation: usize,
    max_ambient: usize,
) -> Result<TruncatedModule> {
    for d in derivations {
        if d.rows() != n.dim() || d.cols() != n.dim() {
            return Err(Error::DimensionMismatch("derivation does not match n".into()));
        }
        if let Some((i, j)) = derivation_defect(n, d) {
            return Err(Error::NotDerivation { i, j });
        }
    }
    let mut w = Work::new(n, truncation, max_ambient)?;
    w.compute_ideal()?;

    let dim = w.dim();
    let width = w.width();
    let basis: Vec<usize> = (0..width).filter(|&i| !w.ideal.is_pivot(i)).collect();
    let mut position = vec![usize::MAX; width];
    for (r, &i) in basis.iter().enumerate() {
        position[i] = r;
    }
    let size = basis.len();
    let to_matrix = |w: &Work, columns: Vec<SparseVec>| -> Matrix {
        let mut mat = Matrix::zeros(size, size);
        for (c, mut v) in columns.into_iter().enumerate() {
            w.ideal.reduce(&mut v);
            for (k, x) in v {
                mat[(position[k], c)] = x;
            }
        }
        mat
    };
    let unit = |i: usize| -> SparseVec { std::iter::once((i, Rational::one())).collect() };

    let p = w.basis_change.clone();
    let p_inv = p.inverse()?;
    let local: Vec<Matrix> = derivations.iter().map(|d| &(&p_inv * d) * &p).collect();

    let mut left_adapted = Vec::with_capacity(dim);
    for i in 0..dim {
        let cols: Vec<SparseVec> = basis.iter().map(|&b| w.left(i, &unit(b))).collect();
        left_adapted.push(to_matrix(&w, cols));
    }
    let lifts: Vec<Vec<SparseVec>> = local.iter().map(|d| w.lift_derivation(d)).collect();
    let der_mats: Vec<Matrix> =
        lifts.iter().map(|img| to_matrix(&w, basis.iter().map(|&b| img[b].clone()).collect())).collect();

    // I ∩ L must be stable under every operator.
    let rows: Vec<SparseVec> = w.ideal.rows().map(|r| r.iter().cloned().collect()).collect();
    for r in &rows {
        for i in 0..dim {
            let image = w.left(i, r);
            if !w.ideal.contains(&image) {
                return Err(tripwire(format!(
                    "low ideal not stable under left multiplication by {}",
                    w.adapted.labels()[i]
                )));
            }
        }
        for (a, img) in lifts.iter().enumerate() {
            if !w.ideal.contains(&apply_lift(img, r)) {
                return Err(tripwire(format!("low ideal not stable under derivation {a}")));
            }
        }
    }

    let combo = |mats: &[Matrix], coeffs: &[Rational]| -> Matrix {
        let mut out = Matrix::zeros(size, size);
        for (m, c) in mats.iter().zip(coeffs) {
            if !c.is_zero() {
                out.add_scaled(c, m);
            }
        }
        out
    };
    for i in 0..dim {
        for j in i + 1..dim {
            let lhs = left_adapted[i].commutator(&left_adapted[j]);
            if lhs != combo(&left_adapted, w.adapted.structure(i, j)) {
                return Err(tripwire(format!("[L_{i}, L_{j}] != L_[{i},{j}]")));
            }
        }
    }
    for (a, (d, dm)) in local.iter().zip(&der_mats).enumerate() {
        for i in 0..dim {
            if dm.commutator(&left_adapted[i]) != combo(&left_adapted, &d.column(i)) {
                return Err(tripwire(format!("[D_{a}, L_{i}] != L_(D_{a} e_{i})")));
            }
        }
    }
    for a in 0..local.len() {
        for b in a + 1..local.len() {
            let lifted = w.lift_derivation(&local[a].commutator(&local[b]));
            let rhs = to_matrix(&w, basis.iter().map(|&i| lifted[i].clone()).collect());
            if der_mats[a].commutator(&der_mats[b]) != rhs {
                return Err(tripwire(format!("[D_{a}, D_{b}] is not the lift of the commutator")));
            }
        }
    }

    // Back to the caller's basis: e_j = sum_i p_inv[i][j] f_i.
    let left = (0..dim).map(|j| combo(&left_adapted, &p_inv.column(j))).collect();
    Ok(TruncatedModule { n: n.clone(), low: w.low_ideal(), module_basis: basis, left, derivations: der_mats })
}

/// Outcome of comparing `A = span{1, x, x_1 x_2}` with `I ∩ L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AIntersection {
    /// `A ∩ I = 0`.
    pub holds: bool,
    /// `span{1, x} ∩ I = 0`; this is what faithfulness on `n` needs.
    pub degree_one_holds: bool,
    /// A nonzero element of `A ∩ I` (coordinates over `low.monomials`).
    pub witness: Option<Vec<Rational>>,
}

pub fn check_a_intersection(tm: &TruncatedModule) -> AIntersection {
    let low = &tm.low;
    let m = low.adapted.dim();
    let width = low.monomials.len();
    let pos: HashMap<&PbwMonomial, usize> = low.monomials.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let vec_of = |terms: &[(PbwMonomial, Rational)]| {
        let mut v = vec![Rational::zero(); width];
        for (mono, c) in terms {
            v[pos[mono]] += c;
        }
        v
    };
    let gen = |i: usize| PbwMonomial::generator(m, i);
    let mut low_deg = vec![vec_of(&[(PbwMonomial::one(m), Rational::one())])];
    for i in 0..m {
        low_deg.push(vec_of(&[(gen(i), Rational::one())]));
    }
    let mut quad = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let (a, b) = (i.min(j), i.max(j));
            let ordered = PbwMonomial::new({
                let mut e = vec![0; m];
                e[a] += 1;
                e[b] += 1;
                e
            });
            let mut terms = vec![(ordered, Rational::one())];
            if i > j {
                for (k, c) in low.adapted.structure(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        terms.push((gen(k), c.clone()));
                    }
                }
            }
            quad.push(vec_of(&terms));
        }
    }
    let meets = |vecs: &[Vec<Rational>]| -> Option<Vec<Rational>> {
        let a = Subspace::from_vectors(width, vecs);
        let reduced: Vec<Vec<Rational>> = a.basis_vectors().iter().map(|v| low.ideal.reduce(v)).collect();
        let r = Matrix::from_columns(&reduced, width);
        let ker = r.kernel_basis();
        ker.first().map(|c| a.basis().transpose().mul_vec(c))
    };
    let deg1 = meets(&low_deg);
    let mut all = low_deg;
    all.extend(quad);
    let witness = meets(&all);
    AIntersection { holds: witness.is_none(), degree_one_holds: deg1.is_none(), witness }
}

/// Normal form of a product of vectors of `n` in its own basis. Words longer
/// than `bound` are rejected; on an adapted basis the result is checked to
/// lie in degrees `⌈N/(k-1)⌉ ..= N`.
pub fn straighten(n: &LieAlgebra, word: &[Vec<Rational>], bound: usize) -> Result<Element> {
    if word.len() > bound {
        return Err(Error::WordTooLong { len: word.len(), bound });
    }
    if word.iter().any(|v| v.len() != n.dim()) {
        return Err(Error::DimensionMismatch("word letter has wrong length".into()));
    }
    let k = n.nilpotency_index()?;
    let out = Straightener::new(n).straighten(word);
    let len = word.len();
    if k >= 2 && is_adapted(n) {
        let low = len.div_ceil(k - 1);
        if let Some(m) = out.keys().find(|m| m.degree() < low || m.degree() > len) {
            return Err(tripwire(format!(
                "component {} of a length-{len} word violates the degree filtration",
                m.display(n.labels())
            )));
        }
    }
    Ok(out)
}

/// Renders an element with the labels of `n`.
pub fn describe_element(n: &LieAlgebra, x: &Element) -> String {
    if x.is_empty() {
        return "0".into();
    }
    let labels: Vec<String> = x.keys().map(|m| m.display(n.labels())).collect();
    let coeffs: Vec<Rational> = x.values().cloned().collect();
    describe_combination(&labels, &coeffs)
}
