//! Lie algebras given by rational structure constants, and their intrinsic
//! invariants: brackets, adjoint maps, central and derived series, centers,
//! centralizers, the Killing form, subalgebras and quotients.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::subspace::{unit, Subspace};

/// A finite-dimensional Lie algebra over Q with a named basis.
///
/// `table[i * dim + j]` is the coordinate vector of `[e_i, e_j]`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<Rational>>,
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity on a full table.
    pub fn new(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = labels.len();
        if table.len() != dim * dim || table.iter().any(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch(format!("structure table is not {dim}x{dim}x{dim}")));
        }
        let g = LieAlgebra { name: name.into(), labels, table };
        g.validate()?;
        Ok(g)
    }

    /// Builds an algebra from brackets `[e_i, e_j]` with `i < j`; the
    /// antisymmetric counterparts are filled in and omitted pairs are zero.
    pub fn from_upper(
        name: impl Into<String>,
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), Vec<Rational>)>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut table = vec![vec![Rational::zero(); dim]; dim * dim];
        for ((i, j), v) in brackets {
            if i >= j || j >= dim {
                return Err(Error::DimensionMismatch(format!("bracket pair ({i},{j}) must satisfy i < j < {dim}")));
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch(format!("bracket ({i},{j}) has {} coordinates", v.len())));
            }
            table[j * dim + i] = v.iter().map(|x| -x).collect();
            table[i * dim + j] = v;
        }
        LieAlgebra::new(name, labels, table)
    }

    /// Like [`LieAlgebra::from_upper`] but with integer coordinates, keyed by
    /// `(i, j, k, c)` meaning `c * e_k` is a term of `[e_i, e_j]`.
    pub fn from_terms(name: &str, labels: &[&str], terms: &[(usize, usize, usize, i64)]) -> Result<Self> {
        let dim = labels.len();
        let mut map = std::collections::BTreeMap::new();
        for &(i, j, k, c) in terms {
            let v = map.entry((i, j)).or_insert_with(|| vec![Rational::zero(); dim]);
            v[k] += Rational::from_integer(c);
        }
        LieAlgebra::from_upper(name, labels.iter().map(|s| s.to_string()).collect(), map)
    }

    pub fn abelian(n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        LieAlgebra { name: format!("abelian:{n}"), labels, table: vec![vec![Rational::zero(); n]; n * n] }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i * self.dim() + j]
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let a = self.structure(i, j);
                let b = self.structure(j, i);
                if a.iter().zip(b).any(|(x, y)| !(x + y).is_zero()) {
                    return Err(Error::Antisymmetry { i, j });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (unit(n, i), unit(n, j), unit(n, k));
                    let t1 = self.bracket(&self.bracket(&ei, &ej), &ek);
                    let t2 = self.bracket(&self.bracket(&ej, &ek), &ei);
                    let t3 = self.bracket(&self.bracket(&ek, &ei), &ej);
                    if t1.iter().zip(&t2).zip(&t3).any(|((a, b), c)| !(a + b + c).is_zero()) {
                        return Err(Error::Jacobi { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| v.iter().all(Zero::is_zero))
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        assert!(u.len() == n && v.len() == n, "coordinate length mismatch");
        let mut out = vec![Rational::zero(); n];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(self.structure(i, j)) {
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `v -> [x, v]`; column `j` holds `[x, e_j]`.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| self.bracket(x, &unit(n, j))).collect();
        Matrix::from_columns(&cols, n)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |r, j| self.structure(i, j)[r].clone())
    }

    /// `[S, T] = span{[s, t]}`.
    pub fn bracket_spaces(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for a in 0..s.dim() {
            for b in 0..t.dim() {
                vecs.push(self.bracket(s.vector(a), t.vector(b)));
            }
        }
        Subspace::from_vectors(self.dim(), &vecs)
    }

    pub fn derived_algebra(&self) -> Subspace {
        let full = Subspace::full(self.dim());
        self.bracket_spaces(&full, &full)
    }

    /// `g = γ_1 ⊇ γ_2 = [γ_1, g] ⊇ ...`, listed until it stabilizes (the last
    /// entry repeats no further; it is `0` exactly when `g` is nilpotent).
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().unwrap();
            if last.is_zero() {
                break;
            }
            let next = self.bracket_spaces(last, &full);
            if next.dim() == last.dim() {
                break;
            }
            series.push(next);
        }
        series
    }

    /// `g ⊇ [g, g] ⊇ ...` until it stabilizes.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let last = series.last().unwrap();
            if last.is_zero() {
                break;
            }
            let next = self.bracket_spaces(last, last);
            if next.dim() == last.dim() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    /// Least `k` such that every left-nested bracket of `k` elements vanishes,
    /// i.e. `γ_k = 0`. The zero algebra has index 1.
    pub fn nilpotency_index(&self) -> Result<usize> {
        let series = self.lower_central_series();
        if !series.last().unwrap().is_zero() {
            return Err(Error::NotNilpotent);
        }
        Ok(series.len())
    }

    /// `{v : [s, v] = 0 for all s in S}`.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        let mut stacked = Matrix::zeros(0, n);
        for i in 0..s.dim() {
            stacked = stacked.vstack(&self.ad(s.vector(i)));
        }
        stacked.kernel()
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.dim()))
    }

    /// `κ[i][j] = trace(ad e_i · ad e_j)`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = (&ads[i] * &ads[j]).trace();
                k[(j, i)] = t.clone();
                k[(i, j)] = t;
            }
        }
        k
    }

    /// Checks closure of `s` under the bracket; witness is a basis pair of `s`.
    pub fn check_subalgebra(&self, s: &Subspace) -> Result<()> {
        for i in 0..s.dim() {
            for j in i + 1..s.dim() {
                if !s.contains(&self.bracket(s.vector(i), s.vector(j))) {
                    return Err(Error::NotClosed { i, j });
                }
            }
        }
        Ok(())
    }

    /// Checks `[g, I] ⊆ I`; witness is (basis index of g, basis index of I).
    pub fn check_ideal(&self, ideal: &Subspace) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..ideal.dim() {
                if !ideal.contains(&self.bracket(&unit(n, i), ideal.vector(j))) {
                    return Err(Error::NotIdeal { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn is_ideal(&self, ideal: &Subspace) -> bool {
        self.check_ideal(ideal).is_ok()
    }

    /// Subalgebra on the RREF basis of `s`; also returns the inclusion map
    /// (a `dim g x dim s` matrix).
    pub fn subalgebra_on_basis(&self, s: &Subspace) -> Result<(LieAlgebra, Matrix)> {
        self.check_subalgebra(s)?;
        self.subalgebra_from_basis(&s.basis_vectors(), None)
    }

    /// Subalgebra on an explicit (linearly independent, bracket-closed) list
    /// of vectors, kept in the given order.
    pub fn subalgebra_from_basis(
        &self,
        basis: &[Vec<Rational>],
        labels: Option<Vec<String>>,
    ) -> Result<(LieAlgebra, Matrix)> {
        let n = self.dim();
        let m = basis.len();
        let inclusion = Matrix::from_columns(basis, n);
        if inclusion.rank() != m {
            return Err(Error::DimensionMismatch("subalgebra basis is linearly dependent".into()));
        }
        let mut table = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                let b = self.bracket(&basis[i], &basis[j]);
                let c = inclusion.solve(&b).ok_or(Error::NotClosed { i, j })?;
                table.push(c);
            }
        }
        let labels = labels.unwrap_or_else(|| (0..m).map(|i| self.describe(&basis[i])).collect());
        let sub = LieAlgebra { name: format!("sub({})", self.name), labels, table };
        sub.validate().map_err(|e| Error::tripwire(crate::error::Stage::LieCore, e.to_string()))?;
        Ok((sub, inclusion))
    }

    /// Quotient by an ideal, on the cosets of the complement chosen by the
    /// smallest-index rule.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        self.check_ideal(ideal)?;
        let n = self.dim();
        let comp = ideal.extend_complement(&Subspace::full(n))?;
        let c = comp.dim();
        // Columns: complement vectors then ideal vectors; invert to read coordinates.
        let mut cols = comp.basis_vectors();
        cols.extend(ideal.basis_vectors());
        let change = Matrix::from_columns(&cols, n).inverse()?;
        let projection = change.submatrix(0..c, 0..n);
        let mut table = Vec::with_capacity(c * c);
        for i in 0..c {
            for j in 0..c {
                table.push(projection.mul_vec(&self.bracket(comp.vector(i), comp.vector(j))));
            }
        }
        let labels = (0..c).map(|i| format!("[{}]", self.describe(comp.vector(i)))).collect();
        let algebra = LieAlgebra { name: format!("{}/I", self.name), labels, table };
        algebra.validate().map_err(|e| Error::tripwire(crate::error::Stage::LieCore, e.to_string()))?;
        let section = comp.basis().transpose();
        Ok(Quotient { algebra, projection, section })
    }

    /// Human-readable linear combination of basis labels.
    pub fn describe(&self, v: &[Rational]) -> String {
        describe_combination(&self.labels, v)
    }
}

pub(crate) fn describe_combination(labels: &[String], v: &[Rational]) -> String {
    let mut parts = Vec::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let one: Rational = num_traits::One::one();
        let term = if *c == one {
            l.clone()
        } else if *c == -one {
            format!("-{l}")
        } else {
            format!("{c}*{l}")
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+").replace("+-", "-")
    }
}

/// First basis pair `(i, j)` where the linear map `m: src -> dst` fails to
/// preserve brackets.
pub fn homomorphism_defect(src: &LieAlgebra, dst: &LieAlgebra, m: &Matrix) -> Option<(usize, usize)> {
    let n = src.dim();
    let images: Vec<Vec<Rational>> = (0..n).map(|i| m.column(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            if m.mul_vec(src.structure(i, j)) != dst.bracket(&images[i], &images[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Result of [`LieAlgebra::quotient`].
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    /// `dim g/I x dim g`: coordinates of the coset of a vector.
    pub projection: Matrix,
    /// `dim g x dim g/I`: the complement vectors representing the cosets.
    pub section: Matrix,
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "LieAlgebra {} (dim {}, basis {:?})", self.name, self.dim(), self.labels)?;
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.structure(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    writeln!(f, "  [{}, {}] = {}", self.labels[i], self.labels[j], self.describe(v))?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::q;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x, 1)).collect()
    }

    #[test]
    fn validation() {
        assert!(LieAlgebra::abelian(2).validate().is_ok());
        assert!(catalog::heisenberg().validate().is_ok());
        // [e1,e2] = e1 and [e2,e1] = e1 together.
        let labels = vec!["e1".to_string(), "e2".to_string()];
        let mut table = vec![vec![Rational::zero(); 2]; 4];
        table[1] = v(&[1, 0]);
        table[2] = v(&[1, 0]);
        let err = LieAlgebra::new("bad", labels, table).unwrap_err();
        assert!(matches!(err, Error::Antisymmetry { i: 0, j: 1 }));
    }

    #[test]
    fn jacobi_failure_reports_triple() {
        // [a,b]=c, [a,c]=a: the cyclic sum on (a,b,c) is -c.
        let err = LieAlgebra::from_terms("bad", &["a", "b", "c"], &[(0, 1, 2, 1), (0, 2, 0, 1)]).unwrap_err();
        assert!(matches!(err, Error::Jacobi { i: 0, j: 1, k: 2 }));
    }

    #[test]
    fn brackets_and_ad() {
        let h = catalog::heisenberg();
        assert_eq!(h.bracket(&v(&[1, 0, 0]), &v(&[0, 1, 0])), v(&[0, 0, 1]));
        let s = catalog::solv2();
        assert_eq!(s.ad(&v(&[1, 0])), Matrix::from_ints(&[&[0, 0], &[0, 1]]));
        let x = v(&[3, -2, 7]);
        assert!(h.bracket(&x, &x).iter().all(Zero::is_zero));
    }

    #[test]
    fn central_series_and_index() {
        let dims = |g: &LieAlgebra| g.lower_central_series().iter().map(Subspace::dim).collect::<Vec<_>>();
        assert_eq!(dims(&LieAlgebra::abelian(3)), vec![3, 0]);
        assert_eq!(LieAlgebra::abelian(3).nilpotency_index().unwrap(), 2);
        assert_eq!(dims(&catalog::heisenberg()), vec![3, 1, 0]);
        assert_eq!(catalog::heisenberg().nilpotency_index().unwrap(), 3);
        let zero = LieAlgebra::abelian(0);
        assert_eq!(dims(&zero), vec![0]);
        assert_eq!(zero.nilpotency_index().unwrap(), 1);
        assert!(matches!(catalog::solv2().nilpotency_index(), Err(Error::NotNilpotent)));
    }

    #[test]
    fn solvability_flags() {
        let sl2 = catalog::sl2();
        assert_eq!(sl2.derived_series().last().unwrap().dim(), 3);
        assert!(!sl2.is_solvable());
        let s = catalog::solv2();
        assert!(s.is_solvable() && !s.is_nilpotent());
        let lcs: Vec<usize> = s.lower_central_series().iter().map(Subspace::dim).collect();
        assert_eq!(lcs, vec![2, 1]);
        let h = catalog::heisenberg();
        assert!(h.is_nilpotent() && h.is_solvable());
    }

    #[test]
    fn centers() {
        assert_eq!(catalog::heisenberg().center(), Subspace::coordinate(3, &[2]));
        assert!(LieAlgebra::abelian(4).center().is_full());
        assert!(catalog::sl2().center().is_zero());
    }

    #[test]
    fn killing_forms() {
        assert_eq!(catalog::sl2().killing_form(), Matrix::from_ints(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]));
        assert!(catalog::heisenberg().killing_form().is_zero());
        assert!(LieAlgebra::abelian(3).killing_form().is_zero());
    }

    #[test]
    fn subalgebras_and_quotients() {
        let h = catalog::heisenberg();
        let (sub, inc) = h.subalgebra_on_basis(&Subspace::coordinate(3, &[1, 2])).unwrap();
        assert_eq!(sub.dim(), 2);
        assert!(sub.is_abelian());
        assert_eq!((inc.rows(), inc.cols()), (3, 2));

        let s = catalog::solv2();
        let quo = s.quotient(&Subspace::coordinate(2, &[1])).unwrap();
        assert_eq!(quo.algebra.dim(), 1);
        assert!(quo.algebra.is_abelian());
        assert_eq!(quo.projection, Matrix::from_ints(&[&[1, 0]]));
        assert_eq!(&quo.projection * &quo.section, Matrix::identity(1));

        let err = s.quotient(&Subspace::coordinate(2, &[0])).unwrap_err();
        assert!(matches!(err, Error::NotIdeal { .. }));
        let err = s.subalgebra_on_basis(&Subspace::from_vectors(2, &[v(&[1, 0]), v(&[0, 1])]));
        assert!(err.is_ok());
    }
}
