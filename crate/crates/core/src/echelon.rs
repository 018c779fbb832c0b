//! Incrementally built reduced row-echelon form over sparse rows.
//!
//! Rows are kept fully reduced (each pivot column is zero in every other row),
//! so reducing a vector touches only the pivots present in its own support and
//! never creates new pivot entries. Suited to large, mostly sparse spans.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::subspace::Subspace;

pub type SparseVec = BTreeMap<usize, Rational>;

#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    width: usize,
    rows: Vec<Vec<(usize, Rational)>>,
    row_of_pivot: BTreeMap<usize, usize>,
}

pub fn axpy(acc: &mut SparseVec, c: &Rational, v: impl IntoIterator<Item = (usize, Rational)>) {
    for (k, x) in v {
        let e = acc.entry(k).or_insert_with(Rational::zero);
        *e += c * &x;
        if e.is_zero() {
            acc.remove(&k);
        }
    }
}

impl SparseEchelon {
    pub fn new(width: usize) -> Self {
        SparseEchelon { width, rows: Vec::new(), row_of_pivot: BTreeMap::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.row_of_pivot.contains_key(&col)
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.row_of_pivot.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[(usize, Rational)]> {
        self.rows.iter().map(|r| r.as_slice())
    }

    /// Replaces `v` by its canonical representative modulo the span: the
    /// result vanishes on every pivot column.
    pub fn reduce(&self, v: &mut SparseVec) {
        let hits: Vec<usize> = v.keys().copied().filter(|k| self.row_of_pivot.contains_key(k)).collect();
        for p in hits {
            let Some(c) = v.remove(&p) else { continue };
            let row = &self.rows[self.row_of_pivot[&p]];
            let neg = -c;
            axpy(v, &neg, row.iter().skip(1).cloned());
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_empty()
    }

    /// Adds `v` to the span. Returns the normalized new row, or `None` when
    /// `v` was already a member.
    pub fn insert(&mut self, mut v: SparseVec) -> Option<SparseVec> {
        debug_assert!(v.keys().all(|&k| k < self.width));
        self.reduce(&mut v);
        let (&p, lead) = v.iter().next()?;
        let inv = lead.recip();
        let row: Vec<(usize, Rational)> = v.iter().map(|(&k, x)| (k, x * &inv)).collect();
        for r in &mut self.rows {
            if let Ok(pos) = r.binary_search_by_key(&p, |e| e.0) {
                let c = r[pos].1.clone();
                *r = sub_scaled(r, &c, &row);
            }
        }
        self.row_of_pivot.insert(p, self.rows.len());
        self.rows.push(row.clone());
        Some(row.into_iter().collect())
    }

    /// Dense RREF basis, rows ordered by pivot.
    pub fn to_subspace(&self) -> Subspace {
        let mut basis = Matrix::zeros(self.dim(), self.width);
        let mut pivots = Vec::with_capacity(self.dim());
        for (i, (&p, &r)) in self.row_of_pivot.iter().enumerate() {
            pivots.push(p);
            for (k, x) in &self.rows[r] {
                basis[(i, *k)] = x.clone();
            }
        }
        Subspace::from_rref_parts(basis, pivots)
    }
}

fn sub_scaled(a: &[(usize, Rational)], c: &Rational, b: &[(usize, Rational)]) -> Vec<(usize, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let x = &a[i].1 - &(c * &b[j].1);
            if !x.is_zero() {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
