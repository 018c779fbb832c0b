//! JSON file formats. Rationals are always exact `"num/den"` strings and keys
//! are emitted in a fixed order, so identical inputs give identical bytes.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::envelope::AIntersection;
use crate::error::{Error, Result};
use crate::expansion::StepSummary;
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::pipeline::{Representation, VerificationReport};
use crate::rational::Rational;

pub const REPRESENTATION_FORMAT: &str = "ado-representation/1";

/// `(k, c)` pairs: `c * e_k`.
pub type SparseTerms = Vec<(usize, Rational)>;

/// Nonzero brackets `[e_i, e_j]`, `i < j`, as sparse coordinate lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Brackets(pub Vec<((usize, usize), SparseTerms)>);

impl Serialize for Brackets {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for ((i, j), terms) in &self.0 {
            map.serialize_entry(&format!("{i},{j}"), terms)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Brackets {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, Vec<(usize, Rational)>>::deserialize(d)?;
        let mut out = Vec::with_capacity(raw.len());
        for (key, terms) in raw {
            let pair = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| D::Error::custom(format!("bracket key {key:?} is not of the form \"i,j\"")))?;
            out.push((pair, terms));
        }
        out.sort_by_key(|e| e.0);
        Ok(Brackets(out))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Brackets,
}

impl AlgebraFile {
    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let n = g.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms: Vec<(usize, Rational)> = g
                    .structure(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                if !terms.is_empty() {
                    brackets.push(((i, j), terms));
                }
            }
        }
        AlgebraFile { name: g.name().to_string(), dim: n, basis: g.labels().to_vec(), brackets: Brackets(brackets) }
    }

    /// Checks ranges and builds the algebra (which validates antisymmetry
    /// and Jacobi).
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::Parse(format!("dim is {n} but {} basis names are given", self.basis.len())));
        }
        let mut table = Vec::with_capacity(self.brackets.0.len());
        for ((i, j), terms) in &self.brackets.0 {
            let (i, j) = (*i, *j);
            if i >= j || j >= n {
                return Err(Error::Parse(format!("bracket key \"{i},{j}\" must satisfy i < j < {n}")));
            }
            let mut v = vec![Rational::zero(); n];
            for (k, c) in terms {
                if *k >= n {
                    return Err(Error::Parse(format!("bracket \"{i},{j}\" names basis index {k} >= {n}")));
                }
                v[*k] += c;
            }
            table.push(((i, j), v));
        }
        LieAlgebra::from_upper(self.name.clone(), self.basis.clone(), table)
    }
}

fn grid(m: &Matrix) -> Vec<Vec<Rational>> {
    m.row_vecs()
}

fn from_grid(g: &[Vec<Rational>], rows: usize, cols: usize, what: &str) -> Result<Matrix> {
    if g.len() != rows || g.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse(format!("{what} is not a {rows}x{cols} grid")));
    }
    Ok(Matrix::from_rows(g, cols))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub verified: bool,
    pub homomorphic: bool,
    pub faithful: bool,
    pub kernel_dim: usize,
    pub pairs_checked: usize,
    pub max_residual_entries: usize,
}

impl From<&VerificationReport> for VerificationSummary {
    fn from(r: &VerificationReport) -> Self {
        VerificationSummary {
            verified: r.verified(),
            homomorphic: r.homomorphic(),
            faithful: r.faithful(),
            kernel_dim: r.kernel_dim,
            pairs_checked: r.residuals.len(),
            max_residual_entries: r.max_residual_entries(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub q: usize,
    pub p: usize,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AFinding {
    pub holds: bool,
    pub degree_one_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepFile {
    pub x: Vec<Rational>,
    pub x_label: String,
    pub ideal: Vec<Vec<Rational>>,
    pub d: Vec<Vec<Rational>>,
    pub d_s: Vec<Vec<Rational>>,
    pub d_n: Vec<Vec<Rational>>,
    pub dims_after: Dims,
}

impl From<&StepSummary> for StepFile {
    fn from(s: &StepSummary) -> Self {
        let (q, p, n) = s.dims_after;
        StepFile {
            x: s.x.clone(),
            x_label: s.x_label.clone(),
            ideal: s.ideal.basis_vectors(),
            d: grid(&s.d),
            d_s: grid(&s.d_s),
            d_n: grid(&s.d_n),
            dims_after: Dims { q, p, n },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceFile {
    pub embedding: Vec<Vec<Rational>>,
    pub steps: Vec<StepFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceFile {
    pub expansion_steps: usize,
    pub saturated: Dims,
    pub kernel_part_dim: usize,
    pub acting_part_dim: usize,
    pub nilpotency_index: Option<usize>,
    pub truncation: Option<usize>,
    pub retried: bool,
    pub env_dim: usize,
    pub reductive_dim: usize,
    pub a_intersection: Option<AFinding>,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFile {
    #[serde(default = "default_format")]
    pub format: String,
    pub algebra: AlgebraFile,
    pub dim_v: usize,
    pub matrices: Vec<Vec<Vec<Rational>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<ProvenanceFile>,
}

fn default_format() -> String {
    REPRESENTATION_FORMAT.to_string()
}

impl RepresentationFile {
    pub fn new(rep: &Representation, report: &VerificationReport, with_trace: bool) -> Self {
        let p = &rep.provenance;
        let (q, pd, n) = p.saturated;
        let trace = with_trace.then(|| TraceFile {
            embedding: p.embedding.as_ref().map(grid).unwrap_or_default(),
            steps: p.steps.iter().map(StepFile::from).collect(),
        });
        let provenance = ProvenanceFile {
            expansion_steps: p.steps.len(),
            saturated: Dims { q, p: pd, n },
            kernel_part_dim: p.kernel_part_dim,
            acting_part_dim: p.acting_part_dim,
            nilpotency_index: p.nilpotency_index,
            truncation: p.truncation,
            retried: p.retried,
            env_dim: p.env_dim,
            reductive_dim: p.reductive_dim,
            a_intersection: p
                .a_intersection
                .as_ref()
                .map(|a: &AIntersection| AFinding { holds: a.holds, degree_one_holds: a.degree_one_holds }),
            notes: p.notes.clone(),
            trace,
        };
        RepresentationFile {
            format: default_format(),
            algebra: AlgebraFile::from_algebra(&rep.algebra),
            dim_v: rep.dim_v,
            matrices: rep.matrices.iter().map(grid).collect(),
            verification: Some(report.into()),
            provenance: Some(provenance),
        }
    }

    /// The algebra, `dim_v`, and matrices, with shapes checked.
    pub fn parts(&self) -> Result<(LieAlgebra, usize, Vec<Matrix>)> {
        let g = self.algebra.to_algebra()?;
        if self.matrices.len() != g.dim() {
            return Err(Error::Parse(format!(
                "{} matrices given for a {}-dimensional algebra",
                self.matrices.len(),
                g.dim()
            )));
        }
        let mats = self
            .matrices
            .iter()
            .enumerate()
            .map(|(i, m)| from_grid(m, self.dim_v, self.dim_v, &format!("matrix {i}")))
            .collect::<Result<Vec<_>>>()?;
        Ok((g, self.dim_v, mats))
    }
}

pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file types always serialize");
    s.push('\n');
    s
}

pub fn from_json_str<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}
