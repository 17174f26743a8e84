use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

use super::{kernel, Matrix};

/// A subspace of `F^n`, stored as the nonzero rows of its reduced row echelon
/// form so that equal subspaces are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Self { field, ambient_dim, basis: Vec::new() }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| unit(field, ambient_dim, i)).collect();
        Self { field, ambient_dim, basis }
    }

    /// Span of arbitrary vectors (dependent or zero vectors allowed).
    pub fn from_vectors(field: Field, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient_dim);
        }
        let m = Matrix::from_rows(field, vectors).expect("vectors of equal length");
        assert_eq!(m.cols(), ambient_dim, "vector length must equal ambient dimension");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Self { field, ambient_dim, basis }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical echelon basis.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let vs = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Subspace::from_vectors(self.field, self.ambient_dim, vs))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient_dim));
        }
        // Solve U^T x + V^T y = 0; the vectors U^T x span the intersection.
        let cols: Vec<_> = self.basis.iter().chain(&other.basis).cloned().collect();
        let stacked = Matrix::from_columns(self.field, self.ambient_dim, &cols);
        let k = self.dim();
        let vectors = kernel(&stacked)
            .basis()
            .iter()
            .map(|sol| combine(self.field, self.ambient_dim, &self.basis, &sol[..k]))
            .collect();
        Ok(Subspace::from_vectors(self.field, self.ambient_dim, vectors))
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length");
        // Reduce against the echelon basis and look for a nonzero residue.
        let mut r = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|s| !s.is_zero()).expect("nonzero basis row");
            if r[pivot].is_zero() {
                continue;
            }
            let f = r[pivot].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        r.iter().all(Scalar::is_zero)
    }

    /// Whether `m` maps this subspace into itself.
    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.basis.iter().all(|v| self.contains_vector(&m.mul_vec(v)))
    }
}

/// Whether the given subspaces form a direct sum (dimensions add up).
pub fn is_direct_sum(parts: &[&Subspace]) -> Result<bool> {
    let Some(first) = parts.first() else {
        return Ok(true);
    };
    let mut acc = Subspace::zero(first.field, first.ambient_dim);
    let mut total = 0;
    for p in parts {
        acc = acc.sum(p)?;
        total += p.dim();
    }
    Ok(acc.dim() == total)
}

/// Sum of several subspaces of the same ambient space.
pub fn sum_all(field: Field, ambient_dim: usize, parts: &[&Subspace]) -> Result<Subspace> {
    parts.iter().try_fold(Subspace::zero(field, ambient_dim), |acc, p| acc.sum(p))
}

pub(crate) fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

fn combine(field: Field, n: usize, basis: &[Vec<Scalar>], coeffs: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); n];
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            *o += &(c * x);
        }
    }
    out
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, v) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in v.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}
