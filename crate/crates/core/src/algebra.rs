//! Finite-dimensional commutative algebras given by structure constants.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{unit, Matrix};

/// An element as a coordinate vector in the algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<Scalar>,
}

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element::new(self.coords.iter().map(|a| a * s).collect())
    }
}

/// The pair (β, γ) of the identity
/// `β{(yx²)x − ((yx)x)x} + γ{yx³ − ((yx)x)x} = 0`; never (0, 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GajParams {
    beta: Scalar,
    gamma: Scalar,
}

impl GajParams {
    pub fn new(beta: Scalar, gamma: Scalar) -> Result<Self> {
        if beta.field() != gamma.field() {
            return Err(Error::FieldMismatch);
        }
        if beta.is_zero() && gamma.is_zero() {
            return Err(Error::ZeroParameters);
        }
        Ok(Self { beta, gamma })
    }

    pub fn from_i64(field: Field, beta: i64, gamma: i64) -> Result<Self> {
        Self::new(field.from_i64(beta), field.from_i64(gamma))
    }

    pub fn beta(&self) -> &Scalar {
        &self.beta
    }

    pub fn gamma(&self) -> &Scalar {
        &self.gamma
    }

    pub fn field(&self) -> Field {
        self.beta.field()
    }

    /// `c·β + d·γ` for small integers, the shape of every case condition.
    pub fn combination(&self, c: i64, d: i64) -> Scalar {
        let f = self.field();
        &(&f.from_i64(c) * &self.beta) + &(&f.from_i64(d) * &self.gamma)
    }
}

impl fmt::Display for GajParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.beta, self.gamma)
    }
}

/// A commutative algebra with basis `b_0..b_{n-1}` and products
/// `b_i b_j = Σ_k c[i][j][k] b_k`. The table is stored symmetrized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    basis_names: Vec<String>,
    table: Vec<Vec<Vec<Scalar>>>,
}

impl Algebra {
    /// Builds an algebra from products `(i, j, coords)`; either order of
    /// `(i, j)` is accepted and omitted products are zero. Giving both
    /// `(i, j)` and `(j, i)` with different values is a conflict.
    pub fn from_products(
        field: Field,
        basis_names: Vec<String>,
        products: Vec<(usize, usize, Vec<Scalar>)>,
    ) -> Result<Self> {
        let n = basis_names.len();
        if n == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        let zero = vec![field.zero(); n];
        let mut table = vec![vec![zero; n]; n];
        let mut given = vec![vec![false; n]; n];
        for (i, j, coords) in products {
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch { expected: n, found: i.max(j) + 1 });
            }
            if coords.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: coords.len() });
            }
            if coords.iter().any(|c| c.field() != field) {
                return Err(Error::FieldMismatch);
            }
            let (a, b) = (i.min(j), i.max(j));
            if given[a][b] && table[a][b] != coords {
                return Err(Error::CommutativityConflict {
                    left: basis_names[i].clone(),
                    right: basis_names[j].clone(),
                });
            }
            given[a][b] = true;
            table[a][b] = coords.clone();
            table[b][a] = coords;
        }
        Ok(Self { field, basis_names, table })
    }

    /// Convenience constructor from small integer structure constants.
    pub fn from_i64_products(field: Field, names: &[&str], products: &[(usize, usize, &[i64])]) -> Result<Self> {
        let products =
            products.iter().map(|(i, j, c)| (*i, *j, c.iter().map(|&v| field.from_i64(v)).collect())).collect();
        Self::from_products(field, names.iter().map(|s| s.to_string()).collect(), products)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|b| b == name)
    }

    /// Structure constants of `b_i b_j`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    pub fn zero(&self) -> Element {
        Element::new(vec![self.field.zero(); self.dim()])
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::new(unit(self.field, self.dim(), i))
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: coords.len() });
        }
        if coords.iter().any(|c| c.field() != self.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Element::new(coords))
    }

    pub fn element_from_i64(&self, coords: &[i64]) -> Element {
        self.element(coords.iter().map(|&v| self.field.from_i64(v)).collect())
            .expect("coordinate count matches dimension")
    }

    fn check(&self, x: &Element) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Product `xy`, extended bilinearly from the table.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &Element, y: &Element) -> Element {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n];
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        *o += &(&c * t);
                    }
                }
            }
        }
        Element::new(out)
    }

    /// Principal power: `x^1 = x`, `x^{n+1} = x^n x`.
    pub fn principal_power(&self, x: &Element, n: u32) -> Result<Element> {
        self.check(x)?;
        if n == 0 {
            return Err(Error::ZeroExponent);
        }
        let mut acc = x.clone();
        for _ in 1..n {
            acc = self.mul(&acc, x);
        }
        Ok(acc)
    }

    /// Matrix of `y ↦ yx` in the algebra basis.
    pub fn right_mult_operator(&self, x: &Element) -> Result<Matrix> {
        self.check(x)?;
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mul(&self.basis_element(j), x).into_coords()).collect();
        Ok(Matrix::from_columns(self.field, n, &cols))
    }

    /// Whether `e` is a nonzero idempotent.
    pub fn is_idempotent(&self, e: &Element) -> Result<bool> {
        self.check(e)?;
        Ok(!e.is_zero() && self.mul(e, e) == *e)
    }

    /// `x²x² − x⁴`; nonzero certifies that power-associativity fails at degree 4.
    pub fn fourth_power_defect(&self, x: &Element) -> Result<Element> {
        let sq = self.principal_power(x, 2)?;
        let fourth = self.principal_power(x, 4)?;
        Ok(self.mul(&sq, &sq).sub(&fourth))
    }

    /// Renders an element as a combination of basis names, e.g. `-e - a`.
    pub fn format_element(&self, x: &Element) -> String {
        format_combination(&x.coords, &self.basis_names)
    }
}

/// Renders `Σ c_i·name_i`, e.g. `-e - 2*a`; the empty sum is `0`.
pub fn format_combination(coords: &[Scalar], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in coords.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, text),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != "1" {
            out.push_str(&mag);
            out.push('*');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::algebras;
    use proptest::prelude::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn square_root_products() {
        let a1 = algebras::square_root(Q);
        let (e, a) = (a1.basis_element(0), a1.basis_element(1));
        assert_eq!(a1.multiply(&a, &a).unwrap(), e);
        assert!(a1.multiply(&a, &a1.zero()).unwrap().is_zero());

        let a2 = algebras::beta_zero(Q);
        let (e, a) = (a2.basis_element(0), a2.basis_element(1));
        assert_eq!(a2.format_element(&a2.multiply(&e, &a).unwrap()), "-e - a");
    }

    #[test]
    fn principal_powers() {
        let a1 = algebras::square_root(Q);
        let a = a1.basis_element(1);
        assert_eq!(a1.principal_power(&a, 1).unwrap(), a);
        assert!(a1.principal_power(&a, 3).unwrap().is_zero());
        assert_eq!(a1.principal_power(&a, 0), Err(Error::ZeroExponent));

        let a3 = algebras::shift_pair(Q);
        let x = a3.element_from_i64(&[0, 1, 1]);
        assert_eq!(a3.principal_power(&x, 4).unwrap(), a3.element_from_i64(&[0, 0, 2]));
    }

    #[test]
    fn right_multiplication_by_idempotents() {
        let a1 = algebras::square_root(Q);
        assert_eq!(
            a1.right_mult_operator(&a1.basis_element(0)).unwrap(),
            Matrix::from_i64_rows(Q, &[&[1, 0], &[0, 0]])
        );
        assert!(a1.right_mult_operator(&a1.zero()).unwrap().is_zero());
        let a3 = algebras::shift_pair(Q);
        assert_eq!(
            a3.right_mult_operator(&a3.basis_element(0)).unwrap(),
            Matrix::from_i64_rows(Q, &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]])
        );
    }

    #[test]
    fn idempotents() {
        let a1 = algebras::square_root(Q);
        assert!(a1.is_idempotent(&a1.basis_element(0)).unwrap());
        assert!(!a1.is_idempotent(&a1.zero()).unwrap());
        let a2 = algebras::beta_zero(Q);
        let x = a2.element_from_i64(&[1, 1]);
        // (e + a)^2 = e + 2(-e - a) + (e + a) = -a
        assert_eq!(a2.multiply(&x, &x).unwrap(), a2.element_from_i64(&[0, -1]));
        assert!(!a2.is_idempotent(&x).unwrap());
    }

    #[test]
    fn fourth_power_defects() {
        let a1 = algebras::square_root(Q);
        assert_eq!(a1.fourth_power_defect(&a1.basis_element(1)).unwrap(), a1.basis_element(0));
        let a3 = algebras::shift_pair(Q);
        let x = a3.element_from_i64(&[0, 1, 1]);
        assert_eq!(a3.fourth_power_defect(&x).unwrap(), a3.element_from_i64(&[0, 0, -2]));
        let split = algebras::split_associative(Q);
        let y = split.element_from_i64(&[3, -2]);
        assert!(split.fourth_power_defect(&y).unwrap().is_zero());
    }

    #[test]
    fn commutativity_conflict_is_rejected() {
        let err = Algebra::from_i64_products(Q, &["e", "a"], &[(1, 0, &[1, 0]), (0, 1, &[0, 0])]);
        assert!(matches!(err, Err(Error::CommutativityConflict { .. })));
        // Restating the same product in the other order is fine.
        assert!(Algebra::from_i64_products(Q, &["e", "a"], &[(1, 0, &[1, 0]), (0, 1, &[1, 0])]).is_ok());
    }

    #[test]
    fn zero_parameters_rejected() {
        assert_eq!(GajParams::from_i64(Q, 0, 0), Err(Error::ZeroParameters));
    }

    proptest! {
        #[test]
        fn product_laws(x in prop::collection::vec(-4i64..=4, 3), y in prop::collection::vec(-4i64..=4, 3), n in 1u32..5) {
            let alg = algebras::shift_pair(Q);
            let (x, y) = (alg.element_from_i64(&x), alg.element_from_i64(&y));
            prop_assert_eq!(alg.multiply(&x, &y).unwrap(), alg.multiply(&y, &x).unwrap());
            let next = alg.principal_power(&x, n + 1).unwrap();
            prop_assert_eq!(next, alg.mul(&alg.principal_power(&x, n).unwrap(), &x));
            let r = alg.right_mult_operator(&x).unwrap();
            prop_assert_eq!(r.mul_vec(y.coords()), alg.mul(&y, &x).into_coords());
        }
    }
}
