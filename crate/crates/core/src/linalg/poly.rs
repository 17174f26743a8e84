use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::field::{Field, Scalar};

use super::{kernel, Matrix};

/// Univariate polynomial with coefficients in ascending degree order and no
/// trailing zeros (the zero polynomial has no coefficients).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> Self {
        Self { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Self {
        Self::new(field, vec![field.one()])
    }

    /// `x - r`.
    pub fn linear(r: &Scalar) -> Self {
        let f = r.field();
        Self::new(f, vec![-r, f.one()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                Self::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let coeffs = (0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z)).collect();
        Self::new(self.field, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let coeffs = (0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z)).collect();
        Self::new(self.field, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(self.field, out)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.field), |acc, _| acc.mul(self))
    }

    /// Euclidean division; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[top - d + i] -= &(&c * dc);
                }
            }
            quot[top - d] = c;
            rem.pop();
        }
        (Self::new(self.field, quot), Self::new(self.field, rem))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| &self.field.from_i64(i as i64) * c).collect();
        Self::new(self.field, coeffs)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }
}

/// Horner evaluation `p(m)` for a square matrix.
pub fn evaluate_polynomial_at(m: &Matrix, p: &Polynomial) -> Matrix {
    assert!(m.is_square(), "polynomials are evaluated at square matrices");
    let n = m.rows();
    let field = m.field();
    p.coeffs().iter().rev().fold(Matrix::zeros(field, n, n), |acc, c| &(&acc * m) + &Matrix::scalar(field, n, c))
}

/// Least-degree monic polynomial annihilating `m`.
pub fn minimal_polynomial(m: &Matrix) -> Polynomial {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    let field = m.field();
    let n = m.rows();
    let mut powers = vec![Matrix::identity(field, n)];
    loop {
        let k = powers.len();
        let next = &powers[k - 1] * m;
        powers.push(next);
        let cols: Vec<Vec<Scalar>> = powers.iter().map(|p| p.entries().to_vec()).collect();
        let ker = kernel(&Matrix::from_columns(field, n * n, &cols));
        if let Some(v) = ker.basis().first() {
            // The first dependency is one-dimensional and involves the top power.
            return Polynomial::new(field, v.clone()).monic();
        }
    }
}

/// One factor of a factorization: a monic polynomial with its multiplicity.
/// `irreducible` is false when the factor could not be split further with the
/// supported methods (roots, squarefree splitting, degree ≤ 3 tests).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: Polynomial,
    pub multiplicity: usize,
    pub irreducible: bool,
}

/// Factors `p` into monic pieces: linear factors for every root in the field,
/// then a squarefree split of what remains. Root-free remainders of degree 2
/// or 3 are irreducible; larger ones are reported unresolved.
pub fn factor_squarefree_or_irreducible(p: &Polynomial) -> Vec<Factor> {
    let mut rest = p.monic();
    let mut out = Vec::new();
    if rest.degree().unwrap_or(0) == 0 {
        return out;
    }
    while rest.degree().unwrap_or(0) > 0 {
        let Some(r) = find_root(&rest) else { break };
        let lin = Polynomial::linear(&r);
        let mut mult = 0;
        while rest.degree().unwrap_or(0) > 0 && rest.eval(&r).is_zero() {
            rest = rest.div_rem(&lin).0;
            mult += 1;
        }
        out.push(Factor { poly: lin, multiplicity: mult, irreducible: true });
    }
    if rest.degree().unwrap_or(0) > 0 {
        for (g, mult) in squarefree_parts(&rest) {
            let irreducible = g.degree().is_some_and(|d| d <= 3);
            out.push(Factor { poly: g, multiplicity: mult, irreducible });
        }
    }
    out.sort_by(|a, b| compare_polys(&a.poly, &b.poly));
    out
}

fn compare_polys(a: &Polynomial, b: &Polynomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.to_string().cmp(&b.to_string()))
}

/// Yun's squarefree decomposition of a monic polynomial.
fn squarefree_parts(f: &Polynomial) -> Vec<(Polynomial, usize)> {
    let deg = f.degree().unwrap_or(0);
    if let Some(p) = f.field().order() {
        if deg as u64 >= p {
            return vec![(f.clone(), 1)];
        }
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let next_b = b.div_rem(&a).0;
        let next_c = d.div_rem(&a).0;
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.monic(), i));
        }
        d = next_c.sub(&next_b.derivative());
        b = next_b;
        i += 1;
    }
    out
}

const DIVISOR_SEARCH_LIMIT: u64 = 1_000_000_000_000;

/// Some root of `p` in its field, searched deterministically.
fn find_root(p: &Polynomial) -> Option<Scalar> {
    let field = p.field();
    if p.coeffs()[0].is_zero() {
        return Some(field.zero());
    }
    match field {
        Field::Prime(_) => field.elements()?.into_iter().find(|x| p.eval(x).is_zero()),
        Field::Rationals => rational_root(p),
    }
}

fn rational_root(p: &Polynomial) -> Option<Scalar> {
    let field = p.field();
    // Clear denominators to an integer polynomial.
    let lcm =
        p.coeffs().iter().map(|c| c.as_rational().unwrap().denom().clone()).fold(BigInt::one(), |acc, d| acc.lcm(&d));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c.as_rational().unwrap() * &lcm).to_integer()).collect();
    let constant = divisors(ints.first()?)?;
    let leading = divisors(ints.last()?)?;
    for num in &constant {
        for den in &leading {
            for sign in [1i64, -1] {
                let cand = field.from_ratio(&(BigInt::from(sign) * BigInt::from(*num)), &BigInt::from(*den)).ok()?;
                if p.eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_SEARCH_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}
