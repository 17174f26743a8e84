//! Peirce decompositions relative to an idempotent, split by parameter regime,
//! and checks of the multiplication relations between the components.

use std::fmt;

use serde::Serialize;

use crate::algebra::{Algebra, Element, GajParams};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::identity::check_gaj_identity;
use crate::linalg::{
    evaluate_polynomial_at, is_direct_sum, kernel, minimal_polynomial, sum_all, Matrix, Polynomial, Subspace,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CaseKind {
    /// γ, β+γ and β+2γ are all nonzero.
    Generic,
    GammaZero,
    BetaPlusGammaZero,
    BetaPlus2GammaZero,
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseKind::Generic => "generic (γ, β+γ, β+2γ ≠ 0)",
            CaseKind::GammaZero => "γ = 0",
            CaseKind::BetaPlusGammaZero => "β+γ = 0",
            CaseKind::BetaPlus2GammaZero => "β+2γ = 0",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ParameterCase {
    pub kind: CaseKind,
    pub beta_zero: bool,
    pub beta_plus_3gamma_zero: bool,
    pub beta_minus_gamma_zero: bool,
}

/// Every regime whose defining condition holds for `params`.
pub fn applicable_cases(params: &GajParams) -> Vec<CaseKind> {
    let mut out = Vec::new();
    if params.gamma().is_zero() {
        out.push(CaseKind::GammaZero);
    }
    if params.combination(1, 1).is_zero() {
        out.push(CaseKind::BetaPlusGammaZero);
    }
    if params.combination(1, 2).is_zero() {
        out.push(CaseKind::BetaPlus2GammaZero);
    }
    if out.is_empty() {
        out.push(CaseKind::Generic);
    }
    out
}

pub fn classify_params(params: &GajParams) -> ParameterCase {
    let cases = applicable_cases(params);
    // Two degenerate conditions at once force (β, γ) = (0, 0).
    assert_eq!(cases.len(), 1, "parameter regimes overlap for {params}");
    ParameterCase {
        kind: cases[0],
        beta_zero: params.beta().is_zero(),
        beta_plus_3gamma_zero: params.combination(1, 3).is_zero(),
        beta_minus_gamma_zero: params.combination(1, -1).is_zero(),
    }
}

/// `λ = −γ/(β+γ)`, defined when β+γ ≠ 0.
pub fn lambda(params: &GajParams) -> Option<Scalar> {
    (-params.gamma()).checked_div(&params.combination(1, 1))
}

/// Monic polynomial that the multiplication operator of an idempotent must
/// divide in each regime.
pub fn case_polynomial(params: &GajParams) -> Polynomial {
    let f = params.field();
    let x = Polynomial::from_i64(f, &[0, 1]);
    let x1 = Polynomial::from_i64(f, &[-1, 1]);
    match classify_params(params).kind {
        CaseKind::Generic => {
            let l = lambda(params).expect("β+γ ≠ 0 in the generic case");
            x.mul(&x1).mul(&Polynomial::linear(&l))
        }
        CaseKind::GammaZero => x.pow(2).mul(&x1),
        CaseKind::BetaPlusGammaZero => x.mul(&x1),
        CaseKind::BetaPlus2GammaZero => x.mul(&x1.pow(2)),
    }
}

/// Direct-sum split of a space into the components 0, 1 and λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub case: ParameterCase,
    /// Present only in the generic regime.
    pub lambda: Option<Scalar>,
    pub zero: Subspace,
    pub one: Subspace,
    pub lambda_part: Option<Subspace>,
}

impl Decomposition {
    /// Subscript for the λ component: `-1` when β = 0, `λ` otherwise.
    pub fn lambda_label(&self) -> String {
        if self.case.beta_zero {
            "-1".to_string()
        } else {
            "λ".to_string()
        }
    }

    /// `(subscript, subspace)` pairs in the order 0, 1, λ.
    pub fn components(&self) -> Vec<(String, &Subspace)> {
        let mut out = vec![("0".to_string(), &self.zero), ("1".to_string(), &self.one)];
        if let Some(l) = &self.lambda_part {
            out.push((self.lambda_label(), l));
        }
        out
    }

    pub fn ambient_dim(&self) -> usize {
        self.zero.ambient_dim()
    }

    pub fn lambda_or_zero(&self) -> Subspace {
        self.lambda_part.clone().unwrap_or_else(|| Subspace::zero(self.zero.field(), self.ambient_dim()))
    }
}

/// Splits the space an operator acts on according to the regime of `params`.
/// Fails when the operator's minimal polynomial does not divide the regime's
/// polynomial.
pub fn decompose_operator(op: &Matrix, params: &GajParams) -> Result<Decomposition> {
    let case = classify_params(params);
    let expected = case_polynomial(params);
    let minimal = minimal_polynomial(op);
    if !minimal.divides(&expected) {
        return Err(Error::MinimalPolynomialViolation { minimal: minimal.to_string(), expected: expected.to_string() });
    }
    let field = op.field();
    let n = op.rows();
    let shifted = |s: &Scalar| op - &Matrix::scalar(field, n, s);
    let one = field.one();
    let (zero, one_part, lambda_part, lam) = match case.kind {
        CaseKind::Generic => {
            let l = lambda(params).expect("generic case has λ");
            (kernel(op), kernel(&shifted(&one)), Some(kernel(&shifted(&l))), Some(l))
        }
        CaseKind::GammaZero => (kernel(&(op * op)), kernel(&shifted(&one)), None, None),
        CaseKind::BetaPlusGammaZero => (kernel(op), kernel(&shifted(&one)), None, None),
        CaseKind::BetaPlus2GammaZero => {
            let s = shifted(&one);
            (kernel(op), kernel(&(&s * &s)), None, None)
        }
    };
    let d = Decomposition { case, lambda: lam, zero, one: one_part, lambda_part };
    let parts: Vec<&Subspace> = d.components().into_iter().map(|(_, s)| s).collect();
    if !is_direct_sum(&parts)? || !sum_all(field, n, &parts)?.is_full() {
        return Err(Error::NotDirectSum);
    }
    Ok(d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeirceDecomposition {
    pub idempotent: Element,
    pub parts: Decomposition,
}

pub fn peirce_decompose(alg: &Algebra, e: &Element, params: &GajParams) -> Result<PeirceDecomposition> {
    if !alg.is_idempotent(e)? {
        return Err(Error::NotIdempotent);
    }
    if !check_gaj_identity(alg, params)? {
        return Err(Error::IdentityFails { beta: params.beta().to_string(), gamma: params.gamma().to_string() });
    }
    let re = alg.right_mult_operator(e)?;
    let parts = decompose_operator(&re, params)?;
    if !parts.one.contains_vector(e.coords()) {
        return Err(Error::Precondition("the idempotent does not lie in A_1".into()));
    }
    Ok(PeirceDecomposition { idempotent: e.clone(), parts })
}

/// Whether the operator acts on each component as its defining polynomial says.
pub fn acts_by_defining_polynomials(op: &Matrix, d: &Decomposition) -> bool {
    let field = op.field();
    let x = Polynomial::from_i64(field, &[0, 1]);
    let x1 = Polynomial::from_i64(field, &[-1, 1]);
    let annihilates = |p: &Polynomial, s: &Subspace| {
        let m = evaluate_polynomial_at(op, p);
        s.basis().iter().all(|v| m.mul_vec(v).iter().all(Scalar::is_zero))
    };
    let (p0, p1) = match d.case.kind {
        CaseKind::GammaZero => (x.pow(2), x1.clone()),
        CaseKind::BetaPlus2GammaZero => (x.clone(), x1.pow(2)),
        _ => (x.clone(), x1.clone()),
    };
    let lambda_ok = match (&d.lambda_part, &d.lambda) {
        (Some(s), Some(l)) => annihilates(&Polynomial::linear(l), s),
        _ => true,
    };
    annihilates(&p0, &d.zero) && annihilates(&p1, &d.one) && lambda_ok
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RelationStatus {
    Pass,
    Fail,
    /// A factor is the zero subspace, so the relation holds trivially.
    Vacuous,
}

impl fmt::Display for RelationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationStatus::Pass => "pass",
            RelationStatus::Fail => "FAIL",
            RelationStatus::Vacuous => "vacuous",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub status: RelationStatus,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.status != RelationStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| c.status == RelationStatus::Fail)
    }
}

/// Span of `product(u, v)` over basis vectors `u` of `left` and `v` of `right`.
pub(crate) fn product_space(
    left: &Subspace,
    right: &Subspace,
    ambient: usize,
    product: impl Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>,
) -> Subspace {
    let vectors =
        left.basis().iter().flat_map(|u| right.basis().iter().map(|v| product(u, v)).collect::<Vec<_>>()).collect();
    Subspace::from_vectors(left.field(), ambient, vectors)
}

/// `left·right ⊆ target`, or `left·right = {0}` when `target` is `None`.
pub(crate) fn relation(
    statement: String,
    left: &Subspace,
    right: &Subspace,
    target: Option<&Subspace>,
    ambient: usize,
    product: impl Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>,
) -> RelationCheck {
    if left.is_zero() || right.is_zero() {
        return RelationCheck { relation: statement, status: RelationStatus::Vacuous };
    }
    let p = product_space(left, right, ambient, product);
    let holds = match target {
        None => p.is_zero(),
        Some(t) => t.contains(&p).expect("same ambient space"),
    };
    let status = if holds { RelationStatus::Pass } else { RelationStatus::Fail };
    RelationCheck { relation: statement, status }
}

/// Checks the multiplication relations between the algebra's Peirce
/// components that hold in the decomposition's regime.
pub fn verify_peirce_relations(alg: &Algebra, d: &PeirceDecomposition) -> RelationReport {
    let n = alg.dim();
    let mul = |u: &[Scalar], v: &[Scalar]| alg.mul(&Element::new(u.to_vec()), &Element::new(v.to_vec())).into_coords();
    let p = &d.parts;
    let (a0, a1) = (&p.zero, &p.one);
    let rel = |s: &str, l: &Subspace, r: &Subspace, t: Option<&Subspace>| relation(s.to_string(), l, r, t, n, mul);
    let checks = match p.case.kind {
        CaseKind::Generic => {
            let al = p.lambda_or_zero();
            let a01 = a0.sum(a1).expect("same ambient space");
            vec![
                rel("(A_0)^2 ⊆ A_0", a0, a0, Some(a0)),
                rel("(A_1)^2 ⊆ A_1", a1, a1, Some(a1)),
                rel("A_0·A_1 = {0}", a0, a1, None),
                rel("A_λ·A_0 ⊆ A_λ", &al, a0, Some(&al)),
                rel("A_λ·A_1 ⊆ A_λ", &al, a1, Some(&al)),
                rel("(A_λ)^2 ⊆ A_0 ⊕ A_1", &al, &al, Some(&a01)),
            ]
        }
        CaseKind::GammaZero => vec![rel("A_0·A_1 ⊆ A_0", a0, a1, Some(a0)), rel("(A_0)^2 ⊆ A_0", a0, a0, Some(a0))],
        CaseKind::BetaPlusGammaZero => vec![rel("A_0·A_1 = {0}", a0, a1, None), rel("(A_1)^2 ⊆ A_1", a1, a1, Some(a1))],
        CaseKind::BetaPlus2GammaZero => {
            vec![rel("A_0·A_1 = {0}", a0, a1, None), rel("(A_0)^2 ⊆ A_0", a0, a0, Some(a0))]
        }
    };
    RelationReport { checks }
}
