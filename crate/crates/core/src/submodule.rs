//! Submodule generation by spinning, irreducibility decisions and the
//! classification of irreducible modules by Peirce component.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Element, GajParams};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{
    evaluate_polynomial_at, factor_squarefree_or_irreducible, kernel, minimal_polynomial, unit, Matrix, Subspace,
};
use crate::peirce::CaseKind;
use crate::representation::{module_peirce, Representation};

/// Projective points enumerated at most by the finite-field decision.
pub const EXHAUSTIVE_POINT_LIMIT: u64 = 200_000;

/// Smallest subspace containing `seeds` and invariant under every generator.
pub fn spin(r: &Representation, seeds: &[Vec<Scalar>]) -> Subspace {
    let m = r.module_dim();
    let mut s = Subspace::from_vectors(r.field(), m, seeds.to_vec());
    loop {
        let mut vectors = s.basis().to_vec();
        for g in r.generators() {
            vectors.extend(s.basis().iter().map(|v| g.mul_vec(v)));
        }
        let next = Subspace::from_vectors(r.field(), m, vectors);
        if next.dim() == s.dim() {
            return s;
        }
        s = next;
    }
}

/// Span of all nonempty products of the generators, as a subspace of the
/// flattened `m × m` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Envelope {
    module_dim: usize,
    space: Subspace,
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.entries().to_vec()
}

fn unflatten(field: Field, m: usize, v: &[Scalar]) -> Matrix {
    Matrix::from_rows(field, v.chunks(m).map(|c| c.to_vec()).collect()).expect("square")
}

impl Envelope {
    pub fn generate(r: &Representation) -> Self {
        let (f, m) = (r.field(), r.module_dim());
        let mut space = Subspace::from_vectors(f, m * m, r.generators().iter().map(flatten).collect());
        while space.dim() < m * m {
            let mut vectors = space.basis().to_vec();
            for b in space.basis() {
                let x = unflatten(f, m, b);
                vectors.extend(r.generators().iter().map(|g| flatten(&(g * &x))));
            }
            let next = Subspace::from_vectors(f, m * m, vectors);
            if next.dim() == space.dim() {
                break;
            }
            space = next;
        }
        Envelope { module_dim: m, space }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_full(&self) -> bool {
        self.space.dim() == self.module_dim * self.module_dim
    }

    pub fn contains(&self, x: &Matrix) -> bool {
        self.space.contains_vector(&flatten(x))
    }

    pub fn basis_matrices(&self) -> Vec<Matrix> {
        let f = self.space.field();
        self.space.basis().iter().map(|v| unflatten(f, self.module_dim, v)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IrreducibilityStatus {
    Irreducible,
    Reducible,
    Inconclusive,
}

impl fmt::Display for IrreducibilityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The complete method that decided irreducibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    DimOne,
    NoRationalEigenvalueDim2,
    /// The generated operator algebra is all of `End(M)` (Burnside).
    FullEnvelope,
    ExhaustiveFiniteField,
    /// Dimension 2, every generator has a rational eigenvalue, and no
    /// eigenline is common to all of them.
    SpinSearchExhausted,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityVerdict {
    pub status: IrreducibilityStatus,
    /// Proper nonzero invariant subspace, when reducible.
    pub witness: Option<Subspace>,
    /// How irreducibility was decided.
    pub certificate: Option<Certificate>,
}

impl IrreducibilityVerdict {
    fn irreducible(c: Certificate) -> Self {
        IrreducibilityVerdict { status: IrreducibilityStatus::Irreducible, witness: None, certificate: Some(c) }
    }

    fn reducible(r: &Representation, w: Subspace) -> Self {
        assert!(
            !w.is_zero() && !w.is_full() && r.generators().iter().all(|g| w.is_invariant_under(g)),
            "reducibility witness failed re-check"
        );
        IrreducibilityVerdict { status: IrreducibilityStatus::Reducible, witness: Some(w), certificate: None }
    }
}

fn proper(s: &Subspace) -> bool {
    !s.is_zero() && !s.is_full()
}

/// Fixed list of operators whose eigenspace-like kernels seed the search:
/// generators, their pairwise products and sums of pairs.
fn probe_operators(r: &Representation) -> Vec<Matrix> {
    let g = r.generators();
    let mut out: Vec<Matrix> = g.to_vec();
    for a in g {
        for b in g {
            out.push(a * b);
        }
    }
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            out.push(&g[i] + &g[j]);
        }
    }
    out
}

fn kernel_search(r: &Representation) -> Option<Subspace> {
    for x in probe_operators(r) {
        if x.is_zero() {
            continue;
        }
        for factor in factor_squarefree_or_irreducible(&minimal_polynomial(&x)) {
            let k = kernel(&evaluate_polynomial_at(&x, &factor.poly));
            for v in k.basis() {
                let s = spin(r, std::slice::from_ref(v));
                if proper(&s) {
                    return Some(s);
                }
            }
        }
    }
    None
}

fn rational_eigenvalues(x: &Matrix) -> Vec<Scalar> {
    factor_squarefree_or_irreducible(&minimal_polynomial(x))
        .into_iter()
        .filter(|f| f.poly.degree() == Some(1))
        .map(|f| -f.poly.coeffs()[0].clone())
        .collect()
}

/// Complete decision for dimension 2 over the rationals: reducible iff the
/// generators share an eigenline.
fn dim_two_decision(r: &Representation) -> IrreducibilityVerdict {
    let f = r.field();
    for g in r.generators() {
        if rational_eigenvalues(g).is_empty() {
            return IrreducibilityVerdict::irreducible(Certificate::NoRationalEigenvalueDim2);
        }
    }
    let non_scalar = r.generators().iter().find(|g| {
        let d = g.get(0, 0).clone();
        **g != Matrix::scalar(f, 2, &d)
    });
    let Some(g) = non_scalar else {
        return IrreducibilityVerdict::reducible(r, Subspace::from_vectors(f, 2, vec![unit(f, 2, 0)]));
    };
    for l in rational_eigenvalues(g) {
        let line = kernel(&(g - &Matrix::scalar(f, 2, &l)));
        if r.generators().iter().all(|h| line.is_invariant_under(h)) {
            return IrreducibilityVerdict::reducible(r, line);
        }
    }
    IrreducibilityVerdict::irreducible(Certificate::SpinSearchExhausted)
}

/// Number of lines in `F_p^m`.
fn projective_point_count(p: u64, m: usize) -> Option<u64> {
    let total = p.checked_pow(m as u32)?;
    Some((total - 1) / (p - 1))
}

/// Representative of the `k`-th line of `F_p^m`: first nonzero coordinate 1.
fn projective_point(field: Field, p: u64, m: usize, mut k: u64) -> Vec<Scalar> {
    for lead in 0..m {
        let tail = m - lead - 1;
        let block = p.pow(tail as u32);
        if k < block {
            let mut v = vec![field.zero(); m];
            v[lead] = field.one();
            for (i, slot) in v[lead + 1..].iter_mut().enumerate() {
                let digit = (k / p.pow((tail - 1 - i) as u32)) % p;
                *slot = field.from_i64(digit as i64);
            }
            return v;
        }
        k -= block;
    }
    unreachable!("index beyond the number of projective points")
}

/// Decides irreducibility over a prime field by spinning one vector from
/// every line; any nonzero proper submodule contains such a line. Returns
/// `None` over the rationals or when there are too many lines.
pub fn exhaustive_finite_field_decision(r: &Representation) -> Option<IrreducibilityVerdict> {
    let f = r.field();
    let Field::Prime(p) = f else { return None };
    let m = r.module_dim();
    let count = projective_point_count(p, m).filter(|&c| c <= EXHAUSTIVE_POINT_LIMIT)?;
    let found = (0..count).into_par_iter().map(|k| spin(r, &[projective_point(f, p, m, k)])).find_first(proper);
    Some(match found {
        Some(w) => IrreducibilityVerdict::reducible(r, w),
        None => IrreducibilityVerdict::irreducible(Certificate::ExhaustiveFiniteField),
    })
}

/// Decision ladder: dimension one, spinning basis vectors, spinning kernel
/// vectors of probe operators, the Burnside criterion, the dimension-two
/// eigenline test over the rationals, and enumeration over small prime fields.
pub fn is_irreducible(r: &Representation) -> IrreducibilityVerdict {
    let (f, m) = (r.field(), r.module_dim());
    if m == 1 {
        return IrreducibilityVerdict::irreducible(Certificate::DimOne);
    }
    for i in 0..m {
        let s = spin(r, &[unit(f, m, i)]);
        if proper(&s) {
            return IrreducibilityVerdict::reducible(r, s);
        }
    }
    if let Some(s) = kernel_search(r) {
        return IrreducibilityVerdict::reducible(r, s);
    }
    if Envelope::generate(r).is_full() {
        return IrreducibilityVerdict::irreducible(Certificate::FullEnvelope);
    }
    if m == 2 && f == Field::Rationals {
        return dim_two_decision(r);
    }
    if m <= 4 {
        if let Some(v) = exhaustive_finite_field_decision(r) {
            return v;
        }
    }
    IrreducibilityVerdict { status: IrreducibilityStatus::Inconclusive, witness: None, certificate: None }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// e.g. `M = M_0` or `M = M_1 ⊕ M_-1`.
    pub label: String,
    pub components: Vec<String>,
    pub note: Option<String>,
}

/// Which Peirce component(s) an irreducible module lies in.
pub fn classify_irreducible(
    r: &Representation,
    e: &Element,
    params: &GajParams,
    verdict: &IrreducibilityVerdict,
) -> Result<Classification> {
    if verdict.status != IrreducibilityStatus::Irreducible {
        return Err(Error::Precondition("module is not known to be irreducible".into()));
    }
    let md = module_peirce(r, e, params)?;
    let components = md.nonzero_components();
    let case = md.parts.case;
    let label = match components.as_slice() {
        [one] => format!("M = {one}"),
        [a, b] if case.kind == CaseKind::Generic && case.beta_zero && a == "M_1" && b == "M_-1" => {
            "M = M_1 ⊕ M_-1".to_string()
        }
        _ => {
            let parts: Vec<String> = md.parts.components().iter().map(|(l, s)| format!("M_{l} = {s}")).collect();
            return Err(Error::ClassificationFailed(parts.join(", ")));
        }
    };
    let note = (case.kind == CaseKind::BetaPlusGammaZero && label == "M = M_0")
        .then(|| "no structural conclusion available".to_string());
    Ok(Classification { label, components, note })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::algebras;
    use crate::linalg::unit;
    use proptest::prelude::*;

    const Q: Field = Field::Rationals;

    fn rotation(f: Field) -> Representation {
        Representation::from_i64(algebras::square_root(f), &[&[&[0, 0], &[0, 0]], &[&[-1, 2], &[-1, 1]]]).unwrap()
    }

    #[test]
    fn spin_examples() {
        let r = rotation(Q);
        assert!(spin(&r, &[unit(Q, 2, 0)]).is_full());
        assert!(spin(&r, &[vec![Q.zero(), Q.zero()]]).is_zero());
        let reg = Representation::regular(algebras::square_root(Q));
        assert_eq!(spin(&reg, &[unit(Q, 2, 0)]), Subspace::from_vectors(Q, 2, vec![unit(Q, 2, 0)]));
    }

    #[test]
    fn rotation_module_is_irreducible_over_q() {
        let v = is_irreducible(&rotation(Q));
        assert_eq!(v.status, IrreducibilityStatus::Irreducible);
        assert_eq!(v.certificate, Some(Certificate::NoRationalEigenvalueDim2));
        let c = classify_irreducible(
            &rotation(Q),
            &algebras::square_root(Q).basis_element(0),
            &GajParams::from_i64(Q, 1, -1).unwrap(),
            &v,
        )
        .unwrap();
        assert_eq!(c.label, "M = M_0");
        assert!(c.note.is_some());
    }

    #[test]
    fn rotation_module_over_f5_splits() {
        // x² + 1 has roots ±2 mod 5.
        let r = rotation(Field::Prime(5));
        assert_eq!(is_irreducible(&r).status, IrreducibilityStatus::Reducible);
        let r7 = rotation(Field::Prime(7));
        let v = is_irreducible(&r7);
        assert_eq!(v.status, IrreducibilityStatus::Irreducible);
        assert_eq!(v.certificate, Some(Certificate::ExhaustiveFiniteField));
    }

    #[test]
    fn reducible_examples() {
        let z = Representation::zero(algebras::square_root(Q), 2);
        let v = is_irreducible(&z);
        assert_eq!(v.status, IrreducibilityStatus::Reducible);
        assert_eq!(v.witness.unwrap().dim(), 1);
        let reg = Representation::regular(algebras::square_root(Q));
        let v = is_irreducible(&reg);
        assert_eq!(v.witness.unwrap(), Subspace::from_vectors(Q, 2, vec![unit(Q, 2, 0)]));
    }

    #[test]
    fn one_dimensional_zero_module_is_irreducible() {
        let z = Representation::zero(algebras::square_root(Q), 1);
        assert_eq!(is_irreducible(&z).certificate, Some(Certificate::DimOne));
    }

    #[test]
    fn full_envelope_certificate() {
        let alg = algebras::split_associative(Q);
        let r = Representation::from_i64(alg, &[&[&[1, 0], &[0, 0]], &[&[0, 1], &[1, 0]]]).unwrap();
        let env = Envelope::generate(&r);
        assert_eq!(env.dim(), 4);
        assert_eq!(is_irreducible(&r).certificate, Some(Certificate::FullEnvelope));
    }

    #[test]
    fn envelope_of_rotation_is_two_dimensional() {
        let env = Envelope::generate(&rotation(Q));
        assert_eq!(env.dim(), 2);
        assert!(env.contains(&Matrix::identity(Q, 2)));
    }

    #[test]
    fn beta_zero_regular_module_has_two_signed_components() {
        let f5 = Field::Prime(5);
        let reg = Representation::regular(algebras::beta_zero(f5));
        let v = is_irreducible(&reg);
        assert_eq!(v.status, IrreducibilityStatus::Irreducible);
        let params = GajParams::from_i64(f5, 0, 1).unwrap();
        let c = classify_irreducible(&reg, &reg.algebra().basis_element(0), &params, &v).unwrap();
        assert_eq!(c.label, "M = M_1 ⊕ M_-1");
        assert_eq!(exhaustive_finite_field_decision(&reg).unwrap().status, IrreducibilityStatus::Irreducible);
    }

    #[test]
    fn symmetric_matrices_regular_module_does_not_classify() {
        // Irreducible for almost-Jordan parameters, yet spread over three
        // components: the single-component conclusion needs β+3γ ≠ 0.
        let reg = Representation::regular(algebras::symmetric_matrices(Q));
        let v = is_irreducible(&reg);
        assert_eq!(v.status, IrreducibilityStatus::Irreducible);
        let params = GajParams::from_i64(Q, 3, -1).unwrap();
        let e = reg.algebra().basis_element(0);
        assert!(matches!(classify_irreducible(&reg, &e, &params, &v), Err(Error::ClassificationFailed(_))));
    }

    #[test]
    fn projective_points_are_distinct_lines() {
        let f = Field::Prime(5);
        let n = projective_point_count(5, 3).unwrap();
        assert_eq!(n, 31);
        let pts: Vec<Subspace> =
            (0..n).map(|k| Subspace::from_vectors(f, 3, vec![projective_point(f, 5, 3, k)])).collect();
        for i in 0..pts.len() {
            assert_eq!(pts[i].dim(), 1);
            for j in 0..i {
                assert_ne!(pts[i], pts[j]);
            }
        }
    }

    fn small_rep() -> impl Strategy<Value = Representation> {
        proptest::collection::vec(-2i64..=2, 18).prop_map(|c| {
            let alg = algebras::split_associative(Q);
            let mats = c
                .chunks(9)
                .map(|m| {
                    Matrix::from_rows(Q, m.chunks(3).map(|r| r.iter().map(|&v| Q.from_i64(v)).collect()).collect())
                        .unwrap()
                })
                .collect();
            Representation::new(alg, mats).unwrap()
        })
    }

    proptest! {
        #[test]
        fn spin_is_monotone_and_idempotent(r in small_rep(), seed in proptest::collection::vec(-2i64..=2, 3)) {
            let v: Vec<Scalar> = seed.iter().map(|&x| Q.from_i64(x)).collect();
            let s = spin(&r, std::slice::from_ref(&v));
            prop_assert!(s.contains_vector(&v));
            prop_assert_eq!(spin(&r, s.basis()), s.clone());
            for g in r.generators() {
                prop_assert!(s.is_invariant_under(g));
            }
        }
    }
}
