//! Representations `ρ: A → End(M)`, the operator identities characterising
//! them, split null extensions and the module Peirce decomposition.

use crate::algebra::{Algebra, Element, GajParams};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::identity::{build, check_gaj_identity, linearize_identity, BasisTuple, IdentityKind, IdentitySpec, Word};
use crate::linalg::{Matrix, Subspace};
use crate::peirce::{decompose_operator, relation, CaseKind, Decomposition, PeirceDecomposition, RelationReport};

/// A linear map `A → End(M)`, stored by the images of the basis of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: Algebra,
    module_dim: usize,
    rho: Vec<Matrix>,
}

impl Representation {
    /// `rho[i]` is the operator of the i-th basis element.
    pub fn new(algebra: Algebra, rho: Vec<Matrix>) -> Result<Self> {
        if rho.len() != algebra.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), found: rho.len() });
        }
        let m = rho.first().map_or(0, Matrix::rows);
        if m == 0 {
            return Err(Error::Precondition("module dimension must be at least 1".into()));
        }
        for r in &rho {
            if r.field() != algebra.field() {
                return Err(Error::FieldMismatch);
            }
            if r.rows() != m || r.cols() != m {
                return Err(Error::DimensionMismatch { expected: m, found: r.rows().max(r.cols()) });
            }
        }
        Ok(Representation { algebra, module_dim: m, rho })
    }

    pub fn from_i64(algebra: Algebra, rho: &[&[&[i64]]]) -> Result<Self> {
        let f = algebra.field();
        let mats = rho.iter().map(|rows| Matrix::from_i64_rows(f, rows)).collect();
        Self::new(algebra, mats)
    }

    pub fn zero(algebra: Algebra, module_dim: usize) -> Self {
        let f = algebra.field();
        let rho = vec![Matrix::zeros(f, module_dim, module_dim); algebra.dim()];
        Representation { algebra, module_dim, rho }
    }

    /// `ρ_x = R_x` acting on `A` itself.
    pub fn regular(algebra: Algebra) -> Self {
        let rho = (0..algebra.dim())
            .map(|i| algebra.right_mult_operator(&algebra.basis_element(i)).expect("basis element"))
            .collect();
        let module_dim = algebra.dim();
        Representation { algebra, module_dim, rho }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    /// Operators of the basis elements.
    pub fn generators(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn rho_of(&self, x: &Element) -> Matrix {
        let mut acc = Matrix::zeros(self.field(), self.module_dim, self.module_dim);
        for (c, r) in x.coords().iter().zip(&self.rho) {
            if !c.is_zero() {
                acc = &acc + &r.scale(c);
            }
        }
        acc
    }

    /// Same algebra, operators replaced by `P ρ P⁻¹`.
    pub fn conjugate(&self, p: &Matrix, p_inv: &Matrix) -> Self {
        let rho = self.rho.iter().map(|r| &(p * r) * p_inv).collect();
        Representation { algebra: self.algebra.clone(), module_dim: self.module_dim, rho }
    }

    /// Block-diagonal direct sum `M ⊕ N`.
    pub fn direct_sum(&self, other: &Representation) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let (m, k) = (self.module_dim, other.module_dim);
        let rho = self
            .rho
            .iter()
            .zip(&other.rho)
            .map(|(a, b)| {
                let mut out = Matrix::zeros(self.field(), m + k, m + k);
                for i in 0..m {
                    for j in 0..m {
                        out.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..k {
                    for j in 0..k {
                        out.set(m + i, m + j, b.get(i, j).clone());
                    }
                }
                out
            })
            .collect();
        Ok(Representation { algebra: self.algebra.clone(), module_dim: m + k, rho })
    }

    /// Basis vector of `M` as a coordinate vector.
    pub fn module_vector(&self, coords: &[i64]) -> Vec<Scalar> {
        coords.iter().map(|&c| self.field().from_i64(c)).collect()
    }
}

/// Terms sharing a scalar factor, each with an integer coefficient.
type TermGroup = (Scalar, Vec<(i64, Vec<Word>)>);

fn coeff_terms(field: Field, groups: Vec<TermGroup>) -> Vec<(Scalar, Vec<Word>)> {
    groups
        .into_iter()
        .flat_map(|(scale, terms)| terms.into_iter().map(move |(c, w)| (&scale * &field.from_i64(c), w)))
        .collect()
}

fn vars() -> (Word, Word, Word) {
    (Word::var(0), Word::var(1), Word::var(2))
}

/// `(β+γ)ρ_a³ − βρ_aρ_{a²} − γρ_{a³}` in `a`.
pub fn cubic_action_identity(params: &GajParams) -> IdentitySpec {
    let f = params.field();
    let (a, _, _) = vars();
    let aa = a.times(&a);
    let terms = coeff_terms(
        f,
        vec![
            (params.combination(1, 1), vec![(1, vec![a.clone(), a.clone(), a.clone()])]),
            (-params.beta(), vec![(1, vec![a.clone(), aa.clone()])]),
            (-params.gamma(), vec![(1, vec![aa.times(&a)])]),
        ],
    );
    build(IdentityKind::Operator, &["a"], terms)
}

/// `(β+γ)(ρ_aρ_{ab} + ρ_a²ρ_b + ρ_{(ab)a}) − β(2ρ_aρ_bρ_a + ρ_{a²b}) − γ(2ρ_bρ_a² + ρ_bρ_{a²})`
/// in `(a, b)`.
pub fn mixed_action_identity(params: &GajParams) -> IdentitySpec {
    let f = params.field();
    let (a, b, _) = vars();
    let (ab, aa) = (a.times(&b), a.times(&a));
    let terms = coeff_terms(
        f,
        vec![
            (
                params.combination(1, 1),
                vec![
                    (1, vec![a.clone(), ab.clone()]),
                    (1, vec![a.clone(), a.clone(), b.clone()]),
                    (1, vec![ab.times(&a)]),
                ],
            ),
            (-params.beta(), vec![(2, vec![a.clone(), b.clone(), a.clone()]), (1, vec![aa.times(&b)])]),
            (-params.gamma(), vec![(2, vec![b.clone(), a.clone(), a.clone()]), (1, vec![b.clone(), aa.clone()])]),
        ],
    );
    build(IdentityKind::Operator, &["a", "b"], terms)
}

/// Linearization of the cubic identity at `a, a, b`:
/// `(β+γ)(ρ_aρ_bρ_a + ρ_bρ_a² + ρ_a²ρ_b) − 2βρ_aρ_{ab} − βρ_bρ_{a²} − 2γρ_{(ab)a} − γρ_{a²b}`.
pub fn linearized_cubic_identity(params: &GajParams) -> IdentitySpec {
    let f = params.field();
    let (a, b, _) = vars();
    let (ab, aa) = (a.times(&b), a.times(&a));
    let terms = coeff_terms(
        f,
        vec![
            (
                params.combination(1, 1),
                vec![
                    (1, vec![a.clone(), b.clone(), a.clone()]),
                    (1, vec![b.clone(), a.clone(), a.clone()]),
                    (1, vec![a.clone(), a.clone(), b.clone()]),
                ],
            ),
            (-params.beta(), vec![(2, vec![a.clone(), ab.clone()]), (1, vec![b.clone(), aa.clone()])]),
            (-params.gamma(), vec![(2, vec![ab.times(&a)]), (1, vec![aa.times(&b)])]),
        ],
    );
    build(IdentityKind::Operator, &["a", "b"], terms)
}

/// `(γ−β){ρ_aρ_bρ_a + ρ_aρ_{ab} − ρ_bρ_a² − ρ_{(ab)a}} + (β+γ){2ρ_a²ρ_b − ρ_bρ_{a²} − ρ_{a²b}}`,
/// the sum of the mixed and linearized cubic identities.
pub fn combined_action_identity(params: &GajParams) -> IdentitySpec {
    let f = params.field();
    let (a, b, _) = vars();
    let (ab, aa) = (a.times(&b), a.times(&a));
    let terms = coeff_terms(
        f,
        vec![
            (
                params.combination(-1, 1),
                vec![
                    (1, vec![a.clone(), b.clone(), a.clone()]),
                    (1, vec![a.clone(), ab.clone()]),
                    (-1, vec![b.clone(), a.clone(), a.clone()]),
                    (-1, vec![ab.times(&a)]),
                ],
            ),
            (
                params.combination(1, 1),
                vec![
                    (2, vec![a.clone(), a.clone(), b.clone()]),
                    (-1, vec![b.clone(), aa.clone()]),
                    (-1, vec![aa.times(&b)]),
                ],
            ),
        ],
    );
    build(IdentityKind::Operator, &["a", "b"], terms)
}

/// Linearization of the mixed identity in `a`, in `(a, b, c)`:
/// `(β+γ)(ρ_cρ_{ab} + ρ_aρ_{cb} + ρ_aρ_cρ_b + ρ_cρ_aρ_b + ρ_{(ab)c} + ρ_{(cb)a})
///  − 2β(ρ_aρ_bρ_c + ρ_cρ_bρ_a + ρ_{(ac)b}) − 2γ(ρ_bρ_aρ_c + ρ_bρ_cρ_a + ρ_bρ_{ac})`.
pub fn trilinear_action_identity(params: &GajParams) -> IdentitySpec {
    let f = params.field();
    let (a, b, c) = vars();
    let (ab, cb, ac) = (a.times(&b), c.times(&b), a.times(&c));
    let terms = coeff_terms(
        f,
        vec![
            (
                params.combination(1, 1),
                vec![
                    (1, vec![c.clone(), ab.clone()]),
                    (1, vec![a.clone(), cb.clone()]),
                    (1, vec![a.clone(), c.clone(), b.clone()]),
                    (1, vec![c.clone(), a.clone(), b.clone()]),
                    (1, vec![ab.times(&c)]),
                    (1, vec![cb.times(&a)]),
                ],
            ),
            (
                -params.beta(),
                vec![
                    (2, vec![a.clone(), b.clone(), c.clone()]),
                    (2, vec![c.clone(), b.clone(), a.clone()]),
                    (2, vec![ac.times(&b)]),
                ],
            ),
            (
                -params.gamma(),
                vec![
                    (2, vec![b.clone(), a.clone(), c.clone()]),
                    (2, vec![b.clone(), c.clone(), a.clone()]),
                    (2, vec![b.clone(), ac.clone()]),
                ],
            ),
        ],
    );
    build(IdentityKind::Operator, &["a", "b", "c"], terms)
}

fn check_rep_field(r: &Representation, params: &GajParams) -> Result<()> {
    if r.field() != params.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

fn check_in_algebra(r: &Representation, xs: &[&Element]) -> Result<()> {
    if xs.iter().any(|x| x.dim() != r.algebra.dim()) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(())
}

/// Cubic action identity evaluated at `a`.
pub fn rep_defect_1(r: &Representation, a: &Element, params: &GajParams) -> Result<Matrix> {
    check_rep_field(r, params)?;
    check_in_algebra(r, &[a])?;
    Ok(cubic_action_identity(params).evaluate_operator(r, std::slice::from_ref(a)))
}

/// Mixed action identity evaluated at `(a, b)`.
pub fn rep_defect_2(r: &Representation, a: &Element, b: &Element, params: &GajParams) -> Result<Matrix> {
    check_rep_field(r, params)?;
    check_in_algebra(r, &[a, b])?;
    Ok(mixed_action_identity(params).evaluate_operator(r, &[a.clone(), b.clone()]))
}

/// A failing identity together with the basis tuple of its linearization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepViolation {
    pub identity: &'static str,
    pub tuple: BasisTuple,
}

/// First violation of the cubic or mixed action identity, found by sweeping
/// their linearizations over basis tuples.
pub fn representation_violation(r: &Representation, params: &GajParams) -> Result<Option<RepViolation>> {
    check_rep_field(r, params)?;
    if !check_gaj_identity(&r.algebra, params)? {
        return Err(Error::BaseAlgebraNotGaj);
    }
    for (name, spec) in [("cubic", cubic_action_identity(params)), ("mixed", mixed_action_identity(params))] {
        if let Some(tuple) = linearize_identity(&spec)?.operator_violation(r) {
            return Ok(Some(RepViolation { identity: name, tuple }));
        }
    }
    Ok(None)
}

/// Whether `ρ` is a representation for the variety given by `params`.
pub fn check_representation(r: &Representation, params: &GajParams) -> Result<bool> {
    Ok(representation_violation(r, params)?.is_none())
}

/// The algebra `A ⊕ M` with `(a + m)(b + n) = ab + ρ_a(n) + ρ_b(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitNullExtension {
    pub algebra: Algebra,
    pub base_dim: usize,
    pub module_dim: usize,
}

impl SplitNullExtension {
    /// Subspace spanned by the module coordinates.
    pub fn module_part(&self) -> Subspace {
        let f = self.algebra.field();
        let n = self.base_dim + self.module_dim;
        let vs = (self.base_dim..n).map(|i| crate::linalg::unit(f, n, i)).collect();
        Subspace::from_vectors(f, n, vs)
    }
}

pub fn split_null_extension(r: &Representation) -> SplitNullExtension {
    let alg = &r.algebra;
    let (n, m) = (alg.dim(), r.module_dim);
    let f = alg.field();
    let mut names: Vec<String> = alg.basis_names().to_vec();
    for k in 0..m {
        let mut name = format!("m{}", k + 1);
        while names.contains(&name) {
            name.push('\'');
        }
        names.push(name);
    }
    let mut products = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut v = alg.structure_constants(i, j).to_vec();
            v.resize(n + m, f.zero());
            products.push((i, j, v));
        }
        for k in 0..m {
            let mut v = vec![f.zero(); n];
            v.extend(r.rho[i].column(k));
            products.push((i, n + k, v));
        }
    }
    let algebra = Algebra::from_products(f, names, products).expect("symmetric by construction");
    SplitNullExtension { algebra, base_dim: n, module_dim: m }
}

/// Representation test through the extension: `A ⊕ M` satisfies the identity.
pub fn check_rep_via_extension(r: &Representation, params: &GajParams) -> Result<bool> {
    check_rep_field(r, params)?;
    if !check_gaj_identity(&r.algebra, params)? {
        return Err(Error::BaseAlgebraNotGaj);
    }
    check_gaj_identity(&split_null_extension(r).algebra, params)
}

/// Decomposition of `M` by the operator `ρ_e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecomposition {
    pub parts: Decomposition,
}

impl ModuleDecomposition {
    /// Names of the nonzero components, e.g. `["M_0"]` or `["M_1", "M_-1"]`.
    pub fn nonzero_components(&self) -> Vec<String> {
        self.parts.components().into_iter().filter(|(_, s)| !s.is_zero()).map(|(l, _)| format!("M_{l}")).collect()
    }
}

pub fn module_peirce(r: &Representation, e: &Element, params: &GajParams) -> Result<ModuleDecomposition> {
    check_rep_field(r, params)?;
    check_in_algebra(r, &[e])?;
    if !r.algebra.is_idempotent(e)? {
        return Err(Error::NotIdempotent);
    }
    if !check_representation(r, params)? {
        return Err(Error::Precondition("ρ is not a representation for these parameters".into()));
    }
    let parts = decompose_operator(&r.rho_of(e), params)?;
    Ok(ModuleDecomposition { parts })
}

/// Checks the relations between `A_i·M_j` that hold in the regime of the
/// decompositions.
pub fn verify_action_relations(
    r: &Representation,
    alg: &PeirceDecomposition,
    module: &ModuleDecomposition,
) -> RelationReport {
    let m = r.module_dim;
    let act = |a: &[Scalar], v: &[Scalar]| r.rho_of(&Element::new(a.to_vec())).mul_vec(v);
    let (a, md) = (&alg.parts, &module.parts);
    let (a0, a1, m0, m1) = (&a.zero, &a.one, &md.zero, &md.one);
    let lab = md.lambda_label();
    let rel = |s: String, l: &Subspace, rr: &Subspace, t: Option<&Subspace>| relation(s, l, rr, t, m, act);
    let mut checks = Vec::new();
    match md.case.kind {
        CaseKind::Generic => {
            let al = a.lambda_or_zero();
            let ml = md.lambda_or_zero();
            let m01 = m0.sum(m1).expect("same ambient space");
            let al_name = format!("A_{lab}");
            let ml_name = format!("M_{lab}");
            checks.extend([
                rel("A_0·M_0 ⊆ M_0".into(), a0, m0, Some(m0)),
                rel("A_0·M_1 = {0}".into(), a0, m1, None),
                rel(format!("A_0·{ml_name} ⊆ {ml_name}"), a0, &ml, Some(&ml)),
                rel("A_1·M_0 = {0}".into(), a1, m0, None),
                rel("A_1·M_1 ⊆ M_1".into(), a1, m1, Some(m1)),
                rel(format!("A_1·{ml_name} ⊆ {ml_name}"), a1, &ml, Some(&ml)),
                rel(format!("{al_name}·M_0 ⊆ {ml_name}"), &al, m0, Some(&ml)),
                rel(format!("{al_name}·M_1 ⊆ {ml_name}"), &al, m1, Some(&ml)),
                rel(format!("{al_name}·{ml_name} ⊆ M_0 ⊕ M_1"), &al, &ml, Some(&m01)),
            ]);
            if !md.case.beta_zero && !md.case.beta_plus_3gamma_zero {
                checks.extend([
                    rel(format!("A_0·{ml_name} = {{0}}"), a0, &ml, None),
                    rel(format!("{al_name}·M_0 = {{0}}"), &al, m0, None),
                    rel(format!("{al_name}·{ml_name} = {{0}}"), &al, &ml, None),
                ]);
            }
        }
        CaseKind::GammaZero => checks.extend([
            rel("A_1·M_0 ⊆ M_0".into(), a1, m0, Some(m0)),
            rel("A_0·M_1 ⊆ M_0".into(), a0, m1, Some(m0)),
            rel("A_0·M_0 ⊆ M_0".into(), a0, m0, Some(m0)),
        ]),
        CaseKind::BetaPlusGammaZero => checks.extend([
            rel("A_0·M_1 = {0}".into(), a0, m1, None),
            rel("A_1·M_0 = {0}".into(), a1, m0, None),
            rel("A_1·M_1 ⊆ M_1".into(), a1, m1, Some(m1)),
        ]),
        CaseKind::BetaPlus2GammaZero => checks.extend([
            rel("A_0·M_1 = {0}".into(), a0, m1, None),
            rel("A_1·M_0 = {0}".into(), a1, m0, None),
            rel("A_0·M_0 ⊆ M_0".into(), a0, m0, Some(m0)),
        ]),
    }
    RelationReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::algebras;
    use crate::peirce::{acts_by_defining_polynomials, peirce_decompose, RelationStatus};

    const Q: Field = Field::Rationals;

    fn p(f: Field, b: i64, g: i64) -> GajParams {
        GajParams::from_i64(f, b, g).unwrap()
    }

    fn rotation_module(f: Field) -> Representation {
        Representation::from_i64(algebras::square_root(f), &[&[&[0, 0], &[0, 0]], &[&[-1, 2], &[-1, 1]]]).unwrap()
    }

    #[test]
    fn defects_vanish_on_rotation_module() {
        let r = rotation_module(Q);
        let params = p(Q, 1, -1);
        let (e, a) = (r.algebra().basis_element(0), r.algebra().basis_element(1));
        assert!(rep_defect_1(&r, &a, &params).unwrap().is_zero());
        assert!(rep_defect_2(&r, &a, &e, &params).unwrap().is_zero());
        assert!(rep_defect_2(&r, &a, &a, &params).unwrap().is_zero());
        assert!(check_representation(&r, &params).unwrap());
        assert!(check_rep_via_extension(&r, &params).unwrap());
    }

    #[test]
    fn zero_and_regular_representations() {
        for alg in [algebras::square_root(Q), algebras::shift_pair(Q)] {
            let params = p(Q, 1, -1);
            let z = Representation::zero(alg.clone(), 2);
            assert!(check_representation(&z, &params).unwrap());
            assert!(rep_defect_2(&z, &alg.basis_element(1), &alg.basis_element(0), &params).unwrap().is_zero());
            let reg = Representation::regular(alg.clone());
            assert!(check_representation(&reg, &params).unwrap());
            assert!(check_rep_via_extension(&reg, &params).unwrap());
            assert!(rep_defect_1(&reg, &alg.basis_element(1), &params).unwrap().is_zero());
        }
    }

    #[test]
    fn identity_on_e_and_zero_on_a() {
        let r = Representation::from_i64(algebras::square_root(Q), &[&[&[1]], &[&[0]]]).unwrap();
        let params = p(Q, 1, -1);
        assert_eq!(check_representation(&r, &params).unwrap(), check_rep_via_extension(&r, &params).unwrap());
    }

    #[test]
    fn base_algebra_must_satisfy_identity() {
        let r = Representation::zero(algebras::square_root(Q), 1);
        assert_eq!(check_representation(&r, &p(Q, 3, -1)), Err(Error::BaseAlgebraNotGaj));
        assert_eq!(check_rep_via_extension(&r, &p(Q, 3, -1)), Err(Error::BaseAlgebraNotGaj));
    }

    #[test]
    fn split_null_extension_shape() {
        let r = rotation_module(Q);
        let s = split_null_extension(&r);
        assert_eq!(s.algebra.dim(), 4);
        assert_eq!(s.algebra.basis_names(), ["e", "a", "m1", "m2"]);
        assert!(check_gaj_identity(&s.algebra, &p(Q, 1, -1)).unwrap());
        // a·m1 = ρ_a(m1) = -m1 - m2
        let prod = s.algebra.mul(&s.algebra.basis_element(1), &s.algebra.basis_element(2));
        assert_eq!(prod, s.algebra.element_from_i64(&[0, 0, -1, -1]));

        let z = split_null_extension(&Representation::zero(algebras::square_root(Q), 2));
        let mp = z.module_part();
        for v in mp.basis() {
            for j in 0..4 {
                let x = Element::new(v.clone());
                assert!(z.algebra.mul(&x, &z.algebra.basis_element(j)).is_zero());
            }
        }
    }

    #[test]
    fn nonrepresentation_detected_by_both_procedures() {
        // ρ_e = 2: the cubic identity at e gives -βρ_e² - γρ_e = -2.
        let r = Representation::from_i64(algebras::square_root(Q), &[&[&[2]], &[&[0]]]).unwrap();
        let params = p(Q, 1, -1);
        let v = representation_violation(&r, &params).unwrap();
        assert!(v.is_some());
        assert!(!check_rep_via_extension(&r, &params).unwrap());
    }

    #[test]
    fn module_peirce_of_rotation_and_regular() {
        let r = rotation_module(Q);
        let e = r.algebra().basis_element(0);
        let d = module_peirce(&r, &e, &p(Q, 1, -1)).unwrap();
        assert!(d.parts.zero.is_full());
        assert!(d.parts.one.is_zero());
        assert_eq!(d.nonzero_components(), ["M_0"]);

        let reg = Representation::regular(algebras::shift_pair(Q));
        let params = p(Q, 1, -1);
        let d = module_peirce(&reg, &e3(&reg), &params).unwrap();
        assert_eq!(d.parts.one.dim(), 1);
        assert_eq!(d.parts.zero.dim(), 2);
        assert!(d.parts.lambda_part.is_none());
        assert!(acts_by_defining_polynomials(&reg.rho_of(&e3(&reg)), &d.parts));
    }

    fn e3(r: &Representation) -> Element {
        r.algebra().basis_element(0)
    }

    #[test]
    fn action_relations_on_examples() {
        let r = rotation_module(Q);
        let params = p(Q, 1, -1);
        let e = r.algebra().basis_element(0);
        let ad = peirce_decompose(r.algebra(), &e, &params).unwrap();
        let md = module_peirce(&r, &e, &params).unwrap();
        let rep = verify_action_relations(&r, &ad, &md);
        assert!(rep.all_hold());
        let c = rep.checks.iter().find(|c| c.relation == "A_1·M_1 ⊆ M_1").unwrap();
        assert_eq!(c.status, RelationStatus::Vacuous);

        let reg = Representation::regular(algebras::shift_pair(Q));
        let params = p(Q, 1, -1);
        let ad = peirce_decompose(reg.algebra(), &e3(&reg), &params).unwrap();
        let md = module_peirce(&reg, &e3(&reg), &params).unwrap();
        let rep = verify_action_relations(&reg, &ad, &md);
        assert!(rep.all_hold());
        let c = rep.checks.iter().find(|c| c.relation == "A_0·M_1 = {0}").unwrap();
        assert_eq!(c.status, RelationStatus::Pass);
    }

    #[test]
    fn strengthened_relations_skipped_for_almost_jordan() {
        let reg = Representation::regular(algebras::split_associative(Q));
        let params = p(Q, 3, -1);
        let e = reg.algebra().basis_element(0);
        let ad = peirce_decompose(reg.algebra(), &e, &params).unwrap();
        let md = module_peirce(&reg, &e, &params).unwrap();
        let rep = verify_action_relations(&reg, &ad, &md);
        assert!(rep.all_hold());
        assert_eq!(rep.checks.len(), 9);
        let generic = p(Q, 1, 1);
        let ad2 = peirce_decompose(reg.algebra(), &e, &generic).unwrap();
        let rep2 = verify_action_relations(&reg, &ad2, &module_peirce(&reg, &e, &generic).unwrap());
        assert_eq!(rep2.checks.len(), 12);
        assert!(rep2.all_hold());
    }

    #[test]
    fn symmetric_matrices_regular_module_spans_three_components() {
        let reg = Representation::regular(algebras::symmetric_matrices(Q));
        let params = p(Q, 3, -1);
        let e = reg.algebra().basis_element(0);
        let md = module_peirce(&reg, &e, &params).unwrap();
        assert_eq!(md.nonzero_components(), ["M_0", "M_1", "M_λ"]);
        let ad = peirce_decompose(reg.algebra(), &e, &params).unwrap();
        assert!(verify_action_relations(&reg, &ad, &md).all_hold());
    }

    #[test]
    fn direct_sum_and_conjugation_preserve_validity() {
        let r = rotation_module(Q);
        let params = p(Q, 1, -1);
        let s = r.direct_sum(&Representation::regular(algebras::square_root(Q))).unwrap();
        assert_eq!(s.module_dim(), 4);
        assert!(check_representation(&s, &params).unwrap());
        let pm = Matrix::from_i64_rows(Q, &[&[1, 1], &[0, 1]]);
        let pi = Matrix::from_i64_rows(Q, &[&[1, -1], &[0, 1]]);
        assert!(check_representation(&r.conjugate(&pm, &pi), &params).unwrap());
    }

    #[test]
    fn representation_shape_errors() {
        let alg = algebras::square_root(Q);
        assert!(matches!(Representation::from_i64(alg.clone(), &[&[&[1]]]), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(
            Representation::from_i64(alg, &[&[&[1]], &[&[1, 0], &[0, 1]]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
