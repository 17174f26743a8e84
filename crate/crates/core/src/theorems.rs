//! Structure checks for modules concentrated in one Peirce component, and
//! the sweep of identities that follow from the representation identities.
//!
//! Nothing here assumes the statement being checked: both sides are
//! recomputed on every instance and a failure is reported with a witness.

use std::fmt;

use serde::Serialize;

use crate::algebra::{Element, GajParams};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::identity::linearize_identity;
use crate::linalg::Matrix;
use crate::peirce::{classify_params, decompose_operator, lambda, peirce_decompose, CaseKind, Decomposition};
use crate::representation::{
    check_representation, combined_action_identity, linearized_cubic_identity, trilinear_action_identity,
    Representation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    Holds,
    Fails,
    /// The component the statement is about is zero.
    Vacuous,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Holds => "holds",
            CheckStatus::Fails => "FAILS",
            CheckStatus::Vacuous => "vacuous",
        })
    }
}

/// A pair of `A_1` elements at which a required equality fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub a: String,
    pub b: String,
    pub failed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityResult {
    pub identity: String,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub status: CheckStatus,
    pub witness: Option<Witness>,
    pub identities: Vec<IdentityResult>,
}

impl TheoremCheck {
    fn vacuous() -> Self {
        TheoremCheck { status: CheckStatus::Vacuous, witness: None, identities: Vec::new() }
    }
}

/// Splits `M` by `ρ_e` without requiring `ρ` to be a representation, so that
/// perturbed maps can be checked too.
fn split_module(r: &Representation, e: &Element, params: &GajParams) -> Result<Decomposition> {
    if e.dim() != r.algebra().dim() {
        return Err(Error::AlgebraMismatch);
    }
    decompose_operator(&r.rho_of(e), params)
}

type PairCheck<'a> = (&'a str, Box<dyn Fn(&Matrix, &Matrix, &Matrix) -> bool + 'a>);
type PairIdentity<'a> = (&'a str, Box<dyn Fn(&Matrix, &Matrix, &Matrix) -> Matrix + 'a>);

/// Runs equality checks and identity evaluations on every ordered pair of
/// `A_1` basis vectors. Closures receive `(ρ_a, ρ_b, ρ_(ab))`.
fn sweep_pairs(
    r: &Representation,
    basis: &[Vec<Scalar>],
    checks: &[PairCheck<'_>],
    identities: &[PairIdentity<'_>],
) -> TheoremCheck {
    let alg = r.algebra();
    let elems: Vec<Element> = basis.iter().map(|v| Element::new(v.clone())).collect();
    let mut witness = None;
    let mut vanish = vec![true; identities.len()];
    for a in &elems {
        for b in &elems {
            let (ra, rb, rab) = (r.rho_of(a), r.rho_of(b), r.rho_of(&alg.mul(a, b)));
            if witness.is_none() {
                if let Some((name, _)) = checks.iter().find(|(_, ok)| !ok(&ra, &rb, &rab)) {
                    witness =
                        Some(Witness { a: alg.format_element(a), b: alg.format_element(b), failed: name.to_string() });
                }
            }
            for (k, (_, id)) in identities.iter().enumerate() {
                if vanish[k] && !id(&ra, &rb, &rab).is_zero() {
                    vanish[k] = false;
                }
            }
        }
    }
    TheoremCheck {
        status: if witness.is_some() { CheckStatus::Fails } else { CheckStatus::Holds },
        witness,
        identities: identities
            .iter()
            .zip(vanish)
            .map(|((name, _), v)| IdentityResult { identity: name.to_string(), vanishes: v })
            .collect(),
    }
}

/// For a module with `ρ_e = id`, checks `ρ_(ab) = ρ_aρ_b = ρ_bρ_a` on `A_1`,
/// which is associativity of the module restricted to `A_1`.
pub fn check_associative_module(r: &Representation, e: &Element, params: &GajParams) -> Result<TheoremCheck> {
    let ad = peirce_decompose(r.algebra(), e, params)?;
    let md = split_module(r, e, params)?;
    if !md.one.is_full() {
        return Err(Error::ModuleNotM1);
    }
    let f = r.field();
    let two = f.from_i64(2);
    let checks: Vec<PairCheck> = vec![
        ("ρ_(ab) = ρ_aρ_b", Box::new(|ra, rb, rab| *rab == ra * rb)),
        ("ρ_aρ_b = ρ_bρ_a", Box::new(|ra, rb, _| ra * rb == rb * ra)),
    ];
    let identities: Vec<PairIdentity> = vec![
        ("ρ_(ab) + ρ_aρ_b − 2ρ_bρ_a", Box::new(|ra, rb, rab| &(rab + &(ra * rb)) - &(rb * ra).scale(&two))),
        ("ρ_(ab) + ρ_bρ_a − 2ρ_aρ_b", Box::new(|ra, rb, rab| &(rab + &(rb * ra)) - &(ra * rb).scale(&two))),
    ];
    Ok(sweep_pairs(r, ad.parts.one.basis(), &checks, &identities))
}

/// Scalar conditions under which a module equal to its λ component has
/// commuting `A_1` action with `ρ_(ab) = λ⁻¹ρ_aρ_b`; returns those that fail.
pub fn lambda_hypotheses_failing(params: &GajParams) -> Vec<String> {
    [
        ("β ≠ 0", params.combination(1, 0)),
        ("γ ≠ 0", params.combination(0, 1)),
        ("β+γ ≠ 0", params.combination(1, 1)),
        ("β+2γ ≠ 0", params.combination(1, 2)),
        ("β+3γ ≠ 0", params.combination(1, 3)),
        ("β−γ ≠ 0", params.combination(1, -1)),
    ]
    .into_iter()
    .filter(|(_, v)| v.is_zero())
    .map(|(s, _)| s.to_string())
    .collect()
}

pub fn check_lambda_relations(r: &Representation, e: &Element, params: &GajParams) -> Result<TheoremCheck> {
    let failing = lambda_hypotheses_failing(params);
    if !failing.is_empty() {
        return Err(Error::HypothesisNotMet(failing));
    }
    debug_assert_eq!(classify_params(params).kind, CaseKind::Generic);
    let ad = peirce_decompose(r.algebra(), e, params)?;
    let ml = split_module(r, e, params)?.lambda_or_zero();
    if ml.is_zero() {
        return Ok(TheoremCheck::vacuous());
    }
    if !ml.is_full() {
        return Err(Error::HypothesisNotMet(vec!["M = M_λ".into()]));
    }
    let l = lambda(params).expect("β+γ ≠ 0");
    let l_inv = l.inv().expect("λ ≠ 0 when γ ≠ 0");
    let (b, g) = (params.beta().clone(), params.gamma().clone());
    let two = r.field().from_i64(2);
    let two_g_l = &(&two * &g) * &l;
    let mid = &(&b + &g) + &two_g_l;
    let c16 = (&params.combination(1, 3) * &params.combination(1, -1))
        .checked_div(&params.combination(1, 1))
        .expect("β+γ ≠ 0");
    let checks: Vec<PairCheck> = vec![
        ("ρ_aρ_b = ρ_bρ_a", Box::new(|ra, rb, _| ra * rb == rb * ra)),
        ("ρ_(ab) = λ⁻¹ρ_aρ_b", Box::new(|ra, rb, rab| *rab == (ra * rb).scale(&l_inv))),
    ];
    let identities: Vec<PairIdentity> = vec![
        (
            "γρ_(ab) + (β+γ+2γλ)ρ_aρ_b − 2γλρ_bρ_a",
            Box::new(|ra, rb, rab| &(&rab.scale(&g) + &(ra * rb).scale(&mid)) - &(rb * ra).scale(&two_g_l)),
        ),
        (
            "γρ_(ab) + (β+γ+2γλ)ρ_bρ_a − 2γλρ_aρ_b",
            Box::new(|ra, rb, rab| &(&rab.scale(&g) + &(rb * ra).scale(&mid)) - &(ra * rb).scale(&two_g_l)),
        ),
        ("(β+3γ)(β−γ)/(β+γ)·(ρ_aρ_b − ρ_bρ_a)", Box::new(|ra, rb, _| (&(ra * rb) - &(rb * ra)).scale(&c16))),
        ("−λρ_(ab) + ρ_aρ_b", Box::new(|ra, rb, rab| &(ra * rb) - &rab.scale(&l))),
    ];
    Ok(sweep_pairs(r, ad.parts.one.basis(), &checks, &identities))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsequenceResult {
    pub name: String,
    pub identity: String,
    /// Basis names where the linearized identity is nonzero.
    pub violation: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsequenceReport {
    pub results: Vec<ConsequenceResult>,
}

impl ConsequenceReport {
    pub fn all_vanish(&self) -> bool {
        self.results.iter().all(|r| r.violation.is_none())
    }
}

/// Sweeps the identities derived from the cubic and mixed action identities.
/// On a representation they must all vanish.
pub fn verify_linearized_consequences(r: &Representation, params: &GajParams) -> Result<ConsequenceReport> {
    if !check_representation(r, params)? {
        return Err(Error::Precondition("ρ is not a representation for these parameters".into()));
    }
    let names = r.algebra().basis_names();
    let mut results = Vec::new();
    for (name, spec) in [
        ("linearized cubic", linearized_cubic_identity(params)),
        ("mixed plus linearized cubic", combined_action_identity(params)),
        ("linearized mixed", trilinear_action_identity(params)),
    ] {
        let form = linearize_identity(&spec)?;
        let violation = form.operator_violation(r).map(|t| t.iter().map(|&i| names[i].clone()).collect());
        results.push(ConsequenceResult { name: name.to_string(), identity: spec.render(), violation });
    }
    Ok(ConsequenceReport { results })
}
