//! Small algebras used throughout, and the built-in document corpus.

use crate::algebra::{Algebra, GajParams};
use crate::document::{from_resolved, Expected, ResolvedDocument, WorkbenchDocument};
use crate::field::Field;
use crate::representation::Representation;

pub mod algebras {
    use crate::algebra::Algebra;
    use crate::field::Field;

    /// Basis `(e, a)`: `e² = e`, `a² = e`, other products zero.
    pub fn square_root(f: Field) -> Algebra {
        Algebra::from_i64_products(f, &["e", "a"], &[(0, 0, &[1, 0]), (1, 1, &[1, 0])]).unwrap()
    }

    /// Basis `(e, a)`: `e² = e`, `ea = -e - a`, `a² = e + a`.
    pub fn beta_zero(f: Field) -> Algebra {
        Algebra::from_i64_products(f, &["e", "a"], &[(0, 0, &[1, 0]), (0, 1, &[-1, -1]), (1, 1, &[1, 1])]).unwrap()
    }

    /// Basis `(e, a, b)`: `e² = e`, `ab = b`, other products zero.
    pub fn shift_pair(f: Field) -> Algebra {
        Algebra::from_i64_products(f, &["e", "a", "b"], &[(0, 0, &[1, 0, 0]), (1, 2, &[0, 0, 1])]).unwrap()
    }

    /// `F × F` with orthogonal idempotents `e`, `f`.
    pub fn split_associative(f: Field) -> Algebra {
        Algebra::from_i64_products(f, &["e", "f"], &[(0, 0, &[1, 0]), (1, 1, &[0, 1])]).unwrap()
    }

    /// Unit `u` and idempotent `f`: `u² = u`, `uf = f`, `f² = f`.
    pub fn unital_pair(f: Field) -> Algebra {
        Algebra::from_i64_products(f, &["u", "f"], &[(0, 0, &[1, 0]), (0, 1, &[0, 1]), (1, 1, &[0, 1])]).unwrap()
    }

    /// Symmetric 2×2 matrices under `x∘y = (xy + yx)/2`, basis
    /// `(E11, E22, S = E12 + E21)`.
    pub fn symmetric_matrices(f: Field) -> Algebra {
        let half = f.from_i64(2).inv().unwrap();
        let z = f.zero();
        let o = f.one();
        let products = vec![
            (0, 0, vec![o.clone(), z.clone(), z.clone()]),
            (1, 1, vec![z.clone(), o.clone(), z.clone()]),
            (0, 2, vec![z.clone(), z.clone(), half.clone()]),
            (1, 2, vec![z.clone(), z.clone(), half]),
            (2, 2, vec![o.clone(), o, z]),
        ];
        let names = ["E11", "E22", "S"].iter().map(|s| s.to_string()).collect();
        Algebra::from_products(f, names, products).unwrap()
    }
}

fn entry(
    name: &str,
    description: &str,
    algebra: Algebra,
    params: (i64, i64),
    representation: Option<Representation>,
    expected: Expected,
    notes: &[&str],
) -> WorkbenchDocument {
    let field = Field::Rationals;
    let params = GajParams::from_i64(field, params.0, params.1).unwrap();
    let idempotent = Some(algebra.basis_element(0));
    let resolved = ResolvedDocument { field, algebra, params: Some(params), idempotent, representation };
    let mut doc = from_resolved(&resolved);
    doc.name = Some(name.to_string());
    doc.description = Some(description.to_string());
    doc.expected = Some(expected);
    doc.notes = notes.iter().map(|s| s.to_string()).collect();
    doc
}

/// The seven built-in documents, in a fixed order.
pub fn builtin_corpus() -> Vec<WorkbenchDocument> {
    let q = Field::Rationals;
    let holds = Expected { identity_holds: Some(true), ..Expected::default() };
    let inclusion_notes = [
        "A_λ·M_λ is checked as an inclusion in M_0 ⊕ M_1; equality is not claimed.",
        "A_1·M_λ ⊆ M_λ is checked; the split-extension relation S_λS_1 ⊆ S_1 is not used.",
    ];
    let rotation =
        Representation::from_i64(algebras::square_root(q), &[&[&[0, 0], &[0, 0]], &[&[-1, 2], &[-1, 1]]]).unwrap();
    vec![
        entry(
            "square-root",
            "e² = e, a² = e: satisfies the identity for (1, -1) and is not power-associative",
            algebras::square_root(q),
            (1, -1),
            None,
            holds.clone(),
            &[],
        ),
        entry(
            "beta-zero",
            "e² = e, ea = -e - a, a² = e + a: satisfies x³y = ((xy)x)x",
            algebras::beta_zero(q),
            (0, 1),
            None,
            holds.clone(),
            &["a²·a² computes to -a from this table (a³ = 0), not 2a."],
        ),
        entry(
            "shift-pair",
            "e² = e, ab = b: not power-associative, since (a+b)⁴ = 2b while (a+b)²(a+b)² = 0",
            algebras::shift_pair(q),
            (1, 1),
            None,
            Expected { identity_holds: Some(false), ..Expected::default() },
            &[
                "The identity fails for (1, 1): x = a, y = b gives -(β+γ)b = -2b.",
                "The admissible parameters for this table are exactly the line β + γ = 0.",
            ],
        ),
        entry(
            "rotation-module",
            "2-dimensional irreducible module over the square-root algebra with ρ_e = 0",
            algebras::square_root(q),
            (1, -1),
            Some(rotation),
            Expected {
                identity_holds: Some(true),
                representation_valid: Some(true),
                irreducible: Some(true),
                certificate: Some("NoRationalEigenvalueDim2".into()),
                module_components: Some(vec!["M_0".into()]),
            },
            &["ρ_e = 0, so M = M_0; no structural conclusion is available for this component."],
        ),
        entry(
            "split-associative",
            "F × F with orthogonal idempotents; satisfies the identity for every (β, γ)",
            algebras::split_associative(q),
            (3, -1),
            None,
            holds,
            &[],
        ),
        entry(
            "regular-square-root",
            "regular representation ρ_x = R_x of the square-root algebra",
            algebras::square_root(q),
            (1, -1),
            Some(Representation::regular(algebras::square_root(q))),
            Expected {
                identity_holds: Some(true),
                representation_valid: Some(true),
                irreducible: Some(false),
                certificate: None,
                module_components: Some(vec!["M_0".into(), "M_1".into()]),
            },
            &inclusion_notes,
        ),
        entry(
            "regular-shift-pair",
            "regular representation ρ_x = R_x of the shift-pair algebra",
            algebras::shift_pair(q),
            (1, -1),
            Some(Representation::regular(algebras::shift_pair(q))),
            Expected {
                identity_holds: Some(true),
                representation_valid: Some(true),
                irreducible: Some(false),
                certificate: None,
                module_components: Some(vec!["M_0".into(), "M_1".into()]),
            },
            &inclusion_notes,
        ),
    ]
}

pub fn corpus_entry(name: &str) -> Option<WorkbenchDocument> {
    builtin_corpus().into_iter().find(|d| d.name.as_deref() == Some(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::{emit_document, parse_document};
    use crate::identity::check_gaj_identity;

    #[test]
    fn corpus_has_seven_resolvable_documents() {
        let c = builtin_corpus();
        assert_eq!(c.len(), 7);
        for d in &c {
            let text = emit_document(d).unwrap();
            assert_eq!(&parse_document(&text).unwrap(), d);
        }
        let bz = corpus_entry("beta-zero").unwrap();
        assert!(bz.notes[0].contains("not 2a"));
    }

    #[test]
    fn symmetric_matrices_are_almost_jordan() {
        let alg = algebras::symmetric_matrices(Field::Rationals);
        assert!(check_gaj_identity(&alg, &GajParams::from_i64(Field::Rationals, 3, -1).unwrap()).unwrap());
    }
}
