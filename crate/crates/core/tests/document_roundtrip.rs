use gajwb::document::{emit_document, parse_document};
use gajwb::Algebra;
use gajwb::Field;
use proptest::prelude::*;
use serde_json::{json, Value};

const NAMES: [&str; 3] = ["e", "a", "b"];

/// A product `(i, j)`, whether to write it as `(j, i)`, and its coefficients
/// as `(numerator, denominator, spelling)`.
type ProductRow = (usize, usize, bool, Vec<(i64, i64, u8)>);

/// A scalar written in one of several equivalent non-canonical spellings.
fn spelled(num: i64, den: i64, style: u8) -> Value {
    match style {
        0 if den == 1 => json!(num),
        1 => json!(format!("{}/{}", 2 * num, 2 * den)),
        _ => json!(format!("{num}/{den}")),
    }
}

fn table(n: usize) -> impl Strategy<Value = Vec<ProductRow>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let entry = (-3i64..=3, 1i64..=3, 0u8..3);
    pairs
        .into_iter()
        .map(|(i, j)| (Just(i), Just(j), any::<bool>(), prop::collection::vec(entry.clone(), n)))
        .collect::<Vec<_>>()
}

fn document(n: usize, rows: &[ProductRow], rep: Option<Vec<Vec<Vec<i64>>>>) -> Value {
    let products: Vec<Value> = rows
        .iter()
        .map(|(i, j, swap, coeffs)| {
            let (l, r) = if *swap { (j, i) } else { (i, j) };
            let result: serde_json::Map<String, Value> = coeffs
                .iter()
                .enumerate()
                .map(|(k, &(num, den, style))| (NAMES[k].to_string(), spelled(num, den, style)))
                .collect();
            json!({ "left": NAMES[*l], "right": NAMES[*r], "result": result })
        })
        .collect();
    let mut doc = json!({
        "algebra": { "basis": &NAMES[..n], "products": products },
        "params": { "beta": "2/2", "gamma": -1 },
    });
    if let Some(mats) = rep {
        let m = mats[0].len();
        let matrices: serde_json::Map<String, Value> =
            mats.iter().enumerate().map(|(k, a)| (NAMES[k].to_string(), json!(a))).collect();
        doc["representation"] = json!({ "module_dim": m, "matrices": matrices });
    }
    doc
}

fn matrices(n: usize) -> impl Strategy<Value = Option<Vec<Vec<Vec<i64>>>>> {
    (1usize..=2).prop_flat_map(move |m| {
        prop::option::of(prop::collection::vec(prop::collection::vec(prop::collection::vec(-2i64..=2, m), m), n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn emit_is_a_fixed_point_of_parse(
        (n, rows, rep) in (1usize..=3).prop_flat_map(|n| (Just(n), table(n), matrices(n)))
    ) {
        let text = document(n, &rows, rep).to_string();
        let doc = parse_document(&text).unwrap();
        let emitted = emit_document(&doc).unwrap();
        let reparsed = parse_document(&emitted).unwrap();
        prop_assert_eq!(&reparsed, &doc.canonical().unwrap());
        prop_assert_eq!(emit_document(&reparsed).unwrap(), emitted.clone());

        // The structure constants survive, with products read symmetrically.
        let alg: Algebra = doc.resolve().unwrap().algebra;
        let back = reparsed.resolve().unwrap().algebra;
        prop_assert_eq!(&alg, &back);
        for (i, j, _, coeffs) in &rows {
            for (k, &(num, den, _)) in coeffs.iter().enumerate() {
                let want = Field::Rationals.parse_scalar(&format!("{num}/{den}")).unwrap();
                prop_assert_eq!(&alg.structure_constants(*i, *j)[k], &want);
                prop_assert_eq!(&alg.structure_constants(*j, *i)[k], &want);
            }
        }
        for prod in &reparsed.algebra.products {
            prop_assert!(!prod.result.is_empty());
            prop_assert!(prod.result.values().all(|v| v.0 != "0"));
        }
    }
}

#[test]
fn conflicting_orientations_are_rejected() {
    let text = json!({
        "algebra": {
            "basis": ["e", "a"],
            "products": [
                { "left": "a", "right": "e", "result": { "e": 1 } },
                { "left": "e", "right": "a", "result": {} },
            ],
        },
    })
    .to_string();
    assert_eq!(parse_document(&text).unwrap_err().name(), "CommutativityConflict");
}

#[test]
fn unknown_fields_are_rejected() {
    let text = json!({ "algebra": { "basis": ["e"] }, "colour": "red" }).to_string();
    assert!(parse_document(&text).is_err());
}
