//! JSON input documents: an algebra, optional parameters, idempotent and
//! representation, plus expected verdicts and free-form notes.
//!
//! Scalars are strings such as `"1"`, `"-1"` or `"2/3"`; JSON integers are
//! also accepted on input. Products are listed once per unordered pair and
//! omitted products are zero. Representation matrices are row-major and act on
//! column vectors, so column `j` of `ρ_x` holds the coordinates of `ρ_x(m_j)`.
//! For instance the matrix `[["-1","2"],["-1","1"]]` sends `m1` to `-m1 - m2`
//! and `m2` to `2m1 + m2`.

use indexmap::IndexMap;
use serde::{Deserialize, Deserializer, Serialize};

use crate::algebra::{Algebra, Element, GajParams};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Matrix;
use crate::representation::Representation;

/// A scalar as written in a document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ScalarText(pub String);

impl<'de> Deserialize<'de> for ScalarText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(d) {
            Ok(Raw::Text(s)) => Ok(ScalarText(s)),
            Ok(Raw::Int(n)) => Ok(ScalarText(n.to_string())),
            Err(_) => Err(serde::de::Error::custom("expected an exact scalar as a string (\"2/3\") or an integer")),
        }
    }
}

impl From<&Scalar> for ScalarText {
    fn from(s: &Scalar) -> Self {
        ScalarText(s.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductSpec {
    pub left: String,
    pub right: String,
    /// Coefficients of the product by basis name.
    pub result: IndexMap<String, ScalarText>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub basis: Vec<String>,
    #[serde(default)]
    pub products: Vec<ProductSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsSpec {
    pub beta: ScalarText,
    pub gamma: ScalarText,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationSpec {
    pub module_dim: usize,
    /// One row-major matrix per basis name.
    pub matrices: IndexMap<String, Vec<Vec<ScalarText>>>,
}

/// Verdicts a document is expected to produce.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity_holds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation_valid: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    /// Nonzero module components, e.g. `["M_0"]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module_components: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkbenchDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default = "default_field")]
    pub field: String,
    pub algebra: AlgebraSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub idempotent: Option<Vec<ScalarText>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn default_field() -> String {
    "rational".to_string()
}

/// The mathematical objects a document describes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedDocument {
    pub field: Field,
    pub algebra: Algebra,
    pub params: Option<GajParams>,
    pub idempotent: Option<Element>,
    pub representation: Option<Representation>,
}

fn doc_err(path: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Document { path: path.into(), reason: reason.into() }
}

fn scalar_at(field: Field, text: &ScalarText, path: &str) -> Result<Scalar> {
    field.parse_scalar(&text.0).map_err(|e| doc_err(path, e.to_string()))
}

impl WorkbenchDocument {
    pub fn resolve(&self) -> Result<ResolvedDocument> {
        self.resolve_in(None)
    }

    /// Resolves over `field`, or the document's own field when `None`.
    pub fn resolve_in(&self, field: Option<Field>) -> Result<ResolvedDocument> {
        let field = match field {
            Some(f) => f,
            None => self.field.parse::<Field>().map_err(|e| doc_err("field", e.to_string()))?,
        };
        let algebra = self.resolve_algebra(field)?;
        let params = match &self.params {
            Some(p) => Some(GajParams::new(
                scalar_at(field, &p.beta, "params.beta")?,
                scalar_at(field, &p.gamma, "params.gamma")?,
            )?),
            None => None,
        };
        let idempotent = match &self.idempotent {
            Some(v) => {
                if v.len() != algebra.dim() {
                    return Err(doc_err(
                        "idempotent",
                        format!("expected {} coordinates, found {}", algebra.dim(), v.len()),
                    ));
                }
                let coords = v
                    .iter()
                    .enumerate()
                    .map(|(i, s)| scalar_at(field, s, &format!("idempotent[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                Some(Element::new(coords))
            }
            None => None,
        };
        let representation = match &self.representation {
            Some(r) => Some(resolve_representation(field, &algebra, r)?),
            None => None,
        };
        Ok(ResolvedDocument { field, algebra, params, idempotent, representation })
    }

    fn resolve_algebra(&self, field: Field) -> Result<Algebra> {
        let basis = &self.algebra.basis;
        if basis.is_empty() {
            return Err(doc_err("algebra.basis", "basis must not be empty"));
        }
        for (i, name) in basis.iter().enumerate() {
            if name.is_empty() || basis[..i].contains(name) {
                return Err(doc_err(format!("algebra.basis[{i}]"), format!("duplicate or empty name {name:?}")));
            }
        }
        let index = |name: &str, path: String| {
            basis.iter().position(|b| b == name).ok_or_else(|| doc_err(path, format!("unknown basis name {name:?}")))
        };
        let mut products = Vec::new();
        for (k, p) in self.algebra.products.iter().enumerate() {
            let path = format!("algebra.products[{k}]");
            let i = index(&p.left, format!("{path}.left"))?;
            let j = index(&p.right, format!("{path}.right"))?;
            let mut coords = vec![field.zero(); basis.len()];
            for (name, value) in &p.result {
                let t = index(name, format!("{path}.result.{name}"))?;
                coords[t] = scalar_at(field, value, &format!("{path}.result.{name}"))?;
            }
            products.push((i, j, coords));
        }
        Algebra::from_products(field, basis.clone(), products)
    }

    /// Rewrites the document in canonical form: products in basis order with
    /// `left ≤ right`, zero products and coefficients dropped, scalars
    /// normalized. Metadata is kept as is.
    pub fn canonical(&self) -> Result<WorkbenchDocument> {
        let r = self.resolve()?;
        let mut out = from_resolved(&r);
        out.name = self.name.clone();
        out.description = self.description.clone();
        out.field = r.field.to_string();
        out.expected = self.expected.clone();
        out.notes = self.notes.clone();
        Ok(out)
    }
}

fn resolve_representation(field: Field, alg: &Algebra, r: &RepresentationSpec) -> Result<Representation> {
    let m = r.module_dim;
    if m == 0 {
        return Err(doc_err("representation.module_dim", "module dimension must be at least 1"));
    }
    for name in r.matrices.keys() {
        if alg.basis_index(name).is_none() {
            return Err(doc_err(format!("representation.matrices.{name}"), "unknown basis name"));
        }
    }
    let mut mats = Vec::new();
    for name in alg.basis_names() {
        let path = format!("representation.matrices.{name}");
        let Some(rows) = r.matrices.get(name) else {
            mats.push(Matrix::zeros(field, m, m));
            continue;
        };
        if rows.len() != m || rows.iter().any(|row| row.len() != m) {
            return Err(doc_err(path, format!("expected a {m}×{m} matrix")));
        }
        let rows = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, s)| scalar_at(field, s, &format!("{path}[{i}][{j}]")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        mats.push(Matrix::from_rows(field, rows)?);
    }
    Representation::new(alg.clone(), mats)
}

/// Document describing the given objects, in canonical form.
pub fn from_resolved(r: &ResolvedDocument) -> WorkbenchDocument {
    let alg = &r.algebra;
    let names = alg.basis_names();
    let mut products = Vec::new();
    for i in 0..alg.dim() {
        for j in i..alg.dim() {
            let result: IndexMap<String, ScalarText> = alg
                .structure_constants(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (names[k].clone(), c.into()))
                .collect();
            if !result.is_empty() {
                products.push(ProductSpec { left: names[i].clone(), right: names[j].clone(), result });
            }
        }
    }
    let representation = r.representation.as_ref().map(|rep| RepresentationSpec {
        module_dim: rep.module_dim(),
        matrices: names
            .iter()
            .zip(rep.generators())
            .map(|(n, m)| {
                let rows = m.to_rows().iter().map(|row| row.iter().map(ScalarText::from).collect()).collect();
                (n.clone(), rows)
            })
            .collect(),
    });
    WorkbenchDocument {
        name: None,
        description: None,
        field: r.field.to_string(),
        algebra: AlgebraSpec { basis: names.to_vec(), products },
        params: r.params.as_ref().map(|p| ParamsSpec { beta: p.beta().into(), gamma: p.gamma().into() }),
        idempotent: r.idempotent.as_ref().map(|e| e.coords().iter().map(ScalarText::from).collect()),
        representation,
        expected: None,
        notes: Vec::new(),
    }
}

/// Parses and validates a document.
pub fn parse_document(text: &str) -> Result<WorkbenchDocument> {
    let doc: WorkbenchDocument = serde_json::from_str(text)
        .map_err(|e| doc_err(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    doc.resolve()?;
    Ok(doc)
}

/// Canonical pretty-printed JSON for a document.
pub fn emit_document(doc: &WorkbenchDocument) -> Result<String> {
    let canonical = doc.canonical()?;
    let mut s = serde_json::to_string_pretty(&canonical).expect("documents serialize");
    s.push('\n');
    Ok(s)
}
