//! Command dispatch behind the `gajwb` binary: each command turns a document
//! into a [`Report`] with a JSON payload, a text rendering and an exit code.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::algebra::{format_combination, Element, GajParams};
use crate::corpus::{builtin_corpus, corpus_entry};
use crate::document::{emit_document, from_resolved, ResolvedDocument, WorkbenchDocument};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::identity::{gaj_violation, solve_parameter_space, ParameterShape};
use crate::linalg::{minimal_polynomial, Subspace};
use crate::peirce::{
    acts_by_defining_polynomials, case_polynomial, peirce_decompose, verify_peirce_relations, Decomposition,
    PeirceDecomposition, RelationReport, RelationStatus,
};
use crate::representation::{
    check_rep_via_extension, module_peirce, representation_violation, split_null_extension, verify_action_relations,
    ModuleDecomposition, Representation,
};
use crate::submodule::{classify_irreducible, is_irreducible, IrreducibilityStatus, IrreducibilityVerdict};
use crate::theorems::{
    check_associative_module, check_lambda_relations, lambda_hypotheses_failing, verify_linearized_consequences,
    CheckStatus, TheoremCheck,
};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    CheckIdentity,
    Params,
    Peirce,
    CheckRep,
    Extend,
    ModulePeirce,
    Actions,
    Irreducible,
    Classify,
    VerifyTheorems,
    Examples,
}

impl Command {
    pub const ALL: [Command; 11] = [
        Command::CheckIdentity,
        Command::Params,
        Command::Peirce,
        Command::CheckRep,
        Command::Extend,
        Command::ModulePeirce,
        Command::Actions,
        Command::Irreducible,
        Command::Classify,
        Command::VerifyTheorems,
        Command::Examples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::CheckIdentity => "check-identity",
            Command::Params => "params",
            Command::Peirce => "peirce",
            Command::CheckRep => "check-rep",
            Command::Extend => "extend",
            Command::ModulePeirce => "module-peirce",
            Command::Actions => "actions",
            Command::Irreducible => "irreducible",
            Command::Classify => "classify",
            Command::VerifyTheorems => "verify-theorems",
            Command::Examples => "examples",
        }
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Command::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown command {s:?}"))
    }
}

/// Command-line overrides of document fields.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// `"B,G"`.
    pub params: Option<String>,
    /// A basis name or comma-separated coordinates.
    pub idempotent: Option<String>,
    pub field: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub exit_code: i32,
    pub data: Value,
    pub text: String,
}

impl Report {
    fn new(command: Command, exit_code: i32, data: Value, text: String) -> Self {
        Report { command: command.name().to_string(), exit_code, data, text }
    }

    fn error(command: Command, e: &Error) -> Self {
        let data = json!({ "error": e.name(), "message": e.to_string() });
        let message = e.to_string();
        let text = if message.starts_with(e.name()) {
            format!("error: {message}\n")
        } else {
            format!("error ({}): {message}\n", e.name())
        };
        Report::new(command, EXIT_ERROR, data, text)
    }

    /// The machine-readable report: command, exit code and payload.
    pub fn to_json(&self, pretty: bool) -> String {
        let v = json!({ "command": self.command, "exit_code": self.exit_code, "result": self.data });
        let mut s = if pretty {
            serde_json::to_string_pretty(&v).expect("values serialize")
        } else {
            serde_json::to_string(&v).expect("values serialize")
        };
        s.push('\n');
        s
    }
}

/// Runs `command` on a document. `examples` ignores the document and takes
/// an optional corpus entry name instead; see [`run_examples`].
pub fn run_command(command: Command, doc: &WorkbenchDocument, opts: &Options) -> Report {
    if command == Command::Examples {
        return run_examples(None);
    }
    match Context::new(doc, opts).and_then(|ctx| dispatch(command, &ctx)) {
        Ok(r) => r,
        Err(e) => Report::error(command, &e),
    }
}

/// Lists the built-in corpus, or emits one entry as a document.
pub fn run_examples(name: Option<&str>) -> Report {
    let c = Command::Examples;
    match name {
        None => {
            let corpus = builtin_corpus();
            let mut text = String::new();
            let entries: Vec<Value> = corpus
                .iter()
                .map(|d| {
                    let name = d.name.clone().unwrap_or_default();
                    let desc = d.description.clone().unwrap_or_default();
                    let _ = writeln!(text, "{name:<22} {desc}");
                    json!({ "name": name, "description": desc })
                })
                .collect();
            Report::new(c, EXIT_HOLDS, json!({ "examples": entries }), text)
        }
        Some(n) => match corpus_entry(n) {
            Some(d) => {
                let text = emit_document(&d).expect("corpus documents are valid");
                let data = serde_json::to_value(d.canonical().expect("valid")).expect("serializes");
                Report::new(c, EXIT_HOLDS, data, text)
            }
            None => Report::error(c, &Error::Precondition(format!("no built-in example named {n:?}"))),
        },
    }
}

struct Context {
    doc: WorkbenchDocument,
    r: ResolvedDocument,
}

impl Context {
    fn new(doc: &WorkbenchDocument, opts: &Options) -> Result<Self> {
        let field = opts.field.as_deref().map(Field::from_str).transpose()?;
        let mut r = doc.resolve_in(field)?;
        if let Some(p) = &opts.params {
            r.params = Some(parse_params(r.field, p)?);
        }
        if let Some(i) = &opts.idempotent {
            r.idempotent = Some(parse_idempotent(&r, i)?);
        }
        Ok(Context { doc: doc.clone(), r })
    }

    fn params(&self) -> Result<&GajParams> {
        self.r
            .params
            .as_ref()
            .ok_or_else(|| Error::Precondition("parameters required (document \"params\" or --params B,G)".into()))
    }

    fn idempotent(&self) -> Result<&Element> {
        self.r
            .idempotent
            .as_ref()
            .ok_or_else(|| Error::Precondition("idempotent required (document \"idempotent\" or --idempotent)".into()))
    }

    fn rep(&self) -> Result<&Representation> {
        self.r.representation.as_ref().ok_or_else(|| Error::Precondition("the document has no representation".into()))
    }

    fn basis_names(&self) -> &[String] {
        self.r.algebra.basis_names()
    }

    fn module_names(&self) -> Vec<String> {
        let m = self.r.representation.as_ref().map_or(0, |r| r.module_dim());
        (1..=m).map(|i| format!("m{i}")).collect()
    }

    fn header(&self) -> String {
        let mut s = String::new();
        if let Some(n) = &self.doc.name {
            let _ = writeln!(s, "document: {n}");
        }
        let _ = writeln!(s, "field: {}", self.r.field);
        if let Some(p) = &self.r.params {
            let _ = writeln!(s, "parameters: {p}");
        }
        s
    }

    fn notes_text(&self) -> String {
        self.doc.notes.iter().map(|n| format!("note: {n}\n")).collect()
    }
}

fn parse_params(field: Field, text: &str) -> Result<GajParams> {
    let parts: Vec<&str> = text.split(',').collect();
    let [b, g] = parts.as_slice() else {
        return Err(Error::Precondition(format!("--params expects B,G, got {text:?}")));
    };
    GajParams::new(field.parse_scalar(b)?, field.parse_scalar(g)?)
}

fn parse_idempotent(r: &ResolvedDocument, text: &str) -> Result<Element> {
    if let Some(i) = r.algebra.basis_index(text.trim()) {
        return Ok(r.algebra.basis_element(i));
    }
    let coords = text.split(',').map(|s| r.field.parse_scalar(s)).collect::<Result<Vec<Scalar>>>()?;
    r.algebra.element(coords)
}

fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_string())).collect())
}

fn subspace_json(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(|v| scalars(v)).collect())
}

fn span_text(s: &Subspace, names: &[String]) -> String {
    if s.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = s.basis().iter().map(|v| format_combination(v, names)).collect();
    format!("span{{{}}}", parts.join(", "))
}

fn exit_for(ok: bool) -> i32 {
    if ok {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    }
}

fn tuple_names(t: &[usize], names: &[String]) -> Vec<String> {
    t.iter().map(|&i| names[i].clone()).collect()
}

fn relations_json(r: &RelationReport) -> Value {
    serde_json::to_value(&r.checks).expect("serializes")
}

fn relations_text(r: &RelationReport) -> String {
    r.checks.iter().map(|c| format!("  {:<8} {}\n", c.status.to_string(), c.relation)).collect()
}

fn decomposition_json(d: &Decomposition, prefix: &str) -> Value {
    let mut comps = serde_json::Map::new();
    for (label, s) in d.components() {
        comps.insert(format!("{prefix}_{label}"), subspace_json(s));
    }
    json!({
        "case": d.case,
        "lambda": d.lambda.as_ref().map(|l| l.to_string()),
        "components": comps,
    })
}

fn decomposition_text(d: &Decomposition, prefix: &str, names: &[String]) -> String {
    let mut s = format!("case: {}\n", d.case.kind);
    if let Some(l) = &d.lambda {
        let _ = writeln!(s, "λ = {l}");
    }
    for (label, sub) in d.components() {
        let _ = writeln!(s, "{prefix}_{label} = {}", span_text(sub, names));
    }
    s
}

fn dispatch(command: Command, ctx: &Context) -> Result<Report> {
    match command {
        Command::CheckIdentity => check_identity(ctx),
        Command::Params => params(ctx),
        Command::Peirce => peirce(ctx),
        Command::CheckRep => check_rep(ctx),
        Command::Extend => extend(ctx),
        Command::ModulePeirce => module_peirce_cmd(ctx),
        Command::Actions => actions(ctx),
        Command::Irreducible => irreducible(ctx),
        Command::Classify => classify(ctx),
        Command::VerifyTheorems => verify_theorems(ctx),
        Command::Examples => unreachable!("handled by run_command"),
    }
}

fn check_identity(ctx: &Context) -> Result<Report> {
    let p = ctx.params()?;
    let violation = gaj_violation(&ctx.r.algebra, p)?;
    let names = ctx.basis_names();
    let mut text = ctx.header();
    match &violation {
        None => text.push_str("identity holds\n"),
        Some(t) => {
            let _ = writeln!(
                text,
                "identity fails; linearized form is nonzero at (x1, x2, x3, y) = ({})",
                tuple_names(t, names).join(", ")
            );
        }
    }
    text.push_str(&ctx.notes_text());
    let data = json!({
        "params": { "beta": p.beta().to_string(), "gamma": p.gamma().to_string() },
        "holds": violation.is_none(),
        "violation": violation.as_ref().map(|t| tuple_names(t, names)),
        "notes": ctx.doc.notes,
    });
    Ok(Report::new(Command::CheckIdentity, exit_for(violation.is_none()), data, text))
}

fn params(ctx: &Context) -> Result<Report> {
    let space = solve_parameter_space(&ctx.r.algebra)?;
    let shape = space.shape();
    let (kind, direction) = match &shape {
        ParameterShape::Empty => ("empty", Value::Null),
        ParameterShape::Line(b, g) => ("line", json!([b.to_string(), g.to_string()])),
        ParameterShape::Everything => ("everything", Value::Null),
    };
    let mut text = ctx.header();
    let _ = writeln!(text, "admissible parameters: {}", space.describe());
    let data = json!({ "shape": kind, "direction": direction, "description": space.describe() });
    Ok(Report::new(Command::Params, exit_for(shape != ParameterShape::Empty), data, text))
}

fn peirce(ctx: &Context) -> Result<Report> {
    let p = ctx.params()?;
    let e = ctx.idempotent()?;
    let alg = &ctx.r.algebra;
    let d = peirce_decompose(alg, e, p)?;
    let report = verify_peirce_relations(alg, &d);
    let re = alg.right_mult_operator(e)?;
    let minimal = minimal_polynomial(&re);
    let mut text = ctx.header();
    let _ = writeln!(text, "idempotent: {}", alg.format_element(e));
    let _ = writeln!(text, "minimal polynomial of R_e: {minimal} (divides {})", case_polynomial(p));
    text.push_str(&decomposition_text(&d.parts, "A", alg.basis_names()));
    text.push_str("relations:\n");
    text.push_str(&relations_text(&report));
    let mut data = decomposition_json(&d.parts, "A");
    data["idempotent"] = scalars(e.coords());
    data["minimal_polynomial"] = json!(minimal.to_string());
    data["case_polynomial"] = json!(case_polynomial(p).to_string());
    data["relations"] = relations_json(&report);
    Ok(Report::new(Command::Peirce, exit_for(report.all_hold()), data, text))
}

fn check_rep(ctx: &Context) -> Result<Report> {
    let p = ctx.params()?;
    let rep = ctx.rep()?;
    let violation = representation_violation(rep, p)?;
    let via_ext = check_rep_via_extension(rep, p)?;
    let valid = violation.is_none();
    let names = ctx.basis_names();
    let mut text = ctx.header();
    match &violation {
        None => text.push_str("ρ is a representation\n"),
        Some(v) => {
            let _ = writeln!(
                text,
                "ρ is not a representation: the {} action identity fails; linearized form nonzero at ({})",
                v.identity,
                tuple_names(&v.tuple, names).join(", ")
            );
        }
    }
    let _ = writeln!(text, "split null extension satisfies the identity: {via_ext}");
    if via_ext != valid {
        text.push_str("DISAGREEMENT between the two procedures\n");
    }
    let data = json!({
        "valid": valid,
        "via_extension": via_ext,
        "agree": via_ext == valid,
        "violation": violation.as_ref().map(|v| json!({
            "identity": v.identity,
            "tuple": tuple_names(&v.tuple, names),
        })),
    });
    Ok(Report::new(Command::CheckRep, exit_for(valid && via_ext), data, text))
}

fn extend(ctx: &Context) -> Result<Report> {
    let rep = ctx.rep()?;
    let s = split_null_extension(rep);
    let ext = ResolvedDocument {
        field: ctx.r.field,
        algebra: s.algebra.clone(),
        params: ctx.r.params.clone(),
        idempotent: None,
        representation: None,
    };
    let mut doc = from_resolved(&ext);
    doc.description = Some("split null extension".into());
    let holds = match &ctx.r.params {
        Some(p) => Some(gaj_violation(&s.algebra, p)?.is_none()),
        None => None,
    };
    let mut text = emit_document(&doc)?;
    if let Some(h) = holds {
        let _ = writeln!(text, "// identity holds on the extension: {h}");
    }
    let data = json!({
        "dim": s.algebra.dim(),
        "document": serde_json::to_value(&doc).expect("serializes"),
        "identity_holds": holds,
    });
    Ok(Report::new(Command::Extend, exit_for(holds != Some(false)), data, text))
}

fn module_peirce_cmd(ctx: &Context) -> Result<Report> {
    let p = ctx.params()?;
    let e = ctx.idempotent()?;
    let rep = ctx.rep()?;
    let md = module_peirce(rep, e, p)?;
    let acts = acts_by_defining_polynomials(&rep.rho_of(e), &md.parts);
    let mut text = ctx.header();
    text.push_str(&decomposition_text(&md.parts, "M", &ctx.module_names()));
    let _ = writeln!(text, "nonzero components: {}", md.nonzero_components().join(", "));
    let mut data = decomposition_json(&md.parts, "M");
    data["nonzero_components"] = json!(md.nonzero_components());
    data["acts_by_defining_polynomials"] = json!(acts);
    Ok(Report::new(Command::ModulePeirce, exit_for(acts), data, text))
}

fn decompositions(ctx: &Context) -> Result<(PeirceDecomposition, ModuleDecomposition)> {
    let p = ctx.params()?;
    let e = ctx.idempotent()?;
    let rep = ctx.rep()?;
    Ok((peirce_decompose(&ctx.r.algebra, e, p)?, module_peirce(rep, e, p)?))
}

fn actions(ctx: &Context) -> Result<Report> {
    let (ad, md) = decompositions(ctx)?;
    let report = verify_action_relations(ctx.rep()?, &ad, &md);
    let mut text = ctx.header();
    text.push_str("action relations:\n");
    text.push_str(&relations_text(&report));
    text.push_str(&ctx.notes_text());
    let data = json!({ "case": md.parts.case, "relations": relations_json(&report) });
    Ok(Report::new(Command::Actions, exit_for(report.all_hold()), data, text))
}

fn verdict_json(v: &IrreducibilityVerdict) -> Value {
    json!({
        "status": v.status,
        "certificate": v.certificate,
        "witness": v.witness.as_ref().map(subspace_json),
    })
}

fn verdict_text(v: &IrreducibilityVerdict, names: &[String]) -> String {
    let mut s = format!("status: {}\n", v.status);
    if let Some(c) = v.certificate {
        let _ = writeln!(s, "certificate: {c}");
    }
    if let Some(w) = &v.witness {
        let _ = writeln!(s, "invariant subspace: {}", span_text(w, names));
    }
    s
}

fn verdict_exit(v: &IrreducibilityVerdict) -> i32 {
    match v.status {
        IrreducibilityStatus::Irreducible => EXIT_HOLDS,
        IrreducibilityStatus::Reducible => EXIT_FAILS,
        IrreducibilityStatus::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn irreducible(ctx: &Context) -> Result<Report> {
    let v = is_irreducible(ctx.rep()?);
    let mut text = ctx.header();
    text.push_str(&verdict_text(&v, &ctx.module_names()));
    Ok(Report::new(Command::Irreducible, verdict_exit(&v), verdict_json(&v), text))
}

fn classify(ctx: &Context) -> Result<Report> {
    let p = ctx.params()?;
    let e = ctx.idempotent()?;
    let rep = ctx.rep()?;
    let v = is_irreducible(rep);
    let mut text = ctx.header();
    text.push_str(&verdict_text(&v, &ctx.module_names()));
    let mut data = json!({ "irreducibility": verdict_json(&v), "classification": Value::Null });
    if v.status == IrreducibilityStatus::Irreducible {
        let c = classify_irreducible(rep, e, p, &v)?;
        let _ = writeln!(text, "classification: {}", c.label);
        if let Some(n) = &c.note {
            let _ = writeln!(text, "note: {n}");
        }
        data["classification"] = serde_json::to_value(&c).expect("serializes");
    }
    Ok(Report::new(Command::Classify, verdict_exit(&v), data, text))
}

/// One row of the `verify-theorems` table.
struct Row {
    check: String,
    status: &'static str,
    detail: String,
}

impl Row {
    fn new(check: impl Into<String>, status: &'static str, detail: impl Into<String>) -> Self {
        Row { check: check.into(), status, detail: detail.into() }
    }

    fn skipped(check: &str, e: &Error) -> Self {
        Row::new(check, "skipped", format!("{}: {e}", e.name()))
    }
}

fn relation_rows(rows: &mut Vec<Row>, group: &str, report: &RelationReport) {
    for c in &report.checks {
        let status = match c.status {
            RelationStatus::Pass => "pass",
            RelationStatus::Fail => "fail",
            RelationStatus::Vacuous => "vacuous",
        };
        rows.push(Row::new(format!("{group}: {}", c.relation), status, ""));
    }
}

fn theorem_row(check: &str, t: &TheoremCheck) -> Row {
    let status = match t.status {
        CheckStatus::Holds => "pass",
        CheckStatus::Fails => "fail",
        CheckStatus::Vacuous => "vacuous",
    };
    let mut detail: Vec<String> =
        t.identities.iter().map(|i| format!("{} {}", i.identity, if i.vanishes { "= 0" } else { "≠ 0" })).collect();
    if let Some(w) = &t.witness {
        detail.insert(0, format!("fails at ({}, {}): {}", w.a, w.b, w.failed));
    }
    Row::new(check, status, detail.join("; "))
}

fn verify_theorems(ctx: &Context) -> Result<Report> {
    let p = ctx.params()?;
    let alg = &ctx.r.algebra;
    let names = ctx.basis_names();
    let mut rows = Vec::new();

    let violation = gaj_violation(alg, p)?;
    rows.push(match &violation {
        None => Row::new("algebra satisfies the identity", "pass", ""),
        Some(t) => Row::new(
            "algebra satisfies the identity",
            "fail",
            format!("nonzero at ({})", tuple_names(t, names).join(", ")),
        ),
    });

    let peirce_d = match ctx.idempotent() {
        Ok(e) if violation.is_none() => match peirce_decompose(alg, e, p) {
            Ok(d) => {
                rows.push(Row::new("A is the direct sum of its Peirce components", "pass", ""));
                relation_rows(&mut rows, "Peirce relation", &verify_peirce_relations(alg, &d));
                Some(d)
            }
            Err(err) => {
                rows.push(Row::skipped("Peirce decomposition", &err));
                None
            }
        },
        Ok(_) => None,
        Err(err) => {
            rows.push(Row::skipped("Peirce decomposition", &err));
            None
        }
    };

    if let (Some(rep), None) = (&ctx.r.representation, &violation) {
        module_rows(ctx, rep, p, peirce_d.as_ref(), &mut rows)?;
    }

    let any_fail = rows.iter().any(|r| r.status == "fail");
    let mut text = ctx.header();
    let width = rows.iter().map(|r| r.check.chars().count()).max().unwrap_or(0);
    for r in &rows {
        let _ = write!(text, "{:<8} {}", r.status, r.check);
        if r.detail.is_empty() {
            text.push('\n');
        } else {
            let pad = width - r.check.chars().count();
            let _ = writeln!(text, "{}  {}", " ".repeat(pad), r.detail);
        }
    }
    text.push_str(&ctx.notes_text());
    let data = json!({
        "rows": rows.iter().map(|r| json!({ "check": r.check, "status": r.status, "detail": r.detail })).collect::<Vec<_>>(),
        "all_pass": !any_fail,
        "notes": ctx.doc.notes,
    });
    Ok(Report::new(Command::VerifyTheorems, exit_for(!any_fail), data, text))
}

fn module_rows(
    ctx: &Context,
    rep: &Representation,
    p: &GajParams,
    peirce_d: Option<&PeirceDecomposition>,
    rows: &mut Vec<Row>,
) -> Result<()> {
    let names = ctx.basis_names();
    let violation = representation_violation(rep, p)?;
    let via_ext = check_rep_via_extension(rep, p)?;
    let valid = violation.is_none();
    rows.push(Row::new(
        "ρ satisfies the cubic and mixed action identities",
        if valid { "pass" } else { "fail" },
        violation.as_ref().map_or(String::new(), |v| {
            format!("{} identity nonzero at ({})", v.identity, tuple_names(&v.tuple, names).join(", "))
        }),
    ));
    rows.push(Row::new(
        "split null extension agrees with the action identities",
        if via_ext == valid { "pass" } else { "fail" },
        format!("extension satisfies the identity: {via_ext}"),
    ));
    if !valid {
        return Ok(());
    }
    for c in verify_linearized_consequences(rep, p)?.results {
        let (status, detail) = match &c.violation {
            None => ("pass", String::new()),
            Some(t) => ("fail", format!("nonzero at ({})", t.join(", "))),
        };
        rows.push(Row::new(format!("consequence vanishes: {}", c.name), status, detail));
    }

    let Ok(e) = ctx.idempotent() else { return Ok(()) };
    let md = match module_peirce(rep, e, p) {
        Ok(md) => md,
        Err(err) => {
            rows.push(Row::skipped("module Peirce decomposition", &err));
            return Ok(());
        }
    };
    rows.push(Row::new(
        "M is the direct sum of its Peirce components",
        "pass",
        format!("nonzero: {}", md.nonzero_components().join(", ")),
    ));
    if let Some(ad) = peirce_d {
        relation_rows(rows, "action relation", &verify_action_relations(rep, ad, &md));
    }

    let generic_hyp = ["β ≠ 0", "γ ≠ 0", "β+γ ≠ 0", "β+2γ ≠ 0", "β+3γ ≠ 0"];
    let failing = lambda_hypotheses_failing(p);
    let m1_applicable = !failing.iter().any(|f| generic_hyp.contains(&f.as_str()));
    if md.parts.one.is_full() && m1_applicable {
        rows.push(theorem_row("M = M_1 is an associative module over A_1", &check_associative_module(rep, e, p)?));
    } else {
        rows.push(Row::new(
            "M = M_1 is an associative module over A_1",
            "n/a",
            if md.parts.one.is_full() { format!("needs {}", generic_hyp.join(", ")) } else { "M ≠ M_1".to_string() },
        ));
    }
    match check_lambda_relations(rep, e, p) {
        Ok(t) => rows.push(theorem_row("M = M_λ: A_1 acts commutatively with ρ_(ab) = λ⁻¹ρ_aρ_b", &t)),
        Err(Error::HypothesisNotMet(h)) => rows.push(Row::new(
            "M = M_λ: A_1 acts commutatively with ρ_(ab) = λ⁻¹ρ_aρ_b",
            "n/a",
            format!("needs {}", h.join(", ")),
        )),
        Err(err) => return Err(err),
    }

    let v = is_irreducible(rep);
    match v.status {
        IrreducibilityStatus::Irreducible => {
            let check = "irreducible M lies in the components allowed for its case";
            match classify_irreducible(rep, e, p, &v) {
                Ok(c) => {
                    let mut detail =
                        format!("{} ({})", c.label, v.certificate.map(|c| c.to_string()).unwrap_or_default());
                    if let Some(n) = c.note {
                        detail.push_str(&format!("; {n}"));
                    }
                    rows.push(Row::new(check, "pass", detail));
                }
                Err(err @ Error::ClassificationFailed(_)) => {
                    rows.push(Row::new(check, "fail", err.to_string()));
                }
                Err(err) => return Err(err),
            }
        }
        IrreducibilityStatus::Reducible => rows.push(Row::new(
            "irreducible M lies in the components allowed for its case",
            "n/a",
            format!(
                "M is reducible: {} is invariant",
                span_text(v.witness.as_ref().expect("witness"), &ctx.module_names())
            ),
        )),
        IrreducibilityStatus::Inconclusive => rows.push(Row::new(
            "irreducible M lies in the components allowed for its case",
            "n/a",
            "irreducibility undecided",
        )),
    }
    Ok(())
}
