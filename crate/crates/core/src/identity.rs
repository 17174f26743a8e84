//! Homogeneous identities over nonassociative words, their full
//! linearization, and the decision procedures built on it.
//!
//! An identity is a linear combination of terms. A term is a product of one
//! or more words: for element-valued identities it is a single word evaluated
//! in the algebra; for operator-valued identities each word `w` stands for the
//! operator `ρ_w` and the term is their composition, left to right.
//!
//! Over a field of characteristic ≠ 2, 3 an identity of degree ≤ 3 in each
//! variable holds everywhere iff its full linearization vanishes on all tuples
//! of basis elements, which is a finite exact check.

use rayon::prelude::*;

use crate::algebra::{Algebra, Element, GajParams};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{kernel, Matrix, Subspace};
use crate::representation::Representation;

/// A nonassociative monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Word {
    Var(usize),
    Mul(Box<Word>, Box<Word>),
}

impl Word {
    pub fn var(i: usize) -> Self {
        Word::Var(i)
    }

    pub fn times(&self, other: &Word) -> Word {
        Word::Mul(Box::new(self.clone()), Box::new(other.clone()))
    }

    fn occurrences(&self, v: usize) -> usize {
        match self {
            Word::Var(i) => usize::from(*i == v),
            Word::Mul(a, b) => a.occurrences(v) + b.occurrences(v),
        }
    }

    /// Renames variable occurrences in left-to-right order via `rename`.
    fn relabel(&self, rename: &mut impl FnMut(usize) -> usize) -> Word {
        match self {
            Word::Var(i) => Word::Var(rename(*i)),
            Word::Mul(a, b) => {
                let a = a.relabel(rename);
                let b = b.relabel(rename);
                Word::Mul(Box::new(a), Box::new(b))
            }
        }
    }

    fn evaluate(&self, alg: &Algebra, args: &[Element]) -> Element {
        match self {
            Word::Var(i) => args[*i].clone(),
            Word::Mul(a, b) => alg.mul(&a.evaluate(alg, args), &b.evaluate(alg, args)),
        }
    }

    fn render(&self, names: &[String]) -> String {
        match self {
            Word::Var(i) => names[*i].clone(),
            Word::Mul(a, b) => {
                let wrap = |w: &Word| match w {
                    Word::Var(_) => w.render(names),
                    _ => format!("({})", w.render(names)),
                };
                format!("{}{}", wrap(a), wrap(b))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityKind {
    /// Terms are algebra elements.
    Element,
    /// Terms are compositions of representation operators.
    Operator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub factors: Vec<Word>,
}

/// A homogeneous identity `Σ coeff · term = 0` in named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySpec {
    pub kind: IdentityKind,
    pub variables: Vec<String>,
    pub terms: Vec<Term>,
}

impl IdentitySpec {
    /// Degree of each variable, checked to be the same in every term.
    pub fn degrees(&self) -> Result<Vec<usize>> {
        let count = |t: &Term, v: usize| t.factors.iter().map(|w| w.occurrences(v)).sum::<usize>();
        (0..self.variables.len())
            .map(|v| {
                let d = self.terms.first().map_or(0, |t| count(t, v));
                if self.terms.iter().any(|t| count(t, v) != d) {
                    return Err(Error::NotHomogeneous(self.variables[v].clone()));
                }
                Ok(d)
            })
            .collect()
    }

    /// Value of an element identity at the given arguments.
    pub fn evaluate(&self, alg: &Algebra, args: &[Element]) -> Element {
        assert_eq!(self.kind, IdentityKind::Element);
        assert_eq!(args.len(), self.variables.len(), "argument count");
        let mut acc = alg.zero();
        for t in &self.terms {
            if t.coeff.is_zero() {
                continue;
            }
            let v = t.factors[0].evaluate(alg, args);
            acc = acc.add(&v.scale(&t.coeff));
        }
        acc
    }

    /// Value of an operator identity at the given arguments.
    pub fn evaluate_operator(&self, rep: &Representation, args: &[Element]) -> Matrix {
        assert_eq!(self.kind, IdentityKind::Operator);
        assert_eq!(args.len(), self.variables.len(), "argument count");
        let alg = rep.algebra();
        let m = rep.module_dim();
        let field = alg.field();
        let mut acc = Matrix::zeros(field, m, m);
        for t in &self.terms {
            if t.coeff.is_zero() {
                continue;
            }
            let mut op = Matrix::identity(field, m);
            for w in &t.factors {
                op = &op * &rep.rho_of(&w.evaluate(alg, args));
            }
            acc = &acc + &op.scale(&t.coeff);
        }
        acc
    }

    /// Human-readable form, e.g. `ρ_a ρ_(ab) + ...`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for t in &self.terms {
            if t.coeff.is_zero() {
                continue;
            }
            let c = t.coeff.to_string();
            let (neg, mag) = match c.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, c),
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
                out.push(' ');
            }
            let body: Vec<String> = t
                .factors
                .iter()
                .map(|w| match self.kind {
                    IdentityKind::Element => w.render(&self.variables),
                    IdentityKind::Operator => match w {
                        Word::Var(_) => format!("ρ_{}", w.render(&self.variables)),
                        _ => format!("ρ_({})", w.render(&self.variables)),
                    },
                })
                .collect();
            out.push_str(&body.join(" "));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// One argument slot of a linearized identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slot {
    pub name: String,
    /// Index of the original variable this slot was split from.
    pub variable: usize,
}

/// The full linearization of an identity: multilinear in its slots and
/// symmetric within the slots that came from one variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearForm {
    spec: IdentitySpec,
    slots: Vec<Slot>,
}

/// Basis indices, one per slot.
pub type BasisTuple = Vec<usize>;

const MAX_DEGREE: usize = 3;

/// Fully polarizes a homogeneous identity. Evaluating the result with every
/// slot of a variable set to the same element gives `Π deg!` times the
/// original value.
pub fn linearize_identity(spec: &IdentitySpec) -> Result<MultilinearForm> {
    let degrees = spec.degrees()?;
    for (v, &d) in degrees.iter().enumerate() {
        if d > MAX_DEGREE {
            return Err(Error::UnsupportedDegree { variable: spec.variables[v].clone(), degree: d });
        }
    }
    let mut slots = Vec::new();
    let mut first_slot = Vec::new();
    for (v, &d) in degrees.iter().enumerate() {
        first_slot.push(slots.len());
        for k in 0..d {
            let name = if d > 1 { format!("{}{}", spec.variables[v], k + 1) } else { spec.variables[v].clone() };
            slots.push(Slot { name, variable: v });
        }
    }
    // Every combination of one permutation per variable.
    let per_var: Vec<Vec<Vec<usize>>> = degrees.iter().map(|&d| permutations(d)).collect();
    let mut assignments: Vec<Vec<&Vec<usize>>> = vec![Vec::new()];
    for perms in &per_var {
        assignments = assignments
            .into_iter()
            .flat_map(|prefix| {
                perms.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push(p);
                    next
                })
            })
            .collect();
    }
    let mut terms = Vec::new();
    for t in &spec.terms {
        for assignment in &assignments {
            let mut seen = vec![0usize; degrees.len()];
            let mut rename = |v: usize| {
                let k = seen[v];
                seen[v] += 1;
                first_slot[v] + assignment[v][k]
            };
            let factors = t.factors.iter().map(|w| w.relabel(&mut rename)).collect();
            terms.push(Term { coeff: t.coeff.clone(), factors });
        }
    }
    let names = slots.iter().map(|s| s.name.clone()).collect();
    Ok(MultilinearForm { spec: IdentitySpec { kind: spec.kind, variables: names, terms }, slots })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

impl MultilinearForm {
    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn spec(&self) -> &IdentitySpec {
        &self.spec
    }

    pub fn evaluate(&self, alg: &Algebra, args: &[Element]) -> Element {
        self.spec.evaluate(alg, args)
    }

    pub fn evaluate_operator(&self, rep: &Representation, args: &[Element]) -> Matrix {
        self.spec.evaluate_operator(rep, args)
    }

    /// All basis tuples up to the symmetry of the form: indices are
    /// non-decreasing within each group of slots from one variable.
    pub fn basis_tuples(&self, n: usize) -> Vec<BasisTuple> {
        let mut out: Vec<BasisTuple> = vec![Vec::new()];
        for (s, slot) in self.slots.iter().enumerate() {
            let same_group = s > 0 && self.slots[s - 1].variable == slot.variable;
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    let start = if same_group { *prefix.last().unwrap() } else { 0 };
                    (start..n).map(move |i| {
                        let mut t = prefix.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
        }
        out
    }

    /// First basis tuple where the element form is nonzero.
    pub fn element_violation(&self, alg: &Algebra) -> Option<BasisTuple> {
        let tuples = self.basis_tuples(alg.dim());
        tuples.into_par_iter().find_first(|t| !self.evaluate(alg, &basis_args(alg, t)).is_zero())
    }

    /// First basis tuple where the operator form is nonzero.
    pub fn operator_violation(&self, rep: &Representation) -> Option<BasisTuple> {
        let alg = rep.algebra();
        let tuples = self.basis_tuples(alg.dim());
        tuples.into_par_iter().find_first(|t| !self.evaluate_operator(rep, &basis_args(alg, t)).is_zero())
    }
}

pub(crate) fn basis_args(alg: &Algebra, tuple: &[usize]) -> Vec<Element> {
    tuple.iter().map(|&i| alg.basis_element(i)).collect()
}

/// Builds `Σ c_i · term_i` from small integer coefficients.
pub(crate) fn build(kind: IdentityKind, variables: &[&str], terms: Vec<(Scalar, Vec<Word>)>) -> IdentitySpec {
    IdentitySpec {
        kind,
        variables: variables.iter().map(|s| s.to_string()).collect(),
        terms: terms.into_iter().map(|(coeff, factors)| Term { coeff, factors }).collect(),
    }
}

/// The two brackets of the identity as separate element identities in (x, y):
/// `(yx²)x − ((yx)x)x` and `yx³ − ((yx)x)x`.
fn gaj_brackets(field: Field) -> (IdentitySpec, IdentitySpec) {
    let (x, y) = (Word::var(0), Word::var(1));
    let x2 = x.times(&x);
    let x3 = x2.times(&x);
    let yx2_x = y.times(&x2).times(&x);
    let yxxx = y.times(&x).times(&x).times(&x);
    let y_x3 = y.times(&x3);
    let one = field.one();
    let minus = -&one;
    let beta = build(
        IdentityKind::Element,
        &["x", "y"],
        vec![(one.clone(), vec![yx2_x]), (minus.clone(), vec![yxxx.clone()])],
    );
    let gamma = build(IdentityKind::Element, &["x", "y"], vec![(one, vec![y_x3]), (minus, vec![yxxx])]);
    (beta, gamma)
}

/// The identity `β{(yx²)x − ((yx)x)x} + γ{yx³ − ((yx)x)x}` in (x, y).
pub fn gaj_identity(params: &GajParams) -> IdentitySpec {
    let (b, g) = gaj_brackets(params.field());
    let mut terms: Vec<Term> =
        b.terms.into_iter().map(|t| Term { coeff: &t.coeff * params.beta(), factors: t.factors }).collect();
    terms.extend(g.terms.into_iter().map(|t| Term { coeff: &t.coeff * params.gamma(), factors: t.factors }));
    IdentitySpec { kind: IdentityKind::Element, variables: b.variables, terms }
}

fn check_field(alg: &Algebra, params: &GajParams) -> Result<()> {
    if alg.field() != params.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// Left side of the identity at a specific pair (x, y).
pub fn gaj_defect(alg: &Algebra, x: &Element, y: &Element, params: &GajParams) -> Result<Element> {
    check_field(alg, params)?;
    if x.dim() != alg.dim() || y.dim() != alg.dim() {
        return Err(Error::AlgebraMismatch);
    }
    Ok(gaj_identity(params).evaluate(alg, &[x.clone(), y.clone()]))
}

/// First basis tuple `(x1, x2, x3, y)` where the linearized identity fails.
pub fn gaj_violation(alg: &Algebra, params: &GajParams) -> Result<Option<BasisTuple>> {
    check_field(alg, params)?;
    let form = linearize_identity(&gaj_identity(params))?;
    Ok(form.element_violation(alg))
}

/// Whether the identity holds for all x, y in the algebra.
pub fn check_gaj_identity(alg: &Algebra, params: &GajParams) -> Result<bool> {
    Ok(gaj_violation(alg, params)?.is_none())
}

/// The set of admissible (β, γ): a subspace of F² with the origin excluded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterSpace {
    solutions: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParameterShape {
    /// Only (0, 0) solves the linear system, so no admissible pair exists.
    Empty,
    /// A line through the origin with the given direction.
    Line(Scalar, Scalar),
    /// Every (β, γ) ≠ (0, 0).
    Everything,
}

impl ParameterSpace {
    pub fn subspace(&self) -> &Subspace {
        &self.solutions
    }

    pub fn contains(&self, params: &GajParams) -> bool {
        params.field() == self.solutions.field()
            && self.solutions.contains_vector(&[params.beta().clone(), params.gamma().clone()])
    }

    pub fn shape(&self) -> ParameterShape {
        match self.solutions.dim() {
            0 => ParameterShape::Empty,
            1 => {
                let v = &self.solutions.basis()[0];
                ParameterShape::Line(v[0].clone(), v[1].clone())
            }
            _ => ParameterShape::Everything,
        }
    }

    pub fn describe(&self) -> String {
        match self.shape() {
            ParameterShape::Empty => "no admissible (β,γ)".to_string(),
            ParameterShape::Line(b, g) => format!("(β,γ) = t·({b}, {g}), t ≠ 0"),
            ParameterShape::Everything => "every (β,γ) ≠ (0,0)".to_string(),
        }
    }
}

/// Solves for every (β, γ) such that the algebra satisfies the identity.
/// The identity is linear in (β, γ), so this is the kernel of the map sending
/// (β, γ) to all coordinates of the linearized brackets on basis tuples.
pub fn solve_parameter_space(alg: &Algebra) -> Result<ParameterSpace> {
    let field = alg.field();
    let (b, g) = gaj_brackets(field);
    let fb = linearize_identity(&b)?;
    let fg = linearize_identity(&g)?;
    let tuples = fb.basis_tuples(alg.dim());
    let rows: Vec<Vec<Scalar>> = tuples
        .par_iter()
        .flat_map_iter(|t| {
            let args = basis_args(alg, t);
            let vb = fb.evaluate(alg, &args).into_coords();
            let vg = fg.evaluate(alg, &args).into_coords();
            vb.into_iter()
                .zip(vg)
                .filter(|(p, q)| !p.is_zero() || !q.is_zero())
                .map(|(p, q)| vec![p, q])
                .collect::<Vec<_>>()
        })
        .collect();
    let solutions = if rows.is_empty() { Subspace::full(field, 2) } else { kernel(&Matrix::from_rows(field, rows)?) };
    Ok(ParameterSpace { solutions })
}
