//! Seeded generators shared by the fuzz suites.
#![allow(dead_code)]

use gajwb::corpus::algebras;
use gajwb::error::Error;
use gajwb::identity::{solve_parameter_space, ParameterShape};
use gajwb::linalg::Matrix;
use gajwb::peirce::{peirce_decompose, RelationStatus};
use gajwb::representation::{check_representation, module_peirce, verify_action_relations};
use gajwb::theorems::{
    check_associative_module, check_lambda_relations, lambda_hypotheses_failing, verify_linearized_consequences,
    CheckStatus,
};
use gajwb::{Algebra, Element, Field, GajParams, Representation, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const Q: Field = Field::Rationals;

pub fn f5() -> Field {
    Field::prime(5).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn params(f: Field, b: i64, g: i64) -> GajParams {
    GajParams::from_i64(f, b, g).unwrap()
}

/// The corpus algebras with one admissible parameter point each.
pub fn corpus_algebras(f: Field) -> Vec<(&'static str, Algebra, GajParams)> {
    vec![
        ("square-root", algebras::square_root(f), params(f, 1, -1)),
        ("beta-zero", algebras::beta_zero(f), params(f, 0, 1)),
        ("shift-pair", algebras::shift_pair(f), params(f, 1, -1)),
        ("split-associative", algebras::split_associative(f), params(f, 3, -1)),
    ]
}

pub fn random_matrix(f: Field, m: usize, rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Matrix {
    let rows: Vec<Vec<Scalar>> = (0..m).map(|_| (0..m).map(|_| f.from_i64(rng.gen_range(lo..=hi))).collect()).collect();
    Matrix::from_rows(f, rows).unwrap()
}

/// A unimodular matrix and its inverse, as a product of elementary row operations.
pub fn random_unimodular(f: Field, m: usize, rng: &mut ChaCha8Rng) -> (Matrix, Matrix) {
    let mut p = Matrix::identity(f, m);
    let mut p_inv = Matrix::identity(f, m);
    if m < 2 {
        return (p, p_inv);
    }
    for _ in 0..3 {
        let i = rng.gen_range(0..m);
        let mut j = rng.gen_range(0..m - 1);
        if j >= i {
            j += 1;
        }
        let k = rng.gen_range(-2..=2i64);
        let mut el = Matrix::identity(f, m);
        el.set(i, j, f.from_i64(k));
        let mut el_inv = Matrix::identity(f, m);
        el_inv.set(i, j, f.from_i64(-k));
        p = &el * &p;
        p_inv = &p_inv * &el_inv;
    }
    (p, p_inv)
}

/// A diagonal matrix whose entries are drawn from `roots`.
fn diagonal_from(f: Field, m: usize, roots: &[Scalar], rng: &mut ChaCha8Rng) -> Matrix {
    let mut d = Matrix::zeros(f, m, m);
    for i in 0..m {
        d.set(i, i, roots[rng.gen_range(0..roots.len())].clone());
    }
    d
}

/// Representation candidates of mixed validity: structured valid ones,
/// their conjugates and sums, and random or partly random maps.
pub fn candidates(alg: &Algebra, p: &GajParams, count: usize, seed: u64) -> Vec<Representation> {
    let f = alg.field();
    let n = alg.dim();
    let mut rng = rng(seed);
    let reg = Representation::regular(alg.clone());
    let mut out = vec![reg.clone(), Representation::zero(alg.clone(), 2)];
    let mut roots = vec![f.zero(), f.one()];
    if let Some(l) = gajwb::peirce::lambda(p) {
        roots.push(l);
    }
    while out.len() < count {
        let m = rng.gen_range(1..=3usize);
        let r = match rng.gen_range(0..5) {
            0 => {
                let (pm, pi) = random_unimodular(f, n, &mut rng);
                reg.conjugate(&pm, &pi)
            }
            1 => {
                let z = Representation::zero(alg.clone(), m);
                reg.direct_sum(&z).unwrap()
            }
            2 => {
                let mut rho = vec![diagonal_from(f, m, &roots, &mut rng)];
                rho.extend((1..n).map(|_| random_matrix(f, m, &mut rng, -1, 1)));
                Representation::new(alg.clone(), rho).unwrap()
            }
            3 => {
                // Sparse maps are valid far more often than dense ones.
                let rho = (0..n)
                    .map(|_| {
                        let mut a = Matrix::zeros(f, m, m);
                        let (i, j) = (rng.gen_range(0..m), rng.gen_range(0..m));
                        a.set(i, j, f.from_i64(rng.gen_range(-1..=1)));
                        a
                    })
                    .collect();
                Representation::new(alg.clone(), rho).unwrap()
            }
            _ => {
                let rho = (0..n).map(|_| random_matrix(f, m, &mut rng, -2, 2)).collect();
                Representation::new(alg.clone(), rho).unwrap()
            }
        };
        out.push(r);
    }
    out
}

/// Every map `ρ` into 1×1 matrices over a finite field.
pub fn all_one_dimensional(alg: &Algebra) -> Vec<Representation> {
    let f = alg.field();
    let elems = f.elements().expect("finite field");
    let mut out = Vec::new();
    let n = alg.dim();
    let total = elems.len().pow(n as u32);
    for mut k in 0..total {
        let rho = (0..n)
            .map(|_| {
                let s = elems[k % elems.len()].clone();
                k /= elems.len();
                Matrix::scalar(f, 1, &s)
            })
            .collect();
        out.push(Representation::new(alg.clone(), rho).unwrap());
    }
    out
}

/// Entries of a matrix over F_p as plain residues.
pub fn residues(m: &Matrix) -> Vec<Vec<u64>> {
    m.to_rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| match s {
                    Scalar::Modular { value, .. } => *value,
                    Scalar::Rational(_) => panic!("expected a prime field"),
                })
                .collect()
        })
        .collect()
}

fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = (1..p).find(|x| rows[rank][c] * x % p == 1).unwrap();
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let k = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p * p - k * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn apply_mod(a: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum::<u64>() % p).collect()
}

/// Brute-force irreducibility over F_p for module dimension at most 3: tries
/// every span of one or two vectors for invariance under the generators.
pub fn brute_force_irreducible(generators: &[Vec<Vec<u64>>], m: usize, p: u64) -> bool {
    assert!(m <= 3);
    let vectors: Vec<Vec<u64>> = (1..p.pow(m as u32))
        .map(|mut k| {
            (0..m)
                .map(|_| {
                    let d = k % p;
                    k /= p;
                    d
                })
                .collect()
        })
        .collect();
    let invariant = |span: &[Vec<u64>]| {
        let r = rank_mod(span.to_vec(), p);
        generators.iter().all(|a| {
            span.iter().all(|v| {
                let mut ext = span.to_vec();
                ext.push(apply_mod(a, v, p));
                rank_mod(ext, p) == r
            })
        })
    };
    for (i, v) in vectors.iter().enumerate() {
        if m > 1 && invariant(std::slice::from_ref(v)) {
            return false;
        }
        if m == 3 {
            for w in &vectors[i + 1..] {
                let span = [v.clone(), w.clone()];
                if rank_mod(span.to_vec(), p) == 2 && invariant(&span) {
                    return false;
                }
            }
        }
    }
    true
}

/// Random maps into `m × m` matrices over a finite field, `m ∈ 1..=3`, biased
/// toward sparse and triangular matrices so that both verdicts occur.
pub fn random_finite_maps(alg: &Algebra, count: usize, seed: u64) -> Vec<Representation> {
    let f = alg.field();
    let p = f.characteristic() as i64;
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let m = rng.gen_range(1..=3usize);
            let style = rng.gen_range(0..3);
            let rho = (0..alg.dim())
                .map(|_| {
                    let mut a = Matrix::zeros(f, m, m);
                    for i in 0..m {
                        for j in 0..m {
                            let keep = match style {
                                0 => true,
                                1 => j >= i,
                                _ => rng.gen_bool(0.4),
                            };
                            if keep {
                                a.set(i, j, f.from_i64(rng.gen_range(0..p)));
                            }
                        }
                    }
                    a
                })
                .collect();
            Representation::new(alg.clone(), rho).unwrap()
        })
        .collect()
}

/// Parameter points tried when every pair is admissible: one per regime plus
/// the special lines the relations single out.
pub const EVERYWHERE: [(i64, i64); 9] = [(1, 1), (1, 0), (1, -1), (2, -1), (3, -1), (0, 1), (2, 1), (1, 2), (1, -3)];

pub fn admissible_points(alg: &Algebra) -> Vec<GajParams> {
    let f = alg.field();
    match solve_parameter_space(alg).unwrap().shape() {
        ParameterShape::Empty => Vec::new(),
        ParameterShape::Line(b, g) => {
            [1, 2, -1].iter().map(|&t| GajParams::new(&b * &f.from_i64(t), &g * &f.from_i64(t)).unwrap()).collect()
        }
        ParameterShape::Everything => EVERYWHERE.iter().map(|&(b, g)| params(f, b, g)).collect(),
    }
}

/// Nonzero idempotents with coordinates in `{-1, 0, 1, 2}` (all of them over F_5).
pub fn idempotents(alg: &Algebra) -> Vec<Element> {
    let f = alg.field();
    let digits: Vec<i64> = match f {
        Field::Rationals => vec![-1, 0, 1, 2],
        Field::Prime(p) => (0..p as i64).collect(),
    };
    let n = alg.dim();
    let mut out = Vec::new();
    for mut k in 0..digits.len().pow(n as u32) {
        let coords: Vec<i64> = (0..n)
            .map(|_| {
                let d = digits[k % digits.len()];
                k /= digits.len();
                d
            })
            .collect();
        let x = alg.element_from_i64(&coords);
        if !x.is_zero() && alg.is_idempotent(&x).unwrap() {
            out.push(x);
        }
    }
    out
}

#[derive(Default, Debug)]
pub struct Tally {
    pub instances: usize,
    pub associative_holds: usize,
    pub lambda_holds: usize,
    pub relation_passes: usize,
}

const GENERIC_HYPOTHESES: [&str; 5] = ["β ≠ 0", "γ ≠ 0", "β+γ ≠ 0", "β+2γ ≠ 0", "β+3γ ≠ 0"];

/// Runs every applicable check on a valid representation and panics on any failure.
pub fn check_instance(label: &str, r: &Representation, e: &Element, p: &GajParams, tally: &mut Tally) {
    assert!(check_representation(r, p).unwrap(), "{label}: not a representation");
    tally.instances += 1;
    let consequences = verify_linearized_consequences(r, p).unwrap();
    for c in &consequences.results {
        assert!(c.violation.is_none(), "{label}: {} nonzero at {:?}", c.name, c.violation);
    }
    let ad = peirce_decompose(r.algebra(), e, p).unwrap();
    let md = module_peirce(r, e, p).unwrap();
    for c in &verify_action_relations(r, &ad, &md).checks {
        assert_ne!(c.status, RelationStatus::Fail, "{label}: {}", c.relation);
        if c.status == RelationStatus::Pass {
            tally.relation_passes += 1;
        }
    }
    let failing = lambda_hypotheses_failing(p);
    if md.parts.one.is_full() && !failing.iter().any(|h| GENERIC_HYPOTHESES.contains(&h.as_str())) {
        let c = check_associative_module(r, e, p).unwrap();
        assert_eq!(c.status, CheckStatus::Holds, "{label}: {:?}", c.witness);
        assert!(c.identities.iter().all(|i| i.vanishes), "{label}");
        tally.associative_holds += 1;
    }
    match check_lambda_relations(r, e, p) {
        Ok(c) => {
            assert_ne!(c.status, CheckStatus::Fails, "{label}: {:?}", c.witness);
            if c.status == CheckStatus::Holds {
                assert!(c.identities.iter().all(|i| i.vanishes), "{label}: {:?}", c.identities);
                tally.lambda_holds += 1;
            }
        }
        Err(Error::HypothesisNotMet(_)) => {}
        Err(other) => panic!("{label}: {other}"),
    }
}

pub fn idempotent_basis_elements(alg: &Algebra) -> Vec<Element> {
    (0..alg.dim()).map(|i| alg.basis_element(i)).filter(|x| alg.is_idempotent(x).unwrap()).collect()
}
