#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smfkit::dualpairs::{
    build_operators, commutator_apply, derivation, duality_term_dim, hwv_omega, is_harmonic, lambda_tilde_eps2, matrix_of,
    o_so_duality, so_n_basis, ExteriorVector, MatrixEntry, OperatorKind,
};
use smfkit::{Exec, Partition};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vector(r: &mut ChaCha8Rng, n: usize, m: usize, terms: usize) -> ExteriorVector {
    let mut v = ExteriorVector::zero(n, m);
    for _ in 0..terms {
        let mask = r.gen::<u64>() & ((1u64 << (n * m)) - 1);
        v.add_term(mask, Rational64::from_integer(r.gen_range(-5..=5)));
    }
    v
}

/// Incremental row echelon form over the rationals on sparse vectors.
#[derive(Default)]
pub struct Span {
    rows: Vec<(u128, BTreeMap<u128, Rational64>)>,
}

fn flatten(entries: &[MatrixEntry]) -> BTreeMap<u128, Rational64> {
    entries.iter().map(|((c, r), v)| (((*c as u128) << 64) | *r as u128, *v)).collect()
}

impl Span {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: BTreeMap<u128, Rational64>) -> BTreeMap<u128, Rational64> {
        for (pivot, row) in &self.rows {
            if let Some(c) = v.get(pivot).copied() {
                for (k, x) in row {
                    let e = v.entry(*k).or_insert_with(Rational64::zero);
                    *e -= c * x;
                    if e.is_zero() {
                        v.remove(k);
                    }
                }
            }
        }
        v
    }

    /// Adds a matrix; returns false when it was already in the span.
    pub fn insert(&mut self, entries: &[MatrixEntry]) -> bool {
        let v = self.reduce(flatten(entries));
        let Some((&pivot, &lead)) = v.iter().next() else { return false };
        let row: BTreeMap<u128, Rational64> = v.into_iter().map(|(k, x)| (k, x / lead)).collect();
        for (_, other) in self.rows.iter_mut() {
            if let Some(c) = other.get(&pivot).copied() {
                for (k, x) in &row {
                    let e = other.entry(*k).or_insert_with(Rational64::zero);
                    *e -= c * x;
                    if e.is_zero() {
                        other.remove(k);
                    }
                }
            }
        }
        self.rows.push((pivot, row));
        true
    }

    pub fn contains(&self, entries: &[MatrixEntry]) -> bool {
        self.reduce(flatten(entries)).is_empty()
    }
}

/// The operators span a space of dimension `m(2m-1)` closed under brackets.
pub fn so2m_closure(n: usize, m: usize) -> Result<(), String> {
    let ops = build_operators(n, m);
    let mats: Vec<Vec<MatrixEntry>> = ops.iter().map(|op| matrix_of(n, m, Exec::Parallel, |v| op.apply(v))).collect();
    let mut span = Span::default();
    for mat in &mats {
        span.insert(mat);
    }
    if span.dim() != m * (2 * m - 1) {
        return Err(format!("n={n} m={m}: span has dimension {}", span.dim()));
    }
    for (i, x) in ops.iter().enumerate() {
        for y in &ops[i + 1..] {
            let br = matrix_of(n, m, Exec::Parallel, |v| commutator_apply(x, y, v));
            if !span.contains(&br) {
                return Err(format!("n={n} m={m}: [{:?}, {:?}] leaves the span", x.kind, y.kind));
            }
        }
    }
    Ok(())
}

/// Every operator commutes with the `so_n` derivation action on random vectors.
pub fn so_n_invariance(n: usize, m: usize, seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    let ops = build_operators(n, m);
    for x in so_n_basis(n) {
        for _ in 0..4 {
            let v = random_vector(&mut r, n, m, 6);
            for op in &ops {
                if op.apply(&derivation(&x, &v)) != derivation(&x, &op.apply(&v)) {
                    return Err(format!("n={n} m={m}: {:?} fails to commute", op.kind));
                }
            }
        }
    }
    Ok(())
}

/// Operator harmonicity of `ω_λ` agrees with `λ^t_i + λ^t_j ≤ n` (`i ≠ j`).
pub fn harmonic_criterion(n: usize, m: usize) -> Result<(), String> {
    for lambda in Partition::all_in_box(n, m as u32) {
        let t = lambda.conjugate();
        let combinatorial = (0..m).all(|i| (0..m).all(|j| i == j || t.part(i) + t.part(j) <= n as u32));
        let w = hwv_omega(&lambda, n, m).map_err(|e| e.to_string())?;
        if is_harmonic(&w, n, m) != combinatorial {
            return Err(format!("n={n} m={m}: {lambda} disagrees"));
        }
    }
    Ok(())
}

/// `d_{a,a} ω_λ = (λ^t_a - n/2) ω_λ`, which negated and reversed is `λ̃`.
pub fn d_eigenvalues(n: usize, m: usize) -> Result<(), String> {
    let ops = build_operators(n, m);
    for term in o_so_duality(n, m).map_err(|e| e.to_string())? {
        let w = hwv_omega(&term.lambda, n, m).map_err(|e| e.to_string())?;
        let mut eig2 = Vec::new();
        for a in 0..m {
            let d = ops.iter().find(|o| o.kind == OperatorKind::Preserve(a, a)).unwrap();
            let image = d.apply(&w);
            let (_, c) = image.terms().next().unwrap_or((0, Rational64::zero()));
            if image.terms().count() > 1 || image != w.scale(c) {
                return Err(format!("{}: ω not an eigenvector", term.lambda));
            }
            eig2.push((c * 2).to_integer());
        }
        let expected: Vec<i64> = eig2.iter().rev().map(|e| -e).collect();
        if expected != lambda_tilde_eps2(&term.lambda, n, m) || expected != term.eps2 {
            return Err(format!("{}: eigenvalues {eig2:?} vs {:?}", term.lambda, term.eps2));
        }
    }
    Ok(())
}

/// `Σ dim V_[λ] · dim L(λ̃) = 2^{nm}`.
pub fn o_so_dimension(n: usize, m: usize) -> Result<(), String> {
    let mut total: i128 = 0;
    for term in o_so_duality(n, m).map_err(|e| e.to_string())? {
        total += duality_term_dim(&term, n, m).map_err(|e| e.to_string())?;
    }
    if total != 1i128 << (n * m) {
        return Err(format!("n={n} m={m}: total {total}"));
    }
    Ok(())
}

use smfkit::chars::{exterior_power, VirtualCharacter};
use smfkit::clifford::{clifford_invariants, is_commutative, realize_sum, saturated_torus};
use smfkit::rootdata::{RootSystem, Weight};
use smfkit::smf::{
    catalog, edge_removals, is_indecomposable, multidegree_component, smf_check_saturated, Caps, GroupSpec, RepSpec, Section, Verdict,
};
use smfkit::Mult;

pub fn sys(s: &str) -> RootSystem {
    RootSystem::parse(s).unwrap()
}

pub fn rep(system: &RootSystem, s: &str) -> RepSpec {
    RepSpec::parse(system, s).unwrap()
}

pub fn verdict(system: &RootSystem, v: &RepSpec) -> Result<Verdict, String> {
    smf_check_saturated(&GroupSpec::saturated(system, v), v, Caps::default()).map(|r| r.verdict).map_err(|e| e.to_string())
}

fn sum_of_squares(chi: &VirtualCharacter) -> Mult {
    chi.terms().map(|(_, m)| m * m).sum()
}

/// `Σ m²` over the constituents of `ΛV` under the saturated torus times `G`.
pub fn saturated_oracle(system: &RootSystem, v: &RepSpec) -> Mult {
    let dims = v.dims(system).unwrap();
    let mut total = 0;
    let mut r = vec![0u32; dims.len()];
    loop {
        total += sum_of_squares(&multidegree_component(system, v, &r).unwrap());
        let mut i = 0;
        loop {
            if i == r.len() {
                return total;
            }
            r[i] += 1;
            if r[i] as usize <= dims[i] {
                break;
            }
            r[i] = 0;
            i += 1;
        }
    }
}

/// `Σ m²` over the constituents of `ΛV` under `G` alone.
pub fn semisimple_oracle(system: &RootSystem, v: &RepSpec) -> Mult {
    let mut chi = VirtualCharacter::zero(system);
    for w in &v.summands {
        chi = &chi + &VirtualCharacter::irreducible(system, w).unwrap();
    }
    let mut total = VirtualCharacter::zero(system);
    for k in 0..=chi.dim() as usize {
        total = &total + &exterior_power(k, &chi);
    }
    sum_of_squares(&total)
}

/// Modules with `dim(V ⊕ V*) ≤ 12` and a matrix model.
pub const CLIFFORD_CASES: &[(&str, &str)] = &[
    ("A1", "[1]"),
    ("A1", "[2]"),
    ("A1", "[3]"),
    ("A1", "[5]"),
    ("A1", "[1];[1]"),
    ("A1", "[1];[2]"),
    ("A1", "[1];[3]"),
    ("A1", "[2];[2]"),
    ("A1", "[1];[1];[1]"),
    ("A2", "[1,0]"),
    ("A2", "[2,0]"),
    ("A2", "[1,0];[1,0]"),
    ("A2", "[1,0];[0,1]"),
    ("A3", "[1,0,0]"),
    ("A3", "[0,1,0]"),
    ("A5", "[1,0,0,0,0]"),
    ("A1xA1", "[1]x[1]"),
    ("A1xA1", "[1]x[2]"),
    ("A1xA1", "[1]x[0];[0]x[1]"),
    ("A1xA1", "[1]x[1];[1]x[0]"),
    ("A1xA2", "[1]x[1,0]"),
    ("B2", "[1,0]"),
    ("C2", "[1,0]"),
    ("C3", "[1,0,0]"),
];

/// Invariant dimension equals `Σ m²` and commutativity equals the SMF verdict.
pub fn clifford_cross_oracle() -> Result<(), String> {
    for (st, v) in CLIFFORD_CASES {
        let s = sys(st);
        let v = rep(&s, v);
        let m = realize_sum(&s, &v).map_err(|e| e.to_string())?;
        if 2 * m.dim > 12 {
            return Err(format!("{st} {}: too large for the oracle range", v.render(&s)));
        }
        let basis = clifford_invariants(&m, Some(&saturated_torus(v.len()))).map_err(|e| e.to_string())?;
        let oracle = saturated_oracle(&s, &v);
        if basis.len() as Mult != oracle {
            return Err(format!("{st} {}: {} invariants, Σm² = {oracle}", v.render(&s), basis.len()));
        }
        let smf = verdict(&s, &v)? == Verdict::Smf;
        if is_commutative(&basis).commutative != smf {
            return Err(format!("{st} {}: commutativity disagrees with the SMF verdict", v.render(&s)));
        }
    }
    Ok(())
}

fn random_weight(r: &mut ChaCha8Rng, s: &RootSystem, max_dim: u128) -> Option<Weight> {
    for _ in 0..50 {
        let w: Weight = (0..s.rank()).map(|_| if r.gen_bool(0.35) { r.gen_range(1..=2) } else { 0 }).collect();
        let d = s.weyl_dim(&w).unwrap();
        if d > 1 && d <= max_dim {
            return Some(w);
        }
    }
    None
}

/// `V₁ ⊕ V₂` and `V₁ ⊕ V₂*` get the same verdict on `count` random specs.
pub fn duality_invariance(seed: u64, count: usize) -> Result<(), String> {
    let mut r = rng(seed);
    let systems = ["A1", "A2", "A3", "C2", "A1xA1", "A1xA2", "G2"];
    let mut done = 0;
    while done < count {
        let s = sys(systems[r.gen_range(0..systems.len())]);
        let (Some(v1), Some(v2)) = (random_weight(&mut r, &s, 12), random_weight(&mut r, &s, 12)) else { continue };
        let a = RepSpec::new(&s, vec![v1.clone(), v2.clone()]).unwrap();
        let b = RepSpec::new(&s, vec![v1, s.dual(&v2)]).unwrap();
        if verdict(&s, &a)? != verdict(&s, &b)? {
            return Err(format!("{s}: {} and its partial dual disagree", a.render(&s)));
        }
        done += 1;
    }
    Ok(())
}

/// SMF catalog diagrams have SMF connected edge-removal subgraphs, and a
/// non-SMF diagram stays non-SMF after adding a factor.
pub fn subgraph_monotonicity() -> Result<(), String> {
    for e in catalog() {
        if !matches!(e.section, Section::TheoremIrred | Section::TheoremReducible) {
            continue;
        }
        if verdict(&e.system, &e.rep)? != Verdict::Smf {
            return Err(format!("{} is not SMF", e.label));
        }
        for sub in edge_removals(&e.system, &e.rep) {
            if is_indecomposable(&sub.diagram) && verdict(&sub.system, &sub.rep)? != Verdict::Smf {
                return Err(format!("{} minus edge {:?} is not SMF", e.label, sub.edge));
            }
        }
    }
    for (small, big) in [
        (("A1xA1", "[2]x[0];[2]x[1]"), ("A1xA1xA1", "[2]x[0]x[0];[2]x[1]x[1]")),
        (("A3", "[1,0,0];[0,1,0]"), ("A3xA1", "[1,0,0]x[0];[0,1,0]x[1]")),
        (("A1", "[1];[5]"), ("A1xA1", "[1]x[1];[5]x[0]")),
    ] {
        let (s1, s2) = (sys(small.0), sys(big.0));
        if verdict(&s1, &rep(&s1, small.1))? != Verdict::NotSmf || verdict(&s2, &rep(&s2, big.1))? != Verdict::NotSmf {
            return Err(format!("{} does not propagate to {}", small.1, big.1));
        }
    }
    Ok(())
}
