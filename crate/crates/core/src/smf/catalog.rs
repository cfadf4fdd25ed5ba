use std::fmt;

use serde::Serialize;

use super::check::{
    multidegree_component, smf_check_saturated_with, smf_check_torus_with, torus_group_component, Caps, TorusEmbedding, Verdict,
};
use super::spec::{GroupSpec, RepSpec};
use crate::chars::{exterior_power, plethysm_with, so_system, VirtualCharacter};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::partitions::Partition;
use crate::rootdata::{RootSystem, Weight};
use crate::Mult;

/// Catalog sections; `name()` is the filter key.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Section {
    /// Irreducible modules of simple groups.
    TheoremSimple,
    /// Irreducible tensor products of simple groups.
    TheoremIrred,
    /// Reducible indecomposable saturated diagrams.
    TheoremReducible,
    /// Non-multiplicity-free plethysms.
    Table1,
    /// Non-SMF two-summand modules of a single simple factor.
    Table2,
    /// Non-SMF N-shaped diagrams.
    Table3,
    /// Non-SMF tensor products of simple SMF modules.
    AppendixAProducts,
    /// Explicit exterior power decompositions.
    AppendixAExterior,
    /// Three-summand modules of `SL_2`.
    AppendixBThreeSummand,
    /// Further non-SMF diagrams.
    AppendixB,
    /// Torus-restricted (non-saturated) actions.
    Torus,
}

impl Section {
    pub const ALL: [Section; 11] = [
        Section::TheoremSimple,
        Section::TheoremIrred,
        Section::TheoremReducible,
        Section::Table1,
        Section::Table2,
        Section::Table3,
        Section::AppendixAProducts,
        Section::AppendixAExterior,
        Section::AppendixBThreeSummand,
        Section::AppendixB,
        Section::Torus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::TheoremSimple => "theorem-simple",
            Section::TheoremIrred => "theorem-irred",
            Section::TheoremReducible => "theorem-reducible",
            Section::Table1 => "table1",
            Section::Table2 => "table2",
            Section::Table3 => "table3",
            Section::AppendixAProducts => "appendixA-products",
            Section::AppendixAExterior => "appendixA-exterior",
            Section::AppendixBThreeSummand => "appendixB-three-summand",
            Section::AppendixB => "appendixB",
            Section::Torus => "torus",
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One plethysm claim `S_λ(V(v)) ⊇ mult · V(weight)` (exact multiplicity).
#[derive(Clone, Debug, Serialize)]
pub struct PlethysmClaim {
    pub system: RootSystem,
    pub v: Weight,
    pub lambda: Partition,
    pub weight: Weight,
    pub mult: Mult,
}

/// What an entry asserts.
#[derive(Clone, Debug, Serialize)]
pub enum Expected {
    /// Saturated action is SMF.
    Smf,
    /// Saturated action is not SMF; optionally with an exact witness.
    NotSmf { multidegree: Option<Vec<u32>>, weight: Option<Weight>, mult: Option<Mult> },
    /// Plethysm multiplicities.
    Plethysm(Vec<PlethysmClaim>),
    /// `Λ^k V` equals the listed character exactly.
    Exterior { k: usize, terms: Vec<(Weight, Mult)> },
    /// Torus-restricted verdict; for `NotSmf`, `weight` has multiplicity
    /// `mult` in the group of torus character `character`.
    Torus { embedding: TorusEmbedding, verdict: Verdict, character: Option<Vec<i64>>, weight: Option<Weight>, mult: Option<Mult> },
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub label: String,
    pub section: Section,
    pub description: String,
    pub system: RootSystem,
    pub rep: RepSpec,
    pub expected: Expected,
    /// Excluded unless long entries are requested.
    pub long: bool,
}

impl CatalogEntry {
    pub fn group(&self) -> GroupSpec {
        match &self.expected {
            Expected::Torus { embedding, .. } => GroupSpec::new(embedding.matrix.len(), self.system.clone()),
            _ => GroupSpec::saturated(&self.system, &self.rep),
        }
    }

    pub fn matches(&self, filter: &str) -> bool {
        filter.is_empty() || filter == "all" || self.section.name().starts_with(filter) || self.label == filter
    }
}

struct Builder {
    entries: Vec<CatalogEntry>,
}

fn sys(s: &str) -> RootSystem {
    RootSystem::parse(s).expect("catalog system")
}

fn weight(system: &RootSystem, s: &str) -> Weight {
    system.parse_weight(s).expect("catalog weight")
}

fn fundamental(rank: usize, i: usize, coeff: i32) -> String {
    let body: Vec<String> = (0..rank).map(|j| if j == i { coeff.to_string() } else { "0".to_string() }).collect();
    format!("[{}]", body.join(","))
}

fn so_natural(n: usize) -> (String, String) {
    let s = so_system(n).expect("n >= 3");
    let w = match n {
        3 => "[2]".to_string(),
        4 => "[1]x[1]".to_string(),
        _ => fundamental(n / 2, 0, 1),
    };
    let name: Vec<String> = s.factors().iter().map(|t| t.to_string()).collect();
    (name.join("x"), w)
}

impl Builder {
    fn push(&mut self, section: Section, label: &str, description: &str, system: &str, rep: &str, expected: Expected, long: bool) {
        let system = sys(system);
        let rep = RepSpec::parse(&system, rep).expect("catalog representation");
        self.entries.push(CatalogEntry {
            label: label.to_string(),
            section,
            description: description.to_string(),
            system,
            rep,
            expected,
            long,
        });
    }

    fn smf(&mut self, section: Section, label: &str, description: &str, system: &str, rep: &str, long: bool) {
        self.push(section, label, description, system, rep, Expected::Smf, long);
    }

    fn not_smf(&mut self, section: Section, label: &str, description: &str, system: &str, rep: &str, witness: Option<(&[u32], &str, Mult)>) {
        let s = sys(system);
        let expected = match witness {
            Some((r, w, m)) => Expected::NotSmf { multidegree: Some(r.to_vec()), weight: Some(weight(&s, w)), mult: Some(m) },
            None => Expected::NotSmf { multidegree: None, weight: None, mult: None },
        };
        self.push(section, label, description, system, rep, expected, false);
    }
}

fn theorem_simple(b: &mut Builder) {
    let s = Section::TheoremSimple;
    for n in 2..=6usize {
        let st = format!("A{}", n - 1);
        b.smf(s, &format!("(A1^{n})"), &format!("SL_{n}"), &st, &fundamental(n - 1, 0, 1), false);
    }
    for n in 2..=6usize {
        let st = format!("A{}", n - 1);
        b.smf(s, &format!("(A2^{n})"), &format!("S^2 SL_{n}"), &st, &fundamental(n - 1, 0, 2), false);
    }
    for k in 3..=6 {
        b.smf(s, &format!("(A{k})"), &format!("S^{k} SL_2"), "A1", &format!("[{k}]"), false);
    }
    b.smf(s, "(A7)", "S^3 SL_3", "A2", "[3,0]", false);
    for n in 4..=6usize {
        b.smf(s, &format!("(A8^{n})"), &format!("Λ^2 SL_{n}"), &format!("A{}", n - 1), &fundamental(n - 1, 1, 1), false);
    }
    b.smf(s, "(A9)", "Λ^3 SL_6", "A5", "[0,0,1,0,0]", false);
    for n in 3..=4usize {
        b.smf(s, &format!("(B1^{n})"), &format!("SO_{}", 2 * n + 1), &format!("B{n}"), &fundamental(n, 0, 1), false);
    }
    b.smf(s, "(B2)", "Δ_7", "B3", "[0,0,1]", false);
    b.smf(s, "(B3)", "Δ_9", "B4", "[0,0,0,1]", false);
    for n in 2..=3usize {
        b.smf(s, &format!("(C1^{n})"), &format!("Sp_{}", 2 * n), &format!("C{n}"), &fundamental(n, 0, 1), false);
    }
    b.smf(s, "(C2)", "Λ^2_0 Sp_4", "C2", "[0,1]", false);
    b.smf(s, "(C3)", "Λ^3_0 Sp_6", "C3", "[0,0,1]", false);
    for n in 4..=5usize {
        b.smf(s, &format!("(D1^{n})"), &format!("SO_{}", 2 * n), &format!("D{n}"), &fundamental(n, 0, 1), false);
    }
    b.smf(s, "(D2)", "Δ^+_10", "D5", "[0,0,0,0,1]", false);
    b.smf(s, "(D3)", "Δ^+_12", "D6", "[0,0,0,0,1,0]", true);
    b.smf(s, "(E6)", "E_6", "E6", "[1,0,0,0,0,0]", true);
    b.smf(s, "(E7)", "E_7", "E7", "[0,0,0,0,0,0,1]", true);
    b.smf(s, "(G)", "G_2", "G2", "[1,0]", false);
}

fn theorem_irred(b: &mut Builder) {
    let s = Section::TheoremIrred;
    for (m, n) in [(2usize, 2usize), (2, 3), (3, 3)] {
        let rep = format!("{}x{}", fundamental(m - 1, 0, 1), fundamental(n - 1, 0, 1));
        b.smf(s, &format!("SL{m}xSL{n}"), &format!("SL_{m} ⊗ SL_{n}"), &format!("A{}xA{}", m - 1, n - 1), &rep, false);
    }
    for n in 3..=5 {
        let (so, w) = so_natural(n);
        b.smf(s, &format!("SL2xSO{n}"), &format!("SL_2 ⊗ SO_{n}"), &format!("A1x{so}"), &format!("[1]x{w}"), false);
    }
    for m in 1..=2 {
        let (so, w) = so_natural(2 * m + 1);
        b.smf(s, &format!("SL3xSO{}", 2 * m + 1), &format!("SL_3 ⊗ SO_{}", 2 * m + 1), &format!("A2x{so}"), &format!("[1,0]x{w}"), false);
    }
    for n in 2..=3usize {
        let rep = format!("{}x[1,0]", fundamental(n - 1, 0, 1));
        b.smf(s, &format!("SL{n}xSp4"), &format!("SL_{n} ⊗ Sp_4"), &format!("A{}xC2", n - 1), &rep, false);
    }
}

fn theorem_reducible(b: &mut Builder) {
    let s = Section::TheoremReducible;
    for n in 2..=3usize {
        let v = fundamental(n - 1, 0, 1);
        b.smf(s, &format!("(α) n={n}"), &format!("SL_{n} on C^{n} ⊕ C^{n}"), &format!("A{}", n - 1), &format!("{v};{v}"), false);
    }
    b.smf(s, "(β)", "SL_2 on C^2 ⊕ S^2C^2", "A1", "[1];[2]", false);
    b.smf(s, "(γ)", "SL_3 on C^3 ⊕ S^2C^3", "A2", "[1,0];[2,0]", false);
    b.smf(s, "(δ)", "SL_2 on C^2 ⊕ S^3C^2", "A1", "[1];[3]", false);
    b.smf(s, "(ε)", "SL_2 on C^2 ⊕ S^4C^2", "A1", "[1];[4]", false);
    for m in [3usize, 5] {
        let (so, w) = so_natural(m);
        b.smf(s, &format!("(ρ) m={m}"), &format!("SO_{m} on C^{m} ⊕ C^{m}"), &so, &format!("{w};{w}"), false);
    }
    for (n, m) in [(2usize, 2usize), (2, 3), (3, 2)] {
        let (vn, vm) = (fundamental(n - 1, 0, 1), fundamental(m - 1, 0, 1));
        let zero_m = fundamental(m - 1, usize::MAX, 0);
        b.smf(
            s,
            &format!("(η) n={n} m={m}"),
            &format!("SL_{n} x SL_{m} on C^{n} ⊕ C^{n} ⊗ C^{m}"),
            &format!("A{}xA{}", n - 1, m - 1),
            &format!("{vn}x{zero_m};{vn}x{vm}"),
            false,
        );
    }
    for n in 2..=3usize {
        let vn = fundamental(n - 1, 0, 1);
        let zero = fundamental(n - 1, usize::MAX, 0);
        b.smf(
            s,
            &format!("(κ) n={n}"),
            &format!("SL_2 x SL_{n} on S^2C^2 ⊕ C^2 ⊗ C^{n}"),
            &format!("A1xA{}", n - 1),
            &format!("[2]x{zero};[1]x{vn}"),
            false,
        );
    }
    for n in [3usize, 5] {
        let (so, w) = so_natural(n);
        let zero = if n == 3 { "[0]".to_string() } else { fundamental(n / 2, usize::MAX, 0) };
        b.smf(s, &format!("(ϑ) n={n}"), &format!("SL_2 x SO_{n} on C^2 ⊕ C^2 ⊗ C^{n}"), &format!("A1x{so}"), &format!("[1]x{zero};[1]x{w}"), false);
        b.smf(s, &format!("(σ) n={n}"), &format!("SL_2 x SO_{n} on S^2C^2 ⊕ C^2 ⊗ C^{n}"), &format!("A1x{so}"), &format!("[2]x{zero};[1]x{w}"), false);
    }
    for (n, m) in [(2usize, 2usize), (3, 2)] {
        let (vn, vm) = (fundamental(n - 1, 0, 1), fundamental(m - 1, 0, 1));
        let (zn, zm) = (fundamental(n - 1, usize::MAX, 0), fundamental(m - 1, usize::MAX, 0));
        b.smf(
            s,
            &format!("(W) SL{n} SL2 SL{m}"),
            &format!("SL_{n} x SL_2 x SL_{m} on C^{n} ⊗ C^2 ⊕ C^2 ⊗ C^{m}"),
            &format!("A{}xA1xA{}", n - 1, m - 1),
            &format!("{vn}x[1]x{zm};{zn}x[1]x{vm}"),
            false,
        );
    }
    for (n, m) in [(2usize, 3usize), (2, 5)] {
        let (so, w) = so_natural(m);
        let zm = if m == 3 { "[0]".to_string() } else { fundamental(m / 2, usize::MAX, 0) };
        b.smf(
            s,
            &format!("(W) SL{n} SL2 SO{m}"),
            &format!("SL_{n} x SL_2 x SO_{m} on C^{n} ⊗ C^2 ⊕ C^2 ⊗ C^{m}"),
            &format!("A{}xA1x{so}", n - 1),
            &format!("{}x[1]x{zm};{}x[1]x{w}", fundamental(n - 1, 0, 1), fundamental(n - 1, usize::MAX, 0)),
            false,
        );
    }
    for (n, m) in [(3usize, 3usize), (3, 5)] {
        let (son, wn) = so_natural(n);
        let (som, wm) = so_natural(m);
        let zn = if n == 3 { "[0]".to_string() } else { fundamental(n / 2, usize::MAX, 0) };
        let zm = if m == 3 { "[0]".to_string() } else { fundamental(m / 2, usize::MAX, 0) };
        b.smf(
            s,
            &format!("(W) SO{n} SL2 SO{m}"),
            &format!("SO_{n} x SL_2 x SO_{m} on C^{n} ⊗ C^2 ⊕ C^2 ⊗ C^{m}"),
            &format!("{son}xA1x{som}"),
            &format!("{wn}x[1]x{zm};{zn}x[1]x{wm}"),
            false,
        );
    }
}

fn table1(b: &mut Builder) {
    let rows: &[(&str, &str, &[(&str, &str, &[u32], &str, Mult)], bool)] = &[
        ("(A2^3)", "S^2 SL_3", &[("A2", "[2,0]", &[2, 2, 2], "[2,2]", 2)], false),
        ("(A3)", "S^3 SL_2", &[("A1", "[3]", &[2, 2], "[4]", 2)], false),
        (
            "(Ak)",
            "S^k SL_2, k = 4,5,6",
            &[("A1", "[4]", &[2, 1], "[4]", 2), ("A1", "[5]", &[2, 1], "[5]", 2), ("A1", "[6]", &[2, 1], "[6]", 2)],
            false,
        ),
        ("(A7)", "S^3 SL_3", &[("A2", "[3,0]", &[2, 2], "[2,2]", 2)], false),
        ("(A8^5)", "Λ^2 SL_5", &[("A4", "[0,1,0,0]", &[2, 2, 2, 1], "[2,0,1,1]", 2)], false),
        ("(A9)", "Λ^3 SL_6", &[("A5", "[0,0,1,0,0]", &[2, 2, 1], "[0,1,1,1,0]", 3)], false),
        ("(B2)", "Δ_7", &[("B3", "[0,0,1]", &[2, 2, 1, 1], "[0,1,0]", 3)], false),
        ("(B3)", "Δ_9", &[("B4", "[0,0,0,1]", &[2, 2, 1], "[0,0,0,1]", 3)], false),
        ("(C1^3)", "Sp_6", &[("C3", "[1,0,0]", &[2, 2, 1, 1], "[0,1,0]", 2)], false),
        ("(C3)", "Λ^3_0 Sp_6", &[("C3", "[0,0,1]", &[2, 2], "[0,2,0]", 2)], false),
        ("(D2)", "Δ^+_10", &[("D5", "[0,0,0,0,1]", &[2, 2, 2, 2], "[0,0,2,0,0]", 2)], false),
        ("(D3)", "Δ^+_12", &[("D6", "[0,0,0,0,1,0]", &[2, 2, 1], "[1,0,0,0,0,1]", 2)], true),
        ("(E6)", "E_6", &[("E6", "[1,0,0,0,0,0]", &[2, 2, 2], "[1,0,0,0,0,1]", 2)], true),
        ("(E7)", "E_7", &[("E7", "[0,0,0,0,0,0,1]", &[2, 2, 1], "[1,0,0,0,0,0,1]", 2)], true),
        ("(G)", "G_2", &[("G2", "[1,0]", &[2, 2], "[2,0]", 2)], false),
    ];
    for (label, description, claims, long) in rows {
        let claims: Vec<PlethysmClaim> = claims
            .iter()
            .map(|(st, v, lambda, w, m)| {
                let system = sys(st);
                PlethysmClaim {
                    v: weight(&system, v),
                    weight: weight(&system, w),
                    lambda: Partition::new(lambda.to_vec()).expect("catalog partition"),
                    mult: *m,
                    system,
                }
            })
            .collect();
        let (st, v) = (claims[0].system.to_string(), claims[0].system.format_weight(&claims[0].v));
        b.push(Section::Table1, label, description, &st, &v, Expected::Plethysm(claims), *long);
    }
}

type WitnessRow<'a> = (&'a str, &'a str, &'a str, &'a [u32], &'a str, Mult);

fn witness_rows(b: &mut Builder, section: Section, rows: &[WitnessRow]) {
    for (i, (description, system, rep, r, w, m)) in rows.iter().enumerate() {
        let label = format!("{}:{}", section.name(), i + 1);
        b.not_smf(section, &label, description, system, rep, Some((r, w, *m)));
    }
}

fn table2(b: &mut Builder) {
    let rows: &[WitnessRow] = &[
        ("Λ^(2,5) SL_4 ⊕ S^2 SL_4", "A3", "[1,0,0];[2,0,0]", &[2, 5], "[1,2,1]", 2),
        ("Λ^(1,3) SL_2 ⊕ S^5 SL_2", "A1", "[1];[5]", &[1, 3], "[4]", 2),
        ("Λ^(1,3) SL_2 ⊕ S^6 SL_2", "A1", "[1];[6]", &[1, 3], "[5]", 2),
        ("Λ^(1,3) SL_3 ⊕ S^3 SL_3", "A2", "[1,0];[3,0]", &[1, 3], "[3,2]", 2),
        ("Λ^(2,3) SL_4 ⊕ Λ^2 SL_4", "A3", "[1,0,0];[0,1,0]", &[2, 3], "[1,0,1]", 2),
        ("Λ^(2,2) SL_6 ⊕ Λ^3 SL_6", "A5", "[1,0,0,0,0];[0,0,1,0,0]", &[2, 2], "[0,1,0,0,0]", 2),
        ("Λ^(1,2) S^2 SL_2 ⊕ S^3 SL_2", "A1", "[2];[3]", &[1, 2], "[2]", 2),
        ("Λ^(1,2) S^2 SL_2 ⊕ S^4 SL_2", "A1", "[2];[4]", &[1, 2], "[4]", 2),
        ("Λ^(1,2) S^2 SL_2 ⊕ S^5 SL_2", "A1", "[2];[5]", &[1, 2], "[2]", 2),
        ("Λ^(1,2) S^2 SL_2 ⊕ S^6 SL_2", "A1", "[2];[6]", &[1, 2], "[4]", 2),
        ("Λ^(2,2) S^2 SL_4 ⊕ Λ^2 SL_4", "A3", "[2,0,0];[0,1,0]", &[2, 2], "[2,1,0]", 2),
        ("Λ^(2,2) S^2 SL_6 ⊕ Λ^3 SL_6", "A5", "[2,0,0,0,0];[0,0,1,0,0]", &[2, 2], "[2,0,1,0,1]", 2),
        ("Λ^(1,2) S^3 SL_2 ⊕ S^4 SL_2", "A1", "[3];[4]", &[1, 2], "[3]", 2),
        ("Λ^(1,2) S^3 SL_2 ⊕ S^5 SL_2", "A1", "[3];[5]", &[1, 2], "[3]", 2),
        ("Λ^(1,2) S^3 SL_2 ⊕ S^6 SL_2", "A1", "[3];[6]", &[1, 2], "[3]", 2),
        ("Λ^(1,2) S^4 SL_2 ⊕ S^5 SL_2", "A1", "[4];[5]", &[1, 2], "[4]", 3),
        ("Λ^(1,2) S^4 SL_2 ⊕ S^6 SL_2", "A1", "[4];[6]", &[1, 2], "[2]", 2),
        ("Λ^(1,2) S^5 SL_2 ⊕ S^6 SL_2", "A1", "[5];[6]", &[1, 2], "[3]", 2),
        ("Λ^(1,3) Λ^2 SL_4 ⊕ Λ^2 SL_4", "A3", "[0,1,0];[0,1,0]", &[1, 3], "[1,0,1]", 2),
        ("Λ^(1,2) Λ^2 SL_6 ⊕ Λ^3 SL_6", "A5", "[0,1,0,0,0];[0,0,1,0,0]", &[1, 2], "[0,1,0,0,0]", 2),
        ("Λ^(2,2) Sp_4 ⊕ Λ^2_0 Sp_4", "C2", "[1,0];[0,1]", &[2, 2], "[2,0]", 2),
        ("Λ^(2,2) Sp_6 ⊕ Λ^3_0 Sp_6", "C3", "[1,0,0];[0,0,1]", &[2, 2], "[0,1,0]", 2),
        ("Λ^(2,3) Spin_8 ⊕ Δ^+_8", "D4", "[1,0,0,0];[0,0,0,1]", &[2, 3], "[1,0,1,0]", 2),
    ];
    witness_rows(b, Section::Table2, rows);
}

fn table3(b: &mut Builder) {
    let rows: &[WitnessRow] = &[
        ("(α) Λ^(1,3) SL_3 ⊕ SL_3 ⊗ S^2 SL_2", "A2xA1", "[1,0]x[0];[1,0]x[2]", &[1, 3], "[1,0][2]", 2),
        ("(α) Λ^(1,4) SL_2 ⊕ SL_2 ⊗ Λ^2 SL_4", "A1xA3", "[1]x[0,0,0];[1]x[0,1,0]", &[1, 4], "[3][1,0,1]", 2),
        ("(α) Λ^(1,3) SL_2 ⊕ SL_2 ⊗ Sp_4", "A1xC2", "[1]x[0,0];[1]x[1,0]", &[1, 3], "[2][1,0]", 2),
        ("(β) Λ^(1,4) S^2 SL_2 ⊕ SL_2 ⊗ Λ^2 SL_4", "A1xA3", "[2]x[0,0,0];[1]x[0,1,0]", &[1, 4], "[2][1,0,1]", 2),
        ("(β) Λ^(1,3) S^2 SL_2 ⊕ SL_2 ⊗ Sp_4", "A1xC2", "[2]x[0,0];[1]x[1,0]", &[1, 3], "[1][1,0]", 2),
        ("(β) Λ^(1,3) SL_2 ⊕ S^2 SL_2 ⊗ SL_2", "A1xA1", "[1]x[0];[2]x[1]", &[1, 3], "[3][1]", 2),
        ("(δ) Λ^(2,2) S^3 SL_2 ⊕ SL_2 ⊗ SL_2", "A1xA1", "[3]x[0];[1]x[1]", &[2, 2], "[2][0]", 2),
        ("(δ) Λ^(2,2) S^3 SL_2 ⊕ SL_2 ⊗ S^2 SL_2", "A1xA1", "[3]x[0];[1]x[2]", &[2, 2], "[2][2]", 2),
        ("(δ) Λ^(2,2) S^3 SL_2 ⊕ SL_2 ⊗ Λ^2 SL_4", "A1xA3", "[3]x[0,0,0];[1]x[0,1,0]", &[2, 2], "[2][1,0,1]", 2),
        ("(δ) Λ^(1,3) S^3 SL_2 ⊕ SL_2 ⊗ Sp_4", "A1xC2", "[3]x[0,0];[1]x[1,0]", &[1, 3], "[2][1,0]", 2),
        ("(ε) Λ^(2,2) S^4 SL_2 ⊕ SL_2 ⊗ SL_2", "A1xA1", "[4]x[0];[1]x[1]", &[2, 2], "[4][0]", 2),
        ("(ε) Λ^(2,2) S^4 SL_2 ⊕ SL_2 ⊗ S^2 SL_2", "A1xA1", "[4]x[0];[1]x[2]", &[2, 2], "[4][2]", 2),
        ("(ε) Λ^(2,2) S^4 SL_2 ⊕ SL_2 ⊗ Λ^2 SL_4", "A1xA3", "[4]x[0,0,0];[1]x[0,1,0]", &[2, 2], "[4][1,0,1]", 2),
        ("(ε) Λ^(1,3) S^4 SL_2 ⊕ SL_2 ⊗ Sp_4", "A1xC2", "[4]x[0,0];[1]x[1,0]", &[1, 3], "[3][1,0]", 2),
        ("(γ) Λ^(2,3) S^2 SL_3 ⊕ SL_3 ⊗ SL_2", "A2xA1", "[2,0]x[0];[1,0]x[1]", &[2, 3], "[2,1][1]", 2),
        ("(γ) Λ^(1,3) S^2 SL_3 ⊕ SL_3 ⊗ S^2 SL_2", "A2xA1", "[2,0]x[0];[1,0]x[2]", &[1, 3], "[2,0][2]", 2),
        ("(ρ) Λ^(1,2) S^2 SL_2 ⊕ S^2 SL_2 ⊗ SL_2", "A1xA1", "[2]x[0];[2]x[1]", &[1, 2], "[2][0]", 2),
    ];
    witness_rows(b, Section::Table3, rows);
}

fn appendix_a(b: &mut Builder) {
    let s = Section::AppendixAProducts;
    let rows: &[WitnessRow] = &[
        ("SL_2 ⊗ SL_2 ⊗ SL_3, Λ^6", "A1xA1xA2", "[1]x[1]x[1,0]", &[6], "[2][2][1,1]", 2),
        ("SL_2 ⊗ SL_2 ⊗ S^2 SL_2, Λ^5", "A1xA1xA1", "[1]x[1]x[2]", &[5], "[1][1][2]", 3),
        ("SL_2 ⊗ SL_2 ⊗ Λ^2 SL_4, Λ^3", "A1xA1xA3", "[1]x[1]x[0,1,0]", &[3], "[1][1][0,1,0]", 2),
        ("SL_2 ⊗ SL_2 ⊗ Sp_4, Λ^5", "A1xA1xC2", "[1]x[1]x[1,0]", &[5], "[1][1][1,0]", 3),
    ];
    witness_rows(b, s, rows);
    let (so3, w3) = so_natural(3);
    let (so6, w6) = so_natural(6);
    b.not_smf(s, "SL4xSO3", "SL_4 ⊗ SO_3", &format!("A3x{so3}"), &format!("[1,0,0]x{w3}"), None);
    b.not_smf(s, "SL3xSO6", "SL_3 ⊗ SO_6", &format!("A2x{so6}"), &format!("[1,0]x{w6}"), None);
    b.not_smf(s, "SO3xSO3", "SO_3 ⊗ SO_3", &format!("{so3}x{so3}"), &format!("{w3}x{w3}"), None);
    b.not_smf(s, "Sp4xSp4", "Sp_4 ⊗ Sp_4", "C2xC2", "[1,0]x[1,0]", None);

    let e = Section::AppendixAExterior;
    let ext = |system: &str, terms: &[&str]| {
        let st = sys(system);
        terms
            .iter()
            .map(|t| {
                let (m, w) = match t.find('[') {
                    Some(0) => (1, *t),
                    Some(i) => (t[..i].parse().expect("coefficient"), &t[i..]),
                    None => unreachable!(),
                };
                (weight(&st, w), m)
            })
            .collect::<Vec<_>>()
    };
    b.push(
        e,
        "Λ^3(SL_2⊗SL_2⊗SL_2)",
        "Λ^3 of C^2 ⊗ C^2 ⊗ C^2",
        "A1xA1xA1",
        "[1]x[1]x[1]",
        Expected::Exterior { k: 3, terms: ext("A1xA1xA1", &["[1][1][1]", "[1][1][3]", "[1][3][1]", "[3][1][1]"]) },
        false,
    );
    b.push(
        e,
        "Λ^2(SL_2⊗SL_2)",
        "Λ^2 of C^2 ⊗ C^2",
        "A1xA1",
        "[1]x[1]",
        Expected::Exterior { k: 2, terms: ext("A1xA1", &["[0][2]", "[2][0]"]) },
        false,
    );
    b.push(
        e,
        "Λ^2(SL_2⊗S^2SL_2)",
        "Λ^2 of C^2 ⊗ S^2C^2",
        "A1xA1",
        "[1]x[2]",
        Expected::Exterior { k: 2, terms: ext("A1xA1", &["[0][0]", "[0][4]", "[2][2]"]) },
        false,
    );
}

fn appendix_b(b: &mut Builder) {
    let rows: &[WitnessRow] = &[
        ("SL_2 ⊕ SL_2 ⊕ SL_2", "A1", "[1];[1];[1]", &[1, 1, 1], "[1]", 2),
        ("SL_2 ⊕ SL_2 ⊕ S^2 SL_2", "A1", "[1];[1];[2]", &[1, 1, 1], "[2]", 2),
        ("SL_2 ⊕ S^2 SL_2 ⊕ S^2 SL_2", "A1", "[1];[2];[2]", &[1, 1, 1], "[3]", 2),
        ("S^2 SL_2 ⊕ S^2 SL_2 ⊕ S^2 SL_2", "A1", "[2];[2];[2]", &[1, 1, 1], "[4]", 2),
        ("SL_2 ⊕ SL_2 ⊕ S^3 SL_2", "A1", "[1];[1];[3]", &[1, 1, 1], "[3]", 2),
        ("SL_2 ⊕ SL_2 ⊕ S^4 SL_2", "A1", "[1];[1];[4]", &[1, 1, 1], "[4]", 2),
    ];
    witness_rows(b, Section::AppendixBThreeSummand, rows);
    let rows: &[WitnessRow] = &[
        ("S^1 SL_2 ⊕ SL_2 ⊗ SL_2 ⊗ SL_2", "A1xA1xA1", "[1]x[0]x[0];[1]x[1]x[1]", &[1, 3], "[2][1][1]", 2),
        ("S^2 SL_2 ⊕ SL_2 ⊗ SL_2 ⊗ SL_2", "A1xA1xA1", "[2]x[0]x[0];[1]x[1]x[1]", &[1, 3], "[3][1][1]", 2),
        ("S^3 SL_2 ⊕ SL_2 ⊗ SL_2 ⊗ SL_2", "A1xA1xA1", "[3]x[0]x[0];[1]x[1]x[1]", &[1, 3], "[4][1][1]", 2),
        ("S^4 SL_2 ⊕ SL_2 ⊗ SL_2 ⊗ SL_2", "A1xA1xA1", "[4]x[0]x[0];[1]x[1]x[1]", &[1, 3], "[5][1][1]", 2),
        ("(X) SL_2 ⊗ SL_2 ⊕ SL_2 ⊗ SL_2", "A1xA1", "[1]x[1];[1]x[1]", &[1, 2], "[1][1]", 2),
        ("(W) SL_2 x SL_3 x SL_2 on C^2 ⊗ C^3 ⊕ C^3 ⊗ C^2", "A1xA2xA1", "[1]x[1,0]x[0];[0]x[1,0]x[1]", &[3, 3], "[1][1,1][1]", 2),
        ("SL_2 ⊕ SL_2 ⊗ SL_2 ⊕ SL_2", "A1xA1", "[1]x[0];[1]x[1];[0]x[1]", &[1, 2, 1], "[1][1]", 2),
        ("SL_2 ⊕ SL_2 ⊗ SL_2 ⊕ S^2 SL_2", "A1xA1", "[1]x[0];[1]x[1];[0]x[2]", &[1, 2, 1], "[1][2]", 2),
        ("S^2 SL_2 ⊕ SL_2 ⊗ SL_2 ⊕ S^2 SL_2", "A1xA1", "[2]x[0];[1]x[1];[0]x[2]", &[1, 2, 1], "[2][2]", 2),
    ];
    witness_rows(b, Section::AppendixB, rows);
}

fn torus(b: &mut Builder) {
    let s = Section::Torus;
    let a2 = sys("A2");
    b.push(
        s,
        "C3+S2C3 diagonal",
        "C^* x SL_3 on C^3 ⊕ S^2C^3, z ↦ (z, z)",
        "A2",
        "[1,0];[2,0]",
        Expected::Torus { embedding: TorusEmbedding::one_parameter(&[1, 1]), verdict: Verdict::Smf, character: None, weight: None, mult: None },
        false,
    );
    b.push(
        s,
        "C3+S2C3 (2,1)",
        "C^* x SL_3 on C^3 ⊕ S^2C^3, z ↦ (z^2, z)",
        "A2",
        "[1,0];[2,0]",
        Expected::Torus {
            embedding: TorusEmbedding::one_parameter(&[2, 1]),
            verdict: Verdict::NotSmf,
            character: Some(vec![6]),
            weight: Some(weight(&a2, "[0,0]")),
            mult: Some(2),
        },
        false,
    );
    b.push(
        s,
        "S2C3+C3* diagonal",
        "C^* x SL_3 on S^2C^3 ⊕ C^3*, z ↦ (z, z)",
        "A2",
        "[2,0];[0,1]",
        Expected::Torus {
            embedding: TorusEmbedding::one_parameter(&[1, 1]),
            verdict: Verdict::NotSmf,
            character: Some(vec![2]),
            weight: Some(weight(&a2, "[1,0]")),
            mult: Some(2),
        },
        false,
    );
}

/// Every theorem item and table row, instantiated at small ranks.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut b = Builder { entries: Vec::new() };
    theorem_simple(&mut b);
    theorem_irred(&mut b);
    theorem_reducible(&mut b);
    table1(&mut b);
    table2(&mut b);
    table3(&mut b);
    appendix_a(&mut b);
    appendix_b(&mut b);
    torus(&mut b);
    b.entries
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped")]
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryResult {
    pub label: String,
    pub section: Section,
    pub status: Status,
    pub verdict: Option<Verdict>,
    /// What was computed, e.g. `mult 2 of [1,0,1] at (2,3)`.
    pub computed: String,
    #[serde(skip)]
    pub seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogReport {
    pub results: Vec<EntryResult>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Skipped because a cap was exceeded (as opposed to gated as long).
    pub indeterminate: usize,
}

impl CatalogReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.skipped == 0
    }

    /// No mismatch and no cap-exceeded entry; long-gated skips are allowed.
    pub fn succeeded(&self) -> bool {
        self.failed == 0 && self.indeterminate == 0
    }
}

fn fmt_degree(r: &[u32]) -> String {
    let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn evaluate(entry: &CatalogEntry, caps: Caps, exec: Exec) -> Result<(bool, Option<Verdict>, String)> {
    let system = &entry.system;
    match &entry.expected {
        Expected::Smf => {
            let r = smf_check_saturated_with(&entry.group(), &entry.rep, caps, exec)?;
            let text = match &r.witness {
                None => format!("SMF up to degree {}", r.stats.max_degree),
                Some(w) => format!("{}{} at {}", w.mult, system.format_weight(&w.weight), fmt_degree(&w.multidegree)),
            };
            Ok((r.verdict == Verdict::Smf, Some(r.verdict), text))
        }
        Expected::NotSmf { multidegree: Some(r), weight: Some(w), mult: Some(m) } => {
            let c = multidegree_component(system, &entry.rep, r)?;
            let got = c.multiplicity(w);
            let verdict = if c.first_repeated().is_some() { Verdict::NotSmf } else { Verdict::Smf };
            Ok((got == *m, Some(verdict), format!("{got}{} at {}", system.format_weight(w), fmt_degree(r))))
        }
        Expected::NotSmf { .. } => {
            let r = smf_check_saturated_with(&entry.group(), &entry.rep, caps, exec)?;
            let text = match &r.witness {
                None => "no repeated summand".to_string(),
                Some(w) => format!("{}{} at {}", w.mult, system.format_weight(&w.weight), fmt_degree(&w.multidegree)),
            };
            Ok((r.verdict == Verdict::NotSmf, Some(r.verdict), text))
        }
        Expected::Plethysm(claims) => {
            let mut ok = true;
            let mut parts = Vec::new();
            for c in claims {
                let chi = VirtualCharacter::irreducible(&c.system, &c.v)?;
                let p = plethysm_with(&c.lambda, &chi, exec);
                let got = p.multiplicity(&c.weight);
                ok &= got == c.mult;
                parts.push(format!("S_{}({}) ∋ {got}{}", c.lambda, c.system.format_weight(&c.v), c.system.format_weight(&c.weight)));
            }
            Ok((ok, Some(Verdict::NotSmf), parts.join("; ")))
        }
        Expected::Exterior { k, terms } => {
            let chi = VirtualCharacter::irreducible(system, &entry.rep.summands[0])?;
            let got = exterior_power(*k, &chi);
            let want = VirtualCharacter::from_terms(system, terms.iter().cloned())?;
            Ok((got == want, None, got.render()))
        }
        Expected::Torus { embedding, verdict, character, weight, mult } => {
            let r = smf_check_torus_with(&entry.group(), &entry.rep, embedding, caps, exec)?;
            let mut ok = r.verdict == *verdict;
            let mut text = match &r.witness {
                None => "SMF".to_string(),
                Some(w) => format!(
                    "first repeat {}{} at torus {:?}",
                    w.mult,
                    system.format_weight(&w.weight),
                    w.torus.clone().unwrap_or_default()
                ),
            };
            if let (Some(chi), Some(w), Some(m)) = (character, weight, mult) {
                let group = torus_group_component(system, &entry.rep, embedding, chi)?;
                let got = group.multiplicity(w);
                ok &= got == *m;
                text.push_str(&format!("; torus {chi:?} group ∋ {got}{}", system.format_weight(w)));
            }
            Ok((ok, Some(r.verdict), text))
        }
    }
}

/// Runs the matching entries concurrently. Long entries are skipped unless
/// `include_long`; entries hitting a cap are skipped, never passed.
pub fn verify_catalog(filter: &str, include_long: bool, caps: Caps, exec: Exec) -> Result<CatalogReport> {
    let entries: Vec<CatalogEntry> = catalog().into_iter().filter(|e| e.matches(filter)).collect();
    if entries.is_empty() {
        return Err(Error::Precondition(format!("no catalog entry matches `{filter}`")));
    }
    let results: Vec<(EntryResult, bool)> = exec.map(&entries, |e| {
        let start = std::time::Instant::now();
        let mut capped = false;
        let (status, verdict, computed) = if e.long && !include_long {
            (Status::Skipped, None, "long entry, pass --include-long".to_string())
        } else {
            match evaluate(e, caps, exec) {
                Ok((true, v, text)) => (Status::Pass, v, text),
                Ok((false, v, text)) => (Status::Fail, v, text),
                Err(err @ Error::Indeterminate { .. }) => {
                    capped = true;
                    (Status::Skipped, None, err.to_string())
                }
                Err(err) => (Status::Fail, None, err.to_string()),
            }
        };
        let r = EntryResult { label: e.label.clone(), section: e.section, status, verdict, computed, seconds: start.elapsed().as_secs_f64() };
        (r, capped)
    });
    let indeterminate = results.iter().filter(|(_, c)| *c).count();
    let results: Vec<EntryResult> = results.into_iter().map(|(r, _)| r).collect();
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    Ok(CatalogReport { passed: count(Status::Pass), failed: count(Status::Fail), skipped: count(Status::Skipped), indeterminate, results })
}
