mod common;

use common::{rep, saturated_oracle, semisimple_oracle, sys, CLIFFORD_CASES};
use smfkit::clifford::{clifford_check, clifford_invariants, is_invariant, realize, realize_sum, saturated_torus, GenKind};
use smfkit::rootdata::RootSystem;
use smfkit::smf::RepSpec;
use smfkit::{Error, Mult};

#[test]
fn natural_sl2_generators() {
    let m = realize(&sys("A1"), &[1]).unwrap();
    assert_eq!(m.dim, 2);
    let e = m.generator(0, 0, GenKind::E);
    let h = m.generator(0, 0, GenKind::H);
    assert_eq!(e.entries.len(), 1);
    assert_eq!(h.diagonal().unwrap().iter().map(|x| x.to_integer().to_string()).collect::<Vec<_>>(), ["1", "-1"]);
}

#[test]
fn realizations_satisfy_relations_and_match_weight_systems() {
    let modules = [
        ("A1", "[1]"),
        ("A1", "[4]"),
        ("A2", "[2,0]"),
        ("A2", "[0,2]"),
        ("A2", "[1,1]"),
        ("A3", "[0,1,0]"),
        ("A3", "[0,0,1]"),
        ("B2", "[1,0]"),
        ("B2", "[0,2]"),
        ("C2", "[2,0]"),
        ("C3", "[1,0,0]"),
        ("D4", "[1,0,0,0]"),
        ("A1xA1", "[1]x[1]"),
        ("A1xA2", "[2]x[0,1]"),
    ];
    for (st, w) in modules {
        let s = sys(st);
        let lambda = s.parse_weight(w).unwrap();
        let m = match realize(&s, &lambda) {
            Ok(m) => m,
            Err(Error::Unsupported(_)) if (st, w) == ("A2", "[1,1]") => continue,
            Err(e) => panic!("{st} {w}: {e}"),
        };
        m.check_relations().unwrap();
        let mut got = m.weights.clone();
        got.sort();
        let mut want: Vec<_> = s.weight_system(&lambda).unwrap().all.iter().flat_map(|(w, k)| std::iter::repeat_n(w.clone(), *k as usize)).collect();
        want.sort();
        assert_eq!(got, want, "{st} {w}");
    }
}

#[test]
fn unsupported_models_are_reported() {
    for (st, w) in [("B2", "[0,1]"), ("C2", "[0,1]"), ("G2", "[1,0]"), ("A4", "[0,0,1,1]")] {
        let s = sys(st);
        assert!(matches!(realize(&s, &s.parse_weight(w).unwrap()), Err(Error::Unsupported(_))), "{st} {w}");
    }
}

#[test]
fn trivial_group_on_a_line() {
    let s = RootSystem::trivial();
    let v = RepSpec::new(&s, vec![vec![]]).unwrap();
    let m = realize_sum(&s, &v).unwrap();
    assert_eq!(clifford_invariants(&m, None).unwrap().len(), 4);
}

#[test]
fn torus_with_distinct_characters_is_commutative() {
    let s = RootSystem::trivial();
    let v = RepSpec::new(&s, vec![vec![], vec![]]).unwrap();
    let r = clifford_check(&s, &v, Some(&saturated_torus(2))).unwrap();
    assert!(r.commutative);
    assert_eq!(r.invariant_dim, 4);
}

#[test]
fn sl2_without_torus() {
    let s = sys("A1");
    let r = clifford_check(&s, &rep(&s, "[1]"), None).unwrap();
    assert_eq!(r.invariant_dim, 5);
    assert!(!r.commutative);
    let v = rep(&s, "[1];[1]");
    let r = clifford_check(&s, &v, None).unwrap();
    assert_eq!(r.invariant_dim as Mult, semisimple_oracle(&s, &v));
    assert!(!r.commutative);
}

#[test]
fn invariant_dimension_matches_characters_without_torus() {
    for (st, v) in CLIFFORD_CASES.iter().filter(|(_, v)| !v.contains(';')) {
        let s = sys(st);
        let v = rep(&s, v);
        let m = realize_sum(&s, &v).unwrap();
        assert_eq!(clifford_invariants(&m, None).unwrap().len() as Mult, semisimple_oracle(&s, &v), "{st}");
    }
}

#[test]
fn cross_oracle_agreement_with_smf_check() {
    common::clifford_cross_oracle().unwrap();
}

#[test]
fn invariants_form_a_subalgebra() {
    let s = sys("A1");
    let v = rep(&s, "[1];[1]");
    let m = realize_sum(&s, &v).unwrap();
    let t = saturated_torus(2);
    let basis = clifford_invariants(&m, Some(&t)).unwrap();
    for a in &basis {
        assert!(is_invariant(&m, Some(&t), a));
        for b in &basis {
            assert!(is_invariant(&m, Some(&t), &a.mul(b)));
        }
    }
}

#[test]
fn dualizing_a_summand_keeps_invariant_dimension() {
    for (st, a, b) in [("A2", "[1,0];[1,0]", "[1,0];[0,1]"), ("A1xA2", "[1]x[0,0];[0]x[1,0]", "[1]x[0,0];[0]x[0,1]"), ("A3", "[1,0,0]", "[0,0,1]")] {
        let s = sys(st);
        let t = saturated_torus(rep(&s, a).len());
        let da = clifford_check(&s, &rep(&s, a), Some(&t)).unwrap().invariant_dim;
        let db = clifford_check(&s, &rep(&s, b), Some(&t)).unwrap().invariant_dim;
        assert_eq!(da, db, "{st}");
    }
}

#[test]
fn so3_pair_is_commutative_with_both_gradings() {
    let s = sys("A1");
    let v = rep(&s, "[2];[2]");
    let r = clifford_check(&s, &v, Some(&saturated_torus(2))).unwrap();
    assert!(r.commutative);
    assert_eq!(r.invariant_dim as Mult, saturated_oracle(&s, &v));
}

#[test]
fn oversized_modules_are_rejected() {
    let s = sys("A3");
    let v = rep(&s, "[1,0,0];[1,0,0];[1,0,0]");
    let m = realize_sum(&s, &v).unwrap();
    assert!(matches!(clifford_invariants(&m, None), Err(Error::Precondition(_))));
}
