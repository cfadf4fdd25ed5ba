mod common;

use common::{rep, sys};
use smfkit::chars::{exterior_power, VirtualCharacter};
use smfkit::rootdata::RootSystem;
use smfkit::smf::{
    catalog, diagram, edge_removals, is_indecomposable, multidegree_component, normalize_geometric, smf_check_irreducible,
    smf_check_saturated, smf_check_torus, torus_group_component, Caps, Expected, GroupSpec, RepSpec, Section, TorusEmbedding,
    Verdict,
};
use smfkit::Error;


fn check(system: &RootSystem, r: &RepSpec) -> Verdict {
    smf_check_saturated(&GroupSpec::saturated(system, r), r, Caps::default()).unwrap().verdict
}

#[test]
fn saturated_examples() {
    let g = GroupSpec::parse("C*xA1").unwrap();
    let v = rep(&g.semisimple, "[3]");
    assert_eq!(smf_check_saturated(&g, &v, Caps::default()).unwrap().verdict, Verdict::Smf);

    let g = GroupSpec::parse("C*xC*xA3").unwrap();
    let v = rep(&g.semisimple, "[1,0,0] ; [0,1,0]");
    let report = smf_check_saturated(&g, &v, Caps::default()).unwrap();
    let w = report.witness.unwrap();
    assert_eq!(report.verdict, Verdict::NotSmf);
    assert_eq!(w.multidegree, [2, 3]);
    assert_eq!(g.semisimple.format_weight(&w.weight), "[1,0,1]");
    assert_eq!(w.mult, 2);

    let g = GroupSpec::parse("C*xC*xA1xA1xA1").unwrap();
    let v = rep(&g.semisimple, "[1]x[0]x[0];[1]x[1]x[1]");
    let w = smf_check_saturated(&g, &v, Caps::default()).unwrap().witness.unwrap();
    assert_eq!(w.multidegree, [1, 3]);
    assert_eq!(g.semisimple.format_weight(&w.weight), "[2][1][1]");
    assert_eq!(w.mult, 2);
}

#[test]
fn saturated_check_requires_one_torus_per_summand() {
    let g = GroupSpec::parse("C*xA1").unwrap();
    let v = rep(&g.semisimple, "[1];[1]");
    assert!(matches!(smf_check_saturated(&g, &v, Caps::default()), Err(Error::Precondition(_))));
}

#[test]
fn irreducible_examples() {
    let g = GroupSpec::parse("C*xA2xA2").unwrap();
    let r = smf_check_irreducible(&g, &g.semisimple.parse_weight("[1,0]x[1,0]").unwrap(), Caps::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Smf);

    let s = sys("A1xA1xA2");
    let v = rep(&s, "[1]x[1]x[1,0]");
    let c = multidegree_component(&s, &v, &[6]).unwrap();
    assert_eq!(c.multiplicity(&s.parse_weight("[2][2][1,1]").unwrap()), 2);
    let g = GroupSpec::parse("C*xA1xA1xA2").unwrap();
    assert_eq!(smf_check_irreducible(&g, &v.summands[0], Caps::default()).unwrap().verdict, Verdict::NotSmf);

    let g = GroupSpec::parse("C*xC2xC2").unwrap();
    let r = smf_check_irreducible(&g, &g.semisimple.parse_weight("[1,0]x[1,0]").unwrap(), Caps::default()).unwrap();
    assert_eq!(r.verdict, Verdict::NotSmf);
    assert_eq!(r.witness.unwrap().multidegree, [4]);
}

#[test]
fn torus_examples() {
    let s = sys("A2");
    let v = rep(&s, "[1,0];[2,0]");
    let g = GroupSpec::new(1, s.clone());
    let diag = smf_check_torus(&g, &v, &TorusEmbedding::one_parameter(&[1, 1]), Caps::default()).unwrap();
    assert_eq!(diag.verdict, Verdict::Smf);

    let t = TorusEmbedding::parse("2,1").unwrap();
    assert_eq!(t.character(&[3, 0]), [6]);
    assert_eq!(t.character(&[0, 6]), [6]);
    assert_eq!(smf_check_torus(&g, &v, &t, Caps::default()).unwrap().verdict, Verdict::NotSmf);
    let z6 = torus_group_component(&s, &v, &t, &[6]).unwrap();
    assert_eq!(z6.multiplicity(&[0, 0]), 2);

    let v2 = rep(&s, "[2,0];[0,1]");
    let r = smf_check_torus(&g, &v2, &TorusEmbedding::one_parameter(&[1, 1]), Caps::default()).unwrap();
    let w = r.witness.unwrap();
    assert_eq!(w.torus, Some(vec![2]));
    assert_eq!(w.weight, [1, 0]);
    assert_eq!(w.mult, 2);
}

#[test]
fn full_torus_recovers_saturated_verdict() {
    for (s, v) in [("A1", "[1];[2]"), ("A3", "[1,0,0];[0,1,0]"), ("A1xA1", "[1]x[0];[1]x[1]")] {
        let s = sys(s);
        let v = rep(&s, v);
        let t = TorusEmbedding::parse("1,0;0,1").unwrap();
        let torus = smf_check_torus(&GroupSpec::new(2, s.clone()), &v, &t, Caps::default()).unwrap().verdict;
        assert_eq!(torus, check(&s, &v));
    }
}

#[test]
fn tiny_caps_are_indeterminate() {
    let s = sys("A5");
    let v = rep(&s, "[0,0,1,0,0]");
    let caps = Caps::parse("terms=3,secs=60").unwrap();
    let err = smf_check_saturated(&GroupSpec::saturated(&s, &v), &v, caps).unwrap_err();
    assert!(matches!(err, Error::Indeterminate { .. }));
    assert!(Caps::parse("terms=x").is_err());
}

#[test]
fn diagram_examples() {
    let s = sys("A2xA1");
    let eta = rep(&s, "[1,0]x[0];[1,0]x[1]");
    let d = diagram(&s, &eta);
    assert_eq!(d.edges, [(0, 0), (0, 1), (1, 1)]);
    assert!(is_indecomposable(&d));

    let decoupled = rep(&s, "[1,0]x[0];[0,0]x[1]");
    assert!(!is_indecomposable(&diagram(&s, &decoupled)));

    let product = rep(&sys("A1xA2"), "[1]x[1,0]");
    let removals = edge_removals(&sys("A1xA2"), &product);
    let g1 = removals.iter().find(|e| e.edge == (1, 0)).unwrap();
    assert_eq!(g1.system, sys("A1"));
    assert_eq!(g1.rep.summands, [vec![1]]);
}

#[test]
fn normalize_examples() {
    let a2 = sys("A2");
    assert_eq!(normalize_geometric(&a2, &rep(&a2, "[0,1]")).summands, [vec![1, 0]]);

    let s = sys("A2xA1");
    let a = rep(&s, "[1,0]x[0];[2,0]x[1]");
    let b = rep(&s, "[1,0]x[0];[0,2]x[1]");
    let c = rep(&s, "[0,2]x[1];[1,0]x[0]");
    let n = normalize_geometric(&s, &a);
    assert_eq!(n, normalize_geometric(&s, &b));
    assert_eq!(n, normalize_geometric(&s, &c));
}

#[test]
fn spec_grammar_round_trips_on_catalog() {
    for e in catalog() {
        let g = e.group();
        assert_eq!(GroupSpec::parse(&g.to_string()).unwrap(), g, "{}", e.label);
        assert_eq!(RepSpec::parse(&e.system, &e.rep.render(&e.system)).unwrap(), e.rep, "{}", e.label);
    }
}

#[test]
fn duality_of_a_summand_preserves_verdict() {
    common::duality_invariance(52, 30).unwrap();
}

#[test]
fn subgraph_monotonicity() {
    common::subgraph_monotonicity().unwrap();
}

#[test]
fn doubling_a_module_with_reducible_exterior_powers_is_not_smf() {
    let mut tested = 0;
    for (st, w) in [("A1", "[2]"), ("A1", "[3]"), ("A2", "[2,0]"), ("A2", "[1,1]"), ("A3", "[0,1,0]"), ("C2", "[0,1]"), ("C2", "[1,0]"), ("A1xA1", "[1]x[1]"), ("A1xA2", "[1]x[1,0]"), ("G2", "[1,0]"), ("B2", "[1,0]"), ("A1", "[1]"), ("A3", "[1,0,0]"), ("A1", "[4]"), ("A3", "[2,0,0]"), ("A4", "[0,1,0,0]"), ("A1xA1", "[2]x[1]"), ("D4", "[1,0,0,0]"), ("B3", "[0,0,1]")] {
        let s = sys(st);
        let v = rep(&s, w);
        let chi = VirtualCharacter::irreducible(&s, &v.summands[0]).unwrap();
        let dim = chi.dim() as usize;
        assert!(dim <= 10);
        let reducible = (0..=dim).any(|k| exterior_power(k, &chi).len() > 1);
        let doubled = RepSpec::new(&s, vec![v.summands[0].clone(), v.summands[0].clone()]).unwrap();
        if reducible {
            assert_eq!(check(&s, &doubled), Verdict::NotSmf, "{st} {w}");
            tested += 1;
        } else {
            assert_eq!(check(&s, &doubled), Verdict::Smf, "{st} {w}");
        }
    }
    assert!(tested >= 10);
}

#[test]
fn factors_of_smf_products_are_smf() {
    for e in catalog().into_iter().filter(|e| e.section == Section::TheoremIrred) {
        for (f, t) in e.system.factors().iter().enumerate() {
            let s = RootSystem::new(vec![*t]);
            let part = e.system.part(&e.rep.summands[0], f).to_vec();
            let v = RepSpec::new(&s, vec![part]).unwrap();
            assert_eq!(check(&s, &v), Verdict::Smf, "{} factor {f}", e.label);
        }
    }
}

#[test]
fn witnesses_recompute_in_isolation() {
    let mut seen = 0;
    for e in catalog() {
        if !matches!(e.expected, Expected::NotSmf { .. }) {
            continue;
        }
        let report = smf_check_saturated(&e.group(), &e.rep, Caps::default()).unwrap();
        assert_eq!(report.verdict, Verdict::NotSmf, "{}", e.label);
        let w = report.witness.unwrap();
        let c = multidegree_component(&e.system, &e.rep, &w.multidegree).unwrap();
        assert_eq!(c.multiplicity(&w.weight), w.mult, "{}", e.label);
        assert!(w.mult >= 2);
        assert_eq!(c.first_repeated().map(|(x, _)| x.clone()), Some(w.weight.clone()));
        seen += 1;
    }
    assert!(seen > 50);
}
