use smfkit::exec::Exec;
use smfkit::smf::{catalog, verify_catalog, Caps, Section, Status};

fn run(filter: &str) {
    let report = verify_catalog(filter, true, Caps::default(), Exec::Parallel).unwrap();
    for r in &report.results {
        println!("{:<8} {:<24} {:<40} {} ({:.2}s)", r.status, r.section, r.label, r.computed, r.seconds);
    }
    let bad: Vec<_> = report.results.iter().filter(|r| r.status != Status::Pass).map(|r| r.label.clone()).collect();
    assert!(bad.is_empty(), "{filter}: {bad:?}");
}

#[test]
fn simple_group_modules_are_smf() {
    run("theorem-simple");
}

#[test]
fn irreducible_product_modules_are_smf() {
    run("theorem-irred");
}

#[test]
fn reducible_diagram_modules_are_smf() {
    run("theorem-reducible");
}

#[test]
fn plethysm_multiplicities_exceed_one() {
    run("table1");
}

#[test]
fn two_summand_witnesses_hold() {
    run("table2");
}

#[test]
fn product_summand_witnesses_hold() {
    run("table3");
}

#[test]
fn product_and_exterior_entries_hold() {
    run("appendixA");
}

#[test]
fn three_summand_entries_hold() {
    run("appendixB");
}

#[test]
fn torus_entries() {
    run("torus");
}

#[test]
fn catalog_covers_every_section() {
    let entries = catalog();
    for s in Section::ALL {
        assert!(entries.iter().any(|e| e.section == s), "{s}");
    }
    assert_eq!(entries.iter().filter(|e| e.section == Section::Table1).count(), 15);
    assert_eq!(entries.iter().filter(|e| e.section == Section::Table2).count(), 23);
}

#[test]
fn long_entries_are_skipped_by_default() {
    let report = verify_catalog("table1", false, Caps::default(), Exec::Sequential).unwrap();
    let skipped: Vec<_> = report.results.iter().filter(|r| r.status == Status::Skipped).map(|r| r.label.as_str()).collect();
    assert_eq!(skipped, ["(D3)", "(E6)", "(E7)"]);
    assert!(!report.all_passed());
}

#[test]
fn unknown_filter_is_an_error() {
    assert!(verify_catalog("no-such-section", false, Caps::default(), Exec::Sequential).is_err());
}
