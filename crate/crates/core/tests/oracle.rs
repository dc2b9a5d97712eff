use freeabel::audit::oracle_audit;

#[test]
fn twenty_four_representations_per_quiver() {
    let report = oracle_audit(11, 24).unwrap();
    assert_eq!(report.instances, 48);
    for (name, (pass, total)) in &report.checks {
        println!("{name}: {pass}/{total}");
    }
    println!("{:?}", report.tallies);
    assert!(report.passed(), "{:#?}", report.failures);
}
