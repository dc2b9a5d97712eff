use freeabel::audit::computability_audit;

#[test]
fn two_hundred_random_instances() {
    let report = computability_audit(2024, 100).unwrap();
    assert_eq!(report.instances, 200);
    for (name, (pass, total)) in &report.checks {
        println!("{name}: {pass}/{total}");
    }
    println!("{:?}", report.tallies);
    assert!(report.passed(), "{:#?}", report.failures);
}
