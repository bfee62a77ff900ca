//! Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

use burnside::acceptance::{run_criterion, run_suite, Options, Suite};

#[test]
fn acceptance() {
    let outcomes = run_suite(Suite::All, &Options { seed: 0, tamper: false });
    for o in &outcomes {
        println!("{}  [{:.2}s]", o.line(), o.elapsed.as_secs_f64());
    }
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed).map(|o| o.name).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn tampered_table_fails_the_criteria_that_read_it() {
    let opts = Options { seed: 0, tamper: true };
    for id in [1, 14] {
        let o = run_criterion(id, &opts);
        println!("{}", o.line());
        assert!(!o.passed, "criterion {id} passed on a tampered table");
    }
    assert!(run_criterion(2, &opts).passed);
}

#[test]
fn outcomes_are_deterministic_per_seed() {
    let opts = Options { seed: 7, tamper: false };
    let a: Vec<String> = run_suite(Suite::Properties, &opts).iter().map(|o| o.line()).collect();
    let b: Vec<String> = run_suite(Suite::Properties, &opts).iter().map(|o| o.line()).collect();
    assert_eq!(a, b);
}
