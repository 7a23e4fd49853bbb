use cliffpar_core::parallel::ds_check;
use cliffpar_core::text::parse_point;
use cliffpar_core::{Quaternion, QuaternionAlgebra, Rational, TableAlgebra};
use cliffpar_harness::sample::suite_rng;
use cliffpar_harness::suites::ds_checks;
use cliffpar_harness::{emit_report, parse_config, parse_machine, run_suites, Format, Verdict};

const SMALL: &str = "\
seed = 7
checks = ds, conjugacy, thm-main, kernel
[ds]
samples = 40
[conjugacy]
samples = 20
non_conjugate = 20
[thm-main]
samples = 5
scalars = 2
[kernel]
samples = 20
";

#[test]
fn config_errors_name_the_problem() {
    let e = parse_config("kind = caseA\na = 1\nb = 1\n").unwrap_err();
    assert!(e.mentions("not a division algebra"), "{e}");
    let e = parse_config("[tagging]\n4 = left\n").unwrap_err();
    assert!(e.mentions("key not squarefree"), "{e}");
    assert!(e.to_string().starts_with("line 2:"));
}

#[test]
fn machine_reports_are_deterministic() {
    let cfg = parse_config(SMALL).unwrap();
    let a = emit_report(&run_suites(&cfg), Format::Machine);
    let b = emit_report(&run_suites(&cfg), Format::Machine);
    assert_eq!(a, b);
    let report = parse_machine(&a).unwrap();
    assert_eq!(report.overall, Verdict::Pass);
    assert_eq!(emit_report(&report, Format::Machine), a);
    let other = parse_config(&SMALL.replace("seed = 7", "seed = 8")).unwrap();
    assert_ne!(emit_report(&run_suites(&other), Format::Machine), a);
}

#[test]
fn only_selected_suites_run() {
    let cfg = parse_config("checks = ds\n[ds]\nsamples = 5\n").unwrap();
    let report = run_suites(&cfg);
    assert!(report.checks.iter().all(|c| c.check.starts_with("ds/")));
    assert_eq!(report.check("ds/random-triangles").unwrap().samples, 5);
}

#[test]
fn corrupted_table_fails_ds_and_counterexample_replays() {
    let h = QuaternionAlgebra::hamilton();
    let mut t = TableAlgebra::of(&h);
    // j·i = k instead of −k
    t.set_product(2, 1, Quaternion::<Rational>::from_ints([0, 0, 0, 1]));
    let records = ds_checks(&t, &mut suite_rng(42, "ds"), 200, 5);
    let random = records.iter().find(|r| r.check == "ds/random-triangles").unwrap();
    assert_eq!(random.verdict, Verdict::Fail);
    let cex = random.counterexample.as_deref().unwrap();
    let p: Vec<_> = cex.split(" | ").map(|s| parse_point(&t, s).unwrap()).collect();
    assert_eq!(p.len(), 3);
    assert!(ds_check(&t, &p[0], &p[1], &p[2]).unwrap().is_violation());
    assert!(ds_check(&h, &p[0], &p[1], &p[2]).map(|o| !o.is_violation()).unwrap());

    let clean = ds_checks(&TableAlgebra::of(&h), &mut suite_rng(42, "ds"), 200, 5);
    assert!(clean.iter().all(|r| r.verdict == Verdict::Pass));
}
