use bstar_core::verify::{
    builtin_corpus, load_corpus_dir, run_suite, write_builtin_corpus, SuiteOptions,
};
use bstar_core::{FieldSpec, Outcome};

#[test]
fn builtin_suite_passes_over_both_fields() {
    let entries = builtin_corpus()
        .unwrap()
        .into_iter()
        .map(|(n, c)| (n, Ok(c)))
        .collect();
    let fields = [FieldSpec::Rationals, FieldSpec::prime(2).unwrap()];
    let report = run_suite(entries, &fields, SuiteOptions::default());
    let failures: Vec<String> = report
        .entries
        .iter()
        .flat_map(|e| {
            e.checks.iter().flat_map(move |(f, m)| {
                m.iter()
                    .filter(|(_, o)| o.is_fail())
                    .map(move |(k, o)| format!("{} {f} {k}: {o}", e.name))
            })
        })
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
    assert!(report.all_pass);
    // Every check applies somewhere.
    for (name, tally) in &report.summary {
        assert!(tally.pass > 0, "{name} never applied");
    }
}

#[test]
fn written_corpus_reloads() {
    let dir = std::env::temp_dir().join(format!("bstar-corpus-{}", std::process::id()));
    let paths = write_builtin_corpus(&dir).unwrap();
    assert_eq!(paths.len(), builtin_corpus().unwrap().len());
    let loaded = load_corpus_dir(&dir).unwrap();
    assert_eq!(loaded.len(), paths.len());
    assert!(loaded.iter().all(|(_, c)| c.is_ok()));
    let report = run_suite(
        loaded,
        &[FieldSpec::prime(3).unwrap()],
        SuiteOptions::default(),
    );
    assert!(report.all_pass);
    std::fs::remove_dir_all(&dir).unwrap();
    assert!(report
        .global
        .values()
        .all(|m| m.values().all(Outcome::is_pass)));
}
