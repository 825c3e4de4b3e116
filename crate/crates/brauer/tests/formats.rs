use brauer::corpus::{corpus, CorpusSpec};
use brauer::fixtures;
use brauer::format::{parse_tree, tree_digest, tree_from_value, tree_to_value, FormatError};

#[test]
fn fixtures_parse() {
    let p2 = fixtures::p2();
    assert_eq!(p2.edge_count(), 2);
    let l5 = fixtures::l5();
    let mut d: Vec<u32> = l5.vertices().map(|v| l5.distance(v)).collect();
    d.sort();
    assert_eq!(d, [0, 1, 2, 3, 4, 5]);
    assert_eq!(fixtures::six().edge_count(), 6);
}

#[test]
fn emit_then_parse_is_rotation_exact() {
    let trees = corpus(&CorpusSpec { seed: 11, count: 100, ..CorpusSpec::default() });
    for t in trees {
        let again = tree_from_value(&tree_to_value(&t)).unwrap();
        assert_eq!(again.to_raw(), t.to_raw());
        assert_eq!(tree_digest(&again), tree_digest(&t));
    }
}

#[test]
fn violations_are_all_reported() {
    let text = r#"{"multiplicity": 0, "exceptional": "x",
        "rotations": {"v0": ["a", "a"], "v1": ["b"], "v2": []}}"#;
    let FormatError::Schema(issues) = parse_tree(text).unwrap_err() else { panic!("expected schema error") };
    let pointers: Vec<&str> = issues.iter().map(|i| i.pointer.as_str()).collect();
    assert!(pointers.contains(&"/multiplicity"));
    assert!(pointers.contains(&"/exceptional"));
    assert!(pointers.contains(&"/rotations/v0/1"));
    assert!(pointers.contains(&"/rotations/v1/0"));
    assert!(pointers.contains(&"/rotations/v2"));
}

#[test]
fn cycle_is_rejected() {
    let text = r#"{"multiplicity": 1, "exceptional": "v0",
        "rotations": {"v0": ["a", "c"], "v1": ["a", "b"], "v2": ["b", "c"]}}"#;
    let err = parse_tree(text).unwrap_err().to_string();
    assert!(err.contains("not acyclic"), "{err}");
}
