use schinzel::json::{GroupJson, TupleJson};
use schinzel::search::{classification, search_schinzel, verify_normal_infinity_conjecture, SearchConfig};
use schinzel_core::dihedral::{cheby_tuple, dihedral_group};

fn config(max: usize, v: usize) -> SearchConfig {
    SearchConfig::new(max, v)
}

#[test]
fn reports_replay_from_their_tuples() {
    let r = search_schinzel(&config(6, 2)).unwrap();
    assert!(!r.candidates.is_empty());
    for c in &r.candidates {
        assert_eq!(&c.replay(2, 100_000).unwrap(), c);
    }
}

#[test]
fn dihedral_verdicts_by_degree() {
    let r = search_schinzel(&config(8, 2)).unwrap();
    let d4 = GroupJson::from_group(&dihedral_group(4).unwrap()).to_group(100).unwrap();
    for c in &r.candidates {
        let g = c.group.as_ref().unwrap().to_group(100_000).unwrap();
        if c.degree == 4 {
            assert_eq!(g, d4);
            assert!(c.is_newly_reducible());
        } else {
            assert_eq!(c.verdicts.newly_reducible.as_deref(), Some("reducible_composite"));
            assert!(c.verdicts.witness_intermediate.is_some());
        }
    }
    assert!(r.candidates.iter().any(|c| c.degree == 6));
    assert!(r.candidates.iter().any(|c| c.degree == 8));
}

#[test]
fn cache_reuse_gives_the_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let mut c = config(6, 2);
    c.cache_dir = Some(dir.path().to_path_buf());
    c.jobs = 4;
    let first = search_schinzel(&c).unwrap();
    let second = search_schinzel(&c).unwrap();
    assert_eq!(first, second);
    assert_eq!(first, search_schinzel(&config(6, 2)).unwrap());
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}

#[test]
fn report_file_matches() {
    let dir = tempfile::tempdir().unwrap();
    let mut c = config(4, 2);
    c.report_path = Some(dir.path().join("r.json"));
    let r = search_schinzel(&c).unwrap();
    let back: schinzel::search::SearchReport =
        serde_json::from_slice(&std::fs::read(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(back, r);
}

#[test]
fn degenerate_configurations() {
    for (max, v) in [(2, 2), (4, 3)] {
        let r = verify_normal_infinity_conjecture(&config(max, v)).unwrap();
        assert!(r.newly_reducible.is_empty());
        assert!(r.criterion_survivors.is_empty());
        assert_eq!(r.unexplained, 0);
    }
    let mut bad = config(4, 2);
    bad.jobs = 0;
    assert_eq!(search_schinzel(&bad).unwrap_err().exit_code(), 1);
}

#[test]
fn classification_examples() {
    let four = classification(4, 2).unwrap();
    assert!(four.dihedral > 0 && four.cyclic > 0);
    assert!(four.exceptions.is_empty());
    let five = classification(5, 2).unwrap();
    assert_eq!(five.pairable_dihedral, 0);
    assert!(five.note.is_some());
    let six = classification(6, 2).unwrap();
    assert!(six.exceptions.is_empty());
    assert_eq!(six.index_mismatches, 0);
}

#[test]
fn tuple_json_round_trip() {
    let t = cheby_tuple(8).unwrap();
    let j = TupleJson::from_tuple(&t);
    let s = serde_json::to_string(&j).unwrap();
    assert!(s.contains("\"infinity_slot\":2"));
    let back: TupleJson = serde_json::from_str(&s).unwrap();
    assert_eq!(back.to_tuple().unwrap(), t);
}
