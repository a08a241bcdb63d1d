//! Persistence of the value cache across loads.

use hurwitz::engine::{hurwitz_cj, HurwitzCache};
use hurwitz::{BigRat, HurwitzError, Partition};

#[test]
fn values_survive_a_save_and_reload() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nested").join("cache.jsonl");

    let cache = HurwitzCache::load(&path).unwrap();
    assert!(cache.missing_on_load());
    assert!(cache.is_empty());
    let mu: Partition = "2,1^2".parse().unwrap();
    let v = hurwitz_cj(1, &mu, &cache).unwrap();
    assert_eq!(v, BigRat::from_integer(5460.into()));
    assert!(cache.is_dirty());
    cache.flush().unwrap();
    assert!(!cache.is_dirty());

    let again = HurwitzCache::load(&path).unwrap();
    assert!(!again.missing_on_load());
    assert_eq!(again.len(), cache.len());
    assert_eq!(again.get(1, &mu), Some(v));
    assert_eq!(
        again.get(0, &Partition::row(2)),
        Some(BigRat::new(1.into(), 2.into()))
    );

    // saving an unchanged cache reproduces the same bytes
    let before = std::fs::read(&path).unwrap();
    again.save(&path).unwrap();
    assert_eq!(std::fs::read(&path).unwrap(), before);
}

#[test]
fn malformed_lines_are_reported_with_their_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    std::fs::write(
        &path,
        "{\"g\":0,\"mu\":[1],\"num\":\"1\",\"den\":\"1\"}\n{\"g\":0,\"mu\":[2],\"num\":\"1\",\"den\":\"0\"}\n",
    )
    .unwrap();
    match HurwitzCache::load(&path) {
        Err(HurwitzError::MalformedCache { line, .. }) => assert_eq!(line, 2),
        other => panic!("expected a malformed-cache error, got {other:?}"),
    }

    std::fs::write(&path, "not json\n").unwrap();
    assert!(matches!(
        HurwitzCache::load(&path),
        Err(HurwitzError::MalformedCache { line: 1, .. })
    ));
}

#[test]
fn conflicting_records_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    std::fs::write(
        &path,
        "{\"g\":0,\"mu\":[3],\"num\":\"1\",\"den\":\"1\"}\n{\"g\":0,\"mu\":[3],\"num\":\"2\",\"den\":\"1\"}\n",
    )
    .unwrap();
    assert!(HurwitzCache::load(&path).is_err());
}
