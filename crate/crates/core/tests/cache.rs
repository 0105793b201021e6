use skeinlab::cache::{self, LoadOutcome};
use skeinlab::cli::run_with;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(args.iter().copied(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

const QUERIES: [&[&str]; 4] = [
    &["skeinlab", "mul", "d", "a", "b"],
    &["skeinlab", "antipode", "beta(+-;+-)"],
    &["skeinlab", "functional", "t", "a*d - b*c"],
    &["skeinlab", "reduce", "tangle(3){x0;x1} west=-+- east=+-+"],
];

#[test]
fn cached_and_uncached_results_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    let p = path.to_str().unwrap();
    for q in QUERIES {
        cache::clear_memory();
        let (code, plain, _) = run(q);
        assert_eq!(code, 0);
        let mut args = q.to_vec();
        args.extend(["--cache", p]);
        let (code, first, _) = run(&args);
        assert_eq!(code, 0);
        cache::clear_memory();
        let (code, second, err) = run(&args);
        assert_eq!(code, 0);
        assert_eq!(plain, first);
        assert_eq!(plain, second);
        assert!(err.is_empty(), "{err}");
    }
    cache::clear_memory();
    match cache::load(&path).unwrap() {
        LoadOutcome::Loaded(n) => assert!(n > 0),
        other => panic!("{other:?}"),
    }
}

#[test]
fn stale_cache_is_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("stale.jsonl");
    std::fs::write(
        &path,
        "{\"format\":\"skeinlab-cache\",\"version\":1,\"fingerprint\":\"other\"}\n\
         {\"key\":\"tangle(2){} west=-+ east=++\",\"value\":\"17\"}\n",
    )
    .unwrap();
    assert_eq!(cache::load(&path).unwrap(), LoadOutcome::Stale);
    let (code, out, err) = run(&["skeinlab", "--cache", path.to_str().unwrap(), "mul", "c", "a"]);
    assert_eq!(code, 0);
    assert!(err.contains("note"), "{err}");
    assert_eq!(out.trim(), "(s^4) * beta(+-;++)");
    let header = std::fs::read_to_string(&path).unwrap();
    assert!(header.contains(&cache::fingerprint()));
}

#[test]
fn corrupt_cache_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.jsonl");
    std::fs::write(&path, "not json\n").unwrap();
    let (code, _, err) = run(&["skeinlab", "--cache", path.to_str().unwrap(), "counit", "a"]);
    assert_eq!(code, 2);
    assert!(err.contains("cache"), "{err}");
}
