mod common;

use common::{golden_inputs, golden_store, read};
use metaqa_core::generate;

#[test]
fn golden_corpus_matches_expected_qaps() {
    let store = golden_store();
    assert_eq!(store.len(), 13);
    let mut lines = String::new();
    for ts in golden_inputs() {
        for q in generate(&ts, &store, None).qaps {
            lines.push_str(&q.to_json_line());
            lines.push('\n');
        }
    }
    let expected = read("golden/expected_qaps.jsonl");
    for (i, (got, want)) in lines.lines().zip(expected.lines()).enumerate() {
        assert_eq!(got, want, "line {}", i + 1);
    }
    assert_eq!(lines.lines().count(), expected.lines().count());
}
