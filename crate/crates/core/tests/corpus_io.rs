use proptest::prelude::*;

use morphtok::corpus::{clean_corpus, clean_line, read_tokenized, write_tokenized, CleanConfig};
use morphtok::{classify_char, CharClass, TokenSequence};

#[test]
fn cleaning_fixture() {
    let input = include_str!("fixtures/clean_input.txt");
    let expected: Vec<&str> = include_str!("fixtures/clean_expected.txt").lines().collect();
    let mut it = clean_corpus(input.as_bytes(), CleanConfig::default());
    let out: Vec<String> = it.by_ref().collect::<Result<_, _>>().unwrap();
    assert_eq!(out, expected);
    let stats = it.stats();
    assert_eq!(stats.lines_read, 9);
    assert_eq!(stats.kept, 6);
    assert_eq!(stats.dropped_short, 3);
}

#[test]
fn documented_examples() {
    let cfg = CleanConfig::default();
    assert_eq!(clean_line("나는 집에 갔다", &cfg).as_deref(), Some("나는 집에 갔다"));
    assert_eq!(clean_line("나는 갔다", &cfg), None);
    assert_eq!(clean_line("나는 ★집에★ 갔다", &cfg).as_deref(), Some("나는 집에 갔다"));

    let seqs = vec![TokenSequence::new(vec!["나".into(), "##라".into()])];
    let mut buf = Vec::new();
    write_tokenized(&seqs, &mut buf).unwrap();
    assert_eq!(buf, "나 ##라\n".as_bytes());
}

fn messy_line() -> impl Strategy<Value = String> {
    let unit = prop_oneof![
        4 => (0xAC00u32..=0xD7A3).prop_map(|c| char::from_u32(c).unwrap()),
        3 => Just(' '),
        1 => prop::sample::select(vec!['\t', '\u{3000}', '\u{A0}', '\r', '\u{0B}']),
        2 => proptest::char::range('!', '~'),
        1 => proptest::char::range('\u{3131}', '\u{318E}'),
        1 => any::<char>().prop_filter("no newline", |c| *c != '\n'),
    ];
    proptest::collection::vec(unit, 0..60).prop_map(|v| v.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn cleaning_is_idempotent(line in messy_line(), min in 1usize..5) {
        let cfg = CleanConfig::with_min_eojeols(min).unwrap();
        if let Some(once) = clean_line(&line, &cfg) {
            prop_assert_eq!(clean_line(&once, &cfg), Some(once.clone()));
        }
    }

    #[test]
    fn cleaned_lines_satisfy_the_filter(line in messy_line(), min in 1usize..5) {
        let cfg = CleanConfig::with_min_eojeols(min).unwrap();
        match clean_line(&line, &cfg) {
            Some(out) => {
                prop_assert!(out.split(' ').count() >= min);
                prop_assert!(!out.contains("  ") && out.trim() == out);
                prop_assert!(out.chars().all(|c| c == ' ' || classify_char(c) != CharClass::Other));
                prop_assert!(!out.contains('\t'));
            }
            None => {
                let kept: String = line.chars().filter(|c| classify_char(*c) != CharClass::Other).collect();
                prop_assert!(kept.split_whitespace().count() < min);
            }
        }
    }

    #[test]
    fn streaming_matches_line_by_line(lines in proptest::collection::vec(messy_line(), 0..20)) {
        let text = lines.join("\n");
        let cfg = CleanConfig::default();
        let streamed: Vec<String> = clean_corpus(text.as_bytes(), cfg.clone())
            .collect::<Result<_, _>>()
            .unwrap();
        let direct: Vec<String> = text.split('\n')
            .filter(|_| !text.is_empty())
            .filter_map(|l| clean_line(l.strip_suffix('\r').unwrap_or(l), &cfg))
            .collect();
        prop_assert_eq!(streamed, direct);
    }

    #[test]
    fn tokenized_round_trip(seqs in proptest::collection::vec(
        proptest::collection::vec("(##)?[가-힣a-z.]{1,4}|\\[UNK\\]", 0..8).prop_map(TokenSequence::new), 0..20)) {
        let mut buf = Vec::new();
        write_tokenized(&seqs, &mut buf).unwrap();
        prop_assert_eq!(buf.iter().filter(|b| **b == b'\n').count(), seqs.len());
        let back: Vec<TokenSequence> = read_tokenized(buf.as_slice()).collect::<Result<_, _>>().unwrap();
        prop_assert_eq!(back, seqs);
    }
}
