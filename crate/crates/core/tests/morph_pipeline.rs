use morphtok::hangul::{decompose_text, display_compat};
use morphtok::morph::{align_fragments, write_tagged};
use morphtok::{
    align_surface, parse_tagged_str, pretokenize, AnalyzedEojeol, AnalyzedSentence, ClassTable,
    DemoAnalyzer, Morpheme, MorphemeType, PipelineMode, PosTag, SentenceRef,
};
use proptest::prelude::*;

const RAMEN: &str = include_str!("fixtures/ramen.tsv");
const WENT_HOME: &str = include_str!("fixtures/went_home.tsv");
const MISANALYSIS: &str = include_str!("fixtures/misanalysis.tsv");

fn parse_one(tsv: &str) -> AnalyzedSentence {
    let mut sentences = parse_tagged_str(tsv, &ClassTable::default()).unwrap();
    assert_eq!(sentences.len(), 1);
    sentences.pop().unwrap()
}

fn row(sentence: &AnalyzedSentence, mode: PipelineMode) -> String {
    pretokenize(SentenceRef::Analyzed(sentence), mode)
        .unwrap()
        .iter()
        .map(|t| display_compat(&t.text))
        .collect::<Vec<_>>()
        .join("/")
}

#[test]
fn ramen_sentence_rows() {
    let s = parse_one(RAMEN);
    assert_eq!(s.text(), "나라면 해물라면을 먹었을걸.");
    assert_eq!(row(&s, PipelineMode::MorWp), "나/이/라면/해물/라면/을/먹/었/을걸/.");
    assert_eq!(
        row(&s, PipelineMode::MorWpSd),
        "ㄴㅏ/ㅇㅣ/ㄹㅏㅁㅕㄴ/ㅎㅐㅁㅜㄹ/ㄹㅏㅁㅕㄴ/ㅇㅡㄹ/ㅁㅓㄱ/ㅇㅓㅆ/ㅇㅡㄹㄱㅓㄹ/."
    );
    assert_eq!(
        row(&s, PipelineMode::MorWpMd),
        "ㄴㅏ/이/라면/ㅎㅐㅁㅜㄹ/ㄹㅏㅁㅕㄴ/을/ㅁㅓㄱ/었/을걸/."
    );
    // the elided copula cannot be placed on the surface
    assert!(s.eojeols[0].alignment_failed);
    assert!(!s.eojeols[1].alignment_failed);
}

#[test]
fn ramen_sentence_from_demo_analyzer() {
    let demo = DemoAnalyzer::builtin(ClassTable::default()).unwrap();
    let s = demo.analyze("나라면 해물라면을 먹었을걸.").unwrap();
    assert_eq!(s, parse_one(RAMEN));
}

#[test]
fn went_home_analysis() {
    let s = parse_one(WENT_HOME);
    let groups: Vec<Vec<String>> = s
        .eojeols
        .iter()
        .map(|e| e.morphemes.iter().map(|m| format!("{}/{}", m.canonical, m.pos)).collect())
        .collect();
    assert_eq!(
        groups,
        [
            vec!["나/NP", "는/JX"],
            vec!["집/NNG", "에/JKB"],
            vec!["가/VV", "았/EP", "다/EF"]
        ]
    );
    assert_eq!(row(&s, PipelineMode::MorWp), "나/는/집/에/가/ㅆ/다");
}

#[test]
fn analyzer_errors_are_kept() {
    let s = parse_one(MISANALYSIS);
    assert_eq!(s.text(), "그는 우크라이나 사람이다.");
    assert_eq!(
        row(&s, PipelineMode::MorWpMd),
        "ㄱㅡ/는/ㅇㅜㅋㅡㄹㅏ/이나/ㅅㅏㄹㅏㅁ/이/다/."
    );
    let demo = DemoAnalyzer::builtin(ClassTable::default()).unwrap();
    assert_eq!(demo.analyze("그는 우크라이나 사람이다.").unwrap(), s);
}

#[test]
fn past_tense_is_a_lone_trail() {
    let e = align_surface(
        "갔다",
        vec![
            ("가".into(), PosTag::new("VV")),
            ("았".into(), PosTag::new("EP")),
            ("다".into(), PosTag::new("EF")),
        ],
        &ClassTable::default(),
    )
    .unwrap();
    assert!(!e.alignment_failed);
    let fragments: Vec<&str> = e.morphemes.iter().map(|m| m.surface.as_str()).collect();
    assert_eq!(fragments, ["가", "\u{11BB}", "다"]);
    assert_eq!(decompose_text(&fragments.concat()), decompose_text("갔다"));
    assert_eq!(e.morphemes[1].canonical, "았");
    assert_eq!(e.morphemes[1].mtype, MorphemeType::Grammatical);
}

#[test]
fn class_table_defaults_and_overrides() {
    let t = ClassTable::default();
    let class = |tag: &str| t.classify(&PosTag::new(tag)).unwrap();
    assert_eq!(class("NNG"), MorphemeType::Lexical);
    assert_eq!(class("EP"), MorphemeType::Grammatical);
    assert_eq!(class("VCP"), MorphemeType::Grammatical);
    assert!(t.classify(&PosTag::new("ZZZ")).is_err());

    let custom = ClassTable::with_overrides("EC=lexical\n").unwrap();
    let s = parse_tagged_str(RAMEN, &custom).unwrap().pop().unwrap();
    assert_eq!(
        row(&s, PipelineMode::MorWpMd),
        "ㄴㅏ/이/ㄹㅏㅁㅕㄴ/ㅎㅐㅁㅜㄹ/ㄹㅏㅁㅕㄴ/을/ㅁㅓㄱ/었/을걸/."
    );
}

#[test]
fn serialization_round_trip_keeps_surfaces() {
    let all: Vec<AnalyzedSentence> = [RAMEN, WENT_HOME, MISANALYSIS].iter().map(|t| parse_one(t)).collect();
    let mut buf = Vec::new();
    write_tagged(&all, &mut buf).unwrap();
    let back = parse_tagged_str(std::str::from_utf8(&buf).unwrap(), &ClassTable::default()).unwrap();
    assert_eq!(back, all);
}

#[test]
fn malformed_input_reports_line() {
    let err = parse_tagged_str("나\tNP\n는 JX\n", &ClassTable::default()).unwrap_err();
    assert_eq!(err.class(), "MalformedLine");
    assert!(err.to_string().contains("line 2"), "{err}");
    let err = parse_tagged_str("나\tQQ\n", &ClassTable::default()).unwrap_err();
    assert_eq!(err.class(), "UnknownTag");
    assert!(parse_tagged_str("", &ClassTable::default()).unwrap().is_empty());
}

// Random open-syllable stems followed by the past tense and an ending, the
// configuration that puts a morpheme boundary inside a syllable.
fn open_syllable() -> impl Strategy<Value = char> {
    (0u32..19, 0u32..21).prop_map(|(l, v)| char::from_u32(0xAC00 + (l * 21 + v) * 28).unwrap())
}

fn any_syllable() -> impl Strategy<Value = char> {
    (0xAC00u32..=0xD7A3).prop_map(|c| char::from_u32(c).unwrap())
}

fn lexical_tag() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["NNG", "NNP", "VV", "VA", "MAG", "NP", "SL"])
}

fn grammatical_tag() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["JKS", "JKO", "JX", "EP", "EF", "EC", "ETM", "VCP", "XSN"])
}

fn morpheme(tags: impl Strategy<Value = &'static str>) -> impl Strategy<Value = Morpheme> {
    (proptest::collection::vec(any_syllable(), 1..4), tags).prop_map(|(s, tag)| {
        let text: String = s.into_iter().collect();
        let pos = PosTag::new(tag);
        let mtype = ClassTable::default().classify(&pos).unwrap();
        Morpheme {
            canonical: text.clone(),
            surface: text,
            pos,
            mtype,
        }
    })
}

fn sentence_of(morphemes: impl Strategy<Value = Morpheme>) -> impl Strategy<Value = AnalyzedSentence> {
    proptest::collection::vec(proptest::collection::vec(morphemes, 1..4), 0..6).prop_map(|eojeols| {
        AnalyzedSentence::new(
            eojeols
                .into_iter()
                .map(|morphemes| AnalyzedEojeol {
                    surface: morphemes.iter().map(|m| m.surface.as_str()).collect(),
                    morphemes,
                    alignment_failed: false,
                })
                .collect(),
        )
    })
}

fn mixed_sentence() -> impl Strategy<Value = AnalyzedSentence> {
    sentence_of(prop_oneof![morpheme(lexical_tag()), morpheme(grammatical_tag())])
}

fn texts(s: &AnalyzedSentence, mode: PipelineMode) -> Vec<String> {
    pretokenize(SentenceRef::Analyzed(s), mode)
        .unwrap()
        .into_iter()
        .map(|t| {
            assert!(!t.continuation);
            t.text
        })
        .collect()
}

fn sorted_jamo(tokens: &[String]) -> Vec<char> {
    let mut v: Vec<char> = tokens.iter().flat_map(|t| decompose_text(t).chars().collect::<Vec<_>>()).collect();
    v.sort_unstable();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn fused_past_tense_aligns(stem in proptest::collection::vec(any_syllable(), 0..3),
                               last in open_syllable(),
                               ending in proptest::collection::vec(any_syllable(), 1..3)) {
        let stem: String = stem.into_iter().chain([last]).collect();
        let ending: String = ending.into_iter().collect();
        // the past marker's vowel must match the stem vowel for the contraction
        let vowel = decompose_text(&last.to_string()).chars().nth(1).unwrap();
        let past = match vowel { '\u{1161}' => "았", '\u{1165}' => "었", _ => return Ok(()) };
        let mut fused = decompose_text(&stem);
        fused.push('\u{11BB}');
        let surface = morphtok::compose_text(&format!("{fused}{ending}"));
        let frags = align_fragments(&surface, &[stem.as_str(), past, ending.as_str()]).unwrap();
        prop_assert_eq!(&frags[1], "\u{11BB}");
        prop_assert_eq!(decompose_text(&frags.concat()), decompose_text(&surface));
    }

    #[test]
    fn alignment_preserves_morphemes(forms in proptest::collection::vec(
        proptest::collection::vec(any_syllable(), 1..3), 1..5)) {
        let forms: Vec<String> = forms.into_iter().map(|f| f.into_iter().collect()).collect();
        let surface: String = forms.concat();
        let input: Vec<(String, PosTag)> = forms.iter().map(|f| (f.clone(), PosTag::new("NNG"))).collect();
        let e = align_surface(&surface, input, &ClassTable::default()).unwrap();
        prop_assert_eq!(e.morphemes.len(), forms.len());
        let canon: Vec<&str> = e.morphemes.iter().map(|m| m.canonical.as_str()).collect();
        prop_assert_eq!(canon, forms.iter().map(String::as_str).collect::<Vec<_>>());
        if !e.alignment_failed {
            let joined: String = e.morphemes.iter().map(|m| m.surface.as_str()).collect();
            prop_assert_eq!(decompose_text(&joined), decompose_text(&surface));
        }
    }

    #[test]
    fn md_matches_sd_on_lexical_only(s in sentence_of(morpheme(lexical_tag()))) {
        prop_assert_eq!(texts(&s, PipelineMode::MorWpMd), texts(&s, PipelineMode::MorWpSd));
    }

    #[test]
    fn md_matches_morwp_on_grammatical_only(s in sentence_of(morpheme(grammatical_tag()))) {
        prop_assert_eq!(texts(&s, PipelineMode::MorWpMd), texts(&s, PipelineMode::MorWp));
    }

    #[test]
    fn morpheme_modes_share_jamo(s in mixed_sentence()) {
        let base = sorted_jamo(&texts(&s, PipelineMode::MorWp));
        prop_assert_eq!(&sorted_jamo(&texts(&s, PipelineMode::MorWpSd)), &base);
        prop_assert_eq!(&sorted_jamo(&texts(&s, PipelineMode::MorWpMd)), &base);
        prop_assert_eq!(texts(&s, PipelineMode::MorWpMd), texts(&s, PipelineMode::MorWpMd));
    }

    #[test]
    fn wp_sd_is_decomposed_wp(words in proptest::collection::vec("[가-힣a-z.]{1,6}", 0..8),
                              sep in "[ \t]{1,3}") {
        let text = words.join(&sep);
        let wp = pretokenize(SentenceRef::Raw(&text), PipelineMode::Wp).unwrap();
        let sd = pretokenize(SentenceRef::Raw(&text), PipelineMode::WpSd).unwrap();
        let expected: Vec<String> = wp.iter().map(|t| decompose_text(&t.text)).collect();
        prop_assert_eq!(sd.iter().map(|t| t.text.clone()).collect::<Vec<_>>(), expected);
        prop_assert_eq!(wp.len(), words.len());
        prop_assert!(wp.iter().all(|t| !t.text.is_empty() && !t.continuation));
    }
}
