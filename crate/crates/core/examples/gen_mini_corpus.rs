//! Generates the bundled mini-corpus: template sentences over a small
//! lexicon, written as analyzer output (surface, features, preceding space).
//!
//!     cargo run --example gen_mini_corpus -- crates/core/data/mini_corpus.tsv

use std::collections::HashSet;
use std::fs::File;
use std::io::{self, BufWriter, Write};

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use morphtok::hangul::{compose_text, decompose_text, from_compat_jamo, is_trail, is_vowel};

const SENTENCES: usize = 6000;
const SEED: u64 = 0x6d6f_7270;

const NOUNS: &str = "학생 선생님 학교 책 친구 가족 어머니 아버지 동생 언니 오빠 누나 형 사람 아이 집 방 문 \
    창문 의자 책상 컴퓨터 전화 사진 음식 밥 빵 물 우유 커피 차 과일 사과 바나나 포도 딸기 고기 생선 김치 \
    라면 국수 비빔밥 떡 과자 케이크 시장 가게 식당 병원 은행 도서관 공원 회사 사무실 교실 운동장 영화관 \
    극장 백화점 편의점 우체국 경찰서 역 공항 버스 지하철 기차 비행기 자동차 자전거 택시 배 길 다리 산 바다 \
    강 하늘 구름 비 눈 바람 날씨 봄 여름 가을 겨울 아침 점심 저녁 밤 주말 시간 시계 달력 생일 선물 편지 \
    신문 잡지 소설 노래 음악 영화 드라마 게임 운동 축구 야구 농구 수영 여행 휴가 숙제 시험 공부 수업 문제 \
    대답 질문 이야기 생각 마음 기분 사랑 꿈 희망 계획 약속 일 직업 회의 뉴스 나라 도시 마을 세상 역사 \
    문화 경제 정치 사회 과학 기술 예술 언어 한국어 영어 단어 문장 글 이름 얼굴 눈물 손 발 머리 몸 건강 \
    병 약 의사 간호사 경찰 군인 가수 배우 화가 작가 요리사 기자 교수 대학 대학교 고등학교 중학교 \
    초등학교 유치원 도시락 가방 옷 신발 모자 안경 우산 지갑 돈 카드 표 열쇠 침대 이불 냉장고 텔레비전 \
    라디오 꽃 나무 풀 돌 강아지 고양이 새 물고기 소 돼지 닭 토끼 곰 호랑이 사자 원숭이 나비 벌 개미 \
    종이 연필 볼펜 공책 지우개 칠판 교과서 사전 지도 그림 색 창고 부엌 거실 화장실 마당 정원 지붕 계단 \
    엘리베이터 건물 아파트 호텔 박물관 미술관 교회 절 시골 고향 외국 손님 주인 이웃 아저씨 아주머니 \
    할머니 할아버지 부모님 남편 아내 아들 딸 조카 사촌 동료 사장 회장 직원 손자 기념일 명절 잔치 \
    축제 공연 전시회 경기 대회 상 점수 성적 결과 원인 이유 방법 목적 의견 소식 정보 자료 보고서 \
    논문 기사 광고 상품 가격 시장 물건 쓰레기 환경 자연 공기 날개 바위 모래 섬 호수 폭포 숲";

const PLACES: &str = "서울 부산 대구 인천 광주 대전 울산 제주 한국 일본 중국 미국 영국 프랑스 독일 캐나다";

const PERSONS: &str = "민수 지영 철수 영희 수진 현우 서연 지훈 민지 준호";

const VERBS: &str = "가 오 보 먹 읽 마시 배우 주 만나 찾 입 잡 닫 받 사 타 서 자 일어나 기다리 가르치 \
    던지 보내 지내 끝내 세우 키우 바꾸 나누 모으 쓰 끄 씻 웃 믿 신 남 앉 넣 놓 뛰 쉬 되 \
    좋아하 공부하 일하 운동하 요리하 청소하 전화하 시작하 사랑하 이야기하 생각하 여행하 준비하 노래하 \
    살 알 놀 만들 열 팔";

const ADJECTIVES: &str = "좋 크 작 많 적 높 낮 짧 예쁘 바쁘 아프 기쁘 슬프 넓 좁 밝 깊 맑 비싸 싸 같 \
    재미있 맛있 멋있 따뜻하 시원하 조용하 깨끗하 행복하 중요하 유명하 친절하 편하 길 멀";

const ADVERBS: &str = "정말 너무 빨리 많이 다시 같이 자주 항상 조금 매일 잘 함께 먼저 아직";

const TIMES: &str = "오늘 어제 내일 아침 저녁 주말 지금";

const DETERMINERS: &str = "이 그 저 새 모든 어느";

#[derive(Clone, Copy, PartialEq)]
enum Pred {
    Verb,
    Adj,
}

struct Lexicon {
    nouns: Vec<&'static str>,
    noun_idx: WeightedIndex<f64>,
    verbs: Vec<&'static str>,
    verb_idx: WeightedIndex<f64>,
    adjs: Vec<&'static str>,
    adj_idx: WeightedIndex<f64>,
    places: Vec<&'static str>,
    persons: Vec<&'static str>,
    adverbs: Vec<&'static str>,
    times: Vec<&'static str>,
    determiners: Vec<&'static str>,
}

fn words(list: &'static str) -> Vec<&'static str> {
    let mut seen = HashSet::new();
    list.split_whitespace().filter(|w| seen.insert(*w)).collect()
}

fn zipf(n: usize) -> WeightedIndex<f64> {
    WeightedIndex::new((0..n).map(|r| 1.0 / (r as f64 + 1.0).powf(0.9))).unwrap()
}

impl Lexicon {
    fn new() -> Self {
        let nouns = words(NOUNS);
        let verbs = words(VERBS);
        let adjs = words(ADJECTIVES);
        Lexicon {
            noun_idx: zipf(nouns.len()),
            verb_idx: zipf(verbs.len()),
            adj_idx: zipf(adjs.len()),
            nouns,
            verbs,
            adjs,
            places: words(PLACES),
            persons: words(PERSONS),
            adverbs: words(ADVERBS),
            times: words(TIMES),
            determiners: words(DETERMINERS),
        }
    }

    fn noun(&self, rng: &mut impl Rng) -> (&'static str, &'static str) {
        match rng.random_range(0..10) {
            0 => (pick(&self.persons, rng), "NNP"),
            1 => (pick(&self.places, rng), "NNP"),
            _ => (self.nouns[self.noun_idx.sample(rng)], "NNG"),
        }
    }

    fn verb(&self, rng: &mut impl Rng) -> &'static str {
        self.verbs[self.verb_idx.sample(rng)]
    }

    fn adj(&self, rng: &mut impl Rng) -> &'static str {
        self.adjs[self.adj_idx.sample(rng)]
    }
}

fn pick<'a>(list: &[&'a str], rng: &mut impl Rng) -> &'a str {
    list[rng.random_range(0..list.len())]
}

/// One analyzer line: surface jamo plus the morphemes it realizes.
struct Token {
    jamo: Vec<char>,
    morphemes: Vec<(String, &'static str)>,
}

#[derive(Default)]
struct Eojeol {
    tokens: Vec<Token>,
}

impl Eojeol {
    fn last_open_vowel(&self) -> Option<(char, char)> {
        let jamo = &self.tokens.last()?.jamo;
        match jamo.as_slice() {
            [.., lead, v] if is_vowel(*v) => Some((*lead, *v)),
            _ => None,
        }
    }

    /// Appends a morpheme, applying the same contractions and coda
    /// attachment a real analyzer's surface would show.
    fn push(&mut self, canonical: &str, tag: &'static str) {
        let form: Vec<char> = decompose_text(canonical).chars().map(from_compat_jamo).collect();
        let morpheme = (canonical.to_owned(), tag);
        if let Some(last) = self.tokens.last_mut() {
            if is_trail(form[0]) {
                last.jamo.extend(&form);
                last.morphemes.push(morpheme);
                return;
            }
        }
        if let (Some((lead, v1)), ['\u{110B}', v2, rest @ ..]) = (self.last_open_vowel(), form.as_slice()) {
            if let Some(fused) = contract(lead, v1, *v2) {
                let last = self.tokens.last_mut().unwrap();
                last.jamo.pop();
                last.jamo.push(fused);
                last.jamo.extend(rest);
                last.morphemes.push(morpheme);
                return;
            }
        }
        self.tokens.push(Token {
            jamo: form,
            morphemes: vec![morpheme],
        });
    }
}

fn contract(lead: char, left: char, right: char) -> Option<char> {
    Some(match (left, right) {
        ('ᅡ', 'ᅡ') => 'ᅡ',
        ('ᅥ', 'ᅥ') => 'ᅥ',
        ('ᅡ', 'ᅧ') if lead == 'ᄒ' => 'ᅢ',
        ('ᅵ', 'ᅥ') => 'ᅧ',
        ('ᅩ', 'ᅡ') => 'ᅪ',
        ('ᅮ', 'ᅥ') => 'ᅯ',
        ('ᅬ', 'ᅥ') => 'ᅫ',
        ('ᅳ', 'ᅥ') => 'ᅥ',
        ('ᅳ', 'ᅡ') => 'ᅡ',
        ('ᅢ', 'ᅥ') => 'ᅢ',
        _ => return None,
    })
}

fn jamo(word: &str) -> Vec<char> {
    decompose_text(word).chars().collect()
}

fn has_coda(word: &str) -> bool {
    jamo(word).last().is_some_and(|&c| is_trail(c))
}

fn coda_is_rieul(word: &str) -> bool {
    jamo(word).last() == Some(&'ᆯ')
}

/// Harmony class of a predicate stem: 아, 어 or 여 (after 하).
fn harmony(stem: &str) -> char {
    if stem.ends_with('하') {
        return '여';
    }
    let vowels: Vec<char> = jamo(stem).into_iter().filter(|&c| is_vowel(c)).collect();
    let bright = |v: char| matches!(v, 'ᅡ' | 'ᅩ');
    match vowels.as_slice() {
        [.., prev, 'ᅳ'] => if bright(*prev) { '아' } else { '어' },
        [.., last] => if bright(*last) { '아' } else { '어' },
        [] => '어',
    }
}

fn with_harmony(stem: &str, a: &str, eo: &str, yeo: &str) -> String {
    match harmony(stem) {
        '아' => a,
        '여' => yeo,
        _ => eo,
    }
    .to_owned()
}

fn josa(noun: &str, closed: &str, open: &str) -> String {
    if has_coda(noun) { closed } else { open }.to_owned()
}

fn noun_phrase(noun: (&str, &'static str), particle: &str, tag: &'static str) -> Eojeol {
    let mut e = Eojeol::default();
    e.push(noun.0, noun.1);
    e.push(particle, tag);
    e
}

fn subject(noun: (&str, &'static str), rng: &mut impl Rng) -> Eojeol {
    if rng.random_bool(0.5) {
        noun_phrase(noun, &josa(noun.0, "이", "가"), "JKS")
    } else {
        noun_phrase(noun, &josa(noun.0, "은", "는"), "JX")
    }
}

fn object(noun: (&str, &'static str), rng: &mut impl Rng) -> Eojeol {
    if rng.random_bool(0.85) {
        noun_phrase(noun, &josa(noun.0, "을", "를"), "JKO")
    } else {
        noun_phrase(noun, "도", "JX")
    }
}

fn adverbial(noun: (&str, &'static str), rng: &mut impl Rng) -> Eojeol {
    let rieul = coda_is_rieul(noun.0);
    match rng.random_range(0..6) {
        0 | 1 => noun_phrase(noun, "에", "JKB"),
        2 => noun_phrase(noun, "에서", "JKB"),
        3 => noun_phrase(noun, if has_coda(noun.0) && !rieul { "으로" } else { "로" }, "JKB"),
        4 => noun_phrase(noun, "까지", "JX"),
        _ => noun_phrase(noun, "부터", "JX"),
    }
}

/// Sentence-final predicate.
fn final_predicate(stem: &str, kind: Pred, rng: &mut impl Rng) -> Eojeol {
    let tag = if kind == Pred::Verb { "VV" } else { "VA" };
    let rieul = coda_is_rieul(stem);
    let mut e = Eojeol::default();
    e.push(stem, tag);
    let past = with_harmony(stem, "았", "었", "였");
    match rng.random_range(0..7) {
        0 | 1 => {
            e.push(&past, "EP");
            e.push("다", "EF");
        }
        2 if kind == Pred::Verb && !rieul => {
            e.push(if has_coda(stem) { "는다" } else { "ㄴ다" }, "EF")
        }
        3 => e.push(&with_harmony(stem, "아요", "어요", "여요"), "EF"),
        4 if !rieul => e.push(if has_coda(stem) { "습니다" } else { "ㅂ니다" }, "EF"),
        5 => {
            e.push(&past, "EP");
            e.push(if rng.random_bool(0.5) { "어요" } else { "습니다" }, "EF");
        }
        6 if kind == Pred::Verb => {
            e.push("겠", "EP");
            e.push("다", "EF");
        }
        _ => e.push("다", "EF"),
    }
    e
}

/// Non-final predicate joined to the next clause.
fn connective(stem: &str, kind: Pred, rng: &mut impl Rng) -> Eojeol {
    let tag = if kind == Pred::Verb { "VV" } else { "VA" };
    let mut e = Eojeol::default();
    e.push(stem, tag);
    match rng.random_range(0..4) {
        0 => e.push("고", "EC"),
        1 => e.push(&with_harmony(stem, "아서", "어서", "여서"), "EC"),
        2 => e.push("지만", "EC"),
        _ if coda_is_rieul(stem) => e.push("고", "EC"),
        _ => e.push(if has_coda(stem) { "으면" } else { "면" }, "EC"),
    }
    e
}

fn adnominal(stem: &str, kind: Pred) -> Eojeol {
    let mut e = Eojeol::default();
    match kind {
        Pred::Verb => {
            e.push(stem, "VV");
            e.push("는", "ETM");
        }
        Pred::Adj if stem.ends_with('있') => {
            e.push(stem, "VA");
            e.push("는", "ETM");
        }
        Pred::Adj => {
            e.push(stem, "VA");
            e.push(if has_coda(stem) { "은" } else { "ㄴ" }, "ETM");
        }
    }
    e
}

fn single(word: &str, tag: &'static str) -> Eojeol {
    let mut e = Eojeol::default();
    e.push(word, tag);
    e
}

fn stem_without_rieul_forms<'a>(lex: &'a Lexicon, rng: &mut impl Rng, kind: Pred) -> &'a str {
    loop {
        let s = if kind == Pred::Verb { lex.verb(rng) } else { lex.adj(rng) };
        if !coda_is_rieul(s) {
            return s;
        }
    }
}

fn sentence(lex: &Lexicon, rng: &mut impl Rng) -> Vec<Eojeol> {
    let mut out = Vec::new();
    if rng.random_bool(0.25) {
        out.push(single(pick(&lex.times, rng), "NNG"));
    }
    match rng.random_range(0..9) {
        0 | 1 => {
            out.push(subject(lex.noun(rng), rng));
            out.push(object(lex.noun(rng), rng));
            maybe_adverb(lex, rng, &mut out);
            out.push(final_predicate(lex.verb(rng), Pred::Verb, rng));
        }
        2 => {
            out.push(subject(lex.noun(rng), rng));
            out.push(adverbial(lex.noun(rng), rng));
            maybe_adverb(lex, rng, &mut out);
            out.push(final_predicate(lex.verb(rng), Pred::Verb, rng));
        }
        3 => {
            let n1 = lex.noun(rng);
            out.push(noun_phrase(n1, "의", "JKG"));
            out.push(subject(lex.noun(rng), rng));
            maybe_adverb(lex, rng, &mut out);
            out.push(final_predicate(lex.adj(rng), Pred::Adj, rng));
        }
        4 => {
            out.push(subject(lex.noun(rng), rng));
            out.push(object(lex.noun(rng), rng));
            out.push(connective(lex.verb(rng), Pred::Verb, rng));
            out.push(object(lex.noun(rng), rng));
            out.push(final_predicate(lex.verb(rng), Pred::Verb, rng));
        }
        5 => {
            out.push(adnominal(stem_without_rieul_forms(lex, rng, Pred::Adj), Pred::Adj));
            out.push(subject(lex.noun(rng), rng));
            out.push(adverbial(lex.noun(rng), rng));
            out.push(final_predicate(if rng.random_bool(0.5) { "있" } else { "없" }, Pred::Adj, rng));
        }
        6 => {
            let a = lex.noun(rng);
            out.push(noun_phrase(a, &josa(a.0, "과", "와"), "JC"));
            out.push(subject(lex.noun(rng), rng));
            out.push(adverbial(lex.noun(rng), rng));
            out.push(object(lex.noun(rng), rng));
            out.push(final_predicate(lex.verb(rng), Pred::Verb, rng));
        }
        7 => {
            out.push(single(pick(&lex.determiners, rng), "MM"));
            out.push(object(lex.noun(rng), rng));
            out.push(adnominal(stem_without_rieul_forms(lex, rng, Pred::Verb), Pred::Verb));
            out.push(subject(lex.noun(rng), rng));
            out.push(final_predicate(lex.adj(rng), Pred::Adj, rng));
        }
        _ => {
            out.push(subject(lex.noun(rng), rng));
            out.push(connective(lex.adj(rng), Pred::Adj, rng));
            let n = lex.noun(rng);
            let mut e = Eojeol::default();
            e.push(n.0, n.1);
            if has_coda(n.0) {
                e.push("이", "VCP");
            }
            e.push("다", "EF");
            out.push(e);
        }
    }
    let last = out.last_mut().unwrap();
    last.push(if rng.random_bool(0.9) { "." } else { "?" }, "SF");
    out
}

fn maybe_adverb(lex: &Lexicon, rng: &mut impl Rng, out: &mut Vec<Eojeol>) {
    if rng.random_bool(0.3) {
        out.push(single(pick(&lex.adverbs, rng), "MAG"));
    }
}

fn write_sentence(out: &mut impl Write, eojeols: &[Eojeol]) -> io::Result<()> {
    for (i, eojeol) in eojeols.iter().enumerate() {
        for (j, token) in eojeol.tokens.iter().enumerate() {
            let surface = compose_text(&token.jamo.iter().collect::<String>());
            let space = if i > 0 && j == 0 { " " } else { "" };
            let coda = if has_coda(&surface) { "T" } else { "F" };
            if let [(form, tag)] = token.morphemes.as_slice() {
                writeln!(out, "{surface}\t{tag},*,{coda},{surface},*,*,*,*\t{space}")?;
                debug_assert_eq!(form, &surface);
            } else {
                let tags: Vec<&str> = token.morphemes.iter().map(|m| m.1).collect();
                let expr: Vec<String> = token
                    .morphemes
                    .iter()
                    .map(|(f, t)| format!("{f}/{t}/*"))
                    .collect();
                writeln!(
                    out,
                    "{surface}\t{},*,{coda},{surface},Inflect,{},{},{}\t{space}",
                    tags.join("+"),
                    tags[0],
                    tags[tags.len() - 1],
                    expr.join("+")
                )?;
            }
        }
    }
    writeln!(out, "EOS")
}

fn main() -> io::Result<()> {
    let lex = Lexicon::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out: Box<dyn Write> = match std::env::args().nth(1) {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    for _ in 0..SENTENCES {
        write_sentence(&mut out, &sentence(&lex, &mut rng))?;
    }
    out.flush()
}
