//! Reader and writer for analyzer output in MeCab-ko's TSV layout.
//!
//! ```text
//! 갔	VV+EP,*,T,갔,Inflect,VV,EP,가/VV/*+았/EP/*
//! 다	EF,*,F,다,*,*,*,*
//! EOS
//! ```
//!
//! One morpheme line is `surface<TAB>POS[,features...]`. The eighth feature,
//! when present and not `*`, lists the canonical morphemes covered by the
//! line as `form/TAG/*+form/TAG/*`. `EOS` or a blank line ends a sentence.
//!
//! Eojeol boundaries come from either an explicit [`EOJEOL_SEPARATOR`] line
//! or an optional third column holding the surface with its preceding
//! whitespace (MeCab's `%pS`): a leading space starts a new eojeol.
#![allow(clippy::tabs_in_doc_comments)] // the TAB is part of the format

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::hangul::compose_text;

use super::{align_surface, AnalyzedEojeol, AnalyzedSentence, ClassTable, PosTag, EOJEOL_SEPARATOR};

const EXPRESSION_FIELD: usize = 7;

#[derive(Default)]
struct EojeolBuilder {
    surface: String,
    morphemes: Vec<(String, PosTag)>,
}

/// Streaming reader yielding one [`AnalyzedSentence`] per sentence block.
pub struct TaggedReader<'t, R> {
    reader: R,
    table: &'t ClassTable,
    line_no: usize,
    buf: Vec<u8>,
    done: bool,
}

impl<'t, R: BufRead> TaggedReader<'t, R> {
    pub fn new(reader: R, table: &'t ClassTable) -> Self {
        TaggedReader {
            reader,
            table,
            line_no: 0,
            buf: Vec::new(),
            done: false,
        }
    }

    fn read_line(&mut self) -> Result<Option<String>> {
        self.buf.clear();
        if self.reader.read_until(b'\n', &mut self.buf)? == 0 {
            return Ok(None);
        }
        self.line_no += 1;
        while matches!(self.buf.last(), Some(b'\n' | b'\r')) {
            self.buf.pop();
        }
        String::from_utf8(std::mem::take(&mut self.buf))
            .map(Some)
            .map_err(|_| Error::InvalidEncoding { line: self.line_no })
    }

    fn finish_eojeol(&self, builder: EojeolBuilder, out: &mut Vec<AnalyzedEojeol>) -> Result<()> {
        if builder.morphemes.is_empty() {
            return Ok(());
        }
        let surface = compose_text(&builder.surface);
        out.push(align_surface(&surface, builder.morphemes, self.table)?);
        Ok(())
    }

    fn next_sentence(&mut self) -> Result<Option<AnalyzedSentence>> {
        let mut eojeols = Vec::new();
        let mut current = EojeolBuilder::default();
        let mut seen_any = false;
        while let Some(line) = self.read_line()? {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed == "EOS" {
                if seen_any {
                    self.finish_eojeol(current, &mut eojeols)?;
                    return Ok(Some(AnalyzedSentence::new(eojeols)));
                }
                continue;
            }
            if trimmed == EOJEOL_SEPARATOR {
                self.finish_eojeol(std::mem::take(&mut current), &mut eojeols)?;
                continue;
            }
            if !line.contains('\t') {
                if trimmed.starts_with('#') {
                    continue;
                }
                return Err(self.malformed("missing TAB between surface and features"));
            }
            let entry = self.parse_morpheme_line(&line)?;
            if entry.starts_eojeol {
                self.finish_eojeol(std::mem::take(&mut current), &mut eojeols)?;
            }
            current.surface.push_str(&entry.surface);
            current.morphemes.extend(entry.morphemes);
            seen_any = true;
        }
        if seen_any {
            self.finish_eojeol(current, &mut eojeols)?;
            return Ok(Some(AnalyzedSentence::new(eojeols)));
        }
        Ok(None)
    }

    fn malformed(&self, reason: &str) -> Error {
        Error::MalformedLine {
            line: self.line_no,
            reason: reason.to_owned(),
        }
    }

    fn tag(&self, tag: &str) -> Result<PosTag> {
        if self.table.contains(tag) {
            Ok(PosTag::new(tag))
        } else {
            Err(Error::UnknownTag {
                tag: tag.to_owned(),
                line: Some(self.line_no),
            })
        }
    }

    fn parse_morpheme_line(&self, line: &str) -> Result<LineEntry> {
        let mut cols = line.split('\t');
        let surface = cols.next().unwrap_or_default();
        let features = cols.next().unwrap_or_default();
        let spaced = cols.next();
        if cols.next().is_some() {
            return Err(self.malformed("too many TAB-separated columns"));
        }
        if surface.is_empty() || surface.chars().any(char::is_whitespace) {
            return Err(self.malformed("surface must be non-empty and contain no whitespace"));
        }
        let fields: Vec<&str> = features.split(',').collect();
        let pos = fields[0].trim();
        if pos.is_empty() {
            return Err(self.malformed("empty POS field"));
        }
        let expression = (fields.len() > EXPRESSION_FIELD)
            .then(|| fields[EXPRESSION_FIELD..].join(","))
            .filter(|e| !e.is_empty() && e != "*");

        let morphemes = match expression {
            Some(expr) => self.parse_expression(&expr)?,
            None => {
                // A fused tag without an expression cannot be split; keep the
                // first component.
                let first = pos.split('+').next().unwrap_or(pos);
                vec![(surface.to_owned(), self.tag(first)?)]
            }
        };
        Ok(LineEntry {
            surface: surface.to_owned(),
            morphemes,
            starts_eojeol: spaced.is_some_and(|s| s.starts_with(char::is_whitespace)),
        })
    }

    fn parse_expression(&self, expr: &str) -> Result<Vec<(String, PosTag)>> {
        // Pieces are joined by '+', which may itself be a form ("+/SY/*").
        let mut pieces: Vec<String> = Vec::new();
        let mut pending: Option<String> = None;
        for part in expr.split('+') {
            let piece = match pending.take() {
                Some(prev) => format!("{prev}+{part}"),
                None => part.to_owned(),
            };
            let has_form = piece.find('/').is_some_and(|slash| slash > 0);
            if has_form {
                pieces.push(piece);
            } else {
                pending = Some(piece);
            }
        }
        if pending.is_some() {
            return Err(self.malformed("dangling piece in morpheme expression"));
        }
        pieces
            .iter()
            .map(|piece| {
                let parts: Vec<&str> = piece.split('/').collect();
                let (form, tag) = match parts.len() {
                    0 | 1 => return Err(self.malformed("expression piece lacks a tag")),
                    2 => (parts[0].to_owned(), parts[1]),
                    n => (parts[..n - 2].join("/"), parts[n - 2]),
                };
                if form.is_empty() {
                    return Err(self.malformed("empty form in morpheme expression"));
                }
                Ok((form, self.tag(tag)?))
            })
            .collect()
    }
}

struct LineEntry {
    surface: String,
    morphemes: Vec<(String, PosTag)>,
    starts_eojeol: bool,
}

impl<R: BufRead> Iterator for TaggedReader<'_, R> {
    type Item = Result<AnalyzedSentence>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        match self.next_sentence() {
            Ok(Some(s)) => Some(Ok(s)),
            Ok(None) => {
                self.done = true;
                None
            }
            Err(e) => {
                self.done = true;
                Some(Err(e))
            }
        }
    }
}

pub fn parse_tagged_corpus<R: BufRead>(reader: R, table: &ClassTable) -> TaggedReader<'_, R> {
    TaggedReader::new(reader, table)
}

pub fn parse_tagged_str(text: &str, table: &ClassTable) -> Result<Vec<AnalyzedSentence>> {
    parse_tagged_corpus(text.as_bytes(), table).collect()
}

/// Writes sentences back in the reader's format. Aligned eojeols get one
/// line per morpheme fragment; eojeols whose alignment failed are written
/// as a single fused line so the surface survives a round trip.
pub fn write_tagged<W: Write>(sentences: &[AnalyzedSentence], mut out: W) -> Result<()> {
    for sentence in sentences {
        for (i, eojeol) in sentence.eojeols.iter().enumerate() {
            if i > 0 {
                writeln!(out, "{EOJEOL_SEPARATOR}")?;
            }
            if eojeol.alignment_failed {
                let tags: Vec<&str> = eojeol.morphemes.iter().map(|m| m.pos.as_str()).collect();
                writeln!(
                    out,
                    "{}\t{},*,*,*,Inflect,*,*,{}",
                    eojeol.surface,
                    tags.join("+"),
                    expression(eojeol.morphemes.iter().map(|m| (&m.canonical, &m.pos)))
                )?;
                continue;
            }
            for m in &eojeol.morphemes {
                if m.surface == m.canonical {
                    writeln!(out, "{}\t{}", m.surface, m.pos)?;
                } else {
                    writeln!(
                        out,
                        "{}\t{},*,*,*,*,*,*,{}",
                        m.surface,
                        m.pos,
                        expression([(&m.canonical, &m.pos)])
                    )?;
                }
            }
        }
        writeln!(out, "EOS")?;
    }
    Ok(())
}

fn expression<'a>(items: impl IntoIterator<Item = (&'a String, &'a PosTag)>) -> String {
    items
        .into_iter()
        .map(|(form, tag)| format!("{form}/{tag}/*"))
        .collect::<Vec<_>>()
        .join("+")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morph::MorphemeType;

    const FIGURE: &str = "나\tNP,*,F,나,*,*,*,*\n는\tJX,*,T,는,*,*,*,*\n<SP>\n집\tNNG,*,T,집,*,*,*,*\n에\tJKB,*,F,에,*,*,*,*\n<SP>\n갔\tVV+EP,*,T,갔,Inflect,VV,EP,가/VV/*+았/EP/*\n다\tEF,*,F,다,*,*,*,*\nEOS\n";

    fn analyses(s: &AnalyzedSentence) -> Vec<Vec<String>> {
        s.eojeols
            .iter()
            .map(|e| {
                e.morphemes
                    .iter()
                    .map(|m| format!("{}/{}", m.canonical, m.pos))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn parses_sentence_with_separator_lines() {
        let table = ClassTable::default();
        let sents = parse_tagged_str(FIGURE, &table).unwrap();
        assert_eq!(sents.len(), 1);
        assert_eq!(
            analyses(&sents[0]),
            [
                vec!["나/NP", "는/JX"],
                vec!["집/NNG", "에/JKB"],
                vec!["가/VV", "았/EP", "다/EF"]
            ]
        );
        assert_eq!(sents[0].text(), "나는 집에 갔다");
        let last = &sents[0].eojeols[2];
        assert!(!last.alignment_failed);
        assert_eq!(last.morphemes[1].surface, "\u{11BB}");
        assert_eq!(last.morphemes[1].mtype, MorphemeType::Grammatical);
    }

    #[test]
    fn whitespace_column_marks_eojeols() {
        let text = "나\tNP\t나\n는\tJX\t는\n집\tNNG\t 집\n에\tJKB\t에\n\n";
        let sents = parse_tagged_str(text, &ClassTable::default()).unwrap();
        assert_eq!(sents[0].text(), "나는 집에");
    }

    #[test]
    fn empty_input() {
        assert!(parse_tagged_str("", &ClassTable::default()).unwrap().is_empty());
        assert!(parse_tagged_str("\nEOS\n\n", &ClassTable::default()).unwrap().is_empty());
    }

    #[test]
    fn missing_tab() {
        let err = parse_tagged_str("나\tNP\n는 JX\n", &ClassTable::default()).unwrap_err();
        assert!(matches!(err, Error::MalformedLine { line: 2, .. }), "{err}");
    }

    #[test]
    fn unknown_tag_reports_line() {
        let err = parse_tagged_str("나\tNP\n는\tXYZ\n", &ClassTable::default()).unwrap_err();
        assert!(matches!(err, Error::UnknownTag { line: Some(2), .. }), "{err}");
    }

    #[test]
    fn invalid_utf8_line() {
        let bytes: &[u8] = b"\xff\xfe\tNP\n";
        let table = ClassTable::default();
        let err = parse_tagged_corpus(bytes, &table).next().unwrap().unwrap_err();
        assert!(matches!(err, Error::InvalidEncoding { line: 1 }));
    }

    #[test]
    fn plus_form_in_expression() {
        let text = "a+b\tSL+SY+SL,*,*,*,*,*,*,a/SL/*++/SY/*+b/SL/*\n";
        let sents = parse_tagged_str(text, &ClassTable::default()).unwrap();
        let forms: Vec<_> = sents[0].morphemes().map(|m| m.canonical.as_str()).collect();
        assert_eq!(forms, ["a", "+", "b"]);
    }

    #[test]
    fn round_trip_keeps_surfaces() {
        let table = ClassTable::default();
        let text = format!(
            "{FIGURE}나\tNP\n라면\tVCP+EC,*,T,라면,Inflect,VCP,EC,이/VCP/*+라면/EC/*\n<SP>\n했\tVV+EP,*,*,*,*,*,*,하/VV/*+였/EP/*\n다\tEF\n"
        );
        let first = parse_tagged_str(&text, &table).unwrap();
        assert!(first[1].eojeols[0].alignment_failed);
        let mut buf = Vec::new();
        write_tagged(&first, &mut buf).unwrap();
        let second = parse_tagged_str(std::str::from_utf8(&buf).unwrap(), &table).unwrap();
        assert_eq!(first, second);
        assert_eq!(second[1].text(), "나라면 했다");
    }
}
