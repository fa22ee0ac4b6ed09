//! Tweet corpus records and JSON-lines readers/writers.
//!
//! A corpus file holds one JSON object per line. Raw records require
//! `"id"`, `"author"` and `"text"`; `"lang"`, `"timestamp"`, and pre-computed
//! `"subjectivity"`/`"polarity"` are optional and carried through the
//! pipeline untouched. Unknown keys are ignored. Malformed lines are skipped
//! and counted; a file where more than half the lines are malformed is
//! rejected outright.

use std::collections::BTreeMap;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Entity classes removed by text normalization.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum EntityKind {
    Url,
    Mention,
    Emoji,
    Smiley,
}

impl EntityKind {
    pub const ALL: [EntityKind; 4] =
        [EntityKind::Url, EntityKind::Mention, EntityKind::Emoji, EntityKind::Smiley];
}

/// A tweet as ingested from a raw corpus file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawTweet {
    pub id: String,
    pub author: String,
    pub text: String,
    #[serde(default, rename = "lang", skip_serializing_if = "Option::is_none")]
    pub lang_hint: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
    /// Pre-computed sentiment, honored by enrichment when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subjectivity: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polarity: Option<f64>,
}

/// A tweet after text normalization. `normalized_text` has entities removed
/// per the normalization flags, every `#` marker stripped, and whitespace
/// collapsed; `removed` counts deletions per entity kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizedTweet {
    pub id: String,
    pub author: String,
    pub original_text: String,
    pub normalized_text: String,
    pub removed: BTreeMap<EntityKind, u32>,
    #[serde(default, rename = "lang", skip_serializing_if = "Option::is_none")]
    pub lang_hint: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subjectivity: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polarity: Option<f64>,
}

/// Tallies from reading one corpus file.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReadReport {
    /// Non-blank lines seen.
    pub lines: u64,
    /// Records successfully parsed and validated.
    pub parsed: u64,
    /// Lines skipped: unparseable JSON, missing required keys, empty id/text.
    pub skipped: u64,
}

impl ReadReport {
    /// More than half of all non-blank lines were malformed.
    pub fn mostly_malformed(&self) -> bool {
        self.lines > 0 && self.skipped * 2 > self.lines
    }
}

/// A corpus line type with a minimal validity check. Implemented for the two
/// tweet forms; not meant to grow beyond them.
pub trait CorpusRecord: serde::de::DeserializeOwned {
    /// Err(reason) when a structurally valid JSON object is not a usable record.
    fn check(&self) -> std::result::Result<(), &'static str>;
}

impl CorpusRecord for RawTweet {
    fn check(&self) -> std::result::Result<(), &'static str> {
        if self.id.trim().is_empty() {
            return Err("empty id");
        }
        if self.text.trim().is_empty() {
            return Err("empty text");
        }
        Ok(())
    }
}

impl CorpusRecord for NormalizedTweet {
    fn check(&self) -> std::result::Result<(), &'static str> {
        if self.id.trim().is_empty() {
            return Err("empty id");
        }
        Ok(())
    }
}

/// Streaming JSON-lines reader. Yields valid records in file order; malformed
/// lines are skipped and tallied in the report. Only I/O failures surface as
/// errors.
pub struct CorpusReader<R: BufRead, T: CorpusRecord> {
    lines: std::io::Lines<R>,
    report: ReadReport,
    _marker: std::marker::PhantomData<T>,
}

impl<R: BufRead, T: CorpusRecord> CorpusReader<R, T> {
    fn new(reader: R) -> Self {
        CorpusReader { lines: reader.lines(), report: ReadReport::default(), _marker: std::marker::PhantomData }
    }

    pub fn report(&self) -> &ReadReport {
        &self.report
    }
}

impl<R: BufRead, T: CorpusRecord> Iterator for CorpusReader<R, T> {
    type Item = Result<T>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let line = match self.lines.next()? {
                Ok(l) => l,
                Err(e) => return Some(Err(e.into())),
            };
            if line.trim().is_empty() {
                continue;
            }
            self.report.lines += 1;
            match serde_json::from_str::<T>(&line) {
                Ok(rec) if rec.check().is_ok() => {
                    self.report.parsed += 1;
                    return Some(Ok(rec));
                }
                _ => self.report.skipped += 1,
            }
        }
    }
}

/// Streams raw tweets from a reader.
pub fn read_raw<R: BufRead>(reader: R) -> CorpusReader<R, RawTweet> {
    CorpusReader::new(reader)
}

/// Streams normalized tweets from a reader.
pub fn read_normalized<R: BufRead>(reader: R) -> CorpusReader<R, NormalizedTweet> {
    CorpusReader::new(reader)
}

fn read_all<T: CorpusRecord>(path: &Path) -> Result<(Vec<T>, ReadReport)> {
    let file = std::fs::File::open(path)
        .map_err(|e| Error::Format(format!("cannot open corpus {}: {e}", path.display())))?;
    let mut reader = CorpusReader::<_, T>::new(BufReader::new(file));
    let mut out = Vec::new();
    for rec in &mut reader {
        out.push(rec?);
    }
    let report = reader.report().clone();
    if report.mostly_malformed() {
        return Err(Error::Format(format!(
            "{}: {} of {} lines malformed",
            path.display(),
            report.skipped,
            report.lines
        )));
    }
    Ok((out, report))
}

/// Reads a whole raw corpus file, enforcing the malformed-majority rule.
pub fn read_raw_path(path: &Path) -> Result<(Vec<RawTweet>, ReadReport)> {
    read_all(path)
}

/// Reads a whole normalized corpus file, enforcing the malformed-majority rule.
pub fn read_normalized_path(path: &Path) -> Result<(Vec<NormalizedTweet>, ReadReport)> {
    read_all(path)
}

/// Writes records as JSON lines, one per record, streaming. Returns the line
/// count.
pub fn write_jsonl<T: Serialize, W: Write>(
    records: impl IntoIterator<Item = T>,
    writer: &mut W,
) -> Result<u64> {
    let mut n = 0u64;
    for rec in records {
        let line = serde_json::to_string(&rec)
            .map_err(|e| Error::Format(format!("serialize record: {e}")))?;
        writer.write_all(line.as_bytes())?;
        writer.write_all(b"\n")?;
        n += 1;
    }
    writer.flush()?;
    Ok(n)
}

/// Writes records as JSON lines to a file, creating or truncating it.
pub fn write_jsonl_path<T: Serialize>(path: &Path, records: &[T]) -> Result<u64> {
    let file = std::fs::File::create(path).map_err(|e| {
        Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    })?;
    let mut writer = std::io::BufWriter::new(file);
    write_jsonl(records.iter(), &mut writer)
}

/// Reads a JSON-lines file written by an earlier stage. Unlike raw corpus
/// ingestion, stage files are machine-produced, so any malformed line is a
/// fatal format error. Blank lines are permitted.
pub fn read_jsonl_path<T: serde::de::DeserializeOwned>(path: &Path) -> Result<Vec<T>> {
    let file = std::fs::File::open(path)
        .map_err(|e| Error::Format(format!("cannot open {}: {e}", path.display())))?;
    let reader = BufReader::new(file);
    let mut out = Vec::new();
    for (i, line) in std::io::BufRead::lines(reader).enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: T = serde_json::from_str(&line).map_err(|e| {
            Error::Format(format!("{} line {}: {e}", path.display(), i + 1))
        })?;
        out.push(rec);
    }
    Ok(out)
}

/// Drops tweets whose `normalized_text` exactly duplicates an earlier one;
/// first occurrence wins. Returns the number removed.
pub fn dedup_by_text(tweets: &mut Vec<NormalizedTweet>) -> u64 {
    let mut seen = std::collections::HashSet::new();
    let before = tweets.len();
    tweets.retain(|t| seen.insert(t.normalized_text.clone()));
    (before - tweets.len()) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(id: &str, author: &str, text: &str) -> String {
        serde_json::json!({"id": id, "author": author, "text": text}).to_string()
    }

    #[test]
    fn reads_valid_lines_in_order() {
        let data = [line("1", "a", "x"), line("2", "b", "y"), line("3", "c", "z")].join("\n");
        let (tweets, report) = {
            let mut r = read_raw(data.as_bytes());
            let t: Vec<_> = r.by_ref().map(|x| x.unwrap()).collect();
            (t, r.report().clone())
        };
        assert_eq!(tweets.iter().map(|t| t.id.as_str()).collect::<Vec<_>>(), ["1", "2", "3"]);
        assert_eq!(report.parsed, 3);
        assert_eq!(report.skipped, 0);
    }

    #[test]
    fn skips_malformed_lines_and_counts() {
        let data = format!("{}\nnot json at all\n{}", line("1", "a", "x"), line("2", "b", "y"));
        let mut r = read_raw(data.as_bytes());
        let tweets: Vec<_> = r.by_ref().map(|x| x.unwrap()).collect();
        assert_eq!(tweets.len(), 2);
        assert_eq!(r.report().skipped, 1);
    }

    #[test]
    fn missing_keys_and_empty_text_are_skipped() {
        let data = [
            r#"{"id":"1","author":"a"}"#.to_string(),        // no text
            r#"{"id":"2","text":"hi"}"#.to_string(),         // no author
            line("3", "c", "   "),                           // blank text
            line("4", "d", "ok"),
        ]
        .join("\n");
        let mut r = read_raw(data.as_bytes());
        let tweets: Vec<_> = r.by_ref().map(|x| x.unwrap()).collect();
        assert_eq!(tweets.len(), 1);
        assert_eq!(tweets[0].id, "4");
        assert_eq!(r.report().skipped, 3);
    }

    #[test]
    fn empty_file_yields_empty_sequence() {
        let mut r = read_raw("".as_bytes());
        assert!(r.next().is_none());
        assert_eq!(r.report().lines, 0);
    }

    #[test]
    fn majority_malformed_is_fatal() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.jsonl");
        std::fs::write(&path, format!("junk\nmore junk\n{}\n", line("1", "a", "x"))).unwrap();
        let err = read_raw_path(&path).unwrap_err();
        assert!(matches!(err, Error::Format(_)));
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn optional_keys_round_trip() {
        let src = r#"{"id":"1","author":"a","text":"x","lang":"en","timestamp":"2018-05-12T10:00:00Z","subjectivity":0.4,"polarity":-0.2}"#;
        let t: RawTweet = serde_json::from_str(src).unwrap();
        assert_eq!(t.lang_hint.as_deref(), Some("en"));
        assert_eq!(t.subjectivity, Some(0.4));
        let back = serde_json::to_string(&t).unwrap();
        let again: RawTweet = serde_json::from_str(&back).unwrap();
        assert_eq!(t, again);
    }

    #[test]
    fn duplicate_ids_are_kept() {
        let data = [line("1", "a", "x"), line("1", "b", "y")].join("\n");
        let tweets: Vec<_> = read_raw(data.as_bytes()).map(|x| x.unwrap()).collect();
        assert_eq!(tweets.len(), 2);
    }

    #[test]
    fn dedup_keeps_first_occurrence() {
        let mk = |id: &str, text: &str| NormalizedTweet {
            id: id.into(),
            author: "a".into(),
            original_text: text.into(),
            normalized_text: text.into(),
            removed: BTreeMap::new(),
            lang_hint: None,
            timestamp: None,
            subjectivity: None,
            polarity: None,
        };
        let mut tweets = vec![mk("1", "same"), mk("2", "same"), mk("3", "other")];
        let removed = dedup_by_text(&mut tweets);
        assert_eq!(removed, 1);
        assert_eq!(tweets.iter().map(|t| t.id.as_str()).collect::<Vec<_>>(), ["1", "3"]);
    }

    #[test]
    fn jsonl_writer_round_trips() {
        let tweets = vec![
            RawTweet {
                id: "1".into(),
                author: "a".into(),
                text: "hello".into(),
                lang_hint: None,
                timestamp: None,
                subjectivity: None,
                polarity: None,
            },
            RawTweet {
                id: "2".into(),
                author: "b".into(),
                text: "world".into(),
                lang_hint: Some("en".into()),
                timestamp: None,
                subjectivity: None,
                polarity: None,
            },
        ];
        let mut buf = Vec::new();
        let n = write_jsonl(tweets.iter(), &mut buf).unwrap();
        assert_eq!(n, 2);
        let back: Vec<_> = read_raw(buf.as_slice()).map(|x| x.unwrap()).collect();
        assert_eq!(back, tweets);
    }
}
