//! Lexical resources: scalar norms, emotion associations, sentiment priors.
//!
//! All lexicons are tab-separated text, keyed by lowercase lemma. Lookups
//! lowercase the query; duplicate lemmas are resolved last-wins and counted;
//! rows that fail to parse are skipped and counted. A lexicon that ends up
//! empty is unusable and rejected.

use std::collections::HashMap;
use std::io::BufRead;
use std::path::Path;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Emotion flag order used by the emotion lexicon file format.
pub const EMOTION_NAMES: [&str; 6] =
    ["joy", "anger", "surprise", "sadness", "disgust", "fear"];

/// Warnings accumulated while loading a lexicon.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LexiconReport {
    pub rows: u64,
    pub skipped: u64,
    pub duplicates: u64,
}

/// Lemma -> normalized score in [0, 1]. Raw scores are rescaled from the
/// declared raw range at load time: `(raw - min) / (max - min)`, clamped.
#[derive(Debug, Clone)]
pub struct ScalarLexicon<S: Scalar = f64> {
    pub name: String,
    pub raw_range: (f64, f64),
    entries: HashMap<String, S>,
}

impl<S: Scalar> ScalarLexicon<S> {
    /// Loads a `lemma<TAB>raw_score` file, normalizing scores into [0, 1].
    pub fn load<R: BufRead>(
        reader: R,
        name: &str,
        raw_range: (f64, f64),
    ) -> Result<(Self, LexiconReport)> {
        let (min, max) = raw_range;
        if !(max > min) {
            return Err(Error::Config(format!(
                "lexicon {name}: raw range must satisfy min < max, got ({min}, {max})"
            )));
        }
        let mut entries = HashMap::new();
        let mut report = LexiconReport::default();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            report.rows += 1;
            let mut cols = line.split('\t');
            let (lemma, raw) = match (cols.next(), cols.next(), cols.next()) {
                (Some(l), Some(r), None) if !l.trim().is_empty() => (l, r),
                _ => {
                    log::debug!("{name}: skipping row {} (bad column count)", idx + 1);
                    report.skipped += 1;
                    continue;
                }
            };
            let raw: f64 = match raw.trim().parse() {
                Ok(v) => v,
                Err(_) => {
                    report.skipped += 1;
                    continue;
                }
            };
            let score = ((raw - min) / (max - min)).clamp(0.0, 1.0);
            if entries.insert(lemma.trim().to_lowercase(), S::of_f64(score)).is_some() {
                report.duplicates += 1;
            }
        }
        if entries.is_empty() {
            return Err(Error::Resource(format!("lexicon {name}: no usable entries")));
        }
        Ok((ScalarLexicon { name: name.to_string(), raw_range, entries }, report))
    }

    pub fn load_path(path: &Path, name: &str, raw_range: (f64, f64)) -> Result<(Self, LexiconReport)> {
        let f = std::fs::File::open(path).map_err(|e| {
            Error::Resource(format!("cannot open lexicon {}: {e}", path.display()))
        })?;
        Self::load(std::io::BufReader::new(f), name, raw_range)
    }

    /// Score for a lemma, case-insensitively. `None` when absent.
    pub fn get(&self, lemma: &str) -> Option<S> {
        self.entries.get(&lemma.to_lowercase()).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// One emotion lexicon entry: polarity plus six binary emotion associations
/// in [`EMOTION_NAMES`] order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmotionEntry {
    pub positive: bool,
    pub emotions: [bool; 6],
}

impl EmotionEntry {
    /// Count of true flags including the presence flag itself.
    pub fn true_count(&self) -> u32 {
        1 + self.emotions.iter().filter(|&&b| b).count() as u32
    }
}

/// Lemma -> emotion associations, from `lemma<TAB>polarity<TAB>f1,...,f6`
/// rows where polarity is `positive` or `negative` and flags are `0`/`1`.
#[derive(Debug, Clone)]
pub struct EmotionLexicon {
    entries: HashMap<String, EmotionEntry>,
}

impl EmotionLexicon {
    pub fn load<R: BufRead>(reader: R, name: &str) -> Result<(Self, LexiconReport)> {
        let mut entries = HashMap::new();
        let mut report = LexiconReport::default();
        for line in reader.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            report.rows += 1;
            match parse_emotion_row(&line) {
                Some((lemma, entry)) => {
                    if entries.insert(lemma, entry).is_some() {
                        report.duplicates += 1;
                    }
                }
                None => report.skipped += 1,
            }
        }
        if entries.is_empty() {
            return Err(Error::Resource(format!("lexicon {name}: no usable entries")));
        }
        Ok((EmotionLexicon { entries }, report))
    }

    pub fn load_path(path: &Path, name: &str) -> Result<(Self, LexiconReport)> {
        let f = std::fs::File::open(path).map_err(|e| {
            Error::Resource(format!("cannot open lexicon {}: {e}", path.display()))
        })?;
        Self::load(std::io::BufReader::new(f), name)
    }

    pub fn get(&self, lemma: &str) -> Option<&EmotionEntry> {
        self.entries.get(&lemma.to_lowercase())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn parse_emotion_row(line: &str) -> Option<(String, EmotionEntry)> {
    let mut cols = line.split('\t');
    let lemma = cols.next()?.trim();
    let polarity = cols.next()?.trim();
    let flags = cols.next()?.trim();
    if cols.next().is_some() || lemma.is_empty() {
        return None;
    }
    let positive = match polarity {
        "positive" => true,
        "negative" => false,
        _ => return None,
    };
    let parts: Vec<&str> = flags.split(',').collect();
    if parts.len() != 6 {
        return None;
    }
    let mut emotions = [false; 6];
    for (slot, part) in emotions.iter_mut().zip(&parts) {
        *slot = match part.trim() {
            "1" => true,
            "0" => false,
            _ => return None,
        };
    }
    Some((lemma.to_lowercase(), EmotionEntry { positive, emotions }))
}

/// One sentiment lexicon entry: polarity in [-1, 1], subjectivity in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SentimentEntry<S: Scalar = f64> {
    pub polarity: S,
    pub subjectivity: S,
}

/// Lemma -> sentiment priors, from `lemma<TAB>polarity<TAB>subjectivity`
/// rows. Out-of-range values are skipped like any other malformed row.
#[derive(Debug, Clone)]
pub struct SentimentLexicon<S: Scalar = f64> {
    entries: HashMap<String, SentimentEntry<S>>,
}

impl<S: Scalar> SentimentLexicon<S> {
    pub fn load<R: BufRead>(reader: R, name: &str) -> Result<(Self, LexiconReport)> {
        let mut entries = HashMap::new();
        let mut report = LexiconReport::default();
        for line in reader.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            report.rows += 1;
            match parse_sentiment_row::<S>(&line) {
                Some((lemma, entry)) => {
                    if entries.insert(lemma, entry).is_some() {
                        report.duplicates += 1;
                    }
                }
                None => report.skipped += 1,
            }
        }
        if entries.is_empty() {
            return Err(Error::Resource(format!("lexicon {name}: no usable entries")));
        }
        Ok((SentimentLexicon { entries }, report))
    }

    pub fn load_path(path: &Path, name: &str) -> Result<(Self, LexiconReport)> {
        let f = std::fs::File::open(path).map_err(|e| {
            Error::Resource(format!("cannot open lexicon {}: {e}", path.display()))
        })?;
        Self::load(std::io::BufReader::new(f), name)
    }

    pub fn get(&self, lemma: &str) -> Option<&SentimentEntry<S>> {
        self.entries.get(&lemma.to_lowercase())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn parse_sentiment_row<S: Scalar>(line: &str) -> Option<(String, SentimentEntry<S>)> {
    let mut cols = line.split('\t');
    let lemma = cols.next()?.trim();
    let polarity: f64 = cols.next()?.trim().parse().ok()?;
    let subjectivity: f64 = cols.next()?.trim().parse().ok()?;
    if cols.next().is_some() || lemma.is_empty() {
        return None;
    }
    if !(-1.0..=1.0).contains(&polarity) || !(0.0..=1.0).contains(&subjectivity) {
        return None;
    }
    Some((
        lemma.to_lowercase(),
        SentimentEntry { polarity: S::of_f64(polarity), subjectivity: S::of_f64(subjectivity) },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_scores_normalize_to_unit_range() {
        let data = "calm\t1.0\nwild\t9.0\nmiddle\t5.0\n";
        let (lex, report) =
            ScalarLexicon::<f64>::load(data.as_bytes(), "arousal", (1.0, 9.0)).unwrap();
        assert_eq!(lex.get("calm"), Some(0.0));
        assert_eq!(lex.get("wild"), Some(1.0));
        assert_eq!(lex.get("middle"), Some(0.5));
        assert_eq!(report.skipped, 0);
    }

    #[test]
    fn out_of_range_raw_scores_clamp() {
        let data = "low\t0.0\nhigh\t12.0\n";
        let (lex, _) = ScalarLexicon::<f64>::load(data.as_bytes(), "x", (1.0, 9.0)).unwrap();
        assert_eq!(lex.get("low"), Some(0.0));
        assert_eq!(lex.get("high"), Some(1.0));
    }

    #[test]
    fn duplicates_last_wins_and_counted() {
        let data = "word\t1.0\nword\t9.0\n";
        let (lex, report) = ScalarLexicon::<f64>::load(data.as_bytes(), "x", (1.0, 9.0)).unwrap();
        assert_eq!(lex.get("word"), Some(1.0));
        assert_eq!(report.duplicates, 1);
    }

    #[test]
    fn bad_rows_are_skipped_and_counted() {
        let data = "good\t5.0\nbad\tnotanumber\nworse\n";
        let (lex, report) = ScalarLexicon::<f64>::load(data.as_bytes(), "x", (1.0, 9.0)).unwrap();
        assert_eq!(lex.len(), 1);
        assert_eq!(report.skipped, 2);
    }

    #[test]
    fn empty_lexicon_is_fatal() {
        let err = ScalarLexicon::<f64>::load("".as_bytes(), "x", (1.0, 9.0)).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn lookup_is_case_insensitive_on_both_sides() {
        let data = "JOIE\t5.0\n";
        let (lex, _) = ScalarLexicon::<f64>::load(data.as_bytes(), "x", (1.0, 9.0)).unwrap();
        assert_eq!(lex.get("Joie"), Some(0.5));
        assert_eq!(lex.get("missing"), None);
    }

    #[test]
    fn emotion_rows_parse_flags_in_order() {
        let data = "joie\tpositive\t1,0,0,0,0,0\npeur\tnegative\t0,0,1,0,0,1\n";
        let (lex, report) = EmotionLexicon::load(data.as_bytes(), "emotion").unwrap();
        let joie = lex.get("joie").unwrap();
        assert!(joie.positive);
        assert_eq!(joie.emotions, [true, false, false, false, false, false]);
        assert_eq!(joie.true_count(), 2);
        let peur = lex.get("peur").unwrap();
        assert!(!peur.positive);
        assert_eq!(peur.true_count(), 3);
        assert_eq!(report.skipped, 0);
    }

    #[test]
    fn emotion_wrong_flag_count_skips_row() {
        let data = "ok\tpositive\t1,0,0,0,0,0\nbad\tpositive\t1,0,0,0,0\n";
        let (lex, report) = EmotionLexicon::load(data.as_bytes(), "emotion").unwrap();
        assert_eq!(lex.len(), 1);
        assert_eq!(report.skipped, 1);
    }

    #[test]
    fn sentiment_rows_enforce_ranges() {
        let data = "good\t0.8\t0.9\ntoofar\t1.5\t0.5\nbadsubj\t0.0\t1.2\n";
        let (lex, report) = SentimentLexicon::<f64>::load(data.as_bytes(), "senti").unwrap();
        assert_eq!(lex.len(), 1);
        assert_eq!(report.skipped, 2);
        let e = lex.get("good").unwrap();
        assert_eq!(e.polarity, 0.8);
        assert_eq!(e.subjectivity, 0.9);
    }
}
