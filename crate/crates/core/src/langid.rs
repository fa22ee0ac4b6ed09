//! Character n-gram language identification.
//!
//! A multinomial model over character 1..=3-grams with additive smoothing:
//! small, fast, and trainable from a plain `class<TAB>text` file. Tweets are
//! partitioned into the declared classes; anything uncertain lands in
//! "other". All counting uses ordered maps so training and classification
//! are bit-for-bit deterministic regardless of input order.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::path::Path;

use crate::corpus::NormalizedTweet;
use crate::error::{Error, Result};

/// Reject class for texts too short to carry any n-gram.
pub const OTHER_CLASS: &str = "other";

/// Confidence floor used by the pipeline when none is configured.
pub const DEFAULT_MIN_CONFIDENCE: f64 = 0.5;

const MODEL_MAGIC: &str = "langid-model v1";

/// Trained model: per-class log-priors plus per-n-gram per-class
/// log-probabilities over a shared vocabulary.
#[derive(Debug, Clone, PartialEq)]
pub struct LangModel {
    classes: Vec<String>,
    log_priors: Vec<f64>,
    features: BTreeMap<String, Vec<f64>>,
    ngram_min: usize,
    ngram_max: usize,
}

/// One classification outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct LangPrediction {
    pub lang: String,
    pub confidence: f64,
}

/// Lowercases, maps every whitespace character to a plain space, and counts
/// character n-grams for lengths `nmin..=nmax`.
fn ngram_counts(text: &str, nmin: usize, nmax: usize) -> BTreeMap<String, u64> {
    let chars: Vec<char> = text
        .to_lowercase()
        .chars()
        .map(|c| if c.is_whitespace() { ' ' } else { c })
        .collect();
    let mut counts = BTreeMap::new();
    for n in nmin..=nmax {
        if chars.len() < n {
            break;
        }
        for window in chars.windows(n) {
            *counts.entry(window.iter().collect::<String>()).or_insert(0) += 1;
        }
    }
    counts
}

/// Trains a model on `(text, class)` pairs. Every declared class needs at
/// least one example; labels outside `classes` are rejected.
pub fn train_langid<'a, I>(
    labeled: I,
    classes: &[&str],
    ngram_range: (usize, usize),
    smoothing: f64,
) -> Result<LangModel>
where
    I: IntoIterator<Item = (&'a str, &'a str)>,
{
    let (nmin, nmax) = ngram_range;
    if nmin == 0 || nmin > nmax {
        return Err(Error::Config(format!(
            "ngram range must satisfy 1 <= min <= max, got ({nmin}, {nmax})"
        )));
    }
    if !(smoothing > 0.0) {
        return Err(Error::Config(format!("smoothing must be positive, got {smoothing}")));
    }
    if classes.is_empty() {
        return Err(Error::Config("at least one class must be declared".into()));
    }

    let index: BTreeMap<&str, usize> =
        classes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    if index.len() != classes.len() {
        return Err(Error::Config("duplicate class in class list".into()));
    }
    let mut doc_counts = vec![0u64; classes.len()];
    let mut ngrams: BTreeMap<String, Vec<u64>> = BTreeMap::new();
    for (text, class) in labeled {
        let Some(&ci) = index.get(class) else {
            return Err(Error::Config(format!("example labeled with undeclared class {class:?}")));
        };
        doc_counts[ci] += 1;
        for (gram, count) in ngram_counts(text, nmin, nmax) {
            ngrams.entry(gram).or_insert_with(|| vec![0; classes.len()])[ci] += count;
        }
    }
    if let Some(ci) = doc_counts.iter().position(|&c| c == 0) {
        return Err(Error::Config(format!("class {:?} has no training examples", classes[ci])));
    }

    let total_docs: u64 = doc_counts.iter().sum();
    let log_priors: Vec<f64> =
        doc_counts.iter().map(|&c| (c as f64 / total_docs as f64).ln()).collect();

    let vocab = ngrams.len() as f64;
    let mut totals = vec![0u64; classes.len()];
    for row in ngrams.values() {
        for (t, &c) in totals.iter_mut().zip(row) {
            *t += c;
        }
    }
    let features = ngrams
        .into_iter()
        .map(|(gram, row)| {
            let logp = row
                .iter()
                .zip(&totals)
                .map(|(&c, &t)| ((c as f64 + smoothing) / (t as f64 + smoothing * vocab)).ln())
                .collect();
            (gram, logp)
        })
        .collect();

    Ok(LangModel {
        classes: classes.iter().map(|c| c.to_string()).collect(),
        log_priors,
        features,
        ngram_min: nmin,
        ngram_max: nmax,
    })
}

impl LangModel {
    pub fn classes(&self) -> &[String] {
        &self.classes
    }

    pub fn ngram_range(&self) -> (usize, usize) {
        (self.ngram_min, self.ngram_max)
    }

    pub fn feature_count(&self) -> usize {
        self.features.len()
    }

    /// Class posteriors for a text, in class order. `None` when the text
    /// carries no n-gram of the minimum length.
    pub fn posteriors(&self, text: &str) -> Option<Vec<f64>> {
        let counts = ngram_counts(text, self.ngram_min, self.ngram_max);
        if counts.is_empty() {
            return None;
        }
        let mut scores = self.log_priors.clone();
        for (gram, count) in counts {
            // N-grams unseen in training carry no evidence for any class.
            if let Some(row) = self.features.get(&gram) {
                for (s, &logp) in scores.iter_mut().zip(row) {
                    *s += count as f64 * logp;
                }
            }
        }
        let max = scores.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let mut post: Vec<f64> = scores.iter().map(|&s| (s - max).exp()).collect();
        let z: f64 = post.iter().sum();
        for p in &mut post {
            *p /= z;
        }
        Some(post)
    }

    /// Argmax over class posteriors. Ties break toward the earlier class.
    /// Text shorter than the minimum n-gram is ("other", 0.0).
    pub fn classify(&self, text: &str) -> LangPrediction {
        let Some(post) = self.posteriors(text) else {
            return LangPrediction { lang: OTHER_CLASS.to_string(), confidence: 0.0 };
        };
        let mut best = 0;
        for (i, &p) in post.iter().enumerate().skip(1) {
            if p > post[best] {
                best = i;
            }
        }
        LangPrediction { lang: self.classes[best].clone(), confidence: post[best] }
    }

    /// Writes the diffable text format: magic line, classes, log-priors,
    /// then one `ngram<TAB>logp...` row per vocabulary entry, sorted.
    pub fn save<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{MODEL_MAGIC}")?;
        writeln!(w, "{}", self.classes.join("\t"))?;
        let priors: Vec<String> = self.log_priors.iter().map(|p| format!("{p:.16e}")).collect();
        writeln!(w, "{}", priors.join("\t"))?;
        for (gram, row) in &self.features {
            write!(w, "{gram}")?;
            for logp in row {
                write!(w, "\t{logp:.16e}")?;
            }
            writeln!(w)?;
        }
        Ok(())
    }

    pub fn save_path(&self, path: &Path) -> Result<()> {
        let f = std::fs::File::create(path)?;
        let mut w = std::io::BufWriter::new(f);
        self.save(&mut w)?;
        w.flush()?;
        Ok(())
    }

    /// Loads the text format written by [`LangModel::save`]. The n-gram
    /// range is inferred from the key lengths.
    pub fn load<R: BufRead>(reader: R) -> Result<Self> {
        let mut lines = reader.lines();
        let magic = lines.next().transpose()?.unwrap_or_default();
        if magic.trim_end() != MODEL_MAGIC {
            return Err(Error::Format(format!(
                "not a language model file (expected {MODEL_MAGIC:?} header)"
            )));
        }
        let classes: Vec<String> = lines
            .next()
            .transpose()?
            .ok_or_else(|| Error::Format("language model missing class line".into()))?
            .split('\t')
            .map(str::to_string)
            .collect();
        if classes.iter().any(|c| c.is_empty()) {
            return Err(Error::Format("language model has an empty class name".into()));
        }
        let prior_line = lines
            .next()
            .transpose()?
            .ok_or_else(|| Error::Format("language model missing prior line".into()))?;
        let log_priors = parse_floats(&prior_line, classes.len(), 3)?;

        let mut features = BTreeMap::new();
        let mut lineno = 3;
        for line in lines {
            let line = line?;
            lineno += 1;
            if line.is_empty() {
                continue;
            }
            let (gram, rest) = line.split_once('\t').ok_or_else(|| {
                Error::Format(format!("language model line {lineno}: missing feature columns"))
            })?;
            if gram.is_empty() {
                return Err(Error::Format(format!("language model line {lineno}: empty n-gram")));
            }
            let row = parse_floats(rest, classes.len(), lineno)?;
            features.insert(gram.to_string(), row);
        }
        if features.is_empty() {
            return Err(Error::Format("language model has no feature rows".into()));
        }
        let ngram_min = features.keys().map(|g| g.chars().count()).min().unwrap();
        let ngram_max = features.keys().map(|g| g.chars().count()).max().unwrap();
        Ok(LangModel { classes, log_priors, features, ngram_min, ngram_max })
    }

    pub fn load_path(path: &Path) -> Result<Self> {
        let f = std::fs::File::open(path).map_err(|e| {
            Error::Resource(format!("cannot open language model {}: {e}", path.display()))
        })?;
        Self::load(std::io::BufReader::new(f))
    }
}

fn parse_floats(s: &str, expect: usize, lineno: usize) -> Result<Vec<f64>> {
    let vals: Vec<f64> = s
        .split('\t')
        .map(|v| {
            v.trim().parse::<f64>().map_err(|_| {
                Error::Format(format!("language model line {lineno}: bad float {v:?}"))
            })
        })
        .collect::<Result<_>>()?;
    if vals.len() != expect {
        return Err(Error::Format(format!(
            "language model line {lineno}: expected {expect} values, got {}",
            vals.len()
        )));
    }
    Ok(vals)
}

/// Reads a `class<TAB>text` training file. Malformed rows are skipped.
pub fn read_training_file(path: &Path) -> Result<Vec<(String, String)>> {
    let data = std::fs::read_to_string(path).map_err(|e| {
        Error::Resource(format!("cannot open training corpus {}: {e}", path.display()))
    })?;
    let mut out = Vec::new();
    for line in data.lines() {
        if line.trim().is_empty() {
            continue;
        }
        if let Some((class, text)) = line.split_once('\t') {
            if !class.trim().is_empty() && !text.trim().is_empty() {
                out.push((class.trim().to_string(), text.to_string()));
            }
        }
    }
    if out.is_empty() {
        return Err(Error::Resource(format!(
            "training corpus {} has no usable rows",
            path.display()
        )));
    }
    Ok(out)
}

/// Partitions tweets by predicted language. A tweet lands in its predicted
/// class iff that class is a target and confidence clears the floor;
/// everything else is dropped. Every target key is present in the output,
/// possibly empty, and input order is preserved within each class.
pub fn filter_language(
    tweets: Vec<NormalizedTweet>,
    model: &LangModel,
    targets: &[&str],
    min_confidence: f64,
) -> Result<BTreeMap<String, Vec<NormalizedTweet>>> {
    for t in targets {
        if !model.classes.iter().any(|c| c == t) {
            return Err(Error::Config(format!("target language {t:?} not in model classes")));
        }
    }
    let mut out: BTreeMap<String, Vec<NormalizedTweet>> =
        targets.iter().map(|t| (t.to_string(), Vec::new())).collect();
    for tweet in tweets {
        let pred = model.classify(&tweet.normalized_text);
        if pred.confidence >= min_confidence {
            if let Some(bucket) = out.get_mut(&pred.lang) {
                bucket.push(tweet);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> LangModel {
        let data = [("aaaa", "x"), ("aaab", "x"), ("bbbb", "y"), ("bbba", "y")];
        train_langid(data, &["x", "y"], (1, 3), 1.0).unwrap()
    }

    #[test]
    fn separable_toy_classes_classify_correctly() {
        let m = toy();
        assert_eq!(m.classify("aaa").lang, "x");
        assert_eq!(m.classify("bbb").lang, "y");
        assert!(m.classify("aaa").confidence > 0.5);
    }

    #[test]
    fn per_class_probabilities_sum_to_one() {
        let m = toy();
        for ci in 0..2 {
            let sum: f64 = m.features.values().map(|row| row[ci].exp()).sum();
            assert!((sum - 1.0).abs() < 1e-6, "class {ci} sums to {sum}");
        }
    }

    #[test]
    fn posteriors_sum_to_one() {
        let m = toy();
        let post = m.posteriors("abab").unwrap();
        let sum: f64 = post.iter().sum();
        assert!((sum - 1.0).abs() < 1e-6);
        assert!(post.iter().all(|&p| (0.0..=1.0).contains(&p)));
    }

    #[test]
    fn short_text_is_other_with_zero_confidence() {
        let m = toy();
        let p = m.classify("");
        assert_eq!(p.lang, "other");
        assert_eq!(p.confidence, 0.0);
    }

    #[test]
    fn ties_break_toward_earlier_class() {
        // Mirrored training data makes "ab" exactly symmetric.
        let data = [("ab", "x"), ("ba", "y")];
        let m = train_langid(data, &["x", "y"], (1, 1), 1.0).unwrap();
        assert_eq!(m.classify("ab").lang, "x");
    }

    #[test]
    fn training_is_input_order_independent() {
        let fwd = [("aaaa", "x"), ("bbbb", "y"), ("abab", "x")];
        let rev = [("abab", "x"), ("bbbb", "y"), ("aaaa", "x")];
        let m1 = train_langid(fwd, &["x", "y"], (1, 3), 1.0).unwrap();
        let m2 = train_langid(rev, &["x", "y"], (1, 3), 1.0).unwrap();
        assert_eq!(m1, m2);
    }

    #[test]
    fn missing_class_examples_are_fatal() {
        let err = train_langid([("aaaa", "x")], &["x", "y"], (1, 3), 1.0).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn undeclared_label_is_fatal() {
        let err = train_langid([("aaaa", "z")], &["x", "y"], (1, 3), 1.0).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn bad_hyperparameters_are_fatal() {
        assert!(train_langid([("a", "x")], &["x"], (0, 3), 1.0).is_err());
        assert!(train_langid([("a", "x")], &["x"], (3, 1), 1.0).is_err());
        assert!(train_langid([("a", "x")], &["x"], (1, 3), 0.0).is_err());
    }

    #[test]
    fn save_load_round_trip_is_exact() {
        let m = toy();
        let mut buf = Vec::new();
        m.save(&mut buf).unwrap();
        let loaded = LangModel::load(buf.as_slice()).unwrap();
        assert_eq!(m, loaded);
        assert_eq!(loaded.ngram_range(), (1, 3));
        assert_eq!(m.classify("aabb"), loaded.classify("aabb"));
    }

    #[test]
    fn load_rejects_wrong_header() {
        let err = LangModel::load("not-a-model\nx\t y\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Format(_)));
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn load_rejects_bad_arity() {
        let mut buf = Vec::new();
        toy().save(&mut buf).unwrap();
        let mut text = String::from_utf8(buf).unwrap();
        text.push_str("zz\t-1.0\n"); // one column short
        let err = LangModel::load(text.as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Format(_)));
    }

    #[test]
    fn whitespace_maps_to_plain_space() {
        let counts = ngram_counts("a\tb", 1, 2);
        assert_eq!(counts.get(" "), Some(&1));
        assert_eq!(counts.get("a "), Some(&1));
        assert!(counts.keys().all(|k| !k.contains('\t')));
    }

    fn tweet(id: &str, text: &str) -> NormalizedTweet {
        NormalizedTweet {
            id: id.into(),
            author: "a".into(),
            original_text: text.into(),
            normalized_text: text.into(),
            removed: Default::default(),
            lang_hint: None,
            timestamp: None,
            subjectivity: None,
            polarity: None,
        }
    }

    #[test]
    fn filter_partitions_and_preserves_order() {
        let m = toy();
        let tweets =
            vec![tweet("1", "aaaa"), tweet("2", "bbbb"), tweet("3", "aaab"), tweet("4", "")];
        let parts = filter_language(tweets, &m, &["x", "y"], 0.0).unwrap();
        let ids =
            |k: &str| parts[k].iter().map(|t| t.id.clone()).collect::<Vec<_>>();
        assert_eq!(ids("x"), vec!["1", "3"]);
        assert_eq!(ids("y"), vec!["2"]);
        // "" predicts other/0.0 which is not a target; dropped even at floor 0.
        assert_eq!(parts.values().map(Vec::len).sum::<usize>(), 3);
    }

    #[test]
    fn raising_confidence_floor_never_adds_tweets() {
        let m = toy();
        let mk = || vec![tweet("1", "aaba"), tweet("2", "abab"), tweet("3", "bb")];
        let lo = filter_language(mk(), &m, &["x", "y"], 0.0).unwrap();
        let hi = filter_language(mk(), &m, &["x", "y"], 0.9).unwrap();
        for (k, v) in &hi {
            let lo_ids: Vec<&str> = lo[k].iter().map(|t| t.id.as_str()).collect();
            for t in v {
                assert!(lo_ids.contains(&t.id.as_str()));
            }
            assert!(v.len() <= lo[k].len());
        }
    }

    #[test]
    fn unknown_target_is_config_error() {
        let err = filter_language(vec![], &toy(), &["en"], 0.5).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }
}
