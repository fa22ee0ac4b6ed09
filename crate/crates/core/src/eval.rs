//! Run-file evaluation (NDCG, %arg), run pooling, and corpus statistics.
//!
//! Relevance comes either from case-insensitive regex patterns over tweet
//! texts or from judged (topic, tweet, rel) triples. NDCG defaults to binary
//! gains with a log2 discount; both knobs are swappable. A run with no
//! relevant ideal ordering (IDCG = 0) scores 0 rather than NaN so topic
//! aggregation stays total.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::path::Path;

use regex::{Regex, RegexBuilder};
use serde::Serialize;

use crate::enrich::EnrichedTweet;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// One run-file line: `topic_id Q0 tweet_id rank score run_tag`.
#[derive(Debug, Clone, PartialEq)]
pub struct RunEntry {
    pub topic_id: String,
    pub tweet_id: String,
    pub rank: u32,
    pub score: f64,
    pub run_tag: String,
}

/// Renders entries in the documented space-separated layout.
pub fn write_run_file(entries: &[RunEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        writeln!(out, "{} Q0 {} {} {:.6} {}", e.topic_id, e.tweet_id, e.rank, e.score, e.run_tag)
            .unwrap();
    }
    out
}

/// Parses a run file; malformed lines carry their line number.
pub fn read_run_file(text: &str) -> Result<Vec<RunEntry>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let cols: Vec<&str> = line.split_whitespace().collect();
        let [topic_id, q0, tweet_id, rank, score, run_tag] = cols.as_slice() else {
            return Err(Error::Format(format!(
                "run file line {lineno}: expected 6 columns, got {}",
                cols.len()
            )));
        };
        if *q0 != "Q0" {
            return Err(Error::Format(format!("run file line {lineno}: column 2 must be Q0")));
        }
        let rank: u32 = rank.parse().map_err(|_| {
            Error::Format(format!("run file line {lineno}: bad rank {rank:?}"))
        })?;
        let score: f64 = score.parse().map_err(|_| {
            Error::Format(format!("run file line {lineno}: bad score {score:?}"))
        })?;
        out.push(RunEntry {
            topic_id: topic_id.to_string(),
            tweet_id: tweet_id.to_string(),
            rank,
            score,
            run_tag: run_tag.to_string(),
        });
    }
    Ok(out)
}

pub fn read_run_file_path(path: &Path) -> Result<Vec<RunEntry>> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::Resource(format!("cannot open run file {}: {e}", path.display()))
    })?;
    read_run_file(&text)
}

/// Checks that each (run_tag, topic) group has ranks 1..m without gaps and
/// scores non-increasing with rank. Returns groups in first-appearance
/// order, each sorted by rank.
pub fn validate_run(entries: &[RunEntry]) -> Result<Vec<((String, String), Vec<&RunEntry>)>> {
    let mut order: Vec<(String, String)> = Vec::new();
    let mut groups: HashMap<(String, String), Vec<&RunEntry>> = HashMap::new();
    for e in entries {
        let key = (e.run_tag.clone(), e.topic_id.clone());
        groups
            .entry(key.clone())
            .or_insert_with(|| {
                order.push(key.clone());
                Vec::new()
            })
            .push(e);
    }
    let mut out = Vec::with_capacity(order.len());
    for key in order {
        let mut group = groups.remove(&key).unwrap();
        group.sort_by_key(|e| e.rank);
        for (i, e) in group.iter().enumerate() {
            if e.rank as usize != i + 1 {
                return Err(Error::Format(format!(
                    "run {} topic {}: ranks must be 1..{} without gaps (found rank {})",
                    key.0,
                    key.1,
                    group.len(),
                    e.rank
                )));
            }
            if i > 0 && e.score > group[i - 1].score {
                return Err(Error::Format(format!(
                    "run {} topic {}: score rises at rank {}",
                    key.0, key.1, e.rank
                )));
            }
        }
        out.push((key, group));
    }
    Ok(out)
}

/// How ground truth is expressed.
pub enum ReferenceSet {
    /// Case-insensitive patterns; any match makes a tweet relevant.
    Regex(Vec<Regex>),
    /// topic_id -> tweet_id -> judged relevance grade.
    Judged(BTreeMap<String, BTreeMap<String, u32>>),
}

/// Loads a reference file: a "regex" header followed by one pattern per
/// line, or a "qrels" header followed by `topic_id tweet_id rel` lines.
pub fn load_reference(path: &Path) -> Result<ReferenceSet> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::Resource(format!("cannot open reference file {}: {e}", path.display()))
    })?;
    let mut lines = text.lines().enumerate();
    let header = loop {
        match lines.next() {
            Some((_, l)) if l.trim().is_empty() => continue,
            Some((_, l)) => break l.trim().to_string(),
            None => return Err(Error::Format("reference file is empty".into())),
        }
    };
    match header.as_str() {
        "regex" => {
            let mut patterns = Vec::new();
            for (idx, line) in lines {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let re = RegexBuilder::new(line).case_insensitive(true).build().map_err(|e| {
                    Error::Format(format!("reference line {}: bad pattern: {e}", idx + 1))
                })?;
                patterns.push(re);
            }
            if patterns.is_empty() {
                return Err(Error::Resource("reference file has no patterns".into()));
            }
            Ok(ReferenceSet::Regex(patterns))
        }
        "qrels" => {
            let mut judged: BTreeMap<String, BTreeMap<String, u32>> = BTreeMap::new();
            let mut rows = 0u64;
            for (idx, line) in lines {
                let cols: Vec<&str> = line.split_whitespace().collect();
                if cols.is_empty() {
                    continue;
                }
                let [topic, tweet, rel] = cols.as_slice() else {
                    return Err(Error::Format(format!(
                        "reference line {}: expected \"topic_id tweet_id rel\"",
                        idx + 1
                    )));
                };
                let rel: u32 = rel.parse().map_err(|_| {
                    Error::Format(format!("reference line {}: bad relevance {rel:?}", idx + 1))
                })?;
                judged.entry(topic.to_string()).or_default().insert(tweet.to_string(), rel);
                rows += 1;
            }
            if rows == 0 {
                return Err(Error::Resource("reference file has no judgments".into()));
            }
            Ok(ReferenceSet::Judged(judged))
        }
        other => Err(Error::Format(format!(
            "reference file must start with \"regex\" or \"qrels\", got {other:?}"
        ))),
    }
}

/// Relevance grade of one entry. Regex references need the tweet's text and
/// yield 0/1; judged references look up the grade, defaulting to 0.
pub fn relevance(
    entry: &RunEntry,
    refs: &ReferenceSet,
    texts: Option<&HashMap<String, String>>,
) -> Result<f64> {
    match refs {
        ReferenceSet::Regex(patterns) => {
            let text = texts
                .and_then(|t| t.get(&entry.tweet_id))
                .ok_or_else(|| {
                    Error::Resource(format!(
                        "no text available for tweet {} (regex references need the corpus)",
                        entry.tweet_id
                    ))
                })?;
            Ok(patterns.iter().any(|p| p.is_match(text)) as u8 as f64)
        }
        ReferenceSet::Judged(topics) => Ok(topics
            .get(&entry.topic_id)
            .and_then(|ids| ids.get(&entry.tweet_id))
            .copied()
            .unwrap_or(0) as f64),
    }
}

/// Loads `id -> text` from a JSON-lines corpus, accepting raw tweets
/// ("text") and normalized ones ("normalized_text").
pub fn load_texts(path: &Path) -> Result<HashMap<String, String>> {
    let data = std::fs::read_to_string(path).map_err(|e| {
        Error::Resource(format!("cannot open corpus {}: {e}", path.display()))
    })?;
    let mut out = HashMap::new();
    for (idx, line) in data.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let v: serde_json::Value = serde_json::from_str(line).map_err(|e| {
            Error::Format(format!("corpus line {}: {e}", idx + 1))
        })?;
        let id = v.get("id").and_then(|x| x.as_str());
        let text = v
            .get("normalized_text")
            .or_else(|| v.get("text"))
            .and_then(|x| x.as_str());
        if let (Some(id), Some(text)) = (id, text) {
            out.insert(id.to_string(), text.to_string());
        }
    }
    Ok(out)
}

/// Gain applied to a relevance grade before discounting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gain {
    /// 1 for any grade > 0, else 0.
    Binary,
    /// The grade itself.
    Linear,
    /// 2^grade - 1.
    Exponential,
}

impl Gain {
    fn apply(self, rel: f64) -> f64 {
        match self {
            Gain::Binary => (rel > 0.0) as u8 as f64,
            Gain::Linear => rel,
            Gain::Exponential => rel.exp2() - 1.0,
        }
    }
}

/// Rank discount divisor at 1-based rank i.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Discount {
    /// log2(i + 1): the conventional NDCG discount.
    Log2,
    /// Plain reciprocal rank.
    Rank,
}

impl Discount {
    fn apply(self, rank: usize) -> f64 {
        match self {
            Discount::Log2 => ((rank + 1) as f64).log2(),
            Discount::Rank => rank as f64,
        }
    }
}

fn dcg(rels: &[f64], gain: Gain, discount: Discount) -> f64 {
    rels.iter()
        .enumerate()
        .map(|(i, &r)| gain.apply(r) / discount.apply(i + 1))
        .sum()
}

/// NDCG of relevance grades in rank order. The ideal ordering sorts all
/// grades descending; a cutoff truncates both the run and the ideal.
/// IDCG = 0 yields 0.
pub fn ndcg(rels: &[f64], gain: Gain, discount: Discount, cutoff: Option<usize>) -> f64 {
    let take = cutoff.unwrap_or(rels.len()).min(rels.len());
    let mut ideal = rels.to_vec();
    ideal.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let idcg = dcg(&ideal[..take], gain, discount);
    if idcg == 0.0 {
        return 0.0;
    }
    dcg(&rels[..take], gain, discount) / idcg
}

/// Percentage of entries with a positive grade; empty input is 0.
pub fn arg_percentage(rels: &[f64]) -> f64 {
    if rels.is_empty() {
        return 0.0;
    }
    let relevant = rels.iter().filter(|&&r| r > 0.0).count();
    100.0 * relevant as f64 / rels.len() as f64
}

/// Per-topic evaluation outcome.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TopicEval {
    pub run_tag: String,
    pub topic_id: String,
    pub entries: usize,
    pub relevant: usize,
    pub ndcg: f64,
    pub arg_percentage: f64,
}

/// Whole-run evaluation: per-topic rows plus aggregates. The aggregate NDCG
/// is the unweighted mean over evaluated topics; the aggregate %arg pools
/// every entry.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub topics: Vec<TopicEval>,
    pub ndcg_mean: f64,
    pub arg_percentage_overall: f64,
}

pub fn evaluate_run(
    entries: &[RunEntry],
    refs: &ReferenceSet,
    texts: Option<&HashMap<String, String>>,
    gain: Gain,
    discount: Discount,
    cutoff: Option<usize>,
) -> Result<EvalReport> {
    let groups = validate_run(entries)?;
    let mut topics = Vec::with_capacity(groups.len());
    let mut total_entries = 0usize;
    let mut total_relevant = 0usize;
    for ((run_tag, topic_id), group) in groups {
        let rels: Vec<f64> =
            group.iter().map(|e| relevance(e, refs, texts)).collect::<Result<_>>()?;
        let relevant = rels.iter().filter(|&&r| r > 0.0).count();
        total_entries += rels.len();
        total_relevant += relevant;
        topics.push(TopicEval {
            run_tag,
            topic_id,
            entries: rels.len(),
            relevant,
            ndcg: ndcg(&rels, gain, discount, cutoff),
            arg_percentage: arg_percentage(&rels),
        });
    }
    let ndcg_mean = if topics.is_empty() {
        0.0
    } else {
        topics.iter().map(|t| t.ndcg).sum::<f64>() / topics.len() as f64
    };
    let arg_percentage_overall = if total_entries == 0 {
        0.0
    } else {
        100.0 * total_relevant as f64 / total_entries as f64
    };
    Ok(EvalReport { topics, ndcg_mean, arg_percentage_overall })
}

/// Union of tweet ids at rank <= depth in any run, per topic: the skeleton
/// of an annotation pool.
pub fn pool_runs(runs: &[Vec<RunEntry>], depth: u32) -> Result<BTreeMap<String, BTreeSet<String>>> {
    if runs.is_empty() {
        return Err(Error::Config("pooling needs at least one run".into()));
    }
    let mut pool: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for run in runs {
        for e in run {
            if e.rank <= depth {
                pool.entry(e.topic_id.clone()).or_default().insert(e.tweet_id.clone());
            }
        }
    }
    Ok(pool)
}

/// Corpus-level statistics in the shape of a corpus summary table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatsReport {
    pub n_tweets: u64,
    pub n_unique_authors: u64,
    pub n_tokens: u64,
    pub n_unique_lemmas: u64,
    pub subjectivity_avg: f64,
    pub polarity_magnitude_avg: f64,
    pub author_ratio: f64,
}

/// Exact counts and means over an enriched corpus. Empty input gives the
/// all-zero report.
pub fn corpus_stats<S: Scalar>(tweets: &[EnrichedTweet<S>]) -> StatsReport {
    let n_tweets = tweets.len() as u64;
    let mut authors = BTreeSet::new();
    let mut lemmas = BTreeSet::new();
    let mut n_tokens = 0u64;
    let mut subj_sum = 0.0f64;
    let mut pol_sum = 0.0f64;
    for t in tweets {
        authors.insert(t.base.author.as_str());
        n_tokens += t.tokens.len() as u64;
        for tok in &t.tokens {
            lemmas.insert(tok.lemma.to_lowercase());
        }
        subj_sum += t.subjectivity.as_f64();
        pol_sum += t.polarity.as_f64().abs();
    }
    let (subjectivity_avg, polarity_magnitude_avg, author_ratio) = if n_tweets == 0 {
        (0.0, 0.0, 0.0)
    } else {
        let n = n_tweets as f64;
        (subj_sum / n, pol_sum / n, authors.len() as f64 / n)
    };
    StatsReport {
        n_tweets,
        n_unique_authors: authors.len() as u64,
        n_tokens,
        n_unique_lemmas: lemmas.len() as u64,
        subjectivity_avg,
        polarity_magnitude_avg,
        author_ratio,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::NormalizedTweet;
    use crate::enrich::Token;

    fn close(a: f64, b: f64) {
        assert!((a - b).abs() < 1e-9, "{a} vs {b}");
    }

    #[test]
    fn ndcg_hand_cases() {
        close(ndcg(&[1.0, 1.0, 1.0], Gain::Binary, Discount::Log2, None), 1.0);
        close(ndcg(&[0.0, 0.0], Gain::Binary, Discount::Log2, None), 0.0);
        close(ndcg(&[], Gain::Binary, Discount::Log2, None), 0.0);
        let v = ndcg(&[1.0, 0.0, 1.0], Gain::Binary, Discount::Log2, None);
        close(v, 1.5 / (1.0 + 1.0 / 3f64.log2()));
        assert!((v - 0.91972).abs() < 1e-5);
    }

    #[test]
    fn ndcg_is_one_iff_relevant_first() {
        close(ndcg(&[1.0, 1.0, 0.0, 0.0], Gain::Binary, Discount::Log2, None), 1.0);
        assert!(ndcg(&[1.0, 0.0, 1.0, 0.0], Gain::Binary, Discount::Log2, None) < 1.0);
    }

    #[test]
    fn ndcg_cutoff_truncates_run_and_ideal() {
        let v = ndcg(&[1.0, 0.0, 1.0], Gain::Binary, Discount::Log2, Some(2));
        close(v, 1.0 / (1.0 + 1.0 / 3f64.log2()));
        // Cutoff beyond length behaves like no cutoff.
        close(
            ndcg(&[1.0, 0.0, 1.0], Gain::Binary, Discount::Log2, Some(10)),
            ndcg(&[1.0, 0.0, 1.0], Gain::Binary, Discount::Log2, None),
        );
    }

    #[test]
    fn upward_swap_of_relevant_item_never_hurts() {
        let base = [0.0, 1.0, 1.0, 0.0, 1.0];
        let v0 = ndcg(&base, Gain::Binary, Discount::Log2, None);
        let swapped = [1.0, 0.0, 1.0, 0.0, 1.0];
        let v1 = ndcg(&swapped, Gain::Binary, Discount::Log2, None);
        assert!(v1 >= v0);
    }

    #[test]
    fn graded_gains_and_rank_discount() {
        close(ndcg(&[3.0, 1.0], Gain::Linear, Discount::Log2, None), 1.0);
        let worse = ndcg(&[1.0, 3.0], Gain::Linear, Discount::Log2, None);
        assert!(worse < 1.0);
        close(
            ndcg(&[1.0, 3.0], Gain::Exponential, Discount::Rank, None),
            (1.0 + 7.0 / 2.0) / (7.0 + 1.0 / 2.0),
        );
    }

    #[test]
    fn arg_percentage_cases() {
        let mut rels = vec![1.0; 50];
        rels.extend(vec![0.0; 50]);
        close(arg_percentage(&rels), 50.0);
        close(arg_percentage(&[]), 0.0);
        let mut shuffled = rels.clone();
        shuffled.reverse();
        close(arg_percentage(&shuffled), arg_percentage(&rels));
    }

    fn entry(topic: &str, id: &str, rank: u32, score: f64) -> RunEntry {
        RunEntry {
            topic_id: topic.into(),
            tweet_id: id.into(),
            rank,
            score,
            run_tag: "run1.en".into(),
        }
    }

    #[test]
    fn run_file_round_trip() {
        let entries = vec![entry("cannes", "t1", 1, 0.9), entry("cannes", "t2", 2, 0.5)];
        let text = write_run_file(&entries);
        assert!(text.starts_with("cannes Q0 t1 1 0.900000 run1.en\n"));
        let back = read_run_file(&text).unwrap();
        assert_eq!(back, entries);
    }

    #[test]
    fn run_validation_catches_gaps_and_rises() {
        let gap = vec![entry("c", "a", 1, 0.9), entry("c", "b", 3, 0.5)];
        assert!(matches!(validate_run(&gap), Err(Error::Format(_))));
        let rise = vec![entry("c", "a", 1, 0.5), entry("c", "b", 2, 0.9)];
        assert!(matches!(validate_run(&rise), Err(Error::Format(_))));
        let ok = vec![entry("c", "a", 1, 0.9), entry("c", "b", 2, 0.9)];
        assert!(validate_run(&ok).is_ok());
    }

    #[test]
    fn run_file_parse_errors_carry_line_numbers() {
        let err = read_run_file("cannes Q0 t1 1 0.9 tag\ncannes XX t2 2 0.5 tag\n").unwrap_err();
        let msg = format!("{err}");
        assert!(msg.contains("line 2"), "{msg}");
    }

    fn regex_refs(patterns: &[&str]) -> ReferenceSet {
        ReferenceSet::Regex(
            patterns
                .iter()
                .map(|p| RegexBuilder::new(p).case_insensitive(true).build().unwrap())
                .collect(),
        )
    }

    #[test]
    fn regex_relevance_needs_text() {
        let refs = regex_refs(&["because"]);
        let mut texts = HashMap::new();
        texts.insert("t1".to_string(), "I love X because Y".to_string());
        let hit = relevance(&entry("c", "t1", 1, 0.9), &refs, Some(&texts)).unwrap();
        close(hit, 1.0);
        let err = relevance(&entry("c", "missing", 1, 0.9), &refs, Some(&texts)).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn regex_relevance_is_case_insensitive() {
        let refs = regex_refs(&["BECAUSE"]);
        let mut texts = HashMap::new();
        texts.insert("t1".to_string(), "x because y".to_string());
        close(relevance(&entry("c", "t1", 1, 0.9), &refs, Some(&texts)).unwrap(), 1.0);
        texts.insert("t2".to_string(), "no causal cue".to_string());
        close(relevance(&entry("c", "t2", 1, 0.9), &refs, Some(&texts)).unwrap(), 0.0);
    }

    #[test]
    fn judged_relevance_looks_up_topic_and_id() {
        let mut topics = BTreeMap::new();
        topics.insert(
            "cannes".to_string(),
            BTreeMap::from([("t1".to_string(), 2u32), ("t2".to_string(), 0u32)]),
        );
        let refs = ReferenceSet::Judged(topics);
        close(relevance(&entry("cannes", "t1", 1, 0.9), &refs, None).unwrap(), 2.0);
        close(relevance(&entry("cannes", "t2", 2, 0.5), &refs, None).unwrap(), 0.0);
        close(relevance(&entry("avignon", "t1", 1, 0.9), &refs, None).unwrap(), 0.0);
    }

    #[test]
    fn evaluate_run_aggregates_topics() {
        let entries = vec![
            entry("a", "t1", 1, 0.9),
            entry("a", "t2", 2, 0.8),
            entry("b", "t3", 1, 0.7),
            entry("b", "t4", 2, 0.6),
        ];
        let mut topics = BTreeMap::new();
        topics.insert("a".to_string(), BTreeMap::from([("t1".to_string(), 1u32)]));
        topics.insert(
            "b".to_string(),
            BTreeMap::from([("t3".to_string(), 1u32), ("t4".to_string(), 1u32)]),
        );
        let refs = ReferenceSet::Judged(topics);
        let report =
            evaluate_run(&entries, &refs, None, Gain::Binary, Discount::Log2, None).unwrap();
        assert_eq!(report.topics.len(), 2);
        close(report.topics[0].ndcg, 1.0);
        close(report.topics[0].arg_percentage, 50.0);
        close(report.topics[1].ndcg, 1.0);
        close(report.ndcg_mean, 1.0);
        close(report.arg_percentage_overall, 75.0);
    }

    #[test]
    fn pooling_unions_prefixes() {
        let run_a = vec![entry("c", "t1", 1, 0.9), entry("c", "t2", 2, 0.8)];
        let run_b = vec![entry("c", "t3", 1, 0.7), entry("c", "t2", 2, 0.6)];
        let pool = pool_runs(&[run_a.clone(), run_b.clone()], 10).unwrap();
        let ids: Vec<&str> = pool["c"].iter().map(String::as_str).collect();
        assert_eq!(ids, vec!["t1", "t2", "t3"]);
        let shallow = pool_runs(&[run_a, run_b], 1).unwrap();
        assert_eq!(shallow["c"].len(), 2);
        assert!(pool_runs(&[], 10).is_err());
    }

    fn enriched(id: &str, author: &str, lemmas: &[&str], subj: f64, pol: f64) -> EnrichedTweet<f64> {
        EnrichedTweet {
            base: NormalizedTweet {
                id: id.into(),
                author: author.into(),
                original_text: String::new(),
                normalized_text: String::new(),
                removed: Default::default(),
                lang_hint: None,
                timestamp: None,
                subjectivity: None,
                polarity: None,
            },
            tokens: lemmas.iter().map(|l| Token::new(l, "NN", l)).collect(),
            subjectivity: subj,
            polarity: pol,
        }
    }

    #[test]
    fn corpus_stats_exact_counts() {
        let tweets = vec![
            enriched("1", "alice", &["Sound", "loud"], 0.4, -0.5),
            enriched("2", "bob", &["sound", "stage"], 0.2, 0.1),
            enriched("3", "alice", &["quiet"], 0.6, 0.0),
            enriched("4", "carol", &[], 0.0, 0.8),
        ];
        let s = corpus_stats(&tweets);
        assert_eq!(s.n_tweets, 4);
        assert_eq!(s.n_unique_authors, 3);
        assert_eq!(s.n_tokens, 5);
        // "Sound" and "sound" fold to one lemma.
        assert_eq!(s.n_unique_lemmas, 4);
        close(s.subjectivity_avg, 1.2 / 4.0);
        close(s.polarity_magnitude_avg, 1.4 / 4.0);
        close(s.author_ratio, 0.75);
    }

    #[test]
    fn corpus_stats_empty_is_all_zero() {
        let s = corpus_stats::<f64>(&[]);
        assert_eq!(s.n_tweets, 0);
        close(s.author_ratio, 0.0);
        close(s.subjectivity_avg, 0.0);
    }

    #[test]
    fn distinct_author_per_tweet_ratio_is_one() {
        let tweets = vec![
            enriched("1", "a", &[], 0.0, 0.0),
            enriched("2", "b", &[], 0.0, 0.0),
        ];
        close(corpus_stats(&tweets).author_ratio, 1.0);
        let halved = vec![
            enriched("1", "a", &[], 0.0, 0.0),
            enriched("2", "a", &[], 0.0, 0.0),
            enriched("3", "b", &[], 0.0, 0.0),
            enriched("4", "b", &[], 0.0, 0.0),
        ];
        close(corpus_stats(&halved).author_ratio, 0.5);
    }
}
