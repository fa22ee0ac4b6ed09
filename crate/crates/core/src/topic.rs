//! Keyword-based topic detection and per-topic partitioning.
//!
//! A topic is a disjunction of conjunctive keyword sets: a tweet matches if
//! any one set has all of its tokens present. Tokens match case-insensitively
//! with diacritics folded, at word boundaries by default; a token spelled
//! `*so*` in config instead matches as a substring, which catches agglutinated
//! hashtag bodies like "FestivalCannes".

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::corpus::NormalizedTweet;
use crate::error::{Error, Result};
use crate::fold::{fold, words};

/// One topic as configured: id, language, and keyword sets (OR of ANDs).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopicSpec {
    pub topic_id: String,
    pub language: String,
    #[serde(rename = "keywords")]
    pub keyword_sets: Vec<Vec<String>>,
}

impl TopicSpec {
    pub fn validate(&self) -> Result<()> {
        if self.topic_id.trim().is_empty() {
            return Err(Error::Config("topic with empty topic_id".into()));
        }
        if self.keyword_sets.is_empty() {
            return Err(Error::Config(format!("topic {}: no keyword sets", self.topic_id)));
        }
        for set in &self.keyword_sets {
            if set.is_empty() {
                return Err(Error::Config(format!("topic {}: empty keyword set", self.topic_id)));
            }
            for token in set {
                let bare = token.trim_matches('*');
                if bare.is_empty() || bare.chars().any(char::is_whitespace) {
                    return Err(Error::Config(format!(
                        "topic {}: keyword {token:?} must be one non-empty word",
                        self.topic_id
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Loads topic specs from a JSON array file and validates each.
pub fn load_topics(path: &Path) -> Result<Vec<TopicSpec>> {
    let data = std::fs::read_to_string(path).map_err(|e| {
        Error::Resource(format!("cannot open topics file {}: {e}", path.display()))
    })?;
    let specs: Vec<TopicSpec> = serde_json::from_str(&data)
        .map_err(|e| Error::Format(format!("topics file {}: {e}", path.display())))?;
    if specs.is_empty() {
        return Err(Error::Config(format!("topics file {} is empty", path.display())));
    }
    for spec in &specs {
        spec.validate()?;
    }
    let mut seen = std::collections::HashSet::new();
    for spec in &specs {
        if !seen.insert((spec.language.clone(), spec.topic_id.clone())) {
            return Err(Error::Config(format!(
                "duplicate topic {} for language {}",
                spec.topic_id, spec.language
            )));
        }
    }
    Ok(specs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenPattern {
    /// Folded token equal to a whole word of the text.
    Word(String),
    /// Folded token contained anywhere in a word of the text.
    Substring(String),
}

impl TokenPattern {
    fn parse(token: &str) -> Self {
        let stripped = token.strip_prefix('*').and_then(|t| t.strip_suffix('*'));
        match stripped {
            Some(inner) if !inner.is_empty() => TokenPattern::Substring(fold(inner)),
            _ => TokenPattern::Word(fold(token)),
        }
    }

    fn hits(&self, folded_words: &[&str]) -> bool {
        match self {
            TokenPattern::Word(t) => folded_words.iter().any(|w| w == t),
            TokenPattern::Substring(t) => folded_words.iter().any(|w| w.contains(t.as_str())),
        }
    }
}

/// Compiled topic matcher. Immutable; matching is pure.
#[derive(Debug, Clone)]
pub struct Matcher {
    pub topic_id: String,
    pub language: String,
    sets: Vec<Vec<TokenPattern>>,
}

/// Compiles a validated spec into a matcher.
pub fn compile_matcher(spec: &TopicSpec) -> Result<Matcher> {
    spec.validate()?;
    let sets = spec
        .keyword_sets
        .iter()
        .map(|set| set.iter().map(|t| TokenPattern::parse(t)).collect())
        .collect();
    Ok(Matcher { topic_id: spec.topic_id.clone(), language: spec.language.clone(), sets })
}

impl Matcher {
    /// True when any keyword set has all tokens present in the text.
    pub fn matches(&self, text: &str) -> bool {
        let folded = fold(text);
        let ws: Vec<&str> = words(&folded).collect();
        self.sets.iter().any(|set| set.iter().all(|t| t.hits(&ws)))
    }
}

/// All topic ids matching a tweet's normalized text, in matcher order.
pub fn match_topics(tweet: &NormalizedTweet, matchers: &[Matcher]) -> Vec<String> {
    matchers
        .iter()
        .filter(|m| m.matches(&tweet.normalized_text))
        .map(|m| m.topic_id.clone())
        .collect()
}

/// Partitions tweets into per-topic pools. A tweet can land in several
/// pools; tweets matching nothing are dropped. Input order is preserved.
pub fn partition_topics(
    tweets: &[NormalizedTweet],
    specs: &[TopicSpec],
) -> Result<BTreeMap<String, Vec<NormalizedTweet>>> {
    if specs.is_empty() {
        return Err(Error::Config("no topics configured".into()));
    }
    let matchers: Vec<Matcher> = specs.iter().map(compile_matcher).collect::<Result<_>>()?;
    let mut out: BTreeMap<String, Vec<NormalizedTweet>> =
        matchers.iter().map(|m| (m.topic_id.clone(), Vec::new())).collect();
    for tweet in tweets {
        for m in &matchers {
            if m.matches(&tweet.normalized_text) {
                out.get_mut(&m.topic_id).unwrap().push(tweet.clone());
            }
        }
    }
    Ok(out)
}
