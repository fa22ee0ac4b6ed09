//! Token-level enrichment: tagging, lemmas, and tweet-level sentiment.
//!
//! Tokens come either from the shipped baseline tagger (tokenizer + lookup
//! tables + suffix rules) or from a pre-tagged vertical file produced by an
//! external tagger. Both routes yield the same [`Token`] shape, so scoring
//! never knows which one ran. Sentiment is the mean of sentiment-lexicon
//! values over matched lemmas, with polarity sign flipped when a negation
//! cue appears shortly before the match.

mod baseline_data;

use std::collections::HashMap;
use std::io::BufRead;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::corpus::NormalizedTweet;
use crate::error::{Error, Result};
use crate::lexicon::SentimentLexicon;
use crate::scalar::Scalar;

/// One token: surface form, POS tag, lemma. Lemmas are lowercase.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub form: String,
    pub pos: String,
    pub lemma: String,
}

impl Token {
    pub fn new(form: &str, pos: &str, lemma: &str) -> Self {
        Token { form: form.to_string(), pos: pos.to_string(), lemma: lemma.to_lowercase() }
    }
}

/// Tag inventory slices the scoring features need: which tags count as
/// adjectives and which as conjunctions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TagSetConfig {
    pub tagset_name: String,
    pub adjective_tags: Vec<String>,
    pub conjunction_tags: Vec<String>,
}

impl TagSetConfig {
    /// Penn-style defaults for English.
    pub fn english_default() -> Self {
        TagSetConfig {
            tagset_name: "en-penn".into(),
            adjective_tags: vec!["JJ".into(), "JJR".into(), "JJS".into()],
            conjunction_tags: vec!["CC".into(), "IN".into()],
        }
    }

    /// TreeTagger-style defaults for French.
    pub fn french_default() -> Self {
        TagSetConfig {
            tagset_name: "fr-treetagger".into(),
            adjective_tags: vec!["ADJ".into()],
            conjunction_tags: vec!["KON".into(), "CON".into(), "CS".into(), "CC".into()],
        }
    }

    /// Shipped default for a language code.
    pub fn for_language(language: &str) -> Result<Self> {
        match language {
            "en" => Ok(Self::english_default()),
            "fr" => Ok(Self::french_default()),
            other => Err(Error::Config(format!("no default tagset for language {other:?}"))),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.adjective_tags.is_empty() || self.conjunction_tags.is_empty() {
            return Err(Error::Config(format!(
                "tagset {}: adjective and conjunction tag sets must be non-empty",
                self.tagset_name
            )));
        }
        if let Some(shared) =
            self.adjective_tags.iter().find(|t| self.conjunction_tags.contains(t))
        {
            return Err(Error::Config(format!(
                "tagset {}: tag {shared:?} is listed as both adjective and conjunction",
                self.tagset_name
            )));
        }
        Ok(())
    }

    pub fn is_adjective(&self, pos: &str) -> bool {
        self.adjective_tags.iter().any(|t| t == pos)
    }

    pub fn is_conjunction(&self, pos: &str) -> bool {
        self.conjunction_tags.iter().any(|t| t == pos)
    }
}

/// Negation cues checked against lowercased token forms.
pub fn negation_cues(language: &str) -> &'static [&'static str] {
    match language {
        "en" => &["not", "never", "no", "n't"],
        "fr" => &["ne", "pas", "jamais", "aucun"],
        _ => &[],
    }
}

/// Token source. Implementations must be deterministic for a given input.
pub trait Tagger {
    fn name(&self) -> &str;

    /// Tokens for one tweet. Errors mark the tweet enrichment-failed; they do
    /// not abort the corpus.
    fn tag(&self, tweet_id: &str, text: &str) -> Result<Vec<Token>>;
}

const APOSTROPHES: [char; 2] = ['\'', '\u{2019}'];

fn is_apostrophe(c: char) -> bool {
    APOSTROPHES.contains(&c)
}

/// French elision prefixes: "l'été" splits into "l'" + "été".
const FR_ELISIONS: &[&str] =
    &["l", "d", "j", "n", "m", "t", "s", "c", "qu", "jusqu", "lorsqu", "puisqu", "quoiqu"];

/// Splits text into word segments: maximal runs of alphanumerics where an
/// apostrophe with alphanumerics on both sides stays inside the segment.
/// Everything else separates segments. Segment characters concatenate back to
/// the original slice, so no character is ever lost or invented.
fn segments(text: &str) -> Vec<&str> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, &(pos, c)) in chars.iter().enumerate() {
        let keep = c.is_alphanumeric()
            || (is_apostrophe(c)
                && i > 0
                && chars[i - 1].1.is_alphanumeric()
                && chars.get(i + 1).is_some_and(|&(_, n)| n.is_alphanumeric()));
        if keep {
            start.get_or_insert(pos);
        } else if let Some(s) = start.take() {
            out.push(&text[s..pos]);
        }
    }
    if let Some(s) = start {
        out.push(&text[s..]);
    }
    out
}

/// Splits one segment at apostrophes per language convention: English peels
/// contractions ("don't" -> "do" + "n't", "it's" -> "it" + "'s"), French
/// splits after elision prefixes ("l'été" -> "l'" + "été") and otherwise
/// keeps the segment whole ("aujourd'hui").
fn split_segment<'a>(segment: &'a str, language: &str, out: &mut Vec<&'a str>) {
    let Some(apo) = segment.find(is_apostrophe) else {
        out.push(segment);
        return;
    };
    let (left, rest) = segment.split_at(apo);
    let apo_len = rest.chars().next().unwrap().len_utf8();
    let right = &rest[apo_len..];
    match language {
        "en" => {
            if right.eq_ignore_ascii_case("t") && left.to_lowercase().ends_with('n') {
                // "don't" -> "do" + "n't"; "can't" -> "ca" + "n't".
                let cut = left.len() - left.chars().next_back().unwrap().len_utf8();
                if !left[..cut].is_empty() {
                    out.push(&left[..cut]);
                }
                out.push(&segment[cut..]);
            } else {
                out.push(left);
                split_segment(&segment[apo..], "en-rest", out);
            }
        }
        // Continuation of an English contraction: "'s", "'re", "'ve"...
        "en-rest" => out.push(segment),
        "fr" => {
            let prefix = left.to_lowercase();
            if FR_ELISIONS.contains(&prefix.as_str()) {
                out.push(&segment[..apo + apo_len]);
                split_segment(right, "fr", out);
            } else {
                out.push(segment);
            }
        }
        _ => out.push(segment),
    }
}

/// Whitespace-and-punctuation tokenization with language-aware apostrophe
/// handling. Forms keep their original characters and order.
pub fn tokenize<'a>(text: &'a str, language: &str) -> Vec<&'a str> {
    let mut out = Vec::new();
    for seg in segments(text) {
        split_segment(seg, language, &mut out);
    }
    out
}

/// Dictionary-and-suffix tagger shipped with the crate, for "en" and "fr".
pub struct BaselineTagger {
    language: String,
    lexicon: HashMap<&'static str, (&'static str, &'static str)>,
    suffix_rules: &'static [(&'static str, &'static str)],
    numeral_tag: &'static str,
}

impl BaselineTagger {
    pub fn new(language: &str) -> Result<Self> {
        let (table, suffix_rules, numeral_tag) = match language {
            "en" => (baseline_data::EN_LEXICON, baseline_data::EN_SUFFIX_RULES, "CD"),
            "fr" => (baseline_data::FR_LEXICON, baseline_data::FR_SUFFIX_RULES, "NUM"),
            other => {
                return Err(Error::Config(format!(
                    "baseline tagger supports en and fr, got {other:?}"
                )))
            }
        };
        let lexicon = table.iter().map(|&(f, p, l)| (f, (p, l))).collect();
        Ok(BaselineTagger { language: language.to_string(), lexicon, suffix_rules, numeral_tag })
    }

    fn tag_form(&self, form: &str) -> Token {
        let lower = form.to_lowercase();
        if let Some(&(pos, lemma)) = self.lexicon.get(lower.as_str()) {
            return Token::new(form, pos, lemma);
        }
        if !lower.is_empty() && lower.chars().all(|c| c.is_ascii_digit()) {
            return Token::new(form, self.numeral_tag, &lower);
        }
        for &(suffix, tag) in self.suffix_rules {
            // A bare suffix is not a word of that class.
            if lower.len() > suffix.len() && lower.ends_with(suffix) {
                return Token::new(form, tag, &lower);
            }
        }
        Token::new(form, "UNK", &lower)
    }
}

impl Tagger for BaselineTagger {
    fn name(&self) -> &str {
        "baseline"
    }

    fn tag(&self, _tweet_id: &str, text: &str) -> Result<Vec<Token>> {
        Ok(tokenize(text, &self.language).into_iter().map(|f| self.tag_form(f)).collect())
    }
}

/// Tallies from reading a pre-tagged file.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PretagReport {
    pub blocks: u64,
    pub tokens: u64,
    pub skipped_rows: u64,
    pub duplicate_blocks: u64,
}

/// Reads a pre-tagged vertical file: blocks starting with `#id <tweet-id>`,
/// followed by `form<TAB>pos<TAB>lemma` rows. A `<unknown>` lemma falls back
/// to the lowercased form. Malformed token rows are skipped and counted; a
/// token row before any `#id` header is fatal. Duplicate blocks: last wins.
pub fn read_pretagged<R: BufRead>(reader: R) -> Result<(HashMap<String, Vec<Token>>, PretagReport)> {
    let mut map: HashMap<String, Vec<Token>> = HashMap::new();
    let mut report = PretagReport::default();
    let mut current: Option<(String, Vec<Token>)> = None;

    fn flush(
        map: &mut HashMap<String, Vec<Token>>,
        report: &mut PretagReport,
        current: &mut Option<(String, Vec<Token>)>,
    ) {
        if let Some((id, tokens)) = current.take() {
            report.blocks += 1;
            if map.insert(id, tokens).is_some() {
                report.duplicate_blocks += 1;
            }
        }
    }

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        if line.trim().is_empty() {
            flush(&mut map, &mut report, &mut current);
            continue;
        }
        if let Some(rest) = line.strip_prefix("#id") {
            let id = rest.trim();
            if id.is_empty() {
                return Err(Error::Format(format!(
                    "pre-tagged line {lineno}: #id header without a tweet id"
                )));
            }
            flush(&mut map, &mut report, &mut current);
            current = Some((id.to_string(), Vec::new()));
            continue;
        }
        let Some((_, tokens)) = current.as_mut() else {
            return Err(Error::Format(format!(
                "pre-tagged line {lineno}: token row before any #id header"
            )));
        };
        let cols: Vec<&str> = line.split('\t').collect();
        match cols.as_slice() {
            [form, pos, lemma] if !form.is_empty() && !pos.is_empty() && !lemma.is_empty() => {
                let lemma = if *lemma == "<unknown>" { form.to_lowercase() } else { (*lemma).to_string() };
                tokens.push(Token::new(form, pos, &lemma));
                report.tokens += 1;
            }
            _ => report.skipped_rows += 1,
        }
    }
    flush(&mut map, &mut report, &mut current);
    Ok((map, report))
}

pub fn read_pretagged_path(path: &Path) -> Result<(HashMap<String, Vec<Token>>, PretagReport)> {
    let f = std::fs::File::open(path).map_err(|e| {
        Error::Resource(format!("cannot open pre-tagged file {}: {e}", path.display()))
    })?;
    read_pretagged(std::io::BufReader::new(f))
}

/// Token source backed by a pre-tagged file. Unknown tweet ids fail that
/// tweet's enrichment.
pub struct PretaggedTagger {
    tokens: HashMap<String, Vec<Token>>,
}

impl PretaggedTagger {
    pub fn new(tokens: HashMap<String, Vec<Token>>) -> Self {
        PretaggedTagger { tokens }
    }
}

impl Tagger for PretaggedTagger {
    fn name(&self) -> &str {
        "pretagged"
    }

    fn tag(&self, tweet_id: &str, _text: &str) -> Result<Vec<Token>> {
        self.tokens
            .get(tweet_id)
            .cloned()
            .ok_or_else(|| Error::Resource(format!("no pre-tagged tokens for tweet {tweet_id}")))
    }
}

fn cue_matches(form_lower: &str, cue: &str) -> bool {
    let form = form_lower.replace('\u{2019}', "'");
    form == cue
        || (cue.contains('\'') && form.ends_with(cue))
        // Elided French "ne": the token surfaces as "n'".
        || (cue == "ne" && form == "n'")
}

/// Tweet-level sentiment: means of sentiment-lexicon values over matched
/// lemmas; no match yields (0, 0). Polarity of a match flips sign when a
/// negation cue occurs within `window` tokens before it. Results are clamped
/// to subjectivity [0, 1] and polarity [-1, 1].
pub fn sentiment<S: Scalar>(
    tokens: &[Token],
    lex: &SentimentLexicon<S>,
    cues: &[&str],
    window: usize,
) -> (S, S) {
    let mut matched = 0usize;
    let mut subj_sum = S::zero();
    let mut pol_sum = S::zero();
    for (i, tok) in tokens.iter().enumerate() {
        let Some(entry) = lex.get(&tok.lemma) else { continue };
        matched += 1;
        subj_sum = subj_sum + entry.subjectivity;
        let negated = tokens[i.saturating_sub(window)..i]
            .iter()
            .any(|t| cues.iter().any(|c| cue_matches(&t.form.to_lowercase(), c)));
        pol_sum = pol_sum + if negated { -entry.polarity } else { entry.polarity };
    }
    if matched == 0 {
        return (S::zero(), S::zero());
    }
    let n = S::of_usize(matched);
    let subj = (subj_sum / n).max(S::zero()).min(S::one());
    let pol = (pol_sum / n).max(-S::one()).min(S::one());
    (subj, pol)
}

/// A tweet with tokens and sentiment attached, ready for scoring.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "S: Scalar")]
pub struct EnrichedTweet<S: Scalar = f64> {
    #[serde(flatten)]
    pub base: NormalizedTweet,
    pub tokens: Vec<Token>,
    pub subjectivity: S,
    pub polarity: S,
}

impl<S: Scalar> EnrichedTweet<S> {
    pub fn id(&self) -> &str {
        &self.base.id
    }

    pub fn token_count(&self) -> usize {
        self.tokens.len()
    }
}

/// Tallies from enriching one pool.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EnrichReport {
    pub input: u64,
    pub enriched: u64,
    pub failed: u64,
}

/// Enriches one tweet. Sentiment values supplied in the input bypass the
/// scorer (independently per field) and are clamped into range.
pub fn enrich_tweet<S: Scalar>(
    mut tweet: NormalizedTweet,
    tagger: &dyn Tagger,
    lex: &SentimentLexicon<S>,
    cues: &[&str],
    window: usize,
) -> Result<EnrichedTweet<S>> {
    let tokens = tagger.tag(&tweet.id, &tweet.normalized_text)?;
    let (scored_subj, scored_pol) = sentiment(&tokens, lex, cues, window);
    let subjectivity = match tweet.subjectivity.take() {
        Some(v) => S::of_f64(v.clamp(0.0, 1.0)),
        None => scored_subj,
    };
    let polarity = match tweet.polarity.take() {
        Some(v) => S::of_f64(v.clamp(-1.0, 1.0)),
        None => scored_pol,
    };
    Ok(EnrichedTweet { base: tweet, tokens, subjectivity, polarity })
}

/// Enriches a pool in order. Tweets whose tagger fails are excluded and
/// counted, not fatal.
pub fn enrich_corpus<S: Scalar>(
    tweets: Vec<NormalizedTweet>,
    tagger: &dyn Tagger,
    lex: &SentimentLexicon<S>,
    language: &str,
    window: usize,
) -> (Vec<EnrichedTweet<S>>, EnrichReport) {
    let cues = negation_cues(language);
    let mut report = EnrichReport::default();
    let mut out = Vec::with_capacity(tweets.len());
    for tweet in tweets {
        report.input += 1;
        let id = tweet.id.clone();
        match enrich_tweet(tweet, tagger, lex, cues, window) {
            Ok(e) => {
                report.enriched += 1;
                out.push(e);
            }
            Err(e) => {
                log::debug!("enrichment failed for tweet {id}: {e}");
                report.failed += 1;
            }
        }
    }
    (out, report)
}
