//! Per-tweet argumentativity features and run-profile combination.
//!
//! Every feature lands in [0, 1]. A profile assigns per-language convex
//! weights to three components (magnitude, lexical, pos); the combined
//! argumentativity score is their weighted sum. Empty tweets score 0 on
//! everything: no tokens, no evidence.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::enrich::{EnrichedTweet, TagSetConfig};
use crate::error::{Error, Result};
use crate::lexicon::{EmotionLexicon, ScalarLexicon};
use crate::scalar::Scalar;

/// Balance between subjectivity and polarity magnitude in the opinion
/// component: `alpha * subjectivity + beta * |polarity|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "S: Scalar")]
pub struct OpinionWeights<S: Scalar = f64> {
    pub alpha: S,
    pub beta: S,
}

impl<S: Scalar> OpinionWeights<S> {
    pub fn new(alpha: S, beta: S) -> Result<Self> {
        let w = OpinionWeights { alpha, beta };
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        let sum = (self.alpha + self.beta).as_f64();
        if self.alpha < S::zero() || self.beta < S::zero() || (sum - 1.0).abs() > 1e-9 {
            return Err(Error::Config(format!(
                "opinion weights must be non-negative and sum to 1, got alpha={} beta={}",
                self.alpha, self.beta
            )));
        }
        Ok(())
    }
}

impl<S: Scalar> Default for OpinionWeights<S> {
    fn default() -> Self {
        OpinionWeights { alpha: S::of_f64(0.75), beta: S::of_f64(0.25) }
    }
}

/// All per-tweet feature values. Features that do not apply to the tweet's
/// language, or whose lexicon was not loaded (allowed only at weight 0), are
/// 0 and listed in `inapplicable`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "S: Scalar")]
pub struct FeatureVector<S: Scalar = f64> {
    pub magnitude: S,
    pub arousal: S,
    pub expressivity: S,
    pub descriptivity: S,
    pub structuration: S,
    pub concreteness: S,
    pub pos_score: S,
    pub lexical_score: S,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inapplicable: Vec<String>,
}

impl<S: Scalar> FeatureVector<S> {
    pub fn zero() -> Self {
        FeatureVector {
            magnitude: S::zero(),
            arousal: S::zero(),
            expressivity: S::zero(),
            descriptivity: S::zero(),
            structuration: S::zero(),
            concreteness: S::zero(),
            pos_score: S::zero(),
            lexical_score: S::zero(),
            inapplicable: Vec::new(),
        }
    }
}

/// Opinion component: `alpha * subjectivity + beta * |polarity|`.
/// Inputs outside subjectivity [0,1] / polarity [-1,1] are a caller bug.
pub fn magnitude<S: Scalar>(subjectivity: S, polarity: S, w: &OpinionWeights<S>) -> S {
    assert!(
        subjectivity >= S::zero() && subjectivity <= S::one(),
        "subjectivity out of [0,1]: {subjectivity}"
    );
    assert!(polarity >= -S::one() && polarity <= S::one(), "polarity out of [-1,1]: {polarity}");
    w.alpha * subjectivity + w.beta * polarity.abs()
}

fn mean_lexicon_score<S: Scalar>(tweet: &EnrichedTweet<S>, lex: &ScalarLexicon<S>) -> S {
    let n = tweet.tokens.len();
    if n == 0 {
        return S::zero();
    }
    let sum = tweet
        .tokens
        .iter()
        .map(|t| lex.get(&t.lemma).unwrap_or_else(S::zero))
        .fold(S::zero(), |a, b| a + b);
    sum / S::of_usize(n)
}

/// Mean affective-intensity score over all tokens; missing lemmas count 0.
pub fn arousal_score<S: Scalar>(tweet: &EnrichedTweet<S>, lex: &ScalarLexicon<S>) -> S {
    mean_lexicon_score(tweet, lex)
}

/// Mean perceptibility score over all tokens; missing lemmas count 0.
pub fn concreteness_score<S: Scalar>(tweet: &EnrichedTweet<S>, lex: &ScalarLexicon<S>) -> S {
    mean_lexicon_score(tweet, lex)
}

/// Mean per-lemma emotion coverage: a present lemma contributes
/// (1 + true flags) / 7, an absent one 0.
pub fn expressivity_score<S: Scalar>(tweet: &EnrichedTweet<S>, lex: &EmotionLexicon) -> S {
    let n = tweet.tokens.len();
    if n == 0 {
        return S::zero();
    }
    let sum = tweet
        .tokens
        .iter()
        .map(|t| match lex.get(&t.lemma) {
            Some(e) => S::of_f64(e.true_count() as f64 / 7.0),
            None => S::zero(),
        })
        .fold(S::zero(), |a, b| a + b);
    sum / S::of_usize(n)
}

/// Share of tokens tagged as adjectives.
pub fn descriptivity<S: Scalar>(tweet: &EnrichedTweet<S>, tags: &TagSetConfig) -> S {
    ratio_of_tagged(tweet, |pos| tags.is_adjective(pos))
}

/// Share of tokens tagged as conjunctions.
pub fn structuration<S: Scalar>(tweet: &EnrichedTweet<S>, tags: &TagSetConfig) -> S {
    ratio_of_tagged(tweet, |pos| tags.is_conjunction(pos))
}

fn ratio_of_tagged<S: Scalar>(tweet: &EnrichedTweet<S>, pred: impl Fn(&str) -> bool) -> S {
    let n = tweet.tokens.len();
    if n == 0 {
        return S::zero();
    }
    let hits = tweet.tokens.iter().filter(|t| pred(&t.pos)).count();
    S::of_usize(hits) / S::of_usize(n)
}

/// Mean of structuration and descriptivity.
pub fn pos_score<S: Scalar>(structuration: S, descriptivity: S) -> S {
    (structuration + descriptivity) / S::of_f64(2.0)
}

/// Language-specific lexical component: English averages arousal and
/// concreteness, French uses expressivity directly.
pub fn lexical_score<S: Scalar>(
    language: &str,
    arousal: S,
    concreteness: S,
    expressivity: S,
) -> Result<S> {
    match language {
        "en" => Ok((arousal + concreteness) / S::of_f64(2.0)),
        "fr" => Ok(expressivity),
        other => Err(Error::Config(format!("no lexical score rule for language {other:?}"))),
    }
}

/// Weights of one profile for one language, over the three combined
/// components.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
#[serde(bound = "S: Scalar")]
pub struct ProfileWeights<S: Scalar = f64> {
    pub magnitude: S,
    pub lexical: S,
    pub pos: S,
}

impl<S: Scalar> ProfileWeights<S> {
    fn of(magnitude: f64, lexical: f64, pos: f64) -> Self {
        ProfileWeights {
            magnitude: S::of_f64(magnitude),
            lexical: S::of_f64(lexical),
            pos: S::of_f64(pos),
        }
    }
}

/// A named set of per-language component weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "S: Scalar")]
pub struct RunProfile<S: Scalar = f64> {
    pub name: String,
    pub weights: BTreeMap<String, ProfileWeights<S>>,
}

/// Names accepted by [`builtin_profile`].
pub const BUILTIN_PROFILES: [&str; 3] = ["run1", "run2", "run3"];

/// The three shipped profiles. Weights are per language in component order
/// (magnitude, lexical, pos).
pub fn builtin_profile<S: Scalar>(name: &str) -> Option<RunProfile<S>> {
    let (en, fr) = match name {
        "run1" => ((0.25, 0.50, 0.25), (0.25, 0.25, 0.50)),
        "run2" => ((0.25, 0.75, 0.0), (0.50, 0.50, 0.0)),
        "run3" => ((0.25, 0.0, 0.75), (0.25, 0.0, 0.75)),
        _ => return None,
    };
    let mut weights = BTreeMap::new();
    weights.insert("en".to_string(), ProfileWeights::of(en.0, en.1, en.2));
    weights.insert("fr".to_string(), ProfileWeights::of(fr.0, fr.1, fr.2));
    Some(RunProfile { name: name.to_string(), weights })
}

impl<S: Scalar> RunProfile<S> {
    /// Per-language weights must be non-negative and sum to 1 within 1e-9.
    pub fn validate(&self) -> Result<()> {
        if self.name.trim().is_empty() {
            return Err(Error::Config("profile with empty name".into()));
        }
        if self.weights.is_empty() {
            return Err(Error::Config(format!("profile {}: no languages", self.name)));
        }
        for (lang, w) in &self.weights {
            let vals = [w.magnitude, w.lexical, w.pos];
            if vals.iter().any(|&v| v < S::zero()) {
                return Err(Error::Config(format!(
                    "profile {} language {lang}: negative weight",
                    self.name
                )));
            }
            let sum = (w.magnitude + w.lexical + w.pos).as_f64();
            if (sum - 1.0).abs() > 1e-9 {
                return Err(Error::Config(format!(
                    "profile {} language {lang}: weights sum to {sum}, expected 1",
                    self.name
                )));
            }
        }
        Ok(())
    }

    pub fn weights_for(&self, language: &str) -> Result<&ProfileWeights<S>> {
        self.weights.get(language).ok_or_else(|| {
            Error::Config(format!("profile {} has no weights for language {language}", self.name))
        })
    }
}

/// Loads and validates a profile from a JSON file.
pub fn load_profile<S: Scalar>(path: &Path) -> Result<RunProfile<S>> {
    let data = std::fs::read_to_string(path).map_err(|e| {
        Error::Resource(format!("cannot open profile {}: {e}", path.display()))
    })?;
    let profile: RunProfile<S> = serde_json::from_str(&data)
        .map_err(|e| Error::Format(format!("profile {}: {e}", path.display())))?;
    profile.validate()?;
    Ok(profile)
}

/// A builtin profile name, or a path to a profile file.
pub fn resolve_profile<S: Scalar>(name_or_path: &str) -> Result<RunProfile<S>> {
    match builtin_profile(name_or_path) {
        Some(p) => Ok(p),
        None => load_profile(Path::new(name_or_path)),
    }
}

/// Weighted sum of the three combined components, clamped into [0, 1].
pub fn combine<S: Scalar>(
    features: &FeatureVector<S>,
    profile: &RunProfile<S>,
    language: &str,
) -> Result<S> {
    let w = profile.weights_for(language)?;
    let sum = w.magnitude * features.magnitude
        + w.lexical * features.lexical_score
        + w.pos * features.pos_score;
    Ok(sum.max(S::zero()).min(S::one()))
}

/// Everything scoring needs besides the profile. Lexicons are optional;
/// absence is tolerated only where the profile weight is 0.
pub struct ScoreResources<S: Scalar = f64> {
    pub arousal: Option<ScalarLexicon<S>>,
    pub concreteness: Option<ScalarLexicon<S>>,
    pub emotions: Option<EmotionLexicon>,
    pub tags: TagSetConfig,
    pub opinion: OpinionWeights<S>,
}

impl<S: Scalar> ScoreResources<S> {
    fn lexical_available(&self, language: &str) -> bool {
        match language {
            "en" => self.arousal.is_some() && self.concreteness.is_some(),
            "fr" => self.emotions.is_some(),
            _ => false,
        }
    }

    /// Fails when the profile puts nonzero weight on a component whose
    /// resources are missing, rather than silently scoring zeros.
    pub fn check(&self, profile: &RunProfile<S>, language: &str) -> Result<()> {
        self.tags.validate()?;
        self.opinion.validate()?;
        let w = profile.weights_for(language)?;
        if w.lexical > S::zero() && !self.lexical_available(language) {
            let need = match language {
                "en" => "arousal and concreteness lexicons",
                "fr" => "an emotion lexicon",
                other => return Err(Error::Config(format!("unsupported language {other:?}"))),
            };
            return Err(Error::Resource(format!(
                "profile {} puts weight {} on the lexical component for {language}, which needs {need}",
                profile.name, w.lexical
            )));
        }
        Ok(())
    }
}

/// A tweet with features and the combined argumentativity score.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "S: Scalar")]
pub struct ScoredTweet<S: Scalar = f64> {
    #[serde(flatten)]
    pub tweet: EnrichedTweet<S>,
    pub features: FeatureVector<S>,
    pub argumentativity: S,
}

impl<S: Scalar> ScoredTweet<S> {
    pub fn id(&self) -> &str {
        self.tweet.id()
    }
}

fn inapplicable_features(resources: &ScoreResources<impl Scalar>, language: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut flag = |name: &str, available: bool| {
        if !available {
            out.push(name.to_string());
        }
    };
    flag("arousal", language == "en" && resources.arousal.is_some());
    flag("concreteness", language == "en" && resources.concreteness.is_some());
    flag("expressivity", language == "fr" && resources.emotions.is_some());
    flag("lexical_score", resources.lexical_available(language));
    out
}

/// Scores one tweet. Callers are expected to have run
/// [`ScoreResources::check`] for the profile and language.
pub fn score_tweet<S: Scalar>(
    tweet: EnrichedTweet<S>,
    resources: &ScoreResources<S>,
    profile: &RunProfile<S>,
    language: &str,
) -> Result<ScoredTweet<S>> {
    let inapplicable = inapplicable_features(resources, language);
    if tweet.tokens.is_empty() {
        let features = FeatureVector { inapplicable, ..FeatureVector::zero() };
        return Ok(ScoredTweet { tweet, features, argumentativity: S::zero() });
    }
    let arousal = match (language, &resources.arousal) {
        ("en", Some(lex)) => arousal_score(&tweet, lex),
        _ => S::zero(),
    };
    let concreteness = match (language, &resources.concreteness) {
        ("en", Some(lex)) => concreteness_score(&tweet, lex),
        _ => S::zero(),
    };
    let expressivity = match (language, &resources.emotions) {
        ("fr", Some(lex)) => expressivity_score(&tweet, lex),
        _ => S::zero(),
    };
    let descr = descriptivity(&tweet, &resources.tags);
    let strat = structuration(&tweet, &resources.tags);
    let lexical = if resources.lexical_available(language) {
        lexical_score(language, arousal, concreteness, expressivity)?
    } else {
        S::zero()
    };
    let features = FeatureVector {
        magnitude: magnitude(tweet.subjectivity, tweet.polarity, &resources.opinion),
        arousal,
        expressivity,
        descriptivity: descr,
        structuration: strat,
        concreteness,
        pos_score: pos_score(strat, descr),
        lexical_score: lexical,
        inapplicable,
    };
    let argumentativity = combine(&features, profile, language)?;
    Ok(ScoredTweet { tweet, features, argumentativity })
}

/// Scores a pool in order, one output per input.
pub fn score_corpus<S: Scalar>(
    tweets: Vec<EnrichedTweet<S>>,
    resources: &ScoreResources<S>,
    profile: &RunProfile<S>,
    language: &str,
) -> Result<Vec<ScoredTweet<S>>> {
    profile.validate()?;
    resources.check(profile, language)?;
    tweets
        .into_iter()
        .map(|t| score_tweet(t, resources, profile, language))
        .collect()
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
    fn magnitude_matches_hand_arithmetic() {
        let w = OpinionWeights::default();
        close(magnitude(0.0, 0.0, &w), 0.0);
        close(magnitude(1.0, -1.0, &w), 1.0);
        close(magnitude(0.28, 0.18, &w), 0.255);
        close(magnitude(0.28, -0.18, &w), 0.255);
    }

    #[test]
    #[should_panic]
    fn magnitude_rejects_out_of_range_subjectivity() {
        magnitude(1.5, 0.0, &OpinionWeights::default());
    }

    #[test]
    fn opinion_weights_must_be_convex() {
        assert!(OpinionWeights::new(0.6, 0.3).is_err());
        assert!(OpinionWeights::new(-0.5, 1.5).is_err());
        assert!(OpinionWeights::new(0.75, 0.25).is_ok());
    }

    fn enriched(lemmas: &[(&str, &str)]) -> EnrichedTweet<f64> {
        EnrichedTweet {
            base: NormalizedTweet {
                id: "t".into(),
                author: "a".into(),
                original_text: String::new(),
                normalized_text: String::new(),
                removed: Default::default(),
                lang_hint: None,
                timestamp: None,
                subjectivity: None,
                polarity: None,
            },
            tokens: lemmas.iter().map(|&(form, pos)| Token::new(form, pos, form)).collect(),
            subjectivity: 0.0,
            polarity: 0.0,
        }
    }

    fn scalar_lex(rows: &[(&str, f64)]) -> ScalarLexicon<f64> {
        let data: String =
            rows.iter().map(|(l, v)| format!("{l}\t{v}\n")).collect();
        // Raw range (0, 1) makes scores pass through unscaled.
        ScalarLexicon::load(data.as_bytes(), "lex", (0.0, 1.0)).unwrap().0
    }

    #[test]
    fn arousal_is_mean_over_all_tokens() {
        let lex = scalar_lex(&[("storm", 0.5), ("blast", 0.7)]);
        let t = enriched(&[("storm", "NN"), ("blast", "NN"), ("of", "IN"), ("June", "NN")]);
        close(arousal_score(&t, &lex), 0.3);
        let none = enriched(&[("calmness", "NN")]);
        close(arousal_score(&none, &lex), 0.0);
        let all = enriched(&[("storm", "NN")]);
        let full = scalar_lex(&[("storm", 1.0)]);
        close(arousal_score(&all, &full), 1.0);
    }

    #[test]
    fn empty_tweet_scores_zero_on_lexicon_features() {
        let lex = scalar_lex(&[("storm", 0.9)]);
        let t = enriched(&[]);
        close(arousal_score(&t, &lex), 0.0);
        close(concreteness_score(&t, &lex), 0.0);
    }

    #[test]
    fn concreteness_counts_missing_lemmas_as_zero() {
        let lex = scalar_lex(&[("table", 0.2), ("chaise", 0.6)]);
        let t = enriched(&[("table", "NOM"), ("chaise", "NOM"), ("idée", "NOM")]);
        close(concreteness_score(&t, &lex), 0.8 / 3.0);
    }

    fn emotion_lex(rows: &[(&str, &str)]) -> EmotionLexicon {
        let data: String = rows.iter().map(|(l, flags)| format!("{l}\tpositive\t{flags}\n")).collect();
        EmotionLexicon::load(data.as_bytes(), "emo").unwrap().0
    }

    #[test]
    fn expressivity_counts_presence_plus_flags_over_seven() {
        let lex = emotion_lex(&[("joie", "1,0,0,0,0,0"), ("extase", "1,1,1,1,1,1")]);
        let full = enriched(&[("extase", "NOM")]);
        close(expressivity_score(&full, &lex), 1.0);
        let mixed = enriched(&[("joie", "NOM"), ("table", "NOM")]);
        close(expressivity_score(&mixed, &lex), (2.0 / 7.0) / 2.0);
        let absent = enriched(&[("table", "NOM")]);
        close(expressivity_score(&absent, &lex), 0.0);
    }

    #[test]
    fn pos_ratios_and_their_mean() {
        let tags = TagSetConfig::english_default();
        let t = enriched(&[
            ("loud", "JJ"),
            ("and", "CC"),
            ("clear", "JJ"),
            ("sound", "NN"),
            ("in", "IN"),
        ]);
        close(descriptivity(&t, &tags), 2.0 / 5.0);
        close(structuration(&t, &tags), 2.0 / 5.0);
        close(pos_score(0.2, 0.1), 0.15);
        close(pos_score(0.0, 0.0), 0.0);
        close(pos_score(1.0, 1.0), 1.0);
        let empty = enriched(&[]);
        close(descriptivity(&empty, &tags), 0.0);
        close(structuration(&empty, &tags), 0.0);
    }

    #[test]
    fn single_conjunction_token_saturates_structuration() {
        let tags = TagSetConfig::english_default();
        let t = enriched(&[("and", "CC")]);
        close(structuration(&t, &tags), 1.0);
    }

    #[test]
    fn lexical_score_per_language() {
        close(lexical_score("en", 0.4, 0.2, 0.9).unwrap(), 0.3);
        close(lexical_score("en", 0.0, 0.0, 0.9).unwrap(), 0.0);
        close(lexical_score("fr", 0.4, 0.2, 0.3).unwrap(), 0.3);
        assert!(matches!(lexical_score::<f64>("de", 0.0, 0.0, 0.0), Err(Error::Config(_))));
    }

    #[test]
    fn builtin_profiles_carry_exact_weights() {
        let expect: &[(&str, (f64, f64, f64), (f64, f64, f64))] = &[
            ("run1", (0.25, 0.50, 0.25), (0.25, 0.25, 0.50)),
            ("run2", (0.25, 0.75, 0.0), (0.50, 0.50, 0.0)),
            ("run3", (0.25, 0.0, 0.75), (0.25, 0.0, 0.75)),
        ];
        for &(name, en, fr) in expect {
            let p: RunProfile<f64> = builtin_profile(name).unwrap();
            p.validate().unwrap();
            let we = p.weights_for("en").unwrap();
            assert_eq!((we.magnitude, we.lexical, we.pos), en);
            let wf = p.weights_for("fr").unwrap();
            assert_eq!((wf.magnitude, wf.lexical, wf.pos), fr);
        }
        assert!(builtin_profile::<f64>("run4").is_none());
    }

    fn fv(magnitude: f64, lexical: f64, pos: f64) -> FeatureVector<f64> {
        FeatureVector {
            magnitude,
            lexical_score: lexical,
            pos_score: pos,
            ..FeatureVector::zero()
        }
    }

    #[test]
    fn combine_matches_profile_arithmetic() {
        let run1 = builtin_profile::<f64>("run1").unwrap();
        close(combine(&fv(0.4, 0.2, 0.4), &run1, "en").unwrap(), 0.3);
        let run2 = builtin_profile::<f64>("run2").unwrap();
        close(combine(&fv(0.6, 0.2, 0.9), &run2, "fr").unwrap(), 0.4);
        let run3 = builtin_profile::<f64>("run3").unwrap();
        close(combine(&fv(0.0, 1.0, 0.0), &run3, "en").unwrap(), 0.0);
        close(combine(&fv(0.0, 1.0, 0.0), &run3, "fr").unwrap(), 0.0);
    }

    #[test]
    fn combine_is_linear_with_weight_coefficients() {
        let p = builtin_profile::<f64>("run1").unwrap();
        for lang in ["en", "fr"] {
            let w = *p.weights_for(lang).unwrap();
            let zero = combine(&fv(0.0, 0.0, 0.0), &p, lang).unwrap();
            assert_eq!(combine(&fv(1.0, 0.0, 0.0), &p, lang).unwrap() - zero, w.magnitude);
            assert_eq!(combine(&fv(0.0, 1.0, 0.0), &p, lang).unwrap() - zero, w.lexical);
            assert_eq!(combine(&fv(0.0, 0.0, 1.0), &p, lang).unwrap() - zero, w.pos);
        }
    }

    #[test]
    fn invalid_profiles_are_config_errors() {
        let mut p = builtin_profile::<f64>("run1").unwrap();
        p.weights.get_mut("en").unwrap().magnitude = 0.5;
        assert!(matches!(p.validate(), Err(Error::Config(_))));
        let run1 = builtin_profile::<f64>("run1").unwrap();
        assert!(matches!(run1.weights_for("de"), Err(Error::Config(_))));
    }

    fn resources_en() -> ScoreResources<f64> {
        ScoreResources {
            arousal: Some(scalar_lex(&[("storm", 0.8), ("loud", 0.6)])),
            concreteness: Some(scalar_lex(&[("sound", 0.9), ("storm", 0.4)])),
            emotions: None,
            tags: TagSetConfig::english_default(),
            opinion: OpinionWeights::default(),
        }
    }

    #[test]
    fn score_corpus_preserves_order_and_range() {
        let p = builtin_profile::<f64>("run1").unwrap();
        let tweets = vec![
            enriched(&[("loud", "JJ"), ("sound", "NN")]),
            enriched(&[("storm", "NN")]),
            enriched(&[]),
        ];
        let scored = score_corpus(tweets, &resources_en(), &p, "en").unwrap();
        assert_eq!(scored.len(), 3);
        for s in &scored {
            assert!(s.argumentativity >= 0.0 && s.argumentativity <= 1.0);
            assert_eq!(s.features.inapplicable, vec!["expressivity"]);
        }
        // Empty tweet scores zero everywhere.
        let empty = &scored[2];
        assert_eq!(empty.argumentativity, 0.0);
        assert_eq!(empty.features.pos_score, 0.0);
        assert!(score_corpus(vec![], &resources_en(), &p, "en").unwrap().is_empty());
    }

    #[test]
    fn feature_values_match_hand_trace() {
        let p = builtin_profile::<f64>("run1").unwrap();
        let mut tweet = enriched(&[("loud", "JJ"), ("and", "CC"), ("sound", "NN")]);
        tweet.subjectivity = 0.6;
        tweet.polarity = -0.5;
        let s = score_tweet(tweet, &resources_en(), &p, "en").unwrap();
        close(s.features.magnitude, 0.75 * 0.6 + 0.25 * 0.5);
        close(s.features.arousal, 0.6 / 3.0);
        close(s.features.concreteness, 0.9 / 3.0);
        close(s.features.lexical_score, (0.6 / 3.0 + 0.9 / 3.0) / 2.0);
        close(s.features.descriptivity, 1.0 / 3.0);
        close(s.features.structuration, 1.0 / 3.0);
        close(s.features.pos_score, 1.0 / 3.0);
        close(
            s.argumentativity,
            0.25 * s.features.magnitude
                + 0.50 * s.features.lexical_score
                + 0.25 * s.features.pos_score,
        );
    }

    #[test]
    fn missing_lexicon_with_nonzero_weight_is_fatal() {
        let p = builtin_profile::<f64>("run2").unwrap();
        let mut r = resources_en();
        r.arousal = None;
        let err = score_corpus(vec![enriched(&[("a", "DT")])], &r, &p, "en").unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn missing_lexicon_at_zero_weight_flags_inapplicable() {
        let p = builtin_profile::<f64>("run3").unwrap();
        let r = ScoreResources {
            arousal: None,
            concreteness: None,
            emotions: None,
            tags: TagSetConfig::english_default(),
            opinion: OpinionWeights::default(),
        };
        let scored = score_corpus(vec![enriched(&[("loud", "JJ")])], &r, &p, "en").unwrap();
        let f = &scored[0].features;
        assert_eq!(f.lexical_score, 0.0);
        assert_eq!(
            f.inapplicable,
            vec!["arousal", "concreteness", "expressivity", "lexical_score"]
        );
    }

    #[test]
    fn french_scoring_uses_emotion_lexicon() {
        let p = builtin_profile::<f64>("run1").unwrap();
        let r = ScoreResources {
            arousal: None,
            concreteness: None,
            emotions: Some(emotion_lex(&[("joie", "1,0,0,0,0,0")])),
            tags: TagSetConfig::french_default(),
            opinion: OpinionWeights::default(),
        };
        let scored =
            score_corpus(vec![enriched(&[("joie", "NOM"), ("et", "KON")])], &r, &p, "fr").unwrap();
        let f = &scored[0].features;
        close(f.expressivity, (2.0 / 7.0) / 2.0);
        close(f.lexical_score, f.expressivity);
        assert_eq!(f.inapplicable, vec!["arousal", "concreteness"]);
    }

    #[test]
    fn profile_json_round_trip() {
        let p = builtin_profile::<f64>("run1").unwrap();
        let json = serde_json::to_string(&p).unwrap();
        let back: RunProfile<f64> = serde_json::from_str(&json).unwrap();
        assert_eq!(p, back);
    }
}
