//! Pipeline configuration and the stage chain the CLI drives: normalize,
//! language filter, topic filter, enrich, score, cluster, select. The same
//! stage functions back both the one-shot run and the per-stage subcommands,
//! so composing stages by hand reproduces the one-shot output byte for byte.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::corpus::{
    dedup_by_text, read_jsonl_path, write_jsonl_path, NormalizedTweet, RawTweet,
};
use crate::diversity::{
    kmeans, load_embeddings_path, select_diverse, vectorize, ClusterResult, EmbeddingModel,
    KMeansParams, TweetVector,
};
use crate::enrich::{
    enrich_corpus, read_pretagged_path, BaselineTagger, EnrichReport, EnrichedTweet,
    PretaggedTagger, TagSetConfig, Tagger,
};
use crate::error::{Error, Result};
use crate::eval::RunEntry;
use crate::langid::{filter_language, LangModel, DEFAULT_MIN_CONFIDENCE};
use crate::lexicon::{EmotionLexicon, ScalarLexicon, SentimentLexicon};
use crate::normalize::{normalize, NormalizeConfig};
use crate::scalar::Scalar;
use crate::scoring::{
    resolve_profile, score_corpus, OpinionWeights, RunProfile, ScoreResources, ScoredTweet,
};
use crate::topic::{compile_matcher, load_topics, TopicSpec};

fn d_min_confidence() -> f64 {
    DEFAULT_MIN_CONFIDENCE
}
fn d_profile() -> String {
    "run1".to_string()
}
fn d_window() -> usize {
    3
}
fn d_k() -> usize {
    100
}
fn d_seed() -> u64 {
    42
}
fn d_max_iter() -> usize {
    100
}
fn d_restarts() -> usize {
    10
}
fn d_arousal_range() -> (f64, f64) {
    (1.0, 9.0)
}
fn d_concreteness_range() -> (f64, f64) {
    (1.0, 5.0)
}

/// Per-language file set. Only the sentiment lexicon and the embedding model
/// are mandatory; the rest depends on which profile weights are nonzero.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LanguageResources {
    pub sentiment_lexicon: PathBuf,
    pub embeddings: PathBuf,
    #[serde(default)]
    pub arousal_lexicon: Option<PathBuf>,
    /// Raw score range of the arousal file before rescaling to [0, 1].
    #[serde(default = "d_arousal_range")]
    pub arousal_range: (f64, f64),
    #[serde(default)]
    pub concreteness_lexicon: Option<PathBuf>,
    #[serde(default = "d_concreteness_range")]
    pub concreteness_range: (f64, f64),
    #[serde(default)]
    pub emotion_lexicon: Option<PathBuf>,
    /// Vertical token file; when present it replaces the built-in tagger.
    #[serde(default)]
    pub pretagged: Option<PathBuf>,
    /// Overrides the built-in tag sets for this language.
    #[serde(default)]
    pub tagset: Option<TagSetConfig>,
}

/// Everything a full run needs, loaded from one JSON file. Relative paths
/// are resolved against the config file's directory.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PipelineConfig {
    /// Languages to keep, in output order. Each needs a `resources` entry.
    pub languages: Vec<String>,
    pub topics: PathBuf,
    pub lang_model: PathBuf,
    pub resources: BTreeMap<String, LanguageResources>,
    #[serde(default = "d_min_confidence")]
    pub min_confidence: f64,
    #[serde(default)]
    pub normalization: NormalizeConfig,
    /// Drop tweets whose normalized text duplicates an earlier one.
    #[serde(default)]
    pub dedup_text: bool,
    /// Built-in profile name or a path to a profile JSON file.
    #[serde(default = "d_profile")]
    pub profile: String,
    #[serde(default)]
    pub opinion: OpinionWeights<f64>,
    #[serde(default = "d_window")]
    pub negation_window: usize,
    #[serde(default = "d_k")]
    pub k: usize,
    #[serde(default = "d_seed")]
    pub seed: u64,
    #[serde(default = "d_max_iter")]
    pub max_iter: usize,
    #[serde(default = "d_restarts")]
    pub n_restarts: usize,
    /// Exclude tweets with no known embedding form instead of clustering
    /// them at the origin.
    #[serde(default)]
    pub drop_unembedded: bool,
}

fn resolve(path: &mut PathBuf, base: &Path) {
    if path.is_relative() {
        *path = base.join(&*path);
    }
}

fn must_exist(path: &Path, what: &str) -> Result<()> {
    if path.is_file() {
        Ok(())
    } else {
        Err(Error::Resource(format!("{what} not found: {}", path.display())))
    }
}

impl PipelineConfig {
    /// Reads, resolves and validates a config file.
    pub fn load(path: &Path) -> Result<Self> {
        let data = std::fs::read_to_string(path)
            .map_err(|e| Error::Resource(format!("cannot read config {}: {e}", path.display())))?;
        let mut cfg: PipelineConfig = serde_json::from_str(&data)
            .map_err(|e| Error::Config(format!("config {}: {e}", path.display())))?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        cfg.resolve_paths(base);
        cfg.validate()?;
        Ok(cfg)
    }

    fn resolve_paths(&mut self, base: &Path) {
        resolve(&mut self.topics, base);
        resolve(&mut self.lang_model, base);
        for res in self.resources.values_mut() {
            resolve(&mut res.sentiment_lexicon, base);
            resolve(&mut res.embeddings, base);
            for opt in [
                &mut res.arousal_lexicon,
                &mut res.concreteness_lexicon,
                &mut res.emotion_lexicon,
                &mut res.pretagged,
            ] {
                if let Some(p) = opt {
                    resolve(p, base);
                }
            }
        }
        // The profile field may be a builtin name; only paths get resolved.
        if self.profile.contains('/') || self.profile.contains(std::path::MAIN_SEPARATOR) {
            let mut p = PathBuf::from(&self.profile);
            resolve(&mut p, base);
            self.profile = p.to_string_lossy().into_owned();
        }
    }

    /// Checks parameters and the existence of every referenced file.
    pub fn validate(&self) -> Result<()> {
        if self.languages.is_empty() {
            return Err(Error::Config("languages must not be empty".into()));
        }
        for (i, lang) in self.languages.iter().enumerate() {
            if self.languages[..i].contains(lang) {
                return Err(Error::Config(format!("language {lang:?} listed twice")));
            }
        }
        if self.k == 0 || self.max_iter == 0 || self.n_restarts == 0 {
            return Err(Error::Config("k, max_iter and n_restarts must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.min_confidence) {
            return Err(Error::Config(format!(
                "min_confidence must lie in [0, 1], got {}",
                self.min_confidence
            )));
        }
        self.opinion.validate()?;
        must_exist(&self.topics, "topics file")?;
        must_exist(&self.lang_model, "language model")?;
        for lang in &self.languages {
            let res = self.resources.get(lang).ok_or_else(|| {
                Error::Config(format!("no resources configured for language {lang:?}"))
            })?;
            must_exist(&res.sentiment_lexicon, "sentiment lexicon")?;
            must_exist(&res.embeddings, "embedding model")?;
            for (opt, what) in [
                (&res.arousal_lexicon, "arousal lexicon"),
                (&res.concreteness_lexicon, "concreteness lexicon"),
                (&res.emotion_lexicon, "emotion lexicon"),
                (&res.pretagged, "pre-tagged token file"),
            ] {
                if let Some(p) = opt {
                    must_exist(p, what)?;
                }
            }
            for (range, what) in
                [(res.arousal_range, "arousal_range"), (res.concreteness_range, "concreteness_range")]
            {
                if !(range.0 < range.1) {
                    return Err(Error::Config(format!(
                        "{what} for {lang} must satisfy min < max, got ({}, {})",
                        range.0, range.1
                    )));
                }
            }
            if let Some(tags) = &res.tagset {
                tags.validate()?;
            }
        }
        Ok(())
    }

    pub fn kmeans_params(&self) -> KMeansParams {
        KMeansParams { k: self.k, seed: self.seed, max_iter: self.max_iter, n_restarts: self.n_restarts }
    }
}

/// One language's resources, loaded and ready to run.
pub struct LoadedLanguage<S: Scalar = f64> {
    pub language: String,
    pub tagger: Box<dyn Tagger + Send + Sync>,
    pub sentiment: SentimentLexicon<S>,
    pub score: ScoreResources<S>,
    pub embeddings: EmbeddingModel<S>,
    pub negation_window: usize,
    /// Files whose bytes key the enrichment cache along with the pool.
    cache_inputs: Vec<PathBuf>,
}

fn language_entry<'a>(cfg: &'a PipelineConfig, language: &str) -> Result<&'a LanguageResources> {
    cfg.resources
        .get(language)
        .ok_or_else(|| Error::Config(format!("no resources configured for language {language:?}")))
}

/// Builds the tagger for a language: pre-tagged tokens when configured,
/// otherwise the built-in baseline tagger.
pub fn load_tagger(cfg: &PipelineConfig, language: &str) -> Result<Box<dyn Tagger + Send + Sync>> {
    let res = language_entry(cfg, language)?;
    match &res.pretagged {
        Some(path) => {
            let (tokens, report) = read_pretagged_path(path)?;
            log::info!(
                "stage=load-pretagged language={language} blocks={} skipped_rows={}",
                report.blocks,
                report.skipped_rows
            );
            Ok(Box::new(PretaggedTagger::new(tokens)))
        }
        None => Ok(Box::new(BaselineTagger::new(language)?)),
    }
}

pub fn load_sentiment<S: Scalar>(
    cfg: &PipelineConfig,
    language: &str,
) -> Result<SentimentLexicon<S>> {
    let res = language_entry(cfg, language)?;
    let (lex, report) =
        SentimentLexicon::load_path(&res.sentiment_lexicon, "sentiment")?;
    log::info!("stage=load-sentiment language={language} rows={}", report.rows);
    Ok(lex)
}

/// Loads the optional scoring lexicons plus tag sets and opinion weights.
pub fn load_score_resources<S: Scalar>(
    cfg: &PipelineConfig,
    language: &str,
) -> Result<ScoreResources<S>> {
    let res = language_entry(cfg, language)?;
    let arousal = match &res.arousal_lexicon {
        Some(p) => Some(ScalarLexicon::load_path(p, "arousal", res.arousal_range)?.0),
        None => None,
    };
    let concreteness = match &res.concreteness_lexicon {
        Some(p) => Some(ScalarLexicon::load_path(p, "concreteness", res.concreteness_range)?.0),
        None => None,
    };
    let emotions = match &res.emotion_lexicon {
        Some(p) => Some(EmotionLexicon::load_path(p, "emotion")?.0),
        None => None,
    };
    let tags = match &res.tagset {
        Some(t) => t.clone(),
        None => TagSetConfig::for_language(language)?,
    };
    tags.validate()?;
    let opinion = OpinionWeights::new(
        S::of_f64(cfg.opinion.alpha),
        S::of_f64(cfg.opinion.beta),
    )?;
    Ok(ScoreResources { arousal, concreteness, emotions, tags, opinion })
}

pub fn load_embedding_model<S: Scalar>(
    cfg: &PipelineConfig,
    language: &str,
) -> Result<EmbeddingModel<S>> {
    let res = language_entry(cfg, language)?;
    let (model, report) = load_embeddings_path(&res.embeddings)?;
    log::info!(
        "stage=load-embeddings language={language} rows={} skipped={} duplicates={}",
        report.rows,
        report.skipped,
        report.duplicates
    );
    Ok(model)
}

/// Loads every resource one language needs for a full run.
pub fn load_language<S: Scalar>(cfg: &PipelineConfig, language: &str) -> Result<LoadedLanguage<S>> {
    let res = language_entry(cfg, language)?;
    let mut cache_inputs = vec![res.sentiment_lexicon.clone()];
    if let Some(p) = &res.pretagged {
        cache_inputs.push(p.clone());
    }
    Ok(LoadedLanguage {
        language: language.to_string(),
        tagger: load_tagger(cfg, language)?,
        sentiment: load_sentiment(cfg, language)?,
        score: load_score_resources(cfg, language)?,
        embeddings: load_embedding_model(cfg, language)?,
        negation_window: cfg.negation_window,
        cache_inputs,
    })
}

/// Run tag stamped on every entry a profile produces for a language.
pub fn run_tag(profile: &str, language: &str) -> String {
    format!("{profile}.{language}")
}

/// Normalizes a raw corpus in order.
pub fn normalize_corpus(raw: &[RawTweet], cfg: &NormalizeConfig) -> Vec<NormalizedTweet> {
    raw.iter().map(|t| normalize(t, cfg)).collect()
}

/// Splits one language's tweets into per-topic pools, in topics-file order.
/// A tweet may land in several pools. A language with no topics is a
/// configuration error.
pub fn topic_pools(
    tweets: &[NormalizedTweet],
    topics: &[TopicSpec],
    language: &str,
) -> Result<Vec<(String, Vec<NormalizedTweet>)>> {
    let mut out = Vec::new();
    for spec in topics.iter().filter(|t| t.language == language) {
        let matcher = compile_matcher(spec)?;
        let pool: Vec<NormalizedTweet> =
            tweets.iter().filter(|t| matcher.matches(&t.normalized_text)).cloned().collect();
        out.push((spec.topic_id.clone(), pool));
    }
    if out.is_empty() {
        return Err(Error::Config(format!("no topics configured for language {language:?}")));
    }
    Ok(out)
}

fn enrich_digest(loaded: &LoadedLanguage<impl Scalar>, pool: &[NormalizedTweet]) -> Result<String> {
    let mut hasher = Sha256::new();
    hasher.update(b"enrich-cache v1\n");
    hasher.update(loaded.language.as_bytes());
    hasher.update(b"\n");
    hasher.update(loaded.tagger.name().as_bytes());
    hasher.update(b"\n");
    hasher.update(loaded.negation_window.to_string().as_bytes());
    hasher.update(b"\n");
    for path in &loaded.cache_inputs {
        hasher.update(std::fs::read(path)?);
        hasher.update(b"\n");
    }
    for tweet in pool {
        let line = serde_json::to_vec(tweet)
            .map_err(|e| Error::Consistency(format!("serialize tweet for digest: {e}")))?;
        hasher.update(line);
        hasher.update(b"\n");
    }
    Ok(hasher.finalize().iter().map(|b| format!("{b:02x}")).collect())
}

fn run_enrichment<S: Scalar>(
    loaded: &LoadedLanguage<S>,
    pool: Vec<NormalizedTweet>,
) -> (Vec<EnrichedTweet<S>>, EnrichReport) {
    enrich_corpus(
        pool,
        loaded.tagger.as_ref(),
        &loaded.sentiment,
        &loaded.language,
        loaded.negation_window,
    )
}

/// Enriches a pool, reusing a cached result when the pool, the resources and
/// the settings are byte-identical to an earlier run. An unreadable cache
/// entry is recomputed, never fatal.
pub fn enrich_pool<S: Scalar>(
    loaded: &LoadedLanguage<S>,
    pool: Vec<NormalizedTweet>,
    cache_dir: Option<&Path>,
) -> Result<(Vec<EnrichedTweet<S>>, EnrichReport)> {
    let Some(dir) = cache_dir else {
        return Ok(run_enrichment(loaded, pool));
    };
    std::fs::create_dir_all(dir)?;
    let digest = enrich_digest(loaded, &pool)?;
    let path = dir.join(format!("{digest}.jsonl"));
    if path.is_file() {
        match read_jsonl_path::<EnrichedTweet<S>>(&path) {
            Ok(cached) => {
                let report = EnrichReport {
                    input: pool.len() as u64,
                    enriched: cached.len() as u64,
                    failed: pool.len() as u64 - cached.len() as u64,
                };
                log::info!(
                    "stage=enrich language={} cache=hit tweets={}",
                    loaded.language,
                    cached.len()
                );
                return Ok((cached, report));
            }
            Err(e) => {
                log::warn!("enrichment cache {} unreadable, recomputing: {e}", path.display())
            }
        }
    }
    let (enriched, report) = run_enrichment(loaded, pool);
    let tmp = dir.join(format!("{digest}.tmp.{}", std::process::id()));
    write_jsonl_path(&tmp, &enriched)?;
    std::fs::rename(&tmp, &path)?;
    log::info!(
        "stage=enrich language={} cache=miss tweets={} failed={}",
        loaded.language,
        report.enriched,
        report.failed
    );
    Ok((enriched, report))
}

/// Counts from the clustering and selection step of one pool.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct DiversifyReport {
    pub scored: u64,
    pub dropped_unembedded: u64,
    pub clustered: u64,
    pub k_effective: u64,
    pub selected: u64,
}

/// Clusters a scored pool and keeps one tweet per cluster. When
/// `drop_unembedded` is set, tweets with no known embedding form are removed
/// before clustering instead of sitting at the origin.
pub fn diversify_pool<S: Scalar>(
    scored: Vec<ScoredTweet<S>>,
    embeddings: &EmbeddingModel<S>,
    params: &KMeansParams,
    drop_unembedded: bool,
) -> Result<(Vec<ScoredTweet<S>>, ClusterResult<S>, DiversifyReport)> {
    let total = scored.len() as u64;
    let mut vectors: Vec<TweetVector<S>> =
        scored.iter().map(|s| vectorize(&s.tweet, embeddings)).collect();
    let mut kept = scored;
    let mut dropped = 0u64;
    if drop_unembedded {
        let keep: Vec<bool> = vectors.iter().map(|v| v.matched > 0).collect();
        dropped = keep.iter().filter(|&&k| !k).count() as u64;
        vectors = vectors.into_iter().zip(&keep).filter_map(|(v, &k)| k.then_some(v)).collect();
        kept = kept.into_iter().zip(&keep).filter_map(|(t, &k)| k.then_some(t)).collect();
    }
    let clusters = kmeans(&vectors, params)?;
    let selected = select_diverse(kept, &clusters)?;
    let report = DiversifyReport {
        scored: total,
        dropped_unembedded: dropped,
        clustered: vectors.len() as u64,
        k_effective: clusters.k_effective as u64,
        selected: selected.len() as u64,
    };
    Ok((selected, clusters, report))
}

/// Turns a selection into ranked run entries, rank 1 first.
pub fn entries_for<S: Scalar>(
    selected: &[ScoredTweet<S>],
    topic_id: &str,
    tag: &str,
) -> Vec<RunEntry> {
    selected
        .iter()
        .enumerate()
        .map(|(i, t)| RunEntry {
            topic_id: topic_id.to_string(),
            tweet_id: t.id().to_string(),
            rank: (i + 1) as u32,
            score: t.argumentativity.as_f64(),
            run_tag: tag.to_string(),
        })
        .collect()
}

/// Funnel counts for one (language, topic) pool.
#[derive(Debug, Clone, Serialize)]
pub struct PoolReport {
    pub language: String,
    pub topic_id: String,
    /// Tweets that survived the language filter for this language.
    pub language_pool: u64,
    /// Tweets matching the topic.
    pub topic_pool: u64,
    pub enriched: u64,
    pub enrich_failed: u64,
    pub scored: u64,
    pub dropped_unembedded: u64,
    pub clustered: u64,
    pub k_effective: u64,
    pub selected: u64,
}

/// Funnel counts for a whole run.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub input: u64,
    pub normalized: u64,
    pub dedup_removed: u64,
    pub by_language: BTreeMap<String, u64>,
    pub pools: Vec<PoolReport>,
}

/// Everything one pool produced: the winners, the clustering, the counts.
pub struct PoolOutcome<S: Scalar = f64> {
    pub language: String,
    pub topic_id: String,
    pub selected: Vec<ScoredTweet<S>>,
    pub clusters: ClusterResult<S>,
    pub report: PoolReport,
}

/// Output of a full run over one corpus.
pub struct PipelineOutput<S: Scalar = f64> {
    pub entries: Vec<RunEntry>,
    pub pools: Vec<PoolOutcome<S>>,
    pub report: RunReport,
}

struct PoolTask {
    lang_idx: usize,
    topic_id: String,
    pool: Vec<NormalizedTweet>,
    language_pool: u64,
}

/// Runs the whole chain over a raw corpus. Pools are processed one per
/// (language, topic), languages in config order, topics in file order;
/// `workers` > 1 spreads pools over that many threads without changing
/// the output.
pub fn run_pipeline<S: Scalar>(
    cfg: &PipelineConfig,
    raw: Vec<RawTweet>,
    cache_dir: Option<&Path>,
    workers: usize,
) -> Result<PipelineOutput<S>> {
    let input = raw.len() as u64;
    let started = std::time::Instant::now();
    let mut normalized = normalize_corpus(&raw, &cfg.normalization);
    drop(raw);
    let dedup_removed = if cfg.dedup_text { dedup_by_text(&mut normalized) } else { 0 };
    let normalized_count = normalized.len() as u64;
    log::info!(
        "stage=normalize input={input} kept={normalized_count} dedup_removed={dedup_removed} wall_ms={}",
        started.elapsed().as_millis()
    );

    let started = std::time::Instant::now();
    let model = LangModel::load_path(&cfg.lang_model)?;
    let targets: Vec<&str> = cfg.languages.iter().map(String::as_str).collect();
    let buckets = filter_language(normalized, &model, &targets, cfg.min_confidence)?;
    let filter_ms = started.elapsed().as_millis();
    for (lang, bucket) in &buckets {
        log::info!("stage=filter-lang language={lang} kept={} wall_ms={filter_ms}", bucket.len());
    }

    let topics = load_topics(&cfg.topics)?;
    let profile: RunProfile<S> = resolve_profile(&cfg.profile)?;
    profile.validate()?;
    let loaded: Vec<LoadedLanguage<S>> =
        cfg.languages.iter().map(|l| load_language(cfg, l)).collect::<Result<_>>()?;
    for lang in &loaded {
        lang.score.check(&profile, &lang.language)?;
    }

    let mut tasks = Vec::new();
    for (lang_idx, language) in cfg.languages.iter().enumerate() {
        let bucket = &buckets[language];
        let started = std::time::Instant::now();
        let pools = topic_pools(bucket, &topics, language)?;
        let topic_ms = started.elapsed().as_millis();
        for (topic_id, pool) in pools {
            log::info!(
                "stage=filter-topic language={language} topic={topic_id} pool={} wall_ms={topic_ms}",
                pool.len()
            );
            tasks.push(PoolTask {
                lang_idx,
                topic_id,
                pool,
                language_pool: bucket.len() as u64,
            });
        }
    }

    let params = cfg.kmeans_params();
    let process = |task: PoolTask| -> Result<PoolOutcome<S>> {
        let started = std::time::Instant::now();
        let lang = &loaded[task.lang_idx];
        let topic_pool = task.pool.len() as u64;
        let (enriched, enrich_report) = enrich_pool(lang, task.pool, cache_dir)?;
        let scored = score_corpus(enriched, &lang.score, &profile, &lang.language)?;
        let scored_count = scored.len() as u64;
        let (selected, clusters, div) =
            diversify_pool(scored, &lang.embeddings, &params, cfg.drop_unembedded)?;
        log::info!(
            "stage=pool language={} topic={} pool={} enriched={} clustered={} selected={} wall_ms={}",
            lang.language,
            task.topic_id,
            topic_pool,
            enrich_report.enriched,
            div.clustered,
            div.selected,
            started.elapsed().as_millis()
        );
        let report = PoolReport {
            language: lang.language.clone(),
            topic_id: task.topic_id.clone(),
            language_pool: task.language_pool,
            topic_pool,
            enriched: enrich_report.enriched,
            enrich_failed: enrich_report.failed,
            scored: scored_count,
            dropped_unembedded: div.dropped_unembedded,
            clustered: div.clustered,
            k_effective: div.k_effective,
            selected: div.selected,
        };
        Ok(PoolOutcome {
            language: lang.language.clone(),
            topic_id: task.topic_id,
            selected,
            clusters,
            report,
        })
    };

    let outcomes: Vec<PoolOutcome<S>> = if workers > 1 {
        let thread_pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Config(format!("cannot build worker pool: {e}")))?;
        thread_pool.install(|| tasks.into_par_iter().map(process).collect::<Result<Vec<_>>>())?
    } else {
        tasks.into_iter().map(process).collect::<Result<Vec<_>>>()?
    };

    let mut entries = Vec::new();
    for outcome in &outcomes {
        let tag = run_tag(&profile.name, &outcome.language);
        entries.extend(entries_for(&outcome.selected, &outcome.topic_id, &tag));
    }
    let report = RunReport {
        input,
        normalized: normalized_count,
        dedup_removed,
        by_language: buckets.iter().map(|(k, v)| (k.clone(), v.len() as u64)).collect(),
        pools: outcomes.iter().map(|o| o.report.clone()).collect(),
    };
    Ok(PipelineOutput { entries, pools: outcomes, report })
}
