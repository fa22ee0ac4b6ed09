//! Batch front end: `run` drives the whole retrieval chain, and every stage
//! is also its own subcommand so a run can be composed, inspected, or
//! restarted from any intermediate file.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use argmine_core::corpus::{
    dedup_by_text, read_jsonl_path, read_raw_path, write_jsonl_path, NormalizedTweet,
};
use argmine_core::eval::{
    corpus_stats, evaluate_run, load_reference, load_texts, pool_runs, read_run_file_path,
    write_run_file, Discount, Gain, RunEntry,
};
use argmine_core::langid::{filter_language, read_training_file, train_langid, LangModel};
use argmine_core::pipeline::{
    diversify_pool, enrich_pool, entries_for, load_language, normalize_corpus, run_pipeline,
    run_tag, topic_pools, PipelineConfig,
};
use argmine_core::scoring::resolve_profile;
use argmine_core::topic::load_topics;
use argmine_core::{EnrichedTweet, Error, Result, ScoredTweet};

#[derive(Parser)]
#[command(
    name = "argmine",
    version,
    about = "Retrieve argumentative, diverse tweets from a multilingual corpus"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the full chain: normalize, language filter, topic filter,
    /// enrich, score, cluster, select; write one ranked run file.
    Run(RunArgs),
    /// Train the character n-gram language identifier.
    LangTrain(LangTrainArgs),
    /// Normalize a raw corpus and split it by predicted language.
    FilterLang(FilterLangArgs),
    /// Split one language's tweets into per-topic pools.
    FilterTopic(FilterTopicArgs),
    /// Tag, lemmatize, and attach sentiment to a topic pool.
    Enrich(EnrichArgs),
    /// Score an enriched pool with a run profile.
    Score(ScoreArgs),
    /// Cluster a scored pool and keep the best tweet per cluster.
    Diversify(DiversifyArgs),
    /// Score a run file against regex or judged references.
    Eval(EvalArgs),
    /// Summarize an enriched corpus: counts, author ratio, averages.
    Stats(StatsArgs),
    /// Union the top-ranked ids of several runs into a judgment skeleton.
    Pool(PoolArgs),
}

#[derive(clap::Args)]
struct RunArgs {
    /// Raw tweet corpus, one JSON object per line.
    corpus: PathBuf,
    /// Pipeline configuration (JSON); relative paths resolve against it.
    #[arg(long)]
    config: PathBuf,
    /// Run file to write.
    #[arg(long)]
    output: PathBuf,
    /// Write the stage-count funnel as JSON.
    #[arg(long)]
    counts_json: Option<PathBuf>,
    /// Write per-pool cluster assignments into this directory.
    #[arg(long)]
    dump_clusters: Option<PathBuf>,
    /// Cache enrichment results here, keyed by input digest.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Pools processed in parallel; 1 keeps everything on one thread.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Drop exact normalized-text duplicates before filtering.
    #[arg(long)]
    dedup_text: bool,
    /// Drop tweets with no embedded token instead of clustering them at the origin.
    #[arg(long)]
    drop_unembedded: bool,
}

#[derive(clap::Args)]
struct LangTrainArgs {
    /// Labeled corpus: one "class<TAB>text" row per line.
    #[arg(long)]
    train: PathBuf,
    /// Where to save the model.
    #[arg(long)]
    output: PathBuf,
    /// Comma-separated class list; defaults to the classes seen in training,
    /// sorted.
    #[arg(long)]
    classes: Option<String>,
    /// Shortest character n-gram length.
    #[arg(long, default_value_t = 1)]
    ngram_min: usize,
    /// Longest character n-gram length.
    #[arg(long, default_value_t = 3)]
    ngram_max: usize,
    /// Additive smoothing for n-gram counts.
    #[arg(long, default_value_t = 1.0)]
    smoothing: f64,
    /// Labeled held-out corpus; prints accuracy after training.
    #[arg(long)]
    holdout: Option<PathBuf>,
}

#[derive(clap::Args)]
struct FilterLangArgs {
    /// Raw tweet corpus, one JSON object per line.
    corpus: PathBuf,
    /// Pipeline configuration (JSON); relative paths resolve against it.
    #[arg(long)]
    config: PathBuf,
    /// Directory for the per-language files lang-<class>.jsonl.
    #[arg(long, default_value = ".")]
    output_dir: PathBuf,
    /// Drop exact normalized-text duplicates after normalizing.
    #[arg(long)]
    dedup_text: bool,
}

#[derive(clap::Args)]
struct FilterTopicArgs {
    /// Normalized tweets of one language (a filter-lang output).
    tweets: PathBuf,
    /// Pipeline configuration (JSON); relative paths resolve against it.
    #[arg(long)]
    config: PathBuf,
    /// Language the input tweets belong to.
    #[arg(long)]
    language: String,
    /// Directory for the per-topic files pool-<language>-<topic>.jsonl.
    #[arg(long, default_value = ".")]
    output_dir: PathBuf,
}

#[derive(clap::Args)]
struct EnrichArgs {
    /// Normalized tweets of one topic pool.
    pool: PathBuf,
    /// Pipeline configuration (JSON); relative paths resolve against it.
    #[arg(long)]
    config: PathBuf,
    /// Language the input tweets belong to.
    #[arg(long)]
    language: String,
    /// Enriched tweets, one JSON object per line.
    #[arg(long)]
    output: PathBuf,
    /// Cache enrichment results here, keyed by input digest.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(clap::Args)]
struct ScoreArgs {
    /// Enriched tweets (an enrich output).
    enriched: PathBuf,
    /// Pipeline configuration (JSON); relative paths resolve against it.
    #[arg(long)]
    config: PathBuf,
    /// Language the input tweets belong to.
    #[arg(long)]
    language: String,
    /// run1|run2|run3 or a profile JSON path; defaults to the config profile.
    #[arg(long)]
    profile: Option<String>,
    /// Scored tweets, one JSON object per line.
    #[arg(long)]
    output: PathBuf,
}

#[derive(clap::Args)]
struct DiversifyArgs {
    /// Scored tweets (a score output).
    scored: PathBuf,
    /// Pipeline configuration (JSON); relative paths resolve against it.
    #[arg(long)]
    config: PathBuf,
    /// Language the input tweets belong to.
    #[arg(long)]
    language: String,
    /// Topic id stamped on the emitted entries.
    #[arg(long)]
    topic: String,
    /// run1|run2|run3 or a profile JSON path; names the run tag. Defaults to
    /// the config profile. Must match the profile the pool was scored with.
    #[arg(long)]
    profile: Option<String>,
    /// Overrides the derived "<profile>.<language>" run tag.
    #[arg(long)]
    run_tag: Option<String>,
    /// Run file to write.
    #[arg(long)]
    output: PathBuf,
    /// Append to the run file instead of truncating it.
    #[arg(long)]
    append: bool,
    /// Write cluster assignments (tweet id to cluster index) as JSON.
    #[arg(long)]
    dump_clusters: Option<PathBuf>,
    /// Drop tweets with no embedded token instead of clustering them at the origin.
    #[arg(long)]
    drop_unembedded: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GainArg {
    Binary,
    Linear,
    Exponential,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiscountArg {
    Log2,
    Rank,
}

#[derive(clap::Args)]
struct EvalArgs {
    /// Run file to evaluate.
    runfile: PathBuf,
    /// Reference file: "regex" or "qrels" header, then one entry per line.
    #[arg(long)]
    refs: PathBuf,
    /// Corpus with tweet texts; required for regex references.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Gain applied to relevance grades.
    #[arg(long, value_enum, default_value_t = GainArg::Binary)]
    graded: GainArg,
    /// Rank discount for the cumulative gain.
    #[arg(long, value_enum, default_value_t = DiscountArg::Log2)]
    discount: DiscountArg,
    /// Truncate both the run and the ideal ranking at this rank.
    #[arg(long)]
    cutoff: Option<usize>,
    /// Print the report as JSON instead of aligned text.
    #[arg(long)]
    json: bool,
}

#[derive(clap::Args)]
struct StatsArgs {
    /// Enriched tweets (an enrich output).
    enriched: PathBuf,
}

#[derive(clap::Args)]
struct PoolArgs {
    /// Run files to pool.
    #[arg(required = true)]
    runs: Vec<PathBuf>,
    /// Keep ids ranked at or above this depth.
    #[arg(long, default_value_t = 10)]
    depth: u32,
    /// Write the skeleton here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    if let Err(e) = dispatch(cli.cmd) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn dispatch(cmd: Cmd) -> Result<()> {
    match cmd {
        Cmd::Run(a) => cmd_run(a),
        Cmd::LangTrain(a) => cmd_lang_train(a),
        Cmd::FilterLang(a) => cmd_filter_lang(a),
        Cmd::FilterTopic(a) => cmd_filter_topic(a),
        Cmd::Enrich(a) => cmd_enrich(a),
        Cmd::Score(a) => cmd_score(a),
        Cmd::Diversify(a) => cmd_diversify(a),
        Cmd::Eval(a) => cmd_eval(a),
        Cmd::Stats(a) => cmd_stats(a),
        Cmd::Pool(a) => cmd_pool(a),
    }
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| {
        Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    })
}

fn ensure_dir(path: &Path) -> Result<()> {
    std::fs::create_dir_all(path).map_err(|e| {
        Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    })
}

fn cmd_run(a: RunArgs) -> Result<()> {
    let mut cfg = PipelineConfig::load(&a.config)?;
    if a.dedup_text {
        cfg.dedup_text = true;
    }
    if a.drop_unembedded {
        cfg.drop_unembedded = true;
    }
    let started = std::time::Instant::now();
    let (raw, report) = read_raw_path(&a.corpus)?;
    if report.skipped > 0 {
        log::warn!("corpus: skipped {} malformed of {} lines", report.skipped, report.lines);
    }
    let out = run_pipeline::<f64>(&cfg, raw, a.cache.as_deref(), a.workers)?;
    write_text(&a.output, &write_run_file(&out.entries))?;
    if let Some(path) = &a.counts_json {
        let json = serde_json::to_string_pretty(&out.report)
            .map_err(|e| Error::Consistency(format!("cannot serialize counts: {e}")))?;
        write_text(path, &json)?;
    }
    if let Some(dir) = &a.dump_clusters {
        ensure_dir(dir)?;
        for pool in &out.pools {
            let json = serde_json::to_string_pretty(&pool.clusters)
                .map_err(|e| Error::Consistency(format!("cannot serialize clusters: {e}")))?;
            write_text(&dir.join(format!("clusters-{}-{}.json", pool.language, pool.topic_id)), &json)?;
        }
    }
    for pool in &out.report.pools {
        println!(
            "{} {} pool={} selected={}",
            pool.language, pool.topic_id, pool.topic_pool, pool.selected
        );
    }
    println!(
        "wrote {} entries to {} in {:.1}s",
        out.entries.len(),
        a.output.display(),
        started.elapsed().as_secs_f64()
    );
    Ok(())
}

fn cmd_lang_train(a: LangTrainArgs) -> Result<()> {
    let rows = read_training_file(&a.train)?;
    let classes: Vec<String> = match &a.classes {
        Some(list) => list.split(',').map(|c| c.trim().to_string()).collect(),
        None => {
            let mut seen: Vec<String> = Vec::new();
            for (class, _) in &rows {
                if !seen.contains(class) {
                    seen.push(class.clone());
                }
            }
            seen.sort();
            seen
        }
    };
    let class_refs: Vec<&str> = classes.iter().map(String::as_str).collect();
    let labeled = rows.iter().map(|(class, text)| (text.as_str(), class.as_str()));
    let model = train_langid(labeled, &class_refs, (a.ngram_min, a.ngram_max), a.smoothing)?;
    model.save_path(&a.output)?;
    println!(
        "trained on {} texts, {} classes, {} features -> {}",
        rows.len(),
        model.classes().len(),
        model.feature_count(),
        a.output.display()
    );
    if let Some(holdout) = &a.holdout {
        let held = read_training_file(holdout)?;
        let correct =
            held.iter().filter(|(class, text)| model.classify(text).lang == *class).count();
        println!("holdout accuracy {:.4} ({} of {})", correct as f64 / held.len() as f64, correct, held.len());
    }
    Ok(())
}

fn cmd_filter_lang(a: FilterLangArgs) -> Result<()> {
    let mut cfg = PipelineConfig::load(&a.config)?;
    if a.dedup_text {
        cfg.dedup_text = true;
    }
    let (raw, report) = read_raw_path(&a.corpus)?;
    if report.skipped > 0 {
        log::warn!("corpus: skipped {} malformed of {} lines", report.skipped, report.lines);
    }
    let mut tweets = normalize_corpus(&raw, &cfg.normalization);
    let removed = if cfg.dedup_text { dedup_by_text(&mut tweets) } else { 0 };
    let model = LangModel::load_path(&cfg.lang_model)?;
    let targets: Vec<&str> = cfg.languages.iter().map(String::as_str).collect();
    let buckets = filter_language(tweets, &model, &targets, cfg.min_confidence)?;
    ensure_dir(&a.output_dir)?;
    for (lang, bucket) in &buckets {
        let path = a.output_dir.join(format!("lang-{lang}.jsonl"));
        write_jsonl_path(&path, bucket)?;
        println!("{lang} {} -> {}", bucket.len(), path.display());
    }
    if removed > 0 {
        println!("removed {removed} duplicate texts");
    }
    Ok(())
}

fn cmd_filter_topic(a: FilterTopicArgs) -> Result<()> {
    let cfg = PipelineConfig::load(&a.config)?;
    let tweets: Vec<NormalizedTweet> = read_jsonl_path(&a.tweets)?;
    let topics = load_topics(&cfg.topics)?;
    ensure_dir(&a.output_dir)?;
    for (topic_id, pool) in topic_pools(&tweets, &topics, &a.language)? {
        let path = a.output_dir.join(format!("pool-{}-{}.jsonl", a.language, topic_id));
        write_jsonl_path(&path, &pool)?;
        println!("{} {} -> {}", topic_id, pool.len(), path.display());
    }
    Ok(())
}

fn cmd_enrich(a: EnrichArgs) -> Result<()> {
    let cfg = PipelineConfig::load(&a.config)?;
    let loaded = load_language::<f64>(&cfg, &a.language)?;
    let pool: Vec<NormalizedTweet> = read_jsonl_path(&a.pool)?;
    let (enriched, report) = enrich_pool(&loaded, pool, a.cache.as_deref())?;
    write_jsonl_path(&a.output, &enriched)?;
    println!(
        "enriched {} of {} ({} failed) -> {}",
        report.enriched,
        report.input,
        report.failed,
        a.output.display()
    );
    Ok(())
}

fn cmd_score(a: ScoreArgs) -> Result<()> {
    let cfg = PipelineConfig::load(&a.config)?;
    let loaded = load_language::<f64>(&cfg, &a.language)?;
    let profile = resolve_profile::<f64>(a.profile.as_deref().unwrap_or(&cfg.profile))?;
    let enriched: Vec<EnrichedTweet> = read_jsonl_path(&a.enriched)?;
    let scored = argmine_core::scoring::score_corpus(enriched, &loaded.score, &profile, &a.language)?;
    write_jsonl_path(&a.output, &scored)?;
    println!("scored {} tweets with {} -> {}", scored.len(), profile.name, a.output.display());
    Ok(())
}

fn cmd_diversify(a: DiversifyArgs) -> Result<()> {
    let mut cfg = PipelineConfig::load(&a.config)?;
    if a.drop_unembedded {
        cfg.drop_unembedded = true;
    }
    let loaded = load_language::<f64>(&cfg, &a.language)?;
    let scored: Vec<ScoredTweet> = read_jsonl_path(&a.scored)?;
    let tag = match &a.run_tag {
        Some(tag) => tag.clone(),
        None => {
            let profile = resolve_profile::<f64>(a.profile.as_deref().unwrap_or(&cfg.profile))?;
            run_tag(&profile.name, &a.language)
        }
    };
    let (selected, clusters, report) =
        diversify_pool(scored, &loaded.embeddings, &cfg.kmeans_params(), cfg.drop_unembedded)?;
    let entries = entries_for(&selected, &a.topic, &tag);
    let text = write_run_file(&entries);
    if a.append {
        use std::io::Write as _;
        let mut file = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&a.output)
            .map_err(|e| {
                Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", a.output.display())))
            })?;
        file.write_all(text.as_bytes())?;
    } else {
        write_text(&a.output, &text)?;
    }
    if let Some(path) = &a.dump_clusters {
        let json = serde_json::to_string_pretty(&clusters)
            .map_err(|e| Error::Consistency(format!("cannot serialize clusters: {e}")))?;
        write_text(path, &json)?;
    }
    println!(
        "clustered {} into {} groups, kept {} -> {}",
        report.clustered,
        report.k_effective,
        report.selected,
        a.output.display()
    );
    Ok(())
}

fn cmd_eval(a: EvalArgs) -> Result<()> {
    let entries = read_run_file_path(&a.runfile)?;
    let refs = load_reference(&a.refs)?;
    let texts = a.corpus.as_deref().map(load_texts).transpose()?;
    let gain = match a.graded {
        GainArg::Binary => Gain::Binary,
        GainArg::Linear => Gain::Linear,
        GainArg::Exponential => Gain::Exponential,
    };
    let discount = match a.discount {
        DiscountArg::Log2 => Discount::Log2,
        DiscountArg::Rank => Discount::Rank,
    };
    let report = evaluate_run(&entries, &refs, texts.as_ref(), gain, discount, a.cutoff)?;
    if a.json {
        let json = serde_json::to_string_pretty(&report)
            .map_err(|e| Error::Consistency(format!("cannot serialize report: {e}")))?;
        println!("{json}");
        return Ok(());
    }
    for t in &report.topics {
        println!(
            "{} {} entries={} relevant={} ndcg={:.5} arg%={:.2}",
            t.run_tag, t.topic_id, t.entries, t.relevant, t.ndcg, t.arg_percentage
        );
    }
    println!(
        "aggregate ndcg_mean={:.5} arg%={:.2}",
        report.ndcg_mean, report.arg_percentage_overall
    );
    Ok(())
}

fn cmd_stats(a: StatsArgs) -> Result<()> {
    let enriched: Vec<EnrichedTweet> = read_jsonl_path(&a.enriched)?;
    let report = corpus_stats(&enriched);
    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| Error::Consistency(format!("cannot serialize stats: {e}")))?;
    println!("{json}");
    Ok(())
}

fn cmd_pool(a: PoolArgs) -> Result<()> {
    let runs: Vec<Vec<RunEntry>> =
        a.runs.iter().map(|p| read_run_file_path(p)).collect::<Result<_>>()?;
    let pool = pool_runs(&runs, a.depth)?;
    let mut out = String::from("qrels\n");
    for (topic, ids) in &pool {
        for id in ids {
            out.push_str(&format!("{topic} {id} 0\n"));
        }
    }
    match &a.output {
        Some(path) => write_text(path, &out)?,
        None => print!("{out}"),
    }
    Ok(())
}
