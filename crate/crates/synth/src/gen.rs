//! Generates a bilingual tweet corpus with two planted topics plus every
//! resource file a full pipeline run needs: lexicons, embeddings, topic
//! specs, language-identifier training data, and a pipeline config. All
//! output is a pure function of the seed.

use std::io;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::desk;

const EN_DETS: &[&str] = &["the", "this", "that", "a"];
const EN_SUBJECTS: &[&str] = &[
    "festival", "concert", "crowd", "stage", "ticket", "show", "band", "film", "music", "sound",
    "night", "street", "food",
];
const EN_VERBS: &[&str] = &["is", "was", "are", "felt", "seemed", "looked"];
const EN_ADJECTIVES: &[&str] = &[
    "happy", "sad", "angry", "nice", "late", "early", "expensive", "cheap", "crowded", "noisy",
    "perfect", "awesome", "boring", "exciting", "huge", "tiny", "bright", "dark", "cold", "empty",
    "joyful", "gorgeous", "massive", "terrible", "peaceful",
];
const EN_CONNECTORS: &[&str] =
    &["and", "but", "or", "because", "while", "during", "before", "after", "with", "about"];
const EN_TAILS: &[&str] = &["tonight", "tomorrow", "today", "downtown", "honestly", "everyone"];

const FR_DETS: &[&str] = &["le", "la", "les", "ce", "cette", "un", "une"];
const FR_SUBJECTS: &[&str] = &[
    "festival", "concert", "musique", "foule", "scène", "billet", "spectacle", "groupe",
    "artiste", "film", "ville", "soir", "nuit", "pluie",
];
const FR_VERBS: &[&str] = &["est", "était", "sont", "étaient"];
const FR_ADJECTIVES: &[&str] = &[
    "génial", "magnifique", "superbe", "horrible", "terrible", "incroyable", "bon", "mauvais",
    "grand", "petit", "beau", "joli", "joyeux", "merveilleux", "magique", "électrique", "agréable",
];
const FR_CONNECTORS: &[&str] =
    &["et", "mais", "ou", "donc", "car", "que", "quand", "parce", "si", "comme"];
const FR_TAILS: &[&str] = &["vraiment", "franchement", "demain", "maintenant", "ensemble"];

/// Topic keyword planted in abundance.
pub const ABUNDANT_TOPIC: &str = "aurora";
/// Topic keyword planted scarcely.
pub const SCARCE_TOPIC: &str = "mistralfest";

/// Everything `write_fixture` put on disk, plus the quotas it planted.
pub struct Fixture {
    pub dir: PathBuf,
    pub corpus: PathBuf,
    pub config: PathBuf,
    pub topics: PathBuf,
    pub langid_train: PathBuf,
    /// Where the config expects the trained language model; training it is
    /// the caller's job.
    pub lang_model: PathBuf,
    pub n_tweets: usize,
    /// Tweets planted with the abundant topic keyword, per language.
    pub abundant_quota: usize,
    /// Tweets planted with the scarce topic keyword, per language.
    pub scarce_quota: usize,
}

struct Sentence {
    words: Vec<String>,
}

impl Sentence {
    fn text(&self) -> String {
        self.words.join(" ")
    }
}

fn pick<'a>(rng: &mut ChaCha8Rng, pool: &[&'a str]) -> &'a str {
    pool[rng.gen_range(0..pool.len())]
}

fn sentence(rng: &mut ChaCha8Rng, language: &str) -> Sentence {
    let (dets, subjects, verbs, adjectives, connectors, tails, negation) = match language {
        "en" => (EN_DETS, EN_SUBJECTS, EN_VERBS, EN_ADJECTIVES, EN_CONNECTORS, EN_TAILS, "not"),
        _ => (FR_DETS, FR_SUBJECTS, FR_VERBS, FR_ADJECTIVES, FR_CONNECTORS, FR_TAILS, "pas"),
    };
    let mut words: Vec<String> = Vec::with_capacity(12);
    words.push(pick(rng, dets).into());
    words.push(pick(rng, subjects).into());
    words.push(pick(rng, verbs).into());
    if rng.gen_bool(0.15) {
        if language == "fr" {
            words.insert(words.len() - 1, "ne".into());
        }
        words.push(negation.into());
    }
    words.push(pick(rng, adjectives).into());
    words.push(pick(rng, connectors).into());
    words.push(pick(rng, dets).into());
    words.push(pick(rng, subjects).into());
    words.push(pick(rng, verbs).into());
    words.push(pick(rng, adjectives).into());
    if rng.gen_bool(0.5) {
        words.push(pick(rng, tails).into());
    }
    Sentence { words }
}

/// Plants `keyword` at a random position.
fn plant(rng: &mut ChaCha8Rng, s: &mut Sentence, keyword: &str) {
    let at = rng.gen_range(0..=s.words.len());
    s.words.insert(at, keyword.to_string());
}

fn entity_noise(rng: &mut ChaCha8Rng, text: &mut String) {
    if rng.gen_bool(0.2) {
        text.push_str(" https://t.co/");
        for _ in 0..8 {
            text.push((b'a' + rng.gen_range(0..26)) as char);
        }
    }
    if rng.gen_bool(0.15) {
        text.push_str(&format!(" @fan{}", rng.gen_range(0..500)));
    }
    if rng.gen_bool(0.1) {
        text.push_str(" 🔥");
    }
    if rng.gen_bool(0.07) {
        text.push_str(" :)");
    }
}

struct Draft {
    language: &'static str,
    text: String,
}

fn drafts_for_language(
    rng: &mut ChaCha8Rng,
    language: &'static str,
    total: usize,
    abundant: usize,
    scarce: usize,
) -> Vec<Draft> {
    assert!(abundant + scarce <= total);
    let mut out = Vec::with_capacity(total);
    for i in 0..total {
        let mut s = sentence(rng, language);
        if i < abundant {
            plant(rng, &mut s, ABUNDANT_TOPIC);
        } else if i < abundant + scarce {
            plant(rng, &mut s, SCARCE_TOPIC);
        }
        out.push(Draft { language, text: s.text() });
    }
    // A few tweets that are nothing but a link: normalization empties them
    // and the language filter drops them.
    for draft in out.iter_mut().rev().take(5) {
        draft.text = "https://t.co/onlyalink".to_string();
    }
    out
}

fn other_drafts(rng: &mut ChaCha8Rng, total: usize) -> Vec<Draft> {
    let seeds: Vec<&'static str> = desk::DE_SEEDS
        .iter()
        .chain(desk::ES_SEEDS)
        .chain(desk::IT_SEEDS)
        .copied()
        .collect();
    (0..total)
        .map(|_| Draft {
            language: "other",
            text: pick(rng, &seeds).to_lowercase(),
        })
        .collect()
}

fn embedding_file(
    rng: &mut ChaCha8Rng,
    vocab: &[&str],
    codes: usize,
    dim: usize,
) -> String {
    let mut out = format!("{} {}\n", vocab.len() + codes, dim);
    let row = |out: &mut String, token: &str, rng: &mut ChaCha8Rng| {
        out.push_str(token);
        for _ in 0..dim {
            out.push_str(&format!(" {:.6}", rng.gen_range(-1.0..1.0)));
        }
        out.push('\n');
    };
    for token in vocab {
        row(&mut out, token, rng);
    }
    for i in 0..codes {
        row(&mut out, &format!("c{i}"), rng);
    }
    out
}

fn en_vocab() -> Vec<&'static str> {
    let mut v: Vec<&'static str> = Vec::new();
    for pool in [EN_DETS, EN_SUBJECTS, EN_VERBS, EN_ADJECTIVES, EN_CONNECTORS, EN_TAILS] {
        v.extend_from_slice(pool);
    }
    v.push("not");
    v.push(ABUNDANT_TOPIC);
    v.push(SCARCE_TOPIC);
    v
}

fn fr_vocab() -> Vec<&'static str> {
    let mut v: Vec<&'static str> = Vec::new();
    for pool in [FR_DETS, FR_SUBJECTS, FR_VERBS, FR_ADJECTIVES, FR_CONNECTORS, FR_TAILS] {
        v.extend_from_slice(pool);
    }
    v.push("ne");
    v.push("pas");
    v.push(ABUNDANT_TOPIC);
    v.push(SCARCE_TOPIC);
    v
}

const EN_SENTIMENT: &str = "\
happy\t0.8\t0.9
sad\t-0.7\t0.8
angry\t-0.8\t0.85
nice\t0.6\t0.7
awesome\t0.9\t0.95
boring\t-0.6\t0.75
exciting\t0.85\t0.9
perfect\t0.9\t0.9
terrible\t-0.9\t0.85
joyful\t0.85\t0.9
gorgeous\t0.8\t0.85
noisy\t-0.4\t0.6
crowded\t-0.2\t0.5
cheap\t0.3\t0.5
expensive\t-0.3\t0.5
peaceful\t0.7\t0.75
massive\t0.2\t0.4
huge\t0.2\t0.4
tiny\t-0.1\t0.3
bright\t0.4\t0.45
dark\t-0.4\t0.45
cold\t-0.3\t0.4
empty\t-0.5\t0.55
late\t-0.2\t0.35
early\t0.1\t0.3
festival\t0.2\t0.3
music\t0.3\t0.35
good\t0.7\t0.8
bad\t-0.7\t0.8
";

const FR_SENTIMENT: &str = "\
génial\t0.9\t0.9
magnifique\t0.85\t0.9
superbe\t0.8\t0.85
horrible\t-0.9\t0.9
terrible\t-0.8\t0.85
incroyable\t0.8\t0.9
bon\t0.7\t0.8
mauvais\t-0.7\t0.8
grand\t0.2\t0.35
petit\t-0.1\t0.3
beau\t0.6\t0.7
joli\t0.5\t0.65
joyeux\t0.8\t0.85
merveilleux\t0.9\t0.9
magique\t0.75\t0.8
électrique\t0.5\t0.6
agréable\t0.7\t0.75
festival\t0.2\t0.3
musique\t0.3\t0.35
pluie\t-0.3\t0.4
";

/// Raw range 1..9.
const EN_AROUSAL: &str = "\
festival\t6.5
concert\t6.0
crowd\t5.5
stage\t4.8
music\t5.9
night\t4.5
sound\t5.1
street\t4.0
food\t5.0
ticket\t4.2
show\t5.2
band\t5.4
film\t4.6
happy\t7.2
sad\t3.1
angry\t7.8
awesome\t7.5
boring\t2.2
exciting\t8.1
perfect\t6.8
terrible\t6.9
joyful\t7.4
gorgeous\t6.6
noisy\t6.2
crowded\t5.8
cold\t3.8
dark\t3.5
bright\t5.8
empty\t2.9
huge\t5.3
tiny\t3.0
massive\t5.7
peaceful\t2.8
cheap\t3.9
expensive\t5.2
late\t4.1
early\t3.7
nice\t4.9
good\t5.6
bad\t4.9
";

/// Raw range 1..5.
const EN_CONCRETENESS: &str = "\
festival\t4.2
concert\t4.4
crowd\t4.5
stage\t4.8
music\t4.0
night\t4.3
sound\t3.6
street\t4.9
food\t4.9
ticket\t4.8
show\t3.9
band\t4.4
film\t4.6
happy\t2.2
sad\t2.1
angry\t2.4
awesome\t1.8
boring\t1.9
exciting\t2.0
perfect\t1.7
terrible\t2.0
joyful\t2.1
gorgeous\t2.5
noisy\t3.4
crowded\t3.6
cold\t3.9
dark\t3.7
bright\t3.8
empty\t3.1
huge\t3.2
tiny\t3.3
massive\t3.2
peaceful\t2.3
cheap\t2.6
expensive\t2.7
late\t2.8
early\t2.8
nice\t1.9
good\t1.9
bad\t1.9
";

const FR_EMOTION: &str = "\
génial\tpositive\t1,0,0,0,1,0
magnifique\tpositive\t1,0,0,0,0,0
superbe\tpositive\t1,0,0,0,0,0
horrible\tnegative\t0,1,1,0,0,0
terrible\tnegative\t0,1,0,1,0,0
incroyable\tpositive\t1,0,0,0,1,0
bon\tpositive\t1,0,0,0,0,0
mauvais\tnegative\t0,1,0,0,0,0
beau\tpositive\t1,0,0,0,0,0
joli\tpositive\t1,0,0,0,0,0
joyeux\tpositive\t1,0,0,0,1,0
merveilleux\tpositive\t1,0,0,0,1,0
magique\tpositive\t1,0,0,0,1,0
électrique\tpositive\t0,0,0,0,1,0
agréable\tpositive\t1,0,0,0,0,0
pluie\tnegative\t0,0,0,1,0,0
";

fn topics_json() -> String {
    serde_json::json!([
        {"topic_id": ABUNDANT_TOPIC, "language": "en", "keywords": [[ABUNDANT_TOPIC]]},
        {"topic_id": SCARCE_TOPIC, "language": "en", "keywords": [[SCARCE_TOPIC]]},
        {"topic_id": ABUNDANT_TOPIC, "language": "fr", "keywords": [[ABUNDANT_TOPIC]]},
        {"topic_id": SCARCE_TOPIC, "language": "fr", "keywords": [[SCARCE_TOPIC]]}
    ])
    .to_string()
}

fn config_json(k: usize, seed: u64) -> String {
    serde_json::json!({
        "languages": ["en", "fr"],
        "topics": "topics.json",
        "lang_model": "lang.model",
        "resources": {
            "en": {
                "sentiment_lexicon": "sent-en.tsv",
                "embeddings": "emb-en.vec",
                "arousal_lexicon": "arousal-en.tsv",
                "concreteness_lexicon": "concreteness-en.tsv"
            },
            "fr": {
                "sentiment_lexicon": "sent-fr.tsv",
                "embeddings": "emb-fr.vec",
                "emotion_lexicon": "emotion-fr.tsv"
            }
        },
        "profile": "run1",
        "k": k,
        "seed": seed
    })
    .to_string()
}

/// Writes the corpus and every resource file into `dir`. `n_en`/`n_fr`
/// control the language mix, `scarce` the per-language quota of the scarce
/// topic; 55% of each language's tweets carry the abundant topic keyword.
pub fn write_fixture(
    dir: &Path,
    seed: u64,
    n_en: usize,
    n_fr: usize,
    n_other: usize,
    scarce: usize,
) -> io::Result<Fixture> {
    std::fs::create_dir_all(dir)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let abundant_en = n_en * 55 / 100;
    let abundant_fr = n_fr * 55 / 100;
    let mut drafts = drafts_for_language(&mut rng, "en", n_en, abundant_en, scarce);
    drafts.extend(drafts_for_language(&mut rng, "fr", n_fr, abundant_fr, scarce));
    drafts.extend(other_drafts(&mut rng, n_other));
    drafts.shuffle(&mut rng);

    let n = drafts.len();
    let author_pool = (n / 3).max(1);
    let mut corpus = String::new();
    for (i, draft) in drafts.iter().enumerate() {
        let mut text = draft.text.clone();
        if draft.language != "other" {
            // A unique code token with its own embedding row keeps every
            // tweet vector distinct, so cluster counts are exact.
            text.push_str(&format!(" c{i}"));
        }
        entity_noise(&mut rng, &mut text);
        let mut obj = serde_json::json!({
            "id": format!("t{i:05}"),
            "author": format!("user{:04}", rng.gen_range(0..author_pool)),
            "text": text,
        });
        if rng.gen_bool(0.3) {
            obj["timestamp"] =
                serde_json::json!(format!("2018-05-{:02}T{:02}:00:00Z", rng.gen_range(1..29), rng.gen_range(0..24)));
        }
        if rng.gen_bool(0.05) {
            obj["subjectivity"] =
                serde_json::json!((rng.gen_range(0.0..1.0f64) * 1000.0).round() / 1000.0);
            obj["polarity"] =
                serde_json::json!((rng.gen_range(-1.0..1.0f64) * 1000.0).round() / 1000.0);
        }
        corpus.push_str(&obj.to_string());
        corpus.push('\n');
    }

    let desk_corpus = desk::desk_corpus();
    let write = |name: &str, content: &str| -> io::Result<PathBuf> {
        let path = dir.join(name);
        std::fs::write(&path, content)?;
        Ok(path)
    };
    let corpus_path = write("corpus.jsonl", &corpus)?;
    let topics = write("topics.json", &topics_json())?;
    let config = write("config.json", &config_json(100, 42))?;
    let langid_train = write("langid-train.tsv", &desk::training_tsv(&desk_corpus))?;
    write("sent-en.tsv", EN_SENTIMENT)?;
    write("sent-fr.tsv", FR_SENTIMENT)?;
    write("arousal-en.tsv", EN_AROUSAL)?;
    write("concreteness-en.tsv", EN_CONCRETENESS)?;
    write("emotion-fr.tsv", FR_EMOTION)?;
    let emb_en = embedding_file(&mut rng, &en_vocab(), n, 8);
    write("emb-en.vec", &emb_en)?;
    let emb_fr = embedding_file(&mut rng, &fr_vocab(), n, 8);
    write("emb-fr.vec", &emb_fr)?;

    Ok(Fixture {
        dir: dir.to_path_buf(),
        corpus: corpus_path,
        config,
        topics,
        langid_train,
        lang_model: dir.join("lang.model"),
        n_tweets: n,
        abundant_quota: abundant_en.min(abundant_fr),
        scarce_quota: scarce,
    })
}
