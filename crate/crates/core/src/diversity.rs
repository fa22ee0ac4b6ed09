//! Embedding vectorization, k-means clustering, and per-cluster selection.
//!
//! Tweets become mean vectors of their exact-case token forms, get clustered
//! with seeded k-means++ plus Lloyd's iterations, and each cluster surfaces
//! its single most argumentative tweet. Every tie anywhere breaks on indices
//! or tweet ids, so a fixed seed gives byte-identical results.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::io::BufRead;
use std::path::Path;

use rand::distributions::{Distribution, Uniform};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::enrich::EnrichedTweet;
use crate::error::{Error, Result};
use crate::scalar::{cmp_scalars, Scalar};
use crate::scoring::ScoredTweet;

/// Word vectors keyed by raw (not lowercased) token form.
#[derive(Debug, Clone)]
pub struct EmbeddingModel<S: Scalar = f64> {
    dim: usize,
    vectors: HashMap<String, Vec<S>>,
}

/// Tallies from reading an embedding file.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EmbedReport {
    pub rows: u64,
    pub skipped: u64,
    pub duplicates: u64,
}

impl<S: Scalar> EmbeddingModel<S> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn get(&self, form: &str) -> Option<&[S]> {
        self.vectors.get(form).map(Vec::as_slice)
    }
}

/// Loads a word2vec-style text file: header `vocab_size dim`, then one
/// `token v1 .. v_dim` row per word. Rows with the wrong arity or non-finite
/// values are skipped and counted; more than 10% bad rows is fatal, as is an
/// empty vocabulary. Duplicate tokens: last wins, with a warning.
pub fn load_embeddings<S: Scalar, R: BufRead>(reader: R) -> Result<(EmbeddingModel<S>, EmbedReport)> {
    let mut lines = reader.lines();
    let header = lines
        .next()
        .transpose()?
        .ok_or_else(|| Error::Format("embedding file is empty".into()))?;
    let mut parts = header.split_whitespace();
    let (vocab, dim) = match (parts.next(), parts.next(), parts.next()) {
        (Some(v), Some(d), None) => {
            let vocab: usize = v.parse().map_err(|_| bad_header(&header))?;
            let dim: usize = d.parse().map_err(|_| bad_header(&header))?;
            (vocab, dim)
        }
        _ => return Err(bad_header(&header)),
    };
    if dim == 0 {
        return Err(Error::Format("embedding dimension must be positive".into()));
    }
    let _ = vocab; // declared size is informational only

    let mut vectors: HashMap<String, Vec<S>> = HashMap::new();
    let mut report = EmbedReport::default();
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        report.rows += 1;
        let mut cols = line.split_whitespace();
        let Some(token) = cols.next() else {
            report.skipped += 1;
            continue;
        };
        let vals: Option<Vec<f64>> = cols.map(|c| c.parse::<f64>().ok()).collect();
        match vals {
            Some(v) if v.len() == dim && v.iter().all(|x| x.is_finite()) => {
                let vec = v.into_iter().map(S::of_f64).collect();
                if vectors.insert(token.to_string(), vec).is_some() {
                    log::warn!("embedding token {token:?} appears twice; keeping the last row");
                    report.duplicates += 1;
                }
            }
            _ => report.skipped += 1,
        }
    }
    if report.rows > 0 && report.skipped * 10 > report.rows {
        return Err(Error::Format(format!(
            "embedding file: {} of {} rows malformed",
            report.skipped, report.rows
        )));
    }
    if vectors.is_empty() {
        return Err(Error::Resource("embedding file has no usable vectors".into()));
    }
    Ok((EmbeddingModel { dim, vectors }, report))
}

fn bad_header(header: &str) -> Error {
    Error::Format(format!("embedding header must be \"vocab_size dim\", got {header:?}"))
}

pub fn load_embeddings_path<S: Scalar>(path: &Path) -> Result<(EmbeddingModel<S>, EmbedReport)> {
    let f = std::fs::File::open(path).map_err(|e| {
        Error::Resource(format!("cannot open embeddings {}: {e}", path.display()))
    })?;
    load_embeddings(std::io::BufReader::new(f))
}

/// A tweet's position in embedding space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "S: Scalar")]
pub struct TweetVector<S: Scalar = f64> {
    pub tweet_id: String,
    pub vector: Vec<S>,
    pub matched: usize,
}

/// Mean vector of the tweet's matched token forms (exact case). No match
/// gives the zero vector.
pub fn vectorize<S: Scalar>(tweet: &EnrichedTweet<S>, model: &EmbeddingModel<S>) -> TweetVector<S> {
    let mut vector = vec![S::zero(); model.dim()];
    let mut matched = 0usize;
    for token in &tweet.tokens {
        if let Some(v) = model.get(&token.form) {
            matched += 1;
            for (acc, &x) in vector.iter_mut().zip(v) {
                *acc = *acc + x;
            }
        }
    }
    if matched > 0 {
        let n = S::of_usize(matched);
        for x in &mut vector {
            *x = *x / n;
        }
    }
    TweetVector { tweet_id: tweet.id().to_string(), vector, matched }
}

/// Clustering controls. Defaults: k=100, seed=42, max_iter=100, n_restarts=10.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KMeansParams {
    pub k: usize,
    pub seed: u64,
    pub max_iter: usize,
    pub n_restarts: usize,
}

impl Default for KMeansParams {
    fn default() -> Self {
        KMeansParams { k: 100, seed: 42, max_iter: 100, n_restarts: 10 }
    }
}

impl KMeansParams {
    fn validate(&self) -> Result<()> {
        if self.k == 0 || self.max_iter == 0 || self.n_restarts == 0 {
            return Err(Error::Config(format!(
                "k, max_iter, and n_restarts must all be >= 1, got k={} max_iter={} n_restarts={}",
                self.k, self.max_iter, self.n_restarts
            )));
        }
        Ok(())
    }
}

/// Final clustering: assignments by tweet id, centroids, and the total
/// within-cluster sum of squared distances. `inertia_trace` holds the
/// inertia after each Lloyd iteration of the winning restart.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "S: Scalar")]
pub struct ClusterResult<S: Scalar = f64> {
    pub k_effective: usize,
    pub assignments: BTreeMap<String, usize>,
    pub centroids: Vec<Vec<S>>,
    pub inertia: S,
    pub inertia_trace: Vec<S>,
}

fn sqdist<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter().zip(b).fold(S::zero(), |acc, (&x, &y)| {
        let d = x - y;
        acc + d * d
    })
}

/// Bit pattern of a vector, with -0.0 unified to 0.0, for distinctness.
fn bit_key<S: Scalar>(v: &[S]) -> Vec<u64> {
    v.iter()
        .map(|x| {
            let f = x.as_f64();
            (if f == 0.0 { 0.0 } else { f }).to_bits()
        })
        .collect()
}

struct Run<S: Scalar> {
    assign: Vec<usize>,
    centroids: Vec<Vec<S>>,
    inertia: S,
    trace: Vec<S>,
}

/// Seeded k-means over tweet vectors: k-means++ initialization, Lloyd's
/// iterations, best of `n_restarts` by final inertia (first wins ties).
/// `k_effective` is min(k, distinct vectors); emptied clusters are re-seeded
/// with the point farthest from its current centroid. Deterministic for
/// fixed inputs and seed.
pub fn kmeans<S: Scalar>(vectors: &[TweetVector<S>], params: &KMeansParams) -> Result<ClusterResult<S>> {
    params.validate()?;
    if vectors.is_empty() {
        return Ok(ClusterResult {
            k_effective: 0,
            assignments: BTreeMap::new(),
            centroids: Vec::new(),
            inertia: S::zero(),
            inertia_trace: Vec::new(),
        });
    }
    let dim = vectors[0].vector.len();
    if vectors.iter().any(|v| v.vector.len() != dim) {
        return Err(Error::Consistency("tweet vectors have mixed dimensions".into()));
    }
    let points: Vec<&[S]> = vectors.iter().map(|v| v.vector.as_slice()).collect();
    let distinct: HashSet<Vec<u64>> = points.iter().map(|p| bit_key(p)).collect();
    let k = params.k.min(distinct.len());

    let mut best: Option<Run<S>> = None;
    for restart in 0..params.n_restarts {
        let seed = params.seed.wrapping_add((restart as u64).wrapping_mul(0x9E3779B97F4A7C15));
        let run = lloyd(&points, k, seed, params.max_iter);
        let better = match &best {
            None => true,
            Some(b) => cmp_scalars(run.inertia, b.inertia).is_lt(),
        };
        if better {
            best = Some(run);
        }
    }
    let run = best.unwrap();
    let assignments = vectors
        .iter()
        .zip(&run.assign)
        .map(|(v, &c)| (v.tweet_id.clone(), c))
        .collect();
    Ok(ClusterResult {
        k_effective: k,
        assignments,
        centroids: run.centroids,
        inertia: run.inertia,
        inertia_trace: run.trace,
    })
}

fn lloyd<S: Scalar>(points: &[&[S]], k: usize, seed: u64, max_iter: usize) -> Run<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut centroids = init_plus_plus(points, k, &mut rng);
    let mut assign = vec![0usize; points.len()];
    let mut trace = Vec::new();
    let mut prev_inertia: Option<S> = None;

    for _ in 0..max_iter {
        let moved = assign_nearest(points, &centroids, &mut assign);
        let reseeded = reseed_empty(points, &mut centroids, &mut assign, k);
        update_means(points, &assign, &mut centroids);
        let inertia = total_inertia(points, &centroids, &assign);
        if let Some(prev) = prev_inertia {
            // Lloyd's never worsens the objective; a rise means a bug.
            assert!(
                inertia.as_f64() <= prev.as_f64() + 1e-9,
                "inertia rose from {prev} to {inertia}"
            );
        }
        prev_inertia = Some(inertia);
        trace.push(inertia);
        if !moved && !reseeded {
            break;
        }
    }
    let inertia = *trace.last().unwrap();
    Run { assign, centroids, inertia, trace }
}

/// k-means++ seeding: first centroid uniform, the rest sampled with
/// probability proportional to squared distance from the nearest chosen one.
fn init_plus_plus<S: Scalar>(points: &[&[S]], k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<S>> {
    let mut centroids: Vec<Vec<S>> = Vec::with_capacity(k);
    let first = Uniform::from(0..points.len()).sample(rng);
    centroids.push(points[first].to_vec());
    let mut d2: Vec<f64> = points.iter().map(|p| sqdist(p, &centroids[0]).as_f64()).collect();
    while centroids.len() < k {
        let total: f64 = d2.iter().sum();
        // total > 0 while fewer centroids than distinct points exist.
        let target = rng.gen::<f64>() * total;
        let mut acc = 0.0;
        let mut chosen = None;
        for (i, &w) in d2.iter().enumerate() {
            if w <= 0.0 {
                continue;
            }
            acc += w;
            if acc > target {
                chosen = Some(i);
                break;
            }
        }
        let chosen = chosen.unwrap_or_else(|| {
            // Float edge: fall back to the last point with positive weight.
            d2.iter().rposition(|&w| w > 0.0).expect("k exceeds distinct points")
        });
        centroids.push(points[chosen].to_vec());
        let latest = centroids.last().unwrap();
        for (slot, p) in d2.iter_mut().zip(points) {
            let d = sqdist(p, latest).as_f64();
            if d < *slot {
                *slot = d;
            }
        }
    }
    centroids
}

/// Assigns each point to its nearest centroid (lowest index on ties).
/// Returns whether any assignment changed.
fn assign_nearest<S: Scalar>(points: &[&[S]], centroids: &[Vec<S>], assign: &mut [usize]) -> bool {
    let mut moved = false;
    for (i, p) in points.iter().enumerate() {
        let mut best = 0usize;
        let mut best_d = sqdist(p, &centroids[0]);
        for (c, centroid) in centroids.iter().enumerate().skip(1) {
            let d = sqdist(p, centroid);
            if cmp_scalars(d, best_d).is_lt() {
                best = c;
                best_d = d;
            }
        }
        if assign[i] != best {
            assign[i] = best;
            moved = true;
        }
    }
    moved
}

/// Re-seeds each empty cluster with the point farthest from its currently
/// assigned centroid (smallest index on ties). Returns whether anything
/// changed.
fn reseed_empty<S: Scalar>(
    points: &[&[S]],
    centroids: &mut [Vec<S>],
    assign: &mut [usize],
    k: usize,
) -> bool {
    let mut changed = false;
    loop {
        let mut counts = vec![0usize; k];
        for &a in assign.iter() {
            counts[a] += 1;
        }
        let Some(empty) = counts.iter().position(|&c| c == 0) else { break };
        let mut far: Option<(usize, S)> = None;
        for (i, p) in points.iter().enumerate() {
            let d = sqdist(p, &centroids[assign[i]]);
            if d <= S::zero() {
                continue;
            }
            if far.map_or(true, |(_, fd)| cmp_scalars(d, fd).is_gt()) {
                far = Some((i, d));
            }
        }
        // A positive-distance point always exists while k_effective is
        // bounded by the distinct-point count.
        let (idx, _) = far.expect("empty cluster with all points on centroids");
        centroids[empty] = points[idx].to_vec();
        assign[idx] = empty;
        changed = true;
    }
    changed
}

/// Moves each centroid to the mean of its members.
fn update_means<S: Scalar>(points: &[&[S]], assign: &[usize], centroids: &mut [Vec<S>]) {
    let dim = points[0].len();
    let mut sums = vec![vec![S::zero(); dim]; centroids.len()];
    let mut counts = vec![0usize; centroids.len()];
    for (p, &a) in points.iter().zip(assign) {
        counts[a] += 1;
        for (slot, &x) in sums[a].iter_mut().zip(*p) {
            *slot = *slot + x;
        }
    }
    for ((centroid, sum), &count) in centroids.iter_mut().zip(sums).zip(&counts) {
        if count > 0 {
            let n = S::of_usize(count);
            *centroid = sum.into_iter().map(|x| x / n).collect();
        }
    }
}

fn total_inertia<S: Scalar>(points: &[&[S]], centroids: &[Vec<S>], assign: &[usize]) -> S {
    points
        .iter()
        .zip(assign)
        .fold(S::zero(), |acc, (p, &a)| acc + sqdist(p, &centroids[a]))
}

/// One tweet per cluster: the argumentativity argmax, ties to the smaller
/// tweet id. Output is sorted by score descending, then id ascending.
/// A scored tweet with no cluster assignment is a consistency error.
pub fn select_diverse<S: Scalar>(
    scored: Vec<ScoredTweet<S>>,
    clusters: &ClusterResult<S>,
) -> Result<Vec<ScoredTweet<S>>> {
    let mut winners: BTreeMap<usize, ScoredTweet<S>> = BTreeMap::new();
    for tweet in scored {
        let Some(&cluster) = clusters.assignments.get(tweet.id()) else {
            return Err(Error::Consistency(format!(
                "tweet {} has no cluster assignment",
                tweet.id()
            )));
        };
        match winners.get(&cluster) {
            None => {
                winners.insert(cluster, tweet);
            }
            Some(current) => {
                let wins = match cmp_scalars(tweet.argumentativity, current.argumentativity) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Equal => tweet.id() < current.id(),
                    std::cmp::Ordering::Less => false,
                };
                if wins {
                    winners.insert(cluster, tweet);
                }
            }
        }
    }
    let mut out: Vec<ScoredTweet<S>> = winners.into_values().collect();
    out.sort_by(|a, b| {
        cmp_scalars(b.argumentativity, a.argumentativity).then_with(|| a.id().cmp(b.id()))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::NormalizedTweet;
    use crate::enrich::Token;
    use crate::scoring::FeatureVector;

    fn model(rows: &[(&str, &[f64])]) -> EmbeddingModel<f64> {
        let dim = rows[0].1.len();
        let mut text = format!("{} {}\n", rows.len(), dim);
        for (tok, vals) in rows {
            text.push_str(tok);
            for v in *vals {
                text.push_str(&format!(" {v}"));
            }
            text.push('\n');
        }
        load_embeddings(text.as_bytes()).unwrap().0
    }

    #[test]
    fn embeddings_parse_header_and_rows() {
        let m = model(&[("a", &[1.0, 0.0, 0.0]), ("b", &[0.0, 1.0, 0.0])]);
        assert_eq!(m.dim(), 3);
        assert_eq!(m.len(), 2);
        assert_eq!(m.get("a"), Some([1.0, 0.0, 0.0].as_slice()));
    }

    #[test]
    fn embedding_bad_rows_skip_but_too_many_is_fatal() {
        // One bad row in twelve stays under the tolerated share.
        let mut ok = String::from("12 2\n");
        for i in 0..11 {
            ok.push_str(&format!("w{i} 1 0\n"));
        }
        ok.push_str("broken 1\n");
        let (m, report) = load_embeddings::<f64, _>(ok.as_bytes()).unwrap();
        assert_eq!(m.len(), 11);
        assert_eq!(report.skipped, 1);

        let mut bad = String::from("12 2\nok 1 0\n");
        for i in 0..11 {
            bad.push_str(&format!("bad{i} 1\n"));
        }
        let err = load_embeddings::<f64, _>(bad.as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Format(_)));
    }

    #[test]
    fn embedding_duplicates_last_win() {
        let data = "2 2\na 1 0\na 0 1\n";
        let (m, report) = load_embeddings::<f64, _>(data.as_bytes()).unwrap();
        assert_eq!(report.duplicates, 1);
        assert_eq!(m.get("a"), Some([0.0, 1.0].as_slice()));
    }

    #[test]
    fn embedding_empty_vocabulary_is_fatal() {
        let err = load_embeddings::<f64, _>("0 2\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
        let err2 = load_embeddings::<f64, _>("garbage\n".as_bytes()).unwrap_err();
        assert!(matches!(err2, Error::Format(_)));
    }

    fn enriched(id: &str, forms: &[&str]) -> EnrichedTweet<f64> {
        EnrichedTweet {
            base: NormalizedTweet {
                id: id.into(),
                author: "a".into(),
                original_text: String::new(),
                normalized_text: String::new(),
                removed: Default::default(),
                lang_hint: None,
                timestamp: None,
                subjectivity: None,
                polarity: None,
            },
            tokens: forms.iter().map(|f| Token::new(f, "NN", f)).collect(),
            subjectivity: 0.0,
            polarity: 0.0,
        }
    }

    #[test]
    fn vectorize_means_matched_forms_exact_case() {
        let m = model(&[("a", &[1.0, 0.0]), ("b", &[0.0, 1.0])]);
        let single = vectorize(&enriched("1", &["a", "zz"]), &m);
        assert_eq!(single.vector, vec![1.0, 0.0]);
        assert_eq!(single.matched, 1);

        let both = vectorize(&enriched("2", &["a", "b"]), &m);
        assert_eq!(both.vector, vec![0.5, 0.5]);

        let wrong_case = vectorize(&enriched("3", &["A", "B"]), &m);
        assert_eq!(wrong_case.matched, 0);
        assert_eq!(wrong_case.vector, vec![0.0, 0.0]);
    }

    fn tv(id: &str, coords: &[f64]) -> TweetVector<f64> {
        TweetVector { tweet_id: id.into(), vector: coords.to_vec(), matched: 1 }
    }

    fn params(k: usize) -> KMeansParams {
        KMeansParams { k, ..KMeansParams::default() }
    }

    #[test]
    fn separable_one_dimensional_clusters() {
        let vecs =
            vec![tv("a", &[0.0]), tv("b", &[0.1]), tv("c", &[10.0]), tv("d", &[10.1])];
        let r = kmeans(&vecs, &params(2)).unwrap();
        assert_eq!(r.k_effective, 2);
        assert_eq!(r.assignments["a"], r.assignments["b"]);
        assert_eq!(r.assignments["c"], r.assignments["d"]);
        assert_ne!(r.assignments["a"], r.assignments["c"]);
        assert!((r.inertia - 0.01).abs() < 1e-9);
    }

    #[test]
    fn identical_points_collapse_k() {
        let vecs = vec![tv("a", &[1.0, 2.0]), tv("b", &[1.0, 2.0]), tv("c", &[1.0, 2.0])];
        let r = kmeans(&vecs, &params(3)).unwrap();
        assert_eq!(r.k_effective, 1);
        assert_eq!(r.centroids.len(), 1);
        assert_eq!(r.inertia, 0.0);
    }

    #[test]
    fn negative_zero_counts_as_zero_for_distinctness() {
        let vecs = vec![tv("a", &[0.0]), tv("b", &[-0.0])];
        let r = kmeans(&vecs, &params(2)).unwrap();
        assert_eq!(r.k_effective, 1);
    }

    #[test]
    fn empty_input_gives_empty_result() {
        let r = kmeans::<f64>(&[], &params(5)).unwrap();
        assert_eq!(r.k_effective, 0);
        assert!(r.assignments.is_empty());
        assert!(r.centroids.is_empty());
    }

    #[test]
    fn no_cluster_ends_empty() {
        // 5 points, 4 distinct, k=4: every cluster must own a point.
        let vecs = vec![
            tv("a", &[0.0]),
            tv("b", &[0.0]),
            tv("c", &[5.0]),
            tv("d", &[9.0]),
            tv("e", &[14.0]),
        ];
        let r = kmeans(&vecs, &params(4)).unwrap();
        assert_eq!(r.k_effective, 4);
        let used: HashSet<usize> = r.assignments.values().copied().collect();
        assert_eq!(used.len(), 4);
        assert!((r.inertia - 0.0).abs() < 1e-9);
    }

    #[test]
    fn fixed_seed_is_deterministic() {
        let vecs: Vec<TweetVector<f64>> =
            (0..30).map(|i| tv(&format!("t{i:02}"), &[(i % 7) as f64, (i % 3) as f64])).collect();
        let a = kmeans(&vecs, &params(5)).unwrap();
        let b = kmeans(&vecs, &params(5)).unwrap();
        assert_eq!(a, b);
        let other_seed = KMeansParams { seed: 7, ..params(5) };
        let c = kmeans(&vecs, &other_seed).unwrap();
        assert_eq!(a.k_effective, c.k_effective);
    }

    #[test]
    fn inertia_trace_is_non_increasing() {
        let vecs: Vec<TweetVector<f64>> =
            (0..40).map(|i| tv(&format!("t{i:02}"), &[(i * i % 23) as f64])).collect();
        let r = kmeans(&vecs, &params(4)).unwrap();
        for pair in r.inertia_trace.windows(2) {
            assert!(pair[1] <= pair[0] + 1e-9);
        }
        assert_eq!(*r.inertia_trace.last().unwrap(), r.inertia);
    }

    #[test]
    fn mixed_dimensions_are_rejected() {
        let vecs = vec![tv("a", &[0.0]), tv("b", &[0.0, 1.0])];
        assert!(matches!(kmeans(&vecs, &params(2)), Err(Error::Consistency(_))));
    }

    #[test]
    fn bad_params_are_config_errors() {
        assert!(kmeans::<f64>(&[], &params(0)).is_err());
        let p = KMeansParams { max_iter: 0, ..params(2) };
        assert!(kmeans::<f64>(&[], &p).is_err());
    }

    fn scored(id: &str, score: f64) -> ScoredTweet<f64> {
        ScoredTweet {
            tweet: enriched(id, &[]),
            features: FeatureVector::zero(),
            argumentativity: score,
        }
    }

    fn assignments(pairs: &[(&str, usize)]) -> ClusterResult<f64> {
        ClusterResult {
            k_effective: pairs.iter().map(|&(_, c)| c + 1).max().unwrap_or(0),
            assignments: pairs.iter().map(|&(id, c)| (id.to_string(), c)).collect(),
            centroids: Vec::new(),
            inertia: 0.0,
            inertia_trace: Vec::new(),
        }
    }

    #[test]
    fn select_takes_argmax_per_cluster() {
        let clusters = assignments(&[("a", 0), ("b", 0), ("c", 0)]);
        let out =
            select_diverse(vec![scored("a", 0.2), scored("b", 0.9), scored("c", 0.5)], &clusters)
                .unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].id(), "b");
    }

    #[test]
    fn select_sorts_by_score_then_id() {
        let clusters = assignments(&[("a", 0), ("b", 1), ("c", 2)]);
        let out =
            select_diverse(vec![scored("a", 0.3), scored("b", 0.9), scored("c", 0.3)], &clusters)
                .unwrap();
        let ids: Vec<&str> = out.iter().map(|t| t.id()).collect();
        assert_eq!(ids, vec!["b", "a", "c"]);
        let scores: Vec<f64> = out.iter().map(|t| t.argumentativity).collect();
        assert!(scores.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn select_breaks_ties_by_smaller_id() {
        let clusters = assignments(&[("z1", 0), ("a2", 0)]);
        let out = select_diverse(vec![scored("z1", 0.7), scored("a2", 0.7)], &clusters).unwrap();
        assert_eq!(out[0].id(), "a2");
    }

    #[test]
    fn missing_assignment_is_a_consistency_error() {
        let clusters = assignments(&[("a", 0)]);
        let err = select_diverse(vec![scored("ghost", 0.1)], &clusters).unwrap_err();
        assert!(matches!(err, Error::Consistency(_)));
        assert_eq!(err.exit_code(), 1);
    }
}
