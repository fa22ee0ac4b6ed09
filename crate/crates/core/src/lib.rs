//! Batch retrieval of argumentative tweets with diversified output: corpus
//! ingestion and normalization, language identification, keyword topic
//! filtering, linguistic enrichment, feature-based argumentativity scoring,
//! embedding-space clustering for diversity, and run-file evaluation.
//!
//! Numeric code is generic over [`scalar::Scalar`] (`f32` or `f64`); the
//! aliases at the crate root fix the default precision used by the CLI.

pub mod corpus;
pub mod diversity;
pub mod enrich;
pub mod error;
pub mod eval;
pub mod fold;
pub mod langid;
pub mod lexicon;
pub mod normalize;
pub mod pipeline;
pub mod scalar;
pub mod scoring;
pub mod topic;

pub use error::{Error, Result};
pub use scalar::{cmp_scalars, Scalar};

/// Precision every shipped binary runs at.
pub type DefaultScalar = f64;

pub type EnrichedTweet = enrich::EnrichedTweet<DefaultScalar>;
pub type ScoredTweet = scoring::ScoredTweet<DefaultScalar>;
pub type FeatureVector = scoring::FeatureVector<DefaultScalar>;
pub type RunProfile = scoring::RunProfile<DefaultScalar>;
pub type ScoreResources = scoring::ScoreResources<DefaultScalar>;
pub type SentimentLexicon = lexicon::SentimentLexicon<DefaultScalar>;
pub type ScalarLexicon = lexicon::ScalarLexicon<DefaultScalar>;
pub type EmbeddingModel = diversity::EmbeddingModel<DefaultScalar>;
pub type ClusterResult = diversity::ClusterResult<DefaultScalar>;
pub type LoadedLanguage = pipeline::LoadedLanguage<DefaultScalar>;
pub type PipelineOutput = pipeline::PipelineOutput<DefaultScalar>;
