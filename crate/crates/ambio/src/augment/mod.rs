//! Spatial dataset augmentation: preprocessing, constrained parameter
//! sampling, caption phrase mapping, and batch corpus generation.

mod corpus;
mod language;
mod preprocess;
mod record;
mod resample;
mod sample;

pub use corpus::{
    augment_corpus, derive_item_seed, read_record_manifest, render_sample, CorpusSummary,
    ItemFailure,
};
pub use language::{
    compose_caption, direction_word, elevation_word, location_phrase, map_to_language, PhraseSet,
    SpeedClass, AZIMUTH_BINS, ELEVATION_RANGE_DEG, ELEVATION_WORD_DEG,
};
pub use preprocess::{
    loop_or_truncate, preprocess, preprocess_with, trim_silence, PreprocessConfig,
};
pub use record::{
    read_manifest, validate_source_id, ManifestEntry, SampleKind, SpatialSampleRecord,
    ANGLE_CONVENTION,
};
pub use resample::resample;
pub use sample::{
    sample_dynamic_params, sample_static_params, DynamicParams, CLIP_DURATION_S,
    MIN_AZIMUTH_CHANGE_DEG, MIN_ELEVATION_CHANGE_DEG,
};
