//! Bundled fixtures: a braid word, a band presentation, a front and an
//! optional move script for each labelled knot.

use serde::Serialize;
use thiserror::Error;

use crate::braid::{parse_bands, parse_braid, BandPresentation, BraidWord};
use crate::cobordism::{parse_moves, Move};
use crate::front::{parse_front, OrientedFront};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("unknown corpus label `{0}`")]
    UnknownLabel(String),
}

/// The fixture files of one entry, as bundled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RawFixture {
    pub label: &'static str,
    pub braid: &'static str,
    pub bands: &'static str,
    pub front: &'static str,
    pub moves: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub label: &'static str,
    pub braid: BraidWord,
    pub bands: BandPresentation,
    pub front: OrientedFront,
    /// Empty when no scripted filling is bundled.
    pub script: Vec<Move>,
}

macro_rules! fixture {
    ($label:literal) => {
        fixture!($label, "")
    };
    ($label:literal, $moves:expr) => {
        RawFixture {
            label: $label,
            braid: include_str!(concat!("../corpus/", $label, ".braid")),
            bands: include_str!(concat!("../corpus/", $label, ".bands")),
            front: include_str!(concat!("../corpus/", $label, ".front")),
            moves: $moves,
        }
    };
}

const RAW: [RawFixture; 8] = [
    fixture!("unknot"),
    fixture!("trefoil"),
    fixture!("fish"),
    fixture!("stab-unknot"),
    fixture!("m946", include_str!("../corpus/m946.moves")),
    fixture!("stoimenow"),
    fixture!("torus-2-5"),
    fixture!("torus-2-7"),
];

pub fn corpus_list() -> Vec<&'static str> {
    RAW.iter().map(|r| r.label).collect()
}

pub fn corpus_raw(label: &str) -> Result<RawFixture, CorpusError> {
    RAW.iter().find(|r| r.label == label).copied().ok_or_else(|| CorpusError::UnknownLabel(label.to_string()))
}

/// Parses the bundled files. The front carries its canonical orientation.
pub fn corpus_get(label: &str) -> Result<Fixture, CorpusError> {
    let raw = corpus_raw(label)?;
    let broken = |what: &str, e: String| -> ! { panic!("bundled {what} for `{label}` is malformed: {e}") };
    Ok(Fixture {
        label: raw.label,
        braid: parse_braid(raw.braid).unwrap_or_else(|e| broken("braid", e.to_string())),
        bands: parse_bands(raw.bands).unwrap_or_else(|e| broken("bands", e.to_string())),
        front: OrientedFront::canonical(parse_front(raw.front).unwrap_or_else(|e| broken("front", e.to_string()))),
        script: parse_moves(raw.moves).unwrap_or_else(|e| broken("moves", e.to_string())),
    })
}

pub fn corpus_all() -> Vec<Fixture> {
    corpus_list().into_iter().map(|l| corpus_get(l).expect("listed labels exist")).collect()
}
