//! JSON and CSV renderings of analysis results.
//!
//! Every real number is written with exactly nine decimals (ties to even),
//! and JSON keys keep a fixed order, so repeated runs are byte-identical.

use anyhow::{anyhow, Result};
use ccuc::analysis::{PairRecord, RankingReport, SequenceReport};
use ccuc::infotheory::NormalizationMode;
use ccuc::ingest::PreprocessConfig;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::value::RawValue;

/// Fixed nine-decimal rendering. Rust's float formatting rounds the exact
/// binary value half to even.
pub fn fmt_num(x: f64) -> String {
    let s = format!("{x:.9}");
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn fixed<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    let raw = RawValue::from_string(fmt_num(*x)).map_err(serde::ser::Error::custom)?;
    raw.serialize(s)
}

#[derive(Debug, Serialize, Deserialize)]
struct PairJson {
    t: usize,
    #[serde(serialize_with = "fixed")]
    uc: f64,
    #[serde(serialize_with = "fixed")]
    mi: f64,
    #[serde(serialize_with = "fixed")]
    h_prev: f64,
    #[serde(serialize_with = "fixed")]
    h_next: f64,
    degenerate: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct ReportJson {
    id: String,
    frame_count: usize,
    mode: String,
    bins: u32,
    #[serde(serialize_with = "fixed")]
    scale: f64,
    pairs: Vec<PairJson>,
    target_index: usize,
    #[serde(serialize_with = "fixed")]
    target_value: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct RankingJson {
    entries: Vec<ReportJson>,
    winner: String,
}

impl From<&SequenceReport> for ReportJson {
    fn from(r: &SequenceReport) -> Self {
        Self {
            id: r.id.clone(),
            frame_count: r.frame_count,
            mode: r.mode.to_string(),
            bins: r.preprocess.levels,
            scale: r.preprocess.scale_factor,
            pairs: r
                .pairs
                .iter()
                .map(|p| PairJson {
                    t: p.t,
                    uc: p.uc,
                    mi: p.mi,
                    h_prev: p.h_prev,
                    h_next: p.h_next,
                    degenerate: p.degenerate,
                })
                .collect(),
            target_index: r.target_index,
            target_value: r.target_value,
        }
    }
}

impl TryFrom<ReportJson> for SequenceReport {
    type Error = anyhow::Error;

    fn try_from(r: ReportJson) -> Result<Self> {
        let mode: NormalizationMode = r.mode.parse().map_err(|e: String| anyhow!(e))?;
        Ok(SequenceReport {
            id: r.id,
            frame_count: r.frame_count,
            pairs: r
                .pairs
                .into_iter()
                .map(|p| PairRecord {
                    t: p.t,
                    uc: p.uc,
                    mi: p.mi,
                    h_prev: p.h_prev,
                    h_next: p.h_next,
                    degenerate: p.degenerate,
                })
                .collect(),
            target_index: r.target_index,
            target_value: r.target_value,
            mode,
            preprocess: PreprocessConfig {
                scale_factor: r.scale,
                levels: r.bins,
            },
        })
    }
}

fn to_pretty<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn report_to_json(report: &SequenceReport) -> Result<String> {
    to_pretty(&ReportJson::from(report))
}

pub fn ranking_to_json(ranking: &RankingReport) -> Result<String> {
    to_pretty(&RankingJson {
        entries: ranking.entries.iter().map(ReportJson::from).collect(),
        winner: ranking.winner.clone(),
    })
}

pub fn parse_report(json: &str) -> Result<SequenceReport> {
    serde_json::from_str::<ReportJson>(json)?.try_into()
}

pub fn parse_ranking(json: &str) -> Result<RankingReport> {
    let r: RankingJson = serde_json::from_str(json)?;
    Ok(RankingReport {
        entries: r
            .entries
            .into_iter()
            .map(SequenceReport::try_from)
            .collect::<Result<_>>()?,
        winner: r.winner,
    })
}

/// Per-pair series with columns `t,uc,mi,h_prev,h_next,degenerate`.
pub fn series_csv(report: &SequenceReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["t", "uc", "mi", "h_prev", "h_next", "degenerate"])?;
    for p in &report.pairs {
        w.write_record([
            p.t.to_string(),
            fmt_num(p.uc),
            fmt_num(p.mi),
            fmt_num(p.h_prev),
            fmt_num(p.h_next),
            p.degenerate.to_string(),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// One row per ranked sequence: `rank,id,frame_count,target_index,target_value`.
pub fn ranking_csv(ranking: &RankingReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["rank", "id", "frame_count", "target_index", "target_value"])?;
    for (i, e) in ranking.entries.iter().enumerate() {
        w.write_record([
            (i + 1).to_string(),
            e.id.clone(),
            e.frame_count.to_string(),
            e.target_index.to_string(),
            fmt_num(e.target_value),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
