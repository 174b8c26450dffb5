//! Change scores across a frame sequence: the adjacent-pair series, the most
//! abrupt change point within one sequence, and ranking across sequences.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::infotheory::{JointHistogram, JointMeasures, NormalizationMode};
use crate::ingest::{GrayFrame, PreprocessConfig};

/// Plot ceiling used for `1 / uc` when `uc` is zero or tiny.
pub const DEFAULT_RECIPROCAL_CAP: f64 = 1e6;

/// Scores for the adjacent pair `(t, t + 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairRecord {
    /// Index of the earlier frame.
    pub t: usize,
    /// Normalized score under the run's mode (bits for [`NormalizationMode::RawMi`]).
    pub uc: f64,
    pub mi: f64,
    pub h_prev: f64,
    pub h_next: f64,
    pub degenerate: bool,
}

impl PairRecord {
    pub fn between(
        t: usize,
        prev: &GrayFrame,
        next: &GrayFrame,
        mode: NormalizationMode,
    ) -> Result<Self> {
        let joint = JointHistogram::from_frames(prev, next).map_err(|e| match e {
            Error::HeterogeneousFrames {
                expected, found, ..
            } => Error::HeterogeneousFrames {
                index: t + 1,
                expected,
                found,
            },
            other => other,
        })?;
        let m = JointMeasures::of(&joint)?;
        let c = m.coefficient(mode);
        Ok(Self {
            t,
            uc: c.value,
            mi: m.mi,
            h_prev: m.h_row,
            h_next: m.h_col,
            degenerate: c.degenerate,
        })
    }
}

/// The most abrupt change point of one sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Target {
    pub index: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SequenceReport {
    pub id: String,
    pub frame_count: usize,
    pub pairs: Vec<PairRecord>,
    pub target_index: usize,
    pub target_value: f64,
    pub mode: NormalizationMode,
    pub preprocess: PreprocessConfig,
}

impl SequenceReport {
    pub fn target(&self) -> Target {
        Target {
            index: self.target_index,
            value: self.target_value,
        }
    }
}

/// Sequences ordered from most to least abrupt change.
#[derive(Debug, Clone, PartialEq)]
pub struct RankingReport {
    pub entries: Vec<SequenceReport>,
    pub winner: String,
}

fn check_frames(frames: &[GrayFrame]) -> Result<()> {
    if frames.len() < 2 {
        return Err(Error::SequenceTooShort {
            frames: frames.len(),
        });
    }
    let first = &frames[0];
    if let Some((index, bad)) = frames
        .iter()
        .enumerate()
        .find(|(_, f)| !first.same_shape(f))
    {
        return Err(Error::HeterogeneousFrames {
            index,
            expected: first.shape_label(),
            found: bad.shape_label(),
        });
    }
    Ok(())
}

/// Scores every adjacent pair as `U(frame t | frame t+1)` under `mode`.
///
/// Returns `frames.len() - 1` records ordered by `t`.
pub fn uc_series(frames: &[GrayFrame], mode: NormalizationMode) -> Result<Vec<PairRecord>> {
    check_frames(frames)?;
    frames
        .windows(2)
        .enumerate()
        .map(|(t, w)| PairRecord::between(t, &w[0], &w[1], mode))
        .collect()
}

/// [`uc_series`] with pairs scored on the rayon pool. Output is identical.
pub fn uc_series_parallel(
    frames: &[GrayFrame],
    mode: NormalizationMode,
) -> Result<Vec<PairRecord>> {
    check_frames(frames)?;
    frames
        .par_windows(2)
        .enumerate()
        .map(|(t, w)| PairRecord::between(t, &w[0], &w[1], mode))
        .collect()
}

/// Minimum score and the smallest index attaining it.
pub fn find_target(pairs: &[PairRecord]) -> Result<Target> {
    let (first, rest) = pairs.split_first().ok_or(Error::EmptySeries)?;
    let mut best = Target {
        index: first.t,
        value: first.uc,
    };
    for p in rest {
        if p.uc < best.value {
            best = Target {
                index: p.t,
                value: p.uc,
            };
        }
    }
    Ok(best)
}

/// Scores a decoded sequence and locates its target.
pub fn analyze_frames(
    id: impl Into<String>,
    frames: &[GrayFrame],
    mode: NormalizationMode,
    preprocess: PreprocessConfig,
) -> Result<SequenceReport> {
    let pairs = uc_series(frames, mode)?;
    let target = find_target(&pairs)?;
    Ok(SequenceReport {
        id: id.into(),
        frame_count: frames.len(),
        pairs,
        target_index: target.index,
        target_value: target.value,
        mode,
        preprocess,
    })
}

/// Ranks sequences by target value, smallest (most abrupt change) first.
///
/// The sort is stable, so equal target values keep their input order. All
/// reports must share one normalization mode and one level count.
pub fn compare_sequences(reports: Vec<SequenceReport>) -> Result<RankingReport> {
    let first = reports.first().ok_or(Error::NoSequences)?;
    for r in &reports[1..] {
        if r.mode != first.mode {
            return Err(Error::MixedModes {
                first: first.mode.to_string(),
                other: r.mode.to_string(),
            });
        }
        if r.preprocess.levels != first.preprocess.levels {
            return Err(Error::MixedLevels {
                first: first.preprocess.levels,
                other: r.preprocess.levels,
            });
        }
    }
    let mut entries = reports;
    entries.sort_by(|a, b| a.target_value.total_cmp(&b.target_value));
    let winner = entries[0].id.clone();
    Ok(RankingReport { entries, winner })
}

/// One point of the reciprocal plot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Reciprocal {
    pub value: f64,
    /// `1 / uc` exceeded `cap` (or `uc` was zero) and was replaced by `cap`.
    pub capped: bool,
}

/// Element-wise `1 / uc`, limited to `cap`.
pub fn reciprocal_series(pairs: &[PairRecord], cap: f64) -> Result<Vec<Reciprocal>> {
    if pairs.is_empty() {
        return Err(Error::EmptySeries);
    }
    Ok(pairs
        .iter()
        .map(|p| {
            let r = 1.0 / p.uc;
            if p.uc <= 0.0 || r > cap {
                Reciprocal {
                    value: cap,
                    capped: true,
                }
            } else {
                Reciprocal {
                    value: r,
                    capped: false,
                }
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synthetic;

    fn record(t: usize, uc: f64) -> PairRecord {
        PairRecord {
            t,
            uc,
            mi: 0.0,
            h_prev: 0.0,
            h_next: 0.0,
            degenerate: false,
        }
    }

    fn report(id: &str, target_value: f64) -> SequenceReport {
        SequenceReport {
            id: id.into(),
            frame_count: 2,
            pairs: vec![record(0, target_value)],
            target_index: 0,
            target_value,
            mode: NormalizationMode::UcPrev,
            preprocess: PreprocessConfig::default(),
        }
    }

    #[test]
    fn identical_frames_score_one() {
        let x = synthetic::half_split(8, 8, 2, synthetic::Split::LeftRight).unwrap();
        let pairs = uc_series(&[x.clone(), x.clone(), x], NormalizationMode::UcPrev).unwrap();
        let ucs: Vec<f64> = pairs.iter().map(|p| p.uc).collect();
        assert_eq!(ucs, vec![1.0, 1.0]);
    }

    #[test]
    fn independent_frame_scores_zero() {
        let x = synthetic::half_split(8, 8, 2, synthetic::Split::LeftRight).unwrap();
        let z = synthetic::half_split(8, 8, 2, synthetic::Split::TopBottom).unwrap();
        let pairs = uc_series(&[x.clone(), x, z], NormalizationMode::UcPrev).unwrap();
        assert_eq!(pairs[0].uc, 1.0);
        assert_eq!(pairs[1].uc, 0.0);
        assert_eq!(
            (pairs[1].t, pairs[1].h_prev, pairs[1].h_next),
            (1, 1.0, 1.0)
        );
    }

    #[test]
    fn constant_frames_are_degenerate() {
        let c = GrayFrame::filled(4, 4, 256, 0).unwrap();
        let pairs = uc_series(&[c.clone(), c], NormalizationMode::UcPrev).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].uc, 1.0);
        assert!(pairs[0].degenerate);
    }

    #[test]
    fn short_and_mixed_sequences_rejected() {
        let c = GrayFrame::filled(4, 4, 256, 0).unwrap();
        let err = uc_series(std::slice::from_ref(&c), NormalizationMode::UcPrev).unwrap_err();
        assert!(err.to_string().contains("sequence too short"));
        assert!(uc_series(&[], NormalizationMode::UcPrev).is_err());
        let d = GrayFrame::filled(4, 4, 16, 0).unwrap();
        let err = uc_series(&[c.clone(), c, d], NormalizationMode::UcPrev).unwrap_err();
        assert!(matches!(err, Error::HeterogeneousFrames { index: 2, .. }));
    }

    #[test]
    fn find_target_examples() {
        let pairs: Vec<_> = [0.9, 0.3, 0.7]
            .iter()
            .enumerate()
            .map(|(t, &u)| record(t, u))
            .collect();
        assert_eq!(
            find_target(&pairs).unwrap(),
            Target {
                index: 1,
                value: 0.3
            }
        );
        let flat: Vec<_> = (0..3).map(|t| record(t, 1.0)).collect();
        assert_eq!(
            find_target(&flat).unwrap(),
            Target {
                index: 0,
                value: 1.0
            }
        );
        assert!(matches!(find_target(&[]), Err(Error::EmptySeries)));
    }

    #[test]
    fn compare_examples() {
        // reciprocals 8.09 and 3.16
        let ranked = compare_sequences(vec![report("S2", 0.3165), report("S1", 0.1236)]).unwrap();
        assert_eq!(ranked.winner, "S1");
        assert_eq!(ranked.entries[1].id, "S2");

        let single = compare_sequences(vec![report("only", 0.5)]).unwrap();
        assert_eq!(single.winner, "only");

        let tie = compare_sequences(vec![report("A", 0.4), report("B", 0.4)]).unwrap();
        assert_eq!(tie.winner, "A");

        assert!(matches!(compare_sequences(vec![]), Err(Error::NoSequences)));
    }

    #[test]
    fn compare_rejects_mixed_settings() {
        let mut sym = report("B", 0.2);
        sym.mode = NormalizationMode::Symmetric;
        assert!(matches!(
            compare_sequences(vec![report("A", 0.1), sym]),
            Err(Error::MixedModes { .. })
        ));
        let mut coarse = report("B", 0.2);
        coarse.preprocess.levels = 32;
        assert!(matches!(
            compare_sequences(vec![report("A", 0.1), coarse]),
            Err(Error::MixedLevels { .. })
        ));
    }

    #[test]
    fn reciprocal_examples() {
        let vals = |ucs: &[f64]| -> Vec<f64> {
            let pairs: Vec<_> = ucs.iter().enumerate().map(|(t, &u)| record(t, u)).collect();
            reciprocal_series(&pairs, DEFAULT_RECIPROCAL_CAP)
                .unwrap()
                .iter()
                .map(|r| r.value)
                .collect()
        };
        assert_eq!(vals(&[0.5, 0.25]), vec![2.0, 4.0]);
        assert_eq!(vals(&[1.0]), vec![1.0]);
        assert!((vals(&[0.1236])[0] - 8.09).abs() < 0.005);

        let capped = reciprocal_series(&[record(0, 0.0), record(1, 0.5)], 100.0).unwrap();
        assert_eq!(
            capped[0],
            Reciprocal {
                value: 100.0,
                capped: true
            }
        );
        assert!(!capped[1].capped);
        assert!(reciprocal_series(&[], 1.0).is_err());
    }

    #[test]
    fn parallel_series_matches_sequential() {
        let scene = synthetic::SceneSpec::default();
        let frames = scene.teleport_sequence(20, 10);
        for mode in NormalizationMode::ALL {
            assert_eq!(
                uc_series(&frames, mode).unwrap(),
                uc_series_parallel(&frames, mode).unwrap()
            );
        }
    }
}
