use crate::error::{Error, Result};
use crate::ingest::GrayFrame;

/// Joint histograms with at most this many cells are stored densely.
const DENSE_CELL_LIMIT: usize = 1 << 24;

/// Intensity counts of a single frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    counts: Vec<u64>,
    total: u64,
}

impl Histogram {
    /// Builds a histogram from raw counts; the number of bins is `counts.len()`.
    pub fn from_counts(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidLevels {
                levels: 0,
                max: 65536,
            });
        }
        let total = counts.iter().sum();
        Ok(Self { counts, total })
    }

    pub fn from_frame(frame: &GrayFrame) -> Self {
        let mut counts = vec![0u64; frame.levels() as usize];
        for &v in frame.pixels() {
            counts[v as usize] += 1;
        }
        let total = frame.pixels().len() as u64;
        Self { counts, total }
    }

    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// Relative frequencies `counts[x] / total`. Empty histograms yield all zeros.
    pub fn probabilities(&self) -> Vec<f64> {
        if self.total == 0 {
            return vec![0.0; self.counts.len()];
        }
        let n = self.total as f64;
        self.counts.iter().map(|&c| c as f64 / n).collect()
    }

    /// Merges every run of `group` adjacent bins into one; the final run may be
    /// shorter when `group` does not divide the bin count.
    pub fn coarsen(&self, group: usize) -> Histogram {
        let group = group.max(1);
        let counts = self
            .counts
            .chunks(group)
            .map(|chunk| chunk.iter().sum())
            .collect();
        Histogram {
            counts,
            total: self.total,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Cells {
    Dense(Vec<u64>),
    /// Non-zero `(row, col, count)` cells in row-major order.
    Sparse(Vec<(u32, u32, u64)>),
}

/// Co-occurrence counts of intensities at identical coordinates in two frames.
///
/// Rows index the first (earlier) frame, columns the second. Small level
/// counts use a dense `bins × bins` table; very large ones fall back to a
/// sorted list of the occupied cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointHistogram {
    bins: usize,
    cells: Cells,
    total: u64,
}

impl JointHistogram {
    /// Pairs up the pixels of two frames with identical geometry and levels.
    pub fn from_frames(first: &GrayFrame, second: &GrayFrame) -> Result<Self> {
        if !first.same_shape(second) {
            return Err(Error::HeterogeneousFrames {
                index: 1,
                expected: first.shape_label(),
                found: second.shape_label(),
            });
        }
        Ok(Self::from_pixels(
            first.levels() as usize,
            first.pixels(),
            second.pixels(),
        ))
    }

    fn from_pixels(bins: usize, rows: &[u16], cols: &[u16]) -> Self {
        debug_assert_eq!(rows.len(), cols.len());
        let total = rows.len() as u64;
        let cells = if bins * bins <= DENSE_CELL_LIMIT {
            let mut table = vec![0u64; bins * bins];
            for (&r, &c) in rows.iter().zip(cols) {
                table[r as usize * bins + c as usize] += 1;
            }
            Cells::Dense(table)
        } else {
            let mut keys: Vec<u32> = rows
                .iter()
                .zip(cols)
                .map(|(&r, &c)| ((r as u32) << 16) | c as u32)
                .collect();
            keys.sort_unstable();
            let mut sparse: Vec<(u32, u32, u64)> = Vec::new();
            for key in keys {
                let (r, c) = (key >> 16, key & 0xffff);
                match sparse.last_mut() {
                    Some(last) if last.0 == r && last.1 == c => last.2 += 1,
                    _ => sparse.push((r, c, 1)),
                }
            }
            Cells::Sparse(sparse)
        };
        Self { bins, cells, total }
    }

    /// Builds a joint histogram from a square table of counts (`rows[r][c]`).
    pub fn from_counts(rows: Vec<Vec<u64>>) -> Result<Self> {
        let bins = rows.len();
        if bins == 0 {
            return Err(Error::MalformedHistogram { rows: 0, cols: 0 });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != bins) {
            return Err(Error::MalformedHistogram {
                rows: bins,
                cols: bad.len(),
            });
        }
        let table: Vec<u64> = rows.into_iter().flatten().collect();
        let total = table.iter().sum();
        let cells = if bins * bins <= DENSE_CELL_LIMIT {
            Cells::Dense(table)
        } else {
            Cells::Sparse(
                table
                    .iter()
                    .enumerate()
                    .filter(|(_, &n)| n > 0)
                    .map(|(i, &n)| ((i / bins) as u32, (i % bins) as u32, n))
                    .collect(),
            )
        };
        Ok(Self { bins, cells, total })
    }

    pub fn bins(&self) -> usize {
        self.bins
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        match &self.cells {
            Cells::Dense(table) => table[row * self.bins + col],
            Cells::Sparse(cells) => cells
                .binary_search_by_key(&(row as u32, col as u32), |&(r, c, _)| (r, c))
                .map(|i| cells[i].2)
                .unwrap_or(0),
        }
    }

    /// Occupied cells as `(row, col, count)` in row-major order.
    pub fn nonzero(&self) -> Box<dyn Iterator<Item = (usize, usize, u64)> + '_> {
        match &self.cells {
            Cells::Dense(table) => {
                let bins = self.bins;
                Box::new(
                    table
                        .iter()
                        .enumerate()
                        .filter(|(_, &n)| n > 0)
                        .map(move |(i, &n)| (i / bins, i % bins, n)),
                )
            }
            Cells::Sparse(cells) => {
                Box::new(cells.iter().map(|&(r, c, n)| (r as usize, c as usize, n)))
            }
        }
    }

    /// Histogram of the first frame.
    pub fn row_marginal(&self) -> Histogram {
        let mut counts = vec![0u64; self.bins];
        match &self.cells {
            Cells::Dense(table) => {
                for (row, slot) in table.chunks_exact(self.bins).zip(counts.iter_mut()) {
                    *slot = row.iter().sum();
                }
            }
            Cells::Sparse(cells) => {
                for &(r, _, n) in cells {
                    counts[r as usize] += n;
                }
            }
        }
        Histogram {
            counts,
            total: self.total,
        }
    }

    /// Histogram of the second frame.
    pub fn col_marginal(&self) -> Histogram {
        let mut counts = vec![0u64; self.bins];
        for (_, c, n) in self.nonzero() {
            counts[c] += n;
        }
        Histogram {
            counts,
            total: self.total,
        }
    }

    /// Swaps the roles of the two frames.
    pub fn transpose(&self) -> JointHistogram {
        let bins = self.bins;
        let cells = match &self.cells {
            Cells::Dense(table) => {
                let mut out = vec![0u64; table.len()];
                for r in 0..bins {
                    for c in 0..bins {
                        out[c * bins + r] = table[r * bins + c];
                    }
                }
                Cells::Dense(out)
            }
            Cells::Sparse(cells) => {
                let mut out: Vec<_> = cells.iter().map(|&(r, c, n)| (c, r, n)).collect();
                out.sort_unstable();
                Cells::Sparse(out)
            }
        };
        JointHistogram {
            bins,
            cells,
            total: self.total,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(levels: u32, w: usize, h: usize, px: Vec<u16>) -> GrayFrame {
        GrayFrame::new(w, h, levels, px).unwrap()
    }

    #[test]
    fn marginals_match_frame_histograms() {
        let a = frame(4, 3, 2, vec![0, 1, 2, 3, 3, 1]);
        let b = frame(4, 3, 2, vec![1, 1, 0, 2, 3, 3]);
        let j = JointHistogram::from_frames(&a, &b).unwrap();
        assert_eq!(j.total(), 6);
        assert_eq!(j.row_marginal(), Histogram::from_frame(&a));
        assert_eq!(j.col_marginal(), Histogram::from_frame(&b));
        assert_eq!(j.get(3, 2), 1);
        assert_eq!(j.get(3, 3), 1);
        assert_eq!(j.get(0, 0), 0);
    }

    #[test]
    fn sparse_storage_agrees_with_dense() {
        let px_a: Vec<u16> = (0..64u16).map(|i| i * 1000).collect();
        let px_b: Vec<u16> = (0..64u16).map(|i| (i % 7) * 9000).collect();
        let a = frame(65536, 8, 8, px_a.clone());
        let b = frame(65536, 8, 8, px_b.clone());
        let j = JointHistogram::from_frames(&a, &b).unwrap();
        assert!(matches!(j.cells, Cells::Sparse(_)));
        assert_eq!(j.row_marginal(), Histogram::from_frame(&a));
        assert_eq!(j.col_marginal(), Histogram::from_frame(&b));
        assert_eq!(j.get(1000, 9000), 1);
        let t = j.transpose();
        assert_eq!(t.get(9000, 1000), 1);
        assert_eq!(t.row_marginal(), Histogram::from_frame(&b));
    }

    #[test]
    fn mismatched_frames_rejected() {
        let a = frame(4, 2, 2, vec![0; 4]);
        let b = frame(4, 4, 1, vec![0; 4]);
        assert!(matches!(
            JointHistogram::from_frames(&a, &b),
            Err(Error::HeterogeneousFrames { .. })
        ));
        let c = frame(8, 2, 2, vec![0; 4]);
        assert!(JointHistogram::from_frames(&a, &c).is_err());
    }

    #[test]
    fn from_counts_requires_square_table() {
        assert!(JointHistogram::from_counts(vec![vec![1, 2], vec![3]]).is_err());
        assert!(JointHistogram::from_counts(vec![]).is_err());
        let j = JointHistogram::from_counts(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(j.total(), 10);
        assert_eq!(j.transpose().get(0, 1), 3);
    }

    #[test]
    fn coarsen_keeps_total() {
        let h = Histogram::from_counts(vec![1, 2, 3, 4, 5]).unwrap();
        let c = h.coarsen(2);
        assert_eq!(c.counts(), &[3, 7, 5]);
        assert_eq!(c.total(), 15);
    }
}
