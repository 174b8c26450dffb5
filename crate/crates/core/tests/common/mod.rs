//! Direct-summation reference formulas, written against raw count tables
//! without going through the library's entropy helpers.

#![allow(dead_code)]

pub fn marginals(table: &[Vec<u64>]) -> (Vec<u64>, Vec<u64>, u64) {
    let b = table.len();
    let mut rows = vec![0u64; b];
    let mut cols = vec![0u64; b];
    for (r, row) in table.iter().enumerate() {
        for (c, &n) in row.iter().enumerate() {
            rows[r] += n;
            cols[c] += n;
        }
    }
    let total = rows.iter().sum();
    (rows, cols, total)
}

pub fn entropy(counts: &[u64]) -> f64 {
    let n: u64 = counts.iter().sum();
    let mut h = 0.0;
    for &c in counts {
        if c > 0 {
            let p = c as f64 / n as f64;
            h += p * (1.0 / p).log2();
        }
    }
    h
}

pub fn joint_entropy(table: &[Vec<u64>]) -> f64 {
    let flat: Vec<u64> = table.iter().flatten().copied().collect();
    entropy(&flat)
}

/// `Σ p(x,y) log2(p(x) / p(x,y))` with `x` the row variable.
pub fn conditional_given_row(table: &[Vec<u64>]) -> f64 {
    let (rows, _, total) = marginals(table);
    let n = total as f64;
    let mut h = 0.0;
    for (r, row) in table.iter().enumerate() {
        for &c in row {
            if c > 0 {
                let pxy = c as f64 / n;
                let px = rows[r] as f64 / n;
                h += pxy * (px / pxy).log2();
            }
        }
    }
    h
}

/// `Σ p(x,y) log2(p(x,y) / (p(x) p(y)))`.
pub fn mutual_information(table: &[Vec<u64>]) -> f64 {
    let (rows, cols, total) = marginals(table);
    let n = total as f64;
    let mut i = 0.0;
    for (r, row) in table.iter().enumerate() {
        for (c, &k) in row.iter().enumerate() {
            if k > 0 {
                let pxy = k as f64 / n;
                let px = rows[r] as f64 / n;
                let py = cols[c] as f64 / n;
                i += pxy * (pxy / (px * py)).log2();
            }
        }
    }
    i
}

/// Joint count table of two equally sized pixel slices.
pub fn table_of(levels: usize, a: &[u16], b: &[u16]) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; levels]; levels];
    for (&x, &y) in a.iter().zip(b) {
        t[x as usize][y as usize] += 1;
    }
    t
}

/// Uncertainty coefficient of the row variable, 1.0 when it is constant.
pub fn uc_prev(table: &[Vec<u64>]) -> f64 {
    let (rows, _, _) = marginals(table);
    let h = entropy(&rows);
    if h == 0.0 {
        1.0
    } else {
        (mutual_information(table) / h).clamp(0.0, 1.0)
    }
}

/// Calls `f` on every `b × b` table with entries summing to `1..=max_total`.
pub fn for_each_table(b: usize, max_total: u64, mut f: impl FnMut(&[Vec<u64>])) {
    let cells = b * b;
    let mut flat = vec![0u64; cells];
    fn rec(
        flat: &mut Vec<u64>,
        idx: usize,
        remaining: u64,
        b: usize,
        f: &mut dyn FnMut(&[Vec<u64>]),
    ) {
        if idx == flat.len() {
            if flat.iter().any(|&c| c > 0) {
                let table: Vec<Vec<u64>> = flat.chunks(b).map(|r| r.to_vec()).collect();
                f(&table);
            }
            return;
        }
        for v in 0..=remaining {
            flat[idx] = v;
            rec(flat, idx + 1, remaining - v, b, f);
        }
        flat[idx] = 0;
    }
    rec(&mut flat, 0, max_total, b, &mut f);
}
