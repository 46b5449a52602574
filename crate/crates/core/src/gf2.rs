//! Bit-packed row reduction over GF(2).
//!
//! Rows are packed into `u64` words and eliminated with word-wise XOR. The
//! result is identical to the byte-per-entry path in [`crate::matrix`].

pub(crate) struct PackedRows {
    words: usize,
    cols: usize,
    rows: Vec<Vec<u64>>,
}

impl PackedRows {
    pub(crate) fn pack(rows: usize, cols: usize, data: &[u8]) -> Self {
        let words = cols.div_ceil(64).max(1);
        let rows = (0..rows)
            .map(|r| {
                let mut w = vec![0u64; words];
                for (c, &x) in data[r * cols..(r + 1) * cols].iter().enumerate() {
                    if x & 1 == 1 {
                        w[c / 64] |= 1 << (c % 64);
                    }
                }
                w
            })
            .collect();
        Self { words, cols, rows }
    }

    #[inline]
    fn bit(row: &[u64], c: usize) -> bool {
        (row[c / 64] >> (c % 64)) & 1 == 1
    }

    /// Reduces in place to RREF, returning the pivot columns.
    pub(crate) fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            if next == self.rows.len() {
                break;
            }
            let Some(found) = (next..self.rows.len()).find(|&r| Self::bit(&self.rows[r], c)) else {
                continue;
            };
            self.rows.swap(next, found);
            let pivot_row = std::mem::take(&mut self.rows[next]);
            let first_word = c / 64;
            for (r, row) in self.rows.iter_mut().enumerate() {
                if r != next && !row.is_empty() && Self::bit(row, c) {
                    for w in first_word..self.words {
                        row[w] ^= pivot_row[w];
                    }
                }
            }
            self.rows[next] = pivot_row;
            pivots.push(c);
            next += 1;
        }
        pivots
    }

    /// Unpacks the first `n` rows into a dense byte matrix.
    pub(crate) fn unpack(&self, n: usize) -> Vec<u8> {
        let mut out = vec![0u8; n * self.cols];
        for (r, row) in self.rows.iter().take(n).enumerate() {
            for c in 0..self.cols {
                if Self::bit(row, c) {
                    out[r * self.cols + c] = 1;
                }
            }
        }
        out
    }
}
