//! Dense bit matrix backing the Bruhat relation tables.

#[derive(Clone, Debug)]
pub(crate) struct BitMatrix {
    rows: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        BitMatrix {
            rows,
            words_per_row,
            bits: vec![0; rows * words_per_row],
        }
    }

    pub fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words_per_row + c / 64] |= 1 << (c % 64);
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words_per_row + c / 64] & (1 << (c % 64)) != 0
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    /// dst |= src, rowwise.
    pub fn or_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let (s, d) = (src * self.words_per_row, dst * self.words_per_row);
        for k in 0..self.words_per_row {
            let w = self.bits[s + k];
            self.bits[d + k] |= w;
        }
    }

    pub fn transpose(&self, cols: usize) -> BitMatrix {
        let mut t = BitMatrix::new(cols, self.rows);
        for r in 0..self.rows {
            for c in iter_bits(self.row(r)) {
                t.set(c, r);
            }
        }
        t
    }
}

/// Indices of set bits in a row slice, ascending.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(k, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            }
        })
    })
}

pub(crate) fn and_rows(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_or() {
        let mut m = BitMatrix::new(3, 130);
        m.set(0, 0);
        m.set(0, 129);
        m.set(1, 64);
        assert!(m.get(0, 129) && !m.get(0, 128));
        m.or_row_into(0, 1);
        assert!(m.get(1, 0) && m.get(1, 64) && m.get(1, 129));
        let idx: Vec<_> = iter_bits(m.row(1)).collect();
        assert_eq!(idx, vec![0, 64, 129]);
    }
}
