//! Dense bit-packed linear algebra over the two-element field.

/// Fixed-width bit vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_with(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Index of the highest set bit.
    pub fn top_bit(&self) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate().rev() {
            if word != 0 {
                return Some(w * 64 + 63 - word.leading_zeros() as usize);
            }
        }
        None
    }
}

/// Row-echelon basis maintained incrementally; tracks the rank of everything
/// inserted so far.
#[derive(Debug, Clone)]
pub struct Basis {
    width: usize,
    /// (pivot bit, reduced vector), unordered.
    pivots: Vec<(usize, BitVec)>,
}

impl Basis {
    pub fn new(width: usize) -> Self {
        Basis { width, pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the basis; returns true (and grows) if it was
    /// independent, false if it reduced to zero.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        assert_eq!(v.len(), self.width);
        loop {
            let Some(top) = v.top_bit() else {
                return false;
            };
            match self.pivots.iter().find(|(p, _)| *p == top) {
                Some((_, basis_vec)) => v.xor_with(basis_vec),
                None => {
                    self.pivots.push((top, v));
                    return true;
                }
            }
        }
    }
}

/// Column elimination that also emits kernel vectors: every column is
/// reduced against earlier pivot columns while the same operations are
/// mirrored on a combination vector, so a column that vanishes yields an
/// explicit kernel member over the column index space.
#[derive(Debug)]
pub struct KernelTracker {
    rows: usize,
    cols_seen: usize,
    cols_total: usize,
    /// (pivot row bit, reduced column, combination over columns).
    pivots: Vec<(usize, BitVec, BitVec)>,
    /// Combination vectors of vanished columns, in arrival order.
    kernel: Vec<BitVec>,
}

impl KernelTracker {
    pub fn new(rows: usize, cols_total: usize) -> Self {
        KernelTracker { rows, cols_seen: 0, cols_total, pivots: Vec::new(), kernel: Vec::new() }
    }

    /// Feeds the next column (its position is implied by arrival order).
    pub fn push_column(&mut self, mut col: BitVec) {
        assert_eq!(col.len(), self.rows);
        assert!(self.cols_seen < self.cols_total);
        let mut combo = BitVec::zeros(self.cols_total);
        combo.set(self.cols_seen);
        self.cols_seen += 1;
        loop {
            let Some(top) = col.top_bit() else {
                self.kernel.push(combo);
                return;
            };
            match self.pivots.iter().position(|(p, _, _)| *p == top) {
                Some(k) => {
                    let (_, pcol, pcombo) = &self.pivots[k];
                    col.xor_with(pcol);
                    combo.xor_with(pcombo);
                }
                None => {
                    self.pivots.push((top, col, combo));
                    return;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn kernel(&self) -> &[BitVec] {
        &self.kernel
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(bits: &[usize], len: usize) -> BitVec {
        let mut v = BitVec::zeros(len);
        for &b in bits {
            v.set(b);
        }
        v
    }

    #[test]
    fn bitvec_ops() {
        let mut v = vec_of(&[0, 65], 70);
        assert!(v.get(0) && v.get(65) && !v.get(64));
        assert_eq!(v.top_bit(), Some(65));
        v.xor_with(&vec_of(&[65], 70));
        assert_eq!(v.top_bit(), Some(0));
        v.xor_with(&vec_of(&[0], 70));
        assert!(v.is_zero());
    }

    #[test]
    fn basis_rank() {
        let mut b = Basis::new(4);
        assert!(b.insert(vec_of(&[0, 1], 4)));
        assert!(b.insert(vec_of(&[1, 2], 4)));
        // Sum of the first two.
        assert!(!b.insert(vec_of(&[0, 2], 4)));
        assert_eq!(b.rank(), 2);
        assert!(b.insert(vec_of(&[3], 4)));
        assert_eq!(b.rank(), 3);
    }

    #[test]
    fn kernel_tracker_finds_dependencies() {
        // Columns: e0, e1, e0+e1 -> kernel {c0+c1+c2}.
        let mut t = KernelTracker::new(2, 3);
        t.push_column(vec_of(&[0], 2));
        t.push_column(vec_of(&[1], 2));
        t.push_column(vec_of(&[0, 1], 2));
        assert_eq!(t.rank(), 2);
        assert_eq!(t.kernel().len(), 1);
        let combo = &t.kernel()[0];
        assert!(combo.get(0) && combo.get(1) && combo.get(2));
    }
}
