//! Dense GF(2) matrices packed 64 columns to a word, with just enough linear
//! algebra for the verifiers: rank, right kernel, and solving A x = b.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        BitMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let word = &mut self.data[r * self.words + c / 64];
        if value {
            *word |= 1 << (c % 64);
        } else {
            *word &= !(1 << (c % 64));
        }
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.words + c / 64] ^= 1 << (c % 64);
    }

    fn xor_rows(&mut self, target: usize, source: usize) {
        let (t, s) = (target * self.words, source * self.words);
        for w in 0..self.words {
            let v = self.data[s + w];
            self.data[t + w] ^= v;
        }
    }

    /// Row-reduce in place; returns the pivot column of each eliminated row.
    fn eliminate(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            if p != row {
                for w in 0..self.words {
                    self.data.swap(row * self.words + w, p * self.words + w);
                }
            }
            for r in 0..self.rows {
                if r != row && self.get(r, col) {
                    self.xor_rows(r, row);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().len()
    }

    /// Basis of the right kernel {x : A x = 0}, each vector of length `cols`.
    /// Empty exactly when the columns are linearly independent.
    pub fn kernel_basis(&self) -> Vec<Vec<bool>> {
        let mut m = self.clone();
        let pivots = m.eliminate();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![false; self.cols];
            v[free] = true;
            // each pivot row reads: x_pivot = sum of free columns set in it
            for (row, &pc) in pivots.iter().enumerate() {
                if m.get(row, free) {
                    v[pc] = true;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of A x = b, or None when the system is inconsistent.
    pub fn solve(&self, b: &[bool]) -> Option<Vec<bool>> {
        assert_eq!(b.len(), self.rows);
        let mut m = BitMatrix::zeros(self.rows, self.cols + 1);
        for (r, &rhs) in b.iter().enumerate() {
            for w in 0..self.words {
                m.data[r * m.words + w] = self.data[r * self.words + w];
            }
            m.set(r, self.cols, rhs);
        }
        let pivots = m.eliminate();
        if pivots.last() == Some(&self.cols) {
            return None; // a row reads 0 = 1
        }
        let mut x = vec![false; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = m.get(row, self.cols);
        }
        Some(x)
    }

    /// A x for a column vector x of length `cols`.
    pub fn apply(&self, x: &[bool]) -> Vec<bool> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = false;
                for (c, &xc) in x.iter().enumerate() {
                    acc ^= xc && self.get(r, c);
                }
                acc
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_and_kernel_of_small_matrix() {
        // rows: x+y, y+z, x+z  -> rank 2, kernel spanned by (1,1,1)
        let mut m = BitMatrix::zeros(3, 3);
        m.set(0, 0, true);
        m.set(0, 1, true);
        m.set(1, 1, true);
        m.set(1, 2, true);
        m.set(2, 0, true);
        m.set(2, 2, true);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.kernel_basis(), vec![vec![true, true, true]]);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let mut m = BitMatrix::zeros(4, 4);
        for i in 0..4 {
            m.set(i, i, true);
        }
        assert_eq!(m.rank(), 4);
        assert!(m.kernel_basis().is_empty());
    }

    #[test]
    fn solve_examples() {
        let mut m = BitMatrix::zeros(2, 2);
        m.set(0, 0, true);
        m.set(0, 1, true);
        m.set(1, 1, true);
        // x + y = 1, y = 1  =>  x = 0
        assert_eq!(m.solve(&[true, true]), Some(vec![false, true]));
        // inconsistent: rows (x, x), rhs (0, 1)
        let mut n = BitMatrix::zeros(2, 1);
        n.set(0, 0, true);
        n.set(1, 0, true);
        assert_eq!(n.solve(&[false, true]), None);
    }

    fn arb_matrix() -> impl Strategy<Value = BitMatrix> {
        (1usize..7, 1usize..90).prop_flat_map(|(rows, cols)| {
            proptest::collection::vec(proptest::bits::u64::ANY, rows * cols.div_ceil(64)).prop_map(
                move |data| {
                    let mut m = BitMatrix::zeros(rows, cols);
                    for r in 0..rows {
                        for c in 0..cols {
                            let w = data[r * cols.div_ceil(64) + c / 64];
                            m.set(r, c, w >> (c % 64) & 1 == 1);
                        }
                    }
                    m
                },
            )
        })
    }

    proptest! {
        #[test]
        fn kernel_vectors_annihilate(m in arb_matrix()) {
            let basis = m.kernel_basis();
            prop_assert_eq!(basis.len(), m.cols() - m.rank());
            for v in basis {
                prop_assert!(m.apply(&v).iter().all(|&bit| !bit));
            }
        }

        #[test]
        fn solve_solves(m in arb_matrix(), x in proptest::collection::vec(any::<bool>(), 0..90)) {
            prop_assume!(x.len() >= m.cols());
            let x = &x[..m.cols()];
            let b = m.apply(x);
            let got = m.solve(&b).expect("consistent by construction");
            prop_assert_eq!(m.apply(&got), b);
        }
    }
}
