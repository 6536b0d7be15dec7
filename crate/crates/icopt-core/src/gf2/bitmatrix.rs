use std::fmt;

use super::BitVec;

/// A dense matrix over GF(2), stored row-major with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        Self {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Stacks rows into a matrix.
    ///
    /// # Panics
    /// Panics if the rows have unequal lengths or `rows` is empty.
    pub fn from_rows(rows: &[BitVec]) -> Self {
        let cols = rows.first().expect("at least one row").len();
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            m.set_row(i, row);
        }
        m
    }

    /// Builds a matrix from `0`/`1` row strings; handy for fixtures.
    ///
    /// # Panics
    /// Panics on malformed input.
    pub fn from_row_strs(rows: &[&str]) -> Self {
        let parsed: Vec<BitVec> = rows
            .iter()
            .map(|s| s.parse().expect("valid bit-row string"))
            .collect();
        Self::from_rows(&parsed)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols, "index ({row},{col}) out of range");
        let idx = row * self.words_per_row + col / 64;
        (self.data[idx] >> (col % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols, "index ({row},{col}) out of range");
        let idx = row * self.words_per_row + col / 64;
        if value {
            self.data[idx] |= 1u64 << (col % 64);
        } else {
            self.data[idx] &= !(1u64 << (col % 64));
        }
    }

    fn row_words(&self, row: usize) -> &[u64] {
        let start = row * self.words_per_row;
        &self.data[start..start + self.words_per_row]
    }

    /// Copies row `row` out as a vector.
    pub fn row(&self, row: usize) -> BitVec {
        assert!(row < self.rows, "row {row} out of range");
        let mut v = BitVec::zeros(self.cols);
        for c in 0..self.cols {
            if self.get(row, c) {
                v.set(c, true);
            }
        }
        v
    }

    pub fn set_row(&mut self, row: usize, value: &BitVec) {
        assert_eq!(value.len(), self.cols, "row length mismatch");
        for c in 0..self.cols {
            self.set(row, c, value.get(c));
        }
    }

    /// Copies column `col` out as a vector.
    pub fn col(&self, col: usize) -> BitVec {
        assert!(col < self.cols, "column {col} out of range");
        let mut v = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, col) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn set_col(&mut self, col: usize, value: &BitVec) {
        assert_eq!(value.len(), self.rows, "column length mismatch");
        for r in 0..self.rows {
            self.set(r, col, value.get(r));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    fn xor_row_into(&mut self, target: usize, source: usize) {
        let (t, s) = (target * self.words_per_row, source * self.words_per_row);
        for k in 0..self.words_per_row {
            let w = self.data[s + k];
            self.data[t + k] ^= w;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.words_per_row {
            self.data.swap(a * self.words_per_row + k, b * self.words_per_row + k);
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    out.set(c, r, true);
                }
            }
        }
        out
    }

    /// Matrix product over GF(2).
    ///
    /// # Panics
    /// Panics if the inner dimensions disagree.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let base = r * out.words_per_row;
            for k in 0..self.cols {
                if self.get(r, k) {
                    let src = k * other.words_per_row;
                    for w in 0..other.words_per_row {
                        out.data[base + w] ^= other.data[src + w];
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = false;
            for c in 0..self.cols {
                acc ^= self.get(r, c) & v.get(c);
            }
            out.set(r, acc);
        }
        out
    }

    /// Reduced row-echelon form and the ascending list of pivot columns.
    ///
    /// The result is idempotent: reducing an already reduced matrix returns
    /// it unchanged.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let hit = (pivot_row..m.rows).find(|&r| m.get(r, col));
            let Some(hit) = hit else { continue };
            m.swap_rows(pivot_row, hit);
            for r in 0..m.rows {
                if r != pivot_row && m.get(r, col) {
                    m.xor_row_into(r, pivot_row);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    /// Dimension of the row space (equivalently the column space).
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rows rendered as `0`/`1` strings, top to bottom.
    pub fn row_strings(&self) -> Vec<String> {
        (0..self.rows).map(|r| self.row(r).to_string()).collect()
    }

    /// Vertical concatenation.
    ///
    /// # Panics
    /// Panics if column counts differ or `parts` is empty.
    pub fn vstack(parts: &[&BitMatrix]) -> Self {
        let cols = parts.first().expect("at least one block").cols;
        assert!(parts.iter().all(|p| p.cols == cols), "column count mismatch in vstack");
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut out = Self::zeros(rows, cols);
        let mut at = 0;
        for p in parts {
            for r in 0..p.rows {
                out.set_row(at + r, &p.row(r));
            }
            at += p.rows;
        }
        out
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix({}x{})[{}]", self.rows, self.cols, self.row_strings().join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_identity() {
        assert_eq!(BitMatrix::identity(4).rank(), 4);
    }

    #[test]
    fn rank_of_zero_matrix() {
        assert_eq!(BitMatrix::zeros(3, 3).rank(), 0);
    }

    #[test]
    fn rank_of_cyclic_fitting_matrix() {
        // Unit diagonal plus a full 4-cycle of off-diagonal ones; the four
        // rows sum to zero, so the rank drops to 3.
        let m = BitMatrix::from_row_strs(&["1001", "1100", "0110", "0011"]);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.rref().1.len(), 3);
    }

    #[test]
    fn rref_identity_and_duplicate_rows() {
        let (r, pivots) = BitMatrix::identity(3).rref();
        assert!(r.is_identity());
        assert_eq!(pivots, vec![0, 1, 2]);

        let (r, pivots) = BitMatrix::from_row_strs(&["11", "11"]).rref();
        assert_eq!(r, BitMatrix::from_row_strs(&["11", "00"]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = BitMatrix::from_row_strs(&["1101", "0111", "1010", "1101"]);
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
    }

    #[test]
    fn rank_invariant_under_transpose() {
        let m = BitMatrix::from_row_strs(&["110", "011", "101", "000"]);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn product_with_identity() {
        let m = BitMatrix::from_row_strs(&["101", "011"]);
        assert_eq!(m.mul(&BitMatrix::identity(3)), m);
        assert_eq!(BitMatrix::identity(2).mul(&m), m);
    }

    #[test]
    fn product_matches_by_hand() {
        let a = BitMatrix::from_row_strs(&["11", "01"]);
        let b = BitMatrix::from_row_strs(&["10", "11"]);
        // (1,1;0,1)(1,0;1,1) = (0,1;1,1) over GF(2)
        assert_eq!(a.mul(&b), BitMatrix::from_row_strs(&["01", "11"]));
    }

    #[test]
    fn vstack_concatenates() {
        let top = BitMatrix::from_row_strs(&["10", "01"]);
        let bottom = BitMatrix::from_row_strs(&["11"]);
        let stacked = BitMatrix::vstack(&[&top, &bottom]);
        assert_eq!(stacked.row_strings(), vec!["10", "01", "11"]);
    }

    #[test]
    fn wide_matrix_crosses_word_boundary() {
        let mut m = BitMatrix::zeros(2, 70);
        m.set(0, 69, true);
        m.set(1, 69, true);
        m.set(1, 0, true);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
    }
}
