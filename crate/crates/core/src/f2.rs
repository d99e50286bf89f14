//! Dense bit-packed GF(2) linear algebra and shared combinatorics.
//!
//! Matrices are row-major with 64-bit words; padding bits are kept zero.
//! Everything here is a pure function on immutable inputs.

/// A GF(2) vector packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        if b {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * 64 + b);
                w &= w - 1;
            }
        }
        out
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn from_words(len: usize, words: Vec<u64>) -> Self {
        assert_eq!(words.len(), len.div_ceil(64));
        BitVec { len, words }
    }
}

/// Dense bit-packed GF(2) matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let wpr = cols.div_ceil(64);
        BitMatrix { rows, cols, wpr, bits: vec![0; rows * wpr] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[BitVec]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            let off = i * m.wpr;
            m.bits[off..off + m.wpr].copy_from_slice(r.words());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize, b: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let idx = r * self.wpr + c / 64;
        if b {
            self.bits[idx] |= 1 << (c % 64);
        } else {
            self.bits[idx] &= !(1 << (c % 64));
        }
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.bits[r * self.wpr + c / 64] >> (c % 64)) & 1 == 1
    }

    pub fn row(&self, r: usize) -> BitVec {
        let off = r * self.wpr;
        BitVec { len: self.cols, words: self.bits[off..off + self.wpr].to_vec() }
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (s, d) = (src * self.wpr, dst * self.wpr);
        for k in 0..self.wpr {
            let w = self.bits[s + k];
            self.bits[d + k] ^= w;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.wpr {
            self.bits.swap(a * self.wpr + k, b * self.wpr + k);
        }
    }

    /// In-place row echelon form. Returns the pivot column of each of the
    /// first `rank` rows.
    pub fn echelonize(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let mut pivot = None;
            for r in row..self.rows {
                if self.get(r, col) {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            self.swap_rows(row, p);
            for r in 0..self.rows {
                if r != row && self.get(r, col) {
                    self.xor_row_into(row, r);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            let off = r * self.wpr;
            for w in 0..self.wpr {
                let mut word = self.bits[off + w];
                while word != 0 {
                    let b = word.trailing_zeros() as usize;
                    t.set(w * 64 + b, r, true);
                    word &= word - 1;
                }
            }
        }
        t
    }

    /// GF(2) rank by elimination; the input is not mutated.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.echelonize().len()
    }

    /// Basis of the right null space: all `v` with `M v = 0`.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let mut m = self.clone();
        let pivots = m.echelonize();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (r, &pc) in pivots.iter().enumerate() {
                if m.get(r, free) {
                    v.set(pc, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Row echelon form of a matrix together with the row transform that
/// produced it, so membership in the row span can be certified.
pub struct RowSpan {
    echelon: BitMatrix,
    transform: BitMatrix,
    pivots: Vec<usize>,
}

impl RowSpan {
    pub fn new(rows: &BitMatrix) -> Self {
        let n = rows.rows();
        let wpr = rows.wpr;
        // Augment [rows | I] and eliminate on the left block only.
        let mut ech = rows.clone();
        let mut tr = BitMatrix::identity(n.max(1));
        if n == 0 {
            return RowSpan { echelon: ech, transform: tr, pivots: vec![] };
        }
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..rows.cols() {
            if row == n {
                break;
            }
            let mut pivot = None;
            for r in row..n {
                if ech.get(r, col) {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            ech.swap_rows(row, p);
            tr.swap_rows(row, p);
            for r in 0..n {
                if r != row && ech.get(r, col) {
                    ech.xor_row_into(row, r);
                    tr.xor_row_into(row, r);
                }
            }
            pivots.push(col);
            row += 1;
        }
        let _ = wpr;
        RowSpan { echelon: ech, transform: tr, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Coefficients `c` with `c^T · rows = target`, if the target lies in
    /// the row span. Absence is a value, not an error.
    pub fn solve(&self, target: &BitVec) -> Option<BitVec> {
        assert_eq!(target.len(), self.echelon.cols());
        let mut residual = target.clone();
        let mut combo = BitVec::zeros(self.transform.cols());
        for (r, &pc) in self.pivots.iter().enumerate() {
            if residual.get(pc) {
                residual.xor_assign(&self.echelon.row(r));
                combo.xor_assign(&self.transform.row(r));
            }
        }
        if residual.is_zero() {
            Some(combo)
        } else {
            None
        }
    }
}

/// Coefficients expressing `target` in the rows of `rows`, if possible.
pub fn solve_in_span(rows: &BitMatrix, target: &BitVec) -> Option<BitVec> {
    RowSpan::new(rows).solve(target)
}

/// Binomial coefficient mod 2 via the binary-digit criterion.
/// Returns `false` (zero) for `k > n`; `binom(n, 0) = 1` for every `n`.
pub fn binom_mod2(n: u64, k: u64) -> bool {
    if k > n {
        return false;
    }
    (k & (n - k)) == 0
}

/// A `(p,q)`-shuffle pattern: `false` entries are slots of the first group,
/// `true` of the second; internal orders are preserved. `parity` is the
/// inversion count of the pattern mod 2 (pairs second-before-first).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Shuffle {
    pub pattern: Vec<bool>,
    pub parity: bool,
}

/// All `binom(p+q, p)` shuffles in lexicographic order of the pattern
/// (`false < true`).
pub fn shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    let mut out = Vec::new();
    let mut pattern = Vec::with_capacity(p + q);
    gen_shuffles(p, q, &mut pattern, &mut out);
    out
}

fn gen_shuffles(p: usize, q: usize, pattern: &mut Vec<bool>, out: &mut Vec<Shuffle>) {
    if p == 0 && q == 0 {
        let mut inv = 0usize;
        let mut ones = 0usize;
        for &b in pattern.iter() {
            if b {
                ones += 1;
            } else {
                inv += ones;
            }
        }
        out.push(Shuffle { pattern: pattern.clone(), parity: inv % 2 == 1 });
        return;
    }
    if p > 0 {
        pattern.push(false);
        gen_shuffles(p - 1, q, pattern, out);
        pattern.pop();
    }
    if q > 0 {
        pattern.push(true);
        gen_shuffles(p, q - 1, pattern, out);
        pattern.pop();
    }
}

/// Signed shuffle counts `(|Sh_+|, |Sh_-|)` for `(p,q)`.
pub fn shuffle_counts(p: usize, q: usize) -> (usize, usize) {
    let all = shuffles(p, q);
    let odd = all.iter().filter(|s| s.parity).count();
    (all.len() - odd, odd)
}

/// All compositions of `total` into `parts` non-negative integers, in
/// lexicographic order. `parts == 0` yields the empty composition only when
/// `total == 0`.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(vec![]);
        }
        return out;
    }
    let mut cur = vec![0u32; parts];
    fn rec(total: u32, idx: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx == cur.len() - 1 {
            cur[idx] = total;
            out.push(cur.clone());
            return;
        }
        for v in 0..=total {
            cur[idx] = v;
            rec(total - v, idx + 1, cur, out);
        }
    }
    rec(total, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        assert_eq!(BitMatrix::zeros(4, 5).rank(), 0);
    }

    #[test]
    fn rank_of_duplicate_rows() {
        let r = BitVec::from_indices(4, &[0, 2]);
        let m = BitMatrix::from_rows(&[r.clone(), r]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(BitMatrix::identity(2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_full() {
        assert_eq!(BitMatrix::zeros(2, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn kernel_of_single_row_matches_enumeration() {
        // Row (1,1,0): kernel = all v with v0+v1 = 0, a 2-dimensional space.
        let m = BitMatrix::from_rows(&[BitVec::from_indices(3, &[0, 1])]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        // Enumerate all 8 vectors and count those with M v = 0.
        let mut count = 0;
        for mask in 0..8u32 {
            let v: Vec<bool> = (0..3).map(|i| (mask >> i) & 1 == 1).collect();
            if (v[0] as u32 + v[1] as u32) % 2 == 0 {
                count += 1;
            }
        }
        assert_eq!(count, 4); // 2^2 vectors in the kernel
        for v in &basis {
            let mut dot = false;
            for i in v.ones() {
                if i < 2 {
                    dot = !dot;
                }
            }
            assert!(!dot);
        }
    }

    #[test]
    fn solve_identity_and_outside_span() {
        let id = BitMatrix::identity(3);
        let t = BitVec::from_indices(3, &[1]);
        assert_eq!(solve_in_span(&id, &t), Some(BitVec::from_indices(3, &[1])));

        let m = BitMatrix::from_rows(&[BitVec::from_indices(2, &[0, 1])]);
        let t = BitVec::from_indices(2, &[1]);
        assert_eq!(solve_in_span(&m, &t), None);
    }

    #[test]
    fn solve_two_rows() {
        // rows {(1,1,0),(0,1,1)}, target (1,0,1) -> c = (1,1)
        let m = BitMatrix::from_rows(&[
            BitVec::from_indices(3, &[0, 1]),
            BitVec::from_indices(3, &[1, 2]),
        ]);
        let t = BitVec::from_indices(3, &[0, 2]);
        let c = solve_in_span(&m, &t).unwrap();
        assert_eq!(c, BitVec::from_indices(2, &[0, 1]));
        // check by addition over GF(2)
        let mut sum = BitVec::zeros(3);
        for i in c.ones() {
            sum.xor_assign(&m.row(i));
        }
        assert_eq!(sum, t);
    }

    #[test]
    fn shuffle_counts_examples() {
        assert_eq!(shuffles(1, 2).len(), 3);
        assert_eq!(shuffle_counts(2, 2), (4, 2));
        let s = shuffles(0, 3);
        assert_eq!(s.len(), 1);
        assert!(!s[0].parity);
    }

    #[test]
    fn shuffle_count_recursion() {
        // |Sh_±(p,q)| = |Sh_±(p-1,q)| + |Sh_{±(-1)^p}(p,q-1)|
        for p in 1..=8usize {
            for q in 1..=8usize {
                if p + q > 10 {
                    continue;
                }
                let (ep, op) = shuffle_counts(p, q);
                let (e1, o1) = shuffle_counts(p - 1, q);
                let (e2, o2) = shuffle_counts(p, q - 1);
                let (e2, o2) = if p % 2 == 1 { (o2, e2) } else { (e2, o2) };
                assert_eq!(ep, e1 + e2, "even count at ({p},{q})");
                assert_eq!(op, o1 + o2, "odd count at ({p},{q})");
            }
        }
    }

    #[test]
    fn shuffle_totals_are_binomials() {
        fn binom(n: usize, k: usize) -> usize {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for p in 0..=8usize {
            for q in 0..=8usize {
                if p + q > 10 {
                    continue;
                }
                assert_eq!(shuffles(p, q).len(), binom(p + q, p));
            }
        }
    }

    #[test]
    fn binom_mod2_matches_integers() {
        for n in 0..=20u64 {
            let mut row = vec![1u64];
            for _ in 0..n {
                let mut next = vec![1];
                for i in 1..row.len() {
                    next.push(row[i - 1].wrapping_add(row[i]));
                }
                next.push(1);
                row = next;
            }
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(binom_mod2(n, k as u64), v % 2 == 1, "binom({n},{k})");
            }
        }
        // binom(2m, m) is even for m >= 1
        for m in 1..=8u64 {
            assert!(!binom_mod2(2 * m, m));
        }
        assert!(!binom_mod2(2, 1));
        assert!(binom_mod2(3, 1));
    }

    #[test]
    fn rank_plus_nullity() {
        // deterministic xorshift-style sampling up to 64x64
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for &(r, c) in &[(5usize, 7usize), (16, 16), (33, 20), (64, 64)] {
            let mut m = BitMatrix::zeros(r, c);
            for i in 0..r {
                for j in 0..c {
                    m.set(i, j, next() & 1 == 1);
                }
            }
            assert_eq!(m.rank() + m.kernel_basis().len(), c);
        }
    }

    #[test]
    fn compositions_count() {
        // C(d + k - 1, k - 1) compositions of d into k parts
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(0, 0).len(), 1);
        assert_eq!(compositions(2, 0).len(), 0);
        let c = compositions(2, 2);
        assert_eq!(c, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    }
}
