//! Dense linear algebra over GF(2).

use std::cmp::Ordering;
use std::fmt;

use crate::error::SolveError;

/// Largest number of free variables a coset enumeration will walk.
pub const MAX_FREE_VARIABLES: usize = 24;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Parses a string of `0`/`1` characters.
    pub fn from_bit_string(s: &str) -> Option<Self> {
        let bits: Option<Vec<bool>> = s
            .chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect();
        bits.map(|b| Self::from_bits(&b))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &Gf2Vector) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Gf2Vector) -> Gf2Vector {
        let mut v = self.clone();
        v.xor_assign(other);
        v
    }

    pub fn dot(&self, other: &Gf2Vector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// Indices of the 1 entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    pub fn bits(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }

    /// Compares as bit-strings, entry 0 first.
    pub fn cmp_lex(&self, other: &Gf2Vector) -> Ordering {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter().zip(&other.words) {
            let d = a ^ b;
            if d != 0 {
                let bit = d.trailing_zeros();
                return if a >> bit & 1 == 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_bit_string())
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

/// Row-major matrix over GF(2). Zero rows or zero columns are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<Gf2Vector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowReduced {
    pub matrix: Gf2Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![Gf2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Panics if row lengths differ from `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Gf2Vector>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        Self { cols, rows }
    }

    pub fn from_bit_strings(rows: &[&str]) -> Option<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let parsed: Option<Vec<Gf2Vector>> = rows.iter().map(|r| Gf2Vector::from_bit_string(r)).collect();
        let parsed = parsed?;
        parsed.iter().all(|r| r.len() == cols).then(|| Self::from_rows(cols, parsed))
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value)
    }

    pub fn row(&self, r: usize) -> &Gf2Vector {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[Gf2Vector] {
        &self.rows
    }

    pub fn column(&self, c: usize) -> Gf2Vector {
        Gf2Vector::from_bits(&self.rows.iter().map(|r| r.get(c)).collect::<Vec<_>>())
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.support() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// `M·v`.
    pub fn mul_vec(&self, v: &Gf2Vector) -> Gf2Vector {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        Gf2Vector::from_bits(&self.rows.iter().map(|r| r.dot(v)).collect::<Vec<_>>())
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, other.num_rows(), "dimension mismatch");
        let t = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| Gf2Vector::from_bits(&t.rows.iter().map(|c| r.dot(c)).collect::<Vec<_>>()))
            .collect();
        Gf2Matrix::from_rows(other.num_cols(), rows)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Gf2Vector::is_zero)
    }

    /// Reduced row echelon form; pivots are taken at the lowest available column.
    pub fn row_reduce(&self) -> RowReduced {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..m.rows.len()).find(|&r| m.rows[r].get(c)) else {
                continue;
            };
            m.rows.swap(rank, p);
            let pivot_row = m.rows[rank].clone();
            for r in 0..m.rows.len() {
                if r != rank && m.rows[r].get(c) {
                    m.rows[r].xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        RowReduced {
            matrix: m,
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    /// Basis of `{x : M·x = 0}`, one vector per free column in ascending order.
    pub fn kernel_basis(&self) -> Vec<Gf2Vector> {
        let rr = self.row_reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !rr.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Gf2Vector::zeros(self.cols);
                v.set(f, true);
                for (i, &p) in rr.pivots.iter().enumerate() {
                    if rr.matrix.get(i, f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// For an `m×n` matrix `A`, an `ℓ×m` matrix whose rows span the vectors
    /// orthogonal to every column of `A`; `ℓ = m − rank(A)`.
    pub fn orthogonal_complement(&self) -> Gf2Matrix {
        let m = self.rows.len();
        Gf2Matrix::from_rows(m, self.transpose().kernel_basis())
    }

    /// Some solution of `M·x = s` with all free variables zero, or `None` if inconsistent.
    pub fn solve(&self, s: &Gf2Vector) -> Option<Gf2Vector> {
        self.affine_coset(s).map(|(x0, _)| x0)
    }

    /// A particular solution and the kernel basis of `M·x = s`.
    fn affine_coset(&self, s: &Gf2Vector) -> Option<(Gf2Vector, Vec<Gf2Vector>)> {
        assert_eq!(s.len(), self.rows.len(), "dimension mismatch");
        let n = self.cols;
        let augmented = Gf2Matrix::from_rows(
            n + 1,
            self.rows
                .iter()
                .zip(s.bits())
                .map(|(r, b)| {
                    let mut bits = r.bits();
                    bits.push(b);
                    Gf2Vector::from_bits(&bits)
                })
                .collect(),
        );
        let rr = augmented.row_reduce();
        if rr.pivots.contains(&n) {
            return None;
        }
        let mut x0 = Gf2Vector::zeros(n);
        for (i, &p) in rr.pivots.iter().enumerate() {
            if rr.matrix.get(i, n) {
                x0.set(p, true);
            }
        }
        let free: Vec<usize> = (0..n).filter(|c| !rr.pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = Gf2Vector::zeros(n);
                v.set(f, true);
                for (i, &p) in rr.pivots.iter().enumerate() {
                    if rr.matrix.get(i, f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        Some((x0, basis))
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(Gf2Vector::to_bit_string).collect();
        write!(f, "{}x{}[{}]", self.rows.len(), self.cols, rows.join(","))
    }
}

/// Among all `x` with `A·x = s`, one of minimum weight, lexicographically least
/// among the minima. `Ok(None)` when the system is inconsistent.
pub fn min_weight_affine_solution(
    a: &Gf2Matrix,
    s: &Gf2Vector,
) -> Result<Option<(Gf2Vector, usize)>, SolveError> {
    let Some((x0, basis)) = a.affine_coset(s) else {
        return Ok(None);
    };
    if basis.len() > MAX_FREE_VARIABLES {
        return Err(SolveError::TooLarge(format!(
            "{} free variables exceed the coset enumeration cap of {MAX_FREE_VARIABLES}",
            basis.len()
        )));
    }
    let mut x = x0;
    let mut best = x.clone();
    let mut best_weight = best.weight();
    // Gray code walk: step i flips the basis vector at the lowest set bit of i
    for i in 1u64..(1u64 << basis.len()) {
        x.xor_assign(&basis[i.trailing_zeros() as usize]);
        let w = x.weight();
        if w < best_weight || (w == best_weight && x.cmp_lex(&best) == Ordering::Less) {
            best = x.clone();
            best_weight = w;
        }
    }
    Ok(Some((best, best_weight)))
}
