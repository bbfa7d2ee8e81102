//! Dense matrices over polynomial rings and their multilinear algebra.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::{check_same_ring, Ring};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// A rectangular matrix of polynomials, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(
        ring: &Arc<Ring>,
        rows: usize,
        cols: usize,
        entries: Vec<Polynomial>,
    ) -> Result<PolyMatrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("matrix dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            check_same_ring(ring, e.ring(), "matrix entry")?;
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: &Arc<Ring>, rows: Vec<Vec<Polynomial>>) -> Result<PolyMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        PolyMatrix::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn identity(ring: &Arc<Ring>, n: usize) -> Result<PolyMatrix> {
        let mut entries = vec![Polynomial::zero(ring); n * n];
        for i in 0..n {
            entries[i * n + i] = Polynomial::one(ring);
        }
        PolyMatrix::new(ring, n, n, entries)
    }

    /// The generic matrix filled column-major with consecutive ring
    /// variables starting at `first_var`: entry (i, j) is variable
    /// `first_var + j*rows + i`.
    pub fn generic(
        ring: &Arc<Ring>,
        first_var: usize,
        rows: usize,
        cols: usize,
    ) -> Result<PolyMatrix> {
        if first_var + rows * cols > ring.n_vars() {
            return Err(Error::NotEnoughVariables);
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(Polynomial::variable(ring, first_var + j * rows + i)?);
            }
        }
        PolyMatrix::new(ring, rows, cols, entries)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        check_same_ring(&self.ring, &other.ring, "matrix add")?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix add".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(&self.ring, self.rows, self.cols, entries)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.add(&other.scalar_mul(&Polynomial::from_i64(&other.ring, -1))?)
    }

    pub fn scalar_mul(&self, f: &Polynomial) -> Result<PolyMatrix> {
        check_same_ring(&self.ring, f.ring(), "scalar multiply")?;
        let entries = self
            .entries
            .iter()
            .map(|e| e.mul(f))
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(&self.ring, self.rows, self.cols, entries)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        check_same_ring(&self.ring, &other.ring, "matrix multiply")?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    acc = acc.add(&self.entry(i, k).mul(other.entry(k, j))?)?;
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(&self.ring, self.rows, other.cols, entries)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.entry(i, j).clone());
            }
        }
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Side-by-side concatenation (same row count).
    pub fn concat_h(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        check_same_ring(&self.ring, &other.ring, "concat")?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("horizontal concat".into()));
        }
        let mut entries = Vec::with_capacity((self.cols + other.cols) * self.rows);
        for i in 0..self.rows {
            entries.extend_from_slice(&self.entries[i * self.cols..(i + 1) * self.cols]);
            entries.extend_from_slice(&other.entries[i * other.cols..(i + 1) * other.cols]);
        }
        PolyMatrix::new(&self.ring, self.rows, self.cols + other.cols, entries)
    }

    /// Stacked concatenation (same column count).
    pub fn concat_v(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        check_same_ring(&self.ring, &other.ring, "concat")?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vertical concat".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        PolyMatrix::new(&self.ring, self.rows + other.rows, self.cols, entries)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<PolyMatrix> {
        for &i in rows {
            if i >= self.rows {
                return Err(Error::IndexOutOfRange(format!("row {i}")));
            }
        }
        for &j in cols {
            if j >= self.cols {
                return Err(Error::IndexOutOfRange(format!("column {j}")));
            }
        }
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.entry(i, j).clone());
            }
        }
        PolyMatrix::new(&self.ring, rows.len(), cols.len(), entries)
    }

    /// Determinant by cofactor expansion, memoized over column subsets.
    pub fn det(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        debug_assert!(n <= 64);
        let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut memo: HashMap<u64, Polynomial> = HashMap::new();
        self.det_rec(full, &mut memo)
    }

    /// det of the submatrix on the bottom |mask| rows and the columns in
    /// `mask`, expanding along the topmost remaining row.
    fn det_rec(&self, mask: u64, memo: &mut HashMap<u64, Polynomial>) -> Result<Polynomial> {
        if mask == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        if let Some(hit) = memo.get(&mask) {
            return Ok(hit.clone());
        }
        let size = mask.count_ones() as usize;
        let row = self.rows - size;
        let mut acc = Polynomial::zero(&self.ring);
        let mut sign_positive = true;
        for j in 0..self.cols {
            if mask & (1 << j) == 0 {
                continue;
            }
            let e = self.entry(row, j);
            if !e.is_zero() {
                let minor = self.det_rec(mask & !(1 << j), memo)?;
                let term = e.mul(&minor)?;
                acc = if sign_positive { acc.add(&term)? } else { acc.sub(&term)? };
            }
            sign_positive = !sign_positive;
        }
        memo.insert(mask, acc.clone());
        Ok(acc)
    }

    /// Classical adjoint: `adj(M)[i][j] = (-1)^(i+j) * minor(M, j, i)`, so
    /// `M * adj(M) = det(M) * Id`.
    pub fn adjoint(&self) -> Result<PolyMatrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        let all: Vec<usize> = (0..n).collect();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                // delete row j, column i
                let rows: Vec<usize> = all.iter().copied().filter(|&r| r != j).collect();
                let cols: Vec<usize> = all.iter().copied().filter(|&c| c != i).collect();
                let minor = if n == 1 {
                    Polynomial::one(&self.ring)
                } else {
                    self.submatrix(&rows, &cols)?.det()?
                };
                if (i + j) % 2 == 0 {
                    entries.push(minor);
                } else {
                    entries.push(minor.neg());
                }
            }
        }
        PolyMatrix::new(&self.ring, n, n, entries)
    }

    /// Ideal of all k x k minors, subsets enumerated in the same order as
    /// [`PolyMatrix::exterior_power`].
    pub fn minors(&self, k: usize) -> Result<Ideal> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::IndexOutOfRange(format!("{k}x{k} minors")));
        }
        let row_subsets = k_subsets(self.rows, k);
        let col_subsets = k_subsets(self.cols, k);
        let mut gens = Vec::new();
        for rs in &row_subsets {
            for cs in &col_subsets {
                gens.push(self.submatrix(rs, cs)?.det()?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Matrix of k x k minors indexed by k-subsets of rows and columns.
    ///
    /// Subsets are listed smallest-last-element first ({0,1}, {0,2}, {1,2},
    /// {0,3}, ...), which for a 2 x 4 matrix yields the Pluecker sextuple in
    /// the conventional order.
    pub fn exterior_power(&self, k: usize) -> Result<PolyMatrix> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::IndexOutOfRange(format!("exterior power {k}")));
        }
        let row_subsets = k_subsets(self.rows, k);
        let col_subsets = k_subsets(self.cols, k);
        let mut entries = Vec::with_capacity(row_subsets.len() * col_subsets.len());
        for rs in &row_subsets {
            for cs in &col_subsets {
                entries.push(self.submatrix(rs, cs)?.det()?);
            }
        }
        PolyMatrix::new(&self.ring, row_subsets.len(), col_subsets.len(), entries)
    }
}

/// Jacobian of a generator list: entry (i, j) is the partial of the j-th
/// generator with respect to the i-th ring variable.
pub fn jacobian(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<PolyMatrix> {
    if gens.is_empty() {
        return Err(Error::DimensionMismatch("jacobian of nothing".into()));
    }
    for g in gens {
        check_same_ring(ring, g.ring(), "jacobian")?;
    }
    let n = ring.n_vars();
    let mut entries = Vec::with_capacity(n * gens.len());
    for i in 0..n {
        for g in gens {
            entries.push(g.partial_derivative(i)?);
        }
    }
    PolyMatrix::new(ring, n, gens.len(), entries)
}

/// k-subsets of {0, ..., n-1} ordered by largest element, then
/// lexicographically: {0,1}, {0,2}, {1,2}, {0,3}, {1,3}, {2,3}, ...
fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, all: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            all.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(n, k, i + 1, current, all);
            current.pop();
        }
    }
    rec(n, k, 0, &mut current, &mut all);
    all.sort_by(|a, b| {
        let ra: Vec<usize> = a.iter().rev().copied().collect();
        let rb: Vec<usize> = b.iter().rev().copied().collect();
        ra.cmp(&rb)
    });
    all
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "matrix {{")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}
