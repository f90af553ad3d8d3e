//! Exact dense matrices over a cyclotomic field, with deterministic
//! reduced row echelon form, rank, kernel bases, linear solves, inverses,
//! and Kronecker products.
//!
//! Pivoting is fully deterministic: columns are processed left to right and
//! the first row (top to bottom) with a nonzero entry in the current column
//! becomes the pivot, so equal inputs always produce identical outputs.

use crate::scalars::CycScalar;

/// Dense row-major matrix over ℚ(ζ_N) for a fixed N shared by all entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    n: u32,
    rows: usize,
    cols: usize,
    data: Vec<CycScalar>,
}

impl std::fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ExactMatrix {}x{} over Q(zeta{}) [", self.rows, self.cols, self.n)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl ExactMatrix {
    /// Build from row-major entries; all entries must live in ℚ(ζ_n).
    pub fn new(n: u32, rows: usize, cols: usize, data: Vec<CycScalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length must equal rows*cols");
        for s in &data {
            assert_eq!(s.root_order(), n, "entry root order differs from matrix root order");
        }
        ExactMatrix { n, rows, cols, data }
    }

    /// The zero matrix.
    pub fn zero(n: u32, rows: usize, cols: usize) -> Self {
        ExactMatrix { n, rows, cols, data: vec![CycScalar::zero(n); rows * cols] }
    }

    /// The identity matrix.
    pub fn identity(n: u32, dim: usize) -> Self {
        let mut m = Self::zero(n, dim, dim);
        for i in 0..dim {
            *m.at_mut(i, i) = CycScalar::one(n);
        }
        m
    }

    /// `s` times the identity.
    pub fn scalar_matrix(n: u32, dim: usize, s: &CycScalar) -> Self {
        let mut m = Self::zero(n, dim, dim);
        for i in 0..dim {
            *m.at_mut(i, i) = s.clone();
        }
        m
    }

    /// Build from a list of equal-length rows.
    pub fn from_rows(n: u32, rows: Vec<Vec<CycScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::new(n, r, c, rows.into_iter().flatten().collect())
    }

    /// Build from integer entries (handy in tests and fixtures).
    pub fn from_ints(n: u32, rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&v| CycScalar::from_int(n, v)))
            .collect();
        Self::new(n, rows.len(), rows.first().map_or(0, |r| r.len()), data)
    }

    /// Root order of the common cyclotomic field of the entries.
    pub fn root_order(&self) -> u32 {
        self.n
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at row `r`, column `c`.
    pub fn at(&self, r: usize, c: usize) -> &CycScalar {
        &self.data[r * self.cols + c]
    }

    /// Mutable entry at row `r`, column `c`.
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut CycScalar {
        &mut self.data[r * self.cols + c]
    }

    /// Whether every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    /// Whether this is the identity matrix.
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.at(r, c).is_one()
                    } else {
                        self.at(r, c).is_zero()
                    }
                })
            })
    }

    /// True when the matrix is s·I for some scalar s; returns that scalar.
    pub fn as_scalar_multiple_of_identity(&self) -> Option<CycScalar> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let s = self.at(0, 0).clone();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let want_zero = r != c;
                if want_zero {
                    if !self.at(r, c).is_zero() {
                        return None;
                    }
                } else if self.at(r, c) != &s {
                    return None;
                }
            }
        }
        Some(s)
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> CycScalar {
        assert_eq!(self.rows, self.cols, "trace needs a square matrix");
        let mut acc = CycScalar::zero(self.n);
        for i in 0..self.rows {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(self.n, other.n, "matrices live over different cyclotomic fields");
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        ExactMatrix { n: self.n, rows: self.rows, cols: self.cols, data }
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect();
        ExactMatrix { n: self.n, rows: self.rows, cols: self.cols, data }
    }

    /// Multiply every entry by `s`.
    pub fn scale(&self, s: &CycScalar) -> Self {
        assert_eq!(s.root_order(), self.n, "scalar root order differs");
        let data = self.data.iter().map(|a| a.mul(s)).collect();
        ExactMatrix { n: self.n, rows: self.rows, cols: self.cols, data }
    }

    /// Matrix product.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zero(self.n, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(r, c).add(&a.mul(b));
                    *out.at_mut(r, c) = cur;
                }
            }
        }
        out
    }

    /// The transpose.
    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.n, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    /// Kronecker product: `(A ⊗ B)[(i·p + k), (j·q + l)] = A[i,j]·B[k,l]`
    /// where B is p×q.
    pub fn kron(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let (p, q) = (other.rows, other.cols);
        let mut out = Self::zero(self.n, self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        *out.at_mut(i * p + k, j * q + l) = a.mul(other.at(k, l));
                    }
                }
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = CycScalar::zero(self.n);
                for c in 0..self.cols {
                    let a = self.at(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc = acc.add(&a.mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Re-express every entry in ℚ(ζ_m) for a multiple m of the current
    /// root order.
    pub fn embed(&self, m: u32) -> Self {
        let data = self.data.iter().map(|s| s.embed(m)).collect();
        ExactMatrix { n: m, rows: self.rows, cols: self.cols, data }
    }

    /// In-place reduced row echelon form; returns the pivot columns in
    /// ascending order.  Deterministic: first nonzero row becomes the pivot.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    let a = self.at(pr, c).clone();
                    let b = self.at(row, c).clone();
                    *self.at_mut(pr, c) = b;
                    *self.at_mut(row, c) = a;
                }
            }
            let inv = self.at(row, col).inv().expect("pivot is nonzero");
            for c in col..self.cols {
                let v = self.at(row, c).mul(&inv);
                *self.at_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let v = self.at(r, c).sub(&factor.mul(self.at(row, c)));
                    *self.at_mut(r, c) = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Reduced row echelon form and the pivot column indices.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {x : Ax = 0}.  One basis vector per free
    /// column, free columns in ascending order; the vector for free column
    /// j has entry 1 at j and −(reduced coefficient) at each pivot column.
    pub fn kernel(&self) -> Vec<Vec<CycScalar>> {
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for j in 0..self.cols {
            if pivot_set.contains(&j) {
                continue;
            }
            let mut v = vec![CycScalar::zero(self.n); self.cols];
            v[j] = CycScalar::one(self.n);
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = r.at(prow, j).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of Ax = b, or `None` if the system is inconsistent.
    /// Free variables are set to zero, so the answer is deterministic.
    pub fn solve(&self, b: &[CycScalar]) -> Option<Vec<CycScalar>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut aug = Self::zero(self.n, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols) = b[r].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![CycScalar::zero(self.n); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = aug.at(prow, self.cols).clone();
        }
        Some(x)
    }

    /// Express several right-hand sides at once; `None` if any is
    /// inconsistent.  Columns of the result solve the corresponding columns
    /// of `rhs`.
    pub fn solve_matrix(&self, rhs: &Self) -> Option<Self> {
        self.assert_same_field(rhs);
        assert_eq!(rhs.rows, self.rows, "rhs row count mismatch");
        let mut aug = Self::zero(self.n, self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            for c in 0..rhs.cols {
                *aug.at_mut(r, self.cols + c) = rhs.at(r, c).clone();
            }
        }
        let pivots = aug.rref_in_place();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zero(self.n, self.cols, rhs.cols);
        for (prow, &pcol) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                *x.at_mut(pcol, c) = aug.at(prow, self.cols + c).clone();
            }
        }
        Some(x)
    }

    /// Inverse of a square matrix; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse requires a square matrix");
        let sol = self.solve_matrix(&Self::identity(self.n, self.rows))?;
        // solve_matrix returns None only on inconsistency; a singular square
        // system is consistent for some rhs, so double-check.
        if self.mul(&sol).is_identity() {
            Some(sol)
        } else {
            None
        }
    }

    /// Restrict columns to the span of the given basis vectors: returns the
    /// matrix of the action on that span, provided the span is invariant
    /// (`None` otherwise).  Entry (i, j) is the coefficient of `basis[i]`
    /// in `A·basis[j]`.
    pub fn restrict_to_span(&self, basis: &[Vec<CycScalar>]) -> Option<Self> {
        if basis.is_empty() {
            return Some(Self::zero(self.n, 0, 0));
        }
        let k = basis.len();
        let mut bmat = Self::zero(self.n, self.cols, k);
        for (j, v) in basis.iter().enumerate() {
            assert_eq!(v.len(), self.cols, "basis vector length mismatch");
            for (i, s) in v.iter().enumerate() {
                *bmat.at_mut(i, j) = s.clone();
            }
        }
        let image = self.mul(&bmat);
        bmat.solve_matrix(&image)
    }
}
