//! Dense exact linear algebra over arbitrary-precision rationals.
//!
//! Everything here is deterministic: Gaussian elimination uses the first
//! nonzero pivot, never a numerically "best" one, so results are
//! reproducible across runs and platforms.  No floating point.

use crate::group::FiniteGroup;
use crate::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};

/// Exact scalar type: arbitrary-precision rational numbers in lowest terms
/// with positive denominator (invariants maintained by the representation).
pub type Rational = BigRational;

/// Shorthand for an integer as a rational.
pub fn q(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`.
pub fn q_frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimError("ragged row lengths".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| q(n)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Rational>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, |v| v.len());
        if cols.iter().any(|v| v.len() != r) {
            return Err(Error::DimError("ragged column lengths".into()));
        }
        Ok(Matrix::from_fn(r, c, |i, j| cols[j][i].clone()))
    }

    /// The permutation matrix sending basis vector `e_j` to `e_{to(j)}`.
    pub fn permutation(n: usize, to: impl Fn(usize) -> usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            m.set(to(j), j, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Row-major flattening, used to treat a matrix as a vector of unknowns.
    pub fn flatten(&self) -> Vec<Rational> {
        self.data.clone()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "matrix product dimension mismatch: {}x{} · {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    /// Kronecker (tensor) product; block `(i1,j1)` is `self[i1,j1]·other`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if !b.is_zero() {
                            out.set(i1 * other.rows + i2, j1 * other.cols + j2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Copies `block` into `self` with upper-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn trace(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    /// In-place reduction to reduced row echelon form; returns the pivot
    /// columns in order.  Pivoting takes the first nonzero entry scanning
    /// down each column.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if pivot_row != row {
                for j in 0..self.cols {
                    self.data.swap(pivot_row * self.cols + j, row * self.cols + j);
                }
            }
            let inv = {
                let p = self.get(row, col);
                Rational::one() / p
            };
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for j in col..self.cols {
                    let v = self.get(r, j) - &factor * self.get(row, j);
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref_in_place().len()
    }

    /// A basis of the right nullspace `{x : Ax = 0}`, one vector per free
    /// column of the reduced form, in column order.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut work = self.clone();
        let pivots = work.rref_in_place();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -work.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Indices of a column basis of the image (the pivot columns).
    pub fn image_basis_columns(&self) -> Vec<usize> {
        let mut work = self.clone();
        work.rref_in_place()
    }

    /// Solves `self · X = rhs` when `self` has full column rank, failing if
    /// the system is inconsistent or underdetermined.
    pub fn solve_exact(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows {
            return Err(Error::DimError(format!(
                "solve: {} rows vs {} rows",
                self.rows, rhs.rows
            )));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + rhs.cols);
        aug.set_block(0, 0, self);
        aug.set_block(0, self.cols, rhs);
        let pivots = aug.rref_in_place();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Err(Error::DimError("solve: inconsistent system".into()));
        }
        if pivots.len() < self.cols {
            return Err(Error::DimError("solve: matrix lacks full column rank".into()));
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, aug.get(r, self.cols + j).clone());
            }
        }
        Ok(x)
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// A row space maintained in reduced echelon form, supporting incremental
/// insertion.  Used to accumulate large spans (e.g. relation subspaces)
/// without re-eliminating from scratch.
pub struct RowSpace {
    cols: usize,
    rows: Vec<Vec<Rational>>, // sorted by pivot column, each with leading 1
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows (eliminating every pivot
    /// coordinate).
    pub fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            // row[p] = 1, so this zeroes v[p] along the way.
            let factor = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&factor * r);
                }
            }
        }
        v
    }

    /// Inserts a vector; returns true if it enlarged the space.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[pivot].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x / &lead;
            }
        }
        // Back-eliminate the new pivot from existing rows to stay reduced.
        for row in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            // v[pivot] = 1, so this zeroes row[pivot] along the way.
            let factor = row[pivot].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x = &*x - &(&factor * r);
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, v);
        true
    }

    /// The stored reduced rows, pivot-sorted.
    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Columns without a pivot, i.e. coordinates of the quotient by this
    /// row space.
    pub fn free_columns(&self) -> Vec<usize> {
        let pivot_set: std::collections::BTreeSet<usize> = self.pivots.iter().copied().collect();
        (0..self.cols).filter(|c| !pivot_set.contains(c)).collect()
    }
}

/// The space of matrices `X` with `X·A = B·X` for every pair `(A, B)`,
/// intersected with the span of `initial`.  Returns a basis.
///
/// The constraint is imposed pair by pair, shrinking the basis each time,
/// so early pairs that cut the dimension quickly make later pairs cheap.
pub fn intertwiner_space(pairs: &[(&Matrix, &Matrix)], initial: Vec<Matrix>) -> Vec<Matrix> {
    let mut basis = initial;
    for (a, b) in pairs {
        if basis.is_empty() {
            break;
        }
        let residues: Vec<Vec<Rational>> = basis
            .iter()
            .map(|x| x.mul(a).sub(&b.mul(x)).flatten())
            .collect();
        let m = Matrix::from_columns(&residues).expect("residues have equal size");
        let combos = m.nullspace();
        basis = combos
            .iter()
            .map(|combo| {
                let mut acc = Matrix::zeros(basis[0].rows(), basis[0].cols());
                for (c, x) in combo.iter().zip(&basis) {
                    if !c.is_zero() {
                        acc = acc.add(&x.scale(c));
                    }
                }
                acc
            })
            .collect();
    }
    basis
}

/// Dimension of `{X : X·a_mats[i] = b_mats[i]·X for all i}`.
///
/// When the listed matrices generate the image of the acting algebra, this
/// is the dimension of the module-category hom space between the two
/// representations.
pub fn hom_space_dim(a_mats: &[Matrix], b_mats: &[Matrix]) -> Result<usize> {
    if a_mats.len() != b_mats.len() {
        return Err(Error::DimError(format!(
            "{} left matrices vs {} right matrices",
            a_mats.len(),
            b_mats.len()
        )));
    }
    let da = a_mats.first().map_or(0, |m| m.rows());
    let db = b_mats.first().map_or(0, |m| m.rows());
    let mut units = Vec::with_capacity(da * db);
    for i in 0..db {
        for j in 0..da {
            let mut e = Matrix::zeros(db, da);
            e.set(i, j, Rational::one());
            units.push(e);
        }
    }
    let pairs: Vec<(&Matrix, &Matrix)> = a_mats.iter().zip(b_mats.iter()).collect();
    Ok(intertwiner_space(&pairs, units).len())
}

/// The multiplicity `⟨χ_V, χ_W⟩ = (1/|G|) Σ_g χ_V(g)·χ_W(g⁻¹)` of
/// characters indexed by the group's element order.  Fails unless the
/// result is an integer (as it must be for genuine characters).
pub fn char_multiplicity(
    chi_v: &[Rational],
    chi_w: &[Rational],
    group: &FiniteGroup,
) -> Result<Rational> {
    if chi_v.len() != group.order() || chi_w.len() != group.order() {
        return Err(Error::DimError(format!(
            "character length {} / {} vs group order {}",
            chi_v.len(),
            chi_w.len(),
            group.order()
        )));
    }
    let mut sum = Rational::zero();
    for i in 0..group.order() {
        sum += &chi_v[i] * &chi_w[group.inverse_index(i)];
    }
    let m = sum / q(group.order() as i64);
    if !m.denom().is_one() {
        return Err(Error::OracleInconsistency(format!(
            "character pairing {m} is not an integer"
        )));
    }
    if m.is_negative() {
        return Err(Error::OracleInconsistency(format!(
            "character pairing {m} is negative"
        )));
    }
    Ok(m)
}
