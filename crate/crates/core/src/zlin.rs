//! Exact integer linear algebra: 2x2 matrices, Smith normal form, and
//! symmetric-form invariants (rank, signature, parity, radical).
//!
//! All arithmetic is arbitrary precision; there is no wraparound to worry
//! about even under adversarial property-test inputs.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A 2x2 integer matrix, row-major `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatZ2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl MatZ2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        MatZ2 { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        MatZ2::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn mul(&self, rhs: &MatZ2) -> MatZ2 {
        MatZ2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn neg(&self) -> MatZ2 {
        MatZ2 { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }

    /// Inverse of a unimodular matrix. Panics if `det` is not a unit.
    pub fn inverse(&self) -> MatZ2 {
        let det = self.det();
        assert!(det.abs().is_one(), "inverse requires det = +-1, got {det}");
        let m = MatZ2 { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() };
        if det.is_one() {
            m
        } else {
            m.neg()
        }
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn is_minus_identity(&self) -> bool {
        self.neg().is_identity()
    }
}

impl fmt::Display for MatZ2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for MatZ2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Product of the factors under right-to-left composition: with input
/// `[m_1, ..., m_k]` the result is the matrix of `m_k . ... . m_1`,
/// i.e. `m_k * m_(k-1) * ... * m_1`.
pub fn mat2_product(factors: &[MatZ2]) -> MatZ2 {
    assert!(!factors.is_empty(), "mat2_product requires at least one factor");
    let mut acc = factors[0].clone();
    for m in &factors[1..] {
        acc = m.mul(&acc);
    }
    acc
}

/// A rectangular matrix over the integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of `i64` entries. Panics if the rows are ragged.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                *m.at_mut(i, j) = BigInt::from(x);
            }
        }
        m
    }

    pub fn diag(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = IntMatrix::zero(n, n);
        for (i, &x) in entries.iter().enumerate() {
            *m.at_mut(i, i) = BigInt::from(x);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        *self.at_mut(i, j) = v.into();
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lik = self.at(i, k);
                if lik.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = lik * rhs.at(k, j);
                    *out.at_mut(i, j) += add;
                }
            }
        }
        out
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "det requires a square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.entries.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut prev = BigInt::one();
        let mut sign = BigInt::one();
        for t in 0..n - 1 {
            if m[idx(t, t)].is_zero() {
                match (t + 1..n).find(|&i| !m[idx(i, t)].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            m.swap(idx(t, j), idx(i, j));
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in t + 1..n {
                for j in t + 1..n {
                    let num = &m[idx(i, j)] * &m[idx(t, t)] - &m[idx(i, t)] * &m[idx(t, j)];
                    m[idx(i, j)] = num / &prev;
                }
                m[idx(i, t)] = BigInt::zero();
            }
            prev = m[idx(t, t)].clone();
        }
        sign * m[idx(n - 1, n - 1)].clone()
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for j in 0..self.cols {
            let c = self.cols;
            self.entries.swap(r1 * c + j, r2 * c + j);
        }
    }

    fn swap_cols(&mut self, c1: usize, c2: usize) {
        if c1 == c2 {
            return;
        }
        for i in 0..self.rows {
            let c = self.cols;
            self.entries.swap(i * c + c1, i * c + c2);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let add = q * self.at(src, j);
            *self.at_mut(dst, j) += add;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let add = q * self.at(i, src);
            *self.at_mut(i, dst) += add;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.at(r, j);
            *self.at_mut(r, j) = v;
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Smith normal form decomposition `d = u * m * v` with `u`, `v` unimodular,
/// `d` diagonal, `d_i >= 0` and `d_i | d_(i+1)`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Diagonal entries of `d`, in order.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.at(i, i).clone()).collect()
    }
}

/// Smith normal form by elimination with pivot reduction. Returns `(d, u, v)`
/// packed in [`Snf`] with `d = u * m * v` exactly.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let steps = rows.min(cols);
    for t in 0..steps {
        'pivot: loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if d.at(i, j).is_zero() {
                        continue;
                    }
                    match pivot {
                        Some((pi, pj)) if d.at(pi, pj).abs() <= d.at(i, j).abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break 'pivot };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..rows {
                if d.at(i, t).is_zero() {
                    continue;
                }
                let q = -(d.at(i, t) / d.at(t, t));
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !d.at(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if d.at(t, j).is_zero() {
                    continue;
                }
                let q = -(d.at(t, j) / d.at(t, t));
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !d.at(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            // Pivot must divide the rest of the block for d_i | d_(i+1).
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(d.at(i, j) % d.at(t, t)).is_zero() {
                        d.add_row_multiple(t, i, &BigInt::one());
                        u.add_row_multiple(t, i, &BigInt::one());
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        if d.at(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    Snf { d, u, v }
}

/// Parity of a symmetric bilinear form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

/// Invariants of a symmetric integer form: computed on the saturated quotient
/// by the radical, so degenerate inputs are fine.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FormReport {
    pub rank: usize,
    pub signature: i64,
    pub parity: Parity,
    pub radical_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GramError {
    NotSquare { rows: usize, cols: usize },
    NotSymmetric { i: usize, j: usize },
}

impl fmt::Display for GramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GramError::NotSquare { rows, cols } => {
                write!(f, "gram matrix must be square, got {rows}x{cols}")
            }
            GramError::NotSymmetric { i, j } => {
                write!(f, "gram matrix not symmetric at ({i}, {j})")
            }
        }
    }
}

/// Rank, signature, parity and radical rank of a symmetric integer matrix.
///
/// The radical is split off first: the Smith normal form of `g` exhibits a
/// unimodular column basis whose zero-diagonal columns span the saturated
/// kernel; the remaining columns give an integral matrix for the induced
/// nondegenerate form, on which signature (by exact rational congruence
/// diagonalization) and parity (evenness of the diagonal) are read off.
pub fn gram_analyze(g: &IntMatrix) -> Result<FormReport, GramError> {
    if !g.is_square() {
        return Err(GramError::NotSquare { rows: g.rows(), cols: g.cols() });
    }
    for i in 0..g.rows() {
        for j in 0..i {
            if g.at(i, j) != g.at(j, i) {
                return Err(GramError::NotSymmetric { i, j });
            }
        }
    }

    let n = g.rows();
    let snf = smith_normal_form(g);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    let radical_rank = n - rank;

    // Columns of v with nonzero d_i descend to a basis of the quotient lattice.
    let mut w = IntMatrix::zero(n, rank);
    let mut col = 0;
    for j in 0..n {
        if j < diag.len() && !diag[j].is_zero() {
            for i in 0..n {
                *w.at_mut(i, col) = snf.v.at(i, j).clone();
            }
            col += 1;
        }
    }
    let q = w.transpose().mul(&g.mul(&w));

    let parity = if (0..rank).all(|i| q.at(i, i).is_even()) {
        Parity::Even
    } else {
        Parity::Odd
    };
    let signature = rational_signature(&q);

    Ok(FormReport { rank, signature, parity, radical_rank })
}

/// Signature of a nondegenerate symmetric integer matrix, by congruence
/// diagonalization over the rationals.
fn rational_signature(q: &IntMatrix) -> i64 {
    let n = q.rows();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from(q.at(i, j).clone())).collect())
        .collect();
    let mut sig = 0i64;
    for t in 0..n {
        if m[t][t].is_zero() {
            if let Some(i) = (t + 1..n).find(|&i| !m[i][i].is_zero()) {
                m.swap(t, i);
                for row in m.iter_mut() {
                    row.swap(t, i);
                }
            } else if let Some((i, j)) = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .find(|&(i, j)| i != j && !m[i][j].is_zero())
            {
                // Zero diagonal block: fold column j into i to expose 2*m[i][j].
                for k in 0..n {
                    let add = m[j][k].clone();
                    m[i][k] += add;
                }
                for row in m.iter_mut() {
                    let add = row[j].clone();
                    row[i] += add;
                }
                m.swap(t, i);
                for row in m.iter_mut() {
                    row.swap(t, i);
                }
            } else {
                break;
            }
        }
        let pivot = m[t][t].clone();
        for i in t + 1..n {
            if m[i][t].is_zero() {
                continue;
            }
            let f = &m[i][t] / &pivot;
            for k in 0..n {
                let sub = &f * &m[t][k];
                m[i][k] -= sub;
            }
            for row in m.iter_mut() {
                let sub = &f * &row[t];
                row[i] -= sub;
            }
        }
        sig += if pivot.is_positive() { 1 } else { -1 };
    }
    sig
}

/// Returns a `String` rendering of a diagonal, for error payloads.
pub fn diagonal_string(d: &[BigInt]) -> String {
    use core::fmt::Write;
    let mut s = String::from("(");
    for (i, x) in d.iter().enumerate() {
        if i > 0 {
            let _ = write!(s, ", ");
        }
        let _ = write!(s, "{x}");
    }
    s.push(')');
    s
}
