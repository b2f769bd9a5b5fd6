use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use super::{denominator_lcm, fmt_rat, Int, Rat, UniPoly};
use crate::error::{Error, Result};

/// Dense row-major matrix over Q.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| super::rat(v)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![Rat::one(); n])
    }

    pub fn diagonal(d: &[Rat]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in d.iter().enumerate() {
            m.data[i * n + i] = v.clone();
        }
        m
    }

    /// Companion matrix of a monic polynomial, acting on the power basis
    /// `1, x, ..., x^(d-1)` by multiplication by `x` (columns are images).
    pub fn companion(p: &UniPoly) -> Result<Self> {
        if !p.is_monic() || p.degree() == 0 {
            return Err(Error::DegenerateInput(
                "companion matrix needs a monic polynomial of positive degree".into(),
            ));
        }
        let d = p.degree();
        let mut m = Self::zeros(d, d);
        for i in 1..d {
            m.set(i, i - 1, Rat::one());
        }
        for i in 0..d {
            m.set(i, d - 1, -p.coeff(i));
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * k).collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|v| v.is_integer())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<Rat> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn denominator_lcm(&self) -> Int {
        denominator_lcm(&self.data)
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    /// Block diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        let mut m = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Determinant by fraction-exact Gaussian elimination.
    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r * n + c].is_zero()) else {
                return Ok(Rat::zero());
            };
            if p != c {
                for j in 0..n {
                    a.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = a[c * n + c].clone();
            det *= &piv;
            for r in c + 1..n {
                let f = &a[r * n + c] / &piv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = &f * &a[c * n + j];
                    a[r * n + j] -= v;
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n)
                .find(|&r| !a.get(r, c).is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let piv = a.get(c, c).clone();
            for j in 0..n {
                a.data[c * n + j] /= &piv;
                inv.data[c * n + j] /= &piv;
            }
            for r in 0..n {
                if r == c || a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c).clone();
                for j in 0..n {
                    let (va, vi) = (&f * a.get(c, j), &f * inv.get(c, j));
                    a.data[r * n + j] -= va;
                    inv.data[r * n + j] -= vi;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Monic characteristic polynomial `det(xI - m)` by the
    /// Faddeev-LeVerrier recursion, exact over Q.
    pub fn char_poly(&self) -> Result<UniPoly> {
        if !self.is_square() {
            return Err(Error::Shape("characteristic polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut mk = Self::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
            mk = &(self * &mk) + &Self::identity(n).scale(&coeffs[n - k + 1]);
            let am = self * &mk;
            coeffs[n - k] = -am.trace() / Rat::from_integer(k.into());
        }
        Ok(UniPoly::new(coeffs))
    }

    /// `mᵀ s m`
    pub fn congruent(&self, m: &Self) -> Self {
        &(&m.transpose() * self) * m
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(fmt_rat).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    /// Panics on a shape mismatch; use [`RatMatrix::checked_mul`] for
    /// untrusted shapes.
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        self.checked_mul(rhs).expect("matrix shapes agree")
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Symmetric Gaussian elimination.
///
/// Returns `(diag, m)` with `mᵀ s m = diag(diag)` and `m` invertible. A zero
/// pivot is replaced by swapping in a later nonzero diagonal entry, or if
/// none exists, by the move `e_i <- e_i + e_j` for some `j` with
/// `s[i][j] != 0`, which produces the pivot `2 s[i][j]`.
pub fn congruence_diagonalize(s: &RatMatrix) -> Result<(Vec<Rat>, RatMatrix)> {
    if !s.is_symmetric() {
        return Err(Error::Shape("congruence diagonalization needs a symmetric matrix".into()));
    }
    let n = s.rows();
    let mut a = s.clone();
    // Columns of `m` are the new basis vectors.
    let mut m = RatMatrix::identity(n);
    for i in 0..n {
        if a.get(i, i).is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a.get(j, j).is_zero()) {
                swap_basis(&mut a, &mut m, i, j);
            } else if let Some(j) = (i + 1..n).find(|&j| !a.get(i, j).is_zero()) {
                add_basis(&mut a, &mut m, i, j);
            } else {
                return Err(Error::SingularForm);
            }
        }
        let piv = a.get(i, i).clone();
        for j in i + 1..n {
            if a.get(i, j).is_zero() {
                continue;
            }
            let f = a.get(i, j) / &piv;
            // e_j <- e_j - f e_i
            for r in 0..n {
                let v = &f * m.get(r, i);
                let cur = m.get(r, j) - v;
                m.set(r, j, cur);
            }
            for k in 0..n {
                let v = &f * a.get(i, k);
                let cur = a.get(j, k) - v;
                a.set(j, k, cur);
            }
            for k in 0..n {
                let v = &f * a.get(k, i);
                let cur = a.get(k, j) - v;
                a.set(k, j, cur);
            }
        }
    }
    let diag = a.diagonal_entries();
    debug_assert!(a.is_diagonal());
    Ok((diag, m))
}

fn swap_basis(a: &mut RatMatrix, m: &mut RatMatrix, i: usize, j: usize) {
    let n = a.rows();
    for r in 0..n {
        let (x, y) = (m.get(r, i).clone(), m.get(r, j).clone());
        m.set(r, i, y);
        m.set(r, j, x);
    }
    a.swap_rows(i, j);
    for r in 0..n {
        let (x, y) = (a.get(r, i).clone(), a.get(r, j).clone());
        a.set(r, i, y);
        a.set(r, j, x);
    }
}

// e_i <- e_i + e_j
fn add_basis(a: &mut RatMatrix, m: &mut RatMatrix, i: usize, j: usize) {
    let n = a.rows();
    for r in 0..n {
        let v = m.get(r, i) + m.get(r, j);
        m.set(r, i, v);
    }
    for k in 0..n {
        let v = a.get(i, k) + a.get(j, k);
        a.set(i, k, v);
    }
    for k in 0..n {
        let v = a.get(k, i) + a.get(k, j);
        a.set(k, i, v);
    }
}
