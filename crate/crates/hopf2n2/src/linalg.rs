//! Exact linear algebra over `Q(zeta_2n)` and over the integers: dense
//! matrices for module actions, an incremental exact rank computation
//! for ideal and center dimensions, and a fraction-free Bareiss
//! determinant for integer change-of-basis certificates.

use num::bigint::BigInt;
use num::{Signed, Zero};

use crate::cyclotomic::CycNum;
use crate::{Error, Result};

/// A dense matrix over `Q(zeta_2n)`, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    n: u32,
    rows: usize,
    cols: usize,
    data: Vec<CycNum>,
}

impl Mat {
    pub fn zero(n: u32, rows: usize, cols: usize) -> Mat {
        Mat {
            n,
            rows,
            cols,
            data: vec![CycNum::zero(n); rows * cols],
        }
    }

    pub fn identity(n: u32, dim: usize) -> Mat {
        let mut m = Mat::zero(n, dim, dim);
        for k in 0..dim {
            m.set(k, k, CycNum::one(n));
        }
        m
    }

    pub fn from_rows(n: u32, rows: Vec<Vec<CycNum>>) -> Mat {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(height * width);
        for row in rows {
            assert_eq!(row.len(), width, "ragged matrix rows");
            for v in row {
                assert_eq!(v.param(), n, "entry from the wrong field");
                data.push(v);
            }
        }
        Mat {
            n,
            rows: height,
            cols: width,
            data,
        }
    }

    pub fn param(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CycNum {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycNum) {
        assert_eq!(v.param(), self.n, "entry from the wrong field");
        self.data[r * self.cols + c] = v;
    }

    fn check_param(&self, other: &Mat) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ParamMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat> {
        self.check_param(other)?;
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Mat {
            n: self.n,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat> {
        self.check_param(other)?;
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Mat {
            n: self.n,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        self.check_param(other)?;
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Mat::zero(self.n, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let acc = out.get(r, c) + &(a * b);
                    out.data[r * out.cols + c] = acc;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, v: &CycNum) -> Mat {
        let data = self.data.iter().map(|a| a * v).collect();
        Mat {
            n: self.n,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn pow(&self, e: u32) -> Mat {
        assert_eq!(self.rows, self.cols, "pow needs a square matrix");
        let mut acc = Mat::identity(self.n, self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Kronecker product, in the convention `(A kron B)(u (x) v) = Au (x) Bv`.
    pub fn kron(&self, other: &Mat) -> Mat {
        assert_eq!(self.n, other.n, "kron factors from different fields");
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Mat::zero(self.n, rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> CycNum {
        assert_eq!(self.rows, self.cols, "trace needs a square matrix");
        let mut acc = CycNum::zero(self.n);
        for k in 0..self.rows {
            acc = &acc + self.get(k, k);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNum::is_zero)
    }
}

macro_rules! forward_mat_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &Mat {
            type Output = Mat;
            fn $method(self, rhs: &Mat) -> Mat {
                self.$checked(rhs).expect("matrix parameter mismatch")
            }
        }
        impl std::ops::$trait for Mat {
            type Output = Mat;
            fn $method(self, rhs: Mat) -> Mat {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_mat_binop!(Add, add, try_add);
forward_mat_binop!(Sub, sub, try_sub);
forward_mat_binop!(Mul, mul, try_mul);

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} over Q(zeta_{})", self.rows, self.cols, 2 * self.n)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// An incrementally built row space over `Q(zeta_2n)`, used for exact
/// rank computations. Stored rows are kept in reduced echelon form with
/// unit pivots, so each insertion is a bounded sequence of exact
/// eliminations and coefficient sizes stay polynomial even at rank
/// near the full dimension.
pub struct RowSpace {
    n: u32,
    width: usize,
    rows: Vec<Vec<CycNum>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(n: u32, width: usize) -> RowSpace {
        RowSpace {
            n,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Insert a row; returns true when it enlarges the span.
    pub fn insert(&mut self, mut row: Vec<CycNum>) -> bool {
        assert_eq!(row.len(), self.width, "row of the wrong width");
        for (pivot_row, &col) in self.rows.iter().zip(&self.pivots) {
            let at_pivot = row[col].clone();
            if at_pivot.is_zero() {
                continue;
            }
            // Pivot rows are normalized, so elimination is one
            // multiply-subtract per entry.
            for (r, p) in row.iter_mut().zip(pivot_row) {
                *r = &*r - &(p * &at_pivot);
            }
        }
        match row.iter().position(|v| !v.is_zero()) {
            Some(col) => {
                let inv = row[col].inv().expect("pivot is nonzero");
                for r in row.iter_mut() {
                    *r = &*r * &inv;
                }
                self.rows.push(row);
                self.pivots.push(col);
                true
            }
            None => false,
        }
    }

    /// Does the span already contain this row?
    pub fn contains(&self, row: &[CycNum]) -> bool {
        let mut probe = RowSpace {
            n: self.n,
            width: self.width,
            rows: self.rows.clone(),
            pivots: self.pivots.clone(),
        };
        !probe.insert(row.to_vec())
    }
}

/// Rank of an iterator of rows over `Q(zeta_2n)`.
pub fn rank_of_rows(n: u32, width: usize, rows: impl IntoIterator<Item = Vec<CycNum>>) -> usize {
    let mut space = RowSpace::new(n, width);
    for row in rows {
        space.insert(row);
    }
    space.rank()
}

/// Exact determinant of an integer matrix by Bareiss elimination:
/// single-step fraction-free elimination in which every division is
/// exact, so intermediate entries stay polynomial-sized.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let size = m.len();
    if size == 0 {
        return BigInt::from(1);
    }
    for row in &m {
        assert_eq!(row.len(), size, "determinant needs a square matrix");
    }
    let mut sign = 1i64;
    let mut prev = BigInt::from(1);
    for k in 0..size {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::from(0),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::from(0);
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// True when the integer matrix has determinant +1 or -1.
pub fn is_unimodular(m: Vec<Vec<BigInt>>) -> bool {
    bareiss_det(m).abs() == BigInt::from(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_mat(n: u32, entries: &[&[i64]]) -> Mat {
        let rows = entries
            .iter()
            .map(|r| r.iter().map(|&v| CycNum::from_int(n, v)).collect())
            .collect();
        Mat::from_rows(n, rows)
    }

    #[test]
    fn identity_is_neutral() {
        let a = int_mat(2, &[&[1, 2], &[3, 4]]);
        let id = Mat::identity(2, 2);
        assert_eq!(&a * &id, a);
        assert_eq!(&id * &a, a);
    }

    #[test]
    fn multiplication_follows_row_times_column() {
        let a = int_mat(2, &[&[1, 2], &[3, 4]]);
        let b = int_mat(2, &[&[5, 6], &[7, 8]]);
        assert_eq!(&a * &b, int_mat(2, &[&[19, 22], &[43, 50]]));
    }

    #[test]
    fn kron_shapes_and_trace_factor() {
        let a = int_mat(3, &[&[2, 0], &[1, 3]]);
        let b = int_mat(3, &[&[1, 1, 0], &[0, 2, 0], &[0, 0, 5]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (6, 6));
        assert_eq!(k.trace(), &a.trace() * &b.trace());
    }

    #[test]
    fn kron_respects_products() {
        let a = int_mat(2, &[&[0, 1], &[1, 0]]);
        let b = int_mat(2, &[&[2, 1], &[0, 1]]);
        let c = int_mat(2, &[&[1, 1], &[1, 0]]);
        let d = int_mat(2, &[&[3, 0], &[0, 2]]);
        let lhs = a.kron(&b) * c.kron(&d);
        let rhs = (&a * &c).kron(&(&b * &d));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_detects_dependent_rows() {
        let n = 2;
        let rows = vec![
            vec![CycNum::from_int(n, 1), CycNum::from_int(n, 2)],
            vec![CycNum::from_int(n, 2), CycNum::from_int(n, 4)],
        ];
        assert_eq!(rank_of_rows(n, 2, rows), 1);
    }

    #[test]
    fn rank_over_the_cyclotomic_field() {
        // (1, i) and (i, -1) are dependent over Q(i); (1, 0) breaks the tie.
        let n = 2;
        let i = CycNum::root_power(n, 1);
        let rows = vec![
            vec![CycNum::one(n), i.clone()],
            vec![i.clone(), -&CycNum::one(n)],
            vec![CycNum::one(n), CycNum::zero(n)],
        ];
        assert_eq!(rank_of_rows(n, 2, rows), 2);
    }

    #[test]
    fn row_space_membership() {
        let n = 2;
        let mut space = RowSpace::new(n, 3);
        assert!(space.insert(vec![
            CycNum::from_int(n, 1),
            CycNum::from_int(n, 1),
            CycNum::from_int(n, 0),
        ]));
        assert!(space.insert(vec![
            CycNum::from_int(n, 0),
            CycNum::from_int(n, 1),
            CycNum::from_int(n, 1),
        ]));
        assert!(space.contains(&[
            CycNum::from_int(n, 1),
            CycNum::from_int(n, 2),
            CycNum::from_int(n, 1),
        ]));
        assert!(!space.contains(&[
            CycNum::from_int(n, 1),
            CycNum::from_int(n, 0),
            CycNum::from_int(n, 0),
        ]));
    }

    #[test]
    fn bareiss_matches_known_determinants() {
        let m = |vals: &[&[i64]]| -> Vec<Vec<BigInt>> {
            vals.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect()
        };
        assert_eq!(bareiss_det(m(&[&[2, 3], &[4, 5]])), BigInt::from(-2));
        assert_eq!(
            bareiss_det(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])),
            BigInt::from(-3)
        );
        assert_eq!(
            bareiss_det(m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])),
            BigInt::from(-1)
        );
        assert_eq!(bareiss_det(m(&[&[1, 2], &[2, 4]])), BigInt::from(0));
        assert!(is_unimodular(m(&[&[1, 5], &[0, -1]])));
        assert!(!is_unimodular(m(&[&[2, 0], &[0, 1]])));
    }
}
