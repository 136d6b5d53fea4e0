//! Dense matrices over a [`Field`] and exact row reduction.
//!
//! Over the rationals, elimination runs fraction-free on integer rows and
//! only divides by pivots when the reduced echelon form is read off.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::LinalgError;
use crate::field::{mod_inv, mul_mod, Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Solution set of `A x = b`: `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_width(field, rows, c).and_then(|m| {
            if r == 0 {
                Ok(Matrix::zeros(field, 0, c))
            } else {
                Ok(m)
            }
        })
    }

    /// Like [`Matrix::from_rows`] but keeps the column count when there are no rows.
    pub fn from_rows_with_width(
        field: &Field,
        rows: Vec<Vec<Scalar>>,
        cols: usize,
    ) -> Result<Matrix, LinalgError> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::Dimension(format!(
                    "ragged rows: expected {cols} entries, found {}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|s| !field.contains(s)) {
                return Err(LinalgError::MixedFields(field.to_string(), format!("{bad:?}")));
            }
            data.extend(row);
        }
        Ok(Matrix { field: field.clone(), rows: r, cols, data })
    }

    pub fn from_i64(field: &Field, rows: &[&[i64]]) -> Matrix {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, rows).expect("rectangular literal")
    }

    /// Matrix whose columns are the given vectors, all of length `height`.
    pub fn from_columns(field: &Field, height: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, height, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), height, "column length");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    fn check_field(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::MixedFields(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        if let Field::Prime(p) = f {
            let p = *p;
            for i in 0..self.rows {
                let mut acc = vec![0u64; other.cols];
                for k in 0..self.cols {
                    let a = self.get(i, k).code();
                    if a == 0 {
                        continue;
                    }
                    for (j, slot) in acc.iter_mut().enumerate() {
                        let b = other.get(k, j).code();
                        if b != 0 {
                            *slot = (*slot + mul_mod(a, b, p)) % p;
                        }
                    }
                }
                for (j, v) in acc.into_iter().enumerate() {
                    out.set(i, j, Scalar::Fin(v));
                }
            }
            return Ok(out);
        }
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
                    let v = f.add(out.get(i, j), &f.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::Dimension("shape mismatch in addition".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.add(&other.scale(&self.field.neg(&self.field.one())))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        match &self.field {
            Field::Prime(p) => self.rref_prime(*p),
            Field::Rationals => self.rref_fraction_free(),
            Field::Galois(_) => self.rref_generic(),
        }
    }

    fn rref_prime(&self, p: u64) -> (Matrix, Vec<usize>) {
        let (r, c) = (self.rows, self.cols);
        let mut a: Vec<u64> = self.data.iter().map(Scalar::code).collect();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..c {
            if prow == r {
                break;
            }
            let Some(sel) = (prow..r).find(|&i| a[i * c + col] != 0) else { continue };
            if sel != prow {
                for j in 0..c {
                    a.swap(sel * c + j, prow * c + j);
                }
            }
            let inv = mod_inv(a[prow * c + col], p);
            for j in col..c {
                a[prow * c + j] = mul_mod(a[prow * c + j], inv, p);
            }
            for i in 0..r {
                if i == prow {
                    continue;
                }
                let factor = a[i * c + col];
                if factor == 0 {
                    continue;
                }
                for j in col..c {
                    let sub = mul_mod(factor, a[prow * c + j], p);
                    if sub != 0 {
                        a[i * c + j] = (a[i * c + j] + p - sub) % p;
                    }
                }
            }
            pivots.push(col);
            prow += 1;
        }
        let data = a.into_iter().map(Scalar::Fin).collect();
        (Matrix { field: self.field.clone(), rows: r, cols: c, data }, pivots)
    }

    fn rref_generic(&self) -> (Matrix, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(sel) = (prow..m.rows).find(|&i| !m.get(i, col).is_zero()) else { continue };
            m.swap_rows(sel, prow);
            let inv = f.inv(m.get(prow, col)).expect("nonzero pivot");
            for j in col..m.cols {
                let v = f.mul(m.get(prow, j), &inv);
                m.set(prow, j, v);
            }
            for i in 0..m.rows {
                if i == prow || m.get(i, col).is_zero() {
                    continue;
                }
                let factor = m.get(i, col).clone();
                for j in col..m.cols {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(prow, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (m, pivots)
    }

    /// Gauss-Jordan on integer rows: `row_i <- p*row_i - a*row_pivot`, then
    /// the row is divided by its content to keep entries small.
    fn rref_fraction_free(&self) -> (Matrix, Vec<usize>) {
        let (r, c) = (self.rows, self.cols);
        let mut rows: Vec<Vec<BigInt>> = (0..r)
            .map(|i| {
                let row = self.row(i);
                let lcm = row
                    .iter()
                    .map(|s| s.as_rational().denom().clone())
                    .fold(BigInt::one(), |acc, d| acc.lcm(&d));
                row.iter()
                    .map(|s| {
                        let q = s.as_rational();
                        q.numer() * (&lcm / q.denom())
                    })
                    .collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..c {
            if prow == r {
                break;
            }
            let sel = (prow..r)
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(sel) = sel else { continue };
            rows.swap(sel, prow);
            let pivot_row = std::mem::take(&mut rows[prow]);
            for (i, row) in rows.iter_mut().enumerate() {
                if i == prow || row[col].is_zero() {
                    continue;
                }
                let g = pivot_row[col].gcd(&row[col]);
                let pm = &pivot_row[col] / &g;
                let am = &row[col] / &g;
                // Earlier pivot columns of this row scale too.
                for (x, pv) in row.iter_mut().zip(&pivot_row) {
                    *x = &pm * &*x - &am * pv;
                }
                remove_content(row);
            }
            rows[prow] = pivot_row;
            remove_content(&mut rows[prow]);
            pivots.push(col);
            prow += 1;
        }
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            let lead = pivots.get(i).map(|&pc| row[pc].clone());
            for v in row {
                let q = match &lead {
                    Some(l) => BigRational::new(v, l.clone()),
                    None => BigRational::from_integer(v),
                };
                data.push(Scalar::Rat(q));
            }
        }
        (Matrix { field: self.field.clone(), rows: r, cols: c, data }, pivots)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    /// Solves `A x = b` exactly.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<AffineSolution>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::Dimension(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let f = &self.field;
        if let Some(bad) = b.iter().find(|s| !f.contains(s)) {
            return Err(LinalgError::MixedFields(f.to_string(), format!("{bad:?}")));
        }
        let mut aug = Matrix::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut particular = vec![f.zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            particular[pc] = red.get(i, self.cols).clone();
        }
        let coeff = red.select_columns(0..self.cols);
        Ok(Some(AffineSolution { particular, kernel: kernel_from_rref(&coeff, &pivots) }))
    }

    fn select_columns(&self, cols: std::ops::Range<usize>) -> Matrix {
        let width = cols.len();
        let mut m = Matrix::zeros(&self.field, self.rows, width);
        for i in 0..self.rows {
            for (jj, j) in cols.clone().enumerate() {
                m.set(i, jj, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        Ok(red.select_columns(n..2 * n))
    }

    pub fn determinant(&self) -> Result<Scalar, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let f = self.field.clone();
        let mut m = self.clone();
        let mut det = f.one();
        for col in 0..m.cols {
            let Some(sel) = (col..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                return Ok(f.zero());
            };
            if sel != col {
                m.swap_rows(sel, col);
                det = f.neg(&det);
            }
            let piv = m.get(col, col).clone();
            det = f.mul(&det, &piv);
            let inv = f.inv(&piv).expect("nonzero pivot");
            for i in col + 1..m.rows {
                if m.get(i, col).is_zero() {
                    continue;
                }
                let factor = f.mul(m.get(i, col), &inv);
                for j in col..m.cols {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(col, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn pow(&self, mut exp: u64) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.rows);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols))
            .fold(self.field.zero(), |acc, i| self.field.add(&acc, self.get(i, i)))
    }
}

fn remove_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

fn kernel_from_rref(r: &Matrix, pivots: &[usize]) -> Vec<Vec<Scalar>> {
    let f = r.field();
    let mut is_pivot = vec![false; r.cols()];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..r.cols())
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut v = vec![f.zero(); r.cols()];
            v[free] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            v
        })
        .collect()
}

/// Solves `A x = b` where `b` is a single-column matrix.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<Option<AffineSolution>, LinalgError> {
    if b.cols() != 1 {
        return Err(LinalgError::Dimension(format!("right-hand side has {} columns", b.cols())));
    }
    if a.field() != b.field() {
        return Err(LinalgError::MixedFields(a.field().to_string(), b.field().to_string()));
    }
    a.solve(&b.column(0))
}

/// `sum_k coeffs[k] * vectors[k]`.
pub fn linear_combination(field: &Field, coeffs: &[Scalar], vectors: &[Vec<Scalar>], len: usize) -> Vec<Scalar> {
    let mut out = vec![field.zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        axpy(field, c, v, &mut out);
    }
    out
}

/// `y += c * x`.
pub fn axpy(field: &Field, c: &Scalar, x: &[Scalar], y: &mut [Scalar]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = field.add(yi, &field.mul(c, xi));
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|s| self.field.format(s)).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn solve_identity() {
        let f = q();
        let a = Matrix::identity(&f, 2);
        let b = Matrix::from_i64(&f, &[&[3], &[5]]);
        let sol = solve_linear(&a, &b).unwrap().unwrap();
        assert_eq!(sol.particular, vec![f.from_i64(3), f.from_i64(5)]);
        assert!(sol.kernel.is_empty());
    }

    #[test]
    fn solve_zero_system() {
        let f = q();
        let a = Matrix::zeros(&f, 2, 2);
        let sol = a.solve(&[f.zero(), f.zero()]).unwrap().unwrap();
        assert_eq!(sol.particular, vec![f.zero(), f.zero()]);
        assert_eq!(sol.kernel, vec![vec![f.one(), f.zero()], vec![f.zero(), f.one()]]);
    }

    #[test]
    fn solve_rank_one() {
        // x + y = 1 twice: hand elimination gives (1, 0) + t(-1, 1).
        let f = q();
        let a = Matrix::from_i64(&f, &[&[1, 1], &[1, 1]]);
        let sol = a.solve(&[f.one(), f.one()]).unwrap().unwrap();
        assert_eq!(sol.particular, vec![f.one(), f.zero()]);
        assert_eq!(sol.kernel, vec![vec![f.from_i64(-1), f.one()]]);
        assert!(a.solve(&[f.one(), f.zero()]).unwrap().is_none());
    }

    #[test]
    fn solve_rejects_bad_shapes() {
        let f = q();
        let a = Matrix::identity(&f, 2);
        assert!(matches!(a.solve(&[f.one()]), Err(LinalgError::Dimension(_))));
        let g = Field::prime(3).unwrap();
        let b = Matrix::from_i64(&g, &[&[1], &[1]]);
        assert!(matches!(solve_linear(&a, &b), Err(LinalgError::MixedFields(..))));
    }

    #[test]
    fn fraction_free_matches_generic() {
        let f = q();
        let a = Matrix::from_rows(
            &f,
            vec![
                vec![f.parse("1/2").unwrap(), f.from_i64(3), f.from_i64(-1)],
                vec![f.from_i64(2), f.parse("-4/3").unwrap(), f.from_i64(5)],
                vec![f.parse("5/2").unwrap(), f.parse("5/3").unwrap(), f.from_i64(4)],
            ],
        )
        .unwrap();
        let (r1, p1) = a.rref();
        let (r2, p2) = a.rref_generic();
        assert_eq!(p1, p2);
        assert_eq!(r1, r2);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn inverse_and_determinant() {
        let f = Field::prime(7).unwrap();
        let a = Matrix::from_i64(&f, &[&[2, 1], &[1, 3]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(&f, 2));
        assert_eq!(a.determinant().unwrap(), f.from_i64(5));
        assert!(Matrix::from_i64(&f, &[&[1, 2], &[2, 4]]).inverse().is_err());
    }
}
