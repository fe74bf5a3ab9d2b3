//! Dense matrices over a [`Field`], with exact elimination.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::skew::SkewRing;

/// Largest accepted row or column count.
pub const MAX_DIM: usize = 4096;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<u32> = self.row(i).iter().map(|c| c.0).collect();
            write!(f, "\n  {row:?}")?;
        }
        Ok(())
    }
}

fn check_dims(rows: usize, cols: usize) -> Result<()> {
    if rows > MAX_DIM || cols > MAX_DIM {
        Err(Error::MatrixTooLarge { rows, cols })
    } else {
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Result<Matrix> {
        check_dims(rows, cols)?;
        Ok(Matrix { field: field.clone(), rows, cols, data: vec![Fe::ZERO; rows * cols] })
    }

    pub fn identity(field: &Field, n: usize) -> Result<Matrix> {
        let mut m = Matrix::zeros(field, n, n)?;
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        Ok(m)
    }

    /// Builds a matrix from rows; an empty list gives a `0 × cols` matrix.
    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<Fe>>) -> Result<Matrix> {
        check_dims(rows.len(), cols)?;
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            for &x in row {
                field.element(x.0)?;
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(field: &Field, diag: &[Fe]) -> Result<Matrix> {
        let mut m = Matrix::zeros(field, diag.len(), diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        Ok(m)
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Fe>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix { field: self.field.clone(), rows: self.cols, cols: self.rows, data: vec![Fe::ZERO; self.data.len()] };
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols)?;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    /// `M·v^T` for a single vector.
    pub fn apply(&self, v: &[Fe]) -> Result<Vec<Fe>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} against {} columns", v.len(), self.cols)));
        }
        let f = &self.field;
        Ok((0..self.rows).map(|i| f.sum(self.row(i).iter().zip(v).map(|(&a, &b)| f.mul(a, b)))).collect())
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::Dimension(format!("cannot stack {} and {} columns", self.cols, other.cols)));
        }
        check_dims(self.rows + other.rows, self.cols)?;
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Block `(i, j)` of the result is `A[i][j]·B`; the first factor indexes slowest.
    pub fn kronecker(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        let (rows, cols) = (self.rows * other.rows, self.cols * other.cols);
        let f = &self.field;
        let mut out = Matrix::zeros(f, rows, cols)?;
        for ia in 0..self.rows {
            for ja in 0..self.cols {
                let a = self.get(ia, ja);
                if a.is_zero() {
                    continue;
                }
                for ib in 0..other.rows {
                    for jb in 0..other.cols {
                        out.set(ia * other.rows + ib, ja * other.cols + jb, f.mul(a, other.get(ib, jb)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `θ^i` applied to every entry.
    pub fn frobenius_entrywise(&self, i: i64) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.frobenius_power(x, i)).collect(),
        }
    }

    /// `M·diag(d)`.
    pub fn scale_columns(&self, d: &[Fe]) -> Result<Matrix> {
        if d.len() != self.cols {
            return Err(Error::Dimension(format!("{} column scalars for {} columns", d.len(), self.cols)));
        }
        let f = &self.field;
        let mut out = self.clone();
        for i in 0..self.rows {
            for (j, &s) in d.iter().enumerate() {
                let idx = i * self.cols + j;
                out.data[idx] = f.mul(out.data[idx], s);
            }
        }
        Ok(out)
    }

    /// First `k` rows.
    pub fn top_rows(&self, k: usize) -> Matrix {
        let k = k.min(self.rows);
        Matrix { field: self.field.clone(), rows: k, cols: self.cols, data: self.data[..k * self.cols].to_vec() }
    }

    /// Reduced row echelon form and pivot columns. Zero rows are kept at the bottom.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != rank {
                for j in 0..cols {
                    m.data.swap(p * cols + j, rank * cols + j);
                }
            }
            let inv = f.inv(m.get(rank, c));
            for j in c..cols {
                let idx = rank * cols + j;
                m.data[idx] = f.mul(m.data[idx], inv);
            }
            let pivot_row: Vec<Fe> = m.row(rank).to_vec();
            for i in 0..m.rows {
                if i == rank {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for (j, &pv) in pivot_row.iter().enumerate().skip(c) {
                    let idx = i * cols + j;
                    m.data[idx] = f.sub(m.data[idx], f.mul(factor, pv));
                }
            }
            pivots.push(c);
            rank += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// RREF with zero rows removed: a canonical basis of the row space.
    pub fn row_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        r.top_rows(pivots.len())
    }

    /// Basis (as rows) of `{c : M·c^T = 0}`.
    pub fn kernel_basis(&self) -> Matrix {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix { field: f.clone(), rows: free.len(), cols: self.cols, data: vec![Fe::ZERO; free.len() * self.cols] };
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, Fe::ONE);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(k, pc, f.neg(r.get(i, fc)));
            }
        }
        out
    }

    /// Whether two matrices span the same row space.
    pub fn row_space_equal(&self, other: &Matrix) -> Result<bool> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::Dimension(format!("{} vs {} columns", self.cols, other.cols)));
        }
        Ok(self.row_basis() == other.row_basis())
    }

    /// Text form: a `rows cols` header then one line of element integers per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| x.0.to_string()).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    pub fn from_text(field: &Field, text: &str) -> Result<Matrix> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("missing matrix header".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad matrix header {header:?}"))))
            .collect::<Result<_>>()?;
        let [rows, cols] = dims[..] else {
            return Err(Error::Parse(format!("bad matrix header {header:?}")));
        };
        let mut data = Vec::new();
        for (i, line) in lines.enumerate() {
            let row: Vec<Fe> = line
                .split_whitespace()
                .map(|x| x.parse::<u32>().map(Fe).map_err(|_| Error::Parse(format!("bad entry {x:?} in row {i}"))))
                .collect::<Result<_>>()?;
            data.push(row);
        }
        if data.len() != rows {
            return Err(Error::Parse(format!("expected {rows} rows, found {}", data.len())));
        }
        Matrix::from_rows(field, cols, data)
    }
}

/// `V_θ(S)` with `rows` rows: entry `(i, j)` is `N_i(s_j)`.
pub fn skew_vandermonde(ring: &SkewRing, points: &[Fe], rows: usize) -> Result<Matrix> {
    let f = ring.field();
    let mut m = Matrix::zeros(f, rows, points.len())?;
    for (j, &s) in points.iter().enumerate() {
        let mut norm = Fe::ONE;
        for i in 0..rows {
            m.set(i, j, norm);
            norm = f.mul(ring.theta_pow(s, i as i64), norm);
        }
    }
    Ok(m)
}
