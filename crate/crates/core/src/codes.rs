//! Linear codes over `F_{q^t}` or its subfield `F_{q^r}`.

use rayon::prelude::*;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::linalg::Matrix;

/// Default cap on the number of nonzero codewords enumerated by [`LinearCode::min_distance`].
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// Which level of the tower the code's alphabet is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// `F_{q^t}`.
    Extension,
    /// `F_{q^r}`.
    Subfield,
}

impl Alphabet {
    pub fn tag(self) -> &'static str {
        match self {
            Alphabet::Extension => "qt",
            Alphabet::Subfield => "qr",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Alphabet> {
        match tag {
            "qt" => Some(Alphabet::Extension),
            "qr" => Some(Alphabet::Subfield),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DistanceError {
    #[error("minimum distance is undefined for the zero code")]
    ZeroCode,
    #[error("{count} nonzero codewords exceed the enumeration budget {budget}")]
    BudgetExceeded { count: u128, budget: u64 },
}

/// A linear code stored by its canonical generator: RREF with zero rows dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    alphabet: Alphabet,
    gen: Matrix,
}

impl LinearCode {
    /// Row space of `gen`. Subfield codes must have every entry in `F_{q^r}`.
    pub fn from_generator(alphabet: Alphabet, gen: &Matrix) -> Result<LinearCode> {
        let f = gen.field();
        if alphabet == Alphabet::Subfield {
            for i in 0..gen.rows() {
                if let Some(&x) = gen.row(i).iter().find(|&&x| !f.is_in_subfield(x)) {
                    return Err(Error::Dimension(format!("entry {x} of row {i} is outside the subfield")));
                }
            }
        }
        Ok(LinearCode { alphabet, gen: gen.row_basis() })
    }

    /// `{c : H·c^T = 0}` over the given alphabet. For the subfield alphabet each
    /// parity row is expanded over the fixed `F_{q^r}`-basis of `F_{q^t}`.
    pub fn from_parity_check(alphabet: Alphabet, h: &Matrix) -> Result<LinearCode> {
        let gen = match alphabet {
            Alphabet::Extension => h.kernel_basis(),
            Alphabet::Subfield => expand_parity(h)?.kernel_basis(),
        };
        Ok(LinearCode { alphabet, gen: gen.row_basis() })
    }

    pub fn full(field: &Field, alphabet: Alphabet, n: usize) -> Result<LinearCode> {
        Ok(LinearCode { alphabet, gen: Matrix::identity(field, n)? })
    }

    pub fn zero(field: &Field, alphabet: Alphabet, n: usize) -> Result<LinearCode> {
        Ok(LinearCode { alphabet, gen: Matrix::zeros(field, 0, n)? })
    }

    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn length(&self) -> usize {
        self.gen.cols()
    }

    pub fn dimension(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    /// Generator of the dual code.
    pub fn parity_check(&self) -> Matrix {
        self.gen.kernel_basis()
    }

    /// Alphabet elements, ascending.
    pub fn alphabet_elements(&self) -> Vec<Fe> {
        match self.alphabet {
            Alphabet::Extension => self.field().elements().collect(),
            Alphabet::Subfield => self.field().subfield_elements(),
        }
    }

    /// Orthogonal complement under the standard bilinear form.
    pub fn dual(&self) -> LinearCode {
        LinearCode { alphabet: self.alphabet, gen: self.gen.kernel_basis().row_basis() }
    }

    pub fn contains(&self, c: &[Fe]) -> bool {
        if c.len() != self.length() {
            return false;
        }
        let f = self.field();
        if self.alphabet == Alphabet::Subfield && c.iter().any(|&x| !f.is_in_subfield(x)) {
            return false;
        }
        let row = Matrix::from_rows(f, c.len(), vec![c.to_vec()]).expect("length checked");
        self.gen.vstack(&row).map(|m| m.rank() == self.dimension()).unwrap_or(false)
    }

    fn require(&self, alphabet: Alphabet) -> Result<()> {
        if self.alphabet == alphabet {
            Ok(())
        } else {
            Err(Error::Dimension(format!("operation needs a {} code, got {}", alphabet.tag(), self.alphabet.tag())))
        }
    }

    fn compatible(&self, other: &LinearCode) -> Result<()> {
        if self.field() != other.field() || self.alphabet != other.alphabet {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// `C ∩ F_{q^r}^n`.
    pub fn subfield_subcode(&self) -> Result<LinearCode> {
        self.require(Alphabet::Extension)?;
        LinearCode::from_parity_check(Alphabet::Subfield, &self.parity_check())
    }

    /// `Tr(C)`, spanned by `Tr(α·g)` over an `F_{q^r}`-basis `α` and generator rows `g`.
    pub fn trace_code(&self) -> Result<LinearCode> {
        self.require(Alphabet::Extension)?;
        let f = self.field();
        let mut rows = Vec::new();
        for i in 0..self.dimension() {
            for &alpha in f.subfield_basis().elements() {
                rows.push(self.gen.row(i).iter().map(|&x| f.trace(f.mul(alpha, x))).collect());
            }
        }
        let m = Matrix::from_rows(f, self.length(), rows)?;
        LinearCode::from_generator(Alphabet::Subfield, &m)
    }

    /// Generator is the Kronecker product of the generators.
    pub fn tensor_product(&self, other: &LinearCode) -> Result<LinearCode> {
        self.compatible(other)?;
        Ok(LinearCode { alphabet: self.alphabet, gen: self.gen.kronecker(&other.gen)?.row_basis() })
    }

    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.compatible(other)?;
        Ok(LinearCode { alphabet: self.alphabet, gen: self.gen.vstack(&other.gen)?.row_basis() })
    }

    /// `θ^i(C)`, coordinatewise.
    pub fn frobenius(&self, i: i64) -> LinearCode {
        LinearCode { alphabet: self.alphabet, gen: self.gen.frobenius_entrywise(i).row_basis() }
    }

    /// Exact minimum Hamming weight by enumerating all messages whose first
    /// nonzero entry is 1. The budget caps the total count of nonzero codewords.
    pub fn min_distance(&self, budget: u64) -> std::result::Result<usize, DistanceError> {
        let k = self.dimension();
        if k == 0 {
            return Err(DistanceError::ZeroCode);
        }
        let alpha = self.alphabet_elements();
        let qa = alpha.len() as u128;
        let count = qa.checked_pow(k as u32).map(|c| c - 1).unwrap_or(u128::MAX);
        if count > budget as u128 {
            return Err(DistanceError::BudgetExceeded { count, budget });
        }
        let rows: Vec<Vec<Fe>> = self.gen.row_vecs();
        // (leading position, first tail digit) partitions the projective messages
        let mut tasks = Vec::new();
        for lead in 0..k {
            if lead + 1 < k {
                for d in 0..alpha.len() {
                    tasks.push((lead, Some(d)));
                }
            } else {
                tasks.push((lead, None));
            }
        }
        let f = self.field();
        let best = tasks.par_iter().map(|&(lead, first)| enumerate_min(f, &rows, &alpha, lead, first)).min();
        Ok(best.expect("at least one task"))
    }

    /// `qt`/`qr` header line followed by the generator in matrix text form.
    pub fn to_text(&self) -> String {
        format!("{}\n{}", self.alphabet.tag(), self.gen.to_text())
    }

    pub fn from_text(field: &Field, text: &str) -> Result<LinearCode> {
        let text = text.trim_start();
        let (tag, rest) = text.split_once('\n').ok_or_else(|| Error::Parse("missing alphabet header".into()))?;
        let alphabet =
            Alphabet::from_tag(tag.trim()).ok_or_else(|| Error::Parse(format!("unknown alphabet tag {:?}", tag.trim())))?;
        LinearCode::from_generator(alphabet, &Matrix::from_text(field, rest)?)
    }
}

/// Minimum weight over messages `(0, …, 0, 1, m_{lead+1}, …)`, optionally with
/// `m_{lead+1}` pinned to `alpha[first]`.
fn enumerate_min(f: &Field, rows: &[Vec<Fe>], alpha: &[Fe], lead: usize, first: Option<usize>) -> usize {
    let mut cw = rows[lead].clone();
    let mut free_start = lead + 1;
    if let Some(d) = first {
        axpy(f, &mut cw, alpha[d], &rows[lead + 1]);
        free_start = lead + 2;
    }
    let free = &rows[free_start..];
    let mut digits = vec![0usize; free.len()];
    let mut best = weight(&cw);
    loop {
        // increment the last digit, carrying leftwards
        let mut pos = free.len();
        loop {
            if pos == 0 {
                return best;
            }
            pos -= 1;
            let old = alpha[digits[pos]];
            digits[pos] += 1;
            if digits[pos] == alpha.len() {
                digits[pos] = 0;
                axpy(f, &mut cw, f.neg(old), &free[pos]);
                continue;
            }
            let diff = f.sub(alpha[digits[pos]], old);
            axpy(f, &mut cw, diff, &free[pos]);
            break;
        }
        best = best.min(weight(&cw));
        if best <= 1 {
            return best;
        }
    }
}

#[inline]
fn axpy(f: &Field, y: &mut [Fe], a: Fe, x: &[Fe]) {
    if a.is_zero() {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = f.add(*yi, f.mul(a, xi));
    }
}

fn weight(c: &[Fe]) -> usize {
    c.iter().filter(|x| !x.is_zero()).count()
}

/// Expands each row of `h` over the `F_{q^r}`-basis, giving `(t/r)·rows` rows
/// over `F_{q^r}` with the same subfield kernel.
fn expand_parity(h: &Matrix) -> Result<Matrix> {
    let f = h.field();
    let m = (f.t() / f.r()) as usize;
    let mut rows = Vec::with_capacity(h.rows() * m);
    for i in 0..h.rows() {
        let coords: Vec<Vec<Fe>> = h.row(i).iter().map(|&x| f.expand_over_subfield(x)).collect();
        for a in 0..m {
            rows.push(coords.iter().map(|c| c[a]).collect());
        }
    }
    Matrix::from_rows(f, h.cols(), rows)
}

/// `(C|_{F_{q^r}})^⊥ = Tr(C^⊥)` as subfield codes.
pub fn delsarte_check(c: &LinearCode) -> Result<bool> {
    let left = c.subfield_subcode()?.dual();
    let right = c.dual().trace_code()?;
    Ok(left == right)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f8() -> Field {
        Field::new(2, 1, 3, 1, Some(vec![1, 1, 0, 1])).unwrap()
    }

    fn code(f: &Field, alphabet: Alphabet, rows: &[&[u32]]) -> LinearCode {
        let cols = rows[0].len();
        let m = Matrix::from_rows(f, cols, rows.iter().map(|r| r.iter().map(|&x| Fe(x)).collect()).collect()).unwrap();
        LinearCode::from_generator(alphabet, &m).unwrap()
    }

    #[test]
    fn parity_check_examples() {
        let f = f8();
        let id = Matrix::identity(&f, 4).unwrap();
        assert_eq!(LinearCode::from_parity_check(Alphabet::Extension, &id).unwrap().dimension(), 0);
        let z = Matrix::zeros(&f, 1, 4).unwrap();
        let full = LinearCode::from_parity_check(Alphabet::Extension, &z).unwrap();
        assert_eq!(full, LinearCode::full(&f, Alphabet::Extension, 4).unwrap());
        let c = code(&f, Alphabet::Extension, &[&[1, 2, 3, 4], &[0, 5, 6, 7]]);
        assert_eq!(LinearCode::from_parity_check(Alphabet::Extension, &c.parity_check()).unwrap(), c);
    }

    #[test]
    fn dual_examples() {
        let f = f8();
        assert_eq!(LinearCode::full(&f, Alphabet::Extension, 3).unwrap().dual().dimension(), 0);
        let rep = code(&f, Alphabet::Subfield, &[&[1, 1, 1]]);
        let even = code(&f, Alphabet::Subfield, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(rep.dual(), even);
        assert_eq!(rep.dual().dual(), rep);
    }

    #[test]
    fn distance_examples() {
        let f = f8();
        let rep = code(&f, Alphabet::Subfield, &[&[1, 1, 1, 1, 1]]);
        assert_eq!(rep.min_distance(DEFAULT_BUDGET), Ok(5));
        assert_eq!(LinearCode::full(&f, Alphabet::Extension, 3).unwrap().min_distance(DEFAULT_BUDGET), Ok(1));
        assert_eq!(LinearCode::zero(&f, Alphabet::Extension, 3).unwrap().min_distance(DEFAULT_BUDGET), Err(DistanceError::ZeroCode));
        assert_eq!(
            LinearCode::full(&f, Alphabet::Extension, 3).unwrap().min_distance(10),
            Err(DistanceError::BudgetExceeded { count: 511, budget: 10 })
        );
    }

    #[test]
    fn subfield_and_trace_trivial_cases() {
        let f = f8();
        let full = LinearCode::full(&f, Alphabet::Extension, 4).unwrap();
        assert_eq!(full.subfield_subcode().unwrap(), LinearCode::full(&f, Alphabet::Subfield, 4).unwrap());
        let zero = LinearCode::zero(&f, Alphabet::Extension, 4).unwrap();
        assert_eq!(zero.subfield_subcode().unwrap().dimension(), 0);
        assert_eq!(zero.trace_code().unwrap().dimension(), 0);
        assert!(delsarte_check(&full).unwrap());
        assert!(delsarte_check(&zero).unwrap());
    }

    #[test]
    fn trace_is_identity_when_r_equals_t() {
        let f = Field::new(2, 1, 2, 2, None).unwrap();
        let c = code(&f, Alphabet::Extension, &[&[1, 2, 3], &[0, 1, 1]]);
        let tr = c.trace_code().unwrap();
        assert_eq!(tr.generator(), c.generator());
    }

    #[test]
    fn text_round_trip() {
        let f = f8();
        let c = code(&f, Alphabet::Extension, &[&[1, 2, 3, 4]]);
        let text = c.to_text();
        assert!(text.starts_with("qt\n1 4\n"));
        assert_eq!(LinearCode::from_text(&f, &text).unwrap(), c);
    }
}
