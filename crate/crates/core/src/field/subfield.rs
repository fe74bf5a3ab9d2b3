use super::fp_poly::inv_mod;
use super::{Fe, Field};

/// A fixed `F_{q^d}`-basis of `F_{q^t}` with exact coordinate maps.
///
/// The basis is `{β^0, …, β^{t/d-1}}` with `β` the class of `x`, falling back
/// to a greedy scan over the field when those powers are dependent.
/// Coordinates are computed by solving over `F_p` against the products of the
/// basis with an `F_p`-basis of `F_{q^d}`.
#[derive(Clone, Debug)]
pub struct SubfieldBasis {
    degree: u32,
    basis: Vec<Fe>,
    // F_p-basis of F_{q^d}
    prime_basis: Vec<Fe>,
    // inverse of the F_p matrix whose column (i·sd + a) is digits(prime_basis[a]·basis[i])
    inverse: Vec<Vec<u32>>,
}

impl SubfieldBasis {
    pub(super) fn placeholder() -> Self {
        SubfieldBasis { degree: 0, basis: Vec::new(), prime_basis: Vec::new(), inverse: Vec::new() }
    }

    /// Basis of `F_{q^t}` over `F_{q^d}`; `d` must divide `t`.
    pub fn new(field: &Field, d: u32) -> Self {
        assert!(d > 0 && field.t().is_multiple_of(d), "subfield degree must divide t");
        let p = field.p();
        let dim = field.degree() as usize;
        let sd = (field.s() * d) as usize;
        let rel = (field.t() / d) as usize;

        // γ generates F_{q^d}^*, so 1, γ, …, γ^{sd-1} is an F_p-basis of F_{q^d}
        let n = (field.order() - 1) as u64;
        let gamma = field.pow(field.primitive(), n / (field.q().pow(d) - 1));
        let prime_basis: Vec<Fe> = (0..sd).map(|k| field.pow(gamma, k as u64)).collect();

        let beta = field.generator_x();
        let candidates = (0..rel)
            .map(|k| field.pow(beta, k as u64))
            .chain(field.nonzero_elements());
        let mut echelon = FpEchelon::new(dim, p);
        let mut basis = Vec::with_capacity(rel);
        for e in candidates {
            if basis.len() == rel {
                break;
            }
            let block: Vec<Vec<u32>> = prime_basis.iter().map(|&k| field.digits(field.mul(k, e))).collect();
            let mut trial = echelon.clone();
            if block.iter().all(|col| trial.insert(col)) {
                echelon = trial;
                basis.push(e);
            }
        }
        assert_eq!(basis.len(), rel, "failed to find a subfield basis");

        let mut m = vec![vec![0u32; dim]; dim];
        for (i, &e) in basis.iter().enumerate() {
            for (a, &k) in prime_basis.iter().enumerate() {
                let col = field.digits(field.mul(k, e));
                for (row, &v) in col.iter().enumerate() {
                    m[row][i * sd + a] = v;
                }
            }
        }
        let inverse = invert_mod_p(m, p).expect("basis matrix is invertible");
        SubfieldBasis { degree: d, basis, prime_basis, inverse }
    }

    /// `d`, so that coordinates live in `F_{q^d}`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn elements(&self) -> &[Fe] {
        &self.basis
    }

    pub fn coordinates(&self, field: &Field, a: Fe) -> Vec<Fe> {
        let p = field.p() as u64;
        let y = field.digits(a);
        let x: Vec<u32> = self
            .inverse
            .iter()
            .map(|row| (row.iter().zip(&y).map(|(&m, &v)| m as u64 * v as u64).sum::<u64>() % p) as u32)
            .collect();
        let sd = self.prime_basis.len();
        x.chunks(sd)
            .map(|chunk| field.sum(chunk.iter().zip(&self.prime_basis).map(|(&c, &k)| field.mul(Fe(c), k))))
            .collect()
    }

    pub fn combine(&self, field: &Field, coords: &[Fe]) -> Fe {
        assert_eq!(coords.len(), self.basis.len(), "coordinate vector has wrong length");
        field.sum(coords.iter().zip(&self.basis).map(|(&c, &e)| field.mul(c, e)))
    }

    /// Rank over `F_{q^d}` of a list of elements of `F_{q^t}`.
    pub fn rank_of(&self, field: &Field, elems: &[Fe]) -> usize {
        let mut rows: Vec<Vec<Fe>> = elems.iter().map(|&a| self.coordinates(field, a)).collect();
        let cols = self.basis.len();
        let mut rank = 0;
        for c in 0..cols {
            let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = field.inv(rows[rank][c]);
            let pivot_row: Vec<Fe> = rows[rank].iter().map(|&x| field.mul(x, inv)).collect();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && !row[c].is_zero() {
                    let factor = row[c];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = field.sub(*x, field.mul(factor, y));
                    }
                }
            }
            rows[rank] = pivot_row;
            rank += 1;
        }
        rank
    }
}

/// Incremental row echelon form over F_p, used to grow independent sets.
#[derive(Clone)]
struct FpEchelon {
    p: u32,
    // (pivot column, row normalized to 1 at pivot)
    rows: Vec<(usize, Vec<u32>)>,
    dim: usize,
}

impl FpEchelon {
    fn new(dim: usize, p: u32) -> Self {
        FpEchelon { p, rows: Vec::new(), dim }
    }

    /// Adds `v` if it is independent of the current rows; returns whether it was.
    fn insert(&mut self, v: &[u32]) -> bool {
        let p = self.p;
        let mut v = v.to_vec();
        for (pc, row) in &self.rows {
            let c = v[*pc];
            if c != 0 {
                for j in 0..self.dim {
                    v[j] = (v[j] + p - (c as u64 * row[j] as u64 % p as u64) as u32) % p;
                }
            }
        }
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[pc], p);
        for x in v.iter_mut() {
            *x = (*x as u64 * inv as u64 % p as u64) as u32;
        }
        self.rows.push((pc, v));
        true
    }
}

fn invert_mod_p(mut m: Vec<Vec<u32>>, p: u32) -> Option<Vec<Vec<u32>>> {
    let n = m.len();
    let mut inv: Vec<Vec<u32>> = (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect();
    let pm = |a: u32, b: u32| (a as u64 * b as u64 % p as u64) as u32;
    for c in 0..n {
        let pivot = (c..n).find(|&i| m[i][c] != 0)?;
        m.swap(c, pivot);
        inv.swap(c, pivot);
        let k = inv_mod(m[c][c], p);
        for j in 0..n {
            m[c][j] = pm(m[c][j], k);
            inv[c][j] = pm(inv[c][j], k);
        }
        for i in 0..n {
            if i != c && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..n {
                    m[i][j] = (m[i][j] + p - pm(f, m[c][j])) % p;
                    inv[i][j] = (inv[i][j] + p - pm(f, inv[c][j])) % p;
                }
            }
        }
    }
    Some(inv)
}
