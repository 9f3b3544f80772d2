//! Dense Gaussian elimination over a [`GaloisField`].
//!
//! Matrices are plain row lists; vectors are rows. The same routines serve
//! GF(q) and, through [`GaloisField::prime_field`], the GF(p)-linearized
//! systems that semilinear problems reduce to.

use crate::field::{Felt, GaloisField};

/// Reduced row echelon form with the pivot column of each row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Vec<Vec<Felt>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after eliminating against the echelon rows; zero iff
    /// `v` lies in the row space.
    pub fn reduce(&self, field: &GaloisField, v: &[Felt]) -> Vec<Felt> {
        let mut out = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = out[piv];
            if !c.is_zero() {
                axpy(field, &mut out, field.neg(c), row);
            }
        }
        out
    }

    pub fn contains(&self, field: &GaloisField, v: &[Felt]) -> bool {
        self.reduce(field, v).iter().all(|c| c.is_zero())
    }

    /// Coordinates of `v` in terms of the echelon rows, if `v` is in the span.
    pub fn coordinates(&self, field: &GaloisField, v: &[Felt]) -> Option<Vec<Felt>> {
        let coords: Vec<Felt> = self.pivots.iter().map(|&p| v[p]).collect();
        let recon = combine(field, &coords, &self.rows, self.ncols);
        (recon == v).then_some(coords)
    }
}

/// `acc += c · row`.
pub fn axpy(field: &GaloisField, acc: &mut [Felt], c: Felt, row: &[Felt]) {
    if c.is_zero() {
        return;
    }
    for (a, &r) in acc.iter_mut().zip(row) {
        *a = field.add(*a, field.mul(c, r));
    }
}

/// `Σ coeffs[i] · rows[i]`.
pub fn combine(field: &GaloisField, coeffs: &[Felt], rows: &[Vec<Felt>], ncols: usize) -> Vec<Felt> {
    let mut out = vec![Felt::ZERO; ncols];
    for (&c, row) in coeffs.iter().zip(rows) {
        axpy(field, &mut out, c, row);
    }
    out
}

pub fn rref(field: &GaloisField, rows: &[Vec<Felt>], ncols: usize) -> Echelon {
    let mut m: Vec<Vec<Felt>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(found) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, found);
        let inv = field.inv(m[r][col]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul(inv, *x);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let c = field.neg(row[col]);
                axpy(field, row, c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    Echelon {
        rows: m,
        pivots,
        ncols,
    }
}

pub fn rank(field: &GaloisField, rows: &[Vec<Felt>], ncols: usize) -> usize {
    rref(field, rows, ncols).rank()
}

/// Basis of `{x : A xᵗ = 0}` where `A` has the given rows.
pub fn kernel(field: &GaloisField, rows: &[Vec<Felt>], ncols: usize) -> Vec<Vec<Felt>> {
    let ech = rref(field, rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![Felt::ZERO; ncols];
            x[free] = Felt::ONE;
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                x[p] = field.neg(row[free]);
            }
            x
        })
        .collect()
}

/// Basis of `{y : y A = 0}`.
pub fn left_kernel(field: &GaloisField, rows: &[Vec<Felt>], ncols: usize) -> Vec<Vec<Felt>> {
    kernel(field, &transpose(rows, ncols), rows.len())
}

pub fn transpose(rows: &[Vec<Felt>], ncols: usize) -> Vec<Vec<Felt>> {
    (0..ncols)
        .map(|j| rows.iter().map(|r| r[j]).collect())
        .collect()
}

/// Solves `A x = b`; free variables are set to zero, so the leftmost columns
/// are preferred.
pub fn solve(field: &GaloisField, rows: &[Vec<Felt>], ncols: usize, rhs: &[Felt]) -> Option<Vec<Felt>> {
    let augmented: Vec<Vec<Felt>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut r = r.clone();
            r.push(b);
            r
        })
        .collect();
    let ech = rref(field, &augmented, ncols + 1);
    if ech.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Felt::ZERO; ncols];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        x[p] = row[ncols];
    }
    Some(x)
}

pub fn inverse(field: &GaloisField, rows: &[Vec<Felt>]) -> Option<Vec<Vec<Felt>>> {
    let n = rows.len();
    let augmented: Vec<Vec<Felt>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { Felt::ONE } else { Felt::ZERO }));
            r
        })
        .collect();
    let ech = rref(field, &augmented, 2 * n);
    if ech.rank() < n || ech.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(ech.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(field: &GaloisField, a: &[Vec<Felt>], b: &[Vec<Felt>], ncols: usize) -> Vec<Vec<Felt>> {
    a.iter().map(|row| combine(field, row, b, ncols)).collect()
}
