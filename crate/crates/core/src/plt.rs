//! Matrices over GF(q), pseudo-linear maps `T_C(v) = σ(v)C + δ(v)`,
//! companion matrices and semilinear eigenproblems.
//!
//! Vectors are rows and matrices act on the right.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Felt, FieldCtx};
use crate::linalg;
use crate::poly::OrePoly;

/// A dense matrix over the field of a [`FieldCtx`].
#[derive(Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    ctx: FieldCtx,
    ncols: usize,
    rows: Vec<Vec<Felt>>,
}

impl SkewMatrix {
    pub fn new(ctx: &FieldCtx, rows: Vec<Vec<Felt>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        Self::with_cols(ctx, rows, ncols)
    }

    /// Like [`SkewMatrix::new`] but fixes the column count, so a matrix with
    /// no rows still knows its width.
    pub fn with_cols(ctx: &FieldCtx, rows: Vec<Vec<Felt>>, ncols: usize) -> Result<Self> {
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    found: r.len(),
                });
            }
            if let Some(&bad) = r.iter().find(|&&a| !ctx.contains(a)) {
                return Err(Error::InvalidElement {
                    index: bad.index() as u64,
                    q: ctx.order(),
                });
            }
        }
        Ok(SkewMatrix {
            ctx: ctx.clone(),
            ncols,
            rows,
        })
    }

    pub fn from_indices(ctx: &FieldCtx, rows: &[Vec<u64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&i| ctx.elem(i)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(ctx, rows)
    }

    pub fn zeros(ctx: &FieldCtx, nrows: usize, ncols: usize) -> Self {
        SkewMatrix {
            ctx: ctx.clone(),
            ncols,
            rows: vec![vec![Felt::ZERO; ncols]; nrows],
        }
    }

    pub fn identity(ctx: &FieldCtx, n: usize) -> Self {
        Self::diag(ctx, &vec![Felt::ONE; n])
    }

    /// Ones on the anti-diagonal.
    pub fn anti_identity(ctx: &FieldCtx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.rows[i][n - 1 - i] = Felt::ONE;
        }
        m
    }

    pub fn diag(ctx: &FieldCtx, entries: &[Felt]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(ctx, n, n);
        for (i, &a) in entries.iter().enumerate() {
            m.rows[i][i] = a;
        }
        m
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> Felt {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Felt>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Felt] {
        &self.rows[i]
    }

    pub fn to_indices(&self) -> Vec<Vec<u32>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|a| a.index()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|a| a.is_zero())
    }

    pub fn transpose(&self) -> Self {
        SkewMatrix {
            ctx: self.ctx.clone(),
            ncols: self.nrows(),
            rows: linalg::transpose(&self.rows, self.ncols),
        }
    }

    /// Entrywise image under a coefficient map.
    pub fn map(&self, f: impl Fn(Felt) -> Felt) -> Self {
        SkewMatrix {
            ctx: self.ctx.clone(),
            ncols: self.ncols,
            rows: self.rows.iter().map(|r| r.iter().map(|&a| f(a)).collect()).collect(),
        }
    }

    pub fn map_sigma(&self) -> Self {
        self.map(|a| self.ctx.sigma(a))
    }

    pub fn map_delta(&self) -> Self {
        self.map(|a| self.ctx.delta(a))
    }

    pub fn scale(&self, c: Felt) -> Self {
        self.map(|a| self.ctx.mul(c, a))
    }

    pub fn mul(&self, other: &SkewMatrix) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        if self.ncols != other.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.ncols,
                found: other.nrows(),
            });
        }
        Ok(SkewMatrix {
            ctx: self.ctx.clone(),
            ncols: other.ncols,
            rows: linalg::mat_mul(&self.ctx, &self.rows, &other.rows, other.ncols),
        })
    }

    pub fn add(&self, other: &SkewMatrix) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        if self.nrows() != other.nrows() || self.ncols != other.ncols {
            return Err(Error::DimensionMismatch {
                expected: self.nrows() * self.ncols,
                found: other.nrows() * other.ncols,
            });
        }
        let f = &self.ctx;
        Ok(SkewMatrix {
            ctx: self.ctx.clone(),
            ncols: self.ncols,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect())
                .collect(),
        })
    }

    /// The row vector `v·M`.
    pub fn vec_mul(&self, v: &[Felt]) -> Result<Vec<Felt>> {
        if v.len() != self.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.nrows(),
                found: v.len(),
            });
        }
        Ok(linalg::combine(&self.ctx, v, &self.rows, self.ncols))
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.ctx, &self.rows, self.ncols)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.nrows(),
                found: self.ncols,
            });
        }
        if self.nrows() == 0 {
            return Ok(self.clone());
        }
        let rows = linalg::inverse(&self.ctx, &self.rows).ok_or(Error::SingularMatrix)?;
        Ok(SkewMatrix {
            ctx: self.ctx.clone(),
            ncols: self.ncols,
            rows,
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.nrows()
    }

    /// Exactly one nonzero entry in every row and every column.
    pub fn is_monomial(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.nrows();
        let mut col_seen = vec![false; n];
        for r in &self.rows {
            let nz: Vec<usize> = (0..n).filter(|&j| !r[j].is_zero()).collect();
            if nz.len() != 1 || col_seen[nz[0]] {
                return false;
            }
            col_seen[nz[0]] = true;
        }
        true
    }
}

impl fmt::Debug for SkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewMatrix{:?}", self.to_indices())
    }
}

/// The pseudo-linear map `T_C(v) = σ(v)C + δ(v)` on `GF(q)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plt {
    matrix: SkewMatrix,
}

impl Plt {
    pub fn new(matrix: SkewMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.nrows(),
                found: matrix.ncols(),
            });
        }
        Ok(Plt { matrix })
    }

    /// `T_{C_f}`.
    pub fn companion(f: &OrePoly) -> Result<Self> {
        Self::new(companion(f, CompanionKind::C)?)
    }

    pub fn matrix(&self) -> &SkewMatrix {
        &self.matrix
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.matrix.ctx
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn apply(&self, v: &[Felt]) -> Result<Vec<Felt>> {
        let ctx = self.ctx();
        let sv: Vec<Felt> = v.iter().map(|&a| ctx.sigma(a)).collect();
        let mut out = self.matrix.vec_mul(&sv)?;
        for (o, &a) in out.iter_mut().zip(v) {
            *o = ctx.add(*o, ctx.delta(a));
        }
        Ok(out)
    }

    /// `g(T)(v) = Σ g_i T^i(v)`.
    pub fn apply_poly(&self, g: &OrePoly, v: &[Felt]) -> Result<Vec<Felt>> {
        self.ctx().check_same(g.ctx())?;
        let ctx = self.ctx();
        let mut cur = v.to_vec();
        let mut acc = vec![Felt::ZERO; v.len()];
        for (i, &c) in g.coeffs().iter().enumerate() {
            if i > 0 {
                cur = self.apply(&cur)?;
            }
            linalg::axpy(ctx, &mut acc, c, &cur);
        }
        if g.is_zero() && v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(acc)
    }
}

/// Which companion shape to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompanionKind {
    /// Ones on the super-diagonal, recurrence tuple in the last row.
    C,
    /// Recurrence tuple in the first row, ones on the sub-diagonal.
    E,
}

/// The recurrence tuple `(f_0, …, f_{n−1})` of a monic `f`, read with the
/// convention `f = x^n − Σ f_i x^i`.
///
/// Every companion matrix and shift goes through this routine, so the sign
/// bookkeeping lives in one place.
pub fn recurrence_tuple(f: &OrePoly) -> Result<Vec<Felt>> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.degree().unwrap();
    if n == 0 {
        return Err(Error::precondition("modulus must have degree at least 1"));
    }
    let ctx = f.ctx();
    Ok(f.coeffs()[..n].iter().map(|&c| ctx.neg(c)).collect())
}

/// Inverse of [`recurrence_tuple`].
pub fn poly_from_tuple(ctx: &FieldCtx, tuple: &[Felt]) -> OrePoly {
    let mut coeffs: Vec<Felt> = tuple.iter().map(|&c| ctx.neg(c)).collect();
    coeffs.push(Felt::ONE);
    OrePoly::new(ctx, coeffs)
}

pub fn companion(f: &OrePoly, kind: CompanionKind) -> Result<SkewMatrix> {
    let tuple = recurrence_tuple(f)?;
    let ctx = f.ctx();
    let n = tuple.len();
    let mut m = SkewMatrix::zeros(ctx, n, n);
    match kind {
        CompanionKind::C => {
            for i in 0..n - 1 {
                m.rows[i][i + 1] = Felt::ONE;
            }
            m.rows[n - 1] = tuple;
        }
        CompanionKind::E => {
            m.rows[0] = tuple;
            for i in 1..n {
                m.rows[i][i - 1] = Felt::ONE;
            }
        }
    }
    Ok(m)
}

/// `g(M) = Σ g_i N_i(M)` with `N_0 = I`, `N_{i+1} = σ(N_i)M + δ(N_i)`.
///
/// Row `j` of `g(M)` is `g(T_M)(e_j)`.
pub fn matrix_eval(g: &OrePoly, m: &SkewMatrix) -> Result<SkewMatrix> {
    g.ctx().check_same(m.ctx())?;
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.nrows(),
            found: m.ncols(),
        });
    }
    let n = m.nrows();
    let ctx = m.ctx();
    let mut norm = SkewMatrix::identity(ctx, n);
    let mut acc = SkewMatrix::zeros(ctx, n, n);
    for (i, &c) in g.coeffs().iter().enumerate() {
        if i > 0 {
            norm = norm.map_sigma().mul(m)?.add(&norm.map_delta())?;
        }
        acc = acc.add(&norm.scale(c))?;
    }
    Ok(acc)
}

/// `(σ,δ)`-similarity test `B = σ(P)AP⁻¹ + δ(P)P⁻¹`, checked in the
/// division-free form `BP = σ(P)A + δ(P)`.
pub fn is_similar(a: &SkewMatrix, b: &SkewMatrix, p: &SkewMatrix) -> Result<bool> {
    if !p.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let lhs = b.mul(p)?;
    let rhs = p.map_sigma().mul(a)?.add(&p.map_delta())?;
    Ok(lhs == rhs)
}

/// Coordinates of a vector over the prime field: `m` digits per entry.
pub fn to_fp(ctx: &FieldCtx, v: &[Felt]) -> Vec<Felt> {
    v.iter()
        .flat_map(|&a| ctx.digits(a))
        .map(Felt::from_index_unchecked)
        .collect()
}

pub fn from_fp(ctx: &FieldCtx, digits: &[Felt]) -> Vec<Felt> {
    let raw: Vec<u32> = digits.iter().map(|d| d.index()).collect();
    raw.chunks(ctx.degree())
        .map(|c| ctx.from_digits(c))
        .collect()
}

/// The prime-field basis of `GF(q)^n`: `w^d e_j` at position `j·m + d`.
pub fn fp_basis(ctx: &FieldCtx, n: usize) -> Vec<Vec<Felt>> {
    let m = ctx.degree();
    (0..n * m)
        .map(|k| {
            let mut v = vec![Felt::ZERO; n];
            v[k / m] = ctx.basis_element(k % m);
            v
        })
        .collect()
}

/// Matrix over GF(p) of an additive map `GF(q)^n → GF(q)^k`; row `r` is the
/// image of the `r`-th vector of [`fp_basis`].
pub fn fp_matrix(ctx: &FieldCtx, n: usize, map: impl Fn(&[Felt]) -> Vec<Felt>) -> Vec<Vec<Felt>> {
    fp_basis(ctx, n).iter().map(|b| to_fp(ctx, &map(b))).collect()
}

/// Solutions of `T(v) = a·v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenspace {
    pub value: Felt,
    /// Dimension over GF(p) of the raw (semilinear) solution set.
    pub fp_dim: usize,
    /// Reduced echelon GF(q)-basis of the GF(q)-span of the solutions.
    pub basis: Vec<Vec<Felt>>,
}

impl Eigenspace {
    pub fn raw_size(&self, p: u32) -> u128 {
        (p as u128).pow(self.fp_dim as u32)
    }
}

/// Solves `σ(v)C + δ(v) = a·v` by expanding it into a GF(p)-linear system.
pub fn eigenvectors(t: &Plt, a: Felt) -> Eigenspace {
    let ctx = t.ctx();
    let n = t.dim();
    let prime = ctx.prime_field();
    let rows = fp_matrix(ctx, n, |v| {
        let mut out = t.apply(v).expect("dimension fixed");
        for (o, &x) in out.iter_mut().zip(v) {
            *o = ctx.sub(*o, ctx.mul(a, x));
        }
        out
    });
    let basis = fp_basis(ctx, n);
    let solutions: Vec<Vec<Felt>> = linalg::left_kernel(&prime, &rows, n * ctx.degree())
        .iter()
        .map(|coeffs| {
            let mut v = vec![Felt::ZERO; n];
            for (&c, b) in coeffs.iter().zip(&basis) {
                let c = ctx.from_int(c.index() as u64);
                linalg::axpy(ctx, &mut v, c, b);
            }
            v
        })
        .collect();
    let span = linalg::rref(ctx, &solutions, n);
    Eigenspace {
        value: a,
        fp_dim: solutions.len(),
        basis: span.rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::GaloisField;

    fn ctx(spec: &str, t: u32, beta: u32) -> FieldCtx {
        FieldCtx::new(GaloisField::parse(spec).unwrap(), t, Felt::from_index_unchecked(beta)).unwrap()
    }

    fn poly(c: &FieldCtx, ix: &[u64]) -> OrePoly {
        OrePoly::from_indices(c, ix).unwrap()
    }

    fn mat(c: &FieldCtx, rows: &[&[u64]]) -> SkewMatrix {
        SkewMatrix::from_indices(c, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn felts(ix: &[u32]) -> Vec<Felt> {
        ix.iter().map(|&i| Felt::from_index_unchecked(i)).collect()
    }

    #[test]
    fn apply_examples() {
        let c = ctx("gf(4)", 1, 0);
        let t = Plt::new(SkewMatrix::identity(&c, 2)).unwrap();
        assert_eq!(t.apply(&felts(&[2, 3])).unwrap(), felts(&[3, 2]));
        let t = Plt::companion(&poly(&c, &[1, 0, 1])).unwrap();
        for a in c.elements() {
            let sq = c.mul(a, a);
            assert_eq!(t.apply(&[a, a]).unwrap(), vec![sq, sq]);
        }
        assert_eq!(
            t.apply(&felts(&[1])),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        );
        let c = ctx("gf(4)", 1, 1);
        let w = Felt::from_index_unchecked(2);
        let t = Plt::new(SkewMatrix::diag(&c, &[w])).unwrap();
        for y in c.elements() {
            assert_eq!(t.apply(&[y]).unwrap(), vec![c.add(c.mul(c.sigma(y), w), c.delta(y))]);
        }
    }

    #[test]
    fn companion_examples() {
        let c = ctx("gf(2)", 0, 0);
        let f = poly(&c, &[1, 0, 1]);
        assert_eq!(companion(&f, CompanionKind::C).unwrap(), mat(&c, &[&[0, 1], &[1, 0]]));
        assert_eq!(companion(&f, CompanionKind::E).unwrap(), mat(&c, &[&[1, 0], &[1, 0]]));
        let c = ctx("gf(4)", 1, 0);
        let f = poly(&c, &[0, 1, 1]);
        assert_eq!(companion(&f, CompanionKind::C).unwrap(), mat(&c, &[&[0, 1], &[0, 1]]));
        assert_eq!(companion(&poly(&c, &[0, 2]), CompanionKind::C), Err(Error::NotMonic));
    }

    #[test]
    fn sign_convention_in_odd_characteristic() {
        let c = ctx("gf(3)", 0, 0);
        // x^2 − 2x − 1 = x^2 + x + 2, tuple (1, 2)
        let f = poly(&c, &[2, 1, 1]);
        assert_eq!(recurrence_tuple(&f).unwrap(), felts(&[1, 2]));
        assert_eq!(poly_from_tuple(&c, &felts(&[1, 2])), f);
    }

    #[test]
    fn matrix_eval_examples() {
        let c = ctx("gf(4)", 1, 0);
        let cf = companion(&poly(&c, &[1, 0, 1]), CompanionKind::C).unwrap();
        assert!(matrix_eval(&poly(&c, &[1, 0, 1]), &cf).unwrap().is_zero());
        assert_eq!(matrix_eval(&OrePoly::one(&c), &cf).unwrap(), SkewMatrix::identity(&c, 2));
        // f = x^2 + w: f(C_f) is not zero
        let f = poly(&c, &[2, 0, 1]);
        let cf = companion(&f, CompanionKind::C).unwrap();
        assert_eq!(matrix_eval(&f, &cf).unwrap(), mat(&c, &[&[0, 0], &[0, 1]]));
    }

    #[test]
    fn matrix_eval_rows_match_plt_on_basis() {
        for (t, b) in [(1, 0), (1, 1), (1, 2), (0, 0)] {
            let c = ctx("gf(4)", t, b);
            let m = mat(&c, &[&[1, 2, 0], &[3, 0, 1], &[2, 2, 3]]);
            let plt = Plt::new(m.clone()).unwrap();
            let g = poly(&c, &[3, 1, 0, 2]);
            let gm = matrix_eval(&g, &m).unwrap();
            for j in 0..3 {
                let mut e = vec![Felt::ZERO; 3];
                e[j] = Felt::ONE;
                assert_eq!(plt.apply_poly(&g, &e).unwrap(), gm.row(j));
            }
        }
    }

    #[test]
    fn similarity_examples() {
        let c = ctx("gf(4)", 1, 1);
        let f = poly(&c, &[3, 2, 1]);
        let cf = companion(&f, CompanionKind::C).unwrap();
        let i = SkewMatrix::identity(&c, 2);
        assert!(is_similar(&cf, &cf, &i).unwrap());
        let d = poly_from_tuple(&c, &recurrence_tuple(&f).unwrap().into_iter().rev().collect::<Vec<_>>());
        let ed = companion(&d, CompanionKind::E).unwrap();
        assert!(is_similar(&cf, &ed, &SkewMatrix::anti_identity(&c, 2)).unwrap());
        assert_eq!(
            is_similar(&cf, &cf, &SkewMatrix::zeros(&c, 2, 2)),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn eigenvector_examples() {
        let c = ctx("gf(4)", 0, 0);
        let t = Plt::new(SkewMatrix::diag(&c, &felts(&[1, 2]))).unwrap();
        assert_eq!(eigenvectors(&t, Felt::ONE).basis, vec![felts(&[1, 0])]);

        let c = ctx("gf(4)", 1, 0);
        let t = Plt::companion(&poly(&c, &[0, 1, 1])).unwrap();
        let e0 = eigenvectors(&t, Felt::ZERO);
        assert_eq!(e0.basis, vec![felts(&[1, 1])]);
        assert_eq!(e0.raw_size(2), 4);
        let e1 = eigenvectors(&t, Felt::ONE);
        assert_eq!(e1.basis, vec![felts(&[0, 1])]);
        assert_eq!(e1.raw_size(2), 2);
    }

    #[test]
    fn monomial_detection() {
        let c = ctx("gf(4)", 0, 0);
        assert!(mat(&c, &[&[0, 2], &[3, 0]]).is_monomial());
        assert!(!mat(&c, &[&[1, 1], &[0, 1]]).is_monomial());
        assert!(!mat(&c, &[&[1, 0], &[1, 0]]).is_monomial());
    }

    #[test]
    fn fp_round_trip() {
        let c = ctx("gf(9)", 1, 0);
        for a in c.elements() {
            for b in c.elements() {
                assert_eq!(from_fp(&c, &to_fp(&c, &[a, b])), vec![a, b]);
            }
        }
    }
}
