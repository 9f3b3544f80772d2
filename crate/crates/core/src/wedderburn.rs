//! Right-root sets, P-independence, Wedderburn polynomials, (σ,δ)-Vandermonde
//! matrices and the Mattson–Solomon transform of simple-root codes.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::{Felt, FieldCtx};
use crate::plt::{companion, CompanionKind, SkewMatrix};
use crate::poly::{min_poly_of_set, norms, OrePoly};

/// `V(g)`: all right roots, in index order.
pub fn roots(g: &OrePoly) -> Vec<Felt> {
    g.right_roots()
}

fn dedup(points: &[Felt]) -> Vec<Felt> {
    points.iter().copied().sorted().dedup().collect()
}

/// No point is a right root of the minimal polynomial of the others.
///
/// Cross-checked against the degree criterion `deg f_X = |X|`.
pub fn is_p_independent(ctx: &FieldCtx, points: &[Felt]) -> bool {
    let set = dedup(points);
    let by_exclusion = (0..set.len()).all(|i| {
        let rest: Vec<Felt> = set.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &a)| a).collect();
        !min_poly_of_set(ctx, &rest).eval(set[i]).is_zero()
    });
    let by_degree = min_poly_of_set(ctx, &set).degree() == Some(set.len());
    debug_assert_eq!(by_exclusion, by_degree, "P-independence criteria disagree on {set:?}");
    by_exclusion
}

/// The lexicographically first P-independent `A ⊆ V(f)` with `f_A = f`, if
/// `f` is a Wedderburn polynomial.
///
/// P-independent subsets of a finite set form a matroid, so the greedy scan
/// over the sorted roots yields the lexicographically first basis.
pub fn is_wedderburn(f: &OrePoly) -> Result<Option<Vec<Felt>>> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let ctx = f.ctx();
    let n = f.degree().unwrap();
    let mut chosen = Vec::with_capacity(n);
    let mut fa = OrePoly::one(ctx);
    for a in roots(f) {
        if chosen.len() == n {
            break;
        }
        if !fa.eval(a).is_zero() {
            chosen.push(a);
            fa = min_poly_of_set(ctx, &chosen);
        }
    }
    Ok((fa == *f).then_some(chosen))
}

/// Lexicographic search over all `deg f`-subsets of `V(f)`; the reference
/// for [`is_wedderburn`].
pub fn is_wedderburn_exhaustive(f: &OrePoly) -> Result<Option<Vec<Felt>>> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let ctx = f.ctx();
    let n = f.degree().unwrap();
    Ok(roots(f)
        .into_iter()
        .combinations(n)
        .find(|a| is_p_independent(ctx, a) && min_poly_of_set(ctx, a) == *f))
}

/// `V[i][j] = N_i(a_j)`.
pub fn vandermonde(ctx: &FieldCtx, points: &[Felt]) -> SkewMatrix {
    let n = points.len();
    let cols: Vec<Vec<Felt>> = points.iter().map(|&a| norms(ctx, a, n)).collect();
    let rows = (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    SkewMatrix::with_cols(ctx, rows, n).expect("entries come from the field")
}

/// Whether `C_f·V = σ(V)·diag(A) + δ(V)`.
pub fn diagonalizes(f: &OrePoly, points: &[Felt]) -> Result<bool> {
    let ctx = f.ctx();
    let cf = companion(f, CompanionKind::C)?;
    if points.len() != cf.nrows() {
        return Err(Error::DimensionMismatch {
            expected: cf.nrows(),
            found: points.len(),
        });
    }
    let v = vandermonde(ctx, points);
    let lhs = cf.mul(&v)?;
    let rhs = v.map_sigma().mul(&SkewMatrix::diag(ctx, points))?.add(&v.map_delta())?;
    Ok(lhs == rhs)
}

/// First `deg f`-subset of the whole field whose Vandermonde matrix is
/// invertible and diagonalizes `C_f`. Exhaustive; for cross-checks only.
pub fn diagonalization_witness(f: &OrePoly) -> Result<Option<Vec<Felt>>> {
    let ctx = f.ctx();
    let n = f.degree().ok_or(Error::NotMonic)?;
    for a in ctx.elements().combinations(n) {
        if vandermonde(ctx, &a).is_invertible() && diagonalizes(f, &a)? {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// A Wedderburn modulus with its points, Vandermonde matrix and inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedderburnData {
    f: OrePoly,
    points: Vec<Felt>,
    v: SkewMatrix,
    v_inv: SkewMatrix,
}

impl WedderburnData {
    /// Validates `f_A = f`, `|A| = deg f`, invertibility of `V` and the
    /// diagonalization identity.
    pub fn new(f: &OrePoly, points: &[Felt]) -> Result<Self> {
        if !f.is_monic() {
            return Err(Error::NotMonic);
        }
        let ctx = f.ctx();
        let n = f.degree().unwrap();
        if points.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: points.len(),
            });
        }
        if min_poly_of_set(ctx, points) != *f {
            return Err(Error::precondition("points are not a P-independent set with minimal polynomial f"));
        }
        let v = vandermonde(ctx, points);
        let v_inv = v.inverse()?;
        if n > 0 && !diagonalizes(f, points)? {
            return Err(Error::precondition("Vandermonde matrix does not diagonalize C_f"));
        }
        Ok(WedderburnData {
            f: f.clone(),
            points: points.to_vec(),
            v,
            v_inv,
        })
    }

    /// Builds the data from the points chosen by [`is_wedderburn`].
    pub fn from_modulus(f: &OrePoly) -> Result<Option<Self>> {
        match is_wedderburn(f)? {
            Some(a) => Self::new(f, &a).map(Some),
            None => Ok(None),
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.f.ctx()
    }

    pub fn modulus(&self) -> &OrePoly {
        &self.f
    }

    pub fn points(&self) -> &[Felt] {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn vandermonde(&self) -> &SkewMatrix {
        &self.v
    }

    pub fn vandermonde_inverse(&self) -> &SkewMatrix {
        &self.v_inv
    }

    pub fn diagonal(&self) -> SkewMatrix {
        SkewMatrix::diag(self.ctx(), &self.points)
    }

    fn check_len(&self, p: &OrePoly) -> Result<()> {
        self.ctx().check_same(p.ctx())?;
        let len = p.coeffs().len();
        if len > self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: len,
            });
        }
        Ok(())
    }

    /// `MS(g) = Σ g(a_i) x^i`. Defined for every `g`; for `deg g < n` it
    /// equals the row vector `g·V`.
    pub fn ms_transform(&self, g: &OrePoly) -> Result<OrePoly> {
        self.ctx().check_same(g.ctx())?;
        Ok(OrePoly::new(self.ctx(), self.points.iter().map(|&a| g.eval(a)).collect()))
    }

    /// `h·V⁻¹`, the inverse of the transform on `deg h < n`.
    pub fn ms_inverse(&self, h: &OrePoly) -> Result<OrePoly> {
        self.check_len(h)?;
        let v = self.v_inv.vec_mul(&h.to_vector(self.n()))?;
        Ok(OrePoly::new(self.ctx(), v))
    }

    /// The module action `g(T)(Σ b_i x^i) = Σ g(T_{a_i})(b_i) x^i`.
    pub fn module_action(&self, g: &OrePoly, b: &OrePoly) -> Result<OrePoly> {
        self.check_len(b)?;
        self.ctx().check_same(g.ctx())?;
        let coeffs = self
            .points
            .iter()
            .enumerate()
            .map(|(i, &a)| g.eval_plt_scalar(a, b.coeff(i)))
            .collect();
        Ok(OrePoly::new(self.ctx(), coeffs))
    }
}

/// Coefficientwise product `Σ b_i c_i x^i`.
pub fn star_product(u: &OrePoly, v: &OrePoly) -> Result<OrePoly> {
    u.ctx().check_same(v.ctx())?;
    let ctx = u.ctx();
    let len = u.coeffs().len().min(v.coeffs().len());
    Ok(OrePoly::new(
        ctx,
        (0..len).map(|i| ctx.mul(u.coeff(i), v.coeff(i))).collect(),
    ))
}
