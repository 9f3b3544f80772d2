//! Linear codes over GF(q) and the (σ,δ)-polycyclic codes of `S/Sf`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Felt, FieldCtx};
use crate::linalg;
use crate::plt::{self, Plt, SkewMatrix};

mod dual;
mod equiv;
mod polycyclic;

pub use dual::{
    annihilator_dual, dual_context, euclidean_dual, form0, left_annihilator, l0_dual, lemma_hypotheses,
    r0_dual, right_annihilator, x_right_inverse,
};
pub use equiv::{check_equivalence, find_equivalence, monomial_candidates, search_size, EquivalenceReport};
pub use polycyclic::{
    is_sequential, left_sequential_shift, left_shift, reversed_modulus, right_sequential_shift, right_shift,
    PolycyclicCode, SequentialVariant, Side,
};

/// Default cap on the number of codewords any enumeration will visit.
pub const DEFAULT_ENUM_LIMIT: u128 = 1 << 24;

/// A GF(q)-subspace of `GF(q)^n`, kept as a reduced echelon basis so that
/// equal codes compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    ctx: FieldCtx,
    n: usize,
    basis: Vec<Vec<Felt>>,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// The span of `rows`.
    pub fn span(ctx: &FieldCtx, n: usize, rows: &[Vec<Felt>]) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: r.len(),
            });
        }
        let ech = linalg::rref(ctx, rows, n);
        Ok(LinearCode {
            ctx: ctx.clone(),
            n,
            basis: ech.rows,
            pivots: ech.pivots,
        })
    }

    pub fn zero(ctx: &FieldCtx, n: usize) -> Self {
        Self::span(ctx, n, &[]).unwrap()
    }

    pub fn full(ctx: &FieldCtx, n: usize) -> Self {
        let rows = SkewMatrix::identity(ctx, n).rows().to_vec();
        Self::span(ctx, n, &rows).unwrap()
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduced echelon generator matrix.
    pub fn basis(&self) -> &[Vec<Felt>] {
        &self.basis
    }

    pub fn generator_matrix(&self) -> SkewMatrix {
        SkewMatrix::with_cols(&self.ctx, self.basis.clone(), self.n).unwrap()
    }

    /// `q^k` (saturating).
    pub fn size(&self) -> u128 {
        (self.ctx.order() as u128).saturating_pow(self.dim() as u32)
    }

    fn echelon(&self) -> linalg::Echelon {
        linalg::Echelon {
            rows: self.basis.clone(),
            pivots: self.pivots.clone(),
            ncols: self.n,
        }
    }

    pub fn contains(&self, v: &[Felt]) -> bool {
        v.len() == self.n && self.echelon().contains(&self.ctx, v)
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    /// Euclidean dual `{h : Σ v_i h_i = 0 for all v}`.
    pub fn dual(&self) -> LinearCode {
        let k = linalg::kernel(&self.ctx, &self.basis, self.n);
        Self::span(&self.ctx, self.n, &k).unwrap()
    }

    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.ctx.check_same(&other.ctx)?;
        let rows: Vec<Vec<Felt>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Self::span(&self.ctx, self.n, &rows)
    }

    /// `C₁ ∩ C₂ = (C₁⊥ + C₂⊥)⊥`.
    pub fn intersection(&self, other: &LinearCode) -> Result<LinearCode> {
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// Image under `v ↦ vB`.
    pub fn map_right(&self, b: &SkewMatrix) -> Result<LinearCode> {
        let rows = self
            .basis
            .iter()
            .map(|v| b.vec_mul(v))
            .collect::<Result<Vec<_>>>()?;
        Self::span(&self.ctx, b.ncols(), &rows)
    }

    /// Image under an additive map applied to a GF(p)-basis of the code.
    pub fn map_additive(&self, map: impl Fn(&[Felt]) -> Vec<Felt>) -> Vec<Vec<Felt>> {
        self.fp_basis().iter().map(|v| map(v)).collect()
    }

    /// A GF(p)-basis: `w^d · b` for every basis row `b`.
    pub fn fp_basis(&self) -> Vec<Vec<Felt>> {
        let f = &self.ctx;
        self.basis
            .iter()
            .flat_map(|b| {
                (0..f.degree()).map(move |d| {
                    let w = f.basis_element(d);
                    b.iter().map(|&x| f.mul(w, x)).collect()
                })
            })
            .collect()
    }

    /// Whether `T_M(C) ⊆ C`. `T_M` is additive, so a GF(p)-basis suffices.
    pub fn is_invariant(&self, m: &SkewMatrix) -> Result<bool> {
        let t = Plt::new(m.clone())?;
        if t.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: t.dim(),
            });
        }
        for v in self.fp_basis() {
            if !self.contains(&t.apply(&v)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All codewords, in lexicographic order of their index tuples.
    pub fn codewords(&self, limit: u128) -> Result<Vec<Vec<Felt>>> {
        self.check_limit(limit)?;
        let mut out = Vec::with_capacity(self.size() as usize);
        self.visit(|v| out.push(v.to_vec()));
        out.sort_by(|a, b| a.iter().map(|x| x.index()).cmp(b.iter().map(|x| x.index())));
        Ok(out)
    }

    fn check_limit(&self, limit: u128) -> Result<()> {
        let size = self.size();
        if size > limit {
            return Err(Error::TooLargeToEnumerate { size, limit });
        }
        Ok(())
    }

    /// Depth-first walk over all combinations of basis rows, keeping one
    /// partial sum per level.
    fn visit(&self, mut f: impl FnMut(&[Felt])) {
        let k = self.dim();
        let ctx = &self.ctx;
        let mut partial = vec![vec![Felt::ZERO; self.n]; k + 1];
        fn rec(
            code: &LinearCode,
            ctx: &FieldCtx,
            level: usize,
            partial: &mut Vec<Vec<Felt>>,
            f: &mut dyn FnMut(&[Felt]),
        ) {
            if level == code.basis.len() {
                f(&partial[level]);
                return;
            }
            for c in ctx.elements() {
                let mut next = partial[level].clone();
                linalg::axpy(ctx, &mut next, c, &code.basis[level]);
                partial[level + 1] = next;
                rec(code, ctx, level + 1, partial, f);
            }
        }
        rec(self, ctx, 0, &mut partial, &mut f);
    }

    pub fn to_indices(&self) -> Vec<Vec<u32>> {
        self.basis
            .iter()
            .map(|r| r.iter().map(|a| a.index()).collect())
            .collect()
    }
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LinearCode(n={}, basis={:?})", self.n, self.to_indices())
    }
}

/// Minimum distance and Hamming weight distribution of a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightProfile {
    /// `None` for the zero code.
    pub min: Option<usize>,
    pub dist: BTreeMap<usize, u64>,
}

pub fn hamming_weight(v: &[Felt]) -> usize {
    v.iter().filter(|a| !a.is_zero()).count()
}

pub fn weight_profile(code: &LinearCode, limit: u128) -> Result<WeightProfile> {
    code.check_limit(limit)?;
    let mut dist = BTreeMap::new();
    code.visit(|v| *dist.entry(hamming_weight(v)).or_insert(0u64) += 1);
    let min = dist.keys().copied().find(|&w| w > 0);
    Ok(WeightProfile { min, dist })
}

/// Every GF(q)-subspace of `GF(q)^n` (as codes), by enumerating reduced
/// echelon forms. Only meant for tiny `q^n`.
pub fn all_subspaces(ctx: &FieldCtx, n: usize) -> Vec<LinearCode> {
    let mut out = Vec::new();
    let q = ctx.order() as u64;
    // choose pivot sets, then fill the free entries
    for mask in 0u32..(1 << n) {
        let pivots: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| {
                let pivots = &pivots;
                (p + 1..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        for mut fill in 0..q.pow(free.len() as u32) {
            let mut rows: Vec<Vec<Felt>> = pivots
                .iter()
                .map(|&p| {
                    let mut r = vec![Felt::ZERO; n];
                    r[p] = Felt::ONE;
                    r
                })
                .collect();
            for &(r, c) in &free {
                rows[r][c] = Felt::from_index_unchecked((fill % q) as u32);
                fill /= q;
            }
            out.push(LinearCode::span(ctx, n, &rows).unwrap());
        }
    }
    out
}

/// All vectors of `GF(q)^n` in lexicographic order.
pub fn all_vectors(ctx: &FieldCtx, n: usize) -> impl Iterator<Item = Vec<Felt>> {
    let q = ctx.order() as u64;
    (0..q.pow(n as u32)).map(move |mut idx| {
        let mut v = vec![Felt::ZERO; n];
        for slot in v.iter_mut().rev() {
            *slot = Felt::from_index_unchecked((idx % q) as u32);
            idx /= q;
        }
        v
    })
}

/// Convenience: the code spanned by the images of a GF(p)-linear solve.
pub(crate) fn span_of_fp_solutions(ctx: &FieldCtx, n: usize, rows: &[Vec<Felt>]) -> (usize, LinearCode) {
    let prime = ctx.prime_field();
    let kernel = linalg::left_kernel(&prime, rows, rows.first().map_or(0, Vec::len));
    let basis = plt::fp_basis(ctx, n);
    let vectors: Vec<Vec<Felt>> = kernel
        .iter()
        .map(|coeffs| {
            let mut v = vec![Felt::ZERO; n];
            for (&c, b) in coeffs.iter().zip(&basis) {
                linalg::axpy(ctx, &mut v, ctx.from_int(c.index() as u64), b);
            }
            v
        })
        .collect();
    (kernel.len(), LinearCode::span(ctx, n, &vectors).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::GaloisField;

    fn ctx(spec: &str) -> FieldCtx {
        FieldCtx::classical(GaloisField::parse(spec).unwrap())
    }

    fn felts(ix: &[u32]) -> Vec<Felt> {
        ix.iter().map(|&i| Felt::from_index_unchecked(i)).collect()
    }

    #[test]
    fn weight_examples() {
        let c = ctx("gf(4)");
        let zero = LinearCode::zero(&c, 2);
        let wp = weight_profile(&zero, DEFAULT_ENUM_LIMIT).unwrap();
        assert_eq!(wp.min, None);
        assert_eq!(wp.dist, BTreeMap::from([(0, 1)]));

        let rep = LinearCode::span(&c, 2, &[felts(&[1, 1])]).unwrap();
        let wp = weight_profile(&rep, DEFAULT_ENUM_LIMIT).unwrap();
        assert_eq!(wp.min, Some(2));
        assert_eq!(wp.dist, BTreeMap::from([(0, 1), (2, 3)]));

        let c2 = ctx("gf(2)");
        let wp = weight_profile(&LinearCode::full(&c2, 2), DEFAULT_ENUM_LIMIT).unwrap();
        assert_eq!(wp.min, Some(1));
        assert_eq!(wp.dist, BTreeMap::from([(0, 1), (1, 2), (2, 1)]));

        assert_eq!(
            weight_profile(&LinearCode::full(&c, 3), 10),
            Err(Error::TooLargeToEnumerate { size: 64, limit: 10 })
        );
    }

    #[test]
    fn codewords_are_sorted() {
        let c = ctx("gf(4)");
        let rep = LinearCode::span(&c, 2, &[felts(&[1, 1])]).unwrap();
        let words = rep.codewords(DEFAULT_ENUM_LIMIT).unwrap();
        assert_eq!(
            words,
            vec![felts(&[0, 0]), felts(&[1, 1]), felts(&[2, 2]), felts(&[3, 3])]
        );
    }

    #[test]
    fn dual_and_intersection() {
        let c = ctx("gf(4)");
        let rep = LinearCode::span(&c, 2, &[felts(&[1, 1])]).unwrap();
        assert_eq!(rep.dual(), rep);
        assert_eq!(LinearCode::full(&c, 3).dual(), LinearCode::zero(&c, 3));
        let a = LinearCode::span(&c, 3, &[felts(&[1, 0, 0]), felts(&[0, 1, 0])]).unwrap();
        let b = LinearCode::span(&c, 3, &[felts(&[0, 1, 0]), felts(&[0, 0, 1])]).unwrap();
        assert_eq!(
            a.intersection(&b).unwrap(),
            LinearCode::span(&c, 3, &[felts(&[0, 1, 0])]).unwrap()
        );
    }

    #[test]
    fn subspace_counts() {
        // Gaussian binomials: GF(2)^3 has 1 + 7 + 7 + 1 subspaces, GF(4)^2 has 1 + 5 + 1.
        assert_eq!(all_subspaces(&ctx("gf(2)"), 3).len(), 16);
        assert_eq!(all_subspaces(&ctx("gf(4)"), 2).len(), 7);
    }

    #[test]
    fn vectors_enumerate_lexicographically() {
        let v: Vec<_> = all_vectors(&ctx("gf(3)"), 2).collect();
        assert_eq!(v.len(), 9);
        assert_eq!(v[1], felts(&[0, 1]));
        assert_eq!(v[3], felts(&[1, 0]));
    }
}
