use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::{Felt, FieldCtx};
use crate::plt::{companion, CompanionKind, SkewMatrix};
use crate::poly::OrePoly;

/// Largest `n` and `q` searched without `force`.
const MAX_SEARCH_N: usize = 4;
const MAX_SEARCH_Q: u32 = 9;

/// Outcome of [`check_equivalence`], one flag per condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub monomial: bool,
    pub invertible: bool,
    /// `C_{f1}B = σ(B)C_{f2} + δ(B)`.
    pub intertwines: bool,
}

impl EquivalenceReport {
    pub fn holds(&self) -> bool {
        self.monomial && self.invertible && self.intertwines
    }
}

fn intertwines(c1: &SkewMatrix, c2: &SkewMatrix, b: &SkewMatrix) -> Result<bool> {
    let lhs = c1.mul(b)?;
    let rhs = b.map_sigma().mul(c2)?.add(&b.map_delta())?;
    Ok(lhs == rhs)
}

fn same_degree(f1: &OrePoly, f2: &OrePoly) -> Result<usize> {
    f1.ctx().check_same(f2.ctx())?;
    let (n1, n2) = (f1.degree().unwrap_or(0), f2.degree().unwrap_or(0));
    if n1 != n2 {
        return Err(Error::DimensionMismatch {
            expected: n1,
            found: n2,
        });
    }
    Ok(n1)
}

/// Checks that `v ↦ vB` carries right codes of `S/Sf1` onto right codes of
/// `S/Sf2` as a Hamming isometry.
pub fn check_equivalence(f1: &OrePoly, f2: &OrePoly, b: &SkewMatrix) -> Result<EquivalenceReport> {
    let n = same_degree(f1, f2)?;
    if b.nrows() != n || b.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.nrows().max(b.ncols()),
        });
    }
    let c1 = companion(f1, CompanionKind::C)?;
    let c2 = companion(f2, CompanionKind::C)?;
    Ok(EquivalenceReport {
        monomial: b.is_monomial(),
        invertible: b.is_invertible(),
        intertwines: intertwines(&c1, &c2, b)?,
    })
}

/// `(q − 1)^n · n!`.
pub fn search_size(n: usize, q: u32) -> u128 {
    let perms: u128 = (1..=n as u128).product();
    ((q - 1) as u128).saturating_pow(n as u32).saturating_mul(perms)
}

/// Monomial matrices: permutations in lexicographic order (identity first),
/// and for each, the unit scalars in index order.
pub fn monomial_candidates(ctx: &FieldCtx, n: usize) -> impl Iterator<Item = SkewMatrix> + '_ {
    let units: Vec<Felt> = ctx.units().collect();
    (0..n).permutations(n).flat_map(move |perm| {
        let units = units.clone();
        (0..n)
            .map(|_| units.clone())
            .multi_cartesian_product()
            .map(move |scalars| {
                let mut m = SkewMatrix::zeros(ctx, n, n).rows().to_vec();
                for (i, (&j, &s)) in perm.iter().zip(&scalars).enumerate() {
                    m[i][j] = s;
                }
                SkewMatrix::new(ctx, m).unwrap()
            })
    })
}

/// First monomial witness `B` in [`monomial_candidates`] order, if any.
///
/// Refuses searches beyond `n ≤ 4, q ≤ 9` unless `force` is set.
pub fn find_equivalence(f1: &OrePoly, f2: &OrePoly, force: bool) -> Result<Option<SkewMatrix>> {
    let n = same_degree(f1, f2)?;
    let ctx = f1.ctx();
    if !force && (n > MAX_SEARCH_N || ctx.order() > MAX_SEARCH_Q) {
        return Err(Error::SearchSpaceTooLarge {
            size: search_size(n, ctx.order()),
            limit: search_size(MAX_SEARCH_N, MAX_SEARCH_Q),
        });
    }
    let c1 = companion(f1, CompanionKind::C)?;
    let c2 = companion(f2, CompanionKind::C)?;
    if n == 0 {
        return Ok(None);
    }
    for b in monomial_candidates(ctx, n) {
        if intertwines(&c1, &c2, &b)? {
            return Ok(Some(b));
        }
    }
    Ok(None)
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

    #[test]
    fn identity_is_a_witness() {
        let c = ctx("gf(4)", 1, 1);
        let f = poly(&c, &[3, 2, 1]);
        let i = SkewMatrix::identity(&c, 2);
        assert!(check_equivalence(&f, &f, &i).unwrap().holds());
        assert_eq!(find_equivalence(&f, &f, false).unwrap(), Some(i));
    }

    #[test]
    fn non_monomial_matrix_is_rejected() {
        // With (Id, 0) and f1 = f2 = x^2 + 1, any polynomial in C_f commutes
        // with C_f; I + C_f is invertible but not monomial.
        let c = ctx("gf(4)", 0, 0);
        let f = poly(&c, &[2, 0, 1]);
        let cf = companion(&f, CompanionKind::C).unwrap();
        let b = SkewMatrix::identity(&c, 2).add(&cf).unwrap();
        let report = check_equivalence(&f, &f, &b).unwrap();
        assert!(report.intertwines && report.invertible);
        assert!(!report.monomial);
        assert!(!report.holds());
    }

    #[test]
    fn incompatible_pair_has_no_witness() {
        let c = ctx("gf(4)", 0, 0);
        // x^2 + x splits into distinct linear factors, x^2 + w does not split
        let f1 = poly(&c, &[0, 1, 1]);
        let f2 = poly(&c, &[2, 0, 1]);
        assert_eq!(find_equivalence(&f1, &f2, false).unwrap(), None);
    }

    #[test]
    fn search_guard() {
        let c = ctx("gf(16)", 0, 0);
        let f = poly(&c, &[1, 0, 1]);
        assert!(matches!(
            find_equivalence(&f, &f, false),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
        assert!(find_equivalence(&f, &f, true).unwrap().is_some());
    }

    #[test]
    fn candidate_order_and_count() {
        let c = ctx("gf(3)", 0, 0);
        let all: Vec<_> = monomial_candidates(&c, 2).collect();
        assert_eq!(all.len() as u128, search_size(2, 3));
        assert_eq!(all[0], SkewMatrix::identity(&c, 2));
        assert!(all.iter().all(SkewMatrix::is_monomial));
    }
}
