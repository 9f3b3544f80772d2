//! Idealizer membership, eigenvalue classes of `T_{C_f}`, spectral
//! projections and the direct-sum decomposition of simple-root codes.

use std::collections::BTreeSet;

use crate::codes::{LinearCode, PolycyclicCode};
use crate::error::{Error, Result};
use crate::field::{Felt, FieldCtx};
use crate::linalg;
use crate::plt::{self, eigenvectors, matrix_eval, Eigenspace, Plt};
use crate::poly::{conjugacy_class, OrePoly};
use crate::wedderburn::WedderburnData;

/// Whether `x` lies in the idealizer of `Sf`, i.e. `f·x ∈ Sf`.
///
/// For `deg f > 1` this is decided by `f(C_f) = 0` and cross-checked against
/// the direct reduction; for `deg f ≤ 1` the matrix test is vacuous and only
/// the reduction is used.
pub fn in_idealizer_x(f: &OrePoly) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let direct = (f * &OrePoly::x(f.ctx())).rem(f)?.is_zero();
    if f.degree().unwrap() <= 1 {
        return Ok(direct);
    }
    let cf = plt::companion(f, plt::CompanionKind::C)?;
    let by_matrix = matrix_eval(f, &cf)?.is_zero();
    debug_assert_eq!(by_matrix, direct, "idealizer criteria disagree for {f:?}");
    Ok(by_matrix)
}

/// Representative and its conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenClass {
    pub representative: Felt,
    pub class: BTreeSet<Felt>,
}

/// `Γ = ⋃ Δ(a_i)`, one entry per point of `W`.
pub fn eigenvalue_classes(w: &WedderburnData) -> Result<Vec<EigenClass>> {
    if !in_idealizer_x(w.modulus())? {
        return Err(Error::precondition("x is not in the idealizer of Sf"));
    }
    Ok(w.points()
        .iter()
        .map(|&a| EigenClass {
            representative: a,
            class: conjugacy_class(w.ctx(), a),
        })
        .collect())
}

/// Every `a` with a nonzero solution of `T(v) = a·v`.
pub fn eigenvalues(t: &Plt) -> BTreeSet<Felt> {
    t.ctx().elements().filter(|&a| eigenvectors(t, a).fp_dim > 0).collect()
}

/// The spaces `V_{Γ_i}`, after checking that the representatives lie in
/// pairwise distinct classes and that the spaces form a direct sum.
pub fn eigenspaces(w: &WedderburnData) -> Result<Vec<Eigenspace>> {
    let ctx = w.ctx();
    let points = w.points();
    for (i, &a) in points.iter().enumerate() {
        let class = conjugacy_class(ctx, a);
        if let Some(&b) = points[i + 1..].iter().find(|b| class.contains(b)) {
            return Err(Error::DecompositionHypothesisViolated {
                first: a.index(),
                second: b.index(),
            });
        }
    }
    let t = Plt::companion(w.modulus())?;
    let spaces: Vec<Eigenspace> = points.iter().map(|&a| eigenvectors(&t, a)).collect();
    let n = w.n();
    let stacked: Vec<Vec<Felt>> = spaces.iter().flat_map(|s| s.basis.iter().cloned()).collect();
    let dim_sum = stacked.len();
    let rank = linalg::rank(ctx, &stacked, n);
    if dim_sum != n || rank != n {
        return Err(Error::NotDirectSum { dim_sum, rank, n });
    }
    Ok(spaces)
}

/// `h_i = ∏_{j≠i} (x − a_j)`, factors in increasing `j`.
pub fn cofactors(w: &WedderburnData) -> Vec<OrePoly> {
    let ctx = w.ctx();
    (0..w.n())
        .map(|i| {
            w.points()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(OrePoly::one(ctx), |acc, (_, &a)| &acc * &OrePoly::linear(ctx, a))
        })
        .collect()
}

/// Projection of every GF(p)-basis vector onto each space along the others.
fn target_projections(ctx: &FieldCtx, spaces: &[Eigenspace], n: usize) -> Vec<Vec<Vec<Felt>>> {
    let stacked: Vec<Vec<Felt>> = spaces.iter().flat_map(|s| s.basis.iter().cloned()).collect();
    let inv = linalg::inverse(ctx, &stacked).expect("direct sum was certified");
    let basis = plt::fp_basis(ctx, n);
    let mut out = vec![Vec::with_capacity(basis.len()); spaces.len()];
    for b in &basis {
        // coordinates of b in the stacked basis
        let coords = linalg::combine(ctx, b, &inv, n);
        let mut start = 0;
        for (i, s) in spaces.iter().enumerate() {
            let k = s.basis.len();
            out[i].push(linalg::combine(ctx, &coords[start..start + k], &s.basis, n));
            start += k;
        }
    }
    out
}

/// Polynomials `p_i = h_i·g_i` with `Σ p_i = 1` and `p_i(T_{C_f})` equal to
/// the projection onto `V_{Γ_i}`.
///
/// Both conditions are additive in the coefficients of the `g_i` but not
/// GF(q)-linear, so they are solved together over GF(p). Unknowns are
/// ordered by degree, so low-degree solutions are preferred. The degree
/// bound starts at `n − deg h_i` and grows until a solution appears.
pub fn projections(w: &WedderburnData) -> Result<Vec<OrePoly>> {
    let spaces = eigenspaces(w)?;
    projections_for(w, &spaces)
}

fn projections_for(w: &WedderburnData, spaces: &[Eigenspace]) -> Result<Vec<OrePoly>> {
    let ctx = w.ctx();
    let n = w.n();
    let m = ctx.degree();
    if n == 1 {
        return Ok(vec![OrePoly::one(ctx)]);
    }
    let t = Plt::companion(w.modulus())?;
    let h = cofactors(w);
    let targets = target_projections(ctx, spaces, n);
    let fp_basis = plt::fp_basis(ctx, n);
    let prime = ctx.prime_field();

    for extra in 0..=n * m {
        let bounds: Vec<usize> = h.iter().map(|hi| n - hi.degree().unwrap() + extra).collect();
        let sum_len = n + extra + 1;
        // (degree, component, digit), lowest degree first
        let unknowns: Vec<(usize, usize, usize)> = (0..=n + extra)
            .flat_map(|l| (0..n).flat_map(move |i| (0..m).map(move |d| (l, i, d))))
            .filter(|&(l, i, _)| l <= bounds[i])
            .collect();
        let columns: Vec<Vec<Felt>> = unknowns
            .iter()
            .map(|&(l, i, d)| {
                let c = OrePoly::monomial(ctx, ctx.basis_element(d), l);
                let hc = &h[i] * &c;
                let mut col = plt::to_fp(ctx, &hc.to_vector(sum_len));
                for (k, _) in targets.iter().enumerate() {
                    for b in &fp_basis {
                        let img = if k == i {
                            t.apply_poly(&hc, b).expect("dimension fixed")
                        } else {
                            vec![Felt::ZERO; n]
                        };
                        col.extend(plt::to_fp(ctx, &img));
                    }
                }
                col
            })
            .collect();
        let mut rhs = vec![Felt::ZERO; sum_len];
        rhs[0] = Felt::ONE;
        let mut rhs = plt::to_fp(ctx, &rhs);
        for target in &targets {
            for img in target {
                rhs.extend(plt::to_fp(ctx, img));
            }
        }
        let rows = linalg::transpose(&columns, rhs.len());
        if let Some(sol) = linalg::solve(&prime, &rows, unknowns.len(), &rhs) {
            let mut g = vec![vec![Felt::ZERO; n + extra + 1]; n];
            for (&(l, i, d), &u) in unknowns.iter().zip(&sol) {
                let add = ctx.mul(ctx.from_int(u.index() as u64), ctx.basis_element(d));
                g[i][l] = ctx.add(g[i][l], add);
            }
            return Ok(h
                .iter()
                .zip(g)
                .map(|(hi, gi)| hi * &OrePoly::new(ctx, gi))
                .collect());
        }
    }
    Err(Error::NoBezoutSolution)
}

/// The spectral data of a Wedderburn modulus with `x` in the idealizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub classes: Vec<EigenClass>,
    pub spaces: Vec<Eigenspace>,
    pub projections: Vec<OrePoly>,
    t: Plt,
}

impl Decomposition {
    pub fn new(w: &WedderburnData) -> Result<Self> {
        let classes = eigenvalue_classes(w)?;
        let spaces = eigenspaces(w)?;
        let projections = projections_for(w, &spaces)?;
        Ok(Decomposition {
            classes,
            spaces,
            projections,
            t: Plt::companion(w.modulus())?,
        })
    }

    pub fn plt(&self) -> &Plt {
        &self.t
    }

    /// `E_i(v) = p_i(T_{C_f})(v)`.
    pub fn project(&self, i: usize, v: &[Felt]) -> Result<Vec<Felt>> {
        self.t.apply_poly(&self.projections[i], v)
    }

    pub fn space(&self, i: usize) -> LinearCode {
        LinearCode::span(self.t.ctx(), self.t.dim(), &self.spaces[i].basis).unwrap()
    }

    /// `C ∩ V_{Γ_i}` for every `i`, with the dimension count, invariance and
    /// reconstruction checked.
    pub fn decompose_code(&self, code: &PolycyclicCode) -> Result<Vec<LinearCode>> {
        let c = code.code();
        if !c.is_invariant(self.t.matrix())? {
            return Err(Error::precondition("code is not invariant under the right shift"));
        }
        let components = (0..self.spaces.len())
            .map(|i| c.intersection(&self.space(i)))
            .collect::<Result<Vec<_>>>()?;
        let dim_sum: usize = components.iter().map(LinearCode::dim).sum();
        let rebuilt = components
            .iter()
            .try_fold(LinearCode::zero(c.ctx(), c.len()), |acc, x| acc.sum(x))?;
        if dim_sum != c.dim() || rebuilt != *c {
            return Err(Error::NotDirectSum {
                dim_sum,
                rank: rebuilt.dim(),
                n: c.dim(),
            });
        }
        for comp in &components {
            if !comp.is_invariant(self.t.matrix())? {
                return Err(Error::precondition("component is not invariant under the right shift"));
            }
        }
        Ok(components)
    }
}
