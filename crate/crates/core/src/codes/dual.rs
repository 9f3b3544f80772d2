use crate::error::{Error, Result};
use crate::field::{Felt, FieldCtx};
use crate::plt::{self, recurrence_tuple};
use crate::poly::OrePoly;

use super::{span_of_fp_solutions, LinearCode, PolycyclicCode, Side};

/// Euclidean dual under the standard inner product.
pub fn euclidean_dual(code: &PolycyclicCode) -> LinearCode {
    code.code().dual()
}

/// The context `(σ⁻¹, −σ⁻¹∘δ)` in which Euclidean duals become sequential.
///
/// For `δ = β(σ − id)` one has `−σ⁻¹(β(σ(a) − a)) = σ⁻¹(β)(σ⁻¹(a) − a)`, so
/// the new inner derivation has `β′ = σ⁻¹(β)`.
pub fn dual_context(ctx: &FieldCtx) -> FieldCtx {
    ctx.with_twist(ctx.sigma_inverse_power(), ctx.sigma_inv(ctx.beta()))
        .expect("σ⁻¹ power and σ⁻¹(β) are always valid")
}

/// Lists which of the hypotheses `f_0 ≠ 0`, `σ(f_i) = f_i`, `δ(f_i) = 0`
/// fail for a monic `f`. Empty means they all hold.
pub fn lemma_hypotheses(f: &OrePoly) -> Result<Vec<String>> {
    let t = recurrence_tuple(f)?;
    let ctx = f.ctx();
    let mut failures = Vec::new();
    if t[0].is_zero() {
        failures.push("f_0 is not invertible".to_string());
    }
    for (i, &c) in t.iter().enumerate() {
        if ctx.sigma(c) != c {
            failures.push(format!("sigma(f_{i}) != f_{i}"));
        }
        if !ctx.delta(c).is_zero() {
            failures.push(format!("delta(f_{i}) != 0"));
        }
    }
    Ok(failures)
}

fn require_hypotheses(f: &OrePoly) -> Result<()> {
    let failures = lemma_hypotheses(f)?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(failures))
    }
}

/// `k` with `x·k ≡ 1 (mod f)`:
/// `k = Σ_{i ≤ n−2} −f_0⁻¹ f_{i+1} x^i + f_0⁻¹ x^{n−1}`.
pub fn x_right_inverse(f: &OrePoly) -> Result<OrePoly> {
    require_hypotheses(f)?;
    let t = recurrence_tuple(f)?;
    let ctx = f.ctx();
    let n = t.len();
    let inv0 = ctx.inv(t[0])?;
    let mut coeffs: Vec<Felt> = (0..n - 1).map(|i| ctx.neg(ctx.mul(inv0, t[i + 1]))).collect();
    coeffs.push(inv0);
    Ok(OrePoly::new(ctx, coeffs))
}

/// `⟨g, h⟩₀`: the constant coefficient of `g·h mod f`.
pub fn form0(g: &OrePoly, h: &OrePoly, f: &OrePoly) -> Result<Felt> {
    Ok(g.skew_mul(h)?.rem(f)?.coeff(0))
}

fn as_poly(ctx: &FieldCtx, v: &[Felt]) -> OrePoly {
    OrePoly::new(ctx, v.to_vec())
}

/// Left kernel of the map `h ↦ (h·c mod f)` for every `c` of a GF(p)-basis
/// of the code, keeping the coordinates selected by `keep`.
///
/// `h ↦ h·c` is GF(q)-linear in `h` but only additive in `c`, hence the
/// GF(p)-basis on the `c` side.
fn left_system(code: &LinearCode, f: &OrePoly, keep: usize) -> Result<LinearCode> {
    let ctx = f.ctx();
    let n = code.len();
    let fp = code.fp_basis();
    let mut rows = vec![Vec::with_capacity(fp.len() * keep); n];
    for c in &fp {
        let mut xi_c = as_poly(ctx, c);
        for (i, row) in rows.iter_mut().enumerate() {
            if i > 0 {
                xi_c = xi_c.x_times();
            }
            let r = xi_c.rem(f)?.to_vector(n);
            row.extend_from_slice(&r[..keep]);
        }
    }
    let width = fp.len() * keep;
    let k = crate::linalg::left_kernel(ctx, &rows, width);
    LinearCode::span(ctx, n, &k)
}

/// `Ann_l(C) = {h : h·c ≡ 0 (mod f) for all c ∈ C}`. Needs no hypotheses on
/// `f`.
pub fn left_annihilator(code: &LinearCode, f: &OrePoly) -> Result<LinearCode> {
    left_system(code, f, code.len())
}

/// `l₀(C) = {h : ⟨h, c⟩₀ = 0 for all c ∈ C}`.
pub fn l0_dual(code: &LinearCode, f: &OrePoly) -> Result<LinearCode> {
    left_system(code, f, 1)
}

/// Solutions of an additive system in `h`, rejected unless they form a
/// GF(q)-subspace.
fn right_system(code: &LinearCode, f: &OrePoly, keep: usize, what: &str) -> Result<LinearCode> {
    let ctx = f.ctx();
    let n = code.len();
    let gens: Vec<OrePoly> = code.basis().iter().map(|c| as_poly(ctx, c)).collect();
    let rows = plt::fp_matrix(ctx, n, |h| {
        let h = as_poly(ctx, h);
        gens.iter()
            .flat_map(|c| {
                let r = c.skew_mul(&h).and_then(|p| p.rem(f)).expect("same context");
                r.to_vector(n)[..keep].to_vec()
            })
            .collect()
    });
    if rows.first().is_some_and(Vec::is_empty) {
        return Ok(LinearCode::full(ctx, n));
    }
    let (fp_dim, span) = span_of_fp_solutions(ctx, n, &rows);
    if fp_dim != span.dim() * ctx.degree() {
        return Err(Error::precondition(format!("{what} is not a GF(q)-subspace")));
    }
    Ok(span)
}

/// `Ann_r(C) = {h : c·h ≡ 0 (mod f) for all c ∈ C}`.
pub fn right_annihilator(code: &LinearCode, f: &OrePoly) -> Result<LinearCode> {
    right_system(code, f, code.len(), "right annihilator")
}

/// `r₀(C) = {h : ⟨c, h⟩₀ = 0 for all c ∈ C}`.
pub fn r0_dual(code: &LinearCode, f: &OrePoly) -> Result<LinearCode> {
    right_system(code, f, 1, "right annihilator dual")
}

/// `l₀(C)` (side `Left`) or `r₀(C)` (side `Right`) under the hypotheses of
/// [`lemma_hypotheses`].
pub fn annihilator_dual(code: &PolycyclicCode, side: Side) -> Result<LinearCode> {
    let f = code.modulus();
    require_hypotheses(f)?;
    match side {
        Side::Left => l0_dual(code.code(), f),
        Side::Right => r0_dual(code.code(), f),
    }
}
