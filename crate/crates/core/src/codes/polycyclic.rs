use crate::error::{Error, Result};
use crate::field::{Felt, FieldCtx};
use crate::plt::{companion, poly_from_tuple, recurrence_tuple, CompanionKind, SkewMatrix};
use crate::poly::OrePoly;

use super::LinearCode;

/// Right codes are `T_{C_f}`-invariant, left codes `T_{E_f}`-invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

/// Which transposed companion defines a left sequential code.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SequentialVariant {
    /// `E_f^t`, consistent with the left sequential shift.
    #[default]
    Standard,
    /// `E_d^t` with `d` the reversed modulus.
    Reversed,
}

/// A (σ,δ)-polycyclic code with modulus `f` and monic generator `g`.
///
/// For a right code `g` right-divides `f` and the generator rows are
/// `x^i·g`. A left code with modulus `f` is the coordinate reversal of the
/// right code of `d = reversed_modulus(f)` generated by `g`, so there `g`
/// right-divides `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolycyclicCode {
    f: OrePoly,
    g: OrePoly,
    side: Side,
    code: LinearCode,
}

impl PolycyclicCode {
    pub fn from_generator(f: &OrePoly, g: &OrePoly, side: Side) -> Result<Self> {
        f.ctx().check_same(g.ctx())?;
        if !f.is_monic() || !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let n = f.degree().unwrap();
        if n == 0 {
            return Err(Error::precondition("modulus must have degree at least 1"));
        }
        let target = match side {
            Side::Right => f.clone(),
            Side::Left => reversed_modulus(f)?,
        };
        if !g.right_divides(&target)? {
            return Err(Error::NotRightDivisor);
        }
        let k = n - g.degree().unwrap();
        let mut rows = Vec::with_capacity(k);
        let mut cur = g.clone();
        for i in 0..k {
            if i > 0 {
                cur = cur.x_times();
            }
            let mut v = cur.to_vector(n);
            if side == Side::Left {
                v.reverse();
            }
            rows.push(v);
        }
        let code = LinearCode::span(f.ctx(), n, &rows)?;
        debug_assert_eq!(code.dim(), k);
        Ok(PolycyclicCode {
            f: f.clone(),
            g: g.clone(),
            side,
            code,
        })
    }

    /// Imports an invariant subspace and recovers its canonical generator,
    /// the monic element of least degree.
    pub fn from_subspace(f: &OrePoly, code: &LinearCode, side: Side) -> Result<Self> {
        let m = shift_matrix(f, side)?;
        if code.len() != m.nrows() {
            return Err(Error::DimensionMismatch {
                expected: m.nrows(),
                found: code.len(),
            });
        }
        if !code.is_invariant(&m)? {
            return Err(Error::precondition(format!(
                "subspace is not invariant under the {} shift",
                match side {
                    Side::Right => "right",
                    Side::Left => "left",
                }
            )));
        }
        let ctx = f.ctx();
        let n = code.len();
        if code.dim() == 0 {
            let modulus = match side {
                Side::Right => f.clone(),
                Side::Left => reversed_modulus(f)?,
            };
            return Self::from_generator(f, &modulus, side);
        }
        // Coordinates as polynomial coefficients, highest degree first, so
        // the last echelon row is the monic element of least degree.
        let rows: Vec<Vec<Felt>> = code
            .basis()
            .iter()
            .map(|r| {
                let mut r = r.clone();
                if side == Side::Right {
                    r.reverse();
                }
                r
            })
            .collect();
        let ech = crate::linalg::rref(ctx, &rows, n);
        let mut low = ech.rows.last().unwrap().clone();
        low.reverse();
        let g = OrePoly::new(ctx, low);
        let built = Self::from_generator(f, &g, side)?;
        if built.code != *code {
            return Err(Error::precondition("subspace is not generated by a single polynomial"));
        }
        Ok(built)
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.f.ctx()
    }

    pub fn modulus(&self) -> &OrePoly {
        &self.f
    }

    pub fn generator(&self) -> &OrePoly {
        &self.g
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn len(&self) -> usize {
        self.code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.code.dim()
    }

    pub fn contains(&self, v: &[Felt]) -> bool {
        self.code.contains(v)
    }

    /// `C_f` or `E_f`, depending on the side.
    pub fn shift_matrix(&self) -> SkewMatrix {
        shift_matrix(&self.f, self.side).expect("validated at construction")
    }
}

fn shift_matrix(f: &OrePoly, side: Side) -> Result<SkewMatrix> {
    companion(
        f,
        match side {
            Side::Right => CompanionKind::C,
            Side::Left => CompanionKind::E,
        },
    )
}

/// The modulus `d` whose recurrence tuple is that of `f` reversed.
pub fn reversed_modulus(f: &OrePoly) -> Result<OrePoly> {
    let mut t = recurrence_tuple(f)?;
    t.reverse();
    Ok(poly_from_tuple(f.ctx(), &t))
}

fn check_len(v: &[Felt], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    Ok(())
}

fn add_delta(ctx: &FieldCtx, out: &mut [Felt], v: &[Felt]) {
    for (o, &a) in out.iter_mut().zip(v) {
        *o = ctx.add(*o, ctx.delta(a));
    }
}

/// `(0, σ(g_0), …, σ(g_{n−2})) + σ(g_{n−1})·(f_0, …, f_{n−1}) + δ(g)`.
pub fn right_shift(f: &OrePoly, v: &[Felt]) -> Result<Vec<Felt>> {
    let t = recurrence_tuple(f)?;
    let n = t.len();
    check_len(v, n)?;
    let ctx = f.ctx();
    let top = ctx.sigma(v[n - 1]);
    let mut out: Vec<Felt> = (0..n)
        .map(|i| {
            let carry = if i == 0 { Felt::ZERO } else { ctx.sigma(v[i - 1]) };
            ctx.add(carry, ctx.mul(top, t[i]))
        })
        .collect();
    add_delta(ctx, &mut out, v);
    Ok(out)
}

/// `(σ(g_1), …, σ(g_{n−1}), 0) + σ(g_0)·(f_0, …, f_{n−1}) + δ(g)`.
pub fn left_shift(f: &OrePoly, v: &[Felt]) -> Result<Vec<Felt>> {
    let t = recurrence_tuple(f)?;
    let n = t.len();
    check_len(v, n)?;
    let ctx = f.ctx();
    let low = ctx.sigma(v[0]);
    let mut out: Vec<Felt> = (0..n)
        .map(|i| {
            let carry = if i + 1 < n { ctx.sigma(v[i + 1]) } else { Felt::ZERO };
            ctx.add(carry, ctx.mul(low, t[i]))
        })
        .collect();
    add_delta(ctx, &mut out, v);
    Ok(out)
}

fn feedback(ctx: &FieldCtx, t: &[Felt], v: &[Felt]) -> Felt {
    t.iter()
        .zip(v)
        .fold(Felt::ZERO, |acc, (&fi, &gi)| ctx.add(acc, ctx.mul(ctx.sigma(gi), fi)))
}

/// `T_{C_f^t}`: `(σ(g_1), …, σ(g_{n−1}), Σ σ(g_i) f_i) + δ(g)`.
pub fn right_sequential_shift(f: &OrePoly, v: &[Felt]) -> Result<Vec<Felt>> {
    let t = recurrence_tuple(f)?;
    let n = t.len();
    check_len(v, n)?;
    let ctx = f.ctx();
    let mut out: Vec<Felt> = v[1..].iter().map(|&a| ctx.sigma(a)).collect();
    out.push(feedback(ctx, &t, v));
    add_delta(ctx, &mut out, v);
    Ok(out)
}

/// `T_{E_f^t}`: `(Σ σ(g_i) f_i, σ(g_0), …, σ(g_{n−2})) + δ(g)`.
pub fn left_sequential_shift(f: &OrePoly, v: &[Felt]) -> Result<Vec<Felt>> {
    let t = recurrence_tuple(f)?;
    let n = t.len();
    check_len(v, n)?;
    let ctx = f.ctx();
    let mut out = vec![feedback(ctx, &t, v)];
    out.extend(v[..n - 1].iter().map(|&a| ctx.sigma(a)));
    add_delta(ctx, &mut out, v);
    Ok(out)
}

/// Whether `code` is sequential for the modulus `f`: invariant under
/// `T_{C_f^t}` (right) or the chosen left variant.
pub fn is_sequential(code: &LinearCode, f: &OrePoly, side: Side, variant: SequentialVariant) -> Result<bool> {
    let m = match (side, variant) {
        (Side::Right, _) => companion(f, CompanionKind::C)?,
        (Side::Left, SequentialVariant::Standard) => companion(f, CompanionKind::E)?,
        (Side::Left, SequentialVariant::Reversed) => companion(&reversed_modulus(f)?, CompanionKind::E)?,
    };
    code.is_invariant(&m.transpose())
}
