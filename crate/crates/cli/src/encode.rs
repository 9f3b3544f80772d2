//! Index-list encodings shared by arguments and JSON output, so any emitted
//! polynomial, vector or matrix can be passed back in as an argument.

use orecodec_core::{Error, Felt, FieldCtx, LinearCode, OrePoly, Result, SkewMatrix};

pub fn parse_poly(ctx: &FieldCtx, s: &str) -> Result<OrePoly> {
    OrePoly::parse(ctx, s)
}

pub fn parse_elem(ctx: &FieldCtx, s: &str) -> Result<Felt> {
    let k: u64 = s.trim().parse().map_err(|_| Error::Parse(format!("bad element {s:?}")))?;
    ctx.elem(k)
}

pub fn parse_vec(ctx: &FieldCtx, s: &str) -> Result<Vec<Felt>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_elem(ctx, t))
        .collect()
}

pub fn parse_rows(ctx: &FieldCtx, s: &str) -> Result<Vec<Vec<Felt>>> {
    s.split(';')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| parse_vec(ctx, r))
        .collect()
}

pub fn parse_matrix(ctx: &FieldCtx, s: &str) -> Result<SkewMatrix> {
    SkewMatrix::new(ctx, parse_rows(ctx, s)?)
}

pub fn parse_code(ctx: &FieldCtx, n: usize, s: &str) -> Result<LinearCode> {
    LinearCode::span(ctx, n, &parse_rows(ctx, s)?)
}

/// `0` for the zero polynomial.
pub fn poly(p: &OrePoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    vec(p.coeffs())
}

pub fn vec(v: &[Felt]) -> String {
    v.iter().map(|a| a.index().to_string()).collect::<Vec<_>>().join(",")
}

pub fn rows(rows: &[Vec<Felt>]) -> String {
    rows.iter().map(|r| vec(r)).collect::<Vec<_>>().join(";")
}

pub fn indices(v: impl IntoIterator<Item = Felt>) -> Vec<u32> {
    v.into_iter().map(Felt::index).collect()
}
