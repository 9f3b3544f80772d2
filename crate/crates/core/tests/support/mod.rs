//! Shared helpers for the integration tests: small constructors, direct
//! re-implementations of the twisted operations, and a commutative
//! polynomial toolkit over prime fields that shares no code with the crate.
#![allow(dead_code)]

pub mod naive;

use orecodec_core::{Felt, FieldCtx, GaloisField, OrePoly};

pub fn ctx(spec: &str, t: u32, beta: u32) -> FieldCtx {
    FieldCtx::new(GaloisField::parse(spec).unwrap(), t, Felt::from_index_unchecked(beta)).unwrap()
}

pub fn contexts(spec: &str) -> Vec<FieldCtx> {
    FieldCtx::all(GaloisField::parse(spec).unwrap())
}

pub fn poly(c: &FieldCtx, ix: &[u64]) -> OrePoly {
    OrePoly::from_indices(c, ix).unwrap()
}

pub fn felts(ix: &[u32]) -> Vec<Felt> {
    ix.iter().map(|&i| Felt::from_index_unchecked(i)).collect()
}

pub fn label(c: &FieldCtx) -> String {
    format!("{}[{}]", c.spec(), c.context_spec())
}

/// `T_a(b) = σ(b)a + δ(b)`.
pub fn t_scalar(c: &FieldCtx, a: Felt, b: Felt) -> Felt {
    c.add(c.mul(c.sigma(b), a), c.delta(b))
}

/// `Σ g_i N_i(a)` with the norms built from the recursion.
pub fn eval_by_norms(g: &OrePoly, a: Felt) -> Felt {
    let c = g.ctx();
    let mut n = Felt::ONE;
    let mut acc = Felt::ZERO;
    for &gi in g.coeffs() {
        acc = c.add(acc, c.mul(gi, n));
        n = t_scalar(c, a, n);
    }
    acc
}

/// `g(T_a)(b) = Σ g_i T_a^i(b)`.
pub fn apply_scalar_plt(g: &OrePoly, a: Felt, b: Felt) -> Felt {
    let c = g.ctx();
    let mut cur = b;
    let mut acc = Felt::ZERO;
    for &gi in g.coeffs() {
        acc = c.add(acc, c.mul(gi, cur));
        cur = t_scalar(c, a, cur);
    }
    acc
}

/// `C_f` for monic `f`: ones above the diagonal, `−f_0 … −f_{n−1}` in the
/// last row.
pub fn companion_rows(f: &OrePoly) -> Vec<Vec<Felt>> {
    let c = f.ctx();
    let n = f.degree().unwrap();
    let mut m = vec![vec![Felt::ZERO; n]; n];
    for (i, row) in m.iter_mut().enumerate().take(n - 1) {
        row[i + 1] = Felt::ONE;
    }
    for (j, x) in m[n - 1].iter_mut().enumerate() {
        *x = c.neg(f.coeff(j));
    }
    m
}

pub fn transpose(m: &[Vec<Felt>]) -> Vec<Vec<Felt>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

/// Row vector times matrix.
pub fn vec_mat(c: &FieldCtx, v: &[Felt], m: &[Vec<Felt>]) -> Vec<Felt> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| v.iter().zip(m).fold(Felt::ZERO, |acc, (&vi, row)| c.add(acc, c.mul(vi, row[j]))))
        .collect()
}

/// `T_M(v) = σ(v)M + δ(v)`.
pub fn t_matrix(c: &FieldCtx, m: &[Vec<Felt>], v: &[Felt]) -> Vec<Felt> {
    let sv: Vec<Felt> = v.iter().map(|&a| c.sigma(a)).collect();
    vec_mat(c, &sv, m)
        .into_iter()
        .zip(v)
        .map(|(x, &a)| c.add(x, c.delta(a)))
        .collect()
}

/// Every element of the span of `rows`, by brute force over coefficient
/// tuples.
pub fn span_set(c: &FieldCtx, n: usize, rows: &[Vec<Felt>]) -> std::collections::BTreeSet<Vec<Felt>> {
    let mut out = std::collections::BTreeSet::new();
    let k = rows.len();
    let q = c.order() as u64;
    let total = q.pow(k as u32);
    for mut idx in 0..total {
        let mut v = vec![Felt::ZERO; n];
        for row in rows {
            let a = c.elem(idx % q).unwrap();
            idx /= q;
            for (x, &r) in v.iter_mut().zip(row) {
                *x = c.add(*x, c.mul(a, r));
            }
        }
        out.insert(v);
    }
    out
}

/// All vectors of length `n`, as an owned list.
pub fn vectors(c: &FieldCtx, n: usize) -> Vec<Vec<Felt>> {
    let q = c.order() as u64;
    (0..q.pow(n as u32))
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let a = c.elem(idx % q).unwrap();
                    idx /= q;
                    a
                })
                .collect()
        })
        .collect()
}

pub fn weight(v: &[Felt]) -> usize {
    v.iter().filter(|a| !a.is_zero()).count()
}

/// Weight distribution of a brute-forced set of words.
pub fn weight_counts<'a>(words: impl IntoIterator<Item = &'a Vec<Felt>>) -> std::collections::BTreeMap<usize, u64> {
    let mut out = std::collections::BTreeMap::new();
    for w in words {
        *out.entry(weight(w)).or_insert(0) += 1;
    }
    out
}
