//! The Ore extension S = GF(q)[x; σ, δ].
//!
//! Polynomials carry their coefficients on the left, `Σ g_i x^i`, and the
//! product is driven by the commutation rule `x·a = σ(a)x + δ(a)` applied one
//! power of `x` at a time.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Felt, FieldCtx};

/// A skew polynomial `Σ coeffs[i] x^i` with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct OrePoly {
    ctx: FieldCtx,
    coeffs: Vec<Felt>,
}

impl OrePoly {
    pub fn new(ctx: &FieldCtx, mut coeffs: Vec<Felt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        OrePoly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    /// Builds a polynomial from element indices, constant first.
    pub fn from_indices(ctx: &FieldCtx, indices: &[u64]) -> Result<Self> {
        let coeffs = indices
            .iter()
            .map(|&i| ctx.elem(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(ctx, coeffs))
    }

    /// Parses the comma-separated index form, e.g. `1,0,1` for `x^2 + 1`.
    pub fn parse(ctx: &FieldCtx, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::zero(ctx));
        }
        let indices = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {t:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(ctx, &indices)
    }

    pub fn zero(ctx: &FieldCtx) -> Self {
        Self::new(ctx, Vec::new())
    }

    pub fn one(ctx: &FieldCtx) -> Self {
        Self::constant(ctx, Felt::ONE)
    }

    pub fn constant(ctx: &FieldCtx, c: Felt) -> Self {
        Self::new(ctx, vec![c])
    }

    pub fn x(ctx: &FieldCtx) -> Self {
        Self::monomial(ctx, Felt::ONE, 1)
    }

    /// `c x^k`.
    pub fn monomial(ctx: &FieldCtx, c: Felt, k: usize) -> Self {
        let mut coeffs = vec![Felt::ZERO; k + 1];
        coeffs[k] = c;
        Self::new(ctx, coeffs)
    }

    /// `x − a`.
    pub fn linear(ctx: &FieldCtx, a: Felt) -> Self {
        Self::new(ctx, vec![ctx.neg(a), Felt::ONE])
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Felt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Felt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Felt {
        self.coeffs.get(i).copied().unwrap_or(Felt::ZERO)
    }

    /// Coefficients padded (or required to fit) to length `n`.
    pub fn to_vector(&self, n: usize) -> Vec<Felt> {
        debug_assert!(self.coeffs.len() <= n, "polynomial does not fit length {n}");
        let mut v = self.coeffs.clone();
        v.resize(n, Felt::ZERO);
        v
    }

    pub fn indices(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.index()).collect()
    }

    /// Degree, with `None` standing for deg 0 = −∞ (it orders below every
    /// `Some`).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Felt> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Felt::ONE)
    }

    /// Left scalar multiple `c·g`.
    pub fn scale_left(&self, c: Felt) -> Self {
        let f = &self.ctx;
        Self::new(&self.ctx, self.coeffs.iter().map(|&a| f.mul(c, a)).collect())
    }

    /// Makes the polynomial monic by a left scalar; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale_left(self.ctx.inv(l).expect("leading coefficient is nonzero")),
            None => self.clone(),
        }
    }

    /// Applies a map to every coefficient (e.g. σ⁻¹ on the coefficients).
    pub fn map_coeffs(&self, ctx: &FieldCtx, map: impl Fn(Felt) -> Felt) -> Self {
        Self::new(ctx, self.coeffs.iter().map(|&c| map(c)).collect())
    }

    /// Same coefficients read in another context over the same field.
    pub fn with_ctx(&self, ctx: &FieldCtx) -> Self {
        assert_eq!(**ctx.field(), **self.ctx.field(), "contexts over different fields");
        Self::new(ctx, self.coeffs.clone())
    }

    /// `x · self`, one application of the commutation rule per coefficient.
    pub fn x_times(&self) -> Self {
        let f = &self.ctx;
        let mut out = vec![Felt::ZERO; self.coeffs.len() + 1];
        for (j, &c) in self.coeffs.iter().enumerate() {
            out[j + 1] = f.add(out[j + 1], f.sigma(c));
            out[j] = f.add(out[j], f.delta(c));
        }
        Self::new(&self.ctx, out)
    }

    fn add_assign_scaled(acc: &mut Vec<Felt>, ctx: &FieldCtx, c: Felt, other: &[Felt]) {
        if c.is_zero() {
            return;
        }
        if acc.len() < other.len() {
            acc.resize(other.len(), Felt::ZERO);
        }
        for (a, &b) in acc.iter_mut().zip(other) {
            *a = ctx.add(*a, ctx.mul(c, b));
        }
    }

    /// The skew product `self · other`.
    pub fn skew_mul(&self, other: &OrePoly) -> Result<OrePoly> {
        self.ctx.check_same(&other.ctx)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &OrePoly) -> OrePoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut acc = Vec::with_capacity(self.coeffs.len() + other.coeffs.len());
        // running = x^i · other
        let mut running = other.clone();
        for (i, &g) in self.coeffs.iter().enumerate() {
            Self::add_assign_scaled(&mut acc, &self.ctx, g, &running.coeffs);
            if i + 1 < self.coeffs.len() {
                running = running.x_times();
            }
        }
        Self::new(&self.ctx, acc)
    }

    pub fn checked_add(&self, other: &OrePoly) -> Result<OrePoly> {
        self.ctx.check_same(&other.ctx)?;
        let mut acc = self.coeffs.clone();
        Self::add_assign_scaled(&mut acc, &self.ctx, Felt::ONE, &other.coeffs);
        Ok(Self::new(&self.ctx, acc))
    }

    pub fn checked_sub(&self, other: &OrePoly) -> Result<OrePoly> {
        self.ctx.check_same(&other.ctx)?;
        let mut acc = self.coeffs.clone();
        Self::add_assign_scaled(&mut acc, &self.ctx, self.ctx.neg(Felt::ONE), &other.coeffs);
        Ok(Self::new(&self.ctx, acc))
    }

    /// Right division `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn right_divmod(&self, divisor: &OrePoly) -> Result<(OrePoly, OrePoly)> {
        self.ctx.check_same(&divisor.ctx)?;
        let e = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let f = &self.ctx;
        let lead = divisor.leading().unwrap();
        let mut r = self.coeffs.clone();
        let d = match self.degree() {
            Some(d) if d >= e => d,
            _ => return Ok((Self::zero(f), self.clone())),
        };
        // shifted[s] = x^s · divisor, leading coefficient σ^s(lead).
        let mut shifted = Vec::with_capacity(d - e + 1);
        shifted.push(divisor.clone());
        for s in 1..=d - e {
            let next = shifted[s - 1].x_times();
            shifted.push(next);
        }
        let mut quot = vec![Felt::ZERO; d - e + 1];
        for deg in (e..=d).rev() {
            let c = r[deg];
            if c.is_zero() {
                continue;
            }
            let s = deg - e;
            let b = f.mul(c, f.inv(f.sigma_pow(lead, s)).unwrap());
            quot[s] = b;
            Self::add_assign_scaled(&mut r, f, f.neg(b), &shifted[s].coeffs);
            debug_assert!(r[deg].is_zero());
        }
        Ok((Self::new(f, quot), Self::new(f, r)))
    }

    /// Left division `self = divisor·q + r` with `deg r < deg divisor`.
    pub fn left_divmod(&self, divisor: &OrePoly) -> Result<(OrePoly, OrePoly)> {
        self.ctx.check_same(&divisor.ctx)?;
        let e = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let f = &self.ctx;
        let lead = divisor.leading().unwrap();
        let lead_inv = f.inv(lead).unwrap();
        let mut r = self.clone();
        let mut quot = Vec::new();
        while let Some(deg) = r.degree().filter(|&d| d >= e) {
            let s = deg - e;
            // divisor · (b x^s) has leading coefficient lead · σ^e(b).
            let target = f.mul(lead_inv, r.leading().unwrap());
            let b = (0..e).fold(target, |acc, _| f.sigma_inv(acc));
            if quot.len() <= s {
                quot.resize(s + 1, Felt::ZERO);
            }
            quot[s] = f.add(quot[s], b);
            let term = divisor.mul_unchecked(&Self::monomial(f, b, s));
            r = &r - &term;
            debug_assert!(r.degree().is_none_or(|d| d < deg));
        }
        Ok((Self::new(f, quot), r))
    }

    /// `self mod divisor` as an element of S/S·divisor.
    pub fn rem(&self, divisor: &OrePoly) -> Result<OrePoly> {
        Ok(self.right_divmod(divisor)?.1)
    }

    /// Right evaluation `g(a) = Σ g_i N_i(a)`, the remainder of right
    /// division by `x − a`.
    pub fn eval(&self, a: Felt) -> Felt {
        let f = &self.ctx;
        let mut n = Felt::ONE;
        let mut acc = Felt::ZERO;
        for (i, &g) in self.coeffs.iter().enumerate() {
            if i > 0 {
                n = next_norm(f, n, a);
            }
            acc = f.add(acc, f.mul(g, n));
        }
        acc
    }

    /// `g(T_a)(b)` for the one-dimensional pseudo-linear map
    /// `T_a(y) = σ(y)a + δ(y)`.
    pub fn eval_plt_scalar(&self, a: Felt, b: Felt) -> Felt {
        let f = &self.ctx;
        let mut cur = b;
        let mut acc = Felt::ZERO;
        for (i, &g) in self.coeffs.iter().enumerate() {
            if i > 0 {
                cur = plt_scalar(f, a, cur);
            }
            acc = f.add(acc, f.mul(g, cur));
        }
        acc
    }

    pub fn right_roots(&self) -> Vec<Felt> {
        self.ctx.elements().filter(|&a| self.eval(a).is_zero()).collect()
    }

    /// Whether `self` right-divides `other`, i.e. `other ∈ S·self`.
    pub fn right_divides(&self, other: &OrePoly) -> Result<bool> {
        Ok(other.right_divmod(self)?.1.is_zero())
    }

    /// Human notation, e.g. `x^2 + w·x + 1`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = self.ctx.format(c);
            let var = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            terms.push(match (i, c == Felt::ONE) {
                (0, _) => cs,
                (_, true) => var,
                _ if cs.contains('+') => format!("({cs})·{var}"),
                _ => format!("{cs}·{var}"),
            });
        }
        terms.join(" + ")
    }
}

impl fmt::Debug for OrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrePoly{:?}", self.indices())
    }
}

impl fmt::Display for OrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

// Operator forms panic on mixed contexts, like slice indexing panics out of
// bounds; the `checked_*` / `skew_mul` forms return `MixedFieldContexts`.
impl Add for &OrePoly {
    type Output = OrePoly;

    fn add(self, rhs: &OrePoly) -> OrePoly {
        self.checked_add(rhs).expect("mixed field contexts")
    }
}

impl Sub for &OrePoly {
    type Output = OrePoly;

    fn sub(self, rhs: &OrePoly) -> OrePoly {
        self.checked_sub(rhs).expect("mixed field contexts")
    }
}

impl Mul for &OrePoly {
    type Output = OrePoly;

    fn mul(self, rhs: &OrePoly) -> OrePoly {
        self.skew_mul(rhs).expect("mixed field contexts")
    }
}

impl Neg for &OrePoly {
    type Output = OrePoly;

    fn neg(self) -> OrePoly {
        self.scale_left(self.ctx.neg(Felt::ONE))
    }
}

#[inline]
fn next_norm(f: &FieldCtx, n: Felt, a: Felt) -> Felt {
    f.add(f.mul(f.sigma(n), a), f.delta(n))
}

#[inline]
pub(crate) fn plt_scalar(f: &FieldCtx, a: Felt, y: Felt) -> Felt {
    f.add(f.mul(f.sigma(y), a), f.delta(y))
}

/// `N_i(a)`: `N_0 = 1`, `N_{i+1}(a) = σ(N_i(a))a + δ(N_i(a))`.
pub fn norm(ctx: &FieldCtx, i: usize, a: Felt) -> Felt {
    (0..i).fold(Felt::ONE, |n, _| next_norm(ctx, n, a))
}

/// `N_0(a), …, N_{count−1}(a)`.
pub fn norms(ctx: &FieldCtx, a: Felt, count: usize) -> Vec<Felt> {
    let mut out = Vec::with_capacity(count);
    let mut n = Felt::ONE;
    for i in 0..count {
        if i > 0 {
            n = next_norm(ctx, n, a);
        }
        out.push(n);
    }
    out
}

/// `x^k · a`, by `k` applications of the commutation rule.
pub fn x_power_times(ctx: &FieldCtx, k: usize, a: Felt) -> OrePoly {
    (0..k).fold(OrePoly::constant(ctx, a), |p, _| p.x_times())
}

/// The closed binomial form `Σ C(k,i) σ^i δ^{k−i}(a) x^i`. It agrees with
/// [`x_power_times`] only when σ and δ commute.
pub fn x_power_times_binomial(ctx: &FieldCtx, k: usize, a: Felt) -> OrePoly {
    let mut coeffs = Vec::with_capacity(k + 1);
    let p = ctx.characteristic() as u64;
    // C(k, i) mod p via Lucas' theorem to stay exact for any k.
    let lucas = |k: usize, i: usize| -> u64 {
        let (mut k, mut i) = (k as u64, i as u64);
        let mut acc = 1u64;
        while k > 0 || i > 0 {
            let (kd, id) = (k % p, i % p);
            if id > kd {
                return 0;
            }
            let mut c = 1u64;
            for j in 0..id {
                c = c * (kd - j) / (j + 1);
            }
            acc = acc * (c % p) % p;
            k /= p;
            i /= p;
        }
        acc
    };
    for i in 0..=k {
        let binom = lucas(k, i);
        let mut v = a;
        for _ in 0..k - i {
            v = ctx.delta(v);
        }
        let v = ctx.sigma_pow(v, i);
        coeffs.push(ctx.mul(ctx.from_int(binom), v));
    }
    OrePoly::new(ctx, coeffs)
}

/// The (σ,δ)-conjugate `a^c = σ(c)·a·c⁻¹ + δ(c)·c⁻¹`.
pub fn conjugate(ctx: &FieldCtx, a: Felt, c: Felt) -> Result<Felt> {
    let inv = ctx.inv(c).map_err(|_| Error::ConjugateByZero)?;
    Ok(ctx.add(
        ctx.mul(ctx.mul(ctx.sigma(c), a), inv),
        ctx.mul(ctx.delta(c), inv),
    ))
}

/// `Δ(a) = {a^c : c ≠ 0}`.
pub fn conjugacy_class(ctx: &FieldCtx, a: Felt) -> BTreeSet<Felt> {
    ctx.units()
        .map(|c| conjugate(ctx, a, c).expect("units are invertible"))
        .collect()
}

/// Partition of the field into conjugacy classes, each sorted, ordered by
/// smallest element.
pub fn conjugacy_classes(ctx: &FieldCtx) -> Vec<BTreeSet<Felt>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in ctx.elements() {
        if seen.contains(&a) {
            continue;
        }
        let class = conjugacy_class(ctx, a);
        seen.extend(class.iter().copied());
        out.push(class);
    }
    out
}

/// `(gh)(a)` via the product rule: zero when `h(a) = 0`, otherwise
/// `g(a^{h(a)})·h(a)`.
pub fn product_eval(g: &OrePoly, h: &OrePoly, a: Felt) -> Result<Felt> {
    g.ctx.check_same(&h.ctx)?;
    let ha = h.eval(a);
    if ha.is_zero() {
        return Ok(Felt::ZERO);
    }
    let ctx = &g.ctx;
    Ok(ctx.mul(g.eval(conjugate(ctx, a, ha)?), ha))
}

/// Monic generator of `{g : g(a) = 0 for all a ∈ points}`.
///
/// Built incrementally: a point that is already a root is skipped, otherwise
/// `f ← (x − a^{f(a)})·f`. The empty set gives `1`.
pub fn min_poly_of_set(ctx: &FieldCtx, points: &[Felt]) -> OrePoly {
    let mut f = OrePoly::one(ctx);
    for &a in points {
        let fa = f.eval(a);
        if fa.is_zero() {
            continue;
        }
        let b = conjugate(ctx, a, fa).expect("nonzero value");
        f = OrePoly::linear(ctx, b).mul_unchecked(&f);
    }
    f
}

/// Enumerates every polynomial with degree < `len` (as coefficient vectors
/// in index order).
pub fn all_polys_below(ctx: &FieldCtx, len: usize) -> impl Iterator<Item = OrePoly> + '_ {
    let q = ctx.order() as u64;
    let total = q.pow(len as u32);
    (0..total).map(move |mut idx| {
        let coeffs = (0..len)
            .map(|_| {
                let c = Felt::from_index_unchecked((idx % q) as u32);
                idx /= q;
                c
            })
            .collect();
        OrePoly::new(ctx, coeffs)
    })
}

/// Every monic polynomial of exactly degree `n`.
pub fn all_monic(ctx: &FieldCtx, n: usize) -> impl Iterator<Item = OrePoly> + '_ {
    all_polys_below(ctx, n).map(move |p| {
        let mut c = p.to_vector(n);
        c.push(Felt::ONE);
        OrePoly::new(ctx, c)
    })
}
