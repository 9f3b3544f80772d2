//! Exact arithmetic in GF(p^m) together with the twisting pair (σ, δ).
//!
//! Elements are stored by their integer index `Σ digit_i · p^i`, where the
//! digits are the coefficients of the element in the power basis of a root
//! `w` of the defining modulus (constant digit first). The same index is the
//! external text encoding of an element.
//!
//! A [`FieldCtx`] bundles a field with the Frobenius power `σ(a) = a^{p^t}`
//! and the inner σ-derivation `δ(a) = β(σ(a) − a)`. Over a finite field every
//! σ-derivation has this shape, so the context is parameterized by `β` only.

use std::fmt;
use std::ops::Deref;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Largest field order accepted by [`GaloisField::new`].
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// An element of GF(p^m), identified by its digit index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Felt(u32);

impl Felt {
    pub const ZERO: Felt = Felt(0);
    pub const ONE: Felt = Felt(1);

    /// Wraps a raw index without range checking. Use [`GaloisField::elem`]
    /// for untrusted input.
    pub const fn from_index_unchecked(index: u32) -> Felt {
        Felt(index)
    }

    pub const fn index(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The finite field GF(p^m) = GF(p)[w]/(modulus).
pub struct GaloisField {
    p: u32,
    m: usize,
    q: u32,
    modulus: Vec<u32>,
    pow_p: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    prime: OnceLock<Arc<GaloisField>>,
}

impl GaloisField {
    /// Builds GF(p^m) from an explicit monic modulus of degree `m`
    /// (coefficients constant first). The modulus must be irreducible.
    pub fn new(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidFieldSpec(format!("{p} is not prime")));
        }
        if modulus.len() < 2 {
            return Err(Error::InvalidFieldSpec(
                "modulus must have degree at least 1".into(),
            ));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidFieldSpec(format!(
                "modulus coefficients must lie in [0, {p})"
            )));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidFieldSpec("modulus must be monic".into()));
        }
        let m = modulus.len() - 1;
        let q = (p as u64)
            .checked_pow(m as u32)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(Error::FieldTooLarge {
                q: (p as u64).saturating_pow(m as u32),
                max: MAX_FIELD_ORDER,
            })?;
        if !fp_poly::is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus { p });
        }
        Ok(Self::build(p, modulus, q as u32))
    }

    /// GF(p^m) with the default modulus: the monic irreducible of degree `m`
    /// whose lower coefficients have the smallest index `Σ c_i p^i`.
    pub fn with_default_modulus(p: u32, m: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidFieldSpec(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidFieldSpec("extension degree must be >= 1".into()));
        }
        let q = (p as u64)
            .checked_pow(m as u32)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(Error::FieldTooLarge {
                q: (p as u64).saturating_pow(m as u32),
                max: MAX_FIELD_ORDER,
            })?;
        let modulus = fp_poly::smallest_irreducible(p, m);
        Ok(Self::build(p, modulus, q as u32))
    }

    /// Parses `gf(p^m)`, `gf(q)`, or either form followed by `/c0,c1,...,1`.
    pub fn parse(spec: &str) -> Result<Self> {
        let bad = || Error::InvalidFieldSpec(spec.to_string());
        let s = spec.trim();
        let lower = s.to_ascii_lowercase();
        let rest = lower.strip_prefix("gf(").ok_or_else(bad)?;
        let close = rest.find(')').ok_or_else(bad)?;
        let order = &rest[..close];
        let tail = &rest[close + 1..];
        let (p, m) = match order.split_once('^') {
            Some((p, m)) => {
                let p: u32 = p.trim().parse().map_err(|_| bad())?;
                let m: usize = m.trim().parse().map_err(|_| bad())?;
                (p, m)
            }
            None => {
                let q: u64 = order.trim().parse().map_err(|_| bad())?;
                prime_power(q).ok_or_else(|| {
                    Error::InvalidFieldSpec(format!("{q} is not a prime power"))
                })?
            }
        };
        if tail.is_empty() {
            return Self::with_default_modulus(p, m);
        }
        let coeffs = tail.strip_prefix('/').ok_or_else(bad)?;
        let modulus = coeffs
            .split(',')
            .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        if modulus.len() != m + 1 {
            return Err(Error::InvalidFieldSpec(format!(
                "modulus for gf({p}^{m}) needs {} coefficients",
                m + 1
            )));
        }
        Self::new(p, modulus)
    }

    fn build(p: u32, modulus: Vec<u32>, q: u32) -> Self {
        let m = modulus.len() - 1;
        let pow_p: Vec<u32> = (0..=m).map(|i| p.pow(i as u32)).collect();
        let neg = (0..q)
            .map(|a| {
                let mut out = 0;
                let mut rest = a;
                for &w in &pow_p[..m] {
                    let d = rest % p;
                    rest /= p;
                    out += ((p - d) % p) * w;
                }
                out
            })
            .collect();

        let slow = SlowArith { p, m, modulus: &modulus };
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let generator = (1..q)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| slow.pow(g, order / r) != 1)
            })
            .expect("multiplicative group of a finite field is cyclic");

        let mut exp = vec![0u32; 2 * (q as usize - 1)];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..(q as usize - 1) {
            exp[i] = cur;
            exp[i + q as usize - 1] = cur;
            log[cur as usize] = i as u32;
            cur = slow.mul(cur, generator);
        }

        GaloisField {
            p,
            m,
            q,
            modulus,
            pow_p,
            exp,
            log,
            neg,
            prime: OnceLock::new(),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Canonical spec string, e.g. `gf(2^2)/1,1,1`.
    pub fn spec(&self) -> String {
        let coeffs: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
        format!("gf({}^{})/{}", self.p, self.m, coeffs.join(","))
    }

    /// Validates an element index.
    pub fn elem(&self, index: u64) -> Result<Felt> {
        if index < self.q as u64 {
            Ok(Felt(index as u32))
        } else {
            Err(Error::InvalidElement { index, q: self.q })
        }
    }

    pub fn contains(&self, a: Felt) -> bool {
        a.0 < self.q
    }

    /// The root `w` of the modulus (equal to the constant `p` index when m > 1).
    pub fn generator_w(&self) -> Felt {
        if self.m == 1 {
            // w is the root of a linear modulus x + c, i.e. -c.
            Felt(self.neg[self.modulus[0] as usize])
        } else {
            Felt(self.p)
        }
    }

    /// `w^d` for `d < m`; these form a GF(p)-basis of the field.
    pub fn basis_element(&self, d: usize) -> Felt {
        Felt(self.pow_p[d])
    }

    pub fn elements(&self) -> impl Iterator<Item = Felt> + Clone {
        (0..self.q).map(Felt)
    }

    pub fn units(&self) -> impl Iterator<Item = Felt> + Clone {
        (1..self.q).map(Felt)
    }

    pub fn digits(&self, a: Felt) -> Vec<u32> {
        let mut rest = a.0;
        (0..self.m)
            .map(|_| {
                let d = rest % self.p;
                rest /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Felt {
        debug_assert_eq!(digits.len(), self.m);
        Felt(
            digits
                .iter()
                .zip(&self.pow_p)
                .map(|(&d, &w)| (d % self.p) * w)
                .sum(),
        )
    }

    /// The element `k · 1` for an integer `k`.
    pub fn from_int(&self, k: u64) -> Felt {
        Felt((k % self.p as u64) as u32)
    }

    #[inline]
    pub fn add(&self, a: Felt, b: Felt) -> Felt {
        if self.p == 2 {
            return Felt(a.0 ^ b.0);
        }
        if self.m == 1 {
            let s = a.0 + b.0;
            return Felt(if s >= self.p { s - self.p } else { s });
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        for &w in &self.pow_p[..self.m] {
            let s = x % self.p + y % self.p;
            let digit = if s >= self.p { s - self.p } else { s };
            out += digit * w;
            x /= self.p;
            y /= self.p;
        }
        Felt(out)
    }

    #[inline]
    pub fn neg(&self, a: Felt) -> Felt {
        Felt(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Felt, b: Felt) -> Felt {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Felt, b: Felt) -> Felt {
        if a.0 == 0 || b.0 == 0 {
            return Felt::ZERO;
        }
        let e = self.log[a.0 as usize] + self.log[b.0 as usize];
        Felt(self.exp[e as usize])
    }

    pub fn inv(&self, a: Felt) -> Result<Felt> {
        if a.is_zero() {
            return Err(Error::InverseOfZero);
        }
        let n = self.q - 1;
        Ok(Felt(self.exp[((n - self.log[a.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, a: Felt, b: Felt) -> Result<Felt> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Felt, e: u64) -> Felt {
        if e == 0 {
            return Felt::ONE;
        }
        if a.is_zero() {
            return Felt::ZERO;
        }
        let n = (self.q - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (e % n)) % n;
        Felt(self.exp[l as usize])
    }

    /// The prime subfield GF(p) as a standalone field.
    pub fn prime_field(&self) -> Arc<GaloisField> {
        self.prime
            .get_or_init(|| {
                Arc::new(
                    GaloisField::with_default_modulus(self.p, 1)
                        .expect("prime field always constructible"),
                )
            })
            .clone()
    }

    /// Human notation in powers of `w`, e.g. `w^2+2w+1`.
    pub fn format(&self, a: Felt) -> String {
        if self.m == 1 {
            return a.0.to_string();
        }
        let digits = self.digits(a);
        let mut terms = Vec::new();
        for (i, &d) in digits.iter().enumerate().rev() {
            if d == 0 {
                continue;
            }
            let coeff = if d == 1 && i > 0 { String::new() } else { d.to_string() };
            let var = match i {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{i}"),
            };
            terms.push(format!("{coeff}{var}"));
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for GaloisField {}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaloisField({})", self.spec())
    }
}

/// A field together with σ = Frobenius^t and δ = β(σ − id).
#[derive(Clone)]
pub struct FieldCtx {
    inner: Arc<CtxInner>,
}

struct CtxInner {
    field: Arc<GaloisField>,
    sigma_power: u32,
    beta: Felt,
    sigma: Vec<Felt>,
    sigma_inv: Vec<Felt>,
    delta: Vec<Felt>,
}

impl FieldCtx {
    pub fn new(field: impl Into<Arc<GaloisField>>, sigma_power: u32, beta: Felt) -> Result<Self> {
        let field = field.into();
        if sigma_power as usize >= field.m {
            return Err(Error::InvalidContextSpec(format!(
                "sigma power {sigma_power} must lie in [0, {})",
                field.m
            )));
        }
        if !field.contains(beta) {
            return Err(Error::InvalidElement {
                index: beta.0 as u64,
                q: field.q,
            });
        }
        let frob = |t: u32| -> Vec<Felt> {
            let e = (field.p as u64).pow(t);
            field.elements().map(|a| field.pow(a, e)).collect()
        };
        let sigma = frob(sigma_power);
        let sigma_inv = frob((field.m as u32 - sigma_power) % field.m as u32);
        let delta = field
            .elements()
            .map(|a| field.mul(beta, field.sub(sigma[a.0 as usize], a)))
            .collect();
        Ok(FieldCtx {
            inner: Arc::new(CtxInner {
                field,
                sigma_power,
                beta,
                sigma,
                sigma_inv,
                delta,
            }),
        })
    }

    /// Every distinct context over `field`: the classical one, then each
    /// nontrivial power of the Frobenius with every β.
    pub fn all(field: impl Into<Arc<GaloisField>>) -> Vec<FieldCtx> {
        let field = field.into();
        let mut out = vec![Self::classical(field.clone())];
        for t in 1..field.m as u32 {
            for b in field.elements() {
                out.push(Self::new(field.clone(), t, b).expect("valid twist"));
            }
        }
        out
    }

    /// The commutative context (σ, δ) = (id, 0).
    pub fn classical(field: impl Into<Arc<GaloisField>>) -> Self {
        Self::new(field, 0, Felt::ZERO).expect("identity context is always valid")
    }

    /// Parses a field spec plus `sigma=t,beta=e` (either key may be omitted).
    pub fn parse(field_spec: &str, ctx_spec: &str) -> Result<Self> {
        let field = GaloisField::parse(field_spec)?;
        let (t, beta) = parse_context_spec(ctx_spec)?;
        let beta = field.elem(beta)?;
        Self::new(field, t, beta)
    }

    /// Same field, different (σ, β).
    pub fn with_twist(&self, sigma_power: u32, beta: Felt) -> Result<Self> {
        Self::new(self.inner.field.clone(), sigma_power, beta)
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.inner.field
    }

    pub fn sigma_power(&self) -> u32 {
        self.inner.sigma_power
    }

    pub fn beta(&self) -> Felt {
        self.inner.beta
    }

    /// Power of the Frobenius that gives σ⁻¹.
    pub fn sigma_inverse_power(&self) -> u32 {
        let m = self.inner.field.m as u32;
        (m - self.inner.sigma_power) % m
    }

    #[inline]
    pub fn sigma(&self, a: Felt) -> Felt {
        self.inner.sigma[a.0 as usize]
    }

    #[inline]
    pub fn sigma_inv(&self, a: Felt) -> Felt {
        self.inner.sigma_inv[a.0 as usize]
    }

    #[inline]
    pub fn delta(&self, a: Felt) -> Felt {
        self.inner.delta[a.0 as usize]
    }

    /// σ^k(a).
    pub fn sigma_pow(&self, a: Felt, k: usize) -> Felt {
        let m = self.inner.field.m;
        (0..k % m).fold(a, |acc, _| self.sigma(acc))
    }

    /// True when σ = id, which forces δ = 0.
    pub fn is_classical(&self) -> bool {
        self.inner.sigma_power == 0
    }

    /// Whether σ∘δ = δ∘σ, i.e. σ(β) = β or σ = id.
    pub fn sigma_commutes_with_delta(&self) -> bool {
        self.is_classical() || self.sigma(self.inner.beta) == self.inner.beta
    }

    /// `sigma=t,beta=e`.
    pub fn context_spec(&self) -> String {
        format!("sigma={},beta={}", self.inner.sigma_power, self.inner.beta.0)
    }

    pub fn same_as(&self, other: &FieldCtx) -> bool {
        self == other
    }

    pub(crate) fn check_same(&self, other: &FieldCtx) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::MixedFieldContexts)
        }
    }
}

impl Deref for FieldCtx {
    type Target = GaloisField;

    fn deref(&self) -> &GaloisField {
        &self.inner.field
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return true;
        }
        let (a, b) = (&*self.inner, &*other.inner);
        if a.sigma_power != b.sigma_power || *a.field != *b.field {
            return false;
        }
        // With σ = id the derivation vanishes whatever β is.
        a.sigma_power == 0 || a.beta == b.beta
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldCtx({}, {})", self.inner.field.spec(), self.context_spec())
    }
}

/// Parses `sigma=t,beta=e`; missing keys default to 0.
pub fn parse_context_spec(spec: &str) -> Result<(u32, u64)> {
    let mut t = 0;
    let mut beta = 0;
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::InvalidContextSpec(spec.to_string()))?;
        let bad = || Error::InvalidContextSpec(spec.to_string());
        match key.trim() {
            "sigma" => t = value.trim().parse().map_err(|_| bad())?,
            "beta" => beta = value.trim().parse().map_err(|_| bad())?,
            _ => return Err(bad()),
        }
    }
    Ok((t, beta))
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn prime_power(q: u64) -> Option<(u32, usize)> {
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut m = 0;
    let mut rest = q;
    while rest > 1 {
        rest /= p;
        m += 1;
    }
    Some((u32::try_from(p).ok()?, m))
}

/// Index arithmetic through explicit polynomial reduction; only used while
/// building the log tables.
struct SlowArith<'a> {
    p: u32,
    m: usize,
    modulus: &'a [u32],
}

impl SlowArith<'_> {
    fn to_poly(&self, mut a: u32) -> Vec<u32> {
        (0..self.m)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let prod = fp_poly::mul(&self.to_poly(a), &self.to_poly(b), self.p);
        let r = fp_poly::rem(&prod, self.modulus, self.p);
        r.iter()
            .rev()
            .fold(0u32, |acc, &d| acc * self.p + d)
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// Dense polynomials over GF(p) with u32 coefficients, constant first.
pub(crate) mod fp_poly {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|c| c as u32).collect())
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        // Fermat; p is prime.
        let mut base = a as u64 % p as u64;
        let mut e = p as u64 - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        acc as u32
    }

    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let b = trim(b.to_vec());
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r = trim(a.to_vec());
        let lead_inv = inv_mod(*b.last().unwrap(), p) as u64;
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = (*r.last().unwrap() as u64 * lead_inv) % p as u64;
            for (i, &bi) in b.iter().enumerate() {
                let sub = c * bi as u64 % p as u64;
                r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
            }
            r = trim(r);
        }
        r
    }

    /// Trial division by every monic polynomial of degree 1..=deg/2.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let n = f.len() - 1;
        for d in 1..=n / 2 {
            let count = (p as u64).pow(d as u32);
            for idx in 0..count {
                let mut g = Vec::with_capacity(d + 1);
                let mut rest = idx;
                for _ in 0..d {
                    g.push((rest % p as u64) as u32);
                    rest /= p as u64;
                }
                g.push(1);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    pub fn smallest_irreducible(p: u32, m: usize) -> Vec<u32> {
        let count = (p as u64).pow(m as u32);
        for idx in 0..count {
            let mut f = Vec::with_capacity(m + 1);
            let mut rest = idx;
            for _ in 0..m {
                f.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            f.push(1);
            if is_irreducible(&f, p) {
                return f;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }
}
