//! Textbook commutative polynomials over GF(p), `p` prime, with plain
//! modular integers. Coefficients are lowest degree first and trimmed.

#[derive(Clone, Copy, Debug)]
pub struct Fp(pub u32);

impl Fp {
    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.0
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.0 - b) % self.0
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.0 as u64) as u32
    }

    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.0));
        // Fermat
        let mut r = 1u32;
        let mut base = a % self.0;
        let mut e = self.0 - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }

    pub fn trim(self, mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn mul_poly(self, a: &[u32], b: &[u32]) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        self.trim(out)
    }

    pub fn divmod(self, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let b = self.trim(b.to_vec());
        assert!(!b.is_empty());
        let mut r = self.trim(a.to_vec());
        if r.len() < b.len() {
            return (vec![], r);
        }
        let lead_inv = self.inv(*b.last().unwrap());
        let mut q = vec![0; r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let s = r.len() - b.len();
            let c = self.mul(*r.last().unwrap(), lead_inv);
            q[s] = c;
            for (j, &bj) in b.iter().enumerate() {
                r[s + j] = self.sub(r[s + j], self.mul(c, bj));
            }
            r = self.trim(r);
        }
        (self.trim(q), r)
    }

    /// Horner.
    pub fn eval(self, a: &[u32], x: u32) -> u32 {
        a.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Lagrange interpolation through `(points[i], values[i])`.
    pub fn interpolate(self, points: &[u32], values: &[u32]) -> Vec<u32> {
        let mut out = vec![0; points.len()];
        for (i, (&xi, &yi)) in points.iter().zip(values).enumerate() {
            let mut basis = vec![1];
            let mut denom = 1;
            for (j, &xj) in points.iter().enumerate() {
                if j != i {
                    basis = self.mul_poly(&basis, &[self.sub(0, xj), 1]);
                    denom = self.mul(denom, self.sub(xi, xj));
                }
            }
            let scale = self.mul(yi, self.inv(denom));
            for (k, &c) in basis.iter().enumerate() {
                out[k] = self.add(out[k], self.mul(scale, c));
            }
        }
        self.trim(out)
    }

    /// `x^n − 1`.
    pub fn x_n_minus_1(self, n: usize) -> Vec<u32> {
        let mut f = vec![0; n + 1];
        f[0] = self.0 - 1;
        f[n] = 1;
        f
    }

    /// All monic divisors of `f`, by trial division over every monic
    /// polynomial of degree at most `deg f`.
    pub fn monic_divisors(self, f: &[u32]) -> Vec<Vec<u32>> {
        let n = f.len() - 1;
        let mut out = Vec::new();
        for d in 0..=n {
            for idx in 0..(self.0 as u64).pow(d as u32) {
                let mut g = Vec::with_capacity(d + 1);
                let mut k = idx;
                for _ in 0..d {
                    g.push((k % self.0 as u64) as u32);
                    k /= self.0 as u64;
                }
                g.push(1);
                if self.divmod(f, &g).1.is_empty() {
                    out.push(g);
                }
            }
        }
        out
    }

    /// Rows `x^i·g` for `i < n − deg g`, as length-`n` vectors.
    pub fn generator_rows(self, g: &[u32], n: usize) -> Vec<Vec<u32>> {
        let k = n + 1 - g.len();
        (0..k)
            .map(|i| {
                let mut v = vec![0; n];
                v[i..i + g.len()].copy_from_slice(g);
                v
            })
            .collect()
    }

    /// All vectors of length `n`.
    pub fn vectors(self, n: usize) -> Vec<Vec<u32>> {
        let p = self.0 as u64;
        (0..p.pow(n as u32))
            .map(|mut k| {
                (0..n)
                    .map(|_| {
                        let d = (k % p) as u32;
                        k /= p;
                        d
                    })
                    .collect()
            })
            .collect()
    }

    pub fn span(self, rows: &[Vec<u32>], n: usize) -> std::collections::BTreeSet<Vec<u32>> {
        let mut out = std::collections::BTreeSet::new();
        for coeffs in self.vectors(rows.len()) {
            let mut v = vec![0; n];
            for (c, row) in coeffs.iter().zip(rows) {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = self.add(*x, self.mul(*c, r));
                }
            }
            out.insert(v);
        }
        out
    }

    pub fn dot(self, a: &[u32], b: &[u32]) -> u32 {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// Cyclic right rotation `(v_{n−1}, v_0, …, v_{n−2})`.
    pub fn rotate(v: &[u32]) -> Vec<u32> {
        let n = v.len();
        let mut out = Vec::with_capacity(n);
        out.push(v[n - 1]);
        out.extend_from_slice(&v[..n - 1]);
        out
    }

    /// `x^{deg h} h(1/x)`, scaled to be monic.
    pub fn monic_reciprocal(self, h: &[u32]) -> Vec<u32> {
        let mut r: Vec<u32> = h.iter().rev().copied().collect();
        r = self.trim(r);
        let inv = self.inv(*r.last().unwrap());
        r.iter().map(|&c| self.mul(c, inv)).collect()
    }
}
