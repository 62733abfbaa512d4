//! Finite fields `k = F_q`, `l = F_{q^2}` and the cyclotomic integers `Z[ζ_n]`,
//! `n = q^2 - 1`, in which every Brauer character value lives.
//!
//! Elements of `l` are stored by discrete logarithm to a fixed generator
//! `gamma`; addition goes through a Zech logarithm table. The primitive root
//! `ζ` is the Teichmüller lift of `gamma`, so lifting `gamma^t` is just `ζ^t`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::chars::ModularBasis;
use crate::classfn::SsClass;
use crate::error::{Error, Result};
use crate::jl::JlMatrix;

/// Largest `q` accepted by [`FieldCtx::new`].
pub const DEFAULT_Q_BOUND: u32 = 32;

/// Primes used for modular evaluation start just above this value.
const EVAL_PRIME_FLOOR: u64 = 1 << 30;

pub(crate) fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            out.push(d);
            while x.is_multiple_of(d) {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (s0, s1) = (s1, s0 - quot * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(m as i128) as u64)
}

fn euler_phi(n: u64) -> u64 {
    prime_factors(n).iter().fold(n, |acc, p| acc / p * (p - 1))
}

fn mobius(n: u64) -> i32 {
    let mut x = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            x /= d;
            if x.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if x > 1 {
        sign = -sign;
    }
    sign
}

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial,
/// from `Φ_n = Π_{d | n} (x^d - 1)^{μ(n/d)}`.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    let divisors: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut poly = vec![1i64];
    // multiply first so every division below is exact
    for &d in &divisors {
        if mobius((n / d) as u64) == 1 {
            let mut next = vec![0i64; poly.len() + d];
            for (i, &c) in poly.iter().enumerate() {
                next[i + d] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &d in &divisors {
        if mobius((n / d) as u64) == -1 {
            // synthetic division by x^d - 1, from the top down
            let deg = poly.len() - 1;
            let mut quot = vec![0i64; deg - d + 1];
            let mut rem = poly.clone();
            for i in (d..=deg).rev() {
                let c = rem[i];
                quot[i - d] = c;
                rem[i] = 0;
                rem[i - d] += c;
            }
            debug_assert!(rem.iter().all(|&c| c == 0));
            poly = quot;
        }
    }
    poly
}

/// The ring `Z[ζ_n] = Z[x]/(Φ_n)`.
#[derive(Debug)]
pub struct CycRing {
    n: usize,
    phi: usize,
    modulus: Vec<i64>,
}

impl CycRing {
    pub fn new(n: usize) -> Arc<Self> {
        assert!(n >= 1, "cyclotomic order must be positive");
        let modulus = cyclotomic_polynomial(n);
        let phi = modulus.len() - 1;
        debug_assert_eq!(phi as u64, euler_phi(n as u64));
        Arc::new(CycRing { n, phi, modulus })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Rank of the power basis, `φ(n)`.
    pub fn rank(&self) -> usize {
        self.phi
    }

    /// Coefficients of `Φ_n`, constant term first.
    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    /// Remainder of an integer polynomial modulo `Φ_n`, padded to length `φ(n)`.
    pub fn reduce(&self, mut v: Vec<i64>) -> Vec<i64> {
        let phi = self.phi;
        if v.len() > phi {
            for i in (phi..v.len()).rev() {
                let c = v[i];
                if c == 0 {
                    continue;
                }
                v[i] = 0;
                for (k, &m) in self.modulus[..phi].iter().enumerate() {
                    v[i - phi + k] -= c * m;
                }
            }
        }
        v.resize(phi, 0);
        v
    }

    /// Primes `ℓ ≡ 1 (mod n)` above `2^30`, each paired with an element of
    /// exact multiplicative order `n` modulo `ℓ`. Deterministic.
    pub fn eval_primes(&self, count: usize) -> Vec<(u64, u64)> {
        self.eval_primes_from(0, count)
    }

    pub(crate) fn eval_primes_from(&self, skip: usize, count: usize) -> Vec<(u64, u64)> {
        let n = self.n as u64;
        let factors = prime_factors(n);
        let mut out = Vec::with_capacity(count);
        let mut k = EVAL_PRIME_FLOOR / n + 1;
        let mut seen = 0;
        while out.len() < count {
            let ell = k * n + 1;
            k += 1;
            if !is_prime(ell) {
                continue;
            }
            if seen < skip {
                seen += 1;
                continue;
            }
            let root = (2..ell)
                .map(|a| pow_mod(a, (ell - 1) / n, ell))
                .find(|&r| factors.iter().all(|&f| pow_mod(r, n / f, ell) != 1))
                .expect("a cyclic group of order ell - 1 has elements of every order dividing it");
            out.push((ell, root));
        }
        out
    }
}

/// An element of `Z[ζ_n]` in canonical power-basis form.
#[derive(Clone)]
pub struct CycInt {
    ring: Arc<CycRing>,
    coeffs: Vec<i64>,
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        self.ring.n == other.ring.n && self.coeffs == other.coeffs
    }
}

impl Eq for CycInt {}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt[n={}]{:?}", self.ring.n, self.coeffs)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            match (i, mag) {
                (0, _) => write!(f, "{sign}{mag}")?,
                (1, 1) => write!(f, "{sign}z")?,
                (1, _) => write!(f, "{sign}{mag}z")?,
                (_, 1) => write!(f, "{sign}z^{i}")?,
                _ => write!(f, "{sign}{mag}z^{i}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl CycInt {
    pub fn zero(ring: &Arc<CycRing>) -> Self {
        CycInt { ring: ring.clone(), coeffs: vec![0; ring.phi] }
    }

    pub fn from_int(ring: &Arc<CycRing>, value: i64) -> Self {
        let mut out = Self::zero(ring);
        if ring.phi > 0 {
            out.coeffs[0] = value;
        }
        out
    }

    /// `ζ^e` for any integer exponent.
    pub fn root_power(ring: &Arc<CycRing>, exp: i64) -> Self {
        let e = exp.rem_euclid(ring.n as i64) as usize;
        let mut v = vec![0i64; e + 1];
        v[e] = 1;
        Self::from_poly(ring, v)
    }

    /// Reduces an arbitrary integer polynomial in `ζ`.
    pub fn from_poly(ring: &Arc<CycRing>, poly: Vec<i64>) -> Self {
        CycInt { ring: ring.clone(), coeffs: ring.reduce(poly) }
    }

    /// Accepts a coefficient vector that must already be canonical.
    pub fn from_coeffs(ring: &Arc<CycRing>, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != ring.phi {
            return Err(Error::Schema(format!(
                "cyclotomic value needs {} coefficients, got {}",
                ring.phi,
                coeffs.len()
            )));
        }
        Ok(CycInt { ring: ring.clone(), coeffs })
    }

    pub fn ring(&self) -> &Arc<CycRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The integer value if this element lies in `Z`.
    pub fn as_integer(&self) -> Option<i64> {
        if self.coeffs.iter().skip(1).all(|&c| c == 0) {
            Some(self.coeffs.first().copied().unwrap_or(0))
        } else {
            None
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring.n == other.ring.n {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycInt { ring: self.ring.clone(), coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CycInt { ring: self.ring.clone(), coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let phi = self.ring.phi;
        if phi == 0 {
            return Ok(self.clone());
        }
        let mut prod = vec![0i64; 2 * phi - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        Ok(CycInt { ring: self.ring.clone(), coeffs: self.ring.reduce(prod) })
    }

    pub fn neg(&self) -> Self {
        CycInt { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, k: i64) -> Self {
        CycInt { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Complex conjugation, `ζ ↦ ζ^{n-1}`.
    pub fn conj(&self) -> Self {
        let n = self.ring.n;
        let mut v = vec![0i64; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            v[(n - i) % n] += c;
        }
        Self::from_poly(&self.ring, v)
    }

    /// Exact division by an integer; `None` unless every coefficient is divisible.
    pub fn div_exact(&self, k: i64) -> Option<Self> {
        if k == 0 || self.coeffs.iter().any(|c| c % k != 0) {
            return None;
        }
        Some(CycInt { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|c| c / k).collect() })
    }

    /// Image under the ring homomorphism `Z[ζ_n] → F_ℓ`, `ζ ↦ r`.
    pub fn eval_mod(&self, ell: u64, root: u64) -> Result<u64> {
        let n = self.ring.n as u64;
        if !is_prime(ell) || ell % n != 1 {
            return Err(Error::InvalidModulus(format!("{ell} is not a prime congruent to 1 mod {n}")));
        }
        let root = root % ell;
        let exact = pow_mod(root, n, ell) == 1
            && prime_factors(n).iter().all(|&f| pow_mod(root, n / f, ell) != 1);
        if !exact {
            return Err(Error::InvalidModulus(format!("{root} does not have order {n} mod {ell}")));
        }
        Ok(self.eval_mod_unchecked(ell, root))
    }

    /// [`CycInt::eval_mod`] without the precondition checks.
    pub fn eval_mod_unchecked(&self, ell: u64, root: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = mul_mod(acc, root, ell);
            acc = (acc + c.rem_euclid(ell as i64) as u64) % ell;
        }
        acc
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl std::ops::$tr<&CycInt> for &CycInt {
            type Output = CycInt;
            fn $method(self, rhs: &CycInt) -> CycInt {
                self.$checked(rhs).expect("cyclotomic operands from different rings")
            }
        }
        impl std::ops::$tr for CycInt {
            type Output = CycInt;
            fn $method(self, rhs: CycInt) -> CycInt {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl std::ops::Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt::neg(&self)
    }
}

/// An unreduced integer combination of `n`-th roots of unity, i.e. an element
/// of the group ring `Z[C_n]`. Products of Teichmüller sums are formed here
/// and reduced once at the end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSum {
    counts: Vec<i64>,
}

impl RootSum {
    pub fn zero(n: usize) -> Self {
        RootSum { counts: vec![0; n] }
    }

    pub fn constant(n: usize, c: i64) -> Self {
        let mut s = Self::zero(n);
        s.counts[0] = c;
        s
    }

    pub fn root(n: usize, exp: i64) -> Self {
        let mut s = Self::zero(n);
        s.add_root(exp, 1);
        s
    }

    pub fn add_root(&mut self, exp: i64, coeff: i64) {
        let n = self.counts.len() as i64;
        self.counts[exp.rem_euclid(n) as usize] += coeff;
    }

    pub fn mul(&self, other: &RootSum) -> RootSum {
        let n = self.counts.len();
        let mut out = vec![0i64; n];
        for (i, &a) in self.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.counts.iter().enumerate() {
                if b != 0 {
                    out[(i + j) % n] += a * b;
                }
            }
        }
        RootSum { counts: out }
    }

    pub fn scale(mut self, k: i64) -> RootSum {
        self.counts.iter_mut().for_each(|c| *c *= k);
        self
    }

    pub fn into_cyc(self, ring: &Arc<CycRing>) -> CycInt {
        CycInt::from_poly(ring, self.counts)
    }
}

/// An element of `l = F_{q^2}`: zero, or `gamma^t` with `t` reduced mod `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlElem(Option<u32>);

impl FlElem {
    pub const ZERO: FlElem = FlElem(None);

    pub fn is_zero(self) -> bool {
        self.0.is_none()
    }

    /// Discrete log to `gamma`, `None` for zero.
    pub fn dlog(self) -> Option<u32> {
        self.0
    }
}

impl fmt::Display for FlElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            None => write!(f, "0"),
            Some(t) => write!(f, "g^{t}"),
        }
    }
}

/// Arithmetic universe for one prime power `q = p^f`.
pub struct FieldCtx {
    p: u32,
    f: u32,
    q: u32,
    n: u32,
    modulus: Vec<u32>,
    gamma_index: u32,
    exp_table: Vec<u32>,
    log_table: Vec<u32>,
    zech: Vec<Option<u32>>,
    ring: Arc<CycRing>,
    ss_classes: Vec<SsClass>,
    pub(crate) brauer_basis: OnceLock<ModularBasis>,
    pub(crate) l_basis: OnceLock<ModularBasis>,
    pub(crate) jl_matrix: OnceLock<JlMatrix>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("f", &self.f)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .field("gamma", &self.gamma_index)
            .finish_non_exhaustive()
    }
}

/// Multiplies two elements of `F_p[x]/(modulus)` given as digit vectors.
fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let d = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * d - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] += x as u64 * y as u64;
        }
    }
    let p = p as u64;
    let mut prod: Vec<u64> = prod.into_iter().map(|c| c % p).collect();
    for i in (d..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (k, &m) in modulus[..d].iter().enumerate() {
            // subtract c * m, modulus is monic
            prod[i - d + k] = (prod[i - d + k] + (p - c) * m as u64) % p;
        }
    }
    prod.truncate(d);
    prod.into_iter().map(|c| c as u32).collect()
}

fn digits(mut idx: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for slot in out.iter_mut() {
        *slot = idx % p;
        idx /= p;
    }
    out
}

fn undigits(v: &[u32], p: u32) -> u32 {
    v.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic-normalised `b` over `F_p`; true iff zero.
fn divides(b: &[u32], a: &[u32], p: u32) -> bool {
    let p64 = p as u64;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db] as u64, p64).expect("nonzero leading coefficient");
    for i in (db..r.len()).rev() {
        let c = r[i] * lead_inv % p64;
        if c == 0 {
            continue;
        }
        for (k, &m) in b.iter().enumerate() {
            r[i - db + k] = (r[i - db + k] + (p64 - c) * m as u64 % p64) % p64;
        }
    }
    r.iter().all(|&c| c == 0)
}

/// First monic irreducible polynomial of degree `d` over `F_p`, enumerating
/// non-leading coefficient vectors in increasing base-`p` order (constant
/// term least significant). Irreducibility is by trial division.
fn first_irreducible(p: u32, d: usize) -> Vec<u32> {
    let total = (p as u64).pow(d as u32);
    for idx in 0..total {
        let mut cand = digits(idx as u32, p, d);
        cand.push(1);
        if cand[0] == 0 {
            continue;
        }
        let reducible = (1..=d / 2).any(|deg| {
            (0..(p as u64).pow(deg as u32)).any(|j| {
                let mut fac = digits(j as u32, p, deg);
                fac.push(1);
                divides(&fac, &cand, p)
            })
        });
        if !reducible {
            return cand;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FieldCtx {
    pub fn new(p: u32, f: u32) -> Result<Arc<FieldCtx>> {
        Self::with_bound(p, f, DEFAULT_Q_BOUND)
    }

    pub fn with_bound(p: u32, f: u32, q_bound: u32) -> Result<Arc<FieldCtx>> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if f == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u64).checked_pow(f).filter(|&q| q <= q_bound as u64).ok_or(
            Error::FieldTooLarge { p, f, bound: q_bound },
        )? as u32;
        let n = q * q - 1;
        let d = 2 * f as usize;
        let modulus = first_irreducible(p, d);

        let size = q * q;
        let n_factors = prime_factors(n as u64);
        let pow_elem = |base: &[u32], mut e: u64| {
            let mut acc = digits(1, p, d);
            let mut b = base.to_vec();
            while e > 0 {
                if e & 1 == 1 {
                    acc = poly_mulmod(&acc, &b, &modulus, p);
                }
                b = poly_mulmod(&b, &b, &modulus, p);
                e >>= 1;
            }
            acc
        };
        let one = digits(1, p, d);
        let gamma_index = (1..size)
            .find(|&idx| {
                let g = digits(idx, p, d);
                pow_elem(&g, n as u64) == one
                    && n_factors.iter().all(|&r| pow_elem(&g, n as u64 / r) != one)
            })
            .expect("the multiplicative group of a finite field is cyclic");
        let gamma = digits(gamma_index, p, d);

        let mut exp_table = Vec::with_capacity(n as usize);
        let mut log_table = vec![u32::MAX; size as usize];
        let mut cur = one.clone();
        for t in 0..n {
            let idx = undigits(&cur, p);
            exp_table.push(idx);
            log_table[idx as usize] = t;
            cur = poly_mulmod(&cur, &gamma, &modulus, p);
        }
        debug_assert_eq!(cur, one);

        // 1 + gamma^t: bump the constant coordinate
        let zech = (0..n)
            .map(|t| {
                let mut v = digits(exp_table[t as usize], p, d);
                v[0] = (v[0] + 1) % p;
                let idx = undigits(&v, p);
                (idx != 0).then(|| log_table[idx as usize])
            })
            .collect();

        let ring = CycRing::new(n as usize);
        let mut ctx = FieldCtx {
            p,
            f,
            q,
            n,
            modulus,
            gamma_index,
            exp_table,
            log_table,
            zech,
            ring,
            ss_classes: Vec::new(),
            brauer_basis: OnceLock::new(),
            l_basis: OnceLock::new(),
            jl_matrix: OnceLock::new(),
        };
        ctx.ss_classes = crate::classfn::build_ss_classes(&ctx);
        Ok(Arc::new(ctx))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `|l^×| = q^2 - 1`, also the order of `ζ`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Defining polynomial of `l` over `F_p`, constant term first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn ring(&self) -> &Arc<CycRing> {
        &self.ring
    }

    pub fn ss_classes(&self) -> &[SsClass] {
        &self.ss_classes
    }

    pub fn gamma(&self) -> FlElem {
        FlElem(Some(1 % self.n))
    }

    /// Generator `gamma^{q+1}` of `k^×`.
    pub fn gamma_k(&self) -> FlElem {
        FlElem(Some((self.q + 1) % self.n))
    }

    pub fn one(&self) -> FlElem {
        FlElem(Some(0))
    }

    pub fn gamma_pow(&self, t: i64) -> FlElem {
        FlElem(Some(t.rem_euclid(self.n as i64) as u32))
    }

    /// `gamma_k^t` as an element of `l`.
    pub fn gamma_k_pow(&self, t: i64) -> FlElem {
        self.gamma_pow(t * (self.q as i64 + 1))
    }

    /// Coordinates over `F_p` in the power basis of `l`, constant term first.
    pub fn coords(&self, x: FlElem) -> Vec<u32> {
        let idx = x.0.map_or(0, |t| self.exp_table[t as usize]);
        digits(idx, self.p, 2 * self.f as usize)
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<FlElem> {
        if coords.len() != 2 * self.f as usize || coords.iter().any(|&c| c >= self.p) {
            return Err(Error::Schema(format!("bad coordinate vector {coords:?}")));
        }
        let idx = undigits(coords, self.p);
        Ok(if idx == 0 { FlElem::ZERO } else { FlElem(Some(self.log_table[idx as usize])) })
    }

    /// The image of an integer in the prime field.
    pub fn from_int(&self, a: i64) -> FlElem {
        let r = a.rem_euclid(self.p as i64) as u32;
        if r == 0 {
            FlElem::ZERO
        } else {
            FlElem(Some(self.log_table[r as usize]))
        }
    }

    /// Zech logarithm: `gamma^{zech(t)} = 1 + gamma^t`, `None` when that sum is zero.
    pub fn zech(&self, t: u32) -> Option<u32> {
        self.zech[(t % self.n) as usize]
    }

    pub fn in_k(&self, x: FlElem) -> bool {
        x.0.is_none_or(|t| t % (self.q + 1) == 0)
    }

    /// Discrete log of an element of `k^×` relative to `gamma_k`.
    pub fn k_dlog(&self, x: FlElem) -> Option<u32> {
        x.0.filter(|t| t % (self.q + 1) == 0).map(|t| t / (self.q + 1))
    }

    pub fn add(&self, a: FlElem, b: FlElem) -> FlElem {
        match (a.0, b.0) {
            (None, _) => b,
            (_, None) => a,
            (Some(s), Some(t)) => {
                let diff = (t + self.n - s) % self.n;
                match self.zech[diff as usize] {
                    None => FlElem::ZERO,
                    Some(z) => FlElem(Some((s + z) % self.n)),
                }
            }
        }
    }

    pub fn neg(&self, a: FlElem) -> FlElem {
        // -1 = gamma^{n/2} in odd characteristic, 1 in characteristic 2
        let shift = if self.p == 2 { 0 } else { self.n / 2 };
        FlElem(a.0.map(|t| (t + shift) % self.n))
    }

    pub fn sub(&self, a: FlElem, b: FlElem) -> FlElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FlElem, b: FlElem) -> FlElem {
        match (a.0, b.0) {
            (Some(s), Some(t)) => FlElem(Some((s + t) % self.n)),
            _ => FlElem::ZERO,
        }
    }

    pub fn inv(&self, a: FlElem) -> Result<FlElem> {
        a.0.map(|t| FlElem(Some((self.n - t) % self.n))).ok_or(Error::ZeroInverse)
    }

    /// `a^e`; negative exponents need a nonzero base.
    pub fn pow(&self, a: FlElem, e: i64) -> Result<FlElem> {
        match a.0 {
            Some(t) => Ok(self.gamma_pow(t as i64 * e)),
            None if e > 0 => Ok(FlElem::ZERO),
            None if e == 0 => Ok(self.one()),
            None => Err(Error::ZeroInverse),
        }
    }

    /// `x ↦ x^q`.
    pub fn frobenius(&self, a: FlElem) -> FlElem {
        FlElem(a.0.map(|t| ((t as u64 * self.q as u64) % self.n as u64) as u32))
    }

    /// `N_{l/k}(x) = x^{q+1}`.
    pub fn norm(&self, a: FlElem) -> FlElem {
        FlElem(a.0.map(|t| ((t as u64 * (self.q as u64 + 1)) % self.n as u64) as u32))
    }

    /// `Tr_{l/k}(x) = x + x^q`.
    pub fn trace(&self, a: FlElem) -> FlElem {
        self.add(a, self.frobenius(a))
    }

    /// Teichmüller lift: `gamma^t ↦ ζ^t`.
    pub fn teich(&self, z: FlElem) -> Result<CycInt> {
        z.0.map(|t| CycInt::root_power(&self.ring, t as i64)).ok_or(Error::ZeroElement)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, z: FlElem) -> Option<u32> {
        z.0.map(|t| self.n / gcd(t, self.n))
    }
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials_small() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(15), vec![1, -1, 0, 1, -1, 1, 0, -1, 1]);
        assert_eq!(cyclotomic_polynomial(80).len() - 1, 32);
        assert_eq!(cyclotomic_polynomial(1023).len() - 1, 600);
    }

    #[test]
    fn field_ctx_examples() {
        let c = FieldCtx::new(3, 1).unwrap();
        assert_eq!((c.q(), c.n()), (3, 8));
        assert_eq!(c.gamma_k(), c.gamma_pow(4));
        assert_eq!(c.modulus(), &[1, 0, 1]);

        let c = FieldCtx::new(2, 2).unwrap();
        assert_eq!((c.q(), c.n()), (4, 15));

        let c = FieldCtx::new(3, 2).unwrap();
        assert_eq!((c.q(), c.n()), (9, 80));
        assert_eq!(c.order(c.gamma_k()), Some(8));
        assert_eq!(c.order(c.gamma()), Some(80));
    }

    #[test]
    fn field_ctx_errors() {
        assert!(matches!(FieldCtx::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(FieldCtx::new(3, 0), Err(Error::ZeroDegree)));
        assert!(matches!(FieldCtx::new(37, 1), Err(Error::FieldTooLarge { .. })));
        assert!(matches!(FieldCtx::new(2, 6), Err(Error::FieldTooLarge { .. })));
        assert!(FieldCtx::with_bound(37, 1, 40).is_ok());
    }

    #[test]
    fn fl_arith_examples_q3() {
        let c = FieldCtx::new(3, 1).unwrap();
        let g = c.gamma();
        assert_eq!(c.norm(g), c.gamma_pow(4));
        assert_eq!(c.gamma_pow(4), c.from_int(2));
        assert_eq!(c.frobenius(g), c.gamma_pow(3));
        assert_eq!(c.add(c.gamma_pow(0), c.gamma_pow(4)), FlElem::ZERO);
        assert!(matches!(c.inv(FlElem::ZERO), Err(Error::ZeroInverse)));
    }

    #[test]
    fn zech_table_invariant() {
        for (p, f) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2), (2, 3)] {
            let c = FieldCtx::new(p, f).unwrap();
            let mut missing = 0;
            for t in 0..c.n() {
                let lhs = c.zech(t).map(|z| c.gamma_pow(z as i64));
                let sum = {
                    let mut v = c.coords(c.gamma_pow(t as i64));
                    v[0] = (v[0] + 1) % p;
                    c.from_coords(&v).unwrap()
                };
                match lhs {
                    Some(x) => assert_eq!(x, sum),
                    None => {
                        missing += 1;
                        assert!(sum.is_zero());
                    }
                }
            }
            assert_eq!(missing, 1);
        }
    }

    #[test]
    fn teich_examples_q3() {
        let c = FieldCtx::new(3, 1).unwrap();
        let r = c.ring();
        assert_eq!(c.teich(c.one()).unwrap(), CycInt::from_int(r, 1));
        assert_eq!(c.teich(c.gamma()).unwrap().coeffs(), &[0, 1, 0, 0]);
        assert_eq!(c.teich(c.from_int(2)).unwrap(), CycInt::from_int(r, -1));
        assert!(matches!(c.teich(FlElem::ZERO), Err(Error::ZeroElement)));
    }

    #[test]
    fn cyc_arith_examples() {
        let r = CycRing::new(8);
        let z = CycInt::root_power(&r, 1);
        let zbar = CycInt::root_power(&r, 7);
        assert_eq!(&z * &zbar, CycInt::from_int(&r, 1));
        assert!((&z + &z.neg()).is_zero());
        let sum = CycInt::root_power(&r, 2) + CycInt::root_power(&r, 6);
        assert!(sum.is_zero());
        let other = CycInt::root_power(&CycRing::new(15), 1);
        assert!(matches!(z.checked_add(&other), Err(Error::ContextMismatch)));
    }

    #[test]
    fn eval_mod_examples() {
        let r = CycRing::new(8);
        let one = CycInt::from_int(&r, 1);
        assert_eq!(one.eval_mod(17, 2).unwrap(), 1);
        let mut phi_poly = vec![0i64; 5];
        phi_poly.copy_from_slice(r.modulus());
        assert_eq!(CycInt::from_poly(&r, phi_poly).eval_mod(17, 2).unwrap(), 0);
        let s = CycInt::root_power(&r, 1) + CycInt::root_power(&r, 3);
        let sq = &s * &s;
        let lhs = (pow_mod(s.eval_mod(17, 2).unwrap(), 2, 17) + 2) % 17;
        assert_eq!(lhs, 0);
        assert_eq!((sq + CycInt::from_int(&r, 2)).eval_mod(17, 2).unwrap(), 0);
        assert!(one.eval_mod(19, 2).is_err());
        assert!(one.eval_mod(17, 4).is_err());
    }

    #[test]
    fn eval_primes_are_valid() {
        let r = CycRing::new(80);
        for (ell, root) in r.eval_primes(3) {
            assert!(CycInt::root_power(&r, 1).eval_mod(ell, root).is_ok());
        }
    }
}
