//! Ordinary characters of `GL2(k)`, irreducible Brauer characters of `GL2(k)`
//! and `l^×`, the reductions `F_λ`, `F^D_λ` of algebraic representations, and
//! decomposition of class functions into Brauer-irreducible coordinates.
//!
//! A reduction mod `p` followed by semisimplification is modelled by
//! restricting the ordinary character to the `p`-regular classes. No matrix
//! representation is ever built.
//!
//! Character exponents: a character of `k^×` is an exponent `m` mod `q - 1`
//! with `gamma_k^t ↦ ζ^{(q+1)mt}`; a character of `l^×` is an exponent `e`
//! mod `n` with `gamma^t ↦ ζ^{et}`. With eigenvalue discrete logs taken
//! relative to `gamma`, both become `ζ^{exponent * dlog}`.

pub mod oracle;

use std::fmt;

use rayon::prelude::*;

use crate::classfn::{ClassFn, Group, SsClass};
use crate::error::{Error, Result};
use crate::jl::GrothElt;
use crate::scalars::{inv_mod, mul_mod, pow_mod, CycInt, FieldCtx, RootSum};

/// An irreducible ordinary character of `GL2(k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrdChar {
    /// `ψ ∘ det`, `ψ` a character of `k^×`.
    DetTwist(u32),
    /// `sp_ψ`, the Steinberg representation twisted by `ψ ∘ det`.
    SteinbergTwist(u32),
    /// Induced from the Borel character `ψ₁ ⊗ ψ₂`, `ψ₁ ≠ ψ₂`.
    PrincipalSeries(u32, u32),
    /// `Θ(ψ)`, `ψ` a character of `l^×` not factoring through the norm.
    Cuspidal(u32),
}

impl fmt::Display for OrdChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdChar::DetTwist(m) => write!(f, "det^{m}"),
            OrdChar::SteinbergTwist(m) => write!(f, "sp[{m}]"),
            OrdChar::PrincipalSeries(a, b) => write!(f, "ps[{a},{b}]"),
            OrdChar::Cuspidal(e) => write!(f, "theta[{e}]"),
        }
    }
}

impl OrdChar {
    /// Checks the defining constraints and reduces exponents.
    pub fn validate(self, ctx: &FieldCtx) -> Result<OrdChar> {
        let km = ctx.q() - 1;
        Ok(match self {
            OrdChar::DetTwist(m) => OrdChar::DetTwist(m % km),
            OrdChar::SteinbergTwist(m) => OrdChar::SteinbergTwist(m % km),
            OrdChar::PrincipalSeries(a, b) => {
                if a % km == b % km {
                    return Err(Error::EqualCharacters);
                }
                OrdChar::PrincipalSeries(a % km, b % km)
            }
            OrdChar::Cuspidal(e) => {
                let e = e % ctx.n();
                if e.is_multiple_of(ctx.q() + 1) {
                    return Err(Error::FactorsThroughNorm(e));
                }
                OrdChar::Cuspidal(e)
            }
        })
    }

    pub fn dimension(self, q: u32) -> u32 {
        match self {
            OrdChar::DetTwist(_) => 1,
            OrdChar::SteinbergTwist(_) => q,
            OrdChar::PrincipalSeries(..) => q + 1,
            OrdChar::Cuspidal(_) => q - 1,
        }
    }

    /// Value at a class with eigenvalue discrete logs `(a, b)`.
    fn root_sum(self, ctx: &FieldCtx, class: &SsClass) -> RootSum {
        let n = ctx.n() as usize;
        let q = ctx.q() as i64;
        let (a, b) = class.eigen_dlogs(ctx);
        let (a, b) = (a as i64, b as i64);
        let mut s = RootSum::zero(n);
        match (self, class) {
            (OrdChar::DetTwist(m), _) => s.add_root(m as i64 * (a + b), 1),
            (OrdChar::SteinbergTwist(m), c) => {
                let coeff = match c {
                    SsClass::Central { .. } => q,
                    SsClass::Split { .. } => 1,
                    SsClass::Elliptic { .. } => -1,
                };
                s.add_root(m as i64 * (a + b), coeff);
            }
            (OrdChar::PrincipalSeries(m1, m2), c) => {
                let (m1, m2) = (m1 as i64, m2 as i64);
                match c {
                    SsClass::Central { .. } => s.add_root((m1 + m2) * a, q + 1),
                    SsClass::Split { .. } => {
                        s.add_root(m1 * a + m2 * b, 1);
                        s.add_root(m1 * b + m2 * a, 1);
                    }
                    SsClass::Elliptic { .. } => {}
                }
            }
            (OrdChar::Cuspidal(e), c) => {
                let e = e as i64;
                match c {
                    SsClass::Central { .. } => s.add_root(e * a, q - 1),
                    SsClass::Split { .. } => {}
                    SsClass::Elliptic { .. } => {
                        s.add_root(e * a, -1);
                        s.add_root(e * b, -1);
                    }
                }
            }
        }
        s
    }
}

/// The character of an irreducible ordinary representation on the semisimple classes.
pub fn ordinary_char(ctx: &FieldCtx, c: OrdChar) -> Result<ClassFn> {
    let c = c.validate(ctx)?;
    Ok(ClassFn::gl2(ctx, |class| c.root_sum(ctx, class).into_cyc(ctx.ring())))
}

/// One value of [`ordinary_char`].
pub fn ordinary_char_at(ctx: &FieldCtx, c: OrdChar, class: &SsClass) -> Result<CycInt> {
    Ok(c.validate(ctx)?.root_sum(ctx, class).into_cyc(ctx.ring()))
}

/// Every irreducible ordinary character of `GL2(k)`: determinant twists,
/// Steinberg twists, principal series with `ψ₁ < ψ₂`, cuspidal with the
/// smaller exponent of each Frobenius pair.
pub fn all_ordinary_chars(ctx: &FieldCtx) -> Vec<OrdChar> {
    let km = ctx.q() - 1;
    let mut out: Vec<OrdChar> = (0..km).map(OrdChar::DetTwist).collect();
    out.extend((0..km).map(OrdChar::SteinbergTwist));
    for a in 0..km {
        out.extend((a + 1..km).map(|b| OrdChar::PrincipalSeries(a, b)));
    }
    out.extend(cuspidal_exponents(ctx).into_iter().map(OrdChar::Cuspidal));
    out
}

/// Canonical exponents of `l^×` characters not factoring through the norm,
/// one per Frobenius orbit.
pub fn cuspidal_exponents(ctx: &FieldCtx) -> Vec<u32> {
    (0..ctx.n()).filter(|&e| e % (ctx.q() + 1) != 0 && frob_exp(ctx, e) > e).collect()
}

/// `e ↦ eq mod n`: the exponent of `ψ ∘ frobenius`.
pub fn frob_exp(ctx: &FieldCtx, e: u32) -> u32 {
    ((e as u64 * ctx.q() as u64) % ctx.n() as u64) as u32
}

/// Label of an irreducible mod `p` representation
/// `⊗_j Sym^{r_j}^{(j)} ⊗ det^m` of `GL2(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerIrredLabel {
    pub r: Vec<u32>,
    pub m: u32,
}

impl fmt::Display for BrauerIrredLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r: Vec<String> = self.r.iter().map(u32::to_string).collect();
        write!(f, "(r={}, m={})", r.join(","), self.m)
    }
}

impl BrauerIrredLabel {
    pub fn new(r: Vec<u32>, m: u32) -> Self {
        BrauerIrredLabel { r, m }
    }

    pub fn validate(&self, ctx: &FieldCtx) -> Result<()> {
        if self.r.len() != ctx.f() as usize || self.r.iter().any(|&r| r >= ctx.p()) || self.m >= ctx.q() - 1 {
            return Err(Error::LabelOutOfRange(format!("{self} for q = {}", ctx.q())));
        }
        Ok(())
    }

    pub fn dimension(&self) -> u32 {
        self.r.iter().map(|r| r + 1).product()
    }
}

/// All `q(q-1)` labels, ordered by `r` (lexicographic, `r_0` first) then `m`.
pub fn gl2_labels(ctx: &FieldCtx) -> Vec<BrauerIrredLabel> {
    let (p, f) = (ctx.p(), ctx.f() as usize);
    let mut out = Vec::with_capacity((ctx.q() * (ctx.q() - 1)) as usize);
    for idx in 0..ctx.q() {
        let mut r = vec![0u32; f];
        let mut x = idx;
        for j in (0..f).rev() {
            r[j] = x % p;
            x /= p;
        }
        out.extend((0..ctx.q() - 1).map(|m| BrauerIrredLabel { r: r.clone(), m }));
    }
    out
}

/// Position of a label in [`gl2_labels`] order.
pub fn gl2_label_index(ctx: &FieldCtx, label: &BrauerIrredLabel) -> Result<usize> {
    label.validate(ctx)?;
    let idx = label.r.iter().fold(0u32, |acc, &r| acc * ctx.p() + r);
    Ok((idx * (ctx.q() - 1) + label.m) as usize)
}

/// Teichmüller sum `Σ_{i=0}^{d} ζ^{w (i a + (d - i) b)}` of `Sym^d` at
/// eigenvalues `gamma^a`, `gamma^b`, Frobenius-twisted by `w = p^j`.
fn sym_trace(n: usize, d: u32, a: i64, b: i64, w: i64) -> RootSum {
    let mut s = RootSum::zero(n);
    for i in 0..=d as i64 {
        s.add_root(w * (i * a + (d as i64 - i) * b), 1);
    }
    s
}

fn brauer_root_sum(ctx: &FieldCtx, label: &BrauerIrredLabel, a: i64, b: i64) -> RootSum {
    let n = ctx.n() as usize;
    let mut acc = RootSum::root(n, label.m as i64 * (a + b));
    let mut w = 1i64;
    for &r in &label.r {
        if r > 0 {
            acc = acc.mul(&sym_trace(n, r, a, b, w));
        }
        w *= ctx.p() as i64;
    }
    acc
}

/// Brauer character of the irreducible representation with the given label.
pub fn brauer_irred(ctx: &FieldCtx, label: &BrauerIrredLabel) -> Result<ClassFn> {
    label.validate(ctx)?;
    Ok(ClassFn::gl2(ctx, |class| {
        let (a, b) = class.eigen_dlogs(ctx);
        brauer_root_sum(ctx, label, a as i64, b as i64).into_cyc(ctx.ring())
    }))
}

/// The character `gamma^t ↦ ζ^{et}` of `l^×`.
pub fn l_character(ctx: &FieldCtx, e: u32) -> ClassFn {
    let e = (e % ctx.n()) as i64;
    ClassFn::lx(ctx, |t| CycInt::root_power(ctx.ring(), e * t as i64))
}

/// A highest weight: for each residue embedding `j`, a multiset of pairs
/// `a₁ ≥ a₂`. All embeddings carry the same number of pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pairs: Vec<Vec<(i64, i64)>>,
}

impl Weight {
    pub fn new(pairs: Vec<Vec<(i64, i64)>>) -> Result<Self> {
        let e = pairs.first().map_or(0, Vec::len);
        if e == 0 {
            return Err(Error::MalformedWeight("every embedding needs at least one pair".into()));
        }
        if pairs.iter().any(|v| v.len() != e) {
            return Err(Error::MalformedWeight("embeddings carry different numbers of pairs".into()));
        }
        if let Some((a1, a2)) = pairs.iter().flatten().find(|(a1, a2)| a1 < a2) {
            return Err(Error::MalformedWeight(format!("pair ({a1}, {a2}) is not dominant")));
        }
        Ok(Weight { pairs })
    }

    /// One pair per embedding.
    pub fn simple(pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&p| vec![p]).collect())
    }

    pub fn zero(f: u32) -> Self {
        Weight { pairs: vec![vec![(0, 0)]; f as usize] }
    }

    /// From `(j, a₁, a₂)` triples.
    pub fn from_triples(f: u32, triples: &[(u32, i64, i64)]) -> Result<Self> {
        let mut pairs = vec![Vec::new(); f as usize];
        for &(j, a1, a2) in triples {
            pairs
                .get_mut(j as usize)
                .ok_or_else(|| Error::MalformedWeight(format!("embedding {j} out of range for f = {f}")))?
                .push((a1, a2));
        }
        Self::new(pairs)
    }

    pub fn triples(&self) -> Vec<(u32, i64, i64)> {
        self.pairs
            .iter()
            .enumerate()
            .flat_map(|(j, v)| v.iter().map(move |&(a1, a2)| (j as u32, a1, a2)))
            .collect()
    }

    pub fn embeddings(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pairs.iter().flatten().all(|&(a1, a2)| a1 == 0 && a2 == 0)
    }

    fn check(&self, ctx: &FieldCtx) -> Result<()> {
        if self.pairs.len() != ctx.f() as usize {
            return Err(Error::MalformedWeight(format!(
                "weight has {} embeddings, field has f = {}",
                self.pairs.len(),
                ctx.f()
            )));
        }
        Ok(())
    }

    fn root_sum(&self, ctx: &FieldCtx, a: i64, b: i64) -> RootSum {
        let n = ctx.n() as usize;
        let mut acc = RootSum::constant(n, 1);
        let mut w = 1i64;
        for pairs in &self.pairs {
            for &(a1, a2) in pairs {
                let mut factor = sym_trace(n, (a1 - a2) as u32, a, b, w);
                factor = factor.mul(&RootSum::root(n, w * a2 * (a + b)));
                acc = acc.mul(&factor);
            }
            w *= ctx.p() as i64;
        }
        acc
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.triples().iter().map(|(j, a1, a2)| format!("{j}:({a1},{a2})")).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Brauer character of `F_λ` on `GL2(k)`.
pub fn f_lambda(ctx: &FieldCtx, weight: &Weight) -> Result<ClassFn> {
    weight.check(ctx)?;
    Ok(ClassFn::gl2(ctx, |class| {
        let (a, b) = class.eigen_dlogs(ctx);
        weight.root_sum(ctx, a as i64, b as i64).into_cyc(ctx.ring())
    }))
}

/// One value of [`f_lambda`].
pub fn f_lambda_at(ctx: &FieldCtx, weight: &Weight, class: &SsClass) -> Result<CycInt> {
    weight.check(ctx)?;
    let (a, b) = class.eigen_dlogs(ctx);
    Ok(weight.root_sum(ctx, a as i64, b as i64).into_cyc(ctx.ring()))
}

/// Brauer character of `F^D_λ` on `l^×`: eigenvalues `z`, `z^q`.
pub fn f_lambda_d(ctx: &FieldCtx, weight: &Weight) -> Result<ClassFn> {
    weight.check(ctx)?;
    Ok(ClassFn::lx(ctx, |t| f_lambda_d_value(ctx, weight, t)))
}

/// One value of [`f_lambda_d`], at `gamma^t`.
pub fn f_lambda_d_at(ctx: &FieldCtx, weight: &Weight, t: u32) -> Result<CycInt> {
    weight.check(ctx)?;
    Ok(f_lambda_d_value(ctx, weight, t % ctx.n()))
}

fn f_lambda_d_value(ctx: &FieldCtx, weight: &Weight, t: u32) -> CycInt {
    let tq = (t as u64 * ctx.q() as u64 % ctx.n() as u64) as i64;
    weight.root_sum(ctx, t as i64, tq).into_cyc(ctx.ring())
}

/// Inverse of the evaluated basis matrix modulo one split prime.
#[derive(Debug)]
struct PrimeInverse {
    ell: u64,
    root: u64,
    /// `inverse[label][class]`
    inverse: Vec<Vec<u64>>,
}

/// Where the exact basis values come from. They are regenerated on demand;
/// only their reductions modulo split primes are kept.
#[derive(Debug)]
enum BasisSource {
    Brauer(Vec<BrauerIrredLabel>),
    LCharacters,
}

/// A basis of a class-function ring together with the data to find integer
/// coordinates: evaluation at split primes, a solve mod each prime, CRT with a
/// symmetric lift, then exact verification in `Z[ζ]`.
#[derive(Debug)]
pub struct ModularBasis {
    group: Group,
    size: usize,
    source: BasisSource,
    primes: Vec<PrimeInverse>,
}

const DECOMPOSE_PRIMES: usize = 2;

/// Gauss–Jordan inverse mod a prime; `None` if singular.
pub(crate) fn invert_mod(mut a: Vec<Vec<u64>>, ell: u64) -> Option<Vec<Vec<u64>>> {
    let n = a.len();
    let mut inv: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let s = inv_mod(a[col][col], ell)?;
        for j in 0..n {
            a[col][j] = mul_mod(a[col][j], s, ell);
            inv[col][j] = mul_mod(inv[col][j], s, ell);
        }
        for r in 0..n {
            if r == col || a[r][col] == 0 {
                continue;
            }
            let factor = a[r][col];
            for j in 0..n {
                a[r][j] = (a[r][j] + ell - mul_mod(factor, a[col][j], ell)) % ell;
                inv[r][j] = (inv[r][j] + ell - mul_mod(factor, inv[col][j], ell)) % ell;
            }
        }
    }
    Some(inv)
}

/// Rank of a matrix mod a prime.
pub(crate) fn rank_mod(mut a: Vec<Vec<u64>>, ell: u64) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, pivot);
        let s = inv_mod(a[rank][col], ell).expect("nonzero pivot mod a prime");
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below.iter_mut().take(rows - rank - 1) {
            if row[col] == 0 {
                continue;
            }
            let factor = mul_mod(row[col], s, ell);
            for (x, &y) in row[col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                *x = (*x + ell - mul_mod(factor, y, ell)) % ell;
            }
        }
        rank += 1;
    }
    rank
}

impl ModularBasis {
    /// The irreducible Brauer characters in [`gl2_labels`] order.
    pub fn brauer(ctx: &FieldCtx) -> Result<Self> {
        let labels = gl2_labels(ctx);
        let size = labels.len();
        let mut primes = Vec::with_capacity(DECOMPOSE_PRIMES);
        let mut skip = 0;
        while primes.len() < DECOMPOSE_PRIMES {
            // a handful of unlucky primes at most; give up after many
            if skip > 64 {
                return Err(Error::SingularMatrix);
            }
            let (ell, root) = ctx.ring().eval_primes_from(skip, 1)[0];
            skip += 1;
            // cols[label][class]
            let cols: Vec<Vec<u64>> = labels
                .par_iter()
                .map(|l| {
                    let chi = brauer_irred(ctx, l)?;
                    Ok(chi.values().iter().map(|v| v.eval_mod_unchecked(ell, root)).collect())
                })
                .collect::<Result<_>>()?;
            let matrix: Vec<Vec<u64>> = (0..size).map(|c| (0..size).map(|l| cols[l][c]).collect()).collect();
            if let Some(inverse) = invert_mod(matrix, ell) {
                primes.push(PrimeInverse { ell, root, inverse });
            }
        }
        Ok(ModularBasis { group: Group::Gl2, size, source: BasisSource::Brauer(labels), primes })
    }

    /// The characters of the cyclic group `l^×`; the inverse of the
    /// character table is written down directly.
    pub fn l_characters(ctx: &FieldCtx) -> Self {
        let n = ctx.n() as usize;
        let primes = ctx
            .ring()
            .eval_primes(DECOMPOSE_PRIMES)
            .into_iter()
            .map(|(ell, root)| {
                let n_inv = inv_mod(n as u64, ell).expect("n is invertible mod a prime 1 mod n");
                let root_inv = inv_mod(root, ell).expect("roots of unity are units");
                let inverse = (0..n as u64)
                    .map(|e| (0..n as u64).map(|t| mul_mod(n_inv, pow_mod(root_inv, e * t, ell), ell)).collect())
                    .collect();
                PrimeInverse { ell, root, inverse }
            })
            .collect();
        ModularBasis { group: Group::Lx, size: n, source: BasisSource::LCharacters, primes }
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Exact values of basis element `idx`.
    pub fn basis_element(&self, ctx: &FieldCtx, idx: usize) -> ClassFn {
        match &self.source {
            BasisSource::Brauer(labels) => brauer_irred(ctx, &labels[idx]).expect("stored labels are valid"),
            BasisSource::LCharacters => l_character(ctx, idx as u32),
        }
    }

    /// Integer coordinates of `chi`.
    pub fn coordinates(&self, ctx: &FieldCtx, chi: &ClassFn) -> Result<Vec<i64>> {
        if chi.group() != self.group {
            return Err(Error::GroupMismatch);
        }
        let residues: Vec<Vec<u64>> = self
            .primes
            .iter()
            .map(|pi| {
                let x: Vec<u64> = chi.values().iter().map(|v| v.eval_mod_unchecked(pi.ell, pi.root)).collect();
                pi.inverse
                    .iter()
                    .map(|row| row.iter().zip(&x).fold(0u64, |acc, (&a, &b)| (acc + mul_mod(a, b, pi.ell)) % pi.ell))
                    .collect()
            })
            .collect();
        let mut coords = Vec::with_capacity(self.size);
        for label in 0..self.size {
            let (mut value, mut modulus) = (0i128, 1i128);
            for (pi, res) in self.primes.iter().zip(&residues) {
                let ell = pi.ell as i128;
                // value + modulus * t ≡ res (mod ell)
                let inv = inv_mod((modulus % ell) as u64, pi.ell).expect("distinct primes") as i128;
                let t = ((res[label] as i128 - value).rem_euclid(ell) * inv).rem_euclid(ell);
                value += modulus * t;
                modulus *= ell;
            }
            if value > modulus / 2 {
                value -= modulus;
            }
            coords.push(i64::try_from(value).map_err(|_| Error::NotInLattice)?);
        }
        if self.combine(ctx, &coords).as_slice() != chi.values() {
            return Err(Error::NotInLattice);
        }
        Ok(coords)
    }

    /// `Σ coords[σ] · basis[σ]`, class by class.
    pub fn combine(&self, ctx: &FieldCtx, coords: &[i64]) -> Vec<CycInt> {
        let ring = ctx.ring();
        let classes = self.group.class_count(ctx);
        let mut acc = vec![vec![0i64; ring.rank()]; classes];
        for (label, &k) in coords.iter().enumerate().filter(|(_, &k)| k != 0) {
            let element = self.basis_element(ctx, label);
            for (slot, v) in acc.iter_mut().zip(element.values()) {
                for (s, &x) in slot.iter_mut().zip(v.coeffs()) {
                    *s += k * x;
                }
            }
        }
        acc.into_iter().map(|c| CycInt::from_coeffs(ring, c).expect("length matches the ring rank")).collect()
    }
}

/// The irreducible Brauer characters of `GL2(k)` in [`gl2_labels`] order, cached per context.
pub fn brauer_basis(ctx: &FieldCtx) -> &ModularBasis {
    ctx.brauer_basis
        .get_or_init(|| ModularBasis::brauer(ctx).expect("irreducible Brauer characters are linearly independent"))
}

/// The characters of `l^×` ordered by exponent, cached per context.
pub fn l_basis(ctx: &FieldCtx) -> &ModularBasis {
    ctx.l_basis.get_or_init(|| ModularBasis::l_characters(ctx))
}

pub fn basis_for(ctx: &FieldCtx, group: Group) -> &ModularBasis {
    match group {
        Group::Gl2 => brauer_basis(ctx),
        Group::Lx => l_basis(ctx),
    }
}

/// Coordinates of a class function over the irreducible Brauer characters of its group.
pub fn decompose(ctx: &FieldCtx, chi: &ClassFn) -> Result<GrothElt> {
    if chi.q() != ctx.q() {
        return Err(Error::ContextMismatch);
    }
    let coords = basis_for(ctx, chi.group()).coordinates(ctx, chi)?;
    Ok(GrothElt::new(ctx, chi.group(), coords).expect("coordinate vector has basis length"))
}

/// The Brauer character of a Grothendieck-group element.
pub fn recombine(ctx: &FieldCtx, v: &GrothElt) -> Result<ClassFn> {
    if v.q() != ctx.q() {
        return Err(Error::ContextMismatch);
    }
    let values = basis_for(ctx, v.group()).combine(ctx, v.coeffs());
    ClassFn::from_values(ctx, v.group(), values)
}
