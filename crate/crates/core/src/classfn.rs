//! Semisimple conjugacy classes of `GL2(k)`, elements of `l^×`, and the
//! class-function rings on them.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalars::{CycInt, FieldCtx, FlElem};

/// A semisimple class of `GL2(k)`.
///
/// `Central` and `Split` carry discrete logs relative to `gamma_k`;
/// `Elliptic` carries the canonical discrete log `min(t, tq mod n)` of an
/// eigenvalue relative to `gamma`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SsClass {
    Central { x: u32 },
    Split { x: u32, y: u32 },
    Elliptic { z: u32 },
}

impl SsClass {
    /// Discrete logs (relative to `gamma`) of the two eigenvalues.
    pub fn eigen_dlogs(&self, ctx: &FieldCtx) -> (u32, u32) {
        let k = ctx.q() + 1;
        match *self {
            SsClass::Central { x } => (x * k, x * k),
            SsClass::Split { x, y } => (x * k, y * k),
            SsClass::Elliptic { z } => (z, frob_dlog(ctx, z)),
        }
    }

    pub fn size(&self, q: u32) -> u64 {
        let q = q as u64;
        match self {
            SsClass::Central { .. } => 1,
            SsClass::Split { .. } => q * (q + 1),
            SsClass::Elliptic { .. } => q * q - q,
        }
    }
}

impl fmt::Display for SsClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SsClass::Central { x } => write!(f, "central(gk^{x})"),
            SsClass::Split { x, y } => write!(f, "split(gk^{x}, gk^{y})"),
            SsClass::Elliptic { z } => write!(f, "elliptic(g^{z})"),
        }
    }
}

fn frob_dlog(ctx: &FieldCtx, t: u32) -> u32 {
    ((t as u64 * ctx.q() as u64) % ctx.n() as u64) as u32
}

/// Canonical representative of `{t, tq mod n}`.
pub fn canonical_elliptic(ctx: &FieldCtx, t: u32) -> u32 {
    let t = t % ctx.n();
    t.min(frob_dlog(ctx, t))
}

pub(crate) fn build_ss_classes(ctx: &FieldCtx) -> Vec<SsClass> {
    let q = ctx.q();
    let mut out = Vec::with_capacity((q * (q - 1)) as usize);
    out.extend((0..q - 1).map(|x| SsClass::Central { x }));
    for x in 0..q - 1 {
        out.extend((x + 1..q - 1).map(|y| SsClass::Split { x, y }));
    }
    out.extend(
        (0..ctx.n())
            .filter(|t| t % (q + 1) != 0 && canonical_elliptic(ctx, *t) == *t)
            .map(|z| SsClass::Elliptic { z }),
    );
    out
}

/// The semisimple classes of `GL2(k)` in canonical order: central by
/// discrete log, split lexicographically, elliptic by representative.
pub fn enumerate_ss_classes(ctx: &FieldCtx) -> Vec<SsClass> {
    ctx.ss_classes().to_vec()
}

/// The elements of `l^×` ordered by discrete log.
pub fn enumerate_l_classes(ctx: &FieldCtx) -> Vec<FlElem> {
    (0..ctx.n()).map(|t| ctx.gamma_pow(t as i64)).collect()
}

/// Position of a class in [`enumerate_ss_classes`] order.
pub fn class_index(ctx: &FieldCtx, class: &SsClass) -> Option<usize> {
    ctx.ss_classes().binary_search(class).ok()
}

/// A conjugacy class of `GL2(k)` including the non-semisimple ones, used only
/// by the brute-force oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FullClass {
    Semisimple(SsClass),
    /// `x` times a nontrivial unipotent, `x` a discrete log relative to `gamma_k`.
    NonSemisimple { x: u32 },
}

impl FullClass {
    pub fn size(&self, q: u32) -> u64 {
        match self {
            FullClass::Semisimple(c) => c.size(q),
            FullClass::NonSemisimple { .. } => q as u64 * q as u64 - 1,
        }
    }
}

/// Every conjugacy class of `GL2(k)`: the semisimple ones in canonical order
/// followed by the non-semisimple ones.
pub fn enumerate_full_classes(ctx: &FieldCtx) -> Vec<FullClass> {
    ctx.ss_classes()
        .iter()
        .map(|c| FullClass::Semisimple(*c))
        .chain((0..ctx.q() - 1).map(|x| FullClass::NonSemisimple { x }))
        .collect()
}

pub fn group_order(q: u32) -> u64 {
    let q = q as u64;
    (q * q - 1) * (q * q - q)
}

/// A 2×2 matrix over `k`, row major.
pub type Mat2 = [[FlElem; 2]; 2];

pub fn mat_det(ctx: &FieldCtx, m: &Mat2) -> FlElem {
    ctx.sub(ctx.mul(m[0][0], m[1][1]), ctx.mul(m[0][1], m[1][0]))
}

pub fn mat_mul(ctx: &FieldCtx, a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| ctx.add(ctx.mul(a[i][0], b[0][j]), ctx.mul(a[i][1], b[1][j]));
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn mat_inv(ctx: &FieldCtx, m: &Mat2) -> Result<Mat2> {
    let d = ctx.inv(mat_det(ctx, m)).map_err(|_| Error::SingularMatrix)?;
    Ok([
        [ctx.mul(d, m[1][1]), ctx.mul(d, ctx.neg(m[0][1]))],
        [ctx.mul(d, ctx.neg(m[1][0])), ctx.mul(d, m[0][0])],
    ])
}

/// A matrix in the given class.
pub fn representative(ctx: &FieldCtx, class: &FullClass) -> Mat2 {
    let z = FlElem::ZERO;
    match *class {
        FullClass::Semisimple(SsClass::Central { x }) => {
            let a = ctx.gamma_k_pow(x as i64);
            [[a, z], [z, a]]
        }
        FullClass::Semisimple(SsClass::Split { x, y }) => {
            [[ctx.gamma_k_pow(x as i64), z], [z, ctx.gamma_k_pow(y as i64)]]
        }
        FullClass::Semisimple(SsClass::Elliptic { z: t }) => {
            // companion matrix of X^2 - Tr(w) X + N(w)
            let w = ctx.gamma_pow(t as i64);
            [[z, ctx.neg(ctx.norm(w))], [ctx.one(), ctx.trace(w)]]
        }
        FullClass::NonSemisimple { x } => {
            let a = ctx.gamma_k_pow(x as i64);
            [[a, ctx.one()], [z, a]]
        }
    }
}

/// All of `GL2(k)`; `q^4` candidates are scanned.
pub fn gl2_elements(ctx: &FieldCtx) -> Vec<Mat2> {
    let k_elems: Vec<FlElem> = std::iter::once(FlElem::ZERO)
        .chain((0..ctx.q() - 1).map(|t| ctx.gamma_k_pow(t as i64)))
        .collect();
    let mut out = Vec::with_capacity(group_order(ctx.q()) as usize);
    for &a in &k_elems {
        for &b in &k_elems {
            for &c in &k_elems {
                for &d in &k_elems {
                    let m = [[a, b], [c, d]];
                    if !mat_det(ctx, &m).is_zero() {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// Conjugacy class of an invertible matrix over `k`, read off from its
/// characteristic polynomial and diagonalisability.
pub fn class_of(ctx: &FieldCtx, m: &Mat2) -> Result<FullClass> {
    if m.iter().flatten().any(|&e| !ctx.in_k(e)) {
        return Err(Error::NotInK);
    }
    let det = mat_det(ctx, m);
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let tr = ctx.add(m[0][0], m[1][1]);
    let roots: Vec<u32> = (0..ctx.n())
        .filter(|&t| {
            let w = ctx.gamma_pow(t as i64);
            let val = ctx.add(ctx.sub(ctx.mul(w, w), ctx.mul(tr, w)), det);
            val.is_zero()
        })
        .collect();
    let q1 = ctx.q() + 1;
    match roots.as_slice() {
        [r] => {
            let x = r / q1;
            let scalar = m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1];
            Ok(if scalar {
                FullClass::Semisimple(SsClass::Central { x })
            } else {
                FullClass::NonSemisimple { x }
            })
        }
        [r, s] if r % q1 == 0 && s % q1 == 0 => {
            let (a, b) = (r / q1, s / q1);
            Ok(FullClass::Semisimple(SsClass::Split { x: a.min(b), y: a.max(b) }))
        }
        [r, _] => Ok(FullClass::Semisimple(SsClass::Elliptic { z: canonical_elliptic(ctx, *r) })),
        _ => unreachable!("a quadratic over a field has at most two roots"),
    }
}

/// Which group a class function or Grothendieck element lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    /// `GL2(k)`, on its semisimple classes.
    Gl2,
    /// `l^×`.
    Lx,
}

impl Group {
    pub fn tag(self) -> &'static str {
        match self {
            Group::Gl2 => "GL2",
            Group::Lx => "LX",
        }
    }

    pub fn from_tag(s: &str) -> Result<Group> {
        match s {
            "GL2" => Ok(Group::Gl2),
            "LX" => Ok(Group::Lx),
            other => Err(Error::Schema(format!("unknown group tag {other:?}"))),
        }
    }

    /// Number of classes, equal to the number of irreducible Brauer characters.
    pub fn class_count(self, ctx: &FieldCtx) -> usize {
        match self {
            Group::Gl2 => ctx.ss_classes().len(),
            Group::Lx => ctx.n() as usize,
        }
    }
}

/// A class function on the semisimple classes of `GL2(k)` (ordered as in
/// [`enumerate_ss_classes`]) or on `l^×` (ordered by discrete log).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFn {
    group: Group,
    q: u32,
    values: Vec<CycInt>,
}

impl ClassFn {
    pub fn from_values(ctx: &FieldCtx, group: Group, values: Vec<CycInt>) -> Result<Self> {
        if values.len() != group.class_count(ctx) {
            return Err(Error::Schema(format!(
                "{} class function needs {} values, got {}",
                group.tag(),
                group.class_count(ctx),
                values.len()
            )));
        }
        if values.iter().any(|v| v.ring().order() != ctx.n() as usize) {
            return Err(Error::ContextMismatch);
        }
        Ok(ClassFn { group, q: ctx.q(), values })
    }

    pub fn gl2(ctx: &FieldCtx, mut value: impl FnMut(&SsClass) -> CycInt) -> Self {
        let values = ctx.ss_classes().iter().map(&mut value).collect();
        ClassFn { group: Group::Gl2, q: ctx.q(), values }
    }

    /// A class function on `l^×` from its value at `gamma^t`.
    pub fn lx(ctx: &FieldCtx, value: impl FnMut(u32) -> CycInt) -> Self {
        let values = (0..ctx.n()).map(value).collect();
        ClassFn { group: Group::Lx, q: ctx.q(), values }
    }

    pub fn constant(ctx: &FieldCtx, group: Group, c: i64) -> Self {
        let v = CycInt::from_int(ctx.ring(), c);
        ClassFn { group, q: ctx.q(), values: vec![v; group.class_count(ctx)] }
    }

    pub fn zero(ctx: &FieldCtx, group: Group) -> Self {
        Self::constant(ctx, group, 0)
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn values(&self) -> &[CycInt] {
        &self.values
    }

    pub fn ring(&self) -> &Arc<crate::scalars::CycRing> {
        self.values[0].ring()
    }

    pub fn at(&self, idx: usize) -> &CycInt {
        &self.values[idx]
    }

    /// Value at a semisimple class of `GL2(k)`.
    pub fn at_class(&self, ctx: &FieldCtx, class: &SsClass) -> Option<&CycInt> {
        if self.group != Group::Gl2 {
            return None;
        }
        class_index(ctx, class).map(|i| &self.values[i])
    }

    /// Value at the class of the identity, i.e. the (virtual) dimension.
    pub fn degree(&self) -> &CycInt {
        &self.values[0]
    }

    fn check(&self, other: &ClassFn) -> Result<()> {
        if self.group != other.group {
            Err(Error::GroupMismatch)
        } else if self.q != other.q {
            Err(Error::ContextMismatch)
        } else {
            Ok(())
        }
    }

    fn zip(&self, other: &ClassFn, op: impl Fn(&CycInt, &CycInt) -> CycInt) -> Result<ClassFn> {
        self.check(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| op(a, b)).collect();
        Ok(ClassFn { group: self.group, q: self.q, values })
    }

    pub fn add(&self, other: &ClassFn) -> Result<ClassFn> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ClassFn) -> Result<ClassFn> {
        self.zip(other, |a, b| a - b)
    }

    /// Pointwise product, the tensor product on Brauer characters.
    pub fn mul(&self, other: &ClassFn) -> Result<ClassFn> {
        self.zip(other, |a, b| a * b)
    }

    pub fn scale(&self, k: i64) -> ClassFn {
        ClassFn { group: self.group, q: self.q, values: self.values.iter().map(|v| v.scale(k)).collect() }
    }

    pub fn neg(&self) -> ClassFn {
        self.scale(-1)
    }

    /// Equality that rejects operands from different groups instead of
    /// returning `false`.
    pub fn checked_eq(&self, other: &ClassFn) -> Result<bool> {
        self.check(other)?;
        Ok(self.values == other.values)
    }

    /// Indices of classes where `self` and `other` differ.
    pub fn residual_classes(&self, other: &ClassFn) -> Result<Vec<usize>> {
        self.check(other)?;
        Ok((0..self.values.len()).filter(|&i| self.values[i] != other.values[i]).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CycInt::is_zero)
    }
}
