//! Brute-force checks on the ordinary character table, independent of the
//! closed-form values: the Frobenius formula for the principal series summed
//! over all of `GL2(k)`, and exact row orthogonality over every conjugacy
//! class including the non-semisimple ones.

use rayon::prelude::*;

use super::{all_ordinary_chars, ordinary_char, OrdChar};
use crate::classfn::{
    enumerate_full_classes, gl2_elements, group_order, mat_inv, mat_mul, representative, ClassFn, FullClass, Mat2,
};
use crate::error::{Error, Result};
use crate::scalars::{CycInt, FieldCtx, RootSum};

/// Largest `q` the oracles accept (`|GL2(F_9)| = 5760`).
pub const ORACLE_Q_BOUND: u32 = 9;

fn check_size(ctx: &FieldCtx) -> Result<()> {
    if ctx.q() > ORACLE_Q_BOUND {
        return Err(Error::GroupTooLarge(ctx.q()));
    }
    Ok(())
}

/// `Ind_B^G(ψ₁ ⊗ ψ₂)` on the semisimple classes, by
/// `(1/|B|) Σ_{h ∈ G} χ°(h g h⁻¹)` with `B` the upper-triangular Borel.
pub fn oracle_frobenius_ps(ctx: &FieldCtx, psi1: u32, psi2: u32) -> Result<ClassFn> {
    check_size(ctx)?;
    let km = ctx.q() - 1;
    let (m1, m2) = ((psi1 % km) as i64, (psi2 % km) as i64);
    let group: Vec<(Mat2, Mat2)> =
        gl2_elements(ctx).into_iter().map(|h| (h, mat_inv(ctx, &h).expect("group elements are invertible"))).collect();
    let q = ctx.q() as i64;
    let borel = (q - 1) * (q - 1) * q;
    let n = ctx.n() as usize;
    let values: Vec<CycInt> = ctx
        .ss_classes()
        .par_iter()
        .map(|class| {
            let g = representative(ctx, &FullClass::Semisimple(*class));
            let mut sum = RootSum::zero(n);
            for (h, h_inv) in &group {
                let c = mat_mul(ctx, &mat_mul(ctx, h, &g), h_inv);
                if c[1][0].is_zero() {
                    let a = c[0][0].dlog().expect("diagonal of an invertible triangular matrix") as i64;
                    let d = c[1][1].dlog().expect("diagonal of an invertible triangular matrix") as i64;
                    sum.add_root(m1 * a + m2 * d, 1);
                }
            }
            sum.into_cyc(ctx.ring()).div_exact(borel).expect("induced character values are algebraic integers")
        })
        .collect();
    ClassFn::from_values(ctx, crate::classfn::Group::Gl2, values)
}

/// Value of an ordinary character at `x · (unipotent)`, `x = gamma_k^t`.
fn non_semisimple_value(ctx: &FieldCtx, c: OrdChar, t: u32) -> CycInt {
    let s = (t * (ctx.q() + 1)) as i64;
    let ring = ctx.ring();
    match c {
        OrdChar::DetTwist(m) => CycInt::root_power(ring, 2 * m as i64 * s),
        OrdChar::SteinbergTwist(_) => CycInt::zero(ring),
        OrdChar::PrincipalSeries(m1, m2) => CycInt::root_power(ring, (m1 + m2) as i64 * s),
        OrdChar::Cuspidal(e) => CycInt::root_power(ring, e as i64 * s).neg(),
    }
}

#[derive(Clone, Debug)]
pub struct OrthogonalityFailure {
    pub left: OrdChar,
    pub right: OrdChar,
    pub inner_product: CycInt,
}

#[derive(Clone, Debug)]
pub struct OrthogonalityReport {
    pub q: u32,
    pub characters: usize,
    pub classes: usize,
    pub pairs_checked: usize,
    /// `Σ |C|` over all classes.
    pub class_size_total: u64,
    pub group_order: u64,
    pub failures: Vec<OrthogonalityFailure>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.class_size_total == self.group_order && self.characters == self.classes
    }
}

/// Checks `Σ_C |C| χ(C) conj(χ'(C)) = δ_{χχ'} |G|` for every pair of
/// irreducible ordinary characters, exactly in `Z[ζ]`.
pub fn oracle_orthogonality(ctx: &FieldCtx) -> Result<OrthogonalityReport> {
    check_size(ctx)?;
    let q = ctx.q();
    let classes = enumerate_full_classes(ctx);
    let sizes: Vec<i64> = classes.iter().map(|c| c.size(q) as i64).collect();
    let chars = all_ordinary_chars(ctx);
    let ss_count = ctx.ss_classes().len();
    let table: Vec<Vec<CycInt>> = chars
        .par_iter()
        .map(|&c| {
            let mut row = ordinary_char(ctx, c).expect("enumerated characters are valid").values().to_vec();
            row.extend(classes[ss_count..].iter().map(|fc| match fc {
                FullClass::NonSemisimple { x } => non_semisimple_value(ctx, c, *x),
                FullClass::Semisimple(_) => unreachable!("semisimple classes come first"),
            }));
            row
        })
        .collect();
    let conj: Vec<Vec<CycInt>> = table.iter().map(|row| row.iter().map(CycInt::conj).collect()).collect();
    let order = group_order(q);
    let failures: Vec<OrthogonalityFailure> = (0..chars.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let (table, conj, sizes, chars) = (&table, &conj, &sizes, &chars);
            (i..chars.len()).filter_map(move |j| {
                let mut acc = CycInt::zero(ctx.ring());
                for c in 0..sizes.len() {
                    acc = acc + (&table[i][c] * &conj[j][c]).scale(sizes[c]);
                }
                let expected = if i == j { order as i64 } else { 0 };
                (acc != CycInt::from_int(ctx.ring(), expected)).then(|| OrthogonalityFailure {
                    left: chars[i],
                    right: chars[j],
                    inner_product: acc,
                })
            })
        })
        .collect();
    Ok(OrthogonalityReport {
        q,
        characters: chars.len(),
        classes: classes.len(),
        pairs_checked: chars.len() * (chars.len() + 1) / 2,
        class_size_total: sizes.iter().map(|&s| s as u64).sum(),
        group_order: order,
        failures,
    })
}
