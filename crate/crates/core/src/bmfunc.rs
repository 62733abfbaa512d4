//! Tame inertial types and their types `σ(τ)`, `σ^cr(τ)`, `σ_D(τ)`, twisted by
//! highest weights; the compatibility check between `JL` and reduction of
//! types; the spanning rank of the non-scalar `σ̄(τ, λ)`; and transport of
//! integer functionals from `GL2(k)` to `l^×`.

use std::fmt;

use rayon::prelude::*;

use crate::chars::{
    cuspidal_exponents, f_lambda, f_lambda_at, f_lambda_d, f_lambda_d_at, frob_exp, l_character, ordinary_char,
    ordinary_char_at, rank_mod, OrdChar, Weight,
};
use crate::classfn::{ClassFn, Group, SsClass};
use crate::error::{Error, Result};
use crate::jl::{basis_labels, jl_basis, jl_classfn, jl_star, pairing, BasisLabel, GrothElt};
use crate::scalars::{mul_mod, CycInt, FieldCtx};

/// A tame inertial type, described by the characters it is built from.
/// `Scalar` and `PrincipalSeries` carry exponents of `k^×` characters,
/// `Cuspidal` an exponent of an `l^×` character (up to `e ~ eq`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TameType {
    Scalar(u32),
    PrincipalSeries(u32, u32),
    Cuspidal(u32),
}

impl fmt::Display for TameType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TameType::Scalar(m) => write!(f, "scalar[{m}]"),
            TameType::PrincipalSeries(a, b) => write!(f, "ps[{a},{b}]"),
            TameType::Cuspidal(e) => write!(f, "cuspidal[{e}]"),
        }
    }
}

impl TameType {
    /// Validates and puts the type in canonical form.
    pub fn canonical(self, ctx: &FieldCtx) -> Result<TameType> {
        let km = ctx.q() - 1;
        Ok(match self {
            TameType::Scalar(m) => TameType::Scalar(m % km),
            TameType::PrincipalSeries(a, b) => {
                let (a, b) = (a % km, b % km);
                if a == b {
                    return Err(Error::EqualCharacters);
                }
                TameType::PrincipalSeries(a.min(b), a.max(b))
            }
            TameType::Cuspidal(e) => {
                let e = e % ctx.n();
                if e.is_multiple_of(ctx.q() + 1) {
                    return Err(Error::FactorsThroughNorm(e));
                }
                TameType::Cuspidal(e.min(frob_exp(ctx, e)))
            }
        })
    }

    pub fn is_discrete_series(self) -> bool {
        !matches!(self, TameType::PrincipalSeries(..))
    }
}

/// Every tame type in canonical form: scalars, principal series, cuspidals.
pub fn tame_types(ctx: &FieldCtx) -> Vec<TameType> {
    let km = ctx.q() - 1;
    let mut out: Vec<TameType> = (0..km).map(TameType::Scalar).collect();
    for a in 0..km {
        out.extend((a + 1..km).map(|b| TameType::PrincipalSeries(a, b)));
    }
    out.extend(cuspidal_exponents(ctx).into_iter().map(TameType::Cuspidal));
    out
}

pub fn discrete_series_types(ctx: &FieldCtx) -> Vec<TameType> {
    tame_types(ctx).into_iter().filter(|t| t.is_discrete_series()).collect()
}

pub fn non_scalar_types(ctx: &FieldCtx) -> Vec<TameType> {
    tame_types(ctx).into_iter().filter(|t| !matches!(t, TameType::Scalar(_))).collect()
}

/// The types attached to a tame inertial type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeData {
    pub tau: TameType,
    pub sigma: OrdChar,
    pub sigma_cr: OrdChar,
    /// Exponents of the `l^×` characters that may serve as `σ_D(τ)`; empty
    /// when `τ` is not discrete series.
    pub sigma_d: Vec<u32>,
}

pub fn sigma_tame(ctx: &FieldCtx, tau: TameType) -> Result<TypeData> {
    let tau = tau.canonical(ctx)?;
    let q1 = ctx.q() + 1;
    Ok(match tau {
        TameType::Scalar(m) => TypeData {
            tau,
            sigma: OrdChar::SteinbergTwist(m),
            sigma_cr: OrdChar::DetTwist(m),
            sigma_d: vec![m * q1],
        },
        TameType::PrincipalSeries(a, b) => {
            let ps = OrdChar::PrincipalSeries(a, b);
            TypeData { tau, sigma: ps, sigma_cr: ps, sigma_d: Vec::new() }
        }
        TameType::Cuspidal(e) => {
            let theta = OrdChar::Cuspidal(e);
            TypeData { tau, sigma: theta, sigma_cr: theta, sigma_d: vec![e, frob_exp(ctx, e)] }
        }
    })
}

/// Brauer characters of `σ̄(τ, λ)`, `σ̄^cr(τ, λ)` and every choice of `σ̄_D(τ, λ)`.
#[derive(Clone, Debug)]
pub struct SigmaBar {
    pub sigma: ClassFn,
    pub sigma_cr: ClassFn,
    pub sigma_d: Vec<(u32, ClassFn)>,
}

pub fn sigma_bar_lambda(ctx: &FieldCtx, tau: TameType, weight: &Weight) -> Result<SigmaBar> {
    let data = sigma_tame(ctx, tau)?;
    let fl = f_lambda(ctx, weight)?;
    let fld = f_lambda_d(ctx, weight)?;
    let sigma = ordinary_char(ctx, data.sigma)?.mul(&fl)?;
    let sigma_cr = ordinary_char(ctx, data.sigma_cr)?.mul(&fl)?;
    let sigma_d = data
        .sigma_d
        .iter()
        .map(|&e| Ok((e, l_character(ctx, e).mul(&fld)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SigmaBar { sigma, sigma_cr, sigma_d })
}

/// Degrees of `σ̄(τ, λ)`, `σ̄^cr(τ, λ)` and each `σ̄_D(τ, λ)`, from their
/// values at the identity alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaDegrees {
    pub sigma: CycInt,
    pub sigma_cr: CycInt,
    pub sigma_d: Vec<(u32, CycInt)>,
}

pub fn sigma_bar_degrees(ctx: &FieldCtx, tau: TameType, weight: &Weight) -> Result<SigmaDegrees> {
    let data = sigma_tame(ctx, tau)?;
    let identity = SsClass::Central { x: 0 };
    let fl = f_lambda_at(ctx, weight, &identity)?;
    let fld = f_lambda_d_at(ctx, weight, 0)?;
    Ok(SigmaDegrees {
        sigma: &ordinary_char_at(ctx, data.sigma, &identity)? * &fl,
        sigma_cr: &ordinary_char_at(ctx, data.sigma_cr, &identity)? * &fl,
        // characters are 1 at the identity
        sigma_d: data.sigma_d.iter().map(|&e| (e, fld.clone())).collect(),
    })
}

/// Outcome of the compatibility check for one choice of `σ_D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceCheck {
    pub sigma_d: u32,
    /// Classes where `JL(σ̄_D(τ, λ))` and the expected side differ.
    pub residual: Vec<SsClass>,
}

#[derive(Clone, Debug)]
pub struct Thm42Report {
    pub tau: TameType,
    pub weight: Weight,
    pub choices: Vec<ChoiceCheck>,
}

impl Thm42Report {
    pub fn passed(&self) -> bool {
        !self.choices.is_empty() && self.choices.iter().all(|c| c.residual.is_empty())
    }
}

/// Compares `JL(σ̄_D(τ, λ))` with `σ̄(τ, λ) - σ̄^cr(τ, λ)` for scalar `τ` and
/// with `σ̄(τ, λ)` for cuspidal `τ`, class by class, for each choice of `σ_D`.
pub fn verify_thm42(ctx: &FieldCtx, tau: TameType, weight: &Weight) -> Result<Thm42Report> {
    let tau = tau.canonical(ctx)?;
    if !tau.is_discrete_series() {
        return Err(Error::NotDiscreteSeries);
    }
    let bar = sigma_bar_lambda(ctx, tau, weight)?;
    let expected = match tau {
        TameType::Scalar(_) => bar.sigma.sub(&bar.sigma_cr)?,
        _ => bar.sigma.clone(),
    };
    let choices = bar
        .sigma_d
        .iter()
        .map(|(e, chi_d)| {
            let image = jl_classfn(ctx, chi_d)?;
            let residual = image.residual_classes(&expected)?.into_iter().map(|i| ctx.ss_classes()[i]).collect();
            Ok(ChoiceCheck { sigma_d: *e, residual })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Thm42Report { tau, weight: weight.clone(), choices })
}

/// Highest weights with `lo ≤ a₂ ≤ a₁ ≤ hi` in every embedding, one pair per
/// embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LambdaBox {
    pub lo: i64,
    pub hi: i64,
}

impl LambdaBox {
    /// `[0, p-1]` in each embedding.
    pub fn standard(ctx: &FieldCtx) -> Self {
        LambdaBox { lo: 0, hi: ctx.p() as i64 - 1 }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Schema(format!("lambda box {s:?} is not of the form lo:hi"));
        let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok(LambdaBox { lo, hi })
    }

    pub fn weights(&self, ctx: &FieldCtx) -> Vec<Weight> {
        let pairs: Vec<(i64, i64)> =
            (self.lo..=self.hi).flat_map(|a1| (self.lo..=a1).map(move |a2| (a1, a2))).collect();
        let mut out: Vec<Vec<(i64, i64)>> = vec![Vec::new()];
        for _ in 0..ctx.f() {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    pairs.iter().map(move |&p| {
                        let mut v = prefix.clone();
                        v.push(p);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(|v| Weight::simple(&v).expect("box pairs are dominant")).collect()
    }
}

impl fmt::Display for LambdaBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

/// Every `(τ, λ)` cell of the compatibility check over a box, in
/// deterministic order.
pub fn verify_thm42_box(ctx: &FieldCtx, lambda_box: &LambdaBox) -> Result<Vec<Thm42Report>> {
    let weights = lambda_box.weights(ctx);
    let cells: Vec<(TameType, &Weight)> =
        discrete_series_types(ctx).into_iter().flat_map(|t| weights.iter().map(move |w| (t, w))).collect();
    cells.into_par_iter().map(|(t, w)| verify_thm42(ctx, t, w)).collect()
}

const RANK_PRIMES: usize = 2;
const RANK_PRIMES_MAX: usize = 6;

/// Rank over `Q(ζ)` of `{χ_{σ̄(τ)} · χ_{F_λ}}` for non-scalar tame `τ` and
/// `λ` in the box, from ranks modulo split primes. Each modular rank is a
/// lower bound; the answer is accepted once two primes attain the maximum.
pub fn span_rank(ctx: &FieldCtx, lambda_box: &LambdaBox) -> Result<usize> {
    let types = non_scalar_types(ctx);
    let weights = lambda_box.weights(ctx);
    let sigmas: Vec<ClassFn> =
        types.iter().map(|&t| ordinary_char(ctx, sigma_tame(ctx, t)?.sigma)).collect::<Result<_>>()?;
    let lambdas: Vec<ClassFn> = weights.iter().map(|w| f_lambda(ctx, w)).collect::<Result<_>>()?;
    let mut ranks = Vec::new();
    for (ell, root) in ctx.ring().eval_primes(RANK_PRIMES_MAX) {
        let eval = |f: &ClassFn| -> Vec<u64> { f.values().iter().map(|v| v.eval_mod_unchecked(ell, root)).collect() };
        let s: Vec<Vec<u64>> = sigmas.iter().map(eval).collect();
        let l: Vec<Vec<u64>> = lambdas.iter().map(eval).collect();
        let rows: Vec<Vec<u64>> = s
            .iter()
            .flat_map(|a| l.iter().map(move |b| a.iter().zip(b).map(|(&x, &y)| mul_mod(x, y, ell)).collect()))
            .collect();
        ranks.push(rank_mod(rows, ell));
        if ranks.len() >= RANK_PRIMES {
            let max = *ranks.iter().max().expect("nonempty");
            if ranks.iter().filter(|&&r| r == max).count() >= 2 {
                return Ok(max);
            }
        }
    }
    Err(Error::RankDisagreement(ranks))
}

/// An integer-valued linear functional on a Grothendieck group, stored by its
/// value on each irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IotaFunctional {
    group: Group,
    q: u32,
    values: Vec<i64>,
}

impl IotaFunctional {
    pub fn new(ctx: &FieldCtx, group: Group, values: Vec<i64>) -> Result<Self> {
        let g = GrothElt::new(ctx, group, values)?;
        Ok(Self::from_groth(&g))
    }

    pub fn zero(ctx: &FieldCtx, group: Group) -> Self {
        IotaFunctional { group, q: ctx.q(), values: vec![0; group.class_count(ctx)] }
    }

    /// Identifies the functional with `Σ ι(σ) σ` under the pairing.
    pub fn from_groth(g: &GrothElt) -> Self {
        IotaFunctional { group: g.group(), q: g.q(), values: g.coeffs().to_vec() }
    }

    pub fn as_groth(&self, ctx: &FieldCtx) -> Result<GrothElt> {
        if self.q != ctx.q() {
            return Err(Error::ContextMismatch);
        }
        GrothElt::new(ctx, self.group, self.values.clone())
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `ι(v)`.
    pub fn apply(&self, ctx: &FieldCtx, v: &GrothElt) -> Result<i64> {
        pairing(&self.as_groth(ctx)?, v)
    }
}

/// `ι_D := ι ∘ JL`, evaluated on each character of `l^×`.
pub fn iota_transport(ctx: &FieldCtx, iota: &IotaFunctional) -> Result<IotaFunctional> {
    if iota.group != Group::Gl2 {
        return Err(Error::GroupMismatch);
    }
    let values = (0..ctx.n() as usize)
        .map(|e| iota.apply(ctx, &jl_basis(ctx, &GrothElt::unit(ctx, Group::Lx, e))?))
        .collect::<Result<Vec<_>>>()?;
    IotaFunctional::new(ctx, Group::Lx, values)
}

/// `JL*(ι)` read as a functional on `l^×`.
pub fn iota_transport_adjoint(ctx: &FieldCtx, iota: &IotaFunctional) -> Result<IotaFunctional> {
    Ok(IotaFunctional::from_groth(&jl_star(ctx, &iota.as_groth(ctx)?)?))
}

/// Labels where the functional is positive.
pub fn serre_weights(ctx: &FieldCtx, functional: &IotaFunctional) -> Result<Vec<BasisLabel>> {
    if functional.q != ctx.q() {
        return Err(Error::ContextMismatch);
    }
    Ok(basis_labels(ctx, functional.group)
        .into_iter()
        .zip(&functional.values)
        .filter(|(_, &v)| v > 0)
        .map(|(l, _)| l)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{gl2_label_index, BrauerIrredLabel};

    #[test]
    fn type_counts() {
        let ctx = FieldCtx::new(5, 1).unwrap();
        let types = tame_types(&ctx);
        assert_eq!(types.iter().filter(|t| matches!(t, TameType::Scalar(_))).count(), 4);
        assert_eq!(types.iter().filter(|t| matches!(t, TameType::PrincipalSeries(..))).count(), 6);
        assert_eq!(types.iter().filter(|t| matches!(t, TameType::Cuspidal(_))).count(), 10);
    }

    #[test]
    fn sigma_tame_examples() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let s = sigma_tame(&ctx, TameType::Scalar(0)).unwrap();
        assert_eq!((s.sigma, s.sigma_cr, s.sigma_d.clone()), (OrdChar::SteinbergTwist(0), OrdChar::DetTwist(0), vec![0]));
        let ps = sigma_tame(&ctx, TameType::PrincipalSeries(1, 0)).unwrap();
        assert!(ps.sigma_d.is_empty());
        assert_eq!(ps.tau, TameType::PrincipalSeries(0, 1));
        let c = sigma_tame(&ctx, TameType::Cuspidal(3)).unwrap();
        assert_eq!(c.tau, TameType::Cuspidal(1));
        assert_eq!(c.sigma_d, vec![1, 3]);
        assert!(matches!(sigma_tame(&ctx, TameType::PrincipalSeries(1, 1)), Err(Error::EqualCharacters)));
        assert!(matches!(sigma_tame(&ctx, TameType::Cuspidal(4)), Err(Error::FactorsThroughNorm(4))));
    }

    #[test]
    fn sigma_bar_at_zero_weight_is_type_character() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let bar = sigma_bar_lambda(&ctx, TameType::Cuspidal(1), &Weight::zero(1)).unwrap();
        assert_eq!(bar.sigma, ordinary_char(&ctx, OrdChar::Cuspidal(1)).unwrap());
        assert_eq!(bar.sigma_d[0].1, l_character(&ctx, 1));
    }

    #[test]
    fn degrees_match_full_characters() {
        let ctx = FieldCtx::new(5, 1).unwrap();
        let w = Weight::simple(&[(3, 1)]).unwrap();
        for tau in [TameType::Scalar(2), TameType::Cuspidal(1), TameType::PrincipalSeries(0, 3)] {
            let bar = sigma_bar_lambda(&ctx, tau, &w).unwrap();
            let dims = sigma_bar_degrees(&ctx, tau, &w).unwrap();
            assert_eq!(&dims.sigma, bar.sigma.degree());
            assert_eq!(&dims.sigma_cr, bar.sigma_cr.degree());
            for ((e, d), (e2, chi)) in dims.sigma_d.iter().zip(&bar.sigma_d) {
                assert_eq!((e, d), (e2, chi.degree()));
            }
        }
    }

    #[test]
    fn thm42_examples() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        assert!(verify_thm42(&ctx, TameType::Scalar(0), &Weight::zero(1)).unwrap().passed());
        let r = verify_thm42(&ctx, TameType::Cuspidal(1), &Weight::zero(1)).unwrap();
        assert_eq!(r.choices.len(), 2);
        assert!(r.passed());
        let w = Weight::simple(&[(1, 0)]).unwrap();
        assert!(verify_thm42(&ctx, TameType::Cuspidal(2), &w).unwrap().passed());
        assert!(matches!(
            verify_thm42(&ctx, TameType::PrincipalSeries(0, 1), &w),
            Err(Error::NotDiscreteSeries)
        ));
    }

    #[test]
    fn thm42_detects_wrong_side() {
        // for a scalar type JL(σ̄_D) is σ̄ - σ̄^cr, not σ̄ itself
        let ctx = FieldCtx::new(3, 1).unwrap();
        let bar = sigma_bar_lambda(&ctx, TameType::Scalar(1), &Weight::zero(1)).unwrap();
        let image = jl_classfn(&ctx, &bar.sigma_d[0].1).unwrap();
        assert_ne!(image, bar.sigma);
    }

    #[test]
    fn lambda_box_weights() {
        let ctx = FieldCtx::new(3, 2).unwrap();
        let b = LambdaBox::standard(&ctx);
        assert_eq!(b.weights(&ctx).len(), 36);
        assert_eq!(LambdaBox::parse("0:2").unwrap(), LambdaBox { lo: 0, hi: 2 });
        assert!(LambdaBox::parse("2:0").is_err());
        assert!(LambdaBox::parse("x").is_err());
    }

    #[test]
    fn span_rank_zero_box_bounded_by_type_count() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let r = span_rank(&ctx, &LambdaBox { lo: 0, hi: 0 }).unwrap();
        assert!(r <= non_scalar_types(&ctx).len());
    }

    #[test]
    fn iota_examples() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let zero = IotaFunctional::zero(&ctx, Group::Gl2);
        let d = iota_transport(&ctx, &zero).unwrap();
        assert!(d.values().iter().all(|&v| v == 0));
        assert!(serre_weights(&ctx, &d).unwrap().is_empty());

        for chi in 0..2u32 {
            let idx = gl2_label_index(&ctx, &BrauerIrredLabel::new(vec![0], chi)).unwrap();
            let iota = IotaFunctional::from_groth(&GrothElt::unit(&ctx, Group::Gl2, idx));
            let d = iota_transport(&ctx, &iota).unwrap();
            for other in 0..2u32 {
                let expected = if other == chi { -1 } else { 0 };
                assert_eq!(d.values()[(other * 4) as usize], expected);
            }
            assert_eq!(serre_weights(&ctx, &iota).unwrap(), vec![BasisLabel::Irred(BrauerIrredLabel::new(vec![0], chi))]);
        }
    }
}
