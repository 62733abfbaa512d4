//! The mod `p` Jacquet–Langlands map `R(l^×) → R(GL2(k))`, both on basis
//! elements and as a rule on class functions, Deligne–Lusztig induction from
//! the non-split torus, the `Hom` pairing, and the adjoint `JL*`.

use std::fmt;

use rayon::prelude::*;

use crate::chars::{decompose, gl2_label_index, gl2_labels, ordinary_char, BrauerIrredLabel, OrdChar};
use crate::classfn::{ClassFn, Group, SsClass};
use crate::error::{Error, Result};
use crate::scalars::{CycInt, FieldCtx};

/// A basis label of either Grothendieck group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    Irred(BrauerIrredLabel),
    /// The character `gamma^t ↦ ζ^{et}` of `l^×`.
    LChar(u32),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Irred(l) => write!(f, "{l}"),
            BasisLabel::LChar(e) => write!(f, "chi[{e}]"),
        }
    }
}

pub fn basis_labels(ctx: &FieldCtx, group: Group) -> Vec<BasisLabel> {
    match group {
        Group::Gl2 => gl2_labels(ctx).into_iter().map(BasisLabel::Irred).collect(),
        Group::Lx => (0..ctx.n()).map(BasisLabel::LChar).collect(),
    }
}

pub fn basis_label_index(ctx: &FieldCtx, group: Group, label: &BasisLabel) -> Result<usize> {
    match (group, label) {
        (Group::Gl2, BasisLabel::Irred(l)) => gl2_label_index(ctx, l),
        (Group::Lx, BasisLabel::LChar(e)) if *e < ctx.n() => Ok(*e as usize),
        (Group::Lx, BasisLabel::LChar(e)) => Err(Error::LabelOutOfRange(format!("character exponent {e}"))),
        _ => Err(Error::GroupMismatch),
    }
}

/// An element of `R(GL2(k))` or `R(l^×)` as integer coordinates over the
/// irreducible basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrothElt {
    group: Group,
    q: u32,
    coeffs: Vec<i64>,
}

impl GrothElt {
    pub fn new(ctx: &FieldCtx, group: Group, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != group.class_count(ctx) {
            return Err(Error::Schema(format!(
                "{} Grothendieck element needs {} coefficients, got {}",
                group.tag(),
                group.class_count(ctx),
                coeffs.len()
            )));
        }
        Ok(GrothElt { group, q: ctx.q(), coeffs })
    }

    pub fn zero(ctx: &FieldCtx, group: Group) -> Self {
        GrothElt { group, q: ctx.q(), coeffs: vec![0; group.class_count(ctx)] }
    }

    pub fn unit(ctx: &FieldCtx, group: Group, idx: usize) -> Self {
        let mut g = Self::zero(ctx, group);
        g.coeffs[idx] = 1;
        g
    }

    pub fn of_label(ctx: &FieldCtx, group: Group, label: &BasisLabel) -> Result<Self> {
        Ok(Self::unit(ctx, group, basis_label_index(ctx, group, label)?))
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, idx: usize) -> i64 {
        self.coeffs[idx]
    }

    /// Nonzero `(index, coefficient)` pairs.
    pub fn support(&self) -> Vec<(usize, i64)> {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect()
    }

    fn check(&self, other: &GrothElt) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        if self.q != other.q {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &GrothElt) -> Result<GrothElt> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(GrothElt { coeffs, ..self.clone() })
    }

    pub fn sub(&self, other: &GrothElt) -> Result<GrothElt> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> GrothElt {
        GrothElt { coeffs: self.coeffs.iter().map(|c| c * k).collect(), ..self.clone() }
    }
}

/// `⟨v, w⟩ = Σ v_σ w_σ`: the pairing sending two irreducibles to `dim Hom`.
pub fn pairing(v: &GrothElt, w: &GrothElt) -> Result<i64> {
    v.check(w)?;
    Ok(v.coeffs.iter().zip(&w.coeffs).map(|(a, b)| a * b).sum())
}

/// Image of the single character `[ψ_e]` straight from the definition:
/// `[ψ ∘ N] ↦ [sp_ψ] - [ψ ∘ det]`, otherwise `[ψ] ↦ [Θ(ψ)]`, with every
/// reduction obtained by decomposing the ordinary character.
pub fn jl_of_character(ctx: &FieldCtx, e: u32) -> Result<GrothElt> {
    let e = e % ctx.n();
    let q1 = ctx.q() + 1;
    if e.is_multiple_of(q1) {
        let psi = e / q1;
        let sp = decompose(ctx, &ordinary_char(ctx, OrdChar::SteinbergTwist(psi))?)?;
        let det = decompose(ctx, &ordinary_char(ctx, OrdChar::DetTwist(psi))?)?;
        sp.sub(&det)
    } else {
        decompose(ctx, &ordinary_char(ctx, OrdChar::Cuspidal(e))?)
    }
}

/// Integer matrix of `JL`: rows are `GL2(k)` labels, columns `l^×` characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JlMatrix {
    rows: usize,
    /// `columns[e][σ]`
    columns: Vec<Vec<i64>>,
}

impl JlMatrix {
    pub fn build(ctx: &FieldCtx) -> Result<Self> {
        let columns = (0..ctx.n())
            .into_par_iter()
            .map(|e| jl_of_character(ctx, e).map(|g| g.coeffs))
            .collect::<Result<Vec<_>>>()?;
        Ok(JlMatrix { rows: ctx.ss_classes().len(), columns })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn get(&self, sigma: usize, e: usize) -> i64 {
        self.columns[e][sigma]
    }

    pub fn column(&self, e: usize) -> &[i64] {
        &self.columns[e]
    }

    /// Row-major copy.
    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|s| self.columns.iter().map(|c| c[s]).collect()).collect()
    }
}

/// The `JL` matrix, built once per context.
pub fn jl_matrix(ctx: &FieldCtx) -> &JlMatrix {
    ctx.jl_matrix.get_or_init(|| JlMatrix::build(ctx).expect("JL images of characters lie in the Brauer lattice"))
}

/// `JL` on the basis presentation, extended additively.
pub fn jl_basis(ctx: &FieldCtx, v: &GrothElt) -> Result<GrothElt> {
    if v.group != Group::Lx {
        return Err(Error::GroupMismatch);
    }
    if v.q != ctx.q() {
        return Err(Error::ContextMismatch);
    }
    let m = jl_matrix(ctx);
    let mut out = vec![0i64; m.rows];
    for (e, &c) in v.coeffs.iter().enumerate() {
        if c != 0 {
            for (slot, &x) in out.iter_mut().zip(m.column(e)) {
                *slot += c * x;
            }
        }
    }
    GrothElt::new(ctx, Group::Gl2, out)
}

/// `JL` on class functions: `i(z) ↦ -χ(z) - χ(z^q)`, `x ↦ (q-1)χ(x)`,
/// `diag(x, y) ↦ 0`.
pub fn jl_classfn(ctx: &FieldCtx, chi: &ClassFn) -> Result<ClassFn> {
    if chi.group() != Group::Lx {
        return Err(Error::GroupMismatch);
    }
    if chi.q() != ctx.q() {
        return Err(Error::ContextMismatch);
    }
    let q = ctx.q() as i64;
    Ok(ClassFn::gl2(ctx, |class| match *class {
        SsClass::Central { .. } => {
            let (a, _) = class.eigen_dlogs(ctx);
            chi.at(a as usize).scale(q - 1)
        }
        SsClass::Split { .. } => CycInt::zero(ctx.ring()),
        SsClass::Elliptic { .. } => {
            let (a, b) = class.eigen_dlogs(ctx);
            (chi.at(a as usize) + chi.at(b as usize)).neg()
        }
    }))
}

/// Deligne–Lusztig character `R_{T,θ}` of the non-split torus on the
/// semisimple classes: `x ↦ (1-q)θ(x)`, `diag(x, y) ↦ 0`, `i(z) ↦ θ(z) + θ(z^q)`.
pub fn dl_character(ctx: &FieldCtx, theta: u32) -> ClassFn {
    let theta = (theta % ctx.n()) as i64;
    let q = ctx.q() as i64;
    ClassFn::gl2(ctx, |class| {
        let (a, b) = class.eigen_dlogs(ctx);
        let ring = ctx.ring();
        match class {
            SsClass::Central { .. } => CycInt::root_power(ring, theta * a as i64).scale(1 - q),
            SsClass::Split { .. } => CycInt::zero(ring),
            SsClass::Elliptic { .. } => {
                CycInt::root_power(ring, theta * a as i64) + CycInt::root_power(ring, theta * b as i64)
            }
        }
    })
}

/// The adjoint of `JL` under the two pairings: the transpose action.
pub fn jl_star(ctx: &FieldCtx, w: &GrothElt) -> Result<GrothElt> {
    if w.group != Group::Gl2 {
        return Err(Error::GroupMismatch);
    }
    if w.q != ctx.q() {
        return Err(Error::ContextMismatch);
    }
    let m = jl_matrix(ctx);
    let out = (0..m.cols()).map(|e| m.column(e).iter().zip(&w.coeffs).map(|(a, b)| a * b).sum()).collect();
    GrothElt::new(ctx, Group::Lx, out)
}

/// Data for the closed form
/// `JL*(σ) = Σ_ξ m_ξ(σ)[ξ] + Σ_χ m_χ(σ)[χ ∘ N]`:
/// `m_ξ(σ)` is the multiplicity of `σ` in the reduction of `Θ(ξ)`;
/// `m_χ(σ)` is `+1` at the reduction of `sp_χ`, `-1` at `χ ∘ det`.
#[derive(Clone, Debug)]
pub struct JlStarFormula {
    q: u32,
    /// `theta[e]` = coordinates of `Θ(ψ_e)` reduced, for `e` not a multiple of `q+1`.
    theta: Vec<Option<Vec<i64>>>,
    /// Label index of the reduced `sp_χ`, per `χ` mod `q-1`.
    steinberg: Vec<usize>,
    /// Label index of `χ ∘ det`.
    det: Vec<usize>,
}

/// The single label of a reduction known to be irreducible.
fn irreducible_index(g: &GrothElt, what: &str) -> Result<usize> {
    match g.support().as_slice() {
        [(idx, 1)] => Ok(*idx),
        _ => Err(Error::NotIrreducible(what.to_string())),
    }
}

impl JlStarFormula {
    pub fn build(ctx: &FieldCtx) -> Result<Self> {
        let q1 = ctx.q() + 1;
        let theta = (0..ctx.n())
            .into_par_iter()
            .map(|e| {
                if e % q1 == 0 {
                    Ok(None)
                } else {
                    decompose(ctx, &ordinary_char(ctx, OrdChar::Cuspidal(e))?).map(|g| Some(g.coeffs))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let mut steinberg = Vec::new();
        let mut det = Vec::new();
        for chi in 0..ctx.q() - 1 {
            let sp = decompose(ctx, &ordinary_char(ctx, OrdChar::SteinbergTwist(chi))?)?;
            steinberg.push(irreducible_index(&sp, &format!("reduction of sp[{chi}]"))?);
            let d = decompose(ctx, &ordinary_char(ctx, OrdChar::DetTwist(chi))?)?;
            det.push(irreducible_index(&d, &format!("det^{chi}"))?);
        }
        Ok(JlStarFormula { q: ctx.q(), theta, steinberg, det })
    }

    /// `m_ξ(σ)` for a character `ξ` not factoring through the norm.
    pub fn m_xi(&self, sigma: usize, xi: u32) -> Option<i64> {
        self.theta.get(xi as usize)?.as_ref().map(|v| v[sigma])
    }

    /// `m_χ(σ)` for a character `χ` of `k^×`.
    pub fn m_chi(&self, sigma: usize, chi: u32) -> i64 {
        let chi = chi as usize;
        if sigma == self.steinberg[chi] {
            1
        } else if sigma == self.det[chi] {
            -1
        } else {
            0
        }
    }

    /// Label index of the reduced Steinberg twist `sp_χ`.
    pub fn steinberg_index(&self, chi: u32) -> usize {
        self.steinberg[chi as usize]
    }

    /// The closed form applied to a `GL2(k)` element, extended linearly.
    pub fn apply(&self, ctx: &FieldCtx, w: &GrothElt) -> Result<GrothElt> {
        if w.group != Group::Gl2 {
            return Err(Error::GroupMismatch);
        }
        if w.q != self.q {
            return Err(Error::ContextMismatch);
        }
        let q1 = self.q + 1;
        let out = (0..ctx.n())
            .map(|e| {
                w.support()
                    .into_iter()
                    .map(|(sigma, c)| {
                        let m = if e % q1 == 0 { self.m_chi(sigma, e / q1) } else { self.m_xi(sigma, e).unwrap_or(0) };
                        c * m
                    })
                    .sum()
            })
            .collect();
        GrothElt::new(ctx, Group::Lx, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{frob_exp, l_character, recombine};

    fn label(ctx: &FieldCtx, r: u32, m: u32) -> usize {
        gl2_label_index(ctx, &BrauerIrredLabel::new(vec![r], m)).unwrap()
    }

    #[test]
    fn jl_of_trivial_q3() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let g = jl_basis(&ctx, &GrothElt::unit(&ctx, Group::Lx, 0)).unwrap();
        let mut expected = vec![0i64; 6];
        expected[label(&ctx, 2, 0)] = 1;
        expected[label(&ctx, 0, 0)] = -1;
        assert_eq!(g.coeffs(), expected.as_slice());
    }

    #[test]
    fn jl_of_exponent_one_q3() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let g = jl_basis(&ctx, &GrothElt::unit(&ctx, Group::Lx, 1)).unwrap();
        assert_eq!(g.support(), vec![(label(&ctx, 1, 1), 1)]);
    }

    #[test]
    fn jl_classfn_examples_q3() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let r = ctx.ring();
        let image = jl_classfn(&ctx, &ClassFn::constant(&ctx, Group::Lx, 1)).unwrap();
        let expected: Vec<i64> = vec![2, 2, 0, -2, -2, -2];
        assert_eq!(image.values(), expected.iter().map(|&v| CycInt::from_int(r, v)).collect::<Vec<_>>().as_slice());

        assert!(jl_classfn(&ctx, &ClassFn::zero(&ctx, Group::Lx)).unwrap().is_zero());

        let image = jl_classfn(&ctx, &l_character(&ctx, 1)).unwrap();
        let at = image.at_class(&ctx, &SsClass::Elliptic { z: 1 }).unwrap();
        assert_eq!(at, &(CycInt::root_power(r, 1) + CycInt::root_power(r, 3)).neg());
    }

    #[test]
    fn jl_classfn_rejects_gl2_input() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        assert!(matches!(jl_classfn(&ctx, &ClassFn::zero(&ctx, Group::Gl2)), Err(Error::GroupMismatch)));
        assert!(matches!(jl_basis(&ctx, &GrothElt::zero(&ctx, Group::Gl2)), Err(Error::GroupMismatch)));
        assert!(matches!(jl_star(&ctx, &GrothElt::zero(&ctx, Group::Lx)), Err(Error::GroupMismatch)));
    }

    #[test]
    fn dl_character_examples() {
        let ctx = FieldCtx::new(5, 1).unwrap();
        let dl = dl_character(&ctx, 0);
        assert_eq!(dl.degree().as_integer(), Some(1 - 5));
        let ctx = FieldCtx::new(3, 1).unwrap();
        let dl = dl_character(&ctx, 1);
        let jl = jl_classfn(&ctx, &l_character(&ctx, 1)).unwrap();
        assert_eq!(dl.neg(), jl);
        for e in 0..ctx.n() {
            assert_eq!(dl_character(&ctx, e), dl_character(&ctx, frob_exp(&ctx, e)));
        }
    }

    #[test]
    fn pairing_basics() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let e0 = GrothElt::unit(&ctx, Group::Gl2, 0);
        let e1 = GrothElt::unit(&ctx, Group::Gl2, 1);
        assert_eq!(pairing(&e0, &e0).unwrap(), 1);
        assert_eq!(pairing(&e0, &e1).unwrap(), 0);
        let l = GrothElt::unit(&ctx, Group::Lx, 0);
        assert!(matches!(pairing(&e0, &l), Err(Error::GroupMismatch)));
    }

    #[test]
    fn jl_star_examples_q3() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let star = jl_star(&ctx, &GrothElt::unit(&ctx, Group::Gl2, label(&ctx, 1, 1))).unwrap();
        assert_eq!(star.coeff(1), 1);
        let star = jl_star(&ctx, &GrothElt::unit(&ctx, Group::Gl2, label(&ctx, 0, 0))).unwrap();
        assert_eq!(star.coeff(0), -1);
    }

    #[test]
    fn agreement_of_presentations_q4() {
        let ctx = FieldCtx::new(2, 2).unwrap();
        for e in 0..ctx.n() {
            let basis = recombine(&ctx, &jl_basis(&ctx, &GrothElt::unit(&ctx, Group::Lx, e as usize)).unwrap()).unwrap();
            let rule = jl_classfn(&ctx, &l_character(&ctx, e)).unwrap();
            assert_eq!(basis, rule, "e = {e}");
        }
    }

    #[test]
    fn closed_form_matches_transpose_q5() {
        let ctx = FieldCtx::new(5, 1).unwrap();
        let formula = JlStarFormula::build(&ctx).unwrap();
        for sigma in 0..ctx.ss_classes().len() {
            let unit = GrothElt::unit(&ctx, Group::Gl2, sigma);
            assert_eq!(formula.apply(&ctx, &unit).unwrap(), jl_star(&ctx, &unit).unwrap());
        }
        for chi in 0..4 {
            assert_eq!(formula.steinberg_index(chi), label(&ctx, 4, chi));
        }
    }
}
