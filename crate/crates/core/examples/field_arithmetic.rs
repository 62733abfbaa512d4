//! Arithmetic in `F_{q²}` through Zech logarithms, and in `Z[ζ_n]`.

use modjl::scalars::{cyclotomic_polynomial, CycInt};
use modjl::{FieldCtx, Result};

pub fn run() -> Result<()> {
    let ctx = FieldCtx::new(3, 2)?;
    println!("q = {}, n = q^2 - 1 = {}, phi(n) = {}", ctx.q(), ctx.n(), ctx.ring().rank());
    println!("Phi_8 = {:?}", cyclotomic_polynomial(8));

    let g = ctx.gamma();
    let x = ctx.add(g, ctx.one());
    let y = ctx.mul(x, ctx.inv(x)?);
    println!("gamma + 1 = {x}, (gamma + 1)(gamma + 1)^-1 = {y}");
    println!("N(gamma) = {}, Tr(gamma) = {}", ctx.norm(g), ctx.trace(g));
    assert_eq!(y, ctx.one());

    let ring = ctx.ring();
    let zeta = CycInt::root_power(ring, 1);
    let minus_one = CycInt::root_power(ring, ctx.n() as i64 / 2);
    println!("zeta^(n/2) = {minus_one}");
    assert_eq!(minus_one, CycInt::from_int(ring, -1));
    let t = ctx.teich(g)?;
    assert_eq!(t, zeta);
    println!("Teichmuller lift of gamma = {t}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
