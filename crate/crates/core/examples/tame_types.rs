//! Tame inertial types, their twisted types, and the compatibility of `JL`
//! with reduction, checked class by class; then the spanning rank.

use modjl::bmfunc::{discrete_series_types, sigma_tame, span_rank, verify_thm42, LambdaBox};
use modjl::chars::Weight;
use modjl::{FieldCtx, Result};

pub fn run() -> Result<()> {
    let ctx = FieldCtx::new(5, 1)?;
    let weights = LambdaBox::standard(&ctx).weights(&ctx);
    let mut cells = 0;
    for tau in discrete_series_types(&ctx) {
        let data = sigma_tame(&ctx, tau)?;
        for w in &weights {
            let report = verify_thm42(&ctx, tau, w)?;
            assert!(report.passed(), "{tau} at {w}");
            cells += report.choices.len();
        }
        if tau == discrete_series_types(&ctx)[0] {
            println!("{tau}: sigma = {}, sigma_cr = {}, sigma_D = {:?}", data.sigma, data.sigma_cr, data.sigma_d);
        }
    }
    println!("{cells} (type, weight, sigma_D) cells agree exactly");

    let w = Weight::simple(&[(3, 1)])?;
    println!("a cuspidal check at lambda = {w}: {:?}", verify_thm42(&ctx, modjl::bmfunc::TameType::Cuspidal(1), &w)?.passed());

    let rank = span_rank(&ctx, &LambdaBox::standard(&ctx))?;
    println!("non-scalar span rank = {rank}, q(q-1) = {}", ctx.q() * (ctx.q() - 1));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
