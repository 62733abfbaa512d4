//! Ordinary and Brauer characters of `GL2(F_3)` and reduction of a cuspidal
//! representation into irreducibles.

use modjl::chars::{all_ordinary_chars, brauer_irred, decompose, gl2_labels, ordinary_char, OrdChar};
use modjl::jl::basis_labels;
use modjl::classfn::Group;
use modjl::{FieldCtx, Result};

pub fn run() -> Result<()> {
    let ctx = FieldCtx::new(3, 1)?;
    let header: Vec<String> = ctx.ss_classes().iter().map(|c| c.to_string()).collect();
    println!("classes: {}", header.join(" | "));

    println!("ordinary characters:");
    for c in all_ordinary_chars(&ctx) {
        let chi = ordinary_char(&ctx, c)?;
        let row: Vec<String> = chi.values().iter().map(|v| v.to_string()).collect();
        println!("  {:<10} {}", c.to_string(), row.join(" | "));
    }

    println!("Brauer irreducibles:");
    for label in gl2_labels(&ctx) {
        let chi = brauer_irred(&ctx, &label)?;
        println!("  {:<12} dim {}", label.to_string(), chi.degree());
    }

    let labels = basis_labels(&ctx, Group::Gl2);
    for c in [OrdChar::Cuspidal(1), OrdChar::SteinbergTwist(0), OrdChar::PrincipalSeries(0, 1)] {
        let v = decompose(&ctx, &ordinary_char(&ctx, c)?)?;
        let terms: Vec<String> = v.support().iter().map(|&(i, k)| format!("{k} * {}", labels[i])).collect();
        println!("reduction of {c} = {}", terms.join(" + "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
