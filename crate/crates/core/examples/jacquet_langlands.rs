//! The mod `p` Jacquet–Langlands map: its matrix, its two presentations, the
//! sign relation with Deligne–Lusztig induction, and the adjoint.

use modjl::chars::l_character;
use modjl::classfn::Group;
use modjl::jl::{basis_labels, dl_character, jl_basis, jl_classfn, jl_matrix, jl_star, GrothElt, JlStarFormula};
use modjl::chars::recombine;
use modjl::{FieldCtx, Result};

pub fn run() -> Result<()> {
    let ctx = FieldCtx::new(5, 1)?;
    let labels = basis_labels(&ctx, Group::Gl2);
    let m = jl_matrix(&ctx);
    println!("JL is a {} x {} integer matrix", m.rows(), m.cols());

    for e in [0u32, 1, 6] {
        let image = jl_basis(&ctx, &GrothElt::unit(&ctx, Group::Lx, e as usize))?;
        let terms: Vec<String> = image.support().iter().map(|&(i, k)| format!("{k:+} {}", labels[i])).collect();
        println!("JL(chi[{e}]) = {}", terms.join(" "));

        let rule = jl_classfn(&ctx, &l_character(&ctx, e))?;
        assert_eq!(recombine(&ctx, &image)?, rule);
        assert_eq!(rule, dl_character(&ctx, e).neg());
    }

    let formula = JlStarFormula::build(&ctx)?;
    for sigma in [0usize, labels.len() - 1] {
        let w = GrothElt::unit(&ctx, Group::Gl2, sigma);
        let star = jl_star(&ctx, &w)?;
        assert_eq!(formula.apply(&ctx, &w)?, star);
        println!("JL*({}) is supported on {} characters", labels[sigma], star.support().len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
