//! Brute-force checks of the character table over every element of the group.

use modjl::chars::oracle::{oracle_frobenius_ps, oracle_orthogonality};
use modjl::chars::{ordinary_char, OrdChar};
use modjl::{FieldCtx, Result};

pub fn run() -> Result<()> {
    for (p, f) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let ctx = FieldCtx::new(p, f)?;
        let report = oracle_orthogonality(&ctx)?;
        println!(
            "q = {}: {} characters, {} classes, {} pairs, sum |C| = {} = |G| = {}, passed = {}",
            report.q,
            report.characters,
            report.classes,
            report.pairs_checked,
            report.class_size_total,
            report.group_order,
            report.passed()
        );
        assert!(report.passed());
        if ctx.q() > 2 {
            let induced = oracle_frobenius_ps(&ctx, 0, 1)?;
            assert_eq!(induced, ordinary_char(&ctx, OrdChar::PrincipalSeries(0, 1))?);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
