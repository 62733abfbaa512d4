//! Semisimple classes of `GL2(F_q)`, their sizes, and classification of
//! explicit matrices.

use modjl::classfn::{class_of, enumerate_full_classes, group_order, representative, FullClass};
use modjl::{FieldCtx, Result};

pub fn run() -> Result<()> {
    let ctx = FieldCtx::new(5, 1)?;
    let q = ctx.q();
    for class in ctx.ss_classes() {
        println!("{class:<16} size {}", class.size(q));
    }
    let all = enumerate_full_classes(&ctx);
    let total: u64 = all.iter().map(|c| c.size(q)).sum();
    println!("{} classes in all, sizes sum to {total} = |GL2(F_{q})|", all.len());
    assert_eq!(total, group_order(q));

    for c in &all {
        let m = representative(&ctx, c);
        assert_eq!(&class_of(&ctx, &m)?, c);
    }
    let unipotent = representative(&ctx, &FullClass::NonSemisimple { x: 0 });
    println!("[[1,1],[0,1]] lies in {:?}", class_of(&ctx, &unipotent)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
