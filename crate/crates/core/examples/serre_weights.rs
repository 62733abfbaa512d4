//! Transport of an integer functional from `GL2(F_q)` to `l^×` and the
//! weights it predicts, with JSON output.

use modjl::bmfunc::{iota_transport, serre_weights, IotaFunctional};
use modjl::classfn::Group;
use modjl::jl::{jl_star, GrothElt};
use modjl::json::{iota_to_json, to_string};
use modjl::{FieldCtx, Result};

pub fn run() -> Result<()> {
    let ctx = FieldCtx::new(3, 1)?;
    // 1 on the reduced Steinberg (r=2, m=0), 2 on det (r=0, m=1)
    let mut values = vec![0i64; Group::Gl2.class_count(&ctx)];
    values[4] = 1;
    values[1] = 2;
    let iota = IotaFunctional::new(&ctx, Group::Gl2, values)?;
    let weights: Vec<String> = serre_weights(&ctx, &iota)?.iter().map(ToString::to_string).collect();
    println!("weights of iota: {}", weights.join(", "));

    let d = iota_transport(&ctx, &iota)?;
    assert_eq!(d.values(), jl_star(&ctx, &iota.as_groth(&ctx)?)?.coeffs());
    let weights: Vec<String> = serre_weights(&ctx, &d)?.iter().map(ToString::to_string).collect();
    println!("weights of iota_D: {}", weights.join(", "));
    print!("{}", to_string(&iota_to_json(&ctx, &d))?);

    let v = GrothElt::unit(&ctx, Group::Lx, 1);
    println!("iota_D(chi[1]) = {}", d.apply(&ctx, &v)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
