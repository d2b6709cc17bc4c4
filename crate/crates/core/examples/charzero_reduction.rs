//! Reducing characteristic-zero highest-weight modules mod p and quotienting
//! by the p-central ideal shifted by χ.
use babyverma::charzero::{head_surjection_check, matches_baby_verma, reduce_simple, verma_quotient};
use babyverma::envelope::{ChiForm, LieAlgebra};
use babyverma::exactlin::{rat, PrimeField};
use babyverma::rootdata::Kind;
use std::sync::Arc;

fn main() -> babyverma::Result<()> {
    let alg = Arc::new(LieAlgebra::new(Kind::Sl, 2)?);
    let field = PrimeField::new(5)?;
    let chi = ChiForm::regular_nilpotent(&alg, field);
    let lambda = [rat(1, 2)];
    let tilde = [field.reduce_rational(&lambda[0])?];

    let m = verma_quotient(&alg, &lambda, &chi, None)?;
    println!("M_p^χ(1/2) has dim {} and equals Z_χ({}): {}", m.module.dim(), tilde[0], matches_baby_verma(&m, &tilde)?);

    let zero = ChiForm::zero(&alg, field);
    let red = reduce_simple(&alg, &[rat(7, 1)], &zero, None)?;
    let label = &red.lambda_tilde;
    println!(
        "L_p^0(7): regime {:?}, window {}, dim {}, surjects onto L_0({}): {}",
        red.regime,
        red.window,
        red.quotient.module.dim(),
        label[0],
        head_surjection_check(&red.quotient, label)?
    );
    Ok(())
}
