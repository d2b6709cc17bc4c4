//! The certified filtration of Z_χ(2) ⊗ Z_{-χ}(3) for sl2 at p = 5.
use babyverma::envelope::{ChiForm, LieAlgebra};
use babyverma::exactlin::PrimeField;
use babyverma::rootdata::Kind;
use babyverma::verma::{build_baby_verma, tensor_filtration};
use std::sync::Arc;

fn main() -> babyverma::Result<()> {
    let alg = Arc::new(LieAlgebra::new(Kind::Sl, 2)?);
    let field = PrimeField::new(5)?;
    let chi = ChiForm::regular_nilpotent(&alg, field);
    let zl = build_baby_verma(&alg, &chi, &[2])?;
    let zm = build_baby_verma(&alg, &chi.neg(), &[3])?;
    let report = tensor_filtration(&zl, &zm)?;
    for (i, step) in report.steps.iter().enumerate() {
        println!(
            "W_{}/W_{} ≅ Z_0({}) (exponent {:?}, intertwiner verified: {})",
            i + 1,
            i,
            step.predicted_weight[0],
            step.b,
            step.isomorphism_certified
        );
    }
    println!("all certified: {}", report.all_certified());
    Ok(())
}
