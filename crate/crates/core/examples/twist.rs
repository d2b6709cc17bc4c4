//! Twisting by the sign automorphism exchanges Z_χ(λ) and Z_{-χ}(λ).
use babyverma::envelope::{ChiForm, LieAlgebra};
use babyverma::exactlin::PrimeField;
use babyverma::modrep::{composition_factors, find_isomorphism};
use babyverma::rootdata::Kind;
use babyverma::verma::build_baby_verma;
use std::sync::Arc;

fn main() -> babyverma::Result<()> {
    let alg = Arc::new(LieAlgebra::new(Kind::Sl, 3)?);
    let field = PrimeField::new(3)?;
    let chi = ChiForm::from_root_values(&alg, field, &[((1, 0), 1)])?;
    let lambda = [1, 0];
    let z = build_baby_verma(&alg, &chi, &lambda)?;
    let z_neg = build_baby_verma(&alg, &chi.neg(), &lambda)?;
    let twisted = z.module().twist();
    println!("twisted module is a U_(-χ)-module: {}", twisted.chi() == &chi.neg());
    println!("Z_χ(λ)^t ≅ Z_(-χ)(λ): {}", find_isomorphism(&twisted, z_neg.module()).is_some());
    println!(
        "same composition multisets: {}",
        composition_factors(z.module())? == composition_factors(z_neg.module())?
    );
    Ok(())
}
