//! Baby Verma modules for sl2 and their composition factors, checked against
//! the exhaustive oracle.
use babyverma::envelope::{ChiForm, LieAlgebra};
use babyverma::exactlin::PrimeField;
use babyverma::modrep::{composition_factors, exhaustive_composition_factors};
use babyverma::rootdata::Kind;
use babyverma::verma::build_baby_verma;
use std::sync::Arc;

fn main() -> babyverma::Result<()> {
    let alg = Arc::new(LieAlgebra::new(Kind::Sl, 2)?);
    let field = PrimeField::new(5)?;
    let chi = ChiForm::zero(&alg, field);
    for lambda in 0..5u64 {
        let z = build_baby_verma(&alg, &chi, &[lambda])?;
        z.module().verify()?;
        let peeled = composition_factors(z.module())?;
        let oracle = exhaustive_composition_factors(z.module())?;
        let list: Vec<String> = peeled
            .factors
            .iter()
            .map(|c| format!("{}×L({}) dim {}", c.multiplicity, c.label[0], c.dim))
            .collect();
        println!("Z_0({lambda}): {} (oracle agrees: {})", list.join(", "), peeled == oracle);
    }
    Ok(())
}
