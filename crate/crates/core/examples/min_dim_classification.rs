//! Fillings of the (1,2) pyramid at p = 3: which simple modules have the
//! minimal dimension, compared with the column-connected criterion.
use babyverma::envelope::LieAlgebra;
use babyverma::exactlin::PrimeField;
use babyverma::modrep::SimpleCatalog;
use babyverma::pyramids::{all_fillings, filling_simple_dim, min_dim_classification, Pyramid};
use babyverma::rootdata::Kind;
use std::sync::Arc;

fn main() -> babyverma::Result<()> {
    let (pyr, p) = (Pyramid::new(&[1, 2])?, 3);
    let alg = Arc::new(LieAlgebra::new(Kind::Gl, 3)?);
    let mut catalog = SimpleCatalog::new(alg.clone(), pyr.chi(&alg, PrimeField::new(p)?)?)?;
    let classified = min_dim_classification(&pyr, p)?;
    for a in all_fillings(3, p) {
        let dim = filling_simple_dim(&mut catalog, &a, p)?;
        let mark = if classified.contains(&pyr.row_canonical(&a)) { "column-connected class" } else { "" };
        println!("{a:?}: dim L = {dim:2} {mark}");
    }
    Ok(())
}
