//! For both pyramids of size 2, every minimal label lifts to a characteristic
//! zero weight whose reduction surjects onto the minimal simple module.
use babyverma::pyramids::{min_dim_classification, summation_pipeline, Pyramid};

fn main() -> babyverma::Result<()> {
    for rows in [vec![2], vec![1, 1]] {
        let pyr = Pyramid::new(&rows)?;
        for a in min_dim_classification(&pyr, 5)? {
            let r = summation_pipeline(&pyr, 5, &a, None)?;
            println!(
                "{rows:?} A = {a:?}: lift {:?}, λ = {:?}, dim {}, surjects {}",
                r.lifted, r.lambda, r.reduction_dim, r.surjects_onto_simple
            );
        }
    }
    Ok(())
}
