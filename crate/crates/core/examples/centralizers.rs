//! Centralizer and orbit dimensions of e_π, formula against kernel oracle.
use babyverma::pyramids::{centralizer_dims, Pyramid};

fn main() -> babyverma::Result<()> {
    for rows in [vec![1, 2, 2, 4], vec![1, 2], vec![3], vec![1, 1, 1], vec![2, 2]] {
        let d = centralizer_dims(&Pyramid::new(&rows)?, 3)?;
        println!(
            "{rows:?}: gl centralizer {}, Borel centralizer {}, orbit {}, p^(orbit/2) at p = 3: {}, oracle {:?}",
            d.gl_centralizer, d.borel_centralizer, d.orbit, d.min_dim, d.oracle_agrees
        );
    }
    Ok(())
}
