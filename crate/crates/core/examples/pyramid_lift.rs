//! The (1,2,2,4) pyramid: its nilpotent, a column-connected filling mod 7,
//! the canonical integral lift, its Robinson–Schensted shape and σ.
use babyverma::pyramids::{lift_column_connected, rs_shape, sigma_check, Pyramid};

fn main() -> babyverma::Result<()> {
    let pyr = Pyramid::new(&[1, 2, 2, 4])?;
    let e: Vec<String> = pyr.nilpotent_entries().iter().map(|(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    println!("e_π = {}", e.join(" + "));
    let a = [2, 1, 6, 0, 5, 6, 4, 1, 0];
    let lifted = lift_column_connected(&pyr, &a, 7)?;
    println!("filling {a:?} lifts to {lifted:?}");
    println!(
        "column-connected {}, row-standard {}, RS shape {:?}",
        pyr.is_column_connected(&lifted, None),
        pyr.is_row_standard(&lifted),
        rs_shape(&lifted)?
    );
    let sigma = sigma_check(&pyr, &lifted)?;
    println!("σ = {:?}, Ad(σ)e_π upper triangular: {}", sigma.sigma, sigma.holds());
    Ok(())
}
