//! Comparing gl2 and sl2 reductions of the same highest weight.
use babyverma::charzero::gl_sl_compare;
use babyverma::exactlin::{rat, PrimeField};

fn main() -> babyverma::Result<()> {
    for p in [3, 5] {
        let field = PrimeField::new(p)?;
        for (lambda, chi) in [([rat(3, 1), rat(1, 1)], vec![]), ([rat(-1, 2), rat(1, 1)], vec![((1, 0), 1)])] {
            let c = gl_sl_compare(2, &lambda, &chi, field)?;
            let shown: Vec<String> = lambda.iter().map(|q| q.to_string()).collect();
            println!("p = {p}, λ = ({}), χ(f) = {}: gl dim {}, sl dim {}, equal {}", shown.join(", "), chi.len(), c.gl_dim, c.sl_dim, c.equal);
        }
    }
    Ok(())
}
