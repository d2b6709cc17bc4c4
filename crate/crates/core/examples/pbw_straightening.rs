//! Rewriting words in U(g) and U_χ(g) into ordered PBW monomials.
use babyverma::envelope::{format_word, LieAlgebra, Straightener};
use babyverma::exactlin::{PrimeField, Rationals};
use babyverma::rootdata::Kind;

fn main() -> babyverma::Result<()> {
    let sl2 = LieAlgebra::new(Kind::Sl, 2)?;
    let (f, e) = (sl2.root_vector(1, 0), sl2.root_vector(0, 1));
    let st = Straightener::new(&sl2, Rationals);
    println!("e f f = {:?}", pretty(&sl2, st.straighten(&[e, f, f])));

    let field = PrimeField::new(5)?;
    let mut chi_p = vec![0; sl2.dim()];
    chi_p[f] = 1;
    let reduced = Straightener::reduced(&sl2, field, 5, chi_p);
    println!("in U_χ with χ(f) = 1: f^5 = {:?}", pretty(&sl2, reduced.straighten(&[f; 5])));
    Ok(())
}

fn pretty<E: std::fmt::Display>(alg: &LieAlgebra, x: std::collections::BTreeMap<Vec<usize>, E>) -> Vec<String> {
    x.into_iter().map(|(w, c)| format!("{c}·{}", format_word(alg, &w))).collect()
}
