//! Positive roots by height, the dot action and linkage classes mod p.
use babyverma::exactlin::PrimeField;
use babyverma::rootdata::{dot_action, Kind, LeviSubset, RootDatum, WeylElement};

fn main() -> babyverma::Result<()> {
    let datum = RootDatum::new(Kind::Gl, 4)?;
    for (r, &(i, j)) in datum.positive_roots().iter().enumerate() {
        println!("root e{}-e{} has height {}", i + 1, j + 1, datum.root_height(r));
    }
    let s1 = WeylElement::transposition(3, 0, 1);
    println!("s1 . (2, 0, 0) = {:?}", dot_action(&s1, &[2, 0, 0]));

    let f5 = PrimeField::new(5)?;
    let sl2 = RootDatum::new(Kind::Sl, 2)?;
    // With χ regular nilpotent the Levi set is everything and λ is linked to s·λ.
    let regular = LeviSubset::all(2);
    for lambda in 0..5u64 {
        let orbit = sl2.linkage_orbit_toral(&[lambda], &regular, f5);
        println!("sl2, p = 5, regular χ: class of {lambda} is {orbit:?}, label {:?}", sl2.canonical_label(&[lambda], &regular, f5));
    }
    Ok(())
}
