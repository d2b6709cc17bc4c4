//! Row reduction, kernels and subspace arithmetic over F_p.
use babyverma::exactlin::{FpMatrix, PrimeField, Subspace};

fn main() -> babyverma::Result<()> {
    let f5 = PrimeField::new(5)?;
    let m = FpMatrix::from_rows(f5, &[vec![2, 4], vec![1, 2]])?;
    let (r, rank) = m.rref();
    println!("rref of [[2,4],[1,2]] mod 5 has rank {rank}: {:?}", r.row_vectors());

    let k = FpMatrix::from_rows(f5, &[vec![1, 2, 0]])?.kernel();
    println!("kernel of [1 2 0] mod 5: {:?}", k.basis());

    let a = Subspace::from_vectors(f5, 4, &[vec![1, 0, 0, 1], vec![0, 1, 0, 0]]);
    let b = Subspace::from_vectors(f5, 4, &[vec![1, 1, 0, 1], vec![0, 0, 1, 0]]);
    let (sum, meet) = (a.sum(&b)?, a.intersection(&b)?);
    println!("dim a + dim b = {} = dim(a+b) + dim(a∩b) = {}", a.dim() + b.dim(), sum.dim() + meet.dim());
    Ok(())
}
