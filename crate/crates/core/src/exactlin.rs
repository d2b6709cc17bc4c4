//! Exact arithmetic over prime fields and the rationals, and the dense linear
//! algebra every other module is built on.
//!
//! Matrices over `F_p` store residues in `[0, p)` row-major. Subspaces are kept
//! in reduced row-echelon form, so two subspaces are equal exactly when their
//! stored bases are equal.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// The field `F_p` for an odd prime `p` small enough that products of two
/// residues fit in a `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(3..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::BadModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero, which is always a logic error
    /// at the call sites (pivots are nonzero by construction).
    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    /// Signed representative in `(-p/2, p/2]`, handy for printing.
    pub fn signed(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// Reduces a rational number, failing when `p` divides its denominator.
    pub fn reduce_rational(&self, q: &BigRational) -> Result<u64> {
        let pb = BigInt::from(self.p);
        let den = q.denom().mod_floor_big(&pb);
        if den.is_zero() {
            return Err(Error::DenominatorDivisible {
                p: self.p,
                coefficient: q.to_string(),
            });
        }
        let num = q.numer().mod_floor_big(&pb);
        let n = num.to_u64().expect("residue fits");
        let d = den.to_u64().expect("residue fits");
        Ok(self.mul(n, self.inv(d)))
    }
}

trait ModFloorBig {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt;
}

impl ModFloorBig for BigInt {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A coefficient ring, used by algorithms that run unchanged over `F_p` and
/// over the rationals (PBW straightening in particular).
pub trait Scalars {
    type Elem: Clone + PartialEq + fmt::Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn embed_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

impl Scalars for PrimeField {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn embed_i64(&self, v: i64) -> u64 {
        self.reduce(v)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::add(self, *a, *b)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::mul(self, *a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        PrimeField::neg(self, *a)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

/// The rational numbers with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Scalars for Rationals {
    type Elem = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn embed_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense matrix over `F_p`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix mod {} ({}x{})", self.field.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl FpMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FpMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing every entry.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| field.reduce(v)).collect();
        Ok(FpMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix whose rows are the given residue vectors.
    pub fn from_residue_rows(field: PrimeField, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r.iter().map(|v| v % field.p));
        }
        FpMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.field.p;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.cols != other.rows || self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.field.p;
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (slot, &b) in acc.iter_mut().zip(orow) {
                    *slot = (*slot + a * b) % p;
                }
            }
            out.data[r * other.cols..(r + 1) * other.cols].copy_from_slice(&acc);
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.p;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a * b) % p)
            })
            .collect()
    }

    pub fn add(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.combine(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.combine(other, |f, a, b| f.sub(a, b))
    }

    fn combine(&self, other: &FpMatrix, op: impl Fn(&PrimeField, u64, u64) -> u64) -> Result<FpMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("entrywise operation".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| op(&self.field, a, b))
            .collect();
        Ok(FpMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: u64) -> FpMatrix {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = self.field.mul(*v, s % self.field.p);
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Result<FpMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut acc = Self::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref_with_pivots(&self) -> (FpMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m.data, m.rows, m.cols, m.field);
        (m, pivots)
    }

    /// Reduced row-echelon form and rank.
    pub fn rref(&self) -> (FpMatrix, usize) {
        let (m, piv) = self.rref_with_pivots();
        (m, piv.len())
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Right null space `{x : M x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let field = self.field;
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(r.get(row, free));
            }
            basis.push(v);
        }
        Subspace::from_vectors(field, n, &basis)
    }

    /// Some solution of `M x = b`, if one exists.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for (r, &rhs) in b.iter().enumerate() {
            aug.data[r * (self.cols + 1)..r * (self.cols + 1) + self.cols].copy_from_slice(self.row(r));
            aug.data[r * (self.cols + 1) + self.cols] = rhs % self.field.p;
        }
        let (red, pivots) = aug.rref_with_pivots();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u64; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = red.get(row, self.cols);
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for r in 0..n {
            aug.data[r * 2 * n..r * 2 * n + n].copy_from_slice(self.row(r));
            aug.data[r * 2 * n + n + r] = 1;
        }
        let (red, pivots) = aug.rref_with_pivots();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(self.field, n, n);
        for r in 0..n {
            inv.data[r * n..(r + 1) * n].copy_from_slice(&red.row(r)[n..]);
        }
        Some(inv)
    }

    /// The row space as a subspace of `F_p^cols`.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.cols, &self.row_vectors())
    }
}

/// Row-reduces a row-major buffer in place and returns the pivot columns.
fn rref_in_place(data: &mut [u64], rows: usize, cols: usize, field: PrimeField) -> Vec<usize> {
    let p = field.p;
    let mut pivots = Vec::new();
    let mut lead = 0;
    for c in 0..cols {
        if lead == rows {
            break;
        }
        let Some(r) = (lead..rows).find(|&r| data[r * cols + c] != 0) else {
            continue;
        };
        if r != lead {
            for j in 0..cols {
                data.swap(r * cols + j, lead * cols + j);
            }
        }
        let inv = field.inv(data[lead * cols + c]);
        for j in c..cols {
            data[lead * cols + j] = data[lead * cols + j] * inv % p;
        }
        let (before, rest) = data.split_at_mut(lead * cols);
        let (pivot_row, after) = rest.split_at_mut(cols);
        let eliminate = |row: &mut [u64]| {
            let f = row[c];
            if f != 0 {
                let nf = p - f;
                for j in c..cols {
                    row[j] = (row[j] + nf * pivot_row[j]) % p;
                }
            }
        };
        before.chunks_mut(cols).for_each(eliminate);
        after.chunks_mut(cols).for_each(eliminate);
        pivots.push(c);
        lead += 1;
    }
    pivots
}

/// A subspace of `F_p^n`, stored as the reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in F_{}^{}: {:?})", self.dim(), self.field.p, self.ambient, self.basis)
    }
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Subspace {
            field,
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_vectors(field: PrimeField, ambient: usize, vectors: &[Vec<u64>]) -> Self {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Span of standard basis vectors with the given indices.
    pub fn coordinate(field: PrimeField, ambient: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vec<u64>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Self::from_vectors(field, ambient, &vs)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> FpMatrix {
        FpMatrix::from_residue_rows(self.field, self.ambient, &self.basis)
    }

    /// Subtracts the basis to clear every pivot coordinate of `v`.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field;
        let mut w: Vec<u64> = v.iter().map(|x| x % f.p).collect();
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = w[pc];
            if c != 0 {
                let nc = f.p - c;
                for (wi, &bi) in w.iter_mut().zip(b) {
                    if bi != 0 {
                        *wi = (*wi + nc * bi) % f.p;
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Adds a vector; returns true when the dimension grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let w = self.reduce(v);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(w[pc]);
        let w: Vec<u64> = w.iter().map(|&x| f.mul(x, inv)).collect();
        for b in &mut self.basis {
            let c = b[pc];
            if c != 0 {
                let nc = f.p - c;
                for (bi, &wi) in b.iter_mut().zip(&w) {
                    *bi = (*bi + nc * wi) % f.p;
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(pos, pc);
        self.basis.insert(pos, w);
        true
    }

    /// Coordinates of `v` with respect to the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc] % self.field.p).collect())
    }

    /// Columns that are not pivots; their standard basis vectors span a
    /// complement and serve as coset representatives for the quotient.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Coordinates of the class of `v` in the quotient, with respect to the
    /// representatives given by [`Subspace::non_pivots`].
    pub fn quotient_coordinates(&self, v: &[u64]) -> Vec<u64> {
        let w = self.reduce(v);
        self.non_pivots().into_iter().map(|c| w[c]).collect()
    }

    /// Lifts quotient coordinates back to a vector supported on the representatives.
    pub fn quotient_lift(&self, coords: &[u64]) -> Vec<u64> {
        let np = self.non_pivots();
        assert_eq!(coords.len(), np.len());
        let mut v = vec![0; self.ambient];
        for (&c, &x) in np.iter().zip(coords) {
            v[c] = x;
        }
        v
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient || self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of F_{}^{} and F_{}^{}",
                self.field.p, self.ambient, other.field.p, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v);
        }
        Ok(s)
    }

    /// Vectors orthogonal to the subspace under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.field, self.ambient);
        }
        self.basis_matrix().kernel()
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let both = self.annihilator().sum(&other.annihilator())?;
        Ok(both.annihilator())
    }
}

/// Sparse matrix over `F_p` stored by columns; used for module actions, whose
/// columns typically have a handful of nonzero entries.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    field: PrimeField,
    rows: usize,
    columns: Vec<Vec<(usize, u64)>>,
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_dense())
    }
}

impl SparseMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        SparseMatrix {
            field,
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        SparseMatrix {
            field,
            rows: n,
            columns: (0..n).map(|i| vec![(i, 1)]).collect(),
        }
    }

    /// Builds from dense columns, dropping zeros.
    pub fn from_columns(field: PrimeField, rows: usize, columns: Vec<Vec<u64>>) -> Self {
        let columns = columns
            .into_iter()
            .map(|c| {
                assert_eq!(c.len(), rows);
                c.into_iter()
                    .enumerate()
                    .filter(|&(_, v)| v % field.p != 0)
                    .map(|(i, v)| (i, v % field.p))
                    .collect()
            })
            .collect();
        SparseMatrix { field, rows, columns }
    }

    /// Builds from sparse columns; entries are reduced, merged and sorted.
    pub fn from_sparse_columns(field: PrimeField, rows: usize, columns: Vec<Vec<(usize, u64)>>) -> Self {
        let columns = columns
            .into_iter()
            .map(|c| normalize_sparse(field, c))
            .collect();
        SparseMatrix { field, rows, columns }
    }

    pub fn from_dense(m: &FpMatrix) -> Self {
        let cols = (0..m.cols()).map(|c| m.column(c)).collect();
        Self::from_columns(m.field(), m.rows(), cols)
    }

    pub fn to_dense(&self) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.field, self.rows, self.columns.len());
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> &[(usize, u64)] {
        &self.columns[c]
    }

    pub fn column_dense(&self, c: usize) -> Vec<u64> {
        let mut v = vec![0; self.rows];
        for &(r, x) in &self.columns[c] {
            v[r] = x;
        }
        v
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.columns[c]
            .iter()
            .find(|&&(i, _)| i == r)
            .map_or(0, |&(_, v)| v)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.columns.len());
        let p = self.field.p;
        let mut out = vec![0u64; self.rows];
        for (col, &x) in self.columns.iter().zip(v) {
            if x == 0 {
                continue;
            }
            for &(r, a) in col {
                out[r] = (out[r] + a * x) % p;
            }
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols() != other.rows {
            return Err(Error::DimensionMismatch("sparse product".into()));
        }
        let f = self.field;
        let columns = other
            .columns
            .iter()
            .map(|ocol| {
                let mut acc: Vec<(usize, u64)> = Vec::new();
                for &(k, b) in ocol {
                    for &(r, a) in &self.columns[k] {
                        acc.push((r, f.mul(a, b)));
                    }
                }
                normalize_sparse(f, acc)
            })
            .collect();
        Ok(SparseMatrix {
            field: f,
            rows: self.rows,
            columns,
        })
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.lin_comb(1, other, 1)
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.lin_comb(1, other, self.field.p - 1)
    }

    /// `a * self + b * other`.
    pub fn lin_comb(&self, a: u64, other: &SparseMatrix, b: u64) -> Result<SparseMatrix> {
        if self.rows != other.rows || self.cols() != other.cols() {
            return Err(Error::DimensionMismatch("sparse sum".into()));
        }
        let f = self.field;
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(x, y)| {
                let acc = x
                    .iter()
                    .map(|&(r, v)| (r, f.mul(v, a)))
                    .chain(y.iter().map(|&(r, v)| (r, f.mul(v, b))))
                    .collect();
                normalize_sparse(f, acc)
            })
            .collect();
        Ok(SparseMatrix {
            field: f,
            rows: self.rows,
            columns,
        })
    }

    pub fn scale(&self, s: u64) -> SparseMatrix {
        let z = SparseMatrix::zeros(self.field, self.rows, self.cols());
        self.lin_comb(s % self.field.p, &z, 0).expect("same shape")
    }

    pub fn pow(&self, e: u64) -> Result<SparseMatrix> {
        if self.rows != self.cols() {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut acc = SparseMatrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = self.mul(&acc)?;
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, u64)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                cols[r].push((c, v));
            }
        }
        SparseMatrix {
            field: self.field,
            rows: self.columns.len(),
            columns: cols,
        }
    }
}

fn normalize_sparse(f: PrimeField, mut entries: Vec<(usize, u64)>) -> Vec<(usize, u64)> {
    entries.sort_unstable_by_key(|e| e.0);
    let mut out: Vec<(usize, u64)> = Vec::with_capacity(entries.len());
    for (r, v) in entries {
        let v = v % f.p;
        match out.last_mut() {
            Some(last) if last.0 == r => last.1 = f.add(last.1, v),
            _ => out.push((r, v)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

/// Dense matrix of exact rationals, every entry kept in lowest terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch("rational product".into()));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * other.cols + c;
                        out.data[idx] = &out.data[idx] + a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn rref_with_pivots(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(r) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(r * m.cols + j, lead * m.cols + j);
            }
            let inv = m.get(lead, c).recip();
            for j in c..m.cols {
                let idx = lead * m.cols + j;
                m.data[idx] = &m.data[idx] * &inv;
            }
            for i in 0..m.rows {
                if i == lead || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(lead, j) * &f;
                    let idx = i * m.cols + j;
                    m.data[idx] = &m.data[idx] - v;
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Basis of the right null space.
    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[free] = BigRational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, free).clone();
                }
                v
            })
            .collect()
    }

    /// Least common multiple of all denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.data
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
    }

    pub fn reduce_mod(&self, field: PrimeField) -> Result<FpMatrix> {
        let mut m = FpMatrix::zeros(field, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, field.reduce_rational(self.get(r, c))?);
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn rref_examples() {
        let id = FpMatrix::identity(f(5), 2);
        assert_eq!(id.rref(), (id.clone(), 2));
        let m = FpMatrix::from_rows(f(5), &[vec![2, 4], vec![1, 2]]).unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r, FpMatrix::from_rows(f(5), &[vec![1, 2], vec![0, 0]]).unwrap());
        let z = FpMatrix::zeros(f(7), 3, 3);
        assert_eq!(z.rref(), (z.clone(), 0));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(FpMatrix::identity(f(3), 4).kernel().dim(), 0);
        assert_eq!(FpMatrix::zeros(f(5), 2, 3).kernel().dim(), 3);
        let m = FpMatrix::from_rows(f(5), &[vec![1, 2, 0]]).unwrap();
        let k = m.kernel();
        let expected = Subspace::from_vectors(f(5), 3, &[vec![3, 1, 0], vec![0, 0, 1]]);
        assert_eq!(k, expected);
        // Exhaustive oracle: the kernel is exactly the set of solutions.
        let mut count = 0;
        for a in 0..5 {
            for b in 0..5 {
                for c in 0..5 {
                    let v = vec![a, b, c];
                    let zero = m.mul_vec(&v)[0] == 0;
                    assert_eq!(zero, k.contains(&v));
                    count += zero as usize;
                }
            }
        }
        assert_eq!(count, 25);
    }

    #[test]
    fn subspace_examples() {
        let field = f(3);
        let a = Subspace::from_vectors(field, 2, &[vec![1, 0]]);
        let b = Subspace::from_vectors(field, 2, &[vec![0, 1]]);
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(field, 2));
        assert_eq!(a.intersection(&b).unwrap().dim(), 0);
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersection(&a).unwrap(), a);
        let c = Subspace::zero(field, 3);
        assert!(a.sum(&c).is_err());
    }

    #[test]
    fn quotient_coordinates_round_trip() {
        let field = f(5);
        let s = Subspace::from_vectors(field, 3, &[vec![1, 1, 0]]);
        let v = vec![2, 3, 4];
        let q = s.quotient_coordinates(&v);
        let lifted = s.quotient_lift(&q);
        let diff: Vec<u64> = v.iter().zip(&lifted).map(|(&a, &b)| field.sub(a, b)).collect();
        assert!(s.contains(&diff));
    }

    #[test]
    fn solve_and_inverse() {
        let field = f(7);
        let m = FpMatrix::from_rows(field, &[vec![1, 2], vec![3, 4]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), FpMatrix::identity(field, 2));
        let x = m.solve(&[5, 6]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![5, 6]);
        let sing = FpMatrix::from_rows(field, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(sing.inverse().is_none());
        assert!(sing.solve(&[1, 0]).is_none());
    }

    #[test]
    fn rational_reduction() {
        let field = f(5);
        assert_eq!(field.reduce_rational(&rat(1, 2)).unwrap(), 3);
        assert_eq!(field.reduce_rational(&rat(-3, 2)).unwrap(), 1);
        assert!(field.reduce_rational(&rat(1, 10)).is_err());
        let m = RationalMatrix::from_rows(vec![vec![rat(1, 2), rat(2, 3)], vec![rat(1, 1), rat(4, 3)]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.denominator_lcm(), BigInt::from(6));
        assert_eq!(m.kernel().len(), 1);
    }

    #[test]
    fn sparse_matches_dense() {
        let field = f(5);
        let a = FpMatrix::from_rows(field, &[vec![1, 0, 2], vec![0, 3, 4], vec![1, 1, 0]]).unwrap();
        let b = FpMatrix::from_rows(field, &[vec![0, 1, 1], vec![2, 0, 0], vec![3, 4, 1]]).unwrap();
        let sa = SparseMatrix::from_dense(&a);
        let sb = SparseMatrix::from_dense(&b);
        assert_eq!(sa.mul(&sb).unwrap().to_dense(), a.mul(&b).unwrap());
        assert_eq!(sa.sub(&sb).unwrap().to_dense(), a.sub(&b).unwrap());
        assert_eq!(sa.transpose().to_dense(), a.transpose());
        assert_eq!(sa.pow(3).unwrap().to_dense(), a.pow(3).unwrap());
        assert_eq!(sa.mul_vec(&[1, 2, 3]), a.mul_vec(&[1, 2, 3]));
    }

    fn matrix_strategy() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(-10i64..10, r * c)))
    }

    fn build(r: usize, c: usize, data: &[i64]) -> FpMatrix {
        let rows: Vec<Vec<i64>> = data.chunks(c).map(<[i64]>::to_vec).collect();
        assert_eq!(rows.len(), r);
        FpMatrix::from_rows(f(5), &rows).unwrap()
    }

    proptest! {
        #[test]
        fn rref_idempotent_and_rank_transpose((r, c, data) in matrix_strategy()) {
            let m = build(r, c, &data);
            let (red, rank) = m.rref();
            prop_assert_eq!(red.rref(), (red.clone(), rank));
            prop_assert_eq!(m.transpose().rank(), rank);
            prop_assert_eq!(m.row_space(), red.row_space());
        }

        #[test]
        fn kernel_dimension_and_content((r, c, data) in matrix_strategy()) {
            let m = build(r, c, &data);
            let k = m.kernel();
            prop_assert_eq!(k.dim() + m.rank(), c);
            for v in k.basis() {
                prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
            }
            prop_assert_eq!(m.rref().0.kernel(), k);
        }

        #[test]
        fn modular_dimension_law(a in proptest::collection::vec(0u64..5, 0..16), b in proptest::collection::vec(0u64..5, 0..16)) {
            let field = f(5);
            let va: Vec<Vec<u64>> = a.chunks_exact(4).map(<[u64]>::to_vec).collect();
            let vb: Vec<Vec<u64>> = b.chunks_exact(4).map(<[u64]>::to_vec).collect();
            let sa = Subspace::from_vectors(field, 4, &va);
            let sb = Subspace::from_vectors(field, 4, &vb);
            let sum = sa.sum(&sb).unwrap();
            let int = sa.intersection(&sb).unwrap();
            prop_assert_eq!(sum.dim() + int.dim(), sa.dim() + sb.dim());
            prop_assert!(sa.contains_subspace(&int) && sb.contains_subspace(&int));
            prop_assert!(sum.contains_subspace(&sa) && sum.contains_subspace(&sb));
        }
    }
}
