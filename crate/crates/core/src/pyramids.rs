//! Left-justified pyramids, their nilpotent matrices and p-characters,
//! fillings with the column-connected and row-standard predicates, the integer
//! lift of a column-connected filling, Robinson–Schensted shapes, centralizer
//! dimensions and the end-to-end check that suitable lifted labels give a
//! nonzero reduction surjecting onto a minimal-dimensional simple module.
//!
//! Boxes are numbered `0..N` row by row from the top (shortest) row, left to
//! right. Box `i` is directly above box `j` when they share a column and `j`
//! sits in the next row down.

use crate::charzero::{head_surjection_check, reduce_simple, Regime};
use crate::envelope::{ChiForm, LieAlgebra};
use crate::exactlin::{FpMatrix, PrimeField};
use crate::modrep::SimpleCatalog;
use crate::rootdata::Kind;
use crate::{Error, Result};
use num_bigint::BigUint;
use num_rational::BigRational;
use serde::Serialize;
use std::collections::BTreeSet;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pyramid {
    rows: Vec<usize>,
    row_of: Vec<usize>,
    col_of: Vec<usize>,
    row_start: Vec<usize>,
}

impl Pyramid {
    /// Row lengths from the top; they must be positive and weakly increasing.
    pub fn new(rows: &[usize]) -> Result<Self> {
        if rows.is_empty() || rows.contains(&0) || rows.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidInput(format!("{rows:?} is not a weakly increasing list of positive row lengths")));
        }
        let mut row_of = Vec::new();
        let mut col_of = Vec::new();
        let mut row_start = Vec::new();
        for (r, &len) in rows.iter().enumerate() {
            row_start.push(row_of.len());
            for c in 0..len {
                row_of.push(r);
                col_of.push(c);
            }
        }
        Ok(Pyramid {
            rows: rows.to_vec(),
            row_of,
            col_of,
            row_start,
        })
    }

    /// Accepts a partition in any order.
    pub fn from_partition(parts: &[usize]) -> Result<Self> {
        let mut rows = parts.to_vec();
        rows.sort_unstable();
        Self::new(&rows)
    }

    pub fn n(&self) -> usize {
        self.row_of.len()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn row(&self, b: usize) -> usize {
        self.row_of[b]
    }

    pub fn col(&self, b: usize) -> usize {
        self.col_of[b]
    }

    pub fn boxes_in_row(&self, r: usize) -> std::ops::Range<usize> {
        self.row_start[r]..self.row_start[r] + self.rows[r]
    }

    /// The box directly below `b`, if any.
    pub fn below(&self, b: usize) -> Option<usize> {
        let r = self.row_of[b] + 1;
        (r < self.rows.len()).then(|| self.row_start[r] + self.col_of[b])
    }

    /// Pairs `(i, i+1)` of horizontally adjacent boxes.
    pub fn horizontal_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n().saturating_sub(1))
            .filter(|&i| self.row_of[i] == self.row_of[i + 1])
            .map(|i| (i, i + 1))
            .collect()
    }

    /// Box indices of column `c`, from the top.
    pub fn column(&self, c: usize) -> Vec<usize> {
        (0..self.n()).filter(|&b| self.col_of[b] == c).collect()
    }

    pub fn num_columns(&self) -> usize {
        *self.rows.last().expect("nonempty")
    }

    /// Partition sorted decreasingly.
    pub fn shape(&self) -> Vec<usize> {
        let mut s = self.rows.clone();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// The nonzero entries `(i, j)` of the nilpotent matrix: `e_{i,i+1}` for
    /// each horizontal pair.
    pub fn nilpotent_entries(&self) -> Vec<(usize, usize)> {
        self.horizontal_pairs()
    }

    pub fn nilpotent_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        let mut m = vec![vec![0i64; n]; n];
        for (i, j) in self.nilpotent_entries() {
            m[i][j] = 1;
        }
        m
    }

    /// The p-character `x ↦ tr(e_π x)`: value 1 on `e_{i+1,i}` for each horizontal pair.
    pub fn chi(&self, alg: &LieAlgebra, field: PrimeField) -> Result<ChiForm> {
        if alg.n() != self.n() {
            return Err(Error::DimensionMismatch(format!("pyramid has {} boxes, algebra rank parameter {}", self.n(), alg.n())));
        }
        let entries: Vec<((usize, usize), i64)> = self.horizontal_pairs().into_iter().map(|(i, j)| ((j, i), 1)).collect();
        let chi = ChiForm::from_root_values(alg, field, &entries)?;
        if chi.levi_set(alg).is_none() {
            return Err(Error::Certification("pyramid character is not in standard Levi form".into()));
        }
        Ok(chi)
    }

    /// Each box value is one more than the value below it (mod p if given).
    pub fn is_column_connected(&self, a: &[i64], p: Option<u64>) -> bool {
        (0..self.n()).all(|b| match self.below(b) {
            None => true,
            Some(c) => match p {
                Some(p) => (a[b] - a[c] - 1).rem_euclid(p as i64) == 0,
                None => a[b] == a[c] + 1,
            },
        })
    }

    /// Entries are non-decreasing along each row.
    pub fn is_row_standard(&self, a: &[i64]) -> bool {
        self.horizontal_pairs().iter().all(|&(i, j)| a[i] <= a[j])
    }

    /// Entries strictly increase going up each column.
    pub fn is_column_strict(&self, a: &[i64]) -> bool {
        (0..self.n()).all(|b| self.below(b).is_none_or(|c| a[b] > a[c]))
    }

    /// Rows agree as multisets.
    pub fn row_equivalent(&self, a: &[i64], b: &[i64]) -> bool {
        (0..self.rows.len()).all(|r| {
            let mut x: Vec<i64> = self.boxes_in_row(r).map(|i| a[i]).collect();
            let mut y: Vec<i64> = self.boxes_in_row(r).map(|i| b[i]).collect();
            x.sort_unstable();
            y.sort_unstable();
            x == y
        })
    }

    /// Sorts each row, giving a representative of the row-equivalence class.
    pub fn row_canonical(&self, a: &[u64]) -> Vec<u64> {
        let mut out = a.to_vec();
        for r in 0..self.rows.len() {
            out[self.boxes_in_row(r)].sort_unstable();
        }
        out
    }
}

/// Lifts a column-connected mod-p filling to integers, column by column: the
/// bottom entry is the least lift exceeding every entry already placed (the
/// least non-negative residue in the first column) and the entries above
/// follow by adding 1 each step up.
pub fn lift_column_connected(pyr: &Pyramid, a: &[u64], p: u64) -> Result<Vec<i64>> {
    let signed: Vec<i64> = a.iter().map(|&x| (x % p) as i64).collect();
    if !pyr.is_column_connected(&signed, Some(p)) {
        return Err(Error::InvalidInput("filling is not column-connected".into()));
    }
    let p = p as i64;
    let mut out = vec![0i64; pyr.n()];
    let mut floor: Option<i64> = None;
    for c in 0..pyr.num_columns() {
        let col = pyr.column(c);
        let bottom = *col.last().expect("columns are nonempty");
        let residue = signed[bottom];
        let b = match floor {
            None => residue,
            Some(m) => residue + p * (m - residue + p).div_euclid(p),
        };
        let height = col.len() as i64;
        for (k, &box_id) in col.iter().enumerate() {
            out[box_id] = b + (height - 1 - k as i64);
        }
        floor = Some(b + height - 1);
    }
    Ok(out)
}

/// Shape of the Robinson–Schensted insertion tableau, rows sorted decreasingly.
pub fn rs_shape(word: &[i64]) -> Result<Vec<usize>> {
    let distinct: BTreeSet<i64> = word.iter().copied().collect();
    if distinct.len() != word.len() {
        return Err(Error::InvalidInput("word has repeated entries".into()));
    }
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for &x in word {
        let mut carry = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            match row.iter().position(|&y| y > carry) {
                Some(pos) => carry = std::mem::replace(&mut row[pos], carry),
                None => {
                    row.push(carry);
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            rows.push(vec![carry]);
        }
    }
    Ok(rows.iter().map(Vec::len).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerDims {
    pub gl_centralizer: usize,
    pub borel_centralizer: usize,
    pub orbit: usize,
    /// `p^{orbit/2}`, the smallest possible dimension of a module for this character.
    #[serde(serialize_with = "crate::report::biguint_as_string")]
    pub min_dim: BigUint,
    /// The kernel computation agrees with the formulas (`None` when not run).
    pub oracle_agrees: Option<bool>,
}

/// Centralizer and orbit dimensions from the row lengths; for `N ≤ 9` they are
/// also recomputed as kernels of `Z ↦ [Z, e_π]` over `F_p`.
pub fn centralizer_dims(pyr: &Pyramid, p: u64) -> Result<CentralizerDims> {
    let rows = pyr.rows();
    let mut gl = 0;
    let mut borel = 0;
    for (i, &a) in rows.iter().enumerate() {
        for (j, &b) in rows.iter().enumerate() {
            gl += a.min(b);
            if j <= i {
                borel += a.min(b);
            }
        }
    }
    let n = pyr.n();
    let orbit = n * n - gl;
    if !orbit.is_multiple_of(2) {
        return Err(Error::Certification("orbit dimension is odd".into()));
    }
    let oracle_agrees = if n <= 9 {
        let field = PrimeField::new(p)?;
        let (og, ob) = centralizer_oracle(pyr, field);
        if (og, ob) != (gl, borel) {
            return Err(Error::Certification(format!(
                "centralizer formulas give ({gl}, {borel}) but kernels give ({og}, {ob})"
            )));
        }
        Some(true)
    } else {
        None
    };
    Ok(CentralizerDims {
        gl_centralizer: gl,
        borel_centralizer: borel,
        orbit,
        min_dim: BigUint::from(p).pow((orbit / 2) as u32),
        oracle_agrees,
    })
}

/// Dimensions of `{Z : [Z, e_π] = 0}` in `𝔤𝔩_N` and in upper triangular matrices.
pub fn centralizer_oracle(pyr: &Pyramid, field: PrimeField) -> (usize, usize) {
    let n = pyr.n();
    let e = pyr.nilpotent_matrix();
    // Unknown Z_{ab} is column a·n + b; equation (i, j) is ([Z, e])_{ij} = Σ_k Z_{ik} e_{kj} − e_{ik} Z_{kj}.
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![0i64; n * n];
            for k in 0..n {
                row[i * n + k] += e[k][j];
                row[k * n + j] -= e[i][k];
            }
            rows.push(row);
        }
    }
    let full = FpMatrix::from_rows(field, &rows).expect("rectangular");
    let gl = n * n - full.rank();
    let upper: Vec<usize> = (0..n * n).filter(|&c| c / n <= c % n).collect();
    let restricted: Vec<Vec<i64>> = rows.iter().map(|r| upper.iter().map(|&c| r[c]).collect()).collect();
    let b = FpMatrix::from_rows(field, &restricted).expect("rectangular");
    (gl, upper.len() - b.rank())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaCheck {
    /// `σ(j) = N − 1 − w⁻¹(j)` where `w⁻¹(j)` is the rank of entry `j` in decreasing order.
    pub sigma: Vec<usize>,
    pub adjacent_pairs_ordered: bool,
    /// `Ad(σ̇)(e_π)` is strictly upper triangular, checked on matrices.
    pub conjugate_upper_triangular: bool,
}

impl SigmaCheck {
    pub fn holds(&self) -> bool {
        self.adjacent_pairs_ordered && self.conjugate_upper_triangular
    }
}

/// Sorting the lifted entries decreasingly defines `w`; with `σ = w₀ w⁻¹`
/// the conjugate of `e_π` by the permutation matrix of `σ` must lie in the
/// positive nilradical.
pub fn sigma_check(pyr: &Pyramid, lifted: &[i64]) -> Result<SigmaCheck> {
    let n = pyr.n();
    if lifted.len() != n {
        return Err(Error::DimensionMismatch("one entry per box".into()));
    }
    let mut sorted = lifted.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput("lifted entries must be distinct".into()));
    }
    let w_inv: Vec<usize> = lifted
        .iter()
        .map(|x| sorted.iter().position(|y| y == x).expect("present"))
        .collect();
    let sigma: Vec<usize> = w_inv.iter().map(|&r| n - 1 - r).collect();
    let adjacent_pairs_ordered = pyr.horizontal_pairs().iter().all(|&(i, j)| sigma[i] < sigma[j]);
    // P e_j = e_{σ(j)}, so (P E P⁻¹)_{σ(i) σ(j)} = E_{ij}.
    let e = pyr.nilpotent_matrix();
    let mut perm = vec![vec![0i64; n]; n];
    for j in 0..n {
        perm[sigma[j]][j] = 1;
    }
    let perm_inv: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| perm[j][i]).collect()).collect();
    let conj = int_mul(&int_mul(&perm, &e), &perm_inv);
    let conjugate_upper_triangular = (0..n).all(|i| (0..=i).all(|j| conj[i][j] == 0));
    Ok(SigmaCheck {
        sigma,
        adjacent_pairs_ordered,
        conjugate_upper_triangular,
    })
}

fn int_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// All ways of permuting entries within rows.
fn row_permutations(pyr: &Pyramid, a: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![a.to_vec()];
    for r in 0..pyr.rows().len() {
        let range = pyr.boxes_in_row(r);
        let mut next = Vec::new();
        for base in &out {
            let mut seen = BTreeSet::new();
            for perm in permutations(&base[range.clone()]) {
                if seen.insert(perm.clone()) {
                    let mut v = base.clone();
                    v[range.clone()].copy_from_slice(&perm);
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out
}

fn permutations(items: &[u64]) -> Vec<Vec<u64>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// A column-connected row permutation of `a`, if one exists.
pub fn column_connected_representative(pyr: &Pyramid, a: &[u64], p: u64) -> Option<Vec<u64>> {
    row_permutations(pyr, a).into_iter().find(|v| {
        let s: Vec<i64> = v.iter().map(|&x| x as i64).collect();
        pyr.is_column_connected(&s, Some(p))
    })
}

/// Row-sorted fillings mod p that are row-equivalent to a column-connected one.
pub fn min_dim_classification(pyr: &Pyramid, p: u64) -> Result<BTreeSet<Vec<u64>>> {
    const LIMIT: u128 = 1 << 20;
    let total = (p as u128).checked_pow(pyr.n() as u32).unwrap_or(u128::MAX);
    if total > LIMIT {
        return Err(Error::TooLarge(format!("{total} fillings exceeds the enumeration bound {LIMIT}")));
    }
    let mut out = BTreeSet::new();
    for filling in all_fillings(pyr.n(), p) {
        let canon = pyr.row_canonical(&filling);
        if !out.contains(&canon) && column_connected_representative(pyr, &filling, p).is_some() {
            out.insert(canon);
        }
    }
    Ok(out)
}

/// Every function from boxes to `F_p`, lexicographically.
pub fn all_fillings(n: usize, p: u64) -> Vec<Vec<u64>> {
    let total = (p as usize).pow(n as u32);
    (0..total)
        .map(|mut idx| {
            let mut v = vec![0u64; n];
            for x in v.iter_mut().rev() {
                *x = (idx % p as usize) as u64;
                idx /= p as usize;
            }
            v
        })
        .collect()
}

/// The mod-p highest weight attached to a filling: `a_i + (i + 1)` on the
/// diagonal torals of `𝔤𝔩_N`.
pub fn filling_label(a: &[u64], p: u64) -> Vec<u64> {
    a.iter().enumerate().map(|(i, &x)| (x + i as u64 + 1) % p).collect()
}

/// Dimension of the simple module labelled by a filling.
pub fn filling_simple_dim(catalog: &mut SimpleCatalog, a: &[u64], p: u64) -> Result<usize> {
    catalog.simple_dim(&filling_label(a, p))
}

#[derive(Clone, Debug, Serialize)]
pub struct SummationReport {
    pub filling: Vec<u64>,
    pub column_connected_representative: Vec<u64>,
    pub lifted: Vec<i64>,
    /// ε-coordinates of `λ_Â − ρ`.
    pub lambda: Vec<i64>,
    pub regime: Regime,
    pub reduction_dim: usize,
    pub nonzero: bool,
    pub surjects_onto_simple: bool,
    pub simple_dim: usize,
    #[serde(serialize_with = "crate::report::biguint_as_string")]
    pub min_dim: BigUint,
    pub window_stable: bool,
    /// The primality and variety statements have no finite certificate here.
    pub remaining_parts: &'static str,
}

/// Lifts a minimal label, reduces `L(λ_Â − ρ)` over `𝔤𝔩_N` and checks it is
/// nonzero with a surjection onto `L_{χ_π}` of the filling's label. `window`
/// overrides the default truncation depth.
pub fn summation_pipeline(pyr: &Pyramid, p: u64, a: &[u64], window: Option<usize>) -> Result<SummationReport> {
    let field = PrimeField::new(p)?;
    let rep = column_connected_representative(pyr, a, p)
        .ok_or_else(|| Error::Hypothesis("filling is not row-equivalent to a column-connected one".into()))?;
    let lifted = lift_column_connected(pyr, &rep, p)?;
    let lambda: Vec<i64> = lifted.iter().enumerate().map(|(i, &x)| x + i as i64 + 1).collect();
    let alg = Arc::new(LieAlgebra::new(Kind::Gl, pyr.n())?);
    let chi = pyr.chi(&alg, field)?;
    let lambda_q: Vec<BigRational> = lambda.iter().map(|&x| BigRational::from_integer(x.into())).collect();
    let red = reduce_simple(&alg, &lambda_q, &chi, window)?;
    let label = filling_label(&rep, p);
    let mut catalog = SimpleCatalog::new(alg.clone(), chi.clone())?;
    let simple_dim = catalog.simple_dim(&label)?;
    let nonzero = red.quotient.module.dim() > 0;
    let surjects = nonzero && head_surjection_check(&red.quotient, &label)?;
    Ok(SummationReport {
        filling: a.to_vec(),
        column_connected_representative: rep,
        lifted,
        lambda,
        regime: red.regime,
        reduction_dim: red.quotient.module.dim(),
        nonzero,
        surjects_onto_simple: surjects,
        simple_dim,
        min_dim: centralizer_dims(pyr, p)?.min_dim,
        window_stable: red.stable,
        remaining_parts: "not checked",
    })
}
