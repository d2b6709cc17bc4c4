//! Baby Verma modules in their monomial basis, the height filtration, tensor
//! products and the certified filtration of `Z_χ(λ) ⊗ Z_{χ′}(μ)` by baby Verma
//! modules for `χ + χ′`.

use crate::envelope::{central_scalar, is_in_lambda_chi, ChiForm, Exponents, LieAlgebra, MonomialAction};
use crate::exactlin::{FpMatrix, SparseMatrix, Subspace};
use crate::modrep::{coset_of, intertwiner_from_generators, MatrixModule, ModWeight};
use crate::rootdata::LeviSubset;
use crate::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// `Z_χ(λ)` with basis vector `Σ a_r p^r` equal to
/// `e_{−γ_D}^{a_D} ⋯ e_{−γ_1}^{a_1} z_λ`.
#[derive(Clone, Debug)]
pub struct BabyVerma {
    module: MatrixModule,
    lambda: ModWeight,
    monomials: Vec<Exponents>,
    depths: Vec<usize>,
}

impl BabyVerma {
    pub fn module(&self) -> &MatrixModule {
        &self.module
    }

    pub fn into_module(self) -> MatrixModule {
        self.module
    }

    pub fn lambda(&self) -> &[u64] {
        &self.lambda
    }

    pub fn monomials(&self) -> &[Exponents] {
        &self.monomials
    }

    /// `Σ a_r ht(γ_r)`, minus the height of the basis vector.
    pub fn depth(&self, i: usize) -> usize {
        self.depths[i]
    }

    pub fn index_of(&self, a: &[u32]) -> usize {
        let p = self.module.field().p() as usize;
        a.iter().rev().fold(0, |acc, &x| acc * p + x as usize)
    }

    /// The generator `z_λ`.
    pub fn generator(&self) -> Vec<u64> {
        self.module.unit(0)
    }

    /// Replaces the integral lift of `λ` used for gradings.
    pub fn relift(mut self, lambda_eps: &[i64]) -> Result<Self> {
        let iw = integral_weights(self.module.algebra(), lambda_eps, &self.monomials);
        self.module = self.module.with_int_weights(iw)?;
        Ok(self)
    }
}

fn integral_weights(alg: &LieAlgebra, lambda_eps: &[i64], monomials: &[Exponents]) -> Vec<Vec<i64>> {
    let roots = alg.datum().positive_roots();
    monomials
        .iter()
        .map(|a| {
            let mut w = lambda_eps.to_vec();
            for (r, &x) in a.iter().enumerate() {
                w[roots[r].0] -= x as i64;
                w[roots[r].1] += x as i64;
            }
            w
        })
        .collect()
}

/// All exponent vectors in `[0, p)^D`, in basis order.
pub fn all_exponents(p: u32, d: usize) -> Vec<Exponents> {
    let total = (p as usize).pow(d as u32);
    (0..total)
        .map(|mut idx| {
            (0..d)
                .map(|_| {
                    let x = (idx % p as usize) as u32;
                    idx /= p as usize;
                    x
                })
                .collect()
        })
        .collect()
}

/// Builds `Z_χ(λ)` for a mod-p weight given by toral values.
pub fn build_baby_verma(alg: &Arc<LieAlgebra>, chi: &ChiForm, lambda: &[u64]) -> Result<BabyVerma> {
    let f = chi.field();
    let datum = alg.datum();
    if lambda.len() != datum.num_torals() {
        return Err(Error::DimensionMismatch(format!(
            "expected {} toral values, got {}",
            datum.num_torals(),
            lambda.len()
        )));
    }
    if !chi.vanishes_on_positive(alg) {
        return Err(Error::InvalidInput("p-character must vanish on the positive nilradical".into()));
    }
    let lambda: Vec<u64> = lambda.iter().map(|&x| x % f.p()).collect();
    if !is_in_lambda_chi(alg, &lambda, chi) {
        return Err(Error::NotInLambdaChi(format!("{lambda:?}")));
    }
    let p = f.p() as u32;
    let d = datum.num_positive();
    let chi_p: Vec<u64> = (0..d).map(|r| central_scalar(chi, alg.negative(r))).collect();
    let mut action = MonomialAction::new(alg, f, lambda.clone(), Some((p, chi_p)));
    let monomials = all_exponents(p, d);
    let index = |a: &[u32]| a.iter().rev().fold(0usize, |acc, &x| acc * p as usize + x as usize);
    let mut actions = Vec::with_capacity(alg.dim());
    for k in 0..alg.dim() {
        let cols = monomials
            .iter()
            .map(|a| {
                let mut col: Vec<(usize, u64)> = action.act(k, a).into_iter().map(|(b, c)| (index(&b), c)).collect();
                col.sort_unstable();
                col
            })
            .collect();
        actions.push(SparseMatrix::from_sparse_columns(f, monomials.len(), cols));
    }
    let weights = monomials.iter().map(|a| action.weight(a)).collect();
    let lift: Vec<i64> = datum.toral_to_eps_mod(&lambda, f).into_iter().map(|x| x as i64).collect();
    let module = MatrixModule::new(alg.clone(), chi.clone(), actions, weights)?
        .with_int_weights(integral_weights(alg, &lift, &monomials))?;
    let heights: Vec<usize> = (0..d).map(|r| datum.root_height(r)).collect();
    let depths = monomials
        .iter()
        .map(|a| a.iter().zip(&heights).map(|(&x, &h)| x as usize * h).sum())
        .collect();
    Ok(BabyVerma {
        module,
        lambda,
        monomials,
        depths,
    })
}

/// The chain `V_{≥0} ⊆ V_{≥−1} ⊆ …` of spans of monomials of bounded depth.
#[derive(Clone, Debug)]
pub struct HeightFiltration {
    pub levels: Vec<Subspace>,
}

/// Builds the height filtration and certifies that a negative root vector of
/// height `h` lowers depth bounds by at most `h`, that positive root vectors
/// raise them (so `𝔫⁺` acts trivially on each layer) and torals preserve them.
pub fn height_filtration(z: &BabyVerma) -> Result<HeightFiltration> {
    let m = z.module();
    let alg = m.algebra();
    let f = m.field();
    let max_depth = z.depths.iter().copied().max().unwrap_or(0);
    for k in 0..alg.dim() {
        let bound: i64 = match alg.negative_root_of(k) {
            Some(r) => alg.datum().root_height(r) as i64,
            None if alg.positives().contains(&k) => -1,
            None => 0,
        };
        for c in 0..m.dim() {
            for &(r, _) in m.action(k).column(c) {
                if z.depths[r] as i64 > z.depths[c] as i64 + bound {
                    return Err(Error::Certification(format!(
                        "{} moves monomial {c} below its allowed depth",
                        alg.element(k)
                    )));
                }
            }
        }
    }
    let levels = (0..=max_depth)
        .map(|mdepth| {
            let idx: Vec<usize> = (0..m.dim()).filter(|&i| z.depths[i] <= mdepth).collect();
            Subspace::coordinate(f, m.dim(), &idx)
        })
        .collect();
    Ok(HeightFiltration { levels })
}

/// All monomial indices ordered by depth, then lexicographically by exponents.
/// Every prefix spans an `𝔫⁺`-stable subspace on which `𝔫⁺` acts trivially
/// modulo the previous prefix.
pub fn refined_filtration(z: &BabyVerma) -> Vec<usize> {
    let mut order: Vec<usize> = (0..z.module().dim()).collect();
    order.sort_by(|&a, &b| (z.depths[a], &z.monomials[a]).cmp(&(z.depths[b], &z.monomials[b])));
    order
}

/// Checks the prefix property of a refined order directly on the matrices.
pub fn certify_refined_order(z: &BabyVerma, order: &[usize]) -> bool {
    let m = z.module();
    let mut position = vec![0usize; order.len()];
    for (i, &b) in order.iter().enumerate() {
        position[b] = i;
    }
    m.algebra().positives().all(|k| {
        (0..m.dim()).all(|c| m.action(k).column(c).iter().all(|&(r, _)| position[r] < position[c]))
    })
}

fn kron(a: &SparseMatrix, b_dim: usize) -> Vec<Vec<(usize, u64)>> {
    let mut cols = Vec::with_capacity(a.cols() * b_dim);
    for c in 0..a.cols() {
        for j in 0..b_dim {
            cols.push(a.column(c).iter().map(|&(r, v)| (r * b_dim + j, v)).collect());
        }
    }
    cols
}

/// `M ⊗ N` with `x·(m ⊗ n) = xm ⊗ n + m ⊗ xn`, basis index `i·dim N + j`.
pub fn tensor(m: &MatrixModule, n: &MatrixModule) -> Result<MatrixModule> {
    if m.field() != n.field() || !Arc::ptr_eq(m.algebra(), n.algebra()) && m.algebra().basis() != n.algebra().basis() {
        return Err(Error::DimensionMismatch("tensor factors over different algebras or primes".into()));
    }
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let mut actions = Vec::with_capacity(m.algebra().dim());
    for k in 0..m.algebra().dim() {
        let mut cols = kron(m.action(k), dn);
        let b = n.action(k);
        for i in 0..dm {
            for j in 0..dn {
                let col = &mut cols[i * dn + j];
                col.extend(b.column(j).iter().map(|&(r, v)| (i * dn + r, v)));
                col.sort_unstable();
                let mut merged: Vec<(usize, u64)> = Vec::with_capacity(col.len());
                for &(r, v) in col.iter() {
                    match merged.last_mut() {
                        Some((lr, lv)) if *lr == r => *lv = f.add(*lv, v),
                        _ => merged.push((r, v)),
                    }
                }
                merged.retain(|&(_, v)| v != 0);
                *col = merged;
            }
        }
        actions.push(SparseMatrix::from_sparse_columns(f, dm * dn, cols));
    }
    let mut weights = Vec::with_capacity(dm * dn);
    for wm in m.weights() {
        for wn in n.weights() {
            weights.push(wm.iter().zip(wn).map(|(&a, &b)| f.add(a, b)).collect());
        }
    }
    let chi = m.chi().add(n.chi())?;
    let mut t = MatrixModule::new(m.algebra().clone(), chi, actions, weights)?;
    if let (Some(im), Some(inn)) = (m.int_weights(), n.int_weights()) {
        let mut iw = Vec::with_capacity(dm * dn);
        for a in im {
            for b in inn {
                iw.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        t = t.with_int_weights(iw)?;
    }
    Ok(t)
}

/// The basis `m_c · (z_λ ⊗ u_d)` of `Z_χ(λ) ⊗ Z_{χ′}(μ)`, with `d` running over
/// the refined order of the second factor (outer) and `c` over monomials
/// (inner), together with its inverse computed weight block by weight block.
pub struct TensorBasisChange {
    pub tensor: MatrixModule,
    /// Refined order of the second factor's monomials.
    pub order: Vec<usize>,
    /// Column `i·p^D + c` is `m_c · (z_λ ⊗ u_{order[i]})` in the product basis.
    pub columns: Vec<Vec<u64>>,
    blocks: HashMap<ModWeight, (Vec<usize>, Vec<usize>, FpMatrix)>,
    column_weight: Vec<ModWeight>,
}

impl TensorBasisChange {
    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    /// Coordinates of a weight vector of the tensor product in the new basis.
    pub fn coordinates(&self, v: &[u64]) -> Result<Vec<u64>> {
        let mut out = vec![0u64; self.dim()];
        let Some(w) = self.tensor.weight_of_vector(v) else {
            if v.iter().all(|&x| x == 0) {
                return Ok(out);
            }
            return Err(Error::InvalidInput("not a weight vector".into()));
        };
        let (rows, cols, inv) = &self.blocks[&w];
        let local: Vec<u64> = rows.iter().map(|&r| v[r]).collect();
        let sol = inv.mul_vec(&local);
        for (&c, x) in cols.iter().zip(sol) {
            out[c] = x;
        }
        Ok(out)
    }

    pub fn column_weight(&self, col: usize) -> &ModWeight {
        &self.column_weight[col]
    }
}

/// Builds the basis change and certifies it invertible.
pub fn tensor_basis_change(zl: &BabyVerma, zm: &BabyVerma) -> Result<TensorBasisChange> {
    let t = tensor(zl.module(), zm.module())?;
    let f = t.field();
    let order = refined_filtration(zm);
    let dn = zm.module().dim();
    let mut columns = Vec::with_capacity(t.dim());
    for &d in &order {
        let mut start = vec![0u64; t.dim()];
        start[d] = 1; // z_λ ⊗ u_d, since z_λ is basis vector 0 of the first factor
        columns.extend(t.monomial_images(&start));
    }
    debug_assert_eq!(columns.len(), zl.module().dim() * dn);
    let mut column_weight = Vec::with_capacity(columns.len());
    let mut by_weight: BTreeMap<ModWeight, Vec<usize>> = BTreeMap::new();
    for (i, c) in columns.iter().enumerate() {
        let w = t
            .weight_of_vector(c)
            .ok_or_else(|| Error::Certification(format!("basis-change column {i} is not a weight vector")))?;
        by_weight.entry(w.clone()).or_default().push(i);
        column_weight.push(w);
    }
    let row_table = t.weight_table();
    let mut blocks = HashMap::new();
    for (w, cols) in by_weight {
        let rows = row_table.get(&w).cloned().unwrap_or_default();
        if rows.len() != cols.len() {
            return Err(Error::Certification(format!("weight block {w:?} of the basis change is not square")));
        }
        let block_rows: Vec<Vec<u64>> = rows.iter().map(|&r| cols.iter().map(|&c| columns[c][r]).collect()).collect();
        let inv = FpMatrix::from_residue_rows(f, cols.len(), &block_rows)
            .inverse()
            .ok_or_else(|| Error::Certification(format!("basis change is singular on weight {w:?}")))?;
        blocks.insert(w, (rows, cols, inv));
    }
    Ok(TensorBasisChange {
        tensor: t,
        order,
        columns,
        blocks,
        column_weight,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationStep {
    /// Exponents of the monomial `u_d` of the second factor.
    pub b: Exponents,
    /// Toral values of `λ + μ − Σ b_r γ_r`.
    pub predicted_weight: ModWeight,
    pub quotient_dim: usize,
    /// The quotient's matrices coincide with those of the predicted baby Verma.
    pub matches_monomial_basis: bool,
    /// An isomorphism to the predicted baby Verma was found and verified.
    pub isomorphism_certified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiltrationReport {
    pub steps: Vec<FiltrationStep>,
    pub basis_change_invertible: bool,
    /// Every `W_i` is stable under all basis elements.
    pub submodules_stable: bool,
    /// Every exponent tuple appears exactly once.
    pub each_tuple_once: bool,
    /// `ℤI`-homogeneity of every basis-change column, when both characters
    /// have standard Levi form.
    pub graded: Option<bool>,
}

impl FiltrationReport {
    pub fn all_certified(&self) -> bool {
        self.basis_change_invertible
            && self.submodules_stable
            && self.each_tuple_once
            && self.graded != Some(false)
            && self.steps.iter().all(|s| s.matches_monomial_basis && s.isomorphism_certified)
    }

    /// Predicted weights with multiplicities.
    pub fn weight_multiset(&self) -> BTreeMap<ModWeight, usize> {
        let mut m = BTreeMap::new();
        for s in &self.steps {
            *m.entry(s.predicted_weight.clone()).or_insert(0) += 1;
        }
        m
    }
}

/// Certifies the filtration of `Z_χ(λ) ⊗ Z_{χ′}(μ)` whose `i`-th layer is
/// `U_{χ+χ′} · (z_λ ⊗ u_{d_i})` modulo the earlier ones, and identifies each
/// layer with `Z_{χ+χ′}(λ + μ − wt(d_i))`.
pub fn tensor_filtration(zl: &BabyVerma, zm: &BabyVerma) -> Result<FiltrationReport> {
    let change = tensor_basis_change(zl, zm)?;
    let t = &change.tensor;
    let alg = t.algebra().clone();
    let f = t.field();
    let block = zl.module().dim();
    let steps_count = change.order.len();
    let sum_chi = t.chi().clone();

    // A'_x = B⁻¹ A_x B, stored as columns in the new basis.
    let mut new_actions: Vec<Vec<Vec<u64>>> = Vec::with_capacity(alg.dim());
    for k in 0..alg.dim() {
        let mut cols = Vec::with_capacity(change.dim());
        for c in &change.columns {
            cols.push(change.coordinates(&t.act(k, c))?);
        }
        new_actions.push(cols);
    }
    let submodules_stable = new_actions.iter().all(|cols| {
        cols.iter().enumerate().all(|(c, col)| {
            let layer = c / block;
            col.iter().enumerate().all(|(r, &x)| x == 0 || r / block <= layer)
        })
    });

    let mut cache: HashMap<ModWeight, BabyVerma> = HashMap::new();
    let mut steps = Vec::with_capacity(steps_count);
    for (i, &d) in change.order.iter().enumerate() {
        let b = zm.monomials()[d].clone();
        let predicted: ModWeight = zl
            .lambda()
            .iter()
            .zip(&zm.module().weights()[d])
            .map(|(&a, &c)| f.add(a, c))
            .collect();
        if !cache.contains_key(&predicted) {
            cache.insert(predicted.clone(), build_baby_verma(&alg, &sum_chi, &predicted)?);
        }
        let target = cache[&predicted].module();
        let range = i * block..(i + 1) * block;
        let mut actions = Vec::with_capacity(alg.dim());
        for cols in &new_actions {
            let local: Vec<Vec<u64>> = cols[range.clone()].iter().map(|col| col[range.clone()].to_vec()).collect();
            actions.push(SparseMatrix::from_columns(f, block, local));
        }
        let weights: Vec<ModWeight> = range.clone().map(|c| change.column_weight(c).clone()).collect();
        let matches = actions.iter().zip(target.actions()).all(|(a, b)| a == b);
        let certified = match MatrixModule::new(alg.clone(), sum_chi.clone(), actions, weights) {
            Ok(q) => intertwiner_from_generators(&q, &q.unit(0), target, &target.unit(0)).is_some(),
            Err(_) => false,
        };
        steps.push(FiltrationStep {
            b,
            predicted_weight: predicted,
            quotient_dim: block,
            matches_monomial_basis: matches,
            isomorphism_certified: certified,
        });
    }
    let mut seen: Vec<&Exponents> = steps.iter().map(|s| &s.b).collect();
    seen.sort();
    seen.dedup();
    let each_tuple_once = seen.len() == zm.module().dim() && steps.len() == zm.module().dim();
    let graded = graded_check(zl, zm, &change);
    Ok(FiltrationReport {
        steps,
        basis_change_invertible: true,
        submodules_stable,
        each_tuple_once,
        graded,
    })
}

/// Each basis-change column `m_c(z_λ ⊗ u_d)` must be homogeneous of degree
/// `λ + μ − wt(c) − wt(d)` modulo `ℤI` for the union `I` of the Levi sets.
fn graded_check(zl: &BabyVerma, zm: &BabyVerma, change: &TensorBasisChange) -> Option<bool> {
    let alg = zl.module().algebra();
    let i1 = zl.module().chi().levi_set(alg)?;
    let i2 = zm.module().chi().levi_set(alg)?;
    let levi = LeviSubset::new(i1.indices().chain(i2.indices()), alg.n()).ok()?;
    let iw = change.tensor.int_weights()?;
    let lw = zl.module().int_weights()?;
    let mw = zm.module().int_weights()?;
    let block = zl.module().dim();
    Some(change.columns.iter().enumerate().all(|(idx, col)| {
        let (i, c) = (idx / block, idx % block);
        let d = change.order[i];
        let expected: Vec<i64> = lw[c].iter().zip(&mw[d]).map(|(a, b)| a + b).collect();
        let expected = coset_of(&expected, &levi);
        col.iter()
            .enumerate()
            .all(|(r, &x)| x == 0 || coset_of(&iw[r], &levi) == expected)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;
    use crate::rootdata::{Kind, RootDatum, TieBreak};

    fn alg(kind: Kind, n: usize) -> Arc<LieAlgebra> {
        Arc::new(LieAlgebra::new(kind, n).unwrap())
    }

    #[test]
    fn build_examples() {
        let a = alg(Kind::Sl, 2);
        let f = PrimeField::new(5).unwrap();
        let chi = ChiForm::from_root_values(&a, f, &[((1, 0), 1)]).unwrap();
        let z = build_baby_verma(&a, &chi, &[2]).unwrap();
        assert_eq!(z.module().dim(), 5);
        z.module().verify().unwrap();
        // e·f^a z = a(λ − a + 1) f^{a−1} z
        let e = a.root_vector(0, 1);
        for k in 1..5u64 {
            let col = z.module().action(e).column(k as usize);
            let expect = f.reduce(k as i64 * (2 - k as i64 + 1));
            if expect == 0 {
                assert!(col.is_empty());
            } else {
                assert_eq!(col, &[(k as usize - 1, expect)]);
            }
        }
        let a3 = alg(Kind::Sl, 3);
        let f3 = PrimeField::new(3).unwrap();
        let z3 = build_baby_verma(&a3, &ChiForm::zero(&a3, f3), &[0, 0]).unwrap();
        assert_eq!(z3.module().dim(), 27);
        z3.module().verify().unwrap();
        let g2 = alg(Kind::Gl, 2);
        let zg = build_baby_verma(&g2, &ChiForm::regular_nilpotent(&g2, f3), &[1, 2]).unwrap();
        assert_eq!(zg.module().dim(), 3);
        zg.module().verify().unwrap();
    }

    #[test]
    fn rejects_weights_outside_lambda_chi() {
        let g2 = alg(Kind::Gl, 2);
        let f = PrimeField::new(3).unwrap();
        let mut vals = vec![0u64; g2.dim()];
        vals[g2.toral(0)] = 1;
        let chi = ChiForm::from_values(f, vals);
        assert!(matches!(build_baby_verma(&g2, &chi, &[0, 0]), Err(Error::NotInLambdaChi(_))));
    }

    #[test]
    fn height_filtration_examples() {
        let a = alg(Kind::Sl, 3);
        let f = PrimeField::new(3).unwrap();
        let z = build_baby_verma(&a, &ChiForm::regular_nilpotent(&a, f), &[1, 0]).unwrap();
        let h = height_filtration(&z).unwrap();
        assert_eq!(h.levels[0].dim(), 1);
        assert_eq!(h.levels[2].dim(), 7);
        assert_eq!(h.levels.last().unwrap().dim(), 27);
        assert_eq!(h.levels.len(), 2 * 4 + 1);
        let order = refined_filtration(&z);
        assert!(certify_refined_order(&z, &order));
        assert_eq!(order[0], 0);
    }

    #[test]
    fn tensor_examples() {
        let a = alg(Kind::Sl, 2);
        let f = PrimeField::new(5).unwrap();
        let chi = ChiForm::from_root_values(&a, f, &[((1, 0), 1)]).unwrap();
        let zl = build_baby_verma(&a, &chi, &[2]).unwrap();
        let zm = build_baby_verma(&a, &chi.neg(), &[3]).unwrap();
        let t = tensor(zl.module(), zm.module()).unwrap();
        assert_eq!(t.dim(), 25);
        assert!(t.chi().is_zero());
        t.verify().unwrap();
        let fv = t.act(a.root_vector(1, 0), &t.unit(0));
        let mut expect = vec![0u64; 25];
        expect[5] = 1;
        expect[1] = 1;
        assert_eq!(fv, expect);
        let trivial = crate::modrep::SimpleCatalog::new(a.clone(), ChiForm::zero(&a, f))
            .unwrap()
            .simple(&[0])
            .unwrap();
        assert_eq!(trivial.dim(), 1);
        let same = tensor(zl.module(), &trivial).unwrap();
        assert!(crate::modrep::find_isomorphism(&same, zl.module()).is_some());
    }

    #[test]
    fn sl2_filtration_order() {
        let a = alg(Kind::Sl, 2);
        let f = PrimeField::new(5).unwrap();
        let chi = ChiForm::from_root_values(&a, f, &[((1, 0), 1)]).unwrap();
        let zl = build_baby_verma(&a, &chi, &[2]).unwrap();
        let zm = build_baby_verma(&a, &chi.neg(), &[3]).unwrap();
        let rep = tensor_filtration(&zl, &zm).unwrap();
        assert!(rep.all_certified());
        let weights: Vec<u64> = rep.steps.iter().map(|s| s.predicted_weight[0]).collect();
        assert_eq!(weights, vec![0, 3, 1, 4, 2]);
        assert_eq!(rep.graded, Some(true));
    }

    #[test]
    fn tie_break_does_not_change_multiset() {
        let f = PrimeField::new(3).unwrap();
        let mut sets = Vec::new();
        for tie in [TieBreak::Lex, TieBreak::ReverseLex] {
            let a = Arc::new(LieAlgebra::from_datum(RootDatum::with_tie_break(Kind::Sl, 3, tie).unwrap()));
            let chi = ChiForm::from_root_values(&a, f, &[((1, 0), 1)]).unwrap();
            let zl = build_baby_verma(&a, &chi, &[1, 2]).unwrap();
            let zm = build_baby_verma(&a, &ChiForm::zero(&a, f), &[0, 1]).unwrap();
            let rep = tensor_filtration(&zl, &zm).unwrap();
            assert!(rep.all_certified());
            sets.push(rep.weight_multiset());
        }
        assert_eq!(sets[0], sets[1]);
    }
}
