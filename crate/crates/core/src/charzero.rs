//! Highest-weight modules over ℚ, their reduction modulo p, and the quotients
//! by the p-centre shifted by a p-character.
//!
//! Verma modules are truncated by depth: the monomial `a` has depth
//! `Σ a_r ht(γ_r)`, the height of `λ − wt`, so every weight space inside the
//! window is complete. The maximal submodule is found weight by weight:
//! `u` of weight `λ − ν` is in it iff every simple raising operator sends it
//! into the maximal submodule one level up.
//!
//! Two regimes are exact and the only ones accepted. Either the Verma module is
//! simple (no positive root `β` with `⟨λ + ρ, β^∨⟩ ∈ ℤ_{>0}`), or the simple
//! quotient is finite-dimensional and the window reaches a depth where it
//! vanishes. In rank one these are the only possibilities; elsewhere the
//! remaining cases are reported as undecided.

use crate::envelope::{central_scalar, ChiForm, Exponents, LieAlgebra, MonomialAction};
use crate::exactlin::{PrimeField, RationalMatrix, Rationals, Subspace, SparseMatrix};
use crate::modrep::{find_isomorphism, max_submodule_of_cyclic_hw, MatrixModule, ModWeight, SimpleCatalog};
use crate::rootdata::Kind;
use crate::verma::build_baby_verma;
use crate::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

type RatColumn = Vec<(usize, BigRational)>;
type FpColumn = Vec<(usize, u64)>;

/// Monomials of depth at most `window` in `M(λ)` over ℚ, with exact actions.
pub struct TruncatedVerma {
    alg: Arc<LieAlgebra>,
    lambda: Vec<BigRational>,
    window: usize,
    monomials: Vec<Exponents>,
    depths: Vec<usize>,
    index: HashMap<Exponents, usize>,
    /// `actions[k][c]` is `None` when the image of monomial `c` leaves the window.
    actions: Vec<Vec<Option<RatColumn>>>,
}

impl TruncatedVerma {
    pub fn window(&self) -> usize {
        self.window
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Exponents] {
        &self.monomials
    }

    pub fn lambda(&self) -> &[BigRational] {
        &self.lambda
    }

    pub fn action(&self, k: usize, c: usize) -> Option<&RatColumn> {
        self.actions[k][c].as_ref()
    }

    pub fn index_of(&self, a: &[u32]) -> Option<usize> {
        self.index.get(a).copied()
    }

    /// Denominators occurring in the action coefficients.
    pub fn denominators(&self) -> Vec<num_bigint::BigInt> {
        let mut ds: Vec<num_bigint::BigInt> = self
            .actions
            .iter()
            .flatten()
            .flatten()
            .flat_map(|col| col.iter().map(|(_, q)| q.denom().clone()))
            .filter(|d| !d.is_one())
            .collect();
        ds.sort();
        ds.dedup();
        ds
    }
}

/// Exponent vectors of depth at most `window`, ordered by depth then lexicographically.
fn window_monomials(heights: &[usize], window: usize) -> Vec<Exponents> {
    fn rec(heights: &[usize], budget: usize, prefix: &mut Exponents, out: &mut Vec<Exponents>) {
        if prefix.len() == heights.len() {
            out.push(prefix.clone());
            return;
        }
        let h = heights[prefix.len()];
        for a in 0..=budget / h {
            prefix.push(a as u32);
            rec(heights, budget - a * h, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(heights, window, &mut Vec::new(), &mut out);
    let depth = |a: &Exponents| a.iter().zip(heights).map(|(&x, &h)| x as usize * h).sum::<usize>();
    out.sort_by(|a, b| (depth(a), a).cmp(&(depth(b), b)));
    out
}

/// `M(λ)` over ℚ truncated at the given depth; `lambda` are toral values.
pub fn verma_char0(alg: &Arc<LieAlgebra>, lambda: &[BigRational], window: usize) -> Result<TruncatedVerma> {
    if window == 0 {
        return Err(Error::InvalidInput("window depth must be positive".into()));
    }
    let datum = alg.datum();
    if lambda.len() != datum.num_torals() {
        return Err(Error::DimensionMismatch(format!("expected {} toral values", datum.num_torals())));
    }
    let heights: Vec<usize> = (0..datum.num_positive()).map(|r| datum.root_height(r)).collect();
    let monomials = window_monomials(&heights, window);
    let depths: Vec<usize> = monomials
        .iter()
        .map(|a| a.iter().zip(&heights).map(|(&x, &h)| x as usize * h).sum())
        .collect();
    let index: HashMap<Exponents, usize> = monomials.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
    let mut act = MonomialAction::new(alg, Rationals, lambda.to_vec(), None);
    let mut actions = Vec::with_capacity(alg.dim());
    for k in 0..alg.dim() {
        let mut cols = Vec::with_capacity(monomials.len());
        for a in &monomials {
            let image = act.act(k, a);
            let col: Option<RatColumn> = image
                .into_iter()
                .map(|(b, c)| index.get(&b).map(|&i| (i, c)))
                .collect();
            cols.push(col);
        }
        actions.push(cols);
    }
    Ok(TruncatedVerma {
        alg: alg.clone(),
        lambda: lambda.to_vec(),
        window,
        monomials,
        depths,
        index,
        actions,
    })
}

/// Whether `M(λ)` is simple: no positive root `β` has `⟨λ + ρ, β^∨⟩` a positive integer.
pub fn verma_is_simple(alg: &LieAlgebra, lambda: &[BigRational]) -> bool {
    pairings_plus_rho(alg, lambda)
        .iter()
        .all(|q| !(q.is_integer() && q.is_positive()))
}

/// `⟨λ + ρ, β^∨⟩` for every positive root, in root order.
fn pairings_plus_rho(alg: &LieAlgebra, lambda: &[BigRational]) -> Vec<BigRational> {
    alg.datum()
        .positive_roots()
        .iter()
        .map(|&(i, j)| {
            let pairing = match alg.kind() {
                Kind::Gl => &lambda[i] - &lambda[j],
                Kind::Sl => lambda[i..j].iter().fold(BigRational::zero(), |acc, x| acc + x),
            };
            pairing + BigRational::from_integer(((j - i) as i64).into())
        })
        .collect()
}

/// For dominant integral `λ`, the depth of the lowest weight of `L(λ)`.
pub fn lowest_weight_depth(alg: &LieAlgebra, lambda: &[BigRational]) -> Option<usize> {
    let n = alg.n();
    let simple: Vec<BigRational> = (0..n - 1)
        .map(|k| match alg.kind() {
            Kind::Gl => &lambda[k] - &lambda[k + 1],
            Kind::Sl => lambda[k].clone(),
        })
        .collect();
    if !simple.iter().all(|q| q.is_integer() && !q.is_negative()) {
        return None;
    }
    // ε-coordinates of λ up to a common shift, then λ − w₀λ in root coordinates.
    let mut eps = vec![0i64; n];
    for k in (0..n - 1).rev() {
        let step: i64 = simple[k].to_integer().try_into().ok()?;
        eps[k] = eps[k + 1] + step;
    }
    let nu: Vec<i64> = (0..n).map(|i| eps[i] - eps[n - 1 - i]).collect();
    let mut depth = 0i64;
    let mut partial = 0i64;
    for &x in nu.iter().take(n - 1) {
        partial += x;
        depth += partial;
    }
    usize::try_from(depth).ok()
}

/// The simple quotient `L(λ)` inside the window: its basis is the set of
/// non-pivot monomials of each weight, and `images[c]` expresses monomial `c`
/// in that basis.
pub struct LatticeModule {
    verma: TruncatedVerma,
    l_basis: Vec<usize>,
    position: HashMap<usize, usize>,
    images: Vec<RatColumn>,
    complete: bool,
}

impl LatticeModule {
    pub fn verma(&self) -> &TruncatedVerma {
        &self.verma
    }

    /// Monomial indices of the basis vectors of `L(λ)` in the window.
    pub fn basis(&self) -> &[usize] {
        &self.l_basis
    }

    /// Whether the window reaches a depth at which `L(λ)` vanishes.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// `M(λ)` itself viewed as its own quotient (no radical).
    pub fn from_verma(verma: TruncatedVerma) -> Self {
        let n = verma.dim();
        LatticeModule {
            l_basis: (0..n).collect(),
            position: (0..n).map(|i| (i, i)).collect(),
            images: (0..n).map(|i| vec![(i, BigRational::one())]).collect(),
            complete: false,
            verma,
        }
    }

    /// All coefficients that must be p-integral for the lattice to reduce.
    fn coefficients(&self) -> impl Iterator<Item = &BigRational> {
        self.images
            .iter()
            .flatten()
            .map(|(_, q)| q)
            .chain(self.verma.actions.iter().flatten().flatten().flatten().map(|(_, q)| q))
    }
}

fn add_scaled(acc: &mut BTreeMap<usize, BigRational>, col: &RatColumn, s: &BigRational) {
    for (i, q) in col {
        let e = acc.entry(*i).or_insert_with(BigRational::zero);
        *e += q * s;
    }
}

/// Computes the maximal submodule of the truncated Verma module weight by
/// weight and returns the quotient.
pub fn simple_quotient_char0(verma: TruncatedVerma) -> Result<LatticeModule> {
    let alg = verma.alg.clone();
    let datum = alg.datum();
    let raising = alg.simple_raising();
    let mut by_weight: BTreeMap<(usize, Vec<i64>), Vec<usize>> = BTreeMap::new();
    for (i, a) in verma.monomials.iter().enumerate() {
        by_weight
            .entry((verma.depths[i], datum.exponent_root_coordinates(a)))
            .or_default()
            .push(i);
    }
    let mut images: Vec<RatColumn> = vec![Vec::new(); verma.dim()];
    let mut is_basis = vec![false; verma.dim()];
    let mut basis_at_depth = vec![0usize; verma.window + 1];
    for ((depth, _), idx) in &by_weight {
        let rad_rows: Vec<Vec<BigRational>> = if *depth == 0 {
            Vec::new()
        } else {
            // Columns: monomials of this weight; rows: L-coordinates of e_i·u.
            let mut rows: BTreeMap<(usize, usize), Vec<BigRational>> = BTreeMap::new();
            for (c, &u) in idx.iter().enumerate() {
                for (s, &k) in raising.iter().enumerate() {
                    let col = verma.actions[k][u].as_ref().expect("raising stays in the window");
                    let mut acc = BTreeMap::new();
                    for (m, q) in col {
                        add_scaled(&mut acc, &images[*m], q);
                    }
                    for (b, q) in acc {
                        if !q.is_zero() {
                            rows.entry((s, b)).or_insert_with(|| vec![BigRational::zero(); idx.len()])[c] = q;
                        }
                    }
                }
            }
            if rows.is_empty() {
                identity_rows(idx.len())
            } else {
                let mat = RationalMatrix::from_rows(rows.into_values().collect())?;
                let ker = mat.kernel();
                if ker.is_empty() {
                    Vec::new()
                } else {
                    let (r, piv) = RationalMatrix::from_rows(ker)?.rref_with_pivots();
                    (0..piv.len()).map(|i| r.row(i).to_vec()).collect()
                }
            }
        };
        let pivots: Vec<usize> = rad_rows
            .iter()
            .map(|row| row.iter().position(|q| !q.is_zero()).expect("nonzero row"))
            .collect();
        for (c, &u) in idx.iter().enumerate() {
            if !pivots.contains(&c) {
                is_basis[u] = true;
                images[u] = vec![(u, BigRational::one())];
                basis_at_depth[*depth] += 1;
            }
        }
        for (row, &pc) in rad_rows.iter().zip(&pivots) {
            images[idx[pc]] = row
                .iter()
                .enumerate()
                .filter(|(c, q)| *c != pc && !q.is_zero())
                .map(|(c, q)| (idx[c], -q))
                .collect();
        }
    }
    let l_basis: Vec<usize> = (0..verma.dim()).filter(|&i| is_basis[i]).collect();
    let position = l_basis.iter().enumerate().map(|(p, &i)| (i, p)).collect();
    let complete = basis_at_depth.iter().skip(1).any(|&c| c == 0);
    Ok(LatticeModule {
        verma,
        l_basis,
        position,
        images,
        complete,
    })
}

fn identity_rows(n: usize) -> Vec<Vec<BigRational>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect()
}

/// A windowed module over `F_p`: basis monomials with their mod-p weights
/// and partial actions (`None` where the image leaves the window).
pub struct WindowedModule {
    alg: Arc<LieAlgebra>,
    field: PrimeField,
    window: usize,
    basis: Vec<Exponents>,
    depths: Vec<usize>,
    weights: Vec<ModWeight>,
    /// `None` marks an image that leaves the window.
    actions: Vec<Vec<Option<FpColumn>>>,
    complete: bool,
    lambda: ModWeight,
}

impl WindowedModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The reduced highest weight `λ̃`.
    pub fn lambda(&self) -> &[u64] {
        &self.lambda
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// `x_k · v`, or `None` if part of the image is outside the window.
    fn apply(&self, k: usize, v: &[u64]) -> Option<Vec<u64>> {
        let f = self.field;
        let mut out = vec![0u64; self.dim()];
        for (c, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            match &self.actions[k][c] {
                Some(col) => {
                    for &(r, y) in col {
                        out[r] = f.add(out[r], f.mul(x, y));
                    }
                }
                None if self.complete => {}
                None => return None,
            }
        }
        Some(out)
    }
}

/// Reduces the lattice `U(𝔤_R)·v̄_λ` modulo p. The lattice is spanned by the
/// basis monomials only when every stored coefficient is p-integral; otherwise
/// the offending coefficient is reported.
pub fn base_change_p(l: &LatticeModule, field: PrimeField) -> Result<WindowedModule> {
    for q in l.coefficients() {
        field.reduce_rational(q).map_err(|_| Error::DenominatorDivisible {
            p: field.p(),
            coefficient: q.to_string(),
        })?;
    }
    let v = &l.verma;
    let alg = v.alg.clone();
    let lambda: Vec<u64> = v.lambda.iter().map(|q| field.reduce_rational(q)).collect::<Result<_>>()?;
    let mut actions = Vec::with_capacity(alg.dim());
    for k in 0..alg.dim() {
        let mut cols = Vec::with_capacity(l.l_basis.len());
        for &b in &l.l_basis {
            let col = v.actions[k][b].as_ref().map(|col| {
                let mut acc = BTreeMap::new();
                for (m, q) in col {
                    add_scaled(&mut acc, &l.images[*m], q);
                }
                let mut out: Vec<(usize, u64)> = acc
                    .into_iter()
                    .map(|(i, q)| (l.position[&i], field.reduce_rational(&q).expect("checked above")))
                    .filter(|&(_, x)| x != 0)
                    .collect();
                out.sort_unstable();
                out
            });
            cols.push(col);
        }
        actions.push(cols);
    }
    let mono_action = MonomialAction::new(&alg, field, lambda.clone(), None);
    let basis: Vec<Exponents> = l.l_basis.iter().map(|&i| v.monomials[i].clone()).collect();
    let weights = basis.iter().map(|a| mono_action.weight(a)).collect();
    Ok(WindowedModule {
        depths: l.l_basis.iter().map(|&i| v.depths[i]).collect(),
        alg,
        field,
        window: v.window,
        basis,
        weights,
        actions,
        complete: l.complete,
        lambda,
    })
}

/// `L / J_χ L` with its coset representatives (monomials).
pub struct JQuotient {
    pub module: MatrixModule,
    pub reps: Vec<Exponents>,
}

/// Quotient of a windowed highest-weight module by `J_χ`.
///
/// On a highest-weight module with `χ(𝔟) = 0`, the p-central elements of the
/// positive root vectors and of the torals act by zero, so `J_χ L` is spanned
/// by `(x^p − χ(x)^p)·b` for negative root vectors `x`. These relations are
/// generated inside the window; columns are ordered by decreasing depth, so the
/// surviving coset representatives are the shallowest monomials.
pub fn quotient_by_jchi(w: &WindowedModule, chi: &ChiForm) -> Result<JQuotient> {
    let alg = &w.alg;
    let f = w.field;
    if chi.field() != f || !chi.vanishes_on_positive(alg) || !chi.vanishes_on_torus(alg) {
        return Err(Error::InvalidInput("p-character must vanish on the Borel subalgebra".into()));
    }
    let p = f.p();
    let n = w.dim();
    // Column order: deepest first; among equal depths, unreduced monomials first.
    let mut order: Vec<usize> = (0..n).collect();
    let reduced = |i: usize| w.basis[i].iter().all(|&x| (x as u64) < p);
    order.sort_by(|&a, &b| {
        (std::cmp::Reverse(w.depths[a]), reduced(a), a).cmp(&(std::cmp::Reverse(w.depths[b]), reduced(b), b))
    });
    let permute = |v: &[u64]| order.iter().map(|&i| v[i]).collect::<Vec<u64>>();
    let mut relations = Subspace::zero(f, n);
    for k in alg.negatives() {
        let c = central_scalar(chi, k);
        for b in 0..n {
            let mut v = vec![0u64; n];
            v[b] = 1;
            let mut cur = Some(v.clone());
            for _ in 0..p {
                cur = cur.and_then(|x| w.apply(k, &x));
            }
            let Some(pow) = cur else { continue };
            let rel: Vec<u64> = pow.iter().zip(&v).map(|(&a, &b)| f.sub(a, f.mul(c, b))).collect();
            relations.insert(&permute(&rel));
        }
    }
    let reps_perm = relations.non_pivots();
    let reps: Vec<usize> = reps_perm.iter().map(|&j| order[j]).collect();
    let max_ht = alg.datum().root_height(alg.datum().num_positive() - 1);
    if !w.complete && reps.iter().any(|&r| w.depths[r] + max_ht > w.window) {
        return Err(Error::Undecided(format!(
            "window depth {} is too small: a coset representative has depth {}",
            w.window,
            reps.iter().map(|&r| w.depths[r]).max().unwrap_or(0)
        )));
    }
    let mut actions = Vec::with_capacity(alg.dim());
    for k in 0..alg.dim() {
        let mut cols = Vec::with_capacity(reps.len());
        for &r in &reps {
            let mut v = vec![0u64; n];
            v[r] = 1;
            let img = w
                .apply(k, &v)
                .ok_or_else(|| Error::Undecided("an action on a representative leaves the window".into()))?;
            cols.push(relations.quotient_coordinates(&permute(&img)));
        }
        actions.push(SparseMatrix::from_columns(f, reps.len(), cols));
    }
    let weights = reps.iter().map(|&r| w.weights[r].clone()).collect();
    let module = MatrixModule::new(alg.clone(), chi.clone(), actions, weights)?;
    module.verify()?;
    Ok(JQuotient {
        module,
        reps: reps.iter().map(|&r| w.basis[r].clone()).collect(),
    })
}

/// Whether a `J_χ`-quotient coincides with `Z_χ(λ̃)` under the identification
/// of reduced monomials, and an isomorphism is found independently.
pub fn matches_baby_verma(q: &JQuotient, lambda_tilde: &[u64]) -> Result<bool> {
    let z = build_baby_verma(q.module.algebra(), q.module.chi(), lambda_tilde)?;
    if q.module.dim() != z.module().dim() {
        return Ok(false);
    }
    let map: Vec<usize> = q.reps.iter().map(|a| z.index_of(a)).collect();
    if q.reps.iter().any(|a| a.iter().any(|&x| x as u64 >= q.module.field().p())) {
        return Ok(false);
    }
    let equal = (0..q.module.algebra().dim()).all(|k| {
        (0..q.module.dim()).all(|c| {
            let mut ours: Vec<(usize, u64)> = q.module.action(k).column(c).iter().map(|&(r, x)| (map[r], x)).collect();
            ours.sort_unstable();
            ours == z.module().action(k).column(map[c])
        })
    });
    Ok(equal && find_isomorphism(&q.module, z.module()).is_some())
}

/// Exhibits a surjection `L_p^χ(λ) ↠ L_χ(λ̃)`: the quotient of the cyclic
/// highest-weight module by its maximal submodule must be isomorphic to the
/// simple module built from the baby Verma module.
pub fn head_surjection_check(q: &JQuotient, lambda_tilde: &[u64]) -> Result<bool> {
    if q.module.dim() == 0 {
        return Err(Error::Hypothesis("L_p^χ(λ) is zero".into()));
    }
    let top = q
        .reps
        .iter()
        .position(|a| a.iter().all(|&x| x == 0))
        .ok_or_else(|| Error::Certification("highest-weight vector was reduced away".into()))?;
    let v = q.module.unit(top);
    let rad = max_submodule_of_cyclic_hw(&q.module, &v)?;
    let head = q.module.quotient(&rad)?;
    let mut catalog = SimpleCatalog::new(q.module.algebra().clone(), q.module.chi().clone())?;
    let simple = catalog.simple(lambda_tilde)?;
    Ok(find_isomorphism(&head, &simple).is_some())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `M(λ)` is simple, so `L = M`.
    VermaSimple,
    /// `L(λ)` is finite-dimensional and fully inside the window.
    FiniteDimensional,
}

/// The whole pipeline for one `(λ, χ, p)`.
pub struct Reduction {
    pub regime: Regime,
    pub window: usize,
    pub lambda_tilde: ModWeight,
    pub quotient: JQuotient,
    /// The quotient has the same representatives one band deeper.
    pub stable: bool,
}

/// Default window depth: `3p` in rank one, `p·Σ ht(γ)` otherwise.
pub fn default_window(alg: &LieAlgebra, p: u64) -> usize {
    let datum = alg.datum();
    if datum.num_positive() == 1 {
        3 * p as usize
    } else {
        p as usize * (0..datum.num_positive()).map(|r| datum.root_height(r)).sum::<usize>()
    }
}

fn quotient_at(alg: &Arc<LieAlgebra>, lambda: &[BigRational], chi: &ChiForm, window: usize, regime: Regime) -> Result<JQuotient> {
    let verma = verma_char0(alg, lambda, window)?;
    let lattice = match regime {
        Regime::VermaSimple => LatticeModule::from_verma(verma),
        Regime::FiniteDimensional => simple_quotient_char0(verma)?,
    };
    if regime == Regime::FiniteDimensional && !lattice.is_complete() {
        return Err(Error::Certification("finite-dimensional L(λ) did not vanish inside the window".into()));
    }
    quotient_by_jchi(&base_change_p(&lattice, chi.field())?, chi)
}

/// Builds `L_p^χ(λ) = L_p(λ)/J_χ L_p(λ)` for rational toral values `λ`.
pub fn reduce_simple(alg: &Arc<LieAlgebra>, lambda: &[BigRational], chi: &ChiForm, window: Option<usize>) -> Result<Reduction> {
    let field = chi.field();
    let p = field.p();
    let regime = if verma_is_simple(alg, lambda) {
        Regime::VermaSimple
    } else if lowest_weight_depth(alg, lambda).is_some() {
        Regime::FiniteDimensional
    } else {
        return Err(Error::Undecided(
            "M(λ) is reducible and L(λ) is infinite-dimensional; no certified window".into(),
        ));
    };
    let mut k = window.unwrap_or_else(|| default_window(alg, p));
    if let Some(d) = lowest_weight_depth(alg, lambda) {
        k = k.max(d + 1);
    }
    let lambda_tilde: Vec<u64> = lambda.iter().map(|q| field.reduce_rational(q)).collect::<Result<_>>()?;
    let quotient = quotient_at(alg, lambda, chi, k, regime)?;
    let deeper = quotient_at(alg, lambda, chi, k + p as usize, regime)?;
    let stable = deeper.reps == quotient.reps && deeper.module.actions() == quotient.module.actions();
    Ok(Reduction {
        regime,
        window: k,
        lambda_tilde,
        quotient,
        stable,
    })
}

/// `M_p^χ(λ) = M_p(λ)/J_χ M_p(λ)` from a window, regardless of simplicity.
pub fn verma_quotient(alg: &Arc<LieAlgebra>, lambda: &[BigRational], chi: &ChiForm, window: Option<usize>) -> Result<JQuotient> {
    let k = window.unwrap_or_else(|| default_window(alg, chi.field().p()));
    let lattice = LatticeModule::from_verma(verma_char0(alg, lambda, k)?);
    quotient_by_jchi(&base_change_p(&lattice, chi.field())?, chi)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlSlComparison {
    pub gl_dim: usize,
    pub sl_dim: usize,
    /// The identity matrix acts on the 𝔤𝔩 side by `Σ λ̃_i`.
    pub identity_acts_by_scalar: bool,
    pub equal: bool,
}

/// Compares `L_p^χ(λ)` over `𝔤𝔩_N` with `L_p^{χ′}(λ′)` over `𝔰𝔩_N`, where
/// `λ′` and `χ′` are the restrictions. `chi_roots` gives χ on root vectors.
pub fn gl_sl_compare(n: usize, lambda_eps: &[BigRational], chi_roots: &[((usize, usize), i64)], field: PrimeField) -> Result<GlSlComparison> {
    if (n as u64).is_multiple_of(field.p()) {
        return Err(Error::Hypothesis(format!("p = {} divides N = {n}", field.p())));
    }
    let gl = Arc::new(LieAlgebra::new(Kind::Gl, n)?);
    let sl = Arc::new(LieAlgebra::new(Kind::Sl, n)?);
    let chi_gl = ChiForm::from_root_values(&gl, field, chi_roots)?;
    let chi_sl = ChiForm::from_root_values(&sl, field, chi_roots)?;
    let lambda_sl = sl.datum().eps_to_toral_q(lambda_eps);
    let q_gl = reduce_simple(&gl, lambda_eps, &chi_gl, None)?.quotient;
    let q_sl = reduce_simple(&sl, &lambda_sl, &chi_sl, None)?.quotient;
    let trace: u64 = lambda_eps
        .iter()
        .map(|q| field.reduce_rational(q))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0, |a, b| field.add(a, b));
    let mut y = SparseMatrix::zeros(field, q_gl.module.dim(), q_gl.module.dim());
    for h in gl.torals() {
        y = y.add(q_gl.module.action(h))?;
    }
    let identity_acts_by_scalar = y == SparseMatrix::identity(field, q_gl.module.dim()).scale(trace);
    Ok(GlSlComparison {
        gl_dim: q_gl.module.dim(),
        sl_dim: q_sl.module.dim(),
        identity_acts_by_scalar,
        equal: q_gl.module.dim() == q_sl.module.dim(),
    })
}
