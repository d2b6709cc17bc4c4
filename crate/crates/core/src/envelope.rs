//! The Lie algebras `gl_N` and `sl_N` in their matrix-unit realization,
//! p-characters, and PBW straightening in the reduced enveloping algebra.
//!
//! The basis is ordered the way PBW monomials are written: negative root
//! vectors `e_{−γ_D}, …, e_{−γ_1}` first, then the toral basis, then the
//! positive root vectors `e_{γ_1}, …, e_{γ_D}`. Brackets are literal matrix
//! commutators and the restricted power is the p-th matrix power.

use crate::exactlin::{PrimeField, Scalars};
use crate::rootdata::{Kind, LeviSubset, RootDatum};
use crate::{Error, Result};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisElement {
    /// The matrix unit `e_ij`, `i ≠ j`.
    Root(usize, usize),
    /// `e_ii` for `gl_N`, `e_ii − e_{i+1,i+1}` for `sl_N`.
    Toral(usize),
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::Root(i, j) => write!(f, "e{}{}", i + 1, j + 1),
            BasisElement::Toral(i) => write!(f, "h{}", i + 1),
        }
    }
}

/// A sparse integer combination of basis elements.
pub type IntCombination = Vec<(usize, i64)>;

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    datum: RootDatum,
    basis: Vec<BasisElement>,
    index: HashMap<BasisElement, usize>,
    brackets: Vec<Vec<IntCombination>>,
}

impl LieAlgebra {
    pub fn new(kind: Kind, n: usize) -> Result<Self> {
        Ok(Self::from_datum(RootDatum::new(kind, n)?))
    }

    pub fn from_datum(datum: RootDatum) -> Self {
        let d = datum.num_positive();
        let mut basis = Vec::new();
        for r in (0..d).rev() {
            let (i, j) = datum.positive_roots()[r];
            basis.push(BasisElement::Root(j, i));
        }
        for k in 0..datum.num_torals() {
            basis.push(BasisElement::Toral(k));
        }
        for r in 0..d {
            let (i, j) = datum.positive_roots()[r];
            basis.push(BasisElement::Root(i, j));
        }
        let index = basis.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let mut alg = LieAlgebra {
            datum,
            basis,
            index,
            brackets: Vec::new(),
        };
        let dim = alg.basis.len();
        let mats: Vec<Vec<i64>> = (0..dim).map(|k| alg.matrix(k)).collect();
        alg.brackets = (0..dim)
            .map(|a| {
                (0..dim)
                    .map(|b| {
                        let ab = mat_mul(&mats[a], &mats[b], alg.n());
                        let ba = mat_mul(&mats[b], &mats[a], alg.n());
                        let c: Vec<i64> = ab.iter().zip(&ba).map(|(x, y)| x - y).collect();
                        alg.decompose(&c).expect("commutator lies in the algebra")
                    })
                    .collect()
            })
            .collect();
        alg
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn kind(&self) -> Kind {
        self.datum.kind()
    }

    pub fn n(&self) -> usize {
        self.datum.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn element(&self, k: usize) -> BasisElement {
        self.basis[k]
    }

    pub fn index_of(&self, b: BasisElement) -> Option<usize> {
        self.index.get(&b).copied()
    }

    /// Index of the root vector `e_ij`.
    pub fn root_vector(&self, i: usize, j: usize) -> usize {
        self.index[&BasisElement::Root(i, j)]
    }

    pub fn toral(&self, k: usize) -> usize {
        self.index[&BasisElement::Toral(k)]
    }

    /// Index of `e_{−γ_r}`.
    pub fn negative(&self, r: usize) -> usize {
        self.datum.num_positive() - 1 - r
    }

    /// Index of `e_{γ_r}`.
    pub fn positive(&self, r: usize) -> usize {
        self.datum.num_positive() + self.datum.num_torals() + r
    }

    pub fn torals(&self) -> std::ops::Range<usize> {
        let d = self.datum.num_positive();
        d..d + self.datum.num_torals()
    }

    pub fn negatives(&self) -> std::ops::Range<usize> {
        0..self.datum.num_positive()
    }

    pub fn positives(&self) -> std::ops::Range<usize> {
        let s = self.datum.num_positive() + self.datum.num_torals();
        s..self.dim()
    }

    /// Positive-root index `r` when basis element `k` is `e_{−γ_r}`.
    pub fn negative_root_of(&self, k: usize) -> Option<usize> {
        self.negatives().contains(&k).then(|| self.datum.num_positive() - 1 - k)
    }

    /// Raising operators `e_{k,k+1}` for the simple roots.
    pub fn simple_raising(&self) -> Vec<usize> {
        (0..self.n() - 1).map(|k| self.root_vector(k, k + 1)).collect()
    }

    pub fn simple_lowering(&self) -> Vec<usize> {
        (0..self.n() - 1).map(|k| self.root_vector(k + 1, k)).collect()
    }

    /// A generating set of the Lie algebra: simple root vectors and the torals.
    pub fn generators(&self) -> Vec<usize> {
        let mut g = self.simple_raising();
        g.extend(self.simple_lowering());
        g.extend(self.torals());
        g
    }

    /// The realizing `N × N` integer matrix, row-major.
    pub fn matrix(&self, k: usize) -> Vec<i64> {
        let n = self.n();
        let mut m = vec![0i64; n * n];
        match self.basis[k] {
            BasisElement::Root(i, j) => m[i * n + j] = 1,
            BasisElement::Toral(i) => match self.kind() {
                Kind::Gl => m[i * n + i] = 1,
                Kind::Sl => {
                    m[i * n + i] = 1;
                    m[(i + 1) * n + i + 1] = -1;
                }
            },
        }
        m
    }

    /// Expresses an integer matrix in the basis; fails if it is not in the algebra.
    pub fn decompose(&self, m: &[i64]) -> Result<IntCombination> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && m[i * n + j] != 0 {
                    out.push((self.root_vector(i, j), m[i * n + j]));
                }
            }
        }
        let diag: Vec<i64> = (0..n).map(|i| m[i * n + i]).collect();
        match self.kind() {
            Kind::Gl => {
                for (i, &d) in diag.iter().enumerate() {
                    if d != 0 {
                        out.push((self.toral(i), d));
                    }
                }
            }
            Kind::Sl => {
                if diag.iter().sum::<i64>() != 0 {
                    return Err(Error::InvalidInput("matrix has nonzero trace".into()));
                }
                let mut acc = 0;
                for (i, &d) in diag.iter().enumerate().take(n - 1) {
                    acc += d;
                    if acc != 0 {
                        out.push((self.toral(i), acc));
                    }
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// `[x, y]` in the basis.
    pub fn bracket(&self, x: usize, y: usize) -> &IntCombination {
        &self.brackets[x][y]
    }

    /// The restricted power `x^{[p]}` (p-th matrix power) in the basis.
    pub fn p_power(&self, x: usize, p: u64) -> IntCombination {
        let n = self.n();
        let m = self.matrix(x);
        let mut acc: Vec<i64> = (0..n * n).map(|k| (k / n == k % n) as i64).collect();
        for _ in 0..p {
            acc = mat_mul(&acc, &m, n);
        }
        self.decompose(&acc).expect("p-th power of a basis element stays in the algebra")
    }

    /// Root `(i, j)` (positive or negative as ordered pair) carried by a root vector.
    pub fn root_of(&self, k: usize) -> Option<(usize, usize)> {
        match self.basis[k] {
            BasisElement::Root(i, j) => Some((i, j)),
            BasisElement::Toral(_) => None,
        }
    }

    /// Toral values of the weight of basis element `k` under the adjoint action.
    pub fn weight_of(&self, k: usize) -> Vec<i64> {
        match self.basis[k] {
            BasisElement::Toral(_) => vec![0; self.datum.num_torals()],
            BasisElement::Root(i, j) => {
                let mut e = vec![0i64; self.n()];
                e[i] += 1;
                e[j] -= 1;
                self.datum.eps_to_toral(&e)
            }
        }
    }
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut c = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    c[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    c
}

/// A p-character: the values `χ(x) ∈ F_p` on every basis element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChiForm {
    field: PrimeField,
    values: Vec<u64>,
}

impl ChiForm {
    pub fn zero(alg: &LieAlgebra, field: PrimeField) -> Self {
        ChiForm {
            field,
            values: vec![0; alg.dim()],
        }
    }

    pub fn from_values(field: PrimeField, values: Vec<u64>) -> Self {
        let values = values.into_iter().map(|v| v % field.p()).collect();
        ChiForm { field, values }
    }

    /// Builds χ from values on matrix units `e_ij` (0-based `(i, j)`, `i ≠ j`).
    pub fn from_root_values(alg: &LieAlgebra, field: PrimeField, entries: &[((usize, usize), i64)]) -> Result<Self> {
        let mut chi = Self::zero(alg, field);
        for &((i, j), v) in entries {
            let k = alg
                .index_of(BasisElement::Root(i, j))
                .ok_or_else(|| Error::InvalidInput(format!("e{}{} is not a root vector", i + 1, j + 1)))?;
            chi.values[k] = field.reduce(v);
        }
        Ok(chi)
    }

    /// Value 1 on every simple lowering operator.
    pub fn regular_nilpotent(alg: &LieAlgebra, field: PrimeField) -> Self {
        let mut chi = Self::zero(alg, field);
        for k in alg.simple_lowering() {
            chi.values[k] = 1;
        }
        chi
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, k: usize) -> u64 {
        self.values[k]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn neg(&self) -> ChiForm {
        ChiForm {
            field: self.field,
            values: self.values.iter().map(|&v| self.field.neg(v)).collect(),
        }
    }

    pub fn add(&self, other: &ChiForm) -> Result<ChiForm> {
        if self.field != other.field || self.values.len() != other.values.len() {
            return Err(Error::DimensionMismatch("p-characters of different algebras".into()));
        }
        Ok(ChiForm {
            field: self.field,
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| self.field.add(a, b)).collect(),
        })
    }

    /// Whether χ vanishes on the torus.
    pub fn vanishes_on_torus(&self, alg: &LieAlgebra) -> bool {
        alg.torals().all(|k| self.values[k] == 0)
    }

    /// Whether χ vanishes on the positive nilradical.
    pub fn vanishes_on_positive(&self, alg: &LieAlgebra) -> bool {
        alg.positives().all(|k| self.values[k] == 0)
    }

    /// The set `I` when χ has (weak) standard Levi form, `None` otherwise.
    pub fn levi_set(&self, alg: &LieAlgebra) -> Option<LeviSubset> {
        if !self.vanishes_on_torus(alg) || !self.vanishes_on_positive(alg) {
            return None;
        }
        let mut simple = Vec::new();
        for k in alg.negatives() {
            if self.values[k] == 0 {
                continue;
            }
            let (i, j) = alg.root_of(k).expect("negative root vector");
            if i != j + 1 {
                return None;
            }
            simple.push(j);
        }
        LeviSubset::new(simple, alg.n()).ok()
    }

    /// Standard Levi form with value exactly 1 on the support.
    pub fn is_strict_standard_levi(&self, alg: &LieAlgebra) -> bool {
        self.levi_set(alg).is_some() && self.values.iter().all(|&v| v <= 1)
    }
}

/// The scalar `χ(x)^p` by which `x^p − x^{[p]}` acts on every `U_χ`-module.
pub fn central_scalar(chi: &ChiForm, x: usize) -> u64 {
    let f = chi.field();
    f.pow(chi.value(x), f.p())
}

/// Whether the mod-p toral weight `λ` satisfies `λ(h)^p − λ(h^{[p]}) = χ(h)^p`
/// for every toral basis element.
pub fn is_in_lambda_chi(alg: &LieAlgebra, lambda: &[u64], chi: &ChiForm) -> bool {
    let f = chi.field();
    let p = f.p();
    alg.torals().enumerate().all(|(t, h)| {
        let lhs_pow = f.pow(lambda[t], p);
        let hp: u64 = alg
            .p_power(h, p)
            .iter()
            .map(|&(k, c)| f.mul(f.reduce(c), lambda[k - alg.torals().start]))
            .fold(0, |a, b| f.add(a, b));
        f.sub(lhs_pow, hp) == central_scalar(chi, h)
    })
}

/// An element of `U_χ(𝔤)` (or `U(𝔤)`): PBW words (nondecreasing basis
/// indices) with coefficients.
pub type PbwElement<E> = BTreeMap<Vec<usize>, E>;

/// Rewrites products of basis elements into PBW-ordered monomials.
///
/// With a reduction modulus, runs of `p` equal letters are replaced via
/// `x^p = x^{[p]} + χ(x)^p`; without one the rewriting happens in `U(𝔤)`.
pub struct Straightener<'a, S: Scalars> {
    alg: &'a LieAlgebra,
    ring: S,
    reduction: Option<(u64, Vec<S::Elem>)>,
}

impl<'a, S: Scalars> Straightener<'a, S> {
    pub fn new(alg: &'a LieAlgebra, ring: S) -> Self {
        Straightener {
            alg,
            ring,
            reduction: None,
        }
    }

    /// Reduced enveloping algebra: `chi_p[k]` is `χ(x_k)^p` in the ring.
    pub fn reduced(alg: &'a LieAlgebra, ring: S, p: u64, chi_p: Vec<S::Elem>) -> Self {
        Straightener {
            alg,
            ring,
            reduction: Some((p, chi_p)),
        }
    }

    pub fn straighten(&self, word: &[usize]) -> PbwElement<S::Elem> {
        let r = &self.ring;
        let mut out: PbwElement<S::Elem> = BTreeMap::new();
        let mut work: Vec<(Vec<usize>, S::Elem)> = vec![(word.to_vec(), r.one())];
        while let Some((w, c)) = work.pop() {
            if r.is_zero(&c) {
                continue;
            }
            if let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                work.push((swapped, c.clone()));
                for &(k, s) in self.alg.bracket(w[i], w[i + 1]) {
                    let mut nw = w[..i].to_vec();
                    nw.push(k);
                    nw.extend_from_slice(&w[i + 2..]);
                    work.push((nw, r.mul(&c, &r.embed_i64(s))));
                }
                continue;
            }
            if let Some((p, chi_p)) = &self.reduction {
                let p = *p as usize;
                if let Some(i) = (0..w.len()).find(|&i| i + p <= w.len() && w[i..i + p].iter().all(|&x| x == w[i])) {
                    let x = w[i];
                    let mut scalar = w[..i].to_vec();
                    scalar.extend_from_slice(&w[i + p..]);
                    work.push((scalar, r.mul(&c, &chi_p[x])));
                    for (k, s) in self.alg.p_power(x, p as u64) {
                        let mut nw = w[..i].to_vec();
                        nw.push(k);
                        nw.extend_from_slice(&w[i + p..]);
                        work.push((nw, r.mul(&c, &r.embed_i64(s))));
                    }
                    continue;
                }
            }
            let entry = out.entry(w).or_insert_with(|| r.zero());
            *entry = r.add(entry, &c);
        }
        out.retain(|_, v| !r.is_zero(v));
        out
    }

    /// Product of two PBW elements, re-straightened.
    pub fn multiply(&self, a: &PbwElement<S::Elem>, b: &PbwElement<S::Elem>) -> PbwElement<S::Elem> {
        let r = &self.ring;
        let mut out: PbwElement<S::Elem> = BTreeMap::new();
        for (wa, ca) in a {
            for (wb, cb) in b {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                for (m, c) in self.straighten(&w) {
                    let entry = out.entry(m).or_insert_with(|| r.zero());
                    *entry = r.add(entry, &r.mul(&c, &r.mul(ca, cb)));
                }
            }
        }
        out.retain(|_, v| !r.is_zero(v));
        out
    }
}

/// Renders a PBW word such as `e21^2 h1`.
pub fn format_word(alg: &LieAlgebra, word: &[usize]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        let name = alg.element(word[i]).to_string();
        parts.push(if j - i > 1 { format!("{name}^{}", j - i) } else { name });
        i = j;
    }
    parts.join(" ")
}

/// Exponent vector `a` over the positive roots, standing for the monomial
/// `e_{−γ_D}^{a_D} ⋯ e_{−γ_1}^{a_1}` applied to a highest-weight generator.
pub type Exponents = Vec<u32>;

type Combination<E> = Vec<(Exponents, E)>;

/// Left multiplication of basis elements on monomial vectors
/// `e_{−γ_D}^{a_D} ⋯ e_{−γ_1}^{a_1} z` of an induced module, where `z` is
/// killed by the positive root vectors and the torals act on it by the given
/// values.
///
/// With a reduction modulus the monomials live in a baby Verma module (all
/// exponents `< p`); without one they live in an ordinary Verma module.
pub struct MonomialAction<'a, S: Scalars> {
    alg: &'a LieAlgebra,
    ring: S,
    toral_values: Vec<S::Elem>,
    reduction: Option<(u32, Vec<S::Elem>)>,
    root_weights: Vec<Vec<i64>>,
    memo: HashMap<(usize, Exponents), Combination<S::Elem>>,
}

impl<'a, S: Scalars> MonomialAction<'a, S> {
    /// `chi_p[r]` is `χ(e_{−γ_r})^p` when a reduction modulus is given.
    pub fn new(alg: &'a LieAlgebra, ring: S, toral_values: Vec<S::Elem>, reduction: Option<(u32, Vec<S::Elem>)>) -> Self {
        assert_eq!(toral_values.len(), alg.datum().num_torals());
        let root_weights = alg
            .datum()
            .positive_roots()
            .iter()
            .map(|&r| alg.datum().root_toral_values(r))
            .collect();
        MonomialAction {
            alg,
            ring,
            toral_values,
            reduction,
            root_weights,
            memo: HashMap::new(),
        }
    }

    pub fn ring(&self) -> &S {
        &self.ring
    }

    /// Toral values of the weight of a monomial vector.
    pub fn weight(&self, a: &[u32]) -> Vec<S::Elem> {
        let r = &self.ring;
        let mut w = self.toral_values.clone();
        for (g, &ag) in a.iter().enumerate() {
            if ag == 0 {
                continue;
            }
            for (t, &v) in self.root_weights[g].iter().enumerate() {
                w[t] = r.add(&w[t], &r.embed_i64(-(ag as i64) * v));
            }
        }
        w
    }

    /// `x_k · (monomial a)` as a combination of monomials.
    pub fn act(&mut self, k: usize, a: &[u32]) -> Vec<(Exponents, S::Elem)> {
        if let Some(v) = self.memo.get(&(k, a.to_vec())) {
            return v.clone();
        }
        let res = self.compute(k, a);
        self.memo.insert((k, a.to_vec()), res.clone());
        res
    }

    fn compute(&mut self, k: usize, a: &[u32]) -> Vec<(Exponents, S::Elem)> {
        let alg = self.alg;
        if alg.torals().contains(&k) {
            let t = k - alg.torals().start;
            let w = self.weight(a);
            return if self.ring.is_zero(&w[t]) {
                Vec::new()
            } else {
                vec![(a.to_vec(), w[t].clone())]
            };
        }
        let lead = (0..a.len()).rev().find(|&g| a[g] > 0);
        if let Some(r) = alg.negative_root_of(k) {
            match lead {
                Some(s) if r < s => {}
                _ => {
                    let mut b = a.to_vec();
                    b[r] += 1;
                    if let Some((p, chi_p)) = &self.reduction {
                        if b[r] == *p {
                            b[r] = 0;
                            return if self.ring.is_zero(&chi_p[r]) {
                                Vec::new()
                            } else {
                                vec![(b, chi_p[r].clone())]
                            };
                        }
                    }
                    return vec![(b, self.ring.one())];
                }
            }
        } else if lead.is_none() {
            return Vec::new();
        }
        // x · y · rest = y · (x · rest) + [x, y] · rest, with y the leftmost factor.
        let s = lead.expect("nonzero monomial");
        let y = alg.negative(s);
        let mut rest = a.to_vec();
        rest[s] -= 1;
        let mut acc: HashMap<Exponents, S::Elem> = HashMap::new();
        for (b, c) in self.act(k, &rest) {
            for (m, d) in self.act(y, &b) {
                let v = self.ring.mul(&c, &d);
                add_into(&self.ring, &mut acc, m, v);
            }
        }
        for (z, sc) in alg.bracket(k, y).clone() {
            let coeff = self.ring.embed_i64(sc);
            for (m, d) in self.act(z, &rest) {
                let v = self.ring.mul(&coeff, &d);
                add_into(&self.ring, &mut acc, m, v);
            }
        }
        let mut out: Vec<(Exponents, S::Elem)> = acc.into_iter().filter(|(_, v)| !self.ring.is_zero(v)).collect();
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }
}

fn add_into<S: Scalars>(ring: &S, acc: &mut HashMap<Exponents, S::Elem>, m: Exponents, v: S::Elem) {
    match acc.get_mut(&m) {
        Some(e) => *e = ring.add(e, &v),
        None => {
            acc.insert(m, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rationals;

    fn sl2() -> LieAlgebra {
        LieAlgebra::new(Kind::Sl, 2).unwrap()
    }

    #[test]
    fn basis_order_and_brackets() {
        let a = sl2();
        assert_eq!(a.basis(), &[BasisElement::Root(1, 0), BasisElement::Toral(0), BasisElement::Root(0, 1)]);
        let (f, h, e) = (0, 1, 2);
        assert_eq!(a.bracket(e, f), &vec![(h, 1)]);
        assert_eq!(a.bracket(h, e), &vec![(e, 2)]);
        assert_eq!(a.bracket(h, f), &vec![(f, -2)]);
        assert!(a.p_power(e, 5).is_empty());
        assert_eq!(a.p_power(h, 5), vec![(h, 1)]);
        let g = LieAlgebra::new(Kind::Gl, 3).unwrap();
        assert_eq!(g.dim(), 9);
        let e11 = g.toral(0);
        assert_eq!(g.p_power(e11, 3), vec![(e11, 1)]);
    }

    #[test]
    fn sl3_negative_commutator() {
        let a = LieAlgebra::new(Kind::Sl, 3).unwrap();
        let g1 = a.negative(0);
        let g2 = a.negative(1);
        let g3 = a.negative(2);
        assert_eq!(a.element(g1), BasisElement::Root(1, 0));
        assert_eq!(a.element(g2), BasisElement::Root(2, 1));
        // [e21, e32] = -e31
        assert_eq!(a.bracket(g1, g2), &vec![(g3, -1)]);
        let field = PrimeField::new(3).unwrap();
        let st = Straightener::new(&a, field);
        let ab = st.straighten(&[g1, g2]);
        let ba = st.straighten(&[g2, g1]);
        // The PBW word is [g2, g1] in both cases; the difference is a multiple of e31.
        assert_eq!(ba.len(), 1);
        assert_eq!(ab.get(&vec![g2, g1]), Some(&1));
        assert_eq!(ab.get(&vec![g3]), Some(&2));
    }

    #[test]
    fn sl2_straightening_identities() {
        let a = sl2();
        let (f, h, e) = (0, 1, 2);
        let st = Straightener::new(&a, Rationals);
        let res = st.straighten(&[e, f, f]);
        let q = |v: i64| Rationals.embed_i64(v);
        let expected: PbwElement<_> = [(vec![f, f, e], q(1)), (vec![f, h], q(2)), (vec![f], q(-2))].into_iter().collect();
        assert_eq!(res, expected);
        let field = PrimeField::new(5).unwrap();
        let mut chi_p = vec![0; 3];
        chi_p[f] = 1;
        let red = Straightener::reduced(&a, field, 5, chi_p);
        let five = red.straighten(&[f; 5]);
        assert_eq!(five, [(vec![], 1u64)].into_iter().collect());
        // h^5 = h in U_χ when χ(h) = 0.
        assert_eq!(red.straighten(&[h; 5]), [(vec![h], 1u64)].into_iter().collect());
    }

    #[test]
    fn straightening_is_associative() {
        let a = LieAlgebra::new(Kind::Sl, 3).unwrap();
        let field = PrimeField::new(3).unwrap();
        let chi = ChiForm::regular_nilpotent(&a, field);
        let chi_p: Vec<u64> = (0..a.dim()).map(|k| central_scalar(&chi, k)).collect();
        let st = Straightener::reduced(&a, field, 3, chi_p);
        let words = [vec![7, 0, 3], vec![4, 4, 1, 7], vec![6, 2, 2, 2, 0]];
        for u in &words {
            for v in &words {
                let whole: Vec<usize> = u.iter().chain(v).copied().collect();
                let lhs = st.straighten(&whole);
                let rhs = st.multiply(&st.straighten(u), &st.straighten(v));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn chi_forms() {
        let a = LieAlgebra::new(Kind::Sl, 3).unwrap();
        let field = PrimeField::new(5).unwrap();
        let reg = ChiForm::regular_nilpotent(&a, field);
        assert_eq!(reg.levi_set(&a), Some(LeviSubset::all(3)));
        assert_eq!(ChiForm::zero(&a, field).levi_set(&a), Some(LeviSubset::empty()));
        let bad = ChiForm::from_root_values(&a, field, &[((2, 0), 1)]).unwrap();
        assert_eq!(bad.levi_set(&a), None);
        let weak = ChiForm::from_root_values(&a, field, &[((1, 0), 3)]).unwrap();
        assert_eq!(weak.levi_set(&a), Some(LeviSubset::new([0], 3).unwrap()));
        assert!(!weak.is_strict_standard_levi(&a));
        assert_eq!(reg.add(&reg.neg()).unwrap(), ChiForm::zero(&a, field));
    }

    #[test]
    fn central_scalars() {
        let a = sl2();
        let field = PrimeField::new(5).unwrap();
        assert_eq!(central_scalar(&ChiForm::zero(&a, field), 0), 0);
        let chi = ChiForm::from_root_values(&a, field, &[((1, 0), 1)]).unwrap();
        assert_eq!(central_scalar(&chi, 0), 1);
        let chi2 = ChiForm::from_root_values(&a, field, &[((1, 0), 2)]).unwrap();
        assert_eq!(central_scalar(&chi2, 0), 2);
    }

    #[test]
    fn lambda_chi_membership() {
        let field = PrimeField::new(5).unwrap();
        let a = sl2();
        let chi = ChiForm::regular_nilpotent(&a, field);
        for l in 0..5 {
            assert!(is_in_lambda_chi(&a, &[l], &chi));
        }
        let g = LieAlgebra::new(Kind::Gl, 2).unwrap();
        let mut vals = vec![0; g.dim()];
        vals[g.toral(0)] = 2;
        let chi_t = ChiForm::from_values(field, vals);
        for l in 0..5 {
            assert!(!is_in_lambda_chi(&g, &[l, 0], &chi_t));
        }
    }

    #[test]
    fn monomial_action_sl2() {
        // e · f^a z = a(λ − a + 1) f^{a−1} z
        let a = sl2();
        let lam = 7i64;
        let mut act = MonomialAction::new(&a, Rationals, vec![Rationals.embed_i64(lam)], None);
        for k in 1..6u32 {
            let res = act.act(2, &[k]);
            let c = k as i64 * (lam - k as i64 + 1);
            assert_eq!(res, vec![(vec![k - 1], Rationals.embed_i64(c))]);
        }
        assert!(act.act(2, &[0]).is_empty());
    }
}
