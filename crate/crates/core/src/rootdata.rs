//! Type-A root and weight combinatorics.
//!
//! Indices are 0-based throughout: the positive root `ε_i − ε_j` (with `i < j`)
//! is the pair `(i, j)`. Weights are carried either in ε-coordinates or as
//! "toral values", the values on the toral basis of the Lie algebra
//! (`e_ii` for `gl_N`, `e_ii − e_{i+1,i+1}` for `sl_N`). Toral values are the
//! canonical form used by modules, since for `sl_N` they are exactly the
//! restriction of an ε-weight.

use crate::exactlin::PrimeField;
use crate::{Error, Result};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    Gl,
    Sl,
}

/// How roots of equal height are ordered among themselves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum TieBreak {
    #[default]
    Lex,
    ReverseLex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootDatum {
    n: usize,
    kind: Kind,
    positive: Vec<(usize, usize)>,
}

/// Height of the positive root `(i, j)`, i.e. `j − i`.
pub fn height(root: (usize, usize)) -> Result<usize> {
    if root.0 >= root.1 {
        return Err(Error::InvalidInput(format!("({}, {}) is not a positive root", root.0, root.1)));
    }
    Ok(root.1 - root.0)
}

/// The shift vector `(−1, −2, …, −N)`.
pub fn rho(n: usize) -> Vec<i64> {
    (1..=n as i64).map(|i| -i).collect()
}

impl RootDatum {
    pub fn new(kind: Kind, n: usize) -> Result<Self> {
        Self::with_tie_break(kind, n, TieBreak::Lex)
    }

    pub fn with_tie_break(kind: Kind, n: usize, tie: TieBreak) -> Result<Self> {
        if n < 1 || (kind == Kind::Sl && n < 2) {
            return Err(Error::InvalidInput(format!("rank parameter {n} too small")));
        }
        let mut positive: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        match tie {
            TieBreak::Lex => positive.sort_by_key(|&(i, j)| (j - i, i, j)),
            TieBreak::ReverseLex => positive.sort_by_key(|&(i, j)| (j - i, std::cmp::Reverse((i, j)))),
        }
        Ok(RootDatum { n, kind, positive })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Number of positive roots, `N(N−1)/2`.
    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Positive roots `γ_1, …, γ_D` in height order.
    pub fn positive_roots(&self) -> &[(usize, usize)] {
        &self.positive
    }

    pub fn root_index(&self, root: (usize, usize)) -> Option<usize> {
        self.positive.iter().position(|&r| r == root)
    }

    pub fn root_height(&self, r: usize) -> usize {
        let (i, j) = self.positive[r];
        j - i
    }

    /// Indices `k` of the simple roots `(k, k+1)`.
    pub fn simple_indices(&self) -> Vec<usize> {
        (0..self.n - 1).collect()
    }

    pub fn num_torals(&self) -> usize {
        match self.kind {
            Kind::Gl => self.n,
            Kind::Sl => self.n - 1,
        }
    }

    /// Values of `ε_i − ε_j` on the toral basis.
    pub fn root_toral_values(&self, root: (usize, usize)) -> Vec<i64> {
        let mut e = vec![0i64; self.n];
        e[root.0] += 1;
        e[root.1] -= 1;
        self.eps_to_toral(&e)
    }

    /// Toral values of an integral ε-weight.
    pub fn eps_to_toral(&self, eps: &[i64]) -> Vec<i64> {
        assert_eq!(eps.len(), self.n);
        match self.kind {
            Kind::Gl => eps.to_vec(),
            Kind::Sl => eps.windows(2).map(|w| w[0] - w[1]).collect(),
        }
    }

    pub fn eps_to_toral_q(&self, eps: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(eps.len(), self.n);
        match self.kind {
            Kind::Gl => eps.to_vec(),
            Kind::Sl => eps.windows(2).map(|w| &w[0] - &w[1]).collect(),
        }
    }

    pub fn eps_to_toral_mod(&self, eps: &[u64], field: PrimeField) -> Vec<u64> {
        assert_eq!(eps.len(), self.n);
        match self.kind {
            Kind::Gl => eps.iter().map(|&x| x % field.p()).collect(),
            Kind::Sl => eps.windows(2).map(|w| field.sub(w[0] % field.p(), w[1] % field.p())).collect(),
        }
    }

    /// An ε-representative of a mod-p toral weight (last coordinate 0 for `sl_N`).
    pub fn toral_to_eps_mod(&self, toral: &[u64], field: PrimeField) -> Vec<u64> {
        assert_eq!(toral.len(), self.num_torals());
        match self.kind {
            Kind::Gl => toral.to_vec(),
            Kind::Sl => {
                let mut eps = vec![0u64; self.n];
                for k in (0..self.n - 1).rev() {
                    eps[k] = field.add(eps[k + 1], toral[k]);
                }
                eps
            }
        }
    }

    /// `⟨λ, (ε_i − ε_j)^∨⟩` for a mod-p toral weight.
    pub fn coroot_pairing_mod(&self, toral: &[u64], root: (usize, usize), field: PrimeField) -> u64 {
        let eps = self.toral_to_eps_mod(toral, field);
        field.sub(eps[root.0], eps[root.1])
    }

    /// Weight `Σ a_r γ_r` of an exponent vector, as toral values.
    pub fn exponent_weight(&self, exps: &[u32]) -> Vec<i64> {
        let mut eps = vec![0i64; self.n];
        for (r, &a) in exps.iter().enumerate() {
            let (i, j) = self.positive[r];
            eps[i] += a as i64;
            eps[j] -= a as i64;
        }
        self.eps_to_toral(&eps)
    }

    /// Expansion of `Σ a_r γ_r` in simple-root coordinates.
    pub fn exponent_root_coordinates(&self, exps: &[u32]) -> Vec<i64> {
        let mut coords = vec![0i64; self.n - 1];
        for (r, &a) in exps.iter().enumerate() {
            let (i, j) = self.positive[r];
            for c in &mut coords[i..j] {
                *c += a as i64;
            }
        }
        coords
    }
}

/// A permutation of `{0, …, N−1}`, acting on ε-coordinates by `ε_i ↦ ε_{w(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement(Vec<usize>);

impl WeylElement {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidInput(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(WeylElement(images))
    }

    pub fn identity(n: usize) -> Self {
        WeylElement((0..n).collect())
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(a, b);
        WeylElement(v)
    }

    /// The longest element `j ↦ N−1−j`.
    pub fn longest(n: usize) -> Self {
        WeylElement((0..n).rev().collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = vec![0; self.0.len()];
        for (i, &w) in self.0.iter().enumerate() {
            inv[w] = i;
        }
        WeylElement(inv)
    }

    /// Linear action on ε-coordinates: the coefficient of `ε_i` moves to `ε_{w(i)}`.
    pub fn act<T: Clone>(&self, weight: &[T]) -> Vec<T> {
        let mut out = weight.to_vec();
        for (i, x) in weight.iter().enumerate() {
            out[self.0[i]] = x.clone();
        }
        out
    }

    pub fn all(n: usize) -> Vec<WeylElement> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        permutations(&mut cur, 0, &mut out);
        out.sort();
        out
    }
}

fn permutations(cur: &mut Vec<usize>, k: usize, out: &mut Vec<WeylElement>) {
    if k == cur.len() {
        out.push(WeylElement(cur.clone()));
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permutations(cur, k + 1, out);
        cur.swap(k, i);
    }
}

/// Dot action `w·λ = w(λ+ρ) − ρ` on an integral ε-weight.
pub fn dot_action(w: &WeylElement, lambda: &[i64]) -> Vec<i64> {
    let r = rho(lambda.len());
    let shifted: Vec<i64> = lambda.iter().zip(&r).map(|(a, b)| a + b).collect();
    w.act(&shifted).iter().zip(&r).map(|(a, b)| a - b).collect()
}

/// Dot action on a rational ε-weight.
pub fn dot_action_q(w: &WeylElement, lambda: &[BigRational]) -> Vec<BigRational> {
    let r: Vec<BigRational> = rho(lambda.len())
        .into_iter()
        .map(|x| BigRational::from_integer(x.into()))
        .collect();
    let shifted: Vec<BigRational> = lambda.iter().zip(&r).map(|(a, b)| a + b).collect();
    w.act(&shifted).iter().zip(&r).map(|(a, b)| a - b).collect()
}

/// Dot action on a mod-p ε-weight.
pub fn dot_action_mod(w: &WeylElement, lambda: &[u64], field: PrimeField) -> Vec<u64> {
    let r: Vec<u64> = rho(lambda.len()).into_iter().map(|x| field.reduce(x)).collect();
    let shifted: Vec<u64> = lambda.iter().zip(&r).map(|(&a, &b)| field.add(a, b)).collect();
    w.act(&shifted).iter().zip(&r).map(|(&a, &b)| field.sub(a, b)).collect()
}

/// A subset `I` of the simple roots, given by the indices `k` of `(k, k+1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LeviSubset(BTreeSet<usize>);

impl LeviSubset {
    pub fn new(simple: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let set: BTreeSet<usize> = simple.into_iter().collect();
        if set.iter().any(|&k| k + 1 >= n) {
            return Err(Error::InvalidInput(format!("{set:?} is not a set of simple roots for N = {n}")));
        }
        Ok(LeviSubset(set))
    }

    pub fn empty() -> Self {
        LeviSubset(BTreeSet::new())
    }

    pub fn all(n: usize) -> Self {
        LeviSubset((0..n.saturating_sub(1)).collect())
    }

    pub fn contains(&self, k: usize) -> bool {
        self.0.contains(&k)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether the positive root `(i, j)` lies in the span `ℤI`.
    pub fn contains_root(&self, root: (usize, usize)) -> bool {
        (root.0..root.1).all(|k| self.0.contains(&k))
    }

    /// Positive roots lying in `ℤI`.
    pub fn roots(&self, n: usize) -> Vec<(usize, usize)> {
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&r| self.contains_root(r))
            .collect()
    }

    /// The consecutive blocks of `{0, …, N−1}` joined by roots of `I`.
    pub fn blocks(&self, n: usize) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            match blocks.last_mut() {
                Some(b) if i > 0 && self.0.contains(&(i - 1)) => b.push(i),
                _ => blocks.push(vec![i]),
            }
        }
        blocks
    }
}

/// Orbit of a mod-p ε-weight under the dot action of the reflections in `ℤI`.
///
/// Translations by `pℤI` act trivially modulo p, so this is the full linkage
/// class visible to modules with mod-p weights.
pub fn linkage_orbit(lambda: &[u64], levi: &LeviSubset, field: PrimeField) -> BTreeSet<Vec<u64>> {
    let n = lambda.len();
    let reflections: Vec<WeylElement> = levi
        .roots(n)
        .into_iter()
        .map(|(i, j)| WeylElement::transposition(n, i, j))
        .collect();
    let start: Vec<u64> = lambda.iter().map(|&x| x % field.p()).collect();
    let mut seen = BTreeSet::new();
    let mut stack = vec![start.clone()];
    seen.insert(start);
    while let Some(mu) = stack.pop() {
        for s in &reflections {
            let nu = dot_action_mod(s, &mu, field);
            if seen.insert(nu.clone()) {
                stack.push(nu);
            }
        }
    }
    seen
}

impl RootDatum {
    /// Linkage orbit of a mod-p toral weight, returned as toral weights.
    pub fn linkage_orbit_toral(&self, toral: &[u64], levi: &LeviSubset, field: PrimeField) -> BTreeSet<Vec<u64>> {
        let eps = self.toral_to_eps_mod(toral, field);
        linkage_orbit(&eps, levi, field)
            .into_iter()
            .map(|e| self.eps_to_toral_mod(&e, field))
            .collect()
    }

    /// Lexicographically least member of the linkage orbit.
    pub fn canonical_label(&self, toral: &[u64], levi: &LeviSubset, field: PrimeField) -> Vec<u64> {
        self.linkage_orbit_toral(toral, levi, field)
            .into_iter()
            .next()
            .expect("orbit contains the weight itself")
    }
}
