//! Acceptance criteria, one line per criterion with its runtime budget.
//!
//! Randomized criteria draw from a ChaCha stream seeded by `ACCEPTANCE_SEED`
//! (default 20240601) so failures are reproducible.

use babyverma::charzero::{gl_sl_compare, head_surjection_check, matches_baby_verma, reduce_simple, verma_quotient};
use babyverma::envelope::{ChiForm, LieAlgebra};
use babyverma::exactlin::PrimeField;
use babyverma::modrep::{
    composition_factors, composition_factors_with, exhaustive_composition_factors, find_isomorphism, CompFactorList,
    ModWeight, PeelChoice, SimpleCatalog,
};
use babyverma::pyramids::{
    all_fillings, centralizer_dims, filling_simple_dim, lift_column_connected, min_dim_classification, rs_shape,
    sigma_check, summation_pipeline, Pyramid,
};
use babyverma::rootdata::{Kind, RootDatum, TieBreak};
use babyverma::verma::{all_exponents, build_baby_verma, tensor, tensor_filtration, BabyVerma};
use babyverma::Result;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Result<Verdict> {
    Ok(Verdict { ok, detail: detail.into() })
}

fn algebra(kind: Kind, n: usize) -> Arc<LieAlgebra> {
    Arc::new(LieAlgebra::new(kind, n).expect("valid rank"))
}

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).expect("odd prime")
}

/// χ supported on the simple lowering operators with the given values.
fn simple_chi(alg: &LieAlgebra, f: PrimeField, values: &[i64]) -> ChiForm {
    let entries: Vec<((usize, usize), i64)> = values.iter().enumerate().map(|(k, &v)| ((k + 1, k), v)).collect();
    ChiForm::from_root_values(alg, f, &entries).expect("simple lowering operators")
}

fn random_rational(rng: &mut ChaCha8Rng, p: u64) -> BigRational {
    let d = loop {
        let d: i64 = rng.gen_range(1..=4);
        if !(d as u64).is_multiple_of(p) {
            break d;
        }
    };
    BigRational::new(rng.gen_range(-12i64..=12).into(), d.into())
}

/// Expected filtration weights `λ + μ − Σ b_r γ_r`, with multiplicity.
fn predicted_multiset(zl: &BabyVerma, zm: &BabyVerma) -> BTreeMap<ModWeight, usize> {
    let alg = zl.module().algebra();
    let datum = alg.datum();
    let f = zl.module().field();
    let roots: Vec<Vec<i64>> = datum.positive_roots().iter().map(|&r| datum.root_toral_values(r)).collect();
    let mut out = BTreeMap::new();
    for b in all_exponents(f.p() as u32, roots.len()) {
        let w: ModWeight = (0..datum.num_torals())
            .map(|t| {
                let shift: i64 = b.iter().zip(&roots).map(|(&x, g)| x as i64 * g[t]).sum();
                f.sub(f.add(zl.lambda()[t], zm.lambda()[t]), f.reduce(shift))
            })
            .collect();
        *out.entry(w).or_insert(0) += 1;
    }
    out
}

fn criterion_1() -> Result<Verdict> {
    let alg = algebra(Kind::Sl, 2);
    let f = field(5);
    let chi = simple_chi(&alg, f, &[1]);
    let rep = tensor_filtration(&build_baby_verma(&alg, &chi, &[2])?, &build_baby_verma(&alg, &chi.neg(), &[3])?)?;
    let order: Vec<u64> = rep.steps.iter().map(|s| s.predicted_weight[0]).collect();
    let intertwiners = rep.steps.iter().all(|s| s.isomorphism_certified);
    verdict(
        order == [0, 3, 1, 4, 2] && intertwiners && rep.all_certified(),
        format!("quotients Z_0 of {order:?}, intertwiners verified: {intertwiners}"),
    )
}

fn filtration_case(alg: &Arc<LieAlgebra>, chi: &ChiForm, chi2: &ChiForm, lambda: &[u64], mu: &[u64]) -> Result<(bool, BTreeMap<ModWeight, usize>)> {
    let zl = build_baby_verma(alg, chi, lambda)?;
    let zm = build_baby_verma(alg, chi2, mu)?;
    let rep = tensor_filtration(&zl, &zm)?;
    let multiset = rep.weight_multiset();
    Ok((rep.all_certified() && rep.each_tuple_once && multiset == predicted_multiset(&zl, &zm), multiset))
}

fn criterion_2(rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let mut failures = Vec::new();
    let sl2 = algebra(Kind::Sl, 2);
    for case in 0..200 {
        let p = [3u64, 5, 7][rng.gen_range(0..3)];
        let f = field(p);
        let chi = simple_chi(&sl2, f, &[rng.gen_range(0..p as i64)]);
        let chi2 = simple_chi(&sl2, f, &[rng.gen_range(0..p as i64)]);
        let (lambda, mu) = ([rng.gen_range(0..p)], [rng.gen_range(0..p)]);
        if !filtration_case(&sl2, &chi, &chi2, &lambda, &mu)?.0 {
            failures.push(format!("sl2 case {case}"));
        }
    }
    let f = field(3);
    let algs: Vec<Arc<LieAlgebra>> = [TieBreak::Lex, TieBreak::ReverseLex]
        .into_iter()
        .map(|t| Arc::new(LieAlgebra::from_datum(RootDatum::with_tie_break(Kind::Sl, 3, t).expect("sl3"))))
        .collect();
    for case in 0..20 {
        let values: Vec<i64> = (0..4).map(|_| rng.gen_range(0..3)).collect();
        let (lambda, mu) = ([rng.gen_range(0..3), rng.gen_range(0..3)], [rng.gen_range(0..3), rng.gen_range(0..3)]);
        let mut sets = Vec::new();
        for alg in &algs {
            let (ok, set) = filtration_case(alg, &simple_chi(alg, f, &values[..2]), &simple_chi(alg, f, &values[2..]), &lambda, &mu)?;
            if !ok {
                failures.push(format!("sl3 case {case}"));
            }
            sets.push(set);
        }
        if sets[0] != sets[1] {
            failures.push(format!("sl3 case {case}: tie-break changes the multiset"));
        }
    }
    verdict(failures.is_empty(), format!("220 cases, failures: {failures:?}"))
}

fn criterion_3() -> Result<Verdict> {
    let sl2 = algebra(Kind::Sl, 2);
    let mut checked = 0;
    let mut bad = Vec::new();
    for p in [3u64, 5, 7] {
        let f = field(p);
        for c in 0..p as i64 {
            let chi = simple_chi(&sl2, f, &[c]);
            for lambda in 0..p {
                let z = build_baby_verma(&sl2, &chi, &[lambda])?;
                let peeled = composition_factors(z.module())?;
                if peeled != exhaustive_composition_factors(z.module())? || peeled.total_dim() != z.module().dim() {
                    bad.push((p, c, lambda));
                }
                checked += 1;
            }
        }
    }
    let f = field(5);
    let chi = simple_chi(&sl2, f, &[1]);
    let t = tensor(build_baby_verma(&sl2, &chi, &[2])?.module(), build_baby_verma(&sl2, &chi.neg(), &[3])?.module())?;
    let peeled = composition_factors_with(&t, PeelChoice::Seeded(7))?;
    let oracle = exhaustive_composition_factors(&t)?;
    let tensor_ok = peeled == oracle && peeled.total_dim() == 25;
    let shown: Vec<String> = peeled.factors.iter().map(|c| format!("{}×L({})", c.multiplicity, c.label[0])).collect();
    verdict(
        bad.is_empty() && tensor_ok,
        format!(
            "{checked} baby Vermas agree except {bad:?}; tensor: {} with Σ mult·dim = {} (the listed example sums to 21)",
            shown.join(" + "),
            peeled.total_dim()
        ),
    )
}

fn criterion_4() -> Result<Verdict> {
    let mut cases = Vec::new();
    for p in [3u64, 5] {
        cases.push((algebra(Kind::Sl, 2), p, vec![vec![0], vec![1], vec![2]]));
    }
    cases.push((algebra(Kind::Sl, 3), 3, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]));
    let mut checked = 0;
    let mut bad = Vec::new();
    for (alg, p, chis) in cases {
        let f = field(p);
        let toral = alg.datum().num_torals();
        for values in chis {
            let chi = simple_chi(&alg, f, &values);
            for lambda in all_exponents(p as u32, toral) {
                let lambda: Vec<u64> = lambda.into_iter().map(u64::from).collect();
                let z = build_baby_verma(&alg, &chi, &lambda)?;
                let zn = build_baby_verma(&alg, &chi.neg(), &lambda)?;
                let same = composition_factors(z.module())? == composition_factors(zn.module())?;
                let iso = find_isomorphism(&z.module().twist(), zn.module()).is_some();
                if !(same && iso) {
                    bad.push((alg.n(), p, values.clone(), lambda));
                }
                checked += 1;
            }
        }
    }
    verdict(bad.is_empty(), format!("{checked} pairs, failures: {bad:?}"))
}

fn criterion_5() -> Result<Verdict> {
    let sl2 = algebra(Kind::Sl, 2);
    let mut triples = 0;
    let mut bad = Vec::new();
    for p in [3u64, 5] {
        let f = field(p);
        let zero = ChiForm::zero(&sl2, f);
        let mut zero_catalog = SimpleCatalog::new(sl2.clone(), zero.clone())?;
        let mut verma_factors: BTreeMap<u64, CompFactorList> = BTreeMap::new();
        for nu in 0..p {
            verma_factors.insert(nu, composition_factors(zero_catalog.baby_verma(&[nu])?.module())?);
        }
        for c in 0..p as i64 {
            let chi = simple_chi(&sl2, f, &[c]);
            let mut plus = SimpleCatalog::new(sl2.clone(), chi.clone())?;
            let mut minus = SimpleCatalog::new(sl2.clone(), chi.neg())?;
            let mut simple_tensors: BTreeMap<(ModWeight, ModWeight), CompFactorList> = BTreeMap::new();
            for lambda in 0..p {
                let zl = build_baby_verma(&sl2, &chi, &[lambda])?;
                let fl = composition_factors(zl.module())?;
                for mu in 0..p {
                    let zm = build_baby_verma(&sl2, &chi.neg(), &[mu])?;
                    // Left side, directly.
                    let direct = composition_factors(&tensor(zl.module(), zm.module())?)?;
                    // Filtration layers Z_0(λ + μ − aγ).
                    let rep = tensor_filtration(&zl, &zm)?;
                    let mut layered = CompFactorList::default();
                    for s in &rep.steps {
                        layered = layered.merge(&verma_factors[&s.predicted_weight[0]], 1);
                    }
                    // Products of factor multiplicities, with [Z_χ(μ) : L_χ(τ)] on the second factor.
                    let fm = composition_factors(build_baby_verma(&sl2, &chi, &[mu])?.module())?;
                    let mut products = CompFactorList::default();
                    for s in &fl.factors {
                        for t in &fm.factors {
                            let key = (s.label.clone(), t.label.clone());
                            if !simple_tensors.contains_key(&key) {
                                let m = tensor(&plus.simple(&s.label)?, &minus.simple(&t.label)?)?;
                                simple_tensors.insert(key.clone(), composition_factors(&m)?);
                            }
                            products = products.merge(&simple_tensors[&key], s.multiplicity * t.multiplicity);
                        }
                    }
                    for kappa in 0..p {
                        let k = [kappa];
                        let (a, b, cc) = (direct.multiplicity(&k), layered.multiplicity(&k), products.multiplicity(&k));
                        if a != b || b != cc {
                            bad.push((p, c, lambda, mu, kappa, a, b, cc));
                        }
                        triples += 1;
                    }
                }
            }
        }
    }
    verdict(bad.is_empty(), format!("{triples} (χ, λ, μ, κ) checked, mismatches: {bad:?}"))
}

struct CharZeroCase {
    alg: Arc<LieAlgebra>,
    lambda: Vec<BigRational>,
    chi: ChiForm,
}

fn charzero_cases(rng: &mut ChaCha8Rng) -> Vec<CharZeroCase> {
    let mut cases = Vec::new();
    let sl2 = algebra(Kind::Sl, 2);
    for i in 0..20 {
        let p = if i % 2 == 0 { 3 } else { 5 };
        let f = field(p);
        let chi = simple_chi(&sl2, f, &[rng.gen_range(0..p as i64)]);
        cases.push(CharZeroCase { alg: sl2.clone(), lambda: vec![random_rational(rng, p)], chi });
    }
    let sl3 = algebra(Kind::Sl, 3);
    let f = field(3);
    for _ in 0..5 {
        let chi = simple_chi(&sl3, f, &[rng.gen_range(0..3), rng.gen_range(0..3)]);
        cases.push(CharZeroCase {
            alg: sl3.clone(),
            lambda: vec![random_rational(rng, 3), random_rational(rng, 3)],
            chi,
        });
    }
    cases
}

fn criterion_6(cases: &[CharZeroCase]) -> Result<Verdict> {
    let mut bad = Vec::new();
    for (i, c) in cases.iter().enumerate() {
        let f = c.chi.field();
        let tilde: Vec<u64> = c.lambda.iter().map(|q| f.reduce_rational(q)).collect::<Result<_>>()?;
        let q = verma_quotient(&c.alg, &c.lambda, &c.chi, None)?;
        if !matches_baby_verma(&q, &tilde)? {
            bad.push(i);
        }
    }
    verdict(bad.is_empty(), format!("{} cases (20 sl2, 5 sl3), failures at {bad:?}", cases.len()))
}

fn criterion_7(cases: &[CharZeroCase]) -> Result<Verdict> {
    let (mut surjective, mut zero, mut bad) = (0, 0, Vec::new());
    for (i, c) in cases.iter().enumerate().filter(|(_, c)| c.alg.n() == 2) {
        let red = reduce_simple(&c.alg, &c.lambda, &c.chi, None)?;
        if red.quotient.module.dim() == 0 {
            zero += 1;
        } else if head_surjection_check(&red.quotient, &red.lambda_tilde)? && red.stable {
            surjective += 1;
        } else {
            bad.push(i);
        }
    }
    verdict(
        bad.is_empty() && surjective > 0,
        format!("{surjective} surjections exhibited, {zero} cases with L_p^χ(λ) = 0, failures {bad:?}"),
    )
}

fn criterion_8(rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let mut bad = Vec::new();
    let mut dims = Vec::new();
    for p in [3u64, 5] {
        let f = field(p);
        for _ in 0..10 {
            let lambda = vec![random_rational(rng, p), random_rational(rng, p)];
            let c = rng.gen_range(0..p as i64);
            let cmp = gl_sl_compare(2, &lambda, &[((1, 0), c)], f)?;
            dims.push(cmp.gl_dim);
            if !(cmp.equal && cmp.identity_acts_by_scalar) {
                bad.push((p, lambda.iter().map(|q| q.to_string()).collect::<Vec<_>>(), c));
            }
        }
    }
    verdict(bad.is_empty(), format!("20 cases, dimensions {dims:?}, failures {bad:?}"))
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in min..=n {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 1, &mut Vec::new(), &mut out);
    out
}

fn criterion_9() -> Result<Verdict> {
    let mut count = 0;
    let mut bad = Vec::new();
    for n in 1..=8 {
        for parts in partitions(n) {
            let d = centralizer_dims(&Pyramid::new(&parts)?, 3)?;
            if d.oracle_agrees != Some(true) || 2 * d.borel_centralizer != d.gl_centralizer + n || d.orbit % 2 != 0 {
                bad.push(parts);
            }
            count += 1;
        }
    }
    let d = centralizer_dims(&Pyramid::new(&[1, 2, 2, 4])?, 7)?;
    let sample = (d.gl_centralizer, d.borel_centralizer, d.orbit) == (27, 18, 54) && d.orbit / 2 == 45 - d.borel_centralizer;
    verdict(
        bad.is_empty() && sample,
        format!(
            "{count} partitions agree with the kernel oracle (failures {bad:?}); (1,2,2,4): {}/{}/{}, ½·54 = 45 − 18",
            d.gl_centralizer, d.borel_centralizer, d.orbit
        ),
    )
}

fn criterion_10() -> Result<Verdict> {
    let pyr = Pyramid::new(&[1, 2, 2, 4])?;
    let lifted = lift_column_connected(&pyr, &[2, 1, 6, 0, 5, 6, 4, 1, 0], 7)?;
    let predicates = pyr.is_column_connected(&lifted, None) && pyr.is_row_standard(&lifted);
    let shape = rs_shape(&lifted)?;
    let sigma = sigma_check(&pyr, &lifted)?.holds();
    verdict(
        predicates && shape == [4, 2, 2, 1] && sigma,
        format!("lift {lifted:?}, RS shape {shape:?}, σ check {sigma}"),
    )
}

fn criterion_11() -> Result<Verdict> {
    let (pyr, p) = (Pyramid::new(&[1, 2])?, 3);
    let alg = algebra(Kind::Gl, 3);
    let mut catalog = SimpleCatalog::new(alg.clone(), pyr.chi(&alg, field(p))?)?;
    let classified = min_dim_classification(&pyr, p)?;
    let mut minimal = std::collections::BTreeSet::new();
    let mut divisible = true;
    for a in all_fillings(3, p) {
        let d = filling_simple_dim(&mut catalog, &a, p)?;
        divisible &= d % 9 == 0;
        if d == 9 {
            minimal.insert(pyr.row_canonical(&a));
        }
    }
    verdict(
        classified == minimal && divisible,
        format!("{} classes of minimal dimension 9 over 27 fillings; sets equal: {}", minimal.len(), classified == minimal),
    )
}

fn criterion_12() -> Result<Verdict> {
    let (mut labels, mut bad) = (0, Vec::new());
    for parts in [vec![2], vec![1, 1]] {
        let pyr = Pyramid::new(&parts)?;
        for p in [3u64, 5] {
            for a in min_dim_classification(&pyr, p)? {
                let r = summation_pipeline(&pyr, p, &a, None)?;
                if !(r.nonzero && r.surjects_onto_simple && r.remaining_parts == "not checked") {
                    bad.push((parts.clone(), p, a));
                }
                labels += 1;
            }
        }
    }
    verdict(
        bad.is_empty() && labels > 0,
        format!("{labels} minimal labels, each nonzero and surjective (failures {bad:?}); remaining statements not checked"),
    )
}

fn main() -> ExitCode {
    let seed: u64 = std::env::var("ACCEPTANCE_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(20240601);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    println!("acceptance criteria (seed {seed})");
    let cases = charzero_cases(&mut rng);

    type Check<'a> = Box<dyn FnOnce(&mut ChaCha8Rng) -> Result<Verdict> + 'a>;
    let criteria: Vec<(u32, &str, u64, Check)> = vec![
        (1, "sl2 tensor example filtration", 1, Box::new(|_| criterion_1())),
        (2, "tensor filtration property suite", 300, Box::new(criterion_2)),
        (3, "peeling agrees with the oracle", 120, Box::new(|_| criterion_3())),
        (4, "twist and opposite character", 60, Box::new(|_| criterion_4())),
        (5, "closing multiplicity identity", 120, Box::new(|_| criterion_5())),
        (6, "reduced Verma is the baby Verma", 120, Box::new(|_| criterion_6(&cases))),
        (7, "surjection onto the simple head", 60, Box::new(|_| criterion_7(&cases))),
        (8, "gl versus sl dimensions", 60, Box::new(criterion_8)),
        (9, "centralizer formulas against the oracle", 30, Box::new(|_| criterion_9())),
        (10, "lift, RS shape and σ for (1,2,2,4)", 1, Box::new(|_| criterion_10())),
        (11, "minimal-dimension classification", 120, Box::new(|_| criterion_11())),
        (12, "summation pipeline at N = 2", 120, Box::new(|_| criterion_12())),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check(&mut rng);
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let (ok, detail) = match outcome {
            Ok(v) => (v.ok && in_time, v.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        failed += usize::from(!ok);
        println!(
            "[{}] {id:>2} {name}: {detail} ({:.3} s, limit {limit} s{})",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            if in_time { "" } else { ", exceeded" }
        );
    }
    println!("{} of 12 criteria pass", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
