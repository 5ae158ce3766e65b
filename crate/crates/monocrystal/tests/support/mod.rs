//! Shared generators and suite runners for the randomized integration tests.

use monocrystal::{
    explore_component, is_isomorphic, star, Crystal, Error, ExpoMatrix, Family, Monomial,
    RankSpec, Tensor,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeSet, VecDeque};

pub const SUITE_SEED: u64 = 0x6d6f_6e6f;

#[must_use]
pub fn suite_specs() -> [RankSpec; 4] {
    [
        RankSpec::new(Family::A, 2),
        RankSpec::new(Family::A, 3),
        RankSpec::new(Family::C, 2),
        RankSpec::new(Family::C, 3),
    ]
}

#[must_use]
pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SUITE_SEED ^ salt)
}

/// Random monomial with at most `max_factors` factors, exponents in
/// [-max_exp, max_exp] \ {0}, and slots in [-3, 3].
pub fn random_monomial(
    rng: &mut ChaCha8Rng,
    spec: RankSpec,
    max_factors: usize,
    max_exp: i64,
) -> Monomial {
    let factors = rng.gen_range(0..=max_factors);
    let mut m = Monomial::one(spec);
    for _ in 0..factors {
        let i = rng.gen_range(1..=spec.rank);
        let slot = rng.gen_range(-3..=3);
        let mut e = 0;
        while e == 0 {
            e = rng.gen_range(-max_exp..=max_exp);
        }
        m.mul_y(i, slot, e).expect("index drawn within rank");
    }
    m
}

/// decode(compress(encode(m))): the compression morphism on monomials.
pub fn kappa(m: &Monomial) -> monocrystal::Result<Monomial> {
    ExpoMatrix::encode(m)?.compress()?.decode()
}

/// Encoding followed by decoding returns the input monomial.
pub fn suite_roundtrip(cases: usize) -> Vec<String> {
    let mut rng = rng(1);
    let mut failures = Vec::new();
    for k in 0..cases {
        let spec = suite_specs()[k % 4];
        let m = random_monomial(&mut rng, spec, 6, 2);
        match ExpoMatrix::encode(&m).and_then(|e| e.decode()) {
            Ok(back) if back == m => {}
            Ok(back) => failures.push(format!("case {k}: {m} decoded to {back}")),
            Err(err) => failures.push(format!("case {k}: {m}: {err}")),
        }
    }
    failures
}

/// wt, phi, eps, f, and e agree between the monomial and matrix models.
pub fn suite_model_agreement(cases: usize) -> Vec<String> {
    let mut rng = rng(2);
    let mut failures = Vec::new();
    for k in 0..cases {
        let spec = suite_specs()[k % 4];
        let m = random_monomial(&mut rng, spec, 6, 2);
        if let Err(msg) = check_model_agreement(&m) {
            failures.push(format!("case {k}: {msg}"));
        }
    }
    failures
}

fn check_model_agreement(m: &Monomial) -> Result<(), String> {
    let err = |e: Error| format!("{m}: {e}");
    let mat = ExpoMatrix::encode(m).map_err(err)?;
    if Crystal::weight(&mat) != m.weight() {
        return Err(format!("{m}: weight mismatch"));
    }
    for i in 1..=m.spec().rank {
        let err = |e: Error| format!("{m} at index {i}: {e}");
        if Crystal::phi(&mat, i).map_err(err)? != m.phi(i).map_err(err)? {
            return Err(format!("{m}: phi_{i} mismatch"));
        }
        if Crystal::eps(&mat, i).map_err(err)? != m.eps(i).map_err(err)? {
            return Err(format!("{m}: eps_{i} mismatch"));
        }
        let mono_f = m.f(i).map_err(err)?;
        let mat_f = Crystal::f(&mat, i).map_err(err)?;
        match (mono_f, mat_f) {
            (None, None) => {}
            (Some(mf), Some(xf)) => {
                if ExpoMatrix::encode(&mf).map_err(err)? != xf {
                    return Err(format!("{m}: f_{i} does not commute with encoding"));
                }
            }
            (a, _) => {
                return Err(format!(
                    "{m}: f_{i} defined on {} model only",
                    if a.is_some() { "monomial" } else { "matrix" },
                ))
            }
        }
        let mono_e = m.e(i).map_err(err)?;
        let mat_e = Crystal::e(&mat, i).map_err(err)?;
        match (mono_e, mat_e) {
            (None, None) => {}
            (Some(me), Some(xe)) => {
                if ExpoMatrix::encode(&me).map_err(err)? != xe {
                    return Err(format!("{m}: e_{i} does not commute with encoding"));
                }
            }
            (a, _) => {
                return Err(format!(
                    "{m}: e_{i} defined on {} model only",
                    if a.is_some() { "monomial" } else { "matrix" },
                ))
            }
        }
    }
    Ok(())
}

/// Compression commutes with every lowering and raising operator. Inverse
/// law violations are reported distinctly so they surface as findings.
pub fn suite_kappa_commutes(cases: usize) -> (Vec<String>, Vec<String>) {
    let mut rng = rng(3);
    let mut failures = Vec::new();
    let mut inverse_findings = Vec::new();
    for k in 0..cases {
        let spec = suite_specs()[k % 4];
        let m = random_monomial(&mut rng, spec, 6, 2);
        let km = match kappa(&m) {
            Ok(km) => km,
            Err(e) => {
                record(&mut failures, &mut inverse_findings, k, &m, &e);
                continue;
            }
        };
        for i in 1..=spec.rank {
            for lower in [true, false] {
                let step = if lower { m.f(i) } else { m.e(i) };
                let kstep = if lower { km.f(i) } else { km.e(i) };
                let op = if lower { "f" } else { "e" };
                match (step, kstep) {
                    (Ok(None), Ok(None)) => {}
                    (Ok(Some(stepped)), Ok(Some(kstepped))) => match kappa(&stepped) {
                        Ok(lhs) if lhs == kstepped => {}
                        Ok(lhs) => failures.push(format!(
                            "case {k}: kappa({op}_{i} {m}) = {lhs} but {op}_{i}(kappa) = {kstepped}"
                        )),
                        Err(e) => record(&mut failures, &mut inverse_findings, k, &m, &e),
                    },
                    (Ok(a), Ok(_)) => failures.push(format!(
                        "case {k}: {op}_{i} defined on {} side only for {m}",
                        if a.is_some() { "monomial" } else { "compressed" },
                    )),
                    (Err(e), _) | (_, Err(e)) => {
                        record(&mut failures, &mut inverse_findings, k, &m, &e)
                    }
                }
            }
        }
    }
    (failures, inverse_findings)
}

fn record(
    failures: &mut Vec<String>,
    inverse_findings: &mut Vec<String>,
    case: usize,
    m: &Monomial,
    e: &Error,
) {
    let line = format!("case {case}: {m}: {e}");
    if matches!(e, Error::InverseLawViolated { .. }) {
        inverse_findings.push(line);
    } else {
        failures.push(line);
    }
}

/// The star product realizes the tensor rule for all five crystal maps.
pub fn suite_star_tensor(cases: usize) -> Vec<String> {
    let mut rng = rng(4);
    let mut failures = Vec::new();
    for k in 0..cases {
        let spec = suite_specs()[k % 4];
        let m1 = random_monomial(&mut rng, spec, 4, 2);
        let m2 = random_monomial(&mut rng, spec, 4, 2);
        if let Err(msg) = check_star_tensor(&m1, &m2) {
            failures.push(format!("case {k}: {msg}"));
        }
    }
    failures
}

fn check_star_tensor(m1: &Monomial, m2: &Monomial) -> Result<(), String> {
    let pair = format!("{m1} (x) {m2}");
    let err = |e: Error| format!("{pair}: {e}");
    let e1 = ExpoMatrix::encode(m1).map_err(err)?;
    let e2 = ExpoMatrix::encode(m2).map_err(err)?;
    let s = star(&e1, &e2).map_err(err)?;
    let tensor = Tensor::new(e1, e2).map_err(err)?;
    if Crystal::weight(&s) != Crystal::weight(&tensor) {
        return Err(format!("{pair}: weight mismatch"));
    }
    for i in 1..=m1.spec().rank {
        let err = |e: Error| format!("{pair} at index {i}: {e}");
        if Crystal::phi(&s, i).map_err(err)? != tensor.phi(i).map_err(err)? {
            return Err(format!("{pair}: phi_{i} mismatch"));
        }
        if Crystal::eps(&s, i).map_err(err)? != tensor.eps(i).map_err(err)? {
            return Err(format!("{pair}: eps_{i} mismatch"));
        }
        let sf = Crystal::f(&s, i).map_err(err)?;
        match tensor.f(i).map_err(err)? {
            Some(t) => {
                let re = star(&t.left, &t.right).map_err(err)?;
                if sf != Some(re) {
                    return Err(format!("{pair}: f_{i} disagrees with the tensor rule"));
                }
            }
            None => {
                if sf.is_some() {
                    return Err(format!("{pair}: f_{i} defined on star only"));
                }
            }
        }
        let se = Crystal::e(&s, i).map_err(err)?;
        match tensor.e(i).map_err(err)? {
            Some(t) => {
                let re = star(&t.left, &t.right).map_err(err)?;
                if se != Some(re) {
                    return Err(format!("{pair}: e_{i} disagrees with the tensor rule"));
                }
            }
            None => {
                if se.is_some() {
                    return Err(format!("{pair}: e_{i} defined on star only"));
                }
            }
        }
    }
    Ok(())
}

/// Semi-normality and the inverse laws, checked at every explored node:
/// phi/eps obey the string recursions and f/e invert each other edgewise.
/// Returns the failures and the number of nodes checked.
pub fn suite_component_laws(cases: usize, node_cap: usize) -> (Vec<String>, usize) {
    let mut rng = rng(5);
    let mut failures = Vec::new();
    let mut nodes_checked = 0;
    for k in 0..cases {
        let spec = suite_specs()[k % 4];
        let seed = random_monomial(&mut rng, spec, 6, 2);
        match check_component_laws(&seed, node_cap) {
            Ok(nodes) => nodes_checked += nodes,
            Err(msg) => failures.push(format!("case {k}: {msg}")),
        }
    }
    (failures, nodes_checked)
}

fn check_component_laws(seed: &Monomial, node_cap: usize) -> Result<usize, String> {
    let rank = seed.spec().rank;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.to_string());
    queue.push_back(seed.clone());
    let mut checked = 0;
    while let Some(node) = queue.pop_front() {
        checked += 1;
        for i in 1..=rank {
            check_node_laws(&node, i, &mut seen, &mut queue, node_cap)
                .map_err(|msg| format!("{node} at index {i}: {msg}"))?;
        }
    }
    Ok(checked)
}

fn check_node_laws(
    node: &Monomial,
    i: usize,
    seen: &mut BTreeSet<String>,
    queue: &mut VecDeque<Monomial>,
    node_cap: usize,
) -> Result<(), String> {
    let err = |e: Error| e.to_string();
    let phi = node.phi(i).map_err(err)?;
    let eps = node.eps(i).map_err(err)?;
    if phi < 0 || eps < 0 {
        return Err("negative string statistic".into());
    }

    match node.f(i).map_err(err)? {
        None => {
            if phi != 0 {
                return Err(format!("f undefined but phi = {phi}"));
            }
        }
        Some(lowered) => {
            if phi == 0 {
                return Err("f defined but phi = 0".into());
            }
            if lowered.phi(i).map_err(err)? != phi - 1 || lowered.eps(i).map_err(err)? != eps + 1 {
                return Err("string statistics do not step under f".into());
            }
            if lowered.e(i).map_err(err)?.as_ref() != Some(node) {
                return Err("e does not invert f".into());
            }
            enqueue(lowered, seen, queue, node_cap);
        }
    }

    match node.e(i).map_err(err)? {
        None => {
            if eps != 0 {
                return Err(format!("e undefined but eps = {eps}"));
            }
        }
        Some(raised) => {
            if eps == 0 {
                return Err("e defined but eps = 0".into());
            }
            if raised.phi(i).map_err(err)? != phi + 1 || raised.eps(i).map_err(err)? != eps - 1 {
                return Err("string statistics do not step under e".into());
            }
            if raised.f(i).map_err(err)?.as_ref() != Some(node) {
                return Err("f does not invert e".into());
            }
            enqueue(raised, seen, queue, node_cap);
        }
    }
    Ok(())
}

fn enqueue(
    node: Monomial,
    seen: &mut BTreeSet<String>,
    queue: &mut VecDeque<Monomial>,
    node_cap: usize,
) {
    if seen.len() < node_cap && seen.insert(node.to_string()) {
        queue.push_back(node);
    }
}

/// Component of m and component of kappa(m) are isomorphic, for components
/// within the cap. Returns failures and the number of accepted cases.
pub fn suite_component_isomorphism(
    per_family: usize,
    component_cap: usize,
) -> (Vec<String>, usize) {
    let mut rng = rng(6);
    let mut failures = Vec::new();
    let mut accepted = 0;
    for spec in suite_specs() {
        let mut found = 0;
        while found < per_family {
            let m = random_monomial(&mut rng, spec, 4, 1);
            let original = match explore_component(&m, component_cap) {
                Ok(g) => g,
                Err(Error::CapExceeded(_)) => continue,
                Err(e) => {
                    failures.push(format!("{m}: {e}"));
                    found += 1;
                    continue;
                }
            };
            found += 1;
            accepted += 1;
            let result = kappa(&m).and_then(|km| {
                let image = explore_component(&km, component_cap)?;
                is_isomorphic(&original, &image)
            });
            match result {
                Ok(true) => {}
                Ok(false) => failures.push(format!("{m}: components are not isomorphic")),
                Err(e) => failures.push(format!("{m}: {e}")),
            }
        }
    }
    (failures, accepted)
}
