//! One line per acceptance criterion, written straight to stderr so they
//! show up in captured test runs too.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use osp_core::dsl::bind;
use osp_core::presentations::{
    cartan_matrix, green_image, green_presentation, substitute_scaled, AlgebraSignature, B44,
};
use osp_core::rewrite::{
    abstract_letters, bracket_identity_difference, chevalley_system, constant_perturbations,
    suite_degree_bound, suite_instances, verify_scaled, Status, Strategy, Suite, DEFAULT_MAX_RULES,
};
use osp_core::{Element, Letter, Parity, QScalar, Rational, Word};

type Criterion = fn() -> Result<String, String>;

fn sig(m: u16, n: u16) -> AlgebraSignature {
    AlgebraSignature::new(m, n).unwrap()
}

fn verify(args: &[&str]) -> (i32, Value) {
    let o = Command::new(env!("CARGO_BIN_EXE_osp"))
        .arg("verify")
        .args(args)
        .arg("--json")
        .output()
        .unwrap();
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    (o.status.code().unwrap(), v)
}

fn all_proved(suite: &str, sigs: &[(u16, u16)]) -> Result<String, String> {
    let mut total = 0;
    for &(m, n) in sigs {
        let (ms, ns) = (m.to_string(), n.to_string());
        let (code, v) = verify(&[suite, "-m", &ms, "-n", &ns]);
        let c = &v["counts"];
        if code != 0 || c["refuted"] != 0 || c["inconclusive"] != 0 {
            return Err(format!("({m},{n}): exit {code}, counts {c}"));
        }
        total += c["proved"].as_u64().unwrap();
    }
    Ok(format!("{total} instances proved"))
}

fn within(limit: Duration, f: impl FnOnce() -> Result<String, String>) -> Result<String, String> {
    let t = Instant::now();
    let r = f()?;
    let took = t.elapsed();
    if took > limit {
        return Err(format!("{r}, but took {took:.2?} (limit {limit:?})"));
    }
    Ok(format!("{r} in {took:.2?}"))
}

fn c1() -> Result<String, String> {
    within(Duration::from_secs(1), || {
        let a = cartan_matrix(&sig(4, 4));
        let rows = a.rows();
        let same = rows.len() == B44.len()
            && rows
                .iter()
                .zip(B44.iter())
                .all(|(r, e)| r.as_slice() == e.as_slice());
        same.then(|| "8x8 matrix equals the reference table".to_string())
            .ok_or_else(|| format!("{rows:?}"))
    })
}

fn c2() -> Result<String, String> {
    within(Duration::from_secs(60), || {
        all_proved("classical", &[(1, 1), (1, 2), (2, 1), (2, 2)])
    })
}

fn c3() -> Result<String, String> {
    within(Duration::from_secs(300), || {
        all_proved("prop5", &[(1, 1), (1, 2), (2, 1)])
    })
}

fn c4() -> Result<String, String> {
    within(Duration::from_secs(600), || {
        let r = all_proved("theorem", &[(1, 1), (1, 2)])?;
        let (_, v) = verify(&["theorem"]);
        let families: Vec<&str> = v["suites"][0]["instances"]
            .as_array()
            .unwrap()
            .iter()
            .map(|i| i["family"].as_str().unwrap())
            .collect();
        let named = [
            "green.L-inverse",
            "green.La",
            "green.a-bracket",
            "green.triple",
            "green.cubic",
        ];
        if let Some(missing) = named.iter().find(|f| !families.contains(f)) {
            return Err(format!("no instances of {missing}"));
        }
        Ok(format!("{r}, all five families present"))
    })
}

fn c5() -> Result<String, String> {
    all_proved("roundtrip", &[(1, 1), (1, 2)])
}

fn c6() -> Result<String, String> {
    let (code, v) = verify(&["prop6", "--samples", "20"]);
    let s = &v["suites"][0];
    let per = s["samples"]["per_triple"].as_u64().unwrap_or(0);
    if code != 0 || per < 20 {
        return Err(format!("exit {code}, {per} samples per triple"));
    }
    let proved = s["instances"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|i| i["status"] == "proved")
        .count();
    if proved != 6 {
        return Err(format!("{proved} of 6 admissible triples proved"));
    }
    let rejected: Vec<&str> = s["rejected"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    if !rejected.contains(&"prop6[even,odd,odd]") {
        return Err(format!("rejected {rejected:?}"));
    }
    let even = (Parity::Even, Parity::Even, Parity::Even);
    let one = Rational::from_integer(1.into());
    let d = bracket_identity_difference(even, &(one.clone(), one.clone(), one));
    let [a, b, c] = abstract_letters(even);
    let sc = Element::supercommutator;
    let jacobi = sc(&a, &sc(&b, &c))
        .sub(&sc(&sc(&a, &b), &c))
        .sub(&sc(&b, &sc(&a, &c)));
    if d != jacobi {
        return Err(format!(
            "unit weights give {d}, graded Jacobi gives {jacobi}"
        ));
    }
    Ok(format!(
        "6 triples proved with {per} samples each, {} rejected, unit weights equal Jacobi",
        rejected.len()
    ))
}

fn c7() -> Result<String, String> {
    let s = sig(1, 1);
    let insts = suite_instances(&s, Suite::Theorem).map_err(|e| e.to_string())?;
    let (rs, stats) = chevalley_system(&s, suite_degree_bound(&insts), DEFAULT_MAX_RULES)
        .map_err(|e| e.to_string())?;
    stats.map_err(|e| e.to_string())?;
    let img = green_image(&s, true);
    let side = |e: &osp_core::dsl::Expr| substitute_scaled(&bind(&s, e).unwrap(), &img).unwrap();
    let mut checked = 0;
    for rel in &green_presentation(&s, true).relations {
        let lhs = constant_perturbations(&rel.lhs)
            .into_iter()
            .map(|p| (p.description, p.expr, rel.rhs.clone()));
        let rhs = constant_perturbations(&rel.rhs)
            .into_iter()
            .map(|p| (p.description, rel.lhs.clone(), p.expr));
        for (what, l, r) in lhs.chain(rhs) {
            let v = verify_scaled(&side(&l), &side(&r), &rs);
            let witnessed = v.witness.as_ref().is_some_and(|w| !w.is_zero());
            if v.status != Status::Refuted || !witnessed {
                return Err(format!("{} with {what}: {:?}", rel.name, v.status));
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} perturbations refuted with nonzero witnesses"
    ))
}

fn c8() -> Result<String, String> {
    let s = sig(1, 1);
    let bound = 10;
    let (rs, stats) = chevalley_system(&s, bound, DEFAULT_MAX_RULES).map_err(|e| e.to_string())?;
    stats.map_err(|e| e.to_string())?;
    let letters: Vec<Letter> = (1..=2)
        .flat_map(|i| [s.e(i), s.f(i), s.k(i), s.kbar(i)])
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in 0..100 {
        let terms: Vec<(Word, QScalar)> = (0..rng.random_range(1..=3))
            .map(|_| {
                let len = rng.random_range(0..=bound);
                let w = Word::new(
                    (0..len)
                        .map(|_| letters[rng.random_range(0..letters.len())])
                        .collect(),
                );
                let c = QScalar::from_int(rng.random_range(1..=3))
                    .mul_ref(&QScalar::q_pow(rng.random_range(-2..=2)));
                (w, c)
            })
            .collect();
        let x = Element::from_terms(terms);
        let base = rs.reduce(&x);
        if base.bound_hit {
            return Err(format!("element {n} hit the bound"));
        }
        for _ in 0..3 {
            let mut pick = |k: usize| rng.random_range(0..k);
            let other = rs.reduce_with(&x, Strategy::Choose(&mut pick), false);
            if other.result != base.result {
                return Err(format!("element {n}: {} vs {}", base.result, other.result));
            }
        }
    }
    Ok(format!(
        "100 elements, 3 random strategies each, unique normal forms ({} rules)",
        rs.len()
    ))
}

fn c9() -> Result<String, String> {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timing");
        serde_json::to_vec(&v).unwrap()
    };
    let (c1, a) = verify(&["all", "--workers", "1"]);
    let (c8, b) = verify(&["all", "--workers", "8"]);
    let (a, b) = (strip(a), strip(b));
    if c1 != c8 || a != b {
        return Err("reports differ".into());
    }
    Ok(format!("{} identical bytes", a.len()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion); 9] = [
        ("Cartan matrix of B(4/4)", c1),
        ("classical matrix suite", c2),
        ("Chevalley-to-Green relations", c3),
        ("Green relations from Chevalley", c4),
        ("round trip", c5),
        ("bracket identity", c6),
        ("perturbations refuted", c7),
        ("confluence", c8),
        ("worker independence", c9),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let n = i + 1;
        let line = match f() {
            Ok(msg) => format!("criterion {n}: PASS  {name}: {msg}\n"),
            Err(msg) => {
                failed.push(n);
                format!("criterion {n}: FAIL  {name}: {msg}\n")
            }
        };
        let _ = std::io::stderr().write_all(line.as_bytes());
    }
    assert!(failed.is_empty(), "failed criteria {failed:?}");
}
