use osp_core::presentations::AlgebraSignature;
use osp_core::rewrite::{verify_suite, Status, Suite, DEFAULT_MAX_RULES};
use std::time::Instant;

fn main() {
    let a: Vec<String> = std::env::args().skip(1).collect();
    let sig = AlgebraSignature::new(a[0].parse().unwrap(), a[1].parse().unwrap()).unwrap();
    let suite = Suite::from_name(&a[2]).unwrap();
    let t = Instant::now();
    let rep = verify_suite(
        &sig,
        suite,
        a.get(3).map(|s| s.parse().unwrap()),
        DEFAULT_MAX_RULES,
    )
    .unwrap();
    println!(
        "{suite} bound {} proved {} refuted {} inconclusive {} in {:?}",
        rep.degree_bound,
        rep.count(Status::Proved),
        rep.count(Status::Refuted),
        rep.count(Status::Inconclusive),
        t.elapsed()
    );
    for r in &rep.results {
        if r.verdict.status != Status::Proved {
            println!(
                "  {} {}: {}  residual {:?}",
                r.verdict.status,
                r.name,
                r.statement,
                r.verdict
                    .witness
                    .as_ref()
                    .or(r.verdict.residual.as_ref())
                    .map(|w| w.to_string())
            );
        }
    }
}
