mod args;
mod report;
mod run;

use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use osp_core::dsl::{bind, parse};
use osp_core::presentations::{
    cartan_matrix, chevalley_presentation, green_image, green_presentation,
    preoscillator_presentation, substitute_scaled, AlgebraSignature, B44,
};
use osp_core::rewrite::{build_rules, default_degree_bound, Reduction, RewriteSystem};
use osp_core::{Coefficient, Element, Rational};

use args::{Cli, Command, PresentationArg};
use report::{EXIT_FAILURE, EXIT_INCONCLUSIVE, EXIT_PROVED, EXIT_REFUTED, EXIT_USAGE};
use run::{fingerprint, render_scaled, Runner};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PROVED
            };
            let _ = e.print();
            return exit(code);
        }
    };
    let code = match cli.command {
        Command::Cartan {
            sig,
            check_b44,
            json,
        } => cartan(sig.signature(), check_b44, json),
        Command::Verify { suite, sig, opts } => {
            let json = opts.json;
            report_or_fail(
                Runner::new(sig.signature(), opts).and_then(|r| r.verify(suite)),
                json,
            )
        }
        Command::Check {
            identity,
            sig,
            opts,
        } => check(&sig.signature(), &identity, opts),
        Command::Converse { sig, opts } => {
            let json = opts.json;
            report_or_fail(
                Runner::new(sig.signature(), opts).and_then(|r| r.converse()),
                json,
            )
        }
        Command::Reduce {
            expr,
            sig,
            degree_bound,
            q0,
            trace,
            json,
        } => reduce(
            &sig.signature(),
            &expr,
            degree_bound,
            q0.as_ref(),
            trace,
            json,
        ),
        Command::Present {
            sig,
            kind,
            classical,
            json,
        } => present(&sig.signature(), kind, classical, json),
    };
    exit(code)
}

fn exit(code: i32) -> ExitCode {
    ExitCode::from(code as u8)
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn report_or_fail(r: Result<report::Report, String>, json: bool) -> i32 {
    match r {
        Ok(rep) => {
            if json {
                print_json(&rep);
            } else {
                print!("{}", rep.text());
            }
            rep.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_FAILURE
        }
    }
}

fn check(sig: &AlgebraSignature, identity: &str, opts: args::VerifyOpts) -> i32 {
    let Some((l, r)) = identity.split_once('=') else {
        eprintln!("error: expected `LHS = RHS`");
        return EXIT_USAGE;
    };
    let img = green_image(sig, true);
    let mut sides = Vec::new();
    for text in [l, r] {
        let x = match parse(text)
            .map_err(|e| e.to_string())
            .and_then(|a| bind(sig, &a).map_err(|e| e.to_string()))
        {
            Ok(x) => x,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        };
        match substitute_scaled(&x, &img) {
            Ok(x) => sides.push(x.normalized()),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_FAILURE;
            }
        }
    }
    let rhs = sides.pop().expect("two sides");
    let lhs = sides.pop().expect("two sides");
    let json = opts.json;
    let statement = format!("{} = {}", l.trim(), r.trim());
    report_or_fail(
        Runner::new(*sig, opts).and_then(|run| run.check(&statement, lhs, rhs)),
        json,
    )
}

fn cartan(sig: AlgebraSignature, check_b44: bool, json: bool) -> i32 {
    let a = cartan_matrix(&sig);
    let rows = a.rows();
    let check = check_b44.then(|| {
        let b = cartan_matrix(&AlgebraSignature::new(4, 4).expect("valid"));
        b.rows()
            .iter()
            .zip(B44.iter())
            .all(|(r, e)| r.as_slice() == e.as_slice())
    });
    if json {
        let mut v = json!({ "signature": { "m": sig.m(), "n": sig.n() }, "matrix": rows });
        if let Some(ok) = check {
            v["b44_check"] = json!(if ok { "pass" } else { "fail" });
        }
        print_json(&v);
    } else {
        let inline: Vec<String> = rows
            .iter()
            .map(|r| {
                format!(
                    "[{}]",
                    r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        println!("[{}]", inline.join(","));
        let width = rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for r in &rows {
            let cells: Vec<String> = r.iter().map(|x| format!("{x:>width$}")).collect();
            println!("  {}", cells.join(" "));
        }
        if let Some(ok) = check {
            println!("B(4/4) check: {}", if ok { "pass" } else { "fail" });
        }
    }
    match check {
        Some(false) => EXIT_REFUTED,
        _ => EXIT_PROVED,
    }
}

fn reduce(
    sig: &AlgebraSignature,
    text: &str,
    degree_bound: Option<usize>,
    q0: Option<&Rational>,
    trace: bool,
    json: bool,
) -> i32 {
    let ast = match parse(text) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let x = match bind(sig, &ast) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let x = match substitute_scaled(&x, &green_image(sig, true)) {
        Ok(x) => x.normalized(),
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_FAILURE;
        }
    };
    let bound = degree_bound.unwrap_or_else(|| default_degree_bound(x.body.degree()));
    let mut rs = match build_rules(&chevalley_presentation(sig, true), bound) {
        Ok(rs) => rs,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_FAILURE;
        }
    };
    let outcome = match q0 {
        None => {
            let _ = rs.complete(osp_core::rewrite::DEFAULT_MAX_RULES);
            let red = rs.reduce_with(&x.body, osp_core::rewrite::Strategy::Leftmost, trace);
            let nf = render_scaled(&osp_core::presentations::ScaledElement::new(
                x.sqrt2_exp,
                red.result.clone(),
            ));
            Ok(summary(&red, nf))
        }
        Some(q0) => sampled_reduce(&rs, &x.body, x.sqrt2_exp, q0, trace),
    };
    let (nf, steps, bound_hit, lines) = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_FAILURE;
        }
    };
    if json {
        let mut v = json!({
            "input": text,
            "signature": { "m": sig.m(), "n": sig.n() },
            "degree_bound": bound,
            "normal_form": nf,
            "steps": steps,
            "bound_hit": bound_hit,
        });
        if trace {
            v["trace"] = json!(lines);
        }
        print_json(&v);
    } else {
        println!("{nf}");
        if trace {
            for l in &lines {
                println!("  {l}");
            }
            println!("  {steps} steps");
        }
        if bound_hit {
            println!("(bound-limited: some word exceeded degree bound {bound})");
        }
    }
    if bound_hit {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_PROVED
    }
}

type ReduceSummary = (String, usize, bool, Vec<String>);

fn summary<C: Coefficient>(red: &Reduction<C>, nf: String) -> ReduceSummary {
    (
        nf,
        red.steps,
        red.bound_hit,
        red.trace.iter().map(|t| t.to_string()).collect(),
    )
}

fn sampled_reduce(
    rs: &RewriteSystem<osp_core::QScalar>,
    x: &Element<osp_core::QScalar>,
    sqrt2_exp: i32,
    q0: &Rational,
    trace: bool,
) -> Result<ReduceSummary, String> {
    let mut rs = rs.map_coeffs(|c| c.eval(q0)).map_err(|e| e.to_string())?;
    let _ = rs.complete(osp_core::rewrite::DEFAULT_MAX_RULES);
    let x = x.map_coeffs(|c| c.eval(q0)).map_err(|e| e.to_string())?;
    let red = rs.reduce_with(&x, osp_core::rewrite::Strategy::Leftmost, trace);
    let nf = match sqrt2_exp {
        0 => red.result.to_string(),
        _ => format!("sqrt2*({})", red.result),
    };
    Ok(summary(&red, nf))
}

fn present(sig: &AlgebraSignature, kind: PresentationArg, classical: bool, json: bool) -> i32 {
    let p = match kind {
        PresentationArg::Chevalley => chevalley_presentation(sig, !classical),
        PresentationArg::Green => green_presentation(sig, !classical),
        PresentationArg::Preoscillator => preoscillator_presentation(sig),
    };
    let text = p.canonical_text();
    let fp = fingerprint(&text);
    if json {
        let relations: Vec<_> = p
            .relations
            .iter()
            .map(|r| json!({ "name": r.name, "relation": r.text(), "derived": r.derived }))
            .collect();
        let generators: Vec<_> = p
            .generators
            .iter()
            .map(|g| json!({ "letter": g.to_string(), "parity": g.parity.to_string() }))
            .collect();
        print_json(&json!({
            "kind": p.kind.name(),
            "signature": { "m": sig.m(), "n": sig.n() },
            "deformed": p.deformed,
            "fingerprint": fp,
            "generators": generators,
            "relations": relations,
        }));
    } else {
        print!("{text}");
        println!("sha256 {fp}");
    }
    EXIT_PROVED
}
