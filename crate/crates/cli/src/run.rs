use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use osp_core::matrixrep::{verify_classical, ClassicalFamily};
use osp_core::presentations::{
    chevalley_presentation, green_presentation, preoscillator_presentation, ScaledElement,
};
use osp_core::rewrite::{
    build_rules, exact_grid, parity_triples, suite_degree_bound, suite_instances,
    verify_bracket_identity, verify_converse, verify_difference, verify_scaled, worse_verdict,
    CompletionError, CompletionStats, RewriteSystem, Sample, Status, Suite, SuiteInstance, Verdict,
};
use osp_core::scalars::ScalarError;
use osp_core::{AlgebraSignature, Coefficient, Element, Parity, QScalar, Rational};

use crate::args::{SuiteArg, VerifyOpts};
use crate::report::{
    combine, exit_code, CompletionInfo, Counts, InstanceEntry, QMode, Rejected, Report, SampleInfo,
    SignatureInfo, SuiteSection, SuiteTiming, Timing,
};

pub fn fingerprint(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn completion_info(
    rules: usize,
    closed_to: Option<usize>,
    stats: &Result<CompletionStats, CompletionError>,
) -> CompletionInfo {
    let (s, error) = match stats {
        Ok(s) => (s.clone(), None),
        Err(e) => (CompletionStats::default(), Some(e.to_string())),
    };
    CompletionInfo {
        rules,
        rounds: s.rounds,
        overlaps_resolved: s.overlaps_resolved,
        rules_added: s.rules_added,
        overlaps_skipped: s.overlaps_skipped,
        closed_to,
        error,
    }
}

fn entry<C: Coefficient>(
    family: &str,
    name: &str,
    statement: &str,
    v: &Verdict<C>,
    render: impl Fn(&Element<C>) -> String,
    trace: Option<Vec<String>>,
) -> (InstanceEntry, Status) {
    let e = InstanceEntry {
        family: family.into(),
        name: name.into(),
        statement: statement.into(),
        status: v.status.name().into(),
        reduction_steps: v.reduction_steps,
        bound_used: Some(v.bound_used),
        witness: v.witness.as_ref().map(&render),
        residual: v.residual.as_ref().map(&render),
        trace,
    };
    (e, v.status)
}

/// Reduction traces of an identity, one side at a time when the sides carry
/// `sqrt2` powers of different parity.
fn traces<C: Coefficient>(parts: &[Element<C>], rs: &RewriteSystem<C>) -> Vec<String> {
    parts
        .iter()
        .flat_map(|x| rs.reduce_traced(x).trace)
        .map(|t| t.to_string())
        .collect()
}

fn split(inst: &SuiteInstance) -> Vec<Element<QScalar>> {
    match inst.lhs.sub(&inst.rhs) {
        Ok(d) => vec![d.body],
        Err(_) => vec![inst.lhs.body.clone(), inst.rhs.body.clone()],
    }
}

fn eval_element(x: &Element<QScalar>, q0: &Rational) -> Result<Element<Rational>, ScalarError> {
    x.map_coeffs(|c| c.eval(q0))
}

fn sampled_verdict(
    inst: &SuiteInstance,
    rs: &RewriteSystem<Rational>,
    q0: &Rational,
) -> Result<(Verdict<Rational>, Vec<Element<Rational>>), ScalarError> {
    let parts = split(inst)
        .iter()
        .map(|x| eval_element(x, q0))
        .collect::<Result<Vec<_>, _>>()?;
    let v = parts
        .iter()
        .map(|x| verify_difference(x, rs))
        .reduce(worse_verdict)
        .expect("at least one part");
    Ok((v, parts))
}

pub struct Runner {
    pub sig: AlgebraSignature,
    pub opts: VerifyOpts,
    pool: rayon::ThreadPool,
}

impl Runner {
    pub fn new(sig: AlgebraSignature, opts: VerifyOpts) -> Result<Self, String> {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(w) = opts.workers {
            b = b.num_threads(w as usize);
        }
        let pool = b.build().map_err(|e| e.to_string())?;
        Ok(Runner { sig, opts, pool })
    }

    fn q_mode(&self) -> QMode {
        match &self.opts.q0 {
            None => QMode::Symbolic,
            Some(q0) => QMode::Sampled { q0: q0.to_string() },
        }
    }

    pub fn rewrite_suite(&self, suite: Suite) -> Result<SuiteSection, String> {
        let instances = suite_instances(&self.sig, suite).map_err(|e| e.to_string())?;
        self.instance_section(suite.name(), &instances)
    }

    fn instance_section(
        &self,
        suite: &str,
        instances: &[SuiteInstance],
    ) -> Result<SuiteSection, String> {
        let sig = &self.sig;
        let bound = self
            .opts
            .degree_bound
            .unwrap_or_else(|| suite_degree_bound(instances));
        let presentation = chevalley_presentation(sig, true);
        let mut rules = build_rules(&presentation, bound).map_err(|e| e.to_string())?;
        let mut section = SuiteSection::new(suite);
        section.presentation_fingerprint = Some(fingerprint(&presentation.canonical_text()));
        section.degree_bound = Some(bound);
        let trace = self.opts.trace;
        let entries: Vec<(InstanceEntry, Status)> = match &self.opts.q0 {
            None => {
                let stats = rules.complete(self.opts.max_rules);
                section.completion = Some(completion_info(rules.len(), rules.closed_to(), &stats));
                let rs = &rules;
                self.pool.install(|| {
                    instances
                        .par_iter()
                        .map(|i| {
                            let v = verify_scaled(&i.lhs, &i.rhs, rs);
                            let t = trace.then(|| traces(&split(i), rs));
                            entry(
                                &i.family,
                                &i.name,
                                &i.statement,
                                &v,
                                |x| x.render_factored(),
                                t,
                            )
                        })
                        .collect()
                })
            }
            Some(q0) => {
                let mut rs = rules
                    .map_coeffs(|c| c.eval(q0))
                    .map_err(|e| e.to_string())?;
                let stats = rs.complete(self.opts.max_rules);
                section.completion = Some(completion_info(rs.len(), rs.closed_to(), &stats));
                let rs = &rs;
                self.pool.install(|| {
                    instances
                        .par_iter()
                        .map(|i| {
                            let (v, parts) = sampled_verdict(i, rs, q0)
                                .map_err(|e| format!("{}: {e}", i.name))?;
                            let t = trace.then(|| traces(&parts, rs));
                            Ok(entry(
                                &i.family,
                                &i.name,
                                &i.statement,
                                &v,
                                |x| x.to_string(),
                                t,
                            ))
                        })
                        .collect::<Result<_, String>>()
                })?
            }
        };
        for (e, s) in entries {
            section.push(e, s);
        }
        Ok(section)
    }

    pub fn classical_suite(&self) -> SuiteSection {
        let sig = self.sig;
        let mut section = SuiteSection::new("classical");
        let text = [
            chevalley_presentation(&sig, false).canonical_text(),
            green_presentation(&sig, false).canonical_text(),
            preoscillator_presentation(&sig).canonical_text(),
        ]
        .concat();
        section.presentation_fingerprint = Some(fingerprint(&text));
        let reports: Vec<_> = self.pool.install(|| {
            ClassicalFamily::ALL
                .par_iter()
                .map(|f| (*f, verify_classical(&sig, *f)))
                .collect()
        });
        for (f, rep) in reports {
            let name = format!("classical.{}", f.name());
            let (status, statement, witness, residual) = match rep {
                Ok(rep) => {
                    let status = if rep.passed() {
                        Status::Proved
                    } else {
                        Status::Refuted
                    };
                    let w = rep
                        .failures
                        .first()
                        .map(|w| format!("{}: {}", w.instance, w.relation));
                    (
                        status,
                        format!("{} exact matrix identities", rep.instances),
                        w,
                        None,
                    )
                }
                Err(e) => (
                    Status::Inconclusive,
                    "matrix realization unavailable".to_string(),
                    None,
                    Some(e.to_string()),
                ),
            };
            let e = InstanceEntry {
                family: "classical".into(),
                name,
                statement,
                status: status.name().into(),
                reduction_steps: 0,
                bound_used: None,
                witness,
                residual,
                trace: None,
            };
            section.push(e, status);
        }
        section
    }

    /// Nonzero rationals with small numerators and denominators, distinct
    /// as triples, from the seeded generator.
    fn random_samples(&self) -> Vec<Sample> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.opts.seed);
        let rat = |rng: &mut ChaCha8Rng| {
            let mut n = 0;
            while n == 0 {
                n = rng.random_range(-12i64..=12);
            }
            Rational::new(n.into(), rng.random_range(1i64..=9).into())
        };
        let mut out: Vec<Sample> = Vec::new();
        while out.len() < self.opts.samples as usize {
            let s = (rat(&mut rng), rat(&mut rng), rat(&mut rng));
            if !out.contains(&s) {
                out.push(s);
            }
        }
        out
    }

    pub fn prop6_suite(&self) -> SuiteSection {
        let mut section = SuiteSection::new("prop6");
        let random = self.random_samples();
        let grid = exact_grid();
        section.samples = Some(SampleInfo {
            seed: self.opts.seed,
            per_triple: random.len() + grid.len(),
            points: random.iter().map(|(z, r, s)| [z.to_string(), r.to_string(), s.to_string()]).collect(),
            note: format!(
                "each word coefficient has degree <= 2 in z and <= 1 in r, s; the {}-point grid z in {{1,2,3}}, r, s in {{1,2}} decides the identity exactly, the {} seeded points are a spot check",
                grid.len(),
                random.len()
            ),
        });
        let samples: Vec<Sample> = grid.into_iter().chain(random).collect();
        let statement =
            "[[A, [B,C]_(zs)]]_(zr) = [[[[A,B]]_z, C]]_(zsr) + (-1)^(|A||B|) z [[B, [[A,C]]_r]]_s";
        let results: Vec<_> = self.pool.install(|| {
            parity_triples()
                .par_iter()
                .map(|p| (*p, verify_bracket_identity(*p, &samples)))
                .collect()
        });
        for (p, res) in results {
            let name = format!(
                "prop6[{},{},{}]",
                parity_name(p.0),
                parity_name(p.1),
                parity_name(p.2)
            );
            match res {
                Ok(rep) => {
                    let witness = rep
                        .counterexample
                        .map(|((z, r, s), d)| format!("at (z, r, s) = ({z}, {r}, {s}): {d}"));
                    let e = InstanceEntry {
                        family: "prop6".into(),
                        name,
                        statement: statement.into(),
                        status: rep.status.name().into(),
                        reduction_steps: 0,
                        bound_used: None,
                        witness,
                        residual: None,
                        trace: None,
                    };
                    section.push(e, rep.status);
                }
                Err(e) => section.rejected.push(Rejected {
                    name,
                    reason: e.to_string(),
                }),
            }
        }
        section
    }

    fn suite(&self, s: SuiteArg) -> Result<SuiteSection, String> {
        match s {
            SuiteArg::Classical => Ok(self.classical_suite()),
            SuiteArg::Prop5 => self.rewrite_suite(Suite::Prop5),
            SuiteArg::Theorem => self.rewrite_suite(Suite::Theorem),
            SuiteArg::Roundtrip => self.rewrite_suite(Suite::Roundtrip),
            SuiteArg::Prop6 => Ok(self.prop6_suite()),
            SuiteArg::All => unreachable!("expanded by the caller"),
        }
    }

    pub fn verify(&self, suite: SuiteArg) -> Result<Report, String> {
        let start = Instant::now();
        let list = match suite {
            SuiteArg::All => vec![
                SuiteArg::Classical,
                SuiteArg::Prop5,
                SuiteArg::Theorem,
                SuiteArg::Roundtrip,
                SuiteArg::Prop6,
            ],
            s => vec![s],
        };
        let mut sections = Vec::new();
        let mut timings = Vec::new();
        for s in list {
            let t = Instant::now();
            let sec = self.suite(s)?;
            timings.push(SuiteTiming {
                suite: sec.suite.clone(),
                ms: t.elapsed().as_millis() as u64,
            });
            sections.push(sec);
        }
        let name = format!("verify {}", suite_name(suite));
        Ok(self.assemble(name, sections, timings, start))
    }

    /// Verifies one identity given in the expression language, with Green
    /// letters written in Chevalley generators.
    pub fn check(
        &self,
        statement: &str,
        lhs: ScaledElement,
        rhs: ScaledElement,
    ) -> Result<Report, String> {
        let start = Instant::now();
        let inst = SuiteInstance {
            family: "check".into(),
            name: "check".into(),
            statement: statement.into(),
            lhs,
            rhs,
        };
        let sec = self.instance_section("check", &[inst])?;
        let timings = vec![SuiteTiming {
            suite: sec.suite.clone(),
            ms: start.elapsed().as_millis() as u64,
        }];
        Ok(self.assemble("check".into(), vec![sec], timings, start))
    }

    pub fn converse(&self) -> Result<Report, String> {
        if self.opts.q0.is_some() {
            return Err("--q0 is not supported by converse".into());
        }
        let start = Instant::now();
        let rep = verify_converse(&self.sig, self.opts.degree_bound, self.opts.max_rules)
            .map_err(|e| e.to_string())?;
        let mut section = SuiteSection::new("converse");
        section.presentation_fingerprint = Some(fingerprint(
            &green_presentation(&self.sig, true).canonical_text(),
        ));
        section.degree_bound = Some(rep.degree_bound);
        section.completion = Some(completion_info(rep.rules, rep.closed_to, &rep.completion));
        for r in &rep.results {
            let (e, s) = entry(
                &r.family,
                &r.name,
                &r.statement,
                &r.verdict,
                |x| x.render_factored(),
                None,
            );
            section.push(e, s);
        }
        let timings = vec![SuiteTiming {
            suite: "converse".into(),
            ms: start.elapsed().as_millis() as u64,
        }];
        Ok(self.assemble("converse".into(), vec![section], timings, start))
    }

    fn assemble(
        &self,
        command: String,
        suites: Vec<SuiteSection>,
        timings: Vec<SuiteTiming>,
        start: Instant,
    ) -> Report {
        let mut counts = Counts::default();
        let mut status = Status::Proved;
        for s in &suites {
            counts.merge(s.counts);
            status = combine(status, s.counts.status());
        }
        Report {
            tool: "osp".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command,
            signature: SignatureInfo {
                m: self.sig.m(),
                n: self.sig.n(),
            },
            q_mode: self.q_mode(),
            status: status.name().into(),
            exit_code: exit_code(status),
            counts,
            suites,
            timing: Timing {
                total_ms: start.elapsed().as_millis() as u64,
                suites: timings,
            },
        }
    }
}

fn parity_name(p: Parity) -> &'static str {
    if p.is_odd() {
        "odd"
    } else {
        "even"
    }
}

pub fn suite_name(s: SuiteArg) -> &'static str {
    match s {
        SuiteArg::Classical => "classical",
        SuiteArg::Prop5 => "prop5",
        SuiteArg::Theorem => "theorem",
        SuiteArg::Roundtrip => "roundtrip",
        SuiteArg::Prop6 => "prop6",
        SuiteArg::All => "all",
    }
}

/// `sqrt2^e * x` as text, with `e` reduced to 0 or 1.
pub fn render_scaled(x: &ScaledElement) -> String {
    let x = x.normalized();
    let body = x.body.render_factored();
    match x.sqrt2_exp {
        0 => body,
        _ => format!("sqrt2*({body})"),
    }
}
