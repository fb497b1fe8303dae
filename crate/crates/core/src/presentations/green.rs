use alloc::format;
use alloc::vec::Vec;

use super::chevalley::{gen, q_difference, q_times};
use super::relation::{Presentation, PresentationKind, Relation};
use super::signature::{AlgebraSignature, Sign};
use crate::dsl::Expr;
use crate::superalg::LetterKind;

fn a(i: u16, s: Sign) -> Expr {
    match s {
        Sign::Plus => gen(LetterKind::APlus, i),
        Sign::Minus => gen(LetterKind::AMinus, i),
    }
}

/// `s^<i>` for a sign `s`.
fn sign_power(sig: &AlgebraSignature, s: Sign, i: u16) -> i64 {
    if sig.grading(i).is_odd() {
        s.value()
    } else {
        1
    }
}

fn a_generators(sig: &AlgebraSignature) -> Vec<crate::superalg::Letter> {
    let mut g = Vec::new();
    for i in 1..=sig.rank() {
        g.push(sig.a(i, Sign::Minus));
        g.push(sig.a(i, Sign::Plus));
    }
    g
}

pub fn green_presentation(sig: &AlgebraSignature, deformed: bool) -> Presentation {
    let (relations, generators) = if deformed {
        let mut g = a_generators(sig);
        for i in 1..=sig.rank() {
            g.push(sig.l(i));
            g.push(sig.lbar(i));
        }
        (deformed_green(sig), g)
    } else {
        (classical_green(sig), a_generators(sig))
    };
    let p = Presentation {
        signature: *sig,
        kind: PresentationKind::Green,
        deformed,
        generators,
        relations,
    };
    p.assert_unique_names();
    p
}

fn classical_green(sig: &AlgebraSignature) -> Vec<Relation> {
    let n = sig.rank();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i.abs_diff(j) > 1 {
                continue;
            }
            for k in 1..=n {
                for eta in Sign::BOTH {
                    let lhs = Expr::sup(Expr::sup(a(i, eta), a(j, eta.flip())), a(k, eta));
                    let c = if j == k {
                        2 * sign_power(sig, eta, k)
                    } else {
                        0
                    };
                    let rhs = Expr::linear_combination(alloc::vec![(c, a(i, eta))]);
                    out.push(Relation::new(
                        sig,
                        format!("green.triple[{i},{j},{k},{eta}]"),
                        lhs,
                        rhs,
                    ));
                }
            }
        }
    }
    for eta in Sign::BOTH {
        let lhs = Expr::comm(Expr::comm(a(n - 1, eta), a(n, eta)), a(n, eta));
        out.push(Relation::new(
            sig,
            format!("green.cubic[{eta}]"),
            lhs,
            Expr::int(0),
        ));
    }
    out
}

/// The full table of triple supercommutators of the `a_i^±`, all indices
/// and signs.
pub fn preoscillator_presentation(sig: &AlgebraSignature) -> Presentation {
    let n = sig.rank();
    let mut relations = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for xi in Sign::BOTH {
                    for eta in Sign::BOTH {
                        for eps in Sign::BOTH {
                            let lhs = Expr::sup(Expr::sup(a(i, xi), a(j, eta)), a(k, eps));
                            let c = 2 * sign_power(sig, eps, k);
                            let t1 = if j == k && eps == eta.flip() { c } else { 0 };
                            let jk = sig.grading(j).sign_with(sig.grading(k));
                            let t2 = if i == k && eps == xi.flip() {
                                -c * jk
                            } else {
                                0
                            };
                            let rhs = Expr::linear_combination(alloc::vec![
                                (t1, a(i, xi)),
                                (t2, a(j, eta))
                            ]);
                            let name = format!("preosc[{i},{j},{k},{xi},{eta},{eps}]");
                            relations.push(Relation::new(sig, name, lhs, rhs));
                        }
                    }
                }
            }
        }
    }
    let p = Presentation {
        signature: *sig,
        kind: PresentationKind::Preoscillator,
        deformed: false,
        generators: a_generators(sig),
        relations,
    };
    p.assert_unique_names();
    p
}

fn deformed_green(sig: &AlgebraSignature) -> Vec<Relation> {
    use LetterKind::{LBar, L};
    let n = sig.rank();
    let mut out = Vec::new();
    let rel = |name, l, r| Relation::new(sig, name, l, r);
    for i in 1..=n {
        out.push(rel(
            format!("green.L-inverse[{i}]"),
            gen(L, i).times(gen(LBar, i)),
            Expr::int(1),
        ));
        out.push(rel(
            format!("green.Lb-inverse[{i}]"),
            gen(LBar, i).times(gen(L, i)),
            Expr::int(1),
        ));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(rel(
                format!("green.LL[{i},{j}]"),
                gen(L, i).times(gen(L, j)),
                gen(L, j).times(gen(L, i)),
            ));
        }
    }
    let exchange = |i: u16, j: u16, s: Sign| {
        if i == j {
            s.value() * sig.grading_sign(i)
        } else {
            0
        }
    };
    for i in 1..=n {
        for j in 1..=n {
            for s in Sign::BOTH {
                out.push(rel(
                    format!("green.La[{i},{j},{s}]"),
                    gen(L, i).times(a(j, s)),
                    q_times(exchange(i, j, s), a(j, s).times(gen(L, i))),
                ));
            }
        }
    }
    for i in 1..=n {
        let rhs = q_difference(-2, gen(L, i), gen(LBar, i));
        out.push(rel(
            format!("green.a-bracket[{i}]"),
            Expr::sup(a(i, Sign::Minus), a(i, Sign::Plus)),
            rhs,
        ));
    }
    for i in 1..=n {
        for xi in Sign::BOTH {
            let Some(i2) = i
                .checked_add_signed(xi.value() as i16)
                .filter(|&t| sig.contains(t))
            else {
                continue;
            };
            for j in 1..=n {
                for eta in Sign::BOTH {
                    let w = if i == j {
                        -xi.value() * sig.grading_sign(i)
                    } else {
                        0
                    };
                    let inner = Expr::sup(a(i, eta), a(i2, eta.flip()));
                    let lhs = Expr::sup_w(inner, a(j, eta), w);
                    let rhs = if j == i2 {
                        let l = if xi.times(eta) == Sign::Plus {
                            gen(LBar, j)
                        } else {
                            gen(L, j)
                        };
                        l.times(a(i, eta)).scaled_by(2 * sign_power(sig, eta, j))
                    } else {
                        Expr::int(0)
                    };
                    out.push(rel(format!("green.triple[{i},{xi},{j},{eta}]"), lhs, rhs));
                }
            }
        }
    }
    for xi in Sign::BOTH {
        let lhs = Expr::comm_w(Expr::comm(a(n - 1, xi), a(n, xi)), a(n, xi), -1);
        out.push(rel(format!("green.cubic[{xi}]"), lhs, Expr::int(0)));
    }
    // Consequences for the inverse letters.
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(
                rel(
                    format!("green.LbLb[{i},{j}]"),
                    gen(LBar, i).times(gen(LBar, j)),
                    gen(LBar, j).times(gen(LBar, i)),
                )
                .derived(),
            );
        }
        for j in 1..=n {
            if i != j {
                out.push(
                    rel(
                        format!("green.LLb[{i},{j}]"),
                        gen(L, i).times(gen(LBar, j)),
                        gen(LBar, j).times(gen(L, i)),
                    )
                    .derived(),
                );
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for s in Sign::BOTH {
                out.push(
                    rel(
                        format!("green.Lba[{i},{j},{s}]"),
                        gen(LBar, i).times(a(j, s)),
                        q_times(-exchange(i, j, s), a(j, s).times(gen(LBar, i))),
                    )
                    .derived(),
                );
            }
        }
    }
    out
}
