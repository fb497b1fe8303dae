use alloc::format;
use alloc::vec::Vec;

use super::cartan::cartan_matrix;
use super::relation::{Presentation, PresentationKind, Relation};
use super::signature::AlgebraSignature;
use crate::dsl::Expr;
use crate::superalg::LetterKind;

pub(crate) fn gen(kind: LetterKind, i: u16) -> Expr {
    Expr::gen(kind, i)
}

/// `q^k * x`, omitting `q^0`.
pub(crate) fn q_times(k: i64, x: Expr) -> Expr {
    if k == 0 {
        x
    } else {
        Expr::q_pow(k).times(x)
    }
}

/// `c*(x - xbar)/(q - qb)`.
pub(crate) fn q_difference(c: i64, x: Expr, xbar: Expr) -> Expr {
    x.minus(xbar)
        .scaled_by(c)
        .over(Expr::q_pow(1).minus(Expr::q_pow(-1)))
}

pub fn chevalley_presentation(sig: &AlgebraSignature, deformed: bool) -> Presentation {
    let mut relations = if deformed {
        deformed_cartan_kac(sig)
    } else {
        classical_cartan_kac(sig)
    };
    for kind in [LetterKind::E, LetterKind::F] {
        relations.extend(serre(sig, kind, deformed));
    }
    let kinds: &[LetterKind] = if deformed {
        &[
            LetterKind::F,
            LetterKind::KBar,
            LetterKind::K,
            LetterKind::E,
        ]
    } else {
        &[LetterKind::H, LetterKind::E, LetterKind::F]
    };
    let generators = kinds
        .iter()
        .flat_map(|&k| (1..=sig.rank()).map(move |i| sig.letter(k, i)))
        .collect();
    let p = Presentation {
        signature: *sig,
        kind: PresentationKind::Chevalley,
        deformed,
        generators,
        relations,
    };
    p.assert_unique_names();
    p
}

fn classical_cartan_kac(sig: &AlgebraSignature) -> Vec<Relation> {
    use LetterKind::{E, F, H};
    let a = cartan_matrix(sig);
    let n = sig.rank();
    let mut out = Vec::new();
    let rel = |name, l, r| Relation::new(sig, name, l, r);
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(rel(
                format!("ck.hh[{i},{j}]"),
                Expr::comm(gen(H, i), gen(H, j)),
                Expr::int(0),
            ));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let aij = a.get(i, j);
            out.push(rel(
                format!("ck.he[{i},{j}]"),
                Expr::comm(gen(H, i), gen(E, j)),
                gen(E, j).scaled_by(aij),
            ));
            out.push(rel(
                format!("ck.hf[{i},{j}]"),
                Expr::comm(gen(H, i), gen(F, j)),
                gen(F, j).scaled_by(-aij),
            ));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let rhs = if i == j { gen(H, i) } else { Expr::int(0) };
            out.push(rel(
                format!("ck.ef[{i},{j}]"),
                Expr::sup(gen(E, i), gen(F, j)),
                rhs,
            ));
        }
    }
    out
}

fn deformed_cartan_kac(sig: &AlgebraSignature) -> Vec<Relation> {
    use LetterKind::{KBar, E, F, K};
    let a = cartan_matrix(sig);
    let n = sig.rank();
    let mut out = Vec::new();
    let rel = |name, l, r| Relation::new(sig, name, l, r);
    for i in 1..=n {
        out.push(rel(
            format!("ck.k-inverse[{i}]"),
            gen(K, i).times(gen(KBar, i)),
            Expr::int(1),
        ));
        out.push(rel(
            format!("ck.kb-inverse[{i}]"),
            gen(KBar, i).times(gen(K, i)),
            Expr::int(1),
        ));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(rel(
                format!("ck.kk[{i},{j}]"),
                gen(K, i).times(gen(K, j)),
                gen(K, j).times(gen(K, i)),
            ));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let aij = a.get(i, j);
            out.push(rel(
                format!("ck.ke[{i},{j}]"),
                gen(K, i).times(gen(E, j)),
                q_times(aij, gen(E, j).times(gen(K, i))),
            ));
            out.push(rel(
                format!("ck.kf[{i},{j}]"),
                gen(K, i).times(gen(F, j)),
                q_times(-aij, gen(F, j).times(gen(K, i))),
            ));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let rhs = if i == j {
                q_difference(1, gen(K, i), gen(KBar, i))
            } else {
                Expr::int(0)
            };
            out.push(rel(
                format!("ck.ef[{i},{j}]"),
                Expr::sup(gen(E, i), gen(F, j)),
                rhs,
            ));
        }
    }
    // Consequences of the above, stated for the kbar letters.
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(
                rel(
                    format!("ck.kbkb[{i},{j}]"),
                    gen(KBar, i).times(gen(KBar, j)),
                    gen(KBar, j).times(gen(KBar, i)),
                )
                .derived(),
            );
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(
                    rel(
                        format!("ck.kkb[{i},{j}]"),
                        gen(K, i).times(gen(KBar, j)),
                        gen(KBar, j).times(gen(K, i)),
                    )
                    .derived(),
                );
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let aij = a.get(i, j);
            out.push(
                rel(
                    format!("ck.kbe[{i},{j}]"),
                    gen(KBar, i).times(gen(E, j)),
                    q_times(-aij, gen(E, j).times(gen(KBar, i))),
                )
                .derived(),
            );
            out.push(
                rel(
                    format!("ck.kbf[{i},{j}]"),
                    gen(KBar, i).times(gen(F, j)),
                    q_times(aij, gen(F, j).times(gen(KBar, i))),
                )
                .derived(),
            );
        }
    }
    out
}

/// Serre relations for the `e` (or `f`) letters.
fn serre(sig: &AlgebraSignature, kind: LetterKind, deformed: bool) -> Vec<Relation> {
    let (m, n) = (sig.m(), sig.rank());
    let x = |i| gen(kind, i);
    let p = kind.prefix();
    let mut out = Vec::new();
    let zero = || Expr::int(0);
    let rel = |name, l| Relation::new(sig, name, l, zero());
    for i in 1..=n {
        for j in i..=n {
            let admissible = if deformed {
                // At i = j only the odd generator gives a nonzero relation.
                j - i >= 2 || (i == j && i == m)
            } else {
                j - i >= 2
            };
            if admissible {
                let l = if deformed {
                    Expr::sup(x(i), x(j))
                } else {
                    Expr::comm(x(i), x(j))
                };
                out.push(rel(format!("serre.{p}1[{i},{j}]"), l));
            }
        }
    }
    for i in 1..n {
        if deformed && i == m {
            continue;
        }
        for j in [i - 1, i + 1] {
            if !sig.contains(j) {
                continue;
            }
            let l = if deformed {
                Expr::comm_w(x(i), Expr::comm_w(x(i), x(j), -1), 1)
            } else {
                Expr::sup(x(i), Expr::comm(x(i), x(j)))
            };
            out.push(rel(format!("serre.{p}2[{i},{j}]"), l));
        }
    }
    if m >= 2 {
        let l = if deformed {
            Expr::anti(
                Expr::comm_w(x(m), x(m - 1), 1),
                Expr::comm_w(x(m), x(m + 1), -1),
            )
        } else {
            Expr::anti(Expr::comm(x(m - 1), x(m)), Expr::comm(x(m), x(m + 1)))
        };
        out.push(rel(format!("serre.{p}3"), l));
    }
    let l = if deformed {
        Expr::comm_w(x(n), Expr::comm(x(n), Expr::comm_w(x(n), x(n - 1), -1)), 1)
    } else {
        Expr::comm(x(n), Expr::comm(x(n), Expr::comm(x(n), x(n - 1))))
    };
    out.push(rel(format!("serre.{p}4"), l));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::pretty;

    #[test]
    fn additional_serre_relation_at_2_2() {
        let p = chevalley_presentation(&AlgebraSignature::new(2, 2).unwrap(), true);
        let r = p.relation("serre.e3").unwrap();
        assert_eq!(pretty(&r.lhs), "{[e2, e1]_q, [e2, e3]_qb}");
        assert!(p.relation("serre.f3").is_some());
        let p = chevalley_presentation(&AlgebraSignature::new(1, 2).unwrap(), true);
        assert!(p.relation("serre.e3").is_none());
    }

    #[test]
    fn inverse_relations_for_every_index() {
        let p = chevalley_presentation(&AlgebraSignature::new(2, 1).unwrap(), true);
        for i in 1..=3 {
            assert_eq!(
                p.relation(&format!("ck.k-inverse[{i}]")).unwrap().text(),
                format!("k{i}*kb{i} = 1")
            );
            assert!(p.relation(&format!("ck.kb-inverse[{i}]")).is_some());
        }
    }

    #[test]
    fn classical_quartic() {
        let p = chevalley_presentation(&AlgebraSignature::new(1, 1).unwrap(), false);
        assert_eq!(
            p.relation("serre.e4").unwrap().text(),
            "[e2, [e2, [e2, e1]]] = 0"
        );
    }
}
