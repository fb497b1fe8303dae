//! Single-constant perturbations of an expression, for checking that the
//! verifier notices a wrong coefficient.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::dsl::{Expr, ScalarLit, Weight};

/// The expression with exactly one constant raised by one.
#[derive(Clone, Debug, PartialEq)]
pub struct Perturbation {
    pub description: String,
    pub expr: Expr,
}

/// Every way of adding 1 to one constant: an integer literal `n -> n+1`, a
/// power `q^k -> q^(k+1)`, or a bracket weight (`1 -> 2`, `q^k -> q^(k+1)`).
/// Sites are listed in walk order: a bracket's weight follows its operands.
pub fn constant_perturbations(e: &Expr) -> Vec<Perturbation> {
    let mut out = Vec::new();
    walk(e, &mut |x| x.clone(), &mut out);
    out
}

fn walk(e: &Expr, rebuild: &mut dyn FnMut(Expr) -> Expr, out: &mut Vec<Perturbation>) {
    match e {
        Expr::Gen(_) => {}
        Expr::Scalar(ScalarLit::Int(n)) => out.push(Perturbation {
            description: format!("{n} -> {}", n + BigInt::from(1)),
            expr: rebuild(Expr::Scalar(ScalarLit::Int(n + BigInt::from(1)))),
        }),
        Expr::Scalar(ScalarLit::QPow(k)) => out.push(Perturbation {
            description: format!("q^{k} -> q^{}", k + 1),
            expr: rebuild(if *k == -1 {
                Expr::int(1)
            } else {
                Expr::q_pow(k + 1)
            }),
        }),
        Expr::Neg(x) => walk(x, &mut |y| rebuild(Expr::Neg(Box::new(y))), out),
        Expr::Add(l, r) | Expr::Sub(l, r) | Expr::Mul(l, r) | Expr::Div(l, r) => {
            let join = |a: Expr, b: Expr| match e {
                Expr::Add(..) => a.plus(b),
                Expr::Sub(..) => a.minus(b),
                Expr::Mul(..) => a.times(b),
                _ => a.over(b),
            };
            walk(l, &mut |y| rebuild(join(y, (**r).clone())), out);
            walk(r, &mut |y| rebuild(join((**l).clone(), y)), out);
        }
        Expr::Bracket {
            kind,
            left,
            right,
            weight,
        } => {
            let k = *kind;
            walk(
                left,
                &mut |y| rebuild(Expr::bracket(k, y, (**right).clone(), weight.clone())),
                out,
            );
            walk(
                right,
                &mut |y| rebuild(Expr::bracket(k, (**left).clone(), y, weight.clone())),
                out,
            );
            let (description, bumped) = match weight {
                Weight::One => (
                    "weight 1 -> 2".into(),
                    Weight::Scalar(Box::new(Expr::int(2))),
                ),
                Weight::QPow(j) => (format!("weight q^{j} -> q^{}", j + 1), Weight::q_pow(j + 1)),
                Weight::Scalar(w) => {
                    walk(
                        w,
                        &mut |y| {
                            rebuild(Expr::bracket(
                                k,
                                (**left).clone(),
                                (**right).clone(),
                                Weight::Scalar(Box::new(y)),
                            ))
                        },
                        out,
                    );
                    return;
                }
            };
            out.push(Perturbation {
                description,
                expr: rebuild(Expr::bracket(
                    k,
                    (**left).clone(),
                    (**right).clone(),
                    bumped,
                )),
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::{parse, pretty};

    #[test]
    fn sites_in_order() {
        let e = parse("[[a-1, a+1]] + 2*(L1 - Lb1)/(q - qb)").unwrap();
        let p: Vec<String> = constant_perturbations(&e)
            .iter()
            .map(|p| pretty(&p.expr))
            .collect();
        assert_eq!(
            p,
            [
                "[[a-1, a+1]]_(2) + 2*(L1 - Lb1)/(q - qb)",
                "[[a-1, a+1]] + 3*(L1 - Lb1)/(q - qb)",
                "[[a-1, a+1]] + 2*(L1 - Lb1)/(q^2 - qb)",
                "[[a-1, a+1]] + 2*(L1 - Lb1)/(q - 1)",
            ]
        );
    }
}
