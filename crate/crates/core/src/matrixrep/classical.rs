use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::matrix::ExactMatrix;
use super::realization::{MatrixError, Realization};
use crate::dsl::{pretty, Expr};
use crate::presentations::{
    chevalley_presentation, green_from_chevalley, green_presentation, preoscillator_presentation,
    AlgebraSignature, Sign,
};
use crate::scalars::Sqrt2Scalar;
use crate::superalg::LetterKind;

/// Families of classical relations checked in the matrix realization.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ClassicalFamily {
    /// Triple supercommutators of the Green generators, all indices and signs.
    Triple,
    /// Supercommutators of two pairwise brackets.
    DoubleBracket,
    /// The preoscillator presentation as built by `presentations`.
    Preoscillator,
    /// `[{B_i,B_j},B_k]` for the odd generators.
    ParaBose,
    /// `[[F_i,F_j],F_k]` for the even generators.
    ParaFermi,
    /// The classical Green presentation.
    Green,
    /// Cartan-Kac relations of `h, e, f` built from the Green matrices.
    CartanKac,
    /// Serre relations of `e, f` built from the Green matrices.
    Serre,
    /// `a_i^±` against their nested-bracket expressions in `e` or `f`.
    Conversion,
}

impl ClassicalFamily {
    pub const ALL: [ClassicalFamily; 9] = [
        ClassicalFamily::Triple,
        ClassicalFamily::DoubleBracket,
        ClassicalFamily::Preoscillator,
        ClassicalFamily::ParaBose,
        ClassicalFamily::ParaFermi,
        ClassicalFamily::Green,
        ClassicalFamily::CartanKac,
        ClassicalFamily::Serre,
        ClassicalFamily::Conversion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassicalFamily::Triple => "triple",
            ClassicalFamily::DoubleBracket => "double-bracket",
            ClassicalFamily::Preoscillator => "preoscillator",
            ClassicalFamily::ParaBose => "para-bose",
            ClassicalFamily::ParaFermi => "para-fermi",
            ClassicalFamily::Green => "green",
            ClassicalFamily::CartanKac => "cartan-kac",
            ClassicalFamily::Serre => "serre",
            ClassicalFamily::Conversion => "conversion",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One relation instance: `lhs = sqrt2^rhs_sqrt2_exp * rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalInstance {
    pub name: String,
    pub lhs: Expr,
    pub rhs: Expr,
    pub rhs_sqrt2_exp: i32,
}

impl ClassicalInstance {
    fn plain(name: String, lhs: Expr, rhs: Expr) -> Self {
        ClassicalInstance {
            name,
            lhs,
            rhs,
            rhs_sqrt2_exp: 0,
        }
    }
}

/// A failing instance with both sides evaluated.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalWitness {
    pub instance: String,
    pub relation: String,
    pub lhs: ExactMatrix,
    pub rhs: ExactMatrix,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalReport {
    pub family: ClassicalFamily,
    pub signature: AlgebraSignature,
    pub instances: usize,
    pub failures: Vec<ClassicalWitness>,
}

impl ClassicalReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn a(i: u16, s: Sign) -> Expr {
    match s {
        Sign::Plus => Expr::gen(LetterKind::APlus, i),
        Sign::Minus => Expr::gen(LetterKind::AMinus, i),
    }
}

fn delta(b: bool) -> i64 {
    i64::from(b)
}

/// `s^<k>`.
fn sign_power(sig: &AlgebraSignature, s: Sign, k: u16) -> i64 {
    if sig.grading(k).is_odd() {
        s.value()
    } else {
        1
    }
}

/// `(-1)^(<x><y>)`.
fn grade_sign(sig: &AlgebraSignature, x: u16, y: u16) -> i64 {
    sig.grading(x).sign_with(sig.grading(y))
}

fn index_sign_tuples(
    range: impl Iterator<Item = u16> + Clone,
) -> Vec<(u16, u16, u16, Sign, Sign, Sign)> {
    let mut out = Vec::new();
    for i in range.clone() {
        for j in range.clone() {
            for k in range.clone() {
                for xi in Sign::BOTH {
                    for eta in Sign::BOTH {
                        for eps in Sign::BOTH {
                            out.push((i, j, k, xi, eta, eps));
                        }
                    }
                }
            }
        }
    }
    out
}

fn triple(sig: &AlgebraSignature) -> Vec<ClassicalInstance> {
    index_sign_tuples(1..=sig.rank())
        .into_iter()
        .map(|(i, j, k, xi, eta, eps)| {
            let c = 2 * sign_power(sig, eps, k);
            let lhs = Expr::sup(Expr::sup(a(i, xi), a(j, eta)), a(k, eps));
            let rhs = Expr::linear_combination(alloc::vec![
                (c * delta(j == k && eps == eta.flip()), a(i, xi)),
                (
                    -c * grade_sign(sig, j, k) * delta(i == k && eps == xi.flip()),
                    a(j, eta)
                ),
            ]);
            ClassicalInstance::plain(format!("triple[{i},{j},{k},{xi},{eta},{eps}]"), lhs, rhs)
        })
        .collect()
}

fn double_bracket(sig: &AlgebraSignature) -> Vec<ClassicalInstance> {
    let n = sig.rank();
    let mut out = Vec::new();
    for (i, j, k, xi, eta, eps) in index_sign_tuples(1..=n) {
        for l in 1..=n {
            for phi in Sign::BOTH {
                let lhs = Expr::sup(
                    Expr::sup(a(i, xi), a(j, eta)),
                    Expr::sup(a(k, eps), a(l, phi)),
                );
                let ce = 2 * sign_power(sig, eps, k);
                let cp = 2 * sign_power(sig, phi, l);
                let jk = grade_sign(sig, j, k);
                let ij_ik = grade_sign(sig, i, j) * grade_sign(sig, i, k);
                let rhs = Expr::linear_combination(alloc::vec![
                    (
                        ce * delta(j == k && eps == eta.flip()),
                        Expr::sup(a(i, xi), a(l, phi))
                    ),
                    (
                        -ce * jk * delta(i == k && eps == xi.flip()),
                        Expr::sup(a(j, eta), a(l, phi))
                    ),
                    (
                        -cp * jk * delta(j == l && phi == eta.flip()),
                        Expr::sup(a(i, xi), a(k, eps))
                    ),
                    (
                        cp * ij_ik * delta(i == l && phi == xi.flip()),
                        Expr::sup(a(j, eta), a(k, eps))
                    ),
                ]);
                out.push(ClassicalInstance::plain(
                    format!("double-bracket[{i},{j},{k},{l},{xi},{eta},{eps},{phi}]"),
                    lhs,
                    rhs,
                ));
            }
        }
    }
    out
}

fn para_bose(sig: &AlgebraSignature) -> Vec<ClassicalInstance> {
    index_sign_tuples(1..=sig.m())
        .into_iter()
        .map(|(i, j, k, xi, eta, eps)| {
            let c = 2 * eps.value();
            let lhs = Expr::comm(Expr::anti(a(i, xi), a(j, eta)), a(k, eps));
            let rhs = Expr::linear_combination(alloc::vec![
                (c * delta(j == k && eps == eta.flip()), a(i, xi)),
                (c * delta(i == k && eps == xi.flip()), a(j, eta)),
            ]);
            ClassicalInstance::plain(format!("para-bose[{i},{j},{k},{xi},{eta},{eps}]"), lhs, rhs)
        })
        .collect()
}

fn para_fermi(sig: &AlgebraSignature) -> Vec<ClassicalInstance> {
    let m = sig.m();
    index_sign_tuples(1..=sig.n())
        .into_iter()
        .map(|(i, j, k, xi, eta, eps)| {
            let f = |t: u16, s| a(t + m, s);
            let lhs = Expr::comm(Expr::comm(f(i, xi), f(j, eta)), f(k, eps));
            let rhs = Expr::linear_combination(alloc::vec![
                (2 * delta(j == k && eps == eta.flip()), f(i, xi)),
                (-2 * delta(i == k && eps == xi.flip()), f(j, eta)),
            ]);
            ClassicalInstance::plain(
                format!("para-fermi[{i},{j},{k},{xi},{eta},{eps}]"),
                lhs,
                rhs,
            )
        })
        .collect()
}

fn conversion(sig: &AlgebraSignature) -> Vec<ClassicalInstance> {
    let mut out = Vec::new();
    for i in 1..=sig.rank() {
        for s in Sign::BOTH {
            let image = green_from_chevalley(sig, i, s, false);
            out.push(ClassicalInstance {
                name: format!("conversion[{i},{s}]"),
                lhs: a(i, s),
                rhs: image.expr,
                rhs_sqrt2_exp: image.sqrt2_exp,
            });
        }
    }
    out
}

fn from_presentation<'a>(
    rels: impl Iterator<Item = &'a crate::presentations::Relation>,
) -> Vec<ClassicalInstance> {
    rels.map(|r| ClassicalInstance::plain(r.name.clone(), r.lhs.clone(), r.rhs.clone()))
        .collect()
}

/// Every instance of a family at the signature.
pub fn classical_instances(
    sig: &AlgebraSignature,
    family: ClassicalFamily,
) -> Vec<ClassicalInstance> {
    match family {
        ClassicalFamily::Triple => triple(sig),
        ClassicalFamily::DoubleBracket => double_bracket(sig),
        ClassicalFamily::Preoscillator => {
            from_presentation(preoscillator_presentation(sig).relations.iter())
        }
        ClassicalFamily::ParaBose => para_bose(sig),
        ClassicalFamily::ParaFermi => para_fermi(sig),
        ClassicalFamily::Green => {
            from_presentation(green_presentation(sig, false).relations.iter())
        }
        ClassicalFamily::CartanKac | ClassicalFamily::Serre => {
            let prefix = if family == ClassicalFamily::Serre {
                "serre."
            } else {
                "ck."
            };
            let p = chevalley_presentation(sig, false);
            from_presentation(p.relations.iter().filter(|r| r.name.starts_with(prefix)))
        }
        ClassicalFamily::Conversion => conversion(sig),
    }
}

/// Evaluates both sides; `None` when they agree.
pub fn check_instance(
    r: &Realization,
    inst: &ClassicalInstance,
) -> Result<Option<ClassicalWitness>, MatrixError> {
    let lhs = r.evaluate(&inst.lhs)?;
    let rhs = r
        .evaluate(&inst.rhs)?
        .scale(&Sqrt2Scalar::sqrt2_pow(inst.rhs_sqrt2_exp));
    Ok((lhs != rhs).then(|| ClassicalWitness {
        instance: inst.name.clone(),
        relation: relation_text(inst),
        lhs,
        rhs,
    }))
}

fn relation_text(inst: &ClassicalInstance) -> String {
    let rhs = pretty(&inst.rhs);
    match inst.rhs_sqrt2_exp {
        0 => format!("{} = {rhs}", pretty(&inst.lhs)),
        e => format!("{} = sqrt2^{e}*({rhs})", pretty(&inst.lhs)),
    }
}

/// Checks every instance of the family in the matrix realization.
pub fn verify_classical(
    sig: &AlgebraSignature,
    family: ClassicalFamily,
) -> Result<ClassicalReport, MatrixError> {
    let r = Realization::new(sig)?;
    let instances = classical_instances(sig, family);
    let mut failures = Vec::new();
    for inst in &instances {
        if let Some(w) = check_instance(&r, inst)? {
            failures.push(w);
        }
    }
    Ok(ClassicalReport {
        family,
        signature: *sig,
        instances: instances.len(),
        failures,
    })
}
