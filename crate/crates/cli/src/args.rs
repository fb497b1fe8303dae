use clap::{Args, Parser, Subcommand, ValueEnum};
use osp_core::scalars::parse_rational;
use osp_core::{AlgebraSignature, Rational};

/// Seed for the bracket-identity samples when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 20_250_917;

#[derive(Parser, Debug)]
#[command(
    name = "osp",
    version,
    about = "Exact verification for osp(2n+1/2m) and U_q[osp(2n+1/2m)]"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the symmetric Cartan matrix.
    Cartan {
        #[command(flatten)]
        sig: SigArgs,
        /// Also check the (4,4) matrix against the reference table.
        #[arg(long)]
        check_b44: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Reduce an expression to normal form modulo the deformed Chevalley
    /// relations. Green letters are first written in Chevalley generators.
    Reduce {
        expr: String,
        #[command(flatten)]
        sig: SigArgs,
        #[arg(long)]
        degree_bound: Option<usize>,
        #[arg(long, value_parser = parse_q0, allow_hyphen_values = true)]
        q0: Option<Rational>,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print a presentation and its fingerprint.
    Present {
        #[command(flatten)]
        sig: SigArgs,
        #[arg(long, value_enum, default_value_t = PresentationArg::Chevalley)]
        kind: PresentationArg,
        /// The undeformed (classical) relations.
        #[arg(long)]
        classical: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check one identity `LHS = RHS` modulo the deformed Chevalley
    /// relations. Green letters are first written in Chevalley generators.
    Check {
        identity: String,
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Experimental: rewrite modulo the deformed Green relations and check
    /// the Chevalley relations. Inconclusive results are expected.
    Converse {
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        opts: VerifyOpts,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct SigArgs {
    /// Number of odd Green pairs (m >= 1).
    #[arg(short, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub m: u16,
    /// Number of even Green pairs (n >= 1).
    #[arg(short, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub n: u16,
}

impl SigArgs {
    pub fn signature(self) -> AlgebraSignature {
        AlgebraSignature::new(self.m, self.n).expect("ranges checked by the parser")
    }
}

#[derive(Args, Debug, Clone)]
pub struct VerifyOpts {
    /// Longest word the rewriting engine explores; default 2 * (longest
    /// word in the suite) + 4.
    #[arg(long)]
    pub degree_bound: Option<usize>,
    /// Specialize q to this rational (NUM/DEN) as a fast pre-check.
    #[arg(long, value_parser = parse_q0, allow_hyphen_values = true)]
    pub q0: Option<Rational>,
    #[arg(long)]
    pub json: bool,
    /// Include reduction traces.
    #[arg(long)]
    pub trace: bool,
    /// Sample points per parity triple for the bracket identity.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    pub samples: u32,
    /// Worker threads; the report does not depend on this.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Stop completion after this many rules.
    #[arg(long, default_value_t = osp_core::rewrite::DEFAULT_MAX_RULES)]
    pub max_rules: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    Classical,
    Prop5,
    Theorem,
    Roundtrip,
    Prop6,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresentationArg {
    Chevalley,
    Green,
    Preoscillator,
}

fn parse_q0(s: &str) -> Result<Rational, String> {
    let r = parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational NUM/DEN"))?;
    let one = Rational::from_integer(1.into());
    if r == Rational::from_integer(0.into()) || r == one || r == -one {
        return Err("q0 must not be 0, 1 or -1".into());
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn q0_validation() {
        assert!(parse_q0("3/2").is_ok());
        assert!(parse_q0("-1").is_err());
        assert!(parse_q0("2/2").is_err());
        assert!(parse_q0("0/5").is_err());
        assert!(parse_q0("x").is_err());
    }
}
