use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "weylzeta", version, about = "Zeta-functions of root systems: Weyl groups, Poincare polynomials, Bernoulli functions and functional relations")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Global {
    /// Print the report as JSON instead of the text summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cap the worker pool.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Read exponent vectors in the textbook order of the positive roots.
    #[arg(long, global = true)]
    pub classic_order: bool,
    /// Seed for the random fallback when choosing the generic vector phi.
    #[arg(long, global = true)]
    pub phi_seed: Option<u64>,
    /// Also write the JSON report to this file.
    #[arg(long, short, global = true)]
    pub output: Option<std::path::PathBuf>,
    /// Float precision for sums.
    #[arg(long, global = true, env = "WEYLZETA_PRECISION", value_enum, default_value = "extended")]
    pub precision: PrecisionArg,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PrecisionArg {
    Double,
    Extended,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Long,
    Short,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Poincare polynomials, their values at -1 and the non-vanishing tables.
    Poincare(PoincareArgs),
    /// Weyl group enumeration and minimal coset representatives.
    Weyl(WeylArgs),
    /// Exact Bernoulli functions P(k, y, lambda; I; Delta).
    Bernoulli(BernoulliArgs),
    /// Lattice sums: zeta_r, or the direct sum S when --I is given.
    Zeta(ZetaArgs),
    /// Check a functional relation numerically.
    Verify(VerifyArgs),
    /// Compare F_I with iterated residues of F_empty.
    ResidueCheck(ResidueArgs),
    /// The |I| = 1 relation in terms of the Lerch zeta-function.
    LerchCheck(LerchArgs),
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct PoincareArgs {
    /// Root system, e.g. A3, B3, G2, E6.
    pub system: Option<String>,
    /// Index set I: 1-based indices "1,3" or a subsystem type such as "D5".
    #[arg(long = "I", value_name = "I")]
    pub i_set: Option<String>,
    /// Evaluate W^I at this rational point.
    #[arg(long, allow_hyphen_values = true)]
    pub eval: Option<String>,
    /// Put -1 on one length class and 1 on the other.
    #[arg(long, value_enum)]
    pub mixed: Option<LengthClass>,
    /// Print the enumerated two-variable polynomial (u_L, u_S).
    #[arg(long)]
    pub split: bool,
    /// Reproduce the non-vanishing tables ("nonvanishing").
    #[arg(long)]
    pub table: Option<String>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct WeylArgs {
    pub system: String,
    #[arg(long = "I", value_name = "I")]
    pub i_set: Option<String>,
    /// List every element with its reduced word and inversion set.
    #[arg(long)]
    pub elements: bool,
    /// Dump the root system data.
    #[arg(long)]
    pub roots: bool,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct BernoulliArgs {
    pub system: String,
    #[arg(long = "I", value_name = "I")]
    pub i_set: Option<String>,
    /// Exponents over Delta* (positive roots outside Delta_I).
    #[arg(long, value_delimiter = ',')]
    pub k: Option<Vec<u32>>,
    /// lambda = sum_{i in I} m_i lambda_i, one entry per element of I.
    #[arg(long, value_delimiter = ',')]
    pub m: Option<Vec<i64>>,
    /// y in simple-coroot coordinates (rationals); a single 0 means y = 0.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub y: Option<Vec<String>>,
    /// Table of all k with |k| <= kmax.
    #[arg(long)]
    pub kmax: Option<u32>,
    /// Compare the expansion with the closed forms (A_r with I = {2..r}, C3 with I = {2,3}).
    #[arg(long)]
    pub cross_check: bool,
    /// Lerch coefficients b_{k nu j} (|I| = 1).
    #[arg(long)]
    pub lerch: bool,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct ZetaArgs {
    #[arg(long)]
    pub system: String,
    /// One exponent per positive root; "a", "a+bi" or "a-bi".
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub s: Vec<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub y: Option<Vec<String>>,
    /// Evaluate the direct sum S(s, y; I; Delta) instead of zeta_r.
    #[arg(long = "I", value_name = "I")]
    pub i_set: Option<String>,
    /// Truncation: coordinates up to N.
    #[arg(long = "N", value_name = "N", default_value_t = 1000)]
    pub n: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub enum Template {
    #[value(name = "A2", alias = "a2")]
    A2,
    #[value(name = "A3", alias = "a3")]
    A3,
    #[value(name = "C3", alias = "c3")]
    C3,
    #[value(name = "C3-values")]
    #[serde(rename = "C3-values")]
    C3Values,
    #[value(name = "G2-values")]
    #[serde(rename = "G2-values")]
    G2Values,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct VerifyArgs {
    /// One of the explicit identities.
    #[arg(long, value_enum)]
    pub template: Option<Template>,
    /// Root system for the general relation.
    #[arg(long)]
    pub system: Option<String>,
    #[arg(long = "I", value_name = "I")]
    pub i_set: Option<String>,
    /// Use the general relation (signed Weyl sum vs Bernoulli side).
    #[arg(long)]
    pub generic: bool,
    /// With --generic: use the direct sum S on the left.
    #[arg(long)]
    pub direct: bool,
    #[arg(long, value_delimiter = ',')]
    pub k: Option<Vec<u32>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub s: Option<Vec<String>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub y: Option<Vec<String>>,
    #[arg(long = "N", value_name = "N")]
    pub n: Option<u64>,
    /// Truncation of the lambda sum on the Bernoulli side.
    #[arg(long = "M", alias = "lambda-max", value_name = "M")]
    pub m: Option<u64>,
    /// Truncation for the lower-rank sums on a template's right side.
    #[arg(long = "N2", value_name = "N2")]
    pub n2: Option<u64>,
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct ResidueArgs {
    pub system: String,
    #[arg(long = "I", value_name = "I")]
    pub i_set: String,
    /// lambda in fundamental-weight coordinates.
    #[arg(long, value_delimiter = ',')]
    pub lambda: Vec<i64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub y: Option<Vec<String>>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct LerchArgs {
    pub system: String,
    /// The single element of I, 1-based.
    #[arg(long)]
    pub i: usize,
    #[arg(long, value_delimiter = ',')]
    pub k: Vec<u32>,
    #[arg(long, allow_hyphen_values = true, default_value = "2")]
    pub s: String,
    #[arg(long = "N", value_name = "N", default_value_t = 2000)]
    pub n: u64,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}
