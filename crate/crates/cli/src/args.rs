use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "entropy-lab", version, about = "Empirical entropy, string generators, compressors and bound checks")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Omit the timestamp field from reports.
    #[arg(long, global = true)]
    pub no_timestamp: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Empirical entropy profile H_0..H_kmax of each file.
    Entropy(EntropyArgs),
    /// Write a generated sequence and its metadata sidecar.
    Generate(GenerateArgs),
    /// Compress a file into a blob.
    Compress(CompressArgs),
    /// Restore the original file from a blob.
    Decompress(DecompressArgs),
    /// Evaluate compression bounds against measured sizes.
    Verify(VerifyArgs),
    /// Compression ratios against H_k along a family of strings.
    Convergence(ConvergenceArgs),
}

#[derive(Debug, Clone, Args)]
pub struct AlphabetArg {
    /// `inferred` (distinct bytes of the input), `bytes` (all 256 values), or
    /// a path to an alphabet declaration file.
    #[arg(long, default_value = "inferred")]
    pub alphabet: String,
}

#[derive(Debug, Args)]
pub struct EntropyArgs {
    /// Orders to report: `K`, or an inclusive range `A..B`.
    #[arg(long, value_parser = parse_k_range, default_value = "0..3")]
    pub k: RangeInclusive<usize>,
    #[command(flatten)]
    pub alphabet: AlphabetArg,
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub kind: GenerateKind,
    /// Output file; a name derived from the parameters if omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenerateKind {
    /// de Bruijn sequence of order k over sigma digits.
    DeBruijn {
        #[arg(long)]
        sigma: usize,
        #[arg(long)]
        k: usize,
    },
    /// First n digits of the Champernowne word.
    Champernowne {
        #[arg(long, default_value_t = 10)]
        base: usize,
        #[arg(long)]
        n: usize,
    },
    /// First n digits of the concatenated primes.
    CopelandErdos {
        #[arg(long, default_value_t = 10)]
        base: usize,
        #[arg(long)]
        n: usize,
    },
    /// Sample from the order-k Markov model of a corpus.
    MarkovSample {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Initial context (k bytes); random occurring context if omitted.
        #[arg(long)]
        start: Option<String>,
        #[command(flatten)]
        alphabet: AlphabetArg,
    },
    /// Run a generator spec stored as TOML.
    FromSpec {
        spec: PathBuf,
        /// Corpus for markov-sample specs.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[command(flatten)]
        alphabet: AlphabetArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Lz77,
    Lz78,
    Order0,
    Bwt,
}

#[derive(Debug, Args)]
pub struct CompressArgs {
    #[arg(long, value_enum)]
    pub algo: Algo,
    /// Include itemized per-stage bit accounting.
    #[arg(long)]
    pub report: bool,
    /// Blob path; INPUT.elb if omitted.
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub alphabet: AlphabetArg,
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct DecompressArgs {
    /// Restored file; the blob path without `.elb` (or with `.out`) if omitted.
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
    pub blob: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    Manzini,
    Klv,
    Noiseless,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, value_delimiter = ',', default_value = "manzini")]
    pub bound: Vec<BoundKind>,
    #[arg(long, value_parser = parse_k_range, default_value = "0..2")]
    pub k: RangeInclusive<usize>,
    /// KLV λ values (each > 1).
    #[arg(long, value_parser = parse_lambda, value_delimiter = ',', default_value = "2")]
    pub lambda: Vec<f64>,
    /// Constant of the KLV σ^(k+1) log σ term.
    #[arg(long, value_parser = parse_nonnegative, default_value_t = entropy_lab::bounds::DEFAULT_KLV_C)]
    pub c: f64,
    /// Use this μ in the Manzini bound instead of the measured one.
    #[arg(long, value_parser = parse_nonnegative)]
    pub mu: Option<f64>,
    /// Random distributions checked by the noiseless bound.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 64)]
    pub max_sigma: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Exit with status 3 if any bound is not satisfied.
    #[arg(long)]
    pub strict: bool,
    #[command(flatten)]
    pub alphabet: AlphabetArg,
    pub files: Vec<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Constant,
    ConstantThenB,
    DeBruijn,
    Champernowne,
}

#[derive(Debug, Args)]
pub struct ConvergenceArgs {
    #[arg(long, value_enum)]
    pub family: FamilyKind,
    /// Family sizes: lengths, or orders for de-bruijn.
    #[arg(long, value_delimiter = ',', required = true)]
    pub params: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub sigma: usize,
    #[arg(long, default_value_t = 10)]
    pub base: usize,
}

pub fn parse_k_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let number = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a non-negative integer"));
    let range = match text.split_once("..") {
        Some((a, b)) => number(a)?..=number(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let k = number(text)?;
            k..=k
        }
    };
    if range.is_empty() {
        return Err(format!("empty range `{text}`"));
    }
    Ok(range)
}

pub fn parse_lambda(text: &str) -> Result<f64, String> {
    let lambda: f64 = text.trim().parse().map_err(|_| format!("`{text}` is not a number"))?;
    if !(lambda > 1.0) || !lambda.is_finite() {
        return Err(format!("λ must be a finite number greater than 1, got {text}"));
    }
    Ok(lambda)
}

pub fn parse_nonnegative(text: &str) -> Result<f64, String> {
    let x: f64 = text.trim().parse().map_err(|_| format!("`{text}` is not a number"))?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(format!("must be a finite non-negative number, got {text}"));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn k_ranges() {
        assert_eq!(parse_k_range("0..3").unwrap(), 0..=3);
        assert_eq!(parse_k_range("2..=4").unwrap(), 2..=4);
        assert_eq!(parse_k_range("5").unwrap(), 5..=5);
        assert!(parse_k_range("3..1").is_err());
        assert!(parse_k_range("a..2").is_err());
        assert!(parse_k_range("-1").is_err());
    }

    #[test]
    fn lambda_must_exceed_one() {
        assert_eq!(parse_lambda("2").unwrap(), 2.0);
        assert!(parse_lambda("1").is_err());
        assert!(parse_lambda("0.5").is_err());
        assert!(parse_lambda("inf").is_err());
        assert!(parse_lambda("x").is_err());
    }
}
