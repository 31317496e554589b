mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use logcert::checks::Property;
use logcert::exact::{DigitBudget, RationalFunctionQ};
use logcert::sequences::{ConvolutionKind, SequenceSource};

const NU_GRAMMAR: &str = "\
Rational functions (--nu, --tail-nu) are written in the single variable n:

  expr   := term (('+' | '-') term)*
  term   := factor (('*' | '/') factor | factor)*
  factor := ('+' | '-') factor | atom ('^' digits)?
  atom   := digits | 'n' | '(' expr ')'

Juxtaposition multiplies and p/q coefficients are plain division, so
\"(12n+3)/(4n+3)\", \"3/2*n + 1\" and \"(n^2 - 1/4)/(n+1)\" are all valid.

Exit codes: 0 holds or succeeded, 1 fails, 2 usage or input error,
3 digit budget exceeded.";

#[derive(Parser, Debug)]
#[command(name = "logcert", version, about = "Exact log-convexity and root monotonicity checks and certificates")]
#[command(after_long_help = NU_GRAMMAR)]
struct Cli {
    /// Largest decimal size of either side of a cross-power comparison (0 = unlimited)
    #[arg(long, global = true, default_value_t = DigitBudget::DEFAULT_DIGITS)]
    digit_budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print terms of a sequence
    Gen(GenArgs),
    /// Decide a property on a finite window
    Check(CheckArgs),
    /// Produce a replayable certificate
    #[command(after_long_help = NU_GRAMMAR)]
    Certify(CertifyArgs),
    /// Binomial convolution of two sequences
    Convolve(ConvolveArgs),
    /// Re-verify a certificate file
    Replay(ReplayArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["family", "spec"])))]
struct SourceArgs {
    /// Catalog family or elementary sequence (ones, delta, natural, factorial)
    #[arg(long, value_parser = parse_source_name)]
    family: Option<SequenceSource>,
    /// JSON sequence description
    #[arg(long)]
    spec: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// First index (defaults to the start of the support)
    #[arg(long)]
    from: Option<u64>,
    #[arg(long)]
    to: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_parser = parse_property)]
    property: Property,
    /// First index (defaults to the smallest index the property allows)
    #[arg(long)]
    from: Option<u64>,
    #[arg(long)]
    to: u64,
    #[arg(long)]
    strict: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    /// Root monotonicity from log-convexity or log-concavity
    T21,
    /// Exhaustive scan of a window
    Direct,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    ConvexInc,
    ConcaveDec,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    /// JSON sequence description: three_term for the recurrence criterion,
    /// dirichlet for finite exponential sums, anything with --theorem
    #[arg(long, conflicts_with = "family")]
    spec: Option<PathBuf>,
    #[arg(long, value_parser = parse_source_name)]
    family: Option<SequenceSource>,

    /// Lower bound nu(n) for the ratio limit of a three-term recurrence
    #[arg(long, value_parser = parse_rational_function, conflicts_with = "auto_nu")]
    nu: Option<RationalFunctionQ>,
    /// Search a fixed grid of witnesses instead of giving --nu
    #[arg(long)]
    auto_nu: bool,
    /// First index of the positivity rays (2 <= n0 <= start + 2)
    #[arg(long, default_value_t = 2)]
    n0: i64,
    /// Witness degree for --auto-nu (default: try 1, then 2)
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
    degree: Option<u32>,
    /// Strict claim for a dirichlet spec
    #[arg(long)]
    strict: bool,

    #[arg(long, value_enum)]
    theorem: Option<TheoremArg>,
    /// Boundary index for t21
    #[arg(long = "N")]
    big_n: Option<u64>,
    /// Length of the log scan after N
    #[arg(long, default_value_t = 60)]
    horizon: u64,
    #[arg(long, value_enum, default_value_t = ModeArg::ConvexInc)]
    mode: ModeArg,
    /// Also scan the root property directly from this index to N-1
    #[arg(long)]
    direct_from: Option<u64>,
    /// Use z_N^2 against z_{N+1} as the boundary condition
    #[arg(long)]
    remark_b: bool,
    /// three_term spec producing the same sequence, for a claim on a ray
    #[arg(long)]
    tail_spec: Option<PathBuf>,
    #[arg(long, value_parser = parse_rational_function, requires = "tail_spec")]
    tail_nu: Option<RationalFunctionQ>,
    #[arg(long, default_value_t = 2, requires = "tail_spec")]
    tail_n0: i64,

    /// Property for a direct certificate
    #[arg(long, value_parser = parse_property)]
    property: Option<Property>,
    #[arg(long)]
    from: Option<u64>,
    #[arg(long)]
    to: Option<u64>,
}

#[derive(Args, Debug)]
struct ConvolveArgs {
    /// Family name or JSON sequence file
    #[arg(long)]
    x: String,
    /// Family name or JSON sequence file
    #[arg(long)]
    y: String,
    #[arg(long, value_parser = parse_kind, default_value = "plain")]
    kind: ConvolutionKind,
    #[arg(long, default_value_t = 0)]
    from: u64,
    #[arg(long)]
    to: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Certify log-convexity through the convolution from direct scans of x and y on [1, to]
    #[arg(long)]
    certify: bool,
}

#[derive(Args, Debug)]
struct ReplayArgs {
    /// A certificate, or a certify report containing one
    #[arg(long)]
    certificate: PathBuf,
}

fn parse_source_name(s: &str) -> Result<SequenceSource, String> {
    SequenceSource::from_name(s).map_err(|e| e.to_string())
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse()
}

fn parse_kind(s: &str) -> Result<ConvolutionKind, String> {
    s.parse()
}

fn parse_rational_function(s: &str) -> Result<RationalFunctionQ, String> {
    s.parse().map_err(|e: logcert::exact::ExactError| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let budget = match cli.digit_budget {
        0 => DigitBudget::unlimited(),
        d => DigitBudget::digits(d),
    };
    ExitCode::from(report::run(&cli.command, argv, budget))
}
