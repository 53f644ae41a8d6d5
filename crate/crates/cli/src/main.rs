use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use realpv::EquationKind;
use realpv_cli::{render, run, CertificateLevel, Config, Constants, Format, TheoryChoice};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Homogeneous,
    Quadrature,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TheoryArg {
    Fields,
    Ordered,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CertArg {
    Summary,
    Full,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstantsArg {
    RealAlgebraic,
    Rationals,
}

/// Classify first-order linear equations over Q(t) and decide existence and
/// uniqueness of their (real) Picard-Vessiot extensions.
#[derive(Debug, Parser)]
#[command(name = "realpv", version)]
struct Args {
    /// Equation such as "x' = x/(2*t)"; repeat for batch mode.
    #[arg(long = "equation", short = 'e', required = true)]
    equations: Vec<String>,

    /// Force the equation type instead of inferring it from a trailing `*x`.
    #[arg(long = "type", value_enum)]
    kind: Option<KindArg>,

    #[arg(long, value_enum, default_value = "fields")]
    theory: TheoryArg,

    /// Ordering cut for `--theory ordered`, e.g. "t -> 0+" or "t -> +inf".
    #[arg(long)]
    order: Option<String>,

    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,

    #[arg(long, value_enum, default_value = "summary")]
    certificates: CertArg,

    /// Field of constants; only the real algebraic numbers are supported.
    #[arg(long, value_enum, default_value = "real-algebraic")]
    constants: ConstantsArg,
}

fn config(args: Args) -> Result<Config, String> {
    let theory = match (args.theory, args.order) {
        (TheoryArg::Fields, None) => TheoryChoice::Fields,
        (TheoryArg::Ordered, Some(cut)) => TheoryChoice::Ordered(cut),
        (TheoryArg::Fields, Some(_)) => return Err("--order requires --theory ordered".into()),
        (TheoryArg::Ordered, None) => return Err("--theory ordered requires --order".into()),
    };
    Ok(Config {
        equations: args.equations,
        kind: args.kind.map(|k| match k {
            KindArg::Homogeneous => EquationKind::Homogeneous,
            KindArg::Quadrature => EquationKind::Quadrature,
        }),
        constants: match args.constants {
            ConstantsArg::RealAlgebraic => Constants::RealAlgebraic,
            ConstantsArg::Rationals => Constants::Rationals,
        },
        theory,
        format: match args.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
        certificates: match args.certificates {
            CertArg::Summary => CertificateLevel::Summary,
            CertArg::Full => CertificateLevel::Full,
        },
    })
}

fn main() -> ExitCode {
    let cfg = match config(Args::parse()) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match run(&cfg) {
        Ok(outcomes) => {
            print!("{}", render(&cfg, &outcomes));
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
