//! The `sli` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use sli_core::minifloat::{enumerate_floats, FloatClass};
use sli_core::{SliFormat, SliNumber};

use crate::dat::{emit_dat, format_value, ErrorTable};
use crate::matvec::{matvec_backward_error, MatvecConfig};
use crate::sweep::{repr_error_sweep, SweepConfig};
use crate::system::System;

#[derive(Debug, Parser)]
#[command(name = "sli", version, about = "Symmetric level-index arithmetic simulator")]
pub struct Cli {
    /// key = value file supplying defaults for the subcommand's flags
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every bit pattern of a format with its value.
    #[command(args_override_self = true)]
    Table {
        #[arg(value_parser = parse_system)]
        format: System,
        /// Read every SLI pattern by definition (all zeros reads as 1).
        #[arg(long)]
        raw: bool,
    },
    /// Encode a binary64 value and show its fields.
    #[command(args_override_self = true)]
    Encode {
        #[arg(value_parser = parse_sli)]
        format: SliFormat,
        #[arg(allow_hyphen_values = true)]
        value: f64,
    },
    /// One arithmetic operation on two encoded values.
    #[command(args_override_self = true)]
    Op {
        op: OpKind,
        #[arg(value_parser = parse_sli)]
        format: SliFormat,
        #[arg(allow_hyphen_values = true)]
        x: f64,
        #[arg(allow_hyphen_values = true)]
        y: f64,
    },
    /// Relative representation error over an evenly spaced range.
    #[command(name = "sweep-repr", args_override_self = true)]
    SweepRepr {
        #[arg(long, default_value = "sli2.12", value_parser = parse_sli)]
        sli: SliFormat,
        #[arg(long = "float", default_value = "binary16", value_parser = parse_system)]
        float: System,
        #[arg(long, default_value_t = 0.01, allow_hyphen_values = true)]
        min: f64,
        #[arg(long, default_value_t = 8.0, allow_hyphen_values = true)]
        max: f64,
        #[arg(long, default_value_t = 1e-5)]
        step: f64,
        /// Output .dat file (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Backward error of simulated matrix-vector products.
    #[command(args_override_self = true)]
    Matvec {
        #[arg(long, default_value = "sli2.12", value_parser = parse_sli)]
        sli: SliFormat,
        #[arg(long = "float", default_value = "binary16", value_parser = parse_system)]
        float: System,
        #[arg(long, value_delimiter = ',', default_value = "10,100,1000")]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        lo: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        hi: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_sli(s: &str) -> Result<SliFormat, String> {
    s.parse().map_err(|e: sli_core::Error| format!("{e}: {s:?}"))
}

fn parse_system(s: &str) -> Result<System, String> {
    s.parse().map_err(|e: sli_core::Error| format!("{e}: {s:?}"))
}

/// Runs the CLI; returns the process exit code (0 ok, 1 domain error,
/// 2 usage error).
pub fn run(args: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let args = match crate::config::expand_args(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> anyhow::Result<()> {
    match cmd {
        Command::Table { format, raw } => table(format, raw, out)?,
        Command::Encode { format, value } => {
            let n = sli_core::encode(value, format)?;
            describe(&n, out)?;
        }
        Command::Op { op, format, x, y } => {
            let (a, b) = (sli_core::encode(x, format)?, sli_core::encode(y, format)?);
            let r = match op {
                OpKind::Add => a.add(&b),
                OpKind::Sub => a.sub(&b),
                OpKind::Mul => a.mul(&b),
                OpKind::Div => a.div(&b),
            }?;
            describe(&r, out)?;
        }
        Command::SweepRepr { sli, float, min, max, step, out: path } => {
            let cfg = SweepConfig { systems: vec![float, System::Sli(sli)], min, max, step };
            write_table(&repr_error_sweep(&cfg)?, path, out)?;
        }
        Command::Matvec { sli, float, dims, lo, hi, seed, out: path } => {
            let cfg = MatvecConfig { systems: vec![float, System::Sli(sli)], dims, lo, hi, seed };
            write_table(&matvec_backward_error(&cfg)?, path, out)?;
        }
    }
    Ok(())
}

fn write_table(t: &ErrorTable, path: Option<PathBuf>, out: &mut dyn Write) -> crate::Result<()> {
    match path {
        Some(p) => emit_dat(t, &p),
        None => t.write_to(out),
    }
}

fn table(system: System, raw: bool, out: &mut dyn Write) -> anyhow::Result<()> {
    match system {
        System::Sli(fmt) => {
            writeln!(out, "pattern value log10")?;
            for e in sli_core::enumerate(fmt, raw)? {
                writeln!(out, "{} {} {}", e.word, format_value(e.value), format_value(e.log10_magnitude))?;
            }
        }
        System::Float(fmt) => {
            writeln!(out, "pattern value class")?;
            for e in enumerate_floats(fmt)? {
                let class = match e.class {
                    FloatClass::Zero => "zero",
                    FloatClass::Subnormal => "subnormal",
                    FloatClass::Normal => "normal",
                    FloatClass::Infinite => "inf",
                    FloatClass::Nan => "nan",
                };
                let bits = format!("{:0w$b}", e.pattern, w = e.width as usize);
                writeln!(out, "{bits} {} {class}", format_value(e.value))?;
            }
        }
    }
    Ok(())
}

fn describe(n: &SliNumber, out: &mut dyn Write) -> std::io::Result<()> {
    let f = n.format();
    writeln!(out, "format: {f}")?;
    writeln!(out, "level_bits: {}", f.level_bits())?;
    writeln!(out, "index_bits: {}", f.index_bits())?;
    writeln!(out, "sign: {}", n.is_negative() as u8)?;
    writeln!(out, "reciprocal: {}", (!n.is_zero() && !n.is_inverse()) as u8)?;
    writeln!(out, "level: {}", n.level())?;
    writeln!(out, "index: {:.15}", n.index())?;
    writeln!(out, "value: {}", display_value(n))?;
    writeln!(out, "bits: {}", n.to_bits())
}

fn display_value(n: &SliNumber) -> String {
    let v = n.to_f64();
    if n.is_zero() {
        return "0".into();
    }
    if v.is_finite() && v != 0.0 {
        let a = v.abs();
        if (1e-4..1e15).contains(&a) {
            format!("{v:.15}")
        } else {
            format!("{v:.15e}")
        }
    } else {
        let s = if n.is_negative() { "-" } else { "" };
        format!("{s}10^{:.6}", n.log10_magnitude())
    }
}
