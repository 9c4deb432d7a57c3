//! The `intdiff` command line.
//!
//! Exit codes: `0` success, `1` domain error, `2` usage or parse error.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::builder::RangedU64ValueParser;
use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::i1::I1Element;
use crate::lattice::{count_ideals, dedekind_bounds, format_subset, parse_subset, IdealAntichain};
use crate::parser::{format_operator, parse_operator, parse_poly};
use crate::skew::CalB1Element;
use crate::tensor::InElement;

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "intdiff", version, about = "Exact integro-differential operator calculator")]
struct Cli {
    /// One bare result per line, no labels.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Dim {
    /// Number of tensor factors.
    #[arg(short = 'n', default_value_t = 1, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical form.
    Normalize {
        #[command(flatten)]
        dim: Dim,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Apply an operator to a polynomial.
    Apply {
        #[command(flatten)]
        dim: Dim,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Apply the involution.
    Involute {
        #[command(flatten)]
        dim: Dim,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Extract a homogeneous component; `-d` takes one degree per factor.
    Grade {
        #[command(flatten)]
        dim: Dim,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(short = 'd', allow_hyphen_values = true)]
        degrees: String,
    },
    /// Map into the quotient by the prime indexed by `--primes`.
    Project {
        #[command(flatten)]
        dim: Dim,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        primes: String,
    },
    /// Operations on ideals written as antichains such as `{01,10}`.
    Ideal {
        #[command(subcommand)]
        op: IdealOp,
    },
    /// Count the ideals of the n-fold algebra and check the bounds.
    Dedekind { n: usize },
    /// Division with remainder in K(H)[D, D^-1].
    #[command(group(ArgGroup::new("side").required(true).args(["left", "right"])))]
    Divide {
        #[arg(long)]
        left: bool,
        #[arg(long)]
        right: bool,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Built-in identity checks.
    Check {
        #[command(subcommand)]
        what: CheckWhat,
    },
}

#[derive(Subcommand, Debug)]
enum IdealOp {
    /// Sum of two ideals
    Sum {
        #[command(flatten)]
        dim: Dim,
        a: String,
        b: String,
    },
    /// Product of two ideals
    Prod {
        #[command(flatten)]
        dim: Dim,
        a: String,
        b: String,
    },
    /// Whether the first ideal is contained in the second.
    Includes {
        #[command(flatten)]
        dim: Dim,
        a: String,
        b: String,
    },
    /// Whether an element lies in the ideal.
    Member {
        #[command(flatten)]
        dim: Dim,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        ideal: String,
    },
    /// Minimal primes over the ideal, as factor subsets
    Minprimes {
        #[command(flatten)]
        dim: Dim,
        ideal: String,
    },
    /// Whether the ideal is prime
    Isprime {
        #[command(flatten)]
        dim: Dim,
        ideal: String,
    },
}

#[derive(Subcommand, Debug)]
enum CheckWhat {
    /// The defining relations in every factor.
    Relations {
        #[command(flatten)]
        dim: Dim,
    },
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: 2, stdout: String::new(), stderr: text }
            } else {
                Output { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command, cli.machine) {
        Ok((ok, stdout)) => Output {
            code: if ok { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(e) => Output {
            code: if e.is_parse_error() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn lines<S: AsRef<str>>(items: &[S]) -> String {
    items.iter().fold(String::new(), |mut acc, s| {
        acc.push_str(s.as_ref());
        acc.push('\n');
        acc
    })
}

fn parse_degrees(src: &str) -> Result<Vec<i64>> {
    src.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::syntax(0, format!("invalid degree {:?}", s.trim())))
        })
        .collect()
}

fn quotient_element(src: &str) -> Result<CalB1Element> {
    let a = parse_operator(src, 1)?;
    Ok(a.to_i1().expect("single factor").project_b1().embed())
}

fn execute(cmd: &Command, machine: bool) -> Result<(bool, String)> {
    let done = |s: String| Ok((true, lines(&[s])));
    match cmd {
        Command::Normalize { dim, expr } => done(format_operator(&parse_operator(expr, dim.n)?)),
        Command::Apply { dim, expr, to } => {
            let a = parse_operator(expr, dim.n)?;
            let p = parse_poly(to, dim.n)?;
            done(a.apply(&p)?.to_string())
        }
        Command::Involute { dim, expr } => {
            done(format_operator(&parse_operator(expr, dim.n)?.involution()))
        }
        Command::Grade { dim, expr, degrees } => {
            let a = parse_operator(expr, dim.n)?;
            done(format_operator(&a.grade_component(&parse_degrees(degrees)?)?))
        }
        Command::Project { dim, expr, primes } => {
            let a = parse_operator(expr, dim.n)?;
            done(format_operator(&a.project_modulo_prime(&parse_subset(primes, dim.n)?)?))
        }
        Command::Ideal { op } => ideal(op, machine),
        Command::Dedekind { n } => {
            let count = count_ideals(*n)?;
            let (lo, hi) = dedekind_bounds(*n);
            let c = num_bigint::BigInt::from(count);
            let ok = lo <= c && c <= hi;
            let verdict = match (machine, ok) {
                (true, ok) => ok.to_string(),
                (false, true) => "bounds ok".to_string(),
                (false, false) => format!("bounds violated: {lo} <= {count} <= {hi} fails"),
            };
            Ok((ok, lines(&[count.to_string(), verdict])))
        }
        Command::Divide { left, b, c, .. } => {
            let (b, c) = (quotient_element(b)?, quotient_element(c)?);
            let (q, r) = if *left { b.left_divide(&c)? } else { b.right_divide(&c)? };
            let (q, r) = (q.format_with("H1", "D1"), r.format_with("H1", "D1"));
            if machine {
                Ok((true, lines(&[q, r])))
            } else {
                Ok((true, lines(&[format!("q = {q}"), format!("r = {r}")])))
            }
        }
        Command::Check { what: CheckWhat::Relations { dim } } => {
            let results = relation_suite(dim.n);
            let ok = results.iter().all(|(_, pass)| *pass);
            let width = results.iter().map(|(name, _)| name.chars().count()).max().unwrap_or(0);
            let mut out = String::new();
            for (name, pass) in &results {
                let verdict = if *pass { "pass" } else { "FAIL" };
                if machine {
                    let _ = writeln!(out, "{name}\t{verdict}");
                } else {
                    let pad = width - name.chars().count();
                    let _ = writeln!(out, "{name}{}  {verdict}", " ".repeat(pad));
                }
            }
            if !machine {
                let passed = results.iter().filter(|(_, p)| *p).count();
                let _ = writeln!(out, "{passed}/{} passed", results.len());
            }
            Ok((ok, out))
        }
    }
}

fn ideal(op: &IdealOp, machine: bool) -> Result<(bool, String)> {
    let parse = |s: &str, n: usize| IdealAntichain::parse(s, n);
    let out = match op {
        IdealOp::Sum { dim, a, b } => parse(a, dim.n)?.sum(&parse(b, dim.n)?)?.to_string(),
        IdealOp::Prod { dim, a, b } => parse(a, dim.n)?.product(&parse(b, dim.n)?)?.to_string(),
        IdealOp::Includes { dim, a, b } => {
            parse(a, dim.n)?.includes_in(&parse(b, dim.n)?)?.to_string()
        }
        IdealOp::Member { dim, expr, ideal } => {
            let c = parse(ideal, dim.n)?;
            parse_operator(expr, dim.n)?.ideal_membership(&c)?.to_string()
        }
        IdealOp::Minprimes { dim, ideal } => {
            let primes = parse(ideal, dim.n)?.minimal_primes_over();
            if primes.is_empty() && !machine {
                "none".to_string()
            } else {
                let items: Vec<String> = primes.iter().map(|s| format_subset(s)).collect();
                return Ok((true, lines(&items)));
            }
        }
        IdealOp::Isprime { dim, ideal } => parse(ideal, dim.n)?.is_prime().to_string(),
    };
    Ok((true, lines(&[out])))
}

/// Named identity checks over `n` factors.
pub fn relation_suite(n: usize) -> Vec<(String, bool)> {
    let g = |a: I1Element, i: usize| InElement::embed(&a, i, n);
    let one = InElement::one(n);
    let mut out = Vec::new();
    for i in 0..n {
        let k = i + 1;
        let (d, int, h) = (g(I1Element::partial(), i), g(I1Element::integ(), i), g(I1Element::h(), i));
        let p = &one - &(&int * &d);
        out.push((format!("d{k}*int{k} = 1"), &d * &int == one));
        out.push((format!("H{k}*int{k} - int{k}*H{k} = int{k}"), &(&h * &int) - &(&int * &h) == int));
        out.push((format!("H{k}*d{k} - d{k}*H{k} = -d{k}"), &(&h * &d) - &(&d * &h) == -&d));
        out.push((format!("H{k}*(1 - int{k}*d{k}) = 1 - int{k}*d{k}"), &h * &p == p));
        out.push((format!("(1 - int{k}*d{k})*H{k} = 1 - int{k}*d{k}"), &p * &h == p));
        for m in 1..=10u32 {
            let lhs = &g(I1Element::integ_pow(m), i) * &g(I1Element::partial_pow(m), i);
            let rhs = &one - &g(I1Element::idempotent(m), i);
            let tail = match m {
                1 => format!("e{k}[0,0]"),
                2 => format!("e{k}[0,0] - e{k}[1,1]"),
                _ => format!("e{k}[0,0] - ... - e{k}[{},{}]", m - 1, m - 1),
            };
            out.push((format!("int{k}^{m}*d{k}^{m} = 1 - {tail}"), lhs == rhs));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let gens = |s: usize| {
                [
                    ("d", g(I1Element::partial(), s)),
                    ("int", g(I1Element::integ(), s)),
                    ("H", g(I1Element::h(), s)),
                ]
            };
            for (na, a) in gens(i) {
                for (nb, b) in gens(j) {
                    let name = format!("{na}{}*{nb}{} = {nb}{}*{na}{}", i + 1, j + 1, j + 1, i + 1);
                    out.push((name, &a * &b == &b * &a));
                }
            }
        }
    }
    out
}
