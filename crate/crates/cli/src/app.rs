use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use monideal::decomposition::{
    check_localization, irreducible_decompose, primary_decompose, strict_growth_scan,
    tight_closure, verify_growth_frobenius, verify_growth_ordinary,
};
use monideal::katzman::{build_instance, growth_exponent, verify_katzman};
use monideal::regularity::{
    betti_table, power_regularity_bound, regularity, verify_power_regularity, CoefficientField,
};
use monideal::{Error, Limits, MonomialIdeal, Ring};
use serde::Serialize;

use crate::parse::{parse_ideal, parse_list, parse_monomial, parse_ring};
use crate::report::{
    to_json, BettiDoc, ComponentDoc, GrowthDoc, KatzmanDoc, LocalizationDoc, RegBoundDoc,
    VerifyRegDoc,
};
use crate::{random, selftest};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "monideal",
    version,
    about = "Monomial ideal computations and verifiers"
)]
pub struct Cli {
    /// Ring variables, e.g. `x,y,z`.
    #[arg(long, global = true)]
    pub ring: Option<String>,
    /// Characteristic of the coefficient field (0 or a prime).
    #[arg(
        long = "char",
        global = true,
        default_value_t = 0,
        env = "MONIDEAL_CHAR"
    )]
    pub characteristic: u32,
    /// Field for Betti numbers: `QQ` or a prime. Defaults to the one given by --char.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Also write the result as JSON to this file.
    #[arg(long, global = true)]
    pub emit: Option<PathBuf>,
    #[command(flatten)]
    pub limits: LimitArgs,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    #[arg(long, global = true, env = "MONIDEAL_MAX_GENERATORS")]
    pub max_generators: Option<usize>,
    #[arg(long, global = true, env = "MONIDEAL_MAX_DIVISORS")]
    pub max_divisors: Option<u64>,
    #[arg(long, global = true, env = "MONIDEAL_MAX_SUBSETS")]
    pub max_subsets: Option<u64>,
    #[arg(long, global = true, env = "MONIDEAL_SPAIR_BUDGET")]
    pub spair_budget: Option<usize>,
    #[arg(long, global = true, env = "MONIDEAL_MAX_KATZMAN_Q")]
    pub max_katzman_q: Option<u64>,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            max_generators: self.max_generators.unwrap_or(d.max_generators),
            max_divisors: self.max_divisors.unwrap_or(d.max_divisors),
            max_subsets: self.max_subsets.unwrap_or(d.max_subsets),
            spair_budget: self.spair_budget.unwrap_or(d.spair_budget),
            max_katzman_q: self.max_katzman_q.unwrap_or(d.max_katzman_q),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Minimal irreducible decomposition.
    Decompose { ideal: String },
    /// Primary decomposition, grouping irreducible components by radical.
    Primary { ideal: String },
    /// Ordinary power I^n.
    Power {
        ideal: String,
        #[arg(long)]
        n: u32,
    },
    /// Frobenius power I^[q].
    Frob {
        ideal: String,
        #[arg(long)]
        q: u32,
    },
    /// Colon ideal I : J.
    Colon { ideal: String, by: String },
    /// Intersection I ∩ J.
    Intersect { ideal: String, other: String },
    /// Saturation I : u^∞ by a monomial.
    Saturate { ideal: String, by: String },
    /// Radical.
    Radical { ideal: String },
    /// Tight closure of I in R/J, as an ideal of R containing J.
    Tc {
        #[arg(long = "I")]
        i: String,
        #[arg(long = "J")]
        j: String,
    },
    /// Compare tight closure then localization at u with the reverse order.
    CheckLocalization {
        #[arg(long = "I")]
        i: String,
        #[arg(long = "J")]
        j: String,
        #[arg(long)]
        u: String,
    },
    /// Certify the linear growth bound for I^n + J or I^[q] + J.
    BoundGrowth {
        #[arg(long = "I")]
        i: String,
        #[arg(long = "J")]
        j: String,
        #[arg(long, conflicts_with = "q", required_unless_present = "q")]
        n: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
        /// Also scan these values with l taken from I alone, e.g. `1,2,4,8`.
        #[arg(long)]
        strict: Option<String>,
    },
    /// Castelnuovo-Mumford regularity of the ideal.
    Reg { ideal: String },
    /// Multigraded Betti numbers.
    Betti { ideal: String },
    /// The linear regularity bound B for Σ I_j^n.
    RegBound {
        #[arg(required = true)]
        ideals: Vec<String>,
    },
    /// Check reg(Σ I_j^n) <= n B for n up to --n-max.
    VerifyReg {
        #[arg(required = true)]
        ideals: Vec<String>,
        #[arg(long, default_value_t = 3)]
        n_max: u32,
    },
    /// Verify the primary decomposition of (x^q, y^q, xy(x-y)(x-ty)) over F_p, q = p^e.
    Katzman {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        e: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Randomized invariant suites.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cases per suite.
        #[arg(long, default_value_t = 100)]
        budget: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<crate::parse::ParseError> for Failure {
    fn from(e: crate::parse::ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

#[derive(Serialize)]
struct ValueDoc<'a> {
    command: &'a str,
    ring: Vec<String>,
    result: String,
}

struct Ctx<'a> {
    cli: &'a Cli,
    limits: Limits,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn ring(&self) -> Result<Ring, Failure> {
        let names = self
            .cli
            .ring
            .as_deref()
            .ok_or_else(|| Failure::Usage("--ring is required for this command".into()))?;
        parse_ring(names, self.cli.characteristic).map_err(|e| Failure::Usage(e.to_string()))
    }

    fn field(&self) -> Result<CoefficientField, Failure> {
        match self.cli.field.as_deref() {
            None => Ok(CoefficientField::for_characteristic(
                self.cli.characteristic,
            )?),
            Some("QQ") | Some("Q") | Some("0") => Ok(CoefficientField::Rationals),
            Some(s) => {
                let p: u32 = s
                    .parse()
                    .map_err(|_| Failure::Usage(format!("bad --field `{s}`")))?;
                Ok(CoefficientField::for_characteristic(p)?)
            }
        }
    }

    fn emit<T: Serialize>(&self, doc: &T) -> Result<(), Failure> {
        if let Some(path) = &self.cli.emit {
            std::fs::write(path, to_json(doc))?;
        }
        Ok(())
    }

    /// Prints an ideal-valued result.
    fn value(&mut self, command: &str, ring: &Ring, result: String) -> Result<i32, Failure> {
        writeln!(self.out, "{result}")?;
        self.emit(&ValueDoc {
            command,
            ring: ring.names().to_vec(),
            result,
        })?;
        Ok(EXIT_OK)
    }

    /// Emits the document; on failure also prints it on stdout.
    fn verdict<T: Serialize>(&mut self, holds: bool, doc: &T) -> Result<i32, Failure> {
        self.emit(doc)?;
        if holds {
            Ok(EXIT_OK)
        } else {
            write!(self.out, "{}", to_json(doc))?;
            writeln!(self.err, "verification failed")?;
            Ok(EXIT_COUNTEREXAMPLE)
        }
    }
}

fn ideal(ring: &Ring, s: &str) -> Result<MonomialIdeal, Failure> {
    Ok(parse_ideal(ring, s)?)
}

fn dispatch(ctx: &mut Ctx<'_>) -> Result<i32, Failure> {
    let cli = ctx.cli;
    match &cli.cmd {
        Cmd::Decompose { ideal: s } => {
            let r = ctx.ring()?;
            let dec = irreducible_decompose(&ideal(&r, s)?)?;
            ctx.value("decompose", &r, dec.to_string())
        }
        Cmd::Primary { ideal: s } => {
            let r = ctx.ring()?;
            let comps = primary_decompose(&ideal(&r, s)?)?;
            let docs: Vec<ComponentDoc> = comps.iter().map(|q| ComponentDoc::new(&r, q)).collect();
            for d in &docs {
                writeln!(
                    ctx.out,
                    "({})  radical ({})  exponent index {}",
                    d.ideal, d.radical, d.exponent_index
                )?;
            }
            ctx.emit(&docs)?;
            Ok(EXIT_OK)
        }
        Cmd::Power { ideal: s, n } => {
            let r = ctx.ring()?;
            let v = ideal(&r, s)?.power(*n)?;
            ctx.value("power", &r, v.to_string())
        }
        Cmd::Frob { ideal: s, q } => {
            let r = ctx.ring()?;
            let v = ideal(&r, s)?.frobenius_power(*q)?;
            ctx.value("frob", &r, v.to_string())
        }
        Cmd::Colon { ideal: s, by } => {
            let r = ctx.ring()?;
            let v = ideal(&r, s)?.colon_ideal(&ideal(&r, by)?)?;
            ctx.value("colon", &r, v.to_string())
        }
        Cmd::Intersect { ideal: s, other } => {
            let r = ctx.ring()?;
            let v = ideal(&r, s)?.intersect(&ideal(&r, other)?)?;
            ctx.value("intersect", &r, v.to_string())
        }
        Cmd::Saturate { ideal: s, by } => {
            let r = ctx.ring()?;
            let u = parse_monomial(&r, by)?;
            let v = ideal(&r, s)?.saturate(&u)?;
            ctx.value("saturate", &r, v.to_string())
        }
        Cmd::Radical { ideal: s } => {
            let r = ctx.ring()?;
            let v = ideal(&r, s)?.radical();
            ctx.value("radical", &r, v.to_string())
        }
        Cmd::Tc { i, j } => {
            let r = ctx.ring()?;
            let v = tight_closure(&ideal(&r, i)?, &ideal(&r, j)?)?;
            ctx.value("tc", &r, v.to_string())
        }
        Cmd::CheckLocalization { i, j, u } => {
            let r = ctx.ring()?;
            let (i, j) = (ideal(&r, i)?, ideal(&r, j)?);
            let u = parse_monomial(&r, u)?;
            let c = check_localization(&i, &j, &u)?;
            let doc = LocalizationDoc::new(&i, &j, &u, &c);
            if c.holds() {
                writeln!(ctx.out, "{}", doc.lhs)?;
            }
            ctx.verdict(c.holds(), &doc)
        }
        Cmd::BoundGrowth { i, j, n, q, strict } => {
            let r = ctx.ring()?;
            let (i, j) = (ideal(&r, i)?, ideal(&r, j)?);
            let cert = match (n, q) {
                (Some(n), _) => verify_growth_ordinary(&i, &j, *n)?,
                (None, Some(q)) => verify_growth_frobenius(&i, &j, *q)?,
                (None, None) => return Err(Failure::Usage("one of --n or --q is required".into())),
            };
            let mut doc = GrowthDoc::new(&cert);
            if let Some(list) = strict {
                let values = parse_list(list)?;
                doc.strict = Some((&strict_growth_scan(&i, &j, q.is_some(), &values)?).into());
            }
            if cert.holds() {
                let what = if q.is_some() { "q" } else { "n" };
                writeln!(ctx.out, "ideal: {}", doc.ideal)?;
                writeln!(
                    ctx.out,
                    "{what} = {}, l = {}, d = {}, bound = {}",
                    doc.n_or_q, doc.l, doc.d, doc.bound
                )?;
                for c in &doc.components {
                    writeln!(
                        ctx.out,
                        "({})  radical ({})  exponent index {} <= {}",
                        c.ideal, c.radical, c.exponent_index, doc.bound
                    )?;
                }
                if let Some(s) = &doc.strict {
                    let first = s
                        .first_holding
                        .map_or("none".to_string(), |v| v.to_string());
                    writeln!(
                        ctx.out,
                        "strict l = {}, holds from {what} = {first}",
                        s.l_strict
                    )?;
                }
            }
            ctx.verdict(cert.holds(), &doc)
        }
        Cmd::Reg { ideal: s } => {
            let r = ctx.ring()?;
            let field = ctx.field()?;
            let v = regularity(&ideal(&r, s)?, field, &ctx.limits)?;
            ctx.value("reg", &r, v.to_string())
        }
        Cmd::Betti { ideal: s } => {
            let r = ctx.ring()?;
            let i = ideal(&r, s)?;
            let t = betti_table(&i, ctx.field()?, &ctx.limits)?;
            let doc = BettiDoc::new(&i, &t);
            for e in &doc.entries {
                writeln!(ctx.out, "{}  {}  {}", e.i, e.multidegree, e.rank)?;
            }
            let totals: Vec<String> = doc.totals.iter().map(ToString::to_string).collect();
            writeln!(ctx.out, "totals {}", totals.join(" "))?;
            writeln!(ctx.out, "regularity {}", doc.regularity)?;
            ctx.emit(&doc)?;
            Ok(EXIT_OK)
        }
        Cmd::RegBound { ideals } => {
            let r = ctx.ring()?;
            let field = ctx.field()?;
            let ideals = ideals
                .iter()
                .map(|s| ideal(&r, s))
                .collect::<Result<Vec<_>, _>>()?;
            let rep = power_regularity_bound(&ideals, field, &ctx.limits)?;
            let doc = RegBoundDoc::new(&rep, field);
            write_reg_bound(ctx.out, &doc)?;
            ctx.emit(&doc)?;
            Ok(EXIT_OK)
        }
        Cmd::VerifyReg { ideals, n_max } => {
            let r = ctx.ring()?;
            let field = ctx.field()?;
            let ideals = ideals
                .iter()
                .map(|s| ideal(&r, s))
                .collect::<Result<Vec<_>, _>>()?;
            let v = verify_power_regularity(&ideals, *n_max, field, &ctx.limits)?;
            let doc = VerifyRegDoc::new(&v, field);
            if doc.holds {
                write_reg_bound(ctx.out, &doc.report)?;
                for row in &doc.rows {
                    write!(
                        ctx.out,
                        "n = {}: reg = {} <= {}",
                        row.n, row.regularity, row.bound
                    )?;
                    if let Some(b) = row.stable_bound {
                        write!(ctx.out, ", <= n reg(I) = {b}")?;
                    }
                    writeln!(ctx.out, "  (ratio {})", row.slack_ratio)?;
                }
            }
            ctx.verdict(doc.holds, &doc)
        }
        Cmd::Katzman { p, e, seed } => {
            if cli.characteristic != 0 && u64::from(cli.characteristic) != *p {
                return Err(Failure::Usage(format!(
                    "--char {} disagrees with --p {p}",
                    cli.characteristic
                )));
            }
            let mut rng = random::rng(*seed);
            let inst = build_instance(*p, *e, &mut rng, &ctx.limits)?;
            let cert = verify_katzman(&inst, &ctx.limits)?;
            let growth = growth_exponent(&inst);
            let doc = KatzmanDoc::new(&cert, growth.as_ref().ok());
            if let Err(e) = &growth {
                writeln!(ctx.err, "growth exponent: {e}")?;
            }
            if doc.certified {
                writeln!(ctx.out, "p = {}, q = {}, τ = {}", doc.p, doc.q, doc.tau)?;
                writeln!(ctx.out, "J = {}", doc.j_q.join(", "))?;
                for s in &doc.sigma {
                    writeln!(ctx.out, "σ = {s}")?;
                }
                for c in &doc.checks {
                    writeln!(ctx.out, "({}) {}: ok", c.label, c.claim)?;
                }
                for g in &doc.growth {
                    writeln!(
                        ctx.out,
                        "least N with (√Q)^N ⊆ Q for {}: {}",
                        g.component, g.least_power
                    )?;
                }
                writeln!(
                    ctx.out,
                    "growth exponent {} (bound 2q = {})",
                    doc.growth_exponent, doc.bound
                )?;
            }
            ctx.verdict(doc.certified, &doc)
        }
        Cmd::Selftest {
            seed,
            budget,
            inject_fault,
        } => Ok(selftest::run(
            *seed,
            *budget,
            *inject_fault,
            ctx.out,
            ctx.err,
        )?),
    }
}

fn write_reg_bound(out: &mut dyn Write, doc: &RegBoundDoc) -> std::io::Result<()> {
    let big_l = doc.big_l.map_or("none".to_string(), |v| v.to_string());
    writeln!(
        out,
        "l = {}, d = {}, m = {}, r = {}, L = {big_l}, B = {}",
        doc.l, doc.d, doc.m, doc.r, doc.bound
    )?;
    for w in &doc.witnesses {
        writeln!(
            out,
            "S = {{{}}}, x_q = {}: reg({}) = {}, value {}",
            w.subset.join(", "),
            w.pivot,
            w.sub_ideal,
            w.sub_regularity,
            w.value
        )?;
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let limits = cli.limits.limits();
    let mut ctx = Ctx {
        cli: &cli,
        limits,
        out,
        err,
    };
    match dispatch(&mut ctx) {
        Ok(code) => code,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Lib(e @ Error::Resource { .. }) => (EXIT_RESOURCE, e.to_string()),
                Failure::Lib(e @ (Error::Invariant(_) | Error::Engine(_))) => {
                    (EXIT_COUNTEREXAMPLE, e.to_string())
                }
                Failure::Lib(e) => (EXIT_USAGE, e.to_string()),
                Failure::Io(e) => (EXIT_USAGE, format!("i/o error: {e}")),
            };
            let _ = writeln!(ctx.err, "error: {msg}");
            code
        }
    }
}
