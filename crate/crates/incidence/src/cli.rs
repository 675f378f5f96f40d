//! Command-line front end: vanishing queries, character queries, grid
//! tables, regularity, and the formula-vs-oracle verification harness.
//!
//! Everything prints deterministically: JSON objects serialize with
//! sorted keys, grids stream in fixed loop order, and characters list
//! terms in descending lexicographic order.  Output goes to stdout
//! unless `--out` (or the `INCIDENCE_OUT` environment variable, which
//! `--out` overrides) names a file.

use std::env;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::char_ring::Character;
use crate::characters::{self, BundleChar, CharacterTable};
use crate::oracle::Oracle;
use crate::vanishing::{self, CohomologyProfile, DegreeFlag, Provenance, Rule};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser)]
#[command(
    name = "incidence",
    version,
    about = "Cohomology of divided powers of the tautological subsheaf \
             and of line bundles on the incidence correspondence",
    after_help = "Output goes to stdout unless --out or INCIDENCE_OUT names a file."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-degree vanishing profile of H^*(X, O(a, b))
    Cohomology(CohomologyArgs),
    /// Exact SL_3 character of H^i (n = 3 only)
    Character(CharacterArgs),
    /// Stream vanishing flags for a rectangular grid of twists
    Table(TableArgs),
    /// Castelnuovo-Mumford regularity of D^d R, with optional oracle scan
    Regularity(RegularityArgs),
    /// Run the formula-vs-oracle verification grid; exit 0 iff all rows match
    Verify(VerifyArgs),
}

#[derive(Args)]
struct OutArg {
    /// Write output to this file instead of stdout (overrides INCIDENCE_OUT)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CohomologyArgs {
    /// Rank of V (n >= 3)
    #[arg(long)]
    n: usize,
    /// Characteristic (prime)
    #[arg(long)]
    p: u64,
    /// First Picard coordinate
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    /// Second Picard coordinate
    #[arg(long, allow_negative_numbers = true)]
    b: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct CharacterArgs {
    /// Rank of V (character formulas require n = 3)
    #[arg(long)]
    n: usize,
    /// Characteristic (prime)
    #[arg(long)]
    p: u64,
    /// Divided-power degree (pair form: --d with --e)
    #[arg(long)]
    d: Option<i64>,
    /// Shifted twist, as in h^i(d, e) (pair form)
    #[arg(long)]
    e: Option<i64>,
    /// First Picard coordinate (bundle form: --a --b --i)
    #[arg(long, allow_negative_numbers = true)]
    a: Option<i64>,
    /// Second Picard coordinate (bundle form)
    #[arg(long, allow_negative_numbers = true)]
    b: Option<i64>,
    /// Cohomological degree (bundle form)
    #[arg(long)]
    i: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct TableArgs {
    /// Rank of V (n >= 3)
    #[arg(long)]
    n: usize,
    /// Characteristic (prime)
    #[arg(long)]
    p: u64,
    #[arg(long = "a-min", allow_negative_numbers = true)]
    a_min: i64,
    #[arg(long = "a-max", allow_negative_numbers = true)]
    a_max: i64,
    #[arg(long = "b-min", allow_negative_numbers = true)]
    b_min: i64,
    #[arg(long = "b-max", allow_negative_numbers = true)]
    b_max: i64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct RegularityArgs {
    /// Rank of V (n >= 3)
    #[arg(long)]
    n: usize,
    /// Characteristic (prime)
    #[arg(long)]
    p: u64,
    /// Divided-power degree (d >= 1)
    #[arg(long)]
    d: i64,
    /// Cross-check the formula against a downward oracle scan
    #[arg(long)]
    scan: bool,
    /// Upper end of the scan (default: formula value + 2)
    #[arg(long = "m-max")]
    m_max: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Rank of V (n >= 3)
    #[arg(long)]
    n: usize,
    /// Characteristic (prime)
    #[arg(long)]
    p: u64,
    /// Largest divided-power degree in the grid (default: 14 for n = 3, 8 otherwise)
    #[arg(long = "d-max")]
    d_max: Option<i64>,
    /// Largest shifted twist in the grid (default: as --d-max)
    #[arg(long = "e-max")]
    e_max: Option<i64>,
    #[command(flatten)]
    out: OutArg,
}

/// Parses `args` and runs one command, returning the process exit code.
///
/// 0 = success, 1 = a verification mismatch, 2 = usage or domain error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Cohomology(args) => {
            let profile = vanishing::full_profile(args.n, args.p, args.a, args.b)?;
            let mut w = open_sink(&args.out)?;
            write_profile(&profile, args.p, args.format, &mut w)?;
            w.flush()?;
            Ok(0)
        }
        Command::Character(args) => cmd_character(args),
        Command::Table(args) => {
            if args.a_min > args.a_max || args.b_min > args.b_max {
                return Err(Error::Domain("empty grid: min bound exceeds max bound".into()));
            }
            let mut w = open_sink(&args.out)?;
            write_table(
                args.n,
                args.p,
                args.a_min..=args.a_max,
                args.b_min..=args.b_max,
                args.format,
                &mut w,
            )?;
            w.flush()?;
            Ok(0)
        }
        Command::Regularity(args) => cmd_regularity(args),
        Command::Verify(args) => {
            if args.n < 3 {
                return Err(Error::Domain(format!(
                    "verification grids need n >= 3, got n = {}",
                    args.n
                )));
            }
            let d_max = args.d_max.unwrap_or(if args.n == 3 { 14 } else { 8 });
            let e_max = args.e_max.unwrap_or(d_max);
            let mut w = open_sink(&args.out)?;
            let summary = verify_grid(args.n, args.p, d_max, e_max, &mut w)?;
            w.flush()?;
            eprintln!(
                "verify: {} rows, {} mismatches",
                summary.rows, summary.mismatches
            );
            Ok(if summary.mismatches == 0 { 0 } else { 1 })
        }
    }
}

fn open_sink(out: &OutArg) -> Result<Box<dyn Write>> {
    let path = out
        .out
        .clone()
        .or_else(|| env::var_os("INCIDENCE_OUT").map(PathBuf::from));
    match path {
        Some(path) => {
            let file = File::create(&path)
                .map_err(|e| Error::Io(format!("cannot open {}: {e}", path.display())))?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout()))),
    }
}

fn rule_name(rule: Rule) -> &'static str {
    match rule {
        Rule::Kempf => "kempf",
        Rule::BlueStrip => "blue-strip",
        Rule::ProjectiveSpace => "projective-space",
        Rule::RegionVi => "region-vi",
    }
}

// "region-vi+serre+swap" style provenance label for text and CSV output
fn provenance_label(prov: &Provenance) -> String {
    let mut label = rule_name(prov.rule).to_string();
    if prov.serre {
        label.push_str("+serre");
    }
    if prov.swapped {
        label.push_str("+swap");
    }
    label
}

fn flag_name(flag: DegreeFlag) -> &'static str {
    match flag {
        DegreeFlag::Zero => "zero",
        DegreeFlag::Nonzero => "nonzero",
    }
}

/// Renders one vanishing profile in the chosen format.
pub fn write_profile(
    profile: &CohomologyProfile,
    p: u64,
    format: Format,
    w: &mut dyn Write,
) -> Result<()> {
    let top = profile.top_degree();
    match format {
        Format::Text => {
            writeln!(
                w,
                "O({}, {}) on X, n = {}, p = {}",
                profile.a, profile.b, profile.n, p
            )?;
            writeln!(w, "rule: {}", provenance_label(&profile.provenance))?;
            for i in 0..=top {
                writeln!(w, "H^{i}: {}", flag_name(profile.flag(i)))?;
            }
        }
        Format::Json => {
            let flags: Vec<&str> = (0..=top).map(|i| flag_name(profile.flag(i))).collect();
            let value = json!({
                "n": profile.n,
                "p": p,
                "a": profile.a,
                "b": profile.b,
                "rule": rule_name(profile.provenance.rule),
                "serre": profile.provenance.serre,
                "swapped": profile.provenance.swapped,
                "flags": flags,
                "nonzero_degrees": profile.nonzero_degrees(),
            });
            writeln!(w, "{value}")?;
        }
        Format::Csv => {
            writeln!(w, "a,b,i,flag,rule")?;
            write_profile_rows(profile, w)?;
        }
    }
    Ok(())
}

fn write_profile_rows(profile: &CohomologyProfile, w: &mut dyn Write) -> Result<()> {
    let rule = provenance_label(&profile.provenance);
    for i in 0..=profile.top_degree() {
        writeln!(
            w,
            "{},{},{},{},{}",
            profile.a,
            profile.b,
            i,
            flag_name(profile.flag(i)),
            rule
        )?;
    }
    Ok(())
}

/// Streams the vanishing table for a grid of twists, row by row.
///
/// CSV columns are a,b,i,flag,rule; JSON output is one object per row
/// with the same fields; text coincides with CSV.  Rows appear in
/// ascending (a, b, i) order and nothing is materialized, so large
/// grids stream in constant memory.
pub fn write_table(
    n: usize,
    p: u64,
    a_range: std::ops::RangeInclusive<i64>,
    b_range: std::ops::RangeInclusive<i64>,
    format: Format,
    w: &mut dyn Write,
) -> Result<()> {
    if format != Format::Json {
        writeln!(w, "a,b,i,flag,rule")?;
    }
    for a in a_range {
        for b in b_range.clone() {
            let profile = vanishing::full_profile(n, p, a, b)?;
            match format {
                Format::Json => {
                    let rule = provenance_label(&profile.provenance);
                    for i in 0..=profile.top_degree() {
                        let value = json!({
                            "a": a,
                            "b": b,
                            "i": i,
                            "flag": flag_name(profile.flag(i)),
                            "rule": rule,
                        });
                        writeln!(w, "{value}")?;
                    }
                }
                Format::Csv | Format::Text => write_profile_rows(&profile, w)?,
            }
        }
    }
    Ok(())
}

fn char_dim_u64(c: &Character) -> Result<u64> {
    u64::try_from(c.dim_eval())
        .map_err(|_| Error::Internal("character dimension overflows u64".into()))
}

// {"dim", "highest_weight", "terms"} for one cohomology character;
// highest_weight is null for the zero character
fn side_value(c: &Character) -> serde_json::Value {
    let dim = serde_json::Number::from_str(&c.dim_eval().to_string())
        .expect("integer string parses as JSON number");
    let hw = c.highest_weight().ok().map(|w| w.exps().to_vec());
    json!({
        "dim": dim,
        "highest_weight": hw,
        "terms": c.json_terms(),
    })
}

fn write_side_text(label: &str, c: &Character, w: &mut dyn Write) -> Result<()> {
    if c.is_zero() {
        writeln!(w, "{label}: 0")?;
    } else {
        let hw = c.highest_weight()?;
        writeln!(w, "{label}: dim {}, highest weight {:?}", c.dim_eval(), hw.exps())?;
        writeln!(w, "  {c}")?;
    }
    Ok(())
}

fn cmd_character(args: CharacterArgs) -> Result<i32> {
    if args.n != 3 {
        return Err(Error::Domain(format!(
            "character formulas are implemented for n = 3 only (got n = {}); \
             the cohomology and table commands cover vanishing for any n >= 3",
            args.n
        )));
    }
    if args.format == Format::Csv {
        return Err(Error::Domain(
            "character queries have no CSV form; use --format json or text".into(),
        ));
    }
    let table = CharacterTable::new(args.p)?;
    let mut w = open_sink(&args.out)?;
    match (args.d, args.e, args.a, args.b, args.i) {
        (Some(d), Some(e), None, None, None) => {
            let h0 = table.h0(d, e)?;
            let h1 = table.h1(d, e)?;
            match args.format {
                Format::Json => {
                    let value = json!({
                        "n": 3,
                        "p": args.p,
                        "d": d,
                        "e": e,
                        "h0": side_value(&h0),
                        "h1": side_value(&h1),
                    });
                    writeln!(w, "{value}")?;
                }
                _ => {
                    writeln!(w, "D^{d}R({}) on P^2, p = {}", e - 1, args.p)?;
                    write_side_text("h0", &h0, &mut w)?;
                    write_side_text("h1", &h1, &mut w)?;
                }
            }
        }
        (None, None, Some(a), Some(b), Some(i)) => {
            let bundle = table.line_bundle_character(a, b, i)?;
            match args.format {
                Format::Json => {
                    let value = json!({
                        "n": 3,
                        "p": args.p,
                        "a": a,
                        "b": b,
                        "i": i,
                        "computable": bundle.character().is_some(),
                        "h": bundle.character().map(side_value),
                    });
                    writeln!(w, "{value}")?;
                }
                _ => {
                    writeln!(w, "H^{i}(X, O({a}, {b})), n = 3, p = {}", args.p)?;
                    match &bundle {
                        BundleChar::Computed(c) => write_side_text("character", c, &mut w)?,
                        BundleChar::NotComputable => writeln!(
                            w,
                            "character: not computable (global sections of a \
                             dominant twist; no closed form implemented)"
                        )?,
                    }
                }
            }
        }
        _ => {
            return Err(Error::Domain(
                "give either --d and --e, or --a, --b and --i".into(),
            ))
        }
    }
    w.flush()?;
    Ok(0)
}

fn cmd_regularity(args: RegularityArgs) -> Result<i32> {
    let formula = vanishing::regularity_formula(args.n, args.p, args.d)?;
    let scan = if args.scan {
        let m_max = args.m_max.unwrap_or(formula + 2);
        Some(crate::oracle::regularity_scan(args.n, args.p, args.d, m_max)?)
    } else {
        None
    };
    let matched = scan.map(|s| s == formula);
    let mut w = open_sink(&args.out)?;
    match args.format {
        Format::Json => {
            let value = json!({
                "n": args.n,
                "p": args.p,
                "d": args.d,
                "regularity": formula,
                "scan": scan,
                "match": matched,
            });
            writeln!(w, "{value}")?;
        }
        Format::Csv => {
            writeln!(w, "n,p,d,regularity,scan,match")?;
            writeln!(
                w,
                "{},{},{},{},{},{}",
                args.n,
                args.p,
                args.d,
                formula,
                scan.map_or(String::new(), |s| s.to_string()),
                matched.map_or(String::new(), |m| m.to_string()),
            )?;
        }
        Format::Text => {
            writeln!(
                w,
                "regularity of D^{}R, n = {}, p = {}: {formula}",
                args.d, args.n, args.p
            )?;
            if let Some(s) = scan {
                let verdict = if matched == Some(true) { "matches" } else { "MISMATCH" };
                writeln!(w, "oracle scan: {s} ({verdict})")?;
            }
        }
    }
    w.flush()?;
    Ok(if matched == Some(false) { 1 } else { 0 })
}

/// Outcome of a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifySummary {
    pub rows: u64,
    pub mismatches: u64,
}

struct Reporter {
    n: usize,
    p: u64,
    rows: u64,
    mismatches: u64,
}

impl Reporter {
    #[allow(clippy::too_many_arguments)]
    fn emit(
        &mut self,
        w: &mut dyn Write,
        d: i64,
        e_twist: i64,
        h0_dim: u64,
        h1_dim: u64,
        source: &str,
        ok: bool,
    ) -> Result<()> {
        let value = json!({
            "n": self.n,
            "p": self.p,
            "d": d,
            "e_twist": e_twist,
            "h0_dim": h0_dim,
            "h1_dim": h1_dim,
            "formula_source": source,
            "match": ok,
        });
        writeln!(w, "{value}")?;
        self.rows += 1;
        if !ok {
            self.mismatches += 1;
        }
        Ok(())
    }
}

/// Runs every formula-vs-oracle pair applicable to `(n, p)` and writes
/// one JSON line per grid point.
///
/// Sources: `recursion` (n = 3 character recursion vs oracle, the full
/// `d <= d_max`, `e <= e_max` grid), `truncated-schur` (small-d closed
/// form), `frobenius-corner` (corner values), `symmetric-power` (the
/// `d < p` specialization), `region-vi-flags` (vanishing predictions vs
/// oracle dimensions), and `regularity` (formula vs downward scan).
pub fn verify_grid(
    n: usize,
    p: u64,
    d_max: i64,
    e_max: i64,
    w: &mut dyn Write,
) -> Result<VerifySummary> {
    let oracle = Oracle::new(n, p)?;
    let mut rep = Reporter { n, p, rows: 0, mismatches: 0 };

    if n == 3 {
        let table = CharacterTable::new(p)?;
        for d in 1..=d_max {
            for e in 0..=e_max {
                let (o0, o1) = oracle.h_characters(d, e - 1)?;
                let ok = o0 == table.h0(d, e)? && o1 == table.h1(d, e)?;
                let (d0, d1) = (char_dim_u64(&o0)?, char_dim_u64(&o1)?);
                rep.emit(w, d, e - 1, d0, d1, "recursion", ok)?;
            }
        }
    }

    let e_hi = (n as i64 - 1) * p as i64 - (n as i64) + 2;
    for d in p as i64..(2 * p as i64).min(d_max + 1) {
        for e_twist in d - 1..=e_hi {
            let (o0, o1) = oracle.h_characters(d, e_twist)?;
            let ok = o1 == characters::char_small_d(n, p, d, e_twist)?;
            let (d0, d1) = (char_dim_u64(&o0)?, char_dim_u64(&o1)?);
            rep.emit(w, d, e_twist, d0, d1, "truncated-schur", ok)?;
        }
    }

    for t in 1..p {
        for k in 0u32.. {
            let q = (p as i64).pow(k);
            if q > 9 {
                break;
            }
            let d = t as i64 * q;
            if d > 12.min(d_max) {
                continue;
            }
            let corner = characters::corner_char(n, p, t, k)?;
            let e_twist = corner.a - 1;
            let (o0, o1) = oracle.h_characters(d, e_twist)?;
            let ok = o1 == corner.character;
            let (d0, d1) = (char_dim_u64(&o0)?, char_dim_u64(&o1)?);
            rep.emit(w, d, e_twist, d0, d1, "frobenius-corner", ok)?;
        }
    }

    for a in 1..p as i64 {
        if a > d_max {
            break;
        }
        let (o0, o1) = oracle.h_characters(a, a - 2)?;
        let ok = o1 == Character::schur2(n, a - 1, a - 1);
        let (d0, d1) = (char_dim_u64(&o0)?, char_dim_u64(&o1)?);
        rep.emit(w, a, a - 2, d0, d1, "symmetric-power", ok)?;
    }

    for d in 1..=12.min(d_max) {
        let b = -d - n as i64 + 1;
        for a in d..=d + 20 {
            let flags = vanishing::region_vi_vanishing(n, p, a, b)?;
            let (h0, h1) = oracle.h_dims(d, a - 1)?;
            let ok = (h0 > 0) == flags.hn2_nonzero && (h1 > 0) == flags.hn1_nonzero;
            rep.emit(w, d, a - 1, h0, h1, "region-vi-flags", ok)?;
        }
    }

    for d in 1..=10.min(d_max) {
        let formula = vanishing::regularity_formula(n, p, d)?;
        let scan = oracle.regularity_scan(d, formula + 2)?;
        let (h0, h1) = oracle.h_dims(d, formula - 2)?;
        rep.emit(w, d, formula - 2, h0, h1, "regularity", scan == formula)?;
    }

    Ok(VerifySummary { rows: rep.rows, mismatches: rep.mismatches })
}
