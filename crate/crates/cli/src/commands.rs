use std::io::Write;

use serde::Serialize;

use antipal::digits::{is_antipalindrome, to_digits};
use antipal::enumerate::{next_antipalindrome, Antipalindromes};
use antipal::multibase::{
    antipalindromic_bases, block_palindrome_check, common_antipalindromes_between,
    composite_two_bases, factorial_construction, gcd_construction, paired_base_construction,
    BlockCheck, PairedBases, TwoBases,
};
use antipal::powers::{
    construct_odd_power, construct_power_family, power_hits_for_roots, root_range, table_cell,
    TableCell,
};
use antipal::primes::{antipalindromic_primes_base3, antipalindromic_primes_general};
use antipal::sums::{decompose, Reachability};
use antipal::theorems::{find_suite, Suite, SuiteReport, SUITES};
use antipal::{DigitString, MultibaseReport, PowerHit, PrimeRecord, SearchRange};

use crate::output::{csv_field, subscripted, Emitter, Expansion, Format, Record, EXPANSION_HEADER};
use crate::parallel::{chunks, ordered_map, Progress};
use crate::{CliError, Command, Construct, GlobalOpts, Sums, TableKind, TablesArgs};

type Out<'a> = &'a mut dyn Write;

pub fn run(opts: &GlobalOpts, command: Command, out: Out) -> Result<(), CliError> {
    match command {
        Command::Expand { m, base } => {
            let mut e = Emitter::new(out, opts.format, EXPANSION_HEADER)?;
            e.emit(&to_digits(m, base)?)?;
            e.finish()?;
        }
        Command::Check { m, base } => {
            let digits = to_digits(m, base)?;
            let record = CheckRecord { value: m, base, antipalindromic: is_antipalindrome(&digits), digits };
            let mut e = Emitter::new(out, opts.format, CHECK_HEADER)?;
            e.emit(&record)?;
            e.finish()?;
        }
        Command::Enumerate { base, from, below } => enumerate(opts, base, from, below, out)?,
        Command::Next { m, base } => {
            let value = next_antipalindrome(base, m)?;
            let mut e = Emitter::new(out, opts.format, EXPANSION_HEADER)?;
            e.emit(&Expansion { value: value as u128, digits: to_digits(value, base)? })?;
            e.finish()?;
        }
        Command::Primes { base, from, below, count } => primes(opts, base, from, below, count, out)?,
        Command::Powers { base, exponent, limit, count } => {
            powers(opts, base, exponent, limit, count, out)?
        }
        Command::Construct(c) => construct(opts, c, out)?,
        Command::Multibase { m } => {
            let mut e = Emitter::new(out, opts.format, EXPANSION_HEADER)?;
            e.emit(&antipalindromic_bases(m)?)?;
            e.finish()?;
        }
        Command::Common { b1, b2, limit } => common(opts, b1, b2, limit, out)?,
        Command::Sums(s) => sums(opts, s, out)?,
        Command::Tables(t) => tables(opts, t, out)?,
        Command::Verify { suite, limit, list } => verify(opts, &suite, limit, list, out)?,
    }
    Ok(())
}

/// Rejects a bad base before any output (such as a CSV header) is written.
fn check_base(base: u64) -> Result<(), CliError> {
    to_digits(1, base)?;
    Ok(())
}

fn range(from: u64, below: u64) -> Result<SearchRange, CliError> {
    Ok(SearchRange::new(from, below.max(from))?)
}

fn enumerate(opts: &GlobalOpts, base: u64, from: u64, below: u64, out: Out) -> Result<(), CliError> {
    let range = range(from, below)?;
    check_base(base)?;
    let mut e = Emitter::new(out, opts.format, EXPANSION_HEADER)?;
    let progress = Progress::new("enumerate", !opts.quiet);
    ordered_map(
        &chunks(range, opts.workers),
        opts.workers,
        &progress,
        |r| Ok::<_, CliError>(Antipalindromes::between(base, r.lo(), r.hi() - 1)?.collect::<Vec<_>>()),
        |values| {
            for value in values {
                e.emit(&Expansion { value: value as u128, digits: to_digits(value, base)? })?;
            }
            Ok(())
        },
    )?;
    e.finish()?;
    Ok(())
}

const COUNT_HEADER: &str = "base,lo,hi,count";

#[derive(Serialize)]
struct RangeCount {
    base: u64,
    lo: u64,
    hi: u64,
    count: u64,
}

impl Record for RangeCount {
    fn text(&self) -> String {
        self.count.to_string()
    }

    fn csv(&self) -> String {
        format!("{},{},{},{}", self.base, self.lo, self.hi, self.count)
    }
}

fn primes(opts: &GlobalOpts, base: u64, from: u64, below: u64, count: bool, out: Out) -> Result<(), CliError> {
    let range = range(from, below)?;
    check_base(base)?;
    let header = if count { COUNT_HEADER } else { EXPANSION_HEADER };
    let mut e = Emitter::new(out, opts.format, header)?;
    let progress = Progress::new("primes", !opts.quiet);
    let mut total = 0u64;
    ordered_map(
        &chunks(range, opts.workers),
        opts.workers,
        &progress,
        |r| -> Result<Vec<u64>, CliError> {
            if base == 3 {
                return Ok(antipalindromic_primes_base3(*r).map(|p| p.value).collect());
            }
            Ok(antipalindromic_primes_general(base, *r)?)
        },
        |values| {
            total += values.len() as u64;
            if !count {
                for value in values {
                    if base == 3 {
                        e.emit(&PrimeRecord { value, base3_digits: to_digits(value, 3)? })?;
                    } else {
                        e.emit(&Expansion { value: value as u128, digits: to_digits(value, base)? })?;
                    }
                }
            }
            Ok(())
        },
    )?;
    if count {
        e.emit(&RangeCount { base, lo: range.lo(), hi: range.hi(), count: total })?;
    }
    e.finish()?;
    Ok(())
}

impl Record for PrimeRecord {
    fn text(&self) -> String {
        format!("{} {}", self.value, subscripted(&self.base3_digits))
    }

    fn csv(&self) -> String {
        format!("{},3,{}", self.value, self.base3_digits.render_spaced())
    }
}

impl Record for PowerHit {
    fn text(&self) -> String {
        format!("{}^{} = {} {}", self.root, self.exponent, self.value, subscripted(&self.digits))
    }

    fn csv(&self) -> String {
        format!("{},{},{}", self.value, self.base, self.digits.render_spaced())
    }
}

const POWER_COUNT_HEADER: &str = "base,exponent,limit,count";

#[derive(Serialize)]
struct PowerCount {
    base: u64,
    exponent: u32,
    limit: u64,
    count: u64,
}

impl Record for PowerCount {
    fn text(&self) -> String {
        self.count.to_string()
    }

    fn csv(&self) -> String {
        format!("{},{},{},{}", self.base, self.exponent, self.limit, self.count)
    }
}

fn powers(opts: &GlobalOpts, base: u64, k: u32, limit: u64, count: bool, out: Out) -> Result<(), CliError> {
    let roots = root_range(k, limit)?;
    check_base(base)?;
    let header = if count { POWER_COUNT_HEADER } else { EXPANSION_HEADER };
    let mut e = Emitter::new(out, opts.format, header)?;
    let parts = if roots.is_empty() {
        Vec::new()
    } else {
        chunks(SearchRange::new(*roots.start(), *roots.end() + 1)?, opts.workers)
    };
    let progress = Progress::new("powers", !opts.quiet);
    let mut total = 0u64;
    ordered_map(
        &parts,
        opts.workers,
        &progress,
        |r| Ok::<_, CliError>(power_hits_for_roots(base, k, r.lo()..=r.hi() - 1)?.collect::<Vec<_>>()),
        |hits| {
            total += hits.len() as u64;
            if !count {
                for h in hits {
                    e.emit(&h)?;
                }
            }
            Ok(())
        },
    )?;
    if count {
        e.emit(&PowerCount { base, exponent: k, limit, count: total })?;
    }
    e.finish()?;
    Ok(())
}

const CHECK_HEADER: &str = "value,base,antipalindromic,digits";

#[derive(Serialize)]
struct CheckRecord {
    value: u64,
    base: u64,
    antipalindromic: bool,
    digits: DigitString,
}

impl Record for CheckRecord {
    fn text(&self) -> String {
        format!("{} {}", self.antipalindromic, self.digits.render())
    }

    fn csv(&self) -> String {
        format!("{},{},{},{}", self.value, self.base, self.antipalindromic, self.digits.render_spaced())
    }
}

impl Record for MultibaseReport {
    fn text(&self) -> String {
        let mut lines = vec![format!("{} is antipalindromic in {} bases", self.value, self.entries.len())];
        lines.extend(self.entries.iter().map(|d| format!("{:>6}: {}", d.base(), d.render_spaced())));
        lines.join("\n")
    }

    fn csv(&self) -> String {
        self.entries
            .iter()
            .map(|d| format!("{},{},{}", self.value, d.base(), d.render_spaced()))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

const TWO_BASE_HEADER: &str = "value,base1,digits1,base2,digits2";

fn two_base_text(value: u64, first: &DigitString, second: &DigitString) -> String {
    format!("{value} {} {}", subscripted(first), subscripted(second))
}

fn two_base_csv(value: u64, first: &DigitString, second: &DigitString) -> String {
    format!(
        "{value},{},{},{},{}",
        first.base(),
        first.render_spaced(),
        second.base(),
        second.render_spaced()
    )
}

impl Record for TwoBases {
    fn text(&self) -> String {
        two_base_text(self.value, &self.first, &self.second)
    }

    fn csv(&self) -> String {
        two_base_csv(self.value, &self.first, &self.second)
    }
}

impl Record for PairedBases {
    fn text(&self) -> String {
        two_base_text(self.value, &self.first, &self.second)
    }

    fn csv(&self) -> String {
        two_base_csv(self.value, &self.first, &self.second)
    }
}

const BLOCK_HEADER: &str = "value,base,block_len,wide_base,wide_digits,blocks,holds";

fn render_blocks(blocks: &[Vec<u64>], base: u64) -> String {
    let sep = if base <= 10 { "" } else { "." };
    blocks
        .iter()
        .map(|b| b.iter().map(u64::to_string).collect::<Vec<_>>().join(sep))
        .collect::<Vec<_>>()
        .join(" ")
}

impl Record for BlockCheck {
    fn text(&self) -> String {
        let verdict = if self.holds { "antipalindromic" } else { "not antipalindromic" };
        format!(
            "{} {} blocks [{}]: {verdict} in base {}",
            self.value,
            subscripted(&self.wide),
            render_blocks(&self.blocks, self.base),
            self.base
        )
    }

    fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.value,
            self.base,
            self.block_len,
            self.wide.base(),
            self.wide.render_spaced(),
            render_blocks(&self.blocks, self.base),
            self.holds
        )
    }
}

fn construct(opts: &GlobalOpts, c: Construct, out: Out) -> Result<(), CliError> {
    match c {
        Construct::Family { n, k, m } => {
            let hit = construct_power_family(n, k, m)?;
            let mut e = Emitter::new(out, opts.format, EXPANSION_HEADER)?;
            e.emit(&hit)?;
            e.finish()?;
        }
        Construct::OddPower { m, k, base } => {
            let hit = construct_odd_power(m, k, base)?;
            let mut e = Emitter::new(out, opts.format, EXPANSION_HEADER)?;
            e.emit(&hit)?;
            e.finish()?;
        }
        Construct::Composite { a } => {
            let t = composite_two_bases(a)?;
            let mut e = Emitter::new(out, opts.format, TWO_BASE_HEADER)?;
            e.emit(&t)?;
            e.finish()?;
        }
        Construct::Factorial { n } => {
            let r = factorial_construction(n)?;
            let mut e = Emitter::new(out, opts.format, EXPANSION_HEADER)?;
            e.emit(&r)?;
            e.finish()?;
        }
        Construct::Paired { base } => {
            let p = paired_base_construction(base)?;
            let mut e = Emitter::new(out, opts.format, TWO_BASE_HEADER)?;
            e.emit(&p)?;
            e.finish()?;
        }
        Construct::Gcd { p, q } => {
            let g = gcd_construction(p, q)?;
            let mut e = Emitter::new(out, opts.format, TWO_BASE_HEADER)?;
            e.emit(&g)?;
            e.finish()?;
        }
        Construct::Block { m, base, block_len } => {
            let b = block_palindrome_check(m, base, block_len)?;
            let mut e = Emitter::new(out, opts.format, BLOCK_HEADER)?;
            e.emit(&b)?;
            e.finish()?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CommonRecord {
    value: u64,
    first: DigitString,
    second: DigitString,
}

impl Record for CommonRecord {
    fn text(&self) -> String {
        two_base_text(self.value, &self.first, &self.second)
    }

    fn csv(&self) -> String {
        two_base_csv(self.value, &self.first, &self.second)
    }
}

fn common(opts: &GlobalOpts, b1: u64, b2: u64, limit: u64, out: Out) -> Result<(), CliError> {
    // Validates both bases before any output is written.
    let _ = common_antipalindromes_between(b1, b2, 2, 1)?;
    let mut e = Emitter::new(out, opts.format, TWO_BASE_HEADER)?;
    let progress = Progress::new("common", !opts.quiet);
    ordered_map(
        &chunks(SearchRange::below(limit), opts.workers),
        opts.workers,
        &progress,
        |r| Ok::<_, CliError>(common_antipalindromes_between(b1, b2, r.lo(), r.hi() - 1)?.collect::<Vec<_>>()),
        |values| {
            for value in values {
                e.emit(&CommonRecord { value, first: to_digits(value, b1)?, second: to_digits(value, b2)? })?;
            }
            Ok(())
        },
    )?;
    e.finish()?;
    Ok(())
}

const DECOMPOSITION_HEADER: &str = "target,base,terms";

#[derive(Serialize)]
struct DecompositionRecord {
    target: u64,
    base: u64,
    terms: Option<Vec<u64>>,
}

impl Record for DecompositionRecord {
    fn text(&self) -> String {
        match &self.terms {
            Some(t) => {
                let sum = t.iter().map(u64::to_string).collect::<Vec<_>>().join(" + ");
                format!("{} = {sum}", self.target)
            }
            None => format!("{} none", self.target),
        }
    }

    fn csv(&self) -> String {
        let terms = self
            .terms
            .as_ref()
            .map(|t| t.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
            .unwrap_or_default();
        format!("{},{},{terms}", self.target, self.base)
    }
}

#[derive(Serialize)]
struct ValueRecord {
    value: u64,
}

impl Record for ValueRecord {
    fn text(&self) -> String {
        self.value.to_string()
    }

    fn csv(&self) -> String {
        self.value.to_string()
    }
}

fn sums(opts: &GlobalOpts, s: Sums, out: Out) -> Result<(), CliError> {
    match s {
        Sums::Decompose { n, base, max_terms } => {
            let max_terms = usize::try_from(max_terms).unwrap_or(usize::MAX);
            let d = decompose(n, base, max_terms)?;
            let record = DecompositionRecord { target: n, base, terms: d.map(|d| d.terms) };
            let mut e = Emitter::new(out, opts.format, DECOMPOSITION_HEADER)?;
            e.emit(&record)?;
            e.finish()?;
        }
        Sums::Verify { limit, base, palindromes } => {
            if !opts.quiet {
                eprintln!("sums: building reachability below {limit}");
            }
            let reach = Reachability::build(base, limit)?;
            let range = SearchRange::below(limit);
            let exceptions = if palindromes {
                reach.palindrome_exceptions_in(range)
            } else {
                reach.exceptions_in(range)
            };
            let mut e = Emitter::new(out, opts.format, "value")?;
            for value in exceptions {
                e.emit(&ValueRecord { value })?;
            }
            e.finish()?;
        }
    }
    Ok(())
}

pub const TABLE_HEADER: &str = "n,offset,base,exponent,limit,count";

impl Record for TableCell {
    fn text(&self) -> String {
        format!("n^{}+{} = {}: {}", self.exponent, self.offset, self.base, self.count)
    }

    fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n, self.offset, self.base, self.exponent, self.limit, self.count
        )
    }
}

fn tables(opts: &GlobalOpts, t: TablesArgs, out: Out) -> Result<(), CliError> {
    let (k, default_n, default_limit) = match (t.kind, t.exponent) {
        (Some(TableKind::Squares), _) => (2, Some(20..=25), Some(1_000_000_000_000)),
        (Some(TableKind::Biquadrates), _) => (4, Some(4..=12), Some(1_000_000_000_000_000)),
        (None, Some(k)) => (k, None, None),
        (None, None) => return Err(CliError::Usage("give a table kind or --exponent".into())),
    };
    let ns = t.n.or(default_n).ok_or_else(|| CliError::Usage("--n is required".into()))?;
    let limit = t.limit.or(default_limit).ok_or_else(|| CliError::Usage("--limit is required".into()))?;
    let mut offsets = t.offsets.clone();
    offsets.dedup();
    let cells: Vec<(u64, u64)> = offsets
        .iter()
        .flat_map(|&o| ns.clone().map(move |n| (n, o)))
        .collect();
    let progress = Progress::new("tables", !opts.quiet);
    let mut results = Vec::with_capacity(cells.len());
    let format = opts.format;
    let mut e = Emitter::new(out, format, TABLE_HEADER)?;
    ordered_map(
        &cells,
        opts.workers,
        &progress,
        |&(n, o)| table_cell(n, o, k, limit).map_err(CliError::from),
        |cell| {
            if format == Format::Text {
                results.push(cell);
            } else {
                e.emit(&cell)?;
            }
            Ok(())
        },
    )?;
    if format == Format::Text {
        for line in table_grid(k, limit, &ns.collect::<Vec<_>>(), &offsets, &results) {
            e.note(&line)?;
        }
    }
    e.finish()?;
    Ok(())
}

/// Rows per offset, columns per n.
fn table_grid(k: u32, limit: u64, ns: &[u64], offsets: &[u64], cells: &[TableCell]) -> Vec<String> {
    let label_width = format!("n^{k}+{}", offsets.iter().max().unwrap_or(&0)).len().max(1);
    let width = cells
        .iter()
        .map(|c| c.count.to_string().len())
        .chain(ns.iter().map(|n| n.to_string().len()))
        .max()
        .unwrap_or(1);
    let mut lines = vec![format!("antipalindromic powers with exponent {k} below {limit}")];
    let mut header = format!("{:<label_width$}", "n");
    for n in ns {
        header.push_str(&format!(" {n:>width$}"));
    }
    lines.push(header);
    for (row, &o) in offsets.iter().enumerate() {
        let mut line = format!("{:<label_width$}", format!("n^{k}+{o}"));
        for c in &cells[row * ns.len()..(row + 1) * ns.len()] {
            line.push_str(&format!(" {:>width$}", c.count));
        }
        lines.push(line);
    }
    lines
}

const SUITE_HEADER: &str = "name,limit,checked,violations,passed";

impl Record for SuiteReport {
    fn text(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let mut lines = vec![format!(
            "{verdict} {} limit={} checked={} violations={}",
            self.name,
            self.limit,
            self.checked,
            self.violations.len()
        )];
        lines.extend(self.violations.iter().map(|v| format!("  {v}")));
        lines.join("\n")
    }

    fn csv(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.name,
            self.limit,
            self.checked,
            csv_field(&self.violations.join("; ")),
            self.passed()
        )
    }
}

#[derive(Serialize)]
struct SuiteInfo {
    name: &'static str,
    default_limit: u64,
}

impl Record for SuiteInfo {
    fn text(&self) -> String {
        format!("{} {}", self.name, self.default_limit)
    }

    fn csv(&self) -> String {
        format!("{},{}", self.name, self.default_limit)
    }
}

fn verify(opts: &GlobalOpts, name: &str, limit: Option<u64>, list: bool, out: Out) -> Result<(), CliError> {
    if list {
        let mut e = Emitter::new(out, opts.format, "name,default_limit")?;
        for s in SUITES {
            e.emit(&SuiteInfo { name: s.name, default_limit: s.default_limit })?;
        }
        e.finish()?;
        return Ok(());
    }
    let jobs: Vec<(&Suite, u64)> = if name == "all" {
        if limit.is_some() {
            return Err(CliError::Usage("--limit applies to a single named suite".into()));
        }
        SUITES.iter().map(|s| (s, s.default_limit)).collect()
    } else {
        let suite = find_suite(name).ok_or_else(|| {
            let names: Vec<_> = SUITES.iter().map(|s| s.name).collect();
            CliError::Usage(format!("unknown suite `{name}`; expected one of: all, {}", names.join(", ")))
        })?;
        vec![(suite, limit.unwrap_or(suite.default_limit))]
    };
    let mut e = Emitter::new(out, opts.format, SUITE_HEADER)?;
    let progress = Progress::new("verify", !opts.quiet);
    ordered_map(
        &jobs,
        opts.workers,
        &progress,
        |&(s, l)| Ok::<_, CliError>((s.run)(l)),
        |report| Ok(e.emit(&report)?),
    )?;
    e.finish()?;
    Ok(())
}

