//! Record rendering in the three output formats.
//!
//! Text is for people, JSON is one object per line, CSV has a fixed header
//! that is written even when no records follow.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

use antipal::DigitString;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Something printable as one line in each format.
pub trait Record: Serialize {
    fn text(&self) -> String;
    fn csv(&self) -> String;
}

pub struct Emitter<W: Write> {
    out: W,
    format: Format,
}

impl<W: Write> Emitter<W> {
    pub fn new(out: W, format: Format, csv_header: &str) -> io::Result<Self> {
        let mut e = Emitter { out, format };
        if format == Format::Csv {
            writeln!(e.out, "{csv_header}")?;
        }
        Ok(e)
    }

    pub fn emit<R: Record>(&mut self, record: &R) -> io::Result<()> {
        match self.format {
            Format::Text => writeln!(self.out, "{}", record.text()),
            Format::Csv => writeln!(self.out, "{}", record.csv()),
            Format::Json => {
                serde_json::to_writer(&mut self.out, record).map_err(io::Error::other)?;
                writeln!(self.out)
            }
        }
    }

    /// Writes a text-only line; JSON and CSV output skip it.
    pub fn note(&mut self, line: &str) -> io::Result<()> {
        if self.format == Format::Text {
            writeln!(self.out, "{line}")?;
        }
        Ok(())
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.out.flush()
    }
}

/// `(d1 d2 ...)_b`, compact for bases up to 10.
pub fn subscripted(d: &DigitString) -> String {
    format!("({})_{}", d.render(), d.base())
}

/// A CSV field that may need quoting.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// A value with its expansion in one base. CSV header `value,base,digits`.
#[derive(Debug, Clone, Serialize)]
pub struct Expansion {
    pub value: u128,
    pub digits: DigitString,
}

pub const EXPANSION_HEADER: &str = "value,base,digits";

impl Record for Expansion {
    fn text(&self) -> String {
        format!("{} {}", self.value, subscripted(&self.digits))
    }

    fn csv(&self) -> String {
        format!("{},{},{}", self.value, self.digits.base(), self.digits.render_spaced())
    }
}

impl Record for DigitString {
    fn text(&self) -> String {
        self.render()
    }

    fn csv(&self) -> String {
        let value = self.value_wide().map(|v| v.to_string()).unwrap_or_default();
        format!("{value},{},{}", self.base(), self.render_spaced())
    }
}
