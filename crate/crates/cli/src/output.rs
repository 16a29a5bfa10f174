use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// A rendered command result plus whether every check in it held.
#[derive(Debug, Clone)]
pub struct Output {
    pub json: String,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub ok: bool,
}

impl Output {
    pub fn new<T: Serialize>(report: &T, header: Vec<&'static str>, rows: Vec<Vec<String>>, ok: bool) -> Self {
        let json = serde_json::to_string_pretty(report).expect("reports serialize");
        Output { json, header, rows, ok }
    }
}

fn write_csv<W: Write>(out: &Output, w: W) -> io::Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    wr.write_record(&out.header)?;
    for row in &out.rows {
        wr.write_record(row)?;
    }
    wr.flush()
}

fn write_to<W: Write>(out: &Output, format: Format, mut w: W) -> io::Result<()> {
    match format {
        Format::Json => writeln!(w, "{}", out.json),
        Format::Csv => write_csv(out, w),
    }
}

/// Writes to `dest`, or stdout when absent. A closed stdout (`| head`) is not an error.
pub fn emit(out: &Output, format: Format, dest: Option<&Path>) -> io::Result<()> {
    match dest {
        Some(path) => write_to(out, format, File::create(path)?),
        None => match write_to(out, format, io::stdout().lock()) {
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
            r => r,
        },
    }
}

/// Space-separated integer coordinates, for CSV cells.
pub fn coords(w: &cominuscule::Weight) -> String {
    w.coords().iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}
