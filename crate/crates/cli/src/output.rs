use std::collections::BTreeMap;
use std::io::{self, Write};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

/// One result line. Every value is a string so big integers survive any
/// JSON consumer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: String,
    pub provenance: String,
    pub elapsed_ms: u64,
}

impl OutputRecord {
    pub fn new(command: &str, inputs: &[(&str, String)], result: String, provenance: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            inputs: inputs
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            result,
            provenance: provenance.to_string(),
            elapsed_ms: 0,
        }
    }

    pub fn elapsed(mut self, since: std::time::Instant) -> Self {
        self.elapsed_ms = since.elapsed().as_millis() as u64;
        self
    }

    fn inputs_flat(&self) -> String {
        self.inputs
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    command: &'a str,
    inputs: String,
    result: &'a str,
    provenance: &'a str,
    elapsed_ms: u64,
}

/// Writes records: JSON as one object per line, CSV with a header row.
pub fn write_records(
    out: &mut impl Write,
    format: Format,
    records: &[OutputRecord],
) -> io::Result<()> {
    match format {
        Format::Plain => {
            for r in records {
                let inputs = r
                    .inputs
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>();
                writeln!(
                    out,
                    "{} {}: {} [{}]",
                    r.command,
                    inputs.join(" "),
                    r.result,
                    r.provenance
                )?;
            }
        }
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(CsvRow {
                    command: &r.command,
                    inputs: r.inputs_flat(),
                    result: &r.result,
                    provenance: &r.provenance,
                    elapsed_ms: r.elapsed_ms,
                })?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> OutputRecord {
        OutputRecord::new(
            "charnum",
            &[("name", "N21".into()), ("degree", "symbolic".into())],
            "9*d^3 - 27*d^2 - d + 30".into(),
            "pipeline",
        )
    }

    #[test]
    fn json_round_trip() {
        let mut buf = Vec::new();
        write_records(&mut buf, Format::Json, &[sample()]).unwrap();
        let line = String::from_utf8(buf).unwrap();
        let parsed: OutputRecord = serde_json::from_str(line.trim_end()).unwrap();
        assert_eq!(parsed, sample());
        assert_eq!(serde_json::to_string(&parsed).unwrap(), line.trim_end());
    }

    #[test]
    fn csv_has_header() {
        let mut buf = Vec::new();
        write_records(&mut buf, Format::Csv, &[sample()]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("command,inputs,result,provenance,elapsed_ms")
        );
        assert_eq!(
            lines.next(),
            Some("charnum,degree=symbolic;name=N21,9*d^3 - 27*d^2 - d + 30,pipeline,0")
        );
    }

    #[test]
    fn plain_line() {
        let mut buf = Vec::new();
        write_records(&mut buf, Format::Plain, &[sample()]).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "charnum degree=symbolic name=N21: 9*d^3 - 27*d^2 - d + 30 [pipeline]\n"
        );
    }
}
