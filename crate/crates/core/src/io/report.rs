//! Machine-readable result rows (CSV or JSON).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Exact,
    ClosedForm,
    Both,
}

impl Source {
    pub fn includes_exact(self) -> bool {
        matches!(self, Source::Exact | Source::Both)
    }
}

/// One result row. Field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub family: String,
    pub params: String,
    pub n: usize,
    pub m: usize,
    pub d1: usize,
    pub d2: usize,
    pub d1_lower: usize,
    pub d1_upper: usize,
    pub witness_d1: String,
    pub witness_d2: String,
    pub cordial: bool,
    pub source: Source,
    pub elapsed_ms: u64,
}

pub const CSV_HEADER: [&str; 13] = [
    "family",
    "params",
    "n",
    "m",
    "d1",
    "d2",
    "d1_lower",
    "d1_upper",
    "witness_d1",
    "witness_d2",
    "cordial",
    "source",
    "elapsed_ms",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Defect(format!("csv serialisation failed: {other:?}")),
    }
}

/// Renders records as CSV (header row, LF line endings) or as a JSON array.
pub fn write_records(records: &[ReportRecord], format: ReportFormat) -> Result<Vec<u8>> {
    match format {
        ReportFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            w.write_record(CSV_HEADER).map_err(csv_error)?;
            for r in records {
                w.serialize(r).map_err(csv_error)?;
            }
            w.into_inner()
                .map_err(|e| Error::Io(std::io::Error::other(e.to_string())))
        }
        ReportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(records)
                .map_err(|e| Error::Defect(format!("json serialisation failed: {e}")))?;
            out.push(b'\n');
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wheel6() -> ReportRecord {
        ReportRecord {
            family: "wheel".into(),
            params: "n=6".into(),
            n: 6,
            m: 10,
            d1: 0,
            d2: 0,
            d1_lower: 0,
            d1_upper: 0,
            witness_d1: "001101".into(),
            witness_d2: "001101".into(),
            cordial: true,
            source: Source::Both,
            elapsed_ms: 3,
        }
    }

    #[test]
    fn csv_row() {
        let out = String::from_utf8(write_records(&[wheel6()], ReportFormat::Csv).unwrap()).unwrap();
        let mut lines = out.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        assert_eq!(lines.next().unwrap(), "wheel,n=6,6,10,0,0,0,0,001101,001101,true,both,3");
        assert!(!out.contains('\r'));
        assert!(out.ends_with('\n'));
    }

    #[test]
    fn params_with_commas_are_quoted() {
        let mut r = wheel6();
        r.params = "parts=3,3".into();
        let out = String::from_utf8(write_records(&[r], ReportFormat::Csv).unwrap()).unwrap();
        assert!(out.contains("\"parts=3,3\",6,10,"));
    }

    #[test]
    fn empty_sequences() {
        let csv = write_records(&[], ReportFormat::Csv).unwrap();
        assert_eq!(csv, format!("{}\n", CSV_HEADER.join(",")).into_bytes());
        let json = write_records(&[], ReportFormat::Json).unwrap();
        assert_eq!(String::from_utf8(json).unwrap().trim(), "[]");
    }

    #[test]
    fn json_preserves_order() {
        let mut second = wheel6();
        second.params = "n=7".into();
        let out = write_records(&[wheel6(), second], ReportFormat::Json).unwrap();
        let parsed: Vec<ReportRecord> = serde_json::from_slice(&out).unwrap();
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[1].params, "n=7");
        let value: serde_json::Value = serde_json::from_slice(&out).unwrap();
        let keys: Vec<&String> = value[0].as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), CSV_HEADER.len());
        assert_eq!(value[0]["source"], "both");
    }
}
