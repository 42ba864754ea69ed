//! Plot-ready data files: a header of space-separated column names, then
//! one row per record. Values carry 17 significant digits, so parsing a
//! file reproduces the binary64 values exactly; overflow prints as `inf`.

use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::path::Path;

use crate::{Error, Result};

/// One experiment sample: the x-axis key and one error per system.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRecord {
    pub key: f64,
    pub errors: Vec<f64>,
}

impl ErrorRecord {
    pub fn overflowed(&self, column: usize) -> bool {
        !self.errors[column].is_finite()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorTable {
    pub key_name: String,
    pub columns: Vec<String>,
    pub records: Vec<ErrorRecord>,
}

impl ErrorTable {
    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn column<'a>(&'a self, name: &str) -> Option<impl Iterator<Item = f64> + 'a> {
        let i = self.column_index(name)?;
        Some(self.records.iter().map(move |r| r.errors[i]))
    }

    pub fn header(&self) -> String {
        let mut h = self.key_name.clone();
        for c in &self.columns {
            h.push(' ');
            h.push_str(c);
        }
        h
    }

    pub fn write_to(&self, mut w: impl Write) -> Result<()> {
        writeln!(w, "{}", self.header())?;
        let mut line = String::new();
        for r in &self.records {
            if r.errors.len() != self.columns.len() {
                return Err(Error::Config("record width differs from the header".into()));
            }
            line.clear();
            line.push_str(&format_value(r.key));
            for &e in &r.errors {
                line.push(' ');
                line.push_str(&format_value(e));
            }
            writeln!(w, "{line}")?;
        }
        Ok(())
    }

    pub fn read_from(r: impl BufRead) -> Result<Self> {
        let mut lines = r.lines();
        let header = lines.next().ok_or_else(|| Error::Parse("empty file".into()))??;
        let mut names = header.split_whitespace().map(str::to_string);
        let key_name = names.next().ok_or_else(|| Error::Parse("empty header".into()))?;
        let columns: Vec<String> = names.collect();
        let mut records = Vec::new();
        for (no, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let vals = line.split_whitespace().map(parse_value).collect::<Result<Vec<_>>>()?;
            if vals.len() != columns.len() + 1 {
                return Err(Error::Parse(format!("row {} has {} fields", no + 2, vals.len())));
            }
            records.push(ErrorRecord { key: vals[0], errors: vals[1..].to_vec() });
        }
        Ok(ErrorTable { key_name, columns, records })
    }
}

/// Writes `table` to `path`.
pub fn emit_dat(table: &ErrorTable, path: &Path) -> Result<()> {
    let f = std::fs::File::create(path)?;
    let mut w = std::io::BufWriter::new(f);
    table.write_to(&mut w)?;
    w.flush()?;
    Ok(())
}

pub fn read_dat(path: &Path) -> Result<ErrorTable> {
    ErrorTable::read_from(std::io::BufReader::new(std::fs::File::open(path)?))
}

pub fn format_value(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v == f64::INFINITY {
        "inf".into()
    } else if v == f64::NEG_INFINITY {
        "-inf".into()
    } else {
        let mut s = String::new();
        let _ = write!(s, "{v:.16e}");
        s
    }
}

fn parse_value(s: &str) -> Result<f64> {
    s.parse().map_err(|_| Error::Parse(format!("not a number: {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(records: Vec<ErrorRecord>) -> ErrorTable {
        ErrorTable { key_name: "x".into(), columns: vec!["binary16".into(), "level-index".into()], records }
    }

    #[test]
    fn header_only() {
        let mut out = Vec::new();
        table(vec![]).write_to(&mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "x binary16 level-index\n");
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let t = table(vec![
            ErrorRecord { key: 0.1, errors: vec![1.0 / 3.0, f64::INFINITY] },
            ErrorRecord { key: 1e-300, errors: vec![5e-324, 0.0] },
            ErrorRecord { key: 123456.789, errors: vec![f64::MAX, 2f64.powi(-13)] },
        ]);
        let mut out = Vec::new();
        t.write_to(&mut out).unwrap();
        let text = String::from_utf8(out.clone()).unwrap();
        assert!(text.lines().nth(1).unwrap().ends_with(" inf"));
        let back = ErrorTable::read_from(&out[..]).unwrap();
        assert_eq!(back, t);
        for (a, b) in back.records.iter().zip(&t.records) {
            assert_eq!(a.key.to_bits(), b.key.to_bits());
        }
    }

    #[test]
    fn seventeen_digits() {
        assert_eq!(format_value(0.1), "1.0000000000000001e-1");
        assert_eq!(format_value(f64::INFINITY), "inf");
    }

    #[test]
    fn malformed_rows() {
        assert!(ErrorTable::read_from(&b"x a\n1 2 3\n"[..]).is_err());
        assert!(ErrorTable::read_from(&b"x a\n1 zz\n"[..]).is_err());
        assert!(ErrorTable::read_from(&b""[..]).is_err());
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("out.dat");
        let t = table(vec![ErrorRecord { key: 2.0, errors: vec![0.5, 0.25] }]);
        emit_dat(&t, &p).unwrap();
        assert_eq!(read_dat(&p).unwrap(), t);
    }
}
