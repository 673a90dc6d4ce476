//! Line-oriented curve files:
//!
//! ```text
//! p = 5
//! k = 1
//! modulus = [0, 1]          # optional
//! f = y^2 - x^3 - 3*x - 1
//! assert_smooth = true      # optional, default false
//! assert_abs_irreducible = true
//! ```
//!
//! Blank lines and `#` comments are ignored.

use super::{Assertions, Curve, CurveError};
use crate::fields::FqContext;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveFile {
    pub p: u64,
    pub k: usize,
    pub modulus: Option<Vec<u64>>,
    pub expression: String,
    pub assertions: Assertions,
}

fn file_error<T>(line: usize, message: impl Into<String>) -> Result<T, CurveError> {
    Err(CurveError::File {
        line,
        message: message.into(),
    })
}

fn parse_bool(line: usize, value: &str) -> Result<bool, CurveError> {
    match value {
        "true" => Ok(true),
        "false" => Ok(false),
        other => file_error(line, format!("expected true or false, found '{other}'")),
    }
}

fn parse_modulus(line: usize, value: &str) -> Result<Vec<u64>, CurveError> {
    let inner = value
        .strip_prefix('[')
        .and_then(|v| v.strip_suffix(']'))
        .ok_or_else(|| CurveError::File {
            line,
            message: "modulus must be written as [c0, c1, ..., ck]".into(),
        })?;
    inner
        .split(',')
        .map(|c| {
            c.trim().parse::<u64>().map_err(|_| CurveError::File {
                line,
                message: format!("bad modulus coefficient '{}'", c.trim()),
            })
        })
        .collect()
}

impl CurveFile {
    pub fn parse(text: &str) -> Result<Self, CurveError> {
        let mut p = None;
        let mut k = None;
        let mut modulus = None;
        let mut expression = None;
        let mut assertions = Assertions::default();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                return file_error(line, "expected 'key = value'");
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "p" => {
                    p = Some(value.parse::<u64>().or_else(|_| {
                        file_error(
                            line,
                            format!("p must be a non-negative integer, found '{value}'"),
                        )
                    })?)
                }
                "k" => {
                    k = Some(value.parse::<usize>().or_else(|_| {
                        file_error(
                            line,
                            format!("k must be a non-negative integer, found '{value}'"),
                        )
                    })?)
                }
                "modulus" => modulus = Some(parse_modulus(line, value)?),
                "f" => expression = Some(value.to_string()),
                "assert_smooth" => assertions.smooth = parse_bool(line, value)?,
                "assert_abs_irreducible" => assertions.abs_irreducible = parse_bool(line, value)?,
                other => return file_error(line, format!("unknown key '{other}'")),
            }
        }

        let last = text.lines().count().max(1);
        Ok(Self {
            p: p.ok_or(CurveError::File {
                line: last,
                message: "missing key 'p'".into(),
            })?,
            k: k.unwrap_or(1),
            modulus,
            expression: expression.ok_or(CurveError::File {
                line: last,
                message: "missing key 'f'".into(),
            })?,
            assertions,
        })
    }

    pub fn context(&self) -> Result<FqContext, CurveError> {
        Ok(FqContext::new(self.p, self.k, self.modulus.clone())?)
    }

    pub fn curve(&self) -> Result<Curve, CurveError> {
        Curve::parse(&self.expression, &self.context()?, self.assertions)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p = {}\nk = {}\n", self.p, self.k);
        if let Some(m) = &self.modulus {
            let cs: Vec<String> = m.iter().map(u64::to_string).collect();
            out.push_str(&format!("modulus = [{}]\n", cs.join(", ")));
        }
        out.push_str(&format!("f = {}\n", self.expression));
        out.push_str(&format!(
            "assert_smooth = {}\nassert_abs_irreducible = {}\n",
            self.assertions.smooth, self.assertions.abs_irreducible
        ));
        out
    }
}

/// Reads a curve file's contents into a validated curve.
pub fn load_curve(text: &str) -> Result<Curve, CurveError> {
    CurveFile::parse(text)?.curve()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::FieldError;

    #[test]
    fn parses_full_file() {
        let text = "# elliptic curve\np = 5\nk = 1\nmodulus = [0, 1]\nf = y^2 - x^3 - 3*x - 1\nassert_smooth = true\n";
        let file = CurveFile::parse(text).unwrap();
        assert_eq!(file.p, 5);
        assert_eq!(file.modulus, Some(vec![0, 1]));
        assert!(file.assertions.smooth && !file.assertions.abs_irreducible);
        let c = file.curve().unwrap();
        assert_eq!(c.degree(), 3);
        assert_eq!(CurveFile::parse(&file.to_text()).unwrap(), file);
    }

    #[test]
    fn reports_errors() {
        assert!(matches!(
            CurveFile::parse("p = 5\nbogus\n"),
            Err(CurveError::File { line: 2, .. })
        ));
        assert!(matches!(
            CurveFile::parse("p = 5\n"),
            Err(CurveError::File { .. })
        ));
        assert!(matches!(
            load_curve("p = 4\nf = x\n"),
            Err(CurveError::Field(FieldError::NotOddPrime(4)))
        ));
        assert!(matches!(
            load_curve("p = 5\nf = y^^2\n"),
            Err(CurveError::Parse(e)) if e.position() == 2
        ));
    }
}
