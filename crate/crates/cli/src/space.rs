//! The space grammar: `G:k:n`, `Q:m`, `IG:n`, `OG:n`, `E6`, `E7`.

use std::fmt;

use cominuscule::catalog::{make_spec, GrassmannianSpec, SpaceFamily};

/// A parse failure at a 1-based column of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SpaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for SpaceError {}

fn err(column: usize, message: impl Into<String>) -> SpaceError {
    SpaceError {
        column,
        message: message.into(),
    }
}

/// Splits on `:` keeping each token's starting column.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut col = 1;
    for tok in text.split(':') {
        out.push((col, tok));
        col += tok.chars().count() + 1;
    }
    out
}

fn number(tok: (usize, &str), name: &str) -> Result<usize, SpaceError> {
    let (col, s) = tok;
    if s.is_empty() {
        return Err(err(col, format!("missing {name}")));
    }
    s.parse().map_err(|_| err(col, format!("{name} must be a nonnegative integer, got {s:?}")))
}

fn check(tok: (usize, &str), name: &str, value: usize, lo: usize, hi: Option<usize>) -> Result<(), SpaceError> {
    let ok = value >= lo && hi.is_none_or(|h| value <= h);
    if ok {
        return Ok(());
    }
    let range = match hi {
        Some(h) => format!("{lo}..={h}"),
        None => format!(">= {lo}"),
    };
    Err(err(tok.0, format!("{name} out of range ({range}), got {value}")))
}

/// Parses a space name into its family.
pub fn parse_family(text: &str) -> Result<SpaceFamily, SpaceError> {
    let toks = tokens(text.trim());
    let arity = |n: usize| -> Result<(), SpaceError> {
        if toks.len() == n {
            Ok(())
        } else if toks.len() > n {
            Err(err(toks[n].0 - 1, format!("unexpected ':' after {}", toks[..n].iter().map(|t| t.1).collect::<Vec<_>>().join(":"))))
        } else {
            let last = toks[toks.len() - 1];
            Err(err(last.0 + last.1.chars().count(), "missing ':' and parameter"))
        }
    };
    match toks[0].1 {
        "G" => {
            arity(3)?;
            let n = number(toks[2], "n")?;
            check(toks[2], "n", n, 2, None)?;
            let k = number(toks[1], "k")?;
            check(toks[1], "k", k, 1, Some(n - 1))?;
            Ok(SpaceFamily::Grass { k, n })
        }
        "Q" => {
            arity(2)?;
            let m = number(toks[1], "m")?;
            check(toks[1], "m", m, 3, None)?;
            Ok(SpaceFamily::quadric(m).expect("checked"))
        }
        "IG" => {
            arity(2)?;
            let n = number(toks[1], "n")?;
            check(toks[1], "n", n, 2, None)?;
            Ok(SpaceFamily::Lagrangian { n })
        }
        "OG" => {
            arity(2)?;
            let n = number(toks[1], "n")?;
            check(toks[1], "n", n, 3, None)?;
            Ok(SpaceFamily::Spinor { n })
        }
        "E6" => arity(1).map(|_| SpaceFamily::Cayley),
        "E7" => arity(1).map(|_| SpaceFamily::Freudenthal),
        other => Err(err(
            toks[0].0,
            format!("unknown family {other:?}; expected G:k:n, Q:m, IG:n, OG:n, E6 or E7"),
        )),
    }
}

pub fn parse_space(text: &str) -> Result<GrassmannianSpec, SpaceError> {
    let fam = parse_family(text)?;
    make_spec(fam).map_err(|e| err(1, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert_eq!(parse_family("IG:4").unwrap(), SpaceFamily::Lagrangian { n: 4 });
        assert_eq!(parse_family("G:3:9").unwrap(), SpaceFamily::Grass { k: 3, n: 9 });
        assert_eq!(parse_family("Q:5").unwrap(), SpaceFamily::QuadricOdd { r: 3 });
        assert_eq!(parse_family("Q:6").unwrap(), SpaceFamily::QuadricEven { r: 4 });
        assert_eq!(parse_family("E7").unwrap(), SpaceFamily::Freudenthal);
        for fam in [SpaceFamily::Grass { k: 2, n: 7 }, SpaceFamily::Spinor { n: 6 }, SpaceFamily::Cayley] {
            assert_eq!(parse_family(&fam.name()).unwrap(), fam);
        }
    }

    #[test]
    fn diagnostics() {
        let e = parse_family("G:0:5").unwrap_err();
        assert_eq!(e.column, 3);
        assert!(e.message.contains("k out of range"), "{e}");
        assert_eq!(parse_family("G:2:x").unwrap_err().column, 5);
        assert_eq!(parse_family("F4").unwrap_err().column, 1);
        assert_eq!(parse_family("E6:2").unwrap_err().column, 3);
        assert_eq!(parse_family("IG").unwrap_err().column, 3);
        assert!(parse_family("Q:2").unwrap_err().message.contains("m out of range"));
        assert!(parse_space("OG:2").is_err());
    }
}
