//! The `.qg` text format: optional `#` comment lines, the order `n`, then `n`
//! rows of `n` whitespace-separated entries.

use thiserror::Error;

use super::{QuasigroupTable, TableError};

#[derive(Debug, Error)]
pub enum QgError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid table: {0}")]
    Invalid(#[from] TableError),
}

pub fn parse_qg(text: &str) -> Result<QuasigroupTable, QgError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(QgError::Syntax {
        line: 1,
        message: "missing order line".into(),
    })?;
    let n: usize = header.parse().map_err(|_| QgError::Syntax {
        line,
        message: format!("expected the order, found `{header}`"),
    })?;
    if n == 0 {
        return Err(TableError::Empty.into());
    }

    let mut raw = Vec::with_capacity(n);
    for row in 0..n {
        let (line, text) = lines.next().ok_or(QgError::Syntax {
            line: line + row + 1,
            message: format!("expected {n} rows, found {row}"),
        })?;
        let values = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>().map_err(|_| QgError::Syntax {
                    line,
                    message: format!("`{tok}` is not an integer"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        raw.push(values);
    }
    if let Some((line, _)) = lines.next() {
        return Err(QgError::Syntax {
            line,
            message: "unexpected content after the last row".into(),
        });
    }
    Ok(QuasigroupTable::validate(&raw)?)
}

pub fn write_qg(q: &QuasigroupTable) -> String {
    let mut out = format!("{}\n", q.order());
    for row in q.rows() {
        let parts: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::random_latin_square;
    use proptest::prelude::*;

    #[test]
    fn parses_comments_and_whitespace() {
        let q = parse_qg("# M3\n3\n0 2 1\n 1   0 2\n# trailing\n2 1 0\n").unwrap();
        assert_eq!(q.cells(), &[0, 2, 1, 1, 0, 2, 2, 1, 0]);
        assert_eq!(write_qg(&q), "3\n0 2 1\n1 0 2\n2 1 0\n");
    }

    #[test]
    fn reports_errors() {
        assert!(matches!(parse_qg(""), Err(QgError::Syntax { .. })));
        assert!(matches!(parse_qg("2\n0 1\n"), Err(QgError::Syntax { line: 3, .. })));
        assert!(matches!(
            parse_qg("2\n0 x\n1 0\n"),
            Err(QgError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_qg("2\n0 1\n0 1\n"),
            Err(QgError::Invalid(TableError::ColumnDuplicate(0)))
        ));
        assert!(matches!(
            parse_qg("2\n0 1 1\n1 0\n"),
            Err(QgError::Invalid(TableError::NonSquare))
        ));
    }

    proptest! {
        #[test]
        fn writer_round_trips_byte_exact(n in 1usize..9, seed in any::<u64>()) {
            let q = random_latin_square(n, seed);
            let text = write_qg(&q);
            let back = parse_qg(&text).unwrap();
            prop_assert_eq!(&back, &q);
            prop_assert_eq!(write_qg(&back), text);
        }
    }
}
