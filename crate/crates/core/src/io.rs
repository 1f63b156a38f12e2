//! Parsing and emission of degree lists.
//!
//! Two input formats are accepted: JSON objects with exactly one of the keys
//! `pairs` (`{"pairs": [[a1,b1], ...]}`) or `degrees` (`{"degrees": [d1,
//! ...]}`), and plain text with one entry per line — two whitespace-separated
//! integers per line for pairs, one for degrees.

use serde::{Deserialize, Serialize};

use crate::core::{IntList, ListInput, PairedList};
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonList {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pairs: Option<Vec<(usize, usize)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degrees: Option<Vec<usize>>,
}

/// Parses a list in either format, autodetecting JSON by a leading `{`.
pub fn parse_list(text: &str) -> Result<ListInput> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        parse_json(trimmed)
    } else {
        parse_plain(text)
    }
}

fn parse_json(text: &str) -> Result<ListInput> {
    let parsed: JsonList =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    match (parsed.pairs, parsed.degrees) {
        (Some(pairs), None) => Ok(ListInput::Pairs(PairedList::new(pairs)?)),
        (None, Some(degrees)) => Ok(ListInput::Degrees(IntList::new(degrees)?)),
        _ => Err(Error::Parse(
            "expected exactly one of \"pairs\" or \"degrees\"".into(),
        )),
    }
}

fn parse_plain(text: &str) -> Result<ListInput> {
    let mut pairs = Vec::new();
    let mut degrees = Vec::new();
    let mut width = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<usize> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse().map_err(|_| {
                    Error::Parse(format!("line {}: invalid integer {tok:?}", lineno + 1))
                })
            })
            .collect::<Result<_>>()?;
        let expected = *width.get_or_insert(fields.len());
        match (expected, fields.as_slice()) {
            (1, [d]) => degrees.push(*d),
            (2, [a, b]) => pairs.push((*a, *b)),
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: every line must hold the same count of 1 or 2 integers",
                    lineno + 1
                )))
            }
        }
    }
    match width {
        Some(1) => Ok(ListInput::Degrees(IntList::new(degrees)?)),
        Some(2) => Ok(ListInput::Pairs(PairedList::new(pairs)?)),
        _ => Err(Error::EmptyList),
    }
}

/// Emits a list as the JSON input format.
pub fn emit_list_json(input: &ListInput) -> String {
    let doc = match input {
        ListInput::Pairs(p) => JsonList {
            pairs: Some(p.pairs().to_vec()),
            degrees: None,
        },
        ListInput::Degrees(d) => JsonList {
            pairs: None,
            degrees: Some(d.values().to_vec()),
        },
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

/// Emits a list as the plain-text input format.
pub fn emit_list_text(input: &ListInput) -> String {
    match input {
        ListInput::Pairs(p) => p
            .pairs()
            .iter()
            .map(|(a, b)| format!("{a} {b}\n"))
            .collect(),
        ListInput::Degrees(d) => d.values().iter().map(|v| format!("{v}\n")).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(p: &[(usize, usize)]) -> ListInput {
        ListInput::Pairs(PairedList::new(p.to_vec()).unwrap())
    }

    fn degrees(d: &[usize]) -> ListInput {
        ListInput::Degrees(IntList::new(d.to_vec()).unwrap())
    }

    #[test]
    fn parses_json_pairs_and_degrees() {
        assert_eq!(
            parse_list(r#"{"pairs": [[3,3],[1,3],[2,0]]}"#).unwrap(),
            pairs(&[(3, 3), (1, 3), (2, 0)])
        );
        assert_eq!(
            parse_list(r#"{"degrees": [2, 2, 1, 1]}"#).unwrap(),
            degrees(&[2, 2, 1, 1])
        );
    }

    #[test]
    fn rejects_ambiguous_or_malformed_json() {
        assert!(matches!(
            parse_list(r#"{"pairs": [[1,1]], "degrees": [1]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(parse_list(r#"{}"#), Err(Error::Parse(_))));
        assert!(matches!(
            parse_list(r#"{"pairs": [[1,1],"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_list(r#"{"margins": [[1,1]]}"#),
            Err(Error::Parse(_))
        ));
        // Structurally valid JSON holding an invalid list.
        assert_eq!(parse_list(r#"{"degrees": []}"#), Err(Error::EmptyList));
    }

    #[test]
    fn parses_plain_text() {
        assert_eq!(
            parse_list("3 3\n1 3\n2 0\n").unwrap(),
            pairs(&[(3, 3), (1, 3), (2, 0)])
        );
        assert_eq!(parse_list("2\n2\n1\n1\n").unwrap(), degrees(&[2, 2, 1, 1]));
        // Blank lines and odd spacing are tolerated.
        assert_eq!(
            parse_list("\n  1   2  \n\n0 1\n").unwrap(),
            pairs(&[(1, 2), (0, 1)])
        );
    }

    #[test]
    fn rejects_inconsistent_or_invalid_plain_text() {
        assert!(matches!(parse_list("1 2\n3\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_list("1 2 3\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_list("1 x\n"), Err(Error::Parse(_))));
        assert_eq!(parse_list("  \n\n"), Err(Error::EmptyList));
    }

    #[test]
    fn emission_round_trips() {
        for input in [pairs(&[(2, 0), (2, 2), (1, 1), (1, 3)]), degrees(&[3, 1, 1, 1])] {
            assert_eq!(parse_list(&emit_list_json(&input)).unwrap(), input);
            assert_eq!(parse_list(&emit_list_text(&input)).unwrap(), input);
        }
    }
}
