//! Shared text grammar for signatures: comma-separated integers with
//! optional `^k` repetition; an optional `;` (or the first comma) splits the
//! marked entry from the rest; surrounding parentheses are allowed.

use crate::error::{Error, Result};

pub(crate) fn parse_entries(text: &str) -> Result<(i64, Vec<i64>)> {
    let t = text.trim();
    let t = t.strip_prefix('(').unwrap_or(t);
    let t = t.strip_suffix(')').unwrap_or(t);
    let (marked_part, rest_part) = match t.split_once(';') {
        Some((m, r)) => (m.trim().to_string(), Some(r.to_string())),
        None => (t.to_string(), None),
    };

    fn expand(chunk: &str, pos: usize) -> Result<Vec<i64>> {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            return Err(Error::Parse {
                pos,
                msg: "empty signature entry".into(),
            });
        }
        let (base, reps) = match chunk.split_once('^') {
            Some((b, k)) => {
                let reps: usize = k.trim().parse().map_err(|_| Error::Parse {
                    pos,
                    msg: format!("bad repetition count `{k}`"),
                })?;
                (b.trim(), reps)
            }
            None => (chunk, 1),
        };
        if reps == 0 {
            return Err(Error::Parse {
                pos,
                msg: "repetition count must be positive".into(),
            });
        }
        let v: i64 = base.parse().map_err(|_| Error::Parse {
            pos,
            msg: format!("expected an integer, got `{base}`"),
        })?;
        Ok(vec![v; reps])
    }

    let mut entries = Vec::new();
    for (i, chunk) in marked_part.split(',').enumerate() {
        entries.extend(expand(chunk, i + 1)?);
    }
    let marked_count = entries.len();
    if let Some(rest) = rest_part {
        if rest.trim().is_empty() && marked_count == 1 {
            // e.g. "(4;)" — tolerate a dangling separator
        } else {
            for (i, chunk) in rest.split(',').enumerate() {
                entries.extend(expand(chunk, marked_count + i + 1)?);
            }
        }
    }
    if entries.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty signature".into(),
        });
    }
    let marked = entries[0];
    Ok((marked, entries[1..].to_vec()))
}

/// Renders `marked; rest` with `^k` compression for runs of length >= 3.
pub(crate) fn render(marked: i64, rest: &[i64]) -> String {
    let mut out = format!("({marked}");
    if !rest.is_empty() {
        out.push(';');
        let mut i = 0;
        let mut first = true;
        while i < rest.len() {
            let mut j = i;
            while j < rest.len() && rest[j] == rest[i] {
                j += 1;
            }
            if !first {
                out.push(',');
            }
            let run = j - i;
            if run >= 3 {
                out.push_str(&format!("{}^{}", rest[i], run));
            } else {
                for k in 0..run {
                    if k > 0 {
                        out.push(',');
                    }
                    out.push_str(&rest[i].to_string());
                }
            }
            first = false;
            i = j;
        }
    }
    out.push(')');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_forms() {
        assert_eq!(parse_entries("(1; 1,2)").unwrap(), (1, vec![1, 2]));
        assert_eq!(parse_entries("(0,1^2,-1^4)").unwrap(), (0, vec![1, 1, -1, -1, -1, -1]));
        assert_eq!(parse_entries("4").unwrap(), (4, vec![]));
        assert_eq!(parse_entries("(2;2)").unwrap(), (2, vec![2]));
        assert!(parse_entries("").is_err());
        assert!(parse_entries("(1;x)").is_err());
        assert!(parse_entries("(1^0)").is_err());
    }

    #[test]
    fn render_round_trips() {
        for (m, rest) in [(4i64, vec![]), (1, vec![1, 2]), (0, vec![1, 1, 1, 1, -1, -1, -1])] {
            let s = render(m, &rest);
            assert_eq!(parse_entries(&s).unwrap(), (m, rest));
        }
    }
}
