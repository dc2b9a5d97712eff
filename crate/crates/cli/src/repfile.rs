//! Representation files.
//!
//! ```text
//! # ranks default to 0, matrices to zero
//! rank a = 2
//! matrix alpha = [[1, 0], [0, 1]]
//! ```
//!
//! Matrices act on row vectors, so `alpha: a -> b` is `rank a` rows by
//! `rank b` columns.

use num_bigint::BigInt;

use freeabel::evalfunctor::Representation;
use freeabel::intlinalg::IntMatrix;
use freeabel::quivercat::PathCategory;
use freeabel::Error;

use crate::error::{CliError, CliResult, Pos};

fn bad(line: usize, msg: impl Into<String>) -> CliError {
    CliError::syntax(Pos { line, col: 1 }, msg)
}

fn parse_rows(text: &str, line: usize) -> CliResult<Vec<Vec<BigInt>>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| bad(line, "matrix must be written [[..], ..]"))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let inner = inner
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| bad(line, "matrix rows must be bracketed"))?;
    inner
        .split("],[")
        .map(|row| {
            if row.is_empty() {
                return Ok(Vec::new());
            }
            row.split(',')
                .map(|x| x.parse::<BigInt>().map_err(|_| bad(line, format!("bad integer `{x}`"))))
                .collect()
        })
        .collect()
}

pub fn parse_representation(cat: &PathCategory, text: &str) -> CliResult<Representation> {
    let q = cat.quiver();
    let mut ranks = vec![0usize; q.vertices().len()];
    let mut given: Vec<Option<(usize, Vec<Vec<BigInt>>)>> = vec![None; q.arrows().len()];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (head, value) = content
            .split_once('=')
            .ok_or_else(|| bad(line, "expected `rank v = n` or `matrix x = [[..]]`"))?;
        let mut words = head.split_whitespace();
        let (kind, name) = match (words.next(), words.next(), words.next()) {
            (Some(k), Some(n), None) => (k, n),
            _ => return Err(bad(line, "expected `rank v = n` or `matrix x = [[..]]`")),
        };
        let pos = Pos { line, col: 1 };
        match kind {
            "rank" => {
                let v = cat.vertex(name).map_err(|e| CliError::at(pos, e))?;
                ranks[v] = value
                    .trim()
                    .parse()
                    .map_err(|_| bad(line, format!("bad rank `{}`", value.trim())))?;
            }
            "matrix" => {
                let a = q.arrow(name).map_err(|e| CliError::at(pos, e))?;
                if given[a].is_some() {
                    return Err(CliError::at(pos, Error::DuplicateLabel(format!("matrix {name}"))));
                }
                given[a] = Some((line, parse_rows(value, line)?));
            }
            other => return Err(bad(line, format!("unknown keyword `{other}`"))),
        }
    }
    let mut matrices = Vec::with_capacity(given.len());
    for (arr, g) in q.arrows().iter().zip(given) {
        let (r, c) = (ranks[arr.source], ranks[arr.target]);
        let m = match g {
            None => IntMatrix::zeros(r, c),
            Some((line, rows)) => {
                if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                    return Err(CliError::at(
                        Pos { line, col: 1 },
                        Error::InvalidRepresentation(format!(
                            "matrix for {} must be {r}x{c}",
                            arr.label
                        )),
                    ));
                }
                IntMatrix::new(r, c, rows.into_iter().flatten().collect())?
            }
        };
        matrices.push(m);
    }
    let rep = Representation::new(cat, ranks, matrices)?;
    rep.validate(cat)?;
    Ok(rep)
}

/// Text that [`parse_representation`] reads back to `rep`.
pub fn print_representation(cat: &PathCategory, rep: &Representation) -> String {
    let q = cat.quiver();
    let mut out = String::new();
    for (v, r) in q.vertices().iter().zip(&rep.ranks) {
        out.push_str(&format!("rank {v} = {r}\n"));
    }
    for (a, m) in q.arrows().iter().zip(&rep.matrices) {
        let rows: Vec<String> = (0..m.rows())
            .map(|i| {
                let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
                format!("[{}]", row.join(", "))
            })
            .collect();
        out.push_str(&format!("matrix {} = [{}]\n", a.label, rows.join(", ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use freeabel::catalog;
    use freeabel::evalfunctor::random_representation;
    use rand::SeedableRng;

    #[test]
    fn round_trip_random_reps() {
        let cat = catalog::snake();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let rep = random_representation(&cat, &mut rng, 3);
            let text = print_representation(&cat, &rep);
            assert_eq!(parse_representation(&cat, &text).unwrap(), rep);
        }
    }

    #[test]
    fn defaults_and_errors() {
        let cat = catalog::snake();
        let rep = parse_representation(&cat, "# nothing\nrank a = 1\nrank b = 1\nmatrix alpha = [[5]]").unwrap();
        assert_eq!(rep.ranks, vec![1, 1, 0, 0]);
        assert!(rep.matrices[1].rows() == 1 && rep.matrices[1].cols() == 0);

        let shape = parse_representation(&cat, "rank a = 1\nmatrix alpha = [[1]]").unwrap_err();
        assert!(shape.to_string().starts_with("2:"), "{shape}");
        let rel = "rank a = 1\nrank b = 1\nrank c = 1\nrank d = 1\n\
                   matrix alpha = [[1]]\nmatrix beta = [[1]]\nmatrix gamma = [[1]]";
        assert!(matches!(
            parse_representation(&cat, rel),
            Err(CliError::Core(Error::InvalidRepresentation(_)))
        ));
        assert!(parse_representation(&cat, "rank z = 1").is_err());
        assert!(parse_representation(&cat, "rank a 1").is_err());
        assert!(parse_representation(&cat, "rank a = 1\nmatrix alpha = [[x]]").is_err());
    }
}
