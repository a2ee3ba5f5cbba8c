//! The `ybx v1` solution file format.
//!
//! ```text
//! ybx v1
//! size 3
//! permutation 2 3 1        # or `identity`, `flip`, or n² `map i j k l` lines
//! ```

use ybx_core::quadset::{make_named, make_permutation_solution, make_solution, NamedKind, QuadraticSet};

use crate::CliError;

fn parse_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { line, msg: msg.into() }
}

fn numbers(line: usize, toks: &[&str]) -> Result<Vec<usize>, CliError> {
    toks.iter()
        .map(|t| t.parse::<usize>().map_err(|_| parse_err(line, format!("expected a positive integer, got `{t}`"))))
        .collect()
}

pub fn parse_solution(text: &str) -> Result<QuadraticSet, CliError> {
    // (line number, tokens) for every non-blank line after comment stripping
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, t)| !t.is_empty())
        .collect();
    let mut it = lines.iter();
    match it.next() {
        Some((_, t)) if t[..] == ["ybx", "v1"] => {}
        Some((l, _)) => return Err(parse_err(*l, "expected header `ybx v1`")),
        None => return Err(parse_err(1, "empty file")),
    }
    let n = match it.next() {
        Some((l, t)) if t.len() == 2 && t[0] == "size" => {
            let n = numbers(*l, &t[1..])?[0];
            if n == 0 {
                return Err(CliError::Core(ybx_core::Error::EmptySet));
            }
            n
        }
        Some((l, _)) => return Err(parse_err(*l, "expected `size <n>`")),
        None => return Err(parse_err(lines.last().map_or(1, |x| x.0), "missing `size` line")),
    };
    let body: Vec<&(usize, Vec<&str>)> = it.collect();
    let Some((first_line, first)) = body.first().map(|x| (x.0, &x.1)) else {
        return Err(parse_err(lines.last().map_or(1, |x| x.0), "missing solution body"));
    };
    let single = |kind: &str| -> Result<(), CliError> {
        if body.len() > 1 {
            return Err(parse_err(body[1].0, format!("unexpected line after `{kind}`")));
        }
        Ok(())
    };
    match first[0] {
        "permutation" => {
            single("permutation")?;
            let f = numbers(first_line, &first[1..])?;
            if f.len() != n {
                return Err(parse_err(first_line, format!("permutation has {} entries, size is {n}", f.len())));
            }
            Ok(make_permutation_solution(&f)?)
        }
        kw @ ("identity" | "flip") => {
            single(kw)?;
            if first.len() > 1 && numbers(first_line, &first[1..])? != [n] {
                return Err(parse_err(first_line, "size argument disagrees with `size` line"));
            }
            let kind = if kw == "identity" { NamedKind::Identity } else { NamedKind::Flip };
            Ok(make_named(kind, n)?)
        }
        "map" => {
            let mut entries = Vec::with_capacity(body.len());
            for (l, t) in body.iter().map(|x| (x.0, &x.1)) {
                if t[0] != "map" || t.len() != 5 {
                    return Err(parse_err(l, "expected `map i j k l`"));
                }
                let v = numbers(l, &t[1..])?;
                entries.push(((v[0], v[1]), (v[2], v[3])));
            }
            Ok(make_solution(n, &entries)?)
        }
        other => Err(parse_err(first_line, format!("unknown body keyword `{other}`"))),
    }
}

/// Explicit `map` form; [`parse_solution`] inverts it.
pub fn render_solution(qs: &QuadraticSet) -> String {
    let n = qs.n();
    let mut out = format!("ybx v1\nsize {n}\n");
    for i in 0..n {
        for j in 0..n {
            let (k, l) = qs.r(i, j);
            out.push_str(&format!("map {} {} {} {}\n", i + 1, j + 1, k + 1, l + 1));
        }
    }
    out
}
