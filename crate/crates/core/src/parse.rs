//! Text input for the CLI and tests: polynomials in the canonical form,
//! rationals `p/q`, shapes `[(2,1)|()]` and tableaux `[[1,2],[3]|[]]`.
//!
//! The polynomial grammar accepts what the printer emits plus the ASCII
//! spelling `xi` for ξ: terms joined by `+`/`-`, factors joined by `*`, each
//! factor a rational, `ξ^k`, or `xN[^e]`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly};
use crate::scalar::Scalar;
use crate::tableaux::{RDiagram, RTableau};

/// `p` or `p/q` with optional sign.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {num:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {den:?}")))?;
    if d == BigInt::from(0) {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(BigRational::new(n, d))
}

/// Parse a polynomial in `nvars` variables over Q(ξ_r).
pub fn parse_poly(input: &str, nvars: usize, r: u32) -> Result<MultiPoly> {
    let cleaned = input.replace(' ', "");
    if cleaned.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if cleaned == "0" {
        return Ok(MultiPoly::zero(nvars));
    }
    let mut poly = MultiPoly::zero(nvars);
    for (sign, term) in split_terms(&cleaned)? {
        let parsed = parse_term(term, nvars, r)?;
        let signed = if sign < 0 { parsed.neg() } else { parsed };
        poly = poly.try_add(&signed)?;
    }
    Ok(poly)
}

/// Split on top-level + and -, keeping signs. Signs inside parentheses
/// belong to a scalar coefficient like (1-ξ^1) and are not term breaks;
/// exponents never carry signs so no other lookbehind is needed.
fn split_terms(s: &str) -> Result<Vec<(i8, &str)>> {
    let mut out = Vec::new();
    let mut start = 0usize;
    let mut sign: i8 = 1;
    let mut depth = 0i32;
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 => {
                if i > start {
                    out.push((sign, &s[start..i]));
                    sign = if ch == '-' { -1 } else { 1 };
                } else {
                    sign = if ch == '-' { -sign } else { sign };
                }
                start = i + 1;
            }
            _ => {}
        }
        i += 1;
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
    }
    if start >= s.len() {
        return Err(Error::Parse(format!("dangling sign in {s:?}")));
    }
    out.push((sign, &s[start..]));
    Ok(out)
}

/// Split a term on top-level `*`, respecting parenthesized coefficients.
fn split_factors(term: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    for (i, ch) in term.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => {
                out.push(&term[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&term[start..]);
    out
}

fn parse_term(term: &str, nvars: usize, r: u32) -> Result<MultiPoly> {
    let mut coeff = Scalar::one(r);
    let mut exps = vec![0u32; nvars];
    for factor in split_factors(term) {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in {term:?}")));
        }
        if let Some(rest) = factor.strip_prefix('ξ').or_else(|| factor.strip_prefix("xi")) {
            // guard: "x1" must not match the "xi" prefix
            let is_var = factor.starts_with('x')
                && factor.len() > 1
                && factor.as_bytes()[1].is_ascii_digit();
            if !is_var {
                let k: i64 = match rest.strip_prefix('^') {
                    Some(e) => e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                    None if rest.is_empty() => 1,
                    _ => return Err(Error::Parse(format!("bad factor {factor:?}"))),
                };
                coeff = &coeff * &Scalar::xi_pow(r, k);
                continue;
            }
        }
        if let Some(rest) = factor.strip_prefix('x') {
            let (idx_str, exp) = match rest.split_once('^') {
                Some((v, e)) => (
                    v,
                    e.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (rest, 1),
            };
            let idx: usize = idx_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
            if idx < 1 || idx > nvars {
                return Err(Error::Parse(format!(
                    "variable x{idx} outside 1..{nvars}"
                )));
            }
            exps[idx - 1] += exp;
            continue;
        }
        if factor.starts_with('(') && factor.ends_with(')') {
            // parenthesized scalar like (1+ξ^1): parse recursively at nvars=0-ish
            let inner = &factor[1..factor.len() - 1];
            let scalar_poly = parse_poly(inner, 1, r)?;
            let c = scalar_poly
                .constant_value(r)
                .ok_or_else(|| Error::Parse(format!("non-constant coefficient {factor:?}")))?;
            coeff = &coeff * &c;
            continue;
        }
        let q = parse_rational(factor)?;
        coeff = &coeff * &Scalar::from_rational(q, r);
    }
    Ok(MultiPoly::monomial_term(nvars, Monomial::new(exps), coeff))
}

/// Shape text `[(2,1)|()]`; a single component needs no pipe: `[(2,1)]`.
pub fn parse_shape(input: &str) -> Result<RDiagram> {
    let s = input.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("shape must be bracketed: {input:?}")))?;
    let mut components = Vec::new();
    for comp in inner.split('|') {
        let comp = comp.trim();
        let rows = comp
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("component must be parenthesized: {comp:?}")))?;
        if rows.trim().is_empty() {
            components.push(Vec::new());
            continue;
        }
        let parts: Result<Vec<usize>> = rows
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad row length {p:?}")))
            })
            .collect();
        components.push(parts?);
    }
    RDiagram::new(components)
}

/// Tableau text `[[1,2],[3]|[]]` against a known shape layout.
pub fn parse_tableau(input: &str) -> Result<RTableau> {
    let s = input.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("tableau must be bracketed: {input:?}")))?;
    let mut components: Vec<Vec<Vec<usize>>> = Vec::new();
    for comp in inner.split('|') {
        let comp = comp.trim();
        if comp.is_empty() || comp == "[]" {
            components.push(Vec::new());
            continue;
        }
        let mut rows = Vec::new();
        let mut depth = 0i32;
        let mut start = 0usize;
        for (i, ch) in comp.char_indices() {
            match ch {
                '[' => {
                    if depth == 0 {
                        start = i + 1;
                    }
                    depth += 1;
                }
                ']' => {
                    depth -= 1;
                    if depth == 0 {
                        let row_str = &comp[start..i];
                        if row_str.trim().is_empty() {
                            continue;
                        }
                        let row: Result<Vec<usize>> = row_str
                            .split(',')
                            .map(|p| {
                                p.trim()
                                    .parse::<usize>()
                                    .map_err(|_| Error::Parse(format!("bad entry {p:?}")))
                            })
                            .collect();
                        rows.push(row?);
                    }
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(Error::Parse(format!("unbalanced brackets in {comp:?}")));
        }
        components.push(rows);
    }
    let shape = RDiagram::new(
        components
            .iter()
            .map(|rows| rows.iter().map(|r| r.len()).collect())
            .collect(),
    )?;
    RTableau::new(shape, components)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/2").unwrap(), BigRational::new(3.into(), 2.into()));
        assert_eq!(parse_rational("-5").unwrap(), BigRational::from_integer((-5).into()));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn poly_round_trip() {
        for text in ["x1^3", "3/2*x1^2*x2 + x3", "x1^2 - x2^2", "0", "2*x1"] {
            let p = parse_poly(text, 3, 2).unwrap();
            assert_eq!(p.to_string(), text.replace("x3", "x3"));
        }
    }

    #[test]
    fn poly_with_roots_of_unity() {
        let p = parse_poly("3/2*x1^2*x2 + ξ^1*x3", 3, 3).unwrap();
        assert_eq!(p.to_string(), "3/2*x1^2*x2 + ξ^1*x3");
        // ASCII alias
        let q = parse_poly("xi^1*x3", 3, 3).unwrap();
        assert_eq!(q.to_string(), "ξ^1*x3");
        // x1 does not collide with the xi alias
        let r = parse_poly("x1", 3, 3).unwrap();
        assert_eq!(r.to_string(), "x1");
    }

    #[test]
    fn parenthesized_coefficients_round_trip() {
        // signs and products inside a scalar coefficient are not term breaks
        for text in [
            "(1+ξ^1)*x1",
            "(1-ξ^1)*x1 + x2",
            "(1/2-1/2*ξ^1)*x1^2",
            "(-2+ξ^1)*x1 - x2",
        ] {
            let p = parse_poly(text, 2, 3).unwrap();
            assert_eq!(parse_poly(&p.to_string(), 2, 3).unwrap(), p, "{text}");
        }
    }

    #[test]
    fn signs_and_spaces() {
        let p = parse_poly(" - x1 + 2 * x2 ", 2, 2).unwrap();
        assert_eq!(p.to_string(), "-x1 + 2*x2");
    }

    #[test]
    fn shapes() {
        let d = parse_shape("[(2,1)|()]").unwrap();
        assert_eq!(d.components, vec![vec![2, 1], vec![]]);
        assert_eq!(d.canonical_string(), "[(2,1)|()]");
        let d = parse_shape("[(1)|(1)]").unwrap();
        assert_eq!(d.components, vec![vec![1], vec![1]]);
        assert!(parse_shape("[(1,2)]").is_err());
    }

    #[test]
    fn tableaux() {
        let t = parse_tableau("[[1,2],[3]|[]]").unwrap();
        assert_eq!(t.canonical_string(), "[[1,2],[3]|[]]");
        assert!(t.is_standard());
        let t = parse_tableau("[[1]|[2]]").unwrap();
        assert_eq!(t.rows, vec![vec![vec![1]], vec![vec![2]]]);
    }
}
