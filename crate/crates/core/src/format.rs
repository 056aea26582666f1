//! Line-oriented text formats. `#` starts a comment; blank lines are ignored.
//! Scalars are integers or `p/q`.
//!
//! Algebra files:
//!
//! ```text
//! name sl2
//! dims 3 0
//! labels h e f
//! # [x_i, x_j] has coefficient c on x_k
//! h e e 2
//! e h e -2
//! ```
//!
//! Entries name basis elements by label or 1-based index; every nonzero
//! structure constant is listed.
//!
//! Matrix files hold one row per line. Kac files describe a subalgebra of
//! `Der(L ⊗ Λ(n))` by generators (`sym`, `include inner`, `grading`, `vector`),
//! and coaction files give the data of an action of a free Hopf superalgebra
//! on an abelian one (`source`, `target`, `f`, `char`).

use std::collections::HashMap;

use num::{One, Zero};

use crate::derivations::GrassmannDerivation;
use crate::error::{Error, Result};
use crate::grassmann::GrassmannElement;
use crate::hopf::{AbelianHopfAlgebra, CoactionData, FreeGen, FreeHopfSuperalgebra, HopfAlgebra, SuperPoly};
use crate::lie::LieSuperAlgebra;
use crate::linalg::{Matrix, Vector};
use crate::scalar::{format_scalar, parse_scalar, Parity, Scalar};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn scalar_at(token: &str, line: usize) -> Result<Scalar> {
    parse_scalar(token).ok_or_else(|| parse_error(line, format!("expected an integer or p/q, found '{token}'")))
}

fn usize_at(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| parse_error(line, format!("expected a non-negative integer, found '{token}'")))
}

pub fn parse_algebra(text: &str) -> Result<LieSuperAlgebra> {
    let mut name = String::from("algebra");
    let mut dims: Option<(usize, usize)> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut seen: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut entries = Vec::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "name" => {
                name = tokens[1..].join(" ");
                if name.is_empty() {
                    return Err(parse_error(line, "name needs a value"));
                }
            }
            "dims" => {
                if dims.is_some() {
                    return Err(parse_error(line, "dims given twice"));
                }
                if tokens.len() != 3 {
                    return Err(parse_error(line, "expected 'dims <even> <odd>'"));
                }
                dims = Some((usize_at(tokens[1], line)?, usize_at(tokens[2], line)?));
            }
            "labels" => {
                let (m, n) = dims.ok_or_else(|| parse_error(line, "labels must follow dims"))?;
                if tokens.len() - 1 != m + n {
                    return Err(parse_error(line, format!("expected {} labels, found {}", m + n, tokens.len() - 1)));
                }
                let list: Vec<String> = tokens[1..].iter().map(|s| s.to_string()).collect();
                for (i, l) in list.iter().enumerate() {
                    if l.parse::<usize>().is_ok() {
                        return Err(parse_error(line, format!("label '{l}' is a number")));
                    }
                    if ["name", "dims", "labels"].contains(&l.as_str()) {
                        return Err(parse_error(line, format!("label '{l}' is a directive")));
                    }
                    if list[..i].contains(l) {
                        return Err(parse_error(line, format!("label '{l}' repeats")));
                    }
                }
                labels = Some(list);
            }
            _ => {
                let (m, n) = dims.ok_or_else(|| parse_error(line, "structure constants must follow dims"))?;
                let d = m + n;
                if tokens.len() != 4 {
                    return Err(parse_error(line, "expected 'i j k value'"));
                }
                let index = |tok: &str| -> Result<usize> {
                    if let Ok(i) = tok.parse::<usize>() {
                        if i == 0 || i > d {
                            return Err(parse_error(line, format!("index {i} outside 1..{d}")));
                        }
                        return Ok(i - 1);
                    }
                    labels
                        .as_ref()
                        .and_then(|ls| ls.iter().position(|l| l == tok))
                        .ok_or_else(|| parse_error(line, format!("unknown basis element '{tok}'")))
                };
                let (i, j, k) = (index(tokens[0])?, index(tokens[1])?, index(tokens[2])?);
                let c = scalar_at(tokens[3], line)?;
                if let Some(first) = seen.insert((i, j, k), line) {
                    return Err(parse_error(line, format!("duplicate entry for ({}, {}, {}), first given on line {first}", i + 1, j + 1, k + 1)));
                }
                let parity = |x: usize| usize::from(x >= m);
                if !c.is_zero() && (parity(i) + parity(j)) % 2 != parity(k) {
                    return Err(parse_error(line, "bracket of these basis elements cannot have a component on this one (parity)"));
                }
                entries.push((i, j, k, c));
            }
        }
    }
    let (m, n) = dims.ok_or_else(|| parse_error(text.lines().count().max(1), "missing 'dims' line"))?;
    let mut l = LieSuperAlgebra::from_constants(name, m, n, entries)?;
    if let Some(ls) = labels {
        l = l.with_labels(ls);
    }
    Ok(l)
}

pub fn write_algebra(l: &LieSuperAlgebra) -> String {
    let mut out = format!("name {}\ndims {} {}\nlabels {}\n", l.name(), l.even_dim(), l.odd_dim(), l.labels().join(" "));
    for (i, j, k, c) in l.nonzero_constants() {
        out.push_str(&format!("{} {} {} {}\n", l.label(i), l.label(j), l.label(k), format_scalar(&c)));
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut rows: Vec<Vector> = Vec::new();
    for (line, content) in content_lines(text) {
        let row: Vector = content.split_whitespace().map(|t| scalar_at(t, line)).collect::<Result<_>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(parse_error(line, format!("row has {} entries, expected {}", row.len(), first.len())));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_error(1, "empty matrix"));
    }
    Matrix::from_rows(rows)
}

pub fn write_matrix(m: &Matrix) -> String {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_scalar).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}

/// A monomial term: coefficient and `(generator, exponent)` factors in written order.
type Term = (Scalar, Vec<(usize, i32)>);

/// Parses `-1/2 z1 z2 + 3z2 - t^-1` style sums over the given generator names.
fn parse_terms(text: &str, names: &[String]) -> std::result::Result<Vec<Term>, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    if compact.is_empty() {
        return Err("empty expression".into());
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut prev: Option<char> = None;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !current.is_empty() {
                pieces.push((negative, std::mem::take(&mut current)));
                negative = false;
            }
            negative ^= ch == '-';
        } else {
            current.push(ch);
        }
        prev = Some(ch);
    }
    if current.is_empty() {
        return Err("expression ends with a sign".into());
    }
    pieces.push((negative, current));

    let mut order: Vec<usize> = (0..names.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(names[i].len()));
    pieces
        .into_iter()
        .map(|(neg, piece)| {
            let split = piece.find(|c: char| !(c.is_ascii_digit() || c == '/')).unwrap_or(piece.len());
            let (coeff_text, mut rest) = piece.split_at(split);
            let mut coeff = if coeff_text.is_empty() {
                Scalar::one()
            } else {
                parse_scalar(coeff_text).ok_or_else(|| format!("bad coefficient '{coeff_text}'"))?
            };
            if neg {
                coeff = -coeff;
            }
            let mut factors = Vec::new();
            while !rest.is_empty() {
                let g = order
                    .iter()
                    .copied()
                    .find(|&i| rest.starts_with(names[i].as_str()))
                    .ok_or_else(|| format!("unknown generator at '{rest}'"))?;
                rest = &rest[names[g].len()..];
                let mut exp = 1;
                if let Some(after) = rest.strip_prefix('^') {
                    let end = after
                        .char_indices()
                        .find(|&(k, c)| !(c.is_ascii_digit() || (k == 0 && c == '-')))
                        .map(|(k, _)| k)
                        .unwrap_or(after.len());
                    exp = after[..end].parse().map_err(|_| format!("bad exponent in '{piece}'"))?;
                    rest = &after[end..];
                }
                factors.push((g, exp));
            }
            Ok((coeff, factors))
        })
        .collect()
}

/// Element of `Λ(n)` written in `z1 .. zn`.
pub fn parse_grassmann(text: &str, n: usize) -> std::result::Result<GrassmannElement, String> {
    let names: Vec<String> = (1..=n).map(|i| format!("z{i}")).collect();
    let mut out = GrassmannElement::zero(n);
    for (c, factors) in parse_terms(text, &names)? {
        let mut term = GrassmannElement::scalar(n, c);
        for (g, e) in factors {
            if e < 0 {
                return Err(format!("negative power of {}", names[g]));
            }
            for _ in 0..e {
                term = &term * &GrassmannElement::generator(n, g);
            }
        }
        out += &term;
    }
    Ok(out)
}

/// Element of a single-block free superalgebra, generators named as in its signature.
pub fn parse_superpoly(text: &str, h: &impl HopfAlgebra) -> std::result::Result<SuperPoly, String> {
    let sig = h.sig();
    let names: Vec<String> = (0..sig.len()).map(|i| sig.name(i).to_string()).collect();
    let mut out = SuperPoly::zero(sig);
    for (c, factors) in parse_terms(text, &names)? {
        let mut term = SuperPoly::scalar(sig, c);
        for (g, e) in factors {
            let mut exps = vec![0; sig.len()];
            exps[g] = e;
            if e < 0 && sig.kind(g) != crate::hopf::GenKind::GroupLike {
                return Err(format!("negative power of {}", names[g]));
            }
            if e > 1 && sig.kind(g) == crate::hopf::GenKind::Odd {
                term = SuperPoly::zero(sig);
                continue;
            }
            term = &term * &SuperPoly::monomial(sig, exps, Scalar::one());
        }
        out = &out + &term;
    }
    Ok(out)
}

/// Generators of a subalgebra `H ⊆ Der(L ⊗ Λ(n))`.
#[derive(Clone, Debug, Default)]
pub struct KacInput {
    pub n: usize,
    pub include_inner: bool,
    /// `id ⊗ δ` with `z_i δ = f_i`.
    pub gradings: Vec<GrassmannDerivation>,
    /// Raw coordinates in the basis of `Der(L ⊗ Λ(n))`.
    pub vectors: Vec<(usize, Vector)>,
}

pub fn parse_kac_input(text: &str) -> Result<KacInput> {
    let mut input = KacInput::default();
    let mut n: Option<usize> = None;
    for (line, content) in content_lines(text) {
        let (head, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        match head {
            "sym" => {
                if n.is_some() {
                    return Err(parse_error(line, "sym given twice"));
                }
                n = Some(usize_at(rest, line)?);
            }
            "include" => match rest {
                "inner" => input.include_inner = true,
                other => return Err(parse_error(line, format!("cannot include '{other}'; only 'inner' is known"))),
            },
            "grading" => {
                let n = n.ok_or_else(|| parse_error(line, "grading must follow sym"))?;
                let parts: Vec<&str> = rest.split(';').collect();
                if parts.len() != n {
                    return Err(parse_error(line, format!("expected {n} images separated by ';', found {}", parts.len())));
                }
                let comps = parts
                    .iter()
                    .map(|p| parse_grassmann(p, n).map_err(|m| parse_error(line, m)))
                    .collect::<Result<Vec<_>>>()?;
                let d = GrassmannDerivation::new(comps);
                if d.parity().is_none() {
                    return Err(parse_error(line, "derivation is not homogeneous"));
                }
                input.gradings.push(d);
            }
            "vector" => {
                let v = rest.split_whitespace().map(|t| scalar_at(t, line)).collect::<Result<Vector>>()?;
                input.vectors.push((line, v));
            }
            other => return Err(parse_error(line, format!("unknown directive '{other}'"))),
        }
    }
    input.n = n.ok_or_else(|| parse_error(1, "missing 'sym <n>' line"))?;
    Ok(input)
}

/// ```text
/// source 1 1 2                 # r l k of G_m^r × G_a^l × (G_a^-)^k
/// target u:odd v:odd           # primitive odd, primitive even, or grouplike
/// f 1 2 = -v                   # f_ij; unlisted entries are δ_ij
/// char 1 1 = uv                # f_i(t_a) as char a i; unlisted entries are 0
/// ```
pub fn parse_coaction(text: &str) -> Result<CoactionData> {
    let mut source: Option<AbelianHopfAlgebra> = None;
    let mut target: Option<FreeHopfSuperalgebra> = None;
    let mut f_entries: Vec<(usize, usize, usize, String)> = Vec::new();
    let mut chars: Vec<(usize, usize, usize, String)> = Vec::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "source" => {
                if tokens.len() != 4 {
                    return Err(parse_error(line, "expected 'source <r> <l> <k>'"));
                }
                let (r, l, k) = (usize_at(tokens[1], line)?, usize_at(tokens[2], line)?, usize_at(tokens[3], line)?);
                source = Some(AbelianHopfAlgebra::new(r, l, k));
            }
            "target" => {
                let gens = tokens[1..]
                    .iter()
                    .map(|t| {
                        let (name, kind) = t.split_once(':').ok_or_else(|| parse_error(line, format!("expected name:kind, found '{t}'")))?;
                        let kind = match kind {
                            "odd" => FreeGen::OddPrimitive,
                            "even" => FreeGen::EvenPrimitive,
                            "grouplike" => FreeGen::GroupLike,
                            other => return Err(parse_error(line, format!("unknown generator kind '{other}'"))),
                        };
                        Ok((name.to_string(), kind))
                    })
                    .collect::<Result<Vec<_>>>()?;
                target = Some(FreeHopfSuperalgebra::new("G", gens));
            }
            "f" | "char" => {
                let (lhs, rhs) = content.split_once('=').ok_or_else(|| parse_error(line, "expected '='"))?;
                let idx: Vec<&str> = lhs.split_whitespace().skip(1).collect();
                if idx.len() != 2 {
                    return Err(parse_error(line, "expected two indices before '='"));
                }
                let (a, b) = (usize_at(idx[0], line)?, usize_at(idx[1], line)?);
                if a == 0 || b == 0 {
                    return Err(parse_error(line, "indices are 1-based"));
                }
                let entry = (line, a - 1, b - 1, rhs.trim().to_string());
                if tokens[0] == "f" {
                    f_entries.push(entry);
                } else {
                    chars.push(entry);
                }
            }
            other => return Err(parse_error(line, format!("unknown directive '{other}'"))),
        }
    }
    let source = source.ok_or_else(|| parse_error(1, "missing 'source' line"))?;
    let target = target.ok_or_else(|| parse_error(1, "missing 'target' line"))?;
    let base = CoactionData::trivial(source.clone(), target.clone());
    let (mut matrix, mut characters) = (base.matrix, base.characters);
    let n = source.l() + source.k();
    for (line, i, j, expr) in f_entries {
        if i >= n || j >= n {
            return Err(parse_error(line, format!("f index outside 1..{n}")));
        }
        matrix[i][j] = parse_superpoly(&expr, &target).map_err(|m| parse_error(line, m))?;
    }
    for (line, a, i, expr) in chars {
        if a >= source.r() || i >= n {
            return Err(parse_error(line, "char index out of range"));
        }
        characters[a][i] = parse_superpoly(&expr, &target).map_err(|m| parse_error(line, m))?;
    }
    CoactionData::new(source, target, matrix, characters).map_err(|e| match e {
        Error::Parity(m) => parse_error(1, m),
        other => other,
    })
}

pub fn parity_name(p: Parity) -> &'static str {
    if p.is_odd() {
        "odd"
    } else {
        "even"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{make_gl, make_sl2};
    use crate::scalar::{int, ratio};

    #[test]
    fn algebra_round_trip() {
        for l in [make_sl2(), make_gl(1, 1)] {
            let text = write_algebra(&l);
            assert_eq!(parse_algebra(&text).unwrap(), l, "{text}");
        }
    }

    #[test]
    fn duplicate_entry_is_reported_with_line() {
        let text = "dims 2 0\n1 2 2 1\n# again\n1 2 2 1\n";
        assert_eq!(
            parse_algebra(text).unwrap_err(),
            Error::Parse { line: 4, message: "duplicate entry for (1, 2, 2), first given on line 2".into() }
        );
    }

    #[test]
    fn parity_is_checked() {
        let err = parse_algebra("dims 1 1\n1 2 1 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn decimals_are_rejected() {
        assert!(matches!(parse_matrix("1 0.5\n0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert_eq!(parse_matrix("1 1/2\n0 -3\n").unwrap()[(0, 1)], ratio(1, 2));
    }

    #[test]
    fn grassmann_expressions() {
        let e = parse_grassmann("z2 z1 - 1/2 + 3z2", 2).unwrap();
        assert_eq!(e.coefficient(0b11), int(-1));
        assert_eq!(e.coefficient(0), ratio(-1, 2));
        assert_eq!(e.coefficient(0b10), int(3));
        assert!(parse_grassmann("z3", 2).is_err());
    }

    #[test]
    fn coaction_file() {
        let text = "source 1 1 2\ntarget u:odd v:odd\nf 1 2 = -v\nf 1 3 = u\nchar 1 1 = uv\nchar 1 2 = u\nchar 1 3 = v\n";
        let data = parse_coaction(text).unwrap();
        assert!(data.verify(2).unwrap().passed());
        let bad = parse_coaction("source 1 1 2\ntarget u:odd\nf 1 2 = u u\n").unwrap();
        assert!(bad.matrix[0][1].is_zero());
        assert!(matches!(parse_coaction("source 1 0 1\ntarget u:odd\nf 1 1 = u\n"), Err(Error::Parse { .. })));
    }
}
