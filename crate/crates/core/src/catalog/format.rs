//! The `leibalg v1` text format.
//!
//! ```text
//! leibalg v1 dim=3 kind=symmetric
//! # comment
//! 1 2 -> 1:1
//! 2 1 -> 1:-1
//! 2 2 -> 3:1
//! @id symm3
//! @frattini paper
//! 0 0 1
//! @flag phi-free no paper
//! ```
//!
//! Product lines give `[b_i, b_j]` with 1-based indices; unlisted products are
//! zero. After the first `@` line, bare lines are basis vectors of the
//! enclosing subspace block.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{Kind, StructureConstants};
use crate::exact::{format_rational, zero_vector, Rational, Subspace, Vector};

use super::{AlgebraEntry, Annotated, Annotations, CatalogError, Flag, MaximalList, Provenance};

const MAGIC: &str = "leibalg";
const VERSION: &str = "v1";

fn parse_err(line: usize, message: impl Into<String>) -> CatalogError {
    CatalogError::Parse {
        line,
        message: message.into(),
    }
}

/// `p/q` or an integer; decimals are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let int = |t: &str| -> Result<BigInt, String> {
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Err(format!("invalid rational `{s}`"));
        }
        BigInt::from_str(t).map_err(|_| format!("invalid rational `{s}`"))
    };
    let n = int(num)?;
    let d = match den {
        Some(d) => int(d)?,
        None => BigInt::from(1),
    };
    if d.is_zero() {
        return Err(format!("invalid rational `{s}`: zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Block currently collecting vector lines.
enum Block {
    None,
    Subspace { target: SubspaceField, provenance: Provenance, vectors: Vec<Vector>, line: usize },
}

#[derive(Clone, Copy)]
enum SubspaceField {
    Nilradical,
    Kernel,
    Frattini,
    Maximal,
}

struct Builder {
    dim: usize,
    id: Option<String>,
    annotations: Annotations,
    maximals: Vec<Annotated<Subspace>>,
    complete: Option<Provenance>,
}

impl Builder {
    fn close(&mut self, block: Block) -> Result<(), CatalogError> {
        if let Block::Subspace {
            target,
            provenance,
            vectors,
            line,
        } = block
        {
            let space = Subspace::span(self.dim, vectors).map_err(|e| parse_err(line, e.to_string()))?;
            let value = Annotated {
                value: space,
                provenance,
            };
            let duplicate = |name: &str| parse_err(line, format!("duplicate @{name} block"));
            match target {
                SubspaceField::Nilradical if self.annotations.nilradical.is_some() => return Err(duplicate("nilradical")),
                SubspaceField::Kernel if self.annotations.leibniz_kernel.is_some() => {
                    return Err(duplicate("leibniz-kernel"))
                }
                SubspaceField::Frattini if self.annotations.frattini.is_some() => return Err(duplicate("frattini")),
                SubspaceField::Nilradical => self.annotations.nilradical = Some(value),
                SubspaceField::Kernel => self.annotations.leibniz_kernel = Some(value),
                SubspaceField::Frattini => self.annotations.frattini = Some(value),
                SubspaceField::Maximal => self.maximals.push(value),
            }
        }
        Ok(())
    }
}

fn parse_header(line: &str) -> Result<(usize, Kind), CatalogError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 4 || fields[0] != MAGIC || fields[1] != VERSION {
        return Err(parse_err(1, format!("expected `{MAGIC} {VERSION} dim=<n> kind=<kind>`")));
    }
    let dim = fields[2]
        .strip_prefix("dim=")
        .and_then(|d| d.parse::<usize>().ok())
        .ok_or_else(|| parse_err(1, format!("invalid dimension field `{}`", fields[2])))?;
    let kind = fields[3]
        .strip_prefix("kind=")
        .and_then(|k| Kind::ALL.into_iter().find(|x| x.as_str() == k))
        .ok_or_else(|| parse_err(1, format!("invalid kind field `{}`", fields[3])))?;
    Ok((dim, kind))
}

fn parse_index(tok: &str, dim: usize, line: usize) -> Result<usize, CatalogError> {
    match tok.parse::<usize>() {
        Ok(i) if (1..=dim).contains(&i) => Ok(i - 1),
        _ => Err(parse_err(line, format!("index `{tok}` is not in 1..={dim}"))),
    }
}

fn parse_product(text: &str, dim: usize, line: usize) -> Result<(usize, usize, Vector), CatalogError> {
    let (lhs, rhs) = text.split_once("->").expect("caller checked for `->`");
    let idx: Vec<&str> = lhs.split_whitespace().collect();
    if idx.len() != 2 {
        return Err(parse_err(line, "expected `i j -> k:<rational> ...`"));
    }
    let i = parse_index(idx[0], dim, line)?;
    let j = parse_index(idx[1], dim, line)?;
    let mut v = zero_vector(dim);
    let mut seen = HashSet::new();
    let terms: Vec<&str> = rhs.split_whitespace().collect();
    if terms.is_empty() {
        return Err(parse_err(line, "product has no terms"));
    }
    for term in terms {
        let (k, c) = term
            .split_once(':')
            .ok_or_else(|| parse_err(line, format!("term `{term}` is not `k:<rational>`")))?;
        let k = parse_index(k, dim, line)?;
        if !seen.insert(k) {
            return Err(parse_err(line, format!("basis vector {} repeated", k + 1)));
        }
        v[k] = parse_rational(c).map_err(|e| parse_err(line, e))?;
    }
    Ok((i, j, v))
}

fn parse_provenance(tok: Option<&str>, line: usize) -> Result<Provenance, CatalogError> {
    let tok = tok.ok_or_else(|| parse_err(line, "missing provenance"))?;
    Provenance::from_str(tok).map_err(|e| parse_err(line, e))
}

/// Parses a document. Identity validation happens here, against the declared
/// kind; the entry id defaults to `default_id` when no `@id` line is present.
pub fn parse_named(text: &str, default_id: &str) -> Result<AlgebraEntry, CatalogError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (dim, kind) = loop {
        match lines.next() {
            None => return Err(parse_err(1, "empty document")),
            Some((_, l)) if l.trim().is_empty() || l.trim_start().starts_with('#') => continue,
            Some((no, l)) => {
                break parse_header(l).map_err(|e| match e {
                    CatalogError::Parse { message, .. } => parse_err(no, message),
                    other => other,
                })?
            }
        }
    };
    let mut products: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
    let mut b = Builder {
        dim,
        id: None,
        annotations: Annotations::default(),
        maximals: Vec::new(),
        complete: None,
    };
    let mut block = Block::None;
    let mut in_annotations = false;
    for (no, raw) in lines {
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        if let Some(rest) = text.strip_prefix('@') {
            in_annotations = true;
            b.close(std::mem::replace(&mut block, Block::None))?;
            let mut words = rest.split_whitespace();
            let name = words.next().unwrap_or("");
            let subspace = |target, prov: Option<&str>| -> Result<Block, CatalogError> {
                Ok(Block::Subspace {
                    target,
                    provenance: parse_provenance(prov, no)?,
                    vectors: Vec::new(),
                    line: no,
                })
            };
            let extra_after = |n: usize, words: &mut std::str::SplitWhitespace<'_>| {
                if words.clone().count() > n {
                    Err(parse_err(no, format!("trailing fields after @{name}")))
                } else {
                    Ok(())
                }
            };
            match name {
                "id" => {
                    extra_after(1, &mut words)?;
                    let id = words.next().ok_or_else(|| parse_err(no, "missing id"))?;
                    if b.id.replace(id.to_string()).is_some() {
                        return Err(parse_err(no, "duplicate @id"));
                    }
                }
                "nilradical" | "leibniz-kernel" | "frattini" | "maximal" => {
                    extra_after(1, &mut words)?;
                    block = subspace(match name {
                        "nilradical" => SubspaceField::Nilradical,
                        "leibniz-kernel" => SubspaceField::Kernel,
                        "frattini" => SubspaceField::Frattini,
                        _ => SubspaceField::Maximal,
                    }, words.next())?;
                }
                "maximal-complete" => {
                    extra_after(1, &mut words)?;
                    let p = parse_provenance(words.next(), no)?;
                    if b.complete.replace(p).is_some() {
                        return Err(parse_err(no, "duplicate @maximal-complete"));
                    }
                }
                "flag" => {
                    extra_after(3, &mut words)?;
                    let flag = words
                        .next()
                        .ok_or_else(|| parse_err(no, "missing flag name"))
                        .and_then(|f| Flag::from_str(f).map_err(|e| parse_err(no, e)))?;
                    let value = match words.next() {
                        Some("yes") => true,
                        Some("no") => false,
                        _ => return Err(parse_err(no, "flag value must be `yes` or `no`")),
                    };
                    let provenance = parse_provenance(words.next(), no)?;
                    if b.annotations.flags.insert(flag, Annotated { value, provenance }).is_some() {
                        return Err(parse_err(no, format!("duplicate flag `{flag}`")));
                    }
                }
                other => return Err(parse_err(no, format!("unknown annotation `@{other}`"))),
            }
            continue;
        }
        if text.contains("->") {
            if in_annotations {
                return Err(parse_err(no, "product line after annotations"));
            }
            let (i, j, v) = parse_product(text, dim, no)?;
            if products.insert((i, j), v).is_some() {
                return Err(parse_err(no, format!("duplicate product ({} {})", i + 1, j + 1)));
            }
            continue;
        }
        match &mut block {
            Block::Subspace { vectors, .. } => {
                let coords: Vec<&str> = text.split_whitespace().collect();
                if coords.len() != dim {
                    return Err(parse_err(no, format!("vector has {} coordinates, expected {dim}", coords.len())));
                }
                let v = coords
                    .iter()
                    .map(|c| parse_rational(c))
                    .collect::<Result<Vector, _>>()
                    .map_err(|e| parse_err(no, e))?;
                vectors.push(v);
            }
            Block::None => return Err(parse_err(no, format!("unexpected line `{text}`"))),
        }
    }
    b.close(block)?;
    if !b.maximals.is_empty() || b.complete.is_some() {
        b.annotations.maximals = Some(MaximalList {
            subalgebras: std::mem::take(&mut b.maximals),
            complete: b.complete,
        });
    }
    let constants = StructureConstants::from_products(dim, products.into_iter().map(|((i, j), v)| (i, j, v)))
        .map_err(|e| parse_err(1, e.to_string()))?;
    let id = b.id.unwrap_or_else(|| default_id.to_string());
    AlgebraEntry::new(id, kind, constants, b.annotations)
}

pub fn parse(text: &str) -> Result<AlgebraEntry, CatalogError> {
    parse_named(text, "unnamed")
}

fn write_subspace(out: &mut String, s: &Subspace) {
    for v in s.basis() {
        let coords: Vec<String> = v.iter().map(format_rational).collect();
        let _ = writeln!(out, "{}", coords.join(" "));
    }
}

/// Canonical text: sorted products, no comments, RREF bases, fixed block order.
pub fn serialize(entry: &AlgebraEntry) -> String {
    let l = &entry.constants;
    let n = l.dim();
    let mut out = String::new();
    let _ = writeln!(out, "{MAGIC} {VERSION} dim={n} kind={}", entry.kind.as_str());
    for (i, j, v) in l.nonzero_products() {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{}:{}", k + 1, format_rational(c)))
            .collect();
        let _ = writeln!(out, "{} {} -> {}", i + 1, j + 1, terms.join(" "));
    }
    let _ = writeln!(out, "@id {}", entry.id);
    let a = &entry.annotations;
    for (name, field) in [
        ("nilradical", &a.nilradical),
        ("leibniz-kernel", &a.leibniz_kernel),
        ("frattini", &a.frattini),
    ] {
        if let Some(s) = field {
            let _ = writeln!(out, "@{name} {}", s.provenance);
            write_subspace(&mut out, &s.value);
        }
    }
    if let Some(m) = &a.maximals {
        for s in &m.subalgebras {
            let _ = writeln!(out, "@maximal {}", s.provenance);
            write_subspace(&mut out, &s.value);
        }
        if let Some(p) = m.complete {
            let _ = writeln!(out, "@maximal-complete {p}");
        }
    }
    for (flag, v) in &a.flags {
        let _ = writeln!(out, "@flag {flag} {} {}", if v.value { "yes" } else { "no" }, v.provenance);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    const SYMM: &str = "leibalg v1 dim=3 kind=symmetric\n# example\n2 2 -> 3:1\n1 2 -> 1:1\n2 1 -> 1:-1\n@frattini paper\n0 0 2\n";

    #[test]
    fn parses_and_canonicalises() {
        let e = parse_named(SYMM, "s").unwrap();
        assert_eq!(e.id, "s");
        assert_eq!(e.constants.nonzero_products().count(), 3);
        let text = serialize(&e);
        assert!(text.starts_with("leibalg v1 dim=3 kind=symmetric\n1 2 -> 1:1\n"));
        assert!(text.contains("@frattini paper\n0 0 1\n"));
        assert_eq!(serialize(&parse(&text).unwrap()), text);
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1) / rat(2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        for bad in ["1/0", "0.5", "1e3", "", "/2", "a"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    fn line_of(text: &str) -> usize {
        match parse(text) {
            Err(CatalogError::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of("leibalg v1 dim=2 kind=right\n1 1 -> 1:1/0\n"), 2);
        assert_eq!(line_of("leibalg v1 dim=2 kind=right\n1 1 -> 2:1\n\n1 1 -> 2:3\n"), 4);
        assert_eq!(line_of("leibalg v1 dim=2 kind=right\n1 3 -> 2:1\n"), 2);
        assert_eq!(line_of("leibalg v2 dim=2 kind=right\n"), 1);
        assert_eq!(line_of("leibalg v1 dim=2 kind=right\n@frattini paper\n1 0 0\n"), 3);
        assert_eq!(line_of("leibalg v1 dim=2 kind=right\n@bogus\n"), 2);
    }

    #[test]
    fn identity_failure_is_validation() {
        // a nonzero square rules out a Lie algebra
        let err = parse("leibalg v1 dim=2 kind=lie\n1 1 -> 2:1\n").unwrap_err();
        assert!(matches!(err, CatalogError::Validation { .. }), "{err}");
    }
}
