//! Text formats: algebra specs, vertex and module literals, object sets.

use serde::{Deserialize, Serialize};

use crate::dynkin::{validate_type, Family, RfsType, TypeFamily, Vertex};
use crate::error::{Error, Result};
use crate::nakayama::{NakayamaAlgebra, NakayamaModule};
use crate::stable::ObjectSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum FrequencyLiteral {
    Integer(u64),
    Text(String),
}

/// `{"family":"D","n":6,"f":"1/3","t":1}`; `t` defaults to 1 and `f` may be
/// an integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraSpec {
    family: String,
    n: u32,
    f: FrequencyLiteral,
    #[serde(default = "one")]
    t: u32,
    #[serde(default = "yes")]
    standard: bool,
}

fn one() -> u32 {
    1
}

fn yes() -> bool {
    true
}

fn parse_u64(s: &str) -> Result<u64> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("expected a non-negative integer, got {s:?}")));
    }
    s.parse().map_err(|_| Error::Parse(format!("integer {s:?} is too large")))
}

fn parse_i64(s: &str) -> Result<i64> {
    let t = s.trim();
    let (neg, digits) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let v = i64::try_from(parse_u64(digits)?).map_err(|_| Error::Parse(format!("integer {t:?} is too large")))?;
    Ok(if neg { -v } else { v })
}

fn parse_u32(s: &str) -> Result<u32> {
    u32::try_from(parse_u64(s)?).map_err(|_| Error::Parse(format!("integer {:?} is too large", s.trim())))
}

/// Parses an algebra spec document and validates the type.
pub fn parse_algebra(text: &str) -> Result<RfsType> {
    let spec: AlgebraSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let family = match spec.family.as_str() {
        "A" => Family::A,
        "D" => Family::D,
        "E" => Family::E,
        other => return Err(Error::InvalidDiagram(format!("unknown family {other:?}"))),
    };
    let (num, den) = match &spec.f {
        FrequencyLiteral::Integer(k) => (*k, 1),
        FrequencyLiteral::Text(s) => match s.split_once('/') {
            Some((a, b)) => (parse_u64(a)?, parse_u64(b)?),
            None => (parse_u64(s)?, 1),
        },
    };
    let mut rfs = validate_type(family, spec.n, num, den, spec.t)?;
    if !spec.standard {
        if rfs.type_family() != TypeFamily::DThird || !rfs.is_symmetric() {
            return Err(Error::InvalidParameter(format!("{rfs} has no non-standard algebras")));
        }
        rfs.standard = false;
    }
    Ok(rfs)
}

/// Largest accepted `|p|` in a vertex literal.
pub const MAX_COLUMN: i64 = 1 << 48;

/// `"(p,q)"`.
pub fn parse_vertex(text: &str) -> Result<Vertex> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected (p,q), got {text:?}")))?;
    let (p, q) = inner
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected (p,q), got {text:?}")))?;
    let p = parse_i64(p)?;
    if p.abs() > MAX_COLUMN {
        return Err(Error::Parse(format!("column {p} exceeds {MAX_COLUMN} in absolute value")));
    }
    Ok(Vertex::new(p, parse_u32(q)?))
}

/// `"X_i(m)"`.
pub fn parse_module(text: &str) -> Result<NakayamaModule> {
    let t = text.trim();
    let rest = t
        .strip_prefix("X_")
        .ok_or_else(|| Error::Parse(format!("expected X_i(m), got {text:?}")))?;
    let (i, m) = rest
        .strip_suffix(')')
        .and_then(|r| r.split_once('('))
        .ok_or_else(|| Error::Parse(format!("expected X_i(m), got {text:?}")))?;
    Ok(NakayamaModule::new(parse_u32(i)?, parse_u32(m)?))
}

/// Composition factors listed from top to socle, e.g. `"2/3/4"` is `X_4(3)`.
/// Consecutive factors must follow the cyclic quiver.
pub fn parse_stacked(text: &str, alg: &NakayamaAlgebra) -> Result<NakayamaModule> {
    let factors = text.split('/').map(parse_u32).collect::<Result<Vec<_>>>()?;
    for &f in &factors {
        if !(1..=alg.s()).contains(&f) {
            return Err(Error::SocleOutOfRange { index: f, s: alg.s() });
        }
    }
    for w in factors.windows(2) {
        if w[1] != alg.bar(i64::from(w[0]) + 1) {
            return Err(Error::Parse(format!("{text:?} is not a uniserial module: {} cannot lie above {}", w[0], w[1])));
        }
    }
    let socle = *factors.last().expect("split yields at least one item");
    let length = u32::try_from(factors.len()).map_err(|_| Error::Parse("too many factors".into()))?;
    Ok(NakayamaModule::new(socle, length))
}

/// Splits at commas outside parentheses; surrounding braces are optional.
pub fn split_items(text: &str) -> Result<Vec<&str>> {
    let mut t = text.trim();
    if let Some(inner) = t.strip_prefix('{') {
        t = inner
            .strip_suffix('}')
            .ok_or_else(|| Error::Parse("unbalanced braces".into()))?
            .trim();
    }
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let mut items = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in t.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse("unbalanced parentheses".into()));
                }
            }
            ',' if depth == 0 => {
                items.push(t[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced parentheses".into()));
    }
    items.push(t[start..].trim());
    if items.iter().any(|s| s.is_empty()) {
        return Err(Error::Parse("empty item in set".into()));
    }
    Ok(items)
}

/// One object: a vertex of ZΔ (any lift), or on Nakayama types a module
/// literal or stacked notation.
pub fn parse_object(text: &str, rfs: &RfsType) -> Result<Vertex> {
    let t = text.trim();
    let nakayama = || {
        NakayamaAlgebra::from_rfs(rfs).map_err(|_| Error::Parse(format!("{t:?} needs a Nakayama type, got {rfs}")))
    };
    let v = if t.starts_with('(') {
        parse_vertex(t)?
    } else if t.starts_with("X_") {
        let alg = nakayama()?;
        alg.to_vertex(parse_module(t)?)?
    } else {
        let alg = nakayama()?;
        alg.to_vertex(parse_stacked(t, &alg)?)?
    };
    if !rfs.diagram().contains(v) {
        return Err(Error::RowOutOfRange { q: v.q, n: rfs.n() });
    }
    Ok(rfs.canonical(v))
}

/// A comma-separated set of objects, canonicalized. Two items naming the same
/// object are an error.
pub fn parse_object_set(text: &str, rfs: &RfsType) -> Result<ObjectSet> {
    let mut out = std::collections::BTreeSet::new();
    for item in split_items(text)? {
        let v = parse_object(item, rfs)?;
        if !out.insert(v) {
            return Err(Error::Parse(format!("{item:?} repeats object {v}")));
        }
    }
    Ok(ObjectSet::from_canonical(out))
}
