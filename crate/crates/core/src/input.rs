//! The declarative JSON input document.
//!
//! ```json
//! {
//!   "rank": 2,
//!   "gram": [[1, 0], [0, 1]],
//!   "group": { "kind": "cyclic", "matrices": [[[0, 1], [1, 0]]], "bound": 100 }
//! }
//! ```
//!
//! `gram` and `bound` are optional. `kind` is one of `cyclic` (exactly one
//! matrix), `list` (every element) or `generated` (generators). Errors name
//! the offending field with a JSON-path-like string.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::cohomology::{GLattice, GroupSpec, DEFAULT_ORDER_BOUND};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic,
    List,
    Generated,
}

impl GroupKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupKind::Cyclic => "cyclic",
            GroupKind::List => "list",
            GroupKind::Generated => "generated",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInput {
    pub kind: GroupKind,
    pub matrices: Vec<IntMatrix>,
    pub bound: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub rank: usize,
    pub gram: Option<IntMatrix>,
    pub group: GroupInput,
}

/// Parses and validates a document. Matrices are checked for shape,
/// unimodularity and preservation of `gram` here, before any computation.
pub fn parse_input(text: &str) -> Result<InputDocument> {
    let root: Value = serde_json::from_str(text).map_err(|e| {
        Error::input(
            "$",
            format!(
                "invalid JSON at line {} column {}: {}",
                e.line(),
                e.column(),
                e
            ),
        )
    })?;
    let obj = as_object(&root, "$")?;
    reject_unknown(obj, "$", &["rank", "gram", "group"])?;

    let rank = match obj.get("rank") {
        Some(v) => as_count(v, "rank")?,
        None => return Err(Error::input("rank", "missing field")),
    };
    let gram = match obj.get("gram") {
        None | Some(Value::Null) => None,
        Some(v) => Some(parse_matrix(v, "gram", rank)?),
    };

    let group = obj
        .get("group")
        .ok_or_else(|| Error::input("group", "missing field"))?;
    let gobj = as_object(group, "group")?;
    reject_unknown(gobj, "group", &["kind", "matrices", "bound"])?;
    let kind = match gobj.get("kind") {
        Some(Value::String(s)) => match s.as_str() {
            "cyclic" => GroupKind::Cyclic,
            "list" => GroupKind::List,
            "generated" => GroupKind::Generated,
            other => {
                return Err(Error::input(
                    "group.kind",
                    format!(
                        "expected \"cyclic\", \"list\" or \"generated\", got \"{}\"",
                        other
                    ),
                ))
            }
        },
        Some(_) => return Err(Error::input("group.kind", "expected a string")),
        None => return Err(Error::input("group.kind", "missing field")),
    };
    let bound = match gobj.get("bound") {
        None | Some(Value::Null) => None,
        Some(v) => {
            let b = as_count(v, "group.bound")?;
            if b == 0 {
                return Err(Error::input("group.bound", "must be at least 1"));
            }
            Some(b)
        }
    };
    let list = match gobj.get("matrices") {
        Some(Value::Array(a)) => a,
        Some(_) => {
            return Err(Error::input(
                "group.matrices",
                "expected an array of matrices",
            ))
        }
        None => return Err(Error::input("group.matrices", "missing field")),
    };
    if list.is_empty() {
        return Err(Error::input(
            "group.matrices",
            "at least one matrix is required",
        ));
    }
    if kind == GroupKind::Cyclic && list.len() != 1 {
        return Err(Error::input(
            "group.matrices",
            format!(
                "cyclic groups take exactly one generator, got {}",
                list.len()
            ),
        ));
    }
    let matrices = list
        .iter()
        .enumerate()
        .map(|(i, m)| parse_matrix(m, &format!("group.matrices[{}]", i), rank))
        .collect::<Result<Vec<_>>>()?;

    for (i, m) in matrices.iter().enumerate() {
        let det = m.det()?;
        if det != BigInt::from(1) && det != BigInt::from(-1) {
            return Err(Error::input(
                format!("group.matrices[{}]", i),
                format!("not unimodular (det = {})", det),
            ));
        }
    }
    if let Some(f) = &gram {
        if f != &f.transpose() {
            return Err(Error::input("gram", "not symmetric"));
        }
        for (i, m) in matrices.iter().enumerate() {
            if &m.transpose().mul(f)?.mul(m)? != f {
                return Err(Error::input(
                    format!("group.matrices[{}]", i),
                    "does not preserve the gram form",
                ));
            }
        }
    }

    Ok(InputDocument {
        rank,
        gram,
        group: GroupInput {
            kind,
            matrices,
            bound,
        },
    })
}

impl InputDocument {
    pub fn group_spec(&self) -> GroupSpec {
        let matrices = self.group.matrices.clone();
        match self.group.kind {
            GroupKind::Cyclic => GroupSpec::Cyclic {
                generator: matrices.into_iter().next().expect("validated"),
            },
            GroupKind::List => GroupSpec::Explicit { elements: matrices },
            GroupKind::Generated => GroupSpec::Generated {
                generators: matrices,
                closure_bound: self.group.bound.unwrap_or(DEFAULT_ORDER_BOUND),
            },
        }
    }

    pub fn to_glattice(&self) -> Result<GLattice> {
        GLattice::with_order_bound(
            self.rank,
            self.group_spec(),
            self.gram.clone(),
            self.group.bound.unwrap_or(DEFAULT_ORDER_BOUND),
        )
        .map_err(|e| match e {
            Error::InvalidGroup(msg) => Error::input("group", msg),
            Error::GroupTooLarge { bound } => Error::input(
                "group",
                format!(
                    "group too large or infinite: closure exceeds bound {}",
                    bound
                ),
            ),
            other => other,
        })
    }

    /// Normalized echo; parsing it again gives an equal document.
    pub fn to_json(&self) -> Value {
        let mut group = Map::new();
        group.insert("kind".into(), json!(self.group.kind.as_str()));
        group.insert(
            "matrices".into(),
            Value::Array(self.group.matrices.iter().map(matrix_json).collect()),
        );
        if let Some(b) = self.group.bound {
            group.insert("bound".into(), json!(b));
        }
        let mut root = Map::new();
        root.insert("rank".into(), json!(self.rank));
        if let Some(g) = &self.gram {
            root.insert("gram".into(), matrix_json(g));
        }
        root.insert("group".into(), Value::Object(group));
        Value::Object(root)
    }
}

pub fn bigint_json(x: &BigInt) -> Value {
    use num_traits::ToPrimitive;
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(bigint_json).collect()))
            .collect(),
    )
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::input(path, "expected an object"))
}

fn reject_unknown(obj: &Map<String, Value>, path: &str, known: &[&str]) -> Result<()> {
    match obj.keys().find(|k| !known.contains(&k.as_str())) {
        Some(k) => Err(Error::input(
            if path == "$" {
                k.clone()
            } else {
                format!("{}.{}", path, k)
            },
            "unknown field",
        )),
        None => Ok(()),
    }
}

fn as_count(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| Error::input(path, "expected a nonnegative integer"))
}

fn parse_matrix(v: &Value, path: &str, rank: usize) -> Result<IntMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::input(path, "expected a matrix (array of rows)"))?;
    if rows.len() != rank {
        return Err(Error::input(
            path,
            format!("expected {}x{} matrix, got {} rows", rank, rank, rows.len()),
        ));
    }
    let mut data = Vec::with_capacity(rank * rank);
    for (i, row) in rows.iter().enumerate() {
        let row_path = format!("{}[{}]", path, i);
        let entries = row
            .as_array()
            .ok_or_else(|| Error::input(&row_path, "expected an array of integers"))?;
        if entries.len() != rank {
            return Err(Error::input(
                &row_path,
                format!("expected {} entries, got {}", rank, entries.len()),
            ));
        }
        for (j, e) in entries.iter().enumerate() {
            let x = match e {
                Value::Number(n) if n.is_i64() => BigInt::from(n.as_i64().unwrap()),
                Value::Number(n) if n.is_u64() => BigInt::from(n.as_u64().unwrap()),
                Value::String(s) => s.parse::<BigInt>().map_err(|_| {
                    Error::input(format!("{}[{}]", row_path, j), "expected an integer")
                })?,
                _ => {
                    return Err(Error::input(
                        format!("{}[{}]", row_path, j),
                        "expected an integer",
                    ))
                }
            };
            data.push(x);
        }
    }
    IntMatrix::from_vec(rank, rank, data)
}
