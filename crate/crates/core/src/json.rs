//! JSON encodings. Rationals are always strings (`"3"`, `"-1/2"`).
//!
//! ```text
//! basis index   {"alpha": "1/2", "mono": [2]}          (Laurent exponents)
//!               {"alpha": "1/2", "mono": 1}            (table basis id)
//! element       {"terms": [{"alpha": .., "mono": .., "coeff": ".."}]}
//! tensor        {"terms": [{"factors": [<basis index>, ..], "coeff": ".."}]}
//! derivation    {"domain": [<basis index>..], "values": {"L[1;0]": <tensor>}}
//! table         {"unit": 0, "table": [[[{"id": 1, "coeff": "1"}], ..], ..]}
//! ```
//!
//! Anywhere an element or tensor is read, `{"expr": "<text>"}` is accepted as
//! well and parsed with the text grammar.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{BasisIndex, Element, MapAlgebra};
use crate::coefficients::{CoefficientAlgebra, Mono, StructureTable};
use crate::cohomology::{DerivationTable, InconsistencyCertificate};
use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::parser::{parse_element, parse_tensor2, parse_tensor3};
use crate::scalar::{format_rational, parse_rational, Scalar};
use crate::tensor::{Tensor2, Tensor3};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum MonoJson {
    Exps(Vec<i64>),
    Id(usize),
}

#[derive(Serialize, Deserialize)]
struct BasisJson {
    alpha: String,
    mono: MonoJson,
}

#[derive(Serialize, Deserialize)]
struct ElementTerm {
    alpha: String,
    mono: MonoJson,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct TensorTerm {
    factors: Vec<BasisJson>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct Terms<T> {
    terms: Vec<T>,
}

#[derive(Deserialize)]
struct Expr {
    expr: String,
}

#[derive(Serialize, Deserialize)]
struct TableEntry {
    id: usize,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    unit: usize,
    table: Vec<Vec<Vec<TableEntry>>>,
}

#[derive(Serialize, Deserialize)]
struct DerivationJson {
    domain: Vec<BasisJson>,
    values: BTreeMap<String, Value>,
}

fn mono_json(m: &Mono) -> MonoJson {
    match m {
        Mono::Laurent(e) => MonoJson::Exps(e.clone()),
        Mono::Table(i) => MonoJson::Id(*i),
    }
}

fn basis_json(b: &BasisIndex) -> BasisJson {
    BasisJson {
        alpha: format_rational(&b.alpha),
        mono: mono_json(&b.mono),
    }
}

fn decode_basis(g: &MapAlgebra, alpha: &str, mono: MonoJson) -> Result<BasisIndex> {
    let mono = match (g.coefficients(), mono) {
        (CoefficientAlgebra::Laurent { .. }, MonoJson::Exps(e)) => Mono::Laurent(e),
        (CoefficientAlgebra::Table(_), MonoJson::Id(i)) => Mono::Table(i),
        (CoefficientAlgebra::Table(_), MonoJson::Exps(e)) if e.len() == 1 && e[0] >= 0 => {
            Mono::Table(e[0] as usize)
        }
        (CoefficientAlgebra::Laurent { .. }, MonoJson::Id(_)) => {
            return Err(Error::config("table basis id given for a Laurent backend"))
        }
        (CoefficientAlgebra::Table(_), MonoJson::Exps(_)) => {
            return Err(Error::config("exponent vector given for a table backend"))
        }
    };
    let b = BasisIndex::new(parse_rational(alpha)?, mono);
    g.validate_basis(&b)?;
    Ok(b)
}

pub fn element_to_json(x: &Element) -> Value {
    let terms: Vec<ElementTerm> = x
        .iter()
        .map(|(b, c)| ElementTerm {
            alpha: format_rational(&b.alpha),
            mono: mono_json(&b.mono),
            coeff: format_rational(c),
        })
        .collect();
    serde_json::to_value(Terms { terms }).expect("serializable")
}

pub fn element_from_json(g: &MapAlgebra, v: &Value) -> Result<Element> {
    if let Ok(e) = Expr::deserialize(v) {
        return parse_element(g, &e.expr);
    }
    let parsed: Terms<ElementTerm> = serde_json::from_value(v.clone())?;
    let mut out = Element::zero();
    for t in parsed.terms {
        let b = decode_basis(g, &t.alpha, t.mono)?;
        out.add_term(b, parse_rational(&t.coeff)?);
    }
    Ok(out)
}

fn tensor_to_json<K: Ord>(w: &Combination<K>, factors: impl Fn(&K) -> Vec<&BasisIndex>) -> Value {
    let terms: Vec<TensorTerm> = w
        .iter()
        .map(|(k, c)| TensorTerm {
            factors: factors(k).into_iter().map(basis_json).collect(),
            coeff: format_rational(c),
        })
        .collect();
    serde_json::to_value(Terms { terms }).expect("serializable")
}

fn tensor_terms_from_json(g: &MapAlgebra, v: &Value, arity: usize) -> Result<Vec<(Vec<BasisIndex>, Scalar)>> {
    let parsed: Terms<TensorTerm> = serde_json::from_value(v.clone())?;
    parsed
        .terms
        .into_iter()
        .map(|t| {
            if t.factors.len() != arity {
                return Err(Error::Json(format!(
                    "expected {arity} factors, found {}",
                    t.factors.len()
                )));
            }
            let factors = t
                .factors
                .into_iter()
                .map(|f| decode_basis(g, &f.alpha, f.mono))
                .collect::<Result<Vec<_>>>()?;
            Ok((factors, parse_rational(&t.coeff)?))
        })
        .collect()
}

pub fn tensor2_to_json(w: &Tensor2) -> Value {
    tensor_to_json(w, |(a, b)| vec![a, b])
}

pub fn tensor3_to_json(w: &Tensor3) -> Value {
    tensor_to_json(w, |(a, b, c)| vec![a, b, c])
}

pub fn tensor2_from_json(g: &MapAlgebra, v: &Value) -> Result<Tensor2> {
    if let Ok(e) = Expr::deserialize(v) {
        return parse_tensor2(g, &e.expr);
    }
    Ok(tensor_terms_from_json(g, v, 2)?
        .into_iter()
        .map(|(f, c)| ((f[0].clone(), f[1].clone()), c))
        .collect())
}

pub fn tensor3_from_json(g: &MapAlgebra, v: &Value) -> Result<Tensor3> {
    if let Ok(e) = Expr::deserialize(v) {
        return parse_tensor3(g, &e.expr);
    }
    Ok(tensor_terms_from_json(g, v, 3)?
        .into_iter()
        .map(|(f, c)| ((f[0].clone(), f[1].clone(), f[2].clone()), c))
        .collect())
}

/// Values are keyed by the rendered basis symbol, e.g. `"L[1/2;0]"`.
pub fn derivation_to_json(d: &DerivationTable) -> Value {
    let values = d
        .values()
        .map(|(x, v)| (x.to_string(), tensor2_to_json(v)))
        .collect();
    let doc = DerivationJson {
        domain: d.domain().iter().map(basis_json).collect(),
        values,
    };
    serde_json::to_value(doc).expect("serializable")
}

pub fn derivation_from_json(g: &MapAlgebra, v: &Value) -> Result<DerivationTable> {
    let doc: DerivationJson = serde_json::from_value(v.clone())?;
    let domain = doc
        .domain
        .into_iter()
        .map(|b| decode_basis(g, &b.alpha, b.mono))
        .collect::<Result<Vec<_>>>()?;
    let mut table = DerivationTable::new(domain);
    for (key, value) in doc.values {
        let x = parse_element(g, &key)?;
        let b = match x.iter().next() {
            Some((b, c)) if x.len() == 1 && *c == Scalar::from_integer(1.into()) => b.clone(),
            _ => return Err(Error::Json(format!("value key {key:?} is not a single basis symbol"))),
        };
        if !table.in_domain(&b) {
            return Err(Error::Json(format!("value key {key:?} is not in the domain")));
        }
        table.set(b, tensor2_from_json(g, &value)?);
    }
    Ok(table)
}

/// Loads and validates a structure table (commutativity, associativity and
/// unit are checked exhaustively).
pub fn table_from_json(v: &Value) -> Result<CoefficientAlgebra> {
    let doc: TableJson = serde_json::from_value(v.clone())?;
    let products = doc
        .table
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|entry| {
                    entry
                        .into_iter()
                        .map(|e| Ok((e.id, parse_rational(&e.coeff)?)))
                        .collect::<Result<Combination<usize>>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoefficientAlgebra::Table(StructureTable::new(doc.unit, products)?))
}

pub fn table_to_json(t: &StructureTable) -> Value {
    let n = t.dim();
    let table = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    t.product(i, j)
                        .iter()
                        .map(|(&id, c)| TableEntry {
                            id,
                            coeff: format_rational(c),
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    serde_json::to_value(TableJson { unit: t.unit(), table }).expect("serializable")
}

pub fn certificate_to_json(c: &InconsistencyCertificate) -> Value {
    let coefficients: Vec<Value> = c
        .coefficients
        .iter()
        .map(|((a, b), k)| json!({"unknown": [basis_json(a), basis_json(b)], "coeff": format_rational(k)}))
        .collect();
    json!({
        "block": {"alpha": format_rational(&c.block.alpha), "exps": c.block.exps},
        "element": basis_json(&c.element),
        "coordinate": [basis_json(&c.coordinate.0), basis_json(&c.coordinate.1)],
        "coefficients": coefficients,
        "rhs": format_rational(&c.rhs),
        "residual": format_rational(&c.residual),
    })
}
