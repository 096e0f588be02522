//! Text syntax for elements and tensors.
//!
//! ```text
//! expr    := ['-'] tensor (('+' | '-') tensor)*
//! tensor  := scaled ('(x)' scaled)*
//! scaled  := ['-'] [rational '*'] primary
//! primary := 'L[' rational (';' int (',' int)*)? ']' | '(' expr ')' | '0'
//! rational := int ['/' int]
//! ```
//!
//! `L[α;i,j]` is `L_α t₁ⁱ t₂ʲ` for Laurent backends and `L[α;id]` names a
//! table basis element; `L[α]` means `L_α ⊗ 1`. Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{BasisIndex, Element, MapAlgebra};
use crate::coefficients::{CoefficientAlgebra, Mono};
use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{Tensor2, Tensor3};

/// A parsed linear combination of pure tensors of a single arity.
/// `arity` is `None` only for the literal `0`.
#[derive(Clone, Debug)]
struct Value {
    arity: Option<usize>,
    terms: Combination<Vec<BasisIndex>>,
}

impl Value {
    fn zero() -> Self {
        Value {
            arity: None,
            terms: Combination::zero(),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    algebra: &'a MapAlgebra,
}

impl<'a> Parser<'a> {
    fn error(&self, at: usize, message: impl Into<String>) -> Error {
        let before = &self.src[..at.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.chars().rev().take_while(|&c| c != '\n').count() + 1;
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |f| format!("'{f}'"));
            Err(self.error(self.pos, format!("expected '{c}', found {found}")))
        }
    }

    /// Matches the tensor operator `(x)` with optional inner whitespace.
    fn eat_tensor_op(&mut self) -> bool {
        let save = self.pos;
        if self.eat('(') && self.eat('x') && self.eat(')') {
            return true;
        }
        self.pos = save;
        false
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits_start = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits_start {
            return Err(self.error(start, "expected an integer"));
        }
        self.pos = end;
        self.src[start..end]
            .parse()
            .map_err(|_| self.error(start, "invalid integer"))
    }

    fn small_int(&mut self) -> Result<i64> {
        let at = self.pos;
        let n = self.integer()?;
        i64::try_from(n).map_err(|_| self.error(at, "integer out of range"))
    }

    fn rational(&mut self) -> Result<Scalar> {
        let num = self.integer()?;
        if self.eat('/') {
            let den = self.integer()?;
            if den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(Scalar::new(num, den))
        } else {
            Ok(Scalar::from_integer(num))
        }
    }

    fn starts_number(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit())
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = Value::zero();
        let mut sign = if self.eat('-') {
            -Scalar::one()
        } else {
            self.eat('+');
            Scalar::one()
        };
        loop {
            let at = self.pos;
            let term = self.tensor()?;
            self.accumulate(&mut acc, term, &sign, at)?;
            if self.eat('+') {
                sign = Scalar::one();
            } else if self.eat('-') {
                sign = -Scalar::one();
            } else {
                return Ok(acc);
            }
        }
    }

    fn accumulate(&self, acc: &mut Value, term: Value, sign: &Scalar, at: usize) -> Result<()> {
        match (acc.arity, term.arity) {
            (Some(a), Some(b)) if a != b => {
                return Err(self.error(at, format!("cannot add tensors of arity {a} and {b}")));
            }
            (None, Some(b)) => acc.arity = Some(b),
            _ => {}
        }
        acc.terms.add_scaled(&term.terms, sign);
        Ok(())
    }

    fn tensor(&mut self) -> Result<Value> {
        let mut acc = self.scaled()?;
        while self.eat_tensor_op() {
            let rhs = self.scaled()?;
            acc = tensor_product(&acc, &rhs);
        }
        Ok(acc)
    }

    fn scaled(&mut self) -> Result<Value> {
        let negate = self.eat('-');
        let mut factor = Scalar::one();
        if self.starts_number() {
            let at = self.pos;
            let c = self.rational()?;
            if self.eat('*') {
                factor = c;
            } else if c.is_zero() {
                return Ok(Value::zero());
            } else {
                return Err(self.error(at, "a coefficient must be followed by '*'"));
            }
        }
        if negate {
            factor = -factor;
        }
        let mut v = self.primary()?;
        v.terms = v.terms.scale(&factor);
        Ok(v)
    }

    fn primary(&mut self) -> Result<Value> {
        match self.peek() {
            Some('L') => {
                self.pos += 1;
                let b = self.basis()?;
                Ok(Value {
                    arity: Some(1),
                    terms: Combination::single(vec![b], Scalar::one()),
                })
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some('0') => {
                self.pos += 1;
                Ok(Value::zero())
            }
            Some(c) => Err(self.error(self.pos, format!("unexpected '{c}'"))),
            None => Err(self.error(self.pos, "unexpected end of input")),
        }
    }

    fn basis(&mut self) -> Result<BasisIndex> {
        self.expect('[')?;
        let alpha = self.rational()?;
        let mut ints = Vec::new();
        let list_at = self.pos;
        if self.eat(';') {
            ints.push(self.small_int()?);
            while self.eat(',') {
                ints.push(self.small_int()?);
            }
        }
        self.expect(']')?;
        let mono = match self.algebra.coefficients() {
            CoefficientAlgebra::Laurent { vars } => {
                if ints.is_empty() {
                    Mono::Laurent(vec![0; *vars])
                } else if ints.len() != *vars {
                    return Err(Error::Arity {
                        expected: *vars,
                        found: ints.len(),
                    });
                } else {
                    Mono::Laurent(ints)
                }
            }
            CoefficientAlgebra::Table(t) => match ints.as_slice() {
                [] => Mono::Table(t.unit()),
                [id] if *id >= 0 && (*id as usize) < t.dim() => Mono::Table(*id as usize),
                [id] => {
                    return Err(self.error(list_at, format!("basis id {id} out of range 0..{}", t.dim())));
                }
                more => {
                    return Err(Error::Arity {
                        expected: 1,
                        found: more.len(),
                    })
                }
            },
        };
        Ok(BasisIndex::new(alpha, mono))
    }
}

fn tensor_product(a: &Value, b: &Value) -> Value {
    let arity = match (a.arity, b.arity) {
        (Some(x), Some(y)) => Some(x + y),
        _ => return Value::zero(),
    };
    let mut terms = Combination::zero();
    for (ka, ca) in &a.terms {
        for (kb, cb) in &b.terms {
            let mut k = ka.clone();
            k.extend(kb.iter().cloned());
            terms.add_term(k, ca * cb);
        }
    }
    Value { arity, terms }
}

fn parse_value(g: &MapAlgebra, text: &str, arity: usize) -> Result<Combination<Vec<BasisIndex>>> {
    let mut p = Parser {
        src: text,
        pos: 0,
        algebra: g,
    };
    let v = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(p.error(p.pos, format!("unexpected '{c}' after expression")));
    }
    match v.arity {
        Some(a) if a != arity => Err(p.error(
            0,
            format!("expected a tensor with {arity} factor(s), found {a}"),
        )),
        _ => Ok(v.terms),
    }
}

pub fn parse_element(g: &MapAlgebra, text: &str) -> Result<Element> {
    Ok(parse_value(g, text, 1)?.map_keys(|k| k[0].clone()))
}

pub fn parse_tensor2(g: &MapAlgebra, text: &str) -> Result<Tensor2> {
    Ok(parse_value(g, text, 2)?.map_keys(|k| (k[0].clone(), k[1].clone())))
}

pub fn parse_tensor3(g: &MapAlgebra, text: &str) -> Result<Tensor3> {
    Ok(parse_value(g, text, 3)?.map_keys(|k| (k[0].clone(), k[1].clone(), k[2].clone())))
}

fn render_terms<'a, K: Ord + 'a>(
    terms: impl IntoIterator<Item = (&'a K, &'a Scalar)>,
    mut key: impl FnMut(&K) -> String,
) -> String {
    let mut out = String::new();
    for (i, (k, c)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&key(k));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical text form, accepted back by [`parse_element`].
pub fn render_element(x: &Element) -> String {
    render_terms(x, |b| b.to_string())
}

pub fn render_tensor2(w: &Tensor2) -> String {
    render_terms(w, |(a, b)| format!("{a}(x){b}"))
}

pub fn render_tensor3(w: &Tensor3) -> String {
    render_terms(w, |(a, b, c)| format!("{a}(x){b}(x){c}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::tensor::is_skew;

    fn lt(a: Scalar, i: i64) -> BasisIndex {
        BasisIndex::laurent(a, [i])
    }

    #[test]
    fn single_symbol() {
        let g = MapAlgebra::laurent(1);
        let x = parse_element(&g, "L[1;2]").unwrap();
        assert_eq!(x, Element::single(lt(int(1), 2), Scalar::one()));
    }

    #[test]
    fn combination_with_default_mono() {
        let g = MapAlgebra::laurent(1);
        let x = parse_element(&g, "1/2*L[0] - L[1;0]").unwrap();
        let mut want = Element::single(lt(int(0), 0), ratio(1, 2));
        want.add_term(lt(int(1), 0), int(-1));
        assert_eq!(x, want);
    }

    #[test]
    fn skew_tensor() {
        let g = MapAlgebra::laurent(1);
        let w = parse_tensor2(&g, "L[0](x)L[1;1] - L[1;1](x)L[0]").unwrap();
        assert!(is_skew(&w));
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn precedence() {
        let g = MapAlgebra::laurent(0);
        let a = parse_tensor2(&g, "2*L[1](x)L[2] + L[0](x)L[0]").unwrap();
        let b = parse_tensor2(&g, "(2*L[1])(x)L[2] + (L[0](x)L[0])").unwrap();
        assert_eq!(a, b);
        let c = parse_tensor2(&g, "(L[1] + L[2])(x)L[3]").unwrap();
        let d = parse_tensor2(&g, "L[1](x)L[3] + L[2](x)L[3]").unwrap();
        assert_eq!(c, d);
        let e = parse_tensor3(&g, "-1/3*L[-1/2](x) L[0] (x)L[1/2]").unwrap();
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn zero_literal() {
        let g = MapAlgebra::laurent(1);
        assert!(parse_element(&g, "0").unwrap().is_zero());
        assert!(parse_tensor2(&g, "0").unwrap().is_zero());
        assert!(parse_element(&g, "L[1] - L[1]").unwrap().is_zero());
    }

    #[test]
    fn errors_carry_positions() {
        let g = MapAlgebra::laurent(1);
        match parse_element(&g, "L[1;2] +\n  L[2;x]") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 7)),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            parse_element(&g, "L[1;2,3]"),
            Err(Error::Arity { expected: 1, found: 2 })
        );
        assert_eq!(parse_element(&g, "L[1/0]"), Err(Error::ZeroDenominator));
        assert!(matches!(parse_element(&g, "L[1](x)L[2]"), Err(Error::Parse { .. })));
        assert!(matches!(parse_tensor2(&g, "L[1](x)L[2] + L[3]"), Err(Error::Parse { .. })));
        assert!(matches!(parse_element(&g, "3 L[1]"), Err(Error::Parse { .. })));
        assert!(matches!(parse_element(&g, ""), Err(Error::Parse { .. })));
        assert!(matches!(parse_element(&g, "L[1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn table_ids() {
        let g = MapAlgebra::new(CoefficientAlgebra::dual_numbers());
        let x = parse_element(&g, "L[2;1] + L[1]").unwrap();
        assert!(x.keys().any(|b| b.mono == Mono::Table(1)));
        assert!(x.keys().any(|b| b.mono == Mono::Table(0)));
        assert!(parse_element(&g, "L[2;5]").is_err());
    }

    #[test]
    fn render_shapes() {
        let g = MapAlgebra::laurent(1);
        let x = parse_element(&g, "-L[1;2] + 1/2*L[-1/2;0] - 3*L[0;-1]").unwrap();
        assert_eq!(render_element(&x), "1/2*L[-1/2;0] - 3*L[0;-1] - L[1;2]");
        assert_eq!(render_element(&Element::zero()), "0");
        let w = parse_tensor2(&g, "L[0](x)L[1;1] - L[1;1](x)L[0]").unwrap();
        assert_eq!(render_tensor2(&w), "L[0;0](x)L[1;1] - L[1;1](x)L[0;0]");
    }
}
