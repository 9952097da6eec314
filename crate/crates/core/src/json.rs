//! JSON and shorthand text forms for elements, tensors and series.
//!
//! ```text
//! {"algebra":"QSym","basis":"M","terms":[{"comp":[2],"coeff":{"num":[0,1],"den":[1]}}]}
//! {"algebra":"QSym","left_basis":"Eta","right_basis":"Eta","terms":[{"left":[1],"right":[],"coeff":…}]}
//! {"trunc":3,"coeffs":[<NSym element>, …]}
//! eta:1,3,1
//! ```

use std::fmt;
use std::path::Path;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::fshuffle::FreeWordElement;
use crate::linear::LinComb;
use crate::nsym::{NSymElement, NSymSeries};
use crate::qsym::QSymElement;
use crate::scalar::Scalar;
use crate::tensor::{Algebra, Basis, TensorElement};

/// An element of one of the three algebras.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Element {
    QSym(QSymElement),
    NSym(NSymElement),
    Free(FreeWordElement),
}

impl Element {
    pub fn basis(&self) -> Basis {
        match self {
            Element::QSym(e) => e.basis(),
            Element::NSym(e) => e.basis(),
            Element::Free(_) => Basis::Word,
        }
    }

    pub fn terms(&self) -> &LinComb<Composition> {
        match self {
            Element::QSym(e) => e.terms(),
            Element::NSym(e) => e.terms(),
            Element::Free(e) => e.terms(),
        }
    }

    fn from_parts(basis: Basis, terms: LinComb<Composition>) -> Result<Element> {
        Ok(match basis.algebra() {
            Algebra::QSym => Element::QSym(QSymElement::new(basis, terms)?),
            Algebra::NSym => Element::NSym(NSymElement::new(basis, terms)?),
            Algebra::Free => Element::Free(FreeWordElement::new(terms)),
        })
    }

    pub fn specialize(&self, q0: &BigRational) -> Result<Element> {
        Ok(match self {
            Element::QSym(e) => Element::QSym(e.specialize(q0)?),
            Element::NSym(e) => Element::NSym(e.specialize(q0)?),
            Element::Free(e) => Element::Free(e.specialize(q0)?),
        })
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::QSym(e) => e.fmt(f),
            Element::NSym(e) => e.fmt(f),
            Element::Free(e) => e.fmt(f),
        }
    }
}

/// Anything the CLI reads or writes as JSON.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Document {
    Element(Element),
    Tensor(TensorElement),
    Series(NSymSeries),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    comp: Vec<u32>,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementJson {
    algebra: Algebra,
    basis: Basis,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorTermJson {
    left: Vec<u32>,
    right: Vec<u32>,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorJson {
    algebra: Algebra,
    left_basis: Basis,
    right_basis: Basis,
    terms: Vec<TensorTermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesJson {
    trunc: usize,
    coeffs: Vec<ElementJson>,
}

fn element_json(basis: Basis, terms: &LinComb<Composition>) -> ElementJson {
    ElementJson {
        algebra: basis.algebra(),
        basis,
        terms: terms
            .iter()
            .map(|(a, c)| TermJson {
                comp: a.entries().to_vec(),
                coeff: c.clone(),
            })
            .collect(),
    }
}

fn comp(v: Vec<u32>) -> Result<Composition> {
    Composition::new(v).map_err(|e| Error::Parse(e.to_string()))
}

fn element_from_json(raw: ElementJson) -> Result<Element> {
    if raw.basis.algebra() != raw.algebra {
        return Err(Error::Parse(format!(
            "basis {} does not belong to {:?}",
            raw.basis, raw.algebra
        )));
    }
    let mut terms = LinComb::new();
    for t in raw.terms {
        terms.add_term(comp(t.comp)?, t.coeff);
    }
    Element::from_parts(raw.basis, terms)
}

pub fn element_to_json(e: &Element) -> Value {
    serde_json::to_value(element_json(e.basis(), e.terms())).expect("plain data")
}

pub fn tensor_to_json(t: &TensorElement) -> Value {
    let raw = TensorJson {
        algebra: t.left_basis().algebra(),
        left_basis: t.left_basis(),
        right_basis: t.right_basis(),
        terms: t
            .terms()
            .iter()
            .map(|((a, b), c)| TensorTermJson {
                left: a.entries().to_vec(),
                right: b.entries().to_vec(),
                coeff: c.clone(),
            })
            .collect(),
    };
    serde_json::to_value(raw).expect("plain data")
}

pub fn series_to_json(s: &NSymSeries) -> Value {
    let raw = SeriesJson {
        trunc: s.trunc(),
        coeffs: s.coeffs().iter().map(|c| element_json(c.basis(), c.terms())).collect(),
    };
    serde_json::to_value(raw).expect("plain data")
}

pub fn document_to_json(d: &Document) -> Value {
    match d {
        Document::Element(e) => element_to_json(e),
        Document::Tensor(t) => tensor_to_json(t),
        Document::Series(s) => series_to_json(s),
    }
}

fn json_error(text: &str, e: serde_json::Error) -> Error {
    let line = text.lines().nth(e.line().saturating_sub(1)).unwrap_or("");
    Error::Parse(format!("{} (line {}: {:?})", e, e.line(), line.trim()))
}

/// Parses a JSON document; the shape is recognised from its keys.
pub fn parse_document_json(text: &str) -> Result<Document> {
    let v: Value = serde_json::from_str(text).map_err(|e| json_error(text, e))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    let de = |e: serde_json::Error| Error::Parse(e.to_string());
    if obj.contains_key("trunc") {
        let raw: SeriesJson = serde_json::from_value(v).map_err(de)?;
        let coeffs = raw
            .coeffs
            .into_iter()
            .map(|c| match element_from_json(c)? {
                Element::NSym(e) => Ok(e),
                _ => Err(Error::Parse("series coefficients must be NSym elements".into())),
            })
            .collect::<Result<Vec<_>>>()?;
        return NSymSeries::new(raw.trunc, coeffs)
            .map(Document::Series)
            .map_err(|e| Error::Parse(e.to_string()));
    }
    if obj.contains_key("left_basis") {
        let raw: TensorJson = serde_json::from_value(v).map_err(de)?;
        if raw.left_basis.algebra() != raw.algebra || raw.right_basis.algebra() != raw.algebra {
            return Err(Error::Parse(format!("tensor legs do not belong to {:?}", raw.algebra)));
        }
        let mut terms = LinComb::new();
        for t in raw.terms {
            terms.add_term((comp(t.left)?, comp(t.right)?), t.coeff);
        }
        return Ok(Document::Tensor(TensorElement::new(
            raw.left_basis,
            raw.right_basis,
            terms,
        )));
    }
    let raw: ElementJson = serde_json::from_value(v).map_err(de)?;
    element_from_json(raw).map(Document::Element)
}

/// `basis:comp`, e.g. `eta:1,3,1` or `M:` for `M_∅`.
pub fn parse_shorthand(text: &str) -> Result<Element> {
    let (label, rest) = text
        .trim()
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected basis:composition, got {:?}", text)))?;
    let basis = Basis::from_label(label.trim())?;
    let alpha: Composition = rest.parse()?;
    Element::from_parts(basis, LinComb::single(alpha, Scalar::one()))
}

/// Accepts shorthand or inline JSON, or else a path to a file holding one.
pub fn parse_document(text: &str) -> Result<Document> {
    let t = text.trim();
    if t.starts_with('{') {
        return parse_document_json(t);
    }
    if t.contains(':') && !Path::new(t).is_file() {
        return parse_shorthand(t).map(Document::Element);
    }
    let path = Path::new(t);
    if path.is_file() {
        let body = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {}", path.display(), e)))?;
        let body = body.trim();
        return if body.starts_with('{') {
            parse_document_json(body)
        } else {
            parse_shorthand(body).map(Document::Element)
        };
    }
    Err(Error::Parse(format!(
        "{:?} is neither an element, JSON, nor a readable file",
        t
    )))
}

pub fn parse_element(text: &str) -> Result<Element> {
    match parse_document(text)? {
        Document::Element(e) => Ok(e),
        _ => Err(Error::Parse("expected an element, got a tensor or series".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nsym::{coproduct_eta_star_n, series_g};
    use crate::qsym::{eta_basis, m_basis};

    #[test]
    fn shorthand() {
        let e = parse_element("eta:1,3,1").unwrap();
        assert_eq!(e.basis(), Basis::Eta);
        assert_eq!(e.terms().coeff(&Composition::from_slice(&[1, 3, 1])), Scalar::one());
        assert_eq!(parse_element("M:").unwrap(), Element::QSym(QSymElement::one()));
        assert!(matches!(parse_element("M:1,0"), Err(Error::Parse(_))));
        assert!(matches!(parse_element("Z:1"), Err(Error::Parse(_))));
    }

    #[test]
    fn schema_example() {
        let text = r#"{"algebra":"QSym","basis":"M","terms":[{"comp":[2],"coeff":{"num":[0,1],"den":[1]}}]}"#;
        let e = parse_element(text).unwrap();
        let want = m_basis(&Composition::single(2)).scaled(&Scalar::q());
        assert_eq!(e, Element::QSym(want));
        assert_eq!(element_to_json(&e).to_string(), text);
    }

    #[test]
    fn malformed_json_reports_line() {
        let err = parse_element("{\"algebra\":\"QSym\",\n\"basis\":}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{}", err);
        let err = parse_element(r#"{"algebra":"NSym","basis":"M","terms":[]}"#).unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
    }

    #[test]
    fn round_trips() {
        let docs = vec![
            Document::Element(Element::QSym(eta_basis(&Composition::from_slice(&[1, 2])))),
            Document::Element(Element::NSym(crate::nsym::eta_star(&Composition::single(2)))),
            Document::Element(Element::Free(FreeWordElement::word(&Composition::from_slice(&[2, 1])))),
            Document::Tensor(coproduct_eta_star_n(3).unwrap()),
            Document::Series(series_g(3)),
        ];
        for d in docs {
            let text = document_to_json(&d).to_string();
            assert_eq!(parse_document(&text).unwrap(), d, "{}", text);
        }
    }
}
