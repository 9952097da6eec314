use std::fmt;

use serde::{Deserialize, Serialize};

use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Algebra {
    QSym,
    NSym,
    /// The free algebra on letters `x₁, x₂, …`.
    #[serde(rename = "F")]
    Free,
}

/// Every basis known to the crate. Each belongs to exactly one [`Algebra`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Basis {
    M,
    L,
    Eta,
    H,
    EtaStar,
    /// Words `x_γ` of the free algebra.
    #[serde(rename = "X")]
    Word,
}

impl Basis {
    pub fn algebra(self) -> Algebra {
        match self {
            Basis::M | Basis::L | Basis::Eta => Algebra::QSym,
            Basis::H | Basis::EtaStar => Algebra::NSym,
            Basis::Word => Algebra::Free,
        }
    }

    /// Label used in text output and in the `basis:comp` shorthand.
    pub fn label(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::L => "L",
            Basis::Eta => "eta",
            Basis::H => "H",
            Basis::EtaStar => "etastar",
            Basis::Word => "x",
        }
    }

    pub fn from_label(s: &str) -> Result<Basis> {
        match s {
            "M" | "m" => Ok(Basis::M),
            "L" | "F" => Ok(Basis::L),
            "eta" | "Eta" => Ok(Basis::Eta),
            "H" | "h" => Ok(Basis::H),
            "etastar" | "EtaStar" | "eta*" => Ok(Basis::EtaStar),
            "x" | "X" | "word" => Ok(Basis::Word),
            other => Err(Error::Parse(format!("unknown basis {:?}", other))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Writes `coeff * basis[comp]`, or just `basis[comp]` when the
/// coefficient is 1.
pub(crate) fn fmt_term(f: &mut fmt::Formatter<'_>, coeff: &Scalar, monomial: &str) -> fmt::Result {
    if coeff.is_one() {
        write!(f, "{}", monomial)
    } else if coeff.is_compound() {
        write!(f, "({}) * {}", coeff, monomial)
    } else {
        write!(f, "{} * {}", coeff, monomial)
    }
}

pub(crate) fn monomial(basis: Basis, comp: &Composition) -> String {
    format!("{}[{}]", basis.label(), comp)
}

/// An element of `A ⊗ A` with a declared basis on each leg.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    left: Basis,
    right: Basis,
    terms: LinComb<(Composition, Composition)>,
}

impl TensorElement {
    pub fn new(left: Basis, right: Basis, terms: LinComb<(Composition, Composition)>) -> Self {
        TensorElement { left, right, terms }
    }

    pub fn zero(left: Basis, right: Basis) -> Self {
        TensorElement::new(left, right, LinComb::new())
    }

    /// `1 ⊗ 1`.
    pub fn unit(left: Basis, right: Basis) -> Self {
        TensorElement::new(
            left,
            right,
            LinComb::single((Composition::empty(), Composition::empty()), Scalar::one()),
        )
    }

    pub fn left_basis(&self) -> Basis {
        self.left
    }

    pub fn right_basis(&self) -> Basis {
        self.right
    }

    pub fn terms(&self) -> &LinComb<(Composition, Composition)> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, left: &Composition, right: &Composition) -> Scalar {
        self.terms.coeff(&(left.clone(), right.clone()))
    }

    pub fn plus(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check_same_bases(other)?;
        Ok(TensorElement::new(self.left, self.right, self.terms.plus(&other.terms)))
    }

    pub fn scaled(&self, c: &Scalar) -> TensorElement {
        TensorElement::new(self.left, self.right, self.terms.scaled(c))
    }

    pub fn specialize(&self, q0: &num_rational::BigRational) -> Result<TensorElement> {
        let mut out = LinComb::new();
        for (k, c) in self.terms.iter() {
            out.add_term(k.clone(), Scalar::from_rational(&c.evaluate(q0)?));
        }
        Ok(TensorElement::new(self.left, self.right, out))
    }

    fn check_same_bases(&self, other: &TensorElement) -> Result<()> {
        if self.left != other.left || self.right != other.right {
            return Err(Error::Usage(format!(
                "tensor basis mismatch: {}⊗{} vs {}⊗{}",
                self.left, self.right, other.left, other.right
            )));
        }
        Ok(())
    }

    /// Applies a linear map on each leg (basis change or operator).
    pub fn map_legs(
        &self,
        new_left: Basis,
        new_right: Basis,
        mut left: impl FnMut(&Composition) -> LinComb<Composition>,
        mut right: impl FnMut(&Composition) -> LinComb<Composition>,
    ) -> TensorElement {
        let mut out = LinComb::new();
        for ((a, b), c) in self.terms.iter() {
            let la = left(a);
            let rb = right(b);
            for (x, cx) in la.iter() {
                let cxc = cx * c;
                for (y, cy) in rb.iter() {
                    out.add_term((x.clone(), y.clone()), &cxc * cy);
                }
            }
        }
        TensorElement::new(new_left, new_right, out)
    }

    /// Legwise product `(a⊗b)(c⊗d) = ac ⊗ bd` with the given basis products.
    pub fn mul_legwise(
        &self,
        other: &TensorElement,
        mut mul_left: impl FnMut(&Composition, &Composition) -> LinComb<Composition>,
        mut mul_right: impl FnMut(&Composition, &Composition) -> LinComb<Composition>,
    ) -> Result<TensorElement> {
        self.check_same_bases(other)?;
        let mut out = LinComb::new();
        for ((a, b), c1) in self.terms.iter() {
            for ((x, y), c2) in other.terms.iter() {
                let c = c1 * c2;
                let left = mul_left(a, x);
                let right = mul_right(b, y);
                for (l, cl) in left.iter() {
                    let ccl = &c * cl;
                    for (r, cr) in right.iter() {
                        out.add_term((l.clone(), r.clone()), &ccl * cr);
                    }
                }
            }
        }
        Ok(TensorElement::new(self.left, self.right, out))
    }

    /// `(ε ⊗ id)`, with `ε` reading off the coefficient of the empty index.
    pub fn counit_left(&self) -> LinComb<Composition> {
        self.terms
            .iter()
            .filter(|((a, _), _)| a.is_empty())
            .map(|((_, b), c)| (b.clone(), c.clone()))
            .collect()
    }

    /// `(id ⊗ ε)`.
    pub fn counit_right(&self) -> LinComb<Composition> {
        self.terms
            .iter()
            .filter(|((_, b), _)| b.is_empty())
            .map(|((a, _), c)| (a.clone(), c.clone()))
            .collect()
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mono = format!("{} ⊗ {}", monomial(self.left, a), monomial(self.right, b));
            fmt_term(f, c, &mono)?;
        }
        Ok(())
    }
}
