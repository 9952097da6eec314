//! The free algebra on letters `x_1, x_2, …` with the `(a, b)`-deformed
//! quasi-shuffle `#`.
//!
//! With `a = (q-1)u` and `b = -qu²`, the map `x_α ↦ u^{ℓ(α)} η_α` turns `#`
//! into the product of QSym.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;

use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::products::enumerate_stufufufflers;
use crate::qsym::{eta_basis, QSymElement};
use crate::scalar::Scalar;
use crate::tensor::{Basis, TensorElement};

/// A finite linear combination of words `x_γ`, keyed by the composition `γ`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FreeWordElement {
    terms: LinComb<Composition>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SharpParams {
    pub a: Scalar,
    pub b: Scalar,
}

impl SharpParams {
    pub fn new(a: Scalar, b: Scalar) -> Self {
        SharpParams { a, b }
    }

    /// `a = (q-1)u`, `b = -qu²`.
    pub fn for_eta(u: &BigRational) -> Self {
        let u = Scalar::from_rational(u);
        SharpParams {
            a: &Scalar::q_minus_one() * &u,
            b: &Scalar::neg_q() * &(&u * &u),
        }
    }
}

impl FreeWordElement {
    pub fn new(terms: LinComb<Composition>) -> Self {
        FreeWordElement { terms }
    }

    pub fn word(w: &Composition) -> Self {
        FreeWordElement::new(LinComb::single(w.clone(), Scalar::one()))
    }

    pub fn zero() -> Self {
        FreeWordElement::default()
    }

    pub fn one() -> Self {
        FreeWordElement::word(&Composition::empty())
    }

    pub fn terms(&self) -> &LinComb<Composition> {
        &self.terms
    }

    pub fn coeff(&self, w: &Composition) -> Scalar {
        self.terms.coeff(w)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|c| c.size()).max()
    }

    pub fn plus(&self, other: &FreeWordElement) -> FreeWordElement {
        FreeWordElement::new(self.terms.plus(&other.terms))
    }

    pub fn minus(&self, other: &FreeWordElement) -> FreeWordElement {
        FreeWordElement::new(self.terms.minus(&other.terms))
    }

    pub fn scaled(&self, c: &Scalar) -> FreeWordElement {
        FreeWordElement::new(self.terms.scaled(c))
    }

    pub fn specialize(&self, q0: &BigRational) -> Result<FreeWordElement> {
        let mut out = LinComb::new();
        for (w, c) in self.terms.iter() {
            out.add_term(w.clone(), Scalar::from_rational(&c.evaluate(q0)?));
        }
        Ok(FreeWordElement::new(out))
    }
}

impl fmt::Display for FreeWordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::qsym::fmt_lincomb(f, Basis::Word, &self.terms)
    }
}

/// `ζ_k`: adds `k` to the first letter, kills the empty word.
pub fn zeta(k: u32, f: &FreeWordElement) -> FreeWordElement {
    let mut out = LinComb::new();
    for (w, c) in f.terms.iter() {
        if let Some((&first, rest)) = w.entries().split_first() {
            let mut v = Vec::with_capacity(w.len());
            v.push(first + k);
            v.extend_from_slice(rest);
            out.add_term(Composition::from_slice(&v), c.clone());
        }
    }
    FreeWordElement::new(out)
}

fn prepend(i: u32, f: &LinComb<Composition>) -> LinComb<Composition> {
    f.iter()
        .map(|(w, c)| {
            let mut v = Vec::with_capacity(w.len() + 1);
            v.push(i);
            v.extend_from_slice(w.entries());
            (Composition::from_slice(&v), c.clone())
        })
        .collect()
}

struct SharpMemo<'p> {
    p: &'p SharpParams,
    memo: HashMap<(Vec<u32>, Vec<u32>), LinComb<Composition>>,
}

impl SharpMemo<'_> {
    fn words(&mut self, u: &[u32], v: &[u32]) -> LinComb<Composition> {
        if u.is_empty() || v.is_empty() {
            let mut w = u.to_vec();
            w.extend_from_slice(v);
            return LinComb::single(Composition::from_slice(&w), Scalar::one());
        }
        let key = (u.to_vec(), v.to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let (i, j) = (u[0], v[0]);
        let mut out = prepend(i, &self.words(&u[1..], v));
        out.add_scaled(&prepend(j, &self.words(u, &v[1..])), &Scalar::one());
        let inner = self.words(&u[1..], &v[1..]);
        out.add_scaled(&prepend(i + j, &inner), &self.p.a);
        out.add_scaled(&zeta(i + j, &FreeWordElement::new(inner)).terms, &self.p.b);
        self.memo.insert(key, out.clone());
        out
    }
}

/// `f # g` by the defining recursion.
pub fn sharp(f: &FreeWordElement, g: &FreeWordElement, p: &SharpParams) -> FreeWordElement {
    let mut m = SharpMemo {
        p,
        memo: HashMap::new(),
    };
    let mut out = LinComb::new();
    for (u, cu) in f.terms.iter() {
        for (v, cv) in g.terms.iter() {
            out.add_scaled(&m.words(u.entries(), v.entries()), &(cu * cv));
        }
    }
    FreeWordElement::new(out)
}

/// `x_δ # x_ε = Σ_f b^{loss f} a^{poise f} x_{wt f}`.
pub fn sharp_explicit(delta: &Composition, epsilon: &Composition, p: &SharpParams) -> FreeWordElement {
    let mut out = LinComb::new();
    for f in enumerate_stufufufflers(delta.len(), epsilon.len()) {
        let st = f.stats(delta, epsilon).expect("shape matches by construction");
        out.add_term(st.wt, &p.b.powu(st.loss) * &p.a.powu(st.poise));
    }
    FreeWordElement::new(out)
}

/// Deconcatenation coproduct.
pub fn deconcat(f: &FreeWordElement) -> TensorElement {
    let mut out = LinComb::new();
    for (w, c) in f.terms.iter() {
        for pair in w.deconcatenations() {
            out.add_term(pair, c.clone());
        }
    }
    TensorElement::new(Basis::Word, Basis::Word, out)
}

/// Coefficient of the empty word.
pub fn counit(f: &FreeWordElement) -> Scalar {
    f.coeff(&Composition::empty())
}

/// `S(x_α) = (-1)^{ℓ(α)} Σ_{D(β) ⊆ D(rev α)} a^{ℓ(α)-ℓ(β)} x_β`.
pub fn antipode_f(alpha: &Composition, p: &SharpParams) -> FreeWordElement {
    let s = if alpha.len().is_multiple_of(2) {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    };
    FreeWordElement::new(
        alpha
            .reverse()
            .coarsenings()
            .into_iter()
            .map(|b| {
                let c = &s * &p.a.powu(alpha.len() - b.len());
                (b, c)
            })
            .collect(),
    )
}

/// The antipode obtained from `Σ S(w_{(1)}) # w_{(2)} = ε(w)`, solved for
/// `S(w)` one prefix length at a time.
pub fn antipode_recursive(alpha: &Composition, p: &SharpParams) -> FreeWordElement {
    let mut cache: HashMap<Composition, FreeWordElement> = HashMap::new();
    fn go(w: &Composition, p: &SharpParams, cache: &mut HashMap<Composition, FreeWordElement>) -> FreeWordElement {
        if w.is_empty() {
            return FreeWordElement::one();
        }
        if let Some(hit) = cache.get(w) {
            return hit.clone();
        }
        let mut acc = FreeWordElement::zero();
        for (prefix, suffix) in w.deconcatenations().take(w.len()) {
            let sp = go(&prefix, p, cache);
            acc = acc.plus(&sharp(&sp, &FreeWordElement::word(&suffix), p));
        }
        let out = acc.scaled(&Scalar::from_int(-1));
        cache.insert(w.clone(), out.clone());
        out
    }
    go(alpha, p, &mut cache)
}

/// `x_α ↦ u^{ℓ(α)} η_α`, returned in the `M` basis. `p` must be the
/// parameters this morphism respects.
pub fn eta_morphism(f: &FreeWordElement, p: &SharpParams, u: &BigRational) -> Result<QSymElement> {
    let expected = SharpParams::for_eta(u);
    if *p != expected {
        return Err(Error::Usage(format!(
            "parameters a = {}, b = {} do not match a = {}, b = {} for u = {}",
            p.a, p.b, expected.a, expected.b, u
        )));
    }
    let us = Scalar::from_rational(u);
    let mut out = LinComb::new();
    for (w, c) in f.terms.iter() {
        out.add_scaled(eta_basis(w).terms(), &(c * &us.powu(w.len())));
    }
    QSymElement::new(Basis::M, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[u32]) -> Composition {
        Composition::from_slice(v)
    }

    fn x(v: &[u32]) -> FreeWordElement {
        FreeWordElement::word(&c(v))
    }

    fn words(terms: &[(&[u32], Scalar)]) -> FreeWordElement {
        FreeWordElement::new(terms.iter().map(|(a, s)| (c(a), s.clone())).collect())
    }

    fn symbolic() -> SharpParams {
        SharpParams::new(Scalar::q_minus_one(), Scalar::neg_q())
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta(3, &x(&[2, 1])), x(&[5, 1]));
        assert!(zeta(4, &FreeWordElement::one()).is_zero());
        assert_eq!(zeta(1, &x(&[1, 1, 1])), x(&[2, 1, 1]));
    }

    #[test]
    fn sharp_examples() {
        let p = symbolic();
        let a = p.a.clone();
        assert_eq!(
            sharp(&x(&[1]), &x(&[1]), &p),
            words(&[(&[1, 1], Scalar::from_int(2)), (&[2], a.clone())])
        );
        assert_eq!(sharp(&FreeWordElement::one(), &x(&[2, 1]), &p), x(&[2, 1]));
        assert_eq!(
            sharp(&x(&[1]), &x(&[2]), &p),
            words(&[(&[1, 2], Scalar::one()), (&[2, 1], Scalar::one()), (&[3], a)])
        );
        assert_eq!(sharp_explicit(&c(&[1]), &c(&[1]), &p), sharp(&x(&[1]), &x(&[1]), &p));
        assert_eq!(sharp_explicit(&Composition::empty(), &c(&[2, 3]), &p), x(&[2, 3]));
    }

    #[test]
    fn b_enters_through_zeta() {
        // with a = 0 only the b-weighted stufufufflers survive: two of them have weight (3,1)
        let p = SharpParams::new(Scalar::zero(), Scalar::one());
        let got = sharp(&x(&[1, 1]), &x(&[1, 1]), &p);
        assert_eq!(got, sharp_explicit(&c(&[1, 1]), &c(&[1, 1]), &p));
        assert_eq!(got.coeff(&c(&[3, 1])), Scalar::from_int(2));
        assert!(got.coeff(&c(&[4])).is_zero());
    }

    #[test]
    fn coproduct_and_counit() {
        let t = deconcat(&x(&[2, 1]));
        assert_eq!(t.len(), 3);
        assert_eq!(t.coeff(&c(&[2]), &c(&[1])), Scalar::one());
        assert_eq!(
            deconcat(&FreeWordElement::one()),
            TensorElement::unit(Basis::Word, Basis::Word)
        );
        assert!(counit(&x(&[3])).is_zero());
        assert!(counit(&FreeWordElement::one()).is_one());
    }

    #[test]
    fn antipode_examples() {
        let p = symbolic();
        assert_eq!(antipode_f(&c(&[1]), &p), words(&[(&[1], Scalar::from_int(-1))]));
        assert_eq!(antipode_f(&Composition::empty(), &p), FreeWordElement::one());
        assert_eq!(
            antipode_f(&c(&[1, 1]), &p),
            words(&[(&[1, 1], Scalar::one()), (&[2], p.a.clone())])
        );
        for a in [c(&[1]), c(&[1, 1]), c(&[2, 1]), c(&[1, 2, 1])] {
            assert_eq!(antipode_f(&a, &p), antipode_recursive(&a, &p));
        }
    }

    #[test]
    fn eta_morphism_examples() {
        let one = BigRational::from_integer(1.into());
        let p = SharpParams::for_eta(&one);
        assert_eq!(p, symbolic());
        assert_eq!(eta_morphism(&x(&[1]), &p, &one).unwrap(), eta_basis(&c(&[1])));
        let lhs = eta_morphism(&sharp(&x(&[1]), &x(&[1]), &p), &p, &one).unwrap();
        let e1 = eta_basis(&c(&[1]));
        assert_eq!(lhs, crate::qsym::product(&e1, &e1));
        assert_eq!(
            eta_morphism(&FreeWordElement::one(), &p, &one).unwrap(),
            QSymElement::one()
        );
        let two = BigRational::from_integer(2.into());
        assert!(matches!(eta_morphism(&x(&[1]), &p, &two), Err(Error::Usage(_))));
    }
}
