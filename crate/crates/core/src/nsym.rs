//! Noncommutative symmetric functions in the complete (`H`) basis, the
//! pairing with QSym, and the basis `η*` dual to `η`.

use std::fmt;

use num_rational::BigRational;

use crate::compositions::{compositions_of, Composition};
use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::qsym::{fmt_lincomb, QSymElement};
use crate::scalar::Scalar;
use crate::tensor::{Algebra, Basis, TensorElement};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NSymElement {
    basis: Basis,
    terms: LinComb<Composition>,
}

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

impl NSymElement {
    pub fn new(basis: Basis, terms: LinComb<Composition>) -> Result<Self> {
        if basis.algebra() != Algebra::NSym {
            return Err(Error::Usage(format!("{} is not an NSym basis", basis)));
        }
        Ok(NSymElement { basis, terms })
    }

    fn from_terms(basis: Basis, terms: LinComb<Composition>) -> Self {
        debug_assert_eq!(basis.algebra(), Algebra::NSym);
        NSymElement { basis, terms }
    }

    pub fn basis_element(basis: Basis, alpha: &Composition) -> Result<Self> {
        NSymElement::new(basis, LinComb::single(alpha.clone(), Scalar::one()))
    }

    pub fn h(alpha: &Composition) -> Self {
        NSymElement::from_terms(Basis::H, LinComb::single(alpha.clone(), Scalar::one()))
    }

    pub fn zero(basis: Basis) -> Self {
        NSymElement::from_terms(basis, LinComb::new())
    }

    pub fn one() -> Self {
        NSymElement::h(&Composition::empty())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Composition> {
        &self.terms
    }

    pub fn coeff(&self, alpha: &Composition) -> Scalar {
        self.terms.coeff(alpha)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|c| c.size()).max()
    }

    fn same_basis(&self, other: &NSymElement) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::Usage(format!(
                "basis mismatch: {} vs {}",
                self.basis, other.basis
            )));
        }
        Ok(())
    }

    pub fn plus(&self, other: &NSymElement) -> Result<NSymElement> {
        self.same_basis(other)?;
        Ok(NSymElement::from_terms(self.basis, self.terms.plus(&other.terms)))
    }

    pub fn minus(&self, other: &NSymElement) -> Result<NSymElement> {
        self.same_basis(other)?;
        Ok(NSymElement::from_terms(self.basis, self.terms.minus(&other.terms)))
    }

    pub fn scaled(&self, c: &Scalar) -> NSymElement {
        NSymElement::from_terms(self.basis, self.terms.scaled(c))
    }

    /// Expansion in the `H` basis.
    pub fn to_h(&self) -> NSymElement {
        match self.basis {
            Basis::H => self.clone(),
            Basis::EtaStar => NSymElement::from_terms(Basis::H, self.terms.map_linear(|a| eta_star(a).terms)),
            _ => unreachable!(),
        }
    }

    pub fn convert(&self, target: Basis) -> Result<NSymElement> {
        if target.algebra() != Algebra::NSym {
            return Err(Error::Usage(format!("{} is not an NSym basis", target)));
        }
        if target == self.basis {
            return Ok(self.clone());
        }
        Ok(match target {
            Basis::H => self.to_h(),
            Basis::EtaStar => h_to_eta_star(self),
            _ => unreachable!(),
        })
    }

    pub fn equals(&self, other: &NSymElement) -> bool {
        if self.basis == other.basis {
            return self.terms == other.terms;
        }
        self.to_h().terms == other.to_h().terms
    }

    pub fn specialize(&self, q0: &BigRational) -> Result<NSymElement> {
        let mut out = LinComb::new();
        for (a, c) in self.terms.iter() {
            out.add_term(a.clone(), Scalar::from_rational(&c.evaluate(q0)?));
        }
        Ok(NSymElement::from_terms(self.basis, out))
    }
}

impl fmt::Display for NSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_lincomb(f, self.basis, &self.terms)
    }
}

/// Product of two elements, in the `H` basis: `H_α H_β = H_{αβ}`.
pub fn h_product(f: &NSymElement, g: &NSymElement) -> NSymElement {
    let (f, g) = (f.to_h(), g.to_h());
    let mut out = LinComb::new();
    for (a, ca) in f.terms.iter() {
        for (b, cb) in g.terms.iter() {
            out.add_term(a.concat(b), ca * cb);
        }
    }
    NSymElement::from_terms(Basis::H, out)
}

fn delta_h_single(n: u32) -> LinComb<(Composition, Composition)> {
    (0..=n)
        .map(|i| {
            let part = |k: u32| {
                if k == 0 {
                    Composition::empty()
                } else {
                    Composition::single(k)
                }
            };
            ((part(i), part(n - i)), Scalar::one())
        })
        .collect()
}

fn concat_basis(a: &Composition, b: &Composition) -> LinComb<Composition> {
    LinComb::single(a.concat(b), Scalar::one())
}

/// `Δ(H_α)`, using `Δ(H_n) = Σ_i H_i ⊗ H_{n-i}` and multiplicativity.
pub fn coproduct_h(f: &NSymElement) -> TensorElement {
    let f = f.to_h();
    let mut out = LinComb::new();
    for (a, c) in f.terms.iter() {
        let mut t = TensorElement::unit(Basis::H, Basis::H);
        for &n in a.entries() {
            let factor = TensorElement::new(Basis::H, Basis::H, delta_h_single(n));
            t = t.mul_legwise(&factor, concat_basis, concat_basis).expect("H legs");
        }
        out.add_scaled(t.terms(), c);
    }
    TensorElement::new(Basis::H, Basis::H, out)
}

/// `⟨h, f⟩` with `⟨H_α, M_β⟩ = [α = β]`.
pub fn pairing(h: &NSymElement, f: &QSymElement) -> Scalar {
    let h = h.to_h();
    let f = f.to_m();
    let mut out = Scalar::zero();
    for (a, c) in h.terms.iter() {
        let d = f.coeff(a);
        if !d.is_zero() {
            out += &(c * &d);
        }
    }
    out
}

/// `η*_α = Σ_{D(β) ⊇ D(α)} r^{-ℓ(β)} (-1)^{ℓ(β)-ℓ(α)} H_β`.
pub fn eta_star(alpha: &Composition) -> NSymElement {
    let rinv = Scalar::r().inv().expect("r is nonzero");
    NSymElement::from_terms(
        Basis::H,
        alpha
            .refinements()
            .into_iter()
            .map(|b| {
                let c = &sign(b.len() - alpha.len()) * &rinv.powu(b.len());
                (b, c)
            })
            .collect(),
    )
}

/// Rewrites an element in the `η*` basis. The expansion of `η*_α` in `H`
/// has leading term `r^{-ℓ(α)} H_α` and otherwise only longer indices, so
/// peeling off the shortest remaining term terminates.
fn h_to_eta_star(f: &NSymElement) -> NSymElement {
    let mut rest = f.to_h().terms;
    let mut out = LinComb::new();
    let r = Scalar::r();
    while let Some(alpha) = rest.keys().min_by_key(|a| (a.len(), (*a).clone())).cloned() {
        let c = &rest.coeff(&alpha) * &r.powu(alpha.len());
        rest.add_scaled(&eta_star(&alpha).terms, &-&c);
        out.add_term(alpha, c);
    }
    NSymElement::from_terms(Basis::EtaStar, out)
}

/// Whether `η*_α η*_β = η*_{αβ}`.
pub fn eta_star_multiplicativity_check(alpha: &Composition, beta: &Composition) -> bool {
    h_product(&eta_star(alpha), &eta_star(beta)) == eta_star(&alpha.concat(beta))
}

/// Terms `(β, γ, c)` of `Δ(η*_n)`, read from the closed formula.
fn coproduct_eta_star_terms(n: usize) -> Vec<(Composition, Composition, Scalar)> {
    let mut out = Vec::new();
    for i in 0..=n {
        for b in compositions_of(i) {
            for g in compositions_of(n - i) {
                let (lb, lg) = (b.len(), g.len());
                if lb.abs_diff(lg) > 1 {
                    continue;
                }
                let mut c = Scalar::neg_q().powu(lb.max(lg) - 1);
                if lb == lg {
                    c = &c * &Scalar::q_minus_one();
                }
                out.push((b.clone(), g, c));
            }
        }
    }
    out
}

/// `Δ(η*_n)` in the `η* ⊗ η*` basis.
pub fn coproduct_eta_star_n(n: usize) -> Result<TensorElement> {
    if n == 0 {
        return Err(Error::Domain(
            "the closed coproduct formula for η*_n needs n ≥ 1".into(),
        ));
    }
    Ok(TensorElement::new(
        Basis::EtaStar,
        Basis::EtaStar,
        coproduct_eta_star_terms(n)
            .into_iter()
            .map(|(b, g, c)| ((b, g), c))
            .collect(),
    ))
}

/// `Δ(η*_α)` as a sum over tuples of per-entry terms, legs concatenated.
pub fn coproduct_eta_star(alpha: &Composition) -> TensorElement {
    let per_entry: Vec<_> = alpha
        .entries()
        .iter()
        .map(|&n| coproduct_eta_star_terms(n as usize))
        .collect();
    let mut acc: Vec<(Composition, Composition, Scalar)> =
        vec![(Composition::empty(), Composition::empty(), Scalar::one())];
    for terms in &per_entry {
        let mut next = Vec::with_capacity(acc.len() * terms.len());
        for (b, g, c) in &acc {
            for (b2, g2, c2) in terms {
                next.push((b.concat(b2), g.concat(g2), c * c2));
            }
        }
        acc = next;
    }
    TensorElement::new(
        Basis::EtaStar,
        Basis::EtaStar,
        acc.into_iter().map(|(b, g, c)| ((b, g), c)).collect(),
    )
}

/// Rewrites both legs of an NSym tensor in the `H` basis.
pub fn tensor_to_h(t: &TensorElement) -> TensorElement {
    let leg = |b: Basis| move |a: &Composition| NSymElement::basis_element(b, a).expect("NSym basis").to_h().terms;
    t.map_legs(Basis::H, Basis::H, leg(t.left_basis()), leg(t.right_basis()))
}

/// A power series `Σ_{d ≤ trunc} f_d t^d` with coefficients in NSym, kept
/// in the `H` basis. The variable `t` commutes with everything.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NSymSeries {
    trunc: usize,
    coeffs: Vec<NSymElement>,
}

impl NSymSeries {
    pub fn new(trunc: usize, coeffs: Vec<NSymElement>) -> Result<Self> {
        if coeffs.len() > trunc + 1 {
            return Err(Error::Usage(format!(
                "{} coefficients exceed truncation order {}",
                coeffs.len(),
                trunc
            )));
        }
        let mut coeffs: Vec<NSymElement> = coeffs.iter().map(NSymElement::to_h).collect();
        coeffs.resize(trunc + 1, NSymElement::zero(Basis::H));
        Ok(NSymSeries { trunc, coeffs })
    }

    pub fn constant(trunc: usize, c: &Scalar) -> Self {
        NSymSeries::new(trunc, vec![NSymElement::one().scaled(c)]).expect("one coefficient")
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeffs(&self) -> &[NSymElement] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> &NSymElement {
        &self.coeffs[d]
    }

    fn check_trunc(&self, other: &NSymSeries) -> Result<()> {
        if self.trunc != other.trunc {
            return Err(Error::Usage(format!(
                "truncation orders differ: {} vs {}",
                self.trunc, other.trunc
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &NSymSeries) -> Result<NSymSeries> {
        self.check_trunc(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.plus(b).expect("H"))
            .collect();
        Ok(NSymSeries {
            trunc: self.trunc,
            coeffs,
        })
    }

    pub fn sub(&self, other: &NSymSeries) -> Result<NSymSeries> {
        self.check_trunc(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.minus(b).expect("H"))
            .collect();
        Ok(NSymSeries {
            trunc: self.trunc,
            coeffs,
        })
    }

    pub fn add_const(&self, c: &Scalar) -> NSymSeries {
        self.add(&NSymSeries::constant(self.trunc, c)).expect("same truncation")
    }

    pub fn sub_const(&self, c: &Scalar) -> NSymSeries {
        self.add_const(&-c)
    }

    pub fn mul(&self, other: &NSymSeries) -> Result<NSymSeries> {
        self.check_trunc(other)?;
        let coeffs = (0..=self.trunc)
            .map(|d| {
                let mut acc = NSymElement::zero(Basis::H);
                for i in 0..=d {
                    acc = acc.plus(&h_product(&self.coeffs[i], &other.coeffs[d - i])).expect("H");
                }
                acc
            })
            .collect();
        Ok(NSymSeries {
            trunc: self.trunc,
            coeffs,
        })
    }

    pub fn pow(&self, k: usize) -> NSymSeries {
        let mut out = NSymSeries::constant(self.trunc, &Scalar::one());
        for _ in 0..k {
            out = out.mul(self).expect("same truncation");
        }
        out
    }

    /// Multiplicative inverse. The constant term must be a nonzero scalar
    /// multiple of 1; then `B_0 = c^{-1}` and
    /// `B_d = -c^{-1} Σ_{i=1}^{d} A_i B_{d-i}`.
    pub fn invert(&self) -> Result<NSymSeries> {
        let a0 = &self.coeffs[0];
        if a0.terms.keys().any(|k| !k.is_empty()) || a0.is_zero() {
            return Err(Error::Arithmetic(format!(
                "constant term {} is not an invertible scalar",
                a0.to_string().replace('\n', " + ")
            )));
        }
        let cinv = a0.coeff(&Composition::empty()).inv()?;
        let neg_cinv = -&cinv;
        let mut b = vec![NSymElement::one().scaled(&cinv)];
        for d in 1..=self.trunc {
            let mut acc = NSymElement::zero(Basis::H);
            for i in 1..=d {
                acc = acc.plus(&h_product(&self.coeffs[i], &b[d - i])).expect("H");
            }
            b.push(acc.scaled(&neg_cinv));
        }
        Ok(NSymSeries {
            trunc: self.trunc,
            coeffs: b,
        })
    }

    pub fn specialize(&self, q0: &BigRational) -> Result<NSymSeries> {
        let coeffs = self.coeffs.iter().map(|c| c.specialize(q0)).collect::<Result<_>>()?;
        Ok(NSymSeries {
            trunc: self.trunc,
            coeffs,
        })
    }
}

/// `H(t) = Σ_{n ≤ N} H_n t^n`.
pub fn series_h(trunc: usize) -> NSymSeries {
    let coeffs = (0..=trunc)
        .map(|n| {
            if n == 0 {
                NSymElement::one()
            } else {
                NSymElement::h(&Composition::single(n as u32))
            }
        })
        .collect();
    NSymSeries { trunc, coeffs }
}

/// `G(t) = Σ_{1 ≤ n ≤ N} η*_n t^n`.
pub fn series_g(trunc: usize) -> NSymSeries {
    let coeffs = (0..=trunc)
        .map(|n| {
            if n == 0 {
                NSymElement::zero(Basis::H)
            } else {
                eta_star(&Composition::single(n as u32))
            }
        })
        .collect();
    NSymSeries { trunc, coeffs }
}

/// `Σ_{ℓ(β)=k, |β| ≤ N} η*_β t^{|β|}`.
pub fn series_eta_star_length(trunc: usize, k: usize) -> NSymSeries {
    let coeffs = (0..=trunc)
        .map(|n| {
            let mut acc = NSymElement::zero(Basis::H);
            for b in compositions_of(n).into_iter().filter(|b| b.len() == k) {
                acc = acc.plus(&eta_star(&b)).expect("H");
            }
            acc
        })
        .collect();
    NSymSeries { trunc, coeffs }
}

impl fmt::Display for NSymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, c) in self.coeffs.iter().enumerate() {
            if d > 0 {
                writeln!(f)?;
            }
            write!(f, "t^{}: {}", d, c.to_string().replace('\n', " + "))?;
        }
        Ok(())
    }
}
