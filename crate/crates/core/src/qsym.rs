//! Quasisymmetric functions in the monomial (`M`), fundamental (`L`) and
//! enriched q-monomial (`η`) bases.
//!
//! `M` is the working basis: products, coproducts and antipodes are computed
//! there, and elements declared in other bases are compared after
//! conversion to `M`.

use std::fmt;

use num_rational::BigRational;

use crate::compositions::{compositions_of, Composition, DescentSet};
use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::scalar::Scalar;
use crate::tensor::{fmt_term, monomial, Algebra, Basis, TensorElement};

/// A finite linear combination of basis elements of QSym.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymElement {
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

impl QSymElement {
    pub fn new(basis: Basis, terms: LinComb<Composition>) -> Result<Self> {
        if basis.algebra() != Algebra::QSym {
            return Err(Error::Usage(format!("{} is not a QSym basis", basis)));
        }
        Ok(QSymElement { basis, terms })
    }

    pub(crate) fn from_terms(basis: Basis, terms: LinComb<Composition>) -> Self {
        debug_assert_eq!(basis.algebra(), Algebra::QSym);
        QSymElement { basis, terms }
    }

    /// The single basis element indexed by `alpha`.
    pub fn basis_element(basis: Basis, alpha: &Composition) -> Result<Self> {
        QSymElement::new(basis, LinComb::single(alpha.clone(), Scalar::one()))
    }

    pub fn zero(basis: Basis) -> Self {
        QSymElement::from_terms(basis, LinComb::new())
    }

    pub fn one() -> Self {
        m_basis(&Composition::empty())
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

    /// Largest size of a composition in the support.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|c| c.size()).max()
    }

    fn check_basis(&self, expected: Basis, op: &str) -> Result<()> {
        if self.basis != expected {
            return Err(Error::Usage(format!(
                "{} expects the {} basis, got {}",
                op, expected, self.basis
            )));
        }
        Ok(())
    }

    fn same_basis(&self, other: &QSymElement) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::Usage(format!(
                "basis mismatch: {} vs {}",
                self.basis, other.basis
            )));
        }
        Ok(())
    }

    pub fn plus(&self, other: &QSymElement) -> Result<QSymElement> {
        self.same_basis(other)?;
        Ok(QSymElement::from_terms(self.basis, self.terms.plus(&other.terms)))
    }

    pub fn minus(&self, other: &QSymElement) -> Result<QSymElement> {
        self.same_basis(other)?;
        Ok(QSymElement::from_terms(self.basis, self.terms.minus(&other.terms)))
    }

    pub fn scaled(&self, c: &Scalar) -> QSymElement {
        QSymElement::from_terms(self.basis, self.terms.scaled(c))
    }

    /// Expansion in the `M` basis.
    pub fn to_m(&self) -> QSymElement {
        match self.basis {
            Basis::M => self.clone(),
            Basis::L => QSymElement::from_terms(Basis::M, self.terms.map_linear(|a| l_basis(a).terms)),
            Basis::Eta => from_eta(self).expect("Eta basis"),
            _ => unreachable!(),
        }
    }

    /// Re-expresses this element in `target`.
    pub fn convert(&self, target: Basis) -> Result<QSymElement> {
        if target.algebra() != Algebra::QSym {
            return Err(Error::Usage(format!("{} is not a QSym basis", target)));
        }
        if target == self.basis {
            return Ok(self.clone());
        }
        let m = self.to_m();
        Ok(match target {
            Basis::M => m,
            Basis::Eta => to_eta(&m)?,
            Basis::L => m_to_l(&m),
            _ => unreachable!(),
        })
    }

    /// Equality as elements of QSym, regardless of declared basis.
    pub fn equals(&self, other: &QSymElement) -> bool {
        if self.basis == other.basis {
            return self.terms == other.terms;
        }
        self.to_m().terms == other.to_m().terms
    }

    /// Evaluates every coefficient at `q = q0`.
    pub fn specialize(&self, q0: &BigRational) -> Result<QSymElement> {
        let mut out = LinComb::new();
        for (a, c) in self.terms.iter() {
            out.add_term(a.clone(), Scalar::from_rational(&c.evaluate(q0)?));
        }
        Ok(QSymElement::from_terms(self.basis, out))
    }
}

impl fmt::Display for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_lincomb(f, self.basis, &self.terms)
    }
}

pub(crate) fn fmt_lincomb(f: &mut fmt::Formatter<'_>, basis: Basis, terms: &LinComb<Composition>) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (a, c)) in terms.iter().enumerate() {
        if i > 0 {
            writeln!(f)?;
        }
        fmt_term(f, c, &monomial(basis, a))?;
    }
    Ok(())
}

/// `M_α`.
pub fn m_basis(alpha: &Composition) -> QSymElement {
    QSymElement::from_terms(Basis::M, LinComb::single(alpha.clone(), Scalar::one()))
}

/// `L_α = Σ_{D(β) ⊇ D(α)} M_β`, in the `M` basis.
pub fn l_basis(alpha: &Composition) -> QSymElement {
    QSymElement::from_terms(
        Basis::M,
        alpha.refinements().into_iter().map(|b| (b, Scalar::one())).collect(),
    )
}

/// `η_α = Σ_{D(β) ⊆ D(α)} r^{ℓ(β)} M_β`, in the `M` basis.
pub fn eta_basis(alpha: &Composition) -> QSymElement {
    let r = Scalar::r();
    QSymElement::from_terms(
        Basis::M,
        alpha
            .coarsenings()
            .into_iter()
            .map(|b| {
                let c = r.powu(b.len());
                (b, c)
            })
            .collect(),
    )
}

fn m_to_l(f: &QSymElement) -> QSymElement {
    // M_α = Σ_{D(β) ⊇ D(α)} (-1)^{|D(β) \ D(α)|} L_β
    QSymElement::from_terms(
        Basis::L,
        f.terms.map_linear(|a| {
            a.refinements()
                .into_iter()
                .map(|b| {
                    let s = sign(b.len() - a.len());
                    (b, s)
                })
                .collect()
        }),
    )
}

/// Rewrites an `M`-basis element in the `η` basis using
/// `M_β = r^{-ℓ(β)} Σ_{D(α) ⊆ D(β)} (-1)^{ℓ(β)-ℓ(α)} η_α`.
pub fn to_eta(f: &QSymElement) -> Result<QSymElement> {
    f.check_basis(Basis::M, "to_eta")?;
    let inv_r = Scalar::r().inv()?;
    Ok(QSymElement::from_terms(
        Basis::Eta,
        f.terms.map_linear(|beta| {
            let scale = inv_r.powu(beta.len());
            beta.coarsenings()
                .into_iter()
                .map(|alpha| {
                    let c = &scale * &sign(beta.len() - alpha.len());
                    (alpha, c)
                })
                .collect()
        }),
    ))
}

/// Expands an `η`-basis element in the `M` basis.
pub fn from_eta(g: &QSymElement) -> Result<QSymElement> {
    g.check_basis(Basis::Eta, "from_eta")?;
    Ok(QSymElement::from_terms(
        Basis::M,
        g.terms.map_linear(|a| eta_basis(a).terms),
    ))
}

fn nonempty(alpha: &Composition, op: &str) -> Result<()> {
    if alpha.size() == 0 {
        return Err(Error::Domain(format!("{} requires a composition of positive size", op)));
    }
    Ok(())
}

/// `η_α = r Σ_γ (-1)^{|D(γ)\D(α)|} q^{|D(γ)∩D(α)|} L_γ`.
pub fn eta_to_l(alpha: &Composition) -> Result<QSymElement> {
    nonempty(alpha, "eta_to_l")?;
    let n = alpha.size();
    let da = alpha.descent_set();
    let r = Scalar::r();
    let q = Scalar::q();
    let mut out = LinComb::new();
    for gamma in compositions_of(n) {
        let dg = gamma.descent_set();
        let minus = dg.difference(&da)?.len();
        let common = dg.intersection(&da)?.len();
        out.add_term(gamma, &(&r * &sign(minus)) * &q.powu(common));
    }
    Ok(QSymElement::from_terms(Basis::L, out))
}

/// The `η` expansion of `r^n L_γ`:
/// `Σ_α (-1)^{|D(γ)\D(α)|} q^{|[n-1] \ (D(γ)∪D(α))|} η_α`.
pub fn l_to_eta(gamma: &Composition) -> Result<QSymElement> {
    nonempty(gamma, "l_to_eta")?;
    let n = gamma.size();
    let dg = gamma.descent_set();
    let q = Scalar::q();
    let mut out = LinComb::new();
    for alpha in compositions_of(n) {
        let da = alpha.descent_set();
        let minus = dg.difference(&da)?.len();
        let outside = dg.union(&da)?.complement().len();
        out.add_term(alpha, &sign(minus) * &q.powu(outside));
    }
    Ok(QSymElement::from_terms(Basis::Eta, out))
}

/// Quasi-shuffle of two compositions: `M_u M_v = Σ c_w M_w`, with integer
/// multiplicities.
pub fn quasi_shuffle(u: &[u32], v: &[u32]) -> Vec<(Vec<u32>, i64)> {
    use std::collections::BTreeMap;
    fn rec(u: &[u32], v: &[u32], prefix: &mut Vec<u32>, out: &mut BTreeMap<Vec<u32>, i64>) {
        if u.is_empty() || v.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(u);
            w.extend_from_slice(v);
            *out.entry(w).or_insert(0) += 1;
            return;
        }
        prefix.push(u[0]);
        rec(&u[1..], v, prefix, out);
        prefix.pop();
        prefix.push(v[0]);
        rec(u, &v[1..], prefix, out);
        prefix.pop();
        prefix.push(u[0] + v[0]);
        rec(&u[1..], &v[1..], prefix, out);
        prefix.pop();
    }
    let mut out = BTreeMap::new();
    rec(u, v, &mut Vec::new(), &mut out);
    out.into_iter().collect()
}

/// Product of two `M`-basis elements.
pub fn m_product(f: &QSymElement, g: &QSymElement) -> Result<QSymElement> {
    f.check_basis(Basis::M, "m_product")?;
    g.check_basis(Basis::M, "m_product")?;
    let mut out = LinComb::new();
    for (a, ca) in f.terms.iter() {
        for (b, cb) in g.terms.iter() {
            let c = ca * cb;
            for (w, mult) in quasi_shuffle(a.entries(), b.entries()) {
                out.add_term(Composition::from_slice(&w), &c * &Scalar::from_int(mult));
            }
        }
    }
    Ok(QSymElement::from_terms(Basis::M, out))
}

/// Product of arbitrary QSym elements, returned in the `M` basis.
pub fn product(f: &QSymElement, g: &QSymElement) -> QSymElement {
    m_product(&f.to_m(), &g.to_m()).expect("both in M")
}

/// `Δ(M_α) = Σ_{α=βγ} M_β ⊗ M_γ`.
pub fn coproduct_m(f: &QSymElement) -> Result<TensorElement> {
    f.check_basis(Basis::M, "coproduct_m")?;
    let mut out = LinComb::new();
    for (a, c) in f.terms.iter() {
        for pair in a.deconcatenations() {
            out.add_term(pair, c.clone());
        }
    }
    Ok(TensorElement::new(Basis::M, Basis::M, out))
}

/// `Δ(η_α) = Σ_{α=βγ} η_β ⊗ η_γ`.
pub fn coproduct_eta(alpha: &Composition) -> TensorElement {
    TensorElement::new(
        Basis::Eta,
        Basis::Eta,
        alpha.deconcatenations().map(|p| (p, Scalar::one())).collect(),
    )
}

/// Coproduct of an arbitrary element: `η`-basis input uses the
/// deconcatenation rule directly, everything else goes through `M`.
pub fn coproduct(f: &QSymElement) -> TensorElement {
    match f.basis {
        Basis::Eta => {
            let mut out = LinComb::new();
            for (a, c) in f.terms.iter() {
                out.add_scaled(coproduct_eta(a).terms(), c);
            }
            TensorElement::new(Basis::Eta, Basis::Eta, out)
        }
        _ => coproduct_m(&f.to_m()).expect("M basis"),
    }
}

/// Rewrites both legs of a QSym tensor in the `M` basis.
pub fn tensor_to_m(t: &TensorElement) -> TensorElement {
    let leg = |b: Basis| move |a: &Composition| QSymElement::basis_element(b, a).expect("QSym basis").to_m().terms;
    t.map_legs(Basis::M, Basis::M, leg(t.left_basis()), leg(t.right_basis()))
}

/// `S(M_α) = (-1)^{ℓ(α)} Σ_{D(γ) ⊆ D(rev α)} M_γ`.
pub fn antipode_m(f: &QSymElement) -> Result<QSymElement> {
    f.check_basis(Basis::M, "antipode_m")?;
    Ok(QSymElement::from_terms(
        Basis::M,
        f.terms.map_linear(|a| {
            let s = sign(a.len());
            a.reverse().coarsenings().into_iter().map(|g| (g, s.clone())).collect()
        }),
    ))
}

/// `S(η_α) = (-1)^{ℓ(α)} Σ_{D(β) ⊆ D(rev α)} (q-1)^{ℓ(α)-ℓ(β)} η_β`.
pub fn antipode_eta_s2(alpha: &Composition) -> QSymElement {
    let s = sign(alpha.len());
    let qm1 = Scalar::q_minus_one();
    QSymElement::from_terms(
        Basis::Eta,
        alpha
            .reverse()
            .coarsenings()
            .into_iter()
            .map(|b| {
                let c = &s * &qm1.powu(alpha.len() - b.len());
                (b, c)
            })
            .collect(),
    )
}

/// `S(η_α) = (-q)^{ℓ(α)} η^{(1/q)}_{rev α}`, expanded in `M`.
pub fn antipode_eta_s(alpha: &Composition) -> QSymElement {
    let factor = Scalar::neg_q().powu(alpha.len());
    let swapped = eta_basis(&alpha.reverse())
        .terms
        .map_coeffs(|c| &factor * &c.substitute_reciprocal());
    QSymElement::from_terms(Basis::M, swapped)
}

/// `antipode_eta_s` with `q` fixed to a rational value before computing,
/// so that `p = 1/q` must exist.
pub fn antipode_eta_s_at(alpha: &Composition, q0: &BigRational) -> Result<QSymElement> {
    use num_traits::{One, Zero};
    if q0.is_zero() {
        return Err(Error::Pole(
            "the eta.S antipode formula needs p = 1/q, undefined at q = 0".into(),
        ));
    }
    let p_plus_one = Scalar::from_rational(&(q0.recip() + BigRational::one()));
    let factor = Scalar::from_rational(&-q0).powu(alpha.len());
    Ok(QSymElement::from_terms(
        Basis::M,
        alpha
            .reverse()
            .coarsenings()
            .into_iter()
            .map(|b| {
                let c = &factor * &p_plus_one.powu(b.len());
                (b, c)
            })
            .collect(),
    ))
}

/// Antipode of an arbitrary element, returned in the `M` basis.
pub fn antipode(f: &QSymElement) -> QSymElement {
    antipode_m(&f.to_m()).expect("M basis")
}

/// `T_r(M_α) = r^{ℓ(α)} M_α`.
pub fn t_r(f: &QSymElement) -> Result<QSymElement> {
    f.check_basis(Basis::M, "t_r")?;
    let r = Scalar::r();
    Ok(QSymElement::from_terms(
        Basis::M,
        f.terms.iter().map(|(a, c)| (a.clone(), c * &r.powu(a.len()))).collect(),
    ))
}

/// `R_q(M_α) = r^{ℓ(ᾱ)} M_ᾱ`.
pub fn r_q(f: &QSymElement) -> Result<QSymElement> {
    f.check_basis(Basis::M, "r_q")?;
    let r = Scalar::r();
    Ok(QSymElement::from_terms(
        Basis::M,
        f.terms
            .iter()
            .map(|(a, c)| {
                let bar = a.complement();
                let coeff = c * &r.powu(bar.len());
                (bar, coeff)
            })
            .collect(),
    ))
}

/// Whether every composition in the `η` support of `f` (optionally after
/// specializing `q`) has all entries accepted by `allowed`.
pub fn eta_support_in(
    f: &QSymElement,
    allowed: impl Fn(u32) -> bool,
    maxdeg: usize,
    specialize_at: Option<&BigRational>,
) -> Result<bool> {
    if let Some(d) = f.degree() {
        if d > maxdeg {
            return Err(Error::Truncation {
                degree: d,
                bound: maxdeg,
            });
        }
    }
    let mut eta = f.convert(Basis::Eta)?;
    if let Some(q0) = specialize_at {
        eta = eta.specialize(q0)?;
    }
    let inside = eta.terms.keys().all(|a| a.entries().iter().all(|&e| allowed(e)));
    Ok(inside)
}

/// Change-of-basis matrix `M → η` on `Comp_n`: row `α` holds the
/// `M`-coefficients of `η_α`. Rows and columns follow canonical order.
pub fn eta_to_m_matrix(n: usize) -> (Vec<Composition>, Vec<Vec<Scalar>>) {
    let comps = compositions_of(n);
    let rows = comps
        .iter()
        .map(|a| {
            let e = eta_basis(a);
            comps.iter().map(|b| e.coeff(b)).collect()
        })
        .collect();
    (comps, rows)
}

/// `[D(β) ⊆ D(α)]` for two compositions of the same size.
pub fn is_coarsening(beta: &Composition, alpha: &Composition) -> bool {
    let (db, da): (DescentSet, DescentSet) = (beta.descent_set(), alpha.descent_set());
    db.is_subset(&da).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[u32]) -> Composition {
        Composition::from_slice(v)
    }

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    fn m(terms: &[(&[u32], &str)]) -> QSymElement {
        QSymElement::from_terms(Basis::M, terms.iter().map(|(a, x)| (c(a), s(x))).collect())
    }

    fn eta(terms: &[(&[u32], &str)]) -> QSymElement {
        QSymElement::from_terms(Basis::Eta, terms.iter().map(|(a, x)| (c(a), s(x))).collect())
    }

    #[test]
    fn eta_131_expansion() {
        assert_eq!(
            eta_basis(&c(&[1, 3, 1])),
            m(&[
                (&[5], "q+1"),
                (&[1, 4], "(q+1)^2"),
                (&[4, 1], "(q+1)^2"),
                (&[1, 3, 1], "(q+1)^3"),
            ])
        );
        assert_eq!(eta_basis(&Composition::empty()), QSymElement::one());
        assert_eq!(l_basis(&c(&[1, 1])), m(&[(&[1, 1], "1")]));
    }

    #[test]
    fn m_product_examples() {
        assert_eq!(
            m_product(&m_basis(&c(&[1])), &m_basis(&c(&[1]))).unwrap(),
            m(&[(&[1, 1], "2"), (&[2], "1")])
        );
        let f = m(&[(&[2, 1], "q"), (&[3], "1")]);
        assert_eq!(m_product(&QSymElement::one(), &f).unwrap(), f);
        assert_eq!(
            m_product(&m_basis(&c(&[2])), &m_basis(&c(&[1]))).unwrap(),
            m(&[(&[2, 1], "1"), (&[1, 2], "1"), (&[3], "1")])
        );
        let l = QSymElement::basis_element(Basis::L, &c(&[1])).unwrap();
        assert!(matches!(m_product(&l, &f), Err(Error::Usage(_))));
    }

    #[test]
    fn to_eta_examples() {
        assert_eq!(to_eta(&m_basis(&c(&[2]))).unwrap(), eta(&[(&[2], "1/(q+1)")]));
        assert_eq!(
            to_eta(&m_basis(&c(&[1, 1]))).unwrap(),
            eta(&[(&[1, 1], "1/(q+1)^2"), (&[2], "-1/(q+1)^2")])
        );
        let x = m_basis(&c(&[1, 3, 1]));
        assert_eq!(from_eta(&to_eta(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn l_conversions() {
        assert_eq!(
            eta_to_l(&c(&[1])).unwrap(),
            QSymElement::from_terms(Basis::L, LinComb::single(c(&[1]), Scalar::r()))
        );
        assert_eq!(l_to_eta(&c(&[2])).unwrap(), eta(&[(&[2], "q"), (&[1, 1], "1")]));
        assert!(matches!(eta_to_l(&Composition::empty()), Err(Error::Domain(_))));
        assert!(matches!(l_to_eta(&Composition::empty()), Err(Error::Domain(_))));
        // q = 1: both routes give the same element
        let one = BigRational::from_integer(1.into());
        let lhs = eta_to_l(&c(&[2])).unwrap().to_m().specialize(&one).unwrap();
        let rhs = eta_basis(&c(&[2])).specialize(&one).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn m_to_l_inverts_l_to_m() {
        for a in compositions_of(4) {
            let back = m_basis(&a).convert(Basis::L).unwrap().to_m();
            assert_eq!(back, m_basis(&a));
        }
    }

    #[test]
    fn coproduct_examples() {
        let t = coproduct_m(&m_basis(&c(&[2, 1]))).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.coeff(&c(&[2]), &c(&[1])), Scalar::one());
        let u = coproduct_m(&QSymElement::one()).unwrap();
        assert_eq!(u, TensorElement::unit(Basis::M, Basis::M));
        let f = m(&[(&[2, 1], "q"), (&[1], "3")]);
        assert_eq!(coproduct_m(&f).unwrap().counit_left(), f.terms);
        assert_eq!(coproduct_eta(&c(&[1])).len(), 2);
        assert_eq!(coproduct_eta(&c(&[1, 2])).coeff(&c(&[1]), &c(&[2])), Scalar::one());
        let a = c(&[2, 1]);
        assert_eq!(tensor_to_m(&coproduct_eta(&a)), coproduct_m(&eta_basis(&a)).unwrap());
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode_m(&m_basis(&c(&[1]))).unwrap(), m(&[(&[1], "-1")]));
        assert_eq!(antipode_m(&QSymElement::one()).unwrap(), QSymElement::one());
        assert_eq!(antipode_m(&m_basis(&c(&[2]))).unwrap(), m(&[(&[2], "-1")]));
        assert_eq!(
            antipode_m(&m_basis(&c(&[1, 1]))).unwrap(),
            m(&[(&[2], "1"), (&[1, 1], "1")])
        );
        assert_eq!(antipode_eta_s2(&c(&[1])), eta(&[(&[1], "-1")]));
        assert_eq!(antipode_eta_s2(&c(&[2])), eta(&[(&[2], "-1")]));
        assert_eq!(antipode_eta_s2(&c(&[1, 1])), eta(&[(&[1, 1], "1"), (&[2], "q-1")]));
        assert_eq!(antipode_eta_s(&c(&[1])), m(&[(&[1], "-q-1")]));
        assert_eq!(antipode_eta_s(&Composition::empty()), QSymElement::one());
        let a = c(&[1, 3, 1]);
        assert_eq!(antipode_eta_s(&a), antipode_m(&eta_basis(&a)).unwrap());
    }

    #[test]
    fn antipode_s_needs_invertible_q() {
        let zero = BigRational::from_integer(0.into());
        assert!(matches!(antipode_eta_s_at(&c(&[1]), &zero), Err(Error::Pole(_))));
        let two = BigRational::from_integer(2.into());
        let a = c(&[2, 1]);
        assert_eq!(
            antipode_eta_s_at(&a, &two).unwrap(),
            antipode_eta_s(&a).specialize(&two).unwrap()
        );
    }

    #[test]
    fn t_r_and_r_q() {
        assert_eq!(t_r(&m_basis(&c(&[1, 3, 1]))).unwrap(), m(&[(&[1, 3, 1], "(q+1)^3")]));
        assert_eq!(t_r(&QSymElement::one()).unwrap(), QSymElement::one());
        let a = c(&[2, 1]);
        let lhs = t_r(&antipode_m(&m_basis(&a.reverse())).unwrap())
            .unwrap()
            .scaled(&sign(a.len()));
        assert_eq!(lhs, eta_basis(&a));
        assert_eq!(r_q(&m_basis(&c(&[2]))).unwrap(), m(&[(&[1, 1], "(q+1)^2")]));
        assert_eq!(r_q(&r_q(&m_basis(&c(&[2]))).unwrap()).unwrap(), m(&[(&[2], "(q+1)^3")]));
        assert_eq!(r_q(&l_basis(&c(&[2]).complement())).unwrap(), eta_basis(&c(&[2])));
    }

    #[test]
    fn support_checks() {
        let one = BigRational::from_integer(1.into());
        let f = product(
            &QSymElement::basis_element(Basis::Eta, &c(&[3])).unwrap(),
            &QSymElement::basis_element(Basis::Eta, &c(&[1, 1])).unwrap(),
        );
        assert!(eta_support_in(&f, |e| e % 2 == 1, 6, Some(&one)).unwrap());
        let g = product(&eta(&[(&[2], "1")]), &eta(&[(&[2], "1")]));
        assert!(eta_support_in(&g, |e| e % 2 == 0, 6, None).unwrap());
        let h = product(&eta(&[(&[1], "1")]), &eta(&[(&[1], "1")]));
        assert!(!eta_support_in(&h, |e| e == 1, 6, None).unwrap());
        assert_eq!(h.convert(Basis::Eta).unwrap(), eta(&[(&[2], "q-1"), (&[1, 1], "2")]));
        assert!(matches!(
            eta_support_in(&h, |_| true, 1, None),
            Err(Error::Truncation { .. })
        ));
    }

    #[test]
    fn basis_checks() {
        assert!(QSymElement::basis_element(Basis::H, &c(&[1])).is_err());
        assert!(matches!(to_eta(&eta(&[(&[1], "1")])), Err(Error::Usage(_))));
        assert!(matches!(from_eta(&m_basis(&c(&[1]))), Err(Error::Usage(_))));
    }

    #[test]
    fn display_format() {
        assert_eq!(antipode_eta_s2(&c(&[1])).to_string(), "-1 * eta[1]");
        assert_eq!(antipode_eta_s2(&c(&[1, 1])).to_string(), "(q - 1) * eta[2]\neta[1,1]");
        assert_eq!(QSymElement::zero(Basis::M).to_string(), "0");
    }
}
