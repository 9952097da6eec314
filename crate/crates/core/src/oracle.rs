//! Brute-force ground truth: QSym elements as honest polynomials in
//! `x_1, …, x_N`, truncated at a total degree.

use std::fmt;

use crate::compositions::{compositions_up_to, Composition};
use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::qsym::QSymElement;
use crate::scalar::Scalar;
use crate::tensor::Basis;

/// Sparse exponent vector: `(variable index, exponent)` pairs with strictly
/// increasing 1-based indices and positive exponents.
pub type Monomial = Vec<(u32, u32)>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedPolynomial {
    nvars: usize,
    maxdeg: usize,
    terms: LinComb<Monomial>,
}

fn total_degree(m: &Monomial) -> usize {
    m.iter().map(|&(_, e)| e as usize).sum()
}

impl TruncatedPolynomial {
    /// Builds a polynomial, rejecting monomials outside the variable range
    /// or above the degree bound.
    pub fn new(nvars: usize, maxdeg: usize, terms: LinComb<Monomial>) -> Result<Self> {
        for m in terms.keys() {
            let sorted = m.windows(2).all(|w| w[0].0 < w[1].0);
            let in_range = m.iter().all(|&(i, e)| i >= 1 && i as usize <= nvars && e >= 1);
            if !sorted || !in_range {
                return Err(Error::Domain(format!(
                    "malformed monomial {:?} for {} variables",
                    m, nvars
                )));
            }
            let d = total_degree(m);
            if d > maxdeg {
                return Err(Error::Truncation {
                    degree: d,
                    bound: maxdeg,
                });
            }
        }
        Ok(TruncatedPolynomial { nvars, maxdeg, terms })
    }

    pub fn one(nvars: usize, maxdeg: usize) -> Self {
        TruncatedPolynomial {
            nvars,
            maxdeg,
            terms: LinComb::single(Vec::new(), Scalar::one()),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn maxdeg(&self) -> usize {
        self.maxdeg
    }

    pub fn terms(&self) -> &LinComb<Monomial> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.coeff(m)
    }
}

impl fmt::Display for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mono = if m.is_empty() {
                "1".to_string()
            } else {
                m.iter()
                    .map(|(v, e)| format!("x{}^{}", v, e))
                    .collect::<Vec<_>>()
                    .join("*")
            };
            if c.is_compound() {
                write!(f, "({}) * {}", c, mono)?;
            } else {
                write!(f, "{} * {}", c, mono)?;
            }
        }
        Ok(())
    }
}

/// Increasing `len`-tuples from `[n]`, strict or weak.
fn increasing_tuples(len: usize, n: usize, strict: bool) -> Vec<Vec<u32>> {
    fn rec(len: usize, n: u32, lo: u32, strict: bool, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in lo..=n {
            cur.push(i);
            rec(len, n, if strict { i + 1 } else { i }, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, n as u32, 1, strict, &mut Vec::new(), &mut out);
    out
}

/// `x_{i_1}^{α_1} ⋯ x_{i_ℓ}^{α_ℓ}` for weakly increasing `i`.
fn monomial_of(indices: &[u32], alpha: &[u32]) -> Monomial {
    let mut m: Monomial = Vec::with_capacity(indices.len());
    for (&i, &a) in indices.iter().zip(alpha) {
        match m.last_mut() {
            Some((j, e)) if *j == i => *e += a,
            _ => m.push((i, a)),
        }
    }
    m
}

/// `M_α(x_1, …, x_N) = Σ_{i_1 < ⋯ < i_ℓ ≤ N} x_{i_1}^{α_1} ⋯ x_{i_ℓ}^{α_ℓ}`.
fn expand_m(alpha: &Composition, nvars: usize) -> LinComb<Monomial> {
    increasing_tuples(alpha.len(), nvars, true)
        .into_iter()
        .map(|ix| (monomial_of(&ix, alpha.entries()), Scalar::one()))
        .collect()
}

/// Expands `f` in `N` variables (all further variables set to 0).
pub fn expand(f: &QSymElement, nvars: usize, maxdeg: usize) -> Result<TruncatedPolynomial> {
    if let Some(d) = f.degree() {
        if d > maxdeg {
            return Err(Error::Truncation {
                degree: d,
                bound: maxdeg,
            });
        }
    }
    let terms = f.to_m().terms().map_linear(|a| expand_m(a, nvars));
    Ok(TruncatedPolynomial { nvars, maxdeg, terms })
}

/// `η_α` summed directly over weakly increasing index tuples, each weighted
/// by `r` to the number of distinct indices.
pub fn expand_eta_direct(alpha: &Composition, nvars: usize, maxdeg: usize) -> Result<TruncatedPolynomial> {
    if alpha.size() > maxdeg {
        return Err(Error::Truncation {
            degree: alpha.size(),
            bound: maxdeg,
        });
    }
    let r = Scalar::r();
    let terms = increasing_tuples(alpha.len(), nvars, false)
        .into_iter()
        .map(|ix| {
            let m = monomial_of(&ix, alpha.entries());
            let distinct = m.len();
            (m, r.powu(distinct))
        })
        .collect();
    Ok(TruncatedPolynomial { nvars, maxdeg, terms })
}

/// Product truncated at the smaller of the two degree bounds.
pub fn poly_product(p: &TruncatedPolynomial, q: &TruncatedPolynomial) -> Result<TruncatedPolynomial> {
    if p.nvars != q.nvars {
        return Err(Error::Usage(format!(
            "variable counts differ: {} vs {}",
            p.nvars, q.nvars
        )));
    }
    let maxdeg = p.maxdeg.min(q.maxdeg);
    let mut out = LinComb::new();
    for (a, ca) in p.terms.iter() {
        let da = total_degree(a);
        for (b, cb) in q.terms.iter() {
            if da + total_degree(b) > maxdeg {
                continue;
            }
            let mut m: Monomial = Vec::with_capacity(a.len() + b.len());
            let (mut i, mut j) = (0, 0);
            while i < a.len() || j < b.len() {
                if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                    m.push(a[i]);
                    i += 1;
                } else if i == a.len() || b[j].0 < a[i].0 {
                    m.push(b[j]);
                    j += 1;
                } else {
                    m.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
            out.add_term(m, ca * cb);
        }
    }
    Ok(TruncatedPolynomial {
        nvars: p.nvars,
        maxdeg,
        terms: out,
    })
}

/// Reads off `M`-coefficients from the packed monomials
/// `x_1^{α_1} ⋯ x_ℓ^{α_ℓ}`, after checking that `p` is quasisymmetric.
pub fn extract_m(p: &TruncatedPolynomial) -> Result<QSymElement> {
    for (m, c) in p.terms.iter() {
        let packed: Monomial = m.iter().enumerate().map(|(k, &(_, e))| (k as u32 + 1, e)).collect();
        let pc = p.coeff(&packed);
        if pc != *c {
            return Err(Error::Validation(format!(
                "not quasisymmetric: coefficient {} at {:?} but {} at {:?}",
                c, m, pc, packed
            )));
        }
    }
    let mut out = LinComb::new();
    for alpha in compositions_up_to(p.maxdeg) {
        if alpha.len() > p.nvars {
            continue;
        }
        let packed: Monomial = alpha
            .entries()
            .iter()
            .enumerate()
            .map(|(k, &a)| (k as u32 + 1, a))
            .collect();
        out.add_term(alpha, p.coeff(&packed));
    }
    let f = QSymElement::new(Basis::M, out)?;
    if expand(&f, p.nvars, p.maxdeg)? != *p {
        return Err(Error::Validation(
            "polynomial is not the expansion of a quasisymmetric function".into(),
        ));
    }
    Ok(f)
}

/// `f g` computed through polynomials in `N = d` variables.
pub fn oracle_product(f: &QSymElement, g: &QSymElement, maxdeg: usize) -> Result<QSymElement> {
    let pf = expand(f, maxdeg, maxdeg)?;
    let pg = expand(g, maxdeg, maxdeg)?;
    extract_m(&poly_product(&pf, &pg)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsym::{eta_basis, m_basis};

    fn c(v: &[u32]) -> Composition {
        Composition::from_slice(v)
    }

    #[test]
    fn expand_examples() {
        let p = expand(&m_basis(&c(&[2, 1])), 3, 3).unwrap();
        let want: LinComb<Monomial> = [vec![(1, 2), (2, 1)], vec![(1, 2), (3, 1)], vec![(2, 2), (3, 1)]]
            .into_iter()
            .map(|m| (m, Scalar::one()))
            .collect();
        assert_eq!(p.terms, want);
        assert_eq!(
            expand(&QSymElement::one(), 3, 3).unwrap(),
            TruncatedPolynomial::one(3, 3)
        );
        let e = expand(&eta_basis(&c(&[2])), 2, 2).unwrap();
        assert_eq!(e.to_string(), "(q + 1) * x1^2\n(q + 1) * x2^2");
        assert!(matches!(
            expand(&m_basis(&c(&[3])), 3, 2),
            Err(Error::Truncation { .. })
        ));
    }

    #[test]
    fn product_examples() {
        let x1 = TruncatedPolynomial::new(2, 2, LinComb::single(vec![(1, 1)], Scalar::one())).unwrap();
        assert_eq!(
            poly_product(&x1, &x1).unwrap().terms,
            LinComb::single(vec![(1, 2)], Scalar::one())
        );
        let m1 = expand(&m_basis(&c(&[1])), 2, 2).unwrap();
        let sq = poly_product(&m1, &m1).unwrap();
        assert_eq!(sq.to_string(), "2 * x1^1*x2^1\n1 * x1^2\n1 * x2^2");
        assert_eq!(poly_product(&m1, &TruncatedPolynomial::one(2, 2)).unwrap(), m1);
        let other = TruncatedPolynomial::one(3, 2);
        assert!(matches!(poly_product(&m1, &other), Err(Error::Usage(_))));
    }

    #[test]
    fn extract_examples() {
        let f = m_basis(&c(&[2, 1]));
        assert_eq!(extract_m(&expand(&f, 3, 3).unwrap()).unwrap(), f);
        let m1 = expand(&m_basis(&c(&[1])), 2, 2).unwrap();
        let got = extract_m(&poly_product(&m1, &m1).unwrap()).unwrap();
        let want = QSymElement::new(
            Basis::M,
            [(c(&[1, 1]), Scalar::from_int(2)), (c(&[2]), Scalar::one())]
                .into_iter()
                .collect(),
        )
        .unwrap();
        assert_eq!(got, want);
        let bad: LinComb<Monomial> = [
            (vec![(1, 1), (2, 1)], Scalar::one()),
            (vec![(1, 1), (3, 1)], Scalar::from_int(-1)),
        ]
        .into_iter()
        .collect();
        let bad = TruncatedPolynomial::new(3, 2, bad).unwrap();
        assert!(matches!(extract_m(&bad), Err(Error::Validation(_))));
        // packed coefficient present but a shifted copy missing
        let partial = TruncatedPolynomial::new(2, 1, LinComb::single(vec![(1, 1)], Scalar::one())).unwrap();
        assert!(matches!(extract_m(&partial), Err(Error::Validation(_))));
    }

    #[test]
    fn eta_direct_matches() {
        for a in compositions_up_to(4) {
            let d = a.size();
            assert_eq!(
                expand(&eta_basis(&a), d, d).unwrap(),
                expand_eta_direct(&a, d, d).unwrap(),
                "alpha = {}",
                a
            );
        }
    }
}
