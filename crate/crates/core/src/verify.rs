//! Exhaustive identity checks, grouped into suites and families.
//!
//! Every family enumerates all inputs up to a degree bound and compares two
//! independent computations. Bounds derive from a single `maxdeg`:
//! compositions use `maxdeg + 2`; most families use `maxdeg`; families that
//! need a second level of composition use `maxdeg - 1`, and the
//! free-algebra antipode families use `maxdeg - 2`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rayon::prelude::*;

use crate::compositions::{comp_of_subset, compositions_of, compositions_up_to, Composition, DescentSet};
use crate::error::Error;
use crate::fshuffle::{
    antipode_f, antipode_recursive, deconcat, eta_morphism, sharp, sharp_explicit, FreeWordElement, SharpParams,
};
use crate::linear::LinComb;
use crate::nsym::{
    coproduct_eta_star, coproduct_eta_star_n, coproduct_h, eta_star, h_product, pairing, series_eta_star_length,
    series_g, series_h, tensor_to_h, NSymElement,
};
use crate::oracle::{expand, expand_eta_direct, extract_m, oracle_product};
use crate::products::{enumerate_stufufufflers, eta_product_v1, eta_product_v2, eta_product_v3, Stufufuffler};
use crate::qsym::{
    antipode_eta_s, antipode_eta_s2, antipode_m, coproduct_eta, coproduct_m, eta_basis, eta_support_in, eta_to_l,
    eta_to_m_matrix, from_eta, is_coarsening, l_basis, l_to_eta, m_basis, m_product, r_q, t_r, tensor_to_m, to_eta,
    QSymElement,
};
use crate::scalar::Scalar;
use crate::tensor::{Basis, TensorElement};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Suite {
    Compositions,
    Bases,
    Products,
    Coproduct,
    Antipode,
    Dual,
    Series,
    Shuffle,
    Subalg,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Compositions,
        Suite::Bases,
        Suite::Products,
        Suite::Coproduct,
        Suite::Antipode,
        Suite::Dual,
        Suite::Series,
        Suite::Shuffle,
        Suite::Subalg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Compositions => "compositions",
            Suite::Bases => "bases",
            Suite::Products => "products",
            Suite::Coproduct => "coproduct",
            Suite::Antipode => "antipode",
            Suite::Dual => "dual",
            Suite::Series => "series",
            Suite::Shuffle => "shuffle",
            Suite::Subalg => "subalg",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite {:?}", s)))
    }
}

/// Outcome of one family of checks.
#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub suite: Suite,
    pub family: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {}/{}: {} checks", self.suite, self.family, self.checks)
        } else {
            write!(
                f,
                "FAIL {}/{}: {} of {} checks failed; first: {}",
                self.suite,
                self.family,
                self.failures.len(),
                self.checks,
                self.failures[0]
            )
        }
    }
}

type Check = Result<(), String>;

fn family<T: Sync>(
    suite: Suite,
    name: &'static str,
    items: Vec<T>,
    check: impl Fn(&T) -> Check + Sync,
) -> FamilyReport {
    let failures: Vec<String> = items.par_iter().filter_map(|x| check(x).err()).collect();
    FamilyReport {
        suite,
        family: name,
        checks: items.len(),
        failures,
    }
}

fn same<T: PartialEq + fmt::Debug>(got: T, want: T, ctx: impl fmt::Display) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{}: got {:?}, expected {:?}", ctx, got, want))
    }
}

fn holds(cond: bool, ctx: impl fmt::Display) -> Check {
    if cond {
        Ok(())
    } else {
        Err(ctx.to_string())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn comps_between(lo: usize, hi: usize) -> Vec<Composition> {
    compositions_up_to(hi).into_iter().filter(|a| a.size() >= lo).collect()
}

/// Pairs `(α, β)` with `|α| + |β| ≤ n`.
fn pairs_up_to(n: usize) -> Vec<(Composition, Composition)> {
    let all = compositions_up_to(n);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if a.size() + b.size() <= n {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn triples_up_to(n: usize) -> Vec<(Composition, Composition, Composition)> {
    let all = compositions_up_to(n);
    let mut out = Vec::new();
    for (a, b) in pairs_up_to(n) {
        for c in &all {
            if a.size() + b.size() + c.size() <= n {
                out.push((a.clone(), b.clone(), c.clone()));
            }
        }
    }
    out
}

/// Runs one suite at the given degree bound.
pub fn run_suite(suite: Suite, maxdeg: usize) -> Vec<FamilyReport> {
    match suite {
        Suite::Compositions => compositions_suite(maxdeg + 2),
        Suite::Bases => bases_suite(maxdeg),
        Suite::Products => products_suite(maxdeg),
        Suite::Coproduct => coproduct_suite(maxdeg),
        Suite::Antipode => antipode_suite(maxdeg),
        Suite::Dual => dual_suite(maxdeg),
        Suite::Series => series_suite(maxdeg),
        Suite::Shuffle => shuffle_suite(maxdeg),
        Suite::Subalg => subalg_suite(maxdeg),
    }
}

pub fn run_suites(suites: &[Suite], maxdeg: usize) -> Vec<FamilyReport> {
    suites.iter().flat_map(|&s| run_suite(s, maxdeg)).collect()
}

pub fn compositions_suite(n: usize) -> Vec<FamilyReport> {
    let s = Suite::Compositions;
    let all = compositions_up_to(n);
    let subsets: Vec<DescentSet> = (0..=n)
        .flat_map(|m| DescentSet::full(m).subsets().collect::<Vec<_>>())
        .collect();
    vec![
        family(s, "comp-after-descent-set", all.clone(), |a| {
            same(comp_of_subset(&a.descent_set()), a.clone(), a)
        }),
        family(s, "descent-set-after-comp", subsets.clone(), |i| {
            same(comp_of_subset(i).descent_set(), i.clone(), i)
        }),
        family(s, "length-vs-descent-count", all.clone(), |a| {
            same(a.len(), a.descent_set().len() + usize::from(a.size() != 0), a)
        }),
        family(s, "involutions", all.clone(), |a| {
            holds(
                a.reverse().reverse() == *a && a.complement().complement() == *a && a.omega().omega() == *a,
                format!("{} is not fixed by rev², complement², ω²", a),
            )
        }),
        family(s, "omega-definition", all.clone(), |a| {
            same(a.omega().descent_set(), a.reverse().descent_set().complement(), a)
        }),
        family(s, "complement-length", comps_between(1, n), |a| {
            same(a.len() + a.complement().len(), a.size() + 1, a)
        }),
        family(s, "reverse-subset", all.clone(), |a| {
            let d = a.descent_set();
            same(a.reverse().descent_set(), d.reverse(), a)?;
            same(d.reverse().reverse(), d.clone(), a)?;
            same(d.reverse().len(), d.len(), a)
        }),
        family(s, "coarsenings", all.clone(), |a| {
            let got = a.coarsenings();
            let want: Vec<Composition> = compositions_of(a.size())
                .into_iter()
                .filter(|b| b.descent_set().is_subset(&a.descent_set()).unwrap_or(false))
                .collect();
            same(got.len(), 1usize << a.len().saturating_sub(1), a)?;
            same(got, want, a)
        }),
        family(s, "concat-descent-laws", pairs_up_to(n), |(b, g)| {
            let bg = b.concat(g);
            let m = b.size();
            let d = bg.descent_set();
            let low: Vec<usize> = d.members().iter().copied().filter(|&x| x < m).collect();
            let high: Vec<usize> = d.members().iter().copied().filter(|&x| x > m).map(|x| x - m).collect();
            let ctx = format!("{} · {}", b, g);
            same(low, b.descent_set().members().to_vec(), &ctx)?;
            same(high, g.descent_set().members().to_vec(), &ctx)?;
            same((bg.len(), bg.size()), (b.len() + g.len(), b.size() + g.size()), &ctx)
        }),
    ]
}

pub fn bases_suite(d: usize) -> Vec<FamilyReport> {
    let s = Suite::Bases;
    let all = compositions_up_to(d);
    let positive = comps_between(1, d);
    let r = Scalar::r();
    vec![
        family(s, "eta-two-expansions", all.clone(), |a| {
            let n = a.size();
            let via_m = expand(&eta_basis(a), n, n).map_err(err)?;
            same(via_m, expand_eta_direct(a, n, n).map_err(err)?, a)
        }),
        family(s, "oracle-round-trip", all.clone(), |a| {
            let n = a.size();
            same(
                extract_m(&expand(&m_basis(a), n, n).map_err(err)?).map_err(err)?,
                m_basis(a),
                a,
            )
        }),
        family(s, "m-product-oracle", pairs_up_to(d), |(a, b)| {
            let n = a.size() + b.size();
            same(
                m_product(&m_basis(a), &m_basis(b)).map_err(err)?,
                oracle_product(&m_basis(a), &m_basis(b), n).map_err(err)?,
                format!("{} * {}", a, b),
            )
        }),
        family(s, "m-to-eta-triangular", (0..=d).collect(), |&n| {
            let (comps, rows) = eta_to_m_matrix(n);
            for (i, a) in comps.iter().enumerate() {
                for (j, b) in comps.iter().enumerate() {
                    let c = &rows[i][j];
                    if i == j {
                        same(c.clone(), r.powu(a.len()), format!("diagonal at {}", a))?;
                    } else if !c.is_zero() {
                        holds(
                            is_coarsening(b, a),
                            format!("entry ({}, {}) outside the triangle", a, b),
                        )?;
                    }
                }
            }
            Ok(())
        }),
        family(s, "eta-round-trip", all.clone(), |a| {
            same(
                from_eta(&to_eta(&m_basis(a)).map_err(err)?).map_err(err)?,
                m_basis(a),
                a,
            )?;
            let e = QSymElement::basis_element(Basis::Eta, a).map_err(err)?;
            same(to_eta(&from_eta(&e).map_err(err)?).map_err(err)?, e, a)
        }),
        family(s, "eta-through-l", positive.clone(), |a| {
            same(eta_to_l(a).map_err(err)?.to_m(), eta_basis(a), a)
        }),
        family(s, "l-through-eta", positive.clone(), |g| {
            let want = l_basis(g).scaled(&r.powu(g.size()));
            same(l_to_eta(g).map_err(err)?.to_m(), want, g)
        }),
        family(s, "rq-involution", positive.clone(), |a| {
            let x = m_basis(a);
            same(
                r_q(&r_q(&x).map_err(err)?).map_err(err)?,
                x.scaled(&r.powu(a.size() + 1)),
                a,
            )
        }),
        family(s, "rq-of-complement-l", positive.clone(), |a| {
            same(r_q(&l_basis(&a.complement())).map_err(err)?, eta_basis(a), a)
        }),
        family(s, "rq-of-eta", positive, |a| {
            let want = l_basis(&a.complement()).scaled(&r.powu(a.size() + 1));
            same(r_q(&eta_basis(a)).map_err(err)?, want, a)
        }),
    ]
}

/// Stufufufflers straight from the definition: all pairs of weakly
/// increasing maps into `[k]`, filtered.
fn stufufufflers_by_definition(l: usize, m: usize) -> Vec<Stufufuffler> {
    fn weakly(len: usize, k: usize) -> Vec<Vec<usize>> {
        if len == 0 {
            return vec![vec![]];
        }
        weakly(len - 1, k)
            .into_iter()
            .flat_map(|w| {
                let lo = w.last().copied().unwrap_or(1);
                (lo..=k).map(move |v| {
                    let mut x = w.clone();
                    x.push(v);
                    x
                })
            })
            .collect()
    }
    let mut out = Vec::new();
    for k in 0..=(l + m) {
        for fp in weakly(l, k) {
            for fq in weakly(m, k) {
                let onto = (1..=k).all(|s| fp.contains(&s) || fq.contains(&s));
                if onto {
                    if let Ok(f) = Stufufuffler::new(fp.clone(), fq.clone()) {
                        out.push(f);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// All interleavings of `u` and `v`, with multiplicity.
fn shuffles(u: &[u32], v: &[u32]) -> BTreeMap<Composition, usize> {
    let n = u.len() + v.len();
    let mut out = BTreeMap::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != v.len() {
            continue;
        }
        let (mut i, mut j) = (0, 0);
        let w: Vec<u32> = (0..n)
            .map(|k| {
                if mask >> k & 1 == 1 {
                    j += 1;
                    v[j - 1]
                } else {
                    i += 1;
                    u[i - 1]
                }
            })
            .collect();
        *out.entry(Composition::from_slice(&w)).or_insert(0) += 1;
    }
    out
}

pub fn products_suite(d: usize) -> Vec<FamilyReport> {
    let s = Suite::Products;
    let shapes: Vec<(usize, usize)> = (0..=d).flat_map(|l| (0..=d - l).map(move |m| (l, m))).collect();
    let pairs = pairs_up_to(d);
    vec![
        family(s, "stufufuffler-enumeration", shapes.clone(), |&(l, m)| {
            same(
                enumerate_stufufufflers(l, m),
                stufufufflers_by_definition(l, m),
                format!("shape ({}, {})", l, m),
            )
        }),
        family(
            s,
            "stufufuffler-counts",
            vec![((2, 1), 6usize), ((2, 2), 18)],
            |&((l, m), want)| {
                same(
                    enumerate_stufufufflers(l, m).len(),
                    want,
                    format!("shape ({}, {})", l, m),
                )
            },
        ),
        family(s, "stats-length-identity", shapes, |&(l, m)| {
            let delta = Composition::from_slice(&vec![1; l]);
            let eps = Composition::from_slice(&vec![2; m]);
            for f in enumerate_stufufufflers(l, m) {
                let st = f.stats(&delta, &eps).map_err(err)?;
                same(2 * st.loss + st.poise + st.wt.len(), l + m, &f)?;
            }
            Ok(())
        }),
        family(s, "three-rules-agree", pairs.clone(), |(a, b)| {
            let v1 = eta_product_v1(a, b);
            let ctx = format!("eta[{}] * eta[{}]", a, b);
            same(&eta_product_v2(a, b), &v1, &ctx)?;
            same(&eta_product_v3(a, b), &v1, &ctx)
        }),
        family(s, "oracle-agrees", pairs.clone(), |(a, b)| {
            let n = a.size() + b.size();
            let oracle = oracle_product(&eta_basis(a), &eta_basis(b), n).map_err(err)?;
            same(
                from_eta(&eta_product_v1(a, b)).map_err(err)?,
                oracle,
                format!("eta[{}] * eta[{}]", a, b),
            )
        }),
        family(s, "commutative", pairs.clone(), |(a, b)| {
            same(eta_product_v1(a, b), eta_product_v1(b, a), format!("{} vs {}", a, b))
        }),
        family(s, "unit-coefficient-terms-are-shuffles", pairs, |(a, b)| {
            let mut got: BTreeMap<Composition, usize> = BTreeMap::new();
            for f in enumerate_stufufufflers(a.len(), b.len()) {
                let st = f.stats(a, b).map_err(err)?;
                if st.loss == 0 && st.poise == 0 {
                    *got.entry(st.wt).or_insert(0) += 1;
                }
            }
            same(got, shuffles(a.entries(), b.entries()), format!("{} ш {}", a, b))
        }),
    ]
}

type Triple = LinComb<(Composition, Composition, Composition)>;

fn coassoc_sides(alpha: &Composition) -> (Triple, Triple) {
    let delta = coproduct_m(&m_basis(alpha)).expect("M basis");
    let mut left = Triple::new();
    let mut right = Triple::new();
    for ((b, g), c) in delta.terms().iter() {
        for ((b1, b2), c1) in coproduct_m(&m_basis(b)).expect("M").terms().iter() {
            left.add_term((b1.clone(), b2.clone(), g.clone()), c * c1);
        }
        for ((g1, g2), c2) in coproduct_m(&m_basis(g)).expect("M").terms().iter() {
            right.add_term((b.clone(), g1.clone(), g2.clone()), c * c2);
        }
    }
    (left, right)
}

pub fn coproduct_suite(d: usize) -> Vec<FamilyReport> {
    let s = Suite::Coproduct;
    let all = compositions_up_to(d);
    vec![
        family(s, "eta-deconcatenation", all.clone(), |a| {
            same(
                tensor_to_m(&coproduct_eta(a)),
                coproduct_m(&eta_basis(a)).map_err(err)?,
                a,
            )
        }),
        family(s, "tr-intertwines", all.clone(), |a| {
            let lhs = coproduct_m(&t_r(&m_basis(a)).map_err(err)?).map_err(err)?;
            let tr = |x: &Composition| t_r(&m_basis(x)).expect("M").terms().clone();
            let rhs = coproduct_m(&m_basis(a))
                .map_err(err)?
                .map_legs(Basis::M, Basis::M, tr, tr);
            same(lhs, rhs, a)
        }),
        family(s, "coassociative", all.clone(), |a| {
            let (l, r) = coassoc_sides(a);
            same(l, r, a)
        }),
        family(s, "counit", all, |a| {
            let t = coproduct_m(&m_basis(a)).map_err(err)?;
            same(t.counit_left(), m_basis(a).terms().clone(), a)?;
            same(t.counit_right(), m_basis(a).terms().clone(), a)
        }),
    ]
}

fn counit_m(a: &Composition) -> QSymElement {
    if a.is_empty() {
        QSymElement::one()
    } else {
        QSymElement::zero(Basis::M)
    }
}

pub fn antipode_suite(d: usize) -> Vec<FamilyReport> {
    let s = Suite::Antipode;
    let all = compositions_up_to(d);
    let smaller = compositions_up_to(d.saturating_sub(1));
    vec![
        family(s, "s2-matches-m-route", all.clone(), |a| {
            same(antipode_eta_s2(a).to_m(), antipode_m(&eta_basis(a)).map_err(err)?, a)
        }),
        family(s, "s-matches-m-route", all.clone(), |a| {
            same(antipode_eta_s(a), antipode_m(&eta_basis(a)).map_err(err)?, a)
        }),
        family(s, "involution", smaller.clone(), |a| {
            same(
                antipode_m(&antipode_m(&m_basis(a)).map_err(err)?).map_err(err)?,
                m_basis(a),
                a,
            )
        }),
        family(s, "hopf-axiom-m", smaller.clone(), |a| {
            let mut left = QSymElement::zero(Basis::M);
            let mut right = QSymElement::zero(Basis::M);
            for (b, g) in a.deconcatenations() {
                let sb = antipode_m(&m_basis(&b)).map_err(err)?;
                let sg = antipode_m(&m_basis(&g)).map_err(err)?;
                left = left.plus(&m_product(&sb, &m_basis(&g)).map_err(err)?).map_err(err)?;
                right = right.plus(&m_product(&m_basis(&b), &sg).map_err(err)?).map_err(err)?;
            }
            same(&left, &counit_m(a), a)?;
            same(&right, &counit_m(a), a)
        }),
        family(s, "hopf-axiom-eta", smaller, |a| {
            let mut acc = QSymElement::zero(Basis::M);
            for (b, g) in a.deconcatenations() {
                let term = m_product(&antipode_eta_s2(&b).to_m(), &eta_basis(&g)).map_err(err)?;
                acc = acc.plus(&term).map_err(err)?;
            }
            same(acc, counit_m(a), a)
        }),
        family(s, "tr-of-antipode", comps_between(1, d), |a| {
            let x = t_r(&antipode_m(&m_basis(&a.reverse())).map_err(err)?).map_err(err)?;
            same(x.scaled(&sign(a.len())), eta_basis(a), a)
        }),
    ]
}

fn pair_tensors(h: &TensorElement, f: &QSymElement, g: &QSymElement) -> Scalar {
    let mut out = Scalar::zero();
    for ((a, b), c) in h.terms().iter() {
        let x = pairing(&NSymElement::h(a), f);
        let y = pairing(&NSymElement::h(b), g);
        out += &(&(c * &x) * &y);
    }
    out
}

pub fn dual_suite(d: usize) -> Vec<FamilyReport> {
    let s = Suite::Dual;
    let grams: Vec<(Composition, Composition)> = (0..=d)
        .flat_map(|n| {
            let c = compositions_of(n);
            c.iter()
                .flat_map(|a| c.iter().map(move |b| (a.clone(), b.clone())))
                .collect::<Vec<_>>()
        })
        .collect();
    let smaller = d.saturating_sub(1);
    let concat = |a: &Composition, b: &Composition| LinComb::single(a.concat(b), Scalar::one());
    vec![
        family(s, "gram-identity", grams, |(a, b)| {
            let want = if a == b { Scalar::one() } else { Scalar::zero() };
            same(
                pairing(&eta_star(a), &eta_basis(b)),
                want,
                format!("<eta*[{}], eta[{}]>", a, b),
            )
        }),
        family(s, "eta-star-multiplicative", pairs_up_to(d), |(a, b)| {
            same(
                h_product(&eta_star(a), &eta_star(b)),
                eta_star(&a.concat(b)),
                format!("{} · {}", a, b),
            )
        }),
        family(s, "coproduct-eta-star-n", (1..=d).collect(), |&n| {
            let t = coproduct_eta_star_n(n).map_err(err)?;
            same(
                tensor_to_h(&t),
                coproduct_h(&eta_star(&Composition::single(n as u32))),
                n,
            )
        }),
        family(s, "coproduct-eta-star-alpha", compositions_up_to(smaller), |a| {
            let t = coproduct_eta_star(a);
            same(tensor_to_h(&t), coproduct_h(&eta_star(a)), a)?;
            let mut legwise = TensorElement::unit(Basis::EtaStar, Basis::EtaStar);
            for &n in a.entries() {
                let factor = coproduct_eta_star_n(n as usize).map_err(err)?;
                legwise = legwise.mul_legwise(&factor, concat, concat).map_err(err)?;
            }
            same(t, legwise, a)
        }),
        family(s, "pairing-adjoint", triples_up_to(smaller), |(a, b, g)| {
            // ⟨H_a H_b, M_g⟩ = Σ ⟨H_a, M_{g(1)}⟩⟨H_b, M_{g(2)}⟩
            let lhs = pairing(&h_product(&NSymElement::h(a), &NSymElement::h(b)), &m_basis(g));
            let mut rhs = Scalar::zero();
            for ((g1, g2), c) in coproduct_m(&m_basis(g)).map_err(err)?.terms().iter() {
                let x = &pairing(&NSymElement::h(a), &m_basis(g1)) * &pairing(&NSymElement::h(b), &m_basis(g2));
                rhs += &(c * &x);
            }
            let ctx = format!("H[{}] H[{}] vs M[{}]", a, b, g);
            same(lhs, rhs, &ctx)?;
            // ⟨H_g, M_a M_b⟩ = Σ ⟨H_{g(1)}, M_a⟩⟨H_{g(2)}, M_b⟩
            let lhs = pairing(&NSymElement::h(g), &m_product(&m_basis(a), &m_basis(b)).map_err(err)?);
            let rhs = pair_tensors(&coproduct_h(&NSymElement::h(g)), &m_basis(a), &m_basis(b));
            same(lhs, rhs, ctx)
        }),
    ]
}

pub fn series_suite(d: usize) -> Vec<FamilyReport> {
    let s = Suite::Series;
    let h = series_h(d);
    let g = series_g(d);
    let rhs = h
        .sub_const(&Scalar::one())
        .mul(&h.add_const(&Scalar::q()).invert().expect("constant term r"))
        .expect("same truncation");
    let powers: Vec<(usize, usize)> = (0..=4usize).flat_map(|k| (0..=d).map(move |t| (k, t))).collect();
    let gpow: Vec<_> = (0..=4).map(|k| (g.pow(k), series_eta_star_length(d, k))).collect();
    vec![
        family(s, "g-from-h", (0..=d).collect(), |&t| {
            same(g.coeff(t), rhs.coeff(t), format!("t^{}", t))
        }),
        family(s, "g-powers", powers, |&(k, t)| {
            let (lhs, rhs) = &gpow[k];
            same(lhs.coeff(t), rhs.coeff(t), format!("k = {}, t^{}", k, t))
        }),
    ]
}

/// `(a, b) ∈ {0, 1, 2, 3, -1}²` followed by the symbolic pair `(q-1, -q)`.
pub fn sharp_parameter_grid() -> Vec<SharpParams> {
    let vals = [0, 1, 2, 3, -1];
    let mut out: Vec<SharpParams> = vals
        .iter()
        .flat_map(|&a| {
            vals.iter()
                .map(move |&b| SharpParams::new(Scalar::from_int(a), Scalar::from_int(b)))
        })
        .collect();
    out.push(SharpParams::new(Scalar::q_minus_one(), Scalar::neg_q()));
    out
}

fn x(w: &Composition) -> FreeWordElement {
    FreeWordElement::word(w)
}

fn counit_f(a: &Composition) -> FreeWordElement {
    if a.is_empty() {
        FreeWordElement::one()
    } else {
        FreeWordElement::zero()
    }
}

pub fn shuffle_suite(d: usize) -> Vec<FamilyReport> {
    let s = Suite::Shuffle;
    let size = d.saturating_sub(1);
    let small = d.saturating_sub(2);
    let grid = sharp_parameter_grid();
    let with_grid = |items: Vec<Composition>| -> Vec<(Composition, usize)> {
        items
            .into_iter()
            .flat_map(|a| (0..grid.len()).map(move |i| (a.clone(), i)))
            .collect()
    };
    let pairs: Vec<(Composition, Composition, usize)> = pairs_up_to(size)
        .into_iter()
        .flat_map(|(a, b)| (0..grid.len()).map(move |i| (a.clone(), b.clone(), i)))
        .collect();
    let triples: Vec<(Composition, Composition, Composition, usize)> = triples_up_to(size)
        .into_iter()
        .flat_map(|(a, b, c)| (0..grid.len()).map(move |i| (a.clone(), b.clone(), c.clone(), i)))
        .collect();
    let us = [rat(1), rat(-1), rat(2)];
    let u_pairs: Vec<(Composition, Composition, usize)> = pairs_up_to(size)
        .into_iter()
        .flat_map(|(a, b)| (0..us.len()).map(move |i| (a.clone(), b.clone(), i)))
        .collect();
    let u_words: Vec<(Composition, usize)> = compositions_up_to(size)
        .into_iter()
        .flat_map(|a| (0..us.len()).map(move |i| (a.clone(), i)))
        .collect();
    vec![
        family(s, "unit", with_grid(compositions_up_to(size)), |(a, i)| {
            let p = &grid[*i];
            same(sharp(&FreeWordElement::one(), &x(a), p), x(a), a)?;
            same(sharp(&x(a), &FreeWordElement::one(), p), x(a), a)
        }),
        family(s, "commutative", pairs.clone(), |(a, b, i)| {
            let p = &grid[*i];
            same(sharp(&x(a), &x(b), p), sharp(&x(b), &x(a), p), format!("{} # {}", a, b))
        }),
        family(s, "associative", triples, |(a, b, c, i)| {
            let p = &grid[*i];
            let left = sharp(&sharp(&x(a), &x(b), p), &x(c), p);
            let right = sharp(&x(a), &sharp(&x(b), &x(c), p), p);
            same(left, right, format!("({} # {}) # {}", a, b, c))
        }),
        family(s, "explicit-formula", pairs, |(a, b, i)| {
            let p = &grid[*i];
            same(
                sharp_explicit(a, b, p),
                sharp(&x(a), &x(b), p),
                format!("{} # {}", a, b),
            )
        }),
        family(
            s,
            "antipode-formula-vs-recursive",
            with_grid(compositions_up_to(small)),
            |(a, i)| {
                let p = &grid[*i];
                same(antipode_f(a, p), antipode_recursive(a, p), a)
            },
        ),
        family(s, "hopf-axiom", with_grid(compositions_up_to(small)), |(a, i)| {
            let p = &grid[*i];
            let mut left = FreeWordElement::zero();
            let mut right = FreeWordElement::zero();
            for ((b, g), c) in deconcat(&x(a)).terms().iter() {
                left = left.plus(&sharp(&antipode_f(b, p), &x(g), p).scaled(c));
                right = right.plus(&sharp(&x(b), &antipode_f(g, p), p).scaled(c));
            }
            same(&left, &counit_f(a), a)?;
            same(&right, &counit_f(a), a)
        }),
        family(s, "eta-morphism-multiplicative", u_pairs, |(a, b, i)| {
            let u = &us[*i];
            let p = SharpParams::for_eta(u);
            let lhs = eta_morphism(&sharp(&x(a), &x(b), &p), &p, u).map_err(err)?;
            let rhs = m_product(
                &eta_morphism(&x(a), &p, u).map_err(err)?,
                &eta_morphism(&x(b), &p, u).map_err(err)?,
            )
            .map_err(err)?;
            same(lhs, rhs, format!("{} # {} at u = {}", a, b, u))
        }),
        family(s, "eta-morphism-comultiplicative", u_words, |(a, i)| {
            let u = &us[*i];
            let p = SharpParams::for_eta(u);
            let phi = |w: &Composition| eta_morphism(&x(w), &p, u).expect("matching parameters").terms().clone();
            let lhs = coproduct_m(&eta_morphism(&x(a), &p, u).map_err(err)?).map_err(err)?;
            let rhs = deconcat(&x(a)).map_legs(Basis::M, Basis::M, phi, phi);
            same(lhs, rhs, format!("{} at u = {}", a, u))
        }),
    ]
}

fn words_over(allowed: impl Fn(u32) -> bool, n: usize) -> Vec<Composition> {
    compositions_up_to(n)
        .into_iter()
        .filter(|a| a.entries().iter().all(|&e| allowed(e)))
        .collect()
}

fn closure_family(name: &'static str, d: usize, allowed: fn(u32) -> bool, at: Option<BigRational>) -> FamilyReport {
    let words = words_over(allowed, d);
    let mut pairs = Vec::new();
    for a in &words {
        for b in &words {
            if a.size() + b.size() <= d {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    family(Suite::Subalg, name, pairs, |(a, b)| {
        let f = m_product(&eta_basis(a), &eta_basis(b)).map_err(err)?;
        let ok = eta_support_in(&f, allowed, d, at.as_ref()).map_err(err)?;
        holds(ok, format!("eta[{}] * eta[{}] leaves the subalgebra", a, b))
    })
}

pub fn subalg_suite(d: usize) -> Vec<FamilyReport> {
    let s = Suite::Subalg;
    let zero = rat(0);
    vec![
        family(s, "hoffman-at-q0", compositions_up_to(d), |a| {
            let want = QSymElement::new(
                Basis::M,
                a.coarsenings().into_iter().map(|b| (b, Scalar::one())).collect(),
            )
            .map_err(err)?;
            same(eta_basis(a).specialize(&zero).map_err(err)?, want, a)
        }),
        closure_family("odd-entries-at-q1", d, |e| e % 2 == 1, Some(rat(1))),
        closure_family("even-entries", d, |e| e % 2 == 0, None),
        closure_family("entries-at-least-2", d, |e| e >= 2, None),
    ]
}
