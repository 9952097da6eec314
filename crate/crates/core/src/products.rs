//! Three product rules for `η_δ η_ε` and the stufufuffler combinatorics
//! behind them.

use std::fmt;
use std::str::FromStr;

use crate::compositions::{t_prime, t_shuffle, Composition};
use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::qsym::QSymElement;
use crate::scalar::Scalar;
use crate::tensor::Basis;

/// A surjective weakly increasing map from the disjoint union of a chain of
/// length `ℓ` (`P`) and a chain of length `m` (`Q`) onto `[k]`, with fibers
/// of nearly equal size on the two sides.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Stufufuffler {
    fp: Vec<usize>,
    fq: Vec<usize>,
    k: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StufuffleStats {
    pub wt: Composition,
    pub loss: usize,
    pub poise: usize,
}

impl Stufufuffler {
    /// Validates and builds a stufufuffler from its two value lists.
    pub fn new(fp: Vec<usize>, fq: Vec<usize>) -> Result<Self> {
        let k = fp.iter().chain(&fq).copied().max().unwrap_or(0);
        let f = Stufufuffler { fp, fq, k };
        if f.fp.windows(2).any(|w| w[0] > w[1]) || f.fq.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Domain("stufufuffler values must be weakly increasing".into()));
        }
        if f.fp.iter().chain(&f.fq).any(|&v| v == 0) {
            return Err(Error::Domain("stufufuffler values start at 1".into()));
        }
        for (a, b) in f.block_sizes() {
            if a + b == 0 {
                return Err(Error::Domain(format!("value set misses part of [{}]", f.k)));
            }
            if a.abs_diff(b) > 1 {
                return Err(Error::Domain("fiber sizes differ by more than 1".into()));
            }
        }
        Ok(f)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn fp(&self) -> &[usize] {
        &self.fp
    }

    pub fn fq(&self) -> &[usize] {
        &self.fq
    }

    /// `(|f_P^{-1}(s)|, |f_Q^{-1}(s)|)` for `s = 1..k`.
    pub fn block_sizes(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0); self.k];
        for &v in &self.fp {
            out[v - 1].0 += 1;
        }
        for &v in &self.fq {
            out[v - 1].1 += 1;
        }
        out
    }

    pub fn stats(&self, delta: &Composition, epsilon: &Composition) -> Result<StufuffleStats> {
        if delta.len() != self.fp.len() || epsilon.len() != self.fq.len() {
            return Err(Error::Usage(format!(
                "stufufuffler has shape ({}, {}) but the compositions have lengths ({}, {})",
                self.fp.len(),
                self.fq.len(),
                delta.len(),
                epsilon.len()
            )));
        }
        let mut wt = vec![0u32; self.k];
        for (&v, &d) in self.fp.iter().zip(delta.entries()) {
            wt[v - 1] += d;
        }
        for (&v, &e) in self.fq.iter().zip(epsilon.entries()) {
            wt[v - 1] += e;
        }
        let blocks = self.block_sizes();
        let loss = blocks.iter().map(|&(a, b)| a.max(b)).sum::<usize>() - self.k;
        let poise = blocks.iter().filter(|&&(a, b)| a == b).count();
        Ok(StufuffleStats {
            wt: Composition::new(wt)?,
            loss,
            poise,
        })
    }
}

impl fmt::Display for Stufufuffler {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "P:{}|Q:{}", join(&self.fp), join(&self.fq))
    }
}

impl FromStr for Stufufuffler {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected P:..|Q:.., got {:?}", s));
        let (p, q) = s.trim().split_once('|').ok_or_else(bad)?;
        let p = p.trim().strip_prefix("P:").ok_or_else(bad)?;
        let q = q.trim().strip_prefix("Q:").ok_or_else(bad)?;
        let list = |t: &str| -> Result<Vec<usize>> {
            t.split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        Stufufuffler::new(list(p)?, list(q)?)
    }
}

/// Every block sequence `(a_1,b_1),…,(a_k,b_k)` with `a_s+b_s ≥ 1`,
/// `|a_s-b_s| ≤ 1`, `Σa = l`, `Σb = m`.
fn block_sequences(l: usize, m: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(l: usize, m: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if l == 0 && m == 0 {
            out.push(cur.clone());
            return;
        }
        for a in 0..=l {
            for b in a.saturating_sub(1)..=(a + 1).min(m) {
                if a + b == 0 {
                    continue;
                }
                cur.push((a, b));
                rec(l - a, m - b, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(l, m, &mut Vec::new(), &mut out);
    out
}

/// All stufufufflers for chains of lengths `l` and `m`, sorted
/// lexicographically on `(f_P, f_Q)`.
pub fn enumerate_stufufufflers(l: usize, m: usize) -> Vec<Stufufuffler> {
    let mut out: Vec<Stufufuffler> = block_sequences(l, m)
        .into_iter()
        .map(|blocks| {
            let mut fp = Vec::with_capacity(l);
            let mut fq = Vec::with_capacity(m);
            for (s, &(a, b)) in blocks.iter().enumerate() {
                fp.extend(std::iter::repeat_n(s + 1, a));
                fq.extend(std::iter::repeat_n(s + 1, b));
            }
            Stufufuffler {
                fp,
                fq,
                k: blocks.len(),
            }
        })
        .collect();
    out.sort();
    out
}

fn coefficient(loss: usize, poise: usize) -> Scalar {
    &Scalar::neg_q().powu(loss) * &Scalar::q_minus_one().powu(poise)
}

/// `η_δ η_ε` by summing over factorizations `δ = β_1⋯β_k`,
/// `ε = γ_1⋯γ_k` with `|ℓ(β_s) − ℓ(γ_s)| ≤ 1` and no empty pair.
pub fn eta_product_v1(delta: &Composition, epsilon: &Composition) -> QSymElement {
    fn rec(d: &[u32], e: &[u32], weight: &mut Vec<u32>, loss: usize, poise: usize, out: &mut LinComb<Composition>) {
        if d.is_empty() && e.is_empty() {
            // each block contributes max(ℓβ, ℓγ) - 1 to the loss
            out.add_term(Composition::from_slice(weight), coefficient(loss, poise));
            return;
        }
        for i in 0..=d.len() {
            let lo = i.saturating_sub(1);
            let hi = (i + 1).min(e.len());
            for j in lo..=hi {
                if i + j == 0 {
                    continue;
                }
                let (beta, gamma) = (&d[..i], &e[..j]);
                let size: u32 = beta.iter().sum::<u32>() + gamma.iter().sum::<u32>();
                weight.push(size);
                rec(
                    &d[i..],
                    &e[j..],
                    weight,
                    loss + i.max(j) - 1,
                    poise + usize::from(i == j),
                    out,
                );
                weight.pop();
            }
        }
    }
    let mut out = LinComb::new();
    rec(delta.entries(), epsilon.entries(), &mut Vec::new(), 0, 0, &mut out);
    QSymElement::new(Basis::Eta, out).expect("Eta is a QSym basis")
}

/// `η_δ η_ε = Σ_f (-q)^{loss f} (q-1)^{poise f} η_{wt f}`.
pub fn eta_product_v2(delta: &Composition, epsilon: &Composition) -> QSymElement {
    let mut out = LinComb::new();
    for f in enumerate_stufufufflers(delta.len(), epsilon.len()) {
        let st = f.stats(delta, epsilon).expect("shape matches by construction");
        out.add_term(st.wt, coefficient(st.loss, st.poise));
    }
    QSymElement::new(Basis::Eta, out).expect("Eta is a QSym basis")
}

fn subsets_of(v: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0u64..(1u64 << v.len())).map(move |mask| {
        v.iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect()
    })
}

/// `η_δ η_ε` as a sum over triples `(T, I, J)`: `T ⊆ [n+m]` with
/// `|T| = m`, `I ⊆ T'`, `J ⊆ T' \ {1}`, `I ∩ J = ∅`, each contributing
/// `(-q)^{|J|} (q-1)^{|I|} η_{(δ⌊T⌋ε)^{↓I↓↓J}}`. Here `n, m` are the lengths.
pub fn eta_product_v3(delta: &Composition, epsilon: &Composition) -> QSymElement {
    let total = delta.len() + epsilon.len();
    let all: Vec<usize> = (1..=total).collect();
    let mut out = LinComb::new();
    for t in subsets_of(&all).filter(|t| t.len() == epsilon.len()) {
        let gamma = t_shuffle(delta, epsilon, &t).expect("|T| = ℓ(ε)");
        let tp = t_prime(&t, total);
        for i_set in subsets_of(&tp) {
            let j_pool: Vec<usize> = tp.iter().copied().filter(|x| *x != 1 && !i_set.contains(x)).collect();
            for j_set in subsets_of(&j_pool) {
                let collapsed = gamma.collapse_ij(&i_set, &j_set).expect("indices inside [ℓ-1]");
                out.add_term(collapsed, coefficient(j_set.len(), i_set.len()));
            }
        }
    }
    QSymElement::new(Basis::Eta, out).expect("Eta is a QSym basis")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[u32]) -> Composition {
        Composition::from_slice(v)
    }

    fn eta(terms: &[(&[u32], &str)]) -> QSymElement {
        QSymElement::new(
            Basis::Eta,
            terms
                .iter()
                .map(|(a, x)| (c(a), x.parse::<Scalar>().unwrap()))
                .collect(),
        )
        .unwrap()
    }

    /// Every weakly increasing pair of maps into `[k]`, filtered by the
    /// definition.
    fn brute_force(l: usize, m: usize) -> Vec<Stufufuffler> {
        fn weakly(len: usize, k: usize) -> Vec<Vec<usize>> {
            if len == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for rest in weakly(len - 1, k) {
                let lo = rest.last().copied().unwrap_or(1);
                for v in lo..=k {
                    let mut w = rest.clone();
                    w.push(v);
                    out.push(w);
                }
            }
            out
        }
        let mut out = Vec::new();
        for k in 0..=(l + m) {
            for fp in weakly(l, k.max(1)) {
                for fq in weakly(m, k.max(1)) {
                    let mut cnt = vec![(0usize, 0usize); k];
                    let mut ok = true;
                    for &v in &fp {
                        if v > k {
                            ok = false;
                        } else {
                            cnt[v - 1].0 += 1;
                        }
                    }
                    for &v in &fq {
                        if v > k {
                            ok = false;
                        } else {
                            cnt[v - 1].1 += 1;
                        }
                    }
                    if ok && cnt.iter().all(|&(a, b)| a + b > 0 && a.abs_diff(b) <= 1) {
                        out.push(Stufufuffler {
                            fp: fp.clone(),
                            fq: fq.clone(),
                            k,
                        });
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn counts_match_examples_and_brute_force() {
        assert_eq!(enumerate_stufufufflers(2, 2).len(), 18);
        assert_eq!(enumerate_stufufufflers(2, 1).len(), 6);
        assert_eq!(enumerate_stufufufflers(1, 0).len(), 1);
        assert_eq!(enumerate_stufufufflers(0, 0).len(), 1);
        for l in 0..=4 {
            for m in 0..=4 {
                assert_eq!(enumerate_stufufufflers(l, m), brute_force(l, m), "l={} m={}", l, m);
            }
        }
    }

    #[test]
    fn stats_examples() {
        let (d, e) = (c(&[1, 2]), c(&[3, 4, 5]));
        let f: Stufufuffler = "P:1,1|Q:1,2,3".parse().unwrap();
        assert_eq!(
            f.stats(&d, &e).unwrap(),
            StufuffleStats {
                wt: c(&[6, 4, 5]),
                loss: 1,
                poise: 0
            }
        );
        let g: Stufufuffler = "P:1,2|Q:1,1,2".parse().unwrap();
        assert_eq!(
            g.stats(&d, &e).unwrap(),
            StufuffleStats {
                wt: c(&[8, 7]),
                loss: 1,
                poise: 1
            }
        );
        let id = Stufufuffler::new(vec![1, 2], vec![3, 4, 5]).unwrap();
        let st = id.stats(&d, &e).unwrap();
        assert_eq!((st.loss, st.poise), (0, 0));
        assert!(matches!(f.stats(&e, &d), Err(Error::Usage(_))));
        assert_eq!(g.to_string(), "P:1,2|Q:1,1,2");
        assert!("P:1,3|Q:1".parse::<Stufufuffler>().is_err());
        assert!("P:1,1,1|Q:1".parse::<Stufufuffler>().is_err());
    }

    #[test]
    fn product_examples() {
        let abc = eta(&[
            (&[6], "-q"),
            (&[1, 5], "q-1"),
            (&[4, 2], "q-1"),
            (&[3, 1, 2], "1"),
            (&[1, 3, 2], "1"),
            (&[1, 2, 3], "1"),
        ]);
        assert_eq!(eta_product_v1(&c(&[1, 2]), &c(&[3])), abc);
        assert_eq!(eta_product_v2(&c(&[1, 2]), &c(&[3])), abc);
        assert_eq!(eta_product_v3(&c(&[1, 2]), &c(&[3])), abc);
        let ab = eta(&[(&[3], "q-1"), (&[1, 2], "1"), (&[2, 1], "1")]);
        assert_eq!(eta_product_v1(&c(&[1]), &c(&[2])), ab);
        let bca = eta(&[
            (&[2, 3, 1], "1"),
            (&[6], "-q"),
            (&[2, 4], "q-1"),
            (&[2, 1, 3], "1"),
            (&[3, 3], "q-1"),
            (&[1, 2, 3], "1"),
        ]);
        assert_eq!(eta_product_v3(&c(&[1]), &c(&[2, 3])), bca);
        let e = c(&[2, 1]);
        assert_eq!(eta_product_v1(&Composition::empty(), &e), eta(&[(&[2, 1], "1")]));
        assert_eq!(eta_product_v3(&Composition::empty(), &e), eta(&[(&[2, 1], "1")]));
        assert_eq!(eta_product_v2(&c(&[1]), &Composition::empty()), eta(&[(&[1], "1")]));
    }

    #[test]
    fn abcd_example_has_eighteen_summands() {
        let (d, e) = (c(&[1, 2]), c(&[3, 4]));
        let v2 = eta_product_v2(&d, &e);
        assert_eq!(v2, eta_product_v1(&d, &e));
        assert_eq!(v2.coeff(&c(&[1, 9])), Scalar::neg_q());
        assert_eq!(v2.coeff(&c(&[4, 6])), &Scalar::q_minus_one() * &Scalar::q_minus_one());
    }
}
