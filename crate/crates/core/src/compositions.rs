//! Compositions with their partial-sum (descent) sets, plus the
//! combinatorial transformations built on top of them.
//!
//! Compositions compare by size first and by length second, with ties
//! broken lexicographically. Every map keyed by [`Composition`] in this crate
//! iterates in that order, which keeps printed expansions stable.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if let Some(pos) = entries.iter().position(|&e| e == 0) {
            return Err(Error::Domain(format!(
                "composition entries must be positive (entry {} is 0)",
                pos + 1
            )));
        }
        Ok(Composition(entries))
    }

    /// Builds a composition from entries already known to be positive.
    ///
    /// Panics if an entry is zero.
    pub fn from_slice(entries: &[u32]) -> Self {
        assert!(entries.iter().all(|&e| e > 0), "zero entry in composition");
        Composition(entries.to_vec())
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn single(n: u32) -> Self {
        Composition::from_slice(&[n])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    /// Number of entries.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the entries.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// The set of proper partial sums `{α₁, α₁+α₂, …}` inside `[n-1]`.
    pub fn descent_set(&self) -> DescentSet {
        let mut members = Vec::with_capacity(self.len().saturating_sub(1));
        let mut acc = 0usize;
        for &e in self.0.iter().take(self.len().saturating_sub(1)) {
            acc += e as usize;
            members.push(acc);
        }
        DescentSet {
            ambient: self.size(),
            members,
        }
    }

    pub fn reverse(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// The composition whose descent set is the complement of this one's
    /// inside `[n-1]`.
    pub fn complement(&self) -> Composition {
        self.descent_set().complement().to_composition()
    }

    /// The composition whose descent set is `[n-1] \ D(rev γ)`.
    pub fn omega(&self) -> Composition {
        self.reverse().complement()
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// All `β` with `D(β) ⊆ D(self)`, in canonical order.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let mut out: Vec<Composition> = self.descent_set().subsets().map(|s| s.to_composition()).collect();
        out.sort();
        out
    }

    /// All `β` with `D(β) ⊇ D(self)`, in canonical order.
    pub fn refinements(&self) -> Vec<Composition> {
        let d = self.descent_set();
        let mut out: Vec<Composition> = d
            .complement()
            .subsets()
            .map(|extra| d.union(&extra).expect("same ambient").to_composition())
            .collect();
        out.sort();
        out
    }

    /// Merges entries `i` and `i+1` (1-based).
    pub fn collapse(&self, i: usize) -> Result<Composition> {
        if i == 0 || i >= self.len() {
            return Err(Error::Domain(format!(
                "collapse index {} outside [1, {}]",
                i,
                self.len().saturating_sub(1)
            )));
        }
        let mut v = self.0.clone();
        let merged = v[i - 1] + v[i];
        v[i - 1] = merged;
        v.remove(i);
        Ok(Composition(v))
    }

    /// Collapses at every position of `positions`, each referring to the
    /// original composition. Positions are applied from the largest down so
    /// that smaller indices stay valid.
    pub fn collapse_set(&self, positions: &[usize]) -> Result<Composition> {
        let mut sorted = positions.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&i| i == 0 || i >= self.len()) {
            return Err(Error::Domain(format!(
                "collapse index {} outside [1, {}]",
                bad,
                self.len().saturating_sub(1)
            )));
        }
        let mut out = self.clone();
        for &i in sorted.iter().rev() {
            out = out.collapse(i)?;
        }
        Ok(out)
    }

    /// `α^{↓I↓↓J}`: collapse at `I ∪ J ∪ (J-1)`.
    pub fn collapse_ij(&self, i_set: &[usize], j_set: &[usize]) -> Result<Composition> {
        let mut k: Vec<usize> = i_set.to_vec();
        for &j in j_set {
            if j == 0 || j >= self.len() {
                return Err(Error::Domain(format!(
                    "J element {} outside [1, {}]",
                    j,
                    self.len().saturating_sub(1)
                )));
            }
            k.push(j);
            if j > 1 {
                k.push(j - 1);
            } else {
                return Err(Error::Domain("J may not contain 1 (J-1 would contain 0)".into()));
            }
        }
        self.collapse_set(&k)
    }

    /// Prefix/suffix pairs `(β, γ)` with `βγ = self`.
    pub fn deconcatenations(&self) -> impl Iterator<Item = (Composition, Composition)> + '_ {
        (0..=self.len()).map(move |i| (Composition(self.0[..i].to_vec()), Composition(self.0[i..].to_vec())))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let entries = s
            .split(',')
            .map(|p| {
                let p = p.trim();
                p.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid composition entry {:?}", p)))
            })
            .collect::<Result<Vec<u32>>>()?;
        Composition::new(entries).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl From<&[u32]> for Composition {
    fn from(v: &[u32]) -> Self {
        Composition::from_slice(v)
    }
}

/// A subset of `[n-1]` together with its ambient `n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DescentSet {
    ambient: usize,
    members: Vec<usize>,
}

impl DescentSet {
    pub fn new(ambient: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&m| m == 0 || m >= ambient) {
            return Err(Error::Domain(format!(
                "subset member {} not in [1, {}]",
                bad,
                ambient.saturating_sub(1)
            )));
        }
        Ok(DescentSet { ambient, members })
    }

    pub fn empty(ambient: usize) -> Self {
        DescentSet {
            ambient,
            members: Vec::new(),
        }
    }

    /// The full set `[n-1]`.
    pub fn full(ambient: usize) -> Self {
        DescentSet {
            ambient,
            members: (1..ambient).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// The composition with cut points `self ∪ {0, n}`.
    pub fn to_composition(&self) -> Composition {
        if self.ambient == 0 {
            return Composition::empty();
        }
        let mut prev = 0usize;
        let mut v = Vec::with_capacity(self.members.len() + 1);
        for &m in self.members.iter().chain(std::iter::once(&self.ambient)) {
            v.push((m - prev) as u32);
            prev = m;
        }
        Composition(v)
    }

    /// `[n-1] \ self`.
    pub fn complement(&self) -> DescentSet {
        DescentSet {
            ambient: self.ambient,
            members: (1..self.ambient).filter(|x| !self.contains(*x)).collect(),
        }
    }

    /// `{n - x : x ∈ self}`.
    pub fn reverse(&self) -> DescentSet {
        let mut members: Vec<usize> = self.members.iter().map(|&x| self.ambient - x).collect();
        members.reverse();
        DescentSet {
            ambient: self.ambient,
            members,
        }
    }

    fn check_ambient(&self, other: &DescentSet) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Domain(format!(
                "ambient mismatch: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn is_subset(&self, other: &DescentSet) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.members.iter().all(|x| other.contains(*x)))
    }

    pub fn union(&self, other: &DescentSet) -> Result<DescentSet> {
        self.check_ambient(other)?;
        DescentSet::new(self.ambient, self.members.iter().chain(other.members.iter()).copied())
    }

    pub fn intersection(&self, other: &DescentSet) -> Result<DescentSet> {
        self.check_ambient(other)?;
        Ok(DescentSet {
            ambient: self.ambient,
            members: self.members.iter().copied().filter(|x| other.contains(*x)).collect(),
        })
    }

    pub fn difference(&self, other: &DescentSet) -> Result<DescentSet> {
        self.check_ambient(other)?;
        Ok(DescentSet {
            ambient: self.ambient,
            members: self.members.iter().copied().filter(|x| !other.contains(*x)).collect(),
        })
    }

    /// Every subset of this set (same ambient), in binary-counter order.
    pub fn subsets(&self) -> impl Iterator<Item = DescentSet> + '_ {
        let k = self.members.len();
        (0u64..(1u64 << k)).map(move |mask| DescentSet {
            ambient: self.ambient,
            members: (0..k).filter(|i| mask >> i & 1 == 1).map(|i| self.members[i]).collect(),
        })
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|e| e.to_string()).collect();
        write!(f, "{}@{}", parts.join(","), self.ambient)
    }
}

impl FromStr for DescentSet {
    type Err = Error;

    /// Parses `"2,3,6@8"`.
    fn from_str(s: &str) -> Result<Self> {
        let (body, amb) = s
            .trim()
            .split_once('@')
            .ok_or_else(|| Error::Parse(format!("subset {:?} lacks an '@ambient' suffix", s)))?;
        let ambient: usize = amb
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid ambient {:?}", amb)))?;
        let members = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("invalid subset member {:?}", p)))
                })
                .collect::<Result<Vec<_>>>()?
        };
        DescentSet::new(ambient, members)
    }
}

/// `comp(I)`: the inverse of [`Composition::descent_set`].
pub fn comp_of_subset(set: &DescentSet) -> Composition {
    set.to_composition()
}

/// All compositions of `n`, in canonical order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    let mut out: Vec<Composition> = DescentSet::full(n).subsets().map(|s| s.to_composition()).collect();
    out.sort();
    out
}

/// All compositions of size at most `n`, in canonical order.
pub fn compositions_up_to(n: usize) -> Vec<Composition> {
    (0..=n).flat_map(compositions_of).collect()
}

/// The `T`-shuffle `δ⌊T⌋ε`: slots in `T` (1-based, inside `[n+m]`) receive
/// the entries of `ε` in order, the other slots receive `δ`.
pub fn t_shuffle(delta: &Composition, epsilon: &Composition, t: &[usize]) -> Result<Composition> {
    let total = delta.len() + epsilon.len();
    let mut slots = t.to_vec();
    slots.sort_unstable();
    slots.dedup();
    if slots.len() != epsilon.len() || slots.len() != t.len() {
        return Err(Error::Domain(format!(
            "T must have exactly {} distinct elements, got {:?}",
            epsilon.len(),
            t
        )));
    }
    if slots.iter().any(|&k| k == 0 || k > total) {
        return Err(Error::Domain(format!("T = {:?} is not a subset of [{}]", t, total)));
    }
    let mut d = delta.entries().iter();
    let mut e = epsilon.entries().iter();
    let v = (1..=total)
        .map(|k| {
            if slots.binary_search(&k).is_ok() {
                *e.next().expect("counted")
            } else {
                *d.next().expect("counted")
            }
        })
        .collect();
    Ok(Composition(v))
}

/// `T' = (T \ (T-1)) \ {total}`.
pub fn t_prime(t: &[usize], total: usize) -> Vec<usize> {
    let mut out: Vec<usize> = t
        .iter()
        .copied()
        .filter(|&x| !t.contains(&(x + 1)) && x != total)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
