use std::fmt;

use serde::{Deserialize, Serialize};

use super::AbelianModel;
use crate::error::{Error, Result};
use crate::repkit::{enumerate_subreps, quotient, trace, Rep, SubRep, DEFAULT_SUBREP_BOUND};

/// A set of indecomposables of an [`AbelianModel`], standing for the additive
/// class they generate.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassA(u64);

impl ClassA {
    pub const fn empty() -> Self {
        ClassA(0)
    }

    pub fn full(len: usize) -> Self {
        match len {
            64 => ClassA(u64::MAX),
            l => ClassA((1u64 << l) - 1),
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        ClassA(bits)
    }

    pub fn singleton(i: usize) -> Self {
        ClassA(1 << i)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn union(self, o: Self) -> Self {
        ClassA(self.0 | o.0)
    }

    pub fn intersect(self, o: Self) -> Self {
        ClassA(self.0 & o.0)
    }

    pub fn minus(self, o: Self) -> Self {
        ClassA(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits >> i & 1 == 1)
    }
}

impl FromIterator<usize> for ClassA {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut c = ClassA::empty();
        for i in it {
            c.insert(i);
        }
        c
    }
}

impl fmt::Debug for ClassA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// `0 = chain[0] ⊂ chain[1] ⊂ … ⊂ chain[len] = object` with nonzero factors.
#[derive(Clone, Debug)]
pub struct Filtration {
    pub object: Rep,
    pub chain: Vec<SubRep>,
    pub quotients: Vec<Rep>,
}

impl Filtration {
    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// Checks the chain is increasing, ends at the object, and the factors
    /// are the recorded quotients.
    pub fn is_valid(&self) -> Result<bool> {
        let Some(first) = self.chain.first() else {
            return Ok(false);
        };
        if !first.is_zero() || !self.chain.last().is_some_and(|t| t.is_full(&self.object)) {
            return Ok(false);
        }
        if self.chain.len() != self.quotients.len() + 1 {
            return Ok(false);
        }
        for (k, w) in self.chain.windows(2).enumerate() {
            if !w[1].contains(&w[0]) || w[0] == w[1] {
                return Ok(false);
            }
            let top = w[1].to_rep(&self.object);
            let q = quotient(&top, &w[1].restrict(&w[0])?)?;
            if !crate::repkit::is_isomorphic(&q, &self.quotients[k])? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `(T, F)` with `F = T^⊥` and `T = ^⊥F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionPair {
    pub torsion: ClassA,
    pub torsion_free: ClassA,
}

impl AbelianModel {
    /// Quotients of objects of `add c` (by indecomposables).
    pub fn gen(&self, c: ClassA) -> ClassA {
        (0..self.len())
            .filter(|&y| {
                let mut acc = SubRep::zero(self.rep(y));
                for s in c.iter() {
                    acc = acc.sum(self.trace_of(s, y));
                }
                acc.is_full(self.rep(y))
            })
            .collect()
    }

    /// Subobjects of objects of `add c` (by indecomposables).
    pub fn sub(&self, c: ClassA) -> ClassA {
        (0..self.len())
            .filter(|&y| {
                let mut acc = SubRep::full(self.rep(y));
                for s in c.iter() {
                    acc = acc.intersect(self.reject_of(s, y));
                }
                acc.is_zero()
            })
            .collect()
    }

    /// `{y : Hom(c, y) = 0}`.
    pub fn perp_right(&self, c: ClassA) -> ClassA {
        (0..self.len())
            .filter(|&y| c.iter().all(|s| self.hom(s, y) == 0))
            .collect()
    }

    /// `{y : Hom(y, c) = 0}`.
    pub fn perp_left(&self, c: ClassA) -> ClassA {
        (0..self.len())
            .filter(|&y| c.iter().all(|s| self.hom(y, s) == 0))
            .collect()
    }

    /// Indecomposables `y` with a short exact sequence `u ↣ y ↠ v`,
    /// `u ∈ add a`, `v ∈ add b`.
    pub fn star_a(&self, a: ClassA, b: ClassA) -> ClassA {
        (0..self.len())
            .filter(|&y| {
                self.profiles(y)
                    .iter()
                    .any(|p| p.sub.is_subset(a) && p.quotient.is_subset(b))
            })
            .collect()
    }

    /// A filtration of `rep` of length at most `max_len` with factors in
    /// `add s`, built from the top.
    pub fn find_filtration(
        &self,
        rep: &Rep,
        s: ClassA,
        max_len: usize,
    ) -> Result<Option<Filtration>> {
        let Some((chain, quotients)) = self.filtration_chain(rep, s, max_len)? else {
            return Ok(None);
        };
        Ok(Some(Filtration {
            object: rep.clone(),
            chain,
            quotients,
        }))
    }

    fn filtration_chain(
        &self,
        rep: &Rep,
        s: ClassA,
        max_len: usize,
    ) -> Result<Option<(Vec<SubRep>, Vec<Rep>)>> {
        if rep.is_zero() {
            return Ok(Some((vec![SubRep::zero(rep)], Vec::new())));
        }
        if max_len == 0 {
            return Ok(None);
        }
        if self.class_contains(s, rep)? {
            return Ok(Some((
                vec![SubRep::zero(rep), SubRep::full(rep)],
                vec![rep.clone()],
            )));
        }
        if max_len == 1 {
            return Ok(None);
        }
        for u in enumerate_subreps(rep, DEFAULT_SUBREP_BOUND)? {
            if u.is_full(rep) || u.is_zero() {
                continue;
            }
            let q = quotient(rep, &u)?;
            if !self.class_contains(s, &q)? {
                continue;
            }
            let inner = u.to_rep(rep);
            if let Some((chain, mut quots)) = self.filtration_chain(&inner, s, max_len - 1)? {
                let mut out: Vec<SubRep> = chain.iter().map(|c| u.extend(c)).collect();
                out.push(SubRep::full(rep));
                quots.push(q);
                return Ok(Some((out, quots)));
            }
        }
        Ok(None)
    }

    /// Indecomposables admitting an `s`-filtration of length at most `n`.
    pub fn layers(&self, s: ClassA, n: usize) -> Result<ClassA> {
        let mut out = ClassA::empty();
        for y in 0..self.len() {
            if self.find_filtration(self.rep(y), s, n)?.is_some() {
                out.insert(y);
            }
        }
        Ok(out)
    }

    /// Indecomposables of the extension closure of `add s`.
    pub fn filt(&self, s: ClassA) -> Result<ClassA> {
        let mut out = ClassA::empty();
        for y in 0..self.len() {
            let len = self.rep(y).total_dim();
            if self.find_filtration(self.rep(y), s, len)?.is_some() {
                out.insert(y);
            }
        }
        Ok(out)
    }

    /// Closed under quotients and extensions.
    pub fn is_torsion_class(&self, t: ClassA) -> bool {
        self.gen(t).is_subset(t) && self.star_a(t, t).is_subset(t)
    }

    /// Closed under subobjects and extensions.
    pub fn is_torsion_free_class(&self, f: ClassA) -> bool {
        self.sub(f).is_subset(f) && self.star_a(f, f).is_subset(f)
    }

    pub fn torsion_pair(&self, t: ClassA) -> Result<TorsionPair> {
        if !self.is_torsion_class(t) {
            return Err(Error::AxiomViolation(format!(
                "{:?} is not a torsion class",
                self.labels_of(t)
            )));
        }
        let f = self.perp_right(t);
        if self.perp_left(f) != t {
            return Err(Error::Inconsistency("torsion class is not ^⊥(T^⊥)".into()));
        }
        Ok(TorsionPair {
            torsion: t,
            torsion_free: f,
        })
    }

    /// The largest subobject of `x` lying in `add t` (for a torsion class, the
    /// torsion part).
    pub fn torsion_part(&self, t: ClassA, x: &Rep) -> Result<SubRep> {
        trace(&self.reps_of(t), x)
    }
}
