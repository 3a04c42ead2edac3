//! The bounded derived category of linearly oriented A_n (`1 -> 2 -> ... -> n`).
//!
//! Indecomposables are shifted interval modules `Σ^m M[a,b]`. Projectives are
//! `P_i = [i,n]`, injectives `I_i = [1,i]`. All Hom spaces between
//! indecomposables have dimension at most one.

pub mod complex;

use std::fmt;
use std::sync::Arc as Shared;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repkit::{Quiver, Rep};

/// Interval `[a,b]` of vertices, 1-based, `1 <= a <= b <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub a: usize,
    pub b: usize,
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// `Σ^shift M[interval]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DbIndec {
    pub shift: i64,
    pub interval: Interval,
}

impl DbIndec {
    pub fn new(shift: i64, a: usize, b: usize) -> Self {
        Self {
            shift,
            interval: Interval { a, b },
        }
    }
}

impl fmt::Display for DbIndec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ^{}{}", self.shift, self.interval)
    }
}

/// A finite direct sum of indecomposables, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DbObject(Vec<DbIndec>);

impl DbObject {
    pub fn new(mut parts: Vec<DbIndec>) -> Self {
        parts.sort_unstable();
        Self(parts)
    }

    pub fn summands(&self) -> &[DbIndec] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn shifted(&self, k: i64) -> DbObject {
        DbObject(self.0.iter().map(|x| sigma(*x, k)).collect())
    }
}

impl FromIterator<DbIndec> for DbObject {
    fn from_iter<T: IntoIterator<Item = DbIndec>>(iter: T) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

pub fn sigma(x: DbIndec, k: i64) -> DbIndec {
    DbIndec {
        shift: x.shift + k,
        interval: x.interval,
    }
}

/// `D^b(k A_n)` for a fixed `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LinearA {
    n: usize,
}

impl LinearA {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("n must be positive".into()));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn interval(&self, a: usize, b: usize) -> Result<Interval> {
        if 1 <= a && a <= b && b <= self.n {
            Ok(Interval { a, b })
        } else {
            Err(Error::InvalidParams(format!(
                "[{a},{b}] is not an interval of A_{}",
                self.n
            )))
        }
    }

    pub fn intervals(&self) -> Vec<Interval> {
        (1..=self.n)
            .flat_map(|a| (a..=self.n).map(move |b| Interval { a, b }))
            .collect()
    }

    pub fn projective(&self, i: usize) -> Interval {
        Interval { a: i, b: self.n }
    }

    pub fn injective(&self, i: usize) -> Interval {
        Interval { a: 1, b: i }
    }

    /// `dim Hom(x, y)`; only shift differences 0 and 1 can contribute.
    pub fn hom(&self, x: DbIndec, y: DbIndec) -> usize {
        let (Interval { a, b }, Interval { a: c, b: d }) = (x.interval, y.interval);
        match y.shift - x.shift {
            0 => usize::from(c <= a && a <= d && d <= b),
            1 => usize::from(b < self.n && a < c && c <= b + 1 && b < d),
            _ => 0,
        }
    }

    pub fn hom_obj(&self, x: &DbObject, y: &DbObject) -> usize {
        x.0.iter()
            .map(|&s| y.0.iter().map(|&t| self.hom(s, t)).sum::<usize>())
            .sum()
    }

    /// Serre functor on projectives: `ν P_i = I_i`.
    fn nakayama_projective(&self, p: DbIndec) -> DbIndec {
        debug_assert_eq!(p.interval.b, self.n);
        DbIndec {
            shift: p.shift,
            interval: self.injective(p.interval.a),
        }
    }

    /// Auslander–Reiten translate. Non-projectives move one step along the
    /// orientation; on projectives `τ = Σ^{-1} ν`.
    pub fn tau(&self, x: DbIndec) -> DbIndec {
        let Interval { a, b } = x.interval;
        if b < self.n {
            DbIndec::new(x.shift, a + 1, b + 1)
        } else {
            sigma(self.nakayama_projective(x), -1)
        }
    }

    pub fn tau_inv(&self, x: DbIndec) -> DbIndec {
        let Interval { a, b } = x.interval;
        if a > 1 {
            DbIndec::new(x.shift, a - 1, b - 1)
        } else {
            // x = Σ^m I_b = τ(Σ^{m+1} P_b)
            DbIndec::new(x.shift + 1, b, self.n)
        }
    }

    pub fn nakayama(&self, x: DbIndec) -> DbIndec {
        sigma(self.tau(x), 1)
    }

    pub fn nakayama_inv(&self, x: DbIndec) -> DbIndec {
        self.tau_inv(sigma(x, -1))
    }

    /// Cone of the (unique up to scalar) nonzero map `x -> y`.
    pub fn cone(&self, x: DbIndec, y: DbIndec) -> Result<DbObject> {
        if self.hom(x, y) == 0 {
            return Err(Error::NoMap);
        }
        let m = x.shift;
        let (Interval { a, b }, Interval { a: c, b: d }) = (x.interval, y.interval);
        let mut out = Vec::with_capacity(2);
        if y.shift == m {
            // [a,b] -> [c,d]: cokernel [c,a-1], kernel [d+1,b] shifted once
            if c < a {
                out.push(DbIndec::new(m, c, a - 1));
            }
            if d < b {
                out.push(DbIndec::new(m + 1, d + 1, b));
            }
        } else {
            // extension 0 -> [c,d] -> [a,d] (+) [c,b] -> [a,b] -> 0, rotated
            out.push(DbIndec::new(m + 1, a, d));
            if c <= b {
                out.push(DbIndec::new(m + 1, c, b));
            }
        }
        Ok(DbObject::new(out))
    }

    pub fn quiver(&self) -> Quiver {
        Quiver::linear_a(self.n)
    }

    /// The interval module as a representation of `0 -> 1 -> ... -> n-1`.
    pub fn interval_rep(&self, q: &Shared<Quiver>, iv: Interval) -> Rep {
        let support: Vec<usize> = (iv.a - 1..iv.b).collect();
        Rep::thin(q.clone(), &support)
    }
}
