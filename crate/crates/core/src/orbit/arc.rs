use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters of C_{-w}(A_n) and of its polygon model, `N = (w+1)(n+1) - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ParamsWire", into = "ParamsWire")]
pub struct CatParams {
    w: usize,
    n: usize,
    polygon: usize,
}

#[derive(Serialize, Deserialize)]
struct ParamsWire {
    w: usize,
    n: usize,
}

impl TryFrom<ParamsWire> for CatParams {
    type Error = Error;
    fn try_from(p: ParamsWire) -> Result<Self> {
        CatParams::new(p.w, p.n)
    }
}

impl From<CatParams> for ParamsWire {
    fn from(p: CatParams) -> Self {
        ParamsWire { w: p.w, n: p.n }
    }
}

pub fn make_params(w: usize, n: usize) -> Result<CatParams> {
    CatParams::new(w, n)
}

impl CatParams {
    /// Rejects `w < 2`: for `w = 1` the admissible pairs are polygon edges and
    /// the diagonal model degenerates.
    pub fn new(w: usize, n: usize) -> Result<Self> {
        if w == 0 || n == 0 {
            return Err(Error::InvalidParams(format!(
                "w and n must be positive (got w={w}, n={n})"
            )));
        }
        if w == 1 {
            return Err(Error::InvalidParams(
                "w = 1 is degenerate: every admissible pair is a polygon edge".into(),
            ));
        }
        Ok(Self {
            w,
            n,
            polygon: (w + 1) * (n + 1) - 2,
        })
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of polygon corners `N`.
    pub fn polygon_size(&self) -> usize {
        self.polygon
    }

    pub fn arc_count(&self) -> usize {
        self.polygon * self.n / 2
    }

    pub fn check(&self, arc: Arc) -> Result<()> {
        let reject = |reason: String| Err(Error::InvalidArc { arc, reason });
        let Arc { a, b } = arc;
        if a >= b {
            return reject("endpoints must satisfy a < b".into());
        }
        if b >= self.polygon {
            return reject(format!(
                "corner {b} does not exist on the {}-gon",
                self.polygon
            ));
        }
        if b - a == 1 || b - a == self.polygon - 1 {
            return reject("polygon edge, not a diagonal".into());
        }
        if (b - a + 1) % (self.w + 1) != 0 {
            return reject(format!(
                "not admissible: {} does not divide {}",
                self.w + 1,
                b - a + 1
            ));
        }
        Ok(())
    }

    pub fn arc(&self, a: usize, b: usize) -> Result<Arc> {
        let arc = Arc { a, b };
        self.check(arc)?;
        Ok(arc)
    }

    pub fn admissible_arcs(&self) -> Vec<Arc> {
        let nn = self.polygon;
        (0..nn)
            .flat_map(|a| (a + 1..nn).map(move |b| Arc { a, b }))
            .filter(|&x| self.check(x).is_ok())
            .collect()
    }

    /// Rotates both endpoints by `k` corners (anticlockwise for `k > 0`).
    pub fn rotate(&self, x: Arc, k: i64) -> Arc {
        let nn = self.polygon as i64;
        let r = |p: usize| (p as i64 + k).rem_euclid(nn) as usize;
        Arc::sorted(r(x.a), r(x.b))
    }

    pub fn sms_verdict(&self, c: &SmsCandidate) -> SmsVerdict {
        let arcs = c.arcs();
        if arcs.len() != self.n {
            return SmsVerdict::WrongSize {
                expected: self.n,
                found: arcs.len(),
            };
        }
        for (i, &x) in arcs.iter().enumerate() {
            for &y in &arcs[i + 1..] {
                if crosses(x, y) {
                    return SmsVerdict::Crossing(x, y);
                }
            }
        }
        for (i, &x) in arcs.iter().enumerate() {
            for &y in &arcs[i + 1..] {
                if shares_endpoint(x, y) {
                    return SmsVerdict::SharedEndpoint(x, y);
                }
            }
        }
        SmsVerdict::Accepted
    }

    /// All simple-minded systems, by extending compatible partial sets.
    pub fn enumerate_sms(&self) -> Vec<SmsCandidate> {
        fn go(
            arcs: &[Arc],
            from: usize,
            cur: &mut Vec<Arc>,
            n: usize,
            out: &mut Vec<SmsCandidate>,
        ) {
            if cur.len() == n {
                out.push(SmsCandidate { arcs: cur.clone() });
                return;
            }
            for (i, &x) in arcs.iter().enumerate().skip(from) {
                if cur
                    .iter()
                    .all(|&y| !crosses(x, y) && !shares_endpoint(x, y))
                {
                    cur.push(x);
                    go(arcs, i + 1, cur, n, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(
            &self.admissible_arcs(),
            0,
            &mut Vec::new(),
            self.n,
            &mut out,
        );
        out
    }
}

/// A diagonal `(a, b)` of the N-gon with `a < b`; serialized as `[a, b]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Arc {
    pub a: usize,
    pub b: usize,
}

impl Arc {
    pub const fn new(a: usize, b: usize) -> Self {
        Self { a, b }
    }

    pub fn sorted(p: usize, q: usize) -> Self {
        Self {
            a: p.min(q),
            b: p.max(q),
        }
    }
}

impl From<[usize; 2]> for Arc {
    fn from([a, b]: [usize; 2]) -> Self {
        Self { a, b }
    }
}

impl From<Arc> for [usize; 2] {
    fn from(x: Arc) -> Self {
        [x.a, x.b]
    }
}

impl From<(usize, usize)> for Arc {
    fn from((a, b): (usize, usize)) -> Self {
        Self { a, b }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Strict interleaving of endpoints.
pub fn crosses(x: Arc, y: Arc) -> bool {
    (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b)
}

pub fn shares_endpoint(x: Arc, y: Arc) -> bool {
    x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b
}

/// A finite direct sum of indecomposables, as a sorted multiset of arcs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<Arc>", into = "Vec<Arc>")]
pub struct CObject(Vec<Arc>);

impl CObject {
    pub fn new(mut arcs: Vec<Arc>) -> Self {
        arcs.sort_unstable();
        Self(arcs)
    }

    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn indec(x: Arc) -> Self {
        Self(vec![x])
    }

    pub fn summands(&self) -> &[Arc] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_indec(&self) -> Option<Arc> {
        match self.0.as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }
}

impl From<Vec<Arc>> for CObject {
    fn from(v: Vec<Arc>) -> Self {
        Self::new(v)
    }
}

impl From<CObject> for Vec<Arc> {
    fn from(c: CObject) -> Self {
        c.0
    }
}

impl FromIterator<Arc> for CObject {
    fn from_iter<T: IntoIterator<Item = Arc>>(iter: T) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl fmt::Display for CObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊕ ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// A set of validated arcs proposed as a simple-minded system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SmsCandidate {
    arcs: Vec<Arc>,
}

impl SmsCandidate {
    /// Validates every arc; duplicates collapse (it is a set).
    pub fn new(params: &CatParams, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let set: BTreeSet<Arc> = arcs.into_iter().collect();
        for &x in &set {
            params.check(x)?;
        }
        Ok(Self {
            arcs: set.into_iter().collect(),
        })
    }

    /// Sorted arcs.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }
}

/// Outcome of the simple-minded-system criterion; a rejection names the first
/// violated clause (size, then crossing, then shared endpoint).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmsVerdict {
    Accepted,
    WrongSize { expected: usize, found: usize },
    Crossing(Arc, Arc),
    SharedEndpoint(Arc, Arc),
}

impl SmsVerdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, SmsVerdict::Accepted)
    }

    pub fn reason(&self) -> String {
        match self {
            SmsVerdict::Accepted => "accepted".into(),
            SmsVerdict::WrongSize { expected, found } => {
                format!("expected {expected} diagonals, found {found}")
            }
            SmsVerdict::Crossing(x, y) => format!("diagonals {x} and {y} cross"),
            SmsVerdict::SharedEndpoint(x, y) => format!("diagonals {x} and {y} share an endpoint"),
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            SmsVerdict::Accepted => "accepted",
            SmsVerdict::WrongSize { .. } => "wrong_size",
            SmsVerdict::Crossing(..) => "crossing",
            SmsVerdict::SharedEndpoint(..) => "shared_endpoint",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_examples() {
        assert_eq!(make_params(6, 5).unwrap().polygon_size(), 40);
        assert_eq!(make_params(2, 3).unwrap().polygon_size(), 10);
        assert!(make_params(1, 1).is_err());
        assert!(make_params(0, 3).is_err());
        assert!(make_params(3, 0).is_err());
    }

    #[test]
    fn admissible_examples() {
        let p = make_params(6, 5).unwrap();
        let arcs = p.admissible_arcs();
        assert_eq!(arcs.len(), 100);
        assert!(arcs.contains(&Arc::new(28, 34)));
        assert!(!arcs.contains(&Arc::new(1, 8)));
        assert_eq!(make_params(2, 3).unwrap().admissible_arcs().len(), 15);
        assert!(matches!(p.arc(1, 8), Err(Error::InvalidArc { .. })));
        assert!(p.arc(34, 28).is_err());
        assert!(p.arc(28, 41).is_err());
    }

    #[test]
    fn arc_counts_follow_the_formula() {
        for w in 2..=5 {
            for n in 1..=6 {
                let p = make_params(w, n).unwrap();
                assert_eq!(p.admissible_arcs().len(), p.arc_count(), "w={w} n={n}");
            }
        }
    }

    #[test]
    fn crossing_examples() {
        let (x, y) = (Arc::new(0, 13), Arc::new(1, 7));
        assert!(!crosses(x, y) && !shares_endpoint(x, y));
        assert!(shares_endpoint(Arc::new(1, 7), Arc::new(7, 13)));
        assert!(!crosses(Arc::new(1, 14), Arc::new(7, 13)));
        assert!(crosses(Arc::new(0, 13), Arc::new(7, 20)));
    }

    #[test]
    fn sms_examples() {
        let p = make_params(6, 5).unwrap();
        let mk =
            |v: &[(usize, usize)]| SmsCandidate::new(&p, v.iter().map(|&x| Arc::from(x))).unwrap();
        let sa = mk(&[(28, 34), (14, 20), (21, 27), (1, 7), (0, 13)]);
        let sb = mk(&[(23, 29), (7, 13), (22, 35), (1, 14), (15, 21)]);
        assert!(p.sms_verdict(&sa).is_accepted());
        assert!(p.sms_verdict(&sb).is_accepted());
        let bad = mk(&[(1, 7), (7, 13), (14, 20), (21, 27), (28, 34)]);
        assert_eq!(
            p.sms_verdict(&bad),
            SmsVerdict::SharedEndpoint(Arc::new(1, 7), Arc::new(7, 13))
        );
        let cross = mk(&[(0, 13), (7, 20), (14, 20), (21, 27), (28, 34)]);
        assert_eq!(
            p.sms_verdict(&cross),
            SmsVerdict::Crossing(Arc::new(0, 13), Arc::new(7, 20))
        );
        let short = mk(&[(1, 7)]);
        assert_eq!(p.sms_verdict(&short).code(), "wrong_size");
    }

    #[test]
    fn arc_json_is_a_pair() {
        let x = Arc::new(7, 27);
        assert_eq!(serde_json::to_string(&x).unwrap(), "[7,27]");
        let o = CObject::new(vec![Arc::new(7, 27), Arc::new(1, 7)]);
        assert_eq!(serde_json::to_string(&o).unwrap(), "[[1,7],[7,27]]");
        let p: CatParams = serde_json::from_str(r#"{"w":6,"n":5}"#).unwrap();
        assert_eq!(p.polygon_size(), 40);
        assert!(serde_json::from_str::<CatParams>(r#"{"w":1,"n":5}"#).is_err());
    }
}
