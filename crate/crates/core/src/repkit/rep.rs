use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::gf2::BitMatrix;
use super::quiver::Quiver;
use crate::error::{Error, Result};

type Shared<T> = std::sync::Arc<T>;

/// Default cap on the total dimension accepted by [`enumerate_subreps`].
pub const DEFAULT_SUBREP_BOUND: usize = 12;

/// A finite-dimensional representation over F2. `maps[a]` has shape
/// `dims[target(a)] x dims[source(a)]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rep {
    quiver: Shared<Quiver>,
    dims: Vec<usize>,
    maps: Vec<BitMatrix>,
}

#[derive(Serialize, Deserialize)]
struct RepWire {
    quiver: Quiver,
    dims: Vec<usize>,
    maps: Vec<BitMatrix>,
}

impl Serialize for Rep {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RepWire {
            quiver: (*self.quiver).clone(),
            dims: self.dims.clone(),
            maps: self.maps.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rep {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = RepWire::deserialize(d)?;
        Rep::new(Shared::new(w.quiver), w.dims, w.maps).map_err(serde::de::Error::custom)
    }
}

impl Rep {
    pub fn new(quiver: Shared<Quiver>, dims: Vec<usize>, maps: Vec<BitMatrix>) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: quiver.vertex_count(),
                found: dims.len(),
            });
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::InvalidRep(format!(
                "{} maps for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (k, (&(s, t), m)) in quiver.arrows().iter().zip(&maps).enumerate() {
            if m.shape() != (dims[t], dims[s]) {
                return Err(Error::InvalidRep(format!(
                    "map on arrow {k} has shape {:?}, expected {:?}",
                    m.shape(),
                    (dims[t], dims[s])
                )));
            }
        }
        Ok(Self { quiver, dims, maps })
    }

    pub fn zero(quiver: Shared<Quiver>) -> Self {
        let dims = vec![0; quiver.vertex_count()];
        Self::thin_inner(quiver, dims)
    }

    fn thin_inner(quiver: Shared<Quiver>, dims: Vec<usize>) -> Self {
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| {
                let mut m = BitMatrix::zeros(dims[t], dims[s]);
                if dims[s] == 1 && dims[t] == 1 {
                    m.set(0, 0, true);
                }
                m
            })
            .collect();
        Self { quiver, dims, maps }
    }

    /// The thin representation with a one-dimensional space at each vertex of
    /// `support` and identity maps along arrows inside it. Indecomposable iff
    /// the support is connected.
    pub fn thin(quiver: Shared<Quiver>, support: &[usize]) -> Self {
        let mut dims = vec![0; quiver.vertex_count()];
        for &v in support {
            dims[v] = 1;
        }
        Self::thin_inner(quiver, dims)
    }

    pub fn simple(quiver: Shared<Quiver>, v: usize) -> Self {
        Self::thin(quiver, &[v])
    }

    pub fn direct_sum(parts: &[Rep]) -> Result<Rep> {
        let Some(first) = parts.first() else {
            return Err(Error::InvalidRep("empty direct sum needs a quiver".into()));
        };
        let q = first.quiver.clone();
        if parts.iter().any(|p| p.quiver != q) {
            return Err(Error::QuiverMismatch);
        }
        let nv = q.vertex_count();
        let dims: Vec<usize> = (0..nv)
            .map(|v| parts.iter().map(|p| p.dims[v]).sum())
            .collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let mut m = BitMatrix::zeros(dims[t], dims[s]);
                let (mut ro, mut co) = (0, 0);
                for p in parts {
                    let pm = &p.maps[a];
                    for r in 0..pm.rows() {
                        for c in 0..pm.cols() {
                            if pm.get(r, c) {
                                m.set(ro + r, co + c, true);
                            }
                        }
                    }
                    ro += p.dims[t];
                    co += p.dims[s];
                }
                m
            })
            .collect();
        Ok(Rep {
            quiver: q,
            dims,
            maps,
        })
    }

    pub fn quiver(&self) -> &Shared<Quiver> {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn map(&self, arrow: usize) -> &BitMatrix {
        &self.maps[arrow]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    fn same_quiver(&self, other: &Rep) -> Result<()> {
        if self.quiver == other.quiver {
            Ok(())
        } else {
            Err(Error::QuiverMismatch)
        }
    }
}

/// A morphism of representations, one matrix per vertex
/// (`target.dims[v] x source.dims[v]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub mats: Vec<BitMatrix>,
}

impl Morphism {
    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(BitMatrix::is_zero)
    }

    pub fn kernel(&self, source: &Rep) -> SubRep {
        SubRep {
            spaces: self
                .mats
                .iter()
                .map(|m| m.nullspace().column_space())
                .collect(),
        }
        .debug_checked(source)
    }

    pub fn image(&self, target: &Rep) -> SubRep {
        SubRep {
            spaces: self.mats.iter().map(BitMatrix::column_space).collect(),
        }
        .debug_checked(target)
    }

    pub fn is_intertwiner(&self, source: &Rep, target: &Rep) -> bool {
        source
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .all(|(a, &(s, t))| {
                self.mats[t].mul(&source.maps[a]) == target.maps[a].mul(&self.mats[s])
            })
    }
}

/// Basis of `Hom(m, n)`, obtained as the nullspace of the intertwiner system.
pub fn hom_basis(m: &Rep, n: &Rep) -> Result<Vec<Morphism>> {
    m.same_quiver(n)?;
    let q = &m.quiver;
    let nv = q.vertex_count();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;
    let eq_count: usize = q.arrows().iter().map(|&(s, t)| n.dims[t] * m.dims[s]).sum();
    let mut sys = BitMatrix::zeros(eq_count, unknowns);
    let mut row = 0;
    for (a, &(s, t)) in q.arrows().iter().enumerate() {
        let (ma, na) = (&m.maps[a], &n.maps[a]);
        for i in 0..n.dims[t] {
            for j in 0..m.dims[s] {
                // (phi_t * M_a)[i][j] + (N_a * phi_s)[i][j] = 0
                for k in 0..m.dims[t] {
                    if ma.get(k, j) {
                        let x = var(t, i, k);
                        sys.set(row, x, !sys.get(row, x));
                    }
                }
                for k in 0..n.dims[s] {
                    if na.get(i, k) {
                        let x = var(s, k, j);
                        sys.set(row, x, !sys.get(row, x));
                    }
                }
                row += 1;
            }
        }
    }
    let kernel = sys.nullspace();
    Ok((0..kernel.cols())
        .map(|col| Morphism {
            mats: (0..nv)
                .map(|v| {
                    BitMatrix::from_fn(n.dims[v], m.dims[v], |r, c| kernel.get(var(v, r, c), col))
                })
                .collect(),
        })
        .collect())
}

pub fn hom_dim(m: &Rep, n: &Rep) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

/// `sum_i d_i e_i - sum_{i -> j} d_i e_j`.
pub fn euler_form(q: &Quiver, d: &[usize], e: &[usize]) -> Result<i64> {
    for v in [d, e] {
        if v.len() != q.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: q.vertex_count(),
                found: v.len(),
            });
        }
    }
    let diag: i64 = d.iter().zip(e).map(|(&x, &y)| (x * y) as i64).sum();
    let off: i64 = q.arrows().iter().map(|&(s, t)| (d[s] * e[t]) as i64).sum();
    Ok(diag - off)
}

/// `dim Ext^1(m, n)` for a path algebra without relations.
pub fn ext1_dim(m: &Rep, n: &Rep) -> Result<usize> {
    let hom = hom_dim(m, n)? as i64;
    let ext = hom - euler_form(&m.quiver, &m.dims, &n.dims)?;
    usize::try_from(ext).map_err(|_| {
        Error::Inconsistency(format!(
            "negative Ext^1 dimension {ext}; Hom computation is wrong"
        ))
    })
}

/// A subrepresentation, stored as one canonical column basis per vertex.
/// The parent representation is passed explicitly to every operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SubRep {
    spaces: Vec<BitMatrix>,
}

impl SubRep {
    /// Validates arrow stability and canonicalizes the bases.
    pub fn new(parent: &Rep, spaces: Vec<BitMatrix>) -> Result<Self> {
        if spaces.len() != parent.dims.len() {
            return Err(Error::DimensionMismatch {
                expected: parent.dims.len(),
                found: spaces.len(),
            });
        }
        for (v, s) in spaces.iter().enumerate() {
            if s.rows() != parent.dims[v] {
                return Err(Error::InvalidRep(format!(
                    "subspace at vertex {v} has wrong ambient dimension"
                )));
            }
        }
        let sub = Self {
            spaces: spaces.iter().map(BitMatrix::column_space).collect(),
        };
        if !sub.is_arrow_stable(parent) {
            return Err(Error::NotArrowStable);
        }
        Ok(sub)
    }

    fn debug_checked(self, parent: &Rep) -> Self {
        debug_assert!(self.is_arrow_stable(parent));
        self
    }

    pub fn zero(parent: &Rep) -> Self {
        Self {
            spaces: parent
                .dims
                .iter()
                .map(|&d| BitMatrix::zeros(d, 0))
                .collect(),
        }
    }

    pub fn full(parent: &Rep) -> Self {
        Self {
            spaces: parent
                .dims
                .iter()
                .map(|&d| BitMatrix::identity(d))
                .collect(),
        }
    }

    pub fn spaces(&self) -> &[BitMatrix] {
        &self.spaces
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(BitMatrix::cols).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(BitMatrix::cols).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn is_full(&self, parent: &Rep) -> bool {
        self.dims() == parent.dims
    }

    fn is_arrow_stable(&self, parent: &Rep) -> bool {
        parent
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .all(|(a, &(s, t))| {
                let img = parent.maps[a].mul(&self.spaces[s]);
                self.spaces[t].hstack(&img).rank() == self.spaces[t].cols()
            })
    }

    pub fn contains(&self, other: &SubRep) -> bool {
        self.spaces
            .iter()
            .zip(&other.spaces)
            .all(|(u, w)| u.hstack(w).rank() == u.cols())
    }

    pub fn sum(&self, other: &SubRep) -> SubRep {
        SubRep {
            spaces: self
                .spaces
                .iter()
                .zip(&other.spaces)
                .map(|(u, w)| u.hstack(w).column_space())
                .collect(),
        }
    }

    pub fn intersect(&self, other: &SubRep) -> SubRep {
        SubRep {
            spaces: self
                .spaces
                .iter()
                .zip(&other.spaces)
                .map(|(u, w)| {
                    let k = u.hstack(w).nullspace();
                    let top: Vec<usize> = (0..u.cols()).collect();
                    u.mul(&k.select_rows(&top)).column_space()
                })
                .collect(),
        }
    }

    /// The subrepresentation as a representation in its own basis.
    pub fn to_rep(&self, parent: &Rep) -> Rep {
        let lead: Vec<Vec<usize>> = self.spaces.iter().map(BitMatrix::leading_rows).collect();
        let maps = parent
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let img = parent.maps[a].mul(&self.spaces[s]);
                img.select_rows(&lead[t])
            })
            .collect();
        Rep {
            quiver: parent.quiver.clone(),
            dims: self.dims(),
            maps,
        }
    }

    /// Re-expresses `inner` (a subrep of the same parent contained in `self`)
    /// in the basis of `self.to_rep(parent)`.
    pub fn restrict(&self, inner: &SubRep) -> Result<SubRep> {
        if !self.contains(inner) {
            return Err(Error::InvalidRep(
                "subrep is not contained in the ambient subrep".into(),
            ));
        }
        Ok(SubRep {
            spaces: self
                .spaces
                .iter()
                .zip(&inner.spaces)
                .map(|(amb, w)| w.select_rows(&amb.leading_rows()).column_space())
                .collect(),
        })
    }

    /// Inverse of [`SubRep::restrict`]: maps a subrep of `self.to_rep(..)`
    /// back into the parent's coordinates.
    pub fn extend(&self, inner: &SubRep) -> SubRep {
        SubRep {
            spaces: self
                .spaces
                .iter()
                .zip(&inner.spaces)
                .map(|(amb, w)| amb.mul(w).column_space())
                .collect(),
        }
    }

    /// Smallest subrep containing the given vectors (columns, per vertex).
    pub fn generated(parent: &Rep, gens: &[BitMatrix]) -> SubRep {
        let q = &parent.quiver;
        let order = q.topological_order().expect("acyclic");
        let mut spaces: Vec<Option<BitMatrix>> = vec![None; parent.dims.len()];
        for &v in &order {
            let mut acc = gens[v].clone();
            for (a, &(s, t)) in q.arrows().iter().enumerate() {
                if t == v {
                    let src = spaces[s].as_ref().expect("topological order");
                    acc = acc.hstack(&parent.maps[a].mul(src));
                }
            }
            spaces[v] = Some(acc.column_space());
        }
        SubRep {
            spaces: spaces.into_iter().map(Option::unwrap).collect(),
        }
    }
}

/// Cokernel of the inclusion `u -> m`, with the induced maps.
pub fn quotient(m: &Rep, u: &SubRep) -> Result<Rep> {
    if u.spaces.len() != m.dims.len() || !u.is_arrow_stable(m) {
        return Err(Error::NotArrowStable);
    }
    let nv = m.dims.len();
    let mut keep: Vec<Vec<usize>> = Vec::with_capacity(nv);
    let mut lead: Vec<Vec<usize>> = Vec::with_capacity(nv);
    for v in 0..nv {
        let l = u.spaces[v].leading_rows();
        keep.push((0..m.dims[v]).filter(|r| !l.contains(r)).collect());
        lead.push(l);
    }
    // x -> x - sum_i x[lead_i] u_i, then read off the kept coordinates
    let project = |v: usize, x: &[bool]| -> Vec<bool> {
        let mut y = x.to_vec();
        for (i, &l) in lead[v].iter().enumerate() {
            if x[l] {
                for (r, yr) in y.iter_mut().enumerate() {
                    if u.spaces[v].get(r, i) {
                        *yr = !*yr;
                    }
                }
            }
        }
        keep[v].iter().map(|&r| y[r]).collect()
    };
    let dims: Vec<usize> = keep.iter().map(Vec::len).collect();
    let maps = m
        .quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            let cols: Vec<Vec<bool>> = keep[s]
                .iter()
                .map(|&c| project(t, &m.maps[a].column(c)))
                .collect();
            BitMatrix::from_columns(dims[t], &cols)
        })
        .collect();
    Rep::new(m.quiver.clone(), dims, maps)
}

/// Sum of the images of all morphisms from objects of `s` into `x`.
pub fn trace(s: &[Rep], x: &Rep) -> Result<SubRep> {
    let mut acc = SubRep::zero(x);
    for src in s {
        for f in hom_basis(src, x)? {
            acc = acc.sum(&f.image(x));
        }
    }
    Ok(acc)
}

/// Intersection of the kernels of all morphisms from `x` to objects of `s`.
pub fn reject(s: &[Rep], x: &Rep) -> Result<SubRep> {
    let mut acc = SubRep::full(x);
    for tgt in s {
        for f in hom_basis(x, tgt)? {
            acc = acc.intersect(&f.kernel(x));
        }
    }
    Ok(acc)
}

/// Every subrepresentation of `m`, each exactly once. Refuses when the total
/// dimension exceeds `bound`.
pub fn enumerate_subreps(m: &Rep, bound: usize) -> Result<Vec<SubRep>> {
    if m.total_dim() > bound {
        return Err(Error::BoundExceeded {
            bound,
            found: m.total_dim(),
        });
    }
    let nv = m.dims.len();
    let zero = SubRep::zero(m);
    let mut seen: HashSet<SubRep> = HashSet::from([zero.clone()]);
    let mut out = vec![zero.clone()];
    let mut queue = vec![zero];
    while let Some(u) = queue.pop() {
        for v in 0..nv {
            let d = m.dims[v];
            let lead = u.spaces[v].leading_rows();
            // coset representatives: vectors vanishing on the leading rows
            let free: Vec<usize> = (0..d).filter(|r| !lead.contains(r)).collect();
            for mask in 1u64..(1u64 << free.len()) {
                let mut gens: Vec<BitMatrix> = u.spaces.clone();
                let mut col = BitMatrix::zeros(d, 1);
                for (i, &r) in free.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        col.set(r, 0, true);
                    }
                }
                gens[v] = gens[v].hstack(&col);
                let w = SubRep::generated(m, &gens);
                if seen.insert(w.clone()) {
                    out.push(w.clone());
                    queue.push(w);
                }
            }
        }
    }
    out.sort_by_key(|s| (s.total_dim(), s.dims()));
    Ok(out)
}

/// Interval catalogue of a type-A quiver with its Hom table, ordered so that
/// `Hom(I_i, I_j) != 0` implies `i <= j`.
#[derive(Debug)]
struct Catalogue {
    supports: Vec<Vec<usize>>,
    reps: Vec<Rep>,
    hom: Vec<Vec<usize>>,
}

fn catalogue(q: &Shared<Quiver>) -> Result<Shared<Catalogue>> {
    static CACHE: OnceLock<Mutex<HashMap<Quiver, Shared<Catalogue>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().expect("catalogue cache").get(q.as_ref()) {
        return Ok(c.clone());
    }
    let Some(intervals) = q.intervals() else {
        return Err(Error::UnsupportedQuiver(
            "decomposition is implemented for type-A quivers only".into(),
        ));
    };
    let reps: Vec<Rep> = intervals.iter().map(|s| Rep::thin(q.clone(), s)).collect();
    let k = reps.len();
    let mut hom = vec![vec![0; k]; k];
    for i in 0..k {
        for j in 0..k {
            hom[i][j] = hom_dim(&reps[i], &reps[j])?;
        }
    }
    // topological order of the relation "nonzero Hom"
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let next =
            (0..k).find(|&i| !placed[i] && (0..k).all(|j| j == i || placed[j] || hom[j][i] == 0));
        let Some(i) = next else {
            return Err(Error::Inconsistency(
                "interval Hom relation has a cycle".into(),
            ));
        };
        placed[i] = true;
        order.push(i);
    }
    let cat = Shared::new(Catalogue {
        supports: order
            .iter()
            .map(|&i| {
                let mut s = intervals[i].clone();
                s.sort_unstable();
                s
            })
            .collect(),
        reps: order.iter().map(|&i| reps[i].clone()).collect(),
        hom: order
            .iter()
            .map(|&i| order.iter().map(|&j| hom[i][j]).collect())
            .collect(),
    });
    cache
        .lock()
        .expect("catalogue cache")
        .insert((**q).clone(), cat.clone());
    Ok(cat)
}

/// Multiplicity of every interval summand, keyed by sorted vertex support.
pub fn interval_multiplicities(m: &Rep) -> Result<BTreeMap<Vec<usize>, usize>> {
    let cat = catalogue(&m.quiver)?;
    let k = cat.reps.len();
    let v: Vec<i64> = cat
        .reps
        .iter()
        .map(|r| hom_dim(r, m).map(|d| d as i64))
        .collect::<Result<_>>()?;
    let mut mult = vec![0i64; k];
    for i in (0..k).rev() {
        let rest: i64 = (i + 1..k).map(|j| mult[j] * cat.hom[i][j] as i64).sum();
        mult[i] = v[i] - rest;
        if mult[i] < 0 {
            return Err(Error::Inconsistency("negative summand multiplicity".into()));
        }
    }
    let mut out = BTreeMap::new();
    let mut dims = vec![0usize; m.dims.len()];
    for (support, &c) in cat.supports.iter().zip(&mult) {
        if c > 0 {
            for &x in support {
                dims[x] += c as usize;
            }
            out.insert(support.clone(), c as usize);
        }
    }
    if dims != m.dims {
        return Err(Error::Inconsistency(
            "summand dimensions do not add up".into(),
        ));
    }
    Ok(out)
}

/// Krull-Schmidt decomposition into interval (string) modules.
pub fn decompose(m: &Rep) -> Result<Vec<Rep>> {
    Ok(interval_multiplicities(m)?
        .into_iter()
        .flat_map(|(s, k)| std::iter::repeat_n(s, k))
        .map(|s| Rep::thin(m.quiver.clone(), &s))
        .collect())
}

pub fn is_isomorphic(m: &Rep, n: &Rep) -> Result<bool> {
    m.same_quiver(n)?;
    Ok(m.dims == n.dims && interval_multiplicities(m)? == interval_multiplicities(n)?)
}
