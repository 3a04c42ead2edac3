use std::collections::HashMap;

use super::arc::{Arc, CObject, CatParams, SmsCandidate, SmsVerdict};
use crate::derived::{sigma, DbIndec, LinearA};
use crate::error::{Error, Result};

/// A dihedral relabelling of the polygon corners applied after the standard
/// cover-map labelling: `p -> (reflect ? -p : p) + rotate (mod N)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling {
    pub reflect: bool,
    pub rotate: usize,
}

impl Labeling {
    pub const IDENTITY: Labeling = Labeling {
        reflect: false,
        rotate: 0,
    };

    /// All `2N` dihedral relabellings.
    pub fn all(params: &CatParams) -> Vec<Labeling> {
        let nn = params.polygon_size();
        [false, true]
            .into_iter()
            .flat_map(|reflect| (0..nn).map(move |rotate| Labeling { reflect, rotate }))
            .collect()
    }

    fn apply(&self, p: i64, nn: i64) -> usize {
        let p = if self.reflect { -p } else { p };
        (p + self.rotate as i64).rem_euclid(nn) as usize
    }
}

/// The orbit category `D^b(k A_n) / F`, `F = Σ^{w+1} τ`, together with its
/// bijection to admissible diagonals.
///
/// The bijection comes from a cover of the polygon: the shift-0 copy of
/// `[i,j]` goes to `((w+1)(n-j), (w+1)(n-i+1)-1)` and Σ acts on the cover by
/// `(a,b) -> (b+1, a+N+1)`; reducing mod N gives the diagonal.
#[derive(Clone, Debug)]
pub struct ArcModel {
    params: CatParams,
    derived: LinearA,
    labeling: Labeling,
    arcs: Vec<Arc>,
    index: HashMap<Arc, usize>,
    lifts: Vec<DbIndec>,
    sigma_rotation: i64,
    tau_rotation: i64,
    hom: Vec<u8>,
}

pub fn build_arc_model(params: CatParams) -> Result<ArcModel> {
    ArcModel::new(params)
}

impl ArcModel {
    pub fn new(params: CatParams) -> Result<Self> {
        Self::with_labeling(params, Labeling::IDENTITY)
    }

    pub fn with_labeling(params: CatParams, labeling: Labeling) -> Result<Self> {
        let derived = LinearA::new(params.n())?;
        let arcs = params.admissible_arcs();
        let index: HashMap<Arc, usize> = arcs.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut model = ArcModel {
            params,
            derived,
            labeling,
            arcs,
            index,
            lifts: Vec::new(),
            sigma_rotation: 0,
            tau_rotation: 0,
            hom: Vec::new(),
        };
        model.build_lifts()?;
        model.check_transport()?;
        model.build_hom_table();
        Ok(model)
    }

    /// Lift of each diagonal: the first indecomposable, by increasing shift and
    /// then interval, that lands on it.
    fn build_lifts(&mut self) -> Result<()> {
        let mut lifts: Vec<Option<DbIndec>> = vec![None; self.arcs.len()];
        let mut found = 0;
        // every orbit meets shifts 0..=w+1, since F raises the shift by w or w+1
        for m in 0..=(self.params.w() as i64 + 1) {
            for iv in self.derived.intervals() {
                let x = DbIndec {
                    shift: m,
                    interval: iv,
                };
                let arc = self.arc_of(x);
                let Some(&i) = self.index.get(&arc) else {
                    return Err(Error::ModelConvention(format!(
                        "{x} lands on non-admissible {arc}"
                    )));
                };
                if lifts[i].is_none() {
                    lifts[i] = Some(x);
                    found += 1;
                }
            }
        }
        if found != self.arcs.len() {
            return Err(Error::ModelConvention(format!(
                "{} of {} diagonals have no lift",
                self.arcs.len() - found,
                self.arcs.len()
            )));
        }
        self.lifts = lifts.into_iter().map(Option::unwrap).collect();
        Ok(())
    }

    /// Checks that the labelling is F-invariant, injective on orbits, and that
    /// Σ and τ act on diagonals as commuting rotations.
    fn check_transport(&mut self) -> Result<()> {
        let nn = self.params.polygon_size() as i64;
        let rot_of = |from: Arc, to: Arc| -> Vec<i64> {
            (0..nn)
                .filter(|&k| self.params.rotate(from, k) == to)
                .collect()
        };
        let mut sig_rot: Option<Vec<i64>> = None;
        let mut tau_rot: Option<Vec<i64>> = None;
        for (i, &x) in self.lifts.iter().enumerate() {
            let arc = self.arcs[i];
            for y in [self.f(x), self.f_inv(x), self.f(self.f(x))] {
                if self.arc_of(y) != arc {
                    return Err(Error::ModelConvention(format!(
                        "labelling is not F-invariant at {arc}"
                    )));
                }
            }
            // intersect the candidate rotation amounts over all diagonals
            let s = rot_of(arc, self.arc_of(sigma(x, 1)));
            let t = rot_of(arc, self.arc_of(self.derived.tau(x)));
            sig_rot = Some(match sig_rot {
                None => s,
                Some(prev) => prev.into_iter().filter(|k| s.contains(k)).collect(),
            });
            tau_rot = Some(match tau_rot {
                None => t,
                Some(prev) => prev.into_iter().filter(|k| t.contains(k)).collect(),
            });
        }
        let pick = |v: Option<Vec<i64>>, what: &str| -> Result<i64> {
            let v = v.unwrap_or_default();
            v.first()
                .copied()
                .map(|k| if k > nn / 2 { k - nn } else { k })
                .ok_or_else(|| {
                    Error::ModelConvention(format!(
                        "{what} does not act on diagonals as a rotation"
                    ))
                })
        };
        self.sigma_rotation = pick(sig_rot, "Σ")?;
        self.tau_rotation = pick(tau_rot, "τ")?;
        Ok(())
    }

    fn build_hom_table(&mut self) {
        let k = self.arcs.len();
        let mut hom = vec![0u8; k * k];
        for i in 0..k {
            for j in 0..k {
                hom[i * k + j] = self.hom_components(self.lifts[i], self.lifts[j]).len() as u8;
            }
        }
        self.hom = hom;
    }

    pub fn params(&self) -> &CatParams {
        &self.params
    }

    pub fn derived(&self) -> &LinearA {
        &self.derived
    }

    pub fn labeling(&self) -> Labeling {
        self.labeling
    }

    /// All admissible diagonals, sorted.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn index_of(&self, x: Arc) -> Option<usize> {
        self.index.get(&x).copied()
    }

    fn idx(&self, x: Arc) -> usize {
        match self.index.get(&x) {
            Some(&i) => i,
            None => panic!(
                "{x} is not an admissible diagonal of the {}-gon",
                self.params.polygon_size()
            ),
        }
    }

    /// Rotation (in corners) by which Σ acts on diagonals.
    pub fn sigma_rotation(&self) -> i64 {
        self.sigma_rotation
    }

    /// Rotation (in corners) by which τ acts on diagonals.
    pub fn tau_rotation(&self) -> i64 {
        self.tau_rotation
    }

    pub fn lift(&self, x: Arc) -> DbIndec {
        self.lifts[self.idx(x)]
    }

    pub fn f(&self, x: DbIndec) -> DbIndec {
        sigma(self.derived.tau(x), self.params.w() as i64 + 1)
    }

    pub fn f_inv(&self, x: DbIndec) -> DbIndec {
        self.derived
            .tau_inv(sigma(x, -(self.params.w() as i64 + 1)))
    }

    /// The diagonal labelling the orbit of `x`.
    pub fn arc_of(&self, x: DbIndec) -> Arc {
        let w1 = self.params.w() as i64 + 1;
        let n = self.params.n() as i64;
        let nn = self.params.polygon_size() as i64;
        let (i, j) = (x.interval.a as i64, x.interval.b as i64);
        let mut a = w1 * (n - j);
        let mut b = w1 * (n - i + 1) - 1;
        let (q, r) = (x.shift.div_euclid(2), x.shift.rem_euclid(2));
        a += q * (nn + 2);
        b += q * (nn + 2);
        if r == 1 {
            (a, b) = (b + 1, a + nn + 1);
        }
        Arc::sorted(self.labeling.apply(a, nn), self.labeling.apply(b, nn))
    }

    pub fn shift_arc(&self, x: Arc, k: i64) -> Arc {
        self.arc_of(sigma(self.lift(x), k))
    }

    pub fn tau_arc(&self, x: Arc) -> Arc {
        self.arc_of(self.derived.tau(self.lift(x)))
    }

    pub fn tau_inv_arc(&self, x: Arc) -> Arc {
        self.arc_of(self.derived.tau_inv(self.lift(x)))
    }

    pub fn shift_object(&self, x: &CObject, k: i64) -> CObject {
        x.summands().iter().map(|&a| self.shift_arc(a, k)).collect()
    }

    pub fn shift_set(&self, xs: &[Arc], k: i64) -> Vec<Arc> {
        let mut out: Vec<Arc> = xs.iter().map(|&a| self.shift_arc(a, k)).collect();
        out.sort_unstable();
        out
    }

    /// The members `F^j y` of the orbit of `y` with `Hom(x, F^j y) != 0`.
    ///
    /// The shift of `F^j y` is strictly increasing in `j`, and Hom in
    /// `D^b` needs a shift difference of 0 or 1, so the scan stops on both
    /// sides once the shift leaves `[shift(x), shift(x)+1]`.
    pub fn hom_components(&self, x: DbIndec, y: DbIndec) -> Vec<DbIndec> {
        let mut out = Vec::new();
        let mut up = y;
        while up.shift <= x.shift + 1 {
            if self.derived.hom(x, up) > 0 {
                out.push(up);
            }
            up = self.f(up);
        }
        let mut down = self.f_inv(y);
        while down.shift >= x.shift {
            if self.derived.hom(x, down) > 0 {
                out.push(down);
            }
            down = self.f_inv(down);
        }
        out.sort_unstable();
        out
    }

    /// `dim Hom(x, y)` between indecomposables.
    pub fn hom(&self, x: Arc, y: Arc) -> usize {
        self.hom[self.idx(x) * self.arcs.len() + self.idx(y)] as usize
    }

    pub fn hom_c(&self, x: &CObject, y: &CObject) -> usize {
        x.summands()
            .iter()
            .map(|&s| y.summands().iter().map(|&t| self.hom(s, t)).sum::<usize>())
            .sum()
    }

    /// `Hom(U, V) = 0` for arc sets.
    pub fn hom_vanishes(&self, u: &[Arc], v: &[Arc]) -> bool {
        u.iter().all(|&s| v.iter().all(|&t| self.hom(s, t) == 0))
    }

    pub fn sms_verdict(&self, c: &SmsCandidate) -> SmsVerdict {
        self.params.sms_verdict(c)
    }

    pub fn is_sms(&self, c: &SmsCandidate) -> bool {
        self.sms_verdict(c).is_accepted()
    }

    fn to_object(&self, d: &crate::derived::DbObject) -> CObject {
        d.summands().iter().map(|&x| self.arc_of(x)).collect()
    }

    /// Middle terms `y` of triangles `x -> y -> z -> Σx` with nonzero
    /// connecting map. Over F2 a one-component connecting space has a single
    /// nonzero element, so the list has at most one entry.
    pub fn middle_terms(&self, x: Arc, z: Arc) -> Result<Vec<CObject>> {
        let sx = sigma(self.lift(x), 1);
        let zl = self.lift(z);
        let comps = self.hom_components(zl, sx);
        match comps.as_slice() {
            [] => Err(Error::NoExtension),
            [target] => {
                let cone = self.derived.cone(zl, *target)?;
                Ok(vec![self.to_object(&cone.shifted(-1))])
            }
            _ => Err(Error::MultiComponent {
                components: comps.len(),
            }),
        }
    }

    /// Cone in C of the sum of basis maps `⊕ sources -> target` in `D^b`.
    pub(crate) fn cone_of_lifted_sum(
        &self,
        sources: &[DbIndec],
        target: DbIndec,
    ) -> Result<CObject> {
        let cone = match sources {
            [] => crate::derived::DbObject::new(vec![target]),
            [s] => self.derived.cone(*s, target)?,
            _ => crate::derived::complex::cone_of_sum(&self.derived, sources, target)?,
        };
        Ok(self.to_object(&cone))
    }

    /// Whether the composite of basis maps `x -> y -> z` in `D^b` is nonzero.
    pub(crate) fn composite_nonzero(&self, x: DbIndec, y: DbIndec, z: DbIndec) -> Result<bool> {
        crate::derived::complex::composite_nonzero(&self.derived, x, y, z)
    }
}
