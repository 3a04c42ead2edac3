use std::collections::HashMap;
use std::fmt;
use std::sync::Arc as Shared;

use super::ClassA;
use crate::error::{Error, Result};
use crate::orbit::{Arc, ArcModel, CObject, SmsCandidate};
use crate::repkit::{
    enumerate_subreps, hom_dim, interval_multiplicities, quotient, reject, trace, Quiver, Rep,
    SubRep, DEFAULT_SUBREP_BOUND,
};

/// Largest number of indecomposables a model may have (classes are `u64`
/// bitsets).
pub const MAX_INDECS: usize = 64;

/// One indecomposable: an interval (string) module of the Ext-quiver.
#[derive(Clone, Debug)]
pub struct Indec {
    /// Vertex sequence along the component path.
    pub support: Vec<usize>,
    pub rep: Rep,
    /// The diagonal it corresponds to, for models built from an SMS.
    pub arc: Option<Arc>,
}

/// A short exact sequence type `u ↣ y ↠ y/u` recorded by the indecomposable
/// types occurring in `u` and in `y/u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SesProfile {
    pub sub: ClassA,
    pub quotient: ClassA,
}

/// A finite-length abelian category presented as representations of a
/// type-A quiver, optionally with monomial zero relations (only the listed
/// intervals are objects).
///
/// For models generated by a simple-minded system the dictionary to
/// diagonals is verified on every Hom space at construction.
#[derive(Clone, Debug)]
pub struct AbelianModel {
    arc_model: Option<Shared<ArcModel>>,
    sms: Option<SmsCandidate>,
    simples: Vec<Arc>,
    quiver: Shared<Quiver>,
    indecs: Vec<Indec>,
    by_support: HashMap<Vec<usize>, usize>,
    by_arc: HashMap<Arc, usize>,
    hom: Vec<Vec<usize>>,
    subreps: Vec<Vec<SubRep>>,
    profiles: Vec<Vec<SesProfile>>,
    /// `traces[s][y]`: image of all maps `s -> y`
    traces: Vec<Vec<SubRep>>,
    /// `rejects[s][y]`: joint kernel of all maps `y -> s`
    rejects: Vec<Vec<SubRep>>,
}

impl AbelianModel {
    /// The module category of a type-A quiver without relations.
    pub fn from_quiver(q: Quiver) -> Result<Self> {
        let Some(intervals) = q.intervals() else {
            return Err(Error::UnsupportedQuiver(
                "only type-A quivers are modelled".into(),
            ));
        };
        let indecs = intervals.into_iter().map(|s| (s, None)).collect();
        Self::build(Shared::new(q), indecs, None, None, Vec::new())
    }

    /// `⟨S⟩` for a simple-minded system `S`.
    ///
    /// The Ext-quiver has an arrow `s -> s'` when `Hom(s, Σs') != 0`. Interval
    /// objects are realized by increasing length as middle terms of
    /// triangles; an interval whose connecting Hom space vanishes is absent
    /// (a zero relation along it).
    pub fn from_sms(arc_model: Shared<ArcModel>, sms: &SmsCandidate) -> Result<Self> {
        let verdict = arc_model.sms_verdict(sms);
        if !verdict.is_accepted() {
            return Err(Error::NotSms(verdict.reason()));
        }
        let s = sms.arcs();
        let k = s.len();
        let mut arrows = Vec::new();
        for i in 0..k {
            for j in 0..k {
                match arc_model.hom(s[i], arc_model.shift_arc(s[j], 1)) {
                    0 => {}
                    1 if i != j => arrows.push((i, j)),
                    h => {
                        return Err(Error::UnsupportedConfiguration(format!(
                            "Ext^1({}, {}) has dimension {h}",
                            s[i], s[j]
                        )))
                    }
                }
            }
        }
        let raw = Quiver::new(k, arrows.clone()).map_err(|e| {
            Error::UnsupportedConfiguration(format!("Ext-quiver is not acyclic: {e}"))
        })?;
        let Some(comps) = raw.path_components() else {
            return Err(Error::UnsupportedConfiguration(
                "Ext-quiver is not of type A".into(),
            ));
        };
        let order: Vec<usize> = comps.iter().flatten().copied().collect();
        let mut new_of = vec![0; k];
        for (new, &old) in order.iter().enumerate() {
            new_of[old] = new;
        }
        let simples: Vec<Arc> = order.iter().map(|&i| s[i]).collect();
        let mut qarrows: Vec<(usize, usize)> = arrows
            .iter()
            .map(|&(a, b)| (new_of[a], new_of[b]))
            .collect();
        qarrows.sort_unstable();
        let quiver = Shared::new(Quiver::new(k, qarrows)?);

        let mut indecs: Vec<(Vec<usize>, Option<Arc>)> = Vec::new();
        let mut start = 0;
        for comp in &comps {
            let len = comp.len();
            let mut real: HashMap<(usize, usize), Arc> = HashMap::new();
            for l in 1..=len {
                for i in start..=start + len - l {
                    let j = i + l - 1;
                    let arc = if l == 1 {
                        simples[i]
                    } else {
                        let (Some(&prev), Some(_)) = (real.get(&(i, j - 1)), real.get(&(i + 1, j)))
                        else {
                            continue;
                        };
                        let sj = simples[j];
                        // with j-1 -> j the simple at j is a subobject
                        let res = if quiver.arrow_between(j - 1, j).is_some() {
                            arc_model.middle_terms(sj, prev)
                        } else {
                            arc_model.middle_terms(prev, sj)
                        };
                        match res {
                            Ok(ys) => single_arc(&ys)?,
                            Err(Error::NoExtension) => continue,
                            Err(e) => return Err(e),
                        }
                    };
                    real.insert((i, j), arc);
                    indecs.push(((i..=j).collect(), Some(arc)));
                }
            }
            start += len;
        }
        indecs.sort_by_key(|(_, a)| *a);
        Self::build(quiver, indecs, Some(arc_model), Some(sms.clone()), simples)
    }

    fn build(
        quiver: Shared<Quiver>,
        indecs: Vec<(Vec<usize>, Option<Arc>)>,
        arc_model: Option<Shared<ArcModel>>,
        sms: Option<SmsCandidate>,
        simples: Vec<Arc>,
    ) -> Result<Self> {
        if indecs.len() > MAX_INDECS {
            return Err(Error::UnsupportedConfiguration(format!(
                "{} indecomposables exceed the supported {MAX_INDECS}",
                indecs.len()
            )));
        }
        let mut by_support = HashMap::new();
        let mut by_arc = HashMap::new();
        let mut list = Vec::with_capacity(indecs.len());
        for (i, (support, arc)) in indecs.into_iter().enumerate() {
            let mut key = support.clone();
            key.sort_unstable();
            by_support.insert(key, i);
            if let Some(a) = arc {
                if by_arc.insert(a, i).is_some() {
                    return Err(Error::Model(format!(
                        "{a} realized by two different intervals"
                    )));
                }
            }
            list.push(Indec {
                rep: Rep::thin(quiver.clone(), &support),
                support,
                arc,
            });
        }
        let k = list.len();
        let mut hom = vec![vec![0; k]; k];
        for i in 0..k {
            for j in 0..k {
                hom[i][j] = hom_dim(&list[i].rep, &list[j].rep)?;
                if let (Some(am), Some(x), Some(y)) = (&arc_model, list[i].arc, list[j].arc) {
                    let expect = am.hom(x, y);
                    if expect != hom[i][j] {
                        return Err(Error::Model(format!(
                            "realization disagrees on Hom({x}, {y}): representations give {}, the category gives {expect}",
                            hom[i][j]
                        )));
                    }
                }
            }
        }
        let mut model = AbelianModel {
            arc_model,
            sms,
            simples,
            quiver,
            indecs: list,
            by_support,
            by_arc,
            hom,
            subreps: Vec::new(),
            profiles: Vec::new(),
            traces: Vec::new(),
            rejects: Vec::new(),
        };
        for y in 0..k {
            let rep = model.indecs[y].rep.clone();
            let subs = enumerate_subreps(&rep, DEFAULT_SUBREP_BOUND)?;
            let mut profs = Vec::with_capacity(subs.len());
            for u in &subs {
                profs.push(SesProfile {
                    sub: model.types_of(&u.to_rep(&rep))?,
                    quotient: model.types_of(&quotient(&rep, u)?)?,
                });
            }
            model.subreps.push(subs);
            model.profiles.push(profs);
        }
        for s in 0..k {
            let src = std::slice::from_ref(&model.indecs[s].rep);
            let mut tr = Vec::with_capacity(k);
            let mut rj = Vec::with_capacity(k);
            for y in 0..k {
                tr.push(trace(src, &model.indecs[y].rep)?);
                rj.push(reject(src, &model.indecs[y].rep)?);
            }
            model.traces.push(tr);
            model.rejects.push(rj);
        }
        Ok(model)
    }

    pub fn arc_model(&self) -> Option<&Shared<ArcModel>> {
        self.arc_model.as_ref()
    }

    pub fn sms(&self) -> Option<&SmsCandidate> {
        self.sms.as_ref()
    }

    /// Simple objects in vertex order (empty for quiver-only models).
    pub fn simples(&self) -> &[Arc] {
        &self.simples
    }

    pub fn ext_quiver(&self) -> &Shared<Quiver> {
        &self.quiver
    }

    pub fn len(&self) -> usize {
        self.indecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indecs.is_empty()
    }

    pub fn indec(&self, i: usize) -> &Indec {
        &self.indecs[i]
    }

    pub fn rep(&self, i: usize) -> &Rep {
        &self.indecs[i].rep
    }

    pub fn hom(&self, i: usize, j: usize) -> usize {
        self.hom[i][j]
    }

    pub fn subreps(&self, y: usize) -> &[SubRep] {
        &self.subreps[y]
    }

    pub fn profiles(&self, y: usize) -> &[SesProfile] {
        &self.profiles[y]
    }

    pub(crate) fn trace_of(&self, s: usize, y: usize) -> &SubRep {
        &self.traces[s][y]
    }

    pub(crate) fn reject_of(&self, s: usize, y: usize) -> &SubRep {
        &self.rejects[s][y]
    }

    pub fn index_of_arc(&self, x: Arc) -> Option<usize> {
        self.by_arc.get(&x).copied()
    }

    /// Index of the interval with the given vertex set.
    pub fn index_of_support(&self, support: &[usize]) -> Option<usize> {
        let mut key = support.to_vec();
        key.sort_unstable();
        self.by_support.get(&key).copied()
    }

    pub fn label(&self, i: usize) -> String {
        match self.indecs[i].arc {
            Some(a) => a.to_string(),
            None => {
                let s = &self.indecs[i].support;
                if s.len() == 1 {
                    format!("[{}]", s[0] + 1)
                } else {
                    format!("[{}..{}]", s[0] + 1, s[s.len() - 1] + 1)
                }
            }
        }
    }

    /// Indecomposable types occurring in `rep`; errors if a summand is not an
    /// object of the model.
    pub fn types_of(&self, rep: &Rep) -> Result<ClassA> {
        let mut c = ClassA::empty();
        for support in interval_multiplicities(rep)?.into_keys() {
            match self.by_support.get(&support) {
                Some(&i) => c.insert(i),
                None => {
                    return Err(Error::NotInCategory(format!(
                        "summand on vertices {support:?} violates the relations"
                    )))
                }
            }
        }
        Ok(c)
    }

    /// Whether every summand of `rep` lies in `class`.
    pub fn class_contains(&self, class: ClassA, rep: &Rep) -> Result<bool> {
        Ok(self.types_of(rep)?.is_subset(class))
    }

    /// The representation of `x` if all its summands lie in the model.
    pub fn member(&self, x: &CObject) -> Option<Rep> {
        let parts: Option<Vec<Rep>> = x
            .summands()
            .iter()
            .map(|a| self.index_of_arc(*a).map(|i| self.indecs[i].rep.clone()))
            .collect();
        let parts = parts?;
        if parts.is_empty() {
            return Some(Rep::zero(self.quiver.clone()));
        }
        Rep::direct_sum(&parts).ok()
    }

    pub fn all(&self) -> ClassA {
        ClassA::full(self.len())
    }

    /// Indecomposables of the model among the given diagonals.
    pub fn class_of_arcs(&self, arcs: &[Arc]) -> ClassA {
        let mut c = ClassA::empty();
        for a in arcs {
            if let Some(i) = self.index_of_arc(*a) {
                c.insert(i);
            }
        }
        c
    }

    pub fn arcs_of(&self, c: ClassA) -> Vec<Arc> {
        let mut v: Vec<Arc> = c.iter().filter_map(|i| self.indecs[i].arc).collect();
        v.sort_unstable();
        v
    }

    pub fn arcs(&self) -> Vec<Arc> {
        self.arcs_of(self.all())
    }

    pub fn labels_of(&self, c: ClassA) -> Vec<String> {
        c.iter().map(|i| self.label(i)).collect()
    }

    pub fn reps_of(&self, c: ClassA) -> Vec<Rep> {
        c.iter().map(|i| self.indecs[i].rep.clone()).collect()
    }
}

impl fmt::Display for AbelianModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "abelian model: {} simples, {} indecomposables",
            self.quiver.vertex_count(),
            self.len()
        )
    }
}

fn single_arc(ys: &[CObject]) -> Result<Arc> {
    match ys {
        [y] => y
            .as_indec()
            .ok_or_else(|| Error::Model(format!("middle term {y} is decomposable"))),
        _ => Err(Error::Model(format!(
            "{} middle terms, expected one",
            ys.len()
        ))),
    }
}

impl AbelianModel {
    /// The diagonals of the summands of `rep`, with multiplicity.
    pub fn arc_multiset(&self, rep: &Rep) -> Result<Vec<Arc>> {
        let mut out = Vec::new();
        for (support, mult) in interval_multiplicities(rep)? {
            let i = self.by_support.get(&support).ok_or_else(|| {
                Error::NotInCategory(format!(
                    "summand on vertices {support:?} violates the relations"
                ))
            })?;
            let a = self.indecs[*i]
                .arc
                .ok_or_else(|| Error::Model("model carries no diagonal labels".into()))?;
            out.extend(std::iter::repeat_n(a, mult));
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Human-readable summand labels of `rep`, with multiplicity.
    pub fn label_multiset(&self, rep: &Rep) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for (support, mult) in interval_multiplicities(rep)? {
            let i = self.by_support.get(&support).ok_or_else(|| {
                Error::NotInCategory(format!(
                    "summand on vertices {support:?} violates the relations"
                ))
            })?;
            out.extend(std::iter::repeat_n(self.label(*i), mult));
        }
        out.sort();
        Ok(out)
    }
}
