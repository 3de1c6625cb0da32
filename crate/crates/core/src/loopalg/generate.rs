//! Subalgebras generated by homogeneous elements, truncated to a band of
//! `t`-degrees.
//!
//! The closure is saturated inside the band: brackets of in-band elements that
//! land in the band are in the span. Elements reachable only through
//! intermediates of degree outside the band are not chased.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::affine::periodic::AffineRoot;
use crate::linalg::Echelon;

use super::chevalley::ChevalleyBasis;
use super::element::{Key, LoopElement};
use super::LoopError;

pub const DEFAULT_SPAN_CAP: usize = 50_000;

pub const BAND_CAVEAT: &str = "closure saturated within |degree| <= band; out-of-band intermediates are not chased";

#[derive(Debug, Clone)]
pub struct SubalgebraSlice {
    rank: usize,
    band: i64,
    gens: Vec<LoopElement>,
    spans: BTreeMap<AffineRoot, Echelon<Key>>,
    saturated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSupport {
    #[serde(skip)]
    pub rank: usize,
    pub real: BTreeSet<AffineRoot>,
    pub imaginary: BTreeSet<i64>,
}

impl RootSupport {
    pub fn contains(&self, r: &AffineRoot) -> bool {
        if r.fin.is_zero() {
            self.imaginary.contains(&r.level)
        } else {
            self.real.contains(r)
        }
    }

    /// Roots whose negative is also present.
    pub fn symmetric_part(&self) -> RootSupport {
        RootSupport {
            rank: self.rank,
            real: self.real.iter().filter(|r| self.real.contains(&r.neg())).cloned().collect(),
            imaginary: self.imaginary.iter().filter(|x| self.imaginary.contains(&-**x)).copied().collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric_part() == *self
    }

    pub fn all(&self) -> impl Iterator<Item = AffineRoot> + '_ {
        let n = self.rank;
        self.real.iter().cloned().chain(self.imaginary.iter().map(move |&x| AffineRoot::new(crate::rootslice::RootVec::zero(n), x)))
    }
}

/// Checks that `e` is nonzero and homogeneous and returns its weight.
pub fn homogeneous_weight(cb: &ChevalleyBasis, e: &LoopElement) -> Result<AffineRoot, LoopError> {
    for k in e.0.keys() {
        let ok = match k {
            Key::X(a, _) => a.rank() == cb.rank() && cb.finite().is_root(a),
            Key::H(i, _) => *i < cb.rank(),
            _ => true,
        };
        if !ok {
            return Err(LoopError::BadKey(k.to_string()));
        }
    }
    if e.is_zero() {
        return Err(LoopError::ZeroGenerator);
    }
    e.weight(cb.rank()).ok_or_else(|| LoopError::NotHomogeneous(e.to_string()))
}

pub fn generate(cb: &ChevalleyBasis, gens: &[LoopElement], band: i64) -> Result<SubalgebraSlice, LoopError> {
    generate_with_cap(cb, gens, band, DEFAULT_SPAN_CAP)
}

/// Like [`generate`]; fails with `ResourceCap` once the slice exceeds `cap` dimensions.
pub fn generate_with_cap(cb: &ChevalleyBasis, gens: &[LoopElement], band: i64, cap: usize) -> Result<SubalgebraSlice, LoopError> {
    let n = cb.rank();
    for g in gens {
        homogeneous_weight(cb, g)?;
        if g.degree() > band {
            return Err(LoopError::BandTooSmall { band, degree: g.degree() });
        }
    }
    let mut st = Closure { n, band, cap, spans: BTreeMap::new(), accepted: Vec::new(), queue: VecDeque::new() };
    for g in gens {
        st.add(g.clone())?;
    }
    while let Some(i) = st.queue.pop_front() {
        let upto = st.accepted.len();
        for j in 0..upto {
            if i == j {
                continue;
            }
            let (wi, wj) = (&st.accepted[i].0, &st.accepted[j].0);
            if (wi.level + wj.level).abs() > band {
                continue;
            }
            let s = &wi.fin + &wj.fin;
            if !s.is_zero() && !cb.finite().is_root(&s) {
                continue;
            }
            let z = cb.bracket(&st.accepted[i].1, &st.accepted[j].1);
            if !z.is_zero() {
                st.add(z)?;
            }
        }
    }
    let mut spans = st.spans;
    spans.retain(|_, e| !e.is_empty());
    Ok(SubalgebraSlice { rank: n, band, gens: gens.to_vec(), spans, saturated: true })
}

struct Closure {
    n: usize,
    band: i64,
    cap: usize,
    spans: BTreeMap<AffineRoot, Echelon<Key>>,
    accepted: Vec<(AffineRoot, LoopElement)>,
    queue: VecDeque<usize>,
}

impl Closure {
    fn add(&mut self, e: LoopElement) -> Result<(), LoopError> {
        let w = e.weight(self.n).expect("brackets of homogeneous elements are homogeneous");
        if w.level.abs() > self.band {
            return Ok(());
        }
        if self.spans.entry(w.clone()).or_default().insert(e.0.clone()) {
            self.queue.push_back(self.accepted.len());
            self.accepted.push((w, e));
            if self.accepted.len() > self.cap {
                return Err(LoopError::ResourceCap(self.cap));
            }
        }
        Ok(())
    }
}

/// An explicitly given graded space, not closed under anything a priori.
pub fn slice_from_spans(rank: usize, band: i64, spans: BTreeMap<AffineRoot, Echelon<Key>>) -> SubalgebraSlice {
    SubalgebraSlice { rank, band, gens: Vec::new(), spans, saturated: false }
}

impl SubalgebraSlice {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn band(&self) -> i64 {
        self.band
    }

    pub fn generators(&self) -> &[LoopElement] {
        &self.gens
    }

    pub fn saturated(&self) -> bool {
        self.saturated
    }

    pub fn spans(&self) -> &BTreeMap<AffineRoot, Echelon<Key>> {
        &self.spans
    }

    pub fn span(&self, w: &AffineRoot) -> Option<&Echelon<Key>> {
        self.spans.get(w)
    }

    pub fn span_dim(&self, w: &AffineRoot) -> usize {
        self.spans.get(w).map_or(0, |e| e.dim())
    }

    pub fn dim(&self) -> usize {
        self.spans.values().map(|e| e.dim()).sum()
    }

    /// Basis elements of a weight space.
    pub fn basis_of(&self, w: &AffineRoot) -> Vec<LoopElement> {
        self.spans.get(w).map(|e| e.basis().map(|v| LoopElement(v.clone())).collect()).unwrap_or_default()
    }

    pub fn basis(&self) -> Vec<LoopElement> {
        self.spans.values().flat_map(|e| e.basis().map(|v| LoopElement(v.clone()))).collect()
    }

    /// Membership of an arbitrary element, weight space by weight space.
    pub fn contains(&self, e: &LoopElement) -> bool {
        let mut parts: BTreeMap<AffineRoot, LoopElement> = BTreeMap::new();
        for (k, c) in e.terms() {
            parts.entry(k.weight(self.rank)).or_default().0.insert(k.clone(), c.clone());
        }
        parts.iter().all(|(w, p)| self.spans.get(w).is_some_and(|s| s.contains(&p.0)))
    }

    pub fn zero_weight(&self) -> AffineRoot {
        AffineRoot::new(crate::rootslice::RootVec::zero(self.rank), 0)
    }

    /// `Delta(s)` within the band.
    pub fn root_support(&self) -> RootSupport {
        let mut real = BTreeSet::new();
        let mut imaginary = BTreeSet::new();
        for w in self.spans.keys() {
            if !w.fin.is_zero() {
                real.insert(w.clone());
            } else if w.level != 0 {
                imaginary.insert(w.level);
            }
        }
        RootSupport { rank: self.rank, real, imaginary }
    }

    /// Whether every span of `self` lies in the corresponding span of `other`.
    pub fn is_subslice_of(&self, other: &SubalgebraSlice) -> bool {
        self.spans.iter().all(|(w, e)| other.spans.get(w).is_some_and(|o| o.contains_space(e)))
    }

    /// The part of `self` with `|degree| <= band`.
    pub fn restrict(&self, band: i64) -> SubalgebraSlice {
        let spans = self.spans.iter().filter(|(w, _)| w.level.abs() <= band).map(|(w, e)| (w.clone(), e.clone())).collect();
        SubalgebraSlice { rank: self.rank, band, gens: self.gens.clone(), spans, saturated: self.saturated }
    }
}
