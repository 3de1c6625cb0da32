//! Symmetric and special parts of a regular subalgebra and the semidirect
//! splitting `s = s_sp ⋊ s_sy`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::affine::periodic::AffineRoot;
use crate::linalg::{kernel, rank, Echelon, Matrix};

use super::chevalley::ChevalleyBasis;
use super::element::{Key, LoopElement};
use super::generate::{generate, slice_from_spans, RootSupport, SubalgebraSlice, BAND_CAVEAT};
use super::verify::{closure_witness, BracketWitness};
use super::LoopError;

#[derive(Debug, Clone, Serialize)]
pub struct Hypothesis {
    /// The form pairs `s_a` and `s_-a` non-degenerately for every symmetric `a`.
    pub nondegenerate: bool,
    pub degenerate_at: Vec<AffineRoot>,
    /// The Chevalley involution maps `s_a` into `s_-a` for every symmetric `a`.
    pub involution_ok: bool,
    pub involution_fails_at: Vec<AffineRoot>,
}

impl Hypothesis {
    pub fn holds(&self) -> bool {
        self.nondegenerate && self.involution_ok
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComplementChoice {
    /// `h_sp` is the orthogonal complement of `h_sy` inside `h_s`.
    Orthogonal,
    /// The form is degenerate on `h_sy`; some complement was taken.
    Arbitrary,
}

#[derive(Debug, Clone, Serialize)]
pub struct SplitReport {
    pub symmetric: RootSupport,
    pub special: RootSupport,
    pub hypothesis: Hypothesis,
    pub complement: ComplementChoice,
    pub dim_s: usize,
    pub dim_sy: usize,
    pub dim_sp: usize,
    /// `s_sy` has no weights outside the symmetric roots and `0`.
    pub sy_is_graded_sum: bool,
    pub sp_closed: bool,
    pub sp_ideal: bool,
    pub witness: Option<BracketWitness>,
    /// `s_sp` is an ideal, `s_sp ∩ s_sy = 0` and the dimensions add up.
    pub semidirect: bool,
    pub caveat: &'static str,
}

fn pairing_matrix(cb: &ChevalleyBasis, xs: &[LoopElement], ys: &[LoopElement]) -> Matrix {
    xs.iter().map(|x| ys.iter().map(|y| cb.form(x, y)).collect()).collect()
}

fn hypothesis(cb: &ChevalleyBasis, s: &SubalgebraSlice, sym: &RootSupport) -> Hypothesis {
    let mut degenerate_at = Vec::new();
    let mut involution_fails_at = Vec::new();
    for a in sym.all() {
        let (xs, ys) = (s.basis_of(&a), s.basis_of(&a.neg()));
        if xs.len() != ys.len() || rank(&pairing_matrix(cb, &xs, &ys)) != xs.len() {
            degenerate_at.push(a.clone());
        }
        if xs.iter().any(|x| !s.contains(&cb.involution(x))) {
            involution_fails_at.push(a);
        }
    }
    Hypothesis {
        nondegenerate: degenerate_at.is_empty(),
        degenerate_at,
        involution_ok: involution_fails_at.is_empty(),
        involution_fails_at,
    }
}

/// Complement of `sub` inside `whole`, orthogonal under the invariant form when possible.
fn cartan_complement(cb: &ChevalleyBasis, whole: &Echelon<Key>, sub: &Echelon<Key>) -> (Echelon<Key>, ComplementChoice) {
    let wb: Vec<LoopElement> = whole.basis().map(|v| LoopElement(v.clone())).collect();
    let sb: Vec<LoopElement> = sub.basis().map(|v| LoopElement(v.clone())).collect();
    if !wb.is_empty() {
        let m: Matrix = sb.iter().map(|u| wb.iter().map(|w| cb.form(w, u)).collect()).collect();
        let coeffs = if m.is_empty() { (0..wb.len()).map(|i| unit(wb.len(), i)).collect() } else { kernel(&m, wb.len()) };
        let mut perp = Echelon::new();
        for c in coeffs {
            let mut v = LoopElement::zero();
            for (ci, w) in c.iter().zip(&wb) {
                v.axpy(ci, w);
            }
            perp.insert(v.0);
        }
        if perp.dim() + sub.dim() == whole.dim() && perp.sum(sub).dim() == whole.dim() {
            return (perp, ComplementChoice::Orthogonal);
        }
    }
    (whole.complement_of(sub), ComplementChoice::Arbitrary)
}

fn unit(n: usize, i: usize) -> Vec<crate::linalg::Q> {
    (0..n).map(|j| crate::linalg::q((i == j) as i64)).collect()
}

pub fn split_sym_special(cb: &ChevalleyBasis, s: &SubalgebraSlice) -> Result<SplitReport, LoopError> {
    let band = s.band();
    let sup = s.root_support();
    let symmetric = sup.symmetric_part();
    let special = RootSupport {
        rank: s.rank(),
        real: sup.real.difference(&symmetric.real).cloned().collect(),
        imaginary: sup.imaginary.difference(&symmetric.imaginary).copied().collect(),
    };
    let hyp = hypothesis(cb, s, &symmetric);

    let sy_gens: Vec<LoopElement> = symmetric.all().flat_map(|a| s.basis_of(&a)).collect();
    let s_sy = generate(cb, &sy_gens, band)?;
    let zero_w = s.zero_weight();
    let sy_is_graded_sum = s_sy.spans().keys().all(|w| *w == zero_w || symmetric.contains(w));

    let h_s = s.span(&zero_w).cloned().unwrap_or_default();
    let h_sy = s_sy.span(&zero_w).cloned().unwrap_or_default();
    let (h_sp, complement) = cartan_complement(cb, &h_s, &h_sy);

    let mut sp_spans: BTreeMap<AffineRoot, Echelon<Key>> = BTreeMap::new();
    for w in special.all() {
        if let Some(e) = s.span(&w) {
            sp_spans.insert(w, e.clone());
        }
    }
    if !h_sp.is_empty() {
        sp_spans.insert(zero_w.clone(), h_sp);
    }
    let s_sp = slice_from_spans(s.rank(), band, sp_spans);

    let sp_basis = s_sp.basis();
    let (closed_w, _) = closure_witness(cb, &sp_basis, &sp_basis, &s_sp);
    let (ideal_w, _) = closure_witness(cb, &s.basis(), &sp_basis, &s_sp);
    let meet_zero = {
        let mut e = Echelon::new();
        s_sy.basis().into_iter().chain(sp_basis.iter().cloned()).all(|v| e.insert(v.0))
    };
    let dims_add = s_sp.dim() + s_sy.dim() == s.dim();
    let sp_ideal = ideal_w.is_none();
    Ok(SplitReport {
        symmetric,
        special,
        hypothesis: hyp,
        complement,
        dim_s: s.dim(),
        dim_sy: s_sy.dim(),
        dim_sp: s_sp.dim(),
        sy_is_graded_sum,
        sp_closed: closed_w.is_none(),
        sp_ideal,
        witness: closed_w.or(ideal_w),
        semidirect: sp_ideal && meet_zero && dims_add,
        caveat: BAND_CAVEAT,
    })
}
