//! Elements of `g = g0 ⊗ C[t, t^-1] + Cc + Cd` as sparse rational combinations
//! of basis keys, with the bracket, the invariant form and the Chevalley
//! involution.

use std::fmt;

use num_traits::{One, Zero};

use crate::affine::periodic::AffineRoot;
use crate::linalg::{format_q, sparse_axpy, SparseVec, Q};
use crate::rootslice::RootVec;

use super::chevalley::ChevalleyBasis;

/// Basis of the loop algebra: `x_a ⊗ t^r`, `h_i ⊗ t^r` (with `h_i` the simple
/// coroots), `c` and `d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Key {
    X(RootVec, i64),
    H(usize, i64),
    C,
    D,
}

impl Key {
    pub fn level(&self) -> i64 {
        match self {
            Key::X(_, r) | Key::H(_, r) => *r,
            Key::C | Key::D => 0,
        }
    }

    /// Weight under `h + Cd`; the finite part is zero for `H`, `C` and `D`.
    pub fn weight(&self, rank: usize) -> AffineRoot {
        match self {
            Key::X(a, r) => AffineRoot::new(a.clone(), *r),
            _ => AffineRoot::new(RootVec::zero(rank), self.level()),
        }
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Key::X(a, r) => write!(f, "x{a}t^{r}"),
            Key::H(i, r) => write!(f, "h{}t^{r}", i + 1),
            Key::C => write!(f, "c"),
            Key::D => write!(f, "d"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LoopElement(pub SparseVec<Key>);

impl LoopElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: Key) -> Self {
        Self::term(k, Q::one())
    }

    pub fn term(k: Key, c: Q) -> Self {
        let mut m = SparseVec::new();
        if !c.is_zero() {
            m.insert(k, c);
        }
        LoopElement(m)
    }

    pub fn x(a: &RootVec, r: i64) -> Self {
        Self::basis(Key::X(a.clone(), r))
    }

    pub fn h(i: usize, r: i64) -> Self {
        Self::basis(Key::H(i, r))
    }

    /// `h ⊗ t^r` for `h` given in simple coroot coordinates.
    pub fn cartan(h: &[Q], r: i64) -> Self {
        LoopElement(h.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (Key::H(i, r), c.clone())).collect())
    }

    pub fn c() -> Self {
        Self::basis(Key::C)
    }

    pub fn d() -> Self {
        Self::basis(Key::D)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &Q)> {
        self.0.iter()
    }

    pub fn coeff(&self, k: &Key) -> Q {
        self.0.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn axpy(&mut self, a: &Q, x: &LoopElement) {
        sparse_axpy(&mut self.0, a, &x.0);
    }

    pub fn add(&self, other: &LoopElement) -> LoopElement {
        let mut s = self.clone();
        s.axpy(&Q::one(), other);
        s
    }

    pub fn sub(&self, other: &LoopElement) -> LoopElement {
        let mut s = self.clone();
        s.axpy(&-Q::one(), other);
        s
    }

    pub fn scale(&self, a: &Q) -> LoopElement {
        let mut s = LoopElement::zero();
        s.axpy(a, self);
        s
    }

    /// Largest `|r|` over the terms.
    pub fn degree(&self) -> i64 {
        self.0.keys().map(|k| k.level().abs()).max().unwrap_or(0)
    }

    /// The common weight of all terms, if there is one.
    pub fn weight(&self, rank: usize) -> Option<AffineRoot> {
        let mut it = self.0.keys().map(|k| k.weight(rank));
        let w = it.next()?;
        it.all(|v| v == w).then_some(w)
    }
}

impl fmt::Display for LoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "({})*{k}", format_q(c))?;
            }
        }
        Ok(())
    }
}

impl ChevalleyBasis {
    /// `[a, b]` for basis keys.
    ///
    /// `[a t^m, b t^n] = [a, b] t^(m+n) + m delta_{m,-n} (a, b) c` and
    /// `[d, a t^m] = m a t^m`.
    pub fn bracket_keys(&self, u: &Key, v: &Key) -> LoopElement {
        use Key::*;
        match (u, v) {
            (C, _) | (_, C) | (D, D) => LoopElement::zero(),
            (D, k) => LoopElement::term(k.clone(), Q::from_integer(k.level().into())),
            (k, D) => LoopElement::term(k.clone(), -Q::from_integer(k.level().into())),
            (H(i, m), H(j, l)) => {
                if m + l == 0 && *m != 0 {
                    LoopElement::term(C, self.coroot_form(*i, *j) * Q::from_integer((*m).into()))
                } else {
                    LoopElement::zero()
                }
            }
            (H(i, m), X(b, l)) => {
                let p = self.finite().cd().simple_pairing(b.coeffs(), *i);
                LoopElement::term(X(b.clone(), m + l), Q::from_integer(p.into()))
            }
            (X(_, _), H(_, _)) => self.bracket_keys(v, u).scale(&-Q::one()),
            (X(a, m), X(b, l)) => {
                let s = a + b;
                if s.is_zero() {
                    let mut out = LoopElement::cartan(self.coroot(a), m + l);
                    if m + l == 0 && *m != 0 {
                        out.axpy(&(self.root_pairing(a) * Q::from_integer((*m).into())), &LoopElement::c());
                    }
                    out
                } else {
                    let c = self.n(a, b);
                    if c == 0 {
                        debug_assert!(!self.finite().is_root(&s));
                        LoopElement::zero()
                    } else {
                        LoopElement::term(X(s, m + l), Q::from_integer(c.into()))
                    }
                }
            }
        }
    }

    pub fn bracket(&self, x: &LoopElement, y: &LoopElement) -> LoopElement {
        let mut out = LoopElement::zero();
        for (u, a) in x.terms() {
            for (v, b) in y.terms() {
                let z = self.bracket_keys(u, v);
                if !z.is_zero() {
                    out.axpy(&(a * b), &z);
                }
            }
        }
        out
    }

    fn form_keys(&self, u: &Key, v: &Key) -> Q {
        use Key::*;
        match (u, v) {
            (C, D) | (D, C) => Q::one(),
            (H(i, m), H(j, l)) if m + l == 0 => self.coroot_form(*i, *j),
            (X(a, m), X(b, l)) if m + l == 0 && (a + b).is_zero() => self.root_pairing(a),
            _ => Q::zero(),
        }
    }

    /// The normalized invariant form.
    pub fn form(&self, x: &LoopElement, y: &LoopElement) -> Q {
        let mut s = Q::zero();
        for (u, a) in x.terms() {
            for (v, b) in y.terms() {
                let f = self.form_keys(u, v);
                if !f.is_zero() {
                    s += a * b * f;
                }
            }
        }
        s
    }

    /// Chevalley involution: `x_a t^m -> -x_-a t^-m`, `h t^m -> -h t^-m`,
    /// `c -> -c`, `d -> -d`.
    pub fn involution(&self, x: &LoopElement) -> LoopElement {
        LoopElement(
            x.terms()
                .map(|(k, c)| {
                    let k2 = match k {
                        Key::X(a, m) => Key::X(-a, -m),
                        Key::H(i, m) => Key::H(*i, -m),
                        other => other.clone(),
                    };
                    (k2, -c.clone())
                })
                .collect(),
        )
    }

    /// Every basis key with `|level| <= band`, plus `c` and `d`.
    pub fn basis_keys(&self, band: i64) -> Vec<Key> {
        let n = self.rank();
        let mut keys = Vec::new();
        for r in -band..=band {
            keys.extend(self.finite().roots().iter().map(|a| Key::X(a.clone(), r)));
            keys.extend((0..n).map(|i| Key::H(i, r)));
        }
        keys.push(Key::C);
        keys.push(Key::D);
        keys
    }
}
