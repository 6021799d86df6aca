//! Ordinal terms: `0`, `Ω`, `Γ_k`, sums, `φab` and `ψa`.
//!
//! A [`Term`] is a plain syntax tree. Whether it is in normal form is a
//! separate question answered by [`crate::validate`]; every operation in
//! this crate that promises ordinal semantics states "validated terms" as
//! its precondition and is a total, garbage-in-garbage-out function on raw
//! trees.

use serde::{Deserialize, Serialize};

/// A formal ordinal term.
///
/// `Term` deliberately does not implement `Ord`: the ordinal order `≺` is
/// [`crate::ord::compare`], which is not the derived structural order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Term {
    Zero,
    Omega,
    Gamma(u64),
    /// A sum `a_1 + ... + a_n`. In normal form: `n >= 2`, every part is
    /// additive principal and the parts are weakly decreasing.
    Sum(Vec<Term>),
    /// `φ(a, b)`.
    Phi(Box<Term>, Box<Term>),
    /// `ψ(a)`.
    Psi(Box<Term>),
}

impl Term {
    pub fn phi(a: Term, b: Term) -> Term {
        Term::Phi(Box::new(a), Box::new(b))
    }

    pub fn psi(a: Term) -> Term {
        Term::Psi(Box::new(a))
    }

    /// Builds a sum, flattening nested raw sums. Zero parts are dropped,
    /// an empty list collapses to `0` and a singleton to its only part.
    pub fn sum(parts: Vec<Term>) -> Term {
        let mut flat = Vec::with_capacity(parts.len());
        for p in parts {
            match p {
                Term::Zero => {}
                Term::Sum(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => Term::Zero,
            1 => flat.pop().unwrap(),
            _ => Term::Sum(flat),
        }
    }

    /// The finite ordinal `n` as a term: an n-fold sum of `φ00`.
    pub fn numeral(n: u64) -> Term {
        match n {
            0 => Term::Zero,
            1 => Term::one(),
            _ => Term::Sum(vec![Term::one(); n as usize]),
        }
    }

    /// `1`, i.e. `φ00`.
    pub fn one() -> Term {
        Term::phi(Term::Zero, Term::Zero)
    }

    /// `ω`, i.e. `φ01`.
    pub fn omega() -> Term {
        Term::phi(Term::Zero, Term::one())
    }

    /// If the term is a numeral (`0`, `φ00`, or a sum of `φ00`s), its value.
    pub fn as_numeral(&self) -> Option<u64> {
        match self {
            Term::Zero => Some(0),
            t if *t == Term::one() => Some(1),
            Term::Sum(parts) if parts.iter().all(|p| *p == Term::one()) => {
                Some(parts.len() as u64)
            }
            _ => None,
        }
    }

    /// Additive principal means the term is not `0` and not a sum.
    pub fn is_additive_principal(&self) -> bool {
        !matches!(self, Term::Zero | Term::Sum(_))
    }

    /// Heads that denote strongly critical ordinals: `Ω`, `Γ_k`, `ψa`.
    pub fn is_strongly_critical_head(&self) -> bool {
        matches!(self, Term::Omega | Term::Gamma(_) | Term::Psi(_))
    }

    /// The complexity `G`: 0 on atoms, one more than the maximal
    /// complexity of the immediate arguments otherwise.
    pub fn complexity(&self) -> u32 {
        match self {
            Term::Zero | Term::Omega | Term::Gamma(_) => 0,
            Term::Sum(parts) => 1 + parts.iter().map(Term::complexity).max().unwrap_or(0),
            Term::Phi(a, b) => 1 + a.complexity().max(b.complexity()),
            Term::Psi(a) => 1 + a.complexity(),
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Term::Zero | Term::Omega | Term::Gamma(_) => 1,
            Term::Sum(parts) => 1 + parts.iter().map(Term::size).sum::<usize>(),
            Term::Phi(a, b) => 1 + a.size() + b.size(),
            Term::Psi(a) => 1 + a.size(),
        }
    }
}
