//! Ordinal arithmetic on normal-form terms.

use std::cmp::Ordering;
use std::fmt;

use crate::kfunc::k_set;
use crate::ord::compare;
use crate::term::Term;

/// The additive-principal parts of a term, weakly decreasing. Empty for `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfDecomposition {
    pub parts: Vec<Term>,
}

impl CnfDecomposition {
    /// Rebuilds the term: `0` for no parts, the part itself for one,
    /// a sum otherwise.
    pub fn recombine(&self) -> Term {
        recombine(self.parts.clone())
    }
}

fn recombine(mut parts: Vec<Term>) -> Term {
    match parts.len() {
        0 => Term::Zero,
        1 => parts.pop().unwrap(),
        _ => Term::Sum(parts),
    }
}

/// Cantor-normal-form decomposition of a validated term.
pub fn cnf(a: &Term) -> CnfDecomposition {
    let parts = match a {
        Term::Zero => vec![],
        Term::Sum(parts) => parts.clone(),
        other => vec![other.clone()],
    };
    CnfDecomposition { parts }
}

/// Ordinal addition: concatenate the part lists, dropping every part of
/// `a` strictly below the head part of `b`.
pub fn add(a: &Term, b: &Term) -> Term {
    let mut left = cnf(a).parts;
    let right = cnf(b).parts;
    let Some(head) = right.first() else {
        return a.clone();
    };
    left.retain(|p| compare(p, head) != Ordering::Less);
    left.extend(right);
    recombine(left)
}

/// Natural (Hessenberg) sum: merge both part lists weakly decreasing,
/// with no absorption.
pub fn natural_sum(a: &Term, b: &Term) -> Term {
    let left = cnf(a).parts;
    let right = cnf(b).parts;
    let mut out = Vec::with_capacity(left.len() + right.len());
    let (mut i, mut j) = (0, 0);
    while i < left.len() && j < right.len() {
        if compare(&left[i], &right[j]) == Ordering::Less {
            out.push(right[j].clone());
            j += 1;
        } else {
            out.push(left[i].clone());
            i += 1;
        }
    }
    out.extend_from_slice(&left[i..]);
    out.extend_from_slice(&right[j..]);
    recombine(out)
}

/// Why a requested φ-value has no normal form in the term system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotRepresentable {
    pub first: Term,
    pub second: Term,
}

impl fmt::Display for NotRepresentable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not-representable: phi({},{}) has no normal form here",
            self.first, self.second
        )
    }
}

impl std::error::Error for NotRepresentable {}

/// The normal-form term denoting `φab`, collapsing fixed points.
///
/// Absorption: a φ-term with a larger first argument, a `Γ_k` or ψ-term
/// above `a`, and `φa0 = a` for strongly critical `a`. Everything with
/// both arguments below Ω that is not absorbed is a plain φ-term; above Ω
/// only `φ0γ` exists. The rest has no name in the system.
pub fn veblen(a: &Term, b: &Term) -> Result<Term, NotRepresentable> {
    let err = || NotRepresentable {
        first: a.clone(),
        second: b.clone(),
    };
    let a_countable = compare(a, &Term::Omega) == Ordering::Less;
    if compare(b, &Term::Omega) != Ordering::Less {
        // Only φ0γ names anything at or above Ω.
        return if *a == Term::Zero {
            Ok(Term::phi(Term::Zero, b.clone()))
        } else {
            Err(err())
        };
    }
    match b {
        Term::Zero => {
            if a.is_strongly_critical_head() {
                Ok(a.clone())
            } else if a_countable {
                Ok(Term::phi(a.clone(), Term::Zero))
            } else {
                Err(err())
            }
        }
        Term::Gamma(_) | Term::Psi(_) => {
            if compare(a, b) == Ordering::Less {
                Ok(b.clone())
            } else if a_countable {
                Ok(Term::phi(a.clone(), b.clone()))
            } else {
                Err(err())
            }
        }
        Term::Sum(_) => {
            if a_countable {
                Ok(Term::phi(a.clone(), b.clone()))
            } else {
                Err(err())
            }
        }
        Term::Phi(c, _) => {
            if compare(a, c) == Ordering::Less {
                Ok(b.clone())
            } else if a_countable {
                // a ⪰ c: φ(a, φcd) is itself normal, including a = c.
                Ok(Term::phi(a.clone(), b.clone()))
            } else {
                Err(err())
            }
        }
        Term::Omega => unreachable!("b is below Omega here"),
    }
}

/// A ψ-application rejected because its argument is not in `B(argument)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiUndefined {
    pub argument: Term,
    /// The offending `ξ ∈ K(argument)` with `ξ ⪰ argument`.
    pub witness: Term,
}

impl fmt::Display for PsiUndefined {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "psi-undefined: K({}) contains {} which is not below it",
            self.argument, self.witness
        )
    }
}

impl std::error::Error for PsiUndefined {}

/// The normal-form term `ψa`, defined when every `ξ ∈ K(a)` is `≺ a`.
pub fn psi(a: &Term) -> Result<Term, PsiUndefined> {
    for xi in k_set(a) {
        if compare(&xi, a) != Ordering::Less {
            return Err(PsiUndefined {
                argument: a.clone(),
                witness: xi,
            });
        }
    }
    Ok(Term::psi(a.clone()))
}

/// Default cap for [`e_index`].
pub const E_INDEX_CAP: u64 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EIndexTooLarge {
    pub requested: u64,
    pub cap: u64,
}

impl fmt::Display for EIndexTooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "e-index size cap exceeded: requested {} with cap {}",
            self.requested, self.cap
        )
    }
}

impl std::error::Error for EIndexTooLarge {}

/// The index family `e_0 = Ω+1`, `e_{n+1} = ω^{e_n}`, capped at
/// [`E_INDEX_CAP`].
pub fn e_index(n: u64) -> Result<Term, EIndexTooLarge> {
    e_index_with_cap(n, E_INDEX_CAP)
}

pub fn e_index_with_cap(n: u64, cap: u64) -> Result<Term, EIndexTooLarge> {
    if n > cap {
        return Err(EIndexTooLarge { requested: n, cap });
    }
    let mut t = Term::Sum(vec![Term::Omega, Term::one()]);
    for _ in 0..n {
        t = veblen(&Term::Zero, &t).expect("omega powers above Omega are representable");
    }
    Ok(t)
}

/// The exponent of an additive principal term: `b` for `φ0b`, the term
/// itself otherwise (those are all fixed points of `ω^·`).
fn ap_exponent(p: &Term) -> Term {
    match p {
        Term::Phi(a, b) if **a == Term::Zero => (**b).clone(),
        other => other.clone(),
    }
}

/// `ω·a`, computed by shifting every CNF exponent by one on the left:
/// `ω^{e_1}+...+ω^{e_n}` maps to `ω^{1+e_1}+...+ω^{1+e_n}`.
pub fn omega_times(a: &Term) -> Term {
    let parts = cnf(a).parts;
    let one = Term::one();
    let shifted: Vec<Term> = parts
        .iter()
        .map(|p| {
            let e = ap_exponent(p);
            let e1 = add(&one, &e);
            veblen(&Term::Zero, &e1).expect("shifted exponents stay representable")
        })
        .collect();
    recombine(shifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::BaseOrder;
    use crate::validate::is_valid;

    fn w() -> Term {
        Term::omega()
    }

    #[test]
    fn add_identities() {
        let a = Term::Sum(vec![Term::Omega, Term::one()]);
        assert_eq!(add(&a, &Term::Zero), a);
        assert_eq!(add(&Term::Zero, &a), a);
    }

    #[test]
    fn add_absorbs_on_the_left() {
        assert_eq!(add(&Term::one(), &w()), w());
        assert_eq!(
            add(&w(), &Term::one()),
            Term::Sum(vec![w(), Term::one()])
        );
    }

    #[test]
    fn natural_sum_merges_without_absorption() {
        assert_eq!(
            natural_sum(&Term::one(), &w()),
            Term::Sum(vec![w(), Term::one()])
        );
        let a = Term::Sum(vec![w(), Term::one()]);
        assert_eq!(natural_sum(&a, &Term::Zero), a);
        assert_eq!(
            natural_sum(&Term::one(), &w()),
            natural_sum(&w(), &Term::one())
        );
    }

    #[test]
    fn veblen_fixed_points() {
        // φ0(φ10) = φ10
        let eps0 = Term::phi(Term::one(), Term::Zero);
        assert_eq!(veblen(&Term::Zero, &eps0).unwrap(), eps0);
        // φ0Ω is a new term under the adopted reading
        assert_eq!(
            veblen(&Term::Zero, &Term::Omega).unwrap(),
            Term::phi(Term::Zero, Term::Omega)
        );
        // Γ-numbers absorb every smaller first argument
        assert_eq!(veblen(&Term::Zero, &Term::Gamma(0)).unwrap(), Term::Gamma(0));
        assert_eq!(veblen(&Term::one(), &Term::Gamma(0)).unwrap(), Term::Gamma(0));
        // φ_a(0) = a for strongly critical a
        assert_eq!(veblen(&Term::Gamma(0), &Term::Zero).unwrap(), Term::Gamma(0));
        // nesting at equal first arguments
        let inner = Term::phi(Term::one(), Term::Zero);
        assert_eq!(
            veblen(&Term::one(), &inner).unwrap(),
            Term::phi(Term::one(), inner.clone())
        );
    }

    #[test]
    fn veblen_not_representable() {
        assert!(veblen(&Term::Omega, &Term::Zero).is_err());
        assert!(veblen(&Term::one(), &Term::Omega).is_err());
        let e0 = Term::Sum(vec![Term::Omega, Term::one()]);
        assert!(veblen(&Term::one(), &e0).is_err());
    }

    #[test]
    fn veblen_output_validates() {
        let base = BaseOrder::Finite(2);
        let pool = [
            Term::Zero,
            Term::one(),
            w(),
            Term::Gamma(0),
            Term::Gamma(2),
            Term::Omega,
            Term::psi(Term::Zero),
            Term::Sum(vec![Term::Omega, Term::one()]),
            Term::phi(Term::one(), Term::Zero),
        ];
        for a in &pool {
            for b in &pool {
                if let Ok(t) = veblen(a, b) {
                    assert!(is_valid(&t, &base), "veblen({a},{b}) = {t} does not validate");
                }
            }
        }
    }

    #[test]
    fn psi_constructor() {
        assert_eq!(psi(&Term::Zero).unwrap(), Term::psi(Term::Zero));
        let e0 = Term::Sum(vec![Term::Omega, Term::one()]);
        assert_eq!(psi(&e0).unwrap(), Term::psi(e0.clone()));
        let bad = Term::psi(Term::Omega);
        let err = psi(&bad).unwrap_err();
        assert_eq!(err.witness, Term::Omega);
    }

    #[test]
    fn cnf_examples() {
        assert!(cnf(&Term::Zero).parts.is_empty());
        let s = Term::Sum(vec![Term::Omega, Term::one()]);
        assert_eq!(cnf(&s).parts, vec![Term::Omega, Term::one()]);
        let p = Term::psi(Term::Zero);
        assert_eq!(cnf(&p).parts, vec![p.clone()]);
        assert_eq!(cnf(&s).recombine(), s);
    }

    #[test]
    fn e_index_family() {
        let e0 = e_index(0).unwrap();
        assert_eq!(e0, Term::Sum(vec![Term::Omega, Term::one()]));
        let e1 = e_index(1).unwrap();
        assert_eq!(e1, Term::phi(Term::Zero, e0.clone()));
        for n in 0..4 {
            let a = e_index(n).unwrap();
            let b = e_index(n + 1).unwrap();
            assert_eq!(compare(&a, &b), Ordering::Less);
        }
        assert!(e_index(9).is_err());
        assert!(e_index_with_cap(9, 10).is_ok());
    }

    #[test]
    fn omega_times_examples() {
        // ω·0 = 0, ω·1 = ω, ω·2 = ω+ω
        assert_eq!(omega_times(&Term::Zero), Term::Zero);
        assert_eq!(omega_times(&Term::one()), w());
        assert_eq!(
            omega_times(&Term::numeral(2)),
            Term::Sum(vec![w(), w()])
        );
        // ω·ω = ω²
        assert_eq!(
            omega_times(&w()),
            Term::phi(Term::Zero, Term::numeral(2))
        );
        // ω·Γ_0 = Γ_0
        assert_eq!(omega_times(&Term::Gamma(0)), Term::Gamma(0));
        // ω·(Γ_0+2) = Γ_0+ω+ω
        let t = Term::Sum(vec![Term::Gamma(0), Term::one(), Term::one()]);
        assert_eq!(
            omega_times(&t),
            Term::Sum(vec![Term::Gamma(0), w(), w()])
        );
    }
}
