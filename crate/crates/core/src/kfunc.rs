//! The K-function and the membership criteria it decides.
//!
//! `K(a)` collects the ψ-arguments occurring in the normal form of `a`.
//! It turns the closure-set membership `a ∈ B(η)` into the decidable
//! check `∀ξ∈K(a). ξ ≺ η`.

use std::cmp::Ordering;

use crate::ord::compare;
use crate::term::Term;

/// `K(a)`: the ψ-arguments of `a`, sorted ascending by `≺`, no duplicates.
///
/// Every element has strictly smaller complexity than `a`.
pub fn k_set(a: &Term) -> Vec<Term> {
    let mut out = Vec::new();
    collect_k(a, &mut out);
    out.sort_by(compare);
    out.dedup();
    out
}

fn collect_k(a: &Term, out: &mut Vec<Term>) {
    match a {
        Term::Zero | Term::Omega | Term::Gamma(_) => {}
        Term::Sum(parts) => {
            for p in parts {
                collect_k(p, out);
            }
        }
        Term::Phi(x, y) => {
            collect_k(x, out);
            collect_k(y, out);
        }
        Term::Psi(x) => {
            out.push((**x).clone());
            collect_k(x, out);
        }
    }
}

/// `a ∈ B(η)`: every `ξ ∈ K(a)` is strictly below `η`.
pub fn in_b(a: &Term, eta: &Term) -> bool {
    k_set(a).iter().all(|xi| compare(xi, eta) == Ordering::Less)
}

/// Membership in `H_η(∅) = B(η+1)`: every `ξ ∈ K(a)` is `⪯ η`.
pub fn in_h_eta(a: &Term, eta: &Term) -> bool {
    k_set(a)
        .iter()
        .all(|xi| compare(xi, eta) != Ordering::Greater)
}

/// The most recent strongly critical terms below Ω used to build `a`:
/// nothing for `0` and `Ω`, the term itself for `Γ_k` and ψ-terms,
/// unions through sums and φ-arguments.
pub fn sc_below_omega(a: &Term) -> Vec<Term> {
    let mut out = Vec::new();
    collect_sc(a, &mut out);
    out.sort_by(compare);
    out.dedup();
    out
}

fn collect_sc(a: &Term, out: &mut Vec<Term>) {
    match a {
        Term::Zero | Term::Omega => {}
        Term::Gamma(_) | Term::Psi(_) => out.push(a.clone()),
        Term::Sum(parts) => {
            for p in parts {
                collect_sc(p, out);
            }
        }
        Term::Phi(x, y) => {
            collect_sc(x, out);
            collect_sc(y, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_of_atoms_is_empty() {
        assert!(k_set(&Term::Zero).is_empty());
        assert!(k_set(&Term::Omega).is_empty());
        assert!(k_set(&Term::Gamma(4)).is_empty());
    }

    #[test]
    fn k_of_psi_terms() {
        assert_eq!(k_set(&Term::psi(Term::Zero)), vec![Term::Zero]);
        let t = Term::psi(Term::psi(Term::Zero));
        assert_eq!(k_set(&t), vec![Term::Zero, Term::psi(Term::Zero)]);
    }

    #[test]
    fn k_elements_have_smaller_complexity() {
        let t = Term::psi(Term::Sum(vec![
            Term::Omega,
            Term::psi(Term::Zero),
        ]));
        for xi in k_set(&t) {
            assert!(xi.complexity() < t.complexity());
        }
    }

    #[test]
    fn in_b_examples() {
        assert!(in_b(&Term::Gamma(0), &Term::Zero));
        assert!(!in_b(&Term::psi(Term::Zero), &Term::Zero));
        assert!(in_b(&Term::psi(Term::Zero), &Term::one()));
    }

    #[test]
    fn in_h_eta_examples() {
        assert!(in_h_eta(&Term::psi(Term::Zero), &Term::Zero));
        assert!(!in_h_eta(&Term::psi(Term::Omega), &Term::Zero));
        assert!(in_h_eta(&Term::Omega, &Term::Zero));
    }

    #[test]
    fn sc_examples() {
        assert!(sc_below_omega(&Term::Omega).is_empty());
        let pw = Term::psi(Term::Omega);
        assert_eq!(sc_below_omega(&pw), vec![pw.clone()]);
        let s = Term::Sum(vec![Term::Gamma(1), Term::Gamma(0)]);
        assert_eq!(sc_below_omega(&s), vec![Term::Gamma(0), Term::Gamma(1)]);
    }
}
