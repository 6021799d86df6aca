//! The ordering `≺` on normal-form terms.
//!
//! The generating rules compare terms by head constructor; completing them
//! to a strict total order is forced by trichotomy. The full head matrix
//! (also in `docs/ordering.md`):
//!
//! ```text
//!          0     Γ_j            Ω      sum(bs)     φ(c,d)          ψ(y)
//!   0      =     <              <      <           <               <
//!   Γ_i    >     i vs j         <      a vs b_1*   Γ_i<φ iff       <
//!                                                  c≥Γ or d≥Γ
//!   Ω      >     >              =      a vs b_1*   Ω<φ iff         >
//!                                                  c≥Ω or d≥Ω
//!   sum    >     a_1 vs b*      a_1    lex with    a_1 vs b*       a_1 vs b*
//!   (as)                        vs b*  prefix rule
//!   φ(a,b) >     φ<Γ iff        φ<Ω    a vs b_1*   three-way on    φ<ψ iff
//!                a,b<Γ          iff    reversed    first args      a,b<ψ
//!                               a,b<Ω
//!   ψ(x)   >     >              <      a vs b_1*   reversed        x vs y
//! ```
//!
//! `a vs b_1*` means: a sum is below an additive principal term exactly
//! when its head part is, and above it otherwise (never equal). Equality
//! holds exactly between identical trees.

use std::cmp::Ordering;

use crate::term::Term;

/// Decides `a ≺ b`, `a = b` or `a ≻ b` for normal-form terms.
///
/// Total on arbitrary trees (returning `Equal` only on identical ones),
/// but the contract — a strict total order agreeing with the denoted
/// ordinals — holds only when both inputs validate over a common base.
pub fn compare(a: &Term, b: &Term) -> Ordering {
    use Term::*;
    match (a, b) {
        (Zero, Zero) => Ordering::Equal,
        (Zero, _) => Ordering::Less,
        (_, Zero) => Ordering::Greater,

        (Gamma(i), Gamma(j)) => i.cmp(j),
        (Gamma(_), Omega) => Ordering::Less,
        (Omega, Gamma(_)) => Ordering::Greater,
        (Omega, Omega) => Ordering::Equal,

        // ψb ≺ Ω for every b; ψa ≻ Γ_k for every admissible k.
        (Psi(_), Omega) => Ordering::Less,
        (Omega, Psi(_)) => Ordering::Greater,
        (Psi(_), Gamma(_)) => Ordering::Greater,
        (Gamma(_), Psi(_)) => Ordering::Less,
        (Psi(x), Psi(y)) => compare(x, y),

        // A sum relates to an additive principal term through its head.
        (Sum(parts), rhs @ (Gamma(_) | Omega | Psi(_) | Phi(..))) => {
            if compare(&parts[0], rhs) == Ordering::Less {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        (lhs @ (Gamma(_) | Omega | Psi(_) | Phi(..)), Sum(parts)) => {
            if compare(&parts[0], lhs) == Ordering::Less {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }

        (Sum(xs), Sum(ys)) => compare_sums(xs, ys),

        // φcd against a strongly critical head: φcd ≺ s iff c,d ≺ s.
        (Phi(c, d), rhs @ (Gamma(_) | Omega | Psi(_))) => {
            if compare(c, rhs) == Ordering::Less && compare(d, rhs) == Ordering::Less {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        (lhs @ (Gamma(_) | Omega | Psi(_)), Phi(c, d)) => {
            if compare(c, lhs) == Ordering::Less && compare(d, lhs) == Ordering::Less {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }

        (Phi(a1, b1), Phi(a2, b2)) => match compare(a1, a2) {
            Ordering::Equal => compare(b1, b2),
            // φa1b1 ≺ φa2b2 iff b1 ≺ φa2b2 (first arguments ascending).
            Ordering::Less => {
                if compare(b1, b) == Ordering::Less {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            Ordering::Greater => {
                if compare(b2, a) == Ordering::Less {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        },
    }
}

/// Lexicographic comparison of sum part lists with the strict-prefix rule:
/// a proper prefix is smaller.
fn compare_sums(xs: &[Term], ys: &[Term]) -> Ordering {
    for (x, y) in xs.iter().zip(ys.iter()) {
        match compare(x, y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    xs.len().cmp(&ys.len())
}

/// `a ≺ b`.
pub fn lt(a: &Term, b: &Term) -> bool {
    compare(a, b) == Ordering::Less
}

/// `a ⪯ b`.
pub fn le(a: &Term, b: &Term) -> bool {
    compare(a, b) != Ordering::Greater
}

/// The larger of two terms (the first on ties).
pub fn max_term(a: Term, b: Term) -> Term {
    if compare(&a, &b) == Ordering::Less {
        b
    } else {
        a
    }
}
