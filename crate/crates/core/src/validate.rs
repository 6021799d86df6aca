//! Normal-form validation with rule-naming diagnostics.

use std::cmp::Ordering;
use std::fmt;

use crate::base::BaseOrder;
use crate::kfunc::k_set;
use crate::ord::compare;
use crate::term::Term;

/// The first violated normal-form rule, reported by the validator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A sum with fewer than two parts.
    SumLength { found: usize },
    /// A sum part that is `0` or itself a sum.
    SumPartNotPrincipal { index: usize },
    /// Sum parts not weakly decreasing.
    SumOrder { index: usize },
    /// A φ-term fitting neither the small-argument shape nor the
    /// `φ0γ`, `γ ⪰ Ω` shape.
    PhiShape { first: Term, second: Term },
    /// A φ-term whose second argument is a fixed point of the first.
    PhiFixedPoint { first: Term, second: Term },
    /// `ψa` where some `ξ ∈ K(a)` fails `ξ ≺ a`.
    PsiCondition { witness: Term },
    /// A Γ-index outside the ambient base.
    GammaOutOfBase { index: u64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SumLength { found } => {
                write!(f, "sum-length violation: a sum needs at least 2 parts, found {found}")
            }
            Violation::SumPartNotPrincipal { index } => write!(
                f,
                "sum-part violation: part {index} is not additive principal"
            ),
            Violation::SumOrder { index } => write!(
                f,
                "sum-order violation: parts must be weakly decreasing, part {index} exceeds its predecessor"
            ),
            Violation::PhiShape { first, second } => write!(
                f,
                "phi-shape violation: phi({first},{second}) fits neither the small-argument shape nor phi(0,c) with c above Omega"
            ),
            Violation::PhiFixedPoint { first, second } => write!(
                f,
                "phi-fixed-point violation: {second} absorbs phi with first argument {first}"
            ),
            Violation::PsiCondition { witness } => write!(
                f,
                "psi-condition violation: argument contains psi-argument {witness} not below it"
            ),
            Violation::GammaOutOfBase { index } => {
                write!(f, "gamma-index violation: G[{index}] is not admissible in this base")
            }
        }
    }
}

impl std::error::Error for Violation {}

/// Checks that `t` is a normal-form term over `base`.
///
/// Total: never panics, reports the first violated rule in a
/// left-to-right, children-first traversal.
pub fn validate(t: &Term, base: &BaseOrder) -> Result<(), Violation> {
    match t {
        Term::Zero | Term::Omega => Ok(()),
        Term::Gamma(i) => {
            if base.admits_gamma(*i) {
                Ok(())
            } else {
                Err(Violation::GammaOutOfBase { index: *i })
            }
        }
        Term::Sum(parts) => {
            for p in parts {
                validate(p, base)?;
            }
            if parts.len() < 2 {
                return Err(Violation::SumLength { found: parts.len() });
            }
            if let Some(i) = parts.iter().position(|p| !p.is_additive_principal()) {
                return Err(Violation::SumPartNotPrincipal { index: i });
            }
            for i in 1..parts.len() {
                if compare(&parts[i - 1], &parts[i]) == Ordering::Less {
                    return Err(Violation::SumOrder { index: i });
                }
            }
            Ok(())
        }
        Term::Phi(a, b) => {
            validate(a, base)?;
            validate(b, base)?;
            phi_shape_ok(a, b)
        }
        Term::Psi(a) => {
            validate(a, base)?;
            psi_ok(a)
        }
    }
}

/// Whether `t` validates over `base`.
pub fn is_valid(t: &Term, base: &BaseOrder) -> bool {
    validate(t, base).is_ok()
}

/// The φ normal-form condition for already-validated arguments.
///
/// Small-argument shape: both arguments below Ω and the second not a
/// fixed point of φ at the first (the case split follows the head of the
/// second argument). Large shape: first argument `0`, second `⪰ Ω`.
pub(crate) fn phi_shape_ok(a: &Term, b: &Term) -> Result<(), Violation> {
    let violation = |fixed: bool| {
        if fixed {
            Violation::PhiFixedPoint {
                first: a.clone(),
                second: b.clone(),
            }
        } else {
            Violation::PhiShape {
                first: a.clone(),
                second: b.clone(),
            }
        }
    };
    if *a == Term::Zero && compare(b, &Term::Omega) != Ordering::Less {
        return Ok(());
    }
    if compare(a, &Term::Omega) != Ordering::Less || compare(b, &Term::Omega) != Ordering::Less {
        return Err(violation(false));
    }
    match b {
        Term::Zero => {
            if a.is_strongly_critical_head() {
                Err(violation(true))
            } else {
                Ok(())
            }
        }
        Term::Gamma(_) | Term::Psi(_) => {
            if compare(a, b) == Ordering::Less {
                Err(violation(true))
            } else {
                Ok(())
            }
        }
        Term::Sum(_) => Ok(()),
        Term::Phi(c, _) => {
            if compare(a, c) == Ordering::Less {
                Err(violation(true))
            } else {
                Ok(())
            }
        }
        Term::Omega => unreachable!("b is below Omega here"),
    }
}

/// The ψ condition on a validated argument: every `ξ ∈ K(a)` is `≺ a`.
pub(crate) fn psi_ok(a: &Term) -> Result<(), Violation> {
    for xi in k_set(a) {
        if compare(&xi, a) != Ordering::Less {
            return Err(Violation::PsiCondition { witness: xi });
        }
    }
    Ok(())
}
