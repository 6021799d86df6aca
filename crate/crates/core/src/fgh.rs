//! Fundamental sequences and the fast-growing hierarchy on the ε₀
//! fragment (terms built from `0`, `+` and `φ0·` only).

use std::fmt;

use num_bigint::BigUint;

use crate::arith::cnf;
use crate::term::Term;

/// Resource limits for hierarchy evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Number of F-applications unfolded.
    pub max_steps: u64,
    /// Bit-length cap on the running value.
    pub max_value_bits: u64,
}

impl Budget {
    pub fn new(max_steps: u64, max_value_bits: u64) -> Result<Budget, FghError> {
        if max_steps == 0 || max_value_bits == 0 {
            return Err(FghError::EmptyBudget);
        }
        Ok(Budget {
            max_steps,
            max_value_bits,
        })
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_steps: 10_000_000,
            max_value_bits: 1_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FghError {
    /// Input uses symbols outside `0`, `+`, `φ0·`.
    NotEps0 { term: Term },
    /// Fundamental sequence of `0` or a successor.
    NotALimit { term: Term },
    /// A budget limit tripped.
    BudgetExceeded {
        which: BudgetLimit,
        /// F-applications unfolded before the trip.
        steps_done: u64,
    },
    /// Budget fields must be positive.
    EmptyBudget,
    /// A fundamental-sequence index exceeded the machine range.
    IndexOverflow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BudgetLimit {
    Steps,
    ValueBits,
}

impl fmt::Display for FghError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FghError::NotEps0 { term } => {
                write!(f, "{term} is outside the epsilon_0 fragment")
            }
            FghError::NotALimit { term } => {
                write!(f, "{term} is not a limit term")
            }
            FghError::BudgetExceeded { which, steps_done } => {
                let which = match which {
                    BudgetLimit::Steps => "step",
                    BudgetLimit::ValueBits => "value-bit",
                };
                write!(
                    f,
                    "budget exceeded: {which} limit tripped after {steps_done} unfolded applications"
                )
            }
            FghError::EmptyBudget => write!(f, "budget fields must be positive"),
            FghError::IndexOverflow => {
                write!(f, "fundamental-sequence index exceeds the machine range")
            }
        }
    }
}

impl std::error::Error for FghError {}

/// Whether `t` lies in the ε₀ fragment.
pub fn is_eps0(t: &Term) -> bool {
    match t {
        Term::Zero => true,
        Term::Sum(parts) => parts.iter().all(is_eps0),
        Term::Phi(a, b) => **a == Term::Zero && is_eps0(b),
        _ => false,
    }
}

fn require_eps0(t: &Term) -> Result<(), FghError> {
    if is_eps0(t) {
        Ok(())
    } else {
        Err(FghError::NotEps0 { term: t.clone() })
    }
}

enum Kind {
    Zero,
    /// The predecessor.
    Successor(Term),
    Limit,
}

fn classify(t: &Term) -> Kind {
    let parts = cnf(t).parts;
    match parts.last() {
        None => Kind::Zero,
        Some(last) if *last == Term::one() => {
            let mut rest = parts;
            rest.pop();
            Kind::Successor(Term::sum(rest))
        }
        Some(_) => Kind::Limit,
    }
}

/// The n-th element of the standard fundamental sequence:
/// `(γ+λ)[n] = γ+λ[n]`, `ω^{β+1}[n] = ω^β·n`, `ω^λ[n] = ω^{λ[n]}`,
/// `ω[n] = n`.
pub fn fundamental_sequence(t: &Term, n: u64) -> Result<Term, FghError> {
    require_eps0(t)?;
    fs_checked(t, n)
}

fn fs_checked(t: &Term, n: u64) -> Result<Term, FghError> {
    let parts = cnf(t).parts;
    if parts.is_empty() || *parts.last().unwrap() == Term::one() {
        return Err(FghError::NotALimit { term: t.clone() });
    }
    let mut head = parts;
    let tail = head.pop().unwrap();
    let tail_n = fs_principal(&tail, n)?;
    // No absorption can occur: every part of tail[n] is below tail.
    head.extend(cnf(&tail_n).parts);
    Ok(Term::sum(head))
}

/// `ω^β[n]` for an additive principal limit `ω^β = φ0β`, `β ≠ 0`.
fn fs_principal(p: &Term, n: u64) -> Result<Term, FghError> {
    let Term::Phi(_, beta) = p else {
        unreachable!("principal eps0 limits are phi(0,_) terms")
    };
    match classify(beta) {
        Kind::Zero => unreachable!("phi(0,0) is a successor"),
        Kind::Successor(delta) => {
            // ω^{δ+1}[n] = ω^δ·n
            let unit = if delta == Term::Zero {
                Term::one()
            } else {
                Term::phi(Term::Zero, delta)
            };
            Ok(Term::sum(vec![unit; n as usize]))
        }
        Kind::Limit => {
            let inner = fs_checked(beta, n)?;
            Ok(Term::phi(Term::Zero, inner))
        }
    }
}

/// `F_α(n)` with `F_0(n) = n+1`, `F_{α+1}(n) = F_α^{n+1}(n)`,
/// `F_λ(n) = F_{λ[n]}(n)`.
///
/// Evaluation is iterative over an explicit stack of pending
/// applications, run-length encoded; one step is one unfolded
/// application.
pub fn fgh_eval(alpha: &Term, n: u64, budget: &Budget) -> Result<BigUint, FghError> {
    require_eps0(alpha)?;
    let mut value = BigUint::from(n);
    let mut stack: Vec<(Term, BigUint)> = vec![(alpha.clone(), BigUint::from(1u32))];
    let mut steps: u64 = 0;
    let one = BigUint::from(1u32);

    while let Some((term, count)) = stack.pop() {
        steps += 1;
        if steps > budget.max_steps {
            return Err(FghError::BudgetExceeded {
                which: BudgetLimit::Steps,
                steps_done: steps - 1,
            });
        }
        if count > one {
            stack.push((term.clone(), count - &one));
        }
        match classify(&term) {
            Kind::Zero => {
                value += 1u32;
                if value.bits() > budget.max_value_bits {
                    return Err(FghError::BudgetExceeded {
                        which: BudgetLimit::ValueBits,
                        steps_done: steps,
                    });
                }
            }
            Kind::Successor(beta) => {
                stack.push((beta, &value + &one));
            }
            Kind::Limit => {
                let idx = u64::try_from(&value).map_err(|_| FghError::IndexOverflow)?;
                let next = fs_checked(&term, idx)?;
                stack.push((next, one.clone()));
            }
        }
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Term {
        Term::omega()
    }

    fn eval(t: &Term, n: u64) -> BigUint {
        fgh_eval(t, n, &Budget::default()).unwrap()
    }

    /// Direct recursive reference evaluator, independent of the stack
    /// machine; usable only for tiny inputs.
    fn naive(t: &Term, n: u64) -> u64 {
        match classify(t) {
            Kind::Zero => n + 1,
            Kind::Successor(beta) => {
                let mut v = n;
                for _ in 0..=n {
                    v = naive(&beta, v);
                }
                v
            }
            Kind::Limit => naive(&fs_checked(t, n).unwrap(), n),
        }
    }

    #[test]
    fn fundamental_sequence_examples() {
        // ω[3] = 3
        assert_eq!(fundamental_sequence(&w(), 3).unwrap(), Term::numeral(3));
        // ω^ω[2] = ω²
        let wpw = Term::phi(Term::Zero, w());
        assert_eq!(
            fundamental_sequence(&wpw, 2).unwrap(),
            Term::phi(Term::Zero, Term::numeral(2))
        );
        // (ω+ω)[1] = ω+1
        let wplusw = Term::Sum(vec![w(), w()]);
        assert_eq!(
            fundamental_sequence(&wplusw, 1).unwrap(),
            Term::Sum(vec![w(), Term::one()])
        );
        // ω[0] = 0
        assert_eq!(fundamental_sequence(&w(), 0).unwrap(), Term::Zero);
    }

    #[test]
    fn fundamental_sequence_rejects_non_limits() {
        assert!(matches!(
            fundamental_sequence(&Term::Zero, 1),
            Err(FghError::NotALimit { .. })
        ));
        assert!(matches!(
            fundamental_sequence(&Term::numeral(4), 1),
            Err(FghError::NotALimit { .. })
        ));
        let succ = Term::Sum(vec![w(), Term::one()]);
        assert!(matches!(
            fundamental_sequence(&succ, 1),
            Err(FghError::NotALimit { .. })
        ));
    }

    #[test]
    fn fundamental_sequence_rejects_foreign_terms() {
        assert!(matches!(
            fundamental_sequence(&Term::Omega, 1),
            Err(FghError::NotEps0 { .. })
        ));
        assert!(matches!(
            fundamental_sequence(&Term::psi(Term::Zero), 1),
            Err(FghError::NotEps0 { .. })
        ));
    }

    // Exact values, each hand-unfolded:
    //   F_0(3) = 3+1 = 4
    //   F_1(3) = F_0^4(3) = 7
    //   F_2(2) = F_1(F_1(F_1(2))) = F_1(F_1(5)) = F_1(11) = 23
    //   F_3(1) = F_2(F_2(1)); F_2(1) = F_1(F_1(1)) = F_1(3) = 7;
    //            F_2(7) = F_1^8(7) = 2^8·(7+1)-1 = 2047
    //   F_ω(2) = F_{ω[2]}(2) = F_2(2) = 23
    #[test]
    fn exact_small_values() {
        assert_eq!(eval(&Term::Zero, 3), BigUint::from(4u32));
        assert_eq!(eval(&Term::one(), 3), BigUint::from(7u32));
        assert_eq!(eval(&Term::numeral(2), 2), BigUint::from(23u32));
        assert_eq!(eval(&Term::numeral(3), 1), BigUint::from(2047u32));
        assert_eq!(eval(&w(), 2), BigUint::from(23u32));
    }

    #[test]
    fn agrees_with_naive_reference() {
        let cases: Vec<(Term, u64)> = vec![
            (Term::Zero, 5),
            (Term::one(), 4),
            (Term::numeral(2), 3),
            (w(), 2),
            (Term::Sum(vec![w(), Term::one()]), 2),
        ];
        for (t, n) in cases {
            assert_eq!(eval(&t, n), BigUint::from(naive(&t, n)), "at {t}({n})");
        }
    }

    #[test]
    fn budget_trips() {
        let tiny = Budget::new(10, 8).unwrap();
        match fgh_eval(&Term::numeral(3), 3, &tiny) {
            Err(FghError::BudgetExceeded { .. }) => {}
            other => panic!("expected budget trip, got {other:?}"),
        }
        // enlarging the budget never changes a successful result
        let small = Budget::new(1000, 64).unwrap();
        let big = Budget::default();
        let a = fgh_eval(&Term::numeral(2), 2, &small).unwrap();
        let b = fgh_eval(&Term::numeral(2), 2, &big).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_budget_rejected() {
        assert!(matches!(Budget::new(0, 1), Err(FghError::EmptyBudget)));
    }
}
