//! Canonical printer for the shared term syntax.
//!
//! Sugar: `φ00` prints as `1`, `φ0(φ00)` as `w`, other `φ0x` as `w^x`,
//! and a trailing run of `φ00` sum parts as a decimal numeral. The
//! printer output always reparses to the same tree (modulo raw-sum
//! flattening, which the parser performs anyway).

use std::fmt;

use crate::term::Term;

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(self, f)
    }
}

fn write_term(t: &Term, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match t {
        Term::Zero => f.write_str("0"),
        Term::Omega => f.write_str("W"),
        Term::Gamma(i) => write!(f, "G[{i}]"),
        Term::Psi(a) => write!(f, "psi({a})"),
        Term::Phi(a, b) => {
            if **a == Term::Zero {
                if **b == Term::Zero {
                    f.write_str("1")
                } else if **b == Term::one() {
                    f.write_str("w")
                } else if matches!(**b, Term::Sum(_)) {
                    write!(f, "w^({})", b)
                } else {
                    write!(f, "w^{}", b)
                }
            } else {
                write!(f, "phi({a},{b})")
            }
        }
        Term::Sum(parts) => {
            // Count the maximal trailing run of ones and print it as a numeral.
            let ones_tail = parts
                .iter()
                .rev()
                .take_while(|p| **p == Term::one())
                .count();
            let ones_tail = if ones_tail == parts.len() {
                parts.len()
            } else {
                ones_tail
            };
            let head = &parts[..parts.len() - ones_tail];
            let mut first = true;
            for p in head {
                if !first {
                    f.write_str("+")?;
                }
                first = false;
                // A nested raw sum needs parentheses to stay unambiguous.
                if matches!(p, Term::Sum(_)) {
                    write!(f, "({p})")?;
                } else {
                    write_term(p, f)?;
                }
            }
            if ones_tail > 0 {
                if !first {
                    f.write_str("+")?;
                }
                write!(f, "{ones_tail}")?;
            }
            Ok(())
        }
    }
}
