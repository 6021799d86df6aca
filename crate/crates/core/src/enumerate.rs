//! Brute-force enumeration of normal-form terms, used as the pool
//! generator for the property suites.

use std::fmt;

use crate::base::BaseOrder;
use crate::ord::compare;
use crate::term::Term;
use crate::validate::{phi_shape_ok, psi_ok};

/// Knobs for [`enumerate_terms`].
#[derive(Clone, Copy, Debug)]
pub struct EnumConfig {
    /// Largest complexity `G` to generate.
    pub max_complexity: u32,
    /// Largest Γ-index to use (further clipped by the base).
    pub max_gamma_index: u64,
    /// Largest sum length.
    pub max_sum_len: usize,
    /// Hard cap on the number of generated terms.
    pub max_pool: usize,
}

impl EnumConfig {
    pub fn new(max_complexity: u32, max_gamma_index: u64) -> Self {
        EnumConfig {
            max_complexity,
            max_gamma_index,
            max_sum_len: 3,
            max_pool: 1_000_000,
        }
    }
}

/// The pool cap was hit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoolLimitExceeded {
    pub limit: usize,
}

impl fmt::Display for PoolLimitExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pool-size limit exceeded: more than {} terms", self.limit)
    }
}

impl std::error::Error for PoolLimitExceeded {}

/// All normal-form terms over `base` within the configured bounds,
/// sorted ascending by `≺`, duplicate-free.
pub fn enumerate_terms(
    base: &BaseOrder,
    cfg: &EnumConfig,
) -> Result<Vec<Term>, PoolLimitExceeded> {
    let mut levels: Vec<Vec<Term>> = Vec::new();
    let mut total = 0usize;

    let mut atoms = vec![Term::Zero];
    let gamma_top = match base.max_gamma() {
        Some(n) => n.min(cfg.max_gamma_index),
        None => cfg.max_gamma_index,
    };
    for i in 0..=gamma_top {
        atoms.push(Term::Gamma(i));
    }
    atoms.push(Term::Omega);
    total += atoms.len();
    if total > cfg.max_pool {
        return Err(PoolLimitExceeded { limit: cfg.max_pool });
    }
    levels.push(atoms);

    for depth in 1..=cfg.max_complexity {
        let fresh = build_level(&levels, depth, cfg, &mut total)?;
        levels.push(fresh);
    }

    let mut pool: Vec<Term> = levels.into_iter().flatten().collect();
    pool.sort_by(compare);
    debug_assert!(pool.windows(2).all(|w| compare(&w[0], &w[1]).is_lt()));
    Ok(pool)
}

fn build_level(
    levels: &[Vec<Term>],
    depth: u32,
    cfg: &EnumConfig,
    total: &mut usize,
) -> Result<Vec<Term>, PoolLimitExceeded> {
    let mut out = Vec::new();
    let mut push = |t: Term, total: &mut usize| -> Result<(), PoolLimitExceeded> {
        *total += 1;
        if *total > cfg.max_pool {
            return Err(PoolLimitExceeded { limit: cfg.max_pool });
        }
        out.push(t);
        Ok(())
    };

    let newest = &levels[(depth - 1) as usize];
    let older: Vec<&Term> = levels[..(depth - 1) as usize]
        .iter()
        .flatten()
        .collect();

    // ψa for every a of complexity exactly depth-1 with K(a) below a.
    for a in newest {
        if psi_ok(a).is_ok() {
            push(Term::psi(a.clone()), total)?;
        }
    }

    // φab with max argument complexity exactly depth-1.
    let all: Vec<&Term> = older.iter().copied().chain(newest.iter()).collect();
    for a in &all {
        for b in &all {
            if a.complexity().max(b.complexity()) != depth - 1 {
                continue;
            }
            if phi_shape_ok(a, b).is_ok() {
                push(Term::phi((*a).clone(), (*b).clone()), total)?;
            }
        }
    }

    // Sums of additive principal parts, weakly decreasing, with the
    // maximal part complexity exactly depth-1.
    let mut principal: Vec<&Term> = all
        .iter()
        .copied()
        .filter(|t| t.is_additive_principal())
        .collect();
    principal.sort_by(|a, b| compare(b, a));
    let mut stack: Vec<usize> = Vec::new();
    gen_sums(&principal, depth - 1, cfg, &mut stack, &mut |parts| {
        push(Term::Sum(parts), total)
    })?;

    Ok(out)
}

/// Emits every weakly decreasing sequence of indices into `principal`
/// (which is sorted descending) of length `2..=max_sum_len` whose
/// maximal part complexity is exactly `top`.
fn gen_sums(
    principal: &[&Term],
    top: u32,
    cfg: &EnumConfig,
    stack: &mut Vec<usize>,
    emit: &mut impl FnMut(Vec<Term>) -> Result<(), PoolLimitExceeded>,
) -> Result<(), PoolLimitExceeded> {
    let start = stack.last().copied().unwrap_or(0);
    if stack.len() >= 2 {
        let has_top = stack
            .iter()
            .any(|&i| principal[i].complexity() == top);
        if has_top {
            emit(stack.iter().map(|&i| principal[i].clone()).collect())?;
        }
    }
    if stack.len() == cfg.max_sum_len {
        return Ok(());
    }
    for i in start..principal.len() {
        stack.push(i);
        gen_sums(principal, top, cfg, stack, emit)?;
        stack.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::is_valid;

    #[test]
    fn complexity_zero_atoms() {
        let base = BaseOrder::Finite(0);
        let pool = enumerate_terms(&base, &EnumConfig::new(0, 0)).unwrap();
        assert_eq!(pool, vec![Term::Zero, Term::Gamma(0), Term::Omega]);
    }

    #[test]
    fn complexity_one_contains_expected_terms() {
        let base = BaseOrder::Finite(0);
        let pool = enumerate_terms(&base, &EnumConfig::new(1, 0)).unwrap();
        for t in [
            Term::psi(Term::Zero),
            Term::psi(Term::Omega),
            Term::psi(Term::Gamma(0)),
            Term::one(),
            Term::phi(Term::Zero, Term::Omega),
            Term::Sum(vec![Term::Omega, Term::Gamma(0)]),
        ] {
            assert!(pool.contains(&t), "missing {t}");
        }
        // all valid, sorted strictly increasing
        for t in &pool {
            assert!(is_valid(t, &base), "{t} not valid");
        }
        for w in pool.windows(2) {
            assert!(compare(&w[0], &w[1]).is_lt());
        }
    }

    #[test]
    fn gamma_indices_clip_to_base() {
        let base = BaseOrder::Finite(1);
        let pool = enumerate_terms(&base, &EnumConfig::new(0, 5)).unwrap();
        assert_eq!(
            pool,
            vec![Term::Zero, Term::Gamma(0), Term::Gamma(1), Term::Omega]
        );
    }

    #[test]
    fn pool_cap_is_enforced() {
        let base = BaseOrder::Finite(2);
        let mut cfg = EnumConfig::new(2, 2);
        cfg.max_pool = 100;
        assert!(matches!(
            enumerate_terms(&base, &cfg),
            Err(PoolLimitExceeded { limit: 100 })
        ));
    }
}
