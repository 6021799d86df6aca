//! Hereditarily finite sets: the ground for the relativisation parameter.
//!
//! Values are canonical (children sorted and deduplicated), so structural
//! equality is extensional equality. The canonical child order is by
//! (rank, cardinality, lexicographic children), which also fixes printing.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::rsrank::{RsExpr, RsFormula, RsTerm};

/// A hereditarily finite set in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HfSet {
    children: Vec<HfSet>,
}

impl PartialOrd for HfSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HfSet {
    fn cmp(&self, other: &Self) -> Ordering {
        hf_cmp(self, other)
    }
}

impl HfSet {
    /// The empty set.
    pub fn empty() -> HfSet {
        HfSet { children: vec![] }
    }

    /// Builds a set from children, canonicalizing.
    pub fn new(mut children: Vec<HfSet>) -> HfSet {
        children.sort_by(hf_cmp);
        children.dedup();
        HfSet { children }
    }

    pub fn singleton(x: HfSet) -> HfSet {
        HfSet { children: vec![x] }
    }

    pub fn children(&self) -> &[HfSet] {
        &self.children
    }

    pub fn card(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }

    /// Membership `x ∈ self`.
    pub fn contains(&self, x: &HfSet) -> bool {
        self.children.binary_search_by(|c| hf_cmp(c, x)).is_ok()
    }

    /// Subset `self ⊆ other`.
    pub fn subset_of(&self, other: &HfSet) -> bool {
        self.children.iter().all(|c| other.contains(c))
    }

    /// The ∈-rank: 0 for the empty set, else one more than the largest
    /// child rank.
    pub fn rank(&self) -> u64 {
        self.children
            .iter()
            .map(|c| c.rank() + 1)
            .max()
            .unwrap_or(0)
    }
}

/// The canonical order: by rank, then cardinality, then lexicographic on
/// the (already canonical) children.
fn hf_cmp(a: &HfSet, b: &HfSet) -> Ordering {
    a.rank()
        .cmp(&b.rank())
        .then_with(|| a.card().cmp(&b.card()))
        .then_with(|| {
            for (x, y) in a.children.iter().zip(b.children.iter()) {
                match hf_cmp(x, y) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        })
}

impl fmt::Display for HfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HfParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for HfParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "hf syntax error at byte {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for HfParseError {}

/// Parses a brace literal like `{{},{{}}}`.
pub fn parse_hf(src: &str) -> Result<HfSet, HfParseError> {
    let bytes = src.as_bytes();
    let mut pos = 0;
    let set = parse_hf_at(bytes, &mut pos)?;
    skip_ws(bytes, &mut pos);
    if pos != bytes.len() {
        return Err(HfParseError {
            pos,
            message: "trailing input after set literal".into(),
        });
    }
    Ok(set)
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_hf_at(bytes: &[u8], pos: &mut usize) -> Result<HfSet, HfParseError> {
    skip_ws(bytes, pos);
    if bytes.get(*pos) != Some(&b'{') {
        return Err(HfParseError {
            pos: *pos,
            message: "expected `{`".into(),
        });
    }
    *pos += 1;
    let mut children = Vec::new();
    skip_ws(bytes, pos);
    if bytes.get(*pos) == Some(&b'}') {
        *pos += 1;
        return Ok(HfSet::new(children));
    }
    loop {
        children.push(parse_hf_at(bytes, pos)?);
        skip_ws(bytes, pos);
        match bytes.get(*pos) {
            Some(b',') => {
                *pos += 1;
            }
            Some(b'}') => {
                *pos += 1;
                return Ok(HfSet::new(children));
            }
            _ => {
                return Err(HfParseError {
                    pos: *pos,
                    message: "expected `,` or `}`".into(),
                })
            }
        }
    }
}

/// A finite ∈-structure: a duplicate-free, canonically sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteUniverse {
    elements: Vec<HfSet>,
}

impl FiniteUniverse {
    fn from_vec(mut elements: Vec<HfSet>) -> FiniteUniverse {
        elements.sort_by(hf_cmp);
        elements.dedup();
        FiniteUniverse { elements }
    }

    pub fn elements(&self) -> &[HfSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &HfSet) -> bool {
        self.elements.binary_search_by(|c| hf_cmp(c, x)).is_ok()
    }

    /// Adjacency view: element index to the indices of its children that
    /// lie in the universe.
    pub fn to_adjacency(&self) -> UniverseAdjacency {
        let nodes = self
            .elements
            .iter()
            .enumerate()
            .map(|(id, el)| AdjacencyNode {
                id,
                printed: el.to_string(),
                rank: el.rank(),
                children: el
                    .children()
                    .iter()
                    .filter_map(|c| {
                        self.elements.binary_search_by(|e| hf_cmp(e, c)).ok()
                    })
                    .collect(),
            })
            .collect();
        UniverseAdjacency { nodes }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AdjacencyNode {
    pub id: usize,
    pub printed: String,
    pub rank: u64,
    pub children: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct UniverseAdjacency {
    pub nodes: Vec<AdjacencyNode>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HfError {
    /// A universe construction passed the configured size cap.
    SizeCapExceeded { cap: usize, predicted: u128 },
}

impl fmt::Display for HfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HfError::SizeCapExceeded { cap, predicted } => write!(
                f,
                "universe size cap exceeded: predicted {predicted} elements with cap {cap}"
            ),
        }
    }
}

impl std::error::Error for HfError {}

/// Default universe size cap.
pub const UNIVERSE_CAP: usize = 100_000;

/// `TC({x})`: the ∈-downward closure of `{x}`; contains `x`.
pub fn transitive_closure(x: &HfSet, cap: usize) -> Result<FiniteUniverse, HfError> {
    let mut seen: Vec<HfSet> = Vec::new();
    let mut work = vec![x.clone()];
    while let Some(s) = work.pop() {
        if seen.contains(&s) {
            continue;
        }
        if seen.len() + 1 > cap {
            return Err(HfError::SizeCapExceeded {
                cap,
                predicted: seen.len() as u128 + 1,
            });
        }
        work.extend(s.children().iter().cloned());
        seen.push(s);
    }
    Ok(FiniteUniverse::from_vec(seen))
}

/// Whether a successor stage materializes all subsets (as printed) or
/// additionally keeps the previous stage's elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VStageMode {
    /// Exactly `{B : B ⊆ V_α(x)}`.
    Literal,
    /// The union with the previous stage.
    Cumulative,
}

/// The relativised von Neumann stage `V_α(x)`: `V_0(x) = TC({x})`,
/// successor stages are the full subset space of the previous stage.
pub fn v_stage(
    x: &HfSet,
    alpha: u32,
    mode: VStageMode,
    cap: usize,
) -> Result<FiniteUniverse, HfError> {
    let mut stage = transitive_closure(x, cap)?;
    for _ in 0..alpha {
        let n = stage.len();
        let predicted = if n >= 64 { u128::MAX } else { 1u128 << n };
        if predicted > cap as u128 {
            return Err(HfError::SizeCapExceeded { cap, predicted });
        }
        let mut next = Vec::with_capacity(predicted as usize);
        for mask in 0u64..(1u64 << n) {
            let subset: Vec<HfSet> = stage
                .elements()
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, e)| e.clone())
                .collect();
            next.push(HfSet::new(subset));
        }
        if mode == VStageMode::Cumulative {
            next.extend(stage.elements().iter().cloned());
        }
        stage = FiniteUniverse::from_vec(next);
    }
    Ok(stage)
}

/// Evaluation failures over a finite universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    /// A subset-bounded quantifier ranges over a subset missing from the
    /// universe.
    QuantifierEscape { missing: HfSet },
    /// The formula contains an unbounded quantifier.
    UnboundedQuantifier,
    /// A free variable without an assignment.
    UnassignedVariable { name: String },
    /// A term position holding something other than a ground set.
    NotEvaluable { what: String },
    /// Too many subsets to enumerate.
    SubsetSpaceTooLarge { card: usize },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::QuantifierEscape { missing } => write!(
                f,
                "quantifier-escape: subset {missing} is not present in the universe"
            ),
            EvalError::UnboundedQuantifier => {
                write!(f, "unbounded quantifier is not evaluable over a finite universe")
            }
            EvalError::UnassignedVariable { name } => {
                write!(f, "variable `{name}` has no assignment")
            }
            EvalError::NotEvaluable { what } => {
                write!(f, "term {what} does not denote a ground set")
            }
            EvalError::SubsetSpaceTooLarge { card } => {
                write!(f, "subset space of a {card}-element set is too large")
            }
        }
    }
}

impl std::error::Error for EvalError {}

/// Variable assignment for evaluation.
pub type Assignment = BTreeMap<String, HfSet>;

fn eval_expr(e: &RsExpr, assign: &Assignment) -> Result<HfSet, EvalError> {
    match e {
        RsExpr::Var(name) => assign
            .get(name)
            .cloned()
            .ok_or_else(|| EvalError::UnassignedVariable { name: name.clone() }),
        RsExpr::Term(RsTerm::UBar(u)) => Ok(u.clone()),
        RsExpr::Term(other) => Err(EvalError::NotEvaluable {
            what: other.to_string(),
        }),
    }
}

const SUBSET_ENUM_CAP: usize = 20;

/// Tarskian truth over `(M, ∈)` for bounded formulas.
///
/// Bounded quantifiers range over the true members of the bound's value;
/// subset-bounded quantifiers over its true subsets, all of which must be
/// present in `M`.
pub fn eval_formula(
    m: &FiniteUniverse,
    formula: &RsFormula,
    assign: &Assignment,
) -> Result<bool, EvalError> {
    match formula {
        RsFormula::Member(s, t) => {
            let sv = eval_expr(s, assign)?;
            let tv = eval_expr(t, assign)?;
            Ok(tv.contains(&sv))
        }
        RsFormula::NotMember(s, t) => {
            let sv = eval_expr(s, assign)?;
            let tv = eval_expr(t, assign)?;
            Ok(!tv.contains(&sv))
        }
        RsFormula::And(a, b) => {
            Ok(eval_formula(m, a, assign)? && eval_formula(m, b, assign)?)
        }
        RsFormula::Or(a, b) => {
            Ok(eval_formula(m, a, assign)? || eval_formula(m, b, assign)?)
        }
        RsFormula::BoundedAll(var, bound, body) => {
            let bv = eval_expr(bound, assign)?;
            for el in bv.children() {
                let mut inner = assign.clone();
                inner.insert(var.clone(), el.clone());
                if !eval_formula(m, body, &inner)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        RsFormula::BoundedEx(var, bound, body) => {
            let bv = eval_expr(bound, assign)?;
            for el in bv.children() {
                let mut inner = assign.clone();
                inner.insert(var.clone(), el.clone());
                if eval_formula(m, body, &inner)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        RsFormula::SubsetAll(var, bound, body) | RsFormula::SubsetEx(var, bound, body) => {
            let bv = eval_expr(bound, assign)?;
            let subsets = subsets_of(&bv)?;
            // Strictness first: the whole subset space must live in M.
            for s in &subsets {
                if !m.contains(s) {
                    return Err(EvalError::QuantifierEscape { missing: s.clone() });
                }
            }
            let forall = matches!(formula, RsFormula::SubsetAll(..));
            for s in subsets {
                let mut inner = assign.clone();
                inner.insert(var.clone(), s);
                let truth = eval_formula(m, body, &inner)?;
                if forall && !truth {
                    return Ok(false);
                }
                if !forall && truth {
                    return Ok(true);
                }
            }
            Ok(forall)
        }
        RsFormula::All(..) | RsFormula::Ex(..) => Err(EvalError::UnboundedQuantifier),
    }
}

fn subsets_of(v: &HfSet) -> Result<Vec<HfSet>, EvalError> {
    let n = v.card();
    if n > SUBSET_ENUM_CAP {
        return Err(EvalError::SubsetSpaceTooLarge { card: n });
    }
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u64..(1u64 << n) {
        let subset: Vec<HfSet> = v
            .children()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, e)| e.clone())
            .collect();
        out.push(HfSet::new(subset));
    }
    Ok(out)
}

/// One definability step: `{a ∈ M : A(a)}` as a set.
pub fn definable_subset(
    m: &FiniteUniverse,
    formula: &RsFormula,
    var: &str,
    assign: &Assignment,
) -> Result<HfSet, EvalError> {
    let mut selected = Vec::new();
    for el in m.elements() {
        let mut inner = assign.clone();
        inner.insert(var.to_string(), el.clone());
        if eval_formula(m, formula, &inner)? {
            selected.push(el.clone());
        }
    }
    Ok(HfSet::new(selected))
}
