use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::preorder::{FinPreorder, Space};

/// An order-preserving function between two finite preorders; a continuous
/// map between the corresponding finite spaces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonotoneMap {
    source: Space,
    target: Space,
    assign: Vec<usize>,
}

impl MonotoneMap {
    /// `assign[x]` is the image of source point `x`.
    pub fn new(source: Space, target: Space, assign: Vec<usize>) -> Result<Self> {
        if assign.len() != source.len() {
            return Err(Error::NotTotal {
                expected: source.len(),
                got: assign.len(),
            });
        }
        if let Some(&index) = assign.iter().find(|&&t| t >= target.len()) {
            return Err(Error::OutOfRange {
                index,
                size: target.len(),
            });
        }
        if let Some((x, y)) = first_violation(&source, &target, &assign) {
            return Err(Error::NotMonotone(
                source.label(x).to_string(),
                source.label(y).to_string(),
                target.label(assign[x]).to_string(),
                target.label(assign[y]).to_string(),
            ));
        }
        Ok(Self {
            source,
            target,
            assign,
        })
    }

    pub(crate) fn new_unchecked(source: Space, target: Space, assign: Vec<usize>) -> Self {
        debug_assert!(first_violation(&source, &target, &assign).is_none());
        Self {
            source,
            target,
            assign,
        }
    }

    /// Builds a map from `(source label, target label)` pairs; every source
    /// label must appear exactly once.
    pub fn from_labels<S: AsRef<str>>(source: Space, target: Space, pairs: &[(S, S)]) -> Result<Self> {
        let mut assign: Vec<Option<usize>> = vec![None; source.len()];
        for (x, y) in pairs {
            let (x, y) = (x.as_ref(), y.as_ref());
            let xi = source
                .index_of(x)
                .ok_or_else(|| Error::UnknownLabel(x.to_string()))?;
            let yi = target
                .index_of(y)
                .ok_or_else(|| Error::UnknownLabel(y.to_string()))?;
            if assign[xi].replace(yi).is_some() {
                return Err(Error::AssignedTwice(x.to_string()));
            }
        }
        let given = assign.iter().filter(|a| a.is_some()).count();
        let assign: Option<Vec<usize>> = assign.into_iter().collect();
        let assign = assign.ok_or(Error::NotTotal {
            expected: source.len(),
            got: given,
        })?;
        Self::new(source, target, assign)
    }

    pub fn identity(space: &Space) -> Self {
        Self::new_unchecked(space.clone(), space.clone(), space.points().collect())
    }

    /// The unique map out of the empty space.
    pub fn from_empty(target: &Space) -> Self {
        Self::new_unchecked(Arc::new(FinPreorder::from_parts_unchecked(vec![], vec![])), target.clone(), vec![])
    }

    /// Constant map at `point`; always monotone.
    pub fn constant(source: &Space, target: &Space, point: usize) -> Result<Self> {
        Self::new(source.clone(), target.clone(), vec![point; source.len()])
    }

    pub fn source(&self) -> &Space {
        &self.source
    }

    pub fn target(&self) -> &Space {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assign
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.assign[x]
    }

    /// `self` followed by `then`.
    pub fn then(&self, then: &MonotoneMap) -> Result<MonotoneMap> {
        compose(self, then)
    }

    pub fn image(&self) -> Vec<bool> {
        let mut image = vec![false; self.target.len()];
        for &y in &self.assign {
            image[y] = true;
        }
        image
    }

    pub fn is_isomorphism(&self) -> bool {
        is_isomorphism(self)
    }

    /// `(source label, target label)` pairs in source order.
    pub fn labeled_pairs(&self) -> Vec<(&str, &str)> {
        self.assign
            .iter()
            .enumerate()
            .map(|(x, &y)| (self.source.label(x), self.target.label(y)))
            .collect()
    }
}

impl fmt::Debug for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?} [", self.source, self.target)?;
        for (i, (x, y)) in self.labeled_pairs().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}|->{y}")?;
        }
        write!(f, "]")
    }
}

fn first_violation(source: &FinPreorder, target: &FinPreorder, assign: &[usize]) -> Option<(usize, usize)> {
    for x in source.points() {
        for y in source.points() {
            if source.leq(x, y) && !target.leq(assign[x], assign[y]) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Composite "`f` then `g`". The target of `f` must equal the source of `g`.
pub fn compose(f: &MonotoneMap, g: &MonotoneMap) -> Result<MonotoneMap> {
    if f.target != g.source {
        return Err(Error::NotComposable);
    }
    Ok(MonotoneMap::new_unchecked(
        f.source.clone(),
        g.target.clone(),
        f.assign.iter().map(|&y| g.assign[y]).collect(),
    ))
}

pub fn identity(space: &Space) -> MonotoneMap {
    MonotoneMap::identity(space)
}

/// Bijective with a monotone inverse.
pub fn is_isomorphism(f: &MonotoneMap) -> bool {
    let (n, m) = (f.source.len(), f.target.len());
    if n != m {
        return false;
    }
    let mut inverse = vec![usize::MAX; m];
    for (x, &y) in f.assign.iter().enumerate() {
        if inverse[y] != usize::MAX {
            return false;
        }
        inverse[y] = x;
    }
    first_violation(&f.target, &f.source, &inverse).is_none()
}

/// Assignment vectors of all monotone maps `p -> q`, lexicographic.
///
/// Points of `p` are assigned in index order; a candidate value is rejected
/// as soon as it breaks monotonicity against an already-assigned point.
pub fn hom_assignments(p: &FinPreorder, q: &FinPreorder) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    if q.is_empty() {
        return out;
    }
    let mut assign = vec![0usize; n];
    backtrack(p, q, 0, &mut assign, &mut out);
    out
}

fn backtrack(p: &FinPreorder, q: &FinPreorder, x: usize, assign: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if x == p.len() {
        out.push(assign.clone());
        return;
    }
    for t in q.points() {
        let ok = (0..x).all(|y| {
            (!p.leq(y, x) || q.leq(assign[y], t)) && (!p.leq(x, y) || q.leq(t, assign[y]))
        });
        if ok {
            assign[x] = t;
            backtrack(p, q, x + 1, assign, out);
        }
    }
}

/// All monotone maps `p -> q`, each once, lexicographic by assignment.
pub fn hom_enumerate(p: &Space, q: &Space) -> Vec<MonotoneMap> {
    hom_assignments(p, q)
        .into_iter()
        .map(|a| MonotoneMap::new_unchecked(p.clone(), q.clone(), a))
        .collect()
}
