//! Finite preorders, read as finite topological spaces.
//!
//! A preorder `≤` on a finite carrier determines exactly one topology in which
//! the open sets are the up-sets and the closed sets are the down-sets. The
//! closure of a point `y` is `↓y`, so `x ≤ y` reads "x lies in the closure of
//! y". Continuous maps between such spaces are exactly the monotone maps.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Shared handle to an immutable space. Maps hold their endpoints through it.
pub type Space = Arc<FinPreorder>;

/// Hard cap on size bounds accepted by enumeration and universe construction.
pub const DEFAULT_SIZE_CAP: usize = 5;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinPreorder {
    labels: Vec<String>,
    // row-major n*n, leq[x * n + y] <=> x <= y
    leq: Vec<bool>,
}

impl FinPreorder {
    /// Builds a space from labels and generating pairs `(x, y)` meaning
    /// `x ≤ y`. The relation is the reflexive-transitive closure of the
    /// generators; element order is label order.
    pub fn build<S: AsRef<str>>(labels: &[S], generators: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
        check_distinct(&labels)?;
        let n = labels.len();
        let index = |name: &str| {
            labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| Error::UnknownLabel(name.to_string()))
        };
        let mut leq = vec![false; n * n];
        for (x, y) in generators {
            let (x, y) = (index(x.as_ref())?, index(y.as_ref())?);
            leq[x * n + y] = true;
        }
        close(n, &mut leq);
        Ok(Self { labels, leq })
    }

    /// Wraps an explicit relation, checking that it is a preorder.
    pub fn from_relation(labels: Vec<String>, leq: Vec<bool>) -> Result<Self> {
        check_distinct(&labels)?;
        let n = labels.len();
        if leq.len() != n * n {
            return Err(Error::RelationShape {
                expected: n * n,
                got: leq.len(),
            });
        }
        let p = Self { labels, leq };
        for x in 0..n {
            if !p.leq(x, x) {
                return Err(Error::NotReflexive(p.labels[x].clone()));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if p.leq(x, y) && p.leq(y, z) && !p.leq(x, z) {
                        return Err(Error::NotTransitive(
                            p.labels[x].clone(),
                            p.labels[y].clone(),
                            p.labels[z].clone(),
                        ));
                    }
                }
            }
        }
        Ok(p)
    }

    pub(crate) fn from_parts_unchecked(labels: Vec<String>, leq: Vec<bool>) -> Self {
        debug_assert_eq!(leq.len(), labels.len() * labels.len());
        Self { labels, leq }
    }

    pub fn discrete<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        Self::build(labels, &[])
    }

    pub fn indiscrete<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
        check_distinct(&labels)?;
        let n = labels.len();
        Ok(Self {
            labels,
            leq: vec![true; n * n],
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    /// Flat row-major relation matrix.
    pub fn relation(&self) -> &[bool] {
        &self.leq
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    /// `x ≤ y` and `y ≤ x`.
    pub fn equivalent(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) && self.leq(y, x)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Smallest open set containing `x`.
    pub fn up_set(&self, x: usize) -> Vec<bool> {
        self.points().map(|y| self.leq(x, y)).collect()
    }

    /// Closure of the point `x`.
    pub fn down_set(&self, x: usize) -> Vec<bool> {
        self.points().map(|y| self.leq(y, x)).collect()
    }

    /// Closure of a subset: everything below some member.
    pub fn down_closure(&self, subset: &[bool]) -> Vec<bool> {
        self.points()
            .map(|y| self.points().any(|x| subset[x] && self.leq(y, x)))
            .collect()
    }

    /// Interior-dual: everything above some member (smallest open superset).
    pub fn up_closure(&self, subset: &[bool]) -> Vec<bool> {
        self.points()
            .map(|y| self.points().any(|x| subset[x] && self.leq(x, y)))
            .collect()
    }

    /// Open sets are up-sets.
    pub fn is_open(&self, subset: &[bool]) -> bool {
        self.up_closure(subset) == subset
    }

    /// Closed sets are down-sets.
    pub fn is_closed(&self, subset: &[bool]) -> bool {
        self.down_closure(subset) == subset
    }

    /// True when `leq` equals its own reflexive-transitive closure.
    pub fn is_closed_relation(&self) -> bool {
        let mut copy = self.leq.clone();
        close(self.len(), &mut copy);
        copy == self.leq
    }

    /// The same order with fresh labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::RelationShape {
                expected: self.len(),
                got: labels.len(),
            });
        }
        check_distinct(&labels)?;
        Ok(Self {
            labels,
            leq: self.leq.clone(),
        })
    }

    /// Structural equality ignoring labels.
    pub fn same_order(&self, other: &Self) -> bool {
        self.leq == other.leq
    }

    /// Whether some bijection carries one order onto the other.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.len() == other.len() && canonical_key(self) == canonical_key(other)
    }
}

impl fmt::Debug for FinPreorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for x in self.points() {
            for y in self.points() {
                if x != y && self.leq(x, y) {
                    if !first {
                        write!(f, ", ")?;
                    }
                    first = false;
                    write!(f, "{}<={}", self.labels[x], self.labels[y])?;
                }
            }
        }
        write!(f, " | {}}}", self.labels.join(" "))
    }
}

fn check_distinct(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Reflexive-transitive closure in place (Warshall).
fn close(n: usize, leq: &mut [bool]) {
    for x in 0..n {
        leq[x * n + x] = true;
    }
    for k in 0..n {
        for x in 0..n {
            if leq[x * n + k] {
                for y in 0..n {
                    if leq[k * n + y] {
                        leq[x * n + y] = true;
                    }
                }
            }
        }
    }
}

/// Canonical labels `e0 .. e{n-1}` used by enumerated spaces.
pub fn canonical_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

/// All labeled preorders on carriers of size `0..=max_size`, each exactly
/// once, grouped by size.
///
/// Preorders on `k` points are grown from those on `k - 1` points: the new
/// point `e` is placed by choosing its down-set `D = {x : x ≤ e}` and up-set
/// `U = {x : e ≤ x}` among the old points, subject to `D` being a down-set,
/// `U` an up-set, and `d ≤ u` for every `d ∈ D`, `u ∈ U`. Every preorder on
/// `k` points restricts to one on the first `k - 1`, and the pair `(D, U)`
/// recovers it, so each is produced once.
pub fn enumerate_preorders(max_size: usize) -> Result<Vec<FinPreorder>> {
    enumerate_preorders_capped(max_size, DEFAULT_SIZE_CAP)
}

pub fn enumerate_preorders_capped(max_size: usize, cap: usize) -> Result<Vec<FinPreorder>> {
    if max_size > cap {
        return Err(Error::SizeCap {
            requested: max_size,
            cap,
        });
    }
    let mut out = Vec::new();
    let mut layer: Vec<Vec<bool>> = vec![Vec::new()];
    for k in 0..=max_size {
        if k > 0 {
            layer = layer.iter().flat_map(|rel| extend_by_one(k - 1, rel)).collect();
        }
        let labels = canonical_labels(k);
        out.extend(
            layer
                .iter()
                .map(|rel| FinPreorder::from_parts_unchecked(labels.clone(), rel.clone())),
        );
    }
    Ok(out)
}

fn extend_by_one(n: usize, rel: &[bool]) -> Vec<Vec<bool>> {
    let leq = |x: usize, y: usize| rel[x * n + y];
    let subsets = 1usize << n;
    let is_down = |mask: usize| {
        (0..n).all(|x| mask & (1 << x) == 0 || (0..n).all(|y| !leq(y, x) || mask & (1 << y) != 0))
    };
    let is_up = |mask: usize| {
        (0..n).all(|x| mask & (1 << x) == 0 || (0..n).all(|y| !leq(x, y) || mask & (1 << y) != 0))
    };
    let downs: Vec<usize> = (0..subsets).filter(|&m| is_down(m)).collect();
    let ups: Vec<usize> = (0..subsets).filter(|&m| is_up(m)).collect();
    let m = n + 1;
    let mut out = Vec::new();
    for &d in &downs {
        for &u in &ups {
            let compatible = (0..n).all(|x| {
                d & (1 << x) == 0 || (0..n).all(|y| u & (1 << y) == 0 || leq(x, y))
            });
            if !compatible {
                continue;
            }
            let mut next = vec![false; m * m];
            for x in 0..n {
                for y in 0..n {
                    next[x * m + y] = leq(x, y);
                }
                next[x * m + n] = d & (1 << x) != 0;
                next[n * m + x] = u & (1 << x) != 0;
            }
            next[n * m + n] = true;
            out.push(next);
        }
    }
    out
}

/// Lexicographically least relation matrix over all relabelings.
fn canonical_key(p: &FinPreorder) -> Vec<bool> {
    let n = p.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let key: Vec<bool> = (0..n * n)
            .map(|k| p.leq(perm[k / n], perm[k % n]))
            .collect();
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Keeps the first representative of each isomorphism class, preserving
/// input order. Not used by the labeled universes.
pub fn dedup_isomorphic(spaces: &[FinPreorder]) -> Vec<FinPreorder> {
    let mut seen = HashSet::new();
    spaces
        .iter()
        .filter(|p| seen.insert((p.len(), canonical_key(p))))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton() {
        let p = FinPreorder::build(&["a"], &[]).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.leq(0, 0));
    }

    #[test]
    fn sierpinski_has_three_related_pairs() {
        let p = FinPreorder::build(&["b", "s"], &[("b", "s")]).unwrap();
        assert_eq!(p.relation().iter().filter(|&&r| r).count(), 3);
        assert!(p.leq(0, 1) && !p.leq(1, 0));
    }

    #[test]
    fn two_cycle_closes_to_indiscrete() {
        let p = FinPreorder::build(&["x", "y"], &[("x", "y"), ("y", "x")]).unwrap();
        assert_eq!(p, FinPreorder::indiscrete(&["x", "y"]).unwrap());
    }

    #[test]
    fn chain_generators_close_transitively() {
        let p = FinPreorder::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
        assert!(p.is_closed_relation());
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            FinPreorder::build(&["a", "a"], &[]),
            Err(Error::DuplicateLabel("a".into()))
        );
        assert_eq!(
            FinPreorder::build(&["a"], &[("a", "z")]),
            Err(Error::UnknownLabel("z".into()))
        );
    }

    #[test]
    fn empty_space_is_legal() {
        let p = FinPreorder::build::<&str>(&[], &[]).unwrap();
        assert!(p.is_empty());
    }

    #[test]
    fn from_relation_rejects_non_preorders() {
        let labels = canonical_labels(3);
        let mut rel = vec![false; 9];
        for x in 0..3 {
            rel[x * 3 + x] = true;
        }
        rel[1] = true; // e0 <= e1
        rel[5] = true; // e1 <= e2
        assert!(matches!(
            FinPreorder::from_relation(labels.clone(), rel.clone()),
            Err(Error::NotTransitive(..))
        ));
        rel[2] = true;
        assert!(FinPreorder::from_relation(labels.clone(), rel.clone()).is_ok());
        rel[0] = false;
        assert!(matches!(
            FinPreorder::from_relation(labels, rel),
            Err(Error::NotReflexive(_))
        ));
    }

    #[test]
    fn open_and_closed_sets_follow_the_order() {
        let p = FinPreorder::build(&["b", "s"], &[("b", "s")]).unwrap();
        assert!(p.is_open(&[false, true]));
        assert!(!p.is_open(&[true, false]));
        assert!(p.is_closed(&[true, false]));
        assert_eq!(p.down_closure(&[false, true]), vec![true, true]);
    }

    #[test]
    fn enumeration_counts() {
        let all = enumerate_preorders(4).unwrap();
        let mut counts = [0usize; 5];
        for p in &all {
            counts[p.len()] += 1;
        }
        assert_eq!(counts, [1, 1, 4, 29, 355]);
    }

    #[test]
    fn enumeration_respects_cap() {
        assert_eq!(
            enumerate_preorders(6),
            Err(Error::SizeCap {
                requested: 6,
                cap: DEFAULT_SIZE_CAP
            })
        );
        assert!(enumerate_preorders_capped(2, 1).is_err());
    }

    #[test]
    fn enumeration_is_deterministic_and_distinct() {
        let a = enumerate_preorders(3).unwrap();
        let b = enumerate_preorders(3).unwrap();
        assert_eq!(a, b);
        let set: HashSet<_> = a.iter().collect();
        assert_eq!(set.len(), a.len());
        assert!(a.iter().all(|p| p.is_closed_relation()));
    }

    #[test]
    fn unlabeled_counts() {
        // unlabeled preorders (finite topologies up to homeomorphism): 1, 1, 3, 9, 33
        let all = enumerate_preorders(4).unwrap();
        let reps = dedup_isomorphic(&all);
        let mut counts = [0usize; 5];
        for p in &reps {
            counts[p.len()] += 1;
        }
        assert_eq!(counts, [1, 1, 3, 9, 33]);
    }

    #[test]
    fn isomorphism_ignores_labels() {
        let a = FinPreorder::build(&["b", "s"], &[("b", "s")]).unwrap();
        let b = FinPreorder::build(&["s", "b"], &[("b", "s")]).unwrap();
        assert!(!a.same_order(&b));
        assert!(a.is_isomorphic(&b));
    }
}
