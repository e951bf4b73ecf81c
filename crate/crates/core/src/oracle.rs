//! Direct, set-level definitions of the properties the lifting engine
//! characterizes. Nothing here goes through a lifting check; these are the
//! ground truth the characterizations are compared against.

use crate::map::MonotoneMap;
use crate::preorder::{FinPreorder, Space};

pub fn is_surjective(f: &MonotoneMap) -> bool {
    f.image().iter().all(|&hit| hit)
}

pub fn is_injective(f: &MonotoneMap) -> bool {
    let mut seen = vec![false; f.target().len()];
    f.assignment()
        .iter()
        .all(|&y| !std::mem::replace(&mut seen[y], true))
}

/// Comparability graph connected. The empty space counts as connected.
pub fn is_connected(p: &FinPreorder) -> bool {
    pi0_components(p).1 <= 1
}

/// No two distinct points with `x ≤ y ≤ x`.
pub fn is_t0(p: &FinPreorder) -> bool {
    p.points()
        .all(|x| p.points().all(|y| x == y || !p.equivalent(x, y)))
}

/// The order is equality (the space is discrete).
pub fn is_t1(p: &FinPreorder) -> bool {
    p.points()
        .all(|x| p.points().all(|y| x == y || !p.leq(x, y)))
}

/// Closure of the image is the whole target.
pub fn has_dense_image(f: &MonotoneMap) -> bool {
    f.target().down_closure(&f.image()).iter().all(|&c| c)
}

/// The source order is pulled back from the target: `x ≤ x'` iff
/// `f(x) ≤ f(x')`.
pub fn has_induced_topology(f: &MonotoneMap) -> bool {
    let (p, q) = (f.source(), f.target());
    p.points().all(|x| {
        p.points()
            .all(|y| p.leq(x, y) == q.leq(f.apply(x), f.apply(y)))
    })
}

/// Distinct points have disjoint minimal open neighbourhoods.
pub fn is_hausdorff(p: &FinPreorder) -> bool {
    p.points().all(|x| {
        p.points()
            .all(|y| x == y || p.points().all(|z| !(p.leq(x, z) && p.leq(y, z))))
    })
}

/// Connected components of a finite space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi0Partition {
    pub space: Space,
    /// Component ids are numbered by first appearance in point order.
    pub component_of: Vec<usize>,
    pub component_count: usize,
}

fn pi0_components(p: &FinPreorder) -> (Vec<usize>, usize) {
    let n = p.len();
    let mut component = vec![usize::MAX; n];
    let mut count = 0;
    for start in p.points() {
        if component[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        component[start] = count;
        while let Some(x) = stack.pop() {
            for y in p.points() {
                if component[y] == usize::MAX && p.comparable(x, y) {
                    component[y] = count;
                    stack.push(y);
                }
            }
        }
        count += 1;
    }
    (component, count)
}

pub fn pi0(p: &Space) -> Pi0Partition {
    let (component_of, component_count) = pi0_components(p);
    Pi0Partition {
        space: p.clone(),
        component_of,
        component_count,
    }
}

/// Induced function on components: entry `c` is the target component of
/// source component `c`.
pub fn pi0_map(f: &MonotoneMap) -> Vec<usize> {
    let source = pi0(f.source());
    let target = pi0(f.target());
    let mut out = vec![usize::MAX; source.component_count];
    for x in f.source().points() {
        out[source.component_of[x]] = target.component_of[f.apply(x)];
    }
    out
}

pub fn pi0_injective(f: &MonotoneMap) -> bool {
    let components = pi0_map(f);
    let mut seen = std::collections::HashSet::new();
    components.into_iter().all(|c| seen.insert(c))
}
