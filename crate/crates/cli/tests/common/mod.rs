//! Definitional brute-force oracles shared by the CLI test targets. Nothing
//! here calls into the engine's own predicates or hom enumeration; every
//! answer comes from enumerating raw functions and subsets.

#![allow(dead_code)]

use finlift::{FinPreorder, MonotoneMap, Square};

/// Every function `{0..n} -> {0..m}` as an assignment vector.
pub fn all_functions(n: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (0..m.pow(n as u32))
        .map(|code| (0..n).map(|i| (code / m.pow(i as u32)) % m).collect())
        .collect()
}

pub fn is_monotone(p: &FinPreorder, q: &FinPreorder, f: &[usize]) -> bool {
    p.points().all(|x| p.points().all(|y| !p.leq(x, y) || q.leq(f[x], f[y])))
}

pub fn monotone_functions(p: &FinPreorder, q: &FinPreorder) -> Vec<Vec<usize>> {
    all_functions(p.len(), q.len())
        .into_iter()
        .filter(|f| is_monotone(p, q, f))
        .collect()
}

/// Every subset of the points of `p`, as membership vectors.
pub fn subsets(p: &FinPreorder) -> Vec<Vec<bool>> {
    let n = p.len();
    (0u32..(1 << n))
        .map(|m| (0..n).map(|i| m & (1 << i) != 0).collect())
        .collect()
}

/// Open sets are the up-closed subsets.
pub fn is_open(p: &FinPreorder, s: &[bool]) -> bool {
    p.points().all(|x| !s[x] || p.points().all(|y| !p.leq(x, y) || s[y]))
}

pub fn open_sets(p: &FinPreorder) -> Vec<Vec<bool>> {
    subsets(p).into_iter().filter(|s| is_open(p, s)).collect()
}

fn is_clopen(p: &FinPreorder, s: &[bool]) -> bool {
    let complement: Vec<bool> = s.iter().map(|b| !b).collect();
    is_open(p, s) && is_open(p, &complement)
}

pub fn surjective(f: &MonotoneMap) -> bool {
    f.target().points().all(|y| f.assignment().contains(&y))
}

pub fn injective(f: &MonotoneMap) -> bool {
    let a = f.assignment();
    (0..a.len()).all(|x| (0..x).all(|y| a[x] != a[y]))
}

/// No clopen set other than the empty and full sets.
pub fn connected(p: &FinPreorder) -> bool {
    subsets(p).iter().all(|s| {
        let count = s.iter().filter(|&&b| b).count();
        count == 0 || count == p.len() || !is_clopen(p, s)
    })
}

/// Distinct points are told apart by some open set.
pub fn t0(p: &FinPreorder) -> bool {
    let opens = open_sets(p);
    pairs(p).all(|(x, y)| opens.iter().any(|u| u[x] != u[y]))
}

/// Each of two distinct points has an open set missing the other.
pub fn t1(p: &FinPreorder) -> bool {
    let opens = open_sets(p);
    pairs(p).all(|(x, y)| {
        opens.iter().any(|u| u[x] && !u[y]) && opens.iter().any(|u| u[y] && !u[x])
    })
}

/// Distinct points have disjoint open neighbourhoods.
pub fn hausdorff(p: &FinPreorder) -> bool {
    let opens = open_sets(p);
    pairs(p).all(|(x, y)| {
        opens.iter().any(|u| {
            u[x] && !u[y] && opens.iter().any(|v| v[y] && !v[x] && u.iter().zip(v).all(|(a, b)| !(a & b)))
        })
    })
}

fn pairs(p: &FinPreorder) -> impl Iterator<Item = (usize, usize)> + '_ {
    p.points().flat_map(move |x| p.points().filter(move |&y| y != x).map(move |y| (x, y)))
}

/// Every nonempty open set of the target meets the image.
pub fn dense(f: &MonotoneMap) -> bool {
    open_sets(f.target())
        .iter()
        .all(|u| !u.contains(&true) || f.assignment().iter().any(|&y| u[y]))
}

/// Every open set of the source is the preimage of an open set of the
/// target.
pub fn induced(f: &MonotoneMap) -> bool {
    let preimages: Vec<Vec<bool>> = open_sets(f.target())
        .iter()
        .map(|v| f.assignment().iter().map(|&y| v[y]).collect())
        .collect();
    open_sets(f.source()).iter().all(|u| preimages.contains(u))
}

/// Points not separated by any clopen set lie in one component.
pub fn same_component(p: &FinPreorder, x: usize, y: usize) -> bool {
    subsets(p).iter().filter(|s| is_clopen(p, s)).all(|s| s[x] == s[y])
}

/// Distinct components of the source stay distinct in the target.
pub fn pi0_injective(f: &MonotoneMap) -> bool {
    let (p, q, a) = (f.source(), f.target(), f.assignment());
    p.points()
        .all(|x| p.points().all(|y| !same_component(q, a[x], a[y]) || same_component(p, x, y)))
}

/// Bijective with monotone inverse.
pub fn isomorphism(f: &MonotoneMap) -> bool {
    if !injective(f) || !surjective(f) {
        return false;
    }
    let mut inverse = vec![0; f.target().len()];
    for (x, &y) in f.assignment().iter().enumerate() {
        inverse[y] = x;
    }
    is_monotone(f.target(), f.source(), &inverse)
}

/// `u ; f = v ; f` forces `u = v` for all `u, v : Z -> X`.
pub fn mono_by_cancellation(f: &MonotoneMap, zs: &[&FinPreorder]) -> bool {
    zs.iter().all(|z| {
        let homs = monotone_functions(z, f.source());
        homs.iter().all(|u| {
            homs.iter()
                .all(|v| u == v || u.iter().zip(v).any(|(&a, &b)| f.apply(a) != f.apply(b)))
        })
    })
}

/// `f ; u = f ; v` forces `u = v` for all `u, v : Y -> Z`.
pub fn epi_by_cancellation(f: &MonotoneMap, zs: &[&FinPreorder]) -> bool {
    zs.iter().all(|z| {
        let homs = monotone_functions(f.target(), z);
        homs.iter().all(|u| {
            homs.iter()
                .all(|v| u == v || f.assignment().iter().any(|&y| u[y] != v[y]))
        })
    })
}

/// A failing square is genuine when it commutes and no function `B -> X`
/// is a monotone diagonal.
pub fn audit(sq: &Square) -> Result<(), String> {
    let (f, g, top, bottom) = (&sq.left, &sq.right, &sq.top, &sq.bottom);
    let shapes_ok = top.source() == f.source()
        && top.target() == g.source()
        && bottom.source() == f.target()
        && bottom.target() == g.target();
    if !shapes_ok {
        return Err("square edges do not line up".into());
    }
    if !is_monotone(top.source(), top.target(), top.assignment())
        || !is_monotone(bottom.source(), bottom.target(), bottom.assignment())
    {
        return Err("square edge is not monotone".into());
    }
    let commutes = f
        .source()
        .points()
        .all(|a| bottom.apply(f.apply(a)) == g.apply(top.apply(a)));
    if !commutes {
        return Err("square does not commute".into());
    }
    let (b, x) = (f.target(), g.source());
    let lift = all_functions(b.len(), x.len()).into_iter().find(|d| {
        is_monotone(b, x, d)
            && f.source().points().all(|a| d[f.apply(a)] == top.apply(a))
            && b.points().all(|p| g.apply(d[p]) == bottom.apply(p))
    });
    match lift {
        Some(d) => Err(format!("diagonal {d:?} exists")),
        None => Ok(()),
    }
}

/// Every reflexive transitive relation on `n` points.
pub fn brute_force_preorder_count(n: usize) -> usize {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    (0u32..(1 << off.len()))
        .filter(|mask| {
            let mut rel = vec![false; n * n];
            for x in 0..n {
                rel[x * n + x] = true;
            }
            for (k, &(x, y)) in off.iter().enumerate() {
                rel[x * n + y] = mask & (1 << k) != 0;
            }
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(rel[x * n + y] && rel[y * n + z]) || rel[x * n + z])))
        })
        .count()
}
