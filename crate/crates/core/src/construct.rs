//! Coproducts, products and the fold/diagonal maps used by the mono and epi
//! readings of the lifting property.

use std::collections::HashSet;
use std::sync::Arc;

use crate::map::MonotoneMap;
use crate::preorder::{FinPreorder, Space};

fn distinct(labels: &[String]) -> bool {
    labels.iter().collect::<HashSet<_>>().len() == labels.len()
}

/// Disjoint union with no relations across the summands, and its two
/// injections. Labels get suffixes `_0` (left) and `_1` (right).
pub fn coproduct(p: &Space, q: &Space) -> (Space, MonotoneMap, MonotoneMap) {
    let (n, m) = (p.len(), q.len());
    let size = n + m;
    let labels: Vec<String> = p
        .labels()
        .iter()
        .map(|l| format!("{l}_0"))
        .chain(q.labels().iter().map(|l| format!("{l}_1")))
        .collect();
    let mut leq = vec![false; size * size];
    for x in p.points() {
        for y in p.points() {
            leq[x * size + y] = p.leq(x, y);
        }
    }
    for x in q.points() {
        for y in q.points() {
            leq[(n + x) * size + (n + y)] = q.leq(x, y);
        }
    }
    let sum = Arc::new(FinPreorder::from_parts_unchecked(labels, leq));
    let left = MonotoneMap::new_unchecked(p.clone(), sum.clone(), (0..n).collect());
    let right = MonotoneMap::new_unchecked(q.clone(), sum.clone(), (n..n + m).collect());
    (sum, left, right)
}

/// Componentwise order on pairs, and the two projections. Point `(x, y)`
/// sits at index `x * |q| + y`.
pub fn product(p: &Space, q: &Space) -> (Space, MonotoneMap, MonotoneMap) {
    let (n, m) = (p.len(), q.len());
    let size = n * m;
    let mut labels: Vec<String> = Vec::with_capacity(size);
    for x in p.labels() {
        for y in q.labels() {
            labels.push(format!("{x}_{y}"));
        }
    }
    if !distinct(&labels) {
        labels = (0..n)
            .flat_map(|x| (0..m).map(move |y| format!("p{x}_{y}")))
            .collect();
    }
    let mut leq = vec![false; size * size];
    for a in 0..size {
        for b in 0..size {
            leq[a * size + b] = p.leq(a / m, b / m) && q.leq(a % m, b % m);
        }
    }
    let prod = Arc::new(FinPreorder::from_parts_unchecked(labels, leq));
    let first = MonotoneMap::new_unchecked(prod.clone(), p.clone(), (0..size).map(|a| a / m).collect());
    let second = MonotoneMap::new_unchecked(prod.clone(), q.clone(), (0..size).map(|a| a % m).collect());
    (prod, first, second)
}

/// Fold map `P ⊔ P -> P`, the identity on each summand.
pub fn codiagonal(p: &Space) -> MonotoneMap {
    let (sum, _, _) = coproduct(p, p);
    let n = p.len();
    MonotoneMap::new_unchecked(sum, p.clone(), (0..2 * n).map(|x| x % n).collect())
}

/// `P -> P × P`, `x ↦ (x, x)`.
pub fn diagonal(p: &Space) -> MonotoneMap {
    let (prod, _, _) = product(p, p);
    let n = p.len();
    MonotoneMap::new_unchecked(p.clone(), prod, (0..n).map(|x| x * n + x).collect())
}
