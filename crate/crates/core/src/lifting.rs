//! Deciding the lifting property `f ⧄ g`.
//!
//! ```text
//!     A ---i---> X
//!     |        ^ |
//!   f |     d /  | g
//!     v      /   v
//!     B ---j---> Y
//! ```
//!
//! `f ⧄ g` holds when every commuting square (`f` then `j` equals `i` then
//! `g`) admits a diagonal `d : B -> X` with `f` then `d` equal to `i` and
//! `d` then `g` equal to `j`.

use std::collections::HashMap;
use std::rc::Rc;

use crate::map::{hom_assignments, MonotoneMap};
use crate::preorder::FinPreorder;

/// A square with `left: A -> B`, `right: X -> Y`, `top: A -> X` and
/// `bottom: B -> Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Square {
    pub left: MonotoneMap,
    pub right: MonotoneMap,
    pub top: MonotoneMap,
    pub bottom: MonotoneMap,
}

impl Square {
    /// Endpoints match and `left` then `bottom` equals `top` then `right`.
    pub fn commutes(&self) -> bool {
        self.left.source() == self.top.source()
            && self.left.target() == self.bottom.source()
            && self.top.target() == self.right.source()
            && self.bottom.target() == self.right.target()
            && self
                .left
                .source()
                .points()
                .all(|a| self.bottom.apply(self.left.apply(a)) == self.right.apply(self.top.apply(a)))
    }

    /// First diagonal in lexicographic order, if any.
    pub fn diagonal(&self) -> Option<MonotoneMap> {
        find_diagonal(
            &self.left,
            &self.right,
            self.top.assignment(),
            self.bottom.assignment(),
        )
        .map(|d| MonotoneMap::new_unchecked(self.left.target().clone(), self.right.source().clone(), d))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftResult {
    pub holds: bool,
    /// A commuting square with no diagonal; present iff `holds` is false.
    pub counterexample: Option<Square>,
    /// Diagonal of the first commuting square, when one was found.
    pub witness: Option<MonotoneMap>,
}

impl LiftResult {
    pub fn holding(witness: Option<MonotoneMap>) -> Self {
        Self {
            holds: true,
            counterexample: None,
            witness,
        }
    }

    pub fn failing(square: Square) -> Self {
        Self {
            holds: false,
            counterexample: Some(square),
            witness: None,
        }
    }
}

/// Search for a diagonal `d : B -> X` given raw top/bottom assignments.
///
/// Values on the image of `f` are forced by `f` then `d` = `i`; two points
/// of `A` with the same image but different tops fail immediately. Every
/// value must also sit over `j` (`d` then `g` = `j`). The remaining points
/// are filled by backtracking in index order, checking monotonicity against
/// points already placed.
pub fn find_diagonal(f: &MonotoneMap, g: &MonotoneMap, top: &[usize], bottom: &[usize]) -> Option<Vec<usize>> {
    let b = f.target();
    let x = g.source();
    let mut forced: Vec<Option<usize>> = vec![None; b.len()];
    for (a, &fa) in f.assignment().iter().enumerate() {
        match forced[fa] {
            Some(v) if v != top[a] => return None,
            _ => forced[fa] = Some(top[a]),
        }
    }
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(b.len());
    for point in b.points() {
        let over: Vec<usize> = match forced[point] {
            Some(v) => {
                if g.apply(v) == bottom[point] {
                    vec![v]
                } else {
                    return None;
                }
            }
            None => x.points().filter(|&v| g.apply(v) == bottom[point]).collect(),
        };
        if over.is_empty() {
            return None;
        }
        candidates.push(over);
    }
    let mut d = vec![0usize; b.len()];
    if place(b, x, &candidates, 0, &mut d) {
        Some(d)
    } else {
        None
    }
}

fn place(b: &FinPreorder, x: &FinPreorder, candidates: &[Vec<usize>], point: usize, d: &mut Vec<usize>) -> bool {
    if point == b.len() {
        return true;
    }
    for &v in &candidates[point] {
        let ok = (0..point).all(|q| {
            (!b.leq(q, point) || x.leq(d[q], v)) && (!b.leq(point, q) || x.leq(v, d[q]))
        });
        if ok {
            d[point] = v;
            if place(b, x, candidates, point + 1, d) {
                return true;
            }
        }
    }
    false
}

type HomKey = (Vec<bool>, Vec<bool>);

/// Hom-set cache for one query evaluation. Hom-sets are keyed by the
/// relations of source and target, so differently labeled copies share an
/// entry.
#[derive(Default)]
pub struct LiftSession {
    homs: HashMap<HomKey, Rc<Vec<Vec<usize>>>>,
}

impl LiftSession {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn hom(&mut self, p: &FinPreorder, q: &FinPreorder) -> Rc<Vec<Vec<usize>>> {
        let key = (p.relation().to_vec(), q.relation().to_vec());
        self.homs
            .entry(key)
            .or_insert_with(|| Rc::new(hom_assignments(p, q)))
            .clone()
    }

    /// Full check with counterexample and witness.
    ///
    /// Squares are visited with tops in the outer loop and bottoms in the
    /// inner loop, both lexicographic, so the reported counterexample is the
    /// first failing square in that order.
    pub fn check(&mut self, f: &MonotoneMap, g: &MonotoneMap) -> LiftResult {
        match self.scan(f, g) {
            Ok(witness) => LiftResult::holding(
                witness.map(|d| MonotoneMap::new_unchecked(f.target().clone(), g.source().clone(), d)),
            ),
            Err((top, bottom)) => LiftResult::failing(Square {
                left: f.clone(),
                right: g.clone(),
                top: MonotoneMap::new_unchecked(f.source().clone(), g.source().clone(), top),
                bottom: MonotoneMap::new_unchecked(f.target().clone(), g.target().clone(), bottom),
            }),
        }
    }

    pub fn holds(&mut self, f: &MonotoneMap, g: &MonotoneMap) -> bool {
        self.scan(f, g).is_ok()
    }

    #[allow(clippy::type_complexity)]
    fn scan(&mut self, f: &MonotoneMap, g: &MonotoneMap) -> Result<Option<Vec<usize>>, (Vec<usize>, Vec<usize>)> {
        let tops = self.hom(f.source(), g.source());
        let bottoms = self.hom(f.target(), g.target());
        let mut witness = None;
        for top in tops.iter() {
            let around_top: Vec<usize> = top.iter().map(|&x| g.apply(x)).collect();
            for bottom in bottoms.iter() {
                let commutes = f
                    .assignment()
                    .iter()
                    .zip(&around_top)
                    .all(|(&fa, &gi)| bottom[fa] == gi);
                if !commutes {
                    continue;
                }
                match find_diagonal(f, g, top, bottom) {
                    Some(d) => {
                        if witness.is_none() {
                            witness = Some(d);
                        }
                    }
                    None => return Err((top.clone(), bottom.clone())),
                }
            }
        }
        Ok(witness)
    }
}

/// Decide `f ⧄ g` in a fresh session.
pub fn lifting_check(f: &MonotoneMap, g: &MonotoneMap) -> LiftResult {
    LiftSession::new().check(f, g)
}
