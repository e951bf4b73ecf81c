//! Bounded universes of spaces and maps, and the questions that quantify
//! over them: orthogonal classes, self-lifting, and mono/epi.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::construct::{codiagonal, diagonal};
use crate::error::{Error, Result};
use crate::lifting::LiftSession;
use crate::map::{hom_assignments, hom_enumerate, MonotoneMap};
use crate::preorder::{enumerate_preorders, Space};

/// All labeled preorders of size at most `max_size` and every monotone map
/// between them.
#[derive(Debug, Clone)]
pub struct Universe {
    pub max_size: usize,
    pub spaces: Vec<Space>,
    /// Grouped by (source index, target index), lexicographic within.
    pub maps: Vec<MonotoneMap>,
}

impl Universe {
    pub fn new(max_size: usize) -> Result<Self> {
        let spaces: Vec<Space> = enumerate_preorders(max_size)?
            .into_iter()
            .map(Arc::new)
            .collect();
        let mut maps = Vec::new();
        for p in &spaces {
            for q in &spaces {
                maps.extend(hom_enumerate(p, q));
            }
        }
        Ok(Self {
            max_size,
            spaces,
            maps,
        })
    }

    pub fn isomorphisms(&self) -> Vec<MonotoneMap> {
        self.maps.iter().filter(|f| f.is_isomorphism()).cloned().collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(format!("expected `left` or `right`, found `{other}`")),
        }
    }
}

/// `Right`: every `g` with `t ⧄ g` for all tests. `Left`: every `f` with
/// `f ⧄ t` for all tests. An empty test list admits everything.
pub fn orthogonal_class(side: Side, tests: &[MonotoneMap], universe: &Universe) -> Vec<MonotoneMap> {
    let mut session = LiftSession::new();
    universe
        .maps
        .iter()
        .filter(|h| {
            tests.iter().all(|t| match side {
                Side::Right => session.holds(t, h),
                Side::Left => session.holds(h, t),
            })
        })
        .cloned()
        .collect()
}

/// Maps that lift against themselves.
pub fn self_lifting_scan(universe: &Universe) -> Vec<MonotoneMap> {
    let mut session = LiftSession::new();
    universe
        .maps
        .iter()
        .filter(|f| session.holds(f, f))
        .cloned()
        .collect()
}

/// `Z ⊔ Z -> Z ⧄ f` for every `Z` in the universe.
pub fn is_mono_upto(f: &MonotoneMap, universe: &Universe) -> bool {
    let mut session = LiftSession::new();
    universe
        .spaces
        .iter()
        .all(|z| session.holds(&codiagonal(z), f))
}

/// `f ⧄ Z -> Z × Z` for every `Z` in the universe.
pub fn is_epi_upto(f: &MonotoneMap, universe: &Universe) -> bool {
    let mut session = LiftSession::new();
    universe
        .spaces
        .iter()
        .all(|z| session.holds(f, &diagonal(z)))
}

/// Left cancellation: `u` then `f` = `v` then `f` forces `u = v`, for all
/// `u, v : Z -> X` with `Z` in the universe.
pub fn is_mono_by_cancellation(f: &MonotoneMap, universe: &Universe) -> bool {
    universe.spaces.iter().all(|z| {
        let mut composites = HashSet::new();
        hom_assignments(z, f.source())
            .into_iter()
            .all(|u| composites.insert(u.into_iter().map(|x| f.apply(x)).collect::<Vec<_>>()))
    })
}

/// Right cancellation: `f` then `p` = `f` then `q` forces `p = q`, for all
/// `p, q : Y -> Z` with `Z` in the universe.
pub fn is_epi_by_cancellation(f: &MonotoneMap, universe: &Universe) -> bool {
    universe.spaces.iter().all(|z| {
        let mut composites = HashSet::new();
        hom_assignments(f.target(), z)
            .into_iter()
            .all(|p| composites.insert(f.assignment().iter().map(|&y| p[y]).collect::<Vec<_>>()))
    })
}

/// Rejects bounds over `cap`.
pub fn check_size(requested: usize, cap: usize) -> Result<usize> {
    if requested > cap {
        Err(Error::SizeCap { requested, cap })
    } else {
        Ok(requested)
    }
}
