use crate::characterize::Property;
use crate::preorder::FinPreorder;
use crate::universe::Side;

use super::error::Pos;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Program {
    pub declarations: Vec<Declaration>,
    pub queries: Vec<Query>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Declaration {
    Space(SpaceDecl),
    Map(MapDecl),
}

/// `space S = { ... }`, stored closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceDecl {
    pub name: String,
    pub space: FinPreorder,
}

/// `map f : S -> T = { a |-> x, ... }`. Entries are kept in source point
/// order regardless of how they were written.
#[derive(Debug, Clone)]
pub struct MapDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    pub assign: Vec<(String, String)>,
    /// Position of each entry, parallel to `assign`; not part of equality.
    pub(crate) entry_pos: Vec<Pos>,
}

impl MapDecl {
    pub fn new(name: impl Into<String>, source: impl Into<String>, target: impl Into<String>, assign: Vec<(String, String)>) -> Self {
        let entry_pos = vec![Pos::default(); assign.len()];
        Self {
            name: name.into(),
            source: source.into(),
            target: target.into(),
            assign,
            entry_pos,
        }
    }
}

impl PartialEq for MapDecl {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.source == other.source
            && self.target == other.target
            && self.assign == other.assign
    }
}

impl Eq for MapDecl {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Query {
    /// `lift f |> g`
    Lift { left: String, right: String },
    /// `check <property> <name>`
    Check { property: Property, subject: String },
    /// `orthogonal left|right [f, g] size N`
    Orthogonal { side: Side, tests: Vec<String>, size: usize },
    /// `mono f size N`
    Mono { map: String, size: usize },
    /// `epi f size N`
    Epi { map: String, size: usize },
    /// `hom S T`
    Hom { source: String, target: String },
    /// `enumerate N`
    Enumerate { size: usize },
}

impl Query {
    pub fn kind(&self) -> &'static str {
        match self {
            Query::Lift { .. } => "lift",
            Query::Check { .. } => "check",
            Query::Orthogonal { .. } => "orthogonal",
            Query::Mono { .. } => "mono",
            Query::Epi { .. } => "epi",
            Query::Hom { .. } => "hom",
            Query::Enumerate { .. } => "enumerate",
        }
    }
}
