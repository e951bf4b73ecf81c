//! The small spaces and maps the lifting characterizations are built from.
//!
//! | name     | space                | points          |
//! |----------|----------------------|-----------------|
//! | `EMPTY`  | `{}`                 |                 |
//! | `PT`     | `{•}`                | `pt`            |
//! | `TWO`    | `{•,•}` (discrete)   | `l`, `r`        |
//! | `SIERP`  | `{b < s}`            | `b`, `s`        |
//! | `INDISC` | `{x <> y}`           | `x`, `y`        |
//! | `VEE`    | `{l > m < r}`        | `l`, `m`, `r`   |
//!
//! Under the closed = down-set convention `b` is the closed point of
//! `SIERP` and `s` the open one; `l` and `r` are the open points of `VEE`
//! and `m` its closed point.

use std::sync::Arc;

use crate::map::MonotoneMap;
use crate::preorder::{FinPreorder, Space};

pub const SPACE_NAMES: [&str; 6] = ["EMPTY", "PT", "TWO", "SIERP", "INDISC", "VEE"];

pub const MAP_NAMES: [&str; 5] = [
    "EMPTY_TO_PT",
    "CODIAG",
    "SIERP_TO_PT",
    "INDISC_TO_PT",
    "PT_TO_SIERP_CLOSED",
];

fn space(labels: &[&str], generators: &[(&str, &str)]) -> Space {
    Arc::new(FinPreorder::build(labels, generators).expect("built-in space"))
}

fn map(source: Space, target: Space, assign: Vec<usize>) -> MonotoneMap {
    MonotoneMap::new(source, target, assign).expect("built-in map")
}

pub fn empty() -> Space {
    space(&[], &[])
}

pub fn point() -> Space {
    space(&["pt"], &[])
}

pub fn two() -> Space {
    space(&["l", "r"], &[])
}

pub fn sierpinski() -> Space {
    space(&["b", "s"], &[("b", "s")])
}

pub fn indiscrete_pair() -> Space {
    space(&["x", "y"], &[("x", "y"), ("y", "x")])
}

pub fn vee() -> Space {
    space(&["l", "m", "r"], &[("m", "l"), ("m", "r")])
}

pub fn empty_to_point() -> MonotoneMap {
    map(empty(), point(), vec![])
}

/// `{•,•} -> {•}`.
pub fn codiagonal_two() -> MonotoneMap {
    map(two(), point(), vec![0, 0])
}

pub fn sierp_to_point() -> MonotoneMap {
    map(sierpinski(), point(), vec![0, 0])
}

pub fn indisc_to_point() -> MonotoneMap {
    map(indiscrete_pair(), point(), vec![0, 0])
}

/// `{•} -> {b < s}` hitting the closed point `b`.
pub fn point_to_sierp_closed() -> MonotoneMap {
    map(point(), sierpinski(), vec![0])
}

pub fn vee_to_point() -> MonotoneMap {
    map(vee(), point(), vec![0, 0, 0])
}

/// The unique map `X -> {•}`.
pub fn to_point(space: &Space) -> MonotoneMap {
    map(space.clone(), point(), vec![0; space.len()])
}

pub fn space_by_name(name: &str) -> Option<Space> {
    Some(match name {
        "EMPTY" => empty(),
        "PT" => point(),
        "TWO" => two(),
        "SIERP" => sierpinski(),
        "INDISC" => indiscrete_pair(),
        "VEE" => vee(),
        _ => return None,
    })
}

pub fn map_by_name(name: &str) -> Option<MonotoneMap> {
    Some(match name {
        "EMPTY_TO_PT" => empty_to_point(),
        "CODIAG" => codiagonal_two(),
        "SIERP_TO_PT" => sierp_to_point(),
        "INDISC_TO_PT" => indisc_to_point(),
        "PT_TO_SIERP_CLOSED" => point_to_sierp_closed(),
        _ => return None,
    })
}

/// Source and target names of each built-in map.
pub fn map_endpoints(name: &str) -> Option<(&'static str, &'static str)> {
    Some(match name {
        "EMPTY_TO_PT" => ("EMPTY", "PT"),
        "CODIAG" => ("TWO", "PT"),
        "SIERP_TO_PT" => ("SIERP", "PT"),
        "INDISC_TO_PT" => ("INDISC", "PT"),
        "PT_TO_SIERP_CLOSED" => ("PT", "SIERP"),
        _ => return None,
    })
}

pub fn is_reserved(name: &str) -> bool {
    SPACE_NAMES.contains(&name) || MAP_NAMES.contains(&name)
}
