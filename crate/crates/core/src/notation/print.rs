//! Canonical DSL text. Printed declarations and queries re-parse to equal
//! values, and two presentations of the same order print identically.

use crate::map::MonotoneMap;
use crate::preorder::FinPreorder;

use super::ast::{Declaration, MapDecl, Program, Query};

/// `{ a, b, c, a <> c, a < b }`: every label in point order, then one
/// `<>` item per non-minimal member of each equivalence class, then the
/// covering relations between classes, named by their first members.
pub fn space_literal(p: &FinPreorder) -> String {
    let n = p.len();
    if n == 0 {
        return "{ }".to_string();
    }
    let rep: Vec<usize> = p
        .points()
        .map(|x| p.points().find(|&y| p.equivalent(x, y)).unwrap())
        .collect();
    let mut items: Vec<String> = p.labels().to_vec();
    for x in p.points() {
        if rep[x] != x {
            items.push(format!("{} <> {}", p.label(rep[x]), p.label(x)));
        }
    }
    let reps: Vec<usize> = p.points().filter(|&x| rep[x] == x).collect();
    let strictly_below = |a: usize, b: usize| p.leq(a, b) && !p.leq(b, a);
    for &a in &reps {
        for &b in &reps {
            let covers = strictly_below(a, b)
                && !reps
                    .iter()
                    .any(|&c| strictly_below(a, c) && strictly_below(c, b));
            if covers {
                items.push(format!("{} < {}", p.label(a), p.label(b)));
            }
        }
    }
    format!("{{ {} }}", items.join(", "))
}

pub fn print_space(name: &str, p: &FinPreorder) -> String {
    format!("space {name} = {}", space_literal(p))
}

fn assignment_text<'a>(pairs: impl Iterator<Item = (&'a str, &'a str)>) -> String {
    let entries: Vec<String> = pairs.map(|(x, y)| format!("{x} |-> {y}")).collect();
    if entries.is_empty() {
        "{ }".to_string()
    } else {
        format!("{{ {} }}", entries.join(", "))
    }
}

/// `map name : source -> target = { ... }` for a map whose endpoints are
/// declared under the given names.
pub fn print_map(name: &str, source: &str, target: &str, f: &MonotoneMap) -> String {
    format!(
        "map {name} : {source} -> {target} = {}",
        assignment_text(f.labeled_pairs().into_iter())
    )
}

fn print_map_decl(m: &MapDecl) -> String {
    format!(
        "map {} : {} -> {} = {}",
        m.name,
        m.source,
        m.target,
        assignment_text(m.assign.iter().map(|(x, y)| (x.as_str(), y.as_str())))
    )
}

/// Assignment as `{ a |-> x, ... }`.
pub fn map_literal(f: &MonotoneMap) -> String {
    assignment_text(f.labeled_pairs().into_iter())
}

pub fn print_query(q: &Query) -> String {
    match q {
        Query::Lift { left, right } => format!("lift {left} |> {right}"),
        Query::Check { property, subject } => format!("check {property} {subject}"),
        Query::Orthogonal { side, tests, size } => {
            format!("orthogonal {side} [{}] size {size}", tests.join(", "))
        }
        Query::Mono { map, size } => format!("mono {map} size {size}"),
        Query::Epi { map, size } => format!("epi {map} size {size}"),
        Query::Hom { source, target } => format!("hom {source} {target}"),
        Query::Enumerate { size } => format!("enumerate {size}"),
    }
}

/// Declarations first, then queries, one statement per line.
pub fn print_program(program: &Program) -> String {
    let mut out = String::new();
    for d in &program.declarations {
        match d {
            Declaration::Space(s) => out.push_str(&print_space(&s.name, &s.space)),
            Declaration::Map(m) => out.push_str(&print_map_decl(m)),
        }
        out.push('\n');
    }
    for q in &program.queries {
        out.push_str(&print_query(q));
        out.push('\n');
    }
    out
}
