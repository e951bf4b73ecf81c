//! Turning a parsed program into values and running its queries.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::builtin;
use crate::characterize::{self, Property, Subject, SubjectKind};
use crate::error::Error;
use crate::lifting::{lifting_check, LiftResult};
use crate::map::{hom_enumerate, MonotoneMap};
use crate::preorder::{enumerate_preorders, Space};
use crate::universe::{
    is_epi_by_cancellation, is_epi_upto, is_mono_by_cancellation, is_mono_upto, orthogonal_class, Universe,
};

use super::ast::{Declaration, Program, Query};
use super::error::{ErrorKind, NotationError};

/// Named spaces and maps, built-ins included.
#[derive(Debug, Clone)]
pub struct Environment {
    pub spaces: BTreeMap<String, Space>,
    pub maps: BTreeMap<String, MonotoneMap>,
}

impl Default for Environment {
    fn default() -> Self {
        Self::builtins()
    }
}

impl Environment {
    pub fn builtins() -> Self {
        let spaces = builtin::SPACE_NAMES
            .iter()
            .map(|&n| (n.to_string(), builtin::space_by_name(n).unwrap()))
            .collect();
        let maps = builtin::MAP_NAMES
            .iter()
            .map(|&n| (n.to_string(), builtin::map_by_name(n).unwrap()))
            .collect();
        Self { spaces, maps }
    }

    pub fn space(&self, name: &str) -> Result<&Space, Error> {
        self.spaces
            .get(name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn map(&self, name: &str) -> Result<&MonotoneMap, Error> {
        self.maps
            .get(name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }
}

/// Builds every declared space and map. Fails on the first map that is not
/// monotone, located at the entry where the violation first shows up.
pub fn validate(program: &Program) -> Result<Environment, NotationError> {
    let mut env = Environment::builtins();
    for decl in &program.declarations {
        match decl {
            Declaration::Space(s) => {
                env.spaces.insert(s.name.clone(), Arc::new(s.space.clone()));
            }
            Declaration::Map(m) => {
                let source = env.spaces[&m.source].clone();
                let target = env.spaces[&m.target].clone();
                let assign: Vec<usize> = m
                    .assign
                    .iter()
                    .map(|(_, y)| target.index_of(y).expect("parser checked labels"))
                    .collect();
                let mut worst: Option<(usize, usize, usize)> = None;
                for x in source.points() {
                    for y in source.points() {
                        if source.leq(x, y) && !target.leq(assign[x], assign[y]) {
                            let at = if m.entry_pos[x] >= m.entry_pos[y] { x } else { y };
                            if worst.is_none_or(|(w, _, _)| m.entry_pos[at] < m.entry_pos[w]) {
                                worst = Some((at, x, y));
                            }
                        }
                    }
                }
                if let Some((at, x, y)) = worst {
                    return Err(NotationError::new(
                        m.entry_pos[at],
                        ErrorKind::NotMonotone {
                            map: m.name.clone(),
                            x: source.label(x).to_string(),
                            y: source.label(y).to_string(),
                            fx: target.label(assign[x]).to_string(),
                            fy: target.label(assign[y]).to_string(),
                        },
                    ));
                }
                let f = MonotoneMap::new(source, target, assign).expect("checked monotone");
                env.maps.insert(m.name.clone(), f);
            }
        }
    }
    Ok(env)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Lift(LiftResult),
    Check {
        property: Property,
        result: LiftResult,
        oracle: bool,
    },
    Orthogonal(Vec<MonotoneMap>),
    Mono {
        lifting: bool,
        cancellation: bool,
    },
    Epi {
        lifting: bool,
        cancellation: bool,
    },
    Hom(Vec<MonotoneMap>),
    /// Number of labeled preorders of each size `0..=N`.
    Enumerate(Vec<usize>),
}

impl Outcome {
    /// `Some` for yes/no queries.
    pub fn holds(&self) -> Option<bool> {
        match self {
            Outcome::Lift(r) | Outcome::Check { result: r, .. } => Some(r.holds),
            Outcome::Mono { lifting, .. } | Outcome::Epi { lifting, .. } => Some(*lifting),
            _ => None,
        }
    }

    pub fn lift_result(&self) -> Option<&LiftResult> {
        match self {
            Outcome::Lift(r) | Outcome::Check { result: r, .. } => Some(r),
            _ => None,
        }
    }

    /// Internal consistency: counterexamples commute and have no diagonal,
    /// characterizations agree with their oracles, and the lifting and
    /// cancellation readings of mono/epi agree.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(r) = self.lift_result() {
            match (&r.counterexample, r.holds) {
                (Some(sq), false) => {
                    if !sq.commutes() {
                        out.push("counterexample square does not commute".to_string());
                    }
                    if sq.diagonal().is_some() {
                        out.push("counterexample square has a diagonal".to_string());
                    }
                }
                (None, false) => out.push("failing result without counterexample".to_string()),
                (Some(_), true) => out.push("holding result with counterexample".to_string()),
                (None, true) => {}
            }
        }
        match self {
            Outcome::Check {
                property,
                result,
                oracle,
            } if result.holds != *oracle => out.push(format!(
                "lifting characterization of {property} disagrees with the direct definition"
            )),
            Outcome::Mono { lifting, cancellation } | Outcome::Epi { lifting, cancellation }
                if lifting != cancellation =>
            {
                out.push("lifting and cancellation readings disagree".to_string())
            }
            _ => {}
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryResult {
    pub query: Query,
    pub outcome: Outcome,
}

/// Runs one query. Names must already be resolved in `env`.
pub fn execute(query: &Query, env: &Environment) -> Result<QueryResult, Error> {
    let outcome = match query {
        Query::Lift { left, right } => Outcome::Lift(lifting_check(env.map(left)?, env.map(right)?)),
        Query::Check { property, subject } => {
            let subject = match property.subject() {
                SubjectKind::Space => Subject::Space(env.space(subject)?.clone()),
                SubjectKind::Map => Subject::Map(env.map(subject)?.clone()),
            };
            Outcome::Check {
                property: *property,
                result: characterize::characterize(*property, &subject)?,
                oracle: characterize::oracle(*property, &subject)?,
            }
        }
        Query::Orthogonal { side, tests, size } => {
            let tests = tests
                .iter()
                .map(|t| env.map(t).cloned())
                .collect::<Result<Vec<_>, _>>()?;
            Outcome::Orthogonal(orthogonal_class(*side, &tests, &Universe::new(*size)?))
        }
        Query::Mono { map, size } => {
            let (f, u) = (env.map(map)?, Universe::new(*size)?);
            Outcome::Mono {
                lifting: is_mono_upto(f, &u),
                cancellation: is_mono_by_cancellation(f, &u),
            }
        }
        Query::Epi { map, size } => {
            let (f, u) = (env.map(map)?, Universe::new(*size)?);
            Outcome::Epi {
                lifting: is_epi_upto(f, &u),
                cancellation: is_epi_by_cancellation(f, &u),
            }
        }
        Query::Hom { source, target } => Outcome::Hom(hom_enumerate(env.space(source)?, env.space(target)?)),
        Query::Enumerate { size } => {
            let mut counts = vec![0; size + 1];
            for p in enumerate_preorders(*size)? {
                counts[p.len()] += 1;
            }
            Outcome::Enumerate(counts)
        }
    };
    Ok(QueryResult {
        query: query.clone(),
        outcome,
    })
}

/// Validates and runs every query in order.
pub fn run_program(program: &Program) -> Result<Vec<QueryResult>, RunError> {
    let env = validate(program).map_err(RunError::Notation)?;
    program
        .queries
        .iter()
        .map(|q| execute(q, &env).map_err(RunError::Engine))
        .collect()
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Notation(NotationError),
    #[error(transparent)]
    Engine(Error),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse;

    #[test]
    fn monotonicity_rejected_at_validation() {
        let p = parse("map f : SIERP -> SIERP = {\n  b |-> s,\n  s |-> b }").unwrap();
        let e = validate(&p).unwrap_err();
        assert!(e.is_validation());
        assert_eq!(e.pos.line, 3);
        assert!(e.to_string().contains("`f`"));
    }

    #[test]
    fn dense_point_into_sierpinski() {
        let p = parse("map f : PT -> SIERP = { pt |-> s }\ncheck dense f").unwrap();
        let results = run_program(&p).unwrap();
        assert_eq!(results[0].outcome.holds(), Some(true));
        assert!(results[0].outcome.violations().is_empty());
    }

    #[test]
    fn every_query_kind_runs() {
        let p = parse(
            "lift EMPTY_TO_PT |> CODIAG\nlift CODIAG |> CODIAG\ncheck T0 INDISC\n\
             orthogonal right [EMPTY_TO_PT] size 1\nmono CODIAG size 2\nepi CODIAG size 2\n\
             hom SIERP SIERP\nenumerate 3",
        )
        .unwrap();
        let r = run_program(&p).unwrap();
        assert_eq!(r[0].outcome.holds(), Some(true));
        assert_eq!(r[1].outcome.holds(), Some(false));
        assert_eq!(r[2].outcome.holds(), Some(false));
        assert!(matches!(&r[3].outcome, Outcome::Orthogonal(m) if m.len() == 2));
        assert_eq!(r[4].outcome.holds(), Some(false));
        assert_eq!(r[5].outcome.holds(), Some(true));
        assert!(matches!(&r[6].outcome, Outcome::Hom(m) if m.len() == 3));
        assert_eq!(r[7].outcome, Outcome::Enumerate(vec![1, 1, 4, 29]));
        assert!(r.iter().all(|q| q.outcome.violations().is_empty()));
    }
}
