//! Exhaustive agreement checks between the lifting characterizations and
//! the direct definitions they restate.
//!
//! Map-quantified suites run over `Universe(min(max_size, 3))`;
//! space-quantified suites run over every labeled preorder of size at most
//! `max_size`. The mono/epi and two-negations suites need two-point test
//! objects (over `Universe(1)`, `EMPTY -> PT` cancels vacuously and the two
//! classes coincide), so they never drop below `Universe(2)`.

use std::collections::HashSet;
use std::sync::Arc;

use finlift::characterize::{characterize, oracle, Property, Subject};
use finlift::oracle::{has_induced_topology, is_injective, is_surjective, is_t1};
use finlift::{
    builtin, enumerate_preorders, is_epi_by_cancellation, is_epi_upto, is_mono_by_cancellation, is_mono_upto, orthogonal_class,
    LiftSession, MonotoneMap, Side, Square, Universe,
};
use rayon::prelude::*;
use serde_json::{json, Value};

pub const MAP_SUITE_CAP: usize = 3;
pub const STRUCTURAL_SUITE_FLOOR: usize = 2;

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: String,
    pub instances: usize,
    pub mismatches: usize,
    /// Counterexample squares reported by failing lifts, in instance order.
    pub counterexamples: Vec<Square>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub max_size: usize,
    pub suites: Vec<SuiteOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteOutcome::passed)
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("{:<22} {:>10} {:>11}  status\n", "suite", "instances", "mismatches");
        for s in &self.suites {
            out.push_str(&format!(
                "{:<22} {:>10} {:>11}  {}\n",
                s.name,
                s.instances,
                s.mismatches,
                if s.passed() { "ok" } else { "FAIL" }
            ));
        }
        out.push_str(if self.passed() { "all suites pass\n" } else { "some suites FAILED\n" });
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "format": finlift::notation::FORMAT_VERSION,
            "max_size": self.max_size,
            "passed": self.passed(),
            "suites": self.suites.iter().map(|s| json!({
                "name": s.name,
                "instances": s.instances,
                "mismatches": s.mismatches,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Characterization vs oracle for `property` over the given subjects.
pub fn property_suite(property: Property, subjects: Vec<Subject>) -> SuiteOutcome {
    let rows: Vec<(bool, Option<Square>)> = subjects
        .par_iter()
        .map(|s| {
            let r = characterize(property, s).expect("subject kind matches property");
            let direct = oracle(property, s).expect("subject kind matches property");
            (r.holds != direct, r.counterexample)
        })
        .collect();
    collect_rows(property.id().to_string(), rows)
}

fn collect_rows(name: String, rows: Vec<(bool, Option<Square>)>) -> SuiteOutcome {
    SuiteOutcome {
        name,
        instances: rows.len(),
        mismatches: rows.iter().filter(|(m, _)| *m).count(),
        counterexamples: rows.into_iter().filter_map(|(_, sq)| sq).collect(),
    }
}

pub fn map_subjects(universe: &Universe) -> Vec<Subject> {
    universe.maps.iter().cloned().map(Subject::Map).collect()
}

/// Every labeled preorder of size at most `max_size`.
pub fn space_subjects(max_size: usize) -> finlift::Result<Vec<Subject>> {
    Ok(enumerate_preorders(max_size)?
        .into_iter()
        .map(|p| Subject::Space(Arc::new(p)))
        .collect())
}

/// Lifting readings of mono and epi against cancellation and against
/// injectivity / surjectivity.
pub fn mono_epi_suites(universe: &Universe) -> [SuiteOutcome; 2] {
    let rows: Vec<(bool, bool)> = universe
        .maps
        .par_iter()
        .map(|f| {
            let mono = is_mono_upto(f, universe);
            let epi = is_epi_upto(f, universe);
            (
                mono != is_mono_by_cancellation(f, universe) || mono != is_injective(f),
                epi != is_epi_by_cancellation(f, universe) || epi != is_surjective(f),
            )
        })
        .collect();
    let suite = |name: &str, pick: fn(&(bool, bool)) -> bool| SuiteOutcome {
        name: name.to_string(),
        instances: rows.len(),
        mismatches: rows.iter().filter(|r| pick(r)).count(),
        counterexamples: Vec::new(),
    };
    [suite("mono", |r| r.0), suite("epi", |r| r.1)]
}

/// `f ⧄ f` exactly for the isomorphisms.
pub fn self_lifting_suite(maps: &[MonotoneMap]) -> SuiteOutcome {
    let rows: Vec<(bool, Option<Square>)> = maps
        .par_iter()
        .map(|f| {
            let r = LiftSession::new().check(f, f);
            (r.holds != f.is_isomorphism(), r.counterexample)
        })
        .collect();
    collect_rows("self-lifting".to_string(), rows)
}

/// One test map, two negations: the left class of `SIERP_TO_PT` is the
/// induced-topology maps, its right class over maps into a point is the T1
/// spaces, and the two classes differ. Counts one instance per map plus one
/// for the inequality of the classes.
pub fn two_negations_suite(universe: &Universe) -> SuiteOutcome {
    let test = [builtin::sierp_to_point()];
    let left = orthogonal_class(Side::Left, &test, universe);
    let right = orthogonal_class(Side::Right, &test, universe);
    let left_set: HashSet<&MonotoneMap> = left.iter().collect();
    let right_set: HashSet<&MonotoneMap> = right.iter().collect();
    let mut mismatches = 0;
    for f in &universe.maps {
        if left_set.contains(f) != has_induced_topology(f) {
            mismatches += 1;
        }
        if f.target().len() == 1 && right_set.contains(f) != is_t1(f.source()) {
            mismatches += 1;
        }
    }
    if left_set == right_set {
        mismatches += 1;
    }
    SuiteOutcome {
        name: "two-negations".to_string(),
        instances: universe.maps.len() + 1,
        mismatches,
        counterexamples: Vec::new(),
    }
}

/// Runs every suite. `max_size` must be in `1..=4`.
pub fn verify_paper(max_size: usize) -> finlift::Result<Report> {
    if !(1..=4).contains(&max_size) {
        return Err(finlift::Error::SizeCap {
            requested: max_size,
            cap: 4,
        });
    }
    let maps_u = Universe::new(max_size.min(MAP_SUITE_CAP))?;
    let structural_u = if maps_u.max_size < STRUCTURAL_SUITE_FLOOR {
        Universe::new(STRUCTURAL_SUITE_FLOOR)?
    } else {
        maps_u.clone()
    };
    let spaces = space_subjects(max_size)?;

    let mut suites = Vec::new();
    for p in [Property::Surjective, Property::Injective] {
        suites.push(property_suite(p, map_subjects(&maps_u)));
    }
    for p in [Property::Connected, Property::T0, Property::T1, Property::Hausdorff] {
        suites.push(property_suite(p, spaces.clone()));
    }
    for p in [Property::Dense, Property::Induced, Property::Pi0Injective] {
        suites.push(property_suite(p, map_subjects(&maps_u)));
    }
    suites.extend(mono_epi_suites(&structural_u));
    suites.push(self_lifting_suite(&maps_u.maps));
    suites.push(two_negations_suite(&structural_u));
    Ok(Report { max_size, suites })
}
