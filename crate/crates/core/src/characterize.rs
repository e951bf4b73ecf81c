//! Classical properties restated as lifting properties against the
//! simplest counterexamples.
//!
//! | property        | test                                           |
//! |-----------------|------------------------------------------------|
//! | surjective      | `EMPTY_TO_PT ⧄ f`                              |
//! | injective       | `CODIAG ⧄ f`                                   |
//! | connected       | `X -> PT ⧄ CODIAG`                             |
//! | T0              | `INDISC_TO_PT ⧄ X -> PT`                       |
//! | T1              | `SIERP_TO_PT ⧄ X -> PT`                        |
//! | dense           | `f ⧄ PT_TO_SIERP_CLOSED`                       |
//! | induced         | `f ⧄ SIERP_TO_PT`                              |
//! | hausdorff       | `p ⧄ VEE -> PT` for every injective `p: TWO -> X` |
//! | pi0-injective   | `f ⧄ CODIAG`                                   |

use std::fmt;
use std::str::FromStr;

use crate::builtin;
use crate::error::{Error, Result};
use crate::lifting::{LiftResult, LiftSession};
use crate::map::{hom_enumerate, MonotoneMap};
use crate::oracle;
use crate::preorder::Space;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Surjective,
    Injective,
    Connected,
    T0,
    T1,
    Dense,
    Induced,
    Hausdorff,
    Pi0Injective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubjectKind {
    Space,
    Map,
}

impl SubjectKind {
    pub fn noun(self) -> &'static str {
        match self {
            SubjectKind::Space => "space",
            SubjectKind::Map => "map",
        }
    }
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::Surjective,
        Property::Injective,
        Property::Connected,
        Property::T0,
        Property::T1,
        Property::Dense,
        Property::Induced,
        Property::Hausdorff,
        Property::Pi0Injective,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Property::Surjective => "surjective",
            Property::Injective => "injective",
            Property::Connected => "connected",
            Property::T0 => "T0",
            Property::T1 => "T1",
            Property::Dense => "dense",
            Property::Induced => "induced",
            Property::Hausdorff => "hausdorff",
            Property::Pi0Injective => "pi0-injective",
        }
    }

    pub fn subject(self) -> SubjectKind {
        match self {
            Property::Connected | Property::T0 | Property::T1 | Property::Hausdorff => SubjectKind::Space,
            _ => SubjectKind::Map,
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Space(Space),
    Map(MonotoneMap),
}

impl Subject {
    pub fn kind(&self) -> SubjectKind {
        match self {
            Subject::Space(_) => SubjectKind::Space,
            Subject::Map(_) => SubjectKind::Map,
        }
    }
}

fn expect_space(property: Property, subject: &Subject) -> Result<&Space> {
    match subject {
        Subject::Space(s) => Ok(s),
        Subject::Map(_) => Err(kind_error(property)),
    }
}

fn expect_map(property: Property, subject: &Subject) -> Result<&MonotoneMap> {
    match subject {
        Subject::Map(f) => Ok(f),
        Subject::Space(_) => Err(kind_error(property)),
    }
}

fn kind_error(property: Property) -> Error {
    Error::ArgumentKind {
        property: property.id().to_string(),
        expected: property.subject().noun(),
    }
}

/// Decide `property` for `subject` through the lifting property alone.
pub fn characterize(property: Property, subject: &Subject) -> Result<LiftResult> {
    let mut session = LiftSession::new();
    Ok(match property {
        Property::Surjective => session.check(&builtin::empty_to_point(), expect_map(property, subject)?),
        Property::Injective => session.check(&builtin::codiagonal_two(), expect_map(property, subject)?),
        Property::Connected => {
            let x = expect_space(property, subject)?;
            session.check(&builtin::to_point(x), &builtin::codiagonal_two())
        }
        Property::T0 => {
            let x = expect_space(property, subject)?;
            session.check(&builtin::indisc_to_point(), &builtin::to_point(x))
        }
        Property::T1 => {
            let x = expect_space(property, subject)?;
            session.check(&builtin::sierp_to_point(), &builtin::to_point(x))
        }
        Property::Dense => session.check(expect_map(property, subject)?, &builtin::point_to_sierp_closed()),
        Property::Induced => session.check(expect_map(property, subject)?, &builtin::sierp_to_point()),
        Property::Hausdorff => {
            let x = expect_space(property, subject)?;
            let right = builtin::vee_to_point();
            let mut witness = None;
            // pairs of distinct points only; a collapsed pair never lifts
            for pair in hom_enumerate(&builtin::two(), x) {
                if pair.apply(0) == pair.apply(1) {
                    continue;
                }
                let r = session.check(&pair, &right);
                if !r.holds {
                    return Ok(r);
                }
                witness = witness.or(r.witness);
            }
            LiftResult::holding(witness)
        }
        Property::Pi0Injective => session.check(expect_map(property, subject)?, &builtin::codiagonal_two()),
    })
}

pub fn characterize_by_id(id: &str, subject: &Subject) -> Result<LiftResult> {
    characterize(id.parse()?, subject)
}

/// The direct definition of `property`, for comparison.
pub fn oracle(property: Property, subject: &Subject) -> Result<bool> {
    Ok(match property {
        Property::Surjective => oracle::is_surjective(expect_map(property, subject)?),
        Property::Injective => oracle::is_injective(expect_map(property, subject)?),
        Property::Connected => oracle::is_connected(expect_space(property, subject)?),
        Property::T0 => oracle::is_t0(expect_space(property, subject)?),
        Property::T1 => oracle::is_t1(expect_space(property, subject)?),
        Property::Dense => oracle::has_dense_image(expect_map(property, subject)?),
        Property::Induced => oracle::has_induced_topology(expect_map(property, subject)?),
        Property::Hausdorff => oracle::is_hausdorff(expect_space(property, subject)?),
        Property::Pi0Injective => oracle::pi0_injective(expect_map(property, subject)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indiscrete_pair_is_not_t0() {
        let r = characterize(Property::T0, &Subject::Space(builtin::indiscrete_pair())).unwrap();
        assert!(!r.holds);
    }

    #[test]
    fn density_of_point_inclusions() {
        let s = builtin::sierpinski();
        let open = MonotoneMap::new(builtin::point(), s.clone(), vec![1]).unwrap();
        let closed = builtin::point_to_sierp_closed();
        assert!(characterize(Property::Dense, &Subject::Map(open)).unwrap().holds);
        assert!(!characterize(Property::Dense, &Subject::Map(closed)).unwrap().holds);
    }

    #[test]
    fn vee_is_not_hausdorff() {
        let r = characterize(Property::Hausdorff, &Subject::Space(builtin::vee())).unwrap();
        assert!(!r.holds);
        let sq = r.counterexample.unwrap();
        assert!(sq.commutes());
        assert_ne!(sq.left.apply(0), sq.left.apply(1));
    }

    #[test]
    fn hausdorff_holds_for_point_and_two() {
        for x in [builtin::empty(), builtin::point(), builtin::two()] {
            assert!(characterize(Property::Hausdorff, &Subject::Space(x)).unwrap().holds);
        }
    }

    #[test]
    fn empty_space_is_connected() {
        assert!(characterize(Property::Connected, &Subject::Space(builtin::empty())).unwrap().holds);
        assert!(!characterize(Property::Connected, &Subject::Space(builtin::two())).unwrap().holds);
    }

    #[test]
    fn ids_round_trip_and_errors() {
        for p in Property::ALL {
            assert_eq!(p.id().parse::<Property>().unwrap(), p);
        }
        assert_eq!(
            characterize_by_id("compact", &Subject::Space(builtin::point())),
            Err(Error::UnknownProperty("compact".into()))
        );
        assert!(matches!(
            characterize(Property::Dense, &Subject::Space(builtin::point())),
            Err(Error::ArgumentKind { .. })
        ));
        assert!(matches!(
            characterize(Property::T1, &Subject::Map(builtin::codiagonal_two())),
            Err(Error::ArgumentKind { .. })
        ));
    }
}
