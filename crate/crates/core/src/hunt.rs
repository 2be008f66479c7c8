//! Property constraints and the counterexample hunter.

use std::fmt;
use std::str::FromStr;

use crate::enumerate::{enumerate_le_semigroups, EnumerationTask};
use crate::error::{Error, Result};
use crate::ideals::is_semiprime;
use crate::semigroup::{LeSemigroup, PoeView};
use crate::theorems::{violation_free, Context};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constraint {
    Regular,
    IntraRegular,
    Semisimple,
    LeftSimple,
    Lambda,
    /// Some 𝒥-class has no `b, c` with `bc` in the class.
    GreenFailsSomewhere,
    /// Some 𝒥-class is not closed under multiplication.
    ClassNotSubsemigroup,
    /// Some 𝒥-class satisfies the Green condition but is not closed.
    GreenClassNotSubsemigroup,
    Commutative,
    IdempotentTop,
    AllIdealsSemiprime,
    /// The 𝒥-partition passes every decomposition check.
    Decomposes,
    /// Some theorem check reports a violation.
    Violation,
}

impl Constraint {
    pub const ALL: [Constraint; 13] = [
        Constraint::Regular,
        Constraint::IntraRegular,
        Constraint::Semisimple,
        Constraint::LeftSimple,
        Constraint::Lambda,
        Constraint::GreenFailsSomewhere,
        Constraint::ClassNotSubsemigroup,
        Constraint::GreenClassNotSubsemigroup,
        Constraint::Commutative,
        Constraint::IdempotentTop,
        Constraint::AllIdealsSemiprime,
        Constraint::Decomposes,
        Constraint::Violation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Constraint::Regular => "regular",
            Constraint::IntraRegular => "intra-regular",
            Constraint::Semisimple => "semisimple",
            Constraint::LeftSimple => "left-simple",
            Constraint::Lambda => "lambda",
            Constraint::GreenFailsSomewhere => "green-fails-somewhere",
            Constraint::ClassNotSubsemigroup => "class-not-subsemigroup",
            Constraint::GreenClassNotSubsemigroup => "green-class-not-subsemigroup",
            Constraint::Commutative => "commutative",
            Constraint::IdempotentTop => "idempotent-top",
            Constraint::AllIdealsSemiprime => "all-ideals-semiprime",
            Constraint::Decomposes => "decomposes",
            Constraint::Violation => "violation",
        }
    }

    pub fn holds(self, ctx: &Context<'_>) -> bool {
        let s = ctx.s;
        let p = &ctx.properties;
        let classes = &ctx.classes.classes;
        match self {
            Constraint::Regular => p.regular,
            Constraint::IntraRegular => p.intra_regular,
            Constraint::Semisimple => p.semisimple,
            Constraint::LeftSimple => p.left_simple,
            Constraint::Lambda => p.lambda,
            Constraint::GreenFailsSomewhere => classes.iter().any(|c| !c.green),
            Constraint::ClassNotSubsemigroup => classes.iter().any(|c| !c.subsemigroup),
            Constraint::GreenClassNotSubsemigroup => {
                classes.iter().any(|c| c.green && !c.subsemigroup)
            }
            Constraint::Commutative => s
                .elements()
                .all(|x| s.elements().all(|y| s.product(x, y) == s.product(y, x))),
            Constraint::IdempotentTop => s.product(s.top(), s.top()) == s.top(),
            Constraint::AllIdealsSemiprime => p.ideal_elements.iter().all(|&t| is_semiprime(s, t)),
            Constraint::Decomposes => ctx.decomposition.passes(),
            Constraint::Violation => !violation_free(&ctx.check_all()),
        }
    }

    pub fn holds_on(self, s: &LeSemigroup) -> bool {
        self.holds(&Context::new(s))
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Constraint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Constraint::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| Error::UnknownConstraint(s.to_string()))
    }
}

/// A constraint name, possibly negated with a leading `!`, `¬` or `not-`.
pub fn parse_literal(s: &str) -> Result<(Constraint, bool)> {
    let t = s.trim();
    for prefix in ["!", "¬", "not-"] {
        if let Some(rest) = t.strip_prefix(prefix) {
            return Ok((rest.parse()?, false));
        }
    }
    Ok((t.parse()?, true))
}

/// Sorts `--require` / `--forbid` literals into the two sets; a negated
/// literal moves to the other side.
pub fn parse_constraints<S: AsRef<str>>(
    require: &[S],
    forbid: &[S],
) -> Result<(Vec<Constraint>, Vec<Constraint>)> {
    let mut req = Vec::new();
    let mut forb = Vec::new();
    for r in require {
        match parse_literal(r.as_ref())? {
            (c, true) => req.push(c),
            (c, false) => forb.push(c),
        }
    }
    for f in forbid {
        match parse_literal(f.as_ref())? {
            (c, true) => forb.push(c),
            (c, false) => req.push(c),
        }
    }
    Ok((req, forb))
}

/// Structures of order `task.n` meeting every required and no forbidden
/// constraint, in enumeration order, up to `task.limit`.
pub fn hunt(task: &EnumerationTask) -> Result<Vec<LeSemigroup>> {
    enumerate_le_semigroups(task)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_key;
    use crate::fixtures;

    #[test]
    fn names_round_trip() {
        for c in Constraint::ALL {
            assert_eq!(c.name().parse::<Constraint>().unwrap(), c);
        }
        assert!(matches!(
            "bogus".parse::<Constraint>(),
            Err(Error::UnknownConstraint(_))
        ));
    }

    #[test]
    fn negation_moves_sides() {
        let (req, forb) =
            parse_constraints(&["!lambda", "semisimple"], &["not-regular", "commutative"]).unwrap();
        assert_eq!(req, vec![Constraint::Semisimple, Constraint::Regular]);
        assert_eq!(forb, vec![Constraint::Lambda, Constraint::Commutative]);
    }

    #[test]
    fn conflicting_task_is_rejected() {
        let task = EnumerationTask::new(2)
            .require(Constraint::Lambda)
            .forbid(Constraint::Lambda);
        assert!(matches!(hunt(&task), Err(Error::ConflictingConstraint(_))));
    }

    #[test]
    fn first_non_lambda_pair_is_right_zero() {
        let hits = hunt(&EnumerationTask::new(2).forbid(Constraint::Lambda)).unwrap();
        assert_eq!(hits.len(), 1);
        assert_eq!(canonical_key(&hits[0]), canonical_key(&fixtures::c2_rz()));
    }

    #[test]
    fn semisimple_lambda_without_intra_regularity_is_absent() {
        let task = EnumerationTask::new(2)
            .require(Constraint::Lambda)
            .require(Constraint::Semisimple)
            .forbid(Constraint::IntraRegular);
        assert!(hunt(&task).unwrap().is_empty());
    }

    #[test]
    fn green_failure_at_three() {
        let hits = hunt(&EnumerationTask::new(3).require(Constraint::GreenFailsSomewhere)).unwrap();
        assert!(!hits.is_empty());
        assert!(hits
            .iter()
            .all(|s| Constraint::GreenFailsSomewhere.holds_on(s)));
    }
}
