//! Defining and derived relations of the Brauer monoid, instantiated on a
//! graph.

use crate::coxeter::{CoxeterGraph, GenWord, Token};
use crate::error::Result;
use crate::normal_form::BrauerMonoid;

/// One instance `lhs = rhs` of a named relation family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub family: &'static str,
    pub lhs: GenWord,
    pub rhs: GenWord,
}

/// Relation families of the defining presentation.
pub const DEFINING: &[&str] = &[
    "delta-central", "delta-inverse", "RSrr", "RSer", "RSre", "HSee", "HCrr", "HCer", "HCee", "HNrrr", "HNrer",
    "RNrre",
];

/// Relation families derived from the presentation.
pub const DERIVED: &[&str] = &["RNerr", "HNree", "RNere", "HNeer", "HNeee", "HTeere", "RTerre"];

fn word(tokens: &[Token]) -> GenWord {
    GenWord::new(tokens.to_vec())
}

/// Every relation instance for `graph`, both tables.
pub fn relations(graph: &CoxeterGraph) -> Vec<Relation> {
    use Token::{Delta as Dl, DeltaInv as Di, E, R};
    let n = graph.rank();
    let mut out = Vec::new();
    let mut push = |family: &'static str, lhs: &[Token], rhs: &[Token]| {
        out.push(Relation { family, lhs: word(lhs), rhs: word(rhs) });
    };
    push("delta-inverse", &[Dl, Di], &[]);
    push("delta-inverse", &[Di, Dl], &[]);
    for i in 0..n {
        push("delta-central", &[Dl, R(i)], &[R(i), Dl]);
        push("delta-central", &[Dl, E(i)], &[E(i), Dl]);
        push("RSrr", &[R(i), R(i)], &[]);
        push("RSer", &[E(i), R(i)], &[E(i)]);
        push("RSre", &[R(i), E(i)], &[E(i)]);
        push("HSee", &[E(i), E(i)], &[Dl, E(i)]);
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if !graph.adjacent(i, j) {
                if i < j {
                    push("HCrr", &[R(i), R(j)], &[R(j), R(i)]);
                    push("HCee", &[E(i), E(j)], &[E(j), E(i)]);
                }
                push("HCer", &[E(i), R(j)], &[R(j), E(i)]);
                continue;
            }
            if i < j {
                push("HNrrr", &[R(i), R(j), R(i)], &[R(j), R(i), R(j)]);
                push("HNrer", &[R(j), E(i), R(j)], &[R(i), E(j), R(i)]);
            }
            push("RNrre", &[R(j), R(i), E(j)], &[E(i), E(j)]);
            push("RNerr", &[E(i), R(j), R(i)], &[E(i), E(j)]);
            push("HNree", &[R(j), E(i), E(j)], &[R(i), E(j)]);
            push("RNere", &[E(i), R(j), E(i)], &[E(i)]);
            push("HNeer", &[E(j), E(i), R(j)], &[E(j), R(i)]);
            push("HNeee", &[E(i), E(j), E(i)], &[E(i)]);
            for k in 0..n {
                if k != i && graph.adjacent(j, k) {
                    push("HTeere", &[E(j), E(i), R(k), E(j)], &[E(j), R(i), E(k), E(j)]);
                    push("RTerre", &[E(j), R(i), R(k), E(j)], &[E(j), E(i), E(k), E(j)]);
                }
            }
        }
    }
    out
}

/// Instances whose two sides have different normal forms.
pub fn normal_form_violations<'a>(monoid: &BrauerMonoid, rels: &'a [Relation]) -> Result<Vec<&'a Relation>> {
    let mut bad = Vec::new();
    for r in rels {
        if !monoid.equal(&r.lhs, &r.rhs)? {
            bad.push(r);
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_coverage() {
        let g: CoxeterGraph = "D4".parse().unwrap();
        let rels = relations(&g);
        for f in DEFINING.iter().chain(DERIVED) {
            assert!(rels.iter().any(|r| r.family == *f), "{f}");
        }
        let a1: CoxeterGraph = "A1".parse().unwrap();
        assert!(relations(&a1).iter().all(|r| !r.family.starts_with("HN")));
    }
}
