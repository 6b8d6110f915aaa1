//! Dimensions of Brauer algebras: closed forms, orbit sums, and a
//! brute-force count of monoid elements modulo δ.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::admissible::OrbitCatalog;
use crate::coxeter::{CoxeterGraph, Family, Token};
use crate::error::{Error, Result};
use crate::normal_form::BrauerMonoid;

/// `k!! = 1·3···(2k-1)`.
pub fn odd_double_factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, j| acc * BigUint::from(2 * j - 1))
}

fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, j| acc * BigUint::from(j))
}

/// Closed-form dimension for `graph`.
pub fn closed_form(graph: &CoxeterGraph) -> BigUint {
    let n = graph.rank();
    match graph.family() {
        Family::A => odd_double_factorial(n + 1),
        Family::D => {
            let two = |e: usize| BigUint::one() << e;
            (two(n) + 1u32) * odd_double_factorial(n) - (two(n - 1) + 1u32) * factorial(n)
        }
        Family::E => match n {
            6 => BigUint::from(1_440_585u64),
            7 => BigUint::from(139_613_625u64),
            _ => BigUint::from(53_328_069_225u64),
        },
    }
}

/// Contribution `|𝓑|² |W(C_𝓑)|` of one orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitContribution {
    pub orbit: usize,
    pub set_size: usize,
    pub orbit_size: usize,
    pub c_type: String,
    pub wc_order: BigUint,
    pub contribution: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub graph: String,
    pub closed_form: BigUint,
    pub orbit_sum: BigUint,
    pub orbits: Vec<OrbitContribution>,
    pub matches: bool,
}

pub fn contributions(catalog: &OrbitCatalog) -> Vec<OrbitContribution> {
    catalog
        .orbits()
        .iter()
        .map(|o| {
            let wc = BigUint::from(o.c_type.weyl_order());
            let size = BigUint::from(o.len());
            OrbitContribution {
                orbit: o.id,
                set_size: o.set_size(),
                orbit_size: o.len(),
                c_type: o.c_type.to_string(),
                contribution: &size * &size * &wc,
                wc_order: wc,
            }
        })
        .collect()
}

/// `Σ_𝓑 |𝓑|² |W(C_𝓑)|` including the empty orbit.
pub fn orbit_sum(catalog: &OrbitCatalog) -> BigUint {
    contributions(catalog).into_iter().map(|c| c.contribution).sum()
}

pub fn dim_report(catalog: &OrbitCatalog) -> DimReport {
    let closed = closed_form(catalog.graph());
    let orbits = contributions(catalog);
    let sum: BigUint = orbits.iter().map(|c| c.contribution.clone()).sum();
    DimReport { graph: catalog.graph().name(), matches: sum == closed, closed_form: closed, orbit_sum: sum, orbits }
}

/// Count monoid elements modulo powers of δ by breadth-first search from the
/// identity under right multiplication by every `r_i` and `e_i`.
pub fn brute_force_dim(monoid: &BrauerMonoid, bound: usize) -> Result<usize> {
    let n = monoid.rank();
    let gens: Vec<Token> = (0..n).map(Token::R).chain((0..n).map(Token::E)).collect();
    let start = monoid.identity();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &g in &gens {
            let y = monoid.mul_token(&x, g)?.without_delta();
            if !seen.contains(&y) {
                if seen.len() >= bound {
                    return Err(Error::BoundExceeded(bound));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen.len())
}
