//! Sets of mutually orthogonal positive roots, admissible closure, and the
//! action σ of the monoid generators on admissible sets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{GenWord, NodeSet, RootSystem, SignedRoot, Token, WElement};
use crate::error::{Error, Result};

/// Sorted set of pairwise orthogonal positive roots (by index). Not
/// necessarily admissible.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MutOrthSet(Vec<u16>);

impl MutOrthSet {
    pub fn new(rs: &RootSystem, roots: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<u16> = Vec::new();
        for r in roots {
            if r >= rs.num_positive() {
                return Err(Error::NotARoot(format!("index {r}")));
            }
            v.push(r as u16);
        }
        v.sort_unstable();
        v.dedup();
        for (k, &a) in v.iter().enumerate() {
            for &b in &v[k + 1..] {
                if !rs.orthogonal(a as usize, b as usize) {
                    return Err(Error::NotOrthogonal(
                        rs.root(a as usize).to_string(),
                        rs.root(b as usize).to_string(),
                    ));
                }
            }
        }
        Ok(MutOrthSet(v))
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&r| r as usize)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// An admissible set: mutually orthogonal positive roots closed under the
/// fourth-root rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct AdmissibleSet(Vec<u16>);

impl AdmissibleSet {
    pub fn empty() -> Self {
        AdmissibleSet(Vec::new())
    }

    /// Validate an index list as an admissible set.
    pub fn new(rs: &RootSystem, roots: impl IntoIterator<Item = usize>) -> Result<Self> {
        let x = MutOrthSet::new(rs, roots)?;
        let closed = admissible_closure(rs, &x);
        if closed.len() != x.len() {
            return Err(Error::Internal(format!(
                "set {} is not admissible",
                AdmissibleSet(x.0).render(rs)
            )));
        }
        Ok(closed)
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&r| r as usize)
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, root: usize) -> bool {
        self.0.binary_search(&(root as u16)).is_ok()
    }

    pub fn is_subset(&self, other: &AdmissibleSet) -> bool {
        self.0.iter().all(|r| other.0.binary_search(r).is_ok())
    }

    /// Whether `root` is orthogonal to every member.
    pub fn perpendicular_to(&self, rs: &RootSystem, root: usize) -> bool {
        self.roots().all(|b| rs.orthogonal(b, root))
    }

    pub fn as_mut_orth(&self) -> MutOrthSet {
        MutOrthSet(self.0.clone())
    }

    /// Image under a Weyl group element (positive representatives).
    pub fn apply(&self, w: &WElement) -> AdmissibleSet {
        map_set(&self.0, |r| w.apply(r))
    }

    /// Nodes whose simple root is orthogonal to every member.
    pub fn orthogonal_nodes(&self, rs: &RootSystem) -> NodeSet {
        NodeSet::from_nodes((0..rs.rank()).filter(|&i| self.perpendicular_to(rs, rs.simple_index(i))))
    }

    /// Roots as coefficient tuples, e.g. `{(1,1,0),(0,0,1)}`.
    pub fn render(&self, rs: &RootSystem) -> String {
        let parts: Vec<String> = self.roots().map(|r| rs.root(r).to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

fn map_set(v: &[u16], f: impl Fn(SignedRoot) -> SignedRoot) -> AdmissibleSet {
    let mut out: Vec<u16> = v.iter().map(|&r| f(SignedRoot::positive(r as usize)).index() as u16).collect();
    out.sort_unstable();
    AdmissibleSet(out)
}

impl fmt::Display for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// The positive root of `± r_γ r_{β1} r_{β2} r_{β3} γ`.
fn fourth_root(rs: &RootSystem, gamma: usize, b1: usize, b2: usize, b3: usize) -> usize {
    let mut x = SignedRoot::positive(gamma);
    for b in [b3, b2, b1, gamma] {
        x = rs.reflect_index(b, x);
    }
    x.index()
}

/// Smallest admissible set containing `x`: repeatedly adjoin the fourth root
/// for every triple in the set that is jointly non-orthogonal to some root.
pub fn admissible_closure(rs: &RootSystem, x: &MutOrthSet) -> AdmissibleSet {
    let mut set: Vec<usize> = x.roots().collect();
    loop {
        let mut added = None;
        'search: for a in 0..set.len() {
            for b in a + 1..set.len() {
                for c in b + 1..set.len() {
                    let (b1, b2, b3) = (set[a], set[b], set[c]);
                    for g in 0..rs.num_positive() {
                        let joined = [b1, b2, b3].iter().all(|&bi| rs.inner_index(g, bi).abs() == 1);
                        if joined {
                            let r = fourth_root(rs, g, b1, b2, b3);
                            if !set.contains(&r) {
                                added = Some(r);
                                break 'search;
                            }
                        }
                    }
                }
            }
        }
        match added {
            Some(r) => {
                debug_assert!(set.iter().all(|&s| rs.orthogonal(s, r)));
                set.push(r);
            }
            None => break,
        }
    }
    let mut v: Vec<u16> = set.into_iter().map(|r| r as u16).collect();
    v.sort_unstable();
    AdmissibleSet(v)
}

/// Action of one generator on an admissible set. δ and δ⁻¹ act trivially.
///
/// `e_i` acts by the three-case rule: `B` if `α_i ∈ B`; the closure of
/// `B ∪ {α_i}` if `α_i ⊥ B`; otherwise `r_β r_i B` for the smallest-index
/// `β ∈ B` not orthogonal to `α_i`.
pub fn sigma_gen(rs: &RootSystem, token: Token, b: &AdmissibleSet) -> AdmissibleSet {
    match token {
        Token::Delta | Token::DeltaInv => b.clone(),
        Token::R(i) => {
            let a = rs.simple_index(i);
            map_set(&b.0, |r| rs.reflect_index(a, r))
        }
        Token::E(i) => {
            let a = rs.simple_index(i);
            if b.contains(a) {
                return b.clone();
            }
            match b.roots().find(|&beta| !rs.orthogonal(beta, a)) {
                None => {
                    let mut v = b.0.clone();
                    v.push(a as u16);
                    v.sort_unstable();
                    admissible_closure(rs, &MutOrthSet(v))
                }
                Some(beta) => map_set(&b.0, |r| rs.reflect_index(beta, rs.reflect_index(a, r))),
            }
        }
    }
}

/// Action of a word: the rightmost token acts first.
pub fn sigma_word(rs: &RootSystem, word: &GenWord, b: &AdmissibleSet) -> AdmissibleSet {
    word.tokens().iter().rev().fold(b.clone(), |acc, &t| sigma_gen(rs, t, &acc))
}
