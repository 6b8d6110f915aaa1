//! W-orbits of admissible sets, their highest elements and coset words.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::sets::{sigma_gen, AdmissibleSet};
use super::table::reference_rows;
use crate::coxeter::{CartanType, CoxeterGraph, NodeSet, RootSystem, Token};
use crate::error::{Error, Result};

/// One W-orbit 𝓑. `members[0]` is the highest element `B_0` and
/// `words[k]` is a node word `u` with `u B_0 = members[k]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Orbit {
    pub id: usize,
    pub members: Vec<AdmissibleSet>,
    pub words: Vec<Vec<usize>>,
    pub c_nodes: NodeSet,
    pub c_type: CartanType,
    pub perp_type: CartanType,
    #[serde(skip)]
    index: HashMap<AdmissibleSet, usize>,
}

impl Orbit {
    pub fn highest(&self) -> &AdmissibleSet {
        &self.members[0]
    }

    pub fn set_size(&self) -> usize {
        self.members[0].len()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, b: &AdmissibleSet) -> Option<usize> {
        self.index.get(b).copied()
    }

    fn reindex(&mut self) {
        self.index = self.members.iter().enumerate().map(|(k, b)| (b.clone(), k)).collect();
    }
}

/// All orbits of admissible sets reachable from ∅, ordered by `|X|` and
/// then by discovery order.
#[derive(Debug, Clone)]
pub struct OrbitCatalog {
    rs: RootSystem,
    orbits: Vec<Orbit>,
    lookup: HashMap<AdmissibleSet, (usize, usize)>,
}

/// Serializable catalog snapshot.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogData {
    pub graph: String,
    pub orbits: Vec<Orbit>,
}

/// Per-orbit summary for export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSummary {
    pub id: usize,
    pub set_size: usize,
    pub orbit_size: usize,
    pub highest: Vec<String>,
    pub c_nodes: Vec<usize>,
    pub c_type: String,
    pub perp_type: String,
}

impl OrbitCatalog {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn graph(&self) -> &CoxeterGraph {
        self.rs.graph()
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn orbit(&self, id: usize) -> Result<&Orbit> {
        self.orbits.get(id).ok_or(Error::UnknownOrbit(id))
    }

    /// `(orbit id, member index)` of an admissible set.
    pub fn locate(&self, b: &AdmissibleSet) -> Option<(usize, usize)> {
        self.lookup.get(b).copied()
    }

    pub fn num_sets(&self) -> usize {
        self.lookup.len()
    }

    pub fn summaries(&self) -> Vec<OrbitSummary> {
        self.orbits
            .iter()
            .map(|o| OrbitSummary {
                id: o.id,
                set_size: o.set_size(),
                orbit_size: o.len(),
                highest: o.highest().roots().map(|r| self.rs.root(r).to_string()).collect(),
                c_nodes: o.c_nodes.labels(),
                c_type: o.c_type.to_string(),
                perp_type: o.perp_type.to_string(),
            })
            .collect()
    }

    pub fn to_data(&self) -> CatalogData {
        CatalogData { graph: self.graph().name(), orbits: self.orbits.clone() }
    }

    /// Rebuild from a snapshot, re-running the reference validation.
    pub fn from_data(data: CatalogData) -> Result<Self> {
        let graph: CoxeterGraph = data.graph.parse()?;
        let rs = RootSystem::new(graph);
        let mut orbits = data.orbits;
        for o in &mut orbits {
            o.reindex();
        }
        let cat = Self::assemble(rs, orbits);
        validate(&cat)?;
        Ok(cat)
    }

    fn assemble(rs: RootSystem, orbits: Vec<Orbit>) -> Self {
        let mut lookup = HashMap::new();
        for o in &orbits {
            for (k, b) in o.members.iter().enumerate() {
                lookup.insert(b.clone(), (o.id, k));
            }
        }
        OrbitCatalog { rs, orbits, lookup }
    }
}

fn height_key(rs: &RootSystem, b: &AdmissibleSet) -> (i32, Vec<i32>) {
    let mut h: Vec<i32> = b.roots().map(|r| rs.height(r)).collect();
    h.sort_unstable();
    (h.iter().sum(), h)
}

/// The member of largest total height; among those, the one whose ascending
/// height list is lexicographically largest, then the smallest index list.
pub fn highest_element<'a>(rs: &RootSystem, members: &'a [AdmissibleSet]) -> Option<&'a AdmissibleSet> {
    members.iter().max_by(|a, b| height_key(rs, a).cmp(&height_key(rs, b)).then_with(|| b.cmp(a)))
}

/// `{i : α_i ⊥ β for all β ∈ B_0}`.
pub fn c_nodes(rs: &RootSystem, b0: &AdmissibleSet) -> NodeSet {
    b0.orthogonal_nodes(rs)
}

fn build_orbit(rs: &RootSystem, id: usize, members: &[AdmissibleSet]) -> Orbit {
    let b0 = highest_element(rs, members).expect("nonempty orbit").clone();
    let n = rs.rank();
    let mut order = vec![b0.clone()];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut index = HashMap::from([(b0.clone(), 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for i in 0..n {
            let next = sigma_gen(rs, Token::R(i), &order[k]);
            if !index.contains_key(&next) {
                let mut w = Vec::with_capacity(words[k].len() + 1);
                w.push(i);
                w.extend_from_slice(&words[k]);
                index.insert(next.clone(), order.len());
                queue.push_back(order.len());
                order.push(next);
                words.push(w);
            }
        }
    }
    let c = c_nodes(rs, &b0);
    let perp: Vec<usize> = (0..rs.num_positive()).filter(|&r| b0.perpendicular_to(rs, r)).collect();
    Orbit {
        id,
        members: order,
        words,
        c_nodes: c,
        c_type: rs.graph().subdiagram_type(c),
        perp_type: rs.subsystem_type(&perp),
        index,
    }
}

/// Enumerate every admissible set reachable from ∅ under the generators and
/// split them into W-orbits. Each orbit's highest element is checked against
/// the reference table.
pub fn enumerate_catalog(rs: RootSystem) -> Result<OrbitCatalog> {
    let n = rs.rank();
    let gens: Vec<Token> = (0..n).map(Token::R).chain((0..n).map(Token::E)).collect();
    let mut found = vec![AdmissibleSet::empty()];
    let mut seen: HashMap<AdmissibleSet, usize> = HashMap::from([(AdmissibleSet::empty(), 0)]);
    let mut k = 0;
    while k < found.len() {
        for &g in &gens {
            let next = sigma_gen(&rs, g, &found[k]);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), found.len());
                found.push(next);
            }
        }
        k += 1;
    }

    // Orbits under the reflections, keyed by first discovery.
    let mut orbit_of = vec![usize::MAX; found.len()];
    let mut groups: Vec<Vec<AdmissibleSet>> = Vec::new();
    for start in 0..found.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let g = groups.len();
        orbit_of[start] = g;
        let mut members = vec![found[start].clone()];
        let mut j = 0;
        while j < members.len() {
            for i in 0..n {
                let next = sigma_gen(&rs, Token::R(i), &members[j]);
                let p = *seen.get(&next).ok_or_else(|| Error::Internal("orbit escapes the reachable sets".into()))?;
                if orbit_of[p] == usize::MAX {
                    orbit_of[p] = g;
                    members.push(next);
                }
            }
            j += 1;
        }
        groups.push(members);
    }
    let mut keyed: Vec<(usize, usize, Vec<AdmissibleSet>)> =
        groups.into_iter().enumerate().map(|(d, m)| (m[0].len(), d, m)).collect();
    keyed.sort_by_key(|(size, d, _)| (*size, *d));
    let orbits: Vec<Orbit> = keyed.iter().enumerate().map(|(id, (_, _, m))| build_orbit(&rs, id, m)).collect();
    let cat = OrbitCatalog::assemble(rs, orbits);
    validate(&cat)?;
    Ok(cat)
}

/// Each nonempty orbit must match a reference row in `(|X|, |𝓑|, type of
/// C)`, and the empty orbit must have `C` = all nodes.
fn validate(cat: &OrbitCatalog) -> Result<()> {
    let rows = reference_rows(cat.graph());
    for o in &cat.orbits {
        if o.set_size() == 0 {
            if o.c_nodes != cat.graph().all_nodes() || o.len() != 1 {
                return Err(Error::CatalogMismatch("empty orbit".into()));
            }
            continue;
        }
        let ok = rows
            .iter()
            .any(|r| r.set_size == o.set_size() && r.orbit_size == o.len() as u128 && r.c_type == o.c_type);
        if !ok {
            return Err(Error::CatalogMismatch(format!(
                "{} orbit {}: |X|={} |B|={} C={} ({})",
                cat.graph().name(),
                o.id,
                o.set_size(),
                o.len(),
                o.c_type,
                o.c_nodes
            )));
        }
    }
    Ok(())
}

/// Differences between the catalog and the reference rows, as text; empty
/// when every row is matched one-to-one.
pub fn compare_with_reference(cat: &OrbitCatalog) -> Vec<String> {
    let mut rows = reference_rows(cat.graph());
    let mut problems = Vec::new();
    for o in cat.orbits().iter().filter(|o| o.set_size() > 0) {
        let hit = rows.iter().position(|r| {
            r.set_size == o.set_size()
                && r.orbit_size == o.len() as u128
                && r.c_type == o.c_type
                && r.perp_type == o.perp_type
        });
        match hit {
            Some(p) => {
                rows.remove(p);
            }
            None => problems.push(format!(
                "unmatched orbit |X|={} |B|={} C={} perp={}",
                o.set_size(),
                o.len(),
                o.c_type,
                o.perp_type
            )),
        }
    }
    for r in rows {
        problems.push(format!("missing row |X|={} |B|={} C={}", r.set_size, r.orbit_size, r.c_type));
    }
    problems
}
