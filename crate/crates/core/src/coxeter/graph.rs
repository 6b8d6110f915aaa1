//! Simply laced spherical Coxeter graphs with Bourbaki node labels, node
//! subsets, and Cartan-type classification of subdiagrams.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank accepted for the infinite families. Keeps root indices within
/// `u16` and Weyl group orders within `u128`.
pub const MAX_RANK: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        }
    }
}

/// A connected ADE Coxeter graph. Nodes are stored 0-based and printed
/// 1-based, following Bourbaki:
///
/// ```text
/// A_n: 1 - 2 - ... - n
/// D_n: 1 - 2 - ... - (n-2) - (n-1),  (n-2) - n
/// E_n: 1 - 3 - 4 - 5 - ... - n,       2 - 4
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    family: Family,
    rank: usize,
    adjacency: Vec<Vec<bool>>,
}

impl CoxeterGraph {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=MAX_RANK).contains(&rank),
            Family::D => (4..=MAX_RANK).contains(&rank),
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::RankOutOfRange { family: family.letter(), rank });
        }
        let mut edges = Vec::new();
        match family {
            Family::A => edges.extend((1..rank).map(|i| (i - 1, i))),
            Family::D => {
                edges.extend((1..rank - 1).map(|i| (i - 1, i)));
                edges.push((rank - 3, rank - 1));
            }
            Family::E => {
                edges.push((0, 2));
                edges.push((1, 3));
                edges.extend((3..rank).map(|i| (i - 1, i)));
            }
        }
        let mut adjacency = vec![vec![false; rank]; rank];
        for (a, b) in edges {
            adjacency[a][b] = true;
            adjacency[b][a] = true;
        }
        Ok(CoxeterGraph { family, rank, adjacency })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Adjacency of 0-based nodes.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&j| self.adjacency[i][j])
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet::full(self.rank)
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }

    /// Cartan type of the full graph.
    pub fn cartan_type(&self) -> CartanType {
        CartanType::from_components([(self.family, self.rank)])
    }

    /// Cartan type of the subdiagram induced on `nodes`.
    pub fn subdiagram_type(&self, nodes: NodeSet) -> CartanType {
        let verts: Vec<usize> = nodes.iter().collect();
        let adj: Vec<Vec<bool>> = verts
            .iter()
            .map(|&a| verts.iter().map(|&b| self.adjacency[a][b]).collect())
            .collect();
        classify(&adj).expect("subdiagrams of ADE graphs are ADE")
    }
}

impl FromStr for CoxeterGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(Error::InvalidGraph(s.to_string())),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| Error::InvalidGraph(s.to_string()))?;
        CoxeterGraph::new(family, rank)
    }
}

impl fmt::Display for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A set of 0-based nodes, as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct NodeSet(u32);

impl NodeSet {
    pub fn empty() -> Self {
        NodeSet(0)
    }

    pub fn full(rank: usize) -> Self {
        NodeSet(if rank >= 32 { u32::MAX } else { (1u32 << rank) - 1 })
    }

    pub fn from_nodes(nodes: impl IntoIterator<Item = usize>) -> Self {
        NodeSet(nodes.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// 1-based node labels.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

/// Cartan type of a (possibly reducible, possibly empty) simply laced
/// spherical diagram, as a sorted multiset of irreducible components.
///
/// Small D ranks are folded into their A equivalents: D3 = A3, D2 = A1A1,
/// and D1, D0 are empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct CartanType {
    components: Vec<(Family, usize)>,
}

impl CartanType {
    pub fn empty() -> Self {
        CartanType::default()
    }

    pub fn from_components(parts: impl IntoIterator<Item = (Family, usize)>) -> Self {
        let mut components = Vec::new();
        for (family, rank) in parts {
            match (family, rank) {
                (_, 0) | (Family::D, 1) => {}
                (Family::D, 2) => components.extend([(Family::A, 1), (Family::A, 1)]),
                (Family::D, 3) => components.push((Family::A, 3)),
                other => components.push(other),
            }
        }
        components.sort();
        CartanType { components }
    }

    pub fn components(&self) -> &[(Family, usize)] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_type_a(&self) -> bool {
        self.components.iter().all(|&(f, _)| f == Family::A)
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|&(_, r)| r).sum()
    }

    /// Order of the Weyl group of this type.
    pub fn weyl_order(&self) -> u128 {
        self.components
            .iter()
            .map(|&(f, r)| component_weyl_order(f, r))
            .product()
    }

    /// Concatenate two types.
    pub fn join(&self, other: &CartanType) -> CartanType {
        CartanType::from_components(self.components.iter().chain(&other.components).copied())
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn component_weyl_order(family: Family, rank: usize) -> u128 {
    match family {
        Family::A => factorial(rank + 1),
        Family::D => (1u128 << (rank - 1)) * factorial(rank),
        Family::E => match rank {
            6 => 51_840,
            7 => 2_903_040,
            8 => 696_729_600,
            _ => unreachable!("E{rank} is not spherical"),
        },
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "∅");
        }
        let mut i = 0;
        while i < self.components.len() {
            let c = self.components[i];
            let mut j = i;
            while j < self.components.len() && self.components[j] == c {
                j += 1;
            }
            write!(f, "{}{}", c.0.letter(), c.1)?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Classify a simply laced graph given by a symmetric adjacency matrix.
/// Returns `None` when some component is not of ADE type.
pub fn classify(adjacency: &[Vec<bool>]) -> Option<CartanType> {
    let n = adjacency.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            k += 1;
            for w in 0..n {
                if adjacency[v][w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        parts.push(classify_connected(adjacency, &comp)?);
    }
    Some(CartanType::from_components(parts))
}

fn classify_connected(adjacency: &[Vec<bool>], comp: &[usize]) -> Option<(Family, usize)> {
    let size = comp.len();
    let degree = |v: usize| comp.iter().filter(|&&w| adjacency[v][w]).count();
    let edges: usize = comp.iter().map(|&v| degree(v)).sum::<usize>() / 2;
    if edges + 1 != size {
        return None;
    }
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();
    match branch.as_slice() {
        [] => Some((Family::A, size)),
        [b] if degree(*b) == 3 => {
            let mut arms: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|&w| adjacency[*b][w])
                .map(|first| {
                    let (mut prev, mut cur, mut len) = (*b, first, 1);
                    loop {
                        let next = comp.iter().copied().find(|&w| adjacency[cur][w] && w != prev);
                        match next {
                            Some(nx) => {
                                prev = cur;
                                cur = nx;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, c] => Some((Family::D, c + 3)),
                [1, 2, 2] => Some((Family::E, 6)),
                [1, 2, 3] => Some((Family::E, 7)),
                [1, 2, 4] => Some((Family::E, 8)),
                _ => None,
            }
        }
        _ => None,
    }
}
