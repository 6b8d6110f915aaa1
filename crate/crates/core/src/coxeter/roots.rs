//! Root systems in the simple-root basis.

use std::collections::{HashMap, HashSet};
use std::fmt;

use super::graph::{classify, CartanType, CoxeterGraph};
use crate::error::{Error, Result};

/// A root as an integer coefficient vector in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    fn axpy(&self, a: i32, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(x, y)| x + a * y).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A root of the system referenced by positive-root index and sign, packed as
/// `index << 1 | negative`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedRoot(pub u16);

impl SignedRoot {
    pub fn positive(index: usize) -> Self {
        SignedRoot((index as u16) << 1)
    }

    pub fn new(index: usize, negative: bool) -> Self {
        SignedRoot(((index as u16) << 1) | negative as u16)
    }

    pub fn index(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_negative(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn negate(self) -> Self {
        SignedRoot(self.0 ^ 1)
    }

    /// Apply an extra sign flip when `flip` is set.
    pub fn flip_if(self, flip: bool) -> Self {
        SignedRoot(self.0 ^ flip as u16)
    }
}

/// All roots of an ADE graph. Positive roots are ordered by height, then by
/// descending coefficient vector, so the simple root of node `i` has index
/// `i`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    graph: CoxeterGraph,
    positive: Vec<Root>,
    heights: Vec<i32>,
    lookup: HashMap<Vec<i32>, usize>,
    /// Inner products between positive roots, row-major.
    gram: Vec<i8>,
    /// `reflections[b * N + g]` is `r_b(g)` for positive roots `b`, `g`.
    reflections: Vec<SignedRoot>,
}

impl RootSystem {
    pub fn new(graph: CoxeterGraph) -> Self {
        let n = graph.rank();
        let inner_raw = |a: &Root, b: &Root| -> i32 {
            let mut s = 0;
            for i in 0..n {
                if a.0[i] == 0 {
                    continue;
                }
                let mut row = 2 * b.0[i];
                for j in graph.neighbors(i) {
                    row -= b.0[j];
                }
                s += a.0[i] * row;
            }
            s
        };

        // Every positive root is reached from a simple root by simple
        // reflections that stay positive.
        let simple: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
        let mut found: Vec<Root> = simple.clone();
        let mut known: HashSet<Vec<i32>> = found.iter().map(|r| r.0.clone()).collect();
        let mut k = 0;
        while k < found.len() {
            let r = found[k].clone();
            k += 1;
            for a in &simple {
                let ip = inner_raw(a, &r);
                let image = r.axpy(-ip, a);
                if image.is_positive() && known.insert(image.0.clone()) {
                    found.push(image);
                }
            }
        }
        found.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));

        let count = found.len();
        let lookup: HashMap<Vec<i32>, usize> =
            found.iter().enumerate().map(|(i, r)| (r.0.clone(), i)).collect();
        let heights = found.iter().map(Root::height).collect();
        let mut gram = vec![0i8; count * count];
        let mut reflections = vec![SignedRoot(0); count * count];
        for (b, rb) in found.iter().enumerate() {
            for (g, rg) in found.iter().enumerate() {
                let ip = inner_raw(rb, rg);
                gram[b * count + g] = ip as i8;
                let image = rg.axpy(-ip, rb);
                reflections[b * count + g] = if image.is_positive() {
                    SignedRoot::positive(lookup[&image.0])
                } else {
                    SignedRoot::new(lookup[&image.neg().0], true)
                };
            }
        }
        RootSystem { graph, positive: found, heights, lookup, gram, reflections }
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.positive[index]
    }

    pub fn signed_root(&self, r: SignedRoot) -> Root {
        let root = &self.positive[r.index()];
        if r.is_negative() {
            root.neg()
        } else {
            root.clone()
        }
    }

    pub fn height(&self, index: usize) -> i32 {
        self.heights[index]
    }

    pub fn highest_root(&self) -> usize {
        self.positive.len() - 1
    }

    /// Index of the simple root of node `i` (0-based).
    pub fn simple_index(&self, i: usize) -> usize {
        i
    }

    /// Positive-root index and sign of a coefficient vector, if it is a root.
    pub fn find(&self, root: &Root) -> Option<SignedRoot> {
        if let Some(&i) = self.lookup.get(&root.0) {
            return Some(SignedRoot::positive(i));
        }
        self.lookup.get(&root.neg().0).map(|&i| SignedRoot::new(i, true))
    }

    pub fn find_or_err(&self, root: &Root) -> Result<SignedRoot> {
        self.find(root).ok_or_else(|| Error::NotARoot(root.to_string()))
    }

    /// Bilinear form on positive roots by index.
    pub fn inner_index(&self, a: usize, b: usize) -> i32 {
        self.gram[a * self.positive.len() + b] as i32
    }

    pub fn inner_signed(&self, a: SignedRoot, b: SignedRoot) -> i32 {
        let s = self.inner_index(a.index(), b.index());
        if a.is_negative() != b.is_negative() {
            -s
        } else {
            s
        }
    }

    /// Bilinear form on arbitrary coefficient vectors: `(α_i, α_i) = 2`,
    /// `(α_i, α_j) = -1` for adjacent nodes, `0` otherwise.
    pub fn inner(&self, a: &Root, b: &Root) -> i32 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                let g = if i == j {
                    2
                } else if self.graph.adjacent(i, j) {
                    -1
                } else {
                    0
                };
                s += a.0[i] * g * b.0[j];
            }
        }
        s
    }

    /// `r_β(γ) = γ - (β, γ) β`.
    pub fn reflect(&self, beta: &Root, gamma: &Root) -> Root {
        gamma.axpy(-self.inner(beta, gamma), beta)
    }

    /// `r_b(g)` on indexed roots, `b` positive.
    pub fn reflect_index(&self, b: usize, g: SignedRoot) -> SignedRoot {
        self.reflections[b * self.positive.len() + g.index()].flip_if(g.is_negative())
    }

    pub fn orthogonal(&self, a: usize, b: usize) -> bool {
        self.inner_index(a, b) == 0
    }

    /// Cartan type of the root subsystem formed by the given positive roots
    /// and their negatives. The subsystem must be closed.
    pub fn subsystem_type(&self, roots: &[usize]) -> CartanType {
        let set: HashSet<usize> = roots.iter().copied().collect();
        // Simple roots of the subsystem: members that are not a sum of two
        // members.
        let simple: Vec<usize> = roots
            .iter()
            .copied()
            .filter(|&r| {
                !roots.iter().any(|&a| {
                    let diff = Root(
                        self.positive[r].0.iter().zip(&self.positive[a].0).map(|(x, y)| x - y).collect(),
                    );
                    a != r && diff.is_positive() && self.lookup.get(&diff.0).is_some_and(|d| set.contains(d))
                })
            })
            .collect();
        let adj: Vec<Vec<bool>> = simple
            .iter()
            .map(|&a| simple.iter().map(|&b| a != b && self.inner_index(a, b) != 0).collect())
            .collect();
        classify(&adj).expect("closed subsystems of ADE systems are ADE")
    }
}
