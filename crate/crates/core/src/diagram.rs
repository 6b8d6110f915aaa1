//! Brauer diagrams on `m` strands, an independent model of type `A_{m-1}`.
//!
//! Points `0..m` are on top, `m..2m` on the bottom. The product `x·y` puts
//! `x` on top of `y`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{Family, GenWord, Token};
use crate::error::{Error, Result};
use crate::normal_form::{BrauerMonoid, NormalForm};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "DiagramRecord", try_from = "DiagramRecord")]
pub struct BrauerDiagram {
    strands: usize,
    partner: Vec<usize>,
    loops: i64,
}

/// Pair lists (1-based), through strands `(top, bottom)` and loop count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramRecord {
    pub strands: usize,
    pub top_pairs: Vec<(usize, usize)>,
    pub bottom_pairs: Vec<(usize, usize)>,
    pub through: Vec<(usize, usize)>,
    pub loops: i64,
}

impl From<BrauerDiagram> for DiagramRecord {
    fn from(d: BrauerDiagram) -> Self {
        let m = d.strands;
        let one = |v: Vec<(usize, usize)>| v.into_iter().map(|(a, b)| (a + 1, b + 1)).collect();
        DiagramRecord {
            strands: m,
            top_pairs: one(d.top_pairs()),
            bottom_pairs: one(d.bottom_pairs()),
            through: one(d.through()),
            loops: d.loops,
        }
    }
}

impl TryFrom<DiagramRecord> for BrauerDiagram {
    type Error = Error;

    fn try_from(r: DiagramRecord) -> Result<Self> {
        let m = r.strands;
        let mut partner = vec![usize::MAX; 2 * m];
        let mut link = |a: usize, b: usize| -> Result<()> {
            if a == 0 || b == 0 || a > 2 * m || b > 2 * m || a == b {
                return Err(Error::InvalidDiagram(format!("bad edge ({a},{b})")));
            }
            for p in [a - 1, b - 1] {
                if partner[p] != usize::MAX {
                    return Err(Error::InvalidDiagram(format!("point {} used twice", p + 1)));
                }
            }
            partner[a - 1] = b - 1;
            partner[b - 1] = a - 1;
            Ok(())
        };
        for &(a, b) in &r.top_pairs {
            link(a, b)?;
        }
        for &(a, b) in &r.bottom_pairs {
            link(a + m, b + m)?;
        }
        for &(a, b) in &r.through {
            link(a, b + m)?;
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::InvalidDiagram("unmatched point".into()));
        }
        Ok(BrauerDiagram { strands: m, partner, loops: r.loops })
    }
}

impl BrauerDiagram {
    pub fn identity(m: usize) -> Self {
        let partner = (0..2 * m).map(|p| if p < m { p + m } else { p - m }).collect();
        BrauerDiagram { strands: m, partner, loops: 0 }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn loops(&self) -> i64 {
        self.loops
    }

    /// Diagram of a generator, node `i` joining strands `i` and `i+1`.
    pub fn generator(m: usize, t: Token) -> Result<Self> {
        let mut d = Self::identity(m);
        match t {
            Token::Delta => d.loops = 1,
            Token::DeltaInv => d.loops = -1,
            Token::R(i) | Token::E(i) => {
                if i + 1 >= m {
                    return Err(Error::NodeOutOfRange { node: i + 1, rank: m.saturating_sub(1) });
                }
                let pairs = if matches!(t, Token::R(_)) {
                    [(i, i + 1 + m), (i + 1, i + m)]
                } else {
                    [(i, i + 1), (i + m, i + 1 + m)]
                };
                for (a, b) in pairs {
                    d.partner[a] = b;
                    d.partner[b] = a;
                }
            }
        }
        Ok(d)
    }

    /// Stack `self` on top of `below`; closed loops add to the δ-exponent.
    pub fn compose(&self, below: &BrauerDiagram) -> Result<BrauerDiagram> {
        let m = self.strands;
        if below.strands != m {
            return Err(Error::StrandMismatch(m, below.strands));
        }
        // Vertices: 0..2m for `self`, 2m..4m for `below`; self's bottom
        // point m+i is glued to below's top point 2m+i.
        let partner = |v: usize| if v < 2 * m { self.partner[v] } else { below.partner[v - 2 * m] + 2 * m };
        let glued = |v: usize| -> Option<usize> {
            if (m..2 * m).contains(&v) {
                Some(v + m)
            } else if (2 * m..3 * m).contains(&v) {
                Some(v - m)
            } else {
                None
            }
        };
        let outer = |v: usize| if v < m { v } else { v - 2 * m };
        let mut seen_middle = vec![false; m];
        let mut result = vec![usize::MAX; 2 * m];
        for start in (0..m).chain(3 * m..4 * m) {
            let s = outer(start);
            if result[s] != usize::MAX {
                continue;
            }
            let mut cur = partner(start);
            while let Some(g) = glued(cur) {
                seen_middle[(cur.min(g)) - m] = true;
                cur = partner(g);
            }
            let e = outer(cur);
            result[s] = e;
            result[e] = s;
        }
        let mut loops = self.loops + below.loops;
        for i in 0..m {
            if seen_middle[i] {
                continue;
            }
            loops += 1;
            // Alternate: x-bottom cap, then the y-top cap it is glued to.
            let mut cur = m + i;
            loop {
                seen_middle[cur - m] = true;
                let a = partner(cur);
                seen_middle[a - m] = true;
                let next = partner(a + m) - m;
                if seen_middle[next - m] {
                    break;
                }
                cur = next;
            }
        }
        Ok(BrauerDiagram { strands: m, partner: result, loops })
    }

    pub fn top_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.strands).filter(|&p| self.partner[p] < self.strands && p < self.partner[p]).map(|p| (p, self.partner[p])).collect()
    }

    pub fn bottom_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.strands;
        (m..2 * m)
            .filter(|&p| self.partner[p] >= m && p < self.partner[p])
            .map(|p| (p - m, self.partner[p] - m))
            .collect()
    }

    /// Through strands `(top, bottom)`, 0-based.
    pub fn through(&self) -> Vec<(usize, usize)> {
        let m = self.strands;
        (0..m).filter(|&p| self.partner[p] >= m).map(|p| (p, self.partner[p] - m)).collect()
    }

    pub fn render(&self) -> String {
        let pairs = |v: Vec<(usize, usize)>| -> String {
            v.iter().map(|(a, b)| format!("[{}-{}]", a + 1, b + 1)).collect::<Vec<_>>().join(" ")
        };
        let through: Vec<String> = self.through().iter().map(|(a, b)| format!("{}|{}", a + 1, b + 1)).collect();
        format!(
            "top     : {}\nthrough : {}\nbottom  : {}\nloops   : {}\n",
            pairs(self.top_pairs()),
            through.join(" "),
            pairs(self.bottom_pairs()),
            self.loops
        )
    }
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Fold of `compose` over generator diagrams.
pub fn word_to_diagram(m: usize, word: &GenWord) -> Result<BrauerDiagram> {
    let mut acc = BrauerDiagram::identity(m);
    for &t in word.tokens() {
        acc = acc.compose(&BrauerDiagram::generator(m, t)?)?;
    }
    Ok(acc)
}

fn apply_word(m: usize, nodes: &[usize]) -> Vec<usize> {
    // π(x) = τ_{i1}(τ_{i2}(⋯ τ_{ik}(x))).
    let mut perm: Vec<usize> = (0..m).collect();
    for &i in nodes.iter().rev() {
        for p in perm.iter_mut() {
            if *p == i {
                *p = i + 1;
            } else if *p == i + 1 {
                *p = i;
            }
        }
    }
    perm
}

/// Diagram of a normal form over `A_{m-1}`: pairs read from `L` and `R`
/// (the root `α_a + ⋯ + α_{b-1}` is the pair `(a, b)`), through strands
/// `p ↦ (π_u π_z π_v)⁻¹(p)`, and `k` loops.
pub fn nf_to_diagram(monoid: &BrauerMonoid, x: &NormalForm) -> Result<BrauerDiagram> {
    let graph = monoid.catalog().graph();
    if graph.family() != Family::A {
        return Err(Error::NotTypeA(graph.name()));
    }
    let rs = monoid.root_system();
    let m = graph.rank() + 1;
    let orbit = monoid.catalog().orbit(x.orbit)?;
    let pair_of = |root: usize| -> (usize, usize) {
        let c = &rs.root(root).0;
        let a = c.iter().position(|&v| v != 0).expect("nonzero root");
        let b = c.iter().rposition(|&v| v != 0).expect("nonzero root");
        (a, b + 1)
    };
    let mut nodes = orbit.words[x.left].clone();
    nodes.extend(monoid.z_nodes(x)?);
    nodes.extend(orbit.words[x.right].iter().rev());
    let pi = apply_word(m, &nodes);
    let mut inv = vec![0; m];
    for (p, &q) in pi.iter().enumerate() {
        inv[q] = p;
    }
    let mut partner = vec![usize::MAX; 2 * m];
    for r in orbit.members[x.left].roots() {
        let (a, b) = pair_of(r);
        partner[a] = b;
        partner[b] = a;
    }
    for r in orbit.members[x.right].roots() {
        let (a, b) = pair_of(r);
        partner[a + m] = b + m;
        partner[b + m] = a + m;
    }
    for p in 0..m {
        if partner[p] == usize::MAX {
            let q = inv[p] + m;
            if partner[q] != usize::MAX {
                return Err(Error::InvalidDiagram(format!("through strand from {} hits a paired point", p + 1)));
            }
            partner[p] = q;
            partner[q] = p;
        }
    }
    Ok(BrauerDiagram { strands: m, partner, loops: x.k })
}

/// Every diagram on `m` strands without loops.
pub fn all_diagrams(m: usize) -> Vec<BrauerDiagram> {
    fn go(partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(first) = partner.iter().position(|&p| p == usize::MAX) else {
            out.push(partner.clone());
            return;
        };
        for other in first + 1..partner.len() {
            if partner[other] == usize::MAX {
                partner[first] = other;
                partner[other] = first;
                go(partner, out);
                partner[first] = usize::MAX;
                partner[other] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; 2 * m], &mut out);
    out.into_iter().map(|partner| BrauerDiagram { strands: m, partner, loops: 0 }).collect()
}
