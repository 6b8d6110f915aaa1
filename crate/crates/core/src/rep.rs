//! ρ_𝓑 as explicit monomial matrices over `{0} ∪ δ^ℤ`, relation checks and
//! the block-size report.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::admissible::OrbitCatalog;
use crate::coxeter::{enumerate_parabolic, CartanType, Family, GenWord, Token, WElement};
use crate::error::{Error, Result};
use crate::normal_form::{BrauerMonoid, DecoratedVector, OrbitContext};
use crate::relations::relations;

/// Default cap on `|𝓑|·|W(C)|`.
pub const DIM_LIMIT: usize = 250_000;

/// `0` or `δ^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LaurentMonomial {
    Zero,
    Delta(i64),
}

impl Mul for LaurentMonomial {
    type Output = LaurentMonomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: LaurentMonomial) -> LaurentMonomial {
        match (self, rhs) {
            (LaurentMonomial::Delta(a), LaurentMonomial::Delta(b)) => LaurentMonomial::Delta(a + b),
            _ => LaurentMonomial::Zero,
        }
    }
}

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LaurentMonomial::Zero => write!(f, "0"),
            LaurentMonomial::Delta(0) => write!(f, "1"),
            LaurentMonomial::Delta(k) => write!(f, "d^{k}"),
        }
    }
}

/// Basis `(B, w)` of one orbit module, `w ∈ W(C)`, indexed as
/// `b·|W(C)| + index(w)`.
pub struct OrbitBasis<'a> {
    ctx: &'a OrbitContext,
    wc: Vec<WElement>,
    wc_index: HashMap<WElement, usize>,
    gens: HashMap<Token, RepMatrix>,
}

impl<'a> OrbitBasis<'a> {
    pub fn new(monoid: &'a BrauerMonoid, orbit: usize, limit: usize) -> Result<Self> {
        let o = monoid.catalog().orbit(orbit)?;
        let wc_order = o.c_type.weyl_order();
        let dim = (o.len() as u128).saturating_mul(wc_order);
        if dim > limit as u128 {
            return Err(Error::DimensionTooLarge { dim: dim.min(usize::MAX as u128) as usize, limit });
        }
        let ctx = monoid.context(orbit)?;
        let wc = enumerate_parabolic(monoid.root_system(), o.c_nodes, wc_order as usize)?;
        let wc_index = wc.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let mut basis = OrbitBasis { ctx, wc, wc_index, gens: HashMap::new() };
        let n = monoid.rank();
        let tokens = (0..n).map(Token::R).chain((0..n).map(Token::E)).chain([Token::Delta, Token::DeltaInv]);
        basis.gens = tokens.map(|t| (t, basis.build_generator(t))).collect();
        Ok(basis)
    }

    pub fn dim(&self) -> usize {
        self.ctx.num_members() * self.wc.len()
    }

    pub fn vector(&self, col: usize) -> DecoratedVector {
        let (b, w) = (col / self.wc.len(), col % self.wc.len());
        DecoratedVector::Basis { member: b, w: self.wc[w].clone(), k: 0 }
    }

    pub fn index(&self, v: &DecoratedVector) -> Option<(usize, i64)> {
        match v {
            DecoratedVector::Zero => None,
            DecoratedVector::Basis { member, w, k } => Some((member * self.wc.len() + self.wc_index[w], *k)),
        }
    }

    pub fn describe(&self, col: usize) -> String {
        let (b, w) = (col / self.wc.len(), col % self.wc.len());
        format!("(member {b}, W(C) element {w})")
    }

    fn build_generator(&self, t: Token) -> RepMatrix {
        let cols = (0..self.dim()).map(|c| self.index(&self.ctx.act(t, &self.vector(c)))).collect();
        RepMatrix { cols }
    }

    /// Matrix of a single generator.
    pub fn generator(&self, t: Token) -> Result<&RepMatrix> {
        self.gens.get(&t).ok_or_else(|| Error::NodeOutOfRange { node: t.node().map_or(0, |i| i + 1), rank: self.gens.len() / 2 - 1 })
    }

    /// Matrix of a word as the product of its generator matrices.
    pub fn matrix_of_word(&self, word: &GenWord) -> Result<RepMatrix> {
        let mut acc = RepMatrix::identity(self.dim());
        for &t in word.tokens() {
            acc = &acc * self.generator(t)?;
        }
        Ok(acc)
    }
}

/// Square monomial matrix stored by column: `cols[j] = Some((i, k))` means
/// entry `(i, j)` is `δ^k` and the rest of the column is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepMatrix {
    cols: Vec<Option<(usize, i64)>>,
}

impl RepMatrix {
    pub fn identity(dim: usize) -> Self {
        RepMatrix { cols: (0..dim).map(|c| Some((c, 0))).collect() }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> Option<(usize, i64)> {
        self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> LaurentMonomial {
        match self.cols[j] {
            Some((r, k)) if r == i => LaurentMonomial::Delta(k),
            _ => LaurentMonomial::Zero,
        }
    }

    /// `(row, col, exponent)` for every nonzero entry, by column.
    pub fn triplets(&self) -> Vec<(usize, usize, i64)> {
        self.cols.iter().enumerate().filter_map(|(j, c)| c.map(|(i, k)| (i, j, k))).collect()
    }

    pub fn to_triplet_text(&self) -> String {
        let mut s = format!("# dim {}\n", self.dim());
        for (i, j, k) in self.triplets() {
            s.push_str(&format!("{i} {j} {k}\n"));
        }
        s
    }
}

impl Mul for &RepMatrix {
    type Output = RepMatrix;

    fn mul(self, rhs: &RepMatrix) -> RepMatrix {
        let cols = rhs
            .cols
            .iter()
            .map(|c| c.and_then(|(r, k)| self.cols[r].map(|(i, k2)| (i, k + k2))))
            .collect();
        RepMatrix { cols }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub family: String,
    pub lhs: String,
    pub rhs: String,
    pub column: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub orbit: usize,
    pub dim: usize,
    pub instances: usize,
    pub families: Vec<String>,
    pub violations: Vec<Violation>,
}

/// Compare both sides of every relation instance as matrices on one orbit.
pub fn verify_relations(monoid: &BrauerMonoid, orbit: usize, limit: usize) -> Result<RelationReport> {
    let basis = OrbitBasis::new(monoid, orbit, limit)?;
    let rels = relations(monoid.catalog().graph());
    let mut families: Vec<String> = rels.iter().map(|r| r.family.to_string()).collect();
    families.sort();
    families.dedup();
    let mut violations = Vec::new();
    for r in &rels {
        let (a, b) = (basis.matrix_of_word(&r.lhs)?, basis.matrix_of_word(&r.rhs)?);
        if let Some(j) = (0..a.dim()).find(|&j| a.column(j) != b.column(j)) {
            violations.push(Violation {
                family: r.family.to_string(),
                lhs: r.lhs.to_string(),
                rhs: r.rhs.to_string(),
                column: basis.describe(j),
            });
        }
    }
    Ok(RelationReport { orbit, dim: basis.dim(), instances: rels.len(), families, violations })
}

/// Integer partitions of `m` in decreasing order.
pub fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// Irreducible degree of `S_m` for a partition, by the hook length formula.
pub fn hook_length_dim(shape: &[usize]) -> BigUint {
    let m: usize = shape.iter().sum();
    let mut hooks = BigUint::from(1u32);
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            let below = shape[r + 1..].iter().filter(|&&l| l > c).count();
            hooks *= BigUint::from(len - c + below);
        }
    }
    let fact: BigUint = (1..=m).map(BigUint::from).product();
    fact / hooks
}

/// Irreducible degrees of `W(C)` when every component is of type A, sorted.
pub fn type_a_irreducible_dims(c: &CartanType) -> Option<Vec<BigUint>> {
    if !c.is_type_a() {
        return None;
    }
    let mut dims = vec![BigUint::from(1u32)];
    for &(family, rank) in c.components() {
        debug_assert_eq!(family, Family::A);
        let local: Vec<BigUint> = partitions(rank + 1).iter().map(|p| hook_length_dim(p)).collect();
        dims = dims.iter().flat_map(|d| local.iter().map(move |l| d * l)).collect();
    }
    dims.sort();
    Some(dims)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRow {
    pub orbit: usize,
    pub orbit_size: usize,
    pub c_type: String,
    pub wc_order: BigUint,
    pub contribution: BigUint,
    /// Irreducible degrees τ(1) of `W(C)`; `None` when `C` has a D or E
    /// component.
    pub tau: Option<Vec<BigUint>>,
    pub tau_square_sum: Option<BigUint>,
    /// Matrix block sizes `|𝓑|·τ(1)`.
    pub blocks: Option<Vec<BigUint>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub graph: String,
    pub rows: Vec<BlockRow>,
    pub total: BigUint,
}

pub fn block_report(catalog: &OrbitCatalog) -> BlockReport {
    let rows: Vec<BlockRow> = catalog
        .orbits()
        .iter()
        .map(|o| {
            let wc = BigUint::from(o.c_type.weyl_order());
            let size = BigUint::from(o.len());
            let tau = type_a_irreducible_dims(&o.c_type);
            BlockRow {
                orbit: o.id,
                orbit_size: o.len(),
                c_type: o.c_type.to_string(),
                contribution: &size * &size * &wc,
                wc_order: wc,
                tau_square_sum: tau.as_ref().map(|t| t.iter().map(|d| d * d).sum()),
                blocks: tau.as_ref().map(|t| t.iter().map(|d| d * &size).collect()),
                tau,
            }
        })
        .collect();
    let total = rows.iter().map(|r| r.contribution.clone()).sum();
    BlockReport { graph: catalog.graph().name(), rows, total }
}
