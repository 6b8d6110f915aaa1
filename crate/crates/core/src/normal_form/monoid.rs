//! Normal forms `u e_X z v δ^k` and monoid operations built on them.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::context::{DecoratedVector, OrbitContext, AX_BOUND};
use crate::admissible::{enumerate_catalog, sigma_word, AdmissibleSet, MutOrthSet, OrbitCatalog};
use crate::coxeter::{CoxeterGraph, GenWord, RootSystem, Token, WElement};
use crate::error::{Error, Result};

/// Canonical representative of a monoid element: orbit, left and right
/// members `L = u X`, `R = v⁻¹ X`, `z ∈ W(C)` and the δ-exponent `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub orbit: usize,
    pub left: usize,
    pub right: usize,
    pub z: WElement,
    pub k: i64,
}

impl NormalForm {
    /// The same element with `k` forgotten.
    pub fn without_delta(&self) -> NormalForm {
        NormalForm { k: 0, ..self.clone() }
    }
}

/// Text form of a normal form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalFormRecord {
    pub orbit: usize,
    pub u: String,
    pub v: String,
    pub z: String,
    pub k: i64,
    pub left: String,
    pub right: String,
    pub word: String,
}

/// Descend `β` to a simple root: returns nodes `j_1..j_m` and `i` with
/// `β = r_{j_1} ⋯ r_{j_m} α_i`.
pub fn root_path(rs: &RootSystem, beta: usize) -> (Vec<usize>, usize) {
    let mut path = Vec::new();
    let mut cur = beta;
    while rs.height(cur) > 1 {
        let j = (0..rs.rank())
            .find(|&j| rs.inner_index(cur, rs.simple_index(j)) > 0)
            .expect("a non-simple positive root has a descent");
        path.push(j);
        cur = rs.reflect_index(rs.simple_index(j), crate::coxeter::SignedRoot::positive(cur)).index();
    }
    (path, cur)
}

/// Word for `e_β = w e_i w⁻¹`.
pub fn e_beta_word(rs: &RootSystem, beta: usize) -> GenWord {
    let (path, i) = root_path(rs, beta);
    path.iter()
        .map(|&j| Token::R(j))
        .chain(std::iter::once(Token::E(i)))
        .chain(path.iter().rev().map(|&j| Token::R(j)))
        .collect()
}

/// Word for the reflection `r_β = w r_i w⁻¹`.
pub fn reflection_word(rs: &RootSystem, beta: usize) -> GenWord {
    let (path, i) = root_path(rs, beta);
    let mut nodes = path.clone();
    nodes.push(i);
    nodes.extend(path.iter().rev());
    GenWord::from_reflections(&nodes)
}

/// The Brauer monoid of one ADE graph: catalog plus lazily built orbit
/// contexts.
pub struct BrauerMonoid {
    catalog: OrbitCatalog,
    contexts: Vec<OnceLock<Result<OrbitContext>>>,
    ax_bound: usize,
}

impl BrauerMonoid {
    pub fn new(graph: CoxeterGraph) -> Result<Self> {
        Ok(Self::from_catalog(enumerate_catalog(RootSystem::new(graph))?))
    }

    pub fn from_catalog(catalog: OrbitCatalog) -> Self {
        let contexts = (0..catalog.orbits().len()).map(|_| OnceLock::new()).collect();
        BrauerMonoid { catalog, contexts, ax_bound: AX_BOUND }
    }

    pub fn with_ax_bound(mut self, bound: usize) -> Self {
        self.ax_bound = bound;
        self
    }

    pub fn catalog(&self) -> &OrbitCatalog {
        &self.catalog
    }

    pub fn root_system(&self) -> &RootSystem {
        self.catalog.root_system()
    }

    pub fn rank(&self) -> usize {
        self.root_system().rank()
    }

    pub fn context(&self, orbit: usize) -> Result<&OrbitContext> {
        let cell = self.contexts.get(orbit).ok_or(Error::UnknownOrbit(orbit))?;
        let rs = self.catalog.root_system();
        cell.get_or_init(|| OrbitContext::new(rs, &self.catalog.orbits()[orbit], self.ax_bound))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn identity(&self) -> NormalForm {
        NormalForm { orbit: 0, left: 0, right: 0, z: WElement::identity(self.root_system()), k: 0 }
    }

    /// Rewrite a word to its normal form: locate `L = a∅` and `R = aᵒᵖ∅`,
    /// then act with `a` on `ξ_R` to obtain `ξ_L z δ^s`, `k = s - |X|`.
    pub fn normalize(&self, word: &GenWord) -> Result<NormalForm> {
        word.validate(self.rank())?;
        let rs = self.root_system();
        let empty = AdmissibleSet::empty();
        let l = sigma_word(rs, word, &empty);
        let r = sigma_word(rs, &word.reversed(), &empty);
        let missing = |b: &AdmissibleSet| Error::Internal(format!("{b} is not in the catalog"));
        let (ol, li) = self.catalog.locate(&l).ok_or_else(|| missing(&l))?;
        let (or, ri) = self.catalog.locate(&r).ok_or_else(|| missing(&r))?;
        if ol != or {
            return Err(Error::Internal(format!("{l} and {r} lie in different orbits")));
        }
        let ctx = self.context(ol)?;
        match ctx.act_word(word.tokens(), &DecoratedVector::basis(rs, ri)) {
            DecoratedVector::Basis { member, w, k } if member == li => Ok(NormalForm {
                orbit: ol,
                left: li,
                right: ri,
                z: w,
                k: k - l.len() as i64,
            }),
            other => Err(Error::Internal(format!("word `{word}` acts on ξ_R as {other:?}"))),
        }
    }

    fn nodes_word(nodes: &[usize]) -> GenWord {
        GenWord::from_reflections(nodes)
    }

    /// Reduced word of `z` in the generators of `W(C)`.
    pub fn z_nodes(&self, x: &NormalForm) -> Result<Vec<usize>> {
        let c = self.catalog.orbit(x.orbit)?.c_nodes;
        x.z.parabolic_factor(self.root_system(), c)
            .ok_or_else(|| Error::Internal("z is not in W(C)".into()))
    }

    /// `u-word · e_β (β ∈ X) · z-word · v-word · δ^k`.
    pub fn canonical_word(&self, x: &NormalForm) -> Result<GenWord> {
        let orbit = self.catalog.orbit(x.orbit)?;
        let rs = self.root_system();
        let mut w = Self::nodes_word(&orbit.words[x.left]);
        for beta in orbit.highest().roots() {
            w.extend_from(&e_beta_word(rs, beta));
        }
        w.extend_from(&Self::nodes_word(&self.z_nodes(x)?));
        let v: Vec<usize> = orbit.words[x.right].iter().rev().copied().collect();
        w.extend_from(&Self::nodes_word(&v));
        w.extend_from(&GenWord::delta_power(x.k));
        Ok(w)
    }

    pub fn multiply(&self, x: &NormalForm, y: &NormalForm) -> Result<NormalForm> {
        self.normalize(&self.canonical_word(x)?.concat(&self.canonical_word(y)?))
    }

    /// Image under the anti-involution reversing words.
    pub fn opposite(&self, x: &NormalForm) -> Result<NormalForm> {
        self.normalize(&self.canonical_word(x)?.reversed())
    }

    pub fn equal(&self, a: &GenWord, b: &GenWord) -> Result<bool> {
        Ok(self.normalize(a)? == self.normalize(b)?)
    }

    /// `x · g` for a single generator.
    pub fn mul_token(&self, x: &NormalForm, g: Token) -> Result<NormalForm> {
        let mut w = self.canonical_word(x)?;
        w.push(g);
        self.normalize(&w)
    }

    pub fn e_beta(&self, beta: usize) -> Result<NormalForm> {
        if beta >= self.root_system().num_positive() {
            return Err(Error::NotARoot(format!("index {beta}")));
        }
        self.normalize(&e_beta_word(self.root_system(), beta))
    }

    /// `e_X = ∏_{β ∈ X} e_β` in sorted root order.
    pub fn e_set_word(&self, x: &MutOrthSet) -> GenWord {
        let mut w = GenWord::empty();
        for beta in x.roots() {
            w.extend_from(&e_beta_word(self.root_system(), beta));
        }
        w
    }

    pub fn e_set(&self, x: &MutOrthSet) -> Result<NormalForm> {
        self.normalize(&self.e_set_word(x))
    }

    pub fn record(&self, x: &NormalForm) -> Result<NormalFormRecord> {
        let orbit = self.catalog.orbit(x.orbit)?;
        let rs = self.root_system();
        let v: Vec<usize> = orbit.words[x.right].iter().rev().copied().collect();
        Ok(NormalFormRecord {
            orbit: x.orbit,
            u: Self::nodes_word(&orbit.words[x.left]).to_string(),
            v: Self::nodes_word(&v).to_string(),
            z: Self::nodes_word(&self.z_nodes(x)?).to_string(),
            k: x.k,
            left: orbit.members[x.left].render(rs),
            right: orbit.members[x.right].render(rs),
            word: self.canonical_word(x)?.to_string(),
        })
    }
}
