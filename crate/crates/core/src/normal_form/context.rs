//! Per-orbit data for the monomial representation ρ_𝓑: the group `A_X`,
//! projection of `N_W(X)` onto `W(C)`, and precomputed generator actions.

use std::collections::HashSet;

use crate::admissible::{sigma_gen, AdmissibleSet, Orbit};
use crate::coxeter::{enumerate_parabolic, generate_group, NodeSet, RootSystem, Token, WElement};
use crate::error::{Error, Result};

/// Default cap on the size of an enumerated `A_X`.
pub const AX_BOUND: usize = 1 << 20;

/// The normal subgroup `A_X` of `N_W(X)` for a highest element `X`.
#[derive(Debug, Clone)]
pub struct AXGroup {
    elements: HashSet<WElement>,
}

impl AXGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &WElement) -> bool {
        self.elements.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &WElement> {
        self.elements.iter()
    }
}

/// Close `{r_β} ∪ {r_α r_β r_γ r_α : β ∼ α ∼ γ}` (β, γ ∈ X) under
/// composition.
pub fn enumerate_ax(rs: &RootSystem, x: &AdmissibleSet, bound: usize) -> Result<AXGroup> {
    let members: Vec<usize> = x.roots().collect();
    let mut gens: Vec<WElement> = members.iter().map(|&b| WElement::reflection(rs, b)).collect();
    for a in 0..rs.num_positive() {
        let near: Vec<usize> = members.iter().copied().filter(|&b| !rs.orthogonal(a, b)).collect();
        if near.len() < 2 {
            continue;
        }
        let ra = WElement::reflection(rs, a);
        for (p, &b) in near.iter().enumerate() {
            for &c in &near[p + 1..] {
                let g = ra
                    .compose(&WElement::reflection(rs, b))
                    .compose(&WElement::reflection(rs, c))
                    .compose(&ra);
                gens.push(g);
            }
        }
    }
    gens.sort();
    gens.dedup();
    let elements = generate_group(rs, &gens, bound)?.into_iter().collect();
    Ok(AXGroup { elements })
}

/// Result of `e_i` on a basis vector `ξ_B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EMove {
    /// `α_i ∈ B`: multiply by δ.
    Delta,
    /// `α_i ⊥ B`.
    Zero,
    /// `ξ_{B'} c`.
    Move(usize, WElement),
}

/// A monomial vector `ξ_B w δ^k` of ρ_𝓑, or zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DecoratedVector {
    Zero,
    Basis { member: usize, w: WElement, k: i64 },
}

impl DecoratedVector {
    pub fn basis(rs: &RootSystem, member: usize) -> Self {
        DecoratedVector::Basis { member, w: WElement::identity(rs), k: 0 }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, DecoratedVector::Zero)
    }
}

/// Everything needed to let the generators act on the module of one orbit.
/// The basis vector of `B` is `ξ_B = u_B ξ_X` with `u_B` the stored coset
/// representative; `w ξ_B = ξ_{wB} π(u_{wB}⁻¹ w u_B)` where `π` is the
/// projection `N_W(X) → W(C)` with kernel `A_X`.
#[derive(Debug)]
pub struct OrbitContext {
    pub orbit: usize,
    c: NodeSet,
    identity: WElement,
    ax: AXGroup,
    wc: Option<Vec<(WElement, WElement)>>,
    reps: Vec<WElement>,
    rep_invs: Vec<WElement>,
    r_table: Vec<Vec<(usize, WElement)>>,
    e_table: Vec<Vec<EMove>>,
}

impl OrbitContext {
    pub fn new(rs: &RootSystem, orbit: &Orbit, bound: usize) -> Result<Self> {
        let x = orbit.highest();
        let ax = enumerate_ax(rs, x, bound)?;
        let wc_order = orbit.c_type.weyl_order();
        let wc = if !orbit.c_nodes.is_empty() && ax.len() > 1 && wc_order <= ax.len() as u128 {
            let els = enumerate_parabolic(rs, orbit.c_nodes, ax.len() + 1)?;
            Some(els.into_iter().map(|c| (c.inverse(), c)).collect())
        } else {
            None
        };
        let reps: Vec<WElement> = orbit.words.iter().map(|w| WElement::from_nodes(rs, w)).collect();
        let rep_invs = reps.iter().map(WElement::inverse).collect();
        let mut ctx = OrbitContext {
            orbit: orbit.id,
            c: orbit.c_nodes,
            identity: WElement::identity(rs),
            ax,
            wc,
            reps,
            rep_invs,
            r_table: Vec::new(),
            e_table: Vec::new(),
        };
        ctx.build_tables(rs, orbit)?;
        Ok(ctx)
    }

    fn transport(&self, rs: &RootSystem, orbit: &Orbit, from: usize, g: &WElement) -> Result<(usize, WElement)> {
        let target = orbit.members[from].apply(g);
        let to = orbit
            .position(&target)
            .ok_or_else(|| Error::Internal(format!("{target} is not in orbit {}", orbit.id)))?;
        let n = self.rep_invs[to].compose(g).compose(&self.reps[from]);
        debug_assert_eq!(orbit.highest().apply(&n), *orbit.highest());
        Ok((to, self.project(rs, &n)?))
    }

    fn build_tables(&mut self, rs: &RootSystem, orbit: &Orbit) -> Result<()> {
        let n = rs.rank();
        let simple: Vec<WElement> = (0..n).map(|i| WElement::simple_reflection(rs, i)).collect();
        let mut r_table = Vec::with_capacity(orbit.len());
        let mut e_table = Vec::with_capacity(orbit.len());
        for (b, set) in orbit.members.iter().enumerate() {
            let mut rrow = Vec::with_capacity(n);
            let mut erow = Vec::with_capacity(n);
            for (i, ri) in simple.iter().enumerate() {
                rrow.push(self.transport(rs, orbit, b, ri)?);
                let a = rs.simple_index(i);
                let mv = if set.contains(a) {
                    EMove::Delta
                } else {
                    match set.roots().find(|&beta| !rs.orthogonal(beta, a)) {
                        None => EMove::Zero,
                        Some(beta) => {
                            let g = WElement::reflection(rs, beta).compose(ri);
                            let (to, c) = self.transport(rs, orbit, b, &g)?;
                            debug_assert_eq!(orbit.members[to], sigma_gen(rs, Token::E(i), set));
                            EMove::Move(to, c)
                        }
                    }
                };
                erow.push(mv);
            }
            r_table.push(rrow);
            e_table.push(erow);
        }
        self.r_table = r_table;
        self.e_table = e_table;
        Ok(())
    }

    pub fn c_nodes(&self) -> NodeSet {
        self.c
    }

    pub fn ax(&self) -> &AXGroup {
        &self.ax
    }

    /// Stored coset representative `u_B` of member `b`.
    pub fn rep(&self, b: usize) -> &WElement {
        &self.reps[b]
    }

    pub fn num_members(&self) -> usize {
        self.reps.len()
    }

    /// The `W(C)` factor `c` of `n = a c` with `a ∈ A_X`.
    pub fn project(&self, rs: &RootSystem, n: &WElement) -> Result<WElement> {
        let fail = || Error::Internal(format!("element does not normalize the highest element of orbit {}", self.orbit));
        if self.c.is_empty() {
            return if self.ax.contains(n) { Ok(self.identity.clone()) } else { Err(fail()) };
        }
        if self.ax.len() == 1 {
            return if n.in_parabolic(rs, self.c) { Ok(n.clone()) } else { Err(fail()) };
        }
        if let Some(wc) = &self.wc {
            for (c_inv, c) in wc {
                if self.ax.contains(&n.compose(c_inv)) {
                    return Ok(c.clone());
                }
            }
            return Err(fail());
        }
        for a in self.ax.iter() {
            let c = a.inverse().compose(n);
            if c.in_parabolic(rs, self.c) {
                return Ok(c);
            }
        }
        Err(fail())
    }

    /// `h_{B,i}`: the `W(C)` part of `u_B⁻¹ r_i u_B` when `α_i ⊥ B`, else 1.
    pub fn h_transport(&self, rs: &RootSystem, orbit: &Orbit, b: usize, i: usize) -> Result<WElement> {
        if !orbit.members[b].perpendicular_to(rs, rs.simple_index(i)) {
            return Ok(self.identity.clone());
        }
        let n = self.rep_invs[b].compose(&WElement::simple_reflection(rs, i)).compose(&self.reps[b]);
        self.project(rs, &n)
    }

    /// `(r_i B, π(u_{r_iB}⁻¹ r_i u_B))`.
    pub fn r_move(&self, b: usize, i: usize) -> (usize, &WElement) {
        let (to, c) = &self.r_table[b][i];
        (*to, c)
    }

    pub fn e_move(&self, b: usize, i: usize) -> &EMove {
        &self.e_table[b][i]
    }

    /// Action of one generator on a monomial vector.
    pub fn act(&self, token: Token, v: &DecoratedVector) -> DecoratedVector {
        let DecoratedVector::Basis { member, w, k } = v else {
            return DecoratedVector::Zero;
        };
        match token {
            Token::Delta => DecoratedVector::Basis { member: *member, w: w.clone(), k: k + 1 },
            Token::DeltaInv => DecoratedVector::Basis { member: *member, w: w.clone(), k: k - 1 },
            Token::R(i) => {
                let (to, c) = self.r_move(*member, i);
                DecoratedVector::Basis { member: to, w: c.compose(w), k: *k }
            }
            Token::E(i) => match self.e_move(*member, i) {
                EMove::Delta => DecoratedVector::Basis { member: *member, w: w.clone(), k: k + 1 },
                EMove::Zero => DecoratedVector::Zero,
                EMove::Move(to, c) => DecoratedVector::Basis { member: *to, w: c.compose(w), k: *k },
            },
        }
    }

    /// Action of a word; the rightmost token acts first.
    pub fn act_word(&self, tokens: &[Token], v: &DecoratedVector) -> DecoratedVector {
        let mut cur = v.clone();
        for &t in tokens.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = self.act(t, &cur);
        }
        cur
    }
}
