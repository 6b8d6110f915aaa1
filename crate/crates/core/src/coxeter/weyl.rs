//! Weyl group elements as signed permutations of the positive roots.

use std::collections::{HashMap, HashSet, VecDeque};

use super::graph::NodeSet;
use super::roots::{RootSystem, SignedRoot};
use super::word::{GenWord, Token};
use crate::error::{Error, Result};

/// An element `w` of `W(M)`, stored as the images `w(β)` of all positive
/// roots `β`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WElement {
    images: Box<[SignedRoot]>,
}

impl WElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WElement { images: (0..rs.num_positive()).map(SignedRoot::positive).collect() }
    }

    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Self {
        Self::reflection(rs, rs.simple_index(i))
    }

    /// The reflection `r_β` for the positive root with index `beta`.
    pub fn reflection(rs: &RootSystem, beta: usize) -> Self {
        WElement {
            images: (0..rs.num_positive())
                .map(|g| rs.reflect_index(beta, SignedRoot::positive(g)))
                .collect(),
        }
    }

    /// Product of simple reflections `r_{w[0]} r_{w[1]} ...` (0-based nodes).
    pub fn from_nodes(rs: &RootSystem, word: &[usize]) -> Self {
        let mut acc = Self::identity(rs);
        for &i in word.iter().rev() {
            acc = acc.left_mul_simple(rs, i);
        }
        acc
    }

    /// Evaluate a word made only of `r_i` tokens.
    pub fn from_word(rs: &RootSystem, word: &GenWord) -> Result<Self> {
        let mut nodes = Vec::with_capacity(word.len());
        for t in word.tokens() {
            match *t {
                Token::R(i) => {
                    if i >= rs.rank() {
                        return Err(Error::NodeOutOfRange { node: i + 1, rank: rs.rank() });
                    }
                    nodes.push(i);
                }
                other => return Err(Error::NotAReflectionWord(other.to_string())),
            }
        }
        Ok(Self::from_nodes(rs, &nodes))
    }

    pub fn apply(&self, r: SignedRoot) -> SignedRoot {
        self.images[r.index()].flip_if(r.is_negative())
    }

    pub fn image_of(&self, positive_index: usize) -> SignedRoot {
        self.images[positive_index]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &WElement) -> WElement {
        WElement { images: other.images.iter().map(|&r| self.apply(r)).collect() }
    }

    /// `r_i ∘ self`.
    pub fn left_mul_simple(&self, rs: &RootSystem, i: usize) -> WElement {
        let a = rs.simple_index(i);
        WElement { images: self.images.iter().map(|&r| rs.reflect_index(a, r)).collect() }
    }

    pub fn inverse(&self) -> WElement {
        let mut images = vec![SignedRoot(0); self.images.len()].into_boxed_slice();
        for (p, &img) in self.images.iter().enumerate() {
            images[img.index()] = SignedRoot::new(p, img.is_negative());
        }
        WElement { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, r)| *r == SignedRoot::positive(p))
    }

    /// Coxeter length: the number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.images.iter().filter(|r| r.is_negative()).count()
    }

    /// Right descent: `w α_i < 0`.
    pub fn has_right_descent(&self, rs: &RootSystem, i: usize) -> bool {
        self.images[rs.simple_index(i)].is_negative()
    }

    /// A reduced word (0-based nodes), taking the smallest right descent at
    /// every step.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        self.parabolic_factor(rs, rs.graph().all_nodes())
            .expect("every element lies in the full parabolic")
    }

    /// Membership in the standard parabolic subgroup `W(C)`: `w` lies in
    /// `W(C)` iff `w α_j - α_j` is supported on `C` for every node `j`.
    pub fn in_parabolic(&self, rs: &RootSystem, c: NodeSet) -> bool {
        let n = rs.rank();
        (0..n).all(|j| {
            let img = rs.signed_root(self.images[rs.simple_index(j)]);
            (0..n).all(|k| c.contains(k) || img.0[k] == (k == j) as i32)
        })
    }

    /// If `w ∈ W(C)`, a reduced word for it in the generators `{r_i : i ∈ C}`;
    /// otherwise `None`. Repeatedly strips a right descent in `C`.
    pub fn parabolic_factor(&self, rs: &RootSystem, c: NodeSet) -> Option<Vec<usize>> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        let simple_refl: HashMap<usize, WElement> =
            c.iter().map(|i| (i, WElement::simple_reflection(rs, i))).collect();
        while !w.is_identity() {
            let i = c.iter().find(|&i| w.has_right_descent(rs, i))?;
            w = w.compose(&simple_refl[&i]);
            rev.push(i);
        }
        rev.reverse();
        Some(rev)
    }
}

/// Enumerate the standard parabolic subgroup `W(C)` by breadth-first search
/// on left multiplication by generators. Fails beyond `bound` elements.
pub fn enumerate_parabolic(rs: &RootSystem, c: NodeSet, bound: usize) -> Result<Vec<WElement>> {
    let gens: Vec<usize> = c.iter().collect();
    let id = WElement::identity(rs);
    let mut seen: HashSet<WElement> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for &i in &gens {
            let next = w.left_mul_simple(rs, i);
            if seen.insert(next.clone()) {
                if out.len() >= bound {
                    return Err(Error::BoundExceeded(bound));
                }
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}

/// Closure of a generating set under composition.
pub fn generate_group(rs: &RootSystem, gens: &[WElement], bound: usize) -> Result<Vec<WElement>> {
    let id = WElement::identity(rs);
    let mut seen: HashSet<WElement> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut k = 0;
    while k < out.len() {
        let w = out[k].clone();
        k += 1;
        for g in gens {
            let next = g.compose(&w);
            if seen.insert(next.clone()) {
                if out.len() >= bound {
                    return Err(Error::BoundExceeded(bound));
                }
                out.push(next);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn w(rs: &RootSystem, s: &str) -> WElement {
        WElement::from_word(rs, &s.parse().unwrap()).unwrap()
    }

    #[test]
    fn word_examples() {
        let a2 = rs("A2");
        assert!(w(&a2, "").is_identity());
        assert!(w(&a2, "r1 r1").is_identity());
        assert_eq!(w(&a2, "r1 r2 r1"), w(&a2, "r2 r1 r2"));
        assert_ne!(w(&a2, "r1 r2"), w(&a2, "r2 r1"));
        let words: GenWord = "e1 r1".parse().unwrap();
        assert!(matches!(WElement::from_word(&a2, &words), Err(Error::NotAReflectionWord(_))));
        let far: GenWord = "r3".parse().unwrap();
        assert!(WElement::from_word(&a2, &far).is_err());
    }

    #[test]
    fn parabolic_examples() {
        let a2 = rs("A2");
        let id = WElement::identity(&a2);
        assert_eq!(id.parabolic_factor(&a2, NodeSet::from_nodes([1])), Some(vec![]));
        let r1 = WElement::simple_reflection(&a2, 0);
        assert_eq!(r1.parabolic_factor(&a2, NodeSet::from_nodes([0])), Some(vec![0]));
        assert_eq!(r1.parabolic_factor(&a2, NodeSet::from_nodes([1])), None);
        assert!(!r1.in_parabolic(&a2, NodeSet::from_nodes([1])));
    }

    #[test]
    fn group_orders() {
        let d4 = rs("D4");
        let all = enumerate_parabolic(&d4, d4.graph().all_nodes(), 1000).unwrap();
        assert_eq!(all.len(), 192);
        let sub = enumerate_parabolic(&d4, NodeSet::from_nodes([0, 2, 3]), 1000).unwrap();
        assert_eq!(sub.len(), 8);
        for x in &all {
            assert_eq!(x.in_parabolic(&d4, NodeSet::from_nodes([0, 2, 3])), sub.contains(x));
        }
        assert!(enumerate_parabolic(&d4, d4.graph().all_nodes(), 100).is_err());
        let e6 = rs("E6");
        assert_eq!(enumerate_parabolic(&e6, e6.graph().all_nodes(), 60_000).unwrap().len(), 51_840);
    }

    fn arb_word(rank: usize) -> impl Strategy<Value = Vec<usize>> {
        prop::collection::vec(0..rank, 0..24)
    }

    proptest! {
        #[test]
        fn preserves_form(word in arb_word(6)) {
            let sys = rs("E6");
            let x = WElement::from_nodes(&sys, &word);
            let n = sys.num_positive();
            for b in 0..n {
                for g in 0..n {
                    let ip = sys.inner_signed(x.image_of(b), x.image_of(g));
                    prop_assert_eq!(ip, sys.inner_index(b, g));
                }
            }
        }

        #[test]
        fn homomorphism(a in arb_word(5), b in arb_word(5)) {
            let sys = rs("D5");
            let ab: Vec<usize> = a.iter().chain(&b).copied().collect();
            let lhs = WElement::from_nodes(&sys, &ab);
            let rhs = WElement::from_nodes(&sys, &a).compose(&WElement::from_nodes(&sys, &b));
            prop_assert_eq!(&lhs, &rhs);
            prop_assert!(lhs.compose(&lhs.inverse()).is_identity());
        }

        #[test]
        fn reduced_words(word in arb_word(4)) {
            let sys = rs("A4");
            let x = WElement::from_nodes(&sys, &word);
            let red = x.reduced_word(&sys);
            prop_assert_eq!(red.len(), x.length());
            prop_assert!(red.len() <= word.len());
            prop_assert_eq!(WElement::from_nodes(&sys, &red), x);
        }

        #[test]
        fn parabolic_membership(word in prop::collection::vec(prop::sample::select(vec![0usize, 2, 3, 4]), 0..16), extra in 0usize..5) {
            let sys = rs("D5");
            let c = NodeSet::from_nodes([0, 2, 3, 4]);
            let x = WElement::from_nodes(&sys, &word);
            let f = x.parabolic_factor(&sys, c).expect("member");
            prop_assert!(f.iter().all(|&i| c.contains(i)));
            prop_assert_eq!(WElement::from_nodes(&sys, &f), x.clone());
            let y = x.left_mul_simple(&sys, extra);
            prop_assert_eq!(y.parabolic_factor(&sys, c).is_some(), c.contains(extra));
            prop_assert_eq!(y.in_parabolic(&sys, c), c.contains(extra));
        }
    }
}
