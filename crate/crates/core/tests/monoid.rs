use std::collections::{HashMap, HashSet, VecDeque};

use brauer_core::admissible::{admissible_closure, sigma_word, MutOrthSet};
use brauer_core::coxeter::{GenWord, RootSystem, Token, WElement};
use brauer_core::normal_form::{e_beta_word, reflection_word, BrauerMonoid, DecoratedVector, NormalForm};
use brauer_core::relations::relations;
use brauer_core::rep::{OrbitBasis, RepMatrix, DIM_LIMIT};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

fn monoid(g: &str) -> BrauerMonoid {
    BrauerMonoid::new(g.parse().unwrap()).unwrap()
}

fn random_word(rng: &mut StdRng, n: usize, len: usize) -> GenWord {
    (0..len)
        .map(|_| {
            let k = rng.random_range(0..2 * n);
            if k < n { Token::R(k) } else { Token::E(k - n) }
        })
        .collect()
}

#[test]
fn induced_action_respects_relations() {
    for g in ["A3", "D4", "D5"] {
        let m = monoid(g);
        let rels = relations(m.catalog().graph());
        for o in m.catalog().orbits() {
            let ctx = m.context(o.id).unwrap();
            let basis = OrbitBasis::new(&m, o.id, DIM_LIMIT).unwrap();
            for col in 0..basis.dim() {
                let v = basis.vector(col);
                for r in &rels {
                    assert_eq!(
                        ctx.act_word(r.lhs.tokens(), &v),
                        ctx.act_word(r.rhs.tokens(), &v),
                        "{g} orbit {} {}: {} = {}",
                        o.id,
                        basis.describe(col),
                        r.lhs,
                        r.rhs
                    );
                }
            }
        }
    }
}

#[test]
fn transport_on_highest_element() {
    for g in ["A4", "D5", "E6"] {
        let m = monoid(g);
        let rs = m.root_system();
        for o in m.catalog().orbits() {
            let ctx = m.context(o.id).unwrap();
            for i in 0..rs.rank() {
                let h = ctx.h_transport(rs, o, 0, i).unwrap();
                if o.c_nodes.contains(i) {
                    assert_eq!(h, WElement::simple_reflection(rs, i), "{g} orbit {} node {}", o.id, i + 1);
                }
                for b in 0..o.len() {
                    let h = ctx.h_transport(rs, o, b, i).unwrap();
                    assert!(h.in_parabolic(rs, o.c_nodes));
                    if !o.members[b].perpendicular_to(rs, rs.simple_index(i)) {
                        assert!(h.is_identity());
                    }
                }
            }
        }
    }
}

#[test]
fn idempotent_of_root_is_well_defined() {
    let mut rng = StdRng::seed_from_u64(50);
    let mut checked = 0;
    for g in ["D5", "E6"] {
        let m = monoid(g);
        let rs = m.root_system();
        let mut by_root: HashMap<usize, Vec<(Vec<usize>, usize)>> = HashMap::new();
        for _ in 0..2000 {
            let len = rng.random_range(0..10);
            let nodes: Vec<usize> = (0..len).map(|_| rng.random_range(0..rs.rank())).collect();
            let i = rng.random_range(0..rs.rank());
            let beta = WElement::from_nodes(rs, &nodes).image_of(rs.simple_index(i));
            if !beta.is_negative() {
                by_root.entry(beta.index()).or_default().push((nodes, i));
            }
        }
        let conj = |(nodes, i): &(Vec<usize>, usize)| {
            let w = GenWord::from_reflections(nodes);
            let back: Vec<usize> = nodes.iter().rev().copied().collect();
            m.normalize(&w.concat(&GenWord::new(vec![Token::E(*i)])).concat(&GenWord::from_reflections(&back))).unwrap()
        };
        let mut roots: Vec<&usize> = by_root.keys().collect();
        roots.sort();
        for _ in 0..25 {
            let beta = roots[rng.random_range(0..roots.len())];
            let reps = &by_root[beta];
            let a = &reps[rng.random_range(0..reps.len())];
            let b = &reps[rng.random_range(0..reps.len())];
            assert_eq!(conj(a), conj(b), "{g} root {}", rs.root(*beta));
            assert_eq!(conj(a), m.e_beta(*beta).unwrap());
            checked += 1;
        }
    }
    assert_eq!(checked, 50);
}

#[test]
fn product_with_set_idempotent_expands() {
    for g in ["A3", "A4", "D4", "D5"] {
        let m = monoid(g);
        let rs = m.root_system();
        let nf = |w: &GenWord| m.normalize(w).unwrap();
        for o in m.catalog().orbits() {
            for x in &o.members {
                let ex = m.e_set_word(&x.as_mut_orth());
                for beta in 0..rs.num_positive() {
                    let lhs = nf(&e_beta_word(rs, beta).concat(&ex));
                    if x.contains(beta) {
                        assert_eq!(lhs, nf(&ex.concat(&GenWord::delta_power(1))));
                    } else if x.perpendicular_to(rs, beta) {
                        let y = MutOrthSet::new(rs, x.roots().chain([beta])).unwrap();
                        let cl = admissible_closure(rs, &y);
                        let shift = -((cl.len() - y.len()) as i64);
                        assert_eq!(lhs, nf(&m.e_set_word(&cl.as_mut_orth()).concat(&GenWord::delta_power(shift))));
                    } else {
                        for gamma in x.roots().filter(|&c| !rs.orthogonal(c, beta)) {
                            let w = reflection_word(rs, gamma).concat(&reflection_word(rs, beta)).concat(&ex);
                            assert_eq!(lhs, nf(&w), "{g} β={} X={x}", rs.root(beta));
                        }
                    }
                }
            }
        }
    }
}

fn enumerate(m: &BrauerMonoid) -> Vec<NormalForm> {
    let n = m.rank();
    let start = m.identity();
    let mut seen = HashSet::from([start.clone()]);
    let mut order = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in (0..n).map(Token::R).chain((0..n).map(Token::E)) {
            let y = m.mul_token(&x, g).unwrap().without_delta();
            if seen.insert(y.clone()) {
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    order
}

#[test]
fn normal_forms_determine_set_action() {
    let mut rng = StdRng::seed_from_u64(7);
    for g in ["D4", "E6"] {
        let m = monoid(g);
        let rs: &RootSystem = m.root_system();
        let sets: Vec<_> = m.catalog().orbits().iter().flat_map(|o| o.members.iter().cloned()).collect();
        for _ in 0..40 {
            let len = rng.random_range(0..15);
            let a = random_word(&mut rng, rs.rank(), len);
            let c = m.canonical_word(&m.normalize(&a).unwrap()).unwrap();
            for b in sets.iter().step_by(7) {
                assert_eq!(sigma_word(rs, &a, b), sigma_word(rs, &c, b), "{g} `{a}`");
            }
        }
    }
}

#[test]
fn orbit_modules_separate_elements() {
    for g in ["A1", "A2", "A3", "D4"] {
        let m = monoid(g);
        let bases: Vec<OrbitBasis> = m.catalog().orbits().iter().map(|o| OrbitBasis::new(&m, o.id, DIM_LIMIT).unwrap()).collect();
        let mut images: HashMap<Vec<RepMatrix>, NormalForm> = HashMap::new();
        let elements = enumerate(&m);
        for x in &elements {
            let w = m.canonical_word(x).unwrap();
            let key: Vec<RepMatrix> = bases.iter().map(|b| b.matrix_of_word(&w).unwrap()).collect();
            if let Some(prev) = images.insert(key, x.clone()) {
                panic!("{g}: {prev:?} and {x:?} act identically");
            }
        }
        assert_eq!(images.len(), elements.len());
    }
}

#[test]
fn delta_acts_as_scalar() {
    let m = monoid("D4");
    for o in m.catalog().orbits() {
        let ctx = m.context(o.id).unwrap();
        let v = DecoratedVector::basis(m.root_system(), 0);
        match ctx.act(Token::Delta, &v) {
            DecoratedVector::Basis { k, .. } => assert_eq!(k, 1),
            DecoratedVector::Zero => panic!("δ killed a basis vector"),
        }
    }
}

#[test]
fn e7_highest_root_annihilator() {
    let m = monoid("E7");
    let rs = m.root_system();
    let o = m.catalog().orbits().iter().find(|o| o.set_size() == 1).unwrap();
    assert_eq!(o.highest().roots().collect::<Vec<_>>(), vec![rs.highest_root()]);
    let ctx = m.context(o.id).unwrap();
    assert_eq!(ctx.ax().len(), 2);
    assert!(ctx.ax().contains(&WElement::reflection(rs, rs.highest_root())));
}

#[test]
fn projection_examples() {
    for g in ["D4", "D5", "E6"] {
        let m = monoid(g);
        let rs = m.root_system();
        for o in m.catalog().orbits() {
            let ctx = m.context(o.id).unwrap();
            for beta in o.highest().roots() {
                let r = WElement::reflection(rs, beta);
                assert!(ctx.ax().contains(&r));
                assert!(ctx.project(rs, &r).unwrap().is_identity());
            }
            for i in o.c_nodes.iter() {
                let r = WElement::simple_reflection(rs, i);
                assert_eq!(ctx.project(rs, &r).unwrap(), r);
            }
        }
    }
}

#[test]
fn opposite_swaps_sides() {
    let mut rng = StdRng::seed_from_u64(11);
    for g in ["A4", "D5", "E6"] {
        let m = monoid(g);
        for _ in 0..30 {
            let len = rng.random_range(0..12);
            let x = m.normalize(&random_word(&mut rng, m.rank(), len)).unwrap();
            let y = m.opposite(&x).unwrap();
            assert_eq!((y.orbit, y.left, y.right, y.k), (x.orbit, x.right, x.left, x.k));
            assert_eq!(m.opposite(&y).unwrap(), x);
        }
    }
    let m = monoid("A3");
    let nf = |s: &str| m.normalize(&s.parse().unwrap()).unwrap();
    assert_eq!(m.opposite(&nf("r1 r2")).unwrap(), nf("r2 r1"));
    assert_eq!(m.multiply(&nf("e1"), &nf("e2 e1")).unwrap(), nf("e1"));
}
