//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use brauer_core::admissible::{admissible_closure, compare_with_reference, enumerate_catalog, sigma_word, MutOrthSet};
use brauer_core::coxeter::{enumerate_parabolic, generate_group, CoxeterGraph, GenWord, RootSystem, Token, WElement};
use brauer_core::diagram::{nf_to_diagram, word_to_diagram};
use brauer_core::dimension::{brute_force_dim, closed_form, orbit_sum};
use brauer_core::normal_form::BrauerMonoid;
use brauer_core::relations::{normal_form_violations, relations};
use brauer_core::rep::{block_report, hook_length_dim, verify_relations, DIM_LIMIT};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn graph(s: &str) -> CoxeterGraph {
    s.parse().unwrap()
}

fn monoid(s: &str) -> BrauerMonoid {
    BrauerMonoid::new(graph(s)).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn relation_suite() -> Outcome {
    let mut checked = 0;
    for g in ["A2", "A3", "A4", "D4", "D5", "E6"] {
        let m = monoid(g);
        let rels = relations(m.catalog().graph());
        let bad = normal_form_violations(&m, &rels).map_err(|e| e.to_string())?;
        ensure(bad.is_empty(), || format!("{g}: {} normal-form violations, first {} = {}", bad.len(), bad[0].lhs, bad[0].rhs))?;
        for o in m.catalog().orbits() {
            let rep = verify_relations(&m, o.id, DIM_LIMIT).map_err(|e| format!("{g} orbit {}: {e}", o.id))?;
            ensure(rep.violations.is_empty(), || format!("{g} orbit {}: {} matrix violations", o.id, rep.violations.len()))?;
        }
        checked += rels.len();
    }
    Ok(format!("{checked} instances over 6 types, zero violations"))
}

fn all_graphs() -> Vec<String> {
    let mut v: Vec<String> = (1..=8).map(|n| format!("A{n}")).collect();
    v.extend((4..=8).map(|n| format!("D{n}")));
    v.extend(["E6", "E7", "E8"].map(String::from));
    v
}

fn dimension_reproduction() -> Outcome {
    for g in all_graphs() {
        let cat = enumerate_catalog(RootSystem::new(graph(&g))).map_err(|e| format!("{g}: {e}"))?;
        let (c, s) = (closed_form(cat.graph()), orbit_sum(&cat));
        ensure(c == s, || format!("{g}: closed form {c} vs orbit sum {s}"))?;
    }
    for (g, d) in [("E6", 1_440_585u64), ("E7", 139_613_625), ("E8", 53_328_069_225)] {
        let cat = enumerate_catalog(RootSystem::new(graph(g))).unwrap();
        ensure(orbit_sum(&cat) == BigUint::from(d), || format!("{g}: orbit sum is not {d}"))?;
    }
    Ok("A1..A8, D4..D8, E6..E8 exact".into())
}

fn brute_force() -> Outcome {
    let mut found = Vec::new();
    for (g, d) in [("A1", 3usize), ("A2", 15), ("A3", 105), ("A4", 945), ("D4", 1569)] {
        let m = monoid(g);
        let n = brute_force_dim(&m, 1_000_000).map_err(|e| e.to_string())?;
        ensure(n == d && closed_form(&graph(g)) == BigUint::from(n), || format!("{g}: {n} elements, expected {d}"))?;
        found.push(format!("{g}={n}"));
    }
    Ok(found.join(" "))
}

fn orbit_table() -> Outcome {
    let sizes = |g: &str| -> Vec<usize> {
        let cat = enumerate_catalog(RootSystem::new(graph(g))).unwrap();
        cat.orbits().iter().skip(1).map(|o| o.len()).collect()
    };
    ensure(sizes("E6") == [36, 270, 135], || format!("E6 sizes {:?}", sizes("E6")))?;
    ensure(sizes("E7") == [63, 945, 315, 945, 135], || format!("E7 sizes {:?}", sizes("E7")))?;
    ensure(sizes("E8") == [120, 3780, 9450, 2025], || format!("E8 sizes {:?}", sizes("E8")))?;
    for g in ["E6", "E7", "E8", "D4", "D5", "D6", "D7", "D8"] {
        let cat = enumerate_catalog(RootSystem::new(graph(g))).unwrap();
        let diff = compare_with_reference(&cat);
        ensure(diff.is_empty(), || format!("{g}: {}", diff.join("; ")))?;
    }
    for n in [4usize, 6, 8] {
        let cat = enumerate_catalog(RootSystem::new(graph(&format!("D{n}")))).unwrap();
        let half: Vec<_> = cat.orbits().iter().filter(|o| o.set_size() == n / 2).collect();
        let split = half.iter().filter(|a| half.iter().any(|b| b.id != a.id && b.len() == a.len() && b.c_type == a.c_type)).count();
        ensure(split >= 2, || format!("D{n}: no two-orbit split at |X| = {}", n / 2))?;
    }
    Ok("E6, E7, E8, D4..D8 rows match".into())
}

fn all_tokens(n: usize) -> Vec<Token> {
    (0..n).map(Token::R).chain((0..n).map(Token::E)).chain([Token::Delta, Token::DeltaInv]).collect()
}

fn diagram_oracle() -> Outcome {
    let mut total = 0usize;
    for (g, len) in [("A2", 6u32), ("A3", 6)] {
        let m = monoid(g);
        let strands = m.rank() + 1;
        let gens = all_tokens(m.rank());
        let b = gens.len();
        for l in 0..=len {
            for mut code in 0..b.pow(l) {
                let w: GenWord = (0..l)
                    .map(|_| {
                        let t = gens[code % b];
                        code /= b;
                        t
                    })
                    .collect();
                let nf = m.normalize(&w).map_err(|e| e.to_string())?;
                let (a, d) = (nf_to_diagram(&m, &nf).map_err(|e| e.to_string())?, word_to_diagram(strands, &w).unwrap());
                ensure(a == d, || format!("{g}: `{w}` normal form gives\n{a}but composition gives\n{d}"))?;
                total += 1;
            }
        }
    }
    let m = monoid("A4");
    let gens = all_tokens(4);
    let mut rng = StdRng::seed_from_u64(0x5eeda4);
    for _ in 0..500 {
        let len = rng.random_range(0..=20);
        let w: GenWord = (0..len).map(|_| gens[rng.random_range(0..gens.len())]).collect();
        let nf = m.normalize(&w).map_err(|e| e.to_string())?;
        let (a, d) = (nf_to_diagram(&m, &nf).map_err(|e| e.to_string())?, word_to_diagram(5, &w).unwrap());
        ensure(a == d, || format!("A4: `{w}` disagrees"))?;
        total += 1;
    }
    Ok(format!("{total} words, zero mismatches"))
}

fn stabilizer(rs: &RootSystem, m: &BrauerMonoid, orbit: usize) -> Result<Vec<WElement>, String> {
    let o = m.catalog().orbit(orbit).unwrap();
    let u: Vec<WElement> = o.words.iter().map(|w| WElement::from_nodes(rs, w)).collect();
    let mut seen = HashSet::new();
    let mut gens = Vec::new();
    for (b, member) in o.members.iter().enumerate() {
        for i in 0..rs.rank() {
            let image = member.apply(&WElement::simple_reflection(rs, i));
            let c = o.position(&image).ok_or("orbit not closed under W")?;
            let g = u[c].inverse().compose(&WElement::simple_reflection(rs, i)).compose(&u[b]);
            if !g.is_identity() && seen.insert(g.clone()) {
                gens.push(g);
            }
        }
    }
    generate_group(rs, &gens, 1 << 22).map_err(|e| e.to_string())
}

fn structural() -> Outcome {
    let mut orbits = 0;
    for g in ["A2", "A3", "A4", "D4", "D5", "E6"] {
        let m = monoid(g);
        let rs = m.root_system();
        for o in m.catalog().orbits() {
            let ctx = m.context(o.id).map_err(|e| e.to_string())?;
            let ax = ctx.ax();
            let wc = enumerate_parabolic(rs, o.c_nodes, DIM_LIMIT).map_err(|e| e.to_string())?;
            let x = o.highest();
            ensure(ax.iter().all(|a| x.apply(a) == *x), || format!("{g} orbit {}: A_X does not fix X", o.id))?;
            ensure(wc.iter().filter(|w| ax.contains(w)).count() == 1, || format!("{g} orbit {}: A_X ∩ W(C) nontrivial", o.id))?;
            let n = stabilizer(rs, &m, o.id)?;
            ensure(ax.len() * wc.len() == n.len(), || {
                format!("{g} orbit {}: |A_X|·|W(C)| = {}·{} but |N| = {}", o.id, ax.len(), wc.len(), n.len())
            })?;
            let normal = n.iter().all(|w| {
                let wi = w.inverse();
                ax.iter().all(|a| ax.contains(&w.compose(a).compose(&wi)))
            });
            ensure(normal, || format!("{g} orbit {}: A_X not normal", o.id))?;
            orbits += 1;
        }
    }

    let mut rng = StdRng::seed_from_u64(0xc105);
    let types: Vec<BrauerMonoid> = ["D4", "D5", "D6", "E6", "E7"].iter().map(|g| monoid(g)).collect();
    let mut closures = 0;
    while closures < 100 {
        let m = &types[rng.random_range(0..types.len())];
        let rs = m.root_system();
        let target = rng.random_range(2..=rs.rank());
        let mut roots: Vec<usize> = Vec::new();
        for _ in 0..50 {
            let r = rng.random_range(0..rs.num_positive());
            if roots.len() < target && roots.iter().all(|&s| rs.orthogonal(r, s) && s != r) {
                roots.push(r);
            }
        }
        let x = MutOrthSet::new(rs, roots).unwrap();
        let cl = admissible_closure(rs, &x);
        if cl.len() == x.len() {
            continue;
        }
        let lhs = m.e_set(&cl.as_mut_orth()).map_err(|e| e.to_string())?;
        let word = m.e_set_word(&x).concat(&GenWord::delta_power((cl.len() - x.len()) as i64));
        let rhs = m.normalize(&word).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("{}: e_cl(X) ≠ e_X δ^k for X = {word}", rs.graph().name()))?;
        closures += 1;
    }

    let mut pairs = 0;
    let types: Vec<BrauerMonoid> = ["A4", "D5", "E6", "E7"].iter().map(|g| monoid(g)).collect();
    while pairs < 100 {
        let m = &types[rng.random_range(0..types.len())];
        let rs = m.root_system();
        let cat = m.catalog();
        let o = &cat.orbits()[rng.random_range(0..cat.orbits().len())];
        let x = &o.members[rng.random_range(0..o.len())];
        let sub: Vec<usize> = x.roots().filter(|_| rng.random_range(0..2) == 0).collect();
        let y = admissible_closure(rs, &MutOrthSet::new(rs, sub).unwrap());
        ensure(y.is_subset(x), || "closure of a subset left the admissible set".into())?;
        let gens = all_tokens(rs.rank());
        let len = rng.random_range(0..=10);
        let w: GenWord = (0..len).map(|_| gens[rng.random_range(0..2 * rs.rank())]).collect();
        let (sy, sx) = (sigma_word(rs, &w, &y), sigma_word(rs, &w, x));
        ensure(sy.is_subset(&sx), || format!("{}: σ not monotone for `{w}`", rs.graph().name()))?;
        pairs += 1;
    }
    Ok(format!("{orbits} orbits, {closures} closures, {pairs} monotonicity pairs"))
}

fn semisimplicity() -> Outcome {
    let mut names: Vec<String> = (1..=6).map(|n| format!("A{n}")).collect();
    names.extend(["D4", "D5", "D6", "E6"].map(String::from));
    let mut checked_tau = 0;
    for g in names {
        let cat = enumerate_catalog(RootSystem::new(graph(&g))).unwrap();
        let rep = block_report(&cat);
        ensure(rep.total == closed_form(cat.graph()), || format!("{g}: block total {} vs closed form", rep.total))?;
        for row in &rep.rows {
            let o = cat.orbit(row.orbit).unwrap();
            if o.c_type.is_type_a() {
                let sq = row.tau_square_sum.clone().ok_or(format!("{g}: type A factor without τ"))?;
                ensure(sq == row.wc_order, || format!("{g} orbit {}: Σ τ² = {sq} vs |W(C)| = {}", row.orbit, row.wc_order))?;
                checked_tau += 1;
            }
        }
    }
    ensure(hook_length_dim(&[3, 2]) == BigUint::from(5u32), || "hook length of (3,2)".into())?;
    Ok(format!("A1..A6, D4..D6, E6 totals; {checked_tau} type-A factors"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 relation suite", relation_suite),
        ("2 dimension reproduction", dimension_reproduction),
        ("3 brute-force oracle", brute_force),
        ("4 orbit table", orbit_table),
        ("5 type-A diagram oracle", diagram_oracle),
        ("6 structural properties", structural),
        ("7 semisimplicity accounting", semisimplicity),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, f) in criteria {
        if !filter.is_empty() && !filter.iter().any(|p| name.contains(p.as_str())) {
            continue;
        }
        let t = Instant::now();
        match f() {
            Ok(msg) => println!("PASS {name}: {msg} ({:.1?})", t.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name}: {msg}");
            }
        }
    }
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
