//! Reference catalog of nonempty admissible W-orbits for each ADE type:
//! orbit set size, orbit length, type of the orthogonal root subsystem, type
//! of `C_𝓑`, and the order of `N_W(X)/C_W(X)`.

use crate::coxeter::{CartanType, CoxeterGraph, Family};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceRow {
    pub set_size: usize,
    pub orbit_size: u128,
    pub perp_type: CartanType,
    pub c_type: CartanType,
    pub quotient_order: u128,
}

/// `(|X|, orbit size, X^⊥ type, C type, quotient order)`.
type ExceptionalRow<'a> = (usize, u128, &'a [(Family, usize)], &'a [(Family, usize)], u128);

fn fact(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn a(rank: usize) -> (Family, usize) {
    (Family::A, rank)
}

fn d(rank: usize) -> (Family, usize) {
    (Family::D, rank)
}

fn ty(parts: &[(Family, usize)]) -> CartanType {
    CartanType::from_components(parts.iter().copied())
}

/// All nonempty orbits expected for `graph`.
pub fn reference_rows(graph: &CoxeterGraph) -> Vec<ReferenceRow> {
    let n = graph.rank();
    let mut rows = Vec::new();
    match graph.family() {
        Family::A => {
            let points = n + 1;
            for t in 1..=points / 2 {
                let rest = (points - 2 * t).saturating_sub(1);
                rows.push(ReferenceRow {
                    set_size: t,
                    orbit_size: fact(points) / ((1u128 << t) * fact(t) * fact(points - 2 * t)),
                    perp_type: ty(&[a(rest)]),
                    c_type: ty(&[a(rest)]),
                    quotient_order: fact(t),
                });
            }
        }
        Family::D => {
            for t in 1..=n / 2 {
                let rest = n - 2 * t;
                let mut perp = vec![a(1); t];
                perp.push(d(rest));
                let size = fact(n) / (fact(t) * fact(rest));
                let copies = if 2 * t == n { 2 } else { 1 };
                for _ in 0..copies {
                    rows.push(ReferenceRow {
                        set_size: t,
                        orbit_size: size / copies as u128,
                        perp_type: ty(&perp),
                        c_type: ty(&[a(1), d(rest)]),
                        quotient_order: fact(t),
                    });
                }
            }
            for t in 1..=n / 2 {
                let rest = n - 2 * t;
                let quotient = if 2 * t == n { (1u128 << (t - 1)) * fact(t) } else { (1u128 << t) * fact(t) };
                rows.push(ReferenceRow {
                    set_size: 2 * t,
                    orbit_size: fact(n) / ((1u128 << t) * fact(t) * fact(rest)),
                    perp_type: ty(&[d(rest)]),
                    c_type: ty(&[a(rest.saturating_sub(1))]),
                    quotient_order: quotient,
                });
            }
        }
        Family::E => {
            let e = |k| (Family::E, k);
            let table: &[ExceptionalRow<'_>] = match n {
                6 => &[
                    (1, 36, &[a(5)], &[a(5)], 1),
                    (2, 270, &[a(3)], &[a(2)], 2),
                    (4, 135, &[], &[], 24),
                ],
                7 => &[
                    (1, 63, &[d(6)], &[d(6)], 1),
                    (2, 945, &[a(1), d(4)], &[a(1), a(3)], 2),
                    (3, 315, &[d(4)], &[a(2)], 6),
                    (4, 945, &[a(1), a(1), a(1)], &[a(1)], 24),
                    (7, 135, &[], &[], 168),
                ],
                _ => &[
                    (1, 120, &[e(7)], &[e(7)], 1),
                    (2, 3780, &[d(6)], &[a(5)], 2),
                    (4, 9450, &[d(4)], &[a(2)], 24),
                    (8, 2025, &[], &[], 1344),
                ],
            };
            for &(set_size, orbit_size, perp, c, quotient_order) in table {
                rows.push(ReferenceRow {
                    set_size,
                    orbit_size,
                    perp_type: ty(perp),
                    c_type: ty(c),
                    quotient_order,
                });
            }
        }
    }
    rows.sort_by(|x, y| (x.set_size, x.orbit_size, &x.c_type).cmp(&(y.set_size, y.orbit_size, &y.c_type)));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Orbit length from the stabilizer factorisation
    /// `|W| / (2^{|X|} |W(X^⊥ ∩ Φ)| |N_W(X)/C_W(X)|)`.
    fn orbit_from_stabilizer(graph: &CoxeterGraph, row: &ReferenceRow) -> u128 {
        graph.cartan_type().weyl_order()
            / ((1u128 << row.set_size) * row.perp_type.weyl_order() * row.quotient_order)
    }

    #[test]
    fn rows_consistent_with_stabilizer_orders() {
        for g in ["A1", "A2", "A3", "A5", "A8", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"] {
            let graph: CoxeterGraph = g.parse().unwrap();
            for row in reference_rows(&graph) {
                assert_eq!(orbit_from_stabilizer(&graph, &row), row.orbit_size, "{g} {row:?}");
            }
        }
    }

    #[test]
    fn d_even_rank_splits() {
        let graph: CoxeterGraph = "D6".parse().unwrap();
        let half: Vec<_> = reference_rows(&graph).into_iter().filter(|r| r.set_size == 3).collect();
        assert_eq!(half.len(), 2);
        assert!(half.iter().all(|r| r.c_type.to_string() == "A1"));
    }

    #[test]
    fn e7_pair_row() {
        let graph: CoxeterGraph = "E7".parse().unwrap();
        let row = reference_rows(&graph).into_iter().find(|r| r.set_size == 2).unwrap();
        assert_eq!(row.c_type.to_string(), "A1A3");
        assert_eq!(row.orbit_size, 945);
    }
}
