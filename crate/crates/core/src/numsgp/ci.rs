use std::collections::HashMap;
use std::sync::RwLock;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::NumericalSemigroup;

/// A gluing tree certifying that a numerical semigroup is a complete
/// intersection. A `Gluing` node stands for `mu * left + lambda * right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CiWitness {
    Naturals,
    TwoGenerator {
        gens: [u64; 2],
    },
    Gluing {
        mu: u64,
        lambda: u64,
        left: Box<CiWitness>,
        right: Box<CiWitness>,
    },
}

impl CiWitness {
    /// Minimal generators obtained by expanding the tree bottom-up.
    pub fn generators(&self) -> Vec<u64> {
        let mut gens = match self {
            CiWitness::Naturals => vec![1],
            CiWitness::TwoGenerator { gens } => gens.to_vec(),
            CiWitness::Gluing {
                mu,
                lambda,
                left,
                right,
            } => left
                .generators()
                .into_iter()
                .map(|g| g * mu)
                .chain(right.generators().into_iter().map(|g| g * lambda))
                .collect(),
        };
        gens.sort_unstable();
        gens
    }

    /// Degrees of the defining relations: `ab` for a two-generator leaf,
    /// `mu * lambda` at each gluing, scaled by every multiplier above.
    pub fn relation_degrees(&self) -> Vec<u64> {
        let mut rels = match self {
            CiWitness::Naturals => Vec::new(),
            CiWitness::TwoGenerator { gens: [a, b] } => vec![a * b],
            CiWitness::Gluing {
                mu,
                lambda,
                left,
                right,
            } => std::iter::once(mu * lambda)
                .chain(left.relation_degrees().into_iter().map(|d| d * mu))
                .chain(right.relation_degrees().into_iter().map(|d| d * lambda))
                .collect(),
        };
        rels.sort_unstable();
        rels
    }

    /// Re-checks the gluing conditions at every node.
    pub fn is_valid(&self) -> bool {
        match self {
            CiWitness::Naturals => true,
            CiWitness::TwoGenerator { gens: [a, b] } => *a >= 2 && *b >= 2 && a.gcd(b) == 1,
            CiWitness::Gluing {
                mu,
                lambda,
                left,
                right,
            } => {
                let (Ok(s1), Ok(s2)) = (
                    NumericalSemigroup::from_generators(&left.generators()),
                    NumericalSemigroup::from_generators(&right.generators()),
                ) else {
                    return false;
                };
                mu.gcd(lambda) == 1
                    && is_glue_point(&s1, *lambda)
                    && is_glue_point(&s2, *mu)
                    && left.is_valid()
                    && right.is_valid()
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            CiWitness::Gluing { left, right, .. } => 1 + left.depth().max(right.depth()),
            _ => 0,
        }
    }
}

fn is_glue_point(s: &NumericalSemigroup, v: u64) -> bool {
    s.contains(v) && !s.min_gens().contains(&v)
}

/// Grow-only memo of complete-intersection decisions keyed by minimal
/// generators. Inserts are idempotent so it can be shared between threads.
#[derive(Default)]
pub struct CiMemo {
    table: RwLock<HashMap<Vec<u64>, Option<CiWitness>>>,
}

impl CiMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("memo poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn decide(&self, s: &NumericalSemigroup) -> Option<CiWitness> {
        self.decide_gens(s.min_gens())
    }

    fn decide_gens(&self, gens: &[u64]) -> Option<CiWitness> {
        match gens {
            [1] => return Some(CiWitness::Naturals),
            [a, b] => return Some(CiWitness::TwoGenerator { gens: [*a, *b] }),
            _ => {}
        }
        if let Some(hit) = self.table.read().expect("memo poisoned").get(gens) {
            return hit.clone();
        }
        let found = self.search(gens);
        self.table
            .write()
            .expect("memo poisoned")
            .entry(gens.to_vec())
            .or_insert(found)
            .clone()
    }

    fn search(&self, gens: &[u64]) -> Option<CiWitness> {
        let mut splits = Vec::new();
        collect_splits(gens, 1, vec![gens[0]], Vec::new(), &mut splits);
        // smaller side first; the sort is stable so ties keep discovery order
        splits.sort_by_key(|(a, b)| a.len().min(b.len()));
        for (part_a, part_b) in splits {
            let d_a = gcd_all(&part_a);
            let d_b = gcd_all(&part_b);
            if d_a.gcd(&d_b) != 1 {
                continue;
            }
            let scaled_a: Vec<u64> = part_a.iter().map(|g| g / d_a).collect();
            let scaled_b: Vec<u64> = part_b.iter().map(|g| g / d_b).collect();
            let s1 = NumericalSemigroup::from_generators(&scaled_a).expect("gcd 1 by construction");
            let s2 = NumericalSemigroup::from_generators(&scaled_b).expect("gcd 1 by construction");
            if !is_glue_point(&s1, d_b) || !is_glue_point(&s2, d_a) {
                continue;
            }
            let Some(left) = self.decide_gens(s1.min_gens()) else {
                continue;
            };
            let Some(right) = self.decide_gens(s2.min_gens()) else {
                continue;
            };
            return Some(CiWitness::Gluing {
                mu: d_a,
                lambda: d_b,
                left: Box::new(left),
                right: Box::new(right),
            });
        }
        None
    }
}

fn gcd_all(v: &[u64]) -> u64 {
    v.iter().fold(0, |acc, x| acc.gcd(x))
}

/// Enumerates bipartitions `(A, B)` with `gens[0] in A` where both sides have a
/// gcd above 1; a side with gcd 1 can never be scaled into a gluing, and the
/// gcd only shrinks as a side grows, which prunes the search.
fn collect_splits(
    gens: &[u64],
    next: usize,
    part_a: Vec<u64>,
    part_b: Vec<u64>,
    out: &mut Vec<(Vec<u64>, Vec<u64>)>,
) {
    if gcd_all(&part_a) == 1 || (!part_b.is_empty() && gcd_all(&part_b) == 1) {
        return;
    }
    if next == gens.len() {
        if !part_b.is_empty() {
            out.push((part_a, part_b));
        }
        return;
    }
    let g = gens[next];
    let mut with_a = part_a.clone();
    with_a.push(g);
    collect_splits(gens, next + 1, with_a, part_b.clone(), out);
    let mut with_b = part_b;
    with_b.push(g);
    collect_splits(gens, next + 1, part_a, with_b, out);
}

/// Decides whether `s` is a complete intersection, returning a gluing tree.
pub fn is_complete_intersection(s: &NumericalSemigroup) -> Option<CiWitness> {
    CiMemo::new().decide(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn base_cases() {
        assert_eq!(
            is_complete_intersection(&sg(&[2, 3])),
            Some(CiWitness::TwoGenerator { gens: [2, 3] })
        );
        assert_eq!(
            is_complete_intersection(&NumericalSemigroup::naturals()),
            Some(CiWitness::Naturals)
        );
    }

    #[test]
    fn gluing_example() {
        let w = is_complete_intersection(&sg(&[4, 6, 9])).expect("CI");
        assert_eq!(
            w,
            CiWitness::Gluing {
                mu: 2,
                lambda: 9,
                left: Box::new(CiWitness::TwoGenerator { gens: [2, 3] }),
                right: Box::new(CiWitness::Naturals),
            }
        );
        assert!(w.is_valid());
        assert_eq!(w.generators(), vec![4, 6, 9]);
        assert_eq!(w.relation_degrees(), vec![12, 18]);
    }

    #[test]
    fn non_ci_example() {
        assert_eq!(is_complete_intersection(&sg(&[3, 4, 5])), None);
        let mut splits = Vec::new();
        collect_splits(&[3, 4, 5], 1, vec![3], Vec::new(), &mut splits);
        assert!(splits.is_empty());
    }

    #[test]
    fn deeper_gluings() {
        // 4<2,3> + 9<2,3>
        let s = sg(&[8, 12, 18, 27]);
        let w = is_complete_intersection(&s).expect("iterated gluing of <2,3>");
        assert!(w.is_valid());
        assert_eq!(w.generators(), s.min_gens());
        assert_eq!(w.relation_degrees().len(), 3);
        assert!(w.depth() >= 2);
    }

    #[test]
    fn memo_is_reused() {
        let memo = CiMemo::new();
        let s = sg(&[8, 12, 18, 27]);
        let first = memo.decide(&s);
        let size = memo.len();
        assert!(size >= 1);
        assert_eq!(memo.decide(&s), first);
        assert_eq!(memo.len(), size);
    }

    #[test]
    fn invalid_witness_is_rejected() {
        let bogus = CiWitness::Gluing {
            mu: 3,
            lambda: 2,
            left: Box::new(CiWitness::TwoGenerator { gens: [2, 3] }),
            right: Box::new(CiWitness::Naturals),
        };
        // 2 is a minimal generator of <2,3>
        assert!(!bogus.is_valid());
    }
}
