use std::collections::BTreeMap;

use super::NumericalSemigroup;

/// Bound for the semigroup tree walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Limit {
    MaxFrobenius(u64),
    MaxGenus(u64),
}

impl Limit {
    fn admits_child(&self, parent: &NumericalSemigroup, g: u64) -> bool {
        match *self {
            Limit::MaxFrobenius(f) => g <= f,
            Limit::MaxGenus(max) => parent.genus() < max,
        }
    }

    pub fn admits(&self, s: &NumericalSemigroup) -> bool {
        match *self {
            Limit::MaxFrobenius(f) => s.frobenius() <= f as i64,
            Limit::MaxGenus(g) => s.genus() <= g,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub visited: u64,
    pub by_genus: BTreeMap<u64, u64>,
    pub by_frobenius: BTreeMap<i64, u64>,
}

impl EnumerationStats {
    fn record(&mut self, s: &NumericalSemigroup) {
        self.visited += 1;
        *self.by_genus.entry(s.genus()).or_default() += 1;
        *self.by_frobenius.entry(s.frobenius()).or_default() += 1;
    }

    pub fn merge(&mut self, other: &EnumerationStats) {
        self.visited += other.visited;
        for (k, v) in &other.by_genus {
            *self.by_genus.entry(*k).or_default() += v;
        }
        for (k, v) in &other.by_frobenius {
            *self.by_frobenius.entry(*k).or_default() += v;
        }
    }
}

impl NumericalSemigroup {
    /// Children in the semigroup tree: `S \ {g}` for each minimal generator
    /// `g > F(S)` admitted by `limit`, in increasing order of `g`.
    pub fn children(&self, limit: Limit) -> Vec<NumericalSemigroup> {
        self.min_gens
            .iter()
            .copied()
            .filter(|&g| g as i64 > self.frobenius && limit.admits_child(self, g))
            .map(|g| self.remove_generator(g))
            .collect()
    }
}

/// Visits every numerical semigroup within `limit`, starting from `N`, exactly
/// once. The Frobenius number strictly increases along tree edges, so the
/// bound prunes whole subtrees.
pub fn enumerate_semigroups<V: FnMut(&NumericalSemigroup)>(
    limit: Limit,
    visitor: V,
) -> EnumerationStats {
    enumerate_subtree(NumericalSemigroup::naturals(), limit, visitor)
}

/// Depth-first walk of the subtree rooted at `root` (which is visited too).
pub fn enumerate_subtree<V: FnMut(&NumericalSemigroup)>(
    root: NumericalSemigroup,
    limit: Limit,
    mut visitor: V,
) -> EnumerationStats {
    let mut stats = EnumerationStats::default();
    if !limit.admits(&root) {
        return stats;
    }
    let mut stack = vec![root];
    while let Some(s) = stack.pop() {
        visitor(&s);
        stats.record(&s);
        let mut kids = s.children(limit);
        kids.reverse();
        stack.extend(kids);
    }
    stats
}
