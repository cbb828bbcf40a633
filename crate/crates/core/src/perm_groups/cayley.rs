use std::collections::{BTreeSet, HashMap, HashSet};

use super::{GroupError, Perm, PermGroup};
use crate::factor_type::FactorType;

/// Subset of an ambient group as sorted element indices.
pub(crate) type Sub = Vec<u32>;

/// Multiplication table of an explicit group, with elements addressed by
/// their index in the sorted element list. Index order is lexicographic
/// order, so the minimum index of a coset is its lex-least member.
pub(crate) struct Cayley<'g> {
    group: &'g PermGroup,
    index: HashMap<&'g Perm, u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl<'g> Cayley<'g> {
    pub(crate) fn new(group: &'g PermGroup) -> Self {
        let elems = group.elements();
        let n = elems.len();
        let index: HashMap<&Perm, u32> = elems.iter().enumerate().map(|(i, g)| (g, i as u32)).collect();
        let mut mul = vec![0u32; n * n];
        for (a, ga) in elems.iter().enumerate() {
            for (b, gb) in elems.iter().enumerate() {
                mul[a * n + b] = index[&(ga * gb)];
            }
        }
        let inv = elems.iter().map(|g| index[&g.inverse()]).collect();
        Cayley {
            group,
            index,
            mul,
            inv,
        }
    }

    pub(crate) fn order(&self) -> usize {
        self.inv.len()
    }

    #[inline]
    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order() + b as usize]
    }

    #[inline]
    pub(crate) fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub(crate) fn perm(&self, a: u32) -> &'g Perm {
        &self.group.elements()[a as usize]
    }

    /// Indices of a subgroup's elements; errors if any element lies outside.
    pub(crate) fn embed(&self, sub: &PermGroup, what: &'static str) -> Result<Sub, GroupError> {
        if sub.degree() != self.group.degree() {
            return Err(GroupError::NotASubgroup(what));
        }
        let mut out = Vec::with_capacity(sub.order());
        for g in sub.elements() {
            match self.index.get(g) {
                Some(&i) => out.push(i),
                None => return Err(GroupError::NotASubgroup(what)),
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    pub(crate) fn to_group(&self, sub: &[u32]) -> PermGroup {
        PermGroup::from_sorted_elements(
            self.group.degree(),
            sub.iter().map(|&i| self.perm(i).clone()).collect(),
        )
    }

    pub(crate) fn closure(&self, gens: &[u32]) -> Sub {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut frontier = vec![0u32];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    frontier.push(y);
                }
            }
        }
        (0..self.order() as u32).filter(|&i| seen[i as usize]).collect()
    }

    pub(crate) fn cyclic(&self, g: u32) -> Sub {
        self.closure(&[g])
    }

    /// Every subgroup, ordered by size and then by element indices.
    ///
    /// Each subgroup is the join of the cyclic subgroups it contains, so
    /// closing the set of cyclic subgroups under joins with one more cyclic
    /// subgroup reaches all of them.
    pub(crate) fn all_subgroups(&self) -> Vec<Sub> {
        let cyclics: BTreeSet<Sub> = (0..self.order() as u32).map(|g| self.cyclic(g)).collect();
        let cyclic_gens: Vec<u32> = cyclics
            .iter()
            .map(|c| {
                *c.iter()
                    .find(|&&g| self.cyclic(g).len() == c.len())
                    .expect("cyclic subgroup has a generator")
            })
            .collect();

        let mut found: HashSet<Sub> = cyclics.iter().cloned().collect();
        let mut frontier: Vec<Sub> = cyclics.into_iter().collect();
        while let Some(s) = frontier.pop() {
            for &c in &cyclic_gens {
                if s.binary_search(&c).is_ok() {
                    continue;
                }
                let mut gens = s.clone();
                gens.push(c);
                let joined = self.closure(&gens);
                if found.insert(joined.clone()) {
                    frontier.push(joined);
                }
            }
        }
        let mut out: Vec<Sub> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// `g^-1 S g`.
    pub(crate) fn conjugate(&self, sub: &[u32], g: u32) -> Sub {
        let gi = self.inv(g);
        let mut out: Sub = sub.iter().map(|&h| self.mul(self.mul(gi, h), g)).collect();
        out.sort_unstable();
        out
    }

    /// Lexicographically least conjugate: equal for conjugate subgroups.
    pub(crate) fn canonical_conjugate(&self, sub: &[u32]) -> Sub {
        (0..self.order() as u32)
            .map(|g| self.conjugate(sub, g))
            .min()
            .expect("nonempty group")
    }

    pub(crate) fn intersection_size(&self, a: &[u32], b: &[u32]) -> usize {
        a.iter().filter(|x| b.binary_search(x).is_ok()).count()
    }

    /// `coset[g]` is the least index in the right coset `Hg`.
    pub(crate) fn right_cosets(&self, h: &[u32]) -> Vec<u32> {
        (0..self.order() as u32)
            .map(|g| h.iter().map(|&x| self.mul(x, g)).min().unwrap())
            .collect()
    }

    /// `coset[g]` is the least index in the left coset `gD`.
    pub(crate) fn left_cosets(&self, d: &[u32]) -> Vec<u32> {
        (0..self.order() as u32)
            .map(|g| d.iter().map(|&x| self.mul(g, x)).min().unwrap())
            .collect()
    }

    /// Orbits of `D` acting on `H\G` by right translation, each orbit a
    /// sorted list of coset representatives; orbits ordered by their least
    /// representative.
    pub(crate) fn right_orbits(&self, cosets: &[u32], d: &[u32]) -> Vec<Vec<u32>> {
        let reps: BTreeSet<u32> = cosets.iter().copied().collect();
        let mut visited: HashSet<u32> = HashSet::new();
        let mut orbits = Vec::new();
        for &r in &reps {
            if visited.contains(&r) {
                continue;
            }
            let mut orbit: BTreeSet<u32> = BTreeSet::new();
            for &x in d {
                orbit.insert(cosets[self.mul(r, x) as usize]);
            }
            visited.extend(orbit.iter().copied());
            orbits.push(orbit.into_iter().collect());
        }
        orbits
    }

    /// Cycle type of the permutation `Hx -> Hxg` of `H\G`.
    pub(crate) fn induced_cycle_type(&self, cosets: &[u32], g: u32) -> FactorType {
        let reps: BTreeSet<u32> = cosets.iter().copied().collect();
        let mut visited: HashSet<u32> = HashSet::new();
        let mut lengths = Vec::new();
        for &r in &reps {
            if !visited.insert(r) {
                continue;
            }
            let mut len = 1;
            let mut x = cosets[self.mul(r, g) as usize];
            while x != r {
                visited.insert(x);
                len += 1;
                x = cosets[self.mul(x, g) as usize];
            }
            lengths.push(len);
        }
        FactorType::from_positive(lengths)
    }
}
