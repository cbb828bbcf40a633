use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_rational::Ratio;

use super::cayley::{Cayley, Sub};
use super::{GroupError, Perm, PermGroup};
use crate::factor_type::FactorType;

/// A transitive group together with its conventional name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGroup {
    pub name: &'static str,
    pub group: PermGroup,
}

/// Conventional name of a transitive subgroup of `S_n`, `3 <= n <= 5`.
///
/// Order alone separates the classes except for the two groups of order 4
/// in `S_4`, which cyclicity tells apart.
fn standard_name(n: usize, order: usize, cyclic: bool) -> Option<&'static str> {
    Some(match (n, order) {
        (3, 3) => "A3",
        (3, 6) => "S3",
        (4, 4) if cyclic => "Z4",
        (4, 4) => "Z2xZ2",
        (4, 8) => "D4",
        (4, 12) => "A4",
        (4, 24) => "S4",
        (5, 5) => "Z5",
        (5, 10) => "D5",
        (5, 20) => "Hol(Z5)",
        (5, 60) => "A5",
        (5, 120) => "S5",
        _ => return None,
    })
}

/// The transitive subgroups of `S_n` up to conjugacy, in increasing order,
/// found by filtering the full subgroup lattice of `S_n`.
pub fn transitive_subgroups(n: usize) -> Result<Vec<NamedGroup>, GroupError> {
    if !(3..=5).contains(&n) {
        return Err(GroupError::UnsupportedDegree(n));
    }
    let sn = PermGroup::symmetric(n);
    let table = Cayley::new(&sn);
    let mut classes: BTreeMap<Sub, PermGroup> = BTreeMap::new();
    for sub in table.all_subgroups() {
        let group = table.to_group(&sub);
        if group.is_transitive() {
            classes
                .entry(table.canonical_conjugate(&sub))
                .or_insert(group);
        }
    }
    let mut out: Vec<NamedGroup> = classes
        .into_values()
        .map(|group| {
            let name = standard_name(n, group.order(), group.is_cyclic())
                .expect("every transitive subgroup of S_3..S_5 has a standard name");
            NamedGroup { name, group }
        })
        .collect();
    out.sort_by_key(|g| (g.group.order(), g.name));
    Ok(out)
}

/// Distinct cycle types occurring in a transitive group.
pub fn cycle_type_set(g: &PermGroup) -> Result<BTreeSet<FactorType>, GroupError> {
    if !g.is_transitive() {
        return Err(GroupError::NotTransitive);
    }
    Ok(g.elements().iter().map(Perm::cycle_type).collect())
}

/// Proportion of elements of each cycle type.
pub fn expected_type_densities(
    g: &PermGroup,
) -> Result<BTreeMap<FactorType, Ratio<u64>>, GroupError> {
    if g.degree() < 3 {
        return Err(GroupError::UnsupportedDegree(g.degree()));
    }
    if !g.is_transitive() {
        return Err(GroupError::NotTransitive);
    }
    let mut counts: BTreeMap<FactorType, u64> = BTreeMap::new();
    for x in g.elements() {
        *counts.entry(x.cycle_type()).or_default() += 1;
    }
    let order = g.order() as u64;
    Ok(counts
        .into_iter()
        .map(|(t, c)| (t, Ratio::new(c, order)))
        .collect())
}

fn classes_by_key(table: &Cayley<'_>, key: impl Fn(u32) -> Sub) -> Vec<Vec<Perm>> {
    let mut ids: HashMap<Sub, usize> = HashMap::new();
    let mut out: Vec<Vec<Perm>> = Vec::new();
    for x in 0..table.order() as u32 {
        let next = ids.len();
        let id = *ids.entry(key(x)).or_insert(next);
        if id == out.len() {
            out.push(Vec::new());
        }
        out[id].push(table.perm(x).clone());
    }
    out
}

/// Partition of `G` into divisions: `φ1 ~ φ2` when `<φ1>` and `<φ2>` are
/// conjugate subgroups.
pub fn divisions(g: &PermGroup) -> Vec<Vec<Perm>> {
    let table = Cayley::new(g);
    classes_by_key(&table, |x| table.canonical_conjugate(&table.cyclic(x)))
}

pub fn conjugacy_classes(g: &PermGroup) -> Vec<Vec<Perm>> {
    let table = Cayley::new(g);
    classes_by_key(&table, |x| {
        vec![(0..table.order() as u32)
            .map(|y| table.mul(table.mul(table.inv(y), x), y))
            .min()
            .unwrap()]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ftype;

    fn names(n: usize) -> Vec<&'static str> {
        transitive_subgroups(n).unwrap().iter().map(|g| g.name).collect()
    }

    #[test]
    fn classification_lists() {
        assert_eq!(names(3), ["A3", "S3"]);
        assert_eq!(names(4), ["Z2xZ2", "Z4", "D4", "A4", "S4"]);
        assert_eq!(names(5), ["Z5", "D5", "Hol(Z5)", "A5", "S5"]);
        assert_eq!(transitive_subgroups(6), Err(GroupError::UnsupportedDegree(6)));
    }

    #[test]
    fn cycle_type_set_examples() {
        assert_eq!(
            cycle_type_set(&PermGroup::alternating(3)).unwrap(),
            BTreeSet::from([ftype![1, 1, 1], ftype![3]])
        );
        let z4 = PermGroup::cyclic(&Perm::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap());
        assert_eq!(
            cycle_type_set(&z4).unwrap(),
            BTreeSet::from([ftype![1, 1, 1, 1], ftype![2, 2], ftype![4]])
        );
        let hol = PermGroup::generate(
            &[
                Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap(),
                Perm::from_cycles(5, &[&[2, 3, 5, 4]]).unwrap(),
            ],
            5,
        )
        .unwrap();
        assert_eq!(
            cycle_type_set(&hol).unwrap(),
            BTreeSet::from([ftype![1, 1, 1, 1, 1], ftype![1, 2, 2], ftype![1, 4], ftype![5]])
        );
        let intransitive = PermGroup::cyclic(&Perm::from_cycles(4, &[&[1, 2]]).unwrap());
        assert_eq!(cycle_type_set(&intransitive), Err(GroupError::NotTransitive));
    }

    #[test]
    fn density_examples() {
        let s3 = expected_type_densities(&PermGroup::symmetric(3)).unwrap();
        assert_eq!(s3[&ftype![1, 1, 1]], Ratio::new(1, 6));
        assert_eq!(s3[&ftype![1, 2]], Ratio::new(1, 2));
        assert_eq!(s3[&ftype![3]], Ratio::new(1, 3));
        let a3 = expected_type_densities(&PermGroup::alternating(3)).unwrap();
        assert_eq!(a3[&ftype![1, 1, 1]], Ratio::new(1, 3));
        assert_eq!(a3[&ftype![3]], Ratio::new(2, 3));
        assert_eq!(
            expected_type_densities(&PermGroup::symmetric(2)),
            Err(GroupError::UnsupportedDegree(2))
        );
    }

    #[test]
    fn densities_sum_to_one() {
        for n in 3..=5 {
            for g in transitive_subgroups(n).unwrap() {
                let total: Ratio<u64> = expected_type_densities(&g.group).unwrap().values().sum();
                assert_eq!(total, Ratio::from_integer(1), "{}", g.name);
            }
        }
    }

    #[test]
    fn division_examples() {
        assert_eq!(divisions(&PermGroup::symmetric(3)).len(), 3);
        let z4 = PermGroup::cyclic(&Perm::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap());
        let z4_div = divisions(&z4);
        assert_eq!(z4_div.len(), 3);
        let mut sizes: Vec<usize> = z4_div.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, [1, 1, 2]);

        let s4 = PermGroup::symmetric(4);
        let mut d: Vec<Vec<Perm>> = divisions(&s4);
        let mut c: Vec<Vec<Perm>> = conjugacy_classes(&s4);
        d.sort();
        c.sort();
        assert_eq!(d.len(), 5);
        assert_eq!(d, c);
    }

    #[test]
    fn divisions_coarser_than_classes_in_z5() {
        // the four generators of Z5 are pairwise non-conjugate but share a division
        let z5 = PermGroup::cyclic(&Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap());
        assert_eq!(conjugacy_classes(&z5).len(), 5);
        assert_eq!(divisions(&z5).len(), 2);
    }
}
