//! Explicit permutation groups of small degree.
//!
//! Groups are stored as their full sorted element lists; every subgroup,
//! coset and orbit question is then answered by enumeration. Products are
//! read left to right: `a * b` applies `a` first and then `b`, so that the
//! right coset `Hg` of a point stabilizer `H = G_1` is exactly the set of
//! elements sending `1` to `g(1)`.

mod cayley;
mod suite;
mod transitive;
mod verify;

use std::collections::HashSet;
use std::fmt;
use std::ops::Mul;

use thiserror::Error;

use crate::factor_type::FactorType;

pub use suite::{run_verifier_suite, SuiteLine};
pub use transitive::{
    conjugacy_classes, cycle_type_set, divisions, expected_type_densities, transitive_subgroups,
    NamedGroup,
};
pub use verify::{
    coset_orbit_decomposition, verify_cycle_orbit_correspondence, verify_double_coset_identities,
    verify_lagarias_equivalence, verify_normality_criterion, verify_stabilizer_orbit_lemma,
    CycleOrbitReport, DoubleCosetReport, LagariasReport, NormalityReport, NormalityWitness,
    OrbitDecomposition, StabilizerOrbitReport,
};

pub(crate) use cayley::Cayley;

/// Largest supported degree; `S_8` already has 40320 elements.
pub const MAX_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a permutation of 1..{0}")]
    MalformedPermutation(usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree {0} exceeds the supported maximum {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("{0} is not a subgroup of the ambient group")]
    NotASubgroup(&'static str),
    #[error("group is not transitive")]
    NotTransitive,
    #[error("E is not normal in D")]
    NotNormal,
    #[error("degree {0} is outside the supported range 3..=5")]
    UnsupportedDegree(usize),
}

/// A permutation of `{0, .., n-1}`; displayed 1-based in cycle notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n as u8).collect(),
        }
    }

    /// From 1-based images: `images[i-1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Perm, GroupError> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(GroupError::MalformedPermutation(n));
            }
            seen[v - 1] = true;
        }
        Ok(Perm {
            images: images.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    /// From disjoint or overlapping 1-based cycles, composed left to right.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm, GroupError> {
        if n > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge(n));
        }
        let mut acc = Perm::identity(n);
        for cycle in cycles {
            let mut images: Vec<usize> = (1..=n).collect();
            let mut seen = HashSet::new();
            for (i, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || !seen.insert(a) {
                    return Err(GroupError::MalformedPermutation(n));
                }
                images[a - 1] = cycle[(i + 1) % cycle.len()];
            }
            acc = &acc * &Perm::from_images(&images)?;
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u8;
        }
        Perm { images }
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: self.images.iter().map(|&v| other.images[v as usize]).collect(),
        }
    }

    /// Disjoint cycles, each starting at its smallest point, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Lengths of the disjoint cycles, fixed points counted as 1s.
    pub fn cycle_type(&self) -> FactorType {
        FactorType::from_positive(self.cycles().iter().map(Vec::len))
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, num_integer::lcm)
    }
}

/// `a * b` applies `a` first.
impl Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        self.then(rhs)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Finite permutation group given by its complete element list. Equality
/// compares element sets, not generators.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    /// Sorted lexicographically by images; the identity comes first.
    elements: Vec<Perm>,
    generators: Vec<Perm>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl fmt::Display for PermGroup {
    /// Generators in angle brackets, e.g. `<(1 2 3), (1 2)>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("<()>");
        }
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

impl std::hash::Hash for PermGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

impl PermGroup {
    /// Closure of `gens` under composition.
    pub fn generate(gens: &[Perm], degree: usize) -> Result<PermGroup, GroupError> {
        if degree > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge(degree));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = &x * g;
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup {
            degree,
            elements,
            generators: gens.to_vec(),
        })
    }

    /// Builds a group from a sorted element list known to be closed.
    pub(crate) fn from_sorted_elements(degree: usize, elements: Vec<Perm>) -> PermGroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        // greedy generating set: keep each element not yet in the span
        let mut generators: Vec<Perm> = Vec::new();
        let mut span: HashSet<Perm> = HashSet::from([Perm::identity(degree)]);
        for g in &elements {
            if span.contains(g) {
                continue;
            }
            generators.push(g.clone());
            let mut frontier: Vec<Perm> = span.iter().cloned().collect();
            while let Some(x) = frontier.pop() {
                for s in &generators {
                    let y = &x * s;
                    if span.insert(y.clone()) {
                        frontier.push(y);
                    }
                }
            }
        }
        PermGroup {
            degree,
            generators,
            elements,
        }
    }

    pub fn trivial(n: usize) -> PermGroup {
        Self::generate(&[], n).expect("degree within range")
    }

    pub fn symmetric(n: usize) -> PermGroup {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[&[1, 2]]).unwrap());
            let full: Vec<usize> = (1..=n).collect();
            gens.push(Perm::from_cycles(n, &[&full]).unwrap());
        }
        Self::generate(&gens, n).expect("degree within range")
    }

    pub fn alternating(n: usize) -> PermGroup {
        let gens: Vec<Perm> = (3..=n)
            .map(|k| Perm::from_cycles(n, &[&[1, 2, k]]).unwrap())
            .collect();
        Self::generate(&gens, n).expect("degree within range")
    }

    /// Cyclic group generated by one permutation.
    pub fn cyclic(g: &Perm) -> PermGroup {
        Self::generate(std::slice::from_ref(g), g.degree()).expect("degree within range")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    pub fn is_transitive(&self) -> bool {
        let mut reached = vec![false; self.degree];
        for g in &self.elements {
            reached[g.image(0)] = true;
        }
        reached.into_iter().all(|r| r)
    }

    /// `g^-1 self g`.
    pub fn conjugate_by(&self, g: &Perm) -> PermGroup {
        let gi = g.inverse();
        let mut elements: Vec<Perm> = self.elements.iter().map(|h| &(&gi * h) * g).collect();
        elements.sort();
        Self::from_sorted_elements(self.degree, elements)
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other) && other.elements.iter().all(|g| self.conjugate_by(g) == *self)
    }

    /// Stabilizer of the 0-based point `point`.
    pub fn stabilizer(&self, point: usize) -> PermGroup {
        let elements = self
            .elements
            .iter()
            .filter(|g| g.image(point) == point)
            .cloned()
            .collect();
        Self::from_sorted_elements(self.degree, elements)
    }

    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        let elements = self
            .elements
            .iter()
            .filter(|g| other.contains(g))
            .cloned()
            .collect();
        Self::from_sorted_elements(self.degree, elements)
    }

    /// True when every element is an even permutation.
    pub fn is_in_alternating(&self) -> bool {
        self.elements.iter().all(|g| g.cycle_type().is_even_permutation())
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.elements.iter().any(|g| g.order() == n)
    }

    /// Every subgroup, smallest first.
    pub fn subgroups(&self) -> Vec<PermGroup> {
        let table = Cayley::new(self);
        table
            .all_subgroups()
            .iter()
            .map(|s| table.to_group(s))
            .collect()
    }
}
