//! Brute-force checks of the double-coset and orbit identities that tie
//! cosets of a subgroup `H` to the action of a cyclic "decomposition"
//! subgroup `D` on them.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::cayley::{Cayley, Sub};
use super::{GroupError, Perm, PermGroup};
use crate::factor_type::FactorType;

/// Orbits of `D` acting on the right cosets `H\G` by right translation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    /// Each orbit lists the lex-least members of its cosets.
    pub orbits: Vec<Vec<Perm>>,
    pub lengths: FactorType,
}

impl OrbitDecomposition {
    pub fn coset_count(&self) -> usize {
        self.lengths.total() as usize
    }
}

pub fn coset_orbit_decomposition(
    g: &PermGroup,
    h: &PermGroup,
    d: &PermGroup,
) -> Result<OrbitDecomposition, GroupError> {
    let table = Cayley::new(g);
    let h = table.embed(h, "H")?;
    let d = table.embed(d, "D")?;
    let cosets = table.right_cosets(&h);
    let orbits = table.right_orbits(&cosets, &d);
    Ok(OrbitDecomposition {
        lengths: FactorType::from_positive(orbits.iter().map(Vec::len)),
        orbits: orbits
            .iter()
            .map(|o| o.iter().map(|&i| table.perm(i).clone()).collect())
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetReport {
    /// Sizes of the double cosets `HgD`, ascending.
    pub double_coset_sizes: Vec<usize>,
    /// Numbers of right cosets `Hg` in each `D`-orbit of `H\G`.
    pub right_orbit_lengths: FactorType,
    /// Numbers of left cosets `gD` in each `H`-orbit of `G/D`.
    pub left_orbit_lengths: FactorType,
    pub violation: Option<String>,
}

impl DoubleCosetReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks, for subgroups `H` and `D` of `G`:
///
/// 1. the cosets in a `D`-orbit `(Hg)D` and in an `H`-orbit `H(gD)` both
///    union to the double coset `HgD`;
/// 2. both actions have the same number of orbits;
/// 3. matching orbits by double coset, `a|H| = b|D|` where `a` counts right
///    cosets in `(Hg)D` and `b` counts left cosets in `H(gD)`;
/// 4. `|HgD| = |H||D| / |H ∩ gDg^-1|`.
pub fn verify_double_coset_identities(
    g: &PermGroup,
    h: &PermGroup,
    d: &PermGroup,
) -> Result<DoubleCosetReport, GroupError> {
    let table = Cayley::new(g);
    let hs = table.embed(h, "H")?;
    let ds = table.embed(d, "D")?;
    Ok(double_coset_check(&table, &hs, &ds))
}

pub(crate) fn double_coset_check(table: &Cayley<'_>, h: &[u32], d: &[u32]) -> DoubleCosetReport {
    let right = table.right_cosets(h);
    let left = table.left_cosets(d);
    let right_orbits = table.right_orbits(&right, d);

    // H-orbits on G/D under left translation.
    let mut left_orbits: Vec<BTreeSet<u32>> = Vec::new();
    let mut seen = BTreeSet::new();
    for &r in left.iter().collect::<BTreeSet<_>>() {
        if seen.contains(&r) {
            continue;
        }
        let orbit: BTreeSet<u32> = h.iter().map(|&x| left[table.mul(x, r) as usize]).collect();
        seen.extend(orbit.iter().copied());
        left_orbits.push(orbit);
    }

    let mut violation = None;
    let mut fail = |msg: String| {
        if violation.is_none() {
            violation = Some(msg);
        }
    };

    let double_coset = |g: u32| -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        for &x in h {
            let xg = table.mul(x, g);
            for &y in d {
                out.insert(table.mul(xg, y));
            }
        }
        out
    };

    // keyed by the least element of the double coset
    let mut by_double: BTreeMap<u32, (usize, usize, usize)> = BTreeMap::new();
    for orbit in &right_orbits {
        let union: BTreeSet<u32> = (0..table.order() as u32)
            .filter(|&x| orbit.binary_search(&right[x as usize]).is_ok())
            .collect();
        let dc = double_coset(orbit[0]);
        if union != dc {
            fail(format!(
                "union of the D-orbit of H{} is not the double coset H{}D",
                table.perm(orbit[0]),
                table.perm(orbit[0])
            ));
        }
        let key = *dc.first().unwrap();
        by_double.entry(key).or_default().0 = orbit.len();
        by_double.entry(key).or_default().2 = dc.len();

        let rep = orbit[0];
        let g_d_ginv: Sub = table.conjugate(d, table.inv(rep));
        let predicted = h.len() * d.len() / table.intersection_size(h, &g_d_ginv);
        if predicted != dc.len() {
            fail(format!(
                "|HgD| = {} but |H||D|/|H ∩ gDg^-1| = {} for g = {}",
                dc.len(),
                predicted,
                table.perm(rep)
            ));
        }
    }
    for orbit in &left_orbits {
        let union: BTreeSet<u32> = (0..table.order() as u32)
            .filter(|&x| orbit.contains(&left[x as usize]))
            .collect();
        let rep = *orbit.first().unwrap();
        let dc = double_coset(rep);
        if union != dc {
            fail(format!(
                "union of the H-orbit of {}D is not the double coset H{}D",
                table.perm(rep),
                table.perm(rep)
            ));
        }
        by_double.entry(*dc.first().unwrap()).or_default().1 = orbit.len();
    }

    if right_orbits.len() != left_orbits.len() {
        fail(format!(
            "{} D-orbits on H\\G but {} H-orbits on G/D",
            right_orbits.len(),
            left_orbits.len()
        ));
    }
    for (&key, &(a, b, size)) in &by_double {
        if a * h.len() != b * d.len() || a * h.len() != size {
            fail(format!(
                "double coset of {}: {a} right cosets, {b} left cosets, |H| = {}, |D| = {}, size {size}",
                table.perm(key),
                h.len(),
                d.len()
            ));
        }
    }

    let mut sizes: Vec<usize> = by_double.values().map(|t| t.2).collect();
    sizes.sort_unstable();
    DoubleCosetReport {
        double_coset_sizes: sizes,
        right_orbit_lengths: FactorType::from_positive(right_orbits.iter().map(Vec::len)),
        left_orbit_lengths: FactorType::from_positive(left_orbits.iter().map(BTreeSet::len)),
        violation,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerOrbitReport {
    /// One entry per `D`-orbit: its length and the lengths of the `E`-orbits
    /// it splits into.
    pub splits: Vec<(usize, FactorType)>,
    pub violation: Option<String>,
}

impl StabilizerOrbitReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// For `E` normal in `D`, every `D`-orbit `(Hg)D` on `H\G` splits into
/// `E`-orbits of the common length `|E| / |H ∩ gEg^-1|`.
pub fn verify_stabilizer_orbit_lemma(
    g: &PermGroup,
    e: &PermGroup,
    d: &PermGroup,
    h: &PermGroup,
) -> Result<StabilizerOrbitReport, GroupError> {
    let table = Cayley::new(g);
    let es = table.embed(e, "E")?;
    let ds = table.embed(d, "D")?;
    let hs = table.embed(h, "H")?;
    if !e.is_subgroup_of(d) {
        return Err(GroupError::NotASubgroup("E"));
    }
    if !e.is_normal_in(d) {
        return Err(GroupError::NotNormal);
    }
    Ok(stabilizer_orbit_check(&table, &es, &ds, &hs))
}

pub(crate) fn stabilizer_orbit_check(
    table: &Cayley<'_>,
    e: &[u32],
    d: &[u32],
    h: &[u32],
) -> StabilizerOrbitReport {
    let cosets = table.right_cosets(h);
    let d_orbits = table.right_orbits(&cosets, d);
    let e_orbits = table.right_orbits(&cosets, e);
    let mut violation = None;
    let mut splits = Vec::new();
    for orbit in &d_orbits {
        let inside: Vec<&Vec<u32>> = e_orbits
            .iter()
            .filter(|eo| orbit.binary_search(&eo[0]).is_ok())
            .collect();
        let lengths = FactorType::from_positive(inside.iter().map(|eo| eo.len()));
        let rep = orbit[0];
        let g_e_ginv = table.conjugate(e, table.inv(rep));
        let expected = e.len() / table.intersection_size(h, &g_e_ginv);
        let covered: usize = inside.iter().map(|eo| eo.len()).sum();
        if covered != orbit.len() {
            violation.get_or_insert(format!(
                "E-orbits do not tile the D-orbit of H{}",
                table.perm(rep)
            ));
        }
        if !lengths.is_uniform() || lengths.parts()[0] as usize != expected {
            violation.get_or_insert(format!(
                "D-orbit of H{} splits into E-orbits {lengths}, expected all of length {expected}",
                table.perm(rep)
            ));
        }
        splits.push((orbit.len(), lengths));
    }
    StabilizerOrbitReport { splits, violation }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagariasReport {
    pub subgroups: usize,
    pub divisions: usize,
    pub pairs_checked: usize,
    pub violation: Option<String>,
}

impl LagariasReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// For every pair `φ1, φ2` in `G`: `<φ1>` and `<φ2>` are conjugate exactly
/// when, for every subgroup `H`, the two cyclic groups cut `H\G` into orbits
/// of the same lengths.
pub fn verify_lagarias_equivalence(g: &PermGroup) -> LagariasReport {
    let table = Cayley::new(g);
    let subgroups = table.all_subgroups();
    let coset_maps: Vec<Vec<u32>> = subgroups.iter().map(|h| table.right_cosets(h)).collect();

    let n = table.order() as u32;
    let signatures: Vec<Vec<FactorType>> = (0..n)
        .map(|phi| {
            coset_maps
                .iter()
                .map(|c| table.induced_cycle_type(c, phi))
                .collect()
        })
        .collect();
    let mut division_of: HashMap<Sub, usize> = HashMap::new();
    let division: Vec<usize> = (0..n)
        .map(|phi| {
            let key = table.canonical_conjugate(&table.cyclic(phi));
            let next = division_of.len();
            *division_of.entry(key).or_insert(next)
        })
        .collect();

    let mut violation = None;
    let mut pairs = 0;
    'outer: for a in 0..n {
        for b in 0..n {
            pairs += 1;
            let same_division = division[a as usize] == division[b as usize];
            let same_orbits = signatures[a as usize] == signatures[b as usize];
            if same_division != same_orbits {
                violation = Some(format!(
                    "{} and {}: conjugate cyclic subgroups = {same_division}, equal orbit data = {same_orbits}",
                    table.perm(a),
                    table.perm(b)
                ));
                break 'outer;
            }
        }
    }
    LagariasReport {
        subgroups: subgroups.len(),
        divisions: division_of.len(),
        pairs_checked: pairs,
        violation,
    }
}

/// A non-normal `H` comes with `φ ∈ H` and `g` such that `φ ∉ g^-1 H g`;
/// then `<φ>` fixes the coset `H` but moves `Hg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityWitness {
    pub phi: Perm,
    pub g: Perm,
    pub orbit_lengths: FactorType,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityReport {
    pub is_normal: bool,
    /// Every cyclic subgroup cuts `H\G` into orbits of a single length.
    pub uniform_orbits: bool,
    pub witness: Option<NormalityWitness>,
    pub violation: Option<String>,
}

impl NormalityReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// `H` is normal in `G` iff every cyclic `D ≤ G` has orbits of equal length
/// on `H\G`.
pub fn verify_normality_criterion(
    g: &PermGroup,
    h: &PermGroup,
) -> Result<NormalityReport, GroupError> {
    let table = Cayley::new(g);
    let hs = table.embed(h, "H")?;
    Ok(normality_check(&table, &hs))
}

pub(crate) fn normality_check(table: &Cayley<'_>, h: &[u32]) -> NormalityReport {
    let n = table.order() as u32;
    let is_normal = (0..n).all(|x| table.conjugate(h, x) == h);
    let cosets = table.right_cosets(h);
    let uniform_orbits = (0..n).all(|phi| table.induced_cycle_type(&cosets, phi).is_uniform());

    let mut violation = None;
    if is_normal != uniform_orbits {
        violation = Some(format!(
            "normal = {is_normal} but uniform orbit lengths = {uniform_orbits}"
        ));
    }

    if is_normal {
        // every D-orbit looks like (D ∩ H)\D
        for phi in 0..n {
            let d = table.cyclic(phi);
            let expected = d.len() / table.intersection_size(&d, h);
            let lengths = table.induced_cycle_type(&cosets, phi);
            if lengths.parts().iter().any(|&l| l as usize != expected) {
                violation.get_or_insert(format!(
                    "orbits of <{}> have lengths {lengths}, expected {expected}",
                    table.perm(phi)
                ));
            }
        }
        return NormalityReport {
            is_normal,
            uniform_orbits,
            witness: None,
            violation,
        };
    }

    let witness = h.iter().find_map(|&phi| {
        (0..n)
            .find(|&x| table.conjugate(h, x).binary_search(&phi).is_err())
            .map(|x| (phi, x))
    });
    let witness = match witness {
        Some((phi, x)) => {
            let fixes_h = cosets[phi as usize] == cosets[0];
            let moves_hx = cosets[table.mul(x, phi) as usize] != cosets[x as usize];
            let orbit_lengths = table.induced_cycle_type(&cosets, phi);
            if !(fixes_h && moves_hx) {
                violation.get_or_insert(format!(
                    "witness φ = {}, g = {} does not fix H and move Hg",
                    table.perm(phi),
                    table.perm(x)
                ));
            }
            if !(orbit_lengths.parts()[0] == 1 && *orbit_lengths.parts().last().unwrap() > 1) {
                violation.get_or_insert(format!(
                    "orbit lengths {orbit_lengths} of <{}> lack a 1 or a part above 1",
                    table.perm(phi)
                ));
            }
            Some(NormalityWitness {
                phi: table.perm(phi).clone(),
                g: table.perm(x).clone(),
                orbit_lengths,
            })
        }
        None => {
            violation.get_or_insert("non-normal subgroup without a witness".to_string());
            None
        }
    };
    NormalityReport {
        is_normal,
        uniform_orbits,
        witness,
        violation,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleOrbitReport {
    pub elements_checked: usize,
    pub violation: Option<String>,
}

impl CycleOrbitReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// For transitive `G ≤ S_n` and `H = G_1`: the point stabilizers have index
/// `n` and form one conjugacy class, `Hg` is determined by `g(1)`, and the
/// orbit lengths of `<φ>` on `H\G` are the cycle lengths of `φ`.
pub fn verify_cycle_orbit_correspondence(g: &PermGroup) -> Result<CycleOrbitReport, GroupError> {
    if !g.is_transitive() {
        return Err(GroupError::NotTransitive);
    }
    let table = Cayley::new(g);
    let n = g.degree();
    let mut violation: Option<String> = None;

    let stabilizers: Vec<Sub> = (0..n)
        .map(|w| table.embed(&g.stabilizer(w), "stabilizer").expect("subgroup of G"))
        .collect();
    for (w, s) in stabilizers.iter().enumerate() {
        if s.len() * n != table.order() {
            violation.get_or_insert(format!("[G : G_{}] != {n}", w + 1));
        }
    }
    let conjugates: BTreeSet<Sub> = (0..table.order() as u32)
        .map(|x| table.conjugate(&stabilizers[0], x))
        .collect();
    let stabilizer_set: BTreeSet<Sub> = stabilizers.iter().cloned().collect();
    if conjugates != stabilizer_set {
        violation.get_or_insert("conjugates of G_1 are not exactly the point stabilizers".into());
    }

    let cosets = table.right_cosets(&stabilizers[0]);
    for a in 0..table.order() as u32 {
        for b in 0..table.order() as u32 {
            let same_coset = cosets[a as usize] == cosets[b as usize];
            let same_point = table.perm(a).image(0) == table.perm(b).image(0);
            if same_coset != same_point {
                violation.get_or_insert(format!(
                    "cosets of {} and {} disagree with their images of 1",
                    table.perm(a),
                    table.perm(b)
                ));
            }
        }
    }

    for phi in 0..table.order() as u32 {
        let orbits = table.induced_cycle_type(&cosets, phi);
        let cycles = table.perm(phi).cycle_type();
        if orbits != cycles {
            violation.get_or_insert(format!(
                "{}: orbit lengths {orbits} but cycle type {cycles}",
                table.perm(phi)
            ));
        }
    }
    Ok(CycleOrbitReport {
        elements_checked: table.order(),
        violation,
    })
}
