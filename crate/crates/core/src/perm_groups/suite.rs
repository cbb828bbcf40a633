//! Exhaustive runs of the verifiers over small symmetric groups.

use super::cayley::Cayley;
use super::verify::{double_coset_check, normality_check, stabilizer_orbit_check};
use super::{transitive_subgroups, verify_cycle_orbit_correspondence, verify_lagarias_equivalence};
use super::{GroupError, PermGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteLine {
    pub check: String,
    pub cases: usize,
    pub detail: String,
    pub failures: Vec<String>,
}

impl SuiteLine {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cases > 0
    }
}

/// Largest degree whose full subgroup-pair sweeps are run.
const PAIR_SWEEP_DEGREE: usize = 4;

/// Runs every verifier for degrees `3..=degree_max`.
///
/// Double-coset and orbit-splitting identities cover all subgroup pairs of
/// `S_n` for `n <= 4`, and all pairs with cyclic `D` in `S_5`. Normality
/// covers every subgroup of each `S_n`; Lagarias equivalence and the
/// cycle/orbit correspondence cover every transitive subgroup.
pub fn run_verifier_suite(degree_max: usize) -> Result<Vec<SuiteLine>, GroupError> {
    if !(3..=5).contains(&degree_max) {
        return Err(GroupError::UnsupportedDegree(degree_max));
    }
    let mut lines = Vec::new();
    for n in 3..=degree_max {
        let sn = PermGroup::symmetric(n);
        let table = Cayley::new(&sn);
        let subgroups = table.all_subgroups();
        let cyclic: Vec<&Vec<u32>> = subgroups
            .iter()
            .filter(|s| table.to_group(s).is_cyclic())
            .collect();
        let ds: Vec<&Vec<u32>> = if n <= PAIR_SWEEP_DEGREE {
            subgroups.iter().collect()
        } else {
            cyclic.clone()
        };
        let d_scope = if n <= PAIR_SWEEP_DEGREE { "all" } else { "cyclic" };

        let mut failures = Vec::new();
        let mut cases = 0;
        for h in &subgroups {
            for d in &ds {
                cases += 1;
                if let Some(v) = double_coset_check(&table, h, d).violation {
                    failures.push(format!("H = {}, D = {}: {v}", table.to_group(h), table.to_group(d)));
                }
            }
        }
        lines.push(SuiteLine {
            check: format!("double-coset identities in S{n}"),
            cases,
            detail: format!("{} subgroups H, {} {d_scope} subgroups D", subgroups.len(), ds.len()),
            failures,
        });

        let mut failures = Vec::new();
        let mut cases = 0;
        for d in &ds {
            let d_group = table.to_group(d);
            for e in subgroups.iter().filter(|e| e.len() <= d.len()) {
                let e_group = table.to_group(e);
                if !e_group.is_normal_in(&d_group) {
                    continue;
                }
                for h in &subgroups {
                    cases += 1;
                    if let Some(v) = stabilizer_orbit_check(&table, e, d, h).violation {
                        failures.push(format!("E = {e_group}, D = {d_group}, H = {}: {v}", table.to_group(h)));
                    }
                }
            }
        }
        lines.push(SuiteLine {
            check: format!("orbit splitting under normal E in D, S{n}"),
            cases,
            detail: format!("triples (E, D, H) with {d_scope} D"),
            failures,
        });

        let mut failures = Vec::new();
        let mut normal = 0;
        let mut witnesses = 0;
        for h in &subgroups {
            let r = normality_check(&table, h);
            if r.is_normal {
                normal += 1;
            }
            if r.witness.is_some() {
                witnesses += 1;
            }
            if let Some(v) = r.violation {
                failures.push(format!("H = {}: {v}", table.to_group(h)));
            }
        }
        lines.push(SuiteLine {
            check: format!("normality criterion in S{n}"),
            cases: subgroups.len(),
            detail: format!(
                "{normal} normal, {} non-normal with {witnesses} witnesses",
                subgroups.len() - normal
            ),
            failures,
        });

        let groups = transitive_subgroups(n)?;
        let mut failures = Vec::new();
        let mut pairs = 0;
        for g in &groups {
            let r = verify_lagarias_equivalence(&g.group);
            pairs += r.pairs_checked;
            if let Some(v) = r.violation {
                failures.push(format!("{}: {v}", g.name));
            }
        }
        lines.push(SuiteLine {
            check: format!("division/orbit-signature equivalence, degree {n}"),
            cases: groups.len(),
            detail: format!("{pairs} element pairs"),
            failures,
        });

        let mut failures = Vec::new();
        let mut elements = 0;
        for g in &groups {
            let r = verify_cycle_orbit_correspondence(&g.group)?;
            elements += r.elements_checked;
            if let Some(v) = r.violation {
                failures.push(format!("{}: {v}", g.name));
            }
        }
        lines.push(SuiteLine {
            check: format!("cycle/orbit correspondence, degree {n}"),
            cases: groups.len(),
            detail: format!("{elements} elements"),
            failures,
        });
    }
    Ok(lines)
}
