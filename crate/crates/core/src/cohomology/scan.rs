use std::collections::HashSet;

use rayon::prelude::*;

use super::{h1, restrict_subgroup, CohomologyConfig, CohomologyResult, GLattice, Subgroup};
use crate::abelian::FinAbGroup;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupResult {
    /// Index into [`GLattice::elements`] of the generating element.
    pub generator_index: usize,
    pub order: usize,
    pub h1: FinAbGroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub full: CohomologyResult,
    /// One entry per distinct cyclic subgroup, sorted by generator index.
    pub subgroups: Vec<SubgroupResult>,
    pub obstructed: bool,
    /// Human-readable labels of every group with nonzero `H^1`.
    pub witnesses: Vec<String>,
}

impl ScanReport {
    pub fn verdict(&self) -> &'static str {
        if self.obstructed {
            "stable linearization obstructed"
        } else {
            "no obstruction found"
        }
    }
}

/// `H^1` of the whole group and of every cyclic subgroup `<g>`.
///
/// A nonzero group anywhere obstructs stable linearizability.
pub fn obstruction_scan(m: &GLattice, cfg: &CohomologyConfig) -> Result<ScanReport> {
    let full = h1(m, cfg)?;
    let lookup = m.element_lookup();

    // one generator per distinct cyclic subgroup, first index wins
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut reps = Vec::new();
    for (i, g) in m.elements().iter().enumerate() {
        let mut members = Vec::new();
        let mut cur = g.clone();
        loop {
            members.push(lookup[&cur]);
            if cur.is_identity() {
                break;
            }
            cur = cur.mul(g)?;
        }
        members.sort_unstable();
        if seen.insert(members) {
            reps.push(i);
        }
    }

    let subgroups = reps
        .par_iter()
        .map(|&i| {
            let sub = restrict_subgroup(m, &Subgroup::Generator(m.elements()[i].clone()))?;
            let r = h1(&sub, cfg)?;
            Ok(SubgroupResult {
                generator_index: i,
                order: sub.order(),
                h1: r.h1,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut witnesses = Vec::new();
    if !full.h1.is_trivial() {
        witnesses.push(format!(
            "full group (order {}): H^1 = {}",
            full.group_order, full.h1
        ));
    }
    for s in subgroups.iter().filter(|s| !s.h1.is_trivial()) {
        witnesses.push(format!(
            "<g{}> (order {}): H^1 = {}",
            s.generator_index, s.order, s.h1
        ));
    }
    Ok(ScanReport {
        obstructed: !witnesses.is_empty(),
        full,
        subgroups,
        witnesses,
    })
}
