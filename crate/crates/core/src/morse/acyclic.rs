use serde::Serialize;

use super::field::{StatusKind, VectorField};
use crate::cubical::{Cell, CellComplex, CellId};

/// Outcome of searching the modified Hasse diagram for a closed path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcyclicityVerdict {
    pub cells: usize,
    pub arcs: usize,
    /// Arcs reversed because they belong to the matching.
    pub reversed_arcs: usize,
    /// Cell ids along a directed cycle, when one exists.
    pub cycle: Option<Vec<CellId>>,
}

impl AcyclicityVerdict {
    pub fn is_acyclic(&self) -> bool {
        self.cycle.is_none()
    }
}

/// Builds the Hasse diagram with every matched arc reversed and searches it
/// for a directed cycle by depth-first search.
///
/// Any directed cycle in this graph alternates reversed and ordinary arcs,
/// so acyclicity is equivalent to the absence of closed gradient paths.
pub fn check_acyclic<F: VectorField>(field: &F, complex: &CellComplex<F::Cell>) -> AcyclicityVerdict {
    let top = complex.max_dim();
    let mut offset = vec![0usize; top + 2];
    for d in 0..=top {
        offset[d + 1] = offset[d] + complex.len(d);
    }
    let total = offset[top + 1];
    let global = |c: &F::Cell| offset[c.dim()] + complex.index_of(c).expect("cell of the complex");

    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut arcs = 0;
    let mut reversed_arcs = 0;
    for d in 1..=top {
        for cell in complex.cells(d) {
            let upper = global(cell);
            for face in cell.facets() {
                let lower = global(&face);
                let status = field.classify(&face);
                arcs += 1;
                if status.kind == StatusKind::Redundant && status.partner.as_ref() == Some(cell) {
                    adjacency[lower].push(upper);
                    reversed_arcs += 1;
                } else {
                    adjacency[upper].push(lower);
                }
            }
        }
    }

    let cycle = find_cycle(&adjacency).map(|nodes| {
        nodes
            .into_iter()
            .map(|g| {
                let d = offset.partition_point(|&o| o <= g) - 1;
                complex.cells(d)[g - offset[d]].encode()
            })
            .collect()
    });
    AcyclicityVerdict { cells: total, arcs, reversed_arcs, cycle }
}

fn find_cycle(adjacency: &[Vec<usize>]) -> Option<Vec<usize>> {
    const WHITE: u8 = 0;
    const GREY: u8 = 1;
    const BLACK: u8 = 2;
    let mut color = vec![WHITE; adjacency.len()];
    for start in 0..adjacency.len() {
        if color[start] != WHITE {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        color[start] = GREY;
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            if let Some(&child) = adjacency[node].get(*next) {
                *next += 1;
                match color[child] {
                    WHITE => {
                        color[child] = GREY;
                        stack.push((child, 0));
                    }
                    GREY => {
                        let from = stack.iter().position(|&(v, _)| v == child).expect("grey node on stack");
                        return Some(stack[from..].iter().map(|&(v, _)| v).collect());
                    }
                    _ => {}
                }
            } else {
                color[node] = BLACK;
                stack.pop();
            }
        }
    }
    None
}

/// Summary of a matching-validity sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MatchingReport {
    pub critical: usize,
    pub redundant: usize,
    pub collapsible: usize,
    pub violations: Vec<String>,
}

impl MatchingReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every cell has exactly one status, that partners are
/// facets/cofacets, and that partner-of-partner is the identity.
pub fn validate_matching<F: VectorField>(field: &F, complex: &CellComplex<F::Cell>) -> MatchingReport {
    let mut report = MatchingReport::default();
    for d in 0..=complex.max_dim() {
        for cell in complex.cells(d) {
            let status = field.classify(cell);
            match (status.kind, status.partner) {
                (StatusKind::Critical, None) => report.critical += 1,
                (StatusKind::Redundant, Some(p)) => {
                    report.redundant += 1;
                    let back = field.classify(&p);
                    if back.kind != StatusKind::Collapsible || back.partner.as_ref() != Some(cell) {
                        report.violations.push(format!("{cell} → {p} does not pair back"));
                    }
                    if complex.index_of(&p).is_none() || !p.facets().contains(cell) {
                        report.violations.push(format!("{p} is not a cofacet of {cell}"));
                    }
                }
                (StatusKind::Collapsible, Some(p)) => {
                    report.collapsible += 1;
                    let back = field.classify(&p);
                    if back.kind != StatusKind::Redundant || back.partner.as_ref() != Some(cell) {
                        report.violations.push(format!("{cell} ← {p} does not pair back"));
                    }
                    if complex.index_of(&p).is_none() || !cell.facets().contains(&p) {
                        report.violations.push(format!("{p} is not a facet of {cell}"));
                    }
                }
                _ => report.violations.push(format!("{cell} has an inconsistent status")),
            }
        }
    }
    report
}
