use std::collections::BTreeMap;

use anchored_core::cubical::{boundary, cell_counts, enumerate_cells, CellComplex};
use anchored_core::cup::{betti_oracle, factorize, product_of_1cells, CohomologyClass, CupRing, ORACLE_MAX_N};
use anchored_core::morse::{
    check_acyclic, validate_matching, KozlovField, MorseComplex, VectorField, WField,
};
use anchored_core::tc::{tcs_bounds_for_j, tcs_bounds_with};
use anchored_core::{CCell, Cell, Error, GroundParams, OmegaCell, Space};
use serde_json::json;

use crate::args::{Command, Common};
use crate::report::{cell_json, cell_row, join_ids, RunReport};

pub fn run(command: &Command) -> anyhow::Result<RunReport> {
    let common = command.common();
    let params = validate(command, common)?;
    let n = params.n();
    Ok(match command {
        Command::Cells { dim, space, .. } => match space {
            Space::Omega => cells::<OmegaCell>(params, *dim),
            Space::COmega => cells::<CCell>(params, *dim),
        },
        Command::Boundary { space, cell, .. } => match space {
            Space::Omega => faces(OmegaCell::parse(n, cell)?),
            Space::COmega => faces(CCell::parse(n, cell)?),
        },
        Command::Critical { dim, space, .. } => match space {
            Space::Omega => critical(KozlovField, params, *dim)?,
            Space::COmega => critical(WField, params, *dim)?,
        },
        Command::MorseCheck { space, .. } => match space {
            Space::Omega => morse_check(KozlovField, params)?,
            Space::COmega => morse_check(WField, params)?,
        },
        Command::Betti { oracle, .. } => betti(params, *oracle)?,
        Command::Cup { cells, oracle, .. } => cup(params, cells, *oracle)?,
        Command::Ring { .. } => ring(params)?,
        Command::Factorize { cell, .. } => factor(params, cell)?,
        Command::Tc { .. } => bounds(params, 2, None)?,
        Command::Tcs { s, j, .. } => bounds(params, *s, *j)?,
    })
}

fn validate(command: &Command, common: &Common) -> anyhow::Result<GroundParams> {
    let n = common.n;
    let heavy = match command {
        Command::Betti { oracle, .. } => *oracle,
        Command::Cup { .. } | Command::Ring { .. } | Command::Tc { .. } | Command::Tcs { .. } => true,
        _ => false,
    };
    let cap = if heavy { common.max_n.min(ORACLE_MAX_N) } else { common.max_n };
    if n > cap {
        return Err(Error::Resource(format!("`{}` is capped at n ≤ {cap} (--max-n)", command.name())).into());
    }
    let least = if matches!(command, Command::Tc { .. } | Command::Tcs { .. }) { 4 } else { 3 };
    if n < least {
        return Err(Error::Parameter(format!("`{}` needs n ≥ {least}, got {n}", command.name())).into());
    }
    Ok(GroundParams::new(n)?)
}

const CELL_HEADER: [&str; 3] = ["id", "dim", "cell"];

fn cells<C: Cell>(params: GroundParams, dim: Option<usize>) -> RunReport {
    let mut report =
        RunReport::new("cells", json!({ "n": params.n(), "space": C::SPACE, "dim": dim }), CELL_HEADER.to_vec());
    let list: Vec<C> = enumerate_cells::<C>(params, dim).collect();
    report.rows = list.iter().map(cell_row).collect();
    report.result = json!({
        "count": list.len(),
        "counts": cell_counts::<C>(params),
        "cells": list.iter().map(cell_json).collect::<Vec<_>>(),
    });
    report
}

fn faces<C: Cell>(cell: C) -> RunReport {
    let mut report =
        RunReport::new("boundary", json!({ "n": cell.n(), "space": C::SPACE, "cell": cell.to_string() }), CELL_HEADER.to_vec());
    let faces = boundary(&cell).cells::<C>(cell.n()).expect("faces decode");
    report.rows = faces.iter().map(cell_row).collect();
    report.result = json!({
        "cell": cell_json(&cell),
        "faces": faces.iter().map(cell_json).collect::<Vec<_>>(),
    });
    report
}

fn closed_form_counts(n: usize) -> Vec<usize> {
    let binomial = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
    let mut v: Vec<usize> = (0..=n - 3).map(|d| binomial(n, d)).collect();
    v.push((1 << n) + binomial(n - 1, 2) - 2);
    v
}

fn count_map(counts: &[usize]) -> BTreeMap<String, usize> {
    counts.iter().enumerate().map(|(d, &c)| (d.to_string(), c)).collect()
}

fn critical<F: VectorField>(field: F, params: GroundParams, dim: Option<usize>) -> anyhow::Result<RunReport> {
    let mut report = RunReport::new(
        "critical",
        json!({ "n": params.n(), "space": <F::Cell as Cell>::SPACE, "dim": dim }),
        CELL_HEADER.to_vec(),
    );
    let morse = MorseComplex::new(field, params)?;
    let counts = morse.critical_counts();
    report.check("critical counts equal the closed forms", counts == closed_form_counts(params.n()));
    let list: Vec<F::Cell> = (0..=params.max_dim())
        .filter(|d| dim.map_or(true, |x| x == *d))
        .flat_map(|d| morse.critical_cells(d))
        .collect();
    report.rows = list.iter().map(cell_row).collect();
    report.result = json!({
        "counts": count_map(&counts),
        "cells": list.iter().map(cell_json).collect::<Vec<_>>(),
    });
    Ok(report)
}

fn morse_check<F: VectorField + Clone>(field: F, params: GroundParams) -> anyhow::Result<RunReport> {
    let mut report = RunReport::new(
        "morse-check",
        json!({ "n": params.n(), "space": <F::Cell as Cell>::SPACE, "field": field.name() }),
        vec!["check", "pass"],
    );
    let complex = CellComplex::<F::Cell>::new(params);
    let matching = validate_matching(&field, &complex);
    let verdict = check_acyclic(&field, &complex);
    report.check("matching is valid", matching.is_valid());
    report.check("modified Hasse diagram is acyclic", verdict.is_acyclic());
    let mut result = json!({
        "cells": verdict.cells,
        "arcs": verdict.arcs,
        "matched_pairs": matching.redundant,
        "critical": matching.critical,
        "cycle": verdict.cycle,
        "violations": matching.violations,
    });
    if matching.is_valid() && verdict.is_acyclic() {
        let morse = MorseComplex::from_complex(field, complex)?;
        let zero = (0..params.max_dim()).map(|p| morse.morse_coboundary_matrix(p)).collect::<Result<Vec<_>, _>>()?;
        report.check("Morse coboundary vanishes", zero.iter().all(|m| m.is_zero()));
        let counts = morse.critical_counts();
        report.check("critical counts equal the closed forms", counts == closed_form_counts(params.n()));
        result["critical_counts"] = json!(count_map(&counts));
    }
    report.rows = report.verdicts.iter().map(|v| vec![v.check.clone(), v.pass.to_string()]).collect();
    report.result = result;
    Ok(report)
}

fn betti(params: GroundParams, oracle: bool) -> anyhow::Result<RunReport> {
    let n = params.n();
    let mut report = RunReport::new("betti", json!({ "n": n, "oracle": oracle }), vec!["degree", "critical", "betti"]);
    let morse = MorseComplex::new(WField, params)?;
    let critical = morse.critical_counts();
    let chi: i64 = cell_counts::<CCell>(params)
        .iter()
        .enumerate()
        .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum();
    let expected_chi = (-2i64).pow(n as u32) - 2 * (-1i64).pow(n as u32);
    report.check("Euler characteristic equals (−2)^n − 2(−1)^n", chi == expected_chi);
    let betti = if oracle {
        let r = betti_oracle(params, false)?;
        report.check("coboundary-rank Betti numbers equal critical counts", r.betti == critical);
        Some(r.betti)
    } else {
        None
    };
    report.rows = critical
        .iter()
        .enumerate()
        .map(|(d, c)| {
            let b = betti.as_ref().map_or(String::new(), |b| b[d].to_string());
            vec![d.to_string(), c.to_string(), b]
        })
        .collect();
    report.result = json!({
        "critical_counts": critical,
        "betti": betti,
        "euler_characteristic": chi,
    });
    Ok(report)
}

fn parse_critical(ring: &CupRing, text: &str) -> anyhow::Result<CCell> {
    let cell = CCell::parse(ring.n(), text)?;
    ring.basis().require_position(&cell)?;
    Ok(cell)
}

fn cup(params: GroundParams, texts: &[String], oracle: bool) -> anyhow::Result<RunReport> {
    let mut report = RunReport::new("cup", json!({ "n": params.n(), "cells": texts, "oracle": oracle }), CELL_HEADER.to_vec());
    let ring = CupRing::new(params)?;
    let basis = ring.basis();
    let factors = texts.iter().map(|t| parse_critical(&ring, t)).collect::<anyhow::Result<Vec<_>>>()?;
    let classes = factors.iter().map(|c| CohomologyClass::of_cell(basis, c)).collect::<Result<Vec<_>, _>>()?;
    let product = ring.product(&classes)?;
    if oracle {
        let mut acc = CohomologyClass::unit(basis);
        for class in &classes {
            acc = ring.morse_cup_checked(&acc, class)?;
        }
        report.check("flow and span projections agree", acc == product);
    }
    if factors.iter().all(|c| c.dim() == 1) {
        let formula = product_of_1cells(basis, &factors)?;
        report.check("product matches the closed form for 1-cells", formula == product);
    }
    let support = product.cells(basis);
    report.rows = support.iter().map(cell_row).collect();
    report.result = json!({
        "degree": product.degree,
        "factors": factors.iter().map(cell_json).collect::<Vec<_>>(),
        "product": support.iter().map(cell_json).collect::<Vec<_>>(),
    });
    Ok(report)
}

fn ring(params: GroundParams) -> anyhow::Result<RunReport> {
    let mut report = RunReport::new("ring", json!({ "n": params.n() }), vec!["left", "right", "product"]);
    let table = CupRing::new(params)?.ring_table()?;
    let basis = table.basis();
    let mut commutative = true;
    for (a, b, class) in table.entries() {
        let swapped = table.get_by_id(b, a);
        commutative &= swapped == Some(class);
        report.rows.push(vec![a.to_string(), b.to_string(), join_ids(&class.ids(basis))]);
    }
    report.check("table is commutative", commutative);
    let gens = basis.one_cells_by_label();
    let mut generators = true;
    for a in &gens {
        for b in &gens {
            let formula = product_of_1cells(basis, &[*a, *b])?;
            generators &= table.get(a, b) == Some(&formula);
        }
    }
    report.check("generator products match the closed forms", generators);
    let by_degree: BTreeMap<String, Vec<u64>> = (0..=basis.max_dim()).map(|d| (d.to_string(), basis.ids(d))).collect();
    let products: BTreeMap<String, BTreeMap<String, Vec<u64>>> = table
        .to_id_map()
        .into_iter()
        .map(|(a, row)| (a.to_string(), row.into_iter().map(|(b, ids)| (b.to_string(), ids)).collect()))
        .collect();
    report.result = json!({ "basis": by_degree, "products": products });
    Ok(report)
}

fn factor(params: GroundParams, text: &str) -> anyhow::Result<RunReport> {
    let mut report = RunReport::new("factorize", json!({ "n": params.n(), "cell": text }), CELL_HEADER.to_vec());
    let ring = CupRing::new(params)?;
    let basis = ring.basis();
    let cell = parse_critical(&ring, text)?;
    let factors = factorize(basis, &cell)?;
    let product = product_of_1cells(basis, &factors)?;
    report.check("product of the factors contains the cell", product.cells(basis).contains(&cell));
    report.rows = factors.iter().map(cell_row).collect();
    report.result = json!({
        "cell": cell_json(&cell),
        "factors": factors.iter().map(cell_json).collect::<Vec<_>>(),
        "product": product.cells(basis).iter().map(cell_json).collect::<Vec<_>>(),
    });
    Ok(report)
}

fn bounds(params: GroundParams, s: usize, j: Option<usize>) -> anyhow::Result<RunReport> {
    let name = if s == 2 && j.is_none() { "tc" } else { "tcs" };
    let mut report = RunReport::new(
        name,
        json!({ "n": params.n(), "s": s, "j": j }),
        vec!["n", "s", "lower", "upper", "sharp", "j_used", "certificate"],
    );
    let table = CupRing::new(params)?.ring_table()?;
    let bounds = match j {
        Some(j) => tcs_bounds_for_j(&table, s, j)?,
        None => tcs_bounds_with(&table, s)?,
    };
    report.check("lower bound is certified by a nonzero product", !bounds.certificate.is_empty());
    report.rows.push(vec![
        bounds.n.to_string(),
        bounds.s.to_string(),
        bounds.lower.to_string(),
        bounds.upper.to_string(),
        bounds.sharp.to_string(),
        bounds.j_used.map_or(String::new(), |j| j.to_string()),
        bounds.certificate.iter().map(|t| join_ids(t)).collect::<Vec<_>>().join("|"),
    ]);
    report.result = serde_json::to_value(&bounds)?;
    Ok(report)
}

