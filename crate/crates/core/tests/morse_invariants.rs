use anchored_core::cubical::{CCell, Cell, CellComplex, GroundParams, OmegaCell};
use anchored_core::gf2::{rank, GF2Matrix};
use anchored_core::morse::{
    check_acyclic, classify_w, lambda_endpoint, lambda_path, noncollapsible_facets, unique_noncollapsible_face,
    validate_matching, KozlovField, MorseComplex, StatusKind, WField,
};

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn expected_counts(n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..=n - 3).map(|d| binomial(n, d)).collect();
    v.push((1 << n) + binomial(n - 1, 2) - 2);
    v
}

// Direct evaluation of the three families of critical cells of M.
fn in_c1_c2_c3(cell: &OmegaCell) -> bool {
    let (a, b, c) = (cell.a(), cell.b(), cell.c());
    let alpha = (a | b).min().unwrap();
    let beta = (b | c).max().unwrap();
    let a_is_alpha = a.len() == 1 && a.min() == Some(alpha);
    let c_is_beta = c.len() == 1 && c.max() == Some(beta);
    let c1 = a_is_alpha && b.is_empty() && c.len() >= 2 && beta < alpha;
    let c2 = a_is_alpha && b.is_empty() && c_is_beta;
    let c3 = a_is_alpha && !b.is_empty() && c_is_beta && alpha < b.min().unwrap() && b.max().unwrap() < beta;
    c1 || c2 || c3
}

#[test]
fn critical_cells_of_m_are_the_three_families() {
    for n in 3..=5 {
        let params = GroundParams::new(n).unwrap();
        let morse = MorseComplex::new(KozlovField, params).unwrap();
        for d in 0..=params.max_dim() {
            for (i, cell) in morse.complex().cells(d).iter().enumerate() {
                let critical = morse.kind(d, i) == StatusKind::Critical;
                assert_eq!(critical, in_c1_c2_c3(cell), "n={n} {cell}");
            }
        }
    }
}

#[test]
fn critical_cells_of_w_embed_those_of_m() {
    for n in 3..=5 {
        let params = GroundParams::new(n).unwrap();
        let w = MorseComplex::new(WField, params).unwrap();
        let m = MorseComplex::new(KozlovField, params).unwrap();
        for d in 0..=params.max_dim() {
            let mut from_m: Vec<CCell> = m.critical_cells(d).iter().map(CCell::from_omega).collect();
            from_m.sort_by_key(Cell::encode);
            assert_eq!(w.critical_cells(d), from_m);
        }
    }
}

#[test]
fn critical_counts_match_closed_form() {
    for n in 3..=5 {
        let morse = MorseComplex::new(WField, GroundParams::new(n).unwrap()).unwrap();
        assert_eq!(morse.critical_counts(), expected_counts(n), "n={n}");
    }
    assert_eq!(expected_counts(4), vec![1, 4, 17]);
    assert_eq!(expected_counts(5), vec![1, 5, 10, 36]);
    assert_eq!(*expected_counts(6).last().unwrap(), 72);
}

#[test]
fn fields_are_gradient() {
    for n in 3..=5 {
        let params = GroundParams::new(n).unwrap();
        let complex = CellComplex::<CCell>::new(params);
        let report = validate_matching(&WField, &complex);
        assert!(report.is_valid(), "{:?}", report.violations);
        assert_eq!(report.redundant, report.collapsible);
        assert_eq!(report.critical + 2 * report.redundant, complex.total());
        let verdict = check_acyclic(&WField, &complex);
        assert!(verdict.is_acyclic(), "n={n}: cycle {:?}", verdict.cycle);
        assert_eq!(verdict.reversed_arcs, report.redundant);

        let omega = CellComplex::<OmegaCell>::new(params);
        assert!(validate_matching(&KozlovField, &omega).is_valid());
        assert!(check_acyclic(&KozlovField, &omega).is_acyclic());
    }
}

#[test]
fn morse_coboundary_vanishes() {
    for n in 3..=5 {
        let morse = MorseComplex::new(WField, GroundParams::new(n).unwrap()).unwrap();
        for p in 0..morse.max_dim() {
            let m = morse.morse_coboundary_matrix(p).unwrap();
            assert_eq!((m.rows(), m.cols()), (morse.critical_indices(p + 1).len(), morse.critical_indices(p).len()));
            assert!(m.is_zero(), "n={n} p={p}");
        }
    }
}

#[test]
fn psi_kills_boundaries() {
    for n in 4..=5 {
        let morse = MorseComplex::new(WField, GroundParams::new(n).unwrap()).unwrap();
        for d in 1..=morse.max_dim() {
            for cell in morse.complex().cells(d) {
                let mut acc = std::collections::BTreeSet::new();
                for f in cell.facets() {
                    for id in morse.psi_projection(&f).unwrap().ids() {
                        if !acc.remove(&id) {
                            acc.insert(id);
                        }
                    }
                }
                assert!(acc.is_empty(), "psi(∂{cell}) ≠ 0");
            }
        }
    }
}

#[test]
fn flow_pairs_with_lifts() {
    for n in 4..=5 {
        let morse = MorseComplex::new(WField, GroundParams::new(n).unwrap()).unwrap();
        for d in 0..=morse.max_dim() {
            let crit = morse.critical_cells(d);
            let lifts = morse.lifts(d);
            for (b, cell) in crit.iter().enumerate() {
                let flow = morse.phi_flow(cell).unwrap();
                assert!(flow.steps <= morse.complex().len(d));
                for (a, lift) in lifts.iter().enumerate() {
                    assert_eq!(lift.dot(&flow.chain), a == b, "n={n} d={d}");
                }
                if n == 4 {
                    assert_eq!(morse.lift_cocycle(cell).unwrap(), lifts[b]);
                }
            }
        }
    }
}

#[test]
fn lifts_are_independent_cocycles() {
    for n in 4..=5 {
        let params = GroundParams::new(n).unwrap();
        let morse = MorseComplex::new(WField, params).unwrap();
        let complex = morse.complex();
        for d in 0..=params.max_dim() {
            let lifts = morse.lifts(d);
            if d < params.max_dim() {
                let delta = complex.coboundary_matrix(d).unwrap();
                for lift in &lifts {
                    assert!(delta.mul_vec(lift).unwrap().is_zero(), "n={n} d={d}");
                }
            }
            let image = if d == 0 {
                GF2Matrix::zeros(0, complex.len(0))
            } else {
                complex.coboundary_matrix(d - 1).unwrap().transpose()
            };
            let base = rank(&image);
            let mut stacked = image.clone();
            for lift in &lifts {
                stacked.push_row(lift.clone()).unwrap();
            }
            assert_eq!(rank(&stacked), base + lifts.len(), "n={n} d={d}");
        }
    }
}

#[test]
fn lambda_paths_follow_the_closed_form() {
    for n in 3..=5 {
        let morse = MorseComplex::new(WField, GroundParams::new(n).unwrap()).unwrap();
        let mut traced = 0;
        for d in 0..=morse.max_dim() {
            for cell in morse.complex().cells(d) {
                if [1, 2, 3].iter().any(|&i| !cell.y(i).is_empty()) || classify_w(cell).kind == StatusKind::Collapsible {
                    continue;
                }
                let path = lambda_path(&morse, cell).unwrap();
                let expected = lambda_endpoint(cell).unwrap();
                assert_eq!(path.endpoint, expected, "{cell}");
                assert!(path.cells.iter().all(|c| (1..=3).all(|i| c.y(i).is_empty())));
                for pair in path.cells.windows(2) {
                    let up = classify_w(&pair[0]).partner.unwrap();
                    assert!(up.facets().contains(&pair[1]) && pair[1] != pair[0]);
                }
                let psi: Vec<CCell> = morse.psi_projection(cell).unwrap().cells(n).unwrap();
                assert_eq!(psi, vec![expected]);
                traced += 1;
            }
        }
        assert!(traced > 0);
    }
}

#[test]
fn non_collapsible_faces_of_shift_collapsible_cells() {
    for n in 3..=5 {
        let params = GroundParams::new(n).unwrap();
        for cell in CellComplex::<CCell>::new(params).cells(1).iter().chain(CellComplex::<CCell>::new(params).cells(2)) {
            let Ok(face) = unique_noncollapsible_face(cell) else { continue };
            assert!(cell.facets().contains(&face));
            for other in noncollapsible_facets(cell) {
                if other != face {
                    // the only other source is an element leaving y4 for x1
                    let from_y4 = cell.y(4).difference(other.y(4));
                    assert_eq!(from_y4.len(), 1, "{cell} → {other}");
                    assert!(from_y4.is_subset(other.x(1)));
                }
            }
        }
    }
    // a face reached by moving y4 into x1 need not be collapsible
    let cell = CCell::from_lists(4, [&[], &[], &[], &[1], &[2], &[], &[3], &[4]]).unwrap();
    let extra: Vec<CCell> = noncollapsible_facets(&cell)
        .into_iter()
        .filter(|f| *f != unique_noncollapsible_face(&cell).unwrap())
        .collect();
    assert!(!extra.is_empty());
}
