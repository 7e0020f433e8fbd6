use std::collections::HashMap;

use anchored_core::cubical::{CCell, Cell, CellComplex, GroundParams};
use anchored_core::cup::{
    betti_oracle, coboundary, cup_cells, cup_cochains, factorize, product_of_1cells, Cochain, CohomologyClass, CupRing,
};
use anchored_core::gf2::{EchelonBasis, GF2Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_cochain(complex: &CellComplex<CCell>, degree: usize, rng: &mut ChaCha8Rng) -> Cochain {
    let bits: Vec<bool> = (0..complex.len(degree)).map(|_| rng.gen_bool(0.3)).collect();
    Cochain::new(complex, degree, GF2Vector::from_bools(&bits)).unwrap()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

#[test]
fn leibniz_and_associativity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [4, 5] {
        let complex = CellComplex::<CCell>::new(GroundParams::new(n).unwrap());
        let top = complex.max_dim();
        for _ in 0..200 {
            let p = rng.gen_range(0..top);
            let q = rng.gen_range(0..top - p);
            let (a, b) = (random_cochain(&complex, p, &mut rng), random_cochain(&complex, q, &mut rng));
            let lhs = coboundary(&complex, &cup_cochains(&complex, &a, &b).unwrap()).unwrap();
            let r1 = cup_cochains(&complex, &coboundary(&complex, &a).unwrap(), &b).unwrap();
            let r2 = cup_cochains(&complex, &a, &coboundary(&complex, &b).unwrap()).unwrap();
            assert_eq!(lhs, r1.add(&r2).unwrap(), "n={n} p={p} q={q}");

            let r = rng.gen_range(0..=top - p - q);
            let c = random_cochain(&complex, r, &mut rng);
            let left = cup_cochains(&complex, &cup_cochains(&complex, &a, &b).unwrap(), &c).unwrap();
            let right = cup_cochains(&complex, &a, &cup_cochains(&complex, &b, &c).unwrap()).unwrap();
            assert_eq!(left, right, "n={n} ({p},{q},{r})");
        }
    }
}

#[test]
fn exhaustive_low_degree_pairs_n4() {
    let complex = CellComplex::<CCell>::new(GroundParams::new(4).unwrap());
    let unit = Cochain::new(&complex, 0, GF2Vector::from_bools(&vec![true; complex.len(0)])).unwrap();
    let duals = |d: usize| -> Vec<(Cochain, Cochain)> {
        complex
            .cells(d)
            .iter()
            .map(|c| {
                let u = Cochain::dual(&complex, c).unwrap();
                let du = coboundary(&complex, &u).unwrap();
                (u, du)
            })
            .collect()
    };
    let (vertices, edges) = (duals(0), duals(1));
    for (c, (a, _)) in complex.cells(1).iter().zip(&edges) {
        assert_eq!(cup_cochains(&complex, a, &unit).unwrap(), *a);
        assert_eq!(cup_cochains(&complex, &unit, a).unwrap(), *a);
        for (d, (b, _)) in complex.cells(1).iter().zip(&edges) {
            let prod = cup_cochains(&complex, a, b).unwrap();
            assert_eq!(prod.coeffs.count_ones(), usize::from(cup_cells(c, d).unwrap().is_some()));
        }
    }
    for (v, dv) in &vertices {
        for (a, da) in &edges {
            for (x, dx, y, dy) in [(v, dv, a, da), (a, da, v, dv)] {
                let lhs = coboundary(&complex, &cup_cochains(&complex, x, y).unwrap()).unwrap();
                let rhs = cup_cochains(&complex, dx, y).unwrap().add(&cup_cochains(&complex, x, dy).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn products_of_cocycles_are_cocycles() {
    let ring = CupRing::new(GroundParams::new(4).unwrap()).unwrap();
    let complex = ring.complex();
    let basis = ring.basis();
    for a in basis.cells(1) {
        for b in basis.cells(1) {
            let la = ring.lift(&CohomologyClass::of_cell(basis, a).unwrap()).unwrap();
            let lb = ring.lift(&CohomologyClass::of_cell(basis, b).unwrap()).unwrap();
            assert!(coboundary(complex, &la).unwrap().is_zero());
            let prod = cup_cochains(complex, &la, &lb).unwrap();
            assert!(coboundary(complex, &prod).unwrap().is_zero());
        }
    }
}

#[test]
fn generator_products_match_closed_forms() {
    for n in [4, 5] {
        let ring = CupRing::new(GroundParams::new(n).unwrap()).unwrap();
        let gens = ring.basis().one_cells_by_label();
        for j in 0..=n {
            for set in subsets(n, j) {
                let cells: Vec<CCell> = set.iter().map(|&i| gens[i]).collect();
                let formula = product_of_1cells(ring.basis(), &cells).unwrap();
                assert_eq!(ring.product_of_cells(&cells).unwrap(), formula, "n={n} {set:?}");
            }
        }
        for a in &gens {
            for b in &gens {
                let (ca, cb) = (
                    CohomologyClass::of_cell(ring.basis(), a).unwrap(),
                    CohomologyClass::of_cell(ring.basis(), b).unwrap(),
                );
                assert_eq!(ring.morse_cup_checked(&ca, &cb).unwrap(), ring.morse_cup(&ca, &cb).unwrap());
            }
        }
    }
}

#[test]
fn self_products_vanish_in_positive_degree() {
    for n in [3, 4, 5] {
        let ring = CupRing::new(GroundParams::new(n).unwrap()).unwrap();
        let basis = ring.basis();
        for d in 1..=basis.max_dim() {
            for cell in basis.cells(d) {
                let a = CohomologyClass::of_cell(basis, cell).unwrap();
                assert!(ring.morse_cup_checked(&a, &a).unwrap().is_zero(), "{cell}");
            }
        }
        let unit = CohomologyClass::unit(basis);
        assert_eq!(ring.morse_cup(&unit, &unit).unwrap(), unit);
    }
}

#[test]
fn ring_table_laws() {
    for n in [4, 5] {
        let ring = CupRing::new(GroundParams::new(n).unwrap()).unwrap();
        let table = ring.ring_table().unwrap();
        let basis = table.basis();
        let all: Vec<CCell> = (0..=basis.max_dim()).flat_map(|d| basis.cells(d).to_vec()).collect();
        for a in &all {
            for b in &all {
                match (table.get(a, b), table.get(b, a)) {
                    (Some(x), Some(y)) => assert_eq!(x, y),
                    (None, None) => assert!(a.dim() + b.dim() > basis.max_dim()),
                    _ => panic!("asymmetric table"),
                }
            }
            let class = CohomologyClass::of_cell(basis, a).unwrap();
            assert_eq!(table.multiply(&class, &CohomologyClass::unit(basis)), class);
        }
        for a in basis.cells(1) {
            for b in basis.cells(1) {
                for c in basis.cells(1).iter().chain(basis.cells(basis.max_dim().saturating_sub(2).max(1))) {
                    let [x, y, z] = [a, b, c].map(|k| CohomologyClass::of_cell(basis, k).unwrap());
                    if x.degree + y.degree + z.degree > basis.max_dim() {
                        continue;
                    }
                    let left = table.multiply(&table.multiply(&x, &y), &z);
                    let right = table.multiply(&x, &table.multiply(&y, &z));
                    assert_eq!(left, right);
                }
            }
        }
    }
}

#[test]
fn products_of_two_generators_hit_each_cell_once_n5() {
    let ring = CupRing::new(GroundParams::new(5).unwrap()).unwrap();
    let table = ring.ring_table().unwrap();
    let basis = table.basis();
    let gens = basis.cells(1);
    let mut hits: HashMap<CCell, usize> = HashMap::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            for cell in table.get(a, b).unwrap().cells(basis) {
                *hits.entry(cell).or_default() += 1;
            }
        }
    }
    for cell in basis.cells(2) {
        if cell.y(3).is_empty() {
            assert_eq!(hits.get(cell), Some(&1), "{cell}");
        }
    }
}

#[test]
fn factorization_round_trip() {
    for n in [4, 5] {
        let ring = CupRing::new(GroundParams::new(n).unwrap()).unwrap();
        let basis = ring.basis();
        let mut seen = HashMap::new();
        for d in 0..=basis.max_dim() {
            for cell in basis.cells(d) {
                match factorize(basis, cell) {
                    Ok(factors) => {
                        assert!(cell.y(3).is_empty());
                        let product = product_of_1cells(basis, &factors).unwrap();
                        assert!(product.cells(basis).contains(cell));
                        if d < basis.max_dim() {
                            assert_eq!(product.cells(basis), vec![*cell]);
                            assert!(seen.insert(factors, *cell).is_none(), "factorization not injective");
                        }
                    }
                    Err(_) => assert!(d == basis.max_dim() && !cell.y(3).is_empty()),
                }
            }
        }
    }
}

#[test]
fn oracle_matches_critical_basis() {
    for n in [3, 4, 5] {
        let params = GroundParams::new(n).unwrap();
        let report = betti_oracle(params, true).unwrap();
        let ring = CupRing::new(params).unwrap();
        assert_eq!(report.betti, ring.basis().counts());
        let expected_chi = (-2i64).pow(n as u32) - 2 * (-1i64).pow(n as u32);
        assert_eq!(report.euler_characteristic, expected_chi);
        let complex = ring.complex();
        for d in 0..=params.max_dim() {
            // Both families, together with the coboundaries, span the same space.
            let mut image = EchelonBasis::new(complex.len(d), 0);
            if d > 0 {
                for col in complex.coboundary_matrix(d - 1).unwrap().transpose().into_rows() {
                    image.insert(col, GF2Vector::zeros(0));
                }
            }
            let base = image.rank();
            let mut with_lifts = image.clone();
            for lift in ring.morse().lifts(d) {
                assert!(with_lifts.insert(lift, GF2Vector::zeros(0)));
            }
            for rep in &report.representatives[d] {
                assert!(with_lifts.contains(rep));
                assert!(image.insert(rep.clone(), GF2Vector::zeros(0)));
            }
            assert_eq!(image.rank() - base, report.betti[d]);
        }
    }
}

#[test]
fn oracle_n6_betti() {
    let report = betti_oracle(GroundParams::new(6).unwrap(), false).unwrap();
    assert_eq!(report.betti, vec![1, 6, 15, 20, 72]);
    assert_eq!(report.euler_characteristic, 62);
}

#[test]
fn cells_in_class_output_are_sorted() {
    let ring = CupRing::new(GroundParams::new(5).unwrap()).unwrap();
    let gens = ring.basis().one_cells_by_label();
    let class = product_of_1cells(ring.basis(), &gens[..3]).unwrap();
    let ids = class.ids(ring.basis());
    assert!(ids.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(ids.len(), 2);
    assert!(class.cells(ring.basis()).iter().all(|c| c.encode() > 0));
}
