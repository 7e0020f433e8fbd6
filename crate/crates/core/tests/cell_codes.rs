use anchored_core::cubical::{boundary, CCell, Cell, OmegaCell};
use proptest::prelude::*;

// Random digit strings: every code is valid once each anchor block gets an element.
fn digits(base: u8) -> impl Strategy<Value = (usize, Vec<u8>)> {
    (3usize..=10).prop_flat_map(move |n| (Just(n), prop::collection::vec(0..base, n)))
}

fn code(digits: &[u8], base: u64) -> u64 {
    digits.iter().rev().fold(0, |acc, &d| acc * base + d as u64)
}

fn round_trip<C: Cell + std::fmt::Display>(n: usize, digits: &[u8]) -> Result<(), TestCaseError> {
    let id = code(digits, C::LABELS.len() as u64);
    match C::decode(n, id) {
        Ok(cell) => {
            prop_assert_eq!(cell.encode(), id);
            prop_assert_eq!(C::parse(n, &cell.to_string()).unwrap(), cell);
            for face in boundary(&cell).cells::<C>(n).unwrap() {
                prop_assert_eq!(face.dim() + 1, cell.dim());
            }
        }
        Err(_) => {
            prop_assert!(C::ANCHORS.iter().any(|&a| !digits.contains(&(a as u8))));
        }
    }
    Ok(())
}

proptest! {
    #[test]
    fn omega_codes((n, d) in digits(4)) {
        round_trip::<OmegaCell>(n, &d)?;
    }

    #[test]
    fn comega_codes((n, d) in digits(8)) {
        round_trip::<CCell>(n, &d)?;
    }
}
