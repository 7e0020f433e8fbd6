use serde::{Deserialize, Serialize};

use crate::cubical::{CCell, Cell, OmegaCell};
use crate::mask::SubsetMask;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StatusKind {
    Critical,
    /// Paired with a coface (`W(σ)` exists).
    Redundant,
    /// Paired with a face (`σ = W(τ)`).
    Collapsible,
}

/// Classification of one cell under a discrete vector field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStatus<C> {
    pub kind: StatusKind,
    /// Coface for redundant cells, face for collapsible ones.
    pub partner: Option<C>,
}

impl<C> CellStatus<C> {
    pub fn critical() -> Self {
        CellStatus { kind: StatusKind::Critical, partner: None }
    }

    pub fn redundant(partner: C) -> Self {
        CellStatus { kind: StatusKind::Redundant, partner: Some(partner) }
    }

    pub fn collapsible(partner: C) -> Self {
        CellStatus { kind: StatusKind::Collapsible, partner: Some(partner) }
    }

    pub fn is_critical(&self) -> bool {
        self.kind == StatusKind::Critical
    }
}

/// A discrete vector field given cell by cell.
pub trait VectorField: Send + Sync {
    type Cell: Cell;

    fn classify(&self, cell: &Self::Cell) -> CellStatus<Self::Cell>;

    fn name(&self) -> &'static str;
}

/// One step of Kozlov's matching on the blocks `(A, B, C, D)`: which element
/// moves, and between which blocks (0 = A, 1 = B, 2 = C).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct KozlovMove {
    kind: StatusKind,
    element: usize,
    from: usize,
    to: usize,
}

/// With `α = min(A ∪ B)` and `β = max(B ∪ C)`: pair through `α` (between
/// A and B) when possible, otherwise through `β` (between B and C) when
/// `A = {α}`.
fn kozlov_move(a: SubsetMask, b: SubsetMask, c: SubsetMask) -> Option<KozlovMove> {
    let alpha = (a | b).min().expect("A is nonempty");
    let beta = (b | c).max().expect("C is nonempty");
    let mv = |kind, element, from, to| Some(KozlovMove { kind, element, from, to });
    if b.contains(alpha) {
        mv(StatusKind::Collapsible, alpha, 1, 0)
    } else if a.len() >= 2 {
        mv(StatusKind::Redundant, alpha, 0, 1)
    } else if b.contains(beta) {
        mv(StatusKind::Collapsible, beta, 1, 2)
    } else if c.len() >= 2 && beta > alpha {
        mv(StatusKind::Redundant, beta, 2, 1)
    } else {
        None
    }
}

/// Kozlov's gradient field `M` on `Ω_n`.
pub fn classify_m(cell: &OmegaCell) -> CellStatus<OmegaCell> {
    match kozlov_move(cell.a(), cell.b(), cell.c()) {
        None => CellStatus::critical(),
        Some(m) => {
            let mut blocks = [cell.a(), cell.b(), cell.c(), cell.d()];
            blocks[m.from] = blocks[m.from].without(m.element);
            blocks[m.to] = blocks[m.to].with(m.element);
            let partner = OmegaCell::from_blocks_unchecked(cell.n(), &blocks);
            CellStatus { kind: m.kind, partner: Some(partner) }
        }
    }
}

/// The field `W` on `CΩ_n`: pair through `α_1 = min(x1 ∪ y1)`, else through
/// `α_2 = min(x2 ∪ y2)`, else apply `M` to `(x3, y3, x4, y4)`.
pub fn classify_w(cell: &CCell) -> CellStatus<CCell> {
    for i in 1..=2 {
        let (x, y) = (cell.x(i), cell.y(i));
        if let Some(alpha) = (x | y).min() {
            let (xb, yb) = (2 * (i - 1), 2 * (i - 1) + 1);
            return if x.contains(alpha) {
                CellStatus::redundant(cell.moved(alpha, xb, yb))
            } else {
                CellStatus::collapsible(cell.moved(alpha, yb, xb))
            };
        }
    }
    match kozlov_move(cell.x(3), cell.y(3), cell.x(4)) {
        None => CellStatus::critical(),
        Some(m) => CellStatus { kind: m.kind, partner: Some(cell.moved(m.element, 4 + m.from, 4 + m.to)) },
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KozlovField;

impl VectorField for KozlovField {
    type Cell = OmegaCell;

    fn classify(&self, cell: &OmegaCell) -> CellStatus<OmegaCell> {
        classify_m(cell)
    }

    fn name(&self) -> &'static str {
        "M"
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WField;

impl VectorField for WField {
    type Cell = CCell;

    fn classify(&self, cell: &CCell) -> CellStatus<CCell> {
        classify_w(cell)
    }

    fn name(&self) -> &'static str {
        "W"
    }
}

/// `α_i = min(x_i ∪ y_i)` for `i = 1, 2, 3` and `β = max(y3 ∪ x4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaBeta {
    pub alpha: [Option<usize>; 3],
    pub beta: Option<usize>,
}

pub fn alpha_beta(cell: &CCell) -> AlphaBeta {
    AlphaBeta {
        alpha: [1, 2, 3].map(|i| (cell.x(i) | cell.y(i)).min()),
        beta: (cell.y(3) | cell.x(4)).max(),
    }
}

/// Membership in `C1 ∪ C2 ∪ C3`, evaluated from the three defining
/// conditions rather than from the matching.
pub fn is_kozlov_critical(cell: &OmegaCell) -> bool {
    let (a, b, c) = (cell.a(), cell.b(), cell.c());
    let alpha = (a | b).min().expect("A is nonempty");
    let beta = (b | c).max().expect("C is nonempty");
    let a_is_alpha = a == SubsetMask::singleton(alpha);
    let c_is_beta = c == SubsetMask::singleton(beta);
    let c1 = a_is_alpha && b.is_empty() && c.len() >= 2 && beta < alpha;
    let c2 = a_is_alpha && b.is_empty() && c_is_beta;
    let c3 = a_is_alpha
        && !b.is_empty()
        && c_is_beta
        && b.iter().all(|e| alpha < e && e < beta);
    c1 || c2 || c3
}
