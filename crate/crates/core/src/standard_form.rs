//! Reduction of a stabilizer matrix `(A | B)` to graph form `(Γ | I)` using
//! row operations and per-coordinate symplectic maps.

use std::fmt;

use crate::code::StabilizerMatrix;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::linalg;

/// One recorded step of the reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// Row reduction exposing a rank-`rank` block of `B`.
    RowReduce { rank: usize },
    /// Column `column` of `A` and `B` exchanged by `(a, b) ↦ (−b, a)`.
    Swap { column: usize },
    /// Left multiplication by `B⁻¹`.
    InvertB,
    /// `(a, b) ↦ (a − t·b, b)` on column `column`.
    Shear { column: usize, t: u8 },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::RowReduce { rank } => write!(f, "row-reduce rank(B)={rank}"),
            Step::Swap { column } => write!(f, "swap column {column} (a,b)->(-b,a)"),
            Step::InvertB => write!(f, "multiply by B^-1"),
            Step::Shear { column, t } => write!(f, "shear column {column} a->a-{t}b"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    pub graph: WeightedGraph,
    pub transcript: Vec<Step>,
}

/// Reduces a valid stabilizer matrix to `(Γ | I)` with zero diagonal. The
/// resulting graph code is equivalent to the code of `s`.
pub fn standard_form(s: &StabilizerMatrix) -> Result<StandardForm> {
    s.check_self_orthogonal()?;
    let rank = s.rank();
    let n = s.n();
    if rank < n {
        return Err(Error::RankDeficient { rank, n });
    }
    let f = s.field();
    let mut transcript = Vec::new();

    // Row-reduce on (B | A) so the nonzero rows of B come first.
    let mut ba: Vec<Vec<u8>> = (0..n)
        .map(|i| {
            let mut r = s.b()[i].clone();
            r.extend_from_slice(&s.a()[i]);
            r
        })
        .collect();
    let pivots = linalg::rref(f, &mut ba);
    let k = pivots.iter().take_while(|&&c| c < n).count();
    transcript.push(Step::RowReduce { rank: k });
    let mut a: Vec<Vec<u8>> = ba.iter().map(|r| r[n..].to_vec()).collect();
    let mut b: Vec<Vec<u8>> = ba.iter().map(|r| r[..n].to_vec()).collect();

    // Columns outside the pivot set of B1 get (a, b) ↦ (−b, a).
    let pivot_cols = &pivots[..k];
    for col in (0..n).filter(|c| !pivot_cols.contains(c)) {
        for i in 0..n {
            let (x, y) = (a[i][col], b[i][col]);
            a[i][col] = f.neg(y);
            b[i][col] = x;
        }
        transcript.push(Step::Swap { column: col });
    }

    let binv = linalg::inverse(f, &b).expect("B is invertible after the column swaps");
    let mut gamma = linalg::mat_mul(f, &binv, &a);
    transcript.push(Step::InvertB);

    for (i, row) in gamma.iter_mut().enumerate() {
        let t = row[i];
        if t != 0 {
            row[i] = 0;
            transcript.push(Step::Shear { column: i, t });
        }
    }
    let graph = WeightedGraph::from_rows(s.m(), &gamma)?;
    Ok(StandardForm { graph, transcript })
}
