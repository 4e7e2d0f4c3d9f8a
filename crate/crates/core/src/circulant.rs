//! Exhaustive search over circulant graph codes and the list of named
//! circulant codes with their weight enumerators.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::code::graph_code;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::WeightedGraph;
use crate::weights::{self, WeightEnumerator};

/// Default ceiling on the number of first rows searched.
pub const DEFAULT_CIRCULANT_BUDGET: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantResult {
    pub m: u8,
    pub n: usize,
    /// Highest minimum distance found, 0 when no connected circulant exists
    /// above the floor.
    pub best_d: usize,
    /// First rows (length `n − 1`, palindromic) reaching `best_d`, in
    /// lexicographic order of their free half.
    pub witnesses: Vec<Vec<u8>>,
    /// One enumerator per witness, filled by [`CirculantResult::with_enumerators`].
    pub enumerators: Vec<WeightEnumerator>,
}

impl CirculantResult {
    /// Computes the weight enumerator of every witness when `m^n ≤ cap`.
    pub fn with_enumerators(mut self, cap: u128, exec: Exec) -> Result<Self> {
        if (self.m as u128).pow(self.n as u32) > cap {
            return Ok(self);
        }
        self.enumerators = self
            .witnesses
            .iter()
            .map(|row| {
                let g = WeightedGraph::circulant(self.m, row)?;
                weights::weight_enumerator(&graph_code(&g), cap, exec)
            })
            .collect::<Result<_>>()?;
        Ok(self)
    }
}

/// Number of free symbols in a palindromic first row of length `n − 1`.
pub fn free_half(n: usize) -> usize {
    n.saturating_sub(1).div_ceil(2)
}

/// The `k`-th palindromic first row, free half in lexicographic order.
pub fn circulant_row(m: u8, n: usize, mut k: u64) -> Vec<u8> {
    let len = n - 1;
    let h = free_half(n);
    let mut row = vec![0u8; len];
    for j in (0..h).rev() {
        let w = (k % m as u64) as u8;
        k /= m as u64;
        row[j] = w;
        row[len - 1 - j] = w;
    }
    row
}

/// Searches all `m^⌈(n−1)/2⌉` circulant graphs on `n` vertices for the
/// highest minimum distance, skipping disconnected graphs. Rows below
/// `d_floor` are discarded early.
pub fn search_circulant(m: u8, n: usize, d_floor: Option<usize>, budget: u128, exec: Exec) -> Result<CirculantResult> {
    if n < 2 {
        return Err(Error::InvalidGraph("circulant search needs n ≥ 2".into()));
    }
    if n > crate::packed::MAX_LEN {
        return Err(Error::InvalidGraph(format!("lengths above {} are not supported", crate::packed::MAX_LEN)));
    }
    crate::field::Field::standard(m)?;
    let total = (m as u128).pow(free_half(n) as u32);
    if total > budget {
        return Err(Error::BudgetExceeded { what: "circulant rows", needed: total, limit: budget });
    }
    let floor = d_floor.unwrap_or(0);
    let best = AtomicUsize::new(floor);
    let indices: Vec<u64> = (0..total as u64).collect();
    let found = exec.map(&indices, |&k| {
        let row = circulant_row(m, n, k);
        let g = WeightedGraph::circulant(m, &row).expect("palindromic by construction");
        if !g.is_connected() {
            return None;
        }
        let d = weights::circulant_min_distance_at_least(&g, best.load(Ordering::Relaxed), Exec::Sequential)?;
        best.fetch_max(d, Ordering::Relaxed);
        Some(d)
    });
    let best_d = found.iter().flatten().copied().max().unwrap_or(0);
    let witnesses = indices
        .iter()
        .zip(&found)
        .filter(|(_, d)| best_d > 0 && **d == Some(best_d))
        .map(|(&k, _)| circulant_row(m, n, k))
        .collect();
    Ok(CirculantResult { m, n, best_d, witnesses, enumerators: Vec::new() })
}

/// Parses a first row written with digits and, for `m = 4`, the symbols
/// `α`/`a` (for `ω⁵`) and `α²`/`α^2`/`b` (for `ω¹⁰`).
pub fn parse_row(m: u8, text: &str) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        let w = match c {
            '0'..='9' => c as u8 - b'0',
            'α' | 'a' if m == 4 => match chars.peek() {
                Some('²') => {
                    chars.next();
                    3
                }
                Some('^') => {
                    chars.next();
                    match chars.next() {
                        Some('2') => 3,
                        _ => return Err(Error::InvalidGraph(format!("bad exponent in row {text:?}"))),
                    }
                }
                _ => 2,
            },
            'b' if m == 4 => 3,
            c if c.is_whitespace() => continue,
            other => return Err(Error::InvalidGraph(format!("unexpected symbol {other:?} in row {text:?}"))),
        };
        if w >= m {
            return Err(Error::InvalidGraph(format!("weight {w} outside F_{m} in row {text:?}")));
        }
        out.push(w);
    }
    Ok(out)
}

/// A circulant code printed with its parameters: first row and, when
/// given, the weight enumerator as `(weight, count)` terms.
#[derive(Clone, Copy, Debug)]
pub struct ListedCode {
    pub m: u8,
    pub n: usize,
    pub d: usize,
    pub row: &'static str,
    pub enumerator: Option<&'static [(usize, u64)]>,
}

const W_6_3: &[(usize, u64)] = &[(0, 1), (4, 120), (5, 240), (6, 368)];
const W_7_3: &[(usize, u64)] = &[(0, 1), (4, 70), (5, 336), (6, 812), (7, 968)];
const W_6_4: &[(usize, u64)] = &[(0, 1), (4, 225), (5, 1080), (6, 2790)];
const W_6_5: &[(usize, u64)] = &[(0, 1), (4, 360), (5, 3024), (6, 12240)];

/// Every circulant code given by first row, in order of appearance.
pub const LISTED_CODES: &[ListedCode] = &[
    ListedCode { m: 3, n: 6, d: 4, row: "01110", enumerator: Some(W_6_3) },
    ListedCode { m: 3, n: 7, d: 4, row: "110011", enumerator: Some(W_7_3) },
    ListedCode { m: 3, n: 7, d: 4, row: "022220", enumerator: Some(W_7_3) },
    ListedCode {
        m: 3,
        n: 10,
        d: 6,
        row: "012111210",
        enumerator: Some(&[(0, 1), (6, 1680), (7, 2880), (8, 14040), (9, 22160), (10, 18288)]),
    },
    ListedCode { m: 4, n: 6, d: 4, row: "01110", enumerator: Some(W_6_4) },
    ListedCode { m: 4, n: 6, d: 4, row: "01α10", enumerator: Some(W_6_4) },
    ListedCode { m: 4, n: 6, d: 4, row: "01α²10", enumerator: Some(W_6_4) },
    ListedCode { m: 5, n: 6, d: 4, row: "01110", enumerator: Some(W_6_5) },
    ListedCode { m: 5, n: 6, d: 4, row: "01210", enumerator: Some(W_6_5) },
    ListedCode { m: 5, n: 6, d: 4, row: "02220", enumerator: Some(W_6_5) },
    ListedCode { m: 5, n: 6, d: 4, row: "10201", enumerator: Some(W_6_5) },
    ListedCode { m: 5, n: 6, d: 4, row: "12221", enumerator: Some(W_6_5) },
    ListedCode {
        m: 4,
        n: 7,
        d: 4,
        row: "11αα11",
        enumerator: Some(&[(0, 1), (4, 105), (5, 1008), (6, 4830), (7, 10440)]),
    },
    ListedCode {
        m: 4,
        n: 9,
        d: 5,
        row: "001αα100",
        enumerator: Some(&[(0, 1), (5, 378), (6, 3780), (7, 23220), (8, 88155), (9, 146610)]),
    },
    ListedCode {
        m: 4,
        n: 10,
        d: 6,
        row: "010α1α010",
        enumerator: Some(&[(0, 1), (6, 3150), (7, 18000), (8, 111375), (9, 366000), (10, 550050)]),
    },
    ListedCode {
        m: 4,
        n: 11,
        d: 6,
        row: "00α1111α00",
        enumerator: Some(&[(0, 1), (6, 1386), (7, 13860), (8, 99495), (9, 505560), (10, 1511598), (11, 2062404)]),
    },
    ListedCode {
        m: 5,
        n: 7,
        d: 4,
        row: "011110",
        enumerator: Some(&[(0, 1), (4, 140), (5, 2184), (6, 17080), (7, 58720)]),
    },
    ListedCode {
        m: 5,
        n: 9,
        d: 5,
        row: "00211200",
        enumerator: Some(&[(0, 1), (5, 504), (6, 8400), (7, 84240), (8, 507420), (9, 1352560)]),
    },
    ListedCode {
        m: 5,
        n: 10,
        d: 6,
        row: "001222100",
        enumerator: Some(&[(0, 1), (6, 5040), (7, 54720), (8, 508680), (9, 2704560), (10, 6492624)]),
    },
    ListedCode {
        m: 5,
        n: 11,
        d: 6,
        row: "0012222100",
        enumerator: Some(&[
            (0, 1),
            (6, 1848),
            (7, 31680),
            (8, 370260),
            (9, 2977480),
            (10, 14282664),
            (11, 31164192),
        ]),
    },
    ListedCode {
        m: 5,
        n: 13,
        d: 7,
        row: "010011110010",
        enumerator: Some(&[
            (0, 1),
            (7, 6864),
            (8, 118404),
            (9, 1538680),
            (10, 14867424),
            (11, 97222320),
            (12, 388930776),
            (13, 718018656),
        ]),
    },
    ListedCode {
        m: 5,
        n: 14,
        d: 8,
        row: "1011331331101",
        enumerator: Some(&[
            (0, 1),
            (8, 72072),
            (9, 816816),
            (10, 10474464),
            (11, 90679680),
            (12, 544536720),
            (13, 2010441888),
            (14, 3446493984),
        ]),
    },
    ListedCode { m: 5, n: 14, d: 8, row: "1221202021221", enumerator: None },
    ListedCode {
        m: 5,
        n: 17,
        d: 9,
        row: "0010111001110100",
        enumerator: Some(&[
            (0, 1),
            (9, 97240),
            (10, 1633632),
            (11, 24504480),
            (12, 296652720),
            (13, 2733620400),
            (14, 18749403360),
            (15, 89994568992),
            (16, 269984494620),
            (17, 381154477680),
        ]),
    },
    ListedCode {
        m: 5,
        n: 18,
        d: 10,
        row: "12134242124243121",
        enumerator: Some(&[
            (0, 1),
            (10, 1050192),
            (11, 11456640),
            (12, 180442080),
            (13, 1964813760),
            (14, 16877613600),
            (15, 107991522432),
            (16, 485972877960),
            (17, 1372155934320),
            (18, 1829541554640),
        ]),
    },
];

/// Outcome of recomputing one listed code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListedCheck {
    pub code: ListedCode,
    pub computed_d: usize,
    /// Present when `m^n` is within the enumeration cap.
    pub computed_enumerator: Option<WeightEnumerator>,
    pub ok: bool,
}

impl PartialEq for ListedCode {
    fn eq(&self, other: &Self) -> bool {
        (self.m, self.n, self.row) == (other.m, other.n, other.row)
    }
}

impl Eq for ListedCode {}

impl ListedCode {
    pub fn graph(&self) -> Result<WeightedGraph> {
        WeightedGraph::circulant(self.m, &parse_row(self.m, self.row)?)
    }

    pub fn expected_enumerator(&self) -> Option<WeightEnumerator> {
        self.enumerator.map(|terms| WeightEnumerator::from_terms(self.n, terms))
    }
}

/// Recomputes the minimum distance of each code and, when `m^n ≤ cap`, its
/// weight enumerator, comparing both against the listed values.
pub fn verify_codes(codes: &[ListedCode], cap: u128, exec: Exec) -> Result<Vec<ListedCheck>> {
    codes
        .iter()
        .map(|&code| {
            let g = code.graph()?;
            if g.n() != code.n {
                return Err(Error::InvalidGraph(format!("row {:?} has the wrong length", code.row)));
            }
            let computed_d = weights::min_distance(&g, exec);
            let computed_enumerator = if (code.m as u128).pow(code.n as u32) <= cap {
                Some(weights::weight_enumerator(&graph_code(&g), cap, exec)?)
            } else {
                None
            };
            let enum_ok = match (&computed_enumerator, code.expected_enumerator()) {
                (Some(have), Some(want)) => *have == want,
                _ => true,
            };
            Ok(ListedCheck { code, computed_d, computed_enumerator, ok: enum_ok && computed_d == code.d })
        })
        .collect()
}

/// [`verify_codes`] over [`LISTED_CODES`].
pub fn verify_listed_codes(cap: u128, exec: Exec) -> Result<Vec<ListedCheck>> {
    verify_codes(LISTED_CODES, cap, exec)
}

/// Highest minimum distance of circulant graph codes, by `(m, n)`, with
/// `None` for cells reached by other constructions or left empty.
pub fn table_best_distance(m: u8, n: usize) -> Option<usize> {
    const M2: [usize; 29] = [2, 2, 2, 3, 4, 3, 4, 4, 4, 0, 6, 5, 6, 6, 6, 7, 0, 7, 8, 0, 8, 8, 8, 8, 8, 0, 10, 11, 12];
    const M3: [usize; 23] = [2, 2, 0, 3, 4, 4, 4, 0, 6, 5, 6, 6, 6, 6, 6, 7, 8, 8, 8, 8, 9, 9, 9];
    const M4: [usize; 17] = [2, 2, 0, 3, 4, 4, 4, 5, 6, 6, 6, 6, 7, 7, 8, 8, 8];
    const M5: [usize; 17] = [2, 2, 0, 3, 4, 4, 4, 5, 6, 6, 6, 7, 8, 7, 8, 9, 10];
    let col: &[usize] = match m {
        2 => &M2,
        3 => &M3,
        4 => &M4,
        5 => &M5,
        _ => return None,
    };
    n.checked_sub(2).and_then(|i| col.get(i)).copied().filter(|&d| d > 0)
}
