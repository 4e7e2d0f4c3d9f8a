//! Regression checks against the published tables.

use std::collections::BTreeMap;

use sdcodes::circulant::{self, DEFAULT_CIRCULANT_BUDGET};
use sdcodes::{classify_up_to, euler_transform, lengthen_search};

use crate::{Ctx, Failure};

/// `i_n` for `n = 1, 2, …`.
const I_COUNTS: [(u8, &[u128]); 4] = [
    (2, &[1, 1, 1, 2, 4, 11, 26, 101, 440, 3132]),
    (3, &[1, 1, 1, 3, 5, 21, 73, 659]),
    (4, &[1, 1, 1, 3, 6, 25]),
    (5, &[1, 1, 1, 3, 7, 38]),
];

/// `t_n` for `n = 1, 2, …` where known.
const T_COUNTS: [(u8, &[u128]); 4] = [
    (2, &[1, 2, 3, 6, 11, 26, 59, 182, 675, 3990, 45144, 1323363]),
    (3, &[1, 2, 3, 7, 13, 39, 121, 817]),
    (4, &[1, 2, 3, 7, 14, 44]),
    (5, &[1, 2, 3, 7, 15, 58]),
];

/// `(m, n, [(d, count)])`.
type DistanceCell = (u8, usize, &'static [(usize, usize)]);

/// Counts by `(m, n)` and minimum distance.
const DISTANCES: [DistanceCell; 11] = [
    (3, 4, &[(2, 2), (3, 1)]),
    (3, 5, &[(2, 4), (3, 1)]),
    (3, 6, &[(2, 15), (3, 5), (4, 1)]),
    (3, 7, &[(2, 51), (3, 20), (4, 2)]),
    (3, 8, &[(2, 388), (3, 194), (4, 77)]),
    (4, 4, &[(2, 2), (3, 1)]),
    (4, 5, &[(2, 4), (3, 2)]),
    (4, 6, &[(2, 16), (3, 6), (4, 3)]),
    (5, 4, &[(2, 2), (3, 1)]),
    (5, 5, &[(2, 4), (3, 3)]),
    (5, 6, &[(2, 21), (3, 11), (4, 6)]),
];

fn line(report: &mut bool, pass: bool, name: String, detail: String) {
    println!("{}\t{name}\t{detail}", if pass { "PASS" } else { "FAIL" });
    *report &= pass;
}

/// Runs the suite, printing one PASS/FAIL line per check. Returns whether
/// everything passed.
pub fn run(ctx: &Ctx, long: bool) -> Result<bool, Failure> {
    let mut ok = true;
    let opts = ctx.options(false);
    for (m, counts) in I_COUNTS {
        let limit = match (m, long) {
            (2, false) => 9,
            (3, false) => 7,
            (3, true) => 8,
            _ => counts.len(),
        };
        let expected = &counts[..limit.min(counts.len())];
        let dbs = classify_up_to(m, expected.len(), &opts)?;
        let got: Vec<u128> = dbs.iter().map(|d| d.i_count() as u128).collect();
        line(&mut ok, got == expected, format!("orbits m={m}"), format!("i_n = {got:?}"));

        let totals = euler_transform(&got)?.t_list;
        let (_, t_known) = T_COUNTS.iter().find(|(tm, _)| *tm == m).expect("every alphabet listed");
        let k = totals.len().min(t_known.len());
        line(&mut ok, totals[..k] == t_known[..k], format!("totals m={m}"), format!("t_n = {:?}", &totals[..k]));

        for db in &dbs {
            if let Some((_, _, want)) = DISTANCES.iter().find(|(dm, dn, _)| *dm == m && *dn == db.n) {
                let want: BTreeMap<usize, usize> = want.iter().copied().collect();
                let have = db.distance_counts();
                line(&mut ok, have == want, format!("distances m={m} n={}", db.n), format!("{have:?}"));
            }
        }

        if m == 3 && long {
            let eight = dbs.last().expect("n = 8");
            let nine = lengthen_search(eight, 5, &opts)?;
            line(&mut ok, nine.i_count() == 4, "mds (9,3^9,5)".into(), format!("{} codes", nine.i_count()));
            let ten = lengthen_search(&nine, 6, &opts)?;
            line(&mut ok, ten.i_count() == 1, "mds (10,3^10,6)".into(), format!("{} codes", ten.i_count()));
        }
    }

    let max_n = if long { 18 } else { 14 };
    let listed: Vec<_> = circulant::LISTED_CODES.iter().copied().filter(|c| c.n <= max_n).collect();
    for check in circulant::verify_codes(&listed, ctx.enum_cap, ctx.exec)? {
        let c = check.code;
        line(&mut ok, check.ok, format!("listed ({},{}^{},{}) {}", c.n, c.m, c.n, c.d, c.row), format!("d = {}", check.computed_d));
    }

    let free_limit: u128 = if long { 60_000 } else { 20_000 };
    for m in 2u8..=5 {
        for n in 2..=30 {
            let Some(want) = circulant::table_best_distance(m, n) else { continue };
            if (m as u128).pow(circulant::free_half(n) as u32) > free_limit {
                continue;
            }
            let r = circulant::search_circulant(m, n, None, DEFAULT_CIRCULANT_BUDGET, ctx.exec)?;
            line(&mut ok, r.best_d == want, format!("circulant m={m} n={n}"), format!("best d = {}", r.best_d));
        }
    }
    Ok(ok)
}
