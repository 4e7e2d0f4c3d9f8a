//! Counting identities: the Euler transform from indecomposable to total
//! class counts, the mass formula and brute-force automorphism groups.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::classify::OrbitDatabase;
use crate::code::AdditiveCode;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::WeightedGraph;

/// `i_n`, the intermediate `c_n = Σ_{d|n} d·i_d`, and `t_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub i_list: Vec<u128>,
    pub c_list: Vec<u128>,
    pub t_list: Vec<u128>,
}

/// Euler transform of `i_1, i_2, …` (index 0 is length 1).
pub fn euler_transform(i_list: &[u128]) -> Result<CountTable> {
    let len = i_list.len();
    let c_list: Vec<u128> =
        (1..=len).map(|n| (1..=n).filter(|d| n % d == 0).map(|d| d as u128 * i_list[d - 1]).sum()).collect();
    let mut t_list: Vec<u128> = Vec::with_capacity(len);
    for n in 1..=len {
        let mut s = c_list[n - 1];
        for k in 1..n {
            s += c_list[k - 1] * t_list[n - k - 1];
        }
        if !s.is_multiple_of(n as u128) {
            return Err(Error::InexactDivision(n));
        }
        t_list.push(s / n as u128);
    }
    Ok(CountTable { i_list: i_list.to_vec(), c_list, t_list })
}

/// `|Sp_2(m)| = m³ − m`.
pub fn sp2_order(m: u8) -> u64 {
    let m = m as u64;
    m * m * m - m
}

/// Number of distinct self-dual codes of length `n`: `Π_{i=1}^n (m^i + 1)`.
pub fn mass_total(m: u8, n: usize) -> BigUint {
    (1..=n as u32).fold(BigUint::from(1u32), |acc, i| acc * (BigUint::from(m).pow(i) + 1u32))
}

/// `⌈c·T_n / (|Sp_2(m)|^n n!)⌉` with `c = 1` for even `m` and `2` for odd `m`.
pub fn mass_lower_bound(m: u8, n: usize) -> BigUint {
    let c = if m.is_multiple_of(2) { 1u32 } else { 2 };
    let num = mass_total(m, n) * c;
    let den = BigUint::from(sp2_order(m)).pow(n as u32) * (1..=n as u64).product::<u64>().max(1);
    (num + &den - 1u32) / den
}

/// Every class of length `n` (connected or not) as a disjoint union of
/// connected representatives, given complete databases for lengths `1..=n`.
pub fn all_class_representatives(dbs: &[OrbitDatabase], n: usize) -> Result<Vec<WeightedGraph>> {
    let pieces: Vec<&WeightedGraph> = dbs
        .iter()
        .filter(|db| db.n <= n)
        .flat_map(|db| {
            if !db.complete || db.min_d.is_some() {
                return Vec::new();
            }
            db.reps.iter().map(|r| &r.graph).collect()
        })
        .collect();
    for len in 1..=n {
        if !dbs.iter().any(|db| db.n == len && db.complete && db.min_d.is_none()) {
            return Err(Error::IncompleteDatabase(format!("no complete database for length {len}")));
        }
    }
    let mut out = Vec::new();
    fn rec(
        pieces: &[&WeightedGraph],
        from: usize,
        remaining: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<WeightedGraph>,
    ) {
        if remaining == 0 {
            let mut g = pieces[chosen[0]].clone();
            for &c in &chosen[1..] {
                g = g.disjoint_union(pieces[c]).expect("same alphabet");
            }
            out.push(g);
            return;
        }
        for i in from..pieces.len() {
            if pieces[i].n() <= remaining {
                chosen.push(i);
                rec(pieces, i, remaining - pieces[i].n(), chosen, out);
                chosen.pop();
            }
        }
    }
    rec(&pieces, 0, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// The elements of `SL_2(m) = Sp_2(m)` as `[[p, q], [r, s]]`.
pub fn sp2_elements(f: &Field) -> Vec<[u8; 4]> {
    let m = f.m();
    let mut out = Vec::new();
    for p in 0..m {
        for q in 0..m {
            for r in 0..m {
                for s in 0..m {
                    if f.sub(f.mul(p, s), f.mul(q, r)) == 1 {
                        out.push([p, q, r, s]);
                    }
                }
            }
        }
    }
    out
}

fn codewords(code: &AdditiveCode) -> (Vec<Vec<(u8, u8)>>, HashSet<Vec<(u8, u8)>>) {
    let s = code.stabilizer_parts();
    let f = code.field();
    let n = code.n();
    let m = code.m();
    let rows: Vec<Vec<(u8, u8)>> = (0..n).map(|i| (0..n).map(|j| (s.a()[i][j], s.b()[i][j])).collect()).collect();
    let mut words = HashSet::new();
    let mut coeff = vec![0u8; n];
    loop {
        let mut w = vec![(0u8, 0u8); n];
        for (i, &c) in coeff.iter().enumerate() {
            for (x, &(a, b)) in w.iter_mut().zip(&rows[i]) {
                x.0 = f.add(x.0, f.mul(c, a));
                x.1 = f.add(x.1, f.mul(c, b));
            }
        }
        words.insert(w);
        let mut i = 0;
        while i < n && coeff[i] == m - 1 {
            coeff[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        coeff[i] += 1;
    }
    (rows, words)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Order of the automorphism group of `code` among maps that permute
/// coordinates and apply an `Sp_2(m)` element to each coordinate.
pub fn aut_order_bruteforce(code: &AdditiveCode, budget: u128) -> Result<u64> {
    let f = code.field();
    let n = code.n();
    let group = sp2_elements(f);
    let maps = (group.len() as u128).pow(n as u32) * (1..=n as u128).product::<u128>();
    if maps > budget {
        return Err(Error::BudgetExceeded { what: "symplectic maps", needed: maps, limit: budget });
    }
    let (rows, words) = codewords(code);
    let mut count = 0u64;
    for perm in permutations(n) {
        // choice[j] indexes the matrix applied at coordinate j
        let mut choice = vec![0usize; n];
        loop {
            let fixes = rows.iter().all(|row| {
                let mut image = vec![(0u8, 0u8); n];
                for (j, &(a, b)) in row.iter().enumerate() {
                    let [p, q, r, s] = group[choice[j]];
                    image[perm[j]] = (f.add(f.mul(p, a), f.mul(q, b)), f.add(f.mul(r, a), f.mul(s, b)));
                }
                words.contains(&image)
            });
            count += u64::from(fixes);
            let mut j = 0;
            while j < n && choice[j] == group.len() - 1 {
                choice[j] = 0;
                j += 1;
            }
            if j == n {
                break;
            }
            choice[j] += 1;
        }
    }
    Ok(count)
}

/// Number of `n`-dimensional subspaces of `F_m^{2n}` on which the
/// symplectic form vanishes, by enumerating reduced echelon bases.
pub fn selfdual_count_oracle(m: u8, n: usize, budget: u128) -> Result<u128> {
    let f = Field::standard(m)?;
    let cols = 2 * n;
    let mut total = 0u128;
    let mut pivots: Vec<usize> = (0..n).collect();
    loop {
        // free entries: row i, columns after pivot i that are not pivots
        let free: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| {
                let p = pivots.clone();
                (p[i] + 1..cols).filter(move |c| !p.contains(c)).map(move |c| (i, c))
            })
            .collect();
        let combos = (m as u128).pow(free.len() as u32);
        if combos > budget {
            return Err(Error::BudgetExceeded { what: "echelon bases", needed: combos, limit: budget });
        }
        for code in 0..combos {
            let mut rows = vec![vec![0u8; cols]; n];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = 1;
            }
            let mut rest = code;
            for &(i, c) in &free {
                rows[i][c] = (rest % m as u128) as u8;
                rest /= m as u128;
            }
            let isotropic = (0..n).all(|i| (i + 1..n).all(|j| f.symplectic_form(&rows[i], &rows[j]) == Ok(0)));
            total += u128::from(isotropic);
        }
        // next pivot combination
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(total);
            }
            k -= 1;
            if pivots[k] < cols - n + k {
                break;
            }
        }
        pivots[k] += 1;
        for j in k + 1..n {
            pivots[j] = pivots[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::graph_code;

    fn t(i: &[u128]) -> Vec<u128> {
        euler_transform(i).unwrap().t_list
    }

    #[test]
    fn euler_examples() {
        assert_eq!(t(&[1, 1, 1, 2, 4, 11]), vec![1, 2, 3, 6, 11, 26]);
        assert_eq!(t(&[1, 1, 1, 3, 5, 21, 73, 659]), vec![1, 2, 3, 7, 13, 39, 121, 817]);
        assert_eq!(t(&[1]), vec![1]);
        assert_eq!(t(&[1, 2]), vec![1, 3]);
    }

    #[test]
    fn mass_examples() {
        assert_eq!(mass_total(2, 3), BigUint::from(135u32));
        assert_eq!(mass_total(3, 2), BigUint::from(40u32));
        assert_eq!(mass_total(2, 1), BigUint::from(3u32));
        assert_eq!(sp2_order(2), 6);
        assert_eq!(sp2_order(3), 24);
        assert_eq!(sp2_elements(Field::standard(4).unwrap()).len(), 60);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(selfdual_count_oracle(2, 1, 1 << 20).unwrap(), 3);
        assert_eq!(selfdual_count_oracle(2, 2, 1 << 20).unwrap(), 15);
        assert_eq!(selfdual_count_oracle(3, 2, 1 << 20).unwrap(), 40);
    }

    #[test]
    fn single_vertex_automorphisms() {
        let c = graph_code(&WeightedGraph::empty(2, 1).unwrap());
        assert_eq!(aut_order_bruteforce(&c, 1000).unwrap(), 2);
        let c3 = graph_code(&WeightedGraph::empty(3, 1).unwrap());
        assert!(aut_order_bruteforce(&c3, 1000).unwrap() >= 2);
    }
}
