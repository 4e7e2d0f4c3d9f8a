//! Weight enumerators by Gray-code enumeration of all codewords, and exact
//! minimum distance of graph codes by row-subset search.

use std::fmt;
use std::str::FromStr;

use crate::code::AdditiveCode;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::Field;
use crate::graph::WeightedGraph;
use crate::packed::{self, Packer, MAX_LEN};

/// Default ceiling on the number of codewords enumerated.
pub const DEFAULT_ENUMERATION_CAP: u128 = 100_000_000;

const CHUNK: u64 = 1 << 16;

/// Coefficients `A_0, …, A_n` of `W(x, y) = Σ A_i x^{n−i} y^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    coeffs: Vec<u64>,
}

impl WeightEnumerator {
    pub fn new(coeffs: Vec<u64>) -> Self {
        WeightEnumerator { coeffs }
    }

    /// Builds `A_0..A_n` from sparse `(i, A_i)` terms.
    pub fn from_terms(n: usize, terms: &[(usize, u64)]) -> Self {
        let mut coeffs = vec![0; n + 1];
        for &(i, a) in terms {
            coeffs[i] += a;
        }
        WeightEnumerator { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn total(&self) -> u128 {
        self.coeffs.iter().map(|&a| a as u128).sum()
    }

    /// Least `i ≥ 1` with `A_i ≠ 0`.
    pub fn min_distance(&self) -> Option<usize> {
        self.coeffs.iter().skip(1).position(|&a| a != 0).map(|i| i + 1)
    }

    /// Checks `A_0 = 1`, `Σ A_i = m^n` and `(m − 1) | A_i`.
    pub fn is_consistent(&self, m: u8) -> bool {
        let m = m as u64;
        self.coeffs.first() == Some(&1)
            && self.total() == (m as u128).pow(self.n() as u32)
            && self.coeffs.iter().skip(1).all(|&a| a % (m - 1) == 0)
    }

    /// Self-invariance under the MacWilliams transform for a self-dual
    /// additive code over `F_{m²}`: `W(x, y) = W(x + (m²−1)y, x − y) / m^n`.
    pub fn is_macwilliams_invariant(&self, m: u8) -> bool {
        let n = self.n();
        let q1 = (m as i128) * (m as i128) - 1;
        let mut image = vec![0i128; n + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            // (x + (q−1)y)^{n−i} (x − y)^i expanded in powers of y
            let left = binomial_poly(n - i, q1);
            let right = binomial_poly(i, -1);
            for (s, &l) in left.iter().enumerate() {
                for (t, &r) in right.iter().enumerate() {
                    image[s + t] += a as i128 * l * r;
                }
            }
        }
        let scale = (m as i128).pow(n as u32);
        image.iter().zip(&self.coeffs).all(|(&x, &a)| x % scale == 0 && x / scale == a as i128)
    }
}

/// Coefficients of `(1 + c·y)^k`.
fn binomial_poly(k: usize, c: i128) -> Vec<i128> {
    let mut out = vec![1i128];
    for _ in 0..k {
        let mut next = vec![0i128; out.len() + 1];
        for (j, &x) in out.iter().enumerate() {
            next[j] += x;
            next[j + 1] += x * c;
        }
        out = next;
    }
    out
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}y")?,
                _ => write!(f, "{a}y^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FromStr for WeightEnumerator {
    type Err = Error;

    /// Parses `1 + 4y + 4y^2`; a missing coefficient means 1.
    fn from_str(s: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for (k, raw) in s.split('+').enumerate() {
            let term: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
            let bad = || Error::parse(1, k + 1, format!("bad enumerator term '{}'", raw.trim()));
            let (coef, power) = match term.split_once('y') {
                None => (term.as_str(), 0),
                Some((c, rest)) => {
                    let p = match rest.strip_prefix('^') {
                        Some(e) => e.parse().map_err(|_| bad())?,
                        None if rest.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    (c, p)
                }
            };
            let a: u64 = if coef.is_empty() && power > 0 { 1 } else { coef.parse().map_err(|_| bad())? };
            terms.push((power, a));
        }
        let n = terms.iter().map(|t| t.0).max().unwrap_or(0);
        Ok(WeightEnumerator::from_terms(n, &terms))
    }
}

fn check_len(n: usize) -> Result<()> {
    if n > MAX_LEN {
        return Err(Error::BudgetExceeded { what: "code length", needed: n as u128, limit: MAX_LEN as u128 });
    }
    Ok(())
}

/// Exact weight enumerator by visiting all `m^n` codewords in a p-ary Gray
/// order, one vector addition per codeword.
pub fn weight_enumerator(code: &AdditiveCode, cap: u128, exec: Exec) -> Result<WeightEnumerator> {
    let n = code.n();
    check_len(n)?;
    let f = code.field();
    let total = (code.m() as u128).pow(n as u32);
    if total > cap {
        return Err(Error::BudgetExceeded { what: "codewords", needed: total, limit: cap });
    }
    let s = code.stabilizer_parts();
    let basis = f.additive_basis();
    let pk = Packer::new(f);
    // generator for digit t: basis[t % r] times row t / r
    let gens: Vec<(u128, u128)> = (0..n)
        .flat_map(|i| {
            let (a, b) = (&s.a()[i], &s.b()[i]);
            basis.iter().map(move |&beta| {
                let sa: Vec<u8> = a.iter().map(|&x| f.mul(beta, x)).collect();
                let sb: Vec<u8> = b.iter().map(|&x| f.mul(beta, x)).collect();
                (Packer::pack(f, &sa), Packer::pack(f, &sb))
            })
        })
        .collect();
    let p = f.p() as u64;
    let total = total as u64;
    let chunks = total.div_ceil(CHUNK) as usize;
    let hist = exec.map_reduce(
        chunks,
        vec![0u64; n + 1],
        |c| {
            let k0 = c as u64 * CHUNK;
            let k1 = (k0 + CHUNK).min(total);
            let mut hist = vec![0u64; n + 1];
            let (mut a, mut b) = gray_start(pk, &gens, p, k0);
            let mut k = k0;
            loop {
                hist[packed::weight(a | b) as usize] += 1;
                k += 1;
                if k == k1 {
                    break;
                }
                let t = trailing_digits(k, p);
                a = pk.add(a, gens[t].0);
                b = pk.add(b, gens[t].1);
            }
            hist
        },
        |mut x, y| {
            for (u, v) in x.iter_mut().zip(y) {
                *u += v;
            }
            x
        },
    );
    Ok(WeightEnumerator { coeffs: hist })
}

/// Codeword at Gray index `k`: digit `i` of the Gray vector is `k_i − k_{i+1} mod p`.
fn gray_start(pk: Packer, gens: &[(u128, u128)], p: u64, mut k: u64) -> (u128, u128) {
    let mut digits = Vec::with_capacity(gens.len() + 1);
    for _ in 0..=gens.len() {
        digits.push(k % p);
        k /= p;
    }
    let (mut a, mut b) = (0u128, 0u128);
    for (i, g) in gens.iter().enumerate() {
        let d = ((digits[i] + p - digits[i + 1]) % p) as u8;
        a = pk.add(a, pk.times(g.0, d));
        b = pk.add(b, pk.times(g.1, d));
    }
    (a, b)
}

#[inline]
fn trailing_digits(mut k: u64, p: u64) -> usize {
    if p == 2 {
        return k.trailing_zeros() as usize;
    }
    let mut t = 0;
    while k.is_multiple_of(p) {
        k /= p;
        t += 1;
    }
    t
}

/// Row-subset search for the minimum distance of the graph code `Γ + ωI`.
///
/// A combination of `i` rows has weight `i + |supp(cΓ) \ S|`, so sizes are
/// tried in increasing order and the search stops once `i` reaches the best
/// weight found.
struct SubsetSearch {
    n: usize,
    pk: Packer,
    /// `mult[j][c]` is `c·Γ_j` packed.
    mult: Vec<Vec<u128>>,
    units: Vec<u8>,
}

impl SubsetSearch {
    fn new(g: &WeightedGraph) -> Self {
        let f = g.field();
        let mult = (0..g.n())
            .map(|j| {
                (0..g.m())
                    .map(|c| {
                        let row: Vec<u8> = g.row(j).iter().map(|&w| f.mul(c, w)).collect();
                        Packer::pack(f, &row)
                    })
                    .collect()
            })
            .collect();
        SubsetSearch { n: g.n(), pk: Packer::new(f), mult, units: f.units().collect() }
    }

    /// Returns the least weight found below `best` among combinations of
    /// `remaining` more rows chosen from `start..`, stopping early once a
    /// weight below `abort_below` appears.
    fn dfs(&self, start: usize, remaining: usize, acc: u128, s: u128, size: u32, mut best: u32, abort_below: u32) -> u32 {
        if remaining == 0 {
            let w = size + (packed::nonzero(acc) & !s).count_ones();
            return w.min(best);
        }
        for j in start..=self.n - remaining {
            for &c in &self.units {
                let next = self.pk.add(acc, self.mult[j][c as usize]);
                best = self.dfs(j + 1, remaining - 1, next, s | packed::unit(j), size, best, abort_below);
                if best < abort_below {
                    return best;
                }
            }
        }
        best
    }

    /// Prefixes of up to two rows (first coefficient fixed to 1) used as
    /// independent work items.
    fn prefixes(&self, size: usize, first: &[usize]) -> Vec<(usize, usize, u128, u128)> {
        let mut out = Vec::new();
        for &j0 in first {
            if j0 + size > self.n {
                continue;
            }
            let acc0 = self.mult[j0][1];
            let s0 = packed::unit(j0);
            if size == 1 {
                out.push((j0 + 1, 0, acc0, s0));
                continue;
            }
            for j1 in j0 + 1..=self.n - (size - 1) {
                for &c in &self.units {
                    out.push((j1 + 1, size - 2, self.pk.add(acc0, self.mult[j1][c as usize]), s0 | packed::unit(j1)));
                }
            }
        }
        out
    }

    fn run(&self, first: &[usize], abort_below: u32, exec: Exec) -> Option<usize> {
        let mut best = self.n as u32 + 1;
        for size in 1..=self.n {
            if size as u32 >= best {
                break;
            }
            let tasks = self.prefixes(size, first);
            let level = exec.map_reduce(
                tasks.len(),
                best,
                |t| {
                    let (start, remaining, acc, s) = tasks[t];
                    self.dfs(start, remaining, acc, s, size as u32, best, abort_below)
                },
                u32::min,
            );
            best = best.min(level);
            if best < abort_below {
                return None;
            }
        }
        Some(best as usize)
    }
}

/// Exact minimum distance of the graph code of `g`.
pub fn min_distance(g: &WeightedGraph, exec: Exec) -> usize {
    min_distance_at_least(g, 0, exec).expect("no floor")
}

/// `Some(d)` when the minimum distance `d` is at least `floor`, `None` as
/// soon as a lighter codeword is found.
pub fn min_distance_at_least(g: &WeightedGraph, floor: usize, exec: Exec) -> Option<usize> {
    assert!(g.n() <= MAX_LEN, "graphs longer than {MAX_LEN} are not supported");
    let search = SubsetSearch::new(g);
    let first: Vec<usize> = (0..g.n()).collect();
    search.run(&first, floor as u32, exec)
}

/// Like [`min_distance_at_least`] for circulant graphs: rotations preserve
/// the code, so every codeword has a rotation whose support meets vertex 0.
pub fn circulant_min_distance_at_least(g: &WeightedGraph, floor: usize, exec: Exec) -> Option<usize> {
    assert!(g.n() <= MAX_LEN, "graphs longer than {MAX_LEN} are not supported");
    SubsetSearch::new(g).run(&[0], floor as u32, exec)
}

/// Minimum distance of any additive code, through its graph form.
pub fn code_min_distance(code: &AdditiveCode, exec: Exec) -> Result<usize> {
    check_len(code.n())?;
    Ok(min_distance(&code.graph_form()?, exec))
}

/// Codeword weights by direct expansion of every coefficient vector; an
/// independent reference for tests.
pub fn weight_enumerator_naive(code: &AdditiveCode) -> WeightEnumerator {
    let f: &Field = code.field();
    let n = code.n();
    let m = code.m() as usize;
    let gen = code.generator();
    let mut coeffs = vec![0u64; n + 1];
    let mut c = vec![0u8; n];
    loop {
        let mut word = vec![0u8; n];
        for (i, &ci) in c.iter().enumerate() {
            for (w, &g) in word.iter_mut().zip(&gen[i]) {
                *w = f.ext_add(*w, f.ext_mul(ci, g));
            }
        }
        coeffs[word.iter().filter(|&&x| x != 0).count()] += 1;
        let mut i = 0;
        while i < n && c[i] as usize == m - 1 {
            c[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        c[i] += 1;
    }
    WeightEnumerator { coeffs }
}
