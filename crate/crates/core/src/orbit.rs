//! Breadth-first enumeration of LC orbits.
//!
//! Orbit members are stored as 128-bit keys packing the canonical upper
//! triangle. With [`Equivalence::Switching`] the members are classes modulo
//! isomorphism and weight shifts and only local complementations are applied:
//! since `LC(v, a) ∘ WS = WS ∘ LC(v, a·c²)` for the shift factor `c` at `v`,
//! closing under LC alone visits every such class of the full orbit.

use rustc_hash::FxHashSet;

use crate::canon::{Canonizer, Equivalence};
use crate::code::AdditiveCode;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::WeightedGraph;
use crate::weights;

/// Default ceiling on the number of classes visited per orbit.
pub const DEFAULT_ORBIT_BUDGET: usize = 1_000_000;

const FRONTIER_CHUNK: usize = 4096;

/// Packs canonical strings of `n`-vertex graphs over `F_m` into a `u128`,
/// most significant entry first, so that key order is string order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KeyCodec {
    m: u8,
    n: usize,
    bits: u32,
}

impl KeyCodec {
    pub fn new(m: u8, n: usize) -> Result<Self> {
        let bits = match m {
            2 => 1,
            3 | 4 => 2,
            5 => 3,
            other => return Err(Error::UnsupportedAlphabet(other as u32)),
        };
        let entries = n * n.saturating_sub(1) / 2;
        if entries as u32 * bits > 128 {
            return Err(Error::KeyTooWide(format!(
                "{entries} entries of {bits} bits for m = {m}, n = {n} exceed 128 bits"
            )));
        }
        Ok(KeyCodec { m, n, bits })
    }

    pub fn encode(&self, entries: &[u8]) -> u128 {
        entries.iter().fold(0u128, |acc, &e| acc << self.bits | e as u128)
    }

    pub fn decode_entries(&self, key: u128) -> Vec<u8> {
        let count = self.n * self.n.saturating_sub(1) / 2;
        let mask = (1u128 << self.bits) - 1;
        (0..count).map(|i| ((key >> ((count - 1 - i) as u32 * self.bits)) & mask) as u8).collect()
    }

    pub fn decode(&self, key: u128) -> WeightedGraph {
        WeightedGraph::from_upper_unchecked(self.m, self.n, self.decode_entries(key).into_iter())
    }
}

/// Statistics of one explored orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSummary {
    /// Number of classes visited (under the engine's equivalence).
    pub size: usize,
    pub least_key: u128,
    /// Canonical graph for `least_key`.
    pub representative: WeightedGraph,
    /// Minimum vertex degree over all orbit members.
    pub min_degree: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct OrbitEngine {
    codec: KeyCodec,
    mode: Equivalence,
    exec: Exec,
    budget: usize,
}

impl OrbitEngine {
    pub fn new(m: u8, n: usize, mode: Equivalence, exec: Exec, budget: usize) -> Result<Self> {
        Ok(OrbitEngine { codec: KeyCodec::new(m, n)?, mode, exec, budget })
    }

    pub fn codec(&self) -> &KeyCodec {
        &self.codec
    }

    pub fn mode(&self) -> Equivalence {
        self.mode
    }

    pub fn canonizer(&self) -> Canonizer {
        Canonizer::new(self.mode)
    }

    pub fn key(&self, canon: &mut Canonizer, g: &WeightedGraph) -> u128 {
        self.codec.encode(&canon.canonical_string(g))
    }

    fn expand(&self, canon: &mut Canonizer, key: u128) -> (usize, Vec<u128>) {
        let g = self.codec.decode(key);
        let f = g.field();
        let degrees = g.degrees();
        let mut out = Vec::new();
        for v in 0..g.n() {
            if degrees[v] >= 2 {
                for a in f.units() {
                    let mut h = g.clone();
                    h.lc_in_place(v, a);
                    out.push(self.key(canon, &h));
                }
            }
            if self.mode == Equivalence::Isomorphism && degrees[v] >= 1 {
                for a in f.units().skip(1) {
                    let mut h = g.clone();
                    h.weight_shift_in_place(v, a);
                    out.push(self.key(canon, &h));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        (degrees.iter().copied().min().unwrap_or(0), out)
    }

    fn bfs(
        &self,
        start: &WeightedGraph,
        seen: &mut FxHashSet<u128>,
        target: Option<u128>,
        members: Option<&mut Vec<u128>>,
    ) -> Result<(OrbitSummary, bool)> {
        let mut canon = self.canonizer();
        let k0 = self.key(&mut canon, start);
        seen.insert(k0);
        let mut members = members;
        if let Some(list) = members.as_deref_mut() {
            list.push(k0);
        }
        let mut frontier = vec![k0];
        let (mut size, mut least, mut min_degree) = (1usize, k0, usize::MAX);
        let mut found = target == Some(k0);
        while !frontier.is_empty() && !found {
            let mut next = Vec::new();
            for chunk in frontier.chunks(FRONTIER_CHUNK) {
                let results = self.exec.map_init(chunk, || self.canonizer(), |c, &k| self.expand(c, k));
                for (deg, nbrs) in results {
                    min_degree = min_degree.min(deg);
                    for k in nbrs {
                        if seen.insert(k) {
                            size += 1;
                            least = least.min(k);
                            next.push(k);
                            if let Some(list) = members.as_deref_mut() {
                                list.push(k);
                            }
                            found |= target == Some(k);
                            if size > self.budget {
                                return Err(Error::BudgetExceeded {
                                    what: "orbit classes",
                                    needed: size as u128,
                                    limit: self.budget as u128,
                                });
                            }
                        }
                    }
                }
                if found {
                    break;
                }
            }
            frontier = next;
        }
        let summary = OrbitSummary { size, least_key: least, representative: self.codec.decode(least), min_degree };
        Ok((summary, found))
    }

    /// Explores the whole orbit of `start`, adding its keys to `seen`.
    /// Keys already in `seen` are treated as visited, so `seen` may be
    /// shared across disjoint orbits.
    pub fn explore(&self, start: &WeightedGraph, seen: &mut FxHashSet<u128>) -> Result<OrbitSummary> {
        Ok(self.bfs(start, seen, None, None)?.0)
    }

    /// All member keys of the orbit, sorted.
    pub fn members(&self, start: &WeightedGraph) -> Result<Vec<u128>> {
        let mut list = Vec::new();
        self.bfs(start, &mut FxHashSet::default(), None, Some(&mut list))?;
        list.sort_unstable();
        Ok(list)
    }

    /// Whether the orbit of `start` contains the class of `other`; stops as
    /// soon as it is found.
    pub fn contains(&self, start: &WeightedGraph, other: &WeightedGraph) -> Result<bool> {
        let target = self.key(&mut self.canonizer(), other);
        Ok(self.bfs(start, &mut FxHashSet::default(), Some(target), None)?.1)
    }
}

/// The LC orbit of `g` as sorted isomorphism-class representatives,
/// closed under both weight shifts and generalized local complementation.
pub fn lc_orbit(g: &WeightedGraph, budget: usize, exec: Exec) -> Result<Vec<WeightedGraph>> {
    let engine = OrbitEngine::new(g.m(), g.n(), Equivalence::Isomorphism, exec, budget)?;
    Ok(engine.members(g)?.into_iter().map(|k| engine.codec.decode(k)).collect())
}

/// Code equivalence: both codes are reduced to graph form and the orbit of
/// the first is searched for the second.
pub fn codes_equivalent(c1: &AdditiveCode, c2: &AdditiveCode, budget: usize, exec: Exec) -> Result<bool> {
    if c1.m() != c2.m() || c1.n() != c2.n() {
        return Ok(false);
    }
    let (g1, g2) = (c1.graph_form()?, c2.graph_form()?);
    let mut d1: Vec<usize> = g1.components().iter().map(Vec::len).collect();
    let mut d2: Vec<usize> = g2.components().iter().map(Vec::len).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }
    OrbitEngine::new(g1.m(), g1.n(), Equivalence::Switching, exec, budget)?.contains(&g1, &g2)
}

/// `(δ, d)`: the least vertex degree over the orbit and the minimum
/// distance, which satisfy `d = δ + 1`.
pub fn orbit_min_degree_check(code: &AdditiveCode, budget: usize, exec: Exec) -> Result<(usize, usize)> {
    let g = code.graph_form()?;
    let engine = OrbitEngine::new(g.m(), g.n(), Equivalence::Switching, exec, budget)?;
    let summary = engine.explore(&g, &mut FxHashSet::default())?;
    Ok((summary.min_degree, weights::min_distance(&g, exec)))
}
