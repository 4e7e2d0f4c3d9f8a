//! Classification of connected `m`-weighted graphs (indecomposable codes) by
//! LC orbit, built up one vertex at a time from the previous length.

use std::collections::BTreeMap;

use rustc_hash::FxHashSet;

use crate::canon::Equivalence;
use crate::code::graph_code;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::WeightedGraph;
use crate::orbit::{OrbitEngine, DEFAULT_ORBIT_BUDGET};
use crate::weights::{self, WeightEnumerator, DEFAULT_ENUMERATION_CAP};

/// One orbit representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRep {
    /// Canonical graph with the least key in its orbit.
    pub graph: WeightedGraph,
    pub d: usize,
    /// Number of classes modulo isomorphism and weight shifts in the orbit.
    pub orbit_size: usize,
    pub enumerator: Option<WeightEnumerator>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDatabase {
    pub m: u8,
    pub n: usize,
    /// When set, only orbits with `d ≥ min_d` are present.
    pub min_d: Option<usize>,
    /// Whether every orbit satisfying the `min_d` filter is present.
    pub complete: bool,
    pub reps: Vec<OrbitRep>,
}

impl OrbitDatabase {
    /// The single code of length 1.
    pub fn length_one(m: u8) -> Result<Self> {
        let g = WeightedGraph::empty(m, 1)?;
        Ok(OrbitDatabase {
            m,
            n: 1,
            min_d: None,
            complete: true,
            reps: vec![OrbitRep { graph: g, d: 1, orbit_size: 1, enumerator: None }],
        })
    }

    pub fn i_count(&self) -> usize {
        self.reps.len()
    }

    /// Number of representatives per minimum distance.
    pub fn distance_counts(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for r in &self.reps {
            *out.entry(r.d).or_insert(0) += 1;
        }
        out
    }

    fn require_complete(&self, min_d: Option<usize>) -> Result<()> {
        let covers = match (self.min_d, min_d) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(have), Some(need)) => have <= need,
        };
        if !self.complete || !covers {
            return Err(Error::IncompleteDatabase(format!(
                "database for m = {}, n = {} does not contain every orbit required",
                self.m, self.n
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub exec: Exec,
    pub orbit_budget: usize,
    /// Attach weight enumerators when `m^n` is at most this many codewords.
    pub enumerator_cap: Option<u128>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { exec: Exec::default(), orbit_budget: DEFAULT_ORBIT_BUDGET, enumerator_cap: None }
    }
}

impl ClassifyOptions {
    pub fn with_enumerators(mut self) -> Self {
        self.enumerator_cap = Some(DEFAULT_ENUMERATION_CAP);
        self
    }
}

/// Partitions candidate graphs (given lazily by index) into orbits, keeping
/// one representative per orbit.
fn partition_into_orbits(
    m: u8,
    n: usize,
    count: usize,
    candidate: impl Fn(usize) -> WeightedGraph + Sync + Send,
    opts: &ClassifyOptions,
) -> Result<Vec<OrbitRep>> {
    let engine = OrbitEngine::new(m, n, Equivalence::Switching, opts.exec, opts.orbit_budget)?;
    let indices: Vec<usize> = (0..count).collect();
    let keys = opts.exec.map_init(&indices, || engine.canonizer(), |c, &i| engine.key(c, &candidate(i)));
    let mut seen = FxHashSet::default();
    let mut found = Vec::new();
    for &k in &keys {
        if seen.contains(&k) {
            continue;
        }
        let summary = engine.explore(&engine.codec().decode(k), &mut seen)?;
        found.push(summary);
    }
    found.sort_by_key(|s| s.least_key);
    let reps = found
        .into_iter()
        .map(|s| {
            let d = weights::min_distance(&s.representative, opts.exec);
            debug_assert_eq!(d, s.min_degree + 1, "minimum distance equals least orbit degree plus one");
            let enumerator = opts
                .enumerator_cap
                .filter(|&cap| (m as u128).pow(n as u32) <= cap)
                .map(|cap| weights::weight_enumerator(&graph_code(&s.representative), cap, opts.exec))
                .transpose()?;
            Ok(OrbitRep { graph: s.representative, d, orbit_size: s.size, enumerator })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(reps)
}

/// All extensions of the representatives of `prev`, by index.
fn extension_space(prev: &OrbitDatabase) -> (usize, impl Fn(usize) -> WeightedGraph + Sync + Send + '_) {
    let per = (prev.m as usize).pow(prev.n as u32) - 1;
    let f = move |i: usize| prev.reps[i / per].graph.extension((i % per) as u64 + 1);
    (prev.reps.len() * per, f)
}

/// Classifies length `prev.n + 1` from a complete classification of
/// length `prev.n`: every orbit of connected graphs on `n + 1` vertices
/// contains an extension of some representative.
pub fn classify(prev: &OrbitDatabase, opts: &ClassifyOptions) -> Result<OrbitDatabase> {
    prev.require_complete(None)?;
    let (count, candidate) = extension_space(prev);
    let reps = partition_into_orbits(prev.m, prev.n + 1, count, candidate, opts)?;
    Ok(OrbitDatabase { m: prev.m, n: prev.n + 1, min_d: None, complete: true, reps })
}

/// Databases for lengths `1..=n`.
pub fn classify_up_to(m: u8, n: usize, opts: &ClassifyOptions) -> Result<Vec<OrbitDatabase>> {
    let mut out = vec![OrbitDatabase::length_one(m)?];
    while out.len() < n {
        let next = classify(out.last().expect("nonempty"), opts)?;
        out.push(next);
    }
    Ok(out)
}

/// Classifies codes of length `db.n + 1` with distance at least `target_d`.
/// Deleting a vertex lowers the distance by at most one, so the input must
/// hold every orbit of distance at least `target_d − 1`.
pub fn lengthen_search(db: &OrbitDatabase, target_d: usize, opts: &ClassifyOptions) -> Result<OrbitDatabase> {
    db.require_complete(Some(target_d.saturating_sub(1)))?;
    let (count, candidate) = extension_space(db);
    let indices: Vec<usize> = (0..count).collect();
    let keep: Vec<bool> = opts.exec.map(&indices, |&i| {
        weights::min_distance_at_least(&candidate(i), target_d, Exec::Sequential).is_some()
    });
    let survivors: Vec<usize> = indices.into_iter().filter(|&i| keep[i]).collect();
    let reps = partition_into_orbits(db.m, db.n + 1, survivors.len(), |j| candidate(survivors[j]), opts)?;
    Ok(OrbitDatabase { m: db.m, n: db.n + 1, min_d: Some(target_d), complete: true, reps })
}

/// Counts of indecomposable codes by length and distance.
pub fn distance_table(dbs: &[OrbitDatabase]) -> BTreeMap<usize, BTreeMap<usize, usize>> {
    dbs.iter().map(|db| (db.n, db.distance_counts())).collect()
}

/// Number of LC orbits among all connected labeled graphs on `n` vertices,
/// found without the extension step. Feasible only for tiny `(m, n)`.
pub fn exhaustive_orbit_count(m: u8, n: usize, exec: Exec) -> Result<usize> {
    let pairs = n * n.saturating_sub(1) / 2;
    let total = (m as u128).pow(pairs as u32);
    if total > 10_000_000 {
        return Err(Error::BudgetExceeded { what: "labeled graphs", needed: total, limit: 10_000_000 });
    }
    let engine = OrbitEngine::new(m, n, Equivalence::Switching, exec, usize::MAX)?;
    let indices: Vec<u64> = (0..total as u64).collect();
    let keys = exec.map_init(&indices, || engine.canonizer(), |c, &code| {
        let mut rest = code;
        let upper: Vec<u8> = (0..pairs)
            .map(|_| {
                let e = (rest % m as u64) as u8;
                rest /= m as u64;
                e
            })
            .collect();
        let g = WeightedGraph::from_upper(m, n, &upper).expect("valid entries");
        g.is_connected().then(|| engine.key(c, &g))
    });
    let mut distinct: Vec<u128> = keys.into_iter().flatten().collect();
    distinct.sort_unstable();
    distinct.dedup();
    let mut seen = FxHashSet::default();
    let mut orbits = 0;
    for k in distinct {
        if !seen.contains(&k) {
            engine.explore(&engine.codec().decode(k), &mut seen)?;
            orbits += 1;
        }
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_lengths() {
        let opts = ClassifyOptions { exec: Exec::Sequential, ..Default::default() };
        let dbs = classify_up_to(2, 5, &opts).unwrap();
        let counts: Vec<usize> = dbs.iter().map(|d| d.i_count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 4]);
        let dbs = classify_up_to(3, 4, &opts).unwrap();
        assert_eq!(dbs[3].i_count(), 3);
        assert_eq!(dbs[3].distance_counts(), BTreeMap::from([(2, 2), (3, 1)]));
    }

    #[test]
    fn incomplete_input_is_rejected() {
        let mut db = OrbitDatabase::length_one(3).unwrap();
        db.complete = false;
        assert!(matches!(classify(&db, &ClassifyOptions::default()), Err(Error::IncompleteDatabase(_))));
    }

    #[test]
    fn trivial_lengthening() {
        let db = OrbitDatabase::length_one(5).unwrap();
        let two = lengthen_search(&db, 2, &ClassifyOptions::default()).unwrap();
        assert_eq!(two.i_count(), 1);
        assert_eq!(two.reps[0].d, 2);
    }
}
