//! Canonical forms of weighted graphs by partition refinement and a
//! backtracking search over individualizations with automorphism pruning.
//!
//! Two equivalences are supported. [`Equivalence::Isomorphism`] keeps the
//! weights as they are. [`Equivalence::Switching`] also identifies graphs
//! that differ by weight shifts, i.e. `Γ ~ DΓD` for invertible diagonal `D`;
//! orbit enumeration works modulo this larger group because weight shifts
//! commute with local complementation up to a change of scalar.

use crate::field::Field;
use crate::graph::WeightedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Equivalence {
    Isomorphism,
    Switching,
}

/// A relabeling-invariant key. `bytes` is `[n, entries...]` where the
/// entries are the upper triangle of the canonical adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub bytes: Vec<u8>,
    pub aut_count: u64,
}

impl CanonicalForm {
    /// The canonical representative graph.
    pub fn graph(&self, m: u8) -> WeightedGraph {
        let n = self.bytes[0] as usize;
        WeightedGraph::from_upper(m, n, &self.bytes[1..]).expect("canonical bytes encode a graph")
    }
}

/// Isomorphism-class canonical form of `g` including `|Aut(g)|`.
pub fn canonical_form(g: &WeightedGraph) -> CanonicalForm {
    Canonizer::new(Equivalence::Isomorphism).canonical_form(g)
}

const MAX_AUTOS: usize = 64;

#[derive(Clone)]
struct Partition {
    order: Vec<u8>,
    /// Position of the first vertex of each vertex's cell.
    start: Vec<u8>,
    /// Cell length, valid at cell start positions.
    len: Vec<u8>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut len = vec![1; n];
        if n > 0 {
            len[0] = n as u8;
        }
        Partition { order: (0..n as u8).collect(), start: vec![0; n], len }
    }

    fn is_discrete(&self) -> bool {
        self.first_nonsingleton().is_none()
    }

    fn first_nonsingleton(&self) -> Option<usize> {
        let n = self.order.len();
        let mut pos = 0;
        while pos < n {
            let l = self.len[pos] as usize;
            if l > 1 {
                return Some(pos);
            }
            pos += l;
        }
        None
    }

    fn individualize(&self, v: u8) -> Partition {
        let mut p = self.clone();
        let s = p.start[v as usize] as usize;
        let l = p.len[s] as usize;
        let at = p.order[s..s + l].iter().position(|&x| x == v).expect("v in its cell") + s;
        p.order.swap(s, at);
        p.len[s] = 1;
        p.len[s + 1] = (l - 1) as u8;
        for &x in &p.order[s + 1..s + l] {
            p.start[x as usize] = (s + 1) as u8;
        }
        p
    }
}

struct SearchState {
    first: Option<(Vec<u8>, Vec<u8>)>,
    best: Option<(Vec<u8>, Vec<u8>)>,
    autos: Vec<Vec<u8>>,
}

/// Reusable canonical-labeling engine for one equivalence.
pub struct Canonizer {
    mode: Equivalence,
    n: usize,
    m: u8,
    field: Option<&'static Field>,
    switching: bool,
    adj: Vec<u8>,
    color: Vec<u8>,
    sig: Vec<u16>,
    sig_len: Vec<usize>,
    log: Vec<u8>,
    squares: Vec<u8>,
}

impl Canonizer {
    pub fn new(mode: Equivalence) -> Self {
        Canonizer {
            mode,
            n: 0,
            m: 0,
            field: None,
            switching: false,
            adj: Vec::new(),
            color: Vec::new(),
            sig: Vec::new(),
            sig_len: Vec::new(),
            log: Vec::new(),
            squares: Vec::new(),
        }
    }

    pub fn mode(&self) -> Equivalence {
        self.mode
    }

    fn load(&mut self, g: &WeightedGraph) {
        let n = g.n();
        if self.m != g.m() {
            let f = g.field();
            self.m = g.m();
            self.field = Some(f);
            let (log, squares) = unit_logs(f);
            self.log = log;
            self.squares = squares;
        }
        self.n = n;
        self.switching = self.mode == Equivalence::Switching && g.m() > 2;
        self.adj.clear();
        for i in 0..n {
            self.adj.extend_from_slice(g.row(i));
        }
        self.color.clear();
        if self.switching {
            self.color.extend(self.adj.iter().map(|&w| u8::from(w != 0)));
        } else {
            self.color.extend_from_slice(&self.adj);
        }
        self.sig.resize(n * n, 0);
        self.sig_len.resize(n, 0);
    }

    /// Least leaf string: the canonical upper triangle.
    pub fn canonical_string(&mut self, g: &WeightedGraph) -> Vec<u8> {
        self.load(g);
        let root = self.root();
        let mut st = SearchState { first: None, best: None, autos: Vec::new() };
        self.search(&root, &mut Vec::new(), &mut st);
        st.best.expect("at least one leaf").0
    }

    /// Canonical form together with the automorphism group order (under the
    /// chosen equivalence).
    pub fn canonical_form(&mut self, g: &WeightedGraph) -> CanonicalForm {
        self.load(g);
        let root = self.root();
        let mut st = SearchState { first: None, best: None, autos: Vec::new() };
        self.search(&root, &mut Vec::new(), &mut st);
        let entries = st.best.expect("at least one leaf").0;
        let aut_count = self.aut_count(&root, &mut Vec::new());
        let mut bytes = Vec::with_capacity(entries.len() + 1);
        bytes.push(self.n as u8);
        bytes.extend(entries);
        CanonicalForm { bytes, aut_count }
    }

    fn root(&mut self) -> Partition {
        let mut p = Partition::unit(self.n);
        self.refine(&mut p);
        if self.switching && !p.is_discrete() {
            self.enrich_colors();
            p = Partition::unit(self.n);
            self.refine(&mut p);
        }
        p
    }

    /// Pair colors invariant under relabeling and weight shifts: adjacency,
    /// the ratio profile over common neighbours (up to scaling and
    /// inversion) and, for odd `m`, triangle counts by quadratic character.
    fn enrich_colors(&mut self) {
        let n = self.n;
        let f = self.field.expect("loaded");
        let k = self.m as usize - 1;
        let odd = f.p() != 2;
        let mut raw = vec![0u64; n * n];
        for u in 0..n {
            for w in u + 1..n {
                let mut hist = [0u8; 4];
                let (mut sq, mut nsq) = (0u8, 0u8);
                let uw = self.adj[u * n + w];
                for x in 0..n {
                    let (ux, wx) = (self.adj[u * n + x], self.adj[w * n + x]);
                    if ux == 0 || wx == 0 {
                        continue;
                    }
                    let r = f.mul(ux, f.inv(wx));
                    hist[self.log[r as usize] as usize] += 1;
                    if odd && uw != 0 {
                        let t = f.mul(f.mul(uw, ux), wx);
                        if self.log[t as usize].is_multiple_of(2) {
                            sq += 1;
                        } else {
                            nsq += 1;
                        }
                    }
                }
                let mut best = u32::MAX;
                for s in 0..k {
                    for inv in [false, true] {
                        let mut code = 0u32;
                        for e in 0..k {
                            let src = if inv { (s + k - e) % k } else { (e + s) % k };
                            code = code << 5 | hist[src] as u32;
                        }
                        best = best.min(code);
                    }
                }
                let value = (u64::from(uw != 0) << 40) | (best as u64) << 10 | (sq as u64) << 5 | nsq as u64;
                raw[u * n + w] = value;
                raw[w * n + u] = value;
            }
        }
        let mut distinct: Vec<u64> = raw.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() > u8::MAX as usize {
            return;
        }
        for (c, &r) in self.color.iter_mut().zip(&raw) {
            // value 0 (no edge, no common neighbour) stays color 0
            *c = distinct.binary_search(&r).expect("present") as u8 + u8::from(distinct[0] != 0);
        }
        for v in 0..n {
            self.color[v * n + v] = 0;
        }
    }

    fn refine(&mut self, p: &mut Partition) {
        let n = self.n;
        loop {
            let mut changed = false;
            for pos in 0..n {
                let v = p.order[pos] as usize;
                let s = p.start[v] as usize;
                if p.len[s] == 1 {
                    continue;
                }
                let row = &self.color[v * n..(v + 1) * n];
                let sig = &mut self.sig[v * n..(v + 1) * n];
                let mut l = 0;
                for (x, &c) in row.iter().enumerate() {
                    if c != 0 {
                        sig[l] = (p.start[x] as u16) << 8 | c as u16;
                        l += 1;
                    }
                }
                sig[..l].sort_unstable();
                self.sig_len[v] = l;
            }
            let mut pos = 0;
            while pos < n {
                let l = p.len[pos] as usize;
                if l > 1 {
                    let sig = &self.sig;
                    let sig_len = &self.sig_len;
                    let key = |v: u8| &sig[v as usize * n..v as usize * n + sig_len[v as usize]];
                    p.order[pos..pos + l].sort_by(|&a, &b| key(a).cmp(key(b)));
                    let mut cell = pos;
                    for q in pos + 1..pos + l {
                        if key(p.order[q]) != key(p.order[q - 1]) {
                            p.len[cell] = (q - cell) as u8;
                            cell = q;
                            changed = true;
                        }
                        p.start[p.order[q] as usize] = cell as u8;
                    }
                    p.len[cell] = (pos + l - cell) as u8;
                }
                pos += l;
            }
            if !changed {
                break;
            }
        }
    }

    fn leaf_string(&self, order: &[u8]) -> Vec<u8> {
        let n = self.n;
        let mut s = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        if !self.switching {
            for i in 0..n {
                let row = order[i] as usize * n;
                for &vj in &order[i + 1..] {
                    s.push(self.adj[row + vj as usize]);
                }
            }
            return s;
        }
        let f = self.field.expect("loaded");
        // Scale vertices so that BFS tree edges (neighbours taken in label
        // order) become 1. Rescaling a root by μ then multiplies edges between
        // two even-depth vertices by μ², between two odd-depth vertices by
        // μ⁻², and leaves the rest fixed; each component takes the least string.
        let mut d = [0u8; 32];
        let mut comp = [u8::MAX; 32];
        let mut odd = [false; 32];
        let mut queue = [0u8; 32];
        let mut ncomp = 0u8;
        for &r in order {
            if comp[r as usize] != u8::MAX {
                continue;
            }
            d[r as usize] = 1;
            comp[r as usize] = ncomp;
            let (mut head, mut tail) = (0, 1);
            queue[0] = r;
            while head < tail {
                let u = queue[head] as usize;
                head += 1;
                for &x in order {
                    let w = self.adj[u * n + x as usize];
                    if w != 0 && comp[x as usize] == u8::MAX {
                        comp[x as usize] = ncomp;
                        odd[x as usize] = !odd[u];
                        d[x as usize] = f.inv(f.mul(d[u], w));
                        queue[tail] = x;
                        tail += 1;
                    }
                }
            }
            ncomp += 1;
        }
        // (component, 0 = fixed, 1 = scaled by q, 2 = scaled by q⁻¹)
        let mut owner = Vec::with_capacity(s.capacity());
        for i in 0..n {
            let vi = order[i] as usize;
            for &vj in &order[i + 1..] {
                let vj = vj as usize;
                let w = self.adj[vi * n + vj];
                s.push(if w == 0 { 0 } else { f.mul(f.mul(d[vi], d[vj]), w) });
                let class = match (odd[vi], odd[vj]) {
                    (false, false) => 1u8,
                    (true, true) => 2,
                    _ => 0,
                };
                owner.push((comp[vi], class));
            }
        }
        if self.squares.len() > 1 {
            let scale = |x: u8, class: u8, q: u8| match class {
                1 => f.mul(x, q),
                2 => f.mul(x, f.inv(q)),
                _ => x,
            };
            let mut best = vec![1u8; ncomp as usize];
            for &q in &self.squares[1..] {
                let mut decided = vec![false; ncomp as usize];
                for (&x, &(c, class)) in s.iter().zip(&owner) {
                    let c = c as usize;
                    if decided[c] || x == 0 || class == 0 {
                        continue;
                    }
                    let (cand, cur) = (scale(x, class, q), scale(x, class, best[c]));
                    if cand != cur {
                        decided[c] = true;
                        if cand < cur {
                            best[c] = q;
                        }
                    }
                }
            }
            for (x, &(c, class)) in s.iter_mut().zip(&owner) {
                if *x != 0 {
                    *x = scale(*x, class, best[c as usize]);
                }
            }
        }
        s
    }

    fn search(&mut self, p: &Partition, prefix: &mut Vec<u8>, st: &mut SearchState) {
        let Some(cell) = p.first_nonsingleton() else {
            let s = self.leaf_string(&p.order);
            match (&st.first, &st.best) {
                (None, _) => {
                    st.first = Some((s.clone(), p.order.clone()));
                    st.best = Some((s, p.order.clone()));
                }
                (Some(first), Some(best)) => {
                    let matched = if s == first.0 {
                        Some(&first.1)
                    } else if s == best.0 {
                        Some(&best.1)
                    } else {
                        None
                    };
                    if let Some(other) = matched {
                        if st.autos.len() < MAX_AUTOS {
                            let mut gamma = vec![0u8; self.n];
                            for (&a, &b) in other.iter().zip(&p.order) {
                                gamma[a as usize] = b;
                            }
                            st.autos.push(gamma);
                        }
                    } else if s < best.0 {
                        st.best = Some((s, p.order.clone()));
                    }
                }
                (Some(_), None) => unreachable!(),
            }
            return;
        };
        let len = p.len[cell] as usize;
        let candidates: Vec<u8> = p.order[cell..cell + len].to_vec();
        let mut explored: Vec<u8> = Vec::with_capacity(len);
        for &w in &candidates {
            if !explored.is_empty() && self.equivalent_to_explored(w, &explored, prefix, &st.autos) {
                continue;
            }
            let mut child = p.individualize(w);
            self.refine(&mut child);
            prefix.push(w);
            self.search(&child, prefix, st);
            prefix.pop();
            explored.push(w);
        }
    }

    fn equivalent_to_explored(&self, w: u8, explored: &[u8], prefix: &[u8], autos: &[Vec<u8>]) -> bool {
        let mut parent: Vec<u8> = (0..self.n as u8).collect();
        fn find(parent: &mut [u8], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut any = false;
        for gamma in autos {
            if prefix.iter().all(|&v| gamma[v as usize] == v) {
                any = true;
                for x in 0..self.n as u8 {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x as usize]));
                    if a != b {
                        parent[a as usize] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rw = find(&mut parent, w);
        explored.iter().any(|&u| find(&mut parent, u) == rw)
    }

    fn subtree_string(&mut self, p: &Partition, prefix: &mut Vec<u8>) -> Vec<u8> {
        let mut st = SearchState { first: None, best: None, autos: Vec::new() };
        self.search(p, prefix, &mut st);
        st.best.expect("leaf").0
    }

    /// Orbit-stabilizer recursion: `|Aut_P| = |orbit of v in Aut_P| · |Aut_{P,v}|`.
    fn aut_count(&mut self, p: &Partition, prefix: &mut Vec<u8>) -> u64 {
        let Some(cell) = p.first_nonsingleton() else { return 1 };
        let len = p.len[cell] as usize;
        let candidates: Vec<u8> = p.order[cell..cell + len].to_vec();
        let mut first_child = p.individualize(candidates[0]);
        self.refine(&mut first_child);
        prefix.push(candidates[0]);
        let reference = self.subtree_string(&first_child, prefix);
        prefix.pop();
        let mut orbit = 1u64;
        for &w in &candidates[1..] {
            let mut child = p.individualize(w);
            self.refine(&mut child);
            prefix.push(w);
            if self.subtree_string(&child, prefix) == reference {
                orbit += 1;
            }
            prefix.pop();
        }
        prefix.push(candidates[0]);
        let stab = self.aut_count(&first_child, prefix);
        prefix.pop();
        orbit * stab
    }
}

/// Discrete logarithms of the units of `F_m` with respect to a generator,
/// and the subgroup of squares.
fn unit_logs(f: &Field) -> (Vec<u8>, Vec<u8>) {
    let m = f.m();
    let k = m as usize - 1;
    let generator = f
        .units()
        .find(|&g| {
            let mut x = g;
            let mut order = 1;
            while x != 1 {
                x = f.mul(x, g);
                order += 1;
            }
            order == k
        })
        .expect("F_m* is cyclic");
    let mut log = vec![0u8; m as usize];
    let mut x = 1u8;
    for e in 0..k {
        log[x as usize] = e as u8;
        x = f.mul(x, generator);
    }
    let mut squares: Vec<u8> = f.units().map(|u| f.mul(u, u)).collect();
    squares.sort_unstable();
    squares.dedup();
    (log, squares)
}
