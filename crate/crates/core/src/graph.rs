//! Simple undirected graphs with edge weights in `F_m`, and the two graph
//! operations that generate code equivalence: weight shifting and
//! generalized local complementation.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// An `m`-weighted graph stored as a dense symmetric adjacency matrix with a
/// zero diagonal. A zero entry is a non-edge.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedGraph {
    m: u8,
    n: usize,
    adj: Vec<u8>,
}

/// Reachability and degree statistics (weights ignored beyond zero/nonzero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connectivity {
    pub is_connected: bool,
    pub degrees: Vec<usize>,
    pub min_degree: usize,
}

impl WeightedGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(m: u8, n: usize) -> Result<Self> {
        Field::standard(m)?;
        Ok(WeightedGraph { m, n, adj: vec![0; n * n] })
    }

    /// Builds a graph from a full adjacency matrix, checking symmetry, the
    /// zero diagonal and the weight range.
    pub fn from_rows(m: u8, rows: &[Vec<u8>]) -> Result<Self> {
        Field::standard(m)?;
        let n = rows.len();
        let mut adj = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGraph(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            adj.extend_from_slice(row);
        }
        let g = WeightedGraph { m, n, adj };
        g.validate()?;
        Ok(g)
    }

    /// Builds a graph from its upper triangle in row-major order.
    pub fn from_upper(m: u8, n: usize, upper: &[u8]) -> Result<Self> {
        if upper.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::LengthMismatch(upper.len(), n * n.saturating_sub(1) / 2));
        }
        let mut g = WeightedGraph::empty(m, n)?;
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if upper[k] >= m {
                    return Err(Error::InvalidGraph(format!("weight {} outside F_{m}", upper[k])));
                }
                g.set(i, j, upper[k]);
                k += 1;
            }
        }
        Ok(g)
    }

    pub(crate) fn from_upper_unchecked(m: u8, n: usize, upper: impl Iterator<Item = u8>) -> Self {
        let mut g = WeightedGraph { m, n, adj: vec![0; n * n] };
        let mut it = upper;
        for i in 0..n {
            for j in i + 1..n {
                let w = it.next().expect("enough entries");
                g.set(i, j, w);
            }
        }
        g
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.n {
            if self.weight(i, i) != 0 {
                return Err(Error::InvalidGraph(format!("nonzero diagonal entry at vertex {i}")));
            }
            for j in 0..self.n {
                let w = self.weight(i, j);
                if w >= self.m {
                    return Err(Error::InvalidGraph(format!("weight {w} outside F_{}", self.m)));
                }
                if w != self.weight(j, i) {
                    return Err(Error::InvalidGraph(format!("asymmetric entry ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &'static Field {
        Field::standard(self.m).expect("graphs are only built over supported alphabets")
    }

    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> u8 {
        self.adj[i * self.n + j]
    }

    /// Sets the weight of `{i, j}` (both matrix entries). `i` must differ from `j`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, w: u8) {
        debug_assert!(i != j && w < self.m);
        self.adj[i * self.n + j] = w;
        self.adj[j * self.n + i] = w;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.adj[i * self.n..(i + 1) * self.n]
    }

    pub fn matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Upper-triangle entries in row-major order.
    pub fn upper(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for i in 0..self.n {
            out.extend_from_slice(&self.row(i)[i + 1..]);
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().filter(|(_, &w)| w != 0).map(|(u, _)| u)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().filter(|&&w| w != 0).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&w| w != 0).count() / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    pub fn connectivity(&self) -> Connectivity {
        let degrees = self.degrees();
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        Connectivity { is_connected: self.is_connected(), degrees, min_degree }
    }

    /// Vertex sets of the connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut k = 0;
            while k < members.len() {
                let v = members[k];
                k += 1;
                for u in self.neighbors(v) {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    fn check_vertex_scalar(&self, v: usize, a: u8) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if a == 0 {
            return Err(Error::ZeroScalar);
        }
        if a >= self.m {
            return Err(Error::InvalidGraph(format!("scalar {a} outside F_{}", self.m)));
        }
        Ok(())
    }

    /// Multiplies the weight of every edge incident on `v` by `a`.
    pub fn weight_shift(&self, v: usize, a: u8) -> Result<WeightedGraph> {
        self.check_vertex_scalar(v, a)?;
        let mut g = self.clone();
        g.weight_shift_in_place(v, a);
        Ok(g)
    }

    pub(crate) fn weight_shift_in_place(&mut self, v: usize, a: u8) {
        let f = self.field();
        for u in 0..self.n {
            let w = self.weight(v, u);
            if w != 0 {
                self.set(v, u, f.mul(w, a));
            }
        }
    }

    /// Generalized local complementation on `v` by `a`:
    /// `Γ'_{ij} = Γ_{ij} + a Γ_{vi} Γ_{vj}` for `i ≠ j`, zero diagonal.
    pub fn generalized_lc(&self, v: usize, a: u8) -> Result<WeightedGraph> {
        self.check_vertex_scalar(v, a)?;
        let mut g = self.clone();
        g.lc_in_place(v, a);
        Ok(g)
    }

    pub(crate) fn lc_in_place(&mut self, v: usize, a: u8) {
        let f = self.field();
        let nbrs: Vec<(usize, u8)> =
            self.row(v).iter().enumerate().filter(|(_, &w)| w != 0).map(|(u, &w)| (u, w)).collect();
        for (x, &(i, wi)) in nbrs.iter().enumerate() {
            let ai = f.mul(a, wi);
            for &(j, wj) in &nbrs[x + 1..] {
                let cur = self.weight(i, j);
                self.set(i, j, f.add(cur, f.mul(ai, wj)));
            }
        }
    }

    /// All `m^n − 1` graphs on `n + 1` vertices obtained by joining a new
    /// vertex to a nonempty weighted subset of the old ones. Pattern `k`
    /// gives the new vertex weight `digit_i(k)` (base m) towards vertex `i`.
    pub fn extensions(&self) -> Vec<WeightedGraph> {
        let total = (self.m as u64).pow(self.n as u32);
        (1..total).map(|k| self.extension(k)).collect()
    }

    /// Extension number `k` in `1..m^n`.
    pub fn extension(&self, mut k: u64) -> WeightedGraph {
        let n = self.n;
        let mut g = WeightedGraph { m: self.m, n: n + 1, adj: vec![0; (n + 1) * (n + 1)] };
        for i in 0..n {
            g.adj[i * (n + 1)..i * (n + 1) + n].copy_from_slice(self.row(i));
        }
        for i in 0..n {
            let w = (k % self.m as u64) as u8;
            k /= self.m as u64;
            if w != 0 {
                g.set(n, i, w);
            }
        }
        g
    }

    /// The circulant graph whose adjacency matrix has first row `(0, row...)`.
    /// `row` has length `n − 1` and must be a palindrome.
    pub fn circulant(m: u8, row: &[u8]) -> Result<WeightedGraph> {
        let n = row.len() + 1;
        if row.iter().ne(row.iter().rev()) {
            return Err(Error::NotPalindromic);
        }
        let mut g = WeightedGraph::empty(m, n)?;
        if let Some(&w) = row.iter().find(|&&w| w >= m) {
            return Err(Error::InvalidGraph(format!("weight {w} outside F_{m}")));
        }
        for i in 0..n {
            for (j, &w) in row.iter().enumerate() {
                let k = (i + 1 + j) % n;
                g.adj[i * n + k] = w;
            }
        }
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    /// Disjoint union; its graph code is the direct sum of the two codes.
    pub fn disjoint_union(&self, other: &WeightedGraph) -> Result<WeightedGraph> {
        if self.m != other.m {
            return Err(Error::AlphabetMismatch(self.m, other.m));
        }
        let n = self.n + other.n;
        let mut g = WeightedGraph::empty(self.m, n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                g.adj[i * n + j] = self.weight(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                g.adj[(self.n + i) * n + self.n + j] = other.weight(i, j);
            }
        }
        Ok(g)
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> WeightedGraph {
        assert_eq!(perm.len(), self.n);
        let n = self.n;
        let mut adj = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                adj[perm[i] * n + perm[j]] = self.weight(i, j);
            }
        }
        WeightedGraph { m: self.m, n, adj }
    }

    /// Induced subgraph on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> WeightedGraph {
        let k = vertices.len();
        let mut adj = vec![0; k * k];
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate() {
                adj[a * k + b] = self.weight(i, j);
            }
        }
        WeightedGraph { m: self.m, n: k, adj }
    }
}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightedGraph(m={}, n={}, [", self.m, self.n)?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, " ")?;
            }
            for j in 0..self.n {
                write!(f, "{:x}", self.weight(i, j))?;
            }
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle(m: u8) -> WeightedGraph {
        WeightedGraph::from_rows(m, &[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap()
    }

    #[test]
    fn weight_shift_examples() {
        let g = WeightedGraph::from_rows(3, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.weight_shift(0, 2).unwrap().weight(0, 1), 2);
        assert_eq!(g.weight_shift(0, 1).unwrap(), g);
        let h = triangle(2);
        assert_eq!(h.weight_shift(1, 1).unwrap(), h);
        assert_eq!(g.weight_shift(0, 0), Err(Error::ZeroScalar));
        assert_eq!(g.weight_shift(2, 1), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
    }

    #[test]
    fn lc_examples() {
        let t = triangle(3).generalized_lc(0, 1).unwrap();
        assert_eq!(t.weight(1, 2), 2);
        assert_eq!(t.weight(0, 1), 1);
        let p = triangle(2).generalized_lc(0, 1).unwrap();
        assert_eq!(p.weight(1, 2), 0);
        assert_eq!(p.edge_count(), 2);
        let iso = WeightedGraph::from_rows(5, &[vec![0, 0, 0], vec![0, 0, 3], vec![0, 3, 0]]).unwrap();
        for a in 1..5 {
            assert_eq!(iso.generalized_lc(0, a).unwrap(), iso);
        }
        assert_eq!(iso.generalized_lc(0, 0), Err(Error::ZeroScalar));
    }

    #[test]
    fn extension_counts() {
        let edge = WeightedGraph::from_rows(3, &[vec![0, 1], vec![1, 0]]).unwrap();
        let ext = edge.extensions();
        assert_eq!(ext.len(), 8);
        assert!(ext.iter().all(|g| g.is_connected() && g.n() == 3));
        let single = WeightedGraph::empty(2, 1).unwrap();
        assert_eq!(single.extensions().len(), 1);
    }

    #[test]
    fn circulant_rows() {
        let g = WeightedGraph::circulant(3, &[0, 1, 1, 1, 0]).unwrap();
        assert_eq!(g.n(), 6);
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert_eq!(WeightedGraph::circulant(3, &[0, 1, 2]), Err(Error::NotPalindromic));
        let empty = WeightedGraph::circulant(3, &[0, 0, 0]).unwrap();
        assert!(!empty.is_connected());
    }

    #[test]
    fn connectivity_examples() {
        let k4 = WeightedGraph::circulant(2, &[1, 1, 1]).unwrap();
        let c = k4.connectivity();
        assert!(c.is_connected);
        assert_eq!(c.degrees, vec![3; 4]);
        let two = WeightedGraph::from_rows(
            2,
            &[vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 0]],
        )
        .unwrap();
        assert!(!two.is_connected());
        assert_eq!(two.components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn rejects_malformed_matrices() {
        assert!(WeightedGraph::from_rows(3, &[vec![1, 0], vec![0, 0]]).is_err());
        assert!(WeightedGraph::from_rows(3, &[vec![0, 1], vec![2, 0]]).is_err());
        assert!(WeightedGraph::from_rows(3, &[vec![0, 3], vec![3, 0]]).is_err());
        assert!(WeightedGraph::from_rows(6, &[vec![0]]).is_err());
    }
}
