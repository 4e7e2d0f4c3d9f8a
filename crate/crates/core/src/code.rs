//! Stabilizer matrices `(A | B)` and additive codes with generator `C = A + ωB`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::WeightedGraph;
use crate::linalg;

/// An `n × 2n` matrix `(A | B)` over `F_m` whose rows are pairwise
/// symplectically orthogonal and linearly independent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StabilizerMatrix {
    m: u8,
    n: usize,
    a: Vec<Vec<u8>>,
    b: Vec<Vec<u8>>,
}

impl StabilizerMatrix {
    /// Validates shapes, entries, self-orthogonality and rank.
    pub fn new(m: u8, a: Vec<Vec<u8>>, b: Vec<Vec<u8>>) -> Result<Self> {
        let s = Self::from_parts(m, a, b)?;
        s.check_self_orthogonal()?;
        let rank = s.rank();
        if rank < s.n {
            return Err(Error::RankDeficient { rank, n: s.n });
        }
        Ok(s)
    }

    /// Shape and range checks only.
    pub fn from_parts(m: u8, a: Vec<Vec<u8>>, b: Vec<Vec<u8>>) -> Result<Self> {
        Field::standard(m)?;
        let n = a.len();
        if b.len() != n {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        for row in a.iter().chain(&b) {
            if row.len() != n {
                return Err(Error::LengthMismatch(row.len(), n));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= m) {
                return Err(Error::InvalidGraph(format!("symbol {x} outside F_{m}")));
            }
        }
        Ok(StabilizerMatrix { m, n, a, b })
    }

    /// `(Γ | I)`.
    pub fn from_graph(g: &WeightedGraph) -> Self {
        let n = g.n();
        let b = (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect();
        StabilizerMatrix { m: g.m(), n, a: g.matrix(), b }
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &'static Field {
        Field::standard(self.m).expect("validated alphabet")
    }

    pub fn a(&self) -> &[Vec<u8>] {
        &self.a
    }

    pub fn b(&self) -> &[Vec<u8>] {
        &self.b
    }

    /// Row `i` as `(a | b)` of length `2n`.
    pub fn row(&self, i: usize) -> Vec<u8> {
        let mut r = self.a[i].clone();
        r.extend_from_slice(&self.b[i]);
        r
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.n).map(|i| self.row(i)).collect()
    }

    pub fn rank(&self) -> usize {
        linalg::rank(self.field(), &self.rows())
    }

    /// Checks `b·a' − b'·a = 0` over `F_m` for every pair of rows. Vanishing
    /// of the `F_m`-valued form on generators is what makes the whole
    /// `F_m`-span orthogonal under the trace form.
    pub fn check_self_orthogonal(&self) -> Result<()> {
        let f = self.field();
        let rows = self.rows();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if f.symplectic_form(&rows[i], &rows[j])? != 0 {
                    return Err(Error::NotSelfOrthogonal(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn to_code(&self) -> AdditiveCode {
        let f = self.field();
        let gen = (0..self.n)
            .map(|i| (0..self.n).map(|j| f.ext_from_parts(self.a[i][j], self.b[i][j])).collect())
            .collect();
        AdditiveCode { m: self.m, n: self.n, gen, graph: None }
    }
}

/// An additive code over `F_{m²}` given by an `n × n` generator matrix whose
/// entries are extension-field codes `a + m·b` for `a + ωb`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdditiveCode {
    m: u8,
    n: usize,
    gen: Vec<Vec<u8>>,
    graph: Option<WeightedGraph>,
}

impl AdditiveCode {
    pub fn from_generator(m: u8, gen: Vec<Vec<u8>>) -> Result<Self> {
        let f = Field::standard(m)?;
        let n = gen.len();
        for row in &gen {
            if row.len() != n {
                return Err(Error::LengthMismatch(row.len(), n));
            }
            if let Some(&x) = row.iter().find(|&&x| x as usize >= f.q()) {
                return Err(Error::InvalidGraph(format!("symbol {x} outside F_{}", f.q())));
            }
        }
        Ok(AdditiveCode { m, n, gen, graph: None })
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &'static Field {
        Field::standard(self.m).expect("validated alphabet")
    }

    pub fn generator(&self) -> &[Vec<u8>] {
        &self.gen
    }

    /// The graph this code was built from, if any.
    pub fn graph(&self) -> Option<&WeightedGraph> {
        self.graph.as_ref()
    }

    /// Splits `C = A + ωB` without validation.
    pub fn stabilizer_parts(&self) -> StabilizerMatrix {
        let f = self.field();
        let split = |k: usize| -> Vec<Vec<u8>> {
            self.gen
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&x| {
                            let (a, b) = f.ext_parts(x);
                            if k == 0 {
                                a
                            } else {
                                b
                            }
                        })
                        .collect()
                })
                .collect()
        };
        StabilizerMatrix { m: self.m, n: self.n, a: split(0), b: split(1) }
    }

    /// The validated `(A | B)` form.
    pub fn stabilizer(&self) -> Result<StabilizerMatrix> {
        let s = self.stabilizer_parts();
        StabilizerMatrix::new(s.m, s.a, s.b)
    }

    /// True iff the rows are `F_m`-independent and pairwise orthogonal under
    /// the Hermitian form.
    pub fn is_self_dual(&self) -> bool {
        let f = self.field();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if f.hermitian_form(&self.gen[i], &self.gen[j]) != Ok(0) {
                    return false;
                }
            }
        }
        self.stabilizer_parts().rank() == self.n
    }

    /// A graph whose code is equivalent to this one: the source graph when
    /// known, otherwise the standard-form reduction.
    pub fn graph_form(&self) -> Result<WeightedGraph> {
        match &self.graph {
            Some(g) => Ok(g.clone()),
            None => Ok(crate::standard_form::standard_form(&self.stabilizer()?)?.graph),
        }
    }

    /// Block-diagonal generator of `self ⊕ other`.
    pub fn direct_sum(&self, other: &AdditiveCode) -> Result<AdditiveCode> {
        if self.m != other.m {
            return Err(Error::AlphabetMismatch(self.m, other.m));
        }
        let n = self.n + other.n;
        let mut gen = vec![vec![0u8; n]; n];
        for (i, row) in self.gen.iter().enumerate() {
            gen[i][..self.n].copy_from_slice(row);
        }
        for (i, row) in other.gen.iter().enumerate() {
            gen[self.n + i][self.n..].copy_from_slice(row);
        }
        let graph = match (&self.graph, &other.graph) {
            (Some(g), Some(h)) => Some(g.disjoint_union(h)?),
            _ => None,
        };
        Ok(AdditiveCode { m: self.m, n, gen, graph })
    }
}

/// The graph code with generator `Γ + ωI`.
pub fn graph_code(g: &WeightedGraph) -> AdditiveCode {
    let f = g.field();
    let n = g.n();
    let gen = (0..n)
        .map(|i| (0..n).map(|j| f.ext_from_parts(g.weight(i, j), u8::from(i == j))).collect())
        .collect();
    let code = AdditiveCode { m: g.m(), n, gen, graph: Some(g.clone()) };
    debug_assert!(code.is_self_dual());
    code
}

pub fn is_self_dual(c: &AdditiveCode) -> bool {
    c.is_self_dual()
}

/// Position of `(n, d)` relative to the quantum singleton bound `2d ≤ n + 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingletonStatus {
    Violates,
    BelowBound,
    Mds,
}

pub fn singleton_status(n: usize, d: usize) -> SingletonStatus {
    match (2 * d).cmp(&(n + 2)) {
        std::cmp::Ordering::Greater => SingletonStatus::Violates,
        std::cmp::Ordering::Less => SingletonStatus::BelowBound,
        std::cmp::Ordering::Equal => SingletonStatus::Mds,
    }
}
