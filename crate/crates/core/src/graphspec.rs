//! Undirected graphs, starlike trees, exact adjacency spectra, the
//! critical/dominant trichotomy for Coxeter graphs, and the transform from a
//! dominant starlike tree to its Salem polynomial.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebraic::AlgebraicReal;
use crate::cyclotomic::strip_cyclotomic_factors;
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::linalg::IntMatrix;

/// Simple undirected graph: no self-loops, no multiple edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::NotCoxeter(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::OutOfRange(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            m[(u, v)] = BigInt::one();
            m[(v, u)] = BigInt::one();
        }
        m
    }

    /// Two-coloring of a connected bipartite graph; `None` when an odd cycle
    /// exists.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![-1i8; self.n];
        for start in 0..self.n {
            if color[start] != -1 {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if color[w] == -1 {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        let a = (0..self.n).filter(|&v| color[v] == 0).collect();
        let b = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some((a, b))
    }

    /// 0/1 bipartite incidence matrix for a given bipartition, rows indexed
    /// by the smaller class.
    pub fn bipartite_matrix(&self) -> Option<IntMatrix> {
        let (mut a, mut b) = self.bipartition()?;
        if a.len() > b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        let mut m = IntMatrix::zeros(a.len(), b.len());
        for (i, &u) in a.iter().enumerate() {
            for (j, &v) in b.iter().enumerate() {
                if self.edges.contains(&(u.min(v), u.max(v))) {
                    m[(i, j)] = BigInt::one();
                }
            }
        }
        Some(m)
    }

    /// Parses the graph text format: first line is the vertex count, each
    /// following nonempty line one `u v` edge, 0-indexed.
    pub fn parse_text(s: &str) -> Result<Graph> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::InputError("empty graph file".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::InputError("bad vertex count".into()))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .ok_or_else(|| Error::InputError(format!("bad edge line `{line}`")))?
                .parse()
                .map_err(|_| Error::InputError(format!("bad edge line `{line}`")))?;
            let v: usize = it
                .next()
                .ok_or_else(|| Error::InputError(format!("bad edge line `{line}`")))?
                .parse()
                .map_err(|_| Error::InputError(format!("bad edge line `{line}`")))?;
            edges.push((u, v));
        }
        Graph::new(n, edges)
    }
}

/// A starlike tree `T(n_1, ..., n_k)`: one center, `k` arms of the given
/// edge lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarlikeTree {
    arms: Vec<usize>,
}

impl StarlikeTree {
    pub fn new(arms: Vec<usize>) -> Result<StarlikeTree> {
        if arms.is_empty() || arms.iter().any(|&a| a == 0) {
            return Err(Error::OutOfRange(
                "starlike tree needs nonempty arms of length >= 1".into(),
            ));
        }
        Ok(StarlikeTree { arms })
    }

    /// `T(n, k*1)`: one long arm and `k` unit arms.
    pub fn long_arm_with_unit_arms(n: usize, k: usize) -> Result<StarlikeTree> {
        let mut arms = vec![n];
        arms.extend(std::iter::repeat(1).take(k));
        StarlikeTree::new(arms)
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.arms.iter().sum::<usize>()
    }

    /// Parses `T:n1,n2,...,nk`.
    pub fn parse_text(s: &str) -> Result<StarlikeTree> {
        let rest = s
            .trim()
            .strip_prefix("T:")
            .ok_or_else(|| Error::InputError("starlike tree must start with `T:`".into()))?;
        let arms = rest
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InputError(format!("bad arm length `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        StarlikeTree::new(arms)
    }
}

/// Realizes the starlike tree as a graph: vertex 0 is the center; arms are
/// consecutive paths.
pub fn realize_starlike(t: &StarlikeTree) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1usize;
    for &len in t.arms() {
        let mut prev = 0usize;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::new(next, edges).expect("starlike realization is simple")
}

/// Recognizes a connected graph as a starlike tree, returning its sorted arm
/// lengths. Paths count (every vertex degree <= 2, one arm split at an end).
pub fn as_starlike(g: &Graph) -> Option<StarlikeTree> {
    let n = g.vertex_count();
    if n == 0 || g.edge_count() + 1 != n || !g.is_connected() {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 2).collect();
    if branch.len() > 1 {
        return None;
    }
    let center = branch.first().copied().unwrap_or_else(|| {
        // A path: pick one end as the center.
        (0..n).find(|&v| g.degree(v) <= 1).unwrap_or(0)
    });
    let mut arms = Vec::new();
    for start in g.neighbors(center) {
        let mut len = 1usize;
        let mut prev = center;
        let mut cur = start;
        loop {
            let next: Vec<usize> = g
                .neighbors(cur)
                .into_iter()
                .filter(|&w| w != prev)
                .collect();
            match next.len() {
                0 => break,
                1 => {
                    prev = cur;
                    cur = next[0];
                    len += 1;
                }
                _ => return None,
            }
        }
        arms.push(len);
    }
    arms.sort_unstable_by(|a, b| b.cmp(a));
    StarlikeTree::new(arms).ok()
}

/// Exact characteristic polynomial of the adjacency matrix (division-free).
pub fn char_poly_adjacency(g: &Graph) -> IntPoly {
    g.adjacency_matrix().charpoly()
}

/// The spectral radius as an exact algebraic number: the largest real root
/// of the adjacency characteristic polynomial, which by Perron-Frobenius is
/// the largest root modulus for a connected graph.
pub fn spectral_radius(g: &Graph) -> Result<AlgebraicReal> {
    if g.edge_count() == 0 {
        return Err(Error::DegenerateInput("graph has no edges".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    AlgebraicReal::largest_root(&char_poly_adjacency(g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum CoxeterClass {
    SubCritical,
    Critical,
    NonCriticalDominant,
}

/// Spectral trichotomy: radius < 2, = 2, > 2, decided exactly.
pub fn classify_coxeter(g: &Graph) -> Result<CoxeterClass> {
    let mu = spectral_radius(g)?;
    let two = BigRational::from(BigInt::from(2));
    Ok(match mu.cmp_rational(&two) {
        Ordering::Less => CoxeterClass::SubCritical,
        Ordering::Equal => CoxeterClass::Critical,
        Ordering::Greater => CoxeterClass::NonCriticalDominant,
    })
}

/// The Salem polynomial attached to a non-critical dominant starlike tree:
/// take the characteristic polynomial `c` of `N N^t` for the tree's
/// bipartition, transform by `x^(deg c) c(x + 1/x + 2)`, and strip x-powers
/// and every cyclotomic factor. The survivor is the factor carrying the
/// stretch factor.
///
/// ```
/// use salem_core::graphspec::{tree_salem_poly, StarlikeTree};
/// use salem_core::intpoly::IntPoly;
///
/// let t = StarlikeTree::new(vec![2, 1, 1, 1]).unwrap();
/// assert_eq!(tree_salem_poly(&t).unwrap(), IntPoly::from_i64(&[1, -1, -1, -1, 1]));
/// ```
pub fn tree_salem_poly(t: &StarlikeTree) -> Result<IntPoly> {
    let g = realize_starlike(t);
    if classify_coxeter(&g)? != CoxeterClass::NonCriticalDominant {
        return Err(Error::NotDominant);
    }
    let n = g
        .bipartite_matrix()
        .ok_or_else(|| Error::DegenerateInput("tree must be bipartite".into()))?;
    let gram = n.mul(&n.transpose());
    let c = gram.charpoly();
    let transformed = c.compose_x_plus_inv_plus_two()?;
    let (no_x, _) = transformed.strip_x_powers();
    let (stripped, _) = strip_cyclotomic_factors(&no_x)?;
    Ok(stripped.primitive())
}

/// Witness data for the spectral-bound check on `T(n, k*1)`.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct SpectralBoundsReport {
    pub holds: bool,
    pub mu_not_integer: bool,
    pub lower_bound_sq: String,
    pub upper_bound_sq: String,
    pub nu_interval: (String, String),
}

/// Exact check that the spectral radius mu of `T(n, k*1)` satisfies
/// `sqrt(k+1) < mu < k / sqrt(k-1)`, via the largest eigenvalue `nu = mu^2`
/// of `N N^t` compared against `k+1` and `k^2/(k-1)`; both bounds strict
/// forces `nu` strictly between consecutive integers, so mu is irrational.
pub fn check_spectral_bounds(n: usize, k: usize) -> Result<SpectralBoundsReport> {
    if n < 1 || k < 3 {
        return Err(Error::OutOfRange(
            "spectral bounds need n >= 1 and k >= 3".into(),
        ));
    }
    let t = StarlikeTree::long_arm_with_unit_arms(n, k)?;
    let g = realize_starlike(&t);
    let nmat = g
        .bipartite_matrix()
        .ok_or_else(|| Error::DegenerateInput("tree must be bipartite".into()))?;
    let gram = nmat.mul(&nmat.transpose());
    let mut nu = AlgebraicReal::largest_root(&gram.charpoly())?;
    let lower = BigRational::from(BigInt::from(k as i64 + 1));
    let upper = BigRational::new(BigInt::from((k * k) as i64), BigInt::from(k as i64 - 1));
    let above = nu.cmp_rational(&lower) == Ordering::Greater;
    let below = nu.cmp_rational(&upper) == Ordering::Less;
    // mu is an integer exactly when nu = mu^2 is a perfect-square integer
    // (nu is an algebraic integer, so rational means integer).
    let mu_not_integer = {
        let mut probe = nu.clone();
        probe.refine_to_width(&BigRational::new(BigInt::one(), BigInt::from(2)));
        let (plo, phi) = probe.interval();
        let mut int_val = None;
        for cand in [plo.ceil(), phi.floor()] {
            if probe.cmp_rational(&cand) == Ordering::Equal {
                int_val = Some(cand.to_integer());
                break;
            }
        }
        match int_val {
            Some(v) => {
                let s = v.sqrt();
                &s * &s != v
            }
            None => true,
        }
    };
    nu.refine_to_width(&BigRational::new(BigInt::one(), BigInt::from(1_000_000)));
    let (ilo, ihi) = nu.interval();
    Ok(SpectralBoundsReport {
        holds: above && below,
        mu_not_integer,
        lower_bound_sq: lower.to_string(),
        upper_bound_sq: upper.to_string(),
        nu_interval: (ilo.to_string(), ihi.to_string()),
    })
}

/// Path graph on `n` vertices (test helper and CLI building block).
pub fn path_graph(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Cycle graph on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::new(n, edges).unwrap()
}
