use crate::error::{DpError, Result};
use crate::semiring::Semiring;

/// Directed edge `from → to` (parent to child).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
}

/// DAG over nodes `1..=N` listed in topological order, node 1 the source.
#[derive(Clone, Debug)]
pub struct Dag {
    parents: Vec<Vec<usize>>,
}

impl Dag {
    /// `parents[v - 1]` lists the parents of node `v`.
    pub fn new(parents: Vec<Vec<usize>>) -> Result<Self> {
        if parents.is_empty() {
            return Err(DpError::InvalidDag("no nodes".into()));
        }
        if !parents[0].is_empty() {
            return Err(DpError::InvalidDag("node 1 must have no parents".into()));
        }
        for (k, ps) in parents.iter().enumerate().skip(1) {
            let v = k + 1;
            if ps.is_empty() {
                return Err(DpError::InvalidDag(format!("node {v} has no parents")));
            }
            if let Some(&p) = ps.iter().find(|&&p| p == 0 || p >= v) {
                return Err(DpError::InvalidDag(format!(
                    "parent {p} of node {v} breaks topological order"
                )));
            }
        }
        Ok(Dag { parents })
    }

    /// Build from an edge list.
    pub fn from_edges(nodes: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut parents = vec![Vec::new(); nodes];
        for &(from, to) in edges {
            if to == 0 || to > nodes {
                return Err(DpError::InvalidDag(format!("edge to unknown node {to}")));
            }
            parents[to - 1].push(from);
        }
        Self::new(parents)
    }

    pub fn node_count(&self) -> usize {
        self.parents.len()
    }

    pub fn parents(&self, v: usize) -> &[usize] {
        &self.parents[v - 1]
    }
}

/// Bellman recursion `f_v = ⊕_{v′ ∈ parents(v)} f_{v′} ⊗ w(v′ → v)` with
/// `f_1 = 1`; returns `f_N`.
pub fn dag_bellman<S, W>(dag: &Dag, s: &S, w: W) -> S::Value
where
    S: Semiring,
    W: Fn(Edge) -> S::Value,
{
    let n = dag.node_count();
    let mut f: Vec<S::Value> = Vec::with_capacity(n);
    f.push(s.one());
    for v in 2..=n {
        let fv = dag.parents(v).iter().fold(s.zero(), |acc, &p| {
            s.add(&acc, &s.mul(&f[p - 1], &w(Edge { from: p, to: v })))
        });
        f.push(fv);
    }
    f.pop().expect("non-empty DAG")
}
