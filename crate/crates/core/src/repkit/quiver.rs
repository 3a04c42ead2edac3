use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite acyclic quiver. Vertices are `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "QuiverWire")]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct QuiverWire {
    vertex_count: usize,
    arrows: Vec<(usize, usize)>,
}

impl TryFrom<QuiverWire> for Quiver {
    type Error = Error;
    fn try_from(w: QuiverWire) -> Result<Self> {
        Quiver::new(w.vertex_count, w.arrows)
    }
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidQuiver("no vertices".into()));
        }
        for &(s, t) in &arrows {
            if s >= vertex_count || t >= vertex_count {
                return Err(Error::InvalidQuiver(format!("arrow {s}->{t} out of range")));
            }
            if s == t {
                return Err(Error::InvalidQuiver(format!("loop at vertex {s}")));
            }
        }
        let q = Self {
            vertex_count,
            arrows,
        };
        if q.topological_order().is_none() {
            return Err(Error::InvalidQuiver("quiver has an oriented cycle".into()));
        }
        Ok(q)
    }

    /// Linearly oriented `0 -> 1 -> ... -> n-1`.
    pub fn linear_a(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("linear A_n is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn arrow_between(&self, s: usize, t: usize) -> Option<usize> {
        self.arrows.iter().position(|&a| a == (s, t))
    }

    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.vertex_count];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut ready: Vec<usize> = (0..self.vertex_count).filter(|&v| indeg[v] == 0).collect();
        ready.reverse();
        let mut order = Vec::with_capacity(self.vertex_count);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        ready.push(t);
                    }
                }
            }
        }
        (order.len() == self.vertex_count).then_some(order)
    }

    /// If the underlying graph is a disjoint union of paths (type A, any
    /// orientation, no multiple edges), returns each component as a vertex
    /// sequence. A component starts at the end with the smaller index;
    /// components are ordered by their smallest vertex.
    pub fn path_components(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.vertex_count;
        let mut adj = vec![Vec::new(); n];
        for &(s, t) in &self.arrows {
            if adj[s].contains(&t) {
                return None;
            }
            adj[s].push(t);
            adj[t].push(s);
        }
        if adj.iter().any(|a| a.len() > 2) {
            return None;
        }
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            // collect the component
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            let ends: Vec<usize> = comp.iter().copied().filter(|&v| adj[v].len() < 2).collect();
            let Some(&first) = ends.iter().min() else {
                return None; // a cycle in the underlying graph
            };
            let mut path = vec![first];
            while path.len() < comp.len() {
                let last = *path.last().unwrap();
                let prev = path.len().checked_sub(2).map(|i| path[i]);
                let next = adj[last].iter().copied().find(|&u| Some(u) != prev)?;
                path.push(next);
            }
            comps.push(path);
        }
        comps.sort_by_key(|c| *c.iter().min().unwrap());
        Some(comps)
    }

    pub fn is_type_a(&self) -> bool {
        self.path_components().is_some()
    }

    /// All intervals (connected vertex sets) of a type-A quiver, each as the
    /// vertex sequence along its component path.
    pub fn intervals(&self) -> Option<Vec<Vec<usize>>> {
        let comps = self.path_components()?;
        let mut out = Vec::new();
        for path in &comps {
            for i in 0..path.len() {
                for j in i..path.len() {
                    out.push(path[i..=j].to_vec());
                }
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_cycles() {
        assert!(Quiver::new(2, vec![(0, 0)]).is_err());
        assert!(Quiver::new(2, vec![(0, 1), (1, 0)]).is_err());
        assert!(Quiver::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn path_components_of_zigzag() {
        // 1 -> 2 -> 3 -> 4 <- 5, zero-based
        let q = Quiver::new(5, vec![(0, 1), (1, 2), (2, 3), (4, 3)]).unwrap();
        assert_eq!(q.path_components().unwrap(), vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(q.intervals().unwrap().len(), 15);
    }

    #[test]
    fn star_is_not_type_a() {
        let q = Quiver::new(4, vec![(0, 1), (2, 1), (3, 1)]).unwrap();
        assert!(!q.is_type_a());
    }

    #[test]
    fn double_arrow_is_not_type_a() {
        let q = Quiver::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(q.path_components().is_none());
    }

    #[test]
    fn disconnected_paths() {
        let q = Quiver::new(3, vec![(2, 1)]).unwrap();
        assert_eq!(q.path_components().unwrap(), vec![vec![0], vec![1, 2]]);
    }
}
