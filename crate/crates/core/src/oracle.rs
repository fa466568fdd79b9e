//! Brute-force reference for cores by recursive deletion.
//!
//! Quadratic or worse, and deliberately naive: degrees are recounted from the
//! full line list on every pass. Meant for tests and verification only.

use crate::decompose::CoreAssignment;
use crate::error::Result;
use crate::graph::{DegreeMode, Graph, VertexId};

/// Degree of each vertex inside the subgraph induced by `alive`.
fn induced_degrees(g: &Graph, alive: &[bool], mode: DegreeMode) -> Vec<usize> {
    let mut deg = vec![0usize; g.n()];
    for (u, v) in g.lines() {
        let (u, v) = (u as usize, v as usize);
        if !alive[u] || !alive[v] {
            continue;
        }
        match mode {
            DegreeMode::Undirected | DegreeMode::InOut => {
                deg[u] += 1;
                deg[v] += 1;
            }
            DegreeMode::Out => deg[u] += 1,
            DegreeMode::In => deg[v] += 1,
        }
    }
    deg
}

/// Repeatedly deletes vertices of degree below `k` from `alive` until none
/// remain.
fn delete_below(g: &Graph, alive: &mut [bool], k: usize, mode: DegreeMode) {
    loop {
        let deg = induced_degrees(g, alive, mode);
        let mut removed = false;
        for v in 0..g.n() {
            if alive[v] && deg[v] < k {
                alive[v] = false;
                removed = true;
            }
        }
        if !removed {
            return;
        }
    }
}

/// Core numbers by recursive deletion at levels `k = 0, 1, 2, ...`.
pub fn peel_oracle(g: &Graph, mode: DegreeMode) -> Result<CoreAssignment> {
    mode.check(g.is_directed())?;
    let n = g.n();
    let mut core = vec![0usize; n];
    let mut alive = vec![true; n];
    let mut k = 0;
    while alive.iter().any(|&a| a) {
        delete_below(g, &mut alive, k, mode);
        for v in 0..n {
            if alive[v] {
                core[v] = k;
            }
        }
        k += 1;
    }
    Ok(CoreAssignment::new(core, mode))
}

/// Whether `members` induces exactly the `k`-core of `g`: every member has
/// degree at least `k` inside it and no larger vertex set has that property.
pub fn is_k_core(g: &Graph, members: &[VertexId], k: usize, mode: DegreeMode) -> bool {
    if mode.check(g.is_directed()).is_err() {
        return false;
    }
    let mut inside = vec![false; g.n()];
    for &v in members {
        match inside.get_mut(v as usize) {
            Some(slot) => *slot = true,
            None => return false,
        }
    }
    let deg = induced_degrees(g, &inside, mode);
    if (0..g.n()).any(|v| inside[v] && deg[v] < k) {
        return false;
    }
    let mut core = vec![true; g.n()];
    delete_below(g, &mut core, k, mode);
    core == inside
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LoopPolicy;

    fn undirected(n: usize, lines: &[(usize, usize)]) -> Graph {
        Graph::from_lines(n, lines, false, LoopPolicy::Reject).unwrap()
    }

    fn k4_pendant() -> Graph {
        undirected(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
    }

    #[test]
    fn k4_with_pendant() {
        // k=1: nothing goes. k=2: vertex 4 (degree 1) goes, K4 remains with
        // degree 3. k=3: K4 stays. k=4: everything goes.
        let a = peel_oracle(&k4_pendant(), DegreeMode::Undirected).unwrap();
        assert_eq!(a.as_slice(), [3, 3, 3, 3, 1]);
    }

    #[test]
    fn triangle_and_star() {
        let k3 = undirected(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(
            peel_oracle(&k3, DegreeMode::Undirected).unwrap().as_slice(),
            [2, 2, 2]
        );
        let star = undirected(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(
            peel_oracle(&star, DegreeMode::Undirected)
                .unwrap()
                .as_slice(),
            [1; 5]
        );
    }

    #[test]
    fn directed_modes() {
        let cycle =
            Graph::from_lines(3, &[(0, 1), (1, 2), (2, 0)], true, LoopPolicy::Reject).unwrap();
        assert_eq!(
            peel_oracle(&cycle, DegreeMode::In).unwrap().as_slice(),
            [1, 1, 1]
        );
        assert_eq!(
            peel_oracle(&cycle, DegreeMode::InOut).unwrap().as_slice(),
            [2, 2, 2]
        );
        assert!(peel_oracle(&cycle, DegreeMode::Undirected).is_err());
    }

    #[test]
    fn k_core_membership() {
        let k3 = undirected(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(is_k_core(&k3, &[0, 1, 2], 2, DegreeMode::Undirected));
        assert!(!is_k_core(&k3, &[0, 1], 1, DegreeMode::Undirected));
        assert!(is_k_core(
            &k4_pendant(),
            &[0, 1, 2, 3],
            3,
            DegreeMode::Undirected
        ));
        assert!(!is_k_core(
            &k4_pendant(),
            &[0, 1, 2],
            2,
            DegreeMode::Undirected
        ));
        assert!(is_k_core(&k4_pendant(), &[], 4, DegreeMode::Undirected));
        assert!(!is_k_core(&k3, &[7], 0, DegreeMode::Undirected));
    }
}
