use super::PaintedGraph;
use crate::error::{Error, Result};

pub fn is_connected(g: &PaintedGraph) -> bool {
    component_count(g, None) == 1
}

/// Number of connected components of `g` with `removed` deleted.
fn component_count(g: &PaintedGraph, removed: Option<usize>) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if let Some(r) = removed {
        seen[r] = true;
    }
    let mut stack = Vec::new();
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for &(w, _) in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Cut vertices of `g - removed`, found with an iterative lowpoint DFS.
/// Assumes `g - removed` is connected.
pub fn articulation_points(g: &PaintedGraph, removed: Option<usize>) -> Vec<usize> {
    let n = g.vertex_count();
    let unset = usize::MAX;
    let mut disc = vec![unset; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    if let Some(r) = removed {
        disc[r] = 0;
    }
    let mut time = 1;
    let Some(root) = (0..n).find(|&v| Some(v) != removed) else {
        return Vec::new();
    };

    // (vertex, parent edge, next neighbour position)
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
    disc[root] = time;
    low[root] = time;
    time += 1;
    let mut root_children = 0;

    while let Some(top) = stack.last_mut() {
        let (v, parent_edge, pos) = *top;
        if pos < g.degree(v) {
            top.2 += 1;
            let (w, e) = g.neighbors(v)[pos];
            if Some(w) == removed || e == parent_edge {
                continue;
            }
            if disc[w] == unset {
                disc[w] = time;
                low[w] = time;
                time += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, e, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if p != root && low[v] >= disc[p] {
                    is_cut[p] = true;
                }
            }
        }
    }
    if root_children > 1 {
        is_cut[root] = true;
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// True iff removing fewer than `k` vertices never disconnects `g`.
///
/// Graphs with at most `k` vertices are never `k`-connected. For `k = 3`
/// every single vertex is removed in turn and the remainder is checked for
/// cut vertices, which covers every vertex pair.
pub fn is_k_connected(g: &PaintedGraph, k: usize) -> Result<bool> {
    if !(1..=3).contains(&k) {
        return Err(Error::InvalidConnectivity(k));
    }
    if g.vertex_count() <= k || !is_connected(g) {
        return Ok(false);
    }
    Ok(match k {
        1 => true,
        2 => articulation_points(g, None).is_empty(),
        _ => (0..g.vertex_count()).all(|r| {
            component_count(g, Some(r)) == 1 && articulation_points(g, Some(r)).is_empty()
        }),
    })
}
