//! Automorphism groups and isomorphisms of painted graphs.
//!
//! Individualization-refinement: colour classes are refined to an equitable
//! partition (1-dimensional Weisfeiler-Leman), then the first non-singleton
//! class is split by individualizing one vertex at a time. Colours are
//! renumbered by sorting their defining signatures, so two isomorphic search
//! nodes always carry identically numbered colourings; a hash trace of each
//! refinement lets non-matching branches be cut early.
//!
//! For automorphisms the first path of the search tree gives a reference
//! leaf. At each level of that path the stabilizer of the deeper levels is
//! found first, then one representative per remaining orbit of the target
//! class is searched for a leaf matching the reference. The generators found
//! this way generate the whole group, which is then closed explicitly.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::error::Result;
use crate::graph::PaintedGraph;
use crate::permgroup::{PermGroup, Permutation, DEFAULT_CAP};

struct Refiner<'a> {
    g: &'a PaintedGraph,
    paint: bool,
}

/// A search-tree node: a refined colouring with colours `0..cells`.
#[derive(Clone)]
struct Node {
    colors: Vec<u32>,
    cells: usize,
}

impl Node {
    fn is_discrete(&self) -> bool {
        self.cells == self.colors.len()
    }

    /// Vertices of the first colour class with more than one member, ascending.
    fn target_cell(&self) -> Vec<usize> {
        let mut size = vec![0usize; self.cells];
        for &c in &self.colors {
            size[c as usize] += 1;
        }
        let Some(c) = (0..self.cells).find(|&c| size[c] > 1) else {
            return Vec::new();
        };
        (0..self.colors.len())
            .filter(|&v| self.colors[v] as usize == c)
            .collect()
    }
}

/// Renumbers `keys` by sorted order; returns colours, class count and a hash
/// of the sorted (key, multiplicity) list.
fn renumber<K: Ord + Hash>(keys: &[K]) -> (Vec<u32>, usize, u64) {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut colors = vec![0u32; keys.len()];
    let mut hasher = DefaultHasher::new();
    let mut next = 0u32;
    let mut run = 0usize;
    for (i, &v) in order.iter().enumerate() {
        if i > 0 && keys[order[i - 1]] != keys[v] {
            keys[order[i - 1]].hash(&mut hasher);
            run.hash(&mut hasher);
            next += 1;
            run = 0;
        }
        colors[v] = next;
        run += 1;
    }
    if let Some(&last) = order.last() {
        keys[last].hash(&mut hasher);
        run.hash(&mut hasher);
    }
    let cells = if keys.is_empty() { 0 } else { next as usize + 1 };
    (colors, cells, hasher.finish())
}

impl<'a> Refiner<'a> {
    fn edge_color(&self, e: usize) -> u32 {
        u32::from(self.paint && self.g.is_painted(e))
    }

    fn initial(&self) -> (Node, u64) {
        let keys: Vec<(usize, usize)> = (0..self.g.vertex_count())
            .map(|v| {
                let pd = if self.paint { self.g.painted_degree(v) } else { 0 };
                (self.g.degree(v), pd)
            })
            .collect();
        let (colors, cells, h) = renumber(&keys);
        (Node { colors, cells }, h)
    }

    /// Refines `node` to an equitable colouring, appending one hash per round
    /// to `trace`. With a reference trace, stops and returns `None` at the
    /// first disagreement.
    fn refine(&self, mut node: Node, trace: &mut Vec<u64>, reference: Option<&[u64]>) -> Option<Node> {
        let n = self.g.vertex_count();
        let start = trace.len();
        let mut keys: Vec<Vec<u64>> = vec![Vec::new(); n];
        loop {
            for (v, key) in keys.iter_mut().enumerate() {
                key.clear();
                for &(u, e) in self.g.neighbors(v) {
                    key.push(((node.colors[u] as u64) << 1) | self.edge_color(e) as u64);
                }
                key.sort_unstable();
                key.push(node.colors[v] as u64);
                key.rotate_right(1);
            }
            let (colors, cells, h) = renumber(&keys);
            trace.push(h);
            if let Some(r) = reference {
                if r.get(trace.len() - 1) != Some(&h) {
                    return None;
                }
            }
            let stable = cells == node.cells;
            node = Node { colors, cells };
            if stable {
                break;
            }
        }
        if let Some(r) = reference {
            if r.len() != trace.len() {
                return None;
            }
        }
        debug_assert!(trace.len() > start);
        Some(node)
    }

    fn individualize(&self, node: &Node, v: usize) -> Node {
        let keys: Vec<(u32, bool)> = node
            .colors
            .iter()
            .enumerate()
            .map(|(u, &c)| (c, u != v))
            .collect();
        let (colors, cells, _) = renumber(&keys);
        Node { colors, cells }
    }

    /// Individualizes `v` and refines; the trace covers exactly this step.
    fn child(&self, node: &Node, v: usize, reference: Option<&[u64]>) -> Option<(Node, Vec<u64>)> {
        let mut trace = Vec::new();
        let next = self.refine(self.individualize(node, v), &mut trace, reference)?;
        Some((next, trace))
    }
}

/// Colour -> vertex for a discrete colouring.
fn leaf_inverse(node: &Node) -> Vec<usize> {
    let mut inv = vec![0; node.colors.len()];
    for (v, &c) in node.colors.iter().enumerate() {
        inv[c as usize] = v;
    }
    inv
}

/// Whether `map` sends every edge of `g1` to an edge of `g2` of the same colour.
fn preserves_edges(g1: &PaintedGraph, g2: &PaintedGraph, map: &[usize], paint: bool) -> bool {
    g1.edges().iter().enumerate().all(|(e, &(a, b))| {
        match g2.edge_index(map[a], map[b]) {
            Some(f) => !paint || g1.is_painted(e) == g2.is_painted(f),
            None => false,
        }
    })
}

/// Searches below `node` (in graph `r.g`) for a leaf whose correspondence
/// with the reference leaf is an isomorphism from `reference_graph`.
struct LeafSearch<'a> {
    refiner: Refiner<'a>,
    reference_graph: &'a PaintedGraph,
    /// reference colour of each vertex of `reference_graph` at the first leaf
    reference_leaf: &'a [u32],
    /// per depth, the refinement trace of the first-path child at that depth
    traces: &'a [Vec<u64>],
}

impl LeafSearch<'_> {
    fn find(&self, node: &Node, depth: usize) -> Option<Vec<usize>> {
        if node.is_discrete() {
            let inv = leaf_inverse(node);
            let map: Vec<usize> = self
                .reference_leaf
                .iter()
                .map(|&c| inv[c as usize])
                .collect();
            return preserves_edges(self.reference_graph, self.refiner.g, &map, self.refiner.paint)
                .then_some(map);
        }
        let reference = self.traces.get(depth)?;
        for w in node.target_cell() {
            if let Some((child, _)) = self.refiner.child(node, w, Some(reference)) {
                if let Some(map) = self.find(&child, depth + 1) {
                    return Some(map);
                }
            }
        }
        None
    }
}

/// First path: always individualize the smallest vertex of the target cell.
fn first_path(refiner: &Refiner<'_>, root: &Node) -> (Vec<Node>, Vec<Vec<u64>>) {
    let mut nodes = vec![root.clone()];
    let mut traces = Vec::new();
    loop {
        let node = nodes.last().unwrap();
        if node.is_discrete() {
            break;
        }
        let v = node.target_cell()[0];
        let (child, trace) = refiner.child(node, v, None).expect("no reference given");
        nodes.push(child);
        traces.push(trace);
    }
    (nodes, traces)
}

/// Orbit of `v` under the group generated by `gens`.
fn orbit_contains(gens: &[Vec<usize>], v: usize, w: usize, n: usize) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![v];
    seen[v] = true;
    while let Some(x) = stack.pop() {
        if x == w {
            return true;
        }
        for g in gens {
            let y = g[x];
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    false
}

/// Generators of the automorphism group (painted edges to painted edges when
/// `respect_painting`), in a reproducible order.
pub fn automorphism_generators(g: &PaintedGraph, respect_painting: bool) -> Vec<Permutation> {
    let refiner = Refiner {
        g,
        paint: respect_painting,
    };
    let n = g.vertex_count();
    let (root, _) = refiner.initial();
    let mut trace = Vec::new();
    let root = refiner.refine(root, &mut trace, None).expect("no reference given");
    let (nodes, traces) = first_path(&refiner, &root);
    let reference_leaf = nodes.last().unwrap().colors.clone();
    let search = LeafSearch {
        refiner: Refiner {
            g,
            paint: respect_painting,
        },
        reference_graph: g,
        reference_leaf: &reference_leaf,
        traces: &traces,
    };

    // (level, images)
    let mut found: Vec<(usize, Vec<usize>)> = Vec::new();
    for depth in (0..nodes.len() - 1).rev() {
        let node = &nodes[depth];
        let cell = node.target_cell();
        let v = cell[0];
        for &w in &cell[1..] {
            let gens: Vec<Vec<usize>> = found.iter().map(|(_, p)| p.clone()).collect();
            if orbit_contains(&gens, v, w, n) {
                continue;
            }
            let Some((child, _)) = refiner.child(node, w, Some(&traces[depth])) else {
                continue;
            };
            if let Some(map) = search.find(&child, depth + 1) {
                found.push((depth, map));
            }
        }
    }
    found
        .into_iter()
        .map(|(_, p)| Permutation::from_images(&p).expect("leaf maps are bijections"))
        .collect()
}

/// The full automorphism group, enumerated.
pub fn automorphisms(g: &PaintedGraph, respect_painting: bool) -> Result<PermGroup> {
    automorphisms_with_cap(g, respect_painting, DEFAULT_CAP)
}

pub fn automorphisms_with_cap(
    g: &PaintedGraph,
    respect_painting: bool,
    cap: usize,
) -> Result<PermGroup> {
    let gens = automorphism_generators(g, respect_painting);
    PermGroup::close_with_cap(g.vertex_count(), &gens, cap)
}

/// An isomorphism `g1 -> g2` (as vertex images), or `None`.
pub fn find_isomorphism(
    g1: &PaintedGraph,
    g2: &PaintedGraph,
    respect_painting: bool,
) -> Option<Permutation> {
    if g1.vertex_count() != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()
        || (respect_painting && g1.painted().len() != g2.painted().len())
    {
        return None;
    }
    let r1 = Refiner {
        g: g1,
        paint: respect_painting,
    };
    let r2 = Refiner {
        g: g2,
        paint: respect_painting,
    };
    let (root1, h1) = r1.initial();
    let (root2, h2) = r2.initial();
    if h1 != h2 {
        return None;
    }
    let mut trace1 = Vec::new();
    let root1 = r1.refine(root1, &mut trace1, None).expect("no reference given");
    let mut trace2 = Vec::new();
    let root2 = r2.refine(root2, &mut trace2, Some(&trace1))?;
    let (nodes, traces) = first_path(&r1, &root1);
    let reference_leaf = nodes.last().unwrap().colors.clone();
    let search = LeafSearch {
        refiner: r2,
        reference_graph: g1,
        reference_leaf: &reference_leaf,
        traces: &traces,
    };
    let map = search.find(&root2, 0)?;
    Some(Permutation::from_images(&map).expect("leaf maps are bijections"))
}
