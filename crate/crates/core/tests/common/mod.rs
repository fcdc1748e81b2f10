//! Shared graphs and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use crushtacean::families::{self, antiprism, cycle_expand, prism, wheel};
use crushtacean::graph::{faces, planar_embed, PaintedGraph};
use crushtacean::{PermGroup, Permutation};
use rand::seq::IndexedRandom;
use rand::Rng;

/// The seeds whose expansions must keep their automorphism group.
pub fn seeds() -> Vec<(String, PaintedGraph)> {
    let mut out = Vec::new();
    for n in 4..=8 {
        out.push((format!("W{n}"), wheel(n).unwrap()));
    }
    for n in 3..=8 {
        out.push((format!("prism {n}"), prism(n).unwrap()));
    }
    for n in 3..=6 {
        out.push((format!("antiprism {n}"), antiprism(n).unwrap()));
    }
    out.push(("K4".into(), families::tetrahedron()));
    out.push(("cube".into(), families::cube()));
    out.push(("dodecahedron".into(), families::dodecahedron()));
    out
}

pub fn expand(g: &PaintedGraph) -> PaintedGraph {
    cycle_expand(g, &planar_embed(g).unwrap()).unwrap().0
}

/// Every crushtacean the tests know by name: the exceptional families and
/// the expansions of [`seeds`].
pub fn corpus() -> Vec<(String, PaintedGraph)> {
    let mut out = vec![("borromean".to_string(), families::gamma_borromean())];
    for n in 3..=8 {
        out.push((format!("pretzel {n}"), families::gamma_pretzel(n).unwrap()));
    }
    for n in 2..=6 {
        out.push((format!("ochain {n}"), families::gamma_ochain(n).unwrap()));
    }
    for (name, s) in seeds() {
        out.push((format!("expanded {name}"), expand(&s)));
    }
    out
}

/// Vertex connectivity by unit-capacity max flow on the split digraph,
/// minimized over non-adjacent pairs (`n - 1` for complete graphs).
pub fn vertex_connectivity(g: &PaintedGraph) -> usize {
    let n = g.vertex_count();
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if g.edge_index(s, t).is_none() {
                best = best.min(max_flow_vertex_disjoint(g, s, t));
            }
        }
    }
    best
}

fn max_flow_vertex_disjoint(g: &PaintedGraph, s: usize, t: usize) -> usize {
    // v_in = 2v, v_out = 2v + 1
    let n = 2 * g.vertex_count();
    let mut cap: HashMap<(usize, usize), i32> = HashMap::new();
    let mut adj = vec![Vec::new(); n];
    let mut add = |a: usize, b: usize, c: i32, adj: &mut Vec<Vec<usize>>| {
        *cap.entry((a, b)).or_insert(0) += c;
        cap.entry((b, a)).or_insert(0);
        adj[a].push(b);
        adj[b].push(a);
    };
    for v in 0..g.vertex_count() {
        let c = if v == s || v == t { 1 << 20 } else { 1 };
        add(2 * v, 2 * v + 1, c, &mut adj);
    }
    for &(a, b) in g.edges() {
        add(2 * a + 1, 2 * b, 1 << 20, &mut adj);
        add(2 * b + 1, 2 * a, 1 << 20, &mut adj);
    }
    let (src, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; n];
        prev[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if prev[w] == usize::MAX && cap[&(v, w)] > 0 {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut v = sink;
        while v != src {
            let p = prev[v];
            *cap.get_mut(&(p, v)).unwrap() -= 1;
            *cap.get_mut(&(v, p)).unwrap() += 1;
            v = p;
        }
        flow += 1;
    }
}

/// Grows a random 3-connected cubic planar graph from K4 by joining two
/// subdivided edges of a common face.
pub fn random_polyhedral_cubic<R: Rng>(rng: &mut R, steps: usize) -> PaintedGraph {
    let mut g = families::tetrahedron();
    for _ in 0..steps {
        let rot = planar_embed(&g).unwrap();
        let fs = faces(&g, &rot).unwrap();
        let face = fs.faces().choose(rng).unwrap();
        let edges = face.edges();
        let i = rng.random_range(0..edges.len());
        let mut j = rng.random_range(0..edges.len() - 1);
        if j >= i {
            j += 1;
        }
        g = join_subdivided(&g, edges[i], edges[j]);
    }
    g
}

fn join_subdivided(g: &PaintedGraph, e1: usize, e2: usize) -> PaintedGraph {
    let n = g.vertex_count();
    let (x, y) = (n, n + 1);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if e == e1 {
            edges.extend([(a, x), (x, b)]);
        } else if e == e2 {
            edges.extend([(a, y), (y, b)]);
        } else {
            edges.push((a, b));
        }
    }
    edges.push((x, y));
    PaintedGraph::unpainted(n + 2, &edges).unwrap()
}

/// Two polyhedral cubic graphs glued across a 2-edge cut: cubic, planar,
/// 2-connected, never 3-connected.
pub fn glued_cubic<R: Rng>(rng: &mut R) -> PaintedGraph {
    let (sa, sb) = (rng.random_range(0..4), rng.random_range(0..4));
    let a = random_polyhedral_cubic(rng, sa);
    let b = random_polyhedral_cubic(rng, sb);
    let ea = rng.random_range(0..a.edge_count());
    let eb = rng.random_range(0..b.edge_count());
    let (a1, a2) = a.edge(ea);
    let (b1, b2) = b.edge(eb);
    let off = a.vertex_count();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    edges.extend(a.edges().iter().enumerate().filter(|&(e, _)| e != ea).map(|(_, &p)| p));
    edges.extend(
        b.edges()
            .iter()
            .enumerate()
            .filter(|&(e, _)| e != eb)
            .map(|(_, &(p, q))| (p + off, q + off)),
    );
    edges.push((a1, b1 + off));
    edges.push((a2, b2 + off));
    PaintedGraph::unpainted(off + b.vertex_count(), &edges).unwrap()
}

/// Element orders of a group, counted by brute force.
pub fn order_histogram(g: &PermGroup) -> Vec<usize> {
    let mut hist = vec![0; g.order() + 1];
    for p in g.elements() {
        hist[element_order(p)] += 1;
    }
    hist
}

fn element_order(p: &Permutation) -> usize {
    let mut q = p.clone();
    let mut k = 1;
    while !q.is_identity() {
        q = q.then(p).unwrap();
        k += 1;
    }
    k
}

/// Decides isomorphism by trying every assignment of generator images of
/// matching element order and extending it along the Cayley graph.
pub fn brute_force_isomorphic(g: &PermGroup, h: &PermGroup) -> bool {
    if g.order() != h.order() || order_histogram(g) != order_histogram(h) {
        return false;
    }
    let gens = g.generators();
    if gens.is_empty() {
        return true;
    }
    let choices: Vec<Vec<&Permutation>> = gens
        .iter()
        .map(|s| h.elements().iter().filter(|t| element_order(t) == element_order(s)).collect())
        .collect();
    if choices.iter().any(Vec::is_empty) {
        return false;
    }
    let index: HashMap<Vec<usize>, usize> = g
        .elements()
        .iter()
        .enumerate()
        .map(|(i, p)| (p.images(), i))
        .collect();
    let mut pick = vec![0; gens.len()];
    loop {
        let images: Vec<&Permutation> = pick.iter().zip(&choices).map(|(&k, c)| c[k]).collect();
        if extends(g, &index, gens, &images) {
            return true;
        }
        // next assignment
        let mut i = 0;
        loop {
            if i == pick.len() {
                return false;
            }
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

fn extends(
    g: &PermGroup,
    index: &HashMap<Vec<usize>, usize>,
    gens: &[Permutation],
    images: &[&Permutation],
) -> bool {
    let mut phi: Vec<Option<Permutation>> = vec![None; g.order()];
    let id = Permutation::identity(g.degree());
    let h_id = Permutation::identity(images[0].degree());
    let start = index[&id.images()];
    phi[start] = Some(h_id);
    let mut queue = VecDeque::from([(id, start)]);
    while let Some((x, xi)) = queue.pop_front() {
        let fx = phi[xi].clone().unwrap();
        for (s, t) in gens.iter().zip(images) {
            let y = x.then(s).unwrap();
            let fy = fx.then(t).unwrap();
            let yi = index[&y.images()];
            match &phi[yi] {
                Some(prev) if *prev != fy => return false,
                Some(_) => {}
                None => {
                    phi[yi] = Some(fy);
                    queue.push_back((y, yi));
                }
            }
        }
    }
    let mut seen: Vec<Vec<usize>> = phi.into_iter().map(|p| p.unwrap().images()).collect();
    seen.sort();
    seen.dedup();
    seen.len() == g.order()
}
