//! Combinatorial sphere embeddings: rotation systems, face tracing and a
//! planarity test that produces a rotation system.
//!
//! Face tracing convention: after traversing the dart `u -> v`, the walk
//! continues with the edge that follows `{u, v}` in the rotation at `v`.
//! Every consumer (duals, cycle expansion, knot tracing, rendering) relies on
//! this one rule.

use std::collections::HashMap;

use super::{is_connected, PaintedGraph};
use crate::error::{Error, Result};

/// A directed edge. Dart `2e` runs from the smaller endpoint of edge `e` to
/// the larger one, dart `2e + 1` runs back.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart(pub usize);

impl Dart {
    pub fn along(g: &PaintedGraph, e: usize, from: usize) -> Dart {
        if g.edge(e).0 == from {
            Dart(2 * e)
        } else {
            Dart(2 * e + 1)
        }
    }

    pub fn edge(self) -> usize {
        self.0 / 2
    }

    pub fn reversed(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    pub fn tail(self, g: &PaintedGraph) -> usize {
        let (a, b) = g.edge(self.edge());
        if self.0.is_multiple_of(2) {
            a
        } else {
            b
        }
    }

    pub fn head(self, g: &PaintedGraph) -> usize {
        self.reversed().tail(g)
    }
}

/// Cyclic order of incident edges around every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    order: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Validates `order` against `g`. Each cyclic sequence is rotated so that
    /// its smallest edge index comes first.
    pub fn new(g: &PaintedGraph, order: Vec<Vec<usize>>) -> Result<Self> {
        check_rotation(g, &order)?;
        let order = order
            .into_iter()
            .map(|mut seq| {
                if let Some(min_pos) = (0..seq.len()).min_by_key(|&i| seq[i]) {
                    seq.rotate_left(min_pos);
                }
                seq
            })
            .collect();
        Ok(RotationSystem { order })
    }

    pub fn order(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    pub fn as_lists(&self) -> &[Vec<usize>] {
        &self.order
    }

    /// The edge after `e` in the rotation at `v`.
    pub fn successor(&self, v: usize, e: usize) -> usize {
        let seq = &self.order[v];
        let i = seq
            .iter()
            .position(|&x| x == e)
            .expect("edge is not incident to vertex");
        seq[(i + 1) % seq.len()]
    }

    /// The edge before `e` in the rotation at `v`.
    pub fn predecessor(&self, v: usize, e: usize) -> usize {
        let seq = &self.order[v];
        let i = seq
            .iter()
            .position(|&x| x == e)
            .expect("edge is not incident to vertex");
        seq[(i + seq.len() - 1) % seq.len()]
    }

    /// The mirror-image embedding.
    pub fn reversed(&self) -> RotationSystem {
        let order = self
            .order
            .iter()
            .map(|seq| {
                let mut s = seq.clone();
                s[1..].reverse();
                s
            })
            .collect();
        RotationSystem { order }
    }

    /// Dart following `d` in its face.
    pub fn next_in_face(&self, g: &PaintedGraph, d: Dart) -> Dart {
        let v = d.head(g);
        let e = self.successor(v, d.edge());
        Dart::along(g, e, v)
    }
}

fn check_rotation(g: &PaintedGraph, order: &[Vec<usize>]) -> Result<()> {
    if order.len() != g.vertex_count() {
        return Err(Error::InvalidRotation(format!(
            "{} vertex entries for {} vertices",
            order.len(),
            g.vertex_count()
        )));
    }
    for (v, seq) in order.iter().enumerate() {
        let mut got = seq.clone();
        got.sort_unstable();
        let mut want: Vec<usize> = g.neighbors(v).iter().map(|&(_, e)| e).collect();
        want.sort_unstable();
        if got != want {
            return Err(Error::InvalidRotation(format!(
                "vertex {v} lists edges {seq:?} but is incident to {want:?}"
            )));
        }
    }
    Ok(())
}

/// A face boundary walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    darts: Vec<Dart>,
}

impl Face {
    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Edge indices along the walk (an edge bounding the face from both sides
    /// appears twice).
    pub fn edges(&self) -> Vec<usize> {
        self.darts.iter().map(|d| d.edge()).collect()
    }

    /// Vertices in walk order (tails of the darts).
    pub fn vertices(&self, g: &PaintedGraph) -> Vec<usize> {
        self.darts.iter().map(|d| d.tail(g)).collect()
    }
}

/// All faces of an embedded graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Face>,
    face_of_dart: Vec<usize>,
}

impl FaceSet {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of_dart[d.0]
    }

    /// The two faces on either side of edge `e` (equal for a bridge).
    pub fn faces_of_edge(&self, e: usize) -> (usize, usize) {
        (self.face_of_dart[2 * e], self.face_of_dart[2 * e + 1])
    }

    /// For each face, the sorted list of faces sharing at least one edge with it.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.faces.len()];
        for e in 0..self.face_of_dart.len() / 2 {
            let (a, b) = self.faces_of_edge(e);
            if a != b {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }
}

/// Traces every face of `rot`. Faces are numbered in order of their smallest dart.
pub fn faces(g: &PaintedGraph, rot: &RotationSystem) -> Result<FaceSet> {
    check_rotation(g, &rot.order)?;
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    let dart_count = 2 * g.edge_count();
    let unset = usize::MAX;
    let mut face_of_dart = vec![unset; dart_count];
    let mut faces = Vec::new();
    for start in 0..dart_count {
        if face_of_dart[start] != unset {
            continue;
        }
        let id = faces.len();
        let mut darts = Vec::new();
        let mut d = Dart(start);
        loop {
            face_of_dart[d.0] = id;
            darts.push(d);
            d = rot.next_in_face(g, d);
            if d.0 == start {
                break;
            }
        }
        faces.push(Face { darts });
    }
    let euler = g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(Error::InvalidRotation(format!(
            "face tracing gives Euler characteristic {euler}, not a sphere embedding"
        )));
    }
    Ok(FaceSet {
        faces,
        face_of_dart,
    })
}

/// Finds a planar embedding of a connected graph.
///
/// Blocks are embedded independently with the Demoucron-Malgrange-Pertuiset
/// path-addition method and glued at cut vertices.
pub fn planar_embed(g: &PaintedGraph) -> Result<RotationSystem> {
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return Err(Error::Nonplanar);
    }
    let mut order: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(g) {
        if block.len() == 1 {
            let (u, v) = g.edge(block[0]);
            order[u].push(block[0]);
            order[v].push(block[0]);
            continue;
        }
        for (v, seq) in embed_block(g, &block)? {
            order[v].extend(seq);
        }
    }
    let rot = RotationSystem::new(g, order)?;
    faces(g, &rot)?;
    Ok(rot)
}

/// Biconnected components as lists of edge indices.
fn blocks(g: &PaintedGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let unset = usize::MAX;
    let mut disc = vec![unset; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut out = Vec::new();
    let mut edge_stack: Vec<usize> = Vec::new();

    for root in 0..n {
        if disc[root] != unset {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, unset, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent_edge, pos) = *top;
            if pos < g.degree(v) {
                top.2 += 1;
                let (w, e) = g.neighbors(v)[pos];
                if e == parent_edge {
                    continue;
                }
                if disc[w] == unset {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push(e);
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push(e);
                            if e == parent_edge {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        out.push(comp);
                    }
                }
            }
        }
    }
    out
}

enum FragmentKind {
    Chord,
    Component(Vec<usize>),
}

struct Fragment {
    attachments: Vec<usize>,
    kind: FragmentKind,
}

/// Embeds one 2-connected block; returns the rotation at each of its vertices
/// as global edge indices.
fn embed_block(g: &PaintedGraph, block: &[usize]) -> Result<Vec<(usize, Vec<usize>)>> {
    // local numbering
    let mut local_of: HashMap<usize, usize> = HashMap::new();
    let mut global_of: Vec<usize> = Vec::new();
    let mut ends: Vec<(usize, usize)> = Vec::with_capacity(block.len());
    for &e in block {
        let (a, b) = g.edge(e);
        let mut id = |x: usize| {
            *local_of.entry(x).or_insert_with(|| {
                global_of.push(x);
                global_of.len() - 1
            })
        };
        let la = id(a);
        let lb = id(b);
        ends.push((la, lb));
    }
    let n = global_of.len();
    let m = ends.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (le, &(a, b)) in ends.iter().enumerate() {
        adj[a].push((b, le));
        adj[b].push((a, le));
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let edge_between = |a: usize, b: usize| -> usize {
        adj[a]
            .iter()
            .find(|&&(w, _)| w == b)
            .map(|&(_, e)| e)
            .expect("consecutive face vertices are adjacent")
    };

    let cycle = find_cycle(&adj);
    let mut in_h_vertex = vec![false; n];
    let mut in_h_edge = vec![false; m];
    for i in 0..cycle.len() {
        let a = cycle[i];
        let b = cycle[(i + 1) % cycle.len()];
        in_h_vertex[a] = true;
        in_h_edge[edge_between(a, b)] = true;
    }
    let mut embedded = cycle.len();
    let mut rev = cycle.clone();
    rev.reverse();
    let mut face_list: Vec<Vec<usize>> = vec![cycle, rev];

    while embedded < m {
        let mut faces_at: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (fi, f) in face_list.iter().enumerate() {
            for &v in f {
                faces_at[v].push(fi);
            }
        }
        let fragments = find_fragments(&adj, &ends, &in_h_vertex, &in_h_edge);

        let mut pick: Option<(usize, usize)> = None;
        let mut forced = false;
        for (i, fr) in fragments.iter().enumerate() {
            let mut admissible = faces_at[fr.attachments[0]].clone();
            for &a in &fr.attachments[1..] {
                admissible.retain(|f| faces_at[a].binary_search(f).is_ok());
            }
            match admissible.len() {
                0 => return Err(Error::Nonplanar),
                1 if !forced => {
                    pick = Some((i, admissible[0]));
                    forced = true;
                }
                _ => {
                    if pick.is_none() {
                        pick = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = pick.expect("an unembedded edge leaves at least one fragment");
        let path = fragment_path(&adj, &fragments[fi], &in_h_vertex);

        let face = &face_list[face_idx];
        let a = path[0];
        let b = *path.last().unwrap();
        let ia = face.iter().position(|&x| x == a).unwrap();
        let ib = face.iter().position(|&x| x == b).unwrap();
        let len = face.len();
        let interior = &path[1..path.len() - 1];

        let mut first = Vec::new();
        let mut i = ia;
        loop {
            first.push(face[i]);
            if i == ib {
                break;
            }
            i = (i + 1) % len;
        }
        first.extend(interior.iter().rev());

        let mut second = Vec::new();
        let mut i = ib;
        loop {
            second.push(face[i]);
            if i == ia {
                break;
            }
            i = (i + 1) % len;
        }
        second.extend(interior.iter());

        face_list[face_idx] = first;
        face_list.push(second);

        for w in path.windows(2) {
            in_h_edge[edge_between(w[0], w[1])] = true;
            embedded += 1;
        }
        for &v in &path {
            in_h_vertex[v] = true;
        }
    }

    // successor map: after arriving at v from `prev`, the face leaves towards `next`
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for f in &face_list {
        let len = f.len();
        for i in 0..len {
            let prev = f[(i + len - 1) % len];
            let v = f[i];
            let next = f[(i + 1) % len];
            succ[v].insert(edge_between(v, prev), edge_between(v, next));
        }
    }
    let mut out = Vec::with_capacity(n);
    for v in 0..n {
        let start = adj[v].iter().map(|&(_, e)| e).min().unwrap();
        let mut seq = vec![block[start]];
        let mut e = succ[v][&start];
        while e != start {
            seq.push(block[e]);
            e = succ[v][&e];
        }
        if seq.len() != adj[v].len() {
            return Err(Error::InvalidRotation(
                "block embedding produced a pinched vertex".into(),
            ));
        }
        out.push((global_of[v], seq));
    }
    Ok(out)
}

/// Any cycle of a 2-connected graph, as a vertex sequence.
fn find_cycle(adj: &[Vec<(usize, usize)>]) -> Vec<usize> {
    let n = adj.len();
    let unset = usize::MAX;
    let mut parent = vec![unset; n];
    let mut depth = vec![unset; n];
    depth[0] = 0;
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, unset, 0)];
    while let Some(top) = stack.last_mut() {
        let (v, parent_edge, pos) = *top;
        if pos >= adj[v].len() {
            stack.pop();
            continue;
        }
        top.2 += 1;
        let (w, e) = adj[v][pos];
        if e == parent_edge {
            continue;
        }
        if depth[w] == unset {
            depth[w] = depth[v] + 1;
            parent[w] = v;
            stack.push((w, e, 0));
        } else if depth[w] < depth[v] {
            let mut cycle = vec![v];
            let mut x = v;
            while x != w {
                x = parent[x];
                cycle.push(x);
            }
            cycle.reverse();
            return cycle;
        }
    }
    unreachable!("2-connected block without a cycle")
}

fn find_fragments(
    adj: &[Vec<(usize, usize)>],
    ends: &[(usize, usize)],
    in_h_vertex: &[bool],
    in_h_edge: &[bool],
) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for (e, &(a, b)) in ends.iter().enumerate() {
        if !in_h_edge[e] && in_h_vertex[a] && in_h_vertex[b] {
            let mut att = vec![a, b];
            att.sort_unstable();
            out.push(Fragment {
                attachments: att,
                kind: FragmentKind::Chord,
            });
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h_vertex[s] || seen[s] {
            continue;
        }
        let mut comp = vec![s];
        let mut attachments = Vec::new();
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &(w, _) in &adj[v] {
                if in_h_vertex[w] {
                    attachments.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment {
            attachments,
            kind: FragmentKind::Component(comp),
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<(usize, usize)>], fr: &Fragment, in_h_vertex: &[bool]) -> Vec<usize> {
    match &fr.kind {
        FragmentKind::Chord => fr.attachments.clone(),
        FragmentKind::Component(_) => {
            let a = fr.attachments[0];
            let mut parent: HashMap<usize, usize> = HashMap::new();
            let mut queue = std::collections::VecDeque::new();
            for &(w, _) in &adj[a] {
                if !in_h_vertex[w] && !parent.contains_key(&w) {
                    // only interior vertices of this fragment are reachable from here
                    if let FragmentKind::Component(c) = &fr.kind {
                        if c.contains(&w) {
                            parent.insert(w, a);
                            queue.push_back(w);
                        }
                    }
                }
            }
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &adj[x] {
                    if in_h_vertex[y] {
                        if y != a {
                            let mut path = vec![y, x];
                            let mut cur = x;
                            while let Some(&p) = parent.get(&cur) {
                                path.push(p);
                                if p == a {
                                    break;
                                }
                                cur = p;
                            }
                            path.reverse();
                            return path;
                        }
                    } else if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(y) {
                        e.insert(x);
                        queue.push_back(y);
                    }
                }
            }
            unreachable!("fragment of a 2-connected block has two attachments")
        }
    }
}
