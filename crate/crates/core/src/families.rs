//! Named graphs, seeds with prescribed symmetry, cycle expansion and
//! families of crushtaceans with a given painted automorphism group.

use crate::automorphism::automorphisms;
use crate::crushtacean::{
    classify_bprime, signature_screen, validate_crushtacean, BPrimeVerdict, SignatureScreen,
};
use crate::error::{Error, Result};
use crate::graph::{faces, is_k_connected, planar_embed, PaintedGraph, RotationSystem};
use crate::permgroup::{identify, GroupId};

fn build(n: usize, edges: &[(usize, usize)], painted: &[(usize, usize)]) -> PaintedGraph {
    PaintedGraph::new(n, edges, painted).expect("generator produces a simple graph")
}

fn prism_edges(n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + i));
    }
    edges
}

/// K4 with two opposite edges painted.
pub fn gamma_borromean() -> PaintedGraph {
    build(
        4,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        &[(0, 1), (2, 3)],
    )
}

/// The `n`-prism with its `n` vertical edges painted.
pub fn gamma_pretzel(n: usize) -> Result<PaintedGraph> {
    if n < 3 {
        return Err(Error::BadParameter(format!("pretzel needs n >= 3, got {n}")));
    }
    let verticals: Vec<(usize, usize)> = (0..n).map(|i| (i, n + i)).collect();
    Ok(build(2 * n, &prism_edges(n), &verticals))
}

/// Capped ladder: `x = 0`, rails `a_i = i` and `b_i = n + i` for
/// `i = 1..=n`, `y = 2n + 1`. Rungs `a_i b_i` and the cap edge `x y` are
/// painted; `x` closes the triangle `x a_1 b_1`, `y` the triangle `y a_n b_n`.
pub(crate) fn ochain_graph(n: usize) -> Result<PaintedGraph> {
    if n < 2 {
        return Err(Error::BadParameter(format!("O-chain needs n >= 2, got {n}")));
    }
    let (x, y) = (0, 2 * n + 1);
    let a = |i: usize| i;
    let b = |i: usize| n + i;
    let mut edges = vec![(x, a(1)), (x, b(1)), (y, a(n)), (y, b(n)), (x, y)];
    let mut painted = vec![(x, y)];
    for i in 1..=n {
        edges.push((a(i), b(i)));
        painted.push((a(i), b(i)));
        if i < n {
            edges.push((a(i), a(i + 1)));
            edges.push((b(i), b(i + 1)));
        }
    }
    Ok(build(2 * n + 2, &edges, &painted))
}

/// The crushtacean of the pretzel chain with an extra encircling crossing
/// circle, checked against its known structure before it is returned.
pub fn gamma_ochain(n: usize) -> Result<PaintedGraph> {
    let g = ochain_graph(n)?;
    let fail = |what: &str| Err(Error::ConstructionCheck(format!("O-chain n={n}: {what}")));

    let v = validate_crushtacean(&g);
    if !v.valid {
        return fail("not a crushtacean");
    }
    if g.vertex_count() != 2 * n + 2 || g.painted().len() != n + 1 {
        return fail("wrong size");
    }
    let rot = v.rotation.expect("valid graphs come with an embedding");
    let fs = faces(&g, &rot)?;
    let triangles: Vec<Vec<usize>> = fs
        .faces()
        .iter()
        .filter(|f| f.len() == 3)
        .map(|f| f.vertices(&g))
        .collect();
    if triangles.len() != 2 {
        return fail("expected exactly two triangular faces");
    }
    // painted edges running from one triangle to the other
    let bridging: Vec<usize> = g
        .painted()
        .iter()
        .copied()
        .filter(|&e| {
            let (p, q) = g.edge(e);
            (triangles[0].contains(&p) && triangles[1].contains(&q))
                || (triangles[0].contains(&q) && triangles[1].contains(&p))
        })
        .collect();
    if bridging != [g.edge_index(0, 2 * n + 1).expect("cap edge")] {
        return fail("cap edge is not the unique painted edge joining the triangles");
    }
    let aut_p = automorphisms(&g, true)?;
    if aut_p.order() != 4 || identify(&aut_p) != GroupId::Klein {
        return fail("painted automorphism group is not Z2 x Z2");
    }
    Ok(g)
}

/// `W_n`: an `n`-cycle `0..n` plus a hub `n`.
pub fn wheel(n: usize) -> Result<PaintedGraph> {
    if n < 3 {
        return Err(Error::BadParameter(format!("wheel needs n >= 3, got {n}")));
    }
    let mut edges = Vec::with_capacity(2 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n));
    }
    Ok(build(n + 1, &edges, &[]))
}

/// The `n`-prism: top cycle `0..n`, bottom cycle `n..2n`.
pub fn prism(n: usize) -> Result<PaintedGraph> {
    if n < 3 {
        return Err(Error::BadParameter(format!("prism needs n >= 3, got {n}")));
    }
    Ok(build(2 * n, &prism_edges(n), &[]))
}

/// The `n`-antiprism: top cycle `0..n`, bottom cycle `n..2n`, each top
/// vertex joined to the bottom vertices below and after it.
pub fn antiprism(n: usize) -> Result<PaintedGraph> {
    if n < 3 {
        return Err(Error::BadParameter(format!("antiprism needs n >= 3, got {n}")));
    }
    let mut edges = Vec::with_capacity(4 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + i));
        edges.push((i, n + (i + 1) % n));
    }
    Ok(build(2 * n, &edges, &[]))
}

pub fn tetrahedron() -> PaintedGraph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], &[])
}

pub fn cube() -> PaintedGraph {
    build(8, &prism_edges(4), &[])
}

/// Outer pentagon `0..5`, middle 10-cycle `5..15`, inner pentagon `15..20`.
pub fn dodecahedron() -> PaintedGraph {
    let mut edges = Vec::with_capacity(30);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, 5 + 2 * i));
        edges.push((15 + i, 15 + (i + 1) % 5));
        edges.push((15 + i, 5 + 2 * i + 1));
    }
    for j in 0..10 {
        edges.push((5 + j, 5 + (j + 1) % 10));
    }
    build(20, &edges, &[])
}

/// A built-in seed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub name: String,
    pub graph: PaintedGraph,
}

/// Built-in seeds whose automorphism group is `target`; each candidate is
/// re-checked with the automorphism search and dropped if it disagrees.
/// Groups without a known polyhedral seed (cyclic groups, `A4`, ...) give an
/// empty list.
pub fn seed_catalog(target: GroupId) -> Vec<Seed> {
    let mut cands: Vec<(String, PaintedGraph)> = Vec::new();
    let mut add = |name: String, g: Result<PaintedGraph>| {
        if let Ok(g) = g {
            cands.push((name, g));
        }
    };
    match target {
        GroupId::Dihedral(m) => {
            if m >= 4 {
                add(format!("wheel {m}"), wheel(m));
            }
            if m % 2 == 0 {
                let h = m / 2;
                if h % 2 == 1 && h >= 3 {
                    add(format!("prism {h}"), prism(h));
                }
                if (4..=12).contains(&h) {
                    add(format!("antiprism {h}"), antiprism(h));
                }
            }
        }
        GroupId::DihedralTimesZ2(n) if n >= 6 && n % 2 == 0 => {
            add(format!("prism {n}"), prism(n));
        }
        GroupId::S4 => add("tetrahedron".into(), Ok(tetrahedron())),
        GroupId::S4xZ2 => add("cube".into(), Ok(cube())),
        GroupId::A5xZ2 => add("dodecahedron".into(), Ok(dodecahedron())),
        _ => {}
    }
    cands
        .into_iter()
        .filter(|(_, g)| automorphisms(g, false).is_ok_and(|a| identify(&a) == target))
        .map(|(name, graph)| Seed { name, graph })
        .collect()
}

/// Replaces every vertex by a cycle following its rotation and paints the
/// original edges. The new vertex at the `i`-th corner of `v` is numbered
/// `deg(0) + ... + deg(v - 1) + i`, so canonical input gives canonical output.
pub fn cycle_expand(
    g: &PaintedGraph,
    rot: &RotationSystem,
) -> Result<(PaintedGraph, RotationSystem)> {
    if !is_k_connected(g, 3)? {
        return Err(Error::Precondition(
            "cycle expansion needs a 3-connected graph".into(),
        ));
    }
    // rejects rotations that are not planar embeddings of g
    faces(g, rot)?;

    let n = g.vertex_count();
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + g.degree(v);
    }
    let corner = |v: usize, i: usize| offset[v] + i % g.degree(v);
    let position = |v: usize, e: usize| {
        rot.order(v)
            .iter()
            .position(|&f| f == e)
            .expect("rotation lists every incident edge")
    };

    let mut edges = Vec::with_capacity(3 * g.edge_count());
    let mut painted = Vec::with_capacity(g.edge_count());
    for v in 0..n {
        for i in 0..g.degree(v) {
            edges.push((corner(v, i), corner(v, i + 1)));
        }
    }
    for (e, &(u, w)) in g.edges().iter().enumerate() {
        let pair = (corner(u, position(u, e)), corner(w, position(w, e)));
        edges.push(pair);
        painted.push(pair);
    }
    let out = PaintedGraph::new(offset[n], &edges, &painted)?;

    let mut order = vec![Vec::new(); offset[n]];
    for v in 0..n {
        let d = g.degree(v);
        for (i, &e) in rot.order(v).iter().enumerate() {
            let here = corner(v, i);
            let w = g.other_end(e, v);
            let across = corner(w, position(w, e));
            order[here] = vec![
                out.edge_index(here, across).expect("original edge"),
                out.edge_index(here, corner(v, i + 1)).expect("cycle edge"),
                out.edge_index(here, corner(v, i + d - 1)).expect("cycle edge"),
            ];
        }
    }
    let out_rot = RotationSystem::new(&out, order)?;
    Ok((out, out_rot))
}

/// Where a family starts.
#[derive(Debug, Clone)]
pub enum FamilySource {
    Seed(PaintedGraph),
    Target(GroupId),
}

/// One expansion `Γ_i` of a family.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    /// `i` in `Γ_i`: the number of expansions applied to the seed.
    pub index: usize,
    pub graph: PaintedGraph,
    pub rotation: RotationSystem,
    pub aut_p_order: usize,
    pub aut_p_group: GroupId,
    /// Screen of this member with its predecessor as seed.
    pub screen: SignatureScreen,
}

#[derive(Debug, Clone)]
pub struct Family {
    pub seed_name: Option<String>,
    pub seed: PaintedGraph,
    pub seed_group: GroupId,
    /// `Γ_1` was left out because the seed has a region adjacent to all
    /// others and its first expansion might be a signature link.
    pub skipped_first: bool,
    pub members: Vec<FamilyMember>,
}

/// Iterated cycle expansions of a seed: `count` b-prime crushtaceans whose
/// painted automorphism group is the automorphism group of the seed, each
/// with strictly more painted edges than the last. Every member is checked
/// and a failed check is an error.
pub fn generate_family(source: FamilySource, count: usize) -> Result<Family> {
    if count == 0 {
        return Err(Error::BadParameter("family size must be at least 1".into()));
    }
    let (seed_name, seed) = match source {
        FamilySource::Seed(g) => (None, g.without_paint()),
        FamilySource::Target(t) => {
            let s = seed_catalog(t)
                .into_iter()
                .next()
                .ok_or_else(|| Error::CatalogMiss(t.to_string()))?;
            (Some(s.name), s.graph)
        }
    };
    let aut = automorphisms(&seed, false)?;
    let seed_group = identify(&aut);
    if !is_k_connected(&seed, 3)? {
        return Err(Error::Precondition("seed must be 3-connected".into()));
    }
    let seed_rot = planar_embed(&seed).map_err(|_| Error::Precondition("seed must be planar".into()))?;
    let skipped_first = crate::crushtacean::has_universal_region(&seed, &seed_rot)?;

    let mut members = Vec::with_capacity(count);
    let (mut prev, mut prev_rot) = (seed.clone(), seed_rot);
    let mut index = 0;
    while members.len() < count {
        let (g, rot) = cycle_expand(&prev, &prev_rot)?;
        index += 1;
        let check = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::ConstructionCheck(format!("family member {index}: {what}")))
            }
        };
        check(validate_crushtacean(&g).valid, "not a crushtacean")?;
        check(classify_bprime(&g)? == BPrimeVerdict::BPrime, "not b-prime")?;
        let aut_p = automorphisms(&g, true)?;
        check(aut_p.order() == aut.order(), "automorphism group changed")?;
        let screen = signature_screen(&prev, &prev_rot)?;
        let keep = !(index == 1 && skipped_first);
        if keep {
            check(screen == SignatureScreen::NotSignature, "signature screen inconclusive")?;
            members.push(FamilyMember {
                index,
                graph: g.clone(),
                rotation: rot.clone(),
                aut_p_order: aut_p.order(),
                aut_p_group: identify(&aut_p),
                screen,
            });
        }
        prev = g;
        prev_rot = rot;
    }
    Ok(Family {
        seed_name,
        seed,
        seed_group,
        skipped_first,
        members,
    })
}
