//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so the summary is always printed; exits non-zero on any failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use crushtacean::automorphism::{automorphisms, find_isomorphism};
use crushtacean::crushtacean::{
    all_three_edge_cuts, classify_bprime, knot_circles, nerve_check, symmetry_report,
    validate_crushtacean, BPrimeVerdict, Reason, SignatureScreen,
};
use crushtacean::families::{self, cycle_expand, generate_family, FamilySource};
use crushtacean::graph::{dual, is_k_connected, planar_embed, PaintedGraph};
use crushtacean::permgroup::{identify, GroupId};
use crushtacean::Permutation;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn borromean() -> Outcome {
    let g = families::gamma_borromean();
    let aut = automorphisms(&g, false).unwrap();
    let aut_p = automorphisms(&g, true).unwrap();
    ensure(aut.order() == 24, || format!("|Aut| = {}", aut.order()))?;
    ensure(aut_p.order() == 8, || format!("|Aut_p| = {}", aut_p.order()))?;
    let id = identify(&aut_p);
    ensure(id == GroupId::Dihedral(4), || format!("Aut_p identified as {id}"))?;
    let r = symmetry_report(&g, None).unwrap();
    ensure(r.sym_plus_link.order() == Some(24), || format!("{:?}", r.sym_plus_link))?;
    ensure(r.link_index_over_aut_p == Some(3), || format!("index {:?}", r.link_index_over_aut_p))?;
    Ok("|Aut| 24, Aut_p = D4, Sym+ order 24, index 3".into())
}

fn pretzel_table() -> Outcome {
    for n in 3..=8 {
        let g = families::gamma_pretzel(n).unwrap();
        let aut_p = automorphisms(&g, true).unwrap();
        ensure(aut_p.order() == 4 * n, || format!("n={n}: |Aut_p| = {}", aut_p.order()))?;
        let want = if n % 2 == 1 {
            GroupId::Dihedral(2 * n)
        } else {
            GroupId::DihedralTimesZ2(n)
        };
        let got = identify(&aut_p);
        ensure(got == want, || format!("n={n}: identified {got}, expected {want}"))?;
        if n == 4 {
            let aut = automorphisms(&g, false).unwrap();
            ensure(aut.order() == 48, || format!("n=4: |Aut| = {}", aut.order()))?;
        }
        let r = symmetry_report(&g, None).unwrap();
        ensure(r.sym_plus_link.order() == Some(8 * n), || {
            format!("n={n}: Sym+ {:?}", r.sym_plus_link)
        })?;
        ensure(r.link_index_over_aut_p == Some(2), || format!("n={n}: index"))?;
    }
    Ok("n = 3..8: |Aut_p| = 4n with the expected type, Sym+ order 8n".into())
}

fn ochain() -> Outcome {
    for n in 2..=6 {
        let g = families::gamma_ochain(n).unwrap();
        let aut_p = automorphisms(&g, true).unwrap();
        ensure(aut_p.order() == 4, || format!("n={n}: |Aut_p| = {}", aut_p.order()))?;
        ensure(identify(&aut_p) == GroupId::Klein, || format!("n={n}: not Klein"))?;
        let v = classify_bprime(&g).unwrap();
        ensure(matches!(v, BPrimeVerdict::BComposite { .. }), || format!("n={n}: {v:?}"))?;
        let r = symmetry_report(&g, None).unwrap();
        ensure(r.sym_plus_link.order() == Some(8 * n), || format!("n={n}: Sym+ {:?}", r.sym_plus_link))?;
        ensure(r.link_index_over_aut_p == Some(2 * n), || format!("n={n}: index"))?;
    }
    Ok("n = 2..6: Aut_p = Z2xZ2, b-composite, Sym+ order 8n, index 2n".into())
}

fn wheel_expansion() -> Outcome {
    let w5 = families::wheel(5).unwrap();
    let (g, rot) = cycle_expand(&w5, &planar_embed(&w5).unwrap()).unwrap();
    let sizes = (g.vertex_count(), g.edge_count(), g.painted().len());
    ensure(sizes == (20, 30, 10), || format!("sizes {sizes:?}"))?;
    let ks = knot_circles(&g, &rot).unwrap();
    ensure(ks.knot_count() == 6 && ks.crossing_count() == 10, || {
        format!("{} knot circles, {} crossing circles", ks.knot_count(), ks.crossing_count())
    })?;
    Ok("W5 expansion: 20/30/10, 6 knot circles, 10 crossing circles".into())
}

fn expansion_suite() -> Outcome {
    let seeds = common::seeds();
    for (name, s) in &seeds {
        let g = common::expand(s);
        ensure(validate_crushtacean(&g).valid, || format!("{name}: invalid"))?;
        ensure(classify_bprime(&g).unwrap() == BPrimeVerdict::BPrime, || format!("{name}: not b-prime"))?;
        let seed_order = automorphisms(s, false).unwrap().order();
        let aut = automorphisms(&g, false).unwrap().order();
        let aut_p = automorphisms(&g, true).unwrap().order();
        ensure(aut == seed_order && aut_p == seed_order, || {
            format!("{name}: |Aut_p| {aut_p}, |Aut| {aut}, seed {seed_order}")
        })?;
    }
    Ok(format!("{} seeds: valid, b-prime, |Aut_p| = |Aut| = |Aut(seed)|", seeds.len()))
}

fn family_pipeline() -> Outcome {
    let targets = [
        GroupId::Dihedral(5),
        GroupId::DihedralTimesZ2(6),
        GroupId::S4xZ2,
        GroupId::A5xZ2,
    ];
    for t in targets {
        let f = generate_family(FamilySource::Target(t), 3).map_err(|e| format!("{t}: {e}"))?;
        ensure(f.members.len() == 3, || format!("{t}: {} members", f.members.len()))?;
        let mut last = 0;
        for m in &f.members {
            ensure(validate_crushtacean(&m.graph).valid, || format!("{t}: member {} invalid", m.index))?;
            ensure(classify_bprime(&m.graph).unwrap() == BPrimeVerdict::BPrime, || {
                format!("{t}: member {} not b-prime", m.index)
            })?;
            let got = identify(&automorphisms(&m.graph, true).unwrap());
            ensure(got == t, || format!("{t}: member {} has Aut_p {got}", m.index))?;
            ensure(m.screen == SignatureScreen::NotSignature, || format!("{t}: member {} screen", m.index))?;
            let p = m.graph.painted().len();
            ensure(p > last, || format!("{t}: painted counts not increasing"))?;
            last = p;
        }
    }
    Ok("D5, D6xZ2, S4xZ2, A5xZ2: three checked members each".into())
}

fn cut_parity() -> Outcome {
    let mut cuts = 0;
    for (name, g) in common::corpus() {
        for c in all_three_edge_cuts(&g).unwrap() {
            // painted counts computed directly from the edge set
            let p = c.edges.iter().filter(|&&e| g.painted().contains(&e)).count();
            ensure(p == 1 || p == 3, || format!("{name}: cut {:?} has {p} painted", c.edges))?;
            cuts += 1;
        }
    }
    Ok(format!("{cuts} cuts, all with 1 or 3 painted edges"))
}

fn oracles() -> Outcome {
    // (a) catalog types up to order 240 are pairwise non-isomorphic and
    // identify names each realization and its relabelings correctly
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut compared = 0;
    for order in 1..=240 {
        let groups: Vec<(GroupId, _)> = GroupId::candidates(order)
            .into_iter()
            .map(|id| (id, id.realize().unwrap()))
            .collect();
        for (i, (a, ga)) in groups.iter().enumerate() {
            let mut images: Vec<usize> = (0..ga.degree()).collect();
            images.shuffle(&mut rng);
            let conj = ga.conjugate(&Permutation::from_images(&images).unwrap()).unwrap();
            ensure(identify(&conj) == *a, || format!("relabeled {a} misidentified"))?;
            if order <= 48 {
                ensure(common::brute_force_isomorphic(ga, &conj), || {
                    format!("{a} not isomorphic to its relabeling")
                })?;
            }
            for (b, gb) in &groups[i + 1..] {
                compared += 1;
                ensure(!common::brute_force_isomorphic(ga, gb), || format!("{a} isomorphic to {b}"))?;
            }
        }
    }
    // (b) 3-connectivity against max flow
    let mut rng = ChaCha8Rng::seed_from_u64(0xf10);
    let mut not3 = 0;
    for i in 0..50 {
        let g = if i % 3 == 2 {
            common::glued_cubic(&mut rng)
        } else {
            let steps = rng.random_range(0..12);
            common::random_polyhedral_cubic(&mut rng, steps)
        };
        let flow = common::vertex_connectivity(&g) >= 3;
        ensure(is_k_connected(&g, 3).unwrap() == flow, || format!("graph {i}: mismatch"))?;
        not3 += usize::from(!flow);
    }
    // (c) the dual of the dual is the original
    for (name, g) in common::corpus() {
        let d = dual(&g, &planar_embed(&g).unwrap()).unwrap();
        let dd = dual(&d.graph, &d.rotation).unwrap();
        ensure(find_isomorphism(&dd.graph, &g, true).is_some(), || format!("{name}: dual of dual differs"))?;
    }
    Ok(format!(
        "{compared} catalog pairs, 50 cubic graphs ({not3} not 3-connected), double duals"
    ))
}

fn round_trip() -> Outcome {
    let corpus = common::corpus();
    for (name, g) in &corpus {
        let nc = nerve_check(g, &planar_embed(g).unwrap()).unwrap();
        ensure(nc.is_triangulation && nc.one_painted_per_triangle, || format!("{name}: {nc:?}"))?;
    }
    let mut mutants: Vec<(PaintedGraph, Reason)> = Vec::new();
    for (_, g) in corpus.iter().take(10) {
        // unpaint one painted edge
        let painted = &g.painted()[1..];
        mutants.push((g.with_painted(painted).unwrap(), Reason::PaintingNotPerfectMatching));
    }
    for (_, g) in corpus.iter().skip(1).take(10) {
        // join two non-adjacent vertices
        let n = g.vertex_count();
        let (a, b) = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| g.edge_index(a, b).is_none())
            .unwrap();
        let mut edges = g.edges().to_vec();
        edges.push((a, b));
        let m = PaintedGraph::from_parts(n, &edges, g.painted()).unwrap();
        mutants.push((m, Reason::NotCubic));
    }
    for (i, (m, reason)) in mutants.iter().enumerate() {
        let v = validate_crushtacean(m);
        ensure(!v.valid && v.reasons.contains(reason), || format!("mutant {i}: {:?}", v.reasons))?;
    }
    Ok(format!("{} nerves checked, {} mutants rejected", corpus.len(), mutants.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("borromean data", borromean),
        ("pretzel table", pretzel_table),
        ("o-chain data", ochain),
        ("wheel expansion link", wheel_expansion),
        ("expansion automorphisms", expansion_suite),
        ("family pipeline", family_pipeline),
        ("cut parity", cut_parity),
        ("oracle equivalences", oracles),
        ("crushtacean round trip", round_trip),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
