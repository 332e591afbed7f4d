//! Acceptance gate: one PASS/FAIL line per criterion, each with a pinned
//! time limit. Exits non-zero if any criterion fails or overruns.

use qcrystal::braiding::{
    braiding_table, check_braid, check_hexagon, check_longest_word, sigma_word,
};
use qcrystal::crystal::{crystal_suite, dominant_weights_up_to};
use qcrystal::hrgraph::{ColourSet, HigherRankGraph};
use qcrystal::soibelman::Soibelman;
use qcrystal::toeplitz::ShiftMonomial;
use qcrystal::{Atlas, Weight};
use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

type Outcome = Result<(), String>;

/// Name, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn graph(label: &str, colours: &[&[i64]]) -> Result<HigherRankGraph, String> {
    let atlas = Atlas::parse(label).map_err(|e| e.to_string())?;
    let cs = ColourSet::new(atlas.datum(), colours.iter().map(|c| w(c)).collect())
        .map_err(|e| e.to_string())?;
    HigherRankGraph::build(atlas, cs).map_err(|e| e.to_string())
}

fn fundamental_graph(label: &str) -> Result<HigherRankGraph, String> {
    let atlas = Atlas::parse(label).map_err(|e| e.to_string())?;
    let cs = ColourSet::fundamental(atlas.datum());
    HigherRankGraph::build(atlas, cs).map_err(|e| e.to_string())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// 1-based `(source, range)` pairs of a degree slice, sorted.
fn slice(g: &HigherRankGraph, degree: &[u32]) -> Result<Vec<(usize, usize)>, String> {
    let mut out: Vec<(usize, usize)> = g
        .paths(degree)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|p| (p.source + 1, p.range + 1))
        .collect();
    out.sort();
    Ok(out)
}

fn su3_vertices() -> Outcome {
    let g = graph("A2", &[&[1, 0], &[0, 1]])?;
    let got: Vec<Vec<usize>> = g
        .vertices()
        .iter()
        .map(|t| t.iter().map(|x| x + 1).collect())
        .collect();
    let want = vec![
        vec![1, 1],
        vec![1, 2],
        vec![2, 1],
        vec![2, 3],
        vec![3, 2],
        vec![3, 3],
    ];
    ensure(got == want, || format!("vertices {got:?}"))
}

fn su3_edges() -> Outcome {
    let g = graph("A2", &[&[1, 0], &[0, 1]])?;
    let mut want = vec![
        (1, 1),
        (2, 2),
        (3, 1),
        (3, 3),
        (4, 2),
        (4, 4),
        (5, 2),
        (5, 3),
        (5, 5),
        (6, 2),
        (6, 4),
        (6, 6),
    ];
    want.sort();
    let first = slice(&g, &[1, 0])?;
    ensure(first == want, || format!("colour 1 slice {first:?}"))?;
    // The diagram flip swaps the two colours and sends (a_i, b_j) to (a_j, b_i).
    let flip = |v: usize| -> Result<usize, String> {
        let t = &g.vertices()[v - 1];
        g.vertex_id(&[t[1], t[0]])
            .map(|x| x + 1)
            .ok_or_else(|| format!("vertex {v} has no mirror"))
    };
    let mut mirrored = Vec::new();
    for &(s, r) in &first {
        mirrored.push((flip(s)?, flip(r)?));
    }
    mirrored.sort();
    let second = slice(&g, &[0, 1])?;
    ensure(second == mirrored, || format!("colour 2 slice {second:?}"))
}

fn su3_braiding() -> Outcome {
    let atlas = Atlas::parse("A2").map_err(|e| e.to_string())?;
    let rows = braiding_table(&atlas, &w(&[1, 0]), &w(&[0, 1])).map_err(|e| e.to_string())?;
    // a_i (x) b_j -> b_k (x) a_l as ((i, j), (k, l)).
    let want = [
        ((1, 1), Some((1, 1))),
        ((1, 2), Some((2, 1))),
        ((1, 3), None),
        ((2, 1), Some((1, 2))),
        ((2, 2), Some((3, 1))),
        ((2, 3), Some((3, 2))),
        ((3, 1), Some((2, 2))),
        ((3, 2), Some((2, 3))),
        ((3, 3), Some((3, 3))),
    ];
    let got: Vec<_> = rows
        .iter()
        .map(|((b, c), img)| ((b + 1, c + 1), img.map(|(x, y)| (x + 1, y + 1))))
        .collect();
    ensure(got == want, || format!("table {got:?}"))
}

fn c2_graph() -> Outcome {
    let g = fundamental_graph("C2")?;
    ensure(g.vertices().len() == 10, || {
        format!("{} vertices", g.vertices().len())
    })?;
    let map = g.weyl_vertex_map().map_err(|e| e.to_string())?;
    let hit: HashSet<usize> = map.iter().map(|x| x.vertex).collect();
    ensure(map.len() == 8 && hit.len() == 8, || {
        format!("Weyl map hits {} vertices", hit.len())
    })?;
    let missed: BTreeSet<Vec<usize>> = (0..10)
        .filter(|v| !hit.contains(v))
        .map(|v| g.vertices()[v].iter().map(|x| x + 1).collect())
        .collect();
    let want: BTreeSet<Vec<usize>> = [vec![1, 3], vec![3, 3]].into_iter().collect();
    ensure(missed == want, || {
        format!("outside the Weyl image: {missed:?}")
    })?;
    for deg in [[1, 0], [0, 1]] {
        for p in g.paths(&deg).map_err(|e| e.to_string())?.iter() {
            let t: Vec<usize> = g.vertices()[p.source].iter().map(|x| x + 1).collect();
            ensure(!(p.source == p.range && want.contains(&t)), || {
                format!("loop at {t:?} in degree {deg:?}")
            })?;
        }
    }
    Ok(())
}

fn sphere_graph() -> Outcome {
    let g = graph("A2", &[&[1, 0]])?;
    ensure(g.vertices().len() == 3, || {
        format!("{} vertices", g.vertices().len())
    })?;
    let got = slice(&g, &[1])?;
    let want: Vec<(usize, usize)> = (1..=3).flat_map(|i| (1..=i).map(move |j| (i, j))).collect();
    ensure(got == want, || format!("edges {got:?}"))?;
    let loops = got.iter().filter(|(s, r)| s == r).count();
    ensure(loops == 3, || format!("{loops} loops"))
}

fn factorization() -> Outcome {
    for label in ["A2", "C2"] {
        let g = fundamental_graph(label)?;
        let bound = [2u32, 2];
        for m in g.degrees_up_to(&bound) {
            for n in g.degrees_up_to(&bound) {
                if m[0] + n[0] > 2 || m[1] + n[1] > 2 {
                    continue;
                }
                let c = g.check_factorization(&m, &n).map_err(|e| e.to_string())?;
                ensure(c.passed(), || format!("{label}: {c:?}"))?;
            }
        }
    }
    Ok(())
}

fn operator_model() -> Outcome {
    for label in ["A1", "A2", "C2"] {
        let g = fundamental_graph(label)?;
        let atlas = g.atlas().clone();
        let s = Soibelman::new(atlas.clone()).map_err(|e| e.to_string())?;
        let d = atlas.datum();
        let mut weights = vec![d.zero()];
        weights.extend((0..d.rank()).map(|i| d.fundamental_weight(i)));
        if d.rank() > 1 {
            weights.push(d.rho());
        }
        let mut report = s.relation_suite(&weights).map_err(|e| e.to_string())?;
        report.extend(
            s.kp_suite(&g, &vec![1; d.rank()])
                .map_err(|e| e.to_string())?,
        );
        ensure(report.passed(), || format!("{label}\n{report}"))?;
    }
    Ok(())
}

fn triples(atlas: &Atlas) -> Vec<[Weight; 3]> {
    let f: Vec<Weight> = (0..atlas.rank()).map(|i| atlas.fundamental(i)).collect();
    let mut out = Vec::new();
    for a in &f {
        for b in &f {
            for c in &f {
                out.push([a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    out
}

fn braiding_laws() -> Outcome {
    for label in ["A2", "C2"] {
        let atlas = Atlas::parse(label).map_err(|e| e.to_string())?;
        for t in triples(&atlas) {
            let h = check_hexagon(&atlas, &t).map_err(|e| e.to_string())?;
            let b = check_braid(&atlas, &t).map_err(|e| e.to_string())?;
            ensure(h.passed() && b.passed(), || format!("{label} {h:?} {b:?}"))?;
        }
    }
    let atlas = Atlas::parse("A2").map_err(|e| e.to_string())?;
    let factors = [w(&[1, 0]), w(&[0, 1]), w(&[1, 0])];
    for t in atlas
        .tensor(&factors)
        .map_err(|e| e.to_string())?
        .elements()
    {
        let x = sigma_word(&atlas, &factors, &[0, 1, 0], &t).map_err(|e| e.to_string())?;
        let y = sigma_word(&atlas, &factors, &[1, 0, 1], &t).map_err(|e| e.to_string())?;
        ensure(x == y, || format!("reduced words disagree at {t:?}"))?;
    }
    Ok(())
}

fn longest_word() -> Outcome {
    for label in ["A2", "C2"] {
        let atlas = Atlas::parse(label).map_err(|e| e.to_string())?;
        for t in triples(&atlas) {
            let c = check_longest_word(&atlas, &t).map_err(|e| e.to_string())?;
            ensure(c.passed() && c.cases > 0, || format!("{label} {c:?}"))?;
        }
    }
    Ok(())
}

fn oracle() -> Outcome {
    for label in ["A1", "A2", "A3", "B2", "C2", "G2"] {
        let atlas: Arc<Atlas> = Atlas::parse(label).map_err(|e| e.to_string())?;
        let ws = dominant_weights_up_to(atlas.rank(), 2);
        let report = crystal_suite(&atlas, &ws).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("{label}\n{report}"))?;
    }
    Ok(())
}

fn toeplitz_faithful() -> Outcome {
    let mut seen = HashSet::new();
    for a in 0..=5 {
        for b in 0..=5 {
            let m = ShiftMonomial::new(a, b).truncated_matrix(13);
            ensure(seen.insert(m), || format!("T^{a} T*^{b} collides"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("SU(3) vertex table", 1, su3_vertices),
        ("SU(3) colour slices", 1, su3_edges),
        ("SU(3) Cartan braiding", 1, su3_braiding),
        ("C2 graph and Weyl image", 5, c2_graph),
        ("sphere graph", 1, sphere_graph),
        ("unique factorization up to (2,2)", 60, factorization),
        ("operator-model relations and KP1-KP4", 120, operator_model),
        (
            "hexagon, braid and reduced-word independence",
            60,
            braiding_laws,
        ),
        ("longest-word criterion", 60, longest_word),
        ("Weyl dimension and multiplicity oracle", 60, oracle),
        ("shift monomials are distinct", 1, toeplitz_faithful),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let late = took > Duration::from_secs(*limit);
        let tag = if result.is_ok() && !late {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "{tag} {:>2} {name} ({:.3}s, limit {limit}s)",
            k + 1,
            took.as_secs_f64()
        );
        if let Err(msg) = &result {
            println!("     {msg}");
        }
        if tag == "FAIL" {
            failed += 1;
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
