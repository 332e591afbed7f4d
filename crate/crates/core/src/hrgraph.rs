//! The higher-rank graph of a colour tuple `C = (theta_1, ..., theta_N)`.
//!
//! Vertices are the `C`-right ends of `B(rho_C)`; a path of degree `n` is a
//! pair `(v, b)` with `b` in `B(sum n_i theta_i)` such that each `c_i (x) b`
//! lies in the Cartan component of `B(theta_i) (x) B(lambda)`.

use crate::atlas::Atlas;
use crate::braiding::right_ends;
use crate::error::{Error, Result};
use crate::par;
use crate::report::{Check, VerificationReport};
use crate::rootdata::{rational_rank, RootDatum, Weight};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

/// Pen colours for DOT output, cycled by colour index.
pub const PALETTE: [&str; 8] = [
    "red",
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "magenta",
    "cyan",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColourSet {
    colours: Vec<Weight>,
}

impl ColourSet {
    pub fn new(datum: &RootDatum, colours: Vec<Weight>) -> Result<Self> {
        for c in &colours {
            datum.check_dominant(c)?;
        }
        let rows: Vec<Vec<i64>> = colours.iter().map(|c| c.0.clone()).collect();
        if colours.is_empty()
            || colours.iter().any(Weight::is_zero)
            || rational_rank(&rows) < colours.len()
        {
            return Err(Error::BadColours);
        }
        Ok(ColourSet { colours })
    }

    /// `C = Pi`, all fundamental weights.
    pub fn fundamental(datum: &RootDatum) -> Self {
        ColourSet {
            colours: (0..datum.rank())
                .map(|i| datum.fundamental_weight(i))
                .collect(),
        }
    }

    pub fn colours(&self) -> &[Weight] {
        &self.colours
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn rho(&self) -> Weight {
        self.weight_of(&vec![1; self.len()])
    }

    /// `sum n_i theta_i`.
    pub fn weight_of(&self, degree: &[u32]) -> Weight {
        let mut w = Weight::zero(self.colours[0].rank());
        for (c, &n) in self.colours.iter().zip(degree) {
            w += &c.scale(n as i64);
        }
        w
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphPath {
    pub source: usize,
    pub degree: Vec<u32>,
    /// Index into `B(lambda)`, `lambda` the weight of the degree.
    pub element: usize,
    pub range: usize,
}

/// One coset of `W / W_{rho_C}` and the vertex it lands on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylVertex {
    pub word: Vec<usize>,
    pub orbit_weight: Weight,
    pub element: usize,
    pub vertex: usize,
}

#[derive(Debug)]
pub struct HigherRankGraph {
    atlas: Arc<Atlas>,
    colours: ColourSet,
    vertices: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    slices: RwLock<HashMap<Vec<u32>, Arc<Vec<GraphPath>>>>,
}

impl HigherRankGraph {
    pub fn build(atlas: Arc<Atlas>, colours: ColourSet) -> Result<Self> {
        let rho = colours.rho();
        let top = atlas.crystal(&rho)?;
        let ends = par::range_map(top.len(), |b| {
            right_ends(&atlas, &rho, b, colours.colours())
        });
        let mut vertices = ends.into_iter().collect::<Result<Vec<_>>>()?;
        vertices.sort();
        vertices.dedup();
        let index = vertices
            .iter()
            .enumerate()
            .map(|(k, v)| (v.clone(), k))
            .collect();
        Ok(HigherRankGraph {
            atlas,
            colours,
            vertices,
            index,
            slices: RwLock::default(),
        })
    }

    pub fn atlas(&self) -> &Arc<Atlas> {
        &self.atlas
    }

    pub fn colours(&self) -> &ColourSet {
        &self.colours
    }

    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn vertex_id(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }

    fn check_degree(&self, degree: &[u32]) -> Result<()> {
        if degree.len() != self.colours.len() {
            return Err(Error::BadDegree(degree.to_vec()));
        }
        Ok(())
    }

    /// The range of `(v, b)`, or `None` if it is not a path.
    pub fn range_of(&self, v: usize, degree: &[u32], b: usize) -> Result<Option<usize>> {
        self.check_degree(degree)?;
        let lambda = self.colours.weight_of(degree);
        let mut range = Vec::with_capacity(self.colours.len());
        for (theta, &c) in self.colours.colours().iter().zip(&self.vertices[v]) {
            let e = self.atlas.cartan(&[theta.clone(), lambda.clone()])?;
            let Some(k) = e.project(&[c, b]) else {
                return Ok(None);
            };
            range.push(crate::braiding::right_end(
                &self.atlas,
                &(theta + &lambda),
                k,
                theta,
            )?);
        }
        self.vertex_id(&range)
            .map(Some)
            .ok_or_else(|| Error::Inconsistent(format!("range {range:?} is not a vertex")))
    }

    /// `Lambda^n`, sorted by source then element.
    pub fn paths(&self, degree: &[u32]) -> Result<Arc<Vec<GraphPath>>> {
        self.check_degree(degree)?;
        if let Some(p) = self.slices.read().unwrap().get(degree) {
            return Ok(p.clone());
        }
        let lambda = self.colours.weight_of(degree);
        let size = self.atlas.crystal(&lambda)?.len();
        let candidates: Vec<(usize, usize)> = (0..self.vertices.len())
            .flat_map(|v| (0..size).map(move |b| (v, b)))
            .collect();
        let found = par::map(&candidates, |&(v, b)| {
            self.range_of(v, degree, b).map(|r| {
                r.map(|range| GraphPath {
                    source: v,
                    degree: degree.to_vec(),
                    element: b,
                    range,
                })
            })
        });
        let mut paths = Vec::new();
        for f in found {
            paths.extend(f?);
        }
        let paths = Arc::new(paths);
        let mut slices = self.slices.write().unwrap();
        Ok(slices.entry(degree.to_vec()).or_insert(paths).clone())
    }

    pub fn identity(&self, v: usize) -> GraphPath {
        GraphPath {
            source: v,
            degree: vec![0; self.colours.len()],
            element: 0,
            range: v,
        }
    }

    /// `later . earlier`, defined when `r(earlier) = s(later)`:
    /// `(v', b') . (v, b) = (v, phi(b (x) b'))`.
    pub fn compose(&self, later: &GraphPath, earlier: &GraphPath) -> Result<GraphPath> {
        if earlier.range != later.source {
            return Err(Error::NotComposable {
                range: earlier.range,
                source_vertex: later.source,
            });
        }
        let l1 = self.colours.weight_of(&earlier.degree);
        let l2 = self.colours.weight_of(&later.degree);
        let e = self.atlas.cartan(&[l1, l2])?;
        let element = e
            .project(&[earlier.element, later.element])
            .ok_or_else(|| Error::Inconsistent("composite left the Cartan component".into()))?;
        Ok(GraphPath {
            source: earlier.source,
            degree: earlier
                .degree
                .iter()
                .zip(&later.degree)
                .map(|(a, b)| a + b)
                .collect(),
            element,
            range: later.range,
        })
    }

    /// Every degree `n` with `0 <= n <= bound` componentwise, lexicographic.
    pub fn degrees_up_to(&self, bound: &[u32]) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for &b in bound {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=b).map(move |k| {
                        let mut p = prefix.clone();
                        p.push(k);
                        p
                    })
                })
                .collect();
        }
        out
    }

    /// Unique factorization of every path of degree `m + n`.
    pub fn check_factorization(&self, m: &[u32], n: &[u32]) -> Result<Check> {
        let total: Vec<u32> = m.iter().zip(n).map(|(a, b)| a + b).collect();
        let whole = self.paths(&total)?;
        let (pn, pm) = (self.paths(n)?, self.paths(m)?);
        let firsts = by_source(&pn);
        let seconds = by_source(&pm);
        let outcomes = par::map(&whole, |e| {
            let mut count = 0;
            for e2 in firsts.get(&e.source).into_iter().flatten() {
                for e1 in seconds.get(&e2.range).into_iter().flatten() {
                    match self.compose(e1, e2) {
                        Ok(x) if &x == e => count += 1,
                        Ok(_) => {}
                        Err(err) => return Some(err.to_string()),
                    }
                }
            }
            (count != 1).then(|| format!("{e:?} has {count} factorizations"))
        });
        Ok(Check::from_outcomes(
            format!("factorization {m:?}+{n:?}"),
            outcomes,
        ))
    }

    /// `v Lambda^n` and `Lambda^n v` are nonempty for every vertex, and
    /// `v Lambda^0` is a single path.
    pub fn check_sources_and_sinks(&self, bound: &[u32]) -> Result<Check> {
        let mut check = Check::new("no sources or sinks");
        for deg in self.degrees_up_to(bound) {
            let paths = self.paths(&deg)?;
            let mut into = vec![0usize; self.vertices.len()];
            let mut out = vec![0usize; self.vertices.len()];
            for p in paths.iter() {
                into[p.range] += 1;
                out[p.source] += 1;
            }
            let zero = deg.iter().all(|&x| x == 0);
            for v in 0..self.vertices.len() {
                let bad = into[v] == 0 || out[v] == 0 || (zero && (into[v] != 1 || out[v] != 1));
                check.record(
                    bad.then(|| {
                        format!("vertex {v} degree {deg:?}: in {} out {}", into[v], out[v])
                    }),
                );
            }
        }
        Ok(check)
    }

    pub fn vertex_order(&self) -> Result<VertexOrder> {
        let crystals = self
            .colours
            .colours()
            .iter()
            .map(|c| self.atlas.crystal(c))
            .collect::<Result<Vec<_>>>()?;
        let below = crystals
            .iter()
            .map(|c| {
                (0..c.len())
                    .map(|top| (0..c.len()).map(|b| c.below(b, top)).collect())
                    .collect()
            })
            .collect();
        Ok(VertexOrder { below })
    }

    /// `s(e) <= r(e)` for every path up to the bound.
    pub fn check_order(&self, bound: &[u32]) -> Result<Check> {
        let order = self.vertex_order()?;
        let mut check = Check::new("source below range");
        for deg in self.degrees_up_to(bound) {
            for e in self.paths(&deg)?.iter() {
                let ok = order.le(&self.vertices[e.source], &self.vertices[e.range]);
                check.record((!ok).then(|| format!("{e:?}")));
            }
        }
        Ok(check)
    }

    /// `(e3 e2) e1 = e3 (e2 e1)` on composable triples of nonzero degree
    /// whose total stays within the bound.
    pub fn check_associativity(&self, bound: &[u32]) -> Result<Check> {
        let degrees: Vec<Vec<u32>> = self
            .degrees_up_to(bound)
            .into_iter()
            .filter(|d| d.iter().any(|&x| x > 0))
            .collect();
        let within = |d: &[u32]| d.iter().zip(bound).all(|(a, b)| a <= b);
        let add =
            |a: &[u32], b: &[u32]| -> Vec<u32> { a.iter().zip(b).map(|(x, y)| x + y).collect() };
        let mut check = Check::new("associativity");
        for d1 in &degrees {
            for d2 in &degrees {
                for d3 in &degrees {
                    if !within(&add(&add(d1, d2), d3)) {
                        continue;
                    }
                    let (p1, p2, p3) = (self.paths(d1)?, self.paths(d2)?, self.paths(d3)?);
                    let (p2, p3) = (by_source(&p2), by_source(&p3));
                    for e1 in p1.iter() {
                        for e2 in p2.get(&e1.range).into_iter().flatten() {
                            for e3 in p3.get(&e2.range).into_iter().flatten() {
                                let a = self.compose(&self.compose(e3, e2)?, e1)?;
                                let b = self.compose(e3, &self.compose(e2, e1)?)?;
                                check.record((a != b).then(|| format!("{e1:?} {e2:?} {e3:?}")));
                            }
                        }
                    }
                }
            }
        }
        Ok(check)
    }

    /// `w W_{rho_C} -> R_C(b_w)`, one entry per coset in enumeration order.
    pub fn weyl_vertex_map(&self) -> Result<Vec<WeylVertex>> {
        let datum = self.atlas.datum();
        let weyl = datum.weyl_group()?;
        let rho = self.colours.rho();
        let top = self.atlas.crystal(&rho)?;
        let mut out = Vec::new();
        for (w, orbit_weight) in weyl.orbit(&rho) {
            let word = weyl.elements()[w].word.clone();
            let element = top.extremal(&word);
            let tuple = right_ends(&self.atlas, &rho, element, self.colours.colours())?;
            let vertex = self
                .vertex_id(&tuple)
                .ok_or_else(|| Error::Inconsistent("Weyl vertex missing".into()))?;
            out.push(WeylVertex {
                word,
                orbit_weight,
                element,
                vertex,
            });
        }
        Ok(out)
    }

    /// The Weyl map is injective, hits extremal weights, and for type A with
    /// fundamental colours agrees with the tensor factors of `b_w`.
    pub fn check_weyl_map(&self) -> Result<Check> {
        let map = self.weyl_vertex_map()?;
        let rho = self.colours.rho();
        let top = self.atlas.crystal(&rho)?;
        let factors = self.atlas.cartan(self.colours.colours())?;
        let minuscule = self.atlas.datum().cartan_type().family == crate::rootdata::Family::A
            && self
                .colours
                .colours()
                .iter()
                .all(|c| c.0.iter().sum::<i64>() == 1);
        let mut check = Check::new("Weyl vertex map");
        let mut seen = HashSet::new();
        for wv in &map {
            let mut bad = !seen.insert(wv.vertex) || top.weights()[wv.element] != wv.orbit_weight;
            if minuscule {
                bad |= factors.tuple(wv.element) != self.vertices[wv.vertex].as_slice();
            }
            check.record(bad.then(|| format!("{wv:?}")));
        }
        Ok(check)
    }

    pub fn graph_suite(&self, bound: &[u32]) -> Result<VerificationReport> {
        let mut report = VerificationReport::default();
        for m in self.degrees_up_to(bound) {
            for n in self.degrees_up_to(bound) {
                if m.iter().zip(&n).zip(bound).all(|((a, b), c)| a + b <= *c) {
                    report.push(self.check_factorization(&m, &n)?);
                }
            }
        }
        report.push(self.check_sources_and_sinks(bound)?);
        report.push(self.check_order(bound)?);
        report.push(self.check_associativity(bound)?);
        report.push(self.check_weyl_map()?);
        Ok(report)
    }

    pub fn to_json(&self, bound: &[u32]) -> Result<GraphJson> {
        let mut paths = Vec::new();
        for deg in self.degrees_up_to(bound) {
            if deg.iter().all(|&x| x == 0) {
                continue;
            }
            for p in self.paths(&deg)?.iter() {
                paths.push(JsonPath {
                    source: p.source,
                    degree: p.degree.clone(),
                    element: p.element + 1,
                    range: p.range,
                });
            }
        }
        Ok(GraphJson {
            cartan_type: self.atlas.datum().cartan_type().to_string(),
            colours: self.colours.colours().iter().map(|c| c.0.clone()).collect(),
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, t)| JsonVertex {
                    id,
                    tuple: t.iter().map(|x| x + 1).collect(),
                })
                .collect(),
            paths,
        })
    }

    /// The 1-skeleton: edges of degree `e_i` for each colour with bound at least 1.
    pub fn to_dot(&self, bound: &[u32]) -> Result<String> {
        let mut s = format!("digraph \"{}\" {{\n", self.atlas.datum().cartan_type());
        for (id, t) in self.vertices.iter().enumerate() {
            let label: Vec<String> = t.iter().map(|x| (x + 1).to_string()).collect();
            writeln!(s, "  v{id} [label=\"v{id} ({})\"];", label.join(",")).unwrap();
        }
        for i in 0..self.colours.len() {
            if bound.get(i).copied().unwrap_or(0) == 0 {
                continue;
            }
            let mut deg = vec![0; self.colours.len()];
            deg[i] = 1;
            let pen = PALETTE[i % PALETTE.len()];
            for p in self.paths(&deg)?.iter() {
                writeln!(
                    s,
                    "  v{} -> v{} [color=\"{pen}\", label=\"{}:{}\"];",
                    p.source,
                    p.range,
                    i + 1,
                    p.element + 1
                )
                .unwrap();
            }
        }
        s.push_str("}\n");
        Ok(s)
    }
}

fn by_source(paths: &[GraphPath]) -> HashMap<usize, Vec<&GraphPath>> {
    let mut map: HashMap<usize, Vec<&GraphPath>> = HashMap::new();
    for p in paths {
        map.entry(p.source).or_default().push(p);
    }
    map
}

/// Componentwise order on vertices: `v <= w` when each `v_i` is reachable
/// from `w_i` by lowering operators.
#[derive(Clone, Debug)]
pub struct VertexOrder {
    /// `below[i][top][b]`.
    below: Vec<Vec<Vec<bool>>>,
}

impl VertexOrder {
    pub fn le(&self, v: &[usize], w: &[usize]) -> bool {
        self.below
            .iter()
            .zip(v.iter().zip(w))
            .all(|(table, (&b, &top))| table[top][b])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonVertex {
    pub id: usize,
    /// 1-based element indices.
    pub tuple: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonPath {
    pub source: usize,
    pub degree: Vec<u32>,
    /// 1-based element index.
    pub element: usize,
    pub range: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub colours: Vec<Vec<i64>>,
    pub vertices: Vec<JsonVertex>,
    pub paths: Vec<JsonPath>,
}

impl GraphJson {
    /// Path counts keyed by degree.
    pub fn degree_counts(&self) -> BTreeMap<Vec<u32>, usize> {
        let mut m = BTreeMap::new();
        for p in &self.paths {
            *m.entry(p.degree.clone()).or_default() += 1;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(label: &str, colours: &[&[i64]]) -> HigherRankGraph {
        let atlas = Atlas::parse(label).unwrap();
        let cs = ColourSet::new(
            atlas.datum(),
            colours.iter().map(|c| Weight(c.to_vec())).collect(),
        )
        .unwrap();
        HigherRankGraph::build(atlas, cs).unwrap()
    }

    #[test]
    fn su3_vertices() {
        let g = graph("A2", &[&[1, 0], &[0, 1]]);
        let one_based: Vec<Vec<usize>> = g
            .vertices()
            .iter()
            .map(|t| t.iter().map(|x| x + 1).collect())
            .collect();
        assert_eq!(
            one_based,
            vec![
                vec![1, 1],
                vec![1, 2],
                vec![2, 1],
                vec![2, 3],
                vec![3, 2],
                vec![3, 3]
            ]
        );
    }

    #[test]
    fn su3_edge_example() {
        let g = graph("A2", &[&[1, 0], &[0, 1]]);
        // (v5, a2) has range v3.
        assert_eq!(g.range_of(4, &[1, 0], 1).unwrap(), Some(2));
        assert_eq!(g.paths(&[1, 0]).unwrap().len(), 12);
        assert_eq!(g.paths(&[0, 0]).unwrap().len(), 6);
    }

    #[test]
    fn compose_with_identity() {
        let g = graph("A2", &[&[1, 0], &[0, 1]]);
        for e in g.paths(&[1, 1]).unwrap().iter() {
            assert_eq!(&g.compose(&g.identity(e.range), e).unwrap(), e);
            assert_eq!(&g.compose(e, &g.identity(e.source)).unwrap(), e);
        }
        let loops: Vec<GraphPath> = g
            .paths(&[1, 0])
            .unwrap()
            .iter()
            .filter(|e| e.source == 0 && e.range == 0)
            .cloned()
            .collect();
        let twice = g.compose(&loops[0], &loops[0]).unwrap();
        assert_eq!((twice.degree.clone(), twice.source), (vec![2, 0], 0));
        assert!(g.compose(&g.identity(1), &g.identity(0)).is_err());
    }

    #[test]
    fn rejects_bad_colours() {
        let atlas = Atlas::parse("A2").unwrap();
        let d = atlas.datum();
        assert!(ColourSet::new(d, vec![Weight(vec![1, 0]), Weight(vec![2, 0])]).is_err());
        assert!(ColourSet::new(d, vec![Weight(vec![0, 0])]).is_err());
        assert!(ColourSet::new(d, vec![Weight(vec![-1, 1])]).is_err());
        assert!(ColourSet::new(d, vec![]).is_err());
    }

    #[test]
    fn suites_pass() {
        for (label, cs) in [
            ("A2", vec![vec![1, 0], vec![0, 1]]),
            ("C2", vec![vec![1, 0], vec![0, 1]]),
            ("A2", vec![vec![1, 0]]),
        ] {
            let refs: Vec<&[i64]> = cs.iter().map(|c| c.as_slice()).collect();
            let g = graph(label, &refs);
            let bound = vec![2; cs.len()];
            let r = g.graph_suite(&bound).unwrap();
            assert!(r.passed(), "{label}\n{r}");
        }
    }
}
