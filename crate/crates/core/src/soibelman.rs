//! The `q = 0` Soibelman representation on shift operators, the projections
//! `P_b`, `P_v` and path operators `S_e`, and the relation suites checked
//! against them.
//!
//! Slot `m` of every operator belongs to letter `m` of the fixed reduced word
//! for `w0`. Generators are built by dynamic programming along the word: the
//! value at slot `m` sums, over the `i_m`-string of the current element, the
//! rank-one limit tensored with the value one slot further on, ending at the
//! highest-weight element.

use crate::atlas::Atlas;
use crate::braiding::{right_ends, sigma_irreducible};
use crate::crystal::{Crystal, CrystalGraph};
use crate::error::{Error, Result};
use crate::hrgraph::{GraphPath, HigherRankGraph};
use crate::par;
use crate::report::{Check, VerificationReport};
use crate::rootdata::Weight;
use crate::toeplitz::{sl2_limit, OperatorElement};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// Position of an element inside its `i`-string.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StringData {
    /// The top of the string, where `epsilon_i = 0`.
    pub top: usize,
    /// Steps down from the top.
    pub position: usize,
    /// `phi_i(top)`, so positions run over `0..=length`.
    pub length: usize,
}

pub fn string_data(c: &Crystal, i: usize, b: usize) -> StringData {
    let position = c.epsilon(i, &b) as usize;
    let length = position + c.phi(i, &b) as usize;
    let mut top = b;
    while let Some(x) = c.e(i, top) {
        top = x;
    }
    StringData {
        top,
        position,
        length,
    }
}

/// The rank-one limit for colour `i` between `a` and `b`: zero across
/// different `i`-strings, otherwise the shift-operator matrix coefficient.
pub fn restriction_limit(c: &Crystal, i: usize, a: usize, b: usize) -> Result<OperatorElement> {
    c.check_element(a)?;
    c.check_element(b)?;
    let (sa, sb) = (string_data(c, i, a), string_data(c, i, b));
    if sa.top != sb.top {
        return Ok(OperatorElement::zero(1));
    }
    sl2_limit(sa.length, sa.position, sb.position)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    F,
    V,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorImage {
    pub lambda: Weight,
    pub element: usize,
    pub kind: Kind,
    pub value: OperatorElement,
}

#[derive(Debug)]
struct Generators {
    f: Vec<OperatorElement>,
    v: Vec<OperatorElement>,
}

#[derive(Debug)]
pub struct Soibelman {
    atlas: Arc<Atlas>,
    word: Vec<usize>,
    cache: RwLock<HashMap<Weight, Arc<Generators>>>,
}

impl Soibelman {
    /// Uses the lexicographically smallest reduced word for `w0`.
    pub fn new(atlas: Arc<Atlas>) -> Result<Self> {
        let word = atlas.datum().weyl_group()?.longest().word.clone();
        Self::with_word(atlas, word)
    }

    pub fn with_word(atlas: Arc<Atlas>, word: Vec<usize>) -> Result<Self> {
        atlas.datum().check_longest_word(&word)?;
        Ok(Soibelman {
            atlas,
            word,
            cache: RwLock::default(),
        })
    }

    pub fn atlas(&self) -> &Arc<Atlas> {
        &self.atlas
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Number of tensor slots.
    pub fn slots(&self) -> usize {
        self.word.len()
    }

    pub fn unit(&self) -> OperatorElement {
        OperatorElement::unit(self.slots(), self.atlas.rank())
    }

    fn generators(&self, lambda: &Weight) -> Result<Arc<Generators>> {
        if let Some(g) = self.cache.read().unwrap().get(lambda) {
            return Ok(g.clone());
        }
        let c = self.atlas.crystal(lambda)?;
        let n = c.len();
        let mut next: Vec<OperatorElement> = (0..n).map(|_| OperatorElement::zero(0)).collect();
        next[0] = OperatorElement::monomial(vec![], lambda.clone());
        for &i in self.word.iter().rev() {
            let strings: Vec<StringData> = (0..n).map(|b| string_data(&c, i, b)).collect();
            let cur = par::range_map(n, |a| {
                let sa = strings[a];
                let mut acc = OperatorElement::zero(next[a].len() + 1);
                // Walk up the string from `a` to its top.
                let mut b = Some(a);
                while let Some(x) = b {
                    if !next[x].is_zero() {
                        let m = sl2_limit(sa.length, sa.position, strings[x].position)?;
                        acc = &acc + &m.tensor(&next[x]);
                    }
                    b = c.e(i, x);
                }
                Ok(acc)
            });
            next = cur.into_iter().collect::<Result<Vec<_>>>()?;
        }
        let v = next.iter().map(OperatorElement::adjoint).collect();
        let g = Arc::new(Generators { f: next, v });
        let mut cache = self.cache.write().unwrap();
        Ok(cache.entry(lambda.clone()).or_insert(g).clone())
    }

    pub fn generator(&self, lambda: &Weight, a: usize, kind: Kind) -> Result<GeneratorImage> {
        let g = self.generators(lambda)?;
        let list = match kind {
            Kind::F => &g.f,
            Kind::V => &g.v,
        };
        let value = list
            .get(a)
            .ok_or(Error::BadElement {
                index: a,
                size: list.len(),
            })?
            .clone();
        Ok(GeneratorImage {
            lambda: lambda.clone(),
            element: a,
            kind,
            value,
        })
    }

    pub fn f(&self, lambda: &Weight, a: usize) -> Result<OperatorElement> {
        Ok(self.generator(lambda, a, Kind::F)?.value)
    }

    pub fn v(&self, lambda: &Weight, a: usize) -> Result<OperatorElement> {
        Ok(self.generator(lambda, a, Kind::V)?.value)
    }

    /// `P_b = v_b f_b`.
    pub fn projection_b(&self, lambda: &Weight, b: usize) -> Result<OperatorElement> {
        let g = self.generators(lambda)?;
        g.f.get(b).ok_or(Error::BadElement {
            index: b,
            size: g.f.len(),
        })?;
        Ok(&g.v[b] * &g.f[b])
    }

    /// `P_v = P_{b_1} ... P_{b_N}` for any tuple, vertex or not.
    pub fn projection(&self, colours: &[Weight], tuple: &[usize]) -> Result<OperatorElement> {
        if colours.len() != tuple.len() {
            return Err(Error::LengthMismatch(tuple.len(), colours.len()));
        }
        let mut out = self.unit();
        for (c, &b) in colours.iter().zip(tuple) {
            out = &out * &self.projection_b(c, b)?;
        }
        Ok(out)
    }

    /// `S_e = v_b P_v` for `e = (v, b)`, `v` the source.
    pub fn path_op(&self, graph: &HigherRankGraph, e: &GraphPath) -> Result<OperatorElement> {
        let lambda = graph.colours().weight_of(&e.degree);
        let pv = self.projection(graph.colours().colours(), &graph.vertices()[e.source])?;
        Ok(&self.v(&lambda, e.element)? * &pv)
    }

    /// `(R1)` and its `v` version: `f_i f_j = eta(b_i (x) b_j) f_m` and
    /// `v_j v_i = eta(b_i (x) b_j) v_m`, `b_m = phi(b_i (x) b_j)`.
    pub fn check_products(&self, l1: &Weight, l2: &Weight) -> Result<[Check; 2]> {
        let sum = l1 + l2;
        let e = self.atlas.cartan(&[l1.clone(), l2.clone()])?;
        let (g1, g2, g) = (
            self.generators(l1)?,
            self.generators(l2)?,
            self.generators(&sum)?,
        );
        let pairs: Vec<(usize, usize)> = (0..g1.f.len())
            .flat_map(|i| (0..g2.f.len()).map(move |j| (i, j)))
            .collect();
        let zero = OperatorElement::zero(self.slots());
        let outcomes = par::map(&pairs, |&(i, j)| {
            let m = e.project(&[i, j]);
            let ff = &g1.f[i] * &g2.f[j];
            let vv = &g2.v[j] * &g1.v[i];
            let (ef, ev) = match m {
                Some(m) => (&g.f[m], &g.v[m]),
                None => (&zero, &zero),
            };
            let tag = format!("{l1} {l2} ({},{})", i + 1, j + 1);
            ((ff != *ef).then(|| tag.clone()), (vv != *ev).then_some(tag))
        });
        let (a, b): (Vec<_>, Vec<_>) = outcomes.into_iter().unzip();
        Ok([
            Check::from_outcomes(format!("f products {l1} {l2}"), a),
            Check::from_outcomes(format!("v products {l1} {l2}"), b),
        ])
    }

    /// `(R2)`: `f_i v'_j = sum v'_k f_l` over `sigma(b_l (x) b'_j) = b'_k (x) b_i`.
    pub fn check_cross(&self, l1: &Weight, l2: &Weight) -> Result<Check> {
        let (g1, g2) = (self.generators(l1)?, self.generators(l2)?);
        let (n1, n2) = (g1.f.len(), g2.f.len());
        let mut preimages: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
        for l in 0..n1 {
            for j in 0..n2 {
                if let Some((k, i)) = sigma_irreducible(&self.atlas, l1, l2, l, j)? {
                    preimages.entry((i, j)).or_default().push((k, l));
                }
            }
        }
        let pairs: Vec<(usize, usize)> =
            (0..n1).flat_map(|i| (0..n2).map(move |j| (i, j))).collect();
        let outcomes = par::map(&pairs, |&(i, j)| {
            let lhs = &g1.f[i] * &g2.v[j];
            let mut rhs = OperatorElement::zero(self.slots());
            for &(k, l) in preimages.get(&(i, j)).into_iter().flatten() {
                rhs = &rhs + &(&g2.v[k] * &g1.f[l]);
            }
            (lhs != rhs).then(|| format!("{l1} {l2} ({},{})", i + 1, j + 1))
        });
        Ok(Check::from_outcomes(
            format!("cross relation {l1} {l2}"),
            outcomes,
        ))
    }

    /// `(R3)`: `sum_i v_i f_i = 1`.
    pub fn check_unit(&self, lambda: &Weight) -> Result<Check> {
        let g = self.generators(lambda)?;
        let mut sum = OperatorElement::zero(self.slots());
        for (v, f) in g.v.iter().zip(&g.f) {
            sum = &sum + &(v * f);
        }
        let ok = sum == self.unit();
        Ok(Check::from_outcomes(
            format!("unit {lambda}"),
            vec![(!ok).then(|| format!("sum v_i f_i = {sum}"))],
        ))
    }

    /// `(R4)`: `f_i* = v_i`, nonzero generators, torus labels `+lambda` and `-lambda`.
    pub fn check_adjoint(&self, lambda: &Weight) -> Result<Check> {
        let g = self.generators(lambda)?;
        let neg = -lambda;
        let outcomes = (0..g.f.len())
            .map(|i| {
                let (f, v) = (&g.f[i], &g.v[i]);
                let ok = f.adjoint() == *v
                    && !f.is_zero()
                    && f.is_homogeneous(lambda)
                    && v.is_homogeneous(&neg);
                (!ok).then(|| format!("{lambda} element {}", i + 1))
            })
            .collect();
        Ok(Check::from_outcomes(
            format!("adjoint pairing {lambda}"),
            outcomes,
        ))
    }

    /// `f_b f_b' = f'_c' f_c` whenever `sigma(b (x) b') = c' (x) c`.
    pub fn check_exchange(&self, l1: &Weight, l2: &Weight) -> Result<Check> {
        let (g1, g2) = (self.generators(l1)?, self.generators(l2)?);
        let mut check = Check::new(format!("exchange {l1} {l2}"));
        for i in 0..g1.f.len() {
            for j in 0..g2.f.len() {
                if let Some((k, l)) = sigma_irreducible(&self.atlas, l1, l2, i, j)? {
                    let ok = &g1.f[i] * &g2.f[j] == &g2.f[k] * &g1.f[l];
                    check.record((!ok).then(|| format!("({},{})", i + 1, j + 1)));
                }
            }
        }
        Ok(check)
    }

    /// The generator relations for every pair drawn from `weights`.
    pub fn relation_suite(&self, weights: &[Weight]) -> Result<VerificationReport> {
        let mut report = VerificationReport::default();
        for l in weights {
            report.push(self.check_unit(l)?);
            report.push(self.check_adjoint(l)?);
        }
        for l1 in weights {
            for l2 in weights {
                let [a, b] = self.check_products(l1, l2)?;
                report.push(a);
                report.push(b);
                report.push(self.check_cross(l1, l2)?);
            }
        }
        Ok(report)
    }

    /// `KP1` to `KP4` for `{P_v}` and `{S_e}` over all degrees up to `bound`,
    /// plus the grading of `S_e` and `P_v`.
    pub fn kp_suite(&self, graph: &HigherRankGraph, bound: &[u32]) -> Result<VerificationReport> {
        let colours = graph.colours().colours();
        let nv = graph.vertices().len();
        let zero_torus = self.atlas.datum().zero();
        let zero = OperatorElement::zero(self.slots());
        let pv = par::map(graph.vertices(), |v| self.projection(colours, v))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;

        let mut report = VerificationReport::default();
        let mut kp1 = Check::new("KP1 orthogonal projections");
        let mut total = zero.clone();
        for a in 0..nv {
            total = &total + &pv[a];
            let p = &pv[a];
            let ok = !p.is_zero() && p.adjoint() == *p && p.is_homogeneous(&zero_torus);
            kp1.record(
                (!ok)
                    .then(|| format!("P_{} is not a nonzero self-adjoint degree-0 element", a + 1)),
            );
            for b in 0..nv {
                let prod = p * &pv[b];
                let want = if a == b { p } else { &zero };
                kp1.record((prod != *want).then(|| format!("P_{} P_{}", a + 1, b + 1)));
            }
        }
        kp1.record((total != self.unit()).then(|| "sum of P_v is not 1".to_string()));
        report.push(kp1);

        let degrees = graph.degrees_up_to(bound);
        let mut ops: HashMap<GraphPath, OperatorElement> = HashMap::new();
        let mut grading = Check::new("grading");
        for d in &degrees {
            let paths = graph.paths(d)?;
            let vals = par::map(&paths, |e| self.path_op(graph, e));
            let neg = -&graph.colours().weight_of(d);
            for (e, s) in paths.iter().zip(vals) {
                let s = s?;
                grading.record((!s.is_homogeneous(&neg) || s.is_zero()).then(|| format!("{e:?}")));
                ops.insert(e.clone(), s);
            }
        }
        report.push(grading);

        // KP2: vertex absorption and composition.
        let mut kp2 = Check::new("KP2 composition");
        let within = |d: &[u32]| d.iter().zip(bound).all(|(a, b)| a <= b);
        for d1 in &degrees {
            for d2 in &degrees {
                let d: Vec<u32> = d1.iter().zip(d2).map(|(a, b)| a + b).collect();
                if !within(&d) {
                    continue;
                }
                let (earlier, later) = (graph.paths(d1)?, graph.paths(d2)?);
                let pairs: Vec<(&GraphPath, &GraphPath)> = earlier
                    .iter()
                    .flat_map(|e1| {
                        later
                            .iter()
                            .filter(move |e2| e2.source == e1.range)
                            .map(move |e2| (e1, e2))
                    })
                    .collect();
                let outcomes = par::map(&pairs, |&(e1, e2)| -> Result<Option<String>> {
                    let composite = graph.compose(e2, e1)?;
                    let ok = &ops[e2] * &ops[e1] == ops[&composite];
                    Ok((!ok).then(|| format!("{e2:?} after {e1:?}")))
                });
                for o in outcomes {
                    kp2.record(o?);
                }
            }
        }
        for (e, s) in &ops {
            let ok = &pv[e.range] * s == *s && s * &pv[e.source] == *s;
            kp2.record((!ok).then(|| format!("vertex absorption {e:?}")));
        }
        report.push(kp2);

        // KP3 and KP4 on nonzero degrees.
        let mut kp3 = Check::new("KP3 source projections");
        let mut kp4 = Check::new("KP4 range projections");
        for d in degrees.iter().filter(|d| d.iter().any(|&x| x > 0)) {
            let paths = graph.paths(d)?;
            let adj: Vec<OperatorElement> = paths.iter().map(|e| ops[e].adjoint()).collect();
            let pairs: Vec<(usize, usize)> = (0..paths.len())
                .flat_map(|a| (0..paths.len()).map(move |b| (a, b)))
                .collect();
            let outcomes = par::map(&pairs, |&(a, b)| {
                let prod = &adj[a] * &ops[&paths[b]];
                let want = if a == b { &pv[paths[a].source] } else { &zero };
                (prod != *want).then(|| format!("{:?} {:?}", paths[a], paths[b]))
            });
            for o in outcomes {
                kp3.record(o);
            }
            let mut sums = vec![zero.clone(); nv];
            for (e, a) in paths.iter().zip(&adj) {
                sums[e.range] = &sums[e.range] + &(&ops[e] * a);
            }
            for (v, s) in sums.iter().enumerate() {
                kp4.record((*s != pv[v]).then(|| format!("vertex {} degree {d:?}", v + 1)));
            }
        }
        report.push(kp3);
        report.push(kp4);
        Ok(report)
    }

    /// `P_v = sum v_b f_b` over `b` in `B(lambda)` with `R_C(b) = v`, for
    /// `lambda` in the cone over the colours dominating `rho_C`.
    pub fn check_projection_normal_form(
        &self,
        graph: &HigherRankGraph,
        lambda: &Weight,
    ) -> Result<Check> {
        let colours = graph.colours().colours();
        let g = self.generators(lambda)?;
        let mut sums = vec![OperatorElement::zero(self.slots()); graph.vertices().len()];
        for b in 0..g.f.len() {
            let end = right_ends(&self.atlas, lambda, b, colours)?;
            let v = graph
                .vertex_id(&end)
                .ok_or_else(|| Error::Inconsistent(format!("right end {end:?} is not a vertex")))?;
            sums[v] = &sums[v] + &(&g.v[b] * &g.f[b]);
        }
        let mut check = Check::new(format!("projection normal form {lambda}"));
        for (v, s) in sums.iter().enumerate() {
            let pv = self.projection(colours, &graph.vertices()[v])?;
            check.record((*s != pv).then(|| format!("vertex {}", v + 1)));
        }
        Ok(check)
    }

    /// Relations for `{0, fundamentals, rho}` followed by the KP suite.
    pub fn verify_suite(
        &self,
        graph: &HigherRankGraph,
        bound: &[u32],
    ) -> Result<VerificationReport> {
        let datum = self.atlas.datum();
        let mut weights = vec![datum.zero()];
        weights.extend((0..datum.rank()).map(|i| datum.fundamental_weight(i)));
        if datum.rank() > 1 {
            weights.push(datum.rho());
        }
        let mut report = self.relation_suite(&weights)?;
        report.extend(self.kp_suite(graph, bound)?);
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hrgraph::ColourSet;
    use crate::toeplitz::{p0, ShiftMonomial};

    fn setup(label: &str) -> (Arc<Atlas>, Soibelman) {
        let atlas = Atlas::parse(label).unwrap();
        let s = Soibelman::new(atlas.clone()).unwrap();
        (atlas, s)
    }

    #[test]
    fn a1_generators() {
        let (_, s) = setup("A1");
        let w = Weight(vec![1]);
        let tstar = OperatorElement::monomial(vec![ShiftMonomial::new(0, 1)], w.clone());
        assert_eq!(s.f(&w, 0).unwrap(), tstar);
        assert_eq!(s.f(&w, 1).unwrap(), p0().with_torus(&w));
        assert_eq!(s.v(&w, 0).unwrap(), tstar.adjoint());
    }

    #[test]
    fn restriction_of_a2_strings() {
        let atlas = Atlas::parse("A2").unwrap();
        let c = atlas.crystal(&Weight(vec![1, 0])).unwrap();
        // a3 sits alone in its colour-1 string.
        assert!(restriction_limit(&c, 0, 2, 0).unwrap().is_zero());
        assert_eq!(restriction_limit(&c, 0, 1, 0).unwrap(), p0());
        let unit = OperatorElement::unit(1, 0);
        assert_eq!(
            restriction_limit(&c, 1, 0, 0)
                .unwrap()
                .with_torus(&Weight(vec![])),
            unit
        );
    }

    #[test]
    fn a2_generators_nonzero_with_unit_coefficients() {
        let (_, s) = setup("A2");
        for a in 0..3 {
            let f = s.f(&Weight(vec![1, 0]), a).unwrap();
            assert!(!f.is_zero());
        }
        // Chain terms never cancel once P0 is expanded only where it occurs.
        let f = s.f(&Weight(vec![1, 1]), 7).unwrap();
        assert!(!f.is_zero());
    }

    #[test]
    fn projections_off_the_vertex_set_vanish() {
        let (atlas, s) = setup("A2");
        let colours = ColourSet::fundamental(atlas.datum());
        let g = HigherRankGraph::build(atlas.clone(), colours.clone()).unwrap();
        for b1 in 0..3 {
            for b2 in 0..3 {
                let p = s.projection(colours.colours(), &[b1, b2]).unwrap();
                assert_eq!(p.is_zero(), g.vertex_id(&[b1, b2]).is_none(), "({b1},{b2})");
            }
        }
    }

    #[test]
    fn suites_pass() {
        for label in ["A1", "A2", "C2"] {
            let (atlas, s) = setup(label);
            let colours = ColourSet::fundamental(atlas.datum());
            let g = HigherRankGraph::build(atlas.clone(), colours).unwrap();
            let bound = vec![1; atlas.rank()];
            let report = s.verify_suite(&g, &bound).unwrap();
            assert!(report.passed(), "{label}\n{report}");
        }
    }

    #[test]
    fn exchange_and_normal_form() {
        for label in ["A2", "C2"] {
            let (atlas, s) = setup(label);
            let colours = ColourSet::fundamental(atlas.datum());
            let g = HigherRankGraph::build(atlas.clone(), colours.clone()).unwrap();
            let fund: Vec<Weight> = colours.colours().to_vec();
            for l1 in &fund {
                for l2 in &fund {
                    assert!(s.check_exchange(l1, l2).unwrap().passed());
                }
            }
            let rho = colours.rho();
            for lambda in [rho.clone(), &rho + &fund[0]] {
                let c = s.check_projection_normal_form(&g, &lambda).unwrap();
                assert!(c.passed(), "{label} {lambda}: {c:?}");
            }
        }
    }

    #[test]
    fn word_products_collapse() {
        let (atlas, s) = setup("A2");
        let w = [Weight(vec![1, 0]), Weight(vec![0, 1]), Weight(vec![1, 0])];
        let e = atlas.cartan(&w).unwrap();
        for k in 0..e.len() {
            let t = e.tuple(k);
            let prod = (0..3).fold(s.unit(), |acc, m| &acc * &s.f(&w[m], t[m]).unwrap());
            assert_eq!(prod, s.f(&atlas.sum(&w), k).unwrap());
        }
    }

    #[test]
    fn projections_commute() {
        let (atlas, s) = setup("C2");
        let mut ps = Vec::new();
        for i in 0..2 {
            let l = atlas.fundamental(i);
            for b in 0..atlas.crystal(&l).unwrap().len() {
                ps.push(s.projection_b(&l, b).unwrap());
            }
        }
        for p in &ps {
            assert_eq!(p * p, *p);
            for q in &ps {
                assert_eq!(p * q, q * p);
            }
        }
    }

    #[test]
    fn status_independent_of_reduced_word() {
        for (label, word) in [("A2", vec![1, 0, 1]), ("C2", vec![1, 0, 1, 0])] {
            let (atlas, s) = setup(label);
            let other = Soibelman::with_word(atlas.clone(), word).unwrap();
            assert_ne!(s.word(), other.word());
            let g = HigherRankGraph::build(atlas.clone(), ColourSet::fundamental(atlas.datum()))
                .unwrap();
            let a = s.verify_suite(&g, &[1, 1]).unwrap();
            let b = other.verify_suite(&g, &[1, 1]).unwrap();
            assert_eq!(a.status(), b.status());
        }
    }

    #[test]
    fn rejects_non_reduced_word() {
        let atlas = Atlas::parse("A2").unwrap();
        assert!(Soibelman::with_word(atlas, vec![0, 0, 1]).is_err());
    }
}
