//! Crystals `B(lambda)` from the path model, tensor products, components and
//! crystal morphisms.
//!
//! Element indices are 0-based: index 0 is always the highest-weight element.
//! `None` plays the role of the absorbing zero element throughout.

mod morphism;
mod path;
mod tensor;

pub use morphism::{canonical_morphism, lower_along, raise_to_highest, CartanEmbedding};
pub use path::{LsPath, Segment};
pub use tensor::{Component, ComponentDecomposition, TensorCrystal};

use crate::error::{Error, Result};
use crate::report::{Check, VerificationReport};
use crate::rootdata::{RootDatum, Weight};
use std::collections::{HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

/// Default cap on the size of a generated crystal.
pub const CRYSTAL_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Raise,
    Lower,
}

/// Common interface of highest-weight crystals and their tensor products.
pub trait CrystalGraph {
    type Elem: Clone + Eq + Hash + Debug;

    fn rank(&self) -> usize;
    fn lower(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem>;
    fn raise(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem>;
    fn epsilon(&self, i: usize, b: &Self::Elem) -> u32;
    fn phi(&self, i: usize, b: &Self::Elem) -> u32;
    fn weight(&self, b: &Self::Elem) -> Weight;

    /// Applies a Kashiwara operator, propagating zero.
    fn apply(
        &self,
        dir: Direction,
        i: usize,
        b: Option<&Self::Elem>,
    ) -> Result<Option<Self::Elem>> {
        if i >= self.rank() {
            return Err(Error::BadColour {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(b.and_then(|b| match dir {
            Direction::Raise => self.raise(i, b),
            Direction::Lower => self.lower(i, b),
        }))
    }

    fn is_highest(&self, b: &Self::Elem) -> bool {
        (0..self.rank()).all(|i| self.epsilon(i, b) == 0)
    }
}

/// The crystal `B(lambda)` with all structure maps tabulated.
#[derive(Debug)]
pub struct Crystal {
    highest_weight: Weight,
    paths: Vec<LsPath>,
    weights: Vec<Weight>,
    /// `lower[i][b]`, `raise[i][b]`.
    lower: Vec<Vec<Option<usize>>>,
    raise: Vec<Vec<Option<usize>>>,
    eps: Vec<Vec<u32>>,
    phi: Vec<Vec<u32>>,
}

impl Crystal {
    /// Generates `B(lambda)` by closing the straight path `t -> t lambda` under
    /// the lowering root operators, breadth first, colours in increasing order.
    pub fn highest_weight(datum: &RootDatum, lambda: &Weight, cap: usize) -> Result<Crystal> {
        datum.check_dominant(lambda)?;
        let dim = datum.weyl_dim(lambda)?;
        if dim > cap as u128 {
            return Err(Error::CapExceeded {
                what: format!("B{lambda}"),
                size: dim,
                cap,
            });
        }
        let r = datum.rank();
        let seed = LsPath::straight(lambda);
        let mut paths = vec![seed.clone()];
        let mut index = HashMap::from([(seed, 0usize)]);
        let mut lower = vec![Vec::new(); r];
        let mut queue = VecDeque::from([0usize]);
        while let Some(b) = queue.pop_front() {
            for (i, row) in lower.iter_mut().enumerate() {
                let next = paths[b].lower(datum, i).map(|p| {
                    *index.entry(p.clone()).or_insert_with(|| {
                        paths.push(p);
                        queue.push_back(paths.len() - 1);
                        paths.len() - 1
                    })
                });
                if row.len() <= b {
                    row.resize(b + 1, None);
                }
                row[b] = next;
            }
        }
        let n = paths.len();
        for row in lower.iter_mut() {
            row.resize(n, None);
        }
        let mut raise = vec![vec![None; n]; r];
        for i in 0..r {
            for b in 0..n {
                if let Some(c) = lower[i][b] {
                    raise[i][c] = Some(b);
                }
            }
        }
        let mut eps = vec![vec![0u32; n]; r];
        let mut phi = vec![vec![0u32; n]; r];
        for i in 0..r {
            for top in 0..n {
                if raise[i][top].is_some() {
                    continue;
                }
                let mut chain = vec![top];
                while let Some(c) = lower[i][*chain.last().unwrap()] {
                    chain.push(c);
                }
                let m = chain.len() as u32 - 1;
                for (pos, &b) in chain.iter().enumerate() {
                    eps[i][b] = pos as u32;
                    phi[i][b] = m - pos as u32;
                }
            }
        }
        let weights = paths.iter().map(LsPath::endpoint).collect();
        Ok(Crystal {
            highest_weight: lambda.clone(),
            paths,
            weights,
            lower,
            raise,
            eps,
            phi,
        })
    }

    pub fn highest_weight_of(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn path(&self, b: usize) -> &LsPath {
        &self.paths[b]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn f(&self, i: usize, b: usize) -> Option<usize> {
        self.lower[i][b]
    }

    pub fn e(&self, i: usize, b: usize) -> Option<usize> {
        self.raise[i][b]
    }

    pub fn check_element(&self, b: usize) -> Result<()> {
        if b < self.len() {
            Ok(())
        } else {
            Err(Error::BadElement {
                index: b,
                size: self.len(),
            })
        }
    }

    /// The unique element killed by every lowering operator.
    pub fn lowest(&self) -> usize {
        (0..self.len())
            .find(|&b| (0..self.rank_()).all(|i| self.phi[i][b] == 0))
            .expect("finite crystals have a lowest element")
    }

    fn rank_(&self) -> usize {
        self.lower.len()
    }

    /// Applies `F_i^max` along the word from right to left, as used to reach the
    /// extremal element of weight `w lambda`.
    pub fn extremal(&self, word: &[usize]) -> usize {
        let mut b = 0;
        for &i in word.iter().rev() {
            while let Some(c) = self.lower[i][b] {
                b = c;
            }
        }
        b
    }

    /// Whether `b` is reachable from `top` by lowering operators.
    pub fn below(&self, b: usize, top: usize) -> bool {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![top];
        while let Some(x) = stack.pop() {
            if x == b {
                return true;
            }
            if std::mem::replace(&mut seen[x], true) {
                continue;
            }
            stack.extend(self.lower.iter().filter_map(|row| row[x]));
        }
        false
    }

    /// Graphviz rendering, nodes labelled by 1-based index and weight.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n");
        for b in 0..self.len() {
            s += &format!("  b{} [label=\"{} {}\"];\n", b, b + 1, self.weights[b]);
        }
        for b in 0..self.len() {
            for (i, row) in self.lower.iter().enumerate() {
                if let Some(c) = row[b] {
                    s += &format!(
                        "  b{b} -> b{c} [label=\"{}\", color=\"{}\"];\n",
                        i + 1,
                        crate::hrgraph::PALETTE[i % crate::hrgraph::PALETTE.len()]
                    );
                }
            }
        }
        s + "}\n"
    }
}

/// Dominant weights with every coordinate at most `max`, lexicographic.
pub fn dominant_weights_up_to(rank: usize, max: i64) -> Vec<Weight> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=max).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(Weight).collect()
}

/// Size against the Weyl dimension formula, the crystal axioms and Weyl
/// invariance of weight multiplicities, for each weight given.
pub fn crystal_suite(atlas: &crate::Atlas, weights: &[Weight]) -> Result<VerificationReport> {
    let datum = atlas.datum();
    let mut size = Check::new(format!(
        "{} crystal size = Weyl dimension",
        datum.cartan_type()
    ));
    let mut axioms = Check::new(format!("{} crystal axioms", datum.cartan_type()));
    let mut mult = Check::new(format!(
        "{} W-invariant multiplicities",
        datum.cartan_type()
    ));
    for lambda in weights {
        let c = atlas.crystal(lambda)?;
        let dim = datum.weyl_dim(lambda)?;
        size.record((c.len() as u128 != dim).then(|| format!("{lambda}: {} vs {dim}", c.len())));
        let mut bad = None;
        for b in 0..c.len() {
            for i in 0..c.rank() {
                let wt = &c.weights[b];
                if c.phi[i][b] as i64 - c.eps[i][b] as i64 != wt[i] {
                    bad = Some(format!("{lambda}: phi - eps at {} colour {}", b + 1, i + 1));
                }
                if let Some(x) = c.f(i, b) {
                    if c.e(i, x) != Some(b)
                        || c.weights[x] != wt - datum.simple_root(i)
                        || c.eps[i][x] != c.eps[i][b] + 1
                    {
                        bad = Some(format!("{lambda}: lowering {} colour {}", b + 1, i + 1));
                    }
                }
            }
        }
        axioms.record(bad);
        let mut counts: HashMap<&Weight, usize> = HashMap::new();
        for w in &c.weights {
            *counts.entry(w).or_default() += 1;
        }
        let skew = counts.iter().find_map(|(w, &n)| {
            (0..datum.rank())
                .find(|&i| counts.get(&datum.reflect(i, w)).copied() != Some(n))
                .map(|i| format!("{lambda}: weight {w} under s_{}", i + 1))
        });
        mult.record(skew);
    }
    let mut report = VerificationReport::default();
    report.push(size);
    report.push(axioms);
    report.push(mult);
    Ok(report)
}

impl CrystalGraph for Crystal {
    type Elem = usize;

    fn rank(&self) -> usize {
        self.rank_()
    }
    fn lower(&self, i: usize, b: &usize) -> Option<usize> {
        self.lower[i][*b]
    }
    fn raise(&self, i: usize, b: &usize) -> Option<usize> {
        self.raise[i][*b]
    }
    fn epsilon(&self, i: usize, b: &usize) -> u32 {
        self.eps[i][*b]
    }
    fn phi(&self, i: usize, b: &usize) -> u32 {
        self.phi[i][*b]
    }
    fn weight(&self, b: &usize) -> Weight {
        self.weights[*b].clone()
    }
}
