//! Finite root systems: Cartan data, the weight lattice in the basis of
//! fundamental weights, the invariant form and the Weyl group.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, AddAssign, Index, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

pub type Q = Rational64;

/// Default cap on the order of an enumerated Weyl group (the order of W(E6)).
pub const WEYL_CAP: usize = 51_840;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::UnknownType(format!("{:?}{}", family, rank)))
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnknownType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(family, rank).map_err(|_| bad())
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// An integral weight, in coordinates with respect to the fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|x| x * k).collect())
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = std::num::ParseIntError;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        s.split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        &self + &o
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, o: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a += b;
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        &self - &o
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

/// A positive root, both as simple-root coefficients and as a weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub coeffs: Vec<i64>,
    pub weight: Weight,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

#[derive(Debug)]
pub struct RootDatum {
    cartan_type: CartanType,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`, so `alpha_j` is column `j`.
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Root>,
    inverse_cartan: Vec<Vec<Q>>,
    /// `gram[i][j] = (varpi_i, varpi_j)`.
    gram: Vec<Vec<Q>>,
    weyl: OnceLock<Arc<WeylGroup>>,
}

impl RootDatum {
    pub fn new(cartan_type: CartanType) -> Self {
        let cartan = cartan_matrix(cartan_type);
        let symmetrizers = symmetrizers(&cartan);
        let r = cartan_type.rank;
        let simple_roots = (0..r)
            .map(|j| Weight((0..r).map(|i| cartan[i][j]).collect()))
            .collect();
        let as_q: Vec<Vec<Q>> = cartan
            .iter()
            .map(|row| row.iter().map(|&x| Q::from_integer(x)).collect())
            .collect();
        let inverse_cartan = invert(&as_q).expect("finite-type Cartan matrices are invertible");
        let gram = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| inverse_cartan[i][j] * Q::from_integer(symmetrizers[i]))
                    .collect()
            })
            .collect();
        let positive_roots = positive_roots(&cartan);
        RootDatum {
            cartan_type,
            cartan,
            symmetrizers,
            simple_roots,
            positive_roots,
            inverse_cartan,
            gram,
            weyl: OnceLock::new(),
        }
    }

    pub fn parse(label: &str) -> Result<Self> {
        Ok(Self::new(label.parse()?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i]
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank(), i)
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Number of positive roots, which is also the length of `w0`.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank())
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                weight: w.clone(),
                got: w.rank(),
                expected: self.rank(),
            });
        }
        Ok(())
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.clone()));
        }
        Ok(())
    }

    /// The invariant form, normalized so that short roots have square length 2.
    pub fn bilinear_form(&self, mu: &Weight, nu: &Weight) -> Q {
        let mut acc = Q::zero();
        for (i, &a) in mu.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in nu.0.iter().enumerate() {
                if b != 0 {
                    acc += self.gram[i][j] * Q::from_integer(a * b);
                }
            }
        }
        acc
    }

    /// Coordinates of `mu` in the basis of simple roots.
    pub fn simple_root_coords(&self, mu: &Weight) -> Vec<Q> {
        self.inverse_cartan
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&mu.0)
                    .fold(Q::zero(), |acc, (a, &b)| acc + *a * Q::from_integer(b))
            })
            .collect()
    }

    /// `mu <= lambda` in the dominance order: `lambda - mu` is a sum of simple roots.
    pub fn dominance_le(&self, mu: &Weight, lambda: &Weight) -> bool {
        self.simple_root_coords(&(lambda - mu))
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// `s_i(mu) = mu - <mu, alpha_i^vee> alpha_i`.
    pub fn reflect(&self, i: usize, mu: &Weight) -> Weight {
        let k = mu[i];
        if k == 0 {
            return mu.clone();
        }
        Weight(
            mu.0.iter()
                .zip(&self.simple_roots[i].0)
                .map(|(a, b)| a - k * b)
                .collect(),
        )
    }

    /// Weyl dimension formula.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u128> {
        self.check_dominant(lambda)?;
        let rho = self.rho();
        let shifted = lambda + &rho;
        let pair = |mu: &Weight, root: &Root| -> i64 {
            (0..self.rank())
                .map(|j| mu[j] * root.coeffs[j] * self.symmetrizers[j])
                .sum()
        };
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for root in &self.positive_roots {
            num *= pair(&shifted, root);
            den *= pair(&rho, root);
        }
        let q = BigRational::new(num, den);
        debug_assert!(q.is_integer());
        q.to_integer().to_u128().ok_or(Error::CapExceeded {
            what: format!("B{lambda}"),
            size: u128::MAX,
            cap: usize::MAX,
        })
    }

    pub fn weyl_group(&self) -> Result<Arc<WeylGroup>> {
        if let Some(w) = self.weyl.get() {
            return Ok(w.clone());
        }
        let w = Arc::new(WeylGroup::enumerate(self, WEYL_CAP)?);
        Ok(self.weyl.get_or_init(|| w).clone())
    }

    /// Checks that `word` (0-based colours) is a reduced word for `w0`.
    pub fn check_longest_word(&self, word: &[usize]) -> Result<()> {
        let bad = || Error::BadReducedWord(word.iter().map(|i| i + 1).collect());
        if word.len() != self.num_positive_roots() || word.iter().any(|&i| i >= self.rank()) {
            return Err(bad());
        }
        let rho = self.rho();
        let image = word
            .iter()
            .rev()
            .fold(rho.clone(), |mu, &i| self.reflect(i, &mu));
        if image == -&rho {
            Ok(())
        } else {
            Err(bad())
        }
    }
}

fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match t.family {
        Family::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -1, -2);
        }
        Family::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -2, -1);
        }
        Family::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => link(0, 1, -3, -1),
    }
    a
}

/// Smallest positive integers with `d_i a_ij = d_j a_ji`.
fn symmetrizers(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(Q::one());
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if a[i][j] != 0 && d[j].is_none() {
                d[j] = Some(d[i].unwrap() * Q::new(a[i][j], a[j][i]));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.unwrap_or_else(Q::one)).collect();
    let lcm_den = d.iter().fold(1i64, |l, x| lcm(l, *x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * lcm_den).to_integer()).collect();
    let g = ints.iter().fold(0i64, |g, &x| gcd(g, x));
    ints.into_iter().map(|x| x / g).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

/// Positive roots by the root-string algorithm, ordered by height.
fn positive_roots(a: &[Vec<i64>]) -> Vec<Root> {
    let n = a.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut roots: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut known: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut next = 0;
    while next < roots.len() {
        let beta = roots[next].clone();
        next += 1;
        for i in 0..n {
            if beta == unit(i) {
                continue;
            }
            let pairing: i64 = (0..n).map(|k| a[i][k] * beta[k]).sum();
            let mut p = 0;
            loop {
                let mut g = beta.clone();
                g[i] -= p + 1;
                if known.contains(&g) {
                    p += 1;
                } else {
                    break;
                }
            }
            if p - pairing > 0 {
                let mut g = beta.clone();
                g[i] += 1;
                if known.insert(g.clone()) {
                    roots.push(g);
                }
            }
        }
    }
    let mut out: Vec<Root> = roots
        .into_iter()
        .map(|c| {
            let weight = Weight(
                (0..n)
                    .map(|i| (0..n).map(|k| a[i][k] * c[k]).sum())
                    .collect(),
            );
            Root { coeffs: c, weight }
        })
        .collect();
    out.sort_by(|x, y| (x.height(), &x.coeffs).cmp(&(y.height(), &y.coeffs)));
    out
}

/// Gauss-Jordan inverse over the rationals.
pub fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, piv);
        let p = aug[col][col];
        for x in aug[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col];
                for c in 0..2 * n {
                    let v = aug[col][c];
                    aug[r][c] -= f * v;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Rank over the rationals of a list of integer vectors.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col] / m[rank][col];
                for c in 0..cols {
                    let v = m[rank][c];
                    m[r][c] -= f * v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Leading principal minors of the symmetrized Cartan matrix are all positive.
pub fn is_finite_type(datum: &RootDatum) -> bool {
    let n = datum.rank();
    let s: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Q::from_integer(datum.symmetrizers[i] * datum.cartan[i][j]))
                .collect()
        })
        .collect();
    (1..=n).all(|k| determinant(s[..k].iter().map(|r| r[..k].to_vec()).collect()) > Q::zero())
}

fn determinant(mut m: Vec<Vec<Q>>) -> Q {
    let n = m.len();
    let mut det = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        det *= m[col][col];
        for r in col + 1..n {
            let f = m[r][col] / m[col][col];
            for c in col..n {
                let v = m[col][c];
                m[r][c] -= f * v;
            }
        }
    }
    det
}

#[derive(Clone, Debug)]
pub struct WeylElement {
    /// Lexicographically smallest reduced word, 0-based colours.
    pub word: Vec<usize>,
    /// Row-major action on weight coordinates.
    pub matrix: Vec<i64>,
}

#[derive(Debug)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<WeylElement>,
    index: HashMap<Weight, usize>,
    longest: usize,
}

impl WeylGroup {
    /// Breadth-first enumeration. Words are extended on the right in colour
    /// order, so the first word found for an element is the lexicographically
    /// smallest of minimal length.
    pub fn enumerate(datum: &RootDatum, cap: usize) -> Result<Self> {
        let r = datum.rank();
        let rho = datum.rho();
        let mut identity = vec![0i64; r * r];
        for i in 0..r {
            identity[i * r + i] = 1;
        }
        let reflections: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                let mut m = identity.clone();
                for k in 0..r {
                    m[k * r + i] -= datum.simple_roots[i][k];
                }
                m
            })
            .collect();
        let mut elements = vec![WeylElement {
            word: vec![],
            matrix: identity,
        }];
        let mut index = HashMap::from([(rho.clone(), 0usize)]);
        let mut next = 0;
        while next < elements.len() {
            for i in 0..r {
                let m = matmul(&elements[next].matrix, &reflections[i], r);
                let key = apply_matrix(&m, &rho, r);
                if index.contains_key(&key) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: format!("Weyl group of {}", datum.cartan_type()),
                        size: elements.len() as u128 + 1,
                        cap,
                    });
                }
                let mut word = elements[next].word.clone();
                word.push(i);
                index.insert(key, elements.len());
                elements.push(WeylElement { word, matrix: m });
            }
            next += 1;
        }
        let longest = index[&(-&rho)];
        Ok(WeylGroup {
            rank: r,
            elements,
            index,
            longest,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn longest(&self) -> &WeylElement {
        &self.elements[self.longest]
    }

    pub fn longest_index(&self) -> usize {
        self.longest
    }

    pub fn act(&self, w: usize, mu: &Weight) -> Weight {
        apply_matrix(&self.elements[w].matrix, mu, self.rank)
    }

    /// Index of the element sending `rho` to `image`.
    pub fn by_rho_image(&self, image: &Weight) -> Option<usize> {
        self.index.get(image).copied()
    }

    /// Elements fixing `mu`.
    pub fn stabilizer(&self, mu: &Weight) -> Vec<usize> {
        (0..self.len())
            .filter(|&w| &self.act(w, mu) == mu)
            .collect()
    }

    /// The orbit `W mu` with one shortest-word representative per point, in
    /// enumeration order.
    pub fn orbit(&self, mu: &Weight) -> Vec<(usize, Weight)> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for w in 0..self.len() {
            let img = self.act(w, mu);
            if seen.insert(img.clone()) {
                out.push((w, img));
            }
        }
        out
    }
}

fn matmul(a: &[i64], b: &[i64], r: usize) -> Vec<i64> {
    let mut out = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let x = a[i * r + k];
            if x != 0 {
                for j in 0..r {
                    out[i * r + j] += x * b[k * r + j];
                }
            }
        }
    }
    out
}

fn apply_matrix(m: &[i64], mu: &Weight, r: usize) -> Weight {
    Weight(
        (0..r)
            .map(|i| (0..r).map(|k| m[i * r + k] * mu[k]).sum())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    #[test]
    fn a2_data() {
        let d = RootDatum::parse("A2").unwrap();
        assert_eq!(d.cartan_matrix(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(d.num_positive_roots(), 3);
        let (w1, w2) = (d.fundamental_weight(0), d.fundamental_weight(1));
        assert_eq!(d.bilinear_form(&w1, &w1), q(2, 3));
        assert_eq!(d.bilinear_form(&w1, &w2), q(1, 3));
        let w = d.weyl_group().unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.longest().word, vec![0, 1, 0]);
    }

    #[test]
    fn c2_data() {
        let d = RootDatum::parse("C2").unwrap();
        assert_eq!(d.cartan_matrix(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(d.symmetrizers(), &[1, 2]);
        assert_eq!(d.weyl_group().unwrap().len(), 8);
        assert_eq!(d.num_positive_roots(), 4);
        assert_eq!(d.weyl_dim(&Weight(vec![1, 0])).unwrap(), 4);
        assert_eq!(d.weyl_dim(&Weight(vec![0, 1])).unwrap(), 5);
        for i in 0..2 {
            let a = d.simple_root(i);
            assert_eq!(
                d.bilinear_form(a, a),
                Q::from_integer(2 * d.symmetrizers()[i])
            );
        }
    }

    #[test]
    fn a1_data() {
        let d = RootDatum::parse("A1").unwrap();
        let a = d.simple_root(0).clone();
        assert_eq!(d.bilinear_form(&a, &a), Q::from_integer(2));
        let w = d.weyl_group().unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w.longest().word, vec![0]);
        for m in 0..6 {
            assert_eq!(d.weyl_dim(&Weight(vec![m])).unwrap(), m as u128 + 1);
        }
    }

    #[test]
    fn sl4_form() {
        let d = RootDatum::parse("A3").unwrap();
        let w1 = d.fundamental_weight(0);
        let w23 = &d.fundamental_weight(1) + &d.fundamental_weight(2);
        assert_eq!(d.bilinear_form(&w1, &w23), q(3, 4));
        assert_eq!(d.bilinear_form(&w1, &w1), q(3, 4));
        assert_eq!(d.bilinear_form(&w1, &d.zero()), Q::zero());
    }

    #[test]
    fn group_orders_and_root_counts() {
        let cases = [
            ("A3", 24, 6),
            ("B3", 48, 9),
            ("C3", 48, 9),
            ("D4", 192, 12),
            ("G2", 12, 6),
            ("F4", 1152, 24),
            ("E6", 51840, 36),
        ];
        for (label, order, roots) in cases {
            let d = RootDatum::parse(label).unwrap();
            assert!(is_finite_type(&d), "{label}");
            assert_eq!(d.num_positive_roots(), roots, "{label}");
            let w = d.weyl_group().unwrap();
            assert_eq!(w.len(), order, "{label}");
            assert_eq!(w.longest().word.len(), roots, "{label}");
        }
        assert_eq!(RootDatum::parse("E7").unwrap().num_positive_roots(), 63);
        assert_eq!(RootDatum::parse("E8").unwrap().num_positive_roots(), 120);
        assert!(matches!(
            RootDatum::parse("E7").unwrap().weyl_group(),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn rejects_bad_labels() {
        for s in ["X2", "A0", "B1", "D3", "E9", "F3", "G3", "", "A", "A-1"] {
            assert!(s.parse::<CartanType>().is_err(), "{s}");
        }
    }

    #[test]
    fn fundamental_weights_dual_to_coroots() {
        let d = RootDatum::parse("B3").unwrap();
        for i in 0..3 {
            let c = d.simple_root_coords(d.simple_root(i));
            for (j, x) in c.iter().enumerate() {
                assert_eq!(*x, if i == j { Q::one() } else { Q::zero() });
            }
        }
    }

    #[test]
    fn longest_word_checks() {
        let d = RootDatum::parse("A2").unwrap();
        d.check_longest_word(&[0, 1, 0]).unwrap();
        d.check_longest_word(&[1, 0, 1]).unwrap();
        assert!(d.check_longest_word(&[0, 1, 1]).is_err());
        assert!(d.check_longest_word(&[0, 1]).is_err());
    }

    #[test]
    fn weyl_dims() {
        let d = RootDatum::parse("A2").unwrap();
        assert_eq!(d.weyl_dim(&d.rho()).unwrap(), 8);
        let g = RootDatum::parse("G2").unwrap();
        assert_eq!(g.weyl_dim(&Weight(vec![1, 0])).unwrap(), 7);
        assert_eq!(g.weyl_dim(&Weight(vec![0, 1])).unwrap(), 14);
        assert!(d.weyl_dim(&Weight(vec![-1, 0])).is_err());
    }
}
