//! Exact arithmetic in the algebra spanned by `T^a T*^b`, `T` the unilateral
//! shift, in `l` tensor slots and labelled by a torus weight.

use crate::error::{Error, Result};
use crate::rootdata::Weight;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `T^a T*^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftMonomial {
    pub a: u32,
    pub b: u32,
}

impl ShiftMonomial {
    pub const ONE: ShiftMonomial = ShiftMonomial { a: 0, b: 0 };

    pub fn new(a: u32, b: u32) -> Self {
        ShiftMonomial { a, b }
    }

    pub fn adjoint(self) -> ShiftMonomial {
        ShiftMonomial {
            a: self.b,
            b: self.a,
        }
    }

    /// Image of the basis vector `e_n`.
    pub fn apply(self, n: usize) -> Option<usize> {
        (n >= self.b as usize).then(|| n - self.b as usize + self.a as usize)
    }

    /// Matrix of the operator compressed to `span(e_0, ..., e_{dim-1})`.
    pub fn truncated_matrix(self, dim: usize) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; dim]; dim];
        for n in 0..dim {
            if let Some(k) = self.apply(n).filter(|&k| k < dim) {
                m[k][n] = 1;
            }
        }
        m
    }
}

impl Mul for ShiftMonomial {
    type Output = ShiftMonomial;
    /// `T^a T*^b T^c T*^d = T^(a + (c-b)+) T*^(d + (b-c)+)`, from `T* T = 1`.
    fn mul(self, o: ShiftMonomial) -> ShiftMonomial {
        ShiftMonomial {
            a: self.a + o.a.saturating_sub(self.b),
            b: o.b + self.b.saturating_sub(o.a),
        }
    }
}

impl fmt::Display for ShiftMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => write!(f, "1"),
            (a, 0) => write!(f, "T^{a}"),
            (0, b) => write!(f, "T*^{b}"),
            (a, b) => write!(f, "T^{a} T*^{b}"),
        }
    }
}

/// `m_1 (x) ... (x) m_l` with torus character `z^torus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PureTensor {
    pub slots: Vec<ShiftMonomial>,
    pub torus: Weight,
}

/// Adds torus labels, treating an empty label as zero of any rank.
fn add_torus(x: &Weight, y: &Weight) -> Weight {
    match (x.rank(), y.rank()) {
        (0, _) => y.clone(),
        (_, 0) => x.clone(),
        _ => x + y,
    }
}

impl PureTensor {
    fn mul(&self, o: &PureTensor) -> PureTensor {
        PureTensor {
            slots: self
                .slots
                .iter()
                .zip(&o.slots)
                .map(|(x, y)| *x * *y)
                .collect(),
            torus: add_torus(&self.torus, &o.torus),
        }
    }

    fn adjoint(&self) -> PureTensor {
        PureTensor {
            slots: self.slots.iter().map(|m| m.adjoint()).collect(),
            torus: -&self.torus,
        }
    }
}

/// Integer combination of pure tensors in normal form: sorted support and no
/// zero coefficients, so structural equality is equality of operators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorElement {
    len: usize,
    terms: BTreeMap<PureTensor, i64>,
}

impl OperatorElement {
    pub fn zero(len: usize) -> Self {
        OperatorElement {
            len,
            terms: BTreeMap::new(),
        }
    }

    /// The unit with torus label `0` of the given rank.
    pub fn unit(len: usize, rank: usize) -> Self {
        Self::monomial(vec![ShiftMonomial::ONE; len], Weight::zero(rank))
    }

    pub fn monomial(slots: Vec<ShiftMonomial>, torus: Weight) -> Self {
        Self::from_terms(slots.len(), [(PureTensor { slots, torus }, 1)])
    }

    pub fn from_terms(len: usize, terms: impl IntoIterator<Item = (PureTensor, i64)>) -> Self {
        let mut out = Self::zero(len);
        for (t, c) in terms {
            assert_eq!(t.slots.len(), len, "pure tensor of the wrong length");
            out.add_term(t, c);
        }
        out
    }

    fn add_term(&mut self, t: PureTensor, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(t) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PureTensor, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn try_mul(&self, o: &OperatorElement) -> Result<OperatorElement> {
        if self.len != o.len {
            return Err(Error::LengthMismatch(self.len, o.len));
        }
        let mut acc: HashMap<PureTensor, i64> =
            HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (x, cx) in &self.terms {
            for (y, cy) in &o.terms {
                *acc.entry(x.mul(y)).or_insert(0) += cx * cy;
            }
        }
        Ok(OperatorElement {
            len: self.len,
            terms: acc.into_iter().filter(|(_, c)| *c != 0).collect(),
        })
    }

    pub fn try_add(&self, o: &OperatorElement) -> Result<OperatorElement> {
        if self.len != o.len {
            return Err(Error::LengthMismatch(self.len, o.len));
        }
        let mut out = self.clone();
        for (t, c) in &o.terms {
            out.add_term(t.clone(), *c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> OperatorElement {
        if k == 0 {
            return Self::zero(self.len);
        }
        OperatorElement {
            len: self.len,
            terms: self.terms.iter().map(|(t, c)| (t.clone(), c * k)).collect(),
        }
    }

    /// Reverses each slot and negates the torus label.
    pub fn adjoint(&self) -> OperatorElement {
        OperatorElement {
            len: self.len,
            terms: self.terms.iter().map(|(t, c)| (t.adjoint(), *c)).collect(),
        }
    }

    /// `self (x) rest`: slots concatenated, torus labels added.
    pub fn tensor(&self, rest: &OperatorElement) -> OperatorElement {
        let mut out = Self::zero(self.len + rest.len);
        for (x, cx) in &self.terms {
            for (y, cy) in &rest.terms {
                let mut slots = x.slots.clone();
                slots.extend_from_slice(&y.slots);
                out.add_term(
                    PureTensor {
                        slots,
                        torus: add_torus(&x.torus, &y.torus),
                    },
                    cx * cy,
                );
            }
        }
        out
    }

    /// Replaces every torus label.
    pub fn with_torus(&self, torus: &Weight) -> OperatorElement {
        Self::from_terms(
            self.len,
            self.terms.iter().map(|(t, c)| {
                (
                    PureTensor {
                        slots: t.slots.clone(),
                        torus: torus.clone(),
                    },
                    *c,
                )
            }),
        )
    }

    /// The torus labels occurring in the support.
    pub fn degrees(&self) -> Vec<Weight> {
        let mut d: Vec<Weight> = self.terms.keys().map(|t| t.torus.clone()).collect();
        d.sort();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self, torus: &Weight) -> bool {
        self.terms.keys().all(|t| &t.torus == torus)
    }
}

impl Mul for &OperatorElement {
    type Output = OperatorElement;
    fn mul(self, o: &OperatorElement) -> OperatorElement {
        self.try_mul(o).expect("tensor lengths differ")
    }
}

impl Add for &OperatorElement {
    type Output = OperatorElement;
    fn add(self, o: &OperatorElement) -> OperatorElement {
        self.try_add(o).expect("tensor lengths differ")
    }
}

impl Sub for &OperatorElement {
    type Output = OperatorElement;
    fn sub(self, o: &OperatorElement) -> OperatorElement {
        self.try_add(&o.scale(-1)).expect("tensor lengths differ")
    }
}

impl Neg for &OperatorElement {
    type Output = OperatorElement;
    fn neg(self) -> OperatorElement {
        self.scale(-1)
    }
}

/// `P0 = 1 - T T*`.
pub fn p0() -> OperatorElement {
    OperatorElement::from_terms(1, [(one_slot(0, 0), 1), (one_slot(1, 1), -1)])
}

fn one_slot(a: u32, b: u32) -> PureTensor {
    PureTensor {
        slots: vec![ShiftMonomial::new(a, b)],
        torus: Weight(vec![]),
    }
}

/// The `q = 0` image of the rank-one matrix coefficient in row `i`, column
/// `j` of the spin-`m/2` representation: `T^j P0 T*^(m-i)` below the diagonal,
/// `T^i T*^(m-i)` on it, zero above.
pub fn sl2_limit(m: usize, i: usize, j: usize) -> Result<OperatorElement> {
    if i > m || j > m {
        return Err(Error::BadPosition(i, j, m));
    }
    let (i, j, m) = (i as u32, j as u32, m as u32);
    Ok(if i > j {
        OperatorElement::from_terms(
            1,
            [(one_slot(j, m - i), 1), (one_slot(j + 1, m - i + 1), -1)],
        )
    } else if i == j {
        OperatorElement::from_terms(1, [(one_slot(i, m - i), 1)])
    } else {
        OperatorElement::zero(1)
    })
}

/// One slot of a printed term: a monomial, or `T^a P0 T*^b`.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Mono(u32, u32),
    P0(u32, u32),
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Slot::Mono(a, b) => write!(f, "{}", ShiftMonomial::new(a, b)),
            Slot::P0(a, b) => {
                let mut parts = Vec::new();
                if a > 0 {
                    parts.push(format!("T^{a}"));
                }
                parts.push("P0".into());
                if b > 0 {
                    parts.push(format!("T*^{b}"));
                }
                write!(f, "{}", parts.join(" "))
            }
        }
    }
}

/// Prints sums like `T^2 T*^1 (x) 1 (x) P0 . z^(1,0)`, folding pairs
/// `(a,b) - (a+1,b+1)` back into `T^a P0 T*^b`.
impl fmt::Display for OperatorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(Vec<Slot>, Weight, i64)> = self
            .terms
            .iter()
            .map(|(t, &c)| {
                (
                    t.slots.iter().map(|m| Slot::Mono(m.a, m.b)).collect(),
                    t.torus.clone(),
                    c,
                )
            })
            .collect();
        'fold: loop {
            for x in 0..terms.len() {
                for k in 0..self.len {
                    let Slot::Mono(a, b) = terms[x].0[k] else {
                        continue;
                    };
                    let partner = (0..terms.len()).find(|&y| {
                        y != x
                            && terms[y].1 == terms[x].1
                            && terms[y].2 == -terms[x].2
                            && terms[y].0[k] == Slot::Mono(a + 1, b + 1)
                            && (0..self.len).all(|s| s == k || terms[y].0[s] == terms[x].0[s])
                    });
                    if let Some(y) = partner {
                        terms[x].0[k] = Slot::P0(a, b);
                        terms.remove(y);
                        continue 'fold;
                    }
                }
            }
            break;
        }
        for (n, (slots, torus, c)) in terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if n > 0 {
                write!(f, " {sign} ")?;
            } else if *c < 0 {
                write!(f, "-")?;
            }
            if c.abs() != 1 {
                write!(f, "{} ", c.abs())?;
            }
            let body: Vec<String> = slots.iter().map(|s| s.to_string()).collect();
            write!(
                f,
                "{}",
                if body.is_empty() {
                    "1".into()
                } else {
                    body.join(" ⊗ ")
                }
            )?;
            if !torus.is_zero() {
                write!(f, " · z^{{{torus}}}")?;
            }
        }
        Ok(())
    }
}
