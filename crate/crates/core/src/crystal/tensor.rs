use super::{Crystal, CrystalGraph};
use crate::error::{Error, Result};
use crate::par;
use crate::rootdata::Weight;
use std::collections::HashMap;
use std::sync::Arc;

/// `B_1 (x) ... (x) B_n` with the Kashiwara tensor rule. Elements are index
/// tuples; nothing is materialized until asked for.
#[derive(Clone, Debug)]
pub struct TensorCrystal {
    factors: Vec<Arc<Crystal>>,
}

impl TensorCrystal {
    pub fn new(factors: Vec<Arc<Crystal>>) -> Result<Self> {
        if let Some(first) = factors.first() {
            let r = first.rank();
            if let Some(bad) = factors.iter().find(|c| c.rank() != r) {
                return Err(Error::Inconsistent(format!(
                    "mixed root data: ranks {} and {}",
                    r,
                    bad.rank()
                )));
            }
        }
        Ok(TensorCrystal { factors })
    }

    pub fn factors(&self) -> &[Arc<Crystal>] {
        &self.factors
    }

    pub fn factor_weights(&self) -> Vec<Weight> {
        self.factors
            .iter()
            .map(|c| c.highest_weight_of().clone())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.factors.iter().map(|c| c.len()).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn highest_tuple(&self) -> Vec<usize> {
        vec![0; self.factors.len()]
    }

    pub fn check_element(&self, b: &[usize]) -> Result<()> {
        if b.len() != self.factors.len() {
            return Err(Error::LengthMismatch(b.len(), self.factors.len()));
        }
        for (c, &x) in self.factors.iter().zip(b) {
            c.check_element(x)?;
        }
        Ok(())
    }

    /// The `k`-th tuple in lexicographic order.
    pub fn element_at(&self, mut k: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, c) in out.iter_mut().zip(&self.factors).rev() {
            *slot = k % c.len();
            k /= c.len();
        }
        out
    }

    pub fn position(&self, b: &[usize]) -> usize {
        b.iter()
            .zip(&self.factors)
            .fold(0, |acc, (&x, c)| acc * c.len() + x)
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len()).map(|k| self.element_at(k))
    }

    /// Running `(epsilon_i, phi_i)` of the prefixes `b_1 (x) ... (x) b_k`.
    fn prefix_strings(&self, i: usize, b: &[usize]) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(b.len());
        for (k, (c, &x)) in self.factors.iter().zip(b).enumerate() {
            let (e, p) = (c.epsilon(i, &x) as i64, c.phi(i, &x) as i64);
            if k == 0 {
                out.push((e, p));
            } else {
                let (pe, pp) = out[k - 1];
                let left_wt = pp - pe;
                out.push((pe.max(e - left_wt), p.max(pp + p - e)));
            }
        }
        out
    }

    /// Which factor the operator acts on, following the two-factor rule
    /// recursively with the left group peeled off from the right.
    fn acting_factor(&self, i: usize, b: &[usize], raise: bool) -> Option<usize> {
        let pre = self.prefix_strings(i, b);
        let mut k = b.len().checked_sub(1)?;
        while k > 0 {
            let left_phi = pre[k - 1].1;
            let right_eps = self.factors[k].epsilon(i, &b[k]) as i64;
            let go_left = if raise {
                left_phi >= right_eps
            } else {
                left_phi > right_eps
            };
            if !go_left {
                break;
            }
            k -= 1;
        }
        Some(k)
    }

    /// Raises to the highest-weight element of the component.
    pub fn highest_of(&self, b: &[usize]) -> Vec<usize> {
        super::raise_to_highest(self, &b.to_vec()).0
    }

    /// Connected components, found by raising every element to the top of
    /// its component.
    pub fn components(&self, cap: usize) -> Result<ComponentDecomposition> {
        let n = self.len();
        if n > cap {
            return Err(Error::CapExceeded {
                what: "tensor product".into(),
                size: n as u128,
                cap,
            });
        }
        let tops = par::range_map(n, |k| self.highest_of(&self.element_at(k)));
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut sorted: Vec<&Vec<usize>> = tops.iter().collect();
        sorted.sort();
        sorted.dedup();
        let components: Vec<Component> = sorted
            .iter()
            .enumerate()
            .map(|(id, top)| {
                ids.insert((*top).clone(), id);
                Component {
                    highest: (*top).clone(),
                    highest_weight: self.weight(top),
                    size: 0,
                }
            })
            .collect();
        let mut decomposition = ComponentDecomposition {
            component_of: tops.iter().map(|t| ids[t]).collect(),
            cartan: ids[&self.highest_tuple()],
            components,
        };
        for &c in &decomposition.component_of {
            decomposition.components[c].size += 1;
        }
        Ok(decomposition)
    }
}

impl CrystalGraph for TensorCrystal {
    type Elem = Vec<usize>;

    fn rank(&self) -> usize {
        self.factors.first().map_or(0, |c| c.rank())
    }

    fn lower(&self, i: usize, b: &Vec<usize>) -> Option<Vec<usize>> {
        let k = self.acting_factor(i, b, false)?;
        let x = self.factors[k].f(i, b[k])?;
        let mut out = b.clone();
        out[k] = x;
        Some(out)
    }

    fn raise(&self, i: usize, b: &Vec<usize>) -> Option<Vec<usize>> {
        let k = self.acting_factor(i, b, true)?;
        let x = self.factors[k].e(i, b[k])?;
        let mut out = b.clone();
        out[k] = x;
        Some(out)
    }

    fn epsilon(&self, i: usize, b: &Vec<usize>) -> u32 {
        self.prefix_strings(i, b).last().map_or(0, |x| x.0 as u32)
    }

    fn phi(&self, i: usize, b: &Vec<usize>) -> u32 {
        self.prefix_strings(i, b).last().map_or(0, |x| x.1 as u32)
    }

    fn weight(&self, b: &Vec<usize>) -> Weight {
        let mut w = Weight::zero(self.rank());
        for (c, &x) in self.factors.iter().zip(b) {
            w += &c.weights()[x];
        }
        w
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub highest: Vec<usize>,
    pub highest_weight: Weight,
    pub size: usize,
}

#[derive(Clone, Debug)]
pub struct ComponentDecomposition {
    /// Indexed by lexicographic position of the tuple.
    pub component_of: Vec<usize>,
    /// Sorted by highest-weight tuple.
    pub components: Vec<Component>,
    pub cartan: usize,
}
