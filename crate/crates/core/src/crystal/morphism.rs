use super::{Crystal, CrystalGraph, TensorCrystal};
use crate::error::{Error, Result};
use crate::rootdata::Weight;
use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

/// Raises `b` to the highest-weight element of its component. Returns that
/// element and the colours of the raising steps, in order; lowering along the
/// reversed list recovers `b`.
pub fn raise_to_highest<C: CrystalGraph>(c: &C, b: &C::Elem) -> (C::Elem, Vec<usize>) {
    let mut cur = b.clone();
    let mut word = Vec::new();
    'outer: loop {
        for i in 0..c.rank() {
            if let Some(next) = c.raise(i, &cur) {
                cur = next;
                word.push(i);
                continue 'outer;
            }
        }
        return (cur, word);
    }
}

/// Inverse of [`raise_to_highest`]: lowers `top` along the reversed raise word.
pub fn lower_along<C: CrystalGraph>(c: &C, top: &C::Elem, raises: &[usize]) -> Option<C::Elem> {
    raises
        .iter()
        .rev()
        .try_fold(top.clone(), |cur, &i| c.lower(i, &cur))
}

/// The crystal isomorphism between the components of `a_top` and `b_top`,
/// built by walking both from the top along the same lowering operators.
pub fn canonical_morphism<A: CrystalGraph, B: CrystalGraph>(
    a: &A,
    a_top: &A::Elem,
    b: &B,
    b_top: &B::Elem,
) -> Result<Vec<(A::Elem, B::Elem)>> {
    let (wa, wb) = (a.weight(a_top), b.weight(b_top));
    if wa != wb || !a.is_highest(a_top) || !b.is_highest(b_top) {
        return Err(Error::HighestWeightMismatch(wa, wb));
    }
    let mut seen: HashMap<A::Elem, B::Elem> = HashMap::from([(a_top.clone(), b_top.clone())]);
    let mut order = vec![(a_top.clone(), b_top.clone())];
    let mut queue = VecDeque::from([(a_top.clone(), b_top.clone())]);
    while let Some((x, y)) = queue.pop_front() {
        for i in 0..a.rank() {
            match (a.lower(i, &x), b.lower(i, &y)) {
                (None, None) => {}
                (Some(x2), Some(y2)) => {
                    if let Some(prev) = seen.get(&x2) {
                        if prev != &y2 {
                            return Err(Error::Inconsistent(format!(
                                "lowering paths disagree at {x2:?}"
                            )));
                        }
                        continue;
                    }
                    seen.insert(x2.clone(), y2.clone());
                    order.push((x2.clone(), y2.clone()));
                    queue.push_back((x2, y2));
                }
                _ => {
                    return Err(Error::Inconsistent(format!(
                        "components of {a_top:?} and {b_top:?} are not isomorphic"
                    )))
                }
            }
        }
    }
    Ok(order)
}

/// The Cartan component of `B(l_1) (x) ... (x) B(l_n)`, matched with
/// `B(l_1 + ... + l_n)` element by element.
#[derive(Debug)]
pub struct CartanEmbedding {
    factors: Vec<Weight>,
    target: Arc<Crystal>,
    to_tensor: Vec<Vec<usize>>,
    from_tensor: HashMap<Vec<usize>, usize>,
}

impl CartanEmbedding {
    pub fn new(tensor: &TensorCrystal, target: Arc<Crystal>) -> Result<Self> {
        let top = tensor.highest_tuple();
        let (tw, cw) = (tensor.weight(&top), target.highest_weight_of().clone());
        if tw != cw {
            return Err(Error::HighestWeightMismatch(tw, cw));
        }
        // Target indices are breadth-first, so parents precede children.
        let mut to_tensor: Vec<Option<Vec<usize>>> = vec![None; target.len()];
        to_tensor[0] = Some(top);
        for b in 0..target.len() {
            let t = to_tensor[b]
                .clone()
                .ok_or_else(|| Error::Inconsistent("unreached element".into()))?;
            for i in 0..target.rank() {
                match (target.f(i, b), tensor.lower(i, &t)) {
                    (None, None) => {}
                    (Some(c), Some(u)) => match &to_tensor[c] {
                        None => to_tensor[c] = Some(u),
                        Some(prev) if prev == &u => {}
                        Some(_) => return Err(Error::Inconsistent("Cartan matching clash".into())),
                    },
                    _ => return Err(Error::Inconsistent("Cartan matching failed".into())),
                }
            }
        }
        let to_tensor: Vec<Vec<usize>> = to_tensor.into_iter().map(Option::unwrap).collect();
        let from_tensor = to_tensor
            .iter()
            .enumerate()
            .map(|(k, t)| (t.clone(), k))
            .collect();
        Ok(CartanEmbedding {
            factors: tensor.factor_weights(),
            target,
            to_tensor,
            from_tensor,
        })
    }

    pub fn factors(&self) -> &[Weight] {
        &self.factors
    }

    pub fn target(&self) -> &Arc<Crystal> {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.to_tensor.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_tensor.is_empty()
    }

    /// `phi`: the image in `B(sum)` if `b` is in the Cartan component.
    pub fn project(&self, b: &[usize]) -> Option<usize> {
        self.from_tensor.get(b).copied()
    }

    /// `eta`: the indicator of the Cartan component.
    pub fn contains(&self, b: &[usize]) -> bool {
        self.from_tensor.contains_key(b)
    }

    /// The tuple matched with element `k` of `B(sum)`.
    pub fn tuple(&self, k: usize) -> &[usize] {
        &self.to_tensor[k]
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.to_tensor
    }
}
