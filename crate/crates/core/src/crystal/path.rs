//! Piecewise-linear paths and Littelmann root operators.

use crate::rootdata::{RootDatum, Weight, Q};
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    /// Always a Weyl conjugate of the seed weight, hence integral.
    pub direction: Weight,
    pub duration: Q,
}

/// A path `pi: [0,1] -> P (x) Q` starting at 0, stored as a normalized list of
/// straight segments.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LsPath {
    segments: Vec<Segment>,
}

impl LsPath {
    pub fn straight(lambda: &Weight) -> Self {
        LsPath {
            segments: vec![Segment {
                direction: lambda.clone(),
                duration: Q::one(),
            }],
        }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// `pi(1)`.
    pub fn endpoint(&self) -> Weight {
        let r = self.segments[0].direction.rank();
        let mut acc = vec![Q::zero(); r];
        for s in &self.segments {
            for (a, &d) in acc.iter_mut().zip(&s.direction.0) {
                *a += s.duration * Q::from_integer(d);
            }
        }
        Weight(
            acc.into_iter()
                .map(|x| {
                    assert!(x.is_integer(), "path endpoint off the weight lattice");
                    x.to_integer()
                })
                .collect(),
        )
    }

    /// Values of `<pi(t), alpha_i^vee>` at the breakpoints, starting with 0.
    pub fn heights(&self, i: usize) -> Vec<Q> {
        let mut h = Vec::with_capacity(self.segments.len() + 1);
        let mut cur = Q::zero();
        h.push(cur);
        for s in &self.segments {
            cur += s.duration * Q::from_integer(s.direction[i]);
            h.push(cur);
        }
        h
    }

    /// `(epsilon_i, phi_i)` read off the height function.
    pub fn string_data(&self, i: usize) -> (i64, i64) {
        let h = self.heights(i);
        let m = *h.iter().min().unwrap();
        let end = *h.last().unwrap();
        ((-m).floor().to_integer(), (end - m).floor().to_integer())
    }

    pub fn lower(&self, datum: &RootDatum, i: usize) -> Option<LsPath> {
        let h = self.heights(i);
        let m = *h.iter().min().unwrap();
        if *h.last().unwrap() - m < Q::one() {
            return None;
        }
        let p = h.iter().rposition(|x| *x == m).unwrap();
        let target = m + Q::one();
        let mut out = self.segments[..p].to_vec();
        for s in p..self.segments.len() {
            let seg = &self.segments[s];
            if h[s + 1] < target {
                out.push(reflected(datum, i, seg, seg.duration));
                continue;
            }
            let t = (target - h[s]) / Q::from_integer(seg.direction[i]);
            out.push(reflected(datum, i, seg, t));
            if t < seg.duration {
                out.push(Segment {
                    direction: seg.direction.clone(),
                    duration: seg.duration - t,
                });
            }
            out.extend_from_slice(&self.segments[s + 1..]);
            break;
        }
        Some(LsPath {
            segments: normalize(out),
        })
    }

    pub fn raise(&self, datum: &RootDatum, i: usize) -> Option<LsPath> {
        let h = self.heights(i);
        let m = *h.iter().min().unwrap();
        if m > -Q::one() {
            return None;
        }
        let q = h.iter().position(|x| *x == m).unwrap();
        let target = m + Q::one();
        let s = (0..q).rev().find(|&s| h[s] >= target).unwrap();
        let seg = &self.segments[s];
        let t0 = (target - h[s]) / Q::from_integer(seg.direction[i]);
        let mut out = self.segments[..s].to_vec();
        if t0 > Q::zero() {
            out.push(Segment {
                direction: seg.direction.clone(),
                duration: t0,
            });
        }
        out.push(reflected(datum, i, seg, seg.duration - t0));
        for seg in &self.segments[s + 1..q] {
            out.push(reflected(datum, i, seg, seg.duration));
        }
        out.extend_from_slice(&self.segments[q..]);
        Some(LsPath {
            segments: normalize(out),
        })
    }
}

fn reflected(datum: &RootDatum, i: usize, seg: &Segment, duration: Q) -> Segment {
    Segment {
        direction: datum.reflect(i, &seg.direction),
        duration,
    }
}

fn normalize(segs: Vec<Segment>) -> Vec<Segment> {
    let mut out: Vec<Segment> = Vec::with_capacity(segs.len());
    for s in segs {
        if s.duration.is_zero() {
            continue;
        }
        match out.last_mut() {
            Some(last) if last.direction == s.direction => last.duration += s.duration,
            _ => out.push(s),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_string() {
        let d = RootDatum::parse("A1").unwrap();
        let p = LsPath::straight(&Weight(vec![3]));
        assert_eq!(p.string_data(0), (0, 3));
        let mut cur = p.clone();
        for k in 1..=3 {
            cur = cur.lower(&d, 0).unwrap();
            assert_eq!(cur.endpoint(), Weight(vec![3 - 2 * k]));
            assert_eq!(cur.string_data(0), (k, 3 - k));
        }
        assert!(cur.lower(&d, 0).is_none());
        for _ in 0..3 {
            cur = cur.raise(&d, 0).unwrap();
        }
        assert_eq!(cur, p);
        assert!(p.raise(&d, 0).is_none());
    }

    #[test]
    fn a2_rho_has_split_segments() {
        let d = RootDatum::parse("A2").unwrap();
        let p = LsPath::straight(&d.rho());
        let q = p.lower(&d, 0).unwrap().lower(&d, 1).unwrap();
        assert_eq!(q.endpoint(), Weight(vec![0, 0]));
        assert!(q.segments().len() >= 2);
        assert_eq!(q.raise(&d, 1).unwrap().raise(&d, 0).unwrap(), p);
    }
}
