//! The Cartan braiding, its action by adjacent transpositions, and right and
//! left ends.
//!
//! Tensor positions and colours are 0-based. Elements are index tuples and
//! `None` is the zero element.

use crate::atlas::Atlas;
use crate::crystal::{lower_along, raise_to_highest, CrystalGraph};
use crate::error::{Error, Result};
use crate::par;
use crate::report::{Check, VerificationReport};
use crate::rootdata::Weight;

/// `sigma: B(lambda) (x) B(mu) -> B(mu) (x) B(lambda)`, the matching of
/// Cartan components, zero elsewhere.
pub fn sigma_irreducible(
    atlas: &Atlas,
    lambda: &Weight,
    mu: &Weight,
    b: usize,
    c: usize,
) -> Result<Option<(usize, usize)>> {
    let here = atlas.cartan(&[lambda.clone(), mu.clone()])?;
    let there = atlas.cartan(&[mu.clone(), lambda.clone()])?;
    Ok(here.project(&[b, c]).map(|k| {
        let t = there.tuple(k);
        (t[0], t[1])
    }))
}

/// `sigma_{B,B'}` for products of irreducibles `B = (x) B(left_k)` and
/// `B' = (x) B(right_k)`. The result lists the `B'` factors first.
///
/// The components of `b` and `c` are identified with `B(mu)`, `B(mu')`; the
/// result is zero unless `(mu, mu') = (lambda, lambda')` for the invariant form,
/// and otherwise is the irreducible braiding transported back along the same
/// identifications.
pub fn cartan_braiding(
    atlas: &Atlas,
    left: &[Weight],
    right: &[Weight],
    b: &[usize],
    c: &[usize],
) -> Result<Option<Vec<usize>>> {
    let tl = atlas.tensor(left)?;
    let tr = atlas.tensor(right)?;
    tl.check_element(b)?;
    tr.check_element(c)?;
    if left.len() == 1 && right.len() == 1 {
        return Ok(
            sigma_irreducible(atlas, &left[0], &right[0], b[0], c[0])?.map(|(x, y)| vec![x, y])
        );
    }
    let datum = atlas.datum();
    let (hb, wb) = raise_to_highest(&tl, &b.to_vec());
    let (hc, wc) = raise_to_highest(&tr, &c.to_vec());
    let (mu, nu) = (tl.weight(&hb), tr.weight(&hc));
    let (lambda, lambda2) = (atlas.sum(left), atlas.sum(right));
    if datum.bilinear_form(&lambda, &lambda2) != datum.bilinear_form(&mu, &nu) {
        return Ok(None);
    }
    let (bm, bn) = (atlas.crystal(&mu)?, atlas.crystal(&nu)?);
    let lost = || Error::Inconsistent("component identification failed".into());
    let x = lower_along(&*bm, &0, &wb).ok_or_else(lost)?;
    let y = lower_along(&*bn, &0, &wc).ok_or_else(lost)?;
    let Some((y2, x2)) = sigma_irreducible(atlas, &mu, &nu, x, y)? else {
        return Ok(None);
    };
    let (_, w) = raise_to_highest(&*bn, &y2);
    let mut out = lower_along(&tr, &hc, &w).ok_or_else(lost)?;
    let (_, w) = raise_to_highest(&*bm, &x2);
    out.extend(lower_along(&tl, &hb, &w).ok_or_else(lost)?);
    Ok(Some(out))
}

/// Applies `sigma_k` (swapping tensor positions `k`, `k+1`) for each entry of
/// `word`, first entry first. Returns the permuted factor list and the image.
pub fn sigma_word(
    atlas: &Atlas,
    factors: &[Weight],
    word: &[usize],
    b: &[usize],
) -> Result<(Vec<Weight>, Option<Vec<usize>>)> {
    let mut factors = factors.to_vec();
    let mut cur = Some(b.to_vec());
    for &k in word {
        if k + 1 >= factors.len() {
            return Err(Error::BadTransposition {
                index: k,
                factors: factors.len(),
            });
        }
        if let Some(t) = cur.as_mut() {
            match sigma_irreducible(atlas, &factors[k], &factors[k + 1], t[k], t[k + 1])? {
                Some((x, y)) => {
                    t[k] = x;
                    t[k + 1] = y;
                }
                None => cur = None,
            }
        }
        factors.swap(k, k + 1);
    }
    Ok((factors, cur))
}

fn split(atlas: &Atlas, lambda: &Weight, mu: &Weight) -> Result<Weight> {
    atlas.datum().check_dominant(lambda)?;
    atlas.datum().check_dominant(mu)?;
    let rest = lambda - mu;
    if !rest.is_dominant() {
        return Err(Error::NotDominated(lambda.clone(), mu.clone()));
    }
    Ok(rest)
}

/// `R_mu(b)`: the second factor of `b` under `B(lambda) -> B(lambda-mu) (x) B(mu)`.
pub fn right_end(atlas: &Atlas, lambda: &Weight, b: usize, mu: &Weight) -> Result<usize> {
    let rest = split(atlas, lambda, mu)?;
    let e = atlas.cartan(&[rest, mu.clone()])?;
    e.target().check_element(b)?;
    Ok(e.tuple(b)[1])
}

/// `L_mu(b)`: the first factor of `b` under `B(lambda) -> B(mu) (x) B(lambda-mu)`.
pub fn left_end(atlas: &Atlas, lambda: &Weight, b: usize, mu: &Weight) -> Result<usize> {
    let rest = split(atlas, lambda, mu)?;
    let e = atlas.cartan(&[mu.clone(), rest])?;
    e.target().check_element(b)?;
    Ok(e.tuple(b)[0])
}

/// `R_S(b)` for `b` in `B(lambda)`.
pub fn right_ends(atlas: &Atlas, lambda: &Weight, b: usize, s: &[Weight]) -> Result<Vec<usize>> {
    s.iter().map(|mu| right_end(atlas, lambda, b, mu)).collect()
}

/// `R_S` on a product of irreducibles: zero off the Cartan component.
pub fn right_ends_product(
    atlas: &Atlas,
    factors: &[Weight],
    b: &[usize],
    s: &[Weight],
) -> Result<Option<Vec<usize>>> {
    let e = atlas.cartan(factors)?;
    match e.project(b) {
        None => Ok(None),
        Some(k) => right_ends(atlas, &atlas.sum(factors), k, s).map(Some),
    }
}

/// The rightmost factor of `sigma_{n-1} ... sigma_k (b)`, which moves factor
/// `k` to the end.
pub fn right_end_by_sigma(
    atlas: &Atlas,
    factors: &[Weight],
    b: &[usize],
    k: usize,
) -> Result<Option<usize>> {
    let word: Vec<usize> = (k..factors.len().saturating_sub(1)).collect();
    let (_, img) = sigma_word(atlas, factors, &word, b)?;
    Ok(img.map(|t| *t.last().unwrap()))
}

/// Full table of `sigma` on `B(lambda) (x) B(mu)`, lexicographic in the input.
pub type BraidingRow = ((usize, usize), Option<(usize, usize)>);

pub fn braiding_table(atlas: &Atlas, lambda: &Weight, mu: &Weight) -> Result<Vec<BraidingRow>> {
    let (bl, bm) = (atlas.crystal(lambda)?, atlas.crystal(mu)?);
    let mut rows = Vec::with_capacity(bl.len() * bm.len());
    for b in 0..bl.len() {
        for c in 0..bm.len() {
            rows.push(((b, c), sigma_irreducible(atlas, lambda, mu, b, c)?));
        }
    }
    Ok(rows)
}

fn fmt_tuple(t: &[usize]) -> String {
    let parts: Vec<String> = t.iter().map(|x| (x + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

fn fmt_opt(t: &Option<Vec<usize>>) -> String {
    t.as_ref().map_or("0".into(), |t| fmt_tuple(t))
}

/// All tuples of a product of irreducibles.
fn all_tuples(atlas: &Atlas, factors: &[Weight]) -> Result<Vec<Vec<usize>>> {
    Ok(atlas.tensor(factors)?.elements().collect())
}

/// `sigma` commutes with every Kashiwara operator on `B(lambda) (x) B(mu)`.
pub fn check_morphism(atlas: &Atlas, lambda: &Weight, mu: &Weight) -> Result<Check> {
    let src = atlas.tensor(&[lambda.clone(), mu.clone()])?;
    let dst = atlas.tensor(&[mu.clone(), lambda.clone()])?;
    let sigma = |t: &Vec<usize>| -> Option<Vec<usize>> {
        sigma_irreducible(atlas, lambda, mu, t[0], t[1])
            .ok()
            .flatten()
            .map(|(x, y)| vec![x, y])
    };
    let tuples = all_tuples(atlas, &[lambda.clone(), mu.clone()])?;
    let outcomes = par::flat_map(&tuples, |t| {
        let mut out = Vec::new();
        for i in 0..atlas.rank() {
            let s = sigma(t);
            let a = src.lower(i, t).and_then(|u| sigma(&u));
            let b = s.as_ref().and_then(|u| dst.lower(i, u));
            let c = src.raise(i, t).and_then(|u| sigma(&u));
            let d = s.as_ref().and_then(|u| dst.raise(i, u));
            out.push(
                (a != b || c != d)
                    .then(|| format!("{lambda}x{mu} at {} colour {}", fmt_tuple(t), i + 1)),
            );
        }
        out
    });
    Ok(Check::from_outcomes(
        format!("morphism {lambda}x{mu}"),
        outcomes,
    ))
}

/// Both hexagon identities on `B(l1) (x) B(l2) (x) B(l3)`.
pub fn check_hexagon(atlas: &Atlas, triple: &[Weight; 3]) -> Result<Check> {
    let [l1, l2, l3] = triple;
    let tuples = all_tuples(atlas, triple)?;
    let outcomes = par::map(&tuples, |t| {
        let run = || -> Result<Option<String>> {
            let lhs = cartan_braiding(atlas, &triple[..1], &triple[1..], &t[..1], &t[1..])?;
            let (_, rhs) = sigma_word(atlas, triple, &[0, 1], t)?;
            let lhs2 = cartan_braiding(atlas, &triple[..2], &triple[2..], &t[..2], &t[2..])?;
            let (_, rhs2) = sigma_word(atlas, triple, &[1, 0], t)?;
            Ok((lhs != rhs || lhs2 != rhs2).then(|| {
                format!(
                    "{l1}x{l2}x{l3} at {}: {} vs {}, {} vs {}",
                    fmt_tuple(t),
                    fmt_opt(&lhs),
                    fmt_opt(&rhs),
                    fmt_opt(&lhs2),
                    fmt_opt(&rhs2)
                )
            }))
        };
        run().unwrap_or_else(|e| Some(e.to_string()))
    });
    Ok(Check::from_outcomes(
        format!("hexagon {l1}x{l2}x{l3}"),
        outcomes,
    ))
}

/// `sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2` pointwise.
pub fn check_braid(atlas: &Atlas, triple: &[Weight; 3]) -> Result<Check> {
    let tuples = all_tuples(atlas, triple)?;
    let outcomes = par::map(&tuples, |t| {
        let a = sigma_word(atlas, triple, &[0, 1, 0], t).map(|x| x.1);
        let b = sigma_word(atlas, triple, &[1, 0, 1], t).map(|x| x.1);
        match (a, b) {
            (Ok(a), Ok(b)) if a == b => None,
            (Ok(a), Ok(b)) => Some(format!(
                "{} -> {} vs {}",
                fmt_tuple(t),
                fmt_opt(&a),
                fmt_opt(&b)
            )),
            (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
        }
    });
    let [l1, l2, l3] = triple;
    Ok(Check::from_outcomes(
        format!("braid {l1}x{l2}x{l3}"),
        outcomes,
    ))
}

/// Reduced words of every permutation of three letters, shortest first.
const S3_WORDS: [&[usize]; 6] = [&[], &[0], &[1], &[0, 1], &[1, 0], &[0, 1, 0]];

/// Cartan component membership, nonvanishing of every `sigma_s`, and
/// nonvanishing of `sigma_{s_0}` agree pointwise.
pub fn check_longest_word(atlas: &Atlas, triple: &[Weight; 3]) -> Result<Check> {
    let tuples = all_tuples(atlas, triple)?;
    let cartan = atlas.cartan(triple)?;
    let outcomes = par::map(&tuples, |t| {
        let eta = cartan.contains(t);
        let all = S3_WORDS
            .iter()
            .all(|w| matches!(sigma_word(atlas, triple, w, t), Ok((_, Some(_)))));
        let longest = matches!(sigma_word(atlas, triple, &[0, 1, 0], t), Ok((_, Some(_))));
        (eta != all || all != longest)
            .then(|| format!("{}: eta={eta} all={all} longest={longest}", fmt_tuple(t)))
    });
    let [l1, l2, l3] = triple;
    Ok(Check::from_outcomes(
        format!("longest word {l1}x{l2}x{l3}"),
        outcomes,
    ))
}

/// `sigma(b (x) c) = c (x) b` exactly when `b (x) c` is in the Cartan component
/// and `(wt b, wt c) = (lambda, mu)`.
pub fn check_commutation(atlas: &Atlas, lambda: &Weight, mu: &Weight) -> Result<Check> {
    let pair = [lambda.clone(), mu.clone()];
    let cartan = atlas.cartan(&pair)?;
    let (bl, bm) = (atlas.crystal(lambda)?, atlas.crystal(mu)?);
    let form = atlas.datum().bilinear_form(lambda, mu);
    let mut check = Check::new(format!("commutation {lambda}x{mu}"));
    for t in all_tuples(atlas, &pair)? {
        let swapped = sigma_irreducible(atlas, lambda, mu, t[0], t[1])? == Some((t[1], t[0]));
        let predicted = cartan.contains(&t)
            && atlas
                .datum()
                .bilinear_form(&bl.weights()[t[0]], &bm.weights()[t[1]])
                == form;
        check.record((swapped != predicted).then(|| fmt_tuple(&t)));
    }
    Ok(check)
}

/// The right end read off the Cartan embedding agrees with the rightmost
/// factor after braiding factor `k` to the end.
pub fn check_right_end_sigma(atlas: &Atlas, factors: &[Weight]) -> Result<Check> {
    let cartan = atlas.cartan(factors)?;
    let lambda = atlas.sum(factors);
    let mut check = Check::new(format!("right end via sigma {factors:?}"));
    for (k, t) in cartan.tuples().iter().enumerate() {
        for (pos, mu) in factors.iter().enumerate() {
            let direct = right_end(atlas, &lambda, k, mu)?;
            let via = right_end_by_sigma(atlas, factors, t, pos)?;
            check
                .record((via != Some(direct)).then(|| format!("{} pos {}", fmt_tuple(t), pos + 1)));
        }
    }
    Ok(check)
}

/// Every suite in this module over all triples of fundamental weights.
pub fn braiding_suite(atlas: &Atlas) -> Result<VerificationReport> {
    let r = atlas.rank();
    let fundamentals: Vec<Weight> = (0..r).map(|i| atlas.fundamental(i)).collect();
    let mut report = VerificationReport::default();
    for a in &fundamentals {
        for b in &fundamentals {
            report.push(check_morphism(atlas, a, b)?);
            report.push(check_commutation(atlas, a, b)?);
        }
    }
    for a in &fundamentals {
        for b in &fundamentals {
            for c in &fundamentals {
                let triple = [a.clone(), b.clone(), c.clone()];
                report.push(check_hexagon(atlas, &triple)?);
                report.push(check_braid(atlas, &triple)?);
                report.push(check_longest_word(atlas, &triple)?);
                report.push(check_right_end_sigma(atlas, &triple)?);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn sl3_table() {
        let atlas = Atlas::parse("A2").unwrap();
        let rows = braiding_table(&atlas, &w(&[1, 0]), &w(&[0, 1])).unwrap();
        // (a_i, b_j) -> (b_k, a_l), 1-based, from the worked A2 example.
        let expected = [
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
        for (((b, c), img), ((eb, ec), eimg)) in rows.iter().zip(expected) {
            assert_eq!((b + 1, c + 1), (eb, ec));
            assert_eq!(img.map(|(x, y)| (x + 1, y + 1)), eimg, "a{eb} b{ec}");
        }
    }

    #[test]
    fn sl4_nonzero_on_two_components() {
        let atlas = Atlas::parse("A3").unwrap();
        let (w1, w2, w3) = (w(&[1, 0, 0]), w(&[0, 1, 0]), w(&[0, 0, 1]));
        let right = [w2.clone(), w3.clone()];
        let tr = atlas.tensor(&right).unwrap();
        let comps = tr.components(1000).unwrap();
        let mut hit = std::collections::BTreeSet::new();
        for b in 0..4 {
            for t in tr.elements() {
                if cartan_braiding(&atlas, &[w1.clone()], &right, &[b], &t)
                    .unwrap()
                    .is_some()
                {
                    let c = comps.component_of[tr.position(&t)];
                    hit.insert(comps.components[c].highest_weight.clone());
                }
            }
        }
        assert!(hit.contains(&(&w2 + &w3)));
        assert!(hit.contains(&w1));
    }

    #[test]
    fn sl3_right_ends() {
        let atlas = Atlas::parse("A2").unwrap();
        let colours = [w(&[1, 0]), w(&[0, 1])];
        let cases = [
            ((1, 1), Some((1, 1))),
            ((2, 1), Some((2, 1))),
            ((3, 1), Some((2, 1))),
            ((1, 2), Some((1, 2))),
            ((2, 2), Some((1, 2))),
            ((3, 2), Some((3, 2))),
            ((1, 3), None),
            ((2, 3), Some((2, 3))),
            ((3, 3), Some((3, 3))),
        ];
        for ((a, b), expected) in cases {
            let got = right_ends_product(&atlas, &colours, &[a - 1, b - 1], &colours).unwrap();
            assert_eq!(got.map(|v| (v[0] + 1, v[1] + 1)), expected, "a{a} b{b}");
        }
    }

    #[test]
    fn ends_of_extremal_elements() {
        let atlas = Atlas::parse("A2").unwrap();
        let rho = w(&[1, 1]);
        let w1 = w(&[1, 0]);
        assert_eq!(right_end(&atlas, &rho, 0, &w1).unwrap(), 0);
        assert_eq!(left_end(&atlas, &rho, 0, &w1).unwrap(), 0);
        let low = atlas.crystal(&rho).unwrap().lowest();
        let low1 = atlas.crystal(&w1).unwrap().lowest();
        assert_eq!(left_end(&atlas, &rho, low, &w1).unwrap(), low1);
        assert!(right_end(&atlas, &w1, 0, &rho).is_err());
    }

    #[test]
    fn sigma_word_bounds() {
        let atlas = Atlas::parse("A2").unwrap();
        let f = [w(&[1, 0]), w(&[0, 1])];
        assert_eq!(
            sigma_word(&atlas, &f, &[], &[2, 1]).unwrap().1,
            Some(vec![2, 1])
        );
        assert!(sigma_word(&atlas, &f, &[1], &[0, 0]).is_err());
    }
}

#[cfg(test)]
mod suite_tests {
    use super::*;

    #[test]
    fn suites_pass_on_rank_two() {
        for label in ["A2", "C2"] {
            let atlas = Atlas::parse(label).unwrap();
            let report = braiding_suite(&atlas).unwrap();
            assert!(report.passed(), "{label}\n{report}");
        }
    }
}
