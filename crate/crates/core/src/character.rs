//! Formal characters on the weight lattice.
//!
//! Levi simple characters are the characteristic-zero ones, computed with
//! Freudenthal's formula. That is the right answer for the weights fed in by
//! [`crate::kostant`] (J-restricted weights of the form `w . lambda` with
//! `lambda` in the bottom alcove); it is not checked here.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::alcove::{check_rank, is_j_dominant};
use crate::error::{Error, Result};
use crate::root_system::{RootSystem, SimpleSet, Weight};

/// A finitely supported function `X -> Z`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FormalCharacter {
    support: BTreeMap<Weight, i64>,
}

impl FormalCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    /// `e^mu`.
    pub fn weight(mu: Weight) -> Self {
        let mut c = Self::new();
        c.add_term(mu, 1);
        c
    }

    pub fn trivial(rank: usize) -> Self {
        Self::weight(Weight::zero(rank))
    }

    pub fn add_term(&mut self, mu: Weight, m: i64) {
        if m == 0 {
            return;
        }
        match self.support.entry(mu) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += m;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(m);
            }
        }
    }

    pub fn multiplicity(&self, mu: &Weight) -> i64 {
        self.support.get(mu).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.support.iter()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Sum of multiplicities, the dimension of a module with this character.
    pub fn dim(&self) -> i64 {
        self.support.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.support.values().all(|&m| m > 0)
    }

    pub fn add(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (mu, m) in &other.support {
            out.add_term(mu.clone(), *m);
        }
        out
    }

    pub fn scale(&self, c: i64) -> FormalCharacter {
        let mut out = FormalCharacter::new();
        for (mu, m) in &self.support {
            out.add_term(mu.clone(), m * c);
        }
        out
    }

    /// Character of the tensor product.
    pub fn mul(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut out = FormalCharacter::new();
        for (a, m) in &self.support {
            for (b, n) in &other.support {
                out.add_term(a + b, m * n);
            }
        }
        out
    }

    /// Tensor with the one-dimensional module of weight `nu`.
    pub fn shift(&self, nu: &Weight) -> FormalCharacter {
        FormalCharacter {
            support: self.support.iter().map(|(mu, m)| (mu + nu, *m)).collect(),
        }
    }

    /// Frobenius twist: every weight multiplied by `m`.
    pub fn frobenius_twist(&self, m: i64) -> FormalCharacter {
        assert!(m >= 1, "twist factor must be positive");
        FormalCharacter {
            support: self.support.iter().map(|(mu, c)| (mu.scale(m), *c)).collect(),
        }
    }

    /// Applies a map to every weight (which must be injective to keep the
    /// support consistent; otherwise terms are added).
    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> FormalCharacter {
        let mut out = FormalCharacter::new();
        for (mu, m) in &self.support {
            out.add_term(f(mu), *m);
        }
        out
    }

    /// Restriction to the weights satisfying `pred`.
    pub fn filter(&self, pred: impl Fn(&Weight) -> bool) -> FormalCharacter {
        FormalCharacter {
            support: self
                .support
                .iter()
                .filter(|(mu, _)| pred(mu))
                .map(|(mu, m)| (mu.clone(), *m))
                .collect(),
        }
    }
}

impl Serialize for FormalCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<(&Vec<i64>, i64)> = self.support.iter().map(|(w, m)| (&w.0, *m)).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FormalCharacter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<(Vec<i64>, i64)> = Vec::deserialize(d)?;
        let mut c = FormalCharacter::new();
        for (w, m) in v {
            c.add_term(Weight(w), m);
        }
        Ok(c)
    }
}

impl FromIterator<(Weight, i64)> for FormalCharacter {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        let mut c = FormalCharacter::new();
        for (w, m) in iter {
            c.add_term(w, m);
        }
        c
    }
}

/// One formal character per cohomological degree, starting at 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedCharacter {
    pub degrees: Vec<FormalCharacter>,
}

impl GradedCharacter {
    pub fn new(degrees: Vec<FormalCharacter>) -> Self {
        GradedCharacter { degrees }
    }

    pub fn degree(&self, n: usize) -> FormalCharacter {
        self.degrees.get(n).cloned().unwrap_or_default()
    }

    pub fn poincare(&self) -> Vec<i64> {
        self.degrees.iter().map(FormalCharacter::dim).collect()
    }

    pub fn poincare_string(&self) -> String {
        let p: Vec<u64> = self.poincare().iter().map(|&d| d.max(0) as u64).collect();
        crate::weyl::format_polynomial(&p)
    }
}

/// `2 rho_J` in fundamental coordinates.
fn two_rho_j(rs: &RootSystem, j: SimpleSet) -> Weight {
    rs.levi_roots(j)
        .into_iter()
        .fold(Weight::zero(rs.rank()), |acc, k| &acc + &rs.root(k).weight)
}

/// Character of the simple module of highest weight `mu` for the Levi `L_J`,
/// by Freudenthal's formula.
pub fn levi_simple_character(rs: &RootSystem, mu: &Weight, j: SimpleSet) -> Result<FormalCharacter> {
    check_rank(rs, mu)?;
    if !is_j_dominant(mu, j) {
        return Err(Error::NotJDominant {
            weight: mu.to_string(),
        });
    }
    if j.is_empty() {
        return Ok(FormalCharacter::weight(mu.clone()));
    }
    let jidx: Vec<usize> = j.iter().collect();
    let levi = rs.levi_roots(j);
    let rho2 = two_rho_j(rs, j);

    // lowest weight w_J(mu) bounds the depth of every weight
    let mut low = mu.clone();
    while let Some(&i) = jidx.iter().find(|&&i| low.0[i] > 0) {
        low = rs.reflect(&low, i);
    }
    let depth = rs.root_coords(&(mu - &low)).expect("difference lies in the root lattice");
    let bounds: Vec<i64> = jidx.iter().map(|&i| depth[i]).collect();

    let alpha: Vec<(Vec<i64>, Weight)> = levi
        .iter()
        .map(|&k| {
            let r = rs.root(k);
            (jidx.iter().map(|&i| r.coords[i]).collect(), r.weight.clone())
        })
        .collect();
    let weight_at = |n: &[i64]| -> Weight {
        let mut coords = vec![0i64; rs.rank()];
        for (t, &i) in jidx.iter().enumerate() {
            coords[i] = n[t];
        }
        mu - &rs.weight_of(&coords)
    };
    let c = |nu: &Weight| -> i64 {
        let v = &nu.scale(2) + &rho2;
        rs.inner_scaled(&v, &v)
    };
    let c_mu = c(mu);

    // all depth vectors in the box, sorted by total depth
    let mut boxes: Vec<Vec<i64>> = vec![vec![]];
    for &b in &bounds {
        boxes = boxes
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    boxes.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));

    let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
    let mut out = FormalCharacter::new();
    for n in boxes {
        let nu = weight_at(&n);
        let m = if n.iter().all(|&x| x == 0) {
            1
        } else {
            let mut s = 0i64;
            for (a, aw) in &alpha {
                for k in 1.. {
                    let up: Vec<i64> = n.iter().zip(a).map(|(x, y)| x - k * y).collect();
                    if up.iter().any(|&x| x < 0) {
                        break;
                    }
                    let mm = mult.get(&up).copied().unwrap_or(0);
                    if mm != 0 {
                        let w = weight_at(&up);
                        s += mm * rs.inner_scaled(&w, aw);
                    }
                }
            }
            let denom = c_mu - c(&nu);
            if denom == 0 {
                if s != 0 {
                    return Err(Error::Internal(format!(
                        "Freudenthal recursion inconsistent at {nu}"
                    )));
                }
                0
            } else {
                if (8 * s) % denom != 0 {
                    return Err(Error::Internal(format!(
                        "non-integral multiplicity at {nu}"
                    )));
                }
                8 * s / denom
            }
        };
        if m != 0 {
            mult.insert(n, m);
            out.add_term(nu, m);
        }
    }
    Ok(out)
}

/// Weyl dimension formula for the Levi.
pub fn levi_weyl_dimension(rs: &RootSystem, mu: &Weight, j: SimpleSet) -> i64 {
    let rho2 = two_rho_j(rs, j);
    let shifted = &mu.scale(2) + &rho2;
    let (mut num, mut den) = (1i128, 1i128);
    for k in rs.levi_roots(j) {
        let a = &rs.root(k).weight;
        num *= rs.inner_scaled(&shifted, a) as i128;
        den *= rs.inner_scaled(&rho2, a) as i128;
    }
    (num / den) as i64
}

/// Moves `mu` to the J-dominant chamber by simple dot-reflections. Returns
/// `None` when `mu + rho_J` is W_J-singular, otherwise the dominant weight
/// and the sign `(-1)^{l(u)}`.
pub fn dominant_dot_correction(rs: &RootSystem, mu: &Weight, j: SimpleSet) -> Option<(Weight, i64)> {
    let mut nu = mu.clone();
    let mut sign = 1;
    // (rho_J, alpha_i^vee) = 1 for i in J
    while let Some(i) = j.iter().find(|&i| nu.0[i] < 0) {
        if nu.0[i] == -1 {
            return None;
        }
        nu = rs.reflect_dot(&nu, i);
        sign = -sign;
    }
    Some((nu, sign))
}

/// Euler characteristic of induction from the Borel to the parabolic, for
/// the Borel of negative roots: each `e^mu` becomes the Weyl character of
/// the Levi at `mu` after dominant dot-correction.
pub fn euler_induction(rs: &RootSystem, chi: &FormalCharacter, j: SimpleSet) -> Result<FormalCharacter> {
    let mut cache: HashMap<Weight, FormalCharacter> = HashMap::new();
    let mut out = FormalCharacter::new();
    for (mu, m) in chi.iter() {
        let Some((nu, sign)) = dominant_dot_correction(rs, mu, j) else {
            continue;
        };
        if !cache.contains_key(&nu) {
            let c = levi_simple_character(rs, &nu, j)?;
            cache.insert(nu.clone(), c);
        }
        out = out.add(&cache[&nu].scale(sign * m));
    }
    Ok(out)
}

/// Character of `S^i` of the dual of the span of the given positive roots:
/// weights are sums of `i` negated roots, with repetition.
pub fn symmetric_character(rs: &RootSystem, roots: &[usize], i: usize) -> FormalCharacter {
    // by_degree[d] = character of S^d over the roots processed so far
    let mut by_degree: Vec<FormalCharacter> = vec![FormalCharacter::new(); i + 1];
    by_degree[0] = FormalCharacter::trivial(rs.rank());
    for &k in roots {
        let neg = -&rs.root(k).weight;
        for d in 1..=i {
            // S^d(V + L) = sum_k S^{d-k}(V) L^k, accumulated in increasing d
            let prev = by_degree[d - 1].shift(&neg);
            by_degree[d] = by_degree[d].add(&prev);
        }
    }
    by_degree.swap_remove(i)
}
