//! Finite crystallographic root systems with exact integral data.
//!
//! Weights are stored in fundamental-weight coordinates, roots in simple-root
//! coordinates. The invariant form is normalised so that short roots have
//! squared length 2. Positive roots are kept in one fixed convex order, the one
//! induced by the greedy (smallest left descent first) reduced word of the
//! longest Weyl group element; every sign and every root-of-unity exponent in
//! the crate is computed relative to that order.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A Cartan type such as `B2` or `E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=8).contains(&rank),
            Family::B | Family::C => (2..=8).contains(&rank),
            Family::D => (4..=8).contains(&rank),
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::UnsupportedType(format!("{family:?}{rank}")))
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnsupportedType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnsupportedType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An integral weight in fundamental-weight coordinates.
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

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, m: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * m).collect())
    }

    /// Exact division of every coordinate, `None` if some coordinate is not
    /// divisible.
    pub fn div_exact(&self, m: i64) -> Option<Weight> {
        if self.0.iter().all(|c| c % m == 0) {
            Some(Weight(self.0.iter().map(|c| c / m).collect()))
        } else {
            None
        }
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Parses comma separated coordinates, e.g. `2,1`.
    pub fn parse(s: &str, rank: usize) -> Result<Weight> {
        let s = s.trim();
        let coords: Vec<i64> = if s.is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad weight coordinate `{t}`")))
                })
                .collect::<Result<_>>()?
        };
        if coords.len() != rank {
            return Err(Error::RankMismatch {
                rank,
                got: coords.len(),
            });
        }
        Ok(Weight(coords))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// A subset of the simple roots, stored as a bit mask over 0-based indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSet(pub u32);

impl SimpleSet {
    pub const EMPTY: SimpleSet = SimpleSet(0);

    pub fn all(rank: usize) -> Self {
        SimpleSet((1u32 << rank) - 1)
    }

    pub fn from_indices(idx: &[usize]) -> Self {
        SimpleSet(idx.iter().fold(0, |m, &i| m | (1 << i)))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// All subsets of `{0, .., rank-1}`.
    pub fn all_subsets(rank: usize) -> impl Iterator<Item = SimpleSet> {
        (0u32..(1 << rank)).map(SimpleSet)
    }

    /// 1-based labels, as used on the command line and in JSON output.
    pub fn labels(&self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Parses 1-based comma separated indices; the empty string is the empty set.
    pub fn parse(s: &str, rank: usize) -> Result<SimpleSet> {
        let mut mask = 0u32;
        for t in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let i: usize = t
                .parse()
                .map_err(|_| Error::Parse(format!("bad simple-root index `{t}`")))?;
            if i == 0 || i > rank {
                return Err(Error::Parse(format!(
                    "simple-root index {i} outside 1..={rank}"
                )));
            }
            mask |= 1 << (i - 1);
        }
        Ok(SimpleSet(mask))
    }
}

/// Serialised as the list of 1-based labels.
impl Serialize for SimpleSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimpleSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(d)?;
        if labels.iter().any(|&i| i == 0 || i > 32) {
            return Err(serde::de::Error::custom("simple-root labels are 1-based"));
        }
        Ok(SimpleSet::from_indices(
            &labels.iter().map(|i| i - 1).collect::<Vec<_>>(),
        ))
    }
}

impl fmt::Display for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

/// A positive root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Root {
    /// Simple-root coordinates.
    pub coords: Vec<i64>,
    /// Coordinates of the coroot in the basis of simple coroots.
    pub coroot: Vec<i64>,
    /// Fundamental-weight coordinates.
    pub weight: Weight,
    /// Squared length, 2 for short roots.
    pub norm: i64,
    pub height: i64,
}

impl Root {
    pub fn is_long(&self, short_norm: i64) -> bool {
        self.norm > short_norm
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`.
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    det: i64,
    /// `det * cartan^{-1}`, integral.
    inv_scaled: Vec<Vec<i64>>,
    positive: Vec<Root>,
    root_index: HashMap<Vec<i64>, usize>,
    w0_word: Vec<usize>,
    highest_short: usize,
    coxeter: i64,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.cartan_type == other.cartan_type
    }
}

fn gram_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut g = vec![vec![0i64; n]; n];
    let bond = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match t.family {
        Family::A => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                bond(&mut g, i, i + 1, -1);
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                g[i][i] = 4;
            }
            g[n - 1][n - 1] = 2;
            for i in 0..n - 1 {
                bond(&mut g, i, i + 1, -2);
            }
        }
        Family::C => {
            for i in 0..n - 1 {
                g[i][i] = 2;
            }
            g[n - 1][n - 1] = 4;
            for i in 0..n - 2 {
                bond(&mut g, i, i + 1, -1);
            }
            bond(&mut g, n - 2, n - 1, -2);
        }
        Family::D => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n - 2 {
                bond(&mut g, i, i + 1, -1);
            }
            bond(&mut g, n - 3, n - 1, -1);
        }
        Family::E => {
            for i in 0..n {
                g[i][i] = 2;
            }
            bond(&mut g, 0, 2, -1);
            bond(&mut g, 1, 3, -1);
            for i in 2..n - 1 {
                bond(&mut g, i, i + 1, -1);
            }
        }
        Family::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            bond(&mut g, 0, 1, -2);
            bond(&mut g, 1, 2, -2);
            bond(&mut g, 2, 3, -1);
        }
        Family::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            bond(&mut g, 0, 1, -3);
        }
    }
    g
}

/// Exact inverse and determinant of a small integer matrix.
fn invert(m: &[Vec<i64>]) -> (i64, Vec<Vec<Ratio<i64>>>) {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
            r
        })
        .collect();
    let mut det = Ratio::one();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is nonsingular");
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    assert!(det.is_integer());
    let inv = a.into_iter().map(|r| r[n..].to_vec()).collect();
    (det.to_integer(), inv)
}

impl RootSystem {
    /// Builds the root system of the given type, enumerating positive roots by
    /// closure from the simple roots.
    pub fn new(cartan_type: CartanType) -> RootSystem {
        let n = cartan_type.rank;
        let gram = gram_matrix(cartan_type);
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();
        let symmetrizers: Vec<i64> = (0..n).map(|i| gram[i][i] / 2).collect();
        let (det, inv) = invert(&cartan);
        let inv_scaled: Vec<Vec<i64>> = inv
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        let y = *x * det;
                        assert!(y.is_integer());
                        y.to_integer()
                    })
                    .collect()
            })
            .collect();

        // Closure by height using root strings: beta + alpha_i is a root iff
        // q = p - <beta, alpha_i^vee> > 0, p the length of the downward string.
        let pair = |beta: &[i64], i: usize| -> i64 { (0..n).map(|j| cartan[i][j] * beta[j]).sum() };
        let mut all: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut seen: std::collections::HashSet<Vec<i64>> = all.iter().cloned().collect();
        let mut level = all.clone();
        while !level.is_empty() {
            let mut next = Vec::new();
            for beta in &level {
                for i in 0..n {
                    let mut p = 0;
                    loop {
                        let mut down = beta.clone();
                        down[i] -= p + 1;
                        if seen.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let q = p - pair(beta, i);
                    if q > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if seen.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            next.sort();
            all.extend(next.iter().cloned());
            level = next;
        }

        // Greedy reduced word of w0 acting on -rho, then the convex order
        // gamma_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}).
        let mut v = vec![-1i64; n];
        let mut w0_word = Vec::new();
        while let Some(i) = (0..n).find(|&i| v[i] < 0) {
            w0_word.push(i);
            let vi = v[i];
            for (j, vj) in v.iter_mut().enumerate() {
                *vj -= vi * cartan[j][i];
            }
        }
        let reflect = |beta: &mut Vec<i64>, i: usize| {
            let c = pair(beta, i);
            beta[i] -= c;
        };
        let mut ordered: Vec<Vec<i64>> = Vec::with_capacity(all.len());
        for (k, &ik) in w0_word.iter().enumerate() {
            let mut beta = vec![0; n];
            beta[ik] = 1;
            for &ij in w0_word[..k].iter().rev() {
                reflect(&mut beta, ij);
            }
            ordered.push(beta);
        }
        assert_eq!(ordered.len(), all.len(), "w0 word length equals |Phi^+|");

        let positive: Vec<Root> = ordered
            .into_iter()
            .map(|coords| {
                let norm: i64 = (0..n)
                    .map(|i| (0..n).map(|j| coords[i] * gram[i][j] * coords[j]).sum::<i64>())
                    .sum();
                let coroot: Vec<i64> = (0..n).map(|i| coords[i] * gram[i][i] / norm).collect();
                let weight = Weight((0..n).map(|i| pair(&coords, i)).collect());
                let height = coords.iter().sum();
                Root {
                    coords,
                    coroot,
                    weight,
                    norm,
                    height,
                }
            })
            .collect();
        let root_index = positive
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coords.clone(), k))
            .collect();
        let short = positive.iter().map(|r| r.norm).min().unwrap();
        let highest_short = (0..positive.len())
            .filter(|&k| positive[k].norm == short)
            .max_by_key(|&k| positive[k].height)
            .unwrap();
        let coxeter = positive[highest_short].coroot.iter().sum::<i64>() + 1;

        RootSystem {
            cartan_type,
            cartan,
            gram,
            symmetrizers,
            det,
            inv_scaled,
            positive,
            root_index,
            w0_word,
            highest_short,
            coxeter,
        }
    }

    pub fn build(family: Family, rank: usize) -> Result<RootSystem> {
        Ok(RootSystem::new(CartanType::new(family, rank)?))
    }

    pub fn parse(label: &str) -> Result<RootSystem> {
        Ok(RootSystem::new(label.parse()?))
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

    /// Gram matrix `(alpha_i, alpha_j)` of the simple roots.
    pub fn gram_matrix(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    /// Determinant of the Cartan matrix, equal to the index `|X / Z Phi|`.
    pub fn index_of_connection(&self) -> i64 {
        self.det
    }

    /// Positive roots in the canonical convex order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.positive[k]
    }

    /// Index (in the canonical order) of the positive root with the given
    /// simple-root coordinates.
    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    /// Index of the simple root `alpha_i`.
    pub fn simple_root_index(&self, i: usize) -> usize {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        self.root_index[&v]
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        if self.root_index.contains_key(coords) {
            return true;
        }
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        self.root_index.contains_key(&neg)
    }

    /// The reduced word of `w0` defining the canonical order (0-based indices).
    pub fn w0_word(&self) -> &[usize] {
        &self.w0_word
    }

    pub fn highest_short_root(&self) -> &Root {
        &self.positive[self.highest_short]
    }

    /// Coxeter number `h = (rho, alpha_0^vee) + 1`, `alpha_0` the highest short root.
    pub fn coxeter_number(&self) -> i64 {
        self.coxeter
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    fn check(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                rank: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    /// `(mu, beta^vee)`, always an integer for integral weights.
    pub fn pairing(&self, mu: &Weight, beta: &Root) -> i64 {
        mu.0.iter().zip(&beta.coroot).map(|(a, b)| a * b).sum()
    }

    pub fn try_pairing(&self, mu: &Weight, beta: &Root) -> Result<i64> {
        self.check(mu)?;
        if beta.coroot.len() != self.rank() {
            return Err(Error::RankMismatch {
                rank: self.rank(),
                got: beta.coroot.len(),
            });
        }
        Ok(self.pairing(mu, beta))
    }

    /// `det * (mu, nu)`, an integer.
    pub fn inner_scaled(&self, mu: &Weight, nu: &Weight) -> i64 {
        let c = self.root_coords_scaled(mu);
        (0..self.rank())
            .map(|i| c[i] * self.symmetrizers[i] * nu.0[i])
            .sum()
    }

    /// The W-invariant inner product `(mu, nu)` as an exact rational.
    pub fn inner(&self, mu: &Weight, nu: &Weight) -> Ratio<i64> {
        Ratio::new(self.inner_scaled(mu, nu), self.det)
    }

    pub fn try_inner(&self, mu: &Weight, nu: &Weight) -> Result<Ratio<i64>> {
        self.check(mu)?;
        self.check(nu)?;
        Ok(self.inner(mu, nu))
    }

    /// Inner product of two positive roots, given by index.
    pub fn root_inner(&self, a: usize, b: usize) -> i64 {
        let (x, y) = (&self.positive[a].coords, &self.positive[b].coords);
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| x[i] * self.gram[i][j] * y[j]).sum::<i64>())
            .sum()
    }

    /// `det` times the simple-root coordinates of `mu`.
    pub fn root_coords_scaled(&self, mu: &Weight) -> Vec<i64> {
        self.inv_scaled
            .iter()
            .map(|row| row.iter().zip(&mu.0).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Simple-root coordinates of `mu` if `mu` lies in the root lattice.
    pub fn root_coords(&self, mu: &Weight) -> Option<Vec<i64>> {
        let s = self.root_coords_scaled(mu);
        if s.iter().all(|c| c % self.det == 0) {
            Some(s.iter().map(|c| c / self.det).collect())
        } else {
            None
        }
    }

    /// Simple-root coordinates as exact rationals.
    pub fn root_coords_rational(&self, mu: &Weight) -> Vec<Ratio<i64>> {
        self.root_coords_scaled(mu)
            .into_iter()
            .map(|c| Ratio::new(c, self.det))
            .collect()
    }

    pub fn in_root_lattice(&self, mu: &Weight) -> bool {
        self.root_coords(mu).is_some()
    }

    /// Converts simple-root coordinates to a weight.
    pub fn weight_of(&self, coords: &[i64]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * coords[j]).sum())
                .collect(),
        )
    }

    /// The fundamental-weight coordinates of the simple root `alpha_i`.
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight((0..self.rank()).map(|j| self.cartan[j][i]).collect())
    }

    /// `s_i(mu)`.
    pub fn reflect(&self, mu: &Weight, i: usize) -> Weight {
        let c = mu.0[i];
        Weight(
            (0..self.rank())
                .map(|j| mu.0[j] - c * self.cartan[j][i])
                .collect(),
        )
    }

    /// `s_i . mu = s_i(mu + rho) - rho`.
    pub fn reflect_dot(&self, mu: &Weight, i: usize) -> Weight {
        let c = mu.0[i] + 1;
        Weight(
            (0..self.rank())
                .map(|j| mu.0[j] - c * self.cartan[j][i])
                .collect(),
        )
    }

    /// Dominant weights `mu != 0` with `(mu, beta^vee) <= 1` for all positive
    /// roots, found by scanning the 0/1 box of fundamental coordinates.
    pub fn minuscule_weights(&self) -> Vec<Weight> {
        let n = self.rank();
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let mu = Weight((0..n).map(|i| ((mask >> i) & 1) as i64).collect());
            if self.positive.iter().all(|b| self.pairing(&mu, b) <= 1) {
                out.push(mu);
            }
        }
        out.sort();
        out
    }

    /// Indices of the positive roots of the Levi subsystem `Phi_J^+`.
    pub fn levi_roots(&self, j: SimpleSet) -> Vec<usize> {
        (0..self.positive.len())
            .filter(|&k| {
                self.positive[k]
                    .coords
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || j.contains(i))
            })
            .collect()
    }

    /// Indices of `Phi^+ \ Phi_J^+`, the roots of the nilradical `u_J`.
    pub fn nilradical_roots(&self, j: SimpleSet) -> Vec<usize> {
        let levi = self.levi_roots(j);
        (0..self.positive.len())
            .filter(|k| !levi.contains(k))
            .collect()
    }

    /// SHA-256 over the Cartan matrix and the canonical order, hex encoded.
    pub fn data_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let doc = serde_json::to_string(&(&self.cartan, &self.w0_word)).expect("serialisable");
        hex::encode(Sha256::digest(doc.as_bytes()))
    }

    pub fn to_document(&self) -> RootSystemDoc {
        RootSystemDoc {
            cartan_type: self.cartan_type,
            rank: self.rank(),
            cartan_matrix: self.cartan.clone(),
            symmetrizers: self.symmetrizers.clone(),
            index_of_connection: self.det,
            coxeter_number: self.coxeter,
            w0_word: self.w0_word.iter().map(|i| i + 1).collect(),
            highest_short_root: self.highest_short_root().coords.clone(),
            positive_roots: self
                .positive
                .iter()
                .map(|r| RootDoc {
                    root_coords: r.coords.clone(),
                    weight_coords: r.weight.0.clone(),
                    norm: r.norm,
                })
                .collect(),
            minuscule_weights: self.minuscule_weights(),
        }
    }
}

/// JSON form of a root system.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSystemDoc {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub symmetrizers: Vec<i64>,
    pub index_of_connection: i64,
    pub coxeter_number: i64,
    /// 1-based reduced word of `w0` fixing the order of `positive_roots`.
    pub w0_word: Vec<usize>,
    pub highest_short_root: Vec<i64>,
    pub positive_roots: Vec<RootDoc>,
    pub minuscule_weights: Vec<Weight>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootDoc {
    pub root_coords: Vec<i64>,
    pub weight_coords: Vec<i64>,
    pub norm: i64,
}
