//! The Weyl group as an explicit list of elements.
//!
//! Elements are identified by the image of `rho`, which is regular, so
//! `w -> w(rho)` is injective. Reduced words are the greedy ones: repeatedly
//! strip the smallest left descent.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{CartanType, Family, RootSystem, SimpleSet, Weight};

/// Default upper bound on `|W|` for enumeration.
pub const DEFAULT_ORDER_BOUND: u128 = 10_000_000;

/// A Weyl group element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    /// Greedy reduced word, 0-based simple-reflection indices; `w = s_{word[0]} s_{word[1]} ...`.
    pub word: Vec<usize>,
    /// `w(rho)` in fundamental coordinates.
    pub rho_image: Weight,
    /// Bit `k` set iff the k-th positive root (canonical order) lies in `Phi(w)`.
    pub inversions: u128,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Label such as `s2s1`, or `e` for the identity (1-based indices).
    pub fn label(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word.iter().map(|i| format!("s{}", i + 1)).collect()
        }
    }

    /// Canonical-order indices of `Phi(w)`, ascending.
    pub fn inversion_indices(&self) -> Vec<usize> {
        (0..128).filter(|k| self.inversions >> k & 1 == 1).collect()
    }

    /// `w(mu)`.
    pub fn act(&self, rs: &RootSystem, mu: &Weight) -> Weight {
        self.word
            .iter()
            .rev()
            .fold(mu.clone(), |acc, &i| rs.reflect(&acc, i))
    }

    /// `w . mu = w(mu + rho) - rho`.
    pub fn dot(&self, rs: &RootSystem, mu: &Weight) -> Weight {
        let rho = rs.rho();
        &self.act(rs, &(mu + &rho)) - &rho
    }

    /// `w^{-1}(mu)`.
    pub fn act_inverse(&self, rs: &RootSystem, mu: &Weight) -> Weight {
        self.word
            .iter()
            .fold(mu.clone(), |acc, &i| rs.reflect(&acc, i))
    }

    /// Integer matrix of `w` on fundamental-weight coordinates (column `j` is `w(omega_j)`).
    pub fn matrix(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        let n = rs.rank();
        let cols: Vec<Weight> = (0..n)
            .map(|j| self.act(rs, &Weight::fundamental(n, j)))
            .collect();
        (0..n)
            .map(|i| (0..n).map(|j| cols[j].0[i]).collect())
            .collect()
    }

    /// True iff `w` is a minimal length representative in `W_J w`.
    pub fn is_min_coset_rep(&self, rs: &RootSystem, j: SimpleSet) -> bool {
        j.iter()
            .all(|i| self.inversions >> rs.simple_root_index(i) & 1 == 0)
    }
}

fn inversion_mask(rs: &RootSystem, rho_image: &Weight) -> u128 {
    rs.positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, b)| rs.pairing(rho_image, b) < 0)
        .fold(0u128, |m, (k, _)| m | (1u128 << k))
}

fn greedy_word(rs: &RootSystem, rho_image: &Weight) -> Vec<usize> {
    let mut v = rho_image.clone();
    let mut word = Vec::new();
    while let Some(i) = (0..rs.rank()).find(|&i| v.0[i] < 0) {
        word.push(i);
        v = rs.reflect(&v, i);
    }
    word
}

/// Order of the Weyl group from the classical formulas.
pub fn group_order(t: CartanType) -> u128 {
    let n = t.rank as u128;
    let fact = |k: u128| (1..=k).product::<u128>();
    match t.family {
        Family::A => fact(n + 1),
        Family::B | Family::C => (1u128 << n) * fact(n),
        Family::D => (1u128 << (n - 1)) * fact(n),
        Family::E => [51_840, 2_903_040, 696_729_600][t.rank - 6],
        Family::F => 1152,
        Family::G => 12,
    }
}

/// The enumerated Weyl group.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<WeylElement>,
    index: HashMap<Weight, usize>,
}

#[derive(Serialize, Deserialize)]
struct CacheDoc {
    cartan_type: CartanType,
    elements: Vec<CacheEntry>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    word: Vec<usize>,
    matrix: Vec<Vec<i64>>,
}

impl WeylGroup {
    pub fn new(rs: &RootSystem) -> Result<WeylGroup> {
        WeylGroup::with_bound(rs, DEFAULT_ORDER_BOUND)
    }

    /// Enumerates `W` as the orbit of `rho`, refusing groups above `bound`.
    pub fn with_bound(rs: &RootSystem, bound: u128) -> Result<WeylGroup> {
        let order = group_order(rs.cartan_type());
        if order > bound {
            return Err(Error::GroupTooLarge {
                cartan_type: rs.cartan_type().to_string(),
                order,
                bound,
            });
        }
        let rho = rs.rho();
        let mut seen: HashMap<Weight, ()> = HashMap::with_capacity(order as usize);
        seen.insert(rho.clone(), ());
        let mut orbit = vec![rho];
        let mut head = 0;
        while head < orbit.len() {
            let v = orbit[head].clone();
            head += 1;
            for i in 0..rs.rank() {
                let u = rs.reflect(&v, i);
                if !seen.contains_key(&u) {
                    seen.insert(u.clone(), ());
                    orbit.push(u);
                }
            }
        }
        if orbit.len() as u128 != order {
            return Err(Error::Internal(format!(
                "orbit of rho has {} points, expected {order}",
                orbit.len()
            )));
        }
        Ok(WeylGroup::from_rho_images(rs, orbit))
    }

    fn from_rho_images(rs: &RootSystem, images: Vec<Weight>) -> WeylGroup {
        let mut elements: Vec<WeylElement> = images
            .into_iter()
            .map(|rho_image| WeylElement {
                word: greedy_word(rs, &rho_image),
                inversions: inversion_mask(rs, &rho_image),
                rho_image,
            })
            .collect();
        elements.sort_by(|a, b| (a.length(), &a.word).cmp(&(b.length(), &b.word)));
        let index = elements
            .iter()
            .enumerate()
            .map(|(k, e)| (e.rho_image.clone(), k))
            .collect();
        WeylGroup {
            rs: rs.clone(),
            elements,
            index,
        }
    }

    /// Default cache directory: `$NILCOH_CACHE`, else `./.nilcoh-cache`.
    pub fn cache_dir() -> PathBuf {
        std::env::var_os("NILCOH_CACHE")
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(".nilcoh-cache"))
    }

    /// Loads the group from `dir` if a valid cache file exists, otherwise
    /// enumerates and writes one. A corrupt cache file is ignored and rewritten.
    pub fn cached(rs: &RootSystem, dir: &Path, bound: u128) -> Result<WeylGroup> {
        let path = dir.join(format!("weyl-{}.json", rs.cartan_type()));
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(g) = WeylGroup::from_cache(rs, &text) {
                return Ok(g);
            }
        }
        let g = WeylGroup::with_bound(rs, bound)?;
        fs::create_dir_all(dir)?;
        let doc = CacheDoc {
            cartan_type: rs.cartan_type(),
            elements: g
                .elements
                .iter()
                .map(|e| CacheEntry {
                    word: e.word.clone(),
                    matrix: e.matrix(rs),
                })
                .collect(),
        };
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string(&doc)?)?;
        fs::rename(&tmp, &path)?;
        Ok(g)
    }

    fn from_cache(rs: &RootSystem, text: &str) -> Result<WeylGroup> {
        let doc: CacheDoc = serde_json::from_str(text)?;
        if doc.cartan_type != rs.cartan_type()
            || doc.elements.len() as u128 != group_order(rs.cartan_type())
        {
            return Err(Error::Parse("stale Weyl group cache".into()));
        }
        let n = rs.rank();
        let rho = rs.rho();
        let mut images = Vec::with_capacity(doc.elements.len());
        for e in &doc.elements {
            if e.matrix.len() != n || e.matrix.iter().any(|r| r.len() != n) {
                return Err(Error::Parse("malformed cache matrix".into()));
            }
            let img = Weight(
                (0..n)
                    .map(|i| (0..n).map(|j| e.matrix[i][j] * rho.0[j]).sum())
                    .collect(),
            );
            let from_word = e
                .word
                .iter()
                .rev()
                .try_fold(rho.clone(), |acc, &i| {
                    (i < n).then(|| rs.reflect(&acc, i))
                })
                .ok_or_else(|| Error::Parse("malformed cache word".into()))?;
            if img != from_word {
                return Err(Error::Parse("cache word and matrix disagree".into()));
            }
            images.push(img);
        }
        let g = WeylGroup::from_rho_images(rs, images);
        if g.index.len() != g.elements.len() {
            return Err(Error::Parse("duplicate cache entries".into()));
        }
        Ok(g)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements sorted by `(length, word)`; index 0 is the identity.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn index_of_rho_image(&self, img: &Weight) -> Option<usize> {
        self.index.get(img).copied()
    }

    /// Index of the element with the given (not necessarily reduced) word.
    pub fn from_word(&self, word: &[usize]) -> usize {
        let img = word
            .iter()
            .rev()
            .fold(self.rs.rho(), |acc, &i| self.rs.reflect(&acc, i));
        self.index[&img]
    }

    /// Index of `a * b`.
    pub fn compose(&self, a: usize, b: usize) -> usize {
        let img = self.elements[a].act(&self.rs, &self.elements[b].rho_image);
        self.index[&img]
    }

    pub fn inverse(&self, a: usize) -> usize {
        let img = self.elements[a].act_inverse(&self.rs, &self.rs.rho());
        self.index[&img]
    }

    pub fn dot(&self, a: usize, mu: &Weight) -> Weight {
        self.elements[a].dot(&self.rs, mu)
    }

    /// Element whose inversion set is exactly `mask`, if any.
    pub fn by_inversions(&self, mask: u128) -> Option<usize> {
        let len = mask.count_ones() as usize;
        // w(rho) = rho - sum of Phi(w)
        let mut img = self.rs.rho();
        for k in 0..self.rs.num_positive() {
            if mask >> k & 1 == 1 {
                img = &img - &self.rs.root(k).weight;
            }
        }
        self.index
            .get(&img)
            .copied()
            .filter(|&k| self.elements[k].inversions == mask && self.elements[k].length() == len)
    }

    /// Coefficients of `sum_w t^{l(w)}`.
    pub fn length_polynomial(&self) -> Vec<u64> {
        let mut poly = vec![0u64; self.rs.num_positive() + 1];
        for e in &self.elements {
            poly[e.length()] += 1;
        }
        poly
    }

    /// Minimal length representatives `^J W`, sorted by `(length, word)`.
    pub fn min_coset_reps(&self, j: SimpleSet) -> CosetSystem {
        let reps = (0..self.elements.len())
            .filter(|&k| self.elements[k].is_min_coset_rep(&self.rs, j))
            .collect();
        CosetSystem { j, reps }
    }

    /// Elements of the parabolic subgroup `W_J`.
    pub fn parabolic_subgroup(&self, j: SimpleSet) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&k| self.elements[k].word.iter().all(|&i| j.contains(i)))
            .collect()
    }
}

/// Minimal length coset representatives for `W_J \ W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSystem {
    pub j: SimpleSet,
    /// Indices into [`WeylGroup::elements`].
    pub reps: Vec<usize>,
}

/// Formats a polynomial as `1 + 2t + 2t^2 + t^3`, skipping zero terms.
pub fn format_polynomial(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (d, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let var = match d {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{d}"),
        };
        terms.push(match (c, d) {
            (_, 0) => c.to_string(),
            (1, _) => var,
            _ => format!("{c}{var}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(label: &str) -> WeylGroup {
        WeylGroup::new(&RootSystem::parse(label).unwrap()).unwrap()
    }

    #[test]
    fn length_polynomials() {
        assert_eq!(group("A1").length_polynomial(), vec![1, 1]);
        assert_eq!(group("A2").length_polynomial(), vec![1, 2, 2, 1]);
        assert_eq!(group("B2").length_polynomial(), vec![1, 2, 2, 2, 1]);
        assert_eq!(format_polynomial(&[1, 2, 2, 1]), "1 + 2t + 2t^2 + t^3");
    }

    #[test]
    fn b2_dot_examples() {
        let g = group("B2");
        let rs = g.root_system();
        // alpha = alpha_1 (long), beta = alpha_2 (short)
        let sbsa = g.from_word(&[1, 0]);
        let sasb = g.from_word(&[0, 1]);
        let zero = Weight::zero(2);
        assert_eq!(rs.root_coords(&g.dot(sbsa, &zero)), Some(vec![-1, -3]));
        assert_eq!(rs.root_coords(&g.dot(sasb, &zero)), Some(vec![-2, -1]));
    }

    #[test]
    fn a2_boundary_dot_example() {
        let g = group("A2");
        let rs = g.root_system();
        let lambda = Weight(vec![2, 1]);
        let lhs = g.dot(g.longest(), &lambda);
        let shift = rs.weight_of(&[-5, -5]);
        assert_eq!(lhs, &lambda + &shift);
    }

    #[test]
    fn inversion_sets() {
        let g = group("A2");
        let rs = g.root_system();
        let s1s2 = g.element(g.from_word(&[0, 1]));
        let mut inv: Vec<Vec<i64>> = s1s2
            .inversion_indices()
            .iter()
            .map(|&k| rs.root(k).coords.clone())
            .collect();
        inv.sort();
        assert_eq!(inv, vec![vec![1, 0], vec![1, 1]]);
        assert_eq!(g.element(0).inversions, 0);
        assert_eq!(g.element(g.longest()).inversions, 0b111);
    }

    #[test]
    fn coset_reps() {
        let g = group("A2");
        assert_eq!(g.min_coset_reps(SimpleSet::EMPTY).reps.len(), 6);
        let c = g.min_coset_reps(SimpleSet::from_indices(&[0]));
        let labels: Vec<String> = c.reps.iter().map(|&k| g.element(k).label()).collect();
        assert_eq!(labels, vec!["e", "s2", "s2s1"]);
        assert_eq!(g.min_coset_reps(SimpleSet::all(2)).reps, vec![0]);
    }

    #[test]
    fn group_laws_and_lengths() {
        for label in ["A3", "B3", "G2", "C3"] {
            let g = group(label);
            let rs = g.root_system();
            let n = g.order();
            let w0 = g.longest();
            assert_eq!(g.element(w0).length(), rs.num_positive());
            let mut masks = std::collections::HashSet::new();
            for a in 0..n {
                let e = g.element(a);
                assert_eq!(e.length(), e.inversions.count_ones() as usize);
                assert!(masks.insert(e.inversions));
                assert_eq!(
                    g.element(g.compose(w0, a)).length(),
                    rs.num_positive() - e.length()
                );
                assert_eq!(g.compose(a, g.inverse(a)), 0);
                assert_eq!(g.by_inversions(e.inversions), Some(a));
                let m = e.matrix(rs);
                let det = determinant(&m);
                assert_eq!(det.abs(), 1);
                assert_eq!(det, if e.length() % 2 == 0 { 1 } else { -1 });
            }
            let lam = Weight((0..rs.rank() as i64).map(|i| i + 1).collect());
            for a in (0..n).step_by(3) {
                for b in (0..n).step_by(5) {
                    assert_eq!(
                        g.dot(a, &g.dot(b, &lam)),
                        g.dot(g.compose(a, b), &lam)
                    );
                }
            }
        }
    }

    #[test]
    fn action_preserves_inner_product() {
        let g = group("B3");
        let rs = g.root_system();
        let mu = Weight(vec![1, -2, 3]);
        let nu = Weight(vec![0, 4, -1]);
        for e in g.elements() {
            assert_eq!(rs.inner(&e.act(rs, &mu), &e.act(rs, &nu)), rs.inner(&mu, &nu));
        }
    }

    #[test]
    fn dot_orbit_of_dominant_weights_is_regular() {
        for label in ["A2", "B2", "A3"] {
            let g = group(label);
            let n = g.root_system().rank();
            for code in 0..4i64.pow(n as u32) {
                let lam = Weight((0..n).map(|i| (code / 4i64.pow(i as u32)) % 4).collect());
                let images: std::collections::HashSet<Weight> =
                    (0..g.order()).map(|a| g.dot(a, &lam)).collect();
                assert_eq!(images.len(), g.order());
            }
        }
    }

    #[test]
    fn order_bound_enforced() {
        let rs = RootSystem::parse("E8").unwrap();
        assert!(matches!(
            WeylGroup::new(&rs),
            Err(Error::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let rs = RootSystem::parse("B3").unwrap();
        let a = WeylGroup::cached(&rs, dir.path(), DEFAULT_ORDER_BOUND).unwrap();
        assert!(dir.path().join("weyl-B3.json").exists());
        let b = WeylGroup::cached(&rs, dir.path(), DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(a.elements, b.elements);
        fs::write(dir.path().join("weyl-B3.json"), "{garbage").unwrap();
        let c = WeylGroup::cached(&rs, dir.path(), DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(a.elements, c.elements);
    }

    fn determinant(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * determinant(&minor)
            })
            .sum()
    }
}
