//! Brute-force Lie algebra cohomology of `u_J` with trivial coefficients.
//!
//! Structure constants come from a Chevalley basis of the positive part: the
//! magnitudes are forced by root strings, the sign of the first pair summing
//! to each root (canonical order) is `+1`, and the remaining signs are solved
//! from the Jacobi identity. The Chevalley-Eilenberg complex is built on
//! subsets of the roots of `u_J`, split into T-weight blocks, and its
//! cohomology is read off from exact ranks.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::character::{FormalCharacter, GradedCharacter};
use crate::error::{Error, Result};
use crate::kostant::check_subset;
use crate::linalg::{kernel, mat_vec, rank, solve, Field, Matrix};
use crate::root_system::{RootSystem, SimpleSet, Weight};
use crate::weyl::WeylGroup;

/// Default cap on `dim u_J`.
pub const DEFAULT_MAX_GENERATORS: usize = 14;

/// Structure constants `[x_b, x_c] = N_{b,c} x_{b+c}` on positive roots.
#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    num: usize,
    /// `sums[b][c]` = index of `b + c` if it is a positive root.
    sums: Vec<Vec<Option<usize>>>,
    consts: Vec<Vec<i64>>,
}

impl ChevalleyBasis {
    pub fn new(rs: &RootSystem) -> Result<ChevalleyBasis> {
        let np = rs.num_positive();
        let add = |a: &[i64], b: &[i64], k: i64| -> Vec<i64> {
            a.iter().zip(b).map(|(x, y)| x + k * y).collect()
        };
        let mut sums = vec![vec![None; np]; np];
        let mut mags = vec![vec![0i64; np]; np];
        for b in 0..np {
            for c in 0..np {
                let (rb, rc) = (&rs.root(b).coords, &rs.root(c).coords);
                if let Some(s) = rs.root_index(&add(rb, rc, 1)) {
                    sums[b][c] = Some(s);
                    let mut p = 0;
                    while rs.is_root(&add(rc, rb, -(p + 1))) {
                        p += 1;
                    }
                    mags[b][c] = p + 1;
                }
            }
        }

        let mut consts = vec![vec![0i64; np]; np];
        let mut order: Vec<usize> = (0..np).collect();
        order.sort_by_key(|&k| (rs.root(k).height, k));
        for &xi in &order {
            let pairs: Vec<(usize, usize)> = (0..np)
                .flat_map(|b| (b + 1..np).map(move |c| (b, c)))
                .filter(|&(b, c)| sums[b][c] == Some(xi))
                .collect();
            if pairs.is_empty() {
                continue;
            }
            // Jacobi relations among the constants landing in xi: for a + b + c = xi,
            // N_ab N_{a+b,c} + N_bc N_{b+c,a} + N_ca N_{c+a,b} = 0.
            let slot: HashMap<(usize, usize), usize> =
                pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
            let signed_slot = |u: usize, v: usize| -> (usize, i64) {
                if u < v {
                    (slot[&(u, v)], 1)
                } else {
                    (slot[&(v, u)], -1)
                }
            };
            let mut relations: Vec<Vec<(usize, i64)>> = Vec::new();
            for a in 0..np {
                for b in a + 1..np {
                    for c in b + 1..np {
                        let total = add(&add(&rs.root(a).coords, &rs.root(b).coords, 1), &rs.root(c).coords, 1);
                        if rs.root_index(&total) != Some(xi) {
                            continue;
                        }
                        let mut rel = Vec::new();
                        for (u, v, w) in [(a, b, c), (b, c, a), (c, a, b)] {
                            if let Some(uv) = sums[u][v] {
                                // N_uv N_{uv, w}
                                let (k, s) = signed_slot(uv, w);
                                rel.push((k, s * consts[u][v] * mags[uv.min(w)][uv.max(w)]));
                            }
                        }
                        if !rel.is_empty() {
                            relations.push(rel);
                        }
                    }
                }
            }
            let signs = solve_signs(pairs.len(), &relations).ok_or_else(|| {
                Error::Internal(format!(
                    "no consistent Chevalley signs for root {:?}",
                    rs.root(xi).coords
                ))
            })?;
            for (k, &(b, c)) in pairs.iter().enumerate() {
                consts[b][c] = signs[k] * mags[b][c];
                consts[c][b] = -consts[b][c];
            }
        }
        let basis = ChevalleyBasis {
            num: np,
            sums,
            consts,
        };
        basis.verify_jacobi()?;
        Ok(basis)
    }

    /// `N_{b,c}`, zero when `b + c` is not a root.
    pub fn constant(&self, b: usize, c: usize) -> i64 {
        self.consts[b][c]
    }

    pub fn sum(&self, b: usize, c: usize) -> Option<usize> {
        self.sums[b][c]
    }

    pub fn verify_jacobi(&self) -> Result<()> {
        let n = self.num;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut total = 0;
                    let mut target = None;
                    for (u, v, w) in [(a, b, c), (b, c, a), (c, a, b)] {
                        if let Some(uv) = self.sums[u][v] {
                            if let Some(t) = self.sums[uv][w] {
                                target = Some(t);
                                total += self.consts[u][v] * self.consts[uv][w];
                            }
                        }
                    }
                    if target.is_some() && total != 0 {
                        return Err(Error::Internal(format!(
                            "Jacobi identity fails on roots {a}, {b}, {c}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Finds signs `s_k` with `s_0 = 1` satisfying every relation `sum c s_k = 0`.
fn solve_signs(n: usize, relations: &[Vec<(usize, i64)>]) -> Option<Vec<i64>> {
    fn holds(rel: &[(usize, i64)], s: &[i64]) -> Option<bool> {
        let mut total = 0;
        for &(k, c) in rel {
            if s[k] == 0 {
                return None;
            }
            total += c * s[k];
        }
        Some(total == 0)
    }
    fn go(k: usize, s: &mut Vec<i64>, rels: &[Vec<(usize, i64)>]) -> bool {
        if rels.iter().any(|r| holds(r, s) == Some(false)) {
            return false;
        }
        if k == s.len() {
            return true;
        }
        for v in [1, -1] {
            s[k] = v;
            if go(k + 1, s, rels) {
                return true;
            }
        }
        s[k] = 0;
        false
    }
    let mut s = vec![0i64; n];
    s[0] = 1;
    go(1, &mut s, relations).then_some(s)
}

/// Sign of sorting a sequence of distinct indices; `None` on a repeat.
fn sort_sign(seq: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..seq.len() {
        let mut k = i;
        while k > 0 && seq[k - 1] >= seq[k] {
            if seq[k - 1] == seq[k] {
                return None;
            }
            seq.swap(k - 1, k);
            sign = -sign;
            k -= 1;
        }
    }
    Some(sign)
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|k| mask >> k & 1 == 1).collect()
}

/// The Chevalley-Eilenberg complex `Lambda^*(u_J^*)`, split by T-weight.
#[derive(Clone, Debug)]
pub struct GradedComplex<F: Field> {
    field: F,
    j: SimpleSet,
    /// Canonical-order indices of the roots of `u_J`; cochain bit `t` is `f_{roots[t]}`.
    roots: Vec<usize>,
    /// Weight of `f_S` in simple-root coordinates is minus the sum of `S`.
    blocks: BTreeMap<(usize, Vec<i64>), Vec<u64>>,
    position: HashMap<u64, usize>,
    /// Integer differential of each basis cochain, as sparse `(mask, coefficient)`.
    diff: Vec<Vec<(u64, i64)>>,
}

impl<F: Field> GradedComplex<F> {
    pub fn new(rs: &RootSystem, j: SimpleSet, field: F, max_generators: usize) -> Result<Self> {
        check_subset(rs, j)?;
        let roots = rs.nilradical_roots(j);
        let nj = roots.len();
        if nj > max_generators || nj > 32 {
            return Err(Error::Budget(format!(
                "dim u_J = {nj} exceeds the limit {max_generators}"
            )));
        }
        let cb = ChevalleyBasis::new(rs)?;
        // d f_g = - sum_{b + c = g, b < c} N_{b,c} f_b ^ f_c
        let dgen: Vec<Vec<(usize, usize, i64)>> = roots
            .iter()
            .map(|&g| {
                let mut terms = Vec::new();
                for (tb, &b) in roots.iter().enumerate() {
                    for (tc, &c) in roots.iter().enumerate().skip(tb + 1) {
                        if cb.sum(b, c) == Some(g) {
                            terms.push((tb, tc, -cb.constant(b, c)));
                        }
                    }
                }
                terms
            })
            .collect();

        let total = 1u64 << nj;
        let mut blocks: BTreeMap<(usize, Vec<i64>), Vec<u64>> = BTreeMap::new();
        for mask in 0..total {
            let mut wt = vec![0i64; rs.rank()];
            for t in bits(mask) {
                for (x, y) in wt.iter_mut().zip(&rs.root(roots[t]).coords) {
                    *x -= y;
                }
            }
            blocks.entry((mask.count_ones() as usize, wt)).or_default().push(mask);
        }
        let mut position = HashMap::with_capacity(total as usize);
        for masks in blocks.values() {
            for (i, &m) in masks.iter().enumerate() {
                position.insert(m, i);
            }
        }
        let diff: Vec<Vec<(u64, i64)>> = (0..total)
            .into_par_iter()
            .map(|mask| {
                let s = bits(mask);
                let mut acc: BTreeMap<u64, i64> = BTreeMap::new();
                for (k, &g) in s.iter().enumerate() {
                    for &(b, c, coef) in &dgen[g] {
                        let mut seq: Vec<usize> = s.clone();
                        seq.splice(k..=k, [b, c]);
                        if let Some(sg) = sort_sign(&mut seq) {
                            let parity = if k % 2 == 0 { 1 } else { -1 };
                            let m = seq.iter().fold(0u64, |m, &t| m | 1 << t);
                            *acc.entry(m).or_insert(0) += parity * sg * coef;
                        }
                    }
                }
                acc.into_iter().filter(|(_, v)| *v != 0).collect()
            })
            .collect();

        let complex = GradedComplex {
            field,
            j,
            roots,
            blocks,
            position,
            diff,
        };
        complex.verify_square_zero()?;
        Ok(complex)
    }

    fn verify_square_zero(&self) -> Result<()> {
        let bad = (0..self.diff.len()).into_par_iter().find_any(|&mask| {
            let mut acc: HashMap<u64, i64> = HashMap::new();
            for &(m, c) in &self.diff[mask] {
                for &(m2, c2) in &self.diff[m as usize] {
                    *acc.entry(m2).or_insert(0) += c * c2;
                }
            }
            acc.values().any(|&v| v != 0)
        });
        match bad {
            Some(m) => Err(Error::Internal(format!("d^2 != 0 on cochain {m:#b}"))),
            None => Ok(()),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn j(&self) -> SimpleSet {
        self.j
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    /// Block keys `(degree, weight in simple-root coordinates)`.
    pub fn block_keys(&self) -> impl Iterator<Item = &(usize, Vec<i64>)> {
        self.blocks.keys()
    }

    pub fn block(&self, n: usize, weight: &[i64]) -> &[u64] {
        self.blocks
            .get(&(n, weight.to_vec()))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Sparse integer differential of the cochain `f_S`, `S` given as a bit mask.
    pub fn differential(&self, mask: u64) -> &[(u64, i64)] {
        &self.diff[mask as usize]
    }

    /// Matrix of `d: C^n_mu -> C^{n+1}_mu` over the field.
    pub fn matrix(&self, n: usize, weight: &[i64]) -> Matrix<F::E> {
        let src = self.block(n, weight);
        let dst = self.block(n + 1, weight);
        let f = &self.field;
        let mut m = vec![vec![f.zero(); src.len()]; dst.len()];
        for (col, &s) in src.iter().enumerate() {
            for &(t, c) in &self.diff[s as usize] {
                let row = self.position[&t];
                m[row][col] = f.add(&m[row][col], &f.from_i64(c));
            }
        }
        m
    }

    /// Text dump of one block of the differential as `row col value` lines.
    pub fn dump_triples(&self, n: usize, weight: &[i64]) -> String {
        let src = self.block(n, weight);
        let mut out = String::new();
        for (col, &s) in src.iter().enumerate() {
            for &(t, c) in &self.diff[s as usize] {
                out.push_str(&format!("{} {} {}\n", self.position[&t], col, c));
            }
        }
        out
    }

    fn rank_of(&self, n: usize, weight: &[i64]) -> usize {
        let src = self.block(n, weight).len();
        if src == 0 || self.block(n + 1, weight).is_empty() {
            return 0;
        }
        rank(&self.field, &self.matrix(n, weight), src)
    }

    /// Dimension of `H^n` in each weight block, as `(n, weight, dim)`.
    pub fn cohomology_dims(&self) -> Vec<(usize, Vec<i64>, usize)> {
        let keys: Vec<&(usize, Vec<i64>)> = self.blocks.keys().collect();
        keys.par_iter()
            .map(|(n, wt)| {
                let dim = self.blocks[&(*n, wt.clone())].len();
                let out_rank = self.rank_of(*n, wt);
                let in_rank = if *n == 0 { 0 } else { self.rank_of(n - 1, wt) };
                (*n, wt.clone(), dim - out_rank - in_rank)
            })
            .filter(|(_, _, d)| *d > 0)
            .collect()
    }

    /// Cohomology as a graded T-character (weights in fundamental coordinates).
    pub fn cohomology(&self, rs: &RootSystem) -> GradedCharacter {
        let top = self.roots.len();
        let mut degrees = vec![FormalCharacter::new(); top + 1];
        for (n, wt, dim) in self.cohomology_dims() {
            degrees[n].add_term(rs.weight_of(&wt), dim as i64);
        }
        GradedCharacter::new(degrees)
    }

    /// Euler characteristic of the cochains, per weight.
    pub fn cochain_euler_characteristic(&self, rs: &RootSystem) -> FormalCharacter {
        let mut out = FormalCharacter::new();
        for ((n, wt), masks) in &self.blocks {
            let s = if n % 2 == 0 { 1 } else { -1 };
            out.add_term(rs.weight_of(wt), s * masks.len() as i64);
        }
        out
    }

    fn mask_of(&self, inversions: u128) -> Option<u64> {
        let mut mask = 0u64;
        for k in (0..128).filter(|k| inversions >> k & 1 == 1) {
            let t = self.roots.iter().position(|&r| r == k)?;
            mask |= 1 << t;
        }
        Some(mask)
    }

    fn weight_of_mask(&self, rs: &RootSystem, mask: u64) -> Vec<i64> {
        let mut wt = vec![0i64; rs.rank()];
        for t in bits(mask) {
            for (x, y) in wt.iter_mut().zip(&rs.root(self.roots[t]).coords) {
                *x -= y;
            }
        }
        wt
    }

    fn is_cocycle(&self, mask: u64) -> bool {
        let f = &self.field;
        self.diff[mask as usize]
            .iter()
            .all(|&(_, c)| f.is_zero(&f.from_i64(c)))
    }
}

/// Result of multiplying two classes at cochain level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CupResult {
    /// The product is a coboundary.
    Zero,
    /// The product is `coefficient * [f_Phi(w)]`, `w` an index into the Weyl group.
    Multiple { coefficient: i64, w: usize },
    /// A nonzero class that is not a multiple of any `[f_Phi(w)]`.
    Other,
}

/// `[f_Phi(a)] [f_Phi(b)]` computed by wedging representatives and reducing
/// modulo coboundaries in the weight block of the product.
pub fn cochain_cup<F: Field>(cx: &GradedComplex<F>, g: &WeylGroup, a: usize, b: usize) -> Result<CupResult> {
    let rs = g.root_system();
    let (Some(ma), Some(mb)) = (cx.mask_of(g.element(a).inversions), cx.mask_of(g.element(b).inversions)) else {
        return Err(Error::Precondition("class is not a cochain of u_J".into()));
    };
    for m in [ma, mb] {
        if !cx.is_cocycle(m) {
            return Err(Error::Internal(format!("f_S for S = {m:#b} is not a cocycle")));
        }
    }
    // wedge of two monomials: concatenate and sort, counting transpositions
    let mut seq = bits(ma);
    seq.extend(bits(mb));
    let Some(sign) = sort_sign(&mut seq) else {
        return Ok(CupResult::Zero);
    };
    let prod = ma | mb;
    let n = prod.count_ones() as usize;
    let wt = cx.weight_of_mask(rs, prod);
    let f = cx.field();
    let dst = cx.block(n, &wt);
    // columns: images of d from degree n-1, then the candidate class vectors
    let mut cols: Vec<Vec<F::E>> = Vec::new();
    if n > 0 {
        let dm = cx.matrix(n - 1, &wt);
        for c in 0..cx.block(n - 1, &wt).len() {
            cols.push(dm.iter().map(|row| row[c].clone()).collect());
        }
    }
    let boundary_cols = cols.len();
    let candidates: Vec<(usize, u64)> = (0..g.order())
        .filter_map(|w| {
            let m = cx.mask_of(g.element(w).inversions)?;
            (m.count_ones() as usize == n && cx.weight_of_mask(rs, m) == wt).then_some((w, m))
        })
        .collect();
    for &(_, m) in &candidates {
        let mut v = vec![f.zero(); dst.len()];
        v[cx.position[&m]] = f.one();
        cols.push(v);
    }
    let mut target = vec![f.zero(); dst.len()];
    target[cx.position[&prod]] = f.from_i64(sign);
    let mat: Matrix<F::E> = (0..dst.len())
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let ncols = cols.len();
    let Some(x) = solve(f, &mat, ncols, &target) else {
        return Ok(CupResult::Other);
    };
    // the class coefficients are unique only if the candidates are independent
    // modulo coboundaries
    let ker = kernel(f, &mat, ncols);
    if ker.iter().any(|v| v[boundary_cols..].iter().any(|e| !f.is_zero(e))) {
        return Err(Error::Internal("candidate classes are dependent".into()));
    }
    debug_assert!(mat_vec(f, &mat, &x) == target);
    let nonzero: Vec<(usize, &F::E)> = candidates
        .iter()
        .zip(&x[boundary_cols..])
        .filter(|(_, e)| !f.is_zero(e))
        .map(|(&(w, _), e)| (w, e))
        .collect();
    Ok(match nonzero.as_slice() {
        [] => CupResult::Zero,
        [(w, e)] => CupResult::Multiple {
            coefficient: f.to_i64(e).unwrap_or(i64::MAX),
            w: *w,
        },
        _ => CupResult::Other,
    })
}

/// Cohomology of `u_J` over the field, as a graded T-character.
pub fn cohomology<F: Field>(rs: &RootSystem, j: SimpleSet, field: F, max_generators: usize) -> Result<GradedCharacter> {
    Ok(GradedComplex::new(rs, j, field, max_generators)?.cohomology(rs))
}

/// Weight in fundamental coordinates of a block key.
pub fn block_weight(rs: &RootSystem, wt: &[i64]) -> Weight {
    rs.weight_of(wt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::Mode;
    use crate::kostant::kostant_decomposition;
    use crate::linalg::{Fp, Rationals};

    #[test]
    fn chevalley_examples() {
        let a2 = RootSystem::parse("A2").unwrap();
        let cb = ChevalleyBasis::new(&a2).unwrap();
        let (a1, a12, a2i) = (0, 1, 2);
        assert_eq!(cb.constant(a1, a2i), 1);
        assert_eq!(cb.constant(a2i, a1), -1);
        assert_eq!(cb.constant(a1, a1), 0);
        assert_eq!(cb.constant(a1, a12), 0);

        let b2 = RootSystem::parse("B2").unwrap();
        let cb = ChevalleyBasis::new(&b2).unwrap();
        let beta = b2.simple_root_index(1);
        let apb = b2.root_index(&[1, 1]).unwrap();
        assert_eq!(cb.constant(beta, apb).abs(), 2);
    }

    #[test]
    fn chevalley_all_types() {
        for label in ["A4", "B3", "C3", "D4", "G2", "F4", "E6"] {
            let rs = RootSystem::parse(label).unwrap();
            ChevalleyBasis::new(&rs).unwrap();
        }
    }

    #[test]
    fn a2_differential() {
        let a2 = RootSystem::parse("A2").unwrap();
        let cx = GradedComplex::new(&a2, SimpleSet::EMPTY, Fp::new(5).unwrap(), 14).unwrap();
        // bits: 0 = a1, 1 = a1+a2, 2 = a2
        assert!(cx.differential(0b001).is_empty());
        assert!(cx.differential(0b100).is_empty());
        assert_eq!(cx.differential(0b010), &[(0b101, -1)]);
        assert!(cx.differential(0b111).is_empty());
    }

    #[test]
    fn small_cohomology() {
        let a2 = RootSystem::parse("A2").unwrap();
        let h = cohomology(&a2, SimpleSet::EMPTY, Fp::new(5).unwrap(), 14).unwrap();
        assert_eq!(h.poincare(), vec![1, 2, 2, 1]);
        assert_eq!(h.degree(0), FormalCharacter::trivial(2));
        assert_eq!(h.degree(3), FormalCharacter::weight(Weight(vec![-2, -2])));
        let b2 = RootSystem::parse("B2").unwrap();
        let h = cohomology(&b2, SimpleSet::EMPTY, Fp::new(5).unwrap(), 14).unwrap();
        assert_eq!(h.poincare(), vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn oracle_matches_kostant_over_rationals() {
        for label in ["A2", "B2", "G2", "A3"] {
            let rs = RootSystem::parse(label).unwrap();
            let g = WeylGroup::new(&rs).unwrap();
            for j in SimpleSet::all_subsets(rs.rank()) {
                let h = cohomology(&rs, j, Rationals, 14).unwrap();
                let k = kostant_decomposition(&g, &Weight::zero(rs.rank()), j, Mode::Classical)
                    .unwrap()
                    .character(&rs)
                    .unwrap();
                let mut kd = k.degrees.clone();
                kd.resize(h.degrees.len(), FormalCharacter::new());
                assert_eq!(h.degrees, kd, "{label} {j}");
            }
        }
    }

    #[test]
    fn euler_characteristic_matches() {
        let rs = RootSystem::parse("B2").unwrap();
        let cx = GradedComplex::new(&rs, SimpleSet::EMPTY, Fp::new(3).unwrap(), 14).unwrap();
        let chi = cx.cochain_euler_characteristic(&rs);
        let h = cx.cohomology(&rs);
        let mut hchi = FormalCharacter::new();
        for (n, c) in h.degrees.iter().enumerate() {
            hchi = hchi.add(&c.scale(if n % 2 == 0 { 1 } else { -1 }));
        }
        assert_eq!(chi, hchi);
    }

    #[test]
    fn small_characteristic_differs() {
        // over F_2 the complex of B2 has extra cohomology
        let rs = RootSystem::parse("B2").unwrap();
        let h = cohomology(&rs, SimpleSet::EMPTY, Fp::new(2).unwrap(), 14).unwrap();
        assert!(h.poincare().iter().sum::<i64>() > 8);
    }

    #[test]
    fn a2_cups() {
        let rs = RootSystem::parse("A2").unwrap();
        let g = WeylGroup::new(&rs).unwrap();
        let cx = GradedComplex::new(&rs, SimpleSet::EMPTY, Fp::new(5).unwrap(), 14).unwrap();
        let s1 = g.from_word(&[0]);
        let s2 = g.from_word(&[1]);
        let s2s1 = g.from_word(&[1, 0]);
        assert_eq!(cochain_cup(&cx, &g, s1, 0).unwrap(), CupResult::Multiple { coefficient: 1, w: s1 });
        assert_eq!(cochain_cup(&cx, &g, s1, s2).unwrap(), CupResult::Zero);
        assert_eq!(
            cochain_cup(&cx, &g, s1, s2s1).unwrap(),
            CupResult::Multiple { coefficient: 1, w: g.longest() }
        );
    }

    #[test]
    fn budget_enforced() {
        let rs = RootSystem::parse("A4").unwrap();
        assert!(matches!(
            GradedComplex::new(&rs, SimpleSet::EMPTY, Fp::new(5).unwrap(), 8),
            Err(Error::Budget(_))
        ));
    }
}
