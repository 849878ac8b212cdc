//! The restricted enveloping algebra `u(u_J)` over `F_p` and a minimal
//! resolution of the trivial module, giving `Ext^*_{u(u_J)}(k, k)` with
//! T-weights and Yoneda products.
//!
//! Algebra elements live on the PBW basis `x^a`, `0 <= a_t < p`, ordered by the
//! canonical root order; a monomial is encoded as `sum a_t p^t`. All weights
//! inside this module are internal weights in simple-root coordinates (`x_g`
//! has weight `g`); an Ext class dual to a generator of internal weight `nu`
//! has T-weight `-nu`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::character::{FormalCharacter, GradedCharacter};
use crate::error::{Error, Result};
use crate::koszul::ChevalleyBasis;
use crate::kostant::check_subset;
use crate::linalg::{kernel, solve, Echelon, Field, Fp, Matrix};
use crate::root_system::{CartanType, RootSystem, SimpleSet, Weight};

/// Default cap on `dim u(u_J) = p^{N_J}`.
pub const DEFAULT_ALGEBRA_BUDGET: usize = 15625;

type Sparse = Vec<(u32, u64)>;

/// `u(u_J)` with its full left-multiplication table by generators.
#[derive(Clone, Debug)]
pub struct RestrictedAlgebra {
    p: u64,
    field: Fp,
    rank: usize,
    j: SimpleSet,
    roots: Vec<usize>,
    root_coords: Vec<Vec<i64>>,
    dim: usize,
    /// `left[t * dim + m]` = `x_t * x^m`.
    left: Vec<Sparse>,
    mono_weight: Vec<Vec<i64>>,
    by_weight: HashMap<Vec<i64>, Vec<u32>>,
}

fn add_into(acc: &mut HashMap<u32, u64>, m: u32, c: u64, p: u64) {
    let e = acc.entry(m).or_insert(0);
    *e = (*e + c) % p;
}

fn collect(acc: HashMap<u32, u64>) -> Sparse {
    let mut v: Sparse = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    v.sort_unstable();
    v
}

impl RestrictedAlgebra {
    pub fn new(rs: &RootSystem, j: SimpleSet, p: i64, budget: usize) -> Result<RestrictedAlgebra> {
        check_subset(rs, j)?;
        let field = Fp::new(p)?;
        let pu = p as u64;
        let roots = rs.nilradical_roots(j);
        let n = roots.len();
        let dim = (pu as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if dim > budget as u128 || dim > u32::MAX as u128 {
            return Err(Error::Budget(format!(
                "dim u(u_J) = {p}^{n} exceeds the limit {budget}"
            )));
        }
        let dim = dim as usize;
        let cb = ChevalleyBasis::new(rs)?;
        let local: HashMap<usize, usize> = roots.iter().enumerate().map(|(t, &k)| (k, t)).collect();
        // bracket[t][s] = (index of t + s, N_{t,s} mod p)
        let bracket: Vec<Vec<Option<(usize, u64)>>> = roots
            .iter()
            .map(|&a| {
                roots
                    .iter()
                    .map(|&b| {
                        let c = cb.sum(a, b)?;
                        let n = field.from_i64(cb.constant(a, b));
                        (n != 0).then(|| (local[&c], n))
                    })
                    .collect()
            })
            .collect();
        check_ad_nilpotent(&bracket, pu, rs, &roots)?;

        let root_coords: Vec<Vec<i64>> = roots.iter().map(|&k| rs.root(k).coords.clone()).collect();
        let powers: Vec<u32> = (0..n).map(|t| (pu as u32).pow(t as u32)).collect();
        let exps = |m: u32| -> Vec<u32> { (0..n).map(|t| m / powers[t] % pu as u32).collect() };

        let mut mono_weight = Vec::with_capacity(dim);
        let mut by_weight: HashMap<Vec<i64>, Vec<u32>> = HashMap::new();
        for m in 0..dim as u32 {
            let mut w = vec![0i64; rs.rank()];
            for (t, a) in exps(m).into_iter().enumerate() {
                for (x, y) in w.iter_mut().zip(&root_coords[t]) {
                    *x += a as i64 * y;
                }
            }
            by_weight.entry(w.clone()).or_default().push(m);
            mono_weight.push(w);
        }

        let mut table: Vec<Option<Sparse>> = vec![None; n * dim];
        let ctx = Straighten {
            n,
            dim,
            p: pu,
            powers: &powers,
            bracket: &bracket,
        };
        for t in 0..n {
            for m in 0..dim as u32 {
                ctx.left_mul(t, m, &mut table);
            }
        }
        let left: Vec<Sparse> = table.into_iter().map(Option::unwrap).collect();
        let alg = RestrictedAlgebra {
            p: pu,
            field,
            rank: rs.rank(),
            j,
            roots,
            root_coords,
            dim,
            left,
            mono_weight,
            by_weight,
        };
        alg.verify_relations(&bracket)?;
        Ok(alg)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn j(&self) -> SimpleSet {
        self.j
    }

    /// Canonical-order indices of the generators' roots.
    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn num_generators(&self) -> usize {
        self.roots.len()
    }

    pub fn monomial_weight(&self, m: u32) -> &[i64] {
        &self.mono_weight[m as usize]
    }

    pub fn monomials_of_weight(&self, w: &[i64]) -> &[u32] {
        self.by_weight.get(w).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `x_t * x^m` on the PBW basis.
    pub fn left_generator(&self, t: usize, m: u32) -> &[(u32, u64)] {
        &self.left[t * self.dim + m as usize]
    }

    fn exponents(&self, m: u32) -> Vec<u32> {
        let mut m = m;
        (0..self.roots.len())
            .map(|_| {
                let a = m % self.p as u32;
                m /= self.p as u32;
                a
            })
            .collect()
    }

    /// `x^m * a`.
    pub fn monomial_times(&self, m: u32, a: &[(u32, u64)]) -> Sparse {
        let mut cur: Sparse = a.to_vec();
        let e = self.exponents(m);
        for t in (0..e.len()).rev() {
            for _ in 0..e[t] {
                let mut acc = HashMap::new();
                for &(m2, c) in &cur {
                    for &(m3, c3) in self.left_generator(t, m2) {
                        add_into(&mut acc, m3, c * c3, self.p);
                    }
                }
                cur = collect(acc);
            }
        }
        cur
    }

    pub fn multiply(&self, a: &[(u32, u64)], b: &[(u32, u64)]) -> Sparse {
        let mut acc = HashMap::new();
        for &(m, c) in a {
            for (m2, c2) in self.monomial_times(m, b) {
                add_into(&mut acc, m2, c * c2, self.p);
            }
        }
        collect(acc)
    }

    /// The left-multiplication operators satisfy `[L_t, L_s] = N_{t,s} L_{t+s}` and
    /// `L_t^p = 0` on every basis vector, so the product is associative and the
    /// defining relations hold.
    fn verify_relations(&self, bracket: &[Vec<Option<(usize, u64)>>]) -> Result<()> {
        let n = self.roots.len();
        let p = self.p;
        let apply = |t: usize, v: &Sparse| -> Sparse {
            let mut acc = HashMap::new();
            for &(m, c) in v {
                for &(m2, c2) in self.left_generator(t, m) {
                    add_into(&mut acc, m2, c * c2, p);
                }
            }
            collect(acc)
        };
        let bad = (0..self.dim as u32).into_par_iter().find_any(|&m| {
            let unit: Sparse = vec![(m, 1)];
            for t in 0..n {
                let mut v = unit.clone();
                for _ in 0..p {
                    v = apply(t, &v);
                }
                if !v.is_empty() {
                    return true;
                }
                for s in 0..n {
                    let ts = apply(t, &apply(s, &unit));
                    let st = apply(s, &apply(t, &unit));
                    let mut acc: HashMap<u32, u64> = HashMap::new();
                    for (m2, c) in ts {
                        add_into(&mut acc, m2, c, p);
                    }
                    for (m2, c) in st {
                        add_into(&mut acc, m2, p - c, p);
                    }
                    if let Some((u, nn)) = bracket[t][s] {
                        for (m2, c) in apply(u, &unit) {
                            add_into(&mut acc, m2, (p - nn) * c % p, p);
                        }
                    }
                    if !collect(acc).is_empty() {
                        return true;
                    }
                }
            }
            false
        });
        match bad {
            Some(m) => Err(Error::Internal(format!(
                "restricted algebra relations fail on monomial {m}"
            ))),
            None => Ok(()),
        }
    }
}

struct Straighten<'a> {
    n: usize,
    dim: usize,
    p: u64,
    powers: &'a [u32],
    bracket: &'a [Vec<Option<(usize, u64)>>],
}

impl Straighten<'_> {
    fn left_mul(&self, t: usize, m: u32, table: &mut Vec<Option<Sparse>>) -> Sparse {
        let key = t * self.dim + m as usize;
        if let Some(v) = &table[key] {
            return v.clone();
        }
        let p = self.p as u32;
        let first = (0..self.n).find(|&s| m / self.powers[s] % p != 0);
        let result = match first {
            Some(s) if s < t => {
                // x_t x_s^a R = x_s (x_t x_s^{a-1} R) + N_{t,s} x_{t+s} x_s^{a-1} R
                let rest = m - self.powers[s];
                let mut acc = HashMap::new();
                for (m2, c) in self.left_mul(t, rest, table) {
                    for (m3, c3) in self.left_mul(s, m2, table) {
                        add_into(&mut acc, m3, c * c3, self.p);
                    }
                }
                if let Some((u, nn)) = self.bracket[t][s] {
                    for (m2, c) in self.left_mul(u, rest, table) {
                        add_into(&mut acc, m2, nn * c, self.p);
                    }
                }
                collect(acc)
            }
            Some(s) if s == t && m / self.powers[t] % p == p - 1 => Vec::new(),
            _ => vec![(m + self.powers[t], 1)],
        };
        table[key] = Some(result.clone());
        result
    }
}

/// `(ad x_g)^p = 0` on `u_J` for every generator.
fn check_ad_nilpotent(bracket: &[Vec<Option<(usize, u64)>>], p: u64, rs: &RootSystem, roots: &[usize]) -> Result<()> {
    let n = bracket.len();
    for t in 0..n {
        for s in 0..n {
            let mut v: Option<(usize, u64)> = Some((s, 1));
            for _ in 0..p {
                v = v.and_then(|(u, c)| bracket[t][u].map(|(w, nn)| (w, c * nn % p)));
            }
            if v.is_some() {
                return Err(Error::Precondition(format!(
                    "(ad x)^p != 0 for root {:?} at p = {p}",
                    rs.root(roots[t]).coords
                )));
            }
        }
    }
    Ok(())
}

/// Element of a free module `sum A e_g`: sparse `((generator, monomial), coefficient)`.
pub type FreeElement = Vec<((usize, u32), u64)>;

/// A free generator of one resolution stage and its differential.
#[derive(Clone, Debug)]
pub struct Generator {
    /// Internal weight in simple-root coordinates.
    pub weight: Vec<i64>,
    /// `d(e)` in the previous stage; empty for the augmentation at stage 0.
    pub image: FreeElement,
}

#[derive(Clone, Debug)]
pub struct ResolutionStage {
    pub degree: usize,
    pub generators: Vec<Generator>,
}

/// Minimal free resolution of the trivial module through a fixed degree.
#[derive(Clone, Debug)]
pub struct Resolution<'a> {
    alg: &'a RestrictedAlgebra,
    stages: Vec<ResolutionStage>,
}

/// A cohomology class: a functional on the generators of one stage.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtClass {
    pub degree: usize,
    /// Internal weight; the T-weight of the class is its negative.
    pub weight: Vec<i64>,
    pub coeffs: Vec<u64>,
}

impl ExtClass {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl<'a> Resolution<'a> {
    pub fn new(alg: &'a RestrictedAlgebra, max_degree: usize) -> Result<Resolution<'a>> {
        let mut res = Resolution {
            alg,
            stages: vec![ResolutionStage {
                degree: 0,
                generators: vec![Generator {
                    weight: vec![0; alg.rank],
                    image: Vec::new(),
                }],
            }],
        };
        for n in 0..max_degree {
            let next = res.next_stage(n)?;
            res.stages.push(next);
        }
        res.verify()?;
        Ok(res)
    }

    pub fn algebra(&self) -> &RestrictedAlgebra {
        self.alg
    }

    pub fn max_degree(&self) -> usize {
        self.stages.len() - 1
    }

    pub fn stage(&self, n: usize) -> &ResolutionStage {
        &self.stages[n]
    }

    fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    /// Basis `(generator, monomial)` of stage `n` in internal weight `mu`.
    fn block_basis(&self, n: usize, mu: &[i64]) -> Vec<(usize, u32)> {
        let mut out = Vec::new();
        for (g, gen) in self.stages[n].generators.iter().enumerate() {
            for &m in self.alg.monomials_of_weight(&Self::sub(mu, &gen.weight)) {
                out.push((g, m));
            }
        }
        out
    }

    fn stage_weights(&self, n: usize) -> Vec<Vec<i64>> {
        let mut set = std::collections::BTreeSet::new();
        for gen in &self.stages[n].generators {
            for w in self.alg.by_weight.keys() {
                set.insert(gen.weight.iter().zip(w).map(|(a, b)| a + b).collect::<Vec<i64>>());
            }
        }
        set.into_iter().collect()
    }

    /// `x^m * d(e_g)`.
    fn image_of(&self, n: usize, g: usize, m: u32) -> FreeElement {
        self.apply_monomial(m, &self.stages[n].generators[g].image)
    }

    fn apply_monomial(&self, m: u32, v: &FreeElement) -> FreeElement {
        let p = self.alg.p;
        let mut acc: BTreeMap<(usize, u32), u64> = BTreeMap::new();
        let mut by_gen: BTreeMap<usize, Sparse> = BTreeMap::new();
        for &((h, m2), c) in v {
            by_gen.entry(h).or_default().push((m2, c));
        }
        for (h, a) in by_gen {
            for (m3, c) in self.alg.monomial_times(m, &a) {
                let e = acc.entry((h, m3)).or_insert(0);
                *e = (*e + c) % p;
            }
        }
        acc.into_iter().filter(|(_, c)| *c != 0).collect()
    }

    fn to_dense(&self, v: &FreeElement, basis: &[(usize, u32)]) -> Result<Vec<u64>> {
        let index: HashMap<(usize, u32), usize> = basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let mut out = vec![0u64; basis.len()];
        for &(key, c) in v {
            let i = index
                .get(&key)
                .ok_or_else(|| Error::Internal("element leaves its weight block".into()))?;
            out[*i] = (out[*i] + c) % self.alg.p;
        }
        Ok(out)
    }

    /// Matrix of `d_n` from stage `n` to stage `n - 1` on the weight `mu` block.
    fn differential_matrix(&self, n: usize, mu: &[i64], src: &[(usize, u32)]) -> Result<(Matrix<u64>, Vec<(usize, u32)>)> {
        let dst = self.block_basis(n - 1, mu);
        let mut m = vec![vec![0u64; src.len()]; dst.len()];
        for (col, &(g, mono)) in src.iter().enumerate() {
            let v = self.to_dense(&self.image_of(n, g, mono), &dst)?;
            for (row, x) in v.into_iter().enumerate() {
                m[row][col] = x;
            }
        }
        Ok((m, dst))
    }

    /// Kernel of `d_n` (of the augmentation when `n = 0`) on the weight `mu` block.
    fn kernel_block(&self, n: usize, mu: &[i64]) -> Result<Vec<FreeElement>> {
        let src = self.block_basis(n, mu);
        let vecs: Vec<Vec<u64>> = if n == 0 {
            if mu.iter().all(|&x| x == 0) {
                Vec::new()
            } else {
                (0..src.len())
                    .map(|i| {
                        let mut v = vec![0; src.len()];
                        v[i] = 1;
                        v
                    })
                    .collect()
            }
        } else {
            let (m, _) = self.differential_matrix(n, mu, &src)?;
            kernel(&self.alg.field, &m, src.len())
        };
        Ok(vecs
            .into_iter()
            .map(|v| {
                src.iter()
                    .zip(v)
                    .filter(|(_, c)| *c != 0)
                    .map(|(&b, c)| (b, c))
                    .collect()
            })
            .collect())
    }

    fn next_stage(&self, n: usize) -> Result<ResolutionStage> {
        let weights = self.stage_weights(n);
        let kernels: Vec<(Vec<i64>, Vec<FreeElement>)> = weights
            .par_iter()
            .map(|mu| Ok((mu.clone(), self.kernel_block(n, mu)?)))
            .collect::<Result<_>>()?;
        let kernels: HashMap<Vec<i64>, Vec<FreeElement>> = kernels.into_iter().collect();
        let mut found: Vec<Vec<Generator>> = weights
            .par_iter()
            .map(|mu| -> Result<Vec<Generator>> {
                let ker = &kernels[mu];
                if ker.is_empty() {
                    return Ok(Vec::new());
                }
                let basis = self.block_basis(n, mu);
                let mut span = Echelon::new(self.alg.field);
                for (t, gamma) in self.alg.root_coords.iter().enumerate() {
                    let lower = Self::sub(mu, gamma);
                    let Some(vs) = kernels.get(&lower) else { continue };
                    let pw = self.alg.powers_of(t);
                    for v in vs {
                        span.insert(&self.to_dense(&self.apply_monomial(pw, v), &basis)?);
                    }
                }
                let mut gens = Vec::new();
                for v in ker {
                    if span.insert(&self.to_dense(v, &basis)?) {
                        gens.push(Generator {
                            weight: mu.clone(),
                            image: v.clone(),
                        });
                    }
                }
                Ok(gens)
            })
            .collect::<Result<_>>()?;
        let mut generators: Vec<Generator> = found.drain(..).flatten().collect();
        generators.sort_by(|a, b| {
            let ha: i64 = a.weight.iter().sum();
            let hb: i64 = b.weight.iter().sum();
            (ha, &a.weight).cmp(&(hb, &b.weight))
        });
        Ok(ResolutionStage {
            degree: n + 1,
            generators,
        })
    }

    /// `d^2 = 0` and minimality (no unit coefficients in the differentials).
    fn verify(&self) -> Result<()> {
        for n in 1..self.stages.len() {
            for gen in &self.stages[n].generators {
                if gen.image.iter().any(|&((_, m), _)| m == 0) {
                    return Err(Error::Internal(format!("resolution not minimal at degree {n}")));
                }
                if n >= 2 {
                    let mut acc: BTreeMap<(usize, u32), u64> = BTreeMap::new();
                    for &((h, m), c) in &gen.image {
                        for ((h2, m2), c2) in self.image_of(n - 1, h, m) {
                            let e = acc.entry((h2, m2)).or_insert(0);
                            *e = (*e + c * c2) % self.alg.p;
                        }
                    }
                    if acc.values().any(|&c| c != 0) {
                        return Err(Error::Internal(format!("d^2 != 0 at degree {n}")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.generators.len()).collect()
    }

    /// Ext as a graded T-character, weights in fundamental coordinates.
    pub fn character(&self, rs: &RootSystem) -> GradedCharacter {
        GradedCharacter::new(
            self.stages
                .iter()
                .map(|s| {
                    let mut c = FormalCharacter::new();
                    for g in &s.generators {
                        let neg: Vec<i64> = g.weight.iter().map(|x| -x).collect();
                        c.add_term(rs.weight_of(&neg), 1);
                    }
                    c
                })
                .collect(),
        )
    }

    /// The dual basis vector of generator `g` at `degree`.
    pub fn basis_class(&self, degree: usize, g: usize) -> ExtClass {
        let gens = &self.stages[degree].generators;
        let mut coeffs = vec![0; gens.len()];
        coeffs[g] = 1;
        ExtClass {
            degree,
            weight: gens[g].weight.clone(),
            coeffs,
        }
    }

    /// The class spanning a one-dimensional weight space; `t_weight` is the
    /// T-weight in fundamental coordinates.
    pub fn class_of_weight(&self, rs: &RootSystem, degree: usize, t_weight: &Weight) -> Result<ExtClass> {
        if degree > self.max_degree() {
            return Err(Error::Precondition(format!("degree {degree} beyond the computed range")));
        }
        let internal: Vec<i64> = rs
            .root_coords(&-t_weight)
            .ok_or_else(|| Error::Precondition(format!("weight {t_weight} is not in the root lattice")))?;
        let hits: Vec<usize> = self.stages[degree]
            .generators
            .iter()
            .enumerate()
            .filter(|(_, g)| g.weight == internal)
            .map(|(i, _)| i)
            .collect();
        match hits.as_slice() {
            [g] => Ok(self.basis_class(degree, *g)),
            _ => Err(Error::Precondition(format!(
                "weight space of {t_weight} in degree {degree} has dimension {}",
                hits.len()
            ))),
        }
    }

    /// Applies the A-linear map given on generators to an element.
    fn apply_map(&self, map: &[FreeElement], v: &FreeElement) -> FreeElement {
        let p = self.alg.p;
        let mut acc: BTreeMap<(usize, u32), u64> = BTreeMap::new();
        for &((h, m), c) in v {
            for ((h2, m2), c2) in self.apply_monomial(m, &map[h]) {
                let e = acc.entry((h2, m2)).or_insert(0);
                *e = (*e + c * c2) % p;
            }
        }
        acc.into_iter().filter(|(_, c)| *c != 0).collect()
    }

    /// Chain map `f_i : P_{d+i} -> P_i` lifting the class, for `i <= upto`.
    fn lift(&self, z: &ExtClass, upto: usize) -> Result<Vec<Vec<FreeElement>>> {
        let d = z.degree;
        let f0: Vec<FreeElement> = z
            .coeffs
            .iter()
            .map(|&c| if c == 0 { Vec::new() } else { vec![((0, 0), c)] })
            .collect();
        let mut maps = vec![f0];
        for i in 1..=upto {
            let gens = &self.stages[d + i].generators;
            let fi: Vec<FreeElement> = gens
                .par_iter()
                .map(|gen| -> Result<FreeElement> {
                    let rhs = self.apply_map(&maps[i - 1], &gen.image);
                    if rhs.is_empty() {
                        return Ok(Vec::new());
                    }
                    let nu = Self::sub(&gen.weight, &z.weight);
                    let src = self.block_basis(i, &nu);
                    let (m, dst) = self.differential_matrix(i, &nu, &src)?;
                    let b = self.to_dense(&rhs, &dst)?;
                    let x = solve(&self.alg.field, &m, src.len(), &b)
                        .ok_or_else(|| Error::Internal(format!("chain map lifting failed at degree {i}")))?;
                    Ok(src.iter().zip(x).filter(|(_, c)| *c != 0).map(|(&k, c)| (k, c)).collect())
                })
                .collect::<Result<_>>()?;
            maps.push(fi);
        }
        Ok(maps)
    }

    /// Yoneda product `z1 * z2 = z1 o f`, `f` the lift of `z2`.
    pub fn yoneda_product(&self, z1: &ExtClass, z2: &ExtClass) -> Result<ExtClass> {
        let degree = z1.degree + z2.degree;
        if degree > self.max_degree() {
            return Err(Error::Precondition(format!(
                "product degree {degree} beyond the computed range {}",
                self.max_degree()
            )));
        }
        for z in [z1, z2] {
            let gens = &self.stages[z.degree].generators;
            if z.coeffs.len() != gens.len()
                || gens.iter().zip(&z.coeffs).any(|(g, &c)| c != 0 && g.weight != z.weight)
            {
                return Err(Error::Precondition("class is not weight-homogeneous".into()));
            }
        }
        let maps = self.lift(z2, z1.degree)?;
        let top = &maps[z1.degree];
        let p = self.alg.p;
        let coeffs: Vec<u64> = top
            .iter()
            .map(|v| {
                v.iter()
                    .filter(|((_, m), _)| *m == 0)
                    .fold(0, |acc, &((h, _), c)| (acc + c * z1.coeffs[h]) % p)
            })
            .collect();
        let weight = z1.weight.iter().zip(&z2.weight).map(|(a, b)| a + b).collect();
        Ok(ExtClass { degree, weight, coeffs })
    }
}

impl RestrictedAlgebra {
    fn powers_of(&self, t: usize) -> u32 {
        (self.p as u32).pow(t as u32)
    }
}

/// `Ext^*` of the trivial module through `max_degree`, as a T-character.
pub fn ext_dims(alg: &RestrictedAlgebra, rs: &RootSystem, max_degree: usize) -> Result<GradedCharacter> {
    Ok(Resolution::new(alg, max_degree)?.character(rs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleProduct {
    pub degree: usize,
    pub weight: Weight,
    pub nonzero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtCertificate {
    #[serde(rename = "type")]
    pub cartan_type: CartanType,
    pub p: i64,
    #[serde(rename = "J")]
    pub j: SimpleSet,
    pub dims: Vec<usize>,
    pub weights: Vec<Vec<(Weight, i64)>>,
    pub example_product: Option<ExampleProduct>,
}

/// Squares the class spanning the one-dimensional weight space `t_weight` in `degree`.
pub fn square_of_weight_class(res: &Resolution, rs: &RootSystem, degree: usize, t_weight: &Weight) -> Result<ExampleProduct> {
    let z = res.class_of_weight(rs, degree, t_weight)?;
    let z2 = res.yoneda_product(&z, &z)?;
    Ok(ExampleProduct {
        degree,
        weight: t_weight.clone(),
        nonzero: !z2.is_zero(),
    })
}

pub fn ext_certificate(res: &Resolution, rs: &RootSystem, p: i64, example: Option<ExampleProduct>) -> ExtCertificate {
    let ch = res.character(rs);
    ExtCertificate {
        cartan_type: rs.cartan_type(),
        p,
        j: res.algebra().j(),
        dims: res.dims(),
        weights: ch
            .degrees
            .iter()
            .map(|c| c.iter().map(|(w, m)| (w.clone(), *m)).collect())
            .collect(),
        example_product: example,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::Mode;
    use crate::kostant::frobenius_kernel_character;
    use crate::weyl::WeylGroup;

    fn alg(label: &str, j: &[usize], p: i64) -> (RootSystem, RestrictedAlgebra) {
        let rs = RootSystem::parse(label).unwrap();
        let a = RestrictedAlgebra::new(&rs, SimpleSet::from_indices(j), p, DEFAULT_ALGEBRA_BUDGET).unwrap();
        (rs, a)
    }

    #[test]
    fn dimensions() {
        assert_eq!(alg("A1", &[], 3).1.dim(), 3);
        assert_eq!(alg("B2", &[], 5).1.dim(), 625);
        assert_eq!(alg("A2", &[0], 5).1.dim(), 25);
    }

    #[test]
    fn a2_commutator() {
        let (_, a) = alg("A2", &[], 3);
        // x_2 x_1 = x_1 x_2 + N_{a2,a1} x_{a1+a2}, generators ordered (a1, a1+a2, a2)
        assert_eq!(a.left_generator(2, 1), &[(3, 2), (10, 1)]);
    }

    #[test]
    fn a1_cyclic() {
        let (rs, a) = alg("A1", &[], 5);
        let res = Resolution::new(&a, 5).unwrap();
        assert_eq!(res.dims(), vec![1, 1, 1, 1, 1, 1]);
        // weights 0, -a, -5a, -6a, -10a, -11a
        let ch = res.character(&rs);
        assert_eq!(ch.degree(2), FormalCharacter::weight(Weight(vec![-10])));
        assert_eq!(ch.degree(3), FormalCharacter::weight(Weight(vec![-12])));
    }

    #[test]
    fn b2_matches_bigraded_character() {
        let (rs, a) = alg("B2", &[], 5);
        let res = Resolution::new(&a, 4).unwrap();
        assert_eq!(res.dims(), vec![1, 2, 6, 10, 19]);
        let g = WeylGroup::new(&rs).unwrap();
        let expected = frobenius_kernel_character(&g, &Weight::zero(2), SimpleSet::EMPTY, Mode::Modular(5), 4)
            .unwrap()
            .total();
        assert_eq!(res.character(&rs).degrees, expected.degrees);
    }

    #[test]
    fn b2_square_nonzero() {
        let (rs, a) = alg("B2", &[], 5);
        let res = Resolution::new(&a, 4).unwrap();
        let w = rs.weight_of(&[-1, -3]);
        let sq = square_of_weight_class(&res, &rs, 2, &w).unwrap();
        assert!(sq.nonzero);
    }

    #[test]
    fn unit_and_commutativity() {
        let (_, a) = alg("A2", &[], 5);
        let res = Resolution::new(&a, 3).unwrap();
        let one = res.basis_class(0, 0);
        let n1 = res.stage(1).generators.len();
        for g in 0..n1 {
            let z = res.basis_class(1, g);
            assert_eq!(res.yoneda_product(&one, &z).unwrap(), z);
            assert_eq!(res.yoneda_product(&z, &one).unwrap(), z);
            assert!(res.yoneda_product(&z, &z).unwrap().is_zero());
        }
        let p = a.p();
        for d1 in 1..=2 {
            for d2 in 1..=(3 - d1) {
                for g1 in 0..res.stage(d1).generators.len() {
                    for g2 in 0..res.stage(d2).generators.len() {
                        let (x, y) = (res.basis_class(d1, g1), res.basis_class(d2, g2));
                        let xy = res.yoneda_product(&x, &y).unwrap();
                        let yx = res.yoneda_product(&y, &x).unwrap();
                        let sign = if d1 * d2 % 2 == 1 { p - 1 } else { 1 };
                        let yx: Vec<u64> = yx.coeffs.iter().map(|c| c * sign % p).collect();
                        assert_eq!(xy.coeffs, yx);
                    }
                }
            }
        }
    }

    #[test]
    fn parabolic_algebra() {
        let (_, a) = alg("A2", &[0], 5);
        let res = Resolution::new(&a, 3).unwrap();
        // u_J abelian of dimension 2: Ext = Lambda(2 gens) (x) S(2 gens)
        assert_eq!(res.dims(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn budget_enforced() {
        let rs = RootSystem::parse("A3").unwrap();
        assert!(matches!(
            RestrictedAlgebra::new(&rs, SimpleSet::EMPTY, 7, DEFAULT_ALGEBRA_BUDGET),
            Err(Error::Budget(_))
        ));
    }
}
