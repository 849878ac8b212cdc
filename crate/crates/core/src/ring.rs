//! Explicit cohomology rings.
//!
//! The nil-cohomology ring `H^*(u_J, k)` is modelled on the classes
//! `[f_Phi(w)]`, `w` in `^J W`, where `f_Phi(w)` is the wedge of the dual root
//! vectors of `Phi(w)` taken in the canonical order. Products follow the
//! inversion-set rule with the sign of the merge permutation. The quantum
//! version replaces signs by the scalars of the quantum exterior algebra,
//! `x_j x_i = -zeta^{(g_i, g_j)} x_i x_j` for `i < j` and `x_i^2 = 0`.
//! The full ring is the tensor product with the twisted symmetric algebra.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::alcove::{admissibility, Context, Mode};
use crate::cyclo::{CycInt, CycScalar};
use crate::error::{Error, Result};
use crate::kostant::check_subset;
use crate::root_system::{RootSystem, SimpleSet, Weight};
use crate::weyl::WeylGroup;

fn require_rep(g: &WeylGroup, j: SimpleSet, a: usize) -> Result<()> {
    if !g.element(a).is_min_coset_rep(g.root_system(), j) {
        return Err(Error::Precondition(format!(
            "{} is not a minimal coset representative for J = {j}",
            g.element(a).label()
        )));
    }
    Ok(())
}

/// Number of pairs `(x, y)`, `x` from `a`, `y` from `b`, with `x > y`:
/// the parity of the merge of two sorted lists.
fn merge_inversions(a: u128, b: u128) -> u32 {
    let mut count = 0;
    let mut rest = b;
    while rest != 0 {
        let k = rest.trailing_zeros();
        rest &= rest - 1;
        // elements of a strictly above k
        count += (a >> k >> 1).count_ones();
    }
    count
}

/// `[f_Phi(a)] [f_Phi(b)]`: `None` when zero, else the sign and the index of `w''`.
pub fn nil_product(g: &WeylGroup, j: SimpleSet, a: usize, b: usize) -> Result<Option<(i8, usize)>> {
    check_subset(g.root_system(), j)?;
    require_rep(g, j, a)?;
    require_rep(g, j, b)?;
    let (ma, mb) = (g.element(a).inversions, g.element(b).inversions);
    if ma & mb != 0 {
        return Ok(None);
    }
    Ok(g.by_inversions(ma | mb).map(|c| {
        let sign = if merge_inversions(ma, mb) % 2 == 0 { 1 } else { -1 };
        (sign, c)
    }))
}

/// Straightens a monomial in the quantum exterior algebra into canonical
/// order. `None` if some generator repeats.
pub fn quantum_exterior_straighten(rs: &RootSystem, monomial: &[usize], l: u32) -> Option<(CycScalar, Vec<usize>)> {
    let mut m = monomial.to_vec();
    let mut scalar = CycScalar::one(l);
    // bubble sort, one relation per adjacent transposition
    let mut changed = true;
    while changed {
        changed = false;
        for t in 0..m.len().saturating_sub(1) {
            if m[t] == m[t + 1] {
                return None;
            }
            if m[t] > m[t + 1] {
                let (hi, lo) = (m[t], m[t + 1]);
                scalar = scalar.mul(&CycScalar::new(-1, rs.root_inner(lo, hi), l));
                m.swap(t, t + 1);
                changed = true;
            }
        }
    }
    Some((scalar, m))
}

fn list_to_mask(list: &[usize]) -> u128 {
    list.iter().fold(0, |m, &k| m | 1u128 << k)
}

/// Quantum product of classes without the admissibility gate; `l = 1` gives
/// the classical signs.
pub fn quantum_nil_product_formal(g: &WeylGroup, a: usize, b: usize, l: u32) -> Option<(CycScalar, usize)> {
    let mut mon = g.element(a).inversion_indices();
    mon.extend(g.element(b).inversion_indices());
    let (s, sorted) = quantum_exterior_straighten(g.root_system(), &mon, l)?;
    g.by_inversions(list_to_mask(&sorted)).map(|c| (s, c))
}

/// Quantum product of `f_Phi(a)` and `f_Phi(b)`, behind the ring gate.
pub fn quantum_nil_product(g: &WeylGroup, a: usize, b: usize, l: i64) -> Result<Option<(CycScalar, usize)>> {
    admissibility(g.root_system(), l, Context::Ring)?.require()?;
    Ok(quantum_nil_product_formal(g, a, b, l as u32))
}

/// A basis class `prod f_gamma^{s_gamma} (x) [f_Phi(w)]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisClass {
    /// Exponents of the degree-2 generators, indexed like `FullRing::generators`.
    pub s_part: Vec<u32>,
    /// Index of `w` in the Weyl group.
    pub w: usize,
}

/// Finite linear combination of basis classes with coefficients in `Z[zeta]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingElement {
    pub terms: BTreeMap<BasisClass, CycInt>,
}

impl RingElement {
    pub fn basis(c: BasisClass, modulus: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(c, CycInt::from_int(1, modulus));
        RingElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, c: BasisClass, x: CycInt) {
        let entry = self
            .terms
            .entry(c.clone())
            .or_insert_with(|| CycInt::zero(x.modulus));
        *entry = entry.add(&x);
        if entry.is_zero() {
            self.terms.remove(&c);
        }
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        let mut out = self.clone();
        for (c, x) in &other.terms {
            out.add_term(c.clone(), x.clone());
        }
        out
    }

    pub fn scale(&self, s: &CycInt) -> RingElement {
        let mut out = RingElement::default();
        for (c, x) in &self.terms {
            out.add_term(c.clone(), x.mul(s));
        }
        out
    }
}

/// `S^*(u_J^*)^(1) (x) H^*(u_J, k)` with the ordinary tensor product of algebras.
#[derive(Clone, Debug)]
pub struct FullRing<'a> {
    g: &'a WeylGroup,
    j: SimpleSet,
    mode: Mode,
    generators: Vec<usize>,
    reps: Vec<usize>,
    formal: bool,
}

impl<'a> FullRing<'a> {
    /// Checks the bound for the mode: `p > 2(h-1)` for `J` empty and
    /// `p > 3(h-1)` otherwise (modular), the ring gate and `J` empty
    /// (quantum). With `unsafe_below_bound` a failed bound yields a ring
    /// marked formal instead of an error.
    pub fn new(g: &'a WeylGroup, j: SimpleSet, mode: Mode, unsafe_below_bound: bool) -> Result<Self> {
        let rs = g.root_system();
        check_subset(rs, j)?;
        let h = rs.coxeter_number();
        let problem = match mode {
            Mode::Modular(p) => {
                if !crate::is_prime(p) || p == 2 {
                    return Err(Error::Precondition(format!("{p} is not an odd prime")));
                }
                let (bound, factor) = if j.is_empty() { (2 * (h - 1), 2) } else { (3 * (h - 1), 3) };
                (p <= bound).then(|| format!("p = {p} is not above {factor}(h-1) = {bound}"))
            }
            Mode::Quantum(l) => {
                if !j.is_empty() {
                    return Err(Error::Precondition(
                        "the quantum full ring is modelled for J empty only".into(),
                    ));
                }
                let adm = admissibility(rs, l, Context::Ring)?;
                (!adm.pass).then(|| format!("ring gate fails at l = {l}: {}", adm.failed.join(", ")))
            }
            Mode::Classical => {
                return Err(Error::Precondition("the full ring needs a modulus".into()))
            }
        };
        if let Some(msg) = &problem {
            if !unsafe_below_bound {
                return Err(Error::Precondition(msg.clone()));
            }
        }
        Ok(FullRing {
            g,
            j,
            mode,
            generators: rs.nilradical_roots(j),
            reps: g.min_coset_reps(j).reps,
            formal: problem.is_some(),
        })
    }

    /// True when the bound failed: products are those of the formal tensor
    /// model, not of the actual cohomology ring.
    pub fn is_formal(&self) -> bool {
        self.formal
    }

    pub fn label(&self) -> &'static str {
        if self.formal {
            "formal model, not H^*(U_1,k)"
        } else {
            "H^*((U_J)_1,k)"
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    fn zeta_modulus(&self) -> u32 {
        match self.mode {
            Mode::Quantum(l) => l as u32,
            _ => 1,
        }
    }

    /// Canonical-order indices of the degree-2 generators (the roots of `u_J`).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn one(&self) -> RingElement {
        RingElement::basis(
            BasisClass {
                s_part: vec![0; self.generators.len()],
                w: self.g.identity(),
            },
            self.zeta_modulus(),
        )
    }

    pub fn degree(&self, c: &BasisClass) -> usize {
        2 * c.s_part.iter().sum::<u32>() as usize + self.g.element(c.w).length()
    }

    /// T-weight: `-m sum s_gamma gamma + w . 0`.
    pub fn weight(&self, c: &BasisClass) -> Weight {
        let rs = self.g.root_system();
        let m = self.mode.modulus().unwrap_or(1);
        let mut mu = self.g.dot(c.w, &Weight::zero(rs.rank()));
        for (t, &e) in c.s_part.iter().enumerate() {
            mu = &mu - &rs.root(self.generators[t]).weight.scale(m * e as i64);
        }
        mu
    }

    fn product_w(&self, a: usize, b: usize) -> Result<Option<(CycScalar, usize)>> {
        Ok(match self.mode {
            Mode::Quantum(l) => quantum_nil_product_formal(self.g, a, b, l as u32),
            _ => nil_product(self.g, self.j, a, b)?.map(|(s, c)| (CycScalar::new(s, 0, 1), c)),
        })
    }

    pub fn basis_product(&self, x: &BasisClass, y: &BasisClass) -> Result<RingElement> {
        let mut out = RingElement::default();
        if let Some((s, w)) = self.product_w(x.w, y.w)? {
            let s_part = x.s_part.iter().zip(&y.s_part).map(|(a, b)| a + b).collect();
            out.add_term(BasisClass { s_part, w }, s.to_cyc_int());
        }
        Ok(out)
    }

    pub fn product(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        let mut out = RingElement::default();
        for (a, ca) in &x.terms {
            for (b, cb) in &y.terms {
                let p = self.basis_product(a, b)?;
                out = out.add(&p.scale(&ca.mul(cb)));
            }
        }
        Ok(out)
    }

    /// All basis classes of total degree `n`.
    pub fn basis_in_degree(&self, n: usize) -> Vec<BasisClass> {
        let mut out = Vec::new();
        for &w in &self.reps {
            let l = self.g.element(w).length();
            if l > n || (n - l) % 2 != 0 {
                continue;
            }
            for s_part in compositions((n - l) / 2, self.generators.len()) {
                out.push(BasisClass { s_part, w });
            }
        }
        out.sort();
        out
    }

    pub fn poincare(&self, max_degree: usize) -> Vec<usize> {
        (0..=max_degree).map(|n| self.basis_in_degree(n).len()).collect()
    }
}

/// Exponent vectors of length `k` summing to `total`.
fn compositions(total: usize, k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, k - 1) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

/// One row of a multiplication table of nil classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingTableRow {
    pub w: String,
    pub w_prime: String,
    /// Label of `w''`, or `"0"`.
    pub result: String,
    pub sign: i8,
    pub zeta_exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingTable {
    pub cartan_type: String,
    pub j: SimpleSet,
    pub mode: Mode,
    /// 1-based reduced word of `w0` fixing the canonical order.
    pub w0_word: Vec<usize>,
    /// Positive roots in canonical order, simple-root coordinates.
    pub gamma_order: Vec<Vec<i64>>,
    pub rows: Vec<RingTableRow>,
}

/// Table of all products of classes `[f_Phi(w)]`, `w` in `^J W`.
/// Classical for `Mode::Classical`/`Mode::Modular`, quantum for `Mode::Quantum`
/// (gated unless `unsafe_below_bound`).
pub fn ring_table(g: &WeylGroup, j: SimpleSet, mode: Mode, unsafe_below_bound: bool) -> Result<RingTable> {
    let rs = g.root_system();
    check_subset(rs, j)?;
    let l = match mode {
        Mode::Quantum(l) => {
            if !j.is_empty() {
                return Err(Error::Precondition(
                    "quantum products are modelled for J empty only".into(),
                ));
            }
            let adm = admissibility(rs, l, Context::Ring)?;
            if !adm.pass && !unsafe_below_bound {
                adm.require()?;
            }
            l as u32
        }
        _ => 1,
    };
    let reps = g.min_coset_reps(j).reps;
    let mut rows = Vec::with_capacity(reps.len() * reps.len());
    for &a in &reps {
        for &b in &reps {
            let res = if l == 1 {
                nil_product(g, j, a, b)?.map(|(s, c)| (CycScalar::new(s, 0, 1), c))
            } else {
                quantum_nil_product_formal(g, a, b, l)
            };
            let (result, sign, zeta_exponent) = match res {
                Some((s, c)) => (g.element(c).label(), s.sign, s.exponent),
                None => ("0".to_string(), 0, 0),
            };
            rows.push(RingTableRow {
                w: g.element(a).label(),
                w_prime: g.element(b).label(),
                result,
                sign,
                zeta_exponent,
            });
        }
    }
    Ok(RingTable {
        cartan_type: rs.cartan_type().to_string(),
        j,
        mode,
        w0_word: rs.w0_word().iter().map(|i| i + 1).collect(),
        gamma_order: rs.positive_roots().iter().map(|r| r.coords.clone()).collect(),
        rows,
    })
}

impl RingTable {
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# type: {}", self.cartan_type);
        let _ = writeln!(s, "# J: {}", self.j);
        let _ = writeln!(s, "# mode: {}", self.mode);
        let w0: Vec<String> = self.w0_word.iter().map(|i| format!("s{i}")).collect();
        let _ = writeln!(s, "# w0_word: {}", w0.join(""));
        let order: Vec<String> = self
            .gamma_order
            .iter()
            .map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        let _ = writeln!(s, "# gamma_order: {}", order.join(" "));
        let _ = writeln!(s, "w,w_prime,result,sign,zeta_exponent");
        for r in &self.rows {
            let _ = writeln!(s, "{},{},{},{},{}", r.w, r.w_prime, r.result, r.sign, r.zeta_exponent);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(label: &str) -> WeylGroup {
        WeylGroup::new(&RootSystem::parse(label).unwrap()).unwrap()
    }

    #[test]
    fn a2_products() {
        let g = group("A2");
        let e = SimpleSet::EMPTY;
        let s1 = g.from_word(&[0]);
        let s2 = g.from_word(&[1]);
        let s2s1 = g.from_word(&[1, 0]);
        assert_eq!(nil_product(&g, e, s1, 0).unwrap(), Some((1, s1)));
        assert_eq!(nil_product(&g, e, 0, s2s1).unwrap(), Some((1, s2s1)));
        assert_eq!(nil_product(&g, e, s1, s2).unwrap(), None);
        // Phi(s2 s1) = {a1+a2, a2} follows a1 in the canonical order
        assert_eq!(nil_product(&g, e, s1, s2s1).unwrap(), Some((1, g.longest())));
        assert_eq!(nil_product(&g, e, s2s1, s1).unwrap(), Some((1, g.longest())));
        let s1s2 = g.from_word(&[0, 1]);
        assert_eq!(nil_product(&g, e, s2, s1s2).unwrap(), Some((1, g.longest())));
        assert_eq!(nil_product(&g, e, s1s2, s2).unwrap(), Some((1, g.longest())));
    }

    #[test]
    fn non_reps_rejected() {
        let g = group("A2");
        let j = SimpleSet::from_indices(&[0]);
        assert!(nil_product(&g, j, g.from_word(&[0]), 0).is_err());
    }

    #[test]
    fn straightening_examples() {
        let a2 = RootSystem::parse("A2").unwrap();
        assert_eq!(quantum_exterior_straighten(&a2, &[1, 1], 5), None);
        // canonical order (a1, a1+a2, a2): x_{a1+a2} x_{a1} = -z^{(a1, a1+a2)} x_{a1} x_{a1+a2}
        assert_eq!(
            quantum_exterior_straighten(&a2, &[1, 0], 5),
            Some((CycScalar::new(-1, 1, 5), vec![0, 1]))
        );
        assert_eq!(
            quantum_exterior_straighten(&a2, &[0, 1, 2], 7),
            Some((CycScalar::one(7), vec![0, 1, 2]))
        );
    }

    #[test]
    fn straightening_is_order_independent() {
        // the scalar is the product over inverted pairs, whatever the swap order
        let b2 = RootSystem::parse("B2").unwrap();
        let perms = [[3usize, 1, 0, 2], [2, 3, 1, 0], [1, 0, 3, 2]];
        for p in perms {
            let (s, m) = quantum_exterior_straighten(&b2, &p, 7).unwrap();
            assert_eq!(m, vec![0, 1, 2, 3]);
            let mut expect = CycScalar::one(7);
            for x in 0..4 {
                for y in x + 1..4 {
                    if p[x] > p[y] {
                        expect = expect.mul(&CycScalar::new(-1, b2.root_inner(p[y], p[x]), 7));
                    }
                }
            }
            assert_eq!(s, expect);
            // straighten the two halves first, then the whole
            let (s1, left) = quantum_exterior_straighten(&b2, &p[..2], 7).unwrap();
            let (s2, right) = quantum_exterior_straighten(&b2, &p[2..], 7).unwrap();
            let mut mon = left;
            mon.extend(right);
            let (s3, _) = quantum_exterior_straighten(&b2, &mon, 7).unwrap();
            assert_eq!(s1.mul(&s2).mul(&s3), s);
        }
    }

    #[test]
    fn quantum_specializes_to_classical() {
        for label in ["A2", "B2", "A3"] {
            let g = group(label);
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let c = nil_product(&g, SimpleSet::EMPTY, a, b).unwrap();
                    let q = quantum_nil_product_formal(&g, a, b, 5).map(|(s, w)| (s.specialize() as i8, w));
                    assert_eq!(c, q);
                    let one = quantum_nil_product_formal(&g, a, b, 1).map(|(s, w)| (s.sign, w));
                    assert_eq!(c, one);
                }
            }
        }
    }

    #[test]
    fn quantum_gate() {
        let g = group("B2");
        assert!(quantum_nil_product(&g, 0, 1, 7).is_ok());
        assert!(matches!(quantum_nil_product(&g, 0, 1, 5), Err(Error::Gate { .. })));
    }

    #[test]
    fn full_ring_bounds() {
        let g = group("B2");
        assert!(FullRing::new(&g, SimpleSet::EMPTY, Mode::Modular(7), false).is_ok());
        assert!(FullRing::new(&g, SimpleSet::EMPTY, Mode::Modular(5), false).is_err());
        let r = FullRing::new(&g, SimpleSet::EMPTY, Mode::Modular(5), true).unwrap();
        assert!(r.is_formal());
        assert_eq!(r.label(), "formal model, not H^*(U_1,k)");
        assert!(FullRing::new(&g, SimpleSet::from_indices(&[0]), Mode::Modular(7), false).is_err());
        assert!(FullRing::new(&g, SimpleSet::from_indices(&[0]), Mode::Modular(11), false).is_ok());
        assert!(FullRing::new(&g, SimpleSet::from_indices(&[0]), Mode::Quantum(11), false).is_err());
    }

    #[test]
    fn full_ring_identities() {
        let g = group("B2");
        let r = FullRing::new(&g, SimpleSet::EMPTY, Mode::Modular(7), false).unwrap();
        let one = r.one();
        assert_eq!(r.poincare(4), vec![1, 2, 6, 10, 19]);
        for n in 0..4 {
            for c in r.basis_in_degree(n) {
                let x = RingElement::basis(c.clone(), 1);
                assert_eq!(r.product(&one, &x).unwrap(), x);
                if n % 2 == 1 {
                    assert!(r.product(&x, &x).unwrap().is_zero());
                }
                // f_gamma times a class only bumps the polynomial part
                let mut gen = vec![0; 4];
                gen[2] = 1;
                let f = RingElement::basis(BasisClass { s_part: gen, w: 0 }, 1);
                let p = r.product(&f, &x).unwrap();
                assert_eq!(p.terms.len(), 1);
                let (k, _) = p.terms.iter().next().unwrap();
                assert_eq!(k.w, c.w);
                assert_eq!(k.s_part[2], c.s_part[2] + 1);
                assert_eq!(r.degree(k), n + 2);
            }
        }
    }

    #[test]
    fn quantum_full_ring_poincare() {
        let g = group("A2");
        let r = FullRing::new(&g, SimpleSet::EMPTY, Mode::Quantum(5), false).unwrap();
        // prod (1-t^2)^{-3} (1 + 2t + 2t^2 + t^3)
        assert_eq!(r.poincare(5), vec![1, 2, 5, 7, 12, 15]);
    }

    #[test]
    fn csv_header_records_order() {
        let g = group("A2");
        let t = ring_table(&g, SimpleSet::EMPTY, Mode::Classical, false).unwrap();
        let csv = t.to_csv();
        assert!(csv.contains("# w0_word: s1s2s1"));
        assert!(csv.contains("# gamma_order: (1,0) (1,1) (0,1)"));
        assert!(csv.contains("s1,s2s1,s1s2s1,1,0"));
        assert_eq!(t.rows.len(), 36);
    }
}
