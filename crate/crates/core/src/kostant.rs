//! Character-level forms of the Kostant decomposition and its consequences
//! for Frobenius kernels, T1-invariants and parabolic Frobenius kernels.

use serde::{Deserialize, Serialize};

use crate::alcove::{admissibility, check_rank, in_alcove, weak_linkage, Context, LinkageDatum, Mode};
use crate::character::{euler_induction, levi_simple_character, symmetric_character, FormalCharacter, GradedCharacter};
use crate::error::{Error, Result};
use crate::root_system::{RootSystem, SimpleSet, Weight};
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostantEntry {
    pub w_index: usize,
    pub w: WeylElement,
    pub degree: usize,
    /// `w . lambda`, J-dominant.
    pub highest_weight: Weight,
}

/// `H^j(u_J, L(lambda)) = sum over w in ^J W with l(w) = j of L_J(w . lambda)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostantDecomposition {
    pub lambda: Weight,
    pub j: SimpleSet,
    pub mode: Mode,
    pub entries: Vec<KostantEntry>,
}

impl KostantDecomposition {
    pub fn max_degree(&self) -> usize {
        self.entries.iter().map(|e| e.degree).max().unwrap_or(0)
    }

    /// Expands each `L_J(w . lambda)` into its weights, degree by degree.
    pub fn character(&self, rs: &RootSystem) -> Result<GradedCharacter> {
        let mut degrees = vec![FormalCharacter::new(); self.max_degree() + 1];
        for e in &self.entries {
            let c = levi_simple_character(rs, &e.highest_weight, self.j)?;
            degrees[e.degree] = degrees[e.degree].add(&c);
        }
        Ok(GradedCharacter::new(degrees))
    }

    /// Dimensions by degree.
    pub fn poincare(&self, rs: &RootSystem) -> Result<Vec<i64>> {
        Ok(self.character(rs)?.poincare())
    }
}

fn check_modulus_prime(p: i64) -> Result<()> {
    if !crate::is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    Ok(())
}

fn require_alcove(rs: &RootSystem, lambda: &Weight, m: i64, closed: bool) -> Result<()> {
    if !lambda.is_dominant() || !in_alcove(rs, lambda, m, closed) {
        let which = if closed { "closed bottom" } else { "bottom" };
        return Err(Error::Precondition(format!(
            "{lambda} is not a dominant weight in the {which} {m}-alcove"
        )));
    }
    Ok(())
}

pub fn kostant_decomposition(g: &WeylGroup, lambda: &Weight, j: SimpleSet, mode: Mode) -> Result<KostantDecomposition> {
    let rs = g.root_system();
    check_rank(rs, lambda)?;
    check_subset(rs, j)?;
    let h = rs.coxeter_number();
    match mode {
        Mode::Modular(p) => {
            check_modulus_prime(p)?;
            if p < h - 1 {
                return Err(Error::Precondition(format!("p = {p} is below h - 1 = {}", h - 1)));
            }
            require_alcove(rs, lambda, p, true)?;
        }
        Mode::Quantum(l) => {
            admissibility(rs, l, Context::Kostant)?.require()?;
            require_alcove(rs, lambda, l, true)?;
        }
        Mode::Classical => {
            if !lambda.is_dominant() {
                return Err(Error::Precondition(format!("{lambda} is not dominant")));
            }
        }
    }
    let entries = g
        .min_coset_reps(j)
        .reps
        .into_iter()
        .map(|k| KostantEntry {
            w_index: k,
            w: g.element(k).clone(),
            degree: g.element(k).length(),
            highest_weight: g.dot(k, lambda),
        })
        .collect();
    Ok(KostantDecomposition {
        lambda: lambda.clone(),
        j,
        mode,
        entries,
    })
}

pub(crate) fn check_subset(rs: &RootSystem, j: SimpleSet) -> Result<()> {
    if j.0 >> rs.rank() != 0 {
        return Err(Error::Precondition(format!(
            "{j} is not a set of simple roots of a rank {} system",
            rs.rank()
        )));
    }
    Ok(())
}

/// The summand `S^i(u_J^*)^(twist) (x) H^j(u_J, L(lambda))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slab {
    pub i: usize,
    pub j: usize,
    pub character: FormalCharacter,
}

/// Per total degree `n`, the slabs with `2i + j = n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigradedCharacter {
    pub lambda: Weight,
    pub j: SimpleSet,
    pub mode: Mode,
    pub degrees: Vec<Vec<Slab>>,
}

impl BigradedCharacter {
    pub fn total(&self) -> GradedCharacter {
        GradedCharacter::new(
            self.degrees
                .iter()
                .map(|slabs| {
                    slabs
                        .iter()
                        .fold(FormalCharacter::new(), |acc, s| acc.add(&s.character))
                })
                .collect(),
        )
    }

    pub fn poincare(&self) -> Vec<i64> {
        self.total().poincare()
    }
}

/// Bigraded character of `H^*((U_J)_1, L(lambda))` (modular) or of the small
/// quantum analogue, through total degree `max_degree`.
pub fn frobenius_kernel_character(
    g: &WeylGroup,
    lambda: &Weight,
    j: SimpleSet,
    mode: Mode,
    max_degree: usize,
) -> Result<BigradedCharacter> {
    let rs = g.root_system();
    check_rank(rs, lambda)?;
    check_subset(rs, j)?;
    let m = match mode {
        Mode::Modular(p) => {
            check_modulus_prime(p)?;
            if p == 2 {
                return Err(Error::Precondition("p must be odd".into()));
            }
            p
        }
        Mode::Quantum(l) => {
            admissibility(rs, l, Context::Module)?.require()?;
            l
        }
        Mode::Classical => {
            return Err(Error::Precondition(
                "Frobenius kernel characters need a modulus".into(),
            ))
        }
    };
    require_alcove(rs, lambda, m, false)?;

    let kd = kostant_decomposition(g, lambda, j, Mode::Classical)?;
    let h = kd.character(rs)?;
    let nil = rs.nilradical_roots(j);
    let mut degrees = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        let mut slabs = Vec::new();
        for i in 0..=n / 2 {
            let jj = n - 2 * i;
            let hj = h.degree(jj);
            if hj.is_zero() {
                continue;
            }
            let s = symmetric_character(rs, &nil, i).frobenius_twist(m);
            slabs.push(Slab {
                i,
                j: jj,
                character: s.mul(&hj),
            });
        }
        degrees.push(slabs);
    }
    Ok(BigradedCharacter {
        lambda: lambda.clone(),
        j,
        mode,
        degrees,
    })
}

/// `H^*(u, L(lambda))^{T_1}`: the one weight `w^{-1} sigma` in degree `l(w)`
/// when `lambda` is weakly linked to zero, nothing otherwise.
pub fn t1_invariants(g: &WeylGroup, lambda: &Weight, p: i64) -> Result<GradedCharacter> {
    let rs = g.root_system();
    let mut degrees = vec![FormalCharacter::new(); rs.num_positive() + 1];
    if let Some(d) = weak_linkage(g, lambda, p)? {
        degrees[d.w.length()] = FormalCharacter::weight(d.w.act_inverse(rs, &d.sigma));
    }
    Ok(GradedCharacter::new(degrees))
}

/// Untwisted character of `H^*((P_J)_1, L(lambda))` through `max_degree`.
pub fn parabolic_character(
    g: &WeylGroup,
    lambda: &Weight,
    j: SimpleSet,
    mode: Mode,
    max_degree: usize,
) -> Result<GradedCharacter> {
    let rs = g.root_system();
    check_rank(rs, lambda)?;
    check_subset(rs, j)?;
    let m = match mode {
        Mode::Modular(p) => {
            check_modulus_prime(p)?;
            p
        }
        Mode::Quantum(l) => {
            admissibility(rs, l, Context::Parabolic)?.require()?;
            l
        }
        Mode::Classical => {
            return Err(Error::Precondition(
                "parabolic Frobenius kernels need a modulus".into(),
            ))
        }
    };
    let Some(datum) = weak_linkage(g, lambda, m)? else {
        return Ok(GradedCharacter::new(vec![FormalCharacter::new(); max_degree + 1]));
    };
    parabolic_from_datum(g, &datum, j, max_degree)
}

fn parabolic_from_datum(g: &WeylGroup, d: &LinkageDatum, j: SimpleSet, max_degree: usize) -> Result<GradedCharacter> {
    let rs = g.root_system();
    let all: Vec<usize> = (0..rs.num_positive()).collect();
    let base = d.w.act_inverse(rs, &d.sigma);
    // induction from the Borel of positive roots: the Euler character at mu is
    // the standard one at w_J(mu)
    let w_j = g
        .parabolic_subgroup(j)
        .into_iter()
        .max_by_key(|&k| g.element(k).length())
        .expect("W_J contains the identity");
    let w_j = g.element(w_j).clone();
    let l = d.w.length();
    let mut degrees = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        if n < l || (n - l) % 2 != 0 {
            degrees.push(FormalCharacter::new());
            continue;
        }
        let chi = symmetric_character(rs, &all, (n - l) / 2).shift(&base);
        let chi = chi.map_weights(|mu| w_j.act(rs, mu));
        degrees.push(euler_induction(rs, &chi, j)?);
    }
    Ok(GradedCharacter::new(degrees))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(label: &str) -> WeylGroup {
        WeylGroup::new(&RootSystem::parse(label).unwrap()).unwrap()
    }

    #[test]
    fn kostant_examples() {
        let g = group("A2");
        let rs = g.root_system();
        let zero = Weight::zero(2);
        let kd = kostant_decomposition(&g, &zero, SimpleSet::EMPTY, Mode::Modular(5)).unwrap();
        assert_eq!(kd.entries[0].highest_weight, zero);
        assert_eq!(kd.poincare(rs).unwrap(), vec![1, 2, 2, 1]);
        let deg1: Vec<Vec<i64>> = kd
            .entries
            .iter()
            .filter(|e| e.degree == 1)
            .map(|e| rs.root_coords(&e.highest_weight).unwrap())
            .collect();
        assert_eq!(deg1, vec![vec![-1, 0], vec![0, -1]]);

        let kd = kostant_decomposition(&g, &zero, SimpleSet::from_indices(&[0]), Mode::Modular(5)).unwrap();
        let got: Vec<(usize, Vec<i64>)> = kd
            .entries
            .iter()
            .map(|e| (e.degree, rs.root_coords(&e.highest_weight).unwrap()))
            .collect();
        assert_eq!(got, vec![(0, vec![0, 0]), (1, vec![0, -1]), (2, vec![-1, -2])]);
    }

    #[test]
    fn kostant_poincare_is_length_polynomial() {
        for label in ["A2", "B2", "G2", "A3", "B3"] {
            let g = group(label);
            let rs = g.root_system();
            let kd = kostant_decomposition(&g, &Weight::zero(rs.rank()), SimpleSet::EMPTY, Mode::Classical).unwrap();
            let lp: Vec<i64> = g.length_polynomial().iter().map(|&c| c as i64).collect();
            assert_eq!(kd.poincare(rs).unwrap(), lp);
        }
    }

    #[test]
    fn kostant_preconditions() {
        let g = group("B2");
        let zero = Weight::zero(2);
        assert!(kostant_decomposition(&g, &zero, SimpleSet::EMPTY, Mode::Modular(2)).is_err());
        assert!(kostant_decomposition(&g, &Weight(vec![4, 0]), SimpleSet::EMPTY, Mode::Modular(5)).is_err());
        assert!(kostant_decomposition(&g, &zero, SimpleSet::EMPTY, Mode::Modular(3)).is_ok());
        assert!(matches!(
            kostant_decomposition(&group("G2"), &zero, SimpleSet::EMPTY, Mode::Quantum(9)),
            Err(Error::Gate { .. })
        ));
    }

    #[test]
    fn restricted_highest_weights() {
        for (label, p) in [("A2", 5), ("B2", 5), ("A3", 7), ("G2", 7)] {
            let g = group(label);
            let rs = g.root_system();
            for lam in crate::alcove::open_alcove_weights(rs, p) {
                for j in SimpleSet::all_subsets(rs.rank()) {
                    let kd = kostant_decomposition(&g, &lam, j, Mode::Modular(p)).unwrap();
                    for e in &kd.entries {
                        assert!(crate::alcove::j_restricted(&e.highest_weight, j, p));
                    }
                }
            }
        }
    }

    #[test]
    fn b2_frobenius_kernel_dims() {
        let g = group("B2");
        let bc = frobenius_kernel_character(&g, &Weight::zero(2), SimpleSet::EMPTY, Mode::Modular(5), 4).unwrap();
        assert_eq!(bc.poincare(), vec![1, 2, 6, 10, 19]);
        for (n, slabs) in bc.degrees.iter().enumerate() {
            for s in slabs {
                assert_eq!(2 * s.i + s.j, n);
            }
        }
    }

    #[test]
    fn a1_frobenius_kernel_dims() {
        let g = group("A1");
        let bc = frobenius_kernel_character(&g, &Weight::zero(1), SimpleSet::EMPTY, Mode::Modular(5), 9).unwrap();
        assert_eq!(bc.poincare(), vec![1; 10]);
    }

    #[test]
    fn poincare_series_identity() {
        for (label, p) in [("A2", 5), ("B2", 5), ("A3", 5), ("G2", 7)] {
            let g = group(label);
            let rs = g.root_system();
            for lam in crate::alcove::open_alcove_weights(rs, p).into_iter().take(4) {
                for j in SimpleSet::all_subsets(rs.rank()) {
                    let d = 7;
                    let bc = frobenius_kernel_character(&g, &lam, j, Mode::Modular(p), d).unwrap();
                    let kd = kostant_decomposition(&g, &lam, j, Mode::Modular(p)).unwrap();
                    let nj = rs.nilradical_roots(j).len() as u64;
                    let mut expect = vec![0i64; d + 1];
                    for e in &kd.entries {
                        let dim = crate::character::levi_weyl_dimension(rs, &e.highest_weight, j);
                        for i in 0.. {
                            let n = e.degree + 2 * i;
                            if n > d {
                                break;
                            }
                            let sym = if nj == 0 { (i == 0) as u64 } else { crate::binomial(nj + i as u64 - 1, i as u64) };
                            expect[n] += dim * sym as i64;
                        }
                    }
                    assert_eq!(bc.poincare(), expect, "{label} {lam} {j}");
                    // the i = 0 slabs are the Kostant character
                    let kc = kd.character(rs).unwrap();
                    for (n, slabs) in bc.degrees.iter().enumerate() {
                        let zero_slab = slabs.iter().find(|s| s.i == 0).map(|s| s.character.clone()).unwrap_or_default();
                        assert_eq!(zero_slab, kc.degree(n));
                    }
                }
            }
        }
    }

    #[test]
    fn t1_examples() {
        let a1 = group("A1");
        let t = t1_invariants(&a1, &Weight(vec![3]), 5).unwrap();
        assert!(t.degree(0).is_zero());
        assert_eq!(t.degree(1), FormalCharacter::weight(Weight(vec![-1])));
        let t0 = t1_invariants(&a1, &Weight(vec![0]), 5).unwrap();
        assert_eq!(t0.degree(0), FormalCharacter::trivial(1));
        let a2 = group("A2");
        let t = t1_invariants(&a2, &Weight(vec![1, 0]), 5).unwrap();
        assert!(t.degrees.iter().all(FormalCharacter::is_zero));
    }

    #[test]
    fn parabolic_examples() {
        for label in ["A1", "A2", "B2"] {
            let g = group(label);
            let rs = g.root_system();
            let n = rs.rank();
            for j in SimpleSet::all_subsets(n) {
                let c = parabolic_character(&g, &Weight::zero(n), j, Mode::Modular(7), 6).unwrap();
                assert_eq!(c.degree(0), FormalCharacter::trivial(n));
                for d in (1..=5).step_by(2) {
                    assert!(c.degree(d).is_zero());
                }
                for d in 0..=6 {
                    assert!(c.degree(d).is_nonnegative(), "{label} {j} {d}");
                }
            }
        }
    }

    #[test]
    fn sl2_restricted_cohomology_of_g1() {
        // H^2(G_1, k)^(-1) is the coadjoint module for p > h
        let g = group("A1");
        let c = parabolic_character(&g, &Weight(vec![0]), SimpleSet::all(1), Mode::Modular(5), 4).unwrap();
        assert_eq!(c.poincare(), vec![1, 0, 3, 0, 5]);
    }

    #[test]
    fn t1_part_of_frobenius_kernel_matches_parabolic() {
        let g = group("A2");
        let rs = g.root_system();
        let p = 5;
        for lam in crate::alcove::open_alcove_weights(rs, p) {
            let bc = frobenius_kernel_character(&g, &lam, SimpleSet::EMPTY, Mode::Modular(p), 6).unwrap().total();
            let par = parabolic_character(&g, &lam, SimpleSet::EMPTY, Mode::Modular(p), 6).unwrap();
            for n in 0..=6 {
                let inv = bc.degree(n).filter(|mu| mu.div_exact(p).is_some());
                assert_eq!(inv, par.degree(n).frobenius_twist(p), "{lam} {n}");
            }
        }
    }

    #[test]
    fn quantum_matches_modular() {
        let g = group("A2");
        let zero = Weight::zero(2);
        for j in SimpleSet::all_subsets(2) {
            let a = kostant_decomposition(&g, &zero, j, Mode::Modular(7)).unwrap();
            let b = kostant_decomposition(&g, &zero, j, Mode::Quantum(7)).unwrap();
            assert_eq!(a.entries, b.entries);
            let a = frobenius_kernel_character(&g, &zero, j, Mode::Modular(7), 5).unwrap();
            let b = frobenius_kernel_character(&g, &zero, j, Mode::Quantum(7), 5).unwrap();
            assert_eq!(a.degrees, b.degrees);
        }
    }
}
