//! Alcove predicates, weak linkage to zero, and the admissibility gates for
//! roots of unity.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{Family, RootSystem, SimpleSet, Weight};
use crate::weyl::{WeylElement, WeylGroup};

/// How a computation interprets its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "mode", content = "modulus")]
pub enum Mode {
    /// Characteristic `p`.
    Modular(i64),
    /// Primitive `l`-th root of unity.
    Quantum(i64),
    /// Characteristic zero, no Frobenius twist.
    Classical,
}

impl Mode {
    pub fn modulus(&self) -> Option<i64> {
        match self {
            Mode::Modular(m) | Mode::Quantum(m) => Some(*m),
            Mode::Classical => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Mode::Modular(_) => "modular",
            Mode::Quantum(_) => "quantum",
            Mode::Classical => "classical",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Modular(p) => write!(f, "modular(p={p})"),
            Mode::Quantum(l) => write!(f, "quantum(l={l})"),
            Mode::Classical => write!(f, "classical"),
        }
    }
}

/// `0 < (lambda + rho, beta^vee) < p` for all positive roots, or `<= p` when `closed`.
pub fn in_alcove(rs: &RootSystem, lambda: &Weight, p: i64, closed: bool) -> bool {
    let shifted = lambda + &rs.rho();
    rs.positive_roots().iter().all(|b| {
        let c = rs.pairing(&shifted, b);
        c > 0 && if closed { c <= p } else { c < p }
    })
}

/// `(mu, alpha^vee) >= 0` for every `alpha` in `J`.
pub fn is_j_dominant(mu: &Weight, j: SimpleSet) -> bool {
    j.iter().all(|i| mu.0[i] >= 0)
}

/// `mu` in `(X_J)_1`: J-dominant with `(mu, alpha^vee) < p` for `alpha` in `J`.
pub fn j_restricted(mu: &Weight, j: SimpleSet, p: i64) -> bool {
    j.iter().all(|i| (0..p).contains(&mu.0[i]))
}

/// Dominant weights in the closed bottom alcove, in lexicographic order.
pub fn closed_alcove_weights(rs: &RootSystem, p: i64) -> Vec<Weight> {
    alcove_weights(rs, p, true)
}

/// Dominant weights in the open bottom alcove.
pub fn open_alcove_weights(rs: &RootSystem, p: i64) -> Vec<Weight> {
    alcove_weights(rs, p, false)
}

fn alcove_weights(rs: &RootSystem, p: i64, closed: bool) -> Vec<Weight> {
    let n = rs.rank();
    let mut out = Vec::new();
    let mut c = vec![0i64; n];
    // (lambda+rho, alpha_i^vee) <= p bounds every coordinate by p - 1
    'outer: loop {
        let w = Weight(c.clone());
        if in_alcove(rs, &w, p, closed) {
            out.push(w);
        }
        for x in c.iter_mut().rev() {
            *x += 1;
            if *x < p {
                continue 'outer;
            }
            *x = 0;
        }
        break;
    }
    out
}

/// A solution of `lambda = w . 0 + m sigma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkageDatum {
    /// Index of `w` in the group's element list.
    pub w_index: usize,
    pub w: WeylElement,
    pub sigma: Weight,
    pub modulus: i64,
}

/// Weak linkage of `lambda` to zero: the unique `(w, sigma)` with
/// `lambda = w . 0 + m sigma`, `sigma` in `X`, found by exhausting `W`.
///
/// Requires `lambda` dominant in the closed bottom alcove and `m > h`.
pub fn weak_linkage(g: &WeylGroup, lambda: &Weight, m: i64) -> Result<Option<LinkageDatum>> {
    let rs = g.root_system();
    check_rank(rs, lambda)?;
    if m <= rs.coxeter_number() {
        return Err(Error::Precondition(format!(
            "weak linkage needs modulus > h = {}, got {m}",
            rs.coxeter_number()
        )));
    }
    if !lambda.is_dominant() || !in_alcove(rs, lambda, m, true) {
        return Err(Error::Precondition(format!(
            "{lambda} is not a dominant weight in the closed bottom {m}-alcove"
        )));
    }
    let zero = Weight::zero(rs.rank());
    let found: Vec<LinkageDatum> = (0..g.order())
        .filter_map(|k| {
            let diff = lambda - &g.dot(k, &zero);
            diff.div_exact(m).map(|sigma| LinkageDatum {
                w_index: k,
                w: g.element(k).clone(),
                sigma,
                modulus: m,
            })
        })
        .collect();
    match found.len() {
        0 => Ok(None),
        1 => Ok(found.into_iter().next()),
        _ => Err(Error::Internal(format!(
            "{lambda} has {} linkage solutions modulo {m}",
            found.len()
        ))),
    }
}

/// Weak linkage at a root of unity, behind the base admissibility gate.
pub fn weak_linkage_quantum(g: &WeylGroup, lambda: &Weight, l: i64) -> Result<Option<LinkageDatum>> {
    admissibility(g.root_system(), l, Context::Base)?.require()?;
    weak_linkage(g, lambda, l)
}

pub(crate) fn check_rank(rs: &RootSystem, w: &Weight) -> Result<()> {
    if w.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            rank: rs.rank(),
            got: w.rank(),
        });
    }
    Ok(())
}

/// The hypotheses on `l` that appear across the quantum statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Context {
    /// `l` odd, and coprime to 3 in type G2.
    Base,
    /// Base plus coprime to `n+1` in type `A_n` and to 3 in types E6, G2.
    WeightSeparation,
    /// Base plus `l >= h - 1`.
    Kostant,
    /// Weight separation plus `l > 2(h-1)`.
    Ring,
    /// Weight separation plus `l > h`.
    Module,
    /// Weight separation plus `l > h`, as for the parabolic statement.
    Parabolic,
}

impl Context {
    pub const ALL: [Context; 6] = [
        Context::Base,
        Context::WeightSeparation,
        Context::Kostant,
        Context::Ring,
        Context::Module,
        Context::Parabolic,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Context::Base => "base",
            Context::WeightSeparation => "weight-separation",
            Context::Kostant => "kostant",
            Context::Ring => "ring",
            Context::Module => "module",
            Context::Parabolic => "parabolic",
        }
    }

    fn demands(&self) -> &'static [Flag] {
        use Flag::*;
        match self {
            Context::Base => &[Odd, CoprimeG2],
            Context::WeightSeparation => &[Odd, CoprimeType],
            Context::Kostant => &[Odd, CoprimeG2, GeHMinus1],
            Context::Ring => &[Odd, CoprimeType, Gt2HMinus2],
            Context::Module | Context::Parabolic => &[Odd, CoprimeType, GtH],
        }
    }
}

impl FromStr for Context {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Context::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownContext(s.to_string()))
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Flag {
    Odd,
    GtH,
    GeHMinus1,
    Gt2HMinus2,
    CoprimeG2,
    CoprimeType,
}

impl Flag {
    fn name(&self) -> &'static str {
        match self {
            Flag::Odd => "odd",
            Flag::GtH => "gt_h",
            Flag::GeHMinus1 => "ge_hminus1",
            Flag::Gt2HMinus2 => "gt_2hminus2",
            Flag::CoprimeG2 => "coprime_3_if_g2",
            Flag::CoprimeType => "coprime_type",
        }
    }
}

/// Flags computed from `l` and the Cartan type alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityProfile {
    pub modulus: i64,
    pub coxeter_number: i64,
    pub odd: bool,
    pub gt_h: bool,
    pub ge_hminus1: bool,
    pub gt_2hminus2: bool,
    /// Coprime to 3 when the type is G2.
    pub coprime_3_if_g2: bool,
    /// Coprime to `n+1` in type `A_n`, to 3 in types E6 and G2.
    pub coprime_type: bool,
}

impl AdmissibilityProfile {
    pub fn new(rs: &RootSystem, l: i64) -> Self {
        let h = rs.coxeter_number();
        let t = rs.cartan_type();
        let g2 = t.family == Family::G;
        let coprime_type = match t.family {
            Family::A => crate::gcd(l, t.rank as i64 + 1) == 1,
            Family::G => l % 3 != 0,
            Family::E if t.rank == 6 => l % 3 != 0,
            _ => true,
        };
        AdmissibilityProfile {
            modulus: l,
            coxeter_number: h,
            odd: l % 2 != 0,
            gt_h: l > h,
            ge_hminus1: l >= h - 1,
            gt_2hminus2: l > 2 * (h - 1),
            coprime_3_if_g2: !g2 || l % 3 != 0,
            coprime_type,
        }
    }

    fn flag(&self, f: Flag) -> bool {
        match f {
            Flag::Odd => self.odd,
            Flag::GtH => self.gt_h,
            Flag::GeHMinus1 => self.ge_hminus1,
            Flag::Gt2HMinus2 => self.gt_2hminus2,
            Flag::CoprimeG2 => self.coprime_3_if_g2,
            Flag::CoprimeType => self.coprime_type,
        }
    }
}

/// Outcome of checking one context.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Admissibility {
    pub context: Context,
    pub profile: AdmissibilityProfile,
    pub pass: bool,
    /// Names of the demanded flags that are false.
    pub failed: Vec<String>,
}

impl Admissibility {
    /// Turns a failed check into a [`Error::Gate`].
    pub fn require(self) -> Result<AdmissibilityProfile> {
        if self.pass {
            Ok(self.profile)
        } else {
            Err(Error::Gate {
                context: self.context.name().to_string(),
                modulus: self.profile.modulus,
                failed: self.failed,
            })
        }
    }
}

pub fn admissibility(rs: &RootSystem, l: i64, context: Context) -> Result<Admissibility> {
    if l < 1 {
        return Err(Error::Precondition(format!("modulus must be >= 1, got {l}")));
    }
    let profile = AdmissibilityProfile::new(rs, l);
    let failed: Vec<String> = context
        .demands()
        .iter()
        .filter(|f| !profile.flag(**f))
        .map(|f| f.name().to_string())
        .collect();
    Ok(Admissibility {
        context,
        pass: failed.is_empty(),
        profile,
        failed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(label: &str) -> WeylGroup {
        WeylGroup::new(&RootSystem::parse(label).unwrap()).unwrap()
    }

    #[test]
    fn alcove_examples() {
        let a2 = RootSystem::parse("A2").unwrap();
        let lam = Weight(vec![2, 1]);
        assert!(in_alcove(&a2, &lam, 5, true));
        assert!(!in_alcove(&a2, &lam, 5, false));
        assert!(in_alcove(&a2, &Weight::zero(2), 3, false));
        let a1 = RootSystem::parse("A1").unwrap();
        assert!(!in_alcove(&a1, &Weight(vec![5]), 5, true));
        assert_eq!(closed_alcove_weights(&a1, 5).len(), 5);
    }

    #[test]
    fn zero_is_in_alcove_above_h_minus_one() {
        for label in ["A3", "B3", "G2", "F4", "D5"] {
            let rs = RootSystem::parse(label).unwrap();
            let h = rs.coxeter_number();
            assert!(in_alcove(&rs, &Weight::zero(rs.rank()), h, false));
            assert!(!in_alcove(&rs, &Weight::zero(rs.rank()), h - 1, false));
        }
    }

    #[test]
    fn restricted_examples() {
        let full = SimpleSet::all(2);
        assert!(j_restricted(&Weight(vec![0, 0]), full, 5));
        assert!(j_restricted(&Weight(vec![-3, 7]), SimpleSet::EMPTY, 5));
        assert!(j_restricted(&Weight(vec![2, 1]), full, 5));
        assert!(!j_restricted(&Weight(vec![5, 0]), full, 5));
    }

    #[test]
    fn linkage_examples() {
        let a1 = group("A1");
        let d = weak_linkage(&a1, &Weight(vec![3]), 5).unwrap().unwrap();
        assert_eq!(d.w.word, vec![0]);
        assert_eq!(d.sigma, Weight(vec![1]));
        let z = weak_linkage(&a1, &Weight(vec![0]), 5).unwrap().unwrap();
        assert_eq!((z.w_index, z.sigma), (0, Weight(vec![0])));

        let a2 = group("A2");
        assert_eq!(weak_linkage(&a2, &Weight(vec![1, 0]), 5).unwrap(), None);
        assert!(weak_linkage(&a2, &Weight(vec![0, 0]), 3).is_err());
        assert!(weak_linkage(&a2, &Weight(vec![4, 4]), 5).is_err());
    }

    #[test]
    fn linkage_sigma_is_minuscule_or_zero() {
        for (label, p) in [("A1", 5), ("A2", 5), ("A2", 7), ("B2", 5), ("B2", 7), ("A3", 5), ("G2", 7)] {
            let g = group(label);
            let rs = g.root_system();
            let mut allowed = rs.minuscule_weights();
            allowed.push(Weight::zero(rs.rank()));
            for lam in closed_alcove_weights(rs, p) {
                if let Some(d) = weak_linkage(&g, &lam, p).unwrap() {
                    assert!(allowed.contains(&d.sigma), "{label} {lam}");
                    let back = &g.dot(d.w_index, &Weight::zero(rs.rank())) + &d.sigma.scale(p);
                    assert_eq!(back, lam);
                }
            }
        }
    }

    #[test]
    fn admissibility_examples() {
        let a2 = RootSystem::parse("A2").unwrap();
        let g2 = RootSystem::parse("G2").unwrap();
        let b2 = RootSystem::parse("B2").unwrap();
        assert!(!admissibility(&a2, 9, Context::WeightSeparation).unwrap().pass);
        assert!(admissibility(&a2, 9, Context::Base).unwrap().pass);
        let g = admissibility(&g2, 9, Context::Base).unwrap();
        assert!(!g.pass);
        assert_eq!(g.failed, vec!["coprime_3_if_g2"]);
        assert!(admissibility(&b2, 7, Context::Ring).unwrap().pass);
        assert!(!admissibility(&b2, 5, Context::Ring).unwrap().pass);
        assert!(!admissibility(&b2, 4, Context::Base).unwrap().pass);
        assert!(matches!(
            "bogus".parse::<Context>(),
            Err(Error::UnknownContext(_))
        ));
        assert!(matches!(
            admissibility(&a2, 9, Context::WeightSeparation).unwrap().require(),
            Err(Error::Gate { .. })
        ));
    }

    #[test]
    fn quantum_linkage_is_gated() {
        let g2 = group("G2");
        assert!(matches!(
            weak_linkage_quantum(&g2, &Weight::zero(2), 9),
            Err(Error::Gate { .. })
        ));
        let a1 = group("A1");
        assert_eq!(
            weak_linkage_quantum(&a1, &Weight(vec![3]), 5).unwrap(),
            weak_linkage(&a1, &Weight(vec![3]), 5).unwrap()
        );
    }
}
