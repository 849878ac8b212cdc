//! Exact scalars built from a formal primitive `l`-th root of unity `zeta`.
//!
//! [`CycScalar`] holds monomials `+-zeta^k`, which is all the quantum
//! exterior algebra ever produces from a single product. [`CycInt`] is the
//! ring `Z[zeta]`, stored in the power basis `1, zeta, .., zeta^{phi(l)-1}`
//! modulo the cyclotomic polynomial, so that sums of monomials compare
//! correctly. Modulus 1 gives ordinary integers (`zeta = 1`).

use std::fmt;

use serde::{Deserialize, Serialize};

/// `sign * zeta^exponent`, with `sign` in `{-1, 0, 1}` and exponent reduced mod `modulus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycScalar {
    pub sign: i8,
    pub exponent: u32,
    pub modulus: u32,
}

impl CycScalar {
    pub fn one(modulus: u32) -> Self {
        CycScalar {
            sign: 1,
            exponent: 0,
            modulus,
        }
    }

    pub fn zero(modulus: u32) -> Self {
        CycScalar {
            sign: 0,
            exponent: 0,
            modulus,
        }
    }

    /// `sign * zeta^exp`, with `exp` any integer.
    pub fn new(sign: i8, exp: i64, modulus: u32) -> Self {
        if sign == 0 {
            return CycScalar::zero(modulus);
        }
        CycScalar {
            sign: sign.signum(),
            exponent: exp.rem_euclid(modulus as i64) as u32,
            modulus,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn mul(&self, other: &CycScalar) -> CycScalar {
        assert_eq!(self.modulus, other.modulus);
        if self.is_zero() || other.is_zero() {
            return CycScalar::zero(self.modulus);
        }
        CycScalar::new(
            self.sign * other.sign,
            self.exponent as i64 + other.exponent as i64,
            self.modulus,
        )
    }

    /// Sets the exponent to zero, keeping the sign: the `zeta -> 1` specialisation.
    pub fn specialize(&self) -> i64 {
        self.sign as i64
    }

    pub fn to_cyc_int(&self) -> CycInt {
        CycInt::monomial(self.sign as i64, self.exponent as i64, self.modulus)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.sign, self.exponent) {
            (0, _) => write!(f, "0"),
            (s, 0) => write!(f, "{s}"),
            (1, 1) => write!(f, "z"),
            (-1, 1) => write!(f, "-z"),
            (1, e) => write!(f, "z^{e}"),
            (_, e) => write!(f, "-z^{e}"),
        }
    }
}

fn poly_divrem_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len().saturating_sub(dd)];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    q
}

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = poly_divrem_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// An element of `Z[zeta_l]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycInt {
    pub modulus: u32,
    /// Coefficients in the power basis, length `phi(modulus)`.
    pub coeffs: Vec<i64>,
}

impl CycInt {
    pub fn zero(modulus: u32) -> Self {
        let d = cyclotomic_polynomial(modulus).len() - 1;
        CycInt {
            modulus,
            coeffs: vec![0; d],
        }
    }

    pub fn from_int(c: i64, modulus: u32) -> Self {
        let mut z = CycInt::zero(modulus);
        z.coeffs[0] = c;
        z
    }

    /// `c * zeta^e`.
    pub fn monomial(c: i64, e: i64, modulus: u32) -> Self {
        let e = e.rem_euclid(modulus as i64) as usize;
        let mut raw = vec![0i64; e + 1];
        raw[e] = c;
        CycInt::reduce(raw, modulus)
    }

    fn reduce(mut raw: Vec<i64>, modulus: u32) -> Self {
        let phi = cyclotomic_polynomial(modulus);
        let d = phi.len() - 1;
        for k in (d..raw.len()).rev() {
            let c = raw[k];
            if c != 0 {
                for (j, &pj) in phi.iter().enumerate() {
                    raw[k - d + j] -= c * pj;
                }
            }
        }
        raw.resize(d, 0);
        CycInt {
            modulus,
            coeffs: raw,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &CycInt) -> CycInt {
        assert_eq!(self.modulus, other.modulus);
        CycInt {
            modulus: self.modulus,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> CycInt {
        CycInt {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &CycInt) -> CycInt {
        assert_eq!(self.modulus, other.modulus);
        let mut raw = vec![0i64; self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        CycInt::reduce(raw, self.modulus)
    }

    pub fn mul_scalar(&self, s: &CycScalar) -> CycInt {
        self.mul(&s.to_cyc_int())
    }

    /// If this element is `+-zeta^k`, returns it as a scalar.
    pub fn as_scalar(&self) -> Option<CycScalar> {
        if self.is_zero() {
            return Some(CycScalar::zero(self.modulus));
        }
        (0..self.modulus as i64).find_map(|e| {
            [1i8, -1]
                .into_iter()
                .find(|&s| *self == CycInt::monomial(s as i64, e, self.modulus))
                .map(|s| CycScalar::new(s, e, self.modulus))
        })
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.as_scalar() {
            return write!(f, "{s}");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?
                    } else {
                        write!(f, "z^{k}")?
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn scalar_arithmetic() {
        let a = CycScalar::new(-1, 3, 5);
        let b = CycScalar::new(-1, 4, 5);
        assert_eq!(a.mul(&b), CycScalar::new(1, 2, 5));
        assert!(a.mul(&CycScalar::zero(5)).is_zero());
        assert_eq!(a.specialize(), -1);
    }

    #[test]
    fn powers_sum_to_zero() {
        for l in [3u32, 5, 7, 9] {
            let mut s = CycInt::zero(l);
            for e in 0..l as i64 {
                s = s.add(&CycInt::monomial(1, e, l));
            }
            // 1 + z + .. + z^{l-1} = 0 for primitive z unless l = 1
            assert!(s.is_zero(), "l = {l}");
        }
        assert_eq!(CycInt::monomial(1, 0, 1).add(&CycInt::monomial(1, 3, 1)), CycInt::from_int(2, 1));
    }

    #[test]
    fn monomials_round_trip() {
        for l in [1u32, 3, 5, 7] {
            for e in 0..l as i64 {
                for s in [1i8, -1] {
                    let x = CycScalar::new(s, e, l);
                    assert_eq!(x.to_cyc_int().as_scalar(), Some(x));
                    let y = CycScalar::new(1, 2 * e + 1, l);
                    assert_eq!(x.to_cyc_int().mul(&y.to_cyc_int()), x.mul(&y).to_cyc_int());
                }
            }
        }
    }
}
