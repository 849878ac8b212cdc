//! Exact dense linear algebra over prime fields and the rationals.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A field with explicit element arithmetic.
pub trait Field: Clone + Debug + Send + Sync {
    type E: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn from_i64(&self, x: i64) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::E) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    /// Symmetric integer representative when it fits, used for reporting.
    fn to_i64(&self, a: &Self::E) -> Option<i64>;
    fn name(&self) -> String;
}

/// The prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: i64) -> Result<Fp> {
        if !crate::is_prime(p) || p > u32::MAX as i64 {
            return Err(Error::Precondition(format!("{p} is not a supported prime")));
        }
        Ok(Fp { p: p as u64 })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }
}

impl Field for Fp {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn to_i64(&self, a: &u64) -> Option<i64> {
        let a = *a as i64;
        let p = self.p as i64;
        Some(if a > p / 2 { a - p } else { a })
    }
    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
}

/// The rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type E = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn to_i64(&self, a: &BigRational) -> Option<i64> {
        if a.is_integer() && a.abs() < BigRational::from_integer(BigInt::from(i64::MAX)) {
            a.to_integer().try_into().ok()
        } else {
            None
        }
    }
    fn name(&self) -> String {
        "Q".to_string()
    }
}

/// Dense matrix as a list of rows.
pub type Matrix<E> = Vec<Vec<E>>;

/// Brings `m` to reduced row echelon form in place and returns the pivot
/// columns; rows past the pivot count are zero afterwards.
pub fn rref<F: Field>(f: &F, m: &mut Matrix<F::E>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(piv) = (r..m.len()).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, piv);
        let inv = f.inv(&m[r][c]);
        for x in m[r][c..].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !f.is_zero(&row[c]) {
                let factor = row[c].clone();
                for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    if !f.is_zero(y) {
                        *x = f.sub(x, &f.mul(&factor, y));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::E>, ncols: usize) -> usize {
    let mut a = m.clone();
    rref(f, &mut a, ncols).len()
}

/// Basis of the right kernel `{x : m x = 0}`.
pub fn kernel<F: Field>(f: &F, m: &Matrix<F::E>, ncols: usize) -> Vec<Vec<F::E>> {
    let mut a = m.clone();
    let pivots = rref(f, &mut a, ncols);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![f.zero(); ncols];
            v[free] = f.one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = f.neg(&a[r][free]);
            }
            v
        })
        .collect()
}

/// Some solution of `m x = b`, or `None` if the system is inconsistent.
pub fn solve<F: Field>(f: &F, m: &Matrix<F::E>, ncols: usize, b: &[F::E]) -> Option<Vec<F::E>> {
    let mut a: Matrix<F::E> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(f, &mut a, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![f.zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = a[r][ncols].clone();
    }
    Some(x)
}

/// `m v`.
pub fn mat_vec<F: Field>(f: &F, m: &Matrix<F::E>, v: &[F::E]) -> Vec<F::E> {
    m.iter()
        .map(|row| {
            row.iter().zip(v).fold(f.zero(), |acc, (a, b)| {
                if f.is_zero(a) || f.is_zero(b) {
                    acc
                } else {
                    f.add(&acc, &f.mul(a, b))
                }
            })
        })
        .collect()
}

/// `a b` for `a` of size `r x k` and `b` of size `k x c`.
pub fn mat_mul<F: Field>(f: &F, a: &Matrix<F::E>, b: &Matrix<F::E>, c: usize) -> Matrix<F::E> {
    a.iter()
        .map(|row| {
            let mut out = vec![f.zero(); c];
            for (k, x) in row.iter().enumerate() {
                if f.is_zero(x) {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(&b[k]) {
                    if !f.is_zero(y) {
                        *o = f.add(o, &f.mul(x, y));
                    }
                }
            }
            out
        })
        .collect()
}

/// Incrementally maintained echelon basis of a subspace of `F^n`.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    rows: Vec<(usize, Vec<F::E>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` modulo the current span.
    pub fn reduce(&self, v: &[F::E]) -> Vec<F::E> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (c, row) in &self.rows {
            if !f.is_zero(&v[*c]) {
                let factor = v[*c].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !f.is_zero(y) {
                        *x = f.sub(x, &f.mul(&factor, y));
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::E]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` to the span; returns false if it was already contained.
    pub fn insert(&mut self, v: &[F::E]) -> bool {
        let f = self.field.clone();
        let mut r = self.reduce(v);
        let Some(c) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[c]);
        for x in r.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for (_, row) in self.rows.iter_mut() {
            if !f.is_zero(&row[c]) {
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    if !f.is_zero(y) {
                        *x = f.sub(x, &f.mul(&factor, y));
                    }
                }
            }
        }
        self.rows.push((c, r));
        true
    }
}
