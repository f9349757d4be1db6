//! Exact dense linear algebra over the rationals and prime fields.
//!
//! The elimination routines are generic over [`Field`]. Pivoting always takes
//! the first nonzero entry in column order, so results are deterministic.
//! Over the rationals, rank uses fraction-free (Bareiss) elimination on
//! integer rows, first in checked `i128` and then in big integers if that
//! overflows.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::limits;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub enum LinalgError {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {0} is too large (must be below 2^31)")]
    PrimeTooLarge(u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("intermediate entries grew to {bits} bits (limit {limit})")]
    Swell { bits: u64, limit: u64 },

    #[error("invalid field selector {0:?}, expected `q` or `gf:<prime>`")]
    BadField(String),
}

/// Coefficient field selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    /// GF(p); construct through [`FieldSpec::prime`] so `p` is checked.
    Prime(u32),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, LinalgError> {
        if p >= 1 << 31 {
            return Err(LinalgError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "rationals" {
            return Ok(FieldSpec::Rationals);
        }
        let p = t
            .strip_prefix("gf:")
            .or_else(|| t.strip_prefix("gf"))
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| LinalgError::BadField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Arithmetic of a coefficient field.
pub trait Field: Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `a` must be nonzero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn one(&self) -> Self::Elem {
        self.from_i64(1)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }

    fn rank(&self, m: &Matrix<Self::Elem>) -> Result<usize, LinalgError> {
        Ok(forward_rank(self, m.clone()))
    }

    /// Rank of an integer matrix, read in this field.
    fn rank_int(&self, m: &Matrix<i64>) -> Result<usize, LinalgError> {
        self.rank(&m.over(self))
    }
}

/// The rationals, with reduced big fractions.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
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

    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn rank(&self, m: &Matrix<BigRational>) -> Result<usize, LinalgError> {
        let rows = integer_rows(m);
        let small: Option<Vec<Vec<i128>>> = rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_i128()).collect())
            .collect();
        if let Some(r) = small.and_then(|a| bareiss_rank_i128(a, m.cols)) {
            return Ok(r);
        }
        bareiss_rank_big(rows, m.cols)
    }

    fn rank_int(&self, m: &Matrix<i64>) -> Result<usize, LinalgError> {
        let small = (0..m.rows)
            .map(|r| m.row(r).iter().map(|&x| x as i128).collect())
            .collect();
        if let Some(r) = bareiss_rank_i128(small, m.cols) {
            return Ok(r);
        }
        let big = (0..m.rows)
            .map(|r| m.row(r).iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        bareiss_rank_big(big, m.cols)
    }
}

/// GF(p) with canonical residues in `0..p`.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `p` must be a prime below 2^31; use [`FieldSpec::prime`] to check.
    pub fn new(p: u32) -> Self {
        PrimeField { p: p as u64 }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }

    fn inv(&self, a: &u64) -> u64 {
        debug_assert!(*a != 0);
        let (mut base, mut exp, mut acc) = (*a, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

/// Runs `$body` with `$f` bound to a reference to the concrete field for
/// `$spec`.
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            $crate::linalg::FieldSpec::Rationals => {
                let $f = &$crate::linalg::Rationals;
                $body
            }
            $crate::linalg::FieldSpec::Prime(p) => {
                let $f = &$crate::linalg::PrimeField::new(p);
                $body
            }
        }
    };
}
pub(crate) use with_field;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn new(rows: usize, cols: usize, data: Vec<E>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Appends the columns of `other` on the right.
    pub fn hstack(&self, other: &Matrix<E>) -> Result<Self, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot stack {} rows next to {} rows",
                self.rows, other.rows
            )));
        }
        let cols = self.cols + other.cols;
        Ok(Matrix::from_fn(self.rows, cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        }))
    }

    /// A matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<E>]) -> Self {
        Matrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }
}

impl Matrix<i64> {
    /// Converts integer entries into elements of `field`.
    pub fn over<F: Field + ?Sized>(&self, field: &F) -> Matrix<F::Elem> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }
}

/// Rank by forward elimination.
fn forward_rank<F: Field + ?Sized>(field: &F, mut m: Matrix<F::Elem>) -> usize {
    let mut rank = 0;
    for c in 0..m.cols {
        if rank == m.rows {
            break;
        }
        let Some(p) = (rank..m.rows).find(|&r| !field.is_zero(m.get(r, c))) else {
            continue;
        };
        m.swap_rows(rank, p);
        let inv = field.inv(m.get(rank, c));
        for r in rank + 1..m.rows {
            if field.is_zero(m.get(r, c)) {
                continue;
            }
            let factor = field.mul(m.get(r, c), &inv);
            for j in c..m.cols {
                let v = field.sub(m.get(r, j), &field.mul(&factor, m.get(rank, j)));
                m.set(r, j, v);
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced row echelon form with the pivot column of each pivot row.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    pub reduced: Matrix<E>,
    pub pivots: Vec<usize>,
}

pub fn row_reduce<F: Field + ?Sized>(field: &F, mut m: Matrix<F::Elem>) -> Echelon<F::Elem> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..m.cols {
        if rank == m.rows {
            break;
        }
        let Some(p) = (rank..m.rows).find(|&r| !field.is_zero(m.get(r, c))) else {
            continue;
        };
        m.swap_rows(rank, p);
        let inv = field.inv(m.get(rank, c));
        for j in c..m.cols {
            let v = field.mul(m.get(rank, j), &inv);
            m.set(rank, j, v);
        }
        for r in 0..m.rows {
            if r == rank || field.is_zero(m.get(r, c)) {
                continue;
            }
            let factor = m.get(r, c).clone();
            for j in c..m.cols {
                let v = field.sub(m.get(r, j), &field.mul(&factor, m.get(rank, j)));
                m.set(r, j, v);
            }
        }
        pivots.push(c);
        rank += 1;
    }
    Echelon { reduced: m, pivots }
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Result<usize, LinalgError> {
    field.rank(m)
}

/// Basis of the right kernel `{v : m v = 0}`, one vector per free column.
pub fn nullspace_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let ech = row_reduce(field, m.clone());
    let mut is_pivot = vec![false; m.cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); m.cols];
        v[free] = field.one();
        for (r, &p) in ech.pivots.iter().enumerate() {
            v[p] = field.neg(ech.reduced.get(r, free));
        }
        basis.push(v);
    }
    basis
}

/// Whether `m x = v` has a solution.
pub fn in_column_space<F: Field>(
    field: &F,
    m: &Matrix<F::Elem>,
    v: &[F::Elem],
) -> Result<bool, LinalgError> {
    if v.len() != m.rows {
        return Err(LinalgError::DimensionMismatch(format!(
            "vector of length {} against {} rows",
            v.len(),
            m.rows
        )));
    }
    if v.iter().all(|x| field.is_zero(x)) {
        return Ok(true);
    }
    let aug = m.hstack(&Matrix::from_columns(m.rows, &[v.to_vec()]))?;
    let ech = row_reduce(field, aug);
    Ok(ech.pivots.last() != Some(&m.cols))
}

/// `m v` for a column vector `v`.
pub fn mul_vec<F: Field>(field: &F, m: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    (0..m.rows)
        .map(|r| {
            m.row(r).iter().zip(v).fold(field.zero(), |acc, (a, b)| {
                field.add(&acc, &field.mul(a, b))
            })
        })
        .collect()
}

/// Rank of an integer matrix over the field named by `spec`.
pub fn rank_over(spec: FieldSpec, m: &Matrix<i64>) -> Result<usize, LinalgError> {
    with_field!(spec, |f| f.rank_int(m))
}

/// Clears denominators row by row.
fn integer_rows(m: &Matrix<BigRational>) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|r| {
            let row = m.row(r);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect()
}

/// Fraction-free elimination in checked `i128`; `None` on overflow.
fn bareiss_rank_i128(mut a: Vec<Vec<i128>>, cols: usize) -> Option<usize> {
    let n = a.len();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..cols {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[c];
        for row in rest.iter_mut() {
            let lead = row[c];
            for j in c + 1..cols {
                let v = pivot
                    .checked_mul(row[j])?
                    .checked_sub(lead.checked_mul(pivot_row[j])?)?;
                row[j] = v / prev;
            }
            row[c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_big(mut a: Vec<Vec<BigInt>>, cols: usize) -> Result<usize, LinalgError> {
    let limit = limits::max_bits();
    let n = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[c];
        let mut widest = 0;
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            if lead.is_zero() {
                for j in c + 1..cols {
                    if !row[j].is_zero() {
                        row[j] = &row[j] * pivot / &prev;
                    }
                }
            } else {
                for j in c + 1..cols {
                    row[j] = (pivot * &row[j] - &lead * &pivot_row[j]) / &prev;
                }
            }
            row[c] = BigInt::zero();
            widest = row.iter().map(|x| x.abs().bits()).fold(widest, u64::max);
        }
        if widest > limit {
            return Err(LinalgError::Swell {
                bits: widest,
                limit,
            });
        }
        prev = pivot.clone();
        rank += 1;
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(rows: usize, cols: usize, data: &[i64]) -> Matrix<i64> {
        Matrix::new(rows, cols, data.to_vec()).unwrap()
    }

    /// Boundary of the 3-cycle: rows vertices 0,1,2; columns edges 01,02,12.
    fn cycle_boundary() -> Matrix<i64> {
        int(3, 3, &[-1, -1, 0, 1, 0, -1, 0, 1, 1])
    }

    /// Rank oracle: the largest k with a nonzero k x k minor, by cofactor
    /// expansion over all row/column subsets.
    fn brute_rank(m: &Matrix<i64>) -> usize {
        fn det(a: &[Vec<i64>]) -> i64 {
            if a.is_empty() {
                return 1;
            }
            (0..a.len())
                .map(|j| {
                    let minor: Vec<Vec<i64>> = a[1..]
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|(k, _)| *k != j)
                                .map(|(_, &x)| x)
                                .collect()
                        })
                        .collect();
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * a[0][j] * det(&minor)
                })
                .sum()
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            (0u32..1 << n)
                .filter(|m| m.count_ones() as usize == k)
                .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
                .collect()
        }
        for k in (1..=m.rows().min(m.cols())).rev() {
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    let a: Vec<Vec<i64>> = rs
                        .iter()
                        .map(|&r| cs.iter().map(|&c| *m.get(r, c)).collect())
                        .collect();
                    if det(&a) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn small_ranks() {
        assert_eq!(
            rank_over(FieldSpec::Rationals, &int(3, 3, &[0; 9])).unwrap(),
            0
        );
        let id = Matrix::from_fn(4, 4, |r, c| i64::from(r == c));
        assert_eq!(rank_over(FieldSpec::Rationals, &id).unwrap(), 4);
        assert_eq!(rank_over(FieldSpec::Prime(7), &id).unwrap(), 4);
        assert_eq!(brute_rank(&cycle_boundary()), 2);
        assert_eq!(
            rank_over(FieldSpec::Rationals, &cycle_boundary()).unwrap(),
            2
        );
        assert_eq!(
            rank_over(FieldSpec::Prime(2), &cycle_boundary()).unwrap(),
            2
        );
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2
        let m = int(2, 2, &[1, 1, 1, -1]);
        assert_eq!(rank_over(FieldSpec::Rationals, &m).unwrap(), 2);
        assert_eq!(rank_over(FieldSpec::Prime(2), &m).unwrap(), 1);
        assert_eq!(rank_over(FieldSpec::Prime(3), &m).unwrap(), 2);
    }

    #[test]
    fn nullspaces() {
        let q = Rationals;
        let id = Matrix::from_fn(3, 3, |r, c| i64::from(r == c)).over(&q);
        assert!(nullspace_basis(&q, &id).is_empty());

        let gf2 = PrimeField::new(2);
        let ones = int(1, 2, &[1, 1]).over(&gf2);
        assert_eq!(nullspace_basis(&gf2, &ones), vec![vec![1, 1]]);

        let d = cycle_boundary().over(&q);
        let ker = nullspace_basis(&q, &d);
        assert_eq!(ker.len(), 1);
        // The cycle 01 - 02 + 12.
        let expected: Vec<BigRational> = [1, -1, 1].iter().map(|&v| q.from_i64(v)).collect();
        assert_eq!(ker[0], expected);
        assert!(mul_vec(&q, &d, &ker[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn column_space() {
        let q = Rationals;
        let zero = Matrix::filled(2, 2, q.zero());
        assert!(in_column_space(&q, &zero, &[q.zero(), q.zero()]).unwrap());
        assert!(!in_column_space(&q, &zero, &[q.one(), q.zero()]).unwrap());
        // Boundary map of the solid triangle: rows edges 01,02,12; one column.
        let d2 = int(3, 1, &[1, -1, 1]).over(&q);
        let cycle: Vec<BigRational> = [1, -1, 1].iter().map(|&v| q.from_i64(v)).collect();
        assert!(in_column_space(&q, &d2, &cycle).unwrap());
        let other: Vec<BigRational> = [1, 1, 1].iter().map(|&v| q.from_i64(v)).collect();
        assert!(!in_column_space(&q, &d2, &other).unwrap());
        assert!(in_column_space(&q, &d2, &cycle[..2]).is_err());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("gf:3".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(3));
        assert_eq!("GF5".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(5));
        assert_eq!("gf:4".parse::<FieldSpec>(), Err(LinalgError::NotPrime(4)));
        assert!("r".parse::<FieldSpec>().is_err());
        assert_eq!(
            FieldSpec::prime(1 << 31),
            Err(LinalgError::PrimeTooLarge(1 << 31))
        );
        assert_eq!(
            FieldSpec::prime(2147483647).unwrap(),
            FieldSpec::Prime(2147483647)
        );
        assert_eq!(FieldSpec::Prime(2).to_string(), "gf:2");
    }

    #[test]
    fn big_entries_fall_back_to_big_integers() {
        let big = i64::MAX / 3;
        let m = int(3, 3, &[big, big - 1, 7, big - 5, big, 11, 3, big - 2, big]);
        let q = rank_over(FieldSpec::Rationals, &m).unwrap();
        assert_eq!(q, 3);
        let rows = integer_rows(&m.over(&Rationals));
        assert_eq!(bareiss_rank_big(rows, 3).unwrap(), 3);
    }

    #[test]
    fn swell_guard() {
        let old = limits::max_bits();
        let rows: Vec<Vec<BigInt>> = vec![
            vec![BigInt::from(1u8) << 200, BigInt::from(3)],
            vec![BigInt::from(5), BigInt::from(1u8) << 200],
        ];
        // Pass the limit through the global only for the duration of the call.
        limits::set_max_bits(64);
        let r = bareiss_rank_big(rows, 2);
        limits::set_max_bits(old);
        assert!(matches!(r, Err(LinalgError::Swell { .. })));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix() -> impl Strategy<Value = Matrix<i64>> {
            (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
                proptest::collection::vec(-3i64..=3, r * c)
                    .prop_map(move |d| Matrix::new(r, c, d).unwrap())
            })
        }

        proptest! {
            #[test]
            fn rank_nullity(m in small_matrix()) {
                for spec in [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(5)] {
                    with_field!(spec, |f| {
                        let mf = m.over(f);
                        let r = f.rank(&mf).unwrap();
                        let ker = nullspace_basis(f, &mf);
                        prop_assert_eq!(r + ker.len(), m.cols());
                        prop_assert_eq!(r, row_reduce(f, mf.clone()).pivots.len());
                        for v in &ker {
                            prop_assert!(mul_vec(f, &mf, v).iter().all(|x| f.is_zero(x)));
                        }
                    });
                }
            }

            #[test]
            fn rational_rank_matches_minors(m in small_matrix()) {
                prop_assert_eq!(rank_over(FieldSpec::Rationals, &m).unwrap(), brute_rank(&m));
            }

            #[test]
            fn large_primes_agree_with_rationals(m in small_matrix()) {
                // Entries are at most 3 in size on at most 5x5, so every minor
                // is far below these primes.
                let q = rank_over(FieldSpec::Rationals, &m).unwrap();
                for p in [1_000_003u32, 2_147_483_647] {
                    prop_assert_eq!(rank_over(FieldSpec::Prime(p), &m).unwrap(), q);
                }
            }

            #[test]
            fn elimination_is_deterministic(m in small_matrix()) {
                let a = row_reduce(&Rationals, m.over(&Rationals));
                let b = row_reduce(&Rationals, m.over(&Rationals));
                prop_assert_eq!(a.reduced, b.reduced);
                prop_assert_eq!(a.pivots, b.pivots);
            }
        }
    }
}
