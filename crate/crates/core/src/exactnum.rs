//! Exact rational scalars and generalized binomial coefficients.
//!
//! Every computation in the crate runs over [`Rational`], a canonical
//! arbitrary-precision fraction. Closed-form dimension formulas are products of
//! binomials whose upper argument is an affine function of a series parameter;
//! [`AffineProduct`] evaluates such products at a point while cancelling
//! removable singularities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always stored with a positive, coprime denominator.
pub type Rational = BigRational;

/// `n / d` as a [`Rational`]. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// True when the fraction is in canonical form: positive denominator and
/// `gcd(|numerator|, denominator) = 1`.
pub fn is_canonical(x: &Rational) -> bool {
    x.denom().is_positive() && x.numer().abs().gcd(x.denom()).is_one()
}

/// Falling-factorial binomial `x (x-1) ... (x-k+1) / k!`.
pub fn rat_binom(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 1..=k {
        let top = x - int(i64::from(k)) + int(i64::from(i));
        acc = acc * top / int(i64::from(i));
    }
    acc
}

/// `binom(k + c, k) = prod_{i=1..k} (c + i) / i`, the shape used by the
/// dimension formulas.
pub fn binom_top(c: &Rational, k: u32) -> Rational {
    rat_binom(&(c + int(i64::from(k))), k)
}

/// Integer binomial coefficient.
pub fn binom_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Returns the integer value of `x`, or [`Error::NotIntegral`] naming `what`.
pub fn expect_integer(x: &Rational, what: &str) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::NotIntegral {
            what: what.to_string(),
            value: x.to_string(),
        })
    }
}

/// Rank of the matrix with the given rows, by exact Gaussian elimination.
pub fn matrix_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] / &pivot;
                for c in col..ncols {
                    let delta = &f * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `slope * a + intercept` for a parameter `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub slope: Rational,
    pub intercept: Rational,
}

impl Affine {
    pub fn new(slope: Rational, intercept: Rational) -> Self {
        Self { slope, intercept }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(Rational::zero(), c)
    }

    pub fn eval(&self, a: &Rational) -> Rational {
        &self.slope * a + &self.intercept
    }
}

/// A rational function of one parameter written as
/// `constant * prod(numer) / prod(denom)` with affine factors.
///
/// Evaluation at `a0` cancels factors vanishing there pairwise (each pair
/// contributes the ratio of its slopes), which is the limit of the function at
/// `a0`. More vanishing denominator factors than numerator ones is a pole.
#[derive(Clone, Debug)]
pub struct AffineProduct {
    constant: Rational,
    numer: Vec<Affine>,
    denom: Vec<Affine>,
}

impl Default for AffineProduct {
    fn default() -> Self {
        Self::new()
    }
}

impl AffineProduct {
    pub fn new() -> Self {
        Self {
            constant: Rational::one(),
            numer: Vec::new(),
            denom: Vec::new(),
        }
    }

    pub fn scale(mut self, c: Rational) -> Self {
        self.constant *= c;
        self
    }

    pub fn mul(mut self, f: Affine) -> Self {
        self.numer.push(f);
        self
    }

    pub fn div(mut self, f: Affine) -> Self {
        self.denom.push(f);
        self
    }

    /// Multiplies by `binom(m + c, m)` where `c = slope * a + intercept`.
    pub fn mul_binom_top(mut self, c: &Affine, m: u32) -> Self {
        for i in 1..=m {
            let shifted = Affine::new(c.slope.clone(), &c.intercept + int(i64::from(i)));
            self.numer.push(shifted);
            self.constant /= int(i64::from(i));
        }
        self
    }

    /// Divides by `binom(m + c, m)`.
    pub fn div_binom_top(mut self, c: &Affine, m: u32) -> Self {
        for i in 1..=m {
            let shifted = Affine::new(c.slope.clone(), &c.intercept + int(i64::from(i)));
            self.denom.push(shifted);
            self.constant *= int(i64::from(i));
        }
        self
    }

    pub fn eval(&self, a0: &Rational) -> Result<Rational> {
        let mut value = self.constant.clone();
        let mut vanishing_num = Vec::new();
        let mut vanishing_den = Vec::new();
        for f in &self.numer {
            let v = f.eval(a0);
            if v.is_zero() {
                vanishing_num.push(f.slope.clone());
            } else {
                value *= v;
            }
        }
        for f in &self.denom {
            let v = f.eval(a0);
            if v.is_zero() {
                if f.slope.is_zero() {
                    return Err(Error::Pole(a0.to_string()));
                }
                vanishing_den.push(f.slope.clone());
            } else {
                value /= v;
            }
        }
        if vanishing_den.len() > vanishing_num.len() {
            return Err(Error::Pole(a0.to_string()));
        }
        if vanishing_num.len() > vanishing_den.len() {
            return Ok(Rational::zero());
        }
        for (n, d) in vanishing_num.iter().zip(&vanishing_den) {
            // a numerator factor with zero slope that vanishes is identically zero
            if n.is_zero() {
                return Ok(Rational::zero());
            }
            value = value * n / d;
        }
        Ok(value)
    }
}
