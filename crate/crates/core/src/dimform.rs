//! Closed-form dimension formulas for the magic chart and the Cartan powers
//! along the exceptional, subexceptional and Severi series.
//!
//! Everything is evaluated in exact rationals; a formula in the series
//! parameter `a` is a product of affine factors, so removable singularities at
//! small `a` are resolved by taking the limit (see [`AffineProduct::eval`]).

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{binom_int, expect_integer, int, rat, Affine, AffineProduct, Rational};
use crate::serial::parse_rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Series {
    Exceptional,
    Subexceptional,
    Severi,
}

/// A point of one of the series, `a` being the dimension parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesParam {
    pub a: Rational,
    pub b: Rational,
    pub k: u32,
}

/// Dual Coxeter number and Vogel β of a simple Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjointParams {
    pub name: String,
    pub hcheck: u32,
    #[serde(with = "rational_str")]
    pub beta: Rational,
    /// For 𝔤₂ the corollary holds with 2 in place of β.
    pub g2_exception: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VogelParams {
    pub name: String,
    #[serde(with = "rational_str")]
    pub alpha: Rational,
    #[serde(with = "rational_str")]
    pub beta: Rational,
    #[serde(with = "rational_str")]
    pub gamma: Rational,
}

impl VogelParams {
    pub fn t(&self) -> Rational {
        &self.alpha + &self.beta + &self.gamma
    }
}

mod rational_str {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Deserialize)]
struct SeriesTable {
    exceptional: Vec<String>,
    subexceptional: Vec<String>,
    severi: Vec<String>,
}

#[derive(Debug, Deserialize)]
struct ParamFile {
    series: SeriesTable,
    adjoint: Vec<AdjointParams>,
    vogel_intermediate: Vec<VogelParams>,
}

struct Tables {
    exceptional: Vec<Rational>,
    subexceptional: Vec<Rational>,
    severi: Vec<Rational>,
    adjoint: Vec<AdjointParams>,
    vogel: Vec<VogelParams>,
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| {
        let f: ParamFile = serde_json::from_str(include_str!("../data/params.json"))
            .expect("bundled parameter table is valid");
        let parse = |v: &[String]| v.iter().map(|s| parse_rational(s).expect("valid a")).collect();
        Tables {
            exceptional: parse(&f.series.exceptional),
            subexceptional: parse(&f.series.subexceptional),
            severi: parse(&f.series.severi),
            adjoint: f.adjoint,
            vogel: f.vogel_intermediate,
        }
    })
}

/// Admissible values of `a` for a series.
pub fn admissible(series: Series) -> &'static [Rational] {
    let t = tables();
    match series {
        Series::Exceptional => &t.exceptional,
        Series::Subexceptional => &t.subexceptional,
        Series::Severi => &t.severi,
    }
}

pub fn adjoint_table() -> &'static [AdjointParams] {
    &tables().adjoint
}

pub fn adjoint_params(name: &str) -> Option<&'static AdjointParams> {
    adjoint_table().iter().find(|p| p.name == name)
}

/// Vogel parameters recorded for intermediate algebras.
pub fn vogel_intermediate() -> &'static [VogelParams] {
    &tables().vogel
}

fn check_admissible(series: Series, formula: &str, a: &Rational) -> Result<()> {
    if admissible(series).contains(a) {
        Ok(())
    } else {
        Err(Error::Inadmissible {
            formula: formula.to_string(),
            param: "a".into(),
            value: a.to_string(),
        })
    }
}

fn pole_check(x: &Rational, at: &Rational) -> Result<()> {
    if x.is_zero() {
        Err(Error::Pole(at.to_string()))
    } else {
        Ok(())
    }
}

/// `dim Der(A) = 4(a-1)(a-2)/(a+4)`.
pub fn dim_der(a: &Rational) -> Result<Rational> {
    let den = a + int(4);
    pole_check(&den, a)?;
    Ok(int(4) * (a - int(1)) * (a - int(2)) / den)
}

/// `dim t(A) = 6a(a-1)/(a+4)`.
pub fn dim_tri(a: &Rational) -> Result<Rational> {
    let den = a + int(4);
    pole_check(&den, a)?;
    Ok(int(6) * a * (a - int(1)) / den)
}

/// `dim g(A,B) = 3(4a+ab+4b-4)(2a+ab+2b)/((a+4)(b+4))`.
pub fn dim_g(a: &Rational, b: &Rational) -> Result<Rational> {
    pole_check(&(a + int(4)), a)?;
    pole_check(&(b + int(4)), b)?;
    let ab = a * b;
    let x = int(4) * a + &ab + int(4) * b - int(4);
    let y = int(2) * a + &ab + int(2) * b;
    Ok(int(3) * x * y / ((a + int(4)) * (b + int(4))))
}

/// `slope * a + intercept`.
fn af(slope: Rational, intercept: i64) -> Affine {
    Affine::new(slope, int(intercept))
}

fn finish(p: AffineProduct, a: &Rational, what: &str) -> Result<BigInt> {
    expect_integer(&p.eval(a)?, what)
}

/// Cartan powers along the exceptional series.
pub fn exc_gk(a: &Rational, k: u32) -> Result<BigInt> {
    check_admissible(Series::Exceptional, "exc_gk", a)?;
    let p = AffineProduct::new()
        .mul(af(int(3), 5 + 2 * i64::from(k)))
        .div(af(int(3), 5))
        .mul_binom_top(&af(int(2), 3), k)
        .mul_binom_top(&af(rat(5, 2), 3), k)
        .mul_binom_top(&af(int(3), 4), k)
        .div_binom_top(&af(rat(1, 2), 1), k)
        .div_binom_top(&af(int(1), 1), k);
    finish(p, a, "exc_gk")
}

/// Cartan powers of the subexceptional algebras.
pub fn subexc_gk(a: &Rational, k: u32) -> Result<BigInt> {
    check_admissible(Series::Subexceptional, "subexc_gk", a)?;
    let p = AffineProduct::new()
        .mul(af(int(2), 1 + 2 * i64::from(k)))
        .div(af(int(2), 1))
        .mul_binom_top(&af(rat(3, 2), -1), k)
        .mul_binom_top(&af(rat(3, 2), 1), k)
        .mul_binom_top(&af(int(2), 0), k)
        .div_binom_top(&af(rat(1, 2), -1), k)
        .div_binom_top(&af(rat(1, 2), 1), k);
    finish(p, a, "subexc_gk")
}

/// Cartan powers of the distinguished module of dimension `6a+8`.
pub fn subexc_vk(a: &Rational, k: u32) -> Result<BigInt> {
    check_admissible(Series::Subexceptional, "subexc_vk", a)?;
    let p = AffineProduct::new()
        .mul(af(int(1), 1 + i64::from(k)))
        .div(af(int(1), 1))
        .mul_binom_top(&af(int(2), 1), k)
        .mul_binom_top(&af(rat(3, 2), 1), k)
        .div_binom_top(&af(rat(1, 2), 0), k);
    finish(p, a, "subexc_vk")
}

/// Cartan powers of `V_2` in the subexceptional series.
pub fn subexc_v2k(a: &Rational, k: u32) -> Result<BigInt> {
    check_admissible(Series::Subexceptional, "subexc_v2k", a)?;
    let p = AffineProduct::new()
        .mul(af(int(3), 2 + 4 * i64::from(k)))
        .scale(rat(1, i64::from(k) + 1))
        .div(af(int(3), 2))
        .mul_binom_top(&af(int(1), 0), k)
        .mul_binom_top(&af(int(1), 1), k)
        .mul_binom_top(&af(rat(3, 2), -1), k)
        .mul_binom_top(&af(rat(3, 2), 0), k)
        .mul_binom_top(&af(int(2), 1), 2 * k)
        .div_binom_top(&af(rat(1, 2), -1), k)
        .div_binom_top(&af(rat(1, 2), 0), k)
        .div_binom_top(&af(int(1), 0), 2 * k);
    finish(p, a, "subexc_v2k")
}

/// Cartan powers of the distinguished module in the Severi series.
pub fn severi_vk(a: &Rational, k: u32) -> Result<BigInt> {
    check_admissible(Series::Severi, "severi_vk", a)?;
    let p = AffineProduct::new()
        .mul(af(int(1), 2 * i64::from(k)))
        .mul(af(int(1), i64::from(k)))
        .div(af(int(1), 0))
        .div(af(int(1), 0))
        .mul_binom_top(&af(int(1), -1), k)
        .mul_binom_top(&af(rat(3, 2), -1), k)
        .div_binom_top(&af(rat(1, 2), 0), k);
    finish(p, a, "severi_vk")
}

fn b(n: u64, k: u64) -> Rational {
    Rational::from_integer(binom_int(n, k))
}

fn r(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `dim V_{iω₁+jω₇}` for 𝔢₇.
pub fn e7_vdim(i: u64, j: u64) -> Result<BigInt> {
    let num = r(j + 5)
        * (Rational::new(BigInt::from(2 * i + j), BigInt::from(17)) + int(1))
        * b(j + 9, 9)
        * b(11 + i, 11)
        * b(8 + i, 8)
        * b(16 + i + j, 16)
        * b(13 + i + j, 13);
    let den = int(5) * b(3 + i, 3) * b(8 + i + j, 8) * b(5 + i + j, 5);
    expect_integer(&(num / den), "e7_vdim")
}

/// The 𝔰𝔬₁₂ polynomial printed for `V_{iω₅+jω₂}`. Its values are those of
/// `dim V_{iω₂+jω₅}`: `i` counts the adjoint weight, `j` the half-spin one.
pub fn so12_vdim_w5w2(i: u64, j: u64) -> Result<BigInt> {
    let num = r(2 * i + j + 9)
        * r(j + 3)
        * b(i + 5, 5)
        * b(i + 4, 4)
        * b(i + j + 8, 8)
        * b(i + j + 7, 7)
        * b(j + 5, 5);
    let den = r(27) * r(i + 1) * b(i + j + 3, 3) * b(i + j + 4, 4);
    expect_integer(&(num / den), "so12_vdim_w5w2")
}

/// `dim V_{aω₄+b(ω₁+ω₆)+cω₅+dω₂}` for 𝔰𝔬₁₂.
pub fn so12_vdim_4param(a: u64, b: u64, c: u64, d: u64) -> Result<BigInt> {
    let f: [u64; 29] = [
        1 + b,
        1 + b,
        2 + b + d,
        3 + b + d,
        4 + a + b + d,
        4 + a + b + d,
        5 + a + b + c + d,
        5 + a + b + c + d,
        1 + d,
        2 + d,
        3 + a + d,
        4 + a + c + d,
        2 + a,
        3 + a + c,
        1 + a,
        2 + a + c,
        1 + c,
        9 + 2 * a + 2 * b + c + 2 * d,
        8 + 2 * a + 2 * b + c + d,
        7 + 2 * a + 2 * b + c + d,
        6 + a + 2 * b + c + d,
        5 + a + 2 * b + d,
        7 + 2 * a + b + c + d,
        6 + 2 * a + b + c + d,
        5 + 2 * a + b + c,
        4 + a + b + c,
        3 + a + b,
        3 + a + b + c,
        2 + a + b,
    ];
    let num: BigInt = f.iter().map(|&x| BigInt::from(x)).product();
    let x = Rational::new(num, BigInt::from(158_018_273_280_000u64));
    expect_integer(&x, "so12_vdim_4param")
}

/// `dim V_{aω₆+bω₁}` for 𝔰𝔬₁₂.
pub fn so12_vdim_w6w1(a: u64, b: u64) -> Result<BigInt> {
    let f: [u64; 20] = [
        1 + b,
        2 + b,
        3 + b,
        4 + b,
        5 + b,
        9 + a + b,
        8 + a + b,
        7 + a + b,
        6 + a + b,
        5 + a + b,
        7 + a,
        6 + a,
        5 + a,
        5 + a,
        4 + a,
        4 + a,
        3 + a,
        3 + a,
        2 + a,
        1 + a,
    ];
    let num: BigInt = f.iter().map(|&x| BigInt::from(x)).product();
    let x = Rational::new(num, BigInt::from(548_674_560_000u64));
    expect_integer(&x, "so12_vdim_w6w1")
}

/// `(dim X_H, dim X_G, dim X_Ḡ) = (2ȟ-3-2β, 2ȟ-3-β, 2ȟ-3)`.
pub fn adjoint_dims(p: &AdjointParams) -> Result<(i64, i64, i64)> {
    let beta = if p.g2_exception { int(2) } else { p.beta.clone() };
    let beta = i64::try_from(expect_integer(&beta, "β")?).map_err(|_| Error::NotIntegral {
        what: "β".into(),
        value: p.beta.to_string(),
    })?;
    let top = 2 * i64::from(p.hcheck) - 3;
    Ok((top - 2 * beta, top - beta, top))
}
