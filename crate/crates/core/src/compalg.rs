//! Split composition algebras in the `gl(U) + U + U*` model.
//!
//! `U` is a plane with basis `e1, e2` and `U*` its dual. Quaternions are
//! `gl(U)`, sextonions are `gl(U) + U` and octonions are `gl(U) + U + U*`.
//! Coordinates are always ordered `E11, E12, E21, E22, e1, e2, e1*, e2*`; the
//! sextonions use the first six and the quaternions the first four.

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{int, matrix_rank, Rational};
use crate::sample::{small_rational, SeedRng};
use crate::serial;

fn z() -> Rational {
    Rational::zero()
}

/// A 2x2 matrix acting on `U`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[Rational; 2]; 2]);

impl Mat2 {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(int(a), int(b), int(c), int(d))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1)
    }

    /// The elementary matrix `E_{ij}` (zero-based indices).
    pub fn unit(i: usize, j: usize) -> Self {
        let mut m = Self::zero();
        m.0[i][j] = int(1);
        m
    }

    pub fn trace(&self) -> Rational {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn det(&self) -> Rational {
        &self.0[0][0] * &self.0[1][1] - &self.0[0][1] * &self.0[1][0]
    }

    fn zip(&self, o: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        Mat2([
            [f(&self.0[0][0], &o.0[0][0]), f(&self.0[0][1], &o.0[0][1])],
            [f(&self.0[1][0], &o.0[1][0]), f(&self.0[1][1], &o.0[1][1])],
        ])
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.zip(self, |a, _| a * c)
    }

    pub fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let m = &self.0;
        let n = &o.0;
        let e = |i: usize, j: usize| &m[i][0] * &n[0][j] + &m[i][1] * &n[1][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Self::new(m[0][0].clone(), m[1][0].clone(), m[0][1].clone(), m[1][1].clone())
    }

    /// Matrix times a column of two coordinates.
    fn act(&self, v: &[Rational; 2]) -> [Rational; 2] {
        let m = &self.0;
        [
            &m[0][0] * &v[0] + &m[0][1] * &v[1],
            &m[1][0] * &v[0] + &m[1][1] * &v[1],
        ]
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        Vec2(self.act(&v.0))
    }

    /// `M u*` with `u*` written as a column; pass `transpose()` for the dual action.
    pub fn apply_co(&self, v: &Covec2) -> Covec2 {
        Covec2(self.act(&v.0))
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::Singular);
        }
        Ok(mat_adj0(self).scale(&(Rational::one() / d)))
    }

    pub fn entries(&self) -> [Rational; 4] {
        let m = &self.0;
        [m[0][0].clone(), m[0][1].clone(), m[1][0].clone(), m[1][1].clone()]
    }

    pub fn from_entries(c: &[Rational]) -> Self {
        Self::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(Zero::is_zero)
    }

    pub fn random(rng: &mut SeedRng) -> Self {
        Self::new(small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng))
    }
}

/// `X^0 = trace(X) I - X`, so that `X X^0 = det(X) I`.
pub fn mat_adj0(x: &Mat2) -> Mat2 {
    Mat2::identity().scale(&x.trace()).sub(x)
}

macro_rules! pair_type {
    ($name:ident) => {
        #[derive(Clone, Debug, PartialEq, Eq, Hash)]
        pub struct $name(pub [Rational; 2]);

        impl $name {
            pub fn new(a: Rational, b: Rational) -> Self {
                $name([a, b])
            }
            pub fn from_ints(a: i64, b: i64) -> Self {
                Self::new(int(a), int(b))
            }
            pub fn zero() -> Self {
                Self::from_ints(0, 0)
            }
            pub fn unit(i: usize) -> Self {
                let mut v = Self::zero();
                v.0[i] = int(1);
                v
            }
            pub fn add(&self, o: &Self) -> Self {
                Self::new(&self.0[0] + &o.0[0], &self.0[1] + &o.0[1])
            }
            pub fn sub(&self, o: &Self) -> Self {
                Self::new(&self.0[0] - &o.0[0], &self.0[1] - &o.0[1])
            }
            pub fn scale(&self, c: &Rational) -> Self {
                Self::new(&self.0[0] * c, &self.0[1] * c)
            }
            pub fn neg(&self) -> Self {
                self.scale(&int(-1))
            }
            pub fn is_zero(&self) -> bool {
                self.0[0].is_zero() && self.0[1].is_zero()
            }
            pub fn random(rng: &mut SeedRng) -> Self {
                Self::new(small_rational(rng), small_rational(rng))
            }
        }
    };
}

pair_type!(Vec2);
pair_type!(Covec2);

/// The evaluation `<u, u*>`.
pub fn pairing(u: &Vec2, us: &Covec2) -> Rational {
    &u.0[0] * &us.0[0] + &u.0[1] * &us.0[1]
}

/// `u ⊗ u*` as the matrix `u u*^T`.
pub fn outer(u: &Vec2, us: &Covec2) -> Mat2 {
    Mat2::new(
        &u.0[0] * &us.0[0],
        &u.0[0] * &us.0[1],
        &u.0[1] * &us.0[0],
        &u.0[1] * &us.0[1],
    )
}

/// An element `(X, u)` of the sextonions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sextonion {
    pub x: Mat2,
    pub u: Vec2,
}

impl Sextonion {
    pub fn new(x: Mat2, u: Vec2) -> Self {
        Self { x, u }
    }

    pub fn one() -> Self {
        Self::new(Mat2::identity(), Vec2::zero())
    }

    pub fn zero() -> Self {
        Self::new(Mat2::zero(), Vec2::zero())
    }

    pub fn basis(i: usize) -> Self {
        let mut c = vec![z(); 6];
        c[i] = int(1);
        Self::from_coords(&c)
    }

    pub fn coords(&self) -> Vec<Rational> {
        let mut c = self.x.entries().to_vec();
        c.extend(self.u.0.iter().cloned());
        c
    }

    pub fn from_coords(c: &[Rational]) -> Self {
        Self::new(Mat2::from_entries(&c[..4]), Vec2::new(c[4].clone(), c[5].clone()))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.x.add(&o.x), self.u.add(&o.u))
    }

    pub fn mul(&self, o: &Self) -> Self {
        sext_mul(self, o)
    }

    /// The degenerate norm `det X`, whose kernel is `U`.
    pub fn norm(&self) -> Rational {
        self.x.det()
    }

    pub fn embed(&self) -> Octonion {
        Octonion::new(self.x.clone(), self.u.clone(), Covec2::zero())
    }
}

/// `(X, u)(Y, v) = (XY, X^0 v + Y u)`.
pub fn sext_mul(a: &Sextonion, b: &Sextonion) -> Sextonion {
    Sextonion::new(
        a.x.mul(&b.x),
        mat_adj0(&a.x).apply(&b.u).add(&b.x.apply(&a.u)),
    )
}

/// An element `(X, u, u*)` of the split octonions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct Octonion {
    pub x: Mat2,
    pub u: Vec2,
    pub us: Covec2,
}

impl Octonion {
    pub fn new(x: Mat2, u: Vec2, us: Covec2) -> Self {
        Self { x, u, us }
    }

    pub fn one() -> Self {
        Self::scalar(int(1))
    }

    pub fn zero() -> Self {
        Self::scalar(z())
    }

    pub fn scalar(c: Rational) -> Self {
        Self::new(Mat2::identity().scale(&c), Vec2::zero(), Covec2::zero())
    }

    pub fn basis(i: usize) -> Self {
        let mut c = vec![z(); 8];
        c[i] = int(1);
        Self::from_coords(&c)
    }

    pub fn coords(&self) -> Vec<Rational> {
        let mut c = self.x.entries().to_vec();
        c.extend(self.u.0.iter().cloned());
        c.extend(self.us.0.iter().cloned());
        c
    }

    /// Accepts 4, 6 or 8 coordinates; missing ones are zero.
    pub fn from_coords(c: &[Rational]) -> Self {
        let get = |i: usize| c.get(i).cloned().unwrap_or_else(z);
        Self::new(
            Mat2::new(get(0), get(1), get(2), get(3)),
            Vec2::new(get(4), get(5)),
            Covec2::new(get(6), get(7)),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.x.add(&o.x), self.u.add(&o.u), self.us.add(&o.us))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.x.sub(&o.x), self.u.sub(&o.u), self.us.sub(&o.us))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.x.scale(c), self.u.scale(c), self.us.scale(c))
    }

    pub fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    pub fn mul(&self, o: &Self) -> Self {
        octo_mul(self, o)
    }

    pub fn conj(&self) -> Self {
        octo_conj(self)
    }

    /// `q(X, u, u*) = det X + 2<u, u*>`.
    pub fn norm(&self) -> Rational {
        self.x.det() + int(2) * pairing(&self.u, &self.us)
    }

    /// `Re(X, u, u*) = trace(X) / 2`.
    pub fn re(&self) -> Rational {
        self.x.trace() / int(2)
    }

    pub fn is_imaginary(&self) -> bool {
        self.re().is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(Zero::is_zero)
    }

    /// Nonzero coordinates only in `gl(U) + U`.
    pub fn in_sextonions(&self) -> bool {
        self.us.is_zero()
    }

    pub fn in_quaternions(&self) -> bool {
        self.us.is_zero() && self.u.is_zero()
    }

    /// Random element with small rational coordinates in the first `dim`
    /// coordinates (4, 6 or 8).
    pub fn random(rng: &mut SeedRng, dim: usize) -> Self {
        let c: Vec<Rational> = (0..dim).map(|_| small_rational(rng)).collect();
        Self::from_coords(&c)
    }

    /// Random element with integer coordinates in `-2..=2`.
    pub fn random_int(rng: &mut SeedRng, dim: usize) -> Self {
        let c: Vec<Rational> = (0..dim).map(|_| int(rng.gen_range(-2..=2))).collect();
        Self::from_coords(&c)
    }
}

impl From<Octonion> for Vec<String> {
    fn from(o: Octonion) -> Self {
        serial::to_strings(&o.coords())
    }
}

impl TryFrom<Vec<String>> for Octonion {
    type Error = Error;

    fn try_from(v: Vec<String>) -> Result<Self> {
        if !matches!(v.len(), 4 | 6 | 8) {
            return Err(Error::Parse(format!("expected 4, 6 or 8 coordinates, got {}", v.len())));
        }
        Ok(Octonion::from_coords(&serial::parse_all(&v)?))
    }
}

/// The polarized norm `q(a, b) = (q(a + b) - q(a) - q(b)) / 2`, so `q(a, a) = q(a)`.
pub fn polar(a: &Octonion, b: &Octonion) -> Rational {
    (a.add(b).norm() - a.norm() - b.norm()) / int(2)
}

/// `(X,u,u*)(Y,v,v*) = (XY - 2 v⊗u* - 2 (u⊗v*)^0, X^0 v + Y u, X^t v* + (Y^0)^t u*)`.
///
/// See [`OctoConvention`] for how the first and third slots were fixed.
pub fn octo_mul(a: &Octonion, b: &Octonion) -> Octonion {
    let two = int(2);
    let x = a
        .x
        .mul(&b.x)
        .sub(&outer(&b.u, &a.us).scale(&two))
        .sub(&mat_adj0(&outer(&a.u, &b.us)).scale(&two));
    let u = mat_adj0(&a.x).apply(&b.u).add(&b.x.apply(&a.u));
    let us = a
        .x
        .transpose()
        .apply_co(&b.us)
        .add(&mat_adj0(&b.x).transpose().apply_co(&a.us));
    Octonion::new(x, u, us)
}

/// `conj(a) = 2 Re(a) - a = (X^0, -u, -u*)`.
pub fn octo_conj(a: &Octonion) -> Octonion {
    Octonion::new(mat_adj0(&a.x), a.u.neg(), a.us.neg())
}

/// Outer-product terms allowed in the first slot of a candidate product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OuterTerm {
    /// `u ⊗ v*`
    UVs,
    /// `v ⊗ u*`
    VUs,
    /// `(u ⊗ v*)^0`
    UVsAdj0,
    /// `(v ⊗ u*)^0`
    VUsAdj0,
}

impl OuterTerm {
    pub const ALL: [OuterTerm; 4] = [Self::UVs, Self::VUs, Self::UVsAdj0, Self::VUsAdj0];

    fn eval(self, a: &Octonion, b: &Octonion) -> Mat2 {
        match self {
            Self::UVs => outer(&a.u, &b.us),
            Self::VUs => outer(&b.u, &a.us),
            Self::UVsAdj0 => mat_adj0(&outer(&a.u, &b.us)),
            Self::VUsAdj0 => mat_adj0(&outer(&b.u, &a.us)),
        }
    }
}

/// Readings of the operator `Y^*` acting on `u*` in the third slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThirdSlot {
    Transpose,
    Adj0Transpose,
    Plain,
    Adj0,
}

impl ThirdSlot {
    pub const ALL: [ThirdSlot; 4] = [Self::Transpose, Self::Adj0Transpose, Self::Plain, Self::Adj0];

    fn op(self, y: &Mat2) -> Mat2 {
        match self {
            Self::Transpose => y.transpose(),
            Self::Adj0Transpose => mat_adj0(y).transpose(),
            Self::Plain => y.clone(),
            Self::Adj0 => mat_adj0(y),
        }
    }
}

/// One candidate octonion product:
/// `(XY + c1 T1 + c2 T2, X^0 v + Y u, X^t v* + Y^* u*)`.
///
/// The printed formula leaves `Y^*` undefined and, read literally, its first
/// slot does not give a composition algebra for `q = det + 2<u,u*>`.
/// [`select_conventions`] searches the candidate family; exactly one member
/// has `(I,0,0)` as a two-sided unit and multiplicative norm, and that member
/// is hard-coded in [`octo_mul`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OctoConvention {
    pub terms: [(OuterTerm, i64); 2],
    pub third: ThirdSlot,
}

impl OctoConvention {
    pub const SELECTED: OctoConvention = OctoConvention {
        terms: [(OuterTerm::VUs, -2), (OuterTerm::UVsAdj0, -2)],
        third: ThirdSlot::Adj0Transpose,
    };

    /// The first slot exactly as printed, `-2 u⊗v* - 2 (v⊗u*)^0`.
    pub const PRINTED: OctoConvention = OctoConvention {
        terms: [(OuterTerm::UVs, -2), (OuterTerm::VUsAdj0, -2)],
        third: ThirdSlot::Transpose,
    };

    pub fn mul(&self, a: &Octonion, b: &Octonion) -> Octonion {
        let mut x = a.x.mul(&b.x);
        for (t, c) in self.terms {
            x = x.add(&t.eval(a, b).scale(&int(c)));
        }
        let u = mat_adj0(&a.x).apply(&b.u).add(&b.x.apply(&a.u));
        let us = a
            .x
            .transpose()
            .apply_co(&b.us)
            .add(&self.third.op(&b.x).apply_co(&a.us));
        Octonion::new(x, u, us)
    }

    /// Unordered pairs of distinct outer terms, coefficients `±2`, and all
    /// third-slot readings: 96 candidates.
    pub fn candidates() -> Vec<OctoConvention> {
        let mut out = Vec::new();
        for (i, &t1) in OuterTerm::ALL.iter().enumerate() {
            for &t2 in &OuterTerm::ALL[i + 1..] {
                for c1 in [2, -2] {
                    for c2 in [2, -2] {
                        for third in ThirdSlot::ALL {
                            out.push(OctoConvention {
                                terms: [(t1, c1), (t2, c2)],
                                third,
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// `(I,0,0)` is a two-sided unit on the basis and `q(ab) = q(a) q(b)` for
    /// all `a, b` of the form `e_i + e_j` (`i <= j`). The norm identity is of
    /// degree two in each argument, so basis pairs alone do not pin it down.
    pub fn is_composition(&self) -> bool {
        let one = Octonion::one();
        let unit = (0..8).map(Octonion::basis).all(|e| {
            self.mul(&one, &e) == e && self.mul(&e, &one) == e
        });
        if !unit {
            return false;
        }
        let mut probes = Vec::new();
        for i in 0..8 {
            for j in i..8 {
                probes.push(Octonion::basis(i).add(&Octonion::basis(j)));
            }
        }
        probes.iter().all(|a| {
            probes
                .iter()
                .all(|b| self.mul(a, b).norm() == a.norm() * b.norm())
        })
    }
}

/// All candidate conventions passing [`OctoConvention::is_composition`].
pub fn select_conventions() -> Vec<OctoConvention> {
    OctoConvention::candidates()
        .into_iter()
        .filter(OctoConvention::is_composition)
        .collect()
}

/// `phi(x, y, z) = Re[(xy)z - (zy)x]` on imaginary octonions.
pub fn assoc_form(x: &Octonion, y: &Octonion, z: &Octonion) -> Result<Rational> {
    if !(x.is_imaginary() && y.is_imaginary() && z.is_imaginary()) {
        return Err(Error::NotImaginary);
    }
    Ok(x.mul(y).mul(z).sub(&z.mul(y).mul(x)).re())
}

/// True iff every product among `u1, u2` vanishes, i.e. their span is a null plane.
pub fn is_null_plane(u1: &Octonion, u2: &Octonion) -> Result<bool> {
    if matrix_rank(&[u1.coords(), u2.coords()]) < 2 {
        return Err(Error::Dependent);
    }
    Ok([(u1, u1), (u1, u2), (u2, u1), (u2, u2)]
        .iter()
        .all(|(a, b)| a.mul(b).is_zero()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Sextonion,
    Octonion,
}

impl AlgebraKind {
    pub fn dim(self) -> usize {
        match self {
            Self::Sextonion => 6,
            Self::Octonion => 8,
        }
    }

    /// Product of two coordinate vectors.
    pub fn mul_coords(self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        match self {
            Self::Sextonion => {
                sext_mul(&Sextonion::from_coords(a), &Sextonion::from_coords(b)).coords()
            }
            Self::Octonion => {
                octo_mul(&Octonion::from_coords(a), &Octonion::from_coords(b)).coords()
            }
        }
    }

    pub fn basis(self, i: usize) -> Vec<Rational> {
        let mut c = vec![z(); self.dim()];
        c[i] = int(1);
        c
    }
}

/// A linear endomorphism of the sextonions or octonions in the standard basis.
/// Column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    pub kind: AlgebraKind,
    pub m: Vec<Vec<Rational>>,
}

impl LinMap {
    pub fn zero(kind: AlgebraKind) -> Self {
        let n = kind.dim();
        Self { kind, m: vec![vec![z(); n]; n] }
    }

    pub fn identity(kind: AlgebraKind) -> Self {
        let mut id = Self::zero(kind);
        for i in 0..kind.dim() {
            id.m[i][i] = int(1);
        }
        id
    }

    /// The matrix of a coordinate map `f`.
    pub fn from_fn(kind: AlgebraKind, f: impl Fn(&[Rational]) -> Vec<Rational>) -> Self {
        let n = kind.dim();
        let mut m = vec![vec![z(); n]; n];
        for j in 0..n {
            let col = f(&kind.basis(j));
            for (i, v) in col.into_iter().enumerate().take(n) {
                m[i][j] = v;
            }
        }
        Self { kind, m }
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.m
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        let m = self
            .m
            .iter()
            .zip(&o.m)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect())
            .collect();
        Self { kind: self.kind, m }
    }

    pub fn rank(&self) -> usize {
        matrix_rank(&self.m)
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Zero::is_zero)
    }

    /// The columns spanning the image.
    pub fn columns(&self) -> Vec<Vec<Rational>> {
        let n = self.m.len();
        (0..n).map(|j| (0..n).map(|i| self.m[i][j].clone()).collect()).collect()
    }

    /// Restriction of an octonion map to the sextonion coordinates.
    pub fn restrict_to_sextonions(&self) -> Self {
        Self {
            kind: AlgebraKind::Sextonion,
            m: self.m[..6].iter().map(|r| r[..6].to_vec()).collect(),
        }
    }

    pub fn flat(&self) -> Vec<Rational> {
        self.m.iter().flatten().cloned().collect()
    }
}

fn vadd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `d(e_i e_j) = d(e_i) e_j + e_i d(e_j)` for every ordered basis pair.
pub fn is_derivation(d: &LinMap) -> bool {
    let k = d.kind;
    let n = k.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let (ei, ej) = (k.basis(i), k.basis(j));
            let lhs = d.apply(&k.mul_coords(&ei, &ej));
            let rhs = vadd(
                &k.mul_coords(&d.apply(&ei), &ej),
                &k.mul_coords(&ei, &d.apply(&ej)),
            );
            lhs == rhs
        })
    })
}

/// `g(e_i e_j) = g(e_i) g(e_j)` for every ordered basis pair.
pub fn is_automorphism(g: &LinMap) -> bool {
    let k = g.kind;
    let n = k.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let (ei, ej) = (k.basis(i), k.basis(j));
            g.apply(&k.mul_coords(&ei, &ej)) == k.mul_coords(&g.apply(&ei), &g.apply(&ej))
        })
    })
}

/// An element of the radical of `Aut(S)`: a map `sigma: gl(U) -> U` fixed by
/// its values on `X = E12` and `Y = E21`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RElement {
    pub sx: Vec2,
    pub sy: Vec2,
}

impl RElement {
    pub fn new(sx: Vec2, sy: Vec2) -> Self {
        Self { sx, sy }
    }

    /// `sigma(X), sigma(Y)` running over `(e1,0), (e2,0), (0,e1), (0,e2)`.
    pub fn basis() -> [RElement; 4] {
        [
            Self::new(Vec2::unit(0), Vec2::zero()),
            Self::new(Vec2::unit(1), Vec2::zero()),
            Self::new(Vec2::zero(), Vec2::unit(0)),
            Self::new(Vec2::zero(), Vec2::unit(1)),
        ]
    }

    pub fn random(rng: &mut SeedRng) -> Self {
        Self::new(Vec2::random(rng), Vec2::random(rng))
    }

    /// `sigma(H) = -2 (X sigma(Y) - Y sigma(X))` with `H = [X, Y]`.
    pub fn sigma_h(&self) -> Vec2 {
        let x = Mat2::unit(0, 1);
        let y = Mat2::unit(1, 0);
        x.apply(&self.sy).sub(&y.apply(&self.sx)).scale(&int(-2))
    }

    /// `sigma(aI + bH + cX + dY) = b sigma(H) + c sigma(X) + d sigma(Y)`.
    pub fn sigma(&self, m: &Mat2) -> Vec2 {
        let b = (&m.0[0][0] - &m.0[1][1]) / int(2);
        self.sigma_h()
            .scale(&b)
            .add(&self.sx.scale(&m.0[0][1]))
            .add(&self.sy.scale(&m.0[1][0]))
    }

    /// The traceless `sigma†(u*)` with `trace(Y sigma†(u*)) = -2 <sigma(Y), u*>`
    /// for traceless `Y`.
    pub fn sigma_dagger(&self, us: &Covec2) -> Mat2 {
        let p = -pairing(&self.sigma_h(), us);
        let t = int(-2) * pairing(&self.sx, us);
        let r = int(-2) * pairing(&self.sy, us);
        Mat2::new(p.clone(), r, t, -p)
    }

    /// `sigma(XY) = X^0 sigma(Y) + Y sigma(X)` on all basis pairs of `gl(U)`.
    pub fn satisfies_cocycle(&self) -> bool {
        let basis: Vec<Mat2> = (0..4).map(|k| Mat2::unit(k / 2, k % 2)).collect();
        basis.iter().all(|x| {
            basis.iter().all(|y| {
                self.sigma(&x.mul(y))
                    == mat_adj0(x).apply(&self.sigma(y)).add(&y.apply(&self.sigma(x)))
            })
        })
    }
}

/// `d_sigma(X, u, u*) = (-sigma†(u*), sigma(X), 0)`.
pub fn build_d_sigma(s: &RElement) -> LinMap {
    LinMap::from_fn(AlgebraKind::Octonion, |c| {
        let a = Octonion::from_coords(c);
        Octonion::new(s.sigma_dagger(&a.us).neg(), s.sigma(&a.x), Covec2::zero()).coords()
    })
}

/// `d_rho(X, u, u*) = (rho X - X rho, rho u, -rho^t u*)`.
pub fn build_d_rho(rho: &Mat2) -> LinMap {
    LinMap::from_fn(AlgebraKind::Octonion, |c| {
        let a = Octonion::from_coords(c);
        Octonion::new(
            rho.mul(&a.x).sub(&a.x.mul(rho)),
            rho.apply(&a.u),
            rho.transpose().apply_co(&a.us).neg(),
        )
        .coords()
    })
}

/// The rank-two derivation `(X, u, u*) -> (0, delta(u*), 0)` with
/// `delta(e1*) = e2`, `delta(e2*) = -e1`, the unique skew map `U* -> U` up to
/// scale. Its image is the null plane `U`.
pub fn build_d_delta() -> LinMap {
    LinMap::from_fn(AlgebraKind::Octonion, |c| {
        let a = Octonion::from_coords(c);
        let delta = Vec2::new(-a.us.0[1].clone(), a.us.0[0].clone());
        Octonion::new(Mat2::zero(), delta, Covec2::zero()).coords()
    })
}

/// The sextonion map `(X, u) -> (A X A^-1, A sigma(X) + A u)`: the radical
/// element `sigma` followed by the `GL(U)` element `A = rho1`.
pub fn aut_s_map(rho1: &Mat2, s: &RElement) -> Result<LinMap> {
    let inv = rho1.inverse()?;
    Ok(LinMap::from_fn(AlgebraKind::Sextonion, |c| {
        let a = Sextonion::from_coords(c);
        Sextonion::new(
            rho1.mul(&a.x).mul(&inv),
            rho1.apply(&s.sigma(&a.x).add(&a.u)),
        )
        .coords()
    }))
}

/// Whether [`aut_s_map`] is multiplicative on all sextonion basis pairs.
pub fn is_aut_s(rho1: &Mat2, s: &RElement) -> Result<bool> {
    Ok(is_automorphism(&aut_s_map(rho1, s)?))
}

/// `x(xy) = (xx)y` and `(yx)x = y(xx)` on every ordered basis pair.
pub fn is_alternative_on_basis(kind: AlgebraKind) -> bool {
    let n = kind.dim();
    let m = |a: &[Rational], b: &[Rational]| kind.mul_coords(a, b);
    (0..n).all(|i| {
        (0..n).all(|j| {
            let (x, y) = (kind.basis(i), kind.basis(j));
            let xx = m(&x, &x);
            m(&x, &m(&x, &y)) == m(&xx, &y) && m(&m(&y, &x), &x) == m(&y, &xx)
        })
    })
}

/// `q(e_i e_j) = q(e_i) q(e_j)` on every ordered basis pair.
pub fn is_composition_on_basis(kind: AlgebraKind) -> bool {
    let n = kind.dim();
    let norm = |c: &[Rational]| match kind {
        AlgebraKind::Sextonion => Sextonion::from_coords(c).norm(),
        AlgebraKind::Octonion => Octonion::from_coords(c).norm(),
    };
    (0..n).all(|i| {
        (0..n).all(|j| {
            let (x, y) = (kind.basis(i), kind.basis(j));
            norm(&kind.mul_coords(&x, &y)) == norm(&x) * norm(&y)
        })
    })
}

/// `q(d x, y) + q(x, d y) = 0` on every ordered basis pair.
pub fn is_norm_skew(d: &LinMap) -> bool {
    let oct = |c: Vec<Rational>| Octonion::from_coords(&c);
    (0..8).all(|i| {
        (0..8).all(|j| {
            let (x, y) = (Octonion::basis(i), Octonion::basis(j));
            let dx = oct(d.apply(&x.coords()));
            let dy = oct(d.apply(&y.coords()));
            (polar(&dx, &y) + polar(&x, &dy)).is_zero()
        })
    })
}
