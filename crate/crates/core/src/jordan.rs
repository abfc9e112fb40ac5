//! Hermitian 3x3 matrices over the quaternions, sextonions and octonions, the
//! Freudenthal-Zorn space `Z2 = C + J3 + J3 + C`, and the equations of the
//! sextonionic Lagrangian Grassmannian inside it.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::compalg::Octonion;
use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};
use crate::sample::{small_rational, SeedRng};
use crate::serial;

/// Which composition algebra the off-diagonal entries live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tag {
    H,
    S,
    O,
}

impl Tag {
    pub fn dim(self) -> usize {
        match self {
            Tag::H => 4,
            Tag::S => 6,
            Tag::O => 8,
        }
    }

    pub fn contains(self, o: &Octonion) -> bool {
        match self {
            Tag::H => o.in_quaternions(),
            Tag::S => o.in_sextonions(),
            Tag::O => true,
        }
    }
}

impl std::fmt::Display for Tag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Hermitian matrix
///
/// ```text
/// [ r1   c    b  ]
/// [ c̄    r2   a  ]
/// [ b̄    ā    r3 ]
/// ```
///
/// stored through its diagonal and the upper entries `a = x23`, `b = x13`,
/// `c = x12`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "J3AWire", into = "J3AWire")]
pub struct J3A {
    pub tag: Tag,
    pub diag: [Rational; 3],
    /// `[a, b, c]`
    pub off: [Octonion; 3],
}

#[derive(Serialize, Deserialize)]
struct J3AWire {
    tag: Tag,
    diag: Vec<String>,
    off: Vec<Vec<String>>,
}

impl From<J3A> for J3AWire {
    fn from(x: J3A) -> Self {
        let n = x.tag.dim();
        J3AWire {
            tag: x.tag,
            diag: serial::to_strings(&x.diag),
            off: x.off.iter().map(|o| serial::to_strings(&o.coords()[..n])).collect(),
        }
    }
}

impl TryFrom<J3AWire> for J3A {
    type Error = Error;

    fn try_from(w: J3AWire) -> Result<Self> {
        if w.diag.len() != 3 || w.off.len() != 3 {
            return Err(Error::Parse("J3A needs 3 diagonal and 3 off-diagonal entries".into()));
        }
        let d = serial::parse_all(&w.diag)?;
        let mut off = Vec::new();
        for o in &w.off {
            if o.len() != w.tag.dim() {
                return Err(Error::Parse(format!(
                    "tag {} entries need {} coordinates, got {}",
                    w.tag,
                    w.tag.dim(),
                    o.len()
                )));
            }
            off.push(Octonion::from_coords(&serial::parse_all(o)?));
        }
        let [a, b, c]: [Octonion; 3] = off.try_into().expect("length checked");
        J3A::new(w.tag, [d[0].clone(), d[1].clone(), d[2].clone()], [a, b, c])
    }
}

impl J3A {
    pub fn new(tag: Tag, diag: [Rational; 3], off: [Octonion; 3]) -> Result<Self> {
        if let Some(bad) = off.iter().find(|o| !tag.contains(o)) {
            return Err(Error::NotInSubalgebra(format!("{tag}: {bad:?}")));
        }
        Ok(Self { tag, diag, off })
    }

    pub fn zero(tag: Tag) -> Self {
        Self::diagonal(tag, [int(0), int(0), int(0)])
    }

    pub fn identity(tag: Tag) -> Self {
        Self::diagonal(tag, [int(1), int(1), int(1)])
    }

    pub fn diagonal(tag: Tag, diag: [Rational; 3]) -> Self {
        Self {
            tag,
            diag,
            off: [Octonion::zero(), Octonion::zero(), Octonion::zero()],
        }
    }

    pub fn random(rng: &mut SeedRng, tag: Tag) -> Self {
        let diag = [small_rational(rng), small_rational(rng), small_rational(rng)];
        let off = [
            Octonion::random(rng, tag.dim()),
            Octonion::random(rng, tag.dim()),
            Octonion::random(rng, tag.dim()),
        ];
        Self { tag, diag, off }
    }

    /// Entry `(i, j)` of the full matrix, zero-based.
    pub fn entry(&self, i: usize, j: usize) -> Octonion {
        let [a, b, c] = &self.off;
        match (i, j) {
            _ if i == j => Octonion::scalar(self.diag[i].clone()),
            (0, 1) => c.clone(),
            (0, 2) => b.clone(),
            (1, 2) => a.clone(),
            _ => self.entry(j, i).conj(),
        }
    }

    fn full(&self) -> [[Octonion; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.entry(i, j)))
    }

    /// Reads a Hermitian matrix back from its upper triangle.
    fn from_full(tag: Tag, m: &[[Octonion; 3]; 3]) -> Self {
        debug_assert!((0..3).all(|i| m[i][i].sub(&Octonion::scalar(m[i][i].re())).is_zero()));
        Self {
            tag,
            diag: std::array::from_fn(|i| m[i][i].re()),
            off: [m[1][2].clone(), m[0][2].clone(), m[0][1].clone()],
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            tag: self.tag,
            diag: std::array::from_fn(|i| &self.diag[i] + &o.diag[i]),
            off: std::array::from_fn(|i| self.off[i].add(&o.off[i])),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            tag: self.tag,
            diag: std::array::from_fn(|i| &self.diag[i] * c),
            off: std::array::from_fn(|i| self.off[i].scale(c)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(Zero::is_zero) && self.off.iter().all(Octonion::is_zero)
    }

    pub fn trace(&self) -> Rational {
        self.diag.iter().sum()
    }

    /// Same entries, viewed in a larger algebra.
    pub fn with_tag(&self, tag: Tag) -> Result<Self> {
        Self::new(tag, self.diag.clone(), self.off.clone())
    }

    /// Coordinates: the diagonal followed by the off-diagonal entries in the
    /// algebra's basis; `3 + 3 dim(A)` numbers.
    pub fn coords(&self) -> Vec<Rational> {
        let mut v = self.diag.to_vec();
        for o in &self.off {
            v.extend(o.coords().into_iter().take(self.tag.dim()));
        }
        v
    }
}

fn check_tags(x: &J3A, y: &J3A) -> Result<()> {
    if x.tag != y.tag {
        return Err(Error::TagMismatch(x.tag.to_string(), y.tag.to_string()));
    }
    Ok(())
}

fn mat_mul(x: &[[Octonion; 3]; 3], y: &[[Octonion; 3]; 3]) -> [[Octonion; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3).fold(Octonion::zero(), |acc, k| acc.add(&x[i][k].mul(&y[k][j])))
        })
    })
}

/// `x ∘ y = (xy + yx) / 2` with matrix products expanded entrywise.
pub fn jordan_mul(x: &J3A, y: &J3A) -> Result<J3A> {
    check_tags(x, y)?;
    let (fx, fy) = (x.full(), y.full());
    let (p, q) = (mat_mul(&fx, &fy), mat_mul(&fy, &fx));
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let sym: [[Octonion; 3]; 3] =
        std::array::from_fn(|i| std::array::from_fn(|j| p[i][j].add(&q[i][j]).scale(&half)));
    Ok(J3A::from_full(x.tag, &sym))
}

/// The trace form `T(x, y) = trace(x ∘ y)`.
pub fn trace_form(x: &J3A, y: &J3A) -> Result<Rational> {
    Ok(jordan_mul(x, y)?.trace())
}

/// Second invariant `S(x) = r1 r2 + r1 r3 + r2 r3 - q(a) - q(b) - q(c)`.
pub fn j3_second_invariant(x: &J3A) -> Rational {
    let [r1, r2, r3] = &x.diag;
    let [a, b, c] = &x.off;
    r1 * r2 + r1 * r3 + r2 * r3 - a.norm() - b.norm() - c.norm()
}

/// Cubic norm `r1 r2 r3 - r1 q(a) - r2 q(b) - r3 q(c) + 2 Re((c a) b̄)`.
///
/// The triple term is the real part of `x12 x23 x31`; see [`DetConvention`].
pub fn j3_det(x: &J3A) -> Rational {
    DetConvention::SELECTED.det(x)
}

/// `Q(x) = x∘x - T(x) x + S(x) I`, the quadratic adjoint of the cubic
/// Jordan algebra. Agrees with the gradient of [`j3_det`] under the trace form.
pub fn j3_cofactor(x: &J3A) -> J3A {
    let sq = jordan_mul(x, x).expect("same tag");
    sq.sub(&x.scale(&x.trace()))
        .add(&J3A::identity(x.tag).scale(&j3_second_invariant(x)))
}

/// `Q(x, w) = (Q(x + w) - Q(x) - Q(w)) / 2`.
pub fn j3_cofactor_polar(x: &J3A, w: &J3A) -> Result<J3A> {
    check_tags(x, w)?;
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    Ok(j3_cofactor(&x.add(w))
        .sub(&j3_cofactor(x))
        .sub(&j3_cofactor(w))
        .scale(&half))
}

/// One reading of the triple term `2 Re(p1 p2 p3)` of the cubic norm, where
/// `p` runs over `(c, a, b)` in the given order, each optionally conjugated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DetConvention {
    /// Indices into `[a, b, c]`.
    pub order: [usize; 3],
    pub conj: [bool; 3],
}

impl DetConvention {
    /// `2 Re((c a) b̄)`.
    pub const SELECTED: DetConvention = DetConvention {
        order: [2, 0, 1],
        conj: [false, false, true],
    };

    pub fn det(&self, x: &J3A) -> Rational {
        let [r1, r2, r3] = &x.diag;
        let [a, b, c] = &x.off;
        let pick = |k: usize| {
            let o = &x.off[self.order[k]];
            if self.conj[k] {
                o.conj()
            } else {
                o.clone()
            }
        };
        let triple = pick(0).mul(&pick(1)).mul(&pick(2)).re();
        r1 * r2 * r3 - r1 * a.norm() - r2 * b.norm() - r3 * c.norm() + int(2) * triple
    }

    /// The two cyclic orders of `(c, a, b)` with every conjugation pattern.
    pub fn candidates() -> Vec<DetConvention> {
        let mut out = Vec::new();
        for order in [[2, 0, 1], [2, 1, 0]] {
            for mask in 0..8u8 {
                out.push(DetConvention {
                    order,
                    conj: [mask & 1 != 0, mask & 2 != 0, mask & 4 != 0],
                });
            }
        }
        out
    }

    /// `x ∘ Q(x) = det(x) I` and `Q(Q(x)) = det(x) x` on every sample.
    pub fn satisfies_identities(&self, samples: &[J3A]) -> bool {
        samples.iter().all(|x| {
            let d = self.det(x);
            let q = j3_cofactor(x);
            jordan_mul(x, &q).unwrap() == J3A::identity(x.tag).scale(&d)
                && j3_cofactor(&q) == x.scale(&d)
        })
    }
}

/// Directional derivative of `det` at `x` along `w`, exact from the cubic
/// `f(t) = det(x + t w)` sampled at `t = 0, 1, 2, 3`.
pub fn det_derivative(x: &J3A, w: &J3A) -> Rational {
    let f = |t: i64| j3_det(&x.add(&w.scale(&int(t))));
    (int(-11) * f(0) + int(18) * f(1) - int(9) * f(2) + int(2) * f(3)) / int(6)
}

/// The Veronese map: diagonal `(q(x), q(y), q(z))`, entries
/// `x12 = x ȳ`, `x13 = x z̄`, `x23 = y z̄`.
pub fn nu2(tag: Tag, x: &Octonion, y: &Octonion, z: &Octonion) -> Result<J3A> {
    J3A::new(
        tag,
        [x.norm(), y.norm(), z.norm()],
        [y.mul(&z.conj()), x.mul(&z.conj()), x.mul(&y.conj())],
    )
}

/// An element `(s, x, y, t)` of `Z2(A)`, written as the matrix `[[s, x], [y, t]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Z2A {
    #[serde(with = "rational_str")]
    pub s: Rational,
    pub x: J3A,
    pub y: J3A,
    #[serde(with = "rational_str")]
    pub t: Rational,
}

mod rational_str {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        serial::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

impl Z2A {
    pub fn new(s: Rational, x: J3A, y: J3A, t: Rational) -> Result<Self> {
        check_tags(&x, &y)?;
        Ok(Self { s, x, y, t })
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            s: &self.s + &o.s,
            x: self.x.add(&o.x),
            y: self.y.add(&o.y),
            t: &self.t + &o.t,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            s: &self.s * c,
            x: self.x.scale(c),
            y: self.y.scale(c),
            t: &self.t * c,
        }
    }

    pub fn tag(&self) -> Tag {
        self.x.tag
    }

    /// `2 + 2 (3 + 3a)` coordinates.
    pub fn coords(&self) -> Vec<Rational> {
        let mut v = vec![self.s.clone()];
        v.extend(self.x.coords());
        v.extend(self.y.coords());
        v.push(self.t.clone());
        v
    }
}

/// `nu3(x) = (1, x, Q(x), det x)`.
pub fn nu3(x: &J3A) -> Z2A {
    Z2A {
        s: int(1),
        x: x.clone(),
        y: j3_cofactor(x),
        t: j3_det(x),
    }
}

/// `Q(x) = s y`, `Q(y) = t x` and `x ∘ y = s t I`.
pub fn gw_membership(m: &Z2A) -> bool {
    let st = &m.s * &m.t;
    j3_cofactor(&m.x) == m.y.scale(&m.s)
        && j3_cofactor(&m.y) == m.x.scale(&m.t)
        && jordan_mul(&m.x, &m.y).is_ok_and(|p| p == J3A::identity(m.tag()).scale(&st))
}

/// The translation
/// `(s, x + s w, y + 2 Q(x, w) + s Q(w), t + T(y, w) + T(x, Q(w)) + s det w)`.
pub fn t_w(m: &Z2A, w: &J3A) -> Result<Z2A> {
    check_tags(&m.x, w)?;
    let qw = j3_cofactor(w);
    Ok(Z2A {
        s: m.s.clone(),
        x: m.x.add(&w.scale(&m.s)),
        y: m
            .y
            .add(&j3_cofactor_polar(&m.x, w)?.scale(&int(2)))
            .add(&qw.scale(&m.s)),
        t: &m.t + trace_form(&m.y, w)? + trace_form(&m.x, &qw)? + &m.s * j3_det(w),
    })
}

/// How a point of `Z2(S)` sits on a secant of `G_ω(S^3, S^6)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SecantDecomposition {
    /// The point is `s nu3(a)`, on the variety itself: the degenerate secant
    /// with `λ = μ = s/2` and `a = b`.
    OnVariety { lambda: Rational, a: J3A },
    /// `m = λ nu3(a) + μ nu3(b)` with rational data.
    Split {
        lambda: Rational,
        mu: Rational,
        a: J3A,
        b: J3A,
    },
    /// `λ` and `μ` are the roots of `λ² - s λ + p = 0`, whose discriminant
    /// `s² - 4p` is not a rational square.
    IrrationalSplit { s: Rational, p: Rational, discriminant: Rational },
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Rational::new(rn, rd))
}

/// Finds the unique secant through `m`.
///
/// The point is first translated by `w = -x/s` to the form `(s, 0, y, t)`.
/// Then `λ + μ = s` and `(λ - μ)² / (λ μ) = s t² / det y`, so
/// `λ μ = s² det y / (4 det y + s t²)`, and
/// `a = ((μ - λ)/λ) Q(y)/(s t)`, `b = ((λ - μ)/μ) Q(y)/(s t)`, translated back.
pub fn secant_decompose(m: &Z2A) -> Result<SecantDecomposition> {
    if m.s.is_zero() {
        return Err(Error::AtInfinity);
    }
    let s = m.s.clone();
    let shift = m.x.scale(&(Rational::from_integer(1.into()) / &s));
    let moved = t_w(m, &shift.scale(&int(-1)))?;
    debug_assert!(moved.x.is_zero());
    let (y, t) = (&moved.y, &moved.t);
    if y.is_zero() && t.is_zero() {
        return Ok(SecantDecomposition::OnVariety {
            lambda: &s / int(2),
            a: shift,
        });
    }
    let dy = j3_det(y);
    if dy.is_zero() {
        return Err(Error::TangentialQuartic("det y = 0 after translation".into()));
    }
    if t.is_zero() {
        return Err(Error::TangentialQuartic("t = 0 after translation, λ = μ".into()));
    }
    let denom = int(4) * &dy + &s * t * t;
    if denom.is_zero() {
        return Err(Error::TangentialQuartic("4 det y + s t² = 0".into()));
    }
    let p = &s * &s * &dy / denom;
    let disc = &s * &s - int(4) * &p;
    let Some(root) = rational_sqrt(&disc) else {
        return Ok(SecantDecomposition::IrrationalSplit { s, p, discriminant: disc });
    };
    let lambda = (&s + &root) / int(2);
    let mu = (&s - &root) / int(2);
    let qy = j3_cofactor(y).scale(&(Rational::from_integer(1.into()) / (&s * t)));
    let a = qy.scale(&((&mu - &lambda) / &lambda)).add(&shift);
    let b = qy.scale(&((&lambda - &mu) / &mu)).add(&shift);
    let rebuilt = nu3(&a).scale(&lambda).add(&nu3(&b).scale(&mu));
    if rebuilt != *m {
        return Err(Error::Residue("secant reconstruction does not match".into()));
    }
    Ok(SecantDecomposition::Split { lambda, mu, a, b })
}

/// A point of `Λ²W ⊕ W*` for a six-dimensional `W`: Plücker coordinates
/// `omega_ij` (`i < j`, lexicographic) and a linear form `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaRep {
    #[serde(with = "rational_vec")]
    pub omega: Vec<Rational>,
    #[serde(with = "rational_vec")]
    pub h: Vec<Rational>,
}

mod rational_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        serial::to_strings(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        serial::parse_all(&v).map_err(serde::de::Error::custom)
    }
}

/// Position of `e_i ∧ e_j` (`i < j`, zero-based) in the Plücker order.
pub fn plucker_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < 6);
    (0..i).map(|k| 5 - k).sum::<usize>() + (j - i - 1)
}

impl LambdaRep {
    pub fn new(omega: Vec<Rational>, h: Vec<Rational>) -> Result<Self> {
        if omega.len() != 15 || h.len() != 6 {
            return Err(Error::Parse("LambdaRep needs 15 + 6 coordinates".into()));
        }
        Ok(Self { omega, h })
    }

    /// `omega_ij` for any `i, j`, antisymmetric.
    pub fn w(&self, i: usize, j: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.omega[plucker_index(i, j)].clone(),
            std::cmp::Ordering::Greater => -self.omega[plucker_index(j, i)].clone(),
            std::cmp::Ordering::Equal => int(0),
        }
    }

    /// The 15 coordinates of `ω ∧ ω / 2`:
    /// `ω_ij ω_kl - ω_ik ω_jl + ω_il ω_jk` for `i < j < k < l`.
    pub fn wedge_square(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    for l in k + 1..6 {
                        out.push(
                            self.w(i, j) * self.w(k, l) - self.w(i, k) * self.w(j, l)
                                + self.w(i, l) * self.w(j, k),
                        );
                    }
                }
            }
        }
        out
    }

    /// `(ι_h ω)_i = Σ_j h_j ω_ji`.
    pub fn contraction(&self) -> Vec<Rational> {
        (0..6)
            .map(|i| (0..6).map(|j| &self.h[j] * self.w(j, i)).sum())
            .collect()
    }
}

/// `ω ∧ ω = 0` and `ι_h ω = 0`: `ω` is a decomposable plane contained in the
/// hyperplane `ker h`. Pure `h` (`ω = 0`) is accepted.
pub fn sp2_membership(p: &LambdaRep) -> Result<bool> {
    if p.omega.iter().chain(&p.h).all(Zero::is_zero) {
        return Err(Error::ZeroInput);
    }
    Ok(p.wedge_square().iter().all(Zero::is_zero) && p.contraction().iter().all(Zero::is_zero))
}
