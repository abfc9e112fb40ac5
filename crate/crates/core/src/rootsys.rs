//! Root systems of the simple Lie algebras: positive roots, the Weyl
//! dimension formula, Freudenthal multiplicities and decomposition of
//! symmetric and exterior powers.
//!
//! Labels follow Bourbaki. Weights are integer vectors in the basis of
//! fundamental weights; roots are kept in the basis of simple roots.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{binom_int, rat, Rational};

/// Environment variable overriding the default degree bound.
pub const MAX_DEGREE_ENV: &str = "MAGICCHART_MAX_DEGREE";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ω_i` (one-based, as in Bourbaki).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i - 1] = 1;
        w
    }

    pub fn add(&self, o: &Self) -> Self {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated fundamental coordinates, e.g. `"0,1,0,0,0,0"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight coordinate {p:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// A possibly reducible module: highest weights with multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSpec(pub Vec<(Weight, u64)>);

impl ModuleSpec {
    pub fn irreducible(w: Weight) -> Self {
        ModuleSpec(vec![(w, 1)])
    }

    pub fn from_weights(ws: &[Weight]) -> Self {
        let mut m = ModuleSpec::default();
        for w in ws {
            m.push(w.clone(), 1);
        }
        m
    }

    /// Adds `mult` copies of `V(w)`, merging with an existing entry.
    pub fn push(&mut self, w: Weight, mult: u64) {
        if mult == 0 {
            return;
        }
        if let Some(e) = self.0.iter_mut().find(|(x, _)| *x == w) {
            e.1 += mult;
        } else {
            self.0.push((w, mult));
        }
    }

    pub fn extend(&mut self, o: &ModuleSpec) {
        for (w, m) in &o.0 {
            self.push(w.clone(), *m);
        }
    }

    pub fn dim(&self, rs: &RootSystem) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (w, m) in &self.0 {
            total += rs.weyl_dim(w)? * BigInt::from(*m);
        }
        Ok(total)
    }

    /// Sorted by weight, for order-independent comparison.
    pub fn normalized(&self) -> Vec<(Weight, u64)> {
        let mut v: BTreeMap<Weight, u64> = BTreeMap::new();
        for (w, m) in &self.0 {
            *v.entry(w.clone()).or_default() += m;
        }
        v.into_iter().filter(|(_, m)| *m > 0).collect()
    }

    pub fn same_as(&self, o: &ModuleSpec) -> bool {
        self.normalized() == o.normalized()
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .normalized()
            .iter()
            .map(|(w, m)| if *m == 1 { format!("[{w}]") } else { format!("{m}x[{w}]") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// Simple roots in an ambient Euclidean space.
    pub simple_roots: Vec<Vec<Rational>>,
    /// `cartan[i][j] = <α_i, α_j^∨> = 2(α_i, α_j)/(α_j, α_j)`; row `i` is
    /// `α_i` in fundamental-weight coordinates.
    pub cartan: Vec<Vec<i64>>,
    /// Integer multiple of the Gram matrix `(α_i, α_j)`.
    pub gram: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, by increasing height.
    pub positive_roots: Vec<Vec<i64>>,
    /// For each positive root `α`: its coroot `α^∨` in simple-coroot coordinates.
    coroots: Vec<Vec<i64>>,
}

fn ambient_simple_roots(family: Family, rank: usize) -> Vec<Vec<Rational>> {
    let r = |n: i64| rat(n, 1);
    let h = |n: i64| rat(n, 2);
    let unit_diff = |dim: usize, i: usize, j: usize| {
        let mut v = vec![r(0); dim];
        v[i] = r(1);
        v[j] = r(-1);
        v
    };
    match family {
        Family::A => (0..rank).map(|i| unit_diff(rank + 1, i, i + 1)).collect(),
        Family::B | Family::C | Family::D => {
            let n = rank;
            let mut roots: Vec<Vec<Rational>> = (0..n - 1).map(|i| unit_diff(n, i, i + 1)).collect();
            let mut last = vec![r(0); n];
            match family {
                Family::B => last[n - 1] = r(1),
                Family::C => last[n - 1] = r(2),
                _ => {
                    last[n - 2] = r(1);
                    last[n - 1] = r(1);
                }
            }
            roots.push(last);
            roots
        }
        Family::E => {
            let mut a1 = vec![h(-1); 8];
            a1[0] = h(1);
            a1[7] = h(1);
            let mut a2 = vec![r(0); 8];
            a2[0] = r(1);
            a2[1] = r(1);
            let mut roots = vec![a1, a2];
            for k in 0..6 {
                roots.push(unit_diff(8, k + 1, k));
            }
            roots.truncate(rank);
            roots
        }
        Family::F => vec![
            unit_diff(4, 1, 2),
            unit_diff(4, 2, 3),
            vec![r(0), r(0), r(0), r(1)],
            vec![h(1), h(-1), h(-1), h(-1)],
        ],
        Family::G => vec![vec![r(1), r(-1), r(0)], vec![r(-2), r(1), r(1)]],
    }
}

fn validate(family: Family, rank: usize) -> Result<()> {
    let ok = match family {
        Family::A | Family::B | Family::C => rank >= 1,
        Family::D => rank >= 3,
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
        Family::G => rank == 2,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidRootSystem(format!("{family:?}{rank}")))
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Builds the root system of the given type and rank.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    validate(family, rank)?;
    let simple = ambient_simple_roots(family, rank);
    let g: Vec<Vec<Rational>> = simple
        .iter()
        .map(|a| simple.iter().map(|b| dot(a, b)).collect())
        .collect();
    let lcm = g
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let gram: Vec<Vec<i64>> = g
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| i64::try_from((x * Rational::from_integer(lcm.clone())).to_integer()).unwrap())
                .collect()
        })
        .collect();
    let cartan: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
        .collect();
    let positive_roots = positive_roots(&cartan);
    let coroots = positive_roots
        .iter()
        .map(|n| {
            let len: i64 = (0..rank)
                .flat_map(|i| (0..rank).map(move |j| (i, j)))
                .map(|(i, j)| n[i] * n[j] * gram[i][j])
                .sum();
            (0..rank)
                .map(|i| {
                    let c = n[i] * gram[i][i];
                    debug_assert_eq!(c % len, 0);
                    c / len
                })
                .collect()
        })
        .collect();
    Ok(RootSystem {
        family,
        rank,
        simple_roots: simple,
        cartan,
        gram,
        positive_roots,
        coroots,
    })
}

/// Positive roots by root strings: `β + α_i` is a root iff `p - <β, α_i^∨> > 0`,
/// where `p` is how far `β - k α_i` stays a root.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut all: Vec<Vec<i64>> = simple.clone();
    let mut known: HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = simple;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

impl RootSystem {
    /// Parses `"A5"`, `"D6"`, `"E7"`, `"G2"` and so on.
    pub fn parse(name: &str) -> Result<Self> {
        let name = name.trim().replace('_', "");
        let bad = || Error::InvalidRootSystem(name.clone());
        let mut chars = name.chars();
        let family = match chars.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        build_root_system(family, rank)
    }

    pub fn name(&self) -> String {
        format!("{:?}{}", self.family, self.rank)
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn dim(&self) -> usize {
        self.rank + 2 * self.positive_roots.len()
    }

    /// A root given in simple-root coordinates, rewritten in weight coordinates.
    pub fn root_to_weight(&self, n: &[i64]) -> Weight {
        Weight(
            (0..self.rank)
                .map(|j| (0..self.rank).map(|i| n[i] * self.cartan[i][j]).sum())
                .collect(),
        )
    }

    pub fn highest_root(&self) -> Weight {
        let top = self
            .positive_roots
            .iter()
            .max_by_key(|n| n.iter().sum::<i64>())
            .expect("nonempty");
        self.root_to_weight(top)
    }

    /// The Weyl vector, all ones.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::WeightRank { got: w.rank(), rank: self.rank });
        }
        Ok(())
    }

    fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_rank(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
        Ok(())
    }

    /// `<λ, α^∨>` for the `k`-th positive root.
    fn coroot_pairing(&self, w: &[i64], k: usize) -> i64 {
        self.coroots[k].iter().zip(w).map(|(a, b)| a * b).sum()
    }

    /// `prod_{α>0} <λ+ρ, α^∨> / <ρ, α^∨>`.
    pub fn weyl_dim(&self, lam: &Weight) -> Result<BigInt> {
        self.check_dominant(lam)?;
        let shifted: Vec<i64> = lam.0.iter().map(|c| c + 1).collect();
        let ones = vec![1; self.rank];
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for k in 0..self.positive_roots.len() {
            num *= self.coroot_pairing(&shifted, k);
            den *= self.coroot_pairing(&ones, k);
        }
        let (q, r) = num.div_rem(&den);
        debug_assert!(r.is_zero());
        Ok(q)
    }

    /// `<λ, 2ρ^∨>`: strictly decreases along the dominance order.
    pub fn height_key(&self, w: &Weight) -> i64 {
        (0..self.positive_roots.len()).map(|k| self.coroot_pairing(&w.0, k)).sum()
    }

    /// `(μ, α_j)` up to the global scale of the Gram matrix is `μ_j d_j / 2`;
    /// this returns `2 (μ, α)` for `α` in simple coordinates, scaled.
    fn pair_root(&self, mu: &[i64], n: &[i64]) -> i64 {
        (0..self.rank).map(|j| n[j] * mu[j] * self.gram[j][j]).sum()
    }

    /// Moves a weight into the dominant chamber by simple reflections.
    pub fn dominant_rep(&self, w: &Weight) -> Weight {
        let mut w = w.clone();
        while let Some(i) = w.0.iter().position(|&c| c < 0) {
            let c = w.0[i];
            for j in 0..self.rank {
                w.0[j] -= c * self.cartan[i][j];
            }
        }
        w
    }

    /// The Weyl orbit of a weight.
    pub fn orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::from([w.clone()]);
        seen.insert(w.clone());
        let mut out = Vec::new();
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                let c = v.0[i];
                if c != 0 {
                    let r = Weight((0..self.rank).map(|j| v.0[j] - c * self.cartan[i][j]).collect());
                    if seen.insert(r.clone()) {
                        queue.push_back(r);
                    }
                }
            }
            out.push(v);
        }
        out
    }

    /// Dominant weights of `V(λ)`, each with `λ - μ` in simple-root coordinates.
    fn dominant_weights(&self, lam: &Weight) -> Vec<(Weight, Vec<i64>)> {
        let mut seen: HashMap<Weight, Vec<i64>> = HashMap::new();
        seen.insert(lam.clone(), vec![0; self.rank]);
        let mut queue = VecDeque::from([lam.clone()]);
        while let Some(mu) = queue.pop_front() {
            let depth = seen[&mu].clone();
            for n in &self.positive_roots {
                let a = self.root_to_weight(n);
                let next = Weight(mu.0.iter().zip(&a.0).map(|(x, y)| x - y).collect());
                if next.is_dominant() && !seen.contains_key(&next) {
                    let d: Vec<i64> = depth.iter().zip(n).map(|(x, y)| x + y).collect();
                    seen.insert(next.clone(), d);
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<(Weight, Vec<i64>)> = seen.into_iter().collect();
        out.sort_by_key(|(w, d)| (d.iter().sum::<i64>(), w.clone()));
        out
    }

    /// Multiplicities of the dominant weights of `V(λ)` by Freudenthal's formula.
    pub fn freudenthal_mults(&self, lam: &Weight) -> Result<BTreeMap<Weight, u64>> {
        self.check_dominant(lam)?;
        let doms = self.dominant_weights(lam);
        let depth_of: HashMap<Weight, Vec<i64>> = doms.iter().cloned().collect();
        let roots_w: Vec<Weight> = self.positive_roots.iter().map(|n| self.root_to_weight(n)).collect();
        let lr: Vec<i64> = lam.0.iter().map(|c| c + 1).collect();
        let mut mult: HashMap<Weight, i128> = HashMap::new();
        for (mu, c) in &doms {
            if mu == lam {
                mult.insert(mu.clone(), 1);
                continue;
            }
            // 2((λ+ρ,λ+ρ) - (μ+ρ,μ+ρ)) in Gram units
            let sum: Vec<i64> = (0..self.rank).map(|j| lr[j] + mu.0[j] + 1).collect();
            let lhs: i64 = (0..self.rank).map(|j| c[j] * self.gram[j][j] * sum[j]).sum();
            let mut rhs: i128 = 0;
            for (n, a) in self.positive_roots.iter().zip(&roots_w) {
                let mut k = 1;
                loop {
                    let up = Weight(mu.0.iter().zip(&a.0).map(|(x, y)| x + k * y).collect());
                    let rep = self.dominant_rep(&up);
                    let Some(m) = depth_of.get(&rep).and(mult.get(&rep)) else { break };
                    if *m == 0 {
                        break;
                    }
                    rhs += *m * i128::from(self.pair_root(&up.0, n));
                    k += 1;
                }
            }
            // m(μ) * lhs/2 = rhs/2 ... both sides carry the same factor
            let (q, r) = (2 * rhs).div_rem(&i128::from(lhs));
            debug_assert_eq!(r, 0, "Freudenthal recursion not integral at {mu}");
            mult.insert(mu.clone(), q);
        }
        Ok(mult
            .into_iter()
            .map(|(w, m)| (w, u64::try_from(m).expect("nonnegative multiplicity")))
            .collect())
    }

    /// All weights of `V(λ)` with multiplicity.
    pub fn weight_multiset(&self, lam: &Weight) -> Result<Vec<(Weight, u64)>> {
        let mut out = Vec::new();
        for (mu, m) in self.freudenthal_mults(lam)? {
            for w in self.orbit(&mu) {
                out.push((w, m));
            }
        }
        Ok(out)
    }

    /// `weyl_dim(Σ e_i λ_i)`.
    pub fn cartan_power_dim(&self, parts: &[Weight], exponents: &[u32]) -> Result<BigInt> {
        if parts.len() != exponents.len() {
            return Err(Error::Parse("parts and exponents differ in length".into()));
        }
        let mut w = Weight::zero(self.rank);
        for (p, &e) in parts.iter().zip(exponents) {
            self.check_rank(p)?;
            w = w.add(&p.scale(i64::from(e)));
        }
        self.weyl_dim(&w)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerKind {
    Sym,
    Alt,
}

impl FromStr for PowerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sym" => Ok(PowerKind::Sym),
            "alt" => Ok(PowerKind::Alt),
            _ => Err(Error::Parse(format!("unknown power kind {s:?}"))),
        }
    }
}

/// Size limits for [`power_decompose`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecompBounds {
    pub max_dim: usize,
    pub max_degree: u32,
}

impl Default for DecompBounds {
    fn default() -> Self {
        Self { max_dim: 64, max_degree: 3 }
    }
}

impl DecompBounds {
    /// Defaults, with the degree bound taken from `MAGICCHART_MAX_DEGREE` if set.
    pub fn from_env() -> Self {
        let mut b = Self::default();
        if let Some(d) = std::env::var(MAX_DEGREE_ENV).ok().and_then(|v| v.parse().ok()) {
            b.max_degree = d;
        }
        b
    }
}

/// Calls `f` on every size-`d` multiset (sym) or subset (alt) of `0..n`.
fn for_each_monomial(n: usize, d: usize, kind: PowerKind, f: &mut impl FnMut(&[usize])) {
    fn go(
        n: usize,
        d: usize,
        start: usize,
        kind: PowerKind,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if cur.len() == d {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            let next = if kind == PowerKind::Sym { i } else { i + 1 };
            go(n, d, next, kind, cur, f);
            cur.pop();
        }
    }
    go(n, d, 0, kind, &mut Vec::with_capacity(d), f);
}

/// Decomposes a character, given by its dominant part, into irreducibles by
/// repeatedly removing the character of the highest remaining weight.
pub fn decompose_dominant_character(
    rs: &RootSystem,
    mut chi: HashMap<Weight, i64>,
) -> Result<ModuleSpec> {
    let mut out = ModuleSpec::default();
    chi.retain(|_, m| *m != 0);
    while !chi.is_empty() {
        let top = chi
            .keys()
            .max_by(|a, b| rs.height_key(a).cmp(&rs.height_key(b)).then_with(|| a.cmp(b)))
            .cloned()
            .expect("nonempty");
        let m = chi[&top];
        if m < 0 {
            return Err(Error::Residue(format!("negative multiplicity {m} at [{top}]")));
        }
        for (w, k) in rs.freudenthal_mults(&top)? {
            let e = chi.entry(w.clone()).or_insert(0);
            *e -= m * i64::try_from(k).expect("small multiplicity");
            if *e < 0 {
                return Err(Error::Residue(format!("negative multiplicity {e} at [{w}]")));
            }
        }
        chi.retain(|_, m| *m != 0);
        out.push(top, m as u64);
    }
    Ok(out)
}

fn full_weights(rs: &RootSystem, m: &ModuleSpec) -> Result<Vec<(Vec<i64>, i64)>> {
    let mut out = Vec::new();
    for (w, mult) in &m.0 {
        rs.check_dominant(w)?;
        for (v, k) in rs.weight_multiset(w)? {
            out.push((v.0, (k * mult) as i64));
        }
    }
    Ok(out)
}

/// `m1 ⊗ m2` decomposed into irreducibles.
pub fn tensor_decompose(rs: &RootSystem, m1: &ModuleSpec, m2: &ModuleSpec) -> Result<ModuleSpec> {
    let a = full_weights(rs, m1)?;
    let b = full_weights(rs, m2)?;
    let mut chi: HashMap<Weight, i64> = HashMap::new();
    for (x, kx) in &a {
        for (y, ky) in &b {
            let s: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            if s.iter().all(|&c| c >= 0) {
                *chi.entry(Weight(s)).or_insert(0) += kx * ky;
            }
        }
    }
    let out = decompose_dominant_character(rs, chi)?;
    let expected = m1.dim(rs)? * m2.dim(rs)?;
    if out.dim(rs)? != expected {
        return Err(Error::Residue(format!("tensor product dimension differs from {expected}")));
    }
    Ok(out)
}

/// `S^d m` or `Λ^d m` decomposed into irreducibles.
pub fn power_decompose(
    rs: &RootSystem,
    m: &ModuleSpec,
    d: u32,
    kind: PowerKind,
    bounds: DecompBounds,
) -> Result<ModuleSpec> {
    let dim = m.dim(rs)?;
    if dim > BigInt::from(bounds.max_dim) {
        return Err(Error::BoundExceeded(format!("module dimension {dim} > {}", bounds.max_dim)));
    }
    if d > bounds.max_degree {
        return Err(Error::BoundExceeded(format!("degree {d} > {}", bounds.max_degree)));
    }
    let mut weights: Vec<Vec<i64>> = Vec::new();
    for (w, mult) in &m.0 {
        rs.check_dominant(w)?;
        for _ in 0..*mult {
            for (v, k) in rs.weight_multiset(w)? {
                for _ in 0..k {
                    weights.push(v.0.clone());
                }
            }
        }
    }
    let mut chi: HashMap<Weight, i64> = HashMap::new();
    let rank = rs.rank;
    let mut acc = vec![0i64; rank];
    for_each_monomial(weights.len(), d as usize, kind, &mut |idx| {
        acc.iter_mut().for_each(|a| *a = 0);
        for &i in idx {
            for (a, b) in acc.iter_mut().zip(&weights[i]) {
                *a += b;
            }
        }
        if acc.iter().all(|&c| c >= 0) {
            *chi.entry(Weight(acc.clone())).or_insert(0) += 1;
        }
    });
    let out = decompose_dominant_character(rs, chi)?;
    let n = weights.len() as u64;
    let expected = match kind {
        PowerKind::Sym => binom_int(n + u64::from(d) - 1, u64::from(d)),
        PowerKind::Alt => binom_int(n, u64::from(d)),
    };
    let got = out.dim(rs)?;
    if got != expected {
        return Err(Error::Residue(format!("dimension {got} differs from {expected}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::parse(name).unwrap()
    }

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn positive_root_counts() {
        let expected = [
            ("A1", 1), ("A2", 3), ("A5", 15), ("B3", 9), ("C3", 9), ("D4", 12),
            ("D6", 30), ("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6),
        ];
        for (name, n) in expected {
            assert_eq!(rs(name).num_positive_roots(), n, "{name}");
        }
        for n in 1..8 {
            assert_eq!(rs(&format!("A{n}")).num_positive_roots(), n * (n + 1) / 2);
            assert_eq!(rs(&format!("B{n}")).num_positive_roots(), n * n);
        }
    }

    #[test]
    fn invalid_types() {
        for bad in ["E5", "E9", "F3", "G3", "D2", "A0", "X3", "A"] {
            assert!(RootSystem::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn cartan_matches_bourbaki() {
        assert_eq!(rs("G2").cartan, vec![vec![2, -1], vec![-3, 2]]);
        // rows are simple roots in weight coordinates: the transpose of Bourbaki's a_ij
        assert_eq!(rs("B2").cartan, vec![vec![2, -2], vec![-1, 2]]);
        assert_eq!(rs("C2").cartan, vec![vec![2, -1], vec![-2, 2]]);
        let e8 = rs("E8");
        // α2 attaches to α4 only; α3 to α1 and α4
        assert_eq!(e8.cartan[1], vec![0, 2, 0, -1, 0, 0, 0, 0]);
        assert_eq!(e8.cartan[2], vec![-1, 0, 2, -1, 0, 0, 0, 0]);
        let f4 = rs("F4");
        assert_eq!(f4.cartan[1][2], -2);
        assert_eq!(f4.cartan[2][1], -1);
    }

    #[test]
    fn highest_roots() {
        let g2 = rs("G2");
        let top = g2.positive_roots.iter().max_by_key(|n| n.iter().sum::<i64>()).unwrap();
        assert_eq!(top, &vec![3, 2]);
        assert_eq!(g2.highest_root(), w("0,1"));
        assert_eq!(rs("E8").highest_root(), w("0,0,0,0,0,0,0,1"));
        assert_eq!(rs("E7").highest_root(), w("1,0,0,0,0,0,0"));
        assert_eq!(rs("E6").highest_root(), w("0,1,0,0,0,0"));
        assert_eq!(rs("D6").highest_root(), w("0,1,0,0,0,0"));
        assert_eq!(rs("C3").highest_root(), w("2,0,0"));
        assert_eq!(rs("A5").highest_root(), w("1,0,0,0,1"));
        assert_eq!(rs("F4").highest_root(), w("1,0,0,0"));
    }

    #[test]
    fn weyl_dim_examples() {
        for k in 0..10 {
            assert_eq!(rs("A1").weyl_dim(&Weight(vec![k])).unwrap(), BigInt::from(k + 1));
        }
        assert_eq!(rs("E7").weyl_dim(&w("0,0,0,0,0,0,1")).unwrap(), BigInt::from(56));
        assert_eq!(rs("D6").weyl_dim(&w("0,0,0,0,0,1")).unwrap(), BigInt::from(32));
        assert!(matches!(rs("A2").weyl_dim(&w("1,-1")), Err(Error::NotDominant(_))));
        assert!(matches!(rs("A2").weyl_dim(&w("1")), Err(Error::WeightRank { .. })));
        for name in ["A2", "B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(name);
            assert_eq!(r.weyl_dim(&r.highest_root()).unwrap(), BigInt::from(r.dim()), "{name}");
        }
        assert_eq!(rs("E8").dim(), 248);
        assert_eq!(rs("E7").weyl_dim(&w("1,0,0,0,0,0,1")).unwrap(), BigInt::from(6480));
    }

    #[test]
    fn freudenthal_examples() {
        let a2 = rs("A2");
        let m = a2.freudenthal_mults(&w("1,1")).unwrap();
        assert_eq!(m[&w("1,1")], 1);
        assert_eq!(m[&w("0,0")], 2);
        let d6 = rs("D6");
        let spin = d6.freudenthal_mults(&w("0,0,0,0,0,1")).unwrap();
        assert!(spin.values().all(|&k| k == 1));
        let all = d6.weight_multiset(&w("0,0,0,0,0,1")).unwrap();
        assert_eq!(all.len(), 32);
    }

    /// The 32 vectors `(±1/2, ..., ±1/2)` with an even number of minus signs
    /// are the weights of the half-spin module; compare with the orbit.
    #[test]
    fn half_spin_weights_match_explicit_vectors() {
        let d6 = rs("D6");
        let ambient: HashSet<Vec<Rational>> = d6
            .weight_multiset(&w("0,0,0,0,0,1"))
            .unwrap()
            .iter()
            .map(|(wt, _)| to_ambient(&d6, wt))
            .collect();
        let mut explicit = HashSet::new();
        for mask in 0u32..64 {
            if mask.count_ones() % 2 == 0 {
                explicit.insert((0..6).map(|i| if mask >> i & 1 == 1 { rat(-1, 2) } else { rat(1, 2) }).collect());
            }
        }
        assert_eq!(ambient, explicit);
    }

    /// Fundamental-weight coordinates to the ambient space: solve `<x, α_i^∨> = w_i`.
    fn to_ambient(r: &RootSystem, wt: &Weight) -> Vec<Rational> {
        let n = r.simple_roots[0].len();
        // the simple roots span the ambient space for D_n; use the dual basis
        let rows: Vec<Vec<Rational>> = r
            .simple_roots
            .iter()
            .map(|a| {
                let len = dot(a, a);
                a.iter().map(|x| x * rat(2, 1) / &len).collect()
            })
            .collect();
        solve(&rows, &wt.0.iter().map(|&c| rat(c, 1)).collect::<Vec<_>>(), n)
    }

    fn solve(rows: &[Vec<Rational>], rhs: &[Rational], n: usize) -> Vec<Rational> {
        let mut m: Vec<Vec<Rational>> = rows
            .iter()
            .zip(rhs)
            .map(|(r, b)| {
                let mut r = r.clone();
                r.push(b.clone());
                r
            })
            .collect();
        let mut piv = 0;
        let mut cols = Vec::new();
        for c in 0..n {
            let Some(p) = (piv..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(piv, p);
            let v = m[piv][c].clone();
            for x in m[piv].iter_mut() {
                *x = &*x / &v;
            }
            for i in 0..m.len() {
                if i != piv && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for k in 0..=n {
                        let t = &f * &m[piv][k];
                        m[i][k] -= t;
                    }
                }
            }
            cols.push(c);
            piv += 1;
        }
        let mut x = vec![rat(0, 1); n];
        for (i, &c) in cols.iter().enumerate() {
            x[c] = m[i][n].clone();
        }
        x
    }

    #[test]
    fn adjoint_zero_weight_is_the_rank() {
        for name in ["A2", "B3", "C3", "D4", "G2", "F4", "E6"] {
            let r = rs(name);
            let m = r.freudenthal_mults(&r.highest_root()).unwrap();
            assert_eq!(m[&Weight::zero(r.rank)], r.rank as u64, "{name}");
        }
    }

    #[test]
    fn freudenthal_total_matches_weyl() {
        let cases = [
            ("A2", "2,1"), ("B3", "1,0,1"), ("C3", "0,1,1"), ("D4", "1,0,1,1"),
            ("G2", "1,1"), ("F4", "0,0,0,1"), ("E6", "1,0,0,0,0,0"), ("E7", "0,0,0,0,0,0,1"),
            ("D6", "0,1,0,0,0,0"), ("A5", "0,1,0,0,1"), ("C3", "2,0,1"),
        ];
        for (name, lam) in cases {
            let r = rs(name);
            let total: u64 = r.weight_multiset(&w(lam)).unwrap().iter().map(|(_, k)| k).sum();
            assert_eq!(BigInt::from(total), r.weyl_dim(&w(lam)).unwrap(), "{name} {lam}");
        }
    }

    #[test]
    fn power_examples() {
        let b = DecompBounds::default();
        let a5 = rs("A5");
        let s2 = power_decompose(&a5, &ModuleSpec::irreducible(w("1,0,0,0,0")), 2, PowerKind::Sym, b).unwrap();
        assert!(s2.same_as(&ModuleSpec::irreducible(w("2,0,0,0,0"))));
        let v = ModuleSpec::from_weights(&[w("0,1,0,0,0"), w("0,0,0,0,1")]);
        let s2v = power_decompose(&a5, &v, 2, PowerKind::Sym, b).unwrap();
        assert_eq!(s2v.dim(&a5).unwrap(), BigInt::from(231));
        let c3 = rs("C3");
        let v = ModuleSpec::from_weights(&[w("0,1,0"), w("1,0,0")]);
        let l2 = power_decompose(&c3, &v, 2, PowerKind::Alt, b).unwrap();
        assert_eq!(l2.dim(&c3).unwrap(), BigInt::from(190));
        let s1 = power_decompose(&a5, &v_a5(), 1, PowerKind::Sym, b).unwrap();
        assert!(s1.same_as(&v_a5()));
    }

    fn v_a5() -> ModuleSpec {
        ModuleSpec::from_weights(&[w("0,1,0,0,0"), w("0,0,0,0,1")])
    }

    #[test]
    fn power_bounds() {
        let e7 = rs("E7");
        let adj = ModuleSpec::irreducible(e7.highest_root());
        assert!(matches!(
            power_decompose(&e7, &adj, 2, PowerKind::Sym, DecompBounds::default()),
            Err(Error::BoundExceeded(_))
        ));
        let a1 = rs("A1");
        let v = ModuleSpec::irreducible(w("1"));
        assert!(matches!(
            power_decompose(&a1, &v, 4, PowerKind::Sym, DecompBounds::default()),
            Err(Error::BoundExceeded(_))
        ));
        let wide = DecompBounds { max_dim: 64, max_degree: 6 };
        let s6 = power_decompose(&a1, &v, 6, PowerKind::Sym, wide).unwrap();
        assert!(s6.same_as(&ModuleSpec::irreducible(w("6"))));
    }

    #[test]
    fn vogel_decompositions_of_small_adjoints() {
        // S²g = V(2θ) + Y2* + C and Λ²g = g + X2 for sl3
        let a2 = rs("A2");
        let adj = ModuleSpec::irreducible(w("1,1"));
        let b = DecompBounds::default();
        let s2 = power_decompose(&a2, &adj, 2, PowerKind::Sym, b).unwrap();
        let expect = ModuleSpec::from_weights(&[w("2,2"), w("1,1"), w("0,0")]);
        assert!(s2.same_as(&expect), "{s2}");
        let l2 = power_decompose(&a2, &adj, 2, PowerKind::Alt, b).unwrap();
        let expect = ModuleSpec::from_weights(&[w("3,0"), w("0,3"), w("1,1")]);
        assert!(l2.same_as(&expect), "{l2}");
    }

    #[test]
    fn tensor_examples() {
        let a1 = rs("A1");
        let out = tensor_decompose(&a1, &ModuleSpec::irreducible(w("2")), &ModuleSpec::irreducible(w("3"))).unwrap();
        assert!(out.same_as(&ModuleSpec::from_weights(&[w("5"), w("3"), w("1")])));
        let a2 = rs("A2");
        let out = tensor_decompose(&a2, &ModuleSpec::irreducible(w("1,0")), &ModuleSpec::irreducible(w("0,1"))).unwrap();
        assert!(out.same_as(&ModuleSpec::from_weights(&[w("1,1"), w("0,0")])));
    }

    #[test]
    fn cartan_power_dim_examples() {
        let e7 = rs("E7");
        let parts = [w("1,0,0,0,0,0,0"), w("0,0,0,0,0,0,1")];
        assert_eq!(e7.cartan_power_dim(&parts, &[0, 0]).unwrap(), BigInt::one());
        assert_eq!(e7.cartan_power_dim(&parts, &[1, 1]).unwrap(), BigInt::from(6480));
        let d6 = rs("D6");
        let parts = [w("0,1,0,0,0,0"), w("0,0,0,0,1,0")];
        assert_eq!(d6.cartan_power_dim(&parts, &[0, 1]).unwrap(), BigInt::from(32));
        assert!(d6.cartan_power_dim(&parts, &[1]).is_err());
    }

    #[test]
    fn weight_text_format() {
        assert_eq!(w("0,1,0,0,0,0"), Weight(vec![0, 1, 0, 0, 0, 0]));
        assert_eq!(w("[1, 2]"), Weight(vec![1, 2]));
        assert_eq!(Weight(vec![3, 0, 1]).to_string(), "3,0,1");
        assert!("1,x".parse::<Weight>().is_err());
    }

    #[test]
    fn env_override_for_degree() {
        std::env::set_var(MAX_DEGREE_ENV, "5");
        assert_eq!(DecompBounds::from_env().max_degree, 5);
        std::env::remove_var(MAX_DEGREE_ENV);
        assert_eq!(DecompBounds::from_env(), DecompBounds::default());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn weyl_dim_is_symmetric_under_duality_for_a(a in 0i64..4, b in 0i64..4, c in 0i64..4) {
            let r = rs("A3");
            prop_assert_eq!(r.weyl_dim(&Weight(vec![a, b, c])).unwrap(), r.weyl_dim(&Weight(vec![c, b, a])).unwrap());
        }

        #[test]
        fn orbit_sum_of_multiplicities_is_weyl_dim(a in 0i64..3, b in 0i64..3) {
            for name in ["G2", "B2", "A2"] {
                let r = rs(name);
                let lam = Weight(vec![a, b]);
                let total: u64 = r.weight_multiset(&lam).unwrap().iter().map(|(_, k)| k).sum();
                prop_assert_eq!(BigInt::from(total), r.weyl_dim(&lam).unwrap());
            }
        }

        #[test]
        fn power_dimension_is_binomial(a in 0i64..2, b in 0i64..2, d in 1u32..=3) {
            let r = rs("A2");
            let m = ModuleSpec::from_weights(&[Weight(vec![a, b]), Weight(vec![1, 0])]);
            let n = m.dim(&r).unwrap();
            for kind in [PowerKind::Sym, PowerKind::Alt] {
                let out = power_decompose(&r, &m, d, kind, DecompBounds::default()).unwrap();
                let n64 = u64::try_from(n.clone()).unwrap();
                let expect = match kind {
                    PowerKind::Sym => binom_int(n64 + u64::from(d) - 1, u64::from(d)),
                    PowerKind::Alt => binom_int(n64, u64::from(d)),
                };
                prop_assert_eq!(out.dim(&r).unwrap(), expect);
            }
        }
    }
}
