//! Verification suites behind `magicchart verify`.

use magicchart::compalg::{
    assoc_form, build_d_delta, build_d_rho, build_d_sigma, is_alternative_on_basis, is_aut_s,
    is_composition_on_basis, is_derivation, is_norm_skew, select_conventions, AlgebraKind, Mat2,
    OctoConvention, Octonion, RElement,
};
use magicchart::dimform::{
    adjoint_dims, adjoint_table, e7_vdim, exc_gk, severi_vk, so12_vdim_4param, so12_vdim_w5w2,
    so12_vdim_w6w1, subexc_gk, subexc_v2k, subexc_vk,
};
use magicchart::exactnum::int;
use magicchart::intermediate::{
    chart_check, descriptor, intermediate_gk_dim, odd_symplectic_gk, row3_v2k_dim,
    row_plethysm_check, vogel_square_check, CheckRecord,
};
use magicchart::jordan::{
    gw_membership, j3_cofactor, j3_det, jordan_mul, nu3, secant_decompose, t_w, DetConvention,
    SecantDecomposition, Tag, J3A,
};
use magicchart::rootsys::{DecompBounds, RootSystem, Weight};
use magicchart::sample::{seeded, small_nonzero, SeedRng};
use magicchart::Error;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Compalg,
    Jordan,
    Dims,
    Decomp,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Compalg => "compalg",
            Suite::Jordan => "jordan",
            Suite::Dims => "dims",
            Suite::Decomp => "decomp",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub max_degree: u32,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn eq(&mut self, id: impl Into<String>, description: &str, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        self.0.push(Check {
            id: id.into(),
            description: description.into(),
            pass: expected == actual,
            expected,
            actual,
        });
    }

    fn holds(&mut self, id: impl Into<String>, description: &str, ok: bool) {
        self.eq(id, description, true, ok);
    }

    fn result<T: ToString>(&mut self, id: impl Into<String>, description: &str, expected: impl ToString, r: Result<T, Error>) {
        match r {
            Ok(v) => self.eq(id, description, expected, v),
            Err(e) => self.eq(id, description, expected, format!("error: {e}")),
        }
    }

    /// `label` names the whole batch when it fails to run; `prefix` is
    /// prepended to each record id.
    fn records(&mut self, label: &str, prefix: &str, description: &str, r: Result<Vec<CheckRecord>, Error>) {
        match r {
            Ok(recs) => {
                for rec in recs {
                    self.eq(format!("{prefix}.{}", rec.check_id), description, rec.rhs, rec.lhs);
                }
            }
            Err(e) => self.eq(label, description, "ok", format!("error: {e}")),
        }
    }
}

pub fn run(suite: Suite, seed: u64, max_degree: u32) -> VerifyReport {
    let mut c = Checks::default();
    let all = suite == Suite::All;
    if all || suite == Suite::Compalg {
        compalg(&mut c, &mut seeded(seed));
    }
    if all || suite == Suite::Jordan {
        jordan(&mut c, &mut seeded(seed));
    }
    if all || suite == Suite::Dims {
        dims(&mut c);
    }
    if all || suite == Suite::Decomp {
        decomp(&mut c, max_degree);
    }
    let mut checks = c.0;
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = checks.iter().filter(|x| x.pass).count();
    VerifyReport {
        suite: suite.name().into(),
        seed,
        max_degree,
        summary: Summary { total: checks.len(), passed, failed: checks.len() - passed },
        checks,
    }
}

fn compalg(c: &mut Checks, rng: &mut SeedRng) {
    for kind in [AlgebraKind::Sextonion, AlgebraKind::Octonion] {
        let k = format!("{kind:?}").to_lowercase();
        c.holds(format!("compalg.{k}.composition"), "q(xy) = q(x)q(y) on basis pairs", is_composition_on_basis(kind));
        c.holds(format!("compalg.{k}.alternative"), "alternative laws on basis pairs", is_alternative_on_basis(kind));
    }
    c.eq(
        "compalg.convention.unique",
        "product conventions passing the composition test",
        format!("{:?}", vec![OctoConvention::SELECTED]),
        format!("{:?}", select_conventions()),
    );
    for (i, s) in RElement::basis().iter().enumerate() {
        let d = build_d_sigma(s);
        c.holds(format!("compalg.d_sigma.{i}.derivation"), "d_sigma is a derivation", is_derivation(&d));
        c.holds(format!("compalg.d_sigma.{i}.skew"), "d_sigma preserves the norm", is_norm_skew(&d));
    }
    for k in 0..4 {
        let d = build_d_rho(&Mat2::unit(k / 2, k % 2));
        c.holds(format!("compalg.d_rho.{k}.derivation"), "d_rho is a derivation", is_derivation(&d));
    }
    let delta = build_d_delta();
    c.holds("compalg.d_delta.derivation", "d_delta is a derivation", is_derivation(&delta));
    c.eq("compalg.d_delta.rank", "rank of d_delta", 2, delta.rank());
    for n in 0..10 {
        let s = RElement::random(rng);
        c.holds(format!("compalg.random.{n}.cocycle"), "sigma satisfies the cocycle rule", s.satisfies_cocycle());
        c.holds(format!("compalg.random.{n}.d_sigma"), "random d_sigma is a derivation", is_derivation(&build_d_sigma(&s)));
        let a = Mat2::random(rng);
        if !a.det().is_zero() {
            c.result(format!("compalg.random.{n}.aut_s"), "twisted map is an automorphism of S", true, is_aut_s(&a, &s));
        }
        let im = |rng: &mut SeedRng| {
            let x = Octonion::random(rng, 8);
            x.sub(&Octonion::scalar(x.re()))
        };
        let (x, y, z) = (im(rng), im(rng), im(rng));
        let skew = assoc_form(&x, &y, &z).and_then(|p| Ok(p + assoc_form(&y, &x, &z)?));
        c.result(format!("compalg.random.{n}.phi_alternating"), "phi(x,y,z) + phi(y,x,z) = 0", 0, skew);
    }
}

fn jordan(c: &mut Checks, rng: &mut SeedRng) {
    let samples: Vec<J3A> = (0..5).map(|_| J3A::random(rng, Tag::O)).collect();
    c.holds(
        "jordan.det.selected",
        "selected determinant satisfies the adjoint identities",
        DetConvention::SELECTED.satisfies_identities(&samples),
    );
    for tag in [Tag::H, Tag::S, Tag::O] {
        let t = format!("{tag:?}");
        for n in 0..20 {
            let x = J3A::random(rng, tag);
            let (q, d) = (j3_cofactor(&x), j3_det(&x));
            c.holds(format!("jordan.{t}.{n:02}.qq"), "Q(Q(x)) = det(x) x", j3_cofactor(&q) == x.scale(&d));
            c.holds(
                format!("jordan.{t}.{n:02}.xq"),
                "x o Q(x) = det(x) I",
                jordan_mul(&x, &q).is_ok_and(|p| p == J3A::identity(tag).scale(&d)),
            );
        }
    }
    for n in 0..20 {
        let x = J3A::random(rng, Tag::S);
        let w = J3A::random(rng, Tag::S);
        let m = nu3(&x);
        c.holds(format!("jordan.gw.{n:02}.nu3"), "nu3(x) lies in G_w", gw_membership(&m));
        let moved = t_w(&m, &w);
        c.holds(
            format!("jordan.gw.{n:02}.translate"),
            "t_w(nu3(x)) = nu3(x + w)",
            moved.is_ok_and(|p| gw_membership(&p) && p == nu3(&x.add(&w))),
        );
    }
    let mut n = 0;
    for attempt in 0..40 {
        if n == 10 {
            break;
        }
        let (a, b) = (J3A::random(rng, Tag::S), J3A::random(rng, Tag::S));
        let (l, mu) = (small_nonzero(rng), small_nonzero(rng));
        if l == mu || (&l + &mu).is_zero() {
            continue;
        }
        let m = nu3(&a).scale(&l).add(&nu3(&b).scale(&mu));
        match secant_decompose(&m) {
            Ok(SecantDecomposition::Split { lambda, mu: m2, a: ra, b: rb }) => {
                let got = [(lambda, ra), (m2, rb)];
                let ok = got.contains(&(l, a)) && got.contains(&(mu, b));
                c.holds(format!("jordan.secant.{n:02}"), "secant decomposition recovers its input", ok);
                n += 1;
            }
            Err(Error::TangentialQuartic(_)) => {}
            other => {
                c.eq(format!("jordan.secant.attempt{attempt:02}"), "secant decomposition", "Split", format!("{other:?}"));
            }
        }
    }
    c.eq("jordan.secant.count", "rational secant cases found", 10, n);
}

fn fw(rank: usize, parts: &[(usize, i64)]) -> Weight {
    let mut w = Weight::zero(rank);
    for &(i, k) in parts {
        w.0[i - 1] += k;
    }
    w
}

fn weyl_sum(rs: &RootSystem, ws: impl IntoIterator<Item = Weight>) -> Result<BigInt, Error> {
    ws.into_iter().map(|w| rs.weyl_dim(&w)).sum()
}

fn dims(c: &mut Checks) {
    c.records("dims.chart", "dims", "chart entry matches dim_g(a,b)", chart_check());
    let (e7, d6, a5) = (
        RootSystem::parse("E7").expect("E7"),
        RootSystem::parse("D6").expect("D6"),
        RootSystem::parse("A5").expect("A5"),
    );
    for k in 0..=3i64 {
        let ku = k as u32;
        let pairs = |k: i64| (0..=k).flat_map(move |p| (0..=k - p).map(move |q| (p, q)));
        let want = weyl_sum(&e7, pairs(k).map(|(p, q)| fw(7, &[(1, p), (7, q)])));
        c.eq(format!("dims.exc_gk.6.{k}"), "exc_gk vs E7 Weyl sum", fmt(want), fmt(exc_gk(&int(6), ku)));
        let want = weyl_sum(&d6, pairs(k).map(|(i, j)| fw(6, &[(2, i), (5, j)])));
        c.eq(format!("dims.subexc_gk.6.{k}"), "subexc_gk vs D6 Weyl sum", fmt(want), fmt(subexc_gk(&int(6), ku)));
        let want = weyl_sum(&d6, (0..=k).map(|i| fw(6, &[(6, i), (1, k - i)])));
        c.eq(format!("dims.subexc_vk.6.{k}"), "subexc_vk vs D6 Weyl sum", fmt(want), fmt(subexc_vk(&int(6), ku)));
        c.eq(format!("dims.subexc_v2k.6.{k}"), "subexc_v2k vs four-parameter sum", fmt(row3_v2k_dim(ku)), fmt(subexc_v2k(&int(6), ku)));
        let want = weyl_sum(&a5, (0..=k).map(|i| fw(5, &[(2, i), (5, k - i)])));
        c.eq(format!("dims.severi_vk.6.{k}"), "severi_vk vs A5 Weyl sum", fmt(want), fmt(severi_vk(&int(6), ku)));
        let e7h = descriptor("E_7.H_{56}", None, None).expect("e7.5");
        c.eq(format!("dims.intermediate_gk.e7.{k}"), "intermediate Cartan powers", fmt(exc_gk(&int(6), ku)), fmt(intermediate_gk_dim(&e7h, ku)));
    }
    for i in 0..=2u64 {
        for j in 0..=2u64 {
            let (a, b) = (i as i64, j as i64);
            c.eq(format!("dims.e7_vdim.{i}.{j}"), "E7 polynomial vs Weyl", fmt(e7.weyl_dim(&fw(7, &[(1, a), (7, b)]))), fmt(e7_vdim(i, j)));
            c.eq(format!("dims.so12_w5w2.{i}.{j}"), "so12 polynomial vs Weyl at iω2+jω5", fmt(d6.weyl_dim(&fw(6, &[(2, a), (5, b)]))), fmt(so12_vdim_w5w2(i, j)));
            c.eq(format!("dims.so12_w6w1.{i}.{j}"), "so12 polynomial vs Weyl", fmt(d6.weyl_dim(&fw(6, &[(6, a), (1, b)]))), fmt(so12_vdim_w6w1(i, j)));
        }
    }
    for idx in 0..16u64 {
        let p: Vec<u64> = (0..4).map(|s| (idx >> s) & 1).collect();
        let w = fw(6, &[(4, p[0] as i64), (1, p[1] as i64), (6, p[1] as i64), (5, p[2] as i64), (2, p[3] as i64)]);
        c.eq(
            format!("dims.so12_4param.{}{}{}{}", p[0], p[1], p[2], p[3]),
            "so12 four-parameter polynomial vs Weyl",
            fmt(d6.weyl_dim(&w)),
            fmt(so12_vdim_4param(p[0], p[1], p[2], p[3])),
        );
    }
    for p in adjoint_table() {
        if let Ok((h, g, gb)) = adjoint_dims(p) {
            let top = 2 * i64::from(p.hcheck) - 3;
            c.eq(format!("dims.adjoint.{}", p.name), "adjoint variety dimension", top, gb);
            c.holds(format!("dims.adjoint.{}.order", p.name), "dim X_H < dim X_G < dim X_Gbar", h < g && g < gb);
        }
    }
    for n in 1..=4u64 {
        let rs = RootSystem::parse(&format!("C{n}")).expect("C_n");
        for k in 0..=3u64 {
            let want = weyl_sum(&rs, (0..=2 * k).map(|j| fw(n as usize, &[(1, j as i64)])));
            c.eq(format!("dims.odd_symplectic.{n}.{k}"), "odd symplectic Cartan powers", fmt(want), fmt(odd_symplectic_gk(n, k)));
        }
    }
}

fn decomp(c: &mut Checks, max_degree: u32) {
    let bounds = DecompBounds { max_degree: max_degree.max(DecompBounds::from_env().max_degree), ..DecompBounds::from_env() };
    for row in 1..=3 {
        // row 1 only has formulas for the square
        let top = if row == 1 { max_degree.min(2) } else { max_degree };
        for d in 1..=top {
            let r = row_plethysm_check(row, d, bounds);
            c.records(&format!("decomp.row{row}.d{d}"), "decomp", "row formula vs weight-multiset decomposition", r);
        }
    }
    for name in ["C_3.H_{14}", "A_5.H_{20}", "D_6.H_{32}", "E_7.H_{56}"] {
        let r = descriptor(name, None, None).and_then(|d| vogel_square_check(&d));
        c.records(&format!("decomp.{name}"), "decomp", "square dimension identities", r);
    }
}

fn fmt<T: ToString>(r: Result<T, Error>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}
