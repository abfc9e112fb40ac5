//! Intermediate Lie algebras: the expanded magic chart, Cartan powers of
//! graded algebras `h ⊕ V ⊕ C`, the odd symplectic case, square
//! decompositions and the row-by-row plethysm formulas.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::dimform::dim_g;
use crate::error::{Error, Result};
use crate::exactnum::{binom_int, expect_integer, int, matrix_rank, rat, Rational};
use crate::rootsys::{
    power_decompose, tensor_decompose, DecompBounds, ModuleSpec, PowerKind, RootSystem, Weight,
};

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        Self { check_id: id.into(), pass: lhs == rhs, lhs, rhs }
    }
}

pub fn all_pass(report: &[CheckRecord]) -> bool {
    report.iter().all(|c| c.pass)
}

/// The 𝔥-module structure of `h ⊕ V ⊕ C` when 𝔥 is simple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub h: String,
    /// Highest weight of the adjoint of 𝔥.
    pub h_weight: Weight,
    pub v: ModuleSpec,
    /// The summand `(hV)_Aad` of `h ⊗ V`, where known.
    pub aad: Option<ModuleSpec>,
}

/// An algebra of the chart, broken into its reductive part and Heisenberg radicals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgDescriptor {
    pub name: String,
    pub a: Option<Rational>,
    pub b: Option<Rational>,
    /// Simple factors, e.g. `["A1", "A1", "A1"]`.
    pub h_factors: Vec<String>,
    pub torus: u64,
    /// Dimensions of the symplectic modules `V` of each `H_{2n}`.
    pub heisenberg: Vec<u64>,
    pub center: u64,
    pub grading: Option<Grading>,
}

impl GradedAlgDescriptor {
    pub fn dim_h(&self) -> Result<u64> {
        let mut d = self.torus;
        for f in &self.h_factors {
            d += RootSystem::parse(f)?.dim() as u64;
        }
        Ok(d)
    }

    pub fn dim_v(&self) -> u64 {
        self.heisenberg.iter().sum()
    }

    pub fn total(&self) -> Result<u64> {
        Ok(self.dim_h()? + self.dim_v() + self.center)
    }
}

/// Splits a printed name such as `D_6.H_{32}.H_{44}` or `(3A_1).H_8`.
pub fn parse_algebra_name(name: &str) -> Result<(Vec<String>, u64, Vec<u64>)> {
    let bad = || Error::Parse(format!("unrecognised algebra name {name:?}"));
    let mut parts = name.split(".H_");
    let base = parts.next().ok_or_else(bad)?.trim_start_matches('(').trim_end_matches(')');
    let heis = parts
        .map(|p| p.trim_start_matches('{').trim_end_matches('}').parse::<u64>().map_err(|_| bad()))
        .collect::<Result<Vec<_>>>()?;
    let mut factors = Vec::new();
    let mut torus = 0;
    if base != "0" {
        let digits = base.chars().take_while(|c| c.is_ascii_digit()).count();
        let count: usize = if digits == 0 { 1 } else { base[..digits].parse().map_err(|_| bad())? };
        let rest = base[digits..].replace('_', "");
        if let Some(n) = rest.strip_prefix('T') {
            torus = n.parse::<u64>().map_err(|_| bad())? * count as u64;
        } else {
            RootSystem::parse(&rest)?;
            factors = vec![rest; count];
        }
    }
    Ok((factors, torus, heis))
}

fn w(c: &[i64]) -> Weight {
    Weight(c.to_vec())
}

/// Gradings of the intermediate algebras with simple 𝔥.
fn known_grading(name: &str) -> Option<Grading> {
    let g = |h: &str, hw: &[i64], v: &[i64], aad: Vec<Weight>| Grading {
        h: h.to_string(),
        h_weight: w(hw),
        v: ModuleSpec::irreducible(w(v)),
        aad: Some(ModuleSpec::from_weights(&aad)),
    };
    Some(match name {
        "A_1.H_4" => g("A1", &[2], &[3], vec![w(&[1])]),
        "C_3.H_{14}" => g("C3", &[2, 0, 0], &[0, 0, 1], vec![w(&[1, 1, 0])]),
        // the printed summand [1,1,0,0,0] together with its dual
        "A_5.H_{20}" => g(
            "A5",
            &[1, 0, 0, 0, 1],
            &[0, 0, 1, 0, 0],
            vec![w(&[1, 1, 0, 0, 0]), w(&[0, 0, 0, 1, 1])],
        ),
        "D_6.H_{32}" => g("D6", &[0, 1, 0, 0, 0, 0], &[0, 0, 0, 0, 0, 1], vec![w(&[1, 0, 0, 0, 1, 0])]),
        "E_7.H_{56}" => g("E7", &[1, 0, 0, 0, 0, 0, 0], &[0, 0, 0, 0, 0, 0, 1], vec![w(&[0, 1, 0, 0, 0, 0, 0])]),
        _ => return None,
    })
}

pub fn descriptor(name: &str, a: Option<Rational>, b: Option<Rational>) -> Result<GradedAlgDescriptor> {
    let (h_factors, torus, heisenberg) = parse_algebra_name(name)?;
    // each Heisenberg factor H_{2n} brings its own one-dimensional center
    let center = heisenberg.len() as u64;
    Ok(GradedAlgDescriptor {
        name: name.to_string(),
        a,
        b,
        h_factors,
        torus,
        heisenberg,
        center,
        grading: known_grading(name),
    })
}

/// `sp(2n+1) = sp(2n) ⊕ C^{2n} ⊕ C`.
pub fn odd_symplectic_descriptor(n: usize) -> Result<GradedAlgDescriptor> {
    let rs = RootSystem::parse(&format!("C{n}"))?;
    let name = format!("C_{n}.H_{{{}}}", 2 * n);
    let mut d = descriptor(&name, None, None)?;
    d.grading = Some(Grading {
        h: rs.name(),
        h_weight: Weight::fundamental(n, 1).scale(2),
        v: ModuleSpec::irreducible(Weight::fundamental(n, 1)),
        aad: None,
    });
    Ok(d)
}

/// Descriptor of 𝔢₇½ = 𝔢₇ ⊕ V_{ω₇} ⊕ C.
pub fn e7_half() -> GradedAlgDescriptor {
    descriptor("E_7.H_{56}", Some(int(6)), Some(int(8))).expect("valid")
}

/// Descriptor of D₆·H₃₂, the subexceptional algebra at a = 6.
pub fn d6_h32() -> GradedAlgDescriptor {
    descriptor("D_6.H_{32}", Some(int(6)), Some(int(4))).expect("valid")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartEntry {
    pub name: String,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartRow {
    pub b: String,
    pub entries: Vec<ChartEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagicChart {
    pub columns: Vec<String>,
    pub rows: Vec<ChartRow>,
    pub barton_sudbery: Vec<Vec<ChartEntry>>,
}

const CHART_A: [(i64, i64); 7] = [(-2, 3), (0, 1), (1, 1), (2, 1), (4, 1), (6, 1), (8, 1)];
const CHART_B: [i64; 5] = [1, 2, 4, 6, 8];

const CHART_NAMES: [[&str; 7]; 5] = [
    ["0", "0", "A_1", "A_2", "C_3", "C_3.H_{14}", "F_4"],
    ["0", "T_2", "A_2", "2A_2", "A_5", "A_5.H_{20}", "E_6"],
    ["A_1", "3A_1", "C_3", "A_5", "D_6", "D_6.H_{32}", "E_7"],
    ["A_1.H_4", "(3A_1).H_8", "C_3.H_{14}", "A_5.H_{20}", "D_6.H_{32}", "D_6.H_{32}.H_{44}", "E_7.H_{56}"],
    ["G_2", "D_4", "F_4", "E_6", "E_7", "E_7.H_{56}", "E_8"],
];

const BS_NAMES: [[&str; 3]; 5] = [
    ["0", "0", "0"],
    ["0", "T_1", "T_2"],
    ["A_1", "2A_1", "3A_1"],
    ["A_1.H_4", "2A_1.H_6", "3A_1.H_8"],
    ["G_2", "B_3", "D_4"],
];

/// Descriptors of the main chart, row by row.
pub fn chart_descriptors() -> Result<Vec<Vec<GradedAlgDescriptor>>> {
    CHART_NAMES
        .iter()
        .zip(CHART_B)
        .map(|(row, b)| {
            row.iter()
                .zip(CHART_A)
                .map(|(name, (n, d))| descriptor(name, Some(rat(n, d)), Some(int(b))))
                .collect()
        })
        .collect()
}

pub fn magic_chart() -> Result<MagicChart> {
    let entry = |d: &GradedAlgDescriptor| -> Result<ChartEntry> {
        Ok(ChartEntry { name: d.name.clone(), dim: d.total()? })
    };
    let rows = chart_descriptors()?
        .iter()
        .zip(CHART_B)
        .map(|(row, b)| {
            Ok(ChartRow { b: b.to_string(), entries: row.iter().map(entry).collect::<Result<_>>()? })
        })
        .collect::<Result<Vec<_>>>()?;
    let barton_sudbery = BS_NAMES
        .iter()
        .map(|row| row.iter().map(|n| entry(&descriptor(n, None, None)?)).collect())
        .collect::<Result<Vec<_>>>()?;
    Ok(MagicChart {
        columns: CHART_A.iter().map(|&(n, d)| rat(n, d).to_string()).collect(),
        rows,
        barton_sudbery,
    })
}

impl MagicChart {
    pub fn to_markdown(&self) -> String {
        let cell = |e: &ChartEntry| format!("{} ({})", e.name, e.dim);
        let mut out = String::from("## Expanded magic chart\n\n");
        out += &format!("| b \\ a | {} |\n", self.columns.join(" | "));
        out += &format!("|{}\n", "---|".repeat(self.columns.len() + 1));
        for row in &self.rows {
            let cells: Vec<String> = row.entries.iter().map(cell).collect();
            out += &format!("| {} | {} |\n", row.b, cells.join(" | "));
        }
        out += "\n## Barton-Sudbery table\n\n";
        out += "| b | | | |\n|---|---|---|---|\n";
        for (row, b) in self.barton_sudbery.iter().zip(&self.rows) {
            let cells: Vec<String> = row.iter().map(cell).collect();
            out += &format!("| {} | {} |\n", b.b, cells.join(" | "));
        }
        out
    }

    /// The main table: one line per row, name and dimension per column.
    pub fn to_csv(&self) -> String {
        let mut header = vec!["b".to_string()];
        for c in &self.columns {
            header.push(format!("name[a={c}]"));
            header.push(format!("dim[a={c}]"));
        }
        let mut out = header.join(",") + "\n";
        for row in &self.rows {
            let mut cells = vec![row.b.clone()];
            for e in &row.entries {
                cells.push(e.name.clone());
                cells.push(e.dim.to_string());
            }
            out += &(cells.join(",") + "\n");
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("chart serializes") + "\n"
    }
}

fn grading_of(desc: &GradedAlgDescriptor) -> Result<(&Grading, RootSystem)> {
    let g = desc
        .grading
        .as_ref()
        .ok_or_else(|| Error::Hypothesis(format!("{} has no grading with simple h", desc.name)))?;
    Ok((g, RootSystem::parse(&g.h)?))
}

/// `dim g^(k) = Σ_{p+q≤k} dim V_{p λ_h + q λ_V}` when the two highest weights
/// are independent.
pub fn intermediate_gk_dim(desc: &GradedAlgDescriptor, k: u32) -> Result<BigInt> {
    let (g, rs) = grading_of(desc)?;
    let [(lv, 1)] = g.v.0.as_slice() else {
        return Err(Error::Hypothesis(format!("V of {} is not irreducible", desc.name)));
    };
    let rows: Vec<Vec<Rational>> = [&g.h_weight, lv]
        .iter()
        .map(|x| x.0.iter().map(|&c| int(c)).collect())
        .collect();
    if matrix_rank(&rows) < 2 {
        return Err(Error::Hypothesis(format!(
            "highest weights of h and V are dependent for {}; use odd_symplectic_gk",
            desc.name
        )));
    }
    let mut total = BigInt::zero();
    for p in 0..=k {
        for q in 0..=(k - p) {
            let lam = g.h_weight.scale(i64::from(p)).add(&lv.scale(i64::from(q)));
            total += rs.weyl_dim(&lam)?;
        }
    }
    Ok(total)
}

/// `dim sp(2n+1)^(k) = dim S^{2k}(C^{2n} ⊕ C) = C(2n+2k, 2k)`.
pub fn odd_symplectic_gk(n: u64, k: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Inadmissible { formula: "odd_symplectic_gk".into(), param: "n".into(), value: "0".into() });
    }
    Ok(binom_int(2 * n + 2 * k, 2 * k))
}

fn sym2(n: u64) -> u64 {
    n * (n + 1) / 2
}

fn alt2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Dimension identities for `S²g` and `Λ²g` with `g = h ⊕ V ⊕ C`, and the
/// decomposition `h ⊗ V = hV ⊕ V ⊕ (hV)_Aad`.
pub fn vogel_square_check(desc: &GradedAlgDescriptor) -> Result<Vec<CheckRecord>> {
    let (g, rs) = grading_of(desc)?;
    let id = |s: &str| format!("{}.{s}", desc.name);
    let dh = rs.dim() as u64;
    let dv = g.v.dim(&rs)?.to_u64().expect("small");
    let dg = dh + dv + 1;
    let mut out = vec![
        CheckRecord::new(id("S2g"), sym2(dg), sym2(dh) + sym2(dv) + dh * dv + dh + dv + 1),
        CheckRecord::new(id("L2g"), alt2(dg), alt2(dh) + alt2(dv) + dh * dv + dh + dv),
        CheckRecord::new(id("S2g+L2g"), sym2(dg) + alt2(dg), dg * dg),
    ];
    let aad = g
        .aad
        .as_ref()
        .ok_or_else(|| Error::Hypothesis(format!("(hV)_Aad is not tabulated for {}", desc.name)))?;
    let [(lv, 1)] = g.v.0.as_slice() else {
        return Err(Error::Hypothesis(format!("V of {} is not irreducible", desc.name)));
    };
    let mut expected = ModuleSpec::irreducible(g.h_weight.add(lv));
    expected.extend(&g.v);
    expected.extend(aad);
    out.push(CheckRecord::new(id("dim(hxV)"), dh * dv, expected.dim(&rs)?));
    let actual = tensor_decompose(&rs, &ModuleSpec::irreducible(g.h_weight.clone()), &g.v)?;
    out.push(CheckRecord::new(id("hxV"), &expected, &actual));
    Ok(out)
}

/// A graded module written as its list of highest weights; the zero weight
/// stands for a trivial summand.
type Factor = Vec<Weight>;

/// All ways of distributing `e` among the constituents of `f`, each giving the
/// sum of the chosen highest weights.
fn factor_power(f: &Factor, e: u32, rank: usize) -> Vec<Weight> {
    fn go(f: &Factor, start: usize, left: u32, acc: Weight, out: &mut Vec<Weight>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..f.len() {
            go(f, i, left - 1, acc.add(&f[i]), out);
        }
    }
    let mut out = Vec::new();
    go(f, 0, e, Weight::zero(rank), &mut out);
    out
}

/// Mixed Cartan product `f1^(e1) f2^(e2) ...`.
fn mixed_product(terms: &[(&Factor, u32)], rank: usize) -> ModuleSpec {
    let mut acc = vec![Weight::zero(rank)];
    for (f, e) in terms {
        let pw = factor_power(f, *e, rank);
        acc = acc.iter().flat_map(|x| pw.iter().map(move |y| x.add(y))).collect();
    }
    let mut m = ModuleSpec::default();
    for x in acc {
        m.push(x, 1);
    }
    m
}

struct RowData {
    rs: RootSystem,
    v: Factor,
    v_star: Factor,
    g: Factor,
    v0: Factor,
    v2: Factor,
    /// Replacement for the product `gV` in row 3.
    gv: Option<Factor>,
}

fn fw(rank: usize, idx: &[usize]) -> Weight {
    let mut x = Weight::zero(rank);
    for &i in idx {
        x.0[i - 1] += 1;
    }
    x
}

fn row_data(row: u32) -> Result<RowData> {
    let rank = match row {
        1 => 3,
        2 => 5,
        3 => 6,
        _ => return Err(Error::Parse(format!("row must be 1, 2 or 3, got {row}"))),
    };
    let f = |i: &[&[usize]]| -> Factor { i.iter().map(|x| fw(rank, x)).collect() };
    Ok(match row {
        1 => RowData {
            rs: RootSystem::parse("C3")?,
            v: f(&[&[2], &[1]]),
            v_star: f(&[&[2], &[1]]),
            g: f(&[&[1, 1], &[3], &[]]),
            v0: f(&[&[], &[3]]),
            v2: f(&[&[1, 3], &[1, 2], &[1], &[2]]),
            gv: None,
        },
        2 => RowData {
            rs: RootSystem::parse("A5")?,
            v: f(&[&[2], &[5]]),
            v_star: f(&[&[4], &[1]]),
            g: f(&[&[1, 5], &[3], &[]]),
            v0: f(&[&[], &[3]]),
            v2: Vec::new(),
            gv: None,
        },
        _ => RowData {
            rs: RootSystem::parse("D6")?,
            v: f(&[&[6], &[1]]),
            v_star: f(&[&[6], &[1]]),
            g: f(&[&[2], &[5], &[]]),
            v0: f(&[&[], &[5]]),
            v2: f(&[&[4], &[1, 6], &[5], &[2]]),
            gv: Some(f(&[&[2, 6], &[5, 6], &[3], &[5]])),
        },
    })
}

/// The graded modules `V`, `g`, `V_2`, `V_0` of a row, as module specs.
pub fn row_modules(row: u32) -> Result<(RootSystem, ModuleSpec, ModuleSpec, ModuleSpec, ModuleSpec)> {
    let r = row_data(row)?;
    let m = |f: &Factor| ModuleSpec::from_weights(f);
    Ok((r.rs.clone(), m(&r.v), m(&r.g), m(&r.v2), m(&r.v0)))
}

/// How the product `gV` is read in row 3.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GvRule {
    /// `V_{ω₂+ω₆} ⊕ V_{ω₅+ω₆} ⊕ V_{ω₃} ⊕ V_{ω₅}` as printed.
    #[default]
    Printed,
    /// The mixed Cartan product `g^(1) V^(1)` with `V_{ω₃}` added.
    CartanPlusOmega3,
}

/// The right-hand side of the row's formula for `S^d V` (or `Λ^d V` in row 1).
pub fn row_prediction(row: u32, d: u32, kind: PowerKind) -> Result<ModuleSpec> {
    row_prediction_with(row, d, kind, GvRule::Printed)
}

pub fn row_prediction_with(row: u32, d: u32, kind: PowerKind, rule: GvRule) -> Result<ModuleSpec> {
    let r = row_data(row)?;
    let rank = r.rs.rank;
    let none = || Error::Hypothesis(format!("no formula for row {row}, degree {d}, {kind:?}"));
    if d == 1 {
        return Ok(ModuleSpec::from_weights(&r.v));
    }
    let mut out = ModuleSpec::default();
    match (row, kind) {
        (1, PowerKind::Sym) if d == 2 => {
            out.extend(&mixed_product(&[(&r.v, 2)], rank));
            out.extend(&ModuleSpec::from_weights(&r.v));
            out.extend(&ModuleSpec::from_weights(&r.v0));
        }
        (1, PowerKind::Alt) if d == 2 => {
            out.extend(&ModuleSpec::from_weights(&r.g));
            out.extend(&ModuleSpec::from_weights(&r.v2));
        }
        (2, PowerKind::Sym) => {
            for i in 0..=d {
                for j in 0..=(d - i) / 2 {
                    let rest = d - i - 2 * j;
                    if rest % 3 == 0 {
                        let k = rest / 3;
                        out.extend(&mixed_product(&[(&r.v, i), (&r.v_star, j), (&r.v0, k)], rank));
                    }
                }
            }
        }
        (3, PowerKind::Sym) => {
            // i + 2j + 3k + 4l + 4m = d with V^(i+k) g^(j) V0^(l) V2^(m)
            for i in 0..=d {
                for j in 0..=d / 2 {
                    for k in 0..=d / 3 {
                        for l in 0..=d / 4 {
                            for m in 0..=d / 4 {
                                if i + 2 * j + 3 * k + 4 * l + 4 * m != d {
                                    continue;
                                }
                                let p = i + k;
                                let term = if p >= 1 && j >= 1 {
                                    if p > 1 || j > 1 {
                                        return Err(Error::Hypothesis(format!(
                                            "product V^({p}) g^({j}) is not specified"
                                        )));
                                    }
                                    let gv = match rule {
                                        GvRule::Printed => r.gv.clone().expect("row 3"),
                                        GvRule::CartanPlusOmega3 => {
                                            let mut x = mixed_product(&[(&r.g, 1), (&r.v, 1)], rank)
                                                .0
                                                .into_iter()
                                                .map(|(w, _)| w)
                                                .collect::<Factor>();
                                            x.push(fw(rank, &[3]));
                                            x
                                        }
                                    };
                                    mixed_product(&[(&gv, 1), (&r.v0, l), (&r.v2, m)], rank)
                                } else {
                                    mixed_product(&[(&r.v, p), (&r.g, j), (&r.v0, l), (&r.v2, m)], rank)
                                };
                                out.extend(&term);
                            }
                        }
                    }
                }
            }
        }
        _ => return Err(none()),
    }
    Ok(out)
}

/// Compares `S^d V` (and `Λ^d V` where a formula exists) computed by weight
/// multisets against the row's formula, constituent by constituent.
pub fn row_plethysm_check(row: u32, d: u32, bounds: DecompBounds) -> Result<Vec<CheckRecord>> {
    row_plethysm_check_with(row, d, bounds, GvRule::Printed)
}

pub fn row_plethysm_check_with(
    row: u32,
    d: u32,
    bounds: DecompBounds,
    rule: GvRule,
) -> Result<Vec<CheckRecord>> {
    if d == 0 || d > bounds.max_degree {
        return Err(Error::BoundExceeded(format!("degree {d} outside 1..={}", bounds.max_degree)));
    }
    let r = row_data(row)?;
    let v = ModuleSpec::from_weights(&r.v);
    let n = v.dim(&r.rs)?.to_u64().expect("small");
    let mut kinds = vec![PowerKind::Sym];
    if row == 1 && d <= 2 {
        kinds.push(PowerKind::Alt);
    }
    let mut out = Vec::new();
    for kind in kinds {
        let tag = format!("row{row}.d{d}.{}", if kind == PowerKind::Sym { "sym" } else { "alt" });
        let predicted = row_prediction_with(row, d, kind, rule)?;
        let actual = power_decompose(&r.rs, &v, d, kind, bounds)?;
        let expected_total = match kind {
            PowerKind::Sym => binom_int(n + u64::from(d) - 1, u64::from(d)),
            PowerKind::Alt => binom_int(n, u64::from(d)),
        };
        out.push(CheckRecord::new(format!("{tag}.total"), predicted.dim(&r.rs)?, expected_total));
        let p = predicted.normalized();
        let a = actual.normalized();
        let mut keys: Vec<&Weight> = p.iter().chain(&a).map(|(w, _)| w).collect();
        keys.sort();
        keys.dedup();
        let get = |v: &[(Weight, u64)], k: &Weight| v.iter().find(|(w, _)| w == k).map_or(0, |(_, m)| *m);
        for k in keys {
            out.push(CheckRecord::new(format!("{tag}.[{k}]"), get(&p, k), get(&a, k)));
        }
    }
    Ok(out)
}

/// `dim V_2^(k)` for row 3 as the sum over `a+b+c+d = k` of
/// `dim V_{aω₄+b(ω₁+ω₆)+cω₅+dω₂}`.
pub fn row3_v2k_dim(k: u32) -> Result<BigInt> {
    let r = row_data(3)?;
    mixed_product(&[(&r.v2, k)], r.rs.rank).dim(&r.rs)
}

/// `dim V^(k)` of the row's distinguished module by the mixed Cartan rule.
pub fn row_vk_dim(row: u32, k: u32) -> Result<BigInt> {
    let r = row_data(row)?;
    mixed_product(&[(&r.v, k)], r.rs.rank).dim(&r.rs)
}

/// Checks every main-chart entry against `dim_g(a, b)` and the symplectic
/// parity of each Heisenberg module.
pub fn chart_check() -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for row in chart_descriptors()? {
        for d in row {
            let (a, b) = (d.a.clone().expect("chart"), d.b.clone().expect("chart"));
            let formula = expect_integer(&dim_g(&a, &b)?, "dim_g")?;
            out.push(CheckRecord::new(format!("chart.{}.a={a}.b={b}", d.name), d.total()?, formula));
            for h in &d.heisenberg {
                out.push(CheckRecord::new(format!("chart.{}.H{h}.even", d.name), h % 2, 0));
            }
        }
    }
    Ok(out)
}

/// Sum of a list of big integers; used by reports.
pub fn big_sum<I: IntoIterator<Item = BigInt>>(it: I) -> BigInt {
    it.into_iter().fold(BigInt::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dimform::{exc_gk, subexc_gk, subexc_v2k, subexc_vk, severi_vk};
    use proptest::prelude::*;

    #[test]
    fn name_parsing() {
        assert_eq!(parse_algebra_name("0").unwrap(), (vec![], 0, vec![]));
        assert_eq!(parse_algebra_name("T_2").unwrap(), (vec![], 2, vec![]));
        assert_eq!(
            parse_algebra_name("(3A_1).H_8").unwrap(),
            (vec!["A1".to_string(); 3], 0, vec![8])
        );
        assert_eq!(
            parse_algebra_name("D_6.H_{32}.H_{44}").unwrap(),
            (vec!["D6".to_string()], 0, vec![32, 44])
        );
        assert!(parse_algebra_name("Q_3").is_err());
    }

    #[test]
    fn chart_entries() {
        let c = magic_chart().unwrap();
        assert_eq!(c.rows[4].entries[6], ChartEntry { name: "E_8".into(), dim: 248 });
        assert_eq!(c.rows[3].entries[5].name, "D_6.H_{32}.H_{44}");
        assert_eq!(c.rows[3].entries[5].dim, 144);
        assert_eq!(c.barton_sudbery[3][2].name, "3A_1.H_8");
        assert_eq!(c.barton_sudbery[4][1], ChartEntry { name: "B_3".into(), dim: 21 });
    }

    #[test]
    fn chart_matches_formula() {
        let report = chart_check().unwrap();
        assert_eq!(report.len(), 35 + 12);
        for r in &report {
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn csv_and_markdown_shape() {
        let c = magic_chart().unwrap();
        assert_eq!(c.to_csv().lines().count(), 6);
        assert!(c.to_markdown().contains("| 8 | G_2 (14) |"));
        assert!(c.to_json().contains(r#"{"name":"E_8","dim":248}"#));
    }

    #[test]
    fn cartan_powers_of_e7_half() {
        let d = e7_half();
        assert_eq!(intermediate_gk_dim(&d, 1).unwrap(), BigInt::from(190));
        assert_eq!(intermediate_gk_dim(&d, 2).unwrap(), BigInt::from(15504));
        for k in 0..=3 {
            assert_eq!(intermediate_gk_dim(&d, k).unwrap(), exc_gk(&int(6), k).unwrap());
        }
    }

    #[test]
    fn cartan_powers_of_d6_h32() {
        let d = d6_h32();
        for k in 0..=4 {
            assert_eq!(intermediate_gk_dim(&d, k).unwrap(), subexc_gk(&int(6), k).unwrap());
        }
    }

    #[test]
    fn dependent_weights_are_rejected() {
        assert!(matches!(intermediate_gk_dim(&odd_symplectic_descriptor(3).unwrap(), 1), Err(Error::Hypothesis(_))));
        let a1 = descriptor("A_1.H_4", None, None).unwrap();
        assert!(matches!(intermediate_gk_dim(&a1, 1), Err(Error::Hypothesis(_))));
        let prod = descriptor("(3A_1).H_8", None, None).unwrap();
        assert!(matches!(intermediate_gk_dim(&prod, 1), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn odd_symplectic_examples() {
        assert_eq!(odd_symplectic_gk(4, 0).unwrap(), BigInt::from(1));
        assert_eq!(odd_symplectic_gk(2, 1).unwrap(), BigInt::from(15));
        assert_eq!(odd_symplectic_gk(3, 2).unwrap(), BigInt::from(210));
        for n in 1..=4u64 {
            let rs = RootSystem::parse(&format!("C{n}")).unwrap();
            for k in 0..=3u64 {
                let sum = big_sum((0..=2 * k).map(|j| rs.weyl_dim(&Weight::fundamental(n as usize, 1).scale(j as i64)).unwrap()));
                assert_eq!(odd_symplectic_gk(n, k).unwrap(), sum, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn square_checks() {
        for name in ["A_1.H_4", "C_3.H_{14}", "A_5.H_{20}", "D_6.H_{32}", "E_7.H_{56}"] {
            let d = descriptor(name, None, None).unwrap();
            for r in vogel_square_check(&d).unwrap() {
                assert!(r.pass, "{r:?}");
            }
        }
    }

    #[test]
    fn c3_tensor_dimensions() {
        let rs = RootSystem::parse("C3").unwrap();
        let hv = rs.weyl_dim(&w(&[2, 0, 1])).unwrap();
        let aad = rs.weyl_dim(&w(&[1, 1, 0])).unwrap();
        assert_eq!(hv + 14 + aad, BigInt::from(294));
    }

    #[test]
    fn row_one_degree_two() {
        let report = row_plethysm_check(1, 2, DecompBounds::default()).unwrap();
        assert!(all_pass(&report), "{report:#?}");
        let totals: Vec<_> = report.iter().filter(|r| r.check_id.ends_with("total")).map(|r| r.rhs.clone()).collect();
        assert_eq!(totals, vec!["210", "190"]);
    }

    #[test]
    fn rows_two_and_three() {
        for (row, d) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
            let report = row_plethysm_check(row, d, DecompBounds::default()).unwrap();
            assert!(all_pass(&report), "row {row} d {d}: {report:#?}");
        }
        let r2 = row_plethysm_check(2, 2, DecompBounds::default()).unwrap();
        assert!(r2.iter().any(|r| r.check_id == "row2.d2.sym.total" && r.lhs == "231"));
    }

    #[test]
    fn series_modules_by_the_mixed_rule() {
        for k in 0..=4 {
            assert_eq!(row_vk_dim(3, k).unwrap(), subexc_vk(&int(6), k).unwrap());
            assert_eq!(row_vk_dim(2, k).unwrap(), severi_vk(&int(6), k).unwrap());
        }
        for k in 0..=3 {
            assert_eq!(row3_v2k_dim(k).unwrap(), subexc_v2k(&int(6), k).unwrap(), "k={k}");
        }
    }

    #[test]
    fn degree_out_of_bounds() {
        assert!(matches!(row_plethysm_check(1, 4, DecompBounds::default()), Err(Error::BoundExceeded(_))));
        assert!(matches!(row_prediction(1, 3, PowerKind::Sym), Err(Error::Hypothesis(_))));
        assert!(row_plethysm_check(4, 1, DecompBounds::default()).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn odd_symplectic_is_a_binomial(n in 1u64..6, k in 0u64..6) {
            let lhs = odd_symplectic_gk(n, k).unwrap();
            let rhs = big_sum((0..=2 * k).map(|j| binom_int(2 * n - 1 + j, j)));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
