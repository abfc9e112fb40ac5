//! Degree-three plethysm checks, beyond the d ≤ 2 cases of the acceptance suite.

use magicchart::intermediate::{all_pass, row_plethysm_check, row_plethysm_check_with, GvRule};
use magicchart::rootsys::DecompBounds;

#[test]
fn row_two_cubic() {
    let report = row_plethysm_check(2, 3, DecompBounds::default()).unwrap();
    assert!(all_pass(&report), "{report:#?}");
    assert!(report.iter().any(|r| r.check_id == "row2.d3.sym.total" && r.rhs == "1771"));
}

/// With the printed gV list the cubic prediction misses 924 dimensions: the
/// computed S³V has ω₁-type summands of gV and no extra V_{ω₅}.
#[test]
fn row_three_cubic_printed_gv_disagrees() {
    let report = row_plethysm_check(3, 3, DecompBounds::default()).unwrap();
    let failed: Vec<(&str, &str, &str)> = report
        .iter()
        .filter(|r| !r.pass)
        .map(|r| (r.check_id.as_str(), r.lhs.as_str(), r.rhs.as_str()))
        .collect();
    assert_eq!(
        failed,
        vec![
            ("row3.d3.sym.total", "14256", "15180"),
            ("row3.d3.sym.[0,0,0,0,0,1]", "1", "2"),
            ("row3.d3.sym.[0,0,0,0,1,0]", "1", "0"),
            ("row3.d3.sym.[1,0,0,0,0,0]", "1", "2"),
            ("row3.d3.sym.[1,0,0,0,1,0]", "0", "1"),
            ("row3.d3.sym.[1,1,0,0,0,0]", "0", "1"),
        ]
    );
}

#[test]
fn row_three_cubic_with_cartan_gv_plus_omega3() {
    let report = row_plethysm_check_with(3, 3, DecompBounds::default(), GvRule::CartanPlusOmega3).unwrap();
    assert!(all_pass(&report), "{report:#?}");
}
