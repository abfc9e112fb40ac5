//! The chart renderings are byte-stable; set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;

use magicchart::intermediate::magic_chart;

fn check(file: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(file);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap();
    assert_eq!(actual, expected, "{file} differs from the golden copy");
}

#[test]
fn markdown() {
    check("chart.md", &magic_chart().unwrap().to_markdown());
}

#[test]
fn csv() {
    check("chart.csv", &magic_chart().unwrap().to_csv());
}

#[test]
fn json() {
    check("chart.json", &magic_chart().unwrap().to_json());
}
