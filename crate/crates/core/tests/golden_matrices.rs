use std::fs;
use std::path::PathBuf;

use hkq::matrices::StructuredMatrix;
use hkq::Integer;

fn golden(name: &str) -> Vec<Vec<Integer>> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let text = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(|v| v.parse().unwrap()).collect())
        .collect()
}

#[test]
fn t_and_n_match_golden_files() {
    for a in 1..=3 {
        assert_eq!(StructuredMatrix::<Integer>::T { a }.dense(), golden(&format!("T_{a}.txt")), "T_{a}");
        assert_eq!(StructuredMatrix::<Integer>::N { a }.dense(), golden(&format!("N_{a}.txt")), "N_{a}");
    }
}

#[test]
fn m2_at_five_matches_golden_file() {
    let m = StructuredMatrix::<Integer>::m(2, 5).unwrap();
    assert_eq!(m.dense(), golden("M_2_p5.txt"));
    assert_eq!(m.dense(), StructuredMatrix::<Integer>::T { a: 2 }.dense());
}

#[test]
fn m_matrices_have_corner_triangles_of_n() {
    // first row: a entries equal to n, then r, then zeros
    for p in [5usize, 7, 11, 13] {
        for n in 2..p {
            let (a, r) = (p / n, p % n);
            let row = &StructuredMatrix::<Integer>::m(n, p).unwrap().dense()[0];
            let mut want = vec![Integer::from(n); a];
            want.push(Integer::from(r));
            want.resize(p, Integer::from(0));
            assert_eq!(row, &want, "p={p} n={n}");
        }
    }
}
