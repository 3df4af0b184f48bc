//! Canonical renderings of small `R_{s,t}` stored under `tests/golden`.
//! Set `UPDATE_GOLDEN=1` to rewrite them; every stored polynomial must pass
//! the inversion checks before it is written.

use std::path::PathBuf;

use asmcalc::opwords::build_r_by_letters;
use asmcalc::symmetrize::{build_r, check_inversion_invariance, InversionMode};

const CASES: [(usize, usize); 8] = [(0, 2), (1, 1), (0, 3), (1, 2), (0, 4), (1, 3), (2, 2), (2, 3)];

fn path(s: usize, t: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/R_s{s}_t{t}.txt"))
}

#[test]
fn small_r_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (s, t) in CASES {
        let r = build_r(s, t).unwrap();
        assert_eq!(build_r_by_letters(s, t).unwrap(), r, "({s},{t})");
        for mode in [InversionMode::EachVariable, InversionMode::AllVariables] {
            assert!(check_inversion_invariance(&r, mode).passed(), "({s},{t}) {mode:?}");
        }
        let text = format!("{}\n", r.render());
        let file = path(s, t);
        if update {
            std::fs::write(&file, &text).unwrap();
        }
        let stored = std::fs::read_to_string(&file).unwrap_or_else(|e| panic!("{}: {e}", file.display()));
        assert_eq!(stored, text, "R({s},{t}) differs from {}", file.display());
    }
}
