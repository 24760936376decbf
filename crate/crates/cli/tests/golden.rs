//! Pins the text output of the worked examples. Set `UPDATE_GOLDEN=1` to
//! rewrite the files after an intentional change, then review the diff.

use std::path::PathBuf;
use std::process::Command;

const CASES: &[(&str, &[&str], i32)] = &[
    ("tpoly_3_1_q", &["tpoly", "--A", "3", "--B", "1", "--char", "0"], 0),
    ("tpoly_5_4_q", &["tpoly", "--A", "5", "--B", "4", "--char", "0"], 0),
    ("tpoly_4_1_f3", &["tpoly", "--A", "4", "--B", "1", "--char", "3"], 0),
    ("rpoly_3_1_q", &["rpoly", "--A", "3", "--B", "1"], 0),
    ("schur_210", &["schur", "--parts", "2,1,0"], 0),
    ("verify_fact_eq1_3_1", &["verify-fact", "--which", "eq1", "--p", "3", "--r", "1"], 0),
    ("verify_fact_eq1_2_2", &["verify-fact", "--which", "eq1", "--p", "2", "--r", "2"], 0),
    ("verify_fact_eq2_3_1", &["verify-fact", "--which", "eq2", "--p", "3", "--r", "1"], 0),
    ("factor_5_1_f4", &["factor", "--A", "5", "--B", "1", "--p", "2", "--r", "2"], 0),
    ("signature_5_2_f7", &["signature", "--A", "5", "--B", "2", "--char", "7"], 0),
    ("signature_7_4_f49", &["signature", "--A", "7", "--B", "4", "--char", "7", "--r", "2"], 0),
    ("degree_3_3_1", &["degree", "--p", "3", "--r", "3", "--s", "1", "--mode", "both"], 0),
    ("degree_2_4_2", &["degree", "--p", "2", "--r", "4", "--s", "2"], 0),
    ("counterexample_3", &["counterexample", "--p", "3", "--m", "1,4,28", "--mode", "both"], 0),
    ("counterexample_3_control", &["counterexample", "--p", "3", "--m", "10"], 1),
    ("counterexample_2", &["counterexample", "--p", "2", "--m", "1,5,17"], 0),
    ("counterexample_5", &["counterexample", "--p", "5", "--m", "6"], 0),
    ("counterexample_7", &["counterexample", "--p", "7", "--m", "8"], 0),
    ("sweep_eq1", &["sweep", "verify-fact", "--which", "eq1", "--p", "2,3,5", "--r", "1..2"], 0),
    ("sweep_degree_3", &["sweep", "degree", "--p", "3", "--r", "2..5"], 0),
    ("sweep_eisenstein", &["sweep", "eisenstein", "--p", "2,3,5,7", "--r", "1"], 0),
    ("identity_f7", &["identity", "--k-max", "6", "--char", "7", "--samples", "3", "--seed", "11"], 0),
];

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatches = Vec::new();
    for (name, args, code) in CASES {
        let out = Command::new(env!("CARGO_BIN_EXE_nschur"))
            .args(*args)
            .env_remove("NSCHUR_CEILING")
            .output()
            .expect("run nschur");
        assert_eq!(out.status.code(), Some(*code), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let got = String::from_utf8(out.stdout).unwrap();
        let path = golden_dir().join(format!("{name}.txt"));
        if update {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        if got != want {
            mismatches.push(format!("{name}:\n--- want\n{want}--- got\n{got}"));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}
