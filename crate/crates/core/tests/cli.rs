use std::process::Command;

use serde_json::Value;

fn casimir(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_casimir-sc")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn sphere_energy_json_defaults() {
    let (code, out, _) = casimir(&["sphere-energy"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let total = v["total"].as_f64().unwrap();
    assert!((total - 0.04668).abs() <= 5e-5, "{total}");
    assert!((v["diameter_sum"].as_f64().unwrap() - std::f64::consts::PI.powi(3) / 1440.0).abs() < 1e-10);
    assert!(v["generic_sum"].is_number());
    assert!(v["tail_error"].is_number());
    assert_eq!(v["units"], "hbar*c/R");
}

#[test]
fn nine_significant_digits() {
    let (_, out, _) = casimir(&["sphere-energy"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let total = v["total"].to_string();
    let digits = total.trim_start_matches(['-', '0', '.']).chars().filter(char::is_ascii_digit).count();
    assert!(digits <= 9, "{total}");
}

#[test]
fn cylinder_variants() {
    let get = |variant: &str| {
        let (code, out, _) = casimir(&["cylinder-energy", "--variant", variant]);
        assert_eq!(code, 0);
        serde_json::from_str::<Value>(&out).unwrap()["total"].as_f64().unwrap()
    };
    assert!((get("quadratic") + 0.013_594_358).abs() < 1e-8);
    assert!((get("expfit") + 0.013_533).abs() < 1e-5);
    assert_eq!(get("unbounded"), 0.0);
}

#[test]
fn orbit_table_csv() {
    let (code, out, _) = casimir(&["orbit-table", "--n-max", "4"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "n,w,z_bar,length_over_R,maslov_D,maslov_N,em_contributes");
    let rows: Vec<_> = lines.collect();
    assert_eq!(rows.len(), 4); // (2,1) (3,1) (4,1) (4,2)
    assert!(rows[0].starts_with("2,1,"));
    assert!(rows.iter().any(|r| r.starts_with("4,2,") && r.contains(",8,")));
}

#[test]
fn wkb_zeros_flags_neumann_origin() {
    let (code, out, _) = casimir(&["wkb-zeros", "--ell-max", "1", "--n-max", "1", "--bc", "neumann"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "ell,n,bc,x_wkb,x_exact,rel_error,flag");
    let first = lines.next().unwrap();
    assert!(first.starts_with("0,0,N,"), "{first}");
    assert!(first.ends_with(",exact_zero_at_origin"), "{first}");
}

#[test]
fn alpha_integral_points() {
    let (code, out, _) = casimir(&["alpha-integral", "--x", "0,1"]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "x,exact,semiclassical,exp_fit");
    assert_eq!(lines[1], "0,1,1,1");
    assert_eq!(lines.len(), 3);
}

#[test]
fn convergence_table_ends_with_limit() {
    let (code, out, _) = casimir(&["convergence", "--series", "zeta4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("kind,index,value\npartial_sum,1,1\n"));
    let limit = out.lines().find(|l| l.starts_with("limit,,")).unwrap();
    let v: f64 = limit.trim_start_matches("limit,,").parse().unwrap();
    assert!((v - std::f64::consts::PI.powi(4) / 90.0).abs() < 1e-8);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("casimir-sc-out-{}.json", std::process::id()));
    let (code, out, _) = casimir(&["sphere-energy", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(written.contains("\"total\""));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(casimir(&["sphere-energy", "--terms", "many"]).0, 2);
    assert_eq!(casimir(&["no-such-command"]).0, 2);
    assert_eq!(casimir(&["cylinder-energy", "--variant", "exact"]).0, 2);
}

#[test]
fn computation_errors_exit_1() {
    let (code, out, err) = casimir(&["sphere-energy", "--terms", "3"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.starts_with("error:"), "{err}");
    assert_eq!(casimir(&["wkb-zeros", "--ell-max", "50"]).0, 1);
    assert_eq!(casimir(&["alpha-integral", "--x", "70"]).0, 1);
}

#[test]
fn help_describes_formulas() {
    let (code, out, _) = casimir(&["--help"]);
    assert_eq!(code, 0);
    for cmd in ["sphere-energy", "cylinder-energy", "wkb-zeros", "orbit-table", "alpha-integral", "convergence", "verify"] {
        assert!(out.contains(cmd), "{cmd}");
    }
}

#[test]
fn breakdown_csv() {
    let (code, out, _) = casimir(&["sphere-energy", "--breakdown", "--terms", "6"]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "n,w,kind,contribution");
    // 6 diameter rows plus 0+1+...+5 generic sectors
    assert_eq!(lines.len(), 1 + 6 + 15);
    let (code, out, _) = casimir(&["cylinder-energy", "--breakdown", "--terms", "40"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 41);
}
