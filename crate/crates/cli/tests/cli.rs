use std::f64::consts::{FRAC_PI_2, PI};
use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn hypquat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypquat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Value of a `key value` line of the text report.
fn field(out: &str, key: &str) -> String {
    out.lines()
        .find_map(|l| l.strip_prefix(key).filter(|r| r.starts_with(' ')).map(|r| r.trim().to_string()))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
}

fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    (header, lines.map(|l| l.split(',').map(String::from).collect()).collect())
}

fn column(header: &[String], rows: &[Vec<String>], name: &str) -> Vec<String> {
    let k = header.iter().position(|h| h == name).unwrap_or_else(|| panic!("no column {name}"));
    rows.iter().map(|r| r[k].clone()).collect()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn real_plane_triple() {
    let o = hypquat(&["invariant", "0,-1", "0,1", "0,0.5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(num(&field(&out, "A")), 0.0);
    assert_eq!(field(&out, "class"), "real-plane");
}

#[test]
fn quaternionic_line_triple() {
    let o = hypquat(&["invariant", "0,-1", "0,1", "0,i"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!((num(&field(&out, "A")) - FRAC_PI_2).abs() < 1e-12);
    assert!((num(&field(&out, "tau")) - PI).abs() < 1e-12);
    assert_eq!(field(&out, "class"), "h-line");
}

#[test]
fn carnot_and_ball_inputs_agree() {
    // [0, 0] is (0, 1) and infinity is (0, -1)
    let a = hypquat(&["invariant", "inf", "c:0;0", "0.6,0.8j", "--json"]);
    let b = hypquat(&["invariant", "0,-1", "0,1", "0.6,0.8j", "--json"]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["class"], "generic");
    assert_eq!(v["metadata"]["seed"], 0);
}

#[test]
fn octonionic_standard_triple() {
    let o = hypquat(&["invariant", "--field", "o", "0,-1", "0,1", "0,0|0.5i"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!((num(&field(&stdout(&o), "tan_A")) - 4.0 / 3.0).abs() < 1e-12);
}

#[test]
fn malformed_coordinate_is_an_input_error() {
    let o = hypquat(&["invariant", "0,-1", "0,1", "0,1x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("malformed coordinate"), "{}", stderr(&o));
    // a complex run rejects j components
    let o = hypquat(&["invariant", "--field", "c", "0,-1", "0,1", "0,j"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn degenerate_triple_is_an_input_error() {
    let o = hypquat(&["invariant", "0,-1", "0,1", "0,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_cartan_passes_with_a_table() {
    let o = hypquat(&["verify", "cartan", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("permutation_symmetry"));
    assert!(out.contains("isometry_invariance"));
    assert!(out.trim_end().ends_with("cartan: PASS"));
}

#[test]
fn verify_bisector_passes() {
    let o = hypquat(&["verify", "bisector", "--count", "200"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("bisector: PASS"));
}

#[test]
fn unknown_suite_is_an_input_error() {
    let o = hypquat(&["verify", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown suite 'nosuch'"));
}

#[test]
fn verify_writes_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = hypquat(&["verify", "carnot", "--seed", "3", "--count", "50", "--out", out]);
    assert_eq!(o.status.code(), Some(0));
    let csv = fs::read_to_string(dir.path().join("verify.csv")).unwrap();
    assert!(csv.starts_with("suite,check,value,bound,threshold,samples,passed,error\n"));
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("verify.json")).unwrap()).unwrap();
    assert_eq!(json["passed"], true);
    assert_eq!(json["checks"].as_array().unwrap().len(), csv.lines().count() - 1);
}

#[test]
fn bend_sweep_matches_the_fuchsian_case_and_separates_markers() {
    let dir = tempfile::tempdir().unwrap();
    let group = data("schottky_amalgam.group");
    let o = hypquat(&["bend", group.to_str().unwrap(), "--out", dir.path().to_str().unwrap(), "--count", "60"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let (header, rows) = csv_rows(&fs::read_to_string(dir.path().join("bend.csv")).unwrap());
    assert_eq!(rows.len(), 21);
    let marker: Vec<f64> = column(&header, &rows, "marker").iter().map(|s| num(s)).collect();
    assert!(marker[0] < 1e-9);
    assert!(num(&column(&header, &rows, "max_cygan_offset")[0]) < 1e-8);
    assert!(num(&column(&header, &rows, "max_ball_offset")[0]) < 1e-8);
    for w in marker.windows(2) {
        assert!(w[1] - w[0] > 1e-6, "{w:?}");
    }
    assert!(marker.iter().all(|m| *m < FRAC_PI_2));
    assert!(column(&header, &rows, "collar_ok").iter().all(|c| c == "true"));
    let p = num(&column(&header, &rows, "collar_product")[0]);
    assert!((p - (0.125f64).sinh() * 31.0 / 63f64.sqrt()).abs() < 1e-12);
    // one point cloud per grid value, the first on the real circle
    let (lh, lr) = csv_rows(&fs::read_to_string(dir.path().join("limit_000.csv")).unwrap());
    assert_eq!(lh.len(), 9);
    assert!(!lr.is_empty());
    for r in &lr {
        for k in [2, 3, 4, 6, 7, 8] {
            assert!(num(&r[k]).abs() < 1e-8);
        }
    }
    assert!(dir.path().join("limit_020.csv").exists());
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("bend.json")).unwrap()).unwrap();
    assert_eq!(json["rows"].as_array().unwrap().len(), 21);
    assert_eq!(json["rows"][3]["marker"].as_f64().unwrap(), marker[3]);
}

#[test]
fn bend_output_is_byte_identical_across_runs() {
    let group = data("schottky_hnn.group");
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    for d in &dirs {
        let args = ["bend", group.to_str().unwrap(), "--grid", "0:0.2:4", "--axis", "k", "--seed", "11", "--count", "40"];
        let o = hypquat(&[&args[..], &["--out", d.path().to_str().unwrap()]].concat());
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    }
    let mut names: Vec<_> = fs::read_dir(dirs[0].path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert_eq!(names.len(), 6);
    for n in names {
        assert_eq!(fs::read(dirs[0].path().join(&n)).unwrap(), fs::read(dirs[1].path().join(&n)).unwrap());
    }
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.cfg");
    fs::write(&cfg, "grid = 0:0.1:3\naxis = j\ncount = 20\nseed = 4\n").unwrap();
    let group = data("schottky_amalgam.group");
    let o = hypquat(&["bend", group.to_str().unwrap(), "--config", cfg.to_str().unwrap()]);
    let (header, rows) = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 3);
    assert_eq!(num(&column(&header, &rows, "eta_j")[2]), 0.1);
    let o = hypquat(&["bend", group.to_str().unwrap(), "--config", cfg.to_str().unwrap(), "--grid", "0:0.1:2"]);
    assert_eq!(csv_rows(&stdout(&o)).1.len(), 2);
}

#[test]
fn grid_outside_the_circle_is_rejected() {
    let group = data("schottky_amalgam.group");
    let o = hypquat(&["bend", group.to_str().unwrap(), "--grid", "0:3.5:4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invalid_group_file_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.group");
    fs::write(&path, "kind = amalgam\ndim = 2\ngenerator axis\n 1 0 0\nend\n").unwrap();
    let o = hypquat(&["bend", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("broken.group"));
}

#[test]
fn real_circle_cycle_evaluates_to_zero() {
    let o = hypquat(&["character", data("tetrahedron.cycle").to_str().unwrap(), data("real_circle.vertices").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(num(&field(&stdout(&o), "c")).abs() < 1e-9);
    assert_eq!(field(&stdout(&o), "closed"), "true");
}

#[test]
fn line_triangle_attains_the_bound_in_lenient_mode() {
    let args = [data("line_triangle.cycle"), data("line_triangle.vertices")];
    let paths: Vec<&str> = args.iter().map(|p| p.to_str().unwrap()).collect();
    let strict = hypquat(&["character", paths[0], paths[1]]);
    assert_eq!(strict.status.code(), Some(2));
    assert!(stderr(&strict).contains("not closed"));
    let o = hypquat(&["character", paths[0], paths[1], "--lenient"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning"));
    assert!((num(&field(&stdout(&o), "c")) - 4.0 * PI * PI).abs() < 1e-8);
}

#[test]
fn limit_set_export() {
    let group = data("schottky_amalgam.group");
    let o = hypquat(&["limitset", group.to_str().unwrap(), "--count", "25", "--words", "5", "--seed", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let (header, rows) = csv_rows(&stdout(&o));
    assert_eq!(header[0], "index");
    assert!(!rows.is_empty() && rows.len() <= 25);
    for r in &rows {
        let (a, b) = (num(&r[1]), num(&r[5]));
        assert!((a * a + b * b - 1.0).abs() < 1e-9);
    }
    assert_eq!(stdout(&o), stdout(&hypquat(&["limitset", group.to_str().unwrap(), "--count", "25", "--words", "5", "--seed", "2"])));
}
