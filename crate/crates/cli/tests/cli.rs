use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;
use wsn_cli::{parse_config, parse_config_text, CliError};

fn wsnsim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wsnsim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn key_values(text: &str) -> BTreeMap<String, String> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .filter_map(|l| l.split_once(" = "))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn num(map: &BTreeMap<String, String>, key: &str) -> f64 {
    map[key]
        .parse()
        .unwrap_or_else(|_| panic!("{key} = {}", map[key]))
}

fn read_dir(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect()
}

#[test]
fn empty_file_gives_defaults() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("empty.cfg");
    fs::write(&path, "").unwrap();
    let c = parse_config(Some(&path), &[]).unwrap();
    let n = &c.scenario.network;
    assert_eq!(n.node_count, 100);
    assert_eq!(n.initial_energy, 0.5);
    assert_eq!(n.p_opt, 0.1);
    assert_eq!(n.packet_bits, 4000);
    assert_eq!((n.field_width, n.field_height), (100.0, 100.0));
    assert_eq!((n.bs_position.x, n.bs_position.y), (50.0, 150.0));
    let r = &c.scenario.radio;
    assert_eq!(r.e_elec, 50e-9);
    assert_eq!(r.e_fs, 10e-12);
    assert_eq!(r.e_mp, 0.0013e-12);
    assert_eq!(r.e_da, 5e-9);
}

#[test]
fn p_opt_out_of_bounds_is_rejected() {
    let err = parse_config(None, &["p_opt=1.5".into()]).unwrap_err();
    let CliError::Config(e) = &err else {
        panic!("{err:?}")
    };
    assert_eq!(e.field, "p_opt");
    assert_eq!(e.value, "1.5");
    assert!(err.to_string().contains("0 < p_opt <= 1"), "{err}");
}

#[test]
fn override_beats_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("n.cfg");
    fs::write(&path, "nodes = 50\n").unwrap();
    assert_eq!(
        parse_config(Some(&path), &[])
            .unwrap()
            .scenario
            .network
            .node_count,
        50
    );
    let c = parse_config(Some(&path), &["nodes=80".into()]).unwrap();
    assert_eq!(c.scenario.network.node_count, 80);
}

#[test]
fn unknown_keys_and_bad_values_name_the_key() {
    let e = parse_config_text("nodez = 5", &[]).unwrap_err();
    assert!(
        matches!(&e, CliError::UnknownKey { key, .. } if key == "nodez"),
        "{e:?}"
    );
    assert!(e.to_string().contains("line 1"), "{e}");
    let e = parse_config_text("", &["seed=abc".into()]).unwrap_err();
    assert!(e.to_string().contains("`seed` = abc"), "{e}");
    assert!(parse_config(Some(Path::new("/nonexistent/x.cfg")), &[]).is_err());
}

#[test]
fn analyze_prints_the_closed_forms() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = wsnsim(&["analyze", "--out", out, "--set", "d_to_bs=100"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let kv = key_values(&String::from_utf8(o.stdout).unwrap());

    // k = sqrt(0.5855 N e_fs a^2 / (e_mp d^4 - E_elec)) by hand
    let (n, efs, emp, a, d, eelec) = (100.0, 10e-12, 0.0013e-12, 50.0, 100.0_f64, 50e-9);
    let k = (0.5855 * n * efs * a * a / (emp * d.powi(4) - eelec)).sqrt();
    assert!((num(&kv, "k_opt") - 4.277484658067168).abs() / k < 1e-9);
    assert!((num(&kv, "k_opt") - k).abs() / k < 1e-9);
    assert_eq!(kv["k_opt_rounded"], "4");

    assert!((num(&kv, "ch_ave") - 10.0).abs() < 1e-9);
    assert!((num(&kv, "ch_dev") - 3.0).abs() < 1e-9);
    assert!((num(&kv, "ch_cov") - 0.3).abs() < 1e-9);
    assert_eq!(num(&kv, "expected_members"), 24.0);
    // cell side 2a/sqrt(4) = 50, mean distance to center 0.38259785823 * side
    assert!((num(&kv, "expected_dist_to_ch") - 0.382597858232 * 50.0).abs() < 1e-6);

    let written = fs::read_to_string(dir.path().join("analysis.txt")).unwrap();
    assert!(written.starts_with("# wsnsim "));
    assert_eq!(key_values(&written), kv);
    let csv = fs::read_to_string(dir.path().join("analysis_k.csv")).unwrap();
    let rows: Vec<&str> = csv.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "k,expected_members,expected_dist_to_ch");
    assert_eq!(rows.len(), 11);
    assert!(rows[5].starts_with("5,19,"), "{}", rows[5]);
}

#[test]
fn analyze_default_distance_is_center_to_bs() {
    let dir = TempDir::new().unwrap();
    let o = wsnsim(&["analyze", "--out", dir.path().to_str().unwrap()]);
    let kv = key_values(&String::from_utf8(o.stdout).unwrap());
    assert_eq!(kv["d_to_bs"], "100");
    assert!((num(&kv, "k_opt") - 4.277484658067168).abs() < 1e-9);
}

#[test]
fn analyze_zero_probability_has_undefined_cov() {
    let dir = TempDir::new().unwrap();
    let o = wsnsim(&[
        "analyze",
        "--out",
        dir.path().to_str().unwrap(),
        "--set",
        "ch_p=0",
    ]);
    assert_eq!(code(&o), 0);
    let kv = key_values(&String::from_utf8(o.stdout).unwrap());
    assert_eq!(kv["ch_ave"], "0");
    assert_eq!(kv["ch_dev"], "0");
    assert_eq!(kv["ch_cov"], "undefined");
}

#[test]
fn reruns_are_byte_identical() {
    let (a, b) = (TempDir::new().unwrap(), TempDir::new().unwrap());
    for dir in [&a, &b] {
        let out = dir.path().to_str().unwrap();
        for args in [
            vec![
                "simulate",
                "--protocol",
                "multihop",
                "--seed",
                "5",
                "--out",
                out,
            ],
            vec![
                "simulate",
                "--protocol",
                "cidrsn",
                "--seed",
                "5",
                "--out",
                out,
            ],
            vec![
                "compare", "--seeds", "1..3", "--rounds", "400", "--out", out,
            ],
            vec!["analyze", "--seed", "5", "--out", out],
        ] {
            let o = wsnsim(&args);
            assert_eq!(
                code(&o),
                0,
                "{args:?}: {}",
                String::from_utf8_lossy(&o.stderr)
            );
        }
    }
    let (fa, fb) = (read_dir(a.path()), read_dir(b.path()));
    assert_eq!(
        fa.keys().collect::<Vec<_>>(),
        [
            "analysis.txt",
            "analysis_k.csv",
            "cidrsn_seed5.csv",
            "compare_report.txt",
            "compare_runs.csv",
            "compare_summary.csv",
            "multihop_seed5.csv"
        ]
    );
    assert_eq!(fa, fb);
}

#[test]
fn every_file_starts_with_provenance() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().to_str().unwrap();
    assert_eq!(
        code(&wsnsim(&[
            "simulate", "--seed", "2", "--rounds", "50", "--out", out
        ])),
        0
    );
    assert_eq!(
        code(&wsnsim(&[
            "compare", "--seeds", "1..2", "--rounds", "50", "--out", out
        ])),
        0
    );
    assert_eq!(code(&wsnsim(&["analyze", "--out", out])), 0);
    for (name, bytes) in read_dir(dir.path()) {
        let text = String::from_utf8(bytes).unwrap();
        let header: Vec<&str> = text.lines().take_while(|l| l.starts_with('#')).collect();
        assert!(header[0].starts_with("# wsnsim "), "{name}");
        assert!(header.iter().any(|l| l.starts_with("# seed: ")), "{name}");
        for key in wsn_cli::KEYS {
            assert!(
                header
                    .iter()
                    .any(|l| l.starts_with(&format!("# config: {key} = "))),
                "{name} lacks {key}"
            );
        }
    }
    let sim = fs::read_to_string(dir.path().join("leach_seed2.csv")).unwrap();
    assert!(sim.contains("# seed: 2\n") && sim.contains("# config: max_rounds = 50\n"));
    let body: Vec<&str> = sim.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body[0], wsn_core::harness::CSV_HEADER);
}

#[test]
fn echoed_config_reproduces_the_run() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("first");
    let o = wsnsim(&[
        "simulate",
        "--seed",
        "4",
        "--rounds",
        "80",
        "--set",
        "nodes=40",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let first = fs::read_to_string(out.join("leach_seed4.csv")).unwrap();
    let cfg: String = first
        .lines()
        .filter_map(|l| l.strip_prefix("# config: "))
        .map(|l| format!("{l}\n"))
        .collect();
    let cfg_path = dir.path().join("echo.cfg");
    fs::write(&cfg_path, cfg).unwrap();
    let again = dir.path().join("second");
    let o = wsnsim(&[
        "simulate",
        "--config",
        cfg_path.to_str().unwrap(),
        "--out",
        again.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        fs::read_to_string(again.join("leach_seed4.csv")).unwrap(),
        first
    );
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().to_str().unwrap();
    assert_eq!(code(&wsnsim(&["--help"])), 0);
    assert_eq!(code(&wsnsim(&["--version"])), 0);
    assert_eq!(code(&wsnsim(&[])), 1);
    assert_eq!(code(&wsnsim(&["frobnicate"])), 1);
    assert_eq!(
        code(&wsnsim(&["simulate", "--protocol", "teen", "--out", out])),
        1
    );
    assert_eq!(
        code(&wsnsim(&["compare", "--seeds", "5..1", "--out", out])),
        1
    );

    let o = wsnsim(&["simulate", "--set", "p_opt=1.5", "--out", out]);
    assert_eq!(code(&o), 1);
    let stderr = String::from_utf8_lossy(&o.stderr);
    assert!(
        stderr.contains("p_opt") && stderr.contains("1.5"),
        "{stderr}"
    );
    assert_eq!(
        code(&wsnsim(&[
            "analyze",
            "--config",
            "/nonexistent.cfg",
            "--out",
            out
        ])),
        1
    );
    assert_eq!(
        code(&wsnsim(&["analyze", "--set", "bogus=1", "--out", out])),
        1
    );

    // output path blocked by a regular file
    let blocker = dir.path().join("file");
    fs::write(&blocker, "").unwrap();
    let o = wsnsim(&[
        "simulate",
        "--rounds",
        "5",
        "--out",
        blocker.join("sub").to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
    // k_opt undefined when the sink is too close
    assert_eq!(
        code(&wsnsim(&["analyze", "--set", "d_to_bs=10", "--out", out])),
        2
    );
}
