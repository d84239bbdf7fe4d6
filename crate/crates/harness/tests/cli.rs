use std::process::Command;

fn schurweyl(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_schurweyl"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn sweep_bytes_do_not_depend_on_thread_count() {
    let args = ["sweep", "--alpha", "2", "--d", "4,8", "--n", "50,100", "--trials", "40", "--seed", "9"];
    let one = schurweyl(&[&args[..], &["--threads", "1"]].concat());
    let four = schurweyl(&[&args[..], &["--threads", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let text = String::from_utf8(one.stdout).unwrap();
    assert!(text.starts_with("# schurweyl "));
    assert!(text.lines().any(|l| l.starts_with("record,")));
}

#[test]
fn estimate_writes_to_out_path() {
    let path = std::env::temp_dir().join(format!("schurweyl-cli-{}.csv", std::process::id()));
    let out = schurweyl(&["estimate", "--alpha", "1", "--d", "4", "--n", "200", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.contains("eyd-von-neumann"));
}

#[test]
fn spectrum_file_is_read() {
    let path = std::env::temp_dir().join(format!("schurweyl-spectrum-{}.txt", std::process::id()));
    std::fs::write(&path, "0.5 0.25\n0.25\n").unwrap();
    let out = schurweyl(&["estimate", "--d", "3", "--n", "100", "--spectrum", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn config_errors_exit_with_two() {
    for args in [
        &["estimate", "--eps", "-1"][..],
        &["sweep", "--d", "zero"],
        &["estimate", "--spectrum", "/nonexistent/spectrum.txt"],
        &["estimate", "--trials", "0"],
        &["selftest", "sometimes"],
        &["frobnicate"],
    ] {
        let out = schurweyl(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn lowerbound_reports_exact_rows() {
    let out = schurweyl(&["lowerbound", "--d", "3", "--n", "1,2,4", "--spectrum", "lb-int", "--eps", "0.1"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 4);
}

#[test]
fn quick_selftest_passes() {
    let out = schurweyl(&["selftest", "quick", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}
