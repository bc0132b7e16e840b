use catg_certify::{verify_construction_a79, verify_generator_text, Status, BUNDLED_GENERATORS};

fn statuses(r: &catg_certify::CertificateReport) -> Vec<(String, Status)> {
    r.checks.iter().map(|c| (c.id.clone(), c.status)).collect()
}

#[test]
fn bundled_generators_pass_all_checks() {
    let report = verify_construction_a79();
    print!("{}", report.summary());
    assert_eq!(report.checks.len(), 12);
    assert_eq!(report.passed_count(), 12);
    assert!(report.overall);
    assert!(report.check("C9").unwrap().detail.contains("table-inferred"));
    assert!(report.disclaimer.contains("Not certified"));
}

/// Removes the first 2-cycle from the `x1` line.
fn drop_first_transposition(text: &str) -> String {
    text.lines()
        .map(|line| {
            if let Some(rest) = line.strip_prefix("x1 = ") {
                let start = rest.find('(').unwrap();
                let end = start + rest[start..].find(')').unwrap();
                format!("x1 = {}{}", &rest[..start], &rest[end + 1..])
            } else {
                line.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn odd_x1_is_caught() {
    let report = verify_generator_text(&drop_first_transposition(BUNDLED_GENERATORS), "perturbed");
    print!("{}", report.summary());
    assert!(!report.overall);
    let failed: Vec<_> = report.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect();
    assert!(failed.contains(&"C5") || failed.contains(&"C11"), "failed: {failed:?}");
}

#[test]
fn inverted_b_breaks_relations() {
    let file = catg_core::GeneratorFile::parse(BUNDLED_GENERATORS).unwrap();
    let b_inv = file.get("b").unwrap().inverse();
    let text: String = BUNDLED_GENERATORS
        .lines()
        .map(|l| if l.starts_with("b = ") { format!("b = {b_inv}") } else { l.to_string() })
        .collect::<Vec<_>>()
        .join("\n");
    let report = verify_generator_text(&text, "perturbed");
    assert_eq!(report.check("C2").unwrap().status, Status::Fail);
    assert!(!report.overall);
}

#[test]
fn unparseable_input_skips_dependents() {
    let report = verify_generator_text("degree 80\na (1 2\n", "broken");
    assert_eq!(report.check("C1").unwrap().status, Status::Fail);
    assert!(report.checks[1..].iter().all(|c| c.status == Status::Skip));
    assert!(!report.overall);
}

#[test]
fn json_is_deterministic() {
    let a = verify_construction_a79();
    let b = verify_construction_a79();
    assert_eq!(a.to_json(false), b.to_json(false));
    assert_eq!(statuses(&a), statuses(&b));
    assert!(!a.to_json(false).contains("timings_ms"));
    assert!(a.to_json(true).contains("timings_ms"));
    let parsed: catg_certify::CertificateReport = serde_json::from_str(&a.to_json(false)).unwrap();
    assert_eq!(parsed.checks, a.checks);
    assert_eq!(a.input_digests["a79.perms"].len(), 64);
}
