//! The full verification report: every numeric claim the toolkit reproduces,
//! run as one self-contained pass with structured results. Output is
//! deterministic byte for byte: fixed check order, seeded sampling, no
//! timestamps.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use pinwheel_forge_core::fpgroups::{
    build_family_presentation_with, CommutatorConvention, FamilyParams, TrivialityVerdict, XiMode,
};
use pinwheel_forge_core::pinwheel::{
    apply_standard_surgeries, catalog, closed_form_product4, cyclic_cf_all_zero, monodromy_check,
    theta, validate_pinwheel, SurgeryInvariants,
};
use pinwheel_forge_core::swkit::{
    canonical_genus_feasibility, distinguishing_invariant, enumerate_basic_classes,
    k2_constraints, k3_constraints, minimality_check, mms_family, CharClass, LaurentPoly,
    MinimalityOutcome,
};
use pinwheel_forge_core::torus_actions::{
    barycentric_pinwheel, classify_action, parse_orbit_data, random_valid_orbit_data,
    sphere_geometry, SplitMix64,
};
use pinwheel_forge_core::zlin::mat2_product;

pub const REPORT_SCHEMA_ID: &str = "pinwheel-forge/1";
pub const DEFAULT_MAX_COSETS: usize = 1_000_000;
const SAMPLING_SEED: u64 = 0x70b6_a011;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
    Incomplete,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub inputs: Value,
    pub status: CheckStatus,
    pub witness: Value,
}

impl CheckResult {
    fn new(check_id: &str, inputs: Value, ok: bool, witness: Value) -> CheckResult {
        CheckResult {
            check_id: check_id.to_string(),
            inputs,
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            witness,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub checks: Vec<CheckResult>,
}

impl Report {
    /// True when nothing failed and nothing was cut short; incomplete
    /// catalog slots do not fail the report.
    pub fn all_passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| matches!(c.status, CheckStatus::Pass | CheckStatus::Incomplete))
    }

    pub fn incomplete_ids(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Incomplete)
            .map(|c| c.check_id.as_str())
            .collect()
    }
}

fn class_strings(classes: &[CharClass]) -> Vec<String> {
    classes.iter().map(|c| c.to_string()).collect()
}

/// Runs the whole suite. `max_cosets` bounds each coset enumeration.
pub fn paper_report(max_cosets: usize) -> Report {
    let mut checks = Vec::new();

    // Monodromy identities for the three- and four-component closures.
    {
        let cube = mat2_product(&[theta(-1), theta(-1), theta(-1)]);
        checks.push(CheckResult::new(
            "monodromy/threefold-identity",
            json!({"steps": [-1, -1, -1]}),
            cube.is_identity(),
            json!({"product": cube.to_string()}),
        ));
        let fourth = mat2_product(&[theta(0), theta(0), theta(0), theta(0)]);
        checks.push(CheckResult::new(
            "monodromy/fourfold-identity",
            json!({"steps": [0, 0, 0, 0]}),
            fourth.is_identity(),
            json!({"product": fourth.to_string()}),
        ));
    }

    // Exhaustive 4-step scan: vanishing cyclic continued fractions force a
    // +-identity product, and the product matches its closed polynomial form.
    {
        let bound = 6i64;
        let mut scanned = 0u64;
        let mut certified = 0u64;
        let mut ok = true;
        'scan: for a1 in -bound..=bound {
            for a2 in -bound..=bound {
                for a3 in -bound..=bound {
                    for a4 in -bound..=bound {
                        scanned += 1;
                        let seq = [a1, a2, a3, a4];
                        let product =
                            mat2_product(&[theta(a1), theta(a2), theta(a3), theta(a4)]);
                        if product != closed_form_product4(seq) {
                            ok = false;
                            break 'scan;
                        }
                        if cyclic_cf_all_zero(&seq).unwrap_or(false) {
                            certified += 1;
                            if !monodromy_check(&seq).certifies_existence() {
                                ok = false;
                                break 'scan;
                            }
                        }
                    }
                }
            }
        }
        checks.push(CheckResult::new(
            "monodromy/cyclic-cf-scan",
            json!({"bound": bound, "length": 4}),
            ok,
            json!({"scanned": scanned, "certified": certified}),
        ));
    }

    // The worked ruled-surface example: sphere data and classification.
    {
        let data = parse_orbit_data("(1,-1);(0,1);(1,-1);(2,-1)").expect("literal data");
        let config = sphere_geometry(&data).expect("valid data");
        let classification = classify_action(&data);
        let ok = config.self_ints == [-2, 0, 2, 0]
            && config.b2() == 2
            && classification
                .as_ref()
                .map(|c| c.s2xs2_count == 1 && c.cp2_count == 0 && c.cp2bar_count == 0)
                .unwrap_or(false);
        checks.push(CheckResult::new(
            "orbit/ruled-surface-example",
            json!({"data": data.to_string()}),
            ok,
            json!({
                "self_intersections": config.self_ints,
                "b2": config.b2(),
                "classification": classification.map(|c| c.to_string()).unwrap_or_default(),
            }),
        ));
    }

    // Randomized synthesis: every sampled valid action yields a pinwheel
    // that validates with a +-identity monodromy.
    {
        let samples = 1000u32;
        let mut rng = SplitMix64::new(SAMPLING_SEED);
        let mut failures = 0u32;
        for round in 0..samples {
            let k = 3 + (round % 4) as usize;
            let d = random_valid_orbit_data(&mut rng, k);
            let ok = barycentric_pinwheel(&d)
                .map(|p| validate_pinwheel(&p).passed())
                .unwrap_or(false);
            if !ok {
                failures += 1;
            }
        }
        checks.push(CheckResult::new(
            "orbit/barycentric-synthesis",
            json!({"samples": samples, "seed": SAMPLING_SEED, "max_pairs": 6}),
            failures == 0,
            json!({"failures": failures}),
        ));
    }

    // Fundamental-group triviality across the whole family grid, under both
    // commutator conventions.
    for k in [2u32, 3, 4, 7] {
        let kappas: Vec<Option<i64>> = if k == 2 || k == 4 {
            (-2..=2).map(Some).collect()
        } else {
            vec![None]
        };
        let mut cases = 0u32;
        let mut ok = true;
        let mut first_failure = Value::Null;
        for convention in [CommutatorConvention::UvInverse, CommutatorConvention::InverseUv] {
            for n in 1..=5 {
                for &kappa in &kappas {
                    cases += 1;
                    let params = FamilyParams { k, n, kappa };
                    let verdict = build_family_presentation_with(
                        params,
                        convention,
                        XiMode::Expanded,
                    )
                    .map(|p| pinwheel_forge_core::fpgroups::verify_trivial(&p, max_cosets));
                    match verdict {
                        Ok(TrivialityVerdict::Trivial) => {}
                        other => {
                            ok = false;
                            if first_failure.is_null() {
                                first_failure = json!({
                                    "n": n,
                                    "kappa": kappa,
                                    "convention": format!("{convention:?}"),
                                    "verdict": format!("{other:?}"),
                                });
                            }
                        }
                    }
                }
            }
        }
        checks.push(CheckResult::new(
            &format!("pi1/family-k{k}"),
            json!({"k": k, "n": "1..5", "kappa": if k == 2 || k == 4 { "-2..2" } else { "none" },
                   "max_cosets": max_cosets, "conventions": 2}),
            ok,
            json!({"cases": cases, "first_failure": first_failure}),
        ));
    }

    // Basic classes for the shipped constraint sets, with minimality.
    {
        let (lattice, constraints, c_square) = k3_constraints();
        let found = enumerate_basic_classes(&lattice, &constraints, c_square, 5)
            .expect("shipped constraints are valid");
        let expected =
            vec![CharClass::new(vec![-3, -1, -1, -1]), CharClass::new(vec![3, 1, 1, 1])];
        let ok = found.classes == expected && found.unconfined.is_empty();
        checks.push(CheckResult::new(
            "sw/basic-classes-k3",
            json!({"rank": 4, "c_square": c_square, "bound": 5}),
            ok,
            json!({"classes": class_strings(&found.classes), "unconfined": found.unconfined}),
        ));

        let minimality = minimality_check(&found.classes);
        let ok = matches!(
            &minimality,
            Ok(MinimalityOutcome::Minimal { difference_squares }) if difference_squares == &[24]
        );
        checks.push(CheckResult::new(
            "sw/minimality-k3",
            json!({"classes": class_strings(&expected)}),
            ok,
            json!({"outcome": format!("{minimality:?}")}),
        ));

        // The blowup pattern kappa +- e must be flagged with square -4.
        let blowup = vec![
            CharClass::new(vec![3, 1, 1, 0]),
            CharClass::new(vec![3, 1, 1, 2]),
            CharClass::new(vec![-3, -1, -1, 0]),
            CharClass::new(vec![-3, -1, -1, -2]),
        ];
        let flagged = matches!(
            minimality_check(&blowup),
            Ok(MinimalityOutcome::PossiblyNonminimal { pair }) if pair.0.minus(&pair.1).square() == -4
        );
        checks.push(CheckResult::new(
            "sw/minimality-blowup-witness",
            json!({"classes": class_strings(&blowup)}),
            flagged,
            json!({"difference_square": -4}),
        ));
    }
    {
        let (lattice, constraints, c_square) = k2_constraints();
        let found = enumerate_basic_classes(&lattice, &constraints, c_square, 5)
            .expect("shipped constraints are valid");
        let expected = vec![CharClass::new(vec![-3, -1, -1]), CharClass::new(vec![3, 1, 1])];
        let ok = found.classes == expected && found.unconfined.is_empty();
        checks.push(CheckResult::new(
            "sw/basic-classes-k2",
            json!({"rank": 3, "c_square": c_square, "bound": 5}),
            ok,
            json!({"classes": class_strings(&found.classes), "unconfined": found.unconfined}),
        ));
    }

    // Standard-surgery betti bookkeeping.
    {
        let start = SurgeryInvariants::from_betti(0, 1, 3);
        let q3 = apply_standard_surgeries(start, 3);
        let sigma2 = apply_standard_surgeries(SurgeryInvariants::from_betti(0, 1, 1), 4);
        let ok = (q3.b1, q3.b_plus, q3.b_minus) == (6, 7, 9)
            && q3.euler == start.euler
            && q3.signature == start.signature
            && (sigma2.b1, sigma2.b_plus, sigma2.b_minus) == (8, 9, 9);
        checks.push(CheckResult::new(
            "surgery/standard-bookkeeping",
            json!({"start": "(b1, b+, b-) = (0, 1, 3)", "bing_pairs": 3}),
            ok,
            json!({"result": q3.to_string(), "product_check": sigma2.to_string()}),
        ));
    }

    // Catalog: every complete entry validates structurally, and the Euler
    // sums land on 3 + k (4 for the twisted product and the Hirzebruch slot).
    {
        let mut ok = true;
        let mut sums = serde_json::Map::new();
        let mut failures = Vec::new();
        for e in catalog() {
            if e.incomplete.is_some() {
                continue;
            }
            let report = validate_pinwheel(&e.pinwheel);
            if !report.passed() {
                ok = false;
                failures.push(e.name.to_string());
            }
            if e.pinwheel.euler_sum() != e.pinwheel.target.euler {
                ok = false;
                failures.push(format!("{} euler", e.name));
            }
            sums.insert(e.name.to_string(), json!(e.pinwheel.euler_sum()));
        }
        checks.push(CheckResult::new(
            "catalog/validate-complete-entries",
            json!({"entries": catalog().iter().filter(|e| e.incomplete.is_none()).count()}),
            ok,
            json!({"euler_sums": Value::Object(sums), "failures": failures}),
        ));
    }

    // Surgery families of invariants: n (t^-1 - t) with invariant n,
    // pairwise distinct through n = 100.
    {
        let f0: LaurentPoly = "t^-1 - t".parse().expect("literal polynomial");
        let mut ok = true;
        let mut seen = Vec::new();
        for n in 1..=100 {
            let f = mms_family(&LaurentPoly::zero(), &f0, n);
            if f != f0.scale(n) {
                ok = false;
                break;
            }
            let inv = distinguishing_invariant(&f);
            if inv != n.into() || seen.contains(&inv) {
                ok = false;
                break;
            }
            seen.push(inv);
        }
        let example = mms_family(&LaurentPoly::zero(), &f0, 3);
        let expected3: LaurentPoly = "3t^-1 - 3t".parse().expect("literal polynomial");
        checks.push(CheckResult::new(
            "sw/surgery-family-distinct",
            json!({"f_inf": "0", "f_zero": "t^-1 - t", "n": "1..100"}),
            ok && example == expected3,
            json!({"family_at_3": example.to_string(), "members_checked": seen.len()}),
        ));
    }

    // Canonical-genus feasibility across the blowup range. The k = 5 slot
    // has no stated surgery count; both counts compatible with feasibility
    // are checked.
    {
        let cases: Vec<(u32, u32, bool)> = vec![
            (2, 3, true),
            (3, 3, true),
            (4, 2, true),
            (5, 1, true),
            (5, 2, true),
            (6, 1, true),
            (7, 1, true),
            (8, 1, false),
        ];
        let mut ok = true;
        let mut rows = Vec::new();
        for &(k, s, expect) in &cases {
            match canonical_genus_feasibility(k, s) {
                Ok(r) => {
                    if r.feasible != expect {
                        ok = false;
                    }
                    rows.push(json!({
                        "k": k, "surgered": s,
                        "required": r.required_genus,
                        "lower_bound": r.lower_bound,
                        "feasible": r.feasible,
                    }));
                }
                Err(_) => ok = false,
            }
        }
        checks.push(CheckResult::new(
            "genus/feasibility-range",
            json!({"k": "2..8"}),
            ok,
            json!({"rows": rows}),
        ));
    }

    // Incomplete catalog slots, listed prominently but not failing the run.
    {
        let incomplete: Vec<Value> = catalog()
            .iter()
            .filter(|e| e.incomplete.is_some())
            .map(|e| json!({"name": e.name, "reason": e.incomplete.unwrap_or_default()}))
            .collect();
        checks.push(CheckResult {
            check_id: "catalog/incomplete-slots".to_string(),
            inputs: json!({}),
            status: CheckStatus::Incomplete,
            witness: json!({"entries": incomplete}),
        });
    }

    Report { schema: REPORT_SCHEMA_ID.to_string(), checks }
}

/// Renders the report as aligned human-readable lines, one per check.
pub fn render_text(report: &Report) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let width = report.checks.iter().map(|c| c.check_id.len()).max().unwrap_or(0);
    for c in &report.checks {
        let status = match c.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Inconclusive => "inconclusive",
            CheckStatus::Incomplete => "incomplete",
        };
        let _ = writeln!(out, "{:width$}  {}", c.check_id, status);
        if c.status == CheckStatus::Incomplete {
            if let Some(entries) = c.witness.get("entries").and_then(Value::as_array) {
                for e in entries {
                    let _ = writeln!(
                        out,
                        "{:width$}    - {} ({})",
                        "",
                        e.get("name").and_then(Value::as_str).unwrap_or("?"),
                        e.get("reason").and_then(Value::as_str).unwrap_or("")
                    );
                }
            }
        }
        if c.status == CheckStatus::Fail {
            let _ = writeln!(out, "{:width$}    witness: {}", "", c.witness);
        }
    }
    let _ = writeln!(
        out,
        "{}",
        if report.all_passed() { "all checks passed" } else { "CHECKS FAILED" }
    );
    out
}

/// JSON schema for the report document, mirroring the typed structures.
pub fn report_schema() -> String {
    let schema = json!({
        "$id": REPORT_SCHEMA_ID,
        "title": "pinwheel-forge verification report",
        "type": "object",
        "required": ["schema", "checks"],
        "properties": {
            "schema": {"type": "string", "const": REPORT_SCHEMA_ID},
            "checks": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["check_id", "inputs", "status", "witness"],
                    "properties": {
                        "check_id": {"type": "string"},
                        "inputs": {},
                        "status": {"enum": ["pass", "fail", "inconclusive", "incomplete"]},
                        "witness": {}
                    }
                }
            }
        }
    });
    serde_json::to_string_pretty(&schema).expect("static schema serializes")
}

/// Minimal structural validation of an emitted report against the schema's
/// required shape.
pub fn validate_report_value(v: &Value) -> Result<(), String> {
    let obj = v.as_object().ok_or("report must be an object")?;
    match obj.get("schema").and_then(Value::as_str) {
        Some(REPORT_SCHEMA_ID) => {}
        other => return Err(format!("bad schema field: {other:?}")),
    }
    let checks = obj
        .get("checks")
        .and_then(Value::as_array)
        .ok_or("checks must be an array")?;
    for (i, c) in checks.iter().enumerate() {
        let c = c.as_object().ok_or_else(|| format!("check {i} must be an object"))?;
        for field in ["check_id", "inputs", "status", "witness"] {
            if !c.contains_key(field) {
                return Err(format!("check {i} missing `{field}`"));
            }
        }
        let status = c.get("status").and_then(Value::as_str).unwrap_or("");
        if !["pass", "fail", "inconclusive", "incomplete"].contains(&status) {
            return Err(format!("check {i} has unknown status `{status}`"));
        }
    }
    Ok(())
}
