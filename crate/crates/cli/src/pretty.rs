//! Human-facing renderings of classification results and check output.

use pinwheel_forge_core::torus_actions::ClassificationResult;

/// `1 × S²×S²`, `2 × CP² + 1 × CP̄²`, `S⁴`.
pub fn classification(c: &ClassificationResult) -> String {
    if c.is_s4() {
        return "S⁴".to_string();
    }
    let mut parts = Vec::new();
    if c.cp2_count > 0 {
        parts.push(format!("{} × CP²", c.cp2_count));
    }
    if c.cp2bar_count > 0 {
        parts.push(format!("{} × CP̄²", c.cp2bar_count));
    }
    if c.s2xs2_count > 0 {
        parts.push(format!("{} × S²×S²", c.s2xs2_count));
    }
    parts.join(" + ")
}

pub fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}
