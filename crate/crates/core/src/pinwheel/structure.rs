//! The pinwheel data model: cyclically glued components with two interface
//! surfaces each, plus the structural checks and the two genus-raising
//! operations (handle trading and pushing through).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::pinwheel::monodromy::{monodromy_check, MonodromyClass};
use crate::validate::ValidationReport;

/// One of the two surfaces a component is glued along.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct InterfaceSurface {
    pub genus: u32,
    pub self_intersection: i64,
}

impl InterfaceSurface {
    pub fn new(genus: u32, self_intersection: i64) -> Self {
        InterfaceSurface { genus, self_intersection }
    }
}

/// A pinwheel component: the complement of a neighborhood of two transverse
/// surfaces in some closed 4-manifold. Euler characteristics are recorded
/// from the catalog source, not recomputed; the structural check only
/// verifies that they sum to the target.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PinwheelComponent {
    pub name: String,
    /// Outgoing interface surface `S_i` (self-intersection `m_i`).
    pub s_surface: InterfaceSurface,
    /// Incoming interface surface `T_i` (self-intersection `n_i`).
    pub t_surface: InterfaceSurface,
    pub euler: i64,
    /// Whether the meridian at the `T_i` interface bounds a proper framed
    /// disk in this component (the Handle Trading Condition).
    pub htc_at_t: bool,
    /// Whether the two interface meridians are isotopic inside the
    /// component, enabling the push-through move.
    pub push_through_eligible: bool,
    /// Bing pairs surgered inside this component when building the family.
    pub surgered_bing_pairs: u32,
    /// Set by [`push_through`]; such a component contributes a meridian
    /// generator whose commutator relation the presentation builders add.
    pub pushed_through: bool,
}

impl PinwheelComponent {
    pub fn new(name: &str, s: InterfaceSurface, t: InterfaceSurface, euler: i64) -> Self {
        PinwheelComponent {
            name: name.to_string(),
            s_surface: s,
            t_surface: t,
            euler,
            htc_at_t: false,
            push_through_eligible: false,
            surgered_bing_pairs: 0,
            pushed_through: false,
        }
    }

    pub fn with_htc(mut self) -> Self {
        self.htc_at_t = true;
        self
    }

    pub fn with_push_through(mut self) -> Self {
        self.push_through_eligible = true;
        self
    }

    pub fn with_surgered_pairs(mut self, pairs: u32) -> Self {
        self.surgered_bing_pairs = pairs;
        self
    }
}

/// How the closing of the cyclic gluing is certified.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Certification {
    /// The cyclic monodromy product is plus or minus the identity; checked
    /// by [`validate_pinwheel`].
    Matrix,
    /// Certified by an external handle-calculus or symplectic-sum argument
    /// that this tool does not re-derive.
    External(String),
}

/// Betti/Euler data of the closed manifold the pinwheel assembles into.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TargetInvariants {
    pub euler: i64,
    pub b_plus: i64,
    pub b_minus: i64,
    pub b1: i64,
}

/// A cyclic list of components glued `T_i -> S_(i+1)` around a central torus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Pinwheel {
    pub components: Vec<PinwheelComponent>,
    pub certification: Certification,
    pub target: TargetInvariants,
    /// Total Bing pairs surgered in the family construction; `None` when the
    /// source never states a count.
    pub surgered_pairs: Option<u32>,
}

impl Pinwheel {
    /// The step sequence `a_i = n_i + m_(i+1)` feeding the monodromy product.
    pub fn step_sequence(&self) -> Vec<i64> {
        let k = self.components.len();
        (0..k)
            .map(|i| {
                self.components[i].t_surface.self_intersection
                    + self.components[(i + 1) % k].s_surface.self_intersection
            })
            .collect()
    }

    pub fn euler_sum(&self) -> i64 {
        self.components.iter().map(|c| c.euler).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PinwheelError {
    GenusNotZero { interface: String },
    HtcViolated { interface: String },
    NotPushThroughEligible { component: String },
    NoTradingDisk { component: String },
    EmptyPinwheel,
}

impl fmt::Display for PinwheelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PinwheelError::GenusNotZero { interface } => {
                write!(f, "interface {interface} does not have genus 0")
            }
            PinwheelError::HtcViolated { interface } => {
                write!(f, "handle trading condition fails at interface {interface}")
            }
            PinwheelError::NotPushThroughEligible { component } => {
                write!(f, "component {component} is not push-through eligible")
            }
            PinwheelError::NoTradingDisk { component } => {
                write!(
                    f,
                    "no framed disk available on the incoming side of component {component}"
                )
            }
            PinwheelError::EmptyPinwheel => write!(f, "pinwheel has no components"),
        }
    }
}

fn interface_label(p: &Pinwheel, i: usize) -> String {
    let k = p.components.len();
    format!("T({}) ~ S({})", p.components[i].name, p.components[(i + 1) % k].name)
}

/// Structural checks: cyclic genus matching, the monodromy certificate for
/// matrix-certified pinwheels, and the Euler-characteristic sum.
pub fn validate_pinwheel(p: &Pinwheel) -> ValidationReport {
    let mut report = ValidationReport::new();
    let k = p.components.len();
    if k == 0 {
        report.push("components", false, "pinwheel has no components");
        return report;
    }

    for i in 0..k {
        let t = p.components[i].t_surface;
        let s = p.components[(i + 1) % k].s_surface;
        report.push(
            format!("genus match at {}", interface_label(p, i)),
            t.genus == s.genus,
            format!("g(T) = {}, g(S) = {}", t.genus, s.genus),
        );
    }

    match &p.certification {
        Certification::Matrix => {
            let steps = p.step_sequence();
            let class = monodromy_check(&steps);
            let ok = class.certifies_existence();
            let detail = match &class {
                MonodromyClass::PlusId => "product is the identity".to_string(),
                MonodromyClass::MinusId => "product is minus the identity".to_string(),
                MonodromyClass::Neither(m) => format!("product is {m}"),
            };
            report.push(format!("monodromy of steps {steps:?}"), ok, detail);
        }
        Certification::External(cite) => {
            report.push("certification", true, format!("external: {cite}"));
        }
    }

    let total = p.euler_sum();
    report.push(
        "euler sum",
        total == p.target.euler,
        format!("sum e(C_i) = {total}, target e = {}", p.target.euler),
    );
    report
}

/// Trades a Bing pair of 2-handles across every interface, raising each
/// interface genus from 0 to 1. Self-intersections and component Euler
/// characteristics are unchanged: each component gains a pair of 2-handles
/// and a pair of 1-handles, which cancel in the count.
pub fn handle_trade(p: &Pinwheel) -> Result<Pinwheel, PinwheelError> {
    if p.components.is_empty() {
        return Err(PinwheelError::EmptyPinwheel);
    }
    let k = p.components.len();
    for i in 0..k {
        let c = &p.components[i];
        if c.t_surface.genus != 0 || c.s_surface.genus != 0 {
            return Err(PinwheelError::GenusNotZero { interface: interface_label(p, i) });
        }
    }
    for i in 0..k {
        if !p.components[i].htc_at_t {
            return Err(PinwheelError::HtcViolated { interface: interface_label(p, i) });
        }
    }
    let mut out = p.clone();
    for c in &mut out.components {
        c.s_surface.genus = 1;
        c.t_surface.genus = 1;
        c.name = traded_name(&c.name);
    }
    Ok(out)
}

/// Renaming applied by `handle_trade`, matching how the traded components
/// are usually written (a `B_n` complement becomes the Bing-carrying `A`).
fn traded_name(name: &str) -> String {
    match name {
        "B0" => "A".to_string(),
        "B1" => "A(1)".to_string(),
        "B1#CP2bar" => "Ahat".to_string(),
        "B3#3CP2bar" => "Ahat(3)".to_string(),
        "B7#7CP2bar" => "Ahat(7)".to_string(),
        "I0'" => "I0".to_string(),
        other => {
            if let Some(n) = other.strip_prefix('B').and_then(|s| s.parse::<u32>().ok()) {
                format!("A({n})")
            } else {
                format!("{other}~")
            }
        }
    }
}

/// Pushes a Bing pair through a rational-ball style component whose two
/// interface meridians are isotopic: 2-handles enter from the neighbor
/// behind its `S` interface and get carved out again at the `T` interface.
/// Both of the component's interfaces become genus 1 (together with the
/// matching sides of its neighbors); Euler characteristics are unchanged.
/// The converted component later contributes a meridian generator with a
/// commutator relation, which the presentation builders account for.
pub fn push_through(p: &Pinwheel, component_index: usize) -> Result<Pinwheel, PinwheelError> {
    let k = p.components.len();
    if k == 0 {
        return Err(PinwheelError::EmptyPinwheel);
    }
    let idx = component_index % k;
    let c = &p.components[idx];
    if !c.push_through_eligible {
        return Err(PinwheelError::NotPushThroughEligible { component: c.name.clone() });
    }
    // The incoming handles come across the S interface, so the neighbor
    // behind it must either satisfy the trading condition or have been
    // converted already.
    let pred = (idx + k - 1) % k;
    let pred_ok = p.components[pred].htc_at_t || p.components[pred].t_surface.genus == 1;
    if !pred_ok {
        return Err(PinwheelError::NoTradingDisk { component: p.components[pred].name.clone() });
    }
    let succ = (idx + 1) % k;
    let mut out = p.clone();
    out.components[idx].s_surface.genus = 1;
    out.components[idx].t_surface.genus = 1;
    out.components[idx].pushed_through = true;
    let name = out.components[idx].name.clone();
    out.components[idx].name = format!("{name}^0");
    out.components[pred].t_surface.genus = 1;
    out.components[succ].s_surface.genus = 1;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pinwheel::catalog::catalog_lookup;

    fn b_component(n: i64) -> PinwheelComponent {
        PinwheelComponent::new(
            &format!("B{}", n.unsigned_abs()),
            InterfaceSurface::new(0, 0),
            InterfaceSurface::new(0, -n),
            1,
        )
        .with_htc()
    }

    fn cp2_pinwheel() -> Pinwheel {
        Pinwheel {
            components: alloc::vec![b_component(1), b_component(1), b_component(1)],
            certification: Certification::Matrix,
            target: TargetInvariants { euler: 3, b_plus: 1, b_minus: 0, b1: 0 },
            surgered_pairs: Some(0),
        }
    }

    #[test]
    fn cp2_three_fold_validates() {
        let p = cp2_pinwheel();
        assert_eq!(p.step_sequence(), alloc::vec![-1, -1, -1]);
        let report = validate_pinwheel(&p);
        assert!(report.passed(), "{report}");
        assert_eq!(p.euler_sum(), 3);
    }

    #[test]
    fn external_entry_validates_on_genus_and_euler() {
        let entry = catalog_lookup("cp2_k2").unwrap();
        let report = validate_pinwheel(&entry.pinwheel);
        assert!(report.passed(), "{report}");
        assert_eq!(entry.pinwheel.euler_sum(), 5);
        assert!(matches!(entry.pinwheel.certification, Certification::External(_)));
    }

    #[test]
    fn genus_mismatch_fails() {
        let mut p = cp2_pinwheel();
        p.components[1].s_surface.genus = 1;
        let report = validate_pinwheel(&p);
        assert!(!report.passed());
        assert!(report.failures().any(|item| item.label.contains("genus match")));
    }

    #[test]
    fn euler_mismatch_fails() {
        let mut p = cp2_pinwheel();
        p.target.euler = 4;
        assert!(!validate_pinwheel(&p).passed());
    }

    #[test]
    fn trade_s2xs2_gives_four_copies_of_a() {
        let entry = catalog_lookup("s2xs2").unwrap();
        let traded = handle_trade(&entry.pinwheel).unwrap();
        assert_eq!(traded.components.len(), 4);
        for c in &traded.components {
            assert_eq!(c.name, "A");
            assert_eq!(c.euler, 1);
            assert_eq!(c.s_surface.genus, 1);
            assert_eq!(c.t_surface.genus, 1);
        }
        assert_eq!(traded.euler_sum(), entry.pinwheel.euler_sum());
        assert!(validate_pinwheel(&traded).passed());
    }

    #[test]
    fn trade_cp2_gives_genus_one_components() {
        let traded = handle_trade(&cp2_pinwheel()).unwrap();
        for c in &traded.components {
            assert_eq!(c.name, "A(1)");
            assert_eq!(c.euler, 1);
            assert_eq!((c.s_surface.genus, c.t_surface.genus), (1, 1));
        }
    }

    #[test]
    fn trade_rejects_genus_one_interfaces() {
        let entry = catalog_lookup("s2xs2").unwrap();
        let traded = handle_trade(&entry.pinwheel).unwrap();
        assert!(matches!(handle_trade(&traded), Err(PinwheelError::GenusNotZero { .. })));
    }

    #[test]
    fn trade_rejects_htc_violation_and_names_the_interface() {
        let mut p = cp2_pinwheel();
        p.components[2].htc_at_t = false;
        match handle_trade(&p) {
            Err(PinwheelError::HtcViolated { interface }) => {
                assert!(interface.contains("B1"), "{interface}");
            }
            other => panic!("expected HtcViolated, got {other:?}"),
        }
    }

    #[test]
    fn push_through_k0_in_the_four_bar_pinwheel() {
        let entry = catalog_lookup("cp2_k4").unwrap();
        let idx = entry.pinwheel.components.iter().position(|c| c.name == "K0").unwrap();
        let pushed = push_through(&entry.pinwheel, idx).unwrap();
        let k0 = &pushed.components[idx];
        assert_eq!(k0.name, "K0^0");
        assert!(k0.pushed_through);
        assert_eq!((k0.s_surface.genus, k0.t_surface.genus), (1, 1));
        assert_eq!(k0.euler, 1);
        assert_eq!(pushed.euler_sum(), entry.pinwheel.euler_sum());
    }

    #[test]
    fn push_through_k1_then_k4() {
        let entry = catalog_lookup("cp2_k7").unwrap();
        let names: Vec<_> = entry.pinwheel.components.iter().map(|c| c.name.clone()).collect();
        let k1 = names.iter().position(|n| n == "K1").unwrap();
        let k4 = names.iter().position(|n| n == "K4").unwrap();
        let once = push_through(&entry.pinwheel, k1).unwrap();
        let twice = push_through(&once, k4).unwrap();
        assert!(twice.components[k1].pushed_through);
        assert!(twice.components[k4].pushed_through);
        // All three interfaces of the 3-component pinwheel are tori now.
        for c in &twice.components {
            assert_eq!(c.s_surface.genus, 1);
            assert_eq!(c.t_surface.genus, 1);
        }
        assert_eq!(twice.euler_sum(), entry.pinwheel.euler_sum());
    }

    #[test]
    fn push_through_rejects_ineligible_components() {
        let entry = catalog_lookup("cp2_k4").unwrap();
        let idx = entry.pinwheel.components.iter().position(|c| c.name == "I0'").unwrap();
        assert!(matches!(
            push_through(&entry.pinwheel, idx),
            Err(PinwheelError::NotPushThroughEligible { .. })
        ));
    }

    #[test]
    fn push_through_requires_a_disk_behind_the_s_interface() {
        let entry = catalog_lookup("cp2_k4").unwrap();
        let mut p = entry.pinwheel.clone();
        let idx = p.components.iter().position(|c| c.name == "K0").unwrap();
        let pred = (idx + p.components.len() - 1) % p.components.len();
        p.components[pred].htc_at_t = false;
        assert!(matches!(push_through(&p, idx), Err(PinwheelError::NoTradingDisk { .. })));
    }
}
