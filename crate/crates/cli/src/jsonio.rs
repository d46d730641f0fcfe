//! Serialized form of catalog pinwheels. One JSON object per pinwheel:
//! `name`, `components[] {name, s {genus, self_int}, t {genus, self_int},
//! euler, htc_at_t, push_through_eligible}`, `certification {kind, cite}`,
//! `target {euler, b_plus, b_minus, b1}`, `surgered_pairs` (null when the
//! source states no count). Field order is fixed.

use pinwheel_forge_core::pinwheel::{
    CatalogEntry, Certification, InterfaceSurface, Pinwheel, PinwheelComponent, TargetInvariants,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SurfaceJson {
    pub genus: u32,
    pub self_int: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComponentJson {
    pub name: String,
    pub s: SurfaceJson,
    pub t: SurfaceJson,
    pub euler: i64,
    pub htc_at_t: bool,
    pub push_through_eligible: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificationJson {
    pub kind: String,
    pub cite: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TargetJson {
    pub euler: i64,
    pub b_plus: i64,
    pub b_minus: i64,
    pub b1: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PinwheelJson {
    pub name: String,
    pub components: Vec<ComponentJson>,
    pub certification: CertificationJson,
    pub target: TargetJson,
    pub surgered_pairs: Option<u32>,
}

fn surface_json(s: InterfaceSurface) -> SurfaceJson {
    SurfaceJson { genus: s.genus, self_int: s.self_intersection }
}

pub fn pinwheel_to_json(name: &str, p: &Pinwheel) -> PinwheelJson {
    PinwheelJson {
        name: name.to_string(),
        components: p
            .components
            .iter()
            .map(|c| ComponentJson {
                name: c.name.clone(),
                s: surface_json(c.s_surface),
                t: surface_json(c.t_surface),
                euler: c.euler,
                htc_at_t: c.htc_at_t,
                push_through_eligible: c.push_through_eligible,
            })
            .collect(),
        certification: match &p.certification {
            Certification::Matrix => {
                CertificationJson { kind: "matrix".to_string(), cite: String::new() }
            }
            Certification::External(cite) => {
                CertificationJson { kind: "external".to_string(), cite: cite.clone() }
            }
        },
        target: TargetJson {
            euler: p.target.euler,
            b_plus: p.target.b_plus,
            b_minus: p.target.b_minus,
            b1: p.target.b1,
        },
        surgered_pairs: p.surgered_pairs,
    }
}

pub fn entry_to_json(e: &CatalogEntry) -> PinwheelJson {
    pinwheel_to_json(e.name, &e.pinwheel)
}

/// Rebuilds an in-memory pinwheel from its serialized form. Flags that are
/// not part of the wire format (per-component surgery counts, push-through
/// state) come back at their defaults.
pub fn pinwheel_from_json(j: &PinwheelJson) -> Result<Pinwheel, String> {
    let certification = match j.certification.kind.as_str() {
        "matrix" => Certification::Matrix,
        "external" => Certification::External(j.certification.cite.clone()),
        other => return Err(format!("unknown certification kind `{other}`")),
    };
    let components = j
        .components
        .iter()
        .map(|c| {
            let mut comp = PinwheelComponent::new(
                &c.name,
                InterfaceSurface::new(c.s.genus, c.s.self_int),
                InterfaceSurface::new(c.t.genus, c.t.self_int),
                c.euler,
            );
            comp.htc_at_t = c.htc_at_t;
            comp.push_through_eligible = c.push_through_eligible;
            comp
        })
        .collect();
    Ok(Pinwheel {
        components,
        certification,
        target: TargetInvariants {
            euler: j.target.euler,
            b_plus: j.target.b_plus,
            b_minus: j.target.b_minus,
            b1: j.target.b1,
        },
        surgered_pairs: j.surgered_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use pinwheel_forge_core::pinwheel::catalog;

    #[test]
    fn catalog_entries_round_trip_through_json_text() {
        for e in catalog() {
            let j = entry_to_json(&e);
            let text = serde_json::to_string(&j).unwrap();
            let back: PinwheelJson = serde_json::from_str(&text).unwrap();
            assert_eq!(back, j, "{}", e.name);
            let p = pinwheel_from_json(&back).unwrap();
            assert_eq!(p.components.len(), e.pinwheel.components.len());
            assert_eq!(p.target, e.pinwheel.target);
            assert_eq!(p.step_sequence(), e.pinwheel.step_sequence());
        }
    }

    #[test]
    fn field_order_is_stable() {
        let e = catalog().into_iter().find(|e| e.name == "s2xs2").unwrap();
        let text = serde_json::to_string(&entry_to_json(&e)).unwrap();
        let name_pos = text.find("\"name\"").unwrap();
        let comp_pos = text.find("\"components\"").unwrap();
        let cert_pos = text.find("\"certification\"").unwrap();
        let target_pos = text.find("\"target\"").unwrap();
        let pairs_pos = text.find("\"surgered_pairs\"").unwrap();
        assert!(name_pos < comp_pos && comp_pos < cert_pos);
        assert!(cert_pos < target_pos && target_pos < pairs_pos);
    }
}
