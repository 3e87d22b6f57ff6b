//! Report model shared by every command, with deterministic text and JSON
//! renderings. Exact values travel as canonical cyclo literals; float
//! approximations appear only when explicitly requested and are marked as
//! such.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Serialize, Debug, Clone)]
pub struct InstanceInfo {
    pub label: String,
    pub order: usize,
    pub elements: Vec<String>,
    pub z0: String,
    pub equation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub morphism: Option<MorphismInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<String>>,
}

#[derive(Serialize, Debug, Clone)]
pub struct MorphismInfo {
    pub kind: String,
    pub map: Vec<String>,
}

#[derive(Serialize, Debug, Clone)]
pub struct ValidationInfo {
    pub ok: bool,
    pub checks: Vec<String>,
}

#[derive(Serialize, Debug, Clone)]
pub struct AnalysisInfo {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
    pub center: Vec<String>,
    pub is_group: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub morphism_check: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anti_involutions: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub involutive_automorphisms: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enumeration_note: Option<String>,
}

#[derive(Serialize, Debug, Clone)]
pub struct CharacterInfo {
    pub values: Vec<String>,
    pub zero_map: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values_float: Option<Vec<String>>,
}

#[derive(Serialize, Debug, Clone)]
pub struct TallyInfo {
    pub nonzero_characters: usize,
    pub accepted: usize,
    pub rejected_zero_at_z0: usize,
    pub rejected_sign_condition: usize,
}

#[derive(Serialize, Debug, Clone)]
pub struct SolutionInfo {
    pub values: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values_float: Option<Vec<String>>,
    pub provenance: Option<Vec<String>>,
    /// Identity name -> "pass" or "fail at (elements)".
    pub identities: BTreeMap<String, String>,
    pub dalembert: DalembertInfo,
}

#[derive(Serialize, Debug, Clone)]
pub struct DalembertInfo {
    pub values: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values_float: Option<Vec<String>>,
    pub verified: bool,
    pub abelian: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct SigmaSignInfo {
    pub candidates: usize,
    pub adopted_convention: String,
    pub adopted_pass: usize,
    pub opposite_pass: usize,
    pub verdict: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct VerifyInfo {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

#[derive(Serialize, Debug, Clone)]
pub struct CrosscheckInfo {
    pub grid_order: u32,
    pub characterized: usize,
    pub brute_nonzero: usize,
    pub brute_total: usize,
    pub matched: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct Report {
    pub instance: InstanceInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analysis: Option<AnalysisInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characters: Option<Vec<CharacterInfo>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub admissible_mus: Option<Vec<CharacterInfo>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidates: Option<TallyInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solutions: Option<Vec<SolutionInfo>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma_sign: Option<SigmaSignInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crosscheck: Option<CrosscheckInfo>,
}

impl Report {
    pub fn new(instance: InstanceInfo) -> Self {
        Report {
            instance,
            validation: None,
            analysis: None,
            characters: None,
            admissible_mus: None,
            candidates: None,
            solutions: None,
            sigma_sign: None,
            verify: None,
            crosscheck: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let put = |out: &mut String, line: &str| {
            out.push_str(line);
            out.push('\n');
        };

        let inst = &self.instance;
        put(&mut out, &format!("instance: {}", inst.label));
        put(&mut out, &format!("order: {}", inst.order));
        put(&mut out, &format!("elements: {}", inst.elements.join(" ")));
        put(&mut out, &format!("z0: {}", inst.z0));
        put(&mut out, &format!("equation: {}", inst.equation));
        if let Some(m) = &inst.morphism {
            put(&mut out, &format!("morphism: {} {}", m.kind, m.map.join(" ")));
        }
        if let Some(mu) = &inst.mu {
            put(&mut out, &format!("mu: {}", mu.join(" ")));
        }

        if let Some(v) = &self.validation {
            put(
                &mut out,
                &format!("validation: {}", if v.ok { "ok" } else { "FAILED" }),
            );
            for c in &v.checks {
                put(&mut out, &format!("  - {c}"));
            }
        }

        if let Some(a) = &self.analysis {
            match &a.identity {
                Some(e) => put(&mut out, &format!("identity: {e}")),
                None => put(&mut out, "identity: none"),
            }
            put(&mut out, &format!("center: {}", a.center.join(" ")));
            put(&mut out, &format!("group: {}", a.is_group));
            if let Some(mc) = &a.morphism_check {
                put(&mut out, &format!("morphism check: {mc}"));
            }
            if let Some(list) = &a.anti_involutions {
                put(&mut out, &format!("anti-involutions: {}", list.len()));
                for m in list {
                    put(&mut out, &format!("  - {}", m.join(" ")));
                }
            }
            if let Some(list) = &a.involutive_automorphisms {
                put(
                    &mut out,
                    &format!("involutive automorphisms: {}", list.len()),
                );
                for m in list {
                    put(&mut out, &format!("  - {}", m.join(" ")));
                }
            }
            if let Some(note) = &a.enumeration_note {
                put(&mut out, &format!("morphism enumeration: {note}"));
            }
        }

        let character_block = |out: &mut String, title: &str, list: &[CharacterInfo]| {
            put(out, &format!("{title}: {}", list.len()));
            for c in list {
                let mark = if c.zero_map { "  (zero map)" } else { "" };
                put(out, &format!("  - {}{mark}", c.values.join(" ")));
                if let Some(fl) = &c.values_float {
                    put(out, &format!("    approx: {}", fl.join(" ")));
                }
            }
        };
        if let Some(list) = &self.characters {
            character_block(&mut out, "characters", list);
        }
        if let Some(list) = &self.admissible_mus {
            character_block(&mut out, "admissible mus", list);
        }

        if let Some(t) = &self.candidates {
            put(
                &mut out,
                &format!(
                    "candidates: {} nonzero characters, {} accepted, {} rejected by chi(z0)=0, {} rejected by the sign condition",
                    t.nonzero_characters,
                    t.accepted,
                    t.rejected_zero_at_z0,
                    t.rejected_sign_condition
                ),
            );
        }

        if let Some(sols) = &self.solutions {
            put(&mut out, &format!("solutions: {}", sols.len()));
            for (i, s) in sols.iter().enumerate() {
                put(&mut out, &format!("solution {}:", i + 1));
                put(&mut out, &format!("  f: {}", s.values.join(" ")));
                if let Some(fl) = &s.values_float {
                    put(&mut out, &format!("  f approx: {}", fl.join(" ")));
                }
                match &s.provenance {
                    Some(p) => put(&mut out, &format!("  provenance chi: {}", p.join(" "))),
                    None => put(&mut out, "  provenance chi: none"),
                }
                if s.identities.values().all(|v| v == "pass") {
                    put(
                        &mut out,
                        &format!("  identities: all pass ({})", s.identities.len()),
                    );
                } else {
                    for (name, outcome) in &s.identities {
                        put(&mut out, &format!("  identity {name}: {outcome}"));
                    }
                }
                put(&mut out, &format!("  g: {}", s.dalembert.values.join(" ")));
                if let Some(fl) = &s.dalembert.values_float {
                    put(&mut out, &format!("  g approx: {}", fl.join(" ")));
                }
                put(
                    &mut out,
                    &format!(
                        "  g verified: {}, abelian: {}",
                        s.dalembert.verified, s.dalembert.abelian
                    ),
                );
            }
        }

        if let Some(ss) = &self.sigma_sign {
            put(
                &mut out,
                &format!(
                    "sigma sign: {} candidates, adopted {} (passes {}), opposite passes {}, verdict {}",
                    ss.candidates,
                    ss.adopted_convention,
                    ss.adopted_pass,
                    ss.opposite_pass,
                    ss.verdict
                ),
            );
        }

        if let Some(v) = &self.verify {
            put(&mut out, &format!("verify: {}", v.status));
            if let Some([x, y]) = &v.at {
                put(&mut out, &format!("  violation at: ({x},{y})"));
            }
            if let (Some(l), Some(r)) = (&v.lhs, &v.rhs) {
                put(&mut out, &format!("  lhs: {l}"));
                put(&mut out, &format!("  rhs: {r}"));
            }
        }

        if let Some(c) = &self.crosscheck {
            put(
                &mut out,
                &format!(
                    "crosscheck: {}",
                    if c.matched { "MATCH" } else { "MISMATCH" }
                ),
            );
            put(&mut out, &format!("  grid order: {}", c.grid_order));
            put(&mut out, &format!("  characterized: {}", c.characterized));
            put(
                &mut out,
                &format!("  brute-force nonzero: {}", c.brute_nonzero),
            );
            put(
                &mut out,
                &format!("  brute-force total (with zero): {}", c.brute_total),
            );
        }

        out
    }
}
