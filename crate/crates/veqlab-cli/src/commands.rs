//! One function per CLI command. Each builds a [`Report`] and chooses the
//! exit code: 0 for success, 1 for validation failures, 2 when the
//! crosscheck oracle disagrees with the closed form.

use veqlab_core::characters::{admissible_mus, enumerate_characters, Character};
use veqlab_core::cyclo::{format_complex_approx, lex_cmp_tables};
use veqlab_core::engine::{
    brute_force_solutions, check_identities, default_grid_order, enumerate_solutions_with_tally,
    g_from_f, promote_uniform, resolve_sigma_sign, verify_equation, BruteForceOptions,
    CheckOutcome, Equation, EquationCheck, Instance, SignConvention, SignVerdict,
};
use veqlab_core::morphism::{enumerate_morphisms, validate_morphism, Morphism, MorphismCheck, MorphismError, MorphismKind};
use veqlab_core::semigroup::FiniteSemigroup;
use veqlab_core::Cyclo;

use crate::instance_file::{EquationTag, InstanceFile};
use crate::report::{
    AnalysisInfo, CharacterInfo, CrosscheckInfo, DalembertInfo, InstanceInfo, MorphismInfo,
    Report, SigmaSignInfo, SolutionInfo, TallyInfo, ValidationInfo, VerifyInfo,
};

pub struct Flags {
    pub float: bool,
    pub grid_order: Option<u32>,
    pub morphism_cap: usize,
    pub brute_cap: usize,
}

fn lits(values: &[Cyclo]) -> Vec<String> {
    values.iter().map(Cyclo::to_string).collect()
}

fn floats(values: &[Cyclo]) -> Vec<String> {
    values
        .iter()
        .map(|v| format_complex_approx(v.to_complex()))
        .collect()
}

fn names(file: &InstanceFile, indices: &[usize]) -> Vec<String> {
    indices.iter().map(|&i| file.name(i).to_string()).collect()
}

fn build_semigroup(file: &InstanceFile) -> Result<FiniteSemigroup, String> {
    FiniteSemigroup::from_table(file.label.clone(), file.table.clone())
        .map_err(|e| format!("invalid Cayley table: {e}"))
}

fn build_morphism(file: &InstanceFile) -> Option<Morphism> {
    file.morphism
        .as_ref()
        .map(|(kind, map)| Morphism::new(*kind, map.clone()))
}

fn resolved_equation(file: &InstanceFile) -> Option<Equation> {
    let (kind, _) = file.morphism.as_ref()?;
    Some(match (file.equation_tag, kind) {
        (EquationTag::VanVleck, MorphismKind::AntiInvolution) => Equation::VanVleckTau,
        (EquationTag::VanVleck, MorphismKind::InvolutiveAutomorphism) => Equation::VanVleckSigma,
        (EquationTag::DAlembert, MorphismKind::AntiInvolution) => Equation::DAlembertTau,
        (EquationTag::DAlembert, MorphismKind::InvolutiveAutomorphism) => Equation::DAlembertSigma,
    })
}

/// μ defaults to the constant 1 when the file omits it.
fn effective_mu(file: &InstanceFile) -> Vec<Cyclo> {
    file.mu
        .clone()
        .unwrap_or_else(|| vec![Cyclo::one(); file.element_names.len()])
}

fn equation_label(file: &InstanceFile) -> String {
    match resolved_equation(file) {
        Some(eq) => eq.to_string(),
        None => file.equation_tag.to_string(),
    }
}

fn instance_info(file: &InstanceFile, mu: Option<&[Cyclo]>) -> InstanceInfo {
    InstanceInfo {
        label: file.label.clone(),
        order: file.element_names.len(),
        elements: file.element_names.clone(),
        z0: file.name(file.z0).to_string(),
        equation: equation_label(file),
        morphism: file.morphism.as_ref().map(|(kind, map)| MorphismInfo {
            kind: match kind {
                MorphismKind::AntiInvolution => "tau".to_string(),
                MorphismKind::InvolutiveAutomorphism => "sigma".to_string(),
            },
            map: names(file, map),
        }),
        mu: mu.map(lits),
    }
}

fn build_instance(file: &InstanceFile) -> Result<Instance, String> {
    let s = build_semigroup(file)?;
    let m = build_morphism(file)
        .ok_or_else(|| "this command needs a 'morphism:' line in the instance file".to_string())?;
    let equation = resolved_equation(file).expect("morphism present");
    Instance::new(s, m, file.z0, effective_mu(file), equation)
        .map_err(|e| format!("instance rejected: {e}"))
}

pub fn run_validate(file: &InstanceFile, _flags: &Flags) -> (Report, i32) {
    let mut report = Report::new(instance_info(file, file.mu.as_deref()));
    let mut checks: Vec<String> = Vec::new();
    let mut ok = true;

    let semigroup = match build_semigroup(file) {
        Ok(s) => {
            checks.push(format!(
                "table: associative; identity: {}",
                s.identity().map_or("none".to_string(), |e| file.name(e).to_string())
            ));
            Some(s)
        }
        Err(e) => {
            checks.push(format!("table: {e}"));
            ok = false;
            None
        }
    };

    if let Some(s) = &semigroup {
        if s.is_central(file.z0) {
            checks.push(format!("z0: {} is central", file.name(file.z0)));
        } else {
            checks.push(format!("z0: {} is NOT central", file.name(file.z0)));
            ok = false;
        }
        if let Some(m) = build_morphism(file) {
            match validate_morphism(s, &m) {
                Ok(MorphismCheck::Valid) => {
                    checks.push(format!("morphism: valid {}", m.kind));
                    match build_instance(file) {
                        Ok(inst) => {
                            checks.push(format!("instance: ok ({})", inst.equation()));
                        }
                        Err(e) => {
                            checks.push(format!("instance: {e}"));
                            ok = false;
                        }
                    }
                }
                Ok(MorphismCheck::FirstViolation(v)) => {
                    checks.push(format!("morphism: violation {v:?}"));
                    ok = false;
                }
                Err(e) => {
                    checks.push(format!("morphism: {e}"));
                    ok = false;
                }
            }
        } else {
            checks.push("morphism: not supplied (solve/verify/crosscheck need one)".to_string());
            if let Some(mu) = &file.mu {
                match Character::new(s, mu.clone()) {
                    Ok(_) => checks.push("mu: multiplicative character".to_string()),
                    Err(e) => {
                        checks.push(format!("mu: {e}"));
                        ok = false;
                    }
                }
            }
        }
    }

    report.validation = Some(ValidationInfo { ok, checks });
    (report, if ok { 0 } else { 1 })
}

pub fn run_analyze(file: &InstanceFile, flags: &Flags) -> Result<(Report, i32), String> {
    let s = build_semigroup(file)?;
    let mut report = Report::new(instance_info(file, file.mu.as_deref()));
    let mut exit = 0;
    let mut analysis = AnalysisInfo {
        identity: s.identity().map(|e| file.name(e).to_string()),
        center: names(file, &s.center()),
        is_group: s.is_group(),
        morphism_check: None,
        anti_involutions: None,
        involutive_automorphisms: None,
        enumeration_note: None,
    };
    if let Some(m) = build_morphism(file) {
        analysis.morphism_check = Some(match validate_morphism(&s, &m) {
            Ok(MorphismCheck::Valid) => format!("valid {}", m.kind),
            Ok(MorphismCheck::FirstViolation(v)) => {
                exit = 1;
                format!("violation: {v:?}")
            }
            Err(e) => {
                exit = 1;
                format!("{e}")
            }
        });
    } else {
        let enumerate = |kind| -> Result<Vec<Vec<String>>, MorphismError> {
            Ok(enumerate_morphisms(&s, kind, flags.morphism_cap)?
                .into_iter()
                .map(|m| names(file, &m.map))
                .collect())
        };
        match (
            enumerate(MorphismKind::AntiInvolution),
            enumerate(MorphismKind::InvolutiveAutomorphism),
        ) {
            (Ok(anti), Ok(auto)) => {
                analysis.anti_involutions = Some(anti);
                analysis.involutive_automorphisms = Some(auto);
            }
            (Err(e), _) | (_, Err(e)) => {
                analysis.enumeration_note = Some(format!("skipped: {e}"));
            }
        }
    }
    report.analysis = Some(analysis);
    Ok((report, exit))
}

fn character_info(c: &Character, float: bool) -> CharacterInfo {
    CharacterInfo {
        values: lits(c.values()),
        zero_map: c.is_zero_map(),
        values_float: float.then(|| floats(c.values())),
    }
}

pub fn run_characters(file: &InstanceFile, flags: &Flags) -> Result<(Report, i32), String> {
    let s = build_semigroup(file)?;
    let mut report = Report::new(instance_info(file, file.mu.as_deref()));
    let chars = enumerate_characters(&s);
    report.characters = Some(
        chars
            .iter()
            .map(|c| character_info(c, flags.float))
            .collect(),
    );
    if let Some(m) = build_morphism(file) {
        if let Ok(MorphismCheck::Valid) = validate_morphism(&s, &m) {
            report.admissible_mus = Some(
                admissible_mus(&s, &m)
                    .iter()
                    .map(|c| character_info(c, flags.float))
                    .collect(),
            );
        } else {
            return Err("morphism in the file does not validate; run analyze".to_string());
        }
    }
    Ok((report, 0))
}

fn solution_info(
    file: &InstanceFile,
    inst: &Instance,
    sol: &veqlab_core::Solution,
    float: bool,
) -> SolutionInfo {
    let identities = check_identities(inst, &sol.values);
    let mut map = std::collections::BTreeMap::new();
    for check in &identities.checks {
        let outcome = match &check.outcome {
            CheckOutcome::Pass => "pass".to_string(),
            CheckOutcome::Fail { witness } => {
                format!("fail at ({})", names(file, witness).join(","))
            }
        };
        map.insert(check.name.to_string(), outcome);
    }
    let g = g_from_f(inst, &sol.values);
    let s = inst.semigroup();
    let abelian = (0..s.order())
        .all(|x| (0..s.order()).all(|y| g.values[s.mul(x, y)] == g.values[s.mul(y, x)]));
    SolutionInfo {
        values: lits(&sol.values),
        values_float: float.then(|| floats(&sol.values)),
        provenance: sol.provenance.as_ref().map(|c| lits(c.values())),
        identities: map,
        dalembert: DalembertInfo {
            values: lits(&g.values),
            values_float: float.then(|| floats(&g.values)),
            verified: g.verified,
            abelian,
        },
    }
}

pub fn run_solve(file: &InstanceFile, flags: &Flags) -> Result<(Report, i32), String> {
    let inst = build_instance(file)?;
    if !inst.equation().is_van_vleck() {
        return Err(format!(
            "solve enumerates van Vleck solutions, but the file resolves to {} \
             (use verify to check a supplied table)",
            inst.equation()
        ));
    }
    let (sols, tally) = enumerate_solutions_with_tally(&inst).map_err(|e| e.to_string())?;
    let mut report = Report::new(instance_info(file, Some(inst.mu().values())));
    report.candidates = Some(TallyInfo {
        nonzero_characters: tally.candidates,
        accepted: tally.accepted,
        rejected_zero_at_z0: tally.rejected_zero_at_z0,
        rejected_sign_condition: tally.rejected_sign_condition,
    });
    report.solutions = Some(
        sols.iter()
            .map(|sol| solution_info(file, &inst, sol, flags.float))
            .collect(),
    );
    if inst.equation() == Equation::VanVleckSigma {
        report.sigma_sign = Some(match resolve_sigma_sign(std::slice::from_ref(&inst)) {
            Ok(sign) => {
                let tally = sign.instances[0];
                SigmaSignInfo {
                    candidates: tally.candidates,
                    adopted_convention: SignConvention::TwistMinusChi.to_string(),
                    adopted_pass: tally.twist_minus_chi_pass,
                    opposite_pass: tally.chi_minus_twist_pass,
                    verdict: match sign.verdict {
                        SignVerdict::Unique(c) => format!("unique: {c}"),
                        SignVerdict::Mixed => "mixed".to_string(),
                    },
                }
            }
            Err(_) => SigmaSignInfo {
                candidates: 0,
                adopted_convention: SignConvention::TwistMinusChi.to_string(),
                adopted_pass: 0,
                opposite_pass: 0,
                verdict: "inconclusive on this instance (no candidates)".to_string(),
            },
        });
    }
    Ok((report, 0))
}

pub fn run_verify(file: &InstanceFile, _flags: &Flags) -> Result<(Report, i32), String> {
    let inst = build_instance(file)?;
    let f = file
        .f
        .as_ref()
        .ok_or_else(|| "verify needs an 'f:' line with one value per element".to_string())?;
    let mut report = Report::new(instance_info(file, Some(inst.mu().values())));
    let (verify, exit) = match verify_equation(&inst, f) {
        EquationCheck::Satisfied => (
            VerifyInfo {
                status: "ok".to_string(),
                at: None,
                lhs: None,
                rhs: None,
            },
            0,
        ),
        EquationCheck::FailsAt { x, y, lhs, rhs } => (
            VerifyInfo {
                status: "violation".to_string(),
                at: Some([file.name(x).to_string(), file.name(y).to_string()]),
                lhs: Some(lhs.to_string()),
                rhs: Some(rhs.to_string()),
            },
            1,
        ),
    };
    report.verify = Some(verify);
    Ok((report, exit))
}

pub fn run_crosscheck(file: &InstanceFile, flags: &Flags) -> Result<(Report, i32), String> {
    let inst = build_instance(file)?;
    if !inst.equation().is_van_vleck() {
        return Err(format!(
            "crosscheck needs a van Vleck instance, got {}",
            inst.equation()
        ));
    }
    let (sols, _) = enumerate_solutions_with_tally(&inst).map_err(|e| e.to_string())?;
    let opts = BruteForceOptions {
        grid_order: flags.grid_order,
        order_cap: flags.brute_cap,
    };
    let brute = brute_force_solutions(&inst, &opts).map_err(|e| e.to_string())?;

    let n = inst.semigroup().order();
    let grid_order = flags
        .grid_order
        .unwrap_or_else(|| default_grid_order(inst.semigroup()));

    // expected set: the characterized tables plus the zero table
    let mut expected: Vec<Vec<Cyclo>> = sols.iter().map(|s| s.values.clone()).collect();
    expected.push(vec![Cyclo::zero(); n]);
    let matched = table_sets_equal(expected, brute.clone(), n);

    let mut report = Report::new(instance_info(file, Some(inst.mu().values())));
    report.crosscheck = Some(CrosscheckInfo {
        grid_order,
        characterized: sols.len(),
        brute_nonzero: brute
            .iter()
            .filter(|t| !t.iter().all(Cyclo::is_zero))
            .count(),
        brute_total: brute.len(),
        matched,
    });
    Ok((report, if matched { 0 } else { 2 }))
}

/// Set equality of value tables, after promoting everything into one field so
/// the lexicographic sort is a total order.
fn table_sets_equal(a: Vec<Vec<Cyclo>>, b: Vec<Vec<Cyclo>>, n: usize) -> bool {
    let norm = |tables: Vec<Vec<Cyclo>>| -> Vec<Vec<Cyclo>> {
        let flat: Vec<Cyclo> = tables.into_iter().flatten().collect();
        let flat = promote_uniform(flat);
        let mut tables: Vec<Vec<Cyclo>> = flat.chunks(n).map(<[Cyclo]>::to_vec).collect();
        tables.sort_by(|x, y| lex_cmp_tables(x, y));
        tables.dedup();
        tables
    };
    norm(a) == norm(b)
}
