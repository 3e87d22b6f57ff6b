//! The functional-equation engine.
//!
//! An [`Instance`] fixes a carrier G, an involutive (anti)morphism m, a
//! central element z₀, an admissible twist μ, and one of four equations:
//!
//! ```text
//! van Vleck, anti-involution τ:   μ(y)·f(x·τ(y)·z₀) − f(x·y·z₀) = 2·f(x)·f(y)
//! van Vleck, automorphism σ:      μ(y)·f(σ(y)·x·z₀) − f(x·y·z₀) = 2·f(x)·f(y)
//! d'Alembert, anti-involution τ:  g(x·y) + μ(y)·g(x·τ(y)) = 2·g(x)·g(y)
//! d'Alembert, automorphism σ:     g(x·y) + μ(y)·g(σ(y)·x) = 2·g(x)·g(y)
//! ```
//!
//! Every check here is an exhaustive scan over all n² pairs in exact
//! cyclotomic arithmetic; there are no tolerances anywhere. Nonzero van Vleck
//! solutions are produced in closed form from characters χ with χ(z₀) ≠ 0 and
//! μ(z₀)χ(m(z₀)) = −χ(z₀), as f = χ(z₀)·(μ·χ∘m − χ)/2, and every produced
//! table is re-verified against the equation it claims to solve.

mod brute;
mod identities;

pub use brute::{
    brute_force_solutions, default_grid_order, BruteForceOptions, DEFAULT_BRUTE_ORDER_CAP,
};
pub use identities::{
    check_identities, CheckOutcome, IdentityCheck, IdentityName, IdentityReport,
};

use thiserror::Error;

use crate::characters::{enumerate_characters, Character, CharacterError};
use crate::cyclo::{lex_cmp_tables, one_half, Cyclo};
use crate::morphism::{validate_morphism, Morphism, MorphismCheck, MorphismKind, MorphismViolation};
use crate::semigroup::FiniteSemigroup;

/// Which of the four functional equations an instance carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equation {
    VanVleckTau,
    VanVleckSigma,
    DAlembertTau,
    DAlembertSigma,
}

impl Equation {
    pub fn is_van_vleck(self) -> bool {
        matches!(self, Equation::VanVleckTau | Equation::VanVleckSigma)
    }

    /// The morphism kind the equation is stated with.
    pub fn required_kind(self) -> MorphismKind {
        match self {
            Equation::VanVleckTau | Equation::DAlembertTau => MorphismKind::AntiInvolution,
            Equation::VanVleckSigma | Equation::DAlembertSigma => {
                MorphismKind::InvolutiveAutomorphism
            }
        }
    }

    /// The σ-variants are stated on monoids.
    pub fn requires_identity(self) -> bool {
        matches!(self, Equation::VanVleckSigma | Equation::DAlembertSigma)
    }

    /// The d'Alembert equation reached through g(x) = f(x·z₀)/f(z₀).
    pub fn dalembert_counterpart(self) -> Equation {
        match self {
            Equation::VanVleckTau | Equation::DAlembertTau => Equation::DAlembertTau,
            Equation::VanVleckSigma | Equation::DAlembertSigma => Equation::DAlembertSigma,
        }
    }
}

impl std::fmt::Display for Equation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Equation::VanVleckTau => "van-vleck-tau",
            Equation::VanVleckSigma => "van-vleck-sigma",
            Equation::DAlembertTau => "dalembert-tau",
            Equation::DAlembertSigma => "dalembert-sigma",
        };
        write!(f, "{name}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("morphism is not a permutation of the carrier")]
    MorphismNotAPermutation,
    #[error("morphism fails its law: {0:?}")]
    MorphismLawViolation(MorphismViolation),
    #[error("{equation} needs an {expected}, morphism is an {found}")]
    MorphismKindMismatch {
        equation: Equation,
        expected: MorphismKind,
        found: MorphismKind,
    },
    #[error("{equation} is stated on monoids, but the semigroup has no identity")]
    MonoidRequired { equation: Equation },
    #[error("z0 index {z0} out of range for order {order}")]
    Z0OutOfRange { z0: usize, order: usize },
    #[error("z0 = {z0} is not central")]
    Z0NotCentral { z0: usize },
    #[error("morphism image m(z0) = {image} of z0 = {z0} is not central")]
    MorphismImageOfZ0NotCentral { z0: usize, image: usize },
    #[error("mu is not a character: {0}")]
    MuInvalid(#[from] CharacterError),
    #[error("mu is not admissible: mu(x*m(x)) != 1 at x = {element}")]
    MuNotAdmissible { element: usize },
}

/// One fully validated functional-equation problem.
#[derive(Debug, Clone)]
pub struct Instance {
    semigroup: FiniteSemigroup,
    morphism: Morphism,
    z0: usize,
    mu: Character,
    equation: Equation,
}

impl Instance {
    /// Validate all standing hypotheses. Failures are reported in a fixed
    /// order: morphism validity, kind/monoid fit, centrality of z₀ and of
    /// m(z₀), then μ (character law, admissibility).
    ///
    /// Centrality of m(z₀) is in fact implied by z₀ being central once the
    /// morphism law holds (apply m to z₀·m(x) = m(x)·z₀), but it is checked
    /// and reported separately rather than assumed.
    pub fn new(
        semigroup: FiniteSemigroup,
        morphism: Morphism,
        z0: usize,
        mu_values: Vec<Cyclo>,
        equation: Equation,
    ) -> Result<Self, InstanceError> {
        match validate_morphism(&semigroup, &morphism) {
            Err(_) => return Err(InstanceError::MorphismNotAPermutation),
            Ok(MorphismCheck::FirstViolation(v)) => {
                return Err(InstanceError::MorphismLawViolation(v))
            }
            Ok(MorphismCheck::Valid) => {}
        }
        if morphism.kind != equation.required_kind() {
            return Err(InstanceError::MorphismKindMismatch {
                equation,
                expected: equation.required_kind(),
                found: morphism.kind,
            });
        }
        if equation.requires_identity() && semigroup.identity().is_none() {
            return Err(InstanceError::MonoidRequired { equation });
        }
        if z0 >= semigroup.order() {
            return Err(InstanceError::Z0OutOfRange {
                z0,
                order: semigroup.order(),
            });
        }
        if !semigroup.is_central(z0) {
            return Err(InstanceError::Z0NotCentral { z0 });
        }
        let image = morphism.apply(z0);
        if !semigroup.is_central(image) {
            return Err(InstanceError::MorphismImageOfZ0NotCentral { z0, image });
        }
        let mu = Character::new(&semigroup, mu_values)?;
        for x in 0..semigroup.order() {
            if !mu.value(semigroup.mul(x, morphism.apply(x))).is_one() {
                return Err(InstanceError::MuNotAdmissible { element: x });
            }
        }
        Ok(Instance {
            semigroup,
            morphism,
            z0,
            mu,
            equation,
        })
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    pub fn z0(&self) -> usize {
        self.z0
    }

    pub fn mu(&self) -> &Character {
        &self.mu
    }

    pub fn equation(&self) -> Equation {
        self.equation
    }

    /// The same data under the matching d'Alembert equation.
    pub fn dalembert(&self) -> Instance {
        Instance {
            equation: self.equation.dalembert_counterpart(),
            ..self.clone()
        }
    }
}

/// Result of scanning all n² pairs of one equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquationCheck {
    Satisfied,
    /// First pair in lexicographic (x, y) order where the two sides differ.
    FailsAt {
        x: usize,
        y: usize,
        lhs: Cyclo,
        rhs: Cyclo,
    },
}

impl EquationCheck {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, EquationCheck::Satisfied)
    }
}

/// Left and right side of the instance's equation at one pair.
#[allow(clippy::too_many_arguments)]
fn equation_sides(
    s: &FiniteSemigroup,
    m: &Morphism,
    mu: &Character,
    z0: usize,
    equation: Equation,
    f: &[Cyclo],
    x: usize,
    y: usize,
) -> (Cyclo, Cyclo) {
    let lhs = match equation {
        Equation::VanVleckTau => {
            let a = s.mul(s.mul(x, m.apply(y)), z0);
            let b = s.mul(s.mul(x, y), z0);
            &(mu.value(y) * &f[a]) - &f[b]
        }
        Equation::VanVleckSigma => {
            let a = s.mul(s.mul(m.apply(y), x), z0);
            let b = s.mul(s.mul(x, y), z0);
            &(mu.value(y) * &f[a]) - &f[b]
        }
        Equation::DAlembertTau => {
            let a = s.mul(x, y);
            let b = s.mul(x, m.apply(y));
            &f[a] + &(mu.value(y) * &f[b])
        }
        Equation::DAlembertSigma => {
            let a = s.mul(x, y);
            let b = s.mul(m.apply(y), x);
            &f[a] + &(mu.value(y) * &f[b])
        }
    };
    let rhs = (&f[x] * &f[y]).scale(&crate::cyclo::Rational::from_integer(2.into()));
    (lhs, rhs)
}

fn verify_table(
    s: &FiniteSemigroup,
    m: &Morphism,
    mu: &Character,
    z0: usize,
    equation: Equation,
    f: &[Cyclo],
) -> EquationCheck {
    assert_eq!(f.len(), s.order(), "value table must cover the carrier");
    for x in 0..s.order() {
        for y in 0..s.order() {
            let (lhs, rhs) = equation_sides(s, m, mu, z0, equation, f, x, y);
            if lhs != rhs {
                return EquationCheck::FailsAt { x, y, lhs, rhs };
            }
        }
    }
    EquationCheck::Satisfied
}

/// Check the instance's equation at every pair, in exact arithmetic.
pub fn verify_equation(inst: &Instance, f: &[Cyclo]) -> EquationCheck {
    verify_table(
        &inst.semigroup,
        &inst.morphism,
        &inst.mu,
        inst.z0,
        inst.equation,
        f,
    )
}

/// A value table together with where it came from and whether it survived
/// exhaustive verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub values: Vec<Cyclo>,
    /// A generating character, when the table came out of the closed form;
    /// the lexicographically least of the generating pair {χ, μ·χ∘m}.
    pub provenance: Option<Character>,
    pub verified: bool,
}

/// Why the closed form rejected a candidate character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateRejection {
    /// χ(z₀) = 0.
    ZeroAtZ0,
    /// μ(z₀)·χ(m(z₀)) ≠ −χ(z₀).
    SignCondition,
}

impl std::fmt::Display for CandidateRejection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CandidateRejection::ZeroAtZ0 => write!(f, "chi(z0) = 0"),
            CandidateRejection::SignCondition => write!(f, "mu(z0)*chi(m(z0)) != -chi(z0)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("operation needs a van Vleck instance, got {0}")]
    WrongEquationKind(Equation),
    #[error(
        "brute-force grid of about {assignments} assignments (order {order}) exceeds the cap {cap}"
    )]
    GridTooLarge {
        assignments: u128,
        order: usize,
        cap: usize,
    },
    #[error("no instance in the corpus admits a nonzero closed-form candidate")]
    InconclusiveCorpus,
}

/// Apply the closed form to one character.
///
/// Accepts χ iff χ(z₀) ≠ 0 and μ(z₀)·χ(m(z₀)) = −χ(z₀), and then returns
/// f(x) = χ(z₀)·(μ(x)·χ(m(x)) − χ(x))/2 with all values promoted to one
/// ambient order. The table is verified before being returned.
pub fn try_construct_solution(
    inst: &Instance,
    chi: &Character,
) -> Result<Solution, CandidateRejection> {
    if !inst.equation.is_van_vleck() {
        // the closed form is for the van Vleck shapes only
        panic!("try_construct_solution needs a van Vleck instance");
    }
    let s = &inst.semigroup;
    let m = &inst.morphism;
    let mu = &inst.mu;
    let z0 = inst.z0;
    let chi_z0 = chi.value(z0);
    if chi_z0.is_zero() {
        return Err(CandidateRejection::ZeroAtZ0);
    }
    if mu.value(z0) * chi.value(m.apply(z0)) != -chi_z0 {
        return Err(CandidateRejection::SignCondition);
    }
    let half = one_half();
    let values: Vec<Cyclo> = (0..s.order())
        .map(|x| {
            let twisted = mu.value(x) * chi.value(m.apply(x));
            (chi_z0 * &(&twisted - chi.value(x))).scale(&half)
        })
        .collect();
    let values = promote_uniform(values);
    let verified = verify_equation(inst, &values).is_satisfied();
    debug_assert!(
        values[z0] == mu.value(z0) * chi.value(s.mul(z0, m.apply(z0))),
        "f(z0) must equal mu(z0)*chi(z0*m(z0))"
    );
    Ok(Solution {
        values,
        provenance: Some(chi.clone()),
        verified,
    })
}

/// Option-shaped view of [`try_construct_solution`].
pub fn construct_solution(inst: &Instance, chi: &Character) -> Option<Solution> {
    try_construct_solution(inst, chi).ok()
}

/// How the candidate characters fared inside [`enumerate_solutions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CandidateTally {
    /// Nonzero characters considered.
    pub candidates: usize,
    pub rejected_zero_at_z0: usize,
    pub rejected_sign_condition: usize,
    /// Accepted characters (before merging generating pairs).
    pub accepted: usize,
}

/// All nonzero solutions of a van Vleck instance, via the closed form over
/// every nonzero character, deduplicated by exact value table and sorted.
pub fn enumerate_solutions_with_tally(
    inst: &Instance,
) -> Result<(Vec<Solution>, CandidateTally), EngineError> {
    if !inst.equation.is_van_vleck() {
        return Err(EngineError::WrongEquationKind(inst.equation));
    }
    let mut tally = CandidateTally::default();
    let mut solutions: Vec<Solution> = Vec::new();
    for chi in enumerate_characters(&inst.semigroup) {
        if chi.is_zero_map() {
            continue;
        }
        tally.candidates += 1;
        match try_construct_solution(inst, &chi) {
            Err(CandidateRejection::ZeroAtZ0) => tally.rejected_zero_at_z0 += 1,
            Err(CandidateRejection::SignCondition) => tally.rejected_sign_condition += 1,
            Ok(sol) => {
                assert!(
                    sol.verified,
                    "closed form produced a table failing its own equation"
                );
                tally.accepted += 1;
                // characters arrive sorted, so the first generator seen for a
                // table is the lexicographically least one
                if !solutions.iter().any(|s| s.values == sol.values) {
                    solutions.push(sol);
                }
            }
        }
    }
    solutions.sort_by(|a, b| lex_cmp_tables(&a.values, &b.values));
    Ok((solutions, tally))
}

pub fn enumerate_solutions(inst: &Instance) -> Result<Vec<Solution>, EngineError> {
    enumerate_solutions_with_tally(inst).map(|(sols, _)| sols)
}

/// The d'Alembert bridge g(x) = f(x·z₀)/f(z₀) of a nonzero van Vleck
/// solution. The output is verified against the matching d'Alembert equation.
///
/// Dividing by f(z₀) is safe for genuine solutions, which never vanish at z₀;
/// the assertion guards against misuse.
pub fn g_from_f(inst: &Instance, f: &[Cyclo]) -> Solution {
    assert!(
        inst.equation.is_van_vleck(),
        "g_from_f needs a van Vleck instance"
    );
    let s = &inst.semigroup;
    let f_z0 = &f[inst.z0];
    assert!(!f_z0.is_zero(), "f(z0) = 0: not a nonzero solution");
    let inv = f_z0.inverse().expect("nonzero value is invertible");
    let values: Vec<Cyclo> = (0..s.order())
        .map(|x| &f[s.mul(x, inst.z0)] * &inv)
        .collect();
    let values = promote_uniform(values);
    let counterpart = inst.dalembert();
    let verified = verify_equation(&counterpart, &values).is_satisfied();
    Solution {
        values,
        provenance: None,
        verified,
    }
}

/// The d'Alembert table g = (χ + μ·χ∘m)/2 of one character, verified against
/// the d'Alembert equation matching the morphism kind.
pub fn dalembert_from_character(
    s: &FiniteSemigroup,
    chi: &Character,
    mu: &Character,
    m: &Morphism,
) -> Solution {
    let half = one_half();
    let values: Vec<Cyclo> = (0..s.order())
        .map(|x| (&(mu.value(x) * chi.value(m.apply(x))) + chi.value(x)).scale(&half))
        .collect();
    let values = promote_uniform(values);
    let equation = match m.kind {
        MorphismKind::AntiInvolution => Equation::DAlembertTau,
        MorphismKind::InvolutiveAutomorphism => Equation::DAlembertSigma,
    };
    let verified = verify_table(s, m, mu, 0, equation, &values).is_satisfied();
    Solution {
        values,
        provenance: Some(chi.clone()),
        verified,
    }
}

/// Promote every value of a table into the lcm of the orders present, so the
/// table can be compared and printed uniformly.
pub fn promote_uniform(values: Vec<Cyclo>) -> Vec<Cyclo> {
    use num_integer::Integer;
    let order = values
        .iter()
        .fold(1u64, |acc, v| acc.lcm(&(v.order() as u64)));
    let order = u32::try_from(order).expect("ambient order overflow");
    values
        .into_iter()
        .map(|v| v.promote(order).expect("lcm is a multiple"))
        .collect()
}

/// The two sign conventions the closed form could carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    /// f = χ(z₀)·(μ·χ∘m − χ)/2 — the convention this crate implements.
    TwistMinusChi,
    /// f = χ(z₀)·(χ − μ·χ∘m)/2.
    ChiMinusTwist,
}

impl std::fmt::Display for SignConvention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SignConvention::TwistMinusChi => write!(f, "chi(z0)*(mu*chi∘m - chi)/2"),
            SignConvention::ChiMinusTwist => write!(f, "chi(z0)*(chi - mu*chi∘m)/2"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignVerdict {
    /// Exactly one convention satisfies the equation on every candidate.
    Unique(SignConvention),
    /// Neither convention wins uniformly.
    Mixed,
}

/// Per-instance outcome of testing both conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct InstanceSignTally {
    /// Characters passing both side conditions, i.e. tables tested.
    pub candidates: usize,
    pub twist_minus_chi_pass: usize,
    pub chi_minus_twist_pass: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignReport {
    pub instances: Vec<InstanceSignTally>,
    pub verdict: SignVerdict,
}

/// Decide empirically which sign the σ-variant closed form must carry: both
/// candidate tables (they differ by a global sign) are run through the full
/// verifier on every instance of the corpus.
pub fn resolve_sigma_sign(corpus: &[Instance]) -> Result<SignReport, EngineError> {
    let mut instances = Vec::with_capacity(corpus.len());
    let mut total = InstanceSignTally::default();
    for inst in corpus {
        if inst.equation != Equation::VanVleckSigma {
            return Err(EngineError::WrongEquationKind(inst.equation));
        }
        let mut tally = InstanceSignTally::default();
        for chi in enumerate_characters(&inst.semigroup) {
            if chi.is_zero_map() {
                continue;
            }
            let Ok(sol) = try_construct_solution(inst, &chi) else {
                continue;
            };
            tally.candidates += 1;
            if verify_equation(inst, &sol.values).is_satisfied() {
                tally.twist_minus_chi_pass += 1;
            }
            let flipped: Vec<Cyclo> = sol.values.iter().map(|v| -v).collect();
            if verify_equation(inst, &flipped).is_satisfied() {
                tally.chi_minus_twist_pass += 1;
            }
        }
        total.candidates += tally.candidates;
        total.twist_minus_chi_pass += tally.twist_minus_chi_pass;
        total.chi_minus_twist_pass += tally.chi_minus_twist_pass;
        instances.push(tally);
    }
    if total.candidates == 0 {
        return Err(EngineError::InconclusiveCorpus);
    }
    let verdict = if total.twist_minus_chi_pass == total.candidates
        && total.chi_minus_twist_pass == 0
    {
        SignVerdict::Unique(SignConvention::TwistMinusChi)
    } else if total.chi_minus_twist_pass == total.candidates && total.twist_minus_chi_pass == 0 {
        SignVerdict::Unique(SignConvention::ChiMinusTwist)
    } else {
        SignVerdict::Mixed
    };
    Ok(SignReport { instances, verdict })
}
