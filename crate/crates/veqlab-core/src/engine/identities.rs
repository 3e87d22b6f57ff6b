//! The ladder of identities every nonzero van Vleck solution satisfies.
//!
//! Each identity is checked exhaustively and reported with its first
//! counterexample, so a failing table pinpoints where the structure breaks.
//! Applicability varies: the f(e) = 0 check needs the σ-shaped equation, and
//! the two extra laws need a group carrier with the inversion morphism.

use crate::cyclo::Cyclo;
use crate::morphism::inversion_map;

use super::{g_from_f, Equation, Instance};

/// Names for the report entries, in the order they are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityName {
    /// f(x) = −μ(x)·f(m(x))
    Oddness,
    /// f(z₀) ≠ 0
    NonzeroAtZ0,
    /// f(z₀²) = 0
    VanishesAtZ0Squared,
    /// f(x·m(z₀)·z₀) = μ(m(z₀))·f(x)·f(z₀)
    TranslateLaw,
    /// f(x·z₀²) = −f(z₀)·f(x)
    SquareLaw,
    /// μ(x)·f(m(x)·z₀) = f(x·z₀)
    Symmetry,
    /// f(x·m(x)) = 0
    PairVanishing,
    /// f(e) = 0 (σ-shaped equations, which act on monoids)
    VanishesAtIdentity,
    /// f(z₀) = μ(z₀) (group carrier, inversion morphism)
    GroupValueAtZ0,
    /// f(x·z₀⁴) = μ(z₀)²·f(x) (group carrier, inversion morphism)
    GroupFourthPowerLaw,
    /// d(z₀) = 2g(z₀)² − g(z₀²) equals f(z₀), with g the d'Alembert bridge
    DalembertDiagnostic,
}

impl std::fmt::Display for IdentityName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            IdentityName::Oddness => "oddness",
            IdentityName::NonzeroAtZ0 => "f(z0)-nonzero",
            IdentityName::VanishesAtZ0Squared => "f(z0^2)-zero",
            IdentityName::TranslateLaw => "translate-law",
            IdentityName::SquareLaw => "square-law",
            IdentityName::Symmetry => "symmetry",
            IdentityName::PairVanishing => "pair-vanishing",
            IdentityName::VanishesAtIdentity => "f(e)-zero",
            IdentityName::GroupValueAtZ0 => "group-f(z0)",
            IdentityName::GroupFourthPowerLaw => "group-z0^4-law",
            IdentityName::DalembertDiagnostic => "dalembert-diagnostic",
        };
        write!(f, "{name}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    /// Elements witnessing the first failure, in scan order.
    Fail { witness: Vec<usize> },
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: IdentityName,
    pub outcome: CheckOutcome,
}

/// Every applicable identity with its outcome, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.outcome.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.outcome.passed())
    }
}

fn scan_elements<P: FnMut(usize) -> bool>(n: usize, mut holds: P) -> CheckOutcome {
    match (0..n).find(|&x| !holds(x)) {
        None => CheckOutcome::Pass,
        Some(x) => CheckOutcome::Fail { witness: vec![x] },
    }
}

/// Evaluate the full identity ladder for a value table of a van Vleck
/// instance. Meant for nonzero verified solutions; on anything else the
/// report simply records which identities break.
pub fn check_identities(inst: &Instance, f: &[Cyclo]) -> IdentityReport {
    let s = inst.semigroup();
    let m = inst.morphism();
    let mu = inst.mu();
    let z0 = inst.z0();
    let n = s.order();
    assert_eq!(f.len(), n, "value table must cover the carrier");

    let z0_sq = s.mul(z0, z0);
    let m_z0 = m.apply(z0);
    let mut checks = Vec::new();
    let mut push = |name: IdentityName, outcome: CheckOutcome| {
        checks.push(IdentityCheck { name, outcome });
    };

    push(
        IdentityName::Oddness,
        scan_elements(n, |x| f[x] == -&(mu.value(x) * &f[m.apply(x)])),
    );
    push(
        IdentityName::NonzeroAtZ0,
        if f[z0].is_zero() {
            CheckOutcome::Fail { witness: vec![z0] }
        } else {
            CheckOutcome::Pass
        },
    );
    push(
        IdentityName::VanishesAtZ0Squared,
        if f[z0_sq].is_zero() {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail {
                witness: vec![z0_sq],
            }
        },
    );
    push(
        IdentityName::TranslateLaw,
        scan_elements(n, |x| {
            f[s.mul(s.mul(x, m_z0), z0)] == (mu.value(m_z0) * &f[x]) * f[z0].clone()
        }),
    );
    push(
        IdentityName::SquareLaw,
        scan_elements(n, |x| f[s.mul(x, z0_sq)] == -&(&f[z0] * &f[x])),
    );
    push(
        IdentityName::Symmetry,
        scan_elements(n, |x| {
            mu.value(x) * &f[s.mul(m.apply(x), z0)] == f[s.mul(x, z0)]
        }),
    );
    push(
        IdentityName::PairVanishing,
        scan_elements(n, |x| f[s.mul(x, m.apply(x))].is_zero()),
    );
    if inst.equation() == Equation::VanVleckSigma {
        let e = s
            .identity()
            .expect("sigma instances are validated as monoids");
        push(
            IdentityName::VanishesAtIdentity,
            if f[e].is_zero() {
                CheckOutcome::Pass
            } else {
                CheckOutcome::Fail { witness: vec![e] }
            },
        );
    }
    if s.is_group() && inversion_map(s).as_deref() == Some(&m.map[..]) {
        push(
            IdentityName::GroupValueAtZ0,
            if &f[z0] == mu.value(z0) {
                CheckOutcome::Pass
            } else {
                CheckOutcome::Fail { witness: vec![z0] }
            },
        );
        let z0_4 = s.mul(z0_sq, z0_sq);
        let mu_z0_sq = mu.value(z0) * mu.value(z0);
        push(
            IdentityName::GroupFourthPowerLaw,
            scan_elements(n, |x| f[s.mul(x, z0_4)] == &mu_z0_sq * &f[x]),
        );
    }
    push(IdentityName::DalembertDiagnostic, {
        if f[z0].is_zero() {
            CheckOutcome::Fail { witness: vec![z0] }
        } else {
            let g = g_from_f(inst, f).values;
            let g_z0 = &g[z0];
            let g_z0_sq = &g[z0_sq];
            let d = &(g_z0 * g_z0).scale(&crate::cyclo::Rational::from_integer(2.into())) - g_z0_sq;
            if d == f[z0] {
                CheckOutcome::Pass
            } else {
                CheckOutcome::Fail { witness: vec![z0] }
            }
        }
    });

    IdentityReport { checks }
}
