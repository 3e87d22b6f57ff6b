//! Involutive maps on a finite semigroup.
//!
//! Two kinds are supported: anti-involutions τ with τ(xy) = τ(y)τ(x), and
//! involutive automorphisms σ with σ(xy) = σ(x)σ(y); both satisfy m∘m = id.
//! On an abelian carrier the same permutation can validate as either kind.

use itertools::Itertools;
use thiserror::Error;

use crate::semigroup::FiniteSemigroup;

/// Which composition law the map must respect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismKind {
    /// m(xy) = m(y)m(x)
    AntiInvolution,
    /// m(xy) = m(x)m(y)
    InvolutiveAutomorphism,
}

impl std::fmt::Display for MorphismKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MorphismKind::AntiInvolution => write!(f, "anti-involution"),
            MorphismKind::InvolutiveAutomorphism => write!(f, "involutive automorphism"),
        }
    }
}

/// A candidate involutive (anti)morphism, stored as images in element order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub kind: MorphismKind,
    pub map: Vec<usize>,
}

impl Morphism {
    pub fn new(kind: MorphismKind, map: Vec<usize>) -> Self {
        Morphism { kind, map }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("map of length {found} on {order} elements is not a permutation")]
    NotAPermutation { order: usize, found: usize },
    #[error("enumeration capped at order {cap}, semigroup has order {order}")]
    OrderCapExceeded { order: usize, cap: usize },
}

/// First law failure found by [`validate_morphism`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismViolation {
    /// m(m(x)) != x
    NotInvolutive { x: usize },
    /// The kind's composition law fails at the pair (x, y).
    LawFailsAt { x: usize, y: usize },
}

/// Outcome of an exhaustive morphism check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismCheck {
    Valid,
    FirstViolation(MorphismViolation),
}

impl MorphismCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, MorphismCheck::Valid)
    }
}

/// Check involutivity and the kind's law over all elements and pairs.
///
/// Involutivity is scanned first in element order, then the law in
/// lexicographic pair order, so the reported violation is deterministic.
pub fn validate_morphism(
    s: &FiniteSemigroup,
    m: &Morphism,
) -> Result<MorphismCheck, MorphismError> {
    let n = s.order();
    let mut seen = vec![false; n];
    if m.map.len() != n || m.map.iter().any(|&i| i >= n) {
        return Err(MorphismError::NotAPermutation {
            order: n,
            found: m.map.len(),
        });
    }
    for &i in &m.map {
        if seen[i] {
            return Err(MorphismError::NotAPermutation { order: n, found: n });
        }
        seen[i] = true;
    }
    for x in 0..n {
        if m.apply(m.apply(x)) != x {
            return Ok(MorphismCheck::FirstViolation(
                MorphismViolation::NotInvolutive { x },
            ));
        }
    }
    for x in 0..n {
        for y in 0..n {
            let lhs = m.apply(s.mul(x, y));
            let rhs = match m.kind {
                MorphismKind::AntiInvolution => s.mul(m.apply(y), m.apply(x)),
                MorphismKind::InvolutiveAutomorphism => s.mul(m.apply(x), m.apply(y)),
            };
            if lhs != rhs {
                return Ok(MorphismCheck::FirstViolation(
                    MorphismViolation::LawFailsAt { x, y },
                ));
            }
        }
    }
    Ok(MorphismCheck::Valid)
}

pub const DEFAULT_MORPHISM_CAP: usize = 8;

/// All permutations of the carrier that validate as `kind`, in lexicographic
/// map order. Above `cap` the n! scan is refused and maps must be supplied
/// explicitly.
pub fn enumerate_morphisms(
    s: &FiniteSemigroup,
    kind: MorphismKind,
    cap: usize,
) -> Result<Vec<Morphism>, MorphismError> {
    let n = s.order();
    if n > cap {
        return Err(MorphismError::OrderCapExceeded { order: n, cap });
    }
    let mut out = Vec::new();
    for perm in (0..n).permutations(n) {
        let m = Morphism::new(kind, perm);
        if validate_morphism(s, &m)
            .expect("permutations are permutations")
            .is_valid()
        {
            out.push(m);
        }
    }
    Ok(out)
}

/// The group-inversion map x -> x^{-1}, when the carrier is a group.
pub fn inversion_map(s: &FiniteSemigroup) -> Option<Vec<usize>> {
    (0..s.order())
        .map(|x| s.group_inverse(x))
        .collect::<Option<Vec<_>>>()
}
