//! Multiplicative functions G → ℂ on a finite semigroup.
//!
//! Finiteness pins the possible values: the powers of any x eventually cycle
//! with some period p, so χ(x) is 0 or a p-th root of unity. Enumeration
//! searches exactly that grid, element by element, propagating forced values
//! through the Cayley table, and the ambient field ℚ(ζ_N) with N = lcm of all
//! periods holds every candidate exactly.

use std::cmp::Ordering;

use num_integer::Integer;
use thiserror::Error;

use crate::cyclo::{lex_cmp_tables, Cyclo};
use crate::morphism::Morphism;
use crate::semigroup::FiniteSemigroup;

/// Index and period of the cyclic subsemigroup generated by one element:
/// powers x, x², … enter a cycle of length `period` at exponent `index`.
/// Group elements always have index 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementProfile {
    pub element: usize,
    pub index: usize,
    pub period: usize,
}

/// Per-element (index, period) data for the powers of each element.
pub fn element_profiles(s: &FiniteSemigroup) -> Vec<ElementProfile> {
    let n = s.order();
    (0..n)
        .map(|x| {
            // exponent at which each power was first seen
            let mut first_seen = vec![usize::MAX; n];
            let mut p = x;
            let mut t = 1usize;
            loop {
                if first_seen[p] != usize::MAX {
                    return ElementProfile {
                        element: x,
                        index: first_seen[p],
                        period: t - first_seen[p],
                    };
                }
                first_seen[p] = t;
                p = s.mul(p, x);
                t += 1;
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("value table has length {found}, semigroup has order {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("not multiplicative at ({x},{y}): value at product differs from the product of values")]
    NotMultiplicative { x: usize, y: usize },
    #[error("value at element {element} is neither zero nor a root of unity")]
    NotRootOfUnity { element: usize },
}

/// A multiplicative function with values in {0} ∪ roots of unity, all
/// represented in one ambient field ℚ(ζ_N).
#[derive(Debug, Clone)]
pub struct Character {
    values: Vec<Cyclo>,
    order: u32,
}

impl PartialEq for Character {
    /// Value equality; the ambient order is a representation detail.
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl Eq for Character {}

impl Character {
    /// Validate multiplicativity against the Cayley table and the value shape,
    /// then promote all values into the common ambient order.
    pub fn new(s: &FiniteSemigroup, values: Vec<Cyclo>) -> Result<Self, CharacterError> {
        let n = s.order();
        if values.len() != n {
            return Err(CharacterError::WrongLength {
                expected: n,
                found: values.len(),
            });
        }
        for (x, v) in values.iter().enumerate() {
            if !v.is_zero() && !v.is_root_of_unity() {
                return Err(CharacterError::NotRootOfUnity { element: x });
            }
        }
        for x in 0..n {
            for y in 0..n {
                if values[s.mul(x, y)] != &values[x] * &values[y] {
                    return Err(CharacterError::NotMultiplicative { x, y });
                }
            }
        }
        let order = values
            .iter()
            .fold(1u64, |acc, v| acc.lcm(&(v.order() as u64)));
        let order = u32::try_from(order).expect("ambient order overflow");
        let values = values
            .into_iter()
            .map(|v| v.promote(order).expect("lcm is a multiple"))
            .collect();
        Ok(Character { values, order })
    }

    /// The constant function 1 (always a character, always admissible).
    pub fn trivial(s: &FiniteSemigroup) -> Self {
        Character {
            values: vec![Cyclo::one(); s.order()],
            order: 1,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn values(&self) -> &[Cyclo] {
        &self.values
    }

    #[inline]
    pub fn value(&self, x: usize) -> &Cyclo {
        &self.values[x]
    }

    pub fn is_zero_map(&self) -> bool {
        self.values.iter().all(Cyclo::is_zero)
    }

    /// True when no value is zero (all admissible μ are of this form).
    pub fn is_nowhere_zero(&self) -> bool {
        self.values.iter().all(|v| !v.is_zero())
    }

    pub fn lex_cmp(&self, other: &Character) -> Ordering {
        lex_cmp_tables(&self.values, &other.values)
    }
}

/// All multiplicative functions on `s`, including the zero map and maps with
/// partial zero support, deduplicated and sorted by exact value vector.
///
/// Backtracks over elements in index order; each assignment propagates
/// through the table (a value at x and y forces the value at x·y), so
/// inconsistent branches die early.
pub fn enumerate_characters(s: &FiniteSemigroup) -> Vec<Character> {
    let n = s.order();
    let profiles = element_profiles(s);
    let ambient = profiles
        .iter()
        .fold(1u64, |acc, p| acc.lcm(&(p.period as u64)));
    let ambient = u32::try_from(ambient).expect("ambient order overflow");

    // Per element: zero, then the period-th roots of unity in ascending
    // exponent. x^i = x^{i+p} forces chi(x) = 0 or chi(x)^p = 1.
    let candidates: Vec<Vec<Cyclo>> = profiles
        .iter()
        .map(|p| {
            let step = (ambient / p.period as u32) as i64;
            let mut c = vec![Cyclo::zero()];
            c.extend((0..p.period as i64).map(|j| Cyclo::root_of_unity(ambient, step * j)));
            c
        })
        .collect();

    struct Search<'a> {
        s: &'a FiniteSemigroup,
        candidates: &'a [Vec<Cyclo>],
        values: Vec<Option<Cyclo>>,
        trail: Vec<usize>,
        found: Vec<Vec<Cyclo>>,
    }

    impl Search<'_> {
        /// Close the partial assignment under the table; false on conflict.
        fn propagate(&mut self) -> bool {
            let n = self.s.order();
            loop {
                let mut changed = false;
                for x in 0..n {
                    let Some(vx) = self.values[x].clone() else {
                        continue;
                    };
                    for y in 0..n {
                        let Some(vy) = self.values[y].clone() else {
                            continue;
                        };
                        let z = self.s.mul(x, y);
                        let p = &vx * &vy;
                        match &self.values[z] {
                            Some(vz) => {
                                if *vz != p {
                                    return false;
                                }
                            }
                            None => {
                                self.values[z] = Some(p);
                                self.trail.push(z);
                                changed = true;
                            }
                        }
                    }
                }
                if !changed {
                    return true;
                }
            }
        }

        fn run(&mut self) {
            let Some(x) = self.values.iter().position(Option::is_none) else {
                let table: Vec<Cyclo> = self
                    .values
                    .iter()
                    .map(|v| v.clone().expect("complete assignment"))
                    .collect();
                self.found.push(table);
                return;
            };
            for v in &self.candidates[x] {
                let mark = self.trail.len();
                self.values[x] = Some(v.clone());
                self.trail.push(x);
                if self.propagate() {
                    self.run();
                }
                while self.trail.len() > mark {
                    let i = self.trail.pop().unwrap();
                    self.values[i] = None;
                }
            }
        }
    }

    let mut search = Search {
        s,
        candidates: &candidates,
        values: vec![None; n],
        trail: Vec::new(),
        found: Vec::new(),
    };
    search.run();

    let mut tables = search.found;
    tables.sort_by(|a, b| lex_cmp_tables(a, b));
    tables.dedup();
    tables
        .into_iter()
        .map(|t| Character::new(s, t).expect("search output is multiplicative"))
        .collect()
}

/// The characters admissible as twists for `m`: those with μ(x·m(x)) = 1 for
/// every x. Each is automatically nowhere-zero, since 1 = μ(x)·μ(m(x)).
pub fn admissible_mus(s: &FiniteSemigroup, m: &Morphism) -> Vec<Character> {
    enumerate_characters(s)
        .into_iter()
        .filter(|mu| (0..s.order()).all(|x| mu.value(s.mul(x, m.apply(x))).is_one()))
        .collect()
}

/// The twisted character x ↦ μ(x)·χ(m(x)).
///
/// This is multiplicative for both morphism kinds: values commute in ℂ, so
/// composing χ with an anti-morphism still multiplies. Twisting twice with an
/// admissible μ gives back χ.
pub fn twist(s: &FiniteSemigroup, chi: &Character, mu: &Character, m: &Morphism) -> Character {
    let values: Vec<Cyclo> = (0..s.order())
        .map(|x| mu.value(x) * chi.value(m.apply(x)))
        .collect();
    Character::new(s, values).expect("twist of characters is a character")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::MorphismKind;

    fn negation(n: usize) -> Morphism {
        Morphism::new(MorphismKind::AntiInvolution, (0..n).map(|x| (n - x) % n).collect())
    }

    fn chi_k(n: usize, k: usize) -> Vec<Cyclo> {
        (0..n)
            .map(|x| Cyclo::root_of_unity(n as u32, (k * x) as i64))
            .collect()
    }

    #[test]
    fn profiles_on_a_cyclic_group() {
        let z4 = FiniteSemigroup::cyclic(4);
        let p = element_profiles(&z4);
        assert_eq!((p[1].index, p[1].period), (1, 4));
        assert_eq!((p[2].index, p[2].period), (1, 2));
        assert_eq!((p[0].index, p[0].period), (1, 1));
    }

    #[test]
    fn profiles_on_left_zero_and_null_semigroups() {
        let lz = FiniteSemigroup::left_zero(3);
        for p in element_profiles(&lz) {
            // x^2 = x
            assert_eq!((p.index, p.period), (1, 1));
        }
        // null semigroup: every product is 0, so 1^2 = 0 and the cycle starts
        // at exponent 2
        let null2 = FiniteSemigroup::from_table("null2", vec![vec![0, 0], vec![0, 0]]).unwrap();
        let p = element_profiles(&null2);
        assert_eq!((p[0].index, p[0].period), (1, 1));
        assert_eq!((p[1].index, p[1].period), (2, 1));
    }

    #[test]
    fn cyclic_groups_have_n_plus_one_characters() {
        for n in 2..=6usize {
            let chars = enumerate_characters(&FiniteSemigroup::cyclic(n));
            assert_eq!(chars.len(), n + 1, "Z{n}");
            assert_eq!(chars.iter().filter(|c| c.is_zero_map()).count(), 1);
            // the duals are exactly x -> zeta_n^{kx}
            for k in 0..n {
                let expected = Character::new(&FiniteSemigroup::cyclic(n), chi_k(n, k)).unwrap();
                assert!(chars.iter().any(|c| c == &expected), "Z{n} chi_{k}");
            }
        }
    }

    #[test]
    fn klein_four_group_has_five_characters() {
        let k4 = FiniteSemigroup::direct_product(
            &FiniteSemigroup::cyclic(2),
            &FiniteSemigroup::cyclic(2),
        );
        let chars = enumerate_characters(&k4);
        assert_eq!(chars.len(), 5);
        assert!(chars.iter().all(|c| c.is_zero_map() || c.is_nowhere_zero()));
    }

    #[test]
    fn left_zero_characters_are_zero_and_one() {
        for n in 2..=4usize {
            let chars = enumerate_characters(&FiniteSemigroup::left_zero(n));
            assert_eq!(chars.len(), 2, "LZ{n}");
            assert!(chars[0].is_zero_map());
            assert!(chars[1].values().iter().all(Cyclo::is_one));
        }
    }

    #[test]
    fn quaternion_characters_factor_through_the_sign_quotient() {
        let q8 = FiniteSemigroup::quaternion();
        let chars = enumerate_characters(&q8);
        // 4 characters of Q8/{1,-1} plus the zero map
        assert_eq!(chars.len(), 5);
        for c in &chars {
            if !c.is_zero_map() {
                assert!(c.value(1).is_one(), "chi(-1) = 1 forced");
            }
        }
    }

    /// Odometer over the full candidate grid, checked directly against the
    /// multiplicativity law; independent of the backtracking path.
    fn oracle_enumerate(s: &FiniteSemigroup) -> Vec<Vec<Cyclo>> {
        let n = s.order();
        let profiles = element_profiles(s);
        let ambient = profiles
            .iter()
            .fold(1u64, |acc, p| acc.lcm(&(p.period as u64))) as u32;
        let candidates: Vec<Vec<Cyclo>> = profiles
            .iter()
            .map(|p| {
                let step = (ambient / p.period as u32) as i64;
                let mut c = vec![Cyclo::zero()];
                c.extend((0..p.period as i64).map(|j| Cyclo::root_of_unity(ambient, step * j)));
                c
            })
            .collect();
        let mut counters = vec![0usize; n];
        let mut out = Vec::new();
        loop {
            let table: Vec<Cyclo> = (0..n)
                .map(|x| candidates[x][counters[x]].clone())
                .collect();
            let ok = (0..n)
                .all(|x| (0..n).all(|y| table[s.mul(x, y)] == &table[x] * &table[y]));
            if ok {
                out.push(table);
            }
            // advance odometer
            let mut i = 0;
            loop {
                if i == n {
                    out.sort_by(|a, b| lex_cmp_tables(a, b));
                    return out;
                }
                counters[i] += 1;
                if counters[i] < candidates[i].len() {
                    break;
                }
                counters[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn backtracking_matches_the_naive_oracle_up_to_order_4() {
        let families = [
            FiniteSemigroup::cyclic(2),
            FiniteSemigroup::cyclic(3),
            FiniteSemigroup::cyclic(4),
            FiniteSemigroup::direct_product(
                &FiniteSemigroup::cyclic(2),
                &FiniteSemigroup::cyclic(2),
            ),
            FiniteSemigroup::left_zero(2),
            FiniteSemigroup::left_zero(3),
            FiniteSemigroup::from_table("null2", vec![vec![0, 0], vec![0, 0]]).unwrap(),
        ];
        for s in &families {
            let got: Vec<Vec<Cyclo>> = enumerate_characters(s)
                .iter()
                .map(|c| c.values().to_vec())
                .collect();
            let expect = oracle_enumerate(s);
            assert_eq!(got, expect, "{}", s.name());
        }
    }

    #[test]
    fn admissible_mus_on_z4_negation_is_everything_nonzero() {
        let z4 = FiniteSemigroup::cyclic(4);
        // x + (-x) = 0 always, and mu(0) = 1 for every nonzero character
        let mus = admissible_mus(&z4, &negation(4));
        assert_eq!(mus.len(), 4);
        assert!(mus.iter().all(Character::is_nowhere_zero));
    }

    #[test]
    fn admissible_mus_on_z4_identity_map_needs_mu2_equal_1() {
        let z4 = FiniteSemigroup::cyclic(4);
        let id = Morphism::new(MorphismKind::AntiInvolution, vec![0, 1, 2, 3]);
        // mu(2x) = 1 forces mu(2) = 1: exactly the even duals
        let mus = admissible_mus(&z4, &id);
        assert_eq!(mus.len(), 2);
        for mu in &mus {
            assert!(mu.value(2).is_one());
        }
    }

    #[test]
    fn trivial_character_is_always_admissible() {
        for s in [
            FiniteSemigroup::cyclic(6),
            FiniteSemigroup::quaternion(),
            FiniteSemigroup::left_zero(3),
        ] {
            let id_map: Vec<usize> = (0..s.order()).collect();
            let m = Morphism::new(MorphismKind::AntiInvolution, id_map);
            let trivial = Character::trivial(&s);
            let mus = admissible_mus(&s, &m);
            assert!(mus.iter().any(|mu| mu == &trivial), "{}", s.name());
        }
    }

    #[test]
    fn twist_on_z4_sends_chi1_to_chi3() {
        let z4 = FiniteSemigroup::cyclic(4);
        let chi1 = Character::new(&z4, chi_k(4, 1)).unwrap();
        let chi3 = Character::new(&z4, chi_k(4, 3)).unwrap();
        let t = twist(&z4, &chi1, &Character::trivial(&z4), &negation(4));
        assert_eq!(t, chi3);
    }

    #[test]
    fn twist_with_identity_morphism_and_trivial_mu_is_identity() {
        let z4 = FiniteSemigroup::cyclic(4);
        let id = Morphism::new(MorphismKind::AntiInvolution, vec![0, 1, 2, 3]);
        for chi in enumerate_characters(&z4) {
            assert_eq!(twist(&z4, &chi, &Character::trivial(&z4), &id), chi);
        }
    }

    #[test]
    fn twist_is_involutive_for_admissible_pairs() {
        let z4 = FiniteSemigroup::cyclic(4);
        let m = negation(4);
        for mu in admissible_mus(&z4, &m) {
            for chi in enumerate_characters(&z4) {
                if chi.is_zero_map() {
                    continue;
                }
                let twice = twist(&z4, &twist(&z4, &chi, &mu, &m), &mu, &m);
                assert_eq!(twice, chi);
            }
        }
    }
}
