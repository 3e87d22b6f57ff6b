//! Brute-force completeness oracle.
//!
//! Searches every assignment f: G → V over the finite value universe
//! V = {0} ∪ {(ω₁ − ω₂)·ω₃/2 : ωᵢ N-th roots of unity} and keeps exactly the
//! tables that pass the exhaustive verifier. The closed form places all of a
//! characterized solution's values inside V when N is the lcm of the element
//! periods, so at desk scale this independently confirms that the closed form
//! missed nothing — within that value universe.
//!
//! Two consequences of the equation prune the grid before verification:
//! f(z₀²) = 0, and the pairing f(m(x)) = −μ(m(x))·f(x), which fixes each
//! orbit {x, m(x)} from one representative (and forces f(x) = 0 outright on
//! fixed points with μ(x) ≠ −1).

use num_integer::Integer;

use crate::characters::element_profiles;
use crate::cyclo::{lex_cmp_tables, one_half, Cyclo};

use super::{promote_uniform, verify_equation, EngineError, Instance};

/// Carrier orders above this need an explicit opt-in: the search is
/// |V|^(free slots) and V grows quadratically with the grid order.
pub const DEFAULT_BRUTE_ORDER_CAP: usize = 5;

#[derive(Debug, Clone)]
pub struct BruteForceOptions {
    /// Root-of-unity order N of the value universe; defaults to the lcm of
    /// the element periods, which provably covers every characterized
    /// solution.
    pub grid_order: Option<u32>,
    /// Largest carrier order accepted.
    pub order_cap: usize,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        BruteForceOptions {
            grid_order: None,
            order_cap: DEFAULT_BRUTE_ORDER_CAP,
        }
    }
}

/// The grid order used when none is specified: the lcm of the element
/// periods, which bounds the order of every character value on the carrier.
pub fn default_grid_order(s: &crate::semigroup::FiniteSemigroup) -> u32 {
    let l = element_profiles(s)
        .iter()
        .fold(1u64, |acc, p| acc.lcm(&(p.period as u64)));
    u32::try_from(l).expect("grid order overflow")
}

/// Exhaustively search the value grid for solutions of a van Vleck instance.
/// The zero table is always among the results; output is sorted by exact
/// value table.
#[allow(clippy::needless_range_loop)] // index loops write partner slots
pub fn brute_force_solutions(
    inst: &Instance,
    opts: &BruteForceOptions,
) -> Result<Vec<Vec<Cyclo>>, EngineError> {
    if !inst.equation().is_van_vleck() {
        return Err(EngineError::WrongEquationKind(inst.equation()));
    }
    let s = inst.semigroup();
    let m = inst.morphism();
    let mu = inst.mu();
    let z0 = inst.z0();
    let n = s.order();

    let grid_order = opts.grid_order.unwrap_or_else(|| default_grid_order(s));

    // value universe, deduplicated and sorted
    let half = one_half();
    let mut universe = vec![Cyclo::zero()];
    for a in 0..grid_order as i64 {
        for b in 0..grid_order as i64 {
            for c in 0..grid_order as i64 {
                let diff = &Cyclo::root_of_unity(grid_order, a) - &Cyclo::root_of_unity(grid_order, b);
                if diff.is_zero() {
                    continue;
                }
                universe.push((&diff * &Cyclo::root_of_unity(grid_order, c)).scale(&half));
            }
        }
    }
    universe.sort_by(|x, y| x.lex_cmp(y));
    universe.dedup();

    if n > opts.order_cap {
        return Err(EngineError::GridTooLarge {
            assignments: (universe.len() as u128).saturating_pow(n as u32),
            order: n,
            cap: opts.order_cap,
        });
    }

    // Forced zeros: z0^2, fixed points with mu(x) != -1, and their partners.
    let minus_one = Cyclo::from_integer(-1);
    let mut forced_zero = vec![false; n];
    forced_zero[s.mul(z0, z0)] = true;
    for x in 0..n {
        if m.apply(x) == x && mu.value(x) != &minus_one {
            forced_zero[x] = true;
        }
    }
    loop {
        let mut changed = false;
        for x in 0..n {
            if forced_zero[x] && !forced_zero[m.apply(x)] {
                forced_zero[m.apply(x)] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    // One representative per unforced orbit {x, m(x)}.
    let reps: Vec<usize> = (0..n)
        .filter(|&x| !forced_zero[x] && x <= m.apply(x))
        .collect();

    let mut table = vec![Cyclo::zero(); n];
    let mut counters = vec![0usize; reps.len()];
    let mut results: Vec<Vec<Cyclo>> = Vec::new();
    loop {
        for (i, &x) in reps.iter().enumerate() {
            let v = universe[counters[i]].clone();
            let partner = m.apply(x);
            if partner != x {
                table[partner] = -&(mu.value(partner) * &v);
            }
            table[x] = v;
        }
        if verify_equation(inst, &table).is_satisfied() {
            results.push(promote_uniform(table.clone()));
        }
        // advance the odometer
        let mut i = 0;
        loop {
            if i == reps.len() {
                results.sort_by(|a, b| lex_cmp_tables(a, b));
                results.dedup();
                return Ok(results);
            }
            counters[i] += 1;
            if counters[i] < universe.len() {
                break;
            }
            counters[i] = 0;
            i += 1;
        }
    }
}
