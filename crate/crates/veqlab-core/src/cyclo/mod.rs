//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! A [`Cyclo`] is a rational polynomial in ζ_N reduced modulo Φ_N. Since Φ_N
//! is the minimal polynomial of ζ_N, the reduced representation of a value is
//! unique, which makes the zero test exact: a value is zero iff its canonical
//! coefficient vector is empty. Reducing modulo x^N - 1 instead would not give
//! this (x^N - 1 is reducible), which is why Φ_N is the canonical modulus.
//!
//! Mixed-order arithmetic promotes both operands into ℚ(ζ_lcm) first; floats
//! appear only in [`Cyclo::to_complex`], which is for display.

mod literal;
mod poly;

pub use literal::{format_complex_approx, parse_cyclo, LiteralError};
pub use poly::{cyclotomic_polynomial, divisors, euler_phi};

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational scalar; kept in lowest terms with a positive
/// denominator by `num-rational`.
pub type Rational = BigRational;

/// The rational 1/2, the only non-integer scalar the solution formulas need.
pub fn one_half() -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(2))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("cannot promote a value of order {from} into Q(zeta_{to}): {from} does not divide {to}")]
    IncompatibleOrders { from: u32, to: u32 },
}

/// An element of ℚ(ζ_N), stored as canonical coefficients of 1, ζ, ζ², …
/// with degree < φ(N) and trailing zeros stripped.
#[derive(Debug, Clone)]
pub struct Cyclo {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclo {
    /// Reduce an arbitrary-degree coefficient vector: exponents fold modulo N
    /// (ζ^N = 1), then the result is reduced modulo Φ_N.
    fn reduce(order: u32, raw: Vec<BigRational>) -> Self {
        debug_assert!(order >= 1);
        let mut acc = vec![BigRational::zero(); order as usize];
        for (e, c) in raw.into_iter().enumerate() {
            if !c.is_zero() {
                acc[e % order as usize] += c;
            }
        }
        poly::rat_rem_monic(&mut acc, &cyclotomic_polynomial(order));
        Cyclo { order, coeffs: acc }
    }

    pub fn zero() -> Self {
        Cyclo {
            order: 1,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Cyclo {
            order: 1,
            coeffs: vec![BigRational::one()],
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut coeffs = vec![q];
        poly::rat_trim(&mut coeffs);
        Cyclo { order: 1, coeffs }
    }

    pub fn from_integer(k: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(k)))
    }

    /// ζ_N^k, with k taken modulo N (negative k allowed).
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root_of_unity: order must be >= 1");
        let k = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![BigRational::zero(); k + 1];
        raw[k] = BigRational::one();
        Self::reduce(n, raw)
    }

    /// Order N of the field ℚ(ζ_N) this value is represented in.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Canonical coefficients (ascending powers of ζ, no trailing zeros).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Exact zero test: canonical coefficients are empty.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True when the value is purely rational (degree 0).
    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Re-represent in ℚ(ζ_m); requires order | m.
    pub fn promote(&self, m: u32) -> Result<Cyclo, CycloError> {
        if m == self.order {
            return Ok(self.clone());
        }
        if m == 0 || !m.is_multiple_of(self.order) {
            return Err(CycloError::IncompatibleOrders {
                from: self.order,
                to: m,
            });
        }
        let stride = (m / self.order) as usize;
        let mut raw = vec![BigRational::zero(); self.coeffs.len() * stride];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[j * stride] = c.clone();
            }
        }
        Ok(Self::reduce(m, raw))
    }

    fn common_order(a: &Cyclo, b: &Cyclo) -> u32 {
        let l = (a.order as u64).lcm(&(b.order as u64));
        u32::try_from(l).expect("cyclotomic order overflow")
    }

    fn promoted_pair(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo) {
        let m = Self::common_order(a, b);
        (
            a.promote(m).expect("lcm is a multiple"),
            b.promote(m).expect("lcm is a multiple"),
        )
    }

    /// Multiply every coefficient by a rational scalar.
    pub fn scale(&self, q: &Rational) -> Cyclo {
        if q.is_zero() {
            return Cyclo {
                order: self.order,
                coeffs: Vec::new(),
            };
        }
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Galois conjugation ζ ↦ ζ⁻¹ (complex conjugation under the standard
    /// embedding).
    pub fn conj(&self) -> Cyclo {
        let n = self.order as usize;
        let mut raw = vec![BigRational::zero(); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(n - j) % n] += c;
            }
        }
        Self::reduce(self.order, raw)
    }

    /// Nonnegative integer power by repeated squaring; `pow(0)` is 1.
    pub fn pow(&self, e: u64) -> Cyclo {
        let mut base = self.clone();
        let mut acc = Cyclo::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse, or `None` for zero. Computed by the extended
    /// Euclidean algorithm against Φ_N.
    pub fn inverse(&self) -> Option<Cyclo> {
        let inv = poly::rat_inverse_mod(&self.coeffs, &cyclotomic_polynomial(self.order))?;
        Some(Cyclo {
            order: self.order,
            coeffs: inv,
        })
    }

    /// True when the value is a root of unity. Torsion in ℚ(ζ_N) is the group
    /// of lcm(2,N)-th roots, so one exact power decides it.
    pub fn is_root_of_unity(&self) -> bool {
        !self.is_zero() && self.pow((self.order as u64).lcm(&2)).is_one()
    }

    /// Floating approximation under ζ_N ↦ e^{2πi/N}; display only.
    pub fn to_complex(&self) -> Complex64 {
        let theta = std::f64::consts::TAU / self.order as f64;
        let zeta = Complex64::from_polar(1.0, theta);
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * zeta + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        }
        acc
    }

    /// Total order on values represented in a common field: both operands are
    /// promoted to the lcm order and coefficient vectors compared
    /// lexicographically. Used to sort and deduplicate collections whose
    /// members already share one ambient order.
    pub fn lex_cmp(&self, other: &Cyclo) -> Ordering {
        let (a, b) = Self::promoted_pair(self, other);
        let len = a.coeffs.len().max(b.coeffs.len());
        let zero = BigRational::zero();
        for i in 0..len {
            let ca = a.coeffs.get(i).unwrap_or(&zero);
            let cb = b.coeffs.get(i).unwrap_or(&zero);
            match ca.cmp(cb) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// Lexicographic comparison of two value tables over a shared ambient order.
pub fn lex_cmp_tables(a: &[Cyclo], b: &[Cyclo]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.lex_cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    a.len().cmp(&b.len())
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::promoted_pair(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclo {}

impl std::ops::Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        let (mut a, b) = Cyclo::promoted_pair(self, rhs);
        if a.coeffs.len() < b.coeffs.len() {
            a.coeffs.resize(b.coeffs.len(), BigRational::zero());
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            a.coeffs[i] += c;
        }
        poly::rat_trim(&mut a.coeffs);
        a
    }
}

impl std::ops::Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        let (a, b) = Cyclo::promoted_pair(self, rhs);
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return Cyclo {
                order: a.order,
                coeffs: Vec::new(),
            };
        }
        let mut raw = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                raw[i + j] += ai * bj;
            }
        }
        Cyclo::reduce(a.order, raw)
    }
}

macro_rules! owned_ops {
    ($($trait:ident, $method:ident;)*) => {$(
        impl std::ops::$trait for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_ops! { Add, add; Sub, sub; Mul, mul; }

impl std::ops::Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl From<i64> for Cyclo {
    fn from(k: i64) -> Self {
        Cyclo::from_integer(k)
    }
}

impl From<Rational> for Cyclo {
    fn from(q: Rational) -> Self {
        Cyclo::from_rational(q)
    }
}
