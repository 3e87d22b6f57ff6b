//! Textual grammar for exact cyclotomic values, shared by the CLI and the
//! instance file format:
//!
//! ```text
//! value    := term (('+'|'-') term)*
//! term     := rational ('*' root)? | root
//! root     := 'w(' N ',' k ')'
//! rational := int ('/' posint)?
//! ```
//!
//! Whitespace is insignificant. `w(N,k)` denotes ζ_N^k. Printing always emits
//! the canonical reduced form, so output parses back to the same value.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Cyclo, Rational};

/// Parse failure with the byte offset where the expected token was missing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiteralError {
    pub offset: usize,
    pub expected: &'static str,
}

impl fmt::Display for LiteralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "expected {} at offset {}", self.expected, self.offset)
    }
}

impl std::error::Error for LiteralError {}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(input: &'a str) -> Self {
        Scanner {
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8, what: &'static str) -> Result<(), LiteralError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn error(&self, expected: &'static str) -> LiteralError {
        LiteralError {
            offset: self.pos,
            expected,
        }
    }

    fn digits(&mut self) -> Result<BigInt, LiteralError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("digits"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(text.parse::<BigInt>().expect("digits parse as an integer"))
    }

    fn int(&mut self) -> Result<BigInt, LiteralError> {
        let neg = self.eat(b'-');
        let mag = self.digits()?;
        Ok(if neg { -mag } else { mag })
    }

    fn rational(&mut self) -> Result<Rational, LiteralError> {
        let numer = self.int()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let denom = self.digits()?;
            if denom.is_zero() {
                return Err(LiteralError {
                    offset: at,
                    expected: "a positive denominator",
                });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    /// `w(N,k)` with N >= 1; k may be negative and is reduced modulo N.
    fn root(&mut self) -> Result<Cyclo, LiteralError> {
        self.expect(b'w', "'w'")?;
        self.expect(b'(', "'('")?;
        let at = self.pos;
        let n = self.digits()?;
        let n = match n.to_u32() {
            Some(n) if n >= 1 => n,
            _ => {
                return Err(LiteralError {
                    offset: at,
                    expected: "a positive root order",
                })
            }
        };
        self.expect(b',', "','")?;
        let k = self.int()?;
        self.expect(b')', "')'")?;
        let k = k.mod_floor(&BigInt::from(n)).to_i64().expect("k < N");
        Ok(Cyclo::root_of_unity(n, k))
    }

    fn term(&mut self) -> Result<Cyclo, LiteralError> {
        match self.peek() {
            Some(b'w') => self.root(),
            Some(c) if c == b'-' || c.is_ascii_digit() => {
                let q = self.rational()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    Ok(self.root()?.scale(&q))
                } else {
                    Ok(Cyclo::from_rational(q))
                }
            }
            _ => Err(self.error("a term (rational or w(N,k))")),
        }
    }
}

/// Parse a complete value; trailing input other than whitespace is an error.
pub fn parse_cyclo(input: &str) -> Result<Cyclo, LiteralError> {
    let mut sc = Scanner::new(input);
    let mut total = sc.term()?;
    loop {
        match sc.peek() {
            Some(b'+') => {
                sc.pos += 1;
                total = &total + &sc.term()?;
            }
            Some(b'-') => {
                sc.pos += 1;
                total = &total - &sc.term()?;
            }
            None => return Ok(total),
            Some(_) => return Err(sc.error("'+', '-', or end of input")),
        }
    }
}

impl fmt::Display for Cyclo {
    /// Canonical literal: terms in ascending powers of ζ, coefficients in
    /// lowest terms, no whitespace. Always re-parses to the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if j == 0 {
                    write!(f, "{c}")?;
                } else if c.is_one() {
                    write!(f, "w({},{})", self.order(), j)?;
                } else if (-c).is_one() {
                    // a bare leading '-w(...)' is not a term in the grammar
                    write!(f, "-1*w({},{})", self.order(), j)?;
                } else {
                    write!(f, "{}*w({},{})", c, self.order(), j)?;
                }
            } else {
                let mag = if c.is_negative() {
                    write!(f, "-")?;
                    -c.clone()
                } else {
                    write!(f, "+")?;
                    c.clone()
                };
                if mag.is_one() {
                    write!(f, "w({},{})", self.order(), j)?;
                } else {
                    write!(f, "{}*w({},{})", mag, self.order(), j)?;
                }
            }
        }
        Ok(())
    }
}

/// Compact rendering of the float embedding, e.g. `0.7071067811865476i`,
/// `-1`, or `0.5-0.5i`. Approximate; used only behind explicit float flags.
pub fn format_complex_approx(v: num_complex::Complex64) -> String {
    // components below the embedding's error bound are rendering noise
    let snap = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
    let v = num_complex::Complex64::new(snap(v.re), snap(v.im));
    let re_zero = v.re == 0.0;
    let im_zero = v.im == 0.0;
    match (re_zero, im_zero) {
        (_, true) => format!("{}", v.re),
        (true, false) => format!("{}i", v.im),
        (false, false) => {
            if v.im < 0.0 {
                format!("{}{}i", v.re, v.im)
            } else {
                format!("{}+{}i", v.re, v.im)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::one_half;
    use super::*;

    #[test]
    fn parses_the_reference_literal() {
        let v = parse_cyclo("1/2*w(8,1)-1/2*w(8,7)").unwrap();
        let expect =
            (&Cyclo::root_of_unity(8, 1) - &Cyclo::root_of_unity(8, 7)).scale(&one_half());
        assert_eq!(v, expect);
        // canonical form reduces zeta_8^7 to -zeta_8^3
        assert_eq!(v.to_string(), "1/2*w(8,1)+1/2*w(8,3)");
    }

    #[test]
    fn whitespace_is_insignificant() {
        let a = parse_cyclo(" 1 / 2 * w( 8 , 1 ) - 1/2 * w(8,7) ").unwrap();
        let b = parse_cyclo("1/2*w(8,1)-1/2*w(8,7)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn display_round_trips() {
        let samples = [
            Cyclo::zero(),
            Cyclo::one(),
            Cyclo::from_integer(-7),
            Cyclo::from_rational(Rational::new(BigInt::from(3), BigInt::from(4))),
            Cyclo::root_of_unity(4, 1),
            -Cyclo::root_of_unity(4, 1),
            (&Cyclo::root_of_unity(8, 1) + &Cyclo::root_of_unity(8, 7)).scale(&one_half()),
            &Cyclo::from_integer(2) - &Cyclo::root_of_unity(12, 7),
        ];
        for v in &samples {
            let text = v.to_string();
            let back = parse_cyclo(&text).unwrap();
            assert_eq!(&back, v, "round-trip of {text}");
        }
    }

    #[test]
    fn negative_leading_root_prints_parseable() {
        let v = -Cyclo::root_of_unity(4, 1);
        assert_eq!(v.to_string(), "-1*w(4,1)");
        assert_eq!(parse_cyclo("-1*w(4,1)").unwrap(), v);
    }

    #[test]
    fn negative_exponent_is_reduced() {
        assert_eq!(
            parse_cyclo("w(4,-1)").unwrap(),
            Cyclo::root_of_unity(4, 3)
        );
    }

    #[test]
    fn rejects_malformed_input() {
        for (text, offset) in [
            ("", 0),
            ("q", 0),
            ("1+", 2),
            ("w(0,1)", 2),
            ("1/0", 2),
            ("w(4;1)", 3),
            ("1 2", 2),
        ] {
            let err = parse_cyclo(text).unwrap_err();
            assert_eq!(err.offset, offset, "input {text:?}: {err}");
        }
    }

    #[test]
    fn zero_sums_print_as_zero() {
        let v = parse_cyclo("w(8,1)-w(8,1)").unwrap();
        assert!(v.is_zero());
        assert_eq!(v.to_string(), "0");
    }

    #[test]
    fn float_annotation_format() {
        let s = (&Cyclo::root_of_unity(8, 1) - &Cyclo::root_of_unity(8, 7)).scale(&one_half());
        assert_eq!(format_complex_approx(s.to_complex()), "0.7071067811865476i");
        assert_eq!(
            format_complex_approx(Cyclo::from_integer(-1).to_complex()),
            "-1"
        );
    }
}
