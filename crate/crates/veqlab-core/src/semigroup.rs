//! Finite semigroups presented by Cayley tables.
//!
//! Elements are dense indices `0..n`; presentation-layer names live with the
//! caller. A [`FiniteSemigroup`] is immutable after construction and its table
//! has been checked for associativity, so downstream code can multiply without
//! re-validating.

use thiserror::Error;

/// Structural defects of a candidate Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table must be {expected}x{expected}, but row {row} has length {found}")]
    BadShape {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("table entry at ({row},{col}) is {value}, outside 0..{order}")]
    OutOfRangeEntry {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("operation is not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
}

/// Outcome of an exhaustive associativity scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AssociativityCheck {
    Associative,
    /// First triple, in lexicographic `(x, y, z)` order, where
    /// `(x*y)*z != x*(y*z)`.
    FailsAt { x: usize, y: usize, z: usize },
}

/// Check all n^3 triple products of an n x n index table.
///
/// Entries must be indices in `0..order`; the first out-of-range entry (in
/// row-major order) is reported as an error before any triple is tested.
pub fn check_associativity(
    order: usize,
    table: &[Vec<usize>],
) -> Result<AssociativityCheck, TableError> {
    if table.len() != order {
        return Err(TableError::BadShape {
            row: table.len().min(order),
            expected: order,
            found: table.len(),
        });
    }
    for (row, r) in table.iter().enumerate() {
        if r.len() != order {
            return Err(TableError::BadShape {
                row,
                expected: order,
                found: r.len(),
            });
        }
        for (col, &value) in r.iter().enumerate() {
            if value >= order {
                return Err(TableError::OutOfRangeEntry {
                    row,
                    col,
                    value,
                    order,
                });
            }
        }
    }
    for x in 0..order {
        for y in 0..order {
            for z in 0..order {
                if table[table[x][y]][z] != table[x][table[y][z]] {
                    return Ok(AssociativityCheck::FailsAt { x, y, z });
                }
            }
        }
    }
    Ok(AssociativityCheck::Associative)
}

/// A finite semigroup (or monoid) with multiplication given by a Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    name: String,
    order: usize,
    /// Row-major: `table[x * order + y]` is the index of `x * y`.
    table: Vec<usize>,
    identity: Option<usize>,
}

impl FiniteSemigroup {
    /// Validate a Cayley table and wrap it. The two-sided identity, if any,
    /// is located during construction.
    pub fn from_table(
        name: impl Into<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self, TableError> {
        let order = table.len();
        match check_associativity(order, &table)? {
            AssociativityCheck::Associative => {}
            AssociativityCheck::FailsAt { x, y, z } => {
                return Err(TableError::NotAssociative { x, y, z });
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let mut s = FiniteSemigroup {
            name: name.into(),
            order,
            table: flat,
            identity: None,
        };
        s.identity = s.locate_identity();
        Ok(s)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Product of two elements by table lookup.
    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    /// The two-sided identity, if the semigroup is a monoid.
    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    fn locate_identity(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// Elements commuting with everything, in ascending index order.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect()
    }

    pub fn is_central(&self, z: usize) -> bool {
        (0..self.order).all(|x| self.mul(z, x) == self.mul(x, z))
    }

    /// True when the table is a group: a monoid in which every element has a
    /// two-sided inverse.
    pub fn is_group(&self) -> bool {
        match self.identity {
            None => false,
            Some(e) => (0..self.order)
                .all(|x| (0..self.order).any(|y| self.mul(x, y) == e && self.mul(y, x) == e)),
        }
    }

    /// The inverse of `x`, when the semigroup is a group.
    pub fn group_inverse(&self, x: usize) -> Option<usize> {
        let e = self.identity?;
        (0..self.order).find(|&y| self.mul(x, y) == e && self.mul(y, x) == e)
    }

    /// x^k for k >= 1 by iterated table lookup.
    pub fn power(&self, x: usize, k: usize) -> usize {
        assert!(k >= 1, "power: exponent must be >= 1");
        let mut acc = x;
        for _ in 1..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    // ---- Standard families ----

    /// Cyclic group of order n under addition, identity 0.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic: order must be >= 1");
        let table = (0..n)
            .map(|x| (0..n).map(|y| (x + y) % n).collect())
            .collect();
        Self::from_table(format!("Z{n}"), table).expect("cyclic table is associative")
    }

    /// Direct product with pairs encoded as `a * |S2| + b`. The identity is
    /// the pair of component identities when both exist.
    pub fn direct_product(s1: &FiniteSemigroup, s2: &FiniteSemigroup) -> Self {
        let (n1, n2) = (s1.order, s2.order);
        let n = n1 * n2;
        let idx = |a: usize, b: usize| a * n2 + b;
        let mut table = vec![vec![0usize; n]; n];
        for a1 in 0..n1 {
            for b1 in 0..n2 {
                for a2 in 0..n1 {
                    for b2 in 0..n2 {
                        table[idx(a1, b1)][idx(a2, b2)] = idx(s1.mul(a1, a2), s2.mul(b1, b2));
                    }
                }
            }
        }
        Self::from_table(format!("{}x{}", s1.name, s2.name), table)
            .expect("product table is associative")
    }

    /// Dihedral group of order 2m: rotations `0..m`, reflections `m..2m`.
    ///
    /// With r_a the rotation by a and s_a the reflection x -> a - x (mod m):
    /// r_a r_b = r_{a+b}, r_a s_b = s_{a+b}, s_a r_b = s_{a-b}, s_a s_b = r_{a-b}.
    #[allow(clippy::needless_range_loop)]
    pub fn dihedral(m: usize) -> Self {
        assert!(m >= 1, "dihedral: m must be >= 1");
        let n = 2 * m;
        let mut table = vec![vec![0usize; n]; n];
        for x in 0..n {
            for y in 0..n {
                let (a, xr) = (x % m, x >= m);
                let (b, yr) = (y % m, y >= m);
                let c = if xr { (a + m - b) % m } else { (a + b) % m };
                table[x][y] = if xr != yr { m + c } else { c };
            }
        }
        Self::from_table(format!("D{m}"), table).expect("dihedral table is associative")
    }

    /// Quaternion group of order 8: indices 0..8 are 1, -1, i, -i, j, -j, k, -k.
    #[allow(clippy::needless_range_loop)]
    pub fn quaternion() -> Self {
        // axis 0 is the scalar 1; axes 1,2,3 are i,j,k. axis_mul returns the
        // axis of the product and the sign it contributes.
        fn axis_mul(a: usize, b: usize) -> (usize, bool) {
            match (a, b) {
                (0, x) => (x, false),
                (x, 0) => (x, false),
                (x, y) if x == y => (0, true),
                // cyclic i*j=k, j*k=i, k*i=j; reversed order flips the sign
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        }
        let mut table = vec![vec![0usize; 8]; 8];
        for x in 0..8 {
            for y in 0..8 {
                let (ax, sx) = (x / 2, x % 2 == 1);
                let (ay, sy) = (y / 2, y % 2 == 1);
                let (az, sp) = axis_mul(ax, ay);
                let sz = sx ^ sy ^ sp;
                table[x][y] = az * 2 + usize::from(sz);
            }
        }
        Self::from_table("Q8", table).expect("quaternion table is associative")
    }

    /// Left-zero semigroup: x * y = x. Has no identity for n >= 2.
    pub fn left_zero(n: usize) -> Self {
        assert!(n >= 1, "left_zero: order must be >= 1");
        let table = (0..n).map(|x| vec![x; n]).collect();
        Self::from_table(format!("LZ{n}"), table).expect("left-zero table is associative")
    }
}
