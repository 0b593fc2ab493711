//! Sparse polynomials over the integers in the three commuting
//! variables `x`, `y`, `z`, used to state Grothendieck-ring relations
//! before they are evaluated on module classes.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::{Error, Result};

/// Exponents of a single monomial `x^a y^b z^c`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { x: 0, y: 0, z: 0 }
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            x: self.x + other.x,
            y: self.y + other.y,
            z: self.z + other.z,
        }
    }

    fn degree(&self) -> u32 {
        self.x + self.y + self.z
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors: Vec<String> = Vec::new();
        for (sym, e) in [("z", self.z), ("y", self.y), ("x", self.x)] {
            match e {
                0 => {}
                1 => factors.push(sym.to_string()),
                _ => factors.push(format!("{sym}^{e}")),
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// An integer polynomial in `x`, `y`, `z`. Zero coefficients are never
/// stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(1)
    }

    pub fn constant(c: i64) -> IntPoly {
        IntPoly::term(c, 0, 0, 0)
    }

    /// The variable named `x`, `y`, or `z`.
    pub fn var(name: &str) -> Result<IntPoly> {
        match name {
            "x" => Ok(IntPoly::term(1, 1, 0, 0)),
            "y" => Ok(IntPoly::term(1, 0, 1, 0)),
            "z" => Ok(IntPoly::term(1, 0, 0, 1)),
            other => Err(Error::InvalidVariable(format!(
                "no variable named {other:?}; the ring has x, y, z"
            ))),
        }
    }

    /// The single term `c x^a y^b z^d`.
    pub fn term(c: i64, a: u32, b: u32, d: u32) -> IntPoly {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Monomial { x: a, y: b, z: d }, BigInt::from(c));
        }
        IntPoly { terms }
    }

    pub fn from_terms(entries: impl IntoIterator<Item = (Monomial, BigInt)>) -> IntPoly {
        let mut out = IntPoly::zero();
        for (m, c) in entries {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Does any term mention `x`?
    pub fn uses_x(&self) -> bool {
        self.terms.keys().any(|m| m.x > 0)
    }

    pub fn map_monomials(&self, f: impl Fn(Monomial) -> Monomial) -> IntPoly {
        let mut out = IntPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(*m), c.clone());
        }
        out
    }

    pub fn try_add(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn try_sub(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn try_mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(*mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale_i64(&self, k: i64) -> IntPoly {
        if k == 0 {
            return IntPoly::zero();
        }
        let k = BigInt::from(k);
        let terms = self.terms.iter().map(|(m, c)| (*m, c * &k)).collect();
        IntPoly { terms }
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                self.$checked(rhs)
            }
        }
        impl std::ops::$trait for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add, try_add);
forward_poly_binop!(Sub, sub, try_sub);
forward_poly_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        IntPoly { terms }
    }
}

impl std::ops::Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest z-degree first, then total degree, for the shape the
        // relation lists are usually written in.
        let mut ordered: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by_key(|(m, _)| std::cmp::Reverse((m.z, m.degree(), m.y, m.x)));
        for (idx, (m, c)) in ordered.into_iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_monomial = *m == Monomial::one();
            if unit_monomial {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The binomial coefficient as a `BigInt`, by the multiplicative rule.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_cancels_exactly() {
        let x = IntPoly::var("x").unwrap();
        let y = IntPoly::var("y").unwrap();
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p, &x.pow(2) - &y.pow(2));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn unknown_variables_are_rejected() {
        assert!(IntPoly::var("w").is_err());
    }

    #[test]
    fn display_orders_by_z_degree() {
        let z = IntPoly::var("z").unwrap();
        let y = IntPoly::var("y").unwrap();
        let p = &(&z.pow(3) - &(&y * &z).scale_i64(3)) + &IntPoly::constant(1);
        assert_eq!(p.to_string(), "z^3 - 3*z*y + 1");
    }

    #[test]
    fn binomials_match_pascal() {
        for n in 0..12u32 {
            for k in 0..=n {
                let pascal = if k == 0 || k == n {
                    BigInt::from(1)
                } else {
                    binomial(n - 1, k - 1) + binomial(n - 1, k)
                };
                assert_eq!(binomial(n, k), pascal, "C({n},{k})");
            }
        }
        assert_eq!(binomial(30, 15), BigInt::from(155_117_520i64));
    }

    #[test]
    fn powers_expand() {
        let y = IntPoly::var("y").unwrap();
        let p = (&y + &IntPoly::one()).pow(3);
        let expect = IntPoly::from_terms([
            (Monomial { x: 0, y: 0, z: 0 }, BigInt::from(1)),
            (Monomial { x: 0, y: 1, z: 0 }, BigInt::from(3)),
            (Monomial { x: 0, y: 2, z: 0 }, BigInt::from(3)),
            (Monomial { x: 0, y: 3, z: 0 }, BigInt::from(1)),
        ]);
        assert_eq!(p, expect);
    }
}
