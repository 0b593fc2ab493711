//! The cyclotomic field `Q(zeta_{2n})` with exact rational coefficients.
//!
//! Scalars for `H_{2n^2}` live here. A [`CycNum`] is a vector of
//! `phi(2n)` rationals: the coordinates in the power basis
//! `1, zeta, ..., zeta^(phi(2n)-1)` modulo the cyclotomic polynomial
//! `Phi_{2n}`. Every product is reduced immediately, so equality of
//! field elements is plain coefficient equality.
//!
//! Conventions used throughout the crate:
//!
//! * `zeta` is the abstract primitive `2n`-th root of unity defined by
//!   `Phi_{2n}`, so `zeta^n = -1`.
//! * `q := zeta^2` is the primitive `n`-th root all structure constants
//!   are written in.
//! * `sqrt_q` is the canonical square root of `q` used for half-integer
//!   powers `q^(e/2)`: for even `n` it is `zeta` itself, while for odd
//!   `n` it is `q^((n+1)/2)`, the square root of `q` that lies inside
//!   the group generated by `q`. The odd case matters: taking `zeta`
//!   there would assign equal `z`-eigenvalues to the one-dimensional
//!   modules `S_m` and `S_{m+n}` and collapse the classification.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::{Error, Result};

/// Euler's totient, by trial division (arguments here are tiny).
pub fn euler_phi(mut m: u32) -> u32 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Coefficients of the cyclotomic polynomial `Phi_m`, lowest degree first,
/// computed by dividing `x^m - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_poly(m: u32) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic_poly requires m >= 1");
    // x^m - 1
    let mut poly = vec![BigInt::zero(); m as usize + 1];
    poly[0] = -BigInt::one();
    poly[m as usize] = BigInt::one();
    for d in 1..m {
        if m % d == 0 {
            poly = divide_exact(&poly, &cyclotomic_poly(d));
        }
    }
    poly
}

/// Exact division of integer polynomials (the divisor must be monic and
/// divide evenly; both hold for cyclotomic factors).
fn divide_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = std::mem::take(&mut rem[k + dd]);
        if c.is_zero() {
            continue;
        }
        for (i, d) in den[..dd].iter().enumerate() {
            let t = &c * d;
            rem[k + i] -= t;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    quot
}

/// Shared per-`n` data: the modulus `Phi_{2n}` and a table expressing
/// `zeta^k` in the power basis for every exponent a product can reach.
struct CycContext {
    phi: usize,
    /// `root_pow[k]` is `zeta^k` reduced mod `Phi_{2n}`; covers
    /// `k < max(2*phi - 1, 2n)` so both raw constructor exponents and
    /// product folding stay in range.
    root_pow: Vec<Vec<BigRational>>,
}

fn context(n: u32) -> Arc<CycContext> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycContext>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic context cache poisoned");
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(CycContext::build(n)))
        .clone()
}

impl CycContext {
    fn build(n: u32) -> CycContext {
        assert!(n >= 2, "the algebra family needs n >= 2, got n = {n}");
        let big_n = 2 * n;
        let modulus: Vec<BigRational> = cyclotomic_poly(big_n)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let phi = modulus.len() - 1;
        let table_len = (2 * phi - 1).max(big_n as usize);
        let mut root_pow: Vec<Vec<BigRational>> = Vec::with_capacity(table_len);
        for k in 0..table_len {
            if k < phi {
                let mut v = vec![BigRational::zero(); phi];
                v[k] = BigRational::one();
                root_pow.push(v);
            } else {
                // zeta^k = zeta * zeta^(k-1), then fold the overflow
                // coefficient using zeta^phi = -(low part of Phi).
                let prev = &root_pow[k - 1];
                let mut v = vec![BigRational::zero(); phi];
                for i in 0..phi - 1 {
                    v[i + 1] = prev[i].clone();
                }
                let top = prev[phi - 1].clone();
                if !top.is_zero() {
                    for i in 0..phi {
                        v[i] -= &top * &modulus[i];
                    }
                }
                root_pow.push(v);
            }
        }
        CycContext { phi, root_pow }
    }
}

/// An element of `Q(zeta_{2n})`, always reduced mod `Phi_{2n}`.
///
/// The parameter `n` travels with the value; mixing scalars from
/// different fields is rejected. Arithmetic never leaves canonical form,
/// so `==` is exact mathematical equality.
#[derive(Clone, PartialEq, Eq)]
pub struct CycNum {
    n: u32,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    pub fn zero(n: u32) -> CycNum {
        let ctx = context(n);
        CycNum {
            n,
            coeffs: vec![BigRational::zero(); ctx.phi],
        }
    }

    pub fn one(n: u32) -> CycNum {
        CycNum::from_int(n, 1)
    }

    pub fn from_int(n: u32, value: i64) -> CycNum {
        CycNum::from_rational(n, BigRational::from_integer(BigInt::from(value)))
    }

    pub fn from_rational(n: u32, value: BigRational) -> CycNum {
        let mut out = CycNum::zero(n);
        out.coeffs[0] = value;
        out
    }

    /// `zeta^k` for any integer exponent (reduced mod `2n`).
    pub fn root_power(n: u32, k: i64) -> CycNum {
        let ctx = context(n);
        let big_n = 2 * n as i64;
        let k = k.rem_euclid(big_n) as usize;
        CycNum {
            n,
            coeffs: ctx.root_pow[k].clone(),
        }
    }

    /// `q^k` where `q = zeta^2` is the primitive `n`-th root of unity.
    pub fn q_power(n: u32, k: i64) -> CycNum {
        let big_n = 2 * n as i64;
        CycNum::root_power(n, (2 * k.rem_euclid(n as i64)) % big_n)
    }

    /// `q^(e/2)`: the `e`-th power of the canonical square root of `q`
    /// (`zeta` for even `n`, `q^((n+1)/2)` for odd `n`).
    pub fn sqrt_q_power(n: u32, e: i64) -> CycNum {
        let big_n = 2 * n as i64;
        let s: i64 = if n % 2 == 1 { n as i64 + 1 } else { 1 };
        let exp = (e.rem_euclid(big_n) * s) % big_n;
        CycNum::root_power(n, exp)
    }

    /// The algebra parameter `n` this scalar belongs to.
    pub fn param(&self) -> u32 {
        self.n
    }

    /// Power-basis coordinates (length `phi(2n)`).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// `Some(r)` when the element is the rational number `r`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// `Some(k)` when the element is the rational integer `k`.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    fn check_param(&self, other: &CycNum) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ParamMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &CycNum) -> Result<CycNum> {
        self.check_param(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycNum { n: self.n, coeffs })
    }

    pub fn try_sub(&self, other: &CycNum) -> Result<CycNum> {
        self.check_param(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycNum { n: self.n, coeffs })
    }

    pub fn try_mul(&self, other: &CycNum) -> Result<CycNum> {
        self.check_param(other)?;
        let ctx = context(self.n);
        let phi = ctx.phi;
        // Raw convolution, sparse on both sides ...
        let mut raw = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        // ... then fold the overflow through the zeta^k table.
        let mut coeffs: Vec<BigRational> = raw[..phi].to_vec();
        for (k, c) in raw.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (d, t) in ctx.root_pow[k].iter().enumerate() {
                if !t.is_zero() {
                    coeffs[d] += c * t;
                }
            }
        }
        Ok(CycNum { n: self.n, coeffs })
    }

    pub fn scale(&self, r: &BigRational) -> CycNum {
        let coeffs = self.coeffs.iter().map(|c| c * r).collect();
        CycNum { n: self.n, coeffs }
    }

    /// The multiplicative inverse, by the extended Euclidean algorithm on
    /// `(self, Phi_{2n})` in `Q[t]`.
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus: Vec<BigRational> = cyclotomic_poly(2 * self.n)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        // Invariants: r0 = u0 * self (mod Phi), r1 = u1 * self (mod Phi).
        let mut r0 = trim(self.coeffs.clone());
        let mut r1 = trim(modulus);
        let mut u0 = vec![BigRational::one()];
        let mut u1: Vec<BigRational> = vec![];
        while !r1.is_empty() {
            let (quot, rem) = poly_divmod(&r0, &r1);
            let u_next = poly_sub(&u0, &poly_mul(&quot, &u1));
            r0 = r1;
            r1 = rem;
            u0 = u1;
            u1 = u_next;
        }
        // r0 is now a nonzero constant gcd(self, Phi).
        debug_assert_eq!(r0.len(), 1, "Phi_{{2n}} is irreducible over Q");
        let scale = r0[0].recip();
        let mut out = CycNum::zero(self.n);
        for (k, c) in u0.iter().enumerate() {
            let term = CycNum::root_power(self.n, k as i64).scale(&(c * &scale));
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> CycNum {
        let mut acc = CycNum::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Division with remainder in `Q[t]`; the divisor must be nonzero.
fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!den.is_empty(), "polynomial division by zero");
    if num.len() < den.len() {
        return (vec![], num.to_vec());
    }
    let mut rem = num.to_vec();
    let mut quot = vec![BigRational::zero(); num.len() - den.len() + 1];
    let lead = den.last().unwrap();
    for k in (0..quot.len()).rev() {
        let c = &rem[k + den.len() - 1] / lead;
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            let t = &c * d;
            rem[k + i] -= t;
        }
        quot[k] = c;
    }
    (quot, trim(rem))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                self.$checked(rhs).expect("cyclotomic parameter mismatch")
            }
        }
        impl std::ops::$trait for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        CycNum {
            n: self.n,
            coeffs,
        }
    }
}

impl std::ops::Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Display for CycNum {
    /// Renders as `a0 + a1*z1 + a2*z1^2 + ...` with `z1` denoting `zeta`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            if k > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "z1")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(n: u32, v: i64) -> CycNum {
        CycNum::from_int(n, v)
    }

    #[test]
    fn cyclotomic_polys_match_known_forms() {
        let as_i64 = |m: u32| -> Vec<i64> {
            cyclotomic_poly(m)
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect()
        };
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(as_i64(10), vec![1, -1, 1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(as_i64(14), vec![1, -1, 1, -1, 1, -1, 1]);
        assert_eq!(as_i64(16), vec![1, 0, 0, 0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn degrees_follow_euler_phi() {
        for n in 2..=8 {
            assert_eq!(
                CycNum::zero(n).coeffs().len() as u32,
                euler_phi(2 * n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn fourth_root_squares_to_minus_one() {
        assert_eq!(CycNum::root_power(2, 1).pow(2), int(2, -1));
        assert_eq!(CycNum::root_power(2, 2), int(2, -1));
    }

    #[test]
    fn root_power_is_periodic() {
        assert_eq!(CycNum::root_power(3, 6), int(3, 1));
        assert_eq!(CycNum::root_power(3, -1), CycNum::root_power(3, 5));
        for n in 2..=8 {
            assert_eq!(CycNum::root_power(n, 2 * n as i64), int(n, 1), "n = {n}");
        }
    }

    #[test]
    fn minus_one_is_the_n_th_power() {
        for n in 2..=8 {
            assert_eq!(CycNum::root_power(n, n as i64), int(n, -1), "n = {n}");
        }
    }

    #[test]
    fn conjugate_roots_multiply_to_one() {
        let a = CycNum::root_power(3, 1);
        let b = CycNum::root_power(3, 5);
        assert_eq!(&a * &b, int(3, 1));
    }

    #[test]
    fn geometric_sums_of_q_vanish() {
        // sum_i q^(i*j) = n when j = 0 mod n, else 0.
        for n in 2..=8u32 {
            for j in 0..n as i64 {
                let mut acc = CycNum::zero(n);
                for i in 0..n as i64 {
                    acc = &acc + &CycNum::q_power(n, i * j);
                }
                let expect = if j == 0 { int(n, n as i64) } else { CycNum::zero(n) };
                assert_eq!(acc, expect, "n = {n}, j = {j}");
            }
        }
    }

    #[test]
    fn sqrt_q_squares_to_q() {
        for n in 2..=8 {
            let s = CycNum::sqrt_q_power(n, 1);
            assert_eq!(s.pow(2), CycNum::q_power(n, 1), "n = {n}");
        }
    }

    #[test]
    fn half_power_of_squares_is_n_periodic() {
        // q^(m^2/2) as a function of the label m must have period n, or
        // the one-dimensional modules S_m and S_{m+n} could not carry
        // opposite z-eigenvalues.
        for n in 2..=8u32 {
            for m in 0..2 * n as i64 {
                let a = CycNum::sqrt_q_power(n, m * m);
                let b = CycNum::sqrt_q_power(n, (m + n as i64) * (m + n as i64));
                assert_eq!(a, b, "n = {n}, m = {m}");
            }
        }
    }

    #[test]
    fn inverse_of_zero_is_rejected() {
        assert!(matches!(
            CycNum::zero(5).inv(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn inverses_of_sample_elements() {
        for n in 2..=8 {
            for k in 0..2 * n as i64 {
                let a = &CycNum::root_power(n, k) + &int(n, 2);
                let b = a.inv().unwrap();
                assert!((&a * &b).is_one(), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn mixing_parameters_is_an_error() {
        let a = CycNum::one(2);
        let b = CycNum::one(3);
        assert!(matches!(
            a.try_add(&b),
            Err(Error::ParamMismatch { expected: 2, found: 3 })
        ));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn display_renders_power_basis() {
        assert_eq!(CycNum::zero(4).to_string(), "0");
        assert_eq!(int(4, -3).to_string(), "-3");
        assert_eq!(CycNum::root_power(4, 1).to_string(), "z1");
        assert_eq!(CycNum::root_power(4, 3).to_string(), "z1^3");
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let e = CycNum::from_rational(4, half).try_sub(&CycNum::root_power(4, 2)).unwrap();
        assert_eq!(e.to_string(), "1/2 - z1^2");
    }

    fn arb_cyc(n: u32) -> impl Strategy<Value = CycNum> {
        let phi = euler_phi(2 * n) as usize;
        proptest::collection::vec((-6i64..=6, 1i64..=4), phi).prop_map(move |parts| {
            let mut acc = CycNum::zero(n);
            for (k, (p, q)) in parts.into_iter().enumerate() {
                let r = BigRational::new(BigInt::from(p), BigInt::from(q));
                acc = &acc + &CycNum::root_power(n, k as i64).scale(&r);
            }
            acc
        })
    }

    proptest! {
        #[test]
        fn field_axioms_hold(
            (a, b, c) in (2u32..=6).prop_flat_map(|n| (arb_cyc(n), arb_cyc(n), arb_cyc(n)))
        ) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn nonzero_elements_invert(a in (2u32..=6).prop_flat_map(arb_cyc)) {
            prop_assume!(!a.is_zero());
            let b = a.inv().unwrap();
            prop_assert!((&a * &b).is_one());
        }
    }
}
