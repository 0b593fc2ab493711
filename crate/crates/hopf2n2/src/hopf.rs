//! The Hopf algebra `H_{2n^2}` itself: elements, structure maps, and
//! verifiers for the Hopf axioms, the integral, and quasitriangularity.
//!
//! Elements are stored in the normal-form basis
//! `x^i y^j z^eps` with `0 <= i, j < n` and `eps` in `{0, 1}`.
//! The rewriting rules behind the normal form are
//!
//! ```text
//! z x^k = y^k z,   z y^k = x^k z,
//! z^2   = (1/n) sum_{s,t} q^{-st} x^s y^t,
//! ```
//!
//! applied eagerly, so every product lands back in the `2n^2`-dimensional
//! span and equality is term-by-term comparison.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cyclotomic::CycNum;
use crate::report::VerificationReport;
use crate::{Error, Result};

/// The dimension of `H_{2n^2}`.
pub fn dimension(n: u32) -> usize {
    2 * (n as usize) * (n as usize)
}

/// A normal-form basis word `x^i y^j z^eps`, `0 <= i, j < n`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Word {
    i: u32,
    j: u32,
    z: bool,
}

impl Word {
    pub fn new(n: u32, i: u32, j: u32, z: bool) -> Word {
        Word {
            i: i % n,
            j: j % n,
            z,
        }
    }

    pub fn x_exp(&self) -> u32 {
        self.i
    }

    pub fn y_exp(&self) -> u32 {
        self.j
    }

    pub fn has_z(&self) -> bool {
        self.z
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Word) -> std::cmp::Ordering {
        (self.z, self.i, self.j).cmp(&(other.z, other.i, other.j))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors: Vec<String> = Vec::new();
        for (sym, e) in [("x", self.i), ("y", self.j)] {
            match e {
                0 => {}
                1 => factors.push(sym.to_string()),
                _ => factors.push(format!("{sym}^{e}")),
            }
        }
        if self.z {
            factors.push("z".to_string());
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Result of multiplying two basis words before any `z^2` expansion:
/// either a basis word again, or a group-like prefix times `z^2`.
enum WordProd {
    Plain(Word),
    ZSquare(u32, u32),
}

fn word_mul(n: u32, a: Word, b: Word) -> WordProd {
    if !a.z {
        WordProd::Plain(Word {
            i: (a.i + b.i) % n,
            j: (a.j + b.j) % n,
            z: b.z,
        })
    } else {
        // Move z across b's group-like part, swapping x and y exponents.
        let i = (a.i + b.j) % n;
        let j = (a.j + b.i) % n;
        if b.z {
            WordProd::ZSquare(i, j)
        } else {
            WordProd::Plain(Word { i, j, z: true })
        }
    }
}

fn add_term<K: Ord>(map: &mut BTreeMap<K, CycNum>, key: K, value: CycNum) {
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(value);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = &*e.get() + &value;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// An element of `H_{2n^2}`: a finite sum of basis words with cyclotomic
/// coefficients. Zero coefficients are never stored, so `==` is exact.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElem {
    n: u32,
    terms: BTreeMap<Word, CycNum>,
}

impl AlgElem {
    pub fn zero(n: u32) -> AlgElem {
        AlgElem {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: u32) -> AlgElem {
        AlgElem::word(n, 0, 0, false)
    }

    /// The basis word `x^i y^j z^eps` as an element.
    pub fn word(n: u32, i: u32, j: u32, z: bool) -> AlgElem {
        AlgElem::monomial(n, Word::new(n, i, j, z), CycNum::one(n))
    }

    pub fn monomial(n: u32, w: Word, coeff: CycNum) -> AlgElem {
        assert_eq!(coeff.param(), n, "coefficient from the wrong field");
        let mut terms = BTreeMap::new();
        add_term(&mut terms, w, coeff);
        AlgElem { n, terms }
    }

    pub fn gen_x(n: u32) -> AlgElem {
        AlgElem::word(n, 1, 0, false)
    }

    pub fn gen_y(n: u32) -> AlgElem {
        AlgElem::word(n, 0, 1, false)
    }

    pub fn gen_z(n: u32) -> AlgElem {
        AlgElem::word(n, 0, 0, true)
    }

    /// The element `z^2 = (1/n) sum_{s,t} q^{-st} x^s y^t`.
    pub fn z_square(n: u32) -> AlgElem {
        let over_n = BigRational::new(BigInt::from(1), BigInt::from(n));
        let mut terms = BTreeMap::new();
        for s in 0..n {
            for t in 0..n {
                let c = CycNum::q_power(n, -((s * t) as i64)).scale(&over_n);
                add_term(&mut terms, Word { i: s, j: t, z: false }, c);
            }
        }
        AlgElem { n, terms }
    }

    /// The two-sided integral `(sum_i x^i)(sum_j y^j)(1 + z)`.
    pub fn integral(n: u32) -> AlgElem {
        let mut terms = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                for z in [false, true] {
                    add_term(&mut terms, Word { i, j, z }, CycNum::one(n));
                }
            }
        }
        AlgElem { n, terms }
    }

    /// All `2n^2` basis words in canonical order.
    pub fn basis(n: u32) -> Vec<Word> {
        let mut out = Vec::with_capacity(dimension(n));
        for z in [false, true] {
            for i in 0..n {
                for j in 0..n {
                    out.push(Word { i, j, z });
                }
            }
        }
        out
    }

    pub fn param(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &CycNum)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> CycNum {
        self.terms.get(w).cloned().unwrap_or_else(|| CycNum::zero(self.n))
    }

    /// Coordinates in the canonical word basis, ordered as [`AlgElem::basis`].
    pub fn coordinates(&self) -> Vec<CycNum> {
        let n = self.n as usize;
        let mut v = vec![CycNum::zero(self.n); dimension(self.n)];
        for (w, c) in &self.terms {
            let idx = (w.z as usize) * n * n + (w.i as usize) * n + w.j as usize;
            v[idx] = c.clone();
        }
        v
    }

    fn check_param(&self, other: u32) -> Result<()> {
        if self.n != other {
            return Err(Error::ParamMismatch {
                expected: self.n,
                found: other,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &AlgElem) -> Result<AlgElem> {
        self.check_param(other.n)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_term(&mut terms, *w, c.clone());
        }
        Ok(AlgElem { n: self.n, terms })
    }

    pub fn try_sub(&self, other: &AlgElem) -> Result<AlgElem> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &CycNum) -> AlgElem {
        let mut terms = BTreeMap::new();
        for (w, v) in &self.terms {
            add_term(&mut terms, *w, v * c);
        }
        AlgElem { n: self.n, terms }
    }

    pub fn scale_rational(&self, r: &BigRational) -> AlgElem {
        self.scale(&CycNum::from_rational(self.n, r.clone()))
    }

    /// The product, with `z^2` expansions batched: all `z`-times-`z` word
    /// products are first accumulated as group-like prefixes, then pushed
    /// through the `z^2` structure constant once per prefix.
    pub fn try_mul(&self, other: &AlgElem) -> Result<AlgElem> {
        self.check_param(other.n)?;
        let n = self.n;
        let mut out: BTreeMap<Word, CycNum> = BTreeMap::new();
        let mut zz: BTreeMap<(u32, u32), CycNum> = BTreeMap::new();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let c = ca * cb;
                match word_mul(n, *wa, *wb) {
                    WordProd::Plain(w) => add_term(&mut out, w, c),
                    WordProd::ZSquare(u, v) => add_term(&mut zz, (u, v), c),
                }
            }
        }
        if !zz.is_empty() {
            let zsq = AlgElem::z_square(n);
            for ((u, v), c) in zz {
                for (w, cz) in &zsq.terms {
                    let shifted = Word {
                        i: (u + w.i) % n,
                        j: (v + w.j) % n,
                        z: false,
                    };
                    add_term(&mut out, shifted, &c * cz);
                }
            }
        }
        Ok(AlgElem { n, terms: out })
    }

    pub fn pow(&self, e: u32) -> AlgElem {
        let mut acc = AlgElem::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The counit: every generator maps to 1, so this is the coefficient sum.
    pub fn counit(&self) -> CycNum {
        let mut acc = CycNum::zero(self.n);
        for c in self.terms.values() {
            acc = &acc + c;
        }
        acc
    }

    /// The antipode `S(x) = x^(-1)`, `S(y) = y^(-1)`, `S(z) = z`, extended
    /// as an anti-homomorphism: on basis words,
    /// `S(x^i y^j) = x^(-i) y^(-j)` and `S(x^i y^j z) = x^(-j) y^(-i) z`.
    pub fn antipode(&self) -> AlgElem {
        let n = self.n;
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            let sw = if w.z {
                Word {
                    i: (n - w.j) % n,
                    j: (n - w.i) % n,
                    z: true,
                }
            } else {
                Word {
                    i: (n - w.i) % n,
                    j: (n - w.j) % n,
                    z: false,
                }
            };
            add_term(&mut terms, sw, c.clone());
        }
        AlgElem { n, terms }
    }

    /// The coproduct. Group-like words map to `w (x) w`; a word with `z`
    /// picks up the full `Delta(z) = (1/n) sum q^{-ab} x^a z (x) y^b z`.
    pub fn coproduct(&self) -> TensorElem {
        let n = self.n;
        let over_n = BigRational::new(BigInt::from(1), BigInt::from(n));
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            if !w.z {
                add_term(&mut terms, (*w, *w), c.clone());
            } else {
                let c_over_n = c.scale(&over_n);
                for a in 0..n {
                    for b in 0..n {
                        let coeff = &c_over_n * &CycNum::q_power(n, -((a * b) as i64));
                        let w1 = Word {
                            i: (w.i + a) % n,
                            j: w.j,
                            z: true,
                        };
                        let w2 = Word {
                            i: w.i,
                            j: (w.j + b) % n,
                            z: true,
                        };
                        add_term(&mut terms, (w1, w2), coeff);
                    }
                }
            }
        }
        TensorElem { n, terms }
    }
}

macro_rules! forward_elem_binop {
    ($type:ident, $trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &$type {
            type Output = $type;
            fn $method(self, rhs: &$type) -> $type {
                self.$checked(rhs).expect("algebra parameter mismatch")
            }
        }
        impl std::ops::$trait for $type {
            type Output = $type;
            fn $method(self, rhs: $type) -> $type {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_elem_binop!(AlgElem, Add, add, try_add);
forward_elem_binop!(AlgElem, Sub, sub, try_sub);
forward_elem_binop!(AlgElem, Mul, mul, try_mul);

impl std::ops::Neg for &AlgElem {
    type Output = AlgElem;
    fn neg(self) -> AlgElem {
        let terms = self.terms.iter().map(|(w, c)| (*w, -c)).collect();
        AlgElem {
            n: self.n,
            terms,
        }
    }
}

impl std::ops::Neg for AlgElem {
    type Output = AlgElem;
    fn neg(self) -> AlgElem {
        -&self
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let coeff = c.to_string();
            let trivial_word = w.i == 0 && w.j == 0 && !w.z;
            if trivial_word {
                write!(f, "{coeff}")?;
            } else if c.is_one() {
                write!(f, "{w}")?;
            } else if coeff.contains(' ') {
                write!(f, "({coeff})*{w}")?;
            } else {
                write!(f, "{coeff}*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Keys used while multiplying tensor legs: a leg product is either a
/// basis word or a group-like prefix awaiting a `z^2` expansion.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum LegKey {
    Plain(Word),
    ZZ(u32, u32),
}

impl LegKey {
    fn from_prod(p: WordProd) -> LegKey {
        match p {
            WordProd::Plain(w) => LegKey::Plain(w),
            WordProd::ZSquare(u, v) => LegKey::ZZ(u, v),
        }
    }
}

/// Expand one leg: map every `LegKey` to concrete words, merging as we go.
fn expand_leg<K: Ord + Copy>(
    n: u32,
    zsq: &AlgElem,
    input: BTreeMap<(LegKey, K), CycNum>,
) -> BTreeMap<(Word, K), CycNum> {
    let mut out = BTreeMap::new();
    for ((leg, rest), c) in input {
        match leg {
            LegKey::Plain(w) => add_term(&mut out, (w, rest), c),
            LegKey::ZZ(u, v) => {
                for (w, cz) in &zsq.terms {
                    let shifted = Word {
                        i: (u + w.i) % n,
                        j: (v + w.j) % n,
                        z: false,
                    };
                    add_term(&mut out, (shifted, rest), &c * cz);
                }
            }
        }
    }
    out
}

/// An element of `H (x) H`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElem {
    n: u32,
    terms: BTreeMap<(Word, Word), CycNum>,
}

impl TensorElem {
    pub fn zero(n: u32) -> TensorElem {
        TensorElem {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: u32) -> TensorElem {
        let unit = Word::new(n, 0, 0, false);
        let mut terms = BTreeMap::new();
        terms.insert((unit, unit), CycNum::one(n));
        TensorElem { n, terms }
    }

    /// `a (x) b`.
    pub fn tensor(a: &AlgElem, b: &AlgElem) -> TensorElem {
        assert_eq!(a.n, b.n, "tensor factors from different algebras");
        let mut terms = BTreeMap::new();
        for (wa, ca) in &a.terms {
            for (wb, cb) in &b.terms {
                add_term(&mut terms, (*wa, *wb), ca * cb);
            }
        }
        TensorElem { n: a.n, terms }
    }

    pub fn param(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &CycNum)> {
        self.terms.iter()
    }

    /// Swap the two legs.
    pub fn flip(&self) -> TensorElem {
        let terms = self
            .terms
            .iter()
            .map(|((a, b), c)| ((*b, *a), c.clone()))
            .collect();
        TensorElem { n: self.n, terms }
    }

    fn check_param(&self, other: u32) -> Result<()> {
        if self.n != other {
            return Err(Error::ParamMismatch {
                expected: self.n,
                found: other,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &TensorElem) -> Result<TensorElem> {
        self.check_param(other.n)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_term(&mut terms, *w, c.clone());
        }
        Ok(TensorElem { n: self.n, terms })
    }

    pub fn try_sub(&self, other: &TensorElem) -> Result<TensorElem> {
        self.check_param(other.n)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_term(&mut terms, *w, -c);
        }
        Ok(TensorElem { n: self.n, terms })
    }

    /// Componentwise product `(a (x) b)(c (x) d) = ac (x) bd`, with the
    /// `z^2` expansions of each leg deferred and merged between passes so
    /// a product of two `n^2`-term tensors costs `O(n^6)`, not `O(n^8)`.
    pub fn try_mul(&self, other: &TensorElem) -> Result<TensorElem> {
        self.check_param(other.n)?;
        let n = self.n;
        let mut raw: BTreeMap<(LegKey, LegKey), CycNum> = BTreeMap::new();
        for ((a1, a2), ca) in &self.terms {
            for ((b1, b2), cb) in &other.terms {
                let k1 = LegKey::from_prod(word_mul(n, *a1, *b1));
                let k2 = LegKey::from_prod(word_mul(n, *a2, *b2));
                add_term(&mut raw, (k1, k2), ca * cb);
            }
        }
        let zsq = AlgElem::z_square(n);
        // Expand leg 1, then leg 2 (swapping the key pair to reuse the
        // same leg expander).
        let mid = expand_leg(n, &zsq, raw);
        let swapped: BTreeMap<(LegKey, Word), CycNum> =
            mid.into_iter().map(|((w, k), c)| ((k, w), c)).collect();
        let done = expand_leg(n, &zsq, swapped);
        let terms = done.into_iter().map(|((w2, w1), c)| ((w1, w2), c)).collect();
        Ok(TensorElem { n, terms })
    }

    /// Apply the counit to the left leg, leaving an element of `H`.
    pub fn counit_left(&self) -> AlgElem {
        let mut terms = BTreeMap::new();
        for ((_, w2), c) in &self.terms {
            add_term(&mut terms, *w2, c.clone());
        }
        AlgElem { n: self.n, terms }
    }

    /// Apply the counit to the right leg.
    pub fn counit_right(&self) -> AlgElem {
        let mut terms = BTreeMap::new();
        for ((w1, _), c) in &self.terms {
            add_term(&mut terms, *w1, c.clone());
        }
        AlgElem { n: self.n, terms }
    }

    /// `(Delta (x) id)`, sending `a (x) b` to `Delta(a) (x) b`.
    pub fn coproduct_left(&self) -> TripleTensor {
        let n = self.n;
        let mut out = TripleTensor::zero(n);
        for ((w1, w2), c) in &self.terms {
            let d = AlgElem::monomial(n, *w1, c.clone()).coproduct();
            for ((a, b), dc) in &d.terms {
                add_term(&mut out.terms, (*a, *b, *w2), dc.clone());
            }
        }
        out
    }

    /// `(id (x) Delta)`, sending `a (x) b` to `a (x) Delta(b)`.
    pub fn coproduct_right(&self) -> TripleTensor {
        let n = self.n;
        let mut out = TripleTensor::zero(n);
        for ((w1, w2), c) in &self.terms {
            let d = AlgElem::monomial(n, *w2, c.clone()).coproduct();
            for ((a, b), dc) in &d.terms {
                add_term(&mut out.terms, (*w1, *a, *b), dc.clone());
            }
        }
        out
    }

    /// Embed into legs 1 and 3 of `H (x) H (x) H`.
    pub fn embed_13(&self) -> TripleTensor {
        let unit = Word::new(self.n, 0, 0, false);
        let terms = self
            .terms
            .iter()
            .map(|((a, b), c)| ((*a, unit, *b), c.clone()))
            .collect();
        TripleTensor { n: self.n, terms }
    }

    /// Embed into legs 2 and 3.
    pub fn embed_23(&self) -> TripleTensor {
        let unit = Word::new(self.n, 0, 0, false);
        let terms = self
            .terms
            .iter()
            .map(|((a, b), c)| ((unit, *a, *b), c.clone()))
            .collect();
        TripleTensor { n: self.n, terms }
    }

    /// Embed into legs 1 and 2.
    pub fn embed_12(&self) -> TripleTensor {
        let unit = Word::new(self.n, 0, 0, false);
        let terms = self
            .terms
            .iter()
            .map(|((a, b), c)| ((*a, *b, unit), c.clone()))
            .collect();
        TripleTensor { n: self.n, terms }
    }
}

forward_elem_binop!(TensorElem, Add, add, try_add);
forward_elem_binop!(TensorElem, Sub, sub, try_sub);
forward_elem_binop!(TensorElem, Mul, mul, try_mul);

impl fmt::Display for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, ((w1, w2), c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let coeff = c.to_string();
            if c.is_one() {
                write!(f, "{w1} (x) {w2}")?;
            } else if coeff.contains(' ') {
                write!(f, "({coeff})*{w1} (x) {w2}")?;
            } else {
                write!(f, "{coeff}*{w1} (x) {w2}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An element of `H (x) H (x) H`; only needed transiently, for
/// coassociativity and the two R-matrix coproduct identities.
#[derive(Clone, PartialEq, Eq)]
pub struct TripleTensor {
    n: u32,
    terms: BTreeMap<(Word, Word, Word), CycNum>,
}

impl TripleTensor {
    pub fn zero(n: u32) -> TripleTensor {
        TripleTensor {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Componentwise product, expanding `z^2` leg by leg as in
    /// [`TensorElem::try_mul`].
    pub fn try_mul(&self, other: &TripleTensor) -> Result<TripleTensor> {
        if self.n != other.n {
            return Err(Error::ParamMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let n = self.n;
        let mut raw: BTreeMap<(LegKey, (LegKey, LegKey)), CycNum> = BTreeMap::new();
        for ((a1, a2, a3), ca) in &self.terms {
            for ((b1, b2, b3), cb) in &other.terms {
                let k1 = LegKey::from_prod(word_mul(n, *a1, *b1));
                let k2 = LegKey::from_prod(word_mul(n, *a2, *b2));
                let k3 = LegKey::from_prod(word_mul(n, *a3, *b3));
                add_term(&mut raw, (k1, (k2, k3)), ca * cb);
            }
        }
        let zsq = AlgElem::z_square(n);
        let pass1 = expand_leg(n, &zsq, raw);
        let rot1: BTreeMap<(LegKey, (LegKey, Word)), CycNum> = pass1
            .into_iter()
            .map(|((w1, (k2, k3)), c)| ((k2, (k3, w1)), c))
            .collect();
        let pass2 = expand_leg(n, &zsq, rot1);
        let rot2: BTreeMap<(LegKey, (Word, Word)), CycNum> = pass2
            .into_iter()
            .map(|((w2, (k3, w1)), c)| ((k3, (w1, w2)), c))
            .collect();
        let pass3 = expand_leg(n, &zsq, rot2);
        let terms = pass3
            .into_iter()
            .map(|((w3, (w1, w2)), c)| ((w1, w2, w3), c))
            .collect();
        Ok(TripleTensor { n, terms })
    }
}

forward_elem_binop!(TripleTensor, Mul, mul, try_mul);

/// The canonical R-matrix `R = sum_i e_i (x) y^(-i)
/// = (1/n) sum_{i,j} q^(-ij) x^j (x) y^(-i)`.
pub fn r_matrix(n: u32) -> TensorElem {
    let over_n = BigRational::new(BigInt::from(1), BigInt::from(n));
    let mut terms = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let c = CycNum::q_power(n, -((i * j) as i64)).scale(&over_n);
            let w1 = Word { i: j, j: 0, z: false };
            let w2 = Word {
                i: 0,
                j: (n - i) % n,
                z: false,
            };
            add_term(&mut terms, (w1, w2), c);
        }
    }
    TensorElem { n, terms }
}

/// The inverse `J = R^(-1) = (1/n) sum_{i,j} q^(-ij) x^j (x) y^i`.
pub fn j_element(n: u32) -> TensorElem {
    let over_n = BigRational::new(BigInt::from(1), BigInt::from(n));
    let mut terms = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let c = CycNum::q_power(n, -((i * j) as i64)).scale(&over_n);
            let w1 = Word { i: j, j: 0, z: false };
            let w2 = Word { i: 0, j: i, z: false };
            add_term(&mut terms, (w1, w2), c);
        }
    }
    TensorElem { n, terms }
}

fn sample_words(n: u32, count: usize, rng: &mut ChaCha8Rng) -> Vec<Word> {
    (0..count)
        .map(|_| Word {
            i: rng.gen_range(0..n),
            j: rng.gen_range(0..n),
            z: rng.gen_bool(0.5),
        })
        .collect()
}

/// Check every Hopf-algebra axiom for `H_{2n^2}`.
///
/// Per-element checks (coassociativity, counit laws, antipode axiom) run
/// over the full basis for every `n`. Pair checks (associativity, the
/// homomorphism property of `Delta`) are exhaustive for small `n` and
/// switch to a seeded random sample once the pair count makes exhaustion
/// pointless; the generator relations themselves are always checked
/// exactly.
pub fn verify_hopf_axioms(n: u32) -> VerificationReport {
    let mut report = VerificationReport::new();
    let basis = AlgElem::basis(n);

    report.check(
        "basis_dimension_2n2",
        basis.len() == dimension(n),
        || format!("expected {} basis words, found {}", dimension(n), basis.len()),
    );

    // Associativity of multiply on basis triples.
    {
        let mut bad = None;
        let triples: Vec<(Word, Word, Word)> = if n <= 4 {
            all_triples(&basis)
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001 + n as u64);
            let ws = sample_words(n, 3 * 400, &mut rng);
            ws.chunks(3).map(|c| (c[0], c[1], c[2])).collect()
        };
        for (a, b, c) in triples {
            let ea = AlgElem::monomial(n, a, CycNum::one(n));
            let eb = AlgElem::monomial(n, b, CycNum::one(n));
            let ec = AlgElem::monomial(n, c, CycNum::one(n));
            if (&ea * &eb) * ec.clone() != ea * (eb * ec) {
                bad = Some(format!("({a})({b})({c})"));
                break;
            }
        }
        report.check("multiply_associative", bad.is_none(), || {
            format!("associativity fails at {}", bad.unwrap())
        });
    }

    // Defining relations in the algebra itself.
    {
        let x = AlgElem::gen_x(n);
        let y = AlgElem::gen_y(n);
        let z = AlgElem::gen_z(n);
        let one = AlgElem::one(n);
        let rels: Vec<(&str, AlgElem, AlgElem)> = vec![
            ("x^n = 1", x.pow(n), one.clone()),
            ("y^n = 1", y.pow(n), one.clone()),
            ("xy = yx", &x * &y, &y * &x),
            ("zx = yz", &z * &x, &y * &z),
            ("zy = xz", &z * &y, &x * &z),
            ("z^2 = (1/n) sum q^(-st) x^s y^t", &z * &z, AlgElem::z_square(n)),
        ];
        let bad: Vec<&str> = rels
            .iter()
            .filter(|(_, l, r)| l != r)
            .map(|(name, _, _)| *name)
            .collect();
        report.check("defining_relations", bad.is_empty(), || {
            format!("relations violated: {}", bad.join(", "))
        });
    }

    // Coassociativity, exhaustively.
    {
        let mut bad = None;
        for w in &basis {
            let d = AlgElem::monomial(n, *w, CycNum::one(n)).coproduct();
            if d.coproduct_left() != d.coproduct_right() {
                bad = Some(w.to_string());
                break;
            }
        }
        report.check("coassociativity", bad.is_none(), || {
            format!("(Delta x id)Delta != (id x Delta)Delta at {}", bad.unwrap())
        });
    }

    // Counit laws, exhaustively.
    {
        let mut bad = None;
        for w in &basis {
            let e = AlgElem::monomial(n, *w, CycNum::one(n));
            let d = e.coproduct();
            if d.counit_left() != e || d.counit_right() != e {
                bad = Some(w.to_string());
                break;
            }
        }
        report.check("counit_laws", bad.is_none(), || {
            format!("(eps x id)Delta or (id x eps)Delta misses identity at {}", bad.unwrap())
        });
    }

    report.merge(coproduct_relation_checks(n, &AlgElem::z_square(n)));

    // Delta is an algebra map on basis pairs.
    {
        let pairs: Vec<(Word, Word)> = if n <= 3 {
            let mut v = Vec::new();
            for a in &basis {
                for b in &basis {
                    v.push((*a, *b));
                }
            }
            v
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002 + n as u64);
            let count = if n <= 6 { 40 } else { 12 };
            let ws = sample_words(n, 2 * count, &mut rng);
            ws.chunks(2).map(|c| (c[0], c[1])).collect()
        };
        let mut bad = None;
        for (a, b) in pairs {
            let ea = AlgElem::monomial(n, a, CycNum::one(n));
            let eb = AlgElem::monomial(n, b, CycNum::one(n));
            if (&ea * &eb).coproduct() != &ea.coproduct() * &eb.coproduct() {
                bad = Some(format!("({a}, {b})"));
                break;
            }
        }
        report.check("coproduct_homomorphism", bad.is_none(), || {
            format!("Delta(ab) != Delta(a)Delta(b) at {}", bad.unwrap())
        });
    }

    // Counit is an algebra map: with every basis word mapping to 1 this
    // reduces to the generator relations, which are cheap to hit exactly.
    {
        let x = AlgElem::gen_x(n);
        let y = AlgElem::gen_y(n);
        let z = AlgElem::gen_z(n);
        let ok = x.pow(n).counit().is_one()
            && y.pow(n).counit().is_one()
            && (&z * &z).counit() == (&z.counit() * &z.counit())
            && (&z * &x).counit() == (&y * &z).counit();
        report.check("counit_homomorphism", ok, || {
            "eps disagrees on a defining relation".to_string()
        });
    }

    // Antipode axiom m(S x id)Delta(h) = eps(h) 1 = m(id x S)Delta(h),
    // exhaustively.
    {
        let mut bad = None;
        for w in &basis {
            let e = AlgElem::monomial(n, *w, CycNum::one(n));
            let target = AlgElem::one(n).scale(&e.counit());
            let d = e.coproduct();
            let mut left = AlgElem::zero(n);
            let mut right = AlgElem::zero(n);
            for ((w1, w2), c) in d.terms() {
                let s1 = AlgElem::monomial(n, *w1, c.clone()).antipode();
                let p1 = &s1 * &AlgElem::monomial(n, *w2, CycNum::one(n));
                left = &left + &p1;
                let s2 = AlgElem::monomial(n, *w2, CycNum::one(n)).antipode();
                let p2 = &AlgElem::monomial(n, *w1, c.clone()) * &s2;
                right = &right + &p2;
            }
            if left != target || right != target {
                bad = Some(w.to_string());
                break;
            }
        }
        report.check("antipode_axiom", bad.is_none(), || {
            format!("m(S x id)Delta != eps at {}", bad.unwrap())
        });
    }

    // S is an involution here, and fixes z.
    {
        let mut ok = AlgElem::gen_z(n).antipode() == AlgElem::gen_z(n);
        ok &= AlgElem::gen_x(n).antipode() == AlgElem::word(n, n - 1, 0, false);
        for w in &basis {
            let e = AlgElem::monomial(n, *w, CycNum::one(n));
            if e.antipode().antipode() != e {
                ok = false;
                break;
            }
        }
        report.check("antipode_involutive", ok, || {
            "S^2 != id on the basis, or S moves a generator it should fix".to_string()
        });
    }

    // S is an anti-homomorphism on pairs.
    {
        let pairs: Vec<(Word, Word)> = if n <= 4 {
            let mut v = Vec::new();
            for a in &basis {
                for b in &basis {
                    v.push((*a, *b));
                }
            }
            v
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003 + n as u64);
            let ws = sample_words(n, 2 * 200, &mut rng);
            ws.chunks(2).map(|c| (c[0], c[1])).collect()
        };
        let mut bad = None;
        for (a, b) in pairs {
            let ea = AlgElem::monomial(n, a, CycNum::one(n));
            let eb = AlgElem::monomial(n, b, CycNum::one(n));
            if (&ea * &eb).antipode() != &eb.antipode() * &ea.antipode() {
                bad = Some(format!("({a}, {b})"));
                break;
            }
        }
        report.check("antipode_antihomomorphism", bad.is_none(), || {
            format!("S(ab) != S(b)S(a) at {}", bad.unwrap())
        });
    }

    report
}

/// `Delta` and `eps` on the defining relations, with the `z^2` reference
/// element passed in so tests can corrupt it and watch the check fail.
fn coproduct_relation_checks(n: u32, z_sq: &AlgElem) -> VerificationReport {
    let mut report = VerificationReport::new();
    let dx = AlgElem::gen_x(n).coproduct();
    let dy = AlgElem::gen_y(n).coproduct();
    let dz = AlgElem::gen_z(n).coproduct();
    let one = TensorElem::one(n);

    let mut pow = TensorElem::one(n);
    for _ in 0..n {
        pow = &pow * &dx;
    }
    let xn = pow == one;
    let mut pow = TensorElem::one(n);
    for _ in 0..n {
        pow = &pow * &dy;
    }
    let yn = pow == one;
    let xy = &dx * &dy == &dy * &dx;
    let zx = &dz * &dx == &dy * &dz;
    let zy = &dz * &dy == &dx * &dz;
    let zz = &dz * &dz == z_sq.coproduct();
    let all = [
        ("Delta(x)^n = 1x1", xn),
        ("Delta(y)^n = 1x1", yn),
        ("Delta(x)Delta(y) = Delta(y)Delta(x)", xy),
        ("Delta(z)Delta(x) = Delta(y)Delta(z)", zx),
        ("Delta(z)Delta(y) = Delta(x)Delta(z)", zy),
        ("Delta(z)^2 = Delta(z^2)", zz),
    ];
    let bad: Vec<&str> = all.iter().filter(|(_, ok)| !ok).map(|(s, _)| *s).collect();
    report.check("coproduct_respects_relations", bad.is_empty(), || {
        format!("failing: {}", bad.join("; "))
    });
    report
}

fn all_triples(basis: &[Word]) -> Vec<(Word, Word, Word)> {
    let mut v = Vec::with_capacity(basis.len().pow(3));
    for a in basis {
        for b in basis {
            for c in basis {
                v.push((*a, *b, *c));
            }
        }
    }
    v
}

/// Check that `Lambda = (sum x^i)(sum y^j)(1 + z)` is a two-sided
/// integral with `eps(Lambda) = 2n^2`, and is antipode-invariant.
pub fn verify_integral(n: u32) -> VerificationReport {
    let mut report = VerificationReport::new();
    let lambda = AlgElem::integral(n);

    let eps = lambda.counit();
    report.check(
        "integral_counit_2n2",
        eps == CycNum::from_int(n, dimension(n) as i64),
        || format!("eps(Lambda) = {eps}, expected {}", dimension(n)),
    );

    let mut bad = None;
    for w in AlgElem::basis(n) {
        let h = AlgElem::monomial(n, w, CycNum::one(n));
        let expect = lambda.scale(&h.counit());
        if &h * &lambda != expect {
            bad = Some(format!("h Lambda != eps(h) Lambda at h = {w}"));
            break;
        }
        if &lambda * &h != expect {
            bad = Some(format!("Lambda h != eps(h) Lambda at h = {w}"));
            break;
        }
    }
    report.check("integral_two_sided", bad.is_none(), || bad.unwrap());

    report.check(
        "integral_antipode_invariant",
        lambda.antipode() == lambda,
        || "S(Lambda) != Lambda".to_string(),
    );
    report
}

/// Check the quasitriangular structure carried by `R = sum e_i (x) y^(-i)`.
pub fn verify_quasitriangular(n: u32) -> VerificationReport {
    quasitriangular_checks(n, &r_matrix(n), &j_element(n))
}

fn quasitriangular_checks(n: u32, r: &TensorElem, j: &TensorElem) -> VerificationReport {
    let mut report = VerificationReport::new();
    let one = TensorElem::one(n);

    report.check(
        "r_matrix_invertible",
        &(j * r) == &one && &(r * j) == &one,
        || "J R != 1 x 1 or R J != 1 x 1".to_string(),
    );

    // (i) Delta^op(h) R = R Delta(h) on the generators; both coproducts
    // are algebra maps, so the generators suffice.
    {
        let mut bad = None;
        for (name, g) in [
            ("x", AlgElem::gen_x(n)),
            ("y", AlgElem::gen_y(n)),
            ("z", AlgElem::gen_z(n)),
        ] {
            let d = g.coproduct();
            if &d.flip() * r != r * &d {
                bad = Some(name);
                break;
            }
        }
        report.check("r_intertwines_coproduct", bad.is_none(), || {
            format!("Delta^op(h) R != R Delta(h) at h = {}", bad.unwrap())
        });
    }

    // (ii) (Delta x id)(R) = R13 R23.
    report.check(
        "r_hexagon_left",
        r.coproduct_left() == &r.embed_13() * &r.embed_23(),
        || "(Delta x id)(R) != R13 R23".to_string(),
    );

    // (iii) (id x Delta)(R) = R13 R12.
    report.check(
        "r_hexagon_right",
        r.coproduct_right() == &r.embed_13() * &r.embed_12(),
        || "(id x Delta)(R) != R13 R12".to_string(),
    );

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: u32, i: u32, j: u32, z: bool) -> AlgElem {
        AlgElem::word(n, i, j, z)
    }

    #[test]
    fn z_squared_for_n2_is_half_sum() {
        // z^2 = (1 + x + y - xy)/2 in the Kac-Paljutkin algebra.
        let z = AlgElem::gen_z(2);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let expect = (&(&word(2, 0, 0, false) + &word(2, 1, 0, false))
            + &(&word(2, 0, 1, false) - &word(2, 1, 1, false)))
            .scale_rational(&half);
        assert_eq!(&z * &z, expect);
        assert_eq!(AlgElem::z_square(2), expect);
    }

    #[test]
    fn z_square_coefficient_spot_check() {
        // In z^2 the word x y^2 carries q^(-2)/3 for n = 3.
        let zsq = AlgElem::z_square(3);
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let expect = CycNum::q_power(3, -2).scale(&third);
        assert_eq!(zsq.coeff(&Word::new(3, 1, 2, false)), expect);
    }

    #[test]
    fn z_moves_across_group_likes_by_swapping_exponents() {
        let n = 5;
        let z = AlgElem::gen_z(n);
        let g = word(n, 2, 3, false);
        assert_eq!(&z * &g, word(n, 3, 2, true));
        assert_eq!(&g * &z, word(n, 2, 3, true));
    }

    #[test]
    fn coproduct_of_z_for_n2() {
        // Delta(z) = (z(x)z + xz(x)z + z(x)yz - xz(x)yz)/2 for n = 2,
        // writing (x) for the tensor sign.
        let d = AlgElem::gen_z(2).coproduct();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let minus_half = -&half;
        let mut expect = TensorElem::zero(2);
        let t = |a: &AlgElem, b: &AlgElem| TensorElem::tensor(a, b);
        let z = AlgElem::gen_z(2);
        let xz = word(2, 1, 0, true);
        let yz = word(2, 0, 1, true);
        expect = &expect + &t(&z.scale_rational(&half), &z);
        expect = &expect + &t(&xz.scale_rational(&half), &z);
        expect = &expect + &t(&z.scale_rational(&half), &yz);
        expect = &expect + &t(&xz.scale_rational(&minus_half), &yz);
        assert_eq!(d, expect);
    }

    #[test]
    fn coproduct_of_group_likes_is_diagonal() {
        let g = word(4, 3, 1, false);
        assert_eq!(g.coproduct(), TensorElem::tensor(&g, &g));
    }

    #[test]
    fn counit_is_one_on_every_basis_word() {
        for w in AlgElem::basis(3) {
            let e = AlgElem::monomial(3, w, CycNum::one(3));
            assert!(e.counit().is_one(), "eps({w}) != 1");
        }
    }

    #[test]
    fn antipode_on_words() {
        // S(xz) = y^(n-1) z, S(x) = x^(n-1), S(z) = z.
        let n = 3;
        assert_eq!(word(n, 1, 0, true).antipode(), word(n, 0, 2, true));
        assert_eq!(AlgElem::gen_x(n).antipode(), word(n, 2, 0, false));
        assert_eq!(AlgElem::gen_z(n).antipode(), AlgElem::gen_z(n));
    }

    #[test]
    fn integral_has_counit_2n2() {
        for n in 2..=5 {
            let eps = AlgElem::integral(n).counit();
            assert_eq!(eps, CycNum::from_int(n, 2 * (n as i64) * (n as i64)));
        }
    }

    #[test]
    fn tensor_product_is_componentwise() {
        let n = 3;
        let a = word(n, 1, 0, false);
        let b = word(n, 0, 2, false);
        let c = word(n, 2, 2, false);
        let d = word(n, 1, 1, false);
        let lhs = &TensorElem::tensor(&a, &b) * &TensorElem::tensor(&c, &d);
        let rhs = TensorElem::tensor(&(&a * &c), &(&b * &d));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_product_handles_z_squares_in_both_legs() {
        let n = 3;
        let z = AlgElem::gen_z(n);
        let lhs = &TensorElem::tensor(&z, &z) * &TensorElem::tensor(&z, &z);
        let zsq = &z * &z;
        assert_eq!(lhs, TensorElem::tensor(&zsq, &zsq));
    }

    #[test]
    fn hopf_axioms_hold_for_small_n() {
        for n in 2..=4 {
            let report = verify_hopf_axioms(n);
            assert!(report.passed(), "n = {n}:\n{report}");
        }
    }

    #[test]
    fn integral_checks_hold_for_small_n() {
        for n in 2..=4 {
            let report = verify_integral(n);
            assert!(report.passed(), "n = {n}:\n{report}");
        }
    }

    #[test]
    fn quasitriangular_checks_hold_for_small_n() {
        for n in 2..=4 {
            let report = verify_quasitriangular(n);
            assert!(report.passed(), "n = {n}:\n{report}");
        }
    }

    #[test]
    fn corrupted_z_square_is_detected() {
        // Flip the sign in the exponent: q^(+st) instead of q^(-st).
        let n = 3;
        let over_n = BigRational::new(BigInt::from(1), BigInt::from(n));
        let mut bad = AlgElem::zero(n);
        for s in 0..n {
            for t in 0..n {
                let c = CycNum::q_power(n, (s * t) as i64).scale(&over_n);
                bad = &bad + &AlgElem::monomial(n, Word::new(n, s, t, false), c);
            }
        }
        assert_ne!(bad, AlgElem::z_square(n));
        let report = coproduct_relation_checks(n, &bad);
        assert!(!report.passed(), "corrupted z^2 must fail:\n{report}");
    }

    #[test]
    fn corrupted_r_matrix_is_detected() {
        // Negate a single term of R; the hexagon identities must fail.
        let n = 2;
        let r = r_matrix(n);
        let ((w1, w2), c) = r.terms().next().map(|(k, v)| (*k, v.clone())).unwrap();
        let twice = CycNum::from_int(n, 2);
        let corrupt = &r - &TensorElem::tensor(
            &AlgElem::monomial(n, w1, &c * &twice),
            &AlgElem::monomial(n, w2, CycNum::one(n)),
        );
        let report = quasitriangular_checks(n, &corrupt, &j_element(n));
        assert!(!report.passed(), "corrupted R must fail:\n{report}");
    }

    #[test]
    fn mixing_parameters_is_rejected() {
        let a = AlgElem::one(2);
        let b = AlgElem::one(3);
        assert!(matches!(
            a.try_mul(&b),
            Err(Error::ParamMismatch { expected: 2, found: 3 })
        ));
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn display_is_readable() {
        let n = 3;
        let e = &word(n, 1, 2, true) + &AlgElem::one(n).scale(&CycNum::from_int(n, -2));
        assert_eq!(e.to_string(), "-2 + x*y^2*z");
    }
}
