//! Fusion rules for the irreducible modules of `H_{2n^2}`, the
//! Grothendieck ring they generate, and a verifier that replays every
//! product through the matrix-level tensor-and-decompose oracle in
//! [`crate::repr`]. The two routes share no code beyond the labels, so
//! agreement is meaningful.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use serde_json::{json, Map, Value};

use crate::repr::{build_simple, decompose, tensor_action, SimpleLabel};
use crate::report::VerificationReport;
use crate::{Error, Result};

/// An element of the Grothendieck ring: an integer combination of
/// module labels. Genuine modules have non-negative coordinates, but
/// ring arithmetic (differences of relations, Fibonacci recursions)
/// needs the virtual ones too.
#[derive(Clone, PartialEq, Eq)]
pub struct FusionVector {
    n: u32,
    mults: BTreeMap<SimpleLabel, i64>,
}

fn validate_label(n: u32, label: SimpleLabel) -> Result<()> {
    let ok = match label {
        SimpleLabel::OneDim(m) => m < 2 * n,
        SimpleLabel::TwoDim(i, j) => i < j && j < n,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidLabel(format!("{label} is not a label for parameter {n}")))
    }
}

impl FusionVector {
    pub fn zero(n: u32) -> FusionVector {
        FusionVector {
            n,
            mults: BTreeMap::new(),
        }
    }

    /// The class of the trivial module, the ring unit.
    pub fn unit(n: u32) -> FusionVector {
        FusionVector::single(n, SimpleLabel::OneDim(0))
    }

    pub fn single(n: u32, label: SimpleLabel) -> FusionVector {
        let mut mults = BTreeMap::new();
        mults.insert(label, 1);
        FusionVector { n, mults }
    }

    pub fn from_multiplicities(
        n: u32,
        entries: impl IntoIterator<Item = (SimpleLabel, i64)>,
    ) -> Result<FusionVector> {
        let mut mults = BTreeMap::new();
        for (label, mult) in entries {
            validate_label(n, label)?;
            let slot = mults.entry(label).or_insert(0);
            *slot += mult;
            if *slot == 0 {
                mults.remove(&label);
            }
        }
        Ok(FusionVector { n, mults })
    }

    pub fn param(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    /// Is this exactly one copy of the given label?
    pub fn is_single(&self, label: SimpleLabel) -> bool {
        self.mults.len() == 1 && self.mults.get(&label) == Some(&1)
    }

    pub fn multiplicity(&self, label: &SimpleLabel) -> i64 {
        self.mults.get(label).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SimpleLabel, &i64)> {
        self.mults.iter()
    }

    /// Total dimension, counting multiplicity (the ring's dimension
    /// grading; negative for virtual elements).
    pub fn dim(&self) -> i64 {
        self.mults
            .iter()
            .map(|(l, m)| m * l.dim() as i64)
            .sum()
    }

    fn check_param(&self, other: &FusionVector) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ParamMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &FusionVector) -> Result<FusionVector> {
        self.check_param(other)?;
        let mut mults = self.mults.clone();
        for (l, m) in &other.mults {
            let slot = mults.entry(*l).or_insert(0);
            *slot += m;
            if *slot == 0 {
                mults.remove(l);
            }
        }
        Ok(FusionVector { n: self.n, mults })
    }

    pub fn try_sub(&self, other: &FusionVector) -> Result<FusionVector> {
        self.try_add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> FusionVector {
        if k == 0 {
            return FusionVector::zero(self.n);
        }
        let mults = self.mults.iter().map(|(l, m)| (*l, m * k)).collect();
        FusionVector { n: self.n, mults }
    }

    /// The ring product, distributing [`fuse`] over both factors.
    pub fn try_mul(&self, other: &FusionVector) -> Result<FusionVector> {
        self.check_param(other)?;
        let mut acc = FusionVector::zero(self.n);
        for (la, ma) in &self.mults {
            for (lb, mb) in &other.mults {
                let prod = fuse(self.n, *la, *lb)?.scale(ma * mb);
                acc = acc.try_add(&prod)?;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> FusionVector {
        let mut acc = FusionVector::unit(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

macro_rules! forward_fusion_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &FusionVector {
            type Output = FusionVector;
            fn $method(self, rhs: &FusionVector) -> FusionVector {
                self.$checked(rhs).expect("fusion parameter mismatch")
            }
        }
        impl std::ops::$trait for FusionVector {
            type Output = FusionVector;
            fn $method(self, rhs: FusionVector) -> FusionVector {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_fusion_binop!(Add, add, try_add);
forward_fusion_binop!(Sub, sub, try_sub);
forward_fusion_binop!(Mul, mul, try_mul);

impl fmt::Display for FusionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return write!(f, "0");
        }
        for (idx, (label, mult)) in self.mults.iter().enumerate() {
            let mag = mult.abs();
            if idx == 0 {
                if *mult < 0 {
                    write!(f, "-")?;
                }
            } else if *mult < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag == 1 {
                write!(f, "{label}")?;
            } else {
                write!(f, "{mag}*{label}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FusionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Split a one-dimensional index into (residue mod n, upper-half flag).
fn split(n: u32, m: u32) -> (u32, bool) {
    (m % n, m >= n)
}

/// The product of two irreducibles as a sum of irreducibles.
///
/// For one-dimensional factors the residues add mod `n` and the halves
/// add mod 2. A one-dimensional factor shifts both indices of a
/// two-dimensional one. For two two-dimensional factors `S_{i,j}` and
/// `S_{k,l}` the result depends on which of the index sums collide
/// mod `n`: no collision gives two two-dimensional summands, and each
/// collision `i+k = j+l` or `i+l = j+k` splits the corresponding
/// summand into the pair of one-dimensional modules with that residue.
pub fn fuse(n: u32, a: SimpleLabel, b: SimpleLabel) -> Result<FusionVector> {
    validate_label(n, a)?;
    validate_label(n, b)?;
    let v = match (a, b) {
        (SimpleLabel::OneDim(m1), SimpleLabel::OneDim(m2)) => {
            let (r1, h1) = split(n, m1);
            let (r2, h2) = split(n, m2);
            let residue = (r1 + r2) % n;
            let upper = h1 != h2;
            FusionVector::single(n, SimpleLabel::OneDim(residue + if upper { n } else { 0 }))
        }
        (SimpleLabel::OneDim(m), SimpleLabel::TwoDim(i, j))
        | (SimpleLabel::TwoDim(i, j), SimpleLabel::OneDim(m)) => {
            let shifted = SimpleLabel::two_dim(n, (m + i) as i64, (m + j) as i64)?;
            FusionVector::single(n, shifted)
        }
        (SimpleLabel::TwoDim(i, j), SimpleLabel::TwoDim(k, l)) => {
            let collide_direct = (i + k) % n == (j + l) % n;
            let collide_cross = (i + l) % n == (j + k) % n;
            let mut parts: Vec<(SimpleLabel, i64)> = Vec::new();
            if collide_direct {
                let r = (i + k) % n;
                parts.push((SimpleLabel::OneDim(r), 1));
                parts.push((SimpleLabel::OneDim(r + n), 1));
            } else {
                parts.push((SimpleLabel::two_dim(n, (i + k) as i64, (j + l) as i64)?, 1));
            }
            if collide_cross {
                let r = (i + l) % n;
                parts.push((SimpleLabel::OneDim(r), 1));
                parts.push((SimpleLabel::OneDim(r + n), 1));
            } else {
                parts.push((SimpleLabel::two_dim(n, (i + l) as i64, (j + k) as i64)?, 1));
            }
            FusionVector::from_multiplicities(n, parts)?
        }
    };
    Ok(v)
}

/// The one-dimensional product written out as the five-way case split
/// on raw index sums, exactly as stated piecewise; kept separate from
/// [`fuse`] so the two can be compared over every pair.
fn one_dim_case_split(n: u32, m1: u32, m2: u32) -> SimpleLabel {
    let s = m1 + m2;
    let lower1 = m1 < n;
    let lower2 = m2 < n;
    let u = if lower1 && lower2 {
        s % n
    } else if lower1 != lower2 {
        if s < 2 * n {
            s
        } else {
            s - n
        }
    } else if s < 3 * n {
        s - 2 * n
    } else {
        s - 3 * n
    };
    SimpleLabel::OneDim(u)
}

/// The complete multiplication table over the canonical label list.
pub struct FusionTable {
    n: u32,
    labels: Vec<SimpleLabel>,
    cells: Vec<Vec<FusionVector>>,
}

pub fn fusion_table(n: u32) -> Result<FusionTable> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "parameter must be at least 2, got {n}"
        )));
    }
    let labels = SimpleLabel::enumerate(n);
    let mut cells = Vec::with_capacity(labels.len());
    for a in &labels {
        let mut row = Vec::with_capacity(labels.len());
        for b in &labels {
            row.push(fuse(n, *a, *b)?);
        }
        cells.push(row);
    }
    Ok(FusionTable { n, labels, cells })
}

impl FusionTable {
    pub fn param(&self) -> u32 {
        self.n
    }

    pub fn labels(&self) -> &[SimpleLabel] {
        &self.labels
    }

    pub fn cell(&self, a: usize, b: usize) -> &FusionVector {
        &self.cells[a][b]
    }

    /// JSON form: the label list plus the full table of multiplicity
    /// maps, row by row.
    pub fn to_json(&self) -> Value {
        let simples: Vec<Value> = self.labels.iter().map(|l| json!(l.to_string())).collect();
        let table: Vec<Value> = self
            .cells
            .iter()
            .map(|row| {
                let cells: Vec<Value> = row
                    .iter()
                    .map(|v| {
                        let mut m = Map::new();
                        for (label, mult) in v.iter() {
                            m.insert(label.to_string(), json!(mult));
                        }
                        Value::Object(m)
                    })
                    .collect();
                Value::Array(cells)
            })
            .collect();
        json!({
            "schema": "hfl/1",
            "n": self.n,
            "simples": simples,
            "table": table,
        })
    }

    /// CSV form: one `a,b,c,mult` row per nonzero multiplicity, in
    /// table order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,b,c,mult\n");
        for (ai, a) in self.labels.iter().enumerate() {
            for (bi, b) in self.labels.iter().enumerate() {
                for (c, mult) in self.cells[ai][bi].iter() {
                    out.push_str(&format!("{a},{b},{c},{mult}\n"));
                }
            }
        }
        out
    }
}

/// Compare the closed-form product against the tensor-and-decompose
/// oracle over every ordered pair of labels, and check the ring-level
/// properties of the table (unit, commutativity, dimension grading,
/// duality, associativity).
pub fn verify_fusion(n: u32) -> VerificationReport {
    let mut report = VerificationReport::new();
    let labels = SimpleLabel::enumerate(n);

    // The oracle sweep, in parallel: every ordered pair.
    {
        let mut pairs: Vec<(SimpleLabel, SimpleLabel)> = Vec::new();
        for a in &labels {
            for b in &labels {
                pairs.push((*a, *b));
            }
        }
        let mismatches: Vec<String> = pairs
            .par_iter()
            .filter_map(|(a, b)| {
                let closed = match fuse(n, *a, *b) {
                    Ok(v) => v,
                    Err(e) => return Some(format!("{a} (x) {b}: {e}")),
                };
                let ra = build_simple(n, *a).ok()?;
                let rb = build_simple(n, *b).ok()?;
                let oracle = match decompose(&tensor_action(&ra.action, &rb.action)) {
                    Ok(v) => v,
                    Err(e) => return Some(format!("{a} (x) {b}: oracle failed: {e}")),
                };
                if closed != oracle {
                    Some(format!(
                        "{a} (x) {b}: closed form gave {closed}, decomposition gave {oracle}"
                    ))
                } else {
                    None
                }
            })
            .collect();
        if mismatches.is_empty() {
            report.pass_note(
                "fusion_matches_decomposition",
                format!("all {} ordered pairs agree", pairs.len()),
            );
        } else {
            report.fail(
                "fusion_matches_decomposition",
                mismatches.join("; "),
            );
        }
    }

    // The five-way case split for one-dimensional products agrees with
    // the reduced rule on every pair, boundaries included; any
    // divergence would be listed with both outcomes.
    {
        let mut diverging = Vec::new();
        for m1 in 0..2 * n {
            for m2 in 0..2 * n {
                let a = SimpleLabel::OneDim(m1);
                let b = SimpleLabel::OneDim(m2);
                let cased = one_dim_case_split(n, m1, m2);
                let ruled = fuse(n, a, b).unwrap();
                if !ruled.is_single(cased) {
                    diverging.push(format!(
                        "S_{m1} (x) S_{m2}: case split gave {cased}, rule gave {ruled}"
                    ));
                }
            }
        }
        report.record(
            "one_dim_case_split_agrees",
            diverging.is_empty(),
            if diverging.is_empty() {
                Some("no divergence at any pair, boundaries included".to_string())
            } else {
                Some(diverging.join("; "))
            },
        );
    }

    let table = match fusion_table(n) {
        Ok(t) => t,
        Err(e) => {
            report.fail("fusion_table_construction", e.to_string());
            return report;
        }
    };

    // Unit row and column.
    {
        let unit_idx = 0;
        let mut ok = true;
        for (i, l) in labels.iter().enumerate() {
            ok &= table.cell(unit_idx, i).is_single(*l);
            ok &= table.cell(i, unit_idx).is_single(*l);
        }
        report.check("fusion_unit_law", ok, || {
            "S_0 fails to act as the identity".to_string()
        });
    }

    // Commutativity.
    {
        let mut bad = None;
        'outer: for i in 0..labels.len() {
            for j in 0..labels.len() {
                if table.cell(i, j) != table.cell(j, i) {
                    bad = Some(format!("{} (x) {}", labels[i], labels[j]));
                    break 'outer;
                }
            }
        }
        report.check("fusion_commutative", bad.is_none(), || {
            format!("table is asymmetric at {}", bad.unwrap())
        });
    }

    // Dimension grading.
    {
        let mut bad = None;
        'outer: for (i, a) in labels.iter().enumerate() {
            for (j, b) in labels.iter().enumerate() {
                let expect = (a.dim() * b.dim()) as i64;
                if table.cell(i, j).dim() != expect {
                    bad = Some(format!(
                        "{a} (x) {b} has dimension {}, expected {expect}",
                        table.cell(i, j).dim()
                    ));
                    break 'outer;
                }
            }
        }
        report.check("fusion_dimension_graded", bad.is_none(), || bad.unwrap());
    }

    // Duality: the trivial module appears exactly in products with the
    // dual partner, and exactly once.
    {
        let unit = SimpleLabel::OneDim(0);
        let mut bad = None;
        'outer: for (i, a) in labels.iter().enumerate() {
            for (j, b) in labels.iter().enumerate() {
                let mult = table.cell(i, j).multiplicity(&unit);
                let expect = i64::from(*b == a.dual(n));
                if mult != expect {
                    bad = Some(format!(
                        "S_0 appears {mult} times in {a} (x) {b}, expected {expect}"
                    ));
                    break 'outer;
                }
            }
        }
        report.check("fusion_duality", bad.is_none(), || bad.unwrap());
    }

    // Associativity: exhaustive while the label count is small, then a
    // seeded sample of at least 10^4 triples.
    {
        let mut triples: Vec<(SimpleLabel, SimpleLabel, SimpleLabel)> = Vec::new();
        if n <= 5 {
            for a in &labels {
                for b in &labels {
                    for c in &labels {
                        triples.push((*a, *b, *c));
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004 + n as u64);
            for _ in 0..10_000 {
                let a = labels[rng.gen_range(0..labels.len())];
                let b = labels[rng.gen_range(0..labels.len())];
                let c = labels[rng.gen_range(0..labels.len())];
                triples.push((a, b, c));
            }
        }
        let exhaustive = n <= 5;
        let count = triples.len();
        let bad = triples.into_par_iter().find_map_any(|(a, b, c)| {
            let va = FusionVector::single(n, a);
            let vb = FusionVector::single(n, b);
            let vc = FusionVector::single(n, c);
            if (&va * &vb) * vc.clone() != va * (vb * vc) {
                Some(format!("({a}, {b}, {c})"))
            } else {
                None
            }
        });
        report.record(
            "fusion_associative",
            bad.is_none(),
            match bad {
                Some(t) => Some(format!("associativity fails at {t}")),
                None => Some(format!(
                    "{} {count} triples",
                    if exhaustive { "exhaustive over all" } else { "seeded sample of" }
                )),
            },
        );
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(n: u32, m: u32) -> SimpleLabel {
        SimpleLabel::OneDim(m % (2 * n))
    }

    fn two(n: u32, i: i64, j: i64) -> SimpleLabel {
        SimpleLabel::two_dim(n, i, j).unwrap()
    }

    #[test]
    fn one_dim_products_add_residues_and_halves() {
        // n = 2: S_1 S_1 = S_0, S_1 S_2 = S_3, S_2 S_3 = S_1, S_3 S_3 = S_0.
        let n = 2;
        let check = |a: u32, b: u32, expect: u32| {
            let v = fuse(n, one(n, a), one(n, b)).unwrap();
            assert!(v.is_single(one(n, expect)), "S_{a} S_{b} = {v}");
        };
        check(1, 1, 0);
        check(1, 2, 3);
        check(2, 3, 1);
        check(3, 3, 0);
        check(2, 2, 0);
    }

    #[test]
    fn one_dim_shifts_two_dim_diagonally() {
        let n = 3;
        let v = fuse(n, one(n, 1), two(n, 0, 1)).unwrap();
        assert!(v.is_single(two(n, 1, 2)), "got {v}");
        // Wrapping and canonical reordering: S_2 shifts (1,2) to (0,1).
        let v = fuse(n, one(n, 2), two(n, 1, 2)).unwrap();
        assert!(v.is_single(two(n, 0, 1)), "got {v}");
    }

    #[test]
    fn two_dim_products_split_on_collisions() {
        // n = 4, (0,2) and (1,3): both index sums collide mod 4, so the
        // product is four one-dimensional modules.
        let n = 4;
        let v = fuse(n, two(n, 0, 2), two(n, 1, 3)).unwrap();
        let expect = FusionVector::from_multiplicities(
            n,
            [
                (one(n, 1), 1),
                (one(n, 5), 1),
                (one(n, 3), 1),
                (one(n, 7), 1),
            ],
        )
        .unwrap();
        assert_eq!(v, expect, "got {v}");

        // n = 5, (0,1) and (0,2): no collision, two two-dim summands.
        let n = 5;
        let v = fuse(n, two(n, 0, 1), two(n, 0, 2)).unwrap();
        let expect = FusionVector::from_multiplicities(
            n,
            [(two(n, 0, 3), 1), (two(n, 2, 1), 1)],
        )
        .unwrap();
        assert_eq!(v, expect, "got {v}");

        // n = 3, (0,1) (x) (0,1): cross sum collides (1+0 = 0+1), the
        // direct sum does not.
        let n = 3;
        let v = fuse(n, two(n, 0, 1), two(n, 0, 1)).unwrap();
        let expect = FusionVector::from_multiplicities(
            n,
            [(two(n, 0, 2), 1), (one(n, 1), 1), (one(n, 4), 1)],
        )
        .unwrap();
        assert_eq!(v, expect, "got {v}");
    }

    #[test]
    fn kac_paljutkin_two_dim_square() {
        // n = 2: c^2 = 1 + a + b + ab in the fusion ring, with
        // a = S_1, b = S_3, c = S_{0,1}.
        let n = 2;
        let c = FusionVector::single(n, two(n, 0, 1));
        let expect = FusionVector::from_multiplicities(
            n,
            [(one(n, 0), 1), (one(n, 1), 1), (one(n, 3), 1), (one(n, 2), 1)],
        )
        .unwrap();
        assert_eq!(&c * &c, expect);
    }

    #[test]
    fn ring_ops_cancel() {
        let n = 3;
        let a = FusionVector::single(n, one(n, 1));
        let b = FusionVector::single(n, two(n, 0, 1));
        let s = &(&a + &b) - &a;
        assert_eq!(s, b);
        assert!((&a - &a).is_zero());
        assert_eq!(a.pow(0), FusionVector::unit(n));
    }

    #[test]
    fn display_uses_signs() {
        let n = 2;
        let v = FusionVector::from_multiplicities(
            n,
            [(one(n, 0), 1), (one(n, 1), -3), (two(n, 0, 1), 2)],
        )
        .unwrap();
        assert_eq!(v.to_string(), "S_0 - 3*S_1 + 2*S_{0,1}");
    }

    #[test]
    fn invalid_labels_are_rejected() {
        assert!(fuse(2, SimpleLabel::OneDim(4), SimpleLabel::OneDim(0)).is_err());
        assert!(fuse(3, SimpleLabel::TwoDim(0, 3), SimpleLabel::OneDim(0)).is_err());
        assert!(FusionVector::from_multiplicities(2, [(SimpleLabel::TwoDim(1, 0), 1)]).is_err());
    }

    #[test]
    fn table_serializations_are_deterministic() {
        let t = fusion_table(2).unwrap();
        let json = serde_json::to_string(&t.to_json()).unwrap();
        assert!(json.starts_with("{\"n\":2,") || json.contains("\"schema\":\"hfl/1\""));
        assert_eq!(json, serde_json::to_string(&fusion_table(2).unwrap().to_json()).unwrap());
        let csv = t.to_csv();
        assert!(csv.starts_with("a,b,c,mult\n"));
        assert!(csv.contains("S_1,S_1,S_0,1\n"));
        assert_eq!(csv, fusion_table(2).unwrap().to_csv());
    }

    #[test]
    fn fusion_suite_passes_for_small_n() {
        for n in 2..=3 {
            let report = verify_fusion(n);
            assert!(report.passed(), "n = {n}:\n{report}");
        }
    }

    #[test]
    fn oracle_decomposition_of_a_two_dim_square() {
        // Independent route for n = 3, S_{0,1} (x) S_{0,1}: build the
        // 4-dimensional tensor module and decompose it by traces.
        let n = 3;
        let rep = build_simple(n, two(n, 0, 1)).unwrap();
        let t = tensor_action(&rep.action, &rep.action);
        let v = decompose(&t).unwrap();
        let expect = FusionVector::from_multiplicities(
            n,
            [(two(n, 0, 2), 1), (one(n, 1), 1), (one(n, 4), 1)],
        )
        .unwrap();
        assert_eq!(v, expect);
    }
}
