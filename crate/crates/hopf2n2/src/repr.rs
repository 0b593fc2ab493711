//! Irreducible modules of `H_{2n^2}`: labels, explicit matrix actions,
//! tensor products, and an isotypic decomposition that works by tracing
//! central idempotents rather than by any fusion formula. The fusion
//! rules in [`crate::fusion`] are checked against this decomposition.
//!
//! There are `2n` one-dimensional modules `S_m` indexed by `m` in
//! `Z_{2n}`, on which `x` and `y` act by `q^m` and `z` by
//! `sigma(m) sqrt(q)^(m^2)` with `sigma(m) = +1` for `m < n` and `-1`
//! otherwise, and `n(n-1)/2` two-dimensional modules `S_{i,j}` for
//! `0 <= i < j < n`.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::ToPrimitive;

use crate::center::BlockKind;
use crate::cyclotomic::CycNum;
use crate::fusion::FusionVector;
use crate::hopf::AlgElem;
use crate::linalg::Mat;
use crate::report::VerificationReport;
use crate::{Error, Result};

/// A label for an irreducible module. One-dimensional labels live in
/// `Z_{2n}`; two-dimensional labels are unordered pairs of distinct
/// residues mod `n`, stored with the smaller first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum SimpleLabel {
    OneDim(u32),
    TwoDim(u32, u32),
}

impl SimpleLabel {
    /// The one-dimensional label `S_m`, reducing `m` mod `2n`.
    pub fn one_dim(n: u32, m: i64) -> SimpleLabel {
        SimpleLabel::OneDim(m.rem_euclid(2 * n as i64) as u32)
    }

    /// The two-dimensional label `S_{i,j}`, reducing mod `n` and
    /// swapping into canonical order. Equal residues do not name a
    /// module, so they are an error.
    pub fn two_dim(n: u32, i: i64, j: i64) -> Result<SimpleLabel> {
        let i = i.rem_euclid(n as i64) as u32;
        let j = j.rem_euclid(n as i64) as u32;
        if i == j {
            return Err(Error::InvalidLabel(format!(
                "S_{{{i},{j}}} is not irreducible: the residues must differ mod {n}"
            )));
        }
        Ok(if i < j {
            SimpleLabel::TwoDim(i, j)
        } else {
            SimpleLabel::TwoDim(j, i)
        })
    }

    pub fn dim(&self) -> usize {
        match self {
            SimpleLabel::OneDim(_) => 1,
            SimpleLabel::TwoDim(_, _) => 2,
        }
    }

    /// The label of the dual module: the `x` and `y` eigenvalues invert
    /// while the sign of the `z`-eigenvalue survives.
    pub fn dual(&self, n: u32) -> SimpleLabel {
        match *self {
            SimpleLabel::OneDim(m) => {
                let residue = (n - m % n) % n;
                let half = if m < n { 0 } else { n };
                SimpleLabel::OneDim(residue + half)
            }
            SimpleLabel::TwoDim(i, j) => {
                SimpleLabel::two_dim(n, -(i as i64), -(j as i64)).expect("distinct stays distinct")
            }
        }
    }

    /// Every label for a given `n`, in canonical order.
    pub fn enumerate(n: u32) -> Vec<SimpleLabel> {
        let mut out = Vec::new();
        for m in 0..2 * n {
            out.push(SimpleLabel::OneDim(m));
        }
        for i in 0..n {
            for j in i + 1..n {
                out.push(SimpleLabel::TwoDim(i, j));
            }
        }
        out
    }

    /// Number of irreducible modules: `2n + n(n-1)/2`.
    pub fn count(n: u32) -> usize {
        let n = n as usize;
        2 * n + n * (n - 1) / 2
    }

    /// The label picked out by a primitive central idempotent.
    pub fn from_block(n: u32, kind: BlockKind) -> SimpleLabel {
        match kind {
            BlockKind::OneDim { i, plus: true } => SimpleLabel::OneDim(i),
            BlockKind::OneDim { i, plus: false } => SimpleLabel::OneDim(i + n),
            BlockKind::TwoDim { i, j } => SimpleLabel::TwoDim(i, j),
        }
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleLabel::OneDim(m) => write!(f, "S_{m}"),
            SimpleLabel::TwoDim(i, j) => write!(f, "S_{{{i},{j}}}"),
        }
    }
}

/// Matrices for the three generators acting on some module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleAction {
    n: u32,
    x: Mat,
    y: Mat,
    z: Mat,
}

impl ModuleAction {
    pub fn new(n: u32, x: Mat, y: Mat, z: Mat) -> ModuleAction {
        let dim = x.rows();
        for m in [&x, &y, &z] {
            assert_eq!(m.param(), n, "action matrices over the wrong field");
            assert_eq!((m.rows(), m.cols()), (dim, dim), "action matrices of mixed shape");
        }
        ModuleAction { n, x, y, z }
    }

    pub fn param(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    pub fn x(&self) -> &Mat {
        &self.x
    }

    pub fn y(&self) -> &Mat {
        &self.y
    }

    pub fn z(&self) -> &Mat {
        &self.z
    }

    /// Powers `rho(x)^0 .. rho(x)^(n-1)`, used when averaging characters.
    fn x_powers(&self) -> Vec<Mat> {
        power_table(&self.x, self.n)
    }

    fn y_powers(&self) -> Vec<Mat> {
        power_table(&self.y, self.n)
    }

    /// Do the matrices satisfy every defining relation of `H_{2n^2}`?
    pub fn satisfies_relations(&self) -> bool {
        let n = self.n;
        let id = Mat::identity(n, self.dim());
        if self.x.pow(n) != id || self.y.pow(n) != id {
            return false;
        }
        if &self.x * &self.y != &self.y * &self.x {
            return false;
        }
        if &self.z * &self.x != &self.y * &self.z {
            return false;
        }
        if &self.z * &self.y != &self.x * &self.z {
            return false;
        }
        let zsq = apply(self, &AlgElem::z_square(n));
        &self.z * &self.z == zsq
    }
}

fn power_table(m: &Mat, n: u32) -> Vec<Mat> {
    let mut pows = Vec::with_capacity(n as usize);
    pows.push(Mat::identity(m.param(), m.rows()));
    for k in 1..n as usize {
        pows.push(&pows[k - 1] * m);
    }
    pows
}

/// Evaluate an algebra element through an action, term by term.
pub fn apply(action: &ModuleAction, elem: &AlgElem) -> Mat {
    assert_eq!(action.param(), elem.param(), "element over the wrong parameter");
    let xp = action.x_powers();
    let yp = action.y_powers();
    let mut acc = Mat::zero(action.n, action.dim(), action.dim());
    for (w, c) in elem.terms() {
        let mut m = &xp[w.x_exp() as usize] * &yp[w.y_exp() as usize];
        if w.has_z() {
            m = &m * &action.z;
        }
        acc = &acc + &m.scale(c);
    }
    acc
}

/// An irreducible module, realized as explicit matrices.
#[derive(Clone)]
pub struct Rep {
    pub label: SimpleLabel,
    pub action: ModuleAction,
}

fn sigma(n: u32, m: u32) -> i64 {
    if m < n {
        1
    } else {
        -1
    }
}

/// Build the irreducible module named by a label.
///
/// `S_m`: both group-likes act by `q^m` and `z` by
/// `sigma(m) sqrt(q)^(m^2)`. `S_{i,j}`: `x = diag(q^i, q^j)`,
/// `y = diag(q^j, q^i)`, and `z` swaps the two lines with a single
/// `q^(ij)` twist, so `z^2 = q^(ij) I`.
pub fn build_simple(n: u32, label: SimpleLabel) -> Result<Rep> {
    match label {
        SimpleLabel::OneDim(m) => {
            if m >= 2 * n {
                return Err(Error::InvalidLabel(format!(
                    "S_{m} out of range for parameter {n}"
                )));
            }
            let q_m = CycNum::q_power(n, m as i64);
            let mut zval = CycNum::sqrt_q_power(n, (m as i64) * (m as i64));
            if sigma(n, m) < 0 {
                zval = -&zval;
            }
            let one_by_one = |v: CycNum| Mat::from_rows(n, vec![vec![v]]);
            Ok(Rep {
                label,
                action: ModuleAction::new(
                    n,
                    one_by_one(q_m.clone()),
                    one_by_one(q_m),
                    one_by_one(zval),
                ),
            })
        }
        SimpleLabel::TwoDim(i, j) => {
            if !(i < j && j < n) {
                return Err(Error::InvalidLabel(format!(
                    "S_{{{i},{j}}} out of range for parameter {n}"
                )));
            }
            let zero = CycNum::zero(n);
            let qi = CycNum::q_power(n, i as i64);
            let qj = CycNum::q_power(n, j as i64);
            let qij = CycNum::q_power(n, (i as i64) * (j as i64));
            let x = Mat::from_rows(n, vec![vec![qi.clone(), zero.clone()], vec![zero.clone(), qj.clone()]]);
            let y = Mat::from_rows(n, vec![vec![qj, zero.clone()], vec![zero.clone(), qi]]);
            let z = Mat::from_rows(n, vec![vec![zero.clone(), qij], vec![CycNum::one(n), zero]]);
            Ok(Rep {
                label,
                action: ModuleAction::new(n, x, y, z),
            })
        }
    }
}

/// The tensor product action. Group-likes act diagonally; `z` acts by
/// `(1/n) sum_{i,j} q^(-ij) (x^i z (x) y^j z)`, the image of `Delta(z)`.
pub fn tensor_action(a: &ModuleAction, b: &ModuleAction) -> ModuleAction {
    assert_eq!(a.param(), b.param(), "tensor factors over different parameters");
    let n = a.param();
    let over_n = BigRational::new(BigInt::from(1), BigInt::from(n));
    let xp = a.x_powers();
    let yp = b.y_powers();
    let dim = a.dim() * b.dim();
    let mut twist = Mat::zero(n, dim, dim);
    for i in 0..n as usize {
        for j in 0..n as usize {
            let c = CycNum::q_power(n, -((i * j) as i64)).scale(&over_n);
            twist = &twist + &xp[i].kron(&yp[j]).scale(&c);
        }
    }
    let z = &twist * &a.z().kron(b.z());
    ModuleAction::new(n, a.x().kron(b.x()), a.y().kron(b.y()), z)
}

/// Decompose any finite-dimensional action into irreducibles by tracing
/// the primitive central idempotents, assembled directly from spectral
/// averages of the action matrices. Non-integral or negative
/// multiplicities, or a dimension count that misses, are reported as
/// errors rather than rounded.
pub fn decompose(action: &ModuleAction) -> Result<FusionVector> {
    let n = action.param();
    let over_n = BigRational::new(BigInt::from(1), BigInt::from(n));
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let xp = action.x_powers();
    let yp = action.y_powers();

    let spectral = |pows: &[Mat], idx: u32| -> Mat {
        let mut acc = Mat::zero(n, action.dim(), action.dim());
        for (k, p) in pows.iter().enumerate() {
            let c = CycNum::q_power(n, -((idx as i64) * (k as i64))).scale(&over_n);
            acc = &acc + &p.scale(&c);
        }
        acc
    };

    let mut mults = Vec::new();
    let mut total = 0i64;
    for label in SimpleLabel::enumerate(n) {
        let trace = match label {
            SimpleLabel::OneDim(m) => {
                let i = m % n;
                let diag = &spectral(&xp, i) * &spectral(&yp, i);
                let even = diag.trace().scale(&half);
                let twist = CycNum::sqrt_q_power(n, -((i as i64) * (i as i64))).scale(&half);
                let odd = (&diag * action.z()).trace();
                let signed = if m < n { &twist * &odd } else { -&(&twist * &odd) };
                &even + &signed
            }
            SimpleLabel::TwoDim(i, j) => {
                let part = &(&spectral(&xp, i) * &spectral(&yp, j))
                    + &(&spectral(&xp, j) * &spectral(&yp, i));
                part.trace().scale(&half)
            }
        };
        let mult = trace
            .as_integer()
            .and_then(|v| v.to_i64())
            .ok_or_else(|| {
                Error::NonIntegerMultiplicity(format!(
                    "multiplicity of {label} came out as {trace}"
                ))
            })?;
        if mult < 0 {
            return Err(Error::NonIntegerMultiplicity(format!(
                "multiplicity of {label} came out negative: {mult}"
            )));
        }
        total += mult * label.dim() as i64;
        if mult > 0 {
            mults.push((label, mult));
        }
    }
    if total != action.dim() as i64 {
        return Err(Error::NonIntegerMultiplicity(format!(
            "isotypic dimensions sum to {total}, but the module has dimension {}",
            action.dim()
        )));
    }
    FusionVector::from_multiplicities(n, mults)
}

/// Check the classification data for one `n`: counts, the sum of squared
/// dimensions, the defining relations on every simple, and that the
/// idempotent traces separate the simples (each decomposes as itself).
pub fn verify_representations(n: u32) -> VerificationReport {
    let mut report = VerificationReport::new();
    let labels = SimpleLabel::enumerate(n);

    report.check(
        "simple_module_count",
        labels.len() == SimpleLabel::count(n),
        || format!("expected {} labels, found {}", SimpleLabel::count(n), labels.len()),
    );

    let sum_sq: usize = labels.iter().map(|l| l.dim() * l.dim()).sum();
    report.check(
        "sum_of_squared_dims_2n2",
        sum_sq == crate::hopf::dimension(n),
        || format!("sum of dim^2 = {sum_sq}, expected {}", crate::hopf::dimension(n)),
    );

    {
        let mut bad = None;
        for label in &labels {
            match build_simple(n, *label) {
                Ok(rep) => {
                    if !rep.action.satisfies_relations() {
                        bad = Some(format!("{label} violates a defining relation"));
                        break;
                    }
                }
                Err(e) => {
                    bad = Some(format!("{label}: {e}"));
                    break;
                }
            }
        }
        report.check("simples_satisfy_relations", bad.is_none(), || bad.unwrap());
    }

    {
        let mut bad = None;
        for label in &labels {
            let rep = match build_simple(n, *label) {
                Ok(r) => r,
                Err(e) => {
                    bad = Some(format!("{label}: {e}"));
                    break;
                }
            };
            match decompose(&rep.action) {
                Ok(v) => {
                    if !v.is_single(*label) {
                        bad = Some(format!("{label} decomposes as {v}"));
                        break;
                    }
                }
                Err(e) => {
                    bad = Some(format!("{label}: {e}"));
                    break;
                }
            }
        }
        report.check("idempotent_traces_separate_simples", bad.is_none(), || {
            bad.unwrap()
        });
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::center::primitive_central_idempotents;

    #[test]
    fn labels_canonicalize_and_display() {
        assert_eq!(SimpleLabel::one_dim(3, 7), SimpleLabel::OneDim(1));
        assert_eq!(SimpleLabel::one_dim(3, -1), SimpleLabel::OneDim(5));
        assert_eq!(
            SimpleLabel::two_dim(3, 2, 1).unwrap(),
            SimpleLabel::TwoDim(1, 2)
        );
        assert_eq!(
            SimpleLabel::two_dim(5, 7, 1).unwrap(),
            SimpleLabel::TwoDim(1, 2)
        );
        assert!(SimpleLabel::two_dim(4, 5, 1).is_err());
        assert_eq!(SimpleLabel::OneDim(0).to_string(), "S_0");
        assert_eq!(SimpleLabel::TwoDim(0, 1).to_string(), "S_{0,1}");
    }

    #[test]
    fn label_enumeration_counts() {
        for n in 2..=8 {
            assert_eq!(SimpleLabel::enumerate(n).len(), SimpleLabel::count(n));
        }
    }

    #[test]
    fn one_dim_z_values_use_the_canonical_root() {
        // For n = 2, S_3 sends z to -zeta (sigma = -1, sqrt(q)^9 = zeta).
        let rep = build_simple(2, SimpleLabel::OneDim(3)).unwrap();
        let expect = -&CycNum::root_power(2, 1);
        assert_eq!(rep.action.z().get(0, 0), &expect);
    }

    #[test]
    fn z_eigenvalues_separate_the_one_dim_family() {
        // The pair (x-eigenvalue, z-eigenvalue) must be distinct across
        // all 2n one-dimensional modules, for every n; this is exactly
        // what forces the square-root convention.
        for n in 2..=8 {
            let mut seen = Vec::new();
            for m in 0..2 * n {
                let rep = build_simple(n, SimpleLabel::OneDim(m)).unwrap();
                let fingerprint = (
                    rep.action.x().get(0, 0).clone(),
                    rep.action.z().get(0, 0).clone(),
                );
                assert!(
                    !seen.contains(&fingerprint),
                    "n = {n}: S_{m} repeats an earlier module"
                );
                seen.push(fingerprint);
            }
        }
    }

    #[test]
    fn two_dim_z_swap_squares_to_qij() {
        let rep = build_simple(3, SimpleLabel::TwoDim(0, 1)).unwrap();
        let z = rep.action.z();
        assert_eq!(z.get(0, 0), &CycNum::zero(3));
        assert_eq!(z.get(0, 1), &CycNum::one(3));
        assert_eq!(z.get(1, 0), &CycNum::one(3));
        let zsq = z * z;
        assert_eq!(zsq, Mat::identity(3, 2).scale(&CycNum::q_power(3, 0)));
    }

    #[test]
    fn all_simples_satisfy_relations() {
        for n in 2..=5 {
            for label in SimpleLabel::enumerate(n) {
                let rep = build_simple(n, label).unwrap();
                assert!(rep.action.satisfies_relations(), "n = {n}, {label}");
            }
        }
    }

    #[test]
    fn tensor_actions_satisfy_relations() {
        let n = 3;
        let a = build_simple(n, SimpleLabel::TwoDim(0, 1)).unwrap();
        let b = build_simple(n, SimpleLabel::OneDim(4)).unwrap();
        let t = tensor_action(&a.action, &b.action);
        assert!(t.satisfies_relations());
        let tt = tensor_action(&t, &a.action);
        assert!(tt.satisfies_relations());
    }

    #[test]
    fn simples_decompose_as_themselves() {
        for n in 2..=4 {
            for label in SimpleLabel::enumerate(n) {
                let rep = build_simple(n, label).unwrap();
                let v = decompose(&rep.action).unwrap();
                assert!(v.is_single(label), "n = {n}: {label} gave {v}");
            }
        }
    }

    #[test]
    fn trivial_module_is_a_strict_tensor_unit() {
        let n = 4;
        let unit = build_simple(n, SimpleLabel::OneDim(0)).unwrap();
        for label in [SimpleLabel::OneDim(5), SimpleLabel::TwoDim(1, 3)] {
            let rep = build_simple(n, label).unwrap();
            let t = tensor_action(&unit.action, &rep.action);
            assert_eq!(t, rep.action, "S_0 (x) {label}");
        }
    }

    #[test]
    fn apply_matches_direct_z_square() {
        let n = 4;
        let rep = build_simple(n, SimpleLabel::TwoDim(1, 2)).unwrap();
        let via_element = apply(&rep.action, &AlgElem::z_square(n));
        assert_eq!(via_element, rep.action.z() * rep.action.z());
    }

    #[test]
    fn decompose_agrees_with_generic_idempotent_evaluation() {
        // The decomposition assembles idempotent images from spectral
        // averages; evaluating the central idempotents as algebra
        // elements must give the same traces.
        let n = 3;
        let a = build_simple(n, SimpleLabel::TwoDim(0, 2)).unwrap();
        let b = build_simple(n, SimpleLabel::OneDim(2)).unwrap();
        let t = tensor_action(&a.action, &b.action);
        let v = decompose(&t).unwrap();
        for idem in primitive_central_idempotents(n) {
            let label = SimpleLabel::from_block(n, idem.kind);
            let trace = apply(&t, &idem.element).trace();
            let expect = CycNum::from_int(
                n,
                v.multiplicity(&label) * label.dim() as i64,
            );
            assert_eq!(trace, expect, "{label}");
        }
    }

    #[test]
    fn duals_pair_against_each_other() {
        let n = 5;
        assert_eq!(SimpleLabel::OneDim(2).dual(n), SimpleLabel::OneDim(3));
        assert_eq!(SimpleLabel::OneDim(7).dual(n), SimpleLabel::OneDim(8));
        assert_eq!(SimpleLabel::OneDim(0).dual(n), SimpleLabel::OneDim(0));
        assert_eq!(
            SimpleLabel::TwoDim(1, 2).dual(n),
            SimpleLabel::TwoDim(3, 4)
        );
        for label in SimpleLabel::enumerate(n) {
            assert_eq!(label.dual(n).dual(n), label, "{label}");
        }
    }

    #[test]
    fn representation_suite_passes_for_small_n() {
        for n in 2..=4 {
            let report = verify_representations(n);
            assert!(report.passed(), "n = {n}:\n{report}");
        }
    }
}
