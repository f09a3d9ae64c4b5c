//! Oracle-backed checks of the Tribonacci spinor identities.
//!
//! Every check compares a closed form against an independent evaluation
//! (direct recurrence, direct summation, Hamilton products) and produces a
//! [`VerificationReport`]. Where a printed constant disagrees with the oracle,
//! the report keeps the oracle-derived status and records the printed
//! variant's outcome in its note.

use std::fmt::{self, Display};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytic::{binet_spinor_with, cubic_roots, genfunc_spinor_series, ComplexSpinor};
use crate::error::{Error, Result};
use crate::quaternions::{
    qmul, qnorm, quat_u_decomposition, qv_matrix, summation_correction, trib_quaternions, Quaternion,
};
use crate::scalar::{gauss, int, ratio, unit_i, Gauss, GaussDisplay, Scalar};
use crate::sequences::{companion_power, SeqParams};
use crate::spinors::{
    breve, cartan_conjugate, complex_conjugate, mate, sigma, spinor_norm, spinor_qv_matrix, trib_spinors,
    SpinMatrix2, Spinor, SpinorQvMatrix,
};

/// Default relative tolerance for float comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Largest index at which Binet agreement is checked by the suite.
pub const BINET_MAX_INDEX: usize = 30;
/// Random triples drawn by the suite's triple-product check.
pub const TRIPLE_TRIALS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityId {
    SpinorRecurrence,
    ConjugateRelations,
    NormEquality,
    BinetAgreement,
    GenfuncAgreement,
    TripleProductMap,
    SpinorMatrixBehavior,
    DeterminantCombination,
    SummationClosedForm,
    UDecomposition,
    MatrixPowerShift,
}

impl IdentityId {
    pub const ALL: [IdentityId; 11] = [
        IdentityId::SpinorRecurrence,
        IdentityId::ConjugateRelations,
        IdentityId::NormEquality,
        IdentityId::BinetAgreement,
        IdentityId::GenfuncAgreement,
        IdentityId::TripleProductMap,
        IdentityId::SpinorMatrixBehavior,
        IdentityId::DeterminantCombination,
        IdentityId::SummationClosedForm,
        IdentityId::UDecomposition,
        IdentityId::MatrixPowerShift,
    ];
}

impl Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    ExactPass,
    ToleredPass,
    Fail,
    Skipped,
}

impl Status {
    pub fn is_fail(self) -> bool {
        self == Status::Fail
    }
}

/// Inclusive index interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexRange {
    pub start: usize,
    pub end: usize,
}

impl IndexRange {
    pub fn new(start: usize, end: usize) -> Self {
        Self { start, end }
    }
}

/// First index at which the two sides differ, rendered as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub params: SeqParams,
    pub range: IndexRange,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub note: String,
}

impl VerificationReport {
    fn new(identity: IdentityId, p: &SeqParams, range: IndexRange) -> Self {
        Self {
            identity,
            params: p.clone(),
            range,
            status: Status::ExactPass,
            witness: None,
            note: String::new(),
        }
    }

    fn with_outcome(mut self, outcome: Option<Witness>) -> Self {
        if outcome.is_some() {
            self.status = Status::Fail;
        }
        self.witness = outcome;
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    /// Report for an identity that does not apply to these inputs.
    pub fn skipped(identity: IdentityId, p: &SeqParams, range: IndexRange, reason: &Error) -> Self {
        Self {
            status: Status::Skipped,
            note: format!("skipped: {reason}"),
            ..Self::new(identity, p, range)
        }
    }
}

/// Returns the first `(n, lhs, rhs)` where `lhs != rhs`.
fn first_mismatch<T, I>(cases: I) -> Option<Witness>
where
    T: PartialEq + Display,
    I: IntoIterator<Item = (usize, T, T)>,
{
    cases.into_iter().find(|(_, l, r)| l != r).map(|(n, l, r)| Witness {
        n,
        lhs: l.to_string(),
        rhs: r.to_string(),
    })
}

struct G(Gauss);

impl PartialEq for G {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Display for G {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        GaussDisplay(&self.0).fmt(f)
    }
}

/// `A_{v,n+3} = r A_{v,n+2} + s A_{v,n+1} + t A_{v,n}` for `n ≤ nmax`.
pub fn verify_spinor_recurrence(p: &SeqParams, nmax: usize) -> Result<VerificationReport> {
    if nmax < 3 {
        return Err(Error::InvalidInput(format!("nmax must be at least 3, got {nmax}")));
    }
    let a = trib_spinors(p, 0, nmax + 4);
    let cases = (0..=nmax).map(|n| {
        let rhs = &(&a[n + 2].scale_real(&p.r) + &a[n + 1].scale_real(&p.s)) + &a[n].scale_real(&p.t);
        (n, a[n + 3].clone(), rhs)
    });
    Ok(VerificationReport::new(IdentityId::SpinorRecurrence, p, IndexRange::new(0, nmax))
        .with_outcome(first_mismatch(cases))
        .note("A_{n+3} = r A_{n+2} + s A_{n+1} + t A_n"))
}

/// `C Â = Ā`, `i Ã = Â` and `(iC) Ã = Ā` for every `A_{v,n}`, `n ≤ nmax`.
pub fn verify_conjugate_relations(p: &SeqParams, nmax: usize) -> VerificationReport {
    let c = SpinMatrix2::c();
    let ic = c.scale(&unit_i());
    let i = unit_i();
    let mut failed = None;
    for (n, a) in trib_spinors(p, 0, nmax + 1).iter().enumerate() {
        let bar = complex_conjugate(a);
        let hat = mate(a);
        let tilde = cartan_conjugate(a);
        let checks = [
            ("C*mate(A) = conj(A)", c.apply(&hat), bar.clone()),
            ("i*cartan(A) = mate(A)", tilde.scale(&i), hat.clone()),
            ("(iC)*cartan(A) = conj(A)", ic.apply(&tilde), bar.clone()),
        ];
        if let Some((label, lhs, rhs)) = checks.into_iter().find(|(_, l, r)| l != r) {
            failed = Some((label, Witness { n, lhs: lhs.to_string(), rhs: rhs.to_string() }));
            break;
        }
    }
    let report = VerificationReport::new(IdentityId::ConjugateRelations, p, IndexRange::new(0, nmax));
    match failed {
        Some((label, w)) => report.with_outcome(Some(w)).note(format!("failed relation: {label}")),
        None => report.note("C*mate(A) = conj(A); i*cartan(A) = mate(A); (iC)*cartan(A) = conj(A)"),
    }
}

/// Norm expressions of a spinor, each evaluated exactly as written with the
/// leading signs of the printed definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormForms {
    /// `Āᵗ A`
    pub conjugate_form: Gauss,
    /// `-Âᵗ Cᵗ A`
    pub mate_form: Gauss,
    /// `-i Ãᵗ Cᵗ A`
    pub cartan_form: Gauss,
}

pub fn norm_forms(a: &Spinor) -> NormForms {
    let ct_a = SpinMatrix2::c().transpose().apply(a);
    NormForms {
        conjugate_form: spinor_norm(a),
        mate_form: -mate(a).dot(&ct_a),
        cartan_form: -(unit_i() * cartan_conjugate(a).dot(&ct_a)),
    }
}

/// `Nr(Q_{v,n}) = Āᵗ A = Âᵗ Cᵗ A = i Ãᵗ Cᵗ A = Σ V²` for `n ≤ nmax`.
///
/// The alternate forms carry a leading minus sign in their printed version;
/// since `C Â = Ā`, `Âᵗ Cᵗ A = Āᵗ A` and the signed forms equal `-Nr`. The
/// status is decided on the unsigned forms and the note records whether the
/// signed ones held.
pub fn verify_norm_equality(p: &SeqParams, nmax: usize) -> VerificationReport {
    let quats = trib_quaternions(p, 0, nmax + 1);
    let mut derived = Vec::new();
    let mut printed_failure: Option<(usize, Gauss, Gauss)> = None;
    for (n, q) in quats.iter().enumerate() {
        let squares = q.components().iter().fold(Scalar::zero(), |acc, c| acc + *c * *c);
        let nr = gauss(qnorm(q), Scalar::zero());
        let forms = norm_forms(&sigma(q));
        let expected = gauss(squares, Scalar::zero());
        derived.push((n, G(nr.clone()), G(expected.clone())));
        derived.push((n, G(forms.conjugate_form.clone()), G(expected.clone())));
        derived.push((n, G(-forms.mate_form.clone()), G(expected.clone())));
        derived.push((n, G(-forms.cartan_form.clone()), G(expected.clone())));
        if printed_failure.is_none() {
            for printed in [&forms.mate_form, &forms.cartan_form] {
                if *printed != expected {
                    printed_failure = Some((n, printed.clone(), expected.clone()));
                    break;
                }
            }
        }
    }
    let printed = match printed_failure {
        None => "printed signed forms -mate^t C^t A and -i cartan^t C^t A also equal Nr".to_string(),
        Some((n, got, want)) => format!(
            "printed signed forms do not hold: at n={n} -mate^t C^t A = {} but Nr = {}; they equal -Nr",
            GaussDisplay(&got),
            GaussDisplay(&want)
        ),
    };
    VerificationReport::new(IdentityId::NormEquality, p, IndexRange::new(0, nmax))
        .with_outcome(first_mismatch(derived))
        .note(format!(
            "qnorm = conj(A)^t A = mate(A)^t C^t A = i cartan(A)^t C^t A = sum of squares; {printed}"
        ))
}

/// Draws a quaternion with components `k/d`, `k ∈ [-9, 9]`, `d ∈ [1, 4]`.
pub fn random_quaternion(rng: &mut impl Rng) -> Quaternion {
    let mut c = || ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4));
    Quaternion::new(c(), c(), c(), c())
}

/// Integer coefficients and seeds drawn uniformly from `[-5, 5]`.
pub fn random_params(rng: &mut impl Rng) -> SeqParams {
    let mut d = || rng.gen_range(-5..=5);
    SeqParams::from_ints([d(), d(), d()], [d(), d(), d()])
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Spinor image of a triple product through breve matrices:
/// `σ(a × b × c) = -Ă B̆ σ(c)`.
pub fn triple_product_spinor(a: &Quaternion, b: &Quaternion, c: &Quaternion) -> Spinor {
    -(breve(a).matmul(&breve(b)).apply(&sigma(c)))
}

/// `σ(a × b × c) = -Ă B̆ σ(c)` over `trials` random exact triples.
pub fn verify_triple_product_map(p: &SeqParams, seed: u64, trials: usize) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::InvalidInput("trials must be at least 1".into()));
    }
    let mut rng = seeded_rng(seed);
    let cases = (0..trials).map(|k| {
        let (a, b, c) = (random_quaternion(&mut rng), random_quaternion(&mut rng), random_quaternion(&mut rng));
        (k, sigma(&qmul(&qmul(&a, &b), &c)), triple_product_spinor(&a, &b, &c))
    });
    Ok(VerificationReport::new(IdentityId::TripleProductMap, p, IndexRange::new(0, trials - 1))
        .with_outcome(first_mismatch(cases))
        .note(format!("sigma(a*b*c) = -breve(a) breve(b) sigma(c); {trials} random triples, seed {seed}")))
}

/// The six signed triples of the cofactor expansion at shift `n`: indices
/// `(a, k, c)` meaning `Q_{a} K_{k} Q_{c}`.
fn determinant_terms(n: usize, literal: bool) -> [(i64, usize, usize, usize); 6] {
    let fifth_c = if literal { 4 } else { n + 4 };
    [
        (1, n + 1, n + 1, n + 4),
        (1, n + 2, n + 2, n + 2),
        (1, n + 3, n, n + 3),
        (-1, n + 1, n + 2, n + 3),
        (-1, n + 2, n, fifth_c),
        (-1, n + 3, n + 1, n + 2),
    ]
}

/// Values of the determinant combination at one shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterminantValues {
    pub n: usize,
    /// `Σ ± T̆ L̆ T` evaluated with breve matrices.
    pub spinor_side: Spinor,
    /// `-σ(Σ ± Q K Q)` evaluated with Hamilton products.
    pub quaternion_side: Spinor,
}

/// Evaluates the determinant combination at shift `n` on both sides.
/// `literal` keeps the printed fifth term `T̆_{n+2} L̆_n T_4` instead of
/// `T̆_{n+2} L̆_n T_{n+4}`.
pub fn determinant_values(p: &SeqParams, n: usize, literal: bool) -> DeterminantValues {
    let quats = trib_quaternions(p, 0, n + 6);
    let k = |m: usize| &quats[m + 1].scale(&p.s) + &quats[m].scale(&p.t);
    let mut spinor_side = Spinor::zero();
    let mut quat_side = Quaternion::zero();
    for (sign, a, kk, c) in determinant_terms(n, literal) {
        let km = k(kk);
        let term = breve(&quats[a]).matmul(&breve(&km)).apply(&sigma(&quats[c]));
        let prod = qmul(&qmul(&quats[a], &km), &quats[c]);
        let sign = int(sign);
        spinor_side = &spinor_side + &term.scale_real(&sign);
        quat_side = &quat_side + &prod.scale(&sign);
    }
    DeterminantValues { n, spinor_side, quaternion_side: -sigma(&quat_side) }
}

/// The printed constant `4[-1+i; 1-i]`.
pub fn printed_determinant_constant() -> Spinor {
    Spinor::from_ints((-1, 1), (1, -1)).scale_real(&int(4))
}

/// Evaluates the six-term determinant combination for the tribonacci preset
/// under both index readings, on the spinor side and the quaternion side.
/// Passes when the two sides agree exactly for every `n ≤ nmax`; agreement
/// with the printed constant and `n`-independence are recorded in the note.
pub fn verify_determinant_combination(p: &SeqParams, nmax: usize) -> Result<VerificationReport> {
    if !p.is_tribonacci() {
        return Err(Error::UnsupportedParams);
    }
    let constant = printed_determinant_constant();
    let mut mismatch = None;
    let mut notes = Vec::new();
    for (literal, label) in [(false, "T_{n+4} reading"), (true, "literal T_4 reading")] {
        let values: Vec<DeterminantValues> = (0..=nmax).map(|n| determinant_values(p, n, literal)).collect();
        if mismatch.is_none() {
            mismatch = first_mismatch(values.iter().map(|v| (v.n, v.spinor_side.clone(), v.quaternion_side.clone())));
        }
        let first = &values[0].spinor_side;
        let constant_in_n = values.iter().all(|v| v.spinor_side == *first);
        let matching: Vec<usize> = values.iter().filter(|v| v.spinor_side == constant).map(|v| v.n).collect();
        let shown: Vec<String> = values.iter().take(3).map(|v| format!("n={}: {}", v.n, v.spinor_side)).collect();
        notes.push(format!(
            "{label}: {}; {}; matches printed {constant} at {}",
            shown.join(", "),
            if constant_in_n { "constant in n" } else { "varies with n" },
            if matching.is_empty() {
                "no n".to_string()
            } else if matching.len() == values.len() {
                "every n".to_string()
            } else {
                format!("n in {matching:?}")
            }
        ));
    }
    Ok(VerificationReport::new(IdentityId::DeterminantCombination, p, IndexRange::new(0, nmax))
        .with_outcome(mismatch)
        .note(format!("spinor side equals -sigma(quaternion side) for both readings; {}", notes.join("; "))))
}

/// Correction vector printed with the spinor summation formula:
/// `[(r+s)V3 + (r-1)V4 - V5 + i((r+s)V0 + (r-1)V1 - V2); (r+s)V1 + (r-1)V2 - V3 + i((r+s)V2 + (r-1)V3 - V4)]`.
pub fn printed_summation_correction(p: &SeqParams) -> Spinor {
    let v = crate::sequences::seq_slice(p, 0, 6);
    let rs = &p.r + &p.s;
    let r1 = &p.r - Scalar::one();
    let lin = |a: usize| &rs * &v[a] + &r1 * &v[a + 1] - &v[a + 2];
    Spinor::new(gauss(lin(3), lin(0)), gauss(lin(1), lin(2)))
}

/// `σ(ω)`, the spinor image of the quaternion summation correction.
pub fn derived_summation_correction(p: &SeqParams) -> Spinor {
    sigma(&summation_correction(p).omega)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrectionKind {
    Derived,
    Printed,
}

/// Checks `δ Σ_{l≤n} A_l = A_{n+2} + (1-r) A_{n+1} + t A_n + c` against the
/// direct sum for one choice of `c`.
pub fn verify_summation_with(p: &SeqParams, nmax: usize, kind: CorrectionKind) -> Result<VerificationReport> {
    let delta = p.delta();
    if delta.is_zero() {
        return Err(Error::DegenerateDelta);
    }
    let c = match kind {
        CorrectionKind::Derived => derived_summation_correction(p),
        CorrectionKind::Printed => printed_summation_correction(p),
    };
    let a = trib_spinors(p, 0, nmax + 3);
    let one_minus_r = Scalar::one() - &p.r;
    let mut running = Spinor::zero();
    let cases = (0..=nmax).map(|n| {
        running = &running + &a[n];
        let lhs = running.scale_real(&delta);
        let rhs = &(&(&a[n + 2] + &a[n + 1].scale_real(&one_minus_r)) + &a[n].scale_real(&p.t)) + &c;
        (n, lhs, rhs)
    });
    let witness = first_mismatch(cases.collect::<Vec<_>>());
    Ok(VerificationReport::new(IdentityId::SummationClosedForm, p, IndexRange::new(0, nmax))
        .with_outcome(witness)
        .note(format!("correction {c}")))
}

/// Summation check with both candidate corrections. Status follows the
/// derived correction `σ(ω)`; the printed correction's outcome is recorded.
pub fn verify_summation(p: &SeqParams, nmax: usize) -> Result<VerificationReport> {
    let derived = verify_summation_with(p, nmax, CorrectionKind::Derived)?;
    let printed = verify_summation_with(p, nmax, CorrectionKind::Printed)?;
    let printed_line = match &printed.witness {
        None => format!("printed correction {} holds", printed_summation_correction(p)),
        Some(w) => format!(
            "printed correction {} fails at n={} (lhs {}, rhs {})",
            printed_summation_correction(p),
            w.n,
            w.lhs,
            w.rhs
        ),
    };
    let derived_line = format!(
        "derived correction sigma(omega) = {} {}",
        derived_summation_correction(p),
        if derived.status.is_fail() { "fails" } else { "holds" }
    );
    let note = format!("{derived_line}; {printed_line}");
    Ok(derived.note(note))
}

/// `Q_v · M^n` equals the shifted quaternion matrix for every `n ≤ nmax`.
pub fn verify_matrix_power_shift(p: &SeqParams, nmax: usize) -> VerificationReport {
    let base = qv_matrix(p, 0);
    let mut witness = None;
    for n in 0..=nmax {
        let lhs = base.mul_scalar_matrix(&companion_power(p, n as u64));
        let rhs = qv_matrix(p, n);
        let bad = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .find(|&(i, j)| lhs[i][j] != rhs.entries[i][j]);
        if let Some((i, j)) = bad {
            witness = Some(Witness {
                n,
                lhs: format!("entry ({i},{j}) {}", lhs[i][j]),
                rhs: format!("entry ({i},{j}) {}", rhs.entries[i][j]),
            });
            break;
        }
    }
    VerificationReport::new(IdentityId::MatrixPowerShift, p, IndexRange::new(0, nmax))
        .with_outcome(witness)
        .note("Q_v(0) * M^n = Q_v(n), entrywise")
}

/// `Q_{v,n+2} = Q_{v,2} U_{n+2} + K_{v,0} U_{n+1} + t Q_{v,1} U_n` for `n ≤ nmax`.
pub fn verify_u_decomposition(p: &SeqParams, nmax: usize) -> VerificationReport {
    let quats = trib_quaternions(p, 2, nmax + 1);
    let cases = (0..=nmax).map(|n| (n, quat_u_decomposition(p, n), quats[n].clone()));
    VerificationReport::new(IdentityId::UDecomposition, p, IndexRange::new(0, nmax))
        .with_outcome(first_mismatch(cases))
        .note("Q_{n+2} = Q_2 U_{n+2} + (s Q_1 + t Q_0) U_{n+1} + t Q_1 U_n")
}

/// The first `order` generating-function coefficients equal `A_{v,k}`.
pub fn verify_genfunc(p: &SeqParams, order: usize) -> VerificationReport {
    let series = genfunc_spinor_series(p, order);
    let direct = trib_spinors(p, 0, order);
    let cases = series
        .coefficients
        .into_iter()
        .zip(direct)
        .enumerate()
        .map(|(k, (s, d))| (k, s, d));
    VerificationReport::new(IdentityId::GenfuncAgreement, p, IndexRange::new(0, order.saturating_sub(1)))
        .with_outcome(first_mismatch(cases))
        .note(format!("{order} coefficients of numerator / (1 - r x - s x^2 - t x^3)"))
}

/// Spinor matrix entries are the negated σ / breve images of the quaternion
/// matrix, and the products of the cofactor expansion map through breve
/// matrices: `σ(Q_a K_k Q_c) = -Ă K̆ A_c` and `breve(K × Q) = -i K̆ Q̆`.
pub fn verify_spinor_matrix(p: &SeqParams, nmax: usize) -> VerificationReport {
    let quats = trib_quaternions(p, 0, nmax + 6);
    let k = |m: usize| &quats[m + 1].scale(&p.s) + &quats[m].scale(&p.t);
    let mut witness = None;
    'outer: for n in 0..=nmax {
        let built = spinor_qv_matrix(p, n);
        let mapped = SpinorQvMatrix::from_quaternion_matrix(p, n);
        if built != mapped {
            witness = Some(Witness { n, lhs: format!("{built:?}"), rhs: format!("{mapped:?}") });
            break;
        }
        for (_, a, kk, c) in determinant_terms(n, false) {
            let km = k(kk);
            let lhs = sigma(&qmul(&qmul(&quats[a], &km), &quats[c]));
            let rhs = triple_product_spinor(&quats[a], &km, &quats[c]);
            if lhs != rhs {
                witness = Some(Witness { n, lhs: lhs.to_string(), rhs: rhs.to_string() });
                break 'outer;
            }
            let lhs = breve(&qmul(&km, &quats[c]));
            let rhs = breve(&km).matmul(&breve(&quats[c])).scale(&-unit_i());
            if lhs != rhs {
                witness = Some(Witness { n, lhs: lhs.to_string(), rhs: rhs.to_string() });
                break 'outer;
            }
        }
    }
    VerificationReport::new(IdentityId::SpinorMatrixBehavior, p, IndexRange::new(0, nmax))
        .with_outcome(witness)
        .note("spinor matrix = -(sigma, breve) image of Q_v; cofactor products map through breve")
}

/// Componentwise relative error of the spinor Binet formula against the exact
/// spinors, for `n ≤ nmax`.
pub fn verify_binet(p: &SeqParams, nmax: usize, tol: f64) -> Result<VerificationReport> {
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    let roots = cubic_roots(&p.r, &p.s, &p.t);
    if !roots.discriminant_ok {
        return Err(Error::DegenerateRoots);
    }
    let exact = trib_spinors(p, 0, nmax + 1);
    let mut worst = 0.0_f64;
    let mut witness = None;
    for (n, e) in exact.iter().enumerate() {
        let got = binet_spinor_with(p, &roots, n)?;
        let want = ComplexSpinor::from_exact(e);
        let err = got.relative_error(&want);
        worst = worst.max(err);
        if !(err < tol) && witness.is_none() {
            witness = Some(Witness {
                n,
                lhs: format!("[{}; {}]", got.c1, got.c2),
                rhs: e.to_string(),
            });
        }
    }
    let mut report = VerificationReport::new(IdentityId::BinetAgreement, p, IndexRange::new(0, nmax))
        .with_outcome(witness)
        .note(format!("max relative error {worst:.3e}, tol {tol:e}"));
    if report.status == Status::ExactPass {
        report.status = Status::ToleredPass;
    }
    Ok(report)
}

/// Suite knobs beyond the parameter set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteOptions {
    pub nmax: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { nmax: 50, seed: 0, tol: DEFAULT_TOL }
    }
}

/// Runs one identity, turning precondition errors into skipped reports.
pub fn run_identity(id: IdentityId, p: &SeqParams, opts: &SuiteOptions) -> VerificationReport {
    let nmax = opts.nmax;
    let range = IndexRange::new(0, nmax);
    let result = match id {
        IdentityId::SpinorRecurrence => verify_spinor_recurrence(p, nmax),
        IdentityId::ConjugateRelations => Ok(verify_conjugate_relations(p, nmax)),
        IdentityId::NormEquality => Ok(verify_norm_equality(p, nmax)),
        IdentityId::BinetAgreement => verify_binet(p, nmax.min(BINET_MAX_INDEX), opts.tol),
        IdentityId::GenfuncAgreement => Ok(verify_genfunc(p, nmax + 1)),
        IdentityId::TripleProductMap => verify_triple_product_map(p, opts.seed, TRIPLE_TRIALS),
        IdentityId::SpinorMatrixBehavior => Ok(verify_spinor_matrix(p, nmax)),
        IdentityId::DeterminantCombination => verify_determinant_combination(p, nmax),
        IdentityId::SummationClosedForm => verify_summation(p, nmax),
        IdentityId::UDecomposition => Ok(verify_u_decomposition(p, nmax)),
        IdentityId::MatrixPowerShift => Ok(verify_matrix_power_shift(p, nmax)),
    };
    result.unwrap_or_else(|e| VerificationReport::skipped(id, p, range, &e))
}

/// Runs the given identities in parallel; output order follows `ids`.
pub fn run_identities(ids: &[IdentityId], p: &SeqParams, opts: &SuiteOptions) -> Vec<VerificationReport> {
    ids.par_iter().map(|&id| run_identity(id, p, opts)).collect()
}

/// Every identity, in [`IdentityId::ALL`] order.
pub fn run_suite(p: &SeqParams, nmax: usize, seed: u64) -> Vec<VerificationReport> {
    run_identities(&IdentityId::ALL, p, &SuiteOptions { nmax, seed, tol: DEFAULT_TOL })
}
