//! Acceptance criteria. Each check prints one PASS/FAIL line; the process
//! exits nonzero when any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_traits::Zero;
use tribspin::identities::{
    derived_summation_correction, determinant_values, norm_forms, printed_determinant_constant,
    printed_summation_correction, random_params, random_quaternion, seeded_rng, triple_product_spinor, verify_binet,
    verify_conjugate_relations, verify_determinant_combination, verify_genfunc, verify_matrix_power_shift,
    verify_spinor_recurrence, verify_summation, verify_summation_with, verify_u_decomposition, CorrectionKind,
};
use tribspin::quaternions::{qmul, trib_quaternions};
use tribspin::scalar::{gauss, int, unit_i};
use tribspin::spinors::{breve, sigma};
use tribspin::{Error, SeqParams, Spinor, Status, VerificationReport};

const RANDOM_SETS: usize = 100;
const SWEEP_SEED: u64 = 7;
const PAIR_SEED: u64 = 42;
const PAIRS: usize = 1000;
const TRIPLE_SEED: u64 = 43;
const RECURRENCE_NMAX: usize = 100;
const RECURRENCE_BUDGET: Duration = Duration::from_secs(5);
const BINET_NMAX: usize = 30;
const BINET_TOL: f64 = 1e-9;
const GENFUNC_COEFFS: usize = 64;
const SUMMATION_NMAX: usize = 200;
const POWER_SHIFT_NMAX: usize = 30;
const U_NMAX: usize = 100;
const DETERMINANT_NMAX: usize = 20;
const CLI_BUDGET: Duration = Duration::from_secs(2);

type Outcome = Result<String, String>;

fn random_sets() -> Vec<SeqParams> {
    let mut rng = seeded_rng(SWEEP_SEED);
    (0..RANDOM_SETS).map(|_| random_params(&mut rng)).collect()
}

fn require(report: &VerificationReport, allowed: &[Status]) -> Result<(), String> {
    if allowed.contains(&report.status) {
        Ok(())
    } else {
        Err(format!(
            "{:?} for {} at {:?}: {}",
            report.status, report.params, report.witness, report.note
        ))
    }
}

fn spinor_recurrence() -> Outcome {
    let start = Instant::now();
    for p in random_sets() {
        require(&verify_spinor_recurrence(&p, RECURRENCE_NMAX).map_err(|e| e.to_string())?, &[Status::ExactPass])?;
    }
    let elapsed = start.elapsed();
    if elapsed >= RECURRENCE_BUDGET {
        return Err(format!("took {elapsed:.2?}, budget {RECURRENCE_BUDGET:?}"));
    }
    Ok(format!("{RANDOM_SETS} sets, n <= {RECURRENCE_NMAX}, {elapsed:.2?}"))
}

fn conjugate_relations() -> Outcome {
    for p in random_sets() {
        require(&verify_conjugate_relations(&p, RECURRENCE_NMAX), &[Status::ExactPass])?;
    }
    Ok(format!("{RANDOM_SETS} sets, n <= {RECURRENCE_NMAX}"))
}

/// All three norm expressions, with their printed signs, against the sum of
/// squares of the quaternion components.
fn norm_equality() -> Outcome {
    let tri = SeqParams::tribonacci();
    let q0 = &trib_quaternions(&tri, 0, 1)[0];
    let spot = norm_forms(&sigma(q0));
    let six = gauss(int(6), int(0));
    let spot_values = [&spot.conjugate_form, &spot.mate_form, &spot.cartan_form];
    if spot_values.iter().any(|v| **v != six) {
        return Err(format!(
            "tribonacci n=0: conj {}, mate {}, cartan {}; expected 6 for each",
            spot.conjugate_form, spot.mate_form, spot.cartan_form
        ));
    }
    for p in std::iter::once(tri).chain(random_sets()) {
        for (n, q) in trib_quaternions(&p, 0, RECURRENCE_NMAX + 1).iter().enumerate() {
            let squares = q.components().iter().fold(int(0), |acc, c| acc + *c * *c);
            let want = gauss(squares, int(0));
            let forms = norm_forms(&sigma(q));
            for (name, got) in [
                ("conjugate", &forms.conjugate_form),
                ("mate", &forms.mate_form),
                ("cartan", &forms.cartan_form),
            ] {
                if *got != want {
                    return Err(format!("{p} n={n}: {name} form {got} != {want}"));
                }
            }
        }
    }
    Ok(format!("tribonacci n=0 -> 6; {RANDOM_SETS} sets, n <= {RECURRENCE_NMAX}"))
}

fn product_correspondence() -> Outcome {
    let mut rng = seeded_rng(PAIR_SEED);
    let minus_i = -unit_i();
    for k in 0..PAIRS {
        let p = random_quaternion(&mut rng);
        let q = random_quaternion(&mut rng);
        let pq = qmul(&p, &q);
        let lhs = sigma(&pq);
        let rhs = breve(&p).scale(&minus_i).apply(&sigma(&q));
        if lhs != rhs {
            return Err(format!("pair {k}: sigma(pq) = {lhs}, -i P sigma(q) = {rhs}"));
        }
        let lhs = breve(&pq);
        let rhs = breve(&p).matmul(&breve(&q)).scale(&minus_i);
        if lhs != rhs {
            return Err(format!("pair {k}: breve(pq) = {lhs}, -i P Q = {rhs}"));
        }
    }
    Ok(format!("{PAIRS} pairs, seed {PAIR_SEED}"))
}

fn triple_product() -> Outcome {
    let mut rng = seeded_rng(TRIPLE_SEED);
    for k in 0..PAIRS {
        let a = random_quaternion(&mut rng);
        let b = random_quaternion(&mut rng);
        let c = random_quaternion(&mut rng);
        let lhs = sigma(&qmul(&qmul(&a, &b), &c));
        let rhs = triple_product_spinor(&a, &b, &c);
        if lhs != rhs {
            return Err(format!("triple {k}: {lhs} != {rhs}"));
        }
    }
    Ok(format!("{PAIRS} triples, seed {TRIPLE_SEED}"))
}

fn binet() -> Outcome {
    let mut notes = Vec::new();
    for p in [SeqParams::tribonacci(), SeqParams::third_order_jacobsthal()] {
        let report = verify_binet(&p, BINET_NMAX, BINET_TOL).map_err(|e| format!("{p}: {e}"))?;
        require(&report, &[Status::ToleredPass, Status::ExactPass])?;
        notes.push(report.note);
    }
    let degenerate = SeqParams::from_ints([3, -3, 1], [0, 1, 1]);
    match verify_binet(&degenerate, BINET_NMAX, BINET_TOL) {
        Err(Error::DegenerateRoots) => {}
        other => return Err(format!("(3,-3,1) gave {other:?}, expected DegenerateRoots")),
    }
    Ok(format!("n <= {BINET_NMAX}; {}; (3,-3,1) degenerate", notes.join("; ")))
}

fn generating_function() -> Outcome {
    for p in random_sets() {
        require(&verify_genfunc(&p, GENFUNC_COEFFS), &[Status::ExactPass])?;
    }
    let numerator = tribspin::analytic::genfunc_numerator(&SeqParams::tribonacci());
    // [2 + 2x + x² + ix; 1 + i(1 + x + x²)]
    let expected = [
        Spinor::from_ints((2, 0), (1, 1)),
        Spinor::from_ints((2, 1), (0, 1)),
        Spinor::from_ints((1, 0), (0, 1)),
    ];
    if numerator != expected {
        return Err(format!("tribonacci numerator {numerator:?}"));
    }
    Ok(format!("{GENFUNC_COEFFS} coefficients x {RANDOM_SETS} sets; tribonacci numerator matches"))
}

fn summation() -> Outcome {
    let mut checked = 0;
    for p in random_sets() {
        if p.delta().is_zero() {
            continue;
        }
        let report = verify_summation_with(&p, SUMMATION_NMAX, CorrectionKind::Derived).map_err(|e| e.to_string())?;
        require(&report, &[Status::ExactPass])?;
        checked += 1;
    }
    let tri = SeqParams::tribonacci();
    let derived = derived_summation_correction(&tri);
    let oracle = Spinor::from_ints((-5, -1), (-1, -3));
    if derived != oracle {
        return Err(format!("tribonacci correction {derived}, expected {oracle}"));
    }
    let report = verify_summation(&tri, SUMMATION_NMAX).map_err(|e| e.to_string())?;
    require(&report, &[Status::ExactPass])?;
    if !report.note.contains(&oracle.to_string()) {
        return Err(format!("report does not state {oracle}: {}", report.note));
    }
    let printed = printed_summation_correction(&tri);
    let printed_holds = verify_summation_with(&tri, SUMMATION_NMAX, CorrectionKind::Printed)
        .map_err(|e| e.to_string())?
        .status
        == Status::ExactPass;
    let recorded = if printed_holds { "holds" } else { "fails" };
    if !report.note.contains(&format!("printed correction {printed} {recorded}")) {
        return Err(format!("report does not record the printed correction: {}", report.note));
    }
    Ok(format!(
        "{checked} sets with delta != 0, n <= {SUMMATION_NMAX}; tribonacci sigma(omega) = {derived}, printed {printed} {recorded}"
    ))
}

fn matrix_power_shift() -> Outcome {
    for p in random_sets() {
        require(&verify_matrix_power_shift(&p, POWER_SHIFT_NMAX), &[Status::ExactPass])?;
    }
    Ok(format!("{RANDOM_SETS} sets, n <= {POWER_SHIFT_NMAX}"))
}

fn u_decomposition() -> Outcome {
    for p in random_sets() {
        require(&verify_u_decomposition(&p, U_NMAX), &[Status::ExactPass])?;
    }
    Ok(format!("{RANDOM_SETS} sets, n <= {U_NMAX}"))
}

fn determinant_combination() -> Outcome {
    let tri = SeqParams::tribonacci();
    let report = verify_determinant_combination(&tri, DETERMINANT_NMAX).map_err(|e| e.to_string())?;
    require(&report, &[Status::ExactPass])?;
    let again = verify_determinant_combination(&tri, DETERMINANT_NMAX).map_err(|e| e.to_string())?;
    if again != report {
        return Err("report is not deterministic".into());
    }
    let constant = printed_determinant_constant();
    let mut data = Vec::new();
    for (literal, label) in [(false, "T_{n+4}"), (true, "T_4")] {
        let hits = (0..=DETERMINANT_NMAX)
            .filter(|&n| determinant_values(&tri, n, literal).spinor_side == constant)
            .count();
        data.push(format!("{label} reading matches {constant} at {hits}/{} n", DETERMINANT_NMAX + 1));
    }
    Ok(format!("n = 0..={DETERMINANT_NMAX}, both readings agree; {}", data.join(", ")))
}

fn cli_suite() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_tribspin"))
        .args(["suite", "--preset", "tribonacci", "--nmax", "50", "--seed", "1", "--json"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if out.status.code() != Some(0) {
        return Err(format!("exit {:?}: {}", out.status, String::from_utf8_lossy(&out.stderr)));
    }
    if elapsed >= CLI_BUDGET {
        return Err(format!("took {elapsed:.2?}, budget {CLI_BUDGET:?}"));
    }
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let reports: Vec<VerificationReport> = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let typed = serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())? + "\n";
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let untyped = serde_json::to_string_pretty(&value).map_err(|e| e.to_string())? + "\n";
    if typed != text || untyped != text {
        return Err("JSON does not round-trip byte-identically".into());
    }
    Ok(format!("{} reports, {elapsed:.2?}, {} bytes round-trip", reports.len(), text.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("spinor recurrence", spinor_recurrence),
        ("conjugate relations", conjugate_relations),
        ("norm equality", norm_equality),
        ("product correspondence", product_correspondence),
        ("triple product", triple_product),
        ("binet agreement", binet),
        ("generating function", generating_function),
        ("summation closed form", summation),
        ("matrix power shift", matrix_power_shift),
        ("u decomposition", u_decomposition),
        ("determinant combination", determinant_combination),
        ("cli suite", cli_suite),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
