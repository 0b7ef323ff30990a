//! End-to-end acceptance criteria, each at exact equality. Prints one line per
//! criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use qpoly::exactpoly::UniPoly;
use qpoly::jpoly::{
    build_jtable, exp_shift_check, kung_yan_check, reciprocal_recurrence_check, shape_check, triple_equivalence_check,
};
use qpoly::oracles::{verify_oracles, OracleOptions, DEFAULT_CAP};
use qpoly::qstirling::{verify_carlitz_identities, verify_conjugated_inverse, verify_inverse_pair};
use qpoly::report::{Report, Status};
use qpoly::symfunc::{
    classical_pn_determinants_check, determinant_convolution_check, pq_transfer_check, shifted_base_check,
    transfer_theorem_check, SymAlphabet, SymSeriesBundle,
};
use qpoly::verify::test_alphabets;
use qpoly::Result;

fn p(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c)
}

fn golden_tables() -> Result<Report> {
    let table: [(usize, usize, &[i64]); 15] = [
        (1, 1, &[1]),
        (2, 1, &[1]),
        (2, 2, &[1]),
        (3, 1, &[2, 1]),
        (3, 2, &[1, 1]),
        (3, 3, &[1]),
        (4, 1, &[6, 6, 3, 1]),
        (4, 2, &[2, 3, 2, 1]),
        (4, 3, &[1, 1, 1]),
        (4, 4, &[1]),
        (5, 1, &[24, 36, 30, 20, 10, 4, 1]),
        (5, 2, &[6, 12, 12, 10, 6, 3, 1]),
        (5, 3, &[2, 3, 4, 3, 2, 1]),
        (5, 4, &[1, 1, 1, 1]),
        (5, 5, &[1]),
    ];
    let built = build_jtable(6)?;
    let mut report = Report::new();
    for (n, r, c) in table {
        report.check_eq("golden_entry", n, Some(r), built.get(n, r), &p(c));
    }
    let entries = built.entries().filter(|(n, _, _)| *n <= 5).count();
    report.check_eq("golden_entry_count", 5, None, &entries, &15);
    let j62 = p(&[24, 60, 78, 80, 68, 52, 35, 20, 10, 4, 1]);
    report.check_eq("golden_worked_example", 6, Some(2), built.get(6, 2), &j62);
    Ok(report)
}

fn cross_formula() -> Result<Report> {
    triple_equivalence_check(9)
}

fn oracle_report() -> Result<Report> {
    verify_oracles(OracleOptions {
        n_max: 8,
        seed: 42,
        cap: DEFAULT_CAP,
    })
}

fn only(report: Report, prefix: &str) -> Report {
    Report {
        records: report
            .records
            .into_iter()
            .filter(|r| r.identity.starts_with(prefix))
            .collect(),
    }
}

fn forest_oracle() -> Result<Report> {
    let report = only(oracle_report()?, "forest_");
    // every ranking must appear: two fixed and three seeded
    let rankings = report
        .records
        .iter()
        .filter(|r| r.identity.starts_with("forest_enumerator["))
        .map(|r| r.identity.clone())
        .collect::<std::collections::BTreeSet<_>>();
    let mut out = report;
    out.check_eq("ranking_count", 8, None, &rankings.len(), &5);
    Ok(out)
}

fn parking_oracle() -> Result<Report> {
    Ok(only(oracle_report()?, "parking_"))
}

fn reciprocal_recurrences() -> Result<Report> {
    let mut report = reciprocal_recurrence_check(9)?;
    report.extend(kung_yan_check(9)?);
    Ok(report)
}

fn qstirling_suite() -> Result<Report> {
    let mut report = verify_carlitz_identities(12);
    report.extend(verify_inverse_pair(12));
    report.extend(verify_conjugated_inverse(8));
    Ok(report)
}

fn transfer_theorems() -> Result<Report> {
    let mut report = Report::new();
    for n in 1..=6 {
        for alphabet in test_alphabets(n) {
            report.extend(transfer_theorem_check(&alphabet, n)?);
        }
    }
    for alphabet in test_alphabets(6) {
        report.extend(determinant_convolution_check(&SymSeriesBundle::from_alphabet(
            &alphabet, 6,
        ))?);
    }
    for alphabet in test_alphabets(5) {
        report.extend(classical_pn_determinants_check(&alphabet, 5)?);
    }
    Ok(report)
}

fn lemma_suite() -> Result<Report> {
    let mut report = shifted_base_check(7)?;
    report.extend(exp_shift_check(8, 8)?);
    Ok(report)
}

fn pq_extension() -> Result<Report> {
    let alphabet = SymAlphabet::from_ints(&[1, 2, 3])?;
    let mut report = Report::new();
    for n in 1..=4 {
        report.extend(pq_transfer_check(&alphabet, n)?);
    }
    Ok(report)
}

fn shape_properties() -> Result<Report> {
    Ok(shape_check(&build_jtable(12)?))
}

type Criterion = (&'static str, fn() -> Result<Report>);

const CRITERIA: [Criterion; 10] = [
    ("golden tables", golden_tables),
    ("cross-formula equivalence, n <= 9", cross_formula),
    ("forest oracle, n <= 8, five rankings", forest_oracle),
    ("parking oracle, m + r <= 8", parking_oracle),
    ("reciprocal recurrences, n <= 9", reciprocal_recurrences),
    ("q-Stirling identities, n <= 12", qstirling_suite),
    ("transfer theorems on three alphabets, n <= 6", transfer_theorems),
    ("exponential specialization lemmas", lemma_suite),
    ("p,q-extension, n <= 4", pq_extension),
    ("table shape, n <= 12", shape_properties),
];

fn main() -> ExitCode {
    let mut all_ok = true;
    for (i, (name, run)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let line = match run() {
            Ok(report) => {
                let failed = report.records.iter().filter(|r| r.status == Status::Fail).count();
                let skipped = report.records.iter().filter(|r| r.status == Status::Skipped).count();
                let ok = !report.is_empty() && report.passed();
                all_ok &= ok;
                let mut line = format!(
                    "criterion {:>2} {}: {} ({} checks, {} skipped, {} failed, {:.2?})",
                    i + 1,
                    if ok { "PASS" } else { "FAIL" },
                    name,
                    report.records.len(),
                    skipped,
                    failed,
                    start.elapsed()
                );
                if let Some(f) = report.first_failure() {
                    line.push_str(&format!("\n    first failure: {f:?}"));
                }
                line
            }
            Err(e) => {
                all_ok = false;
                format!("criterion {:>2} FAIL: {name} (error: {e})", i + 1)
            }
        };
        println!("{line}");
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
