//! Named verification suites that bundle every module's checks.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::jpoly::verify_jpoly;
use crate::oracles::{verify_oracles, OracleOptions, DEFAULT_CAP};
use crate::qstirling::{verify_carlitz_identities, verify_conjugated_inverse, verify_inverse_pair};
use crate::report::Report;
use crate::symfunc::{
    classical_pn_determinants_check, complete_sum_check, determinant_convolution_check, generating_series_check,
    pq_transfer_check, product_rule_check, shifted_base_check, transfer_theorem_check, SymAlphabet, SymSeriesBundle,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Qstirling,
    Symfunc,
    Jpoly,
    Oracles,
    All,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Qstirling,
        Suite::Symfunc,
        Suite::Jpoly,
        Suite::Oracles,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Qstirling => "qstirling",
            Suite::Symfunc => "symfunc",
            Suite::Jpoly => "jpoly",
            Suite::Oracles => "oracles",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}; use qstirling, symfunc, jpoly, oracles or all"))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub seed: u64,
    pub cap: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 7,
            seed: 0,
            cap: DEFAULT_CAP,
        }
    }
}

/// Three alphabets of distinct exact rationals with `n` variables each.
pub fn test_alphabets(n: usize) -> [SymAlphabet; 3] {
    [
        SymAlphabet::primes(n),
        SymAlphabet::rationals(n),
        SymAlphabet::unit_fractions(n),
    ]
}

pub fn verify_qstirling(n_max: usize) -> Report {
    let mut report = verify_carlitz_identities(n_max);
    report.extend(verify_inverse_pair(n_max));
    report.extend(verify_conjugated_inverse(n_max));
    report
}

/// Symmetric-function identities on each test alphabet, in every degree up
/// to `n_max`, plus the specialization-only checks.
pub fn verify_symfunc(n_max: usize) -> Result<Report> {
    if n_max == 0 {
        return Err(Error::Precondition("n_max must be at least 1".into()));
    }
    let mut report = Report::new();
    for n in 1..=n_max {
        for alphabet in test_alphabets(n) {
            report.extend(transfer_theorem_check(&alphabet, n)?);
        }
    }
    for alphabet in test_alphabets(n_max) {
        let bundle = SymSeriesBundle::from_alphabet(&alphabet, n_max);
        report.extend(classical_pn_determinants_check(&alphabet, n_max)?);
        report.extend(determinant_convolution_check(&bundle)?);
        report.extend(generating_series_check(&bundle)?);
        report.extend(complete_sum_check(&alphabet, n_max)?);
        report.extend(product_rule_check(&alphabet, n_max)?);
    }
    let small = SymAlphabet::from_ints(&[1, 2, 3])?;
    for n in 1..=n_max {
        report.extend(pq_transfer_check(&small, n)?);
    }
    report.extend(generating_series_check(&SymSeriesBundle::exp_specialization(n_max))?);
    report.extend(shifted_base_check(n_max)?);
    Ok(report)
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Report> {
    let n = opts.n_max;
    let oracle_opts = OracleOptions {
        n_max: n,
        seed: opts.seed,
        cap: opts.cap,
    };
    match suite {
        Suite::Qstirling => Ok(verify_qstirling(n)),
        Suite::Symfunc => verify_symfunc(n),
        Suite::Jpoly => verify_jpoly(n),
        Suite::Oracles => verify_oracles(oracle_opts),
        Suite::All => {
            let mut report = verify_qstirling(n);
            report.extend(verify_symfunc(n)?);
            report.extend(verify_jpoly(n)?);
            report.extend(verify_oracles(oracle_opts)?);
            Ok(report)
        }
    }
}
