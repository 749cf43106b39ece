//! Named verification suites: batches of identity checks with a report of
//! every failing case.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Result, TwinError};
use crate::free_aut::{compose, equivariance_cases, phi4_generator};
use crate::pure_twin::{betti_binomial, betti_closed_form};
use crate::schreier::coset_rep;
use crate::twin::{
    center_search, commuting_cube_cases, cube_relation_case, d4_relation_cases, lcs_identity_t3, m_factor,
    transversal_cube_cases, IdentityCase,
};
use crate::word::{normal_form, CoxWord, GroupSpec};

pub const SUITES: [&str; 9] =
    ["lemma41", "eq31", "lemma45", "d4", "center", "lcs-t3", "betti-agree", "phi4-equivariance", "all"];

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Largest rank for rank-indexed families.
    pub max_n: usize,
    /// Word length bound for the center search.
    pub depth: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { max_n: 7, depth: 6, jobs: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteFailure {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<SuiteFailure>,
    #[serde(serialize_with = "seconds")]
    pub elapsed: Duration,
}

fn seconds<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {}: {} cases, {} failures, {:.3}s",
            self.suite,
            self.cases,
            self.failures.len(),
            self.elapsed.as_secs_f64()
        )?;
        for fail in &self.failures {
            write!(f, "\n  {}: {} != {}", fail.label, fail.lhs, fail.rhs)?;
        }
        Ok(())
    }
}

/// A single check: its label and, on failure, the two sides as printed.
type Outcome = (String, Option<(String, String)>);

fn identity_outcome(case: &IdentityCase) -> Result<Outcome> {
    let spec = GroupSpec::new(case.rank)?;
    let lhs = normal_form(&case.lhs, &spec)?;
    let rhs = normal_form(&case.rhs, &spec)?;
    let failure = (lhs != rhs).then(|| (lhs.to_string(), rhs.to_string()));
    Ok((case.label.clone(), failure))
}

fn identity_outcomes(cases: &[IdentityCase]) -> Result<Vec<Outcome>> {
    cases.par_iter().map(identity_outcome).collect()
}

/// `overline{m_{n-1,i} s_l} = overline{s_{l-1} m_{n-1,i}}` for `i + 1 < l <= n - 1`.
fn coset_shift_outcomes(n: usize) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for i in 0..n - 1 {
        for l in i + 2..n {
            let m = m_factor(n - 1, i);
            let lhs = m.concat(&CoxWord::from_indices(&[l as u8]));
            let rhs = CoxWord::from_indices(&[(l - 1) as u8]).concat(&m);
            let (a, b) = (coset_rep(&lhs, n)?, coset_rep(&rhs, n)?);
            let failure = (a != b).then(|| (a.to_string(), b.to_string()));
            out.push((format!("coset-shift n={n} i={i} l={l}"), failure));
        }
    }
    Ok(out)
}

fn value_outcome(label: String, lhs: impl ToString, rhs: impl ToString) -> Outcome {
    let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
    let failure = (lhs != rhs).then_some((lhs, rhs));
    (label, failure)
}

fn check_max_n(opts: &SuiteOptions) -> Result<()> {
    if (3..=10).contains(&opts.max_n) {
        Ok(())
    } else {
        Err(TwinError::UnsupportedRank(opts.max_n, "3..=10"))
    }
}

fn suite_outcomes(name: &str, opts: &SuiteOptions) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    match name {
        "lemma41" => {
            check_max_n(opts)?;
            for n in 3..=opts.max_n {
                out.extend(identity_outcomes(&commuting_cube_cases(n))?);
                out.extend(identity_outcomes(&transversal_cube_cases(n))?);
                out.extend(coset_shift_outcomes(n)?);
            }
        }
        "eq31" => out.extend(identity_outcomes(&[cube_relation_case(4)])?),
        "lemma45" => {
            check_max_n(opts)?;
            let cases: Vec<IdentityCase> = (4..=opts.max_n).map(cube_relation_case).collect();
            out.extend(identity_outcomes(&cases)?);
        }
        "d4" => out.extend(identity_outcomes(&d4_relation_cases(5))?),
        "center" => {
            for n in 3..=opts.max_n.min(6) {
                let found = center_search(n, opts.depth)?;
                let lhs = found.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ");
                out.push(value_outcome(
                    format!("center of T_{n} up to length {}", opts.depth),
                    if found.is_empty() { "none".to_string() } else { lhs },
                    "none",
                ));
            }
        }
        "lcs-t3" => {
            for i in 1..=6 {
                out.push(value_outcome(format!("lower central step i={i}"), lcs_identity_t3(i)?, true));
            }
        }
        "betti-agree" => {
            for n in 3..=10 {
                out.push(value_outcome(format!("betti n={n}"), betti_binomial(n)?, betti_closed_form(n)?));
            }
        }
        "phi4-equivariance" => {
            for c in equivariance_cases()? {
                out.push(value_outcome(format!("b{}^s{}", c.basis, c.generator), &c.computed, &c.table));
            }
            for i in 1..=3 {
                let g = phi4_generator(i)?;
                out.push(value_outcome(format!("phi4(s{i})^2 = 1"), compose(&g, &g).is_identity(), true));
            }
            let (a, b) = (phi4_generator(1)?, phi4_generator(3)?);
            out.push(value_outcome(
                "phi4(s1) phi4(s3) = phi4(s3) phi4(s1)".into(),
                compose(&a, &b) == compose(&b, &a),
                true,
            ));
        }
        other => {
            return Err(TwinError::Invalid(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", "))))
        }
    }
    Ok(out)
}

fn run_one(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let start = Instant::now();
    let outcomes = suite_outcomes(name, opts)?;
    let failures = outcomes
        .iter()
        .filter_map(|(label, f)| {
            f.as_ref().map(|(lhs, rhs)| SuiteFailure { label: label.clone(), lhs: lhs.clone(), rhs: rhs.clone() })
        })
        .collect();
    Ok(SuiteReport { suite: name.to_string(), cases: outcomes.len(), failures, elapsed: start.elapsed() })
}

/// Runs a suite; `all` yields one report per suite.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Vec<SuiteReport>> {
    let names: Vec<&str> = if name == "all" { SUITES[..SUITES.len() - 1].to_vec() } else { vec![name] };
    let run = || names.iter().map(|n| run_one(n, opts)).collect::<Result<Vec<_>>>();
    match opts.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| TwinError::Invalid(e.to_string()))?
            .install(run),
        None => run(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let opts = SuiteOptions { max_n: 5, depth: 4, jobs: Some(2) };
        for name in ["lemma41", "eq31", "lemma45", "d4", "lcs-t3", "betti-agree", "phi4-equivariance"] {
            let reports = run_suite(name, &opts).unwrap();
            assert!(reports.iter().all(SuiteReport::passed), "{}", reports[0]);
            assert!(reports[0].cases > 0);
        }
    }

    #[test]
    fn unknown_suite_rejected() {
        assert!(run_suite("nope", &SuiteOptions::default()).is_err());
    }

    #[test]
    fn failure_is_reported_with_both_sides() {
        let case = IdentityCase {
            label: "false".into(),
            rank: 3,
            lhs: CoxWord::from_indices(&[1]),
            rhs: CoxWord::from_indices(&[2]),
        };
        let (_, failure) = identity_outcome(&case).unwrap();
        assert_eq!(failure, Some(("s1".to_string(), "s2".to_string())));
    }
}
