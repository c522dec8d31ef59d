//! Exhaustive small-instance verification suites.
//!
//! Each suite sweeps a bounded family of inputs, checks exact equalities and
//! returns a [`SuiteReport`]. The same registry backs the `verify` command and
//! the acceptance tests.

mod actions;
mod counts;
mod identities;
mod oracle;
mod partitions;
mod ring;
mod text;

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::basis::BasisId;
use crate::exec::Exec;
use crate::expr::format_expression;
use crate::symfunc::SymFunc;

/// Sweep sizes. [`Bounds::default`] is the full acceptance range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// `|λ|` for single-operator action laws.
    pub action_degree: u32,
    pub max_a: u32,
    pub max_k: u32,
    /// Input degree for operator identities.
    pub identity_degree: u32,
    /// Input degree for `(RM_a^{(1)})^k` and RM commutativity.
    pub row_power_degree: u32,
    pub row_power_k: u32,
    /// Degree for duality tables, `ω`, expansions and Jacobi–Trudi.
    pub ring_degree: u32,
    /// Total degree for product rules and skew lemmas.
    pub product_degree: u32,
    /// Degree for the constant-term operator sum.
    pub constant_term_degree: u32,
    /// `n` for `s_λ^⊥(h_1^n)`.
    pub skew_relation_n: u32,
    pub count_n: u32,
    pub count_k: u32,
    pub saturation_n: u32,
    pub syt_degree: u32,
    pub lemma_n: u32,
    pub lemma_k: u32,
    pub rsform_n: u32,
    pub rsform_k: u32,
    pub oracle_degree: u32,
    pub oracle_vars: usize,
    pub symmetry_degree: u32,
    pub symmetry_vars: usize,
    pub conjugate_degree: u32,
    pub partition_degree: u32,
    pub text_degree: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            action_degree: 8,
            max_a: 3,
            max_k: 4,
            identity_degree: 6,
            row_power_degree: 5,
            row_power_k: 3,
            ring_degree: 8,
            product_degree: 6,
            constant_term_degree: 8,
            skew_relation_n: 7,
            count_n: 10,
            count_k: 5,
            saturation_n: 8,
            syt_degree: 8,
            lemma_n: 8,
            lemma_k: 4,
            rsform_n: 6,
            rsform_k: 3,
            oracle_degree: 6,
            oracle_vars: 6,
            symmetry_degree: 5,
            symmetry_vars: 5,
            conjugate_degree: 12,
            partition_degree: 8,
            text_degree: 6,
        }
    }
}

impl Bounds {
    /// Caps every degree-like bound at `d`; widths and heights are untouched.
    /// Oracle variable counts follow the oracle degree so checks stay faithful.
    pub fn with_max_degree(&self, d: u32) -> Bounds {
        let c = |x: u32| x.min(d);
        Bounds {
            action_degree: c(self.action_degree),
            identity_degree: c(self.identity_degree),
            row_power_degree: c(self.row_power_degree),
            ring_degree: c(self.ring_degree),
            product_degree: c(self.product_degree),
            constant_term_degree: c(self.constant_term_degree),
            skew_relation_n: c(self.skew_relation_n),
            count_n: c(self.count_n),
            saturation_n: c(self.saturation_n),
            syt_degree: c(self.syt_degree),
            lemma_n: c(self.lemma_n),
            rsform_n: c(self.rsform_n),
            oracle_degree: c(self.oracle_degree),
            oracle_vars: self.oracle_vars.min(d.max(1) as usize),
            symmetry_degree: c(self.symmetry_degree),
            symmetry_vars: self.symmetry_vars.min(d.max(1) as usize),
            conjugate_degree: c(self.conjugate_degree),
            partition_degree: c(self.partition_degree),
            text_degree: c(self.text_degree),
            ..self.clone()
        }
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    /// Observations that are recorded but not asserted.
    pub notes: Vec<String>,
    #[serde(serialize_with = "seconds")]
    pub elapsed: Duration,
}

fn seconds<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} checks, {} failures ({:.1}s)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.checks,
            self.failures.len(),
            self.elapsed.as_secs_f64()
        )
    }
}

/// Check counter shared by the suites.
#[derive(Debug, Default)]
pub struct Tally {
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn same(&mut self, left: &SymFunc, right: &SymFunc, what: impl FnOnce() -> String) {
        self.checks += 1;
        if left != right {
            self.failures.push(format!(
                "{}: {} != {}",
                what(),
                format_expression(left, BasisId::P),
                format_expression(right, BasisId::P)
            ));
        }
    }

    pub fn same_value<T: PartialEq + fmt::Debug>(
        &mut self,
        left: &T,
        right: &T,
        what: impl FnOnce() -> String,
    ) {
        self.checks += 1;
        if left != right {
            self.failures
                .push(format!("{}: {left:?} != {right:?}", what()));
        }
    }

    pub fn note(&mut self, note: String) {
        self.notes.push(note);
    }

    pub fn absorb(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }

    fn into_report(self, name: &'static str, elapsed: Duration) -> SuiteReport {
        SuiteReport {
            name,
            checks: self.checks,
            failures: self.failures,
            notes: self.notes,
            elapsed,
        }
    }
}

/// Runs `f` on every item under `exec` and merges the tallies in input order.
pub fn sweep<T, F>(exec: Exec, items: &[T], f: F) -> Tally
where
    T: Sync,
    F: Fn(&T, &mut Tally) + Sync + Send,
{
    let mut total = Tally::default();
    for t in exec.map(items, |item| {
        let mut t = Tally::default();
        f(item, &mut t);
        t
    }) {
        total.absorb(t);
    }
    total
}

/// A named verification suite.
pub struct Suite {
    pub name: &'static str,
    pub summary: &'static str,
    /// Only run when the oracle sweep is requested.
    pub oracle: bool,
    run: fn(&Bounds, Exec) -> Tally,
}

impl Suite {
    pub fn run(&self, bounds: &Bounds, exec: Exec) -> SuiteReport {
        let start = Instant::now();
        let tally = (self.run)(bounds, exec);
        tally.into_report(self.name, start.elapsed())
    }
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "partitions",
        summary: "conjugation, column and part arithmetic, straightening, enumeration counts",
        oracle: false,
        run: partitions::run,
    },
    Suite {
        name: "ring",
        summary: "duality, omega, expansions, Jacobi-Trudi, r-coefficients, skew and product rules",
        oracle: false,
        run: ring::run,
    },
    Suite {
        name: "text",
        summary: "print/parse round trip and stable JSON",
        oracle: false,
        run: text::run,
    },
    Suite {
        name: "actions",
        summary: "every operator's action law on its own basis",
        oracle: false,
        run: actions::run,
    },
    Suite {
        name: "identities",
        summary: "operator identities, omega conjugations, relation pairs, constant term",
        oracle: false,
        run: identities::run,
    },
    Suite {
        name: "counts",
        summary: "bounded-height pair counts three ways, Catalan, saturation, theta",
        oracle: false,
        run: counts::run_counts,
    },
    Suite {
        name: "lemma",
        summary: "CS_{0^k}(h_1^n) formula and the (RS_0)^k expansion",
        oracle: false,
        run: counts::run_lemma,
    },
    Suite {
        name: "oracle",
        summary: "basis conversions and products against explicit polynomials",
        oracle: true,
        run: oracle::run,
    },
];

pub fn suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

/// Runs the selected suites in registry order. `filter` names a single suite
/// (oracle or not); otherwise every non-oracle suite runs, plus the oracle
/// suites when `oracle` is set.
pub fn run_suites(
    filter: Option<&str>,
    oracle: bool,
    bounds: &Bounds,
    exec: Exec,
) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .filter(|s| match filter {
            Some(name) => s.name == name,
            None => oracle || !s.oracle,
        })
        .map(|s| s.run(bounds, exec))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capped_bounds_run_clean() {
        let bounds = Bounds::default().with_max_degree(3);
        for s in SUITES {
            let report = s.run(&bounds, Exec::default());
            assert!(report.passed(), "{report}: {:?}", report.failures);
            assert!(report.checks > 0, "{} ran no checks", s.name);
        }
    }

    #[test]
    fn failures_are_collected() {
        let mut t = Tally::default();
        t.check(true, || unreachable!());
        t.same(&SymFunc::one(), &SymFunc::zero(), || "one vs zero".into());
        let r = t.into_report("demo", Duration::ZERO);
        assert_eq!(r.checks, 2);
        assert_eq!(r.failures, vec!["one vs zero: 1 != 0".to_string()]);
        assert!(!r.passed());
    }
}
