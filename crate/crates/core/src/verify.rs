//! Checks that the composed mutation families agree with the star-to-tree
//! families, collecting every discrepancy as a report entry.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::mutation::{run_algorithm_aihara, run_algorithm_z, MutationLog};
use crate::pipeline::{
    compose_inverse_mutations, expected_sigma, pointing_family, sigma_of, Permutation, TiltingFamily,
};
use crate::tree::{BrauerTree, EdgeId, EdgeNumbering, PointingKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    TheoremZ,
    PropAihara,
    Corollary,
    Tilting,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::TheoremZ, Mode::PropAihara, Mode::Corollary, Mode::Tilting];

    pub fn name(self) -> &'static str {
        match self {
            Mode::TheoremZ => "theorem-z",
            Mode::PropAihara => "prop-aihara",
            Mode::Corollary => "corollary",
            Mode::Tilting => "tilting",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name() == s || m.name().replace('-', "_") == s)
            .ok_or_else(|| Error::UnknownMode(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub label: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub mode: Mode,
    pub sigma: Option<Permutation>,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, label: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        self.failures.push(Failure { label: label.into(), expected: expected.to_string(), actual: actual.to_string() });
    }

    fn error(&mut self, label: &str, err: &Error) {
        self.fail(label, "no error", err);
    }
}

fn compare_rows(report: &mut Report, what: &str, got: &TiltingFamily, want: &TiltingFamily) {
    for n in got.differing_rows(want) {
        report.fail(format!("{what} row {n}"), want.row(n).render_row(), got.row(n).render_row());
    }
}

fn check_family(report: &mut Report, what: &str, tree: &BrauerTree, family: &TiltingFamily, numbering: &EdgeNumbering) {
    if let Some((i, j, n)) = crate::complex::first_violation(family.rows()) {
        report.fail(
            format!("{what} tilting"),
            "no maps at nonzero shifts",
            format!("Hom(row {}, row {}[{n}]) != 0", i + 1, j + 1),
        );
    }
    let homs = family.hom_matrix();
    let cartan = tree.cartan_matrix(numbering);
    if homs != cartan {
        report.fail(format!("{what} cartan"), format!("{cartan:?}"), format!("{homs:?}"));
    }
}

fn composed(report: &mut Report, log: Result<MutationLog>) -> Option<(MutationLog, TiltingFamily)> {
    let log = match log {
        Ok(l) => l,
        Err(e) => {
            report.error("reduction", &e);
            return None;
        }
    };
    match compose_inverse_mutations(&log) {
        Ok(f) => Some((log, f)),
        Err(e) => {
            report.error("compose", &e);
            None
        }
    }
}

fn pointed(
    report: &mut Report,
    tree: &BrauerTree,
    kind: PointingKind,
    initial: EdgeId,
) -> Option<(TiltingFamily, EdgeNumbering)> {
    match pointing_family(tree, kind, initial) {
        Ok(x) => Some(x),
        Err(e) => {
            report.error("pointing family", &e);
            None
        }
    }
}

fn theorem_z(report: &mut Report, tree: &BrauerTree, initial: EdgeId) {
    let Some((log, fz)) = composed(report, run_algorithm_z(tree, initial)) else { return };
    let nat = log.natural_numbering().expect("complete log");
    let reversed = tree.make_pointing(PointingKind::Reversed);
    match crate::pipeline::star_to_tree_family(tree, &reversed, nat) {
        Ok(want) => compare_rows(report, "algorithm z", &fz, &want),
        Err(e) => report.error("reversed family", &e),
    }
}

/// Runs Aihara's algorithm and matches its family with the left-alternating
/// one; returns the log and sigma when a matching exists.
fn aihara_sigma(report: &mut Report, tree: &BrauerTree, initial: EdgeId) -> Option<(MutationLog, Permutation)> {
    let (log, fa) = composed(report, run_algorithm_aihara(tree, initial))?;
    let (h, _) = pointed(report, tree, PointingKind::LeftAlternating, initial)?;
    match sigma_of(&fa, &h) {
        Ok(s) => {
            report.sigma = Some(s.clone());
            Some((log, s))
        }
        Err(e) => {
            report.error("sigma", &e);
            None
        }
    }
}

fn prop_aihara(report: &mut Report, tree: &BrauerTree, initial: EdgeId) {
    let Some((log, fa)) = composed(report, run_algorithm_aihara(tree, initial)) else { return };
    for n in 1..=fa.len() as u32 {
        let row = fa.row(n);
        if row.min_degree().is_some_and(|d| d < -1) || row.max_degree().is_some_and(|d| d > 0) {
            report.fail(format!("aihara row {n} support"), "degrees in {-1, 0}", row.render_row());
        }
    }
    let Some((h, _)) = pointed(report, tree, PointingKind::LeftAlternating, initial) else { return };
    let sigma = match sigma_of(&fa, &h) {
        Ok(s) => s,
        Err(e) => return report.error("sigma", &e),
    };
    let nat = log.natural_numbering().expect("complete log");
    for &r in tree.roots() {
        let n = nat.number(r);
        if sigma.apply(n) != n {
            report.fail(format!("sigma fixes root {}", tree.label(r)), n, sigma.apply(n));
        }
    }
    report.sigma = Some(sigma);
}

fn corollary(report: &mut Report, tree: &BrauerTree, initial: EdgeId) {
    let Some((log, sigma)) = aihara_sigma(report, tree, initial) else { return };
    match expected_sigma(tree, log.natural_numbering().expect("complete log")) {
        Ok(want) if want == sigma => {}
        Ok(want) => report.fail("sigma cycles", want, &sigma),
        Err(e) => report.error("sigma cycles", &e),
    }
}

fn tilting(report: &mut Report, tree: &BrauerTree, initial: EdgeId) {
    for kind in [PointingKind::Ordinary, PointingKind::Reversed, PointingKind::LeftAlternating] {
        if let Some((fam, n)) = pointed(report, tree, kind, initial) {
            check_family(report, &format!("{kind:?} pointing"), tree, &fam, &n);
        }
    }
    for (what, log) in
        [("algorithm z", run_algorithm_z(tree, initial)), ("aihara", run_algorithm_aihara(tree, initial))]
    {
        if let Some((log, fam)) = composed(report, log) {
            check_family(report, what, tree, &fam, log.natural_numbering().expect("complete log"));
        }
    }
}

pub fn verify(tree: &BrauerTree, initial: EdgeId, mode: Mode) -> Report {
    let mut report = Report { mode, sigma: None, failures: Vec::new() };
    match mode {
        Mode::TheoremZ => theorem_z(&mut report, tree, initial),
        Mode::PropAihara => prop_aihara(&mut report, tree, initial),
        Mode::Corollary => corollary(&mut report, tree, initial),
        Mode::Tilting => tilting(&mut report, tree, initial),
    }
    report
}
