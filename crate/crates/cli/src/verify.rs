//! The batch verification behind `cominuscule verify`.

use cominuscule::catalog::{catalog_up_to_rank, make_spec, SpaceFamily};
use cominuscule::foliations::{cayley_family, orthogonal_family, symplectic_family};
use cominuscule::partitions::{agreement_sweep, FormulaFamily};
use cominuscule::plethysm::{decompose_omega, default_method, Method};
use cominuscule::twists::{all_decompositions, min_twist, nonvanishing_scan, table_audit, Verdict};
use cominuscule::{Exec, Result};
use serde::Serialize;

use crate::args::FamilyLetter;

#[derive(Debug, Clone, Serialize)]
pub struct VerifyConfig {
    pub max_rank: usize,
    /// Empty means every family.
    pub families: Vec<FamilyLetter>,
    pub max_p: Option<usize>,
    pub jobs: Option<u32>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_rank: 6,
            families: Vec::new(),
            max_p: None,
            jobs: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub checks: Vec<Check>,
    pub passed: bool,
}

pub fn letter(f: SpaceFamily) -> FamilyLetter {
    match f {
        SpaceFamily::Grass { .. } => FamilyLetter::A,
        SpaceFamily::QuadricOdd { .. } => FamilyLetter::B,
        SpaceFamily::Lagrangian { .. } => FamilyLetter::C,
        SpaceFamily::QuadricEven { .. } | SpaceFamily::Spinor { .. } => FamilyLetter::D,
        SpaceFamily::Cayley | SpaceFamily::Freudenthal => FamilyLetter::E,
    }
}

impl VerifyConfig {
    fn wants(&self, l: FamilyLetter) -> bool {
        self.families.is_empty() || self.families.contains(&l)
    }

    fn spaces(&self) -> Vec<SpaceFamily> {
        catalog_up_to_rank(self.max_rank).into_iter().filter(|f| self.wants(letter(*f))).collect()
    }
}

fn check(name: &str, outcome: Result<(bool, String)>) -> Check {
    match outcome {
        Ok((passed, detail)) => Check {
            name: name.into(),
            passed,
            detail,
        },
        Err(e) => Check {
            name: name.into(),
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

fn failures_detail(total: usize, failures: &[String]) -> String {
    if failures.is_empty() {
        format!("{total} cases")
    } else {
        let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
        format!("{} of {total} failed: {}", failures.len(), shown.join("; "))
    }
}

pub fn run_verify(cfg: &VerifyConfig, exec: Exec) -> VerifyReport {
    let mut checks = Vec::new();
    for (letter_, fam, max_n) in [
        (FamilyLetter::A, FormulaFamily::A, cfg.max_rank + 1),
        (FamilyLetter::C, FormulaFamily::C, cfg.max_rank),
        (FamilyLetter::D, FormulaFamily::D, cfg.max_rank),
    ] {
        if !cfg.wants(letter_) {
            continue;
        }
        checks.push(check(
            &format!("partitions-{fam:?}"),
            agreement_sweep(fam, max_n, exec).map(|rows| {
                let bad: Vec<String> = rows
                    .iter()
                    .filter(|r| !r.agrees())
                    .map(|r| format!("n={} p={}: {} vs {}", r.n, r.p, r.formula_l, r.oracle_l))
                    .collect();
                (bad.is_empty(), failures_detail(rows.len(), &bad))
            }),
        ));
    }

    let spaces = cfg.spaces();
    checks.push(check(
        "rank-identity",
        (|| {
            let per = exec.try_map(spaces.clone(), |f| -> Result<Vec<String>> {
                let spec = make_spec(f)?;
                Ok(all_decompositions(&spec, Exec::Sequential)?
                    .into_iter()
                    .filter(|r| !r.rank_check.holds() || !r.summands.iter().all(|s| s.lemma_consistent(&spec)))
                    .map(|r| format!("{} p={}", f, r.p))
                    .collect())
            })?;
            let bad: Vec<String> = per.into_iter().flatten().collect();
            Ok((bad.is_empty(), failures_detail(spaces.len(), &bad)))
        })(),
    ));

    let classical: Vec<SpaceFamily> = spaces
        .iter()
        .copied()
        .filter(|f| default_method(*f) != Method::WeightDP)
        .filter(|f| make_spec(*f).is_ok_and(|s| s.dim() <= 21))
        .collect();
    checks.push(check(
        "path-agreement",
        (|| {
            let per = exec.try_map(classical.clone(), |f| -> Result<Vec<String>> {
                let spec = make_spec(f)?;
                let mut bad = Vec::new();
                for p in 0..=spec.dim() {
                    let fast = decompose_omega(&spec, p, default_method(f))?;
                    let slow = decompose_omega(&spec, p, Method::WeightDP)?;
                    if fast.highest_weights() != slow.highest_weights() {
                        bad.push(format!("{f} p={p}"));
                    }
                }
                Ok(bad)
            })?;
            let bad: Vec<String> = per.into_iter().flatten().collect();
            Ok((bad.is_empty(), failures_detail(classical.len(), &bad)))
        })(),
    ));

    let quadrics: Vec<SpaceFamily> = spaces.iter().copied().filter(|f| f.is_quadric()).collect();
    if !quadrics.is_empty() {
        checks.push(check(
            "quadric-closed-form",
            (|| {
                let mut bad = Vec::new();
                for f in &quadrics {
                    let spec = make_spec(*f)?;
                    for p in 1..=spec.dim() {
                        let t = min_twist(&spec, p, true)?;
                        if t.closed_form != Some(t.l) {
                            bad.push(format!("{f} p={p}: {} vs {:?}", t.l, t.closed_form));
                        }
                    }
                }
                Ok((bad.is_empty(), failures_detail(quadrics.len(), &bad)))
            })(),
        ));
    }

    if cfg.wants(FamilyLetter::E) {
        for (fam, rank) in [(SpaceFamily::Cayley, 6), (SpaceFamily::Freudenthal, 7)] {
            if cfg.max_rank < rank {
                continue;
            }
            checks.push(check(
                &format!("table-audit-{fam}"),
                table_audit(fam, cfg.max_p, exec).map(|a| {
                    let bad: Vec<String> = a
                        .mismatches()
                        .map(|r| {
                            let missing: Vec<String> =
                                r.cells.iter().filter(|c| !c.found).map(|c| c.transcribed.pretty()).collect();
                            let extra: Vec<String> = r.unmatched_computed.iter().map(|w| w.pretty()).collect();
                            format!(
                                "p={}: transcribed {:?}, computed {:?}, l {} vs {}",
                                r.p, missing, extra, r.l_transcribed, r.l_computed
                            )
                        })
                        .collect();
                    (bad.is_empty(), failures_detail(a.rows.len(), &bad))
                }),
            ));
        }
    }

    checks.push(check(
        "nonvanishing",
        nonvanishing_scan(cfg.max_rank, exec).map(|rows| {
            let rows: Vec<_> = rows.into_iter().filter(|r| cfg.wants(letter(r.space))).collect();
            let bad: Vec<String> = rows
                .iter()
                .filter(|r| r.verdict == Verdict::Violation)
                .map(|r| format!("{} p={} l={}", r.space, r.p, r.l))
                .collect();
            let exceptions = rows.iter().filter(|r| r.verdict == Verdict::PermittedException).count();
            let mut detail = failures_detail(rows.len(), &bad);
            detail.push_str(&format!(", {exceptions} permitted exceptions"));
            (bad.is_empty(), detail)
        }),
    ));

    checks.push(check(
        "projection-families",
        (|| {
            let mut bad = Vec::new();
            let mut total = 0;
            if cfg.wants(FamilyLetter::C) {
                for n in 2..=cfg.max_rank {
                    for a in 1..n {
                        total += 1;
                        let r = symplectic_family(n, a)?;
                        if !r.minimal {
                            bad.push(format!("IG:{n} a={a}"));
                        }
                    }
                }
            }
            if cfg.wants(FamilyLetter::D) {
                for n in 3..=cfg.max_rank {
                    for a in 1..n - 1 {
                        total += 1;
                        let r = orthogonal_family(n, a)?;
                        if !r.minimal {
                            bad.push(format!("OG:{n} a={a}"));
                        }
                    }
                }
            }
            if cfg.wants(FamilyLetter::E) && cfg.max_rank >= 6 {
                total += 1;
                let c = cayley_family()?;
                if (c.p, c.l, c.degree) != (8, 8, -1) {
                    bad.push("E6 octonionic lines".into());
                }
            }
            Ok((bad.is_empty(), failures_detail(total, &bad)))
        })(),
    ));

    let passed = checks.iter().all(|c| c.passed);
    VerifyReport {
        config: cfg.clone(),
        checks,
        passed,
    }
}
