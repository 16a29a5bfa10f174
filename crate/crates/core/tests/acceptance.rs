//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::time::{Duration, Instant};

use cominuscule::catalog::{catalog_up_to_dim, make_spec, SpaceFamily};
use cominuscule::foliations::{cayley_family, orthogonal_family, symplectic_family};
use cominuscule::partitions::{
    agreement_sweep, min_twist_grass_oracle, min_twist_lagr_oracle, min_twist_spinor_oracle, FormulaFamily, Partition,
};
use cominuscule::plethysm::{decompose_omega, default_method, twist_via_lemma, weight_dp_reports, Method};
use cominuscule::tables::transcribed;
use cominuscule::twists::{all_decompositions, h0_total, min_twist, nonvanishing_scan, table_audit, Verdict};
use cominuscule::{Exec, Result};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        passed,
        detail: detail.into(),
    })
}

/// `"n label"`, followed by the offending cases when there are any.
fn tally(bad: &[String], label: &str) -> String {
    if bad.is_empty() {
        format!("0 {label}")
    } else {
        format!("{} {label}: {}", bad.len(), bad.join("; "))
    }
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn shapes(v: &[Partition]) -> String {
    v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

fn exceptional_audit(space: SpaceFamily) -> Result<Outcome> {
    let audit = table_audit(space, None, Exec::Parallel)?;
    let spec = make_spec(space)?;
    let mut notes = Vec::new();
    for row in audit.mismatches() {
        for cell in row.cells.iter().filter(|c| !c.found) {
            let mut levi = cell.transcribed.clone();
            levi[spec.marked_node()] = 0;
            let lemma = twist_via_lemma(&spec, &levi, row.p)
                .map(|a| a.to_string())
                .unwrap_or_else(|e| e.to_string());
            notes.push(format!(
                "p={} cell {}: transcribed {} (its Levi part forces twist {lemma})",
                row.p,
                cell.i,
                cell.transcribed.pretty()
            ));
        }
        for w in &row.unmatched_computed {
            notes.push(format!("p={}: computed {}", row.p, w.pretty()));
        }
        if row.l_transcribed != row.l_computed {
            notes.push(format!("p={}: l {} transcribed, {} computed", row.p, row.l_transcribed, row.l_computed));
        }
    }
    let matched = audit.rows.iter().filter(|r| r.matches).count();
    let detail = if notes.is_empty() {
        format!("{matched}/{} rows match", audit.rows.len())
    } else {
        format!("{matched}/{} rows match; {}", audit.rows.len(), notes.join("; "))
    };
    outcome(audit.all_match(), detail)
}

fn criterion_1() -> Result<Outcome> {
    exceptional_audit(SpaceFamily::Cayley)
}

fn criterion_2() -> Result<Outcome> {
    let out = exceptional_audit(SpaceFamily::Freudenthal)?;
    let rows = transcribed(SpaceFamily::Freudenthal)?;
    if rows.len() != 26 {
        return outcome(false, format!("expected 26 transcribed rows, found {}", rows.len()));
    }
    Ok(out)
}

fn criterion_3() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut total = 0;
    for (fam, max_n) in [(FormulaFamily::A, 16), (FormulaFamily::C, 10), (FormulaFamily::D, 10)] {
        for row in agreement_sweep(fam, max_n, Exec::Parallel)? {
            total += 1;
            if !row.agrees() {
                bad.push(format!("{fam:?} k={:?} n={} p={}: {} vs {}", row.k, row.n, row.p, row.formula_l, row.oracle_l));
            }
        }
    }
    outcome(bad.is_empty(), format!("{total} cases, {}", tally(&bad, "disagreements")))
}

fn criterion_4() -> Result<Outcome> {
    let expected_7 = vec![part(&[4, 3]), part(&[3, 3, 1]), part(&[3, 2, 2])];
    let expected_10 = vec![part(&[3, 3, 3, 1]), part(&[2, 2, 2, 2, 2])];
    let w7 = min_twist_grass_oracle(3, 9, 7)?;
    let w10 = min_twist_grass_oracle(3, 10, 10)?;
    let same = |got: &[Partition], want: &[Partition]| {
        let mut a = got.to_vec();
        let mut b = want.to_vec();
        a.sort();
        b.sort();
        a == b
    };
    let ok7 = w7.l == 6 && same(&w7.partitions, &expected_7);
    let ok10 = w10.l == 7 && same(&w10.partitions, &expected_10);
    let transposed_10: Vec<Partition> = w10.partitions.iter().map(Partition::dual).collect();
    outcome(
        ok7 && ok10,
        format!(
            "k=3 p=7: l={} {{{}}} {}; k=3 p=10: l={} {{{}}} {} (want {{{}}}; all minimizers with at most 3 columns: {{{}}})",
            w7.l,
            shapes(&w7.partitions),
            if ok7 { "ok" } else { "differs" },
            w10.l,
            shapes(&w10.partitions),
            if ok10 { "ok" } else { "differs" },
            shapes(&expected_10),
            shapes(&transposed_10),
        ),
    )
}

fn criterion_5() -> Result<Outcome> {
    let spaces = catalog_up_to_dim(36);
    let per = Exec::Parallel.try_map(spaces.clone(), |fam| -> Result<Vec<String>> {
        let spec = make_spec(fam)?;
        let mut bad = Vec::new();
        for r in all_decompositions(&spec, Exec::Sequential)? {
            if !r.rank_check.holds() {
                bad.push(format!("{fam} p={}: {} vs {}", r.p, r.rank_check.got, r.rank_check.expected));
            }
        }
        Ok(bad)
    })?;
    let bad: Vec<String> = per.into_iter().flatten().collect();
    outcome(bad.is_empty(), format!("{} spaces, all p; {}", spaces.len(), tally(&bad, "failures")))
}

fn criterion_6() -> Result<Outcome> {
    let spaces: Vec<SpaceFamily> = catalog_up_to_dim(21)
        .into_iter()
        .filter(|f| default_method(*f) != Method::WeightDP)
        .collect();
    let per = Exec::Parallel.try_map(spaces.clone(), |fam| -> Result<(usize, Vec<String>)> {
        let spec = make_spec(fam)?;
        let ps: Vec<usize> = (0..=spec.dim()).collect();
        let slow = weight_dp_reports(&spec, &ps, Exec::Sequential)?;
        let mut bad = Vec::new();
        for (p, s) in ps.iter().zip(&slow) {
            let fast = decompose_omega(&spec, *p, default_method(fam))?;
            if fast.highest_weights() != s.highest_weights() {
                bad.push(format!("{fam} p={p}"));
            }
        }
        Ok((ps.len(), bad))
    })?;
    let cases: usize = per.iter().map(|(n, _)| n).sum();
    let bad: Vec<String> = per.into_iter().flat_map(|(_, b)| b).collect();
    outcome(
        bad.is_empty(),
        format!("{} spaces, {cases} grades; {}", spaces.len(), tally(&bad, "disagreements")),
    )
}

fn criterion_7() -> Result<Outcome> {
    let rows = nonvanishing_scan(6, Exec::Parallel)?;
    let violations: Vec<String> = rows
        .iter()
        .filter(|r| r.verdict == Verdict::Violation)
        .map(|r| format!("{} p={} l={}", r.space, r.p, r.l))
        .collect();
    let exceptions: Vec<_> = rows.iter().filter(|r| r.verdict == Verdict::PermittedException).collect();
    let ig_ok = (2..=6).all(|n| {
        exceptions
            .iter()
            .any(|r| r.space == SpaceFamily::Lagrangian { n } && r.p == 3 && r.l == 3)
    });
    let only_lagrangian_p3 = exceptions.iter().all(|r| {
        r.p == 3
            && r.l == 3
            && matches!(r.space, SpaceFamily::Lagrangian { .. } | SpaceFamily::QuadricOdd { r: 2 })
    });
    outcome(
        violations.is_empty() && ig_ok && only_lagrangian_p3,
        format!(
            "{} rows, {}, exceptions: {}",
            rows.len(),
            tally(&violations, "violations"),
            exceptions.iter().map(|r| r.space.name()).collect::<Vec<_>>().join(" ")
        ),
    )
}

fn criterion_8() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut cases = 0;
    for m in 3..=12 {
        let spec = make_spec(SpaceFamily::quadric(m)?)?;
        let ps: Vec<usize> = (1..m).collect();
        for report in weight_dp_reports(&spec, &ps, Exec::Parallel)? {
            cases += 1;
            let p = report.p as i64;
            let at_p = h0_total(&spec, &report, p)?;
            let l = min_twist(&spec, report.p, true)?.l;
            if at_p != 0u32.into() || l != p + 1 {
                bad.push(format!("Q:{m} p={p}: h0(p)={at_p}, l={l}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{cases} cases; {}", tally(&bad, "failures")))
}

fn criterion_9() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut cases = 0;
    for n in 2usize..=10 {
        for a in 1..=n.saturating_sub(2) {
            cases += 1;
            let s = symplectic_family(n, a)?;
            let oracle = min_twist_lagr_oracle(n, s.p)?.l;
            if s.l != oracle || s.degree != s.l - s.p as i64 - 1 {
                bad.push(format!("IG:{n} a={a}: {} vs {oracle}", s.l));
            }
            if n >= 3 {
                cases += 1;
                let o = orthogonal_family(n, a)?;
                let oracle = min_twist_spinor_oracle(n, o.p)?.l;
                if o.l != oracle || o.degree != o.l - o.p as i64 - 1 {
                    bad.push(format!("OG:{n} a={a}: {} vs {oracle}", o.l));
                }
            }
        }
    }
    let c = cayley_family()?;
    let row8 = transcribed(SpaceFamily::Cayley)?.into_iter().find(|r| r.p == 8).expect("row 8");
    let witness = cominuscule::wt![-8, 0, 0, 0, 0, 4];
    if (c.p, c.l, c.degree) != (8, 8, -1) || row8.l != c.l || !row8.summands.contains(&witness) {
        bad.push(format!("E6 octonionic lines: p={} l={} degree={}", c.p, c.l, c.degree));
    }
    outcome(bad.is_empty(), format!("{cases} projection families + E6 lines; {}", tally(&bad, "failures")))
}

fn criterion_10() -> Result<Outcome> {
    let spaces = catalog_up_to_dim(27);
    let per = Exec::Parallel.try_map(spaces.clone(), |fam| -> Result<(usize, Vec<String>)> {
        let spec = make_spec(fam)?;
        let ps: Vec<usize> = (0..=spec.dim()).collect();
        let mut reports = weight_dp_reports(&spec, &ps, Exec::Sequential)?;
        if default_method(fam) != Method::WeightDP {
            for &p in &ps {
                reports.push(decompose_omega(&spec, p, default_method(fam))?);
            }
        }
        let mut count = 0;
        let mut bad = Vec::new();
        for r in &reports {
            for s in &r.summands {
                count += 1;
                let mut levi = s.highest_weight.clone();
                levi[spec.marked_node()] = 0;
                match twist_via_lemma(&spec, &levi, r.p) {
                    Ok(a) if a == s.twist(&spec) => {}
                    other => bad.push(format!("{fam} p={} {}: {other:?}", r.p, s.highest_weight.pretty())),
                }
            }
        }
        Ok((count, bad))
    })?;
    let count: usize = per.iter().map(|(c, _)| c).sum();
    let bad: Vec<String> = per.into_iter().flat_map(|(_, b)| b).collect();
    outcome(
        bad.is_empty(),
        format!("{} spaces, {count} summands; {}", spaces.len(), tally(&bad, "failures")),
    )
}

fn main() {
    type Criterion = (&'static str, fn() -> Result<Outcome>, Duration);
    let criteria: [Criterion; 10] = [
        ("E6 decomposition table reproduced", criterion_1, Duration::from_secs(60)),
        ("E7 decomposition table reproduced", criterion_2, Duration::from_secs(600)),
        ("closed forms equal partition oracles", criterion_3, Duration::from_secs(60)),
        ("named minimal partition sets", criterion_4, Duration::from_secs(60)),
        ("rank identity, dim <= 36", criterion_5, Duration::from_secs(120)),
        ("fast paths equal the weight engine, dim <= 21", criterion_6, Duration::from_secs(600)),
        ("sections of Omega^p(2), Omega^p(3) up to rank 6", criterion_7, Duration::from_secs(600)),
        ("quadric closed form, Q^3..Q^12", criterion_8, Duration::from_secs(600)),
        ("projection and octonionic-line families", criterion_9, Duration::from_secs(600)),
        ("twist lemma on every summand, dim <= 27", criterion_10, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (passed, detail) = match result {
            Ok(o) => (o.passed && elapsed <= *limit, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let timing = if elapsed <= *limit {
            format!("{:.2}s", elapsed.as_secs_f64())
        } else {
            format!("{:.2}s exceeds {}s", elapsed.as_secs_f64(), limit.as_secs())
        };
        println!(
            "{} criterion {:>2}: {name} [{timing}] {detail}",
            if passed { "PASS" } else { "FAIL" },
            i + 1
        );
        if !passed {
            failed += 1;
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
