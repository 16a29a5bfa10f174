//! Global sections of twisted exterior powers via Bott–Borel–Weil in degree
//! zero: `H^0(E_beta(l))` is the irreducible `G`-module of highest weight
//! `beta + l lambda_k` when that weight is dominant, and zero otherwise.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::catalog::{catalog_up_to_rank, make_spec, GrassmannianSpec, SpaceFamily};
use crate::error::{out_of_range, Error, Result};
use crate::exec::Exec;
use crate::partitions::{min_twist_grass, min_twist_lagr, min_twist_spinor};
use crate::plethysm::{big_as_number, decompose_omega, default_method, weight_dp_reports, DecompositionReport, IrreducibleSummand, Method};
use crate::rootsys::Weight;
use crate::tables::transcribed;

/// `h^0(E_beta(l))`.
pub fn h0_dim(spec: &GrassmannianSpec, summand: &Weight, l: i64) -> Result<BigUint> {
    let twisted = summand + &(l * &spec.marked_fundamental());
    if !twisted.is_dominant() {
        return Ok(BigUint::zero());
    }
    spec.ambient().weyl_dim(&twisted)
}

/// `h^0(Omega^p(l))`, summed over a decomposition.
pub fn h0_total(spec: &GrassmannianSpec, report: &DecompositionReport, l: i64) -> Result<BigUint> {
    report
        .summands
        .iter()
        .map(|s| h0_dim(spec, &s.highest_weight, l))
        .sum()
}

/// Where the reported `l` came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TwistSource {
    /// Dominance of the computed summands.
    Bbw,
    /// The quadric closed form, checked against the summands.
    ClosedForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinTwistReport {
    pub space: SpaceFamily,
    pub p: usize,
    pub l: i64,
    /// `l - p - 1`.
    pub d: i64,
    pub source: TwistSource,
    pub method: Method,
    /// Closed form for the family, when one exists.
    pub closed_form: Option<i64>,
    /// Summands that acquire sections first, each with multiplicity.
    pub witnesses: Vec<IrreducibleSummand>,
    #[serde(serialize_with = "big_as_number")]
    pub h0_dim: BigUint,
}

/// Family closed form for `l(p)`.
pub fn closed_form(spec: &GrassmannianSpec, p: usize) -> Result<Option<i64>> {
    Ok(match spec.family() {
        SpaceFamily::Grass { k, n } => Some(min_twist_grass(k, n, p)?),
        SpaceFamily::Lagrangian { .. } => Some(min_twist_lagr(p)?),
        SpaceFamily::Spinor { .. } => Some(min_twist_spinor(p)?),
        SpaceFamily::QuadricOdd { .. } | SpaceFamily::QuadricEven { .. } => Some(quadric_min_twist(spec.dim(), p)?),
        SpaceFamily::Cayley | SpaceFamily::Freudenthal => None,
    })
}

/// `l(p)` on `Q^m`: `p + 1` below the top degree, `m` for `K_X`.
pub fn quadric_min_twist(m: usize, p: usize) -> Result<i64> {
    if p == 0 || p > m {
        return Err(out_of_range("p", p as i64, format!("1..={m}")));
    }
    Ok(if p == m { m as i64 } else { p as i64 + 1 })
}

/// Minimal twist read off a decomposition.
///
/// `E_beta(l)` has sections iff `beta_k + l >= 0`, so `l(p)` is the least
/// `l` with some summand dominant, and every `l' >= l` keeps it dominant.
pub fn min_twist_from(spec: &GrassmannianSpec, report: &DecompositionReport, force_plethysm: bool) -> Result<MinTwistReport> {
    let p = report.p;
    if p == 0 {
        return Err(out_of_range("p", 0i64, format!("1..={}", spec.dim())));
    }
    let k = spec.marked_node();
    let l = report
        .summands
        .iter()
        .map(|s| -s.highest_weight[k])
        .min()
        .ok_or_else(|| Error::Consistency("empty decomposition".into()))?;
    let witnesses: Vec<IrreducibleSummand> = report
        .summands
        .iter()
        .filter(|s| -s.highest_weight[k] == l)
        .cloned()
        .collect();
    let h0: BigUint = witnesses
        .iter()
        .map(|s| h0_dim(spec, &s.highest_weight, l))
        .sum::<Result<BigUint>>()?;
    if h0.is_zero() || !h0_total(spec, report, l - 1)?.is_zero() {
        return Err(Error::Consistency(format!("{} p={p}: sections do not start at l={l}", spec.name())));
    }
    let closed = closed_form(spec, p)?;
    let source = if spec.family().is_quadric() && !force_plethysm {
        if closed != Some(l) {
            return Err(Error::Consistency(format!(
                "{} p={p}: closed form {closed:?} but summands give {l}",
                spec.name()
            )));
        }
        TwistSource::ClosedForm
    } else {
        TwistSource::Bbw
    };
    Ok(MinTwistReport {
        space: spec.family(),
        p,
        l,
        d: l - p as i64 - 1,
        source,
        method: report.method,
        closed_form: closed,
        witnesses,
        h0_dim: h0,
    })
}

/// `l(p)` with witnesses and `h^0(Omega^p(l(p)))`.
pub fn min_twist(spec: &GrassmannianSpec, p: usize, force_plethysm: bool) -> Result<MinTwistReport> {
    if p == 0 || p > spec.dim() {
        return Err(out_of_range("p", p as i64, format!("1..={}", spec.dim())));
    }
    let method = if force_plethysm { Method::WeightDP } else { default_method(spec.family()) };
    min_twist_from(spec, &decompose_omega(spec, p, method)?, force_plethysm)
}

/// Decompositions for every `p` in `1..=dim`, by the default route.
pub fn all_decompositions(spec: &GrassmannianSpec, exec: Exec) -> Result<Vec<DecompositionReport>> {
    let ps: Vec<usize> = (1..=spec.dim()).collect();
    match default_method(spec.family()) {
        Method::WeightDP => weight_dp_reports(spec, &ps, exec),
        m => exec.try_map(ps, |p| decompose_omega(spec, p, m)),
    }
}

/// `min_twist` for every `p` in `1..=dim`.
pub fn min_twists(spec: &GrassmannianSpec, force_plethysm: bool, exec: Exec) -> Result<Vec<MinTwistReport>> {
    let reports = if force_plethysm {
        weight_dp_reports(spec, &(1..=spec.dim()).collect::<Vec<_>>(), exec)?
    } else {
        all_decompositions(spec, exec)?
    };
    reports.iter().map(|r| min_twist_from(spec, r, force_plethysm)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Consistent with the statement.
    Confirmation,
    /// `p = 3`, `l = 3` on a Lagrangian Grassmannian (including `Q^3 = IG(2, 4)`).
    PermittedException,
    Violation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonvanishingRow {
    pub space: SpaceFamily,
    pub p: usize,
    pub l: i64,
    /// `h^0(Omega^p(2)) != 0`.
    pub sections_at_2: bool,
    /// `h^0(Omega^p(3)) != 0`.
    pub sections_at_3: bool,
    pub verdict: Verdict,
}

fn is_lagrangian(space: SpaceFamily) -> bool {
    matches!(space, SpaceFamily::Lagrangian { .. } | SpaceFamily::QuadricOdd { r: 2 })
}

/// Checks, for every catalog space up to `max_rank` and every `p`:
/// sections of `Omega^p(2)` force `p = 1`, and sections of `Omega^p(3)`
/// force `p <= 2` unless the space is Lagrangian and `p = 3`.
pub fn nonvanishing_scan(max_rank: usize, exec: Exec) -> Result<Vec<NonvanishingRow>> {
    let rows = exec.try_map(catalog_up_to_rank(max_rank), |fam| -> Result<Vec<NonvanishingRow>> {
        let spec = make_spec(fam)?;
        let twists = min_twists(&spec, false, Exec::Sequential)?;
        Ok(twists
            .into_iter()
            .map(|t| {
                let (at2, at3) = (t.l <= 2, t.l <= 3);
                let verdict = if (at2 && t.p != 1) || (at3 && t.p > 2) {
                    if !at2 && t.p == 3 && is_lagrangian(fam) {
                        Verdict::PermittedException
                    } else {
                        Verdict::Violation
                    }
                } else {
                    Verdict::Confirmation
                };
                NonvanishingRow {
                    space: fam,
                    p: t.p,
                    l: t.l,
                    sections_at_2: at2,
                    sections_at_3: at3,
                    verdict,
                }
            })
            .collect())
    })?;
    Ok(rows.into_iter().flatten().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellAudit {
    /// 1-based column of the transcribed row.
    pub i: usize,
    pub transcribed: Weight,
    pub found: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowAudit {
    pub p: usize,
    pub cells: Vec<CellAudit>,
    /// Computed summands absent from the transcribed row.
    pub unmatched_computed: Vec<Weight>,
    pub computed: Vec<Weight>,
    pub l_transcribed: i64,
    pub l_computed: i64,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableAudit {
    pub space: SpaceFamily,
    pub rows: Vec<RowAudit>,
}

impl TableAudit {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &RowAudit> {
        self.rows.iter().filter(|r| !r.matches)
    }
}

/// Recomputes the tabulated rows for `E6` or `E7` with `p <= max_p` and
/// diffs them cell by cell. The computation is taken as ground truth.
pub fn table_audit(space: SpaceFamily, max_p: Option<usize>, exec: Exec) -> Result<TableAudit> {
    let rows = transcribed(space)?;
    let spec = make_spec(space)?;
    let rows: Vec<_> = rows.into_iter().filter(|r| max_p.is_none_or(|m| r.p <= m)).collect();
    let ps: Vec<usize> = rows.iter().map(|r| r.p).collect();
    let reports = weight_dp_reports(&spec, &ps, exec)?;
    let audited = rows
        .into_iter()
        .zip(&reports)
        .map(|(row, report)| {
            let mut computed = report.highest_weights();
            computed.dedup();
            let twist = min_twist_from(&spec, report, true)?;
            let cells: Vec<CellAudit> = row
                .summands
                .iter()
                .enumerate()
                .map(|(i, w)| CellAudit {
                    i: i + 1,
                    transcribed: w.clone(),
                    found: computed.contains(w),
                })
                .collect();
            let unmatched_computed: Vec<Weight> =
                computed.iter().filter(|w| !row.summands.contains(w)).cloned().collect();
            let multiplicity_free = report.summands.len() == computed.len();
            let matches = cells.iter().all(|c| c.found)
                && unmatched_computed.is_empty()
                && multiplicity_free
                && twist.l == row.l;
            Ok(RowAudit {
                p: row.p,
                cells,
                unmatched_computed,
                computed,
                l_transcribed: row.l,
                l_computed: twist.l,
                matches,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TableAudit { space, rows: audited })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wt;

    #[test]
    fn h0_examples() {
        let spec = make_spec(SpaceFamily::Cayley).unwrap();
        let beta = wt![-2, 0, 1, 0, 0, 0];
        assert_eq!(h0_dim(&spec, &beta, 1).unwrap(), BigUint::zero());
        let lambda3 = wt![0, 0, 1, 0, 0, 0];
        assert_eq!(h0_dim(&spec, &beta, 2).unwrap(), spec.ambient().weyl_dim(&lambda3).unwrap());
    }

    #[test]
    fn quadrics_closed_form_vs_sections() {
        for m in 3..=8 {
            let spec = make_spec(SpaceFamily::quadric(m).unwrap()).unwrap();
            for p in 1..=m {
                let t = min_twist(&spec, p, false).unwrap();
                assert_eq!(t.l, quadric_min_twist(m, p).unwrap());
                assert_eq!(t.source, TwistSource::ClosedForm);
                let forced = min_twist(&spec, p, true).unwrap();
                assert_eq!(forced.l, t.l);
            }
        }
    }

    #[test]
    fn top_form() {
        for fam in catalog_up_to_rank(5) {
            let spec = make_spec(fam).unwrap();
            let t = min_twist(&spec, spec.dim(), false).unwrap();
            assert_eq!(t.l, spec.index_c1(), "{fam}");
            assert_eq!(t.h0_dim, BigUint::from(1u32), "{fam}");
        }
    }

    #[test]
    fn lagrangian_rectangle_sections() {
        let spec = make_spec(SpaceFamily::Lagrangian { n: 3 }).unwrap();
        let beta = wt![3, 0, -3];
        assert_eq!(h0_dim(&spec, &beta, 3).unwrap(), spec.ambient().weyl_dim(&wt![3, 0, 0]).unwrap());
        assert_eq!(min_twist(&spec, 3, false).unwrap().l, 3);
    }

    #[test]
    fn cayley_grade_eight() {
        let spec = make_spec(SpaceFamily::Cayley).unwrap();
        let t = min_twist(&spec, 8, false).unwrap();
        assert_eq!((t.l, t.d), (8, -1));
        assert_eq!(t.witnesses.len(), 1);
        assert_eq!(t.witnesses[0].highest_weight, wt![-8, 0, 0, 0, 0, 4]);
        assert_eq!(t.h0_dim, spec.ambient().weyl_dim(&wt![0, 0, 0, 0, 0, 4]).unwrap());
    }

    #[test]
    fn small_scan() {
        let rows = nonvanishing_scan(3, Exec::Parallel).unwrap();
        assert!(rows.iter().all(|r| r.verdict != Verdict::Violation));
        let exceptions: Vec<_> = rows.iter().filter(|r| r.verdict == Verdict::PermittedException).collect();
        assert!(exceptions.iter().all(|r| r.p == 3 && r.l == 3));
        assert!(exceptions.iter().any(|r| r.space == SpaceFamily::Lagrangian { n: 3 }));
        assert!(rows
            .iter()
            .any(|r| r.space == SpaceFamily::Grass { k: 2, n: 4 } && r.p == 2 && r.l == 3));
    }
}
