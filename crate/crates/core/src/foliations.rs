//! Numerical invariants of the known families of foliations of minimal
//! degree: flag families on `G(k, n)`, projections on `IG(n, 2n)` and
//! `OG(n, 2n)`, and the octonionic lines of the Cayley plane.
//!
//! `N` is the normal sheaf, so `c1(N) = l` and `c1(TF) = c1(TX) - l`.

use serde::Serialize;

use crate::catalog::{catalog_up_to_rank, make_spec, SpaceFamily};
use crate::error::{out_of_range, Error, Result};
use crate::exec::Exec;
use crate::partitions::{min_twist_grass, min_twist_lagr, min_twist_spinor};
use crate::rootsys::Weight;
use crate::twists::min_twist;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FamilyKind {
    /// Leaves through `Flag(h-d, h+e, V)`, `h = n - k`.
    RectFlag { d: usize, e: usize, h: usize },
    /// The `e = k` case: parametrized by `G(m, V)`, `m = n - k - d`.
    AraujoDruel { m: usize },
    SymplecticProj { a: usize },
    OrthogonalProj { a: usize },
    CayleyLines,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoliationFamilyReport {
    pub space: SpaceFamily,
    /// Codimension.
    pub p: usize,
    pub l: i64,
    /// `l - p - 1`.
    pub degree: i64,
    pub kind: FamilyKind,
    pub parameter_space: String,
    pub tf_rank: i64,
    pub tf_c1: i64,
    /// `l` equals the least twist with `H^0(Omega^p(l)) != 0`.
    pub minimal: bool,
    /// Highest weight of `H^0(Omega^p(l))` where it was computed, and of its dual.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sections: Option<(Weight, Weight)>,
}

fn report(space: SpaceFamily, p: usize, l: i64, kind: FamilyKind, parameter_space: String, minimal: bool) -> Result<FoliationFamilyReport> {
    let spec = make_spec(space)?;
    Ok(FoliationFamilyReport {
        space,
        p,
        l,
        degree: l - p as i64 - 1,
        kind,
        parameter_space,
        tf_rank: spec.dim() as i64 - p as i64,
        tf_c1: spec.index_c1() - l,
        minimal,
        sections: None,
    })
}

fn isqrt_exact(x: i64) -> Option<i64> {
    if x < 0 {
        return None;
    }
    let r = (x as f64).sqrt() as i64;
    (r.saturating_sub(1)..=r + 1).find(|s| s * s == x)
}

fn rect_report(k: usize, n: usize, d: usize, e: usize, minimal: bool) -> Result<FoliationFamilyReport> {
    let h = n - k;
    let (kind, parameter_space) = if e == k {
        let m = h - d;
        (FamilyKind::AraujoDruel { m }, format!("G({m}, {n})"))
    } else {
        (FamilyKind::RectFlag { d, e, h }, format!("Flag({}, {}; {n})", h - d, h + e))
    };
    let mut r = report(SpaceFamily::Grass { k, n }, d * e, (d + e) as i64, kind, parameter_space, minimal)?;
    r.tf_rank = (k * h) as i64 - (d * e) as i64;
    r.tf_c1 = n as i64 - (d + e) as i64;
    Ok(r)
}

/// Flag families of codimension `p = d e` on `G(k, n)`, `2k <= n`.
///
/// When `l(p)^2 - 4p` is a square with roots `d <= n-k`, `e <= k`, the
/// families are minimal (both orientations when both fit). Otherwise the
/// factorizations `p = d e` of least `d + e` are returned as non-minimal;
/// empty when `p` has no factorization in the box.
pub fn rect_family(k: usize, n: usize, p: usize) -> Result<Vec<FoliationFamilyReport>> {
    if k == 0 || 2 * k > n {
        return Err(out_of_range("k", k as i64, format!("1..={}", n / 2)));
    }
    let l = min_twist_grass(k, n, p)?;
    let h = n - k;
    let fits = |d: usize, e: usize| d <= h && e <= k;
    let mut out = Vec::new();
    if let Some(s) = isqrt_exact(l * l - 4 * p as i64) {
        let (d, e) = (((l + s) / 2) as usize, ((l - s) / 2) as usize);
        for (d, e) in [(d, e), (e, d)] {
            if fits(d, e) && !out.iter().any(|r: &FoliationFamilyReport| r.kind_de() == Some((d, e))) {
                out.push(rect_report(k, n, d, e, true)?);
            }
        }
    }
    if out.is_empty() {
        let pairs: Vec<(usize, usize)> = (1..=h).filter(|d| p.is_multiple_of(*d)).map(|d| (d, p / d)).filter(|&(d, e)| fits(d, e)).collect();
        if let Some(best) = pairs.iter().map(|(d, e)| d + e).min() {
            for (d, e) in pairs.into_iter().filter(|(d, e)| d + e == best) {
                out.push(rect_report(k, n, d, e, best as i64 == l)?);
            }
        }
    }
    Ok(out)
}

impl FoliationFamilyReport {
    /// `(d, e)` for the flag families.
    pub fn kind_de(&self) -> Option<(usize, usize)> {
        match (&self.kind, self.space) {
            (FamilyKind::RectFlag { d, e, .. }, _) => Some((*d, *e)),
            (FamilyKind::AraujoDruel { m }, SpaceFamily::Grass { k, n }) => Some((n - k - m, k)),
            _ => None,
        }
    }
}

/// Codimension `a(a+1)/2` foliations on `IG(n, 2n)` from projections,
/// parametrized by `IG(n-a, 2n)`.
pub fn symplectic_family(n: usize, a: usize) -> Result<FoliationFamilyReport> {
    if n < 2 || a == 0 || a >= n {
        return Err(out_of_range("a", a as i64, format!("1..={}", n.saturating_sub(1))));
    }
    let p = a * (a + 1) / 2;
    let l = a as i64 + 1;
    report(
        SpaceFamily::Lagrangian { n },
        p,
        l,
        FamilyKind::SymplecticProj { a },
        format!("IG({}, {})", n - a, 2 * n),
        min_twist_lagr(p)? == l,
    )
}

/// Codimension `a(a+1)/2` foliations on `OG(n, 2n)`, parametrized by
/// `OG(n-a-1, 2n)`.
pub fn orthogonal_family(n: usize, a: usize) -> Result<FoliationFamilyReport> {
    if n < 3 || a == 0 || a + 2 > n {
        return Err(out_of_range("a", a as i64, format!("1..={}", n.saturating_sub(2))));
    }
    let p = a * (a + 1) / 2;
    let l = 2 * a as i64;
    report(
        SpaceFamily::Spinor { n },
        p,
        l,
        FamilyKind::OrthogonalProj { a },
        format!("OG({}, {})", n - a - 1, 2 * n),
        min_twist_spinor(p)? == l,
    )
}

/// Codimension 8 foliations of the Cayley plane by octonionic lines.
pub fn cayley_family() -> Result<FoliationFamilyReport> {
    let spec = make_spec(SpaceFamily::Cayley)?;
    let (p, l) = (8, 8);
    let t = min_twist(&spec, p, false)?;
    if t.l != l || t.witnesses.len() != 1 {
        return Err(Error::Consistency(format!("Cayley plane: l(8) = {} with {} witnesses", t.l, t.witnesses.len())));
    }
    let top = &t.witnesses[0].highest_weight + &(l * &spec.marked_fundamental());
    let dual = spec.ambient().dual_weight(&top);
    let mut r = report(SpaceFamily::Cayley, p, l, FamilyKind::CayleyLines, "OP² (dual plane)".into(), true)?;
    r.sections = Some((top, dual));
    Ok(r)
}

/// Every minimal family on the catalog up to `max_rank`, sorted by space and codimension.
pub fn scan(max_rank: usize, exec: Exec) -> Result<Vec<FoliationFamilyReport>> {
    let per_space = exec.try_map(catalog_up_to_rank(max_rank), |fam| -> Result<Vec<FoliationFamilyReport>> {
        Ok(match fam {
            SpaceFamily::Grass { k, n } => {
                let mut v = Vec::new();
                for p in 1..=k * (n - k) {
                    v.extend(rect_family(k, n, p)?.into_iter().filter(|r| r.minimal));
                }
                v
            }
            SpaceFamily::Lagrangian { n } => (1..n).map(|a| symplectic_family(n, a)).collect::<Result<_>>()?,
            SpaceFamily::Spinor { n } => (1..n - 1).map(|a| orthogonal_family(n, a)).collect::<Result<_>>()?,
            SpaceFamily::Cayley => vec![cayley_family()?],
            _ => Vec::new(),
        })
    })?;
    let mut out: Vec<FoliationFamilyReport> = per_space.into_iter().flatten().filter(|r| r.minimal).collect();
    out.sort_by_key(|a| (a.space, a.p));
    Ok(out)
}
