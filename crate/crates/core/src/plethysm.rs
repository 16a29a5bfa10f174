//! Exterior powers of the cotangent bundle as sums of irreducible
//! homogeneous bundles.
//!
//! Three routes: Cauchy's formula for `G(k, n)`, the hook classes for
//! `IG(n, 2n)` and `OG(n, 2n)`, and a general engine that builds the Levi
//! character of `Lambda^p` and peels off irreducibles by highest weight.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::catalog::{GrassmannianSpec, OrbitSizer, SpaceFamily};
use crate::error::{out_of_range, Error, Result};
use crate::exec::Exec;
use crate::partitions::{hooks_q1, hooks_qm1, partitions_in_box, Partition};
use crate::rootsys::Weight;

/// Serializes as a JSON number when it fits in `u128`, as a string otherwise.
pub fn big_as_number<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_u128() {
        Some(x) => s.serialize_u128(x),
        None => s.serialize_str(&v.to_string()),
    }
}

/// Character of `Lambda^p Omega^1`, stored on Levi-dominant representatives.
///
/// Every weight in the Levi orbit of a key carries the key's multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiset {
    grade: usize,
    dominant: BTreeMap<Weight, u64>,
    total: BigUint,
}

impl WeightMultiset {
    pub fn grade(&self) -> usize {
        self.grade
    }

    /// Levi-dominant weights with their multiplicities.
    pub fn dominant(&self) -> &BTreeMap<Weight, u64> {
        &self.dominant
    }

    /// Total multiplicity over all weights, orbits included.
    pub fn total(&self) -> &BigUint {
        &self.total
    }

    pub fn multiplicity(&self, spec: &GrassmannianSpec, w: &Weight) -> u64 {
        self.dominant.get(&spec.levi_dominant(w)).copied().unwrap_or(0)
    }

    /// Unfolds every orbit. Only sensible for small cases.
    pub fn expand(&self, spec: &GrassmannianSpec) -> BTreeMap<Weight, u64> {
        let mut out = BTreeMap::new();
        for (w, &m) in &self.dominant {
            for v in spec.levi_orbit(w) {
                out.insert(v, m);
            }
        }
        out
    }

    fn from_dominant(spec: &GrassmannianSpec, grade: usize, dominant: BTreeMap<Weight, u64>, sizer: &mut OrbitSizer) -> Self {
        let total = dominant
            .iter()
            .map(|(w, &m)| sizer.orbit_size(spec, w) * BigUint::from(m))
            .sum();
        WeightMultiset { grade, dominant, total }
    }

    /// Folds an explicit weight map onto its Levi-dominant keys.
    pub fn fold(spec: &GrassmannianSpec, grade: usize, full: &BTreeMap<Weight, u64>) -> Result<Self> {
        let mut dominant = BTreeMap::new();
        for (w, &m) in full {
            if spec.levi().is_dominant(w) {
                dominant.insert(w.clone(), m);
            } else if full.get(&spec.levi_dominant(w)) != Some(&m) {
                return Err(Error::Consistency(format!("weight map not Levi-invariant at {w}")));
            }
        }
        let out = Self::from_dominant(spec, grade, dominant, &mut OrbitSizer::default());
        if out.total != BigUint::from(full.values().sum::<u64>()) {
            return Err(Error::Consistency("weight map not Levi-invariant".into()));
        }
        Ok(out)
    }
}

fn check_grade(spec: &GrassmannianSpec, p: usize) -> Result<()> {
    if p > spec.dim() {
        return Err(out_of_range("p", p as i64, format!("0..={}", spec.dim())));
    }
    Ok(())
}

/// `Lambda^0 .. Lambda^max_p` of the cotangent character.
///
/// Newton's identities `p e_p = sum_j (-1)^(j-1) psi_j e_(p-j)` evaluated on
/// Levi-dominant representatives: the coefficient of dominant `g` in
/// `chi * psi_j` is `sum_w chi(g - j w)` over the cotangent weights `w`.
pub fn omega_weights_upto(spec: &GrassmannianSpec, max_p: usize) -> Result<Vec<WeightMultiset>> {
    check_grade(spec, max_p)?;
    let rank = spec.rank();
    let cotangent = spec.cotangent_weights();
    let mut sizer = OrbitSizer::default();
    let mut chars: Vec<HashMap<Weight, i128>> = vec![HashMap::from([(Weight::zero(rank), 1)])];
    for p in 1..=max_p {
        let mut acc: HashMap<Weight, i128> = HashMap::new();
        for j in 1..=p {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            let chi = &chars[p - j];
            let shifts: Vec<Weight> = cotangent.iter().map(|w| j as i64 * w).collect();
            let mut candidates: Vec<Weight> = chi
                .keys()
                .flat_map(|d| shifts.iter().map(move |s| d + s))
                .map(|g| spec.levi_dominant(&g))
                .collect();
            candidates.sort();
            candidates.dedup();
            for g in candidates {
                let c: i128 = shifts
                    .iter()
                    .map(|s| chi.get(&spec.levi_dominant(&(&g - s))).copied().unwrap_or(0))
                    .sum();
                if c != 0 {
                    *acc.entry(g).or_insert(0) += sign * c;
                }
            }
        }
        let mut next = HashMap::with_capacity(acc.len());
        for (g, c) in acc {
            if c == 0 {
                continue;
            }
            if c < 0 || c % p as i128 != 0 {
                return Err(Error::Consistency(format!("Newton step {p} gives {c} at {g}")));
            }
            next.insert(g, c / p as i128);
        }
        chars.push(next);
    }
    chars
        .into_iter()
        .enumerate()
        .map(|(p, ch)| {
            let dominant = ch
                .into_iter()
                .map(|(w, c)| Ok((w, u64::try_from(c).map_err(|_| Error::Consistency("multiplicity overflow".into()))?)))
                .collect::<Result<BTreeMap<_, _>>>()?;
            let ws = WeightMultiset::from_dominant(spec, p, dominant, &mut sizer);
            let expected = binomial(BigUint::from(spec.dim()), BigUint::from(p));
            if ws.total != expected {
                return Err(Error::Consistency(format!(
                    "Lambda^{p} has {} weights, expected {expected}",
                    ws.total
                )));
            }
            Ok(ws)
        })
        .collect()
}

/// Character of `Lambda^p Omega^1`: sums of `p` distinct cotangent weights.
pub fn omega_p_weights(spec: &GrassmannianSpec, p: usize) -> Result<WeightMultiset> {
    Ok(omega_weights_upto(spec, p)?.pop().expect("grade 0 is always present"))
}

/// Same character by the literal subset DP over the cotangent weights,
/// unfolded. Exponential in the dimension; for cross-checks.
pub fn omega_p_weights_full(spec: &GrassmannianSpec, p: usize) -> Result<BTreeMap<Weight, u64>> {
    check_grade(spec, p)?;
    let mut by_grade: Vec<BTreeMap<Weight, u64>> = vec![BTreeMap::new(); p + 1];
    by_grade[0].insert(Weight::zero(spec.rank()), 1);
    for w in spec.cotangent_weights() {
        for g in (1..=p).rev() {
            let shifted: Vec<(Weight, u64)> = by_grade[g - 1].iter().map(|(v, &m)| (v + &w, m)).collect();
            for (v, m) in shifted {
                *by_grade[g].entry(v).or_insert(0) += m;
            }
        }
    }
    Ok(by_grade.pop().unwrap_or_default())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibleSummand {
    pub highest_weight: Weight,
    #[serde(serialize_with = "big_as_number")]
    pub levi_dim: BigUint,
    /// Coefficient of the marked fundamental weight, recomputed from the
    /// Levi part by [`twist_via_lemma`].
    pub twist_check: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Partition>,
}

impl IrreducibleSummand {
    fn new(spec: &GrassmannianSpec, highest_weight: Weight, p: usize, partition: Option<Partition>) -> Result<Self> {
        let mut levi_part = highest_weight.clone();
        levi_part[spec.marked_node()] = 0;
        let twist_check = twist_via_lemma(spec, &levi_part, p)?;
        Ok(IrreducibleSummand {
            levi_dim: spec.levi().dim(&highest_weight)?,
            highest_weight,
            twist_check,
            partition,
        })
    }

    /// Coefficient of the marked fundamental weight.
    pub fn twist(&self, spec: &GrassmannianSpec) -> i64 {
        self.highest_weight[spec.marked_node()]
    }

    pub fn lemma_consistent(&self, spec: &GrassmannianSpec) -> bool {
        self.twist(spec) == self.twist_check
    }
}

/// Twist of the summand with Levi part `rho` inside `Lambda^mu_size`:
/// `a = <mu_size * lambda - rho, lambda_k> / <lambda_k, lambda_k>`, with
/// `lambda` the cotangent weight.
pub fn twist_via_lemma(spec: &GrassmannianSpec, rho: &Weight, mu_size: usize) -> Result<i64> {
    let k = spec.marked_node();
    if rho.len() != spec.rank() {
        return Err(Error::DimensionMismatch {
            expected: spec.rank(),
            got: rho.len(),
        });
    }
    if rho[k] != 0 {
        return Err(out_of_range("marked coordinate of the Levi part", rho[k], "0".into()));
    }
    let ambient = spec.ambient();
    let lk = spec.marked_fundamental();
    let num = mu_size as i128 * ambient.scaled_pairing(spec.cotangent_weight(), &lk) - ambient.scaled_pairing(rho, &lk);
    let den = ambient.scaled_pairing(&lk, &lk);
    if num % den != 0 {
        return Err(Error::Consistency(format!("twist {num}/{den} is not integral for {rho}")));
    }
    Ok((num / den) as i64)
}

/// Greedy highest-weight subtraction of Levi characters.
///
/// Picks the Levi-dominant weight of largest height (ties: lexicographically
/// largest), emits it with its multiplicity, subtracts that many copies of
/// its character, and repeats until nothing is left.
pub fn decompose(ws: &WeightMultiset, spec: &GrassmannianSpec) -> Result<Vec<IrreducibleSummand>> {
    let levi = spec.levi();
    let mut rest: BTreeMap<Weight, u64> = ws.dominant.clone();
    let mut out = Vec::new();
    while let Some(top) = rest
        .keys()
        .max_by(|a, b| levi.height(a).cmp(&levi.height(b)).then_with(|| a.cmp(b)))
        .cloned()
    {
        let c = rest[&top];
        for lw in levi.character(spec.ambient(), &top)? {
            let need = c * lw.multiplicity;
            let have = rest.get_mut(&lw.weight).filter(|h| **h >= need).ok_or_else(|| {
                Error::Consistency(format!(
                    "subtracting {c} x V({}) leaves a negative multiplicity at {}",
                    top, lw.weight
                ))
            })?;
            *have -= need;
            if *have == 0 {
                rest.remove(&lw.weight);
            }
        }
        let summand = IrreducibleSummand::new(spec, top, ws.grade, None)?;
        out.extend(std::iter::repeat_n(summand, c as usize));
    }
    Ok(out)
}

/// Summands of `Omega^p` on `G(k, n)`, one per `mu` in the `k x (n-k)` box:
/// `Gamma^mu U (x) Gamma^mu' Q^dual`, with `e`-coordinates
/// `(-mu_k, .., -mu_1; mu'_1, .., mu'_(n-k))`.
pub fn cauchy_decompose(k: usize, n: usize, p: usize) -> Result<Vec<(Partition, IrreducibleSummand)>> {
    let spec = crate::catalog::make_spec(SpaceFamily::Grass { k, n })?;
    check_grade(&spec, p)?;
    partitions_in_box(p, k, n - k)
        .into_iter()
        .map(|mu| {
            let dual = mu.dual();
            let e: Vec<i64> = (0..k)
                .map(|i| -(mu.part(k - 1 - i) as i64))
                .chain((0..n - k).map(|i| dual.part(i) as i64))
                .collect();
            let w = Weight::new(e.windows(2).map(|x| x[0] - x[1]).collect());
            let s = IrreducibleSummand::new(&spec, w, p, Some(mu.clone()))?;
            Ok((mu, s))
        })
        .collect()
}

/// Summands of `Omega^p` on `IG(n, 2n)` (hooks `a_i = b_i + 1`) or
/// `OG(n, 2n)` (hooks `a_i = b_i - 1`), one per `Gamma^mu Q^dual`.
pub fn hooks_decompose(spec: &GrassmannianSpec, p: usize) -> Result<Vec<(Partition, IrreducibleSummand)>> {
    check_grade(spec, p)?;
    let (n, lagrangian) = match spec.family() {
        SpaceFamily::Lagrangian { n } => (n, true),
        SpaceFamily::Spinor { n } => (n, false),
        other => return Err(Error::WrongFamily("hook decomposition", other.name())),
    };
    let shapes = if lagrangian { hooks_q1(p, n) } else { hooks_qm1(p, n) };
    shapes
        .into_iter()
        .map(|mu| {
            let mut w = Weight::zero(n);
            for i in 1..n {
                w[n - i - 1] = mu.part(i - 1) as i64 - mu.part(i) as i64;
            }
            w[n - 1] = if lagrangian {
                -(mu.part(0) as i64)
            } else {
                -(mu.part(0) as i64 + mu.part(1) as i64)
            };
            let s = IrreducibleSummand::new(spec, w, p, Some(mu.clone()))?;
            Ok((mu, s))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    CauchyA,
    HooksC,
    HooksD,
    WeightDP,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankCheck {
    #[serde(serialize_with = "big_as_number")]
    pub expected: BigUint,
    #[serde(serialize_with = "big_as_number")]
    pub got: BigUint,
}

impl RankCheck {
    pub fn holds(&self) -> bool {
        self.expected == self.got
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub space: SpaceFamily,
    pub p: usize,
    pub method: Method,
    /// Sorted by highest weight.
    pub summands: Vec<IrreducibleSummand>,
    pub rank_check: RankCheck,
}

impl DecompositionReport {
    fn assemble(spec: &GrassmannianSpec, p: usize, method: Method, mut summands: Vec<IrreducibleSummand>) -> Self {
        summands.sort_by(|a, b| a.highest_weight.cmp(&b.highest_weight));
        let got = summands.iter().map(|s| &s.levi_dim).sum();
        DecompositionReport {
            space: spec.family(),
            p,
            method,
            rank_check: RankCheck {
                expected: binomial(BigUint::from(spec.dim()), BigUint::from(p)),
                got,
            },
            summands,
        }
    }

    pub fn highest_weights(&self) -> Vec<Weight> {
        self.summands.iter().map(|s| s.highest_weight.clone()).collect()
    }
}

/// The route [`decompose_omega`] takes by default.
pub fn default_method(family: SpaceFamily) -> Method {
    match family {
        SpaceFamily::Grass { .. } => Method::CauchyA,
        SpaceFamily::Lagrangian { .. } => Method::HooksC,
        SpaceFamily::Spinor { .. } => Method::HooksD,
        _ => Method::WeightDP,
    }
}

/// Decomposes `Omega^p` along the requested route.
pub fn decompose_omega(spec: &GrassmannianSpec, p: usize, method: Method) -> Result<DecompositionReport> {
    check_grade(spec, p)?;
    let summands = match (method, spec.family()) {
        (Method::CauchyA, SpaceFamily::Grass { k, n }) => strip(cauchy_decompose(k, n, p)?),
        (Method::HooksC, SpaceFamily::Lagrangian { .. }) | (Method::HooksD, SpaceFamily::Spinor { .. }) => {
            strip(hooks_decompose(spec, p)?)
        }
        (Method::WeightDP, _) => return Ok(weight_dp_reports(spec, &[p], Exec::Sequential)?.remove(0)),
        (m, f) => return Err(Error::WrongFamily(method_name(m), f.name())),
    };
    Ok(DecompositionReport::assemble(spec, p, method, summands))
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::CauchyA => "Cauchy decomposition",
        Method::HooksC => "symmetric hook decomposition",
        Method::HooksD => "skew hook decomposition",
        Method::WeightDP => "weight decomposition",
    }
}

fn strip(pairs: Vec<(Partition, IrreducibleSummand)>) -> Vec<IrreducibleSummand> {
    pairs.into_iter().map(|(_, s)| s).collect()
}

/// Weight-engine reports for the requested grades, sharing one character
/// computation. Grades above half the dimension come from the complementary
/// grade: `Lambda^(N-p) = (Lambda^p)^dual (x) K_X`.
pub fn weight_dp_reports(spec: &GrassmannianSpec, ps: &[usize], exec: Exec) -> Result<Vec<DecompositionReport>> {
    let n = spec.dim();
    let half = n.div_ceil(2);
    for &p in ps {
        check_grade(spec, p)?;
    }
    let direct = |p: usize| if p > half { n - p } else { p };
    let top = ps.iter().map(|&p| direct(p)).max().unwrap_or(0);
    let chars = omega_weights_upto(spec, top)?;
    exec.try_map(ps.to_vec(), |p| {
        let q = direct(p);
        let base = decompose(&chars[q], spec)?;
        let summands = if q == p { base } else { dualize(spec, &base, p)? };
        Ok(DecompositionReport::assemble(spec, p, Method::WeightDP, summands))
    })
}

/// Summands of `Lambda^(N-p)` from those of `Lambda^p`.
pub fn dualize(spec: &GrassmannianSpec, summands: &[IrreducibleSummand], target_p: usize) -> Result<Vec<IrreducibleSummand>> {
    let canonical = -spec.index_c1() * &spec.marked_fundamental();
    summands
        .iter()
        .map(|s| IrreducibleSummand::new(spec, &spec.levi_dual(&s.highest_weight) + &canonical, target_p, None))
        .collect()
}

/// Total multiplicity `C(dim, p)` as a `BigUint`.
pub fn expected_rank(spec: &GrassmannianSpec, p: usize) -> BigUint {
    if p > spec.dim() {
        return BigUint::zero();
    }
    binomial(BigUint::from(spec.dim()), BigUint::from(p))
}
