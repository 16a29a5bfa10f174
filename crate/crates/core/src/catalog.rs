//! The cominuscule Grassmannians `G/P` and their derived data.
//!
//! Everything in a [`GrassmannianSpec`] is recomputed from the ambient root
//! system; the textbook values only appear in [`check_table1`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::rootsys::{Family, LieType, Root, RootSystem, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceFamily {
    /// `G(k, n)`, type `A_{n-1}`, node `k`.
    Grass { k: usize, n: usize },
    /// `Q^{2r-1}`, type `B_r`, node 1.
    QuadricOdd { r: usize },
    /// `Q^{2r-2}`, type `D_r`, node 1.
    QuadricEven { r: usize },
    /// `IG(n, 2n)`, type `C_n`, node `n`.
    Lagrangian { n: usize },
    /// `OG(n, 2n)`, type `D_n`, node `n`.
    Spinor { n: usize },
    /// `E6/P1`.
    Cayley,
    /// `E7/P7`.
    Freudenthal,
}

impl SpaceFamily {
    /// The quadric of dimension `m >= 3`.
    pub fn quadric(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(out_of_range("m", m as i64, "m >= 3".into()));
        }
        Ok(if m % 2 == 1 {
            SpaceFamily::QuadricOdd { r: m.div_ceil(2) }
        } else {
            SpaceFamily::QuadricEven { r: (m + 2) / 2 }
        })
    }

    pub fn lie_type(&self) -> Result<LieType> {
        match *self {
            SpaceFamily::Grass { k, n } => {
                if n < 2 || k == 0 || k >= n {
                    return Err(out_of_range("k", k as i64, format!("1..={}", n.saturating_sub(1))));
                }
                LieType::new(Family::A, n - 1)
            }
            SpaceFamily::QuadricOdd { r } => LieType::new(Family::B, r),
            SpaceFamily::QuadricEven { r } => LieType::new(Family::D, r),
            SpaceFamily::Lagrangian { n } => LieType::new(Family::C, n),
            SpaceFamily::Spinor { n } => LieType::new(Family::D, n),
            SpaceFamily::Cayley => Ok(LieType::e6()),
            SpaceFamily::Freudenthal => Ok(LieType::e7()),
        }
    }

    /// Marked node, 0-based.
    pub fn marked_node(&self) -> usize {
        match *self {
            SpaceFamily::Grass { k, .. } => k - 1,
            SpaceFamily::QuadricOdd { .. } | SpaceFamily::QuadricEven { .. } | SpaceFamily::Cayley => 0,
            SpaceFamily::Lagrangian { n } | SpaceFamily::Spinor { n } => n - 1,
            SpaceFamily::Freudenthal => 6,
        }
    }

    pub fn is_quadric(&self) -> bool {
        matches!(self, SpaceFamily::QuadricOdd { .. } | SpaceFamily::QuadricEven { .. })
    }

    /// Canonical textual name: `G:k:n`, `Q:m`, `IG:n`, `OG:n`, `E6`, `E7`.
    pub fn name(&self) -> String {
        match *self {
            SpaceFamily::Grass { k, n } => format!("G:{k}:{n}"),
            SpaceFamily::QuadricOdd { r } => format!("Q:{}", 2 * r - 1),
            SpaceFamily::QuadricEven { r } => format!("Q:{}", 2 * r - 2),
            SpaceFamily::Lagrangian { n } => format!("IG:{n}"),
            SpaceFamily::Spinor { n } => format!("OG:{n}"),
            SpaceFamily::Cayley => "E6".into(),
            SpaceFamily::Freudenthal => "E7".into(),
        }
    }
}

impl fmt::Display for SpaceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Serialized as the canonical name, so reports read `"space": "G:2:5"`.
impl Serialize for SpaceFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

/// Levi factor of the maximal parabolic: the ambient diagram minus the
/// marked node. Weights stay in ambient coordinates throughout; Levi
/// dominance means nonnegative away from the marked node.
#[derive(Clone, Debug)]
pub struct Levi {
    nodes: Vec<usize>,
    system: RootSystem,
    /// Integer multiple of the Levi height functional, per Levi node.
    height: Vec<i64>,
}

/// One dominant weight of a Levi-irreducible module, in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviWeight {
    pub weight: Weight,
    pub multiplicity: u64,
}

impl Levi {
    fn new(ambient: &RootSystem, marked: usize) -> Self {
        let nodes: Vec<usize> = (0..ambient.rank()).filter(|&i| i != marked).collect();
        let system = ambient.subsystem(&nodes);
        let r = nodes.len();
        let inv = system.inverse_cartan();
        let raw: Vec<BigRational> = (0..r)
            .map(|j| (0..r).fold(BigRational::zero(), |acc, i| acc + &inv[j][i]))
            .collect();
        let scale = raw.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let height = raw
            .iter()
            .map(|x| (x * BigRational::from_integer(scale.clone())).to_integer().to_i64().unwrap())
            .collect();
        Levi { nodes, system, height }
    }

    /// Ambient node indices of the Levi diagram.
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// Semisimple part as a root system on its own nodes.
    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    /// Coordinates at the Levi nodes.
    pub fn restrict(&self, w: &Weight) -> Weight {
        Weight::new(self.nodes.iter().map(|&i| w[i]).collect())
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.is_dominant_on(&self.nodes)
    }

    /// Scaled height; strictly increases along every Levi simple root.
    pub fn height(&self, w: &Weight) -> i128 {
        self.nodes
            .iter()
            .zip(&self.height)
            .map(|(&i, &h)| w[i] as i128 * h as i128)
            .sum()
    }

    /// Dimension of the Levi-irreducible module with highest weight `w`.
    pub fn dim(&self, w: &Weight) -> Result<BigUint> {
        self.system.weyl_dim(&self.restrict(w))
    }

    /// Dominant weights and multiplicities of the Levi-irreducible module
    /// with highest weight `w`.
    pub fn character(&self, ambient: &RootSystem, w: &Weight) -> Result<Vec<LeviWeight>> {
        let chars = self.system.dominant_character(&self.restrict(w))?;
        Ok(chars
            .into_iter()
            .map(|dw| {
                let mut full = w.clone();
                for (&node, &d) in self.nodes.iter().zip(&dw.depth) {
                    if d != 0 {
                        full = &full - &(d * &ambient.simple_root(node));
                    }
                }
                LeviWeight {
                    weight: full,
                    multiplicity: dw.multiplicity,
                }
            })
            .collect())
    }
}

#[derive(Clone, Debug)]
pub struct GrassmannianSpec {
    family: SpaceFamily,
    ambient: RootSystem,
    marked_node: usize,
    dim: usize,
    index_c1: i64,
    cotangent_weight: Weight,
    levi: Levi,
    nilradical: Vec<Root>,
}

impl GrassmannianSpec {
    pub fn family(&self) -> SpaceFamily {
        self.family
    }

    pub fn name(&self) -> String {
        self.family.name()
    }

    pub fn ambient(&self) -> &RootSystem {
        &self.ambient
    }

    pub fn rank(&self) -> usize {
        self.ambient.rank()
    }

    /// 0-based.
    pub fn marked_node(&self) -> usize {
        self.marked_node
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c1(TX)`.
    pub fn index_c1(&self) -> i64 {
        self.index_c1
    }

    /// Highest weight of the fiber of the cotangent bundle, `-alpha_k`.
    pub fn cotangent_weight(&self) -> &Weight {
        &self.cotangent_weight
    }

    pub fn levi(&self) -> &Levi {
        &self.levi
    }

    /// `lambda_k`.
    pub fn marked_fundamental(&self) -> Weight {
        Weight::fundamental(self.rank(), self.marked_node)
    }

    /// Positive roots with nonzero `alpha_k` coefficient, by increasing height.
    pub fn nilradical(&self) -> &[Root] {
        &self.nilradical
    }

    /// Levi-dominant conjugate of an ambient weight.
    pub fn levi_dominant(&self, w: &Weight) -> Weight {
        self.ambient.dominant_conjugate_on(w, &self.levi.nodes)
    }

    /// Levi Weyl orbit of an ambient weight.
    pub fn levi_orbit(&self, w: &Weight) -> BTreeSet<Weight> {
        self.ambient.weyl_orbit_on(w, &self.levi.nodes)
    }

    /// `-w0` of the Levi factor: highest weight of the dual Levi module.
    pub fn levi_dual(&self, w: &Weight) -> Weight {
        -&self.ambient.antidominant_conjugate_on(w, &self.levi.nodes)
    }

    /// Weights of `Omega^1`: the negated nilradical roots.
    pub fn cotangent_weights(&self) -> Vec<Weight> {
        self.nilradical.iter().map(|r| -&r.weight).collect()
    }
}

pub fn make_spec(family: SpaceFamily) -> Result<GrassmannianSpec> {
    let lie_type = family.lie_type()?;
    let ambient = RootSystem::new(lie_type);
    let k = family.marked_node();
    let mut nilradical: Vec<Root> = ambient
        .positive_roots()
        .iter()
        .filter(|r| r.simple[k] != 0)
        .cloned()
        .collect();
    if let Some(r) = nilradical.iter().find(|r| r.simple[k] != 1) {
        return Err(Error::Consistency(format!(
            "node {} is not cominuscule in {lie_type}: root {:?}",
            k + 1,
            r.simple
        )));
    }
    nilradical.sort_by_key(|r| (r.height(), r.simple.clone()));
    let sum = nilradical
        .iter()
        .fold(Weight::zero(ambient.rank()), |acc, r| &acc + &r.weight);
    if (0..ambient.rank()).any(|i| i != k && sum[i] != 0) {
        return Err(Error::Consistency(format!("nilradical sum {sum} is not a multiple of λ{}", k + 1)));
    }
    let index_c1 = sum[k];
    let cotangent_weight = -&ambient.simple_root(k);
    let levi = Levi::new(&ambient, k);
    Ok(GrassmannianSpec {
        family,
        dim: nilradical.len(),
        marked_node: k,
        index_c1,
        cotangent_weight,
        levi,
        ambient,
        nilradical,
    })
}

/// Positive roots with nonzero coefficient on the marked simple root, as weights.
pub fn nilradical_roots(spec: &GrassmannianSpec) -> Vec<Weight> {
    spec.nilradical.iter().map(|r| r.weight.clone()).collect()
}

/// Every catalog space whose ambient rank is at most `max_rank`.
///
/// `G(k, n)` is listed for `k <= n - k` only.
pub fn catalog_up_to_rank(max_rank: usize) -> Vec<SpaceFamily> {
    let mut out = Vec::new();
    for n in 2..=max_rank + 1 {
        out.extend((1..=n / 2).map(|k| SpaceFamily::Grass { k, n }));
    }
    out.extend((2..=max_rank).map(|r| SpaceFamily::QuadricOdd { r }));
    out.extend((3..=max_rank).map(|r| SpaceFamily::QuadricEven { r }));
    out.extend((2..=max_rank).map(|n| SpaceFamily::Lagrangian { n }));
    out.extend((3..=max_rank).map(|n| SpaceFamily::Spinor { n }));
    if max_rank >= 6 {
        out.push(SpaceFamily::Cayley);
    }
    if max_rank >= 7 {
        out.push(SpaceFamily::Freudenthal);
    }
    out
}

/// Every catalog space of dimension at most `max_dim`.
pub fn catalog_up_to_dim(max_dim: usize) -> Vec<SpaceFamily> {
    let mut out = Vec::new();
    for n in 2..=max_dim + 1 {
        out.extend(
            (1..=n / 2)
                .filter(|&k| k * (n - k) <= max_dim)
                .map(|k| SpaceFamily::Grass { k, n }),
        );
    }
    for m in 3..=max_dim {
        out.push(SpaceFamily::quadric(m).expect("m >= 3"));
    }
    out.extend((2..).take_while(|n| n * (n + 1) / 2 <= max_dim).map(|n| SpaceFamily::Lagrangian { n }));
    out.extend((3..).take_while(|n| n * (n - 1) / 2 <= max_dim).map(|n| SpaceFamily::Spinor { n }));
    if max_dim >= 16 {
        out.push(SpaceFamily::Cayley);
    }
    if max_dim >= 27 {
        out.push(SpaceFamily::Freudenthal);
    }
    out.sort();
    out
}

/// Computed data next to the tabulated dimension, index and cotangent weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Record {
    pub space: String,
    pub ambient: String,
    /// 1-based, Bourbaki.
    pub marked_node: usize,
    pub dim: usize,
    pub expected_dim: usize,
    pub index_c1: i64,
    pub expected_index_c1: i64,
    pub cotangent_weight: Weight,
    /// Only tabulated as a weight for some rows.
    pub expected_cotangent_weight: Option<Weight>,
    pub matches: bool,
}

fn tabulated(family: SpaceFamily, rank: usize) -> (usize, i64, Option<Weight>) {
    let at = |pairs: &[(usize, i64)]| {
        let mut w = Weight::zero(rank);
        for &(i, c) in pairs {
            w[i - 1] = c;
        }
        Some(w)
    };
    match family {
        // the row's G(k, r) has c1 = r, with r = dim V
        SpaceFamily::Grass { k, n } => {
            let mut pairs = vec![(k, -2)];
            if k > 1 {
                pairs.push((k - 1, 1));
            }
            if k + 1 < n {
                pairs.push((k + 1, 1));
            }
            (k * (n - k), n as i64, at(&pairs))
        }
        SpaceFamily::QuadricOdd { r } => (2 * r - 1, 2 * r as i64 - 1, None),
        SpaceFamily::QuadricEven { r } => (2 * r - 2, 2 * r as i64 - 2, None),
        SpaceFamily::Lagrangian { n } => (n * (n + 1) / 2, n as i64 + 1, at(&[(n - 1, 2), (n, -2)])),
        SpaceFamily::Spinor { n } => (n * (n - 1) / 2, 2 * n as i64 - 2, at(&[(n - 2, 1), (n, -2)])),
        SpaceFamily::Cayley => (16, 12, at(&[(1, -2), (3, 1)])),
        SpaceFamily::Freudenthal => (27, 18, at(&[(7, -2), (6, 1)])),
    }
}

/// Compares a spec with the tabulated values. Mismatches are reported, not raised.
pub fn check_table1(spec: &GrassmannianSpec) -> Table1Record {
    let (expected_dim, expected_index_c1, expected_cotangent_weight) = tabulated(spec.family, spec.rank());
    let matches = spec.dim == expected_dim
        && spec.index_c1 == expected_index_c1
        && expected_cotangent_weight
            .as_ref()
            .is_none_or(|w| w == &spec.cotangent_weight);
    Table1Record {
        space: spec.name(),
        ambient: spec.family.lie_type().map(|t| t.to_string()).unwrap_or_default(),
        marked_node: spec.marked_node + 1,
        dim: spec.dim,
        expected_dim,
        index_c1: spec.index_c1,
        expected_index_c1,
        cotangent_weight: spec.cotangent_weight.clone(),
        expected_cotangent_weight,
        matches,
    }
}

/// Caches Weyl group orders of Levi stabilizers, keyed by node mask.
#[derive(Debug, Default)]
pub(crate) struct OrbitSizer {
    cache: HashMap<Vec<usize>, BigUint>,
}

impl OrbitSizer {
    /// Size of the Levi Weyl orbit of a Levi-dominant weight.
    pub(crate) fn orbit_size(&mut self, spec: &GrassmannianSpec, w: &Weight) -> BigUint {
        let levi_nodes = spec.levi.nodes.clone();
        let whole = self.order(spec, levi_nodes.clone());
        let stab: Vec<usize> = levi_nodes.into_iter().filter(|&i| w[i] == 0).collect();
        let part = self.order(spec, stab);
        whole / part
    }

    fn order(&mut self, spec: &GrassmannianSpec, nodes: Vec<usize>) -> BigUint {
        if let Some(v) = self.cache.get(&nodes) {
            return v.clone();
        }
        let v = if nodes.is_empty() {
            BigUint::one()
        } else {
            spec.ambient.subsystem(&nodes).weyl_group_order()
        };
        self.cache.insert(nodes, v.clone());
        v
    }
}
