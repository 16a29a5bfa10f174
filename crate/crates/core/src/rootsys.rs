//! Exact root-system arithmetic in the fundamental-weight basis.
//!
//! Nodes use Bourbaki numbering (1-based in all user-facing text, 0-based in
//! code). The Cartan matrix is stored so that row `i` is the simple root
//! `alpha_i` written in fundamental weights: `alpha_i = sum_j cartan[i][j] lambda_j`,
//! i.e. `cartan[i][j] = <alpha_i, alpha_j^vee>`. Squared root lengths are
//! normalized so that long roots have length 2.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

/// Cartan type of a simple Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
        };
        if !ok {
            return Err(Error::InvalidRank {
                family: format!("{family:?}"),
                rank,
            });
        }
        Ok(LieType { family, rank })
    }

    pub fn e6() -> Self {
        LieType {
            family: Family::E6,
            rank: 6,
        }
    }

    pub fn e7() -> Self {
        LieType {
            family: Family::E7,
            rank: 7,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Closed-form number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 1) / 2,
            Family::B | Family::C => r * r,
            Family::D => r * (r - 1),
            Family::E6 => 36,
            Family::E7 => 63,
        }
    }

    /// Edges of the Dynkin diagram (0-based) and squared root lengths.
    fn diagram(&self) -> (Vec<(usize, usize)>, Vec<i64>) {
        let r = self.rank;
        let chain = |len: usize| (1..len).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match self.family {
            Family::A => (chain(r), vec![2; r]),
            Family::B => {
                let mut norms = vec![2; r];
                norms[r - 1] = 1;
                (chain(r), norms)
            }
            Family::C => {
                let mut norms = vec![1; r];
                norms[r - 1] = 2;
                (chain(r), norms)
            }
            Family::D => {
                let mut edges = chain(r - 1);
                edges.push((r - 3, r - 1));
                (edges, vec![2; r])
            }
            // Bourbaki: 1-3-4-5-6(-7), with 2 attached to 4.
            Family::E6 | Family::E7 => {
                let mut edges = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
                if self.family == Family::E7 {
                    edges.push((5, 6));
                }
                (edges, vec![2; r])
            }
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::E6 => write!(f, "E6"),
            Family::E7 => write!(f, "E7"),
            fam => write!(f, "{:?}{}", fam, self.rank),
        }
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("Lie type `{s}`"));
        let s = s.trim();
        match s {
            "E6" => return Ok(LieType::e6()),
            "E7" => return Ok(LieType::e7()),
            _ => {}
        }
        let mut chars = s.chars();
        let family = match chars.next().ok_or_else(bad)? {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        LieType::new(family, rank)
    }
}

/// Integer vector in the fundamental-weight basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `lambda_{i+1}` (0-based index `i`).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Every coordinate is nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Nonnegative on every listed node.
    pub fn is_dominant_on(&self, nodes: &[usize]) -> bool {
        nodes.iter().all(|&i| self.0[i] >= 0)
    }

    /// Human-readable form such as `-2λ1+λ3`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("λ{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Inverse of [`Weight::pretty`]: `-2λ1+λ3`, with `L` accepted for `λ`.
    pub fn parse_lambda(s: &str, rank: usize) -> Result<Weight> {
        let bad = |why: &str| Error::Parse(format!("{s:?}: {why}"));
        let mut w = Weight::zero(rank);
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "0" {
            return Ok(w);
        }
        let mut rest = t.as_str();
        if rest.is_empty() {
            return Err(bad("empty"));
        }
        while !rest.is_empty() {
            let (sign, body) = match rest.strip_prefix('-') {
                Some(r) => (-1, r),
                None => (1, rest.strip_prefix('+').unwrap_or(rest)),
            };
            let digits = body.find(|c: char| !c.is_ascii_digit()).unwrap_or(body.len());
            let coef: i64 = if digits == 0 { 1 } else { body[..digits].parse().map_err(|_| bad("coefficient"))? };
            let body = &body[digits..];
            let body = body
                .strip_prefix('λ')
                .or_else(|| body.strip_prefix('L'))
                .ok_or_else(|| bad("expected λ"))?;
            let end = body.find(|c: char| !c.is_ascii_digit()).unwrap_or(body.len());
            let idx: usize = body[..end].parse().map_err(|_| bad("index"))?;
            if idx == 0 || idx > rank {
                return Err(bad("index out of range"));
            }
            w[idx - 1] += sign * coef;
            rest = &body[end..];
        }
        Ok(w)
    }
}

/// Shorthand for `Weight::new(vec![...])`.
#[macro_export]
macro_rules! wt {
    ($($x:expr),* $(,)?) => {
        $crate::rootsys::Weight::new(vec![$($x as i64),*])
    };
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for Weight {
    fn index_mut(&mut self, i: usize) -> &mut i64 {
        &mut self.0[i]
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(rhs.0.iter().map(|a| self * a).collect())
    }
}

/// A positive root, kept in both coordinate systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coefficients on the simple roots.
    pub simple: Vec<i64>,
    /// Fundamental-weight coordinates.
    pub weight: Weight,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }
}

/// A dominant weight of an irreducible module together with its depth
/// below the highest weight and its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantWeight {
    pub weight: Weight,
    /// Simple-root coordinates of `highest - weight`.
    pub depth: Vec<i64>,
    pub multiplicity: u64,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: Option<LieType>,
    cartan: Vec<Vec<i64>>,
    norms: Vec<i64>,
    inverse_cartan: Vec<Vec<BigRational>>,
    /// `form_scale * <lambda_i, lambda_j>`, integral.
    form: Vec<Vec<i64>>,
    form_scale: i64,
    positive_roots: Vec<Root>,
    /// `form * root.weight` for every positive root.
    root_duals: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(lie_type: LieType) -> Self {
        let (edges, norms) = lie_type.diagram();
        let r = lie_type.rank();
        let mut cartan = vec![vec![0i64; r]; r];
        for i in 0..r {
            cartan[i][i] = 2;
        }
        for &(i, j) in &edges {
            let m = norms[i].max(norms[j]);
            cartan[i][j] = -m / norms[j];
            cartan[j][i] = -m / norms[i];
        }
        let mut rs = Self::from_cartan(cartan, norms).expect("valid Dynkin diagram");
        rs.lie_type = Some(lie_type);
        rs
    }

    /// Builds a (possibly reducible, possibly rank-0) root system from a
    /// Cartan matrix and squared root lengths.
    pub fn from_cartan(cartan: Vec<Vec<i64>>, norms: Vec<i64>) -> Result<Self> {
        let r = cartan.len();
        if norms.len() != r || cartan.iter().any(|row| row.len() != r) {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: norms.len(),
            });
        }
        for i in 0..r {
            for j in 0..r {
                // symmetrizability: cartan[i][j] * norm_j == cartan[j][i] * norm_i
                if cartan[i][j] * norms[j] != cartan[j][i] * norms[i] {
                    return Err(Error::Consistency(format!(
                        "Cartan matrix not symmetrized by the given norms at ({i},{j})"
                    )));
                }
            }
        }
        let inverse_cartan = invert(&cartan)?;
        // <lambda_i, lambda_j> = inverse_cartan[i][j] * norm_j / 2
        let pairing: Vec<Vec<BigRational>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| &inverse_cartan[i][j] * BigRational::new(norms[j].into(), 2.into()))
                    .collect()
            })
            .collect();
        let mut scale = BigInt::one();
        for row in &pairing {
            for x in row {
                scale = scale.lcm(x.denom());
            }
        }
        let form: Vec<Vec<i64>> = pairing
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * BigRational::from_integer(scale.clone())).to_integer().to_i64().unwrap())
                    .collect()
            })
            .collect();
        let form_scale = scale.to_i64().unwrap();
        let positive_roots = generate_positive_roots(&cartan);
        let root_duals = positive_roots.iter().map(|a| mat_vec(&form, a.weight.coords())).collect();
        Ok(RootSystem {
            lie_type: None,
            cartan,
            norms,
            inverse_cartan,
            form,
            form_scale,
            positive_roots,
            root_duals,
        })
    }

    /// The root system of the subdiagram on `nodes` (re-indexed in order).
    pub fn subsystem(&self, nodes: &[usize]) -> RootSystem {
        let cartan = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| self.cartan[i][j]).collect())
            .collect();
        let norms = nodes.iter().map(|&i| self.norms[i]).collect();
        RootSystem::from_cartan(cartan, norms).expect("subdiagram of a valid diagram")
    }

    pub fn lie_type(&self) -> Option<LieType> {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inverse_cartan(&self) -> &[Vec<BigRational>] {
        &self.inverse_cartan
    }

    /// Squared lengths of the simple roots (long roots have length 2).
    pub fn simple_root_norms(&self) -> &[i64] {
        &self.norms
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new(self.cartan[i].clone())
    }

    pub fn weyl_vector(&self) -> Weight {
        Weight::new(vec![1; self.rank()])
    }

    /// The root of maximal height (unique when the system is irreducible).
    pub fn highest_root(&self) -> Option<&Root> {
        self.positive_roots.iter().max_by_key(|r| r.height())
    }

    fn check_len(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: w.len(),
            });
        }
        Ok(())
    }

    /// Invariant pairing of two weights (long roots have squared length 2).
    pub fn pairing(&self, a: &Weight, b: &Weight) -> Result<BigRational> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(BigRational::new(self.scaled_pairing(a, b).into(), self.form_scale.into()))
    }

    /// `pairing * form_scale`, as an integer.
    pub(crate) fn scaled_pairing(&self, a: &Weight, b: &Weight) -> i128 {
        let mut acc = 0i128;
        for (i, &ai) in a.coords().iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = &self.form[i];
            let dot: i128 = row.iter().zip(b.coords()).map(|(&f, &x)| f as i128 * x as i128).sum();
            acc += ai as i128 * dot;
        }
        acc
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.is_dominant()
    }

    /// Coordinates of `w` in the simple-root basis.
    pub fn simple_coords(&self, w: &Weight) -> Result<Vec<BigRational>> {
        self.check_len(w)?;
        let r = self.rank();
        Ok((0..r)
            .map(|i| {
                (0..r).fold(BigRational::zero(), |acc, j| {
                    acc + &self.inverse_cartan[j][i] * BigInt::from(w[j])
                })
            })
            .collect())
    }

    /// Simple reflection `s_i(v) = v - v_i alpha_i`, in place.
    pub fn reflect(&self, v: &mut Weight, i: usize) {
        let c = v[i];
        if c != 0 {
            for (x, a) in v.0.iter_mut().zip(&self.cartan[i]) {
                *x -= c * a;
            }
        }
    }

    /// The dominant conjugate of `v` under the reflections at `nodes`.
    pub fn dominant_conjugate_on(&self, v: &Weight, nodes: &[usize]) -> Weight {
        let mut v = v.clone();
        while let Some(&i) = nodes.iter().find(|&&i| v[i] < 0) {
            self.reflect(&mut v, i);
        }
        v
    }

    pub fn dominant_conjugate(&self, v: &Weight) -> Weight {
        let mut v = v.clone();
        while let Some(i) = v.0.iter().position(|&x| x < 0) {
            self.reflect(&mut v, i);
        }
        v
    }

    /// The antidominant conjugate of `v` under the reflections at `nodes`.
    pub fn antidominant_conjugate_on(&self, v: &Weight, nodes: &[usize]) -> Weight {
        let mut v = v.clone();
        while let Some(&i) = nodes.iter().find(|&&i| v[i] > 0) {
            self.reflect(&mut v, i);
        }
        v
    }

    /// Highest weight of the dual module, `-w0(w)`.
    pub fn dual_weight(&self, w: &Weight) -> Weight {
        let nodes: Vec<usize> = (0..self.rank()).collect();
        -&self.antidominant_conjugate_on(w, &nodes)
    }

    /// Weyl dimension formula.
    pub fn weyl_dim(&self, w: &Weight) -> Result<BigUint> {
        self.check_len(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.clone()));
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for root in &self.positive_roots {
            // 2<v, alpha> = sum_i v_i a_i |alpha_i|^2
            let mut top = 0i64;
            let mut bottom = 0i64;
            for (i, &a) in root.simple.iter().enumerate() {
                let n = a * self.norms[i];
                top += (w[i] + 1) * n;
                bottom += n;
            }
            num *= top;
            den *= bottom;
        }
        let (q, rem) = num.div_rem(&den);
        if !rem.is_zero() {
            return Err(Error::Consistency(format!("Weyl dimension of {w} is not integral")));
        }
        Ok(q.to_biguint().expect("positive"))
    }

    /// Orbit of `w` under the Weyl group.
    pub fn weyl_orbit(&self, w: &Weight) -> BTreeSet<Weight> {
        let nodes: Vec<usize> = (0..self.rank()).collect();
        self.weyl_orbit_on(w, &nodes)
    }

    /// Orbit of `w` under the reflections at `nodes`.
    pub fn weyl_orbit_on(&self, w: &Weight, nodes: &[usize]) -> BTreeSet<Weight> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(v) = queue.pop_front() {
            for &i in nodes {
                if v[i] == 0 {
                    continue;
                }
                let mut u = v.clone();
                self.reflect(&mut u, i);
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
        seen
    }

    /// Order of the Weyl group, from the exponents read off the root heights.
    pub fn weyl_group_order(&self) -> BigUint {
        let max_h = self.positive_roots.iter().map(Root::height).max().unwrap_or(0) as usize;
        let mut per_height = vec![0usize; max_h + 2];
        for root in &self.positive_roots {
            per_height[root.height() as usize] += 1;
        }
        // exponent m occurs (#roots of height m) - (#roots of height m+1) times
        let mut order = BigUint::one();
        for m in 1..=max_h {
            let count = per_height[m] - per_height[m + 1];
            for _ in 0..count {
                order *= BigUint::from(m + 1);
            }
        }
        order
    }

    /// Multiplicities of the dominant weights of the irreducible module with
    /// highest weight `highest` (Freudenthal recursion, dominant chamber only).
    ///
    /// Sorted by increasing depth below `highest`.
    pub fn dominant_character(&self, highest: &Weight) -> Result<Vec<DominantWeight>> {
        self.check_len(highest)?;
        if !highest.is_dominant() {
            return Err(Error::NotDominant(highest.clone()));
        }
        let r = self.rank();
        let mut index: HashMap<Weight, usize> = HashMap::new();
        let mut found = vec![DominantWeight {
            weight: highest.clone(),
            depth: vec![0; r],
            multiplicity: 0,
        }];
        index.insert(highest.clone(), 0);
        let mut cursor = 0;
        while cursor < found.len() {
            let (mu, depth) = (found[cursor].weight.clone(), found[cursor].depth.clone());
            for root in &self.positive_roots {
                let nu = &mu - &root.weight;
                if nu.is_dominant() && !index.contains_key(&nu) {
                    let d: Vec<i64> = depth.iter().zip(&root.simple).map(|(a, b)| a + b).collect();
                    index.insert(nu.clone(), found.len());
                    found.push(DominantWeight {
                        weight: nu,
                        depth: d,
                        multiplicity: 0,
                    });
                }
            }
            cursor += 1;
        }
        found.sort_by_key(|d| (d.depth.iter().sum::<i64>(), std::cmp::Reverse(d.weight.clone())));
        let index: HashMap<Weight, usize> =
            found.iter().enumerate().map(|(i, d)| (d.weight.clone(), i)).collect();

        let rho = self.weyl_vector();
        let top = &(highest + &rho);
        let top_norm = self.scaled_pairing(top, top);
        found[0].multiplicity = 1;
        for idx in 1..found.len() {
            let mu = found[idx].weight.clone();
            let shifted = &mu + &rho;
            let denom = top_norm - self.scaled_pairing(&shifted, &shifted);
            let mut sum: i128 = 0;
            for (root, dual) in self.positive_roots.iter().zip(&self.root_duals) {
                let mut v = mu.clone();
                loop {
                    v = &v + &root.weight;
                    let dom = self.dominant_conjugate(&v);
                    let Some(&j) = index.get(&dom) else { break };
                    let pair: i128 = v.coords().iter().zip(dual).map(|(&x, &y)| x as i128 * y as i128).sum();
                    sum += found[j].multiplicity as i128 * pair;
                }
            }
            let num = 2 * sum;
            if denom <= 0 || num % denom != 0 {
                return Err(Error::Consistency(format!(
                    "Freudenthal recursion not integral at {mu} below {highest}"
                )));
            }
            found[idx].multiplicity = u64::try_from(num / denom)
                .map_err(|_| Error::Consistency(format!("negative multiplicity at {mu}")))?;
        }
        Ok(found)
    }

    /// Full weight multiset of the irreducible module with highest weight `w`.
    pub fn weight_system(&self, w: &Weight) -> Result<BTreeMap<Weight, u64>> {
        let mut out = BTreeMap::new();
        for dw in self.dominant_character(w)? {
            for v in self.weyl_orbit(&dw.weight) {
                out.insert(v, dw.multiplicity);
            }
        }
        Ok(out)
    }
}

fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

fn invert(m: &[Vec<i64>]) -> Result<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|&x| BigRational::from_integer(x.into())).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Consistency("singular Cartan matrix".into()))?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let r = cartan.len();
    let mut roots: Vec<Root> = (0..r)
        .map(|i| {
            let mut simple = vec![0; r];
            simple[i] = 1;
            Root {
                simple,
                weight: Weight::new(cartan[i].clone()),
            }
        })
        .collect();
    let mut index: HashMap<Vec<i64>, usize> =
        roots.iter().enumerate().map(|(i, rt)| (rt.simple.clone(), i)).collect();
    let mut layer: Vec<usize> = (0..r).collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &b in &layer {
            for i in 0..r {
                let beta = roots[b].clone();
                if beta.height() == 1 && beta.simple[i] == 1 {
                    continue;
                }
                // length of the alpha_i-string below beta
                let mut p = 0;
                let mut probe = beta.simple.clone();
                loop {
                    probe[i] -= 1;
                    if index.contains_key(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - beta.weight[i];
                if q >= 1 {
                    let mut simple = beta.simple.clone();
                    simple[i] += 1;
                    if !index.contains_key(&simple) {
                        let weight = Weight::new(
                            beta.weight.coords().iter().zip(&cartan[i]).map(|(a, c)| a + c).collect(),
                        );
                        index.insert(simple.clone(), roots.len());
                        next.push(roots.len());
                        roots.push(Root { simple, weight });
                    }
                }
            }
        }
        layer = next;
    }
    roots
}
