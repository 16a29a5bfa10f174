//! Young-diagram combinatorics behind the classical minimal twists.
//!
//! Each closed form here has a brute-force counterpart (`*_oracle`) that
//! enumerates the relevant partitions and minimizes the dominance cost
//! directly; the two are compared by [`agreement_sweep`].

use std::fmt;

use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::exec::Exec;

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; any increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Consistency(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `mu_{i+1}`, zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// Length of the first row.
    pub fn cols(&self) -> usize {
        self.part(0)
    }

    pub fn dual(&self) -> Partition {
        let cols = self.cols();
        Partition((1..=cols).map(|j| self.0.iter().filter(|&&m| m >= j).count()).collect())
    }

    /// Frobenius coordinates `(a_i | b_i)`: arm and leg lengths along the
    /// diagonal, `a_i = mu_i - i`, `b_i = mu'_i - i` (1-based `i`).
    pub fn frobenius(&self) -> Vec<(usize, usize)> {
        let dual = self.dual();
        (0..)
            .take_while(|&i| self.part(i) > i)
            .map(|i| (self.part(i) - i - 1, dual.part(i) - i - 1))
            .collect()
    }

    pub fn is_rectangle(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.rows() <= rows && self.cols() <= cols
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `size` with at most `max_rows` rows and parts at most
/// `max_cols`, in reverse-lexicographic order.
pub fn partitions_in_box(size: usize, max_rows: usize, max_cols: usize) -> Vec<Partition> {
    fn go(rest: usize, max_part: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if rows_left == 0 || rest > max_part * rows_left {
            return;
        }
        for part in (1..=max_part.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, rows_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, max_cols, max_rows, &mut Vec::new(), &mut out);
    out
}

/// Partition with Frobenius coordinates `(a_1, .. | b_1, ..)`, both strictly decreasing.
fn from_frobenius(arms: &[usize], legs: &[usize]) -> Partition {
    let r = arms.len();
    let rows = legs.first().map_or(0, |b| b + 1).max(r);
    let parts = (0..rows)
        .map(|i| {
            if i < r {
                arms[i] + i + 1
            } else {
                legs.iter().enumerate().filter(|&(j, &b)| b + j >= i).count()
            }
        })
        .collect();
    Partition(parts)
}

/// Partitions of `2p` with at most `n` rows and `a_i - b_i = shift` on the
/// diagonal, built from their Frobenius coordinates.
fn hooks_with_shift(p: usize, n: usize, shift: i64) -> Vec<Partition> {
    // one diagonal hook with leg b has 2b + shift + 1 boxes
    fn go(rest: usize, below: usize, shift: i64, n: usize, legs: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            let arms: Vec<usize> = legs.iter().map(|&b| (b as i64 + shift) as usize).collect();
            let mu = from_frobenius(&arms, legs);
            if mu.rows() <= n {
                out.push(mu);
            }
            return;
        }
        for b in (0..below).rev() {
            let a = b as i64 + shift;
            let size = 2 * b as i64 + shift + 1;
            if a < 0 || size <= 0 || size as usize > rest || legs.first().map_or(b + 1, |&b0| b0 + 1) > n {
                continue;
            }
            legs.push(b);
            go(rest - size as usize, b, shift, n, legs, out);
            legs.pop();
        }
    }
    let mut out = Vec::new();
    go(2 * p, 2 * p + 1, shift, n, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// `Q_1(2p)`: partitions of `2p` with at most `n` rows whose Frobenius
/// coordinates satisfy `a_i = b_i + 1`. These index `Lambda^p S^2`.
pub fn hooks_q1(p: usize, n: usize) -> Vec<Partition> {
    hooks_with_shift(p, n, 1)
}

/// `Q_{-1}(2p)`: as [`hooks_q1`] with `a_i = b_i - 1`. These index `Lambda^p Lambda^2`.
pub fn hooks_qm1(p: usize, n: usize) -> Vec<Partition> {
    hooks_with_shift(p, n, -1)
}

/// Dominance cost of a Schur summand: the least twist making it effective.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Cost {
    /// `mu_1 + mu'_1` (ordinary Grassmannians)
    #[serde(rename = "A")]
    FirstRowPlusColumn,
    /// `mu_1` (Lagrangian Grassmannians)
    #[serde(rename = "C")]
    FirstRow,
    /// `mu_1 + mu_2` (spinor varieties)
    #[serde(rename = "D")]
    FirstTwoRows,
}

impl Cost {
    pub fn evaluate(self, mu: &Partition) -> usize {
        match self {
            Cost::FirstRowPlusColumn => mu.part(0) + mu.rows(),
            Cost::FirstRow => mu.part(0),
            Cost::FirstTwoRows => mu.part(0) + mu.part(1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinTwistWitness {
    pub l: i64,
    pub cost: Cost,
    /// Every partition attaining `l`, reverse-lexicographic.
    pub partitions: Vec<Partition>,
}

fn minimize(cost: Cost, candidates: Vec<Partition>) -> Result<MinTwistWitness> {
    let l = candidates
        .iter()
        .map(|mu| cost.evaluate(mu))
        .min()
        .ok_or_else(|| Error::Consistency("no candidate partitions".into()))?;
    let partitions = candidates.into_iter().filter(|mu| cost.evaluate(mu) == l).collect();
    Ok(MinTwistWitness {
        l: l as i64,
        cost,
        partitions,
    })
}

/// Smallest `m` with `m >= 2 sqrt(p)`.
fn ceil_two_sqrt(p: i64) -> i64 {
    let mut m = 0;
    while m * m < 4 * p {
        m += 1;
    }
    m
}

/// Smallest positive `a` with `a(a+1) >= 2p`, i.e. `ceil(sqrt(2p) - 1/2)`.
fn triangular_root(p: i64) -> i64 {
    let mut a = 1;
    while a * (a + 1) < 2 * p {
        a += 1;
    }
    a
}

fn check_grass(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(out_of_range("k", k as i64, format!("1..={}", n.saturating_sub(1))));
    }
    Ok(())
}

fn check_p(p: usize, max: usize) -> Result<()> {
    if p == 0 || p > max {
        return Err(out_of_range("p", p as i64, format!("1..={max}")));
    }
    Ok(())
}

/// Minimal twist on `G(k, n)`; `k` is first replaced by `min(k, n - k)`.
pub fn min_twist_grass(k: usize, n: usize, p: usize) -> Result<i64> {
    check_grass(k, n)?;
    let k = k.min(n - k);
    let top = k * (n - k);
    check_p(p, top)?;
    let (k, p) = (k as i64, p as i64);
    Ok(if p == top as i64 {
        n as i64
    } else if p <= k * k {
        ceil_two_sqrt(p)
    } else {
        k + (p + k - 1) / k
    })
}

/// Exhaustive minimum of `mu_1 + mu'_1` over partitions of `p` in the
/// `k x (n - k)` box.
pub fn min_twist_grass_oracle(k: usize, n: usize, p: usize) -> Result<MinTwistWitness> {
    check_grass(k, n)?;
    check_p(p, k * (n - k))?;
    minimize(Cost::FirstRowPlusColumn, partitions_in_box(p, k, n - k))
}

/// Minimal twist on a Lagrangian Grassmannian: `ceil(sqrt(2p) + 1/2)`.
pub fn min_twist_lagr(p: usize) -> Result<i64> {
    if p == 0 {
        return Err(out_of_range("p", 0, "p >= 1".into()));
    }
    let p = p as i64;
    let mut m = 1;
    while (2 * m - 1) * (2 * m - 1) < 8 * p {
        m += 1;
    }
    Ok(m)
}

pub fn min_twist_lagr_oracle(n: usize, p: usize) -> Result<MinTwistWitness> {
    check_p(p, n * (n + 1) / 2)?;
    minimize(Cost::FirstRow, hooks_q1(p, n))
}

/// Minimal twist on a spinor variety: with `2p = a(a+1) - 2b`, `0 <= b < a`,
/// this is `2a`, except `2a - 1` when `b = a - 1 > 0`.
pub fn min_twist_spinor(p: usize) -> Result<i64> {
    if p == 0 {
        return Err(out_of_range("p", 0, "p >= 1".into()));
    }
    let p = p as i64;
    let a = triangular_root(p);
    let b = (a * (a + 1) - 2 * p) / 2;
    Ok(if a == 1 {
        2
    } else if b == a - 1 {
        2 * a - 1
    } else {
        2 * a
    })
}

pub fn min_twist_spinor_oracle(n: usize, p: usize) -> Result<MinTwistWitness> {
    check_p(p, n * (n.saturating_sub(1)) / 2)?;
    minimize(Cost::FirstTwoRows, hooks_qm1(p, n))
}

/// Which closed form to audit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FormulaFamily {
    A,
    C,
    D,
}

/// One formula-versus-oracle comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgreementRow {
    pub family: FormulaFamily,
    /// Present for type A only: `k` as given and as normalized to `min(k, n-k)`.
    pub k: Option<usize>,
    pub k_normalized: Option<usize>,
    pub n: usize,
    pub p: usize,
    pub formula_l: i64,
    pub oracle_l: i64,
    pub witnesses: Vec<Partition>,
}

impl AgreementRow {
    pub fn agrees(&self) -> bool {
        self.formula_l == self.oracle_l
    }
}

/// Compares closed form and oracle for every valid `(k, n, p)` (type A,
/// `n <= max_n`, `k <= n - k`) or `(n, p)` (types C with `n >= 2`, D with
/// `n >= 3`, `n <= max_n`).
pub fn agreement_sweep(family: FormulaFamily, max_n: usize, exec: Exec) -> Result<Vec<AgreementRow>> {
    let mut jobs: Vec<(Option<usize>, usize, usize)> = Vec::new();
    match family {
        FormulaFamily::A => {
            for n in 2..=max_n {
                for k in 1..=n / 2 {
                    jobs.extend((1..=k * (n - k)).map(|p| (Some(k), n, p)));
                }
            }
        }
        FormulaFamily::C => {
            for n in 2..=max_n {
                jobs.extend((1..=n * (n + 1) / 2).map(|p| (None, n, p)));
            }
        }
        FormulaFamily::D => {
            for n in 3..=max_n {
                jobs.extend((1..=n * (n - 1) / 2).map(|p| (None, n, p)));
            }
        }
    }
    exec.try_map(jobs, |(k, n, p)| {
        let (formula_l, witness) = match family {
            FormulaFamily::A => {
                let k = k.expect("type A job carries k");
                (min_twist_grass(k, n, p)?, min_twist_grass_oracle(k, n, p)?)
            }
            FormulaFamily::C => (min_twist_lagr(p)?, min_twist_lagr_oracle(n, p)?),
            FormulaFamily::D => (min_twist_spinor(p)?, min_twist_spinor_oracle(n, p)?),
        };
        Ok(AgreementRow {
            family,
            k,
            k_normalized: k.map(|k| k.min(n - k)),
            n,
            p,
            formula_l,
            oracle_l: witness.l,
            witnesses: witness.partitions,
        })
    })
}
