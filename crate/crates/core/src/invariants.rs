//! Hilbert series, regularity and the canonical module of Hibi rings.
//!
//! Strictly order reversing maps `v` on `P` with a bottom and top adjoined
//! are stored as [`TMap`]: values on `P` plus the value at the adjoined
//! bottom. The adjoined top always has value 0.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{hyper_planar, DistributiveLattice};
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// `f[i]` counts chains with `i` elements of the lattice (`f[0] = 1`).
    pub f: Vec<u128>,
    pub h: Vec<u128>,
    pub dim: usize,
    pub projdim: usize,
    pub reg: usize,
    pub a_invariant: i64,
}

impl HilbertData {
    /// Value of the Hilbert function in degree `k`.
    pub fn hilbert_function(&self, k: usize) -> u128 {
        if self.dim == 0 {
            return (k == 0) as u128;
        }
        self.h
            .iter()
            .enumerate()
            .filter(|&(i, _)| i <= k)
            .map(|(i, &hi)| hi * binomial((k - i + self.dim - 1) as u128, (self.dim - 1) as u128))
            .sum()
    }

    pub fn multiplicity(&self) -> u128 {
        self.h.iter().sum()
    }
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Chains of each size in a poset, `out[0] = 1` for the empty chain.
pub fn chain_counts(p: &Poset) -> Vec<u128> {
    let n = p.len();
    let ext = p.linear_extension();
    // ending[k][x]: chains with k+1 elements whose top is x
    let mut out = vec![1u128];
    let mut ending: Vec<u128> = vec![1; n];
    while ending.iter().any(|&c| c > 0) {
        out.push(ending.iter().sum());
        let mut next = vec![0u128; n];
        for &x in &ext {
            next[x] = (0..n).filter(|&y| p.lt(y, x)).map(|y| ending[y]).sum();
        }
        ending = next;
    }
    out
}

/// f- and h-vectors of the order complex of `l`, and the invariants read
/// off from them.
pub fn hilbert_data(l: &DistributiveLattice) -> Result<HilbertData> {
    let f = chain_counts(l.poset());
    let d = l.ji_poset().len() + 1;
    if f.len() != d + 1 {
        return Err(Error::violated(
            "order complex dimension",
            format!("{} chain sizes for dimension {d}", f.len() - 1),
        ));
    }
    // h_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}
    let mut h = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut acc: i128 = 0;
        for i in 0..=k {
            let term = binomial((d - i) as u128, (k - i) as u128) as i128 * f[i] as i128;
            if (k - i) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if acc < 0 {
            return Err(Error::violated("nonnegative h-vector", format!("h_{k} = {acc}")));
        }
        h.push(acc as u128);
    }
    while h.len() > 1 && *h.last().unwrap() == 0 {
        h.pop();
    }
    let reg = h.len() - 1;
    Ok(HilbertData {
        projdim: l.len() - d,
        dim: d,
        reg,
        a_invariant: reg as i64 - d as i64,
        f,
        h,
    })
}

/// `|P| - rank P - 1`, and 0 for the empty poset.
pub fn regularity_formula(p: &Poset) -> usize {
    if p.is_empty() {
        0
    } else {
        p.len() - p.rank() - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TMap {
    pub values: Vec<u32>,
    pub bottom: u32,
}

/// Membership in `T(P)`: positive values strictly decreasing along every
/// cover, including those through the adjoined bottom and top.
pub fn in_t(p: &Poset, v: &TMap) -> bool {
    v.values.len() == p.len()
        && v.values.iter().all(|&x| x >= 1 && x < v.bottom)
        && p.covers().iter().all(|&(x, y)| v.values[x] > v.values[y])
        && (!p.is_empty() || v.bottom >= 1)
}

/// `v` is minimal in `T(P)` exactly when the adjoined bottom is reached
/// from the adjoined top by moving up along any cover or down along a
/// cover where the value grows by exactly one.
pub fn is_minimal_t(p: &Poset, v: &TMap) -> bool {
    let known: Vec<Option<u32>> = v.values.iter().map(|&x| Some(x)).collect();
    reaches_bottom(p, &known, v.bottom)
}

/// Reachability with unassigned values treated as tight.
fn reaches_bottom(p: &Poset, v: &[Option<u32>], bottom: u32) -> bool {
    let n = p.len();
    let tight = |lo: Option<u32>, hi: Option<u32>| match (lo, hi) {
        (Some(a), Some(b)) => a == b + 1,
        _ => true,
    };
    // node n is the adjoined bottom
    let mut seen = vec![false; n + 1];
    let mut stack = Vec::new();
    for x in p.maximal() {
        if tight(v[x], Some(0)) {
            seen[x] = true;
            stack.push(x);
        }
    }
    if n == 0 {
        return bottom == 1;
    }
    while let Some(z) = stack.pop() {
        if z == n {
            return true;
        }
        let mut next = Vec::new();
        for &y in p.upper_covers(z) {
            next.push(y);
        }
        for &x in p.lower_covers(z) {
            if tight(v[x], v[z]) {
                next.push(x);
            }
        }
        if p.lower_covers(z).is_empty() && tight(Some(bottom), v[z]) {
            next.push(n);
        }
        for y in next {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen[n]
}

pub const DEFAULT_MAX_T_POSET: usize = 10;

/// Minimal elements of `T(P)`, sorted by bottom value and then values.
///
/// For each bottom value `M` the search assigns values from the top down.
/// Minimal maps take every value between 1 and `M - 1` and satisfy the
/// reachability test of [`is_minimal_t`]; both are used for pruning.
pub fn minimal_t(p: &Poset, limit: usize) -> Result<Vec<TMap>> {
    let n = p.len();
    if n > limit {
        return Err(Error::bound("poset size for canonical module", n, limit));
    }
    if n == 0 {
        return Ok(vec![TMap {
            values: vec![],
            bottom: 1,
        }]);
    }
    let heights = p.heights();
    let depths = p.depths();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (depths[x], x));
    let rank_hat = p.rank_hat() as u32;

    struct Search<'a> {
        p: &'a Poset,
        order: Vec<usize>,
        heights: Vec<usize>,
        bottom: u32,
        values: Vec<Option<u32>>,
        count: Vec<usize>,
        out: Vec<TMap>,
    }

    impl Search<'_> {
        fn missing(&self) -> usize {
            (1..self.bottom as usize).filter(|&c| self.count[c] == 0).count()
        }

        fn go(&mut self, k: usize) {
            let n = self.order.len();
            if self.missing() > n - k {
                return;
            }
            if !reaches_bottom(self.p, &self.values, self.bottom) {
                return;
            }
            if k == n {
                self.out.push(TMap {
                    values: self.values.iter().map(|v| v.unwrap()).collect(),
                    bottom: self.bottom,
                });
                return;
            }
            let x = self.order[k];
            let lo = self
                .p
                .upper_covers(x)
                .iter()
                .map(|&y| self.values[y].unwrap())
                .max()
                .unwrap_or(0)
                + 1;
            let hi = self.bottom as i64 - 1 - self.heights[x] as i64;
            for val in lo as i64..=hi {
                let val = val as u32;
                self.values[x] = Some(val);
                self.count[val as usize] += 1;
                self.go(k + 1);
                self.count[val as usize] -= 1;
            }
            self.values[x] = None;
        }
    }

    let mut found = Vec::new();
    for bottom in rank_hat..=(n as u32 + 1) {
        let mut s = Search {
            p,
            order: order.clone(),
            heights: heights.clone(),
            bottom,
            values: vec![None; n],
            count: vec![0; n + 2],
            out: Vec::new(),
        };
        s.go(0);
        s.out.sort();
        found.extend(s.out);
    }
    Ok(found)
}

/// All of `T(P)` with bottom value at most `|P| + 1`, enumerated by brute
/// force; minimal elements are then found by pairwise comparison.
pub fn minimal_t_pairwise(p: &Poset) -> Vec<TMap> {
    let n = p.len();
    let cap = n as u32 + 1;
    let mut all = Vec::new();
    let mut values = vec![1u32; n];
    loop {
        let candidate = TMap {
            values: values.clone(),
            bottom: 0,
        };
        if p.covers().iter().all(|&(x, y)| values[x] > values[y]) {
            let top = values.iter().copied().max().unwrap_or(0);
            for b in top + 1..=cap {
                all.push(TMap {
                    bottom: b,
                    ..candidate.clone()
                });
            }
        }
        let mut i = 0;
        while i < n && values[i] == n as u32 {
            values[i] = 1;
            i += 1;
        }
        if i == n {
            break;
        }
        values[i] += 1;
    }
    let dominated = |v: &TMap, w: &TMap| -> bool {
        // v - w is order reversing on the completed poset and nonzero
        let u: Vec<i64> = v.values.iter().zip(&w.values).map(|(&a, &b)| a as i64 - b as i64).collect();
        let ub = v.bottom as i64 - w.bottom as i64;
        v != w
            && p.covers().iter().all(|&(x, y)| u[x] >= u[y])
            && p.maximal().iter().all(|&x| u[x] >= 0)
            && p.minimal().iter().all(|&x| ub >= u[x])
            && ub >= 0
    };
    let mut minimal: Vec<TMap> = all
        .iter()
        .filter(|v| !all.iter().any(|w| dominated(v, w)))
        .cloned()
        .collect();
    minimal.sort_by_key(|v| (v.bottom, v.values.clone()));
    minimal
}

#[derive(Clone, Debug, Serialize)]
pub struct CanonicalData {
    pub minimal: Vec<TMap>,
    #[serde(rename = "type")]
    pub type_: usize,
    pub degrees: Vec<u32>,
    pub gorenstein: bool,
    pub level: bool,
    pub pseudo_gorenstein: bool,
}

pub fn canonical_data(p: &Poset, limit: usize) -> Result<CanonicalData> {
    let minimal = minimal_t(p, limit)?;
    let rank_hat = p.rank_hat() as u32;
    let degrees: Vec<u32> = minimal.iter().map(|v| v.bottom).collect();
    Ok(CanonicalData {
        type_: minimal.len(),
        gorenstein: minimal.len() == 1,
        level: degrees.iter().all(|&d| d == rank_hat),
        pseudo_gorenstein: degrees.iter().filter(|&&d| d == rank_hat).count() == 1,
        degrees,
        minimal,
    })
}

/// `height(x) + depth(x) = rank` of the completed poset for every `x`.
pub fn pseudo_gorenstein_by_depth(p: &Poset) -> bool {
    let s = p.hat_stats();
    (0..p.len()).all(|x| s.height[x] + s.depth[x] == s.rank_hat)
}

/// Pseudo-Gorenstein property decided three ways (heights and depths,
/// the leading h-coefficient, the lowest-degree minimal maps); a
/// disagreement is an error.
pub fn pseudo_gorenstein(p: &Poset, limit: usize) -> Result<bool> {
    let by_depth = pseudo_gorenstein_by_depth(p);
    let h = hilbert_data(&DistributiveLattice::ideal_lattice(p)?)?;
    let by_h = *h.h.last().unwrap() == 1;
    let by_t = canonical_data(p, limit)?.pseudo_gorenstein;
    if by_depth != by_h || by_depth != by_t {
        return Err(Error::violated(
            "pseudo-Gorenstein characterisations agree",
            format!("depth {by_depth}, h-vector {by_h}, minimal maps {by_t}"),
        ));
    }
    Ok(by_depth)
}

/// Every principal filter `{y >= x}` is pure.
pub fn filters_pure(p: &Poset) -> bool {
    (0..p.len()).all(|x| p.subposet(&p.principal_filter(x)).is_pure())
}

/// Every principal ideal `{y <= x}` is pure.
pub fn ideals_pure(p: &Poset) -> bool {
    (0..p.len()).all(|x| p.subposet(&p.principal_ideal(x)).is_pure())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Miyazaki {
    pub upper: bool,
    pub lower: bool,
}

/// Either purity condition implies the ring is level; a level verdict is
/// demanded from the minimal maps whenever one holds.
pub fn miyazaki_sufficient(p: &Poset, limit: usize) -> Result<Miyazaki> {
    let m = Miyazaki {
        upper: filters_pure(p),
        lower: ideals_pure(p),
    };
    if (m.upper || m.lower) && !canonical_data(p, limit)?.level {
        return Err(Error::violated("purity of principal filters or ideals implies level", format!("{m:?}")));
    }
    Ok(m)
}

/// `height(x) + depth(y) <= rank + 1` in the completed poset whenever `x`
/// covers `y`.
pub fn level_necessary(p: &Poset) -> bool {
    let s = p.hat_stats();
    p.covers()
        .iter()
        .all(|&(y, x)| s.height[x] + s.depth[y] <= s.rank_hat + 1)
}

/// Whenever `x` covers `y`: `depth(y) = depth(x) + 1` or
/// `height(x) = height(y) + 1`.
pub fn level_cover_condition(p: &Poset) -> bool {
    let s = p.hat_stats();
    p.covers()
        .iter()
        .all(|&(y, x)| s.depth[y] == s.depth[x] + 1 || s.height[x] == s.height[y] + 1)
}

#[derive(Clone, Debug, Serialize)]
pub struct PlanarLevel {
    pub inequality: bool,
    pub cover_condition: bool,
    pub level: bool,
}

/// Level test for posets with a regular decomposition into two maximal
/// chains. The inequality, the cover condition and the levelness of the
/// minimal maps must agree; when they hold, every minimal map takes the
/// value 1 at the top of a longest chain of the decomposition.
pub fn level_regular_planar(p: &Poset, limit: usize) -> Result<PlanarLevel> {
    let hp = hyper_planar(p).map_err(|_| Error::NotApplicable("not hyper-planar".into()))?;
    if !hp.regular || hp.width() != Some(2) {
        return Err(Error::NotApplicable(
            "needs a regular decomposition into two chains".into(),
        ));
    }
    let inequality = level_necessary(p);
    let cover_condition = level_cover_condition(p);
    let data = canonical_data(p, limit)?;
    if inequality != cover_condition || inequality != data.level {
        return Err(Error::violated(
            "planar level conditions agree",
            format!("inequality {inequality}, covers {cover_condition}, level {}", data.level),
        ));
    }
    if inequality {
        let d = &hp.decompositions[0];
        let longest = d.iter().max_by_key(|c| c.len()).unwrap();
        let top = *longest.last().unwrap();
        if let Some(v) = data.minimal.iter().find(|v| v.values[top] != 1) {
            return Err(Error::violated(
                "minimal maps equal 1 at the top of a longest chain",
                format!("{v:?}"),
            ));
        }
    }
    Ok(PlanarLevel {
        inequality,
        cover_condition,
        level: data.level,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MultichainComparison {
    pub base: CanonicalData,
    pub product: CanonicalData,
}

/// Compares `P` with `P × chain(r-1)`: height and depth shifts, the
/// embedding of minimal maps, and the type, pseudo-Gorenstein and level
/// relations.
pub fn generalized_comparison(p: &Poset, r: usize, limit: usize) -> Result<MultichainComparison> {
    if r < 2 {
        return Err(Error::NotApplicable(format!("multichain length {r} < 2")));
    }
    let k = r - 1;
    let pr = p.cartesian_product(&Poset::chain(k));
    let s = p.hat_stats();
    let sr = pr.hat_stats();
    for x in 0..p.len() {
        for i in 1..=k {
            let xi = x * k + (i - 1);
            if sr.height[xi] != s.height[x] + i - 1 || sr.depth[xi] != s.depth[x] + (r - i - 1) {
                return Err(Error::violated("product height and depth shift", pr.label(xi).to_string()));
            }
        }
    }
    if !p.is_empty() && sr.rank_hat != s.rank_hat + r - 2 {
        return Err(Error::violated("product rank", format!("{} vs {}", sr.rank_hat, s.rank_hat)));
    }
    let base = canonical_data(p, limit)?;
    let product = canonical_data(&pr, limit)?;
    for v in &base.minimal {
        let mut values = vec![0u32; pr.len()];
        for x in 0..p.len() {
            for i in 1..=k {
                values[x * k + (i - 1)] = v.values[x] + (r - 1 - i) as u32;
            }
        }
        let lifted = TMap {
            values,
            bottom: v.bottom + (r - 2) as u32,
        };
        if !in_t(&pr, &lifted) || !is_minimal_t(&pr, &lifted) {
            return Err(Error::violated("lifted minimal map is minimal", format!("{v:?}")));
        }
    }
    if base.type_ > product.type_ {
        return Err(Error::violated("type does not drop", format!("{} > {}", base.type_, product.type_)));
    }
    if base.pseudo_gorenstein != product.pseudo_gorenstein {
        return Err(Error::violated("pseudo-Gorenstein preserved", String::new()));
    }
    if product.level && !base.level {
        return Err(Error::violated("level descends", String::new()));
    }
    Ok(MultichainComparison { base, product })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extremal {
    pub regularity: usize,
    pub extremal_cm: bool,
    pub nearly_extremal_cm: bool,
    pub extremal_gorenstein: bool,
    pub nearly_extremal_gorenstein: bool,
}

/// Extremal classes for an ideal generated in degree 2, read off from the
/// regularity formula.
pub fn extremal_classification(p: &Poset) -> Extremal {
    let reg = regularity_formula(p);
    let gorenstein = p.is_pure();
    Extremal {
        regularity: reg,
        extremal_cm: reg == 1,
        nearly_extremal_cm: reg == 2,
        extremal_gorenstein: gorenstein && reg == 2,
        nearly_extremal_gorenstein: gorenstein && reg == 3,
    }
}
