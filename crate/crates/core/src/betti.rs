//! Multigraded Betti numbers of Hibi rings from squarefree divisor
//! complexes.
//!
//! For `h` in the Hibi semigroup, `beta_{i,h}(R) = dim H~_{i-1}(Delta_h)`
//! where `Delta_h` is the complex of sets of lattice elements whose
//! generators divide `h`. Homology is computed over the rationals.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hibi::{semigroup_generators, semigroup_member, SemigroupElement};
use crate::invariants::{hilbert_data, HilbertData};
use crate::lattice::DistributiveLattice;
use crate::linalg::{rank, rank_mod_p, SparseRow};

pub const DEFAULT_MAX_VERTICES: usize = 16;
pub const DEFAULT_MAX_FACES: usize = 4_000_000;
pub const DEFAULT_MAX_CANDIDATES: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BettiLimits {
    pub max_vertices: usize,
    /// Faces kept in memory for one complex.
    pub max_faces: usize,
    pub max_candidates: usize,
    /// Shrink each divisor complex by strong collapses before computing
    /// homology.
    pub collapse: bool,
}

impl Default for BettiLimits {
    fn default() -> Self {
        BettiLimits {
            max_vertices: DEFAULT_MAX_VERTICES,
            max_faces: DEFAULT_MAX_FACES,
            max_candidates: DEFAULT_MAX_CANDIDATES,
            collapse: true,
        }
    }
}

impl BettiLimits {
    /// Defaults, with `max_faces` taken from `HIBI_MAX_MEM` when set.
    pub fn from_env() -> BettiLimits {
        let mut l = BettiLimits::default();
        if let Some(v) = std::env::var("HIBI_MAX_MEM").ok().and_then(|s| s.trim().parse().ok()) {
            l.max_faces = v;
        }
        l
    }
}

/// A simplicial complex stored as bitmasks over its vertex list, grouped by
/// face size. `faces[0]` is the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub vertex_count: usize,
    pub faces: Vec<Vec<u64>>,
}

impl SimplicialComplex {
    /// Downward closure of the given faces.
    pub fn from_faces(vertex_count: usize, generators: &[Vec<usize>]) -> SimplicialComplex {
        let mut all = BTreeSet::new();
        all.insert(0u64);
        for g in generators {
            let mask = g.iter().fold(0u64, |m, &v| m | 1 << v);
            let mut sub = mask;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        let mut faces = vec![Vec::new(); vertex_count + 1];
        for m in all {
            faces[m.count_ones() as usize].push(m);
        }
        while faces.len() > 1 && faces.last().unwrap().is_empty() {
            faces.pop();
        }
        SimplicialComplex { vertex_count, faces }
    }

    /// Faces of at most `max_size` vertices below the given facets.
    pub fn from_facet_masks(vertex_count: usize, facets: &[u64], max_size: usize, limit: usize) -> Result<SimplicialComplex> {
        let mut all = std::collections::HashSet::new();
        for &f in facets {
            // subsets of f with at most max_size bits
            let mut sub = f;
            loop {
                if sub.count_ones() as usize <= max_size && all.insert(sub) && all.len() > limit {
                    return Err(Error::bound("collapsed complex faces", all.len(), limit));
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let mut faces = vec![Vec::new(); max_size.min(vertex_count) + 1];
        for m in all {
            faces[m.count_ones() as usize].push(m);
        }
        for level in &mut faces {
            level.sort_unstable();
        }
        while faces.len() > 1 && faces.last().unwrap().is_empty() {
            faces.pop();
        }
        Ok(SimplicialComplex { vertex_count, faces })
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Boundary map from faces of size `k + 1` to faces of size `k`, one
    /// row per larger face.
    fn boundary(&self, k: usize, index: &HashMap<u64, usize>) -> Vec<SparseRow> {
        let Some(upper) = self.faces.get(k + 1) else {
            return Vec::new();
        };
        upper
            .iter()
            .map(|&f| {
                let mut row = Vec::with_capacity(k + 1);
                let mut sign = 1i64;
                let mut rest = f;
                while rest != 0 {
                    let v = rest.trailing_zeros();
                    rest &= rest - 1;
                    row.push((index[&(f & !(1u64 << v))], sign));
                    sign = -sign;
                }
                row
            })
            .collect()
    }
}

/// Dimensions of `H~_{-1} .. H~_{up_to_dim}` over the rationals.
pub fn reduced_homology_dims(c: &SimplicialComplex, up_to_dim: isize) -> Vec<usize> {
    homology_with(c, up_to_dim, rank)
}

/// Rational reduced homology of a complex given with all its faces.
///
/// Ranks are first taken modulo a prime. Those never exceed the rational
/// ranks, so the modular Betti numbers bound the rational ones from above,
/// and both have the same alternating sum. When the modular homology sits
/// in a single degree the two therefore agree; otherwise the exact ranks
/// are computed.
pub fn reduced_homology_full(c: &SimplicialComplex) -> Vec<usize> {
    let top = c.faces.len() as isize - 2;
    let modular = homology_with(c, top, rank_mod_p);
    if modular.iter().filter(|&&d| d > 0).count() <= 1 {
        return modular;
    }
    homology_with(c, top, rank)
}

fn homology_with(c: &SimplicialComplex, up_to_dim: isize, rank: fn(&[SparseRow]) -> usize) -> Vec<usize> {
    if up_to_dim < -1 {
        return Vec::new();
    }
    let top = (up_to_dim + 1) as usize; // largest face size whose homology is asked for
    let count = |size: usize| c.faces.get(size).map_or(0, Vec::len);
    // ranks[size] = rank of the map from faces of size `size` down
    let mut ranks = vec![0usize; top + 2];
    for (size, r) in ranks.iter_mut().enumerate().skip(1) {
        if count(size) == 0 || count(size - 1) == 0 {
            continue;
        }
        let index: HashMap<u64, usize> = c.faces[size - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        *r = rank(&c.boundary(size - 1, &index));
    }
    (0..=top).map(|size| count(size) - ranks[size] - ranks[size + 1]).collect()
}

/// Removes pairs `(s, t)` where `t` is the only face properly containing
/// the face `s` by one vertex, until no such pair is left. The empty face
/// takes part, so a cone collapses to nothing; reduced homology is
/// unchanged.
pub fn elementary_collapse(c: &SimplicialComplex) -> SimplicialComplex {
    let mut cofaces: HashMap<u64, u32> = HashMap::with_capacity(c.face_count());
    for level in &c.faces {
        for &f in level {
            cofaces.insert(f, 0);
        }
    }
    for level in c.faces.iter().skip(1) {
        for &t in level {
            let mut rest = t;
            while rest != 0 {
                let v = rest & rest.wrapping_neg();
                rest &= rest - 1;
                *cofaces.get_mut(&(t & !v)).unwrap() += 1;
            }
        }
    }
    let all_vertices = (0..c.vertex_count).fold(0u64, |m, v| m | 1 << v);
    let mut queue: Vec<u64> = cofaces.iter().filter(|(_, &k)| k == 1).map(|(&f, _)| f).collect();
    queue.sort_unstable();
    while let Some(s) = queue.pop() {
        if cofaces.get(&s) != Some(&1) {
            continue;
        }
        let mut free = all_vertices & !s;
        let mut t = None;
        while free != 0 {
            let v = free & free.wrapping_neg();
            free &= free - 1;
            if cofaces.contains_key(&(s | v)) {
                t = Some(s | v);
                break;
            }
        }
        let t = t.expect("a free face has a coface");
        cofaces.remove(&s);
        cofaces.remove(&t);
        for face in [t, s] {
            let mut rest = face;
            while rest != 0 {
                let v = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let below = face & !v;
                if let Some(k) = cofaces.get_mut(&below) {
                    *k -= 1;
                    if *k == 1 {
                        queue.push(below);
                    }
                }
            }
        }
    }
    let top = cofaces.keys().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let mut faces = vec![Vec::new(); top + 1];
    for &f in cofaces.keys() {
        faces[f.count_ones() as usize].push(f);
    }
    for level in &mut faces {
        level.sort_unstable();
    }
    SimplicialComplex {
        vertex_count: c.vertex_count,
        faces,
    }
}

/// Deletes vertices `v` for which some other vertex lies in every facet
/// containing `v`, until none is left. Each deletion is a strong collapse,
/// so the homotopy type is unchanged.
pub fn strong_collapse_core(mut facets: Vec<u64>) -> Vec<u64> {
    loop {
        let support = facets.iter().fold(0u64, |a, &f| a | f);
        let mut removed = false;
        let mut rest = support;
        while rest != 0 {
            let v = 1u64 << rest.trailing_zeros();
            rest &= rest - 1;
            let common = facets.iter().filter(|&&f| f & v != 0).fold(u64::MAX, |a, &f| a & f);
            if common & !v == 0 {
                continue;
            }
            let mut next: Vec<u64> = facets.iter().map(|&f| f & !v).collect();
            next.sort_unstable_by_key(|f| std::cmp::Reverse(f.count_ones()));
            let mut kept: Vec<u64> = Vec::with_capacity(next.len());
            for f in next {
                if !kept.iter().any(|&k| f & !k == 0) {
                    kept.push(f);
                }
            }
            facets = kept;
            removed = true;
            break;
        }
        if !removed {
            return facets;
        }
    }
}

/// `Delta_h` for a lattice `l` and semigroup element `h`.
#[derive(Clone, Debug)]
pub struct DivisorComplex {
    pub target: SemigroupElement,
    /// Lattice elements `a` with `h - e(a)` in the semigroup.
    pub vertices: Vec<usize>,
    generators: Vec<SemigroupElement>,
}

pub fn divisor_complex(l: &DistributiveLattice, h: &SemigroupElement) -> Result<DivisorComplex> {
    let p = l.ji_poset();
    if !semigroup_member(p, h) {
        return Err(Error::NotInSemigroup);
    }
    let generators = semigroup_generators(l);
    let vertices = (0..l.len())
        .filter(|&a| h.checked_sub(&generators[a]).is_some_and(|r| semigroup_member(p, &r)))
        .collect();
    Ok(DivisorComplex {
        target: h.clone(),
        vertices,
        generators,
    })
}

impl DivisorComplex {
    pub fn is_face(&self, l: &DistributiveLattice, elements: &[usize]) -> bool {
        let mut rest = self.target.clone();
        for &a in elements {
            match rest.checked_sub(&self.generators[a]) {
                Some(r) => rest = r,
                None => return false,
            }
        }
        let distinct: BTreeSet<_> = elements.iter().collect();
        distinct.len() == elements.len() && semigroup_member(l.ji_poset(), &rest)
    }

    /// Maximal faces as bitmasks over `vertices`.
    pub fn facets(&self, l: &DistributiveLattice, limits: &BettiLimits) -> Result<Vec<u64>> {
        let nv = self.vertices.len();
        if nv > limits.max_vertices.min(64) {
            return Err(Error::bound("divisor complex vertices", nv, limits.max_vertices.min(64)));
        }
        let p = l.ji_poset();
        let covers = p.covers();
        let masks: Vec<u64> = self.vertices.iter().map(|&a| l.ideal_mask(a)).collect();
        // covers leaving each ideal: subtracting it must keep them strict
        let leaving: Vec<Vec<(usize, usize)>> = masks
            .iter()
            .map(|&m| covers.iter().copied().filter(|&(x, y)| m >> x & 1 == 1 && m >> y & 1 == 0).collect())
            .collect();
        let mut search = FacetSearch {
            n: p.len(),
            masks,
            leaving,
            degree: self.target.degree as i64,
            weights: self.target.weights.iter().map(|&w| w as i64).collect(),
            facets: Vec::new(),
            visited: 0,
            limit: limits.max_faces,
        };
        search.go(0, 0)?;
        let mut facets = search.facets;
        facets.sort_unstable();
        Ok(facets)
    }

    /// Faces with at most `max_size` vertices.
    pub fn complex(&self, l: &DistributiveLattice, max_size: usize, limits: &BettiLimits) -> Result<SimplicialComplex> {
        let nv = self.vertices.len();
        if nv > limits.max_vertices.min(64) {
            return Err(Error::bound("divisor complex vertices", nv, limits.max_vertices.min(64)));
        }
        let p = l.ji_poset();
        let gens: Vec<&SemigroupElement> = self.vertices.iter().map(|&a| &self.generators[a]).collect();
        let mut faces = vec![Vec::new(); max_size.min(nv) + 1];
        let mut total = 0usize;
        // depth-first over increasing vertex positions
        let mut stack: Vec<(u64, usize, SemigroupElement)> = vec![(0, 0, self.target.clone())];
        while let Some((mask, next, rest)) = stack.pop() {
            let size = mask.count_ones() as usize;
            faces[size].push(mask);
            total += 1;
            if total > limits.max_faces {
                return Err(Error::bound("divisor complex faces", total, limits.max_faces));
            }
            if size == faces.len() - 1 {
                continue;
            }
            for v in next..nv {
                if let Some(r) = rest.checked_sub(gens[v]) {
                    if semigroup_member(p, &r) {
                        stack.push((mask | 1 << v, v + 1, r));
                    }
                }
            }
        }
        for level in &mut faces {
            level.sort_unstable();
        }
        while faces.len() > 1 && faces.last().unwrap().is_empty() {
            faces.pop();
        }
        Ok(SimplicialComplex {
            vertex_count: nv,
            faces,
        })
    }
}

struct FacetSearch {
    n: usize,
    masks: Vec<u64>,
    leaving: Vec<Vec<(usize, usize)>>,
    degree: i64,
    weights: Vec<i64>,
    facets: Vec<u64>,
    visited: usize,
    limit: usize,
}

impl FacetSearch {
    /// Whether the remaining element stays in the semigroup after removing
    /// vertex `v`.
    fn fits(&self, v: usize) -> bool {
        let m = self.masks[v];
        self.degree >= 1
            && (0..self.n).all(|x| {
                if m >> x & 1 == 1 {
                    self.weights[x] >= 1
                } else {
                    self.weights[x] < self.degree
                }
            })
            && self.leaving[v].iter().all(|&(x, y)| self.weights[x] > self.weights[y])
    }

    fn shift(&mut self, v: usize, by: i64) {
        self.degree += by;
        let m = self.masks[v];
        for x in 0..self.n {
            if m >> x & 1 == 1 {
                self.weights[x] += by;
            }
        }
    }

    fn go(&mut self, mask: u64, next: usize) -> Result<()> {
        self.visited += 1;
        if self.visited > self.limit {
            return Err(Error::bound("divisor complex faces", self.visited, self.limit));
        }
        let mut maximal = true;
        for v in 0..self.masks.len() {
            if mask >> v & 1 == 1 || !self.fits(v) {
                continue;
            }
            maximal = false;
            if v >= next {
                self.shift(v, -1);
                self.go(mask | 1 << v, v + 1)?;
                self.shift(v, 1);
            }
        }
        if maximal {
            self.facets.push(mask);
        }
        Ok(())
    }
}

/// How candidate degrees `h` are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Candidates {
    /// Sums of distinct lattice elements whose order complex is not a cone.
    Subsets,
    /// Every semigroup element of bounded degree.
    AllDegrees,
}

#[derive(Clone, Debug, Serialize)]
pub struct BettiTable {
    pub max_i: usize,
    pub max_j: usize,
    /// Nonzero `beta_{i,h}(R)`.
    pub multigraded: BTreeMap<(usize, SemigroupElement), u64>,
    /// Nonzero `beta_{i,j}(R)`.
    pub graded: BTreeMap<(usize, usize), u64>,
    pub reg: usize,
    pub projdim: usize,
    /// Every possibly nonzero entry lies within the bounds.
    pub complete: bool,
}

impl BettiTable {
    pub fn ring(&self, i: usize, j: usize) -> u64 {
        self.graded.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `beta_{i,j}` of the Hibi ideal.
    pub fn ideal(&self, i: usize, j: usize) -> u64 {
        self.ring(i + 1, j)
    }

    /// Nonzero ideal entries as `(i, j, value)`.
    pub fn ideal_entries(&self) -> Vec<(usize, usize, u64)> {
        self.graded
            .iter()
            .filter(|(&(i, _), _)| i >= 1)
            .map(|(&(i, j), &v)| (i - 1, j, v))
            .collect()
    }

    pub fn total(&self, i: usize) -> u64 {
        self.graded.iter().filter(|(&(a, _), _)| a == i).map(|(_, &v)| v).sum()
    }

    fn covers(&self, i: usize, j: usize) -> bool {
        i <= self.max_i && j <= self.max_j
    }
}

pub fn subset_candidates(l: &DistributiveLattice, max_j: usize, limit: usize) -> Result<BTreeSet<SemigroupElement>> {
    let lat = l.lattice();
    let n = l.len();
    let gens = semigroup_generators(l);
    let mut out = BTreeSet::new();
    let mut visited = 0usize;
    let mut chosen: Vec<usize> = Vec::new();

    fn is_cone(lat: &crate::lattice::Lattice, u: &[usize]) -> bool {
        u.iter().any(|&a| u.iter().all(|&b| lat.leq(a, b) || lat.leq(b, a)))
    }

    fn go(
        start: usize,
        n: usize,
        max_j: usize,
        lat: &crate::lattice::Lattice,
        gens: &[SemigroupElement],
        chosen: &mut Vec<usize>,
        out: &mut BTreeSet<SemigroupElement>,
        visited: &mut usize,
        limit: usize,
    ) -> Result<()> {
        *visited += 1;
        if *visited > limit {
            return Err(Error::bound("Betti candidate subsets", *visited, limit));
        }
        if chosen.len() >= 2 && !is_cone(lat, chosen) {
            let h = chosen
                .iter()
                .fold(SemigroupElement::zero(gens[0].weights.len()), |acc, &a| acc.add(&gens[a]));
            out.insert(h);
        }
        if chosen.len() == max_j {
            return Ok(());
        }
        for a in start..n {
            chosen.push(a);
            go(a + 1, n, max_j, lat, gens, chosen, out, visited, limit)?;
            chosen.pop();
        }
        Ok(())
    }

    go(0, n, max_j, lat, &gens, &mut chosen, &mut out, &mut visited, limit)?;
    Ok(out)
}

/// All semigroup elements of degree `2..=max_j`.
pub fn all_candidates(l: &DistributiveLattice, max_j: usize, limit: usize) -> Result<BTreeSet<SemigroupElement>> {
    let p = l.ji_poset();
    let n = p.len();
    let ext = p.linear_extension();
    let mut out = BTreeSet::new();
    for degree in 2..=max_j as u32 {
        // assign weights along a linear extension, bounded by lower covers
        let mut weights = vec![0u32; n];
        fn go(
            k: usize,
            ext: &[usize],
            p: &crate::poset::Poset,
            degree: u32,
            weights: &mut Vec<u32>,
            out: &mut BTreeSet<SemigroupElement>,
            limit: usize,
        ) -> Result<()> {
            if k == ext.len() {
                if out.len() >= limit {
                    return Err(Error::bound("semigroup elements", out.len(), limit));
                }
                out.insert(SemigroupElement {
                    degree,
                    weights: weights.clone(),
                });
                return Ok(());
            }
            let x = ext[k];
            let hi = p.lower_covers(x).iter().map(|&y| weights[y]).min().unwrap_or(degree);
            for w in 0..=hi {
                weights[x] = w;
                go(k + 1, ext, p, degree, weights, out, limit)?;
            }
            Ok(())
        }
        go(0, &ext, p, degree, &mut weights, &mut out, limit)?;
    }
    Ok(out)
}

pub fn betti_table(l: &DistributiveLattice, max_i: usize, max_j: usize) -> Result<BettiTable> {
    betti_table_with(l, max_i, max_j, Candidates::Subsets, &BettiLimits::from_env())
}

pub fn betti_table_with(
    l: &DistributiveLattice,
    max_i: usize,
    max_j: usize,
    mode: Candidates,
    limits: &BettiLimits,
) -> Result<BettiTable> {
    let hd = hilbert_data(l)?;
    let candidates = match mode {
        Candidates::Subsets => subset_candidates(l, max_j, limits.max_candidates)?,
        Candidates::AllDegrees => all_candidates(l, max_j, limits.max_candidates)?,
    };
    let candidates: Vec<SemigroupElement> = candidates.into_iter().collect();
    let computed: Vec<Vec<(usize, u64)>> = candidates
        .par_iter()
        .map(|h| -> Result<Vec<(usize, u64)>> {
            let j = h.degree as usize;
            // beta_{i,h} = dim H~_{i-1}, needed for 1 <= i <= min(max_i, j - 1)
            let top_i = max_i.min(j.saturating_sub(1));
            if top_i == 0 {
                return Ok(Vec::new());
            }
            let dc = divisor_complex(l, h)?;
            let dims = if limits.collapse {
                let core = strong_collapse_core(dc.facets(l, limits)?);
                if core.len() == 1 && core[0].count_ones() <= 1 && h.degree > 0 {
                    return Ok(Vec::new());
                }
                let c = SimplicialComplex::from_facet_masks(dc.vertices.len(), &core, 64, limits.max_faces)?;
                let mut d = reduced_homology_full(&elementary_collapse(&c));
                d.resize(d.len().max(top_i + 1), 0);
                d
            } else {
                let c = dc.complex(l, top_i + 1, limits)?;
                reduced_homology_dims(&c, top_i as isize - 1)
            };
            // dims[k + 1] = dim H~_k
            Ok((1..=top_i).filter(|&i| dims[i] > 0).map(|i| (i, dims[i] as u64)).collect())
        })
        .collect::<Result<_>>()?;
    let mut multigraded = BTreeMap::new();
    let mut graded = BTreeMap::new();
    let n = l.ji_poset().len();
    multigraded.insert((0, SemigroupElement::zero(n)), 1);
    graded.insert((0, 0), 1);
    for (h, entries) in candidates.iter().zip(computed) {
        for (i, v) in entries {
            multigraded.insert((i, h.clone()), v);
            *graded.entry((i, h.degree as usize)).or_insert(0) += v;
        }
    }
    Ok(BettiTable {
        max_i,
        max_j,
        multigraded,
        graded,
        reg: hd.reg,
        projdim: hd.projdim,
        complete: max_i >= hd.projdim && max_j >= hd.projdim + hd.reg,
    })
}

/// Bounds that make a table complete.
pub fn complete_bounds(l: &DistributiveLattice) -> Result<(usize, usize)> {
    let hd = hilbert_data(l)?;
    Ok((hd.projdim, hd.projdim + hd.reg))
}

/// A verdict on an observed table; `complete` is false when entries outside
/// the bounds could change it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub complete: bool,
}

/// `beta_{1,j}(I) = 0` for every `j >= 4`.
pub fn linearly_related_observed(t: &BettiTable) -> Verdict {
    let holds = (4..=t.max_j).all(|j| t.ideal(1, j) == 0);
    let needed = t.reg + 2; // beta_{1,j}(I) vanishes beyond j = reg(I) + 1
    Verdict {
        holds,
        complete: !holds || t.complete || t.covers(2, needed),
    }
}

/// Every homological degree of the ideal has one shift.
pub fn pure_resolution_observed(t: &BettiTable) -> Verdict {
    let mut shifts: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for (i, j, _) in t.ideal_entries() {
        shifts.entry(i).or_default().insert(j);
    }
    let holds = shifts.values().all(|s| s.len() == 1);
    Verdict {
        holds,
        complete: !holds || t.complete,
    }
}

/// `beta_{1,j}(I) = 0` for `j > 4`, which holds for any ideal with a
/// quadratic Gröbner basis.
pub fn quadratic_gb_syzygy_bound(t: &BettiTable) -> Result<()> {
    for j in 5..=t.max_j {
        if t.ideal(1, j) != 0 {
            return Err(Error::violated("quadratic Gröbner basis syzygy bound", format!("beta_1,{j}(I) = {}", t.ideal(1, j))));
        }
    }
    Ok(())
}

/// Checks that tie a Betti table to the lattice it came from.
pub fn check_table(l: &DistributiveLattice, t: &BettiTable, hd: &HilbertData) -> Result<()> {
    let lat = l.lattice();
    let n = l.len();
    let incomparable = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !lat.leq(a, b) && !lat.leq(b, a))
        .count() as u64;
    if t.max_i >= 1 && t.max_j >= 2 {
        if t.ring(1, 2) != incomparable {
            return Err(Error::violated("quadratic generators", format!("{} vs {incomparable}", t.ring(1, 2))));
        }
        if let Some(j) = (3..=t.max_j).find(|&j| t.ring(1, j) != 0) {
            return Err(Error::violated("generators in degree 2", format!("degree {j}")));
        }
    }
    if let Some((&(i, j), _)) = t.graded.iter().find(|(&(i, j), _)| j < i + (i > 0) as usize || j > i + hd.reg) {
        return Err(Error::violated("Betti shifts within regularity", format!("beta_{i},{j}")));
    }
    if !t.complete {
        return Ok(());
    }
    let max_shift = t.graded.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
    if max_shift != hd.reg {
        return Err(Error::violated("regularity from table", format!("{max_shift} vs {}", hd.reg)));
    }
    let top = t.graded.keys().map(|&(i, _)| i).max().unwrap_or(0);
    if top != hd.projdim {
        return Err(Error::violated("projective dimension from table", format!("{top} vs {}", hd.projdim)));
    }
    // sum (-1)^i beta_{i,j} t^j = h(t) (1 - t)^{|L| - dim}
    let codim = n - hd.dim;
    let mut rhs: Vec<i128> = hd.h.iter().map(|&x| x as i128).collect();
    for _ in 0..codim {
        let mut next = vec![0i128; rhs.len() + 1];
        for (k, &c) in rhs.iter().enumerate() {
            next[k] += c;
            next[k + 1] -= c;
        }
        rhs = next;
    }
    let mut lhs = vec![0i128; rhs.len().max(t.max_j + 1)];
    for (&(i, j), &v) in &t.graded {
        lhs[j] += if i % 2 == 0 { v as i128 } else { -(v as i128) };
    }
    rhs.resize(lhs.len(), 0);
    if lhs != rhs {
        return Err(Error::violated("Betti numbers match the Hilbert series", format!("{lhs:?} vs {rhs:?}")));
    }
    let pure = l.ji_poset().is_pure();
    if pure {
        for i in 0..=hd.projdim {
            if t.total(i) != t.total(hd.projdim - i) {
                return Err(Error::violated("Gorenstein Betti symmetry", format!("i = {i}")));
            }
        }
    }
    let top_entry = t
        .graded
        .iter()
        .filter(|(&(i, _), _)| i == hd.projdim)
        .max_by_key(|(&(_, j), _)| j)
        .map(|(_, &v)| v)
        .unwrap_or(0);
    let pseudo = *hd.h.last().unwrap() == 1;
    if (top_entry == 1) != pseudo {
        return Err(Error::violated("pseudo-Gorenstein top Betti number", format!("top {top_entry}")));
    }
    Ok(())
}
