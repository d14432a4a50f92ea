//! Finite posets stored as a dense order matrix plus cover lists.
//!
//! Heights and depths come in two flavours: `heights`/`depths` count edges
//! inside `P` (a minimal element has height 0), while [`HatStats`] measures
//! in `P` with a new bottom and top adjoined, so a minimal element of `P`
//! has height 1 there. The adjoined points are never stored.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    n: usize,
    leq: Vec<bool>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

/// Heights, depths and rank measured after adjoining a bottom and a top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatStats {
    pub height: Vec<usize>,
    pub depth: Vec<usize>,
    pub rank_hat: usize,
}

fn check_labels(labels: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl Poset {
    /// Builds the poset generated by `relations` (pairs `(a, b)` meaning
    /// `a < b`); the transitive closure is taken.
    pub fn from_relations(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Poset> {
        check_labels(&labels)?;
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in relations {
            assert!(a < n && b < n, "relation index out of range");
            if a == b {
                continue;
            }
            succ[a].push(b);
            indeg[b] += 1;
        }
        // Kahn's algorithm gives a topological order or exposes a cycle.
        let mut order = Vec::with_capacity(n);
        let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        while let Some(&x) = ready.iter().next() {
            ready.remove(&x);
            order.push(x);
            for &y in &succ[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    ready.insert(y);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&i| indeg[i] > 0).unwrap();
            return Err(Error::CycleDetected(labels[stuck].clone()));
        }
        let mut leq = vec![false; n * n];
        for &x in order.iter().rev() {
            leq[x * n + x] = true;
            for &y in &succ[x] {
                for z in 0..n {
                    if leq[y * n + z] {
                        leq[x * n + z] = true;
                    }
                }
            }
        }
        Ok(Poset::from_leq_trusted(labels, leq))
    }

    /// Builds a poset from label strings and cover pairs `(a, b)` with `b`
    /// covering `a`.
    pub fn from_labeled_covers(labels: &[&str], covers: &[(&str, &str)]) -> Result<Poset> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        check_labels(&labels)?;
        let idx: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut rel = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            let ia = *idx.get(a).ok_or_else(|| Error::UnknownLabel(a.to_string()))?;
            let ib = *idx.get(b).ok_or_else(|| Error::UnknownLabel(b.to_string()))?;
            rel.push((ia, ib));
        }
        Poset::from_relations(labels, &rel)
    }

    /// Builds from a full order matrix that is already reflexive,
    /// antisymmetric and transitive.
    pub(crate) fn from_leq_trusted(labels: Vec<String>, leq: Vec<bool>) -> Poset {
        let n = labels.len();
        debug_assert_eq!(leq.len(), n * n);
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..n {
                if x == y || !leq[x * n + y] {
                    continue;
                }
                let covered = !(0..n)
                    .any(|z| z != x && z != y && leq[x * n + z] && leq[z * n + y]);
                if covered {
                    upper[x].push(y);
                    lower[y].push(x);
                }
            }
        }
        Poset {
            labels,
            n,
            leq,
            upper,
            lower,
        }
    }

    /// Builds from an order matrix together with its cover lists, both
    /// already known to be correct.
    pub(crate) fn from_parts_trusted(
        labels: Vec<String>,
        leq: Vec<bool>,
        upper: Vec<Vec<usize>>,
    ) -> Poset {
        let n = labels.len();
        let mut lower = vec![Vec::new(); n];
        for (x, ups) in upper.iter().enumerate() {
            for &y in ups {
                lower[y].push(x);
            }
        }
        for l in &mut lower {
            l.sort_unstable();
        }
        Poset {
            labels,
            n,
            leq,
            upper,
            lower,
        }
    }

    /// Validates an arbitrary relation matrix as a partial order.
    pub fn from_leq(labels: Vec<String>, leq: Vec<bool>) -> Result<Poset> {
        check_labels(&labels)?;
        let n = labels.len();
        assert_eq!(leq.len(), n * n, "order matrix has the wrong size");
        for x in 0..n {
            if !leq[x * n + x] {
                return Err(Error::violated("reflexive", labels[x].clone()));
            }
            for y in 0..n {
                if x != y && leq[x * n + y] && leq[y * n + x] {
                    return Err(Error::CycleDetected(labels[x].clone()));
                }
                for z in 0..n {
                    if leq[x * n + y] && leq[y * n + z] && !leq[x * n + z] {
                        return Err(Error::violated(
                            "transitive",
                            format!("{} {} {}", labels[x], labels[y], labels[z]),
                        ));
                    }
                }
            }
        }
        Ok(Poset::from_leq_trusted(labels, leq))
    }

    pub fn chain(k: usize) -> Poset {
        let labels = (1..=k).map(|i| i.to_string()).collect();
        let rel: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
        Poset::from_relations(labels, &rel).expect("chain")
    }

    pub fn antichain(k: usize) -> Poset {
        let labels = (1..=k).map(|i| i.to_string()).collect();
        Poset::from_relations(labels, &[]).expect("antichain")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    /// All cover pairs `(x, y)` with `y` covering `x`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for &y in &self.upper[x] {
                out.push((x, y));
            }
        }
        out
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.lower[x].is_empty()).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.upper[x].is_empty()).collect()
    }

    /// Smallest-index-first topological order.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut indeg: Vec<usize> = (0..self.n).map(|x| self.lower[x].len()).collect();
        let mut ready: BTreeSet<usize> = (0..self.n).filter(|&x| indeg[x] == 0).collect();
        let mut out = Vec::with_capacity(self.n);
        while let Some(&x) = ready.iter().next() {
            ready.remove(&x);
            out.push(x);
            for &y in &self.upper[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    ready.insert(y);
                }
            }
        }
        out
    }

    /// Length of the longest chain ending at each element (minimal = 0).
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.n];
        for x in self.linear_extension() {
            for &y in &self.lower[x] {
                h[x] = h[x].max(h[y] + 1);
            }
        }
        h
    }

    /// Length of the longest chain starting at each element (maximal = 0).
    pub fn depths(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for x in self.linear_extension().into_iter().rev() {
            for &y in &self.upper[x] {
                d[x] = d[x].max(d[y] + 1);
            }
        }
        d
    }

    /// Maximal chain length minus one; 0 for the empty poset.
    pub fn rank(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    /// Rank of the poset with a bottom and a top adjoined.
    pub fn rank_hat(&self) -> usize {
        if self.n == 0 {
            1
        } else {
            self.rank() + 2
        }
    }

    pub fn hat_stats(&self) -> HatStats {
        HatStats {
            height: self.heights().into_iter().map(|h| h + 1).collect(),
            depth: self.depths().into_iter().map(|d| d + 1).collect(),
            rank_hat: self.rank_hat(),
        }
    }

    /// True when all maximal chains have the same length.
    pub fn is_pure(&self) -> bool {
        let h = self.heights();
        let r = self.rank();
        (0..self.n).all(|x| {
            self.upper[x].iter().all(|&y| h[y] == h[x] + 1) && (!self.upper[x].is_empty() || h[x] == r)
        })
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.comparable(x, y)))
    }

    /// Elements `y >= x`.
    pub fn principal_filter(&self, x: usize) -> Vec<usize> {
        (0..self.n).filter(|&y| self.leq(x, y)).collect()
    }

    /// Elements `y <= x`.
    pub fn principal_ideal(&self, x: usize) -> Vec<usize> {
        (0..self.n).filter(|&y| self.leq(y, x)).collect()
    }

    /// Induced subposet on `elems`, kept in the given order.
    pub fn subposet(&self, elems: &[usize]) -> Poset {
        let m = elems.len();
        let labels = elems.iter().map(|&x| self.labels[x].clone()).collect();
        let mut leq = vec![false; m * m];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                leq[i * m + j] = self.leq(x, y);
            }
        }
        Poset::from_leq_trusted(labels, leq)
    }

    pub fn dual(&self) -> Poset {
        let n = self.n;
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = self.leq(y, x);
            }
        }
        Poset::from_parts_trusted(self.labels.clone(), leq, self.lower.clone())
    }

    fn disjoint_labels(&self, other: &Poset) -> Result<Vec<String>> {
        let mine: BTreeSet<&str> = self.labels.iter().map(|s| s.as_str()).collect();
        for l in &other.labels {
            if mine.contains(l.as_str()) {
                return Err(Error::LabelClash(l.clone()));
            }
        }
        Ok(self.labels.iter().chain(other.labels.iter()).cloned().collect())
    }

    fn sum_with(&self, other: &Poset, ordinal: bool) -> Result<Poset> {
        let labels = self.disjoint_labels(other)?;
        let (a, b) = (self.n, other.n);
        let n = a + b;
        let mut leq = vec![false; n * n];
        for x in 0..a {
            for y in 0..a {
                leq[x * n + y] = self.leq(x, y);
            }
            if ordinal {
                for y in 0..b {
                    leq[x * n + a + y] = true;
                }
            }
        }
        for x in 0..b {
            for y in 0..b {
                leq[(a + x) * n + a + y] = other.leq(x, y);
            }
        }
        Ok(Poset::from_leq_trusted(labels, leq))
    }

    /// Disjoint union with no relations between the summands.
    pub fn direct_sum(&self, other: &Poset) -> Result<Poset> {
        self.sum_with(other, false)
    }

    /// Every element of `self` below every element of `other`.
    pub fn ordinal_sum(&self, other: &Poset) -> Result<Poset> {
        self.sum_with(other, true)
    }

    /// Componentwise order on pairs; element `(x, y)` has index
    /// `x * other.len() + y` and label `(x,y)`.
    pub fn cartesian_product(&self, other: &Poset) -> Poset {
        let (a, b) = (self.n, other.n);
        let n = a * b;
        let mut labels = Vec::with_capacity(n);
        for x in 0..a {
            for y in 0..b {
                labels.push(format!("({},{})", self.labels[x], other.labels[y]));
            }
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.leq(i / b, j / b) && other.leq(i % b, j % b);
            }
        }
        Poset::from_leq_trusted(labels, leq)
    }

    /// Closed interval `[lo, hi]`.
    pub fn interval(&self, lo: usize, hi: usize) -> Result<Poset> {
        if !self.leq(lo, hi) {
            return Err(Error::NotComparable(
                self.labels[lo].clone(),
                self.labels[hi].clone(),
            ));
        }
        let elems: Vec<usize> = (0..self.n)
            .filter(|&z| self.leq(lo, z) && self.leq(z, hi))
            .collect();
        Ok(self.subposet(&elems))
    }

    /// All maximal chains, each listed bottom to top.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        fn walk(p: &Poset, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let x = *path.last().unwrap();
            if p.upper[x].is_empty() {
                out.push(path.clone());
                return;
            }
            for &y in &p.upper[x] {
                path.push(y);
                walk(p, path, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        for m in self.minimal() {
            walk(self, &mut vec![m], &mut out);
        }
        out
    }

    /// Every order ideal as a bitmask, in a fixed enumeration order.
    pub fn order_ideals(&self, limit: usize) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::bound("poset size for ideal enumeration", self.n, 64));
        }
        let ext = self.linear_extension();
        let lower_masks: Vec<u64> = (0..self.n)
            .map(|x| self.lower[x].iter().fold(0u64, |m, &y| m | (1u64 << y)))
            .collect();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 0u64)];
        while let Some((k, mask)) = stack.pop() {
            if k == ext.len() {
                out.push(mask);
                if out.len() > limit {
                    return Err(Error::bound("number of order ideals", out.len(), limit));
                }
                continue;
            }
            let x = ext[k];
            stack.push((k + 1, mask));
            if lower_masks[x] & !mask == 0 {
                stack.push((k + 1, mask | (1u64 << x)));
            }
        }
        Ok(out)
    }

    /// Down-closure of a set given as a bitmask.
    pub fn down_closure(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        for x in 0..self.n {
            if mask >> x & 1 == 1 {
                for y in 0..self.n {
                    if self.leq(y, x) {
                        out |= 1u64 << y;
                    }
                }
            }
        }
        out
    }

    /// Invariant used to restrict isomorphism and canonical-form searches.
    fn signatures(&self) -> Vec<(usize, usize, usize, usize)> {
        let h = self.heights();
        let d = self.depths();
        (0..self.n)
            .map(|x| {
                let below = (0..self.n).filter(|&y| self.lt(y, x)).count();
                let above = (0..self.n).filter(|&y| self.lt(x, y)).count();
                (h[x], d[x], below, above)
            })
            .collect()
    }
}

/// Order-isomorphism `P -> Q` as an index map, found by backtracking.
pub fn find_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.len() != q.len() {
        return None;
    }
    let sp = p.signatures();
    let sq = q.signatures();
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let order = p.linear_extension();
    let mut image = vec![usize::MAX; p.len()];
    let mut used = vec![false; q.len()];

    fn go(
        k: usize,
        order: &[usize],
        p: &Poset,
        q: &Poset,
        sp: &[(usize, usize, usize, usize)],
        sq: &[(usize, usize, usize, usize)],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        for y in 0..q.len() {
            if used[y] || sp[x] != sq[y] {
                continue;
            }
            let consistent = order[..k].iter().all(|&z| {
                let w = image[z];
                p.leq(z, x) == q.leq(w, y) && p.leq(x, z) == q.leq(y, w)
            });
            if !consistent {
                continue;
            }
            image[x] = y;
            used[y] = true;
            if go(k + 1, order, p, q, sp, sq, image, used) {
                return true;
            }
            used[y] = false;
            image[x] = usize::MAX;
        }
        false
    }

    if go(0, &order, p, q, &sp, &sq, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

/// Checks that `map` is a bijection preserving and reflecting the order.
pub fn is_order_isomorphism(p: &Poset, q: &Poset, map: &[usize]) -> bool {
    if p.len() != q.len() || map.len() != p.len() {
        return false;
    }
    let mut seen = vec![false; q.len()];
    for &y in map {
        if y >= q.len() || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    (0..p.len()).all(|x| (0..p.len()).all(|y| p.leq(x, y) == q.leq(map[x], map[y])))
}

/// Canonical code of the isomorphism class.
///
/// Elements are first grouped by an order invariant; within groups the
/// permutation giving the lexicographically least strict-order bit string
/// is chosen by branch and bound.
pub fn canonical_form(p: &Poset) -> Vec<u8> {
    let n = p.len();
    let sig = p.signatures();
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by_key(|&x| (sig[x], x));
    let slot_sig: Vec<_> = slots.iter().map(|&x| sig[x]).collect();

    // twins are interchangeable, so only the smallest unused one is tried
    let twin_of: Vec<Option<usize>> = (0..n)
        .map(|x| {
            (0..x).find(|&y| {
                (0..n).all(|z| z == x || z == y || (p.lt(z, x) == p.lt(z, y) && p.lt(x, z) == p.lt(y, z)))
                    && !p.comparable(x, y)
            })
        })
        .collect();

    struct Search<'a> {
        p: &'a Poset,
        sig: Vec<(usize, usize, usize, usize)>,
        slot_sig: Vec<(usize, usize, usize, usize)>,
        twin_of: Vec<Option<usize>>,
        best: Option<Vec<u8>>,
        placed: Vec<usize>,
        used: Vec<bool>,
        code: Vec<u8>,
    }

    impl Search<'_> {
        fn go(&mut self, pos: usize, tied: bool) {
            let n = self.p.len();
            if pos == n {
                if self.best.as_ref().is_none_or(|b| self.code < *b) {
                    self.best = Some(self.code.clone());
                }
                return;
            }
            for x in 0..n {
                if self.used[x] || self.sig[x] != self.slot_sig[pos] {
                    continue;
                }
                if let Some(t) = self.twin_of[x] {
                    if !self.used[t] {
                        continue;
                    }
                }
                let start = self.code.len();
                for i in 0..pos {
                    let y = self.placed[i];
                    self.code.push(self.p.lt(y, x) as u8);
                    self.code.push(self.p.lt(x, y) as u8);
                }
                let mut still_tied = tied;
                let mut worse = false;
                if tied {
                    if let Some(best) = &self.best {
                        match self.code[start..].cmp(&best[start..self.code.len()]) {
                            std::cmp::Ordering::Less => still_tied = false,
                            std::cmp::Ordering::Greater => worse = true,
                            std::cmp::Ordering::Equal => {}
                        }
                    } else {
                        still_tied = false;
                    }
                }
                if !worse {
                    self.used[x] = true;
                    self.placed.push(x);
                    self.go(pos + 1, still_tied);
                    self.placed.pop();
                    self.used[x] = false;
                }
                self.code.truncate(start);
            }
        }
    }

    let mut s = Search {
        p,
        sig,
        slot_sig: slot_sig.clone(),
        twin_of,
        best: None,
        placed: Vec::new(),
        used: vec![false; n],
        code: Vec::new(),
    };
    s.go(0, true);
    let mut out = Vec::with_capacity(4 * n + n * n);
    for t in &slot_sig {
        out.extend_from_slice(&[t.0 as u8, t.1 as u8, t.2 as u8, t.3 as u8]);
    }
    out.extend(s.best.unwrap_or_default());
    out
}

/// Rebuilds the poset described by a canonical code, labelled `1..n`.
fn poset_from_code(n: usize, code: &[u8]) -> Poset {
    let bits = &code[4 * n..];
    let mut rel = Vec::new();
    let mut k = 0;
    for pos in 0..n {
        for i in 0..pos {
            if bits[k] == 1 {
                rel.push((i, pos));
            }
            if bits[k + 1] == 1 {
                rel.push((pos, i));
            }
            k += 2;
        }
    }
    let labels = (1..=n).map(|i| i.to_string()).collect();
    Poset::from_relations(labels, &rel).expect("canonical code is a poset")
}

/// Isomorphism classes grown by adding a new maximal element above an
/// order ideal; `keep` prunes a class together with all its extensions.
pub(crate) fn grow_classes(
    max_n: usize,
    keep: &dyn Fn(&Poset) -> bool,
) -> Result<Vec<Vec<Poset>>> {
    let mut levels: Vec<Vec<Poset>> = vec![vec![Poset::antichain(0)]];
    for n in 1..=max_n {
        let mut codes = BTreeSet::new();
        for q in &levels[n - 1] {
            for ideal in q.order_ideals(usize::MAX)? {
                let mut rel = Vec::new();
                for x in 0..q.len() {
                    for &y in q.upper_covers(x) {
                        rel.push((x, y));
                    }
                    if ideal >> x & 1 == 1 {
                        rel.push((x, n - 1));
                    }
                }
                let labels = (1..=n).map(|i| i.to_string()).collect();
                let p = Poset::from_relations(labels, &rel)?;
                if keep(&p) {
                    codes.insert(canonical_form(&p));
                }
            }
        }
        levels.push(codes.iter().map(|c| poset_from_code(n, c)).collect());
    }
    Ok(levels)
}

pub const MAX_ENUMERATION_SIZE: usize = 6;

/// All posets on `1..=max_n` elements; one per isomorphism class when
/// `dedup_iso`, otherwise every labelled partial order on `{1..n}`.
pub fn enumerate_posets(max_n: usize, dedup_iso: bool) -> Result<Vec<Poset>> {
    if max_n > MAX_ENUMERATION_SIZE {
        return Err(Error::bound("poset enumeration size", max_n, MAX_ENUMERATION_SIZE));
    }
    let levels = grow_classes(max_n, &|_| true)?;
    let mut out = Vec::new();
    for (n, level) in levels.into_iter().enumerate().skip(1) {
        if dedup_iso {
            out.extend(level);
            continue;
        }
        let mut seen = BTreeSet::new();
        for p in &level {
            for perm in permutations(n) {
                let mut leq = vec![false; n * n];
                for x in 0..n {
                    for y in 0..n {
                        leq[perm[x] * n + perm[y]] = p.leq(x, y);
                    }
                }
                seen.insert(leq);
            }
        }
        for leq in seen {
            let labels = (1..=n).map(|i| i.to_string()).collect();
            out.push(Poset::from_leq_trusted(labels, leq));
        }
    }
    Ok(out)
}

/// Every poset, one per isomorphism class, whose lattice of order ideals
/// has at most `max_ideals` elements.
pub fn posets_by_ideal_count(max_ideals: usize) -> Result<Vec<Poset>> {
    if max_ideals > 64 {
        return Err(Error::bound("ideal lattice size", max_ideals, 64));
    }
    let keep = |p: &Poset| p.order_ideals(max_ideals).is_ok();
    let levels = grow_classes(max_ideals.saturating_sub(1), &keep)?;
    Ok(levels.into_iter().skip(1).flatten().collect())
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}
