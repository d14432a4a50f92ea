//! Finite lattices, distributive lattices via Birkhoff's representation,
//! multichain lattices and decompositions into disjoint maximal chains.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poset::{find_isomorphism, is_order_isomorphism, Poset};

pub const DEFAULT_MAX_LATTICE: usize = 1 << 14;

#[derive(Clone, Debug)]
pub struct Lattice {
    poset: Poset,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    /// Computes join and meet tables, failing on the first pair without a
    /// least upper or greatest lower bound.
    pub fn from_poset(p: Poset) -> Result<Lattice> {
        let n = p.len();
        if n == 0 {
            return Err(Error::EmptyResult);
        }
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let ub: Vec<usize> = (0..n).filter(|&z| p.leq(a, z) && p.leq(b, z)).collect();
                let j = ub
                    .iter()
                    .copied()
                    .find(|&u| ub.iter().all(|&v| p.leq(u, v)))
                    .ok_or_else(|| {
                        Error::NotALattice(p.label(a).into(), p.label(b).into(), "join")
                    })?;
                let lb: Vec<usize> = (0..n).filter(|&z| p.leq(z, a) && p.leq(z, b)).collect();
                let m = lb
                    .iter()
                    .copied()
                    .find(|&u| lb.iter().all(|&v| p.leq(v, u)))
                    .ok_or_else(|| {
                        Error::NotALattice(p.label(a).into(), p.label(b).into(), "meet")
                    })?;
                join[a * n + b] = j;
                join[b * n + a] = j;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
            }
        }
        Ok(Lattice::from_parts(p, join, meet))
    }

    pub(crate) fn from_parts(poset: Poset, join: Vec<usize>, meet: Vec<usize>) -> Lattice {
        let n = poset.len();
        let bottom = (0..n).find(|&x| (0..n).all(|y| poset.leq(x, y))).expect("bottom");
        let top = (0..n).find(|&x| (0..n).all(|y| poset.leq(y, x))).expect("top");
        Lattice {
            poset,
            join,
            meet,
            bottom,
            top,
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    /// A triple breaking `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in y + 1..n {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// Elements covering exactly one element.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        let out: Vec<usize> = (0..self.len())
            .filter(|&x| self.poset.lower_covers(x).len() == 1)
            .collect();
        debug_assert!((0..self.len()).all(|x| {
            let definitional = x != self.bottom
                && (0..self.len()).all(|y| {
                    (0..self.len()).all(|z| self.join(y, z) != x || y == x || z == x)
                });
            definitional == out.contains(&x)
        }));
        out
    }

    /// Rank function when every maximal chain has the same length.
    pub fn rank_function(&self) -> Option<Vec<usize>> {
        if self.poset.is_pure() {
            Some(self.poset.heights())
        } else {
            None
        }
    }

    /// Modularity through the rank identity `ρ(x)+ρ(y) = ρ(x∧y)+ρ(x∨y)`.
    pub fn modular_by_rank(&self) -> bool {
        let Some(rho) = self.rank_function() else {
            return false;
        };
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| rho[x] + rho[y] == rho[self.meet(x, y)] + rho[self.join(x, y)])
        })
    }

    /// A pentagon sublattice `(a∧b, a, c, b, a∨b)` with `a < c`,
    /// `a ∨ b = c ∨ b` and `a ∧ b = c ∧ b`.
    pub fn pentagon_witness(&self) -> Option<[usize; 5]> {
        let n = self.len();
        for a in 0..n {
            for c in 0..n {
                if !self.poset.lt(a, c) {
                    continue;
                }
                for b in 0..n {
                    if self.join(a, b) == self.join(c, b)
                        && self.meet(a, b) == self.meet(c, b)
                        && !self.poset.comparable(a, b)
                    {
                        return Some([self.meet(a, b), a, c, b, self.join(a, b)]);
                    }
                }
            }
        }
        None
    }

    /// Three pairwise incomparable elements with a common pairwise join
    /// and meet.
    pub fn diamond_witness(&self) -> Option<[usize; 5]> {
        let n = self.len();
        for a in 0..n {
            for b in a + 1..n {
                if self.poset.comparable(a, b) {
                    continue;
                }
                let (j, m) = (self.join(a, b), self.meet(a, b));
                for c in b + 1..n {
                    if self.join(a, c) == j
                        && self.join(b, c) == j
                        && self.meet(a, c) == m
                        && self.meet(b, c) == m
                        && !self.poset.comparable(a, c)
                        && !self.poset.comparable(b, c)
                    {
                        return Some([m, a, b, c, j]);
                    }
                }
            }
        }
        None
    }

    /// Modularity decided by the rank identity and by pentagon-freeness;
    /// disagreement is reported as an error.
    pub fn is_modular(&self) -> Result<bool> {
        let by_rank = self.modular_by_rank();
        let pentagon = self.pentagon_witness();
        if by_rank != pentagon.is_none() {
            return Err(Error::violated(
                "modularity characterisations agree",
                format!("rank says {by_rank}, pentagon {pentagon:?}"),
            ));
        }
        Ok(by_rank)
    }
}

pub fn as_lattice(p: &Poset) -> Result<Lattice> {
    Lattice::from_poset(p.clone())
}

/// A distributive lattice together with its poset of join-irreducibles
/// and the Birkhoff map sending each element to a down-set of that poset.
#[derive(Clone, Debug)]
pub struct DistributiveLattice {
    lattice: Lattice,
    ji: Poset,
    ji_elements: Vec<usize>,
    ideal_of: Vec<u64>,
    index_of_ideal: HashMap<u64, usize>,
}

fn mask_label(p: &Poset, mask: u64) -> String {
    let parts: Vec<&str> = (0..p.len())
        .filter(|&x| mask >> x & 1 == 1)
        .map(|x| p.label(x))
        .collect();
    format!("{{{}}}", parts.join(","))
}

impl DistributiveLattice {
    pub fn from_lattice(lattice: Lattice) -> Result<DistributiveLattice> {
        if let Some((x, y, z)) = lattice.distributivity_witness() {
            let p = lattice.poset();
            return Err(Error::NotDistributive(format!(
                "{}, {}, {}",
                p.label(x),
                p.label(y),
                p.label(z)
            )));
        }
        let ji_elements = lattice.join_irreducibles();
        if ji_elements.len() > 64 {
            return Err(Error::bound("join-irreducible count", ji_elements.len(), 64));
        }
        let ji = lattice.poset().subposet(&ji_elements);
        let ideal_of: Vec<u64> = (0..lattice.len())
            .map(|x| {
                ji_elements
                    .iter()
                    .enumerate()
                    .filter(|&(_, &j)| lattice.leq(j, x))
                    .fold(0u64, |m, (k, _)| m | (1u64 << k))
            })
            .collect();
        let index_of_ideal = ideal_of.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        Ok(DistributiveLattice {
            lattice,
            ji,
            ji_elements,
            ideal_of,
            index_of_ideal,
        })
    }

    /// The lattice of order ideals of `p`, elements sorted by size and
    /// then by bitmask, so the index order is a linear extension.
    pub fn ideal_lattice(p: &Poset) -> Result<DistributiveLattice> {
        Self::ideal_lattice_bounded(p, DEFAULT_MAX_LATTICE)
    }

    pub fn ideal_lattice_bounded(p: &Poset, limit: usize) -> Result<DistributiveLattice> {
        let mut ideals = p.order_ideals(limit)?;
        ideals.sort_by_key(|&m| (m.count_ones(), m));
        let n = ideals.len();
        let index_of_ideal: HashMap<u64, usize> =
            ideals.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let labels = ideals.iter().map(|&m| mask_label(p, m)).collect();
        let mut leq = vec![false; n * n];
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for (i, &a) in ideals.iter().enumerate() {
            for (j, &b) in ideals.iter().enumerate() {
                leq[i * n + j] = a & !b == 0;
                join[i * n + j] = index_of_ideal[&(a | b)];
                meet[i * n + j] = index_of_ideal[&(a & b)];
            }
        }
        let upper: Vec<Vec<usize>> = ideals
            .iter()
            .map(|&a| {
                (0..p.len())
                    .filter(|&x| a >> x & 1 == 0)
                    .filter_map(|x| index_of_ideal.get(&(a | 1u64 << x)).copied())
                    .collect()
            })
            .collect();
        let poset = Poset::from_parts_trusted(labels, leq, upper);
        let lattice = Lattice::from_parts(poset, join, meet);
        let ji_elements: Vec<usize> = (0..p.len())
            .map(|x| index_of_ideal[&p.down_closure(1u64 << x)])
            .collect();
        let ideal_of = ideals.clone();
        Ok(DistributiveLattice {
            lattice,
            ji: p.clone(),
            ji_elements,
            ideal_of,
            index_of_ideal,
        })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn poset(&self) -> &Poset {
        self.lattice.poset()
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    /// The poset of join-irreducible elements.
    pub fn ji_poset(&self) -> &Poset {
        &self.ji
    }

    /// Lattice index of each join-irreducible, in `ji_poset` order.
    pub fn ji_elements(&self) -> &[usize] {
        &self.ji_elements
    }

    /// Down-set of the join-irreducible poset matching lattice element `x`.
    pub fn ideal_mask(&self, x: usize) -> u64 {
        self.ideal_of[x]
    }

    pub fn element_of_mask(&self, mask: u64) -> Option<usize> {
        self.index_of_ideal.get(&mask).copied()
    }

    /// Checks that `x ↦ {join-irreducibles below x}` is an isomorphism
    /// onto the ideal lattice of the join-irreducible poset.
    pub fn birkhoff_check(&self) -> Result<()> {
        let rebuilt = DistributiveLattice::ideal_lattice(&self.ji)?;
        let map: Vec<usize> = (0..self.len())
            .map(|x| rebuilt.element_of_mask(self.ideal_of[x]).unwrap_or(usize::MAX))
            .collect();
        if is_order_isomorphism(self.poset(), rebuilt.poset(), &map) {
            Ok(())
        } else {
            Err(Error::violated("birkhoff", "ideal map is not an isomorphism"))
        }
    }
}

/// Lattice of multichains `I_1 ⊆ … ⊆ I_{r-1}` of order ideals of `p`
/// (the last member `I_r = p` is implicit), ordered componentwise.
pub fn multichain_lattice(p: &Poset, r: usize) -> Result<MultichainLattice> {
    multichain_lattice_bounded(p, r, DEFAULT_MAX_LATTICE)
}

#[derive(Clone, Debug)]
pub struct MultichainLattice {
    pub lattice: DistributiveLattice,
    /// `tuples[x]` lists the ideal masks `I_1, …, I_{r-1}` of element `x`.
    pub tuples: Vec<Vec<u64>>,
}

pub fn multichain_lattice_bounded(p: &Poset, r: usize, limit: usize) -> Result<MultichainLattice> {
    if r < 2 {
        return Err(Error::NotApplicable(format!("multichain length {r} < 2")));
    }
    let mut ideals = p.order_ideals(limit)?;
    ideals.sort_by_key(|&m| (m.count_ones(), m));
    let k = r - 1;
    let mut tuples: Vec<Vec<u64>> = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn grow(
        ideals: &[u64],
        k: usize,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
        limit: usize,
    ) -> Result<()> {
        if cur.len() == k {
            out.push(cur.clone());
            if out.len() > limit {
                return Err(Error::bound("multichain lattice size", out.len(), limit));
            }
            return Ok(());
        }
        for &i in ideals {
            if let Some(&prev) = cur.last() {
                if prev & !i != 0 {
                    continue;
                }
            }
            cur.push(i);
            grow(ideals, k, cur, out, limit)?;
            cur.pop();
        }
        Ok(())
    }
    grow(&ideals, k, &mut cur, &mut tuples, limit)?;
    tuples.sort_by_key(|t| (t.iter().map(|m| m.count_ones()).sum::<u32>(), t.clone()));
    let n = tuples.len();
    let index: HashMap<Vec<u64>, usize> =
        tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    let labels = tuples
        .iter()
        .map(|t| {
            let parts: Vec<String> = t.iter().map(|&m| mask_label(p, m)).collect();
            format!("[{}]", parts.join("|"))
        })
        .collect();
    let mut leq = vec![false; n * n];
    let mut join = vec![0; n * n];
    let mut meet = vec![0; n * n];
    for (i, a) in tuples.iter().enumerate() {
        for (j, b) in tuples.iter().enumerate() {
            leq[i * n + j] = a.iter().zip(b).all(|(x, y)| x & !y == 0);
            let u: Vec<u64> = a.iter().zip(b).map(|(x, y)| x | y).collect();
            let v: Vec<u64> = a.iter().zip(b).map(|(x, y)| x & y).collect();
            join[i * n + j] = index[&u];
            meet[i * n + j] = index[&v];
        }
    }
    let upper: Vec<Vec<usize>> = tuples
        .iter()
        .map(|t| {
            let mut ups = Vec::new();
            for c in 0..k {
                for x in 0..p.len() {
                    if t[c] >> x & 1 == 1 {
                        continue;
                    }
                    let mut s = t.clone();
                    s[c] |= 1u64 << x;
                    if let Some(&j) = index.get(&s) {
                        ups.push(j);
                    }
                }
            }
            ups.sort_unstable();
            ups
        })
        .collect();
    let poset = Poset::from_parts_trusted(labels, leq, upper);
    let lattice = DistributiveLattice::from_lattice(Lattice::from_parts(poset, join, meet))?;
    Ok(MultichainLattice { lattice, tuples })
}

/// Explicit isomorphism between the join-irreducibles of the multichain
/// lattice and `p × chain(r-1)`.
#[derive(Clone, Debug)]
pub struct MultichainIso {
    pub lattice: MultichainLattice,
    pub product: Poset,
    /// `map[i]` is the join-irreducible (index into `ji_poset`) matched
    /// with product element `i = p_index * (r-1) + (k-1)`.
    pub map: Vec<usize>,
}

/// Matches `(x, k)` with the multichain whose last `k` members equal the
/// principal ideal of `x` and whose other members are empty, and checks
/// the match is an order isomorphism. A generic search is run as well.
pub fn verify_multichain_ji(p: &Poset, r: usize) -> Result<MultichainIso> {
    let lattice = multichain_lattice(p, r)?;
    let k = r - 1;
    let product = p.cartesian_product(&Poset::chain(k));
    let ji = lattice.lattice.ji_poset();
    if ji.len() != product.len() {
        return Err(Error::violated(
            "multichain join-irreducibles",
            format!("{} join-irreducibles, product has {}", ji.len(), product.len()),
        ));
    }
    let mut map = Vec::with_capacity(product.len());
    for x in 0..p.len() {
        let principal = p.down_closure(1u64 << x);
        for copies in 1..=k {
            let tuple_label: Vec<String> = (0..k)
                .map(|pos| {
                    if pos >= k - copies {
                        mask_label(p, principal)
                    } else {
                        "{}".to_string()
                    }
                })
                .collect();
            let label = format!("[{}]", tuple_label.join("|"));
            let j = ji.index_of(&label).ok_or_else(|| {
                Error::violated("multichain join-irreducibles", format!("{label} is not join-irreducible"))
            })?;
            map.push(j);
        }
    }
    if !is_order_isomorphism(&product, ji, &map) {
        return Err(Error::violated(
            "multichain join-irreducibles",
            "explicit map is not an order isomorphism",
        ));
    }
    if find_isomorphism(&product, ji).is_none() {
        return Err(Error::IsoNotFound);
    }
    Ok(MultichainIso {
        lattice,
        product,
        map,
    })
}

/// All partitions of `p` into disjoint maximal chains. Each chain is
/// listed bottom to top; chains are ordered by their least element.
pub fn canonical_chain_decompositions(p: &Poset) -> Result<Vec<Vec<Vec<usize>>>> {
    let chains = p.maximal_chains();
    let masks: Vec<u64> = chains
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &x| m | (1u64 << x)))
        .collect();
    let full = if p.len() == 64 { u64::MAX } else { (1u64 << p.len()) - 1 };
    let mut out = Vec::new();
    fn cover(
        used: u64,
        full: u64,
        masks: &[u64],
        picked: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if used == full {
            out.push(picked.clone());
            return;
        }
        let x = (!used).trailing_zeros();
        for (i, &m) in masks.iter().enumerate() {
            if m >> x & 1 == 1 && m & used == 0 {
                picked.push(i);
                cover(used | m, full, masks, picked, out);
                picked.pop();
            }
        }
    }
    let mut picks = Vec::new();
    cover(0, full, &masks, &mut Vec::new(), &mut picks);
    for pick in picks {
        let mut d: Vec<Vec<usize>> = pick.iter().map(|&i| chains[i].clone()).collect();
        d.sort_by_key(|c| c[0]);
        out.push(d);
    }
    out.sort();
    if out.is_empty() {
        return Err(Error::NotHyperPlanar);
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct HyperPlanar {
    pub decompositions: Vec<Vec<Vec<usize>>>,
    pub regular: bool,
}

impl HyperPlanar {
    /// Number of chains in each decomposition, when they all agree.
    pub fn width(&self) -> Option<usize> {
        let w = self.decompositions[0].len();
        self.decompositions.iter().all(|d| d.len() == w).then_some(w)
    }

    /// Sorted chain lengths (element count minus one) of a decomposition.
    pub fn lengths(&self, i: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.decompositions[i].iter().map(|c| c.len() - 1).collect();
        v.sort_unstable();
        v
    }
}

/// Decompositions plus the regularity test: whenever `x < y` with `x` in
/// chain `C` and `y` in chain `D`, the position of `x` in `C` is below the
/// position of `y` in `D`. For regular posets the position agrees with
/// the height in `p` and all decompositions share their chain lengths;
/// both facts are checked.
pub fn hyper_planar(p: &Poset) -> Result<HyperPlanar> {
    let decompositions = canonical_chain_decompositions(p)?;
    let n = p.len();
    let regular = decompositions.iter().all(|d| {
        let mut pos = vec![0usize; n];
        for c in d {
            for (k, &x) in c.iter().enumerate() {
                pos[x] = k;
            }
        }
        (0..n).all(|x| (0..n).all(|y| !p.lt(x, y) || pos[x] < pos[y]))
    });
    let hp = HyperPlanar {
        decompositions,
        regular,
    };
    if regular {
        let h = p.heights();
        for d in &hp.decompositions {
            for c in d {
                for (k, &x) in c.iter().enumerate() {
                    if h[x] != k {
                        return Err(Error::violated(
                            "chain position equals height",
                            p.label(x).to_string(),
                        ));
                    }
                }
            }
        }
        let first = hp.lengths(0);
        if (0..hp.decompositions.len()).any(|i| hp.lengths(i) != first) {
            return Err(Error::violated("equal chain lengths", format!("{first:?}")));
        }
    }
    Ok(hp)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pentagon() -> Poset {
        Poset::from_labeled_covers(
            &["0", "a", "c", "b", "1"],
            &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
        )
        .unwrap()
    }

    pub(crate) fn diamond() -> Poset {
        Poset::from_labeled_covers(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        )
        .unwrap()
    }

    #[test]
    fn small_lattices() {
        let p = as_lattice(&pentagon()).unwrap();
        assert!(!p.is_distributive());
        assert!(!p.is_modular().unwrap());
        assert!(p.pentagon_witness().is_some());
        let d = as_lattice(&diamond()).unwrap();
        assert!(!d.is_distributive());
        assert!(d.is_modular().unwrap());
        assert!(d.diamond_witness().is_some());
        let v = Poset::from_labeled_covers(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
        assert!(matches!(as_lattice(&v), Err(Error::NotALattice(_, _, "join"))));
    }

    #[test]
    fn boolean_and_divisor_lattices() {
        let b3 = DistributiveLattice::ideal_lattice(&Poset::antichain(3)).unwrap();
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.lattice().join_irreducibles().len(), 3);
        // divisors of 12: 1,2,3,4,6,12
        let d12 = Poset::from_labeled_covers(
            &["1", "2", "3", "4", "6", "12"],
            &[("1", "2"), ("1", "3"), ("2", "4"), ("2", "6"), ("3", "6"), ("4", "12"), ("6", "12")],
        )
        .unwrap();
        let l = DistributiveLattice::from_lattice(as_lattice(&d12).unwrap()).unwrap();
        let names: Vec<&str> = l.ji_elements().iter().map(|&j| l.poset().label(j)).collect();
        assert_eq!(names, vec!["2", "3", "4"]);
        l.birkhoff_check().unwrap();
    }

    #[test]
    fn birkhoff_example() {
        let p = Poset::from_labeled_covers(
            &["a", "b", "c", "d"],
            &[("a", "c"), ("b", "c"), ("b", "d")],
        )
        .unwrap();
        let l = DistributiveLattice::ideal_lattice(&p).unwrap();
        assert_eq!(l.len(), 8);
        let back = DistributiveLattice::from_lattice(l.lattice().clone()).unwrap();
        assert!(find_isomorphism(back.ji_poset(), &p).is_some());
        back.birkhoff_check().unwrap();
    }

    #[test]
    fn multichains_of_a_chain() {
        // multichains of length r in a 2-chain: I(chain2 × chain(r-1))
        let c2 = Poset::chain(2);
        let l = multichain_lattice(&c2, 3).unwrap().lattice;
        let direct =
            DistributiveLattice::ideal_lattice(&c2.cartesian_product(&Poset::chain(2))).unwrap();
        assert_eq!(l.len(), direct.len());
        assert_eq!(l.len(), 6);
        verify_multichain_ji(&c2, 3).unwrap();
    }

    #[test]
    fn chain_decompositions() {
        let butterfly = Poset::from_labeled_covers(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("c", "d"), ("d", "e"), ("a", "e"), ("c", "b")],
        )
        .unwrap();
        let hp = hyper_planar(&butterfly).unwrap();
        assert_eq!(hp.decompositions.len(), 1);
        assert!(hp.regular);
        assert_eq!(hp.width(), Some(2));
        assert_eq!(hp.lengths(0), vec![1, 2]);

        let v = Poset::from_labeled_covers(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
        assert_eq!(canonical_chain_decompositions(&v).unwrap_err(), Error::NotHyperPlanar);
    }
}
