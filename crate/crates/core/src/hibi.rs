//! Join-meet ideals, the Hibi semigroup and generalized Hibi rings.

use serde::Serialize;

use crate::algebra::{
    buchberger, initial_ideal, is_squarefree, GbLimits, Monomial, MonomialOrder, OrderKind,
    Polynomial,
};
use crate::error::{Error, Result};
use crate::lattice::{multichain_lattice, DistributiveLattice, Lattice, MultichainLattice};
use crate::poset::Poset;

/// The ideal generated by `x_a x_b - x_{a∧b} x_{a∨b}` over incomparable
/// pairs, with variables indexed by lattice elements.
#[derive(Clone, Debug)]
pub struct HibiIdeal {
    pub var_names: Vec<String>,
    /// Degree reverse lexicographic order in which `x_a < x_b` whenever
    /// `a < b` in the lattice.
    pub order: MonomialOrder,
    /// Incomparable pairs `(a, b)` with `a` before `b` in the linear
    /// extension, listed in generator order.
    pub pairs: Vec<(usize, usize)>,
    pub generators: Vec<Polynomial>,
}

impl HibiIdeal {
    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn render(&self, p: &Polynomial) -> String {
        p.render(&self.order, &self.var_names)
    }
}

/// Join-meet ideal of any finite lattice.
pub fn join_meet_ideal(l: &Lattice) -> HibiIdeal {
    let ext = l.poset().linear_extension();
    let mut pos = vec![0; l.len()];
    for (k, &x) in ext.iter().enumerate() {
        pos[x] = k;
    }
    let largest_first: Vec<usize> = ext.iter().rev().copied().collect();
    let order = MonomialOrder::new(OrderKind::DegRevLex, &largest_first);
    let mut pairs = Vec::new();
    for (i, &a) in ext.iter().enumerate() {
        for &b in &ext[i + 1..] {
            if !l.poset().comparable(a, b) {
                pairs.push((a, b));
            }
        }
    }
    let generators = pairs
        .iter()
        .map(|&(a, b)| {
            Polynomial::from_int_terms(&[
                (1, Monomial::from_pairs(&[(a, 1), (b, 1)])),
                (-1, Monomial::from_pairs(&[(l.meet(a, b), 1), (l.join(a, b), 1)])),
            ])
        })
        .collect();
    let var_names = l.poset().labels().iter().map(|s| format!("x{s}")).collect();
    HibiIdeal {
        var_names,
        order,
        pairs,
        generators,
    }
}

pub fn hibi_ideal(l: &DistributiveLattice) -> HibiIdeal {
    join_meet_ideal(l.lattice())
}

/// Outcome of comparing a computed Groebner basis with the generators.
#[derive(Clone, Debug)]
pub struct GbCheck {
    pub basis: Vec<Polynomial>,
    pub initial: Vec<Monomial>,
    pub equals_generators: bool,
    pub squarefree: bool,
}

/// Reduced Groebner basis of the join-meet ideal under `order`.
pub fn groebner_check(ideal: &HibiIdeal, order: &MonomialOrder, limits: GbLimits) -> Result<GbCheck> {
    let basis = buchberger(&ideal.generators, order, limits)?;
    let initial = initial_ideal(&basis, order);
    let mut ours: Vec<Polynomial> = ideal.generators.iter().map(|g| g.monic(order)).collect();
    ours.sort_by_cached_key(|a| a.sorted_terms(order));
    let mut theirs = basis.clone();
    theirs.sort_by_cached_key(|a| a.sorted_terms(order));
    Ok(GbCheck {
        equals_generators: ours == theirs,
        squarefree: is_squarefree(&initial),
        basis,
        initial,
    })
}

/// For a distributive lattice the generators form the reduced Groebner
/// basis under the rank-compatible reverse lexicographic order, and the
/// initial ideal is generated by `x_a x_b` over incomparable pairs.
pub fn verify_gb_theorem(l: &DistributiveLattice) -> Result<GbCheck> {
    let ideal = hibi_ideal(l);
    let check = groebner_check(&ideal, &ideal.order, GbLimits::default())?;
    if !check.equals_generators {
        return Err(Error::violated(
            "generators form the reduced Groebner basis",
            format!("basis has {} elements, {} generators", check.basis.len(), ideal.generators.len()),
        ));
    }
    let mut expected: Vec<Monomial> = ideal
        .pairs
        .iter()
        .map(|&(a, b)| Monomial::from_pairs(&[(a, 1), (b, 1)]))
        .collect();
    expected.sort();
    let mut got = check.initial.clone();
    got.sort();
    if got != expected || !check.squarefree {
        return Err(Error::violated("initial ideal from incomparable pairs", format!("{got:?}")));
    }
    Ok(check)
}

/// Element `t^degree * prod x_p^{weights[p]}` of the Hibi semigroup ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SemigroupElement {
    pub degree: u32,
    pub weights: Vec<u32>,
}

impl SemigroupElement {
    pub fn zero(n: usize) -> SemigroupElement {
        SemigroupElement {
            degree: 0,
            weights: vec![0; n],
        }
    }

    /// Image of the lattice element whose down-set is `mask`.
    pub fn of_ideal(mask: u64, n: usize) -> SemigroupElement {
        SemigroupElement {
            degree: 1,
            weights: (0..n).map(|p| (mask >> p & 1) as u32).collect(),
        }
    }

    pub fn add(&self, other: &SemigroupElement) -> SemigroupElement {
        SemigroupElement {
            degree: self.degree + other.degree,
            weights: self.weights.iter().zip(&other.weights).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn checked_sub(&self, other: &SemigroupElement) -> Option<SemigroupElement> {
        let degree = self.degree.checked_sub(other.degree)?;
        let weights = self
            .weights
            .iter()
            .zip(&other.weights)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()?;
        Some(SemigroupElement { degree, weights })
    }
}

/// Membership in the Hibi semigroup of `p`: weights bounded by the degree
/// and weakly decreasing along the order.
pub fn semigroup_member(p: &Poset, e: &SemigroupElement) -> bool {
    e.weights.len() == p.len()
        && e.weights.iter().all(|&w| w <= e.degree)
        && p.covers().iter().all(|&(x, y)| e.weights[x] >= e.weights[y])
}

/// Generator of the semigroup for each lattice element.
pub fn semigroup_generators(l: &DistributiveLattice) -> Vec<SemigroupElement> {
    let n = l.ji_poset().len();
    (0..l.len())
        .map(|x| SemigroupElement::of_ideal(l.ideal_mask(x), n))
        .collect()
}

/// Number of multichains `a_1 <= … <= a_k` in a lattice (or any poset).
pub fn count_multichains(p: &Poset, k: usize) -> u128 {
    if k == 0 {
        return 1;
    }
    let ext = p.linear_extension();
    let mut ending: Vec<u128> = vec![1; p.len()];
    for _ in 1..k {
        let mut next = vec![0u128; p.len()];
        for &x in &ext {
            next[x] = (0..p.len()).filter(|&y| p.leq(y, x)).map(|y| ending[y]).sum();
        }
        ending = next;
    }
    ending.iter().sum()
}

/// The standard monomials of degree `k`: multichains of length `k`, each
/// listed as a weakly increasing sequence of lattice elements.
pub fn standard_monomials(l: &Lattice, k: usize, limit: usize) -> Result<Vec<Vec<usize>>> {
    let p = l.poset();
    let ext = p.linear_extension();
    let mut out = Vec::new();
    fn grow(
        p: &Poset,
        ext: &[usize],
        k: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) -> Result<()> {
        if cur.len() == k {
            out.push(cur.clone());
            if out.len() > limit {
                return Err(Error::bound("standard monomials", out.len(), limit));
            }
            return Ok(());
        }
        for &x in ext {
            if cur.last().is_none_or(|&y| p.leq(y, x)) {
                cur.push(x);
                grow(p, ext, k, cur, out, limit)?;
                cur.pop();
            }
        }
        Ok(())
    }
    grow(p, &ext, k, &mut Vec::new(), &mut out, limit)?;
    Ok(out)
}

/// Generalized Hibi ring data for multichains of length `r`.
#[derive(Clone, Debug)]
pub struct GeneralizedHibi {
    pub multichains: MultichainLattice,
    pub ideal: HibiIdeal,
    pub r: usize,
}

/// Monomial `u_I` in variables `x_{k,p}` (index `(k-1)*|P| + p`): each
/// `p` in `I_k \ I_{k-1}` contributes `x_{k,p}`, with `I_0 = ∅` and
/// `I_r = P`.
pub fn multichain_monomial(p: &Poset, r: usize, tuple: &[u64]) -> Monomial {
    let n = p.len();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut prev = 0u64;
    let mut pairs = Vec::new();
    for k in 1..=r {
        let cur = if k == r { full } else { tuple[k - 1] };
        for x in 0..n {
            if cur >> x & 1 == 1 && prev >> x & 1 == 0 {
                pairs.push(((k - 1) * n + x, 1));
            }
        }
        prev = cur;
    }
    Monomial::from_pairs(&pairs)
}

/// Builds the generalized Hibi ring and checks `u_I u_J = u_{I∩J} u_{I∪J}`
/// for every incomparable pair.
pub fn generalized_hibi(p: &Poset, r: usize) -> Result<GeneralizedHibi> {
    let multichains = multichain_lattice(p, r)?;
    let l = multichains.lattice.lattice();
    let ideal = join_meet_ideal(l);
    for &(a, b) in &ideal.pairs {
        let ua = multichain_monomial(p, r, &multichains.tuples[a]);
        let ub = multichain_monomial(p, r, &multichains.tuples[b]);
        let um = multichain_monomial(p, r, &multichains.tuples[l.meet(a, b)]);
        let uj = multichain_monomial(p, r, &multichains.tuples[l.join(a, b)]);
        if ua.mul(&ub) != um.mul(&uj) {
            return Err(Error::violated(
                "multichain product identity",
                format!("{} {}", l.poset().label(a), l.poset().label(b)),
            ));
        }
    }
    Ok(GeneralizedHibi {
        multichains,
        ideal,
        r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::as_lattice;

    fn lattice_of(labels: &[&str], covers: &[(&str, &str)]) -> Lattice {
        as_lattice(&Poset::from_labeled_covers(labels, covers).unwrap()).unwrap()
    }

    #[test]
    fn generator_counts() {
        let pentagon = lattice_of(
            &["0", "a", "c", "b", "1"],
            &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
        );
        assert_eq!(join_meet_ideal(&pentagon).generators.len(), 2);
        let diamond = lattice_of(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        );
        assert_eq!(join_meet_ideal(&diamond).generators.len(), 3);
        let chain = as_lattice(&Poset::chain(4)).unwrap();
        assert!(join_meet_ideal(&chain).generators.is_empty());
    }

    #[test]
    fn boolean_lattice_basis() {
        let b3 = DistributiveLattice::ideal_lattice(&Poset::antichain(3)).unwrap();
        let check = verify_gb_theorem(&b3).unwrap();
        assert_eq!(check.basis.len(), 9);
    }

    #[test]
    fn pentagon_basis_grows() {
        let pentagon = lattice_of(
            &["0", "a", "c", "b", "1"],
            &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
        );
        let ideal = join_meet_ideal(&pentagon);
        let check = groebner_check(&ideal, &ideal.order, GbLimits::default()).unwrap();
        assert!(check.basis.len() > ideal.generators.len());
        assert!(!check.equals_generators);
    }

    #[test]
    fn semigroup_membership() {
        let p = Poset::chain(2);
        let ok = SemigroupElement {
            degree: 2,
            weights: vec![2, 1],
        };
        let increasing = SemigroupElement {
            degree: 2,
            weights: vec![1, 2],
        };
        let too_big = SemigroupElement {
            degree: 1,
            weights: vec![2, 0],
        };
        assert!(semigroup_member(&p, &ok));
        assert!(!semigroup_member(&p, &increasing));
        assert!(!semigroup_member(&p, &too_big));
    }

    #[test]
    fn multichain_counts() {
        let b2 = DistributiveLattice::ideal_lattice(&Poset::antichain(2)).unwrap();
        // Hilbert function of k[a,b,c,d]/(bc - ad): 1, 4, 9, 16
        let counts: Vec<u128> = (0..4).map(|k| count_multichains(b2.poset(), k)).collect();
        assert_eq!(counts, vec![1, 4, 9, 16]);
        assert_eq!(standard_monomials(b2.lattice(), 3, 1000).unwrap().len(), 16);
    }

    #[test]
    fn generalized_products() {
        let p = Poset::from_labeled_covers(&["a", "b", "c"], &[("a", "b")]).unwrap();
        let g = generalized_hibi(&p, 3).unwrap();
        assert_eq!(g.multichains.lattice.ji_poset().len(), 6);
    }
}
