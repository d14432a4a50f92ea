//! Sparse polynomials over the rationals and Buchberger's algorithm.

use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector stored as sorted `(variable, exponent)` pairs with no
/// zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: usize) -> Monomial {
        Monomial(vec![(v as u32, 1)])
    }

    pub fn from_pairs(pairs: &[(usize, u32)]) -> Monomial {
        let mut acc: BTreeMap<u32, u32> = BTreeMap::new();
        for &(v, e) in pairs {
            *acc.entry(v as u32).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w as usize == v)
            .map_or(0, |&(_, e)| e)
    }

    fn merge(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() || j < b.len() {
            let (v, ea, eb) = if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                i += 1;
                (a[i - 1].0, a[i - 1].1, 0)
            } else if i == a.len() || b[j].0 < a[i].0 {
                j += 1;
                (b[j - 1].0, 0, b[j - 1].1)
            } else {
                i += 1;
                j += 1;
                (a[i - 1].0, a[i - 1].1, b[j - 1].1)
            };
            let e = f(ea, eb);
            if e > 0 {
                out.push((v, e));
            }
        }
        Monomial(out)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::max)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, e)| other.exponent(v as usize) >= e)
    }

    /// `self / other`, provided `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| self.merge(other, |a, b| a - b))
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, _)| other.exponent(v as usize) == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| {
                let name = names.get(v as usize).cloned().unwrap_or(format!("x{v}"));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        parts.join("*")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    #[serde(rename = "degrevlex")]
    DegRevLex,
}

/// A monomial order given by its kind and a ranking of the variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// `weight[v]` is larger for larger variables.
    weight: Vec<usize>,
}

impl MonomialOrder {
    /// `largest_first` lists every variable once, from the largest to the
    /// smallest.
    pub fn new(kind: OrderKind, largest_first: &[usize]) -> MonomialOrder {
        let n = largest_first.len();
        let mut weight = vec![usize::MAX; n];
        for (pos, &v) in largest_first.iter().enumerate() {
            assert!(weight[v] == usize::MAX, "variable ranked twice");
            weight[v] = n - pos;
        }
        MonomialOrder { kind, weight }
    }

    /// Variable `0` largest, then `1`, and so on.
    pub fn natural(kind: OrderKind, nvars: usize) -> MonomialOrder {
        MonomialOrder::new(kind, &(0..nvars).collect::<Vec<_>>())
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.weight.len()
    }

    /// Variables from largest to smallest.
    pub fn ranking(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.weight.len()).collect();
        v.sort_by_key(|&x| std::cmp::Reverse(self.weight[x]));
        v
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.kind == OrderKind::DegRevLex {
            match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        // the deciding variable: largest differing one for lex, smallest
        // for revlex
        let mut pick: Option<(usize, u32, u32)> = None;
        let (x, y) = (&a.0, &b.0);
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            let (v, ea, eb) = if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
                i += 1;
                (x[i - 1].0, x[i - 1].1, 0)
            } else if i == x.len() || y[j].0 < x[i].0 {
                j += 1;
                (y[j - 1].0, 0, y[j - 1].1)
            } else {
                i += 1;
                j += 1;
                (x[i - 1].0, x[i - 1].1, y[j - 1].1)
            };
            if ea == eb {
                continue;
            }
            let w = self.weight[v as usize];
            let better = match (pick, self.kind) {
                (None, _) => true,
                (Some((pw, _, _)), OrderKind::Lex) => w > pw,
                (Some((pw, _, _)), OrderKind::DegRevLex) => w < pw,
            };
            if better {
                pick = Some((w, ea, eb));
            }
        }
        match (pick, self.kind) {
            (None, _) => Ordering::Equal,
            (Some((_, ea, eb)), OrderKind::Lex) => ea.cmp(&eb),
            (Some((_, ea, eb)), OrderKind::DegRevLex) => eb.cmp(&ea),
        }
    }
}

/// All `n!` variable rankings for both order kinds, or a seeded sample.
pub fn sample_orders(nvars: usize, sample: Option<(usize, u64)>) -> Vec<MonomialOrder> {
    let mut out = Vec::new();
    match sample {
        None => {
            for perm in crate::poset::permutations(nvars) {
                out.push(MonomialOrder::new(OrderKind::Lex, &perm));
                out.push(MonomialOrder::new(OrderKind::DegRevLex, &perm));
            }
        }
        Some((count, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut perm: Vec<usize> = (0..nvars).collect();
            for k in 0..count {
                perm.shuffle(&mut rng);
                let kind = if k % 2 == 0 {
                    OrderKind::Lex
                } else {
                    OrderKind::DegRevLex
                };
                out.push(MonomialOrder::new(kind, &perm));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn from_terms(terms: Vec<(BigRational, Monomial)>) -> Polynomial {
        let mut p = Polynomial::zero();
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
    }

    /// Convenience constructor with integer coefficients.
    pub fn from_int_terms(terms: &[(i64, Monomial)]) -> Polynomial {
        Polynomial::from_terms(terms.iter().map(|(c, m)| (rat(*c), m.clone())).collect())
    }

    pub fn add_term(&mut self, c: BigRational, m: Monomial) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<Monomial> {
        self.leading_term(order).map(|(m, _)| m.clone())
    }

    /// `self + c * m * other`.
    pub fn add_scaled(&mut self, c: &BigRational, m: &Monomial, other: &Polynomial) {
        for (mo, co) in &other.terms {
            let prod = mo.mul(m);
            let val = c * co;
            let e = self.terms.entry(prod.clone()).or_insert_with(BigRational::zero);
            *e += val;
            if e.is_zero() {
                self.terms.remove(&prod);
            }
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&rat(-1), &Monomial::one(), other);
        out
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Terms from largest to smallest.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, BigRational)> {
        let mut v: Vec<(Monomial, BigRational)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn render(&self, order: &MonomialOrder, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.render(names);
            if a.is_one() {
                s.push_str(&mono);
            } else if m.degree() == 0 {
                let _ = write!(s, "{a}");
            } else {
                let _ = write!(s, "{a}*{mono}");
            }
        }
        s
    }
}

/// S-polynomial of `f` and `g`.
pub fn spoly(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (mf, cf) = f.leading_term(order).expect("nonzero f");
    let (mg, cg) = g.leading_term(order).expect("nonzero g");
    let l = mf.lcm(mg);
    let mut out = Polynomial::zero();
    out.add_scaled(&cf.recip(), &l.div(mf).unwrap(), f);
    out.add_scaled(&(-cg.recip()), &l.div(mg).unwrap(), g);
    out
}

/// Full reduction of `f` modulo `basis`; the first basis element whose
/// leading monomial divides the current leading monomial is used.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let leads: Vec<(Monomial, BigRational)> = basis
        .iter()
        .filter_map(|g| g.leading_term(order).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    let nonzero: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut p = f.clone();
    let mut rem = Polynomial::zero();
    while let Some((m, c)) = p.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(i) => {
                let q = m.div(&leads[i].0).unwrap();
                let factor = -(c / &leads[i].1);
                p.add_scaled(&factor, &q, nonzero[i]);
            }
            None => {
                p.terms.remove(&m);
                rem.terms.insert(m, c);
            }
        }
    }
    rem
}

#[derive(Clone, Copy, Debug)]
pub struct GbLimits {
    pub max_pairs: usize,
    pub max_vars: usize,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits {
            max_pairs: 200_000,
            max_vars: 40,
        }
    }
}

/// Reduced Groebner basis, sorted by decreasing leading monomial.
/// Pairs with coprime leading monomials are skipped.
pub fn buchberger(
    gens: &[Polynomial],
    order: &MonomialOrder,
    limits: GbLimits,
) -> Result<Vec<Polynomial>> {
    if order.nvars() > limits.max_vars {
        return Err(Error::bound("number of variables", order.nvars(), limits.max_vars));
    }
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(order))
        .collect();
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push_back((i, j));
        }
    }
    let mut processed = 0usize;
    while let Some((i, j)) = pairs.pop_front() {
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::bound("critical pairs", processed, limits.max_pairs));
        }
        let li = basis[i].leading_monomial(order).unwrap();
        let lj = basis[j].leading_monomial(order).unwrap();
        if li.coprime(&lj) {
            continue;
        }
        let r = normal_form(&spoly(&basis[i], &basis[j], order), &basis, order);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic(order));
            for i in 0..k {
                pairs.push_back((i, k));
            }
        }
    }
    Ok(reduce_basis(basis, order))
}

fn reduce_basis(basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    let leads: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial(order).unwrap()).collect();
    let mut keep: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = leads.iter().enumerate().any(|(j, l)| {
            j != i && l.divides(&leads[i]) && (l != &leads[i] || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Polynomial> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let lt = keep[i].leading_term(order).map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut tail = keep[i].clone();
        tail.terms.remove(&lt.0);
        let mut g = normal_form(&tail, &others, order);
        g.terms.insert(lt.0, lt.1);
        out.push(g.monic(order));
    }
    out.sort_by(|a, b| {
        order.cmp(
            &b.leading_monomial(order).unwrap(),
            &a.leading_monomial(order).unwrap(),
        )
    });
    out
}

/// True when every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    for j in 0..basis.len() {
        for i in 0..j {
            if !normal_form(&spoly(&basis[i], &basis[j], order), basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Minimal generators of the ideal of leading monomials.
pub fn initial_ideal(basis: &[Polynomial], order: &MonomialOrder) -> Vec<Monomial> {
    let mut leads: Vec<Monomial> = basis.iter().filter_map(|g| g.leading_monomial(order)).collect();
    leads.sort();
    leads.dedup();
    let minimal: Vec<Monomial> = leads
        .iter()
        .filter(|m| !leads.iter().any(|l| l != *m && l.divides(m)))
        .cloned()
        .collect();
    minimal
}

pub fn is_squarefree(monomials: &[Monomial]) -> bool {
    monomials.iter().all(Monomial::is_squarefree)
}
