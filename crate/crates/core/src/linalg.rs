//! Exact rank of sparse integer matrices over the rationals.
//!
//! Rows are reduced one at a time against the pivots found so far, using
//! integer row combinations divided by the row content. Arithmetic runs in
//! checked `i128` and restarts with big integers on overflow.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse row: `(column, value)` pairs with distinct columns.
pub type SparseRow = Vec<(usize, i64)>;

trait Scalar: Clone + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `a * x - b * y`, or `None` on overflow.
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Scalar for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

fn to_scalar<T: Scalar>(row: &SparseRow) -> Vec<(usize, T)> {
    let mut r: Vec<(usize, T)> = row
        .iter()
        .filter(|(_, v)| *v != 0)
        .map(|&(c, v)| (c, T::from_i64(v)))
        .collect();
    r.sort_by_key(|e| e.0);
    r
}

/// `a * x - b * y` on sorted sparse rows.
fn combine_rows<T: Scalar>(a: &T, x: &[(usize, T)], b: &T, y: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (c, v) = if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            let v = T::combine(a, &x[i].1, b, &zero)?;
            i += 1;
            (x[i - 1].0, v)
        } else if i == x.len() || y[j].0 < x[i].0 {
            let v = T::combine(a, &zero, b, &y[j].1)?;
            j += 1;
            (y[j - 1].0, v)
        } else {
            let v = T::combine(a, &x[i].1, b, &y[j].1)?;
            i += 1;
            j += 1;
            (x[i - 1].0, v)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    let mut g = T::from_i64(0);
    for (_, v) in &out {
        g = g.gcd(v);
        if g.is_unit() {
            return Some(out);
        }
    }
    if !g.is_zero() {
        for e in &mut out {
            e.1 = e.1.div_exact(&g);
        }
    }
    Some(out)
}

fn rank_generic<T: Scalar>(rows: &[SparseRow]) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::with_capacity(rows.len());
    for row in rows {
        let mut r = to_scalar::<T>(row);
        while let Some((c, a)) = r.first().cloned() {
            match pivots.get(&c) {
                Some(p) => {
                    // p[0] = (c, b): b * r - a * p clears column c
                    let b = p[0].1.clone();
                    r = combine_rows(&b, &r, &a, p)?;
                }
                None => {
                    pivots.insert(c, r);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// Rank over the rationals.
pub fn rank(rows: &[SparseRow]) -> usize {
    match rank_generic::<i128>(rows) {
        Some(r) => r,
        None => rank_generic::<BigInt>(rows).expect("big integer arithmetic does not overflow"),
    }
}

/// Modulus for [`rank_mod_p`], the prime `2^31 - 1`.
pub const PRIME: u64 = (1 << 31) - 1;

/// Rank over the field with [`PRIME`] elements. It never exceeds the
/// rational rank.
pub fn rank_mod_p(rows: &[SparseRow]) -> usize {
    let p = PRIME;
    let reduce = |v: i64| v.rem_euclid(p as i64) as u64;
    let inv = |a: u64| {
        // Fermat inverse
        let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::with_capacity(rows.len());
    let mut scratch: Vec<(usize, u64)> = Vec::new();
    for row in rows {
        let mut r: Vec<(usize, u64)> = row.iter().map(|&(c, v)| (c, reduce(v))).filter(|e| e.1 != 0).collect();
        r.sort_unstable_by_key(|e| e.0);
        while let Some(&(c, a)) = r.first() {
            match pivots.get(&c) {
                Some(piv) => {
                    // pivots are monic: r -= a * piv
                    scratch.clear();
                    let (mut i, mut j) = (0, 0);
                    while i < r.len() || j < piv.len() {
                        if j == piv.len() || (i < r.len() && r[i].0 < piv[j].0) {
                            scratch.push(r[i]);
                            i += 1;
                        } else {
                            let sub = a * piv[j].1 % p;
                            let (col, cur) = if i < r.len() && r[i].0 == piv[j].0 {
                                i += 1;
                                (r[i - 1].0, r[i - 1].1)
                            } else {
                                (piv[j].0, 0)
                            };
                            let v = (cur + p - sub) % p;
                            if v != 0 {
                                scratch.push((col, v));
                            }
                            j += 1;
                        }
                    }
                    std::mem::swap(&mut r, &mut scratch);
                }
                None => {
                    let f = inv(a);
                    for e in &mut r {
                        e.1 = e.1 * f % p;
                    }
                    pivots.insert(c, r);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Rank via the big-integer path only.
pub fn rank_big(rows: &[SparseRow]) -> usize {
    rank_generic::<BigInt>(rows).expect("big integer arithmetic does not overflow")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    /// Dense Gaussian elimination over the rationals.
    fn dense_rank(rows: &[SparseRow], ncols: usize) -> usize {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                let mut d = vec![BigRational::zero(); ncols];
                for &(c, v) in r {
                    d[c] = BigRational::from_integer(v.into());
                }
                d
            })
            .collect();
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for i in 0..m.len() {
                if i != rank && !m[i][c].is_zero() {
                    let f = &m[i][c] / &m[rank][c];
                    for k in 0..ncols {
                        let t = &f * &m[rank][k];
                        m[i][k] -= t;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![(0, 1), (1, 1)], vec![(0, 2), (1, 2)]]), 1);
        assert_eq!(rank(&[vec![(0, 1)], vec![(1, 1)], vec![(0, 1), (1, -1)]]), 2);
        assert_eq!(rank(&[vec![(3, 0)]]), 0);
    }

    #[test]
    fn overflow_falls_back() {
        // Hilbert-like matrix with large entries
        let big = 1i64 << 40;
        let rows: Vec<SparseRow> = (0..6)
            .map(|i| (0..6).map(|j| (j, big / (i + j + 1) as i64 + (i * j) as i64)).collect())
            .collect();
        assert_eq!(rank(&rows), rank_big(&rows));
        assert_eq!(rank(&rows), dense_rank(&rows, 6));
    }

    #[test]
    fn modular_rank_is_a_lower_bound() {
        // determinant 2^31 - 1 vanishes modulo the prime
        let rows = vec![vec![(0, PRIME as i64), (1, 0)], vec![(1, 1)]];
        assert_eq!(rank(&rows), 2);
        assert_eq!(rank_mod_p(&rows), 1);
    }

    #[test]
    fn random_matrices_match_dense() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let nr = rng.gen_range(1..8);
            let nc = rng.gen_range(1..8);
            let rows: Vec<SparseRow> = (0..nr)
                .map(|_| {
                    let mut row = Vec::new();
                    for c in 0..nc {
                        if rng.gen_bool(0.4) {
                            row.push((c, rng.gen_range(-3..=3)));
                        }
                    }
                    row
                })
                .collect();
            assert_eq!(rank(&rows), dense_rank(&rows, nc));
            assert_eq!(rank_mod_p(&rows), dense_rank(&rows, nc));
        }
    }
}
