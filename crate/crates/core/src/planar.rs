//! Planar distributive lattices given as finite sublattices of the integer
//! grid, and the regularity and resolution classifications for them.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{DistributiveLattice, Lattice};
use crate::poset::Poset;

pub type Point = (u32, u32);

/// Largest frame side accepted by [`enumerate_planar`].
pub const MAX_SWEEP_FRAME: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PlanarLattice {
    points: Vec<Point>,
    frame: Point,
}

fn leq(a: Point, b: Point) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

fn meet(a: Point, b: Point) -> Point {
    (a.0.min(b.0), a.1.min(b.1))
}

fn join(a: Point, b: Point) -> Point {
    (a.0.max(b.0), a.1.max(b.1))
}

/// Validates and normalizes a point set: translated so the least point is
/// the origin, closed under componentwise min and max, and any two
/// comparable points joined by unit steps.
pub fn planar_from_points(points: &[(i64, i64)]) -> Result<PlanarLattice> {
    if points.is_empty() {
        return Err(Error::EmptyResult);
    }
    let x0 = points.iter().map(|p| p.0).min().unwrap();
    let y0 = points.iter().map(|p| p.1).min().unwrap();
    let set: BTreeSet<Point> = points
        .iter()
        .map(|&(x, y)| ((x - x0) as u32, (y - y0) as u32))
        .collect();
    for &a in &set {
        for &b in &set {
            for c in [meet(a, b), join(a, b)] {
                if !set.contains(&c) {
                    return Err(Error::NotASublattice(format!(
                        "{a:?} and {b:?} lack {c:?}"
                    )));
                }
            }
        }
    }
    for &a in &set {
        for &b in &set {
            if a != b && leq(a, b) {
                let step = [(a.0 + 1, a.1), (a.0, a.1 + 1)];
                if !step.iter().any(|&c| leq(c, b) && set.contains(&c)) {
                    return Err(Error::NotConnected(format!("{a:?} to {b:?}")));
                }
            }
        }
    }
    let frame = (
        set.iter().map(|p| p.0).max().unwrap(),
        set.iter().map(|p| p.1).max().unwrap(),
    );
    Ok(PlanarLattice {
        points: set.into_iter().collect(),
        frame,
    })
}

/// Pure-resolution classes for simple planar lattices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PureClass {
    /// A chain plus an isolated element: linear resolution.
    Linear,
    Cyclic,
    /// The eight-point lattice with resolution shifts 2, 3, 5.
    SporadicEight,
    /// The full 3 by 3 grid.
    SporadicGrid,
    None,
}

impl PureClass {
    pub fn is_pure(self) -> bool {
        self != PureClass::None
    }
}

impl PlanarLattice {
    pub fn from_points(points: &[(i64, i64)]) -> Result<PlanarLattice> {
        planar_from_points(points)
    }

    /// All points of `[(0,0),(m,n)]`.
    pub fn grid(m: u32, n: u32) -> PlanarLattice {
        let points = (0..=m).flat_map(|x| (0..=n).map(move |y| (x, y))).collect();
        PlanarLattice { points, frame: (m, n) }
    }

    /// The eight-point lattice with a non-cyclic pure resolution.
    pub fn eight_point() -> PlanarLattice {
        planar_from_points(&[(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)]).unwrap()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn frame(&self) -> Point {
        self.frame
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.points.binary_search(&p).is_ok()
    }

    pub fn transpose(&self) -> PlanarLattice {
        let mut points: Vec<Point> = self.points.iter().map(|&(x, y)| (y, x)).collect();
        points.sort();
        PlanarLattice {
            points,
            frame: (self.frame.1, self.frame.0),
        }
    }

    fn signed(&self) -> Vec<(i64, i64)> {
        self.points.iter().map(|&(x, y)| (x as i64, y as i64)).collect()
    }

    pub fn poset(&self) -> Poset {
        let n = self.points.len();
        let labels = self.points.iter().map(|(x, y)| format!("({x},{y})")).collect();
        let mut rel = vec![false; n * n];
        for (i, &a) in self.points.iter().enumerate() {
            for (j, &b) in self.points.iter().enumerate() {
                rel[i * n + j] = leq(a, b);
            }
        }
        Poset::from_leq(labels, rel).expect("componentwise order is a partial order")
    }

    pub fn lattice(&self) -> DistributiveLattice {
        let l = Lattice::from_poset(self.poset()).expect("sublattice of the grid");
        DistributiveLattice::from_lattice(l).expect("sublattices of the grid are distributive")
    }

    /// Lower-left corners of the unit squares.
    pub fn squares(&self) -> Vec<Point> {
        self.points
            .iter()
            .copied()
            .filter(|&(x, y)| {
                self.contains((x + 1, y)) && self.contains((x, y + 1)) && self.contains((x + 1, y + 1))
            })
            .collect()
    }

    /// Unit edges `a < b` such that every point lies below `a` or above `b`.
    pub fn cut_edges(&self) -> Vec<(Point, Point)> {
        let mut out = Vec::new();
        for &a in &self.points {
            for b in [(a.0 + 1, a.1), (a.0, a.1 + 1)] {
                if self.contains(b) && self.points.iter().all(|&c| leq(c, a) || leq(b, c)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// No join-irreducible element is comparable to all others.
    pub fn is_simple(&self) -> bool {
        let l = self.lattice();
        let p = l.ji_poset();
        !(0..p.len()).any(|x| (0..p.len()).all(|y| p.comparable(x, y)))
    }

    /// Strips bottom and top tails, which removes a unique minimal or
    /// maximal join-irreducible element without changing Betti numbers.
    pub fn reduce(&self) -> Result<PlanarLattice> {
        let mut pts: BTreeSet<Point> = self.points.iter().copied().collect();
        loop {
            let bottom = *pts.iter().next().unwrap();
            let top = *pts.iter().next_back().unwrap();
            if pts.len() == 1 {
                break;
            }
            let up = |s: &BTreeSet<Point>, a: Point| {
                [(a.0 + 1, a.1), (a.0, a.1 + 1)].iter().filter(|c| s.contains(c)).count()
            };
            let down = |s: &BTreeSet<Point>, a: Point| {
                let mut k = 0;
                if a.0 > 0 && s.contains(&(a.0 - 1, a.1)) {
                    k += 1;
                }
                if a.1 > 0 && s.contains(&(a.0, a.1 - 1)) {
                    k += 1;
                }
                k
            };
            if up(&pts, bottom) == 1 {
                pts.remove(&bottom);
            } else if down(&pts, top) == 1 {
                pts.remove(&top);
            } else {
                break;
            }
        }
        let pts: Vec<(i64, i64)> = pts.iter().map(|&(x, y)| (x as i64, y as i64)).collect();
        let reduced = planar_from_points(&pts)?;
        if !reduced.is_simple() {
            return Err(Error::NotSimpleAfterReduction);
        }
        Ok(reduced)
    }

    /// Rank levels have at most two points and no two adjacent levels both
    /// have two.
    pub fn is_cyclic(&self) -> bool {
        let top = self.frame.0 + self.frame.1;
        let mut sizes = vec![0usize; top as usize + 1];
        for &(x, y) in &self.points {
            sizes[(x + y) as usize] += 1;
        }
        sizes.iter().all(|&s| s <= 2) && sizes.windows(2).all(|w| w[0] < 2 || w[1] < 2)
    }

    /// Lengths and counts of chains of squares `Q_1, …, Q_r` with the top of
    /// each below the bottom of the next: `(max r, number of chains of that
    /// length)`.
    fn square_chains(&self) -> (usize, u64) {
        let sq = self.squares();
        // squares sorted by corner, so compatible predecessors come first
        let mut best = vec![(1usize, 1u64); sq.len()];
        for k in 0..sq.len() {
            for i in 0..k {
                let top = (sq[i].0 + 1, sq[i].1 + 1);
                if leq(top, sq[k]) {
                    let cand = best[i].0 + 1;
                    if cand > best[k].0 {
                        best[k] = (cand, best[i].1);
                    } else if cand == best[k].0 {
                        best[k].1 += best[i].1;
                    }
                }
            }
        }
        let max = best.iter().map(|b| b.0).max().unwrap_or(0);
        if max == 0 {
            return (0, 1);
        }
        (max, best.iter().filter(|b| b.0 == max).map(|b| b.1).sum())
    }

    pub fn max_chained_squares(&self) -> usize {
        self.square_chains().0
    }

    pub fn count_max_cyclic(&self) -> u64 {
        self.square_chains().1
    }

    /// Prediction for `beta_{1,j}(I) = 0` for all `j >= 4`, after reduction.
    pub fn linrel_predicted(&self) -> Result<bool> {
        let l = self.reduce()?;
        let (m, n) = l.frame;
        if m <= 1 || n <= 1 {
            return Ok(true);
        }
        let missing = [(m, 0), (0, n)].iter().filter(|&&c| !l.contains(c)).count();
        Ok(missing <= 1 && l.contains((1, n - 1)) && l.contains((m - 1, 1)))
    }

    pub fn pureres_predicted(&self) -> Result<PureClass> {
        let l = self.reduce()?;
        let (m, n) = l.frame;
        if m <= 1 || n <= 1 {
            return Ok(PureClass::Linear);
        }
        if l.is_cyclic() {
            return Ok(PureClass::Cyclic);
        }
        let same = |other: &PlanarLattice| &l == other || l == other.transpose();
        if same(&PlanarLattice::eight_point()) {
            return Ok(PureClass::SporadicEight);
        }
        if same(&PlanarLattice::grid(2, 2)) {
            return Ok(PureClass::SporadicGrid);
        }
        Ok(PureClass::None)
    }

    /// Removes the columns in `cols` and rows in `rows`, then closes the gaps.
    pub fn induced_sublattice(&self, cols: &[u32], rows: &[u32]) -> Result<PlanarLattice> {
        let kept: Vec<(i64, i64)> = self
            .points
            .iter()
            .filter(|(x, y)| !cols.contains(x) && !rows.contains(y))
            .map(|&(x, y)| {
                let dx = cols.iter().filter(|&&c| c < x).count() as i64;
                let dy = rows.iter().filter(|&&r| r < y).count() as i64;
                (x as i64 - dx, y as i64 - dy)
            })
            .collect();
        if kept.is_empty() {
            return Err(Error::EmptyResult);
        }
        planar_from_points(&kept)
    }

    pub fn to_signed_points(&self) -> Vec<(i64, i64)> {
        self.signed()
    }
}

/// Every planar lattice with frame inside `[(0,0),(m,n)]`.
///
/// Columns of a planar lattice are intervals whose lower and upper ends
/// never decrease and consecutive columns overlap.
pub fn enumerate_planar(m: u32, n: u32) -> Result<Vec<PlanarLattice>> {
    if m > MAX_SWEEP_FRAME || n > MAX_SWEEP_FRAME {
        return Err(Error::bound("planar sweep frame", m.max(n) as usize, MAX_SWEEP_FRAME as usize));
    }
    let mut out = Vec::new();
    let mut cols: Vec<(u32, u32)> = Vec::new();
    fn go(m: u32, n: u32, cols: &mut Vec<(u32, u32)>, out: &mut Vec<PlanarLattice>) {
        let pts: Vec<(i64, i64)> = cols
            .iter()
            .enumerate()
            .flat_map(|(x, &(lo, hi))| (lo..=hi).map(move |y| (x as i64, y as i64)))
            .collect();
        out.push(planar_from_points(&pts).expect("monotone overlapping columns form a planar lattice"));
        if cols.len() as u32 == m + 1 {
            return;
        }
        let &(plo, phi) = cols.last().unwrap();
        for lo in plo..=phi {
            for hi in phi.max(lo)..=n {
                cols.push((lo, hi));
                go(m, n, cols, out);
                cols.pop();
            }
        }
    }
    for hi in 0..=n {
        cols.push((0, hi));
        go(m, n, &mut cols, &mut out);
        cols.pop();
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn first_example() -> PlanarLattice {
        let mut pts = Vec::new();
        for x in 0..=3 {
            for y in 0..=1 {
                pts.push((x, y));
            }
        }
        for x in 2..=3 {
            for y in 2..=3 {
                pts.push((x, y));
            }
        }
        planar_from_points(&pts).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(planar_from_points(&[(0, 0), (1, 0), (0, 1), (1, 1)]).unwrap().squares(), vec![(0, 0)]);
        assert!(matches!(planar_from_points(&[(0, 0), (1, 1)]), Err(Error::NotConnected(_))));
        assert!(matches!(planar_from_points(&[(1, 0), (0, 1)]), Err(Error::NotASublattice(_))));
        let shifted = planar_from_points(&[(5, 5), (6, 5)]).unwrap();
        assert_eq!(shifted.points(), &[(0, 0), (1, 0)]);
        assert_eq!(PlanarLattice::eight_point().len(), 8);
    }

    #[test]
    fn squares_and_cut_edges() {
        let g = PlanarLattice::grid(2, 2);
        assert_eq!(g.squares().len(), 4);
        assert!(g.cut_edges().is_empty());
        assert!(g.is_simple());

        // the shared corner lies on no cut edge and the join-irreducibles
        // form two incomparable pairs, so the lattice is simple
        let corners = planar_from_points(&[(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)]).unwrap();
        assert_eq!(corners.squares().len(), 2);
        assert!(corners.cut_edges().is_empty());
        assert!(corners.is_simple());

        let chain = planar_from_points(&[(0, 0), (1, 0), (1, 1), (2, 1)]).unwrap();
        assert!(chain.squares().is_empty());
        assert_eq!(chain.cut_edges().len(), 3);
        assert!(!chain.is_simple());
    }

    #[test]
    fn chained_squares_examples() {
        let l1 = first_example();
        assert_eq!(l1.len(), 12);
        assert_eq!(l1.max_chained_squares(), 2);
        let mut pts = l1.to_signed_points();
        pts.push((1, 2));
        let l2 = planar_from_points(&pts).unwrap();
        assert_eq!(l2.max_chained_squares(), 3);
        assert_eq!(PlanarLattice::grid(1, 1).max_chained_squares(), 1);
        assert!(l2.linrel_predicted().unwrap());
        assert!(!l1.linrel_predicted().unwrap());
        assert_eq!(l1.induced_sublattice(&[1], &[]).unwrap().len(), 10);
        assert_eq!(l1.induced_sublattice(&[], &[]).unwrap(), l1);
    }

    #[test]
    fn pure_classes() {
        assert_eq!(PlanarLattice::grid(2, 2).pureres_predicted().unwrap(), PureClass::SporadicGrid);
        assert_eq!(PlanarLattice::eight_point().pureres_predicted().unwrap(), PureClass::SporadicEight);
        assert_eq!(PlanarLattice::eight_point().transpose().pureres_predicted().unwrap(), PureClass::SporadicEight);
        assert_eq!(PlanarLattice::grid(3, 2).pureres_predicted().unwrap(), PureClass::None);
        assert_eq!(PlanarLattice::grid(1, 3).pureres_predicted().unwrap(), PureClass::Linear);
    }

    #[test]
    fn enumeration_matches_subset_scan() {
        let fast = enumerate_planar(3, 2).unwrap();
        let grid: Vec<(i64, i64)> = (0..=3).flat_map(|x| (0..=2).map(move |y| (x, y))).collect();
        let mut slow = BTreeSet::new();
        for mask in 1u32..1 << grid.len() {
            let pts: Vec<(i64, i64)> = (0..grid.len()).filter(|&i| mask >> i & 1 == 1).map(|i| grid[i]).collect();
            if !pts.contains(&(0, 0)) {
                continue;
            }
            if let Ok(l) = planar_from_points(&pts) {
                slow.insert(l);
            }
        }
        assert_eq!(fast, slow.into_iter().collect::<Vec<_>>());
    }
}
