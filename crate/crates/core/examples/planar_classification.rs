//! Predicted and observed resolutions of simple planar lattices.

use hibi::betti::{betti_table, complete_bounds, linearly_related_observed, pure_resolution_observed};
use hibi::planar::enumerate_planar;

fn main() -> hibi::Result<()> {
    let all = enumerate_planar(3, 2)?;
    let simple: Vec<_> = all.iter().filter(|pl| pl.is_simple()).collect();
    println!("{} planar lattices in frame (3,2), {} simple", all.len(), simple.len());
    for pl in simple {
        let l = pl.lattice();
        let (i, j) = complete_bounds(&l)?;
        let t = betti_table(&l, i, j)?;
        println!(
            "{:?}: squares {}, linrel {} / {}, pure {:?} / {}",
            pl.points(),
            pl.max_chained_squares(),
            pl.linrel_predicted()?,
            linearly_related_observed(&t).holds,
            pl.pureres_predicted()?,
            pure_resolution_observed(&t).holds
        );
    }
    Ok(())
}
