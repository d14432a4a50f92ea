//! Graded Betti numbers from squarefree divisor complexes.
//!
//! Set `HIBI_MAX_MEM` to raise the face budget for larger lattices.

use hibi::betti::{betti_table, complete_bounds, linearly_related_observed, pure_resolution_observed};
use hibi::planar::PlanarLattice;

fn show(name: &str, pl: &PlanarLattice) -> hibi::Result<()> {
    let l = pl.lattice();
    let (i, j) = complete_bounds(&l)?;
    let t = betti_table(&l, i, j)?;
    println!("{name} ({} points):", l.len());
    for (i, j, v) in t.ideal_entries() {
        println!("  beta_{i},{j}(I) = {v}");
    }
    println!(
        "  linearly related {}, pure {}",
        linearly_related_observed(&t).holds,
        pure_resolution_observed(&t).holds
    );
    Ok(())
}

fn main() -> hibi::Result<()> {
    show("eight points", &PlanarLattice::eight_point())?;
    // beta_0,2 = 5, beta_1,3 = 5, beta_2,5 = 1
    show("3x3 grid", &PlanarLattice::grid(2, 2))?;
    show("4x3 grid", &PlanarLattice::grid(3, 2))?;
    Ok(())
}
