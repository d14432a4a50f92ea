//! h-vectors, regularity and the extremal classes.

use hibi::invariants::{extremal_classification, hilbert_data, regularity_formula};
use hibi::{DistributiveLattice, Poset};

fn main() -> hibi::Result<()> {
    let cases = [
        ("chain of 3", Poset::chain(3)),
        ("antichain of 3", Poset::antichain(3)),
        ("two 2-chains", Poset::from_labeled_covers(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")])?),
    ];
    for (name, p) in cases {
        let l = DistributiveLattice::ideal_lattice(&p)?;
        let h = hilbert_data(&l)?;
        println!(
            "{name}: h = {:?}, dim {}, reg {} (formula {}), e = {}",
            h.h,
            h.dim,
            h.reg,
            regularity_formula(&p),
            h.multiplicity()
        );
        let x = extremal_classification(&p);
        println!("  extremal Gorenstein {}, nearly {}", x.extremal_gorenstein, x.nearly_extremal_gorenstein);
    }
    Ok(())
}
