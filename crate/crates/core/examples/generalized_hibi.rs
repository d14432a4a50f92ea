//! Lattices of multichains and their comparison with the base poset.

use hibi::hibi::generalized_hibi;
use hibi::invariants::generalized_comparison;
use hibi::lattice::verify_multichain_ji;
use hibi::Poset;

fn main() -> hibi::Result<()> {
    let p = Poset::from_labeled_covers(&["a", "b", "c"], &[("a", "b")])?;
    for r in 2..=4 {
        let iso = verify_multichain_ji(&p, r)?;
        let g = generalized_hibi(&p, r)?;
        let cmp = generalized_comparison(&p, r, 10)?;
        println!(
            "r = {r}: {} multichains, {} generators, ji poset {} elements; type {} -> {}",
            iso.lattice.lattice.len(),
            g.ideal.generators.len(),
            iso.product.len(),
            cmp.base.type_,
            cmp.product.type_
        );
    }
    Ok(())
}
