//! Groebner bases of join-meet ideals.

use hibi::algebra::sample_orders;
use hibi::hibi::{groebner_check, join_meet_ideal, verify_gb_theorem};
use hibi::lattice::Lattice;
use hibi::{DistributiveLattice, Poset};

fn main() -> hibi::Result<()> {
    let b3 = DistributiveLattice::ideal_lattice(&Poset::antichain(3))?;
    let gb = verify_gb_theorem(&b3)?;
    let ideal = join_meet_ideal(b3.lattice());
    println!("Boolean lattice B3: {} generators, basis size {}", ideal.generators.len(), gb.basis.len());
    for m in &gb.initial {
        println!("  in: {}", m.render(&ideal.var_names));
    }

    let diamond = Lattice::from_poset(Poset::from_labeled_covers(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )?)?;
    let ideal = join_meet_ideal(&diamond);
    let orders = sample_orders(ideal.nvars(), None);
    let mut squarefree = 0;
    for o in &orders {
        if groebner_check(&ideal, o, Default::default())?.squarefree {
            squarefree += 1;
        }
    }
    println!("diamond: {squarefree} of {} orders give a squarefree initial ideal", orders.len());
    // diamond: 0 of 240 orders give a squarefree initial ideal
    Ok(())
}
