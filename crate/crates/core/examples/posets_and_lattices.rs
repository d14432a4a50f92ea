//! Posets, their ideal lattices, and the lattice checks.

use hibi::lattice::Lattice;
use hibi::poset::enumerate_posets;
use hibi::{DistributiveLattice, Poset};

fn main() -> hibi::Result<()> {
    let p = Poset::from_labeled_covers(&["a", "b", "c"], &[("a", "b"), ("a", "c")])?;
    let l = DistributiveLattice::ideal_lattice(&p)?;
    println!("|P| = {}, |I(P)| = {}, rank P = {}", p.len(), l.len(), p.rank());
    l.birkhoff_check()?;
    println!("join-irreducibles recover P: ok");

    let pentagon = Lattice::from_poset(Poset::from_labeled_covers(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )?)?;
    let diamond = Lattice::from_poset(Poset::from_labeled_covers(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )?)?;
    for (name, lat) in [("pentagon", &pentagon), ("diamond", &diamond)] {
        println!("{name}: modular {}, distributive {}", lat.is_modular()?, lat.is_distributive());
    }
    // pentagon: modular false, distributive false
    // diamond: modular true, distributive false

    let classes = enumerate_posets(5, true)?;
    let mut per_size = [0usize; 6];
    for q in &classes {
        per_size[q.len()] += 1;
    }
    println!("isomorphism classes by size: {:?}", &per_size[1..]);
    // [1, 2, 5, 16, 63]
    Ok(())
}
