//! Minimal generators of the canonical module and the predicates built on
//! them.

use hibi::invariants::{canonical_data, miyazaki_sufficient, pseudo_gorenstein_by_depth};
use hibi::Poset;

fn main() -> hibi::Result<()> {
    let butterfly = Poset::from_labeled_covers(
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("c", "d"), ("d", "e"), ("a", "e"), ("c", "b")],
    )?;
    let joined = Poset::from_labeled_covers(
        &["a1", "a2", "a3", "b1", "b2", "b3"],
        &[("a1", "a2"), ("a2", "a3"), ("b1", "b2"), ("b2", "b3"), ("a1", "b3")],
    )?;
    for (name, p) in [("butterfly", &butterfly), ("joined chains", &joined)] {
        let cd = canonical_data(p, 10)?;
        println!(
            "{name}: type {}, degrees {:?}, Gorenstein {}, level {}, pseudo-Gorenstein {} (by depth {})",
            cd.type_,
            cd.degrees,
            cd.gorenstein,
            cd.level,
            cd.pseudo_gorenstein,
            pseudo_gorenstein_by_depth(p)
        );
        for v in &cd.minimal {
            let values: Vec<String> = (0..p.len()).map(|x| format!("{}={}", p.label(x), v.values[x])).collect();
            println!("  v(bottom)={} {}", v.bottom, values.join(" "));
        }
    }
    let m = miyazaki_sufficient(&butterfly, 10)?;
    println!("butterfly sufficient conditions: upper {}, lower {}", m.upper, m.lower);
    // level although neither condition holds
    Ok(())
}
