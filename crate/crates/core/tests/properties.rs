use hibi::betti::{self, betti_table_with, BettiLimits, Candidates};
use hibi::cli::hilbert_function_check;
use hibi::invariants::{self, canonical_data, hilbert_data, minimal_t, minimal_t_pairwise, regularity_formula};
use hibi::io::{parse_input, poset_doc, Input};
use hibi::linalg::{rank, rank_big, rank_mod_p, SparseRow};
use hibi::planar::PlanarLattice;
use hibi::poset::canonical_form;
use hibi::{DistributiveLattice, Lattice, Poset};
use proptest::prelude::*;

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

/// Posets on up to `max` elements from random relations `i < j`.
fn poset_strategy(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut rel = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        rel.push((i, j));
                    }
                    k += 1;
                }
            }
            Poset::from_relations(labels(n), &rel).unwrap()
        })
    })
}

/// Planar lattices from non-decreasing column intervals.
fn planar_strategy() -> impl Strategy<Value = PlanarLattice> {
    (1usize..=4, 0u32..=3).prop_flat_map(|(cols, height)| {
        proptest::collection::vec((0u32..=height, 0u32..=height), cols).prop_filter_map("not planar", |raw| {
            let mut lo = 0;
            let mut hi = 0;
            let mut pts = Vec::new();
            for (x, (a, b)) in raw.into_iter().enumerate() {
                let (a, b) = (a.min(b), a.max(b));
                let nlo = a.max(lo).min(hi);
                let nhi = b.max(hi).max(nlo);
                lo = nlo;
                hi = nhi;
                for y in lo..=hi {
                    pts.push((x as i64, y as i64));
                }
            }
            PlanarLattice::from_points(&pts).ok()
        })
    })
}

fn relabel(p: &Poset, perm: &[usize]) -> Poset {
    let rel: Vec<(usize, usize)> = p.covers().into_iter().map(|(x, y)| (perm[x], perm[y])).collect();
    Poset::from_relations(labels(p.len()), &rel).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn birkhoff_round_trip(p in poset_strategy(6)) {
        let dl = DistributiveLattice::ideal_lattice(&p).unwrap();
        prop_assert!(dl.birkhoff_check().is_ok());
        prop_assert_eq!(canonical_form(dl.ji_poset()), canonical_form(&p));
        prop_assert_eq!(dl.lattice().is_modular(), Ok(true));
    }

    #[test]
    fn regularity_matches_h_vector(p in poset_strategy(6)) {
        let dl = DistributiveLattice::ideal_lattice(&p).unwrap();
        let h = hilbert_data(&dl).unwrap();
        prop_assert_eq!(h.reg, regularity_formula(&p));
        prop_assert_eq!(h.h.iter().sum::<u128>(), h.multiplicity());
        prop_assert!(hilbert_function_check(&dl, &h, 3).is_ok());
    }

    #[test]
    fn dual_poset_gives_same_h_vector(p in poset_strategy(6)) {
        let a = hilbert_data(&DistributiveLattice::ideal_lattice(&p).unwrap()).unwrap();
        let b = hilbert_data(&DistributiveLattice::ideal_lattice(&p.dual()).unwrap()).unwrap();
        prop_assert_eq!(a.h, b.h);
    }

    #[test]
    fn canonical_form_ignores_labels(p in poset_strategy(6), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..p.len()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(canonical_form(&p), canonical_form(&relabel(&p, &perm)));
    }

    #[test]
    fn gorenstein_exactly_when_pure(p in poset_strategy(6)) {
        let cd = canonical_data(&p, 10).unwrap();
        prop_assert_eq!(cd.gorenstein, p.is_pure());
        prop_assert_eq!(cd.type_ == 1, p.is_pure());
        prop_assert!(invariants::pseudo_gorenstein(&p, 10).is_ok());
        if cd.level {
            prop_assert!(invariants::level_necessary(&p));
        }
    }

    #[test]
    fn minimal_maps_match_pairwise_search(p in poset_strategy(5)) {
        let mut fast = minimal_t(&p, 10).unwrap();
        let mut slow = minimal_t_pairwise(&p);
        fast.sort_by(|a, b| (a.bottom, &a.values).cmp(&(b.bottom, &b.values)));
        slow.sort_by(|a, b| (a.bottom, &a.values).cmp(&(b.bottom, &b.values)));
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn json_round_trip(p in poset_strategy(6)) {
        let text = serde_json::to_string(&poset_doc(&p)).unwrap();
        match parse_input(&text).unwrap() {
            Input::Poset(q) => prop_assert_eq!(canonical_form(&p), canonical_form(&q)),
            _ => prop_assert!(false, "wrong input kind"),
        }
    }

    #[test]
    fn ranks_agree(rows in proptest::collection::vec(
        proptest::collection::vec((0usize..7, -4i64..=4), 0..6), 0..8)
    ) {
        let rows: Vec<SparseRow> = rows
            .into_iter()
            .map(|mut r| {
                r.sort_by_key(|e| e.0);
                r.dedup_by_key(|e| e.0);
                r
            })
            .collect();
        let r = rank(&rows);
        prop_assert_eq!(r, rank_big(&rows));
        prop_assert!(rank_mod_p(&rows) <= r);
    }

    #[test]
    fn planar_transpose_invariants(pl in planar_strategy()) {
        let t = pl.transpose();
        prop_assert_eq!(pl.squares().len(), t.squares().len());
        prop_assert_eq!(pl.max_chained_squares(), t.max_chained_squares());
        prop_assert_eq!(pl.count_max_cyclic(), t.count_max_cyclic());
        prop_assert_eq!(pl.is_simple(), t.is_simple());
        let reg = hilbert_data(&pl.lattice()).unwrap().reg;
        prop_assert_eq!(reg, pl.max_chained_squares());
        prop_assert_eq!(pl.count_max_cyclic() == 1, invariants::pseudo_gorenstein_by_depth(pl.lattice().ji_poset()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn betti_tables_are_consistent(p in poset_strategy(5)) {
        let dl = DistributiveLattice::ideal_lattice(&p).unwrap();
        prop_assume!(dl.len() <= 10);
        let hd = hilbert_data(&dl).unwrap();
        let (i, j) = betti::complete_bounds(&dl).unwrap();
        let limits = BettiLimits::default();
        let t = betti_table_with(&dl, i, j, Candidates::Subsets, &limits).unwrap();
        prop_assert!(betti::check_table(&dl, &t, &hd).is_ok());
        prop_assert!(betti::quadratic_gb_syzygy_bound(&t).is_ok());
        let direct = BettiLimits { collapse: false, ..limits };
        let every = betti_table_with(&dl, i, j, Candidates::AllDegrees, &direct).unwrap();
        prop_assert_eq!(&t.graded, &every.graded);
    }

    #[test]
    fn non_distributive_lattices_keep_both_modularity_routes(p in poset_strategy(6)) {
        // adjoin a bottom and a top; keep the result only when it is a lattice
        let n = p.len();
        let mut names = labels(n);
        names.push("bot".into());
        names.push("top".into());
        let mut rel: Vec<(usize, usize)> = p.covers();
        for x in 0..n {
            rel.push((n, x));
            rel.push((x, n + 1));
        }
        let q = Poset::from_relations(names, &rel).unwrap();
        if let Ok(l) = Lattice::from_poset(q) {
            prop_assert!(l.is_modular().is_ok());
            if l.is_distributive() {
                prop_assert_eq!(l.is_modular(), Ok(true));
            }
        }
    }
}
