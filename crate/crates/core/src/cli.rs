//! Report builders behind the `hibi` binary. Every verb returns a JSON
//! value; object keys come out sorted, so equal inputs give equal bytes.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{sample_orders, GbLimits, MonomialOrder, OrderKind};
use crate::betti::{self, BettiTable};
use crate::error::{Error, Result};
use crate::hibi::{self, count_multichains, groebner_check, hibi_ideal, join_meet_ideal, standard_monomials};
use crate::invariants::{self, hilbert_data, HilbertData};
use crate::io::{cover_labels, poset_doc, Input};
use crate::lattice::{self, DistributiveLattice, Lattice};
use crate::planar::{enumerate_planar, PlanarLattice};
use crate::poset::{enumerate_posets, Poset, MAX_ENUMERATION_SIZE};

/// Exit status for an error: 2 for unusable input, 3 for an exceeded
/// bound, 4 for a failed theorem check.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } => 3,
        Error::TheoremViolated { .. } => 4,
        _ => 2,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Runs `f` as a named check. Theorem violations become failed checks;
/// other errors propagate.
fn check(out: &mut Vec<Check>, name: &str, f: impl FnOnce() -> Result<()>) -> Result<()> {
    match f() {
        Ok(()) => out.push(Check {
            name: name.into(),
            pass: true,
            witness: None,
        }),
        Err(Error::TheoremViolated { check, witness }) => out.push(Check {
            name: name.into(),
            pass: false,
            witness: Some(format!("{check}: {witness}")),
        }),
        Err(e) => return Err(e),
    }
    Ok(())
}

fn expect(cond: bool, what: &str, witness: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::violated(what, witness()))
    }
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub r: Option<usize>,
    pub betti: Option<(usize, usize)>,
    /// Largest poset for canonical-module enumeration.
    pub max_canonical: usize,
    /// Largest lattice for the Groebner basis check.
    pub max_groebner: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            r: None,
            betti: None,
            max_canonical: invariants::DEFAULT_MAX_T_POSET,
            max_groebner: 24,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub value: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn input_echo(input: &Input) -> Value {
    match input {
        Input::Poset(p) => serde_json::to_value(poset_doc(p)).unwrap(),
        Input::Lattice(l) => json!({
            "type": "lattice",
            "elements": l.poset().labels(),
            "relations": cover_labels(l.poset()),
        }),
        Input::Planar(pl) => json!({"type": "planar_lattice", "points": pl.points()}),
    }
}

pub fn betti_json(t: &BettiTable, multigraded: bool) -> Value {
    let rows = |entries: Vec<(usize, usize, u64)>| -> Vec<Value> {
        entries.into_iter().map(|(i, j, v)| json!({"i": i, "j": j, "value": v})).collect()
    };
    let ring: Vec<(usize, usize, u64)> = t.graded.iter().map(|(&(i, j), &v)| (i, j, v)).collect();
    let mut out = json!({
        "bounds": {"max_i": t.max_i, "max_j": t.max_j},
        "complete": t.complete,
        "ideal": rows(t.ideal_entries()),
        "ring": rows(ring),
    });
    if multigraded {
        out["multigraded"] = t
            .multigraded
            .iter()
            .map(|((i, h), v)| json!({"i": i, "degree": h.degree, "weights": h.weights, "value": v}))
            .collect();
    }
    out
}

fn planar_json(pl: &PlanarLattice) -> Value {
    let reduced = pl.reduce();
    let mut v = json!({
        "frame": pl.frame(),
        "squares": pl.squares(),
        "cut_edges": pl.cut_edges(),
        "simple": pl.is_simple(),
        "cyclic": pl.is_cyclic(),
        "max_chained_squares": pl.max_chained_squares(),
        "count_max_cyclic": pl.count_max_cyclic(),
    });
    match reduced {
        Ok(r) => {
            v["reduced_points"] = json!(r.points());
            v["linrel_predicted"] = json!(pl.linrel_predicted().unwrap());
            v["pureres_predicted"] = json!(pl.pureres_predicted().unwrap());
        }
        Err(e) => v["reduction"] = json!(e.to_string()),
    }
    v
}

/// Full pipeline for one input.
pub fn analyze(input: &Input, opts: &AnalyzeOptions) -> Result<Report> {
    let mut checks = Vec::new();
    let mut value = json!({"input": input_echo(input)});
    let lattice = input.lattice()?;
    let dl = input.distributive()?;
    let modular = lattice.is_modular()?;
    value["lattice"] = json!({
        "size": lattice.len(),
        "distributive": dl.is_some(),
        "modular": modular,
        "join_irreducibles": lattice.join_irreducibles().len(),
    });
    let Some(dl) = dl else {
        let ideal = join_meet_ideal(&lattice);
        value["ideal"] = json!({"generators": ideal.generators.len()});
        if lattice.len() <= opts.max_groebner {
            let gb = groebner_check(&ideal, &ideal.order, GbLimits::default())?;
            value["ideal"]["groebner"] = json!({
                "basis_size": gb.basis.len(),
                "equals_generators": gb.equals_generators,
                "squarefree": gb.squarefree,
            });
        }
        value["checks"] = json!(checks);
        return Ok(Report { value, checks });
    };
    let p = dl.ji_poset().clone();
    check(&mut checks, "birkhoff", || dl.birkhoff_check())?;

    let ideal = hibi_ideal(&dl);
    value["ideal"] = json!({"generators": ideal.generators.len()});
    if dl.len() <= opts.max_groebner {
        check(&mut checks, "groebner_basis", || {
            let gb = hibi::verify_gb_theorem(&dl)?;
            value["ideal"]["groebner"] = json!({
                "basis_size": gb.basis.len(),
                "equals_generators": gb.equals_generators,
                "squarefree": gb.squarefree,
            });
            Ok(())
        })?;
    }

    let hd = hilbert_data(&dl)?;
    value["invariants"] = json!({
        "f": hd.f,
        "h": hd.h,
        "dim": hd.dim,
        "projdim": hd.projdim,
        "reg": hd.reg,
        "a_invariant": hd.a_invariant,
        "multiplicity": hd.multiplicity(),
    });
    check(&mut checks, "regularity_formula", || {
        let formula = invariants::regularity_formula(&p);
        expect(formula == hd.reg, "regularity equals |P| - rank P - 1", || format!("{formula} vs {}", hd.reg))
    })?;
    check(&mut checks, "hilbert_function", || hilbert_function_check(&dl, &hd, 4))?;

    let mut predicates = json!({
        "pure": p.is_pure(),
        "pseudo_gorenstein_by_depth": invariants::pseudo_gorenstein_by_depth(&p),
        "level_necessary": invariants::level_necessary(&p),
        "extremal": invariants::extremal_classification(&p),
    });
    if p.len() <= opts.max_canonical {
        let cd = invariants::canonical_data(&p, opts.max_canonical)?;
        value["canonical"] = serde_json::to_value(&cd).unwrap();
        predicates["gorenstein"] = json!(cd.gorenstein);
        predicates["level"] = json!(cd.level);
        predicates["pseudo_gorenstein"] = json!(cd.pseudo_gorenstein);
        check(&mut checks, "gorenstein_iff_pure", || {
            expect(cd.gorenstein == p.is_pure(), "Gorenstein exactly when pure", || format!("type {}", cd.type_))
        })?;
        check(&mut checks, "pseudo_gorenstein", || {
            invariants::pseudo_gorenstein(&p, opts.max_canonical).map(|_| ())
        })?;
        check(&mut checks, "miyazaki", || {
            predicates["miyazaki"] = json!(invariants::miyazaki_sufficient(&p, opts.max_canonical)?);
            Ok(())
        })?;
        check(&mut checks, "level_necessary", || {
            expect(!cd.level || invariants::level_necessary(&p), "level implies the cover inequality", String::new)
        })?;
        match invariants::level_regular_planar(&p, opts.max_canonical) {
            Ok(lv) => {
                predicates["level_regular_planar"] = json!(lv);
                checks.push(Check {
                    name: "level_regular_planar".into(),
                    pass: true,
                    witness: None,
                });
            }
            Err(Error::NotApplicable(_)) => {}
            Err(Error::TheoremViolated { check, witness }) => checks.push(Check {
                name: "level_regular_planar".into(),
                pass: false,
                witness: Some(format!("{check}: {witness}")),
            }),
            Err(e) => return Err(e),
        }
        check(&mut checks, "a_invariant", || {
            let min = cd.degrees.iter().copied().min().unwrap_or(0) as i64;
            expect(hd.a_invariant == -min, "a-invariant is minus the least canonical degree", || {
                format!("{} vs {min}", hd.a_invariant)
            })
        })?;
    }
    value["predicates"] = predicates;

    if let Some(r) = opts.r {
        if p.len() * (r.max(2) - 1) <= opts.max_canonical {
            check(&mut checks, "multichain_isomorphism", || lattice::verify_multichain_ji(&p, r).map(|_| ()))?;
            check(&mut checks, "generalized_comparison", || {
                let cmp = invariants::generalized_comparison(&p, r, opts.max_canonical)?;
                value["generalized"] = json!({
                    "r": r,
                    "type": cmp.product.type_,
                    "degrees": cmp.product.degrees,
                    "level": cmp.product.level,
                    "pseudo_gorenstein": cmp.product.pseudo_gorenstein,
                });
                Ok(())
            })?;
        } else {
            return Err(Error::bound("poset size for the multichain comparison", p.len() * (r - 1), opts.max_canonical));
        }
    }

    if let Input::Planar(pl) = input {
        value["planar"] = planar_json(pl);
        check(&mut checks, "chained_squares", || {
            let sq = pl.max_chained_squares();
            expect(sq == hd.reg, "regularity equals the longest chain of squares", || format!("{sq} vs {}", hd.reg))
        })?;
    }

    if let Some((mi, mj)) = opts.betti {
        let t = betti::betti_table(&dl, mi, mj)?;
        check(&mut checks, "betti_consistency", || betti::check_table(&dl, &t, &hd))?;
        check(&mut checks, "quadratic_syzygy_bound", || betti::quadratic_gb_syzygy_bound(&t))?;
        let mut b = betti_json(&t, false);
        b["linearly_related"] = json!(betti::linearly_related_observed(&t));
        b["pure_resolution"] = json!(betti::pure_resolution_observed(&t));
        value["betti"] = b;
    }
    value["checks"] = json!(checks);
    Ok(Report { value, checks })
}

/// Hilbert function from the h-vector against counts of multichains and of
/// standard monomials, for degrees up to `k`.
pub fn hilbert_function_check(dl: &DistributiveLattice, hd: &HilbertData, k: usize) -> Result<()> {
    for d in 0..=k {
        let series = hd.hilbert_function(d);
        let chains = count_multichains(dl.poset(), d);
        let standard = standard_monomials(dl.lattice(), d, 1 << 20)?.len() as u128;
        expect(series == chains && chains == standard, "Hilbert function equals standard monomial count", || {
            format!("degree {d}: series {series}, multichains {chains}, standard {standard}")
        })?;
    }
    Ok(())
}

pub fn betti_report(input: &Input, max_i: usize, max_j: usize, multigraded: bool) -> Result<Report> {
    let dl = input
        .distributive()?
        .ok_or_else(|| Error::NotDistributive("Betti numbers need a distributive lattice".into()))?;
    let hd = hilbert_data(&dl)?;
    let t = betti::betti_table(&dl, max_i, max_j)?;
    let mut checks = Vec::new();
    check(&mut checks, "betti_consistency", || betti::check_table(&dl, &t, &hd))?;
    check(&mut checks, "quadratic_syzygy_bound", || betti::quadratic_gb_syzygy_bound(&t))?;
    let mut value = betti_json(&t, multigraded);
    value["input"] = input_echo(input);
    value["linearly_related"] = json!(betti::linearly_related_observed(&t));
    value["pure_resolution"] = json!(betti::pure_resolution_observed(&t));
    value["checks"] = json!(checks);
    Ok(Report { value, checks })
}

/// Sampling of monomial orders for [`groebner_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderSample {
    All,
    Random { count: usize, seed: u64 },
}

pub fn groebner_report(input: &Input, kind: OrderKind, sample: Option<OrderSample>) -> Result<Report> {
    let lattice = input.lattice()?;
    let dl = input.distributive()?;
    let ideal = join_meet_ideal(&lattice);
    let order = MonomialOrder::new(kind, &ideal.order.ranking());
    let gb = groebner_check(&ideal, &order, GbLimits::default())?;
    let mut checks = Vec::new();
    let mut value = json!({
        "input": input_echo(input),
        "order": kind,
        "generators": ideal.generators.iter().map(|g| ideal.render(g)).collect::<Vec<_>>(),
        "basis": gb.basis.iter().map(|g| g.render(&order, &ideal.var_names)).collect::<Vec<_>>(),
        "initial": gb.initial.iter().map(|m| m.render(&ideal.var_names)).collect::<Vec<_>>(),
        "equals_generators": gb.equals_generators,
        "squarefree": gb.squarefree,
    });
    if let Some(dl) = &dl {
        check(&mut checks, "hibi_groebner_basis", || hibi::verify_gb_theorem(dl).map(|_| ()))?;
    }
    if let Some(s) = sample {
        let orders = match s {
            OrderSample::All => sample_orders(ideal.nvars(), None),
            OrderSample::Random { count, seed } => sample_orders(ideal.nvars(), Some((count, seed))),
        };
        let mut squarefree = 0usize;
        for o in &orders {
            if groebner_check(&ideal, o, GbLimits::default())?.squarefree {
                squarefree += 1;
            }
        }
        let message = if squarefree == 0 {
            format!("no squarefree initial ideal found ({} orders)", orders.len())
        } else {
            format!("{squarefree} of {} orders give a squarefree initial ideal", orders.len())
        };
        value["sampled"] = json!({"orders": orders.len(), "squarefree": squarefree, "message": message});
        if dl.is_none() && modular_nondistributive(&lattice)? {
            check(&mut checks, "modular_no_squarefree_initial", || {
                expect(squarefree == 0, "modular non-distributive lattices have no squarefree initial ideal", || {
                    format!("{squarefree} squarefree orders")
                })
            })?;
        }
    }
    value["checks"] = json!(checks);
    Ok(Report { value, checks })
}

fn modular_nondistributive(l: &Lattice) -> Result<bool> {
    Ok(l.is_modular()? && !l.is_distributive())
}

pub fn planar_report(input: &Input, observe: Option<(usize, usize)>) -> Result<Report> {
    let Input::Planar(pl) = input else {
        return Err(Error::NotApplicable("planar-classify needs a planar_lattice input".into()));
    };
    let mut checks = Vec::new();
    let mut value = planar_json(pl);
    value["input"] = input_echo(input);
    let dl = pl.lattice();
    let hd = hilbert_data(&dl)?;
    check(&mut checks, "chained_squares", || {
        let sq = pl.max_chained_squares();
        let formula = invariants::regularity_formula(dl.ji_poset());
        expect(sq == hd.reg && formula == hd.reg, "chained squares, formula and h-degree agree", || {
            format!("squares {sq}, formula {formula}, deg h {}", hd.reg)
        })
    })?;
    if let Some((mi, mj)) = observe {
        let t = betti::betti_table(&dl, mi, mj)?;
        let lr = betti::linearly_related_observed(&t);
        let pr = betti::pure_resolution_observed(&t);
        value["observed"] = json!({"linearly_related": lr, "pure_resolution": pr, "betti": betti_json(&t, false)});
        if let (Ok(pred_lr), Ok(pred_pr)) = (pl.linrel_predicted(), pl.pureres_predicted()) {
            if lr.complete {
                check(&mut checks, "linrel", || {
                    expect(pred_lr == lr.holds, "linear relations predicted", || format!("{pred_lr} vs {}", lr.holds))
                })?;
            }
            if pr.complete {
                check(&mut checks, "pureres", || {
                    expect(pred_pr.is_pure() == pr.holds, "pure resolution predicted", || {
                        format!("{pred_pr:?} vs {}", pr.holds)
                    })
                })?;
            }
        }
    }
    value["checks"] = json!(checks);
    Ok(Report { value, checks })
}

pub const POSET_CHECKS: &[&str] = &[
    "regularity",
    "gorenstein",
    "pseudo_gorenstein",
    "level",
    "birkhoff",
    "modularity",
    "groebner",
    "hilbert_function",
    "multichain",
    "canonical_values",
    "betti",
];

pub const PLANAR_CHECKS: &[&str] = &["chained_squares", "linrel", "pureres", "tensor", "betti"];

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub max_elements: Option<usize>,
    pub planar_frame: Option<(u32, u32)>,
    pub checks: Vec<String>,
    pub jobs: usize,
    /// Largest lattice given a complete Betti table in sweeps.
    pub max_betti_lattice: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            max_elements: None,
            planar_frame: None,
            checks: Vec::new(),
            jobs: 1,
            max_betti_lattice: 12,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub index: usize,
    pub check: String,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub instances: usize,
    pub checks_run: usize,
    pub violations: Vec<Violation>,
}

fn wants(opts: &SweepOptions, name: &str) -> bool {
    opts.checks.is_empty() || opts.checks.iter().any(|c| c == name)
}

fn complete_table(dl: &DistributiveLattice) -> Result<BettiTable> {
    let (mi, mj) = betti::complete_bounds(dl)?;
    betti::betti_table(dl, mi, mj)
}

/// Checks on `I(P)` for one poset.
pub fn poset_checks(p: &Poset, opts: &SweepOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let dl = DistributiveLattice::ideal_lattice(p)?;
    let hd = hilbert_data(&dl)?;
    let limit = invariants::DEFAULT_MAX_T_POSET;
    let cd = if p.len() <= limit {
        Some(invariants::canonical_data(p, limit)?)
    } else {
        None
    };
    if wants(opts, "regularity") {
        check(&mut out, "regularity", || {
            let f = invariants::regularity_formula(p);
            expect(f == hd.reg, "deg h equals |P| - rank P - 1", || format!("{f} vs {}", hd.reg))
        })?;
    }
    if let (true, Some(cd)) = (wants(opts, "gorenstein"), &cd) {
        check(&mut out, "gorenstein", || {
            let symmetric = hd.h.iter().eq(hd.h.iter().rev());
            expect(
                cd.gorenstein == p.is_pure() && symmetric == p.is_pure() && (cd.type_ == 1) == cd.gorenstein,
                "Gorenstein, pure, type one and symmetric h agree",
                || format!("type {}, pure {}, h {:?}", cd.type_, p.is_pure(), hd.h),
            )
        })?;
    }
    if wants(opts, "pseudo_gorenstein") && cd.is_some() {
        check(&mut out, "pseudo_gorenstein", || invariants::pseudo_gorenstein(p, limit).map(|_| ()))?;
    }
    if let (true, Some(cd)) = (wants(opts, "level"), &cd) {
        check(&mut out, "level", || {
            invariants::miyazaki_sufficient(p, limit)?;
            expect(!cd.level || invariants::level_necessary(p), "level implies the cover inequality", String::new)?;
            match invariants::level_regular_planar(p, limit) {
                Ok(_) | Err(Error::NotApplicable(_)) => Ok(()),
                Err(e) => Err(e),
            }
        })?;
    }
    if wants(opts, "birkhoff") {
        check(&mut out, "birkhoff", || dl.birkhoff_check())?;
    }
    if wants(opts, "modularity") {
        check(&mut out, "modularity", || {
            let m = dl.lattice().is_modular()?;
            expect(m, "distributive lattices are modular", String::new)
        })?;
    }
    if wants(opts, "groebner") && dl.len() <= 10 {
        check(&mut out, "groebner", || hibi::verify_gb_theorem(&dl).map(|_| ()))?;
    }
    if wants(opts, "hilbert_function") {
        check(&mut out, "hilbert_function", || hilbert_function_check(&dl, &hd, 4))?;
    }
    if wants(opts, "multichain") && p.len() <= 4 {
        check(&mut out, "multichain", || {
            for r in 2..=4 {
                lattice::verify_multichain_ji(p, r)?;
                if p.len() * (r - 1) <= limit {
                    invariants::generalized_comparison(p, r, limit)?;
                }
            }
            Ok(())
        })?;
    }
    if let (true, Some(cd)) = (wants(opts, "canonical_values"), &cd) {
        check(&mut out, "canonical_values", || canonical_value_checks(p, cd, &hd))?;
    }
    if wants(opts, "betti") && dl.len() <= opts.max_betti_lattice {
        check(&mut out, "betti", || {
            let t = complete_table(&dl)?;
            betti::check_table(&dl, &t, &hd)?;
            betti::quadratic_gb_syzygy_bound(&t)
        })?;
    }
    Ok(out)
}

/// Value-level facts about minimal maps: no gaps, least degree tied to the
/// a-invariant, and the depth function as the minimum for pure posets.
pub fn canonical_value_checks(p: &Poset, cd: &invariants::CanonicalData, hd: &HilbertData) -> Result<()> {
    let min = cd.degrees.iter().copied().min().unwrap_or(0);
    expect(hd.a_invariant == -(min as i64), "a-invariant is minus the least degree", || format!("{min}"))?;
    expect(min as usize == p.rank_hat(), "least degree is the rank of the completed poset", || format!("{min}"))?;
    for v in &cd.minimal {
        let attained: std::collections::BTreeSet<u32> = v.values.iter().copied().collect();
        expect((1..v.bottom).all(|c| attained.contains(&c)), "minimal maps take every value", || format!("{v:?}"))?;
    }
    if p.is_pure() {
        let s = p.hat_stats();
        let depth = invariants::TMap {
            values: s.depth.iter().map(|&d| d as u32).collect(),
            bottom: s.rank_hat as u32,
        };
        expect(cd.minimal == vec![depth], "depth is the unique minimal map of a pure poset", || {
            format!("{:?}", cd.minimal)
        })?;
    }
    Ok(())
}

/// Checks on one planar lattice.
pub fn planar_checks(pl: &PlanarLattice, opts: &SweepOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let dl = pl.lattice();
    let hd = hilbert_data(&dl)?;
    if wants(opts, "chained_squares") {
        check(&mut out, "chained_squares", || {
            let sq = pl.max_chained_squares();
            let f = invariants::regularity_formula(dl.ji_poset());
            expect(sq == f && f == hd.reg, "chained squares, formula and h-degree agree", || {
                format!("squares {sq}, formula {f}, deg h {}", hd.reg)
            })?;
            let pseudo = invariants::pseudo_gorenstein_by_depth(dl.ji_poset());
            let count = pl.count_max_cyclic();
            expect((count == 1) == pseudo, "one longest chain of squares exactly when pseudo-Gorenstein", || {
                format!("{count} chains, pseudo-Gorenstein {pseudo}")
            })
        })?;
    }
    let simple = pl.is_simple();
    let classify = simple && (wants(opts, "linrel") || wants(opts, "pureres"));
    if classify {
        // linear relations need i <= 2 of the ring; purity needs more only
        // when no impurity shows up early
        let (pi, pj) = betti::complete_bounds(&dl)?;
        let partial = betti::betti_table(&dl, pi.min(2), (hd.reg + 2).min(pj))?;
        if wants(opts, "linrel") {
            check(&mut out, "linrel", || {
                let obs = betti::linearly_related_observed(&partial);
                let pred = pl.linrel_predicted()?;
                expect(obs.complete && obs.holds == pred, "linear relations as predicted", || {
                    format!("predicted {pred}, observed {obs:?}")
                })
            })?;
        }
        if wants(opts, "pureres") {
            check(&mut out, "pureres", || {
                let pred = pl.pureres_predicted()?;
                let mut obs = betti::pure_resolution_observed(&partial);
                if !obs.complete {
                    obs = betti::pure_resolution_observed(&betti::betti_table(&dl, pi, pj)?);
                }
                expect(obs.complete && obs.holds == pred.is_pure(), "pure resolution as predicted", || {
                    format!("predicted {pred:?}, observed {obs:?}")
                })
            })?;
        }
    }
    if wants(opts, "tensor") && !simple {
        let (m, n) = pl.frame();
        let corners = m >= 1
            && n >= 1
            && [(0, 0), (m - 1, n - 1)].iter().all(|&(x, y)| {
                [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)].iter().all(|&c| pl.contains(c))
            });
        if corners {
            check(&mut out, "tensor", || {
                let t = betti::betti_table(&dl, 2, 4)?;
                expect(t.ideal(1, 4) != 0, "non-simple lattices with corner squares have beta_1,4 != 0", || {
                    format!("{:?}", t.ideal_entries())
                })
            })?;
        }
    }
    if wants(opts, "betti") && dl.len() <= opts.max_betti_lattice {
        check(&mut out, "betti", || {
            let t = complete_table(&dl)?;
            betti::check_table(&dl, &t, &hd)?;
            betti::quadratic_gb_syzygy_bound(&t)
        })?;
    }
    Ok(out)
}

enum Instance {
    Poset(Poset),
    Planar(PlanarLattice),
}

/// Runs the selected checks over every poset up to the size bound (one per
/// isomorphism class) and every planar lattice in the frame, writing one
/// JSON line per instance in enumeration order.
pub fn sweep(opts: &SweepOptions, out: &mut dyn Write) -> Result<SweepSummary> {
    for c in &opts.checks {
        if !POSET_CHECKS.contains(&c.as_str()) && !PLANAR_CHECKS.contains(&c.as_str()) {
            return Err(Error::Parse {
                line: 0,
                column: 0,
                message: format!("unknown check `{c}`"),
            });
        }
    }
    let mut instances = Vec::new();
    if let Some(k) = opts.max_elements {
        if k > MAX_ENUMERATION_SIZE {
            return Err(Error::bound("poset sweep size", k, MAX_ENUMERATION_SIZE));
        }
        instances.extend(enumerate_posets(k, true)?.into_iter().map(Instance::Poset));
    }
    if let Some((m, n)) = opts.planar_frame {
        instances.extend(enumerate_planar(m, n)?.into_iter().map(Instance::Planar));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::NotApplicable(e.to_string()))?;
    let results: Vec<Result<(Value, Vec<Check>)>> = pool.install(|| {
        instances
            .par_iter()
            .map(|inst| match inst {
                Instance::Poset(p) => {
                    let checks = poset_checks(p, opts)?;
                    Ok((serde_json::to_value(poset_doc(p)).unwrap(), checks))
                }
                Instance::Planar(pl) => {
                    let checks = planar_checks(pl, opts)?;
                    Ok((json!({"type": "planar_lattice", "points": pl.points()}), checks))
                }
            })
            .collect()
    });
    let mut summary = SweepSummary {
        instances: instances.len(),
        checks_run: 0,
        violations: Vec::new(),
    };
    for (index, r) in results.into_iter().enumerate() {
        let (doc, checks) = r?;
        summary.checks_run += checks.len();
        for c in checks.iter().filter(|c| !c.pass) {
            summary.violations.push(Violation {
                index,
                check: c.name.clone(),
                witness: c.witness.clone().unwrap_or_default(),
            });
        }
        let line = json!({"index": index, "instance": doc, "checks": checks});
        writeln!(out, "{line}").map_err(|e| Error::NotApplicable(e.to_string()))?;
    }
    Ok(summary)
}
