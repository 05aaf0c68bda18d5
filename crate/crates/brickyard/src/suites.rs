//! Exhaustive and sampled checks of the completability results, run in
//! parallel over independent inputs. Every suite reports deterministically:
//! the witness is always the first failing input in enumeration order.

use std::collections::BTreeSet;

use brickyard_core::arc::subarc_relation;
use brickyard_core::brick::{enumerate_bricks, ext_arc_witnesses, hom_arc_basis, sigma};
use brickyard_core::field::Field;
use brickyard_core::mutation::{
    left_classification, mutate_left, mutate_right, singly_left_compatible,
};
use brickyard_core::pair::{is_semibrick_pair, SemibrickPair};
use brickyard_core::quiver::{
    self, classify, ext_dim, hom_dim, rep_of_string, stacked_to, Algebra, D4Module, MapKind,
};
use brickyard_core::reading::{delta, delta_bar, delta_inverse, delta_inverse_colored};
use brickyard_core::search::{
    is_completable, is_pairwise_completable, kstone_trichotomy, pairwise_obstruction,
};
use brickyard_core::smc::{
    complete_full_rank, completion_of_d, completion_of_u, enumerate_semibrick_pairs, is_maximal,
    smc_from_permutation, PermutationOracle,
};
use brickyard_core::universe::Approx;
use brickyard_core::{
    ArcUniverse, BrickUniverse, Color, MatrixUniverse, Permutation, StringBrick,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::json::string_pair_to_json;

/// Registered suites: name, default rank, smallest and largest accepted rank.
pub const SUITES: &[(&str, usize, usize, usize)] = &[
    ("reading-census", 5, 1, 6),
    ("brick-census", 6, 1, 8),
    ("oracle-hom", 3, 1, 5),
    ("oracle-ext", 3, 1, 4),
    ("kstone", 4, 1, 4),
    ("kstone-trichotomy", 4, 1, 4),
    ("a3-pairwise", 3, 1, 4),
    ("a4-counterexample", 4, 4, 4),
    ("d4-counterexample", 4, 4, 4),
    ("fullrank-smc", 3, 2, 4),
    ("single-brick", 4, 1, 4),
    ("exists-surjection", 3, 1, 4),
    ("oracle-perm", 3, 1, 4),
    ("smc-census", 4, 1, 4),
    ("size3-reduction", 4, 3, 4),
    ("no-common-quotients", 4, 1, 4),
    ("wide-hull", 4, 1, 4),
];

/// Seeded samples drawn by `oracle-perm` at rank 4.
pub const ORACLE_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub pass: bool,
    /// Number of inputs checked.
    pub checked: usize,
    pub witness: Option<Value>,
    pub mutation_trace: Option<Vec<String>>,
    pub details: Value,
}

struct Outcome {
    pass: bool,
    checked: usize,
    witness: Option<Value>,
    mutation_trace: Option<Vec<String>>,
    details: Value,
}

impl Outcome {
    fn from_scan(checked: usize, failure: Option<Value>) -> Self {
        Outcome {
            pass: failure.is_none(),
            checked,
            witness: failure,
            mutation_trace: None,
            details: Value::Null,
        }
    }

    fn details(mut self, details: Value) -> Self {
        self.details = details;
        self
    }
}

/// Runs `check` on every item in parallel; returns the first failure in input order.
fn scan<T, F>(items: &[T], check: F) -> Result<Option<Value>, CliError>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<Value>, CliError> + Sync,
{
    let results: Vec<Result<Option<Value>, CliError>> = items.par_iter().map(&check).collect();
    for r in results {
        if let Some(w) = r? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// Pair JSON plus a readable `text` field, which readers of pair JSON ignore.
fn pair_json(n: usize, x: &SemibrickPair<StringBrick>) -> Value {
    let mut v = serde_json::to_value(string_pair_to_json(n, x)).expect("serializable");
    v["text"] = Value::String(x.describe(&ArcUniverse::new(n)));
    v
}

fn all_pairs(n: usize) -> Result<Vec<SemibrickPair<StringBrick>>, CliError> {
    Ok(enumerate_semibrick_pairs(&ArcUniverse::new(n), n)?)
}

pub fn run_suite(name: &str, n: Option<usize>, seed: u64, field: Field) -> Result<SuiteReport, CliError> {
    let &(_, default, lo, hi) = SUITES
        .iter()
        .find(|s| s.0 == name)
        .ok_or_else(|| CliError::Input(format!("unknown suite {name:?}")))?;
    let n = n.unwrap_or(default);
    if n < lo || n > hi {
        return Err(CliError::Input(format!("suite {name} accepts n in {lo}..={hi}, got {n}")));
    }
    let out = match name {
        "reading-census" => reading_census(n)?,
        "brick-census" => brick_census(n)?,
        "oracle-hom" => oracle_hom(n, field)?,
        "oracle-ext" => oracle_ext(n, field)?,
        "kstone" => kstone(n, field)?,
        "kstone-trichotomy" => kstone_trichotomy_suite(n, field)?,
        "a3-pairwise" => pairwise_implies_completable(n)?,
        "a4-counterexample" => a4_counterexample(field)?,
        "d4-counterexample" => d4_counterexample(field)?,
        "fullrank-smc" => fullrank_smc(n)?,
        "single-brick" => single_brick(n)?,
        "exists-surjection" => exists_surjection(n)?,
        "oracle-perm" => oracle_perm(n, seed)?,
        "smc-census" => smc_census(n)?,
        "size3-reduction" => size3_reduction(n)?,
        "no-common-quotients" => no_common_quotients(n)?,
        "wide-hull" => wide_hull(n)?,
        _ => unreachable!("registered above"),
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        n,
        pass: out.pass,
        checked: out.checked,
        witness: out.witness,
        mutation_trace: out.mutation_trace,
        details: out.details,
    })
}

fn reading_census(n: usize) -> Result<Outcome, CliError> {
    let mut checked = 0;
    let mut failure = None;
    let mut counts = Vec::new();
    for k in 1..=n {
        let perms: Vec<Permutation> = Permutation::all(k).collect();
        let check = |w: &Permutation| -> Result<Option<Value>, CliError> {
            let ok = delta_inverse(&delta(w))? == *w
                && delta_inverse_colored(&delta_bar(w), Color::Red)? == *w
                && delta(w).len() + delta_bar(w).len() == k;
            Ok((!ok).then(|| json!({ "permutation": w.word() })))
        };
        if let Some(w) = scan(&perms, check)? {
            failure.get_or_insert(w);
        }
        let distinct: BTreeSet<_> = perms.par_iter().map(delta).collect::<Vec<_>>().into_iter().collect();
        if distinct.len() != factorial(k + 1) {
            failure.get_or_insert(json!({ "rank": k, "distinct_diagrams": distinct.len() }));
        }
        checked += perms.len();
        counts.push(distinct.len());
    }
    Ok(Outcome::from_scan(checked, failure).details(json!({ "distinct_diagrams": counts })))
}

fn brick_census(n: usize) -> Result<Outcome, CliError> {
    let mut failure = None;
    let mut counts = Vec::new();
    let mut checked = 0;
    for k in 1..=n {
        let bricks = enumerate_bricks(k);
        let distinct: BTreeSet<_> = bricks.iter().collect();
        let expected = (1usize << (k + 1)) - k - 2;
        let round_trip = bricks.iter().all(|b| sigma(&b.to_arc(Color::Green), k).as_ref() == Ok(b));
        if bricks.len() != expected || distinct.len() != expected || !round_trip {
            failure.get_or_insert(json!({ "rank": k, "count": bricks.len(), "expected": expected }));
        }
        checked += bricks.len();
        counts.push(bricks.len());
    }
    Ok(Outcome::from_scan(checked, failure).details(json!({ "counts": counts })))
}

fn ordered_brick_pairs(n: usize) -> Vec<(StringBrick, StringBrick)> {
    let bricks = enumerate_bricks(n);
    bricks.iter().flat_map(|s| bricks.iter().map(move |t| (s.clone(), t.clone()))).collect()
}

fn oracle_hom(n: usize, field: Field) -> Result<Outcome, CliError> {
    let pairs = ordered_brick_pairs(n);
    let check = |(s, t): &(StringBrick, StringBrick)| -> Result<Option<Value>, CliError> {
        let arcs = hom_arc_basis(s, t).len();
        let oracle = hom_dim(&rep_of_string(s, field), &rep_of_string(t, field))?;
        Ok((arcs != oracle).then(|| {
            json!({ "from": s.stacked(), "to": t.stacked(), "arcs": arcs, "oracle": oracle })
        }))
    };
    Ok(Outcome::from_scan(pairs.len(), scan(&pairs, check)?))
}

fn oracle_ext(n: usize, field: Field) -> Result<Outcome, CliError> {
    let pairs = ordered_brick_pairs(n);
    let check = |(s, t): &(StringBrick, StringBrick)| -> Result<Option<Value>, CliError> {
        let arcs = ext_arc_witnesses(s, t).len();
        let oracle = ext_dim(&rep_of_string(s, field), &rep_of_string(t, field))?;
        Ok((arcs != oracle).then(|| {
            json!({ "from": s.stacked(), "to": t.stacked(), "arcs": arcs, "oracle": oracle })
        }))
    };
    Ok(Outcome::from_scan(pairs.len(), scan(&pairs, check)?))
}

fn rigid_brick(m: &quiver::Representation) -> Result<bool, CliError> {
    Ok(hom_dim(m, m)? == 1 && ext_dim(m, m)? == 0)
}

fn kstone(n: usize, field: Field) -> Result<Outcome, CliError> {
    let bricks: Vec<StringBrick> = (1..=n).flat_map(enumerate_bricks).collect();
    let check = |b: &StringBrick| -> Result<Option<Value>, CliError> {
        Ok((!rigid_brick(&rep_of_string(b, field))?).then(|| json!({ "brick": b.stacked(), "n": b.n() })))
    };
    let mut failure = scan(&bricks, check)?;
    for m in D4Module::ALL {
        if !rigid_brick(&m.build(field))? {
            failure.get_or_insert(json!({ "d4_module": m.name() }));
        }
    }
    Ok(Outcome::from_scan(bricks.len() + D4Module::ALL.len(), failure))
}

/// Zero, mono or epi, read from the oracle's map `T -> S`.
fn oracle_trichotomy(s: &StringBrick, t: &StringBrick, field: Field) -> Result<Option<bool>, CliError> {
    let (rs, rt) = (rep_of_string(s, field), rep_of_string(t, field));
    let (d, phi) = stacked_to(&rt, &rs)?;
    match d {
        0 => Ok(Some(true)),
        1 => Ok(Some(matches!(classify(&phi, &rt, &rs), MapKind::Mono | MapKind::Epi))),
        // Not a single map; reported separately.
        _ => Ok(None),
    }
}

fn kstone_trichotomy_suite(n: usize, field: Field) -> Result<Outcome, CliError> {
    let mut items = Vec::new();
    for k in 1..=n {
        let uni = ArcUniverse::new(k);
        for (s, t) in ordered_brick_pairs(k) {
            let x = SemibrickPair::new(&uni, vec![s.clone()], vec![t.clone()]);
            if s != t && is_semibrick_pair(&uni, &x)? {
                items.push((k, s, t, x));
            }
        }
    }
    let oracles: Vec<PermutationOracle> = (1..=n).map(PermutationOracle::new).collect();
    let check = |(k, s, t, x): &(usize, StringBrick, StringBrick, SemibrickPair<StringBrick>)| {
        let uni = ArcUniverse::new(*k);
        let search = is_completable(&uni, x)?.completable;
        let perm = oracles[k - 1].is_completable(x);
        let fast = kstone_trichotomy(&uni, s, t)?;
        let oracle = oracle_trichotomy(s, t, field)?;
        let ok = search == perm && search == fast && oracle.is_none_or(|o| o == search);
        Ok((!ok).then(|| {
            json!({
                "pair": pair_json(*k, x),
                "search": search,
                "permutations": perm,
                "trichotomy": fast,
                "oracle_trichotomy": oracle,
            })
        }))
    };
    let failure = scan(&items, check)?;
    let stacked: usize = items
        .iter()
        .map(|(_, s, t, _)| oracle_trichotomy(s, t, field).map(|o| usize::from(o.is_none())))
        .sum::<Result<usize, _>>()?;
    Ok(Outcome::from_scan(items.len(), failure).details(json!({ "multi_dimensional_hom": stacked })))
}

fn pairwise_implies_completable(n: usize) -> Result<Outcome, CliError> {
    let uni = ArcUniverse::new(n);
    let pairs = all_pairs(n)?;
    let check = |x: &SemibrickPair<StringBrick>| -> Result<Option<Value>, CliError> {
        let fails = is_pairwise_completable(&uni, x)? && !is_completable(&uni, x)?.completable;
        Ok(fails.then(|| pair_json(n, x)))
    };
    let failure = scan(&pairs, check)?;
    let pairwise = pairs
        .par_iter()
        .map(|x| is_pairwise_completable(&uni, x).map(usize::from))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum::<usize>();
    Ok(Outcome::from_scan(pairs.len(), failure)
        .details(json!({ "semibrick_pairs": pairs.len(), "pairwise_completable": pairwise })))
}

/// The rank-4 pair that is pairwise completable but not completable.
pub fn a4_pair() -> (ArcUniverse, SemibrickPair<StringBrick>) {
    let uni = ArcUniverse::new(4);
    let b = |s: &str| StringBrick::parse_walk(4, s).expect("valid walk");
    (uni, SemibrickPair::new(&uni, vec![b("2>3>4")], vec![b("4"), b("1<2<3")]))
}

fn a4_counterexample(field: Field) -> Result<Outcome, CliError> {
    let (uni, x) = a4_pair();
    let b = |s: &str| StringBrick::parse_walk(4, s).expect("valid walk");
    let mut failures = Vec::new();
    let mut expect = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };
    expect(is_semibrick_pair(&uni, &x)?, "semibrick pair");
    expect(singly_left_compatible(&uni, &x, 0)?, "singly left compatible");
    expect(is_pairwise_completable(&uni, &x)?, "pairwise completable");
    let search = is_completable(&uni, &x)?;
    expect(!search.completable, "not completable");
    let x1 = mutate_left(&uni, &x, 0)?;
    let expected = SemibrickPair::new(&uni, vec![b("2>3")], vec![b("2>3>4"), b("1<2<3")]);
    expect(x1 == expected, "left mutation at 2/3/4");
    let classes = left_classification(&uni, &x1, 0)?;
    let t = x1.position_in_u(&uni, &b("1<2<3"));
    expect(t.is_some_and(|t| classes[t] == Approx::Neither), "3/2/1 -> 2/3 is neither");
    expect(!is_pairwise_completable(&uni, &x1)?, "mutated pair not pairwise completable");
    // Same answers with matrices.
    let m = MatrixUniverse::new(Algebra::RA(4), field);
    let conv = |bs: &[StringBrick]| bs.iter().map(|b| m.from_string(b)).collect::<Vec<_>>();
    let xm = SemibrickPair::new(&m, conv(x.d()), conv(x.u()));
    expect(is_pairwise_completable(&m, &xm)? && !is_completable(&m, &xm)?.completable, "matrix universe");
    let mut out = Outcome::from_scan(1, None);
    out.pass = failures.is_empty();
    out.witness = Some(pair_json(4, &x));
    out.mutation_trace = Some(vec![uni.name(&x.d()[0])]);
    out.details = json!({
        "mutated": x1.describe(&uni),
        "obstruction": search.obstruction.map(|o| o.describe(&uni)),
        "states_visited": search.states_visited,
        "failed_checks": failures,
    });
    Ok(out)
}

fn d4_counterexample(field: Field) -> Result<Outcome, CliError> {
    let uni = MatrixUniverse::new(Algebra::PiD4, field);
    let [m, n, n1, e] = [D4Module::M, D4Module::N, D4Module::NPrime, D4Module::E].map(|x| x.build(field));
    let mut failures = Vec::new();
    let mut expect = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };
    for (a, b, what) in [(&n, &n1, "Hom(N,N')"), (&n, &m, "Hom(N,M)"), (&n1, &m, "Hom(N',M)"), (&m, &n1, "Hom(M,N')")] {
        expect(hom_dim(a, b)? == 0, what);
    }
    expect(ext_dim(&n, &m)? == 0, "Ext(N,M)");
    expect(ext_dim(&n, &n1)? == 0, "Ext(N,N')");
    let x1 = SemibrickPair::new(&uni, vec![n.clone()], vec![n1.clone(), m.clone()]);
    expect(is_semibrick_pair(&uni, &x1)?, "X' semibrick pair");
    expect(!singly_left_compatible(&uni, &x1, 0)?, "X' not singly left compatible");
    let at_m = x1.position_in_u(&uni, &m).expect("member");
    let x = mutate_right(&uni, &x1, at_m)?;
    let expected = SemibrickPair::new(&uni, vec![m.clone(), n.clone()], vec![e]);
    expect(x.same_as(&uni, &expected), "right mutation at M gives {M,N} and E");
    let m_in_x = x.position_in_d(&uni, &m);
    expect(m_in_x.is_some_and(|i| singly_left_compatible(&uni, &x, i).unwrap_or(false)), "X singly left compatible");
    let search = is_completable(&uni, &x)?;
    expect(!search.completable, "X not completable");
    let mut out = Outcome::from_scan(1, None);
    out.pass = failures.is_empty();
    out.witness = Some(json!(x.describe(&uni)));
    out.mutation_trace = Some(vec!["M".to_string()]);
    out.details = json!({
        "mutated_from": x1.describe(&uni),
        "states_visited": search.states_visited,
        "failed_checks": failures,
    });
    Ok(out)
}

fn full_rank_pairs(n: usize) -> Result<Vec<SemibrickPair<StringBrick>>, CliError> {
    Ok(all_pairs(n)?.into_iter().filter(|x| x.len() == n).collect())
}

fn fullrank_smc(n: usize) -> Result<Outcome, CliError> {
    let uni = ArcUniverse::new(n);
    let pairs = full_rank_pairs(n)?;
    let check = |x: &SemibrickPair<StringBrick>| -> Result<Option<Value>, CliError> {
        if !is_pairwise_completable(&uni, x)? {
            return Ok(None);
        }
        match complete_full_rank(n, x) {
            Ok(w) if smc_from_permutation(&w) == *x => Ok(None),
            Ok(w) => Ok(Some(json!({ "pair": pair_json(n, x), "permutation": w.word() }))),
            Err(e) => Ok(Some(json!({ "pair": pair_json(n, x), "error": e.to_string() }))),
        }
    };
    let failure = scan(&pairs, check)?;
    Ok(Outcome::from_scan(pairs.len(), failure))
}

fn single_brick(n: usize) -> Result<Outcome, CliError> {
    let oracle = PermutationOracle::new(n);
    let pairs: Vec<_> =
        full_rank_pairs(n)?.into_iter().filter(|x| x.d().len() == 1 || x.u().len() == 1).collect();
    let check = |x: &SemibrickPair<StringBrick>| -> Result<Option<Value>, CliError> {
        Ok((!oracle.is_completable(x)).then(|| pair_json(n, x)))
    };
    Ok(Outcome::from_scan(pairs.len(), scan(&pairs, check)?))
}

fn is_quotient(r: &StringBrick, s: &StringBrick) -> bool {
    subarc_relation(&r.to_arc(Color::Green), &s.to_arc(Color::Green)).is_predecessor_closed()
}

fn is_submodule(r: &StringBrick, t: &StringBrick) -> bool {
    subarc_relation(&r.to_arc(Color::Green), &t.to_arc(Color::Green)).is_successor_closed()
}

fn exists_surjection(n: usize) -> Result<Outcome, CliError> {
    let pairs = all_pairs(n)?;
    let check = |x: &SemibrickPair<StringBrick>| -> Result<Option<Value>, CliError> {
        let d1 = completion_of_u(n, x.u())?;
        let u1 = completion_of_d(n, x.d())?;
        let quotients = x.d().iter().all(|s| d1.iter().any(|r| is_quotient(r, s)));
        let submodules = x.u().iter().all(|t| u1.iter().any(|r| is_submodule(r, t)));
        Ok((!(quotients && submodules)).then(|| pair_json(n, x)))
    };
    Ok(Outcome::from_scan(pairs.len(), scan(&pairs, check)?))
}

/// A uniformly sized random candidate, kept only if it is a semibrick pair.
fn sample_pairs(n: usize, count: usize, seed: u64) -> Result<Vec<SemibrickPair<StringBrick>>, CliError> {
    let uni = ArcUniverse::new(n);
    let bricks = enumerate_bricks(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let size = rng.gen_range(1..=n);
        let chosen: Vec<&StringBrick> = bricks.choose_multiple(&mut rng, size).collect();
        let (mut d, mut u) = (Vec::new(), Vec::new());
        for b in chosen {
            if rng.gen_bool(0.5) {
                d.push(b.clone());
            } else {
                u.push(b.clone());
            }
        }
        let x = SemibrickPair::new(&uni, d, u);
        if is_semibrick_pair(&uni, &x)? {
            out.push(x);
        }
    }
    Ok(out)
}

fn oracle_perm(n: usize, seed: u64) -> Result<Outcome, CliError> {
    let uni = ArcUniverse::new(n);
    let oracle = PermutationOracle::new(n);
    let mut pairs = all_pairs(n)?;
    let exhaustive = pairs.len();
    if n == 4 {
        pairs.extend(sample_pairs(n, ORACLE_SAMPLES, seed)?);
    }
    let check = |x: &SemibrickPair<StringBrick>| -> Result<Option<Value>, CliError> {
        let search = is_completable(&uni, x)?;
        if search.completable != oracle.is_completable(x) {
            return Ok(Some(json!({ "pair": pair_json(n, x), "search": search.completable })));
        }
        Ok(None)
    };
    let failure = scan(&pairs, check)?;
    let completable = pairs[..exhaustive].iter().filter(|x| oracle.is_completable(x)).count();
    Ok(Outcome::from_scan(pairs.len(), failure).details(json!({
        "exhaustive": exhaustive,
        "sampled": pairs.len() - exhaustive,
        "seed": seed,
        "completable_among_exhaustive": completable,
    })))
}

fn smc_census(n: usize) -> Result<Outcome, CliError> {
    let uni = ArcUniverse::new(n);
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let check = |w: &Permutation| -> Result<Option<Value>, CliError> {
        let x = smc_from_permutation(w);
        let ok = x.len() == n && is_semibrick_pair(&uni, &x)? && is_maximal(&uni, &x)?;
        Ok((!ok).then(|| json!({ "permutation": w.word(), "pair": pair_json(n, &x) })))
    };
    let mut failure = scan(&perms, check)?;
    let distinct: BTreeSet<_> = perms.iter().map(|w| smc_from_permutation(w).keys(&uni)).collect();
    if distinct.len() != factorial(n + 1) {
        failure.get_or_insert(json!({ "distinct_smcs": distinct.len() }));
    }
    // Every full-rank pair that some permutation contains is that permutation's SMC.
    let completable_full_rank = full_rank_pairs(n)?
        .iter()
        .filter(|x| distinct.contains(&x.keys(&uni)))
        .count();
    if completable_full_rank != distinct.len() {
        failure.get_or_insert(json!({ "full_rank_smcs_found": completable_full_rank }));
    }
    Ok(Outcome::from_scan(perms.len(), failure).details(json!({ "distinct_smcs": distinct.len() })))
}

fn size3_reduction(n: usize) -> Result<Outcome, CliError> {
    let uni = ArcUniverse::new(n);
    let pairs = all_pairs(n)?;
    let bad: Vec<Option<usize>> = pairs
        .par_iter()
        .map(|x| -> Result<Option<usize>, CliError> {
            let fails = is_pairwise_completable(&uni, x)? && !is_completable(&uni, x)?.completable;
            Ok(fails.then_some(x.len()))
        })
        .collect::<Result<_, _>>()?;
    let sizes: BTreeSet<usize> = bad.iter().flatten().copied().collect();
    let property = sizes.is_empty();
    let size_three = !sizes.contains(&3);
    let first = pairs.iter().zip(&bad).find(|(_, b)| b.is_some()).map(|(x, _)| pair_json(n, x));
    let mut out = Outcome::from_scan(pairs.len(), None);
    out.pass = property == size_three;
    out.witness = first;
    out.details = json!({
        "pairwise_property": property,
        "size_three_pairs_completable": size_three,
        "failing_sizes": sizes,
    });
    Ok(out)
}

fn no_common_quotients(n: usize) -> Result<Outcome, CliError> {
    let oracle = PermutationOracle::new(n);
    let pairs = full_rank_pairs(n)?;
    let hypothesis = |x: &SemibrickPair<StringBrick>| -> Result<bool, CliError> {
        let d1 = completion_of_u(n, x.u())?;
        let u1 = completion_of_d(n, x.d())?;
        let disjoint = |sets: Vec<BTreeSet<usize>>| {
            sets.iter().enumerate().all(|(i, a)| sets[i + 1..].iter().all(|b| a.is_disjoint(b)))
        };
        let quotients = x
            .d()
            .iter()
            .map(|s| (0..d1.len()).filter(|&i| is_quotient(&d1[i], s)).collect())
            .collect();
        let submodules = x
            .u()
            .iter()
            .map(|t| (0..u1.len()).filter(|&i| is_submodule(&u1[i], t)).collect())
            .collect();
        Ok(disjoint(quotients) || disjoint(submodules))
    };
    let check = |x: &SemibrickPair<StringBrick>| -> Result<Option<Value>, CliError> {
        Ok((hypothesis(x)? && !oracle.is_completable(x)).then(|| pair_json(n, x)))
    };
    let failure = scan(&pairs, check)?;
    let covered = pairs
        .par_iter()
        .map(|x| hypothesis(x).map(usize::from))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum::<usize>();
    Ok(Outcome::from_scan(pairs.len(), failure).details(json!({ "hypothesis_holds": covered })))
}

/// For completable pairs the terminal semibrick has the size of the pair;
/// also records, for the rest, whether the search got stuck immediately.
fn wide_hull(n: usize) -> Result<Outcome, CliError> {
    let uni = ArcUniverse::new(n);
    let pairs = all_pairs(n)?;
    let check = |x: &SemibrickPair<StringBrick>| -> Result<Option<Value>, CliError> {
        let out = is_completable(&uni, x)?;
        let ok = match &out.terminal {
            Some(t) => t.len() == x.len() && is_semibrick_pair(&uni, &SemibrickPair::new(&uni, vec![], t.clone()))?,
            None => pairwise_obstruction(&uni, x)?.is_some() || x.len() >= 3,
        };
        Ok((!ok).then(|| pair_json(n, x)))
    };
    let failure = scan(&pairs, check)?;
    Ok(Outcome::from_scan(pairs.len(), failure))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_and_bad_rank_are_input_errors() {
        let f = Field::default();
        assert!(matches!(run_suite("nope", None, 0, f), Err(CliError::Input(_))));
        assert!(matches!(run_suite("fullrank-smc", Some(9), 0, f), Err(CliError::Input(_))));
    }

    #[test]
    fn small_suites_pass() {
        let f = Field::default();
        for (name, n) in [("oracle-hom", 3), ("a4-counterexample", 4), ("d4-counterexample", 4)] {
            let r = run_suite(name, Some(n), 0, f).unwrap();
            assert!(r.pass, "{name}: {:?}", r.details);
        }
        assert_eq!(run_suite("oracle-hom", Some(3), 0, f).unwrap().checked, 121);
    }
}
