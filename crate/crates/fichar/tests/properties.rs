//! Cross-module invariants: weight-bound witnesses for the free modules,
//! coinvariant stabilization, full class-function agreement between the
//! stored decompositions and their character polynomials, plus randomized
//! structure properties.

use std::collections::BTreeMap;

use proptest::prelude::*;

use fichar::arith::{rat, rat_int};
use fichar::charpoly::{build_f_lambda, CharPolynomial, FallingTerm};
use fichar::gamma::{stable_char_poly, stored_decomp, GammaQuery};
use fichar::induct::m_lambda_at;
use fichar::symchar::{mn_character, CycleCounts};
use fichar::{Coefficient, FIExpr, Partition};

/// μ with its first row removed — the label that stabilizes.
fn tail(mu: &Partition) -> Vec<usize> {
    mu.parts().iter().skip(1).copied().collect()
}

#[test]
fn free_module_weight_bound_witnessed() {
    // every irreducible of M(λ)_s keeps at most |λ| boxes below row one
    for size in 0..=5usize {
        for lambda in Partition::enumerate(size, None, None) {
            for s in 0..=12usize {
                for (mu, _) in m_lambda_at(&lambda, s).terms() {
                    let below: usize = tail(mu).iter().sum();
                    assert!(
                        below <= lambda.size(),
                        "μ={mu} in M({lambda})_{s} has {below} boxes below row one"
                    );
                }
            }
        }
    }
}

#[test]
fn free_module_coinvariants_stabilize() {
    // the multiset of (tail, multiplicity) of M(λ)_{s+a} is independent
    // of s once s ≥ λ₁ + a + |λ| — the concrete trace of stability type
    // (0, λ₁)
    for size in 0..=4usize {
        for lambda in Partition::enumerate(size, None, None) {
            for a in 0..=3usize {
                let threshold = lambda.first() + a + lambda.size();
                let pattern = |s: usize| -> BTreeMap<Vec<usize>, u64> {
                    let mut out = BTreeMap::new();
                    for (mu, mult) in m_lambda_at(&lambda, s + a).terms() {
                        *out.entry(tail(mu)).or_insert(0) += mult;
                    }
                    out
                };
                let reference = pattern(threshold);
                for s in threshold..=threshold + 4 {
                    assert_eq!(
                        pattern(s),
                        reference,
                        "tail pattern moved: λ={lambda} a={a} s={s}"
                    );
                }
            }
        }
    }
}

#[test]
fn stored_decompositions_match_their_polynomials_on_all_classes() {
    // full class-function equality between the stable character
    // polynomial and the Murnaghan–Nakayama character of the evaluated
    // decomposition, for every stored (n, i) reachable below s = 14
    let mut queries: Vec<GammaQuery> = (0..=8).map(|i| GammaQuery::new(1, i).unwrap()).collect();
    queries.extend((2..=5).map(|n| GammaQuery::new(n, 0).unwrap()));
    queries.push(GammaQuery::new(2, 4).unwrap());

    for query in queries {
        let decomp = stored_decomp(&query).expect("listed queries are stored");
        let poly = stable_char_poly(&query).unwrap();
        for s in decomp.valid_from()..=14 {
            let module = decomp.at(s).unwrap();
            for ct in Partition::enumerate(s, None, None) {
                let counts = CycleCounts::from_cycle_type(&ct);
                let mut chi = rat(0, 1);
                for (mu, mult) in module.terms() {
                    chi += rat_int(mn_character(mu, &counts).unwrap()) * rat_int(mult as i64);
                }
                assert_eq!(
                    poly.evaluate(&counts),
                    chi,
                    "(n,i)=({},{}) s={s} class={ct}",
                    query.rank(),
                    query.degree()
                );
            }
        }
    }
}

#[test]
fn degree_bound_on_built_polynomials() {
    for size in 0..=5usize {
        for lambda in Partition::enumerate(size, None, None) {
            let f = build_f_lambda(&lambda).unwrap();
            assert!(
                f.degree() <= lambda.size(),
                "deg f_{lambda} = {} > {}",
                f.degree(),
                lambda.size()
            );
        }
    }
}

#[test]
fn evaluate_symbolic_splits_free_sums() {
    let expr = FIExpr::free_sum(vec![
        (Coefficient::Symbol("C_{0,[2]}".into()), Partition::of(&[2])),
        (Coefficient::Num(3), Partition::of(&[1, 1])),
    ]);
    let parts = expr.evaluate_symbolic(5);
    assert_eq!(parts.len(), 2);
    assert_eq!(parts[0].1, m_lambda_at(&Partition::of(&[2]), 5));
    assert_eq!(parts[1].1, m_lambda_at(&Partition::of(&[1, 1]), 5));
}

// ---------------------------------------------------------------------------
// Randomized properties

/// Random partition of size ≤ max, by sorting random parts.
fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=max.max(1), 0..=4).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        parts.retain(|&p| {
            total += p;
            total <= max
        });
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn arb_polynomial() -> impl Strategy<Value = CharPolynomial> {
    let term = (
        -20i64..=20,
        1i64..=6,
        prop::collection::vec((1usize..=4, 1usize..=3), 0..=2),
    );
    prop::collection::vec(term, 0..=4).prop_map(|terms| {
        let fallings: Vec<FallingTerm> = terms
            .into_iter()
            .map(|(num, den, factors)| FallingTerm::new(rat(num, den), factors))
            .collect();
        CharPolynomial::from_falling_terms(&fallings)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_involution(p in arb_partition(12)) {
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn conjugation_swaps_part_and_length_bounds(p in arb_partition(10)) {
        let c = p.conjugate();
        prop_assert_eq!(c.size(), p.size());
        prop_assert_eq!(c.first(), p.length());
        prop_assert_eq!(c.length(), p.first());
    }

    #[test]
    fn falling_basis_round_trips(f in arb_polynomial()) {
        let basis = f.falling_basis();
        let terms: Vec<FallingTerm> = basis
            .iter()
            .map(|(m, c)| {
                let factors = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(k, &e)| (k + 1, e))
                    .collect();
                FallingTerm::new(c.clone(), factors)
            })
            .collect();
        prop_assert_eq!(CharPolynomial::from_falling_terms(&terms), f);
    }

    #[test]
    fn evaluation_ignores_long_cycles(
        p in arb_partition(4),
        long_cycle in 6usize..=30,
        extra in 1usize..=3,
    ) {
        let f = build_f_lambda(&p).unwrap();
        let base = CycleCounts::from_pairs(&[(1, 3), (2, 1)]);
        let padded = CycleCounts::from_pairs(&[(1, 3), (2, 1), (long_cycle, extra)]);
        prop_assert_eq!(f.evaluate(&base), f.evaluate(&padded));
    }

    #[test]
    fn pad_produces_partition_of_requested_size(p in arb_partition(8), extra in 0usize..=6) {
        let s = p.size() + p.first() + extra;
        let padded = p.pad(s).unwrap().as_partition();
        prop_assert_eq!(padded.size(), s);
    }
}
