//! Structural properties, checked exhaustively where the range is small and
//! with proptest where it is not.

use std::cmp::Ordering;
use std::collections::HashSet;

use modrep_core::basicsets::{build_tilde_basic_set, check_witness, is_unitriangularisable, theta, zero_count_condition};
use modrep_core::clifford::{blocks, c_gamma, in_t, in_t_by_quotient, odd_weight_basic_set, BlockDescriptor};
use modrep_core::fock::{apply_f, apply_f_divided, FockVector};
use modrep_core::matrix::TotalOrderSpec;
use modrep_core::mullineux::{mullineux, mullineux_alt};
use modrep_core::partition::*;
use modrep_core::part;
use modrep_core::poly::VPolynomial;
use proptest::prelude::*;

const BASES: [TotalOrderSpec; 2] = [TotalOrderSpec::Lex, TotalOrderSpec::Lexprime];

#[test]
fn conjugation_is_an_involution() {
    for n in 0..=30 {
        for l in partitions_of(n) {
            assert_eq!(l.conjugate().conjugate(), l);
        }
    }
}

#[test]
fn core_quotient_roundtrip() {
    for p in [2, 3, 5, 7] {
        for n in 0..=25 {
            for l in partitions_of(n) {
                let cq = core_quotient(&l, p).unwrap();
                assert!(is_p_core(&cq.core, p), "{l} p={p}");
                assert_eq!(cq.core.size() + p * cq.quotient.size(), n, "{l} p={p}");
                assert_eq!(cq.quotient.p(), p);
                assert_eq!(from_core_quotient(&cq).unwrap(), l, "{l} p={p}");
            }
        }
    }
}

#[test]
fn conjugate_core_quotient_law() {
    for p in [2, 3, 5, 7] {
        for n in 0..=25 {
            for l in partitions_of(n) {
                assert!(conjugate_core_quotient_law_check(&l, p), "{l} p={p}");
            }
        }
    }
}

#[test]
fn total_orders_refine_dominance() {
    for n in 1..=15 {
        let all: Vec<Partition> = partitions_of(n).collect();
        for a in &all {
            for b in &all {
                if dominance_leq(a, b).unwrap() {
                    assert!(lex_leq(a, b).unwrap() && lexprime_leq(a, b).unwrap(), "{a} {b}");
                }
            }
        }
    }
}

#[test]
fn regularization_is_idempotent() {
    for p in [2, 3, 5] {
        for n in 0..=18 {
            for l in partitions_of(n) {
                let r = regularize(&l, p).unwrap();
                assert_eq!(r.size(), n);
                assert!(r.is_p_regular(p), "{l} -> {r}");
                assert_eq!(regularize(&r, p).unwrap(), r);
            }
        }
    }
}

#[test]
fn diagonal_hooks_of_self_conjugates() {
    for n in 1..=30 {
        for l in self_conjugate_partitions_of(n) {
            let h = l.diagonal_hooks();
            assert_eq!(h.iter().sum::<usize>(), n);
            assert!(h.iter().all(|x| x % 2 == 1));
            assert!(h.windows(2).all(|w| w[0] > w[1]), "{l}: {h:?}");
        }
    }
}

#[test]
fn mullineux_without_singular_partitions_is_conjugation() {
    for n in 1..=6 {
        for l in partitions_of(n) {
            assert_eq!(mullineux(&l, 7).unwrap(), l.conjugate());
        }
    }
}

#[test]
fn mullineux_involution_and_algorithms_agree_small() {
    for p in [3, 5, 7] {
        for n in 0..=12 {
            for l in p_regular_partitions_of(n, p) {
                let m = mullineux(&l, p).unwrap();
                assert_eq!(mullineux(&m, p).unwrap(), l);
                assert_eq!(mullineux_alt(&l, p).unwrap(), m, "{l} p={p}");
            }
        }
    }
}

#[test]
fn prec_is_a_total_order() {
    for base in BASES {
        let prec = TotalOrderSpec::prec(base.clone());
        for n in 1..=12 {
            let all: Vec<Partition> = partitions_of(n).collect();
            let le = |a: &Partition, b: &Partition| prec.cmp_partitions(a, b).unwrap() != Ordering::Greater;
            for a in &all {
                assert!(le(a, a));
                for b in &all {
                    assert!(le(a, b) || le(b, a), "{a} {b}");
                    if a != b {
                        assert!(!(le(a, b) && le(b, a)), "{a} {b}");
                    }
                    for c in &all {
                        if le(a, b) && le(b, c) {
                            assert!(le(a, c), "{a} {b} {c}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn theta_is_injective() {
    for base in BASES {
        for p in [3, 5] {
            for n in 1..=16 {
                let mut seen = HashSet::new();
                for l in p_regular_partitions_of(n, p) {
                    let t = theta(&l, p, &base).unwrap();
                    assert!(seen.insert(t.clone()), "Θ not injective at {l} -> {t}");
                }
            }
        }
    }
}

#[test]
fn mullineux_conjugate_bounds() {
    // m(λ)′ ≤ λ and λ′ ≤ m(λ)
    for base in BASES {
        for p in [3, 5] {
            for n in 1..=16 {
                for l in p_regular_partitions_of(n, p) {
                    let m = mullineux(&l, p).unwrap();
                    assert_ne!(base.cmp_partitions(&m.conjugate(), &l).unwrap(), Ordering::Greater, "{l}");
                    assert_ne!(base.cmp_partitions(&l.conjugate(), &m).unwrap(), Ordering::Greater, "{l}");
                }
            }
        }
    }
}

#[test]
fn fixed_points_and_self_conjugates() {
    for base in BASES {
        for p in [3, 5] {
            for n in 1..=16 {
                for l in p_regular_partitions_of(n, p) {
                    let m = mullineux(&l, p).unwrap();
                    if m == l {
                        assert_ne!(base.cmp_partitions(&l.conjugate(), &l).unwrap(), Ordering::Greater, "{l}");
                    }
                    if l.is_self_conjugate() {
                        assert_ne!(base.cmp_partitions(&m, &l).unwrap(), Ordering::Less, "{l}");
                    }
                }
            }
        }
    }
}

#[test]
fn tilde_basic_set_shape() {
    for base in BASES {
        for p in [3, 5] {
            for n in 1..=14 {
                let t = build_tilde_basic_set(n, p, &base).unwrap();
                assert_eq!(t.datum.len(), p_regular_partitions_of(n, p).count());
                for l in t.below.iter().chain(&t.below_conjugates) {
                    assert!(t.contains(&l.conjugate()), "{l}");
                }
                for l in &t.fixed {
                    if !l.is_self_conjugate() {
                        assert!(!t.contains(&l.conjugate()), "{l} fixed but conjugate present");
                    }
                }
            }
        }
    }
}

#[test]
fn t_characterizations_agree() {
    for p in [3, 5, 7] {
        for n in 1..=25 {
            for l in self_conjugate_partitions_of(n) {
                assert_eq!(in_t(&l, p), in_t_by_quotient(&l, p).unwrap(), "{l} p={p}");
            }
        }
    }
}

#[test]
fn odd_weight_blocks_have_no_split_labels() {
    let mut checked = 0;
    for p in [3, 5] {
        for n in 1..=25 {
            for b in blocks(n, p).unwrap() {
                let b = b.descriptor;
                if b.self_conjugate_core && b.weight % 2 == 1 {
                    assert!(c_gamma(&b.core, n, p).unwrap().is_empty(), "{} n={n}", b.core);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 20);
    let b = BlockDescriptor::new(4, 3, part![1]).unwrap();
    assert!(odd_weight_basic_set(&b, &TotalOrderSpec::Lex).is_ok());
}

fn brute_force_unitriangularisable(m: &[Vec<u64>]) -> bool {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = m.len();
    let ps = perms(n);
    ps.iter().any(|r| {
        ps.iter().any(|c| (0..n).all(|i| m[r[i]][c[i]] == 1 && (i + 1..n).all(|j| m[r[i]][c[j]] == 0)))
    })
}

fn small_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..5, 0..4).prop_map(Partition::from_unsorted)
}

fn fock_vector(size: usize, p: usize) -> impl Strategy<Value = FockVector> {
    prop::collection::vec((0i64..4, -2i32..3), 1..4).prop_map(move |cs| {
        let mut x = FockVector::zero(size, p);
        let all: Vec<Partition> = partitions_of(size).collect();
        for (k, (c, e)) in cs.into_iter().enumerate() {
            let l = all[(k * 7 + c as usize) % all.len()].clone();
            x.add_term(l, &VPolynomial::monomial(e, c + 1)).unwrap();
        }
        x
    })
}

fn matrix(n: usize) -> impl Strategy<Value = Vec<Vec<u64>>> {
    let cell = prop_oneof![6 => Just(0u64), 3 => Just(1u64), 1 => 2u64..4];
    prop::collection::vec(prop::collection::vec(cell, n), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn unitriangularisable_matches_brute_force(m in (1usize..=5).prop_flat_map(matrix)) {
        let w = is_unitriangularisable(&m).unwrap();
        prop_assert_eq!(w.is_some(), brute_force_unitriangularisable(&m));
        if let Some(w) = w {
            prop_assert!(check_witness(&m, &w));
            prop_assert!(zero_count_condition(&m));
        }
    }

    #[test]
    fn divided_powers_divide(size in 0usize..5, p in prop::sample::select(vec![2usize, 3, 5]), i in 0usize..5, a in 1u32..=4, seed in 0u64..1000) {
        let i = i % p;
        let x = {
            let all: Vec<Partition> = partitions_of(size).collect();
            FockVector::basis(all[(seed as usize) % all.len()].clone(), p)
        };
        let mut iterated = x.clone();
        for _ in 0..a {
            iterated = apply_f(i, &iterated);
        }
        let divided = apply_f_divided(i, a, &x);
        prop_assert_eq!(divided.scale(&VPolynomial::balanced_factorial(a)), iterated);
    }

    #[test]
    fn divided_powers_on_sums(x in (0usize..5).prop_flat_map(|s| fock_vector(s, 3)), i in 0usize..3, a in 1u32..=4) {
        let mut iterated = x.clone();
        for _ in 0..a {
            iterated = apply_f(i, &iterated);
        }
        prop_assert_eq!(apply_f_divided(i, a, &x).scale(&VPolynomial::balanced_factorial(a)), iterated);
    }

    #[test]
    fn distant_residues_commute(x in (0usize..7).prop_flat_map(|s| fock_vector(s, 5)), i in 0usize..5, gap in 2usize..4) {
        let j = (i + gap) % 5;
        prop_assert_eq!(apply_f(i, &apply_f(j, &x)), apply_f(j, &apply_f(i, &x)));
    }

    #[test]
    fn core_and_quotient_sizes(l in small_partition(), p in 2usize..8) {
        let core = p_core(&l, p).unwrap();
        prop_assert_eq!(l.size(), core.size() + p * p_quotient(&l, p).unwrap().size());
        prop_assert_eq!(p_weight(&l, p).unwrap(), (l.size() - core.size()) / p);
    }
}
