//! One PASS/FAIL line per acceptance criterion.
//!
//! Criterion 3 contains one sub-check that cannot hold: the claim that the
//! conjugate of (4,2,1,1) is missing from B̃ for n = 8, although (4,2,1,1)
//! is self-conjugate and is itself a member. The line prints FAIL; the test
//! asserts that this is the only failing sub-check.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use modrep_core::basicsets::{
    build_tilde_basic_set, check_witness, is_unitriangularisable, restrict_to_block, theta,
    verify_unitriangular_basic_set, zero_count_condition,
};
use modrep_core::clifford::{c_gamma, induce_basic_set_to_sn, restrict_basic_set_to_an};
use modrep_core::fock::{apply_f, apply_f_divided, extract_decomposition_column, FockCache, FockVector};
use modrep_core::matrix::TotalOrderSpec;
use modrep_core::mullineux::{mullineux, mullineux_alt, mullineux_fixed};
use modrep_core::part;
use modrep_core::partition::*;
use modrep_core::poly::VPolynomial;
use modrep_core::scenarios::*;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

struct Outcome {
    /// (sub-check, passed)
    checks: Vec<(String, bool)>,
    elapsed: Duration,
    budget: Duration,
}

impl Outcome {
    fn pass(&self) -> bool {
        self.elapsed <= self.budget && self.checks.iter().all(|(_, ok)| *ok)
    }

    fn failing(&self) -> Vec<&str> {
        let mut f: Vec<&str> = self.checks.iter().filter(|(_, ok)| !ok).map(|(c, _)| c.as_str()).collect();
        if self.elapsed > self.budget {
            f.push("time budget");
        }
        f
    }
}

fn run(budget_secs: u64, f: impl FnOnce(&mut Vec<(String, bool)>)) -> Outcome {
    let t = Instant::now();
    let mut checks = Vec::new();
    f(&mut checks);
    Outcome { checks, elapsed: t.elapsed(), budget: Duration::from_secs(budget_secs) }
}

fn check(c: &mut Vec<(String, bool)>, name: &str, ok: bool) {
    c.push((name.to_string(), ok));
}

fn parts(v: &[&[usize]]) -> BTreeSet<Partition> {
    v.iter().map(|x| Partition::new(x.to_vec()).unwrap()).collect()
}

fn c1() -> Outcome {
    run(1, |c| {
        let m = |l: Partition| mullineux(&l, 3).unwrap();
        check(c, "m(2,2,1) = (4,1)", m(part![2, 2, 1]) == part![4, 1]);
        check(c, "m(3,1,1) = (3,1,1)", m(part![3, 1, 1]) == part![3, 1, 1]);
        check(c, "m(3,2) = (5)", m(part![3, 2]) == part![5]);
        check(c, "m(6,2,2,1,1) = (5,3,2,2)", m(part![6, 2, 2, 1, 1]) == part![5, 3, 2, 2]);
        check(c, "m(10,4,4,1) fixed", m(part![10, 4, 4, 1]) == part![10, 4, 4, 1]);
    })
}

fn c2() -> Outcome {
    run(60, |c| {
        let mut bad = 0;
        let mut total = 0;
        for p in [3, 5, 7] {
            for n in 0..=20 {
                for l in p_regular_partitions_of(n, p) {
                    total += 1;
                    let m = mullineux(&l, p).unwrap();
                    if mullineux(&m, p).unwrap() != l || mullineux_alt(&l, p).unwrap() != m {
                        bad += 1;
                    }
                }
            }
        }
        check(c, &format!("{total} partitions, {bad} discrepancies"), bad == 0 && total > 0);
    })
}

fn c3() -> Outcome {
    run(5, |c| {
        let set = |n| -> BTreeSet<Partition> {
            build_tilde_basic_set(n, 3, &TotalOrderSpec::Lex).unwrap().members().map(|l| l.partition.clone()).collect()
        };
        let five = parts(&[&[5], &[1, 1, 1, 1, 1], &[3, 1, 1], &[4, 1], &[2, 1, 1, 1]]);
        check(c, "n=5 set", set(5) == five);
        let eight = parts(&[
            &[4, 2, 1, 1],
            &[2, 2, 2, 1, 1],
            &[2, 2, 1, 1, 1, 1],
            &[3, 1, 1, 1, 1, 1],
            &[3, 2, 1, 1, 1],
            &[2, 1, 1, 1, 1, 1, 1],
            &[1, 1, 1, 1, 1, 1, 1, 1],
            &[5, 2, 1],
            &[5, 3],
            &[6, 1, 1],
            &[6, 2],
            &[7, 1],
            &[8],
        ]);
        let s8 = set(8);
        check(c, "n=8 set (13 elements)", s8 == eight && s8.len() == 13);
        check(c, "conjugate of (4,2,1,1) excluded at n=8", !s8.contains(&part![4, 2, 1, 1].conjugate()));
        let lex = build_tilde_basic_set(12, 3, &TotalOrderSpec::Lex).unwrap();
        let lexp = build_tilde_basic_set(12, 3, &TotalOrderSpec::Lexprime).unwrap();
        let (a, b) = (part![6, 2, 2, 1, 1], part![5, 3, 2, 2]);
        check(c, "lex order keeps (6,2,2,1,1)", lex.contains(&a) && !lex.contains(&b));
        check(
            c,
            "reversed order keeps (5,3,2,2) and its conjugate",
            lexp.contains(&b) && lexp.contains(&b.conjugate()) && !lexp.contains(&a),
        );
    })
}

fn c4() -> Outcome {
    run(5, |c| {
        let s6 = s6_data().unwrap();
        let t = build_tilde_basic_set(6, 3, &TotalOrderSpec::Lex).unwrap();
        let bt = restrict_to_block(&t, &Partition::empty()).unwrap();
        check(c, "B̃ on the block has 5 members", bt.datum.len() == 5);
        check(c, "unitriangular against the full block matrix", verify_unitriangular_basic_set(&s6.matrix, &bt.datum).unwrap());
    })
}

fn c5() -> Outcome {
    run(5, |c| {
        let s6 = s6_data().unwrap();
        let r = restrict_basic_set_to_an(&s6.matrix, &s6.datum).unwrap();
        let same = r.model.rows() == s6.an_restriction.rows()
            && r.model.cols() == s6.an_restriction.cols()
            && r.model.entries() == s6.an_restriction.entries();
        check(c, "restriction equals the printed A_6 matrix", same);
        let i = induce_basic_set_to_sn(&r.model, &r.datum).unwrap();
        check(c, "induction: exactly one 2x2 unknown block", single_unknown_square(&i.model).is_some());
        let rows: Vec<String> = i.model.rows().iter().map(ToString::to_string).collect();
        check(
            c,
            "induction rows",
            rows == ["(6)", "(1,1,1,1,1,1)", "(5,1)", "(2,1,1,1,1)", "(3,2,1)"],
        );
        let (m, d) = s6_alternative_an_input(&s6, &r.model, &r.datum).unwrap();
        let j = induce_basic_set_to_sn(&m, &d).unwrap();
        let psi = |x: &modrep_core::clifford::SnInduction| x.datum.psi.iter().cloned().collect::<BTreeSet<_>>();
        check(
            c,
            "alternative input gives the same S_6 basic set",
            j.model == i.model && j.datum.set == i.datum.set && psi(&j) == psi(&i),
        );
    })
}

fn c6() -> Outcome {
    run(10, |c| {
        let fixed: BTreeSet<Partition> = mullineux_fixed(18, 3)
            .unwrap()
            .into_iter()
            .filter(|m| p_core(m, 3).unwrap().is_empty())
            .collect();
        check(c, "fixed points in the block", fixed == parts(&[&[10, 4, 4], &[9, 4, 4, 1], &[7, 5, 2, 2, 1, 1]]));
        let cg: BTreeSet<Partition> = c_gamma(&Partition::empty(), 18, 3).unwrap().into_iter().collect();
        check(
            c,
            "split labels",
            cg == parts(&[&[9, 2, 1, 1, 1, 1, 1, 1, 1], &[7, 4, 2, 2, 1, 1, 1], &[6, 5, 2, 2, 2, 1]]),
        );
        let m = a18_submatrix().unwrap();
        let e = m.complete_entries().unwrap();
        check(c, "not unitriangularisable", is_unitriangularisable(&e).unwrap().is_none());
        let zeros = e.iter().flatten().filter(|&&x| x == 0).count();
        check(c, "zero-count condition fails (2 < 3)", zeros == 2 && !zero_count_condition(&e));
    })
}

fn c7() -> Outcome {
    run(120, |c| {
        let g = PrintedExpansion::parse(FOCK_A19).unwrap();
        let w = g.operator_word().unwrap();
        let dir = tempfile::tempdir().unwrap();
        let cache = FockCache::new(dir.path());
        let x = cache.apply_word(&w).unwrap();
        let cmp = compare_expansion(&x, &g);
        check(c, &format!("{} well-formed printed terms agree", cmp.matched), cmp.agrees() && cmp.matched > 0);
        check(c, "only flagged printed terms differ", cmp.flagged.len() == 1);
        let col = extract_decomposition_column(&x, &g.lambda);
        check(c, "extraction hypothesis holds", col.is_ok());
        if let Ok(col) = col {
            let v: Vec<u64> = [part![6, 5, 3, 2, 2, 1], part![7, 4, 3, 2, 1, 1, 1], part![10, 1, 1, 1, 1, 1, 1, 1, 1, 1]]
                .iter()
                .map(|m| col.get(m))
                .collect();
            check(c, "column on the split labels = (2,3,0)", v == [2, 3, 0]);
        }
        let t = Instant::now();
        let again = cache.apply_word(&w).unwrap();
        check(c, "cached rerun identical and < 1 s", again == x && t.elapsed() < Duration::from_secs(1));
        check(c, "scenario", run_scenario("a19-counterexample", Some(&cache)).unwrap().passed());
    })
}

fn c8() -> Outcome {
    run(600, |c| {
        let dir = tempfile::tempdir().unwrap();
        let cache = FockCache::new(dir.path());
        let r = run_scenario("s23-block", Some(&cache)).unwrap();
        for s in &r.steps {
            check(c, &s.name, s.pass);
        }
        check(c, "regularize (12,1^11)", regularize(&s23_rho()[0].1, 3).unwrap() == part![12, 6, 5]);
        let t = Instant::now();
        let again = run_scenario("s23-block", Some(&cache)).unwrap();
        check(c, "cached rerun identical", again == r && t.elapsed() < Duration::from_secs(10));
    })
}

fn c9() -> Outcome {
    run(60, |c| {
        let r = odd_weight_sweep(25);
        check(c, &r.steps[0].detail, r.passed());
    })
}

fn c10() -> Outcome {
    run(120, |c| {
        let mut ok = true;
        for p in [2, 3, 5, 7] {
            for n in 0..=25 {
                for l in partitions_of(n) {
                    let cq = core_quotient(&l, p).unwrap();
                    ok &= from_core_quotient(&cq).unwrap() == l && conjugate_core_quotient_law_check(&l, p);
                }
            }
        }
        check(c, "core/quotient roundtrip and conjugation laws", ok);

        let mut ok = true;
        for base in [TotalOrderSpec::Lex, TotalOrderSpec::Lexprime] {
            let prec = TotalOrderSpec::prec(base.clone());
            for n in 1..=12 {
                let mut all: Vec<Partition> = partitions_of(n).collect();
                // a total order sorts consistently and never ties distinct elements
                all.sort_by(|a, b| prec.cmp_partitions(a, b).unwrap());
                for w in all.windows(2) {
                    ok &= prec.cmp_partitions(&w[0], &w[1]).unwrap().is_lt();
                }
                for (i, a) in all.iter().enumerate() {
                    for b in &all[i + 1..] {
                        ok &= prec.cmp_partitions(a, b).unwrap().is_lt() && prec.cmp_partitions(b, a).unwrap().is_gt();
                    }
                }
            }
        }
        check(c, "⪯ is a total order (n ≤ 12)", ok);

        let mut ok = true;
        for base in [TotalOrderSpec::Lex, TotalOrderSpec::Lexprime] {
            for p in [3, 5] {
                for n in 1..=16 {
                    let mut seen = HashSet::new();
                    for l in p_regular_partitions_of(n, p) {
                        ok &= seen.insert(theta(&l, p, &base).unwrap());
                        let m = mullineux(&l, p).unwrap();
                        let le = |a: &Partition, b: &Partition| base.cmp_partitions(a, b).unwrap().is_le();
                        ok &= le(&m.conjugate(), &l) && le(&l.conjugate(), &m);
                        if m == l {
                            ok &= le(&l.conjugate(), &l);
                        }
                        if l.is_self_conjugate() {
                            ok &= le(&l, &m);
                        }
                    }
                }
            }
        }
        check(c, "Θ injective; m(λ)′ ≤ λ, λ′ ≤ m(λ), fixed and self-conjugate bounds (n ≤ 16)", ok);

        let mut ok = true;
        for p in [2, 3, 5] {
            for size in 0..=6 {
                for l in partitions_of(size) {
                    let x = FockVector::basis(l, p);
                    for i in 0..p {
                        let mut iter = x.clone();
                        for a in 1..=4u32 {
                            iter = apply_f(i, &iter);
                            ok &= apply_f_divided(i, a, &x).scale(&VPolynomial::balanced_factorial(a)) == iter;
                        }
                    }
                }
            }
        }
        check(c, "divided powers divide exactly", ok);

        let mut runner = TestRunner::deterministic();
        let cell = proptest::prop_oneof![6 => proptest::strategy::Just(0u64), 3 => proptest::strategy::Just(1u64), 1 => 2u64..4];
        let strat = proptest::collection::vec(proptest::collection::vec(cell, 5), 5);
        let mut ok = true;
        let mut positives = 0;
        for _ in 0..300 {
            let m = strat.new_tree(&mut runner).unwrap().current();
            let w = is_unitriangularisable(&m).unwrap();
            positives += w.is_some() as usize;
            ok &= w.is_some() == brute_force(&m) && w.as_ref().is_none_or(|w| check_witness(&m, w));
        }
        check(c, &format!("unitriangularisable vs brute force on 300 5x5 matrices ({positives} positive)"), ok);
    })
}

fn brute_force(m: &[Vec<u64>]) -> bool {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        perms(n - 1)
            .into_iter()
            .flat_map(|p| {
                (0..n).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    q
                })
            })
            .collect()
    }
    let n = m.len();
    let ps = perms(n);
    ps.iter().any(|r| ps.iter().any(|c| (0..n).all(|i| m[r[i]][c[i]] == 1 && (i + 1..n).all(|j| m[r[i]][c[j]] == 0))))
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("Mullineux golden values", c1),
        ("Mullineux involution and dual-algorithm agreement", c2),
        ("B̃ reproduction and order sensitivity", c3),
        ("B̃ unitriangular on the S_6 block", c4),
        ("A_6 restriction and S_6 induction", c5),
        ("A_18 counterexample", c6),
        ("A_19 counterexample", c7),
        ("S_23 block construction", c8),
        ("odd-weight A_n blocks", c9),
        ("structural property suites", c10),
    ];
    let mut unexpected = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        let failing = o.failing();
        let status = if o.pass() { "PASS" } else { "FAIL" };
        let extra = if failing.is_empty() { String::new() } else { format!(" -- failing: {}", failing.join("; ")) };
        println!("{status} {}: {name} ({:.2?}){extra}", k + 1, o.elapsed);
        let known = k + 1 == 3 && failing == ["conjugate of (4,2,1,1) excluded at n=8"];
        if !o.pass() && !known {
            unexpected.push(format!("{}: {}", k + 1, failing.join("; ")));
        }
    }
    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:?}");
}
