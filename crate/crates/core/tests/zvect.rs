use nakayama_fuchs::zvect::*;
use nakayama_fuchs::{LElement, WeightTriple};
use proptest::prelude::*;

fn ctx(p: (i64, i64, i64)) -> WeightContext {
    WeightContext::for_weights(p.0, p.1, p.2).unwrap()
}

fn el(c: &WeightContext, s: &str) -> LElement {
    c.weights.parse(s).unwrap()
}

#[test]
fn context_constants() {
    let cases = [
        ((2, 4, 5), [20, 10, 5, 4, 1], 30),
        ((2, 4, 7), [28, 14, 7, 4, 3], 18),
        ((2, 5, 5), [10, 5, 2, 2, 1], 20),
        ((2, 5, 6), [30, 15, 6, 5, 4], 16),
    ];
    for (p, delta, d) in cases {
        let c = ctx(p);
        assert_eq!(c.delta_datum, delta, "{p:?}");
        assert_eq!(c.period, d);
    }
}

#[test]
fn generators_and_relation_degrees() {
    for p in SUPPORTED {
        let c = ctx(p);
        let w = c.weights;
        for (k, e) in &c.omega_generators {
            assert_eq!(c.omega() * *k, *e, "{p:?} {k}");
            assert!(e.is_nonneg());
        }
        for (mono, deg) in c.ring_generators {
            let x = w.x(1) * mono[0] + w.x(2) * mono[1] + w.x(3) * mono[2];
            assert_eq!(x, c.omega() * deg, "{p:?} {mono:?}");
        }
        for term in &c.relation {
            let deg: i64 = (0..3).map(|i| term[i] * c.ring_generators[i].1).sum();
            assert_eq!(deg, c.period, "{p:?} {term:?}");
        }
        assert_eq!(c.period * c.delta_datum[4], (c.omega() * c.period).delta());
        assert!((c.omega() * c.period).is_nonneg());
    }
}

#[test]
fn sset_matches_appendix() {
    let c = ctx((2, 4, 5));
    assert_eq!(c.sset, vec![el(&c, "0"), el(&c, "x2")]);
    let c = ctx((2, 5, 5));
    let mut expected: Vec<_> = ["0", "x2", "x3", "2x2", "2x3"].iter().map(|s| el(&c, s)).collect();
    expected.sort();
    assert_eq!(c.sset, expected);
    let c = ctx((2, 4, 7));
    let bound = el(&c, "x2+2x3");
    assert!(c.sset.iter().all(|x| x.is_nonneg() && x.leq(&bound)));
    assert_eq!(c.sset.len(), 6);
    let c = ctx((2, 5, 6));
    let (b1, b2) = (el(&c, "3x3"), el(&c, "2x2+x3"));
    assert!(c.sset.iter().all(|x| x.is_nonneg() && (x.leq(&b1) || x.leq(&b2))));
    assert_eq!(c.sset.len(), 8);
}

#[test]
fn odd_shift_fixtures() {
    let fixtures: [((i64, i64, i64), &[(&str, &str, i64)]); 4] = [
        ((2, 4, 5), &[("x2", "x2", 15)]),
        ((2, 4, 7), &[("x2", "x2+x3", 7), ("x2+x3", "x2", 11)]),
        ((2, 5, 5), &[("x3", "x2", 10), ("2x3", "2x2", 10)]),
        ((2, 5, 6), &[("x2", "2x3", 6), ("x3", "x2+x3", 5), ("2x2", "2x2", 8), ("2x3", "x2", 10)]),
    ];
    for (p, rows) in fixtures {
        let c = ctx(p);
        for (from, to, k) in rows {
            assert_eq!(c.odd_shift(&el(&c, from)).unwrap(), (el(&c, to), *k), "{p:?} {from}");
        }
    }
}

#[test]
fn odd_shift_applied_twice_is_period() {
    for p in SUPPORTED {
        let c = ctx(p);
        for (t, (t1, k1)) in &c.odd_shifts {
            let (t2, k2) = c.odd_shift(t1).unwrap();
            assert_eq!((t2, k1 + k2), (*t, c.period), "{p:?} {t}");
        }
    }
}

#[test]
fn projective_covers() {
    let c = ctx((2, 4, 5));
    assert_eq!(c.projective_cover(&el(&c, "x2")).unwrap(), (0, -5));
    let c = ctx((2, 5, 5));
    assert_eq!(c.projective_cover(&el(&c, "x3")).unwrap(), (0, -6));
    let c = ctx((2, 5, 6));
    assert_eq!(c.projective_cover(&el(&c, "2x2")).unwrap(), (0, -2));
    assert_eq!(c.projective_cover(&el(&c, "x2+x3")).unwrap(), (0, -1));
    assert!(c.projective_cover(&el(&c, "0")).is_err());
    assert!(c.projective_cover(&el(&c, "3x3")).is_err());
    assert!(c.projective_cover(&el(&c, "4x3")).is_err());
}

#[test]
fn cover_twists_are_positive() {
    // a x_i in S forces (p_i - a + j) ω > 0 for 1 <= j <= a
    for p in SUPPORTED {
        let c = ctx(p);
        for t in &c.sset {
            let (l1, l2, l3, l) = t.coords();
            let nonzero: Vec<(usize, i64)> = [(1, l1), (2, l2), (3, l3)].into_iter().filter(|&(_, a)| a != 0).collect();
            if l != 0 || nonzero.len() != 1 {
                continue;
            }
            let (i, a) = nonzero[0];
            for j in 1..=a {
                let m = c.omega() * (c.weights.weight(i) - a + j);
                assert!(m.is_nonneg() && !m.is_zero(), "{p:?} {t} {j}");
            }
        }
    }
}

#[test]
fn raw_criterion_examples() {
    let c = ctx((2, 4, 5));
    let x2 = el(&c, "x2");
    assert!(c.stable_hom_nonzero_raw(&el(&c, "4x3"), &x2).unwrap());
    assert!(!c.stable_hom_nonzero_raw(&el(&c, "5x3"), &x2).unwrap());
    let c = ctx((2, 5, 6));
    let x3 = el(&c, "x3");
    assert!(c.stable_hom_nonzero_raw(&el(&c, "c+2x2"), &x3).unwrap());
    assert!(!c.stable_hom_nonzero_raw(&el(&c, "x3"), &x3).unwrap());
    for p in SUPPORTED {
        let c = ctx(p);
        for t in c.odd_shifts.keys() {
            assert!(c.stable_hom_nonzero_raw(&c.weights.zero(), t).unwrap());
        }
    }
    assert!(c.stable_hom_nonzero_raw(&el(&c, "0"), &el(&c, "3x3")).is_err());
}

type Simplified = fn(&WeightContext, &LElement) -> bool;

fn within(c: &WeightContext, x: &LElement, bound: &str) -> bool {
    x.is_nonneg() && x.leq(&el(c, bound))
}

#[test]
fn raw_criterion_matches_simplified_forms() {
    let cases: Vec<((i64, i64, i64), &str, Simplified)> = vec![
        ((2, 4, 5), "x2", |c, x| within(c, x, "4x3")),
        ((2, 4, 7), "x2", |c, x| within(c, x, "c+x3") && x.li(2) == 0),
        ((2, 4, 7), "x2+x3", |c, x| within(c, x, "c") && x.li(1) == 0),
        ((2, 5, 5), "x3", |c, x| within(c, x, "x1+3x2")),
        ((2, 5, 5), "2x3", |c, x| within(c, x, "x1+2x2+x3")),
        ((2, 5, 5), "x2", |c, x| within(c, x, "x1+3x3")),
        ((2, 5, 5), "2x2", |c, x| within(c, x, "x1+x2+2x3")),
        ((2, 5, 6), "x2", |c, x| within(c, x, "x1+5x3")),
        ((2, 5, 6), "x3", |c, x| within(c, x, "c+2x2") && x.li(3) == 0),
        ((2, 5, 6), "2x2", |c, x| within(c, x, "x1+x2+3x3")),
        ((2, 5, 6), "2x3", |c, x| within(c, x, "x1+2x2+x3")),
    ];
    for (p, t, simple) in cases {
        let c = ctx(p);
        let t = el(&c, t);
        for a1 in 0..=p.0 {
            for a2 in 0..=p.1 {
                for a3 in 0..=p.2 {
                    for l in -2..=2 {
                        let x = c.weights.element(a1, a2, a3, l);
                        assert_eq!(c.stable_hom_nonzero_raw(&x, &t).unwrap(), simple(&c, &x), "{p:?} {t} {x}");
                    }
                }
            }
        }
    }
}

/// `{n : sHom(O(a), O(b + nω)) != 0}` for `n` in `[-40, 40]`.
fn nonvanishing(c: &WeightContext, a: &str, b: &str) -> Vec<i64> {
    let src = StableLineObject::line(c, &el(c, a)).unwrap();
    (-40..=40)
        .filter(|&n| {
            let dst = StableLineObject::line(c, &(el(c, b) + c.omega() * n)).unwrap();
            stable_hom_dim(c, &src, &dst).unwrap() == 1
        })
        .collect()
}

#[test]
fn nonvanishing_sets_2_5_6() {
    let c = ctx((2, 5, 6));
    assert_eq!(nonvanishing(&c, "x3", "x3"), [0, 6]);
    assert_eq!(nonvanishing(&c, "2x3", "2x3"), [0, 5]);
    assert_eq!(nonvanishing(&c, "4x3", "4x3"), [0, 4, 5, 9]);
    assert_eq!(nonvanishing(&c, "6x3", "6x3"), [0, 5]);
    for i in 1..=3 {
        let a = format!("{}x3", 2 * i);
        assert_eq!(nonvanishing(&c, "x3", &a), [0]);
        assert_eq!(nonvanishing(&c, &a, "x3"), [4 * i + 1]);
        for j in i + 1..=3 {
            let b = format!("{}x3", 2 * j);
            assert_eq!(nonvanishing(&c, &a, &b), [0, 5]);
            assert_eq!(nonvanishing(&c, &b, &a), [4 * (j - i), 4 * (j - i) + 5]);
        }
    }
}

#[test]
fn nonvanishing_sets_2_5_5() {
    // frozen from a scan over n in [-40, 40]
    let c = ctx((2, 5, 5));
    assert_eq!(nonvanishing(&c, "x3", "x3"), [0, 5]);
    assert_eq!(nonvanishing(&c, "2x3", "2x3"), [0, 4, 5, 9]);
    assert_eq!(nonvanishing(&c, "3x3", "3x3"), [0, 4, 5, 9]);
    assert_eq!(nonvanishing(&c, "4x3", "4x3"), [0, 5]);
    assert_eq!(nonvanishing(&c, "4x3", "x3"), [12, 17]);
}

#[test]
fn nonvanishing_sets_2_5_5_by_direct_degree_check() {
    // sHom(O(x3), O(x3 + nω)) through the raw criterion on x = nω
    let c = ctx((2, 5, 5));
    let x3 = el(&c, "x3");
    let direct: Vec<i64> = (-40..=40)
        .filter(|&n| {
            let (rep, m) = c.weights.orbit_rep(&(x3 + c.omega() * n)).unwrap();
            assert_eq!(rep, x3);
            c.stable_hom_nonzero_raw(&(c.omega() * m), &x3).unwrap()
        })
        .collect();
    assert_eq!(direct, nonvanishing(&c, "x3", "x3"));
}

#[test]
fn shifted_homs_vanish_2_4_5() {
    let c = ctx((2, 4, 5));
    let a = StableLineObject::parse(&c, "x2").unwrap();
    let b = StableLineObject::parse(&c, "x2+10x3").unwrap();
    for m in (-6..=6).filter(|&m| m != 0) {
        assert_eq!(stable_hom_dim(&c, &a, &suspend(&c, &b, m).unwrap()).unwrap(), 0, "{m}");
    }
    assert_eq!(stable_hom_dim(&c, &a, &a).unwrap(), 1);
}

#[test]
fn single_line_bundle_is_extension_free() {
    let c = ctx((2, 4, 5));
    let o = StableLineObject::parse(&c, "x2").unwrap();
    assert_eq!(extension_free(&c, &[o]).unwrap(), None);
}

#[test]
fn tilting_objects_verify() {
    for (p, (n, r)) in [((2, 4, 5), (11, 5)), ((2, 4, 7), (13, 6)), ((2, 5, 5), (12, 5)), ((2, 5, 6), (13, 5))] {
        let w = WeightTriple::new(p.0, p.1, p.2).unwrap();
        let report = verify_tilting(&w).unwrap();
        assert_eq!(report.spec.expected, (n, r));
        assert!(report.extension_free, "{p:?} {:?}", report.witness);
        assert!(report.summand_count_ok);
        assert!(report.cartan_match, "{p:?}\n{}", report.hom_matrix);
        assert!(report.is_tilting());
    }
}

#[test]
fn tilting_order_2_4_5_is_printed_order() {
    let w = WeightTriple::new(2, 4, 5).unwrap();
    let report = verify_tilting(&w).unwrap();
    assert_eq!(report.order, Some((0..11).collect()));
}

#[test]
fn double_window_scan_vanishes() {
    for p in SUPPORTED {
        let c = ctx(p);
        let w = c.weights;
        let objs = tilting_spec(&w).unwrap().summands;
        let window = suspension_window(&c, &objs);
        for a in &objs {
            for b in &objs {
                for m in (window + 1)..=(2 * window) {
                    for s in [m, -m] {
                        let shifted = suspend(&c, b, s).unwrap();
                        assert_eq!(stable_hom_dim(&c, a, &shifted).unwrap(), 0, "{p:?} {a} {b} {s}");
                    }
                }
            }
        }
    }
}

fn supported_object(c: &WeightContext) -> impl Strategy<Value = StableLineObject> + '_ {
    let reps: Vec<LElement> = c.odd_shifts.keys().copied().collect();
    (0..reps.len(), -60i64..60).prop_map(move |(i, m)| StableLineObject::new(c, reps[i], m, 0).unwrap())
}

#[test]
fn serre_bimodule_identity() {
    for p in SUPPORTED {
        let c = ctx(p);
        let mut runner = proptest::test_runner::TestRunner::new(ProptestConfig::with_cases(200));
        runner
            .run(&(supported_object(&c), supported_object(&c)), |(a, b)| {
                let sa = serre(&c, &a, 1).unwrap();
                prop_assert_eq!(stable_hom_dim(&c, &a, &b).unwrap(), stable_hom_dim(&c, &b, &sa).unwrap());
                Ok(())
            })
            .unwrap();
    }
}

#[test]
fn suspension_coherence_on_random_objects() {
    for p in SUPPORTED {
        let c = ctx(p);
        let mut runner = proptest::test_runner::TestRunner::new(ProptestConfig::with_cases(100));
        runner
            .run(&(supported_object(&c), -8i64..8, -8i64..8), |(a, j, k)| {
                let lhs = suspend(&c, &suspend(&c, &a, j).unwrap(), k).unwrap();
                prop_assert_eq!(lhs, suspend(&c, &a, j + k).unwrap());
                Ok(())
            })
            .unwrap();
    }
}
