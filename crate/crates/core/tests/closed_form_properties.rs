use cidim_core::{
    deviation, dimension, dimension_oracle, quadric, theorem_formula, Branch, ExponentTriple,
};
use proptest::prelude::*;

fn tr(a: u64, b: u64, c: u64) -> ExponentTriple {
    ExponentTriple::new(a, b, c)
}

#[test]
fn matches_oracle_up_to_24_in_every_order() {
    for a in 1..=24 {
        for b in 1..=24 {
            for c in 1..=24 {
                let t = tr(a, b, c);
                assert_eq!(dimension(t).dimension, dimension_oracle(t), "{t}");
            }
        }
    }
}

#[test]
fn perfect_square_discriminant() {
    for a in 1..=64 {
        for b in 1..=64 {
            for c in 1..=64 {
                let t = tr(a, b, c);
                let r = dimension(t);
                let e2 = r.deviation_doubled.expect("square discriminant") as i128;
                assert_eq!(4 * r.dimension as i128 - quadric(t), e2 * e2, "{t}");
            }
        }
    }
}

#[test]
fn theorem_window_agrees_with_descent() {
    for q in [2u64, 4, 8, 16] {
        for a in q / 2 + 1..=q {
            for b in q / 2 + 1..=q {
                for c in q / 2 + 1..=q {
                    assert_eq!(
                        dimension(tr(a, b, c)).dimension,
                        theorem_formula(a, b, c, q).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn figure_one_row_pattern() {
    let dim = |i, j| dimension(tr(i, j, j)).dimension as i64;
    for q in [4u64, 8, 16, 32] {
        for j in q / 2 + 2..=q {
            for i in q / 2 + 1..=q {
                let cell = dim(i, j) - dim(i, j - 1);
                assert_eq!(
                    cell,
                    (2 * i + 2 * j) as i64 - 1 - 2 * q as i64,
                    "i={i} j={j}"
                );
                if i > q / 2 + 1 {
                    assert_eq!(cell - (dim(i - 1, j) - dim(i - 1, j - 1)), 2);
                }
            }
        }
    }
}

#[test]
fn deviation_for_saturated_triples() {
    for a in 1..=20u64 {
        for b in a..=20 {
            for c in (a + b).max(b)..=50 {
                let e = deviation(tr(a, b, c)).unwrap();
                assert_eq!(e.doubled, c - a - b);
            }
        }
    }
}

fn triple() -> impl Strategy<Value = ExponentTriple> {
    (0u64..5000, 0u64..5000, 0u64..5000).prop_map(|(a, b, c)| tr(a, b, c))
}

proptest! {
    #[test]
    fn trace_sums_to_dimension(t in triple()) {
        let r = dimension(t);
        prop_assert_eq!(r.trace.iter().map(|s| s.summand).sum::<u64>(), r.dimension);
    }

    #[test]
    fn sort_invariance(t in triple()) {
        let d = dimension(t);
        for p in t.permutations() {
            let r = dimension(p);
            prop_assert_eq!(r.dimension, d.dimension);
            prop_assert_eq!(&r.trace, &d.trace);
        }
    }

    #[test]
    fn trace_shape(t in triple()) {
        let r = dimension(t);
        if t.has_zero() {
            prop_assert!(r.trace.is_empty());
            prop_assert_eq!(r.dimension, 0);
        } else {
            prop_assert!(r.trace.len() as u32 <= 1 + t.max().ilog2());
            for w in r.trace.windows(2) {
                prop_assert!(w[1].q < w[0].q);
                prop_assert!(!w[0].branch.is_terminal());
            }
            let mut prev = t.sorted();
            for s in &r.trace {
                prop_assert!(s.q.is_power_of_two());
                if s.branch == Branch::PropII {
                    let after = s.triple_after;
                    prop_assert!(after.d2 + after.d3 < prev.d2 + prev.d3);
                }
                prev = s.triple_after.sorted();
            }
        }
    }

    #[test]
    fn perfect_square_for_large_triples(t in (1u64..1_000_000, 1u64..1_000_000, 1u64..1_000_000).prop_map(|(a, b, c)| tr(a, b, c))) {
        let r = dimension(t);
        let e2 = r.deviation_doubled.unwrap() as i128;
        prop_assert_eq!(4 * r.dimension as i128 - quadric(t), e2 * e2);
    }
}
