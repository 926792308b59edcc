mod common;

use avecond::ave::{self, AveProblem};
use avecond::certify::{certify_abs, certify_rel_with, stability_gap, weak_sharp_check};
use avecond::cond::{applicable_upper_bounds, cond_exact};
use avecond::dense::{vec_ops, Matrix, NormSpec};

struct Case {
    p: AveProblem,
    x: Vec<f64>,
    xs: Vec<f64>,
}

fn corpus(seed: u64, count: usize) -> Vec<Case> {
    let mut rng = common::rng(seed);
    (0..count)
        .map(|_| {
            let n = common::dim(&mut rng, 5);
            let a = common::regular(&mut rng, n);
            let b = common::uniform_vec(&mut rng, n, -5.0, 5.0);
            let p = AveProblem::new(a, b).unwrap();
            let xs = ave::solve_exact(&p).unwrap().x_star;
            let x = xs
                .iter()
                .map(|v| v + common::uniform_vec(&mut rng, 1, -2.0, 2.0)[0])
                .collect();
            Case { p, x, xs }
        })
        .collect()
}

#[test]
fn absolute_bound_is_sound() {
    for c in corpus(51, 1000) {
        for ns in common::norms() {
            let cond = cond_exact(&c.p.a, &ns).unwrap();
            let r = certify_abs(&c.p, &c.x, &ns, &cond).unwrap();
            let err = ns.vector_norm(&vec_ops::sub(&c.x, &c.xs));
            assert!(err <= r.abs_bound + 1e-9, "{ns:?}: {err} > {}", r.abs_bound);
        }
    }
}

#[test]
fn relative_sandwich_holds() {
    let mut tested = 0;
    for c in corpus(52, 1000) {
        for ns in common::norms() {
            if ns.vector_norm(&c.p.b) < 0.1 || ns.vector_norm(&c.xs) == 0.0 {
                continue;
            }
            let cond = cond_exact(&c.p.a, &ns).unwrap();
            let r = certify_rel_with(&c.p, &c.x, &ns, &cond).unwrap();
            let rel = ns.vector_norm(&vec_ops::sub(&c.x, &c.xs)) / ns.vector_norm(&c.xs);
            let (lo, hi) = (r.rel_bound_lower.unwrap(), r.rel_bound_upper.unwrap());
            assert!(lo <= rel + 1e-9 && rel <= hi + 1e-9, "{ns:?}: {lo} <= {rel} <= {hi}");
            tested += 1;
        }
    }
    assert!(tested > 2000);
}

#[test]
fn upper_bounds_never_shrink_the_certificate() {
    let mut rng = common::rng(53);
    for _ in 0..300 {
        let n = common::dim(&mut rng, 5);
        let a = common::h_matrix(&mut rng, n);
        let p = AveProblem::new(a, common::uniform_vec(&mut rng, n, -5.0, 5.0)).unwrap();
        let x = common::uniform_vec(&mut rng, n, -3.0, 3.0);
        for ns in common::norms() {
            let exact = cond_exact(&p.a, &ns).unwrap();
            let e = certify_abs(&p, &x, &ns, &exact).unwrap().abs_bound;
            for upper in applicable_upper_bounds(&p.a, &ns) {
                let u = certify_abs(&p, &x, &ns, &upper).unwrap().abs_bound;
                assert!(u >= e * (1.0 - 1e-12), "{upper:?}: {u} < {e}");
            }
        }
    }
}

#[test]
fn bound_is_attained_on_the_diagonal_example() {
    let p = AveProblem::new(Matrix::identity(2).scale(3.0), vec![1.0, 1.0]).unwrap();
    let xs = ave::solve_exact(&p).unwrap().x_star;
    let cond = cond_exact(&p.a, &NormSpec::INF).unwrap();
    let r = certify_abs(&p, &[0.0, 0.0], &NormSpec::INF, &cond).unwrap();
    let err = vec_ops::norm_inf(&xs);
    assert!((r.abs_bound / err - 1.0).abs() <= 1e-9);
}

#[test]
fn solution_map_is_lipschitz_in_b() {
    let mut rng = common::rng(54);
    for _ in 0..300 {
        let n = common::dim(&mut rng, 5);
        let a = common::regular(&mut rng, n);
        let b1 = common::uniform_vec(&mut rng, n, -5.0, 5.0);
        let b2 = common::uniform_vec(&mut rng, n, -5.0, 5.0);
        for ns in common::norms() {
            let g = stability_gap(&a, &b1, &b2, &ns).unwrap();
            assert!(g.gap <= g.bound + 1e-9, "{g:?}");
        }
    }
}

#[test]
fn weak_sharp_growth_holds_on_random_instances() {
    let mut rng = common::rng(55);
    for seed in 0..40 {
        let n = common::dim(&mut rng, 4);
        let a = common::regular(&mut rng, n);
        let p = AveProblem::new(a, common::uniform_vec(&mut rng, n, -5.0, 5.0)).unwrap();
        let w = weak_sharp_check(&p, 300, seed).unwrap();
        assert!(w.passed, "{p:?} {w:?}");
    }
}
