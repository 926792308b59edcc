mod common;

use avecond::ave::{self, AveProblem};
use avecond::dense::{self, vec_ops, NormSpec};

#[test]
fn oracle_finds_one_solution_with_small_residual() {
    let mut rng = common::rng(31);
    for _ in 0..500 {
        let n = common::dim(&mut rng, 5);
        let a = common::regular(&mut rng, n);
        let b = common::uniform_vec(&mut rng, n, -5.0, 5.0);
        let p = AveProblem::new(a, b).unwrap();
        let s = ave::solve_exact(&p).unwrap();
        assert!(s.residual_norm_inf <= 1e-9, "{p:?} {s:?}");
    }
}

#[test]
fn solution_minimizes_the_concave_program() {
    let mut rng = common::rng(32);
    for _ in 0..200 {
        let n = common::dim(&mut rng, 5);
        let a = common::regular(&mut rng, n);
        let b = common::uniform_vec(&mut rng, n, -5.0, 5.0);
        let p = AveProblem::new(a, b).unwrap();
        let xs = ave::solve_exact(&p).unwrap().x_star;
        assert!(ave::concave_feasible(&p, &xs).unwrap());
        let at_star: f64 = ave::residual(&p, &xs).unwrap().iter().sum();
        assert!(at_star.abs() <= 1e-9);
        for _ in 0..20 {
            let x: Vec<f64> = xs.iter().map(|v| v + 3.0 * rand_offset(&mut rng)).collect();
            if vec_ops::norm_inf(&vec_ops::sub(&x, &xs)) < 1e-6 || !ave::concave_feasible(&p, &x).unwrap() {
                continue;
            }
            let obj: f64 = ave::residual(&p, &x).unwrap().iter().sum();
            assert!(obj > 0.0, "{x:?} {obj}");
        }
    }
}

fn rand_offset(rng: &mut common::TestRng) -> f64 {
    use rand::Rng;
    rng.gen_range(-1.0..1.0)
}

#[test]
fn picard_converges_for_contractive_inverse() {
    let mut rng = common::rng(33);
    let mut runs = 0;
    while runs < 100 {
        let n = common::dim(&mut rng, 5);
        let a = common::h_matrix(&mut rng, n);
        let inv = dense::invert(&a).unwrap();
        if NormSpec::INF.induced(&inv) >= 0.9 {
            continue;
        }
        let b = common::uniform_vec(&mut rng, n, -5.0, 5.0);
        let p = AveProblem::new(a, b).unwrap();
        let xs = ave::solve_exact(&p).unwrap().x_star;
        let x = ave::picard_iterate(&p, &vec![0.0; n], 200).unwrap();
        assert!(vec_ops::norm_inf(&vec_ops::sub(&x, &xs)) <= 1e-8, "{p:?}");
        runs += 1;
    }
}
