use majorana::golden::{parse, HEADER};
use majorana::kinematics::FourMomentum;
use majorana::matrix::c;
use majorana::spinors::{bar_product, lambda_spinor, Index, Kind};

const GOLDEN: &str = include_str!("data/golden_spinors.txt");

#[test]
fn golden_file_is_versioned() {
    assert_eq!(GOLDEN.lines().next(), Some(HEADER));
}

#[test]
fn library_reproduces_golden_spinors() {
    let records = parse(GOLDEN).unwrap();
    assert_eq!(records.len(), 180);
    for r in &records {
        let got = r.evaluate().unwrap();
        let err = (&got - &r.components).norm() / r.components.norm();
        assert!(
            err <= 1e-12,
            "{:?} {} {} {} at {:?}: relative error {err:e}",
            r.basis,
            r.family,
            r.kind,
            r.index,
            r.momentum
        );
    }
}

/// The cross norm of lambda^S up and down is `-i m` at every momentum.
#[test]
fn lambda_cross_norm_phase() {
    for [px, py, pz, m] in [[0.0, 0.0, 0.0, 1.0], [0.6, -0.8, 1.2, 1.5], [-3.0, 4.0, -1.0, 2.0], [7.5, -2.5, 3.0, 9.0]] {
        let p = FourMomentum::new(px, py, pz, m).unwrap();
        let up = lambda_spinor(&p, Kind::S, Index::Up).unwrap();
        let down = lambda_spinor(&p, Kind::S, Index::Down).unwrap();
        assert!((bar_product(&up, &down) / m - c(0.0, -1.0)).norm() < 1e-12);
    }
}
