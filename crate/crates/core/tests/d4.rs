//! The D4 preprojective counterexample, computed with matrices.

use brickyard_core::field::Field;
use brickyard_core::mutation::{mutate_left, mutate_right, singly_left_compatible};
use brickyard_core::pair::{is_semibrick_pair, SemibrickPair};
use brickyard_core::quiver::{ext_dim, hom_dim, hom_space, is_brick, Algebra, D4Module};
use brickyard_core::search::{is_completable, is_pairwise_completable};
use brickyard_core::{BrickUniverse, MatrixUniverse};

#[test]
fn named_modules_are_rigid_bricks() {
    for p in [2, 3, 101] {
        let f = Field::new(p).unwrap();
        for m in D4Module::ALL {
            let r = m.build(f);
            assert!(is_brick(&r).unwrap(), "{}", m.name());
            assert_eq!(hom_space(&r, &r).unwrap().len(), 1);
            assert_eq!(ext_dim(&r, &r).unwrap(), 0, "{}", m.name());
        }
    }
}

#[test]
fn mutation_compatible_pair_that_is_not_completable() {
    let uni = MatrixUniverse::new(Algebra::PiD4, Field::default());
    let f = uni.field();
    let [m, n, n1, e] = [D4Module::M, D4Module::N, D4Module::NPrime, D4Module::E].map(|x| x.build(f));
    for (a, b) in [(&n, &n1), (&n, &m), (&n1, &m), (&m, &n1)] {
        assert_eq!(hom_dim(a, b).unwrap(), 0);
    }
    assert_eq!(ext_dim(&n, &m).unwrap(), 0);
    assert_eq!(ext_dim(&n, &n1).unwrap(), 0);

    let x1 = SemibrickPair::new(&uni, vec![n.clone()], vec![n1.clone(), m.clone()]);
    assert!(is_semibrick_pair(&uni, &x1).unwrap());
    assert!(!singly_left_compatible(&uni, &x1, 0).unwrap());

    let x = mutate_right(&uni, &x1, x1.position_in_u(&uni, &m).unwrap()).unwrap();
    let expected = SemibrickPair::new(&uni, vec![m.clone(), n.clone()], vec![e.clone()]);
    assert!(x.same_as(&uni, &expected), "{}", x.describe(&uni));
    let at_m = x.position_in_d(&uni, &m).unwrap();
    assert!(singly_left_compatible(&uni, &x, at_m).unwrap());
    assert!(mutate_left(&uni, &x, at_m).unwrap().same_as(&uni, &x1));
    assert!(!is_completable(&uni, &x).unwrap().completable);
    assert!(!is_pairwise_completable(&uni, &x1).unwrap());
    assert_eq!(uni.rank(), 4);
}
