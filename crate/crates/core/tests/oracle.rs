//! Arc combinatorics against the linear-algebra oracle.

use brickyard_core::brick::{enumerate_bricks, ext_arc_witnesses, hom_arc_basis, sigma};
use brickyard_core::field::Field;
use brickyard_core::quiver::{
    ext_dim, ext_space, extension_from_cocycle, hom_dim, is_iso, rep_of_string,
};

#[test]
fn hom_dimension_matches_arc_count() {
    let f = Field::default();
    for n in 1..=4 {
        let bricks = enumerate_bricks(n);
        let reps: Vec<_> = bricks.iter().map(|b| rep_of_string(b, f)).collect();
        for (s, rs) in bricks.iter().zip(&reps) {
            for (t, rt) in bricks.iter().zip(&reps) {
                assert_eq!(
                    hom_arc_basis(s, t).len(),
                    hom_dim(rs, rt).unwrap(),
                    "Hom({s}, {t}) for n = {n}"
                );
            }
        }
    }
}

#[test]
fn ext_dimension_matches_arc_witnesses() {
    let f = Field::default();
    for n in 1..=4 {
        let bricks = enumerate_bricks(n);
        let reps: Vec<_> = bricks.iter().map(|b| rep_of_string(b, f)).collect();
        for (s, rs) in bricks.iter().zip(&reps) {
            for (t, rt) in bricks.iter().zip(&reps) {
                assert_eq!(
                    ext_arc_witnesses(s, t).len(),
                    ext_dim(rs, rt).unwrap(),
                    "Ext({s}, {t}) for n = {n}"
                );
            }
        }
    }
}

#[test]
fn arc_middle_terms_match_oracle_when_ext_is_one_dimensional() {
    let f = Field::default();
    let n = 4;
    let bricks = enumerate_bricks(n);
    for s in &bricks {
        for t in &bricks {
            let ws = ext_arc_witnesses(s, t);
            if ws.len() != 1 {
                continue;
            }
            let (rs, rt) = (rep_of_string(s, f), rep_of_string(t, f));
            let (_, cs) = ext_space(&rs, &rt).unwrap();
            let mid = extension_from_cocycle(&cs[0], &rs, &rt).unwrap();
            let w = &ws[0];
            let mut expected = rep_of_string(&sigma(&w.first, n).unwrap(), f);
            if let Some(second) = &w.second {
                expected = expected.direct_sum(&rep_of_string(&sigma(second, n).unwrap(), f));
            }
            assert!(is_iso(&mid, &expected).unwrap(), "middle term of Ext({s}, {t})");
        }
    }
}
