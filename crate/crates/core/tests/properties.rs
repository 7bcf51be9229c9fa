//! Randomized checks of the oracle families and of the building blocks.

mod common;

use polartree::analysis::{analyze, analyze_pair, Options};
use polartree::arith::rat::{rat, Rat};
use polartree::curve::{parse_poly, print_poly};
use polartree::oracle::{verify_curve, verify_pair};
use polartree::polygon::polygon_of_points;
use polartree::Error;
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 256, max_global_rejects: 4096, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn germ_curves_verify(f in common::germ_curve()) {
        match analyze(&f, &Options::default()) {
            Err(Error::NonReduced) => prop_assume!(false),
            Err(e) => prop_assert!(false, "{f}: {e}"),
            Ok(mut an) => {
                let r = verify_curve(&mut an, false).unwrap();
                prop_assert!(r.report.passed(), "{f}\n{}", r.report.to_text());
            }
        }
    }

    #[test]
    fn meromorphic_curves_verify(f in common::meromorphic_curve()) {
        match analyze(&f, &Options::default()) {
            Err(Error::NonReduced) => prop_assume!(false),
            Err(e) => prop_assert!(false, "{f}: {e}"),
            Ok(mut an) => {
                let r = verify_curve(&mut an, false).unwrap();
                prop_assert!(r.report.passed(), "{f}\n{}", r.report.to_text());
            }
        }
    }

    #[test]
    fn pairs_verify((f, g) in common::pair()) {
        match analyze_pair(&f, &g, &Options::default()) {
            Err(Error::NonReduced) | Err(Error::ZeroJacobian) => prop_assume!(false),
            Err(e) => prop_assert!(false, "{f} | {g}: {e}"),
            Ok(mut pa) => {
                let r = verify_pair(&mut pa, false).unwrap();
                prop_assert!(r.report.passed(), "{f} | {g}\n{}", r.report.to_text());
            }
        }
    }

    #[test]
    fn s_function_inverts(f in common::germ_factor(), num in -40i64..80, den in 1i64..9) {
        let an = analyze(&f.0, &Options::default()).unwrap();
        let b = &an.branches.branches[0];
        let m = rat(num, den);
        prop_assert_eq!(b.s_inverse(&b.s_function(&m)), m);
    }

    #[test]
    fn printed_polynomials_parse_back(f in common::germ_curve()) {
        let p = parse_poly(&f).unwrap();
        prop_assert_eq!(parse_poly(&print_poly(&p)).unwrap(), p);
    }

    #[test]
    fn polygon_edges_are_convex(pts in prop::collection::vec((-20i64..20, 1i64..4, 0usize..8), 1..12)) {
        let mut pts: Vec<(Rat, usize)> = pts.into_iter().map(|(a, d, j)| (rat(a, d), j)).collect();
        pts.push((rat(0, 1), 8));
        let p = polygon_of_points(&pts).unwrap();
        let orders: Vec<Rat> = p.edges.iter().map(|e| e.order()).collect();
        prop_assert!(orders.windows(2).all(|w| w[0] < w[1]));
        for (a, j) in &pts {
            for e in &p.edges {
                if *j <= e.top.1 && *j >= e.bottom.1 {
                    prop_assert!(a + e.order() * Rat::from_integer((*j as i64).into()) >= e.level());
                }
            }
        }
    }
}
