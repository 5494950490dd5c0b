//! Property tests for the exact-arithmetic layer.

use num_bigint::BigInt;
use proptest::prelude::*;

use vasquez::exact::{
    hnf, int_kernel, rat, snf, Cyclotomic, ExactField, ExactScalar, FormalI, IMat, IntLattice,
    QuadExt, Rational,
};

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = IMat> {
    proptest::collection::vec(-5i64..=5, rows * cols).prop_map(move |entries| {
        IMat::from_fn(rows, cols, |r, c| BigInt::from(entries[r * cols + c]))
    })
}

fn small_lattice(ambient: usize) -> impl Strategy<Value = IntLattice> {
    (1..=ambient, proptest::collection::vec(-4i64..=4, ambient * ambient)).prop_map(
        move |(cols, entries)| {
            let m = IMat::from_fn(ambient, cols, |r, c| BigInt::from(entries[r * ambient + c]));
            IntLattice::from_columns(ambient, &m)
        },
    )
}

fn signal_start() -> i64 {
    -8
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn quad() -> impl Strategy<Value = QuadExt> {
    (rational(), rational(), prop_oneof![Just(2u64), Just(3), Just(5)])
        .prop_map(|(a, b, d)| QuadExt::new(a, b, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_is_exact_and_unimodular(a in small_matrix(4, 4)) {
        let n = hnf(&a);
        prop_assert_eq!(a.mul(&n.u), n.h.clone());
        // |det u| = 1: u must have an integral inverse
        let uinv = vasquez::exact::inverse(&n.u.to_rational()).unwrap();
        prop_assert!(uinv.to_integer().is_some());
    }

    #[test]
    fn hnf_is_canonical_under_rebasing(a in small_matrix(4, 3), mixer in small_matrix(3, 3)) {
        // mix the generators by an arbitrary integer matrix; the spanned
        // lattice only shrinks or stays, and if the mixer is unimodular
        // the canonical form is identical
        let lat = IntLattice::from_columns(4, &a);
        let mixed = IntLattice::from_columns(4, &a.mul(&mixer));
        prop_assert!(lat.contains(&mixed));
        let uni = hnf(&mixer).u; // unimodular by construction
        let rebased = IntLattice::from_columns(4, &a.mul(&uni));
        prop_assert_eq!(lat, rebased);
    }

    #[test]
    fn snf_chain_divides(a in small_matrix(3, 4)) {
        let n = snf(&a);
        prop_assert_eq!(n.u.mul(&a).mul(&n.v), n.s.clone());
        for w in n.factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero(), "chain {:?}", n.factors);
        }
    }

    #[test]
    fn int_kernel_annihilates(a in small_matrix(3, 5)) {
        let k = int_kernel(&a);
        prop_assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn saturate_is_idempotent_and_pure(l in small_lattice(5)) {
        let s = l.saturate();
        prop_assert_eq!(s.saturate(), s.clone());
        prop_assert!(s.is_pure());
        prop_assert!(s.contains(&l));
    }

    #[test]
    fn intersect_commutes_and_associates(
        a in small_lattice(5),
        b in small_lattice(5),
        c in small_lattice(5),
    ) {
        prop_assert_eq!(a.intersect(&b), b.intersect(&a));
        prop_assert_eq!(
            a.intersect(&b).intersect(&c),
            a.intersect(&b.intersect(&c))
        );
        prop_assert!(a.contains(&a.intersect(&b)));
    }

    #[test]
    fn member_respects_combinations(l in small_lattice(4), x in -3i64..=3, y in -3i64..=3) {
        if l.rank() >= 2 {
            let b = l.basis();
            let v: Vec<BigInt> = (0..4)
                .map(|r| &b[(r, 0)] * BigInt::from(x) + &b[(r, 1)] * BigInt::from(y))
                .collect();
            prop_assert!(l.member(&v));
        }
    }

    #[test]
    fn member_matches_brute_force(l in small_lattice(3), v in proptest::collection::vec(-4i64..=4, 3)) {
        // oracle: search small integer combinations of the basis
        let target: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        let b = l.basis();
        let r = l.rank();
        let mut found = false;
        let mut coeffs = vec![signal_start(); r];
        'outer: loop {
            let candidate: Vec<BigInt> = (0..3)
                .map(|row| {
                    (0..r)
                        .map(|c| &b[(row, c)] * BigInt::from(coeffs[c]))
                        .sum::<BigInt>()
                })
                .collect();
            if candidate == target {
                found = true;
                break;
            }
            // odometer over [-8, 8]^r
            for slot in coeffs.iter_mut() {
                if *slot < 8 {
                    *slot += 1;
                    continue 'outer;
                }
                *slot = -8;
            }
            break;
        }
        prop_assert_eq!(l.member(&target), found);
    }

    #[test]
    fn quad_field_axioms(x in quad(), y in quad(), z in quad()) {
        // mixing fields is not defined; align discriminants by zeroing
        // the surd part of mismatched operands
        let d = x.discriminant().or(y.discriminant()).or(z.discriminant());
        let align = |v: &QuadExt| match (v.discriminant(), d) {
            (Some(vd), Some(dd)) if vd != dd => QuadExt::from_rational(v.rational_part().clone()),
            _ => v.clone(),
        };
        let (x, y, z) = (align(&x), align(&y), align(&z));
        prop_assert_eq!(x.mul(&y.mul(&z)), x.mul(&y).mul(&z));
        prop_assert_eq!(x.add(&y), y.add(&x));
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv()).is_one());
        }
        prop_assert_eq!(x.conjugate().conjugate(), x.clone());
        // conjugation is a ring map
        prop_assert_eq!(x.mul(&y).conjugate(), x.conjugate().mul(&y.conjugate()));
    }

    #[test]
    fn formal_i_axioms(ar in rational(), ai in rational(), br in rational(), bi in rational()) {
        type C = FormalI<Rational>;
        let x = C::new(ar, ai);
        let y = C::new(br, bi);
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv()).is_one());
        }
        // conjugation fixes exactly the real part
        let fixed = x.add(&x.conjugate());
        prop_assert!(fixed.is_real());
        prop_assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn cyclotomic_galois_is_exact(k in 1u64..=11, c0 in rational(), c1 in rational()) {
        let e = 12u64;
        if num_integer::Integer::gcd(&k, &e) == 1 {
            let x = Cyclotomic::from_coeffs(e, vec![c0, c1]);
            let y = Cyclotomic::root_of_unity(e, 5);
            // σ_k is a ring homomorphism
            prop_assert_eq!(x.mul(&y).galois(k), x.galois(k).mul(&y.galois(k)));
            prop_assert_eq!(x.add(&y).galois(k), x.galois(k).add(&y.galois(k)));
        }
    }
}
