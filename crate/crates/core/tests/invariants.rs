use glnchar::classfun::ClassFunction;
use glnchar::cyclotomics::{rat, Cyclotomic};
use glnchar::ffield::{FieldTower, MultChar};
use glnchar::glnq::GroupContext;
use glnchar::jlmod::{jl_p, TorusClassFunction};
use glnchar::nilstrata::{jordan_partition, NilpotentOp};
use glnchar::oracle::table_for;
use glnchar::partitions::{dominates, kostka_matrix, partitions, sn_character, Partition};
use num_bigint::BigInt;
use proptest::prelude::*;

const CONDUCTORS: [u64; 9] = [1, 3, 4, 5, 7, 8, 9, 12, 15];

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    (
        prop::sample::select(CONDUCTORS.to_vec()),
        prop::collection::vec((0i64..60, -4i64..5, 1i64..4), 0..5),
    )
        .prop_map(|(n, terms)| {
            terms.into_iter().fold(Cyclotomic::zero(), |acc, (k, a, b)| {
                &acc + &Cyclotomic::root_of_unity(n, k).scale(&rat(a, b))
            })
        })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn partition(max: u32) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|r| prop::sample::select(partitions(r)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_ring_axioms(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
    }

    #[test]
    fn cyclotomic_inverse(a in cyclotomic()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * &a.inv().unwrap(), Cyclotomic::one());
    }

    #[test]
    fn galois_is_a_field_automorphism(a in cyclotomic(), b in cyclotomic(), k in 1i64..120) {
        prop_assume!(gcd(k as u64, 2520) == 1);
        let g = |x: &Cyclotomic| x.galois(k).unwrap();
        prop_assert_eq!(g(&(&a * &b)), &g(&a) * &g(&b));
        prop_assert_eq!(g(&(&a + &b)), &g(&a) + &g(&b));
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(g(&a).norm(), a.norm());
    }

    #[test]
    fn complex_embedding_is_a_homomorphism(a in cyclotomic(), b in cyclotomic()) {
        let (x1, y1) = a.to_complex();
        let (x2, y2) = b.to_complex();
        let (x, y) = (&a * &b).to_complex();
        prop_assert!((x - (x1 * x2 - y1 * y2)).abs() < 1e-6);
        prop_assert!((y - (x1 * y2 + y1 * x2)).abs() < 1e-6);
    }

    #[test]
    fn field_arithmetic(p in prop::sample::select(vec![2u32, 3, 5]), k in 1u32..4, i in 0u32..1000, j in 0u32..1000) {
        let t = FieldTower::shared(p, k).unwrap();
        let size = t.order(k).unwrap() as u32;
        let x = t.unpack(k, i % size);
        let y = t.unpack(k, j % size);
        let xy = t.mul(&x, &y).unwrap();
        prop_assert_eq!(t.pack(&t.sub(&t.add(&x, &y).unwrap(), &y).unwrap()), t.pack(&x));
        prop_assert_eq!(t.pack(&t.frobenius(&x, k).unwrap()), t.pack(&x));
        prop_assert_eq!(
            t.pack(&t.frobenius(&xy, 1).unwrap()),
            t.pack(&t.mul(&t.frobenius(&x, 1).unwrap(), &t.frobenius(&y, 1).unwrap()).unwrap())
        );
        if !x.is_zero() && !y.is_zero() {
            let m = size as u64 - 1;
            let d = (t.dlog(&x).unwrap() + t.dlog(&y).unwrap()) % m;
            prop_assert_eq!(t.dlog(&xy).unwrap(), d);
            prop_assert_eq!(t.pack(&t.from_dlog(k, t.dlog(&x).unwrap()).unwrap()), t.pack(&x));
            prop_assert_eq!(t.pack(&t.mul(&x, &t.inv(&x).unwrap()).unwrap()), t.pack(&t.one(k).unwrap()));
        }
    }

    #[test]
    fn dominance_is_a_partial_order(a in partition(7), b in partition(7), c in partition(7)) {
        prop_assert!(dominates(&a, &a));
        if a.degree() == b.degree() {
            if dominates(&a, &b) && dominates(&b, &a) {
                prop_assert_eq!(&a, &b);
            }
            prop_assert_eq!(dominates(&a, &b), dominates(&b.conjugate(), &a.conjugate()));
        }
        if a.degree() == b.degree() && b.degree() == c.degree() && dominates(&a, &b) && dominates(&b, &c) {
            prop_assert!(dominates(&a, &c));
        }
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn kostka_triangular_and_invertible(r in 1u32..7) {
        let km = kostka_matrix(r).unwrap();
        let n = km.partitions.len();
        for i in 0..n {
            for j in 0..n {
                let (l, m) = (&km.partitions[i], &km.partitions[j]);
                if km.k[i][j] != 0 {
                    prop_assert!(dominates(l, m));
                }
                let id: i64 = (0..n).map(|s| km.k[i][s] * km.k_inv[s][j]).sum();
                prop_assert_eq!(id, i64::from(i == j));
            }
            prop_assert_eq!(km.k[i][i], 1);
        }
    }

    #[test]
    fn symmetric_group_column_orthogonality(rho in partition(6), sigma in partition(6)) {
        prop_assume!(rho.degree() == sigma.degree());
        let s: i64 = partitions(rho.degree())
            .iter()
            .map(|l| sn_character(l, &rho).unwrap() * sn_character(l, &sigma).unwrap())
            .sum();
        let expected = if rho == sigma { rho.z() } else { BigInt::from(0) };
        prop_assert_eq!(BigInt::from(s), expected);
    }

    #[test]
    fn nilpotent_invariants(
        lambda in partition(6),
        perm in prop::collection::vec(any::<prop::sample::Index>(), 6),
        shear in prop::collection::vec(-3i64..4, 36),
        modular in any::<bool>(),
    ) {
        let p = if modular { Some(5) } else { None };
        let op = NilpotentOp::from_partition(&lambda, p).unwrap();
        prop_assert_eq!(jordan_partition(&op), lambda.clone());
        let dims = op.kernel_dims();
        let n = lambda.degree() as usize;
        prop_assert_eq!(dims[n - 1] as usize, n);
        let mut prev = (0u32, u32::MAX);
        for &d in &dims {
            prop_assert!(d >= prev.0);
            prop_assert!(d - prev.0 <= prev.1);
            prev = (d, d - prev.0);
        }
        // unit lower triangular times a permutation matrix
        let mut order: Vec<usize> = (0..n).collect();
        for (i, ix) in perm.iter().take(n).enumerate() {
            let j = i + ix.index(n - i);
            order.swap(i, j);
        }
        let g: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let l = |a: usize, b: usize| match a.cmp(&b) {
                            std::cmp::Ordering::Equal => 1,
                            std::cmp::Ordering::Greater => shear[a * 6 + b],
                            std::cmp::Ordering::Less => 0,
                        };
                        l(i, order[j])
                    })
                    .collect()
            })
            .collect();
        let conj = op.conjugate_by(&g).unwrap();
        prop_assert_eq!(jordan_partition(&conj), lambda);
    }
}

fn torus_functions(n: u32, q: u64) -> impl Strategy<Value = TorusClassFunction> {
    let m = q.pow(n) as i64 - 1;
    prop::collection::vec((0..m, -3i64..4), 1..4).prop_map(move |terms| {
        terms
            .into_iter()
            .map(|(e, c)| {
                TorusClassFunction::from_char(&MultChar::new(q, n, e).unwrap())
                    .scale(&Cyclotomic::from_int(c))
            })
            .reduce(|a, b| a.add(&b).unwrap())
            .unwrap()
    })
}

fn group() -> impl Strategy<Value = (u32, u64)> {
    prop::sample::select(vec![(2u32, 3u64), (2, 4), (3, 2), (2, 5)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn jl_p_linear_and_frobenius_invariant(
        (f, g, k, ctx) in group().prop_flat_map(|(n, q)| {
            (torus_functions(n, q), torus_functions(n, q), 0..n, Just(GroupContext::get(n, q).unwrap()))
        }),
        c in -3i64..4,
    ) {
        let lhs = jl_p(&ctx, &f.add(&g.scale(&Cyclotomic::from_int(c))).unwrap()).unwrap();
        let rhs = jl_p(&ctx, &f).unwrap().add(&jl_p(&ctx, &g).unwrap().scale_int(c)).unwrap();
        prop_assert!(lhs.equals(&rhs));
        prop_assert!(jl_p(&ctx, &f.frobenius_twist(k)).unwrap().equals(&jl_p(&ctx, &f).unwrap()));
    }

    #[test]
    fn inner_product_hermitian_and_orthonormal(
        (n, q) in group(),
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
        a in -3i64..4,
    ) {
        let t = table_for(n, q).unwrap();
        let (x, y) = (t.row(i.index(t.len())), t.row(j.index(t.len())));
        let xy = x.inner_product(y).unwrap();
        prop_assert_eq!(xy.clone(), y.inner_product(x).unwrap().conj());
        prop_assert_eq!(xy.clone(), Cyclotomic::from_int(i64::from(i.index(t.len()) == j.index(t.len()))));
        let combo = ClassFunction::linear_combination(&[(a, x), (1, y)]).unwrap();
        prop_assert_eq!(
            combo.inner_product(y).unwrap(),
            &x.inner_product(y).unwrap().scale_int(a) + &y.inner_product(y).unwrap()
        );
    }
}
