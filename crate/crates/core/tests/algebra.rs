use glnchar::cyclotomics::{field_op, Cyclotomic, FieldOp};
use glnchar::ffield::{char_orbit, character_evaluation, norm_inflate_char, FieldTower, MultChar};
use glnchar::partitions::{
    green_polynomial, kostka_matrix, leq, partitions, sn_character, Partition,
};
use num_bigint::BigInt;

fn z(n: u64, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(n, k)
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn roots_of_unity() {
    assert_eq!(z(1, 0), Cyclotomic::one());
    let s = field_op(&z(3, 1), &z(3, 2), FieldOp::Add).unwrap();
    assert_eq!(s, Cyclotomic::from_int(-1));
    let z6 = z(6, 1);
    assert_eq!(z6, &Cyclotomic::one() + &z(3, 1));
    assert_eq!(z6.conductor(), 3);
}

#[test]
fn field_operations() {
    let one = Cyclotomic::one();
    let i = z(4, 1);
    let p = field_op(&(&one + &i), &(&one - &i), FieldOp::Mul).unwrap();
    assert_eq!(p, Cyclotomic::from_int(2));
    let s = [1, 3, 5, 7].iter().fold(Cyclotomic::zero(), |a, &k| &a + &z(8, k));
    assert!(s.is_zero());
    assert_eq!(field_op(&z(3, 1), &z(3, 1), FieldOp::Div).unwrap(), one);
    assert!(field_op(&one, &Cyclotomic::zero(), FieldOp::Div).is_err());
    assert_eq!(
        field_op(&i, &Cyclotomic::zero(), FieldOp::Neg).unwrap(),
        z(4, 3)
    );
}

#[test]
fn galois_action() {
    assert_eq!(z(3, 1).galois(2).unwrap(), z(3, 2));
    assert_eq!(z(8, 1).galois(-1).unwrap(), z(8, 7));
    let five = Cyclotomic::from_int(5);
    assert_eq!(five.galois(2).unwrap(), five);
    assert!(z(8, 1).galois(2).is_err());
}

#[test]
fn small_towers() {
    let f2 = FieldTower::build(2, 2).unwrap();
    let x = f2.generator(2).unwrap();
    assert_eq!(f2.defining_polynomial(2).unwrap(), &[1, 1, 1]);
    assert_eq!(f2.pack(&f2.pow(&x, 3).unwrap()), f2.pack(&f2.one(2).unwrap()));
    assert_ne!(f2.pack(&x), f2.pack(&f2.one(2).unwrap()));

    let f3 = FieldTower::build(3, 2).unwrap();
    let g = f3.generator(2).unwrap();
    assert_eq!(f3.defining_polynomial(2).unwrap(), &[2, 2, 1]);
    let two = f3.from_int(2, 2).unwrap();
    assert_eq!(f3.pack(&f3.pow(&g, 4).unwrap()), f3.pack(&two));
    assert_eq!(f3.dlog(&two).unwrap(), 4);

    assert!(FieldTower::build(4, 2).is_err());
}

#[test]
fn tower_operations() {
    let t = FieldTower::build(3, 2).unwrap();
    let g = t.generator(2).unwrap();
    let n = t.norm(&g, 1).unwrap();
    assert_eq!(t.pack(&n), t.pack(&t.from_int(1, 2).unwrap()));
    assert_eq!(
        t.pack(&t.frobenius(&g, 1).unwrap()),
        t.pack(&t.pow(&g, 3).unwrap())
    );

    let t2 = FieldTower::build(2, 2).unwrap();
    let one = t2.one(1).unwrap();
    let e = t2.embed(&one, 2).unwrap();
    assert_eq!(t2.pack(&e), t2.pack(&t2.one(2).unwrap()));
    assert_eq!(t2.pack(&t2.restrict(&e, 1).unwrap()), t2.pack(&one));
}

#[test]
fn norm_is_transitive() {
    for (p, chain) in [
        (2u32, [1u32, 2, 4]),
        (2, [1, 3, 6]),
        (2, [2, 4, 8]),
        (2, [1, 2, 12]),
        (3, [1, 2, 4]),
        (3, [1, 2, 6]),
        (3, [1, 3, 6]),
        (5, [1, 2, 4]),
        (7, [1, 2, 4]),
    ] {
        let [a, b, c] = chain;
        let t = FieldTower::build(p, c).unwrap();
        let size = t.order(c).unwrap() as u32;
        for i in 0..size {
            let x = t.unpack(c, i);
            let direct = t.norm(&x, a).unwrap();
            let stepwise = t.norm(&t.norm(&x, b).unwrap(), a).unwrap();
            assert_eq!(t.pack(&direct), t.pack(&stepwise), "p={p} chain={chain:?} x={i}");
        }
    }
}

#[test]
fn character_values() {
    let t = FieldTower::build(3, 2).unwrap();
    let g = t.generator(2).unwrap();
    let chi1 = MultChar::new(3, 2, 1).unwrap();
    assert_eq!(character_evaluation(&t, &chi1, &g).unwrap(), z(8, 1));
    let chi4 = MultChar::new(3, 2, 4).unwrap();
    let g2 = t.mul(&g, &g).unwrap();
    assert_eq!(character_evaluation(&t, &chi4, &g2).unwrap(), Cyclotomic::one());
    assert!(character_evaluation(&t, &chi1, &t.zero(2).unwrap()).is_err());
}

#[test]
fn character_orbits() {
    let o = char_orbit(&MultChar::new(2, 2, 1).unwrap(), 1).unwrap();
    assert_eq!(o.orbit.into_iter().collect::<Vec<_>>(), vec![1, 2]);
    assert_eq!(o.size, 2);
    assert!(o.regular);

    let o = char_orbit(&MultChar::trivial(3, 2), 1).unwrap();
    assert_eq!(o.orbit.into_iter().collect::<Vec<_>>(), vec![0]);
    assert!(!o.regular);

    let o = char_orbit(&MultChar::new(3, 2, 4).unwrap(), 1).unwrap();
    assert_eq!(o.orbit.into_iter().collect::<Vec<_>>(), vec![4]);
    assert!(!o.regular);
}

#[test]
fn norm_inflation() {
    let th = MultChar::new(3, 1, 1).unwrap();
    assert_eq!(norm_inflate_char(&th, 2).unwrap().e, 4);
    assert_eq!(norm_inflate_char(&MultChar::trivial(5, 1), 2).unwrap().e, 0);
    for e in 0..3 {
        let th = MultChar::new(2, 1, e).unwrap();
        assert_eq!(norm_inflate_char(&th, 3).unwrap().e, 0);
    }
}

#[test]
fn partition_order() {
    let ps = partitions(3);
    assert_eq!(ps, vec![part("3"), part("2,1"), part("1,1,1")]);
    assert!(leq(&ps[0], &ps[1]) && leq(&ps[1], &ps[2]) && leq(&ps[0], &ps[2]));
    assert!(!leq(&ps[2], &ps[0]));
    assert!(leq(&part("3,1"), &part("2,2")));
    let (a, b) = (part("3,3"), part("4,1,1"));
    assert!(!leq(&a, &b) && !leq(&b, &a));
}

#[test]
fn kostka_numbers() {
    let k2 = kostka_matrix(2).unwrap();
    assert_eq!(k2.k, vec![vec![1, 1], vec![0, 1]]);
    assert_eq!(k2.k_inv[0], vec![1, -1]);
    let k3 = kostka_matrix(3).unwrap();
    assert_eq!(k3.get(&part("2,1"), &part("1,1,1")), 2);
}

#[test]
fn symmetric_group_characters() {
    assert_eq!(sn_character(&part("2,1"), &part("3")).unwrap(), -1);
    for k in 1..=7u32 {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let col = Partition::single_column(k);
        assert_eq!(sn_character(&col, &Partition::single_row(k)).unwrap(), sign);
        for rho in partitions(k) {
            assert_eq!(sn_character(&Partition::single_row(k), &rho).unwrap(), 1);
        }
    }
}

#[test]
fn green_polynomials() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let qi = BigInt::from(q);
        assert_eq!(
            green_polynomial(&part("1,1"), &part("2"), q).unwrap(),
            BigInt::from(1) - &qi
        );
        assert_eq!(green_polynomial(&part("2"), &part("2"), q).unwrap(), BigInt::from(1));
        for m in 1..=5u32 {
            let mut expected = BigInt::from(if m % 2 == 1 { 1 } else { -1 });
            for i in 1..m {
                expected *= qi.pow(i) - 1;
            }
            let got = green_polynomial(&Partition::single_column(m), &Partition::single_row(m), q);
            assert_eq!(got.unwrap(), expected, "m={m} q={q}");
        }
    }
}
