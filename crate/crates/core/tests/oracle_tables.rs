use glnchar::classfun::ClassFunction;
use glnchar::cyclotomics::Cyclotomic;
use glnchar::dlcox::steinberg;
use glnchar::glnq::GroupContext;
use glnchar::oracle::{
    character_table, enumerate_group_and_classes, gelfand_graev, parabolic_induction,
    self_consistency, table_for,
};
use glnchar::verify::SUPPORTED_GROUPS;
use num_bigint::BigInt;

#[test]
fn group_orders() {
    let g = enumerate_group_and_classes(&GroupContext::get(2, 3).unwrap()).unwrap();
    assert_eq!(g.len(), 48);
    assert_eq!(table_for(2, 3).unwrap().len(), 8);
    let g = enumerate_group_and_classes(&GroupContext::get(3, 2).unwrap()).unwrap();
    assert_eq!(g.len(), 168);
    for &(n, q) in SUPPORTED_GROUPS {
        let ctx = GroupContext::get(n, q).unwrap();
        let g = enumerate_group_and_classes(&ctx).unwrap();
        assert!(g.fusion_is_bijective(), "GL_{n}({q})");
        assert_eq!(&BigInt::from(g.len()), ctx.order());
    }
}

#[test]
fn degrees() {
    let mut d = table_for(2, 2).unwrap().degrees().to_vec();
    d.sort();
    assert_eq!(d, vec![1, 1, 2]);
    let mut d = table_for(3, 2).unwrap().degrees().to_vec();
    d.sort();
    assert_eq!(d, vec![1, 3, 3, 6, 7, 8]);
}

#[test]
fn orthogonality() {
    for &(n, q) in SUPPORTED_GROUPS {
        let t = table_for(n, q).unwrap();
        let ctx = t.ctx().clone();
        assert_eq!(t.len(), ctx.num_classes());
        for c in 0..ctx.num_classes() {
            let s = t
                .rows()
                .iter()
                .fold(Cyclotomic::zero(), |acc, r| &acc + &(&r.value(c) * &r.value(c).conj()));
            assert_eq!(s, Cyclotomic::from_bigint(ctx.centralizer(c).clone()), "GL_{n}({q}) class {c}");
        }
        let g = enumerate_group_and_classes(&ctx).unwrap();
        assert!(self_consistency(&g, &t).unwrap().pass());
    }
}

#[test]
fn table_is_deterministic() {
    let ctx = GroupContext::get(2, 4).unwrap();
    let g = glnchar::oracle::DenseGroup::build(ctx, 25_000).unwrap();
    let fresh = character_table(&g).unwrap();
    assert_eq!(fresh.to_csv(), table_for(2, 4).unwrap().to_csv());
}

#[test]
fn parabolic_induction_examples() {
    let ctx2 = GroupContext::get(2, 2).unwrap();
    let ctx1 = GroupContext::get(1, 2).unwrap();
    let ctx = GroupContext::get(3, 2).unwrap();
    let g = enumerate_group_and_classes(&ctx).unwrap();
    let one = ClassFunction::constant(ctx1, Cyclotomic::one());
    let ind = parabolic_induction(&g, &[2, 1], &[steinberg(&ctx2), one]).unwrap();
    assert_eq!(ind.degree(), Cyclotomic::from_int(14));
    let t = table_for(3, 2).unwrap();
    let mult = t.multiplicities(&ind).unwrap();
    let mut parts: Vec<(i64, u64)> = mult
        .iter()
        .zip(t.degrees())
        .filter(|(m, _)| **m != 0)
        .map(|(m, &d)| (*m, d))
        .collect();
    parts.sort();
    assert_eq!(parts, vec![(1, 6), (1, 8)]);

    let ctx = GroupContext::get(2, 3).unwrap();
    let g = enumerate_group_and_classes(&ctx).unwrap();
    let t1 = table_for(1, 3).unwrap();
    for a in t1.rows() {
        for b in t1.rows() {
            let ind = parabolic_induction(&g, &[1, 1], &[a.clone(), b.clone()]).unwrap();
            assert_eq!(ind.degree(), Cyclotomic::from_int(4));
        }
    }
}

#[test]
fn gelfand_graev_examples() {
    let ctx = GroupContext::get(2, 3).unwrap();
    let g = enumerate_group_and_classes(&ctx).unwrap();
    let gg = gelfand_graev(&g).unwrap();
    assert_eq!(gg.degree(), Cyclotomic::from_int(16));
    let t = table_for(2, 3).unwrap();
    let mult = t.multiplicities(&gg).unwrap();
    assert!(mult.iter().all(|&m| m == 0 || m == 1));
    let mut dims: Vec<u64> = mult
        .iter()
        .zip(t.degrees())
        .filter(|(m, _)| **m == 1)
        .map(|(_, &d)| d)
        .collect();
    dims.sort();
    assert_eq!(dims, vec![2, 2, 2, 3, 3, 4]);
    let triv = ClassFunction::constant(ctx.clone(), Cyclotomic::one());
    assert!(gg.inner_product(&triv).unwrap().is_zero());
    assert_eq!(gg.inner_product(&steinberg(&ctx)).unwrap(), Cyclotomic::one());
}
