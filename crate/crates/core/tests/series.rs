use std::sync::Arc;

use glnchar::classfun::ClassFunction;
use glnchar::cyclotomics::Cyclotomic;
use glnchar::dlcox::{sigma_plus_min, steinberg};
use glnchar::ffield::MultChar;
use glnchar::glnq::GroupContext;
use glnchar::hcseries::{
    base_cuspidal, groth_relations_check, pi_p, sigma_family, st_character, st_of_level,
    SimpleSupport,
};
use glnchar::partitions::Partition;

fn ctx(n: u32, q: u64) -> Arc<GroupContext> {
    GroupContext::get(n, q).unwrap()
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn int(k: i64) -> Cyclotomic {
    Cyclotomic::from_int(k)
}

#[test]
fn steinberg_of_support() {
    let c = ctx(2, 3);
    let st = st_character(&SimpleSupport::unipotent(c.clone())).unwrap();
    assert!(st.equals(&steinberg(&c)));
    assert_eq!(st.degree(), int(3));

    let s = SimpleSupport::new(c, 1, 1).unwrap();
    assert!(st_of_level(&s, 1).unwrap().equals(&base_cuspidal(&s).unwrap()));

    let st = st_character(&SimpleSupport::unipotent(ctx(3, 2))).unwrap();
    assert_eq!(st.degree(), int(8));
}

#[test]
fn induced_series() {
    let s = SimpleSupport::unipotent(ctx(3, 2));
    assert_eq!(pi_p(&s, &part("1,1,1")).unwrap().degree(), int(21));
    assert_eq!(pi_p(&s, &part("2,1")).unwrap().degree(), int(14));
    let top = pi_p(&s, &part("3")).unwrap();
    assert!(top.equals(&steinberg(s.ctx())));
}

#[test]
fn unipotent_family_of_gl3_f2() {
    let c = ctx(3, 2);
    let fam = sigma_family(&SimpleSupport::unipotent(c.clone())).unwrap();
    let triv = ClassFunction::constant(c.clone(), Cyclotomic::one());
    assert!(fam.sigma(&part("1,1,1")).unwrap().equals(&triv));
    assert_eq!(fam.sigma(&part("2,1")).unwrap().degree(), int(6));
    assert!(fam.sigma(&part("3")).unwrap().equals(&steinberg(&c)));

    let plus = fam.sigma_plus(&part("3")).unwrap().to_class_function().unwrap();
    let expected = ClassFunction::linear_combination(&[
        (1, fam.sigma(&part("3")).unwrap()),
        (-1, fam.sigma(&part("2,1")).unwrap()),
        (1, fam.sigma(&part("1,1,1")).unwrap()),
    ])
    .unwrap();
    assert!(plus.equals(&expected));
    assert!(plus.equals(&sigma_plus_min(&c, &MultChar::trivial(2, 1)).unwrap()));

    let plus = fam.sigma_plus(&part("2,1")).unwrap();
    let expected = ClassFunction::linear_combination(&[
        (1, fam.sigma(&part("2,1")).unwrap()),
        (-2, fam.sigma(&part("1,1,1")).unwrap()),
    ])
    .unwrap();
    assert!(plus.to_class_function().unwrap().equals(&expected));
    assert_eq!(plus.degree(), 4);
}

#[test]
fn kostka_pattern_in_every_family() {
    for (n, q, m) in [(2, 2, 1), (2, 3, 1), (2, 4, 1), (2, 5, 1), (3, 2, 1), (4, 2, 2), (4, 2, 1)] {
        let c = ctx(n, q);
        let mq = q.pow(m) - 1;
        for e in 0..mq as i64 {
            let Ok(s) = SimpleSupport::new(c.clone(), m, e) else {
                continue;
            };
            let fam = sigma_family(&s).unwrap();
            let ps = fam.partitions().to_vec();
            let dec = fam.decomposition_matrix();
            for (i, p) in ps.iter().enumerate() {
                for (j, pp) in ps.iter().enumerate() {
                    assert_eq!(dec[i][j], fam.kostka.get(p, pp), "GL_{n}({q}) m={m} e={e}");
                }
            }
            for (j, row) in fam.mult.iter().enumerate() {
                let inside: i64 = fam.sigma_rows.iter().map(|&r| row[r]).sum();
                assert_eq!(inside, row.iter().sum::<i64>(), "π_{} leaves the series", ps[j]);
            }
            let pairings = fam.dual_pairings().unwrap();
            for (i, row) in pairings.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    assert_eq!(*v, int(i64::from(i == j)));
                }
            }
        }
    }
}

#[test]
fn grothendieck_relations() {
    let s = SimpleSupport::unipotent(ctx(2, 3));
    let fam = sigma_family(&s).unwrap();
    let sum = fam
        .sigma_plus(&part("2"))
        .unwrap()
        .to_class_function()
        .unwrap()
        .add(&fam.sigma_plus(&part("1,1")).unwrap().to_class_function().unwrap())
        .unwrap();
    assert!(sum.equals(fam.sigma(&part("2")).unwrap()));

    assert!(groth_relations_check(&SimpleSupport::unipotent(ctx(3, 2)), 2).unwrap());
    assert!(groth_relations_check(&s, 2).unwrap());
    assert!(groth_relations_check(&SimpleSupport::new(ctx(2, 3), 1, 1).unwrap(), 2).unwrap());
}

#[test]
fn decomposition_matrix_csv() {
    let fam = sigma_family(&SimpleSupport::new(ctx(2, 3), 1, 1).unwrap()).unwrap();
    assert_eq!(
        fam.decomposition_csv(),
        "sigma,\"pi(2)\",\"pi(1,1)\"\n\"sigma(2)\",1,1\n\"sigma(1,1)\",0,1\n"
    );
}

#[test]
fn invalid_supports() {
    assert!(SimpleSupport::new(ctx(3, 2), 2, 1).is_err());
    assert!(SimpleSupport::new(ctx(2, 3), 2, 4).is_err());
}
