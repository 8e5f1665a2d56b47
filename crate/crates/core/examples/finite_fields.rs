use glnchar::ffield::{char_orbit, character_evaluation, FieldTower, MultChar};

fn main() -> glnchar::Result<()> {
    let t = FieldTower::build(3, 4)?;
    for k in 1..=4 {
        println!("F_{{3^{k}}} = F_3[x]/({:?})", t.defining_polynomial(k)?);
    }
    let g = t.generator(2)?;
    println!("g^4 = {:?}", t.pow(&g, 4)?.coeffs());
    println!("N(g) to F_3 = {:?}", t.norm(&g, 1)?.coeffs());
    println!("Frob(g) has dlog {}", t.dlog(&t.frobenius(&g, 1)?)?);

    let chi = MultChar::new(3, 2, 1)?;
    println!("χ_1(g) = {}", character_evaluation(&t, &chi, &g)?);
    for e in 0..8 {
        let o = char_orbit(&MultChar::new(3, 2, e)?, 1)?;
        println!("e = {e}: orbit {:?}, regular {}", o.orbit, o.regular);
    }
    Ok(())
}
