//! Conjugacy classes of GL_3(F_2), with centralizers and the class of a few matrices.
use glnchar::GroupContext;

fn main() -> glnchar::Result<()> {
    let ctx = GroupContext::get(3, 2)?;
    println!("|GL_3(F_2)| = {}", ctx.order());
    for (i, c) in ctx.classes().iter().enumerate() {
        let kind = if c.is_semisimple() { "semisimple" } else { "" };
        println!("{i:>2} {c:<28} |C| = {:<4} {kind}", ctx.centralizer(i));
    }
    let m = [0, 0, 1, 1, 0, 1, 0, 1, 0];
    println!("class of {m:?}: {}", ctx.class_of_matrix(&m)?);
    let r = ctx.regularity_predicates(&ctx.classes()[1], 3)?;
    println!("{} is 3-regular: {}", ctx.classes()[1], r.ell_regular);
    Ok(())
}
