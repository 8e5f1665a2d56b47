//! Brute-force character table of GL_2(F_3) and a Gelfand-Graev decomposition.
use glnchar::oracle::{enumerate_group_and_classes, gelfand_graev, self_consistency, table_for};
use glnchar::GroupContext;

fn main() -> glnchar::Result<()> {
    let t = table_for(2, 3)?;
    print!("{}", t.to_csv());
    println!("degrees {:?}, Dixon prime {}", t.degrees(), t.prime());

    let ctx = GroupContext::get(2, 3)?;
    let g = enumerate_group_and_classes(&ctx)?;
    println!("Gelfand-Graev multiplicities {:?}", t.multiplicities(&gelfand_graev(&g)?)?);
    let report = self_consistency(&g, &t)?;
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}
