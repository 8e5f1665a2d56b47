//! Congruent characters mod 3 of F_25^× give congruent transfers.
use glnchar::jlmod::{jl_ell_check, jl_ell_sweep};

fn main() -> glnchar::Result<()> {
    for (e1, e2) in [(1, 17), (1, 2), (0, 8)] {
        let v = jl_ell_check(2, 5, 3, e1, e2)?;
        println!(
            "e1 = {e1:>2}, e2 = {e2:>2}: inputs congruent {}, outputs congruent {}",
            v.congruent_inputs, v.congruent_outputs
        );
    }
    let s = jl_ell_sweep(2, 5, 3)?;
    println!(
        "{} pairs, {} congruent, implication holds: {}, separating pair {:?}",
        s.pairs, s.congruent_pairs, s.implication_holds, s.separating_pair
    );
    Ok(())
}
