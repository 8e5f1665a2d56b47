use glnchar::hcseries::{groth_relations_check, sigma_family, SimpleSupport};
use glnchar::GroupContext;

fn main() -> glnchar::Result<()> {
    let ctx = GroupContext::get(4, 2)?;
    for (m, e) in [(1, 0), (2, 1)] {
        let support = SimpleSupport::new(ctx.clone(), m, e)?;
        let fam = sigma_family(&support)?;
        println!("support m = {m}, θ = χ_{e}:");
        print!("{}", fam.decomposition_csv());
        for p in fam.partitions() {
            let s = fam.sigma(p)?;
            let plus = fam.sigma_plus(p)?;
            println!("  σ{p}: dim {}, σ⁺{p}: dim {}", s.degree(), plus.degree());
        }
        println!("  relations hold mod 3: {}", groth_relations_check(&support, 3)?);
    }
    Ok(())
}
