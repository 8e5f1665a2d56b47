use glnchar::jlmod::{comparison_suite, jl_p, typedim_check, TorusClassFunction};
use glnchar::{GroupContext, MultChar};

fn main() -> glnchar::Result<()> {
    let ctx = GroupContext::get(3, 2)?;
    let f = TorusClassFunction::from_char(&MultChar::new(2, 3, 1)?);
    let jl = jl_p(&ctx, &f)?;
    for i in jl.support_indices() {
        println!("{:<22} {}", ctx.classes()[i].to_string(), jl.value(i));
    }
    for v in comparison_suite(3, 2)? {
        println!("comparison at e = {}: {}", v.inputs["e"], if v.pass { "pass" } else { "FAIL" });
    }
    let t = typedim_check(3, 2)?;
    println!("type dimension {} (pass: {})", t.expected, t.pass);
    Ok(())
}
