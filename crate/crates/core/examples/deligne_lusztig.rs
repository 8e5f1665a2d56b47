use glnchar::classfun::table_csv;
use glnchar::dlcox::{cuspidal, rw_full, steinberg, CoxeterChar};
use glnchar::GroupContext;

fn main() -> glnchar::Result<()> {
    let ctx = GroupContext::get(2, 5)?;
    let st = steinberg(&ctx);
    let mut cols = vec![("St".to_string(), st)];
    for e in [0, 1, 6, 8] {
        let spec = CoxeterChar::from_exponent(2, 5, e)?;
        cols.push((format!("R_w(χ_{e})"), rw_full(&spec)?));
        if let Ok(c) = cuspidal(&spec) {
            cols.push((format!("cusp(χ_{e})"), c));
        }
    }
    let named: Vec<(&str, &_)> = cols.iter().map(|(n, f)| (n.as_str(), f)).collect();
    print!("{}", table_csv(&named)?);
    for (n, f) in &cols {
        println!("‖{n}‖² = {}", f.inner_product(f)?);
    }
    Ok(())
}
