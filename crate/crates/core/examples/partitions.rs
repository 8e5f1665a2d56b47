use glnchar::partitions::{green_polynomial, kostka_matrix, partitions, sn_character, Partition};

fn main() -> glnchar::Result<()> {
    let ps = partitions(4);
    println!("partitions of 4: {ps:?}");
    print!("{}", kostka_matrix(4)?.to_csv());
    println!("inverse:");
    print!("{}", kostka_matrix(4)?.inverse_to_csv());

    println!("character table of S_4:");
    for l in &ps {
        let row: Vec<i64> = ps.iter().map(|r| sn_character(l, r).unwrap()).collect();
        println!("  {l:>10} {row:?}");
    }

    let col: Partition = "1,1,1".parse()?;
    for q in [2, 3, 4] {
        let g = green_polynomial(&col, &Partition::single_row(3), q)?;
        println!("Q^(1,1,1)_(3)({q}) = {g}");
    }
    Ok(())
}
