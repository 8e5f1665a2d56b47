use glnchar::nilstrata::{jordan_partition, stratum_compare, NilpotentOp};
use glnchar::partitions::partitions;
use serde_json::json;

fn main() -> glnchar::Result<()> {
    let op = NilpotentOp::from_json(&json!([[0, 2, 1, 0], [0, 0, 0, 0], [0, 0, 0, 3], [0, 0, 0, 0]]))?;
    println!("kernel dims {:?}, Jordan type {}", op.kernel_dims(), jordan_partition(&op));
    let modp = NilpotentOp::from_json(&json!({"p": 3, "matrix": [[0, 3, 1], [0, 0, 0], [0, 0, 0]]}))?;
    println!("mod 3: Jordan type {}", jordan_partition(&modp));
    for p in partitions(4) {
        println!("in the closure of the {p} stratum: {}", stratum_compare(&op, &p)?);
    }
    let g = vec![vec![1, 1, 0, 0], vec![0, 1, 0, 0], vec![2, 0, 1, 0], vec![0, 0, 1, 1]];
    println!("after conjugation: {}", jordan_partition(&op.conjugate_by(&g)?));
    Ok(())
}
