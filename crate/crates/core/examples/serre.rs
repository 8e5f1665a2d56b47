use glnchar::jlmod::serre_weights;

fn main() -> glnchar::Result<()> {
    let w = serre_weights(2, 3, 2)?;
    for s in w.weights.iter().take(10) {
        println!("{s}");
    }
    println!("... {} weights, {} semisimple classes", w.weights.len(), w.semisimple_classes);
    for (n, p, f0) in [(2, 5, 1), (3, 2, 1), (3, 3, 1)] {
        let w = serre_weights(n, p, f0)?;
        println!("(n, p, f0) = ({n}, {p}, {f0}): counts match {}", w.count_matches());
    }
    Ok(())
}
