//! Exact arithmetic with roots of unity.
use glnchar::cyclotomics::{field_op, Cyclotomic, FieldOp};

fn main() {
    let z3 = Cyclotomic::root_of_unity(3, 1);
    let z8 = Cyclotomic::root_of_unity(8, 1);
    println!("ζ_3 + ζ_3² = {}", &z3 + &Cyclotomic::root_of_unity(3, 2));
    println!("ζ_6 = {}", Cyclotomic::root_of_unity(6, 1));
    let sqrt2 = &z8 + &z8.galois(-1).unwrap();
    println!("ζ_8 + ζ_8⁻¹ = {sqrt2}, squared = {}", &sqrt2 * &sqrt2);
    let q = field_op(&Cyclotomic::one(), &(&Cyclotomic::one() + &z3), FieldOp::Div).unwrap();
    println!("1 / (1 + ζ_3) = {q}");
    println!("norm of 1 + ζ_8 = {}", (&Cyclotomic::one() + &z8).norm());
    println!("as JSON: {}", serde_json::to_string(&q).unwrap());
}
