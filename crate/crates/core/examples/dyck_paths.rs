//! Dyck paths of types A and B with their area and major index.

use qcatalan::paths::{
    area_b, area_polynomial, cells_b, enumerate_b, maj_b, maj_polynomial, neg_b, split_lower_upper,
    steps_to_string, DyckWordB,
};
use qcatalan::qseries::Family;

fn main() -> qcatalan::Result<()> {
    println!("type B paths of length 2:");
    for d in enumerate_b(2) {
        println!(
            "  {d}  area={}  maj={}  neg={}",
            area_b(&d),
            maj_b(&d),
            neg_b(&d)
        );
    }

    let d: DyckWordB = "NNNNEEENNNNE".parse()?;
    let (lower, upper) = split_lower_upper(&d);
    println!("\n{d} has {} cells: {:?}", cells_b(&d).len(), cells_b(&d));
    println!("lower part {lower}, upper part {}", steps_to_string(&upper));

    for n in 1..=5 {
        println!(
            "n={n}  area: {}\n     maj:  {}",
            area_polynomial(Family::B, n)?,
            maj_polynomial(Family::B, n)?
        );
    }
    Ok(())
}
