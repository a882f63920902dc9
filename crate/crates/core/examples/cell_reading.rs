//! Dyck paths to sortable elements by reading labelled cells.

use qcatalan::bijmaps::{psi_a, psi_b, psi_b_inverse_table};
use qcatalan::paths::{area_b, enumerate_b};
use qcatalan::qseries::Family;
use qcatalan::signedperm::length_s;

fn main() -> qcatalan::Result<()> {
    let (sigma, word) = psi_a(&"NNNNEEENNEEE".parse()?)?;
    println!("A: NNNNEEENNEEE -> {word} = {sigma}");
    let (sigma, word) = psi_b(&"NNNNEEENNNNE".parse()?)?;
    println!("B: NNNNEEENNNNE -> {word} = {sigma}");

    println!();
    for d in enumerate_b(2) {
        let (s, w) = psi_b(&d)?;
        println!(
            "{d}  area {}  ->  {s:<8} l_S {}  word {w}",
            area_b(&d),
            length_s(&s, Family::B)?
        );
    }

    let table = psi_b_inverse_table(3)?;
    let back = &table[&"[-1,-2,-3]".parse()?];
    println!("\npsi_B^-1([-1,-2,-3]) = {back}");
    Ok(())
}
