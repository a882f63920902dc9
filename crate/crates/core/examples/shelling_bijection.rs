//! The shelling bijection from non-nesting to reversed non-crossing
//! partitions, on worked examples and exhaustively.

use qcatalan::bijmaps::{phi, shells, verify_phi_theorems};
use qcatalan::qseries::{Family, GroupType};
use qcatalan::rootposets::{ideal_from_generators, ideal_maj, lift_delta, Root};
use qcatalan::signedperm::{imaj, length_s, maj, to_cycles};

fn main() -> qcatalan::Result<()> {
    let gens: Vec<Root> = ["e4-e1", "e5-e2", "e6-e3", "e7-e5", "e9-e7"]
        .iter()
        .map(|s| s.parse())
        .collect::<qcatalan::Result<_>>()?;
    let ideal = ideal_from_generators(GroupType::a(8), &gens)?;
    for (depth, shell) in shells(&ideal)?.iter().enumerate() {
        println!("shell {depth}: {shell}");
    }
    let sigma = phi(&ideal)?;
    println!("phi(I) = {} = {sigma}", to_cycles(&sigma));
    println!(
        "|I| = {}, l_S = {}, maj(I) + maj + imaj = {} + {} + {}",
        ideal.len(),
        length_s(&sigma, Family::A)?,
        ideal_maj(&ideal)?,
        maj(&sigma, Family::A)?,
        imaj(&sigma, Family::A)?
    );
    println!("phi(lift) = {}", phi(&lift_delta(&ideal)?)?);

    for n in 2..=5 {
        let r = verify_phi_theorems(Family::B, n)?;
        println!(
            "B_{n}: {} ideals checked, {} failures",
            r.checked,
            r.failures.len()
        );
    }
    Ok(())
}
