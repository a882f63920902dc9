//! Non-crossing elements below a Coxeter element, as permutations and as
//! set partitions, and the type D_4 comparison.

use qcatalan::noncrossing::{
    d4_counterexample, nc_elements, perm_to_partition_b, rev_nc_polynomial,
};
use qcatalan::qseries::Family;
use qcatalan::qseries::GroupType;
use qcatalan::rootposets::cat_q;
use qcatalan::signedperm::{coxeter_element, CoxeterVariant};

fn main() -> qcatalan::Result<()> {
    let c = coxeter_element(Family::B, 2, CoxeterVariant::Ascending).element;
    println!("NC(B_2) below c = {c}:");
    for w in nc_elements(Family::B, &c)? {
        println!("  {w:<10} {}", perm_to_partition_b(&w));
    }
    println!(
        "sum over rev(NC) of q^l_S: {}",
        rev_nc_polynomial(Family::B, &c)?
    );

    let report = d4_counterexample()?;
    println!("\nCat(D_4;q) = {}", cat_q(GroupType::d(4))?);
    println!(
        "{} Coxeter elements, all differ: {}",
        report.nc_cases.len(),
        report.holds()
    );
    if let Some(case) = report.nc_cases.first() {
        println!("e.g. c = {}: {}", case.coxeter, case.polynomial);
    }
    Ok(())
}
