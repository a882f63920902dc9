//! Signed permutations: Coxeter length, descents, cycle notation and
//! absolute length.

use qcatalan::qseries::Family;
use qcatalan::signedperm::{
    coxeter_element, des_set, imaj, length_s, length_t, length_t_typed, maj, rev, to_cycles,
    CoxeterVariant, SignedPerm,
};

fn main() -> qcatalan::Result<()> {
    let w: SignedPerm = "[4,2,-6,5,1,3]".parse()?;
    println!("w        = {w}");
    println!("cycles   = {}", to_cycles(&w));
    println!("l_S      = {}", length_s(&w, Family::B)?);
    println!("l_T      = {}", length_t(&w));
    println!("Des      = {:?}", des_set(&w, Family::B)?);
    println!(
        "maj/imaj = {}/{}",
        maj(&w, Family::B)?,
        imaj(&w, Family::B)?
    );
    println!("rev(w)   = {}", rev(&w));

    for family in [Family::A, Family::B, Family::D] {
        let c = coxeter_element(family, 4, CoxeterVariant::Ascending);
        println!(
            "{family:?}: c = {} = {}, l_T(c) = {}",
            c.element,
            to_cycles(&c.element),
            length_t_typed(&c.element, family)?
        );
    }
    Ok(())
}
