//! c-sorting words and Coxeter-sortable elements.

use qcatalan::qseries::Family;
use qcatalan::signedperm::SignedPerm;
use qcatalan::sortable::{avoids_231, c_sorting_word, enumerate_sortables, standard_c_word};

fn main() -> qcatalan::Result<()> {
    let c = standard_c_word(Family::A, 3);
    for w in SignedPerm::all(Family::A, 3) {
        let word = c_sorting_word(&w, &c, Family::A)?;
        let mark = if word.is_decreasing() {
            "sortable"
        } else {
            "-"
        };
        println!("{w}  {word:<12} {mark}");
    }

    let c4 = standard_c_word(Family::A, 4);
    let sortables = enumerate_sortables(Family::A, 4, &c4)?;
    assert!(sortables.iter().all(avoids_231));
    println!(
        "\n{} sortable elements in S_4, all 231-avoiding",
        sortables.len()
    );

    let v: SignedPerm = "[1,-2,-6,5,4,3]".parse()?;
    let cb = standard_c_word(Family::B, 6);
    println!("{v}: {}", c_sorting_word(&v, &cb, Family::B)?);
    Ok(())
}
