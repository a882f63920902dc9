//! q-integers, Gaussian binomials and the q-Catalan product formula.

use qcatalan::qseries::{cat_number, q_binomial, qcat_a, qcat_product, CoxeterType, GroupType};

fn main() -> qcatalan::Result<()> {
    for n in 1..=5 {
        let p = qcat_a(n);
        println!("q-Cat_{n}(q) = {p}");
        println!(
            "    at q=1: {}, palindromic: {}",
            p.eval_one(),
            p.is_palindromic((n * (n - 1)) as i64)
        );
    }

    // type B: the product formula equals the Gaussian binomial in q^2
    for n in 1..=4 {
        let t = GroupType::b(n);
        let prod = qcat_product(t)?;
        assert_eq!(prod, q_binomial(2 * n, n)?.dilate(2));
        println!("q-Cat(B_{n};q) = {prod}");
    }

    println!();
    for (name, t) in [
        ("A_3", CoxeterType::from(GroupType::a(3))),
        ("D_4", CoxeterType::from(GroupType::d(4))),
        ("H_3", CoxeterType::H3),
        ("F_4", CoxeterType::F4),
        ("E_8", CoxeterType::E8),
    ] {
        println!("Cat({name}) = {}", cat_number(t));
    }
    Ok(())
}
