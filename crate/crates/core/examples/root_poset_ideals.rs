//! Order ideals in root posets and their Dyck paths.

use qcatalan::qseries::GroupType;
use qcatalan::rootposets::{
    cat_q, ideal_to_arc_partition_a, ideal_to_dyck_a, ideals, maximal_elements, root_poset,
    OrderIdeal,
};

fn main() -> qcatalan::Result<()> {
    let b3 = root_poset(GroupType::b(3));
    println!("B_3 positive roots by height:");
    for r in &b3.roots {
        println!("  {r}");
    }

    for t in [GroupType::a(3), GroupType::b(3), GroupType::d(4)] {
        println!("{t}: {} ideals, Cat(W;q) = {}", ideals(t)?.len(), cat_q(t)?);
    }

    let ideal = OrderIdeal::parse(
        GroupType::a(7),
        "e2-e1 e3-e2 e4-e3 e5-e4 e6-e5 e7-e6 e8-e7 e3-e1 e7-e5 e8-e6",
    )?;
    println!("\nideal     {ideal}");
    println!(
        "maximal   {:?}",
        maximal_elements(&ideal)
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!("path      {}", ideal_to_dyck_a(&ideal)?);
    println!("partition {}", ideal_to_arc_partition_a(&ideal)?);
    Ok(())
}
