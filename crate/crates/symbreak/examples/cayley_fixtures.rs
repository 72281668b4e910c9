//! Builds Cayley graphs from multiplication tables — vertices are group
//! elements, g adjacent to h when g·h⁻¹ lies in the connection set — and
//! reports their symmetry-breaking invariants, including the cycle
//! structure of a threshold witness.

use symbreak::distinguishing::{distinguishing_number, motion, theta};
use symbreak::families::{cayley, GroupTable};
use symbreak::graph::Graph;
use symbreak::perm::DEFAULT_GROUP_CAP;
use symbreak::Result;

fn report(label: &str, g: &Graph) -> Result<()> {
    let mut group = symbreak::autsearch::automorphism_generators(g, None);
    group.close(DEFAULT_GROUP_CAP)?;
    let aut = group.order().expect("group is closed");
    let t = theta(g)?;
    println!("{label}");
    println!("  n = {}, edges = {}, |Aut| = {aut}", g.n(), g.edge_count());
    println!("  distinguishing number {}", distinguishing_number(g)?);
    println!("  motion {}", motion(g)?.motion);
    println!("  threshold {}", t.theta);
    if let (Some(w), Some(order)) = (&t.witness, t.witness_order) {
        println!(
            "  witness {} — order {order}, {} cycles",
            w.cycle_notation(),
            w.raw_cycle_count()
        );
    }
    println!();
    Ok(())
}

fn main() -> Result<()> {
    // Z_2 x Z_3 with half the non-identity elements connected.
    let z6 = GroupTable::cyclic(2)?.direct_product(&GroupTable::cyclic(3)?)?;
    report("Cayley(Z_2 x Z_3, {1,2,3})", &cayley(&z6, &[1, 2, 3])?)?;

    // Sym(4) generated by the adjacent transpositions: a connected cubic
    // graph on 24 vertices whose threshold meets the motion bound with
    // room to spare.
    let (s4, perms) = GroupTable::symmetric(4)?;
    let connection: Vec<usize> = [[0usize, 1], [1, 2], [2, 3]]
        .iter()
        .map(|&[a, b]| {
            perms
                .iter()
                .position(|p| {
                    p.apply(a) == b && p.apply(b) == a && p.moved_points().len() == 2
                })
                .expect("transposition is present")
        })
        .collect();
    report(
        "Cayley(Sym(4), adjacent transpositions)",
        &cayley(&s4, &connection)?,
    )?;
    Ok(())
}
