//! Tabulates the symmetry-breaking invariants of paths, cycles, complete
//! graphs, and complete bipartite graphs, next to their closed forms.

use symbreak::distinguishing::{distinguishing_number, theta};
use symbreak::families::{complete, complete_bipartite, cycle, path};
use symbreak::graph::Graph;
use symbreak::perm::DEFAULT_GROUP_CAP;
use symbreak::Result;

fn aut_order(g: &Graph) -> Result<usize> {
    let mut group = symbreak::autsearch::automorphism_generators(g, None);
    group.close(DEFAULT_GROUP_CAP)?;
    Ok(group.order().expect("group is closed"))
}

fn row(label: &str, g: &Graph, expected_theta: usize) -> Result<()> {
    let t = theta(g)?;
    let d = distinguishing_number(g)?;
    let aut = aut_order(g)?;
    let mark = if t.theta == expected_theta { "ok" } else { "MISMATCH" };
    println!(
        "{label:<10} {:>3} {:>8} {:>3} {:>6} {:>8} {mark:>9}",
        g.n(),
        aut,
        d,
        t.theta,
        expected_theta,
    );
    Ok(())
}

fn main() -> Result<()> {
    println!(
        "{:<10} {:>3} {:>8} {:>3} {:>6} {:>8} {:>9}",
        "graph", "n", "|Aut|", "D", "theta", "formula", ""
    );
    for n in 2..=10 {
        row(&format!("P_{n}"), &path(n)?, n.div_ceil(2) + 1)?;
    }
    for n in 3..=10 {
        row(&format!("C_{n}"), &cycle(n)?, n / 2 + 2)?;
    }
    for n in 2..=7 {
        row(&format!("K_{n}"), &complete(n)?, n)?;
    }
    for (m, n) in [(1, 3), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4)] {
        row(&format!("K_{{{m},{n}}}"), &complete_bipartite(m, n)?, m + n)?;
    }
    Ok(())
}
