//! Computes the threshold of a disjoint union from its connected
//! components, and confirms each composition rule against direct
//! enumeration on the assembled graph. Three regimes apply: every
//! component symmetric, every component asymmetric, or a mix (which has
//! one exceptional branch).

use symbreak::distinguishing::theta;
use symbreak::families::{
    complete, cycle, fixtures, kneser, union_theta_with_case, UnionCase, UnionSpec,
};
use symbreak::graph::{disjoint_union, Graph};
use symbreak::Result;

fn show(label: &str, parts: Vec<Graph>, enumerate: bool) -> Result<()> {
    let spec = UnionSpec::from_graphs(parts.clone());
    let (t, case) = union_theta_with_case(&spec)?;
    print!("{label:<28} composed theta = {t:<3} via {case:?}");
    if enumerate {
        let whole = disjoint_union(&parts)?;
        let direct = theta(&whole)?.theta;
        assert_eq!(t, direct);
        print!("  (direct enumeration agrees)");
    }
    println!();
    Ok(())
}

fn main() -> Result<()> {
    let asym = fixtures::asym6();

    // Every component symmetric.
    show("K_3 + C_4", vec![complete(3)?, cycle(4)?], true)?;
    show("C_5 + C_5", vec![cycle(5)?, cycle(5)?], true)?;

    // Every component asymmetric: two isomorphic copies force a swap;
    // pairwise non-isomorphic copies leave the union asymmetric.
    show("asym6 + asym6", vec![asym.clone(), asym.clone()], true)?;
    show(
        "asym6 + its complement",
        vec![asym.clone(), asym.complement()],
        true,
    )?;

    // Mixed, ordinary branch.
    show("K_3 + asym6", vec![complete(3)?, asym.clone()], true)?;

    // Mixed, exceptional branch: the asymmetric side is so small that
    // breaking the symmetric side already separates it.
    show("C_5 + K_1", vec![cycle(5)?, complete(1)?], true)?;

    // A union too symmetric to enumerate directly: the Kneser graph of
    // 3-subsets of a 6-set is a perfect matching on 20 vertices.
    let matching = kneser(6, 3)?;
    let parts: Vec<Graph> = matching
        .connected_components()
        .iter()
        .map(|comp| matching.induced_subgraph(comp))
        .collect::<Result<_>>()?;
    println!(
        "Kneser(6,3) splits into {} components of size 2",
        parts.len()
    );
    let (t, case) = union_theta_with_case(&UnionSpec::from_graphs(parts))?;
    println!("ten disjoint edges           composed theta = {t:<3} via {case:?}");
    assert!(matches!(case, UnionCase::AllSymmetric));
    assert_eq!(t, 20);
    Ok(())
}
