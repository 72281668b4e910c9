//! For J(2k+1, k, (k+1)/2) the automorphism group is the symmetric group
//! on n+1 points, one more than the ground set. A permutation of the
//! extended set {0,..,n} acts on a k-subset S of {1,..,n} by mapping the
//! (k+1)-set S' = (S-1) ∪ {n}: if the image of S' contains n the result is
//! the rest of it; otherwise its complement in {0,..,n-1}. Either way a
//! k-subset comes back (shifted to 1-based labels).

use symbreak::autsearch::is_automorphism;
use symbreak::families::{
    factorial, generalized_johnson, johnson_aut_order, sym_np1_automorphism, sym_np1_image,
    JohnsonParams,
};
use symbreak::perm::Perm;
use symbreak::Result;

fn main() -> Result<()> {
    let params = JohnsonParams::new(7, 3, 2)?;
    let g = generalized_johnson(&params)?;
    println!(
        "J(7,3,2): {} vertices, {} edges, |Aut| = {} = 8!",
        g.n(),
        g.edge_count(),
        johnson_aut_order(&params)
    );
    assert_eq!(johnson_aut_order(&params), factorial(8));

    // A permutation of the 8-point extended set, cycle form (0 1 7)(2 3 4)(5 6).
    let sigma = Perm::from_cycles(8, &[&[0, 1, 7], &[2, 3, 4], &[5, 6]])?;
    println!("sigma = {}", sigma.cycle_notation());
    for subset in [vec![1, 2, 3], vec![3, 4, 5], vec![1, 6, 7]] {
        let image = sym_np1_image(&sigma, &subset, &params)?;
        println!("  {subset:?} -> {image:?}");
    }

    // The induced vertex permutation really is an automorphism of the graph.
    let induced = sym_np1_automorphism(&sigma, &params)?;
    println!(
        "induced vertex permutation has order {} and {} cycles",
        induced.order(),
        induced.raw_cycle_count()
    );
    assert!(is_automorphism(&g, &induced)?);
    println!("is_automorphism: confirmed");

    // The same construction works for every permutation of the extended set.
    let rotation = Perm::from_cycles(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]])?;
    assert!(is_automorphism(&g, &sym_np1_automorphism(&rotation, &params)?)?);
    println!("full 8-cycle on the extended set: confirmed as well");
    Ok(())
}
