//! Counts non-equivalent distinguishing colorings: phi_k uses exactly k
//! colors, Phi_k uses at most k. Above the threshold every orbit of
//! colorings is free, so phi_k has a closed form; below it we enumerate.

use num_bigint::BigUint;
use symbreak::distinguishing::{phi_k, phi_le_k, theta, PhiLeMode, PhiMode};
use symbreak::families::{complete, cycle, path, petersen};
use symbreak::graph::Graph;
use symbreak::Result;

fn table(g: &Graph, label: &str, kmax: usize) -> Result<()> {
    let threshold = theta(g)?.theta;
    println!("{label}: threshold {threshold}");
    println!("  {:>2} {:>12} {:>12}", "k", "phi_k", "Phi_k");
    for k in 1..=kmax {
        let mode = if k >= threshold {
            PhiMode::Formula
        } else {
            PhiMode::Brute
        };
        let exact = phi_k(g, k, mode)?;
        let upto = phi_le_k(g, k, PhiLeMode::FormulaSum)?;
        println!("  {k:>2} {exact:>12} {upto:>12}");
    }
    println!();
    Ok(())
}

fn main() -> Result<()> {
    table(&cycle(6)?, "C_6", 6)?;
    table(&path(4)?, "P_4", 6)?;
    table(&complete(4)?, "K_4", 6)?;
    table(&petersen(), "Petersen", 4)?;

    // Closed forms for whole families.
    println!("P_n with at most k colors: (k^n - k^ceil(n/2)) / 2");
    for n in 2..=6 {
        let g = path(n)?;
        for k in 2..=4usize {
            let computed = phi_le_k(&g, k, PhiLeMode::FormulaSum)?;
            let formula =
                (BigUint::from(k).pow(n as u32) - BigUint::from(k).pow(n.div_ceil(2) as u32))
                    / 2u32;
            assert_eq!(computed, formula);
        }
        println!("  P_{n}: agrees for k = 2..4");
    }
    println!("K_n with at most k colors: binomial(k, n)");
    for n in 2..=5 {
        let g = complete(n)?;
        for k in 1..=7usize {
            let computed = phi_le_k(&g, k, PhiLeMode::FormulaSum)?;
            assert_eq!(computed, symbreak::families::binomial(k, n));
        }
        println!("  K_{n}: agrees for k = 1..7");
    }
    Ok(())
}
