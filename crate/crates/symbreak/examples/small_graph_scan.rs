//! Exhaustively checks every graph on up to `nmax` vertices (labelled, so
//! 2^binomial(n,2) graphs per n) against the invariant laws: bounds between
//! the distinguishing number, the threshold, and n; characterizations of
//! theta = 1, 2, and D; witness orders; and the motion bound.
//!
//! Usage: small_graph_scan [nmax]   (default 5, maximum 7)

use symbreak::verify::scan_small_graphs;

fn main() -> symbreak::Result<()> {
    let nmax: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("nmax must be a small integer"))
        .unwrap_or(5);
    let report = scan_small_graphs(nmax)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    if report.passed() {
        println!("all {} graphs satisfy every law", report.tested);
    } else {
        println!("VIOLATIONS: {}", report.violations);
    }
    Ok(())
}
