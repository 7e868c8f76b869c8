//! Eigenvalues of an NSG from its small quotient matrix plus the known
//! multiplicities of -1 and 0, compared with a full eigensolve.
//!
//! ```bash
//! cargo run --example nsg_spectrum
//! ```

use nsgraph::indices::{fast, oracle};
use nsgraph::{CompactCreationSequence, QuotientMatrix};

fn main() -> nsgraph::Result<()> {
    let a: CompactCreationSequence = "2,2,3,1,1,2".parse()?;
    let q = QuotientMatrix::new(&a);
    println!("quotient matrix of {a}:");
    for i in 0..q.dim() {
        println!("  {:?}", q.row(i));
    }

    let parts = fast::NsgSpectrum::new(&a);
    println!("main eigenvalues   {:.6?}", parts.main);
    println!("-1 multiplicity    {}", parts.minus_one);
    println!(" 0 multiplicity    {}", parts.zero);

    let quick = parts.to_spectrum();
    let full = oracle::spectrum(&a.to_graph());
    println!(
        "max deviation from full eigensolve: {:.2e}",
        quick.max_deviation(&full)?
    );
    println!(
        "EE = {:.6}, GE = {:.6}, RE = {:.6}",
        parts.estrada(),
        parts.gutman(),
        parts.resolvent()
    );
    Ok(())
}
