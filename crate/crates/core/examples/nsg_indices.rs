//! Closed-form graph indices of an NSG, checked against the brute-force
//! definitions on the realized graph.
//!
//! ```bash
//! cargo run --example nsg_indices -- 1,2,2,1,7,1
//! ```

use std::time::Instant;

use nsgraph::indices::{fast, oracle, GraphIndices};
use nsgraph::CompactCreationSequence;

fn main() -> nsgraph::Result<()> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1,1,1,1,7,1".into());
    let a: CompactCreationSequence = arg.parse()?;

    let started = Instant::now();
    let quick = fast::indices(&a);
    let fast_time = started.elapsed();

    let started = Instant::now();
    let slow = oracle::indices(&a.to_graph())?;
    let oracle_time = started.elapsed();

    println!("{:<10} {:>14} {:>14}", "index", "fast", "oracle");
    let (f, o) = (quick.significant(6), slow.significant(6));
    for (name, (x, y)) in GraphIndices::NAMES.iter().zip(f.iter().zip(&o)) {
        println!("{name:<10} {x:>14} {y:>14}");
    }
    println!("fast {fast_time:?}, oracle {oracle_time:?}");

    // The closed forms stay cheap on graphs far too large for the oracle.
    let big = CompactCreationSequence::new(vec![1_000; 200])?;
    let started = Instant::now();
    let (w, sz, copi) = (fast::wiener(&big), fast::szeged(&big), fast::copi(&big));
    println!(
        "n = {}: W = {w}, Sz = {sz}, CoPI = {copi} in {:?}",
        big.order(),
        started.elapsed()
    );
    Ok(())
}
