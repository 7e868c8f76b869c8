//! The three neighbourhoods the annealer moves through.
//!
//! ```bash
//! cargo run --example perturbations -- 1,4
//! ```

use nsgraph::anneal::{edge_positions, hamming_positions, neighbors, Scheme};
use nsgraph::CompactCreationSequence;

fn main() -> nsgraph::Result<()> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "2,2,3,1,1,2".into());
    let a: CompactCreationSequence = arg.parse()?;
    let c = a.to_creation_sequence();
    println!("state {a} (bits {})", c.full_bits());
    println!("hamming positions {:?}", hamming_positions(&c));
    println!("edge positions    {:?}", edge_positions(&c));

    for scheme in Scheme::ALL {
        let list = neighbors(scheme, &a);
        println!("\n{scheme}: {} neighbours", list.len());
        for b in list {
            println!("  {b:<24} edges {}", b.to_graph().edge_count());
        }
    }
    Ok(())
}
