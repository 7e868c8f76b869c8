//! Converting between the three encodings of a connected nested split graph
//! and realizing it as an adjacency structure.
//!
//! ```bash
//! cargo run --example creation_sequences
//! ```

use nsgraph::{CompactCreationSequence, CreationSequence};

fn main() -> nsgraph::Result<()> {
    let a: CompactCreationSequence = "2,2,3,1,1,2".parse()?;
    let c = a.to_creation_sequence();
    println!("compact            {a}");
    println!("full bits          {}", c.full_bits());
    println!("minimum            {}", c.minimum_representation());
    println!("vertices / cells   {} / {}", a.order(), a.cell_count());

    let back = CreationSequence::from_minimum_representation("011000101")?;
    assert_eq!(back.to_compact(), a);

    // Degenerate cell lists collapse to a canonical form.
    for raw in [&[0, 5][..], &[2, 2, 0, 1, 1, 2], &[1, 2, 1, 0]] {
        match CompactCreationSequence::normalize(raw) {
            Ok(b) => println!("normalize {raw:?} -> {b}"),
            Err(e) => println!("normalize {raw:?} -> error: {e}"),
        }
    }

    let star: CompactCreationSequence = "3,1".parse()?;
    let g = star.to_graph();
    println!("star K1,3 edges    {:?}", g.edges().collect::<Vec<_>>());

    // Any relabelled NSG can be recognized back into a sequence.
    let perm: Vec<usize> = (0..g.order()).rev().collect();
    let recovered = CreationSequence::recognize(&g.relabel(&perm)).expect("an NSG");
    println!("recognized         {}", recovered.to_compact());
    Ok(())
}
