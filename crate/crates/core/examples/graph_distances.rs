//! Walk and spectral distances between graphs read from edge lists.
//!
//! ```bash
//! cargo run --example graph_distances -- fixtures/c4.txt fixtures/k5.txt
//! ```

use std::path::PathBuf;

use nsgraph::distance::{scaled_walk_matrix, spectral_distance, walk_distance};
use nsgraph::io::read_edge_list;

fn main() -> nsgraph::Result<()> {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut args = std::env::args().skip(1).map(PathBuf::from);
    let first = args.next().unwrap_or_else(|| fixtures.join("c4.txt"));
    let second = args
        .next()
        .unwrap_or_else(|| fixtures.join("c4_relabeled.txt"));

    let g1 = read_edge_list(&first)?.graph;
    let g2 = read_edge_list(&second)?.graph;

    let w = scaled_walk_matrix(&g1)?;
    println!(
        "scaled walk matrix of {} (row = vertex, column = walk length):",
        first.display()
    );
    for v in 0..w.order() {
        let row: Vec<String> = (0..w.order())
            .map(|i| format!("{:.3}", w.get(v, i)))
            .collect();
        println!("  {}", row.join(" "));
    }

    println!("spectral distance  {:.6}", spectral_distance(&g1, &g2)?);
    match walk_distance(&g1, &g2) {
        Ok(d) => println!("walk distance      {d:.6}"),
        Err(e) => println!("walk distance      unavailable: {e}"),
    }
    Ok(())
}
