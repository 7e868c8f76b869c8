//! Reading and writing plain-text edge lists.
//!
//! ```bash
//! cargo run --example edge_list_io
//! ```

use nsgraph::io::{parse_edge_list, write_edge_list};
use nsgraph::CompactCreationSequence;

fn main() -> nsgraph::Result<()> {
    let text = "\
# a path with arbitrary labels, one duplicate and one isolated vertex
alpha beta
beta gamma
gamma beta
delta
";
    let list = parse_edge_list(text)?;
    println!("labels      {:?}", list.labels);
    println!("edges       {:?}", list.graph.edges().collect::<Vec<_>>());
    for d in &list.duplicates {
        println!("duplicate   line {}: {} {}", d.line, d.u, d.v);
    }

    for bad in ["0 0\n", "0 1 2\n", "# nothing\n"] {
        println!(
            "{:<12}-> {}",
            format!("{bad:?}"),
            parse_edge_list(bad).unwrap_err()
        );
    }

    let g = "1,1,1,1,7,1".parse::<CompactCreationSequence>()?.to_graph();
    let written = write_edge_list(&g);
    print!("\n{written}");
    assert_eq!(parse_edge_list(&written)?.graph, g);
    Ok(())
}
