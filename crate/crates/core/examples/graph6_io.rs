//! Reading graph6 from stdin (or a built-in sample) and writing it back in
//! canonical labelling alongside a JSON edge list.
//!
//! Run with `echo 'DQc' | cargo run --example graph6_io -- -`.

use std::io;

use bookgraph::{canon, edge_list, graph6};

const SAMPLE: &str = "C~\nDQc\nE?~o\nIheA@GUAo\n";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = if std::env::args().nth(1).as_deref() == Some("-") {
        graph6::read_all(io::stdin().lock())?
    } else {
        graph6::read_all(SAMPLE.as_bytes())?
    };
    for g in &graphs {
        let canonical = if g.n() <= canon::MAX_VERTICES {
            graph6::encode(&canon::canonical_graph(g)?)
        } else {
            "-".to_string()
        };
        println!("{:<16} canonical {:<16} {}", graph6::encode(g), canonical, edge_list::to_json(g));
    }
    Ok(())
}
