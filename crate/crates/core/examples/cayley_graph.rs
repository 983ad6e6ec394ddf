//! The adjacency graph on a representative list and a BFS spanning tree,
//! written as Graphviz DOT.
//!
//!     cargo run --example cayley_graph -- 6 > g6.dot && dot -Tsvg g6.dot > g6.svg

use fundom::cayley::build_graph;
use fundom::cosets::theta0;
use fundom::Level;

fn main() -> fundom::Result<()> {
    let n: i64 = std::env::args().nth(1).map_or(Ok(6), |s| s.parse()).expect("N must be an integer");
    let list = theta0(Level::new(n)?).verified()?;
    let graph = build_graph(&list)?;
    let tree = graph.spanning_tree(graph.default_root());

    eprintln!(
        "{} vertices, {} edges, connected: {}, tree depth {} from {}",
        graph.len(),
        graph.edges().len(),
        graph.is_connected(),
        tree.depth(),
        graph.word(tree.root())
    );
    print!("{}", graph.to_dot(Some(&tree), false));
    Ok(())
}
