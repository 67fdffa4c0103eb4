//! Hypergraph dualization through a co-bipartite domination instance.
//!
//! The incidence construction puts the ground set on one clique, one vertex
//! per hyperedge on a second clique (plus an apex), and joins each edge
//! vertex to its members. Minimal dominating sets of that graph restricted
//! to ground-only sets are exactly the minimal transversals — and at most
//! (|V|+1)·|E| leftovers carry a vertex from the edge clique, so the filter
//! discards only polynomially many.

use domenum::hypergraph::Hypergraph;
use domenum::io::format_set;
use domenum::oracles::SubsetOracle;
use domenum::reductions::{cobipartite_incidence, filter_bdom_to_transversals};
use domenum::set::VertexSet;
use domenum::stream::VertexSetStream;

fn main() {
    let edge = |m: &[usize]| VertexSet::from_members(m.iter().copied(), 4).unwrap();
    let h = Hypergraph::new(
        4,
        vec![
            edge(&[0, 1]),
            edge(&[0, 1, 2]),
            edge(&[0, 2, 3]),
            edge(&[1, 3]),
            edge(&[2, 3]),
            edge(&[1, 3]),
        ],
    )
    .unwrap();

    let (b, labels) = cobipartite_incidence(&h).unwrap();
    println!(
        "B(H): {} vertices ({} ground + {} edge vertices + apex), {} edges",
        b.n(),
        labels.ground_count(),
        labels.edge_count(),
        b.m()
    );

    let oracle = SubsetOracle::new();
    let dom = oracle.minimal_dominating_sets(&b).unwrap();
    let total = dom.len();

    let mut transversals = Vec::new();
    let mut sink = VertexSetStream::new(&mut transversals);
    let dropped = filter_bdom_to_transversals(&h, dom, &mut sink).unwrap();
    println!(
        "{} dominating sets, {} kept as transversals, {} dropped",
        total,
        transversals.len(),
        dropped
    );
    assert!(dropped <= (h.ground_size() + 1) * h.edge_count());

    transversals.sort();
    for t in &transversals {
        println!("  {{{}}}", format_set(t));
    }

    let mut expected = oracle.minimal_transversals(&h).unwrap();
    expected.sort();
    assert_eq!(transversals, expected);
    println!("matches tr(H).");
}
