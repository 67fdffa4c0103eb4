//! Steering the emission order of the split enumerator.
//!
//! The clique vertices are tried in increasing sigma rank, so permuting
//! sigma permutes the output order — the family itself never changes.

use domenum::classify::split_partition;
use domenum::graph::path_graph;
use domenum::io::format_set;
use domenum::split_enum::{dominant_split, EnumerationOrder};
use domenum::stream::VertexSetStream;

fn run(order: EnumerationOrder) -> Vec<String> {
    let g = path_graph(4); // split: clique {1,2}, stable {0,3}
    let p = split_partition(&g).unwrap();
    let mut family = Vec::new();
    let mut sink = VertexSetStream::new(&mut family);
    dominant_split(&g, &p, &order, &mut sink).unwrap();
    family.iter().map(format_set).collect()
}

fn main() {
    let forward = run(EnumerationOrder::identity(4));
    let backward = run(EnumerationOrder::from_sequence(vec![3, 2, 1, 0]).unwrap());
    println!("identity order: {forward:?}");
    println!("reversed order: {backward:?}");

    let mut a = forward.clone();
    let mut b = backward.clone();
    a.sort();
    b.sort();
    assert_eq!(a, b);
    assert_ne!(forward, backward);
    println!("same family, different emission order");
}
