//! Minimal transversals and the double-dualization identity tr(tr(H)) = H.

use domenum::hypergraph::Hypergraph;
use domenum::io::format_set;
use domenum::set::VertexSet;
use domenum::stream::{collect_stream, VertexSetStream};
use domenum::trans_enum::trans_enum;

fn edge(members: &[usize], ground: usize) -> VertexSet {
    VertexSet::from_members(members.iter().copied(), ground).unwrap()
}

fn main() {
    // six edges over four vertices, duplicates and nested edges included
    let h = Hypergraph::new(
        4,
        vec![
            edge(&[0, 1], 4),
            edge(&[0, 1, 2], 4),
            edge(&[0, 2, 3], 4),
            edge(&[1, 3], 4),
            edge(&[2, 3], 4),
            edge(&[1, 3], 4),
        ],
    )
    .unwrap();

    println!(
        "H has {} edges over {} vertices:",
        h.edge_count(),
        h.ground_size()
    );
    for e in h.edges() {
        println!("  {{{}}}", format_set(e));
    }

    let tr = collect_stream(|sink| trans_enum(&h, sink)).unwrap();
    println!("tr(H) — every minimal transversal:");
    for t in &tr {
        println!("  {{{}}}", format_set(t));
    }

    // dualize again: the result is Min(H), the inclusion-minimal edges of H
    let dual = Hypergraph::new(4, tr).unwrap();
    let back = collect_stream(|sink| trans_enum(&dual, sink)).unwrap();
    println!("tr(tr(H)):");
    for t in &back {
        println!("  {{{}}}", format_set(t));
    }

    let mut min_h = h.minimize().edges().to_vec();
    min_h.sort();
    let mut back_sorted = back;
    back_sorted.sort();
    assert_eq!(min_h, back_sorted);
    println!("tr(tr(H)) = Min(H) holds.");

    // delay accounting works here too
    let mut edges_out = Vec::new();
    let mut sink = VertexSetStream::new(&mut edges_out);
    trans_enum(&h, &mut sink).unwrap();
    let stats = sink.stats();
    println!(
        "{} transversals, max delay {} counted ops",
        stats.emissions, stats.max_delay
    );
}
