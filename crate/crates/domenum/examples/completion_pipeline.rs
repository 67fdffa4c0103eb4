//! From a chordal graph without long induced paths to a split instance.
//!
//! Completion adds a clique on the redundant vertices and provably keeps the
//! minimal dominating sets. For a P6-free chordal graph the result is a
//! split graph, so the linear-delay enumerator applies to the whole class.

use domenum::classify::{is_chordal, is_split, split_partition};
use domenum::completion::{classify_redundancy, completion_graph};
use domenum::graph::Graph;
use domenum::io::format_set;
use domenum::oracles::SubsetOracle;
use domenum::split_enum::{dominant_split, EnumerationOrder};
use domenum::stream::VertexSetStream;

fn main() {
    // a caterpillar: spine 0-1-2-3-4 with legs 5,6 on the middle — the two
    // spine ends form a 2K2, so this tree is not split on its own
    let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (2, 6)]).unwrap();
    assert!(is_chordal(&g) && !is_split(&g));

    let labeling = classify_redundancy(&g);
    println!(
        "irredundant {{{}}}, redundant {{{}}}",
        format_set(&labeling.irredundant),
        format_set(&labeling.redundant)
    );

    let gco = completion_graph(&g);
    let added: Vec<_> = gco.edges().filter(|&(u, v)| !g.has_edge(u, v)).collect();
    println!("completion adds {} edge(s):", added.len());
    for (u, v) in added {
        println!("  {}-{}", u + 1, v + 1);
    }
    assert!(is_split(&gco));

    let p = split_partition(&gco).unwrap();
    let mut family = Vec::new();
    let mut sink = VertexSetStream::new(&mut family);
    dominant_split(&gco, &p, &EnumerationOrder::identity(gco.n()), &mut sink).unwrap();
    family.sort();

    let mut expected = SubsetOracle::new().minimal_dominating_sets(&g).unwrap();
    expected.sort();
    assert_eq!(family, expected);

    println!(
        "split enumeration on the completion = D(G): {} sets",
        family.len()
    );
    for s in &family {
        println!("  {{{}}}", format_set(s));
    }
}
