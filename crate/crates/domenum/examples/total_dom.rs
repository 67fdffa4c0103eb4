//! Minimal total dominating sets: every vertex needs a neighbour in the set,
//! itself included — the transversals of the open neighbourhoods.

use domenum::graph::{path_graph, Graph};
use domenum::io::format_set;
use domenum::oracles::SubsetOracle;
use domenum::stream::collect_stream;
use domenum::trans_enum::{dom_enum, tdom_enum};

fn main() {
    let g = path_graph(6);

    let mut plain = collect_stream(|sink| dom_enum(&g, sink)).unwrap();
    let mut total = collect_stream(|sink| tdom_enum(&g, sink)).unwrap();
    plain.sort();
    total.sort();

    println!(
        "P6: {} minimal dominating, {} minimal total dominating",
        plain.len(),
        total.len()
    );
    for t in &total {
        // a total dominating set is dominating but not necessarily minimal
        // among the dominating sets, and vice versa
        let also_plain_minimal = plain.contains(t);
        println!(
            "  {{{}}}{}",
            format_set(t),
            if also_plain_minimal {
                ""
            } else {
                "  (not minimal as a plain dominating set)"
            }
        );
    }

    let mut expected = SubsetOracle::new()
        .minimal_total_dominating_sets(&g)
        .unwrap();
    expected.sort();
    assert_eq!(total, expected);

    // an isolated vertex has an empty open neighbourhood: nothing can
    // dominate it totally, and the enumerator says so instead of looping
    let lonely = Graph::from_edges(3, &[(0, 1)]).unwrap();
    match collect_stream(|sink| tdom_enum(&lonely, sink)) {
        Err(e) => println!("graph with an isolated vertex: {e}"),
        Ok(_) => unreachable!(),
    }
}
