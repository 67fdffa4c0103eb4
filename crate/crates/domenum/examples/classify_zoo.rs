//! Class probes on a small zoo of graphs: split partitions and their
//! obstructions, chordality certificates, induced P6s, co-bipartiteness.

use domenum::classify::{
    chordality, find_induced_p6, find_split_obstruction, is_cobipartite, split_partition,
    Chordality,
};
use domenum::graph::{complete_graph, cycle_graph, path_graph, Graph};
use domenum::io::format_set;

fn inspect(name: &str, g: &Graph) {
    println!("{name} (n={}, m={})", g.n(), g.m());
    match split_partition(g) {
        Ok(p) => println!(
            "  split: clique {{{}}} / stable {{{}}}",
            format_set(p.clique()),
            format_set(p.independent())
        ),
        Err(_) => {
            let witness = find_split_obstruction(g).expect("non-split graphs have a witness");
            println!("  not split: {witness} (0-based ids)");
        }
    }
    match chordality(g) {
        Chordality::Chordal { peo } => println!(
            "  chordal, elimination order {:?}",
            peo.iter().map(|v| v + 1).collect::<Vec<_>>()
        ),
        Chordality::NotChordal { hole } => println!(
            "  not chordal, hole {:?}",
            hole.iter().map(|v| v + 1).collect::<Vec<_>>()
        ),
    }
    match find_induced_p6(g) {
        Some(path) => println!(
            "  induced P6: {:?}",
            path.iter().map(|v| v + 1).collect::<Vec<_>>()
        ),
        None => println!("  P6-free"),
    }
    println!("  co-bipartite: {}", is_cobipartite(g));
}

fn main() {
    inspect("P4", &path_graph(4));
    inspect("C4", &cycle_graph(4));
    inspect("C6", &cycle_graph(6));
    inspect("P7", &path_graph(7));
    inspect("K5", &complete_graph(5));
    // a split graph that is not complete: triangle with two pendants
    let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]).unwrap();
    inspect("triangle+pendants", &g);
}
