//! Cross-validation harness in miniature: the fast enumerators against the
//! exhaustive subset-lattice oracle on a batch of random graphs.
//!
//! The oracle walks all 2^n subsets, so it is the ground truth and the
//! bottleneck; it refuses anything past its cap rather than run for hours.

use rand::{Rng, SeedableRng};

use domenum::gen;
use domenum::oracles::SubsetOracle;
use domenum::stream::collect_stream;
use domenum::trans_enum::dom_enum;

fn main() {
    let oracle = SubsetOracle::new();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);

    let mut checked = 0usize;
    let mut largest_family = 0usize;
    for round in 0..200 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.1..0.9);
        let g = gen::gnp(&mut rng, n, p);

        let mut fast = collect_stream(|sink| dom_enum(&g, sink)).unwrap();
        fast.sort();
        let mut slow = oracle.minimal_dominating_sets(&g).unwrap();
        slow.sort();
        assert_eq!(fast, slow, "disagreement on round {round}: {g:?}");

        checked += 1;
        largest_family = largest_family.max(fast.len());
    }
    println!(
        "{checked} random graphs agree with the oracle (largest family: {largest_family} sets)"
    );

    // the cap in action
    let big = gen::gnp(&mut rng, 40, 0.3);
    match SubsetOracle::with_cap(20).minimal_dominating_sets(&big) {
        Err(e) => println!("oracle at n=40: {e}"),
        Ok(_) => unreachable!(),
    }
}
