//! Descent-compatible permutations and their alcoves.
use liplab::triangulation::{enumerate_dc, stat, stat_pairs, DcOptions};
use liplab::fixtures;

fn main() {
    let p = fixtures::ranked9();
    let dc = enumerate_dc(&p, DcOptions::jobs(4));
    println!("|DC(P)| = {}", dc.len());
    for a in dc.iter().take(5) {
        println!("tau={} q={:?} stat={} pairs={:?}", a.tau(), a.q().values(), stat(a), stat_pairs(a));
    }
}
