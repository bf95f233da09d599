//! For rooted trees stat and ides both give the Eulerian polynomial.
use liplab::perm::eulerian_polynomial;
use liplab::triangulation::{genfun_ides, genfun_stat, DcOptions};
use liplab::{fixtures, geometry};

fn main() {
    for n in 2..=6 {
        let p = fixtures::short_rooted_tree(n);
        let v = geometry::vertices(&p);
        let cube = v
            .points()
            .iter()
            .filter(|x| geometry::transform_t(&p, x).unwrap().iter().all(|&c| c == 0 || c == 1))
            .count();
        println!(
            "n={n} stat {} ides {} A_n {}, {cube} of {} vertices map into the cube",
            genfun_stat(&p, DcOptions::default()),
            genfun_ides(&p, DcOptions::default()),
            eulerian_polynomial(n),
            v.len(),
        );
    }
}
