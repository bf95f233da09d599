//! Ranked versus non-ranked: symmetry, two-level, 2-Gorenstein.
use liplab::{fixtures, geometry, triangulation};

fn main() {
    for p in [fixtures::wedge3(), fixtures::ranked9(), fixtures::non_ranked()] {
        let g = triangulation::genfun_stat(&p, Default::default());
        println!(
            "{:?}: ranked {} h* {g} symmetric {} centrally symmetric {} two-level {} 2-Gorenstein {}",
            p.covers(),
            p.is_ranked_hat(),
            g.is_symmetric_about(g.degree().unwrap_or(0)),
            geometry::symmetry_center(&geometry::vertices(&p)).is_some(),
            geometry::is_two_level(&p).is_ok(),
            geometry::gorenstein2_check(&p).unwrap(),
        );
    }
}
